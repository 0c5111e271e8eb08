//! Irreducible representations of `G ≅ (G₀ × μ₂ₘ)/{±(I, 1)}` with
//! `G₀ ≅ SL2(F5)`.
//!
//! An irreducible of `G` is a pair (irreducible `Λ₀` of `G₀`, character
//! `ζ ↦ ζ^a` of `μ₂ₘ`) subject to `Λ₀(-I) = (-1)^a`. Central characters are
//! tracked as exponents `a mod 2m`, never as complex numbers. Characters of
//! `G` are exactly the pairs `(U, a)` with `a` even, so twisting moves the
//! exponent by an even amount and leaves the base alone.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::chartab::{Decomposition, IrrepName};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::Table;

/// `m ≥ 1`; the center of `G` is cyclic of order `2m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CenterParam(u32);

impl CenterParam {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("center parameter m must be at least 1".into()));
        }
        Ok(CenterParam(m))
    }

    pub fn m(self) -> u32 {
        self.0
    }

    /// Order of the center, `2m`.
    pub fn modulus(self) -> u32 {
        2 * self.0
    }

    /// Order of `G`.
    pub fn group_order(self) -> u64 {
        120 * u64::from(self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct IcoIrrep {
    pub base: IrrepName,
    /// `a mod 2m`.
    pub exponent: u32,
}

impl IcoIrrep {
    /// Reduces `exponent` mod `2m` and enforces the parity constraint.
    pub fn new(base: IrrepName, exponent: i64, m: CenterParam) -> Result<Self> {
        let exponent = exponent.rem_euclid(i64::from(m.modulus())) as u32;
        let r = IcoIrrep { base, exponent };
        r.check(m)?;
        Ok(r)
    }

    pub fn check(&self, m: CenterParam) -> Result<()> {
        if self.exponent >= m.modulus() || (self.exponent % 2 == 1) != self.base.is_odd() {
            return Err(Error::Parity {
                base: self.base.to_string(),
                exponent: self.exponent,
                m: m.m(),
            });
        }
        Ok(())
    }

    pub fn dim(&self) -> u32 {
        self.base.dim()
    }
}

impl fmt::Display for IcoIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.base, self.exponent)
    }
}

/// A representation of `G` as a multiset of irreducibles.
#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize)]
pub struct IcoDecomposition(BTreeMap<IcoIrrep, u32>);

impl IcoDecomposition {
    pub fn add(&mut self, r: IcoIrrep, mult: u32) {
        if mult > 0 {
            *self.0.entry(r).or_insert(0) += mult;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (IcoIrrep, u32)> + '_ {
        self.0.iter().map(|(&r, &k)| (r, k))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_irreducible(&self) -> bool {
        self.0.len() == 1 && self.0.values().all(|&k| k == 1)
    }

    /// The single irreducible, if there is exactly one with multiplicity one.
    pub fn as_irreducible(&self) -> Option<IcoIrrep> {
        self.is_irreducible().then(|| *self.0.keys().next().unwrap())
    }

    /// Restriction to `G₀`.
    pub fn restrict(&self) -> Decomposition {
        Decomposition::from_pairs(self.iter().map(|(r, k)| (r.base, k)))
    }

    /// Sum of squared multiplicities.
    pub fn norm_squared(&self) -> u32 {
        self.0.values().map(|k| k * k).sum()
    }
}

impl fmt::Display for IcoDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(r, k)| if k == 1 { r.to_string() } else { format!("{k}·{r}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Every irreducible of `G`, ordered by base then exponent.
pub fn classify_irreps(m: CenterParam) -> Vec<IcoIrrep> {
    IrrepName::ALL
        .into_iter()
        .flat_map(|base| {
            (0..m.modulus())
                .filter(move |a| (a % 2 == 1) == base.is_odd())
                .map(move |exponent| IcoIrrep { base, exponent })
        })
        .collect()
}

/// Two irreducibles differ by a character of `G` iff their restrictions to
/// `G₀` agree; the twisting character is `(U, a₂ - a₁)`.
pub fn twist_equivalent(r1: &IcoIrrep, r2: &IcoIrrep, m: CenterParam) -> Result<bool> {
    r1.check(m)?;
    r2.check(m)?;
    Ok(r1.base == r2.base)
}

/// The character `(U, a₂ - a₁)` with `r2 ≅ r1 ⊗ χ`, if one exists.
pub fn twisting_character(r1: &IcoIrrep, r2: &IcoIrrep, m: CenterParam) -> Result<Option<IcoIrrep>> {
    if !twist_equivalent(r1, r2, m)? {
        return Ok(None);
    }
    let diff = i64::from(r2.exponent) - i64::from(r1.exponent);
    IcoIrrep::new(IrrepName::U, diff, m).map(Some)
}

/// The dual of `(Λ₀, a)` is `(Λ₀^∨, -a)`; every `Λ₀` is self-dual here, so
/// self-duality reduces to `2a ≡ 0 mod 2m`.
pub fn is_self_dual(table: &Table, r: &IcoIrrep, m: CenterParam) -> Result<bool> {
    r.check(m)?;
    let row = table.row(r.base);
    let base_self_dual = table.dual_char(row) == *row;
    Ok(base_self_dual && (2 * r.exponent).is_multiple_of(m.modulus()))
}

fn attach_exponent(d: &Decomposition, exponent: i64, m: CenterParam) -> Result<IcoDecomposition> {
    let mut out = IcoDecomposition::default();
    for (base, k) in d.iter() {
        out.add(IcoIrrep::new(base, exponent, m)?, k);
    }
    Ok(out)
}

/// `sym^n(Λ₀, a) = (sym^n Λ₀, n·a)`, decomposed over `G₀`.
pub fn sym_power_ico(table: &Table, r: &IcoIrrep, n: u32, m: CenterParam) -> Result<IcoDecomposition> {
    r.check(m)?;
    let chi = table.sym_power_char(r.base, n)?;
    let d = table.decompose(&chi)?;
    attach_exponent(&d, i64::from(n) * i64::from(r.exponent), m)
}

/// `(Λ₀, a) ⊗ (Λ₀', a') = (Λ₀ ⊗ Λ₀', a + a')`.
pub fn tensor_ico(table: &Table, r1: &IcoIrrep, r2: &IcoIrrep, m: CenterParam) -> Result<IcoDecomposition> {
    r1.check(m)?;
    r2.check(m)?;
    let d = table.decompose(&(table.row(r1.base) * table.row(r2.base)))?;
    attach_exponent(&d, i64::from(r1.exponent) + i64::from(r2.exponent), m)
}

/// Multiplicity of the trivial `G₀`-constituent in `sym^n(X')`.
///
/// For the full group the corresponding constituent is `(U, n·a)`, i.e. the
/// `n/2`-th power of the determinant; the parity constraint forces `n` even.
pub fn character_constituents_of_sym(table: &Table, n: u32) -> Result<u32> {
    let chi = table.sym_power_char(IrrepName::RHO_ICO, n)?;
    let ip = table.inner_product(&chi, table.trivial());
    ip.to_integer()
        .and_then(|k| u32::try_from(k).ok())
        .ok_or_else(|| Error::Internal(format!("non-integral multiplicity {ip} at n = {n}")))
}

/// `(n, multiplicity)` for `n = 0..=max`.
pub fn trivial_constituent_scan(table: &Table, max: u32) -> Result<Vec<(u32, u32)>> {
    (0..=max)
        .map(|n| character_constituents_of_sym(table, n).map(|k| (n, k)))
        .collect()
}

/// Machine-readable row of the classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepRecord {
    pub base: IrrepName,
    pub exponent: u32,
    pub dim: u32,
    pub self_dual: bool,
    /// Index of the base in table order; twist classes are keyed by base.
    pub twist_class: usize,
}

pub fn irrep_records(table: &Table, m: CenterParam) -> Result<Vec<IrrepRecord>> {
    classify_irreps(m)
        .into_iter()
        .map(|r| {
            Ok(IrrepRecord {
                base: r.base,
                exponent: r.exponent,
                dim: r.dim(),
                self_dual: is_self_dual(table, &r, m)?,
                twist_class: r.base.index(),
            })
        })
        .collect()
}

/// The nine twist-class generators built from `Λ = (X', a)` and
/// `Λ' = (X'', a')`.
pub fn twist_class_generators(
    table: &Table,
    lambda: &IcoIrrep,
    lambda_conj: &IcoIrrep,
    m: CenterParam,
) -> Result<Vec<(&'static str, IcoDecomposition)>> {
    let mut trivial = IcoDecomposition::default();
    trivial.add(IcoIrrep::new(IrrepName::U, 0, m)?, 1);
    let single = |r: &IcoIrrep| {
        let mut d = IcoDecomposition::default();
        d.add(*r, 1);
        d
    };
    Ok(vec![
        ("1", trivial),
        ("Λ", single(lambda)),
        ("Λ'", single(lambda_conj)),
        ("sym^2 Λ", sym_power_ico(table, lambda, 2, m)?),
        ("sym^2 Λ'", sym_power_ico(table, lambda_conj, 2, m)?),
        ("sym^3 Λ", sym_power_ico(table, lambda, 3, m)?),
        ("sym^4 Λ", sym_power_ico(table, lambda, 4, m)?),
        ("sym^5 Λ", sym_power_ico(table, lambda, 5, m)?),
        ("Λ ⊗ Λ'", tensor_ico(table, lambda, lambda_conj, m)?),
    ])
}

/// Checks that every irreducible of `G` is a twist of exactly one of the
/// nine generators, and the listed twist equivalences among symmetric
/// powers and tensor products.
pub fn verify_twist_classes(table: &Table, m: CenterParam) -> Result<Report> {
    let mut report = Report::new(format!("twist classes for m = {}", m.m()));
    let lambda = IcoIrrep::new(IrrepName::XPrime, 1, m)?;
    // A different odd exponent for the conjugate, to exercise the twists.
    let lambda_conj = IcoIrrep::new(IrrepName::XDoublePrime, i64::from(m.modulus()) - 1, m)?;

    let generators = twist_class_generators(table, &lambda, &lambda_conj, m)?;
    let mut gen_irreps = Vec::new();
    for (label, d) in &generators {
        match d.as_irreducible() {
            Some(r) => gen_irreps.push((*label, r)),
            None => report.check(format!("{label} irreducible"), false, d.to_string()),
        }
    }
    let bases: BTreeSet<IrrepName> = gen_irreps.iter().map(|(_, r)| r.base).collect();
    report.check(
        "generators are pairwise not twist equivalent",
        bases.len() == 9 && gen_irreps.len() == 9,
        format!(
            "bases {}",
            gen_irreps
                .iter()
                .map(|(l, r)| format!("{l} -> {}", r.base))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    );

    let all = classify_irreps(m);
    let mut unmatched = Vec::new();
    let mut classes: BTreeMap<IrrepName, usize> = BTreeMap::new();
    for r in &all {
        let mut hits = 0;
        for (_, g) in &gen_irreps {
            if twist_equivalent(r, g, m)? {
                hits += 1;
                *classes.entry(g.base).or_insert(0) += 1;
            }
        }
        if hits != 1 {
            unmatched.push(format!("{r} matches {hits} generators"));
        }
    }
    report.check(
        "each irreducible is a twist of exactly one generator",
        unmatched.is_empty(),
        if unmatched.is_empty() {
            format!("{} irreducibles in {} twist classes", all.len(), classes.len())
        } else {
            unmatched.join("; ")
        },
    );
    report.check(
        "count is 9m",
        all.len() as u32 == 9 * m.m() && classes.len() == 9,
        format!("{} irreducibles", all.len()),
    );
    let dim_sq: u64 = all.iter().map(|r| u64::from(r.dim() * r.dim())).sum();
    report.check(
        "sum of squared dimensions is |G|",
        dim_sq == m.group_order(),
        format!("{dim_sq} vs {}", m.group_order()),
    );

    let sym = |r: &IcoIrrep, n| sym_power_ico(table, r, n, m);
    let tensor = |a: &IcoDecomposition, b: &IcoIrrep| -> Result<IcoDecomposition> {
        let a = a
            .as_irreducible()
            .ok_or_else(|| Error::Internal(format!("{a} not irreducible")))?;
        tensor_ico(table, &a, b, m)
    };
    let relations: Vec<(&str, IcoDecomposition, IcoDecomposition)> = vec![
        ("sym^3 Λ ~ sym^3 Λ'", sym(&lambda, 3)?, sym(&lambda_conj, 3)?),
        ("sym^4 Λ ~ sym^4 Λ'", sym(&lambda, 4)?, sym(&lambda_conj, 4)?),
        ("sym^5 Λ ~ sym^5 Λ'", sym(&lambda, 5)?, sym(&lambda_conj, 5)?),
        (
            "sym^5 Λ ~ Λ' ⊗ sym^2 Λ",
            sym(&lambda, 5)?,
            tensor(&sym(&lambda, 2)?, &lambda_conj)?,
        ),
        (
            "sym^5 Λ ~ Λ ⊗ sym^2 Λ'",
            sym(&lambda, 5)?,
            tensor(&sym(&lambda_conj, 2)?, &lambda)?,
        ),
    ];
    for (label, lhs, rhs) in relations {
        let ok = match (lhs.as_irreducible(), rhs.as_irreducible()) {
            (Some(a), Some(b)) => twisting_character(&a, &b, m)?.is_some(),
            _ => false,
        };
        report.check(label, ok, format!("{lhs} vs {rhs}"));
    }
    Ok(report)
}

/// Both readings of the statement about self-dual 2-dimensional
/// irreducibles, evaluated for a given `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfDualityReadings {
    pub m: u32,
    /// All self-dual 2-dimensional irreducibles of `G`.
    pub self_dual_two_dim: Vec<IcoIrrep>,
    /// Whether the twist class of `(X', a)` contains a self-dual member.
    pub standard_twist_class_has_self_dual: bool,
    /// "For even m, Λ and Λ' are not twist equivalent to a self-dual
    /// representation."
    pub even_m_reading_holds: bool,
    /// "There is no self-dual 2-dimensional irreducible", taken for all m.
    pub unconditional_reading_holds: bool,
}

pub fn self_duality_readings(table: &Table, m: CenterParam) -> Result<SelfDualityReadings> {
    let mut self_dual_two_dim = Vec::new();
    for r in classify_irreps(m).into_iter().filter(|r| r.dim() == 2) {
        if is_self_dual(table, &r, m)? {
            self_dual_two_dim.push(r);
        }
    }
    let standard_twist_class_has_self_dual = self_dual_two_dim
        .iter()
        .any(|r| r.base == IrrepName::XPrime);
    Ok(SelfDualityReadings {
        m: m.m(),
        even_m_reading_holds: m.m() % 2 == 1 || !standard_twist_class_has_self_dual,
        unconditional_reading_holds: self_dual_two_dim.is_empty(),
        self_dual_two_dim,
        standard_twist_class_has_self_dual,
    })
}
