//! Landau–Siegel bookkeeping for `L(s, sym^m(π) ⊗ χ)` with `π`
//! icosahedral: the auxiliary sum `Π = 1 ⊞ sym^m(π)⊗χ ⊞ Ad(π)`, the
//! exponent of the target factor in `L(s, Π × Π)` against the pole order,
//! and a per-constituent dispatch of `sym^m(π) ⊗ χ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::chartab::IrrepName;
use crate::error::{Error, Result};
use crate::icostruct::{tensor_ico, CenterParam, IcoDecomposition, IcoIrrep};
use crate::isobaric::{
    sym_power_generators, CharSymbol, Constituent, Context, CuspType, Engine, Fact, IsobaricExpr, Truth,
};
use crate::report::Report;
use crate::{ClassFn, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleKind {
    Character,
    Gl2Cusp,
    SymSquare,
    /// Exponent count on the auxiliary sum for `sym^m`, `m ∈ {3, 4, 5}`.
    AuxiliarySquare,
    TensorConjugates,
    NonSelfDual,
    SelfDualOverQ,
}

/// One row of the dispatch table.
#[derive(Clone, Debug, Serialize)]
pub struct Rule {
    pub kind: RuleKind,
    pub applies_to: &'static str,
    pub conclusion: &'static str,
    pub citation: &'static str,
}

pub const RULES: [Rule; 7] = [
    Rule {
        kind: RuleKind::Character,
        applies_to: "a character Q",
        conclusion: "no Landau–Siegel zero unless Q is trivial or quadratic",
        citation: "Hoffstein–Ramakrishnan (1995)",
    },
    Rule {
        kind: RuleKind::Gl2Cusp,
        applies_to: "a twist of a cusp form on GL(2)",
        conclusion: "no Landau–Siegel zero",
        citation: "Hoffstein–Ramakrishnan (1995)",
    },
    Rule {
        kind: RuleKind::SymSquare,
        applies_to: "a twist of sym²",
        conclusion: "no Landau–Siegel zero; a self-dual twist has trivial or quadratic central character",
        citation: "Hoffstein–Ramakrishnan (1995); Banks (1997)",
    },
    Rule {
        kind: RuleKind::AuxiliarySquare,
        applies_to: "a twist of sym^m, m = 3, 4, 5",
        conclusion: "no Landau–Siegel zero, since the target exponent k exceeds the pole order r",
        citation: "Hoffstein–Ramakrishnan (1995), exponent criterion",
    },
    Rule {
        kind: RuleKind::TensorConjugates,
        applies_to: "a twist of π ⊠ π^τ",
        conclusion: "no Landau–Siegel zero, as π and π^τ are not dihedral and not twist equivalent",
        citation: "Ramakrishnan–Wang (2001); Ramakrishnan (2000)",
    },
    Rule {
        kind: RuleKind::NonSelfDual,
        applies_to: "a non-self-dual representation",
        conclusion: "no Landau–Siegel zero",
        citation: "Hoffstein–Ramakrishnan (1995)",
    },
    Rule {
        kind: RuleKind::SelfDualOverQ,
        applies_to: "sym⁴(π) with π self-dual over Q",
        conclusion: "no Landau–Siegel zero (recorded, not derived)",
        citation: "Ramakrishnan–Wang (2001)",
    },
];

pub fn rule(kind: RuleKind) -> &'static Rule {
    RULES.iter().find(|r| r.kind == kind).unwrap()
}

/// The rule for a twist of the generator restricting to `base`.
pub fn rule_for_base(base: IrrepName) -> RuleKind {
    use IrrepName::*;
    match base {
        U => RuleKind::Character,
        XPrime | XDoublePrime => RuleKind::Gl2Cusp,
        WPrime | WDoublePrime => RuleKind::SymSquare,
        X1 | V | W => RuleKind::AuxiliarySquare,
        X2 => RuleKind::TensorConjugates,
    }
}

/// An L-function in a factorization: a standard one, or a Rankin–Selberg
/// product kept unexpanded.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LFactor {
    Single(Constituent),
    Pair(Constituent, Constituent),
}

impl LFactor {
    pub fn degree(&self) -> u64 {
        match self {
            LFactor::Single(c) => c.degree(),
            LFactor::Pair(a, b) => a.degree() * b.degree(),
        }
    }
}

impl fmt::Display for LFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LFactor::Single(c) => write!(f, "L({c})"),
            LFactor::Pair(a, b) => write!(f, "L({a} × {b})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LFactorization {
    pub factors: Vec<(LFactor, u32)>,
    pub target: LFactor,
}

impl LFactorization {
    pub fn exponent(&self, f: &LFactor) -> u32 {
        self.factors
            .iter()
            .find(|(g, _)| g == f)
            .map_or(0, |(_, e)| *e)
    }

    pub fn target_exponent(&self) -> u32 {
        self.exponent(&self.target)
    }

    /// `Σ exponent · degree`.
    pub fn total_degree(&self) -> u64 {
        self.factors
            .iter()
            .map(|(f, e)| f.degree() * u64::from(*e))
            .sum()
    }
}

impl fmt::Display for LFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" · "))
    }
}

/// `Π = 1 ⊞ sym^m(π)⊗χ ⊞ Ad(π)` with the status of its hypotheses.
#[derive(Clone, Debug, Serialize)]
pub struct Auxiliary {
    pub m: u32,
    pub expr: IsobaricExpr,
    pub target: Constituent,
    pub hypotheses: Vec<(String, Truth)>,
}

impl Auxiliary {
    pub fn covered(&self) -> bool {
        self.hypotheses.iter().all(|(_, t)| *t == Truth::Known(true))
    }
}

/// Automorphy of `sym^n(π)`: declared, implied by cuspidality, or known
/// for every `n` when `π` is icosahedral (each is an isobaric sum of
/// twists of automorphic generators) and for `n ≤ 4` otherwise.
pub fn is_automorphic(engine: &Engine, c: &Constituent) -> Result<Truth> {
    if let Some(v) = engine.ctx.ledger().get(&Fact::automorphic(c)) {
        return Ok(Truth::Known(v));
    }
    if engine.is_cuspidal(&c.atom)? == Truth::Known(true) {
        return Ok(Truth::Known(true));
    }
    if let Some((f, n)) = c.atom.single() {
        let kind = &engine.ctx.form(f)?.kind;
        if *kind == CuspType::Icosahedral || n <= 4 {
            return Ok(Truth::Known(true));
        }
    }
    Ok(Truth::unknown(Fact::automorphic(c)))
}

pub fn build_auxiliary(ctx: &Context, table: &Table, m: u32, p: &str, chi: &CharSymbol) -> Result<Auxiliary> {
    if m == 2 {
        return Err(Error::InvalidArgument(
            "m = 2 is handled by the symmetric-square rule, not the auxiliary sum".into(),
        ));
    }
    if m < 3 {
        return Err(Error::InvalidArgument(format!("auxiliary sum needs m ≥ 3, got {m}")));
    }
    if ctx.form(p)?.kind.is_dihedral() {
        return Err(Error::InvalidArgument(format!("{p} is dihedral")));
    }
    let engine = Engine::new(ctx, table);
    let target = ctx.sym(m, p)?.twisted(chi);
    let expr = IsobaricExpr::from_constituents([Constituent::one(), target.clone(), ctx.ad(p)?]);
    let hypotheses = vec![
        (format!("sym^{m}({p}) cuspidal"), engine.is_cuspidal(&target.atom)?),
        (format!("sym^{}({p}) automorphic", m + 2), is_automorphic(&engine, &ctx.sym(m + 2, p)?)?),
        (format!("sym^{}({p}) automorphic", m - 2), is_automorphic(&engine, &ctx.sym(m - 2, p)?)?),
    ];
    Ok(Auxiliary {
        m,
        expr,
        target,
        hypotheses,
    })
}

/// The nine ordered pairings of `L(s, Π × Π)`. Pairings of two distinct
/// non-trivial constituents are expanded; self-pairings are kept as
/// Rankin–Selberg factors.
pub fn expand_aux_square(ctx: &Context, table: &Table, m: u32, p: &str, chi: &CharSymbol) -> Result<LFactorization> {
    let aux = build_auxiliary(ctx, table, m, p, chi)?;
    let engine = Engine::new(ctx, table);
    let parts: Vec<Constituent> = aux.expr.iter().map(|(c, _)| c.clone()).collect();
    let mut acc: BTreeMap<LFactor, u32> = BTreeMap::new();
    for x in &parts {
        for y in &parts {
            let factors = if x.is_character() && x.twist.is_empty() {
                vec![LFactor::Single(y.clone())]
            } else if y.is_character() && y.twist.is_empty() {
                vec![LFactor::Single(x.clone())]
            } else if x == y {
                vec![LFactor::Pair(x.clone(), y.clone())]
            } else {
                engine
                    .rs_expand_constituents(x, y)?
                    .iter()
                    .flat_map(|(c, k)| std::iter::repeat_n(LFactor::Single(c.clone()), k as usize))
                    .collect()
            };
            for f in factors {
                *acc.entry(f).or_insert(0) += 1;
            }
        }
    }
    let out = LFactorization {
        factors: acc.into_iter().collect(),
        target: LFactor::Single(aux.target),
    };
    let want = aux.expr.degree().pow(2);
    if out.total_degree() != want {
        return Err(Error::Internal(format!(
            "factorization has total degree {} instead of {want}",
            out.total_degree()
        )));
    }
    Ok(out)
}

/// Target exponent `k`, pole order `r` and automorphy of the residual
/// factors for one value of `m`.
#[derive(Clone, Debug, Serialize)]
pub struct ExponentCheck {
    pub m: u32,
    pub factorization: String,
    pub k: u32,
    pub r: Option<u64>,
    pub residual_automorphic: bool,
    pub covered: bool,
}

impl ExponentCheck {
    pub fn passes(&self) -> bool {
        self.covered && self.residual_automorphic && self.r.is_some_and(|r| u64::from(self.k) > r)
    }
}

pub fn exponent_check(ctx: &Context, table: &Table, m: u32, p: &str, chi: &CharSymbol) -> Result<ExponentCheck> {
    let aux = build_auxiliary(ctx, table, m, p, chi)?;
    let fz = expand_aux_square(ctx, table, m, p, chi)?;
    let engine = Engine::new(ctx, table);
    let r = engine.pole_order(&aux.expr)?.value();
    let mut residual_automorphic = true;
    for (f, _) in &fz.factors {
        if *f == fz.target {
            continue;
        }
        let cs: Vec<&Constituent> = match f {
            LFactor::Single(c) => vec![c],
            LFactor::Pair(a, b) => vec![a, b],
        };
        for c in cs {
            if is_automorphic(&engine, c)?.known() != Some(true) {
                residual_automorphic = false;
            }
        }
    }
    Ok(ExponentCheck {
        m,
        factorization: fz.to_string(),
        k: fz.target_exponent(),
        r,
        residual_automorphic,
        covered: aux.covered(),
    })
}

fn restrict_factor(engine: &Engine, f: &LFactor) -> Result<ClassFn> {
    let r = |c: &Constituent| -> Result<ClassFn> {
        engine
            .galois_restriction(c)?
            .map(|r| r.character)
            .ok_or_else(|| Error::InvalidArgument(format!("{c} has no Galois restriction")))
    };
    Ok(match f {
        LFactor::Single(c) => r(c)?,
        LFactor::Pair(a, b) => &r(a)? * &r(b)?,
    })
}

fn multiplicity(table: &Table, f: &ClassFn, base: IrrepName) -> Result<i64> {
    table
        .inner_product(f, table.row(base))
        .to_integer()
        .ok_or_else(|| Error::Internal("non-integral multiplicity".into()))
}

/// Galois-side accounting of `L(s, Π × Π)` for icosahedral `π` and
/// `m ∈ {3, 4, 5}`: the factors restrict to `χ_Π²` exactly, the target
/// factor carries exponent 4, and with `χ` and `ω` tracked as central
/// exponents the target irreducible occurs exactly four times.
pub fn galois_exponent_check(table: &Table, m: u32) -> Result<Report> {
    if !(3..=5).contains(&m) {
        return Err(Error::InvalidArgument(format!("Galois check covers m = 3, 4, 5, got {m}")));
    }
    let mut report = Report::new(format!("Galois-side exponent accounting, m = {m}"));
    let mut ctx = Context::new();
    ctx.add_form("pi", CuspType::Icosahedral)?;
    let engine = Engine::new(&ctx, table);
    let fz = expand_aux_square(&ctx, table, m, "pi", &CharSymbol::trivial())?;

    let s = |n| table.sym_power_char(IrrepName::XPrime, n);
    let chi_pi = &(table.trivial() + &s(m)?) + &s(2)?;
    let square = &chi_pi * &chi_pi;
    let mut sum = ClassFn::zero();
    let target_base = table
        .decompose(&s(m)?)?
        .iter()
        .next()
        .map(|(b, _)| b)
        .ok_or_else(|| Error::Internal("empty symmetric power".into()))?;
    let mut breakdown = Vec::new();
    let mut from_target = 0;
    for (f, e) in &fz.factors {
        let rf = restrict_factor(&engine, f)?;
        let k = multiplicity(table, &rf, target_base)?;
        if *f == fz.target {
            from_target = k * i64::from(*e);
        } else if k > 0 {
            breakdown.push(format!("{f}^{e} contributes {}", k * i64::from(*e)));
        }
        sum = &sum + &rf.scale_int(i64::from(*e));
    }
    report.check("factors restrict to χ_Π² exactly", sum == square, fz.to_string());
    let total = multiplicity(table, &square, target_base)?;
    report.check(
        "target factor has exponent 4",
        from_target == 4 && fz.target_exponent() == 4,
        format!("⟨χ_Π², {target_base}⟩ = {total}: 4 from the target factor; {}", if breakdown.is_empty() {
            "no residual contributions".to_string()
        } else {
            breakdown.join(", ")
        }),
    );

    // Central exponents: center of order 24, Λ = (X', 1), ω = (U, 2), χ = (U, 2).
    let cp = CenterParam::new(12)?;
    let lambda = IcoIrrep::new(IrrepName::XPrime, 1, cp)?;
    let shift = |d: &IcoDecomposition, e: i64| -> Result<IcoDecomposition> {
        let mut out = IcoDecomposition::default();
        for (r, k) in d.iter() {
            out.add(IcoIrrep::new(r.base, i64::from(r.exponent) + e, cp)?, k);
        }
        Ok(out)
    };
    let mut pi_g = IcoDecomposition::default();
    pi_g.add(IcoIrrep::new(IrrepName::U, 0, cp)?, 1);
    let a = shift(&crate::icostruct::sym_power_ico(table, &lambda, m, cp)?, 2)?;
    let b = shift(&crate::icostruct::sym_power_ico(table, &lambda, 2, cp)?, -2)?;
    for (r, k) in a.iter().chain(b.iter()) {
        pi_g.add(r, k);
    }
    let target = IcoIrrep::new(target_base, i64::from(m) + 2, cp)?;
    let mut count = 0;
    for (x, kx) in pi_g.iter() {
        for (y, ky) in pi_g.iter() {
            let t = tensor_ico(table, &x, &y, cp)?;
            count += kx * ky * t.iter().filter(|(r, _)| *r == target).map(|(_, k)| k).sum::<u32>();
        }
    }
    // For m = 5 the residual sym⁷ ⊗ χω⁻¹ contains sym⁵ ⊗ χ itself.
    let expected = if m == 5 { 6 } else { 4 };
    report.check(
        "target multiplicity with central exponents tracked",
        count == expected,
        format!("{target} occurs {count} times in Π ⊗ Π"),
    );
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SiegelVerdict {
    NoSiegelZero,
    /// A trivial or quadratic character constituent cannot be excluded;
    /// there is then at most one Landau–Siegel zero.
    ExceptionalCase { q: String, q_alternative: String },
    NotCovered { reason: String },
}

impl fmt::Display for SiegelVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SiegelVerdict::NoSiegelZero => write!(f, "no-siegel-zero"),
            SiegelVerdict::ExceptionalCase { q, q_alternative } => {
                write!(f, "exceptional-case (Q = {q}; alternative form {q_alternative})")
            }
            SiegelVerdict::NotCovered { reason } => write!(f, "not-covered ({reason})"),
        }
    }
}

/// How one constituent of `sym^m(π) ⊗ χ` is handled.
#[derive(Clone, Debug, Serialize)]
pub struct Dispatch {
    pub base: IrrepName,
    pub multiplicity: u32,
    pub generator: String,
    pub rule: RuleKind,
    pub outcome: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SiegelReport {
    pub m: u32,
    pub target: String,
    /// Exponent of the target factor when `sym^m` is itself handled by the
    /// auxiliary sum.
    pub k: Option<u32>,
    pub r: Option<u64>,
    pub verdict: SiegelVerdict,
    pub constituents: Vec<Dispatch>,
    pub citations: Vec<String>,
}

/// A context with an icosahedral `pi`, its conjugate `pi^tau`, and a
/// character `chi` of the given order.
pub fn icosahedral_context(chi_order: Option<u32>) -> Result<Context> {
    let mut ctx = Context::new();
    ctx.add_form("pi", CuspType::Icosahedral)?;
    ctx.add_form("pi^tau", CuspType::Icosahedral)?;
    ctx.set_conjugates("pi", "pi^tau")?;
    ctx.add_char("chi", chi_order)?;
    Ok(ctx)
}

pub fn siegel_report(ctx: &Context, table: &Table, m: u32, p: &str, chi: &CharSymbol) -> Result<SiegelReport> {
    let form = ctx.form(p)?;
    if form.kind != CuspType::Icosahedral {
        return Err(Error::InvalidArgument(format!("{p} is not icosahedral")));
    }
    let engine = Engine::new(ctx, table);
    let target = ctx.sym(m, p)?.twisted(chi);
    let mut report = SiegelReport {
        m,
        target: format!("L(s, {target})"),
        k: None,
        r: None,
        verdict: SiegelVerdict::NoSiegelZero,
        constituents: Vec::new(),
        citations: Vec::new(),
    };
    let cite = |kind: RuleKind, report: &mut SiegelReport| {
        let c = format!("{:?}: {}", kind, rule(kind).citation);
        if !report.citations.contains(&c) {
            report.citations.push(c);
        }
    };

    let self_dual = ctx.ledger().get(&Fact::equiv(&target, &ctx.dual(&target)?));
    if self_dual == Some(false) {
        cite(RuleKind::NonSelfDual, &mut report);
        return Ok(report);
    }

    let generators = sym_power_generators(ctx, table, p)?;
    let restriction = engine
        .galois_restriction(&ctx.sym(m, p)?)?
        .ok_or_else(|| Error::Internal("icosahedral form without restriction".into()))?;
    let decomposition = table.decompose(&restriction.character)?;
    let omega = ctx.omega(p)?;
    let mut exceptional = None;
    for (base, mult) in decomposition.iter() {
        let g = generators
            .iter()
            .find(|g| g.base == base)
            .ok_or_else(|| Error::Internal(format!("no generator for {base}")))?;
        let kind = rule_for_base(base);
        cite(kind, &mut report);
        let outcome = match kind {
            RuleKind::Character => {
                let q = omega.pow(i64::from(m / 2)).mul(chi);
                let q_alt = omega.pow(i64::from(m / 2)).mul(&chi.pow(i64::from(m) + 1));
                match q.at_most_quadratic() {
                    Some(false) => format!("Q = {q} has order {}, not trivial or quadratic", q.order().unwrap()),
                    _ => {
                        exceptional = Some((q.to_string(), q_alt.to_string()));
                        format!("Q = {q} may be trivial or quadratic")
                    }
                }
            }
            RuleKind::AuxiliarySquare => {
                let m_prime = match base {
                    IrrepName::X1 => 3,
                    IrrepName::V => 4,
                    _ => 5,
                };
                let check = exponent_check(ctx, table, m_prime, p, chi)?;
                if !check.passes() {
                    report.verdict = SiegelVerdict::NotCovered {
                        reason: format!("auxiliary sum for sym^{m_prime} not covered"),
                    };
                }
                if m_prime == m {
                    report.k = Some(check.k);
                    report.r = check.r;
                }
                format!(
                    "auxiliary sum for sym^{m_prime}: k = {}, r = {}",
                    check.k,
                    check.r.map_or("?".into(), |r| r.to_string())
                )
            }
            _ => rule(kind).conclusion.to_string(),
        };
        report.constituents.push(Dispatch {
            base,
            multiplicity: mult,
            generator: g.label.clone(),
            rule: kind,
            outcome,
        });
    }
    if let Some((q, q_alternative)) = exceptional {
        if !matches!(report.verdict, SiegelVerdict::NotCovered { .. }) {
            report.verdict = SiegelVerdict::ExceptionalCase { q, q_alternative };
        }
    }
    Ok(report)
}

/// Reports for each `m` in `range`.
pub fn siegel_scan(
    ctx: &Context,
    table: &Table,
    range: std::ops::RangeInclusive<u32>,
    p: &str,
    chi: &CharSymbol,
) -> Result<Vec<SiegelReport>> {
    range.map(|m| siegel_report(ctx, table, m, p, chi)).collect()
}
