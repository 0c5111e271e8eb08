//! Cuspidality of `π ⊠ sym²(π')` on GL(6), decided twice: once by the case
//! analysis on projective types, once by counting the pole of
//! `L(s, Π × Π̃)` from an explicit isobaric expansion.

use std::fmt;

use serde::Serialize;

use super::engine::{Engine, PoleOrder};
use super::facts::{Fact, Missing, Truth};
use super::symbols::{Atom, Constituent, Context, CuspType, IsobaricExpr};
use crate::chartab::IrrepName;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::{ClassFn, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictKind {
    Cuspidal,
    NotCuspidal,
    Undetermined,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Cuspidal => "cuspidal",
            VerdictKind::NotCuspidal => "not-cuspidal",
            VerdictKind::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub verdict: VerdictKind,
    pub witness_conditions: Vec<String>,
    pub missing_facts: Vec<Missing>,
}

impl Verdict {
    fn new(verdict: VerdictKind, witness: Vec<String>) -> Self {
        Verdict {
            verdict,
            witness_conditions: witness,
            missing_facts: Vec::new(),
        }
    }

    fn undetermined(witness: Vec<String>, missing: Vec<Missing>) -> Self {
        Verdict {
            verdict: VerdictKind::Undetermined,
            witness_conditions: witness,
            missing_facts: missing,
        }
    }

    fn from_pole(pole: &PoleOrder, mut witness: Vec<String>) -> Self {
        witness.push(format!("pole order of L(s, Π × Π̃) in [{}, {}]", pole.min, pole.max));
        if pole.min >= 2 {
            Verdict::new(VerdictKind::NotCuspidal, witness)
        } else if pole.max <= 1 {
            Verdict::new(VerdictKind::Cuspidal, witness)
        } else {
            Verdict::undetermined(witness, pole.missing.clone())
        }
    }
}

fn check_gl2(ctx: &Context, name: &str) -> Result<CuspType> {
    Ok(ctx.form(name)?.kind.clone())
}

fn show(t: &Truth) -> String {
    match t {
        Truth::Known(b) => b.to_string(),
        Truth::Unknown(_) => "unknown".into(),
    }
}

/// Whether the base change of `p'` to `field` is dihedral: exactly when
/// `p'` is, since A₄, S₄ and A₅ have no dihedral subgroups of index ≤ 2.
fn base_change_dihedral(ctx: &Context, p_prime: &str, field: &str) -> Result<Truth> {
    Ok(match check_gl2(ctx, p_prime)? {
        CuspType::Dihedral { .. } => Truth::Known(true),
        CuspType::Abstract => {
            let fact = Fact::base_change_dihedral(p_prime, field);
            ctx.ledger()
                .get(&fact)
                .map_or(Truth::unknown(fact), Truth::Known)
        }
        _ => Truth::Known(false),
    })
}

/// The case analysis: a dihedral `π = I_K(χ)` is decided by Mackey's
/// criterion on `sym²(π'_K) ⊗ χ`; otherwise a dihedral `π'` kills
/// cuspidality, and for non-dihedral `π'` the verdict is `Ad(π) ≇ Ad(π')`,
/// together with `Ad(π) ≇ Ad(π') ⊗ μ` when `π'` is octahedral.
pub fn decide_cuspidality(ctx: &Context, table: &Table, p: &str, p_prime: &str) -> Result<Verdict> {
    let engine = Engine::new(ctx, table);
    let kind = check_gl2(ctx, p)?;
    let kind_prime = check_gl2(ctx, p_prime)?;

    if let CuspType::Dihedral { field, .. } = &kind {
        let mut w = vec![format!("{p} = I_{field}(χ) is dihedral")];
        let bc = base_change_dihedral(ctx, p_prime, field)?;
        w.push(format!("base change of {p_prime} to {field} dihedral: {}", show(&bc)));
        if bc == Truth::Known(true) {
            return Ok(Verdict::new(VerdictKind::NotCuspidal, w));
        }
        let mackey_fact = ctx.mackey_fact(p, p_prime)?;
        let mackey = match ctx.base_change(p_prime, field)?.kind {
            // sym² of a form that is neither dihedral nor tetrahedral admits
            // no nontrivial self-twist.
            CuspType::Icosahedral | CuspType::General => Truth::Known(false),
            _ => ctx
                .ledger()
                .get(&mackey_fact)
                .map_or(Truth::unknown(mackey_fact), Truth::Known),
        };
        w.push(format!("sym²({p_prime}_{field}) has the Mackey self-twist: {}", show(&mackey)));
        return Ok(match (bc, mackey) {
            (_, Truth::Known(true)) => Verdict::new(VerdictKind::NotCuspidal, w),
            (Truth::Known(false), Truth::Known(false)) => Verdict::new(VerdictKind::Cuspidal, w),
            (a, b) => {
                let mut m = a.missing().to_vec();
                m.extend(b.missing().iter().cloned());
                Verdict::undetermined(w, m)
            }
        });
    }

    if kind == CuspType::Abstract {
        return Ok(Verdict::undetermined(
            vec![format!("type of {p} unknown")],
            vec![Missing::FormType(p.to_string())],
        ));
    }
    let mut w = vec![format!("{p} is {}", kind.label())];
    match &kind_prime {
        CuspType::Dihedral { .. } => {
            w.push(format!("{p_prime} is dihedral, so sym²({p_prime}) is not cuspidal"));
            Ok(Verdict::new(VerdictKind::NotCuspidal, w))
        }
        CuspType::Abstract => Ok(Verdict::undetermined(
            vec![format!("type of {p_prime} unknown")],
            vec![Missing::FormType(p_prime.to_string())],
        )),
        _ => {
            let ad = ctx.ad(p)?;
            let ad_prime = ctx.ad(p_prime)?;
            let mut conds = vec![(format!("Ad({p}) ≅ Ad({p_prime})"), engine.equivalent(&ad, &ad_prime)?)];
            if let CuspType::Octahedral { mu, .. } = &kind_prime {
                let mu_sym = ctx.char(mu)?;
                conds.push((
                    format!("Ad({p}) ≅ Ad({p_prime}) ⊗ {mu}"),
                    engine.equivalent(&ad, &ad_prime.twisted(&mu_sym))?,
                ));
            }
            let mut missing = Vec::new();
            let mut any_true = false;
            for (label, t) in &conds {
                w.push(format!("{label}: {}", show(t)));
                match t {
                    Truth::Known(true) => any_true = true,
                    Truth::Known(false) => {}
                    Truth::Unknown(m) => missing.extend(m.iter().cloned()),
                }
            }
            Ok(if any_true {
                Verdict::new(VerdictKind::NotCuspidal, w)
            } else if missing.is_empty() {
                Verdict::new(VerdictKind::Cuspidal, w)
            } else {
                Verdict::undetermined(w, missing)
            })
        }
    }
}

/// The pole count: `Π ⊠ Π̃ = (1 ⊞ Ad π) ⊠ (1 ⊞ Ad π' ⊞ A⁴ π')` with `A⁴`
/// replaced by its isobaric decomposition; `Π` is cuspidal iff the pole of
/// `L(s, Π × Π̃)` at `s = 1` has order one. For dihedral `π = I_K(χ)` the
/// count is taken over `K`: `Π = I_K(η₀)` with `η₀ = sym²(π'_K) ⊗ χ`, and
/// `L(Π × Π̃) = L(η₀ × η̃₀) L(η₀ × η̃₀^θ)`.
pub fn decide_cuspidality_via_poles(ctx: &Context, table: &Table, p: &str, p_prime: &str) -> Result<Verdict> {
    let engine = Engine::new(ctx, table);
    let kind = check_gl2(ctx, p)?;
    let kind_prime = check_gl2(ctx, p_prime)?;

    if let CuspType::Dihedral { field, character } = &kind {
        let bc = ctx.base_change(p_prime, field)?;
        let chi = ctx.char(character).unwrap_or_default();
        let mut w = vec![format!("Π = I_{field}(sym²({}) ⊗ {character})", bc.name)];
        // First factor: pole of L(η₀ × η̃₀), i.e. Σ mᵢ² for sym²(π'_K).
        let first = if bc.kind == CuspType::Abstract && kind_prime == CuspType::Abstract {
            let fact = Fact::base_change_dihedral(p_prime, field);
            match ctx.ledger().get(&fact) {
                Some(true) => PoleOrder {
                    min: 2,
                    max: 9,
                    missing: vec![],
                },
                Some(false) => PoleOrder::exact(1),
                None => PoleOrder {
                    min: 1,
                    max: 9,
                    missing: vec![Missing::Fact(fact)],
                },
            }
        } else {
            engine.pole_order(&engine.sym2_expr(&bc.name)?.twisted(&chi))?
        };
        w.push(format!("ord L(η₀ × η̃₀) in [{}, {}]", first.min, first.max));
        // Second factor: η₀ ≅ η₀^θ = η₀ ⊗ χ⁻¹(χ∘θ), as π'_K is θ-invariant.
        let eta0 = ctx.sym(2, &bc.name)?.twisted(&chi);
        let nu = ctx.char(&format!("nu_{p}"))?;
        let second = if first.min >= 2 {
            PoleOrder::exact(0)
        } else {
            match engine.equivalent(&eta0, &eta0.twisted(&nu))? {
                Truth::Known(v) => PoleOrder::exact(u64::from(v)),
                Truth::Unknown(m) => PoleOrder {
                    min: 0,
                    max: 1,
                    missing: m,
                },
            }
        };
        w.push(format!("ord L(η₀ × η̃₀^θ) in [{}, {}]", second.min, second.max));
        return Ok(Verdict::from_pole(&(first + second), w));
    }

    if kind == CuspType::Abstract {
        return Ok(Verdict::undetermined(
            vec![format!("type of {p} unknown")],
            vec![Missing::FormType(p.to_string())],
        ));
    }
    if kind_prime == CuspType::Abstract {
        return Ok(Verdict::undetermined(
            vec![format!("type of {p_prime} unknown")],
            vec![Missing::FormType(p_prime.to_string())],
        ));
    }
    if kind_prime.is_dihedral() {
        let big = engine.rs_expand(&IsobaricExpr::single(ctx.base(p)?), &engine.sym2_expr(p_prime)?)?;
        let pole = engine.pole_order(&big)?;
        return Ok(Verdict::from_pole(&pole, vec![format!("Π = {big}")]));
    }
    let left = IsobaricExpr::from_constituents([Constituent::one(), ctx.ad(p)?]);
    let right = IsobaricExpr::from_constituents([Constituent::one(), ctx.ad(p_prime)?]).plus(&engine.a4(p_prime)?);
    let product = engine.rs_expand(&left, &right)?;
    let pole = engine.l_pole_expr(&product)?;
    Ok(Verdict::from_pole(&pole, vec![format!("Π ⊠ Π̃ = {product}")]))
}

/// Convenience wrapper for the dual route check.
pub fn both_routes(ctx: &Context, table: &Table, p: &str, p_prime: &str) -> Result<(Verdict, Verdict)> {
    Ok((
        decide_cuspidality(ctx, table, p, p_prime)?,
        decide_cuspidality_via_poles(ctx, table, p, p_prime)?,
    ))
}

/// One row of the scenario matrix.
#[derive(Clone, Debug, Serialize)]
pub struct Scenario {
    pub label: String,
    pub declared: Vec<(Fact, bool)>,
    pub by_cases: Verdict,
    pub by_poles: Verdict,
}

impl Scenario {
    pub fn agree(&self) -> bool {
        self.by_cases.verdict == self.by_poles.verdict
    }

    pub fn determined(&self) -> bool {
        self.agree() && self.by_cases.verdict != VerdictKind::Undetermined
    }
}

/// Type templates used for the matrix, with auxiliary names derived from
/// the form name.
pub fn type_template(label: &str, form: &str) -> Result<CuspType> {
    Ok(match label {
        "dihedral" => CuspType::Dihedral {
            field: format!("K_{form}"),
            character: format!("chi_{form}"),
        },
        "tetrahedral" => CuspType::Tetrahedral { eta: format!("eta_{form}") },
        "octahedral" => CuspType::Octahedral {
            mu: format!("mu_{form}"),
            field: format!("L_{form}"),
            chi0: format!("chi0_{form}"),
        },
        "icosahedral" => CuspType::Icosahedral,
        "general" => CuspType::General,
        "abstract" => CuspType::Abstract,
        other => return Err(Error::InvalidArgument(format!("unknown type {other}"))),
    })
}

pub const MATRIX_TYPES: [&str; 5] = ["dihedral", "tetrahedral", "octahedral", "icosahedral", "general"];

fn explore(
    ctx: &Context,
    table: &Table,
    p: &str,
    p_prime: &str,
    label: &str,
    declared: Vec<(Fact, bool)>,
    out: &mut Vec<Scenario>,
) -> Result<()> {
    let (a, b) = both_routes(ctx, table, p, p_prime)?;
    let next = a
        .missing_facts
        .iter()
        .chain(b.missing_facts.iter())
        .find_map(|m| match m {
            Missing::Fact(f) => Some(f.clone()),
            Missing::FormType(_) => None,
        });
    let undetermined = a.verdict == VerdictKind::Undetermined || b.verdict == VerdictKind::Undetermined;
    match next {
        Some(fact) if undetermined && declared.len() < 4 => {
            for truth in [true, false] {
                let mut c = ctx.clone();
                if c.declare(fact.clone(), truth).is_err() {
                    continue;
                }
                let mut d = declared.clone();
                d.push((fact.clone(), truth));
                explore(&c, table, p, p_prime, label, d, out)?;
            }
            Ok(())
        }
        _ => {
            out.push(Scenario {
                label: label.to_string(),
                declared,
                by_cases: a,
                by_poles: b,
            });
            Ok(())
        }
    }
}

/// Every pair of types for `π` and `π'`, branching on each fact a route
/// reports missing, plus the cases `π' = π`, `π' = π^τ` and a declared
/// `μ`-twist equivalence.
pub fn scenario_matrix(table: &Table) -> Result<Vec<Scenario>> {
    let mut out = Vec::new();
    for tp in MATRIX_TYPES {
        for tq in MATRIX_TYPES {
            let mut ctx = Context::new();
            ctx.add_form("pi", type_template(tp, "pi")?)?;
            ctx.add_form("pi'", type_template(tq, "pi'")?)?;
            explore(&ctx, table, "pi", "pi'", &format!("{tp} × {tq}"), vec![], &mut out)?;
        }
    }
    for tp in ["tetrahedral", "octahedral", "icosahedral", "general"] {
        let mut ctx = Context::new();
        ctx.add_form("pi", type_template(tp, "pi")?)?;
        explore(&ctx, table, "pi", "pi", &format!("{tp}, π' = π"), vec![], &mut out)?;
    }
    let mut ctx = Context::new();
    ctx.add_form("pi", CuspType::Icosahedral)?;
    ctx.add_form("pi^tau", CuspType::Icosahedral)?;
    ctx.set_conjugates("pi", "pi^tau")?;
    explore(&ctx, table, "pi", "pi^tau", "icosahedral, π' = π^τ", vec![], &mut out)?;

    for tp in ["tetrahedral", "icosahedral", "general"] {
        let mut ctx = Context::new();
        ctx.add_form("pi", type_template(tp, "pi")?)?;
        ctx.add_form("pi'", type_template("octahedral", "pi'")?)?;
        let mu = ctx.char("mu_pi'")?;
        let fact = Fact::equiv(&ctx.ad("pi")?, &ctx.ad("pi'")?.twisted(&mu));
        ctx.declare(fact.clone(), true)?;
        explore(
            &ctx,
            table,
            "pi",
            "pi'",
            &format!("{tp} × octahedral, μ-twist declared"),
            vec![(fact, true)],
            &mut out,
        )?;
    }
    Ok(out)
}

/// A generator of the twist classes for an icosahedral `π`.
#[derive(Clone, Debug, Serialize)]
pub struct Generator {
    pub label: String,
    pub constituent: Constituent,
    pub base: IrrepName,
}

/// `{1, π, π^τ, sym²π, sym²π^τ, sym³π, π⊠π^τ, sym⁴π, sym⁵π}` with the
/// `SL2(F5)` irreducible each restricts to.
pub fn sym_power_generators(ctx: &Context, table: &Table, p: &str) -> Result<Vec<Generator>> {
    let form = ctx.form(p)?;
    if form.kind != CuspType::Icosahedral {
        return Err(Error::InvalidArgument(format!("{p} is not icosahedral")));
    }
    let q = form
        .conjugate
        .clone()
        .ok_or_else(|| Error::InvalidArgument(format!("{p} has no Galois conjugate declared")))?;
    let engine = Engine::new(ctx, table);
    let both = Constituent::new(
        Atom::from_parts([(p.to_string(), 1), (q.clone(), 1)]),
        Default::default(),
    );
    let list = vec![
        ("1".to_string(), Constituent::one()),
        (p.to_string(), ctx.base(p)?),
        (q.clone(), ctx.base(&q)?),
        (format!("sym^2({p})"), ctx.sym(2, p)?),
        (format!("sym^2({q})"), ctx.sym(2, &q)?),
        (format!("sym^3({p})"), ctx.sym(3, p)?),
        (format!("{p} ⊠ {q}"), both),
        (format!("sym^4({p})"), ctx.sym(4, p)?),
        (format!("sym^5({p})"), ctx.sym(5, p)?),
    ];
    let mut out = Vec::new();
    for (label, c) in list {
        let base = engine
            .twist_class(&c)?
            .ok_or_else(|| Error::Internal(format!("{label} does not restrict irreducibly")))?;
        out.push(Generator {
            label,
            constituent: c,
            base,
        });
    }
    Ok(out)
}

/// Checks that the generators are pairwise not twist equivalent and the
/// listed twist equivalences between products of them.
pub fn verify_sym_power_generators(ctx: &Context, table: &Table, p: &str) -> Result<Report> {
    let gens = sym_power_generators(ctx, table, p)?;
    let mut r = Report::new("twist-class generators");
    r.check("nine generators", gens.len() == 9, gens.len().to_string());
    let mut bases: Vec<IrrepName> = gens.iter().map(|g| g.base).collect();
    bases.sort();
    bases.dedup();
    r.check(
        "pairwise not twist equivalent",
        bases.len() == 9,
        gens.iter()
            .map(|g| format!("{} -> {}", g.label, g.base))
            .collect::<Vec<_>>()
            .join(", "),
    );
    let q = ctx.form(p)?.conjugate.clone().unwrap_or_default();
    let engine = Engine::new(ctx, table);
    let prod = |parts: &[(&str, u32)]| {
        Constituent::new(
            Atom::from_parts(parts.iter().map(|(f, n)| (f.to_string(), *n))),
            Default::default(),
        )
    };
    let relations = [
        (format!("sym^3({p}) ~ sym^3({q})"), prod(&[(p, 3)]), prod(&[(&q, 3)])),
        (format!("sym^4({p}) ~ sym^4({q})"), prod(&[(p, 4)]), prod(&[(&q, 4)])),
        (format!("sym^5({p}) ~ sym^5({q})"), prod(&[(p, 5)]), prod(&[(&q, 5)])),
        (format!("sym^5({p}) ~ {q} ⊠ sym^2({p})"), prod(&[(p, 5)]), prod(&[(p, 2), (&q, 1)])),
        (format!("sym^5({p}) ~ {p} ⊠ sym^2({q})"), prod(&[(p, 5)]), prod(&[(p, 1), (&q, 2)])),
    ];
    for (label, a, b) in relations {
        let (x, y) = (engine.twist_class(&a)?, engine.twist_class(&b)?);
        r.check(label, x.is_some() && x == y, format!("{x:?} vs {y:?}"));
    }
    Ok(r)
}

/// `⟨f·f^∨, 1⟩ = ⟨f, f⟩`, the pole order of `L(s, σ × σ̃)` computed on
/// the Galois side; `f` must be a character.
pub fn galois_pole_check(table: &Table, f: &ClassFn) -> Result<u32> {
    let d = table.decompose(f)?;
    let ip = table.inner_product(&(f * &table.dual_char(f)), table.trivial());
    let n = ip
        .to_integer()
        .and_then(|k| u32::try_from(k).ok())
        .ok_or_else(|| Error::Internal(format!("non-integral pole order {ip}")))?;
    if n != d.norm_squared() {
        return Err(Error::Internal(format!(
            "pole order {n} disagrees with multiplicities {d}"
        )));
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Table {
        Table::standard().unwrap()
    }

    fn pair(tp: &str, tq: &str) -> Context {
        let mut ctx = Context::new();
        ctx.add_form("pi", type_template(tp, "pi").unwrap()).unwrap();
        ctx.add_form("pi'", type_template(tq, "pi'").unwrap()).unwrap();
        ctx
    }

    #[test]
    fn icosahedral_conjugate_pair_is_cuspidal() {
        let t = table();
        let mut ctx = Context::new();
        ctx.add_form("pi", CuspType::Icosahedral).unwrap();
        ctx.add_form("pt", CuspType::Icosahedral).unwrap();
        ctx.set_conjugates("pi", "pt").unwrap();
        let (a, b) = both_routes(&ctx, &t, "pi", "pt").unwrap();
        assert_eq!(a.verdict, VerdictKind::Cuspidal);
        assert_eq!(b.verdict, VerdictKind::Cuspidal);
    }

    #[test]
    fn same_form_is_not_cuspidal() {
        let t = table();
        for tp in ["tetrahedral", "octahedral", "icosahedral", "general"] {
            let mut ctx = Context::new();
            ctx.add_form("pi", type_template(tp, "pi").unwrap()).unwrap();
            let (a, b) = both_routes(&ctx, &t, "pi", "pi").unwrap();
            assert_eq!(a.verdict, VerdictKind::NotCuspidal, "{tp}");
            assert_eq!(b.verdict, VerdictKind::NotCuspidal, "{tp}");
        }
    }

    #[test]
    fn dihedral_with_dihedral_base_change() {
        let t = table();
        let ctx = pair("dihedral", "dihedral");
        let (a, b) = both_routes(&ctx, &t, "pi", "pi'").unwrap();
        assert_eq!(a.verdict, VerdictKind::NotCuspidal);
        assert_eq!(b.verdict, VerdictKind::NotCuspidal);
        let mut ctx = pair("dihedral", "abstract");
        ctx.declare(Fact::base_change_dihedral("pi'", "K_pi"), true).unwrap();
        let (a, b) = both_routes(&ctx, &t, "pi", "pi'").unwrap();
        assert_eq!(a.verdict, VerdictKind::NotCuspidal);
        assert_eq!(b.verdict, VerdictKind::NotCuspidal);
    }

    #[test]
    fn undetermined_names_the_missing_fact() {
        let t = table();
        let ctx = pair("general", "general");
        let (a, b) = both_routes(&ctx, &t, "pi", "pi'").unwrap();
        assert_eq!(a.verdict, VerdictKind::Undetermined);
        assert_eq!(b.verdict, VerdictKind::Undetermined);
        let want = Missing::Fact(Fact::equiv(&ctx.ad("pi").unwrap(), &ctx.ad("pi'").unwrap()));
        assert!(a.missing_facts.contains(&want));
        assert!(b.missing_facts.contains(&want));
    }

    #[test]
    fn tetrahedral_with_equivalent_adjoints() {
        let t = table();
        let mut ctx = pair("icosahedral", "tetrahedral");
        let f = Fact::equiv(&ctx.ad("pi").unwrap(), &ctx.ad("pi'").unwrap());
        ctx.declare(f, true).unwrap();
        let (a, b) = both_routes(&ctx, &t, "pi", "pi'").unwrap();
        assert_eq!(a.verdict, VerdictKind::NotCuspidal);
        assert_eq!(b.verdict, VerdictKind::NotCuspidal);
    }

    #[test]
    fn octahedral_mu_twist_declared() {
        let t = table();
        let mut ctx = pair("general", "octahedral");
        let mu = ctx.char("mu_pi'").unwrap();
        let f = Fact::equiv(&ctx.ad("pi").unwrap(), &ctx.ad("pi'").unwrap().twisted(&mu));
        ctx.declare(f, true).unwrap();
        let (a, b) = both_routes(&ctx, &t, "pi", "pi'").unwrap();
        assert_eq!(a.verdict, VerdictKind::NotCuspidal);
        assert_eq!(b.verdict, VerdictKind::NotCuspidal);
    }

    #[test]
    fn all_conditions_hold_gives_cuspidal() {
        let t = table();
        let mut ctx = pair("general", "general");
        let f = Fact::equiv(&ctx.ad("pi").unwrap(), &ctx.ad("pi'").unwrap());
        ctx.declare(f, false).unwrap();
        let (a, b) = both_routes(&ctx, &t, "pi", "pi'").unwrap();
        assert_eq!(a.verdict, VerdictKind::Cuspidal);
        assert_eq!(b.verdict, VerdictKind::Cuspidal);
    }

    #[test]
    fn scenario_matrix_routes_agree() {
        let t = table();
        let rows = scenario_matrix(&t).unwrap();
        for s in &rows {
            assert!(s.agree(), "{}: {:?} vs {:?}", s.label, s.by_cases, s.by_poles);
        }
        assert!(rows.iter().filter(|s| s.determined()).count() >= 24);
    }

    #[test]
    fn generators() {
        let t = table();
        let mut ctx = Context::new();
        ctx.add_form("pi", CuspType::Icosahedral).unwrap();
        ctx.add_form("pt", CuspType::Icosahedral).unwrap();
        let err = sym_power_generators(&ctx, &t, "pi");
        assert!(err.is_err());
        ctx.set_conjugates("pi", "pt").unwrap();
        let g = sym_power_generators(&ctx, &t, "pi").unwrap();
        assert_eq!(g.len(), 9);
        let r = verify_sym_power_generators(&ctx, &t, "pi").unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn galois_pole_examples() {
        let t = table();
        assert_eq!(galois_pole_check(&t, t.row(IrrepName::XPrime)).unwrap(), 1);
        let s6 = t.sym_power_char(IrrepName::XPrime, 6).unwrap();
        assert_eq!(galois_pole_check(&t, &s6).unwrap(), 2);
        assert_eq!(galois_pole_check(&t, &t.trivial().scale_int(2)).unwrap(), 4);
        let bad = t.row(IrrepName::XPrime).scale_int(1).with_value(0, crate::ExactScalar::from_int(3));
        assert!(galois_pole_check(&t, &bad).is_err());
    }
}
