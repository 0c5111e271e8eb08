use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chartab::IrrepName;
use crate::error::Result;
use crate::icostruct::{classify_irreps, trivial_constituent_scan, verify_twist_classes, CenterParam};
use crate::isobaric::{
    galois_pole_check, scenario_matrix, verify_sym_power_generators, Context, CuspType, Fact, VerdictKind,
};
use crate::report::Report;
use crate::siegel::{exponent_check, galois_exponent_check, icosahedral_context, siegel_scan, SiegelVerdict};
use crate::{ClassFn, Table};

/// Values of `m` for which the auxiliary-sum exponent check is run.
pub const EXPONENT_MS: [u32; 6] = [3, 4, 5, 7, 9, 11];

/// Context for the exponent check at `m`. For `m ≤ 5` the icosahedral
/// context suffices; beyond that a general form is used with cuspidality
/// of `sym^m` and automorphy of `sym^{m±2}` declared.
pub fn exponent_context(m: u32) -> Result<Context> {
    if m <= 5 {
        return icosahedral_context(None);
    }
    let mut ctx = Context::new();
    ctx.add_char("chi", None)?;
    ctx.add_form("pi", CuspType::General)?;
    let declare = |ctx: &mut Context, n: u32, cusp: bool| -> Result<()> {
        let s = ctx.sym(n, "pi")?;
        let fact = if cusp { Fact::cuspidal(&s) } else { Fact::automorphic(&s) };
        ctx.declare(fact, true)
    };
    declare(&mut ctx, m, true)?;
    declare(&mut ctx, m + 2, false)?;
    declare(&mut ctx, m - 2, false)?;
    Ok(ctx)
}

/// Number of random multisets used by the pole-order check.
pub const POLE_SAMPLES: usize = 50;

/// Random small multisets of irreducibles; returns `(coefficients, class
/// function)` pairs.
pub fn random_multisets(table: &Table, seed: u64, count: usize) -> Vec<([u32; 9], ClassFn)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut coeffs = [0u32; 9];
            for c in coeffs.iter_mut() {
                *c = rng.random_range(0..=3);
            }
            let mut f = ClassFn::zero();
            for (name, &c) in IrrepName::ALL.iter().zip(&coeffs) {
                f = &f + &table.row(*name).scale_int(i64::from(c));
            }
            (coeffs, f)
        })
        .collect()
}

/// Every self-check in the crate, aggregated. Deterministic for a fixed
/// seed.
pub fn verify_all(seed: u64, max_m: u32) -> Result<Report> {
    let table = Table::standard()?;
    let mut report = Report::new("all checks");
    report.absorb(table.verify_table());
    report.absorb(table.verify_identities());

    for m in 1..=max_m {
        let cp = CenterParam::new(m)?;
        report.absorb(verify_twist_classes(&table, cp)?);
        let irreps = classify_irreps(cp);
        let dims: u64 = irreps.iter().map(|r| u64::from(r.dim()).pow(2)).sum();
        report.check(
            format!("m = {m}: irreducible count"),
            irreps.len() as u32 == 9 * m && dims == 120 * u64::from(m),
            format!("{} irreducibles, Σ dim² = {dims}", irreps.len()),
        );
    }

    let scan = trivial_constituent_scan(&table, 12)?;
    let first = scan.iter().find(|(n, k)| *n > 0 && *k > 0).map(|(n, _)| *n);
    report.check("first trivial constituent of sym^n(X')", first == Some(12), format!("{first:?}"));

    let scenarios = scenario_matrix(&table)?;
    let disagree = scenarios.iter().filter(|s| !s.agree()).count();
    let determined = scenarios.iter().filter(|s| s.determined()).count();
    report.check(
        "cuspidality routes agree",
        disagree == 0,
        format!("{} scenarios, {determined} determined, {disagree} disagreements", scenarios.len()),
    );
    let pair: Vec<_> = scenarios.iter().filter(|s| s.label.ends_with("π^τ")).collect();
    report.check(
        "conjugate icosahedral pair is cuspidal",
        !pair.is_empty() && pair.iter().all(|s| s.by_cases.verdict == VerdictKind::Cuspidal),
        format!("{} scenario(s)", pair.len()),
    );

    let ctx = icosahedral_context(Some(5))?;
    report.absorb(verify_sym_power_generators(&ctx, &table, "pi")?);

    for m in EXPONENT_MS {
        let ctx = exponent_context(m)?;
        let chi = ctx.char("chi")?;
        let c = exponent_check(&ctx, &table, m, "pi", &chi)?;
        report.check(
            format!("m = {m}: target exponent exceeds pole order"),
            c.k == 4 && c.r == Some(3) && c.passes(),
            format!("k = {}, r = {:?}", c.k, c.r),
        );
    }
    for m in 3..=5 {
        report.absorb(galois_exponent_check(&table, m)?);
    }

    let mut rows_ok = true;
    for name in IrrepName::ALL {
        rows_ok &= galois_pole_check(&table, table.row(name))? == 1;
    }
    report.check("pole order 1 on each irreducible", rows_ok, "");
    let mut bad = 0;
    for (coeffs, f) in random_multisets(&table, seed, POLE_SAMPLES) {
        let expected: u32 = coeffs.iter().map(|c| c * c).sum();
        if galois_pole_check(&table, &f)? != expected {
            bad += 1;
        }
    }
    report.check(
        "pole order Σc² on random sums",
        bad == 0,
        format!("{bad} of {POLE_SAMPLES} mismatched (seed {seed})"),
    );

    let chi = ctx.char("chi")?;
    let reports = siegel_scan(&ctx, &table, 0..=11, "pi", &chi)?;
    let all_clear = reports.iter().all(|r| r.verdict == SiegelVerdict::NoSiegelZero);
    report.check("no Siegel zero for m ≤ 11", all_clear, "");
    Ok(report)
}
