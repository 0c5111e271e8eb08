use std::collections::BTreeMap;
use std::ops::Add;

use serde::Serialize;

use super::chars::{CharSymbol, Triviality};
use super::facts::{Fact, Missing, Truth};
use super::symbols::{induced_name, Atom, Constituent, Context, CuspType, IsobaricExpr};
use crate::chartab::IrrepName;
use crate::error::{Error, Result};
use crate::{ClassFn, Table};

/// A pole order known to lie in `[min, max]`; `missing` names the facts
/// that would narrow the interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoleOrder {
    pub min: u64,
    pub max: u64,
    pub missing: Vec<Missing>,
}

impl PoleOrder {
    pub fn exact(n: u64) -> Self {
        PoleOrder {
            min: n,
            max: n,
            missing: Vec::new(),
        }
    }

    fn between(min: u64, max: u64, missing: Vec<Missing>) -> Self {
        PoleOrder { min, max, missing }
    }

    pub fn value(&self) -> Option<u64> {
        (self.min == self.max).then_some(self.min)
    }

    pub fn scaled(self, k: u64) -> Self {
        PoleOrder {
            min: self.min * k,
            max: self.max * k,
            missing: self.missing,
        }
    }
}

impl Add for PoleOrder {
    type Output = PoleOrder;

    fn add(mut self, rhs: PoleOrder) -> PoleOrder {
        for m in rhs.missing {
            if !self.missing.contains(&m) {
                self.missing.push(m);
            }
        }
        PoleOrder {
            min: self.min + rhs.min,
            max: self.max + rhs.max,
            missing: self.missing,
        }
    }
}

/// Restriction of an icosahedral constituent to `SL2(F5)`: `π ↦ X'`,
/// `π^τ ↦ X''`, twists dropped (the group is perfect).
#[derive(Clone, Debug, PartialEq)]
pub struct Restriction {
    /// The conjugate pair the constituent lives on; `None` for characters.
    pub pair: Option<(String, String)>,
    pub character: ClassFn,
}

/// Evaluation of formal symbols against a context, with the character
/// table standing in for the Galois side of icosahedral forms.
pub struct Engine<'a> {
    pub ctx: &'a Context,
    pub table: &'a Table,
}

impl<'a> Engine<'a> {
    pub fn new(ctx: &'a Context, table: &'a Table) -> Self {
        Engine { ctx, table }
    }

    /// Bilinear expansion of `a ⊠ b`. Powers of the same form combine by
    /// `sym^a ⊠ sym^b = ⊞_k sym^{a+b-2k} ⊗ ω^k`; distinct forms stay as
    /// formal outer products.
    pub fn rs_expand(&self, a: &IsobaricExpr, b: &IsobaricExpr) -> Result<IsobaricExpr> {
        let mut out = IsobaricExpr::new();
        for (ca, ma) in a.iter() {
            for (cb, mb) in b.iter() {
                let twist = ca.twist.mul(&cb.twist);
                for (atom, t) in self.expand_atoms(&ca.atom, &cb.atom)? {
                    out.add(Constituent::new(atom, t.mul(&twist)), ma * mb);
                }
            }
        }
        if out.degree() != a.degree() * b.degree() {
            return Err(Error::Internal(format!(
                "expansion of ({a}) ⊠ ({b}) has degree {}",
                out.degree()
            )));
        }
        Ok(out)
    }

    pub fn rs_expand_constituents(&self, a: &Constituent, b: &Constituent) -> Result<IsobaricExpr> {
        self.rs_expand(&IsobaricExpr::single(a.clone()), &IsobaricExpr::single(b.clone()))
    }

    fn expand_atoms(&self, a: &Atom, b: &Atom) -> Result<Vec<(Atom, CharSymbol)>> {
        let mut forms: Vec<&str> = a.parts().map(|(f, _)| f).collect();
        for (f, _) in b.parts() {
            if !forms.contains(&f) {
                forms.push(f);
            }
        }
        let mut acc: Vec<(BTreeMap<String, u32>, CharSymbol)> = vec![(BTreeMap::new(), CharSymbol::trivial())];
        for f in forms {
            let (x, y) = (a.power_of(f), b.power_of(f));
            let pieces: Vec<(u32, CharSymbol)> = if x == 0 || y == 0 {
                vec![(x + y, CharSymbol::trivial())]
            } else {
                let omega = self.ctx.omega(f)?;
                (0..=x.min(y))
                    .map(|k| (x + y - 2 * k, omega.pow(i64::from(k))))
                    .collect()
            };
            let mut next = Vec::with_capacity(acc.len() * pieces.len());
            for (parts, t) in &acc {
                for (n, s) in &pieces {
                    let mut p = parts.clone();
                    if *n > 0 {
                        p.insert(f.to_string(), *n);
                    }
                    next.push((p, t.mul(s)));
                }
            }
            acc = next;
        }
        Ok(acc
            .into_iter()
            .map(|(p, t)| (Atom::from_parts(p), t))
            .collect())
    }

    /// `A⁴(π)` as an isobaric sum: cuspidal for icosahedral and general
    /// forms, `Ad ⊞ η ⊞ η²` for tetrahedral ones and `Ad⊗μ ⊞ I_K(χ₀)` for
    /// octahedral ones.
    pub fn a4(&self, form: &str) -> Result<IsobaricExpr> {
        let f = self.ctx.form(form)?;
        match &f.kind {
            CuspType::Icosahedral | CuspType::General => Ok(IsobaricExpr::single(self.ctx.a4_symbol(form)?)),
            CuspType::Tetrahedral { eta } => {
                let eta = self.ctx.char(eta)?;
                Ok(IsobaricExpr::from_constituents([
                    self.ctx.ad(form)?,
                    Constituent::character(eta.clone()),
                    Constituent::character(eta.pow(2)),
                ]))
            }
            CuspType::Octahedral { mu, field, chi0 } => {
                let mu = self.ctx.char(mu)?;
                Ok(IsobaricExpr::from_constituents([
                    self.ctx.ad(form)?.twisted(&mu),
                    self.ctx.base(&induced_name(field, chi0))?,
                ]))
            }
            CuspType::Dihedral { .. } => Err(Error::InvalidArgument(format!(
                "{form} is dihedral; its symmetric square is already not cuspidal"
            ))),
            CuspType::Abstract | CuspType::Polyhedral => Err(Error::Unsupported(format!(
                "A⁴ of {form} needs its projective type"
            ))),
        }
    }

    /// `sym²(π)`, split as `I_K(ψ²) ⊞ ω·ε_K` when `π = I_K(ψ)`.
    pub fn sym2_expr(&self, form: &str) -> Result<IsobaricExpr> {
        self.known_decomposition(&self.ctx.sym(2, form)?)?
            .map_or_else(|| Ok(IsobaricExpr::single(self.ctx.sym(2, form)?)), Ok)
    }

    /// Decompositions of non-cuspidal symmetric powers that follow from the
    /// projective type.
    pub fn known_decomposition(&self, c: &Constituent) -> Result<Option<IsobaricExpr>> {
        let Some((f, n)) = c.atom.single() else {
            return Ok(None);
        };
        let form = self.ctx.form(f)?;
        let omega = form.central.clone();
        Ok(match (&form.kind, n) {
            (CuspType::Tetrahedral { .. } | CuspType::Octahedral { .. }, 4) => {
                Some(self.a4(f)?.twisted(&omega.pow(2).mul(&c.twist)))
            }
            (CuspType::Dihedral { field, character }, 2) => {
                let eps = self.ctx.char(&format!("eps_{field}"))?;
                Some(
                    IsobaricExpr::from_constituents([
                        self.ctx.base(&induced_name(field, &format!("{character}^2")))?,
                        Constituent::character(omega.mul(&eps)),
                    ])
                    .twisted(&c.twist),
                )
            }
            _ => None,
        })
    }

    pub fn galois_restriction(&self, c: &Constituent) -> Result<Option<Restriction>> {
        let mut pair: Option<(String, String)> = None;
        let mut chi = self.table.trivial().clone();
        for (f, n) in c.atom.parts() {
            let form = self.ctx.form(f)?;
            if form.kind != CuspType::Icosahedral {
                return Ok(None);
            }
            let other = form.conjugate.clone().unwrap_or_else(|| f.to_string());
            let p = if f <= other.as_str() {
                (f.to_string(), other)
            } else {
                (other, f.to_string())
            };
            if pair.as_ref().is_some_and(|q| *q != p) {
                return Ok(None);
            }
            let base = if f == p.0 { IrrepName::XPrime } else { IrrepName::XDoublePrime };
            chi = &chi * &self.table.sym_power_char(base, n)?;
            pair = Some(p);
        }
        Ok(Some(Restriction { pair, character: chi }))
    }

    /// The `SL2(F5)` irreducible a constituent restricts to, if any.
    pub fn twist_class(&self, c: &Constituent) -> Result<Option<IrrepName>> {
        let Some(r) = self.galois_restriction(c)? else {
            return Ok(None);
        };
        let d = self.table.decompose(&r.character)?;
        Ok(d.is_irreducible().then(|| d.iter().next().unwrap().0))
    }

    /// Whether `x ≅ y`. Declared facts take precedence over the derived
    /// rules: equal degree, self-twists allowed by the projective type,
    /// central characters, and restrictions of icosahedral pairs.
    pub fn equivalent(&self, x: &Constituent, y: &Constituent) -> Result<Truth> {
        if x.degree() != y.degree() {
            return Ok(Truth::Known(false));
        }
        let key = Fact::equiv(x, y);
        let Fact::Equiv(a, b) = &key else { unreachable!() };
        if a.atom == b.atom && b.twist.is_empty() {
            return Ok(Truth::Known(true));
        }
        if let Some(v) = self.ctx.ledger().get(&key) {
            return Ok(Truth::Known(v));
        }
        if a.atom == b.atom {
            return Ok(match b.twist.triviality() {
                Triviality::Trivial => Truth::Known(true),
                Triviality::Nontrivial if a.atom.is_one() => Truth::Known(false),
                Triviality::Nontrivial => match self.self_twist(&a.atom, &b.twist)? {
                    Some(v) => Truth::Known(v),
                    None => Truth::unknown(key),
                },
                Triviality::Unknown => Truth::unknown(key),
            });
        }
        let ratio = self.ctx.central_character(x)?.div(&self.ctx.central_character(y)?);
        if ratio.triviality() == Triviality::Nontrivial {
            return Ok(Truth::Known(false));
        }
        if let (Some(rx), Some(ry)) = (self.galois_restriction(x)?, self.galois_restriction(y)?) {
            let compatible = rx.pair.is_none() || ry.pair.is_none() || rx.pair == ry.pair;
            if compatible && rx.character != ry.character {
                return Ok(Truth::Known(false));
            }
        }
        Ok(Truth::unknown(key))
    }

    /// Whether `a ≅ a ⊗ q` for a nontrivial `q`, when the type decides it.
    pub fn self_twist(&self, a: &Atom, q: &CharSymbol) -> Result<Option<bool>> {
        let Some((f, n)) = a.single() else {
            return Ok(None);
        };
        let form = self.ctx.form(f)?;
        Ok(match (&form.kind, n) {
            (CuspType::Icosahedral | CuspType::General, 1 | 2) => Some(false),
            (CuspType::Tetrahedral { .. } | CuspType::Octahedral { .. } | CuspType::Polyhedral, 1) => Some(false),
            (CuspType::Octahedral { .. }, 2) => Some(false),
            (CuspType::Tetrahedral { eta }, 2) => {
                let eta = self.ctx.char(eta)?;
                (*q == eta || *q == eta.pow(2)).then_some(true)
            }
            (CuspType::Octahedral { mu, .. }, 3) => (*q == self.ctx.char(mu)?).then_some(true),
            (CuspType::Dihedral { field, .. }, 1) => {
                (*q == self.ctx.char(&format!("eps_{field}"))?).then_some(true)
            }
            _ => None,
        })
    }

    pub fn is_cuspidal(&self, a: &Atom) -> Result<Truth> {
        if a.is_one() {
            return Ok(Truth::Known(true));
        }
        let key = Fact::Cuspidal(a.clone());
        if let Some(v) = self.ctx.ledger().get(&key) {
            return Ok(Truth::Known(v));
        }
        let c = Constituent::new(a.clone(), CharSymbol::trivial());
        if let Some(r) = self.galois_restriction(&c)? {
            return Ok(Truth::Known(self.table.decompose(&r.character)?.is_irreducible()));
        }
        let Some((f, n)) = a.single() else {
            return Ok(Truth::unknown(key));
        };
        let known = match self.ctx.form(f)?.kind {
            CuspType::General if n <= 4 => Some(true),
            CuspType::Tetrahedral { .. } => Some(n <= 2),
            CuspType::Octahedral { .. } => Some(n <= 3),
            CuspType::Polyhedral if n <= 2 => Some(true),
            CuspType::Polyhedral if n >= 4 => Some(false),
            CuspType::Dihedral { .. } => Some(n == 1),
            CuspType::Abstract if n == 1 => Some(true),
            _ => None,
        };
        Ok(known.map_or(Truth::unknown(key), Truth::Known))
    }

    /// Order of the pole at `s = 1` of the standard L-function of `c`.
    pub fn l_pole(&self, c: &Constituent) -> Result<PoleOrder> {
        let deg = c.degree();
        if c.is_character() {
            return Ok(self.character_pole(&c.twist, 1));
        }
        if let Some(r) = self.galois_restriction(c)? {
            let k = self
                .table
                .inner_product(&r.character, self.table.trivial())
                .to_integer()
                .ok_or_else(|| Error::Internal(format!("non-integral multiplicity in {c}")))?
                as u64;
            if k == 0 {
                return Ok(PoleOrder::exact(0));
            }
            if let Some((f, n)) = c.atom.single() {
                // The trivial constituent of sym^n(X') extends to ω^{n/2}.
                let q = self.ctx.omega(f)?.pow(i64::from(n / 2)).mul(&c.twist);
                return Ok(self.character_pole(&q, k));
            }
        }
        let cusp = self.is_cuspidal(&c.atom)?;
        match c.atom.parts().count() {
            1 => match cusp {
                Truth::Known(true) => Ok(PoleOrder::exact(0)),
                Truth::Known(false) => match self.known_decomposition(c)? {
                    Some(e) => self.l_pole_expr(&e),
                    None => Ok(PoleOrder::between(0, deg, vec![Missing::Fact(Fact::cuspidal(c))])),
                },
                Truth::Unknown(m) => Ok(PoleOrder::between(0, deg, m)),
            },
            2 => {
                let mut parts = c.atom.parts();
                let (f, a) = parts.next().unwrap();
                let (g, b) = parts.next().unwrap();
                let x = self.ctx.sym(a, f)?.twisted(&c.twist);
                let y = self.ctx.sym(b, g)?;
                let cx = self.is_cuspidal(&x.atom)?;
                let cy = self.is_cuspidal(&y.atom)?;
                if cx.known() != Some(true) || cy.known() != Some(true) {
                    let mut m: Vec<Missing> = cx.missing().to_vec();
                    m.extend(cy.missing().iter().cloned());
                    if m.is_empty() {
                        m.push(Missing::Fact(Fact::cuspidal(c)));
                    }
                    return Ok(PoleOrder::between(0, deg, m));
                }
                Ok(match self.equivalent(&x, &self.ctx.dual(&y)?)? {
                    Truth::Known(v) => PoleOrder::exact(u64::from(v)),
                    Truth::Unknown(m) => PoleOrder::between(0, 1, m),
                })
            }
            _ => Ok(PoleOrder::between(0, deg, vec![Missing::Fact(Fact::cuspidal(c))])),
        }
    }

    fn character_pole(&self, q: &CharSymbol, k: u64) -> PoleOrder {
        match q.triviality() {
            Triviality::Trivial => PoleOrder::exact(k),
            Triviality::Nontrivial => PoleOrder::exact(0),
            Triviality::Unknown => PoleOrder::between(
                0,
                k,
                vec![Missing::Fact(Fact::equiv(
                    &Constituent::character(q.clone()),
                    &Constituent::one(),
                ))],
            ),
        }
    }

    /// `Σ mᵢ · ord L(s, cᵢ)`.
    pub fn l_pole_expr(&self, e: &IsobaricExpr) -> Result<PoleOrder> {
        e.iter().try_fold(PoleOrder::exact(0), |acc, (c, k)| {
            Ok(acc + self.l_pole(c)?.scaled(u64::from(k)))
        })
    }

    /// `-ord_{s=1} L(s, e × ẽ)`, which is `Σ mᵢ²` over the classes of
    /// equivalent cuspidal constituents.
    pub fn pole_order(&self, e: &IsobaricExpr) -> Result<PoleOrder> {
        let items: Vec<(&Constituent, u64)> = e.iter().map(|(c, k)| (c, u64::from(k))).collect();
        let n = items.len();
        let mut missing = Vec::new();
        let mut cusp = Vec::with_capacity(n);
        for (c, _) in &items {
            let t = self.is_cuspidal(&c.atom)?;
            push_missing(&mut missing, t.missing());
            cusp.push(t.known());
        }
        let mut sure = UnionFind::new(n);
        let mut maybe = UnionFind::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if cusp[i] != Some(true) || cusp[j] != Some(true) {
                    continue;
                }
                match self.equivalent(items[i].0, items[j].0)? {
                    Truth::Known(true) => {
                        sure.union(i, j);
                        maybe.union(i, j);
                    }
                    Truth::Known(false) => {}
                    Truth::Unknown(m) => {
                        push_missing(&mut missing, &m);
                        maybe.union(i, j);
                    }
                }
            }
        }
        let class_sum = |uf: &mut UnionFind| {
            let mut sums: BTreeMap<usize, u64> = BTreeMap::new();
            let mut extra = 0;
            for (i, (_, k)) in items.iter().enumerate() {
                if cusp[i] == Some(false) {
                    // A non-cuspidal constituent has at least two pieces.
                    extra += 2 * k * k;
                } else {
                    *sums.entry(uf.find(i)).or_insert(0) += k;
                }
            }
            sums.values().map(|s| s * s).sum::<u64>() + extra
        };
        let min = class_sum(&mut sure);
        let deg = e.degree();
        let max = if cusp.iter().all(|c| *c == Some(true)) {
            class_sum(&mut maybe)
        } else {
            deg * deg
        };
        Ok(PoleOrder::between(min, max.max(min), missing))
    }

    /// Multiplicity of the cuspidal `tau` in `e`.
    pub fn pole_order_pair(&self, e: &IsobaricExpr, tau: &Constituent) -> Result<PoleOrder> {
        let mut out = PoleOrder::exact(0);
        for (c, k) in e.iter() {
            let k = u64::from(k);
            out = out
                + match self.equivalent(c, tau)? {
                    Truth::Known(true) => PoleOrder::exact(k),
                    Truth::Known(false) => PoleOrder::exact(0),
                    Truth::Unknown(m) => PoleOrder::between(0, k, m),
                };
        }
        Ok(out)
    }

    /// Restriction of a whole expression; `None` if some constituent is
    /// not on the icosahedral pair.
    pub fn galois_restriction_expr(&self, e: &IsobaricExpr) -> Result<Option<ClassFn>> {
        let mut acc = ClassFn::zero();
        for (c, k) in e.iter() {
            match self.galois_restriction(c)? {
                Some(r) => acc = &acc + &r.character.scale_int(i64::from(k)),
                None => return Ok(None),
            }
        }
        Ok(Some(acc))
    }
}

fn push_missing(into: &mut Vec<Missing>, from: &[Missing]) {
    for m in from {
        if !into.contains(m) {
            into.push(m.clone());
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, i: usize) -> usize {
        let p = self.0[i];
        if p == i {
            return i;
        }
        let r = self.find(p);
        self.0[i] = r;
        r
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        self.0[a] = b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Context, Table) {
        let mut c = Context::new();
        c.add_form("pi", CuspType::Icosahedral).unwrap();
        c.add_form("pit", CuspType::Icosahedral).unwrap();
        c.set_conjugates("pi", "pit").unwrap();
        c.add_form("g", CuspType::General).unwrap();
        c.add_form("t", CuspType::Tetrahedral { eta: "eta".into() }).unwrap();
        c.add_form(
            "o",
            CuspType::Octahedral {
                mu: "mu".into(),
                field: "L".into(),
                chi0: "chi0".into(),
            },
        )
        .unwrap();
        (c, Table::standard().unwrap())
    }

    #[test]
    fn pi_times_dual_is_one_plus_ad() {
        let (c, t) = setup();
        let e = Engine::new(&c, &t);
        let pi = c.base("g").unwrap();
        let out = e.rs_expand_constituents(&pi, &c.dual(&pi).unwrap()).unwrap();
        assert_eq!(
            out,
            IsobaricExpr::from_constituents([Constituent::one(), c.ad("g").unwrap()])
        );
    }

    #[test]
    fn ad_times_ad() {
        let (c, t) = setup();
        let e = Engine::new(&c, &t);
        let ad = c.ad("g").unwrap();
        let out = e.rs_expand_constituents(&ad, &ad).unwrap();
        assert_eq!(
            out,
            IsobaricExpr::from_constituents([
                Constituent::one(),
                c.ad("g").unwrap(),
                c.a4_symbol("g").unwrap()
            ])
        );
    }

    #[test]
    fn sym_m_times_ad() {
        let (c, t) = setup();
        let e = Engine::new(&c, &t);
        let w = c.omega("g").unwrap();
        for m in 2..8 {
            let out = e
                .rs_expand_constituents(&c.sym(m, "g").unwrap(), &c.ad("g").unwrap())
                .unwrap();
            let expected = IsobaricExpr::from_constituents([
                c.sym(m, "g").unwrap(),
                c.sym(m + 2, "g").unwrap().twisted(&w.inv()),
                c.sym(m - 2, "g").unwrap().twisted(&w),
            ]);
            assert_eq!(out, expected);
        }
    }

    #[test]
    fn cross_base_products_stay_formal() {
        let (c, t) = setup();
        let e = Engine::new(&c, &t);
        let out = e
            .rs_expand_constituents(&c.ad("pi").unwrap(), &c.ad("g").unwrap())
            .unwrap();
        assert_eq!(out.len(), 1);
        let (k, _) = out.iter().next().unwrap();
        assert_eq!(k.atom.parts().count(), 2);
        assert_eq!(out.degree(), 9);
    }

    #[test]
    fn a4_by_type() {
        let (c, t) = setup();
        let e = Engine::new(&c, &t);
        assert_eq!(e.a4("pi").unwrap().len(), 1);
        let tet = e.a4("t").unwrap();
        assert_eq!(tet.len(), 3);
        assert_eq!(tet.degree(), 5);
        let oct = e.a4("o").unwrap();
        assert_eq!(oct.len(), 2);
        assert_eq!(oct.degree(), 5);
        assert!(oct.to_string().contains("I_L(chi0)"));
    }

    #[test]
    fn pole_orders() {
        let (c, t) = setup();
        let e = Engine::new(&c, &t);
        let sigma = c.ad("g").unwrap();
        assert_eq!(e.pole_order(&IsobaricExpr::single(sigma.clone())).unwrap().value(), Some(1));
        let mut two = IsobaricExpr::new();
        two.add(sigma.clone(), 2);
        assert_eq!(e.pole_order(&two).unwrap().value(), Some(4));
        let three = IsobaricExpr::from_constituents([Constituent::one(), sigma, c.sym(3, "g").unwrap()]);
        assert_eq!(e.pole_order(&three).unwrap().value(), Some(3));
    }

    #[test]
    fn unknown_equivalence_gives_an_interval() {
        let (c, t) = setup();
        let e = Engine::new(&c, &t);
        let ex = IsobaricExpr::from_constituents([c.ad("g").unwrap(), c.ad("t").unwrap()]);
        let p = e.pole_order(&ex).unwrap();
        assert_eq!((p.min, p.max), (2, 4));
        assert_eq!(p.missing.len(), 1);
    }

    #[test]
    fn icosahedral_pair_is_separated_by_restriction() {
        let (c, t) = setup();
        let e = Engine::new(&c, &t);
        let v = e.equivalent(&c.ad("pi").unwrap(), &c.ad("pit").unwrap()).unwrap();
        assert_eq!(v, Truth::Known(false));
        assert_eq!(e.is_cuspidal(&c.sym(5, "pi").unwrap().atom).unwrap(), Truth::Known(true));
        assert_eq!(e.is_cuspidal(&c.sym(6, "pi").unwrap().atom).unwrap(), Truth::Known(false));
        let ppt = Constituent::new(Atom::from_parts([("pi".into(), 1), ("pit".into(), 1)]), CharSymbol::trivial());
        assert_eq!(e.twist_class(&ppt).unwrap(), Some(IrrepName::X2));
    }

    #[test]
    fn central_characters_separate_mu_twist() {
        let (c, t) = setup();
        let e = Engine::new(&c, &t);
        let mu = c.char("mu").unwrap();
        let v = e
            .equivalent(&c.ad("g").unwrap(), &c.ad("o").unwrap().twisted(&mu))
            .unwrap();
        assert_eq!(v, Truth::Known(false));
    }

    #[test]
    fn self_twists() {
        let (c, t) = setup();
        let e = Engine::new(&c, &t);
        let eta = c.char("eta").unwrap();
        let ad = c.ad("t").unwrap();
        assert_eq!(e.equivalent(&ad, &ad.twisted(&eta)).unwrap(), Truth::Known(true));
        let mu = c.char("mu").unwrap();
        assert_eq!(e.equivalent(&ad, &ad.twisted(&mu)).unwrap().known(), None);
        let g = c.ad("g").unwrap();
        assert_eq!(e.equivalent(&g, &g.twisted(&mu)).unwrap(), Truth::Known(false));
        let s3 = c.sym(3, "o").unwrap();
        assert_eq!(e.equivalent(&s3, &s3.twisted(&mu)).unwrap(), Truth::Known(true));
    }

    #[test]
    fn ledger_overrides_derived_rules() {
        let (mut c, t) = setup();
        let mu = c.char("mu").unwrap();
        let x = c.ad("g").unwrap();
        let y = c.ad("o").unwrap().twisted(&mu);
        c.declare(Fact::equiv(&x, &y), true).unwrap();
        let e = Engine::new(&c, &t);
        assert_eq!(e.equivalent(&y, &x).unwrap(), Truth::Known(true));
    }

    #[test]
    fn sym2_of_dihedral_splits() {
        let (mut c, t) = setup();
        c.add_form(
            "d",
            CuspType::Dihedral {
                field: "K".into(),
                character: "psi".into(),
            },
        )
        .unwrap();
        let e = Engine::new(&c, &t);
        let s = e.sym2_expr("d").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.degree(), 3);
        assert_eq!(e.sym2_expr("g").unwrap().len(), 1);
    }

    #[test]
    fn l_pole_of_characters_and_cusp_forms() {
        let (mut c, t) = setup();
        let chi = c.add_char("chi", Some(5)).unwrap();
        let e = Engine::new(&c, &t);
        assert_eq!(e.l_pole(&Constituent::one()).unwrap().value(), Some(1));
        assert_eq!(e.l_pole(&Constituent::character(chi)).unwrap().value(), Some(0));
        assert_eq!(e.l_pole(&c.ad("g").unwrap()).unwrap().value(), Some(0));
        for n in 1..12 {
            assert_eq!(e.l_pole(&c.sym(n, "pi").unwrap()).unwrap().value(), Some(0));
        }
        let p12 = e.l_pole(&c.sym(12, "pi").unwrap()).unwrap();
        assert_eq!((p12.min, p12.max), (0, 1));
    }
}
