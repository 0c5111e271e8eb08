use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::chars::{CharGen, CharSymbol};
use super::facts::{Fact, FactLedger};
use crate::error::{Error, Result};

/// Projective type of a cuspidal representation of GL(2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CuspType {
    /// `I_K(χ)` for a quadratic extension `K`.
    Dihedral { field: String, character: String },
    /// `eta` is the cubic character with `sym²π ≅ sym²π ⊗ η`.
    Tetrahedral { eta: String },
    /// `mu` is the quadratic character of `field`, and
    /// `A⁴(π) ≅ Ad(π)⊗μ ⊞ I_K(χ₀)`.
    Octahedral {
        mu: String,
        field: String,
        chi0: String,
    },
    Icosahedral,
    /// Tetrahedral or octahedral without saying which; arises as a base
    /// change of an octahedral form.
    Polyhedral,
    /// Not of solvable polyhedral type.
    General,
    /// Cuspidal with unspecified projective type.
    Abstract,
}

impl CuspType {
    pub fn label(&self) -> &'static str {
        match self {
            CuspType::Dihedral { .. } => "dihedral",
            CuspType::Tetrahedral { .. } => "tetrahedral",
            CuspType::Octahedral { .. } => "octahedral",
            CuspType::Icosahedral => "icosahedral",
            CuspType::Polyhedral => "tetrahedral-or-octahedral",
            CuspType::General => "general",
            CuspType::Abstract => "abstract",
        }
    }

    pub fn is_dihedral(&self) -> bool {
        matches!(self, CuspType::Dihedral { .. })
    }
}

/// A cuspidal representation of GL(2): the base symbols everything else is
/// built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseForm {
    pub name: String,
    pub kind: CuspType,
    pub central: CharSymbol,
    /// Galois conjugate `π^τ` for icosahedral forms.
    pub conjugate: Option<String>,
    /// Set for base changes and auxiliary forms created by the context.
    pub derived: bool,
}

/// A formal product `⊠_f sym^{n_f}(f)` over distinct base forms; the empty
/// product is the trivial representation.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(BTreeMap<String, u32>);

impl Atom {
    pub fn one() -> Self {
        Atom::default()
    }

    pub fn sym(n: u32, form: &str) -> Self {
        let mut m = BTreeMap::new();
        if n > 0 {
            m.insert(form.to_string(), n);
        }
        Atom(m)
    }

    pub fn from_parts(parts: impl IntoIterator<Item = (String, u32)>) -> Self {
        Atom(parts.into_iter().filter(|(_, n)| *n > 0).collect())
    }

    pub fn parts(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(f, &n)| (f.as_str(), n))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// The single `(form, n)` when the atom is a symmetric power of one form.
    pub fn single(&self) -> Option<(&str, u32)> {
        (self.0.len() == 1).then(|| self.parts().next().unwrap())
    }

    pub fn power_of(&self, form: &str) -> u32 {
        self.0.get(form).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.values().map(|&n| u64::from(n) + 1).product()
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(name, &n)| if n == 1 { name.clone() } else { format!("sym^{n}({name})") })
            .collect();
        write!(f, "{}", parts.join(" ⊠ "))
    }
}

/// An atom twisted by a character.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constituent {
    pub atom: Atom,
    pub twist: CharSymbol,
}

impl Constituent {
    pub fn new(atom: Atom, twist: CharSymbol) -> Self {
        Constituent { atom, twist }
    }

    pub fn one() -> Self {
        Constituent::default()
    }

    pub fn character(twist: CharSymbol) -> Self {
        Constituent::new(Atom::one(), twist)
    }

    pub fn twisted(&self, t: &CharSymbol) -> Self {
        Constituent::new(self.atom.clone(), self.twist.mul(t))
    }

    pub fn degree(&self) -> u64 {
        self.atom.degree()
    }

    pub fn is_character(&self) -> bool {
        self.atom.is_one()
    }
}

impl fmt::Display for Constituent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.atom.is_one(), self.twist.is_empty()) {
            (true, _) => write!(f, "{}", self.twist),
            (false, true) => write!(f, "{}", self.atom),
            (false, false) if self.atom.0.len() > 1 => write!(f, "({}) ⊗ {}", self.atom, self.twist),
            (false, false) => write!(f, "{} ⊗ {}", self.atom, self.twist),
        }
    }
}

/// A formal isobaric sum `⊞ mᵢ·cᵢ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IsobaricExpr(BTreeMap<Constituent, u32>);

impl IsobaricExpr {
    pub fn new() -> Self {
        IsobaricExpr::default()
    }

    pub fn single(c: Constituent) -> Self {
        let mut e = IsobaricExpr::new();
        e.add(c, 1);
        e
    }

    pub fn from_constituents(cs: impl IntoIterator<Item = Constituent>) -> Self {
        let mut e = IsobaricExpr::new();
        for c in cs {
            e.add(c, 1);
        }
        e
    }

    pub fn add(&mut self, c: Constituent, mult: u32) {
        if mult > 0 {
            *self.0.entry(c).or_insert(0) += mult;
        }
    }

    pub fn plus(mut self, other: &IsobaricExpr) -> Self {
        for (c, k) in other.iter() {
            self.add(c.clone(), k);
        }
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Constituent, u32)> {
        self.0.iter().map(|(c, &k)| (c, k))
    }

    pub fn multiplicity(&self, c: &Constituent) -> u32 {
        self.0.get(c).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.iter().map(|(c, k)| c.degree() * u64::from(k)).sum()
    }

    pub fn twisted(&self, t: &CharSymbol) -> Self {
        let mut e = IsobaricExpr::new();
        for (c, k) in self.iter() {
            e.add(c.twisted(t), k);
        }
        e
    }
}

impl fmt::Display for IsobaricExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(c, k)| if k == 1 { c.to_string() } else { format!("{k}·[{c}]") })
            .collect();
        write!(f, "{}", parts.join(" ⊞ "))
    }
}

super::serialize_as_display!(Atom, Constituent, IsobaricExpr);

/// Base forms, character generators and the fact ledger.
#[derive(Clone, Debug, Default)]
pub struct Context {
    chars: BTreeMap<String, CharGen>,
    forms: BTreeMap<String, BaseForm>,
    ledger: FactLedger,
}

impl Context {
    pub fn new() -> Self {
        Context::default()
    }

    /// Declares a character generator; redeclaring with the same data is a
    /// no-op.
    pub fn add_char(&mut self, name: &str, order: Option<u32>) -> Result<CharSymbol> {
        self.insert_gen(CharGen::new(name, order))
    }

    pub fn add_nontrivial_char(&mut self, name: &str) -> Result<CharSymbol> {
        self.insert_gen(CharGen::nontrivial(name))
    }

    fn insert_gen(&mut self, g: CharGen) -> Result<CharSymbol> {
        if g.name.is_empty() {
            return Err(Error::InvalidArgument("empty character name".into()));
        }
        if let Some(old) = self.chars.get(&g.name) {
            if *old != g {
                return Err(Error::InvalidArgument(format!(
                    "character {} redeclared with different data",
                    g.name
                )));
            }
        }
        self.chars.insert(g.name.clone(), g.clone());
        Ok(CharSymbol::gen(&g))
    }

    pub fn char(&self, name: &str) -> Result<CharSymbol> {
        self.chars
            .get(name)
            .map(CharSymbol::gen)
            .ok_or_else(|| Error::UnknownForm(format!("character {name}")))
    }

    pub fn char_gen(&self, name: &str) -> Option<&CharGen> {
        self.chars.get(name)
    }

    /// Adds a GL(2) form with central character `omega_<name>` and registers
    /// the auxiliary symbols its type needs.
    pub fn add_form(&mut self, name: &str, kind: CuspType) -> Result<()> {
        let central = self.add_char(&format!("omega_{name}"), None)?;
        self.add_form_with_central(name, kind, central)
    }

    pub fn add_form_with_central(&mut self, name: &str, kind: CuspType, central: CharSymbol) -> Result<()> {
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(Error::InvalidArgument(format!("invalid form name {name:?}")));
        }
        if self.forms.contains_key(name) {
            return Err(Error::InvalidArgument(format!("form {name} declared twice")));
        }
        match &kind {
            CuspType::Tetrahedral { eta } => {
                self.add_char(eta, Some(3))?;
            }
            CuspType::Octahedral { mu, field, chi0 } => {
                self.add_char(mu, Some(2))?;
                let pi0 = induced_name(field, chi0);
                if !self.forms.contains_key(&pi0) {
                    let c = self.add_char(&format!("omega_{pi0}"), None)?;
                    self.insert_derived(
                        &pi0,
                        CuspType::Dihedral {
                            field: field.clone(),
                            character: chi0.clone(),
                        },
                        c,
                    );
                }
            }
            _ => {}
        }
        self.forms.insert(
            name.to_string(),
            BaseForm {
                name: name.to_string(),
                kind,
                central,
                conjugate: None,
                derived: false,
            },
        );
        self.register_dihedral_data()
    }

    fn insert_derived(&mut self, name: &str, kind: CuspType, central: CharSymbol) {
        self.forms.insert(
            name.to_string(),
            BaseForm {
                name: name.to_string(),
                kind,
                central,
                conjugate: None,
                derived: true,
            },
        );
    }

    /// For every dihedral `I_K(χ)`: the form `I_K(χ²)` and the quadratic
    /// character of `K` (the pieces of its symmetric square), the Mackey
    /// character `χ⁻¹(χ∘θ)`, and the base change to `K` of every
    /// non-derived form.
    fn register_dihedral_data(&mut self) -> Result<()> {
        let dihedral: Vec<(String, String, String)> = self
            .forms
            .values()
            .filter(|f| !f.derived)
            .filter_map(|f| match &f.kind {
                CuspType::Dihedral { field, character } => Some((f.name.clone(), field.clone(), character.clone())),
                _ => None,
            })
            .collect();
        for (name, field, character) in dihedral {
            self.add_char(&format!("eps_{field}"), Some(2))?;
            self.add_nontrivial_char(&format!("nu_{name}"))?;
            let sq = induced_name(&field, &format!("{character}^2"));
            if !self.forms.contains_key(&sq) {
                let c = self.add_char(&format!("omega_{sq}"), None)?;
                self.insert_derived(
                    &sq,
                    CuspType::Dihedral {
                        field: field.clone(),
                        character: format!("{character}^2"),
                    },
                    c,
                );
            }
            let bases: Vec<BaseForm> = self.forms.values().filter(|f| !f.derived).cloned().collect();
            for f in bases {
                let bc = base_change_name(&f.name, &field);
                if self.forms.contains_key(&bc) {
                    continue;
                }
                let kind = match &f.kind {
                    CuspType::Dihedral { .. } => f.kind.clone(),
                    CuspType::Tetrahedral { eta } => CuspType::Tetrahedral { eta: eta.clone() },
                    CuspType::Icosahedral => CuspType::Icosahedral,
                    CuspType::General => CuspType::General,
                    // Tetrahedral or octahedral over K depending on K.
                    CuspType::Octahedral { .. } | CuspType::Polyhedral => CuspType::Polyhedral,
                    CuspType::Abstract => CuspType::Abstract,
                };
                let c = self.add_char(&format!("omega_{bc}"), None)?;
                self.insert_derived(&bc, kind, c);
            }
        }
        Ok(())
    }

    /// Marks `a` and `b` as a Galois-conjugate pair of icosahedral forms.
    pub fn set_conjugates(&mut self, a: &str, b: &str) -> Result<()> {
        if a == b {
            return Err(Error::InvalidArgument("a form is not its own Galois conjugate".into()));
        }
        for n in [a, b] {
            let f = self.form(n)?;
            if f.kind != CuspType::Icosahedral {
                return Err(Error::InvalidArgument(format!("{n} is not icosahedral")));
            }
            if f.conjugate.as_deref().is_some_and(|c| c != a && c != b) {
                return Err(Error::InvalidArgument(format!("{n} already has a conjugate")));
            }
        }
        self.forms.get_mut(a).unwrap().conjugate = Some(b.to_string());
        self.forms.get_mut(b).unwrap().conjugate = Some(a.to_string());
        Ok(())
    }

    pub fn form(&self, name: &str) -> Result<&BaseForm> {
        self.forms
            .get(name)
            .ok_or_else(|| Error::UnknownForm(name.to_string()))
    }

    pub fn forms(&self) -> impl Iterator<Item = &BaseForm> {
        self.forms.values()
    }

    pub fn omega(&self, form: &str) -> Result<CharSymbol> {
        Ok(self.form(form)?.central.clone())
    }

    pub fn ledger(&self) -> &FactLedger {
        &self.ledger
    }

    /// Records a fact; facts are canonicalized and contradictions rejected.
    pub fn declare(&mut self, fact: Fact, truth: bool) -> Result<()> {
        self.check_fact(&fact)?;
        self.ledger.assert(fact, truth)
    }

    fn check_fact(&self, fact: &Fact) -> Result<()> {
        let atoms: Vec<&Atom> = match fact {
            Fact::Equiv(x, y) => vec![&x.atom, &y.atom],
            Fact::Cuspidal(a) | Fact::Automorphic(a) => vec![a],
            Fact::BaseChangeDihedral { form, .. } => {
                self.form(form)?;
                vec![]
            }
        };
        for a in atoms {
            for (f, _) in a.parts() {
                self.form(f)?;
            }
        }
        Ok(())
    }

    pub fn base_change(&self, form: &str, field: &str) -> Result<&BaseForm> {
        self.form(&base_change_name(form, field))
    }

    // Constructors for the usual derived symbols.

    pub fn sym(&self, n: u32, form: &str) -> Result<Constituent> {
        self.form(form)?;
        Ok(Constituent::new(Atom::sym(n, form), CharSymbol::trivial()))
    }

    pub fn base(&self, form: &str) -> Result<Constituent> {
        self.sym(1, form)
    }

    /// `Ad(π) = sym²(π) ⊗ ω⁻¹`.
    pub fn ad(&self, form: &str) -> Result<Constituent> {
        Ok(self.sym(2, form)?.twisted(&self.omega(form)?.inv()))
    }

    /// `A⁴(π) = sym⁴(π) ⊗ ω⁻²` as a single symbol.
    pub fn a4_symbol(&self, form: &str) -> Result<Constituent> {
        Ok(self.sym(4, form)?.twisted(&self.omega(form)?.pow(-2)))
    }

    /// The contragredient: `sym^n(π)^∨ ≅ sym^n(π) ⊗ ω^{-n}`.
    pub fn dual(&self, c: &Constituent) -> Result<Constituent> {
        let mut t = c.twist.inv();
        for (f, n) in c.atom.parts() {
            t = t.mul(&self.omega(f)?.pow(-i64::from(n)));
        }
        Ok(Constituent::new(c.atom.clone(), t))
    }

    pub fn dual_expr(&self, e: &IsobaricExpr) -> Result<IsobaricExpr> {
        let mut out = IsobaricExpr::new();
        for (c, k) in e.iter() {
            out.add(self.dual(c)?, k);
        }
        Ok(out)
    }

    /// `sym^n(π)` has central character `ω^{n(n+1)/2}`; an outer product of
    /// degrees `d_f` has `Π ω_f^{(n_f(n_f+1)/2)·(d/d_f)}`; twisting a degree
    /// `d` representation by `t` multiplies it by `t^d`.
    pub fn central_character(&self, c: &Constituent) -> Result<CharSymbol> {
        let d = c.degree() as i64;
        let mut cc = c.twist.pow(d);
        for (f, n) in c.atom.parts() {
            let n = i64::from(n);
            cc = cc.mul(&self.omega(f)?.pow(n * (n + 1) / 2 * (d / (n + 1))));
        }
        Ok(cc)
    }

    pub fn central_character_expr(&self, e: &IsobaricExpr) -> Result<CharSymbol> {
        e.iter().try_fold(CharSymbol::trivial(), |acc, (c, k)| {
            Ok(acc.mul(&self.central_character(c)?.pow(i64::from(k))))
        })
    }

    /// The Mackey self-twist fact for `π = I_K(χ)` dihedral and `π'`:
    /// `sym²(π'_K) ≅ sym²(π'_K) ⊗ χ⁻¹(χ∘θ)`.
    pub fn mackey_fact(&self, p: &str, p_prime: &str) -> Result<Fact> {
        let CuspType::Dihedral { field, .. } = &self.form(p)?.kind else {
            return Err(Error::InvalidArgument(format!("{p} is not dihedral")));
        };
        let bc = self.base_change(p_prime, field)?;
        let x = self.sym(2, &bc.name)?;
        let nu = self.char(&format!("nu_{p}"))?;
        Ok(Fact::equiv(&x, &x.twisted(&nu)))
    }
}

pub fn induced_name(field: &str, character: &str) -> String {
    format!("I_{field}({character})")
}

pub fn base_change_name(form: &str, field: &str) -> String {
    format!("{form}_{field}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Context {
        let mut c = Context::new();
        c.add_form("pi", CuspType::Icosahedral).unwrap();
        c
    }

    #[test]
    fn ad_has_degree_three_and_trivial_central_character() {
        let c = ctx();
        let ad = c.ad("pi").unwrap();
        assert_eq!(ad.degree(), 3);
        assert!(c.central_character(&ad).unwrap().is_empty());
        assert_eq!(c.ad("pi").unwrap(), ad);
        assert_eq!(c.dual(&ad).unwrap(), ad);
        let a4 = c.a4_symbol("pi").unwrap();
        assert_eq!(c.dual(&a4).unwrap(), a4);
        assert!(c.central_character(&a4).unwrap().is_empty());
    }

    #[test]
    fn dual_is_an_involution() {
        let mut c = ctx();
        let chi = c.add_char("chi", None).unwrap();
        for n in 0..6 {
            let x = c.sym(n, "pi").unwrap().twisted(&chi.pow(i64::from(n) - 2));
            assert_eq!(c.dual(&c.dual(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn rendering() {
        let c = ctx();
        assert_eq!(c.base("pi").unwrap().to_string(), "pi");
        assert_eq!(c.ad("pi").unwrap().to_string(), "sym^2(pi) ⊗ omega_pi^-1");
        assert_eq!(c.sym(0, "pi").unwrap().to_string(), "1");
    }

    #[test]
    fn dihedral_registration() {
        let mut c = ctx();
        c.add_form(
            "sigma",
            CuspType::Dihedral {
                field: "K".into(),
                character: "psi".into(),
            },
        )
        .unwrap();
        assert!(c.form("I_K(psi^2)").unwrap().derived);
        assert_eq!(c.base_change("pi", "K").unwrap().kind, CuspType::Icosahedral);
        assert!(c.base_change("sigma", "K").unwrap().kind.is_dihedral());
        assert!(c.char("nu_sigma").is_ok());
        assert!(c.add_form("pi", CuspType::General).is_err());
    }

    #[test]
    fn conjugates_must_be_icosahedral() {
        let mut c = ctx();
        c.add_form("pt", CuspType::Icosahedral).unwrap();
        c.add_form("g", CuspType::General).unwrap();
        assert!(c.set_conjugates("pi", "g").is_err());
        c.set_conjugates("pi", "pt").unwrap();
        assert_eq!(c.form("pt").unwrap().conjugate.as_deref(), Some("pi"));
    }
}
