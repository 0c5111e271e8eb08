use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::chars::CharSymbol;
use super::symbols::{Atom, Constituent};
use crate::error::{Error, Result};

/// A statement the engine cannot derive from the symbols alone.
///
/// Facts are stored in canonical form: cuspidality and automorphy ignore
/// twists, and an equivalence `a⊗s ≅ b⊗t` is stored as `a ≅ b⊗(t/s)` with
/// the smaller atom on the left.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fact {
    Equiv(Constituent, Constituent),
    Cuspidal(Atom),
    Automorphic(Atom),
    /// The base change of `form` to `field` is dihedral.
    BaseChangeDihedral { form: String, field: String },
}

impl Fact {
    pub fn equiv(x: &Constituent, y: &Constituent) -> Fact {
        let (x, y) = if x.atom <= y.atom { (x, y) } else { (y, x) };
        let q = y.twist.div(&x.twist);
        Fact::Equiv(
            Constituent::new(x.atom.clone(), CharSymbol::trivial()),
            Constituent::new(y.atom.clone(), q),
        )
    }

    pub fn cuspidal(c: &Constituent) -> Fact {
        Fact::Cuspidal(c.atom.clone())
    }

    pub fn automorphic(c: &Constituent) -> Fact {
        Fact::Automorphic(c.atom.clone())
    }

    pub fn base_change_dihedral(form: &str, field: &str) -> Fact {
        Fact::BaseChangeDihedral {
            form: form.to_string(),
            field: field.to_string(),
        }
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Equiv(x, y) => write!(f, "{x} ≅ {y}"),
            Fact::Cuspidal(a) => write!(f, "{a} is cuspidal"),
            Fact::Automorphic(a) => write!(f, "{a} is automorphic"),
            Fact::BaseChangeDihedral { form, field } => write!(f, "base change of {form} to {field} is dihedral"),
        }
    }
}

/// Something whose declaration would let a decision go through.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Missing {
    Fact(Fact),
    /// The projective type of the named form.
    FormType(String),
}

impl fmt::Display for Missing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Missing::Fact(fact) => write!(f, "{fact}"),
            Missing::FormType(form) => write!(f, "projective type of {form}"),
        }
    }
}

/// A boolean the engine either knows or cannot decide, in which case it
/// names what is missing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Truth {
    Known(bool),
    Unknown(Vec<Missing>),
}

impl Truth {
    pub fn unknown(fact: Fact) -> Truth {
        Truth::Unknown(vec![Missing::Fact(fact)])
    }

    pub fn known(&self) -> Option<bool> {
        match self {
            Truth::Known(b) => Some(*b),
            Truth::Unknown(_) => None,
        }
    }

    pub fn missing(&self) -> &[Missing] {
        match self {
            Truth::Known(_) => &[],
            Truth::Unknown(m) => m,
        }
    }
}

/// Declared facts with their truth values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FactLedger {
    facts: BTreeMap<Fact, bool>,
}

impl FactLedger {
    pub fn new() -> Self {
        FactLedger::default()
    }

    /// Adds a fact; asserting a fact both true and false is an error, and
    /// equivalences must relate symbols of equal degree.
    pub fn assert(&mut self, fact: Fact, truth: bool) -> Result<()> {
        if let Fact::Equiv(x, y) = &fact {
            if x.degree() != y.degree() {
                return Err(Error::InconsistentLedger(format!(
                    "{fact} relates degrees {} and {}",
                    x.degree(),
                    y.degree()
                )));
            }
            if x == y && !truth {
                return Err(Error::InconsistentLedger(format!("{fact} asserted false")));
            }
        }
        match self.facts.get(&fact) {
            Some(&old) if old != truth => Err(Error::InconsistentLedger(format!(
                "{fact} asserted both true and false"
            ))),
            _ => {
                self.facts.insert(fact, truth);
                Ok(())
            }
        }
    }

    pub fn get(&self, fact: &Fact) -> Option<bool> {
        self.facts.get(fact).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Fact, bool)> {
        self.facts.iter().map(|(f, &b)| (f, b))
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isobaric::chars::CharGen;

    fn c(n: u32, f: &str, t: &CharSymbol) -> Constituent {
        Constituent::new(Atom::sym(n, f), t.clone())
    }

    #[test]
    fn equivalence_is_canonical_under_common_twists_and_swaps() {
        let w = CharSymbol::gen(&CharGen::new("w", None));
        let m = CharSymbol::gen(&CharGen::new("m", Some(2)));
        let x = c(2, "pi", &w.inv());
        let y = c(2, "pi'", &m);
        let f = Fact::equiv(&x, &y);
        assert_eq!(f, Fact::equiv(&y, &x));
        assert_eq!(f, Fact::equiv(&x.twisted(&w), &y.twisted(&w)));
    }

    #[test]
    fn ledger_rejects_contradictions() {
        let t = CharSymbol::trivial();
        let mut l = FactLedger::new();
        let f = Fact::equiv(&c(2, "a", &t), &c(2, "b", &t));
        l.assert(f.clone(), true).unwrap();
        l.assert(f.clone(), true).unwrap();
        assert!(matches!(l.assert(f, false), Err(Error::InconsistentLedger(_))));
        let g = Fact::equiv(&c(2, "a", &t), &c(3, "b", &t));
        assert!(l.assert(g, true).is_err());
        let h = Fact::equiv(&c(2, "a", &t), &c(2, "a", &t));
        assert!(l.assert(h, false).is_err());
        assert_eq!(l.len(), 1);
    }
}
