use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

/// A named Hecke character generator. `order` is the exact order when
/// declared; `nontrivial` records a declaration that the generator is not
/// the trivial character even though its order is unknown.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CharGen {
    pub name: String,
    pub order: Option<u32>,
    pub nontrivial: bool,
}

impl CharGen {
    pub fn new(name: impl Into<String>, order: Option<u32>) -> Self {
        CharGen {
            name: name.into(),
            order,
            nontrivial: order.is_some_and(|n| n > 1),
        }
    }

    pub fn nontrivial(name: impl Into<String>) -> Self {
        CharGen {
            name: name.into(),
            order: None,
            nontrivial: true,
        }
    }
}

/// Three-valued answer for questions about character words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Triviality {
    Trivial,
    Nontrivial,
    Unknown,
}

/// A word in the free abelian group on the generators, with exponents
/// reduced modulo declared orders. The empty word is the trivial character.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharSymbol(BTreeMap<CharGen, i64>);

impl CharSymbol {
    pub fn trivial() -> Self {
        CharSymbol::default()
    }

    pub fn gen(g: &CharGen) -> Self {
        CharSymbol::trivial().with(g, 1)
    }

    /// Multiplies by `g^e`.
    pub fn with(mut self, g: &CharGen, e: i64) -> Self {
        let cur = self.0.remove(g).unwrap_or(0) + e;
        let cur = match g.order {
            Some(n) => cur.rem_euclid(i64::from(n)),
            None => cur,
        };
        if cur != 0 {
            self.0.insert(g.clone(), cur);
        }
        self
    }

    pub fn mul(&self, other: &CharSymbol) -> CharSymbol {
        other.0.iter().fold(self.clone(), |acc, (g, &e)| acc.with(g, e))
    }

    pub fn pow(&self, k: i64) -> CharSymbol {
        self.0
            .iter()
            .fold(CharSymbol::trivial(), |acc, (g, &e)| acc.with(g, e * k))
    }

    pub fn inv(&self) -> CharSymbol {
        self.pow(-1)
    }

    /// `self · other⁻¹`.
    pub fn div(&self, other: &CharSymbol) -> CharSymbol {
        self.mul(&other.inv())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = (&CharGen, i64)> {
        self.0.iter().map(|(g, &e)| (g, e))
    }

    /// Generators are not assumed independent, so only single-generator
    /// words can be shown nontrivial.
    pub fn triviality(&self) -> Triviality {
        match self.0.len() {
            0 => Triviality::Trivial,
            1 => {
                let (g, &e) = self.0.iter().next().unwrap();
                match g.order {
                    Some(_) => Triviality::Nontrivial,
                    None if g.nontrivial && e.abs() == 1 => Triviality::Nontrivial,
                    None => Triviality::Unknown,
                }
            }
            _ => Triviality::Unknown,
        }
    }

    /// Exact order, when it follows from the declarations.
    pub fn order(&self) -> Option<u32> {
        match self.0.len() {
            0 => Some(1),
            1 => {
                let (g, &e) = self.0.iter().next().unwrap();
                g.order.map(|n| n / (e.unsigned_abs() as u32).gcd(&n))
            }
            _ => None,
        }
    }

    /// Whether the character is trivial or quadratic.
    pub fn at_most_quadratic(&self) -> Option<bool> {
        self.order().map(|n| n <= 2)
    }
}

impl fmt::Display for CharSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(g, &e)| {
                if e == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{}", g.name, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduction_mod_order() {
        let mu = CharGen::new("mu", Some(2));
        let m = CharSymbol::gen(&mu);
        assert_eq!(m.inv(), m);
        assert!(m.mul(&m).is_empty());
        assert_eq!(m.order(), Some(2));
        let eta = CharGen::new("eta", Some(3));
        let e = CharSymbol::gen(&eta);
        assert_eq!(e.pow(2), e.inv());
        assert_eq!(e.pow(3), CharSymbol::trivial());
        assert_eq!(e.pow(2).to_string(), "eta^2");
    }

    #[test]
    fn triviality_rules() {
        let omega = CharGen::new("omega", None);
        let chi = CharGen::new("chi", Some(5));
        let nu = CharGen::nontrivial("nu");
        assert_eq!(CharSymbol::trivial().triviality(), Triviality::Trivial);
        assert_eq!(CharSymbol::gen(&omega).triviality(), Triviality::Unknown);
        assert_eq!(CharSymbol::gen(&chi).triviality(), Triviality::Nontrivial);
        assert_eq!(CharSymbol::gen(&nu).triviality(), Triviality::Nontrivial);
        assert_eq!(CharSymbol::gen(&nu).pow(2).triviality(), Triviality::Unknown);
        let mixed = CharSymbol::gen(&chi).with(&omega, 3);
        assert_eq!(mixed.triviality(), Triviality::Unknown);
        assert_eq!(mixed.order(), None);
        assert_eq!(CharSymbol::gen(&chi).pow(2).order(), Some(5));
        assert_eq!(CharSymbol::gen(&chi).at_most_quadratic(), Some(false));
        assert_eq!(CharSymbol::trivial().at_most_quadratic(), Some(true));
    }

    proptest! {
        #[test]
        fn group_laws(a in -6i64..6, b in -6i64..6, c in -6i64..6, d in -6i64..6) {
            let x = CharGen::new("x", None);
            let y = CharGen::new("y", Some(4));
            let s = CharSymbol::trivial().with(&x, a).with(&y, b);
            let t = CharSymbol::trivial().with(&x, c).with(&y, d);
            prop_assert_eq!(s.mul(&t), t.mul(&s));
            prop_assert!(s.mul(&s.inv()).is_empty());
            prop_assert_eq!(s.mul(&t).inv(), s.inv().mul(&t.inv()));
            prop_assert_eq!(s.pow(2), s.mul(&s));
        }
    }
}

super::serialize_as_display!(CharSymbol);
