//! Exact arithmetic in the real quadratic field Q(√5).
//!
//! An element is stored as `a + b√5` with rational `a`, `b`. The coefficient
//! type is generic: anything implementing [`Coefficient`] works, which in
//! practice means `num_rational::Ratio<I>` for an exact integer type `I`.
//! Floating-point coefficients are deliberately not supported.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational coefficients for [`QSqrt5`].
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + FromStr + Signed + Send + Sync
{
    fn from_i64(value: i64) -> Self;

    /// `Some(n)` if the value is an integer that fits in an `i64`.
    fn to_integer(&self) -> Option<i64>;
}

impl<I> Coefficient for Ratio<I>
where
    I: Integer
        + Signed
        + Clone
        + FromPrimitive
        + ToPrimitive
        + fmt::Debug
        + fmt::Display
        + FromStr
        + Send
        + Sync,
{
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(I::from_i64(value).expect("i64 fits in coefficient integer type"))
    }

    fn to_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

/// `a + b√5` with exact rational `a` and `b`.
///
/// Coefficients are kept in lowest terms by the underlying rational type, so
/// derived equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QSqrt5<T> {
    a: T,
    b: T,
}

impl<T: Coefficient> QSqrt5<T> {
    pub fn new(a: T, b: T) -> Self {
        Self { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(T::from_i64(n), T::zero())
    }

    /// `(a_num / a_den) + (b_num / b_den)·√5`.
    pub fn from_fractions(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        assert!(a_den != 0 && b_den != 0, "zero denominator");
        Self::new(
            T::from_i64(a_num) / T::from_i64(a_den),
            T::from_i64(b_num) / T::from_i64(b_den),
        )
    }

    pub fn sqrt5() -> Self {
        Self::new(T::zero(), T::one())
    }

    /// The golden ratio `(1 + √5)/2`.
    pub fn golden() -> Self {
        Self::from_fractions(1, 2, 1, 2)
    }

    pub fn rational_part(&self) -> &T {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &T {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `Some(n)` if this is the rational integer `n`.
    pub fn to_integer(&self) -> Option<i64> {
        if self.is_rational() {
            self.a.to_integer()
        } else {
            None
        }
    }

    /// The nontrivial automorphism `√5 ↦ -√5`.
    pub fn conj_tau(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² - 5b²`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - T::from_i64(5) * self.b.clone() * self.b.clone()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(self.a.clone() / n.clone(), -self.b.clone() / n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.a.clone() * k.clone(), self.b.clone() * k.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Coefficient> Zero for QSqrt5<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Coefficient> One for QSqrt5<T> {
    fn one() -> Self {
        Self::new(T::one(), T::zero())
    }
}

impl<T: Coefficient> Add<&QSqrt5<T>> for &QSqrt5<T> {
    type Output = QSqrt5<T>;
    fn add(self, rhs: &QSqrt5<T>) -> QSqrt5<T> {
        QSqrt5::new(self.a.clone() + rhs.a.clone(), self.b.clone() + rhs.b.clone())
    }
}

impl<T: Coefficient> Sub<&QSqrt5<T>> for &QSqrt5<T> {
    type Output = QSqrt5<T>;
    fn sub(self, rhs: &QSqrt5<T>) -> QSqrt5<T> {
        QSqrt5::new(self.a.clone() - rhs.a.clone(), self.b.clone() - rhs.b.clone())
    }
}

impl<T: Coefficient> Mul<&QSqrt5<T>> for &QSqrt5<T> {
    type Output = QSqrt5<T>;
    fn mul(self, rhs: &QSqrt5<T>) -> QSqrt5<T> {
        let five = T::from_i64(5);
        QSqrt5::new(
            self.a.clone() * rhs.a.clone() + five * self.b.clone() * rhs.b.clone(),
            self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.a.clone(),
        )
    }
}

impl<T: Coefficient> Neg for &QSqrt5<T> {
    type Output = QSqrt5<T>;
    fn neg(self) -> QSqrt5<T> {
        QSqrt5::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Coefficient> $tr for QSqrt5<T> {
            type Output = QSqrt5<T>;
            fn $method(self, rhs: QSqrt5<T>) -> QSqrt5<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Coefficient> $tr<&QSqrt5<T>> for QSqrt5<T> {
            type Output = QSqrt5<T>;
            fn $method(self, rhs: &QSqrt5<T>) -> QSqrt5<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coefficient> Neg for QSqrt5<T> {
    type Output = QSqrt5<T>;
    fn neg(self) -> QSqrt5<T> {
        -&self
    }
}

impl<T: Coefficient> std::iter::Sum for QSqrt5<T> {
    fn sum<It: Iterator<Item = Self>>(iter: It) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

/// Renders as `a + b√5`, dropping zero parts: `3`, `-√5`, `1/2 + 1/2√5`.
impl<T: Coefficient> fmt::Display for QSqrt5<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = |b: &T| -> String {
            if b.is_one() {
                "√5".to_string()
            } else {
                format!("{b}√5")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => {
                if self.b.is_negative() {
                    write!(f, "-{}", surd(&self.b.abs()))
                } else {
                    write!(f, "{}", surd(&self.b))
                }
            }
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}", self.a, surd(&self.b.abs()))
                } else {
                    write!(f, "{} + {}", self.a, surd(&self.b))
                }
            }
        }
    }
}

/// Parses the rendering produced by `Display`; `sqrt5` is accepted for `√5`.
impl<T: Coefficient> FromStr for QSqrt5<T> {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = || Error::ScalarParse {
            input: input.to_string(),
        };
        let parse_coeff = |s: &str| -> Result<T> {
            let s = s.strip_prefix('+').unwrap_or(s);
            if s.is_empty() || s.starts_with(['+', '-']) && s.len() == 1 {
                return Err(bad());
            }
            s.parse::<T>().map_err(|_| bad())
        };

        let compact: String = input
            .replace("sqrt5", "√5")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let Some(prefix) = compact.strip_suffix("√5") else {
            return Ok(Self::new(parse_coeff(&compact)?, T::zero()));
        };
        if prefix.contains('√') {
            return Err(bad());
        }
        // Split at the last sign that is not leading and not part of a fraction.
        let split = prefix
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (a_text, b_text) = match split {
            Some(i) => (&prefix[..i], &prefix[i..]),
            None => ("", prefix),
        };
        let a = if a_text.is_empty() {
            T::zero()
        } else {
            parse_coeff(a_text)?
        };
        let b = match b_text {
            "" | "+" => T::one(),
            "-" => -T::one(),
            other => parse_coeff(other)?,
        };
        Ok(Self::new(a, b))
    }
}

/// Machine-readable form: both parts as rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRecord {
    pub a: String,
    pub b: String,
}

impl<T: Coefficient> From<&QSqrt5<T>> for ScalarRecord {
    fn from(x: &QSqrt5<T>) -> Self {
        ScalarRecord {
            a: x.a.to_string(),
            b: x.b.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactScalar;
    use num_rational::Rational64;

    fn s(text: &str) -> ExactScalar {
        text.parse().unwrap()
    }

    #[test]
    fn golden_conjugates_multiply_to_minus_one() {
        let phi = ExactScalar::golden();
        assert_eq!(&phi * &phi.conj_tau(), ExactScalar::from_int(-1));
    }

    #[test]
    fn additive_identity() {
        let x = s("3/7 - 2√5");
        assert_eq!(&x + &ExactScalar::zero(), x);
    }

    #[test]
    fn golden_square() {
        let phi = ExactScalar::golden();
        assert_eq!(&phi * &phi, ExactScalar::from_fractions(3, 2, 1, 2));
    }

    #[test]
    fn inverses() {
        assert_eq!(
            ExactScalar::from_int(2).inv().unwrap(),
            ExactScalar::from_fractions(1, 2, 0, 1)
        );
        let phi = ExactScalar::golden();
        let phi_inv = phi.inv().unwrap();
        assert_eq!(phi_inv, ExactScalar::from_fractions(-1, 2, 1, 2));
        assert!((&phi * &phi_inv).is_one());
        let root = ExactScalar::sqrt5();
        assert_eq!(root.inv().unwrap(), ExactScalar::from_fractions(0, 1, 1, 5));
        assert_eq!(ExactScalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn tau_swaps_golden_pair_and_fixes_rationals() {
        assert_eq!(
            ExactScalar::golden().conj_tau(),
            ExactScalar::from_fractions(1, 2, -1, 2)
        );
        assert_eq!(ExactScalar::from_int(3).conj_tau(), ExactScalar::from_int(3));
        let x = s("5/3 + 7/2√5");
        assert_eq!(x.conj_tau().conj_tau(), x);
    }

    #[test]
    fn rendering() {
        assert_eq!(ExactScalar::golden().to_string(), "1/2 + 1/2√5");
        assert_eq!(ExactScalar::from_fractions(0, 1, -1, 1).to_string(), "-√5");
        assert_eq!(ExactScalar::from_fractions(-1, 2, -3, 4).to_string(), "-1/2 - 3/4√5");
        assert_eq!(ExactScalar::from_int(0).to_string(), "0");
        assert_eq!(ExactScalar::from_int(-4).to_string(), "-4");
    }

    #[test]
    fn parsing_variants() {
        assert_eq!(s("√5"), ExactScalar::sqrt5());
        assert_eq!(s("-sqrt5"), -ExactScalar::sqrt5());
        assert_eq!(s("1/2+1/2√5"), ExactScalar::golden());
        assert_eq!(s("-1/2 - √5"), ExactScalar::from_fractions(-1, 2, -1, 1));
        assert_eq!(s("2/3√5"), ExactScalar::from_fractions(0, 1, 2, 3));
        for junk in ["", "√5√5", "1 + ", "abc", "1/0", "+"] {
            assert!(junk.parse::<ExactScalar>().is_err(), "{junk:?} parsed");
        }
    }

    #[test]
    fn small_coefficients_agree_with_big() {
        type Small = QSqrt5<Rational64>;
        let x = Small::golden();
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(x.to_string(), ExactScalar::golden().to_string());
    }

    fn arb_scalar() -> impl proptest::strategy::Strategy<Value = ExactScalar> {
        use proptest::prelude::*;
        (-30i64..30, 1i64..12, -30i64..30, 1i64..12)
            .prop_map(|(an, ad, bn, bd)| ExactScalar::from_fractions(an, ad, bn, bd))
    }

    proptest::proptest! {
        #[test]
        fn field_axioms(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            proptest::prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            proptest::prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            proptest::prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            proptest::prop_assert_eq!(&x * &y, &y * &x);
        }

        #[test]
        fn tau_is_a_ring_automorphism(x in arb_scalar(), y in arb_scalar()) {
            proptest::prop_assert_eq!((&x * &y).conj_tau(), &x.conj_tau() * &y.conj_tau());
            proptest::prop_assert_eq!((&x + &y).conj_tau(), &x.conj_tau() + &y.conj_tau());
        }

        #[test]
        fn inverse_is_exact(x in arb_scalar()) {
            proptest::prop_assume!(!x.is_zero());
            proptest::prop_assert!((&x * &x.inv().unwrap()).is_one());
        }

        #[test]
        fn display_round_trips(x in arb_scalar()) {
            let back: ExactScalar = x.to_string().parse().unwrap();
            proptest::prop_assert_eq!(back, x);
        }
    }
}
