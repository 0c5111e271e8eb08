//! The character table of SL2(F5) and class-function arithmetic.
//!
//! The nine irreducible rows are embedded as literal data and then checked
//! exhaustively ([`CharacterTable::verify_table`]); nothing here computes a
//! character table from scratch. Tensor products are pointwise products of
//! class functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{build_sl2f5, GroupTable, NUM_CLASSES};
use crate::report::Report;
use crate::scalar::{Coefficient, QSqrt5};
use crate::Rational;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum IrrepName {
    U,
    V,
    W,
    X1,
    X2,
    #[serde(rename = "W'")]
    WPrime,
    #[serde(rename = "W''")]
    WDoublePrime,
    #[serde(rename = "X'")]
    XPrime,
    #[serde(rename = "X''")]
    XDoublePrime,
}

impl IrrepName {
    /// Row order of the table.
    pub const ALL: [IrrepName; 9] = [
        IrrepName::U,
        IrrepName::V,
        IrrepName::W,
        IrrepName::X1,
        IrrepName::X2,
        IrrepName::WPrime,
        IrrepName::WDoublePrime,
        IrrepName::XPrime,
        IrrepName::XDoublePrime,
    ];

    /// The standard 2-dimensional representation.
    pub const RHO_ICO: IrrepName = IrrepName::XPrime;

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn dim(self) -> u32 {
        [1, 5, 6, 4, 4, 3, 3, 2, 2][self.index()]
    }

    /// Rows on which `-I` acts by `-1`.
    pub fn is_odd(self) -> bool {
        matches!(
            self,
            IrrepName::W | IrrepName::X1 | IrrepName::XPrime | IrrepName::XDoublePrime
        )
    }

    /// Galois conjugation as a permutation of names.
    pub fn tau(self) -> IrrepName {
        match self {
            IrrepName::WPrime => IrrepName::WDoublePrime,
            IrrepName::WDoublePrime => IrrepName::WPrime,
            IrrepName::XPrime => IrrepName::XDoublePrime,
            IrrepName::XDoublePrime => IrrepName::XPrime,
            other => other,
        }
    }

    pub fn as_str(self) -> &'static str {
        ["U", "V", "W", "X1", "X2", "W'", "W''", "X'", "X''"][self.index()]
    }
}

impl fmt::Display for IrrepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IrrepName {
    type Err = Error;

    /// Accepts the ASCII names and the typographic ones (`X′`, `W″`, `X₁`).
    fn from_str(s: &str) -> Result<Self> {
        let normalized = s
            .trim()
            .replace('″', "''")
            .replace('′', "'")
            .replace('₁', "1")
            .replace('₂', "2");
        IrrepName::ALL
            .into_iter()
            .find(|n| n.as_str() == normalized)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown irreducible `{s}`")))
    }
}

/// A function on the nine conjugacy classes, in table column order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction<T = Rational> {
    values: [QSqrt5<T>; NUM_CLASSES],
}

impl<T: Coefficient> ClassFunction<T> {
    pub fn new(values: [QSqrt5<T>; NUM_CLASSES]) -> Self {
        ClassFunction { values }
    }

    pub fn from_fn(f: impl FnMut(usize) -> QSqrt5<T>) -> Self {
        ClassFunction {
            values: std::array::from_fn(f),
        }
    }

    pub fn constant(x: QSqrt5<T>) -> Self {
        Self::from_fn(|_| x.clone())
    }

    pub fn zero() -> Self {
        Self::constant(QSqrt5::zero())
    }

    pub fn values(&self) -> &[QSqrt5<T>; NUM_CLASSES] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &QSqrt5<T> {
        &self.values[class]
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &QSqrt5<T> {
        &self.values[0]
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = QSqrt5::from_int(k);
        Self::from_fn(|c| &self.values[c] * &k)
    }

    /// Entrywise `√5 ↦ -√5`.
    pub fn galois_tau(&self) -> Self {
        Self::from_fn(|c| self.values[c].conj_tau())
    }

    pub fn with_value(mut self, class: usize, value: QSqrt5<T>) -> Self {
        self.values[class] = value;
        self
    }
}

impl<T: Coefficient> Add for &ClassFunction<T> {
    type Output = ClassFunction<T>;
    fn add(self, rhs: &ClassFunction<T>) -> ClassFunction<T> {
        ClassFunction::from_fn(|c| &self.values[c] + &rhs.values[c])
    }
}

/// Pointwise product: the character of the tensor product.
impl<T: Coefficient> Mul for &ClassFunction<T> {
    type Output = ClassFunction<T>;
    fn mul(self, rhs: &ClassFunction<T>) -> ClassFunction<T> {
        ClassFunction::from_fn(|c| &self.values[c] * &rhs.values[c])
    }
}

impl<T: Coefficient> fmt::Display for ClassFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A character written as a sum of irreducibles with positive multiplicities.
#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize)]
pub struct Decomposition(BTreeMap<IrrepName, u32>);

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(name: IrrepName) -> Self {
        Self::from_pairs([(name, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (IrrepName, u32)>) -> Self {
        let mut d = Self::new();
        for (name, mult) in pairs {
            d.add(name, mult);
        }
        d
    }

    pub fn add(&mut self, name: IrrepName, mult: u32) {
        if mult > 0 {
            *self.0.entry(name).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, name: IrrepName) -> u32 {
        self.0.get(&name).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (IrrepName, u32)> + '_ {
        self.0.iter().map(|(&n, &m)| (n, m))
    }

    pub fn is_irreducible(&self) -> bool {
        self.0.len() == 1 && self.0.values().all(|&m| m == 1)
    }

    /// Sum of squared multiplicities.
    pub fn norm_squared(&self) -> u32 {
        self.0.values().map(|m| m * m).sum()
    }

    pub fn dim(&self) -> u32 {
        self.iter().map(|(n, m)| n.dim() * m).sum()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(n, m)| if m == 1 { n.to_string() } else { format!("{m}·{n}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Table entries in the literal data below.
///
/// Two entries differ from the commonly reproduced printing of this table:
/// the 6-dimensional row is odd (`W(-I) = -6`, as for any odd symmetric
/// power of a faithful 2-dimensional representation), and `X1` takes the
/// value `-1` on the order-6 class and `1` on the order-3 class. The printed
/// variant fails both orthogonality relations; see
/// `printed_variant_fails_orthogonality` in the tests.
#[derive(Clone, Copy)]
enum Entry {
    Int(i64),
    /// (1 + √5)/2
    Phi,
    /// (1 - √5)/2
    PhiBar,
    NegPhi,
    NegPhiBar,
}

impl Entry {
    fn value<T: Coefficient>(self) -> QSqrt5<T> {
        match self {
            Entry::Int(n) => QSqrt5::from_int(n),
            Entry::Phi => QSqrt5::from_fractions(1, 2, 1, 2),
            Entry::PhiBar => QSqrt5::from_fractions(1, 2, -1, 2),
            Entry::NegPhi => QSqrt5::from_fractions(-1, 2, -1, 2),
            Entry::NegPhiBar => QSqrt5::from_fractions(-1, 2, 1, 2),
        }
    }
}

const TABLE_DATA: [[Entry; NUM_CLASSES]; 9] = {
    use Entry::*;
    [
        [Int(1), Int(1), Int(1), Int(1), Int(1), Int(1), Int(1), Int(1), Int(1)],
        [Int(5), Int(5), Int(0), Int(0), Int(0), Int(0), Int(1), Int(-1), Int(-1)],
        [Int(6), Int(-6), Int(1), Int(1), Int(-1), Int(-1), Int(0), Int(0), Int(0)],
        [Int(4), Int(-4), Int(-1), Int(-1), Int(1), Int(1), Int(0), Int(-1), Int(1)],
        [Int(4), Int(4), Int(-1), Int(-1), Int(-1), Int(-1), Int(0), Int(1), Int(1)],
        [Int(3), Int(3), Phi, PhiBar, Phi, PhiBar, Int(-1), Int(0), Int(0)],
        [Int(3), Int(3), PhiBar, Phi, PhiBar, Phi, Int(-1), Int(0), Int(0)],
        [Int(2), Int(-2), NegPhi, NegPhiBar, Phi, PhiBar, Int(0), Int(1), Int(-1)],
        [Int(2), Int(-2), NegPhiBar, NegPhi, PhiBar, Phi, Int(0), Int(1), Int(-1)],
    ]
};

/// The nine irreducible characters together with the class data they need
/// (sizes and power maps).
#[derive(Clone, Debug)]
pub struct CharacterTable<T = Rational> {
    group: GroupTable,
    rows: [ClassFunction<T>; 9],
}

impl<T: Coefficient> CharacterTable<T> {
    /// The embedded table over a freshly built SL2(F5).
    pub fn standard() -> Result<Self> {
        Ok(Self::from_group(build_sl2f5()?))
    }

    pub fn from_group(group: GroupTable) -> Self {
        let rows = std::array::from_fn(|i| ClassFunction::from_fn(|c| TABLE_DATA[i][c].value()));
        CharacterTable { group, rows }
    }

    /// Arbitrary rows, unchecked. Used to exercise `verify_table` on bad data.
    pub fn from_rows(group: GroupTable, rows: [ClassFunction<T>; 9]) -> Self {
        CharacterTable { group, rows }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn row(&self, name: IrrepName) -> &ClassFunction<T> {
        &self.rows[name.index()]
    }

    pub fn rows(&self) -> impl Iterator<Item = (IrrepName, &ClassFunction<T>)> {
        IrrepName::ALL.into_iter().map(move |n| (n, self.row(n)))
    }

    pub fn trivial(&self) -> &ClassFunction<T> {
        self.row(IrrepName::U)
    }

    /// `(1/|G|) Σ_c |c| f(c) conj(g(c))`.
    ///
    /// Every value of this group's characters is real, so complex
    /// conjugation is the identity on Q(√5) here and is omitted.
    pub fn inner_product(&self, f: &ClassFunction<T>, g: &ClassFunction<T>) -> QSqrt5<T> {
        let total: QSqrt5<T> = self
            .group
            .classes()
            .iter()
            .map(|class| {
                let size = QSqrt5::from_int(class.size as i64);
                &(&size * f.value(class.index)) * g.value(class.index)
            })
            .sum();
        total.scale(&(T::one() / T::from_i64(self.group.order() as i64)))
    }

    pub fn decompose(&self, f: &ClassFunction<T>) -> Result<Decomposition> {
        let products: Vec<(IrrepName, QSqrt5<T>)> = self
            .rows()
            .map(|(name, row)| (name, self.inner_product(f, row)))
            .collect();
        let mut out = Decomposition::new();
        let mut ok = true;
        for (name, p) in &products {
            match p.to_integer() {
                Some(k) if k >= 0 => out.add(*name, k as u32),
                _ => ok = false,
            }
        }
        if !ok {
            let listing: Vec<String> = products.iter().map(|(n, p)| format!("{n}: {p}")).collect();
            return Err(Error::NotACharacter {
                products: listing.join(", "),
            });
        }
        Ok(out)
    }

    pub fn reconstruct(&self, d: &Decomposition) -> ClassFunction<T> {
        d.iter().fold(ClassFunction::zero(), |acc, (name, m)| {
            &acc + &self.row(name).scale_int(m as i64)
        })
    }

    /// Value at inverses: the character of the dual representation.
    pub fn dual_char(&self, f: &ClassFunction<T>) -> ClassFunction<T> {
        ClassFunction::from_fn(|c| f.value(self.group.inverse_class(c)).clone())
    }

    pub fn galois_tau_char(&self, f: &ClassFunction<T>) -> ClassFunction<T> {
        f.galois_tau()
    }

    /// Symmetric powers of any 2-dimensional character, via
    /// `S^n = f·S^{n-1} - det·S^{n-2}` with `det(c) = (f(c)² - f(c²))/2`.
    pub fn sym_power(&self, f: &ClassFunction<T>, n: u32) -> Result<ClassFunction<T>> {
        if f.degree() != &QSqrt5::from_int(2) {
            return Err(Error::NotTwoDimensional {
                dimension: f.degree().to_string(),
            });
        }
        let half = T::one() / T::from_i64(2);
        let det = ClassFunction::from_fn(|c| {
            let square = f.value(self.group.class_power(c, 2));
            (&(f.value(c) * f.value(c)) - square).scale(&half)
        });
        let mut prev = ClassFunction::constant(QSqrt5::one());
        if n == 0 {
            return Ok(prev);
        }
        let mut cur = f.clone();
        for _ in 1..n {
            let next = ClassFunction::from_fn(|c| {
                &(f.value(c) * cur.value(c)) - &(det.value(c) * prev.value(c))
            });
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    /// `sym^n` of one of the two 2-dimensional irreducibles.
    pub fn sym_power_char(&self, name: IrrepName, n: u32) -> Result<ClassFunction<T>> {
        if name.dim() != 2 {
            return Err(Error::NotTwoDimensional {
                dimension: name.dim().to_string(),
            });
        }
        self.sym_power(self.row(name), n)
    }

    /// Exact checks of the embedded data: class sizes, both orthogonality
    /// relations, the degree sum and the Galois structure of the rows.
    pub fn verify_table(&self) -> Report {
        let mut report = Report::new("character table");
        let sizes = self.group.class_sizes();
        report.check(
            "class sizes",
            sizes == [1, 1, 12, 12, 12, 12, 30, 20, 20],
            format!("{sizes:?}"),
        );

        let dims: Vec<Option<i64>> = self.rows.iter().map(|r| r.degree().to_integer()).collect();
        let expected_dims: Vec<Option<i64>> =
            IrrepName::ALL.iter().map(|n| Some(n.dim() as i64)).collect();
        report.check("dimensions", dims == expected_dims, format!("{dims:?}"));
        let dim_square_sum: QSqrt5<T> = self.rows.iter().map(|r| r.degree() * r.degree()).sum();
        report.check(
            "sum of squared dimensions",
            dim_square_sum == QSqrt5::from_int(self.group.order() as i64),
            format!("{dim_square_sum}"),
        );

        let mut row_failures = Vec::new();
        let mut pairs = 0;
        for i in 0..9 {
            for j in i..9 {
                pairs += 1;
                let ip = self.inner_product(&self.rows[i], &self.rows[j]);
                let expected = if i == j { QSqrt5::one() } else { QSqrt5::zero() };
                if ip != expected {
                    row_failures.push(format!(
                        "<{}, {}> = {ip}, expected {expected}",
                        IrrepName::ALL[i],
                        IrrepName::ALL[j]
                    ));
                }
            }
        }
        report.check(
            "row orthogonality",
            row_failures.is_empty(),
            if row_failures.is_empty() {
                format!("{pairs} pairs exact")
            } else {
                row_failures.join("; ")
            },
        );

        let mut col_failures = Vec::new();
        for c in 0..NUM_CLASSES {
            for d in c..NUM_CLASSES {
                let sum: QSqrt5<T> = self
                    .rows
                    .iter()
                    .map(|r| r.value(c) * r.value(self.group.inverse_class(d)))
                    .sum();
                let expected = if c == d {
                    QSqrt5::from_int((self.group.order() / sizes[c]) as i64)
                } else {
                    QSqrt5::zero()
                };
                if sum != expected {
                    col_failures.push(format!("columns {c},{d}: {sum}, expected {expected}"));
                }
            }
        }
        report.check(
            "column orthogonality",
            col_failures.is_empty(),
            if col_failures.is_empty() {
                "45 pairs exact".to_string()
            } else {
                col_failures.join("; ")
            },
        );

        let mut tau_failures = Vec::new();
        for name in IrrepName::ALL {
            if self.row(name).galois_tau() != *self.row(name.tau()) {
                tau_failures.push(format!("tau({name}) != {}", name.tau()));
            }
        }
        report.check(
            "Galois conjugation swaps W'/W'' and X'/X'', fixes the rational rows",
            tau_failures.is_empty(),
            tau_failures.join("; "),
        );

        let self_dual_failures: Vec<String> = self
            .rows()
            .filter(|(_, r)| self.dual_char(r) != **r)
            .map(|(n, _)| n.to_string())
            .collect();
        report.check(
            "every row is self-dual (real-valued)",
            self_dual_failures.is_empty(),
            self_dual_failures.join(", "),
        );
        report
    }

    /// The decomposition identities among symmetric powers and tensor
    /// products of the two 2-dimensional irreducibles.
    pub fn verify_identities(&self) -> Report {
        use IrrepName::*;
        let mut report = Report::new("symmetric power and tensor identities");
        let sym = |name, n| self.sym_power_char(name, n);
        let tensor = |a: IrrepName, b: IrrepName| Ok(self.row(a) * self.row(b));

        type Side<'a, T> = (&'a str, Result<ClassFunction<T>>);
        let cases: Vec<(&str, Vec<Side<T>>, Decomposition)> = vec![
            ("sym^2(X') = W'", vec![("sym^2(X')", sym(XPrime, 2))], Decomposition::single(WPrime)),
            ("sym^2(X'') = W''", vec![("sym^2(X'')", sym(XDoublePrime, 2))], Decomposition::single(WDoublePrime)),
            ("sym^3(X') = X1", vec![("sym^3(X')", sym(XPrime, 3))], Decomposition::single(X1)),
            ("sym^3(X'') = X1", vec![("sym^3(X'')", sym(XDoublePrime, 3))], Decomposition::single(X1)),
            ("sym^4(X') = V", vec![("sym^4(X')", sym(XPrime, 4))], Decomposition::single(V)),
            ("sym^4(X'') = V", vec![("sym^4(X'')", sym(XDoublePrime, 4))], Decomposition::single(V)),
            ("X' * X'' = X2", vec![("X' * X''", tensor(XPrime, XDoublePrime))], Decomposition::single(X2)),
            (
                "sym^5(X') = W = sym^5(X'')",
                vec![("sym^5(X')", sym(XPrime, 5)), ("sym^5(X'')", sym(XDoublePrime, 5))],
                Decomposition::single(W),
            ),
            (
                "W' * X'' = W = W'' * X'",
                vec![("W' * X''", tensor(WPrime, XDoublePrime)), ("W'' * X'", tensor(WDoublePrime, XPrime))],
                Decomposition::single(W),
            ),
            (
                "sym^6(X') = W'' + X2",
                vec![("sym^6(X')", sym(XPrime, 6))],
                Decomposition::from_pairs([(WDoublePrime, 1), (X2, 1)]),
            ),
            (
                "sym^7(X') = X'' + W",
                vec![("sym^7(X')", sym(XPrime, 7))],
                Decomposition::from_pairs([(XDoublePrime, 1), (W, 1)]),
            ),
        ];

        for (label, sides, expected) in cases {
            let mut details = Vec::new();
            let mut ok = true;
            for (side, value) in sides {
                match value.and_then(|f| self.decompose(&f)) {
                    Ok(d) => {
                        ok &= d == expected;
                        details.push(format!("{side} = {d}"));
                    }
                    Err(e) => {
                        ok = false;
                        details.push(format!("{side}: {e}"));
                    }
                }
            }
            details.push(format!("expected {expected}"));
            report.check(label, ok, details.join("; "));
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactScalar, Table};
    use num_rational::Rational64;
    use IrrepName::*;

    fn table() -> Table {
        Table::standard().unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let t = table();
        assert_eq!(t.inner_product(t.row(V), t.row(V)), ExactScalar::one());
        assert_eq!(t.inner_product(t.row(U), t.row(W)), ExactScalar::zero());
        let twice = t.row(U).scale_int(2);
        assert_eq!(t.inner_product(&twice, &twice), ExactScalar::from_int(4));
    }

    #[test]
    fn decompose_examples() {
        let t = table();
        assert_eq!(
            t.decompose(&(t.row(XPrime) * t.row(XDoublePrime))).unwrap(),
            Decomposition::single(X2)
        );
        assert_eq!(
            t.decompose(&(t.row(XPrime) * t.row(XPrime))).unwrap(),
            Decomposition::from_pairs([(U, 1), (WPrime, 1)])
        );
        assert_eq!(t.decompose(t.row(U)).unwrap(), Decomposition::single(U));
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let t = table();
        let half = t.row(U).galois_tau().with_value(0, ExactScalar::from_int(2));
        assert!(matches!(t.decompose(&half), Err(Error::NotACharacter { .. })));
        let negative = t.row(V).scale_int(-1);
        assert!(t.decompose(&negative).is_err());
    }

    #[test]
    fn sym_power_examples() {
        let t = table();
        let s2 = t.sym_power_char(XPrime, 2).unwrap();
        assert_eq!(&s2, t.row(WPrime));
        assert_eq!(s2.value(2), &ExactScalar::golden());
        assert_eq!(&t.sym_power_char(XPrime, 0).unwrap(), t.row(U));
        assert_eq!(&t.sym_power_char(XPrime, 1).unwrap(), t.row(XPrime));
        assert_eq!(&t.sym_power_char(XPrime, 5).unwrap(), t.row(W));
        assert!(t.sym_power_char(W, 2).is_err());
        assert!(t.sym_power(t.row(V), 3).is_err());
    }

    #[test]
    fn dual_and_tau() {
        let t = table();
        assert_eq!(&t.dual_char(t.row(XPrime)), t.row(XPrime));
        assert_eq!(&t.dual_char(t.row(U)), t.row(U));
        let f = t.row(WPrime) + &t.row(X1).scale_int(3);
        assert_eq!(t.dual_char(&t.dual_char(&f)), f);
        assert_eq!(&t.galois_tau_char(t.row(XPrime)), t.row(XDoublePrime));
        assert_eq!(&t.galois_tau_char(t.row(WPrime)), t.row(WDoublePrime));
        assert_eq!(&t.galois_tau_char(t.row(V)), t.row(V));
        for name in IrrepName::ALL {
            assert_eq!(&t.galois_tau_char(t.row(name)), t.row(name.tau()));
        }
    }

    #[test]
    fn table_verifies() {
        let report = table().verify_table();
        assert!(report.passed(), "{report}");
        let dims: Vec<u32> = IrrepName::ALL.iter().map(|n| n.dim()).collect();
        assert_eq!(dims, [1, 5, 6, 4, 4, 3, 3, 2, 2]);
    }

    #[test]
    fn perturbed_table_is_flagged() {
        let t = table();
        let mut rows: [ClassFunction; 9] = std::array::from_fn(|i| t.row(IrrepName::ALL[i]).clone());
        let bumped = rows[1].value(6) + &ExactScalar::one();
        rows[1] = rows[1].clone().with_value(6, bumped);
        let bad = CharacterTable::from_rows(t.group().clone(), rows);
        let report = bad.verify_table();
        assert!(!report.passed());
        assert!(report
            .failures()
            .any(|c| c.name == "column orthogonality"));
    }

    #[test]
    fn printed_variant_fails_orthogonality() {
        let t = table();
        let mut rows: [ClassFunction; 9] = std::array::from_fn(|i| t.row(IrrepName::ALL[i]).clone());
        rows[W.index()] = rows[W.index()].clone().with_value(1, ExactScalar::from_int(6));
        rows[X1.index()] = rows[X1.index()]
            .clone()
            .with_value(7, ExactScalar::from_int(1))
            .with_value(8, ExactScalar::from_int(-1));
        let report = CharacterTable::from_rows(t.group().clone(), rows).verify_table();
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"row orthogonality"));
        assert!(failed.contains(&"column orthogonality"));
    }

    #[test]
    fn identities_hold() {
        let report = table().verify_identities();
        assert_eq!(report.checks.len(), 11);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn irreducible_iff_unit_norm() {
        let t = table();
        for (a, ra) in t.rows() {
            assert_eq!(t.inner_product(ra, ra), ExactScalar::one());
            for (b, rb) in t.rows() {
                let sum = ra + rb;
                let norm = t.inner_product(&sum, &sum);
                assert_eq!(norm, ExactScalar::from_int(if a == b { 4 } else { 2 }));
            }
        }
    }

    #[test]
    fn name_parsing() {
        assert_eq!("X'".parse::<IrrepName>().unwrap(), XPrime);
        assert_eq!("W″".parse::<IrrepName>().unwrap(), WDoublePrime);
        assert_eq!("X₁".parse::<IrrepName>().unwrap(), X1);
        assert!("Y".parse::<IrrepName>().is_err());
        for n in IrrepName::ALL {
            assert_eq!(n.to_string().parse::<IrrepName>().unwrap(), n);
        }
    }

    #[test]
    fn odd_rows_match_table() {
        let t = table();
        for (name, row) in t.rows() {
            let at_minus_i = row.value(1);
            let expected = if name.is_odd() { -row.degree() } else { row.degree().clone() };
            assert_eq!(at_minus_i, &expected, "{name}");
        }
    }

    #[test]
    fn small_rational_table_also_verifies() {
        let t = CharacterTable::<Rational64>::standard().unwrap();
        assert!(t.verify_table().passed());
        assert!(t.verify_identities().passed());
    }

    proptest::proptest! {
        #[test]
        fn decompose_reconstruct_roundtrip(mults in proptest::collection::vec(0u32..=3, 9)) {
            let t = table();
            let d = Decomposition::from_pairs(IrrepName::ALL.into_iter().zip(mults));
            let f = t.reconstruct(&d);
            proptest::prop_assert_eq!(t.decompose(&f).unwrap(), d);
        }
    }
}
