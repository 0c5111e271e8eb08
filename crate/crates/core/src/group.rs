//! SL2(F5), built by exhaustive enumeration.
//!
//! The nine conjugacy classes are ordered by the representatives
//! [`CLASS_REPRESENTATIVES`], which is the column order of the character
//! table in [`crate::chartab`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const P: u8 = 5;
pub const GROUP_ORDER: usize = 120;
pub const NUM_CLASSES: usize = 9;

/// A 2×2 matrix over F5, entries row-major in `0..5`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct GroupElement([u8; 4]);

impl GroupElement {
    /// Entries are reduced mod 5; the determinant is not checked.
    pub const fn new_unchecked(a: i64, b: i64, c: i64, d: i64) -> Self {
        GroupElement([
            a.rem_euclid(P as i64) as u8,
            b.rem_euclid(P as i64) as u8,
            c.rem_euclid(P as i64) as u8,
            d.rem_euclid(P as i64) as u8,
        ])
    }

    /// Fails unless the determinant is 1 mod 5.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let g = Self::new_unchecked(a, b, c, d);
        if g.det() != 1 {
            return Err(Error::NotInSl2(g.to_string()));
        }
        Ok(g)
    }

    pub const fn identity() -> Self {
        GroupElement([1, 0, 0, 1])
    }

    pub fn entries(&self) -> [u8; 4] {
        self.0
    }

    pub fn det(&self) -> u8 {
        let [a, b, c, d] = self.0.map(u32::from);
        ((a * d + 4 * ((b * c) % 5)) % 5) as u8
    }

    pub fn trace(&self) -> u8 {
        (self.0[0] + self.0[3]) % P
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let [a, b, c, d] = self.0.map(u32::from);
        let [e, f, g, h] = rhs.0.map(u32::from);
        GroupElement([
            ((a * e + b * g) % 5) as u8,
            ((a * f + b * h) % 5) as u8,
            ((c * e + d * g) % 5) as u8,
            ((c * f + d * h) % 5) as u8,
        ])
    }

    /// Inverse of a determinant-1 matrix: `(d, -b; -c, a)`.
    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = self.0;
        GroupElement([d, (P - b) % P, (P - c) % P, a])
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::identity();
        let mut base = *self;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u32 {
        let mut g = *self;
        let mut n = 1;
        while g != Self::identity() {
            g = g.mul(self);
            n += 1;
        }
        n
    }

    pub fn conjugate_by(&self, h: &Self) -> Self {
        h.mul(self).mul(&h.inverse())
    }

    fn code(&self) -> usize {
        let [a, b, c, d] = self.0.map(usize::from);
        ((a * 5 + b) * 5 + c) * 5 + d
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a} {b}; {c} {d})")
    }
}

/// Class representatives in character-table column order.
pub const CLASS_REPRESENTATIVES: [GroupElement; NUM_CLASSES] = [
    GroupElement::new_unchecked(1, 0, 0, 1),
    GroupElement::new_unchecked(-1, 0, 0, -1),
    GroupElement::new_unchecked(1, 1, 0, 1),
    GroupElement::new_unchecked(1, 2, 0, 1),
    GroupElement::new_unchecked(-1, 1, 0, -1),
    GroupElement::new_unchecked(-1, 2, 0, -1),
    GroupElement::new_unchecked(2, 0, 0, 3),
    GroupElement::new_unchecked(3, 2, 4, 3),
    GroupElement::new_unchecked(2, 2, 4, 2),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjClass {
    pub index: usize,
    pub representative: GroupElement,
    pub size: usize,
    pub element_order: u32,
}

/// The group with its classes and power maps. Immutable once built.
#[derive(Clone, Debug)]
pub struct GroupTable {
    elements: Vec<GroupElement>,
    classes: Vec<ConjClass>,
    /// Class index for each of the 625 matrix codes; `None` off SL2.
    class_by_code: Vec<Option<usize>>,
    /// `power_map[c][k]` is the class of `g^k` for `k < order(c)`.
    power_map: Vec<Vec<usize>>,
}

pub fn build_sl2f5() -> Result<GroupTable> {
    let elements: Vec<GroupElement> = (0..625i64)
        .map(|code| {
            GroupElement::new_unchecked(code / 125, (code / 25) % 5, (code / 5) % 5, code % 5)
        })
        .filter(|g| g.det() == 1)
        .collect();
    if elements.len() != GROUP_ORDER {
        return Err(Error::Internal(format!(
            "expected {GROUP_ORDER} elements, found {}",
            elements.len()
        )));
    }

    // Orbits under conjugation.
    let mut orbit_of: HashMap<GroupElement, usize> = HashMap::new();
    let mut orbits: Vec<Vec<GroupElement>> = Vec::new();
    for g in &elements {
        if orbit_of.contains_key(g) {
            continue;
        }
        let orbit: BTreeSet<GroupElement> = elements.iter().map(|h| g.conjugate_by(h)).collect();
        for x in &orbit {
            orbit_of.insert(*x, orbits.len());
        }
        orbits.push(orbit.into_iter().collect());
    }
    if orbits.len() != NUM_CLASSES {
        return Err(Error::Internal(format!(
            "expected {NUM_CLASSES} conjugacy classes, found {}",
            orbits.len()
        )));
    }

    // Reorder by the listed representatives.
    let mut orbit_to_class = [usize::MAX; NUM_CLASSES];
    for (index, rep) in CLASS_REPRESENTATIVES.iter().enumerate() {
        let orbit = *orbit_of
            .get(rep)
            .ok_or_else(|| Error::Internal(format!("representative {rep} not in SL2(F5)")))?;
        if orbit_to_class[orbit] != usize::MAX {
            return Err(Error::Internal(format!(
                "representatives {} and {rep} are conjugate",
                CLASS_REPRESENTATIVES[orbit_to_class[orbit]]
            )));
        }
        orbit_to_class[orbit] = index;
    }

    let classes: Vec<ConjClass> = CLASS_REPRESENTATIVES
        .iter()
        .enumerate()
        .map(|(index, rep)| ConjClass {
            index,
            representative: *rep,
            size: orbits[orbit_of[rep]].len(),
            element_order: rep.order(),
        })
        .collect();

    let mut class_by_code = vec![None; 625];
    for g in &elements {
        class_by_code[g.code()] = Some(orbit_to_class[orbit_of[g]]);
    }
    let class_of = |g: &GroupElement| class_by_code[g.code()].expect("element of SL2");

    let mut power_map: Vec<Vec<usize>> = Vec::with_capacity(NUM_CLASSES);
    for class in &classes {
        let rep = class.representative;
        power_map.push(
            (0..class.element_order as u64)
                .map(|k| class_of(&rep.pow(k)))
                .collect(),
        );
    }

    // Power maps must not depend on the representative.
    for g in &elements {
        let c = class_of(g);
        for (k, &expected) in power_map[c].iter().enumerate() {
            if class_of(&g.pow(k as u64)) != expected {
                return Err(Error::Internal(format!("power map not well defined at {g}^{k}")));
            }
        }
    }

    Ok(GroupTable {
        elements,
        classes,
        class_by_code,
        power_map,
    })
}

impl GroupTable {
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn class_of(&self, g: &GroupElement) -> Result<usize> {
        self.class_by_code[g.code()].ok_or_else(|| Error::NotInSl2(g.to_string()))
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn class_power(&self, c: usize, k: u64) -> usize {
        let row = &self.power_map[c];
        row[(k % row.len() as u64) as usize]
    }

    /// Class of `g^{-1}` for `g` in class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        let order = self.classes[c].element_order as u64;
        self.class_power(c, order - 1)
    }

    pub fn class_sizes(&self) -> [usize; NUM_CLASSES] {
        std::array::from_fn(|i| self.classes[i].size)
    }

    pub fn element_orders(&self) -> [u32; NUM_CLASSES] {
        std::array::from_fn(|i| self.classes[i].element_order)
    }

    pub fn center(&self) -> Vec<GroupElement> {
        self.elements
            .iter()
            .filter(|z| self.elements.iter().all(|g| z.mul(g) == g.mul(z)))
            .copied()
            .collect()
    }

    /// The subgroup generated by all commutators `g h g⁻¹ h⁻¹`.
    pub fn commutator_subgroup(&self) -> BTreeSet<GroupElement> {
        let commutators: BTreeSet<GroupElement> = self
            .elements
            .iter()
            .flat_map(|g| {
                self.elements
                    .iter()
                    .map(move |h| g.mul(h).mul(&g.inverse()).mul(&h.inverse()))
            })
            .collect();
        let mut closure = commutators.clone();
        let mut frontier: Vec<GroupElement> = closure.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            for c in &commutators {
                let y = x.mul(c);
                if closure.insert(y) {
                    frontier.push(y);
                }
            }
        }
        closure
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn table() -> GroupTable {
        build_sl2f5().unwrap()
    }

    #[test]
    fn order_and_class_sizes() {
        let t = table();
        assert_eq!(t.order(), 120);
        assert_eq!(t.class_sizes(), [1, 1, 12, 12, 12, 12, 30, 20, 20]);
        assert_eq!(t.class_sizes().iter().sum::<usize>(), 120);
        assert!(t.class_sizes().iter().all(|s| 120 % s == 0));
        assert_eq!(t.class_sizes().iter().filter(|&&s| s == 1).count(), 2);
    }

    #[test]
    fn element_orders() {
        assert_eq!(table().element_orders(), [1, 2, 5, 5, 10, 10, 4, 6, 3]);
    }

    #[test]
    fn center_is_plus_minus_identity() {
        let center = table().center();
        assert_eq!(
            center,
            vec![GroupElement::new_unchecked(1, 0, 0, 1), GroupElement::new_unchecked(4, 0, 0, 4)]
        );
    }

    #[test]
    fn class_of_representatives() {
        let t = table();
        assert_eq!(t.class_of(&GroupElement::new(1, 1, 0, 1).unwrap()).unwrap(), 2);
        let c = t.class_of(&GroupElement::new(2, 2, 4, 2).unwrap()).unwrap();
        assert_eq!(t.classes()[c].size, 20);
        assert_eq!(t.classes()[c].element_order, 3);
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(GroupElement::new(1, 1, 1, 1).is_err());
        assert!(table()
            .class_of(&GroupElement::new_unchecked(2, 0, 0, 2))
            .is_err());
    }

    #[test]
    fn power_map_examples() {
        let t = table();
        assert_eq!(t.class_power(2, 2), 3);
        assert_eq!(t.class_power(5, 1), 5);
        assert_eq!(t.class_power(1, 2), 0);
        for c in 0..NUM_CLASSES {
            assert_eq!(t.class_power(c, 1), c);
            assert_eq!(t.class_power(c, t.classes()[c].element_order as u64), 0);
        }
    }

    #[test]
    fn class_power_is_periodic_in_order() {
        let t = table();
        for c in 0..NUM_CLASSES {
            let order = t.classes()[c].element_order as u64;
            for k in 0..40 {
                assert_eq!(t.class_power(c, k), t.class_power(c, k + order));
            }
        }
    }

    #[test]
    fn perfect_group() {
        let derived = table().commutator_subgroup();
        assert_eq!(derived.len(), 120);
        assert!(derived.contains(&GroupElement::new_unchecked(-1, 0, 0, -1)));
    }

    #[test]
    fn conjugation_invariance_random_pairs() {
        let t = table();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let elems = t.elements();
        for _ in 0..1000 {
            let g = elems[rng.random_range(0..elems.len())];
            let h = elems[rng.random_range(0..elems.len())];
            assert_eq!(t.class_of(&g).unwrap(), t.class_of(&g.conjugate_by(&h)).unwrap());
        }
    }
}
