//! Sign vectors over the ground set `E_t = {1, ..., t}`.
//!
//! A [`SignVector`] stores its negative part as a bitmask: bit `i` set means
//! element `i + 1` carries `-1`. Elements are 1-based everywhere outside this
//! module. Text form is a string over `+`/`-`, element 1 leftmost.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

fn full_mask(t: usize) -> u64 {
    if t >= 64 {
        u64::MAX
    } else {
        (1u64 << t) - 1
    }
}

/// Checks `1 <= t <= MAX_ELEMENTS`.
pub fn check_ground_set(t: usize) -> Result<()> {
    if t == 0 || t > MAX_ELEMENTS {
        Err(Error::GroundSetSize(t))
    } else {
        Ok(())
    }
}

/// A subset of `E_t`, stored as a bitmask (bit `i` is element `i + 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// The whole ground set `E_t`.
    pub fn full(t: usize) -> Self {
        ElementSet(full_mask(t))
    }

    /// Builds a set from 1-based element labels.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut bits = 0u64;
        for e in elements {
            debug_assert!((1..=MAX_ELEMENTS).contains(&e));
            bits |= 1 << (e - 1);
        }
        ElementSet(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Membership of the 1-based element `e`.
    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & other.0)
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// `E_t - self`.
    pub fn complement(self, t: usize) -> ElementSet {
        ElementSet(!self.0 & full_mask(t))
    }

    /// 1-based elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.elements())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = elements.iter().find(|&&e| e == 0 || e > MAX_ELEMENTS) {
            return Err(serde::de::Error::custom(format!("element {bad} out of range")));
        }
        Ok(ElementSet::from_elements(elements))
    }
}

/// A `±1` vector of length `t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    t: usize,
    neg: u64,
}

impl SignVector {
    /// The all-plus vector `T⁽⁺⁾`.
    pub fn all_plus(t: usize) -> Self {
        debug_assert!(t <= MAX_ELEMENTS);
        SignVector { t, neg: 0 }
    }

    pub fn all_minus(t: usize) -> Self {
        SignVector { t, neg: full_mask(t) }
    }

    /// The vector that is negative exactly on `negative`.
    pub fn from_negative_part(t: usize, negative: ElementSet) -> Self {
        SignVector { t, neg: negative.0 & full_mask(t) }
    }

    /// From `±1` entries; any other entry is rejected.
    pub fn from_signs(signs: &[i64]) -> Result<Self> {
        check_ground_set(signs.len())?;
        let mut neg = 0u64;
        for (i, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => neg |= 1 << i,
                _ => return Err(Error::ParseSignVector(format!("{signs:?}"))),
            }
        }
        Ok(SignVector { t: signs.len(), neg })
    }

    pub fn len(&self) -> usize {
        self.t
    }

    pub fn is_empty(&self) -> bool {
        self.t == 0
    }

    /// Entry at the 1-based element `e`.
    pub fn get(&self, e: usize) -> i64 {
        assert!(e >= 1 && e <= self.t, "element {e} outside E_{}", self.t);
        if self.neg >> (e - 1) & 1 == 1 {
            -1
        } else {
            1
        }
    }

    /// Entries in coordinate order.
    pub fn signs(&self) -> impl Iterator<Item = i64> + '_ {
        (1..=self.t).map(move |e| self.get(e))
    }

    pub fn positive_part(&self) -> ElementSet {
        ElementSet(!self.neg & full_mask(self.t))
    }

    pub fn negative_part(&self) -> ElementSet {
        ElementSet(self.neg)
    }

    /// Reverses the sign of element `e`.
    pub fn flip(&self, e: usize) -> SignVector {
        assert!(e >= 1 && e <= self.t);
        SignVector { t: self.t, neg: self.neg ^ (1 << (e - 1)) }
    }

    /// Reverses the signs on a whole subset (reorientation).
    pub fn reorient(&self, on: ElementSet) -> SignVector {
        SignVector { t: self.t, neg: (self.neg ^ on.0) & full_mask(self.t) }
    }

    fn check_same_len(&self, other: &SignVector) -> Result<()> {
        if self.t != other.t {
            Err(Error::DimensionMismatch { expected: self.t, found: other.t })
        } else {
            Ok(())
        }
    }

    /// Separation set `S(self, other) = {e : self(e) != other(e)}`.
    pub fn separation_set(&self, other: &SignVector) -> Result<ElementSet> {
        self.check_same_len(other)?;
        Ok(ElementSet(self.neg ^ other.neg))
    }

    /// Tope-graph adjacency: exactly one element separates the two.
    pub fn is_adjacent(&self, other: &SignVector) -> bool {
        self.t == other.t && (self.neg ^ other.neg).count_ones() == 1
    }
}

impl std::ops::Neg for SignVector {
    type Output = SignVector;

    fn neg(self) -> SignVector {
        SignVector { t: self.t, neg: !self.neg & full_mask(self.t) }
    }
}

impl std::ops::Neg for &SignVector {
    type Output = SignVector;

    fn neg(self) -> SignVector {
        -*self
    }
}

/// Coordinate-wise lexicographic order with `+ < -`; shorter vectors first.
impl Ord for SignVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.t.cmp(&other.t).then_with(|| {
            let diff = self.neg ^ other.neg;
            if diff == 0 {
                Ordering::Equal
            } else if self.neg >> diff.trailing_zeros() & 1 == 1 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        })
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.signs() {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.chars().count();
        if t == 0 || t > MAX_ELEMENTS {
            return Err(Error::ParseSignVector(s.to_owned()));
        }
        let mut neg = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '+' => {}
                // The Unicode minus sign is accepted too.
                '-' | '\u{2212}' => neg |= 1 << i,
                _ => return Err(Error::ParseSignVector(s.to_owned())),
            }
        }
        Ok(SignVector { t, neg })
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer vector produced by summing sign vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    /// `Some` iff every entry is `±1`.
    pub fn as_tope(&self) -> Option<SignVector> {
        if self.0.iter().all(|&x| x == 1 || x == -1) {
            SignVector::from_signs(&self.0).ok()
        } else {
            None
        }
    }
}

/// Coordinate-wise sum of a non-empty collection of sign vectors.
pub fn sum_topes<'a, I>(topes: I) -> Result<IntVector>
where
    I: IntoIterator<Item = &'a SignVector>,
{
    let mut iter = topes.into_iter();
    let first = iter.next().ok_or(Error::Empty)?;
    let mut acc: Vec<i64> = first.signs().collect();
    for q in iter {
        first.check_same_len(q)?;
        for (a, s) in acc.iter_mut().zip(q.signs()) {
            *a += s;
        }
    }
    Ok(IntVector(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn separation_examples() {
        let s = sv("+-+-+").separation_set(&sv("+++++")).unwrap();
        assert_eq!(s.to_vec(), vec![2, 4]);
        let t = sv("+--+-");
        assert!(t.separation_set(&t).unwrap().is_empty());
        assert_eq!(t.separation_set(&-t).unwrap(), ElementSet::full(5));
        assert_eq!(sv("++").separation_set(&sv("+++")), Err(Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn sums_and_as_tope() {
        let s = sum_topes([sv("+++")].iter()).unwrap();
        assert_eq!(s, IntVector(vec![1, 1, 1]));
        assert_eq!(s.as_tope(), Some(sv("+++")));

        let two = sum_topes([sv("+-+"), sv("++-")].iter()).unwrap();
        assert!(two.0.iter().all(|x| x % 2 == 0));
        assert_eq!(two.as_tope(), None);

        let canonical = ["+++++", "--+++", "----+", "+----", "+++--"];
        let v: Vec<_> = canonical.iter().map(|s| sv(s)).collect();
        let total = sum_topes(v.iter()).unwrap();
        assert_eq!(total, IntVector(vec![1, -1, 1, -1, 1]));
        assert_eq!(total.as_tope(), Some(sv("+-+-+")));

        assert_eq!(sum_topes(std::iter::empty()), Err(Error::Empty));
        assert!(sum_topes([sv("++"), sv("+")].iter()).is_err());
    }

    #[test]
    fn adjacency() {
        assert!(sv("+++").is_adjacent(&sv("-++")));
        assert!(!sv("+++").is_adjacent(&sv("--+")));
        assert!(!sv("+++").is_adjacent(&sv("+++")));
    }

    #[test]
    fn lexicographic_plus_before_minus() {
        let mut v = [sv("--"), sv("+-"), sv("-+"), sv("++")];
        v.sort();
        let names: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["++", "+-", "-+", "--"]);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<SignVector>().is_err());
        assert!("+0-".parse::<SignVector>().is_err());
        assert_eq!(sv("+\u{2212}+"), sv("+-+"));
        let json = serde_json::to_string(&sv("+-")).unwrap();
        assert_eq!(json, "\"+-\"");
        assert_eq!(serde_json::from_str::<SignVector>(&json).unwrap(), sv("+-"));
    }

    fn arb_pair() -> impl Strategy<Value = (SignVector, SignVector)> {
        (1usize..=20).prop_flat_map(|t| {
            let mask = full_mask(t);
            (any::<u64>(), any::<u64>()).prop_map(move |(a, b)| {
                (
                    SignVector::from_negative_part(t, ElementSet(a & mask)),
                    SignVector::from_negative_part(t, ElementSet(b & mask)),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn separation_symmetries((a, b) in arb_pair()) {
            let s = a.separation_set(&b).unwrap();
            prop_assert_eq!(s, b.separation_set(&a).unwrap());
            prop_assert_eq!(s, (-a).separation_set(&-b).unwrap());
            prop_assert_eq!(s.is_empty(), a == b);
            prop_assert_eq!(a.is_adjacent(&b), s.len() == 1);
        }

        #[test]
        fn text_round_trip((a, _b) in arb_pair()) {
            prop_assert_eq!(a.to_string().parse::<SignVector>().unwrap(), a);
        }

        #[test]
        fn sum_parity(vs in proptest::collection::vec(any::<u64>(), 1..9), t in 1usize..12) {
            let topes: Vec<_> = vs
                .iter()
                .map(|&m| SignVector::from_negative_part(t, ElementSet(m)))
                .collect();
            let sum = sum_topes(topes.iter()).unwrap();
            let odd = topes.len() % 2 == 1;
            prop_assert!(sum.0.iter().all(|x| (x.rem_euclid(2) == 1) == odd));
            if !odd {
                prop_assert!(sum.as_tope().is_none());
            }
        }
    }
}
