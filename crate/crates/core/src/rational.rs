//! Exact rational vectors and strict homogeneous feasibility.
//!
//! Nothing in here touches floating point. Feasibility of
//! `{ s_e <a_e, x> > 0 }` is decided by Fourier-Motzkin elimination on
//! primitive integer rows; positive scaling never changes a strict
//! homogeneous inequality, so every row is kept gcd-reduced.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::sign::SignVector;
use crate::{Error, Result};

/// Parses `"p"` or `"p/q"`; the result is always in canonical form.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|_| Error::ParseRational(s.to_owned()))
}

/// A vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    pub fn from_integers<I: IntoIterator<Item = i64>>(coords: I) -> Self {
        RationalVector(coords.into_iter().map(|c| BigRational::from_integer(c.into())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RationalVector) -> Result<BigRational> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    pub fn scaled(&self, factor: i64) -> RationalVector {
        let f = BigRational::from_integer(factor.into());
        RationalVector(self.0.iter().map(|c| c * &f).collect())
    }

    /// The positive multiple of `self` with coprime integer coordinates.
    pub fn primitive(&self) -> Vec<BigInt> {
        let lcm = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        normalize_row(ints)
    }

    /// Two non-zero vectors span a line iff every 2x2 minor vanishes.
    pub fn is_parallel_to(&self, other: &RationalVector) -> bool {
        let n = self.dim().min(other.dim());
        for i in 0..n {
            for j in i + 1..n {
                if &self.0[i] * &other.0[j] != &self.0[j] * &other.0[i] {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        raw.iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map(RationalVector)
            .map_err(serde::de::Error::custom)
    }
}

fn normalize_row(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in &mut row {
            *c /= &g;
        }
    }
    row
}

/// Is there an `x` with `sign(e) <a_e, x> > 0` for every `e`?
///
/// `signs = None` means all-plus. An empty system is feasible; a zero row
/// makes the system infeasible.
pub fn strict_feasible(vectors: &[RationalVector], signs: Option<&SignVector>) -> Result<bool> {
    let Some(first) = vectors.first() else {
        return Ok(true);
    };
    let dim = first.dim();
    if let Some(v) = vectors.iter().find(|v| v.dim() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: v.dim() });
    }
    if let Some(s) = signs {
        if s.len() != vectors.len() {
            return Err(Error::DimensionMismatch { expected: vectors.len(), found: s.len() });
        }
    }
    let rows = vectors.iter().enumerate().map(|(i, v)| {
        let row = v.primitive();
        match signs {
            Some(s) if s.get(i + 1) < 0 => row.into_iter().map(|c| -c).collect(),
            _ => row,
        }
    });
    Ok(fourier_motzkin(rows.collect(), dim))
}

fn fourier_motzkin(rows: Vec<Vec<BigInt>>, dim: usize) -> bool {
    let mut system: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for row in rows {
        if row.iter().all(Zero::is_zero) {
            return false;
        }
        system.insert(row);
    }
    for var in (0..dim).rev() {
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        let mut next = BTreeSet::new();
        for row in system {
            match row[var].sign() {
                num_bigint::Sign::Plus => lower.push(row),
                num_bigint::Sign::Minus => upper.push(row),
                num_bigint::Sign::NoSign => {
                    next.insert(row);
                }
            }
        }
        for p in &lower {
            for n in &upper {
                let a = &p[var];
                let b = -&n[var];
                let combined: Vec<BigInt> = p.iter().zip(n).map(|(x, y)| x * &b + y * a).collect();
                let combined = normalize_row(combined);
                if combined.iter().all(Zero::is_zero) {
                    return false;
                }
                next.insert(combined);
            }
        }
        if next.is_empty() {
            return true;
        }
        system = next;
    }
    // Every surviving row has all coefficients eliminated, which was caught above.
    system.is_empty()
}

/// A non-zero planar direction with integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Direction {
    pub x: BigInt,
    pub y: BigInt,
}

impl Direction {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Direction { x: x.into(), y: y.into() }
    }

    /// Positive rescaling of a 2-dimensional rational vector.
    pub fn from_rational(v: &RationalVector) -> Result<Self> {
        if v.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: v.dim() });
        }
        let p = v.primitive();
        Ok(Direction { x: p[0].clone(), y: p[1].clone() })
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn cross(&self, other: &Direction) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Direction) -> BigInt {
        &self.x * &other.x + &self.y * &other.y
    }

    /// Counterclockwise rotation by a right angle.
    pub fn rot90(&self) -> Direction {
        Direction { x: -&self.y, y: self.x.clone() }
    }

    pub fn neg(&self) -> Direction {
        Direction { x: -&self.x, y: -&self.y }
    }

    pub fn add(&self, other: &Direction) -> Direction {
        Direction { x: &self.x + &other.x, y: &self.y + &other.y }
    }

    // 0 for angles in [0, pi), 1 for [pi, 2 pi).
    fn half(&self) -> u8 {
        if self.y.is_positive() || (self.y.is_zero() && self.x.is_positive()) {
            0
        } else {
            1
        }
    }

    /// Counterclockwise angular order starting from the positive x-axis.
    pub fn angle_cmp(&self, other: &Direction) -> Ordering {
        self.half().cmp(&other.half()).then_with(|| match other.cross(self).sign() {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::Plus => Ordering::Greater,
            num_bigint::Sign::NoSign => Ordering::Equal,
        })
    }

    pub fn same_direction(&self, other: &Direction) -> bool {
        self.cross(other).is_zero() && self.dot(other).is_positive()
    }
}

/// Sorts directions counterclockwise and drops repeated directions.
pub fn sorted_directions(mut dirs: Vec<Direction>) -> Vec<Direction> {
    dirs.sort_by(Direction::angle_cmp);
    dirs.dedup_by(|a, b| a.angle_cmp(b) == Ordering::Equal);
    dirs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(c: &[i64]) -> RationalVector {
        RationalVector::from_integers(c.iter().copied())
    }

    #[test]
    fn rational_text_forms() {
        assert_eq!(parse_rational("6/4").unwrap().to_string(), "3/2");
        assert_eq!(parse_rational("-2").unwrap().to_string(), "-2");
        assert_eq!(parse_rational("4/2").unwrap().to_string(), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let v: RationalVector = serde_json::from_str(r#"["1/2", "-3", "0"]"#).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1/2","-3","0"]"#);
        assert_eq!(v.primitive(), vec![BigInt::from(1), BigInt::from(-6), BigInt::from(0)]);
    }

    #[test]
    fn feasibility_examples() {
        assert!(strict_feasible(&[rv(&[1, 0])], None).unwrap());
        assert!(!strict_feasible(&[rv(&[1, 0]), rv(&[-1, 0])], None).unwrap());
        assert!(!strict_feasible(&[rv(&[1, 0]), rv(&[0, 1]), rv(&[-1, -1])], None).unwrap());
        assert!(strict_feasible(&[rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])], None).unwrap());
        assert!(strict_feasible(&[], None).unwrap());
        assert!(!strict_feasible(&[rv(&[0, 0])], None).unwrap());
        assert!(strict_feasible(&[rv(&[1, 0, 0]), rv(&[0, 1, 0]), rv(&[0, 0, 1])], None).unwrap());
        let signs: SignVector = "++-".parse().unwrap();
        assert!(!strict_feasible(&[rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])], Some(&signs)).unwrap());
        assert!(strict_feasible(&[rv(&[1, 0]), rv(&[1, 2])], None).is_ok());
        assert!(strict_feasible(&[rv(&[1, 0]), rv(&[1, 2, 3])], None).is_err());
    }

    #[test]
    fn fm_three_dimensional_cone() {
        // The four vectors (±1, ±1, 1) with one sign flipped still fit in a half-space.
        let vs = [rv(&[1, 1, 1]), rv(&[1, -1, 1]), rv(&[-1, 1, 1]), rv(&[-1, -1, 1])];
        assert!(strict_feasible(&vs, None).unwrap());
        let flipped: SignVector = "+++-".parse().unwrap();
        assert!(strict_feasible(&vs, Some(&flipped)).unwrap());
        let split: SignVector = "+--+".parse().unwrap();
        // (1,1,1) - (1,-1,1) - (-1,1,1) + (-1,-1,1) = 0, so no strict solution.
        assert!(!strict_feasible(&vs, Some(&split)).unwrap());
    }

    #[test]
    fn angular_order() {
        let dirs = vec![
            Direction::new(0, -1),
            Direction::new(-1, 0),
            Direction::new(1, 1),
            Direction::new(1, 0),
            Direction::new(2, 0),
            Direction::new(0, 1),
        ];
        let sorted = sorted_directions(dirs);
        let xy: Vec<(i64, i64)> =
            sorted.iter().map(|d| (d.x.clone().try_into().unwrap(), d.y.clone().try_into().unwrap())).collect();
        assert_eq!(xy, vec![(1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)]);
    }
}
