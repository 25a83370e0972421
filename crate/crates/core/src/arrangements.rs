//! Central hyperplane arrangements with exact rational normals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::oracles;
use crate::rational::{sorted_directions, strict_feasible, Direction, RationalVector};
use crate::sign::{check_ground_set, ElementSet, SignVector};
use crate::{Error, Result};

/// A central arrangement `{ x : <a_e, x> = 0 }`, one normal per element of `E_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawArrangement")]
pub struct Arrangement {
    t: usize,
    dim: usize,
    normals: Vec<RationalVector>,
}

#[derive(Deserialize)]
struct RawArrangement {
    t: usize,
    dim: usize,
    normals: Vec<RationalVector>,
}

impl TryFrom<RawArrangement> for Arrangement {
    type Error = Error;

    fn try_from(raw: RawArrangement) -> Result<Self> {
        if raw.normals.len() != raw.t {
            return Err(Error::DimensionMismatch { expected: raw.t, found: raw.normals.len() });
        }
        Arrangement::new(raw.normals).and_then(|a| {
            if a.dim != raw.dim {
                Err(Error::DimensionMismatch { expected: raw.dim, found: a.dim })
            } else {
                Ok(a)
            }
        })
    }
}

/// Why an arrangement is not simple. Elements are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum SimplicityViolation {
    Loop { element: usize },
    Parallel { first: usize, second: usize },
    Antiparallel { first: usize, second: usize },
}

impl fmt::Display for SimplicityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplicityViolation::Loop { element } => write!(f, "normal {element} is zero"),
            SimplicityViolation::Parallel { first, second } => {
                write!(f, "normals {first} and {second} are parallel")
            }
            SimplicityViolation::Antiparallel { first, second } => {
                write!(f, "normals {first} and {second} are antiparallel")
            }
        }
    }
}

impl Arrangement {
    /// Shape checks only (non-empty, equal dimensions). Simplicity is
    /// reported separately by [`Arrangement::validate_simple`].
    pub fn new(normals: Vec<RationalVector>) -> Result<Self> {
        check_ground_set(normals.len())?;
        let dim = normals[0].dim();
        if dim == 0 {
            return Err(Error::InvalidParams("normals must have dimension >= 1".into()));
        }
        if let Some(v) = normals.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: v.dim() });
        }
        Ok(Arrangement { t: normals.len(), dim, normals })
    }

    pub fn from_integer_normals(normals: &[Vec<i64>]) -> Result<Self> {
        Arrangement::new(normals.iter().map(|n| RationalVector::from_integers(n.iter().copied())).collect())
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[RationalVector] {
        &self.normals
    }

    /// Normal of the 1-based element `e`.
    pub fn normal(&self, e: usize) -> &RationalVector {
        &self.normals[e - 1]
    }

    /// No zero normal, no (anti)parallel pair. The first violation in element
    /// order is reported.
    pub fn validate_simple(&self) -> std::result::Result<(), SimplicityViolation> {
        for (i, a) in self.normals.iter().enumerate() {
            if a.is_zero() {
                return Err(SimplicityViolation::Loop { element: i + 1 });
            }
        }
        for (i, a) in self.normals.iter().enumerate() {
            for (j, b) in self.normals.iter().enumerate().skip(i + 1) {
                if a.is_parallel_to(b) {
                    let same = a.dot(b).map(|d| d > num_traits::Zero::zero()).unwrap_or(false);
                    let (first, second) = (i + 1, j + 1);
                    return Err(if same {
                        SimplicityViolation::Parallel { first, second }
                    } else {
                        SimplicityViolation::Antiparallel { first, second }
                    });
                }
            }
        }
        Ok(())
    }

    /// Is `signs` the sign vector of some chamber?
    pub fn is_tope(&self, signs: &SignVector) -> Result<bool> {
        strict_feasible(&self.normals, Some(signs))
    }

    /// The vectors `signs(e) a_e`; reorientation of the arrangement.
    pub fn reoriented(&self, signs: &SignVector) -> Result<Arrangement> {
        if signs.len() != self.t {
            return Err(Error::DimensionMismatch { expected: self.t, found: signs.len() });
        }
        let normals = self.normals.iter().zip(signs.signs()).map(|(a, s)| a.scaled(s)).collect();
        Arrangement::new(normals)
    }

    /// Chamber sign vectors in lexicographic order (`+` before `-`).
    ///
    /// Hyperplanes are added one at a time and only feasible sign prefixes
    /// are extended.
    pub fn enumerate_topes(&self) -> Result<TopeSet> {
        self.validate_simple().map_err(|v| Error::NotSimple(v.to_string()))?;
        let mut topes = Vec::new();
        self.extend_prefix(0, 0, &mut topes)?;
        TopeSet::new(self.t, topes)
    }

    fn extend_prefix(&self, depth: usize, neg: u64, out: &mut Vec<SignVector>) -> Result<()> {
        if depth == self.t {
            out.push(SignVector::from_negative_part(self.t, ElementSet(neg)));
            return Ok(());
        }
        let prefix = &self.normals[..=depth];
        for bit in [0u64, 1] {
            let candidate = neg | bit << depth;
            let signs = SignVector::from_negative_part(depth + 1, ElementSet(candidate));
            if strict_feasible(prefix, Some(&signs))? {
                self.extend_prefix(depth + 1, candidate, out)?;
            }
        }
        Ok(())
    }
}

/// Do the planar vectors fit in an open half-plane through the origin?
///
/// Sorts the directions counterclockwise; the vectors are feasible iff some
/// circular gap between consecutive directions exceeds a straight angle.
pub fn rank2_feasible(vectors: &[RationalVector]) -> Result<bool> {
    let mut dirs = Vec::with_capacity(vectors.len());
    for (i, v) in vectors.iter().enumerate() {
        let d = Direction::from_rational(v)?;
        if d.is_zero() {
            return Err(Error::ZeroVector(i + 1));
        }
        dirs.push(d);
    }
    Ok(directions_fit_half_plane(dirs))
}

pub(crate) fn directions_fit_half_plane(dirs: Vec<Direction>) -> bool {
    let dirs = sorted_directions(dirs);
    let n = dirs.len();
    if n <= 1 {
        return true;
    }
    (0..n).any(|i| dirs[i].cross(&dirs[(i + 1) % n]) < num_bigint::BigInt::from(0))
}

/// A set of topes on `E_t`, sorted lexicographically and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTopeSet")]
pub struct TopeSet {
    t: usize,
    topes: Vec<SignVector>,
}

#[derive(Deserialize)]
struct RawTopeSet {
    t: usize,
    topes: Vec<SignVector>,
}

impl TryFrom<RawTopeSet> for TopeSet {
    type Error = Error;

    fn try_from(raw: RawTopeSet) -> Result<Self> {
        TopeSet::new(raw.t, raw.topes)
    }
}

impl TopeSet {
    pub fn new(t: usize, mut topes: Vec<SignVector>) -> Result<Self> {
        check_ground_set(t)?;
        if let Some(bad) = topes.iter().find(|s| s.len() != t) {
            return Err(Error::DimensionMismatch { expected: t, found: bad.len() });
        }
        topes.sort();
        topes.dedup();
        Ok(TopeSet { t, topes })
    }

    /// All `2^t` sign vectors; the tope set of the free simple oriented matroid.
    pub fn hypercube(t: usize) -> Result<Self> {
        check_ground_set(t)?;
        if t > 24 {
            return Err(Error::InvalidParams(format!("hypercube({t}) is too large to list")));
        }
        let topes = (0..1u64 << t).map(|m| SignVector::from_negative_part(t, ElementSet(m))).collect();
        TopeSet::new(t, topes)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn topes(&self) -> &[SignVector] {
        &self.topes
    }

    pub fn len(&self) -> usize {
        self.topes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topes.is_empty()
    }

    pub fn contains(&self, tope: &SignVector) -> bool {
        self.topes.binary_search(tope).is_ok()
    }

    pub fn is_closed_under_negation(&self) -> bool {
        self.topes.iter().all(|s| self.contains(&-s))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignVector> {
        self.topes.iter()
    }
}

/// Instance families produced by [`generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Hypercube { t: usize },
    Rank2Fan { t: usize },
    MomentCurve { t: usize, r: usize },
    TotallyCyclicFan { t: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Arrangement(Arrangement),
    Topes(TopeSet),
}

/// Builds one of the standard instances.
pub fn generate(kind: InstanceKind) -> Result<Instance> {
    match kind {
        InstanceKind::Hypercube { t } => TopeSet::hypercube(t).map(Instance::Topes),
        InstanceKind::Rank2Fan { t } => rank2_fan(t).map(Instance::Arrangement),
        InstanceKind::MomentCurve { t, r } => moment_curve(t, r).map(Instance::Arrangement),
        InstanceKind::TotallyCyclicFan { t } => totally_cyclic_fan(t).map(Instance::Arrangement),
    }
}

/// Normals `(1, e - 1)`: distinct slopes inside the open right half-plane.
pub fn rank2_fan(t: usize) -> Result<Arrangement> {
    check_ground_set(t)?;
    let normals: Vec<Vec<i64>> = (1..=t as i64).map(|e| vec![1, e - 1]).collect();
    Arrangement::from_integer_normals(&normals)
}

/// Normals `(1, e, e^2, ..., e^(r-1))`; any `r` of them are independent.
pub fn moment_curve(t: usize, r: usize) -> Result<Arrangement> {
    check_ground_set(t)?;
    if r < 2 || r > t {
        return Err(Error::InvalidParams(format!("moment_curve needs 2 <= r <= t, got t={t}, r={r}")));
    }
    let normals: Vec<Vec<i64>> = (1..=t as i64).map(|e| (0..r as u32).map(|k| e.pow(k)).collect()).collect();
    Arrangement::from_integer_normals(&normals)
}

/// `t >= 5` planar vectors with every open half-plane containing at least two.
///
/// Directions are spread around the circle (with one wider gap when `t` is
/// even, which avoids antiparallel pairs) and rounded to integers; the
/// result is then checked exactly.
pub fn totally_cyclic_fan(t: usize) -> Result<Arrangement> {
    check_ground_set(t)?;
    if t < 5 {
        return Err(Error::InvalidParams(format!("totally_cyclic_fan needs t >= 5, got {t}")));
    }
    let slots = if t % 2 == 1 { t } else { t + 1 };
    let scale = 1000.0;
    let normals: Vec<Vec<i64>> = (0..t)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / slots as f64;
            vec![(scale * angle.cos()).round() as i64, (scale * angle.sin()).round() as i64]
        })
        .collect();
    let arr = Arrangement::from_integer_normals(&normals)?;
    arr.validate_simple().map_err(|v| Error::Internal(format!("totally_cyclic_fan({t}): {v}")))?;
    let condition = oracles::check_halfplane_condition(arr.normals())?;
    if !condition.holds {
        return Err(Error::Internal(format!(
            "totally_cyclic_fan({t}) fails the half-plane condition at {:?}",
            condition.witness
        )));
    }
    Ok(arr)
}
