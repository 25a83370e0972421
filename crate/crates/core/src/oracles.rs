//! Independent brute-force counts that tie the geometry of planar vector
//! systems to the combinatorics of decompositions.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrangements::{directions_fit_half_plane, Arrangement, TopeSet};
use crate::cycles::SymmetricCycle;
use crate::decomposition::decompose;
use crate::dehn_sommerville::binomial;
use crate::rational::{sorted_directions, strict_feasible, Direction, RationalVector};
use crate::sign::SignVector;
use crate::{Error, Result};

fn directions(vectors: &[RationalVector]) -> Result<Vec<Direction>> {
    vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let d = Direction::from_rational(v)?;
            if d.is_zero() {
                Err(Error::ZeroVector(i + 1))
            } else {
                Ok(d)
            }
        })
        .collect()
}

/// `ν_j`: the number of `j`-subsets of the strict system `<a_e, x> > 0`
/// that are feasible, for `j = 0, ..., t` (the empty system counts).
///
/// The vectors must be planar, non-zero and pairwise non-(anti)parallel,
/// and the full system must be infeasible.
pub fn nu_counts(vectors: &[RationalVector]) -> Result<Vec<u64>> {
    let arr = Arrangement::new(vectors.to_vec())?;
    if arr.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: arr.dim() });
    }
    arr.validate_simple().map_err(|v| Error::NotSimple(v.to_string()))?;
    if strict_feasible(vectors, None)? {
        return Err(Error::FullSystemFeasible);
    }
    let t = vectors.len();
    if t > crate::complexes::MAX_SCAN_ELEMENTS {
        return Err(Error::InvalidParams(format!("subset scan over 2^{t} subsystems refused")));
    }
    let dirs = directions(vectors)?;
    let mut nu = vec![0u64; t + 1];
    for mask in 0u64..1 << t {
        let subset: Vec<Direction> = (0..t).filter(|i| mask >> i & 1 == 1).map(|i| dirs[i].clone()).collect();
        if directions_fit_half_plane(subset) {
            nu[mask.count_ones() as usize] += 1;
        }
    }
    Ok(nu)
}

/// Result of [`check_halfplane_condition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfplaneCondition {
    pub holds: bool,
    /// Fewest vectors found in an open half-plane through the origin.
    pub min_count: usize,
    /// Normal `u` of a half-plane `{ x : <x, u> > 0 }` attaining `min_count`,
    /// reported when the condition fails.
    pub witness: Option<RationalVector>,
}

/// Does every open half-plane bounded by a line through the origin contain
/// at least two of the vectors?
///
/// Counts only change when the half-plane normal crosses a direction
/// perpendicular to some vector. Those critical directions are sorted
/// around the circle and one normal is tested inside each open arc between
/// them (the sum of the arc's end directions); the critical directions
/// themselves are tested too.
pub fn check_halfplane_condition(vectors: &[RationalVector]) -> Result<HalfplaneCondition> {
    let dirs = directions(vectors)?;
    let mut critical = Vec::with_capacity(2 * dirs.len());
    for d in &dirs {
        critical.push(d.rot90());
        critical.push(d.rot90().neg());
    }
    let critical = sorted_directions(critical);
    let count = |u: &Direction| dirs.iter().filter(|a| a.dot(u) > 0.into()).count();
    let n = critical.len();
    let mut best: Option<(usize, Direction)> = None;
    for i in 0..n {
        let (a, b) = (&critical[i], &critical[(i + 1) % n]);
        let inside = if a.cross(b) > 0.into() { a.add(b) } else { a.rot90() };
        let c = count(&inside);
        if best.as_ref().is_none_or(|(m, _)| c < *m) {
            best = Some((c, inside));
        }
    }
    for u in &critical {
        let c = count(u);
        if best.as_ref().is_none_or(|(m, _)| c < *m) {
            best = Some((c, u.clone()));
        }
    }
    let (min_count, witness) = best.unwrap_or((0, Direction::new(1, 0)));
    let holds = min_count >= 2;
    let witness = (!holds).then(|| {
        let w = RationalVector(vec![BigRational::from_integer(witness.x), BigRational::from_integer(witness.y)]);
        RationalVector(w.primitive().into_iter().map(BigRational::from_integer).collect())
    });
    Ok(HalfplaneCondition { holds, min_count, witness })
}

/// Histogram of `|Q(T, R)|` over a tope set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub t: usize,
    pub histogram: BTreeMap<usize, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub topes: Option<BTreeMap<usize, Vec<SignVector>>>,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.histogram.values().sum()
    }
}

/// Decomposes every tope and tallies `|Q(T, R)|`.
///
/// `jobs > 1` splits the topes over a thread pool; the result does not
/// depend on `jobs`. With `keep_topes`, the topes of each size are listed in
/// lexicographic order.
pub fn census(topes: &TopeSet, cycle: &SymmetricCycle, jobs: usize, keep_topes: bool) -> Result<Census> {
    if topes.t() != cycle.t() {
        return Err(Error::DimensionMismatch { expected: cycle.t(), found: topes.t() });
    }
    let size_of = |tope: &SignVector| {
        decompose(tope, cycle)
            .map(|d| (d.len(), *tope))
            .map_err(|e| Error::Tope { tope: tope.to_string(), source: Box::new(e) })
    };
    let sizes: Vec<(usize, SignVector)> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidParams(e.to_string()))?;
        pool.install(|| topes.topes().par_iter().map(size_of).collect::<Result<_>>())?
    } else {
        topes.iter().map(size_of).collect::<Result<_>>()?
    };
    let mut histogram = BTreeMap::new();
    let mut by_size: BTreeMap<usize, Vec<SignVector>> = BTreeMap::new();
    for (size, tope) in sizes {
        *histogram.entry(size).or_insert(0) += 1;
        if keep_topes {
            by_size.entry(size).or_default().push(tope);
        }
    }
    Ok(Census { t: topes.t(), histogram, topes: keep_topes.then_some(by_size) })
}

/// `{ j : 2 C(t, j) }` over odd `j <= t`.
pub fn expected_hypercube_histogram(t: usize) -> BTreeMap<usize, u64> {
    (1..=t).step_by(2).map(|j| (j, 2 * binomial(t, j) as u64)).collect()
}
