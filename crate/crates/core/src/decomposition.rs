//! Decomposition of a tope with respect to a symmetric cycle.
//!
//! The first half `R⁰, ..., R^{t-1}` of a symmetric cycle is a basis of
//! `Q^t`. Writing `T = Σ c_i R^i` with `c ∈ {-1, 0, 1}^t` and replacing each
//! negative term `-R^i` by the antipodal vertex `R^{i+t}` yields the unique
//! inclusion-minimal subset `Q(T, R)` of `V(R)` that sums to `T`.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cycles::SymmetricCycle;
use crate::sign::{sum_topes, SignVector};
use crate::{Error, Result};

/// `Q(T, R)` together with its coefficient vector over the first half of `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub tope: SignVector,
    pub coeffs: Vec<i64>,
    /// Members in cycle order.
    pub members: Vec<SignVector>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members sorted lexicographically, for set comparisons.
    pub fn member_set(&self) -> Vec<SignVector> {
        let mut m = self.members.clone();
        m.sort();
        m
    }
}

/// Computes `Q(T, R)` by exact Gaussian elimination.
pub fn decompose(tope: &SignVector, cycle: &SymmetricCycle) -> Result<Decomposition> {
    let t = cycle.t();
    if tope.len() != t {
        return Err(Error::DimensionMismatch { expected: t, found: tope.len() });
    }
    let coeffs = sign_coefficients(&solve(cycle.first_half(), tope)?)
        .ok_or_else(|| Error::NonIntegralSolution(tope.to_string()))?;
    let mut indexed: Vec<usize> = coeffs
        .iter()
        .enumerate()
        .filter_map(|(i, &c)| match c {
            1 => Some(i),
            -1 => Some(i + t),
            _ => None,
        })
        .collect();
    indexed.sort_unstable();
    let members: Vec<SignVector> = indexed.into_iter().map(|k| cycle.vertex(k)).collect();
    debug_assert_eq!(sum_topes(members.iter()).ok().and_then(|s| s.as_tope()), Some(*tope));
    Ok(Decomposition { tope: *tope, coeffs, members })
}

fn sign_coefficients(solution: &[BigRational]) -> Option<Vec<i64>> {
    solution
        .iter()
        .map(|c| {
            let v = if c.is_integer() { c.to_integer().to_i64() } else { None };
            v.filter(|v| (-1..=1).contains(v))
        })
        .collect()
}

// Solves Σ c_i basis[i] = rhs; the basis vectors are the matrix columns.
fn solve(basis: &[SignVector], rhs: &SignVector) -> Result<Vec<BigRational>> {
    let n = basis.len();
    let int = |v: i64| BigRational::from_integer(v.into());
    // Row e holds (R⁰(e), ..., R^{n-1}(e) | T(e)).
    let mut m: Vec<Vec<BigRational>> = (1..=n)
        .map(|e| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| int(b.get(e))).collect();
            row.push(int(rhs.get(e)));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()).then(b.cmp(&a)))
            .ok_or(Error::SingularBasis)?;
        m.swap(col, pivot);
        let inv = BigRational::one() / &m[col][col];
        for x in m[col].iter_mut().skip(col) {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let (pivot_row, row) = if r < col {
                    let (lo, hi) = m.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = m.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                    *x -= &factor * p;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Default bound on `t` for [`brute_force_decompose`] (`2^{2t}` subsets).
pub const DEFAULT_GUARD: usize = 8;

/// A subset of `V(R)` whose tope sum is `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetSolution {
    /// Bit `k` selects `R^k`.
    pub mask: u64,
    pub members: Vec<SignVector>,
    pub minimal: bool,
}

/// Every subset of `V(R)` summing to `T`, flagged for inclusion-minimality.
///
/// Exhaustive over all `2^{2t}` subsets; refuses when `t > guard`.
pub fn brute_force_decompose(tope: &SignVector, cycle: &SymmetricCycle, guard: usize) -> Result<Vec<SubsetSolution>> {
    let t = cycle.t();
    if t > guard || 2 * t >= 64 {
        return Err(Error::GuardExceeded { t, guard });
    }
    if tope.len() != t {
        return Err(Error::DimensionMismatch { expected: t, found: tope.len() });
    }
    let n = 2 * t;
    // plus[e] / minus[e]: vertices carrying +1 / -1 at element e.
    let mut plus = vec![0u64; t];
    let mut minus = vec![0u64; t];
    for k in 0..n {
        let v = cycle.vertex(k);
        for e in 1..=t {
            if v.get(e) > 0 {
                plus[e - 1] |= 1 << k;
            } else {
                minus[e - 1] |= 1 << k;
            }
        }
    }
    let target: Vec<i64> = tope.signs().collect();
    let mut masks: Vec<u64> = (1..1u64 << n)
        .filter(|&m| {
            (0..t).all(|e| (m & plus[e]).count_ones() as i64 - (m & minus[e]).count_ones() as i64 == target[e])
        })
        .collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut minimal: Vec<u64> = Vec::new();
    let mut out = Vec::with_capacity(masks.len());
    for m in masks {
        // Anything non-minimal contains a minimal solution, and those come first.
        let is_minimal = !minimal.iter().any(|&s| s & !m == 0);
        if is_minimal {
            minimal.push(m);
        }
        let members = (0..n).filter(|k| m >> k & 1 == 1).map(|k| cycle.vertex(k)).collect();
        out.push(SubsetSolution { mask: m, members, minimal: is_minimal });
    }
    Ok(out)
}
