//! The complexes `Λ(T, R)` and `Δ` on `E_t`, and their long f-vectors.
//!
//! `Λ(T, R)` is generated by the facets `E_t - S(T, Q)` for `Q ∈ Q(T, R)`.
//! `Δ` is the complex of acyclic subsets of the rank 2 oriented matroid with
//! tope set `V(R)`, reoriented on the negative part of `T`. A subset `A` is
//! acyclic there iff some reoriented tope is positive on all of `A`, that is
//! iff some `Q ∈ V(R)` agrees with `T` on `A`.

use serde::{Deserialize, Serialize};

use crate::cycles::SymmetricCycle;
use crate::decomposition::decompose;
use crate::sign::{ElementSet, SignVector};
use crate::{Error, Result};

/// Largest ground set for which faces are listed by a full subset scan.
pub const MAX_SCAN_ELEMENTS: usize = 24;

fn check_scan(t: usize) -> Result<()> {
    if t > MAX_SCAN_ELEMENTS {
        Err(Error::InvalidParams(format!("face scan over 2^{t} subsets refused")))
    } else {
        Ok(())
    }
}

/// Pairwise incomparable facets on `E_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetFamily {
    pub t: usize,
    pub facets: Vec<ElementSet>,
}

impl FacetFamily {
    /// Deduplicates, then requires the facets to form an antichain.
    pub fn new(t: usize, mut facets: Vec<ElementSet>) -> Result<Self> {
        let full = ElementSet::full(t);
        if let Some(f) = facets.iter().find(|f| !f.is_subset(full)) {
            return Err(Error::InvalidParams(format!("facet {f:?} is not a subset of E_{t}")));
        }
        facets.sort_by_key(|f| f.to_vec());
        facets.dedup();
        for (i, a) in facets.iter().enumerate() {
            for b in &facets[i + 1..] {
                if a.is_subset(*b) || b.is_subset(*a) {
                    return Err(Error::Internal(format!("facets {a:?} and {b:?} are comparable")));
                }
            }
        }
        Ok(FacetFamily { t, facets })
    }

    /// Every subset of some facet, in increasing bitmask order.
    pub fn faces(&self) -> Result<Vec<ElementSet>> {
        check_scan(self.t)?;
        Ok((0..1u64 << self.t).map(ElementSet).filter(|a| self.facets.iter().any(|f| a.is_subset(*f))).collect())
    }

    pub fn f_vector(&self) -> Result<LongFVector> {
        Ok(long_f_vector(&self.faces()?, self.t))
    }
}

/// Facets `E_t - S(T, Q)` over the members `Q` of `Q(T, R)`.
pub fn lambda_facets(tope: &SignVector, cycle: &SymmetricCycle) -> Result<FacetFamily> {
    let d = decompose(tope, cycle)?;
    let t = cycle.t();
    let facets =
        d.members.iter().map(|q| tope.separation_set(q).map(|s| s.complement(t))).collect::<Result<Vec<_>>>()?;
    FacetFamily::new(t, facets)
}

/// Faces of `Δ`: subsets `A` with `A ∩ S(T, Q) = ∅` for some `Q ∈ V(R)`.
pub fn delta_faces(tope: &SignVector, cycle: &SymmetricCycle) -> Result<Vec<ElementSet>> {
    let t = cycle.t();
    check_scan(t)?;
    let separations = cycle.vertices().iter().map(|q| tope.separation_set(q)).collect::<Result<Vec<_>>>()?;
    Ok((0..1u64 << t).map(ElementSet).filter(|a| separations.iter().any(|s| a.is_disjoint(*s))).collect())
}

/// Whether the reoriented rank 2 oriented matroid has no non-zero
/// non-negative covector: no vertex of `R` equals `T`, and no cocircuit
/// between consecutive vertices `R^k, R^{k+1}` is non-negative (both agree
/// with `T` off the element flipped between them).
pub fn is_totally_cyclic(tope: &SignVector, cycle: &SymmetricCycle) -> Result<bool> {
    let n = 2 * cycle.t();
    for k in 0..n {
        let here = tope.separation_set(&cycle.vertex(k))?;
        if here.is_empty() {
            return Ok(false);
        }
        let step = cycle.vertex(k).separation_set(&cycle.vertex(k + 1))?;
        let next = tope.separation_set(&cycle.vertex(k + 1))?;
        if here.is_subset(step) && next.is_subset(step) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(f_0, ..., f_t)` where `f_j` counts faces of cardinality `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFVector")]
pub struct LongFVector {
    pub t: usize,
    pub f: Vec<u64>,
}

#[derive(Deserialize)]
struct RawFVector {
    t: usize,
    f: Vec<u64>,
}

impl TryFrom<RawFVector> for LongFVector {
    type Error = Error;

    fn try_from(raw: RawFVector) -> Result<Self> {
        LongFVector::new(raw.t, raw.f)
    }
}

impl LongFVector {
    pub fn new(t: usize, f: Vec<u64>) -> Result<Self> {
        if f.len() != t + 1 {
            return Err(Error::DimensionMismatch { expected: t + 1, found: f.len() });
        }
        Ok(LongFVector { t, f })
    }

    /// `f_j`; zero outside `0..=t`.
    pub fn get(&self, j: usize) -> u64 {
        self.f.get(j).copied().unwrap_or(0)
    }
}

/// Counts faces by cardinality.
pub fn long_f_vector(faces: &[ElementSet], t: usize) -> LongFVector {
    let mut f = vec![0u64; t + 1];
    for a in faces {
        f[a.len()] += 1;
    }
    LongFVector { t, f }
}
