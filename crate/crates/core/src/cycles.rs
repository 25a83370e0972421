//! Symmetric `2t`-cycles in tope graphs.
//!
//! Two topes are adjacent in the tope graph iff exactly one element
//! separates them. A symmetric cycle `R⁰, ..., R^{2t-1}` has consecutive
//! vertices adjacent and `R^{k+t} = -R^k`; along its first half every
//! element is flipped exactly once.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arrangements::{Arrangement, TopeSet};
use crate::sign::{check_ground_set, SignVector};
use crate::{Error, Result};

/// First violated cycle invariant. Indices are 0-based positions in the
/// vertex sequence; elements are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum CycleViolation {
    WrongLength { expected: usize, found: usize },
    VertexLength { index: usize, expected: usize, found: usize },
    NotAntipodal { index: usize },
    NotAdjacent { index: usize },
    RepeatedFlip { step: usize, element: usize },
    RepeatedVertex { index: usize },
    NotATope { index: usize },
}

impl fmt::Display for CycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleViolation::WrongLength { expected, found } => {
                write!(f, "expected {expected} vertices, found {found}")
            }
            CycleViolation::VertexLength { index, expected, found } => {
                write!(f, "vertex {index} has length {found}, expected {expected}")
            }
            CycleViolation::NotAntipodal { index } => {
                write!(f, "antipodal symmetry fails at k={index}")
            }
            CycleViolation::NotAdjacent { index } => {
                write!(f, "vertices {index} and {} are not adjacent", index + 1)
            }
            CycleViolation::RepeatedFlip { step, element } => {
                write!(f, "flip permutation broken: step {step} flips element {element} again")
            }
            CycleViolation::RepeatedVertex { index } => write!(f, "vertex {index} repeats"),
            CycleViolation::NotATope { index } => write!(f, "vertex {index} is not in the tope set"),
        }
    }
}

impl From<CycleViolation> for Error {
    fn from(v: CycleViolation) -> Self {
        Error::InvalidCycle(v.to_string())
    }
}

/// A validated symmetric `2t`-cycle.
///
/// Vertices keep the order they were given in, so `R^k` indices (and the
/// decomposition coefficients built on them) follow the caller's labelling.
/// Equality and serialization use the normalized order.
#[derive(Clone, Debug, Deserialize)]
#[serde(try_from = "RawCycle")]
pub struct SymmetricCycle {
    t: usize,
    vertices: Vec<SignVector>,
}

#[derive(Deserialize, Serialize)]
struct RawCycle {
    t: usize,
    vertices: Vec<SignVector>,
}

impl PartialEq for SymmetricCycle {
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t && normalize(&self.vertices) == normalize(&other.vertices)
    }
}

impl Eq for SymmetricCycle {}

impl Serialize for SymmetricCycle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawCycle { t: self.t, vertices: normalize(&self.vertices) }.serialize(serializer)
    }
}

impl TryFrom<RawCycle> for SymmetricCycle {
    type Error = Error;

    fn try_from(raw: RawCycle) -> Result<Self> {
        if raw.vertices.len() != 2 * raw.t {
            return Err(CycleViolation::WrongLength { expected: 2 * raw.t, found: raw.vertices.len() }.into());
        }
        Ok(validate_cycle(&raw.vertices, None)?)
    }
}

/// Checks every symmetric-cycle invariant, plus membership in `topes` when
/// given. Any starting vertex and either orientation are accepted.
pub fn validate_cycle(
    vertices: &[SignVector],
    topes: Option<&TopeSet>,
) -> std::result::Result<SymmetricCycle, CycleViolation> {
    let n = vertices.len();
    let t = vertices.first().map_or(0, SignVector::len);
    if t == 0 || n != 2 * t {
        return Err(CycleViolation::WrongLength { expected: 2 * t, found: n });
    }
    for (index, v) in vertices.iter().enumerate() {
        if v.len() != t {
            return Err(CycleViolation::VertexLength { index, expected: t, found: v.len() });
        }
    }
    for k in 0..t {
        if vertices[k + t] != -vertices[k] {
            return Err(CycleViolation::NotAntipodal { index: k });
        }
    }
    let mut flipped = 0u64;
    for k in 0..t {
        let step = vertices[k].separation_set(&vertices[k + 1]).expect("lengths checked");
        if step.len() != 1 {
            return Err(CycleViolation::NotAdjacent { index: k });
        }
        if flipped & step.0 != 0 {
            let element = step.elements().next().expect("singleton");
            return Err(CycleViolation::RepeatedFlip { step: k, element });
        }
        flipped |= step.0;
    }
    for k in 0..n {
        if !vertices[k].is_adjacent(&vertices[(k + 1) % n]) {
            return Err(CycleViolation::NotAdjacent { index: k });
        }
    }
    let mut sorted: Vec<(SignVector, usize)> = vertices.iter().copied().zip(0..).collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(CycleViolation::RepeatedVertex { index: w[1].1.max(w[0].1) });
    }
    if let Some(set) = topes {
        if let Some(index) = vertices.iter().position(|v| !set.contains(v)) {
            return Err(CycleViolation::NotATope { index });
        }
    }
    Ok(SymmetricCycle { t, vertices: vertices.to_vec() })
}

// Lexicographically smallest vertex first, then the orientation whose
// second vertex is smaller.
fn normalize(vertices: &[SignVector]) -> Vec<SignVector> {
    let n = vertices.len();
    let start = (0..n).min_by_key(|&i| vertices[i]).unwrap_or(0);
    let forward = vertices[(start + 1) % n];
    let backward = vertices[(start + n - 1) % n];
    if forward <= backward {
        (0..n).map(|k| vertices[(start + k) % n]).collect()
    } else {
        (0..n).map(|k| vertices[(start + n - k) % n]).collect()
    }
}

impl SymmetricCycle {
    /// The cycle starting at `start` that flips `order[0], order[1], ...` in turn.
    pub fn from_flips(start: SignVector, order: &[usize]) -> Result<Self> {
        let t = start.len();
        if order.len() != t {
            return Err(Error::DimensionMismatch { expected: t, found: order.len() });
        }
        if let Some(&e) = order.iter().find(|&&e| e == 0 || e > t) {
            return Err(Error::InvalidParams(format!("flip element {e} outside E_{t}")));
        }
        let mut half = Vec::with_capacity(t);
        let mut current = start;
        for &e in order {
            half.push(current);
            current = current.flip(e);
        }
        let vertices: Vec<SignVector> = half.iter().copied().chain(half.iter().map(|v| -v)).collect();
        Ok(validate_cycle(&vertices, None)?)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Vertices `R⁰, ..., R^{2t-1}` in construction order.
    pub fn vertices(&self) -> &[SignVector] {
        &self.vertices
    }

    /// The same cycle starting at its lexicographically smallest vertex,
    /// oriented so the second vertex is the smaller neighbour.
    pub fn normalized(&self) -> SymmetricCycle {
        SymmetricCycle { t: self.t, vertices: normalize(&self.vertices) }
    }

    /// `R^k`, indices taken modulo `2t`.
    pub fn vertex(&self, k: usize) -> SignVector {
        self.vertices[k % (2 * self.t)]
    }

    /// `R⁰, ..., R^{t-1}`.
    pub fn first_half(&self) -> &[SignVector] {
        &self.vertices[..self.t]
    }

    /// Element flipped at each step `k -> k + 1` of the first half.
    pub fn flip_order(&self) -> Vec<usize> {
        (0..self.t)
            .map(|k| {
                let s = self.vertices[k].separation_set(&self.vertices[k + 1]).expect("same length");
                s.elements().next().expect("adjacent vertices")
            })
            .collect()
    }

    pub fn contains(&self, tope: &SignVector) -> bool {
        self.vertices.contains(tope)
    }

    /// Vertices whose positive parts are inclusion-maximal among `V(R)`.
    pub fn maxpos_vertices(&self) -> Vec<SignVector> {
        let mut out: Vec<SignVector> = self
            .vertices
            .iter()
            .filter(|q| {
                let p = q.positive_part();
                !self.vertices.iter().any(|o| {
                    let op = o.positive_part();
                    op != p && p.is_subset(op)
                })
            })
            .copied()
            .collect();
        out.sort();
        out
    }

    /// A planar central arrangement whose chambers are exactly `V(R)`.
    ///
    /// The element flipped at step `k` gets the normal
    /// `R⁰(e) * (1, 2k + 1 - t)`: its line is crossed at the `k`-th of `t`
    /// increasing angles in `(0, pi)`, counted from the direction `(1, 0)`
    /// which lies in the chamber of `R⁰`.
    pub fn rank2_realization(&self) -> Arrangement {
        let t = self.t as i64;
        let start = self.vertices[0];
        let mut normals = vec![Vec::new(); self.t];
        for (k, e) in self.flip_order().into_iter().enumerate() {
            let s = start.get(e);
            normals[e - 1] = vec![s, s * (2 * k as i64 + 1 - t)];
        }
        Arrangement::from_integer_normals(&normals).expect("t >= 1 planar normals")
    }
}

/// `R⁰ = +...+`, then flip elements `1, 2, ..., t` in order.
pub fn canonical_hypercube_cycle(t: usize) -> Result<SymmetricCycle> {
    check_ground_set(t)?;
    if t < 2 {
        return Err(Error::InvalidParams("canonical cycle needs t >= 2".into()));
    }
    let order: Vec<usize> = (1..=t).collect();
    SymmetricCycle::from_flips(SignVector::all_plus(t), &order)
}

/// Depth-first search for a symmetric cycle inside `topes`.
///
/// From a start `W₀` the search walks `W₀ -> W₁ -> ... -> W_t = -W₀`,
/// flipping one not-yet-flipped element per step and staying inside the
/// tope set, then closes the cycle antipodally. Without an explicit start
/// every tope is tried in lexicographic order. Seed 0 tries elements in
/// increasing order; any other seed shuffles that order deterministically.
pub fn find_symmetric_cycle(topes: &TopeSet, start: Option<SignVector>, seed: u64) -> Result<Option<SymmetricCycle>> {
    let t = topes.t();
    if !topes.is_closed_under_negation() {
        return Err(Error::InvalidParams("tope set is not closed under negation".into()));
    }
    let mut order: Vec<usize> = (1..=t).collect();
    if seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let starts: Vec<SignVector> = match start {
        Some(s) => {
            if s.len() != t {
                return Err(Error::DimensionMismatch { expected: t, found: s.len() });
            }
            if topes.contains(&s) {
                vec![s]
            } else {
                Vec::new()
            }
        }
        None => topes.topes().to_vec(),
    };
    for s in starts {
        let mut path = vec![s];
        if search(topes, &order, 0, &mut path) {
            let vertices: Vec<SignVector> = path.iter().copied().chain(path.iter().map(|v| -v)).collect();
            return Ok(Some(validate_cycle(&vertices, Some(topes))?));
        }
    }
    Ok(None)
}

fn search(topes: &TopeSet, order: &[usize], flipped: u64, path: &mut Vec<SignVector>) -> bool {
    let t = order.len();
    if path.len() == t {
        // The last vertex must be adjacent to -W₀, which holds once t - 1
        // elements are flipped; -W₀ and its antipodes are members by closure.
        return true;
    }
    let current = *path.last().expect("non-empty path");
    for &e in order {
        if flipped >> (e - 1) & 1 == 1 {
            continue;
        }
        let next = current.flip(e);
        if topes.contains(&next) {
            path.push(next);
            if search(topes, order, flipped | 1 << (e - 1), path) {
                return true;
            }
            path.pop();
        }
    }
    false
}
