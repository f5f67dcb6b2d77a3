//! Vertex-deletion stability of the perfect Roman domination number.

use crate::graph::{GraphError, Tree, Vertex};
use crate::oracle::brute_force;
use crate::solver::{prdf_number, SolverError};

/// Largest order [`check_observation1`] will enumerate optima for.
pub const OBSERVATION_MAX_ORDER: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub base: u64,
    /// `deltas[v] = γ(T - v) - γ(T)`.
    pub deltas: Vec<i64>,
    pub stable: bool,
}

impl StabilityReport {
    pub fn unstable_vertices(&self) -> Vec<Vertex> {
        (0..self.deltas.len()).filter(|&v| self.deltas[v] != 0).collect()
    }
}

/// Solves every `T - v` with the forest DP. Deleting the only vertex of `K1`
/// leaves the empty forest (weight 0), so `K1` is not stable.
pub fn stability_report(t: &Tree) -> StabilityReport {
    let base = prdf_number(t);
    let deltas: Vec<i64> = (0..t.n())
        .map(|v| {
            let forest = t.remove_vertex(v).expect("vertex in range");
            prdf_number(&forest) as i64 - base as i64
        })
        .collect();
    let stable = deltas.iter().all(|&d| d == 0);
    StabilityReport { base, deltas, stable }
}

pub fn is_stable(t: &Tree) -> bool {
    let base = prdf_number(t);
    (0..t.n()).all(|v| prdf_number(&t.remove_vertex(v).expect("vertex in range")) == base)
}

/// Hangs a pendant path of 1, 2 or 3 vertices off `u`; new labels start at
/// `n` next to `u` and increase outward.
pub fn attach_pendant_path(t: &Tree, u: Vertex, len: usize) -> Result<Tree, GraphError> {
    if !(1..=3).contains(&len) {
        return Err(GraphError::InvalidSize(format!("pendant path length must be 1, 2 or 3, got {len}")));
    }
    t.attach_pendant_path(u, len)
}

/// A `K_{1,3}` centered at `x2` with leaves `x1 < y1` of the tree, whose
/// third arm `x3` continues to `x4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PendantStar {
    pub x1: Vertex,
    pub y1: Vertex,
    pub x2: Vertex,
    pub x3: Vertex,
    pub x4: Vertex,
}

pub fn pendant_stars(t: &Tree) -> Vec<PendantStar> {
    let mut out = Vec::new();
    for x2 in 0..t.n() {
        if t.degree(x2) != 3 {
            continue;
        }
        let (leaves, inner): (Vec<Vertex>, Vec<Vertex>) = t.neighbors(x2).iter().partition(|&&w| t.is_leaf(w));
        if let ([x1, y1], [x3]) = (leaves.as_slice(), inner.as_slice()) {
            for &x4 in t.neighbors(*x3).iter().filter(|&&w| w != x2) {
                out.push(PendantStar { x1: *x1, y1: *y1, x2, x3: *x3, x4 });
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observation1Report {
    /// Number of minimum-weight functions inspected.
    pub optima: usize,
    /// Vertices valued 1 by some optimum.
    pub value_one: Vec<Vertex>,
    /// Leaves valued 2 by some optimum.
    pub leaf_two: Vec<Vertex>,
    pub stars: Vec<PendantStar>,
    /// Stars where some optimum differs from `x2 = 2` and `x1, y1, x3, x4 = 0`.
    pub star_violations: Vec<PendantStar>,
}

impl Observation1Report {
    pub fn no_ones_no_leaf_twos(&self) -> bool {
        self.value_one.is_empty() && self.leaf_two.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.no_ones_no_leaf_twos() && self.star_violations.is_empty()
    }
}

/// Inspects every minimum-weight function of `t` (exhaustive oracle) for
/// values of 1, 2-valued leaves, and the pendant-star pattern. Meant for
/// stable trees but reports rather than rejects otherwise.
pub fn check_observation1(t: &Tree) -> Result<Observation1Report, SolverError> {
    let n = t.n();
    if n > OBSERVATION_MAX_ORDER {
        return Err(SolverError::OracleLimit { n, max: OBSERVATION_MAX_ORDER });
    }
    let optima = brute_force(t.graph(), true)?.optima.expect("requested all optima");
    let value_one = (0..n).filter(|&v| optima.iter().any(|f| f.value(v) == 1)).collect();
    let leaf_two = (0..n).filter(|&v| t.is_leaf(v) && optima.iter().any(|f| f.value(v) == 2)).collect();
    let stars = pendant_stars(t);
    let star_violations = stars
        .iter()
        .copied()
        .filter(|s| {
            optima.iter().any(|f| {
                f.value(s.x2) != 2 || [s.x1, s.y1, s.x3, s.x4].iter().any(|&x| f.value(x) != 0)
            })
        })
        .collect();
    Ok(Observation1Report { optima: optima.len(), value_one, leaf_two, stars, star_violations })
}
