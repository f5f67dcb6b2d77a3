//! Exact perfect Roman domination on forests by a four-state tree DP.
//!
//! Every vertex of a rooted forest is in one of four states:
//!
//! | state | value | contract with the parent |
//! |-------|-------|--------------------------|
//! | `A`   | 0     | has exactly one child valued 2; parent must not be 2 |
//! | `B`   | 0     | has no child valued 2; parent must be 2 |
//! | `C`   | 1     | none |
//! | `D`   | 2     | none |
//!
//! Children allowed under each parent state: `D` takes children in `{B, C, D}`
//! (an `A` child would see two 2-neighbors), `C` takes `{A, C, D}`, `B` takes
//! `{A, C}`, and `A` takes exactly one `D` child with the rest in `{A, C}`.
//! A root can never be in state `B`.

use std::fmt;

use thiserror::Error;

use crate::graph::{Forest, Graph, Tree, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("allowed value set must be a nonempty subset of {{0, 1, 2}}")]
    BadAllowedSet,
    #[error("assignment value {0} is not in {{0, 1, 2}}")]
    BadValue(u8),
    #[error("exhaustive search is capped at {max} vertices, got {n}")]
    OracleLimit { n: usize, max: usize },
}

/// Graphs the DP can run on.
pub trait Acyclic {
    fn graph(&self) -> &Graph;
}

impl Acyclic for Tree {
    fn graph(&self) -> &Graph {
        Tree::graph(self)
    }
}

impl Acyclic for Forest {
    fn graph(&self) -> &Graph {
        Forest::graph(self)
    }
}

/// A possibly infinite weight; `Finite(_) < Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    Finite(u64),
    Infinite,
}

impl Weight {
    pub fn finite(self) -> Option<u64> {
        match self {
            Weight::Finite(w) => Some(w),
            Weight::Infinite => None,
        }
    }

    fn from_cost(c: u64) -> Self {
        if c >= INF {
            Weight::Infinite
        } else {
            Weight::Finite(c)
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(w) => write!(f, "{w}"),
            Weight::Infinite => f.write_str("inf"),
        }
    }
}

/// Saturating "infinity": any real weight is at most `2n`.
const INF: u64 = u64::MAX / 4;

fn add(a: u64, b: u64) -> u64 {
    (a + b).min(INF)
}

/// Cost change when a child moves from its best `{A, C}` state to `D`.
fn swap_delta(c: &[u64; 4]) -> i64 {
    c[D] as i64 - c[A].min(c[C]) as i64
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;

const STATE_VALUE: [u8; 4] = [0, 0, 1, 2];

/// A function `V -> {0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrdfAssignment {
    values: Vec<u8>,
}

impl PrdfAssignment {
    pub fn new(values: Vec<u8>) -> Result<Self, SolverError> {
        if let Some(&bad) = values.iter().find(|&&x| x > 2) {
            return Err(SolverError::BadValue(bad));
        }
        Ok(PrdfAssignment { values })
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn value(&self, v: Vertex) -> u8 {
        self.values[v]
    }

    pub fn weight(&self) -> u64 {
        self.values.iter().map(|&x| x as u64).sum()
    }

    /// Vertices valued 0 whose number of 2-valued neighbors is not exactly one.
    pub fn violations(&self, g: &Graph) -> Vec<Vertex> {
        (0..g.n())
            .filter(|&u| self.values[u] == 0)
            .filter(|&u| g.neighbors(u).iter().filter(|&&w| self.values[w] == 2).count() != 1)
            .collect()
    }

    pub fn is_perfect_roman(&self, g: &Graph) -> bool {
        self.values.len() == g.n() && self.violations(g).is_empty()
    }
}

impl fmt::Display for PrdfAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Optimal subtree costs for every vertex of a rooted forest.
#[derive(Debug, Clone)]
pub struct DpTable {
    order: Vec<Vertex>,
    parent: Vec<Vertex>,
    cost: Vec<[u64; 4]>,
}

impl DpTable {
    /// Roots every component at its lowest label, except the component of
    /// `root` (if given), which is rooted there.
    fn build(g: &Graph, root: Option<Vertex>) -> Self {
        let n = g.n();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for s in root.into_iter().chain(0..n) {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut head = order.len();
            order.push(s);
            while head < order.len() {
                let u = order[head];
                head += 1;
                for &w in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = u;
                        order.push(w);
                    }
                }
            }
        }

        let mut cost = vec![[0u64; 4]; n];
        for &v in order.iter().rev() {
            let mut sum_ac = 0u64;
            let mut sum_acd = 0u64;
            let mut sum_bcd = 0u64;
            let mut best_swap: Option<i64> = None;
            for &w in g.neighbors(v) {
                if w == parent[v] {
                    continue;
                }
                let c = cost[w];
                let ac = c[A].min(c[C]);
                sum_ac = add(sum_ac, ac);
                sum_acd = add(sum_acd, ac.min(c[D]));
                sum_bcd = add(sum_bcd, c[B].min(c[C]).min(c[D]));
                let swap = swap_delta(&c);
                best_swap = Some(best_swap.map_or(swap, |b| b.min(swap)));
            }
            // sum_ac + swap = D of one child plus min(A, C) of the rest, never negative
            let a = best_swap.map_or(INF, |d| (sum_ac as i64 + d) as u64).min(INF);
            cost[v] = [a, sum_ac, add(1, sum_acd), add(2, sum_bcd)];
        }
        DpTable { order, parent, cost }
    }

    /// `[A, B, C, D]` costs of the subtree below `v`.
    pub fn states(&self, v: Vertex) -> [Weight; 4] {
        self.cost[v].map(Weight::from_cost)
    }

    fn roots(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.order.iter().copied().filter(|&v| self.parent[v] == usize::MAX)
    }

    fn root_value(&self, v: Vertex) -> u64 {
        let c = self.cost[v];
        c[A].min(c[C]).min(c[D])
    }
}

/// Subtree cost table with every component rooted at its lowest label.
pub fn dp_table<F: Acyclic + ?Sized>(f: &F) -> DpTable {
    DpTable::build(f.graph(), None)
}

/// Minimum weight of a perfect Roman dominating function; 0 for the empty
/// forest.
pub fn prdf_number<F: Acyclic + ?Sized>(f: &F) -> u64 {
    let table = DpTable::build(f.graph(), None);
    table.roots().map(|r| table.root_value(r)).sum()
}

fn pick(cost: &[u64; 4], states: &[usize]) -> usize {
    let mut best = states[0];
    for &s in &states[1..] {
        if cost[s] < cost[best] {
            best = s;
        }
    }
    best
}

/// Assigns states top-down; a vertex in state `A` fixes all its children at
/// once (lowest-delta child becomes `D`, ties to the lower label).
fn assign_states(g: &Graph, table: &DpTable, root_states: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut state = vec![usize::MAX; n];
    for &v in &table.order {
        let p = table.parent[v];
        if p == usize::MAX {
            state[v] = pick(&table.cost[v], root_states);
        } else if state[v] == usize::MAX {
            state[v] = match state[p] {
                D => pick(&table.cost[v], &[B, C, D]),
                C => pick(&table.cost[v], &[A, C, D]),
                _ => pick(&table.cost[v], &[A, C]),
            };
        }
        if state[v] == A {
            let children = g.neighbors(v).iter().copied().filter(|&w| w != p);
            let mut chosen = usize::MAX;
            let mut chosen_delta = i64::MAX;
            for w in children {
                let delta = swap_delta(&table.cost[w]);
                if delta < chosen_delta {
                    chosen = w;
                    chosen_delta = delta;
                }
            }
            state[chosen] = D;
        }
    }
    state
}

/// A minimum-weight function, with ties broken towards the earlier state
/// (`A < B < C < D`) and then the lower child label.
pub fn optimal_assignment<F: Acyclic + ?Sized>(f: &F) -> PrdfAssignment {
    let g = f.graph();
    let table = DpTable::build(g, None);
    let state = assign_states(g, &table, &[A, C, D]);
    PrdfAssignment { values: state.iter().map(|&s| STATE_VALUE[s]).collect() }
}

fn root_states(allowed: &[u8]) -> Result<Vec<usize>, SolverError> {
    if allowed.is_empty() || allowed.iter().any(|&x| x > 2) {
        return Err(SolverError::BadAllowedSet);
    }
    let mut states: Vec<usize> = allowed
        .iter()
        .map(|&x| match x {
            0 => A,
            1 => C,
            _ => D,
        })
        .collect();
    states.sort_unstable();
    states.dedup();
    Ok(states)
}

/// Minimum weight over functions with `f(v)` in `allowed`.
pub fn prdf_number_forced(t: &Tree, v: Vertex, allowed: &[u8]) -> Result<Weight, SolverError> {
    if v >= t.n() {
        return Err(SolverError::VertexOutOfRange { v, n: t.n() });
    }
    let states = root_states(allowed)?;
    let table = DpTable::build(t.graph(), Some(v));
    let best = states.iter().map(|&s| table.cost[v][s]).min().expect("nonempty");
    Ok(Weight::from_cost(best))
}

/// A minimum-weight function with `f(v)` in `allowed`, if one exists.
pub fn forced_assignment(t: &Tree, v: Vertex, allowed: &[u8]) -> Result<Option<PrdfAssignment>, SolverError> {
    if v >= t.n() {
        return Err(SolverError::VertexOutOfRange { v, n: t.n() });
    }
    let states = root_states(allowed)?;
    let table = DpTable::build(t.graph(), Some(v));
    if states.iter().all(|&s| table.cost[v][s] >= INF) {
        return Ok(None);
    }
    let state = assign_states(t.graph(), &table, &states);
    Ok(Some(PrdfAssignment { values: state.iter().map(|&s| STATE_VALUE[s]).collect() }))
}

/// Vertices valued 0 by every minimum-weight function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WSet(Vec<Vertex>);

impl WSet {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<Vertex> for WSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        WSet(v)
    }
}

/// Whether every minimum-weight function assigns 0 to `v`, i.e. forcing
/// `f(v) >= 1` strictly increases the optimum.
pub fn in_w_set(t: &Tree, v: Vertex) -> Result<bool, SolverError> {
    let forced = prdf_number_forced(t, v, &[1, 2])?;
    Ok(forced > Weight::Finite(prdf_number(t)))
}

/// The forced-zero set, by one rerooted DP per vertex.
pub fn w_set(t: &Tree) -> WSet {
    let base = Weight::Finite(prdf_number(t));
    (0..t.n())
        .filter(|&v| prdf_number_forced(t, v, &[1, 2]).expect("vertex in range") > base)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_double_star, make_path, make_star};

    // Plain 3^n scan, kept separate from the pruned oracle.
    fn naive(g: &Graph) -> (u64, Vec<Vec<u8>>) {
        let n = g.n();
        let mut best = u64::MAX;
        let mut all = Vec::new();
        let total = 3usize.pow(n as u32);
        for code in 0..total {
            let mut x = code;
            let values: Vec<u8> = (0..n)
                .map(|_| {
                    let d = (x % 3) as u8;
                    x /= 3;
                    d
                })
                .collect();
            let f = PrdfAssignment { values };
            if !f.is_perfect_roman(g) {
                continue;
            }
            let w = f.weight();
            if w < best {
                best = w;
                all.clear();
            }
            if w == best {
                all.push(f.values);
            }
        }
        all.sort();
        (best, all)
    }

    fn naive_forced(g: &Graph, v: Vertex, allowed: &[u8]) -> Option<u64> {
        let n = g.n();
        (0..3usize.pow(n as u32))
            .map(|mut x| {
                (0..n)
                    .map(|_| {
                        let d = (x % 3) as u8;
                        x /= 3;
                        d
                    })
                    .collect::<Vec<u8>>()
            })
            .map(|values| PrdfAssignment { values })
            .filter(|f| allowed.contains(&f.value(v)) && f.is_perfect_roman(g))
            .map(|f| f.weight())
            .min()
    }

    #[test]
    fn frozen_values_match_naive_scan() {
        assert_eq!(naive(make_path(3).unwrap().graph()), (2, vec![vec![0, 2, 0]]));
        assert_eq!(naive(make_path(4).unwrap().graph()).0, 3);
        assert_eq!(naive(make_path(6).unwrap().graph()).0, 4);
        assert_eq!(naive(make_star(5).unwrap().graph()).0, 2);
        assert_eq!(naive(make_double_star(2, 2).unwrap().graph()).0, 4);
        assert_eq!(naive(make_path(2).unwrap().graph()).0, 2);
        assert_eq!(naive(make_path(1).unwrap().graph()).0, 1);
    }

    #[test]
    fn numbers() {
        assert_eq!(prdf_number(&make_path(2).unwrap()), 2);
        assert_eq!(prdf_number(&make_path(1).unwrap()), 1);
        assert_eq!(prdf_number(&make_path(3).unwrap()), 2);
        assert_eq!(prdf_number(&make_path(6).unwrap()), 4);
        assert_eq!(prdf_number(&make_star(5).unwrap()), 2);
        assert_eq!(prdf_number(&make_double_star(2, 2).unwrap()), 4);
        assert_eq!(prdf_number(&Forest::new(Graph::empty(0)).unwrap()), 0);
        assert_eq!(prdf_number(&Forest::new(Graph::empty(3)).unwrap()), 3);
    }

    #[test]
    fn leaf_base_case() {
        let table = dp_table(&make_path(1).unwrap());
        assert_eq!(table.states(0), [Weight::Infinite, Weight::Finite(0), Weight::Finite(1), Weight::Finite(2)]);
    }

    #[test]
    fn witnesses() {
        let p3 = make_path(3).unwrap();
        assert_eq!(optimal_assignment(&p3).values(), &[0, 2, 0]);
        assert_eq!(optimal_assignment(&make_path(1).unwrap()).values(), &[1]);
        let p6 = make_path(6).unwrap();
        let f = optimal_assignment(&p6);
        assert_eq!(f.weight(), 4);
        assert!(f.is_perfect_roman(p6.graph()));
    }

    #[test]
    fn forced_values() {
        let p3 = make_path(3).unwrap();
        // oracle filtered by f(v): the center already holds 2 in (0,2,0); a
        // leaf forced up costs one more
        assert_eq!(naive_forced(p3.graph(), 1, &[1, 2]), Some(2));
        assert_eq!(naive_forced(p3.graph(), 0, &[1, 2]), Some(3));
        assert_eq!(naive_forced(p3.graph(), 0, &[0]), Some(2));
        assert_eq!(prdf_number_forced(&p3, 1, &[1, 2]).unwrap(), Weight::Finite(2));
        assert_eq!(prdf_number_forced(&p3, 0, &[1, 2]).unwrap(), Weight::Finite(3));
        assert_eq!(prdf_number_forced(&p3, 0, &[0]).unwrap(), Weight::Finite(2));
        let k1 = make_path(1).unwrap();
        assert_eq!(prdf_number_forced(&k1, 0, &[0]).unwrap(), Weight::Infinite);
        assert_eq!(forced_assignment(&k1, 0, &[0]).unwrap(), None);
        assert_eq!(forced_assignment(&p3, 1, &[1]).unwrap().unwrap().weight(), 3);
        assert_eq!(prdf_number_forced(&p3, 3, &[0]), Err(SolverError::VertexOutOfRange { v: 3, n: 3 }));
        assert_eq!(prdf_number_forced(&p3, 0, &[]), Err(SolverError::BadAllowedSet));
        assert_eq!(prdf_number_forced(&p3, 0, &[3]), Err(SolverError::BadAllowedSet));
    }

    #[test]
    fn w_sets() {
        assert_eq!(w_set(&make_path(3).unwrap()).vertices(), &[0, 2]);
        assert!(w_set(&make_path(1).unwrap()).is_empty());
        let p6 = make_path(6).unwrap();
        let (_, optima) = naive(p6.graph());
        let expected: WSet = (0..6).filter(|&v| optima.iter().all(|f| f[v] == 0)).collect();
        assert_eq!(w_set(&p6), expected);
    }

    #[test]
    fn assignment_validation() {
        assert_eq!(PrdfAssignment::new(vec![0, 3]), Err(SolverError::BadValue(3)));
        let p3 = make_path(3).unwrap();
        let f = PrdfAssignment::new(vec![0, 1, 0]).unwrap();
        assert_eq!(f.violations(p3.graph()), vec![0, 2]);
        assert_eq!(f.to_string(), "(0,1,0)");
        assert_eq!(Weight::Finite(3).to_string(), "3");
        assert!(Weight::Finite(u64::MAX) < Weight::Infinite);
    }

    #[test]
    fn path_closed_form_against_naive() {
        for n in 1..=10 {
            let p = make_path(n).unwrap();
            let expected = (2 * n as u64).div_ceil(3);
            assert_eq!(naive(p.graph()).0, expected);
            assert_eq!(prdf_number(&p), expected);
        }
    }
}
