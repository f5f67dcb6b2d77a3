//! Exhaustive search over all `3^n` labelings, independent of the tree DP.
//!
//! Works on any simple graph. The scan is a depth-first walk over labelings
//! that discards a branch once a 0-vertex has its whole closed neighborhood
//! labelled without exactly one 2-neighbor, or once the partial weight can no
//! longer reach the best weight seen. No labeling that could be optimal is
//! skipped.

use crate::graph::{Graph, Vertex};
use crate::solver::{PrdfAssignment, SolverError};

pub const ORACLE_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub weight: u64,
    /// All minimum-weight functions in lexicographic order, when requested.
    pub optima: Option<Vec<PrdfAssignment>>,
}

struct Search<'g> {
    g: &'g Graph,
    order: Vec<Vertex>,
    check_at: Vec<Vec<Vertex>>,
    values: Vec<u8>,
    twos: Vec<u32>,
    enumerate_all: bool,
    best: u64,
    found: Vec<Vec<u8>>,
}

const UNSET: u8 = u8::MAX;

impl Search<'_> {
    fn run(&mut self, i: usize, weight: u64) {
        if i == self.order.len() {
            if weight < self.best {
                self.best = weight;
                self.found.clear();
            }
            if self.enumerate_all || self.found.is_empty() {
                self.found.push(self.values.clone());
            }
            return;
        }
        let v = self.order[i];
        for value in [0u8, 2, 1] {
            let w = weight + value as u64;
            let over = if self.enumerate_all { w > self.best } else { w >= self.best };
            if over {
                continue;
            }
            self.values[v] = value;
            if value == 2 {
                for &u in self.g.neighbors(v) {
                    self.twos[u] += 1;
                }
            }
            if self.consistent(i, v, value) {
                self.run(i + 1, w);
            }
            if value == 2 {
                for &u in self.g.neighbors(v) {
                    self.twos[u] -= 1;
                }
            }
            self.values[v] = UNSET;
        }
    }

    fn consistent(&self, i: usize, v: Vertex, value: u8) -> bool {
        if value == 0 && self.twos[v] > 1 {
            return false;
        }
        if value == 2 && self.g.neighbors(v).iter().any(|&u| self.values[u] == 0 && self.twos[u] > 1) {
            return false;
        }
        self.check_at[i].iter().all(|&u| self.values[u] != 0 || self.twos[u] == 1)
    }
}

/// Exact minimum PRDF weight of `g`, and optionally every optimal function.
pub fn brute_force(g: &Graph, enumerate_all: bool) -> Result<OracleResult, SolverError> {
    let n = g.n();
    if n > ORACLE_MAX_ORDER {
        return Err(SolverError::OracleLimit { n, max: ORACLE_MAX_ORDER });
    }

    // BFS order per component keeps neighborhoods closing early.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
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
                    order.push(w);
                }
            }
        }
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut check_at = vec![Vec::new(); n];
    for u in 0..n {
        let last = g.neighbors(u).iter().map(|&w| position[w]).fold(position[u], usize::max);
        check_at[last].push(u);
    }

    let mut search = Search {
        g,
        order,
        check_at,
        values: vec![UNSET; n],
        twos: vec![0; n],
        enumerate_all,
        // all-ones always qualifies
        best: if enumerate_all { n as u64 } else { n as u64 + 1 },
        found: Vec::new(),
    };
    search.run(0, 0);

    let optima = enumerate_all.then(|| {
        let mut found = std::mem::take(&mut search.found);
        found.sort_unstable();
        found.into_iter().map(|values| PrdfAssignment::new(values).expect("values in range")).collect()
    });
    Ok(OracleResult { weight: search.best, optima })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_path, make_star};

    #[test]
    fn small_cases() {
        let p3 = brute_force(make_path(3).unwrap().graph(), true).unwrap();
        assert_eq!(p3.weight, 2);
        assert_eq!(p3.optima.unwrap(), vec![PrdfAssignment::new(vec![0, 2, 0]).unwrap()]);

        let k1 = brute_force(make_path(1).unwrap().graph(), true).unwrap();
        assert_eq!(k1.weight, 1);
        assert_eq!(k1.optima.unwrap(), vec![PrdfAssignment::new(vec![1]).unwrap()]);

        assert_eq!(brute_force(make_path(4).unwrap().graph(), false).unwrap().weight, 3);
        assert_eq!(brute_force(make_path(4).unwrap().graph(), false).unwrap().optima, None);

        let empty = brute_force(&Graph::empty(0), true).unwrap();
        assert_eq!(empty.weight, 0);
        assert_eq!(empty.optima.unwrap().len(), 1);
    }

    #[test]
    fn p2_has_three_optima() {
        // (0,2), (2,0), (1,1)
        let r = brute_force(make_path(2).unwrap().graph(), true).unwrap();
        assert_eq!(r.weight, 2);
        let got: Vec<Vec<u8>> = r.optima.unwrap().iter().map(|f| f.values().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn general_graphs() {
        // C4: 2 on one vertex leaves its antipode without a 2-neighbor
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(brute_force(&c4, false).unwrap().weight, 3);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(brute_force(&k4, false).unwrap().weight, 2);
        assert_eq!(brute_force(make_star(6).unwrap().graph(), false).unwrap().weight, 2);
    }

    #[test]
    fn cap() {
        assert_eq!(
            brute_force(&Graph::empty(17), false),
            Err(SolverError::OracleLimit { n: 17, max: 16 })
        );
    }
}
