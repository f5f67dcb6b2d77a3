//! Labeled simple graphs, trees and forests.
//!
//! Vertices are dense `0..n` labels. Adjacency lists are kept sorted, so two
//! graphs with the same edge set compare equal.

mod canon;
mod enumerate;
mod io;

pub use canon::{canonical_form, CanonicalForm};
pub use enumerate::{enumerate_free_trees, random_tree, tree_from_prufer, FreeTrees, MAX_ENUMERATION_ORDER};
pub use io::{emit_graph6, parse_edge_list, parse_graph6, write_edge_list};

use std::collections::VecDeque;
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: label {label} out of range for {n} vertices")]
    LabelOutOfRange { line: usize, label: usize, n: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: self-loop at {v}")]
    SelfLoop { line: usize, v: Vertex },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: Vertex, n: usize },
    #[error("a tree needs at least one vertex")]
    EmptyTree,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph contains a cycle")]
    Cyclic,
    #[error("invalid size: {0}")]
    InvalidSize(String),
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range labels. Errors report the 1-based index of the edge.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.insert_edge(u, v, i + 1)?;
        }
        g.normalize();
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex, line: usize) -> Result<(), GraphError> {
        let n = self.n();
        for label in [u, v] {
            if label >= n {
                return Err(GraphError::LabelOutOfRange { line, label, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, v });
        }
        if self.adjacency[u].contains(&v) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        Ok(())
    }

    pub(crate) fn normalize(&mut self) {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Component id per vertex, numbered in order of lowest member label.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_forest(&self) -> bool {
        let (_, count) = self.components();
        self.edge_count() + count == self.n()
    }

    /// Subgraph induced by `keep`; vertex `i` of the result is `keep[i]`.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut relabel = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        let adjacency = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<Vertex> = self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (relabel[w] != usize::MAX).then_some(relabel[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph { adjacency }
    }
}

/// A connected acyclic graph with at least one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: Graph,
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Self, GraphError> {
        if graph.n() == 0 {
            return Err(GraphError::EmptyTree);
        }
        let (_, count) = graph.components();
        if count != 1 {
            return Err(GraphError::Disconnected);
        }
        if graph.edge_count() != graph.n() - 1 {
            return Err(GraphError::Cyclic);
        }
        Ok(Tree { graph })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        Tree::new(Graph::from_edges(n, edges)?)
    }

    /// Caller guarantees `graph` is a tree.
    pub(crate) fn new_unchecked(graph: Graph) -> Self {
        debug_assert!(graph.n() >= 1 && graph.is_forest() && graph.components().1 == 1);
        Tree { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.graph.neighbors(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.graph.degree(v)
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.graph.edges()
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.degree(v) == 1
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n() })
        }
    }

    /// Leaf neighbors of `v`, ascending.
    pub fn leaves_of(&self, v: Vertex) -> Result<Vec<Vertex>, GraphError> {
        self.check_vertex(v)?;
        Ok(self.neighbors(v).iter().copied().filter(|&u| self.is_leaf(u)).collect())
    }

    /// Vertices in BFS order from `root`, with parent pointers
    /// (`usize::MAX` at the root).
    pub(crate) fn bfs(&self, root: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
        bfs_order(&self.graph, root)
    }

    /// A longest path, chosen deterministically: the lowest label that is an
    /// endpoint of some longest path, then the lexicographically smallest
    /// continuation.
    pub fn longest_path(&self) -> Vec<Vertex> {
        let n = self.n();
        let (order_a, parent_a) = self.bfs(0);
        let dist_0 = distances(&order_a, &parent_a);
        let a = farthest(&dist_0);
        let (order_b, parent_b) = self.bfs(a);
        let dist_a = distances(&order_b, &parent_b);
        let b = farthest(&dist_a);
        let (order_c, parent_c) = self.bfs(b);
        let dist_b = distances(&order_c, &parent_c);
        let diameter = dist_a[b];

        // In a tree ecc(v) = max(d(a, v), d(b, v)) for diametral a, b.
        let start = (0..n).find(|&v| dist_a[v].max(dist_b[v]) == diameter).unwrap_or(0);

        let (order, parent) = self.bfs(start);
        let depth = distances(&order, &parent);
        let mut height = vec![0usize; n];
        for &v in order.iter().rev() {
            let p = parent[v];
            if p != usize::MAX {
                height[p] = height[p].max(height[v] + 1);
            }
        }
        let mut path = Vec::with_capacity(diameter + 1);
        let mut cur = start;
        path.push(cur);
        while path.len() <= diameter {
            cur = *self
                .neighbors(cur)
                .iter()
                .find(|&&w| parent[w] == cur && depth[w] + height[w] == diameter)
                .expect("a diametral continuation exists");
            path.push(cur);
        }
        path
    }

    pub fn diameter(&self) -> usize {
        self.longest_path().len() - 1
    }

    /// `T - v`, relabelled order-preservingly.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Forest, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<Vertex> = (0..self.n()).filter(|&u| u != v).collect();
        Ok(Forest::from_parts(self.graph.induced(&keep), keep))
    }

    /// Removes a set of vertices whose remainder is known to stay connected.
    pub(crate) fn remove_vertices_connected(&self, removed: &[Vertex]) -> (Tree, Vec<Vertex>) {
        let keep: Vec<Vertex> = (0..self.n()).filter(|u| !removed.contains(u)).collect();
        let graph = self.graph.induced(&keep);
        (Tree::new_unchecked(graph), keep)
    }

    /// Hangs a path of `len` new vertices off `u`. The new vertex adjacent to
    /// `u` gets label `n`, and labels increase away from `u`.
    pub fn attach_pendant_path(&self, u: Vertex, len: usize) -> Result<Tree, GraphError> {
        self.check_vertex(u)?;
        let n = self.n();
        let mut adjacency = self.graph.adjacency.clone();
        adjacency.resize(n + len, Vec::new());
        let mut prev = u;
        for w in n..n + len {
            adjacency[prev].push(w);
            adjacency[w].push(prev);
            prev = w;
        }
        // only u's list can be unsorted; new labels exceed all old ones
        Ok(Tree::new_unchecked(Graph { adjacency }))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Tree, GraphError> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(GraphError::InvalidSize(format!("permutation of length {} for {n} vertices", perm.len())));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::InvalidSize("not a permutation".into()));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for (v, list) in self.graph.adjacency.iter().enumerate() {
            adjacency[perm[v]] = list.iter().map(|&w| perm[w]).collect();
        }
        let mut graph = Graph { adjacency };
        graph.normalize();
        Ok(Tree { graph })
    }
}

impl TryFrom<Graph> for Tree {
    type Error = GraphError;

    fn try_from(graph: Graph) -> Result<Self, Self::Error> {
        Tree::new(graph)
    }
}

pub(crate) fn bfs_order(graph: &Graph, root: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
    let n = graph.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    seen[root] = true;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in graph.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
            }
        }
    }
    (order, parent)
}

fn distances(order: &[Vertex], parent: &[Vertex]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; parent.len()];
    for &v in order {
        dist[v] = if parent[v] == usize::MAX { 0 } else { dist[parent[v]] + 1 };
    }
    dist
}

fn farthest(dist: &[usize]) -> Vertex {
    let mut best = 0;
    for (v, &d) in dist.iter().enumerate() {
        if d != usize::MAX && d > dist[best] {
            best = v;
        }
    }
    best
}

/// An acyclic graph, possibly empty, with its component partition.
///
/// `origin[i]` is the label vertex `i` had in the graph the forest was cut
/// from (identity when built directly).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    graph: Graph,
    component: Vec<usize>,
    component_count: usize,
    origin: Vec<Vertex>,
}

impl Forest {
    pub fn new(graph: Graph) -> Result<Self, GraphError> {
        if !graph.is_forest() {
            return Err(GraphError::Cyclic);
        }
        let origin = (0..graph.n()).collect();
        Ok(Forest::from_parts(graph, origin))
    }

    fn from_parts(graph: Graph, origin: Vec<Vertex>) -> Self {
        let (component, component_count) = graph.components();
        Forest { graph, component, component_count, origin }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn component_of(&self, v: Vertex) -> usize {
        self.component[v]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn origin(&self) -> &[Vertex] {
        &self.origin
    }

    /// Each component as a standalone tree, with its vertex list in the
    /// forest's labels.
    pub fn components(&self) -> Vec<(Tree, Vec<Vertex>)> {
        let mut members = vec![Vec::new(); self.component_count];
        for v in 0..self.n() {
            members[self.component[v]].push(v);
        }
        members
            .into_iter()
            .map(|keep| (Tree::new_unchecked(self.graph.induced(&keep)), keep))
            .collect()
    }
}

impl From<Tree> for Forest {
    fn from(tree: Tree) -> Self {
        let n = tree.n();
        Forest { graph: tree.graph, component: vec![0; n], component_count: 1, origin: (0..n).collect() }
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn make_path(n: usize) -> Result<Tree, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidSize("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Tree::from_edges(n, &edges)
}

/// Star `K_{1,k}` with center 0 and leaves `1..=k`.
pub fn make_star(k: usize) -> Result<Tree, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidSize("star needs k >= 1".into()));
    }
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Tree::from_edges(k + 1, &edges)
}

/// Double star `DS_{p,q}`: centers 0 and 1, leaves `2..p+2` on 0 and the
/// remaining `q` leaves on 1.
pub fn make_double_star(p: usize, q: usize) -> Result<Tree, GraphError> {
    if p == 0 || q == 0 {
        return Err(GraphError::InvalidSize("double star needs p, q >= 1".into()));
    }
    let mut edges = vec![(0, 1)];
    edges.extend((2..p + 2).map(|i| (0, i)));
    edges.extend((p + 2..p + q + 2).map(|i| (1, i)));
    Tree::from_edges(p + q + 2, &edges)
}

/// Spider with center 0. Legs are laid out one after another, each leg's
/// labels increasing away from the center.
pub fn make_spider(legs: &[usize]) -> Result<Tree, GraphError> {
    if legs.is_empty() || legs.contains(&0) {
        return Err(GraphError::InvalidSize("spider legs must be nonempty and positive".into()));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edges(n, &edges)
}
