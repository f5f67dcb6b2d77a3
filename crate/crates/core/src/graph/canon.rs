use std::fmt;

use super::{bfs_order, Tree, Vertex};

/// Isomorphism-invariant encoding of an unrooted tree.
///
/// The tree is rooted at its centroid and written as a balanced parenthesis
/// string with children in lexicographic order (AHU). With two centroids the
/// smaller of the two rootings is kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of vertices of the encoded tree.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("parenthesis string"))
    }
}

pub fn canonical_form(t: &Tree) -> CanonicalForm {
    let encodings = centroids(t).into_iter().map(|c| rooted_encoding(t, c));
    CanonicalForm(encodings.min().expect("a tree has a centroid"))
}

pub(crate) fn centroids(t: &Tree) -> Vec<Vertex> {
    let n = t.n();
    let (order, parent) = bfs_order(t.graph(), 0);
    let mut size = vec![1usize; n];
    let mut heaviest = vec![0usize; n];
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX {
            size[p] += size[v];
            heaviest[p] = heaviest[p].max(size[v]);
        }
    }
    (0..n).filter(|&v| heaviest[v].max(n - size[v]) <= n / 2).collect()
}

fn rooted_encoding(t: &Tree, root: Vertex) -> Vec<u8> {
    let (order, parent) = bfs_order(t.graph(), root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); t.n()];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == v)
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for child in children {
            code.extend_from_slice(&child);
        }
        code.push(b')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}
