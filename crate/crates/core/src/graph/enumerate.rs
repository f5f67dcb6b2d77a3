use rand::Rng;

use super::{Graph, GraphError, Tree, Vertex};

/// Largest order accepted by [`enumerate_free_trees`].
pub const MAX_ENUMERATION_ORDER: usize = 18;

/// Iterator over the free trees of a fixed order, one per isomorphism class.
///
/// Rooted trees are generated as canonical level sequences (Beyer and
/// Hedetniemi's successor rule) and a sequence is kept only when its root is
/// a centroid. For two centroids, the rooting whose centroid-side half is not
/// smaller than the other half is kept, so each class appears once.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    levels: Vec<usize>,
    exhausted: bool,
}

pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees, GraphError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::InvalidSize(format!("free-tree enumeration supports 1..={MAX_ENUMERATION_ORDER}, got {n}")));
    }
    Ok(FreeTrees { levels: (0..n).collect(), exhausted: false })
}

impl FreeTrees {
    fn advance(&mut self) {
        let l = &mut self.levels;
        let Some(p) = (0..l.len()).rev().find(|&i| l[i] > 1) else {
            self.exhausted = true;
            return;
        };
        let q = (0..p).rev().find(|&i| l[i] == l[p] - 1).expect("parent precedes child");
        for i in p..l.len() {
            l[i] = l[i - (p - q)];
        }
    }

    fn centroid_rooted(&self) -> bool {
        let l = &self.levels;
        let n = l.len();
        let children: Vec<usize> = (1..n).filter(|&i| l[i] == 1).collect();
        for (k, &c) in children.iter().enumerate() {
            let end = children.get(k + 1).copied().unwrap_or(n);
            let size = end - c;
            if 2 * size > n {
                return false;
            }
            if 2 * size == n {
                let half: Vec<usize> = l[c..end].iter().map(|x| x - 1).collect();
                let rest: Vec<usize> = l[..c].iter().chain(&l[end..]).copied().collect();
                return rest >= half;
            }
        }
        true
    }

    fn current_tree(&self) -> Tree {
        let l = &self.levels;
        let mut g = Graph::empty(l.len());
        let mut last_at_level: Vec<Vertex> = vec![0; l.len()];
        for (i, &level) in l.iter().enumerate().skip(1) {
            let parent = last_at_level[level - 1];
            g.adjacency[parent].push(i);
            g.adjacency[i].push(parent);
            last_at_level[level] = i;
        }
        g.normalize();
        Tree::new_unchecked(g)
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        while !self.exhausted {
            let keep = self.centroid_rooted();
            let tree = keep.then(|| self.current_tree());
            self.advance();
            if tree.is_some() {
                return tree;
            }
        }
        None
    }
}

/// Decodes a Prüfer sequence into a labeled tree on `seq.len() + 2` vertices.
pub fn tree_from_prufer(seq: &[Vertex]) -> Result<Tree, GraphError> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(GraphError::VertexOutOfRange { v: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut g = Graph::empty(n);
    let mut link = |a: Vertex, b: Vertex| {
        g.adjacency[a].push(b);
        g.adjacency[b].push(a);
    };
    let mut ptr = degree.iter().position(|&d| d == 1).expect("some vertex is a leaf");
    let mut leaf = ptr;
    for &x in seq {
        link(leaf, x);
        degree[leaf] = 0;
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    link(leaf, n - 1);
    g.normalize();
    Ok(Tree::new_unchecked(g))
}

/// Uniformly random labeled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Tree, GraphError> {
    match n {
        0 => Err(GraphError::EmptyTree),
        1 => Ok(Tree::new_unchecked(Graph::empty(1))),
        _ => {
            let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_prufer(&seq)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use std::collections::HashSet;

    // A000081, independent of the centroid filter
    #[test]
    fn rooted_tree_counts() {
        let expected = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719];
        for (i, &count) in expected.iter().enumerate() {
            let mut it = FreeTrees { levels: (0..i + 1).collect(), exhausted: false };
            let mut seen = 0;
            while !it.exhausted {
                seen += 1;
                it.advance();
            }
            assert_eq!(seen, count, "rooted trees of order {}", i + 1);
        }
    }

    #[test]
    fn small_orders() {
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_free_trees(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_free_trees(0).is_err());
        assert!(enumerate_free_trees(19).is_err());
    }

    #[test]
    fn emitted_trees_are_valid_and_distinct() {
        for n in 1..=11 {
            let mut forms = HashSet::new();
            for t in enumerate_free_trees(n).unwrap() {
                assert_eq!(t.n(), n);
                assert!(Tree::new(t.graph().clone()).is_ok());
                assert!(forms.insert(canonical_form(&t)));
            }
        }
    }

    #[test]
    fn prufer_decoding() {
        // classic example: 4 4 4 5 on six vertices
        let t = tree_from_prufer(&[3, 3, 3, 4]).unwrap();
        assert_eq!(t.edges(), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(tree_from_prufer(&[]).unwrap().edges(), vec![(0, 1)]);
        assert!(tree_from_prufer(&[5]).is_err());
    }

    #[test]
    fn random_trees_are_trees() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 1..40 {
            let t = random_tree(n, &mut rng).unwrap();
            assert!(Tree::new(t.graph().clone()).is_ok());
        }
        assert!(random_tree(0, &mut rng).is_err());
    }
}
