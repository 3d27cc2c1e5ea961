use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::gt::{is_admissible, GtTableau};
use super::shape::SkewShape;

/// One admissible transformation `Λ → Λ + δ_{ki}` between basis indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Transition {
    pub from: usize,
    pub to: usize,
    pub k: usize,
    pub i: usize,
}

/// Graph on admissible tableaux with an edge for every admissible
/// transformation; `Λ - δ_{ki}` edges are the same edges read backwards.
#[derive(Clone, Debug, Serialize)]
pub struct TransformationGraph {
    pub vertices: usize,
    pub edges: Vec<Transition>,
    pub connected: bool,
}

/// Index of each basis tableau, for locating transformation targets.
pub fn basis_index(basis: &[GtTableau]) -> HashMap<&GtTableau, usize> {
    basis.iter().enumerate().map(|(i, t)| (t, i)).collect()
}

/// All raising transitions `Λ → Λ + δ_{ki}` within `basis`,
/// `1 ≤ k ≤ m+n-1`, `1 ≤ i ≤ k'`.
pub fn raising_transitions(shape: &SkewShape, basis: &[GtTableau]) -> Vec<Transition> {
    let index = basis_index(basis);
    let mut out = Vec::new();
    for (from, t) in basis.iter().enumerate() {
        for k in 1..shape.rank() {
            for i in 1..=shape.r() + k {
                let up = t.shifted(k, i, 1);
                if let Some(&to) = index.get(&up) {
                    debug_assert!(is_admissible(shape, &up));
                    out.push(Transition { from, to, k, i });
                }
            }
        }
    }
    out
}

pub fn transformation_graph(shape: &SkewShape, basis: &[GtTableau]) -> TransformationGraph {
    let edges = raising_transitions(shape, basis);
    let pairs: Vec<(usize, usize)> = edges.iter().map(|e| (e.from, e.to)).collect();
    TransformationGraph {
        vertices: basis.len(),
        connected: is_connected(basis.len(), &pairs),
        edges,
    }
}

/// Undirected connectivity by breadth-first search.
pub fn is_connected(vertices: usize, edges: &[(usize, usize)]) -> bool {
    if vertices == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); vertices];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    reachable(&adj, 0).iter().all(|&x| x)
}

pub(crate) fn reachable(adj: &[Vec<usize>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_tableaux;

    #[test]
    fn small_graphs() {
        let s = SkewShape::straight(1, 1, vec![1, 0]).unwrap();
        let g = transformation_graph(&s, &enumerate_tableaux(&s));
        assert_eq!((g.vertices, g.edges.len(), g.connected), (2, 1, true));
        let z = SkewShape::straight(1, 1, vec![0, 0]).unwrap();
        let g = transformation_graph(&z, &enumerate_tableaux(&z));
        assert_eq!((g.vertices, g.edges.len(), g.connected), (1, 0, true));
    }

    #[test]
    fn disconnected_is_detected() {
        assert!(!is_connected(3, &[(0, 1)]));
        assert!(is_connected(3, &[(0, 1), (2, 1)]));
    }
}
