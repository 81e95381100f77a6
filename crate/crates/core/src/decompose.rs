//! Partition of the edge set into matchings by greedy proper coloring of the
//! edge-intersection graph. Two edges conflict iff they share a vertex, and
//! an edge meets at most `(max_degree - 1) * r` others, so the greedy pass
//! needs at most `(max_degree - 1) * r + 1` colors.

use std::fmt::Write as _;

use crate::hypergraph::Hypergraph;

/// A partition of the edges of a hypergraph into matchings, indexed by color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingDecomposition {
    l: usize,
    assignment: Vec<usize>,
    matchings: Vec<Vec<usize>>,
}

impl MatchingDecomposition {
    /// Number of matchings (colors actually used).
    pub fn l(&self) -> usize {
        self.l
    }

    /// Matching index per edge, in the hypergraph's edge order.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Edge indices grouped by matching; no matching is empty.
    pub fn matchings(&self) -> &[Vec<usize>] {
        &self.matchings
    }

    /// `.dec` text dump: a line with the matching count, then one
    /// `<edge index> <matching index>` line per edge.
    pub fn to_dec_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.l);
        for (edge, matching) in self.assignment.iter().enumerate() {
            let _ = writeln!(out, "{edge} {matching}");
        }
        out
    }
}

/// Greedily colors edges in lexicographic order, giving each edge the
/// smallest color unused among previously colored intersecting edges.
pub fn decompose(g: &Hypergraph) -> MatchingDecomposition {
    let edges = g.edges();
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut assignment = vec![0usize; edges.len()];
    let mut l = 0usize;
    let mut in_use: Vec<bool> = Vec::new();

    for (idx, edge) in edges.iter().enumerate() {
        in_use.clear();
        in_use.resize(l + 1, false);
        for &v in edge {
            for &other in &incidence[v as usize] {
                in_use[assignment[other]] = true;
            }
        }
        let color = in_use.iter().position(|used| !used).unwrap();
        assignment[idx] = color;
        l = l.max(color + 1);
        for &v in edge {
            incidence[v as usize].push(idx);
        }
    }

    let mut matchings = vec![Vec::new(); l];
    for (idx, &color) in assignment.iter().enumerate() {
        matchings[color].push(idx);
    }
    MatchingDecomposition {
        l,
        assignment,
        matchings,
    }
}

/// Checks that the decomposition is a partition of the edges of `g` into
/// matchings: every edge index appears in exactly one matching, consistent
/// with `assignment`, and edges within a matching are pairwise disjoint.
pub fn verify_decomposition(g: &Hypergraph, d: &MatchingDecomposition) -> bool {
    let m = g.edge_count();
    if d.assignment.len() != m || d.matchings.len() != d.l {
        return false;
    }
    let mut seen = vec![false; m];
    for (color, matching) in d.matchings.iter().enumerate() {
        let mut covered = vec![false; g.n()];
        for &idx in matching {
            if idx >= m || seen[idx] || d.assignment[idx] != color {
                return false;
            }
            seen[idx] = true;
            for &v in &g.edges()[idx] {
                if covered[v as usize] {
                    return false;
                }
                covered[v as usize] = true;
            }
        }
    }
    seen.into_iter().all(|s| s)
}
