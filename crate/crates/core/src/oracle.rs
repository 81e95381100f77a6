//! Exact minimum representation sizes for tiny instances, by exhaustive
//! search over multisets of element supports.
//!
//! The search works on the dual view: a representation over ground set
//! `[t]` is determined by the support of each element, the set of vertices
//! whose sets contain it. A tuple's intersection count is the number of
//! supports containing the whole tuple, so the search enumerates multisets
//! of vertex subsets and checks the threshold condition per tuple.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::representation::Representation;

/// Search caps. Runtime is exponential in both, so callers opt into larger
/// instances explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_t: usize,
    pub max_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self { max_t: 8, max_n: 8 }
    }
}

/// A minimal representation found by search: its size, the threshold it
/// uses, and one witness as a list of element supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: usize,
    pub witness_k: u64,
    pub witness_supports: Vec<Vec<u32>>,
    pub limits: OracleLimits,
}

struct Search {
    is_edge: Vec<bool>,
    edges: Vec<usize>,
    non_edges: Vec<usize>,
    candidates: Vec<u32>,
    members: Vec<Vec<usize>>,
    counts: Vec<u32>,
    chosen: Vec<u32>,
}

impl Search {
    /// Precomputes every r-tuple and every useful support. A support never
    /// worth choosing (fewer than r vertices, or containing no edge) is
    /// dropped: removing one from a valid representation keeps it valid,
    /// so minimal solutions never use them.
    fn new(g: &Hypergraph) -> Self {
        let mut tuple_masks = Vec::new();
        let mut is_edge = Vec::new();
        let mut tuple = Vec::with_capacity(g.r());
        collect_tuples(g, 0, &mut tuple, &mut tuple_masks, &mut is_edge);
        let edges: Vec<usize> = (0..is_edge.len()).filter(|&i| is_edge[i]).collect();
        let non_edges: Vec<usize> = (0..is_edge.len()).filter(|&i| !is_edge[i]).collect();

        let mut candidates = Vec::new();
        let mut members = Vec::new();
        for mask in 0..(1u32 << g.n()) {
            if (mask.count_ones() as usize) < g.r() {
                continue;
            }
            let contained: Vec<usize> = (0..tuple_masks.len())
                .filter(|&i| tuple_masks[i] & mask == tuple_masks[i])
                .collect();
            if contained.iter().any(|&i| is_edge[i]) {
                candidates.push(mask);
                members.push(contained);
            }
        }

        let counts = vec![0; tuple_masks.len()];
        Self {
            is_edge,
            edges,
            non_edges,
            candidates,
            members,
            counts,
            chosen: Vec::new(),
        }
    }

    fn apply(&mut self, cand: usize, delta: i32) {
        for &t in &self.members[cand] {
            self.counts[t] = (self.counts[t] as i32 + delta) as u32;
        }
    }

    /// Fixed-threshold search for an exact-size solution. Supports are
    /// chosen with nondecreasing candidate index, so each multiset is
    /// visited once.
    fn dfs_k(&mut self, start: usize, rem: usize, k: u64) -> bool {
        if rem == 0 {
            return self.edges.iter().all(|&e| self.counts[e] as u64 >= k);
        }
        if self
            .edges
            .iter()
            .any(|&e| (self.counts[e] as u64) + (rem as u64) < k)
        {
            return false;
        }
        for i in start..self.candidates.len() {
            let helps = self.members[i]
                .iter()
                .any(|&t| self.is_edge[t] && (self.counts[t] as u64) < k);
            let safe = self.members[i]
                .iter()
                .all(|&t| self.is_edge[t] || (self.counts[t] as u64) + 2 <= k);
            if !helps || !safe {
                continue;
            }
            self.apply(i, 1);
            self.chosen.push(self.candidates[i]);
            if self.dfs_k(i, rem - 1, k) {
                return true;
            }
            self.chosen.pop();
            self.apply(i, -1);
        }
        false
    }

    /// Free-threshold search: succeeds when every edge count strictly
    /// exceeds every non-edge count, with any threshold in between as
    /// witness.
    fn dfs_tilde(&mut self, start: usize, rem: usize) -> Option<u64> {
        let max_non = self
            .non_edges
            .iter()
            .map(|&t| self.counts[t])
            .max()
            .unwrap_or(0);
        let min_edge = self
            .edges
            .iter()
            .map(|&t| self.counts[t])
            .min()
            .unwrap_or(0);
        if rem == 0 {
            if min_edge > max_non {
                return Some(max_non as u64 + 1);
            }
            return None;
        }
        if (min_edge as u64) + (rem as u64) <= max_non as u64 {
            return None;
        }
        for i in start..self.candidates.len() {
            self.apply(i, 1);
            self.chosen.push(self.candidates[i]);
            if let Some(k) = self.dfs_tilde(i, rem - 1) {
                return Some(k);
            }
            self.chosen.pop();
            self.apply(i, -1);
        }
        None
    }

    fn witness(&self) -> Vec<Vec<u32>> {
        self.chosen.iter().map(|&mask| mask_vertices(mask)).collect()
    }
}

fn collect_tuples(
    g: &Hypergraph,
    next: u32,
    tuple: &mut Vec<u32>,
    masks: &mut Vec<u32>,
    is_edge: &mut Vec<bool>,
) {
    if tuple.len() == g.r() {
        masks.push(tuple.iter().fold(0u32, |m, &v| m | (1 << v)));
        is_edge.push(g.contains_edge(tuple));
        return;
    }
    let remaining = g.r() - tuple.len();
    for v in next..=(g.n() as u32).saturating_sub(remaining as u32) {
        tuple.push(v);
        collect_tuples(g, v + 1, tuple, masks, is_edge);
        tuple.pop();
    }
}

fn mask_vertices(mask: u32) -> Vec<u32> {
    (0..32).filter(|&v| mask & (1 << v) != 0).collect()
}

fn check_limits(g: &Hypergraph, limits: &OracleLimits) -> Result<()> {
    if g.n() > limits.max_n {
        return Err(Error::CapExceeded(format!(
            "exhaustive search capped at {} vertices, instance has {}",
            limits.max_n,
            g.n()
        )));
    }
    Ok(())
}

/// Minimum ground-set size over all representations with the given fixed
/// threshold, found by iterative deepening.
pub fn theta_k_exact(g: &Hypergraph, k: u64, limits: &OracleLimits) -> Result<OracleResult> {
    if k == 0 {
        return Err(Error::InvalidInput("threshold must be at least 1".into()));
    }
    check_limits(g, limits)?;
    if g.edge_count() == 0 {
        return Ok(OracleResult {
            value: 0,
            witness_k: k,
            witness_supports: Vec::new(),
            limits: *limits,
        });
    }
    let mut search = Search::new(g);
    for t in 1..=limits.max_t {
        if search.dfs_k(0, t, k) {
            return Ok(OracleResult {
                value: t,
                witness_k: k,
                witness_supports: search.witness(),
                limits: *limits,
            });
        }
    }
    Err(Error::CapExceeded(format!(
        "no representation with threshold {k} within {} elements",
        limits.max_t
    )))
}

/// Minimum ground-set size over all thresholds, found by iterative
/// deepening on the size with the threshold left free.
pub fn theta_tilde_exact(g: &Hypergraph, limits: &OracleLimits) -> Result<OracleResult> {
    check_limits(g, limits)?;
    if g.edge_count() == 0 {
        return Ok(OracleResult {
            value: 0,
            witness_k: 1,
            witness_supports: Vec::new(),
            limits: *limits,
        });
    }
    let mut search = Search::new(g);
    for t in 1..=limits.max_t {
        if let Some(k) = search.dfs_tilde(0, t) {
            return Ok(OracleResult {
                value: t,
                witness_k: k,
                witness_supports: search.witness(),
                limits: *limits,
            });
        }
    }
    Err(Error::CapExceeded(format!(
        "no representation of any threshold within {} elements",
        limits.max_t
    )))
}

/// Rebuilds vertex sets from element supports: vertex `v` receives every
/// element whose support contains `v`.
pub fn representation_from_supports(
    n: usize,
    supports: &[Vec<u32>],
    k: u64,
) -> Result<Representation> {
    let mut vertex_sets: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (element, support) in supports.iter().enumerate() {
        for &v in support {
            if (v as usize) >= n {
                return Err(Error::InvalidInput(format!(
                    "support of element {element} mentions vertex {v}, n = {n}"
                )));
            }
            vertex_sets[v as usize].push(element as u32);
        }
    }
    for set in &mut vertex_sets {
        set.sort_unstable();
        set.dedup();
    }
    Ok(Representation::from_sets(
        n,
        k,
        supports.len() as u64,
        vertex_sets,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_representation;

    fn hg(r: usize, n: usize, edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::new(r, n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn edgeless_needs_nothing() {
        let g = hg(3, 5, &[]);
        let res = theta_tilde_exact(&g, &OracleLimits::default()).unwrap();
        assert_eq!(res.value, 0);
        assert_eq!(res.witness_k, 1);
        assert!(res.witness_supports.is_empty());
        assert_eq!(theta_k_exact(&g, 3, &OracleLimits::default()).unwrap().value, 0);
    }

    #[test]
    fn single_edge_needs_one_element() {
        for n in 3..=5 {
            let g = hg(3, n, &[&[0, 1, 2]]);
            let res = theta_tilde_exact(&g, &OracleLimits::default()).unwrap();
            assert_eq!(res.value, 1, "n = {n}");
            let rep =
                representation_from_supports(n, &res.witness_supports, res.witness_k).unwrap();
            assert!(verify_representation(&g, &rep).unwrap().valid);
        }
    }

    #[test]
    fn disjoint_edges_cannot_share_one_element() {
        let g = hg(3, 6, &[&[0, 1, 2], &[3, 4, 5]]);
        let res = theta_tilde_exact(&g, &OracleLimits::default()).unwrap();
        assert_eq!(res.value, 2);
        assert_eq!(res.witness_k, 1);
    }

    #[test]
    fn complete_graph_collapses_to_one_support() {
        let g = hg(3, 4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let res = theta_k_exact(&g, 1, &OracleLimits::default()).unwrap();
        assert_eq!(res.value, 1);
        assert_eq!(res.witness_supports, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn overlapping_pair_resists_threshold_one() {
        let g = hg(3, 4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert_eq!(theta_k_exact(&g, 1, &OracleLimits::default()).unwrap().value, 2);
        // A free threshold does no better here.
        assert_eq!(theta_tilde_exact(&g, &OracleLimits::default()).unwrap().value, 2);
    }

    #[test]
    fn repeated_supports_meet_higher_thresholds() {
        let g = hg(3, 3, &[&[0, 1, 2]]);
        let res = theta_k_exact(&g, 2, &OracleLimits::default()).unwrap();
        assert_eq!(res.value, 2);
        assert_eq!(res.witness_supports, vec![vec![0, 1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn caps_are_enforced() {
        let big = hg(3, 9, &[&[0, 1, 2]]);
        assert!(matches!(
            theta_tilde_exact(&big, &OracleLimits::default()),
            Err(Error::CapExceeded(_))
        ));

        let g = hg(3, 6, &[&[0, 1, 2], &[3, 4, 5]]);
        let tight = OracleLimits { max_t: 1, max_n: 8 };
        assert!(matches!(
            theta_tilde_exact(&g, &tight),
            Err(Error::CapExceeded(_))
        ));
        assert!(matches!(
            theta_k_exact(&g, 1, &tight),
            Err(Error::CapExceeded(_))
        ));
        assert!(theta_k_exact(&g, 0, &tight).is_err());
    }

    #[test]
    fn witnesses_verify_on_every_four_vertex_graph() {
        let all: Vec<Vec<u32>> =
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        for pick in 0u32..16 {
            let edges: Vec<Vec<u32>> = (0..4)
                .filter(|&i| pick & (1 << i) != 0)
                .map(|i| all[i as usize].clone())
                .collect();
            let g = Hypergraph::new(3, 4, edges).unwrap();
            let res = theta_tilde_exact(&g, &OracleLimits::default()).unwrap();
            let rep =
                representation_from_supports(4, &res.witness_supports, res.witness_k).unwrap();
            let report = verify_representation(&g, &rep).unwrap();
            assert!(report.valid, "graph mask {pick:04b}");
            assert_eq!(res.value as u64, rep.ground_size);
        }
    }

    #[test]
    fn search_is_deterministic() {
        let g = hg(3, 5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]]);
        let a = theta_tilde_exact(&g, &OracleLimits::default()).unwrap();
        let b = theta_tilde_exact(&g, &OracleLimits::default()).unwrap();
        assert_eq!(a, b);
    }
}
