//! Decides whether a candidate representation matches a hypergraph: every
//! edge's sets must intersect in at least `k` elements, every non-edge's in
//! fewer. Exhaustive mode walks all C(n, r) tuples; sampled mode checks all
//! edges plus random non-edges.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::representation::Representation;
use crate::sets::{count_intersect, count_intersect_multi, intersect_into};

/// Maximum number of violations retained in a report.
pub const VIOLATION_CAP: usize = 100;

/// One tuple whose intersection count is on the wrong side of the threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub tuple: Vec<u32>,
    pub count: u64,
    pub is_edge: bool,
}

/// Verification outcome. `valid` refers to the checked tuples; `exhaustive`
/// records whether that was all C(n, r) of them. Violations are capped at
/// [`VIOLATION_CAP`] with `truncated` set once the cap is hit.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub valid: bool,
    pub exhaustive: bool,
    pub checked_tuples: u64,
    pub violations: Vec<Violation>,
    pub truncated: bool,
    pub min_edge_count: Option<u64>,
    pub max_non_edge_count: Option<u64>,
}

impl VerificationReport {
    fn new(exhaustive: bool) -> Self {
        Self {
            valid: true,
            exhaustive,
            checked_tuples: 0,
            violations: Vec::new(),
            truncated: false,
            min_edge_count: None,
            max_non_edge_count: None,
        }
    }

    fn record(&mut self, tuple: &[u32], count: u64, is_edge: bool, k: u64) {
        self.checked_tuples += 1;
        if is_edge {
            self.min_edge_count = Some(self.min_edge_count.map_or(count, |m| m.min(count)));
        } else {
            self.max_non_edge_count = Some(self.max_non_edge_count.map_or(count, |m| m.max(count)));
        }
        if is_edge != (count >= k) {
            self.valid = false;
            if self.violations.len() < VIOLATION_CAP {
                self.violations.push(Violation {
                    tuple: tuple.to_vec(),
                    count,
                    is_edge,
                });
            } else {
                self.truncated = true;
            }
        }
    }
}

/// Exact size of the common intersection of the tuple's vertex sets.
pub fn intersection_count(rep: &Representation, tuple: &[u32]) -> Result<u64> {
    if tuple.is_empty() {
        return Err(Error::InvalidInput("empty tuple".into()));
    }
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(format!("tuple {tuple:?} has repeated vertices")));
    }
    if sorted.last().is_some_and(|&v| v as usize >= rep.n) {
        return Err(Error::InvalidInput(format!(
            "tuple {tuple:?} out of range for n = {}",
            rep.n
        )));
    }
    let sets: Vec<&[u32]> = sorted
        .iter()
        .map(|&v| rep.vertex_sets[v as usize].as_slice())
        .collect();
    Ok(count_intersect_multi(&sets))
}

/// Exhaustively checks every r-tuple in lexicographic order, sharing prefix
/// intersections across tuples with a common prefix. Never short-circuits:
/// the full report (counts, extrema, capped violations) is always produced.
pub fn verify_representation(g: &Hypergraph, rep: &Representation) -> Result<VerificationReport> {
    if rep.n != g.n() {
        return Err(Error::VertexCountMismatch {
            expected: g.n(),
            got: rep.n,
        });
    }
    let mut report = VerificationReport::new(true);
    let n = g.n();
    let r = g.r();
    if n >= r {
        let mut tuple: Vec<u32> = Vec::with_capacity(r);
        let mut scratch: Vec<Vec<u32>> = vec![Vec::new(); r.saturating_sub(2)];
        for v in 0..=(n - r) as u32 {
            tuple.push(v);
            walk(
                g,
                rep,
                &rep.vertex_sets[v as usize],
                &mut tuple,
                &mut scratch,
                &mut report,
            );
            tuple.pop();
        }
    }
    Ok(report)
}

/// Recursive tuple walk. `prefix` is the intersection of the sets of the
/// vertices chosen so far; the last level only counts.
fn walk(
    g: &Hypergraph,
    rep: &Representation,
    prefix: &[u32],
    tuple: &mut Vec<u32>,
    scratch: &mut [Vec<u32>],
    report: &mut VerificationReport,
) {
    let depth = tuple.len();
    let r = g.r();
    let last = *tuple.last().unwrap() as usize;
    for v in (last + 1)..=(g.n() - (r - depth)) {
        tuple.push(v as u32);
        let set = rep.vertex_sets[v].as_slice();
        if depth + 1 == r {
            let count = count_intersect(prefix, set);
            report.record(tuple, count, g.contains_edge(tuple), rep.k);
        } else {
            let (cur, rest) = scratch.split_first_mut().unwrap();
            intersect_into(prefix, set, cur);
            let owned = std::mem::take(cur);
            walk(g, rep, &owned, tuple, rest, report);
            *cur = owned;
        }
        tuple.pop();
    }
}

/// Checks all edges exhaustively plus `sample_count` uniformly random
/// non-edge tuples (with replacement). The report is marked non-exhaustive.
pub fn sampled_verify(
    g: &Hypergraph,
    rep: &Representation,
    sample_count: usize,
    seed: u64,
) -> Result<VerificationReport> {
    if rep.n != g.n() {
        return Err(Error::VertexCountMismatch {
            expected: g.n(),
            got: rep.n,
        });
    }
    let mut report = VerificationReport::new(false);
    for edge in g.edges() {
        let count = intersection_count(rep, edge)?;
        report.record(edge, count, true, rep.k);
    }
    // When every tuple is an edge there is nothing to sample.
    if (g.edge_count() as u128) < binom(g.n(), g.r()) {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        for _ in 0..sample_count {
            let tuple = loop {
                let mut t: Vec<u32> = rand::seq::index::sample(&mut rng, g.n(), g.r())
                    .into_iter()
                    .map(|v| v as u32)
                    .collect();
                t.sort_unstable();
                if !g.contains_edge(&t) {
                    break t;
                }
            };
            let count = intersection_count(rep, &tuple)?;
            report.record(&tuple, count, false, rep.k);
        }
    }
    Ok(report)
}

fn binom(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}
