//! Core hypergraph data model: canonical storage, degree and linearity
//! queries, and the `.hg` text format.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// An r-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored sorted ascending internally and the edge list is kept in
/// lexicographic order with no duplicates, so equal hypergraphs compare equal
/// structurally and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<u32>>,
}

/// Per-vertex degrees together with their maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
}

impl Hypergraph {
    /// Builds a hypergraph from raw edges, sorting each edge and the edge
    /// list into canonical form.
    pub fn new(r: usize, n: usize, mut edges: Vec<Vec<u32>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidInput(format!(
                "uniformity must be at least 2, got {r}"
            )));
        }
        for edge in &mut edges {
            edge.sort_unstable();
            if edge.len() != r || edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadEdge {
                    edge: edge.clone(),
                    r,
                });
            }
            if edge.last().is_some_and(|&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange {
                    edge: edge.clone(),
                    n,
                });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                edge: w[0].clone(),
            });
        }
        Ok(Self { r, n, edges })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in lexicographic order, each sorted ascending.
    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Membership test for a sorted tuple.
    pub fn contains_edge(&self, tuple: &[u32]) -> bool {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(tuple))
            .is_ok()
    }

    /// Degree of every vertex and the maximum degree.
    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0usize; self.n];
        for edge in &self.edges {
            for &v in edge {
                degrees[v as usize] += 1;
            }
        }
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            degrees,
            max_degree,
        }
    }

    /// True iff every pair of distinct edges shares at most one vertex,
    /// i.e. no vertex pair occurs in two edges.
    pub fn is_linear(&self) -> bool {
        let mut seen: HashSet<(u32, u32)> = HashSet::new();
        for edge in &self.edges {
            for i in 0..edge.len() {
                for j in i + 1..edge.len() {
                    if !seen.insert((edge[i], edge[j])) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Canonical `.hg` serialization.
    pub fn to_hg_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.r, self.n, self.edges.len());
        for edge in &self.edges {
            let mut sep = "";
            for v in edge {
                let _ = write!(out, "{sep}{v}");
                sep = " ";
            }
            out.push('\n');
        }
        out
    }
}

/// Parses the `.hg` format: optional `#` comment or blank lines, a header
/// line `r n m`, then `m` lines of `r` strictly increasing vertex indices.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header line \"r n m\"".into(),
    })?;
    let fields = parse_ints(header_no, header)?;
    let [r, n, m] = fields[..] else {
        return Err(Error::Parse {
            line: header_no,
            msg: format!("header must be \"r n m\", got {} fields", fields.len()),
        });
    };
    let (r, n, m) = (r as usize, n as usize, m as usize);
    if r < 2 {
        return Err(Error::Parse {
            line: header_no,
            msg: format!("uniformity must be at least 2, got {r}"),
        });
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: header_no,
            msg: format!("expected {m} edge lines, found {}", edges.len()),
        })?;
        let vs = parse_ints(line_no, line)?;
        if vs.len() != r {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected {r} vertices, got {}", vs.len()),
            });
        }
        if vs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse {
                line: line_no,
                msg: "vertices must be strictly increasing".into(),
            });
        }
        edges.push(vs);
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            msg: "unexpected data after last edge".into(),
        });
    }
    Hypergraph::new(r, n, edges)
}

fn parse_ints(line_no: usize, line: &str) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("not a non-negative integer: {tok:?}"),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(r: usize, n: usize, edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::new(r, n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn parses_single_edge() {
        let g = parse_hypergraph("3 4 1\n0 1 2\n").unwrap();
        assert_eq!((g.r(), g.n(), g.edge_count()), (3, 4, 1));
        assert_eq!(g.edges(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn rejects_repeated_vertex() {
        assert!(parse_hypergraph("3 4 1\n0 1 1\n").is_err());
    }

    #[test]
    fn parses_perfect_matching() {
        let g = parse_hypergraph("3 6 2\n0 1 2\n3 4 5\n").unwrap();
        assert_eq!(g.edges(), &[vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(g.is_linear());
    }

    #[test]
    fn accepts_comments_and_blank_lines() {
        let g = parse_hypergraph("# instance\n\n3 4 1\n# edge\n0 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(parse_hypergraph("").is_err());
        assert!(parse_hypergraph("3 4\n").is_err());
        assert!(parse_hypergraph("1 4 0\n").is_err());
        assert!(parse_hypergraph("3 4 1\n0 1\n").is_err());
        assert!(parse_hypergraph("3 4 1\n2 1 0\n").is_err());
        assert!(parse_hypergraph("3 4 1\n0 1 9\n").is_err());
        assert!(parse_hypergraph("3 4 2\n0 1 2\n0 1 2\n").is_err());
        assert!(parse_hypergraph("3 4 1\n0 1 2\n0 1 3\n").is_err());
        assert!(parse_hypergraph("3 4 1\n0 1 x\n").is_err());
    }

    #[test]
    fn new_canonicalizes_edge_order() {
        let g = Hypergraph::new(3, 6, vec![vec![5, 4, 3], vec![2, 0, 1]]).unwrap();
        assert_eq!(g.edges(), &[vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(g.contains_edge(&[3, 4, 5]));
        assert!(!g.contains_edge(&[0, 1, 3]));
    }

    #[test]
    fn round_trips_through_hg_format() {
        let g = hg(3, 7, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5]]);
        assert_eq!(parse_hypergraph(&g.to_hg_string()).unwrap(), g);
    }

    #[test]
    fn degree_profile_examples() {
        let single = hg(3, 4, &[&[0, 1, 2]]);
        let p = single.degree_profile();
        assert_eq!(p.degrees, vec![1, 1, 1, 0]);
        assert_eq!(p.max_degree, 1);

        let empty = hg(3, 5, &[]);
        let p = empty.degree_profile();
        assert_eq!(p.degrees, vec![0; 5]);
        assert_eq!(p.max_degree, 0);

        // Complete 3-uniform hypergraph on 4 vertices: each vertex lies in
        // C(3,2) = 3 of the 4 edges.
        let complete = hg(3, 4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let p = complete.degree_profile();
        assert_eq!(p.degrees, vec![3, 3, 3, 3]);
        assert_eq!(p.max_degree, 3);
    }

    #[test]
    fn linearity_examples() {
        assert!(hg(3, 6, &[&[0, 1, 2], &[3, 4, 5]]).is_linear());
        assert!(!hg(3, 4, &[&[0, 1, 2], &[0, 1, 3]]).is_linear());
        assert!(hg(3, 6, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5]]).is_linear());
    }

    #[test]
    fn degree_sum_is_r_times_edges() {
        let g = hg(3, 6, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5]]);
        let p = g.degree_profile();
        assert_eq!(p.degrees.iter().sum::<usize>(), g.r() * g.edge_count());
    }
}
