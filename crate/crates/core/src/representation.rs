//! The representation data type and its `.rep` text format.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::params::Mode;

/// Build provenance kept alongside a representation: the parameters, the
/// master seed, and the per-matching certification attempt counts.
#[derive(Debug, Clone, PartialEq)]
pub struct RepMeta {
    pub mode: Mode,
    pub l: usize,
    pub t: u64,
    pub p: f64,
    pub epsilon: f64,
    pub seed: u64,
    pub constant_scale: f64,
    pub family_attempts: Vec<u32>,
}

/// Per-vertex element sets over a ground set `[0, ground_size)` together
/// with the threshold `k`: a tuple is meant to be an edge iff its sets'
/// common intersection has size at least `k`.
///
/// Builder-produced representations carry [`RepMeta`] and use a segmented
/// ground set (`ground_size = l * t`, segment `i` spanning
/// `[i t, (i+1) t)`); hand-made representations may leave `meta` empty.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pub n: usize,
    pub k: u64,
    pub ground_size: u64,
    pub vertex_sets: Vec<Vec<u32>>,
    pub meta: Option<RepMeta>,
}

impl Representation {
    /// A bare representation without build provenance.
    pub fn from_sets(n: usize, k: u64, ground_size: u64, vertex_sets: Vec<Vec<u32>>) -> Self {
        debug_assert_eq!(vertex_sets.len(), n);
        Self {
            n,
            k,
            ground_size,
            vertex_sets,
            meta: None,
        }
    }

    /// Canonical `.rep` serialization: metadata comments, a header line
    /// `n k groundSize`, then per vertex `v c e_1 ... e_c`. Floats use 17
    /// significant digits, which round-trips `f64` exactly.
    pub fn to_rep_string(&self) -> String {
        let mut out = String::new();
        if let Some(meta) = &self.meta {
            let _ = writeln!(out, "# mode {}", meta.mode);
            let _ = writeln!(out, "# L {}", meta.l);
            let _ = writeln!(out, "# t {}", meta.t);
            let _ = writeln!(out, "# p {:.16e}", meta.p);
            let _ = writeln!(out, "# epsilon {:.16e}", meta.epsilon);
            let _ = writeln!(out, "# seed {}", meta.seed);
            let _ = writeln!(out, "# constantScale {:.16e}", meta.constant_scale);
            let mut line = String::from("# attempts");
            for a in &meta.family_attempts {
                let _ = write!(line, " {a}");
            }
            let _ = writeln!(out, "{line}");
        }
        let _ = writeln!(out, "{} {} {}", self.n, self.k, self.ground_size);
        for (v, set) in self.vertex_sets.iter().enumerate() {
            let _ = write!(out, "{} {}", v, set.len());
            for e in set {
                let _ = write!(out, " {e}");
            }
            out.push('\n');
        }
        out
    }
}

/// Parses the `.rep` format. Metadata comments are optional as a group: a
/// file either carries the full set written by the builder or none.
pub fn parse_representation(text: &str) -> Result<Representation> {
    let mut meta_lines: Vec<(usize, &str)> = Vec::new();
    let mut data_lines: Vec<(usize, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            meta_lines.push((i + 1, rest.trim()));
        } else {
            data_lines.push((i + 1, line));
        }
    }

    let meta = if meta_lines.is_empty() {
        None
    } else {
        Some(parse_meta(&meta_lines)?)
    };

    let mut data = data_lines.into_iter();
    let (header_no, header) = data.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header line \"n k groundSize\"".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, k, ground_size] = fields[..] else {
        return Err(Error::Parse {
            line: header_no,
            msg: "header must be \"n k groundSize\"".into(),
        });
    };
    let n: usize = parse_field(header_no, n, "n")?;
    let k: u64 = parse_field(header_no, k, "k")?;
    let ground_size: u64 = parse_field(header_no, ground_size, "groundSize")?;

    let mut vertex_sets: Vec<Option<Vec<u32>>> = vec![None; n];
    for _ in 0..n {
        let (line_no, line) = data.next().ok_or(Error::Parse {
            line: header_no,
            msg: format!("expected {n} vertex lines"),
        })?;
        let mut toks = line.split_whitespace();
        let v: usize = parse_field(line_no, toks.next().unwrap_or(""), "vertex")?;
        let c: usize = parse_field(line_no, toks.next().unwrap_or(""), "set size")?;
        let set: Vec<u32> = toks
            .map(|tok| parse_field(line_no, tok, "element"))
            .collect::<Result<_>>()?;
        if set.len() != c {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("declared {c} elements, found {}", set.len()),
            });
        }
        if set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse {
                line: line_no,
                msg: "elements must be strictly increasing".into(),
            });
        }
        if set.last().is_some_and(|&e| e as u64 >= ground_size) {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("element out of range for ground size {ground_size}"),
            });
        }
        let slot = vertex_sets.get_mut(v).ok_or(Error::Parse {
            line: line_no,
            msg: format!("vertex {v} out of range for n = {n}"),
        })?;
        if slot.replace(set).is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} listed twice"),
            });
        }
    }
    if let Some((line_no, _)) = data.next() {
        return Err(Error::Parse {
            line: line_no,
            msg: "unexpected data after last vertex".into(),
        });
    }
    let vertex_sets = vertex_sets.into_iter().flatten().collect();
    Ok(Representation {
        n,
        k,
        ground_size,
        vertex_sets,
        meta,
    })
}

fn parse_meta(lines: &[(usize, &str)]) -> Result<RepMeta> {
    let mut mode = None;
    let mut l = None;
    let mut t = None;
    let mut p = None;
    let mut epsilon = None;
    let mut seed = None;
    let mut constant_scale = None;
    let mut attempts = None;
    for &(line_no, line) in lines {
        let (key, value) = match line.split_once(char::is_whitespace) {
            Some((key, value)) => (key, value.trim()),
            None => (line, ""),
        };
        match key {
            "mode" => mode = Some(value.parse::<Mode>()?),
            "L" => l = Some(parse_field(line_no, value, "L")?),
            "t" => t = Some(parse_field(line_no, value, "t")?),
            "p" => p = Some(parse_field(line_no, value, "p")?),
            "epsilon" => epsilon = Some(parse_field(line_no, value, "epsilon")?),
            "seed" => seed = Some(parse_field(line_no, value, "seed")?),
            "constantScale" => {
                constant_scale = Some(parse_field(line_no, value, "constantScale")?)
            }
            "attempts" => {
                attempts = Some(
                    value
                        .split_whitespace()
                        .map(|tok| parse_field(line_no, tok, "attempt count"))
                        .collect::<Result<Vec<u32>>>()?,
                )
            }
            _ => {}
        }
    }
    let first_line = lines[0].0;
    let missing = || Error::Parse {
        line: first_line,
        msg: "incomplete metadata block".into(),
    };
    Ok(RepMeta {
        mode: mode.ok_or_else(missing)?,
        l: l.ok_or_else(missing)?,
        t: t.ok_or_else(missing)?,
        p: p.ok_or_else(missing)?,
        epsilon: epsilon.ok_or_else(missing)?,
        seed: seed.ok_or_else(missing)?,
        constant_scale: constant_scale.ok_or_else(missing)?,
        family_attempts: attempts.ok_or_else(missing)?,
    })
}

fn parse_field<T: std::str::FromStr>(line_no: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line: line_no,
        msg: format!("bad {what}: {tok:?}"),
    })
}
