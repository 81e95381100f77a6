//! Assembles a verified representation: decompose the edge set into
//! matchings, certify one random family per matching inside its own ground
//! segment, give every vertex the union of its edges' sets, then verify the
//! result exhaustively and resample on failure.

use crate::chernoff::{gen_verified_family, ChernoffFamily, FamilyParams};
use crate::decompose::{decompose, MatchingDecomposition};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::params::{select_params_scaled, Mode, RepParams};
use crate::representation::{RepMeta, Representation};
use crate::seed::child_seed;
use crate::sets::count_intersect_multi;
use crate::verify::verify_representation;

/// Retry budgets and the experimentation scale knob for the builder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BuildOptions {
    pub max_family_retries: u32,
    pub max_build_retries: u32,
    pub constant_scale: f64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            max_family_retries: 100,
            max_build_retries: 10,
            constant_scale: 1.0,
        }
    }
}

/// Certifies one family per matching, sized to the matching's edge count,
/// sampled inside `[0, t)` with independent seeds derived from
/// `master_seed`. Returns the families and per-matching attempt counts.
pub fn build_certified_families(
    d: &MatchingDecomposition,
    params: &RepParams,
    master_seed: u64,
    max_family_retries: u32,
) -> Result<(Vec<ChernoffFamily>, Vec<u32>)> {
    let family_params = FamilyParams {
        t: params.t,
        p: params.p,
        epsilon: params.epsilon,
        m: params.m,
    };
    let mut families = Vec::with_capacity(d.l());
    let mut attempts = Vec::with_capacity(d.l());
    for (i, matching) in d.matchings().iter().enumerate() {
        let seed = child_seed(master_seed, i as u64);
        let (family, used) =
            gen_verified_family(matching.len(), family_params, seed, max_family_retries)?;
        families.push(family);
        attempts.push(used);
    }
    Ok((families, attempts))
}

/// Union of the per-matching sets: vertex `v` receives, for every matching
/// whose segment `[i t, (i+1) t)` contains an edge through `v`, that edge's
/// set shifted into the segment.
fn assemble_sets(
    g: &Hypergraph,
    d: &MatchingDecomposition,
    t: u64,
    families: &[ChernoffFamily],
) -> Vec<Vec<u32>> {
    let mut vertex_sets: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
    for (i, matching) in d.matchings().iter().enumerate() {
        let offset = (i as u64 * t) as u32;
        for (pos, &edge_idx) in matching.iter().enumerate() {
            let set = &families[i].sets[pos];
            for &v in &g.edges()[edge_idx] {
                let target = &mut vertex_sets[v as usize];
                target.extend(set.iter().map(|&e| e + offset));
            }
        }
    }
    vertex_sets
}

fn precheck(g: &Hypergraph, mode: Mode, options: &BuildOptions) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidInput(
            "cannot build a representation of an edgeless hypergraph (all-empty sets with k = 1 \
             already represent it)"
                .into(),
        ));
    }
    if mode == Mode::Linear && !g.is_linear() {
        return Err(Error::NotLinear);
    }
    if options.max_build_retries < 1 || options.max_family_retries < 1 {
        return Err(Error::InvalidInput("retry budgets must be at least 1".into()));
    }
    Ok(())
}

fn assemble_attempt(
    g: &Hypergraph,
    d: &MatchingDecomposition,
    params: &RepParams,
    seed: u64,
    attempt: u32,
    options: &BuildOptions,
) -> Result<Representation> {
    let ground_size = params.l as u64 * params.t;
    if ground_size > u32::MAX as u64 {
        return Err(Error::InvalidInput(format!(
            "ground set of size {ground_size} exceeds the element type"
        )));
    }
    let master = child_seed(seed, attempt as u64);
    let (families, attempts) =
        build_certified_families(d, params, master, options.max_family_retries)?;
    let vertex_sets = assemble_sets(g, d, params.t, &families);
    Ok(Representation {
        n: g.n(),
        k: params.k,
        ground_size,
        vertex_sets,
        meta: Some(RepMeta {
            mode: params.mode,
            l: params.l,
            t: params.t,
            p: params.p,
            epsilon: params.epsilon,
            seed,
            constant_scale: options.constant_scale,
            family_attempts: attempts,
        }),
    })
}

/// One assembly pass from certified families, without the final verification
/// sweep. Equals the first attempt of [`build_representation`].
pub fn assemble_representation(
    g: &Hypergraph,
    mode: Mode,
    seed: u64,
    options: &BuildOptions,
) -> Result<Representation> {
    precheck(g, mode, options)?;
    let d = decompose(g);
    let params = select_params_scaled(g.n(), d.l(), g.r(), mode, options.constant_scale)?;
    assemble_attempt(g, &d, &params, seed, 0, options)
}

/// Full Las Vegas build: assemble, verify exhaustively, and rebuild all
/// families from a re-derived seed on verification failure, up to
/// `max_build_retries` attempts. The returned representation has passed
/// exhaustive verification.
pub fn build_representation(
    g: &Hypergraph,
    mode: Mode,
    seed: u64,
    options: &BuildOptions,
) -> Result<Representation> {
    precheck(g, mode, options)?;
    let d = decompose(g);
    let params = select_params_scaled(g.n(), d.l(), g.r(), mode, options.constant_scale)?;
    let mut last = String::new();
    for attempt in 0..options.max_build_retries {
        let rep = assemble_attempt(g, &d, &params, seed, attempt, options)?;
        let report = verify_representation(g, &rep)?;
        if report.valid {
            return Ok(rep);
        }
        let first = report
            .violations
            .first()
            .map(|v| {
                format!(
                    "tuple {:?} ({}) has intersection {} against k = {}",
                    v.tuple,
                    if v.is_edge { "edge" } else { "non-edge" },
                    v.count,
                    rep.k
                )
            })
            .unwrap_or_default();
        last = format!("{} violating tuples; e.g. {first}", report.violations.len());
    }
    Err(Error::RetriesExhausted {
        attempts: options.max_build_retries,
        detail: format!("verification kept failing: {last}"),
    })
}

/// Per-matching tuple statistics: `a` counts the matching's edges meeting
/// the tuple, `covered` says the tuple lies inside the matching's edge
/// union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingClass {
    pub a: usize,
    pub covered: bool,
}

/// A tuple classified against every matching, with the index sets of
/// non-covering (`i1`) and covering (`i2`) matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleClass {
    pub tuple: Vec<u32>,
    pub per_matching: Vec<MatchingClass>,
    pub i1: Vec<usize>,
    pub i2: Vec<usize>,
}

/// Classifies a tuple against each matching of the decomposition.
pub fn classify_tuple(
    g: &Hypergraph,
    d: &MatchingDecomposition,
    tuple: &[u32],
) -> Result<TupleClass> {
    let tuple = check_tuple(g, tuple)?;
    let mut per_matching = Vec::with_capacity(d.l());
    let mut i1 = Vec::new();
    let mut i2 = Vec::new();
    for (i, matching) in d.matchings().iter().enumerate() {
        let mut hit: Vec<usize> = Vec::with_capacity(g.r());
        let mut uncovered = 0usize;
        for &v in &tuple {
            match matching
                .iter()
                .find(|&&e| g.edges()[e].binary_search(&v).is_ok())
            {
                Some(&e) => hit.push(e),
                None => uncovered += 1,
            }
        }
        hit.sort_unstable();
        hit.dedup();
        let class = MatchingClass {
            a: hit.len(),
            covered: uncovered == 0,
        };
        if class.covered {
            i2.push(i);
        } else {
            i1.push(i);
        }
        per_matching.push(class);
    }
    Ok(TupleClass {
        tuple,
        per_matching,
        i1,
        i2,
    })
}

/// Per-matching outcome of the concentration bounds for one tuple: the
/// observed intersection within the matching's segment and the bound it must
/// respect.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchingBound {
    pub matching: usize,
    pub a: usize,
    pub covered: bool,
    pub value: u64,
    pub limit: f64,
    pub within: bool,
}

/// Tuple-level report for the edge/non-edge dichotomy. For an edge, some
/// matching must attain `value >= (1 - epsilon) p t`; for a non-edge every
/// matching stays under its limit: 0 when not covering, else
/// `(1 + epsilon) p^min(a, m) t`.
#[derive(Debug, Clone, PartialEq)]
pub struct PropositionReport {
    pub class: TupleClass,
    pub is_edge: bool,
    pub per_matching: Vec<MatchingBound>,
    pub total: u64,
    pub edge_floor: f64,
    pub attains_floor: bool,
    pub ok: bool,
}

/// Computes, straight from the certified families (independently of any
/// assembled representation), the per-matching intersection of a tuple and
/// checks it against the concentration bounds.
pub fn check_proposition_bounds(
    g: &Hypergraph,
    d: &MatchingDecomposition,
    families: &[ChernoffFamily],
    params: &RepParams,
    tuple: &[u32],
) -> Result<PropositionReport> {
    if families.len() != d.l() {
        return Err(Error::InvalidInput(format!(
            "expected {} families, got {}",
            d.l(),
            families.len()
        )));
    }
    let class = classify_tuple(g, d, tuple)?;
    let is_edge = g.contains_edge(&class.tuple);
    let t = params.t as f64;
    let edge_floor = (1.0 - params.epsilon) * params.p * t;
    let mut per_matching = Vec::with_capacity(d.l());
    let mut total = 0u64;
    let mut attains_floor = false;
    let mut non_edge_ok = true;

    for (i, matching) in d.matchings().iter().enumerate() {
        let value = matching_intersection(g, matching, &families[i], &class.tuple);
        total += value;
        let cls = &class.per_matching[i];
        if value as f64 >= edge_floor {
            attains_floor = true;
        }
        let limit = if cls.covered {
            let order = cls.a.min(params.m) as i32;
            (1.0 + params.epsilon) * params.p.powi(order) * t
        } else {
            0.0
        };
        let within = value as f64 <= limit;
        if !is_edge && !within {
            non_edge_ok = false;
        }
        per_matching.push(MatchingBound {
            matching: i,
            a: cls.a,
            covered: cls.covered,
            value,
            limit,
            within,
        });
    }

    let ok = if is_edge { attains_floor } else { non_edge_ok };
    Ok(PropositionReport {
        class,
        is_edge,
        per_matching,
        total,
        edge_floor,
        attains_floor,
        ok,
    })
}

/// Intersection of the tuple's per-vertex sets within one matching's
/// segment: empty as soon as one vertex is uncovered, otherwise the
/// intersection of the (deduplicated) sets of the edges hit.
fn matching_intersection(
    g: &Hypergraph,
    matching: &[usize],
    family: &ChernoffFamily,
    tuple: &[u32],
) -> u64 {
    let mut positions: Vec<usize> = Vec::with_capacity(tuple.len());
    for &v in tuple {
        match matching
            .iter()
            .position(|&e| g.edges()[e].binary_search(&v).is_ok())
        {
            Some(pos) => positions.push(pos),
            None => return 0,
        }
    }
    positions.sort_unstable();
    positions.dedup();
    let sets: Vec<&[u32]> = positions
        .into_iter()
        .map(|pos| family.sets[pos].as_slice())
        .collect();
    count_intersect_multi(&sets)
}

fn check_tuple(g: &Hypergraph, tuple: &[u32]) -> Result<Vec<u32>> {
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    let distinct = sorted.windows(2).all(|w| w[0] < w[1]);
    let in_range = sorted.last().map_or(true, |&v| (v as usize) < g.n());
    if sorted.len() != g.r() || !distinct || !in_range {
        return Err(Error::InvalidInput(format!(
            "tuple {tuple:?} is not an r-subset of the vertex set (r = {}, n = {})",
            g.r(),
            g.n()
        )));
    }
    Ok(sorted)
}

/// The non-edge/edge ratio of the linear-case chain,
/// `((1 + eps) / (1 - eps)) * (l p^(r-1) + C(r,2) p)` with
/// `p = (4l)^(-1/(r-1))`; callers test it against 5/6. Only large `l` pass:
/// small instances rely on exhaustive verification instead.
pub fn check_linear_ratio(l: usize, r: usize, epsilon: f64) -> f64 {
    debug_assert!(l >= 1 && r >= 3);
    let lf = l as f64;
    let p = (4.0 * lf).powf(-1.0 / (r as f64 - 1.0));
    let pairs = (r * (r - 1) / 2) as f64;
    ((1.0 + epsilon) / (1.0 - epsilon)) * (lf * p.powi(r as i32 - 1) + pairs * p)
}
