//! Random set families with certified intersection concentration: every
//! member is a p-random subset of a segment `[0, t)`, and a certificate
//! checks that all l-wise intersections for `l <= m` have size within
//! `(1 ± epsilon) * p^l * t`. Families failing the certificate are resampled
//! (Las Vegas), so downstream code only ever sees certified families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::sets::{count_intersect, intersect};

/// Parameters of a family: segment size `t`, inclusion probability `p`,
/// tolerance `epsilon`, and the largest intersection order `m` certified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams {
    pub t: u64,
    pub p: f64,
    pub epsilon: f64,
    pub m: usize,
}

impl FamilyParams {
    pub fn new(t: u64, p: f64, epsilon: f64, m: usize) -> Result<Self> {
        let params = Self { t, p, epsilon, m };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidInput(format!("p must be in [0,1], got {}", self.p)));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::InvalidInput(format!(
                "epsilon must be in (0,1), got {}",
                self.epsilon
            )));
        }
        if self.m < 2 {
            return Err(Error::InvalidInput(format!("m must be at least 2, got {}", self.m)));
        }
        Ok(())
    }

    /// Allowed size interval `[(1-eps) p^l t, (1+eps) p^l t]` for an l-wise
    /// intersection.
    pub fn interval(&self, l: usize) -> (f64, f64) {
        let center = self.p.powi(l as i32) * self.t as f64;
        ((1.0 - self.epsilon) * center, (1.0 + self.epsilon) * center)
    }
}

/// A sampled family of subsets of `[0, t)`, one per member, with the seed
/// that produced it. Sets are sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernoffFamily {
    pub params: FamilyParams,
    pub sets: Vec<Vec<u32>>,
    pub seed: u64,
}

/// One failed intersection check: the member indices, the observed size, and
/// the allowed interval.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyViolation {
    pub l: usize,
    pub members: Vec<usize>,
    pub actual: u64,
    pub lo: f64,
    pub hi: f64,
}

/// Outcome of certifying a family: every l-subset of members for
/// `l = 1..=m` was checked; `certified` iff no violations.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub certified: bool,
    pub checked: u64,
    pub violations: Vec<FamilyViolation>,
}

/// Samples one subset of `[0, t)` with independent inclusion probability `p`
/// by geometric gap skipping: per included element one uniform draw, instead
/// of one draw per candidate.
fn sample_subset(t: u64, p: f64, rng: &mut ChaCha12Rng) -> Vec<u32> {
    if p <= 0.0 {
        return Vec::new();
    }
    if p >= 1.0 {
        return (0..t as u32).collect();
    }
    let ln_q = (1.0 - p).ln();
    let mut out = Vec::with_capacity((t as f64 * p) as usize + 16);
    let mut pos = 0u64;
    while pos < t {
        let u: f64 = rng.gen();
        let skip = ((1.0 - u).ln() / ln_q).floor();
        if !(skip < (t - pos) as f64) {
            break;
        }
        pos += skip as u64;
        out.push(pos as u32);
        pos += 1;
    }
    out
}

/// Draws `count` independent p-random subsets of `[0, t)`.
pub fn sample_family(count: usize, params: FamilyParams, seed: u64) -> ChernoffFamily {
    debug_assert!(params.validate().is_ok());
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let sets = (0..count)
        .map(|_| sample_subset(params.t, params.p, &mut rng))
        .collect();
    ChernoffFamily {
        params,
        sets,
        seed,
    }
}

/// Exhaustively checks every l-wise intersection of distinct members for
/// `l = 1..=m` against the allowed interval. Violations are data, not errors.
pub fn verify_family(family: &ChernoffFamily) -> CertificateReport {
    let mut report = CertificateReport {
        certified: true,
        checked: 0,
        violations: Vec::new(),
    };
    let sets = &family.sets;
    let params = &family.params;
    let mut members = Vec::with_capacity(params.m);
    for j in 0..sets.len() {
        members.push(j);
        record(params, sets[j].len() as u64, &members, &mut report);
        if params.m > 1 {
            extend(sets, params, &sets[j], j, &mut members, &mut report);
        }
        members.pop();
    }
    report
}

/// Depth-first extension sharing prefix intersections: `prefix` is the
/// intersection of the members chosen so far; the deepest level only needs a
/// count, shallower levels materialize for reuse.
fn extend(
    sets: &[Vec<u32>],
    params: &FamilyParams,
    prefix: &[u32],
    last: usize,
    members: &mut Vec<usize>,
    report: &mut CertificateReport,
) {
    for j in last + 1..sets.len() {
        members.push(j);
        if members.len() == params.m {
            let c = count_intersect(prefix, &sets[j]);
            record(params, c, members, report);
        } else {
            let inter = intersect(prefix, &sets[j]);
            record(params, inter.len() as u64, members, report);
            extend(sets, params, &inter, j, members, report);
        }
        members.pop();
    }
}

fn record(params: &FamilyParams, actual: u64, members: &[usize], report: &mut CertificateReport) {
    let l = members.len();
    let (lo, hi) = params.interval(l);
    report.checked += 1;
    if (actual as f64) < lo || (actual as f64) > hi {
        report.certified = false;
        report.violations.push(FamilyViolation {
            l,
            members: members.to_vec(),
            actual,
            lo,
            hi,
        });
    }
}

/// Las Vegas loop: samples with seeds `seed, seed ^ 1, seed ^ 2, ...` until
/// [`verify_family`] certifies, returning the family and the number of
/// attempts used (1-based).
pub fn gen_verified_family(
    count: usize,
    params: FamilyParams,
    seed: u64,
    max_retries: u32,
) -> Result<(ChernoffFamily, u32)> {
    params.validate()?;
    if max_retries < 1 {
        return Err(Error::InvalidInput("need max_retries >= 1".into()));
    }
    let mut last_report = None;
    for attempt in 0..max_retries {
        let family = sample_family(count, params, seed ^ attempt as u64);
        let report = verify_family(&family);
        if report.certified {
            return Ok((family, attempt + 1));
        }
        last_report = Some(report);
    }
    let report = last_report.unwrap();
    let sample: Vec<String> = report
        .violations
        .iter()
        .take(3)
        .map(|v| {
            format!(
                "members {:?} have intersection {} outside [{:.3}, {:.3}]",
                v.members, v.actual, v.lo, v.hi
            )
        })
        .collect();
    Err(Error::RetriesExhausted {
        attempts: max_retries,
        detail: format!(
            "{} of {} intersection checks violated; e.g. {}",
            report.violations.len(),
            report.checked,
            sample.join("; ")
        ),
    })
}
