//! Construction parameters for the two modes of the randomized
//! representation builder. All logarithms are natural.

use std::fmt;
use std::str::FromStr;

use crate::bounds::EPSILON;
use crate::error::{Error, Result};

/// Which parameter regime the builder runs in. `Linear` requires a linear
/// input hypergraph and yields smaller ground sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    General,
    Linear,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::General => "general",
            Mode::Linear => "linear",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Mode::General),
            "linear" => Ok(Mode::Linear),
            other => Err(Error::InvalidInput(format!(
                "mode must be \"general\" or \"linear\", got {other:?}"
            ))),
        }
    }
}

/// Derived construction parameters: per-matching segment size `t`, inclusion
/// probability `p`, certified intersection order `m`, tolerance `epsilon`,
/// and threshold `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepParams {
    pub mode: Mode,
    pub l: usize,
    pub m: usize,
    pub p: f64,
    pub epsilon: f64,
    pub t: u64,
    pub k: u64,
}

/// Parameter choice for a hypergraph on `n` vertices whose edges decompose
/// into `l` matchings:
///
/// * general: `m = 2`, `p = 1/(4l)`, `t = ceil(576 l^2 ln n)`;
/// * linear:  `m = r`, `p = (4l)^(-1/(r-1))`,
///   `t = ceil(384 (r+1) l^(r/(r-1)) ln n)`;
///
/// and in both modes `epsilon = 1/2`, `k = floor((1 - epsilon) p t)`.
pub fn select_params(n: usize, l: usize, r: usize, mode: Mode) -> Result<RepParams> {
    select_params_scaled(n, l, r, mode, 1.0)
}

/// [`select_params`] with `t` multiplied by `scale` before rounding up
/// (experimentation hook; conformance runs use 1.0).
pub(crate) fn select_params_scaled(
    n: usize,
    l: usize,
    r: usize,
    mode: Mode,
    scale: f64,
) -> Result<RepParams> {
    if n < 2 || l < 1 || r < 3 {
        return Err(Error::InvalidInput(format!(
            "need n >= 2, l >= 1, r >= 3; got n = {n}, l = {l}, r = {r}"
        )));
    }
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::InvalidInput(format!("scale must be positive, got {scale}")));
    }
    let ln_n = (n as f64).ln();
    let lf = l as f64;
    let (m, p, t_raw) = match mode {
        Mode::General => (2, 1.0 / (4.0 * lf), 576.0 * lf * lf * ln_n),
        Mode::Linear => {
            let rf = r as f64;
            let p = (4.0 * lf).powf(-1.0 / (rf - 1.0));
            let t_raw = 384.0 * (rf + 1.0) * lf.powf(rf / (rf - 1.0)) * ln_n;
            (r, p, t_raw)
        }
    };
    let t = (t_raw * scale).ceil() as u64;
    let k = ((1.0 - EPSILON) * p * t as f64).floor() as u64;
    if k == 0 {
        return Err(Error::ParameterUnderflow { t, p });
    }
    Ok(RepParams {
        mode,
        l,
        m,
        p,
        epsilon: EPSILON,
        t,
        k,
    })
}
