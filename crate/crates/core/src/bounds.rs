//! Closed-form size guarantees for the randomized construction, and the
//! shared slack constants behind them.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::params::Mode;
use crate::representation::Representation;

/// Leading slack constant absorbing the ceilings in the ground-segment
/// sizes.
pub const A: u64 = 577;

/// Relative deviation tolerated by every certified family. Fixed once;
/// the parameter formulas already have it folded in.
pub const EPSILON: f64 = 0.5;

/// Mode-independent coefficient `r^3 (r + 1) A` of the size guarantee.
pub fn c_r(r: usize) -> u64 {
    let r = r as u64;
    r * r * r * (r + 1) * A
}

/// Guaranteed ground-set size: `c_r(r) * delta^e * ln n` with `e = 3` in
/// general and `e = (2r - 1)/(r - 1)` for linear hypergraphs.
pub fn theorem1_bound(n: usize, delta: usize, r: usize, linear: bool) -> f64 {
    let exponent = if linear {
        (2 * r - 1) as f64 / (r - 1) as f64
    } else {
        3.0
    };
    c_r(r) as f64 * (delta as f64).powf(exponent) * (n as f64).ln()
}

/// Checks a built representation's ground-set size against the guarantee
/// for its mode. Requires build metadata with unscaled constants; a
/// hand-assembled or rescaled representation has no bound to compare
/// against.
pub fn check_size_against_bound(rep: &Representation, g: &Hypergraph) -> Result<bool> {
    if rep.n != g.n() {
        return Err(Error::VertexCountMismatch {
            expected: g.n(),
            got: rep.n,
        });
    }
    let meta = rep.meta.as_ref().ok_or_else(|| {
        Error::InvalidInput(
            "representation carries no build metadata; its size is not governed by any mode's \
             guarantee"
                .into(),
        )
    })?;
    if meta.constant_scale != 1.0 {
        return Err(Error::InvalidInput(format!(
            "size guarantee only covers unscaled builds (constant scale is {})",
            meta.constant_scale
        )));
    }
    let delta = g.degree_profile().max_degree;
    if delta == 0 {
        return Err(Error::InvalidInput(
            "edgeless hypergraph has no size guarantee".into(),
        ));
    }
    let bound = theorem1_bound(g.n(), delta, g.r(), meta.mode == Mode::Linear);
    Ok((rep.ground_size as f64) <= bound)
}
