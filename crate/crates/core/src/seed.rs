//! Seed derivation.
//!
//! All randomness in this crate flows through ChaCha12 seeded via
//! `seed_from_u64`; independent streams (one per matching, one per build
//! attempt) get their own 64-bit seeds derived here with SplitMix64, so a
//! single master seed reproduces every run bit for bit.

/// One step of the SplitMix64 generator (Steele, Lea & Flood): treats `x` as
/// the state, advances by the golden-ratio increment and scrambles.
pub(crate) fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the seed for an independent child stream.
pub(crate) fn child_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index.wrapping_add(1)))
}
