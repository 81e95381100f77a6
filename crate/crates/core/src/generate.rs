//! Random instance generators: unions of uniform almost-perfect matchings and
//! greedy random linear hypergraphs. Both are pure functions of their
//! parameters and seed.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn check_common(n: usize, r: usize, delta: usize) -> Result<()> {
    if r < 2 || n < r {
        return Err(Error::InvalidInput(format!(
            "need n >= r >= 2, got n = {n}, r = {r}"
        )));
    }
    if delta < 1 {
        return Err(Error::InvalidInput("need delta >= 1".into()));
    }
    Ok(())
}

/// One uniformly random almost-perfect matching: a random permutation of the
/// vertices chopped into consecutive blocks of `r`, remainder dropped. Every
/// almost-perfect matching arises from the same number of permutations, so
/// the draw is exactly uniform.
fn random_almost_perfect_matching(n: usize, r: usize, rng: &mut ChaCha12Rng) -> Vec<Vec<u32>> {
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.shuffle(rng);
    perm.chunks_exact(r)
        .map(|block| {
            let mut edge = block.to_vec();
            edge.sort_unstable();
            edge
        })
        .collect()
}

/// Union of `delta` independently drawn uniformly random almost-perfect
/// matchings on `[0, n)`. Duplicate edges across matchings are merged, so the
/// result has maximum degree at most `delta`.
pub fn gen_union_of_matchings(n: usize, r: usize, delta: usize, seed: u64) -> Result<Hypergraph> {
    check_common(n, r, delta)?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut edges: BTreeSet<Vec<u32>> = BTreeSet::new();
    for _ in 0..delta {
        edges.extend(random_almost_perfect_matching(n, r, &mut rng));
    }
    Hypergraph::new(r, n, edges.into_iter().collect())
}

/// Default rejection cap for [`gen_random_linear`].
pub const LINEAR_REJECTION_FACTOR: usize = 50;

/// Greedy randomized linear hypergraph: repeatedly sample a random r-subset
/// and accept it iff all member degrees stay below `delta` and no vertex pair
/// is reused (which is exactly linearity). Stops after `cap` consecutive
/// rejections.
pub fn gen_random_linear_capped(
    n: usize,
    r: usize,
    delta: usize,
    seed: u64,
    cap: usize,
) -> Result<Hypergraph> {
    check_common(n, r, delta)?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut degrees = vec![0usize; n];
    let mut used_pairs: HashSet<(u32, u32)> = HashSet::new();
    let mut edges: Vec<Vec<u32>> = Vec::new();
    let mut rejects = 0usize;
    while rejects < cap {
        let mut cand: Vec<u32> = rand::seq::index::sample(&mut rng, n, r)
            .into_iter()
            .map(|v| v as u32)
            .collect();
        cand.sort_unstable();
        let degree_ok = cand.iter().all(|&v| degrees[v as usize] < delta);
        let linear_ok = degree_ok
            && pairs_of(&cand).all(|pair| !used_pairs.contains(&pair));
        if linear_ok {
            for &v in &cand {
                degrees[v as usize] += 1;
            }
            used_pairs.extend(pairs_of(&cand));
            edges.push(cand);
            rejects = 0;
        } else {
            rejects += 1;
        }
    }
    Hypergraph::new(r, n, edges)
}

/// [`gen_random_linear_capped`] with the default cap of `50 * n * delta`
/// consecutive rejections.
pub fn gen_random_linear(n: usize, r: usize, delta: usize, seed: u64) -> Result<Hypergraph> {
    gen_random_linear_capped(n, r, delta, seed, LINEAR_REJECTION_FACTOR * n * delta)
}

fn pairs_of(edge: &[u32]) -> impl Iterator<Item = (u32, u32)> + '_ {
    edge.iter()
        .enumerate()
        .flat_map(|(i, &u)| edge[i + 1..].iter().map(move |&v| (u, v)))
}
