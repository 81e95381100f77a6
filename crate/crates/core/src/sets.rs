//! Merge kernels for sorted `u32` sets. Everything downstream (family
//! certification, representation verification, the exact oracle's witness
//! reconstruction) counts intersections of sorted arrays, so these loops are
//! the hot path of the whole crate.

/// Intersects two strictly increasing slices into `out` (cleared first).
pub(crate) fn intersect_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (x, y) = (a[i], b[j]);
        if x == y {
            out.push(x);
        }
        i += (x <= y) as usize;
        j += (y <= x) as usize;
    }
}

/// Intersection of two strictly increasing slices.
pub(crate) fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    intersect_into(a, b, &mut out);
    out
}

/// Size of the intersection of two strictly increasing slices.
pub(crate) fn count_intersect(a: &[u32], b: &[u32]) -> u64 {
    let (mut i, mut j) = (0, 0);
    let mut c = 0u64;
    while i < a.len() && j < b.len() {
        let (x, y) = (a[i], b[j]);
        c += (x == y) as u64;
        i += (x <= y) as usize;
        j += (y <= x) as usize;
    }
    c
}

/// Size of the common intersection of several strictly increasing slices.
/// Folds smallest-first so intermediate results shrink as fast as possible.
pub(crate) fn count_intersect_multi(sets: &[&[u32]]) -> u64 {
    match sets.len() {
        0 => 0,
        1 => sets[0].len() as u64,
        2 => count_intersect(sets[0], sets[1]),
        _ => {
            let mut sorted: Vec<&[u32]> = sets.to_vec();
            sorted.sort_by_key(|s| s.len());
            let mut acc = intersect(sorted[0], sorted[1]);
            for s in &sorted[2..sorted.len() - 1] {
                if acc.is_empty() {
                    return 0;
                }
                acc = intersect(&acc, s);
            }
            count_intersect(&acc, sorted[sorted.len() - 1])
        }
    }
}
