use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::Cover;
use crate::graph::{EdgeKind, PetersenGraph};

/// Deterministic generator for a `P(n,k)` instance and a campaign seed.
pub fn rng_for(g: &PetersenGraph, seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (g.n() as u64) << 32 ^ (g.k() as u64) << 48)
}

/// A random non-trivial cover.
///
/// Inner and outer vertices are drawn with per-sample densities, one inner
/// vertex is forced out if all were drawn, and uncovered edges are then
/// repaired in canonical order: `V`-edges by a random endpoint (the other
/// endpoint stays unselected, so the cover remains non-trivial), spokes by
/// their outer end, `U`-edges by a random endpoint.
pub fn random_nontrivial_cover<R: Rng>(g: &PetersenGraph, rng: &mut R) -> Cover {
    let n = g.n();
    let inner_density = rng.gen_range(0.2..0.95);
    let outer_density = rng.gen_range(0.0..0.9);
    let mut selected: Vec<bool> = (0..2 * n)
        .map(|id| rng.gen_bool(if id < n { outer_density } else { inner_density }))
        .collect();
    if selected[n..].iter().all(|&s| s) {
        let drop = rng.gen_range(n..2 * n);
        selected[drop] = false;
    }
    for kind in [EdgeKind::VEdge, EdgeKind::Spoke, EdgeKind::UEdge] {
        for (edge, &(a, b)) in g.edges().iter().zip(g.dense_edges()) {
            if edge.kind != kind || selected[a] || selected[b] {
                continue;
            }
            let pick = match kind {
                EdgeKind::Spoke => a.min(b),
                _ if rng.gen_bool(0.5) => a,
                _ => b,
            };
            selected[pick] = true;
        }
    }
    Cover::from_mask(g.params(), pack(&selected))
}

fn pack(selected: &[bool]) -> u128 {
    selected.iter().enumerate().filter(|(_, &s)| s).fold(0, |m, (i, _)| m | 1 << i)
}

/// Every non-trivial cover of `g`, as dense bitmasks, in ascending order of
/// the complementary independent set's outer part.
///
/// Covers are in bijection with independent sets (their complements); an
/// independent set is an outer part independent on the outer cycle together
/// with an inner part avoiding its twins and independent on the inner
/// cycles. The cover is non-trivial exactly when that inner part is
/// non-empty.
pub fn all_nontrivial_covers(g: &PetersenGraph) -> Vec<u128> {
    let n = g.n();
    let k = g.k();
    assert!(n <= 20, "exhaustive cover listing is for small instances");
    let full = (1u64 << n) - 1;
    let rot = |m: u64, by: usize| ((m << by) | (m >> (n - by))) & full;
    let all = (1u128 << (2 * n)) - 1;
    let mut out = Vec::new();
    for o in 0..=full {
        if o & rot(o, 1) != 0 {
            continue;
        }
        let allowed = !o & full;
        let mut w = allowed;
        while w != 0 {
            if w & rot(w, k) == 0 {
                let independent = o as u128 | (w as u128) << n;
                out.push(!independent & all);
            }
            w = (w - 1) & allowed;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::is_cover;

    #[test]
    fn samples_are_nontrivial_covers() {
        let g = PetersenGraph::new(13, 4).unwrap();
        let mut rng = rng_for(&g, 7);
        for _ in 0..500 {
            let c = random_nontrivial_cover(&g, &mut rng);
            assert!(is_cover(&g, &c));
            assert!(!c.is_trivial());
        }
    }

    #[test]
    fn exhaustive_listing_matches_subset_scan() {
        let g = PetersenGraph::new(5, 2).unwrap();
        let mut listed = all_nontrivial_covers(&g);
        listed.sort_unstable();
        let mut scanned: Vec<u128> = (0u128..1 << 10)
            .filter(|&m| {
                let c = Cover::from_mask(g.params(), m);
                is_cover(&g, &c) && !c.is_trivial()
            })
            .collect();
        scanned.sort_unstable();
        assert_eq!(listed, scanned);
    }
}
