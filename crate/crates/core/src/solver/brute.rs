use std::time::Instant;

use super::{rot, BetaResult, SolveMethod};
use crate::cover::{is_cover, Cover};
use crate::error::{Error, Result};
use crate::graph::PetersenGraph;
use crate::par::{self, Execution};

/// Largest `2n` accepted by [`beta_bruteforce`].
pub const BRUTEFORCE_MAX_ORDER: usize = 26;

pub fn beta_bruteforce(g: &PetersenGraph) -> Result<BetaResult> {
    beta_bruteforce_with(g, Execution::default())
}

/// Exhaustive maximum independent set, returned as its complementary cover.
///
/// Every subset `I = O ∪ W` (outer part `O`, inner part `W`) is considered;
/// subsets whose outer part is not independent on the outer cycle are
/// skipped wholesale, and `W` only ranges over subsets of the inner
/// positions not twinned with `O`. Among minimum covers the one whose sorted
/// vertex list (u_1..u_n, v_1..v_n order) is lexicographically least wins.
pub fn beta_bruteforce_with(g: &PetersenGraph, exec: Execution) -> Result<BetaResult> {
    let params = g.params();
    if params.vertex_count() > BRUTEFORCE_MAX_ORDER {
        return Err(Error::ResourceLimit {
            what: format!("brute-force search on {params}"),
            limit: BRUTEFORCE_MAX_ORDER as u64,
        });
    }
    let start = Instant::now();
    let n = params.n();
    let k = params.k();
    let full = (1u64 << n) - 1;
    let order = 2 * n;

    let outer_sets: Vec<u64> = (0..=full).filter(|&o| o & rot(o, 1, n) == 0).collect();
    let per_outer = par::map(exec, outer_sets, |o| {
        let allowed = !o & full;
        let mut best: Option<(u32, u64)> = None;
        let mut seen = 0u64;
        let mut w = allowed;
        loop {
            seen += 1;
            if w & rot(w, k, n) == 0 {
                let size = o.count_ones() + w.count_ones();
                let cover = !(o | w << n) & ((1u64 << order) - 1);
                let key = reverse_bits(cover, order);
                if best.is_none_or(|b| (size, key) > b) {
                    best = Some((size, key));
                }
            }
            if w == 0 {
                break;
            }
            w = (w - 1) & allowed;
        }
        (best, seen)
    });

    let nodes = per_outer.iter().map(|(_, s)| s).sum();
    let (alpha, key) = per_outer
        .into_iter()
        .filter_map(|(b, _)| b)
        .max()
        .expect("the empty set is independent");
    let witness = Cover::from_mask(params, reverse_bits(key, order) as u128);
    debug_assert!(is_cover(g, &witness));
    Ok(BetaResult {
        params,
        beta: order - alpha as usize,
        witness,
        method: SolveMethod::BruteForce,
        nodes,
        elapsed: start.elapsed(),
    })
}

fn reverse_bits(mask: u64, width: usize) -> u64 {
    mask.reverse_bits() >> (64 - width)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let beta = |n, k| beta_bruteforce(&PetersenGraph::new(n, k).unwrap()).unwrap().beta;
        assert_eq!(beta(5, 2), 6);
        assert_eq!(beta(3, 1), 4);
        assert_eq!(beta(6, 1), 6);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let g = PetersenGraph::new(6, 1).unwrap();
        let r = beta_bruteforce(&g).unwrap();
        // the two bipartition classes; the one holding u1 sorts first
        assert_eq!(r.witness.to_string(), "{u1,u3,u5,v2,v4,v6}");
    }

    #[test]
    fn guard() {
        let g = PetersenGraph::new(14, 3).unwrap();
        assert!(matches!(beta_bruteforce(&g), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn sequential_matches_parallel() {
        let g = PetersenGraph::new(11, 4).unwrap();
        let a = beta_bruteforce_with(&g, Execution::Sequential).unwrap();
        let b = beta_bruteforce_with(&g, Execution::Parallel).unwrap();
        assert_eq!(a.beta, b.beta);
        assert_eq!(a.witness, b.witness);
    }
}
