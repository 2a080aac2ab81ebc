use super::rot;
use crate::cover::{circular_runs, Cover};
use crate::error::{Error, Result};
use crate::graph::{GraphParams, PetersenGraph};

/// Largest `2n` accepted by [`enumerate_min_covers`].
pub const ENUMERATION_MAX_ORDER: usize = 24;

#[derive(Clone, Debug)]
pub struct MinCoverEnumeration {
    pub params: GraphParams,
    pub beta: usize,
    /// Every minimum cover, sorted by dense bitmask.
    pub covers: Vec<Cover>,
}

/// All minimum covers, by walking inner selections.
///
/// For an inner selection `S` that covers every `V`-edge, a cover with inner
/// part `S` must contain the twin of each unselected inner vertex; the only
/// `U`-edges left are those inside the twins of a strip, a path per strip.
/// The cheapest completions of `S` are therefore exactly the products of
/// minimum covers of those paths (or, for the all-inner selection, minimum
/// covers of the outer cycle). The walk computes `beta` from the cheapest
/// completion over all `S` and then expands every `S` attaining it.
pub fn enumerate_min_covers(g: &PetersenGraph) -> Result<MinCoverEnumeration> {
    let params = g.params();
    if params.vertex_count() > ENUMERATION_MAX_ORDER {
        return Err(Error::ResourceLimit {
            what: format!("minimum-cover enumeration on {params}"),
            limit: ENUMERATION_MAX_ORDER as u64,
        });
    }
    let n = params.n();
    let k = params.k();
    let full = (1u64 << n) - 1;

    let mut patterns: Vec<(u64, usize)> = Vec::new();
    for s in 0..=full {
        let free = !s & full;
        if free & rot(free, k, n) != 0 {
            continue;
        }
        let cost = if s == full {
            n + n.div_ceil(2)
        } else {
            let runs = circular_runs(&unpack(s, n)).expect("selection has a gap");
            n + runs.iter().map(|r| r.size / 2).sum::<usize>()
        };
        patterns.push((s, cost));
    }
    let beta = patterns.iter().map(|&(_, c)| c).min().expect("all-inner selection qualifies");

    let mut path_cache: Vec<Option<Vec<u64>>> = vec![None; n + 1];
    let mut covers: Vec<Cover> = Vec::new();
    for (s, _) in patterns.into_iter().filter(|&(_, c)| c == beta) {
        let inner_bits = (s as u128) << n;
        if s == full {
            for outer in min_cycle_covers(n) {
                covers.push(Cover::from_mask(params, inner_bits | outer as u128));
            }
            continue;
        }
        let forced = !s & full;
        let runs = circular_runs(&unpack(s, n)).expect("selection has a gap");
        let mut partial: Vec<u64> = vec![forced];
        for run in runs {
            let options = path_cache[run.size]
                .get_or_insert_with(|| min_path_covers(run.size))
                .clone();
            let start = run.start - 1;
            partial = partial
                .iter()
                .flat_map(|&acc| {
                    options.iter().map(move |&opt| {
                        let mut placed = acc;
                        for off in 0..run.size {
                            if opt >> off & 1 == 1 {
                                placed |= 1u64 << ((start + off) % n);
                            }
                        }
                        placed
                    })
                })
                .collect();
        }
        covers.extend(partial.into_iter().map(|outer| Cover::from_mask(params, inner_bits | outer as u128)));
    }
    covers.sort_by_key(|c| c.mask());
    debug_assert!(covers.windows(2).all(|w| w[0] != w[1]));
    Ok(MinCoverEnumeration { params, beta, covers })
}

fn unpack(mask: u64, n: usize) -> Vec<bool> {
    (0..n).map(|i| mask >> i & 1 == 1).collect()
}

/// Minimum vertex covers of the path `0 - 1 - .. - (m-1)`.
fn min_path_covers(m: usize) -> Vec<u64> {
    let edges = if m == 0 { 0 } else { m - 1 };
    let target = (m / 2) as u32;
    (0u64..1 << m)
        .filter(|&c| c.count_ones() == target && (0..edges).all(|i| c >> i & 3 != 0))
        .collect()
}

/// Minimum vertex covers of the cycle on `n` vertices.
fn min_cycle_covers(n: usize) -> Vec<u64> {
    let full = (1u64 << n) - 1;
    let target = n.div_ceil(2) as u32;
    (0..=full)
        .filter(|&c| c.count_ones() == target && (!c & full) & rot(!c & full, 1, n) == 0)
        .collect()
}
