//! Explicit covers behind the upper bounds, and strip reduction of minimum
//! covers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cover::{check_cover, semi_optimal, strips, Cover, CoverCertificate};
use crate::error::{Error, Result};
use crate::graph::{GraphParams, PetersenGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionMethod {
    Bipartite,
    OddOdd,
    K1,
    AlternatingCycles,
    TiledExact,
    TiledPadded,
    EvenK,
    /// All inner vertices plus every other outer vertex.
    Fallback,
}

impl fmt::Display for ConstructionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConstructionMethod::Bipartite => "bipartite",
            ConstructionMethod::OddOdd => "odd_odd",
            ConstructionMethod::K1 => "k1",
            ConstructionMethod::AlternatingCycles => "alternating_cycles",
            ConstructionMethod::TiledExact => "tiled_exact",
            ConstructionMethod::TiledPadded => "tiled_padded",
            ConstructionMethod::EvenK => "even_k",
            ConstructionMethod::Fallback => "fallback",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub method: ConstructionMethod,
    pub cover: Cover,
    pub claimed_bound: usize,
}

impl ConstructionResult {
    pub fn to_certificate(&self) -> CoverCertificate {
        CoverCertificate {
            method: Some(self.method.to_string()),
            claimed_bound: Some(self.claimed_bound),
            ..self.cover.to_certificate()
        }
    }
}

/// Sector tiling parameters: sector size `m < k`, `r = k mod m` with
/// `m > 2r > 0`, and `r' = n mod m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingParams {
    pub m: usize,
    pub r: usize,
    pub r_prime: usize,
}

impl TilingParams {
    pub fn new(params: GraphParams, m: usize) -> Result<Self> {
        let k = params.k();
        if m == 0 || m >= k {
            return Err(Error::Precondition(format!("tiling needs 0 < m < k, got m={m}, k={k}")));
        }
        let r = k % m;
        if r == 0 || m <= 2 * r {
            return Err(Error::Precondition(format!(
                "tiling needs m > 2r > 0 with r = k mod m; m={m}, r={r}"
            )));
        }
        Ok(Self { m, r, r_prime: params.n() % m })
    }

    /// Every sector size admissible for `params`.
    pub fn all(params: GraphParams) -> Vec<TilingParams> {
        (1..params.k()).filter_map(|m| TilingParams::new(params, m).ok()).collect()
    }

    pub fn base_params(&self) -> GraphParams {
        GraphParams::new(self.m, self.r).expect("m > 2r >= 2")
    }
}

fn build(g: &PetersenGraph, outer: &[usize], inner: &[usize]) -> Cover {
    Cover::from_indices(g.params(), outer, inner).expect("construction indices are in range")
}

/// `X = {u_i, v_{i+1} : i odd}`, a bipartition class of size `n`.
pub fn bipartite_cover(g: &PetersenGraph) -> Result<ConstructionResult> {
    let (n, k) = (g.n(), g.k());
    if n % 2 != 0 || k % 2 != 1 {
        return Err(Error::Precondition(format!("bipartite cover needs n even, k odd; got {}", g.params())));
    }
    let outer: Vec<usize> = (1..=n).step_by(2).collect();
    let inner: Vec<usize> = (2..=n).step_by(2).collect();
    Ok(ConstructionResult {
        method: ConstructionMethod::Bipartite,
        cover: build(g, &outer, &inner),
        claimed_bound: n,
    })
}

/// Odd-indexed outer vertices, even-indexed inner vertices, and `v_{k-i}`
/// for `i = 0, 2, .., k-1` to cover the `(k+1)/2` remaining `V`-edges.
pub fn odd_odd_cover(g: &PetersenGraph) -> Result<ConstructionResult> {
    let (n, k) = (g.n(), g.k());
    if n % 2 != 1 || k % 2 != 1 {
        return Err(Error::Precondition(format!("odd-odd cover needs n, k odd; got {}", g.params())));
    }
    let outer: Vec<usize> = (1..=n).step_by(2).collect();
    let mut inner: Vec<usize> = (2..n).step_by(2).collect();
    // the higher endpoint v_{n-i+k} of each edge v_{n-i} v_{n-i+k}
    inner.extend((0..k).step_by(2).map(|i| g.params().wrap((n - i + k) as i64)));
    inner.sort_unstable();
    Ok(ConstructionResult {
        method: ConstructionMethod::OddOdd,
        cover: build(g, &outer, &inner),
        claimed_bound: n + k.div_ceil(2),
    })
}

/// `{u_i : i odd} ∪ {v_i : i = 1 or i even}` for `k = 1`, `n` odd.
pub fn k1_cover(g: &PetersenGraph) -> Result<ConstructionResult> {
    let n = g.n();
    if g.k() != 1 || n % 2 != 1 {
        return Err(Error::Precondition(format!("k1 cover needs k = 1, n odd; got {}", g.params())));
    }
    let outer: Vec<usize> = (1..=n).step_by(2).collect();
    let inner: Vec<usize> = std::iter::once(1).chain((2..=n).step_by(2)).collect();
    Ok(ConstructionResult {
        method: ConstructionMethod::K1,
        cover: build(g, &outer, &inner),
        claimed_bound: n + 1,
    })
}

/// All of `U` plus every other vertex of each inner cycle (from its smallest
/// index), made semi-optimal.
pub fn alternating_cycles_cover(g: &PetersenGraph) -> ConstructionResult {
    let n = g.n();
    let gcd = g.params().gcd();
    let cycle_len = n / gcd;
    let mut inner = Vec::new();
    for cycle in g.inner_cycles() {
        inner.extend(cycle.iter().step_by(2).map(|v| v.index));
    }
    let outer: Vec<usize> = (1..=n).collect();
    let c = build(g, &outer, &inner);
    let cover = semi_optimal(g, &c).expect("all of U plus an alternating inner selection is a non-trivial cover");
    let claimed_bound = if cycle_len % 2 == 1 { n + (n + gcd) / 4 } else { n + n / 4 };
    ConstructionResult { method: ConstructionMethod::AlternatingCycles, cover, claimed_bound }
}

/// Repeat `base` (a cover of `P(m, r)`) over the `m`-sectors of `P(n, k)`;
/// when `m` does not divide `n`, pad with `u_{n-r'+1..n}` and
/// `v_{n-k+1}, .., v_{n+k-r'}`.
pub fn tiled_cover(g: &PetersenGraph, tiling: TilingParams, base: &Cover) -> Result<ConstructionResult> {
    let params = g.params();
    let expected = TilingParams::new(params, tiling.m)?;
    if expected != tiling {
        return Err(Error::Precondition(format!("tiling parameters {tiling:?} do not match {params}")));
    }
    let base_params = tiling.base_params();
    if base.params() != base_params {
        return Err(Error::Precondition(format!("tiling base must cover {base_params}, got {}", base.params())));
    }
    check_cover(&PetersenGraph::from_params(base_params), base)?;

    let (n, k, m) = (g.n(), g.k(), tiling.m);
    let sectors = n / m;
    let mut vertices = Vec::new();
    for sector in 0..sectors {
        for v in base.vertices() {
            vertices.push(VertexId { side: v.side, index: sector * m + v.index });
        }
    }
    let (method, claimed_bound) = if tiling.r_prime == 0 {
        (ConstructionMethod::TiledExact, sectors * base.size())
    } else {
        let rp = tiling.r_prime;
        vertices.extend((n - rp + 1..=n).map(VertexId::outer));
        vertices.extend((n - k + 1..=n + k - rp).map(|i| VertexId::inner(params.wrap(i as i64))));
        (ConstructionMethod::TiledPadded, sectors * base.size() + 2 * k)
    };
    Ok(ConstructionResult { method, cover: Cover::from_vertices(params, vertices)?, claimed_bound })
}

/// Tiling with `m = k - 1` and a minimum cover of `P(k-1, 1)` as base.
pub fn even_k_cover(g: &PetersenGraph) -> Result<ConstructionResult> {
    let (n, k) = (g.n(), g.k());
    if k % 2 != 0 || k < 4 {
        return Err(Error::Precondition(format!("even-k cover needs even k >= 4; got {}", g.params())));
    }
    let m = k - 1;
    let tiling = TilingParams::new(g.params(), m)?;
    let base = k1_cover(&PetersenGraph::from_params(tiling.base_params()))?.cover;
    let tiled = tiled_cover(g, tiling, &base)?;
    let claimed_bound = if n % m == 0 { n + n / m } else { n + n / m + 2 * k };
    Ok(ConstructionResult { method: ConstructionMethod::EvenK, cover: tiled.cover, claimed_bound })
}

/// Every inner vertex plus `u_1, u_3, ..`: always a cover, of size
/// `n + ceil(n/2)`. Trivial in the strip sense.
pub fn fallback_cover(g: &PetersenGraph) -> ConstructionResult {
    let n = g.n();
    let outer: Vec<usize> = (1..=n).step_by(2).collect();
    let inner: Vec<usize> = (1..=n).collect();
    ConstructionResult {
        method: ConstructionMethod::Fallback,
        cover: build(g, &outer, &inner),
        claimed_bound: n + n.div_ceil(2),
    }
}

/// Every construction whose preconditions hold for `g`, in a fixed order.
/// Tilings use [`best_construction`] of `P(m, r)` as their base.
pub fn all_constructions(g: &PetersenGraph) -> Vec<ConstructionResult> {
    let mut out: Vec<ConstructionResult> = [bipartite_cover(g), odd_odd_cover(g), k1_cover(g)]
        .into_iter()
        .filter_map(Result::ok)
        .collect();
    out.push(alternating_cycles_cover(g));
    if let Ok(c) = even_k_cover(g) {
        out.push(c);
    }
    for tiling in TilingParams::all(g.params()) {
        let base = best_construction(&PetersenGraph::from_params(tiling.base_params())).cover;
        if let Ok(c) = tiled_cover(g, tiling, &base) {
            out.push(c);
        }
    }
    out.push(fallback_cover(g));
    out
}

/// The smallest cover among [`all_constructions`]; ties go to the earlier
/// construction.
pub fn best_construction(g: &PetersenGraph) -> ConstructionResult {
    all_constructions(g)
        .into_iter()
        .reduce(|best, c| if c.cover.size() < best.cover.size() { c } else { best })
        .expect("fallback always applies")
}

/// Maximum strip size that [`reduce_strips`] guarantees: `k + 1` for odd
/// `k`, `k + 2` for even `k`.
pub fn strip_target(k: usize) -> usize {
    if k % 2 == 1 {
        k + 1
    } else {
        k + 2
    }
}

#[derive(Clone, Debug)]
pub struct StripReduction {
    pub cover: Cover,
    pub iterations: usize,
    pub removals: usize,
    pub exchanges: usize,
}

/// Rewrite a minimum cover into one of the same size whose strips are at
/// most [`strip_target`] long.
///
/// Each round works on the semi-optimal form of the current cover. A
/// selected inner vertex whose two inner neighbours are also selected is
/// swapped for its twin. Failing that, a longest strip `v_i..v_{i+m-1}`
/// above the target has `v_{i+t}` exchanged for `v_{i+t+k}`, with `t = k`
/// for odd `k` and `t = k + 1` for even `k`. Removals shrink `a(c)` and
/// exchanges keep `a(c)` while lowering (longest strip, number of longest
/// strips), so the loop terminates; it is still capped at `n^2` rounds.
pub fn reduce_strips(g: &PetersenGraph, c: &Cover) -> Result<StripReduction> {
    check_cover(g, c)?;
    if c.is_trivial() {
        return Err(Error::TrivialCover);
    }
    let params = g.params();
    let (n, k) = (g.n(), g.k());
    let size = c.size();
    let target = strip_target(k);
    let offset = if k % 2 == 1 { k } else { k + 1 };
    let cap = n * n;
    let at = |i: usize, off: usize| params.wrap((i + off) as i64);

    let settle = |cover: &Cover| -> Result<Cover> {
        let so = semi_optimal(g, cover)?;
        if so.size() < size {
            return Err(Error::NotMinimum(format!("found a cover of size {} below {size}", so.size())));
        }
        Ok(so)
    };

    let mut current = settle(c)?;
    let mut removals = 0;
    let mut exchanges = 0;
    for iteration in 0..cap {
        let redundant = (1..=n).find(|&i| {
            current.contains(VertexId::inner(i))
                && current.contains(VertexId::inner(at(i, k)))
                && current.contains(VertexId::inner(at(i, n - k)))
        });
        if let Some(i) = redundant {
            if current.contains(VertexId::outer(i)) {
                return Err(Error::NotMinimum(format!("v{i} can be dropped outright")));
            }
            let next = current.without([VertexId::inner(i)]).with([VertexId::outer(i)])?;
            current = settle(&next)?;
            removals += 1;
            continue;
        }

        let dec = strips(&current)?;
        let longest = dec.strips.iter().filter(|s| s.size > target).max_by_key(|s| (s.size, std::cmp::Reverse(s.start)));
        let Some(strip) = longest.copied() else {
            return Ok(StripReduction { cover: current, iterations: iteration, removals, exchanges });
        };

        let leaving = VertexId::inner(at(strip.start, offset));
        let entering = VertexId::inner(at(strip.start, offset + k));
        let beyond = VertexId::inner(at(strip.start, offset + k + 1));
        if current.contains(entering) || current.contains(beyond) {
            return Err(Error::Invariant(format!(
                "strip at v{} of size {}: exchange target {entering} or {beyond} already selected",
                strip.start, strip.size
            )));
        }
        let next = current.without([leaving]).with([entering])?;
        check_cover(g, &next).map_err(|e| Error::Invariant(format!("exchange {leaving} -> {entering} broke the cover: {e}")))?;
        current = settle(&next)?;
        exchanges += 1;
    }
    Err(Error::IterationCap(cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{is_cover, stats};

    fn graph(n: usize, k: usize) -> PetersenGraph {
        PetersenGraph::new(n, k).unwrap()
    }

    #[test]
    fn bipartite_sizes() {
        for (n, k) in [(16, 5), (6, 1), (8, 3)] {
            let g = graph(n, k);
            let r = bipartite_cover(&g).unwrap();
            assert_eq!(r.cover.size(), n);
            assert!(is_cover(&g, &r.cover));
        }
        assert!(bipartite_cover(&graph(7, 3)).is_err());
    }

    #[test]
    fn odd_odd_sizes() {
        for (n, k, size) in [(15, 5, 18), (9, 3, 11), (7, 3, 9)] {
            let g = graph(n, k);
            let r = odd_odd_cover(&g).unwrap();
            assert_eq!(r.cover.size(), size);
            assert!(is_cover(&g, &r.cover));
        }
        assert!(odd_odd_cover(&graph(8, 3)).is_err());
    }

    #[test]
    fn k1_sizes() {
        for (n, size) in [(11, 12), (3, 4), (7, 8)] {
            let g = graph(n, 1);
            let r = k1_cover(&g).unwrap();
            assert_eq!(r.cover.size(), size);
            assert!(is_cover(&g, &r.cover));
        }
        assert!(k1_cover(&graph(8, 1)).is_err());
    }

    #[test]
    fn alternating_cycles_bounds() {
        let g = graph(9, 3);
        let r = alternating_cycles_cover(&g);
        assert_eq!(r.claimed_bound, 12);
        assert!(is_cover(&g, &r.cover));
        assert!(r.cover.size() <= 12 && r.cover.size() >= 11);
        let g = graph(8, 2);
        let r = alternating_cycles_cover(&g);
        assert_eq!(r.claimed_bound, 10);
        assert!(r.cover.size() <= 10);
    }

    #[test]
    fn tiling() {
        let base = bipartite_cover(&graph(4, 1)).unwrap().cover;
        let g = graph(12, 5);
        let t = TilingParams::new(g.params(), 4).unwrap();
        assert_eq!((t.r, t.r_prime), (1, 0));
        let r = tiled_cover(&g, t, &base).unwrap();
        assert_eq!(r.method, ConstructionMethod::TiledExact);
        assert_eq!(r.cover.size(), 12);
        assert!(is_cover(&g, &r.cover));

        let g = graph(14, 5);
        let t = TilingParams::new(g.params(), 4).unwrap();
        assert_eq!(t.r_prime, 2);
        let r = tiled_cover(&g, t, &base).unwrap();
        assert_eq!(r.claimed_bound, 22);
        assert!(r.cover.size() <= 22);
        assert!(is_cover(&g, &r.cover));

        assert!(TilingParams::new(graph(12, 5).params(), 3).is_err());
    }

    #[test]
    fn even_k() {
        for (n, k, bound) in [(9, 4, 12), (21, 4, 28), (10, 4, 21)] {
            let g = graph(n, k);
            let r = even_k_cover(&g).unwrap();
            assert_eq!(r.claimed_bound, bound);
            assert!(r.cover.size() <= bound);
            assert!(is_cover(&g, &r.cover));
        }
        assert!(even_k_cover(&graph(9, 2)).is_err());
    }

    #[test]
    fn best() {
        let r = best_construction(&graph(16, 5));
        assert_eq!((r.method, r.cover.size()), (ConstructionMethod::Bipartite, 16));
        let r = best_construction(&graph(15, 5));
        assert_eq!((r.method, r.cover.size()), (ConstructionMethod::OddOdd, 18));
        let r = best_construction(&graph(9, 4));
        assert!(r.cover.size() <= 12);
    }

    #[test]
    fn reduce_splits_long_strip() {
        // P(9,3): v_1..v_5 as one strip, then v_7, v_8 are free to choose
        let g = graph(9, 3);
        let e = crate::solver::enumerate_min_covers(&g).unwrap();
        let long = e.covers.iter().find(|c| stats(c).unwrap().max_strip() > 4);
        for c in e.covers.iter().chain(long) {
            let r = reduce_strips(&g, c).unwrap();
            assert_eq!(r.cover.size(), c.size());
            assert!(is_cover(&g, &r.cover));
            assert!(stats(&r.cover).unwrap().max_strip() <= 4);
        }
    }

    #[test]
    fn reduce_rejects_non_minimum() {
        let g = graph(9, 3);
        let full = Cover::full(g.params()).without([VertexId::inner(1)]);
        assert!(matches!(reduce_strips(&g, &full), Err(Error::NotMinimum(_))));
        assert!(matches!(reduce_strips(&g, &Cover::empty(g.params())), Err(Error::NotACover(_))));
    }
}
