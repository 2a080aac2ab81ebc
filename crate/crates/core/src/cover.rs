//! Covers of `P(n, k)` and the strip calculus on them.
//!
//! A strip is a maximal circular run of selected inner vertices. For a
//! non-trivial cover `c`, `a(c)` counts selected inner vertices and `b(c)`
//! counts strips of odd size. The semi-optimal cover `so(c)` keeps the inner
//! selection, takes the twin of every unselected inner vertex, and on the
//! twins of each strip `v_j..v_{j+s-1}` takes `u_{j+1}, u_{j+3}, ..`; its size
//! is exactly `n + (a(c) - b(c)) / 2`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, GraphParams, PetersenGraph, Side, VertexId};

/// A vertex selection over the `2n` vertices of `P(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cover {
    params: GraphParams,
    selected: Vec<bool>,
}

impl Cover {
    pub fn empty(params: GraphParams) -> Self {
        Self { params, selected: vec![false; params.vertex_count()] }
    }

    pub fn full(params: GraphParams) -> Self {
        Self { params, selected: vec![true; params.vertex_count()] }
    }

    pub fn from_vertices<I>(params: GraphParams, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut cover = Self::empty(params);
        for v in vertices {
            if !(1..=params.n()).contains(&v.index) {
                return Err(Error::OutOfRange(format!("{v} is not a vertex of {params}")));
            }
            cover.selected[v.dense(params.n())] = true;
        }
        Ok(cover)
    }

    /// Build from 1-based outer and inner index lists.
    pub fn from_indices(params: GraphParams, outer: &[usize], inner: &[usize]) -> Result<Self> {
        Self::from_vertices(
            params,
            outer
                .iter()
                .map(|&i| VertexId::outer(i))
                .chain(inner.iter().map(|&i| VertexId::inner(i))),
        )
    }

    pub(crate) fn from_dense(params: GraphParams, selected: Vec<bool>) -> Self {
        debug_assert_eq!(selected.len(), params.vertex_count());
        Self { params, selected }
    }

    /// Bit `i` of `mask` selects dense vertex `i`.
    pub fn from_mask(params: GraphParams, mask: u128) -> Self {
        let selected = (0..params.vertex_count()).map(|i| mask >> i & 1 == 1).collect();
        Self { params, selected }
    }

    pub fn mask(&self) -> u128 {
        assert!(self.selected.len() <= 128, "mask form needs 2n <= 128");
        self.selected
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .fold(0u128, |m, (i, _)| m | 1 << i)
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (1..=self.params.n()).contains(&v.index) && self.selected[v.dense(self.params.n())]
    }

    pub fn size(&self) -> usize {
        self.selected.iter().filter(|&&s| s).count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        let n = self.params.n();
        self.selected
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(move |(i, _)| VertexId::from_dense(i, n))
    }

    /// Sorted 1-based indices of selected vertices on one side.
    pub fn selected_on(&self, side: Side) -> Vec<usize> {
        self.vertices().filter(|v| v.side == side).map(|v| v.index).collect()
    }

    pub fn inner_selection(&self) -> &[bool] {
        &self.selected[self.params.n()..]
    }

    /// Selects every inner vertex.
    pub fn is_trivial(&self) -> bool {
        self.inner_selection().iter().all(|&s| s)
    }

    /// A copy with additional vertices selected.
    pub fn with(&self, extra: impl IntoIterator<Item = VertexId>) -> Result<Cover> {
        let mut out = self.clone();
        for v in extra {
            if !(1..=self.params.n()).contains(&v.index) {
                return Err(Error::OutOfRange(format!("{v} is not a vertex of {}", self.params)));
            }
            out.selected[v.dense(self.params.n())] = true;
        }
        Ok(out)
    }

    /// A copy with the given vertices deselected.
    pub fn without(&self, removed: impl IntoIterator<Item = VertexId>) -> Cover {
        let mut out = self.clone();
        for v in removed {
            if (1..=self.params.n()).contains(&v.index) {
                out.selected[v.dense(self.params.n())] = false;
            }
        }
        out
    }

    pub fn to_certificate(&self) -> CoverCertificate {
        CoverCertificate {
            n: self.params.n(),
            k: self.params.k(),
            selected_u: self.selected_on(Side::Outer),
            selected_v: self.selected_on(Side::Inner),
            size: self.size(),
            method: None,
            claimed_bound: None,
        }
    }

    pub fn from_certificate(cert: &CoverCertificate) -> Result<Cover> {
        let params = GraphParams::new(cert.n, cert.k)?;
        for list in [&cert.selected_u, &cert.selected_v] {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Certificate("index lists must be strictly increasing".into()));
            }
        }
        let cover = Cover::from_indices(params, &cert.selected_u, &cert.selected_v)?;
        if cover.size() != cert.size {
            return Err(Error::Certificate(format!(
                "declared size {} but {} vertices listed",
                cert.size,
                cover.size()
            )));
        }
        Ok(cover)
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Serialized cover: `{n, k, selected_u, selected_v, size}` with 1-based
/// indices, optionally tagged with the construction that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub n: usize,
    pub k: usize,
    pub selected_u: Vec<usize>,
    pub selected_v: Vec<usize>,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_bound: Option<usize>,
}

pub fn first_uncovered_edge(g: &PetersenGraph, c: &Cover) -> Option<Edge> {
    debug_assert_eq!(g.params(), c.params());
    g.dense_edges()
        .iter()
        .position(|&(a, b)| !c.selected[a] && !c.selected[b])
        .map(|i| g.edges()[i])
}

pub fn is_cover(g: &PetersenGraph, c: &Cover) -> bool {
    g.params() == c.params() && first_uncovered_edge(g, c).is_none()
}

pub fn check_cover(g: &PetersenGraph, c: &Cover) -> Result<()> {
    if g.params() != c.params() {
        return Err(Error::Precondition(format!(
            "cover of {} checked against {}",
            c.params(),
            g.params()
        )));
    }
    match first_uncovered_edge(g, c) {
        Some(e) => Err(Error::NotACover(e)),
        None => Ok(()),
    }
}

/// A strip `v_start, v_{start+1}, .., v_{start+size-1}` (indices wrap).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Strip {
    pub start: usize,
    pub size: usize,
}

impl Strip {
    /// Indices of the strip's inner vertices, in run order.
    pub fn indices(&self, params: GraphParams) -> Vec<usize> {
        (0..self.size).map(|off| params.wrap((self.start + off) as i64)).collect()
    }

    pub fn vertices(&self, params: GraphParams) -> Vec<VertexId> {
        self.indices(params).into_iter().map(VertexId::inner).collect()
    }

    pub fn is_odd(&self) -> bool {
        self.size % 2 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripDecomposition {
    pub params: GraphParams,
    /// Ordered by start index.
    pub strips: Vec<Strip>,
}

impl StripDecomposition {
    pub fn max_size(&self) -> usize {
        self.strips.iter().map(|s| s.size).max().unwrap_or(0)
    }
}

/// Circular maximal runs of `true` in a selection that has at least one
/// `false`; starts are 1-based and sorted.
pub(crate) fn circular_runs(inner: &[bool]) -> Option<Vec<Strip>> {
    let n = inner.len();
    let gap = inner.iter().position(|&s| !s)?;
    let mut runs = Vec::new();
    let mut current: Option<Strip> = None;
    for step in 1..=n {
        let pos = (gap + step) % n;
        if inner[pos] {
            match current.as_mut() {
                Some(run) => run.size += 1,
                None => current = Some(Strip { start: pos + 1, size: 1 }),
            }
        } else if let Some(run) = current.take() {
            runs.push(run);
        }
    }
    runs.sort_unstable_by_key(|s| s.start);
    Some(runs)
}

pub fn strips(c: &Cover) -> Result<StripDecomposition> {
    let strips = circular_runs(c.inner_selection()).ok_or(Error::TrivialCover)?;
    Ok(StripDecomposition { params: c.params(), strips })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverStats {
    /// Selected inner vertices.
    pub a: usize,
    /// Odd strips.
    pub b: usize,
    pub size: usize,
    /// Strip sizes, in strip order.
    pub strip_sizes: Vec<usize>,
}

impl CoverStats {
    /// `a - b`; never negative since each odd strip holds a vertex.
    pub fn a_minus_b(&self) -> usize {
        self.a - self.b
    }

    pub fn max_strip(&self) -> usize {
        self.strip_sizes.iter().copied().max().unwrap_or(0)
    }
}

pub fn stats(c: &Cover) -> Result<CoverStats> {
    let dec = strips(c)?;
    let strip_sizes: Vec<usize> = dec.strips.iter().map(|s| s.size).collect();
    Ok(CoverStats {
        a: strip_sizes.iter().sum(),
        b: strip_sizes.iter().filter(|&&s| s % 2 == 1).count(),
        size: c.size(),
        strip_sizes,
    })
}

/// `n + (a - b) / 2`, the size of `so(c)` for any non-trivial cover `c`.
pub fn semi_optimal_size(n: usize, stats: &CoverStats) -> usize {
    n + stats.a_minus_b() / 2
}

/// Twins of a strip `v_j..v_{j+s-1}` taken alternately from `u_{j+1}`:
/// `u_{j+1}, u_{j+3}, ..`, which is `ceil((s - 1) / 2)` vertices.
pub fn optimal_twin_selection(params: GraphParams, strip: Strip) -> Vec<VertexId> {
    (1..strip.size)
        .step_by(2)
        .map(|off| VertexId::outer(params.wrap((strip.start + off) as i64)))
        .collect()
}

/// The semi-optimal cover `so(c)` of a non-trivial cover `c`.
pub fn semi_optimal(g: &PetersenGraph, c: &Cover) -> Result<Cover> {
    check_cover(g, c)?;
    let dec = strips(c)?;
    Ok(semi_optimal_from_strips(c, &dec))
}

fn semi_optimal_from_strips(c: &Cover, dec: &StripDecomposition) -> Cover {
    let params = c.params();
    let n = params.n();
    let mut selected = vec![false; 2 * n];
    let inner = c.inner_selection();
    for i in 0..n {
        if inner[i] {
            selected[n + i] = true;
        } else {
            selected[i] = true;
        }
    }
    for strip in &dec.strips {
        for u in optimal_twin_selection(params, *strip) {
            selected[u.index - 1] = true;
        }
    }
    Cover::from_dense(params, selected)
}

/// `d(P(n,k))`, the minimum of `a(c) - b(c)` over non-trivial covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DValue {
    pub d: usize,
}

/// Largest `2n` accepted by [`d_value_bruteforce`].
pub const D_VALUE_MAX_ORDER: usize = 24;

/// Exhaustive `d(P(n,k))`.
///
/// `a` and `b` depend only on the inner selection, and any inner selection
/// that covers every `V`-edge extends to a cover by adding all of `U`, so
/// walking the `2^n` inner selections visits every achievable `(a, b)`.
pub fn d_value_bruteforce(g: &PetersenGraph) -> Result<DValue> {
    let params = g.params();
    if params.vertex_count() > D_VALUE_MAX_ORDER {
        return Err(Error::ResourceLimit {
            what: format!("exhaustive d-value enumeration for {params}"),
            limit: D_VALUE_MAX_ORDER as u64,
        });
    }
    let n = params.n();
    let k = params.k();
    let full = (1u32 << n) - 1;
    let mut best: Option<usize> = None;
    let mut inner = vec![false; n];
    for mask in 0..full {
        let free = !mask & full;
        if free & rotate(free, k, n) != 0 {
            continue;
        }
        for (i, slot) in inner.iter_mut().enumerate() {
            *slot = mask >> i & 1 == 1;
        }
        let runs = circular_runs(&inner).expect("mask is not full");
        let a = mask.count_ones() as usize;
        let b = runs.iter().filter(|r| r.is_odd()).count();
        best = Some(best.map_or(a - b, |d: usize| d.min(a - b)));
    }
    Ok(DValue { d: best.expect("the empty outer complement is never free of V-edges") })
}

/// Circular shift of an `n`-bit mask by `k` positions towards higher indices.
pub(crate) fn rotate(mask: u32, k: usize, n: usize) -> u32 {
    let full = (1u32 << n) - 1;
    ((mask << k) | (mask >> (n - k))) & full
}
