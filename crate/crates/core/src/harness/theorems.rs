//! Property suites over covers, minimum covers, constructions and bounds.
//!
//! Each `check_*` function examines one instance and returns a
//! [`CheckOutcome`] listing every failure it found; [`verify_theorems`]
//! runs the per-instance suites over a range of `n`.

use std::collections::VecDeque;

use serde::Serialize;

use super::sampling::{all_nontrivial_covers, random_nontrivial_cover, rng_for};
use crate::bounds::{bound_report, exact_formula, lower_bound};
use crate::constructions::{all_constructions, reduce_strips, strip_target, ConstructionMethod};
use crate::cover::{d_value_bruteforce, is_cover, semi_optimal, stats, Cover, D_VALUE_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::{Bipartiteness, GraphParams, PetersenGraph, VertexId};
use crate::par::{self, Execution};
use crate::solver::{beta_exact, enumerate_min_covers, ENUMERATION_MAX_ORDER};

/// Largest `2n` for which every non-trivial cover is walked.
pub const EXHAUSTIVE_COVER_MAX_ORDER: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, failure: Option<String>) {
        self.checked += 1;
        if let Some(f) = failure {
            self.failures.push(f);
        }
    }

    fn merge(mut self, other: CheckOutcome) -> Self {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }
}

/// `so(c)` is a cover, keeps the inner selection, takes the twin of every
/// unselected inner vertex, has size `n + (a - b)/2`, and is no larger
/// than `c`.
pub fn check_semi_optimal_cover(g: &PetersenGraph, c: &Cover) -> Option<String> {
    let tag = || format!("{} cover {c}", g.params());
    let st = match stats(c) {
        Ok(st) => st,
        Err(e) => return Some(format!("{}: {e}", tag())),
    };
    let so = match semi_optimal(g, c) {
        Ok(so) => so,
        Err(e) => return Some(format!("{}: {e}", tag())),
    };
    if !is_cover(g, &so) {
        return Some(format!("{}: so(c) = {so} is not a cover", tag()));
    }
    if so.inner_selection() != c.inner_selection() {
        return Some(format!("{}: so(c) changed the inner selection", tag()));
    }
    if let Some(i) = (1..=g.n()).find(|&i| !c.contains(VertexId::inner(i)) && !so.contains(VertexId::outer(i))) {
        return Some(format!("{}: so(c) misses twin u{i} of unselected v{i}", tag()));
    }
    if st.a_minus_b() % 2 != 0 {
        return Some(format!("{}: a - b = {} is odd", tag(), st.a_minus_b()));
    }
    let formula = g.n() + st.a_minus_b() / 2;
    if so.size() != formula {
        return Some(format!("{}: |so(c)| = {} but n + (a-b)/2 = {formula}", tag(), so.size()));
    }
    if so.size() > c.size() {
        return Some(format!("{}: |so(c)| = {} exceeds |c| = {}", tag(), so.size(), c.size()));
    }
    None
}

/// Semi-optimal checks on every non-trivial cover (`2n <= 20`).
pub fn check_semi_optimal_exhaustive(g: &PetersenGraph, exec: Execution) -> Result<CheckOutcome> {
    if g.vertex_count() > EXHAUSTIVE_COVER_MAX_ORDER {
        return Err(Error::ResourceLimit {
            what: format!("exhaustive cover walk on {}", g.params()),
            limit: EXHAUSTIVE_COVER_MAX_ORDER as u64,
        });
    }
    let masks = all_nontrivial_covers(g);
    let params = g.params();
    let chunks: Vec<Vec<u128>> = masks.chunks(4096).map(<[u128]>::to_vec).collect();
    let parts = par::map(exec, chunks, |chunk| {
        let mut out = CheckOutcome::default();
        for mask in chunk {
            out.record(check_semi_optimal_cover(g, &Cover::from_mask(params, mask)));
        }
        out
    });
    Ok(parts.into_iter().fold(CheckOutcome::default(), CheckOutcome::merge))
}

/// Semi-optimal checks on `samples` random non-trivial covers.
pub fn check_semi_optimal_sampled(g: &PetersenGraph, samples: usize, seed: u64) -> CheckOutcome {
    let mut rng = rng_for(g, seed);
    let mut out = CheckOutcome::default();
    for _ in 0..samples {
        let c = random_nontrivial_cover(g, &mut rng);
        out.record(check_semi_optimal_cover(g, &c));
    }
    out
}

/// `d = 2(beta - n)` by exhaustion, and `a - b = d` on every minimum cover.
pub fn check_d_invariant(g: &PetersenGraph) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::default();
    let tag = g.params();
    let d = d_value_bruteforce(g)?.d;
    let beta = beta_exact(g)?.beta;
    out.record((d != 2 * (beta - g.n())).then(|| format!("{tag}: d = {d} but 2(beta - n) = {}", 2 * (beta - g.n()))));
    let all = enumerate_min_covers(g)?;
    out.record((all.beta != beta).then(|| format!("{tag}: enumeration beta {} vs solver {beta}", all.beta)));
    for c in &all.covers {
        let failure = match stats(c) {
            Ok(st) if st.a_minus_b() == d && c.size() == beta && is_cover(g, c) => None,
            Ok(st) => Some(format!("{tag}: minimum cover {c} has a - b = {}, d = {d}", st.a_minus_b())),
            Err(e) => Some(format!("{tag}: minimum cover {c}: {e}")),
        };
        out.record(failure);
    }
    Ok(out)
}

/// A cover attaining `a - b = d` need not be minimum: `so(c*)` plus one
/// more outer vertex is such a cover.
pub fn non_minimum_d_cover(g: &PetersenGraph) -> Result<Cover> {
    let witness = beta_exact(g)?.witness;
    let so = semi_optimal(g, &witness)?;
    let spare = (1..=g.n())
        .map(VertexId::outer)
        .find(|u| !so.contains(*u))
        .ok_or_else(|| Error::Invariant(format!("{}: so(c*) selects all of U", g.params())))?;
    so.with([spare])
}

pub fn check_non_minimum_d(g: &PetersenGraph) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::default();
    let d = d_value_bruteforce(g)?.d;
    let beta = beta_exact(g)?.beta;
    let c = non_minimum_d_cover(g)?;
    let st = stats(&c)?;
    out.record(
        (!is_cover(g, &c) || c.size() <= beta || st.a_minus_b() != d)
            .then(|| format!("{}: {c} does not exhibit a non-minimum cover with a - b = d", g.params())),
    );
    Ok(out)
}

/// Longest strip of any minimum cover is at most `2k` (odd `k`) or `2k+1`.
pub fn check_strip_bound(g: &PetersenGraph) -> Result<CheckOutcome> {
    let k = g.k();
    let limit = if k % 2 == 1 { 2 * k } else { 2 * k + 1 };
    let mut out = CheckOutcome::default();
    for c in enumerate_min_covers(g)?.covers {
        let failure = match stats(&c) {
            Ok(st) if st.max_strip() <= limit => None,
            Ok(st) => Some(format!("{}: minimum cover {c} has a strip of {} > {limit}", g.params(), st.max_strip())),
            Err(e) => Some(format!("{}: minimum cover {c}: {e}", g.params())),
        };
        out.record(failure);
    }
    Ok(out)
}

/// `reduce_strips` on a cover that is known to be minimum.
pub fn check_strip_reduction_of(g: &PetersenGraph, minimum: &Cover) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let target = strip_target(g.k());
    let failure = match reduce_strips(g, minimum) {
        Ok(r) => {
            let longest = stats(&r.cover).map(|s| s.max_strip()).unwrap_or(usize::MAX);
            if !is_cover(g, &r.cover) || r.cover.size() != minimum.size() || longest > target {
                Some(format!(
                    "{}: reduced cover {} (size {}, longest strip {longest}) misses target {target}",
                    g.params(),
                    r.cover,
                    r.cover.size()
                ))
            } else {
                None
            }
        }
        Err(e) => Some(format!("{}: reduce_strips failed on {minimum}: {e}", g.params())),
    };
    out.record(failure);
    out
}

pub fn check_strip_reduction(g: &PetersenGraph) -> Result<CheckOutcome> {
    Ok(check_strip_reduction_of(g, &beta_exact(g)?.witness))
}

/// Breadth-first 2-colouring of the dense adjacency; `true` when it succeeds.
pub fn two_colorable(g: &PetersenGraph) -> bool {
    let mut color: Vec<Option<bool>> = vec![None; g.vertex_count()];
    for root in 0..g.vertex_count() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].expect("queued vertices are coloured");
            for w in g.dense_neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Bipartite iff `n` even and `k` odd, agreeing with BFS colouring, with a
/// valid certificate.
pub fn check_bipartite(g: &PetersenGraph) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let tag = g.params();
    let expected = g.n().is_multiple_of(2) && g.k() % 2 == 1;
    let result = g.is_bipartite();
    out.record((result.is_bipartite() != expected).then(|| format!("{tag}: parity rule disagrees")));
    out.record((two_colorable(g) != expected).then(|| format!("{tag}: BFS colouring disagrees")));
    let certificate_ok = match &result {
        Bipartiteness::Bipartite { x, y } => {
            x.len() + y.len() == g.vertex_count()
                && x.iter().all(|v| !y.contains(v))
                && g.edges().iter().all(|e| x.contains(&e.a) != x.contains(&e.b))
        }
        Bipartiteness::OddCycle(cycle) => {
            let mut distinct = cycle.clone();
            distinct.sort();
            distinct.dedup();
            cycle.len() % 2 == 1
                && distinct.len() == cycle.len()
                && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
        }
    };
    out.record((!certificate_ok).then(|| format!("{tag}: invalid bipartiteness certificate {result:?}")));
    out
}

/// Every applicable construction is a cover within its claimed bound, and
/// the exact-size ones hit their size.
pub fn check_constructions(g: &PetersenGraph) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let (n, k) = (g.n(), g.k());
    for c in all_constructions(g) {
        let size = c.cover.size();
        let exact = match c.method {
            ConstructionMethod::Bipartite => Some(n),
            ConstructionMethod::OddOdd => Some(n + k.div_ceil(2)),
            ConstructionMethod::K1 => Some(n + 1),
            _ => None,
        };
        let failure = if !is_cover(g, &c.cover) {
            Some(format!("{}: {} construction is not a cover", g.params(), c.method))
        } else if size > c.claimed_bound {
            Some(format!("{}: {} construction has size {size} > claimed {}", g.params(), c.method, c.claimed_bound))
        } else if exact.is_some_and(|e| e != size) {
            Some(format!("{}: {} construction has size {size}, expected {}", g.params(), c.method, exact.unwrap()))
        } else {
            None
        };
        out.record(failure);
    }
    out
}

/// `lower <= beta <= min upper`, and the exact formula (if any) equals beta.
pub fn check_bounds_sandwich(g: &PetersenGraph, beta: usize) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::default();
    let (n, k) = (g.n(), g.k());
    let report = bound_report(n, k)?;
    out.record((report.lower > beta).then(|| format!("P({n},{k}): lower {} > beta {beta}", report.lower)));
    out.record((beta > report.min_upper).then(|| format!("P({n},{k}): beta {beta} > upper {}", report.min_upper)));
    for u in &report.uppers {
        out.record((beta > u.value).then(|| format!("P({n},{k}): beta {beta} > {:?} bound {}", u.method, u.value)));
    }
    if let Some(e) = exact_formula(n, k)? {
        out.record((e.value != beta).then(|| format!("P({n},{k}): formula {:?} gives {}, beta {beta}", e.rules, e.value)));
    }
    debug_assert_eq!(report.lower, lower_bound(n, k)?);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    SemiOptimal,
    DInvariant,
    StripBound,
    StripReduction,
    Bipartite,
    NonMinimumD,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::SemiOptimal,
        Property::DInvariant,
        Property::StripBound,
        Property::StripReduction,
        Property::Bipartite,
        Property::NonMinimumD,
    ];
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub property: Property,
    pub n: usize,
    pub k: usize,
    /// `None` when the instance is beyond the property's guard.
    pub outcome: Option<CheckOutcome>,
}

#[derive(Clone, Debug)]
pub struct TheoremOptions {
    pub max_n: usize,
    /// Random covers per instance for the semi-optimal suite.
    pub samples: usize,
    pub seed: u64,
    pub execution: Execution,
}

impl TheoremOptions {
    pub fn new(max_n: usize) -> Self {
        Self { max_n, samples: 1000, seed: 0x5eed, execution: Execution::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub results: Vec<PropertyResult>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.outcome.as_ref().is_none_or(CheckOutcome::passed))
    }

    pub fn failures(&self) -> Vec<String> {
        self.results.iter().filter_map(|r| r.outcome.as_ref()).flat_map(|o| o.failures.clone()).collect()
    }

    /// `(property, instances checked, instances skipped, failures)`.
    pub fn tally(&self) -> Vec<(Property, usize, usize, usize)> {
        Property::ALL
            .iter()
            .map(|&p| {
                let rows: Vec<&PropertyResult> = self.results.iter().filter(|r| r.property == p).collect();
                let checked = rows.iter().filter(|r| r.outcome.is_some()).count();
                let failures = rows.iter().filter_map(|r| r.outcome.as_ref()).map(|o| o.failures.len()).sum();
                (p, checked, rows.len() - checked, failures)
            })
            .collect()
    }
}

fn pair_suite(p: GraphParams, options: &TheoremOptions) -> Result<Vec<PropertyResult>> {
    let g = PetersenGraph::from_params(p);
    let small_enum = p.vertex_count() <= ENUMERATION_MAX_ORDER;
    let small_d = p.vertex_count() <= D_VALUE_MAX_ORDER;
    let mut out = Vec::new();
    let mut push = |property, outcome| out.push(PropertyResult { property, n: p.n(), k: p.k(), outcome });

    let mut semi = check_semi_optimal_sampled(&g, options.samples, options.seed);
    if p.vertex_count() <= EXHAUSTIVE_COVER_MAX_ORDER {
        semi = semi.merge(check_semi_optimal_exhaustive(&g, Execution::Sequential)?);
    }
    push(Property::SemiOptimal, Some(semi));
    push(Property::DInvariant, if small_d && small_enum { Some(check_d_invariant(&g)?) } else { None });
    push(Property::StripBound, if small_enum { Some(check_strip_bound(&g)?) } else { None });
    push(Property::StripReduction, Some(check_strip_reduction(&g)?));
    push(Property::Bipartite, Some(check_bipartite(&g)));
    push(Property::NonMinimumD, if small_d { Some(check_non_minimum_d(&g)?) } else { None });
    Ok(out)
}

/// Run all six suites on every admissible pair with `n <= max_n`. Suites
/// that need exhaustive enumeration are skipped beyond their size guards.
pub fn verify_theorems(options: &TheoremOptions) -> Result<TheoremReport> {
    if options.max_n < 3 {
        return Err(Error::Precondition(format!("need max_n >= 3, got {}", options.max_n)));
    }
    let pairs = GraphParams::admissible_up_to(options.max_n);
    let per_pair = par::map(options.execution, pairs, |p| pair_suite(p, options));
    let mut results = Vec::new();
    for r in per_pair {
        results.extend(r?);
    }
    Ok(TheoremReport { results })
}
