//! Closed-form bounds and exact values for `beta(P(n,k))`.

use serde::{Deserialize, Serialize};

use crate::constructions::TilingParams;
use crate::error::{Error, Result};
use crate::graph::{GraphParams, PetersenGraph};
use crate::solver::beta_exact;

pub fn lower_bound(n: usize, k: usize) -> Result<usize> {
    let p = GraphParams::new(n, k)?;
    // the n spokes form a matching
    let mut lower = n;
    if n % 2 == 1 {
        lower = lower.max(n + p.gcd().div_ceil(2)).max(n + 1);
    }
    let at_most_n_plus_one = (n.is_multiple_of(2) && k % 2 == 1) || (n % 2 == 1 && k == 1) || (n, k) == (5, 2);
    if !at_most_n_plus_one {
        lower = lower.max(n + 2);
    }
    Ok(lower)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperMethod {
    /// `n + ceil(n/2)`: all inner vertices and every other outer vertex.
    Fallback,
    AlternatingCycles,
    OddOdd,
    Tiled,
    EvenK,
    Bipartite,
    K1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBound {
    pub method: UpperMethod,
    /// Sector size, for tiling bounds.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub value: usize,
}

impl UpperBound {
    fn new(method: UpperMethod, value: usize) -> Self {
        Self { method, m: None, value }
    }
}

/// `beta(P(n,k))` through [`exact_formula`] when one applies, otherwise
/// through the solver.
fn beta_of(params: GraphParams) -> Result<usize> {
    match exact_formula(params.n(), params.k())? {
        Some(e) => Ok(e.value),
        None => Ok(beta_exact(&PetersenGraph::from_params(params))?.beta),
    }
}

/// Every applicable closed-form upper bound.
pub fn upper_bounds(n: usize, k: usize) -> Result<Vec<UpperBound>> {
    let p = GraphParams::new(n, k)?;
    let g = p.gcd();
    let mut out = vec![UpperBound::new(UpperMethod::Fallback, n + n.div_ceil(2))];
    let alt = if (n / g) % 2 == 1 { n + (n + g) / 4 } else { n + n / 4 };
    out.push(UpperBound::new(UpperMethod::AlternatingCycles, alt));
    if n % 2 == 1 && k % 2 == 1 {
        out.push(UpperBound::new(UpperMethod::OddOdd, n + k.div_ceil(2)));
    }
    for tiling in TilingParams::all(p) {
        let base = beta_of(tiling.base_params())?;
        let m = tiling.m;
        let value = if n.is_multiple_of(m) { n / m * base } else { n / m * base + 2 * k };
        out.push(UpperBound { method: UpperMethod::Tiled, m: Some(m), value });
    }
    if k.is_multiple_of(2) && k >= 4 {
        let m = k - 1;
        let value = if n.is_multiple_of(m) { n + n / m } else { n + n / m + 2 * k };
        out.push(UpperBound::new(UpperMethod::EvenK, value));
    }
    if n.is_multiple_of(2) && k % 2 == 1 {
        out.push(UpperBound::new(UpperMethod::Bipartite, n));
    }
    if k == 1 && n % 2 == 1 {
        out.push(UpperBound::new(UpperMethod::K1, n + 1));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactRule {
    /// `n` for even `n`, `n + 1` for odd `n`.
    K1,
    /// `n + ceil(n/5)`.
    K2,
    /// `n` for even `n`, `n + 2` for odd `n`.
    K3,
    /// `n` when `n` is even and `k` odd.
    EvenNOddK,
    /// `n + (k+1)/2` when `n`, `k` are odd and `k | n`.
    OddDivisible,
    /// `n + ceil(n/5)` when `n = 2k + 1`.
    TwoKPlusOne,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub value: usize,
    /// Every rule that applies; all of them agree on `value`.
    pub rules: Vec<ExactRule>,
}

pub fn exact_formula(n: usize, k: usize) -> Result<Option<ExactValue>> {
    GraphParams::new(n, k)?;
    let odd_n = n % 2 == 1;
    let mut hits: Vec<(ExactRule, usize)> = Vec::new();
    if k == 1 {
        hits.push((ExactRule::K1, if odd_n { n + 1 } else { n }));
    }
    if k == 2 {
        hits.push((ExactRule::K2, n + n.div_ceil(5)));
    }
    if k == 3 {
        hits.push((ExactRule::K3, if odd_n { n + 2 } else { n }));
    }
    if !odd_n && k % 2 == 1 {
        hits.push((ExactRule::EvenNOddK, n));
    }
    if odd_n && k % 2 == 1 && n.is_multiple_of(k) {
        hits.push((ExactRule::OddDivisible, n + k.div_ceil(2)));
    }
    if n == 2 * k + 1 {
        hits.push((ExactRule::TwoKPlusOne, n + n.div_ceil(5)));
    }
    let Some(&(_, value)) = hits.first() else {
        return Ok(None);
    };
    if let Some(&(rule, other)) = hits.iter().find(|(_, v)| *v != value) {
        return Err(Error::Invariant(format!(
            "exact formulas disagree on P({n},{k}): {:?} gives {value}, {rule:?} gives {other}",
            hits[0].0
        )));
    }
    Ok(Some(ExactValue { value, rules: hits.into_iter().map(|(r, _)| r).collect() }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub lower: usize,
    pub uppers: Vec<UpperBound>,
    pub min_upper: usize,
    pub exact: Option<ExactValue>,
    /// `n + ceil(n/5)`.
    pub conjecture: usize,
    /// Whether some closed-form upper bound already meets the conjecture.
    pub conjecture_bounded: bool,
    /// `k = 4` has no closed form meeting the conjecture; only the solver
    /// can settle it.
    pub k4_flag: bool,
}

impl BoundReport {
    pub const CSV_HEADER: &'static str = "n,k,lower,exact,min_upper,conjecture";

    pub fn csv_row(&self) -> String {
        let exact = self.exact.as_ref().map(|e| e.value.to_string()).unwrap_or_default();
        format!("{},{},{},{},{},{}", self.n, self.k, self.lower, exact, self.min_upper, self.conjecture)
    }
}

pub fn bound_report(n: usize, k: usize) -> Result<BoundReport> {
    let lower = lower_bound(n, k)?;
    let uppers = upper_bounds(n, k)?;
    let min_upper = uppers.iter().map(|u| u.value).min().expect("fallback bound always applies");
    let exact = exact_formula(n, k)?;
    if lower > min_upper {
        return Err(Error::Invariant(format!("P({n},{k}): lower bound {lower} exceeds upper bound {min_upper}")));
    }
    if let Some(e) = &exact {
        if e.value < lower || e.value > min_upper {
            return Err(Error::Invariant(format!(
                "P({n},{k}): exact value {} outside [{lower}, {min_upper}]",
                e.value
            )));
        }
    }
    let conjecture = crate::conjecture_value(n);
    Ok(BoundReport {
        n,
        k,
        lower,
        uppers,
        min_upper,
        exact,
        conjecture,
        conjecture_bounded: min_upper <= conjecture,
        k4_flag: k == 4,
    })
}
