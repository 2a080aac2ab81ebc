use std::time::Instant;

use super::{BetaResult, SolveMethod, SolverConfig, SOLVER_MAX_N};
use crate::bounds::lower_bound;
use crate::constructions::best_construction;
use crate::cover::{check_cover, Cover};
use crate::error::{Error, Result};
use crate::graph::PetersenGraph;

pub fn beta_exact(g: &PetersenGraph) -> Result<BetaResult> {
    beta_exact_with(g, &SolverConfig::default())
}

/// Branch and bound over the residual graph.
///
/// Each node first applies the degree-0 rule (drop the vertex) and the
/// degree-1 rule (take its neighbour). A residual of maximum degree 2 is a
/// union of cycles and is finished exactly. Otherwise the lowest-indexed
/// vertex of maximum degree `v` is branched on: `v` in the cover, or all of
/// `N(v)` in the cover. Nodes are pruned against a greedy maximal matching.
pub fn beta_exact_with(g: &PetersenGraph, config: &SolverConfig) -> Result<BetaResult> {
    let params = g.params();
    if params.n() > SOLVER_MAX_N {
        return Err(Error::ResourceLimit {
            what: format!("bitset solver on {params}"),
            limit: SOLVER_MAX_N as u64,
        });
    }
    let start = Instant::now();
    let order = params.vertex_count();
    let adj: Vec<u128> = (0..order)
        .map(|v| g.dense_neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w))
        .collect();

    let (best_size, best_cover) = if config.warm_start {
        let warm = best_construction(g).cover;
        (warm.size(), warm.mask())
    } else {
        (order, all_bits(order))
    };
    let mut search = Search {
        adj,
        best_size,
        best_cover,
        nodes: 0,
        budget: config.node_budget,
        deadline: config.time_budget.map(|t| start + t),
        exhausted: false,
    };
    let root = all_bits(order);
    let root_lower = search.matching_bound(root);
    search.branch(root, 0, 0);

    if search.exhausted {
        return Err(Error::BudgetExhausted {
            n: params.n(),
            k: params.k(),
            budget: config.node_budget,
            lower: root_lower.max(lower_bound(params.n(), params.k())?),
            upper: search.best_size,
        });
    }
    let witness = Cover::from_mask(params, search.best_cover);
    check_cover(g, &witness)?;
    if witness.size() != search.best_size {
        return Err(Error::Invariant(format!(
            "witness of size {} reported as {}",
            witness.size(),
            search.best_size
        )));
    }
    Ok(BetaResult {
        params,
        beta: search.best_size,
        witness,
        method: SolveMethod::BranchAndBound,
        nodes: search.nodes,
        elapsed: start.elapsed(),
    })
}

fn all_bits(order: usize) -> u128 {
    if order == 128 {
        u128::MAX
    } else {
        (1u128 << order) - 1
    }
}

struct Bits(u128);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

struct Search {
    adj: Vec<u128>,
    best_size: usize,
    best_cover: u128,
    nodes: u64,
    budget: u64,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Search {
    fn record(&mut self, size: usize, cover: u128) {
        if size < self.best_size {
            self.best_size = size;
            self.best_cover = cover;
        }
    }

    fn matching_bound(&self, alive: u128) -> usize {
        let mut free = alive;
        let mut matched = 0;
        for v in Bits(alive) {
            if free >> v & 1 == 0 {
                continue;
            }
            let cand = self.adj[v] & free;
            if cand != 0 {
                let w = cand.trailing_zeros();
                free &= !(1u128 << v | 1u128 << w);
                matched += 1;
            }
        }
        matched
    }

    fn branch(&mut self, mut alive: u128, mut cover: u128, mut size: usize) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget
            || (self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() > d))
        {
            self.exhausted = true;
            return;
        }

        loop {
            let mut changed = false;
            for v in Bits(alive) {
                if alive >> v & 1 == 0 {
                    continue;
                }
                let nb = self.adj[v] & alive;
                match nb.count_ones() {
                    0 => {
                        alive &= !(1u128 << v);
                        changed = true;
                    }
                    1 => {
                        cover |= nb;
                        size += 1;
                        alive &= !(1u128 << v | nb);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }

        if size >= self.best_size {
            return;
        }
        if alive == 0 {
            self.record(size, cover);
            return;
        }
        if size + self.matching_bound(alive) >= self.best_size {
            return;
        }

        let mut pivot = 0;
        let mut pivot_degree = 0;
        for v in Bits(alive) {
            let d = (self.adj[v] & alive).count_ones();
            if d > pivot_degree {
                pivot = v;
                pivot_degree = d;
            }
        }

        if pivot_degree <= 2 {
            let (extra, cycles_cover) = self.cover_cycles(alive);
            self.record(size + extra, cover | cycles_cover);
            return;
        }

        let nb = self.adj[pivot] & alive;
        self.branch(alive & !(1u128 << pivot), cover | 1u128 << pivot, size + 1);
        self.branch(alive & !(1u128 << pivot | nb), cover | nb, size + nb.count_ones() as usize);
    }

    /// Minimum cover of a residual in which every vertex has degree 2.
    fn cover_cycles(&self, mut alive: u128) -> (usize, u128) {
        let mut cover = 0u128;
        let mut size = 0;
        while alive != 0 {
            let first = alive.trailing_zeros() as usize;
            let mut cycle = vec![first];
            let mut prev = first;
            let mut cur = (self.adj[first] & alive).trailing_zeros() as usize;
            while cur != first {
                cycle.push(cur);
                let next = (self.adj[cur] & alive & !(1u128 << prev)).trailing_zeros() as usize;
                prev = cur;
                cur = next;
            }
            for (i, &v) in cycle.iter().enumerate() {
                alive &= !(1u128 << v);
                if i % 2 == 1 || (i == cycle.len() - 1 && cycle.len() % 2 == 1) {
                    cover |= 1u128 << v;
                    size += 1;
                }
            }
        }
        (size, cover)
    }
}
