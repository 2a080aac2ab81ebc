//! Generalized Petersen graphs `P(n, k)`.
//!
//! Vertices are `u_1..u_n` (outer cycle) and `v_1..v_n` (inner vertices),
//! with edges `u_i u_{i+1}`, `u_i v_i` and `v_i v_{i+k}`, subscripts taken
//! modulo `n` into `1..=n`. Internally every vertex also has a dense id in
//! `0..2n`: `u_i -> i - 1` and `v_i -> n + i - 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Admissible parameters: `k >= 1` and `n > 2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphParams {
    n: usize,
    k: usize,
}

impl GraphParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 1 || n <= 2 * k {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `gcd(n, k)`, the number of inner cycles.
    pub fn gcd(&self) -> usize {
        gcd(self.n, self.k)
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    /// Reduce an arbitrary (possibly negative) subscript into `1..=n`.
    pub fn wrap(&self, index: i64) -> usize {
        (index - 1).rem_euclid(self.n as i64) as usize + 1
    }

    /// Every admissible pair with `3 <= n <= max_n`, ordered by `n` then `k`.
    pub fn admissible_up_to(max_n: usize) -> Vec<GraphParams> {
        (3..=max_n)
            .flat_map(|n| (1..).take_while(move |k| 2 * k < n).map(move |k| GraphParams { n, k }))
            .collect()
    }
}

impl fmt::Display for GraphParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{})", self.n, self.k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// `U`, the outer cycle.
    Outer,
    /// `V`, the inner vertices.
    Inner,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Outer => Side::Inner,
            Side::Inner => Side::Outer,
        }
    }
}

/// A vertex with a 1-based subscript.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId {
    pub side: Side,
    pub index: usize,
}

impl VertexId {
    pub fn outer(index: usize) -> Self {
        Self { side: Side::Outer, index }
    }

    pub fn inner(index: usize) -> Self {
        Self { side: Side::Inner, index }
    }

    pub fn twin(self) -> Self {
        Self { side: self.side.opposite(), index: self.index }
    }

    /// Dense id in `0..2n`.
    pub fn dense(self, n: usize) -> usize {
        match self.side {
            Side::Outer => self.index - 1,
            Side::Inner => n + self.index - 1,
        }
    }

    pub fn from_dense(id: usize, n: usize) -> Self {
        if id < n {
            Self::outer(id + 1)
        } else {
            Self::inner(id - n + 1)
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Outer => write!(f, "u{}", self.index),
            Side::Inner => write!(f, "v{}", self.index),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    UEdge,
    Spoke,
    VEdge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
    pub kind: EdgeKind,
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.a, self.b)
    }
}

/// Result of the bipartiteness test, with a certificate either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite { x: Vec<VertexId>, y: Vec<VertexId> },
    /// A closed walk `w_0 w_1 .. w_{l-1} w_0` of odd length `l`.
    OddCycle(Vec<VertexId>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// An immutable `P(n, k)` with canonical edge order and dense adjacency.
#[derive(Clone, Debug)]
pub struct PetersenGraph {
    params: GraphParams,
    edges: Vec<Edge>,
    dense_edges: Vec<(usize, usize)>,
    adjacency: Vec<[usize; 3]>,
}

impl PetersenGraph {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        Ok(Self::from_params(GraphParams::new(n, k)?))
    }

    pub fn from_params(params: GraphParams) -> Self {
        let n = params.n;
        let k = params.k;
        let mut edges = Vec::with_capacity(3 * n);
        for i in 1..=n {
            edges.push(Edge {
                a: VertexId::outer(i),
                b: VertexId::outer(params.wrap(i as i64 + 1)),
                kind: EdgeKind::UEdge,
            });
        }
        for i in 1..=n {
            edges.push(Edge {
                a: VertexId::outer(i),
                b: VertexId::inner(i),
                kind: EdgeKind::Spoke,
            });
        }
        let mut inner: Vec<(usize, usize)> = (1..=n)
            .map(|i| {
                let j = params.wrap((i + k) as i64);
                (i.min(j), i.max(j))
            })
            .collect();
        inner.sort_unstable();
        edges.extend(inner.into_iter().map(|(i, j)| Edge {
            a: VertexId::inner(i),
            b: VertexId::inner(j),
            kind: EdgeKind::VEdge,
        }));

        let dense_edges: Vec<(usize, usize)> =
            edges.iter().map(|e| (e.a.dense(n), e.b.dense(n))).collect();
        let mut adjacency = vec![[usize::MAX; 3]; 2 * n];
        let mut fill = vec![0usize; 2 * n];
        for &(a, b) in &dense_edges {
            adjacency[a][fill[a]] = b;
            fill[a] += 1;
            adjacency[b][fill[b]] = a;
            fill[b] += 1;
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Self { params, edges, dense_edges, adjacency }
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn k(&self) -> usize {
        self.params.k
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.params.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `U`-edges by index, spokes, then `V`-edges
    /// by smaller endpoint.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges as dense id pairs, same order as [`edges`](Self::edges).
    pub fn dense_edges(&self) -> &[(usize, usize)] {
        &self.dense_edges
    }

    /// Sorted dense neighbours of a dense vertex id.
    pub fn dense_neighbors(&self, id: usize) -> [usize; 3] {
        self.adjacency[id]
    }

    pub fn neighbors(&self, v: VertexId) -> [VertexId; 3] {
        let n = self.n();
        self.adjacency[self.dense(v)].map(|id| VertexId::from_dense(id, n))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (1..=self.n()).contains(&v.index)
    }

    pub fn dense(&self, v: VertexId) -> usize {
        debug_assert!(self.contains(v));
        v.dense(self.n())
    }

    pub fn vertex(&self, id: usize) -> VertexId {
        VertexId::from_dense(id, self.n())
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(|id| self.vertex(id))
    }

    pub fn twin(&self, v: VertexId) -> VertexId {
        v.twin()
    }

    /// The `gcd(n, k)` inner cycles, each walked by `+k` from its smallest
    /// index, ordered by smallest index.
    pub fn inner_cycles(&self) -> Vec<Vec<VertexId>> {
        let g = self.params.gcd();
        let len = self.n() / g;
        (1..=g)
            .map(|start| {
                (0..len)
                    .map(|step| VertexId::inner(self.params.wrap((start + step * self.k()) as i64)))
                    .collect()
            })
            .collect()
    }

    /// The `m`-sector `{u_{start+1..start+m}} ∪ {v_{start+1..start+m}}`.
    pub fn sector(&self, start: i64, m: usize) -> Result<Vec<VertexId>> {
        if m < 1 || m > self.n() {
            return Err(Error::OutOfRange(format!(
                "sector size {m} outside 1..={}",
                self.n()
            )));
        }
        let indices: Vec<usize> =
            (1..=m as i64).map(|off| self.params.wrap(start + off)).collect();
        Ok(indices
            .iter()
            .map(|&i| VertexId::outer(i))
            .chain(indices.iter().map(|&i| VertexId::inner(i)))
            .collect())
    }

    /// Bipartite exactly when `n` is even and `k` is odd.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let n = self.n();
        let k = self.k();
        if n % 2 == 1 {
            return Bipartiteness::OddCycle((1..=n).map(VertexId::outer).collect());
        }
        if k.is_multiple_of(2) {
            // u_1 v_1 v_{k+1} u_{k+1} u_k .. u_2, length k + 3
            let mut cycle = vec![
                VertexId::outer(1),
                VertexId::inner(1),
                VertexId::inner(k + 1),
                VertexId::outer(k + 1),
            ];
            cycle.extend((2..=k).rev().map(VertexId::outer));
            return Bipartiteness::OddCycle(cycle);
        }
        let mut x = Vec::with_capacity(n);
        let mut y = Vec::with_capacity(n);
        for i in 1..=n {
            let part = if i % 2 == 1 { &mut x } else { &mut y };
            part.push(VertexId::outer(i));
            part.push(VertexId::inner(self.params.wrap(i as i64 + 1)));
        }
        x.sort();
        y.sort();
        Bipartiteness::Bipartite { x, y }
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.contains(a) && self.contains(b) && self.neighbors(a).contains(&b)
    }
}
