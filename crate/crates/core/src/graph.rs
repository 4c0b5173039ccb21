//! Finite multigraphs with loops and parallel edges.
//!
//! Edges carry stable [`EdgeId`]s. The identifiers name the polynomial
//! variables `t_e`, so deleting or contracting one edge never renames any
//! other edge.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Stable identifier of an edge; rendered as the `t<id>` variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub a: usize,
    pub b: usize,
}

impl Edge {
    /// Endpoints are stored in increasing order; edges are undirected.
    pub fn new(id: EdgeId, a: usize, b: usize) -> Self {
        Edge { id, a: a.min(b), b: a.max(b) }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Bridge,
    Loop,
    Regular,
}

/// Parameters of the chained polygon and chained banana families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    /// Polygon blocks have `m + 1` sides; banana blocks have `m + 1` edges.
    pub m: usize,
    /// Length of the path joining consecutive blocks (0 joins at a vertex).
    pub k: usize,
    /// Number of blocks.
    pub n: usize,
}

impl FamilySpec {
    pub fn new(m: usize, k: usize, n: usize) -> Result<Self> {
        let spec = FamilySpec { m, k, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("N must be at least 1".into()));
        }
        Ok(())
    }

    /// `N(m+1) + k(N-1)`, shared by both chain families.
    pub fn edge_count(&self) -> usize {
        self.n * (self.m + 1) + self.k * (self.n - 1)
    }
}

/// Union-find over `0..n`, used for component counts.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), sets: n }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` when `x` and `y` were in different sets.
    pub(crate) fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo;
        self.sets -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.sets
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl MultiGraph {
    /// Builds a graph, checking endpoint ranges and identifier uniqueness.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (EdgeId, usize, usize)>,
    {
        let mut out = Vec::new();
        for (id, a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidParameter(format!(
                    "edge {id} has endpoint out of range for {vertex_count} vertices"
                )));
            }
            if out.iter().any(|e: &Edge| e.id == id) {
                return Err(Error::InvalidParameter(format!("duplicate edge id {id}")));
            }
            out.push(Edge::new(id, a, b));
        }
        Ok(MultiGraph { vertex_count, edges: out })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        MultiGraph { vertex_count: n, edges: Vec::new() }
    }

    /// Builds from endpoint pairs, numbering edges `1, 2, ...` in order.
    pub fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            vertex_count,
            pairs.iter().enumerate().map(|(i, &(a, b))| (EdgeId(i as u32 + 1), a, b)),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges.iter().find(|e| e.id == id).ok_or(Error::EdgeNotFound(id))
    }

    fn position(&self, id: EdgeId) -> Result<usize> {
        self.edges.iter().position(|e| e.id == id).ok_or(Error::EdgeNotFound(id))
    }

    /// Smallest identifier larger than every identifier in use.
    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.edges.iter().map(|e| e.id.0).max().map_or(1, |m| m + 1))
    }

    /// Connected components, counting isolated vertices.
    pub fn components(&self) -> usize {
        self.components_of(self.edges.iter())
    }

    /// Components of the spanning subgraph `(V(G), edges)`.
    pub(crate) fn components_of<'a, I>(&self, edges: I) -> usize
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut sets = DisjointSets::new(self.vertex_count);
        for e in edges {
            sets.union(e.a, e.b);
        }
        sets.count()
    }

    pub fn delete_edge(&self, id: EdgeId) -> Result<MultiGraph> {
        let pos = self.position(id)?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(MultiGraph { vertex_count: self.vertex_count, edges })
    }

    /// Contracts `id`. The merged vertex keeps the smaller index and higher
    /// indices shift down by one. Contracting a loop deletes it.
    pub fn contract_edge(&self, id: EdgeId) -> Result<MultiGraph> {
        let edge = *self.edge(id)?;
        if edge.is_loop() {
            return self.delete_edge(id);
        }
        let keep = edge.a.min(edge.b);
        let gone = edge.a.max(edge.b);
        let relabel = |v: usize| match v.cmp(&gone) {
            core::cmp::Ordering::Equal => keep,
            core::cmp::Ordering::Greater => v - 1,
            core::cmp::Ordering::Less => v,
        };
        let edges = self
            .edges
            .iter()
            .filter(|e| e.id != id)
            .map(|e| Edge::new(e.id, relabel(e.a), relabel(e.b)))
            .collect();
        Ok(MultiGraph { vertex_count: self.vertex_count - 1, edges })
    }

    /// Replaces `id` by a path of `m` edges; `m = 1` is the identity and
    /// `m = 0` is contraction. The first path edge keeps `id`, the others
    /// get fresh identifiers and the `m - 1` new vertices are appended.
    pub fn split_edge(&self, id: EdgeId, m: usize) -> Result<MultiGraph> {
        let pos = self.position(id)?;
        match m {
            0 => return self.contract_edge(id),
            1 => return Ok(self.clone()),
            _ => {}
        }
        let edge = self.edges[pos];
        let mut next = self.next_edge_id().0;
        let first_new = self.vertex_count;
        let mut path = Vec::with_capacity(m);
        let mut from = edge.a;
        for i in 0..m {
            let to = if i + 1 == m { edge.b } else { first_new + i };
            let eid = if i == 0 {
                id
            } else {
                next += 1;
                EdgeId(next - 1)
            };
            path.push(Edge::new(eid, from, to));
            from = to;
        }
        let mut edges = self.edges.clone();
        edges.splice(pos..=pos, path);
        Ok(MultiGraph { vertex_count: self.vertex_count + m - 1, edges })
    }

    /// Adds `extra` fresh edges parallel to `id`.
    pub fn double_edge(&self, id: EdgeId, extra: usize) -> Result<MultiGraph> {
        let edge = *self.edge(id)?;
        let mut out = self.clone();
        for next in (self.next_edge_id().0..).take(extra) {
            out.edges.push(Edge { id: EdgeId(next), a: edge.a, b: edge.b });
        }
        Ok(out)
    }

    pub fn classify_edge(&self, id: EdgeId) -> Result<EdgeKind> {
        let edge = self.edge(id)?;
        if edge.is_loop() {
            return Ok(EdgeKind::Loop);
        }
        let without = self.components_of(self.edges.iter().filter(|e| e.id != id));
        if without > self.components() {
            Ok(EdgeKind::Bridge)
        } else {
            Ok(EdgeKind::Regular)
        }
    }

    /// Disjoint union; the edges of `other` are renumbered after ours.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let shift = self.next_edge_id().0 - 1;
        let offset = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(
            other.edges.iter().map(|e| Edge::new(EdgeId(e.id.0 + shift), e.a + offset, e.b + offset)),
        );
        MultiGraph { vertex_count: self.vertex_count + other.vertex_count, edges }
    }

    /// Identifies vertex `u` of `self` with vertex `v` of `other`.
    pub fn join_at_vertex(&self, u: usize, other: &MultiGraph, v: usize) -> Result<MultiGraph> {
        if u >= self.vertex_count || v >= other.vertex_count {
            return Err(Error::InvalidParameter("join vertex out of range".into()));
        }
        let union = self.disjoint_union(other);
        // merging two distinct vertices is a contraction of a temporary edge
        let tmp = union.next_edge_id();
        let mut with_tmp = union;
        with_tmp.edges.push(Edge::new(tmp, u, self.vertex_count + v));
        with_tmp.contract_edge(tmp)
    }

    /// Adds a new edge between existing vertices, or a pendant edge when
    /// `b` is `None`.
    pub fn add_edge(&self, a: usize, b: Option<usize>) -> Result<MultiGraph> {
        let mut out = self.clone();
        let b = match b {
            Some(b) => b,
            None => {
                out.vertex_count += 1;
                out.vertex_count - 1
            }
        };
        if a >= out.vertex_count || b >= out.vertex_count {
            return Err(Error::InvalidParameter("endpoint out of range".into()));
        }
        out.edges.push(Edge::new(self.next_edge_id(), a, b));
        Ok(out)
    }

    /// A cycle with `sides` edges: one loop for 1, the 2-banana for 2.
    pub fn polygon(sides: usize) -> Result<MultiGraph> {
        if sides == 0 {
            return Err(Error::InvalidParameter("polygon needs at least one side".into()));
        }
        let pairs: Vec<(usize, usize)> = (0..sides).map(|i| (i, (i + 1) % sides)).collect();
        Self::from_pairs(sides, &pairs)
    }

    /// Two vertices joined by `m` parallel edges.
    pub fn banana(m: usize) -> Result<MultiGraph> {
        if m == 0 {
            return Err(Error::InvalidParameter("banana needs at least one edge".into()));
        }
        let pairs: Vec<(usize, usize)> = (0..m).map(|_| (0, 1)).collect();
        Self::from_pairs(2, &pairs)
    }

    /// A path with `edges` edges on `edges + 1` vertices.
    pub fn path(edges: usize) -> MultiGraph {
        let pairs: Vec<(usize, usize)> = (0..edges).map(|i| (i, i + 1)).collect();
        Self::from_pairs(edges + 1, &pairs).expect("path endpoints are in range")
    }

    /// `N` polygons with `m + 1` sides each, consecutive ones joined by a
    /// path of `k` edges (or at a shared vertex when `k = 0`).
    pub fn chain_polygons(spec: FamilySpec) -> Result<MultiGraph> {
        spec.validate()?;
        let sides = spec.m + 1;
        let mut chain = ChainBuilder::default();
        for block in 0..spec.n {
            let start = chain.link(block, spec.k);
            let mut ring = Vec::with_capacity(sides);
            ring.push(start);
            for _ in 1..sides {
                ring.push(chain.fresh_vertex());
            }
            for i in 0..sides {
                chain.edge(ring[i], ring[(i + 1) % sides]);
            }
            chain.exit = ring[sides / 2];
        }
        chain.finish()
    }

    /// `N` copies of the `(m+1)`-banana joined like [`Self::chain_polygons`].
    pub fn chain_bananas(spec: FamilySpec) -> Result<MultiGraph> {
        spec.validate()?;
        let mut chain = ChainBuilder::default();
        for block in 0..spec.n {
            let start = chain.link(block, spec.k);
            let end = chain.fresh_vertex();
            for _ in 0..=spec.m {
                chain.edge(start, end);
            }
            chain.exit = end;
        }
        chain.finish()
    }
}

#[derive(Default)]
struct ChainBuilder {
    vertices: usize,
    pairs: Vec<(usize, usize)>,
    exit: usize,
}

impl ChainBuilder {
    fn fresh_vertex(&mut self) -> usize {
        self.vertices += 1;
        self.vertices - 1
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.pairs.push((a, b));
    }

    /// Entry vertex of the next block, laying down the connector path.
    fn link(&mut self, block: usize, k: usize) -> usize {
        if block == 0 {
            return self.fresh_vertex();
        }
        let mut at = self.exit;
        for _ in 0..k {
            let next = self.fresh_vertex();
            self.edge(at, next);
            at = next;
        }
        at
    }

    fn finish(self) -> Result<MultiGraph> {
        MultiGraph::from_pairs(self.vertices, &self.pairs)
    }
}
