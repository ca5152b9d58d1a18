//! Compact simple-graph representation: one adjacency bit mask per vertex,
//! plus a bit-exact graph6 codec and a small edge-list text format for
//! human-authored fixtures.

use crate::error::{Error, Result};
use std::fmt;

/// Largest supported order: one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

/// A set of vertex indices as a bit mask. Bit `v` set means vertex `v` is a member.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_ORDER);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the vertex set of a graph of order `n`.
    pub fn complement_in(self, n: usize) -> VertexSet {
        VertexSet(Self::full(n).0 & !self.0)
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// A finite simple undirected graph on vertices `0..order`.
///
/// Values are immutable once handed to the property deciders and the
/// enumerator; the only mutation points are the builder methods here.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn new(order: usize) -> Result<Graph> {
        if order > MAX_ORDER {
            return Err(Error::OrderOutOfRange(order));
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset_of(self.vertices()) {
            Ok(())
        } else {
            Err(Error::SetOutOfRange { order: self.order })
        }
    }

    /// Sets both symmetric adjacency bits. Idempotent.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::LoopRejected(u));
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    /// Raw adjacency row of `v`; bit `u` set iff `u ~ v`.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v]))
    }

    pub fn closed_neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v] | 1u64 << v))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn edge_count(&self) -> u64 {
        let total: u64 = self.adj.iter().map(|row| u64::from(row.count_ones())).sum();
        total / 2
    }

    /// Edges with exactly one endpoint in each of two disjoint sets.
    pub fn edges_between(&self, s: VertexSet, t: VertexSet) -> Result<u64> {
        self.check_set(s)?;
        self.check_set(t)?;
        if !s.intersection(t).is_empty() {
            return Err(Error::OverlappingSets);
        }
        let mut count = 0u64;
        for v in s.iter() {
            count += u64::from((self.adj[v] & t.0).count_ones());
        }
        Ok(count)
    }

    /// Edges with both endpoints inside `s`.
    pub fn edges_within(&self, s: VertexSet) -> u64 {
        let mut count = 0u64;
        for v in s.iter() {
            count += u64::from((self.adj[v] & s.0).count_ones());
        }
        count / 2
    }

    /// Subgraph induced by `s`, vertices relabeled by ascending original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let members: Vec<usize> = s.iter().collect();
        let mut g = Graph::new(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order).0;
        let adj = (0..self.order)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph {
            order: self.order,
            adj,
        }
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order);
        let mut g = Graph {
            order: self.order,
            adj: vec![0; self.order],
        };
        for v in 0..self.order {
            let nv = perm[v];
            for u in VertexSet(self.adj[v]).iter() {
                g.adj[nv] |= 1u64 << perm[u];
            }
        }
        g
    }

    /// New graph with one extra vertex whose neighborhood is `mask` (a bit
    /// mask over the existing vertices).
    pub fn extend_with_vertex(&self, mask: u64) -> Result<Graph> {
        if self.order + 1 > MAX_ORDER {
            return Err(Error::OrderOutOfRange(self.order + 1));
        }
        debug_assert_eq!(mask & !VertexSet::full(self.order).0, 0);
        let new = self.order;
        let mut adj = self.adj.clone();
        adj.push(mask);
        for v in VertexSet(mask).iter() {
            adj[v] |= 1u64 << new;
        }
        Ok(Graph {
            order: self.order + 1,
            adj,
        })
    }

    /// Graph on `order - 1` vertices with the last vertex removed.
    pub fn delete_last_vertex(&self) -> Graph {
        debug_assert!(self.order > 0);
        let n = self.order - 1;
        let keep = VertexSet::full(n).0;
        Graph {
            order: n,
            adj: self.adj[..n].iter().map(|row| row & keep).collect(),
        }
    }

    /// graph6 encoding, short header form (order <= 62).
    pub fn to_graph6(&self) -> Result<String> {
        if self.order > 62 {
            return Err(Error::OrderTooLarge {
                order: self.order,
                limit: 62,
            });
        }
        let n = self.order;
        let mut out = vec![n as u8 + 63];
        let nbits = n * n.saturating_sub(1) / 2;
        let mut acc = 0u8;
        let mut filled = 0;
        let emit = |bit: bool, acc: &mut u8, filled: &mut usize, out: &mut Vec<u8>| {
            *acc = (*acc << 1) | u8::from(bit);
            *filled += 1;
            if *filled == 6 {
                out.push(*acc + 63);
                *acc = 0;
                *filled = 0;
            }
        };
        // column order: (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
        for v in 1..n {
            for u in 0..v {
                emit(self.has_edge(u, v), &mut acc, &mut filled, &mut out);
            }
        }
        if nbits % 6 != 0 {
            for _ in 0..(6 - nbits % 6) {
                emit(false, &mut acc, &mut filled, &mut out);
            }
        }
        Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
    }

    /// Decodes a short-form graph6 string (order <= 62). Extended headers are rejected.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let bytes = text.trim_end().as_bytes();
        let (&header, payload) = bytes.split_first().ok_or(Error::MalformedHeader)?;
        if !(63..=125).contains(&header) {
            // 126 (`~`) starts an extended header, which we do not accept.
            return Err(Error::MalformedHeader);
        }
        let n = (header - 63) as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let expected = nbits.div_ceil(6);
        if payload.len() < expected {
            return Err(Error::TruncatedPayload);
        }
        if payload.len() > expected {
            return Err(Error::Parse(format!(
                "graph6 payload has {} trailing bytes",
                payload.len() - expected
            )));
        }
        let mut g = Graph::new(n)?;
        let mut bit_index = 0usize;
        for &byte in payload {
            if !(63..=126).contains(&byte) {
                return Err(Error::Parse(format!("invalid graph6 byte {byte:#x}")));
            }
            let group = byte - 63;
            if group > 63 {
                return Err(Error::Parse(format!("invalid graph6 byte {byte:#x}")));
            }
            for k in (0..6).rev() {
                let bit = group >> k & 1 == 1;
                if bit_index >= nbits {
                    if bit {
                        return Err(Error::NonzeroPadding);
                    }
                } else if bit {
                    let (u, v) = pair_from_index(bit_index);
                    g.add_edge(u, v)?;
                }
                bit_index += 1;
            }
        }
        Ok(g)
    }

    /// Plain edge-list text form `"n; u-v,u-v,..."`.
    pub fn to_edge_list(&self) -> String {
        let mut edges = Vec::new();
        for v in 1..self.order {
            for u in 0..v {
                if self.has_edge(u, v) {
                    edges.push(format!("{u}-{v}"));
                }
            }
        }
        format!("{}; {}", self.order, edges.join(","))
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let (head, tail) = text
            .split_once(';')
            .ok_or_else(|| Error::Parse("edge list needs 'n; edges' form".into()))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad order {:?}", head.trim())))?;
        let mut g = Graph::new(n)?;
        for item in tail.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad edge {item:?}")))?;
            let u: usize = a
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex {a:?}")))?;
            let v: usize = b
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex {b:?}")))?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[cfg(test)]
    pub(crate) fn assert_invariants(&self) {
        let full = VertexSet::full(self.order).0;
        for v in 0..self.order {
            assert_eq!(self.adj[v] & !full, 0, "bits beyond order");
            assert_eq!(self.adj[v] >> v & 1, 0, "loop on {v}");
            for u in VertexSet(self.adj[v]).iter() {
                assert!(self.has_edge(v, u), "asymmetric edge {v}-{u}");
            }
        }
    }
}

/// Inverse of the graph6 column order: bit index -> (u, v) with u < v.
fn pair_from_index(idx: usize) -> (usize, usize) {
    // column v holds bits for (0,v)..(v-1,v), starting at offset v(v-1)/2
    let mut v = 1;
    while (v + 1) * v / 2 <= idx {
        v += 1;
    }
    (idx - v * (v - 1) / 2, v)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_edge_list())
    }
}
