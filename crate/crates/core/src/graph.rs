//! Simple undirected graphs stored as bit-vector adjacency rows.
//!
//! Vertices are `0..n` internally. Everything user-facing (file formats,
//! catalog documentation, CLI output) uses 1-based labels; see [`label`].

use std::collections::VecDeque;
use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

/// Words of storage for one row. Graphs with at most 64 vertices never spill.
type Words = SmallVec<[u64; 1]>;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// 1-based label of an internal vertex index.
#[inline]
pub fn label(v: usize) -> usize {
    v + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
}

/// A subset of the vertices of a graph of a fixed order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    order: usize,
    bits: Words,
}

impl VertexSet {
    pub fn new(order: usize) -> Self {
        VertexSet {
            order,
            bits: SmallVec::from_elem(0, words_for(order)),
        }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::new(order);
        for v in 0..order {
            s.insert(v);
        }
        s
    }

    pub fn singleton(order: usize, v: usize) -> Self {
        let mut s = Self::new(order);
        s.insert(v);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(order: usize, vertices: I) -> Self {
        let mut s = Self::new(order);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Order of the graph this set belongs to.
    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.order,
            "vertex {v} out of range for order {}",
            self.order
        );
        self.bits[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.order {
            self.bits[v >> 6] &= !(1u64 << (v & 63));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.bits[v >> 6] >> (v & 63) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.bits
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Members<'_> {
        Members {
            bits: &self.bits,
            word: 0,
            current: self.bits.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.order, other.order);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.order, other.order);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.order, other.order);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// Complement relative to `0..order`.
    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet::full(self.order);
        s.difference_with(self);
        s
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Re-express the set in a parent graph through `map` (child index -> parent index).
    pub fn lift(&self, map: &[usize], parent_order: usize) -> VertexSet {
        VertexSet::from_vertices(parent_order, self.iter().map(|v| map[v]))
    }

    /// Members as 1-based labels.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(label).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Members<'a> {
    bits: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            if self.word >= self.bits.len() {
                return None;
            }
            self.current = self.bits[self.word];
        }
    }
}

/// An immutable simple graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

/// An induced subgraph together with the map from its vertices back to the parent.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    /// `map[i]` is the parent vertex that became vertex `i`.
    pub map: Vec<usize>,
}

impl Subgraph {
    /// Lift a vertex set of the subgraph into the parent's labels.
    pub fn lift(&self, s: &VertexSet, parent_order: usize) -> VertexSet {
        s.lift(&self.map, parent_order)
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    /// Build from 0-based edges. Repeated edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] but with 1-based labels.
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(GraphError::OutOfRange {
                    vertex: 0,
                    order: n,
                });
            }
            g.add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }

    /// Adds an edge, returning whether it was new.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::OutOfRange {
                    vertex: x,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Ok(false);
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(true)
    }

    /// A copy with extra edges added.
    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// A copy with one extra vertex `n` joined to `neighbors`.
    pub fn with_vertex(&self, neighbors: &[usize]) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("edge of a valid graph");
        }
        for &u in neighbors {
            g.add_edge(u, n).expect("neighbor in range");
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n + other.order());
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(u + n, v + n).unwrap();
        }
        g
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).unwrap();
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Degrees in ascending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn closed_neighborhood_of(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// N[S].
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// The subgraph induced by `keep`, relabeled in increasing vertex order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Subgraph {
        let map: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for u in self.adj[v].iter() {
                let j = index[u];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        Subgraph { graph: g, map }
    }

    /// G - S.
    pub fn delete_vertices(&self, s: &VertexSet) -> Subgraph {
        self.induced_subgraph(&s.complement())
    }

    /// G - N[S].
    pub fn delete_closed_neighborhood(&self, s: &VertexSet) -> Subgraph {
        self.delete_vertices(&self.closed_neighborhood(s))
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.order(), start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(self.order());
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    pub fn components(&self) -> ComponentPartition {
        let mut left = self.vertices();
        let mut components = Vec::new();
        let mut p3_components = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reach_within(v, &left);
            left.difference_with(&comp);
            if comp
                .iter()
                .any(|u| self.adj[u].intersection_len(&comp) >= 2)
            {
                p3_components.push(components.len());
            }
            components.push(comp);
        }
        ComponentPartition {
            components,
            p3_components,
        }
    }

    /// Components of the subgraph induced by `within`, as vertex sets of `self`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reach_within(v, &left);
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        match self.order() {
            0 => true,
            n => self.reach_within(0, &self.vertices()).len() == n,
        }
    }

    /// Whether deleting `v` disconnects the rest (false for graphs that are already disconnected).
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let mut rest = self.vertices();
        rest.remove(v);
        match rest.first() {
            None => false,
            Some(s) => self.reach_within(s, &rest).len() != rest.len(),
        }
    }

    /// BFS distance; `None` when `u` and `v` lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.order()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in self.adj[x].iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return Some(dist[y]);
                    }
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Edge list with 1-based labels.
    pub fn labeled_edges(&self) -> Vec<(usize, usize)> {
        self.edges().map(|(u, v)| (label(u), label(v))).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.order(),
            self.labeled_edges()
        )
    }
}

/// The components of a graph, with those containing a 3-path flagged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub components: Vec<VertexSet>,
    /// Indices into `components` of the parts that contain a 3-path.
    pub p3_components: Vec<usize>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn closed_neighborhood_on_cycle() {
        let c5 = cycle(5);
        let s = VertexSet::singleton(5, 0);
        assert_eq!(c5.closed_neighborhood(&s).to_vec(), vec![0, 1, 4]);
        assert!(c5.closed_neighborhood(&VertexSet::new(5)).is_empty());
    }

    #[test]
    fn delete_vertices_keeps_relabeling() {
        let p4 = path(4);
        let sub = p4.delete_vertices(&VertexSet::singleton(4, 0));
        assert_eq!(sub.graph.order(), 3);
        assert_eq!(sub.graph.size(), 2);
        assert_eq!(sub.map, vec![1, 2, 3]);

        let c7 = cycle(7);
        for v in 0..7 {
            let rest = c7
                .delete_closed_neighborhood(&VertexSet::singleton(7, v))
                .graph;
            assert_eq!(rest.order(), 4);
            assert_eq!(rest.degree_sequence(), vec![1, 1, 2, 2]);
            assert!(rest.is_connected());
        }

        let same = c7.delete_vertices(&VertexSet::new(7));
        assert_eq!(same.graph, c7);
        assert_eq!(same.map, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn component_flags() {
        let c7 = cycle(7);
        let parts = c7.components();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts.p3_components, vec![0]);

        let parts = Graph::empty(3).components();
        assert_eq!(parts.len(), 3);
        assert!(parts.p3_components.is_empty());

        let c11 = cycle(11);
        let rest = c11
            .delete_closed_neighborhood(&VertexSet::singleton(11, 0))
            .graph;
        let parts = rest.components();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts.p3_components, vec![0]);
        assert_eq!(rest.order(), 8);
    }

    #[test]
    fn distances() {
        let c11 = cycle(11);
        assert_eq!(c11.distance(3, 3), Some(0));
        assert_eq!(c11.distance(0, 5), Some(5));
        assert_eq!(c11.distance(0, 6), Some(5));
        let two = Graph::empty(2);
        assert_eq!(two.distance(0, 1), None);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { vertex: 3, .. })
        ));
        let g = Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn wide_graphs_spill_past_one_word() {
        let c = cycle(130);
        assert_eq!(c.size(), 130);
        assert!(c.is_connected());
        assert_eq!(c.distance(0, 65), Some(65));
        let s = VertexSet::from_vertices(130, [0, 64, 129]);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(c.closed_neighborhood(&s).len(), 7);
    }

    #[test]
    fn cut_vertices() {
        let p = path(3);
        assert!(p.is_cut_vertex(1));
        assert!(!p.is_cut_vertex(0));
        assert!(!cycle(5).is_cut_vertex(2));
    }
}
