//! Canonical forms of graphs with at most 16 vertices.
//!
//! Equitable refinement followed by individualization of every vertex of
//! the first smallest non-singleton cell, down to discrete partitions. The
//! canonical code is the largest upper-triangle bit string (graph6 column
//! order) over all leaves. No automorphism pruning; a leaf prefix that is
//! already smaller than the best one cuts the branch.

use crate::graph::Graph;

pub const MAX_ORDER: usize = 16;

/// Bitmask graph used during enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SmallGraph {
    n: usize,
    adj: [u16; MAX_ORDER],
}

impl SmallGraph {
    pub fn single() -> Self {
        SmallGraph {
            n: 1,
            adj: [0; MAX_ORDER],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        assert!(
            g.order() <= MAX_ORDER,
            "canonical forms are limited to {MAX_ORDER} vertices"
        );
        let mut s = SmallGraph {
            n: g.order(),
            adj: [0; MAX_ORDER],
        };
        for (u, v) in g.edges() {
            s.adj[u] |= 1 << v;
            s.adj[v] |= 1 << u;
        }
        s
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| {
                (u + 1..self.n)
                    .filter(move |&v| self.adj[u] >> v & 1 == 1)
                    .map(move |v| (u, v))
            })
            .collect();
        Graph::from_edges(self.n, &edges).expect("bitmask graphs are simple")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Add a vertex adjacent to the vertices in `mask`.
    pub fn with_vertex(&self, mask: u16) -> SmallGraph {
        assert!(self.n < MAX_ORDER);
        let mut s = *self;
        let v = self.n;
        s.n += 1;
        s.adj[v] = mask;
        for u in 0..self.n {
            if mask >> u & 1 == 1 {
                s.adj[u] |= 1 << v;
            }
        }
        s
    }

    fn all(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    fn reach(&self, start: usize, within: u16) -> u16 {
        let mut seen = 1u16 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.all()) == self.all()
    }

    /// Deleting `v` leaves the remaining vertices connected.
    pub fn is_non_cut(&self, v: usize) -> bool {
        let rest = self.all() & !(1 << v);
        rest == 0 || self.reach(rest.trailing_zeros() as usize, rest) == rest
    }
}

type Cells = Vec<Vec<u8>>;

fn refine(g: &SmallGraph, cells: &mut Cells) {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut next: Cells = Vec::with_capacity(g.n);
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let key = |v: u8| -> u64 {
                masks.iter().fold(0u64, |k, &m| {
                    k << 4 | (g.adj[v as usize] & m).count_ones() as u64
                })
            };
            let mut keyed: Vec<(u64, u8)> = cell.iter().map(|&v| (key(v), v)).collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        let split = next.len() != cells.len();
        *cells = next;
        if !split {
            return;
        }
    }
}

fn leaf_code(g: &SmallGraph, perm: &[u8], upto: usize) -> u128 {
    let mut code = 0u128;
    for j in 1..upto {
        for i in 0..j {
            code = code << 1 | g.has_edge(perm[i] as usize, perm[j] as usize) as u128;
        }
    }
    code
}

struct CanonSearch<'a> {
    g: &'a SmallGraph,
    best: Option<u128>,
    best_perm: Vec<u8>,
}

impl CanonSearch<'_> {
    fn run(&mut self, mut cells: Cells) {
        refine(self.g, &mut cells);
        let n = self.g.n;
        let fixed = cells.iter().take_while(|c| c.len() == 1).count();
        if let Some(best) = self.best {
            let prefix: Vec<u8> = cells[..fixed].iter().map(|c| c[0]).collect();
            let bits = fixed * fixed.saturating_sub(1) / 2;
            let total = n * n.saturating_sub(1) / 2;
            let mine = leaf_code(self.g, &prefix, fixed);
            let theirs = if bits == 0 { 0 } else { best >> (total - bits) };
            if mine < theirs {
                return;
            }
        }
        if fixed == cells.len() {
            let perm: Vec<u8> = cells.iter().map(|c| c[0]).collect();
            let code = leaf_code(self.g, &perm, n);
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
                self.best_perm = perm;
            }
            return;
        }
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|&(i, c)| (c.len(), i))
            .expect("non-discrete partition");
        for &v in &cells[target].clone() {
            let mut child = cells.clone();
            let rest: Vec<u8> = child[target].iter().copied().filter(|&u| u != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            self.run(child);
        }
    }
}

/// Canonical code and the labeling achieving it (`perm[position] = vertex`).
pub fn canonical_form(g: &SmallGraph) -> (u128, Vec<u8>) {
    let mut s = CanonSearch {
        g,
        best: None,
        best_perm: Vec::new(),
    };
    if g.n == 0 {
        return (0, Vec::new());
    }
    s.run(vec![(0..g.n as u8).collect()]);
    (s.best.expect("at least one leaf"), s.best_perm)
}

/// Equitable partition of the whole vertex set, in canonical cell order.
pub fn equitable_cells(g: &SmallGraph) -> Vec<Vec<u8>> {
    let mut cells = vec![(0..g.n as u8).collect()];
    if g.n > 0 {
        refine(g, &mut cells);
    }
    cells
}

/// Canonical code with `v` individualized inside its equitable cell. Two
/// vertices of the same cell get equal codes exactly when an automorphism
/// maps one to the other.
pub fn individualized_code(g: &SmallGraph, cells: &[Vec<u8>], v: u8) -> u128 {
    let target = cells
        .iter()
        .position(|c| c.contains(&v))
        .expect("v is a vertex");
    let mut start: Cells = cells.to_vec();
    if start[target].len() > 1 {
        let rest: Vec<u8> = start[target].iter().copied().filter(|&u| u != v).collect();
        start[target] = vec![v];
        start.insert(target + 1, rest);
    }
    let mut s = CanonSearch {
        g,
        best: None,
        best_perm: Vec::new(),
    };
    s.run(start);
    s.best.expect("at least one leaf")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    #[test]
    fn relabelings_share_a_code() {
        let c7 = SmallGraph::from_graph(&cycle(7).unwrap());
        let shuffled = SmallGraph::from_graph(&cycle(7).unwrap().permute(&[4, 0, 6, 2, 1, 5, 3]));
        assert_eq!(canonical_form(&c7).0, canonical_form(&shuffled).0);
        let p7 = SmallGraph::from_graph(&path(7).unwrap());
        assert_ne!(canonical_form(&c7).0, canonical_form(&p7).0);
    }

    #[test]
    fn orbits_by_individualization() {
        let p4 = SmallGraph::from_graph(&path(4).unwrap());
        let cells = equitable_cells(&p4);
        let code = |v| individualized_code(&p4, &cells, v);
        assert_eq!(code(0), code(3));
        assert_eq!(code(1), code(2));
    }

    #[test]
    fn cut_vertices() {
        let p3 = SmallGraph::from_graph(&path(3).unwrap());
        assert!(p3.is_non_cut(0) && !p3.is_non_cut(1));
        assert!(p3.is_connected());
        assert_eq!(p3.with_vertex(0).degree(3), 0);
    }
}
