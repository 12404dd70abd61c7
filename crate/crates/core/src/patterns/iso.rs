//! Isomorphism of small graphs: invariant screening, joint colour
//! refinement, then backtracking over colour-compatible assignments.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::graph::{Graph, VertexSet};

/// Number of triangles through each vertex.
pub fn triangle_counts(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .map(|v| {
            let nv = g.neighbors(v);
            nv.iter()
                .map(|u| nv.intersection_len(g.neighbors(u)))
                .sum::<usize>()
                / 2
        })
        .collect()
}

/// Cheap invariants that any isomorphism must preserve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub size: usize,
    /// Sorted `(degree, triangles)` pairs.
    pub profile: Vec<(usize, usize)>,
}

impl Fingerprint {
    pub fn of(g: &Graph) -> Self {
        let tri = triangle_counts(g);
        let mut profile: Vec<_> = (0..g.order()).map(|v| (g.degree(v), tri[v])).collect();
        profile.sort_unstable();
        Fingerprint {
            order: g.order(),
            size: g.size(),
            profile,
        }
    }
}

/// Refine colourings of two graphs together so colour ids are comparable.
/// Returns `None` as soon as the colour histograms differ.
fn joint_refinement(g: &Graph, h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let tg = triangle_counts(g);
    let th = triangle_counts(h);
    let mut cg: Vec<usize> = Vec::new();
    let mut ch: Vec<usize> = Vec::new();
    {
        let mut ids = BTreeMap::new();
        for key in (0..g.order())
            .map(|v| (g.degree(v), tg[v]))
            .chain((0..h.order()).map(|v| (h.degree(v), th[v])))
        {
            let next = ids.len();
            ids.entry(key).or_insert(next);
        }
        // Renumber in key order so that ids are independent of vertex order.
        for (i, id) in ids.values_mut().enumerate() {
            *id = i;
        }
        cg.extend((0..g.order()).map(|v| ids[&(g.degree(v), tg[v])]));
        ch.extend((0..h.order()).map(|v| ids[&(h.degree(v), th[v])]));
    }
    let mut classes = 0;
    loop {
        if histogram(&cg) != histogram(&ch) {
            return None;
        }
        let sig = |gr: &Graph, c: &[usize], v: usize| {
            let mut ns: Vec<usize> = gr.neighbors(v).iter().map(|u| c[u]).collect();
            ns.sort_unstable();
            (c[v], ns)
        };
        let sg: Vec<_> = (0..g.order()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.order()).map(|v| sig(h, &ch, v)).collect();
        let mut ids: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            ids.insert(s, 0);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i;
        }
        let ng: Vec<usize> = sg.iter().map(|s| ids[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| ids[s]).collect();
        let count = ids.len();
        cg = ng;
        ch = nh;
        if count == classes {
            break;
        }
        classes = count;
    }
    if histogram(&cg) != histogram(&ch) {
        return None;
    }
    Some((cg, ch))
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &x in c {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

/// Enumerates isomorphisms `g -> h`, optionally with some images pinned.
pub struct IsoSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    pins: Vec<(usize, usize)>,
}

impl<'a> IsoSearch<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph) -> Self {
        IsoSearch {
            g,
            h,
            pins: Vec::new(),
        }
    }

    /// Require that `g`-vertex `a` maps to `h`-vertex `b`.
    pub fn pin(mut self, a: usize, b: usize) -> Self {
        self.pins.push((a, b));
        self
    }

    /// Visit isomorphisms (as `map[g_vertex] = h_vertex`) until `visit` breaks.
    pub fn for_each<B>(&self, mut visit: impl FnMut(&[usize]) -> ControlFlow<B>) -> Option<B> {
        let (g, h) = (self.g, self.h);
        if g.order() != h.order()
            || g.size() != h.size()
            || g.degree_sequence() != h.degree_sequence()
        {
            return None;
        }
        let (cg, ch) = joint_refinement(g, h)?;
        let n = g.order();
        for &(a, b) in &self.pins {
            if a >= n || b >= n || cg[a] != ch[b] {
                return None;
            }
        }
        let order = self.vertex_order(&cg);
        let mut map = vec![usize::MAX; n];
        let mut used = VertexSet::new(n);
        let mut state = Search {
            g,
            h,
            cg: &cg,
            ch: &ch,
            pins: &self.pins,
            order: &order,
        };
        match state.run(0, &mut map, &mut used, &mut visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    pub fn first(&self) -> Option<Vec<usize>> {
        self.for_each(|m| ControlFlow::Break(m.to_vec()))
    }

    pub fn all(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each::<()>(|m| {
            out.push(m.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    /// Pinned vertices first, then grow by adjacency, preferring rare colours.
    fn vertex_order(&self, cg: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let hist = histogram(cg);
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut placed = VertexSet::new(n);
        for &(a, _) in &self.pins {
            if !placed.contains(a) {
                placed.insert(a);
                order.push(a);
            }
        }
        while order.len() < n {
            // Prefer an unplaced vertex adjacent to the placed ones.
            let frontier: Vec<usize> = (0..n)
                .filter(|&v| !placed.contains(v) && self.g.neighbors(v).intersects(&placed))
                .collect();
            let pool: Vec<usize> = if frontier.is_empty() {
                (0..n).filter(|&v| !placed.contains(v)).collect()
            } else {
                frontier
            };
            let v = *pool
                .iter()
                .min_by_key(|&&v| {
                    (
                        hist[&cg[v]],
                        std::cmp::Reverse(self.g.neighbors(v).intersection_len(&placed)),
                        v,
                    )
                })
                .unwrap();
            placed.insert(v);
            order.push(v);
        }
        order
    }
}

struct Search<'s> {
    g: &'s Graph,
    h: &'s Graph,
    cg: &'s [usize],
    ch: &'s [usize],
    pins: &'s [(usize, usize)],
    order: &'s [usize],
}

impl Search<'_> {
    fn run<B>(
        &mut self,
        depth: usize,
        map: &mut [usize],
        used: &mut VertexSet,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if depth == self.order.len() {
            return visit(map);
        }
        let a = self.order[depth];
        let pinned = self.pins.iter().find(|&&(p, _)| p == a).map(|&(_, b)| b);
        let candidates: Vec<usize> = match pinned {
            Some(b) => vec![b],
            None => {
                // Any mapped neighbour of `a` restricts the image to a neighbourhood.
                match self.order[..depth].iter().find(|&&q| self.g.has_edge(a, q)) {
                    Some(&q) => self.h.neighbors(map[q]).iter().collect(),
                    None => (0..self.h.order()).collect(),
                }
            }
        };
        for b in candidates {
            if used.contains(b) || self.cg[a] != self.ch[b] {
                continue;
            }
            let ok = self.order[..depth]
                .iter()
                .all(|&q| self.g.has_edge(a, q) == self.h.has_edge(b, map[q]));
            if !ok {
                continue;
            }
            map[a] = b;
            used.insert(b);
            self.run(depth + 1, map, used, visit)?;
            used.remove(b);
            map[a] = usize::MAX;
        }
        ControlFlow::Continue(())
    }
}

/// An isomorphism `g -> h` if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    IsoSearch::new(g, h).first()
}

/// Number of automorphisms. Exponential in the worst case; fine for the
/// graph sizes used here.
pub fn automorphism_count(g: &Graph) -> usize {
    let mut count = 0;
    IsoSearch::new(g, g).for_each::<()>(|_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}
