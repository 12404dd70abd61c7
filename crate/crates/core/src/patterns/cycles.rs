//! Induced cycle detection by extension of induced paths.

use crate::graph::{Graph, VertexSet};

/// Find an induced cycle of length `k`, returned in cyclic order.
///
/// Paths are anchored at the cycle's smallest vertex `s` and only use
/// vertices larger than `s`; a closed path is accepted only when its second
/// vertex is smaller than its last, so each cycle is found in one direction.
pub fn find_induced_cycle(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k < 3 || g.order() < k {
        return None;
    }
    let mut path = Vec::with_capacity(k);
    for s in 0..g.order() {
        if g.degree(s) < 2 {
            continue;
        }
        path.clear();
        path.push(s);
        if extend(g, k, &mut path, &VertexSet::new(g.order())) {
            return Some(path);
        }
    }
    None
}

/// `blocked` is the union of the neighbourhoods of the interior vertices
/// `path[1..len-1]`; the next vertex may touch none of them.
fn extend(g: &Graph, k: usize, path: &mut Vec<usize>, blocked: &VertexSet) -> bool {
    let s = path[0];
    let last = *path.last().unwrap();
    let pos = path.len();
    for u in g.neighbors(last).iter() {
        if u <= s || blocked.contains(u) || path.contains(&u) {
            continue;
        }
        let touches_anchor = pos > 1 && g.has_edge(u, s);
        if pos == k - 1 {
            if touches_anchor && path[1] < u {
                path.push(u);
                return true;
            }
            continue;
        }
        if touches_anchor {
            continue;
        }
        let next_blocked = if pos >= 2 {
            blocked.union(g.neighbors(last))
        } else {
            blocked.clone()
        };
        path.push(u);
        if extend(g, k, path, &next_blocked) {
            return true;
        }
        path.pop();
    }
    false
}

/// Brute-force check over all `k`-subsets. Exponential; intended for tests.
pub fn induced_cycle_by_subsets(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, k: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            let set = VertexSet::from_vertices(g.order(), chosen.iter().copied());
            let sub = g.induced_subgraph(&set).graph;
            return sub.size() == k && (0..k).all(|v| sub.degree(v) == 2) && sub.is_connected();
        }
        for v in start..g.order() {
            chosen.push(v);
            if rec(g, k, v + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    k >= 3 && rec(g, k, 0, &mut Vec::new())
}
