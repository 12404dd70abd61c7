//! Locating a copy of a family member inside the alive part of a graph.

use crate::graph::{Graph, VertexSet};

use super::IsolationFamily;

/// Find one copy of a member of `fam` inside `g[alive]`.
///
/// The returned vector lists host vertices in the pattern's vertex order:
/// for P3 that is `[end, center, end]`, for cycles the cyclic order.
pub fn find_copy(g: &Graph, alive: &VertexSet, fam: &IsolationFamily) -> Option<Vec<usize>> {
    match fam {
        IsolationFamily::K1 => alive.first().map(|v| vec![v]),
        IsolationFamily::K2 => find_edge(g, alive),
        IsolationFamily::P3 => find_p3(g, alive),
        IsolationFamily::K3 => find_triangle(g, alive),
        IsolationFamily::Cycle(k) => find_cycle_of_length(g, alive, *k),
        IsolationFamily::AnyCycle => find_any_cycle(g, alive),
        IsolationFamily::FiniteList(patterns) => patterns
            .iter()
            .find_map(|h| find_embedding(h, g, alive, false)),
    }
}

fn find_edge(g: &Graph, alive: &VertexSet) -> Option<Vec<usize>> {
    alive.iter().find_map(|u| {
        g.neighbors(u)
            .iter()
            .find(|&v| alive.contains(v))
            .map(|v| vec![u, v])
    })
}

/// P3 centered on a vertex of maximum residual degree, smallest label on ties,
/// using its two smallest residual neighbours.
fn find_p3(g: &Graph, alive: &VertexSet) -> Option<Vec<usize>> {
    let mut best: Option<(usize, usize)> = None;
    for v in alive.iter() {
        let d = g.neighbors(v).intersection_len(alive);
        if d >= 2 && best.is_none_or(|(bd, _)| d > bd) {
            best = Some((d, v));
        }
    }
    let (_, c) = best?;
    let mut ns = g.neighbors(c).iter().filter(|&u| alive.contains(u));
    let a = ns.next()?;
    let b = ns.next()?;
    Some(vec![a, c, b])
}

fn find_triangle(g: &Graph, alive: &VertexSet) -> Option<Vec<usize>> {
    for u in alive.iter() {
        let nu = g.neighbors(u).intersection(alive);
        for v in nu.iter().filter(|&v| v > u) {
            let common = nu.intersection(g.neighbors(v));
            if let Some(w) = common.iter().find(|&w| w > v) {
                return Some(vec![u, v, w]);
            }
        }
    }
    None
}

/// A (not necessarily induced) cycle of length exactly `k`, anchored at its
/// smallest vertex.
fn find_cycle_of_length(g: &Graph, alive: &VertexSet, k: usize) -> Option<Vec<usize>> {
    fn extend(
        g: &Graph,
        alive: &VertexSet,
        k: usize,
        path: &mut Vec<usize>,
        used: &mut VertexSet,
    ) -> bool {
        let s = path[0];
        let last = *path.last().unwrap();
        if path.len() == k {
            return g.has_edge(last, s) && path[1] < last;
        }
        for u in g.neighbors(last).iter() {
            if u > s && alive.contains(u) && !used.contains(u) {
                path.push(u);
                used.insert(u);
                if extend(g, alive, k, path, used) {
                    return true;
                }
                used.remove(u);
                path.pop();
            }
        }
        false
    }
    if k < 3 {
        return None;
    }
    for s in alive.iter() {
        let mut path = vec![s];
        let mut used = VertexSet::singleton(g.order(), s);
        if extend(g, alive, k, &mut path, &mut used) {
            return Some(path);
        }
    }
    None
}

fn find_any_cycle(g: &Graph, alive: &VertexSet) -> Option<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    for root in alive.iter() {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x).iter().filter(|&y| alive.contains(y)) {
                if y == parent[x] {
                    continue;
                }
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    stack.push(y);
                } else {
                    // Non-tree edge: walk both ends up to the common ancestor.
                    let (mut a, mut b) = (x, y);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            left.push(a);
                        } else {
                            b = parent[b];
                            right.push(b);
                        }
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    if left.len() >= 3 {
                        return Some(left);
                    }
                }
            }
        }
    }
    None
}

/// Embed `pattern` into `host[alive]` by backtracking.
///
/// With `induced` the embedding must also preserve non-adjacency.
pub fn find_embedding(
    pattern: &Graph,
    host: &Graph,
    alive: &VertexSet,
    induced: bool,
) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > alive.len() || pattern.size() > host.size() {
        return None;
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; k];
    let mut used = VertexSet::new(host.order());
    if embed(
        pattern, host, alive, induced, &order, 0, &mut map, &mut used,
    ) {
        Some(map)
    } else {
        None
    }
}

/// Pattern vertices ordered so that each one after the first of its
/// component has an earlier neighbour.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.order();
    let mut order = Vec::with_capacity(k);
    let mut placed = VertexSet::new(k);
    while order.len() < k {
        let start = (0..k)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed.insert(start);
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            for u in pattern.neighbors(order[i]).iter() {
                if !placed.contains(u) {
                    placed.insert(u);
                    order.push(u);
                }
            }
            i += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn embed(
    pattern: &Graph,
    host: &Graph,
    alive: &VertexSet,
    induced: bool,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let anchor = order[..depth]
        .iter()
        .copied()
        .find(|&q| pattern.has_edge(p, q));
    let candidates = match anchor {
        Some(q) => host.neighbors(map[q]).intersection(alive),
        None => alive.clone(),
    };
    for h in candidates.iter() {
        if used.contains(h) || host.neighbors(h).intersection_len(alive) < pattern.degree(p) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&q| {
            let pe = pattern.has_edge(p, q);
            let he = host.has_edge(h, map[q]);
            if induced {
                pe == he
            } else {
                !pe || he
            }
        });
        if !consistent {
            continue;
        }
        map[p] = h;
        used.insert(h);
        if embed(pattern, host, alive, induced, order, depth + 1, map, used) {
            return true;
        }
        used.remove(h);
        map[p] = usize::MAX;
    }
    false
}
