//! Random graph samplers for property tests, acceptance runs and benches.

use rand::seq::SliceRandom;
use rand::Rng;

use super::catalog::CatalogId;
use crate::graph::Graph;
use crate::patterns::find_induced_cycle;

/// G(n, p).
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random connected graph of maximum degree at most 3: a random subcubic
/// tree plus up to `extra` random edges between unsaturated vertices.
pub fn connected_subcubic<R: Rng + ?Sized>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| g.degree(u) < 3).collect();
        let u = *open.choose(rng).expect("a subcubic tree always has a leaf");
        g.add_edge(u, v).unwrap();
    }
    for _ in 0..extra {
        if let Some((u, v)) = random_open_pair(rng, &g) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Random subcubic graph (possibly disconnected) with about `m` edges.
pub fn subcubic<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut g = Graph::empty(n);
    for _ in 0..m {
        if let Some((u, v)) = random_open_pair(rng, &g) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn random_open_pair<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> Option<(usize, usize)> {
    let open: Vec<usize> = (0..g.order()).filter(|&u| g.degree(u) < 3).collect();
    for _ in 0..32 {
        let (&u, &v) = (open.choose(rng)?, open.choose(rng)?);
        if u != v && !g.has_edge(u, v) {
            return Some((u.min(v), u.max(v)));
        }
    }
    None
}

/// Add the edge only if the graph stays free of induced 6-cycles.
fn try_add_keeping_c6_free(g: &mut Graph, u: usize, v: usize) -> bool {
    let mut h = g.clone();
    h.add_edge(u, v).unwrap();
    if find_induced_cycle(&h, 6).is_some() {
        return false;
    }
    *g = h;
    true
}

/// Random connected subcubic graph with no induced 6-cycle: a random
/// subcubic tree, then random chords that keep the graph induced-C6-free.
pub fn eligible_tree_like<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    let mut g = connected_subcubic(rng, n, 0);
    let attempts = rng.gen_range(0..=n);
    for _ in 0..attempts {
        if let Some((u, v)) = random_open_pair(rng, &g) {
            try_add_keeping_c6_free(&mut g, u, v);
        }
    }
    g
}

/// Random connected induced-C6-free subcubic graph assembled from pieces
/// that include exceptional catalog graphs, small paths and cycles, glued by
/// single edges between unsaturated vertices. Such graphs steer the
/// constructive algorithm into its exceptional-component branches.
pub fn eligible_gadget<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    for _ in 0..64 {
        if let Some(g) = try_gadget(rng, n) {
            return g;
        }
    }
    eligible_tree_like(rng, n)
}

fn try_gadget<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Option<Graph> {
    let mut g = Graph::empty(0);
    while g.order() < n {
        let room = n - g.order();
        let piece = random_piece(rng, room);
        let before = g.order();
        let mut next = g.disjoint_union(&piece);
        if before > 0 {
            // Join the new piece with one or two edges so it stays connected.
            let links = if rng.gen_bool(0.5) { 2 } else { 1 };
            let mut linked = false;
            for _ in 0..links {
                for _ in 0..32 {
                    let olds: Vec<usize> = (0..before).filter(|&u| next.degree(u) < 3).collect();
                    let news: Vec<usize> = (before..next.order())
                        .filter(|&u| next.degree(u) < 3)
                        .collect();
                    let (Some(&u), Some(&v)) = (olds.choose(rng), news.choose(rng)) else {
                        break;
                    };
                    if !next.has_edge(u, v) && try_add_keeping_c6_free(&mut next, u, v) {
                        linked = true;
                        break;
                    }
                }
            }
            if !linked || !next.is_connected() {
                // Could not attach; fall back to a single vertex hung off a free slot.
                let olds: Vec<usize> = (0..before).filter(|&u| g.degree(u) < 3).collect();
                match olds.choose(rng) {
                    Some(&u) => {
                        g = g.with_vertex(&[u]);
                        if find_induced_cycle(&g, 6).is_some() {
                            unreachable!("a pendant vertex cannot create a cycle");
                        }
                    }
                    None => return None,
                }
                continue;
            }
        }
        g = next;
    }
    // Occasionally sprinkle a few chords.
    for _ in 0..rng.gen_range(0..3) {
        if let Some((u, v)) = random_open_pair(rng, &g) {
            try_add_keeping_c6_free(&mut g, u, v);
        }
    }
    Some(g)
}

fn random_piece<R: Rng + ?Sized>(rng: &mut R, room: usize) -> Graph {
    let fitting: Vec<CatalogId> = CatalogId::ALL
        .into_iter()
        .filter(|id| id.order() <= room)
        .collect();
    match rng.gen_range(0..4) {
        0 | 1 if !fitting.is_empty() => fitting.choose(rng).unwrap().graph(),
        2 if room >= 3 => {
            let k = rng.gen_range(3..=room.min(9));
            if k == 6 {
                super::path(k).unwrap()
            } else {
                super::cycle(k).unwrap()
            }
        }
        _ => super::path(rng.gen_range(1..=room.min(4))).unwrap(),
    }
}

/// Either sampler, chosen at random, with `n` vertices.
pub fn eligible<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    if rng.gen_bool(0.5) {
        eligible_tree_like(rng, n)
    } else {
        eligible_gadget(rng, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn samplers_respect_their_contracts() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in [1, 2, 5, 16, 33, 60] {
            for _ in 0..10 {
                let g = eligible(&mut rng, n);
                assert_eq!(g.order(), n);
                assert!(g.is_connected());
                assert!(g.max_degree() <= 3);
                assert!(find_induced_cycle(&g, 6).is_none());
            }
            let g = connected_subcubic(&mut rng, n, n);
            assert!(g.is_connected() && g.max_degree() <= 3);
        }
    }
}
