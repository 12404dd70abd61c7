//! Structural facts about the catalog graphs, each checked exhaustively.
//!
//! Vertices are reported by their printed labels (1-based).

use serde::Serialize;

use crate::generators::CatalogId;
use crate::graph::{Graph, VertexSet};
use crate::patterns::{catalog_match, is_isomorphic, IsolationFamily};
use crate::solver::isolation_number;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObservationCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Number of instances examined.
    pub cases: usize,
    pub detail: String,
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) -> ObservationCheck {
        let passed = self.failures.is_empty() && self.cases > 0;
        let detail = if self.cases == 0 {
            "no instances".to_string()
        } else if passed {
            format!("{} instances", self.cases)
        } else {
            self.failures.join("; ")
        };
        ObservationCheck {
            name: self.name,
            passed,
            cases: self.cases,
            detail,
        }
    }
}

const G7: [CatalogId; 7] = [
    CatalogId::C7,
    CatalogId::G71,
    CatalogId::G72,
    CatalogId::G73,
    CatalogId::G74,
    CatalogId::G75,
    CatalogId::G76,
];

fn iota(g: &Graph) -> usize {
    isolation_number(g, &IsolationFamily::P3, None).value
}

fn without(g: &Graph, s: &VertexSet) -> Graph {
    g.delete_vertices(s).graph
}

fn minus_vertex(g: &Graph, v: usize) -> Graph {
    without(g, &VertexSet::singleton(g.order(), v))
}

fn minus_closed(g: &Graph, v: usize) -> Graph {
    without(g, &g.closed_neighborhood_of(v))
}

fn low_degree(g: &Graph) -> impl Iterator<Item = usize> + '_ {
    (0..g.order()).filter(|&v| g.degree(v) <= 2)
}

fn is_g3(g: &Graph) -> bool {
    matches!(catalog_match(g), Some(CatalogId::P3 | CatalogId::C3))
}

fn non_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect()
}

fn show(edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges
        .iter()
        .map(|(u, v)| format!("{{{},{}}}", u + 1, v + 1))
        .collect();
    parts.join(",")
}

/// Every catalog graph needs exactly `(n + 1) / 4` vertices.
pub fn exceptional_iota() -> ObservationCheck {
    let mut t = Tally::new("ObsE(a)");
    for id in CatalogId::ALL {
        let g = id.graph();
        let value = iota(&g);
        t.check(value == (g.order() + 1) / 4, || format!("{id}: {value}"));
    }
    t.finish()
}

/// Deleting a vertex keeps catalog graphs connected, except for the
/// centre of P3 and vertex 7 of G7,1.
pub fn exceptional_vertex_deletion() -> ObservationCheck {
    let mut t = Tally::new("ObsE(b)");
    for id in CatalogId::ALL {
        let g = id.graph();
        for v in 0..g.order() {
            let excluded = matches!((id, v + 1), (CatalogId::P3, 2) | (CatalogId::G71, 7));
            if !excluded {
                t.check(minus_vertex(&g, v).is_connected(), || {
                    format!("{id} - {}", v + 1)
                });
            }
        }
    }
    t.finish()
}

/// In the 7-vertex graphs other than C7, every vertex of degree at most 2
/// is far from some degree-3 vertex whose closed neighbourhood leaves a
/// connected remainder.
pub fn g7_connected_remainder() -> ObservationCheck {
    let mut t = Tally::new("ObsG7(a)");
    for id in &G7[1..] {
        let g = id.graph();
        for v in low_degree(&g) {
            let far = g.closed_neighborhood_of(v);
            let ok = (0..7).any(|w| {
                !far.contains(w) && g.degree(w) == 3 && minus_closed(&g, w).is_connected()
            });
            t.check(ok, || format!("{id}, vertex {}", v + 1));
        }
    }
    t.finish()
}

/// No two vertices of degree 1 or 2 are adjacent.
pub fn g7_low_degree_independent() -> ObservationCheck {
    let mut t = Tally::new("ObsG7(b)");
    for id in &G7[1..] {
        let g = id.graph();
        for (u, v) in g.edges() {
            t.check(g.degree(u) == 3 || g.degree(v) == 3, || {
                format!("{id}: {}", show(&[(u, v)]))
            });
        }
    }
    t.finish()
}

const LARGE: [CatalogId; 3] = [CatalogId::C11, CatalogId::G11, CatalogId::G15];

/// Minimum degree 2 in the 11- and 15-vertex graphs.
pub fn large_min_degree() -> ObservationCheck {
    let mut t = Tally::new("ObsG11(a)");
    for id in LARGE {
        let g = id.graph();
        t.check(g.min_degree() == 2, || {
            format!("{id}: minimum degree {}", g.min_degree())
        });
    }
    t.finish()
}

/// Removing the closed neighbourhood of a low-degree vertex leaves a
/// connected graph.
pub fn large_low_degree_remainder() -> ObservationCheck {
    let mut t = Tally::new("ObsG11(b)");
    for id in LARGE {
        let g = id.graph();
        for v in low_degree(&g) {
            t.check(minus_closed(&g, v).is_connected(), || {
                format!("{id}, vertex {}", v + 1)
            });
        }
    }
    t.finish()
}

/// Degree-2 vertices of G15 are pairwise at distance at least 4, with 4
/// attained.
pub fn g15_degree_two_spacing() -> ObservationCheck {
    let mut t = Tally::new("ObsG11(c)");
    let g = CatalogId::G15.graph();
    let twos: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == 2).collect();
    let mut min = usize::MAX;
    for (i, &u) in twos.iter().enumerate() {
        for &v in &twos[i + 1..] {
            let d = g.distance(u, v).unwrap_or(usize::MAX);
            min = min.min(d);
            t.check(d >= 4, || format!("d({},{}) = {d}", u + 1, v + 1));
        }
    }
    t.check(min == 4, || format!("minimum distance {min}"));
    t.finish()
}

/// For G7,1, G7,2, G7,3 and G7,5: every low-degree vertex `v` has a
/// degree-3 vertex `v'` outside `N[v]` whose removal leaves P3 or K3 with
/// the stated degree pattern.
pub fn g7_residual_triangle_or_path() -> ObservationCheck {
    let mut t = Tally::new("ObsG7i");
    for id in [
        CatalogId::G71,
        CatalogId::G72,
        CatalogId::G73,
        CatalogId::G75,
    ] {
        let g = id.graph();
        for v in low_degree(&g) {
            let far = g.closed_neighborhood_of(v);
            let ok = (0..7)
                .filter(|&w| !far.contains(w) && g.degree(w) == 3)
                .any(|w| {
                    let sub = g.delete_closed_neighborhood(&VertexSet::singleton(7, w));
                    let h = &sub.graph;
                    if !is_g3(h) {
                        return false;
                    }
                    let outer = |y: usize| g.degree(sub.map[y]);
                    let ys = 0..h.order();
                    let path_case = catalog_match(h) == Some(CatalogId::P3)
                        && ys.clone().any(|y| outer(y) == 2 && h.degree(y) == 1)
                        && ys.clone().any(|y| outer(y) == 3 && h.degree(y) == 2);
                    let triangle_case = catalog_match(h) == Some(CatalogId::C3)
                        && ys.filter(|&y| outer(y) == 3).count() >= 2;
                    path_case || triangle_case
                });
            t.check(ok, || format!("{id}, vertex {}", v + 1));
        }
    }
    t.finish()
}

/// Adding one edge to G7,2, G7,3 or G7,5 (keeping degrees at most 3) gives
/// G7,4 or G7,6, except that {1,4} and {1,5} in G7,5 drop the isolation
/// number to 1.
pub fn g7_single_edge_additions() -> ObservationCheck {
    let mut t = Tally::new("ObsG7_235");
    for id in [CatalogId::G72, CatalogId::G73, CatalogId::G75] {
        let g = id.graph();
        for e in non_edges(&g) {
            let h = g.with_edges(&[e]).expect("non-edge");
            if h.max_degree() > 3 {
                continue;
            }
            let special = id == CatalogId::G75 && matches!(e, (0, 3) | (0, 4));
            if special {
                let value = iota(&h);
                t.check(value <= 1, || {
                    format!("{id} + {}: isolation number {value}", show(&[e]))
                });
            } else {
                let m = catalog_match(&h);
                t.check(matches!(m, Some(CatalogId::G74 | CatalogId::G76)), || {
                    format!(
                        "{id} + {}: {}",
                        show(&[e]),
                        m.map_or("no catalog match".into(), |m| m.to_string())
                    )
                });
            }
        }
    }
    t.finish()
}

/// Adding one or two edges to G7,1 (keeping degrees at most 3) gives a
/// 7-vertex catalog graph other than C7 and G7,5, except that a single edge
/// inside {2,4,6} drops the isolation number to 1.
pub fn g71_edge_additions() -> ObservationCheck {
    let mut t = Tally::new("ObsG7_1");
    let g = CatalogId::G71.graph();
    let candidates = non_edges(&g);
    let mut sets: Vec<Vec<(usize, usize)>> = candidates.iter().map(|&e| vec![e]).collect();
    for (i, &e) in candidates.iter().enumerate() {
        for &f in &candidates[i + 1..] {
            sets.push(vec![e, f]);
        }
    }
    let inner = [1, 3, 5];
    for s in sets {
        let h = g.with_edges(&s).expect("non-edges");
        if h.max_degree() > 3 {
            continue;
        }
        let special = s.len() == 1 && inner.contains(&s[0].0) && inner.contains(&s[0].1);
        if special {
            let value = iota(&h);
            t.check(value <= 1, || {
                format!("G7_1 + {}: isolation number {value}", show(&s))
            });
        } else {
            let m = catalog_match(&h);
            let ok = matches!(m, Some(id) if G7.contains(&id) && !matches!(id, CatalogId::C7 | CatalogId::G75));
            t.check(ok, || {
                format!(
                    "G7_1 + {}: {}",
                    show(&s),
                    m.map_or("no catalog match".into(), |m| m.to_string())
                )
            });
        }
    }
    t.finish()
}

/// Deleting a low-degree vertex from a catalog graph of order `4k + 3`
/// leaves a graph isolable with `k` vertices, connected unless the graph
/// has order 3.
pub fn exceptional_minus_low_degree() -> ObservationCheck {
    let mut t = Tally::new("LemG-v");
    for id in CatalogId::ALL {
        let g = id.graph();
        let n = g.order();
        for v in low_degree(&g) {
            let h = minus_vertex(&g, v);
            let value = iota(&h);
            t.check(4 * value + 3 <= n, || {
                format!("{id} - {}: isolation number {value}", v + 1)
            });
            if n > 3 {
                t.check(h.is_connected(), || {
                    format!("{id} - {} is disconnected", v + 1)
                });
            }
        }
    }
    t.finish()
}

/// The labeling conventions the case analysis relies on.
pub fn catalog_labels() -> ObservationCheck {
    let mut t = Tally::new("labels");
    let g15 = CatalogId::G15.graph();
    let twos: Vec<usize> = (0..15)
        .filter(|&v| g15.degree(v) == 2)
        .map(|v| v + 1)
        .collect();
    t.check(twos == [1, 5, 9], || {
        format!("G15 degree-2 vertices {twos:?}")
    });
    let g71 = CatalogId::G71.graph();
    t.check(!minus_vertex(&g71, 6).is_connected(), || {
        "G7_1 - 7 is connected".into()
    });
    let p3 = CatalogId::P3.graph();
    t.check(!minus_vertex(&p3, 1).is_connected(), || {
        "P3 - 2 is connected".into()
    });
    for id in CatalogId::ALL {
        let g = id.graph();
        let shuffled = g.permute(&(0..g.order()).rev().collect::<Vec<_>>());
        t.check(is_isomorphic(&g, &shuffled).is_some(), || {
            format!("{id} not recognised after relabeling")
        });
    }
    t.finish()
}

/// Every check, in a fixed order.
pub fn check_all() -> Vec<ObservationCheck> {
    vec![
        exceptional_iota(),
        exceptional_vertex_deletion(),
        g7_connected_remainder(),
        g7_low_degree_independent(),
        large_min_degree(),
        large_low_degree_remainder(),
        g15_degree_two_spacing(),
        g7_residual_triangle_or_path(),
        g7_single_edge_additions(),
        g71_edge_additions(),
        exceptional_minus_low_degree(),
        catalog_labels(),
    ]
}
