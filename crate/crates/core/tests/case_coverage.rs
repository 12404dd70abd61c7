//! Graphs built around a degree-3 vertex 0 whose neighbourhood removal
//! leaves one exceptional component, so the exceptional branches of the
//! construction actually run.

use std::collections::BTreeMap;

use p3iso::generators::random::eligible_tree_like;
use p3iso::patterns::find_induced_cycle;
use p3iso::{isolate_p3_subcubic, verify_certificate, CatalogId, Graph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Vertex 0 with neighbours 1, 2, 3; an exceptional graph `h` after them,
/// linked to 1 and usually 2; a random tree hanging off 3.
fn planted(rng: &mut StdRng) -> Option<Graph> {
    let id = *CatalogId::ALL.choose(rng).unwrap();
    let h = id.graph();
    let rest = rng.gen_range(1..=16);
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let mut g = star
        .disjoint_union(&h)
        .disjoint_union(&eligible_tree_like(rng, rest));
    let h_range = 4..4 + h.order();
    let t_range = 4 + h.order()..g.order();
    let mut edges = vec![(3, t_range.start)];
    for x in [1, 2] {
        if x == 2 && rng.gen_bool(0.2) {
            continue;
        }
        let links = if rng.gen_bool(0.2) { 2 } else { 1 };
        for _ in 0..links {
            edges.push((x, rng.gen_range(h_range.clone())));
        }
    }
    if rng.gen_bool(0.3) {
        edges.push((1, 2));
    }
    if rng.gen_bool(0.3) {
        edges.push((rng.gen_range(1..3), 3));
    }
    if rng.gen_bool(0.3) {
        edges.push((rng.gen_range(1..4), rng.gen_range(t_range.clone())));
    }
    if rng.gen_bool(0.3) {
        edges.push((
            rng.gen_range(h_range.clone()),
            rng.gen_range(t_range.clone()),
        ));
    }
    for (u, v) in edges {
        if u != v && !g.has_edge(u, v) {
            g = g.with_edges(&[(u, v)]).ok()?;
        }
    }
    if g.degree(0) != 3 || g.max_degree() > 3 || g.order() < 16 || !g.is_connected() {
        return None;
    }
    find_induced_cycle(&g, 6).is_none().then_some(g)
}

#[test]
fn planted_exceptional_components() {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let mut checked = 0;
    while checked < 3000 {
        let Some(g) = planted(&mut rng) else { continue };
        if p3iso::catalog_match(&g).is_some() {
            continue;
        }
        let (cert, trace) = isolate_p3_subcubic(&g).expect("eligible input");
        assert!(verify_certificate(&g, &cert));
        assert!(cert.size() <= g.order() / 4);
        assert_eq!(trace.fallback_count(), 0, "{}", p3iso::emit_graph6(&g));
        assert!(trace.deletions_justified());
        for (case, branch) in trace.cases() {
            *tally
                .entry(format!("{} {}", case.name(), branch.unwrap_or("-")))
                .or_default() += 1;
        }
        checked += 1;
    }
    for (k, v) in &tally {
        println!("{k}: {v}");
    }
    assert!(tally.keys().any(|k| k.starts_with("Case2.2")));
}
