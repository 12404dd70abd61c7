mod common;

use p3iso::enumerate::canon::{canonical_form, SmallGraph};
use p3iso::enumerate::{enumerate_serial, EnumSpec};
use p3iso::generators::cycle;
use p3iso::patterns::find_induced_cycle;
use p3iso::{emit_graph6, isolation_number, Graph, IsolationFamily};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn collect(spec: &EnumSpec) -> Vec<Graph> {
    let mut out = Vec::new();
    enumerate_serial(spec, &mut |g| out.push(g.clone()));
    out
}

#[test]
fn enumeration_counts_match_brute_force() {
    let all = enumerate_serial(&EnumSpec::all_graphs(6), &mut |_| {});
    let cubic = enumerate_serial(&EnumSpec::connected_subcubic(6), &mut |_| {});
    for n in 1..=6 {
        assert_eq!(
            all.count(n),
            common::naive_class_count(n, n, false),
            "all graphs, n = {n}"
        );
        assert_eq!(
            cubic.count(n),
            common::naive_class_count(n, 3, true),
            "connected subcubic, n = {n}"
        );
    }
}

#[test]
fn enumerated_graphs_are_pairwise_non_isomorphic() {
    let graphs = collect(&EnumSpec::connected_subcubic(9));
    let mut codes: Vec<(usize, u128)> = graphs
        .iter()
        .map(|g| (g.order(), canonical_form(&SmallGraph::from_graph(g)).0))
        .collect();
    let before = codes.len();
    codes.sort_unstable();
    codes.dedup();
    assert_eq!(codes.len(), before);
    for g in &graphs {
        assert!(g.is_connected() && g.max_degree() <= 3);
    }
}

#[test]
fn canonical_code_ignores_labels() {
    let mut rng = StdRng::seed_from_u64(1);
    for g in collect(&EnumSpec::all_graphs(7)).iter().step_by(7) {
        let code = canonical_form(&SmallGraph::from_graph(g)).0;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        let h = g.permute(&perm);
        assert_eq!(canonical_form(&SmallGraph::from_graph(&h)).0, code);
    }
}

#[test]
fn solver_matches_brute_force() {
    let p3 = IsolationFamily::P3;
    let mut graphs = collect(&EnumSpec::all_graphs(7));
    graphs.extend(
        collect(&EnumSpec::connected_subcubic(10))
            .into_iter()
            .filter(|g| g.order() >= 8),
    );
    for g in &graphs {
        let cert = isolation_number(g, &p3, None);
        assert_eq!(cert.value, common::brute_iota(g), "{}", emit_graph6(g));
    }
}

#[test]
fn solver_returns_the_lexicographically_smallest_minimum_set() {
    let p3 = IsolationFamily::P3;
    for g in collect(&EnumSpec::all_graphs(6)) {
        let adj = common::masks(&g);
        let k = common::brute_iota(&g);
        // Smallest in lexicographic order of sorted vertex lists.
        let mut best: Option<Vec<usize>> = None;
        for d in common::subsets_of_size(g.order(), k).filter(|&d| common::isolates_p3(&adj, d)) {
            let v: Vec<usize> = (0..g.order()).filter(|&i| d >> i & 1 == 1).collect();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
        assert_eq!(
            isolation_number(&g, &p3, None).set.to_vec(),
            best.unwrap(),
            "{}",
            emit_graph6(&g)
        );
    }
}

#[test]
fn induced_cycles_match_subset_scan() {
    for g in collect(&EnumSpec::all_graphs(7)) {
        for k in 3..=g.order().min(7) {
            assert_eq!(
                find_induced_cycle(&g, k).is_some(),
                common::has_induced_cycle_oracle(&g, k),
                "{} k = {k}",
                emit_graph6(&g)
            );
        }
    }
}

#[test]
fn graph6_matches_reference_encoder() {
    for g in collect(&EnumSpec::all_graphs(6)) {
        assert_eq!(emit_graph6(&g), common::graph6_oracle(&g));
    }
    let wide = cycle(70).unwrap();
    assert_eq!(emit_graph6(&wide), common::graph6_oracle(&wide));
}

#[test]
fn cycles_need_a_fifth_of_their_vertices() {
    let p3 = IsolationFamily::P3;
    for n in 3..=40 {
        let c = cycle(n).unwrap();
        let value = isolation_number(&c, &p3, None).value;
        assert_eq!(value, n.div_ceil(5), "C{n}");
        if n <= 20 {
            assert_eq!(common::brute_iota(&c), value, "C{n}");
        }
    }
}
