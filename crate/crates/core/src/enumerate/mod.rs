//! Isomorph-free generation of small graphs of bounded degree, and ingestion
//! of graph6 streams.
//!
//! Graphs grow one vertex at a time. A child is kept only when its newest
//! vertex lies in the orbit chosen for deletion (a minimum-degree vertex,
//! non-cut when only connected graphs are wanted, picked by a canonical
//! rule), and isomorphic children of one parent are merged. Each class then
//! appears exactly once.

pub mod canon;

use std::collections::{BTreeMap, HashSet};
use std::io::BufRead;
use std::sync::Mutex;

use serde::Serialize;

use crate::graph::Graph;
use crate::io::Graph6Stream;
use crate::par::{self, Execution};
use crate::patterns::find_induced_cycle;
use canon::{canonical_form, equitable_cells, individualized_code, SmallGraph, MAX_ORDER};

/// Hereditary filters: a graph failing one has no descendants that pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumFilter {
    NoInducedCycle(usize),
}

impl EnumFilter {
    fn accepts(self, g: &SmallGraph) -> bool {
        match self {
            EnumFilter::NoInducedCycle(k) => {
                g.order() < k || find_induced_cycle(&g.to_graph(), k).is_none()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumSpec {
    pub max_n: usize,
    pub max_degree: usize,
    pub connected_only: bool,
    pub filters: Vec<EnumFilter>,
    /// Order at which the generation tree is cut into parallel work units.
    pub split_order: usize,
}

impl EnumSpec {
    /// Connected graphs of maximum degree at most 3.
    pub fn connected_subcubic(max_n: usize) -> Self {
        EnumSpec {
            max_n,
            max_degree: 3,
            connected_only: true,
            filters: Vec::new(),
            split_order: 5,
        }
    }

    /// Every graph up to `max_n` vertices, connected or not.
    pub fn all_graphs(max_n: usize) -> Self {
        EnumSpec {
            max_n,
            max_degree: max_n,
            connected_only: false,
            filters: Vec::new(),
            split_order: 5,
        }
    }

    pub fn with_filter(mut self, f: EnumFilter) -> Self {
        self.filters.push(f);
        self
    }
}

/// Number of graphs emitted per order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EnumSummary {
    pub per_order: BTreeMap<usize, u64>,
}

impl EnumSummary {
    pub fn merge(mut self, other: EnumSummary) -> EnumSummary {
        for (k, v) in other.per_order {
            *self.per_order.entry(k).or_insert(0) += v;
        }
        self
    }

    pub fn count(&self, order: usize) -> u64 {
        self.per_order.get(&order).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.per_order.values().sum()
    }
}

struct Generator<'a> {
    spec: &'a EnumSpec,
}

impl Generator<'_> {
    fn keep(&self, g: &SmallGraph) -> bool {
        self.spec.filters.iter().all(|f| f.accepts(g))
    }

    /// Children of `g` that pass the canonical-deletion test, one per class.
    fn children(&self, g: &SmallGraph) -> Vec<SmallGraph> {
        let n = g.order();
        let open: u16 = (0..n)
            .filter(|&v| g.degree(v) < self.spec.max_degree)
            .fold(0, |m, v| m | 1 << v);
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        // Every submask of `open`, including the empty one.
        let mut mask = open;
        loop {
            let k = mask.count_ones() as usize;
            let size_ok = k <= self.spec.max_degree && (k > 0 || !self.spec.connected_only);
            if size_ok {
                let child = g.with_vertex(mask);
                if self.is_canonical_child(&child)
                    && self.keep(&child)
                    && seen.insert(canonical_form(&child).0)
                {
                    out.push(child);
                }
            }
            if mask == 0 {
                break;
            }
            mask = (mask - 1) & open;
        }
        out
    }

    /// Whether the last vertex is in the orbit the canonical rule deletes.
    fn is_canonical_child(&self, c: &SmallGraph) -> bool {
        let n = c.order();
        let last = n - 1;
        let eligible = |v: usize| !self.spec.connected_only || c.is_non_cut(v);
        if !eligible(last) {
            return false;
        }
        let min_deg = (0..n)
            .filter(|&v| eligible(v))
            .map(|v| c.degree(v))
            .min()
            .expect("last is eligible");
        if c.degree(last) != min_deg {
            return false;
        }
        let cells = equitable_cells(c);
        let is_candidate = |v: u8| eligible(v as usize) && c.degree(v as usize) == min_deg;
        let cell = cells
            .iter()
            .rev()
            .find(|cell| cell.iter().any(|&v| is_candidate(v)))
            .expect("some candidate exists");
        if !cell.contains(&(last as u8)) {
            return false;
        }
        let peers: Vec<u8> = cell
            .iter()
            .copied()
            .filter(|&v| v as usize != last && is_candidate(v))
            .collect();
        if peers.is_empty() {
            return true;
        }
        let mine = individualized_code(c, &cells, last as u8);
        peers
            .iter()
            .all(|&u| individualized_code(c, &cells, u) <= mine)
    }

    fn descend(&self, g: &SmallGraph, visit: &mut dyn FnMut(&SmallGraph)) {
        visit(g);
        if g.order() >= self.spec.max_n {
            return;
        }
        for child in self.children(g) {
            self.descend(&child, visit);
        }
    }

    /// Graphs of order `split` (or fewer when the tree is shallower),
    /// visiting everything above them.
    fn frontier(
        &self,
        g: &SmallGraph,
        split: usize,
        visit: &mut dyn FnMut(&SmallGraph),
        out: &mut Vec<SmallGraph>,
    ) {
        if g.order() >= split || g.order() >= self.spec.max_n {
            out.push(*g);
            return;
        }
        visit(g);
        for child in self.children(g) {
            self.frontier(&child, split, visit, out);
        }
    }
}

fn root(spec: &EnumSpec) -> Option<SmallGraph> {
    assert!(
        spec.max_n <= MAX_ORDER,
        "enumeration is limited to {MAX_ORDER} vertices"
    );
    let g = SmallGraph::single();
    (spec.max_n >= 1 && Generator { spec }.keep(&g)).then_some(g)
}

/// Visit every graph of the spec once per isomorphism class, possibly from
/// several threads at once.
pub fn enumerate(spec: &EnumSpec, mode: Execution, sink: &(dyn Fn(&Graph) + Sync)) -> EnumSummary {
    let Some(start) = root(spec) else {
        return EnumSummary::default();
    };
    let gen = Generator { spec };
    let mut top = EnumSummary::default();
    let mut units = Vec::new();
    gen.frontier(
        &start,
        spec.split_order.max(1),
        &mut |g| {
            *top.per_order.entry(g.order()).or_insert(0) += 1;
            sink(&g.to_graph());
        },
        &mut units,
    );
    let below = par::map_reduce(
        mode,
        &units,
        EnumSummary::default,
        |unit| {
            let mut s = EnumSummary::default();
            gen.descend(unit, &mut |g| {
                *s.per_order.entry(g.order()).or_insert(0) += 1;
                sink(&g.to_graph());
            });
            s
        },
        EnumSummary::merge,
    );
    top.merge(below)
}

/// Single-threaded enumeration delivering graphs in a fixed order.
pub fn enumerate_serial(spec: &EnumSpec, sink: &mut dyn FnMut(&Graph)) -> EnumSummary {
    let mut s = EnumSummary::default();
    if let Some(start) = root(spec) {
        Generator { spec }.descend(&start, &mut |g| {
            *s.per_order.entry(g.order()).or_insert(0) += 1;
            sink(&g.to_graph());
        });
    }
    s
}

/// The connected subcubic case: `spec.max_degree` is expected to be 3.
pub fn enumerate_connected_subcubic(
    spec: &EnumSpec,
    mode: Execution,
    sink: &(dyn Fn(&Graph) + Sync),
) -> EnumSummary {
    enumerate(spec, mode, sink)
}

/// All graphs of exactly `order` vertices, sorted by graph6 text so the
/// result does not depend on scheduling.
pub fn collect_order(spec: &EnumSpec, order: usize, mode: Execution) -> Vec<Graph> {
    let out = Mutex::new(Vec::new());
    enumerate(spec, mode, &|g| {
        if g.order() == order {
            out.lock().unwrap().push(g.clone());
        }
    });
    let mut v = out.into_inner().unwrap();
    v.sort_by_cached_key(crate::io::emit_graph6);
    v
}

/// A malformed line in an ingested stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IngestSummary {
    pub count: u64,
    pub per_order: BTreeMap<usize, u64>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Forward every well-formed graph6 line to `sink`; malformed lines are
/// reported and skipped. Padding warnings do not reject a line.
pub fn ingest_graph6_stream<R: BufRead>(
    reader: R,
    sink: &mut dyn FnMut(usize, &Graph),
) -> std::io::Result<IngestSummary> {
    let mut summary = IngestSummary::default();
    for item in Graph6Stream::new(reader) {
        let item = item?;
        match item.record {
            Ok(rec) => {
                summary.count += 1;
                *summary.per_order.entry(rec.order).or_insert(0) += 1;
                sink(item.line, &rec.graph);
            }
            Err(e) => summary.diagnostics.push(Diagnostic {
                line: item.line,
                message: e.to_string(),
            }),
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_connected_counts() {
        let s = enumerate_serial(&EnumSpec::connected_subcubic(6), &mut |_| {});
        assert_eq!(s.count(1), 1);
        assert_eq!(s.count(2), 1);
        assert_eq!(s.count(3), 2);
        assert_eq!(s.count(4), 6);
    }

    #[test]
    fn modes_agree() {
        let spec = EnumSpec::connected_subcubic(8);
        let a = enumerate(&spec, Execution::Sequential, &|_| {});
        let b = enumerate(&spec, Execution::Parallel, &|_| {});
        assert_eq!(a, b);
        assert_eq!(a, enumerate_serial(&spec, &mut |_| {}));
    }

    #[test]
    fn all_graphs_small_orders() {
        let s = enumerate_serial(&EnumSpec::all_graphs(5), &mut |_| {});
        assert_eq!(
            (s.count(1), s.count(2), s.count(3), s.count(4), s.count(5)),
            (1, 2, 4, 11, 34)
        );
    }

    #[test]
    fn ingest_reports_bad_lines() {
        let text = "Bw\nBg\n\n@@@@\n?\n";
        let mut seen = Vec::new();
        let s = ingest_graph6_stream(text.as_bytes(), &mut |line, g| seen.push((line, g.order())))
            .unwrap();
        assert_eq!(s.count, 3);
        assert_eq!(s.diagnostics.len(), 1);
        assert_eq!(s.diagnostics[0].line, 4);
        assert_eq!(seen, vec![(1, 3), (2, 3), (5, 0)]);
    }
}
