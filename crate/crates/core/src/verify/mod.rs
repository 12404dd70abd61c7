//! Checking the `n / 4` bound over whole corpora of graphs.
//!
//! Every eligible graph (connected, maximum degree at most 3, no induced
//! 6-cycle) is run through the solver with budget `n / 4`. Graphs that need
//! more are exceptions when they match a catalog entry and violations
//! otherwise.

pub mod observations;

use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::enumerate::{enumerate, Diagnostic, EnumSpec};
use crate::generators::CatalogId;
use crate::graph::Graph;
use crate::io::{emit_graph6, Graph6Stream};
use crate::par::{self, Execution};
use crate::patterns::{catalog_match, find_induced_cycle, IsolationFamily};
use crate::solver::{is_isolating, solve, SolveOptions};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Exception {
    pub catalog: CatalogId,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct OrderReport {
    pub order: usize,
    pub examined: u64,
    pub eligible: u64,
    pub ineligible: u64,
    pub exceptions: Vec<Exception>,
    pub violations: Vec<Violation>,
    /// Solver time summed over graphs, across all threads.
    pub work_ms: f64,
}

impl OrderReport {
    fn merge(&mut self, other: OrderReport) {
        self.examined += other.examined;
        self.eligible += other.eligible;
        self.ineligible += other.ineligible;
        self.exceptions.extend(other.exceptions);
        self.violations.extend(other.violations);
        self.exceptions.sort();
        self.violations.sort();
        self.work_ms += other.work_ms;
    }

    pub fn exception_ids(&self) -> BTreeSet<CatalogId> {
        self.exceptions.iter().map(|e| e.catalog).collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub orders: BTreeMap<usize, OrderReport>,
    pub diagnostics: Vec<Diagnostic>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    /// Associative and commutative; `elapsed_ms` takes the larger value.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        for (n, r) in other.orders {
            self.orders
                .entry(n)
                .or_insert_with(|| OrderReport {
                    order: n,
                    ..OrderReport::default()
                })
                .merge(r);
        }
        self.diagnostics.extend(other.diagnostics);
        self.diagnostics
            .sort_by(|a, b| a.line.cmp(&b.line).then_with(|| a.message.cmp(&b.message)));
        self.elapsed_ms = self.elapsed_ms.max(other.elapsed_ms);
        self
    }

    pub fn passes(&self) -> bool {
        self.orders.values().all(|r| r.violations.is_empty())
    }

    pub fn order(&self, n: usize) -> Option<&OrderReport> {
        self.orders.get(&n)
    }

    pub fn exception_ids(&self, n: usize) -> BTreeSet<CatalogId> {
        self.order(n)
            .map(OrderReport::exception_ids)
            .unwrap_or_default()
    }

    fn single(n: usize, r: OrderReport) -> VerificationReport {
        let mut orders = BTreeMap::new();
        orders.insert(n, r);
        VerificationReport {
            orders,
            ..VerificationReport::default()
        }
    }
}

/// Whether `g` is one of the graphs the bound speaks about.
pub fn is_eligible(g: &Graph) -> bool {
    g.is_connected() && g.max_degree() <= 3 && find_induced_cycle(g, 6).is_none()
}

/// The report for a single graph.
pub fn check_graph(g: &Graph) -> VerificationReport {
    let n = g.order();
    let start = Instant::now();
    let mut r = OrderReport {
        order: n,
        examined: 1,
        ..OrderReport::default()
    };
    if !is_eligible(g) {
        r.ineligible = 1;
        return VerificationReport::single(n, r);
    }
    r.eligible = 1;
    let budget = n / 4;
    let cert = solve(
        g,
        &IsolationFamily::P3,
        SolveOptions {
            budget: Some(budget),
            lexicographic: false,
        },
    );
    if cert.exact {
        if !is_isolating(g, &IsolationFamily::P3, &cert.set) {
            r.violations.push(Violation {
                graph6: emit_graph6(g),
                reason: "solver returned a non-isolating set".into(),
            });
        }
    } else {
        match catalog_match(g) {
            Some(id) => r.exceptions.push(Exception {
                catalog: id,
                graph6: emit_graph6(g),
            }),
            None => r.violations.push(Violation {
                graph6: emit_graph6(g),
                reason: format!("isolation number exceeds {budget}"),
            }),
        }
    }
    r.work_ms = start.elapsed().as_secs_f64() * 1e3;
    VerificationReport::single(n, r)
}

/// Check every connected subcubic graph with `min_n <= n <= max_n`.
pub fn verify_enumerated(min_n: usize, max_n: usize, mode: Execution) -> VerificationReport {
    let start = Instant::now();
    let spec = EnumSpec::connected_subcubic(max_n);
    let acc = Mutex::new(VerificationReport::default());
    enumerate(&spec, mode, &|g| {
        if g.order() >= min_n {
            let r = check_graph(g);
            let mut guard = acc.lock().unwrap();
            *guard = std::mem::take(&mut *guard).merge(r);
        }
    });
    let mut report = acc.into_inner().unwrap();
    for n in min_n.max(1)..=max_n {
        report.orders.entry(n).or_insert_with(|| OrderReport {
            order: n,
            ..OrderReport::default()
        });
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

const CHUNK: usize = 4096;

/// Check every graph of a graph6 stream whose order lies in `orders`.
/// Malformed lines become diagnostics.
pub fn verify_stream<R: BufRead>(
    reader: R,
    orders: std::ops::RangeInclusive<usize>,
    mode: Execution,
) -> std::io::Result<VerificationReport> {
    let start = Instant::now();
    let mut report = VerificationReport::default();
    let mut batch = Vec::with_capacity(CHUNK);
    let flush = |batch: &mut Vec<Graph>, report: &mut VerificationReport| {
        let part = par::map_reduce(
            mode,
            batch,
            VerificationReport::default,
            check_graph,
            VerificationReport::merge,
        );
        *report = std::mem::take(report).merge(part);
        batch.clear();
    };
    for item in Graph6Stream::new(reader) {
        let item = item?;
        match item.record {
            Ok(rec) if orders.contains(&rec.order) => {
                batch.push(rec.graph);
                if batch.len() == CHUNK {
                    flush(&mut batch, &mut report);
                }
            }
            Ok(_) => {}
            Err(e) => report.diagnostics.push(Diagnostic {
                line: item.line,
                message: e.to_string(),
            }),
        }
    }
    flush(&mut batch, &mut report);
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}
