//! Isolating every 3-path of a connected subcubic graph with no induced
//! 6-cycle using at most `n / 4` vertices.
//!
//! Small graphs go to the exact solver and graphs of maximum degree 2 use
//! the path and cycle formulas. Otherwise a degree-3 vertex `v` is fixed and
//! the components of `G - N[v]` that are exceptional catalog graphs decide
//! which vertices are chosen and which are deleted; what is left splits into
//! components that are handled recursively.
//!
//! Every step picks a set `X`, deletes a set `Y` (inside `N[X]` unless the
//! step is marked explicit) and solves the components of `G - Y`. A step is
//! accepted only if the assembled set isolates the graph and has at most
//! `n / 4` vertices; otherwise other role assignments are tried, and as a
//! last resort the exact solver runs and the step is recorded as a fallback.

use std::ops::ControlFlow;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::generators::CatalogId;
use crate::graph::{label, Graph, VertexSet};
use crate::patterns::{catalog_match, find_induced_cycle, IsoSearch, IsolationFamily};
use crate::solver::{is_isolating, isolation_number, Certificate};

/// How many times a step may hand over to a neighbouring pivot.
const MAX_NESTING: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize)]
pub enum Precondition {
    #[error("NotConnected")]
    NotConnected,
    #[error("NotSubcubic")]
    NotSubcubic,
    #[error("InducedC6")]
    InducedC6,
    #[error("ExceptionalGraph")]
    ExceptionalGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructiveError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(Precondition),
    #[error("no case produced a set within the bound")]
    InternalCaseExhausted,
    #[error("{kind} needs order at least {min}, got {n}")]
    BadOrder {
        kind: &'static str,
        n: usize,
        min: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    Base,
    PathFormula,
    CycleFormula,
    NoExceptional,
    Case1,
    Case2_1,
    Case2_2_1,
    Case2_2_2,
    Case2_2_3,
    Case2_2_4,
    Fallback,
}

impl CaseId {
    pub fn name(self) -> &'static str {
        match self {
            CaseId::Base => "Base<=15",
            CaseId::PathFormula => "Delta2-Path",
            CaseId::CycleFormula => "Delta2-Cycle",
            CaseId::NoExceptional => "NoExceptional",
            CaseId::Case1 => "Case1",
            CaseId::Case2_1 => "Case2.1",
            CaseId::Case2_2_1 => "Case2.2.1",
            CaseId::Case2_2_2 => "Case2.2.2",
            CaseId::Case2_2_3 => "Case2.2.3",
            CaseId::Case2_2_4 => "Case2.2.4",
            CaseId::Fallback => "Fallback",
        }
    }
}

impl Serialize for CaseId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// One step of the construction. Vertex lists use 1-based labels of the
/// input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseStep {
    pub depth: usize,
    pub case: CaseId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<&'static str>,
    /// The degree-3 vertex the case analysis starts from.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pivot: Option<usize>,
    /// Order of the subproblem this step works on.
    pub order: usize,
    pub chosen: Vec<usize>,
    pub deleted: Vec<usize>,
    /// Orders of the components left after deletion.
    pub targets: Vec<usize>,
    /// Names of the vertices used in the case, for normal-form steps.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub relabeling: Vec<(String, usize)>,
    /// Deletion set prescribed outright rather than taken inside `N[chosen]`.
    pub explicit: bool,
    pub deleted_within_closed_neighborhood: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delegated_to: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CaseTrace {
    pub steps: Vec<CaseStep>,
}

impl CaseTrace {
    pub fn fallback_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.case == CaseId::Fallback)
            .count()
    }

    /// Every non-explicit step deleted only vertices dominated by its choice.
    pub fn deletions_justified(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.explicit || s.deleted_within_closed_neighborhood)
    }

    /// `(case, branch)` pairs in order of first use.
    pub fn cases(&self) -> Vec<(CaseId, Option<&'static str>)> {
        let mut out = Vec::new();
        for s in &self.steps {
            if !out.contains(&(s.case, s.branch)) {
                out.push((s.case, s.branch));
            }
        }
        out
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&serde_json::to_string(s).expect("steps serialize"));
            out.push('\n');
        }
        out
    }
}

/// Check that the theorem applies to `g`.
pub fn check_preconditions(g: &Graph) -> Result<(), Precondition> {
    if !g.is_connected() {
        return Err(Precondition::NotConnected);
    }
    if g.max_degree() > 3 {
        return Err(Precondition::NotSubcubic);
    }
    if find_induced_cycle(g, 6).is_some() {
        return Err(Precondition::InducedC6);
    }
    if catalog_match(g).is_some() {
        return Err(Precondition::ExceptionalGraph);
    }
    Ok(())
}

/// A P3-isolating set of size at most `n / 4` for an eligible graph.
pub fn isolate_p3_subcubic(g: &Graph) -> Result<(Certificate, CaseTrace), ConstructiveError> {
    check_preconditions(g).map_err(ConstructiveError::PreconditionViolated)?;
    let mut b = Builder::default();
    let map: Vec<usize> = (0..g.order()).collect();
    let set = b.isolate(g, &map, 0);
    let trace = CaseTrace { steps: b.steps };
    if set.len() > g.order() / 4 || !is_isolating(g, &IsolationFamily::P3, &set) {
        return Err(ConstructiveError::InternalCaseExhausted);
    }
    let cert = Certificate {
        value: set.len(),
        set,
        exact: false,
        family: IsolationFamily::P3,
    };
    Ok((cert, trace))
}

/// Re-check a certificate from scratch.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    if cert.set.order() != g.order() || !is_isolating(g, &cert.family, &cert.set) {
        return false;
    }
    if cert.exact {
        cert.set.len() == cert.value
    } else {
        cert.set.len() <= cert.value
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearKind {
    Path,
    Cycle,
}

/// 0-based positions picked by the path and cycle formulas.
fn formula_positions(n: usize, kind: LinearKind) -> Vec<usize> {
    match kind {
        LinearKind::Path => (1..=n / 4).map(|k| 4 * k - 1).collect(),
        LinearKind::Cycle => (1..).map(|k| 5 * k - 5).take_while(|&p| p < n).collect(),
    }
}

/// The formula set for `P_n` or `C_n`, labelled along the path or cycle.
/// When the formula set does not isolate (tiny orders) the exact solver's
/// set is returned instead, marked exact.
pub fn path_cycle_isolating_set(
    n: usize,
    kind: LinearKind,
) -> Result<Certificate, ConstructiveError> {
    let g = match kind {
        LinearKind::Path => crate::generators::path(n),
        LinearKind::Cycle => crate::generators::cycle(n),
    }
    .map_err(|_| ConstructiveError::BadOrder {
        kind: match kind {
            LinearKind::Path => "path",
            LinearKind::Cycle => "cycle",
        },
        n,
        min: if kind == LinearKind::Path { 1 } else { 3 },
    })?;
    let set = VertexSet::from_vertices(n, formula_positions(n, kind));
    if is_isolating(&g, &IsolationFamily::P3, &set) {
        return Ok(Certificate {
            value: set.len(),
            set,
            exact: false,
            family: IsolationFamily::P3,
        });
    }
    Ok(isolation_number(&g, &IsolationFamily::P3, None))
}

/// Vertices of a connected graph with maximum degree 2 in walk order,
/// starting from an end vertex if there is one.
fn walk_order(g: &Graph) -> (Vec<usize>, LinearKind) {
    let n = g.order();
    let (start, kind) = match (0..n).find(|&v| g.degree(v) <= 1) {
        Some(s) => (s, LinearKind::Path),
        None => (0, LinearKind::Cycle),
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&u| u != prev)
            .expect("walk continues");
        prev = cur;
        cur = next;
        order.push(cur);
    }
    (order, kind)
}

fn labels_of(s: &VertexSet, map: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = s.iter().map(|v| label(map[v])).collect();
    out.sort_unstable();
    out
}

fn has_p3(g: &Graph) -> bool {
    g.max_degree() >= 2
}

struct Plan {
    case: CaseId,
    branch: Option<&'static str>,
    chosen: VertexSet,
    deleted: VertexSet,
    explicit: bool,
    relabeling: Vec<(String, usize)>,
}

impl Plan {
    /// Choose `x` and delete `N[X]`.
    fn closed(g: &Graph, case: CaseId, branch: &'static str, chosen: &[usize]) -> Plan {
        let x = VertexSet::from_vertices(g.order(), chosen.iter().copied());
        Plan {
            case,
            branch: Some(branch),
            deleted: g.closed_neighborhood(&x),
            chosen: x,
            explicit: false,
            relabeling: Vec::new(),
        }
    }

    fn with_relabeling(mut self, relabeling: Vec<(String, usize)>) -> Plan {
        self.relabeling = relabeling;
        self
    }
}

/// The graph and pivot a case analysis runs on.
struct At<'a> {
    g: &'a Graph,
    map: &'a [usize],
    depth: usize,
    v: usize,
    nesting: usize,
}

impl At<'_> {
    fn n(&self) -> usize {
        self.g.order()
    }

    fn set(&self, vs: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_vertices(self.n(), vs)
    }

    fn linked(&self, x: usize, h: &VertexSet) -> bool {
        self.g.neighbors(x).intersects(h)
    }

    fn names(&self, named: impl IntoIterator<Item = (String, usize)>) -> Vec<(String, usize)> {
        named
            .into_iter()
            .map(|(s, u)| (s, label(self.map[u])))
            .collect()
    }
}

#[derive(Default)]
struct Builder {
    steps: Vec<CaseStep>,
}

impl Builder {
    fn push(&mut self, step: CaseStep) -> usize {
        self.steps.push(step);
        self.steps.len() - 1
    }

    fn simple_step(
        &mut self,
        g: &Graph,
        map: &[usize],
        depth: usize,
        case: CaseId,
        set: &VertexSet,
    ) {
        self.push(CaseStep {
            depth,
            case,
            branch: None,
            pivot: None,
            order: g.order(),
            chosen: labels_of(set, map),
            deleted: labels_of(&g.vertices(), map),
            targets: Vec::new(),
            relabeling: Vec::new(),
            explicit: true,
            deleted_within_closed_neighborhood: g.closed_neighborhood(set) == g.vertices(),
            delegated_to: None,
        });
    }

    /// Isolate a connected eligible non-exceptional graph.
    fn isolate(&mut self, g: &Graph, map: &[usize], depth: usize) -> VertexSet {
        let n = g.order();
        if n <= 15 {
            let cert = isolation_number(g, &IsolationFamily::P3, Some(n / 4));
            let case = if cert.exact {
                CaseId::Base
            } else {
                CaseId::Fallback
            };
            self.simple_step(g, map, depth, case, &cert.set);
            return cert.set;
        }
        if g.max_degree() <= 2 {
            let (order, kind) = walk_order(g);
            let set = VertexSet::from_vertices(
                n,
                formula_positions(n, kind).into_iter().map(|p| order[p]),
            );
            if is_isolating(g, &IsolationFamily::P3, &set) {
                let case = match kind {
                    LinearKind::Path => CaseId::PathFormula,
                    LinearKind::Cycle => CaseId::CycleFormula,
                };
                self.simple_step(g, map, depth, case, &set);
                return set;
            }
            return self.fallback(g, map, depth);
        }
        let mark = self.steps.len();
        for v in (0..n).filter(|&v| g.degree(v) == 3) {
            let at = At {
                g,
                map,
                depth,
                v,
                nesting: 0,
            };
            if let Some(d) = self.dispatch(&at) {
                return d;
            }
            self.steps.truncate(mark);
        }
        self.fallback(g, map, depth)
    }

    fn fallback(&mut self, g: &Graph, map: &[usize], depth: usize) -> VertexSet {
        let cert = isolation_number(g, &IsolationFamily::P3, Some(g.order() / 4));
        self.simple_step(g, map, depth, CaseId::Fallback, &cert.set);
        cert.set
    }

    /// Solve an exceptional component left after a deletion. A vertex of it
    /// dominated by the step's choice can be dropped first.
    fn exceptional_component(
        &mut self,
        g: &Graph,
        map: &[usize],
        dominated: &[usize],
        depth: usize,
    ) -> VertexSet {
        let n = g.order();
        let best = dominated
            .iter()
            .map(|&u| {
                let mut keep = g.vertices();
                keep.remove(u);
                let sub = g.induced_subgraph(&keep);
                let cert = isolation_number(&sub.graph, &IsolationFamily::P3, None);
                sub.lift(&cert.set, n)
            })
            .min_by_key(VertexSet::len);
        let (set, branch) = match best {
            Some(s) => (s, "exceptional-minus-dominated"),
            None => (
                isolation_number(g, &IsolationFamily::P3, None).set,
                "exceptional-whole",
            ),
        };
        let idx = self.push(CaseStep {
            depth,
            case: CaseId::Base,
            branch: Some(branch),
            pivot: None,
            order: n,
            chosen: labels_of(&set, map),
            deleted: labels_of(&g.vertices(), map),
            targets: Vec::new(),
            relabeling: Vec::new(),
            explicit: true,
            deleted_within_closed_neighborhood: false,
            delegated_to: None,
        });
        self.steps[idx].deleted_within_closed_neighborhood =
            g.closed_neighborhood(&set) == g.vertices();
        set
    }

    /// Choose the plan's set, delete its deletion set, and solve what is left.
    fn attempt(&mut self, at: &At, plan: Plan) -> Option<VertexSet> {
        let g = at.g;
        let n = g.order();
        let dom = g.closed_neighborhood(&plan.chosen);
        let within = plan.deleted.is_subset(&dom);
        if !plan.explicit && !within {
            return None;
        }
        let mark = self.push(CaseStep {
            depth: at.depth,
            case: plan.case,
            branch: plan.branch,
            pivot: Some(label(at.map[at.v])),
            order: n,
            chosen: labels_of(&plan.chosen, at.map),
            deleted: labels_of(&plan.deleted, at.map),
            targets: Vec::new(),
            relabeling: plan.relabeling,
            explicit: plan.explicit,
            deleted_within_closed_neighborhood: within,
            delegated_to: None,
        });
        let mut d = plan.chosen.clone();
        let mut targets = Vec::new();
        for comp in g.components_within(&plan.deleted.complement()) {
            targets.push(comp.len());
            let sub = g.induced_subgraph(&comp);
            if !has_p3(&sub.graph) {
                continue;
            }
            let child_map: Vec<usize> = sub.map.iter().map(|&i| at.map[i]).collect();
            let part = if catalog_match(&sub.graph).is_some() {
                let dominated: Vec<usize> = (0..sub.graph.order())
                    .filter(|&i| dom.contains(sub.map[i]))
                    .collect();
                self.exceptional_component(&sub.graph, &child_map, &dominated, at.depth + 1)
            } else {
                self.isolate(&sub.graph, &child_map, at.depth + 1)
            };
            d.union_with(&sub.lift(&part, n));
        }
        self.steps[mark].targets = targets;
        if d.len() <= n / 4 && is_isolating(g, &IsolationFamily::P3, &d) {
            Some(d)
        } else {
            self.steps.truncate(mark);
            None
        }
    }

    /// Re-run the case analysis with `pivot` in place of `v`.
    fn delegate(
        &mut self,
        at: &At,
        case: CaseId,
        branch: &'static str,
        pivot: usize,
    ) -> Option<VertexSet> {
        if at.nesting >= MAX_NESTING || at.g.degree(pivot) != 3 {
            return None;
        }
        let mark = self.push(CaseStep {
            depth: at.depth,
            case,
            branch: Some(branch),
            pivot: Some(label(at.map[at.v])),
            order: at.n(),
            chosen: Vec::new(),
            deleted: Vec::new(),
            targets: Vec::new(),
            relabeling: Vec::new(),
            explicit: false,
            deleted_within_closed_neighborhood: true,
            delegated_to: Some(label(at.map[pivot])),
        });
        let inner = At {
            g: at.g,
            map: at.map,
            depth: at.depth,
            v: pivot,
            nesting: at.nesting + 1,
        };
        let out = self.dispatch(&inner);
        if out.is_none() {
            self.steps.truncate(mark);
        }
        out
    }

    fn dispatch(&mut self, at: &At) -> Option<VertexSet> {
        let g = at.g;
        let v = at.v;
        let nv = g.closed_neighborhood_of(v);
        let nbrs = g.neighbors(v).to_vec();
        let comps: Vec<(VertexSet, Option<CatalogId>)> = g
            .components_within(&nv.complement())
            .into_iter()
            .map(|c| {
                let id = catalog_match(&g.induced_subgraph(&c).graph);
                (c, id)
            })
            .collect();
        let exceptional: Vec<usize> = (0..comps.len()).filter(|&i| comps[i].1.is_some()).collect();

        if exceptional.is_empty() {
            let plan = Plan::closed(g, CaseId::NoExceptional, "no-exceptional-component", &[v]);
            return self.attempt(at, plan);
        }

        // Case 1: some neighbour is linked to two exceptional components.
        let heavy: Vec<usize> = nbrs
            .iter()
            .copied()
            .filter(|&x| {
                exceptional
                    .iter()
                    .filter(|&&i| at.linked(x, &comps[i].0))
                    .count()
                    >= 2
            })
            .collect();
        if !heavy.is_empty() {
            for x in heavy {
                let mut chosen = at.set([v, x]);
                let mut deleted = nv.clone();
                for &i in &exceptional {
                    let h = &comps[i].0;
                    let owner = if at.linked(x, h) {
                        x
                    } else {
                        *nbrs
                            .iter()
                            .find(|&&u| at.linked(u, h))
                            .expect("components are linked to N(v)")
                    };
                    chosen.insert(owner);
                    let y = g.neighbors(owner).intersection(h).first().expect("linked");
                    deleted.insert(y);
                }
                let plan = Plan {
                    case: CaseId::Case1,
                    branch: Some("two-exceptional-at-one-neighbour"),
                    chosen,
                    deleted,
                    explicit: false,
                    relabeling: Vec::new(),
                };
                if let Some(d) = self.attempt(at, plan) {
                    return Some(d);
                }
            }
            return None;
        }

        // Case 2.1: an exceptional component hangs off a single neighbour.
        let single: Vec<(usize, usize)> = exceptional
            .iter()
            .filter_map(|&i| {
                let owners: Vec<usize> = nbrs
                    .iter()
                    .copied()
                    .filter(|&x| at.linked(x, &comps[i].0))
                    .collect();
                (owners.len() == 1).then(|| (i, owners[0]))
            })
            .collect();
        if !single.is_empty() {
            for (i, x) in single {
                for y in g.neighbors(x).intersection(&comps[i].0).iter() {
                    let plan = Plan {
                        case: CaseId::Case2_1,
                        branch: Some("exceptional-linked-to-one-neighbour"),
                        chosen: at.set([x]),
                        deleted: at.set([x, y]),
                        explicit: false,
                        relabeling: Vec::new(),
                    };
                    if let Some(d) = self.attempt(at, plan) {
                        return Some(d);
                    }
                }
            }
            return None;
        }

        // Case 2.2: a single exceptional component linked to two neighbours.
        if exceptional.len() != 1 {
            return None;
        }
        let (h1, id) = (
            &comps[exceptional[0]].0,
            comps[exceptional[0]].1.expect("exceptional"),
        );
        let linked: Vec<usize> = nbrs.iter().copied().filter(|&x| at.linked(x, h1)).collect();
        match id.order() {
            15 => self.case_2_2_1(at, h1, &linked),
            11 => self.case_2_2_2(at, h1, id, &linked),
            7 => self.case_2_2_3(at, h1, id, &linked),
            _ => self.case_2_2_4(at, h1, &linked),
        }
    }

    /// Isomorphisms from a catalog graph onto `h`, as maps from catalog
    /// vertex index to vertex of `at.g`.
    fn catalog_embeddings(at: &At, h: &VertexSet, id: CatalogId) -> Vec<Vec<usize>> {
        let sub = at.g.induced_subgraph(h);
        let cat = id.graph();
        let mut out = Vec::new();
        IsoSearch::new(&cat, &sub.graph).for_each::<()>(|m| {
            out.push(m.iter().map(|&i| sub.map[i]).collect());
            ControlFlow::Continue(())
        });
        out
    }

    fn catalog_names(at: &At, phi: &[usize]) -> Vec<(String, usize)> {
        at.names(
            phi.iter()
                .enumerate()
                .map(|(i, &u)| (format!("y{}", i + 1), u)),
        )
    }

    /// The exceptional component has 15 vertices.
    fn case_2_2_1(&mut self, at: &At, h1: &VertexSet, linked: &[usize]) -> Option<VertexSet> {
        let mut tried = Vec::new();
        for phi in Self::catalog_embeddings(at, h1, CatalogId::G15) {
            let y = |l: usize| phi[l - 1];
            // Normal form: label 1 is attached to a neighbour of v.
            if !linked.iter().any(|&x| at.g.has_edge(x, y(1))) || tried.contains(&y(13)) {
                continue;
            }
            tried.push(y(13));
            let plan = Plan::closed(at.g, CaseId::Case2_2_1, "delete-N[y13]", &[y(13)])
                .with_relabeling(Self::catalog_names(at, &phi));
            if let Some(d) = self.attempt(at, plan) {
                return Some(d);
            }
        }
        None
    }

    /// The exceptional component has 11 vertices.
    fn case_2_2_2(
        &mut self,
        at: &At,
        h1: &VertexSet,
        id: CatalogId,
        linked: &[usize],
    ) -> Option<VertexSet> {
        if id == CatalogId::C11 {
            return self.cycle_case(at, h1, linked, CaseId::Case2_2_2);
        }
        let mut tried = Vec::new();
        for phi in Self::catalog_embeddings(at, h1, id) {
            if tried.contains(&phi[1]) {
                continue;
            }
            tried.push(phi[1]);
            let plan = Plan::closed(at.g, CaseId::Case2_2_2, "G11-delete-N[y2]", &[phi[1]])
                .with_relabeling(Self::catalog_names(at, &phi));
            if let Some(d) = self.attempt(at, plan) {
                return Some(d);
            }
        }
        None
    }

    /// The exceptional component has 7 vertices.
    fn case_2_2_3(
        &mut self,
        at: &At,
        h1: &VertexSet,
        id: CatalogId,
        linked: &[usize],
    ) -> Option<VertexSet> {
        if id == CatalogId::C7 {
            return self.cycle_case(at, h1, linked, CaseId::Case2_2_3);
        }
        let g = at.g;
        let attach: VertexSet = {
            let mut s = at.set([]);
            for &x in linked {
                s.union_with(&g.neighbors(x).intersection(h1));
            }
            s
        };
        // A degree-3 vertex of the component whose removal with its
        // neighbourhood leaves a 3-vertex graph containing a 3-path.
        let mut candidates: Vec<usize> = h1
            .iter()
            .filter(|&y| g.neighbors(y).intersection_len(h1) == 3)
            .filter(|&y| {
                let rest = h1.difference(&g.closed_neighborhood_of(y));
                rest.len() == 3
                    && rest
                        .iter()
                        .any(|u| g.neighbors(u).intersection_len(&rest) == 2)
            })
            .collect();
        candidates.sort_by_key(|&y| attach.intersects(&g.closed_neighborhood_of(y)));
        for y in candidates {
            let plan = Plan::closed(g, CaseId::Case2_2_3, "G7-delete-N[y*]", &[y]);
            if let Some(d) = self.attempt(at, plan) {
                return Some(d);
            }
        }
        None
    }

    /// Walk around the cycle `h` starting at `start` towards `next`.
    fn cycle_walk(g: &Graph, h: &VertexSet, start: usize, next: usize) -> Vec<usize> {
        let mut seq = vec![start, next];
        while seq.len() < h.len() {
            let cur = seq[seq.len() - 1];
            let prev = seq[seq.len() - 2];
            let step = g
                .neighbors(cur)
                .intersection(h)
                .iter()
                .find(|&u| u != prev)
                .expect("cycle continues");
            seq.push(step);
        }
        seq
    }

    /// Ordered role assignments `(x1, x1')` of two distinct linked
    /// neighbours, with `w` the remaining neighbour of `v`.
    fn roles(at: &At, linked: &[usize]) -> Vec<(usize, usize, usize)> {
        let nbrs = at.g.neighbors(at.v).to_vec();
        let mut out = Vec::new();
        for &a in linked {
            for &b in linked {
                if a != b {
                    let w = *nbrs.iter().find(|&&u| u != a && u != b).expect("degree 3");
                    out.push((a, b, w));
                }
            }
        }
        out
    }

    /// Exceptional component is a 7- or 11-cycle.
    fn cycle_case(
        &mut self,
        at: &At,
        h1: &VertexSet,
        linked: &[usize],
        case: CaseId,
    ) -> Option<VertexSet> {
        let g = at.g;
        let k = h1.len();
        let mut y_set = g.closed_neighborhood_of(at.v);
        y_set.union_with(h1);
        // Neighbours of v with an edge leaving N[v] and the component.
        let exits: Vec<usize> = g
            .neighbors(at.v)
            .iter()
            .filter(|&u| !g.neighbors(u).is_subset(&y_set))
            .collect();
        let mut roles = Self::roles(at, linked);
        // Normal form: x1 is not the only neighbour with an exit.
        roles.sort_by_key(|&(x1, _, _)| !exits.iter().any(|&u| u != x1));
        for (x1, x1p, w) in roles {
            for y1 in g.neighbors(x1).intersection(h1).iter() {
                let ny1 = g.closed_neighborhood_of(y1);
                let i_set = y_set.difference(&ny1);
                let around = g.neighbors(y1).intersection(h1).to_vec();
                let seq = Self::cycle_walk(g, h1, y1, around[0]);
                let names = at.names(
                    seq.iter()
                        .enumerate()
                        .map(|(i, &u)| (format!("y{}", i + 1), u)),
                );
                if g.components_within(&i_set).len() == 1 {
                    let plan = Plan::closed(g, case, "I-connected", &[y1]).with_relabeling(names);
                    if let Some(d) = self.attempt(at, plan) {
                        return Some(d);
                    }
                    continue;
                }
                if k == 11 {
                    let oriented = if g.has_edge(x1p, seq[1]) {
                        seq.clone()
                    } else if g.has_edge(x1p, seq[10]) {
                        Self::cycle_walk(g, h1, y1, seq[10])
                    } else {
                        continue;
                    };
                    let mut deleted = at.set([x1, x1p]);
                    deleted.union_with(h1);
                    let plan = Plan {
                        case,
                        branch: Some("I-disconnected-{y1,y2,y7}"),
                        chosen: at.set([oriented[0], oriented[1], oriented[6]]),
                        deleted,
                        explicit: true,
                        relabeling: at.names(
                            oriented
                                .iter()
                                .enumerate()
                                .map(|(i, &u)| (format!("y{}", i + 1), u)),
                        ),
                    };
                    if let Some(d) = self.attempt(at, plan) {
                        return Some(d);
                    }
                    continue;
                }
                // 7-cycle with I disconnected: look at the component of v in G - N[y1].
                let gv = g.reach_within(at.v, &ny1.complement());
                match catalog_match(&g.induced_subgraph(&gv).graph) {
                    None => {
                        let plan = Plan::closed(g, case, "I-disconnected-plain", &[y1])
                            .with_relabeling(names);
                        if let Some(d) = self.attempt(at, plan) {
                            return Some(d);
                        }
                    }
                    Some(CatalogId::C11 | CatalogId::G11) => {
                        if let Some(d) =
                            self.delegate(at, case, "I-disconnected-11-vertex-remainder", y1)
                        {
                            return Some(d);
                        }
                    }
                    Some(CatalogId::C7) => {
                        let Some(u4) = g.neighbors(w).intersection(&gv).iter().find(|&u| u != at.v)
                        else {
                            continue;
                        };
                        let plan =
                            Plan::closed(g, case, "I-disconnected-7-cycle-remainder", &[x1p, u4])
                                .with_relabeling(names);
                        if let Some(d) = self.attempt(at, plan) {
                            return Some(d);
                        }
                    }
                    Some(_) => {}
                }
            }
        }
        None
    }

    /// The exceptional component has 3 vertices.
    fn case_2_2_4(&mut self, at: &At, h1: &VertexSet, linked: &[usize]) -> Option<VertexSet> {
        let g = at.g;
        let nbrs = g.neighbors(at.v).clone();
        let deg_in = |u: usize| g.neighbors(u).intersection_len(h1);
        // Middle vertices of the component attached to a neighbour of v.
        let attached_middles: Vec<usize> = h1
            .iter()
            .filter(|&y| deg_in(y) == 2 && g.neighbors(y).intersects(&nbrs))
            .collect();

        if attached_middles.is_empty() {
            for (x1, x1p, w) in Self::roles(at, linked) {
                let shared = g
                    .neighbors(x1)
                    .intersection(g.neighbors(x1p))
                    .intersection(h1)
                    .first();
                if let Some(c) = shared {
                    let nc = g.closed_neighborhood_of(c);
                    let gv = g.reach_within(at.v, &nc.complement());
                    let plans: Vec<Plan> = match catalog_match(&g.induced_subgraph(&gv).graph) {
                        None => vec![Plan::closed(g, CaseId::Case2_2_4, "(1)-shared-end", &[c])],
                        Some(CatalogId::G71) => gv
                            .difference(&g.closed_neighborhood_of(w))
                            .iter()
                            .map(|z| {
                                Plan::closed(
                                    g,
                                    CaseId::Case2_2_4,
                                    "(1)-shared-end-G7_1-remainder",
                                    &[w, c, z],
                                )
                            })
                            .collect(),
                        Some(CatalogId::P3) => {
                            vec![Plan::closed(
                                g,
                                CaseId::Case2_2_4,
                                "(1)-shared-end-P3-remainder",
                                &[w, c],
                            )]
                        }
                        Some(_) => Vec::new(),
                    };
                    for plan in plans {
                        if let Some(d) = self.attempt(at, plan) {
                            return Some(d);
                        }
                    }
                } else if g.has_edge(x1, x1p) {
                    let plan =
                        Plan::closed(g, CaseId::Case2_2_4, "(1)-adjacent-attachments", &[x1]);
                    if let Some(d) = self.attempt(at, plan) {
                        return Some(d);
                    }
                }
            }
            return None;
        }

        for &y1 in &attached_middles {
            for x1 in g.neighbors(y1).intersection(&nbrs).iter() {
                for &x1p in linked.iter().filter(|&&x| x != x1) {
                    let w = nbrs
                        .iter()
                        .find(|&u| u != x1 && u != x1p)
                        .expect("degree 3");
                    for y1p in g
                        .neighbors(x1p)
                        .intersection(h1)
                        .iter()
                        .filter(|&u| u != y1)
                    {
                        if let Some(d) = self.case_2_2_4_middle(at, h1, y1, y1p, x1, x1p, w) {
                            return Some(d);
                        }
                    }
                }
            }
        }
        None
    }

    /// Case 2.2.4 when the middle vertex `y1` of the component is attached
    /// to the neighbour `x1` of v.
    #[allow(clippy::too_many_arguments)]
    fn case_2_2_4_middle(
        &mut self,
        at: &At,
        h1: &VertexSet,
        y1: usize,
        y1p: usize,
        x1: usize,
        x1p: usize,
        w: usize,
    ) -> Option<VertexSet> {
        let g = at.g;
        let case = CaseId::Case2_2_4;
        let ny1 = g.closed_neighborhood_of(y1);
        let rest = ny1.complement();
        let gv = g.reach_within(at.v, &rest);
        let names = at.names([
            ("x1".to_string(), x1),
            ("x1'".to_string(), x1p),
            ("w".to_string(), w),
            ("y1".to_string(), y1),
            ("y1'".to_string(), y1p),
        ]);
        match catalog_match(&g.induced_subgraph(&gv).graph) {
            None => {
                let plan = Plan::closed(g, case, "middle-attached", &[y1]).with_relabeling(names);
                self.attempt(at, plan)
            }
            Some(CatalogId::C7 | CatalogId::C11 | CatalogId::G11) => {
                self.delegate(at, case, "middle-attached-cycle-like-remainder", y1)
            }
            Some(CatalogId::P3 | CatalogId::C3) => {
                let hstar = rest.len() - gv.len();
                let ystar = h1.iter().find(|&u| u != y1 && u != y1p)?;
                let plan = if !hstar.is_multiple_of(4) {
                    Plan::closed(g, case, "middle-attached-3-vertex-remainder", &[y1])
                } else if g.has_edge(x1p, ystar) {
                    Plan::closed(g, case, "r0-x1'-sees-y*", &[x1p])
                } else {
                    let mut xp = at.set([x1p]);
                    xp.union_with(h1);
                    if g.neighbors(y1p).intersection_len(h1) == 2 {
                        Plan {
                            case,
                            branch: Some("r0-y1'-middle"),
                            chosen: at.set([y1p]),
                            deleted: xp,
                            explicit: false,
                            relabeling: Vec::new(),
                        }
                    } else if !g.has_edge(w, ystar) {
                        xp.remove(ystar);
                        Plan {
                            case,
                            branch: Some("r0-y1'-end-w-misses-y*"),
                            chosen: at.set([y1p]),
                            deleted: xp,
                            explicit: false,
                            relabeling: Vec::new(),
                        }
                    } else if g.has_edge(w, y1p) {
                        Plan::closed(g, case, "r0-w-sees-y1'", &[y1p])
                    } else {
                        Plan::closed(g, case, "r0-x1'-sees-w", &[x1p])
                    }
                };
                self.attempt(at, plan.with_relabeling(names))
            }
            Some(_) => None,
        }
    }
}
