//! Exact isolation numbers by branch and bound over hitting sets.
//!
//! Every isolating set meets `N[V(H)]` for each surviving copy `H`, so the
//! search repeatedly picks a surviving copy and branches on the vertices of
//! its closed neighbourhood. Copies whose closed neighbourhoods are pairwise
//! disjoint each need their own vertex, which gives the pruning bound.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet};
use crate::patterns::{find_copy, IsolationFamily};

/// An isolating set together with the value it certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub set: VertexSet,
    /// The isolation number when `exact`; otherwise an upper bound, or
    /// `budget + 1` meaning the search stopped at the budget.
    pub value: usize,
    pub exact: bool,
    pub family: IsolationFamily,
}

impl Certificate {
    pub fn size(&self) -> usize {
        self.set.len()
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Certificate", 4)?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("exact", &self.exact)?;
        st.serialize_field("set", &self.set.labels())?;
        st.end()
    }
}

/// Whether `G - N[D]` is free of copies of `fam`.
pub fn is_isolating(g: &Graph, fam: &IsolationFamily, d: &VertexSet) -> bool {
    let alive = g.closed_neighborhood(d).complement();
    find_copy(g, &alive, fam).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Give up above this size.
    pub budget: Option<usize>,
    /// Return the lexicographically smallest minimum set.
    pub lexicographic: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: None,
            lexicographic: true,
        }
    }
}

/// Minimum isolating set, the lexicographically smallest among minimum ones.
///
/// With a budget `b`, graphs needing more than `b` vertices come back with
/// `exact = false`, `value = b + 1` and some valid (greedy) isolating set.
pub fn isolation_number(g: &Graph, fam: &IsolationFamily, budget: Option<usize>) -> Certificate {
    solve(
        g,
        fam,
        SolveOptions {
            budget,
            lexicographic: true,
        },
    )
}

pub fn solve(g: &Graph, fam: &IsolationFamily, opts: SolveOptions) -> Certificate {
    let n = g.order();
    let mut search = Search { g, fam };
    let all = VertexSet::full(n);
    let start = search.packing_bound(&VertexSet::new(n), &all);
    let cap = opts.budget.unwrap_or(n).min(n);
    let mut k = start.unwrap_or(usize::MAX);
    while k <= cap {
        let mut d = VertexSet::new(n);
        if search.feasible(&mut d, &VertexSet::new(n), &all, k) {
            let set = if opts.lexicographic {
                search.lex_min(k)
            } else {
                d
            };
            return Certificate {
                value: set.len(),
                set,
                exact: true,
                family: fam.clone(),
            };
        }
        k += 1;
    }
    let budget = opts.budget.unwrap_or(n);
    Certificate {
        set: greedy_isolating_set(g, fam),
        value: budget + 1,
        exact: false,
        family: fam.clone(),
    }
}

/// Solve each component separately and take the union.
pub fn isolation_number_additive(g: &Graph, fam: &IsolationFamily) -> Certificate {
    let n = g.order();
    let mut set = VertexSet::new(n);
    let mut value = 0;
    for comp in g.components().components {
        let sub = g.induced_subgraph(&comp);
        let cert = isolation_number(&sub.graph, fam, None);
        value += cert.value;
        set.union_with(&sub.lift(&cert.set, n));
    }
    Certificate {
        set,
        value,
        exact: true,
        family: fam.clone(),
    }
}

/// Repeatedly take the copy found for branching and add whichever of its
/// vertices covers the most of what is left. Always valid, rarely optimal.
pub fn greedy_isolating_set(g: &Graph, fam: &IsolationFamily) -> VertexSet {
    let n = g.order();
    let mut d = VertexSet::new(n);
    let mut alive = VertexSet::full(n);
    while let Some(copy) = find_copy(g, &alive, fam) {
        let pick = copy
            .iter()
            .copied()
            .max_by_key(|&u| {
                (
                    g.closed_neighborhood_of(u).intersection_len(&alive),
                    std::cmp::Reverse(u),
                )
            })
            .expect("copies are non-empty");
        d.insert(pick);
        alive.difference_with(&g.closed_neighborhood_of(pick));
    }
    d
}

struct Search<'a> {
    g: &'a Graph,
    fam: &'a IsolationFamily,
}

impl Search<'_> {
    /// Count copies with pairwise disjoint hitting candidates. `None` when
    /// some surviving copy cannot be hit at all.
    fn packing_bound(&self, covered: &VertexSet, allowed: &VertexSet) -> Option<usize> {
        let mut alive = covered.complement();
        let mut count = 0;
        while let Some(copy) = find_copy(self.g, &alive, self.fam) {
            let mut hit = self.copy_neighborhood(&copy);
            hit.intersect_with(allowed);
            if hit.is_empty() {
                return None;
            }
            count += 1;
            alive.difference_with(&self.g.closed_neighborhood(&hit));
        }
        Some(count)
    }

    fn copy_neighborhood(&self, copy: &[usize]) -> VertexSet {
        let mut s = VertexSet::new(self.g.order());
        for &u in copy {
            s.union_with(&self.g.closed_neighborhood_of(u));
        }
        s
    }

    /// Extend `d` (with `covered = N[d]`) by at most `r` vertices of
    /// `allowed` into an isolating set. On success `d` holds the set.
    fn feasible(
        &mut self,
        d: &mut VertexSet,
        covered: &VertexSet,
        allowed: &VertexSet,
        r: usize,
    ) -> bool {
        let alive = covered.complement();
        let Some(copy) = find_copy(self.g, &alive, self.fam) else {
            return true;
        };
        if r == 0 {
            return false;
        }
        match self.packing_bound(covered, allowed) {
            Some(lb) if lb <= r => {}
            _ => return false,
        }
        let mut candidates = self.copy_neighborhood(&copy);
        candidates.intersect_with(allowed);
        let mut allowed = allowed.clone();
        for u in candidates.iter() {
            d.insert(u);
            let mut next = covered.clone();
            next.union_with(&self.g.closed_neighborhood_of(u));
            if self.feasible(d, &next, &allowed, r - 1) {
                return true;
            }
            d.remove(u);
            // Later branches need not revisit sets containing `u`.
            allowed.remove(u);
        }
        false
    }

    /// The lexicographically smallest isolating set of size `k`, assuming
    /// `k` is the minimum.
    fn lex_min(&mut self, k: usize) -> VertexSet {
        let n = self.g.order();
        let mut prefix = VertexSet::new(n);
        let mut covered = VertexSet::new(n);
        let mut next_min = 0;
        for slot in 0..k {
            let remaining = k - slot - 1;
            let chosen = (next_min..n).find(|&u| {
                let mut d = prefix.clone();
                d.insert(u);
                let mut cov = covered.clone();
                cov.union_with(&self.g.closed_neighborhood_of(u));
                let allowed = VertexSet::from_vertices(n, u + 1..n);
                self.feasible(&mut d, &cov, &allowed, remaining)
            });
            let u = chosen.expect("a minimum set of size k exists");
            prefix.insert(u);
            covered.union_with(&self.g.closed_neighborhood_of(u));
            next_min = u + 1;
        }
        prefix
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn isolating_predicate() {
        let c7 = cycle(7).unwrap();
        assert!(is_isolating(&c7, &IsolationFamily::P3, &set(7, &[0, 3])));
        assert!(!is_isolating(&c7, &IsolationFamily::P3, &set(7, &[0])));
        assert!(is_isolating(&c7, &IsolationFamily::K1, &c7.vertices()));
    }

    #[test]
    fn small_values() {
        let p3 = IsolationFamily::P3;
        assert_eq!(isolation_number(&Graph::empty(1), &p3, None).value, 0);
        assert_eq!(isolation_number(&cycle(6).unwrap(), &p3, None).value, 2);
        let c7 = isolation_number(&cycle(7).unwrap(), &p3, None);
        assert_eq!((c7.value, c7.set.to_vec()), (2, vec![0, 2]));
        assert_eq!(
            isolation_number(&complete(5).unwrap(), &IsolationFamily::K1, None).value,
            1
        );
        assert_eq!(
            isolation_number(&path(10).unwrap(), &IsolationFamily::K2, None).value,
            3
        );
    }

    #[test]
    fn budget_exceeded_is_a_result() {
        let c11 = cycle(11).unwrap();
        let cert = isolation_number(&c11, &IsolationFamily::P3, Some(2));
        assert!(!cert.exact);
        assert_eq!(cert.value, 3);
        assert!(is_isolating(&c11, &IsolationFamily::P3, &cert.set));
        let within = isolation_number(&c11, &IsolationFamily::P3, Some(3));
        assert!(within.exact && within.value == 3);
    }

    #[test]
    fn additive_on_unions() {
        let c7 = cycle(7).unwrap();
        let two = c7.disjoint_union(&c7);
        assert_eq!(
            isolation_number_additive(&two, &IsolationFamily::P3).value,
            4
        );
        assert_eq!(isolation_number(&two, &IsolationFamily::P3, None).value, 4);
        let with_k1 = c7.disjoint_union(&Graph::empty(1));
        assert_eq!(
            isolation_number_additive(&with_k1, &IsolationFamily::P3).value,
            2
        );
        assert_eq!(
            isolation_number_additive(&Graph::empty(5), &IsolationFamily::P3).value,
            0
        );
    }

    #[test]
    fn greedy_is_valid() {
        for n in 3..20 {
            let g = cycle(n).unwrap();
            assert!(is_isolating(
                &g,
                &IsolationFamily::P3,
                &greedy_isolating_set(&g, &IsolationFamily::P3)
            ));
        }
    }
}
