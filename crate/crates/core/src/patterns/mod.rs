//! Pattern detection: family copies, induced cycles, isomorphism, and
//! recognition of the exceptional catalog graphs.

mod copies;
mod cycles;
mod family;
mod iso;

pub use copies::{find_copy, find_embedding};
pub use cycles::{find_induced_cycle, induced_cycle_by_subsets};
pub use family::{FamilyError, IsolationFamily};
pub use iso::{automorphism_count, find_isomorphism, triangle_counts, Fingerprint, IsoSearch};

use serde::Serialize;

use crate::generators::catalog::{raw_catalog, CatalogId};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchMode {
    /// Adjacency is preserved; non-adjacency need not be.
    Subgraph,
    /// Adjacency and non-adjacency are preserved on the image.
    Induced,
    /// A bijection preserving adjacency and non-adjacency.
    Isomorphism,
}

/// An injective map from the pattern's vertices into the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    /// `mapping[i]` is the host vertex playing pattern vertex `i`.
    pub mapping: Vec<usize>,
    pub mode: MatchMode,
}

impl IsoWitness {
    /// Re-check the witness against a pattern and host.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        let k = pattern.order();
        if self.mapping.len() != k || self.mapping.iter().any(|&v| v >= host.order()) {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        if !self.mapping.iter().all(|v| seen.insert(*v)) {
            return false;
        }
        if self.mode == MatchMode::Isomorphism && k != host.order() {
            return false;
        }
        (0..k).all(|i| {
            (0..k).filter(|&j| j != i).all(|j| {
                let pe = pattern.has_edge(i, j);
                let he = host.has_edge(self.mapping[i], self.mapping[j]);
                match self.mode {
                    MatchMode::Subgraph => !pe || he,
                    MatchMode::Induced | MatchMode::Isomorphism => pe == he,
                }
            })
        })
    }
}

/// A subgraph copy of some member of `fam` in `g`.
pub fn contains_copy(g: &Graph, fam: &IsolationFamily) -> Option<IsoWitness> {
    find_copy(g, &g.vertices(), fam).map(|mapping| IsoWitness {
        mapping,
        mode: MatchMode::Subgraph,
    })
}

/// An induced `k`-cycle of `g`, listed in cyclic order.
pub fn has_induced_cycle(g: &Graph, k: usize) -> Option<IsoWitness> {
    find_induced_cycle(g, k).map(|mapping| IsoWitness {
        mapping,
        mode: MatchMode::Induced,
    })
}

/// An isomorphism from `g` onto `h`.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Option<IsoWitness> {
    if Fingerprint::of(g) != Fingerprint::of(h) {
        return None;
    }
    find_isomorphism(g, h).map(|mapping| IsoWitness {
        mapping,
        mode: MatchMode::Isomorphism,
    })
}

/// Which exceptional catalog graph `g` is a copy of, if any.
pub fn catalog_match(g: &Graph) -> Option<CatalogId> {
    if !matches!(g.order(), 3 | 7 | 11 | 15) {
        return None;
    }
    let fp = Fingerprint::of(g);
    raw_catalog()
        .iter()
        .filter(|e| e.fingerprint == fp)
        .find(|e| find_isomorphism(g, &e.graph).is_some())
        .map(|e| e.id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, construction_b, cycle, path};
    use crate::graph::VertexSet;

    #[test]
    fn p3_copies() {
        let p3 = IsolationFamily::P3;
        assert!(contains_copy(&path(2).unwrap(), &p3).is_none());
        let c5 = cycle(5).unwrap();
        let w = contains_copy(&c5, &p3).unwrap();
        assert!(w.is_valid(&path(3).unwrap(), &c5));
        let c6 = cycle(6).unwrap();
        let rest = c6
            .delete_closed_neighborhood(&VertexSet::singleton(6, 0))
            .graph;
        assert!(contains_copy(&rest, &p3).is_some());
    }

    #[test]
    fn small_family_copies() {
        let k4 = complete(4).unwrap();
        assert!(contains_copy(&Graph::empty(1), &IsolationFamily::K1).is_some());
        assert!(contains_copy(&Graph::empty(0), &IsolationFamily::K1).is_none());
        assert!(contains_copy(&Graph::empty(3), &IsolationFamily::K2).is_none());
        let tri = contains_copy(&k4, &IsolationFamily::K3).unwrap();
        assert!(tri.is_valid(&complete(3).unwrap(), &k4));
        assert!(contains_copy(&cycle(5).unwrap(), &IsolationFamily::K3).is_none());
        assert!(contains_copy(&k4, &IsolationFamily::Cycle(4)).is_some());
        assert!(contains_copy(&cycle(5).unwrap(), &IsolationFamily::Cycle(4)).is_none());
        assert!(contains_copy(&path(6).unwrap(), &IsolationFamily::AnyCycle).is_none());
        let w = contains_copy(&cycle(7).unwrap(), &IsolationFamily::AnyCycle).unwrap();
        assert_eq!(w.mapping.len(), 7);
        let fam = IsolationFamily::finite_list(vec![cycle(5).unwrap()]).unwrap();
        assert!(contains_copy(&cycle(5).unwrap(), &fam).is_some());
        assert!(contains_copy(&cycle(6).unwrap(), &fam).is_none());
    }

    #[test]
    fn induced_cycles() {
        let c6 = cycle(6).unwrap();
        let w = has_induced_cycle(&c6, 6).unwrap();
        assert!(w.is_valid(&c6, &c6));
        assert!(has_induced_cycle(&complete(4).unwrap(), 4).is_none());
        assert!(has_induced_cycle(&complete(4).unwrap(), 3).is_some());
        let b = construction_b(12, &path(3).unwrap()).unwrap();
        assert_eq!(
            has_induced_cycle(&b, 6).is_some(),
            induced_cycle_by_subsets(&b, 6)
        );
    }

    #[test]
    fn isomorphism_basics() {
        let c7 = cycle(7).unwrap();
        let perm = [3, 6, 2, 0, 5, 1, 4];
        let shuffled = c7.permute(&perm);
        let w = is_isomorphic(&c7, &shuffled).unwrap();
        assert!(w.is_valid(&c7, &shuffled));
        assert!(is_isomorphic(&path(3).unwrap(), &complete(3).unwrap()).is_none());
        assert_eq!(automorphism_count(&c7), 14);
        assert_eq!(automorphism_count(&complete(4).unwrap()), 24);
    }

    #[test]
    fn catalog_recognition() {
        assert_eq!(catalog_match(&cycle(11).unwrap()), Some(CatalogId::C11));
        assert_eq!(catalog_match(&cycle(15).unwrap()), None);
        assert_eq!(
            catalog_match(&construction_b(8, &path(3).unwrap()).unwrap()),
            None
        );
        assert_eq!(catalog_match(&complete(3).unwrap()), Some(CatalogId::C3));
    }
}
