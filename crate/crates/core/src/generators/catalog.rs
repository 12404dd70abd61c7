//! The twelve exceptional graphs: connected, subcubic, free of induced
//! 6-cycles, and needing `(n + 1) / 4` vertices to isolate every 3-path.
//!
//! Edge lists use the printed vertex labels of the original drawings
//! (1-based). For the two 7-vertex drawings laid out with permuted node
//! names (G7,5 and G7,6) and for G15, the labels were chosen so that the
//! structural observations checked in [`crate::verify::observations`] hold;
//! in particular the degree-2 vertices of G15 are 1, 5 and 9, and adding
//! `{1,4}` or `{1,5}` to G7,5 drops the isolation number to 1.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use super::GenError;
use crate::graph::Graph;
use crate::patterns::{has_induced_cycle, Fingerprint, IsolationFamily};
use crate::solver::isolation_number;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogId {
    P3,
    C3,
    C7,
    G71,
    G72,
    G73,
    G74,
    G75,
    G76,
    C11,
    G11,
    G15,
}

impl CatalogId {
    pub const ALL: [CatalogId; 12] = [
        CatalogId::P3,
        CatalogId::C3,
        CatalogId::C7,
        CatalogId::G71,
        CatalogId::G72,
        CatalogId::G73,
        CatalogId::G74,
        CatalogId::G75,
        CatalogId::G76,
        CatalogId::C11,
        CatalogId::G11,
        CatalogId::G15,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogId::P3 => "P3",
            CatalogId::C3 => "C3",
            CatalogId::C7 => "C7",
            CatalogId::G71 => "G7_1",
            CatalogId::G72 => "G7_2",
            CatalogId::G73 => "G7_3",
            CatalogId::G74 => "G7_4",
            CatalogId::G75 => "G7_5",
            CatalogId::G76 => "G7_6",
            CatalogId::C11 => "C11",
            CatalogId::G11 => "G11",
            CatalogId::G15 => "G15",
        }
    }

    pub fn order(self) -> usize {
        match self {
            CatalogId::P3 | CatalogId::C3 => 3,
            CatalogId::C11 | CatalogId::G11 => 11,
            CatalogId::G15 => 15,
            _ => 7,
        }
    }

    /// The isolation number every catalog graph has: `(order + 1) / 4`.
    pub fn expected_iota(self) -> usize {
        (self.order() + 1) / 4
    }

    /// Labeled edges as printed in the drawings.
    pub fn labeled_edges(self) -> &'static [(usize, usize)] {
        match self {
            CatalogId::P3 => &[(1, 2), (2, 3)],
            CatalogId::C3 => &[(1, 2), (2, 3), (1, 3)],
            CatalogId::C7 => &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 7)],
            // The drawing lists 6-7 twice; duplicates collapse on load.
            CatalogId::G71 => &[
                (7, 2),
                (7, 6),
                (1, 7),
                (2, 3),
                (3, 4),
                (3, 5),
                (4, 5),
                (5, 6),
                (6, 7),
            ],
            CatalogId::G72 => &[
                (7, 2),
                (7, 6),
                (1, 7),
                (2, 3),
                (2, 1),
                (3, 4),
                (3, 5),
                (4, 5),
                (5, 6),
                (6, 7),
            ],
            CatalogId::G73 => &[
                (7, 2),
                (7, 6),
                (1, 7),
                (2, 3),
                (3, 4),
                (3, 5),
                (4, 5),
                (5, 6),
                (6, 7),
                (1, 4),
            ],
            CatalogId::G74 => &[
                (7, 2),
                (7, 6),
                (1, 7),
                (2, 3),
                (2, 1),
                (3, 4),
                (3, 5),
                (4, 5),
                (5, 6),
                (6, 7),
                (1, 4),
            ],
            CatalogId::G75 => &[
                (6, 4),
                (6, 7),
                (6, 5),
                (4, 3),
                (3, 5),
                (3, 2),
                (2, 1),
                (2, 7),
                (1, 7),
                (7, 6),
            ],
            CatalogId::G76 => &[
                (6, 4),
                (6, 7),
                (6, 5),
                (4, 3),
                (4, 5),
                (3, 5),
                (3, 2),
                (2, 1),
                (2, 7),
                (1, 7),
                (7, 6),
            ],
            CatalogId::C11 => &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 10),
                (10, 11),
                (1, 11),
            ],
            CatalogId::G11 => &[
                (1, 2),
                (1, 11),
                (2, 11),
                (2, 3),
                (3, 4),
                (3, 9),
                (4, 5),
                (4, 10),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 10),
                (10, 11),
            ],
            CatalogId::G15 => &[
                (1, 2),
                (1, 15),
                (2, 15),
                (2, 3),
                (3, 4),
                (3, 13),
                (4, 5),
                (5, 6),
                (4, 14),
                (6, 7),
                (6, 11),
                (7, 8),
                (7, 12),
                (8, 9),
                (8, 10),
                (9, 10),
                (10, 11),
                (11, 12),
                (12, 13),
                (13, 14),
                (14, 15),
            ],
        }
    }

    /// Build the graph; vertex `label - 1` carries the printed label.
    pub fn graph(self) -> Graph {
        Graph::from_labeled_edges(self.order(), self.labeled_edges())
            .expect("catalog edge lists are valid")
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | ',' | '-'))
            .collect::<String>()
            .to_ascii_uppercase();
        CatalogId::ALL
            .into_iter()
            .find(|id| id.name().replace('_', "") == norm)
            .ok_or_else(|| format!("unknown catalog graph `{s}`"))
    }
}

impl Serialize for CatalogId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Catalog graph with its matching fingerprint; no self-check involved.
#[derive(Debug)]
pub struct RawEntry {
    pub id: CatalogId,
    pub graph: Graph,
    pub fingerprint: Fingerprint,
}

pub fn raw_catalog() -> &'static [RawEntry] {
    static RAW: OnceLock<Vec<RawEntry>> = OnceLock::new();
    RAW.get_or_init(|| {
        CatalogId::ALL
            .into_iter()
            .map(|id| {
                let graph = id.graph();
                let fingerprint = Fingerprint::of(&graph);
                RawEntry {
                    id,
                    graph,
                    fingerprint,
                }
            })
            .collect()
    })
}

/// A verified catalog graph with its documented properties.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: CatalogId,
    #[serde(skip)]
    pub graph: Graph,
    pub order: usize,
    pub size: usize,
    pub iota: usize,
    pub max_degree: usize,
    pub induced_c6_free: bool,
}

fn self_check(id: CatalogId) -> Result<CatalogEntry, GenError> {
    let fail = |reason: String| GenError::CatalogSelfCheckFailed { id, reason };
    let graph = id.graph();
    if graph.order() != id.order() {
        return Err(fail(format!("order {}", graph.order())));
    }
    if !graph.is_connected() {
        return Err(fail("not connected".into()));
    }
    if graph.max_degree() > 3 {
        return Err(fail(format!("max degree {}", graph.max_degree())));
    }
    if has_induced_cycle(&graph, 6).is_some() {
        return Err(fail("contains an induced 6-cycle".into()));
    }
    let cert = isolation_number(&graph, &IsolationFamily::P3, None);
    if cert.value != id.expected_iota() {
        return Err(fail(format!(
            "isolation number {} != {}",
            cert.value,
            id.expected_iota()
        )));
    }
    Ok(CatalogEntry {
        id,
        order: graph.order(),
        size: graph.size(),
        iota: cert.value,
        max_degree: graph.max_degree(),
        induced_c6_free: true,
        graph,
    })
}

/// All twelve entries, each re-verified on first use.
pub fn catalog() -> Result<&'static [CatalogEntry], GenError> {
    static CATALOG: OnceLock<Result<Vec<CatalogEntry>, GenError>> = OnceLock::new();
    CATALOG
        .get_or_init(|| CatalogId::ALL.into_iter().map(self_check).collect())
        .as_deref()
        .map_err(Clone::clone)
}

pub fn entry(id: CatalogId) -> Result<&'static CatalogEntry, GenError> {
    Ok(&catalog()?[id as usize])
}
