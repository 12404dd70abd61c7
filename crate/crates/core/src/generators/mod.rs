//! Standard graphs, the spine-plus-pendant-copies extremal construction, and
//! the catalog of exceptional graphs.

pub mod catalog;
pub mod random;

use thiserror::Error;

use crate::graph::Graph;

pub use catalog::{catalog, CatalogEntry, CatalogId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{kind} needs order at least {min}, got {n}")]
    BadOrder {
        kind: &'static str,
        n: usize,
        min: usize,
    },
    #[error("the attached graph must be connected and non-empty")]
    BadPattern,
    #[error("catalog entry {id} failed its self-check: {reason}")]
    CatalogSelfCheckFailed { id: CatalogId, reason: String },
}

/// P_n on vertices `0..n`, edges `{i, i+1}`.
pub fn path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::BadOrder {
            kind: "path",
            n,
            min: 1,
        });
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges).expect("valid path"))
}

/// C_n: the path plus the edge `{0, n-1}`.
pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::BadOrder {
            kind: "cycle",
            n,
            min: 3,
        });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges).expect("valid cycle"))
}

pub fn complete(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::BadOrder {
            kind: "complete",
            n,
            min: 1,
        });
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_edges(n, &edges).expect("valid clique"))
}

/// Parameters of the extremal construction for target order `n` and
/// attached-graph order `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionParams {
    pub n: usize,
    pub k: usize,
    /// Number of spine vertices carrying a copy: `floor(n / (k + 1))`.
    pub a: usize,
    /// Length of the spine path including the extra tail: `n - k * a`.
    pub b: usize,
}

impl ConstructionParams {
    /// `None` when `n <= k` (the construction degenerates to a path).
    pub fn new(n: usize, k: usize) -> Option<Self> {
        if k == 0 || n <= k {
            return None;
        }
        let a = n / (k + 1);
        Some(ConstructionParams {
            n,
            k,
            a,
            b: n - k * a,
        })
    }
}

/// The extremal graph built from a spine path whose first `a` vertices each
/// carry a private copy of `f`, fully joined to that spine vertex. The last
/// carrying spine vertex also takes the `b - a` remaining spine vertices as
/// pendant neighbours.
///
/// Labels: spine vertices are `0..b`; copy `i` (attached to spine vertex `i`)
/// occupies `b + i*k .. b + (i+1)*k`.
pub fn construction_b(n: usize, f: &Graph) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::BadOrder {
            kind: "construction",
            n,
            min: 1,
        });
    }
    if f.order() == 0 || !f.is_connected() {
        return Err(GenError::BadPattern);
    }
    let Some(p) = ConstructionParams::new(n, f.order()) else {
        return path(n);
    };
    let mut edges = Vec::new();
    for i in 1..p.a {
        edges.push((i - 1, i));
    }
    for j in p.a..p.b {
        edges.push((p.a - 1, j));
    }
    for i in 0..p.a {
        let base = p.b + i * p.k;
        for (u, v) in f.edges() {
            edges.push((base + u, base + v));
        }
        for u in 0..p.k {
            edges.push((i, base + u));
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("construction edges are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::is_isomorphic;

    #[test]
    fn standard_graphs() {
        let p3 = path(3).unwrap();
        assert_eq!(p3.size(), 2);
        assert_eq!(p3.max_degree(), 2);
        let c6 = cycle(6).unwrap();
        assert!((0..6).all(|v| c6.degree(v) == 2));
        assert!(is_isomorphic(&complete(3).unwrap(), &cycle(3).unwrap()).is_some());
        assert!(matches!(cycle(2), Err(GenError::BadOrder { .. })));
        assert!(matches!(path(0), Err(GenError::BadOrder { .. })));
    }

    #[test]
    fn construction_params() {
        for n in 4..60 {
            let p = ConstructionParams::new(n, 3).unwrap();
            assert!(p.a <= p.b && p.b <= p.a + 3, "{p:?}");
            assert_eq!(p.b + 3 * p.a, n);
        }
        assert_eq!(ConstructionParams::new(3, 3), None);
    }

    #[test]
    fn construction_shapes() {
        let p3 = path(3).unwrap();
        assert_eq!(construction_b(3, &p3).unwrap(), p3);
        // n = 4: one spine vertex joined to all of a 3-path.
        let b4 = construction_b(4, &p3).unwrap();
        assert_eq!(b4.degree(0), 3);
        assert_eq!(b4.size(), 5);
        let b8 = construction_b(8, &p3).unwrap();
        assert_eq!(b8.order(), 8);
        assert!(b8.is_connected());
        assert_eq!(b8.max_degree(), 4);
        for n in 1..=40 {
            let b = construction_b(n, &p3).unwrap();
            assert_eq!(b.order(), n);
            assert!(b.is_connected());
        }
        assert_eq!(
            construction_b(5, &Graph::empty(2)),
            Err(GenError::BadPattern)
        );
    }
}
