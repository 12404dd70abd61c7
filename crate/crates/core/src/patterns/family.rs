use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

/// The family of graphs an isolating set has to destroy.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum IsolationFamily {
    K1,
    K2,
    K3,
    #[default]
    P3,
    /// Cycles of exactly this length (not necessarily induced).
    Cycle(usize),
    /// Every cycle.
    AnyCycle,
    /// An explicit list of connected graphs.
    FiniteList(Vec<Graph>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("cycle length must be at least 3, got {0}")]
    ShortCycle(usize),
    #[error("family member {0} is not connected")]
    Disconnected(usize),
    #[error("family member {0} has no vertices")]
    EmptyMember(usize),
    #[error("unknown family `{0}` (expected k1, k2, k3, p3, cycle, cycle:K)")]
    Unknown(String),
}

impl IsolationFamily {
    pub fn cycle(k: usize) -> Result<Self, FamilyError> {
        if k < 3 {
            return Err(FamilyError::ShortCycle(k));
        }
        Ok(IsolationFamily::Cycle(k))
    }

    pub fn finite_list(graphs: Vec<Graph>) -> Result<Self, FamilyError> {
        for (i, g) in graphs.iter().enumerate() {
            if g.order() == 0 {
                return Err(FamilyError::EmptyMember(i));
            }
            if !g.is_connected() {
                return Err(FamilyError::Disconnected(i));
            }
        }
        Ok(IsolationFamily::FiniteList(graphs))
    }

    /// The fewest vertices a member of the family can have.
    pub fn min_order(&self) -> usize {
        match self {
            IsolationFamily::K1 => 1,
            IsolationFamily::K2 => 2,
            IsolationFamily::K3 | IsolationFamily::P3 | IsolationFamily::AnyCycle => 3,
            IsolationFamily::Cycle(k) => *k,
            IsolationFamily::FiniteList(gs) => {
                gs.iter().map(Graph::order).min().unwrap_or(usize::MAX)
            }
        }
    }
}

impl fmt::Display for IsolationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsolationFamily::K1 => f.write_str("k1"),
            IsolationFamily::K2 => f.write_str("k2"),
            IsolationFamily::K3 => f.write_str("k3"),
            IsolationFamily::P3 => f.write_str("p3"),
            IsolationFamily::Cycle(k) => write!(f, "cycle:{k}"),
            IsolationFamily::AnyCycle => f.write_str("cycle"),
            IsolationFamily::FiniteList(gs) => write!(f, "list({})", gs.len()),
        }
    }
}

impl FromStr for IsolationFamily {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "k1" => Ok(IsolationFamily::K1),
            "k2" => Ok(IsolationFamily::K2),
            "k3" => Ok(IsolationFamily::K3),
            "p3" => Ok(IsolationFamily::P3),
            "cycle" => Ok(IsolationFamily::AnyCycle),
            other => match other.strip_prefix("cycle:").map(str::parse::<usize>) {
                Some(Ok(k)) => IsolationFamily::cycle(k),
                _ => Err(FamilyError::Unknown(s.to_string())),
            },
        }
    }
}

impl Serialize for IsolationFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
