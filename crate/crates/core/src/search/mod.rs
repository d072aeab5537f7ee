//! Budgeted search for move certificates between braids.
//!
//! Nodes are conjugacy classes, keyed by [`conj_key`](crate::garside::conj_key).
//! Edges are single Markov moves: positive stabilizations of a few
//! representatives, and the destabilizations found by
//! [`destab_candidates`](crate::moves::destab_candidates). In topological
//! mode plain negative (de)stabilizations are added. The search is a
//! bidirectional breadth-first search that expands the smaller frontier.

mod alexander;
mod classes;
mod engine;

use std::fmt;

use thiserror::Error;

use crate::braid::{BraidWord, MAX_STRANDS};
use crate::moves::{Mode, MoveCertificate};

pub use alexander::{alexander_poly, alexander_poly_in, reduced_burau};
pub use classes::{ClassIndex, NodeKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest braid group a path may pass through.
    pub max_strands: usize,
    /// Largest number of Markov moves in a certificate.
    pub max_moves: usize,
    /// Largest number of classes visited, both sides together.
    pub max_nodes: usize,
    /// Super summit sets and destabilization sweeps stop at this size.
    pub max_class_sweep: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_strands: 8,
            max_moves: 12,
            max_nodes: 200_000,
            max_class_sweep: 5000,
        }
    }
}

impl SearchBudget {
    pub fn validate(&self, endpoints: &[&BraidWord]) -> Result<(), SearchError> {
        let fields = [
            ("max_strands", self.max_strands),
            ("max_moves", self.max_moves),
            ("max_nodes", self.max_nodes),
            ("max_class_sweep", self.max_class_sweep),
        ];
        if let Some((name, _)) = fields.iter().find(|(_, v)| *v == 0) {
            return Err(SearchError::Budget(format!("{name} must be positive")));
        }
        if self.max_strands > MAX_STRANDS {
            return Err(SearchError::Budget(format!(
                "max_strands {} exceeds {MAX_STRANDS}",
                self.max_strands
            )));
        }
        if let Some(w) = endpoints.iter().find(|w| w.strands() > self.max_strands) {
            return Err(SearchError::Budget(format!(
                "max_strands {} is below the endpoint strand count {}",
                self.max_strands,
                w.strands()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(MoveCertificate),
    NotFoundWithinBudget { nodes: usize },
    PrunedInvariant(String),
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn status(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "FOUND",
            SearchOutcome::NotFoundWithinBudget { .. } => "NOT_FOUND_WITHIN_BUDGET",
            SearchOutcome::PrunedInvariant(_) => "PRUNED_INVARIANT",
        }
    }
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOutcome::Found(c) => write!(f, "FOUND ({} steps)", c.steps.len()),
            SearchOutcome::NotFoundWithinBudget { nodes } => {
                write!(f, "NOT_FOUND_WITHIN_BUDGET (nodes tried: {nodes})")
            }
            SearchOutcome::PrunedInvariant(r) => write!(f, "PRUNED_INVARIANT ({r})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("malformed budget: {0}")]
    Budget(String),
    #[error("not a candidate unknot: {0}")]
    NotAnUnknot(String),
    #[error("internal error: emitted certificate failed to verify: {0}")]
    Unverified(String),
}

/// Reason the two closures are provably different, if an invariant
/// separates them.
pub fn invariant_mismatch(a: &BraidWord, b: &BraidWord, mode: Mode) -> Option<String> {
    let (ca, cb) = (a.components(), b.components());
    if ca != cb {
        return Some(format!("components {ca} vs {cb}"));
    }
    if mode == Mode::Transversal {
        let (sa, sb) = (a.self_linking(), b.self_linking());
        if sa != sb {
            return Some(format!("self-linking {sa} vs {sb}"));
        }
    }
    let (pa, pb) = (alexander_poly(a), alexander_poly(b));
    if pa != pb {
        return Some(format!("Alexander polynomial {pa} vs {pb}"));
    }
    None
}

/// Searches for a certificate taking `a` to `b`.
pub fn search(
    a: &BraidWord,
    b: &BraidWord,
    budget: &SearchBudget,
    mode: Mode,
) -> Result<SearchOutcome, SearchError> {
    budget.validate(&[a, b])?;
    if let Some(reason) = invariant_mismatch(a, b, mode) {
        return Ok(SearchOutcome::PrunedInvariant(reason));
    }
    engine::run(a, b, budget, mode)
}

/// `σ₁⁻¹σ₂⁻¹⋯σ_{n−1}⁻¹ ∈ B_n`.
pub fn standard_unknot(n: usize) -> BraidWord {
    BraidWord::new(n, (1..n as i32).map(|g| -g).collect()).expect("valid generators")
}

/// Searches from a candidate unknot toward the standard unknot with the
/// same self-linking number.
pub fn reduce_to_standard_unknot(
    b: &BraidWord,
    budget: &SearchBudget,
) -> Result<SearchOutcome, SearchError> {
    if b.components() != 1 {
        return Err(SearchError::NotAnUnknot(format!("{} components", b.components())));
    }
    let poly = alexander_poly(b);
    if !poly.is_one() {
        return Err(SearchError::NotAnUnknot(format!("Alexander polynomial {poly}")));
    }
    let tb = b.self_linking();
    if tb.rem_euclid(2) == 0 || tb > -1 {
        return Err(SearchError::NotAnUnknot(format!("self-linking {tb}")));
    }
    let n = ((1 - tb) / 2) as usize;
    let target = standard_unknot(n);
    search(b, &target, budget, Mode::Transversal)
}
