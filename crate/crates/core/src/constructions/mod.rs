//! Explicit proper edge colorings, each returned together with the palette
//! bound it is guaranteed to meet.
//!
//! Every public construction checks its own output before returning: the
//! coloring must be total and proper, and its number of distinct palettes
//! must not exceed the claimed bound. A violation surfaces as
//! [`ConstructionError::Internal`] rather than a silently weaker result.

mod auto;
mod biregular;
mod complete;
mod even;
mod grid;

use std::fmt;

pub use auto::color_biregular_auto;
pub use biregular::{
    color_2_odd, color_2_odd_with_budget, color_3_3r, color_3_5, color_4_4r, color_5_5r, color_r_2r,
    DEFAULT_INTERVAL_BUDGET,
};
pub use complete::color_complete_bipartite;
pub use even::{color_deg5, color_even_bipartite, color_via_doubling, doubling_bound, even_bipartite_bound};
pub use grid::{color_grid, grid_palette_index};

use crate::analysis::{palette_summary, verify_proper};
use crate::coloring::EdgeColoring;
use crate::error::ConstructionError;
use crate::graph::{Graph, VertexId};

/// Which construction produced a coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Construction {
    EvenBipartite,
    Doubling,
    Degree5Matching,
    Grid,
    CompleteBipartite,
    /// `(3, 3r)` split-and-match.
    ThreeByThreeR,
    /// `(3r-3, 3r)` split-and-match.
    ThreeRMinusThree,
    /// `(4, 4r)` red/blue split.
    FourByFourR,
    /// `(4r-4, 4r)` red/blue split.
    FourRMinusFour,
    FiveByFiveR,
    RByTwoR,
    ThreeByFive,
    /// `(2, 2r+1)` cyclic reduction of an interval coloring.
    TwoByOdd,
    Star,
    RegularKonig,
    BiregularKonig,
}

impl Construction {
    pub fn tag(self) -> &'static str {
        match self {
            Construction::EvenBipartite => "even-bipartite",
            Construction::Doubling => "doubling",
            Construction::Degree5Matching => "deg5-matching",
            Construction::Grid => "grid",
            Construction::CompleteBipartite => "complete-bipartite",
            Construction::ThreeByThreeR => "biregular-3-3r",
            Construction::ThreeRMinusThree => "biregular-3r-3-3r",
            Construction::FourByFourR => "biregular-4-4r",
            Construction::FourRMinusFour => "biregular-4r-4-4r",
            Construction::FiveByFiveR => "biregular-5-5r",
            Construction::RByTwoR => "biregular-r-2r",
            Construction::ThreeByFive => "biregular-3-5",
            Construction::TwoByOdd => "biregular-2-odd",
            Construction::Star => "star",
            Construction::RegularKonig => "konig-regular",
            Construction::BiregularKonig => "konig-biregular",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionResult {
    pub coloring: EdgeColoring,
    pub claimed_palette_bound: u64,
    pub construction: Construction,
    pub colors_used: usize,
}

/// `n choose k`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

pub(crate) fn first_isolated(g: &Graph) -> Option<VertexId> {
    (0..g.vertex_count()).find(|&v| g.degree(v) == 0)
}

pub(crate) fn profile_mismatch(expected: &str, g: &Graph) -> ConstructionError {
    let found = match crate::graph::biregular_profile(g) {
        Some(p) => format!("({}, {})-biregular", p.a, p.b),
        None => "a non-biregular graph".to_string(),
    };
    ConstructionError::ProfileMismatch {
        expected: expected.to_string(),
        found,
    }
}

/// Validate a finished coloring and package it.
pub(crate) fn finish(
    g: &Graph,
    coloring: EdgeColoring,
    bound: u64,
    construction: Construction,
) -> Result<ConstructionResult, ConstructionError> {
    let internal = |msg: String| ConstructionError::Internal(format!("{construction}: {msg}"));
    if let Some(e) = coloring.first_uncolored() {
        return Err(internal(format!("edge {e} left uncolored")));
    }
    let violations = verify_proper(g, &coloring).map_err(|e| internal(e.to_string()))?;
    if let Some(v) = violations.first() {
        return Err(internal(format!("improper at vertex {}", v.vertex)));
    }
    let summary = palette_summary(g, &coloring).map_err(|e| internal(e.to_string()))?;
    if summary.distinct_palettes as u64 > bound {
        return Err(internal(format!(
            "{} palettes exceed the bound {bound}",
            summary.distinct_palettes
        )));
    }
    Ok(ConstructionResult {
        colors_used: coloring.colors_used(),
        coloring,
        claimed_palette_bound: bound,
        construction,
    })
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(30, 15), 155_117_520);
    }
}
