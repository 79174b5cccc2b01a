//! Rational homology of simplicial and cubical complexes.

mod betti;
mod chain;
mod collapse;
mod manifold;
pub mod rank;

pub use betti::BettiVector;
pub use chain::ChainComplex;
pub use collapse::{ball_report, greedy_collapse, is_homology_ball, BallReport, BallVerdict};
pub use manifold::{has_sphere_homology, is_ghd, is_ghs, is_pseudomanifold, spherical_links_codim};

use crate::error::Result;
use crate::simplicial::SimplicialComplex;

/// Betti numbers over ℚ, degrees `0..=dim`.
pub fn betti_numbers(k: &SimplicialComplex) -> Vec<usize> {
    ChainComplex::simplicial(k, &[]).betti_numbers()
}

/// Betti numbers as a fully known `BettiVector`.
pub fn betti(k: &SimplicialComplex) -> BettiVector {
    BettiVector::from_counts(&betti_numbers(k))
}

/// Relative Betti numbers of `k` modulo the listed simplices, which must
/// form a subcomplex (closed under faces).
pub(crate) fn relative_betti_numbers(k: &SimplicialComplex, sub: &[Vec<usize>]) -> Vec<usize> {
    ChainComplex::simplicial(k, sub).betti_numbers()
}

/// Relative Betti numbers `H_*(K, A)`, with `A` matched to `K` by label.
pub fn relative_betti(k: &SimplicialComplex, a: &SimplicialComplex) -> Result<BettiVector> {
    let map = k.embedding_of(a)?;
    let faces: Vec<Vec<usize>> = a
        .all_simplices()
        .iter()
        .skip(1)
        .flatten()
        .map(|s| {
            let mut t: Vec<usize> = s.iter().map(|&v| map[v]).collect();
            t.sort_unstable();
            t
        })
        .collect();
    Ok(BettiVector::from_counts(&relative_betti_numbers(k, &faces)))
}
