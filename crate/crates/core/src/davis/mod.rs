//! Cubical complexes from right-angled Coxeter groups: finite Davis balls,
//! commutator covers, vertex links and the orbihedral Euler characteristic.

mod ball;
mod cover;
mod cubical;

pub use cover::{chi_orb_consistency, commutator_cover, ChiReport, COVER_LIMIT_VAR};
pub use cubical::{Cell, CubicalComplex};

use crate::rational::Q;
use crate::simplicial::FlagComplex;

/// κ(L) = Σ_{k≥−1} (−1/2)^{k+1} f_k(L); equals χ^orb(Σ_L / W_L).
pub fn kappa(l: &FlagComplex) -> Q {
    l.kappa()
}
