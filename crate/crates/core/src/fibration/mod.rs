//! Combinatorics behind fibering commutator covers over the circle: the
//! octahedral local model for cut-and-paste of hypersurfaces, the
//! doubling fundamental domain `D`, and the positive-region criterion.

mod domain;
mod dplus;
mod local;

pub use domain::{doubling_domain, ChamberDomain, DoublingStep, HypersurfaceClass, Panel, DOMAIN_LIMIT_VAR};
pub use dplus::{
    dplus_check, dplus_from_panels, panel_signs, search_orientations, DplusReport, OrientationAssignment,
    ORIENTATION_LIMIT_VAR,
};
pub use local::{
    ball_b, boundary_b, octahedron_model, quadrants, sheet, sheet_quadrants, sheets_containing, OctahedronModel,
    SignedFunction,
};
