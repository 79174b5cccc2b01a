pub mod corpus;
pub mod coxeter;
pub mod davis;
pub mod error;
pub mod fibration;
pub mod rational;
pub mod sphere2;
pub mod homology;
pub mod io;
pub mod l2;
pub mod simplicial;

pub use error::{Error, Result};
