//! Exact genus-zero J-functions and one-point descendant Gromov-Witten
//! invariants of flag manifolds, Grassmannians and Lagrangian Grassmannians,
//! computed through their toric abelianizations.

pub mod algebra;
pub mod error;
pub mod gw;
pub mod integrate;
pub mod jfun;
pub mod ring;
pub mod schubert;
pub mod serial;

pub use error::{Error, Result};
