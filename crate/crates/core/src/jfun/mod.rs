//! Genus-zero J-function coefficients of flag manifolds through their
//! abelianization, plus independent evaluation paths used for cross-checks.

mod engine;
mod factored;
mod formulas;
mod lifts;

pub use engine::{assemble, check_homogeneous, toric_divisors, toric_fraction, toric_j, AbelianQuotient, TwistSpec};
pub use factored::{hyperfactor, FactoredFraction, LinearFactor};
pub use formulas::{
    abelianized_i, flag_j, grassmannian_j, j_function, lagrangian_j, laurent_flag_equal, product_grass_twisted_i,
    product_summand, quotient_for, window_stable, Method, WINDOW,
};
pub use lifts::{bounded_compositions, enumerate_lifts, lifts_in_window, DegreeVector, LiftTuple};
