//! Analysis on the interval `[1, |A|]`: the midpoint, mirror chains of
//! offsets, distance functions, and Rolle/Darboux instance checks.

mod calculus;
mod chain;
mod distance;
mod midpoint;

pub use calculus::{
    central_difference, default_bisection_tolerance, verify_darboux, verify_rolle,
    DarbouxWitness, RolleReport, RolleSample, Subinterval,
};
pub use chain::{delta_chain, mirrored_chain_g, ChainDirection, DeltaChain};
pub use distance::{
    distance_d, log_distance, solve_distance_equals_value, DistanceSolution, LogDistance,
    LOG_DISTANCE_BITS, SOLVER_TOLERANCE,
};
pub use midpoint::{midpoint, midpoint_value_exponent, vertex, Midpoint};
