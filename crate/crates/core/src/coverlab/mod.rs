//! Finite cover-refinement calculus: refinement, canonical joint
//! refinements, products, images and restrictions of covers, growth
//! witnesses, and the separated-grid counting argument.
//!
//! All function values are exact rationals, so the thresholds 1/2 and 1/3
//! are compared without rounding.

mod counting;
mod cover;
mod separated;
mod witness;

pub use counting::{counting_check, find_min_n, CountingParams, CountingReport};
pub use cover::{
    atoms_refinement, interval_joint_refinement, is_refinement, product_cover, push_cover,
    restrict_cover, subset_points, Cover,
};
pub use separated::{
    build_grid_instance, good_cover_floor, goodness_threshold, is_good, oscillation,
    separated_family, separation_gap, FloorCheck, Rational, SeparatedInstance,
};
pub use witness::{exponent_fit, witness_check, GrowthWitness, WitnessRow};
