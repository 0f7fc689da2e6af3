//! Shared inputs for the benchmark targets.

use gkn_core::{DivisorClass, SurfaceModel};
use num_bigint::BigInt;

/// The smooth sextic surface in P^3.
pub fn sextic() -> SurfaceModel {
    SurfaceModel::complete_intersection(3, vec![6]).expect("valid model")
}

/// A divisor class `n·H` with a coefficient of `digits` decimal digits, to
/// exercise the arbitrary-precision paths.
pub fn huge_multiple(surface: &SurfaceModel, digits: usize) -> DivisorClass {
    let coefficient: BigInt = format!("9{}", "7".repeat(digits.saturating_sub(1)))
        .parse()
        .expect("digit string");
    surface.multiple_of_hyperplane(&coefficient)
}
