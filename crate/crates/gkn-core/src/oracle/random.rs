//! Seeded random point configurations and the statistical Severi check.
//!
//! All randomness comes from ChaCha8, a splittable counter-based generator:
//! one seed plus a stream index fully determines a configuration, and every
//! report names the generator. The trials of [`verify_plane_severi`] run
//! concurrently on derived streams and are merged by trial index, so the
//! summary is deterministic regardless of scheduling.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{independent_conditions, OracleError, PlanePoint, PointConditionScheme};
use crate::criteria::plane_severi_bound;

/// Algorithm identifier quoted in every randomized report.
pub const GENERATOR_ID: &str = "chacha8";

/// Coordinate bound used by [`verify_plane_severi`].
pub const DEFAULT_COORDINATE_BOUND: i64 = 1000;

/// `count` distinct points with integer coordinates uniform in
/// `[-bound, bound]²` on the affine chart `z = 1`, each with the same
/// multiplicity demand. Deterministic for a given seed (stream 0).
pub fn random_configuration(
    degree: u32,
    count: usize,
    multiplicity: u32,
    bound: i64,
    seed: u64,
) -> Result<PointConditionScheme, OracleError> {
    random_configuration_with_stream(degree, count, multiplicity, bound, seed, 0)
}

/// [`random_configuration`] on an explicit ChaCha stream; stream indices
/// split one seed into independent deterministic substreams.
pub fn random_configuration_with_stream(
    degree: u32,
    count: usize,
    multiplicity: u32,
    bound: i64,
    seed: u64,
    stream: u64,
) -> Result<PointConditionScheme, OracleError> {
    if count == 0 {
        return Err(OracleError::EmptyConfiguration);
    }
    if bound < 1 {
        return Err(OracleError::BadCoordinateBound(bound));
    }
    let side = 2 * (bound as u128) + 1;
    let grid = side * side;
    if (count as u128) > grid {
        return Err(OracleError::GridExhausted { count, bound, grid });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut seen = HashSet::with_capacity(count);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let x = rng.gen_range(-bound..=bound);
        let y = rng.gen_range(-bound..=bound);
        if seen.insert((x, y)) {
            let point = PlanePoint::from_integers(x, y, 1).expect("z = 1 point is nonzero");
            points.push((point, multiplicity));
        }
    }
    PointConditionScheme::new(degree, points)
}

/// Statistical check of the plane Severi bound at degree `n` and level `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeveriVerifySummary {
    pub n: BigInt,
    pub k: u32,
    /// The node count under test, `plane_severi_bound(n, k)`.
    pub delta: usize,
    /// Degree of the target system, `n − 3 − k`.
    pub target_degree: u32,
    /// `h⁰` of the target system; equals `delta`.
    pub h0: usize,
    pub trials: u32,
    /// Trials where `delta` random simple points imposed independent conditions.
    pub independent_trials: u32,
    /// Trials where `delta + 1` points topped out at rank `h⁰`.
    pub capacity_trials: u32,
    pub seed: u64,
    pub coordinate_bound: i64,
    pub generator: &'static str,
}

/// Runs `trials` random configurations of `δ = plane_severi_bound(n, k)`
/// simple points against the degree `n−3−k` system, counting how often they
/// impose independent conditions; a second configuration of `δ + 1` points
/// confirms the bound is the capacity `h⁰` (rank caps there).
pub fn verify_plane_severi(
    n: &BigInt,
    k: u32,
    trials: u32,
    seed: u64,
) -> Result<SeveriVerifySummary, OracleError> {
    let bound = plane_severi_bound(n, k)?;
    let delta = bound
        .bound
        .to_usize()
        .ok_or_else(|| OracleError::CountTooLarge(bound.bound.clone()))?;
    let target_degree = (n - BigInt::from(k) - BigInt::from(3))
        .to_u32()
        .expect("plane_severi_bound already checked n - 3 - k >= 0");
    let h0 = (target_degree as usize + 1) * (target_degree as usize + 2) / 2;
    debug_assert_eq!(h0, delta, "the bound is h0 of the target system");

    let outcomes: Vec<(bool, bool)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            // Streams 2t+1 and 2t+2: stream 0 stays reserved for direct calls.
            let at_bound = random_configuration_with_stream(
                target_degree,
                delta,
                1,
                DEFAULT_COORDINATE_BOUND,
                seed,
                2 * trial as u64 + 1,
            )?;
            let over_bound = random_configuration_with_stream(
                target_degree,
                delta + 1,
                1,
                DEFAULT_COORDINATE_BOUND,
                seed,
                2 * trial as u64 + 2,
            )?;
            let independent = independent_conditions(&at_bound).independent;
            let capped = independent_conditions(&over_bound).rank == h0;
            Ok((independent, capped))
        })
        .collect::<Result<_, OracleError>>()?;

    let independent_trials = outcomes.iter().filter(|(ind, _)| *ind).count() as u32;
    let capacity_trials = outcomes.iter().filter(|(_, cap)| *cap).count() as u32;
    Ok(SeveriVerifySummary {
        n: n.clone(),
        k,
        delta,
        target_degree,
        h0,
        trials,
        independent_trials,
        capacity_trials,
        seed,
        coordinate_bound: DEFAULT_COORDINATE_BOUND,
        generator: GENERATOR_ID,
    })
}
