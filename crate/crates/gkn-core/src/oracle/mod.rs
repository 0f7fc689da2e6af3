//! Exact-rational verification that plane points with multiplicity demands
//! impose independent conditions on the curves of a given degree.
//!
//! A point of multiplicity demand `s` contributes the vanishing of all
//! partial derivatives of order `< s` in an affine chart: `s(s+1)/2` linear
//! conditions on the `(d+1)(d+2)/2` coefficients of a degree-`d` form. The
//! conditions are independent iff the evaluation/jet matrix has rank equal
//! to the smaller of the condition count and `h⁰(O(d))`.

mod matrix;
mod random;

pub use matrix::{exact_rank, RationalMatrix};
pub use random::{
    random_configuration, random_configuration_with_stream, verify_plane_severi,
    SeveriVerifySummary, DEFAULT_COORDINATE_BOUND, GENERATOR_ID,
};

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Criteria(#[from] crate::criteria::CriteriaError),
    #[error("point count {0} is too large for this machine")]
    CountTooLarge(BigInt),
    #[error("a plane point needs at least one nonzero coordinate")]
    ZeroPoint,
    #[error("duplicate points in the scheme: {0}")]
    DuplicatePoints(String),
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("cannot place {count} distinct points on the {grid} integer points with coordinates in [-{bound}, {bound}]")]
    GridExhausted {
        count: usize,
        bound: i64,
        grid: u128,
    },
    #[error("coordinate bound must be at least 1, got {0}")]
    BadCoordinateBound(i64),
    #[error("point count must be at least 1")]
    EmptyConfiguration,
    #[error("invalid rational coordinate {value:?}: {reason}")]
    BadCoordinate { value: String, reason: String },
    #[error("chart {chart} is invalid for point {point}: coordinate is zero")]
    InvalidChart { chart: usize, point: String },
}

/// A point of the projective plane with exact rational homogeneous
/// coordinates, normalized so the last nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanePoint {
    coords: [BigRational; 3],
}

impl PlanePoint {
    pub fn new(x: BigRational, y: BigRational, z: BigRational) -> Result<Self, OracleError> {
        let coords = [x, y, z];
        let last_nonzero = coords
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or(OracleError::ZeroPoint)?;
        let scale = coords[last_nonzero].clone();
        Ok(Self {
            coords: coords.map(|c| c / &scale),
        })
    }

    pub fn from_integers(x: i64, y: i64, z: i64) -> Result<Self, OracleError> {
        let r = |v: i64| BigRational::from(BigInt::from(v));
        Self::new(r(x), r(y), r(z))
    }

    pub fn coords(&self) -> &[BigRational; 3] {
        &self.coords
    }

    /// Index of the canonical affine chart: the last nonzero coordinate,
    /// which normalization pinned to 1.
    pub fn canonical_chart(&self) -> usize {
        self.coords
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("normalized point has a nonzero coordinate")
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}:{}:{})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// Plane points with multiplicity demands against the degree-`d` system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConditionScheme {
    degree: u32,
    points: Vec<(PlanePoint, u32)>,
}

impl PointConditionScheme {
    pub fn new(degree: u32, points: Vec<(PlanePoint, u32)>) -> Result<Self, OracleError> {
        if points.iter().any(|(_, m)| *m == 0) {
            return Err(OracleError::ZeroMultiplicity);
        }
        let mut seen = HashSet::new();
        let mut duplicates = Vec::new();
        for (p, _) in &points {
            if !seen.insert(p.clone()) {
                duplicates.push(p.to_string());
            }
        }
        if !duplicates.is_empty() {
            return Err(OracleError::DuplicatePoints(duplicates.join(", ")));
        }
        Ok(Self { degree, points })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn points(&self) -> &[(PlanePoint, u32)] {
        &self.points
    }

    /// `Σ s(s+1)/2` over the multiplicity demands.
    pub fn expected_conditions(&self) -> usize {
        self.points
            .iter()
            .map(|(_, s)| (*s as usize) * (*s as usize + 1) / 2)
            .sum()
    }

    /// `h⁰(O(d)) = (d+1)(d+2)/2`, the capacity of the degree-`d` system.
    pub fn h0(&self) -> usize {
        let d = self.degree as usize;
        (d + 1) * (d + 2) / 2
    }

    /// The jet matrix in each point's canonical chart.
    pub fn evaluation_matrix(&self) -> RationalMatrix {
        let charts: Vec<usize> = self
            .points
            .iter()
            .map(|(p, _)| p.canonical_chart())
            .collect();
        self.evaluation_matrix_in_charts(&charts)
            .expect("canonical charts are always valid")
    }

    /// The jet matrix with an explicit chart per point; any chart whose
    /// coordinate is nonzero at the point is valid, and every valid choice
    /// yields the same rank.
    pub fn evaluation_matrix_in_charts(
        &self,
        charts: &[usize],
    ) -> Result<RationalMatrix, OracleError> {
        assert_eq!(charts.len(), self.points.len(), "one chart per point");
        let monomials = monomials_of_degree(self.degree);
        let mut rows = Vec::with_capacity(self.expected_conditions());
        for ((point, mult), &chart) in self.points.iter().zip(charts) {
            if chart > 2 || point.coords[chart].is_zero() {
                return Err(OracleError::InvalidChart {
                    chart,
                    point: point.to_string(),
                });
            }
            rows.extend(jet_rows(point, *mult, chart, &monomials));
        }
        Ok(RationalMatrix::from_rows(rows))
    }
}

/// Exponent triples `(a, b, c)` with `a+b+c = d` in graded-lex order with
/// `x > y > z`.
fn monomials_of_degree(d: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::with_capacity(((d as usize + 1) * (d as usize + 2)) / 2);
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push((a, b, d - a - b));
        }
    }
    out
}

/// Falling factorial `e(e−1)⋯(e−order+1)` as an exact integer.
fn falling_factorial(e: u32, order: u32) -> BigInt {
    if order > e {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..order {
        acc *= BigInt::from(e - i);
    }
    acc
}

/// Rows for one point: all partials of order `< mult` of the dehomogenized
/// monomials, evaluated at the point's affine coordinates in `chart`.
/// Orders run 0, 1, …, mult−1; within order `m` the row for `∂ᵢ∂ⱼ` with
/// `i + j = m` comes in decreasing `i`. The order-0 row is plain evaluation.
fn jet_rows(
    point: &PlanePoint,
    mult: u32,
    chart: usize,
    monomials: &[(u32, u32, u32)],
) -> Vec<Vec<BigRational>> {
    let (u_idx, v_idx) = match chart {
        0 => (1, 2),
        1 => (0, 2),
        2 => (0, 1),
        _ => unreachable!("chart index is 0, 1 or 2"),
    };
    let scale = &point.coords[chart];
    let u0 = &point.coords[u_idx] / scale;
    let v0 = &point.coords[v_idx] / scale;
    let max_degree = monomials.first().map_or(0, |(a, _, _)| *a) as usize;

    // Power tables keep the inner loop multiplication-only.
    let powers = |base: &BigRational| -> Vec<BigRational> {
        let mut table = Vec::with_capacity(max_degree + 1);
        table.push(BigRational::one());
        for i in 0..max_degree {
            let next = &table[i] * base;
            table.push(next);
        }
        table
    };
    let u_pow = powers(&u0);
    let v_pow = powers(&v0);

    let exponents = |m: &(u32, u32, u32), idx: usize| match idx {
        0 => m.0,
        1 => m.1,
        _ => m.2,
    };

    let mut rows = Vec::new();
    for order in 0..mult {
        for i in (0..=order).rev() {
            let j = order - i;
            let row = monomials
                .iter()
                .map(|mono| {
                    let eu = exponents(mono, u_idx);
                    let ev = exponents(mono, v_idx);
                    if i > eu || j > ev {
                        return BigRational::zero();
                    }
                    let coeff = falling_factorial(eu, i) * falling_factorial(ev, j);
                    BigRational::from(coeff) * &u_pow[(eu - i) as usize] * &v_pow[(ev - j) as usize]
                })
                .collect();
            rows.push(row);
        }
    }
    rows
}

/// Outcome of the independence test for one scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub expected_conditions: usize,
    /// Rank equals the smaller of the condition count and `h⁰(O(d))`.
    pub independent: bool,
    /// `h⁰(O(d)) − rank`: dimension of the system through the scheme.
    pub residual_dimension: usize,
}

/// Builds the jet matrix and decides independence by exact rank.
pub fn independent_conditions(scheme: &PointConditionScheme) -> RankReport {
    let matrix = scheme.evaluation_matrix();
    let rank = exact_rank(&matrix);
    let expected = scheme.expected_conditions();
    let h0 = scheme.h0();
    RankReport {
        rows: matrix.rows(),
        cols: matrix.cols(),
        rank,
        expected_conditions: expected,
        independent: rank == expected.min(h0),
        residual_dimension: h0 - rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn simple_points(pts: &[(i64, i64, i64)]) -> Vec<(PlanePoint, u32)> {
        pts.iter()
            .map(|&(x, y, z)| (PlanePoint::from_integers(x, y, z).unwrap(), 1))
            .collect()
    }

    #[test]
    fn normalization_pins_last_nonzero_coordinate() {
        let p = PlanePoint::from_integers(2, 4, 2).unwrap();
        assert_eq!(p.coords()[0], rat(1));
        assert_eq!(p.coords()[1], rat(2));
        assert_eq!(p.coords()[2], rat(1));
        assert_eq!(p.canonical_chart(), 2);

        let q = PlanePoint::from_integers(3, 6, 0).unwrap();
        assert_eq!(q.canonical_chart(), 1);
        assert_eq!(q.coords()[1], rat(1));

        assert_eq!(
            PlanePoint::from_integers(0, 0, 0),
            Err(OracleError::ZeroPoint)
        );
    }

    #[test]
    fn equal_points_compare_equal_after_normalization() {
        let a = PlanePoint::from_integers(1, 2, 3).unwrap();
        let b = PlanePoint::new(
            BigRational::new(BigInt::from(2), BigInt::from(3)),
            BigRational::new(BigInt::from(4), BigInt::from(3)),
            rat(2),
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn duplicate_points_are_rejected_with_names() {
        let pts = simple_points(&[(1, 0, 1), (2, 0, 2)]);
        let err = PointConditionScheme::new(1, pts).unwrap_err();
        match err {
            OracleError::DuplicatePoints(list) => assert!(list.contains("(1:0:1)")),
            other => panic!("expected duplicate error, got {other:?}"),
        }
    }

    #[test]
    fn degree_zero_single_point() {
        let scheme = PointConditionScheme::new(0, simple_points(&[(2, 5, 1)])).unwrap();
        let m = scheme.evaluation_matrix();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert_eq!(*m.at(0, 0), rat(1));
        let report = independent_conditions(&scheme);
        assert_eq!(report.rank, 1);
        assert!(report.independent);
        assert_eq!(report.residual_dimension, 0);
    }

    #[test]
    fn coordinate_triangle_gives_identity_pattern() {
        let scheme =
            PointConditionScheme::new(1, simple_points(&[(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
                .unwrap();
        let m = scheme.evaluation_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(*m.at(i, j), rat((i == j) as i64));
            }
        }
        assert_eq!(independent_conditions(&scheme).rank, 3);
    }

    #[test]
    fn collinear_points_drop_rank() {
        let scheme =
            PointConditionScheme::new(1, simple_points(&[(1, 0, 1), (0, 1, 1), (1, 1, 2)]))
                .unwrap();
        let report = independent_conditions(&scheme);
        assert_eq!(report.rank, 2);
        assert!(!report.independent);
        assert_eq!(report.residual_dimension, 1);
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        assert_eq!(
            monomials_of_degree(2),
            vec![
                (2, 0, 0),
                (1, 1, 0),
                (1, 0, 1),
                (0, 2, 0),
                (0, 1, 1),
                (0, 0, 2)
            ]
        );
    }

    #[test]
    fn jet_rows_match_hand_derivatives() {
        // Double point at (2, 3, 1): rows are f, f_x, f_y of the
        // dehomogenized form. For the monomial x^2 (triple (2,0,0)):
        // f = 4, f_x = 2·2 = 4, f_y = 0.
        let p = PlanePoint::from_integers(2, 3, 1).unwrap();
        let scheme = PointConditionScheme::new(2, vec![(p, 2)]).unwrap();
        let m = scheme.evaluation_matrix();
        assert_eq!(m.rows(), 3);
        assert_eq!(m.cols(), 6);
        // columns: x², xy, xz, y², yz, z²
        assert_eq!(m.row(0), &[rat(4), rat(6), rat(2), rat(9), rat(3), rat(1)]);
        assert_eq!(m.row(1), &[rat(4), rat(3), rat(1), rat(0), rat(0), rat(0)]);
        assert_eq!(m.row(2), &[rat(0), rat(2), rat(0), rat(6), rat(1), rat(0)]);
    }

    #[test]
    fn nine_double_points_leave_the_double_cubic() {
        // 27 conditions on the 28-dimensional sextic system: rank 27 and a
        // one-dimensional residual (the double cubic through the nine points).
        let mut rng = ChaCha8Rng::seed_from_u64(90);
        let mut pts = HashSet::new();
        while pts.len() < 9 {
            pts.insert((rng.gen_range(-50i64..=50), rng.gen_range(-50i64..=50)));
        }
        let points: Vec<(PlanePoint, u32)> = pts
            .into_iter()
            .map(|(x, y)| (PlanePoint::from_integers(x, y, 1).unwrap(), 2))
            .collect();
        let scheme = PointConditionScheme::new(6, points).unwrap();
        let report = independent_conditions(&scheme);
        assert_eq!(report.expected_conditions, 27);
        assert_eq!(report.rank, 27);
        assert!(report.independent);
        assert_eq!(report.residual_dimension, 1);
    }

    #[test]
    fn ten_points_on_cubics_are_independent() {
        let scheme = random_configuration(3, 10, 1, 100, 1).unwrap();
        let report = independent_conditions(&scheme);
        assert_eq!(report.rank, 10);
        assert!(report.independent);
    }

    fn arb_point() -> impl Strategy<Value = PlanePoint> {
        (-9i64..=9, -9i64..=9, -9i64..=9).prop_filter_map("nonzero point", |(x, y, z)| {
            PlanePoint::from_integers(x, y, z).ok()
        })
    }

    fn arb_scheme() -> impl Strategy<Value = PointConditionScheme> {
        (
            1u32..=4,
            prop::collection::vec((arb_point(), 1u32..=3), 1..=6),
        )
            .prop_filter_map("distinct points", |(degree, points)| {
                PointConditionScheme::new(degree, points).ok()
            })
    }

    proptest! {
        // Appending a point or raising a multiplicity never lowers the rank.
        #[test]
        fn rank_is_monotone(scheme in arb_scheme(), extra in arb_point()) {
            let base = independent_conditions(&scheme).rank;
            let mut with_extra = scheme.points().to_vec();
            if let Some(slot) = with_extra.iter_mut().find(|(p, _)| p == &extra) {
                slot.1 += 1;
            } else {
                with_extra.push((extra, 1));
            }
            let bigger = PointConditionScheme::new(scheme.degree(), with_extra).unwrap();
            prop_assert!(independent_conditions(&bigger).rank >= base);
        }

        // Rank never exceeds min(h0, condition count).
        #[test]
        fn rank_respects_caps(scheme in arb_scheme()) {
            let report = independent_conditions(&scheme);
            prop_assert!(report.rank <= scheme.h0());
            prop_assert!(report.rank <= report.expected_conditions);
        }

        // Any valid chart assignment gives the same rank.
        #[test]
        fn chart_choice_does_not_change_rank(scheme in arb_scheme(), picks in prop::collection::vec(0usize..3, 6)) {
            let canonical = independent_conditions(&scheme).rank;
            let charts: Vec<usize> = scheme
                .points()
                .iter()
                .zip(&picks)
                .map(|((p, _), &pick)| {
                    let valid: Vec<usize> =
                        (0..3).filter(|&c| !p.coords()[c].is_zero()).collect();
                    valid[pick % valid.len()]
                })
                .collect();
            let m = scheme.evaluation_matrix_in_charts(&charts).unwrap();
            prop_assert_eq!(exact_rank(&m), canonical);
        }

        // An invertible projective change of coordinates preserves the rank.
        #[test]
        fn projective_invariance(scheme in arb_scheme(), entries in prop::collection::vec(-5i64..=5, 9)) {
            let det = entries[0] * (entries[4] * entries[8] - entries[5] * entries[7])
                - entries[1] * (entries[3] * entries[8] - entries[5] * entries[6])
                + entries[2] * (entries[3] * entries[7] - entries[4] * entries[6]);
            prop_assume!(det != 0);
            let transformed: Vec<(PlanePoint, u32)> = scheme
                .points()
                .iter()
                .map(|(p, m)| {
                    let c = p.coords();
                    let apply = |row: &[i64]| {
                        BigRational::from(BigInt::from(row[0])) * &c[0]
                            + BigRational::from(BigInt::from(row[1])) * &c[1]
                            + BigRational::from(BigInt::from(row[2])) * &c[2]
                    };
                    let q = PlanePoint::new(
                        apply(&entries[0..3]),
                        apply(&entries[3..6]),
                        apply(&entries[6..9]),
                    )
                    .expect("invertible image of a point is a point");
                    (q, *m)
                })
                .collect();
            let image = PointConditionScheme::new(scheme.degree(), transformed).unwrap();
            prop_assert_eq!(
                independent_conditions(&image).rank,
                independent_conditions(&scheme).rank
            );
        }
    }
}
