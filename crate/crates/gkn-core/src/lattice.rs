//! Picard lattices of the supported surfaces.
//!
//! A surface is modeled by its intersection form (a symmetric integer Gram
//! matrix), the hyperplane class `H`, the canonical class `K`, and a pair of
//! declared cohomological flags that are not computable from the lattice.
//! Everything is arbitrary-precision integer arithmetic; there is no floating
//! point in this module.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("divisor has {got} coordinates but the lattice rank is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("non-integral genus: inconsistent lattice data (D.(D+K) = {product} is odd)")]
    NonIntegralGenus { product: BigInt },
    #[error("geometric genus would be negative: delta = {delta} exceeds p_a = {pa}")]
    GeometricGenusNegative { delta: BigInt, pa: BigInt },
    #[error("delta must be nonnegative, got {0}")]
    NegativeDelta(BigInt),
    #[error("k must be a positive integer, got {0}")]
    NonPositiveK(BigInt),
    #[error("positivity undecidable for user lattices")]
    PositivityUndecidable,
    #[error("Gram matrix must be square and symmetric")]
    MalformedGram,
    #[error("H^2 = {h_squared} must be positive")]
    NonPositiveDegree { h_squared: BigInt },
    #[error("a complete intersection surface in P^r needs r >= 3 and r-2 hypersurface degrees >= 1 (got r = {ambient_dim}, {count} degrees)")]
    MalformedCompleteIntersection { ambient_dim: u32, count: usize },
}

/// Integer coordinate vector in the Picard-lattice basis of a surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    coords: Vec<BigInt>,
}

impl DivisorClass {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self { coords }
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn scaled(&self, n: &BigInt) -> Self {
        Self::new(self.coords.iter().map(|c| c * n).collect())
    }

    /// `Some(n)` when `self = n * other` for a single integer scalar `n`.
    pub fn integer_multiple_of(&self, other: &DivisorClass) -> Option<BigInt> {
        if self.len() != other.len() || other.coords.iter().all(Zero::is_zero) {
            return None;
        }
        let mut ratio: Option<BigInt> = None;
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if b.is_zero() {
                if !a.is_zero() {
                    return None;
                }
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(a, b);
            if !r.is_zero() {
                return None;
            }
            match &ratio {
                None => ratio = Some(q),
                Some(prev) if *prev != q => return None,
                Some(_) => {}
            }
        }
        ratio
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.len(), rhs.len(), "divisor rank mismatch");
        DivisorClass::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.len(), rhs.len(), "divisor rank mismatch");
        DivisorClass::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            write!(f, "{}H", self.coords[0])
        } else {
            let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// Which of the supported surface families the model describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceKind {
    ProjectivePlane,
    SmoothQuadric,
    CompleteIntersection {
        ambient_dim: u32,
        multidegrees: Vec<u32>,
    },
    GeneralLattice,
}

/// Picard lattice of a surface plus its distinguished classes and declared
/// cohomological flags.
///
/// The flags (`h1_kh_vanishes`, `k_normal`) stand for hypotheses that cannot
/// be read off the lattice; they are hard-wired true for the three built-in
/// kinds and user-asserted for `GeneralLattice`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    kind: SurfaceKind,
    gram: Vec<Vec<BigInt>>,
    hyperplane: DivisorClass,
    canonical: DivisorClass,
    degree: BigInt,
    ambient_dim: Option<u32>,
    h1_kh_vanishes: bool,
    k_normal: bool,
}

impl SurfaceModel {
    /// The plane: rank 1, `H^2 = 1`, `K = -3H`.
    pub fn projective_plane() -> Self {
        Self {
            kind: SurfaceKind::ProjectivePlane,
            gram: vec![vec![BigInt::one()]],
            hyperplane: DivisorClass::from_i64s(&[1]),
            canonical: DivisorClass::from_i64s(&[-3]),
            degree: BigInt::one(),
            ambient_dim: Some(2),
            h1_kh_vanishes: true,
            k_normal: true,
        }
    }

    /// The smooth quadric in P^3 in its two-ruling basis: `H = (1,1)`,
    /// `K = (-2,-2)`, bidegree coordinates.
    pub fn smooth_quadric() -> Self {
        Self {
            kind: SurfaceKind::SmoothQuadric,
            gram: vec![
                vec![BigInt::zero(), BigInt::one()],
                vec![BigInt::one(), BigInt::zero()],
            ],
            hyperplane: DivisorClass::from_i64s(&[1, 1]),
            canonical: DivisorClass::from_i64s(&[-2, -2]),
            degree: BigInt::from(2),
            ambient_dim: Some(3),
            h1_kh_vanishes: true,
            k_normal: true,
        }
    }

    /// A smooth complete intersection surface in P^r cut out by `r-2`
    /// hypersurfaces, modeled with Picard rank 1 generated by `H`
    /// (Noether–Lefschetz-generic assumption): `deg = ∏ dᵢ` and
    /// `K = ((Σ dᵢ) − r − 1) H`.
    pub fn complete_intersection(
        ambient_dim: u32,
        multidegrees: Vec<u32>,
    ) -> Result<Self, LatticeError> {
        if ambient_dim < 3
            || multidegrees.len() != (ambient_dim as usize) - 2
            || multidegrees.iter().any(|&d| d < 1)
        {
            return Err(LatticeError::MalformedCompleteIntersection {
                ambient_dim,
                count: multidegrees.len(),
            });
        }
        let degree: BigInt = multidegrees.iter().map(|&d| BigInt::from(d)).product();
        let degree_sum: i64 = multidegrees.iter().map(|&d| d as i64).sum();
        let canonical_coeff = BigInt::from(degree_sum - ambient_dim as i64 - 1);
        Ok(Self {
            kind: SurfaceKind::CompleteIntersection {
                ambient_dim,
                multidegrees,
            },
            gram: vec![vec![degree.clone()]],
            hyperplane: DivisorClass::from_i64s(&[1]),
            canonical: DivisorClass::new(vec![canonical_coeff]),
            degree,
            ambient_dim: Some(ambient_dim),
            h1_kh_vanishes: true,
            k_normal: true,
        })
    }

    /// A user-supplied lattice. Positivity predicates are undecidable here;
    /// the cohomological flags are taken on faith from the caller.
    pub fn general_lattice(
        gram: Vec<Vec<BigInt>>,
        hyperplane: DivisorClass,
        canonical: DivisorClass,
        h1_kh_vanishes: bool,
        k_normal: bool,
        ambient_dim: Option<u32>,
    ) -> Result<Self, LatticeError> {
        let rank = gram.len();
        if rank == 0 || gram.iter().any(|row| row.len() != rank) {
            return Err(LatticeError::MalformedGram);
        }
        for (i, row) in gram.iter().enumerate() {
            for (j, entry) in row.iter().enumerate().take(i) {
                if *entry != gram[j][i] {
                    return Err(LatticeError::MalformedGram);
                }
            }
        }
        if hyperplane.len() != rank {
            return Err(LatticeError::DimensionMismatch {
                expected: rank,
                got: hyperplane.len(),
            });
        }
        if canonical.len() != rank {
            return Err(LatticeError::DimensionMismatch {
                expected: rank,
                got: canonical.len(),
            });
        }
        let model = Self {
            kind: SurfaceKind::GeneralLattice,
            gram,
            hyperplane,
            canonical,
            degree: BigInt::zero(),
            ambient_dim,
            h1_kh_vanishes,
            k_normal,
        };
        let h_squared = model.intersect(model.hyperplane(), model.hyperplane())?;
        if !h_squared.is_positive() {
            return Err(LatticeError::NonPositiveDegree { h_squared });
        }
        Ok(Self {
            degree: h_squared,
            ..model
        })
    }

    pub fn kind(&self) -> &SurfaceKind {
        &self.kind
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.gram
    }

    pub fn hyperplane(&self) -> &DivisorClass {
        &self.hyperplane
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    /// `H^2`, which is also the degree of the surface.
    pub fn degree(&self) -> &BigInt {
        &self.degree
    }

    /// Dimension of the ambient projective space, when the model knows it.
    pub fn ambient_dim(&self) -> Option<u32> {
        self.ambient_dim
    }

    pub fn h1_kh_vanishes(&self) -> bool {
        self.h1_kh_vanishes
    }

    pub fn k_normal(&self) -> bool {
        self.k_normal
    }

    /// The class `n·H`.
    pub fn multiple_of_hyperplane(&self, n: &BigInt) -> DivisorClass {
        self.hyperplane.scaled(n)
    }

    fn check_rank(&self, d: &DivisorClass) -> Result<(), LatticeError> {
        if d.len() != self.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank(),
                got: d.len(),
            });
        }
        Ok(())
    }

    /// The intersection product `Aᵀ · gram · B`; symmetric and bilinear.
    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Result<BigInt, LatticeError> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        let mut total = BigInt::zero();
        for (i, ai) in a.coords().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords().iter().enumerate() {
                if bj.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                total += ai * &self.gram[i][j] * bj;
            }
        }
        Ok(total)
    }

    /// Self-intersection `D^2`.
    pub fn self_intersection(&self, d: &DivisorClass) -> Result<BigInt, LatticeError> {
        self.intersect(d, d)
    }

    /// Adjunction genus `p_a(D) = D.(D+K)/2 + 1`.
    pub fn arithmetic_genus(&self, d: &DivisorClass) -> Result<BigInt, LatticeError> {
        let product = self.intersect(d, &(d + &self.canonical))?;
        if product.is_odd() {
            return Err(LatticeError::NonIntegralGenus { product });
        }
        Ok(product / 2 + 1)
    }

    /// `p_a(D) − delta` for a curve in `|D|` with `delta` nodes and cusps.
    pub fn geometric_genus(
        &self,
        d: &DivisorClass,
        delta: &BigInt,
    ) -> Result<BigInt, LatticeError> {
        if delta.is_negative() {
            return Err(LatticeError::NegativeDelta(delta.clone()));
        }
        let pa = self.arithmetic_genus(d)?;
        if delta > &pa {
            return Err(LatticeError::GeometricGenusNegative {
                delta: delta.clone(),
                pa,
            });
        }
        Ok(pa - delta)
    }

    /// The Hodge number `ν(D, kH) = k²((D.H)² − D²H²)`; nonnegative when `H`
    /// is ample, zero iff `D` and `H` are proportional.
    pub fn hodge_number(&self, d: &DivisorClass, k: &BigInt) -> Result<BigInt, LatticeError> {
        if !k.is_positive() {
            return Err(LatticeError::NonPositiveK(k.clone()));
        }
        let dh = self.intersect(d, &self.hyperplane)?;
        let d2 = self.self_intersection(d)?;
        Ok(k * k * (&dh * &dh - d2 * &self.degree))
    }

    /// Nef test for the built-in kinds. Rank-1 models: coefficient ≥ 0.
    /// Quadric: both ruling coordinates ≥ 0.
    pub fn is_nef(&self, d: &DivisorClass) -> Result<bool, LatticeError> {
        self.check_rank(d)?;
        match self.kind {
            SurfaceKind::ProjectivePlane | SurfaceKind::CompleteIntersection { .. } => {
                Ok(!d.coords()[0].is_negative())
            }
            SurfaceKind::SmoothQuadric => Ok(d.coords().iter().all(|c| !c.is_negative())),
            SurfaceKind::GeneralLattice => Err(LatticeError::PositivityUndecidable),
        }
    }

    /// Big-and-nef test for the built-in kinds (strict positivity).
    pub fn is_big_and_nef(&self, d: &DivisorClass) -> Result<bool, LatticeError> {
        self.check_rank(d)?;
        match self.kind {
            SurfaceKind::ProjectivePlane | SurfaceKind::CompleteIntersection { .. } => {
                Ok(d.coords()[0].is_positive())
            }
            SurfaceKind::SmoothQuadric => Ok(d.coords().iter().all(Signed::is_positive)),
            SurfaceKind::GeneralLattice => Err(LatticeError::PositivityUndecidable),
        }
    }

    /// `Some(k)` when `K_S = k·H` for a positive integer `k`.
    pub fn canonical_hyperplane_multiple(&self) -> Option<BigInt> {
        self.canonical
            .integer_multiple_of(&self.hyperplane)
            .filter(Signed::is_positive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn sextic() -> SurfaceModel {
        SurfaceModel::complete_intersection(3, vec![6]).unwrap()
    }

    #[test]
    fn builtin_models_match_their_lattices() {
        let p2 = SurfaceModel::projective_plane();
        assert_eq!(p2.rank(), 1);
        assert_eq!(*p2.degree(), int(1));
        assert_eq!(p2.canonical(), &DivisorClass::from_i64s(&[-3]));

        let q = SurfaceModel::smooth_quadric();
        assert_eq!(q.rank(), 2);
        assert_eq!(*q.degree(), int(2));
        assert_eq!(q.intersect(q.hyperplane(), q.hyperplane()).unwrap(), int(2));

        let s = sextic();
        assert_eq!(s.rank(), 1);
        assert_eq!(*s.degree(), int(6));
        // K = 2H on the sextic in P^3
        assert_eq!(s.canonical(), &DivisorClass::from_i64s(&[2]));
        assert_eq!(s.canonical_hyperplane_multiple(), Some(int(2)));
    }

    #[test]
    fn intersection_examples() {
        let q = SurfaceModel::smooth_quadric();
        let h = DivisorClass::from_i64s(&[1, 1]);
        let d = DivisorClass::from_i64s(&[3, 3]);
        assert_eq!(q.intersect(&h, &h).unwrap(), int(2));
        assert_eq!(q.intersect(&d, &h).unwrap(), int(6));

        let p2 = SurfaceModel::projective_plane();
        let d8 = DivisorClass::from_i64s(&[8]);
        let e4 = DivisorClass::from_i64s(&[4]);
        assert_eq!(p2.intersect(&d8, &e4).unwrap(), int(32));
    }

    #[test]
    fn intersection_dimension_mismatch() {
        let q = SurfaceModel::smooth_quadric();
        let bad = DivisorClass::from_i64s(&[1]);
        let h = DivisorClass::from_i64s(&[1, 1]);
        assert_eq!(
            q.intersect(&bad, &h),
            Err(LatticeError::DimensionMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn arithmetic_genus_examples() {
        let p2 = SurfaceModel::projective_plane();
        assert_eq!(
            p2.arithmetic_genus(&DivisorClass::from_i64s(&[8])).unwrap(),
            int(21)
        );
        assert_eq!(
            p2.arithmetic_genus(&DivisorClass::from_i64s(&[1])).unwrap(),
            int(0)
        );

        let q = SurfaceModel::smooth_quadric();
        assert_eq!(
            q.arithmetic_genus(&DivisorClass::from_i64s(&[4, 4]))
                .unwrap(),
            int(9)
        );
    }

    #[test]
    fn arithmetic_genus_parity_violation() {
        // gram [[1]] with K = 0 makes D.(D+K) odd for D = H.
        let lat = SurfaceModel::general_lattice(
            vec![vec![int(1)]],
            DivisorClass::from_i64s(&[1]),
            DivisorClass::from_i64s(&[0]),
            true,
            true,
            None,
        )
        .unwrap();
        assert!(matches!(
            lat.arithmetic_genus(&DivisorClass::from_i64s(&[1])),
            Err(LatticeError::NonIntegralGenus { .. })
        ));
    }

    #[test]
    fn geometric_genus_examples() {
        let p2 = SurfaceModel::projective_plane();
        let d8 = DivisorClass::from_i64s(&[8]);
        assert_eq!(p2.geometric_genus(&d8, &int(12)).unwrap(), int(9));
        assert_eq!(p2.geometric_genus(&d8, &int(0)).unwrap(), int(21));

        let q = SurfaceModel::smooth_quadric();
        let d33 = DivisorClass::from_i64s(&[3, 3]);
        assert_eq!(q.geometric_genus(&d33, &int(1)).unwrap(), int(3));

        assert!(matches!(
            p2.geometric_genus(&d8, &int(22)),
            Err(LatticeError::GeometricGenusNegative { .. })
        ));
        assert!(matches!(
            p2.geometric_genus(&d8, &int(-1)),
            Err(LatticeError::NegativeDelta(_))
        ));
    }

    #[test]
    fn hodge_number_examples() {
        let q = SurfaceModel::smooth_quadric();
        assert_eq!(
            q.hodge_number(&DivisorClass::from_i64s(&[3, 1]), &int(1))
                .unwrap(),
            int(4)
        );
        assert_eq!(
            q.hodge_number(&DivisorClass::from_i64s(&[5, 5]), &int(3))
                .unwrap(),
            int(0)
        );
        let s = sextic();
        assert_eq!(
            s.hodge_number(&DivisorClass::from_i64s(&[8]), &int(2))
                .unwrap(),
            int(0)
        );
        assert!(matches!(
            s.hodge_number(&DivisorClass::from_i64s(&[8]), &int(0)),
            Err(LatticeError::NonPositiveK(_))
        ));
    }

    #[test]
    fn positivity_examples() {
        let q = SurfaceModel::smooth_quadric();
        let fiber = DivisorClass::from_i64s(&[3, 0]);
        assert!(q.is_nef(&fiber).unwrap());
        assert!(!q.is_big_and_nef(&fiber).unwrap());

        let p2 = SurfaceModel::projective_plane();
        assert!(!p2.is_nef(&DivisorClass::from_i64s(&[-1])).unwrap());

        // D - 3H = 5H on the sextic with D = 8H
        let s = sextic();
        let five_h = DivisorClass::from_i64s(&[5]);
        assert!(s.is_big_and_nef(&five_h).unwrap());

        let lat = SurfaceModel::general_lattice(
            vec![vec![int(2)]],
            DivisorClass::from_i64s(&[1]),
            DivisorClass::from_i64s(&[-2]),
            true,
            true,
            None,
        )
        .unwrap();
        assert_eq!(
            lat.is_nef(&DivisorClass::from_i64s(&[1])),
            Err(LatticeError::PositivityUndecidable)
        );
    }

    #[test]
    fn canonical_multiple_detection() {
        assert_eq!(sextic().canonical_hyperplane_multiple(), Some(int(2)));
        // K = -2H on the quadric: negative multiple, so None.
        assert_eq!(
            SurfaceModel::smooth_quadric().canonical_hyperplane_multiple(),
            None
        );
        assert_eq!(
            SurfaceModel::projective_plane().canonical_hyperplane_multiple(),
            None
        );
    }

    fn arb_builtin() -> impl Strategy<Value = SurfaceModel> {
        prop_oneof![
            Just(SurfaceModel::projective_plane()),
            Just(SurfaceModel::smooth_quadric()),
            (3u32..=5, prop::collection::vec(1u32..=6, 1..=3)).prop_filter_map(
                "degree list must have length r-2",
                |(r, degs)| {
                    (degs.len() == r as usize - 2)
                        .then(|| SurfaceModel::complete_intersection(r, degs).unwrap())
                }
            ),
        ]
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric_and_bilinear(
            s in arb_builtin(),
            raw in prop::collection::vec(-50i64..=50, 6),
            a in -5i64..=5,
            b in -5i64..=5,
        ) {
            let rank = s.rank();
            let x = DivisorClass::from_i64s(&raw[..rank]);
            let y = DivisorClass::from_i64s(&raw[2..2 + rank]);
            let z = DivisorClass::from_i64s(&raw[4..4 + rank]);

            prop_assert_eq!(s.intersect(&x, &y).unwrap(), s.intersect(&y, &x).unwrap());

            let combo = &x.scaled(&int(a)) + &y.scaled(&int(b));
            let lhs = s.intersect(&combo, &z).unwrap();
            let rhs = s.intersect(&x, &z).unwrap() * a + s.intersect(&y, &z).unwrap() * b;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn adjunction_parity_holds_on_builtins(s in arb_builtin(), raw in prop::collection::vec(-40i64..=40, 2)) {
            let d = DivisorClass::from_i64s(&raw[..s.rank()]);
            let product = s.intersect(&d, &(&d + s.canonical())).unwrap();
            prop_assert!(product.is_even());
        }

        #[test]
        fn quadric_hodge_number_is_a_square_gap(a in -40i64..=40, b in -40i64..=40, k in 1i64..=10) {
            let q = SurfaceModel::smooth_quadric();
            let d = DivisorClass::from_i64s(&[a, b]);
            let nu = q.hodge_number(&d, &int(k)).unwrap();
            let expected = int(k * k) * int(a - b) * int(a - b);
            prop_assert_eq!(&nu, &expected);
            prop_assert!(!nu.is_negative());
            prop_assert_eq!(nu.is_zero(), a == b);
        }

        #[test]
        fn genus_closed_forms(n in 1i64..=60, a in 1i64..=60, b in 1i64..=60) {
            let p2 = SurfaceModel::projective_plane();
            let pa = p2.arithmetic_genus(&DivisorClass::from_i64s(&[n])).unwrap();
            prop_assert_eq!(pa, int((n - 1) * (n - 2) / 2));

            let q = SurfaceModel::smooth_quadric();
            let pa_q = q.arithmetic_genus(&DivisorClass::from_i64s(&[a, b])).unwrap();
            prop_assert_eq!(pa_q, int((a - 1) * (b - 1)));
        }

        #[test]
        fn divisor_multiple_detection_roundtrip(raw in prop::collection::vec(-9i64..=9, 2), n in -30i64..=30) {
            let base = DivisorClass::from_i64s(&raw);
            prop_assume!(base.coords().iter().any(|c| !c.is_zero()));
            let scaled = base.scaled(&int(n));
            prop_assert_eq!(scaled.integer_multiple_of(&base), Some(int(n)));
        }
    }
}
