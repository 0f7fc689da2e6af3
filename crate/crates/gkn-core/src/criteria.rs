//! Numeric sufficiency criteria and bounds for geometric k-normality.
//!
//! For a curve `C ∈ |D|` with `δ` nodes and cusps on a surface with
//! hyperplane class `H`, the sufficiency route checks four exact integer
//! inequalities and then the node-count bound
//! `δ < f(H,D,S) = (D.(D−2kH) + sqrt(D²·(D−2kH)²)) / 8`.
//! A passing verdict guarantees geometric k-normality; a failing one means
//! "no conclusion", never "not geometrically k-normal". The only negative
//! verdict in this module is the Brill–Noether obstruction (`ρ > 0` under
//! verified hypotheses rules out geometric 2-normality).
//!
//! All comparisons against the surd bound are resolved in exact integer
//! arithmetic; the sharp example sits exactly at the bound, where any
//! rounding would misclassify.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{DivisorClass, LatticeError, SurfaceModel};
use crate::surd::SurdOver8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CriteriaError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("k must be a positive integer, got {0}")]
    NonPositiveK(BigInt),
    #[error("delta must be nonnegative, got {0}")]
    NegativeDelta(BigInt),
    #[error(
        "positivity hypotheses fail ((D-2kH)^2 > 0 and D.(D-2kH) > 0 required); bound undefined"
    )]
    ResidualNotPositive,
    #[error("D^2 (D-2kH)^2 = {0} is negative; bound undefined")]
    NegativeRadicand(BigInt),
    #[error("{name} must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: BigInt },
    #[error("{name} must be nonnegative, got {value}")]
    NegativeParameter { name: &'static str, value: BigInt },
    #[error("plane Severi bound established only for k = 1, 2, 3 (got k = {0})")]
    UnsupportedSeveriK(u32),
    #[error("plane Severi bound needs n - 3 - k >= 0 (got n = {n}, k = {k})")]
    DegreeTooSmall { n: BigInt, k: u32 },
    #[error("Castelnuovo bound needs ambient dimension r >= 2, got {0}")]
    AmbientTooSmall(BigInt),
}

/// The four numeric hypotheses of the sufficiency theorem, named by content.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// `D.H > k·H²`
    HyperplaneExcess,
    /// `(D−2kH)² > 0`
    ResidualSquare,
    /// `D.(D−2kH) > 0`
    ResidualProduct,
    /// `ν(D,kH) < 4(D.(D−2kH) − 4)`
    HodgeGap,
    /// the declared cohomological flags on the surface model
    SurfaceFlags,
}

impl Hypothesis {
    pub fn tag(self) -> &'static str {
        match self {
            Hypothesis::HyperplaneExcess => "D.H > k*H^2",
            Hypothesis::ResidualSquare => "(D-2kH)^2 > 0",
            Hypothesis::ResidualProduct => "D.(D-2kH) > 0",
            Hypothesis::HodgeGap => "nu(D,kH) < 4*(D.(D-2kH)-4)",
            Hypothesis::SurfaceFlags => "surface flags",
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One evaluated inequality: `lhs` must exceed `rhs` strictly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub hypothesis: Hypothesis,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub passed: bool,
}

/// Exact evaluations of the four numeric hypotheses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisTrace {
    pub checks: Vec<HypothesisCheck>,
}

impl HypothesisTrace {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<Hypothesis> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.hypothesis)
            .collect()
    }

    /// True iff both residual-positivity hypotheses hold.
    pub fn residual_positive(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| {
                matches!(
                    c.hypothesis,
                    Hypothesis::ResidualSquare | Hypothesis::ResidualProduct
                )
            })
            .all(|c| c.passed)
    }
}

/// Exact representation of the bound `f(H,D,S) = (t + sqrt(s))/8` with
/// `t = D.(D−2kH)` and `s = D²·(D−2kH)²`, keeping the intermediate
/// intersection numbers.
///
/// When `ν(D,kH) = 0`, `sqrt(s) = t` exactly and `f = t/4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub t: BigInt,
    pub s: BigInt,
    pub d_squared: BigInt,
    pub residual_squared: BigInt,
    pub bound: SurdOver8,
    /// Largest integer `δ` with `δ < f`, or `None` if no nonnegative one exists.
    pub max_admissible_delta: Option<BigInt>,
}

impl BoundReport {
    /// Strict admissibility test `δ < f`, resolved exactly.
    pub fn admits(&self, delta: &BigInt) -> bool {
        self.bound.cmp_int(delta) == Ordering::Greater
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GknOutcome {
    /// Geometric k-normality is guaranteed.
    SufficientGkn,
    /// One of the numeric hypotheses or declared flags fails: no conclusion.
    HypothesisFailed { failed: Vec<Hypothesis> },
    /// Hypotheses hold but `δ` is not below the bound: no conclusion.
    BoundFailed { delta: BigInt },
    /// The criterion does not apply to this input at all.
    Inapplicable { reason: String },
}

/// Structured outcome of the sufficiency check, with the full inequality
/// trace and the bound report whenever they were computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GknVerdict {
    pub outcome: GknOutcome,
    pub trace: Vec<HypothesisCheck>,
    pub bound: Option<BoundReport>,
    /// Whether `D − kH` is big and nef, in which case the vanishing behind
    /// the criterion is necessary as well as sufficient. `None` when
    /// positivity is undecidable on the model. Recorded only; no stronger
    /// claim is derived from it.
    pub vanishing_also_necessary: Option<bool>,
}

impl GknVerdict {
    pub fn is_sufficient(&self) -> bool {
        matches!(self.outcome, GknOutcome::SufficientGkn)
    }
}

fn require_positive_k(k: &BigInt) -> Result<(), CriteriaError> {
    if k.is_positive() {
        Ok(())
    } else {
        Err(CriteriaError::NonPositiveK(k.clone()))
    }
}

/// `D − 2kH`.
fn residual_class(surface: &SurfaceModel, d: &DivisorClass, k: &BigInt) -> DivisorClass {
    d - &surface.multiple_of_hyperplane(&(k * 2))
}

/// Evaluates the four numeric hypotheses exactly; failures are data, not errors.
pub fn check_hypotheses(
    surface: &SurfaceModel,
    d: &DivisorClass,
    k: &BigInt,
) -> Result<HypothesisTrace, CriteriaError> {
    require_positive_k(k)?;
    let h = surface.hyperplane();
    let dh = surface.intersect(d, h)?;
    let residual = residual_class(surface, d, k);
    let residual_sq = surface.self_intersection(&residual)?;
    let t = surface.intersect(d, &residual)?;
    let nu = surface.hodge_number(d, k)?;

    let k_deg = k * surface.degree();
    let hodge_rhs = (&t - 4) * 4;
    let checks = vec![
        HypothesisCheck {
            hypothesis: Hypothesis::HyperplaneExcess,
            passed: dh > k_deg,
            lhs: dh,
            rhs: k_deg,
        },
        HypothesisCheck {
            hypothesis: Hypothesis::ResidualSquare,
            passed: residual_sq.is_positive(),
            lhs: residual_sq,
            rhs: BigInt::zero(),
        },
        HypothesisCheck {
            hypothesis: Hypothesis::ResidualProduct,
            passed: t.is_positive(),
            lhs: t.clone(),
            rhs: BigInt::zero(),
        },
        HypothesisCheck {
            hypothesis: Hypothesis::HodgeGap,
            passed: nu < hodge_rhs,
            lhs: nu,
            rhs: hodge_rhs,
        },
    ];
    Ok(HypothesisTrace { checks })
}

/// The exact node-count bound `f(H,D,S) = (t + sqrt(s))/8`.
///
/// Requires the residual positivity hypotheses, which keep the radicand
/// meaningful; `δ < f` then resolves as `8δ−t < 0 ∨ (8δ−t)² < s`.
pub fn delta_bound(
    surface: &SurfaceModel,
    d: &DivisorClass,
    k: &BigInt,
) -> Result<BoundReport, CriteriaError> {
    require_positive_k(k)?;
    let residual = residual_class(surface, d, k);
    let residual_sq = surface.self_intersection(&residual)?;
    let t = surface.intersect(d, &residual)?;
    if !residual_sq.is_positive() || !t.is_positive() {
        return Err(CriteriaError::ResidualNotPositive);
    }
    let d_squared = surface.self_intersection(d)?;
    let s = &d_squared * &residual_sq;
    if s.is_negative() {
        return Err(CriteriaError::NegativeRadicand(s));
    }
    let bound = SurdOver8::plus(t.clone(), s.clone());
    let below = bound.max_int_strictly_below();
    let max_admissible_delta = (!below.is_negative()).then_some(below);
    Ok(BoundReport {
        t,
        s,
        d_squared,
        residual_squared: residual_sq,
        bound,
        max_admissible_delta,
    })
}

/// Full sufficiency verdict: flags, the four inequalities, then `δ < f`.
pub fn gkn_sufficient(
    surface: &SurfaceModel,
    d: &DivisorClass,
    k: &BigInt,
    delta: &BigInt,
) -> Result<GknVerdict, CriteriaError> {
    require_positive_k(k)?;
    if delta.is_negative() {
        return Err(CriteriaError::NegativeDelta(delta.clone()));
    }
    let trace = check_hypotheses(surface, d, k)?;
    let vanishing_also_necessary = surface
        .is_big_and_nef(&(d - &surface.multiple_of_hyperplane(k)))
        .ok();
    let mut failed = trace.failed();
    if !(surface.h1_kh_vanishes() && surface.k_normal()) {
        failed.push(Hypothesis::SurfaceFlags);
    }
    if !failed.is_empty() {
        // The bound is auxiliary information here; it may itself be undefined.
        let bound = trace
            .residual_positive()
            .then(|| delta_bound(surface, d, k).ok())
            .flatten();
        return Ok(GknVerdict {
            outcome: GknOutcome::HypothesisFailed { failed },
            trace: trace.checks,
            bound,
            vanishing_also_necessary,
        });
    }
    let bound = delta_bound(surface, d, k)?;
    let outcome = if bound.admits(delta) {
        GknOutcome::SufficientGkn
    } else {
        GknOutcome::BoundFailed {
            delta: delta.clone(),
        }
    };
    Ok(GknVerdict {
        outcome,
        trace: trace.checks,
        bound: Some(bound),
        vanishing_also_necessary,
    })
}

/// The complete-intersection specialization: preconditions and the rational
/// bound `n(n−2k)·deg(S)/4`, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiBound {
    pub n: BigInt,
    pub k: BigInt,
    pub deg_s: BigInt,
    /// `n ≥ 2k + 1`
    pub degree_condition: bool,
    /// `deg(S) > 4/(n(n−2k))`; `None` when `n = 2k` leaves it undefined.
    pub surface_degree_condition: Option<bool>,
    pub admissible: bool,
    pub bound: BigRational,
    /// Largest integer `δ < bound`, when a nonnegative one exists.
    pub max_delta: Option<BigInt>,
}

pub fn ci_bound(n: &BigInt, k: &BigInt, deg_s: &BigInt) -> Result<CiBound, CriteriaError> {
    for (name, value) in [("n", n), ("k", k), ("deg", deg_s)] {
        if !value.is_positive() {
            return Err(CriteriaError::NonPositiveParameter {
                name,
                value: value.clone(),
            });
        }
    }
    let two_k: BigInt = k * 2;
    let n_residual = n * (n - &two_k);
    let degree_condition = *n > two_k;
    // deg > 4/(n(n-2k)) as an exact rational comparison.
    let surface_degree_condition = if n_residual.is_zero() {
        None
    } else {
        Some(
            BigRational::from(deg_s.clone())
                > BigRational::new(BigInt::from(4), n_residual.clone()),
        )
    };
    let admissible = degree_condition && surface_degree_condition == Some(true);
    let bound = BigRational::new(&n_residual * deg_s, BigInt::from(4));
    let max_delta = {
        // Largest integer strictly below the rational bound.
        let floor = bound.floor().to_integer();
        let candidate = if BigRational::from(floor.clone()) == bound {
            floor - 1
        } else {
            floor
        };
        (!candidate.is_negative()).then_some(candidate)
    };
    Ok(CiBound {
        n: n.clone(),
        k: k.clone(),
        deg_s: deg_s.clone(),
        degree_condition,
        surface_degree_condition,
        admissible,
        bound,
        max_delta,
    })
}

/// The quadratic `F(δ₀) = 16δ₀² − 4t·δ₀ + ν` whose negativity interval
/// `(α, β)` certifies instability, with `β` equal to the node-count bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstabilityQuadratic {
    /// Coefficients `(16, −4t, ν)`.
    pub coefficients: (BigInt, BigInt, BigInt),
    pub alpha: SurdOver8,
    pub beta: SurdOver8,
    /// Smallest integer strictly inside `(α, β)`, when one exists.
    pub integer_witness: Option<BigInt>,
}

impl InstabilityQuadratic {
    /// Exact evaluation of `F` at an integer.
    pub fn evaluate(&self, delta: &BigInt) -> BigInt {
        let (a, b, c) = &self.coefficients;
        a * delta * delta + b * delta + c
    }
}

pub fn instability_quadratic(
    surface: &SurfaceModel,
    d: &DivisorClass,
    k: &BigInt,
) -> Result<InstabilityQuadratic, CriteriaError> {
    let report = delta_bound(surface, d, k)?;
    let nu = surface.hodge_number(d, k)?;
    let t = report.t.clone();
    // The two roots are (t ∓ sqrt(t² − 4ν))/8, and t² − 4ν = D²(D−2kH)²: the
    // radicand of the bound, reached by an independent algebraic route.
    let s_quad = &t * &t - &nu * BigInt::from(4);
    if s_quad.is_negative() {
        return Err(CriteriaError::NegativeRadicand(s_quad));
    }
    let alpha = SurdOver8::minus(t.clone(), s_quad.clone());
    let beta = SurdOver8::plus(t.clone(), s_quad);
    assert_eq!(
        beta, report.bound,
        "upper quadratic root must coincide with the node-count bound"
    );
    let witness = alpha.min_int_strictly_above();
    let integer_witness = (beta.cmp_int(&witness) == Ordering::Greater).then_some(witness);
    Ok(InstabilityQuadratic {
        coefficients: (BigInt::from(16), -4 * t, nu),
        alpha,
        beta,
        integer_witness,
    })
}

/// `c₁² − 4c₂ = (D−kH)² − 4δ₀`; a positive value certifies instability of
/// the associated rank-2 bundle.
pub fn bogomolov_discriminant(
    surface: &SurfaceModel,
    d: &DivisorClass,
    k: &BigInt,
    delta0: &BigInt,
) -> Result<BigInt, CriteriaError> {
    require_positive_k(k)?;
    let c1 = d - &surface.multiple_of_hyperplane(k);
    Ok(surface.self_intersection(&c1)? - delta0 * 4)
}

/// The Brill–Noether number `ρ(g, r, d) = g − (r+1)(r − d + g)`.
pub fn brill_noether_rho(g: &BigInt, r: &BigInt, d: &BigInt) -> Result<BigInt, CriteriaError> {
    if g.is_negative() {
        return Err(CriteriaError::NegativeParameter {
            name: "g",
            value: g.clone(),
        });
    }
    if *r < BigInt::one() {
        return Err(CriteriaError::NonPositiveParameter {
            name: "r",
            value: r.clone(),
        });
    }
    if *d < BigInt::one() {
        return Err(CriteriaError::NonPositiveParameter {
            name: "d",
            value: d.clone(),
        });
    }
    Ok(g - (r + 1) * (r - d + g))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionOutcome {
    /// All hypotheses verified and `ρ > 0`: the curve cannot be
    /// geometrically 2-normal.
    NotGeometrically2Normal,
    /// Hypotheses verified but `ρ ≤ 0`: the obstruction is silent.
    Inconclusive,
    /// Some hypothesis fails; the cited reason says which.
    Inapplicable { reason: String },
}

/// Outcome of the Brill–Noether obstruction to geometric 2-normality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub outcome: ObstructionOutcome,
    pub rho: Option<BigInt>,
    pub geometric_genus: Option<BigInt>,
    pub curve_degree: Option<BigInt>,
    pub ambient_dim: Option<u32>,
}

/// Brill–Noether obstruction: under the linear-normality and vanishing flags
/// and `D − 3H` big and nef, `ρ(g, r, deg C) > 0` rules out geometric
/// 2-normality.
pub fn obstruction_2normal(
    surface: &SurfaceModel,
    d: &DivisorClass,
    delta: &BigInt,
) -> Result<ObstructionVerdict, CriteriaError> {
    let inapplicable = |reason: String| ObstructionVerdict {
        outcome: ObstructionOutcome::Inapplicable { reason },
        rho: None,
        geometric_genus: None,
        curve_degree: None,
        ambient_dim: None,
    };
    if !surface.k_normal() {
        return Ok(inapplicable(
            "surface not declared linearly normal and 2-normal".into(),
        ));
    }
    if !surface.h1_kh_vanishes() {
        return Ok(inapplicable("h^1 vanishing flag not declared".into()));
    }
    let shifted = d - &surface.multiple_of_hyperplane(&BigInt::from(3));
    if !surface.is_big_and_nef(&shifted)? {
        return Ok(inapplicable("D-3H not big and nef".into()));
    }
    let Some(ambient) = surface.ambient_dim() else {
        return Ok(inapplicable(
            "ambient projective dimension unknown for this model".into(),
        ));
    };
    let genus = surface.geometric_genus(d, delta)?;
    let curve_degree = surface.intersect(d, surface.hyperplane())?;
    let rho = brill_noether_rho(&genus, &BigInt::from(ambient), &curve_degree)?;
    let outcome = if rho.is_positive() {
        ObstructionOutcome::NotGeometrically2Normal
    } else {
        ObstructionOutcome::Inconclusive
    };
    Ok(ObstructionVerdict {
        outcome,
        rho: Some(rho),
        geometric_genus: Some(genus),
        curve_degree: Some(curve_degree),
        ambient_dim: Some(ambient),
    })
}

/// Whether the 0-regularity reformulation applies: `D−(k+1)H` big and nef
/// together with the `h¹` vanishing flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroRegularityReport {
    pub shift_big_and_nef: bool,
    pub h1_flag: bool,
    pub equivalent: bool,
    pub failed_clause: Option<String>,
}

pub fn zero_regularity_equiv(
    surface: &SurfaceModel,
    d: &DivisorClass,
    k: &BigInt,
) -> Result<ZeroRegularityReport, CriteriaError> {
    require_positive_k(k)?;
    let shift = d - &surface.multiple_of_hyperplane(&(k + 1));
    let shift_big_and_nef = surface.is_big_and_nef(&shift)?;
    let h1_flag = surface.h1_kh_vanishes();
    let failed_clause = if !shift_big_and_nef {
        Some(format!("D-{}H not big and nef", k + 1))
    } else if !h1_flag {
        Some("h^1 vanishing flag not declared".into())
    } else {
        None
    };
    Ok(ZeroRegularityReport {
        shift_big_and_nef,
        h1_flag,
        equivalent: failed_clause.is_none(),
        failed_clause,
    })
}

/// Severi regularity via the canonical multiple: when `K_S = kH` with
/// `k ≥ 1`, a sufficient verdict means the curve is a regular point of the
/// Severi variety of `δ`-nodal curves in `|D|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeveriRegularity {
    /// The `k ≥ 1` with `K_S = kH`, when it exists.
    pub canonical_multiple: Option<BigInt>,
    pub verdict: GknVerdict,
}

pub fn severi_regularity_sufficient(
    surface: &SurfaceModel,
    d: &DivisorClass,
    delta: &BigInt,
) -> Result<SeveriRegularity, CriteriaError> {
    match surface.canonical_hyperplane_multiple() {
        Some(k) => {
            let verdict = gkn_sufficient(surface, d, &k, delta)?;
            Ok(SeveriRegularity {
                canonical_multiple: Some(k),
                verdict,
            })
        }
        None => Ok(SeveriRegularity {
            canonical_multiple: None,
            verdict: GknVerdict {
                outcome: GknOutcome::Inapplicable {
                    reason: "K_S is not a positive multiple of H".into(),
                },
                trace: Vec::new(),
                bound: None,
                vanishing_also_necessary: None,
            },
        }),
    }
}

/// The plane Severi node bound, by quadratic formula and by the binomial
/// identity `h⁰(O(n−k−3)) = (n−k−1)(n−k−2)/2`; the two must agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneSeveriBound {
    pub n: BigInt,
    pub k: u32,
    pub bound: BigInt,
    pub h0_check: BigInt,
}

pub fn plane_severi_bound(n: &BigInt, k: u32) -> Result<PlaneSeveriBound, CriteriaError> {
    if !(1..=3).contains(&k) {
        return Err(CriteriaError::UnsupportedSeveriK(k));
    }
    let k_big = BigInt::from(k);
    if (n - &k_big - BigInt::from(3)).is_negative() {
        return Err(CriteriaError::DegreeTooSmall { n: n.clone(), k });
    }
    let numerator: BigInt = n * n - (&k_big * 2 + 3) * n + &k_big * &k_big + &k_big * 3 + 2;
    debug_assert!(numerator.is_even());
    let bound = numerator / 2;
    let h0_check = (n - &k_big - 1) * (n - &k_big - 2) / 2;
    assert_eq!(
        bound, h0_check,
        "quadratic and binomial forms of the plane Severi bound must agree"
    );
    Ok(PlaneSeveriBound {
        n: n.clone(),
        k,
        bound,
        h0_check,
    })
}

/// Castelnuovo's bound: the maximal genus of a non-degenerate smooth curve
/// of degree `d` in P^r, `π(d,r) = m(m−1)(r−1)/2 + mε` with
/// `m = ⌊(d−1)/(r−1)⌋` and `ε = d−1−m(r−1)`.
pub fn castelnuovo_max_genus(d: &BigInt, r: &BigInt) -> Result<BigInt, CriteriaError> {
    if !d.is_positive() {
        return Err(CriteriaError::NonPositiveParameter {
            name: "degree",
            value: d.clone(),
        });
    }
    if *r < BigInt::from(2) {
        return Err(CriteriaError::AmbientTooSmall(r.clone()));
    }
    let r1: BigInt = r - 1;
    let m = (d - BigInt::one()).div_floor(&r1);
    let eps = d - 1 - &m * &r1;
    Ok(&m * (&m - 1) * r1 / 2 + m * eps)
}
