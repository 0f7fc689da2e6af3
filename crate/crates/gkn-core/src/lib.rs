//! Exact-arithmetic toolkit for geometric k-normality of nodal and cuspidal
//! curves on surfaces.
//!
//! Three layers:
//! - [`lattice`]: Picard lattices of the supported surfaces with the
//!   intersection pairing, adjunction genus, Hodge number, and positivity
//!   predicates.
//! - [`criteria`]: the numeric sufficiency criteria and bounds — hypothesis
//!   checks, the exact surd node-count bound, the instability quadratic, the
//!   complete-intersection corollary, the Brill–Noether obstruction, Severi
//!   regularity, the plane Severi bound, and Castelnuovo's bound.
//! - [`oracle`]: independent ground truth for the plane, deciding by exact
//!   rational rank whether point configurations impose independent
//!   conditions on plane curves of a given degree.
//!
//! Every verdict is computed in arbitrary-precision integer or rational
//! arithmetic; floating point appears only in clearly labeled decimal
//! approximations.

pub mod criteria;
pub mod formats;
pub mod lattice;
pub mod oracle;
pub mod surd;

pub use criteria::{
    bogomolov_discriminant, brill_noether_rho, castelnuovo_max_genus, check_hypotheses, ci_bound,
    delta_bound, gkn_sufficient, instability_quadratic, obstruction_2normal, plane_severi_bound,
    severi_regularity_sufficient, zero_regularity_equiv, BoundReport, CiBound, CriteriaError,
    GknOutcome, GknVerdict, Hypothesis, HypothesisCheck, HypothesisTrace, InstabilityQuadratic,
    ObstructionOutcome, ObstructionVerdict, PlaneSeveriBound, SeveriRegularity,
    ZeroRegularityReport,
};
pub use formats::{dump_surface, parse_divisor, parse_point_list, parse_surface, FormatError};
pub use lattice::{DivisorClass, LatticeError, SurfaceKind, SurfaceModel};
pub use oracle::{
    exact_rank, independent_conditions, random_configuration, verify_plane_severi, OracleError,
    PlanePoint, PointConditionScheme, RankReport, RationalMatrix, SeveriVerifySummary,
};
pub use surd::SurdOver8;
