//! Report rendering: plain text for humans, one versioned JSON object for
//! machines. Decimal approximations of surds are always labeled `approx`
//! and never participate in any verdict.

use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use gkn_core::criteria::{
    BoundReport, CiBound, GknOutcome, GknVerdict, HypothesisCheck, InstabilityQuadratic,
    ObstructionOutcome, ObstructionVerdict, PlaneSeveriBound, SeveriRegularity,
};
use gkn_core::oracle::{PointConditionScheme, RankReport, SeveriVerifySummary};
use gkn_core::surd::SurdOver8;
use gkn_core::{formats, DivisorClass, SurfaceModel};

use crate::CliResult;

const SCHEMA_VERSION: u32 = 1;

fn emit(command: &str, result: Value) {
    let object = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "result": result,
    });
    println!("{object}");
}

fn big(value: &BigInt) -> Value {
    Value::String(value.to_string())
}

fn rational(value: &BigRational) -> Value {
    Value::String(value.to_string())
}

fn surd_json(surd: &SurdOver8) -> Value {
    json!({
        "surd": surd.to_string(),
        "exact": surd.as_rational().map(|q| q.to_string()),
        "approx": surd.approx_f64(),
    })
}

/// `"(t+sqrt(s))/8 = q"` when the value is rational, otherwise
/// `"(t+sqrt(s))/8 ≈ x (approx)"`.
fn surd_text(surd: &SurdOver8) -> String {
    match surd.as_rational() {
        Some(q) => format!("{surd} = {q}"),
        None => format!("{surd} ~= {:.6} (approx)", surd.approx_f64()),
    }
}

fn optional_big(value: &Option<BigInt>) -> Value {
    value.as_ref().map_or(Value::Null, big)
}

fn trace_json(trace: &[HypothesisCheck]) -> Value {
    Value::Array(
        trace
            .iter()
            .map(|check| {
                json!({
                    "tag": check.hypothesis.tag(),
                    "lhs": big(&check.lhs),
                    "rhs": big(&check.rhs),
                    "passed": check.passed,
                })
            })
            .collect(),
    )
}

fn bound_json(report: &BoundReport) -> Value {
    json!({
        "t": big(&report.t),
        "s": big(&report.s),
        "d_squared": big(&report.d_squared),
        "residual_squared": big(&report.residual_squared),
        "f": surd_json(&report.bound),
        "max_delta": optional_big(&report.max_admissible_delta),
    })
}

fn bound_text(report: &BoundReport) -> String {
    let max = report
        .max_admissible_delta
        .as_ref()
        .map_or_else(|| "none".to_string(), BigInt::to_string);
    format!("f = {}; max delta = {}", surd_text(&report.bound), max)
}

fn print_trace(trace: &[HypothesisCheck]) {
    println!("hypotheses:");
    for check in trace {
        let mark = if check.passed { "pass" } else { "FAIL" };
        println!(
            "  [{mark}] {}: {} vs {}",
            check.hypothesis.tag(),
            check.lhs,
            check.rhs
        );
    }
}

pub fn invariants(model: &SurfaceModel, divisor: &DivisorClass, json_mode: bool) -> CliResult<()> {
    let h = model.hyperplane();
    let k = model.canonical();
    let d_squared = model.self_intersection(divisor)?;
    let dh = model.intersect(divisor, h)?;
    let dk = model.intersect(divisor, k)?;
    let pa = model.arithmetic_genus(divisor)?;
    if json_mode {
        emit(
            "invariants",
            json!({
                "surface": formats::dump_surface(model),
                "divisor": divisor.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "d_squared": big(&d_squared),
                "d_dot_h": big(&dh),
                "d_dot_k": big(&dk),
                "arithmetic_genus": big(&pa),
            }),
        );
    } else {
        println!("divisor {divisor} on {}", describe_surface(model));
        println!("D^2 = {d_squared}");
        println!("D.H = {dh}");
        println!("D.K = {dk}");
        println!("p_a = {pa}");
    }
    Ok(())
}

fn describe_surface(model: &SurfaceModel) -> String {
    use gkn_core::SurfaceKind::*;
    match model.kind() {
        ProjectivePlane => "the projective plane".into(),
        SmoothQuadric => "the smooth quadric".into(),
        CompleteIntersection {
            ambient_dim,
            multidegrees,
        } => format!(
            "the degree-{} complete intersection in P^{} (degrees {:?})",
            model.degree(),
            ambient_dim,
            multidegrees
        ),
        GeneralLattice => format!("a user lattice of rank {}", model.rank()),
    }
}

fn outcome_json(verdict: &GknVerdict) -> Value {
    match &verdict.outcome {
        GknOutcome::SufficientGkn => json!({"kind": "sufficient"}),
        GknOutcome::HypothesisFailed { failed } => json!({
            "kind": "hypothesis_failed",
            "failed": failed.iter().map(|h| h.tag()).collect::<Vec<_>>(),
        }),
        GknOutcome::BoundFailed { delta } => json!({
            "kind": "bound_failed",
            "delta": big(delta),
        }),
        GknOutcome::Inapplicable { reason } => json!({
            "kind": "inapplicable",
            "reason": reason,
        }),
    }
}

pub fn gkn_verdict(command: &str, verdict: &GknVerdict, delta: Option<&BigInt>, json_mode: bool) {
    if json_mode {
        emit(
            command,
            json!({
                "outcome": outcome_json(verdict),
                "trace": trace_json(&verdict.trace),
                "bound": verdict.bound.as_ref().map(bound_json),
                "delta": delta.map(|d| d.to_string()),
                "vanishing_also_necessary": verdict.vanishing_also_necessary,
            }),
        );
        return;
    }
    print_trace(&verdict.trace);
    if let Some(report) = &verdict.bound {
        println!("{}", bound_text(report));
    }
    if verdict.vanishing_also_necessary == Some(true) {
        println!("note: D-kH is big and nef, so the vanishing route is necessary as well as sufficient");
    }
    match &verdict.outcome {
        GknOutcome::SufficientGkn => {
            let delta = delta.expect("sufficiency verdicts carry a delta");
            println!(
                "verdict: geometric k-normality is guaranteed (delta = {delta} is below the bound)"
            );
        }
        GknOutcome::HypothesisFailed { failed } => {
            let tags: Vec<&str> = failed.iter().map(|h| h.tag()).collect();
            println!(
                "verdict: no conclusion; failed hypotheses: {}",
                tags.join("; ")
            );
        }
        GknOutcome::BoundFailed { delta } => {
            println!("verdict: no conclusion; delta = {delta} is not below the bound");
        }
        GknOutcome::Inapplicable { reason } => {
            println!("verdict: inapplicable ({reason})");
        }
    }
}

pub fn bound_report(report: &BoundReport, json_mode: bool) {
    if json_mode {
        emit("gkn bound", bound_json(report));
    } else {
        println!(
            "D^2 = {}, (D-2kH)^2 = {}",
            report.d_squared, report.residual_squared
        );
        println!("t = D.(D-2kH) = {}", report.t);
        println!("s = D^2*(D-2kH)^2 = {}", report.s);
        println!("{}", bound_text(report));
    }
}

pub fn ci_bound(bound: &CiBound, json_mode: bool) {
    if json_mode {
        emit(
            "gkn ci",
            json!({
                "n": big(&bound.n),
                "k": big(&bound.k),
                "deg": big(&bound.deg_s),
                "degree_condition": bound.degree_condition,
                "surface_degree_condition": bound.surface_degree_condition,
                "admissible": bound.admissible,
                "bound": rational(&bound.bound),
                "max_delta": optional_big(&bound.max_delta),
            }),
        );
        return;
    }
    println!(
        "preconditions: n >= 2k+1: {}; deg(S) > 4/(n(n-2k)): {}",
        pass_fail(bound.degree_condition),
        bound.surface_degree_condition.map_or_else(
            || "undefined (n = 2k)".to_string(),
            |ok| pass_fail(ok).to_string()
        ),
    );
    let max = bound
        .max_delta
        .as_ref()
        .map_or_else(|| "none".to_string(), BigInt::to_string);
    println!(
        "bound: delta < n(n-2k)deg(S)/4 = {}; max delta = {}",
        bound.bound, max
    );
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn quadratic(quadratic: &InstabilityQuadratic, json_mode: bool) {
    let (a, b, c) = &quadratic.coefficients;
    if json_mode {
        emit(
            "gkn quadratic",
            json!({
                "coefficients": [big(a), big(b), big(c)],
                "alpha": surd_json(&quadratic.alpha),
                "beta": surd_json(&quadratic.beta),
                "integer_witness": optional_big(&quadratic.integer_witness),
            }),
        );
        return;
    }
    println!("F(delta) = {a}*delta^2 + ({b})*delta + ({c})");
    println!("alpha = {}", surd_text(&quadratic.alpha));
    println!("beta  = {}", surd_text(&quadratic.beta));
    match &quadratic.integer_witness {
        Some(w) => println!("smallest integer in (alpha, beta): {w}"),
        None => println!("no integer lies strictly between alpha and beta"),
    }
}

pub fn rho(g: &BigInt, r: &BigInt, d: &BigInt, rho: &BigInt, json_mode: bool) {
    if json_mode {
        emit(
            "bn rho",
            json!({
                "g": big(g),
                "r": big(r),
                "d": big(d),
                "rho": big(rho),
            }),
        );
    } else {
        println!("rho(g={g}, r={r}, d={d}) = {rho}");
    }
}

pub fn obstruction(verdict: &ObstructionVerdict, json_mode: bool) {
    if json_mode {
        let kind = match &verdict.outcome {
            ObstructionOutcome::NotGeometrically2Normal => json!({"kind": "not_g2n"}),
            ObstructionOutcome::Inconclusive => json!({"kind": "inconclusive"}),
            ObstructionOutcome::Inapplicable { reason } => {
                json!({"kind": "inapplicable", "reason": reason})
            }
        };
        emit(
            "bn obstruct",
            json!({
                "outcome": kind,
                "rho": optional_big(&verdict.rho),
                "geometric_genus": optional_big(&verdict.geometric_genus),
                "curve_degree": optional_big(&verdict.curve_degree),
                "ambient_dim": verdict.ambient_dim,
            }),
        );
        return;
    }
    if let (Some(g), Some(d), Some(r)) = (
        &verdict.geometric_genus,
        &verdict.curve_degree,
        verdict.ambient_dim,
    ) {
        println!("g = {g}, deg(C) = {d}, r = {r}");
    }
    if let Some(rho) = &verdict.rho {
        println!("rho = {rho}");
    }
    match &verdict.outcome {
        ObstructionOutcome::NotGeometrically2Normal => {
            println!("verdict: rho > 0 under verified hypotheses; the curve is NOT geometrically 2-normal");
        }
        ObstructionOutcome::Inconclusive => {
            println!("verdict: rho <= 0; the obstruction is silent");
        }
        ObstructionOutcome::Inapplicable { reason } => {
            println!("verdict: inapplicable ({reason})");
        }
    }
}

pub fn severi_regularity(report: &SeveriRegularity, delta: &BigInt, json_mode: bool) {
    if json_mode {
        emit(
            "severi regular",
            json!({
                "canonical_multiple": optional_big(&report.canonical_multiple),
                "outcome": outcome_json(&report.verdict),
                "trace": trace_json(&report.verdict.trace),
                "bound": report.verdict.bound.as_ref().map(bound_json),
                "delta": delta.to_string(),
                "vanishing_also_necessary": report.verdict.vanishing_also_necessary,
            }),
        );
        return;
    }
    match &report.canonical_multiple {
        Some(k) => {
            println!("K_S = {k}H; checking the level-{k} sufficiency criterion");
            print_trace(&report.verdict.trace);
            if let Some(bound) = &report.verdict.bound {
                println!("{}", bound_text(bound));
            }
            if report.verdict.is_sufficient() {
                println!("verdict: [C] is a regular point of the Severi variety of delta = {delta} nodal curves");
            } else {
                println!("verdict: no regularity guarantee for delta = {delta}");
            }
        }
        None => println!("verdict: inapplicable (K_S is not a positive multiple of H)"),
    }
}

pub fn plane_severi_bound(bound: &PlaneSeveriBound, json_mode: bool) {
    if json_mode {
        emit(
            "severi plane-bound",
            json!({
                "n": big(&bound.n),
                "k": bound.k,
                "bound": big(&bound.bound),
                "h0_check": big(&bound.h0_check),
            }),
        );
    } else {
        println!(
            "delta <= {} keeps the general degree-{} nodal curve geometrically {}-normal",
            bound.bound, bound.n, bound.k
        );
        println!("h0 cross-check: (n-k-1)(n-k-2)/2 = {}", bound.h0_check);
    }
}

pub fn severi_verify(summary: &SeveriVerifySummary, json_mode: bool) {
    if json_mode {
        emit(
            "severi verify",
            json!({
                "n": big(&summary.n),
                "k": summary.k,
                "delta": summary.delta,
                "target_degree": summary.target_degree,
                "h0": summary.h0,
                "trials": summary.trials,
                "independent_trials": summary.independent_trials,
                "capacity_trials": summary.capacity_trials,
                "seed": summary.seed,
                "coordinate_bound": summary.coordinate_bound,
                "generator": summary.generator,
            }),
        );
        return;
    }
    println!(
        "delta = {} random simple points against the degree-{} system (h0 = {})",
        summary.delta, summary.target_degree, summary.h0
    );
    println!(
        "independent in {}/{} trials; rank capped at h0 for delta+1 points in {}/{} trials",
        summary.independent_trials, summary.trials, summary.capacity_trials, summary.trials
    );
    println!(
        "generator = {}, seed = {}, coordinates in [-{}, {}]",
        summary.generator, summary.seed, summary.coordinate_bound, summary.coordinate_bound
    );
}

pub fn castelnuovo(degree: &BigInt, ambient: &BigInt, genus: &BigInt, json_mode: bool) {
    if json_mode {
        emit(
            "castelnuovo",
            json!({
                "degree": big(degree),
                "ambient": big(ambient),
                "max_genus": big(genus),
            }),
        );
    } else {
        println!("pi({degree}, {ambient}) = {genus}");
    }
}

pub enum RankSource {
    File {
        path: PathBuf,
    },
    Random {
        count: usize,
        mult: u32,
        coord_bound: i64,
        seed: u64,
        generator: &'static str,
    },
}

pub fn rank_report(
    scheme: &PointConditionScheme,
    report: &RankReport,
    source: &RankSource,
    json_mode: bool,
) {
    if json_mode {
        let source_json = match source {
            RankSource::File { path } => json!({"kind": "file", "path": path}),
            RankSource::Random {
                count,
                mult,
                coord_bound,
                seed,
                generator,
            } => json!({
                "kind": "random",
                "count": count,
                "mult": mult,
                "coord_bound": coord_bound,
                "seed": seed,
                "generator": generator,
            }),
        };
        emit(
            "oracle rank",
            json!({
                "source": source_json,
                "degree": scheme.degree(),
                "rows": report.rows,
                "cols": report.cols,
                "rank": report.rank,
                "expected_conditions": report.expected_conditions,
                "independent": report.independent,
                "residual_dimension": report.residual_dimension,
            }),
        );
        return;
    }
    match source {
        RankSource::File { path } => println!("scheme from {}", path.display()),
        RankSource::Random {
            count,
            mult,
            coord_bound,
            seed,
            generator,
        } => println!(
            "{count} random points of multiplicity {mult} in [-{coord_bound}, {coord_bound}]^2 (generator = {generator}, seed = {seed})"
        ),
    }
    println!(
        "jet matrix: {} x {} on the degree-{} system; rank = {}",
        report.rows,
        report.cols,
        scheme.degree(),
        report.rank
    );
    println!(
        "conditions expected = {}; independent = {}; residual dimension = {}",
        report.expected_conditions, report.independent, report.residual_dimension
    );
}
