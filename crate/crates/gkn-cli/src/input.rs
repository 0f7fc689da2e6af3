//! Resolution of the `--surface` argument.
//!
//! Accepted forms, tried in order: the builtin shorthands `p2` and
//! `quadric`, the complete-intersection shorthand `ci:r=<r>,deg=<d1>[x<d2>…]`,
//! inline JSON (starts with `{`), and finally a path to a surface spec file.

use std::path::Path;

use gkn_core::{formats, SurfaceModel};

use crate::CliResult;

pub fn parse_surface_arg(spec: &str) -> CliResult<SurfaceModel> {
    let trimmed = spec.trim();
    match trimmed {
        "p2" => return Ok(SurfaceModel::projective_plane()),
        "quadric" => return Ok(SurfaceModel::smooth_quadric()),
        _ => {}
    }
    if let Some(body) = trimmed.strip_prefix("ci:") {
        return parse_ci_shorthand(body).map_err(Into::into);
    }
    if trimmed.starts_with('{') {
        return Ok(formats::parse_surface(trimmed)?);
    }
    let path = Path::new(trimmed);
    if !path.exists() {
        return Err(format!(
            "unknown surface {trimmed:?}: not a builtin (p2, quadric, ci:r=..,deg=..), \
             not inline JSON, and no such file"
        )
        .into());
    }
    let text = std::fs::read_to_string(path)?;
    Ok(formats::parse_surface(&text)?)
}

fn parse_ci_shorthand(body: &str) -> Result<SurfaceModel, String> {
    let mut ambient: Option<u32> = None;
    let mut degrees: Option<Vec<u32>> = None;
    for part in body.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("bad ci shorthand component {part:?}, expected key=value"))?;
        match key.trim() {
            "r" => {
                ambient = Some(
                    value
                        .trim()
                        .parse()
                        .map_err(|e| format!("bad ambient dimension {value:?}: {e}"))?,
                );
            }
            "deg" => {
                let parsed: Result<Vec<u32>, _> =
                    value.split('x').map(|d| d.trim().parse::<u32>()).collect();
                degrees = Some(parsed.map_err(|e| format!("bad degree list {value:?}: {e}"))?);
            }
            other => return Err(format!("unknown ci shorthand key {other:?}")),
        }
    }
    let ambient = ambient.ok_or("ci shorthand needs r=<ambient dimension>")?;
    let degrees = degrees.ok_or("ci shorthand needs deg=<d1>[x<d2>...]")?;
    SurfaceModel::complete_intersection(ambient, degrees).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shorthands() {
        assert_eq!(
            parse_surface_arg("p2").unwrap(),
            SurfaceModel::projective_plane()
        );
        assert_eq!(
            parse_surface_arg("quadric").unwrap(),
            SurfaceModel::smooth_quadric()
        );
        assert_eq!(
            parse_surface_arg("ci:r=3,deg=6").unwrap(),
            SurfaceModel::complete_intersection(3, vec![6]).unwrap()
        );
        assert_eq!(
            parse_surface_arg("ci:r=4,deg=2x3").unwrap(),
            SurfaceModel::complete_intersection(4, vec![2, 3]).unwrap()
        );
    }

    #[test]
    fn inline_json() {
        assert_eq!(
            parse_surface_arg(r#"{"model":"quadric"}"#).unwrap(),
            SurfaceModel::smooth_quadric()
        );
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(parse_surface_arg("p3").is_err());
        assert!(parse_surface_arg("ci:r=3").is_err());
        assert!(parse_surface_arg("ci:deg=6").is_err());
    }
}
