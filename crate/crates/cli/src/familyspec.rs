//! Resolution of the `--family` and `--perturb` argument values. Each accepts
//! inline JSON (first non-space byte `{`), a path to a JSON file, or — for
//! families — a builtin shorthand like `example1` or `crr(10,12)`.

use crate::Failure;
use r2spectra_core::{BuiltinParams, PerturbationSpec, RecurrenceFamily};
use std::fs;
use std::path::Path;

fn read_doc(arg: &str) -> Result<Option<String>, Failure> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') {
        return Ok(Some(trimmed.to_string()));
    }
    if let Some(path) = trimmed.strip_prefix('@') {
        return fs::read_to_string(path)
            .map(Some)
            .map_err(|e| Failure::Usage(format!("cannot read '{path}': {e}")));
    }
    if trimmed.ends_with(".json") || Path::new(trimmed).is_file() {
        return fs::read_to_string(trimmed)
            .map(Some)
            .map_err(|e| Failure::Usage(format!("cannot read '{trimmed}': {e}")));
    }
    Ok(None)
}

/// Builtin shorthand: `name` or `name(p1,p2)` with positional numeric
/// parameters — ζ, θ for the crr families and a, b for chebyshev_r2.
fn builtin_shorthand(arg: &str) -> Result<RecurrenceFamily, Failure> {
    let (name, params) = match arg.find('(') {
        None => (arg, Vec::new()),
        Some(open) => {
            let inner = arg[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Failure::Usage(format!("unbalanced parentheses in '{arg}'")))?;
            let values: Result<Vec<f64>, _> = inner
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<f64>())
                .collect();
            let values =
                values.map_err(|e| Failure::Usage(format!("bad parameter in '{arg}': {e}")))?;
            (&arg[..open], values)
        }
    };
    let name = match name {
        "lambda2_half" => "lambda2half",
        other => other,
    };
    let mut bp = BuiltinParams::default();
    match name {
        "crr" | "crr_offset" => {
            bp.zeta = params.first().copied();
            bp.theta = params.get(1).copied();
        }
        _ => {
            bp.a = params.first().copied();
            bp.b = params.get(1).copied();
        }
    }
    RecurrenceFamily::builtin(name, &bp).map_err(|e| Failure::Usage(e.to_string()))
}

/// Resolves a `--family` value to a recurrence family.
pub fn resolve_family(arg: &str) -> Result<RecurrenceFamily, Failure> {
    match read_doc(arg)? {
        Some(doc) => RecurrenceFamily::from_json(&doc).map_err(|e| Failure::Usage(e.to_string())),
        None => builtin_shorthand(arg.trim()),
    }
}

/// Resolves a `--perturb` value to a perturbation specification.
pub fn resolve_perturbation(arg: &str) -> Result<PerturbationSpec, Failure> {
    let doc = read_doc(arg)?.ok_or_else(|| {
        Failure::Usage(format!(
            "--perturb expects inline JSON or a JSON file path, got '{arg}'"
        ))
    })?;
    PerturbationSpec::from_json(&doc).map_err(|e| Failure::Usage(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_with_parameters_resolves() {
        let fam = resolve_family("crr(2.5,-1)").unwrap();
        assert_eq!(fam.name, "crr(2.5,-1)");
        let fam = resolve_family("chebyshev_r2(1,4)").unwrap();
        assert_eq!(fam.name, "chebyshev_r2(1,4)");
    }

    #[test]
    fn shorthand_aliases_resolve() {
        assert!(resolve_family("lambda2half").is_ok());
        assert!(resolve_family("lambda2_half").is_ok());
        assert!(resolve_family("codilation_demo").is_ok());
    }

    #[test]
    fn inline_json_resolves() {
        let fam = resolve_family(r#"{"builtin": "crr", "params": {"zeta": 3.0}}"#).unwrap();
        assert!(fam.name.starts_with("crr"));
        let spec = resolve_perturbation(r#"{"entries": [{"k": 3, "mu": -0.3}]}"#).unwrap();
        assert_eq!(spec.entries().len(), 1);
    }

    #[test]
    fn unknown_name_is_a_usage_error() {
        assert!(matches!(
            resolve_family("nonexistent"),
            Err(Failure::Usage(_))
        ));
    }
}
