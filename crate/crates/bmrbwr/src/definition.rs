//! User-defined problems loaded from TOML.
//!
//! ```toml
//! name = "ring"
//! sense = "minimize"            # optional, or "maximize"
//! dimension = 2                 # needed when a bound is a single number
//! lower = -5.0                  # a number or one value per variable
//! upper = [5.0, 5.0]
//! objective = "x1^2 + x2^2"
//! inequalities = ["1 - x1^2 - x2^2"]   # each g(x) <= 0
//! equalities = []                      # each h(x) = 0
//! known_best = 1.0              # optional
//! witness = [1.0, 0.0]          # optional
//! ```
//!
//! Expressions use the grammar of [`crate::expr`].

use std::path::Path;
use std::sync::Arc;

use bmrbwr_core::problem::{ConstraintSet, ScalarFn};
use bmrbwr_core::{Bounds, ProblemSpec, Sense};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::expr::Expr;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Bound {
    Scalar(f64),
    PerVariable(Vec<f64>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct Definition {
    name: String,
    #[serde(default)]
    sense: Option<String>,
    dimension: Option<usize>,
    lower: Bound,
    upper: Bound,
    objective: String,
    #[serde(default)]
    inequalities: Vec<String>,
    #[serde(default)]
    equalities: Vec<String>,
    known_best: Option<f64>,
    witness: Option<Vec<f64>>,
}

pub fn load(path: &Path) -> Result<ProblemSpec> {
    let text = std::fs::read_to_string(path).map_err(Error::io(path))?;
    parse(&text).map_err(|e| match e {
        Error::Format { message, .. } => Error::format(path, message),
        Error::Toml { source, .. } => Error::Toml { path: path.into(), source },
        other => other,
    })
}

/// Parses a definition from TOML text.
pub fn parse(text: &str) -> Result<ProblemSpec> {
    let def: Definition = toml::from_str(text).map_err(|source| Error::Toml { path: "<definition>".into(), source })?;
    let bad = |m: String| Error::format("<definition>", m);

    let dim = def.dimension.or(match (&def.lower, &def.upper) {
        (Bound::PerVariable(v), _) | (_, Bound::PerVariable(v)) => Some(v.len()),
        _ => None,
    });
    let Some(dim) = dim else {
        return Err(bad("`dimension` is required when both bounds are single numbers".into()));
    };
    let expand = |b: &Bound, which: &str| match b {
        Bound::Scalar(v) => Ok(vec![*v; dim]),
        Bound::PerVariable(v) if v.len() == dim => Ok(v.clone()),
        Bound::PerVariable(v) => Err(bad(format!("{which} has {} values for {dim} variables", v.len()))),
    };
    let bounds = Bounds::new(expand(&def.lower, "lower")?, expand(&def.upper, "upper")?)?;

    let compile = |src: &str| -> Result<ScalarFn> {
        let e = Expr::parse(src)?;
        if e.max_var() > dim {
            return Err(bad(format!("{src:?} uses x{} but the problem has {dim} variables", e.max_var())));
        }
        Ok(Arc::new(move |x: &[f64]| e.eval(x)))
    };
    let objective = compile(&def.objective)?;
    let constraints = ConstraintSet {
        inequalities: def.inequalities.iter().map(|s| compile(s)).collect::<Result<_>>()?,
        equalities: def.equalities.iter().map(|s| compile(s)).collect::<Result<_>>()?,
    };
    let sense = match def.sense.as_deref().map(str::to_ascii_lowercase).as_deref() {
        None | Some("minimize" | "min") => Sense::Minimize,
        Some("maximize" | "max") => Sense::Maximize,
        Some(other) => return Err(bad(format!("unknown sense {other:?}"))),
    };

    let mut spec = ProblemSpec::new(def.name, bounds, objective)
        .with_constraints(constraints)
        .with_sense(sense)
        .with_source("problem definition file");
    if let Some(best) = def.known_best {
        spec = spec.with_known_best(best);
    }
    if let Some(w) = def.witness {
        if w.len() != dim {
            return Err(bad(format!("witness has {} values for {dim} variables", w.len())));
        }
        spec = spec.with_witness(w);
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bmrbwr_core::problem::ProblemKind;

    const RING: &str = r#"
name = "ring"
dimension = 2
lower = -5
upper = [5, 5]
objective = "x1^2 + x2^2"
inequalities = ["1 - x1^2 - x2^2"]
known_best = 1.0
witness = [1.0, 0.0]
"#;

    #[test]
    fn loads_a_constrained_problem() {
        let p = parse(RING).unwrap();
        assert_eq!(p.name, "ring");
        assert_eq!(p.dimension(), 2);
        assert_eq!(p.bounds.lower(), &[-5.0, -5.0]);
        assert_eq!(p.kind, ProblemKind::Constrained);
        let e = p.evaluate(&[0.5, 0.5]).unwrap();
        assert_eq!(e.objective, 0.5);
        assert_eq!(e.inequalities, vec![0.5]);
        assert_eq!(p.known_best, Some(1.0));
    }

    #[test]
    fn rejects_bad_definitions() {
        let cases = [
            RING.replace("x1^2 + x2^2\"", "x1^2 + x3^2\""),
            RING.replace("dimension = 2\n", "").replace("[5, 5]", "5"),
            RING.replace("[5, 5]", "[5, 5, 5]"),
            RING.replace("lower = -5", "lower = 10"),
            RING.replace("x1^2 + x2^2\"", "x1^^2\""),
            RING.replace("witness = [1.0, 0.0]", "witness = [1.0]"),
            RING.replace("name", "title"),
            format!("{RING}\nsense = \"sideways\""),
        ];
        for c in cases {
            assert!(parse(&c).is_err(), "{c}");
        }
    }

    #[test]
    fn maximize_and_unconstrained() {
        let p =
            parse("name = \"bump\"\nsense = \"maximize\"\nlower = [-1]\nupper = [1]\nobjective = \"-x1^2\"").unwrap();
        assert_eq!(p.sense, Sense::Maximize);
        assert_eq!(p.kind, ProblemKind::Unconstrained);
    }
}
