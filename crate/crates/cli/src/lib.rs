//! Verification suites, enumeration and diagrams behind the `toposcope`
//! binary.

pub mod dot;
pub mod report;
pub mod suites;

use std::fmt::Write;
use std::time::Instant;

use thiserror::Error;

use toposcope::lattice::enumerate_topologies;
use toposcope::{FiniteTopology, PropertyKind};

use report::VerificationReport;
use suites::{Params, Uses};

/// Default largest ground size the finite suites will run on.
pub const SOFT_CAP: usize = 4;
/// No finite computation goes beyond this, whatever the environment says.
pub const HARD_CAP: usize = 6;
/// Largest ground size whose full lattice is drawn.
pub const DOT_LATTICE_LIMIT: usize = 3;
pub const MAX_INDEX_LIMIT: usize = 10;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown suite `{0}` (try `toposcope list`)")]
    UnknownSuite(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error(transparent)]
    Core(#[from] toposcope::Error),
}

/// Soft cap, taken from `TOPOSCOPE_MAX_N` when set.
pub fn soft_cap_from(var: Option<&str>) -> Result<usize, CliError> {
    match var {
        None => Ok(SOFT_CAP),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(cap) if cap <= HARD_CAP => Ok(cap),
            _ => Err(CliError::BadParam(format!("TOPOSCOPE_MAX_N={v} is not a size in 0..={HARD_CAP}"))),
        },
    }
}

pub fn verify(name: &str, params: &Params, soft_cap: usize, timing: bool) -> Result<VerificationReport, CliError> {
    let suite = suites::find(name).ok_or_else(|| CliError::UnknownSuite(name.to_string()))?;
    if params.n > HARD_CAP {
        return Err(CliError::BadParam(format!("--n {} exceeds the hard cap {HARD_CAP}", params.n)));
    }
    if params.max_index == 0 || params.max_index > MAX_INDEX_LIMIT {
        return Err(CliError::BadParam(format!("--max-index must lie in 1..={MAX_INDEX_LIMIT}")));
    }
    let rec = suite.report_params(params);
    if suite.uses == Uses::Size && params.n > soft_cap {
        let why = format!("n = {} is above the soft cap {soft_cap}; raise it with TOPOSCOPE_MAX_N", params.n);
        return Ok(VerificationReport::skipped(name, rec, why));
    }
    let start = Instant::now();
    let mut report = match suite.run(params) {
        Ok(evidence) => VerificationReport::from_evidence(name, rec, evidence),
        Err(e @ toposcope::Error::TooLarge { .. }) => VerificationReport::skipped(name, rec, e.to_string()),
        Err(e) => VerificationReport::errored(name, rec, &e),
    };
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Count,
    Json,
    Dot,
}

pub fn enumerate(n: usize, filter: Option<PropertyKind>, format: Format) -> Result<String, CliError> {
    let mut ts = enumerate_topologies(n, filter)?;
    ts.sort();
    match format {
        Format::Count => Ok(format!("{}\n", ts.len())),
        Format::Json => {
            let mut out = String::new();
            for t in &ts {
                writeln!(out, "{}", serde_json::to_string(&t.masks()).expect("masks serialize")).unwrap();
            }
            Ok(out)
        }
        // larger lattices are unreadable; `show --format dot` draws single topologies
        Format::Dot if n > DOT_LATTICE_LIMIT => Err(toposcope::Error::TooLarge { n, limit: DOT_LATTICE_LIMIT }.into()),
        Format::Dot => Ok(dot::lattice(&ts)),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum View {
    Text,
    Json,
    Dot,
}

/// Describes one topology given by its open masks.
pub fn show(n: usize, masks: &[u64], view: View) -> Result<String, CliError> {
    let t = FiniteTopology::from_masks(n, masks)?;
    let props: Vec<&str> = PropertyKind::ALL.iter().filter(|&&p| t.has_property(p)).map(|p| p.name()).collect();
    match view {
        View::Dot => Ok(dot::specialization(&t)),
        View::Json => {
            let v = serde_json::json!({
                "n": n,
                "opens": t.masks(),
                "closed": t.closed_sets().iter().map(|c| c.bits()).collect::<Vec<_>>(),
                "irreducible_closed": t.irr_closed().iter().map(|c| c.bits()).collect::<Vec<_>>(),
                "properties": props,
            });
            Ok(format!("{v}\n"))
        }
        View::Text => {
            let mut out = String::new();
            writeln!(out, "opens:        {t}").unwrap();
            let closed: Vec<String> = t.closed_sets().iter().map(ToString::to_string).collect();
            writeln!(out, "closed:       {}", closed.join(", ")).unwrap();
            let irr: Vec<String> = t.irr_closed().iter().map(ToString::to_string).collect();
            writeln!(out, "irreducible:  {}", irr.join(", ")).unwrap();
            writeln!(out, "order:        {}", t.specialization()).unwrap();
            writeln!(out, "properties:   {}", props.join(" ")).unwrap();
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use report::Verdict;

    #[test]
    fn cap_policy() {
        let p = Params { n: 5, ..Params::default() };
        assert_eq!(verify("t1-join", &p, SOFT_CAP, false).unwrap().verdict, Verdict::Skip);
        let p = Params { n: 7, ..Params::default() };
        assert!(matches!(verify("t1-join", &p, SOFT_CAP, false), Err(CliError::BadParam(_))));
        // symbolic suites ignore n
        let p = Params { n: 6, ..Params::default() };
        assert_eq!(verify("cofinite-join", &p, SOFT_CAP, false).unwrap().verdict, Verdict::Pass);
        assert!(matches!(verify("nope", &p, SOFT_CAP, false), Err(CliError::UnknownSuite(_))));
        assert_eq!(soft_cap_from(Some("5")).unwrap(), 5);
        assert!(soft_cap_from(Some("9")).is_err());
    }

    #[test]
    fn too_large_inside_a_suite_is_a_skip() {
        let p = Params { n: 6, ..Params::default() };
        let r = verify("enumeration", &p, HARD_CAP, false).unwrap();
        assert_eq!(r.verdict, Verdict::Skip);
        assert!(r.note.unwrap().contains("exceeds the limit"));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate(3, None, Format::Count).unwrap(), "29\n");
        assert_eq!(enumerate(3, Some(PropertyKind::T0), Format::Count).unwrap(), "19\n");
        assert_eq!(enumerate(2, None, Format::Json).unwrap().lines().count(), 4);
        assert!(matches!(enumerate(4, None, Format::Dot), Err(CliError::Core(toposcope::Error::TooLarge { .. }))));
        assert!(matches!(enumerate(6, None, Format::Count), Err(CliError::Core(_))));
    }

    #[test]
    fn show_sierpinski() {
        let out = show(2, &[0, 2, 3], View::Text).unwrap();
        assert!(out.contains("properties:   t0 td sober"));
        assert!(show(2, &[0, 1, 2], View::Text).is_err());
    }
}
