//! Verification suites fanned out over source labels.

use rayon::prelude::*;
use serde::Serialize;

use so5cg::oracle::{compare_with, OracleConfig};
use so5cg::verify::{
    full_unitarity, mixing_identities, presence_crosscheck, reduced_unitarity, su2_unitarity, symmetry_involution,
};
use so5cg::{dim, IrrepLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Orthogonality,
    Mixing,
    Symmetry,
    Presence,
    Oracle,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Mixing => "mixing",
            Suite::Symmetry => "symmetry",
            Suite::Presence => "presence",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: String,
    pub subject: String,
    pub checked: usize,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub suite: &'static str,
    pub max_twice_j: i64,
    pub tol: f64,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.error.is_some())
    }
}

/// Largest source dimension for which the full matrix is rebuilt.
const FULL_MATRIX_DIM: u64 = 35;

type Task = Box<dyn Fn() -> Check + Send + Sync>;

fn task(suite: &'static str, subject: String, run: impl Fn() -> Result<usize, String> + Send + Sync + 'static) -> Task {
    Box::new(move || {
        let (checked, error) = match run() {
            Ok(n) => (n, None),
            Err(e) => (0, Some(e)),
        };
        Check { suite: suite.into(), subject: subject.clone(), checked, error }
    })
}

fn tasks(suite: Suite, max_twice_j: i64, tol: f64, sources: &[IrrepLabel]) -> Vec<Task> {
    let labels = IrrepLabel::all_up_to(max_twice_j);
    let mut out: Vec<Task> = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Orthogonality) {
        for &l in &labels {
            out.push(task("reduced_unitarity", l.to_string(), move || reduced_unitarity(l)));
        }
        for l in labels.iter().copied().filter(|l| dim(*l) <= FULL_MATRIX_DIM) {
            out.push(task("full_unitarity", l.to_string(), move || full_unitarity(l, true)));
        }
        let su2 = max_twice_j.min(6);
        out.push(task("su2_unitarity", format!("2j <= {su2}"), move || su2_unitarity(su2)));
    }
    if want(Suite::Mixing) {
        for &l in &labels {
            out.push(task("mixing", l.to_string(), move || mixing_identities(l)));
        }
    }
    if want(Suite::Symmetry) {
        for &l in &labels {
            out.push(task("symmetry", l.to_string(), move || symmetry_involution(l)));
        }
    }
    if want(Suite::Presence) {
        for &l in &labels {
            out.push(task("presence", l.to_string(), move || presence_crosscheck(l)));
        }
    }
    if want(Suite::Oracle) {
        let oracle_sources: Vec<IrrepLabel> = if sources.is_empty() {
            labels.iter().copied().filter(|l| dim(*l) <= FULL_MATRIX_DIM).collect()
        } else {
            sources.to_vec()
        };
        for l in oracle_sources {
            out.push(task("oracle", l.to_string(), move || {
                let config = OracleConfig { tol, cap: OracleConfig::default().cap.max(dim(l)), ..Default::default() };
                let r = compare_with(l, &config, None).map_err(|e| e.to_string())?;
                if r.pass {
                    Ok(r.blocks.len())
                } else {
                    Err(serde_json::to_string(&r).expect("serializable report"))
                }
            }));
        }
    }
    out
}

pub fn run(suite: Suite, max_twice_j: i64, tol: f64, sources: &[IrrepLabel]) -> Report {
    let checks: Vec<Check> = tasks(suite, max_twice_j, tol, sources).par_iter().map(|t| t()).collect();
    let pass = checks.iter().all(|c| c.error.is_none());
    Report { schema: so5cg::export::SCHEMA, suite: suite.name(), max_twice_j, tol, pass, checks }
}
