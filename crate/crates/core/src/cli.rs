//! Command-line front end: one JSON document in, one canonical JSON document
//! out.
//!
//! Exit codes: `0` computed (or predicate true), `1` predicate false with a
//! certificate, `2` input or usage error with `{"error", "witness"}`.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gammoid::{digraph_from_presentation, gammoid_valuation, stable_intersect_hyperplanes};
use crate::json::*;
use crate::matroid::Matroid;
use crate::presentations::{
    distinguished, presentation_assignment, sample_presentation, verify_presentation,
};
use crate::transversal::{
    check_set_presentation, is_transversal, PresentationViolation, TauViolation,
    TransversalVerdict,
};
use crate::trop::TropMatrix;
use crate::valuated::ValuatedMatroid;

#[derive(Parser, Debug)]
#[command(
    name = "tropical-stiefel",
    version,
    about = "Valuated matroids, tropical linear spaces and their presentations",
    after_help = "Ground-set elements are 1-based in all JSON. Tropical numbers are \
                  integers, \"p/q\" strings or \"inf\"."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input JSON file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,
    /// Output file, or `-` for standard output.
    #[arg(long, global = true, default_value = "-")]
    pub output: String,
    /// Seed for sampling; `0` returns the distinguished apices.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for the parallel kernels.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Indent the output.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Tropical maximal minors of {"matrix": [[...]]}.
    Stiefel,
    /// Check the tropical Plücker relations of a valuation.
    CheckPluecker,
    /// Support matroid of a valuation.
    Underlying,
    /// Dual of a valuation or of {"matroid": ...}.
    Dual,
    /// {"valuation", "set"}: restriction to the set, renumbered.
    Restrict,
    /// {"valuation", "set"}: contraction of the set, renumbered.
    Contract,
    /// {"valuation", "point"}: initial matroid at a finite point.
    Initial,
    /// Loopless cells of the regular subdivision.
    Cells,
    /// Vertices of the tropical linear space with their cells.
    Vertices,
    /// Transversality of a matroid, with a certificate either way.
    IsTransversalMatroid,
    /// Maximal presentation of a transversal matroid.
    MaxPresentation,
    /// {"matroid", "sets"}: check a set-system presentation.
    VerifySetPresentation,
    /// {"valuation", "points"}: region-count presentation check.
    VerifyPresentation,
    /// Distinguished matroids and apices of a valuation.
    Distinguished,
    /// {"valuation", "points"}: membership in the presentation space.
    InPresentationSpace,
    /// A presentation of a valuation; see --seed.
    SamplePresentation,
    /// {"left", "right"}: stable sum.
    StableSum,
    /// {"left", "right"} or {"hyperplanes", "target"?}: stable intersection.
    StableIntersect,
    /// Valuation of a weighted digraph with sinks.
    Gammoid,
    /// {"points", "basis"?, "sigma"?}: digraph realizing the dual valuation.
    DigraphFromPresentation,
    /// {"valuation", "point"}: whether the point lies on the linear space.
    Membership,
}

/// Result of a command: exit code and JSON document.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub json: Value,
}

impl Outcome {
    fn done(json: Value) -> Outcome {
        Outcome { code: 0, json }
    }

    fn verdict(ok: bool, json: Value) -> Outcome {
        Outcome {
            code: if ok { 0 } else { 1 },
            json,
        }
    }

    fn error(e: &Error) -> Outcome {
        Outcome {
            code: 2,
            json: error_to_json(e),
        }
    }
}

/// The object under `key`, or the whole input when the key is absent.
fn part<'a>(input: &'a Value, key: &str) -> &'a Value {
    input.get(key).unwrap_or(input)
}

fn valuation(input: &Value) -> Result<ValuatedMatroid> {
    valuation_from_json(part(input, "valuation"), true)
}

fn matroid(input: &Value) -> Result<Matroid> {
    matroid_from_json(part(input, "matroid"))
}

fn matrix(input: &Value) -> Result<TropMatrix> {
    matrix_from_json(part(input, "matrix"))
}

fn tau_json(t: &TauViolation) -> Value {
    match t {
        TauViolation::Negative { flat, tau } => {
            json!({ "kind": "negative", "flat": subset_to_json(*flat), "tau": tau })
        }
        TauViolation::Excess { flat, sum, corank } => json!({
            "kind": "excess", "flat": subset_to_json(*flat), "sum": sum, "corank": corank
        }),
    }
}

fn transversal_json(verdict: &TransversalVerdict) -> Value {
    match verdict {
        TransversalVerdict::Yes(s) => {
            json!({ "transversal": true, "presentation": set_system_to_json(s) })
        }
        TransversalVerdict::No { tau, family } => json!({
            "transversal": false,
            "family": family.family.iter().map(|f| subset_to_json(*f)).collect::<Vec<_>>(),
            "ingleton": { "lhs": family.lhs, "rhs": family.rhs },
            "tau": tau_json(tau),
        }),
    }
}

fn presentation_violation_json(v: &PresentationViolation) -> Value {
    match v {
        PresentationViolation::WrongSize { expected, got } => {
            json!({ "kind": "size", "expected": expected, "got": got })
        }
        PresentationViolation::NotAFlat { index } => {
            json!({ "kind": "not-a-flat", "set": index + 1 })
        }
        PresentationViolation::CoclosureMismatch => json!({ "kind": "coclosures" }),
        PresentationViolation::Hall { indices } => {
            json!({ "kind": "hall", "sets": subset_to_json(*indices) })
        }
    }
}

fn set_arg(input: &Value, n: usize) -> Result<crate::subset::Subset> {
    subset_from_json(field(input, "set")?, n)
}

/// Run one command on a parsed input document.
pub fn execute(command: Command, input: &Value, seed: u64) -> Outcome {
    match dispatch(command, input, seed) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

fn dispatch(command: Command, input: &Value, seed: u64) -> Result<Outcome> {
    use Command::*;
    Ok(match command {
        Stiefel => Outcome::done(valuation_to_json(&matrix(input)?.stiefel()?)),
        CheckPluecker => {
            let v = valuation_from_json(part(input, "valuation"), false)?;
            match v.check_pluecker() {
                Ok(()) => Outcome::done(json!({ "ok": true })),
                Err(w) => Outcome::verdict(
                    false,
                    json!({ "ok": false, "witness": { "A": subset_to_json(w.a), "C": subset_to_json(w.c) } }),
                ),
            }
        }
        Underlying => Outcome::done(matroid_to_json(&valuation(input)?.underlying())),
        Dual => {
            if input.get("matroid").is_some() || input.get("bases").is_some() {
                Outcome::done(matroid_to_json(&matroid(input)?.dual()))
            } else {
                Outcome::done(valuation_to_json(&valuation(input)?.dual()))
            }
        }
        Restrict | Contract => {
            let v = valuation(input)?;
            let s = set_arg(input, v.n())?;
            let w = if command == Restrict {
                v.restrict(s)?
            } else {
                v.contract(s)?
            };
            Outcome::done(valuation_to_json(&w))
        }
        Initial => {
            let v = valuation(input)?;
            let x = point_from_json(field(input, "point")?)?;
            check_length(x.n(), v.n())?;
            Outcome::done(matroid_to_json(&v.initial_matroid(&x)?))
        }
        Cells => {
            let cx = valuation(input)?.cell_complex()?;
            let cells: Vec<Value> = cx
                .cells
                .iter()
                .map(|c| {
                    json!({
                        "matroid": matroid_to_json(&c.matroid),
                        "witness": point_to_json(&c.witness),
                        "maximal": c.is_maximal,
                    })
                })
                .collect();
            Outcome::done(json!({ "cells": cells }))
        }
        Vertices => {
            let cx = valuation(input)?.cell_complex()?;
            let vs: Vec<Value> = cx
                .connected()
                .map(|(m, x)| json!({ "matroid": matroid_to_json(m), "vertex": point_to_json(x) }))
                .collect();
            Outcome::done(json!({ "vertices": vs }))
        }
        IsTransversalMatroid => {
            let verdict = is_transversal(&matroid(input)?);
            Outcome::verdict(verdict.is_yes(), transversal_json(&verdict))
        }
        MaxPresentation => match is_transversal(&matroid(input)?) {
            TransversalVerdict::Yes(s) => Outcome::done(set_system_to_json(&s)),
            no => Outcome::verdict(false, transversal_json(&no)),
        },
        VerifySetPresentation => {
            let m = matroid(input)?;
            let s = set_system_from_json(input, m.n())?;
            match check_set_presentation(&m, &s) {
                Ok(()) => Outcome::done(json!({ "ok": true })),
                Err(w) => Outcome::verdict(
                    false,
                    json!({ "ok": false, "violation": presentation_violation_json(&w) }),
                ),
            }
        }
        VerifyPresentation => {
            let v = valuation(input)?;
            let pts = points_from_json(field(input, "points")?)?;
            match verify_presentation(&v, &pts) {
                Ok(report) => {
                    let violations: Vec<Value> = report
                        .violations
                        .iter()
                        .map(|w| {
                            json!({
                                "cell": w.cell.bases().iter().map(|b| b.to_one_based()).collect::<Vec<_>>(),
                                "flat": subset_to_json(w.flat),
                                "kind": w.kind.as_str(),
                                "count": w.count,
                                "bound": w.bound,
                            })
                        })
                        .collect();
                    Outcome::verdict(report.ok(), json!({ "ok": report.ok(), "violations": violations }))
                }
                Err(Error::PointOutsideL { index }) => Outcome::verdict(
                    false,
                    json!({ "ok": false, "violations": [], "outside": index + 1 }),
                ),
                Err(e) => return Err(e),
            }
        }
        Distinguished => {
            let v = valuation(input)?;
            let data = distinguished(&v)?;
            let members: Vec<Value> = data
                .members
                .iter()
                .map(|m| {
                    json!({
                        "matroid": matroid_to_json(&m.matroid.expand_to(m.support, v.n())),
                        "flat": subset_to_json(m.flat),
                        "multiplicity": m.multiplicity,
                        "apex": point_to_json(&m.apex),
                    })
                })
                .collect();
            Outcome::done(json!({ "members": members, "apices": points_to_json(&data.apices()) }))
        }
        InPresentationSpace => {
            let v = valuation(input)?;
            let pts = points_from_json(field(input, "points")?)?;
            match presentation_assignment(&v, &pts)? {
                Some(a) => {
                    let apices = distinguished(&v)?;
                    let assignment: Vec<Value> = a
                        .iter()
                        .map(|&k| point_to_json(&apices.members[k].apex))
                        .collect();
                    Outcome::done(json!({ "ok": true, "apices": assignment }))
                }
                None => Outcome::verdict(false, json!({ "ok": false })),
            }
        }
        SamplePresentation => {
            let pts = sample_presentation(&valuation(input)?, seed)?;
            Outcome::done(json!({ "points": points_to_json(&pts) }))
        }
        StableSum => {
            let l = valuation_from_json(field(input, "left")?, true)?;
            let r = valuation_from_json(field(input, "right")?, true)?;
            Outcome::done(valuation_to_json(&l.stable_sum(&r)?))
        }
        StableIntersect => {
            if let Some(h) = input.get("hyperplanes") {
                let pts = points_from_json(h)?;
                match input.get("target") {
                    Some(t) => {
                        let target = valuation_from_json(t, true)?;
                        let equal = stable_intersect_hyperplanes(&pts, &target)?;
                        Outcome::verdict(equal, json!({ "equal": equal }))
                    }
                    None => {
                        let mut it = pts.iter();
                        let first = it
                            .next()
                            .ok_or_else(|| Error::Parse("no hyperplanes given".into()))?;
                        let mut acc = ValuatedMatroid::hyperplane(first);
                        for p in it {
                            check_length(p.n(), acc.n())?;
                            acc = acc.stable_intersection(&ValuatedMatroid::hyperplane(p))?;
                        }
                        Outcome::done(valuation_to_json(&acc))
                    }
                }
            } else {
                let l = valuation_from_json(field(input, "left")?, true)?;
                let r = valuation_from_json(field(input, "right")?, true)?;
                Outcome::done(valuation_to_json(&l.stable_intersection(&r)?))
            }
        }
        Gammoid => Outcome::done(valuation_to_json(&gammoid_valuation(&digraph_from_json(
            part(input, "digraph"),
        )?)?)),
        DigraphFromPresentation => {
            let pts = match input.get("points") {
                Some(p) => points_from_json(p)?,
                None => matrix(input)?.row_points()?,
            };
            let n = pts.first().map_or(0, |p| p.n());
            let basis = input.get("basis").map(|b| subset_from_json(b, n)).transpose()?;
            let sigma = input
                .get("sigma")
                .map(|s| {
                    s.as_array()
                        .ok_or_else(|| Error::Parse("\"sigma\" is an array of columns".into()))?
                        .iter()
                        .map(|c| {
                            c.as_u64()
                                .filter(|&c| c >= 1 && c as usize <= n)
                                .map(|c| c as usize - 1)
                                .ok_or_else(|| Error::Parse(format!("{c} is not a column")))
                        })
                        .collect::<Result<Vec<usize>>>()
                })
                .transpose()?;
            let g = digraph_from_presentation(&pts, basis, sigma.as_deref())?;
            Outcome::done(digraph_to_json(&g))
        }
        Membership => {
            let v = valuation(input)?;
            let y = point_from_json(field(input, "point")?)?;
            check_length(y.n(), v.n())?;
            match v.membership_violation(&y) {
                None => Outcome::done(json!({ "member": true })),
                Some(c) => Outcome::verdict(false, json!({ "member": false, "circuit": subset_to_json(c) })),
            }
        }
    })
}

fn check_length(got: usize, n: usize) -> Result<()> {
    if got != n {
        return Err(Error::DimensionMismatch(format!(
            "point of length {got} for a ground set of size {n}"
        )));
    }
    Ok(())
}

fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    }
    .expect("values serialize");
    s.push('\n');
    s
}

fn read_input(path: &str) -> Result<Value> {
    let mut text = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))
}

fn write_output(path: &str, text: &str) -> std::io::Result<()> {
    if path == "-" {
        std::io::stdout().write_all(text.as_bytes())
    } else {
        std::fs::write(path, text)
    }
}

/// Parse arguments, run the command and write its output. Returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            let msg = e.render().to_string();
            print!("{}", render(&json!({ "error": msg.trim(), "witness": null }), false));
            return 2;
        }
    };
    if let Some(t) = cli.threads {
        // Fails only if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let outcome = match read_input(&cli.input) {
        Ok(input) => execute(cli.command, &input, cli.seed),
        Err(e) => Outcome::error(&e),
    };
    let text = render(&outcome.json, cli.pretty);
    if let Err(e) = write_output(&cli.output, &text) {
        eprintln!("cannot write {}: {e}", cli.output);
        return 2;
    }
    outcome.code
}
