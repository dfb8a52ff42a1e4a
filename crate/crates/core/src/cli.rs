//! The `hrank` command line.
//!
//! Exit status: 0 on success, 1 when a verification fails or a pair is not a
//! subgroup pair, 2 on malformed input.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::catalog::{self, template, VerificationReport};
use crate::cones::{b_plus_generators, format_weights, rank_profile, RankProfile};
use crate::decision::{decide, embed_obstruction};
use crate::notation::{self, render};
use crate::satake::{render_ascii, satake_of, RealFormSpec};

const GRAMMAR: &str = "\
EXPRESSIONS:
  Products of factors joined by 'x', '×' or '*':
    sl(n,R)  sl(n,C)  sl(n,H)  su*(2n)  su(p,q)  su(n)  u(p,q)
    so(p,q)  so(n)  so(n,C)  so*(2n)  spin(p,q)  sp(n,R)  sp(n,C)  sp(p,q)  sp(n)
    e6(I..IV)  e7(V..VII)  e8(VIII..IX)  f4(I..II)  g2(split)
    e6 e7 e8 f4 g2 (compact)  e6(C) ... (complex)  S(U(p,q) x U(r))  T^k  R^k
  Braces, brackets and quotients such as /Z_3 or /{Z_2 x Z_3} are ignored.
  Templates like \"SL(4k+2l,R)\" take values from --params k=2,l=1.

EXAMPLES:
  hrank rank \"su*(14) x T^1\"
  hrank decide \"sl(10,R)\" \"so(5,5)\"
  hrank orbits \"e6(IV)\"
  hrank decide --params k=1,l=1 \"SL(4k+2l,R)\" \"SO(2k,2k) x Sp(l,R)\"";

#[derive(Debug, Parser)]
#[command(
    name = "hrank",
    version,
    about = "Real and a-hyperbolic ranks, and the rank tests for discontinuous actions on G/H",
    after_help = GRAMMAR
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Values for template parameters, e.g. k=2,l=1.
    #[arg(long, global = true, value_parser = parse_params)]
    pub params: Option<template::Params>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Real rank and a-hyperbolic rank of a reductive algebra.
    Rank { expr: String },
    /// Run conditions (A), (B), (C) on G/H.
    Decide { g: String, h: String },
    /// Test the rank inequalities a reductive subgroup must satisfy.
    EmbedCheck { g: String, h: String },
    /// Draw the Satake diagram of a simple real form.
    SatakeShow { form: String },
    /// Generators of the antipodal hyperbolic cone b+.
    Orbits { form: String },
    /// Recompute the table of forms with unequal ranks.
    Table1 {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(1..))]
        kmax: i64,
    },
    /// Decide every 3-symmetric space in the bundled table.
    Table2 {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(2..))]
        bound: i64,
    },
    /// List every real form whose two ranks differ.
    AnomalyScan {
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(2..))]
        rank: u64,
    },
}

fn parse_params(s: &str) -> Result<template::Params, String> {
    let mut out = template::Params::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("expected name=value, got {part:?}"))?;
        let mut name = k.trim().chars();
        let c = match (name.next(), name.next()) {
            (Some(c), None) if c.is_ascii_lowercase() => c,
            _ => return Err(format!("parameter names are single lowercase letters, got {k:?}")),
        };
        let v: i64 = v.trim().parse().map_err(|_| format!("not an integer: {v:?}"))?;
        out.insert(c, v);
    }
    Ok(out)
}

fn describe(label: &str, v: &Profiled) -> String {
    format!(
        "{label}: {}  real rank {}, a-hyperbolic rank {}",
        v.algebra, v.real_rank, v.a_hyperbolic_rank
    )
}

/// Failure with its exit status.
struct Exit(i32, String);

fn input_error(e: impl ToString) -> Exit {
    Exit(2, e.to_string())
}

#[derive(Serialize)]
struct Profiled {
    algebra: String,
    real_rank: usize,
    a_hyperbolic_rank: usize,
    group_data_discarded: bool,
}

struct Ctx<'a, W: Write> {
    json: bool,
    params: Option<&'a template::Params>,
    out: &'a mut W,
}

impl<W: Write> Ctx<'_, W> {
    fn expand(&self, text: &str) -> Result<String, Exit> {
        match self.params {
            Some(p) => template::instantiate(text, p).map_err(input_error),
            None => Ok(text.to_string()),
        }
    }

    fn profiled(&self, text: &str) -> Result<(Profiled, RankProfile), Exit> {
        let text = self.expand(text)?;
        let e = notation::parse_expression(&text).map_err(|e| input_error(format!("in {text:?}: {e}")))?;
        let p = rank_profile(&e.normalized).map_err(input_error)?;
        let view = Profiled {
            algebra: render(&e.normalized),
            real_rank: p.real_rank,
            a_hyperbolic_rank: p.a_hyperbolic_rank,
            group_data_discarded: e.group_data_discarded,
        };
        Ok((view, p))
    }

    fn simple_form(&self, text: &str) -> Result<RealFormSpec, Exit> {
        let text = self.expand(text)?;
        let alg = notation::parse(&text).map_err(|e| input_error(format!("in {text:?}: {e}")))?;
        match alg.simple_factors.as_slice() {
            [f] if alg.is_simple() => Ok(*f),
            _ => Err(input_error(format!("{} is not a simple real form", render(&alg)))),
        }
    }

    fn emit_json(&mut self, value: &impl Serialize) -> Result<(), Exit> {
        let s = serde_json::to_string_pretty(value).map_err(|e| Exit(1, e.to_string()))?;
        self.line(&s)
    }

    fn line(&mut self, s: &str) -> Result<(), Exit> {
        writeln!(self.out, "{s}").map_err(|e| Exit(1, e.to_string()))
    }

    fn report(&mut self, report: &VerificationReport) -> Result<(), Exit> {
        if self.json {
            self.emit_json(&json!({ "passes": report.passes(), "report": report }))?;
        } else {
            self.line(&report.to_string())?;
        }
        if report.passes() {
            Ok(())
        } else {
            Err(Exit(1, format!("{} failure(s)", report.failures.len())))
        }
    }

    fn run(&mut self, command: &Command) -> Result<(), Exit> {
        match command {
            Command::Rank { expr } => {
                let (view, _) = self.profiled(expr)?;
                if self.json {
                    return self.emit_json(&view);
                }
                self.line(&format!("algebra: {}", view.algebra))?;
                self.line(&format!("real rank: {}", view.real_rank))?;
                self.line(&format!("a-hyperbolic rank: {}", view.a_hyperbolic_rank))?;
                if view.group_data_discarded {
                    self.line("note: group data (quotients, coverings) discarded")?;
                }
                Ok(())
            }
            Command::Decide { g, h } => {
                let (gv, gp) = self.profiled(g)?;
                let (hv, hp) = self.profiled(h)?;
                let d = decide(gp, hp).map_err(|e| Exit(1, e.to_string()))?;
                if self.json {
                    return self.emit_json(&json!({
                        "g": gv,
                        "h": hv,
                        "verdict": d.verdict,
                        "deciding_condition": d.deciding_condition(),
                        "trace": d.trace,
                    }));
                }
                self.line(&describe("g", &gv))?;
                self.line(&describe("h", &hv))?;
                for step in &d.trace {
                    self.line(&step.to_string())?;
                }
                self.line(&format!("verdict: {}", d.verdict))
            }
            Command::EmbedCheck { g, h } => {
                let (gv, gp) = self.profiled(g)?;
                let (hv, hp) = self.profiled(h)?;
                let o = embed_obstruction(gp, hp);
                if self.json {
                    return self.emit_json(&json!({ "g": gv, "h": hv, "obstruction": o }));
                }
                self.line(&describe("g", &gv))?;
                self.line(&describe("h", &hv))?;
                match o.witness {
                    Some(w) => self.line(&format!("obstructed: {w}")),
                    None => self.line("not obstructed"),
                }
            }
            Command::SatakeShow { form } => {
                let spec = self.simple_form(form)?;
                let d = satake_of(&spec).map_err(input_error)?;
                if self.json {
                    return self.emit_json(&json!({ "form": spec.to_string(), "diagram": d.export() }));
                }
                self.line(&format!("{spec}  [{}]", d.shape()))?;
                self.line(render_ascii(&d).trim_end())
            }
            Command::Orbits { form } => {
                let spec = self.simple_form(form)?;
                let d = satake_of(&spec).map_err(input_error)?;
                let gens = b_plus_generators(&d);
                let chain: Vec<String> = gens.iter().map(|w| format_weights(&w.chain_order(&d))).collect();
                let bourbaki: Vec<String> = gens.iter().map(|w| w.to_string()).collect();
                if self.json {
                    return self.emit_json(&json!({
                        "form": spec.to_string(),
                        "a_hyperbolic_rank": gens.len(),
                        "generators": chain,
                        "generators_bourbaki": bourbaki,
                    }));
                }
                self.line(&format!("{spec}: a-hyperbolic rank {}", gens.len()))?;
                for (c, b) in chain.iter().zip(&bourbaki) {
                    if c == b {
                        self.line(c)?;
                    } else {
                        self.line(&format!("{c}  bourbaki {b}"))?;
                    }
                }
                Ok(())
            }
            Command::Table1 { kmax } => self.report(&catalog::verify_table1(*kmax)),
            Command::Table2 { bound } => self.report(&catalog::verify_table2(*bound)),
            Command::AnomalyScan { rank } => {
                let bound = *rank as usize;
                let found = catalog::anomaly_scan(bound);
                let predicted = catalog::table1_prediction(bound);
                let found_set: BTreeSet<RealFormSpec> = found.iter().copied().collect();
                let missing: Vec<String> = predicted.difference(&found_set).map(|s| s.to_string()).collect();
                let extra: Vec<String> = found_set.difference(&predicted).map(|s| s.to_string()).collect();
                let mut rows = Vec::new();
                for spec in &found {
                    let d = satake_of(spec).map_err(|e| Exit(1, e.to_string()))?;
                    rows.push((spec.to_string(), RankProfile::of_diagram(&d)));
                }
                if self.json {
                    let anomalies: Vec<BTreeMap<&str, serde_json::Value>> = rows
                        .iter()
                        .map(|(s, p)| {
                            BTreeMap::from([
                                ("form", json!(s)),
                                ("real_rank", json!(p.real_rank)),
                                ("a_hyperbolic_rank", json!(p.a_hyperbolic_rank)),
                            ])
                        })
                        .collect();
                    self.emit_json(&json!({
                        "rank_bound": bound,
                        "anomalies": anomalies,
                        "matches_table": missing.is_empty() && extra.is_empty(),
                        "missing": missing,
                        "extra": extra,
                    }))?;
                } else {
                    for (s, p) in &rows {
                        self.line(&format!(
                            "{s:<16} real {:<2} a-hyp {}",
                            p.real_rank, p.a_hyperbolic_rank
                        ))?;
                    }
                    for m in &missing {
                        self.line(&format!("missing: {m}"))?;
                    }
                    for x in &extra {
                        self.line(&format!("extra: {x}"))?;
                    }
                    self.line(&format!(
                        "{} forms up to rank {bound}: {}",
                        rows.len(),
                        if missing.is_empty() && extra.is_empty() {
                            "matches table"
                        } else {
                            "DIFFERS from table"
                        }
                    ))?;
                }
                if missing.is_empty() && extra.is_empty() {
                    Ok(())
                } else {
                    Err(Exit(1, "anomaly scan differs from the table".into()))
                }
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit status.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        params: cli.params.as_ref(),
        out,
    };
    match ctx.run(&cli.command) {
        Ok(()) => 0,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
