//! Datasets of rank anomalies, 3-symmetric spaces and worked examples, with
//! harnesses that re-derive every entry from Satake data.

pub mod template;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cones::{rank_profile, RankProfile, ReductiveAlgebra};
use crate::decision::{decide, embed_obstruction, Condition, Verdict};
use crate::notation::{self, render};
use crate::satake::{self, RealFormSpec};
use template::{check, eval, instantiate, Params, TemplateError};

const TABLE1: &str = include_str!("../../data/table1.toml");
const TABLE2: &str = include_str!("../../data/table2.toml");
const EXAMPLES: &str = include_str!("../../data/examples.toml");

#[derive(Debug, Clone, Deserialize)]
pub struct Table1Family {
    pub algebra: String,
    pub a_hyperbolic: String,
    pub real: String,
    pub k_min: i64,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table1Exceptional {
    pub algebra: String,
    pub a_hyperbolic: usize,
    pub real: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table1 {
    pub family: Vec<Table1Family>,
    pub exceptional: Vec<Table1Exceptional>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Erratum {
    pub when: Vec<String>,
    pub expected: String,
    pub note: String,
}

/// One `G/H` row with templated parameters.
#[derive(Debug, Clone, Deserialize)]
pub struct FamilyRow {
    pub id: String,
    pub g: String,
    pub h: String,
    #[serde(default)]
    pub params: Vec<String>,
    #[serde(default)]
    pub constraints: Vec<String>,
    #[serde(default)]
    pub values: Vec<BTreeMap<String, i64>>,
    #[serde(default)]
    pub expected: Option<String>,
    #[serde(default)]
    pub note: Option<String>,
    #[serde(default)]
    pub erratum: Vec<Erratum>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Table2 {
    pub row: Vec<FamilyRow>,
    pub excluded: Vec<FamilyRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ExamplePair {
    pub id: String,
    pub g: String,
    pub h: String,
    pub expected: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ExampleFamily {
    pub id: String,
    pub g: String,
    pub h: String,
    #[serde(default)]
    pub params: Vec<String>,
    #[serde(default)]
    pub constraints: Vec<String>,
    #[serde(default)]
    pub restrict: Vec<String>,
    #[serde(default)]
    pub restrict_note: Option<String>,
    #[serde(default)]
    pub note: Option<String>,
    pub pinned: BTreeMap<String, i64>,
    pub expected: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ObstructionList {
    pub g: String,
    pub h: Vec<String>,
    pub note: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct RankOneList {
    pub g: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Examples {
    pub pair: Vec<ExamplePair>,
    pub family: Vec<ExampleFamily>,
    pub obstruction: ObstructionList,
    pub rank_one: RankOneList,
}

pub fn table1() -> Table1 {
    toml::from_str(TABLE1).expect("bundled table1.toml is well formed")
}

pub fn table2() -> Table2 {
    toml::from_str(TABLE2).expect("bundled table2.toml is well formed")
}

pub fn examples() -> Examples {
    toml::from_str(EXAMPLES).expect("bundled examples.toml is well formed")
}

fn verdict(name: &str) -> Verdict {
    Verdict::from_name(name).unwrap_or_else(|| panic!("unknown verdict {name:?} in bundled data"))
}

fn single_char(name: &str) -> char {
    let mut it = name.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => c,
        _ => panic!("parameter names are single letters, got {name:?}"),
    }
}

fn to_params(map: &BTreeMap<String, i64>) -> Params {
    map.iter().map(|(k, v)| (single_char(k), *v)).collect()
}

/// Every assignment of `names` in `0..=bound` satisfying all constraints.
pub fn enumerate(names: &[String], constraints: &[String], bound: i64) -> Result<Vec<Params>, TemplateError> {
    let names: Vec<char> = names.iter().map(|n| single_char(n)).collect();
    let mut out = Vec::new();
    let mut current = vec![0i64; names.len()];
    loop {
        let params: Params = names.iter().copied().zip(current.iter().copied()).collect();
        let mut ok = true;
        for c in constraints {
            if !check(c, &params)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(params);
        }
        // odometer
        let mut i = names.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if current[i] < bound {
                current[i] += 1;
                break;
            }
            current[i] = 0;
        }
    }
}

impl FamilyRow {
    pub fn instances(&self, bound: i64) -> Result<Vec<Params>, TemplateError> {
        if !self.values.is_empty() {
            return Ok(self.values.iter().map(to_params).collect());
        }
        enumerate(&self.params, &self.constraints, bound)
    }

    pub fn expected_verdict(&self, params: &Params) -> Result<(Verdict, Option<&Erratum>), TemplateError> {
        for e in &self.erratum {
            let mut all = true;
            for w in &e.when {
                all &= check(w, params)?;
            }
            if all {
                return Ok((verdict(&e.expected), Some(e)));
            }
        }
        let v = self
            .expected
            .as_deref()
            .map_or(Verdict::AdmitsNonVirtuallyAbelian, verdict);
        Ok((v, None))
    }
}

fn string_keys(params: &Params) -> BTreeMap<String, i64> {
    params.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub row: String,
    pub params: BTreeMap<String, i64>,
    pub g: String,
    pub g_profile: RankProfile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_profile: Option<RankProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition: Option<Condition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub erratum: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub row: String,
    pub params: BTreeMap<String, i64>,
    pub got: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub row: String,
    pub params: BTreeMap<String, i64>,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub rows_checked: usize,
    pub instances_checked: usize,
    pub errata_applied: usize,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skip>,
    pub outcomes: Vec<Outcome>,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, row: &str, params: &Params, got: impl Into<String>, expected: impl Into<String>) {
        self.failures.push(Failure {
            row: row.to_string(),
            params: string_keys(params),
            got: got.into(),
            expected: expected.into(),
        });
    }

    fn skip(&mut self, row: &str, params: &Params, reason: impl Into<String>) {
        self.skipped.push(Skip {
            row: row.to_string(),
            params: string_keys(params),
            reason: reason.into(),
        });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let params = describe_params(&o.params);
            write!(f, "{:<10} {:<14} {} {}", o.row, params, o.g, o.g_profile)?;
            if let (Some(h), Some(hp)) = (&o.h, o.h_profile) {
                write!(f, " / {h} {hp}")?;
            }
            if let Some(v) = o.verdict {
                write!(f, "  {v}")?;
                if let Some(c) = o.condition {
                    write!(f, " ({c:?})")?;
                }
            }
            if o.erratum.is_some() {
                write!(f, "  [erratum]")?;
            }
            writeln!(f)?;
        }
        for s in &self.skipped {
            let params = describe_params(&s.params);
            writeln!(f, "skipped {} {}: {}", s.row, params, s.reason)?;
        }
        for x in &self.failures {
            let params = describe_params(&x.params);
            writeln!(f, "FAILED {} {}: got {}, expected {}", x.row, params, x.got, x.expected)?;
        }
        write!(
            f,
            "rows {}, instances {}, errata {}, skipped {}, failures {}: {}",
            self.rows_checked,
            self.instances_checked,
            self.errata_applied,
            self.skipped.len(),
            self.failures.len(),
            if self.passes() { "PASS" } else { "FAIL" }
        )
    }
}

fn parse_profile(text: &str) -> Result<(ReductiveAlgebra, RankProfile), String> {
    let alg = notation::parse(text).map_err(|e| format!("{text:?}: {e}"))?;
    let profile = rank_profile(&alg).map_err(|e| format!("{text:?}: {e}"))?;
    Ok((alg, profile))
}

fn simple_noncompact(alg: &ReductiveAlgebra) -> Option<RealFormSpec> {
    match alg.simple_factors.as_slice() {
        [f] if alg.is_simple() && !matches!(f, RealFormSpec::Compact(_)) => Some(*f),
        _ => None,
    }
}

fn family_algebra(template: &str, k: i64) -> Result<RealFormSpec, String> {
    let params: Params = [('k', k)].into();
    let text = instantiate(template, &params).map_err(|e| e.to_string())?;
    let alg = notation::parse(&text).map_err(|e| e.to_string())?;
    simple_noncompact(&alg).ok_or_else(|| format!("{text} is not simple and non-compact"))
}

/// Checks both rank columns for every family with `k <= k_max`, and the
/// exceptional rows once.
pub fn verify_table1(k_max: i64) -> VerificationReport {
    let data = table1();
    let mut report = VerificationReport::default();
    for fam in &data.family {
        report.rows_checked += 1;
        for k in fam.k_min..=k_max {
            let params: Params = [('k', k)].into();
            let formula = (eval(&fam.real, &params), eval(&fam.a_hyperbolic, &params));
            let expected = match formula {
                (Ok(r), Ok(a)) => RankProfile::new(r as usize, a as usize),
                _ => {
                    report.fail(
                        &fam.algebra,
                        &params,
                        "unevaluable formula",
                        format!("{} / {}", fam.real, fam.a_hyperbolic),
                    );
                    continue;
                }
            };
            let got = family_algebra(&fam.algebra, k)
                .and_then(|spec| parse_profile(&spec.to_string()).map(|(_, p)| (spec, p)));
            report.instances_checked += 1;
            match got {
                Ok((spec, profile)) => {
                    if profile != expected {
                        report.fail(&fam.algebra, &params, profile.to_string(), expected.to_string());
                    }
                    report.outcomes.push(Outcome {
                        row: fam.algebra.clone(),
                        params: string_keys(&params),
                        g: spec.to_string(),
                        g_profile: profile,
                        h: None,
                        h_profile: None,
                        verdict: None,
                        condition: None,
                        erratum: None,
                    });
                }
                Err(e) => report.fail(&fam.algebra, &params, e, expected.to_string()),
            }
        }
    }
    for ex in &data.exceptional {
        report.rows_checked += 1;
        report.instances_checked += 1;
        let expected = RankProfile::new(ex.real, ex.a_hyperbolic);
        let params = Params::new();
        match parse_profile(&ex.algebra) {
            Ok((alg, profile)) => {
                if profile != expected {
                    report.fail(&ex.algebra, &params, profile.to_string(), expected.to_string());
                }
                report.outcomes.push(Outcome {
                    row: ex.algebra.clone(),
                    params: BTreeMap::new(),
                    g: render(&alg),
                    g_profile: profile,
                    h: None,
                    h_profile: None,
                    verdict: None,
                    condition: None,
                    erratum: None,
                });
            }
            Err(e) => report.fail(&ex.algebra, &params, e, expected.to_string()),
        }
    }
    report
}

/// Forms of rank at most `rank_bound` that the table lists with unequal ranks.
pub fn table1_prediction(rank_bound: usize) -> BTreeSet<RealFormSpec> {
    let data = table1();
    let mut out = BTreeSet::new();
    for fam in &data.family {
        for k in fam.k_min.. {
            let spec = family_algebra(&fam.algebra, k).expect("table1 families instantiate");
            if spec.lie_type().expect("valid family").rank() > rank_bound {
                break;
            }
            let params: Params = [('k', k)].into();
            if eval(&fam.real, &params) != eval(&fam.a_hyperbolic, &params) {
                out.insert(spec);
            }
        }
    }
    for ex in &data.exceptional {
        let alg = notation::parse(&ex.algebra).expect("table1 exceptional rows parse");
        let spec = simple_noncompact(&alg).expect("exceptional rows are simple");
        if spec.lie_type().expect("valid").rank() <= rank_bound && ex.real != ex.a_hyperbolic {
            out.insert(spec);
        }
    }
    out
}

/// Every non-complex real form of rank at most `rank_bound` whose
/// a-hyperbolic rank differs from its real rank.
pub fn anomaly_scan(rank_bound: usize) -> Vec<RealFormSpec> {
    satake::database(rank_bound, false)
        .expect("the built-in classification validates")
        .into_iter()
        .filter(|(_, d)| {
            let p = RankProfile::of_diagram(d);
            p.real_rank != p.a_hyperbolic_rank
        })
        .map(|(spec, _)| spec)
        .collect()
}

/// Evaluates one `G/H` instance against its expected verdict.
fn check_pair(
    report: &mut VerificationReport,
    row: &str,
    params: &Params,
    g_text: &str,
    h_text: &str,
    expected: Verdict,
    erratum: Option<&Erratum>,
) {
    let (g_alg, g_profile) = match parse_profile(g_text) {
        Ok(x) => x,
        Err(e) => return report.fail(row, params, e, expected.to_string()),
    };
    if simple_noncompact(&g_alg).is_none() {
        return report.skip(
            row,
            params,
            format!("G = {} is not simple and non-compact", render(&g_alg)),
        );
    }
    let (h_alg, h_profile) = match parse_profile(h_text) {
        Ok(x) => x,
        Err(e) => return report.fail(row, params, e, expected.to_string()),
    };
    report.instances_checked += 1;
    match decide(g_profile, h_profile) {
        Ok(d) => {
            if d.verdict != expected {
                report.fail(row, params, d.verdict.to_string(), expected.to_string());
            }
            if erratum.is_some() {
                report.errata_applied += 1;
            }
            report.outcomes.push(Outcome {
                row: row.to_string(),
                params: string_keys(params),
                g: render(&g_alg),
                g_profile,
                h: Some(render(&h_alg)),
                h_profile: Some(h_profile),
                verdict: Some(d.verdict),
                condition: d.deciding_condition(),
                erratum: erratum.map(|e| e.note.clone()),
            });
        }
        Err(e) => report.fail(row, params, e.to_string(), expected.to_string()),
    }
}

fn run_row(report: &mut VerificationReport, row: &FamilyRow, bound: i64) {
    report.rows_checked += 1;
    let instances = match row.instances(bound) {
        Ok(i) => i,
        Err(e) => return report.fail(&row.id, &Params::new(), e.to_string(), "enumerable parameters"),
    };
    for params in instances {
        let (expected, erratum) = match row.expected_verdict(&params) {
            Ok(x) => x,
            Err(e) => {
                report.fail(&row.id, &params, e.to_string(), "evaluable erratum");
                continue;
            }
        };
        let texts = instantiate(&row.g, &params).and_then(|g| Ok((g, instantiate(&row.h, &params)?)));
        match texts {
            Ok((g, h)) => check_pair(report, &row.id, &params, &g, &h, expected, erratum),
            Err(e) => report.skip(&row.id, &params, e.to_string()),
        }
    }
}

/// Instantiates every row with parameters up to `param_bound` and decides
/// each pair; the excluded space must stay undetermined.
pub fn verify_table2(param_bound: i64) -> VerificationReport {
    let data = table2();
    let mut report = VerificationReport::default();
    for row in data.row.iter().chain(&data.excluded) {
        run_row(&mut report, row, param_bound);
    }
    report
}

/// Worked pairs, pinned family instances, family sweeps up to `sweep_bound`,
/// and the obstruction list.
pub fn verify_examples(sweep_bound: i64) -> VerificationReport {
    let data = examples();
    let mut report = VerificationReport::default();
    for pair in &data.pair {
        report.rows_checked += 1;
        check_pair(
            &mut report,
            &pair.id,
            &Params::new(),
            &pair.g,
            &pair.h,
            verdict(&pair.expected),
            None,
        );
    }
    for fam in &data.family {
        report.rows_checked += 1;
        let expected = verdict(&fam.expected);
        let pinned = to_params(&fam.pinned);
        let mut instances = vec![pinned.clone()];
        let filters: Vec<String> = fam.constraints.iter().chain(&fam.restrict).cloned().collect();
        match enumerate(&fam.params, &filters, sweep_bound) {
            Ok(sweep) => instances.extend(sweep.into_iter().filter(|p| *p != pinned)),
            Err(e) => report.fail(&fam.id, &Params::new(), e.to_string(), "enumerable parameters"),
        }
        for params in instances {
            let texts = instantiate(&fam.g, &params).and_then(|g| Ok((g, instantiate(&fam.h, &params)?)));
            match texts {
                Ok((g, h)) => check_pair(&mut report, &fam.id, &params, &g, &h, expected, None),
                Err(e) => report.skip(&fam.id, &params, e.to_string()),
            }
        }
    }
    let obs = &data.obstruction;
    report.rows_checked += 1;
    for h in &obs.h {
        let params = Params::new();
        match (parse_profile(&obs.g), parse_profile(h)) {
            (Ok((_, gp)), Ok((_, hp))) => {
                report.instances_checked += 1;
                if !embed_obstruction(gp, hp).obstructed {
                    report.fail(&format!("{} > {h}", obs.g), &params, "not obstructed", "obstructed");
                }
            }
            (Err(e), _) | (_, Err(e)) => report.fail(h, &params, e, "obstructed"),
        }
    }
    report
}

/// For each listed `G` of a-hyperbolic rank one, every non-compact `h` in the
/// database of rank at most `rank_bound` with a-hyperbolic rank one and real
/// rank at most that of `G` must be ruled out by (A) or (B).
pub fn verify_rank_one(rank_bound: usize) -> VerificationReport {
    let data = examples();
    let db = satake::database(rank_bound, true).expect("the built-in classification validates");
    let mut report = VerificationReport::default();
    for g in &data.rank_one.g {
        report.rows_checked += 1;
        let params = Params::new();
        let (g_alg, gp) = match parse_profile(g) {
            Ok(x) => x,
            Err(e) => {
                report.fail(g, &params, e, "parseable");
                continue;
            }
        };
        if gp.a_hyperbolic_rank != 1 {
            report.fail(g, &params, gp.to_string(), "a-hyperbolic rank 1");
        }
        for (spec, d) in &db {
            let hp = RankProfile::of_diagram(d);
            if hp.real_rank == 0 || hp.a_hyperbolic_rank != 1 || hp.real_rank > gp.real_rank {
                continue;
            }
            report.instances_checked += 1;
            match decide(gp, hp) {
                Ok(dec) if dec.verdict.is_non_existence() => report.outcomes.push(Outcome {
                    row: g.clone(),
                    params: BTreeMap::new(),
                    g: render(&g_alg),
                    g_profile: gp,
                    h: Some(spec.to_string()),
                    h_profile: Some(hp),
                    verdict: Some(dec.verdict),
                    condition: dec.deciding_condition(),
                    erratum: None,
                }),
                Ok(dec) => report.fail(&format!("{g} / {spec}"), &params, dec.verdict.to_string(), "(A) or (B)"),
                Err(e) => report.fail(&format!("{g} / {spec}"), &params, e.to_string(), "(A) or (B)"),
            }
        }
    }
    report
}

/// Every algebra appearing in the bundled datasets, instantiated up to
/// `bound`, as source text.
pub fn catalog_expressions(bound: i64) -> Vec<String> {
    let mut out = Vec::new();
    let t1 = table1();
    for fam in &t1.family {
        for k in fam.k_min..=bound {
            if let Ok(s) = instantiate(&fam.algebra, &[('k', k)].into()) {
                out.push(s);
            }
        }
    }
    out.extend(t1.exceptional.iter().map(|e| e.algebra.clone()));
    let t2 = table2();
    let ex = examples();
    let rows = t2
        .row
        .iter()
        .chain(&t2.excluded)
        .map(|r| (&r.g, &r.h, r.instances(bound)));
    let fams = ex
        .family
        .iter()
        .map(|f| (&f.g, &f.h, enumerate(&f.params, &f.constraints, bound)));
    for (g, h, instances) in rows.chain(fams) {
        for params in instances.unwrap_or_default() {
            for t in [g, h] {
                if let Ok(s) = instantiate(t, &params) {
                    out.push(s);
                }
            }
        }
    }
    for p in &ex.pair {
        out.extend([p.g.clone(), p.h.clone()]);
    }
    out.push(ex.obstruction.g.clone());
    out.extend(ex.obstruction.h.iter().cloned());
    out.extend(ex.rank_one.g.iter().cloned());
    out.sort();
    out.dedup();
    out
}

/// `a=1,n=3` style rendering of an instance.
pub fn describe_params(params: &BTreeMap<String, i64>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}
