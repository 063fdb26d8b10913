//! Command drivers behind the `smo` binary. Every command returns its
//! report text and exit status instead of printing, so runs can be checked
//! byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::ffpoly::{factor, parse_poly, FfError, FqField};
use crate::goss::{
    compare_tables, render_goss_table, teichmuller_lift_const, EulerFactorTable, GossError,
};
use crate::permgrp::{
    conjugating_element, enumerate_decompositions, gassmann_equivalent, reconstruct_from_unramified,
    splitting_type_from_fibers, splitting_type_from_formula, unramified_types, GroupError, GroupFile,
    SplittingType,
};
use crate::splitting::{
    norm_of_prime, read_field_file, splitting_table, splitting_type_of_prime, FunctionFieldExt, PrimeOfBase,
    SplitError,
};

/// Exit status for input, parse and validation errors.
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Field(#[from] FfError),
    #[error("{0}")]
    Split(#[from] SplitError),
    #[error("{0}")]
    Goss(#[from] GossError),
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub code: i32,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome { report, code: 0 }
    }
}

/// A field-side prime whose type is to be taken from group data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub prime: String,
    pub group: PathBuf,
    pub decomp: String,
}

impl Resolution {
    /// Parses `PRIME=GROUPFILE:DECOMP`.
    pub fn parse(s: &str) -> Result<Self, HarnessError> {
        let bad = || HarnessError::Usage(format!("expected PRIME=GROUPFILE:DECOMP, got {s:?}"));
        let (prime, rest) = s.split_once('=').ok_or_else(bad)?;
        let (group, decomp) = rest.rsplit_once(':').ok_or_else(bad)?;
        Ok(Resolution { prime: prime.trim().into(), group: group.into(), decomp: decomp.trim().into() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExperimentConfig {
    Factor { q: u64, poly: String, seed: u64 },
    Split { field: PathBuf, prime: String },
    Table { field: PathBuf, deg: usize, factors: bool },
    Compare { a: PathBuf, b: PathBuf, deg: usize, resolve_a: Vec<Resolution>, resolve_b: Vec<Resolution> },
    Gassmann { group: PathBuf, h1: String, h2: String },
    Reconstruct { group: PathBuf, decomp: String, check: bool },
    Census { field: PathBuf, deg: usize },
    Sweep { dir: PathBuf, max_order: usize },
    Teichmuller { q: u64, a: String, precision: u32 },
}

/// Runs a command; errors become exit status 3 with the message as report.
pub fn run(config: &ExperimentConfig) -> Outcome {
    let result = match config {
        ExperimentConfig::Factor { q, poly, seed } => cmd_factor(*q, poly, *seed),
        ExperimentConfig::Split { field, prime } => cmd_split(field, prime),
        ExperimentConfig::Table { field, deg, factors } => cmd_table(field, *deg, *factors),
        ExperimentConfig::Compare { a, b, deg, resolve_a, resolve_b } => {
            cmd_compare(a, b, *deg, resolve_a, resolve_b)
        }
        ExperimentConfig::Gassmann { group, h1, h2 } => cmd_gassmann(group, h1, h2),
        ExperimentConfig::Reconstruct { group, decomp, check } => cmd_reconstruct(group, decomp, *check),
        ExperimentConfig::Census { field, deg } => cmd_census(field, *deg),
        ExperimentConfig::Sweep { dir, max_order } => cmd_sweep(dir, *max_order),
        ExperimentConfig::Teichmuller { q, a, precision } => cmd_teichmuller(*q, a, *precision),
    };
    result.unwrap_or_else(|e| Outcome { report: format!("error: {e}\n"), code: EXIT_ERROR })
}

pub fn cmd_factor(q: u64, poly: &str, seed: u64) -> Result<Outcome, HarnessError> {
    let field = FqField::of_order(q)?;
    let f = parse_poly(&field, poly)?;
    let fac = factor(&f, seed)?;
    let mut out = format!("unit={}\n", field.format_elem(fac.unit));
    for (g, e) in &fac.factors {
        writeln!(out, "factor={g} mult={e}").unwrap();
    }
    Ok(Outcome::ok(out))
}

fn read_prime(k: &FunctionFieldExt, s: &str) -> Result<PrimeOfBase, HarnessError> {
    Ok(PrimeOfBase::new(parse_poly(k.field(), s)?)?)
}

pub fn cmd_split(field: &Path, prime: &str) -> Result<Outcome, HarnessError> {
    let k = read_field_file(field)?;
    let p = read_prime(&k, prime)?;
    let mut out = format!("K={k}\ndisc={}\n", k.discriminant());
    match splitting_type_of_prime(&k, &p) {
        Ok((ty, above)) => {
            writeln!(out, "p={p} type={ty} e=[{}]", above.iter().map(|d| d.e).join(",")).unwrap();
            for d in &above {
                writeln!(out, "above f={} e={} norm={}", d.f, d.e, norm_of_prime(&p, d)).unwrap();
            }
        }
        Err(SplitError::IndexDivisor(_)) => writeln!(out, "p={p} type=unknown").unwrap(),
        Err(e) => return Err(e.into()),
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_table(field: &Path, deg: usize, factors: bool) -> Result<Outcome, HarnessError> {
    let k = read_field_file(field)?;
    let table = splitting_table(&k, deg)?;
    let mut out = table.to_string();
    if factors {
        out.push_str(&render_goss_table(&table, false));
        out.push_str(&render_goss_table(&table, true));
    }
    Ok(Outcome::ok(out))
}

/// Fills `unknown` entries from group data via the reconstruction pipeline.
pub fn resolve_unknowns(table: &mut EulerFactorTable, resolutions: &[Resolution]) -> Result<(), HarnessError> {
    for r in resolutions {
        let p = parse_poly(table.field(), &r.prime)?;
        let file = GroupFile::read(&r.group)?;
        let (g_e, dec) = file.decomposition(&r.decomp)?;
        let rec = reconstruct_from_unramified(&file.group, &unramified_types(&g_e), &dec)?;
        table.resolve(&p, rec.splitting_type)?;
    }
    Ok(())
}

pub fn cmd_compare(
    a: &Path,
    b: &Path,
    deg: usize,
    resolve_a: &[Resolution],
    resolve_b: &[Resolution],
) -> Result<Outcome, HarnessError> {
    let (ka, kb) = (read_field_file(a)?, read_field_file(b)?);
    if ka.field() != kb.field() {
        return Err(HarnessError::Usage(format!(
            "fields differ: F_{} vs F_{}",
            ka.field().order(),
            kb.field().order()
        )));
    }
    let mut ta = splitting_table(&ka, deg)?;
    let mut tb = splitting_table(&kb, deg)?;
    resolve_unknowns(&mut ta, resolve_a)?;
    resolve_unknowns(&mut tb, resolve_b)?;
    let report = compare_tables(&ta, &tb)?;
    let out = format!("a: {ka}\nb: {kb}\ndegree bound {deg}\n{report}");
    Ok(Outcome { report: out, code: report.verdict.exit_code() })
}

pub fn cmd_gassmann(group: &Path, h1: &str, h2: &str) -> Result<Outcome, HarnessError> {
    let file = GroupFile::read(group)?;
    let (a, b) = (file.subgroup(h1)?, file.subgroup(h2)?);
    let equivalent = gassmann_equivalent(a, b)?;
    let mut out = format!("|G|={} |{h1}|={} |{h2}|={}\n", file.group.order(), a.order(), b.order());
    writeln!(out, "class counts {h1}: {:?}", a.class_counts()).unwrap();
    writeln!(out, "class counts {h2}: {:?}", b.class_counts()).unwrap();
    writeln!(out, "gassmann equivalent: {}", if equivalent { "yes" } else { "no" }).unwrap();
    match conjugating_element(a, b)? {
        Some(g) => writeln!(out, "conjugate: yes by {}", file.group.element(g)).unwrap(),
        None => writeln!(out, "conjugate: no").unwrap(),
    }
    let (ta, tb) = (unramified_types(a), unramified_types(b));
    for (i, (x, y)) in ta.iter().zip(&tb).enumerate() {
        let rep = file.group.element(file.group.classes()[i][0]);
        writeln!(out, "class {i} rep {rep}: {h1} {x} {h2} {y}").unwrap();
    }
    writeln!(out, "unramified tables identical: {}", if ta == tb { "yes" } else { "no" }).unwrap();
    Ok(Outcome { report: out, code: if equivalent { 0 } else { 1 } })
}

pub fn cmd_reconstruct(group: &Path, decomp: &str, check: bool) -> Result<Outcome, HarnessError> {
    let file = GroupFile::read(group)?;
    let (g_e, dec) = file.decomposition(decomp)?;
    let rec = reconstruct_from_unramified(&file.group, &unramified_types(&g_e), &dec)?;
    let mut out = format!(
        "|G|={} |G_E|={} |D|={} |I|={} c={}\n",
        file.group.order(),
        g_e.order(),
        dec.decomposition().order(),
        dec.inertia().order(),
        file.group.element(dec.c())
    );
    writeln!(out, "census {:?}", rec.census.counts()).unwrap();
    for (d, n) in &rec.counts {
        writeln!(out, "count d={d} {n}").unwrap();
    }
    writeln!(out, "reconstructed {}", rec.splitting_type).unwrap();
    let mut code = 0;
    if check {
        let truth = splitting_type_from_fibers(&g_e, &dec)?;
        let verdict = if truth == rec.splitting_type { "MATCH" } else { "MISMATCH" };
        if truth != rec.splitting_type {
            code = 1;
        }
        writeln!(out, "fibres {truth} {verdict}").unwrap();
    }
    Ok(Outcome { report: out, code })
}

/// Histogram of splitting types over unramified primes of degree `<= d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub total: usize,
    pub buckets: BTreeMap<SplittingType, usize>,
}

pub fn census(k: &FunctionFieldExt, d: usize) -> Result<Census, HarnessError> {
    let table = splitting_table(k, d)?;
    let mut buckets = BTreeMap::new();
    let mut total = 0;
    for (p, entry) in table.entries() {
        if k.discriminant().rem(p).is_zero() {
            continue;
        }
        let ty = entry.splitting_type().expect("unramified primes are never index divisors");
        *buckets.entry(ty.clone()).or_insert(0) += 1;
        total += 1;
    }
    Ok(Census { total, buckets })
}

pub fn cmd_census(field: &Path, deg: usize) -> Result<Outcome, HarnessError> {
    let k = read_field_file(field)?;
    let c = census(&k, deg)?;
    let mut out = format!("K={k}\nunramified primes of degree <= {deg}: {}\n", c.total);
    for (ty, n) in &c.buckets {
        writeln!(out, "type={ty} count={n} freq={:.4}", *n as f64 / c.total as f64).unwrap();
    }
    Ok(Outcome::ok(out))
}

/// Split and inert counts of a quadratic extension against the loose
/// threshold `3 q^{d/2} / #primes` around frequency 1/2.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticShadow {
    pub split: usize,
    pub inert: usize,
    pub deviation: f64,
    pub threshold: f64,
}

impl QuadraticShadow {
    pub fn within(&self) -> bool {
        self.deviation <= self.threshold
    }
}

pub fn quadratic_shadow(k: &FunctionFieldExt, d: usize) -> Result<QuadraticShadow, HarnessError> {
    if k.degree() != 2 {
        return Err(HarnessError::Usage(format!("{k} is not quadratic")));
    }
    let c = census(k, d)?;
    let count = |v: Vec<usize>| c.buckets.get(&SplittingType::new(v).expect("nonempty")).copied().unwrap_or(0);
    let (split, inert) = (count(vec![1, 1]), count(vec![2]));
    let total = c.total as f64;
    let q = k.field().order() as f64;
    Ok(QuadraticShadow {
        split,
        inert,
        deviation: (split as f64 / total - 0.5).abs(),
        threshold: 3.0 * q.powf(d as f64 / 2.0) / total,
    })
}

/// Totals of a fibre-formula and reconstruction sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub groups: usize,
    pub cases: usize,
    pub ramified_cases: usize,
    pub formula_mismatches: Vec<String>,
    pub pipeline_mismatches: Vec<String>,
}

/// Checks fibres against the formula and the reconstruction pipeline for
/// every subgroup `G_E` and every decomposition triple of `file.group`.
pub fn sweep_group(name: &str, file: &GroupFile) -> Result<SweepSummary, HarnessError> {
    let subs = file.group.all_subgroups();
    let decs = enumerate_decompositions(&subs);
    let per_subgroup = subs
        .par_iter()
        .map(|g_e| {
            let types = unramified_types(g_e);
            let mut s = SweepSummary::default();
            for dec in &decs {
                let label = || {
                    format!(
                        "{name}: |G_E|={} D={:?} I={:?} c={}",
                        g_e.order(),
                        dec.decomposition().elements(),
                        dec.inertia().elements(),
                        dec.c()
                    )
                };
                let fibres = splitting_type_from_fibers(g_e, dec)?;
                if splitting_type_from_formula(g_e, dec)? != fibres {
                    s.formula_mismatches.push(label());
                }
                if reconstruct_from_unramified(&file.group, &types, dec)?.splitting_type != fibres {
                    s.pipeline_mismatches.push(label());
                }
                s.cases += 1;
                if dec.inertia().order() > 1 {
                    s.ramified_cases += 1;
                }
            }
            Ok(s)
        })
        .collect::<Result<Vec<_>, GroupError>>()?;
    let mut total = SweepSummary { groups: 1, ..Default::default() };
    for s in per_subgroup {
        total.cases += s.cases;
        total.ramified_cases += s.ramified_cases;
        total.formula_mismatches.extend(s.formula_mismatches);
        total.pipeline_mismatches.extend(s.pipeline_mismatches);
    }
    Ok(total)
}

/// Sweeps every `.grp` file in `dir` whose group has order at most `max_order`.
pub fn sweep_directory(dir: &Path, max_order: usize) -> Result<(Vec<String>, SweepSummary), HarnessError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| HarnessError::Usage(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "grp"))
        .collect();
    paths.sort();
    let mut lines = Vec::new();
    let mut total = SweepSummary::default();
    for path in paths {
        let name = path.file_name().expect("file").to_string_lossy().into_owned();
        let file = GroupFile::read(&path)?;
        if file.group.order() > max_order {
            lines.push(format!("{name}: |G|={} skipped", file.group.order()));
            continue;
        }
        let s = sweep_group(&name, &file)?;
        lines.push(format!(
            "{name}: |G|={} cases={} ramified={} formula mismatches={} pipeline mismatches={}",
            file.group.order(),
            s.cases,
            s.ramified_cases,
            s.formula_mismatches.len(),
            s.pipeline_mismatches.len()
        ));
        total.groups += 1;
        total.cases += s.cases;
        total.ramified_cases += s.ramified_cases;
        total.formula_mismatches.extend(s.formula_mismatches);
        total.pipeline_mismatches.extend(s.pipeline_mismatches);
    }
    Ok((lines, total))
}

pub fn cmd_sweep(dir: &Path, max_order: usize) -> Result<Outcome, HarnessError> {
    let (lines, total) = sweep_directory(dir, max_order)?;
    let mut out = lines.join("\n");
    out.push('\n');
    for m in total.formula_mismatches.iter().chain(&total.pipeline_mismatches) {
        writeln!(out, "mismatch {m}").unwrap();
    }
    let bad = total.formula_mismatches.len() + total.pipeline_mismatches.len();
    let matched = total.cases - total.pipeline_mismatches.len();
    writeln!(out, "groups={} cases={} MATCH {matched}/{}", total.groups, total.cases, total.cases).unwrap();
    Ok(Outcome { report: out, code: if bad == 0 { 0 } else { 1 } })
}

pub fn cmd_teichmuller(q: u64, a: &str, precision: u32) -> Result<Outcome, HarnessError> {
    let field = FqField::of_order(q)?;
    let c = parse_poly(&field, a)?;
    if c.deg() > 0 {
        return Err(HarnessError::Usage(format!("{a} is not a constant")));
    }
    let w = teichmuller_lift_const(&field, c.coeff(0), precision)?;
    let p = field.characteristic();
    Ok(Outcome::ok(format!("q={q} a={} k={precision} p={p}\nomega={w}\n", field.format_elem(c.coeff(0)))))
}
