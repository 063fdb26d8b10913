use std::collections::BTreeMap;
use std::fmt;

use crate::ffpoly::{FqField, FqPoly};
use crate::permgrp::SplittingType;
use crate::splitting::PrimeAboveData;

use super::GossError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableEntry {
    /// `above` is `None` when the type was supplied from group data.
    Known { splitting_type: SplittingType, above: Option<Vec<PrimeAboveData>> },
    Unknown,
}

impl TableEntry {
    pub fn known(splitting_type: SplittingType) -> Self {
        TableEntry::Known { splitting_type, above: None }
    }

    pub fn splitting_type(&self) -> Option<&SplittingType> {
        match self {
            TableEntry::Known { splitting_type, .. } => Some(splitting_type),
            TableEntry::Unknown => None,
        }
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, TableEntry::Unknown)
    }
}

/// Splitting types of all primes of `F_q[T]` up to a degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerFactorTable {
    field: FqField,
    descriptor: String,
    bound: usize,
    entries: BTreeMap<FqPoly, TableEntry>,
}

impl EulerFactorTable {
    pub fn new(
        field: FqField,
        descriptor: String,
        bound: usize,
        entries: BTreeMap<FqPoly, TableEntry>,
    ) -> Self {
        EulerFactorTable { field, descriptor, bound, entries }
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    /// The defining polynomial the table was computed from.
    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn entries(&self) -> &BTreeMap<FqPoly, TableEntry> {
        &self.entries
    }

    pub fn get(&self, p: &FqPoly) -> Option<&TableEntry> {
        self.entries.get(p)
    }

    pub fn unknown_primes(&self) -> Vec<&FqPoly> {
        self.entries.iter().filter(|(_, e)| e.is_unknown()).map(|(p, _)| p).collect()
    }

    /// Replaces an `unknown` entry with a type obtained elsewhere.
    pub fn resolve(&mut self, p: &FqPoly, splitting_type: SplittingType) -> Result<(), GossError> {
        match self.entries.get_mut(p) {
            Some(e @ TableEntry::Unknown) => {
                *e = TableEntry::known(splitting_type);
                Ok(())
            }
            Some(_) => Err(GossError::AlreadyKnown(p.to_string())),
            None => Err(GossError::NotInTable(p.to_string())),
        }
    }
}

/// One line per prime: `p=<poly> type=[..] e=[..]` or `p=<poly> type=unknown`.
impl fmt::Display for EulerFactorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, entry) in &self.entries {
            match entry {
                TableEntry::Unknown => writeln!(f, "p={p} type=unknown")?,
                TableEntry::Known { splitting_type, above: Some(above) } => {
                    let es: Vec<String> = above.iter().map(|d| d.e.to_string()).collect();
                    writeln!(f, "p={p} type={splitting_type} e=[{}]", es.join(","))?
                }
                TableEntry::Known { splitting_type, above: None } => {
                    writeln!(f, "p={p} type={splitting_type} e=?")?
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Identical,
    /// The least prime, in canonical order, where the types differ.
    Differ(FqPoly),
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Identical => 0,
            Verdict::Differ(_) => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Identical => f.write_str("IDENTICAL"),
            Verdict::Differ(p) => write!(f, "DIFFER(first witness p={p})"),
            Verdict::Inconclusive => f.write_str("INCONCLUSIVE"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareReport {
    pub differing: Vec<(FqPoly, SplittingType, SplittingType)>,
    pub unknown: Vec<FqPoly>,
    pub verdict: Verdict,
}

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, a, b) in &self.differing {
            writeln!(f, "differ p={p} a={a} b={b}")?;
        }
        for p in &self.unknown {
            writeln!(f, "unknown p={p}")?;
        }
        writeln!(f, "verdict {}", self.verdict)
    }
}

pub fn compare_tables(t1: &EulerFactorTable, t2: &EulerFactorTable) -> Result<CompareReport, GossError> {
    if t1.field != t2.field || t1.bound != t2.bound {
        return Err(GossError::BoundMismatch(format!(
            "F_{} up to degree {} vs F_{} up to degree {}",
            t1.field.order(),
            t1.bound,
            t2.field.order(),
            t2.bound
        )));
    }
    let mut differing = Vec::new();
    let mut unknown = Vec::new();
    for (p, e1) in &t1.entries {
        let e2 = t2.entries.get(p).unwrap_or(&TableEntry::Unknown);
        match (e1.splitting_type(), e2.splitting_type()) {
            (Some(a), Some(b)) if a != b => differing.push((p.clone(), a.clone(), b.clone())),
            (Some(_), Some(_)) => {}
            _ => unknown.push(p.clone()),
        }
    }
    let verdict = match (differing.first(), unknown.is_empty()) {
        (Some((p, _, _)), _) => Verdict::Differ(p.clone()),
        (None, true) => Verdict::Identical,
        (None, false) => Verdict::Inconclusive,
    };
    Ok(CompareReport { differing, unknown, verdict })
}
