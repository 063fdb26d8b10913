//! Euler factors of the Goss zeta function `zeta_K(s) = prod (1 - N(P)^{-s})^{-1}`
//! and of its Teichmüller lift, kept formal in `s`.
//!
//! Since `N(P) = p^f`, the factor at `p` depends only on the splitting type
//! of `p`, so comparing zeta functions over a finite window reduces to
//! comparing [`EulerFactorTable`]s.

mod padic;
mod table;
mod witt;

pub use padic::{teichmuller_lift_const, PadicElem};
pub use table::{compare_tables, CompareReport, EulerFactorTable, TableEntry, Verdict};
pub use witt::{RationalFunction, SymbolicWittElement};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ffpoly::{FfError, FqPoly};
use crate::splitting::{splitting_table, FunctionFieldExt, SplitError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GossError {
    #[error("splitting type unknown at p={0}")]
    UnknownType(String),
    #[error("tables are not comparable: {0}")]
    BoundMismatch(String),
    #[error("the Teichmüller lift of 0 is not a unit")]
    ZeroInput,
    #[error("unsupported p-adic precision {0}")]
    Precision(u32),
    #[error("p={0} is already known")]
    AlreadyKnown(String),
    #[error("p={0} is not in the table")]
    NotInTable(String),
    #[error("{0}")]
    Split(#[from] SplitError),
    #[error("{0}")]
    Field(#[from] FfError),
}

/// `prod (1 - N^{-s})^{-mult}` over distinct norms `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EulerFactor {
    pub prime: FqPoly,
    pub norms: Vec<(FqPoly, usize)>,
}

/// The same product with each norm replaced by its Teichmüller symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LiftedEulerFactor {
    pub prime: FqPoly,
    pub norms: Vec<(SymbolicWittElement, usize)>,
}

fn norm_multiset(p: &FqPoly, entry: &TableEntry) -> Result<Vec<(FqPoly, usize)>, GossError> {
    let ty = entry.splitting_type().ok_or_else(|| GossError::UnknownType(p.to_string()))?;
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &f in ty.entries() {
        *counts.entry(f).or_default() += 1;
    }
    // p^f increases with f, so this is canonical order
    Ok(counts.into_iter().map(|(f, c)| (p.pow(f as u64), c)).collect())
}

pub fn goss_euler_factor(p: &FqPoly, entry: &TableEntry) -> Result<EulerFactor, GossError> {
    Ok(EulerFactor { prime: p.clone(), norms: norm_multiset(p, entry)? })
}

pub fn lifted_euler_factor(p: &FqPoly, entry: &TableEntry) -> Result<LiftedEulerFactor, GossError> {
    let norms = norm_multiset(p, entry)?
        .into_iter()
        .map(|(n, c)| Ok((SymbolicWittElement::teichmuller(RationalFunction::from_poly(n)?), c)))
        .collect::<Result<_, GossError>>()?;
    Ok(LiftedEulerFactor { prime: p.clone(), norms })
}

fn base_text(s: String) -> String {
    if s.contains(['+', '*', '^']) {
        format!("({s})")
    } else {
        s
    }
}

fn render(bases: impl Iterator<Item = (String, usize)>) -> String {
    bases
        .map(|(b, c)| format!("(1 - {b}^{{-s}})^{{-{c}}}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for EulerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self.norms.iter().map(|(n, c)| (base_text(n.to_string()), *c))))
    }
}

impl fmt::Display for LiftedEulerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self.norms.iter().map(|(n, c)| (n.to_string(), *c))))
    }
}

/// `p=<poly> :: <factor>` per prime; unknown primes print `unknown`.
pub fn render_goss_table(table: &EulerFactorTable, lifted: bool) -> String {
    let mut out = String::new();
    for (p, entry) in table.entries() {
        let body = if entry.is_unknown() {
            "unknown".to_string()
        } else if lifted {
            lifted_euler_factor(p, entry).expect("known").to_string()
        } else {
            goss_euler_factor(p, entry).expect("known").to_string()
        };
        out.push_str(&format!("p={p} :: {body}\n"));
    }
    out
}

/// `sum N(I)^n` over the nonzero ideals `I` of the integral closure of `A`
/// with `deg N(I) <= d`, using the splitting types in `table`.
pub fn zeta_partial_sum_from_table(table: &EulerFactorTable, n: u64, d: usize) -> Result<FqPoly, GossError> {
    let field = table.field();
    if d > table.bound() {
        return Err(GossError::BoundMismatch(format!("degree {d} exceeds the table bound {}", table.bound())));
    }
    // by_degree[j] = sum of N(I)^n over ideals with deg N(I) = j
    let mut by_degree = vec![FqPoly::zero(field); d + 1];
    by_degree[0] = FqPoly::one(field);
    for (p, entry) in table.entries() {
        if p.deg() > d {
            continue;
        }
        for (norm, mult) in norm_multiset(p, entry)? {
            let delta = norm.deg();
            if delta > d {
                continue;
            }
            let weight = norm.pow(n);
            for _ in 0..mult {
                for j in delta..=d {
                    let add = &by_degree[j - delta] * &weight;
                    by_degree[j] = &by_degree[j] + &add;
                }
            }
        }
    }
    Ok(by_degree.iter().fold(FqPoly::zero(field), |acc, s| &acc + s))
}

pub fn zeta_partial_sum_at_negative_integer(k: &FunctionFieldExt, n: u64, d: usize) -> Result<FqPoly, GossError> {
    let table = splitting_table(k, d.max(1))?;
    zeta_partial_sum_from_table(&table, n, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{parse_bipoly, parse_poly, FqField};
    use crate::permgrp::SplittingType;

    fn ty(v: &[usize]) -> TableEntry {
        TableEntry::known(SplittingType::new(v.to_vec()).unwrap())
    }

    #[test]
    fn rendering() {
        let f = FqField::prime(3).unwrap();
        let t = parse_poly(&f, "T").unwrap();
        assert_eq!(goss_euler_factor(&t, &ty(&[1])).unwrap().to_string(), "(1 - T^{-s})^{-1}");
        assert_eq!(goss_euler_factor(&t, &ty(&[1, 1])).unwrap().to_string(), "(1 - T^{-s})^{-2}");
        let p = parse_poly(&f, "T+1").unwrap();
        assert_eq!(
            goss_euler_factor(&p, &ty(&[2])).unwrap().to_string(),
            "(1 - (T^2+2*T+1)^{-s})^{-1}"
        );
        assert_eq!(
            goss_euler_factor(&t, &ty(&[2, 1])).unwrap().to_string(),
            "(1 - T^{-s})^{-1} (1 - (T^2)^{-s})^{-1}"
        );
        assert_eq!(lifted_euler_factor(&t, &ty(&[1])).unwrap().to_string(), "(1 - [T]^{-s})^{-1}");
        assert_eq!(goss_euler_factor(&t, &TableEntry::Unknown), Err(GossError::UnknownType("T".into())));
    }

    #[test]
    fn trivial_extension_partial_sums() {
        let f = FqField::prime(3).unwrap();
        let k = FunctionFieldExt::new(parse_bipoly(&f, "x - T").unwrap()).unwrap();
        assert!(zeta_partial_sum_at_negative_integer(&k, 0, 1).unwrap().is_one());
        assert!(zeta_partial_sum_at_negative_integer(&k, 1, 1).unwrap().is_one());
    }
}
