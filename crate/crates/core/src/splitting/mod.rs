//! Splitting of primes of `A = F_q[T]` in a finite extension
//! `K = F_q(T)[x]/(g)`.
//!
//! Residue degrees come from factoring `g` modulo `p` over the residue field
//! `A/(p)`. That is only valid when `p` does not divide the index of
//! `A[x]/(g)` in the maximal order; this module checks a sufficient
//! condition (`p^2` does not divide the discriminant, or `g mod p` is
//! squarefree) and reports the prime as an index divisor otherwise. The
//! maximal order itself is never computed.

mod ext;
mod io;
mod residue;

pub use ext::{polynomial_discriminant, FunctionFieldExt};
pub use io::{parse_field_file, read_field_file};
pub use residue::ResidueField;

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::ffpoly::{factor, irreducibles_up_to, FfError, FqPoly};
use crate::goss::{EulerFactorTable, TableEntry};
use crate::permgrp::SplittingType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SplitError {
    #[error("{0} is inseparable in x")]
    InseparablePolynomial(String),
    #[error("invalid defining polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("reducible defining polynomial: {0}")]
    Reducible(String),
    #[error("could not certify irreducibility: {0}")]
    NotCertified(String),
    #[error("{0} may divide the index of A[x]/(g)")]
    IndexDivisor(String),
    #[error("{0} is not a monic irreducible polynomial")]
    NotPrime(String),
    #[error("{0}")]
    Field(#[from] FfError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

/// A finite prime of `A`, given by its monic generator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeOfBase(FqPoly);

impl PrimeOfBase {
    pub fn new(p: FqPoly) -> Result<Self, SplitError> {
        if !p.is_monic() || !p.is_irreducible() {
            return Err(SplitError::NotPrime(p.to_string()));
        }
        Ok(PrimeOfBase(p))
    }

    pub fn poly(&self) -> &FqPoly {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.deg()
    }
}

impl fmt::Display for PrimeOfBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Residue degree `f` and ramification index `e` of one prime above `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeAboveData {
    pub f: usize,
    pub e: usize,
}

pub fn discriminant(k: &FunctionFieldExt) -> FqPoly {
    k.discriminant().clone()
}

pub fn splitting_type_of_prime(
    k: &FunctionFieldExt,
    p: &PrimeOfBase,
) -> Result<(SplittingType, Vec<PrimeAboveData>), SplitError> {
    if p.poly().field() != k.field() {
        return Err(FfError::FieldMismatch.into());
    }
    let residue = ResidueField::new(p.poly(), k.seed())?;
    let reduced = residue.reduce_bipoly(k.polynomial());
    let fac = factor(&reduced, k.seed())?;
    let p_squared = p.poly().pow(2);
    if k.discriminant().rem(&p_squared).is_zero() && !fac.is_squarefree() {
        return Err(SplitError::IndexDivisor(p.to_string()));
    }
    let above: Vec<PrimeAboveData> =
        fac.degrees().into_iter().map(|(f, e)| PrimeAboveData { f, e }).collect();
    let ty = SplittingType::new(above.iter().map(|d| d.f).collect())
        .expect("a monic polynomial of positive degree has a factor");
    Ok((ty, above))
}

/// `N(P) = p^f`.
pub fn norm_of_prime(p: &PrimeOfBase, data: &PrimeAboveData) -> FqPoly {
    p.poly().pow(data.f as u64)
}

/// Splitting types of every prime of degree at most `d`; index divisors
/// are recorded as unknown.
pub fn splitting_table(k: &FunctionFieldExt, d: usize) -> Result<EulerFactorTable, SplitError> {
    let primes = irreducibles_up_to(k.field(), d)?;
    let entries = primes
        .into_par_iter()
        .map(|p| {
            let prime = PrimeOfBase(p);
            let entry = match splitting_type_of_prime(k, &prime) {
                Ok((ty, above)) => TableEntry::Known { splitting_type: ty, above: Some(above) },
                Err(SplitError::IndexDivisor(_)) => TableEntry::Unknown,
                Err(e) => return Err(e),
            };
            Ok((prime.0, entry))
        })
        .collect::<Result<Vec<_>, SplitError>>()?;
    Ok(EulerFactorTable::new(k.field().clone(), k.polynomial().to_string(), d, entries.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{parse_bipoly, parse_poly, FqField};

    fn ext(q: u64, g: &str) -> FunctionFieldExt {
        FunctionFieldExt::new(parse_bipoly(&FqField::of_order(q).unwrap(), g).unwrap()).unwrap()
    }

    fn prime(k: &FunctionFieldExt, s: &str) -> PrimeOfBase {
        PrimeOfBase::new(parse_poly(k.field(), s).unwrap()).unwrap()
    }

    #[test]
    fn quadratic_over_f3() {
        let k = ext(3, "x^2 - T");
        let (t, above) = splitting_type_of_prime(&k, &prime(&k, "T - 1")).unwrap();
        assert_eq!(t.entries(), &[1, 1]);
        assert_eq!(above, vec![PrimeAboveData { f: 1, e: 1 }; 2]);
        let (t, _) = splitting_type_of_prime(&k, &prime(&k, "T + 1")).unwrap();
        assert_eq!(t.entries(), &[2]);
        let (t, above) = splitting_type_of_prime(&k, &prime(&k, "T")).unwrap();
        assert_eq!(t.entries(), &[1]);
        assert_eq!(above, vec![PrimeAboveData { f: 1, e: 2 }]);
    }

    #[test]
    fn index_divisor() {
        let k = ext(3, "x^2 - T^3");
        assert!(matches!(
            splitting_type_of_prime(&k, &prime(&k, "T")),
            Err(SplitError::IndexDivisor(_))
        ));
        let table = splitting_table(&k, 1).unwrap();
        assert_eq!(table.get(&parse_poly(k.field(), "T").unwrap()), Some(&TableEntry::Unknown));
    }

    #[test]
    fn norms() {
        let k = ext(3, "x^2 - T");
        let p = prime(&k, "T + 1");
        assert_eq!(norm_of_prime(&p, &PrimeAboveData { f: 2, e: 1 }).to_string(), "T^2+2*T+1");
        let p = prime(&k, "T^2 + 1");
        assert_eq!(
            norm_of_prime(&p, &PrimeAboveData { f: 3, e: 1 }),
            parse_poly(k.field(), "(T^2+1)^3").unwrap()
        );
    }

    #[test]
    fn rejects_non_primes() {
        let f = FqField::prime(3).unwrap();
        assert!(PrimeOfBase::new(parse_poly(&f, "T^2 - 1").unwrap()).is_err());
        assert!(PrimeOfBase::new(parse_poly(&f, "2*T").unwrap()).is_err());
    }
}
