//! Finite fields `F_q` and the polynomial ring `A = F_q[T]`.

mod bipoly;
mod factor;
mod field;
mod parse;
mod poly;

pub use bipoly::BiPoly;
pub use factor::{
    distinct_degree, equal_degree, factor, irreducibles_up_to, squarefree_decomposition,
    Factorization,
};
pub use field::{FqElem, FqField};
pub use parse::{format_bipoly, format_poly, parse_bipoly, parse_poly};
pub use poly::FqPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FfError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid degree {0}")]
    InvalidDegree(usize),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field parameters overflow 64 bits")]
    Overflow,
    #[error("element index {0} out of range for field of order {1}")]
    ElementOutOfRange(u64, u64),
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FqOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow(u64),
}

/// Field arithmetic with the checked error contract. `b` is ignored by `Inv`
/// and `Pow`.
pub fn fq_arith(field: &FqField, a: FqElem, b: FqElem, op: FqOp) -> Result<FqElem, FfError> {
    for x in [a, b] {
        if x.index() >= field.order() {
            return Err(FfError::FieldMismatch);
        }
    }
    Ok(match op {
        FqOp::Add => field.add(a, b),
        FqOp::Sub => field.sub(a, b),
        FqOp::Mul => field.mul(a, b),
        FqOp::Inv => field.inv(a)?,
        FqOp::Pow(e) => field.pow(a, e),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
    DivMod,
    Gcd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyResult {
    Single(FqPoly),
    Pair(FqPoly, FqPoly),
}

pub fn poly_arith(f: &FqPoly, g: &FqPoly, op: PolyOp) -> Result<PolyResult, FfError> {
    f.same_field(g)?;
    Ok(match op {
        PolyOp::Add => PolyResult::Single(f + g),
        PolyOp::Mul => PolyResult::Single(f * g),
        PolyOp::DivMod => {
            let (q, r) = f.divmod(g)?;
            PolyResult::Pair(q, r)
        }
        PolyOp::Gcd => PolyResult::Single(f.gcd(g)),
    })
}
