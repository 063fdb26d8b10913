//! Polynomials in `x` with coefficients in `F_q[T]`.

use std::fmt;

use super::field::FqField;
use super::poly::FqPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly {
    field: FqField,
    /// Coefficients of `x^0, x^1, ...`, trailing zeros trimmed.
    coeffs: Vec<FqPoly>,
}

impl BiPoly {
    pub fn new(field: FqField, mut coeffs: Vec<FqPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { field, coeffs }
    }

    pub fn zero(field: &FqField) -> Self {
        BiPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: FqPoly) -> Self {
        BiPoly::new(c.field().clone(), vec![c])
    }

    /// The variable `x`.
    pub fn var(field: &FqField) -> Self {
        BiPoly::new(field.clone(), vec![FqPoly::zero(field), FqPoly::one(field)])
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FqPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(|| FqPoly::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> FqPoly {
        self.coeffs.last().cloned().unwrap_or_else(|| FqPoly::zero(&self.field))
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Largest `T`-degree among the coefficients.
    pub fn t_degree(&self) -> usize {
        self.coeffs.iter().map(FqPoly::deg).max().unwrap_or(0)
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        BiPoly::new(
            self.field.clone(),
            (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect(),
        )
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly::new(self.field.clone(), self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero(&self.field);
        }
        let mut c = vec![FqPoly::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        BiPoly::new(self.field.clone(), c)
    }

    pub fn pow(&self, e: u64) -> BiPoly {
        let mut acc = BiPoly::constant(FqPoly::one(&self.field));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal derivative in `x`.
    pub fn derivative(&self) -> BiPoly {
        let f = &self.field;
        BiPoly::new(
            f.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(f.from_int((i as u64 % f.characteristic()) as i64)))
                .collect(),
        )
    }

    /// Substitutes `x = r(T)`.
    pub fn eval_at(&self, r: &FqPoly) -> FqPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(FqPoly::zero(&self.field), |acc, c| &(&acc * r) + c)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_bipoly(self))
    }
}
