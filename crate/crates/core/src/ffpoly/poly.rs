//! Dense univariate polynomials over `F_q`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{prime_factors, FqElem, FqField};
use super::FfError;

/// Polynomial in `T` over a finite field, little-endian, trailing zeros trimmed.
#[derive(Clone, Debug)]
pub struct FqPoly {
    field: FqField,
    coeffs: Vec<FqElem>,
}

impl FqPoly {
    pub fn new(field: FqField, mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FqPoly { field, coeffs }
    }

    pub fn from_ints(field: &FqField, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&x| field.from_int(x)).collect();
        Self::new(field.clone(), c)
    }

    pub fn zero(field: &FqField) -> Self {
        FqPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FqField) -> Self {
        Self::constant(field, FqElem::ONE)
    }

    pub fn constant(field: &FqField, c: FqElem) -> Self {
        Self::new(field.clone(), vec![c])
    }

    pub fn monomial(field: &FqField, c: FqElem, n: usize) -> Self {
        let mut v = vec![FqElem::ZERO; n + 1];
        v[n] = c;
        Self::new(field.clone(), v)
    }

    /// The variable `T`.
    pub fn var(field: &FqField) -> Self {
        Self::monomial(field, FqElem::ONE, 1)
    }

    /// The monic polynomial of degree `deg` whose lower coefficients are the
    /// base-`q` digits of `index`. Iterating `index` upward walks the monic
    /// polynomials of that degree in canonical order.
    pub fn monic_from_index(field: &FqField, deg: usize, mut index: u64) -> Self {
        let q = field.order();
        let mut c = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            c.push(FqElem(index % q));
            index /= q;
        }
        c.push(FqElem::ONE);
        Self::new(field.clone(), c)
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FqElem::ONE
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for call sites that have
    /// already excluded zero.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or(FqElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == FqElem::ONE
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn same_field(&self, other: &FqPoly) -> Result<(), FfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FfError::FieldMismatch)
        }
    }

    pub fn scale(&self, c: FqElem) -> FqPoly {
        let f = &self.field;
        Self::new(f.clone(), self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn make_monic(&self) -> FqPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn shift(&self, n: usize) -> FqPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![FqElem::ZERO; n];
        c.extend_from_slice(&self.coeffs);
        Self::new(self.field.clone(), c)
    }

    pub fn derivative(&self) -> FqPoly {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, f.from_int((i as u64 % f.characteristic()) as i64)))
            .collect();
        Self::new(f.clone(), c)
    }

    pub fn eval(&self, x: FqElem) -> FqElem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FqElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn divmod(&self, g: &FqPoly) -> Result<(FqPoly, FqPoly), FfError> {
        self.same_field(g)?;
        if g.is_zero() {
            return Err(FfError::DivisionByZero);
        }
        let f = &self.field;
        let dg = g.deg();
        if self.coeffs.len() <= dg {
            return Ok((FqPoly::zero(f), self.clone()));
        }
        let inv_lead = f.inv(g.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FqElem::ZERO; rem.len() - dg];
        for i in (dg..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, inv_lead);
            quot[i - dg] = t;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                let idx = i - dg + j;
                rem[idx] = f.sub(rem[idx], f.mul(t, gj));
            }
        }
        rem.truncate(dg);
        Ok((FqPoly::new(f.clone(), quot), FqPoly::new(f.clone(), rem)))
    }

    pub fn rem(&self, g: &FqPoly) -> FqPoly {
        self.divmod(g).expect("nonzero divisor over the same field").1
    }

    /// Exact quotient; panics if `g` does not divide `self`.
    pub fn exact_div(&self, g: &FqPoly) -> FqPoly {
        let (q, r) = self.divmod(g).expect("nonzero divisor over the same field");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &FqPoly) -> FqPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &FqPoly) -> (FqPoly, FqPoly, FqPoly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (FqPoly::one(f), FqPoly::zero(f));
        let (mut t0, mut t1) = (FqPoly::zero(f), FqPoly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.leading()).expect("nonzero");
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn pow(&self, mut e: u64) -> FqPoly {
        let mut base = self.clone();
        let mut acc = FqPoly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &FqPoly) -> FqPoly {
        let mut base = self.rem(m);
        let mut acc = FqPoly::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(m);
            }
        }
        acc
    }

    /// `self^(q^j) mod m`, by `j` successive `q`-th powers.
    pub fn frobenius_mod(&self, j: usize, m: &FqPoly) -> FqPoly {
        let q = self.field.order();
        let mut x = self.rem(m);
        for _ in 0..j {
            x = x.powmod(q, m);
        }
        x
    }

    /// Composition `self(h)`.
    pub fn compose(&self, h: &FqPoly) -> FqPoly {
        let f = &self.field;
        self.coeffs.iter().rev().fold(FqPoly::zero(f), |acc, &c| {
            &(&acc * h) + &FqPoly::constant(f, c)
        })
    }

    /// Rabin's test: `T^(q^n) = T mod f` and `gcd(T^(q^(n/r)) - T, f) = 1`
    /// for every prime `r | n`.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let f = self.make_monic();
        let t = FqPoly::var(&self.field);
        let mut powers = vec![t.clone()];
        for _ in 0..n {
            let next = powers.last().unwrap().powmod(self.field.order(), &f);
            powers.push(next);
        }
        if powers[n] != t.rem(&f) {
            return false;
        }
        prime_factors(n as u64)
            .into_iter()
            .all(|r| (&powers[n / r as usize] - &t).gcd(&f).is_one())
    }

    /// Iterator over all monic polynomials of degree `deg` in canonical order.
    pub fn monic_of_degree(field: &FqField, deg: usize) -> impl Iterator<Item = FqPoly> + '_ {
        let count = field.order().checked_pow(deg as u32).expect("enumeration size fits u64");
        (0..count).map(move |i| FqPoly::monic_from_index(field, deg, i))
    }

    pub(crate) fn add_ref(&self, other: &FqPoly) -> FqPoly {
        assert!(self.field == other.field, "field mismatch");
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        FqPoly::new(f.clone(), c)
    }

    pub(crate) fn mul_ref(&self, other: &FqPoly) -> FqPoly {
        assert!(self.field == other.field, "field mismatch");
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return FqPoly::zero(f);
        }
        let mut c = vec![FqElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        FqPoly::new(f.clone(), c)
    }
}

/// The least monic irreducible of degree `k` in canonical order.
pub(crate) fn first_irreducible(field: &FqField, k: usize) -> FqPoly {
    FqPoly::monic_of_degree(field, k)
        .find(|f| f.is_irreducible())
        .expect("irreducibles exist in every degree")
}

impl PartialEq for FqPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for FqPoly {}

impl Hash for FqPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

/// Canonical order: by degree, then coefficients compared from the top down.
impl Ord for FqPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FqPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a FqPoly> for &'a FqPoly {
    type Output = FqPoly;
    fn add(self, rhs: &FqPoly) -> FqPoly {
        self.add_ref(rhs)
    }
}

impl<'a> Sub<&'a FqPoly> for &'a FqPoly {
    type Output = FqPoly;
    fn sub(self, rhs: &FqPoly) -> FqPoly {
        self.add_ref(&-rhs)
    }
}

impl<'a> Mul<&'a FqPoly> for &'a FqPoly {
    type Output = FqPoly;
    fn mul(self, rhs: &FqPoly) -> FqPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &FqPoly {
    type Output = FqPoly;
    fn neg(self) -> FqPoly {
        let f = &self.field;
        FqPoly::new(f.clone(), self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_poly(self, "T"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FqField {
        FqField::prime(p).unwrap()
    }

    #[test]
    fn gcd_of_t2_minus_1_and_t_minus_1() {
        let f3 = f(3);
        let a = FqPoly::from_ints(&f3, &[-1, 0, 1]);
        let b = FqPoly::from_ints(&f3, &[-1, 1]);
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn frobenius_square_in_char_two() {
        let f2 = f(2);
        let t1 = FqPoly::from_ints(&f2, &[1, 1]);
        assert_eq!(&t1 * &t1, FqPoly::from_ints(&f2, &[1, 0, 1]));
    }

    #[test]
    fn long_division_over_f5() {
        let f5 = f(5);
        let t3 = FqPoly::from_ints(&f5, &[0, 0, 0, 1]);
        let g = FqPoly::from_ints(&f5, &[1, 0, 1]);
        let (q, r) = t3.divmod(&g).unwrap();
        assert_eq!(q, FqPoly::from_ints(&f5, &[0, 1]));
        assert_eq!(r, FqPoly::from_ints(&f5, &[0, 4]));
        assert_eq!(t3.divmod(&FqPoly::zero(&f5)), Err(FfError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = FqPoly::one(&f(3));
        let b = FqPoly::one(&f(5));
        assert_eq!(a.divmod(&b), Err(FfError::FieldMismatch));
    }

    #[test]
    fn canonical_order_matches_listing() {
        let f2 = f(2);
        let mut v: Vec<FqPoly> = FqPoly::monic_of_degree(&f2, 3).collect();
        let sorted = {
            let mut s = v.clone();
            s.sort();
            s
        };
        assert_eq!(v, sorted);
        v.retain(|p| p.is_irreducible());
        assert_eq!(v[0].to_string(), "T^3+T+1");
        assert_eq!(v[1].to_string(), "T^3+T^2+1");
    }

    #[test]
    fn xgcd_bezout() {
        let f7 = f(7);
        let a = FqPoly::from_ints(&f7, &[3, 1, 4, 1, 5]);
        let b = FqPoly::from_ints(&f7, &[2, 6, 5]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, a.gcd(&b));
    }
}
