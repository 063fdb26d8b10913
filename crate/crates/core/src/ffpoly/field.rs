//! Finite fields `F_q = F_p[u]/(m(u))`.
//!
//! Elements are packed into a single `u64`: the coefficient vector
//! `c_0 + c_1 u + ... + c_{k-1} u^{k-1}` is stored as `sum c_i p^i`. Comparing
//! the packed integers therefore compares coefficient vectors from the top
//! coefficient down, which is the canonical order used everywhere else.

use std::fmt;
use std::sync::Arc;

use super::FfError;

/// Fields up to this size get Zech-style log/exp tables for multiplication.
const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqElem(pub(crate) u64);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    /// Packed index of the element, `sum c_i p^i`.
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

#[derive(Debug)]
struct FieldData {
    p: u64,
    k: usize,
    q: u64,
    /// Monic, little-endian, length `k + 1`.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

/// Handle to a finite field. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct FqField(Arc<FieldData>);

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FqField {}

impl std::hash::Hash for FqField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.modulus.hash(state);
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl FqField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self, FfError> {
        if !is_prime_u64(p) {
            return Err(FfError::NotPrime(p));
        }
        Ok(Self::build(p, vec![0, 1]))
    }

    /// `F_{p^k}` with the least monic irreducible of degree `k` in canonical
    /// order as modulus.
    pub fn new(p: u64, k: usize) -> Result<Self, FfError> {
        if k == 0 {
            return Err(FfError::InvalidDegree(0));
        }
        let base = Self::prime(p)?;
        if k == 1 {
            return Ok(base);
        }
        checked_pow(p, k as u32)?;
        let modulus = super::poly::first_irreducible(&base, k);
        let coeffs = modulus.coeffs().iter().map(|c| c.0).collect();
        Ok(Self::build(p, coeffs))
    }

    /// `F_p[u]/(modulus)` for an explicit monic modulus (little-endian
    /// integer coefficients).
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self, FfError> {
        let base = Self::prime(p)?;
        let reduced: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        let poly = super::poly::FqPoly::new(
            base.clone(),
            reduced.iter().map(|&c| FqElem(c)).collect(),
        );
        let k = poly.degree().ok_or(FfError::InvalidDegree(0))?;
        if k == 0 || !poly.is_monic() {
            return Err(FfError::InvalidModulus("modulus must be monic of degree >= 1".into()));
        }
        checked_pow(p, k as u32)?;
        if !poly.is_irreducible() {
            return Err(FfError::InvalidModulus(format!("{poly} is reducible over F_{p}")));
        }
        if k == 1 {
            return Ok(base);
        }
        Ok(Self::build(p, reduced))
    }

    /// The unique field of order `q`, with the default modulus.
    pub fn of_order(q: u64) -> Result<Self, FfError> {
        let factors = prime_factors(q);
        if factors.len() != 1 {
            return Err(FfError::NotPrimePower(q));
        }
        let p = factors[0];
        let mut k = 0;
        let mut r = q;
        while r > 1 {
            r /= p;
            k += 1;
        }
        Self::new(p, k)
    }

    fn build(p: u64, modulus: Vec<u64>) -> Self {
        let k = modulus.len() - 1;
        let q = p.pow(k as u32);
        let mut data = FieldData { p, k, q, modulus, tables: None };
        if k > 1 && q <= TABLE_LIMIT {
            data.tables = Some(build_tables(&data));
        }
        FqField(Arc::new(data))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    pub fn zero(&self) -> FqElem {
        FqElem::ZERO
    }

    pub fn one(&self) -> FqElem {
        FqElem::ONE
    }

    /// The class of `u`; `None` for prime fields.
    pub fn generator(&self) -> Option<FqElem> {
        (self.0.k > 1).then_some(FqElem(self.0.p))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.0.p as i64) as u64)
    }

    pub fn elem(&self, index: u64) -> Result<FqElem, FfError> {
        if index >= self.0.q {
            return Err(FfError::ElementOutOfRange(index, self.0.q));
        }
        Ok(FqElem(index))
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FqElem, FfError> {
        if coeffs.len() > self.0.k {
            return Err(FfError::ElementOutOfRange(coeffs.len() as u64, self.0.k as u64));
        }
        Ok(self.pack(coeffs.iter().map(|c| c % self.0.p)))
    }

    /// Coefficients of `a` in the basis `1, u, ..., u^{k-1}`.
    pub fn coeffs(&self, a: FqElem) -> Vec<u64> {
        let p = self.0.p;
        let mut v = Vec::with_capacity(self.0.k);
        let mut x = a.0;
        for _ in 0..self.0.k {
            v.push(x % p);
            x /= p;
        }
        v
    }

    fn pack(&self, digits: impl DoubleEndedIterator<Item = u64>) -> FqElem {
        let p = self.0.p;
        FqElem(digits.rev().fold(0u64, |acc, d| acc * p + d))
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.0.q).map(FqElem)
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.0.p;
        if self.0.k == 1 {
            let s = a.0 as u128 + b.0 as u128;
            return FqElem((s % p as u128) as u64);
        }
        if p == 2 {
            return FqElem(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.0.k {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        FqElem(out)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        let p = self.0.p;
        if self.0.k == 1 {
            return FqElem(if a.0 == 0 { 0 } else { p - a.0 });
        }
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.0.k {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        FqElem(out)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.0 == 0 || b.0 == 0 {
            return FqElem::ZERO;
        }
        if self.0.k == 1 {
            return FqElem(mul_mod(a.0, b.0, self.0.p));
        }
        match &self.0.tables {
            Some(t) => {
                let l = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                FqElem(t.exp[l] as u64)
            }
            None => self.mul_direct(a, b),
        }
    }

    /// Schoolbook multiplication followed by reduction by the modulus.
    pub(crate) fn mul_direct(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.0.p;
        let k = self.0.k;
        let da = self.coeffs(a);
        let db = self.coeffs(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        let m = &self.0.modulus;
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &mi) in m.iter().enumerate().take(k) {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + p - mul_mod(c, mi, p)) % p;
            }
        }
        prod.truncate(k);
        self.pack(prod.into_iter())
    }

    pub fn pow(&self, a: FqElem, mut e: u64) -> FqElem {
        let mut base = a;
        let mut acc = FqElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem, FfError> {
        if a.is_zero() {
            return Err(FfError::DivisionByZero);
        }
        if let Some(t) = &self.0.tables {
            let l = t.log[a.0 as usize] as u64;
            let n = self.0.q - 1;
            return Ok(FqElem(t.exp[((n - l) % n) as usize] as u64));
        }
        Ok(self.pow(a, self.0.q - 2))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem, FfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FqElem) -> u64 {
        assert!(!a.is_zero());
        let mut n = self.0.q - 1;
        for r in prime_factors(self.0.q - 1) {
            while n % r == 0 && self.pow(a, n / r) == FqElem::ONE {
                n /= r;
            }
        }
        n
    }

    /// The `p`-th root, i.e. the inverse of Frobenius.
    pub fn pth_root(&self, a: FqElem) -> FqElem {
        if self.0.k == 1 {
            return a;
        }
        self.pow(a, self.0.q / self.0.p)
    }

    pub fn format_elem(&self, a: FqElem) -> String {
        if self.0.k == 1 {
            return a.0.to_string();
        }
        let digits = self.coeffs(a);
        let mut terms = Vec::new();
        for (i, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{i}"),
            };
            terms.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
}

impl fmt::Display for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

pub(crate) fn checked_pow(p: u64, k: u32) -> Result<u64, FfError> {
    p.checked_pow(k).ok_or(FfError::Overflow)
}

fn build_tables(data: &FieldData) -> Tables {
    let shell = FqField(Arc::new(FieldData {
        p: data.p,
        k: data.k,
        q: data.q,
        modulus: data.modulus.clone(),
        tables: None,
    }));
    let n = data.q - 1;
    let factors = prime_factors(n);
    let generator = (2..data.q)
        .map(FqElem)
        .find(|&g| {
            factors
                .iter()
                .all(|&r| pow_direct(&shell, g, n / r) != FqElem::ONE)
        })
        .expect("multiplicative group of a finite field is cyclic");
    let mut log = vec![0u32; data.q as usize];
    let mut exp = vec![0u32; 2 * n as usize];
    let mut x = FqElem::ONE;
    for i in 0..n as usize {
        exp[i] = x.0 as u32;
        exp[i + n as usize] = x.0 as u32;
        log[x.0 as usize] = i as u32;
        x = shell.mul_direct(x, generator);
    }
    Tables { log, exp }
}

fn pow_direct(field: &FqField, a: FqElem, mut e: u64) -> FqElem {
    let mut base = a;
    let mut acc = FqElem::ONE;
    while e > 0 {
        if e & 1 == 1 {
            acc = field.mul_direct(acc, base);
        }
        base = field.mul_direct(base, base);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f3 = FqField::prime(3).unwrap();
        assert_eq!(f3.add(FqElem(2), FqElem(2)), FqElem(1));
        let f5 = FqField::prime(5).unwrap();
        assert_eq!(f5.inv(FqElem(2)).unwrap(), FqElem(3));
        assert_eq!(f5.inv(FqElem(0)), Err(FfError::DivisionByZero));
    }

    #[test]
    fn f4_generator_squares_to_u_plus_one() {
        let f4 = FqField::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let u = f4.generator().unwrap();
        let uu = f4.mul(u, u);
        assert_eq!(f4.coeffs(uu), vec![1, 1]);
        assert_eq!(f4.format_elem(uu), "u+1");
    }

    #[test]
    fn table_and_direct_multiplication_agree() {
        for (p, k) in [(2, 3), (3, 2), (5, 2), (2, 4), (7, 2)] {
            let f = FqField::new(p, k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul_direct(a, b));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FqField::prime(4), Err(FfError::NotPrime(4)));
        assert!(matches!(FqField::new(2, 70), Err(FfError::Overflow)));
        assert!(matches!(
            FqField::with_modulus(2, &[1, 0, 1]),
            Err(FfError::InvalidModulus(_))
        ));
        assert_eq!(FqField::of_order(9).unwrap().degree(), 2);
        assert_eq!(FqField::of_order(12), Err(FfError::NotPrimePower(12)));
    }

    #[test]
    fn frobenius_inverse() {
        let f9 = FqField::new(3, 2).unwrap();
        for a in f9.elements() {
            assert_eq!(f9.pow(f9.pth_root(a), 3), a);
        }
    }
}
