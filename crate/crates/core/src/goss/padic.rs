//! The unramified extension `Z_q = Z_p[w]/(H)` modulo `p^k`, where `H` is
//! the integer lift of the modulus of `F_q`, and Teichmüller lifts of
//! constants.

use std::fmt;
use std::sync::Arc;

use crate::ffpoly::{FqElem, FqField};

use super::GossError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PadicElem {
    p: u64,
    k: u32,
    /// Monic `H` of degree `r`, little-endian.
    modulus: Arc<[u64]>,
    coeffs: Vec<u64>,
}

impl PadicElem {
    fn pk(p: u64, k: u32) -> Result<u64, GossError> {
        p.checked_pow(k).filter(|&m| m < 1 << 62).ok_or(GossError::Precision(k))
    }

    /// The integer lift of `a` with digits in `[0, p)`.
    pub fn lift(field: &FqField, a: FqElem, k: u32) -> Result<Self, GossError> {
        if k == 0 {
            return Err(GossError::Precision(0));
        }
        Self::pk(field.characteristic(), k)?;
        Ok(PadicElem {
            p: field.characteristic(),
            k,
            modulus: field.modulus().into(),
            coeffs: field.coeffs(a),
        })
    }

    pub fn one_like(&self) -> Self {
        let mut coeffs = vec![0; self.r()];
        coeffs[0] = 1;
        PadicElem { coeffs, ..self.clone() }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.k
    }

    /// Degree of `Z_q` over `Z_p`.
    pub fn r(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn modulus_value(&self) -> u64 {
        self.p.pow(self.k)
    }

    /// Same element at a different precision; raising the precision pads
    /// with zero digits.
    pub fn with_precision(&self, k: u32) -> Result<Self, GossError> {
        let m = Self::pk(self.p, k)?;
        Ok(PadicElem { k, coeffs: self.coeffs.iter().map(|c| c % m).collect(), ..self.clone() })
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.modulus_value();
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a + b) % m).collect();
        PadicElem { coeffs, ..self.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let m = self.modulus_value();
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a + m - b) % m).collect();
        PadicElem { coeffs, ..self.clone() }
    }

    pub fn scale(&self, c: u64) -> Self {
        let m = self.modulus_value() as u128;
        let coeffs = self.coeffs.iter().map(|&a| ((a as u128 * c as u128) % m) as u64).collect();
        PadicElem { coeffs, ..self.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = self.modulus_value() as u128;
        let r = self.r();
        let mut prod = vec![0u128; 2 * r - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a as u128 * b as u128) % m;
            }
        }
        // w^r = -(h_0 + ... + h_{r-1} w^{r-1})
        for top in (r..prod.len()).rev() {
            let c = prod[top];
            prod[top] = 0;
            for (i, &h) in self.modulus[..r].iter().enumerate() {
                let idx = top - r + i;
                prod[idx] = (prod[idx] + m - (c * h as u128) % m) % m;
            }
        }
        PadicElem { coeffs: prod[..r].iter().map(|&c| c as u64).collect(), ..self.clone() }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduction modulo `p`, as an element of `field`.
    pub fn residue(&self, field: &FqField) -> FqElem {
        let digits: Vec<u64> = self.coeffs.iter().map(|c| c % self.p).collect();
        field.from_coeffs(&digits).expect("r digits")
    }

    /// Base-`p` digits of each coordinate, least significant first.
    pub fn digits(&self) -> Vec<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|&c| {
                let mut x = c;
                (0..self.k)
                    .map(|_| {
                        let d = x % self.p;
                        x /= self.p;
                        d
                    })
                    .collect()
            })
            .collect()
    }
}

/// `[d0,d1,...]` for `Z_p`, one such list per coordinate otherwise.
impl fmt::Display for PadicElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lists: Vec<String> = self
            .digits()
            .iter()
            .map(|d| format!("[{}]", d.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        if lists.len() == 1 {
            f.write_str(&lists[0])
        } else {
            write!(f, "[{}]", lists.join(","))
        }
    }
}

/// Inverse of a unit modulo `m`.
fn inverse_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let t = r0 / r1;
        (r0, r1) = (r1, r0 - t * r1);
        (s0, s1) = (s1, s0 - t * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(m as i128) as u64
}

/// The root of unity `w` in `Z_q` with `w = a mod p`, to precision `p^k`.
///
/// Newton's method on `X^{q-1} - 1`. Since `x^{q-1}` is already `1` to the
/// current precision, `x / (q-1)` inverts the derivative well enough for
/// each step to double the precision.
pub fn teichmuller_lift_const(field: &FqField, a: FqElem, k: u32) -> Result<PadicElem, GossError> {
    if a.is_zero() {
        return Err(GossError::ZeroInput);
    }
    let q = field.order();
    let mut x = PadicElem::lift(field, a, k)?.with_precision(1)?;
    let mut prec = 1;
    while prec < k {
        prec = (2 * prec).min(k);
        x = x.with_precision(prec)?;
        let m = x.modulus_value();
        let err = x.pow(q - 1).sub(&x.one_like());
        let step = err.mul(&x).scale(inverse_mod((q - 1) % m, m));
        x = x.sub(&step);
    }
    Ok(x)
}
