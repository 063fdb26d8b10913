//! Formal integer combinations of Teichmüller symbols `[f]`, `f` in
//! `F_q(T)^*`, with the product rule `[f][g] = [fg]` and nothing else.

use std::collections::BTreeMap;
use std::fmt;

use crate::ffpoly::{FfError, FqPoly};

/// A nonzero element of `F_q(T)` as `num/den` with `den` monic and the two
/// coprime.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalFunction {
    num: FqPoly,
    den: FqPoly,
}

impl RationalFunction {
    pub fn new(num: FqPoly, den: FqPoly) -> Result<Self, FfError> {
        num.same_field(&den)?;
        if num.is_zero() || den.is_zero() {
            return Err(FfError::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, den) = (num.exact_div(&g), den.exact_div(&g));
        let lead = den.field().inv(den.leading())?;
        Ok(RationalFunction { num: num.scale(lead), den: den.scale(lead) })
    }

    pub fn from_poly(f: FqPoly) -> Result<Self, FfError> {
        let one = FqPoly::one(f.field());
        Self::new(f, one)
    }

    pub fn num(&self) -> &FqPoly {
        &self.num
    }

    pub fn den(&self) -> &FqPoly {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("product of nonzero fractions")
    }

    pub fn inv(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone()).expect("nonzero")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolicWittElement {
    terms: BTreeMap<RationalFunction, i64>,
}

impl SymbolicWittElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The symbol `[f]`.
    pub fn teichmuller(f: RationalFunction) -> Self {
        SymbolicWittElement { terms: BTreeMap::from([(f, 1)]) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<RationalFunction, i64> {
        &self.terms
    }

    fn insert(&mut self, f: RationalFunction, c: i64) {
        let entry = self.terms.entry(f).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (f, &c) in &other.terms {
            out.insert(f.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        SymbolicWittElement { terms: self.terms.iter().map(|(f, c)| (f.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (f, &a) in &self.terms {
            for (g, &b) in &other.terms {
                out.insert(f.mul(g), a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        SymbolicWittElement { terms: self.terms.iter().map(|(f, a)| (f.clone(), a * c)).collect() }
    }
}

impl fmt::Display for SymbolicWittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (i, c.abs()) {
                (0, _) if c < 0 => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "[{g}]")?;
        }
        Ok(())
    }
}
