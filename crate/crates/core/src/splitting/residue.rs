//! Residue fields `A/(P)` realized as flat extensions of `F_p`.

use crate::ffpoly::{factor, BiPoly, FfError, FqElem, FqField, FqPoly};

/// `F_q[T]/(P)` together with the reduction map from `F_q[T]`.
#[derive(Clone, Debug)]
pub struct ResidueField {
    field: FqField,
    /// Image of each element of `F_q`, indexed by its packed value.
    embed: Vec<FqElem>,
    /// Image of `T`.
    t_image: FqElem,
}

impl ResidueField {
    /// Builds the residue field of the monic irreducible `prime`.
    ///
    /// Over a prime field this is `F_p[u]/(P)` with `u` the class of `T`.
    /// Otherwise `F_{q^m}` is built over `F_p` with its own modulus, and
    /// both the generator of `F_q` and `T` are sent to roots found by
    /// factoring; any choice of roots gives an isomorphic reduction.
    pub fn new(prime: &FqPoly, seed: u64) -> Result<Self, FfError> {
        let base = prime.field();
        let m = prime.degree().filter(|&m| m > 0).ok_or(FfError::InvalidDegree(0))?;
        let q = base.order();
        if m == 1 {
            let t_image = base.neg(prime.coeff(0));
            return Ok(ResidueField { field: base.clone(), embed: base.elements().collect(), t_image });
        }
        let p = base.characteristic();
        if base.is_prime_field() {
            let modulus: Vec<u64> = prime.coeffs().iter().map(|c| c.index()).collect();
            let field = FqField::with_modulus(p, &modulus)?;
            let t_image = field.generator().expect("degree at least two");
            let embed = (0..q).map(|i| field.from_int(i as i64)).collect();
            return Ok(ResidueField { field, embed, t_image });
        }
        let k = base.degree();
        let field = FqField::new(p, k * m)?;
        // a root of the modulus of F_q inside the big field
        let base_modulus = FqPoly::new(
            field.clone(),
            base.modulus().iter().map(|&c| field.from_int(c as i64)).collect(),
        );
        let alpha = find_root(&base_modulus, seed)?;
        let embed: Vec<FqElem> = base
            .elements()
            .map(|a| {
                base.coeffs(a)
                    .iter()
                    .rev()
                    .fold(FqElem::ZERO, |acc, &c| field.add(field.mul(acc, alpha), field.from_int(c as i64)))
            })
            .collect();
        let lifted = FqPoly::new(field.clone(), prime.coeffs().iter().map(|c| embed[c.index() as usize]).collect());
        let t_image = find_root(&lifted, seed)?;
        Ok(ResidueField { field, embed, t_image })
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order()
    }

    pub fn reduce(&self, c: &FqPoly) -> FqElem {
        let f = &self.field;
        c.coeffs()
            .iter()
            .rev()
            .fold(FqElem::ZERO, |acc, a| f.add(f.mul(acc, self.t_image), self.embed[a.index() as usize]))
    }

    /// Reduces every coefficient of a polynomial in `x`.
    pub fn reduce_bipoly(&self, g: &BiPoly) -> FqPoly {
        FqPoly::new(self.field.clone(), g.coeffs().iter().map(|c| self.reduce(c)).collect())
    }
}

fn find_root(f: &FqPoly, seed: u64) -> Result<FqElem, FfError> {
    let fac = factor(f, seed)?;
    let (lin, _) = fac
        .factors
        .iter()
        .find(|(g, _)| g.deg() == 1)
        .ok_or_else(|| FfError::InvalidModulus(format!("{f} has no root in F_{}", f.field().order())))?;
    Ok(f.field().neg(lin.coeff(0)))
}
