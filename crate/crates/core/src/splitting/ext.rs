use std::fmt;

use crate::ffpoly::{factor, irreducibles_up_to, BiPoly, FqElem, FqField, FqPoly};

use super::residue::ResidueField;
use super::SplitError;

/// Number of candidate factors tried before giving up on certification.
const SEARCH_LIMIT: u64 = 1 << 21;
/// Largest specialization degree used for degree patterns.
const PATTERN_DEGREE: usize = 4;
const PATTERN_PRIMES: usize = 64;

/// `K = F_q(T)[x]/(g)` for a monic, separable, irreducible `g`.
#[derive(Clone, Debug)]
pub struct FunctionFieldExt {
    field: FqField,
    g: BiPoly,
    disc: FqPoly,
    seed: u64,
}

impl FunctionFieldExt {
    pub fn new(g: BiPoly) -> Result<Self, SplitError> {
        Self::with_seed(g, 0)
    }

    /// Like [`new`](Self::new), with the seed used by every factorization.
    pub fn with_seed(g: BiPoly, seed: u64) -> Result<Self, SplitError> {
        let field = g.field().clone();
        if g.degree().unwrap_or(0) == 0 {
            return Err(SplitError::InvalidPolynomial(format!("{g} has degree 0 in x")));
        }
        if !g.is_monic() {
            return Err(SplitError::InvalidPolynomial(format!("{g} is not monic in x")));
        }
        let disc = polynomial_discriminant(&g)?;
        let ext = FunctionFieldExt { field, g, disc, seed };
        ext.certify_irreducible()?;
        Ok(ext)
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn polynomial(&self) -> &BiPoly {
        &self.g
    }

    pub fn degree(&self) -> usize {
        self.g.deg()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// `disc_x(g)`, computed once at construction.
    pub fn discriminant(&self) -> &FqPoly {
        &self.disc
    }

    /// Factorization degrees of `g` reduced modulo `prime`, as
    /// `(degree, multiplicity)` pairs.
    pub(crate) fn reduction_pattern(&self, prime: &FqPoly) -> Result<Vec<(usize, usize)>, SplitError> {
        let residue = ResidueField::new(prime, self.seed)?;
        let reduced = residue.reduce_bipoly(&self.g);
        Ok(factor(&reduced, self.seed)?.degrees())
    }

    fn certify_irreducible(&self) -> Result<(), SplitError> {
        let n = self.degree();
        if n == 1 {
            return Ok(());
        }
        let a0 = self.g.coeff(0);
        if a0.is_zero() {
            return Err(SplitError::Reducible(format!("{} is divisible by x", self.g)));
        }
        // degrees of possible factors, as a bitmask of subset sums
        let full: u128 = if n >= 127 { u128::MAX } else { (1u128 << (n + 1)) - 1 };
        let mut possible = full;
        let primes = irreducibles_up_to(&self.field, PATTERN_DEGREE)?;
        for prime in primes.iter().take(PATTERN_PRIMES) {
            if self.field.order().checked_pow(prime.deg() as u32).is_none_or(|o| o > 1 << 20) {
                break;
            }
            let mut sums: u128 = 1;
            for (d, e) in self.reduction_pattern(prime)? {
                for _ in 0..e {
                    sums |= sums << d;
                }
            }
            possible &= sums & full;
            if possible == 1 | (1 << n) {
                return Ok(());
            }
        }
        if n > 4 {
            return Err(SplitError::NotCertified(format!(
                "degree patterns leave factor degrees open for {}",
                self.g
            )));
        }
        let divisors = monic_divisors(&a0, self.seed)?;
        if possible & 0b10 != 0 {
            if let Some(r) = self.find_linear_factor(&divisors) {
                return Err(SplitError::Reducible(format!("{} has the root {r}", self.g)));
            }
        }
        if n == 4 && possible & 0b100 != 0 {
            if let Some(h) = self.find_quadratic_factor(&divisors)? {
                return Err(SplitError::Reducible(format!("{} has the factor {h}", self.g)));
            }
        }
        Ok(())
    }

    fn find_linear_factor(&self, divisors: &[FqPoly]) -> Option<FqPoly> {
        let bound = root_degree_bound(&self.g, 1);
        let units: Vec<FqElem> = self.field.elements().skip(1).collect();
        for d in divisors.iter().filter(|d| d.deg() <= bound) {
            for &u in &units {
                let r = d.scale(u);
                if self.g.eval_at(&r).is_zero() {
                    return Some(r);
                }
            }
        }
        None
    }

    fn find_quadratic_factor(&self, divisors: &[FqPoly]) -> Result<Option<BiPoly>, SplitError> {
        let q = self.field.order();
        let (b_bound, c_bound) = (root_degree_bound(&self.g, 1), root_degree_bound(&self.g, 2));
        let b_count = q.checked_pow(b_bound as u32 + 1).unwrap_or(u64::MAX);
        let candidates = b_count.saturating_mul(divisors.len() as u64).saturating_mul(q - 1);
        if candidates > SEARCH_LIMIT {
            return Err(SplitError::NotCertified(format!(
                "{} candidate quadratic factors of {}",
                candidates, self.g
            )));
        }
        let units: Vec<FqElem> = self.field.elements().skip(1).collect();
        for d in divisors.iter().filter(|d| d.deg() <= c_bound) {
            for &u in &units {
                let c = d.scale(u);
                for idx in 0..b_count {
                    let b = poly_from_index(&self.field, idx);
                    let h = BiPoly::new(self.field.clone(), vec![c.clone(), b, FqPoly::one(&self.field)]);
                    if divides_monic(&h, &self.g) {
                        return Ok(Some(h));
                    }
                }
            }
        }
        Ok(None)
    }
}

impl fmt::Display for FunctionFieldExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}(T)[x]/({})", self.field.order(), self.g)
    }
}

/// Every product of `k` roots of `g` has `T`-degree at most this, since
/// each root has degree at most `max deg(a_i) / (n - i)`.
fn root_degree_bound(g: &BiPoly, k: usize) -> usize {
    let n = g.deg();
    (0..n)
        .filter(|&i| !g.coeff(i).is_zero())
        .map(|i| k * g.coeff(i).deg() / (n - i))
        .max()
        .unwrap_or(0)
}

/// All monic divisors of a nonzero polynomial.
fn monic_divisors(f: &FqPoly, seed: u64) -> Result<Vec<FqPoly>, SplitError> {
    let fac = factor(f, seed)?;
    let mut out = vec![FqPoly::one(f.field())];
    for (p, e) in &fac.factors {
        let mut next = Vec::with_capacity(out.len() * (e + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = &acc * p;
                next.push(acc.clone());
            }
        }
        out = next;
    }
    Ok(out)
}

/// The polynomial whose coefficient digits in base `q` are `idx`.
fn poly_from_index(field: &FqField, mut idx: u64) -> FqPoly {
    let q = field.order();
    let mut c = Vec::new();
    while idx > 0 {
        c.push(field.elem(idx % q).expect("digit below q"));
        idx /= q;
    }
    FqPoly::new(field.clone(), c)
}

/// Whether the monic `h` divides `g` in `F_q[T][x]`.
fn divides_monic(h: &BiPoly, g: &BiPoly) -> bool {
    let dh = h.deg();
    let mut r: Vec<FqPoly> = g.coeffs().to_vec();
    while r.len() > dh {
        let lead = r.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - dh;
        for (i, c) in h.coeffs()[..dh].iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&lead * c);
        }
    }
    r.iter().all(FqPoly::is_zero)
}

/// `disc_x(g) = (-1)^{n(n-1)/2} Res_x(g, g')` for monic `g`.
pub fn polynomial_discriminant(g: &BiPoly) -> Result<FqPoly, SplitError> {
    let field = g.field();
    let n = g.deg();
    if n <= 1 {
        return Ok(FqPoly::one(field));
    }
    let dg = g.derivative();
    if dg.is_zero() {
        return Err(SplitError::InseparablePolynomial(g.to_string()));
    }
    let res = resultant(g, &dg);
    if res.is_zero() {
        return Err(SplitError::InseparablePolynomial(g.to_string()));
    }
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -&res } else { res })
}

/// Determinant of the Sylvester matrix by fraction-free elimination.
pub(crate) fn resultant(f: &BiPoly, h: &BiPoly) -> FqPoly {
    let field = f.field();
    let (n, m) = (f.deg(), h.deg());
    let size = n + m;
    let zero = FqPoly::zero(field);
    let mut mat = vec![vec![zero.clone(); size]; size];
    for i in 0..m {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..n {
        for (j, c) in h.coeffs().iter().rev().enumerate() {
            mat[m + i][i + j] = c.clone();
        }
    }
    let mut negate = false;
    let mut prev = FqPoly::one(field);
    for k in 0..size.saturating_sub(1) {
        if mat[k][k].is_zero() {
            match (k + 1..size).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    negate = !negate;
                }
                None => return zero,
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.exact_div(&prev);
            }
            mat[i][k] = zero.clone();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{parse_bipoly, parse_poly};

    fn bi(q: u64, s: &str) -> BiPoly {
        parse_bipoly(&FqField::of_order(q).unwrap(), s).unwrap()
    }

    #[test]
    fn quadratic_discriminants() {
        let f3 = FqField::prime(3).unwrap();
        assert_eq!(polynomial_discriminant(&bi(3, "x^2 - T")).unwrap(), parse_poly(&f3, "4*T").unwrap());
        let f5 = FqField::prime(5).unwrap();
        assert_eq!(
            polynomial_discriminant(&bi(5, "x^2 - (T^2 - 1)")).unwrap(),
            parse_poly(&f5, "4*T^2 - 4").unwrap()
        );
        assert!(polynomial_discriminant(&bi(3, "x - T")).unwrap().is_one());
    }

    #[test]
    fn inseparable() {
        assert!(matches!(
            FunctionFieldExt::new(bi(3, "x^3 - T")),
            Err(SplitError::InseparablePolynomial(_))
        ));
        assert!(matches!(
            FunctionFieldExt::new(bi(2, "x^2 + T")),
            Err(SplitError::InseparablePolynomial(_))
        ));
    }

    #[test]
    fn certification() {
        assert!(FunctionFieldExt::new(bi(3, "x^2 - T")).is_ok());
        assert!(FunctionFieldExt::new(bi(7, "x^3 - T")).is_ok());
        assert!(FunctionFieldExt::new(bi(5, "x^4 - T")).is_ok());
        assert!(matches!(FunctionFieldExt::new(bi(5, "x^2 - T^2")), Err(SplitError::Reducible(_))));
        assert!(matches!(FunctionFieldExt::new(bi(3, "x^2 + x")), Err(SplitError::Reducible(_))));
        assert!(matches!(
            FunctionFieldExt::new(bi(3, "2*x^2 + T")),
            Err(SplitError::InvalidPolynomial(_))
        ));
    }

    #[test]
    fn quadratic_factor_search() {
        // (x^2 - T)(x^2 + T): no root in F_5(T)
        assert!(matches!(FunctionFieldExt::new(bi(5, "x^4 - T^2")), Err(SplitError::Reducible(_))));
        let g = bi(5, "x^2 - T").mul(&bi(5, "x^2 - T - 1"));
        assert!(matches!(FunctionFieldExt::new(g), Err(SplitError::Reducible(_))));
        // minimal polynomial of sqrt(T) + sqrt(T+1); its group is V4, so
        // every specialization has a factor of degree at most two
        assert!(FunctionFieldExt::new(bi(5, "x^4 - (4*T + 2)*x^2 + 1")).is_ok());
    }
}
