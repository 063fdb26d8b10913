//! Factorization over `F_q`: squarefree decomposition, distinct-degree
//! splitting, then seeded Cantor-Zassenhaus equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{FqElem, FqField};
use super::poly::FqPoly;
use super::FfError;

/// `f = unit * prod factor^mult`, factors monic irreducible and sorted in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FqElem,
    pub factors: Vec<(FqPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self, field: &FqField) -> FqPoly {
        self.factors
            .iter()
            .fold(FqPoly::constant(field, self.unit), |acc, (g, e)| &acc * &g.pow(*e as u64))
    }

    /// `(degree, multiplicity)` of each factor, in factor order.
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        self.factors.iter().map(|(g, e)| (g.deg(), *e)).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }
}

pub fn factor(f: &FqPoly, seed: u64) -> Result<Factorization, FfError> {
    if f.is_zero() {
        return Err(FfError::ZeroPolynomial);
    }
    let unit = f.leading();
    let monic = f.make_monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (block, d) in distinct_degree(&part) {
            for g in equal_degree(&block, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with their multiplicities.
pub fn squarefree_decomposition(f: &FqPoly) -> Vec<(FqPoly, usize)> {
    let field = f.field().clone();
    let p = field.characteristic() as usize;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if !c.is_one() {
        let root = pth_root(&c);
        for (g, j) in squarefree_decomposition(&root) {
            out.push((g, j * p));
        }
    }
    out
}

/// For `f = g(T^p)` returns the `g^(1/p)` with `f = g^(1/p)^p`.
fn pth_root(f: &FqPoly) -> FqPoly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let c = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&a| field.pth_root(a))
        .collect();
    FqPoly::new(field.clone(), c)
}

/// Splits a squarefree monic polynomial into products of irreducibles of
/// equal degree; returns `(product, degree)` pairs.
pub fn distinct_degree(f: &FqPoly) -> Vec<(FqPoly, usize)> {
    let field = f.field();
    let t = FqPoly::var(field);
    let mut rest = f.clone();
    let mut h = t.rem(&rest);
    let mut out = Vec::new();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.powmod(field.order(), &rest);
        let g = (&h - &t).gcd(&rest);
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct monic irreducibles of
/// degree `d`.
pub fn equal_degree(f: &FqPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FqPoly> {
    let n = f.deg();
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field();
    let q = field.order();
    loop {
        let a = FqPoly::new(
            field.clone(),
            (0..n).map(|_| FqElem(rng.gen_range(0..q))).collect(),
        );
        if a.deg() == 0 {
            continue;
        }
        let b = splitting_element(&a, d, f);
        let g = b.gcd(f);
        if g.deg() > 0 && g.deg() < n {
            let h = f.exact_div(&g);
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// For odd `q`: `a^((q^d-1)/2) - 1`; for even `q`: the trace of `a` down
/// to `F_2`. Both have a nontrivial gcd with `f` with probability about 1/2.
fn splitting_element(a: &FqPoly, d: usize, f: &FqPoly) -> FqPoly {
    let field = f.field();
    let q = field.order();
    if field.characteristic() == 2 {
        let steps = field.degree() * d;
        let mut term = a.rem(f);
        let mut acc = term.clone();
        for _ in 1..steps {
            term = (&term * &term).rem(f);
            acc = &acc + &term;
        }
        acc
    } else {
        // (q^d - 1)/2 = (1 + q + ... + q^(d-1)) * (q - 1)/2
        let mut term = a.rem(f);
        let mut norm = term.clone();
        for _ in 1..d {
            term = term.powmod(q, f);
            norm = (&norm * &term).rem(f);
        }
        let b = norm.powmod((q - 1) / 2, f);
        &b - &FqPoly::one(field)
    }
}

/// Every monic irreducible of degree `<= d`, in canonical order.
pub fn irreducibles_up_to(field: &FqField, d: usize) -> Result<Vec<FqPoly>, FfError> {
    if d == 0 {
        return Err(FfError::InvalidDegree(0));
    }
    super::field::checked_pow(field.order(), d as u32)?;
    let mut out = Vec::new();
    for m in 1..=d {
        out.extend(FqPoly::monic_of_degree(field, m).filter(|g| g.is_irreducible()));
    }
    Ok(out)
}
