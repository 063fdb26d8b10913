use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use smo::ffpoly::*;
use smo::goss::TableEntry;
use smo::permgrp::{Perm, PermGroup};
use smo::splitting::*;

fn fixture(name: &str) -> FunctionFieldExt {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/fields").join(name);
    read_field_file(&path).unwrap()
}

fn all_fixtures() -> Vec<(String, FunctionFieldExt)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/fields");
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".fld"))
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), fixture(&n))).collect()
}

#[test]
fn fundamental_identity_on_fixtures() {
    for (name, k) in all_fixtures() {
        let table = splitting_table(&k, 3).unwrap();
        for (p, entry) in table.entries() {
            let TableEntry::Known { above: Some(above), .. } = entry else { continue };
            let total: usize = above.iter().map(|d| d.e * d.f).sum();
            assert_eq!(total, k.degree(), "{name} at {p}");
            if !k.discriminant().rem(p).is_zero() {
                assert!(above.iter().all(|d| d.e == 1), "{name} at {p}");
            }
        }
    }
}

#[test]
fn ramified_primes_divide_the_discriminant() {
    for (name, k) in all_fixtures() {
        for (p, entry) in splitting_table(&k, 2).unwrap().entries() {
            if let TableEntry::Known { above: Some(above), .. } = entry {
                if above.iter().any(|d| d.e > 1) {
                    assert!(k.discriminant().rem(p).is_zero(), "{name} at {p}");
                }
            }
        }
    }
}

fn bi(field: &FqField, coeffs: Vec<FqPoly>) -> BiPoly {
    BiPoly::new(field.clone(), coeffs)
}

fn random_poly(field: &FqField, deg: usize, rng: &mut ChaCha8Rng) -> FqPoly {
    let q = field.order();
    FqPoly::new(field.clone(), (0..=deg).map(|_| field.elem(rng.gen_range(0..q)).unwrap()).collect())
}

#[test]
fn discriminants_match_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for q in [5u64, 7, 9] {
        let f = FqField::of_order(q).unwrap();
        let c = |n: i64| FqPoly::constant(&f, f.from_int(n));
        for _ in 0..30 {
            // x^2 + b x + c: b^2 - 4c
            let (b, c0) = (random_poly(&f, 3, &mut rng), random_poly(&f, 3, &mut rng));
            let g = bi(&f, vec![c0.clone(), b.clone(), FqPoly::one(&f)]);
            if let Ok(d) = polynomial_discriminant(&g) {
                assert_eq!(d, &(&b * &b) - &(&c(4) * &c0));
            }
            // x^3 + a x + b: -4a^3 - 27b^2
            let (a, b) = (random_poly(&f, 2, &mut rng), random_poly(&f, 2, &mut rng));
            let g = bi(&f, vec![b.clone(), a.clone(), FqPoly::zero(&f), FqPoly::one(&f)]);
            let expect = &(&c(-4) * &a.pow(3)) - &(&c(27) * &b.pow(2));
            match polynomial_discriminant(&g) {
                Ok(d) => assert_eq!(d, expect),
                Err(_) => assert!(expect.is_zero()),
            }
        }
    }
}

/// Order of the `m`-th power residue symbol `a^{(N(p)-1)/m}` mod `p`.
fn power_residue_order(k: &FunctionFieldExt, p: &FqPoly, a: &FqPoly, m: u64) -> u64 {
    let residue = ResidueField::new(p, 5).unwrap();
    let field = residue.field();
    let x = residue.reduce(a);
    let n = residue.order();
    let chi = field.pow(x, (n - 1) / m);
    assert_eq!(field.pow(chi, m), field.one(), "{k}");
    field.multiplicative_order(chi)
}

#[test]
fn kummer_types_match_the_cyclic_group_model() {
    // x^m - a(T) with m | q - 1: Frobenius acts on the roots through the
    // m-th power residue symbol of a, an element of the cyclic Galois group
    let cases = [(7u64, 3usize, "T"), (7, 3, "T^2 + 1"), (5, 4, "T"), (5, 2, "T^3 + T"), (9, 2, "T^2 + u"), (13, 3, "T^2 - 2")];
    for (q, m, a_text) in cases {
        let field = FqField::of_order(q).unwrap();
        let a = parse_poly(&field, a_text).unwrap();
        let mut coeffs = vec![-&a];
        coeffs.resize(m, FqPoly::zero(&field));
        coeffs.push(FqPoly::one(&field));
        let k = FunctionFieldExt::new(bi(&field, coeffs)).unwrap();
        let cyclic: Vec<Vec<usize>> = vec![(1..=m).collect()];
        let group = PermGroup::from_generators(m, &[Perm::from_cycles(m, &cyclic).unwrap()]).unwrap();
        let gen = group.index_of(&Perm::from_cycles(m, &cyclic).unwrap()).unwrap();
        for p in irreducibles_up_to(&field, 2).unwrap() {
            if k.discriminant().rem(&p).is_zero() {
                continue;
            }
            let o = power_residue_order(&k, &p, &a, m as u64) as usize;
            let frob = group.pow(gen, m / o);
            let predicted = group.cycle_type_on_cosets(frob, &group.trivial());
            let (ty, _) = splitting_type_of_prime(&k, &PrimeOfBase::new(p.clone()).unwrap()).unwrap();
            assert_eq!(ty.entries(), predicted.as_slice(), "q={q} m={m} a={a_text} p={p}");
        }
    }
}

#[test]
fn quadratic_split_inert_balance() {
    let k = fixture("f5_sqrt_t2m1.fld");
    let d = 4;
    let table = splitting_table(&k, d).unwrap();
    let (mut split, mut inert) = (0i64, 0i64);
    for (p, entry) in table.entries() {
        if k.discriminant().rem(p).is_zero() {
            continue;
        }
        match entry.splitting_type().unwrap().entries() {
            [1, 1] => split += 1,
            [2] => inert += 1,
            other => panic!("{other:?}"),
        }
    }
    assert!(((split - inert).abs() as f64) <= 3.0 * 5f64.powf(d as f64 / 2.0));
}

#[test]
fn trivial_extension_splits_completely() {
    let k = fixture("f5_trivial.fld");
    assert!(k.discriminant().is_one());
    for entry in splitting_table(&k, 3).unwrap().entries().values() {
        assert_eq!(entry.splitting_type().unwrap().entries(), &[1]);
    }
}

#[test]
fn constructor_errors() {
    let f = FqField::prime(3).unwrap();
    let g = parse_bipoly(&f, "x^3 - T").unwrap();
    assert!(matches!(FunctionFieldExt::new(g), Err(SplitError::InseparablePolynomial(_))));
    let g = parse_bipoly(&f, "x^2 - T^2 - 2*T - 1").unwrap();
    assert!(matches!(FunctionFieldExt::new(g), Err(SplitError::Reducible(_))));
    assert!(matches!(parse_field_file("q = 3\ng = x^2 - T\nfoo = 1"), Err(SplitError::Parse(_))));
}

#[test]
fn table_is_deterministic_and_ordered() {
    let k = fixture("f9_quadratic.fld");
    let a = splitting_table(&k, 2).unwrap();
    assert_eq!(a.to_string(), splitting_table(&k, 2).unwrap().to_string());
    let keys: Vec<&FqPoly> = a.entries().keys().collect();
    assert_eq!(keys.len(), 9 + 36);
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    let f3 = fixture("f3_sqrt_t.fld");
    let lines = splitting_table(&f3, 1).unwrap().to_string();
    assert_eq!(lines, "p=T type=[1] e=[2]\np=T+1 type=[2] e=[1]\np=T+2 type=[1,1] e=[1,1]\n");
}
