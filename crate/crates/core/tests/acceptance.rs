//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to
//! see the lines; the test fails if any blocking criterion fails.

use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use smo::ffpoly::*;
use smo::goss::{teichmuller_lift_const, PadicElem, TableEntry};
use smo::harness::{cmd_compare, quadratic_shadow, sweep_directory};
use smo::permgrp::*;
use smo::splitting::{read_field_file, splitting_table};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

struct Ledger {
    failures: Vec<usize>,
}

impl Ledger {
    fn record(&mut self, n: usize, blocking: bool, ok: bool, detail: String) {
        let status = if ok { "PASS" } else { "FAIL" };
        let note = if blocking { "" } else { " (non-blocking)" };
        println!("{status} criterion {n}{note}: {detail}");
        if blocking && !ok {
            self.failures.push(n);
        }
    }
}

fn fibres_and_pipeline(ledger: &mut Ledger) {
    let (lines, total) = sweep_directory(&root().join("fixtures/groups"), 48).unwrap();
    for l in &lines {
        println!("    {l}");
    }
    ledger.record(
        1,
        true,
        total.formula_mismatches.is_empty() && total.cases > 0,
        format!(
            "fibres = formula over {} groups, {} (G_E, D, I, c) cases, {} mismatches",
            total.groups,
            total.cases,
            total.formula_mismatches.len()
        ),
    );
    ledger.record(
        2,
        true,
        total.pipeline_mismatches.is_empty() && total.ramified_cases > 0,
        format!(
            "reconstruction = fibres over {} cases ({} with nontrivial inertia), {} mismatches",
            total.cases,
            total.ramified_cases,
            total.pipeline_mismatches.len()
        ),
    );
}

fn gassmann_witness(ledger: &mut Ledger) {
    let file = GroupFile::read(&root().join("fixtures/groups/gl32.grp")).unwrap();
    let (a, b) = (file.subgroup("point").unwrap(), file.subgroup("line").unwrap());
    let equivalent = gassmann_equivalent(a, b).unwrap();
    let conjugate = conjugating_element(a, b).unwrap().is_some();
    let same_tables = unramified_types(a) == unramified_types(b);
    ledger.record(
        3,
        true,
        equivalent && !conjugate && same_tables && file.group.order() == 168,
        format!("GL(3,2) point/line stabilisers: gassmann={equivalent} conjugate={conjugate} tables equal={same_tables}"),
    );
}

fn smo_contrapositive(ledger: &mut Ledger) {
    let f = root().join("fixtures/fields");
    let out = cmd_compare(&f.join("f3_sqrt_t.fld"), &f.join("f3_sqrt_t1.fld"), 2, &[], &[]).unwrap();
    let witness = out.report.lines().find(|l| l.starts_with("verdict")).unwrap_or("").to_string();
    let field = FqField::prime(3).unwrap();
    let deg_ok = witness
        .split("p=")
        .nth(1)
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|p| parse_poly(&field, p).ok())
        .is_some_and(|p| p.deg() <= 2);
    ledger.record(4, true, out.code == 1 && deg_ok, format!("x^2-T vs x^2-(T+1) over F_3, d=2: {witness}"));
}

fn mobius(n: u64) -> i64 {
    let (mut n, mut r, mut p) = (n, 1, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 {
        -r
    } else {
        r
    }
}

fn factorization_soundness(ledger: &mut Ledger) {
    let mut failures = 0;
    for q in [2u64, 3, 4, 5] {
        let field = FqField::of_order(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + q);
        for _ in 0..500 {
            let deg = rng.gen_range(0..=10);
            let mut c: Vec<FqElem> = (0..deg).map(|_| field.elem(rng.gen_range(0..q)).unwrap()).collect();
            c.push(field.elem(rng.gen_range(1..q)).unwrap());
            let f = FqPoly::new(field.clone(), c);
            let fac = factor(&f, rng.gen()).unwrap();
            if fac.expand(&field) != f || !fac.factors.iter().all(|(g, _)| g.is_irreducible()) {
                failures += 1;
            }
        }
        let irreducibles = irreducibles_up_to(&field, 6).unwrap();
        for m in 1..=6u64 {
            let s: i64 = (1..=m).filter(|d| m % d == 0).map(|d| mobius(d) * (q as i64).pow((m / d) as u32)).sum();
            let count = irreducibles.iter().filter(|p| p.deg() as u64 == m).count() as i64;
            if count != s / m as i64 {
                failures += 1;
            }
        }
    }
    ledger.record(5, true, failures == 0, format!("2000 random factorizations and 24 necklace counts, {failures} failures"));
}

fn fundamental_identity(ledger: &mut Ledger) {
    let dir = root().join("fixtures/fields");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    let (mut primes, mut unknown, mut bad) = (0, 0, Vec::new());
    for path in paths.iter().filter(|p| p.extension().is_some_and(|x| x == "fld")) {
        let k = read_field_file(path).unwrap();
        for (p, entry) in splitting_table(&k, 4).unwrap().entries() {
            match entry {
                TableEntry::Known { above: Some(above), .. } => {
                    primes += 1;
                    if above.iter().map(|d| d.e * d.f).sum::<usize>() != k.degree() {
                        bad.push(format!("{}:{p}", name(path)));
                    }
                }
                _ => unknown += 1,
            }
        }
    }
    ledger.record(
        6,
        true,
        bad.is_empty() && primes > 0,
        format!("sum e*f = n at {primes} primes over {} fields up to degree 4 ({unknown} index divisors skipped), violations {bad:?}", paths.len()),
    );
}

fn name(p: &Path) -> String {
    p.file_name().unwrap().to_string_lossy().into_owned()
}

fn teichmuller_numerics(ledger: &mut Ledger) {
    let mut failures = 0;
    let mut checks = 0;
    for q in [2u64, 3, 4, 5, 7, 9] {
        let field = FqField::of_order(q).unwrap();
        for k in 1..=6u32 {
            let lifts: Vec<(FqElem, PadicElem)> = field
                .elements()
                .skip(1)
                .map(|a| (a, teichmuller_lift_const(&field, a, k).unwrap()))
                .collect();
            for (a, w) in &lifts {
                checks += 2;
                failures += usize::from(w.pow(q - 1) != w.one_like());
                failures += usize::from(w.residue(&field) != *a);
                for (b, v) in &lifts {
                    checks += 1;
                    let ab = field.mul(*a, *b);
                    let prod = &lifts.iter().find(|(c, _)| *c == ab).unwrap().1;
                    failures += usize::from(w.mul(v) != *prod);
                }
            }
        }
    }
    let f5 = FqField::prime(5).unwrap();
    let seven = teichmuller_lift_const(&f5, f5.from_int(2), 2).unwrap();
    let ok = failures == 0 && seven.coeffs() == [7];
    ledger.record(7, true, ok, format!("{checks} Teichmüller identities, {failures} failures; omega(2) mod 25 = {}", seven.coeffs()[0]));
}

fn burnside(ledger: &mut Ledger) {
    let names = ["s3.grp", "s4.grp", "d4.grp", "q8.grp", "a4.grp", "gl23.grp", "gl32.grp"];
    let groups: Vec<(PermGroup, Vec<SubgroupHandle>)> = names
        .iter()
        .map(|n| {
            let g = GroupFile::read(&root().join("fixtures/groups").join(n)).unwrap().group;
            let s = g.all_subgroups();
            (g, s)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = 0;
    for _ in 0..1000 {
        let (g, subs) = &groups[rng.gen_range(0..groups.len())];
        let k = &subs[rng.gen_range(0..subs.len())];
        let g_e = &subs[rng.gen_range(0..subs.len())];
        let formula = double_coset_count_from_census(g, k, &ClassIntersectionCensus::of_subgroup(g_e)).unwrap();
        failures += usize::from(formula as usize != double_cosets(k, g_e).unwrap().len());
    }
    ledger.record(8, true, failures == 0, format!("1000 random |K\\G/G_E| counts, {failures} mismatches"));
}

fn chebotarev_shadow(ledger: &mut Ledger) {
    let k = read_field_file(&root().join("fixtures/fields/f3_sqrt_t.fld")).unwrap();
    let s = quadratic_shadow(&k, 6).unwrap();
    ledger.record(
        9,
        false,
        s.within(),
        format!(
            "x^2-T over F_3, d=6: split={} inert={} |freq-1/2|={:.4} threshold={:.4}",
            s.split, s.inert, s.deviation, s.threshold
        ),
    );
}

#[test]
fn acceptance() {
    let mut ledger = Ledger { failures: Vec::new() };
    fibres_and_pipeline(&mut ledger);
    gassmann_witness(&mut ledger);
    smo_contrapositive(&mut ledger);
    factorization_soundness(&mut ledger);
    fundamental_identity(&mut ledger);
    teichmuller_numerics(&mut ledger);
    burnside(&mut ledger);
    chebotarev_shadow(&mut ledger);
    assert!(ledger.failures.is_empty(), "failed criteria {:?}", ledger.failures);
}
