//! End-to-end acceptance: one line per criterion, every comparison exact.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};

use common::{concat, corpus, greedy_multiset, rep, Oracle, PathAlgebra, Vector};
use zlkb_core::extriang::extriang_suite;
use zlkb_core::stability::Condition;
use zlkb_core::suites::{run_suite, SuiteConfig};
use zlkb_core::zigzag::{Path, Zigzag, ZigzagElement};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn suites(name: &str, ns: &[usize], tweak: impl Fn(&mut SuiteConfig)) -> Outcome {
    let mut total = 0;
    for &n in ns {
        let mut cfg = SuiteConfig::new(n);
        tweak(&mut cfg);
        let r = run_suite(name, &cfg).map_err(|e| format!("n={n}: {e}"))?;
        if let Some(f) = r.failures().next() {
            return Err(format!("n={n} {}: {}", f.name, f.detail));
        }
        if r.checks.is_empty() {
            return Err(format!("n={n}: no checks"));
        }
        total += r.checks.len();
    }
    Ok(format!("{total} checks at n={ns:?}"))
}

fn zigzag_structure() -> Outcome {
    let mut checked = 0;
    for n in 2..=5 {
        let pa = PathAlgebra::new(n, 4);
        let z = Zigzag::new(n).map_err(|e| e.to_string())?;
        for i in 1..=n {
            for j in 1..=n {
                for d in 0..=4 {
                    let expect = pa.dim(i, j, d);
                    let pattern = match (i.abs_diff(j), d) {
                        (0, 0) | (0, 2) | (1, 1) => 1,
                        _ => 0,
                    };
                    if z.hom_basis(i, j, d as i32).len() != expect || expect != pattern {
                        return Err(format!("n={n} e{i}Ae{j} degree {d}"));
                    }
                    checked += 1;
                }
            }
        }
        let basis = z.basis();
        for a in &basis {
            for b in &basis {
                if a.target() == b.source() {
                    let mut diff: Vector = BTreeMap::from([(concat(&rep(a, n), &rep(b, n)), 1)]);
                    if let Some(c) = a.mul(b) {
                        *diff.entry(rep(&c, n)).or_default() -= 1;
                    }
                    if !pa.in_ideal(&diff) {
                        return Err(format!("n={n} product {a}*{b}"));
                    }
                }
                for c in &basis {
                    let el = |p: &Path| ZigzagElement::path(n, *p);
                    let l = el(a).mul(&el(b)).mul(&el(c));
                    let r = el(a).mul(&el(b).mul(&el(c)));
                    if l != r {
                        return Err(format!("n={n} associativity {a},{b},{c}"));
                    }
                }
            }
        }
    }
    Ok(format!("{checked} graded dimensions at n<=5"))
}

fn extriangulated() -> Outcome {
    let cond = Condition::tau0(2).map_err(|e| e.to_string())?;
    let rep = extriang_suite(&cond, 100, 7).map_err(|e| e.to_string())?;
    if rep.triangles < 100 {
        return Err(format!("only {} triangles sampled", rep.triangles));
    }
    if !rep.passed() {
        return Err(rep.failures.join("; "));
    }
    suites("extriang", &[2], |c| c.samples = 100)?;
    Ok(format!(
        "{} triangles, {} pushout and {} octahedral checks ({} split)",
        rep.triangles, rep.et1_checked, rep.et4_checked, rep.et4_split
    ))
}

fn k0_and_psi() -> Outcome {
    let a = suites("k0", &[2, 3], |c| c.samples = 20)?;
    let b = suites("psi", &[2, 3], |c| c.samples = 100)?;
    Ok(format!("k0 {a}; psi {b}"))
}

fn greedy_hn() -> Outcome {
    let cond = Condition::tau0(2).map_err(|e| e.to_string())?;
    let pool = corpus(&cond);
    let mut oracle = Oracle { cond: &cond, memo: BTreeMap::new() };
    for x in &pool {
        let g = greedy_multiset(&cond, x);
        let all = oracle.filtrations(x, None, 2 * x.num_summands());
        if all != BTreeSet::from([g]) {
            return Err(format!("object {x}"));
        }
    }
    Ok(format!("{} objects with at most 6 summands", pool.len()))
}

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        ("zigzag structure", Box::new(zigzag_structure)),
        ("categorical braid relations", Box::new(|| suites("braid-relations", &[2, 3], |_| {}))),
        ("action on reference stables", Box::new(|| suites("action-table", &[3, 4], |_| {}))),
        ("garside action matrix", Box::new(|| suites("homgamma", &[2, 3, 4], |_| {}))),
        ("LKB layer", Box::new(|| suites("gammalkb", &[2, 3, 4], |_| {}))),
        ("reference matrix conjugation", Box::new(|| suites("mgamma", &[2, 3, 4], |_| {}))),
        ("garside condition", Box::new(|| suites("condgamma", &[2, 3, 4], |_| {}))),
        ("tau_k identification matrices", Box::new(|| suites("alphalemma", &[2, 3, 4], |_| {}))),
        (
            "identification recovers LKB",
            Box::new(|| {
                suites("identification", &[2, 3], |c| {
                    c.random = 50;
                    c.seed = 7;
                })
            }),
        ),
        ("monomial representation", Box::new(|| suites("perm", &[2, 3, 4], |_| {}))),
        ("extriangulated closure", Box::new(extriangulated)),
        ("free K0 and psi additivity", Box::new(k0_and_psi)),
        ("greedy HN against exhaustive search", Box::new(greedy_hn)),
    ];
    println!();
    let mut failed = Vec::new();
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", idx + 1),
            Err(detail) => {
                println!("FAIL {:>2} {name}: {detail}", idx + 1);
                failed.push(idx + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
