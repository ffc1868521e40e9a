use zlkb_core::extriang::*;
use zlkb_core::stability::Condition;

#[test]
fn suite_n2() {
    let c = Condition::tau0(2).unwrap();
    let t = std::time::Instant::now();
    let r = extriang_suite(&c, 100, 1).unwrap();
    eprintln!(
        "{:?} {:?}",
        t.elapsed(),
        (r.triangles, r.et1_checked, r.et4_checked, r.et4_split, r.preconditions_violated)
    );
    for f in &r.failures {
        eprintln!("{f}");
    }
    let mut s = Sampler::new(&c, 2, 4);
    let tris = s.thin_triangles(60).unwrap();
    let p = psi_check(&c, &tris).unwrap();
    eprintln!("psi agg {} refined {}", p.aggregated_failures.len(), p.refined_failures.len());
    for f in &p.refined_failures {
        eprintln!("{f}");
    }
    assert!(r.passed());
}
