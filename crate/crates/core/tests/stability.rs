use std::cmp::Ordering;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zlkb_core::braid::{apply_word, BraidWord};
use zlkb_core::complex::ProjComplex;
use zlkb_core::stability::{classical_from_pieces, roots, tau_k_complex, Condition, StableBasis};

#[test]
fn transported_tau_k_matches_explicit_shapes() {
    for n in 2..=4 {
        for k in 1..=n {
            let b = StableBasis::tau_k(n, k).unwrap();
            let kk = k % n;
            assert_eq!(b.tau_class(), Some(kk), "n={n} k={k}");
            for r in roots(n) {
                assert_eq!(b.member(r).unwrap().object, tau_k_complex(n, kk, r.0, r.1).unwrap());
            }
        }
    }
}

#[test]
fn hn_of_stables_is_trivial() {
    for n in 2..=4 {
        let c = Condition::tau0(n).unwrap();
        for s in c.basis.members() {
            for (k, l) in [(0, 0), (1, -2), (-2, 3)] {
                let h = c.hn(&s.object.shift(k, l)).unwrap();
                assert_eq!(h.pieces.len(), 1);
                assert_eq!((h.pieces[0].label, h.pieces[0].k, h.pieces[0].l), (s.label, k, l));
            }
        }
    }
}

#[test]
fn hn_pieces_descend_and_recover_class() {
    for n in 2..=3 {
        let c = Condition::tau0(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..15 {
            let w = BraidWord::random(n, 4, &mut rng);
            for i in 1..=n {
                let x = apply_word(&w, &ProjComplex::proj(n, i, 0, 0).unwrap()).unwrap();
                let h = c.hn(&x).unwrap();
                for p in h.pieces.windows(2) {
                    assert_ne!(c.charges.cmp_phase(&p[0].phase, &p[1].phase), Ordering::Less, "{w:?} P{i}");
                }
                assert_eq!(classical_from_pieces(&c.basis, &h.pieces), x.classical_class(), "{w:?} P{i}");
                let hs = c.hn(&x.shift(1, 2)).unwrap();
                let shifted: Vec<_> = h.pieces.iter().map(|p| (p.label, p.k + 1, p.l + 2)).collect();
                let got: Vec<_> = hs.pieces.iter().map(|p| (p.label, p.k, p.l)).collect();
                assert_eq!(got, shifted);
            }
        }
    }
}
