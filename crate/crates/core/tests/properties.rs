use proptest::prelude::*;

use zlkb_core::braid::{apply_word, BraidWord};
use zlkb_core::complex::ProjComplex;
use zlkb_core::homotopy::{is_isomorphic, reduce};
use zlkb_core::reps::{lkb_word, perm_word};
use zlkb_core::ring::LaurentQT;
use zlkb_core::stability::Condition;

fn laurent() -> impl Strategy<Value = LaurentQT> {
    prop::collection::vec((-4i64..=4, -3i32..=3, -3i32..=3), 0..4).prop_map(|terms| {
        terms.into_iter().fold(LaurentQT::zero(), |acc, (c, a, b)| &acc + &LaurentQT::monomial(c, a, b))
    })
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..=n, prop::bool::ANY), 0..=max_len).prop_map(move |ls| {
        BraidWord::new(n, ls.into_iter().map(|(i, p)| (i, if p { 1 } else { -1 })).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(LaurentQT::parse(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn word_then_inverse_is_identity_on_objects(w in word(3, 4), i in 1usize..=3, k in -2i32..=2, l in -2i32..=2) {
        let x = ProjComplex::proj(3, i, k, l).unwrap();
        let y = apply_word(&w.inverse().then_after(&w), &x).unwrap();
        prop_assert!(is_isomorphic(&reduce(&y), &x));
    }

    #[test]
    fn matrix_representations_are_homomorphisms(a in word(3, 4), b in word(3, 4)) {
        let ab = a.then_after(&b);
        let lkb = lkb_word(&a).unwrap().mul(&lkb_word(&b).unwrap()).unwrap();
        prop_assert_eq!(lkb_word(&ab).unwrap(), lkb);
        let perm = perm_word(&a).unwrap().mul(&perm_word(&b).unwrap()).unwrap();
        prop_assert_eq!(perm_word(&ab).unwrap(), perm);
        prop_assert!(lkb_word(&a).unwrap().mul(&lkb_word(&a.inverse()).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn hn_is_shift_equivariant(w in word(2, 4), i in 1usize..=2, k in -2i32..=2, l in -2i32..=2) {
        let c = Condition::tau0(2).unwrap();
        let x = apply_word(&w, &ProjComplex::proj(2, i, 0, 0).unwrap()).unwrap();
        let h = c.hn(&x).unwrap();
        let hs = c.hn(&x.shift(k, l)).unwrap();
        let expect: Vec<_> = h.pieces.iter().map(|p| (p.label, p.k + k, p.l + l)).collect();
        let got: Vec<_> = hs.pieces.iter().map(|p| (p.label, p.k, p.l)).collect();
        prop_assert_eq!(got, expect);
    }
}
