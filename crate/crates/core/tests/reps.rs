use zlkb_core::braid::BraidWord;
use zlkb_core::reps::*;
use zlkb_core::stability::{tau_k_word, StableBasis};

#[test]
fn gamma_closed_form_matches_product() {
    for n in 2..=4 {
        let w = BraidWord::new(n, (1..=n).rev().map(|i| (i, 1)).collect()).unwrap();
        let p = lkb_word(&w).unwrap();
        let c = gamma_lkb_closed_form(n);
        assert_eq!(p.first_difference(&c), None, "n={n}");
    }
}

#[test]
fn homgamma_and_tau_k_matrices() {
    for n in 2..=3 {
        let (p, _) = ptau_matrix(&BraidWord::garside(n).inverse(), &StableBasis::tau0(n).unwrap()).unwrap();
        assert_eq!(describe_difference(n, &p, &homgamma_display(n)), None, "n={n}");
        let m0 = to_qt(&m_tau0(n).0);
        for k in 1..=n {
            let (p, _) = ptau_matrix(&tau_k_word(n, k), &StableBasis::tau0(n).unwrap()).unwrap();
            let lhs = p.mul(&m0).unwrap();
            let rho = lkb_word_qt(&tau_k_word(n, k).tilde().inverse().inverse()).unwrap();
            let _ = rho;
            let w = BraidWord::new(n, (1..=k).rev().map(|i| (i, 1)).collect()).unwrap();
            let rhs = to_qt(&m_tau_k(n, k).unwrap()).mul(&lkb_word_qt(&w).unwrap()).unwrap();
            assert_eq!(describe_difference(n, &lhs, &rhs), None, "n={n} k={k}");
        }
    }
}

#[test]
fn random_identification() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for n in 2..=3 {
        let t = std::time::Instant::now();
        for _ in 0..20 {
            let w = BraidWord::random(n, 8, &mut rng);
            let b = BraidWord::random(n, 4, &mut rng);
            assert_eq!(verify_identification(&w, &b).unwrap(), None, "w={w} b={b}");
            assert_eq!(verify_path_independence(&w, 1).unwrap(), None, "w={w}");
        }
        eprintln!("n={n} {:?}", t.elapsed());
    }
}

#[test]
fn perm_matches_categorical_steps() {
    for n in 2..=4 {
        for m in 1..=n {
            let (p, _) =
                ptau_matrix(&BraidWord::generator(n, m, -1).unwrap(), &StableBasis::tau_k(n, m - 1).unwrap()).unwrap();
            assert_eq!(describe_difference(n, &p, &perm_generator(n, m, -1).unwrap()), None, "n={n} m={m}");
        }
    }
}
