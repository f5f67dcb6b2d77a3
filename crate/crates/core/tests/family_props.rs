use prdf_core::family::{
    apply_o1, check_corollary, enumerate_family, enumerate_family_levels, random_family_tree, recognize,
    replay_certificate, PeelCertificate, Recognition,
};
use prdf_core::graph::{canonical_form, make_path, random_tree};
use prdf_core::solver::w_set;
use prdf_core::stability::{is_stable, pendant_stars};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn family_sizes_are_stable_counts() {
    // stable free trees per order, from the definitional sweep
    let sizes: Vec<usize> = enumerate_family_levels(15).unwrap().iter().map(|f| f.len()).collect();
    assert_eq!(sizes[..2], [1, 1]);
    for level in enumerate_family_levels(12).unwrap() {
        for (form, member) in level.iter() {
            assert_eq!(form.order(), level.order());
            assert!(is_stable(&member.tree));
            assert_eq!(replay_certificate(&member.certificate).unwrap(), member.tree);
        }
    }
}

#[test]
fn generator_preserves_stability() {
    for level in enumerate_family_levels(9).unwrap() {
        for (_, member) in level.iter() {
            for &u in w_set(&member.tree).vertices() {
                assert!(is_stable(&apply_o1(&member.tree, u).unwrap()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..20 {
        let (t, _) = random_family_tree(rng.gen_range(4..12), &mut rng).unwrap();
        let w = w_set(&t);
        let u = w.vertices()[rng.gen_range(0..w.len())];
        assert!(is_stable(&apply_o1(&t, u).unwrap()));
    }
}

#[test]
fn recognizer_accepts_generated_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..50 {
        let steps = rng.gen_range(0..20);
        let (t, _) = random_family_tree(steps, &mut rng).unwrap();
        let Recognition::Accepted { certificate, relabeling } = recognize(&t) else {
            panic!("generated tree rejected: {:?}", t.edges());
        };
        assert_eq!(certificate.steps().len(), steps);
        assert_eq!(replay_certificate(&certificate).unwrap(), t.relabel(&relabeling).unwrap());
        assert!(check_corollary(&t));
    }
}

#[test]
fn recognizer_rejects_random_non_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = 3 * rng.gen_range(2..8);
        let t = random_tree(n, &mut rng).unwrap();
        assert_eq!(recognize(&t).accepted(), is_stable(&t));
    }
}

#[test]
fn certificate_text_round_trip() {
    let (t, cert) = random_family_tree(6, &mut ChaCha8Rng::seed_from_u64(8)).unwrap();
    let parsed = PeelCertificate::parse(&cert.to_string()).unwrap();
    assert_eq!(replay_certificate(&parsed).unwrap(), t);
}

#[test]
fn p9_via_two_steps() {
    let p6 = apply_o1(&make_path(3).unwrap(), 2).unwrap();
    let p9 = apply_o1(&p6, 5).unwrap();
    assert_eq!(canonical_form(&p9), canonical_form(&make_path(9).unwrap()));
    assert!(check_corollary(&p9));
    assert!(enumerate_family(9).unwrap().contains(&canonical_form(&p9)));
}

#[test]
fn pendant_star_never_occurs_in_small_stable_trees() {
    for level in enumerate_family_levels(15).unwrap() {
        for (_, member) in level.iter() {
            assert!(pendant_stars(&member.tree).is_empty());
        }
    }
}
