mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use multiwedge::wedge::{intersect, wedge_equal, wedge_sum};
use multiwedge::sampling::sample_conic_combination;
use multiwedge::Wedge;

#[test]
fn representations_describe_the_same_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..300 {
        let dim = rng.gen_range(1..=4);
        let w = random_wedge(&mut rng, dim);
        let rebuilt = Wedge::from_both(dim, w.generators().to_vec(), w.halfspaces().to_vec()).unwrap();
        assert!(wedge_equal(&w, &rebuilt));
        for g in w.generators() {
            assert!(w.contains(g));
            for a in w.halfspaces() {
                assert!(a.dot(g) >= q(0));
            }
        }
    }
}

#[test]
fn serde_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=4);
        let w = random_wedge(&mut rng, dim).canonical();
        let text = serde_json::to_string(&w).unwrap();
        let back: Wedge = serde_json::from_str(&text).unwrap();
        assert_eq!(back.generators(), w.generators());
        assert!(wedge_equal(&back, &w));
    }
}

#[test]
fn sum_and_intersection_are_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let dim = rng.gen_range(1..=3);
        let a = random_wedge(&mut rng, dim);
        let b = random_wedge(&mut rng, dim);
        let lhs = wedge_sum(&[a.clone(), b.clone()]).unwrap().dual();
        let rhs = intersect(&[a.dual(), b.dual()]).unwrap();
        assert!(wedge_equal(&lhs, &rhs));
    }
}

#[test]
fn sum_contains_sums_of_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let dim = rng.gen_range(1..=4);
        let a = random_wedge(&mut rng, dim);
        let b = random_wedge(&mut rng, dim);
        let s = wedge_sum(&[a.clone(), b.clone()]).unwrap();
        let x = sample_conic_combination(&mut rng, dim, a.generators(), 3);
        let y = sample_conic_combination(&mut rng, dim, b.generators(), 3);
        assert!(s.contains(&(&x + &y)));
    }
}

#[test]
fn lineality_is_the_largest_subspace() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let dim = rng.gen_range(1..=4);
        let w = random_wedge(&mut rng, dim);
        let lin = w.lineality();
        for l in &lin {
            assert!(w.contains(l) && w.contains(&-l));
        }
        assert_eq!(w.is_cone(), lin.is_empty());
        assert_eq!(w.is_generating(), w.dual().is_cone());
    }
}
