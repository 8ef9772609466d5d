mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use multiwedge::order::{is_multi_upper_bound, msup, MsupOutcome, TranslatedWedge};
use multiwedge::sampling::sample_conic_combination;
use multiwedge::Error;

/// The witness and its shifts along the lineality and along the common
/// wedge C are upper bounds.
#[test]
fn msup_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    let mut sets = 0;
    for _ in 0..400 {
        let dim = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=3);
        let family: Vec<TranslatedWedge> = (0..k)
            .map(|_| TranslatedWedge::new(random_vector(&mut rng, dim, -3, 3), random_wedge(&mut rng, dim)).unwrap())
            .collect();
        let common = multiwedge::wedge::intersect(&family.iter().map(|t| t.wedge.clone()).collect::<Vec<_>>()).unwrap();
        match msup(&family) {
            Ok(MsupOutcome::Set(s)) => {
                sets += 1;
                assert!(is_multi_upper_bound(&s.witness, &family));
                for l in &s.lineality {
                    let u = &s.witness + l;
                    assert!(is_multi_upper_bound(&u, &family));
                    assert!(s.contains(&u));
                }
                // Moving up along C keeps an upper bound.
                let up = sample_conic_combination(&mut rng, dim, common.generators(), 2);
                let u = &s.witness + &up;
                assert!(is_multi_upper_bound(&u, &family));
            }
            Ok(MsupOutcome::Empty) => {}
            Err(Error::NotMultiBoundedAbove) => {}
            Err(e) => panic!("{e}"),
        }
    }
    assert!(sets > 100);
}

#[test]
fn single_translated_wedge_is_its_own_msup() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=3);
        let t = TranslatedWedge::new(random_vector(&mut rng, dim, -3, 3), random_wedge(&mut rng, dim)).unwrap();
        let out = msup(std::slice::from_ref(&t)).unwrap();
        let s = out.set().expect("nonempty");
        assert!(s.contains(&t.apex));
    }
}
