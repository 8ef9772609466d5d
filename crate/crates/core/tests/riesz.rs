mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use multiwedge::riesz::{op_minf, op_msup, rdp_search, LinearOperator};
use multiwedge::{QVector, Wedge};

#[test]
fn classical_minf_is_entrywise_min() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for _ in 0..100 {
        let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let ts: Vec<LinearOperator> = (0..3).map(|_| random_operator(&mut rng, m, n, -4, 4)).collect();
        let ws = vec![Wedge::orthant(n); 3];
        let res = op_minf(&ts, &ws, &Wedge::orthant(m)).unwrap();
        let got = to_rows(res.representative.matrix());
        for r in 0..m {
            for c in 0..n {
                let min = ts.iter().map(|t| t.matrix()[(r, c)].clone()).min().unwrap();
                assert_eq!(got[r][c], min);
            }
        }
    }
}

#[test]
fn msup_dominates_each_operator() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let w = random_simplicial(&mut rng, n, 0, 3);
        let ts: Vec<LinearOperator> = (0..2).map(|_| random_operator(&mut rng, 1, n, -3, 3)).collect();
        let res = op_msup(&ts, &[w.clone(), w.clone()], &Wedge::orthant(1)).unwrap();
        for t in &ts {
            for g in w.generators() {
                assert!(res.representative.apply(g)[0] >= t.apply(g)[0]);
            }
        }
    }
}

#[test]
fn coordinate_wedges_admit_no_rdp_counterexample() {
    let ws: Vec<Wedge> = (0..4).map(|s| Wedge::halfspace(QVector::unit(4, s))).collect();
    assert!(!rdp_search(&ws, 3, 3, 0, 500).unwrap().found());
}
