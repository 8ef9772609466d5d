//! Seeded samplers shared by the randomized searches.

use rand::Rng;

use crate::exact::{frac, QVector, Rational};

/// An integer in [−bound, bound] plus a fraction p/q with q ≤ 4 and 0 ≤ p < q.
pub fn sample_coordinate<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let whole = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=4);
    let p = rng.gen_range(0..q);
    frac(whole * q + p, q)
}

pub fn sample_apex<R: Rng + ?Sized>(rng: &mut R, dim: usize, bound: i64) -> QVector {
    QVector::new((0..dim).map(|_| sample_coordinate(rng, bound)).collect())
}

/// A nonnegative rational p/q with q ≤ 4 and p/q ≤ max.
pub fn sample_weight<R: Rng + ?Sized>(rng: &mut R, max: i64) -> Rational {
    let q = rng.gen_range(1..=4);
    frac(rng.gen_range(0..=max * q), q)
}

/// A random nonnegative combination of `generators`.
pub fn sample_conic_combination<R: Rng + ?Sized>(rng: &mut R, dim: usize, generators: &[QVector], max: i64) -> QVector {
    generators
        .iter()
        .fold(QVector::zeros(dim), |acc, g| acc.add_scaled(&sample_weight(rng, max), g))
}

/// A random instance over the coordinate wedges {f : f(s) ≥ 0} of
/// ℚ^`size`: returns (s_j, xs, ys) with y_j(s_j) ≥ 0, every xᵢ in the sum of
/// the wedges and Σxᵢ = Σy_j.
pub fn sample_coordinate_instance<R: Rng + ?Sized>(
    rng: &mut R,
    size: usize,
    m: usize,
    n: usize,
    bound: i64,
) -> (Vec<usize>, Vec<QVector>, Vec<QVector>) {
    let indices: Vec<usize> = (0..n).map(|_| rng.gen_range(0..size)).collect();
    let ys: Vec<QVector> = indices
        .iter()
        .map(|&s| {
            let mut y = sample_apex(rng, size, bound);
            y[s] = sample_weight(rng, bound);
            y
        })
        .collect();
    let total = QVector::sum(size, &ys);
    let mut xs: Vec<QVector> = (0..m.saturating_sub(1)).map(|_| sample_apex(rng, size, bound)).collect();
    if indices.iter().all(|&s| s == indices[0]) {
        // The sum of the wedges is the single wedge W_s: share total(s) out
        // in nonnegative parts.
        let s = indices[0];
        let mut left = total[s].clone();
        for x in xs.iter_mut() {
            let share = &left * frac(rng.gen_range(0..=4), 4);
            left -= &share;
            x[s] = share;
        }
    }
    let rest = xs.iter().fold(total, |acc, x| &acc - x);
    xs.push(rest);
    (indices, xs, ys)
}
