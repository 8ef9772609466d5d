//! Test oracles. Everything linear-algebraic here is written against plain
//! `Vec<Vec<BigRational>>` so it shares no code with the library.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use multiwedge::lp::{LinearProgram, Relation};
use multiwedge::order::{msup, MsupOutcome, TranslatedWedge};
use multiwedge::riesz::LinearOperator;
use multiwedge::{QVector, Rational, Wedge};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn v(x: &[i64]) -> QVector {
    QVector::from_i64(x)
}

/// All permutations of 0..n with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..n {
            let mut next = p.clone();
            next.insert(pos, n - 1);
            // Inserting the largest element at `pos` adds (n − 1 − pos) inversions.
            let sign = if (n - 1 - pos) % 2 == 0 { s } else { -s };
            out.push((next, sign));
        }
    }
    out
}

/// Leibniz formula.
pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    permutations(n)
        .into_iter()
        .map(|(p, s)| {
            let prod = (0..n).fold(Q::one(), |acc, r| acc * &m[r][p[r]]);
            prod * q(s)
        })
        .fold(Q::zero(), |a, b| a + b)
}

fn minor(m: &[Vec<Q>], skip_r: usize, skip_c: usize) -> Vec<Vec<Q>> {
    m.iter()
        .enumerate()
        .filter(|(r, _)| *r != skip_r)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != skip_c)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Adjugate over determinant.
pub fn cramer_inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let d = det(m);
    if d.is_zero() {
        return None;
    }
    Some(
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let cof = det(&minor(m, c, r));
                        let signed = if (r + c) % 2 == 0 { cof } else { -cof };
                        signed / &d
                    })
                    .collect()
            })
            .collect(),
    )
}

/// The unique solution of a (possibly rectangular) system, or `None` when it
/// is inconsistent or underdetermined.
pub fn solve_unique(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let p = (r..rows).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..=cols {
                    let t = &m[r][k] * &f;
                    m[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols].clone()).collect())
}

/// Index subsets of 0..n of size k, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn entries(v: &QVector) -> Vec<Q> {
    v.iter().cloned().collect()
}

/// Brute-force LP: the best objective over all basic feasible points, i.e.
/// feasible points where some n linearly independent constraint rows
/// (including sign bounds) are tight. Only meaningful when the feasible
/// region is a nonempty polytope. `None` means there are no feasible basic
/// points.
pub fn lp_by_enumeration(lp: &LinearProgram) -> Option<Q> {
    let n = lp.num_vars();
    let mut rows: Vec<(Vec<Q>, Q)> = lp
        .constraints()
        .iter()
        .map(|c| (entries(&c.row), c.rhs.clone()))
        .collect();
    for j in (0..n).filter(|&j| lp.is_nonnegative(j)) {
        rows.push((entries(&QVector::unit(n, j)), Q::zero()));
    }
    let eq: Vec<usize> = lp
        .constraints()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.relation == Relation::Eq)
        .map(|(i, _)| i)
        .collect();
    let objective = entries(lp.objective());
    let maximize = lp.sense() == multiwedge::lp::Sense::Maximize;
    let mut best: Option<Q> = None;
    for subset in subsets(rows.len(), n) {
        let mut chosen: Vec<usize> = subset.clone();
        // Equalities are always tight; adding them keeps the system square
        // only if they are already part of the subset.
        if eq.iter().any(|e| !chosen.contains(e)) {
            continue;
        }
        chosen.sort();
        let a: Vec<Vec<Q>> = chosen.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<Q> = chosen.iter().map(|&i| rows[i].1.clone()).collect();
        let Some(x) = solve_unique(&a, &b) else { continue };
        let point = QVector::new(x.clone());
        if !lp.is_feasible(&point) {
            continue;
        }
        let val = objective.iter().zip(&x).fold(Q::zero(), |acc, (c, xi)| acc + c * xi);
        best = Some(match best {
            None => val,
            Some(b) if (maximize && val > b) || (!maximize && val < b) => val,
            Some(b) => b,
        });
    }
    best
}

/// Values Σ Tᵢ yᵢ at every point yᵢ = Σ_g λ_g g with λ ≥ 0 supported on
/// linearly independent generators and Σ yᵢ = x. These include all vertices
/// of the set of feasible (yᵢ), which must be bounded.
pub fn rk_vertex_values(ts: &[LinearOperator], ws: &[Wedge], x: &QVector) -> Vec<QVector> {
    let n = x.dim();
    let cols: Vec<(usize, QVector)> = ws
        .iter()
        .enumerate()
        .flat_map(|(i, w)| w.generators().iter().map(move |g| (i, g.clone())))
        .collect();
    let rhs = entries(x);
    let mut values = Vec::new();
    if x.is_zero() {
        values.push(QVector::zeros(ts[0].codomain_dim()));
        return values;
    }
    for k in 1..=n.min(cols.len()) {
        for subset in subsets(cols.len(), k) {
            let a: Vec<Vec<Q>> = (0..n)
                .map(|r| subset.iter().map(|&c| cols[c].1[r].clone()).collect())
                .collect();
            let Some(lambda) = solve_unique(&a, &rhs) else { continue };
            if lambda.iter().any(|l| l.is_negative()) {
                continue;
            }
            let m = ts[0].codomain_dim();
            let value = subset.iter().zip(&lambda).fold(QVector::zeros(m), |acc, (&c, l)| {
                let (i, g) = &cols[c];
                acc.add_scaled(l, &ts[*i].apply(g))
            });
            values.push(value);
        }
    }
    values.sort();
    values.dedup();
    values
}

/// msup over V of the finite value set, via the multi-order module.
pub fn rk_oracle(ts: &[LinearOperator], ws: &[Wedge], v: &Wedge, x: &QVector) -> MsupOutcome {
    let values = rk_vertex_values(ts, ws, x);
    assert!(!values.is_empty(), "x must lie in the sum of the wedges");
    let family: Vec<TranslatedWedge> = values
        .into_iter()
        .map(|q| TranslatedWedge::new(q, v.clone()).unwrap())
        .collect();
    msup(&family).expect("value set is bounded")
}

pub fn small<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    q(rng.gen_range(lo..=hi))
}

pub fn random_vector<R: Rng>(rng: &mut R, dim: usize, lo: i64, hi: i64) -> QVector {
    QVector::new((0..dim).map(|_| small(rng, lo, hi)).collect())
}

pub fn random_nonzero<R: Rng>(rng: &mut R, dim: usize, lo: i64, hi: i64) -> QVector {
    loop {
        let v = random_vector(rng, dim, lo, hi);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A wedge from 1..=dim+1 random generators or halfspaces.
pub fn random_wedge<R: Rng>(rng: &mut R, dim: usize) -> Wedge {
    let k = rng.gen_range(1..=dim + 1);
    let vs: Vec<QVector> = (0..k).map(|_| random_nonzero(rng, dim, -2, 2)).collect();
    if rng.gen_bool(0.5) {
        Wedge::from_generators(dim, vs).unwrap()
    } else {
        Wedge::from_halfspaces(dim, vs).unwrap()
    }
}

/// A pointed cone inside the nonnegative orthant.
pub fn random_nonneg_cone<R: Rng>(rng: &mut R, dim: usize, max_gens: usize) -> Wedge {
    let k = rng.gen_range(1..=max_gens);
    let gens: Vec<QVector> = (0..k).map(|_| random_nonzero(rng, dim, 0, 3)).collect();
    Wedge::from_generators(dim, gens).unwrap().canonical()
}

/// A solid simplicial cone: `dim` independent generators.
pub fn random_simplicial<R: Rng>(rng: &mut R, dim: usize, lo: i64, hi: i64) -> Wedge {
    loop {
        let gens: Vec<QVector> = (0..dim).map(|_| random_nonzero(rng, dim, lo, hi)).collect();
        let m: Vec<Vec<Q>> = gens.iter().map(entries).collect();
        if !det(&m).is_zero() {
            return Wedge::from_generators(dim, gens).unwrap();
        }
    }
}

pub fn random_operator<R: Rng>(rng: &mut R, rows: usize, cols: usize, lo: i64, hi: i64) -> LinearOperator {
    let e: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(lo..=hi)).collect();
    LinearOperator::from_i64(rows, cols, &e)
}

pub fn to_rows(m: &multiwedge::QMatrix) -> Vec<Vec<Q>> {
    (0..m.rows()).map(|r| entries(&m.row(r))).collect()
}
