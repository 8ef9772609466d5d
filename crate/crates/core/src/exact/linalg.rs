//! Exact linear solving, spans and complements.

use num_traits::{One, Zero};

use super::matrix::QMatrix;
use super::rational::Rational;
use super::vector::QVector;
use crate::error::{Error, Result};

/// Reduced row echelon form of `m` together with its pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    m.rref()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    /// Every solution is `particular + span(nullspace_basis)`.
    Solution {
        particular: QVector,
        nullspace_basis: Vec<QVector>,
    },
    Inconsistent,
}

impl LinearSolution {
    pub fn particular(&self) -> Option<&QVector> {
        match self {
            LinearSolution::Solution { particular, .. } => Some(particular),
            LinearSolution::Inconsistent => None,
        }
    }
}

/// Solves `a·x = b`. The particular solution sets every free variable to 0.
pub fn solve_linear(a: &QMatrix, b: &QVector) -> Result<LinearSolution> {
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.dim(),
        });
    }
    let n = a.cols();
    let mut aug = QMatrix::zeros(a.rows(), n + 1);
    for r in 0..a.rows() {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, n)] = b[r].clone();
    }
    let (red, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(LinearSolution::Inconsistent);
    }
    let mut particular = QVector::zeros(n);
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = red[(i, n)].clone();
    }
    let mut nullspace_basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = QVector::zeros(n);
        v[free] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -red[(i, free)].clone();
        }
        nullspace_basis.push(v);
    }
    Ok(LinearSolution::Solution {
        particular,
        nullspace_basis,
    })
}

/// Rank of the span of `vectors` in ℚ^`dim`.
pub fn rank_of(dim: usize, vectors: &[QVector]) -> usize {
    QMatrix::from_rows(dim, vectors).map(|m| m.rank()).unwrap_or(0)
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in
/// the given order.
pub fn independent_subset(dim: usize, vectors: &[QVector]) -> Vec<usize> {
    let mut kept: Vec<QVector> = Vec::new();
    let mut idx = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        kept.push(v.clone());
        if rank_of(dim, &kept) == kept.len() {
            idx.push(i);
        } else {
            kept.pop();
        }
        if kept.len() == dim {
            break;
        }
    }
    idx
}

/// Canonical basis of span(`vectors`): the nonzero rows of the reduced row
/// echelon form, rescaled to coprime integers.
pub fn span_basis(dim: usize, vectors: &[QVector]) -> Vec<QVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = QMatrix::from_rows(dim, vectors).expect("span_basis: dimension");
    let (red, pivots) = m.rref();
    (0..pivots.len()).map(|r| red.row(r).primitive_unsigned()).collect()
}

/// True iff `v` lies in span(`basis`).
pub fn in_span(dim: usize, basis: &[QVector], v: &QVector) -> bool {
    if v.is_zero() {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let a = QMatrix::from_columns(dim, basis).expect("in_span: dimension");
    matches!(solve_linear(&a, v), Ok(LinearSolution::Solution { .. }))
}

/// True iff the two families span the same subspace.
pub fn same_span(dim: usize, a: &[QVector], b: &[QVector]) -> bool {
    span_basis(dim, a) == span_basis(dim, b)
}

/// Order in which standard basis vectors are offered when extending a basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ComplementOrder {
    /// e₁, e₂, …, eₙ
    #[default]
    Forward,
    /// eₙ, …, e₂, e₁
    Backward,
}

/// Extends `subspace_basis` greedily by standard basis vectors e₁, e₂, … and
/// returns the ones that were kept, so that together they form a basis of
/// ℚ^`dim`.
pub fn complement_basis(subspace_basis: &[QVector], dim: usize) -> Vec<QVector> {
    complement_basis_ordered(subspace_basis, dim, ComplementOrder::Forward)
}

pub fn complement_basis_ordered(subspace_basis: &[QVector], dim: usize, order: ComplementOrder) -> Vec<QVector> {
    let mut current: Vec<QVector> = span_basis(dim, subspace_basis);
    let mut rank = current.len();
    let mut kept = Vec::new();
    let ks: Box<dyn Iterator<Item = usize>> = match order {
        ComplementOrder::Forward => Box::new(0..dim),
        ComplementOrder::Backward => Box::new((0..dim).rev()),
    };
    for k in ks {
        if rank == dim {
            break;
        }
        let e = QVector::unit(dim, k);
        current.push(e.clone());
        if rank_of(dim, &current) > rank {
            rank += 1;
            kept.push(e);
        } else {
            current.pop();
        }
    }
    kept
}

/// Orthogonal projection of `v` onto the orthogonal complement of
/// span(`basis`), with `basis` linearly independent.
pub fn project_out(dim: usize, basis: &[QVector], v: &QVector) -> QVector {
    if basis.is_empty() {
        return v.clone();
    }
    let k = basis.len();
    let mut gram = QMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = basis[i].dot(&basis[j]);
        }
    }
    let rhs = QVector::new(basis.iter().map(|b| b.dot(v)).collect());
    let coeffs = match solve_linear(&gram, &rhs).expect("gram shape") {
        LinearSolution::Solution { particular, .. } => particular,
        LinearSolution::Inconsistent => unreachable!("gram matrix of an independent family is invertible"),
    };
    let mut out = v.clone();
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            out = out.add_scaled(&-c, b);
        }
    }
    debug_assert_eq!(out.dim(), dim);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn scalar_equation() {
        let a = QMatrix::from_i64(1, 1, &[2]);
        let s = solve_linear(&a, &QVector::from_i64(&[1])).unwrap();
        assert_eq!(
            s,
            LinearSolution::Solution {
                particular: QVector::new(vec![frac(1, 2)]),
                nullspace_basis: vec![]
            }
        );
    }

    #[test]
    fn underdetermined_equation() {
        let a = QMatrix::from_i64(1, 2, &[1, 1]);
        let LinearSolution::Solution {
            particular,
            nullspace_basis,
        } = solve_linear(&a, &QVector::from_i64(&[0])).unwrap()
        else {
            panic!("consistent system reported inconsistent");
        };
        assert!(particular.is_zero());
        assert_eq!(nullspace_basis.len(), 1);
        assert_eq!(nullspace_basis[0].primitive_unsigned(), QVector::from_i64(&[1, -1]));
    }

    #[test]
    fn inconsistent_equation() {
        let a = QMatrix::from_i64(2, 2, &[1, 0, 1, 0]);
        assert_eq!(
            solve_linear(&a, &QVector::from_i64(&[0, 1])).unwrap(),
            LinearSolution::Inconsistent
        );
    }

    #[test]
    fn shape_error() {
        let a = QMatrix::from_i64(2, 2, &[1, 0, 0, 1]);
        assert!(solve_linear(&a, &QVector::from_i64(&[1])).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            complement_basis(&[QVector::from_i64(&[1, 1])], 2),
            vec![QVector::from_i64(&[1, 0])]
        );
        assert_eq!(
            complement_basis(&[], 2),
            vec![QVector::from_i64(&[1, 0]), QVector::from_i64(&[0, 1])]
        );
        assert!(complement_basis(&[QVector::from_i64(&[1, 0]), QVector::from_i64(&[0, 1])], 2).is_empty());
        assert_eq!(
            complement_basis_ordered(&[QVector::from_i64(&[1, 1])], 2, ComplementOrder::Backward),
            vec![QVector::from_i64(&[0, 1])]
        );
    }

    #[test]
    fn projection_is_orthogonal() {
        let basis = [QVector::from_i64(&[1, -1])];
        let p = project_out(2, &basis, &QVector::from_i64(&[2, 0]));
        assert_eq!(p, QVector::from_i64(&[1, 1]));
    }
}
