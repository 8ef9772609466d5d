use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::linalg::{complement_basis_ordered, independent_subset, in_span, span_basis};
use crate::exact::{ComplementOrder, QMatrix, QVector, Rational};
use crate::wedge::{intersect, wedge_sum, Wedge};

/// A linear map ℚⁿ → ℚᵐ stored as an m × n matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOperator {
    matrix: QMatrix,
}

impl LinearOperator {
    pub fn new(matrix: QMatrix) -> Self {
        LinearOperator { matrix }
    }

    pub fn zero(codomain_dim: usize, domain_dim: usize) -> Self {
        Self::new(QMatrix::zeros(codomain_dim, domain_dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(QMatrix::identity(dim))
    }

    /// A functional given by its coefficient vector.
    pub fn functional(phi: &QVector) -> Self {
        Self::new(QMatrix::from_rows(phi.dim(), std::slice::from_ref(phi)).expect("one row"))
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(QMatrix::from_i64(rows, cols, entries))
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &QVector) -> QVector {
        self.matrix.mul_vec(x)
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        Self::new(self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &LinearOperator) -> LinearOperator {
        Self::new(self.matrix.sub(&other.matrix))
    }

    pub fn neg(&self) -> LinearOperator {
        Self::new(self.matrix.neg())
    }

    pub fn scale(&self, k: &Rational) -> LinearOperator {
        Self::new(self.matrix.scale(k))
    }

    pub fn compose(&self, inner: &LinearOperator) -> LinearOperator {
        Self::new(self.matrix.mul(&inner.matrix))
    }

    /// Row-major entries as a vector of length m·n.
    pub fn to_vector(&self) -> QVector {
        QVector::new(self.matrix.entries().to_vec())
    }

    pub fn from_vector(rows: usize, cols: usize, v: &QVector) -> Self {
        Self::new(QMatrix::new(rows, cols, v.entries().to_vec()).expect("length rows·cols"))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

#[derive(Serialize, Deserialize)]
struct OperatorJson {
    rows: usize,
    cols: usize,
    entries: Vec<QVector>,
}

impl Serialize for LinearOperator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OperatorJson {
            rows: self.matrix.rows(),
            cols: self.matrix.cols(),
            entries: self.matrix.row_vectors(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearOperator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = OperatorJson::deserialize(d)?;
        if raw.entries.len() != raw.rows {
            return Err(D::Error::custom(format!(
                "operator has {} rows, expected {}",
                raw.entries.len(),
                raw.rows
            )));
        }
        QMatrix::from_rows(raw.cols, &raw.entries)
            .map(LinearOperator::new)
            .map_err(D::Error::custom)
    }
}

/// T(W) ⊆ V, checked on the generators of W.
pub fn op_is_positive(t: &LinearOperator, w: &Wedge, v: &Wedge) -> bool {
    assert_eq!(t.domain_dim(), w.dim(), "operator domain vs wedge");
    assert_eq!(t.codomain_dim(), v.dim(), "operator codomain vs wedge");
    w.generators().iter().all(|g| v.contains(&t.apply(g)))
}

/// Basis of {T : T(ΣWᵢ) ⊆ D(∩Vⱼ)}, the lineality space of the operator wedge
/// ∩ᵢⱼ L_{Wᵢ,Vⱼ}.
pub fn op_wedge_lineality(ws: &[Wedge], vs: &[Wedge]) -> Result<Vec<LinearOperator>> {
    let sum = wedge_sum(ws)?;
    let cap = intersect(vs)?;
    let (n, m) = (sum.dim(), cap.dim());
    // b·(T g) = Σ_{r,c} b_r g_c T_rc = 0 for every generator g and normal b.
    let mut eqs = Vec::new();
    for g in sum.generators() {
        for b in cap.halfspaces() {
            let mut row = QVector::zeros(m * n);
            for r in 0..m {
                for c in 0..n {
                    row[r * n + c] = &b[r] * &g[c];
                }
            }
            if !row.is_zero() {
                eqs.push(row);
            }
        }
    }
    let null = QMatrix::from_rows(m * n, &eqs)?.nullspace();
    Ok(span_basis(m * n, &null)
        .iter()
        .map(|v| LinearOperator::from_vector(m, n, v))
        .collect())
}

/// The operator wedge ∩ᵢⱼ L_{Wᵢ,Vⱼ} is a cone iff ΣWᵢ is generating and ∩Vⱼ
/// is a cone.
pub fn op_wedge_is_cone(ws: &[Wedge], vs: &[Wedge]) -> Result<bool> {
    let sum = wedge_sum(ws)?;
    let cap = intersect(vs)?;
    if sum.dim() == 0 || cap.dim() == 0 {
        return Err(Error::ZeroSpace);
    }
    Ok(sum.is_generating() && cap.is_cone())
}

/// Extends a map given on points of `domain` to a linear operator.
///
/// A maximal independent subset of the points is selected in input order;
/// the operator agrees with the values there, is zero on the greedy
/// complement of span(W − W), and is then checked against every remaining
/// point.
pub fn extend_additive(domain: &Wedge, values: &[(QVector, QVector)], codomain_dim: usize) -> Result<LinearOperator> {
    extend_additive_ordered(domain, values, codomain_dim, ComplementOrder::Forward)
}

pub fn extend_additive_ordered(
    domain: &Wedge,
    values: &[(QVector, QVector)],
    codomain_dim: usize,
    order: ComplementOrder,
) -> Result<LinearOperator> {
    let n = domain.dim();
    for (p, val) in values {
        if p.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
        }
        if val.dim() != codomain_dim {
            return Err(Error::DimensionMismatch {
                expected: codomain_dim,
                found: val.dim(),
            });
        }
        if !domain.contains(p) {
            return Err(Error::InvalidInstance(format!("point {p} is outside the domain wedge")));
        }
    }
    let points: Vec<QVector> = values.iter().map(|(p, _)| p.clone()).collect();
    if !domain.generators().iter().all(|g| in_span(n, &points, g)) {
        return Err(Error::InsufficientValues);
    }
    let idx = independent_subset(n, &points);
    let basis: Vec<QVector> = idx.iter().map(|&i| points[i].clone()).collect();
    let comp = complement_basis_ordered(&basis, n, order);

    let mut cols = basis;
    cols.extend(comp.iter().cloned());
    let mut images: Vec<QVector> = idx.iter().map(|&i| values[i].1.clone()).collect();
    images.extend(comp.iter().map(|_| QVector::zeros(codomain_dim)));

    let q = QMatrix::from_columns(n, &cols)?;
    let y = QMatrix::from_columns(codomain_dim, &images)?;
    let q_inv = q.inverse().expect("basis plus complement is invertible");
    let op = LinearOperator::new(y.mul(&q_inv));
    if values.iter().any(|(p, val)| &op.apply(p) != val) {
        return Err(Error::InconsistentValues);
    }
    Ok(op)
}
