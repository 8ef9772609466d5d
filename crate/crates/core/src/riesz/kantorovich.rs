//! Multi-suprema of operator families by the Riesz–Kantorovich formula.
//!
//! For operators Tᵢ : E → F that are (Wᵢ, V)-positive relative to one
//! another, the candidate multi-supremum is
//!
//!   R(x) = P_U msup_V { Σ Tᵢ(yᵢ) : yᵢ ∈ Wᵢ, Σ yᵢ = x }
//!
//! on ΣWᵢ, extended by zero on a complement of its span. R is additive on
//! ΣWᵢ when E has the Riesz decomposition property for the Wᵢ; that is
//! checked on the generators and their pairwise sums rather than assumed.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg::complement_basis;
use crate::exact::{int, solve_linear, LinearSolution, QMatrix, QVector};
use crate::lp::{feasible_point, lp_solve, LinearProgram, LpResult, Relation};
use crate::order::MultiSupSet;
use crate::riesz::operator::{extend_additive, op_is_positive, op_wedge_lineality, LinearOperator};
use crate::wedge::{wedge_sum, Wedge};

/// P_{D(V)} and P_U = I − P_{D(V)} for the greedy complement U of D(V).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionPair {
    pub p_d: LinearOperator,
    pub p_u: LinearOperator,
}

pub fn projections(v: &Wedge) -> ProjectionPair {
    let n = v.dim();
    let d = v.lineality();
    let u = complement_basis(&d, n);
    let mut cols = d.clone();
    cols.extend(u.iter().cloned());
    let mut images = d.clone();
    images.extend(u.iter().map(|_| QVector::zeros(n)));
    let q = QMatrix::from_columns(n, &cols).expect("square");
    let y = QMatrix::from_columns(n, &images).expect("square");
    let p_d = LinearOperator::new(y.mul(&q.inverse().expect("basis plus complement is invertible")));
    let p_u = LinearOperator::identity(n).sub(&p_d);
    ProjectionPair { p_d, p_u }
}

/// The representative R and a basis of the operators L with
/// L(ΣWᵢ) ⊆ D(V); the multi-supremum set is R + span(lineality_ops).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorMSupResult {
    pub representative: LinearOperator,
    pub lineality_ops: Vec<LinearOperator>,
}

impl OperatorMSupResult {
    pub fn is_proper(&self) -> bool {
        self.lineality_ops.is_empty()
    }
}

/// Checks shapes and returns (domain dim, codomain dim).
fn family_dims(ts: &[LinearOperator], ws: &[Wedge], v: &Wedge) -> Result<(usize, usize)> {
    let first = ts.first().ok_or(Error::EmptyFamily)?;
    if ts.len() != ws.len() {
        return Err(Error::InvalidInstance(format!(
            "{} operators but {} wedges",
            ts.len(),
            ws.len()
        )));
    }
    let (n, m) = (first.domain_dim(), first.codomain_dim());
    if v.dim() != m {
        return Err(Error::DimensionMismatch { expected: m, found: v.dim() });
    }
    for t in ts {
        if t.domain_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: t.domain_dim() });
        }
        if t.codomain_dim() != m {
            return Err(Error::DimensionMismatch { expected: m, found: t.codomain_dim() });
        }
    }
    for w in ws {
        if w.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: w.dim() });
        }
    }
    Ok((n, m))
}

/// Some S with S − Tᵢ (Wᵢ, V)-positive for every i, if one exists.
pub fn op_multi_upper_bound(ts: &[LinearOperator], ws: &[Wedge], v: &Wedge) -> Result<Option<LinearOperator>> {
    let (n, m) = family_dims(ts, ws, v)?;
    // b·(S g) ≥ b·(Tᵢ g) for each generator g of Wᵢ and normal b of V.
    let mut lp = LinearProgram::new(m * n);
    for (t, w) in ts.iter().zip(ws) {
        for g in w.generators() {
            let tg = t.apply(g);
            for b in v.halfspaces() {
                let mut row = QVector::zeros(m * n);
                for r in 0..m {
                    for c in 0..n {
                        row[r * n + c] = &b[r] * &g[c];
                    }
                }
                lp.push(row, Relation::Ge, b.dot(&tg));
            }
        }
    }
    Ok(feasible_point(&lp).map(|s| LinearOperator::from_vector(m, n, &s)))
}

/// msup over V of { Σ Tᵢ(yᵢ) : yᵢ ∈ Wᵢ, Σ yᵢ = x }.
pub fn rk_value(ts: &[LinearOperator], ws: &[Wedge], v: &Wedge, x: &QVector) -> Result<MultiSupSet> {
    let (n, _) = family_dims(ts, ws, v)?;
    if x.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: x.dim() });
    }
    if op_multi_upper_bound(ts, ws, v)?.is_none() {
        return Err(Error::NotMultiBoundedAbove);
    }
    rk_value_bounded(ts, ws, v, x)
}

fn rk_value_bounded(ts: &[LinearOperator], ws: &[Wedge], v: &Wedge, x: &QVector) -> Result<MultiSupSet> {
    let n = x.dim();
    let m = v.dim();
    let k = ts.len();
    let normals = v.halfspaces();
    let lineality = v.lineality();
    if normals.is_empty() {
        return Ok(MultiSupSet {
            witness: QVector::zeros(m),
            lineality,
        });
    }

    // Variables y_1, …, y_k stacked.
    let mut split = LinearProgram::new(k * n);
    for (i, w) in ws.iter().enumerate() {
        for a in w.halfspaces() {
            let mut row = QVector::zeros(k * n);
            for c in 0..n {
                row[i * n + c] = a[c].clone();
            }
            split.push(row, Relation::Ge, Zero::zero());
        }
    }
    for c in 0..n {
        let mut row = QVector::zeros(k * n);
        for i in 0..k {
            row[i * n + c] = int(1);
        }
        split.push(row, Relation::Eq, x[c].clone());
    }

    let mut support = Vec::with_capacity(normals.len());
    for b in normals {
        // b·Tᵢ yᵢ = (Tᵢᵀ b)·yᵢ
        let parts: Vec<QVector> = ts.iter().map(|t| t.matrix().transpose().mul_vec(b)).collect();
        let objective = QVector::concat(&parts);
        match lp_solve(&split.clone().maximize(objective)) {
            LpResult::Optimal { value, .. } => support.push(value),
            LpResult::Unbounded { .. } => return Err(Error::NotMultiBoundedAbove),
            LpResult::Infeasible => return Err(Error::NotInSumWedge),
        }
    }

    // Upper bounds of the value set: P = {u : b·u ≥ s_b}. A multi-supremum is
    // a point of P attaining min_P b·u for every b at once.
    let mut upper = LinearProgram::new(m);
    for (b, s) in normals.iter().zip(&support) {
        upper.push(b.clone(), Relation::Ge, s.clone());
    }
    let mut minima = Vec::with_capacity(normals.len());
    for b in normals {
        match lp_solve(&upper.clone().minimize(b.clone())) {
            LpResult::Optimal { value, .. } => minima.push(value),
            other => unreachable!("P is nonempty with recession cone V: {other:?}"),
        }
    }
    let bmat = QMatrix::from_rows(m, normals)?;
    let z = match solve_linear(&bmat, &QVector::new(minima))? {
        LinearSolution::Solution { particular, .. } => particular,
        LinearSolution::Inconsistent => return Err(Error::NoMultiSupremum),
    };
    if !upper.is_feasible(&z) {
        return Err(Error::NoMultiSupremum);
    }
    Ok(MultiSupSet { witness: z, lineality })
}

/// The multi-supremum of (Tᵢ, L_{Wᵢ,V}) with the free part fixed to zero
/// off span(ΣWᵢ).
pub fn op_msup(ts: &[LinearOperator], ws: &[Wedge], v: &Wedge) -> Result<OperatorMSupResult> {
    let (n, m) = family_dims(ts, ws, v)?;
    if op_multi_upper_bound(ts, ws, v)?.is_none() {
        return Err(Error::NotMultiBoundedAbove);
    }
    let p_u = projections(v).p_u;
    let value = |x: &QVector| -> Result<QVector> {
        Ok(p_u.apply(&rk_value_bounded(ts, ws, v, x)?.witness))
    };

    let sum = wedge_sum(ws)?.canonical();
    let gens = sum.generators();
    let mut values = Vec::with_capacity(gens.len());
    for g in gens {
        values.push((g.clone(), value(g)?));
    }
    let r = match extend_additive(&sum, &values, m) {
        Ok(r) => r,
        Err(Error::InconsistentValues) => return Err(Error::RdpViolated),
        Err(e) => return Err(e),
    };
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            let x = &gens[a] + &gens[b];
            if value(&x)? != r.apply(&x) {
                return Err(Error::RdpViolated);
            }
        }
    }
    if ts.iter().zip(ws).any(|(t, w)| !op_is_positive(&r.sub(t), w, v)) {
        return Err(Error::RdpViolated);
    }
    debug_assert_eq!(r.domain_dim(), n);
    Ok(OperatorMSupResult {
        representative: r,
        lineality_ops: op_wedge_lineality(ws, std::slice::from_ref(v))?,
    })
}

/// op_msup with values in ℚ ordered by ℚ⁺.
pub fn functional_msup(phis: &[QVector], ws: &[Wedge]) -> Result<OperatorMSupResult> {
    let ts: Vec<LinearOperator> = phis.iter().map(LinearOperator::functional).collect();
    op_msup(&ts, ws, &Wedge::orthant(1))
}

/// minf (Tᵢ) = −msup (−Tᵢ).
pub fn op_minf(ts: &[LinearOperator], ws: &[Wedge], v: &Wedge) -> Result<OperatorMSupResult> {
    let negated: Vec<LinearOperator> = ts.iter().map(LinearOperator::neg).collect();
    match op_msup(&negated, ws, v) {
        Ok(res) => Ok(OperatorMSupResult {
            representative: res.representative.neg(),
            lineality_ops: res.lineality_ops,
        }),
        Err(Error::NotMultiBoundedAbove) => Err(Error::NotMultiBoundedBelow),
        Err(e) => Err(e),
    }
}
