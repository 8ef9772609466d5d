//! The (α, β)-Riesz decomposition property, one instance at a time.
//!
//! An instance is wedges W_j, vectors xᵢ ∈ ΣW_j and y_j ∈ W_j with
//! Σxᵢ = Σy_j; a decomposition is a matrix z_ij ∈ W_j whose rows sum to xᵢ
//! and whose columns sum to y_j.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{QVector, Rational};
use crate::lp::{feasible_point, lp_solve, LinearProgram, LpResult, Relation};
use crate::sampling::sample_conic_combination;
use crate::wedge::{wedge_sum, Wedge};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RdpInstance {
    pub wedges: Vec<Wedge>,
    pub xs: Vec<QVector>,
    pub ys: Vec<QVector>,
}

/// `z[i][j]` is the piece of xᵢ taken from W_j.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub z: Vec<Vec<QVector>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RdpOutcome {
    Decomposition(Decomposition),
    Infeasible,
}

impl RdpInstance {
    pub fn dim(&self) -> usize {
        self.wedges.first().map(Wedge::dim).unwrap_or(0)
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |m: &str| Err(Error::InvalidInstance(m.to_string()));
        if self.wedges.is_empty() || self.xs.is_empty() {
            return invalid("need at least one wedge and one x");
        }
        if self.ys.len() != self.wedges.len() {
            return invalid("one y per wedge is required");
        }
        let dim = self.dim();
        if self.wedges.iter().any(|w| w.dim() != dim) || self.xs.iter().chain(&self.ys).any(|v| v.dim() != dim) {
            return invalid("dimensions differ");
        }
        if QVector::sum(dim, &self.xs) != QVector::sum(dim, &self.ys) {
            return invalid("sum of xs differs from sum of ys");
        }
        if let Some(j) = (0..self.ys.len()).find(|&j| !self.wedges[j].contains(&self.ys[j])) {
            return Err(Error::InvalidInstance(format!("y[{j}] is not in its wedge")));
        }
        let sum = wedge_sum(&self.wedges)?;
        if let Some(i) = (0..self.xs.len()).find(|&i| !sum.contains(&self.xs[i])) {
            return Err(Error::InvalidInstance(format!("x[{i}] is not in the sum of the wedges")));
        }
        Ok(())
    }
}

impl Decomposition {
    /// Memberships, row sums and column sums, exactly.
    pub fn verify(&self, inst: &RdpInstance) -> bool {
        let dim = inst.dim();
        let (m, n) = (inst.xs.len(), inst.ys.len());
        if self.z.len() != m || self.z.iter().any(|row| row.len() != n) {
            return false;
        }
        let members = (0..m).all(|i| (0..n).all(|j| inst.wedges[j].contains(&self.z[i][j])));
        let rows = (0..m).all(|i| QVector::sum(dim, &self.z[i]) == inst.xs[i]);
        let cols = (0..n).all(|j| QVector::sum(dim, self.z.iter().map(|row| &row[j])) == inst.ys[j]);
        members && rows && cols
    }
}

/// Decides the instance by LP feasibility in the unknowns z_ij.
pub fn rdp_check(inst: &RdpInstance) -> Result<RdpOutcome> {
    inst.validate()?;
    let d = inst.dim();
    let (m, n) = (inst.xs.len(), inst.ys.len());
    let var = |i: usize, j: usize, k: usize| (i * n + j) * d + k;
    let nv = m * n * d;
    let mut lp = LinearProgram::new(nv);
    for i in 0..m {
        for j in 0..n {
            for a in inst.wedges[j].halfspaces() {
                let mut row = QVector::zeros(nv);
                for k in 0..d {
                    row[var(i, j, k)] = a[k].clone();
                }
                lp.push(row, Relation::Ge, Rational::zero());
            }
        }
    }
    for k in 0..d {
        for i in 0..m {
            let mut row = QVector::zeros(nv);
            for j in 0..n {
                row[var(i, j, k)] = Rational::from_integer(1.into());
            }
            lp.push(row, Relation::Eq, inst.xs[i][k].clone());
        }
        for j in 0..n {
            let mut row = QVector::zeros(nv);
            for i in 0..m {
                row[var(i, j, k)] = Rational::from_integer(1.into());
            }
            lp.push(row, Relation::Eq, inst.ys[j][k].clone());
        }
    }
    let Some(sol) = feasible_point(&lp) else {
        return Ok(RdpOutcome::Infeasible);
    };
    let z = (0..m)
        .map(|i| {
            (0..n)
                .map(|j| QVector::new((0..d).map(|k| sol[var(i, j, k)].clone()).collect()))
                .collect()
        })
        .collect();
    let dec = Decomposition { z };
    debug_assert!(dec.verify(inst));
    Ok(RdpOutcome::Decomposition(dec))
}

#[derive(Clone, Debug)]
pub enum RdpSearchOutcome {
    Counterexample {
        trial: usize,
        wedge_indices: Vec<usize>,
        instance: RdpInstance,
    },
    NoneFound,
}

impl RdpSearchOutcome {
    pub fn found(&self) -> bool {
        matches!(self, RdpSearchOutcome::Counterexample { .. })
    }
}

/// Samples instances with `m` xs over `n` wedges drawn (with repetition)
/// from `wedges` and returns the first one without a decomposition.
///
/// Each y_j is a random conic combination of the generators of W_j. Their
/// sum is written as a conic combination of the canonical generators of the
/// sum wedge (an LP with random positive costs picks which one), and every
/// coefficient is split at random across the m xs.
pub fn rdp_search(wedges: &[Wedge], m: usize, n: usize, seed: u64, budget: usize) -> Result<RdpSearchOutcome> {
    let dim = crate::wedge::common_dim(wedges)?;
    if m == 0 || n == 0 {
        return Err(Error::InvalidInstance("m and n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..budget {
        let wedge_indices: Vec<usize> = (0..n).map(|_| rng.gen_range(0..wedges.len())).collect();
        let chosen: Vec<Wedge> = wedge_indices.iter().map(|&j| wedges[j].clone()).collect();
        let ys: Vec<QVector> = chosen
            .iter()
            .map(|w| sample_conic_combination(&mut rng, dim, w.generators(), 3))
            .collect();
        let total = QVector::sum(dim, &ys);
        let sum_gens = wedge_sum(&chosen)?.canonical().generators().to_vec();
        let xs = split_in_cone(&mut rng, dim, &sum_gens, &total, m);
        let instance = RdpInstance {
            wedges: chosen,
            xs,
            ys,
        };
        if rdp_check(&instance)? == RdpOutcome::Infeasible {
            return Ok(RdpSearchOutcome::Counterexample {
                trial,
                wedge_indices,
                instance,
            });
        }
    }
    Ok(RdpSearchOutcome::NoneFound)
}

fn split_in_cone<R: Rng>(rng: &mut R, dim: usize, gens: &[QVector], total: &QVector, parts: usize) -> Vec<QVector> {
    let k = gens.len();
    let mut lp = LinearProgram::new(k).minimize(QVector::from_i64(
        &(0..k).map(|_| rng.gen_range(1..=5)).collect::<Vec<_>>(),
    ));
    for c in 0..k {
        lp.set_nonnegative(c);
    }
    for r in 0..dim {
        lp.push(
            QVector::new(gens.iter().map(|g| g[r].clone()).collect()),
            Relation::Eq,
            total[r].clone(),
        );
    }
    let coeffs = match lp_solve(&lp) {
        LpResult::Optimal { point, .. } => point,
        other => unreachable!("total lies in the sum wedge: {other:?}"),
    };
    let mut xs = vec![QVector::zeros(dim); parts];
    for (g, c) in gens.iter().zip(coeffs.iter()) {
        if c.is_zero() {
            continue;
        }
        let mut weights: Vec<i64> = (0..parts).map(|_| rng.gen_range(0..=4)).collect();
        if weights.iter().all(|&w| w == 0) {
            weights[0] = 1;
        }
        let wsum: i64 = weights.iter().sum();
        for (x, &w) in xs.iter_mut().zip(&weights) {
            let share = c * Rational::new(w.into(), wsum.into());
            *x = x.add_scaled(&share, g);
        }
    }
    xs
}

/// Explicit decomposition over the coordinate wedges W_s = {f : f(s) ≥ 0}
/// of ℚ^`size`, where y_j ∈ W_{s_j} with s_j = `wedge_indices[j]`.
///
/// With two different coordinates s_a ≠ s_b among the wedges, every x but
/// the last is placed off s_a in column a and on s_a in column b, which is
/// zero at each column's own coordinate; the last row takes what is left of
/// each y_j. With a single coordinate, coordinates other than s are
/// unconstrained and s itself is split by the scalar northwest-corner rule.
pub fn fs_decompose(size: usize, wedge_indices: &[usize], xs: &[QVector], ys: &[QVector]) -> Result<Decomposition> {
    let inst = coordinate_instance(size, wedge_indices, xs, ys)?;
    inst.validate()?;
    let (m, n) = (xs.len(), ys.len());
    let zero = QVector::zeros(size);

    if m == 1 {
        return Ok(Decomposition { z: vec![ys.to_vec()] });
    }
    if n == 1 {
        return Ok(Decomposition {
            z: xs.iter().map(|x| vec![x.clone()]).collect(),
        });
    }

    let mut z = vec![vec![zero.clone(); n]; m];
    let s_a = wedge_indices[0];
    if let Some(b) = wedge_indices.iter().position(|&s| s != s_a) {
        for i in 0..m - 1 {
            let mut off = xs[i].clone();
            off[s_a] = Rational::zero();
            let mut on = zero.clone();
            on[s_a] = xs[i][s_a].clone();
            z[i][0] = off;
            z[i][b] = on;
        }
    } else {
        for t in (0..size).filter(|&t| t != s_a) {
            for i in 0..m - 1 {
                z[i][0][t] = xs[i][t].clone();
            }
        }
        let supply: Vec<Rational> = xs.iter().map(|x| x[s_a].clone()).collect();
        let demand: Vec<Rational> = ys.iter().map(|y| y[s_a].clone()).collect();
        let flows = northwest_corner(&supply, &demand);
        for i in 0..m - 1 {
            for j in 0..n {
                z[i][j][s_a] = flows[i][j].clone();
            }
        }
    }
    for j in 0..n {
        let used = QVector::sum(size, z[..m - 1].iter().map(|row| &row[j]));
        z[m - 1][j] = &ys[j] - &used;
    }
    let dec = Decomposition { z };
    debug_assert!(dec.verify(&inst));
    Ok(dec)
}

fn coordinate_instance(size: usize, wedge_indices: &[usize], xs: &[QVector], ys: &[QVector]) -> Result<RdpInstance> {
    if size == 0 {
        return Err(Error::InvalidInstance("S must be nonempty".into()));
    }
    if let Some(&s) = wedge_indices.iter().find(|&&s| s >= size) {
        return Err(Error::InvalidInstance(format!("wedge index {s} out of range")));
    }
    Ok(RdpInstance {
        wedges: wedge_indices
            .iter()
            .map(|&s| Wedge::halfspace(QVector::unit(size, s)))
            .collect(),
        xs: xs.to_vec(),
        ys: ys.to_vec(),
    })
}

/// Transportation plan for nonnegative supplies and demands of equal total.
fn northwest_corner(supply: &[Rational], demand: &[Rational]) -> Vec<Vec<Rational>> {
    debug_assert!(supply.iter().chain(demand).all(|v| !v.is_negative()));
    let mut s = supply.to_vec();
    let mut d = demand.to_vec();
    let mut flows = vec![vec![Rational::zero(); d.len()]; s.len()];
    let (mut i, mut j) = (0, 0);
    while i < s.len() && j < d.len() {
        let f = s[i].clone().min(d[j].clone());
        flows[i][j] = f.clone();
        s[i] -= &f;
        d[j] -= &f;
        if s[i].is_zero() {
            i += 1;
        } else {
            j += 1;
        }
    }
    flows
}
