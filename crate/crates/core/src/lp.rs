//! Exact two-phase simplex over the rationals.
//!
//! Variables are free unless marked nonnegative; free variables are split
//! into a difference of two nonnegative columns. Pivoting follows Bland's
//! rule, so the solver terminates on degenerate problems and is fully
//! deterministic.

use num_traits::{Signed, Zero};

use crate::exact::{QVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Eq,
    Le,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub row: QVector,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn holds_at(&self, x: &QVector) -> bool {
        let lhs = self.row.dot(x);
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Le => lhs <= self.rhs,
        }
    }

    /// Whether moving along `d` from a feasible point stays feasible forever.
    pub fn recedes_along(&self, d: &QVector) -> bool {
        let lhs = self.row.dot(d);
        match self.relation {
            Relation::Ge => !lhs.is_negative(),
            Relation::Eq => lhs.is_zero(),
            Relation::Le => !lhs.is_positive(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    sense: Sense,
    objective: QVector,
    constraints: Vec<Constraint>,
    nonnegative: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    /// `dual` holds one multiplier per constraint with
    /// `Σ dual_k · row_k = objective` on free variables and
    /// `Σ dual_k · rhs_k = value`. For a minimization the multipliers of `≥`
    /// rows are nonnegative and those of `≤` rows nonpositive; for a
    /// maximization the signs are reversed.
    Optimal {
        value: Rational,
        point: QVector,
        dual: QVector,
    },
    /// A recession direction of the feasible region along which the
    /// objective strictly improves.
    Unbounded { ray: QVector },
    Infeasible,
}

impl LpResult {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpResult::Infeasible)
    }
}

impl LinearProgram {
    /// A feasibility problem in `num_vars` free variables with zero objective.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            sense: Sense::Minimize,
            objective: QVector::zeros(num_vars),
            constraints: Vec::new(),
            nonnegative: vec![false; num_vars],
        }
    }

    pub fn minimize(mut self, objective: QVector) -> Self {
        assert_eq!(objective.dim(), self.num_vars, "objective length");
        self.sense = Sense::Minimize;
        self.objective = objective;
        self
    }

    pub fn maximize(mut self, objective: QVector) -> Self {
        assert_eq!(objective.dim(), self.num_vars, "objective length");
        self.sense = Sense::Maximize;
        self.objective = objective;
        self
    }

    pub fn set_objective(&mut self, sense: Sense, objective: QVector) {
        assert_eq!(objective.dim(), self.num_vars, "objective length");
        self.sense = sense;
        self.objective = objective;
    }

    pub fn constrain(mut self, row: QVector, relation: Relation, rhs: Rational) -> Self {
        self.push(row, relation, rhs);
        self
    }

    pub fn push(&mut self, row: QVector, relation: Relation, rhs: Rational) {
        assert_eq!(row.dim(), self.num_vars, "constraint row length");
        self.constraints.push(Constraint { row, relation, rhs });
    }

    pub fn set_nonnegative(&mut self, var: usize) {
        self.nonnegative[var] = true;
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn objective(&self) -> &QVector {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn is_nonnegative(&self, var: usize) -> bool {
        self.nonnegative[var]
    }

    pub fn is_feasible(&self, x: &QVector) -> bool {
        x.dim() == self.num_vars
            && self.constraints.iter().all(|c| c.holds_at(x))
            && (0..self.num_vars).all(|v| !self.nonnegative[v] || !x[v].is_negative())
    }

    pub fn is_improving_ray(&self, d: &QVector) -> bool {
        let gain = self.objective.dot(d);
        let improves = match self.sense {
            Sense::Minimize => gain.is_negative(),
            Sense::Maximize => gain.is_positive(),
        };
        improves
            && self.constraints.iter().all(|c| c.recedes_along(d))
            && (0..self.num_vars).all(|v| !self.nonnegative[v] || !d[v].is_negative())
    }
}

/// Solves `p` exactly.
pub fn lp_solve(p: &LinearProgram) -> LpResult {
    Tableau::build(p).solve(p)
}

/// Some point satisfying every constraint of `p`, ignoring its objective.
pub fn feasible_point(p: &LinearProgram) -> Option<QVector> {
    let mut q = p.clone();
    q.set_objective(Sense::Minimize, QVector::zeros(p.num_vars));
    match lp_solve(&q) {
        LpResult::Optimal { point, .. } => Some(point),
        LpResult::Infeasible => None,
        LpResult::Unbounded { .. } => unreachable!("zero objective cannot be unbounded"),
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Original constraint index of each remaining row.
    origin: Vec<usize>,
    /// Sign applied to each original constraint to make its rhs nonnegative.
    sign: Vec<bool>,
    cost: Vec<Rational>,
    reduced: Vec<Rational>,
    reduced_rhs: Rational,
    /// (plus column, minus column) for each structural variable.
    var_cols: Vec<(usize, Option<usize>)>,
    art_start: usize,
}

enum Outcome {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn build(p: &LinearProgram) -> Self {
        let mut var_cols = Vec::with_capacity(p.num_vars);
        let mut ncols = 0;
        for v in 0..p.num_vars {
            if p.nonnegative[v] {
                var_cols.push((ncols, None));
                ncols += 1;
            } else {
                var_cols.push((ncols, Some(ncols + 1)));
                ncols += 2;
            }
        }
        let slack_cols: Vec<Option<usize>> = p
            .constraints
            .iter()
            .map(|c| match c.relation {
                Relation::Eq => None,
                _ => {
                    ncols += 1;
                    Some(ncols - 1)
                }
            })
            .collect();
        let art_start = ncols;
        let m = p.constraints.len();
        let total = ncols + m;

        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut sign = Vec::with_capacity(m);
        for (k, c) in p.constraints.iter().enumerate() {
            let mut row = vec![Rational::zero(); total];
            for (v, &(plus, minus)) in var_cols.iter().enumerate() {
                let a = &c.row[v];
                if a.is_zero() {
                    continue;
                }
                row[plus] = a.clone();
                if let Some(minus) = minus {
                    row[minus] = -a;
                }
            }
            match (c.relation, slack_cols[k]) {
                (Relation::Ge, Some(s)) => row[s] = -Rational::from_integer(1.into()),
                (Relation::Le, Some(s)) => row[s] = Rational::from_integer(1.into()),
                _ => {}
            }
            let mut b = c.rhs.clone();
            let flip = b.is_negative();
            if flip {
                for a in row.iter_mut() {
                    *a = -&*a;
                }
                b = -b;
            }
            row[art_start + k] = Rational::from_integer(1.into());
            rows.push(row);
            rhs.push(b);
            sign.push(flip);
        }

        let mut cost = vec![Rational::zero(); total];
        for (v, &(plus, minus)) in var_cols.iter().enumerate() {
            let c = match p.sense {
                Sense::Minimize => p.objective[v].clone(),
                Sense::Maximize => -&p.objective[v],
            };
            if let Some(minus) = minus {
                cost[minus] = -&c;
            }
            cost[plus] = c;
        }

        Tableau {
            rows,
            rhs,
            basis: (art_start..art_start + m).collect(),
            origin: (0..m).collect(),
            sign,
            cost,
            reduced: vec![Rational::zero(); total],
            reduced_rhs: Rational::zero(),
            var_cols,
            art_start,
        }
    }

    fn solve(mut self, p: &LinearProgram) -> LpResult {
        let total = self.cost.len();
        // Phase 1: minimize the sum of artificials.
        self.reduced = vec![Rational::zero(); total];
        self.reduced_rhs = Rational::zero();
        for (row, b) in self.rows.iter().zip(&self.rhs) {
            for j in 0..self.art_start {
                if !row[j].is_zero() {
                    self.reduced[j] -= &row[j];
                }
            }
            self.reduced_rhs -= b;
        }
        match self.iterate(total) {
            Outcome::Optimal => {}
            Outcome::Unbounded(_) => unreachable!("phase 1 objective is bounded below"),
        }
        if self.reduced_rhs.is_negative() {
            return LpResult::Infeasible;
        }
        self.drive_out_artificials();

        // Phase 2 on the original costs.
        self.reduced = self.cost.clone();
        self.reduced_rhs = Rational::zero();
        for r in 0..self.rows.len() {
            let cb = self.cost[self.basis[r]].clone();
            if cb.is_zero() {
                continue;
            }
            for j in 0..total {
                if !self.rows[r][j].is_zero() {
                    let d = &cb * &self.rows[r][j];
                    self.reduced[j] -= d;
                }
            }
            self.reduced_rhs -= &cb * &self.rhs[r];
        }
        match self.iterate(self.art_start) {
            Outcome::Unbounded(j) => LpResult::Unbounded {
                ray: self.ray(j),
            },
            Outcome::Optimal => {
                let point = self.point();
                let mut value = -self.reduced_rhs.clone();
                let mut dual = QVector::zeros(p.constraints.len());
                for k in 0..p.constraints.len() {
                    let pi = -&self.reduced[self.art_start + k];
                    dual[k] = if self.sign[k] { -pi } else { pi };
                }
                if p.sense == Sense::Maximize {
                    value = -value;
                    dual = -dual;
                }
                debug_assert!(p.is_feasible(&point));
                debug_assert_eq!(p.objective.dot(&point), value);
                LpResult::Optimal { value, point, dual }
            }
        }
    }

    /// Bland's rule on columns `0..limit`.
    fn iterate(&mut self, limit: usize) -> Outcome {
        loop {
            let Some(j) = (0..limit).find(|&j| self.reduced[j].is_negative()) else {
                return Outcome::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &best {
                    None => true,
                    Some((br, bratio)) => ratio < *bratio || (ratio == *bratio && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, j),
                None => return Outcome::Unbounded(j),
            }
        }
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.rows[r][j].recip();
        for a in self.rows[r].iter_mut() {
            if !a.is_zero() {
                *a *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][j].is_zero() {
                continue;
            }
            let f = self.rows[i][j].clone();
            for (a, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *a -= &f * p;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.reduced[j].is_zero() {
            let f = self.reduced[j].clone();
            for (a, p) in self.reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *a -= &f * p;
                }
            }
            self.reduced_rhs -= &f * &pivot_rhs;
        }
        self.basis[r] = j;
    }

    fn drive_out_artificials(&mut self) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] < self.art_start {
                r += 1;
                continue;
            }
            match (0..self.art_start).find(|&j| !self.rows[r][j].is_zero()) {
                Some(j) => {
                    self.pivot(r, j);
                    r += 1;
                }
                None => {
                    // Redundant equation.
                    self.rows.remove(r);
                    self.rhs.remove(r);
                    self.basis.remove(r);
                    self.origin.remove(r);
                }
            }
        }
    }

    fn column_values(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.cost.len()];
        for (r, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs[r].clone();
        }
        x
    }

    fn to_structural(&self, cols: &[Rational]) -> QVector {
        QVector::new(
            self.var_cols
                .iter()
                .map(|&(plus, minus)| match minus {
                    Some(m) => &cols[plus] - &cols[m],
                    None => cols[plus].clone(),
                })
                .collect(),
        )
    }

    fn point(&self) -> QVector {
        self.to_structural(&self.column_values())
    }

    fn ray(&self, j: usize) -> QVector {
        let mut dir = vec![Rational::zero(); self.cost.len()];
        dir[j] = Rational::from_integer(1.into());
        for (r, &b) in self.basis.iter().enumerate() {
            dir[b] = -&self.rows[r][j];
        }
        self.to_structural(&dir)
    }
}
