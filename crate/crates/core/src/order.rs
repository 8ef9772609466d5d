//! Multi-upper bounds and multi-suprema of translated-wedge families.
//!
//! For a family (xᵢ, Wᵢ), z is a multi-supremum exactly when
//! ∩(xᵢ + Wᵢ) = z + ∩Wᵢ. With P = ∩(xᵢ + Wᵢ) and C = ∩Wᵢ = {x : a_k·x ≥ 0},
//! the recession cone of a nonempty P is C, so m_k = min_P a_k·x is finite.
//! A multi-supremum exists iff some z ∈ P attains every m_k; the set of all
//! of them is z + D(C).

use num_traits::Signed;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg::{in_span, same_span};
use crate::exact::{solve_linear, LinearSolution, QMatrix, QVector};
use crate::lp::{feasible_point, lp_solve, LinearProgram, LpResult, Relation};
use crate::sampling::sample_apex;
use crate::wedge::{intersect, Wedge};

/// A pair (xᵢ, Wᵢ): the translate xᵢ + Wᵢ.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TranslatedWedge {
    pub apex: QVector,
    pub wedge: Wedge,
}

impl TranslatedWedge {
    pub fn new(apex: QVector, wedge: Wedge) -> Result<Self> {
        if apex.dim() != wedge.dim() {
            return Err(Error::DimensionMismatch {
                expected: wedge.dim(),
                found: apex.dim(),
            });
        }
        Ok(TranslatedWedge { apex, wedge })
    }

    pub fn contains(&self, u: &QVector) -> bool {
        self.wedge.contains(&(u - &self.apex))
    }
}

/// The affine set `witness + span(lineality)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiSupSet {
    pub witness: QVector,
    pub lineality: Vec<QVector>,
}

impl MultiSupSet {
    /// A single point.
    pub fn is_proper(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn contains(&self, p: &QVector) -> bool {
        in_span(self.witness.dim(), &self.lineality, &(p - &self.witness))
    }

    /// Equality of the represented affine sets.
    pub fn same_set(&self, other: &MultiSupSet) -> bool {
        let dim = self.witness.dim();
        dim == other.witness.dim() && same_span(dim, &self.lineality, &other.lineality) && self.contains(&other.witness)
    }

    pub fn negated(&self) -> MultiSupSet {
        MultiSupSet {
            witness: -&self.witness,
            lineality: self.lineality.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MsupOutcome {
    Set(MultiSupSet),
    /// The family is multi-bounded above but has no multi-supremum.
    Empty,
}

impl MsupOutcome {
    pub fn set(&self) -> Option<&MultiSupSet> {
        match self {
            MsupOutcome::Set(s) => Some(s),
            MsupOutcome::Empty => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, MsupOutcome::Empty)
    }

    /// Same outcome, comparing sets as sets.
    pub fn same_as(&self, other: &MsupOutcome) -> bool {
        match (self, other) {
            (MsupOutcome::Set(a), MsupOutcome::Set(b)) => a.same_set(b),
            (MsupOutcome::Empty, MsupOutcome::Empty) => true,
            _ => false,
        }
    }
}

fn family_dim(family: &[TranslatedWedge]) -> Result<usize> {
    let dim = family.first().ok_or(Error::EmptyFamily)?.apex.dim();
    for t in family {
        for d in [t.apex.dim(), t.wedge.dim()] {
            if d != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: d });
            }
        }
    }
    Ok(dim)
}

/// u − xᵢ ∈ Wᵢ for every i.
pub fn is_multi_upper_bound(u: &QVector, family: &[TranslatedWedge]) -> bool {
    family.iter().all(|t| t.contains(u))
}

/// xᵢ − u ∈ Wᵢ for every i.
pub fn is_multi_lower_bound(u: &QVector, family: &[TranslatedWedge]) -> bool {
    family.iter().all(|t| t.wedge.contains(&(&t.apex - u)))
}

/// The halfspace system of ∩(xᵢ + Wᵢ): a·u ≥ a·xᵢ.
fn upper_bound_program(dim: usize, family: &[TranslatedWedge]) -> LinearProgram {
    let mut lp = LinearProgram::new(dim);
    for t in family {
        for a in t.wedge.halfspaces() {
            lp.push(a.clone(), Relation::Ge, a.dot(&t.apex));
        }
    }
    lp
}

/// Some multi-upper bound, or `None` when ∩(xᵢ + Wᵢ) is empty. Apexes are
/// tried first, so a single pair returns its own apex.
pub fn multi_bounded_above(family: &[TranslatedWedge]) -> Result<Option<QVector>> {
    let dim = family_dim(family)?;
    if let Some(t) = family.iter().find(|t| is_multi_upper_bound(&t.apex, family)) {
        return Ok(Some(t.apex.clone()));
    }
    Ok(feasible_point(&upper_bound_program(dim, family)))
}

/// The set of multi-suprema of `family`.
pub fn msup(family: &[TranslatedWedge]) -> Result<MsupOutcome> {
    let dim = family_dim(family)?;
    if multi_bounded_above(family)?.is_none() {
        return Err(Error::NotMultiBoundedAbove);
    }
    let wedges: Vec<Wedge> = family.iter().map(|t| t.wedge.clone()).collect();
    let common = intersect(&wedges)?;
    let normals = common.halfspaces().to_vec();
    let lineality = common.lineality();

    let base = upper_bound_program(dim, family);
    let mut minima = Vec::with_capacity(normals.len());
    for a in &normals {
        let lp = base.clone().minimize(a.clone());
        match lp_solve(&lp) {
            LpResult::Optimal { value, .. } => minima.push(value),
            LpResult::Unbounded { .. } => unreachable!("normals of the recession cone are bounded below"),
            LpResult::Infeasible => unreachable!("feasibility checked above"),
        }
    }
    if normals.is_empty() {
        // C is the whole space, so is P.
        return Ok(MsupOutcome::Set(MultiSupSet {
            witness: QVector::zeros(dim),
            lineality,
        }));
    }
    let a = QMatrix::from_rows(dim, &normals)?;
    let z = match solve_linear(&a, &QVector::new(minima))? {
        LinearSolution::Solution { particular, .. } => particular,
        LinearSolution::Inconsistent => return Ok(MsupOutcome::Empty),
    };
    // Any two solutions differ by an element of D(C), so z lies in P iff the
    // whole solution set does.
    if !is_multi_upper_bound(&z, family) {
        return Ok(MsupOutcome::Empty);
    }
    Ok(MsupOutcome::Set(MultiSupSet { witness: z, lineality }))
}

/// minf (xᵢ, Wᵢ) = −msup (−xᵢ, Wᵢ).
pub fn minf(family: &[TranslatedWedge]) -> Result<MsupOutcome> {
    let negated: Vec<TranslatedWedge> = family
        .iter()
        .map(|t| TranslatedWedge {
            apex: -&t.apex,
            wedge: t.wedge.clone(),
        })
        .collect();
    match msup(&negated) {
        Ok(MsupOutcome::Set(s)) => Ok(MsupOutcome::Set(s.negated())),
        Ok(MsupOutcome::Empty) => Ok(MsupOutcome::Empty),
        Err(Error::NotMultiBoundedAbove) => Err(Error::NotMultiBoundedBelow),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Number of pairs per sampled family.
    pub arity: usize,
    pub seed: u64,
    /// Number of sampled families.
    pub budget: usize,
    /// Integer part of each apex coordinate is drawn from [−bound, bound].
    pub bound: i64,
}

impl SearchConfig {
    pub fn new(arity: usize, seed: u64, budget: usize) -> Self {
        SearchConfig {
            arity,
            seed,
            budget,
            bound: 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeSearchOutcome {
    Counterexample {
        trial: usize,
        /// Index into the input wedge list for each pair.
        wedge_indices: Vec<usize>,
        apexes: Vec<QVector>,
    },
    NoneFound,
}

impl LatticeSearchOutcome {
    pub fn found(&self) -> bool {
        matches!(self, LatticeSearchOutcome::Counterexample { .. })
    }
}

/// Looks for a multi-bounded-above family of `arity` translates of the given
/// wedges (chosen with repetition) whose msup is empty. A refuter only:
/// `NoneFound` proves nothing.
pub fn multilattice_search(wedges: &[Wedge], config: SearchConfig) -> Result<LatticeSearchOutcome> {
    let dim = crate::wedge::common_dim(wedges)?;
    if config.arity == 0 {
        return Ok(LatticeSearchOutcome::NoneFound);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for trial in 0..config.budget {
        let wedge_indices: Vec<usize> = (0..config.arity).map(|_| rng.gen_range(0..wedges.len())).collect();
        let apexes: Vec<QVector> = (0..config.arity).map(|_| sample_apex(&mut rng, dim, config.bound)).collect();
        let family: Vec<TranslatedWedge> = wedge_indices
            .iter()
            .zip(&apexes)
            .map(|(&w, x)| TranslatedWedge {
                apex: x.clone(),
                wedge: wedges[w].clone(),
            })
            .collect();
        match msup(&family) {
            Ok(MsupOutcome::Empty) => {
                return Ok(LatticeSearchOutcome::Counterexample {
                    trial,
                    wedge_indices,
                    apexes,
                })
            }
            Ok(MsupOutcome::Set(_)) | Err(Error::NotMultiBoundedAbove) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(LatticeSearchOutcome::NoneFound)
}

/// The outcome set shifted by `shift`.
pub fn translated(outcome: &MsupOutcome, shift: &QVector) -> MsupOutcome {
    match outcome {
        MsupOutcome::Set(s) => MsupOutcome::Set(MultiSupSet {
            witness: &s.witness + shift,
            lineality: s.lineality.clone(),
        }),
        MsupOutcome::Empty => MsupOutcome::Empty,
    }
}

/// The outcome set scaled by `k > 0`.
pub fn scaled(outcome: &MsupOutcome, k: &crate::exact::Rational) -> MsupOutcome {
    assert!(k.is_positive(), "scale factor must be positive");
    match outcome {
        MsupOutcome::Set(s) => MsupOutcome::Set(MultiSupSet {
            witness: s.witness.scale(k),
            lineality: s.lineality.clone(),
        }),
        MsupOutcome::Empty => MsupOutcome::Empty,
    }
}
