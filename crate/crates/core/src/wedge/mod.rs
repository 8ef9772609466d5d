//! Polyhedral wedges in ℚⁿ.
//!
//! A [`Wedge`] is a convex cone that may contain lines. It is held in one or
//! both of two forms: a generator list (conic hull; a line is two opposite
//! generators) and a halfspace list (`{x : a·x ≥ 0}` for each normal `a`).
//! Whichever form is missing is computed on first use and cached.
//!
//! An empty generator list is the origin `{0}`; an empty halfspace list is
//! the whole space.

mod dd;

use std::fmt;
use std::sync::OnceLock;

use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::linalg::{project_out, rank_of, span_basis};
use crate::exact::{QMatrix, QVector};

pub struct Wedge {
    dim: usize,
    generators: OnceLock<Vec<QVector>>,
    halfspaces: OnceLock<Vec<QVector>>,
}

fn check_dims(dim: usize, vs: &[QVector]) -> Result<()> {
    match vs.iter().find(|v| v.dim() != dim) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: dim,
            found: v.dim(),
        }),
        None => Ok(()),
    }
}

fn filled(v: Vec<QVector>) -> OnceLock<Vec<QVector>> {
    let cell = OnceLock::new();
    let _ = cell.set(v);
    cell
}

/// Canonical halfspace normals of the conic hull of `generators`.
pub fn vrep_to_hrep(dim: usize, generators: &[QVector]) -> Vec<QVector> {
    // The normals of cone(G) generate the dual cone {a : a·g ≥ 0 ∀g}.
    dd::cone_from_halfspaces(dim, generators).generators()
}

/// Canonical generators of `{x : a·x ≥ 0 for every a in halfspaces}`.
pub fn hrep_to_vrep(dim: usize, halfspaces: &[QVector]) -> Vec<QVector> {
    dd::cone_from_halfspaces(dim, halfspaces).generators()
}

fn dedup_primitive(vs: impl IntoIterator<Item = QVector>) -> Vec<QVector> {
    let mut out: Vec<QVector> = Vec::new();
    for v in vs {
        let p = v.primitive();
        if !p.is_zero() && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

impl Wedge {
    pub fn from_generators(dim: usize, generators: Vec<QVector>) -> Result<Self> {
        check_dims(dim, &generators)?;
        Ok(Wedge {
            dim,
            generators: filled(generators),
            halfspaces: OnceLock::new(),
        })
    }

    pub fn from_halfspaces(dim: usize, halfspaces: Vec<QVector>) -> Result<Self> {
        check_dims(dim, &halfspaces)?;
        Ok(Wedge {
            dim,
            generators: OnceLock::new(),
            halfspaces: filled(halfspaces),
        })
    }

    /// Both forms at once; they must describe the same set.
    pub fn from_both(dim: usize, generators: Vec<QVector>, halfspaces: Vec<QVector>) -> Result<Self> {
        let a = Self::from_generators(dim, generators.clone())?;
        let b = Self::from_halfspaces(dim, halfspaces.clone())?;
        if !wedge_equal(&a, &b) {
            return Err(Error::InconsistentRepresentations);
        }
        Ok(Wedge {
            dim,
            generators: filled(generators),
            halfspaces: filled(halfspaces),
        })
    }

    pub fn whole(dim: usize) -> Self {
        Self::from_halfspaces(dim, Vec::new()).expect("no vectors")
    }

    pub fn origin(dim: usize) -> Self {
        Self::from_generators(dim, Vec::new()).expect("no vectors")
    }

    /// The nonnegative orthant.
    pub fn orthant(dim: usize) -> Self {
        Self::from_generators(dim, (0..dim).map(|k| QVector::unit(dim, k)).collect()).expect("units")
    }

    pub fn halfspace(normal: QVector) -> Self {
        Self::from_halfspaces(normal.dim(), vec![normal]).expect("single vector")
    }

    pub fn ray(direction: QVector) -> Self {
        Self::from_generators(direction.dim(), vec![direction]).expect("single vector")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[QVector] {
        self.generators
            .get_or_init(|| hrep_to_vrep(self.dim, self.halfspaces.get().expect("one form is present")))
    }

    pub fn halfspaces(&self) -> &[QVector] {
        self.halfspaces
            .get_or_init(|| vrep_to_hrep(self.dim, self.generators.get().expect("one form is present")))
    }

    pub fn contains(&self, x: &QVector) -> bool {
        assert_eq!(x.dim(), self.dim, "membership test dimension");
        self.halfspaces().iter().all(|a| !a.dot(x).is_negative())
    }

    /// Canonical basis of D(W) = W ∩ (−W).
    pub fn lineality(&self) -> Vec<QVector> {
        let hs = self.halfspaces();
        let ns = if hs.is_empty() {
            (0..self.dim).map(|k| QVector::unit(self.dim, k)).collect()
        } else {
            QMatrix::from_rows(self.dim, hs).expect("checked dims").nullspace()
        };
        span_basis(self.dim, &ns)
    }

    /// W ∩ (−W) = {0}.
    pub fn is_cone(&self) -> bool {
        self.lineality().is_empty()
    }

    /// W − W is the whole space.
    pub fn is_generating(&self) -> bool {
        rank_of(self.dim, self.generators()) == self.dim
    }

    /// W′ = {a : a·x ≥ 0 for all x in W}.
    pub fn dual(&self) -> Wedge {
        Wedge::from_halfspaces(self.dim, self.generators().to_vec()).expect("same dim")
    }

    /// The same wedge with both forms minimal and canonical.
    pub fn canonical(&self) -> Wedge {
        let hs = vrep_to_hrep(self.dim, self.generators());
        let gens = hrep_to_vrep(self.dim, &hs);
        Wedge {
            dim: self.dim,
            generators: filled(gens),
            halfspaces: filled(hs),
        }
    }

    /// W ∩ D(W)^⊥, a cone with W = D(W) + pointed_part.
    pub fn pointed_part(&self) -> Wedge {
        let mut hs = self.halfspaces().to_vec();
        for l in self.lineality() {
            hs.push(-&l);
            hs.push(l);
        }
        Wedge::from_halfspaces(self.dim, hs).expect("same dim")
    }

    /// −W
    pub fn negated(&self) -> Wedge {
        Wedge::from_generators(self.dim, self.generators().iter().map(|g| -g).collect()).expect("same dim")
    }

    /// The subspace spanned by `basis`, as a wedge.
    pub fn subspace(dim: usize, basis: &[QVector]) -> Result<Wedge> {
        check_dims(dim, basis)?;
        Wedge::from_generators(dim, basis.iter().flat_map(|b| [b.clone(), -b]).collect())
    }

    /// Canonical extreme rays of the pointed part (no lines).
    pub fn pointed_rays(&self) -> Vec<QVector> {
        let lin = self.lineality();
        let mut rays: Vec<QVector> = self
            .canonical()
            .generators()
            .iter()
            .map(|g| project_out(self.dim, &lin, g).primitive())
            .filter(|g| !g.is_zero())
            .collect();
        rays.sort();
        rays.dedup();
        rays
    }
}

/// Conic hull of the union: the smallest wedge containing each summand.
pub fn wedge_sum(ws: &[Wedge]) -> Result<Wedge> {
    let dim = common_dim(ws)?;
    let gens = dedup_primitive(ws.iter().flat_map(|w| w.generators().iter().cloned()));
    Wedge::from_generators(dim, gens)
}

/// Intersection of the wedges: the union of their halfspace lists.
pub fn intersect(ws: &[Wedge]) -> Result<Wedge> {
    let dim = common_dim(ws)?;
    let hs = dedup_primitive(ws.iter().flat_map(|w| w.halfspaces().iter().cloned()));
    Wedge::from_halfspaces(dim, hs)
}

/// Set equality by mutual containment of generators.
pub fn wedge_equal(a: &Wedge, b: &Wedge) -> bool {
    a.dim == b.dim && a.generators().iter().all(|g| b.contains(g)) && b.generators().iter().all(|g| a.contains(g))
}

pub(crate) fn common_dim(ws: &[Wedge]) -> Result<usize> {
    let dim = ws.first().ok_or(Error::EmptyFamily)?.dim;
    match ws.iter().find(|w| w.dim != dim) {
        Some(w) => Err(Error::DimensionMismatch {
            expected: dim,
            found: w.dim,
        }),
        None => Ok(dim),
    }
}

impl Clone for Wedge {
    fn clone(&self) -> Self {
        Wedge {
            dim: self.dim,
            generators: self.generators.clone(),
            halfspaces: self.halfspaces.clone(),
        }
    }
}

impl fmt::Debug for Wedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Wedge");
        d.field("dim", &self.dim);
        if let Some(g) = self.generators.get() {
            d.field("generators", g);
        }
        if let Some(h) = self.halfspaces.get() {
            d.field("halfspaces", h);
        }
        d.finish()
    }
}

#[derive(Serialize, Deserialize)]
struct WedgeJson {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<QVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    halfspaces: Option<Vec<QVector>>,
}

impl Serialize for Wedge {
    /// Writes both forms in canonical order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let c = self.canonical();
        WedgeJson {
            dim: self.dim,
            generators: Some(c.generators().to_vec()),
            halfspaces: Some(c.halfspaces().to_vec()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Wedge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = WedgeJson::deserialize(d)?;
        let w = match (raw.generators, raw.halfspaces) {
            (Some(g), Some(h)) => Wedge::from_both(raw.dim, g, h),
            (Some(g), None) => Wedge::from_generators(raw.dim, g),
            (None, Some(h)) => Wedge::from_halfspaces(raw.dim, h),
            (None, None) => return Err(D::Error::custom("wedge needs \"generators\" or \"halfspaces\"")),
        };
        w.map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> QVector {
        QVector::from_i64(x)
    }

    fn vs(xs: &[&[i64]]) -> Vec<QVector> {
        xs.iter().map(|x| v(x)).collect()
    }

    /// The halfplane {y ≥ −x} and the diagonal ray.
    fn w3() -> Wedge {
        Wedge::halfspace(v(&[1, 1]))
    }

    fn diagonal() -> Wedge {
        Wedge::ray(v(&[1, 1]))
    }

    #[test]
    fn quadrant_to_halfspaces() {
        assert_eq!(vrep_to_hrep(2, &vs(&[&[1, 0], &[0, 1]])), vs(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn halfplane_to_generators() {
        let mut got = hrep_to_vrep(2, &vs(&[&[1, 1]]));
        got.sort();
        let mut want = vs(&[&[1, -1], &[-1, 1], &[1, 1]]);
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn origin_to_halfspaces() {
        let mut got = vrep_to_hrep(2, &[]);
        got.sort();
        let mut want = vs(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn membership() {
        assert!(Wedge::orthant(2).contains(&v(&[1, 2])));
        assert!(!diagonal().contains(&v(&[1, 0])));
        for w in [Wedge::orthant(2), diagonal(), w3(), Wedge::origin(2), Wedge::whole(2)] {
            assert!(w.contains(&v(&[0, 0])));
        }
    }

    #[test]
    fn sums() {
        let s = wedge_sum(&[Wedge::orthant(2), diagonal()]).unwrap();
        assert!(wedge_equal(&s, &Wedge::orthant(2)));
        let s = wedge_sum(&[w3(), Wedge::origin(2)]).unwrap();
        assert!(wedge_equal(&s, &w3()));
        let s = wedge_sum(&[Wedge::ray(v(&[1, 0])), Wedge::ray(v(&[-1, 0]))]).unwrap();
        assert_eq!(s.lineality(), vs(&[&[1, 0]]));
        assert_eq!(s.pointed_rays(), Vec::<QVector>::new());
        assert!(wedge_sum(&[]).is_err());
    }

    #[test]
    fn intersections() {
        let w1 = Wedge::halfspace(v(&[1, 0]));
        let w2 = Wedge::halfspace(v(&[0, 1]));
        assert!(wedge_equal(&intersect(&[w1.clone(), w2]).unwrap(), &Wedge::orthant(2)));
        assert!(wedge_equal(&intersect(&[w3(), Wedge::whole(2)]).unwrap(), &w3()));
        let line = intersect(&[w1, Wedge::halfspace(v(&[-1, 0]))]).unwrap();
        assert_eq!(line.lineality(), vs(&[&[0, 1]]));
    }

    #[test]
    fn lineality_spaces() {
        assert!(Wedge::orthant(2).lineality().is_empty());
        assert_eq!(Wedge::halfspace(v(&[1, 0])).lineality(), vs(&[&[0, 1]]));
        assert_eq!(Wedge::whole(2).lineality().len(), 2);
    }

    #[test]
    fn cone_and_generating_predicates() {
        assert!(Wedge::orthant(2).is_cone());
        assert!(!Wedge::halfspace(v(&[1, 0])).is_cone());
        assert!(!w3().is_cone());

        assert!(Wedge::orthant(2).is_generating());
        assert!(!diagonal().is_generating());
        assert!(!Wedge::origin(1).is_generating());
    }

    #[test]
    fn duals() {
        // W_s = {f : f(s) ≥ 0} in ℚ³ has dual V_s = ray of e_s.
        for s in 0..3 {
            let ws = Wedge::halfspace(QVector::unit(3, s));
            assert!(wedge_equal(&ws.dual(), &Wedge::ray(QVector::unit(3, s))));
        }
        assert!(wedge_equal(&Wedge::orthant(2).dual(), &Wedge::orthant(2)));
        assert!(wedge_equal(&Wedge::whole(3).dual(), &Wedge::origin(3)));
    }

    #[test]
    fn equality() {
        let q = Wedge::orthant(2);
        assert!(wedge_equal(&q, &q));
        assert!(wedge_equal(&q, &q.dual().dual()));
        assert!(!wedge_equal(&q, &diagonal()));
    }

    #[test]
    fn inconsistent_forms_rejected() {
        let r = Wedge::from_both(2, vs(&[&[1, 0]]), vs(&[&[1, 0]]));
        assert_eq!(r.unwrap_err(), Error::InconsistentRepresentations);
        assert!(Wedge::from_both(2, vs(&[&[1, 0], &[0, 1]]), vs(&[&[1, 0], &[0, 1]])).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let w: Wedge = serde_json::from_str(r#"{"dim": 2, "halfspaces": [["1","1"]]}"#).unwrap();
        let text = serde_json::to_string(&w).unwrap();
        let back: Wedge = serde_json::from_str(&text).unwrap();
        assert!(wedge_equal(&w, &back));
        assert!(serde_json::from_str::<Wedge>(r#"{"dim": 2}"#).is_err());
        assert!(serde_json::from_str::<Wedge>(r#"{"dim": 2, "generators": [["1"]]}"#).is_err());
    }
}
