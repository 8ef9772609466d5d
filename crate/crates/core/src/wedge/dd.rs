//! Double description: extreme rays and lineality of {x : a·x ≥ 0 for all a}.
//!
//! Constraints are inserted one at a time. The current cone is kept as a
//! lineality basis plus extreme rays of its pointed quotient; a constraint
//! that cuts the lineality space rotates one line into a ray, any other
//! constraint splits the rays by sign and joins adjacent (+, −) pairs.
//! Adjacency uses the algebraic rank test, so the ray set stays minimal.

use num_traits::{Signed, Zero};

use crate::exact::linalg::{project_out, rank_of, span_basis};
use crate::exact::QVector;

struct Ray {
    v: QVector,
    /// Indices of processed constraints that vanish on `v`, ascending.
    tight: Vec<usize>,
}

pub(crate) struct ConeDescription {
    pub lineality: Vec<QVector>,
    pub rays: Vec<QVector>,
}

impl ConeDescription {
    /// Lines as opposite ray pairs followed by the pointed rays, sorted
    /// lexicographically.
    pub fn generators(&self) -> Vec<QVector> {
        let mut out: Vec<QVector> = self
            .lineality
            .iter()
            .flat_map(|l| [l.clone(), -l])
            .chain(self.rays.iter().cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

pub(crate) fn cone_from_halfspaces(dim: usize, halfspaces: &[QVector]) -> ConeDescription {
    let mut lineality: Vec<QVector> = (0..dim).map(|k| QVector::unit(dim, k)).collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed: Vec<QVector> = Vec::new();

    for a in halfspaces {
        if a.is_zero() {
            continue;
        }
        let k = processed.len();
        processed.push(a.clone());

        if let Some(pos) = lineality.iter().position(|l| !a.dot(l).is_zero()) {
            let mut l0 = lineality.remove(pos);
            if a.dot(&l0).is_negative() {
                l0 = -l0;
            }
            let al0 = a.dot(&l0);
            for l in lineality.iter_mut() {
                let t = a.dot(l) / &al0;
                if !t.is_zero() {
                    *l = l.add_scaled(&-t, &l0).primitive();
                }
            }
            for r in rays.iter_mut() {
                let t = a.dot(&r.v) / &al0;
                if !t.is_zero() {
                    r.v = r.v.add_scaled(&-t, &l0).primitive();
                }
                r.tight.push(k);
            }
            rays.push(Ray {
                v: l0.primitive(),
                tight: (0..k).collect(),
            });
            continue;
        }

        let rank_prev = dim - lineality.len();
        let vals: Vec<_> = rays.iter().map(|r| a.dot(&r.v)).collect();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for (p, vp) in rays.iter().zip(&vals) {
            if !vp.is_positive() {
                continue;
            }
            for (n, vn) in rays.iter().zip(&vals) {
                if !vn.is_negative() {
                    continue;
                }
                let common = intersect_sorted(&p.tight, &n.tight);
                if common.len() + 2 < rank_prev {
                    continue;
                }
                let rows: Vec<QVector> = common.iter().map(|&i| processed[i].clone()).collect();
                if rank_of(dim, &rows) + 2 != rank_prev {
                    continue;
                }
                let v = n.v.scale(vp).add_scaled(&-vn, &p.v).primitive();
                let mut tight = common;
                tight.push(k);
                next.push(Ray { v, tight });
            }
        }
        for (mut r, vr) in rays.into_iter().zip(vals) {
            if vr.is_zero() {
                r.tight.push(k);
                next.push(r);
            } else if vr.is_positive() {
                next.push(r);
            }
        }
        rays = next;
    }

    let lineality = span_basis(dim, &lineality);
    let mut out_rays: Vec<QVector> = rays
        .into_iter()
        .map(|r| project_out(dim, &lineality, &r.v).primitive())
        .filter(|v| !v.is_zero())
        .collect();
    out_rays.sort();
    out_rays.dedup();
    ConeDescription {
        lineality,
        rays: out_rays,
    }
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
