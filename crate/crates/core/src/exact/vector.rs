use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, gcd_of_numerators, lcm_of_denominators, parse_rational, Rational};

/// A vector in ℚⁿ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        QVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        QVector(entries.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        QVector(vec![Rational::zero(); dim])
    }

    /// The standard basis vector e_k.
    pub fn unit(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[k] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, k: &Rational) -> QVector {
        QVector(self.0.iter().map(|v| v * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, k: &Rational, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn concat(parts: &[QVector]) -> QVector {
        QVector(parts.iter().flat_map(|p| p.0.iter().cloned()).collect())
    }

    /// Positive rescaling to coprime integer entries. Direction is preserved;
    /// the zero vector is returned unchanged.
    pub fn primitive(&self) -> QVector {
        if self.is_zero() {
            return self.clone();
        }
        let l = lcm_of_denominators(&self.0);
        let scaled: Vec<Rational> = self.0.iter().map(|v| v * Rational::from_integer(l.clone())).collect();
        let g = gcd_of_numerators(&scaled);
        let g = Rational::from_integer(g);
        QVector(scaled.into_iter().map(|v| v / &g).collect())
    }

    /// Like [`QVector::primitive`] but also flips the sign so that the first
    /// nonzero entry is positive. Only meaningful for lines and subspaces.
    pub fn primitive_unsigned(&self) -> QVector {
        let p = self.primitive();
        match p.0.iter().find(|v| !v.is_zero()) {
            Some(lead) if lead.is_negative() => -&p,
            _ => p,
        }
    }

    pub fn sum<'a>(dim: usize, it: impl IntoIterator<Item = &'a QVector>) -> QVector {
        it.into_iter().fold(QVector::zeros(dim), |acc, v| &acc + v)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|v| v.denom() == &BigInt::one())
    }
}

impl From<Vec<Rational>> for QVector {
    fn from(v: Vec<Rational>) -> Self {
        QVector(v)
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for QVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add for &QVector {
    type Output = QVector;
    fn add(self, rhs: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVector {
    type Output = QVector;
    fn sub(self, rhs: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        -&self
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Serde adapter for a single rational: written as a string, read from a
/// string or a JSON integer.
pub mod rational_serde {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = RawRational::deserialize(d)?;
        raw.into_rational().map_err(de::Error::custom)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Text(String),
    Int(i64),
}

impl RawRational {
    fn into_rational(self) -> crate::Result<Rational> {
        match self {
            RawRational::Text(s) => parse_rational(&s),
            RawRational::Int(i) => Ok(Rational::from_integer(i.into())),
        }
    }
}

impl Serialize for QVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in &self.0 {
            seq.serialize_element(&format_rational(v))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<RawRational>::deserialize(d)?;
        raw.into_iter()
            .map(RawRational::into_rational)
            .collect::<crate::Result<Vec<_>>>()
            .map(QVector)
            .map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn primitive_keeps_direction() {
        let v = QVector::new(vec![frac(-1, 2), frac(3, 4)]);
        assert_eq!(v.primitive(), QVector::from_i64(&[-2, 3]));
        assert_eq!(v.primitive_unsigned(), QVector::from_i64(&[2, -3]));
        assert_eq!(QVector::zeros(3).primitive(), QVector::zeros(3));
    }

    #[test]
    fn json_form() {
        let v = QVector::new(vec![frac(1, 2), frac(-4, 2), frac(0, 1)]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["1/2","-2","0"]"#);
        let back: QVector = serde_json::from_str(r#"["1/2", -2, "0"]"#).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<QVector>(r#"["1/0"]"#).is_err());
    }
}
