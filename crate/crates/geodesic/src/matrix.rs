//! Exact 2x2 and 3x3 matrices over `Q(zeta_N, sqrt(-7))`.

use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::field::{FieldElement, GaloisMap};
use crate::{Error, Rational};

/// A square matrix of dimension 2 or 3 with exact field entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<FieldElement>,
}

impl SquareMatrix {
    pub fn new(dim: usize, entries: Vec<FieldElement>) -> Self {
        assert!(dim == 2 || dim == 3, "dimension must be 2 or 3");
        assert_eq!(entries.len(), dim * dim);
        SquareMatrix { dim, entries }
    }

    pub fn identity(dim: usize, conductor: u32) -> Self {
        let mut entries = vec![FieldElement::zero(conductor); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = FieldElement::one(conductor);
        }
        SquareMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.entries[0].conductor()
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        let d = self.dim;
        let n = self.conductor();
        let mut out = vec![FieldElement::zero(n); d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = FieldElement::zero(n);
                for k in 0..d {
                    acc = acc.add(&self.at(i, k).mul(o.at(k, j)));
                }
                out[i * d + j] = acc;
            }
        }
        SquareMatrix {
            dim: d,
            entries: out,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        SquareMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn trace(&self) -> FieldElement {
        let mut acc = FieldElement::zero(self.conductor());
        for i in 0..self.dim {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub fn det(&self) -> FieldElement {
        match self.dim {
            2 => self
                .at(0, 0)
                .mul(self.at(1, 1))
                .sub(&self.at(0, 1).mul(self.at(1, 0))),
            3 => {
                let m = |i: usize, j: usize| self.at(i, j);
                let t1 = m(0, 0).mul(&m(1, 1).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 1))));
                let t2 = m(0, 1).mul(&m(1, 0).mul(m(2, 2)).sub(&m(1, 2).mul(m(2, 0))));
                let t3 = m(0, 2).mul(&m(1, 0).mul(m(2, 1)).sub(&m(1, 1).mul(m(2, 0))));
                t1.sub(&t2).add(&t3)
            }
            _ => unreachable!(),
        }
    }

    /// Exact inverse via adjugate and determinant.
    pub fn inverse(&self) -> Result<Self, Error> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let dinv = det.inv()?;
        let d = self.dim;
        let n = self.conductor();
        let mut out = vec![FieldElement::zero(n); d * d];
        match d {
            2 => {
                out[0] = self.at(1, 1).mul(&dinv);
                out[1] = self.at(0, 1).neg().mul(&dinv);
                out[2] = self.at(1, 0).neg().mul(&dinv);
                out[3] = self.at(0, 0).mul(&dinv);
            }
            3 => {
                for i in 0..3 {
                    for j in 0..3 {
                        // cofactor expansion; adjugate is the transposed cofactor matrix
                        let mut sub = Vec::with_capacity(4);
                        for r in 0..3 {
                            for c in 0..3 {
                                if r != j && c != i {
                                    sub.push(self.at(r, c).clone());
                                }
                            }
                        }
                        let minor = sub[0].mul(&sub[3]).sub(&sub[1].mul(&sub[2]));
                        let sign = if (i + j) % 2 == 0 { minor } else { minor.neg() };
                        out[i * 3 + j] = sign.mul(&dinv);
                    }
                }
            }
            _ => unreachable!(),
        }
        Ok(SquareMatrix {
            dim: d,
            entries: out,
        })
    }

    /// Conjugate transpose (entry-wise complex conjugation).
    pub fn conj_transpose(&self) -> Self {
        let d = self.dim;
        let mut out = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                out.push(self.at(j, i).conj());
            }
        }
        SquareMatrix {
            dim: d,
            entries: out,
        }
    }

    /// Entry-wise Galois action.
    pub fn apply_galois(&self, g: &GaloisMap) -> Result<Self, Error> {
        Ok(SquareMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|e| e.apply_galois(g))
                .collect::<Result<_, _>>()?,
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = SquareMatrix::identity(self.dim, self.conductor());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Some scalar lambda with `self = lambda * I`, if the matrix is scalar.
    pub fn scalar_value(&self) -> Option<FieldElement> {
        let d = self.dim;
        let first = self.at(0, 0);
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    if self.at(i, j) != first {
                        return None;
                    }
                } else if !self.at(i, j).is_zero() {
                    return None;
                }
            }
        }
        Some(first.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value()
            .map_or(false, |s| s.is_rational() == Some(Rational::from_integer(1.into())))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.dim);
        let n = self.conductor();
        (0..self.dim)
            .map(|i| {
                let mut acc = FieldElement::zero(n);
                for (k, x) in v.iter().enumerate() {
                    acc = acc.add(&self.at(i, k).mul(x));
                }
                acc
            })
            .collect()
    }
}

impl std::fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SquareMatrix(dim={}, N={})", self.dim, self.conductor())
    }
}

impl Serialize for SquareMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut rows = s.serialize_seq(Some(self.dim))?;
        for i in 0..self.dim {
            let row: Vec<&FieldElement> = (0..self.dim).map(|j| self.at(i, j)).collect();
            rows.serialize_element(&row)?;
        }
        rows.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm_j(n: u32) -> SquareMatrix {
        let z = || FieldElement::zero(n);
        let o = || FieldElement::one(n);
        SquareMatrix::new(3, vec![z(), z(), o(), o(), z(), z(), z(), o(), z()])
    }

    #[test]
    fn j_cubed_is_identity_with_det_one() {
        let j = perm_j(15);
        assert!(j.pow(3).is_identity());
        assert_eq!(j.det(), FieldElement::one(15));
    }

    #[test]
    fn inverse_roundtrip() {
        let n = 15;
        let u = FieldElement::zeta(n, 1);
        let tau = FieldElement::one(n)
            .add(&FieldElement::sqrt_minus7(n))
            .scale(&Rational::new((-1).into(), 2.into()));
        let m = SquareMatrix::new(
            2,
            vec![u.pow(2), tau.clone(), FieldElement::zero(n), u.conj()],
        );
        let mi = m.inverse().unwrap();
        assert!(m.mul(&mi).is_identity());
        assert!(mi.mul(&m).is_identity());
    }

    #[test]
    fn conj_transpose_is_antimultiplicative() {
        let n = 15;
        let u = FieldElement::zeta(n, 1);
        let s = FieldElement::sqrt_minus7(n);
        let a = SquareMatrix::new(2, vec![u.clone(), s.clone(), u.pow(4), FieldElement::one(n)]);
        let b = SquareMatrix::new(2, vec![s.neg(), u.pow(7), FieldElement::one(n), u.conj()]);
        assert_eq!(a.mul(&b).conj_transpose(), b.conj_transpose().mul(&a.conj_transpose()));
    }

    #[test]
    fn galois_commutes_with_product() {
        let n = 15;
        let u = FieldElement::zeta(n, 1);
        let s = FieldElement::sqrt_minus7(n);
        let a = SquareMatrix::new(2, vec![u.clone(), s.clone(), u.pow(4), FieldElement::one(n)]);
        let b = SquareMatrix::new(2, vec![s.neg(), u.pow(7), FieldElement::one(n), u.conj()]);
        for g in GaloisMap::all(n) {
            assert_eq!(
                a.mul(&b).apply_galois(&g).unwrap(),
                a.apply_galois(&g).unwrap().mul(&b.apply_galois(&g).unwrap())
            );
        }
    }

    #[test]
    fn scalar_detection() {
        let id = SquareMatrix::identity(3, 15);
        assert!(id.scalar_value().is_some());
        let u = FieldElement::zeta(15, 1);
        let m = id.scale(&u);
        assert_eq!(m.scalar_value(), Some(u));
        let j = perm_j(15);
        assert!(j.scalar_value().is_none());
    }
}
