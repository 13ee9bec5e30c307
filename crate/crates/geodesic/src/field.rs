//! The composite fields `F = Q(zeta_N, sqrt(-7))` with `7` not dividing `N`,
//! their Galois maps, minimal polynomials, and certified embeddings.
//!
//! Elements are pairs `a + sqrt(-7) * b` of cyclotomic elements, giving
//! `2 phi(N)` rational coordinates. The Galois group is abelian of order
//! `2 phi(N)`: `(k, eps)` sends `zeta -> zeta^k` and `sqrt(-7) -> eps sqrt(-7)`.
//! The canonical embedding sends `zeta -> exp(2 pi i / N)` and
//! `sqrt(-7) -> +i sqrt(7)`.

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{phi, CycloElement};
use crate::interval::{ComplexInterval, RealInterval};
use crate::qpoly::QPoly;
use crate::zfactor;
use crate::{parse_rational, rational_str, Error, Integer, Rational};

/// An automorphism of `Q(zeta_N, sqrt(-7))`: `zeta -> zeta^k`, `sqrt(-7) -> eps sqrt(-7)`.
/// Also tags the complex embedding used for numerics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GaloisMap {
    n: u32,
    k: u32,
    eps: i8,
}

impl GaloisMap {
    pub fn new(n: u32, k: u32, eps: i8) -> Result<Self, Error> {
        assert!(eps == 1 || eps == -1);
        let k = k % n;
        if Integer::from(k).gcd(&Integer::from(n)) != Integer::one() {
            return Err(Error::NonUnitGaloisIndex { k, n });
        }
        Ok(GaloisMap { n, k, eps })
    }

    pub fn identity(n: u32) -> Self {
        GaloisMap { n, k: 1, eps: 1 }
    }

    /// Complex conjugation: `zeta -> zeta^(N-1)`, `sqrt(-7) -> -sqrt(-7)`.
    pub fn conjugation(n: u32) -> Self {
        GaloisMap {
            n,
            k: n - 1,
            eps: -1,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn eps(&self) -> i8 {
        self.eps
    }

    pub fn is_identity(&self) -> bool {
        self.k == 1 && self.eps == 1
    }

    /// `self` after `other` (composition of maps).
    pub fn compose(&self, other: &GaloisMap) -> Self {
        assert_eq!(self.n, other.n, "conductor mismatch");
        GaloisMap {
            n: self.n,
            k: ((self.k as u64 * other.k as u64) % self.n as u64) as u32,
            eps: self.eps * other.eps,
        }
    }

    pub fn inverse(&self) -> Self {
        // k^-1 mod n by search; n is small
        let inv = (1..self.n)
            .find(|j| (j * self.k) % self.n == 1)
            .expect("k is a unit");
        GaloisMap {
            n: self.n,
            k: inv,
            eps: self.eps,
        }
    }

    /// All `2 phi(N)` automorphisms, in a deterministic order.
    pub fn all(n: u32) -> Vec<GaloisMap> {
        let mut out = Vec::new();
        for k in 1..n {
            if Integer::from(k).gcd(&Integer::from(n)) == Integer::one() {
                for eps in [1i8, -1] {
                    out.push(GaloisMap { n, k, eps });
                }
            }
        }
        out
    }

    pub fn label(&self) -> String {
        format!("k={},eps={}", self.k, if self.eps > 0 { "+1" } else { "-1" })
    }
}

impl Serialize for GaloisMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GaloisMap", 3)?;
        st.serialize_field("N", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("eps", &self.eps)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GaloisMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(rename = "N")]
            n: u32,
            k: u32,
            eps: i8,
        }
        let r = Raw::deserialize(d)?;
        GaloisMap::new(r.n, r.k, r.eps).map_err(serde::de::Error::custom)
    }
}

/// An element `a + sqrt(-7) b` of `Q(zeta_N, sqrt(-7))`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    a: CycloElement,
    b: CycloElement,
}

impl FieldElement {
    fn assert_conductor(n: u32) {
        assert!(n % 7 != 0, "conductor divisible by 7: x^2 + 7 would split");
    }

    pub fn zero(n: u32) -> Self {
        Self::assert_conductor(n);
        FieldElement {
            a: CycloElement::zero(n),
            b: CycloElement::zero(n),
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rational::one())
    }

    pub fn from_rational(n: u32, q: Rational) -> Self {
        Self::assert_conductor(n);
        FieldElement {
            a: CycloElement::from_rational(n, q),
            b: CycloElement::zero(n),
        }
    }

    pub fn from_integer(n: u32, v: i64) -> Self {
        Self::from_rational(n, Rational::from_integer(Integer::from(v)))
    }

    /// `zeta_N^k`.
    pub fn zeta(n: u32, k: u32) -> Self {
        Self::assert_conductor(n);
        FieldElement {
            a: CycloElement::root_of_unity(n, k),
            b: CycloElement::zero(n),
        }
    }

    pub fn sqrt_minus7(n: u32) -> Self {
        Self::assert_conductor(n);
        FieldElement {
            a: CycloElement::zero(n),
            b: CycloElement::one(n),
        }
    }

    pub fn from_parts(a: CycloElement, b: CycloElement) -> Self {
        assert_eq!(a.conductor(), b.conductor());
        Self::assert_conductor(a.conductor());
        FieldElement { a, b }
    }

    pub fn cyclotomic_part(&self) -> &CycloElement {
        &self.a
    }

    pub fn quadratic_part(&self) -> &CycloElement {
        &self.b
    }

    pub fn conductor(&self) -> u32 {
        self.a.conductor()
    }

    /// Dimension of the ambient Q-vector space, `2 phi(N)`.
    pub fn dim(&self) -> usize {
        2 * phi(self.conductor())
    }

    pub fn coordinates(&self) -> Vec<Rational> {
        let mut v = self.a.coeffs().to_vec();
        v.extend_from_slice(self.b.coeffs());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> Option<Rational> {
        if self.b.is_zero() {
            self.a.is_rational()
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        FieldElement {
            a: self.a.add(&o.a),
            b: self.b.add(&o.b),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        FieldElement {
            a: self.a.sub(&o.a),
            b: self.b.sub(&o.b),
        }
    }

    pub fn neg(&self) -> Self {
        FieldElement {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldElement {
            a: self.a.scale(q),
            b: self.b.scale(q),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        // (a1 + s b1)(a2 + s b2) = (a1 a2 - 7 b1 b2) + s (a1 b2 + a2 b1)
        let seven = Rational::from_integer(7.into());
        let a = self
            .a
            .mul(&o.a)
            .sub(&self.b.mul(&o.b).scale(&seven));
        let b = self.a.mul(&o.b).add(&self.b.mul(&o.a));
        FieldElement { a, b }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (a + s b)(a - s b) = a^2 + 7 b^2, nonzero in Q(zeta_N) since 7 does not divide N
        let seven = Rational::from_integer(7.into());
        let norm = self.a.mul(&self.a).add(&self.b.mul(&self.b).scale(&seven));
        let ninv = norm.inv()?;
        Ok(FieldElement {
            a: self.a.mul(&ninv),
            b: self.b.mul(&ninv).neg(),
        })
    }

    pub fn div(&self, o: &Self) -> Result<Self, Error> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElement::one(self.conductor());
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

    /// Complex conjugation: `zeta -> zeta^(N-1)`, `sqrt(-7) -> -sqrt(-7)`.
    pub fn conj(&self) -> Self {
        FieldElement {
            a: self.a.conj(),
            b: self.b.conj().neg(),
        }
    }

    /// Fixed by complex conjugation, i.e. real at every embedding compatible with it.
    pub fn is_conj_invariant(&self) -> bool {
        self.conj() == *self
    }

    pub fn apply_galois(&self, g: &GaloisMap) -> Result<Self, Error> {
        if g.conductor() != self.conductor() {
            return Err(Error::ConductorMismatch(g.conductor(), self.conductor()));
        }
        let a = self.a.galois(g.k)?;
        let mut b = self.b.galois(g.k)?;
        if g.eps < 0 {
            b = b.neg();
        }
        Ok(FieldElement { a, b })
    }

    /// Numeric enclosure of the image under the embedding tagged by `g`.
    pub fn embed(&self, g: &GaloisMap, prec: usize) -> Result<ComplexInterval, Error> {
        let moved = self.apply_galois(g)?;
        Ok(moved.embed_canonical(prec))
    }

    /// Canonical embedding: `zeta -> exp(2 pi i/N)`, `sqrt(-7) -> +i sqrt(7)`.
    pub fn embed_canonical(&self, prec: usize) -> ComplexInterval {
        let av = self.a.embed(prec);
        let bv = self.b.embed(prec);
        let sqrt7 = RealInterval::from_integer(&Integer::from(7), prec)
            .sqrt()
            .expect("sqrt of 7");
        av.add(&bv.scale(&sqrt7).mul_i())
    }

    /// Exact sign of the image of `self` under the embedding tagged by `g`.
    /// The image must be real there (fixed by conjugation after `g`).
    pub fn sign_at(&self, g: &GaloisMap) -> Result<i8, Error> {
        let moved = self.apply_galois(g)?;
        if !moved.is_conj_invariant() {
            return Err(Error::NonRealElement);
        }
        if moved.is_zero() {
            return Ok(0);
        }
        let mut prec = 64usize;
        loop {
            let v = moved.embed_canonical(prec);
            if let Some(s) = v.re.sign() {
                if s != 0 {
                    return Ok(s);
                }
            }
            prec *= 2;
            if prec > 1 << 20 {
                return Err(Error::PrecisionExhausted {
                    bits: prec as u32,
                    what: "sign determination of a nonzero element".into(),
                });
            }
        }
    }

    /// Monic minimal polynomial over Q, by exact linear-dependence search over powers.
    pub fn minimal_polynomial(&self) -> QPoly {
        let dim = self.dim();
        let mut power = FieldElement::one(self.conductor());
        let mut span = RationalSpan::new(dim);
        for k in 0..=dim {
            if let Some(combo) = span.insert(power.coordinates()) {
                // combo has length k+1: sum combo[j] * x^j = 0 with combo[k] != 0
                let lead = combo.last().unwrap().clone();
                let coeffs: Vec<Rational> = combo.iter().map(|c| c / &lead).collect();
                let _ = k;
                return QPoly::new(coeffs);
            }
            power = power.mul(self);
        }
        unreachable!("an element of a degree-{dim} field has degree at most {dim}")
    }

    /// True when the minimal polynomial has integer coefficients.
    pub fn is_algebraic_integer(&self) -> bool {
        self.minimal_polynomial().has_integer_coeffs()
    }

    /// Express `self` as a Q-linear combination of powers of `theta`, if possible.
    pub fn express_in_powers(&self, theta: &Self) -> Option<Vec<Rational>> {
        let deg = theta.minimal_polynomial().degree().unwrap();
        let dim = self.dim();
        let mut span = RationalSpan::new(dim);
        let mut power = FieldElement::one(self.conductor());
        for _ in 0..deg {
            if span.insert(power.coordinates()).is_some() {
                break;
            }
            power = power.mul(theta);
        }
        span.insert(self.coordinates()).map(|mut combo| {
            // combo: sum combo[j] theta^j + combo[last] * self = 0
            let lead = combo.pop().unwrap();
            combo
                .into_iter()
                .map(|c| -(c / &lead))
                .collect()
        })
    }
}

impl std::fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldElement(N={}, a={:?}, b={:?})", self.conductor(), self.a, self.b)
    }
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FieldElement", 3)?;
        st.serialize_field("N", &self.conductor())?;
        st.serialize_field(
            "a",
            &self.a.coeffs().iter().map(rational_str).collect::<Vec<_>>(),
        )?;
        st.serialize_field(
            "b",
            &self.b.coeffs().iter().map(rational_str).collect::<Vec<_>>(),
        )?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(rename = "N")]
            n: u32,
            a: Vec<String>,
            b: Vec<String>,
        }
        let r = Raw::deserialize(d)?;
        let parse = |v: &[String]| -> Result<Vec<Rational>, D::Error> {
            v.iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        };
        if r.a.len() != phi(r.n) || r.b.len() != phi(r.n) {
            return Err(serde::de::Error::custom("coefficient length != phi(N)"));
        }
        Ok(FieldElement::from_parts(
            CycloElement::from_coeffs(r.n, parse(&r.a)?),
            CycloElement::from_coeffs(r.n, parse(&r.b)?),
        ))
    }
}

/// Incremental row echelon over Q with dependency tracking.
/// `insert` returns the combination over previously inserted vectors
/// (including the new one, last) when the new vector is dependent.
pub struct RationalSpan {
    dim: usize,
    /// rows: (reduced vector, combination over inserted originals)
    rows: Vec<(Vec<Rational>, Vec<Rational>)>,
    inserted: usize,
}

impl RationalSpan {
    pub fn new(dim: usize) -> Self {
        RationalSpan {
            dim,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, mut v: Vec<Rational>) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.dim);
        let mut combo = vec![Rational::zero(); self.inserted + 1];
        combo[self.inserted] = Rational::one();
        for (row, rcombo) in &self.rows {
            let pivot = row.iter().position(|c| !c.is_zero()).unwrap();
            if v[pivot].is_zero() {
                continue;
            }
            let factor = v[pivot].clone() / row[pivot].clone();
            for i in 0..self.dim {
                let t = &factor * &row[i];
                v[i] -= t;
            }
            for (i, rc) in rcombo.iter().enumerate() {
                let t = &factor * rc;
                combo[i] -= t;
            }
        }
        self.inserted += 1;
        if v.iter().all(|c| c.is_zero()) {
            Some(combo)
        } else {
            let mut stored_combo = combo;
            stored_combo.resize(self.inserted, Rational::zero());
            self.rows.push((v, stored_combo));
            // keep combos padded consistently
            for (_, rc) in self.rows.iter_mut() {
                rc.resize(self.inserted, Rational::zero());
            }
            None
        }
    }

    /// Whether `v` lies in the current span (does not modify the span).
    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        for (row, _) in &self.rows {
            let pivot = row.iter().position(|c| !c.is_zero()).unwrap();
            if v[pivot].is_zero() {
                continue;
            }
            let factor = v[pivot].clone() / row[pivot].clone();
            for i in 0..self.dim {
                let t = &factor * &row[i];
                v[i] -= t;
            }
        }
        v.iter().all(|c| c.is_zero())
    }
}

/// True iff the monic irreducible polynomial has all roots real.
pub fn is_totally_real(p: &QPoly) -> Result<bool, Error> {
    if !zfactor::is_irreducible(p) {
        return Err(Error::ReduciblePolynomial(p.to_string()));
    }
    Ok(p.count_real_roots() == p.degree().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(n: u32) -> FieldElement {
        // -(1 + sqrt(-7)) / 2
        FieldElement::one(n)
            .add(&FieldElement::sqrt_minus7(n))
            .scale(&Rational::new((-1).into(), 2.into()))
    }

    #[test]
    fn u_to_the_15_is_one() {
        let u = FieldElement::zeta(15, 1);
        assert_eq!(u.pow(15), FieldElement::one(15));
    }

    #[test]
    fn conj_of_tau_flips_sign_of_root() {
        let t = tau(15);
        let expected = FieldElement::one(15)
            .sub(&FieldElement::sqrt_minus7(15))
            .scale(&Rational::new((-1).into(), 2.into()));
        assert_eq!(t.conj(), expected);
    }

    #[test]
    fn alpha_embeds_to_golden_value() {
        // alpha = 2 - u^3 - conj(u)^3 = 2 - 2 cos(2 pi/5) at the identity embedding
        let u = FieldElement::zeta(15, 1);
        let alpha = FieldElement::from_integer(15, 2)
            .sub(&u.pow(3))
            .sub(&u.conj().pow(3));
        let v = alpha
            .embed(&GaloisMap::identity(15), 128)
            .unwrap();
        let expect = 2.0 - 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert!((v.re.mid_f64() - expect).abs() < 1e-12, "{}", v.re.mid_f64());
        assert!((expect - 1.3819660112501051).abs() < 1e-12);
        assert!(v.im.contains_zero());
    }

    #[test]
    fn galois_fixing_cyclotomic_part() {
        let z = FieldElement::zeta(15, 1);
        let g = GaloisMap::new(15, 1, -1).unwrap();
        assert_eq!(z.apply_galois(&g).unwrap(), z);
        let s = FieldElement::sqrt_minus7(15);
        assert_eq!(s.apply_galois(&g).unwrap(), s.neg());
    }

    #[test]
    fn galois_sends_zeta5_to_square() {
        // u^3 is a primitive 5th root; (k=2,+1) has k = 2 mod 5
        let z5 = FieldElement::zeta(15, 3);
        let g = GaloisMap::new(15, 2, 1).unwrap();
        assert_eq!(z5.apply_galois(&g).unwrap(), z5.pow(2));
    }

    #[test]
    fn galois_is_ring_automorphism() {
        let u = FieldElement::zeta(15, 1);
        let x = u.pow(2).add(&FieldElement::sqrt_minus7(15).mul(&u));
        let y = u.pow(4).sub(&FieldElement::from_integer(15, 3));
        for g in GaloisMap::all(15) {
            assert_eq!(
                x.mul(&y).apply_galois(&g).unwrap(),
                x.apply_galois(&g).unwrap().mul(&y.apply_galois(&g).unwrap())
            );
        }
    }

    #[test]
    fn galois_group_law() {
        let u = FieldElement::zeta(15, 1);
        let x = u.add(&FieldElement::sqrt_minus7(15));
        let all = GaloisMap::all(15);
        assert_eq!(all.len(), 16);
        for g1 in &all {
            for g2 in &all {
                let composed = g1.compose(g2);
                assert_eq!(
                    x.apply_galois(g2).unwrap().apply_galois(g1).unwrap(),
                    x.apply_galois(&composed).unwrap()
                );
            }
        }
    }

    #[test]
    fn minimal_polynomials() {
        assert_eq!(
            FieldElement::zero(15).minimal_polynomial(),
            QPoly::from_int_coeffs(&[0, 1])
        );
        assert_eq!(
            FieldElement::sqrt_minus7(15).minimal_polynomial(),
            QPoly::from_int_coeffs(&[7, 0, 1])
        );
        // tau is an algebraic integer with minimal polynomial x^2 + x + 2
        let t = tau(15);
        assert_eq!(t.minimal_polynomial(), QPoly::from_int_coeffs(&[2, 1, 1]));
        assert!(t.is_algebraic_integer());
        // zeta_15 has the cyclotomic minimal polynomial
        assert_eq!(
            FieldElement::zeta(15, 1).minimal_polynomial(),
            QPoly::cyclotomic(15)
        );
    }

    #[test]
    fn minpoly_vanishes_and_is_galois_invariant() {
        let u = FieldElement::zeta(15, 1);
        let x = u.pow(3).add(&FieldElement::sqrt_minus7(15).scale(&Rational::new(1.into(), 2.into())));
        let mp = x.minimal_polynomial();
        // evaluate exactly in the field
        let mut acc = FieldElement::zero(15);
        for c in mp.coeffs().iter().rev() {
            acc = acc.mul(&x).add(&FieldElement::from_rational(15, c.clone()));
        }
        assert!(acc.is_zero());
        for g in GaloisMap::all(15) {
            assert_eq!(x.apply_galois(&g).unwrap().minimal_polynomial(), mp);
        }
    }

    #[test]
    fn sign_at_examples() {
        let u = FieldElement::zeta(15, 1);
        let alpha = FieldElement::from_integer(15, 2)
            .sub(&u.pow(3))
            .sub(&u.conj().pow(3));
        let id = GaloisMap::identity(15);
        assert_eq!(alpha.sign_at(&id).unwrap(), 1);
        assert_eq!(FieldElement::zero(15).sign_at(&id).unwrap(), 0);
        let below = alpha.sub(&FieldElement::from_integer(15, 3));
        assert_eq!(below.sign_at(&id).unwrap(), -1);
        // non-real input is rejected
        assert!(matches!(
            u.sign_at(&id),
            Err(Error::NonRealElement)
        ));
    }

    #[test]
    fn totally_real_detection() {
        assert!(is_totally_real(&QPoly::from_int_coeffs(&[1, 7, 9, -7, 1])).unwrap());
        assert!(!is_totally_real(&QPoly::from_int_coeffs(&[7, 0, 1])).unwrap());
        assert!(is_totally_real(&QPoly::from_int_coeffs(&[-2, 0, 1])).unwrap());
        assert!(matches!(
            is_totally_real(&QPoly::from_int_coeffs(&[-1, 0, 1])),
            Err(Error::ReduciblePolynomial(_))
        ));
    }

    #[test]
    fn embedding_respects_conjugate_choice() {
        // tau under (1, -1) embeds near -(1 - i sqrt 7)/2
        let t = tau(15);
        let g = GaloisMap::new(15, 1, -1).unwrap();
        let v = t.embed(&g, 128).unwrap();
        assert!((v.re.mid_f64() + 0.5).abs() < 1e-12);
        assert!((v.im.mid_f64() - 7f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn express_in_powers_roundtrip() {
        let u = FieldElement::zeta(15, 1);
        let z5 = u.pow(3);
        let theta = z5.add(&z5.conj()); // 2cos(2pi/5), degree 2
        let elt = theta.mul(&theta).add(&theta.scale(&Rational::new(3.into(), 2.into())));
        let combo = elt.express_in_powers(&theta).unwrap();
        assert_eq!(combo.len(), 2);
        // reconstruct
        let mut acc = FieldElement::zero(15);
        let mut pw = FieldElement::one(15);
        for c in &combo {
            acc = acc.add(&pw.scale(c));
            pw = pw.mul(&theta);
        }
        assert_eq!(acc, elt);
        // sqrt(-7) is not in Q(theta)
        assert!(FieldElement::sqrt_minus7(15).express_in_powers(&theta).is_none());
    }
}
