//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Elements are vectors of phi(N) rationals in the power basis
//! `1, zeta, ..., zeta^(phi(N)-1)`, reduced modulo the N-th cyclotomic
//! polynomial. A per-conductor table caches the reductions of all powers
//! `zeta^m`, which makes multiplication and Galois substitution cheap.

use num_integer::Integer as _;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::interval::{ComplexInterval, RealInterval};
use crate::qpoly::QPoly;
use crate::{Error, Integer, Rational};

struct CycloCtx {
    phi: usize,
    modulus: QPoly,
    /// zeta^m in the power basis, for m in 0..max(N, 2*phi - 1)
    powers: Vec<Vec<Rational>>,
}

static CONTEXTS: Lazy<RwLock<HashMap<u32, Arc<CycloCtx>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn context(n: u32) -> Arc<CycloCtx> {
    if let Some(ctx) = CONTEXTS.read().unwrap().get(&n) {
        return ctx.clone();
    }
    let modulus = QPoly::cyclotomic(n);
    let phi = modulus.degree().unwrap();
    let count = (n as usize).max(2 * phi - 1);
    let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(count);
    let mut cur = vec![Rational::zero(); phi];
    cur[0] = Rational::one();
    powers.push(cur.clone());
    for _ in 1..count {
        // multiply by zeta: shift up, reduce the overflow with the modulus
        let top = cur[phi - 1].clone();
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = Rational::zero();
        if !top.is_zero() {
            for i in 0..phi {
                cur[i] -= &top * &modulus.coeffs()[i];
            }
        }
        powers.push(cur.clone());
    }
    let ctx = Arc::new(CycloCtx {
        phi,
        modulus,
        powers,
    });
    CONTEXTS.write().unwrap().insert(n, ctx.clone());
    ctx
}

/// Euler's totient.
pub fn phi(n: u32) -> usize {
    context(n).phi
}

pub fn cyclotomic_modulus(n: u32) -> QPoly {
    context(n).modulus.clone()
}

/// An element of `Q(zeta_N)` in the reduced power basis.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElement {
    n: u32,
    coeffs: Vec<Rational>,
}

impl CycloElement {
    pub fn zero(n: u32) -> Self {
        CycloElement {
            n,
            coeffs: vec![Rational::zero(); phi(n)],
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rational::one())
    }

    pub fn from_rational(n: u32, q: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); phi(n)];
        coeffs[0] = q;
        CycloElement { n, coeffs }
    }

    /// zeta_N^k.
    pub fn root_of_unity(n: u32, k: u32) -> Self {
        let ctx = context(n);
        CycloElement {
            n,
            coeffs: ctx.powers[(k % n) as usize].clone(),
        }
    }

    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), phi(n), "coefficient vector length");
        CycloElement { n, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check(&self, o: &Self) -> Result<(), Error> {
        if self.n != o.n {
            Err(Error::ConductorMismatch(self.n, o.n))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o).expect("conductor mismatch");
        CycloElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o).expect("conductor mismatch");
        CycloElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CycloElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycloElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o).expect("conductor mismatch");
        let ctx = context(self.n);
        let d = ctx.phi;
        let mut conv = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut out = conv[..d].to_vec();
        for (m, c) in conv.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (i, p) in ctx.powers[m].iter().enumerate() {
                if !p.is_zero() {
                    out[i] += c * p;
                }
            }
        }
        CycloElement {
            n: self.n,
            coeffs: out,
        }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ctx = context(self.n);
        let poly = QPoly::new(self.coeffs.clone());
        let (g, s, _) = poly.xgcd(&ctx.modulus);
        debug_assert!(g.degree() == Some(0));
        let inv_g = Rational::one() / g.coeff(0);
        let s = s.scale(&inv_g).rem(&ctx.modulus);
        let mut coeffs = vec![Rational::zero(); ctx.phi];
        for (i, c) in s.coeffs().iter().enumerate() {
            coeffs[i] = c.clone();
        }
        Ok(CycloElement { n: self.n, coeffs })
    }

    pub fn div(&self, o: &Self) -> Result<Self, Error> {
        Ok(self.mul(&o.inv()?))
    }

    /// Galois substitution `zeta -> zeta^k`; requires gcd(k, N) = 1.
    pub fn galois(&self, k: u32) -> Result<Self, Error> {
        let n = self.n;
        if Integer::from(k).gcd(&Integer::from(n)) != Integer::one() {
            return Err(Error::NonUnitGaloisIndex { k, n });
        }
        let ctx = context(n);
        let mut out = vec![Rational::zero(); ctx.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = ((i as u64 * k as u64) % n as u64) as usize;
            for (j, p) in ctx.powers[m].iter().enumerate() {
                if !p.is_zero() {
                    out[j] += c * p;
                }
            }
        }
        Ok(CycloElement { n, coeffs: out })
    }

    /// Complex conjugation `zeta -> zeta^(N-1)`.
    pub fn conj(&self) -> Self {
        self.galois(self.n - 1).expect("N-1 is a unit mod N")
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycloElement::one(self.n);
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

    /// Monic minimal polynomial over Q by exact linear-dependence search.
    pub fn minimal_polynomial(&self) -> QPoly {
        let dim = phi(self.n);
        let mut span = crate::field::RationalSpan::new(dim);
        let mut power = CycloElement::one(self.n);
        for _ in 0..=dim {
            if let Some(combo) = span.insert(power.coeffs().to_vec()) {
                let lead = combo.last().unwrap().clone();
                return QPoly::new(combo.iter().map(|c| c / &lead).collect());
            }
            power = power.mul(self);
        }
        unreachable!("degree bounded by phi(N)")
    }

    /// Express `self` as a Q-linear combination of powers of `theta`, if possible.
    pub fn express_in_powers(&self, theta: &Self) -> Option<Vec<Rational>> {
        let deg = theta.minimal_polynomial().degree().unwrap();
        let dim = phi(self.n);
        let mut span = crate::field::RationalSpan::new(dim);
        let mut power = CycloElement::one(self.n);
        for _ in 0..deg {
            if span.insert(power.coeffs().to_vec()).is_some() {
                break;
            }
            power = power.mul(theta);
        }
        span.insert(self.coeffs().to_vec()).map(|mut combo| {
            let lead = combo.pop().unwrap();
            combo.into_iter().map(|c| -(c / &lead)).collect()
        })
    }

    /// Numeric enclosure under the canonical embedding `zeta -> exp(2 pi i / N)`.
    pub fn embed(&self, prec: usize) -> ComplexInterval {
        let n = self.n;
        let pi = RealInterval::pi(prec);
        let mut acc = ComplexInterval::zero(prec);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let frac = Rational::new(Integer::from(2 * i as u32), Integer::from(n));
            let theta = pi.mul(&RealInterval::from_rational(&frac, prec));
            let root = ComplexInterval::new(theta.cos(), theta.sin());
            acc = acc.add(&root.scale(&RealInterval::from_rational(c, prec)));
        }
        acc
    }
}

impl std::fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyclo(N={}, {})", self.n, QPoly::new(self.coeffs.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_unity_order() {
        let z = CycloElement::root_of_unity(15, 1);
        assert_eq!(z.pow(15), CycloElement::one(15));
        assert_ne!(z.pow(5), CycloElement::one(15));
        assert_ne!(z.pow(3), CycloElement::one(15));
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let z = CycloElement::root_of_unity(15, 2);
        let x = z.add(&CycloElement::from_rational(15, Rational::new(3.into(), 7.into())));
        assert_eq!(x.mul(&x.inv().unwrap()), CycloElement::one(15));
    }

    #[test]
    fn conjugation_is_involutive() {
        let z = CycloElement::root_of_unity(24, 7);
        let x = z.add(&z.pow(3)).sub(&CycloElement::one(24));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn galois_is_multiplicative() {
        let z = CycloElement::root_of_unity(15, 1);
        let x = z.add(&CycloElement::one(15));
        let y = z.pow(4).sub(&z);
        let g = 7;
        assert_eq!(
            x.mul(&y).galois(g).unwrap(),
            x.galois(g).unwrap().mul(&y.galois(g).unwrap())
        );
        assert!(z.galois(5).is_err());
    }

    #[test]
    fn two_cos_is_real_and_embeds() {
        // zeta_5 + zeta_5^-1 = 2 cos(2 pi / 5)
        let z = CycloElement::root_of_unity(5, 1);
        let x = z.add(&z.conj());
        assert_eq!(x.conj(), x);
        let v = x.embed(128);
        let expect = 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert!((v.re.mid_f64() - expect).abs() < 1e-12);
        assert!(v.im.contains_zero());
    }

    #[test]
    fn embedding_is_multiplicative_up_to_enclosure() {
        let z = CycloElement::root_of_unity(15, 1);
        let x = z.pow(2).add(&CycloElement::one(15));
        let y = z.pow(7).sub(&z.pow(3));
        let lhs = x.mul(&y).embed(160);
        let rhs = x.embed(160).mul(&y.embed(160));
        // the enclosures must overlap around the common true value
        assert!(!lhs.re.disjoint(&rhs.re));
        assert!(!lhs.im.disjoint(&rhs.im));
    }
}
