//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored low degree first with no trailing zeros; the zero
//! polynomial has an empty coefficient vector. These polynomials back minimal
//! polynomials, cyclotomic moduli, resultants and discriminants, and Sturm
//! real-root counting.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::{parse_rational, rational_str, Error, Integer, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(Rational::one())
    }

    pub fn x() -> Self {
        QPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        QPoly::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(Integer::from(c)))
                .collect(),
        )
    }

    /// Monomial `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        QPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        self.scale(&(Rational::one() / lc))
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        QPoly::new(v)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &QPoly) -> (QPoly, QPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.coeffs.len() - 1;
        let lc = div.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lc;
            if !c.is_zero() {
                for (j, b) in div.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) && rem.len() > dd {
                rem.pop();
            }
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn rem(&self, div: &QPoly) -> QPoly {
        self.divrem(div).1
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`.
    /// `g` is not normalized to monic.
    pub fn xgcd(&self, other: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        (r0, s0, t0)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(Integer::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut v = Rational::zero();
        for c in self.coeffs.iter().rev() {
            v = v * x + c;
        }
        v
    }

    /// Substitute `a*x + b` for the variable.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> QPoly {
        let lin = QPoly::new(vec![b.clone(), a.clone()]);
        let mut acc = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&QPoly::constant(c.clone()));
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
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

    /// Resultant of `self` and `other`.
    pub fn resultant(&self, other: &QPoly) -> Rational {
        let (mut f, mut g) = (self.clone(), other.clone());
        if f.is_zero() || g.is_zero() {
            return Rational::zero();
        }
        let mut acc = Rational::one();
        let mut sign = 1i32;
        loop {
            let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
            if dg == 0 {
                let c = g.leading();
                return acc * pow_rat(&c, df as u32) * Rational::from_integer(Integer::from(sign));
            }
            if df < dg {
                std::mem::swap(&mut f, &mut g);
                if df % 2 == 1 && dg % 2 == 1 {
                    sign = -sign;
                }
                continue;
            }
            let r = f.rem(&g);
            if r.is_zero() {
                return Rational::zero();
            }
            let dr = r.degree().unwrap();
            acc *= pow_rat(&g.leading(), (df - dr) as u32);
            if df % 2 == 1 && dg % 2 == 1 {
                sign = -sign;
            }
            f = g;
            g = r;
        }
    }

    /// Polynomial discriminant `(-1)^(n(n-1)/2) res(p, p') / lc(p)`.
    pub fn discriminant(&self) -> Rational {
        let n = self.degree().expect("discriminant of zero polynomial");
        assert!(n >= 1);
        let res = self.resultant(&self.derivative());
        let s = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        res / self.leading() * Rational::from_integer(Integer::from(s))
    }

    pub fn squarefree_part(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Number of distinct real roots, by Sturm's theorem on the squarefree part.
    pub fn count_real_roots(&self) -> usize {
        let p = self.squarefree_part();
        if p.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let mut seq = vec![p.clone(), p.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            seq.push(r);
        }
        seq.pop();
        // sign at +inf: sign of leading coeff; at -inf: times (-1)^deg
        let signs: Vec<(i8, i8)> = seq
            .iter()
            .map(|q| {
                let lc = q.leading();
                let s = if lc.is_zero() {
                    0
                } else if lc.is_positive() {
                    1i8
                } else {
                    -1
                };
                let d = q.degree().unwrap_or(0);
                let neg = if d % 2 == 0 { s } else { -s };
                (neg, s)
            })
            .collect();
        let variations = |pick: fn(&(i8, i8)) -> i8| {
            let mut count = 0;
            let mut last = 0i8;
            for sg in signs.iter().map(pick) {
                if sg == 0 {
                    continue;
                }
                if last != 0 && sg != last {
                    count += 1;
                }
                last = sg;
            }
            count
        };
        let vneg = variations(|t| t.0);
        let vpos = variations(|t| t.1);
        vneg - vpos
    }

    /// The N-th cyclotomic polynomial.
    pub fn cyclotomic(n: u32) -> QPoly {
        assert!(n >= 1);
        // x^n - 1 divided by the cyclotomic polynomials of proper divisors
        let mut num = QPoly::monomial(Rational::one(), n as usize).sub(&QPoly::one());
        for d in 1..n {
            if n % d == 0 {
                num = num.divrem(&QPoly::cyclotomic(d)).0;
            }
        }
        num
    }

    /// Clear denominators and content: primitive integer coefficients with positive leading sign.
    pub fn primitive_integer_coeffs(&self) -> Vec<Integer> {
        use num_integer::Integer as _;
        if self.is_zero() {
            return vec![];
        }
        let mut den = Integer::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut content = Integer::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if !content.is_zero() {
            for c in ints.iter_mut() {
                *c = &*c / &content;
            }
        }
        if ints.last().map_or(false, |c| c.is_negative()) {
            for c in ints.iter_mut() {
                *c = -&*c;
            }
        }
        ints
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_str).collect()
    }

    pub fn from_coeff_strings(strs: &[String]) -> Result<QPoly, Error> {
        let coeffs = strs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QPoly::new(coeffs))
    }
}

fn pow_rat(c: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= c;
    }
    acc
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{}", rational_str(&mag))?;
            }
            if i >= 1 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if i >= 2 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_coeff_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        QPoly::from_coeff_strings(&strs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn divrem_roundtrip() {
        let f = p(&[1, 0, -3, 0, 1]);
        let g = p(&[2, 1]);
        let (q, r) = f.divrem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.degree().unwrap_or(0) < g.degree().unwrap());
    }

    #[test]
    fn gcd_of_product() {
        let a = p(&[-1, 1]); // x - 1
        let b = p(&[1, 1]); // x + 1
        let c = p(&[3, 0, 1]);
        assert_eq!(a.mul(&c).gcd(&b.mul(&c)), c.monic());
    }

    #[test]
    fn resultant_known_values() {
        // res(x^2 - 2, x^2 - 3) = product of (2 - 3) over root pairs = 1
        assert_eq!(
            p(&[-2, 0, 1]).resultant(&p(&[-3, 0, 1])),
            Rational::from_integer(1.into())
        );
        // disc(x^2 + x + 2) = 1 - 8 = -7
        assert_eq!(
            p(&[2, 1, 1]).discriminant(),
            Rational::from_integer((-7).into())
        );
    }

    #[test]
    fn discriminant_of_delta_quartic_is_6125() {
        let q = p(&[1, 7, 9, -7, 1]);
        assert_eq!(q.discriminant(), Rational::from_integer(6125.into()));
    }

    #[test]
    fn sturm_counts() {
        // x^4 - 7x^3 + 9x^2 + 7x + 1 is totally real (4 real roots)
        assert_eq!(p(&[1, 7, 9, -7, 1]).count_real_roots(), 4);
        assert_eq!(p(&[7, 0, 1]).count_real_roots(), 0); // x^2 + 7
        assert_eq!(p(&[-2, 0, 1]).count_real_roots(), 2);
        assert_eq!(p(&[0, 0, 1]).count_real_roots(), 1); // x^2, squarefree part x
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(QPoly::cyclotomic(1), p(&[-1, 1]));
        assert_eq!(QPoly::cyclotomic(2), p(&[1, 1]));
        assert_eq!(QPoly::cyclotomic(7), p(&[1, 1, 1, 1, 1, 1, 1]));
        // phi_15 = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1
        assert_eq!(QPoly::cyclotomic(15), p(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
        assert_eq!(QPoly::cyclotomic(24).degree(), Some(8));
        assert_eq!(QPoly::cyclotomic(36).degree(), Some(12));
    }

    #[test]
    fn display_and_parse() {
        let f = p(&[1, 7, 9, -7, 1]);
        assert_eq!(f.to_string(), "x^4 - 7*x^3 + 9*x^2 + 7*x + 1");
        let round = QPoly::from_coeff_strings(&f.to_coeff_strings()).unwrap();
        assert_eq!(round, f);
    }
}
