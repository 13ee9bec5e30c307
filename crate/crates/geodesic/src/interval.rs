//! Certified interval arithmetic on arbitrary-precision floats.
//!
//! Every operation rounds the lower endpoint down and the upper endpoint up,
//! so the true value of any expression stays inside its interval. Operations
//! that can fail at the current precision (division through zero, square roots
//! of sign-ambiguous quantities, branch cuts) return `None`; callers escalate
//! precision and retry.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_traits::Signed;
use std::cell::RefCell;
use std::cmp::Ordering;

use crate::{Integer, Rational};

const DOWN: RoundingMode = RoundingMode::Down;
const UP: RoundingMode = RoundingMode::Up;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// A closed interval `[lo, hi]` guaranteed to contain the exact value.
#[derive(Clone, Debug)]
pub struct RealInterval {
    lo: BigFloat,
    hi: BigFloat,
    prec: usize,
}

fn bf_from_integer(n: &Integer, prec: usize, rm: RoundingMode) -> BigFloat {
    let hex = n.abs().to_str_radix(16);
    let signed = if n.is_negative() {
        // directed rounding flips for negated magnitudes
        let flipped = match rm {
            RoundingMode::Down => UP,
            RoundingMode::Up => DOWN,
            other => other,
        };
        let mag = with_consts(|cc| {
            BigFloat::parse(&hex, astro_float::Radix::Hex, prec, flipped, cc)
        });
        mag.neg()
    } else {
        with_consts(|cc| BigFloat::parse(&hex, astro_float::Radix::Hex, prec, rm, cc))
    };
    signed
}

fn cmp_bf(a: &BigFloat, b: &BigFloat) -> Ordering {
    match a.cmp(b) {
        Some(c) => c.cmp(&0),
        None => panic!("NaN in interval arithmetic"),
    }
}

/// Sign of a float with zero treated as 0 (astro-float's +0 reports positive).
fn bf_sign(v: &BigFloat) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_negative() {
        -1
    } else {
        1
    }
}

fn bf_min(a: BigFloat, b: BigFloat) -> BigFloat {
    if cmp_bf(&a, &b) == Ordering::Greater {
        b
    } else {
        a
    }
}

fn bf_max(a: BigFloat, b: BigFloat) -> BigFloat {
    if cmp_bf(&a, &b) == Ordering::Less {
        b
    } else {
        a
    }
}

impl RealInterval {
    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn point(v: BigFloat, prec: usize) -> Self {
        RealInterval {
            lo: v.clone(),
            hi: v,
            prec,
        }
    }

    pub fn zero(prec: usize) -> Self {
        Self::point(BigFloat::from_i8(0, prec), prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::point(BigFloat::from_i8(1, prec), prec)
    }

    pub fn from_integer(n: &Integer, prec: usize) -> Self {
        RealInterval {
            lo: bf_from_integer(n, prec, DOWN),
            hi: bf_from_integer(n, prec, UP),
            prec,
        }
    }

    pub fn from_rational(q: &Rational, prec: usize) -> Self {
        let num = Self::from_integer(q.numer(), prec);
        let den = Self::from_integer(q.denom(), prec);
        num.div(&den).expect("nonzero denominator")
    }

    pub fn from_f64(v: f64, prec: usize) -> Self {
        Self::point(BigFloat::from_f64(v, prec), prec)
    }

    /// pi at the given precision.
    pub fn pi(prec: usize) -> Self {
        RealInterval {
            lo: with_consts(|cc| cc.pi(prec, DOWN)),
            hi: with_consts(|cc| cc.pi(prec, UP)),
            prec,
        }
    }

    pub fn lo(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi(&self) -> &BigFloat {
        &self.hi
    }

    pub fn neg(&self) -> Self {
        RealInterval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            prec: self.prec,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        RealInterval {
            lo: self.lo.add(&o.lo, p, DOWN),
            hi: self.hi.add(&o.hi, p, UP),
            prec: p,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        let cands = [
            (&self.lo, &o.lo),
            (&self.lo, &o.hi),
            (&self.hi, &o.lo),
            (&self.hi, &o.hi),
        ];
        let mut lo: Option<BigFloat> = None;
        let mut hi: Option<BigFloat> = None;
        for (a, b) in cands {
            let d = a.mul(b, p, DOWN);
            let u = a.mul(b, p, UP);
            lo = Some(match lo {
                None => d,
                Some(x) => bf_min(x, d),
            });
            hi = Some(match hi {
                None => u,
                Some(x) => bf_max(x, u),
            });
        }
        RealInterval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
            prec: p,
        }
    }

    /// None when the divisor interval contains zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.contains_zero() {
            return None;
        }
        let p = self.prec.max(o.prec);
        let cands = [
            (&self.lo, &o.lo),
            (&self.lo, &o.hi),
            (&self.hi, &o.lo),
            (&self.hi, &o.hi),
        ];
        let mut lo: Option<BigFloat> = None;
        let mut hi: Option<BigFloat> = None;
        for (a, b) in cands {
            let d = a.div(b, p, DOWN);
            let u = a.div(b, p, UP);
            lo = Some(match lo {
                None => d,
                Some(x) => bf_min(x, d),
            });
            hi = Some(match hi {
                None => u,
                Some(x) => bf_max(x, u),
            });
        }
        Some(RealInterval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
            prec: p,
        })
    }

    pub fn contains_zero(&self) -> bool {
        bf_sign(&self.lo) <= 0 && bf_sign(&self.hi) >= 0
    }

    pub fn contains(&self, v: &Self) -> bool {
        cmp_bf(&self.lo, &v.lo) != Ordering::Greater && cmp_bf(&self.hi, &v.hi) != Ordering::Less
    }

    pub fn contains_f64(&self, v: f64) -> bool {
        self.contains(&Self::from_f64(v, self.prec))
    }

    /// Certain sign: +1, -1, or None when the interval straddles zero.
    pub fn sign(&self) -> Option<i8> {
        if bf_sign(&self.lo) > 0 {
            Some(1)
        } else if bf_sign(&self.hi) < 0 {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn definitely_positive(&self) -> bool {
        bf_sign(&self.lo) > 0
    }

    pub fn definitely_negative(&self) -> bool {
        bf_sign(&self.hi) < 0
    }

    pub fn definitely_less(&self, o: &Self) -> bool {
        cmp_bf(&self.hi, &o.lo) == Ordering::Less
    }

    /// True if the two intervals have no point in common.
    pub fn disjoint(&self, o: &Self) -> bool {
        self.definitely_less(o) || o.definitely_less(self)
    }

    pub fn width(&self) -> BigFloat {
        self.hi.sub(&self.lo, self.prec, UP)
    }

    /// Width bounded by 2^-bits.
    pub fn width_below(&self, bits: i32) -> bool {
        let w = self.width();
        if w.is_zero() {
            return true;
        }
        match w.exponent() {
            Some(e) => (e as i64) <= -(bits as i64),
            None => false,
        }
    }

    pub fn mid_f64(&self) -> f64 {
        let two = BigFloat::from_i8(2, self.prec);
        let m = self.lo.add(&self.hi, self.prec, RoundingMode::ToEven).div(
            &two,
            self.prec,
            RoundingMode::ToEven,
        );
        bf_to_f64(&m)
    }

    /// Decimal rendering of the midpoint with the given number of digits.
    pub fn mid_string(&self, digits: usize) -> String {
        let two = BigFloat::from_i8(2, self.prec);
        let m = self.lo.add(&self.hi, self.prec, RoundingMode::ToEven).div(
            &two,
            self.prec,
            RoundingMode::ToEven,
        );
        format_bf(&m, digits)
    }

    pub fn width_f64(&self) -> f64 {
        bf_to_f64(&self.width())
    }

    pub fn abs(&self) -> Self {
        if bf_sign(&self.lo) >= 0 {
            self.clone()
        } else if bf_sign(&self.hi) < 0 {
            self.neg()
        } else {
            RealInterval {
                lo: BigFloat::from_i8(0, self.prec),
                hi: bf_max(self.lo.neg(), self.hi.clone()),
                prec: self.prec,
            }
        }
    }

    /// Square root of a quantity known to be nonnegative; the lower endpoint is
    /// clamped at zero. None if the interval is entirely negative.
    pub fn sqrt_nonneg(&self) -> Option<Self> {
        if bf_sign(&self.hi) < 0 {
            return None;
        }
        let lo = if bf_sign(&self.lo) < 0 {
            BigFloat::from_i8(0, self.prec)
        } else {
            self.lo.sqrt(self.prec, DOWN)
        };
        Some(RealInterval {
            lo,
            hi: self.hi.sqrt(self.prec, UP),
            prec: self.prec,
        })
    }

    /// Strict square root: None unless the interval is entirely nonnegative.
    pub fn sqrt(&self) -> Option<Self> {
        if bf_sign(&self.lo) < 0 {
            return None;
        }
        self.sqrt_nonneg()
    }

    /// Natural logarithm; None unless the interval is strictly positive.
    pub fn ln(&self) -> Option<Self> {
        if bf_sign(&self.lo) <= 0 {
            return None;
        }
        Some(RealInterval {
            lo: with_consts(|cc| self.lo.ln(self.prec, DOWN, cc)),
            hi: with_consts(|cc| self.hi.ln(self.prec, UP, cc)),
            prec: self.prec,
        })
    }

    /// arctanh via logarithm; None unless |x| < 1 certainly.
    pub fn atanh(&self) -> Option<Self> {
        let one = Self::one(self.prec);
        let num = one.add(self);
        let den = one.sub(self);
        if bf_sign(&den.lo) <= 0 || bf_sign(&num.lo) <= 0 {
            return None;
        }
        let ratio = num.div(&den)?;
        let l = ratio.ln()?;
        let half = Self::point(BigFloat::from_f64(0.5, self.prec), self.prec);
        Some(l.mul(&half))
    }

    /// arccos, clamping endpoints into [-1, 1]; None if the interval lies outside.
    pub fn acos(&self) -> Option<Self> {
        let p = self.prec;
        let one = BigFloat::from_i8(1, p);
        let mone = BigFloat::from_i8(-1, p);
        if cmp_bf(&self.lo, &one) == Ordering::Greater || cmp_bf(&self.hi, &mone) == Ordering::Less
        {
            return None;
        }
        let a = bf_max(self.lo.clone(), mone);
        let b = bf_min(self.hi.clone(), one);
        // decreasing function
        Some(RealInterval {
            lo: with_consts(|cc| b.acos(p, DOWN, cc)),
            hi: with_consts(|cc| a.acos(p, UP, cc)),
            prec: p,
        })
    }

    /// Sine of an interval, via a Lipschitz-1 bound around the midpoint.
    pub fn sin(&self) -> Self {
        self.lipschitz1(|m, p, rm| with_consts(|cc| m.sin(p, rm, cc)))
    }

    /// Cosine of an interval, via a Lipschitz-1 bound around the midpoint.
    pub fn cos(&self) -> Self {
        self.lipschitz1(|m, p, rm| with_consts(|cc| m.cos(p, rm, cc)))
    }

    fn lipschitz1(&self, f: impl Fn(&BigFloat, usize, RoundingMode) -> BigFloat) -> Self {
        let p = self.prec;
        let w = self.width();
        let lo = f(&self.lo, p, DOWN).sub(&w, p, DOWN);
        let hi = f(&self.lo, p, UP).add(&w, p, UP);
        RealInterval { lo, hi, prec: p }
    }

    /// Union hull.
    pub fn hull(&self, o: &Self) -> Self {
        RealInterval {
            lo: bf_min(self.lo.clone(), o.lo.clone()),
            hi: bf_max(self.hi.clone(), o.hi.clone()),
            prec: self.prec.max(o.prec),
        }
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        let lo = bf_max(self.lo.clone(), o.lo.clone());
        let hi = bf_min(self.hi.clone(), o.hi.clone());
        if cmp_bf(&lo, &hi) == Ordering::Greater {
            None
        } else {
            Some(RealInterval {
                lo,
                hi,
                prec: self.prec.max(o.prec),
            })
        }
    }
}

fn bf_to_f64(v: &BigFloat) -> f64 {
    // round-trip through a decimal string at f64-sufficient digits
    format_bf(v, 17).parse().unwrap_or(f64::NAN)
}

fn format_bf(v: &BigFloat, digits: usize) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let (s, m, e) = match v.as_raw_parts() {
        Some((m, _, s, e, _)) => (s, m.to_vec(), e),
        None => return "nan".into(),
    };
    // value = sign * 0.m * 2^e ; compute decimal via integer arithmetic
    let mut mant = Integer::from(0u32);
    for w in m.iter().rev() {
        mant = (mant << 64) + Integer::from(*w);
    }
    let bits = (m.len() * 64) as i64;
    let exp2 = e as i64 - bits;
    // want round(mant * 2^exp2 * 10^k) with enough digits
    let dec_digits = digits as i64;
    // scale = 10^(dec_digits - floor(log10(value))) approximately; simpler: compute
    // value * 10^t with t chosen from exponent estimate
    let log10_est = (e as f64) * std::f64::consts::LOG10_2;
    let t = dec_digits - log10_est.ceil() as i64;
    let mut num = mant;
    if t >= 0 {
        num *= Integer::from(10u32).pow(t as u32);
    }
    let shifted = if exp2 >= 0 {
        num << exp2 as usize
    } else {
        num >> (-exp2) as usize
    };
    let shifted = if t < 0 {
        shifted / Integer::from(10u32).pow((-t) as u32)
    } else {
        shifted
    };
    let digits_str = shifted.to_str_radix(10);
    let point = digits_str.len() as i64 - t;
    let sign = if s == Sign::Neg { "-" } else { "" };
    // render as fixed/scientific
    if point <= 0 {
        format!("{sign}0.{}{}", "0".repeat((-point) as usize), digits_str)
    } else if (point as usize) < digits_str.len() {
        format!(
            "{sign}{}.{}",
            &digits_str[..point as usize],
            &digits_str[point as usize..]
        )
    } else {
        format!(
            "{sign}{}{}",
            digits_str,
            "0".repeat(point as usize - digits_str.len())
        )
    }
}

/// Rectangular complex interval.
#[derive(Clone, Debug)]
pub struct ComplexInterval {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexInterval {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexInterval { re, im }
    }

    pub fn zero(prec: usize) -> Self {
        ComplexInterval {
            re: RealInterval::zero(prec),
            im: RealInterval::zero(prec),
        }
    }

    pub fn one(prec: usize) -> Self {
        ComplexInterval {
            re: RealInterval::one(prec),
            im: RealInterval::zero(prec),
        }
    }

    pub fn from_real(re: RealInterval) -> Self {
        let p = re.prec;
        ComplexInterval {
            re,
            im: RealInterval::zero(p),
        }
    }

    pub fn precision(&self) -> usize {
        self.re.prec.max(self.im.prec)
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexInterval {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexInterval {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn neg(&self) -> Self {
        ComplexInterval {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexInterval {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexInterval {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn mul_i(&self) -> Self {
        ComplexInterval {
            re: self.im.neg(),
            im: self.re.clone(),
        }
    }

    pub fn scale(&self, s: &RealInterval) -> Self {
        ComplexInterval {
            re: self.re.mul(s),
            im: self.im.mul(s),
        }
    }

    pub fn norm_sq(&self) -> RealInterval {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> RealInterval {
        self.norm_sq().sqrt_nonneg().expect("norm is nonnegative")
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        let n = o.norm_sq();
        let num = self.mul(&o.conj());
        Some(ComplexInterval {
            re: num.re.div(&n)?,
            im: num.im.div(&n)?,
        })
    }

    pub fn recip(&self) -> Option<Self> {
        ComplexInterval::one(self.precision()).div(self)
    }

    /// Principal square root (real part >= 0). None near the branch cut when
    /// the sign of the imaginary part is uncertain, or when 0 may be enclosed.
    pub fn sqrt(&self) -> Option<Self> {
        let p = self.precision();
        let r = self.abs();
        if self.re.definitely_positive() || (self.re.contains_zero() && !self.im.contains_zero()) {
            // gamma = sqrt((|s| + re)/2), w = (gamma, im / (2 gamma))
            let two = RealInterval::point(BigFloat::from_i8(2, p), p);
            let gamma = r.add(&self.re).div(&two)?.sqrt_nonneg()?;
            if gamma.contains_zero() {
                return None;
            }
            let im = self.im.div(&gamma.mul(&two))?;
            Some(ComplexInterval { re: gamma, im })
        } else if self.re.definitely_negative() {
            let s = self.im.sign()?;
            let two = RealInterval::point(BigFloat::from_i8(2, p), p);
            let delta = r.sub(&self.re).div(&two)?.sqrt_nonneg()?;
            if delta.contains_zero() {
                return None;
            }
            let re = self.im.abs().div(&delta.mul(&two))?;
            let im = if s >= 0 { delta } else { delta.neg() };
            Some(ComplexInterval { re, im })
        } else {
            None
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn mid(&self) -> (f64, f64) {
        (self.re.mid_f64(), self.im.mid_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn close(iv: &RealInterval, v: f64, width_tol: f64) {
        assert!(
            (iv.mid_f64() - v).abs() < 5e-14,
            "interval midpoint {:.17} should be near {v}",
            iv.mid_f64(),
        );
        assert!(iv.width_f64() < width_tol, "width {} too large", iv.width_f64());
    }

    #[test]
    fn rational_conversion_round_trips() {
        let q = Rational::new(Integer::from(-355), Integer::from(113));
        let iv = RealInterval::from_rational(&q, 128);
        close(&iv, -355.0 / 113.0, 1e-30);
    }

    #[test]
    fn pi_and_trig() {
        let pi = RealInterval::pi(128);
        close(&pi, std::f64::consts::PI, 1e-30);
        let third = RealInterval::from_rational(
            &Rational::new(Integer::one(), Integer::from(3)),
            128,
        );
        let s = pi.mul(&third).sin();
        close(&s, (std::f64::consts::PI / 3.0).sin(), 1e-25);
        let c = pi.mul(&third).cos();
        close(&c, 0.5, 1e-25);
    }

    #[test]
    fn sqrt_ln_atanh() {
        let two = RealInterval::from_integer(&Integer::from(2), 192);
        close(&two.sqrt().unwrap(), std::f64::consts::SQRT_2, 1e-40);
        close(&two.ln().unwrap(), std::f64::consts::LN_2, 1e-40);
        let half = RealInterval::from_rational(
            &Rational::new(Integer::one(), Integer::from(2)),
            128,
        );
        // atanh(1/2) = ln(3)/2
        close(&half.atanh().unwrap(), 3f64.ln() / 2.0, 1e-25);
    }

    #[test]
    fn complex_sqrt_squares_back() {
        let p = 128;
        let z = ComplexInterval::new(
            RealInterval::from_f64(-3.25, p),
            RealInterval::from_f64(1.5, p),
        );
        let w = z.sqrt().unwrap();
        let sq = w.mul(&w);
        assert!(sq.re.contains_f64(-3.25));
        assert!(sq.im.contains_f64(1.5));
        assert!(!w.re.definitely_negative());
    }

    #[test]
    fn division_through_zero_fails() {
        let z = RealInterval::from_f64(0.0, 64);
        let one = RealInterval::one(64);
        assert!(one.div(&z).is_none());
    }

    #[test]
    fn mid_string_digits() {
        let q = Rational::new(Integer::from(1), Integer::from(3));
        let iv = RealInterval::from_rational(&q, 256);
        let s = iv.mid_string(30);
        assert!(s.starts_with("0.3333333333"), "{s}");
    }
}
