//! Abstract number fields `Q[x]/(p)` and exact field-isomorphism decisions.
//!
//! The isomorphism test is Trager's: the norm `N(x) = Res_y(p2(y), p1(x - s y))`
//! is computed by interpolation from univariate resultants, made squarefree by
//! choice of the shift `s`, and factored over the integers; `p1` has a root in
//! `Q[y]/(p2)` exactly when the norm has an irreducible factor of degree
//! `deg p2`. Recovered roots are verified exactly in the field.

use num_traits::{One, Zero};

use crate::interval::RealInterval;
use crate::qpoly::QPoly;
use crate::zfactor;
use crate::{Error, Integer, Rational};

/// `Q[x]/(modulus)` for a monic irreducible modulus.
#[derive(Clone, Debug)]
pub struct NumberField {
    modulus: QPoly,
    degree: usize,
}

/// An element of a [`NumberField`], as a coefficient vector of length < degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NfElement {
    coeffs: Vec<Rational>,
}

impl NumberField {
    pub fn new(modulus: QPoly) -> Result<Self, Error> {
        if !modulus.is_monic() {
            return Err(Error::NotMonic(modulus.to_string()));
        }
        if !zfactor::is_irreducible(&modulus) {
            return Err(Error::ReduciblePolynomial(modulus.to_string()));
        }
        let degree = modulus.degree().unwrap();
        Ok(NumberField { modulus, degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn zero(&self) -> NfElement {
        NfElement { coeffs: vec![] }
    }

    pub fn one(&self) -> NfElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, q: Rational) -> NfElement {
        self.reduce(QPoly::constant(q))
    }

    /// The class of `x`.
    pub fn generator(&self) -> NfElement {
        self.reduce(QPoly::x())
    }

    pub fn reduce(&self, p: QPoly) -> NfElement {
        NfElement {
            coeffs: p.rem(&self.modulus).coeffs().to_vec(),
        }
    }

    pub fn add(&self, a: &NfElement, b: &NfElement) -> NfElement {
        self.reduce(QPoly::new(a.coeffs.clone()).add(&QPoly::new(b.coeffs.clone())))
    }

    pub fn sub(&self, a: &NfElement, b: &NfElement) -> NfElement {
        self.reduce(QPoly::new(a.coeffs.clone()).sub(&QPoly::new(b.coeffs.clone())))
    }

    pub fn mul(&self, a: &NfElement, b: &NfElement) -> NfElement {
        self.reduce(QPoly::new(a.coeffs.clone()).mul(&QPoly::new(b.coeffs.clone())))
    }

    pub fn scale(&self, a: &NfElement, q: &Rational) -> NfElement {
        NfElement {
            coeffs: a.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn neg(&self, a: &NfElement) -> NfElement {
        NfElement {
            coeffs: a.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn inv(&self, a: &NfElement) -> Result<NfElement, Error> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = QPoly::new(a.coeffs.clone()).xgcd(&self.modulus);
        debug_assert_eq!(g.degree(), Some(0));
        let scale = Rational::one() / g.coeff(0);
        Ok(self.reduce(s.scale(&scale)))
    }

    /// Evaluate a rational polynomial at a field element.
    pub fn eval_qpoly(&self, p: &QPoly, at: &NfElement) -> NfElement {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, at), &self.from_rational(c.clone()));
        }
        acc
    }

    /// Numeric enclosure of an element under the real embedding sending the
    /// generator to `root`.
    pub fn embed_at(&self, a: &NfElement, root: &RealInterval) -> RealInterval {
        let prec = root.precision();
        let mut acc = RealInterval::zero(prec);
        for c in a.coeffs.iter().rev() {
            acc = acc.mul(root).add(&RealInterval::from_rational(c, prec));
        }
        acc
    }
}

impl NfElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }
}

// polynomial arithmetic over a number field (dense, low-to-high)

fn nfp_trim(v: &mut Vec<NfElement>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn nfp_divrem(
    fld: &NumberField,
    a: &[NfElement],
    b: &[NfElement],
) -> Result<(Vec<NfElement>, Vec<NfElement>), Error> {
    let db = b.len() - 1;
    let lc_inv = fld.inv(&b[db])?;
    let mut r = a.to_vec();
    if r.len() <= db {
        return Ok((vec![], r));
    }
    let mut q = vec![fld.zero(); r.len() - db];
    while r.len() > db {
        let c = fld.mul(r.last().unwrap(), &lc_inv);
        let k = r.len() - 1 - db;
        for (j, bc) in b.iter().enumerate() {
            let t = fld.mul(&c, bc);
            r[k + j] = fld.sub(&r[k + j], &t);
        }
        q[k] = c;
        r.pop();
        nfp_trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    Ok((q, r))
}

fn nfp_gcd_monic(
    fld: &NumberField,
    a: &[NfElement],
    b: &[NfElement],
) -> Result<Vec<NfElement>, Error> {
    let (mut f, mut g) = (a.to_vec(), b.to_vec());
    nfp_trim(&mut f);
    nfp_trim(&mut g);
    while !g.is_empty() {
        let (_, r) = nfp_divrem(fld, &f, &g)?;
        f = g;
        g = r;
    }
    // make monic
    let lc_inv = fld.inv(f.last().expect("nonzero gcd"))?;
    for c in f.iter_mut() {
        *c = fld.mul(c, &lc_inv);
    }
    Ok(f)
}

/// All roots of `p` (monic, squarefree, rational coefficients) that lie in `fld`.
pub fn roots_in_field(p: &QPoly, fld: &NumberField) -> Result<Vec<NfElement>, Error> {
    let n = fld.degree();
    let dp = p.degree().unwrap_or(0);
    if dp == 0 {
        return Ok(vec![]);
    }
    // rational roots of a linear factor handled by the same machinery via s-shift
    for s in 1i64..=40 {
        let srat = Rational::from_integer(Integer::from(s));
        // norm(x) = Res_y(modulus(y), p(x - s y)), degree n * dp, by interpolation
        let deg = n * dp;
        let mut points = Vec::with_capacity(deg + 1);
        for i in 0..=deg {
            let x0 = Rational::from_integer(Integer::from(i as i64));
            // q(y) = p(x0 - s*y)
            let q = p.compose_linear(&(-srat.clone()), &x0);
            let r = fld.modulus().resultant(&q);
            points.push((x0, r));
        }
        let norm = lagrange_interpolate(&points);
        debug_assert_eq!(norm.degree(), Some(deg));
        if !norm.gcd(&norm.derivative()).degree().map_or(false, |d| d == 0) {
            continue; // norm not squarefree; try the next shift
        }
        let factors = zfactor::factor(&norm);
        let mut roots = Vec::new();
        for (h, _) in factors.iter().filter(|(h, _)| h.degree() == Some(n)) {
            // gcd over the field of p(x) and h(x + s*gen) is x - root
            let p_k: Vec<NfElement> = p.coeffs().iter().map(|c| fld.from_rational(c.clone())).collect();
            // h(x + s*gen) via Horner in (x + s*gen)
            let shift = vec![fld.scale(&fld.generator(), &srat), fld.one()];
            let mut hk: Vec<NfElement> = vec![];
            for c in h.coeffs().iter().rev() {
                // hk = hk * shift + c
                hk = nfp_mul(fld, &hk, &shift);
                if hk.is_empty() {
                    hk.push(fld.from_rational(c.clone()));
                } else {
                    hk[0] = fld.add(&hk[0], &fld.from_rational(c.clone()));
                }
            }
            let g = nfp_gcd_monic(fld, &p_k, &hk)?;
            if g.len() == 2 {
                let root = fld.neg(&g[0]);
                // exact verification
                let check = fld.eval_qpoly(p, &root);
                if check.is_zero() {
                    roots.push(root);
                }
            }
        }
        return Ok(roots);
    }
    Err(Error::PrecisionExhausted {
        bits: 0,
        what: "no squarefree Trager norm found within shift bound".into(),
    })
}

fn nfp_mul(fld: &NumberField, a: &[NfElement], b: &[NfElement]) -> Vec<NfElement> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![fld.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = fld.mul(x, y);
            v[i + j] = fld.add(&v[i + j], &t);
        }
    }
    nfp_trim(&mut v);
    v
}

fn lagrange_interpolate(points: &[(Rational, Rational)]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = QPoly::one();
        let mut den = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&QPoly::new(vec![-xj.clone(), Rational::one()]));
            den *= xi - xj;
        }
        acc = acc.add(&num.scale(&(yi / den)));
    }
    acc
}

/// Exact field isomorphism `Q[x]/(p1) =~ Q[x]/(p2)`, both monic irreducible.
pub fn fields_isomorphic(p1: &QPoly, p2: &QPoly) -> Result<bool, Error> {
    for p in [p1, p2] {
        if !p.is_monic() {
            return Err(Error::NotMonic(p.to_string()));
        }
        if !zfactor::is_irreducible(p) {
            return Err(Error::ReduciblePolynomial(p.to_string()));
        }
    }
    if p1.degree() != p2.degree() {
        return Ok(false);
    }
    if p1 == p2 {
        return Ok(true);
    }
    let fld = NumberField::new(p2.clone())?;
    Ok(!roots_in_field(p1, &fld)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(c)
    }

    #[test]
    fn reflexive_and_classical_non_isomorphism() {
        assert!(fields_isomorphic(&p(&[-5, 0, 1]), &p(&[-5, 0, 1])).unwrap());
        assert!(!fields_isomorphic(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap());
    }

    #[test]
    fn same_field_different_generators() {
        // Q(sqrt 2) = Q(1 + sqrt 2): x^2 - 2 vs x^2 - 2x - 1
        assert!(fields_isomorphic(&p(&[-2, 0, 1]), &p(&[-1, -2, 1])).unwrap());
        // symmetric
        assert!(fields_isomorphic(&p(&[-1, -2, 1]), &p(&[-2, 0, 1])).unwrap());
    }

    #[test]
    fn degree_mismatch_is_false() {
        assert!(!fields_isomorphic(&p(&[-2, 0, 1]), &p(&[1, 7, 9, -7, 1])).unwrap());
    }

    #[test]
    fn rejects_reducible() {
        assert!(matches!(
            fields_isomorphic(&p(&[-1, 0, 1]), &p(&[-2, 0, 1])),
            Err(Error::ReduciblePolynomial(_))
        ));
    }

    #[test]
    fn delta_field_vs_cos_pi_15_field() {
        // trace field quartic vs minimal polynomial of 2cos(pi/15): not isomorphic
        let delta = p(&[1, 7, 9, -7, 1]);
        let cos15 = p(&[1, -4, -4, 1, 1]);
        assert!(zfactor::is_irreducible(&cos15));
        assert!(!fields_isomorphic(&delta, &cos15).unwrap());
    }

    #[test]
    fn sqrt5_exists_in_delta_field() {
        let fld = NumberField::new(p(&[1, 7, 9, -7, 1])).unwrap();
        let roots = roots_in_field(&p(&[-5, 0, 1]), &fld).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            let sq = fld.mul(r, r);
            assert_eq!(sq, fld.from_rational(Rational::from_integer(5.into())));
        }
        // but sqrt 2 does not exist there
        assert!(roots_in_field(&p(&[-2, 0, 1]), &fld).unwrap().is_empty());
    }

    #[test]
    fn biquadratic_representatives() {
        // Q(sqrt2, sqrt7) via sqrt2 + sqrt7, and via sqrt2 + 2 sqrt7:
        // (x^2 - 30)^2 = 224 gives x^4 - 60x^2 + 676
        let a = p(&[25, 0, -18, 0, 1]);
        let b = p(&[676, 0, -60, 0, 1]);
        assert!(fields_isomorphic(&a, &b).unwrap());
        // and it is not the delta field
        assert!(!fields_isomorphic(&a, &p(&[1, 7, 9, -7, 1])).unwrap());
    }
}
