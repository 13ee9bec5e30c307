//! Hermitian forms over `Q(zeta_N, sqrt(-7))`: exact Gram diagonalization and
//! signatures under arbitrary Galois embeddings, orthogonal complements,
//! restriction of group elements to a complement, and projective orders.

use serde::Serialize;

use crate::field::{FieldElement, GaloisMap};
use crate::interval::RealInterval;
use crate::matrix::SquareMatrix;
use crate::{Error, Integer, Rational};

/// A hermitian form, stored as its (conjugate-symmetric) Gram matrix.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HermitianForm {
    matrix: SquareMatrix,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SignaturePair {
    pub positives: usize,
    pub negatives: usize,
}

impl SignaturePair {
    pub fn is_definite(&self) -> bool {
        self.positives == 0 || self.negatives == 0
    }
}

impl std::fmt::Display for SignaturePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.positives, self.negatives)
    }
}

impl HermitianForm {
    pub fn new(matrix: SquareMatrix) -> Result<Self, Error> {
        if matrix.conj_transpose() != matrix {
            return Err(Error::RelationFailed("H* = H".into()));
        }
        Ok(HermitianForm { matrix })
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn conductor(&self) -> u32 {
        self.matrix.conductor()
    }

    /// `<v, w> = w* H v`.
    pub fn evaluate(&self, v: &[FieldElement], w: &[FieldElement]) -> FieldElement {
        let hv = self.matrix.apply(v);
        let n = self.conductor();
        let mut acc = FieldElement::zero(n);
        for (wi, hvi) in w.iter().zip(&hv) {
            acc = acc.add(&wi.conj().mul(hvi));
        }
        acc
    }

    /// Entry-wise Galois conjugate; hermitian again since the group is abelian.
    pub fn apply_galois(&self, g: &GaloisMap) -> Result<Self, Error> {
        HermitianForm::new(self.matrix.apply_galois(g)?)
    }

    /// Is `M* H M = H` exactly?
    pub fn is_unitary(&self, m: &SquareMatrix) -> bool {
        m.conj_transpose().mul(&self.matrix).mul(m) == self.matrix
    }
}

/// Exact Gram diagonalization of the form conjugated by `g`: returns `(P, diag)`
/// with `P* H^g P = diag(diag)` exactly. Pivot rule: first nonzero diagonal
/// entry in index order; polarization fallback for an all-zero diagonal.
pub fn gram_diagonalize(
    form: &HermitianForm,
    g: &GaloisMap,
) -> Result<(SquareMatrix, Vec<FieldElement>), Error> {
    let h = form.apply_galois(g)?;
    if h.matrix().det().is_zero() {
        return Err(Error::DegenerateForm);
    }
    let d = h.dim();
    let n = h.conductor();
    let e = |i: usize| -> Vec<FieldElement> {
        (0..d)
            .map(|j| {
                if i == j {
                    FieldElement::one(n)
                } else {
                    FieldElement::zero(n)
                }
            })
            .collect()
    };
    let mut basis: Vec<Vec<FieldElement>> = (0..d).map(e).collect();
    let mut diag = Vec::with_capacity(d);
    let qform = |v: &[FieldElement]| h.evaluate(v, v);
    let pairing = |v: &[FieldElement], w: &[FieldElement]| h.evaluate(v, w);
    for step in 0..d {
        // choose pivot
        let mut pivot = None;
        for i in step..d {
            if !qform(&basis[i]).is_zero() {
                pivot = Some(i);
                break;
            }
        }
        if pivot.is_none() {
            // all remaining diagonal entries vanish; polarize a nonzero pairing
            'outer: for i in step..d {
                for j in (i + 1)..d {
                    let m = pairing(&basis[i], &basis[j]);
                    if m.is_zero() {
                        continue;
                    }
                    // try w_i + w_j, then w_i + sqrt(-7) w_j
                    for sigma in [FieldElement::one(n), FieldElement::sqrt_minus7(n)] {
                        let cand: Vec<FieldElement> = basis[i]
                            .iter()
                            .zip(&basis[j])
                            .map(|(a, b)| a.add(&sigma.mul(b)))
                            .collect();
                        if !qform(&cand).is_zero() {
                            basis[i] = cand;
                            pivot = Some(i);
                            break 'outer;
                        }
                    }
                }
            }
        }
        let piv = pivot.ok_or(Error::DegenerateForm)?;
        basis.swap(step, piv);
        let q = qform(&basis[step]);
        let qinv = q.inv()?;
        for j in (step + 1)..d {
            // orthogonalize: w_j -= (<w_j, piv> / q) piv, so that piv* H w_j = 0
            let c = pairing(&basis[j], &basis[step]).mul(&qinv);
            basis[j] = basis[j]
                .iter()
                .zip(&basis[step])
                .map(|(w, p)| w.sub(&c.mul(p)))
                .collect();
        }
        diag.push(q);
    }
    let mut p = SquareMatrix::identity(d, n);
    for (col, v) in basis.iter().enumerate() {
        for (row, x) in v.iter().enumerate() {
            p.set(row, col, x.clone());
        }
    }
    Ok((p, diag))
}

/// Exact signature of the form under the embedding tagged by `g`.
pub fn form_signature(form: &HermitianForm, g: &GaloisMap) -> Result<SignaturePair, Error> {
    let (_, diag) = gram_diagonalize(form, g)?;
    let id = GaloisMap::identity(form.conductor());
    let mut sig = SignaturePair {
        positives: 0,
        negatives: 0,
    };
    for q in &diag {
        match q.sign_at(&id)? {
            1 => sig.positives += 1,
            -1 => sig.negatives += 1,
            _ => return Err(Error::DegenerateForm),
        }
    }
    Ok(sig)
}

/// Deterministic echelon basis of the orthogonal complement of `v` (dimension 3 forms).
pub fn orthogonal_complement(
    form: &HermitianForm,
    v: &[FieldElement],
) -> Result<Vec<Vec<FieldElement>>, Error> {
    if form.evaluate(v, v).is_zero() {
        return Err(Error::NullVector);
    }
    let d = form.dim();
    let n = form.conductor();
    // w in complement iff <w, v> = v* H w = 0; the row vector is v* H
    let hrow: Vec<FieldElement> = (0..d)
        .map(|j| {
            let mut acc = FieldElement::zero(n);
            for (i, vi) in v.iter().enumerate() {
                acc = acc.add(&vi.conj().mul(form.matrix().at(i, j)));
            }
            acc
        })
        .collect();
    let pivot = hrow
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero row for nondegenerate pairing");
    let pinv = hrow[pivot].inv()?;
    let mut out = Vec::with_capacity(d - 1);
    for k in 0..d {
        if k == pivot {
            continue;
        }
        let mut w = vec![FieldElement::zero(n); d];
        w[k] = FieldElement::one(n);
        w[pivot] = hrow[k].mul(&pinv).neg();
        out.push(w);
    }
    Ok(out)
}

/// The 2x2 matrix of the action of `m` on the span of `basis`, in that basis.
/// Exact; errors if `m` does not preserve the span.
pub fn restrict_to_complement(
    m: &SquareMatrix,
    basis: &[Vec<FieldElement>],
    label: &str,
) -> Result<SquareMatrix, Error> {
    assert_eq!(basis.len(), 2);
    assert_eq!(m.dim(), 3);
    let n = m.conductor();
    // rows of the 3x2 basis matrix B with an invertible 2x2 submatrix
    let rows = independent_rows(basis)?;
    let (r0, r1) = (rows.0, rows.1);
    let b = |i: usize, j: usize| &basis[j][i];
    let det = b(r0, 0)
        .mul(b(r1, 1))
        .sub(&b(r0, 1).mul(b(r1, 0)));
    let dinv = det.inv()?;
    let mut out = SquareMatrix::identity(2, n);
    let mut images = Vec::with_capacity(2);
    for bj in basis {
        images.push(m.apply(bj));
    }
    for (j, img) in images.iter().enumerate() {
        // solve [B_{r0,*}; B_{r1,*}] c = (img_{r0}, img_{r1})
        let c0 = img[r0]
            .mul(b(r1, 1))
            .sub(&img[r1].mul(b(r0, 1)))
            .mul(&dinv);
        let c1 = b(r0, 0)
            .mul(&img[r1])
            .sub(&b(r1, 0).mul(&img[r0]))
            .mul(&dinv);
        out.set(0, j, c0.clone());
        out.set(1, j, c1.clone());
        // verify the remaining coordinate exactly
        let rest: usize = [0usize, 1, 2].iter().copied().find(|&r| r != r0 && r != r1).unwrap();
        let recon = c0.mul(b(rest, 0)).add(&c1.mul(b(rest, 1)));
        if recon != img[rest] {
            return Err(Error::SubspaceNotPreserved(label.to_string()));
        }
    }
    Ok(out)
}

fn independent_rows(basis: &[Vec<FieldElement>]) -> Result<(usize, usize), Error> {
    for r0 in 0..3 {
        for r1 in (r0 + 1)..3 {
            let det = basis[0][r0]
                .mul(&basis[1][r1])
                .sub(&basis[0][r1].mul(&basis[1][r0]));
            if !det.is_zero() {
                return Ok((r0, r1));
            }
        }
    }
    Err(Error::SingularMatrix)
}

/// The restricted hermitian form `B* H B` on a complement basis.
pub fn restricted_form(
    form: &HermitianForm,
    basis: &[Vec<FieldElement>],
) -> Result<HermitianForm, Error> {
    let n = form.conductor();
    let mut gm = SquareMatrix::identity(2, n);
    for i in 0..2 {
        for j in 0..2 {
            gm.set(i, j, form.evaluate(&basis[j], &basis[i]));
        }
    }
    HermitianForm::new(gm)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ProjectiveOrder {
    Finite(u32),
    Infinite,
}

impl std::fmt::Display for ProjectiveOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProjectiveOrder::Finite(k) => write!(f, "{k}"),
            ProjectiveOrder::Infinite => write!(f, "infinite"),
        }
    }
}

pub const DEFAULT_ORDER_BOUND: u32 = 1000;

/// Least `n >= 1` with `M^n` scalar, searched up to `bound`; `Infinite` when the
/// eigenvalue-ratio test certifies non-torsion. Errors if neither resolves.
pub fn projective_order(m: &SquareMatrix, bound: u32) -> Result<ProjectiveOrder, Error> {
    let mut acc = m.clone();
    for k in 1..=bound {
        if acc.scalar_value().is_some() {
            return Ok(ProjectiveOrder::Finite(k));
        }
        acc = acc.mul(m);
    }
    if certify_non_torsion(m)? {
        Ok(ProjectiveOrder::Infinite)
    } else {
        Err(Error::OrderUncertified { bound })
    }
}

/// Certificate: if `M` were projectively torsion, all eigenvalue ratios would be
/// roots of unity, so every coefficient of the monic eigenvalue-ratio polynomial
/// would be bounded by binomials under every embedding. Returns true when some
/// embedding certifiably violates a bound.
fn certify_non_torsion(m: &SquareMatrix) -> Result<bool, Error> {
    let ratio = eigenvalue_ratio_poly(m)?;
    let n = m.conductor();
    let deg = ratio.len() - 1;
    let lead_inv = ratio.last().unwrap().inv()?;
    let monic: Vec<FieldElement> = ratio.iter().map(|c| c.mul(&lead_inv)).collect();
    let prec = 192usize;
    for g in GaloisMap::all(n) {
        for (k, c) in monic.iter().enumerate().take(deg) {
            let binom = binomial(deg, k);
            let v = c.embed(&g, prec)?;
            let bound_iv = RealInterval::from_integer(&binom, prec);
            if bound_iv.definitely_less(&v.abs()) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn binomial(n: usize, k: usize) -> Integer {
    let mut acc = Integer::from(1);
    for i in 0..k.min(n - k) {
        acc = acc * Integer::from((n - i) as u64) / Integer::from((i + 1) as u64);
    }
    acc
}

/// The polynomial whose roots are all eigenvalue ratios `lambda_i / lambda_j`,
/// as coefficients in the field: `R(x) = Res_y(chi(y), chi(x y))`, computed by
/// interpolation from univariate resultants over the field.
fn eigenvalue_ratio_poly(m: &SquareMatrix) -> Result<Vec<FieldElement>, Error> {
    let n = m.conductor();
    let chi = char_poly(m);
    let d = m.dim();
    let deg = d * d;
    let mut xs = Vec::with_capacity(deg + 1);
    let mut ys = Vec::with_capacity(deg + 1);
    for i in 0..=deg {
        let x0 = Rational::from_integer(Integer::from(i as i64 + 2));
        // chi(x0 * y) as a polynomial in y
        let x0f = FieldElement::from_rational(n, x0.clone());
        let mut pw = FieldElement::one(n);
        let scaled: Vec<FieldElement> = chi
            .iter()
            .map(|c| {
                let v = c.mul(&pw);
                pw = pw.mul(&x0f);
                v
            })
            .collect();
        let r = fpoly_resultant(n, &chi, &scaled)?;
        xs.push(x0);
        ys.push(r);
    }
    // Lagrange interpolation with rational nodes and field values
    let mut acc: Vec<FieldElement> = vec![];
    for (i, yi) in ys.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num: Vec<FieldElement> = vec![FieldElement::one(n)];
        let mut den = Rational::from_integer(1.into());
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            // num *= (x - xj)
            num = fpoly_mul(
                n,
                &num,
                &[
                    FieldElement::from_rational(n, -xj.clone()),
                    FieldElement::one(n),
                ],
            );
            den *= &xs[i] - xj;
        }
        let w = yi.scale(&(Rational::from_integer(1.into()) / den));
        let term: Vec<FieldElement> = num.iter().map(|c| c.mul(&w)).collect();
        acc = fpoly_add(n, &acc, &term);
    }
    Ok(acc)
}

/// Characteristic polynomial coefficients (low to high) over the field.
fn char_poly(m: &SquareMatrix) -> Vec<FieldElement> {
    let n = m.conductor();
    match m.dim() {
        2 => vec![m.det(), m.trace().neg(), FieldElement::one(n)],
        3 => {
            let tr = m.trace();
            let det = m.det();
            // sum of principal 2x2 minors
            let mut c1 = FieldElement::zero(n);
            for i in 0..3 {
                for j in (i + 1)..3 {
                    let minor = m
                        .at(i, i)
                        .mul(m.at(j, j))
                        .sub(&m.at(i, j).mul(m.at(j, i)));
                    c1 = c1.add(&minor);
                }
            }
            vec![det.neg(), c1, tr.neg(), FieldElement::one(n)]
        }
        _ => unreachable!(),
    }
}

// dense polynomial helpers over the big field

fn fpoly_trim(v: &mut Vec<FieldElement>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn fpoly_add(n: u32, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let len = a.len().max(b.len());
    let mut v = Vec::with_capacity(len);
    for i in 0..len {
        let x = a.get(i).cloned().unwrap_or_else(|| FieldElement::zero(n));
        let y = b.get(i).cloned().unwrap_or_else(|| FieldElement::zero(n));
        v.push(x.add(&y));
    }
    fpoly_trim(&mut v);
    v
}

fn fpoly_mul(n: u32, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![FieldElement::zero(n); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                v[i + j] = v[i + j].add(&x.mul(y));
            }
        }
    }
    fpoly_trim(&mut v);
    v
}

fn fpoly_rem(a: &[FieldElement], b: &[FieldElement]) -> Result<Vec<FieldElement>, Error> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    fpoly_trim(&mut r);
    if r.len() <= db {
        return Ok(r);
    }
    let lcinv = b.last().unwrap().inv()?;
    while r.len() > db {
        let c = r.last().unwrap().mul(&lcinv);
        let k = r.len() - 1 - db;
        for (j, bc) in b.iter().enumerate() {
            let t = c.mul(bc);
            r[k + j] = r[k + j].sub(&t);
        }
        r.pop();
        fpoly_trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    Ok(r)
}

fn fpoly_resultant(
    n: u32,
    a: &[FieldElement],
    b: &[FieldElement],
) -> Result<FieldElement, Error> {
    let mut f = a.to_vec();
    let mut g = b.to_vec();
    fpoly_trim(&mut f);
    fpoly_trim(&mut g);
    if f.is_empty() || g.is_empty() {
        return Ok(FieldElement::zero(n));
    }
    let mut acc = FieldElement::one(n);
    let mut sign_flip = false;
    loop {
        let (df, dg) = (f.len() - 1, g.len() - 1);
        if dg == 0 {
            let mut c = FieldElement::one(n);
            for _ in 0..df {
                c = c.mul(&g[0]);
            }
            let mut out = acc.mul(&c);
            if sign_flip {
                out = out.neg();
            }
            return Ok(out);
        }
        if df < dg {
            std::mem::swap(&mut f, &mut g);
            if df % 2 == 1 && dg % 2 == 1 {
                sign_flip = !sign_flip;
            }
            continue;
        }
        let r = fpoly_rem(&f, &g)?;
        if r.is_empty() {
            return Ok(FieldElement::zero(n));
        }
        let dr = r.len() - 1;
        let lc = g.last().unwrap();
        for _ in 0..(df - dr) {
            acc = acc.mul(lc);
        }
        if df % 2 == 1 && dg % 2 == 1 {
            sign_flip = !sign_flip;
        }
        f = g;
        g = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(n: u32, v: i64) -> FieldElement {
        FieldElement::from_integer(n, v)
    }

    fn diag3(n: u32, a: i64, b: i64, c: i64) -> HermitianForm {
        let z = || FieldElement::zero(n);
        HermitianForm::new(SquareMatrix::new(
            3,
            vec![fe(n, a), z(), z(), z(), fe(n, b), z(), z(), z(), fe(n, c)],
        ))
        .unwrap()
    }

    #[test]
    fn diagonal_signature() {
        let h = diag3(15, 1, 1, -1);
        let sig = form_signature(&h, &GaloisMap::identity(15)).unwrap();
        assert_eq!(sig, SignaturePair { positives: 2, negatives: 1 });
        assert!(!sig.is_definite());
    }

    #[test]
    fn complement_of_e1_in_diagonal_form() {
        let n = 15;
        let h = diag3(n, 1, 1, -1);
        let e1 = vec![fe(n, 1), fe(n, 0), fe(n, 0)];
        let basis = orthogonal_complement(&h, &e1).unwrap();
        assert_eq!(basis.len(), 2);
        for w in &basis {
            assert!(h.evaluate(w, &e1).is_zero());
            assert!(h.evaluate(&e1, w).is_zero());
        }
        // null vector rejected: (1,0,1) has q = 0
        let null = vec![fe(n, 1), fe(n, 0), fe(n, 1)];
        assert!(matches!(
            orthogonal_complement(&h, &null),
            Err(Error::NullVector)
        ));
    }

    #[test]
    fn restriction_of_identity() {
        let n = 15;
        let h = diag3(n, 1, 1, -1);
        let e1 = vec![fe(n, 1), fe(n, 0), fe(n, 0)];
        let basis = orthogonal_complement(&h, &e1).unwrap();
        let id3 = SquareMatrix::identity(3, n);
        let r = restrict_to_complement(&id3, &basis, "id").unwrap();
        assert!(r.is_identity());
    }

    #[test]
    fn projective_orders_of_simple_matrices() {
        // diag(i, -i) over N=24 where i = zeta_24^6: square is -I
        let n = 24;
        let i = FieldElement::zeta(n, 6);
        let m = SquareMatrix::new(
            2,
            vec![i.clone(), FieldElement::zero(n), FieldElement::zero(n), i.neg()],
        );
        assert_eq!(projective_order(&m, 50).unwrap(), ProjectiveOrder::Finite(2));
        assert_eq!(
            projective_order(&SquareMatrix::identity(2, n), 50).unwrap(),
            ProjectiveOrder::Finite(1)
        );
    }

    #[test]
    fn hyperbolic_is_certified_infinite() {
        // diag(2, 1/2) has ratio 4, not a root of unity
        let n = 15;
        let m = SquareMatrix::new(
            2,
            vec![
                fe(n, 2),
                FieldElement::zero(n),
                FieldElement::zero(n),
                FieldElement::from_rational(n, Rational::new(1.into(), 2.into())),
            ],
        );
        assert_eq!(projective_order(&m, 20).unwrap(), ProjectiveOrder::Infinite);
    }

    #[test]
    fn gram_identity_holds() {
        // a non-diagonal hermitian form: [[2, tau],[conj tau, -1]] over N=15
        let n = 15;
        let tau = FieldElement::one(n)
            .add(&FieldElement::sqrt_minus7(n))
            .scale(&Rational::new((-1).into(), 2.into()));
        let h = HermitianForm::new(SquareMatrix::new(
            2,
            vec![fe(n, 2), tau.clone(), tau.conj(), fe(n, -1)],
        ))
        .unwrap();
        let g = GaloisMap::identity(n);
        let (p, diag) = gram_diagonalize(&h, &g).unwrap();
        let lhs = p.conj_transpose().mul(h.matrix()).mul(&p);
        for i in 0..2 {
            for j in 0..2 {
                if i == j {
                    assert_eq!(lhs.at(i, j), &diag[i]);
                } else {
                    assert!(lhs.at(i, j).is_zero());
                }
            }
        }
        let sig = form_signature(&h, &g).unwrap();
        assert_eq!(sig, SignaturePair { positives: 1, negatives: 1 });
    }
}
