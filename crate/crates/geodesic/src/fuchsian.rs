//! Adjoint trace invariants, trace-field identification, the Galois signature
//! census, and arithmeticity verdicts for the quadrilateral groups.

use num_traits::One;
use serde::Serialize;

use crate::field::{is_totally_real, FieldElement, GaloisMap};
use crate::hermitian::{form_signature, SignaturePair};
use crate::interval::RealInterval;
use crate::lattice::LatticePackage;
use crate::matrix::SquareMatrix;
use crate::numberfield::{roots_in_field, NumberField};
use crate::qpoly::QPoly;
use crate::{Error, Integer, Rational};

/// `trace^2 / det` of a 2x2 matrix: `(lambda + lambda^-1)^2` for the
/// determinant-normalized eigenvalues. Conjugation-invariant.
pub fn tr_ad(m: &SquareMatrix) -> Result<FieldElement, Error> {
    assert_eq!(m.dim(), 2);
    let det = m.det();
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let t = m.trace();
    t.mul(&t).div(&det)
}

/// One computed trace invariant.
#[derive(Clone, Serialize)]
pub struct TraceRecord {
    pub label: String,
    pub trace: FieldElement,
    pub det: FieldElement,
    pub tr_ad: FieldElement,
    pub minimal_polynomial: QPoly,
}

/// The adjoint trace field, generated from trace invariants of words.
#[derive(Clone, Serialize)]
pub struct AdjointTraceField {
    /// Monic minimal polynomial of the chosen primitive element.
    pub minimal_polynomial: QPoly,
    /// A primitive element of the field inside the ambient field.
    pub primitive: FieldElement,
    pub records: Vec<TraceRecord>,
}

/// Compute trace invariants over commutators of generator pairs and all words
/// up to length `word_budget`, and return the field they generate.
pub fn adjoint_trace_field(
    l: &LatticePackage,
    word_budget: usize,
) -> Result<AdjointTraceField, Error> {
    assert!(word_budget >= 1);
    let gens = [
        ('a', &l.a2),
        ('b', &l.b2),
        ('c', &l.c2),
        ('d', &l.d2),
    ];
    let mut words: Vec<(String, SquareMatrix)> = Vec::new();
    for (i, (na, ma)) in gens.iter().enumerate() {
        for (nb, mb) in gens.iter().skip(i + 1) {
            let comm = ma
                .mul(mb)
                .mul(&ma.inverse()?)
                .mul(&mb.inverse()?);
            words.push((format!("[{na},{nb}]"), comm));
        }
    }
    // product words up to the budget, sharing prefixes
    let mut frontier: Vec<(String, SquareMatrix)> =
        vec![(String::new(), SquareMatrix::identity(2, l.n))];
    for _ in 0..word_budget {
        let mut next = Vec::new();
        for (w, m) in &frontier {
            for (nc, g) in gens.iter() {
                let nw = format!("{w}{nc}");
                let nm = m.mul(g);
                words.push((nw.clone(), nm.clone()));
                next.push((nw, nm));
            }
        }
        frontier = next;
    }

    let mut records: Vec<TraceRecord> = Vec::new();
    let mut primitive: Option<FieldElement> = None;
    let mut seen: Vec<FieldElement> = Vec::new();
    for (label, m) in &words {
        let t = tr_ad(m)?;
        if seen.contains(&t) {
            continue;
        }
        seen.push(t.clone());
        records.push(TraceRecord {
            label: label.clone(),
            trace: m.trace(),
            det: m.det(),
            tr_ad: t.clone(),
            minimal_polynomial: t.minimal_polynomial(),
        });
        primitive = Some(match primitive.take() {
            None => t,
            Some(theta) => extend_primitive(&theta, &t)?,
        });
    }
    let primitive = primitive.expect("at least one word");
    // verification: every invariant lies in the field of the primitive element
    for r in &records {
        if r.tr_ad.express_in_powers(&primitive).is_none() {
            return Err(Error::BudgetExhausted {
                budget: word_budget,
                degree: primitive.minimal_polynomial().degree().unwrap_or(0),
            });
        }
    }
    Ok(AdjointTraceField {
        minimal_polynomial: primitive.minimal_polynomial(),
        primitive,
        records,
    })
}

/// Smallest-shift primitive element of `Q(theta, t)`.
fn extend_primitive(theta: &FieldElement, t: &FieldElement) -> Result<FieldElement, Error> {
    if t.express_in_powers(theta).is_some() {
        return Ok(theta.clone());
    }
    if theta.express_in_powers(t).is_some() {
        return Ok(t.clone());
    }
    for c in 1..=32i64 {
        let cand = theta.add(&t.scale(&Rational::from_integer(Integer::from(c))));
        if theta.express_in_powers(&cand).is_some() && t.express_in_powers(&cand).is_some() {
            return Ok(cand);
        }
    }
    Err(Error::BudgetExhausted {
        budget: 32,
        degree: theta.minimal_polynomial().degree().unwrap_or(0),
    })
}

/// One row of the Galois signature census.
#[derive(Clone, Serialize)]
pub struct CensusRow {
    pub galois: GaloisMap,
    /// Which automorphism of the trace field this one restricts to.
    pub class_label: String,
    pub sig_ambient: SignaturePair,
    pub sig_restricted: SignaturePair,
    pub bounded: bool,
}

/// Census over all `2 phi(N)` automorphisms of the ambient field, grouped by
/// the induced automorphism of the adjoint trace field.
pub fn galois_census(l: &LatticePackage) -> Result<Vec<CensusRow>, Error> {
    let delta = tr_ad(
        &l.a2
            .mul(&l.b2)
            .mul(&l.a2.inverse()?)
            .mul(&l.b2.inverse()?),
    )?;
    let labels = class_labels(l, &delta)?;
    let mut rows = Vec::new();
    for g in GaloisMap::all(l.n) {
        let image = delta.apply_galois(&g)?;
        let label = labels
            .iter()
            .find(|(img, _)| *img == image)
            .map(|(_, lab)| lab.clone())
            .ok_or_else(|| {
                Error::InconsistentCensus("automorphism maps the primitive element outside its orbit".into())
            })?;
        let sig_ambient = form_signature(&l.h, &g)?;
        let sig_restricted = form_signature(&l.restricted_form, &g)?;
        rows.push(CensusRow {
            galois: g,
            class_label: label,
            sig_ambient,
            sig_restricted,
            bounded: sig_restricted.is_definite(),
        });
    }
    // within each class the signatures must agree, and the identity class is indefinite
    for row in &rows {
        let peer = rows
            .iter()
            .find(|r| r.class_label == row.class_label)
            .unwrap();
        if peer.sig_restricted != row.sig_restricted || peer.sig_ambient != row.sig_ambient {
            return Err(Error::InconsistentCensus(format!(
                "signatures disagree within class {}",
                row.class_label
            )));
        }
    }
    let id_row = rows
        .iter()
        .find(|r| r.galois.is_identity())
        .expect("identity row");
    if id_row.class_label != "id" || id_row.bounded {
        return Err(Error::InconsistentCensus(
            "identity class must be the unbounded lattice embedding".into(),
        ));
    }
    Ok(rows)
}

/// The four automorphisms of the (degree-4, Galois) trace field, labeled, as
/// images of the primitive element.
fn class_labels(
    l: &LatticePackage,
    delta: &FieldElement,
) -> Result<Vec<(FieldElement, String)>, Error> {
    let n = l.n;
    let mut out: Vec<(FieldElement, String)> = Vec::new();
    let mut push = |img: FieldElement, label: String| -> Result<(), Error> {
        for (existing, lab) in &out {
            if *existing == img {
                if *lab != label {
                    return Err(Error::InconsistentCensus(format!(
                        "classes {lab} and {label} coincide on the trace field"
                    )));
                }
                return Ok(());
            }
        }
        out.push((img, label));
        Ok(())
    };
    push(delta.clone(), "id".into())?;
    if l.p == 5 {
        // sigma5: zeta5 -> zeta5^2 (k = 2 mod 5), sqrt(-7) fixed
        // sigma7: sqrt(-7) -> -sqrt(-7), zeta5 fixed
        let sigma5 = GaloisMap::new(n, 2, 1)?;
        let sigma7 = GaloisMap::new(n, 1, -1)?;
        let sigma57 = GaloisMap::new(n, 2, -1)?;
        push(delta.apply_galois(&sigma5)?, "sigma5".into())?;
        push(delta.apply_galois(&sigma7)?, "sigma7".into())?;
        push(delta.apply_galois(&sigma57)?, "sigma5sigma7".into())?;
    } else {
        // biquadratic trace field Q(sqrt m, sqrt 7), m = 2 or 3:
        // label classes by the sign flips on sqrt(m) and sqrt(7)
        let m = if l.p == 8 { 2 } else { 3 };
        let zeta4 = FieldElement::zeta(n, n / 4);
        let sqrt_m = l.u.pow(3).add(&l.u.pow(3).conj());
        let sqrt7 = zeta4.neg().mul(&FieldElement::sqrt_minus7(n));
        debug_assert_eq!(
            sqrt_m.mul(&sqrt_m).is_rational(),
            Some(Rational::from_integer(m.into()))
        );
        debug_assert_eq!(
            sqrt7.mul(&sqrt7).is_rational(),
            Some(Rational::from_integer(7.into()))
        );
        for g in GaloisMap::all(n) {
            let flip_m = sqrt_m.apply_galois(&g)? != sqrt_m;
            let flip_7 = sqrt7.apply_galois(&g)? != sqrt7;
            let label = match (flip_m, flip_7) {
                (false, false) => "id".to_string(),
                (true, false) => format!("sigma{m}"),
                (false, true) => "sigma7".to_string(),
                (true, true) => format!("sigma{m}sigma7"),
            };
            push(delta.apply_galois(&g)?, label)?;
        }
    }
    if out.len() != 4 {
        return Err(Error::InconsistentCensus(format!(
            "expected 4 trace-field classes, found {}",
            out.len()
        )));
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ArithmeticityVerdict {
    Arithmetic,
    Nonarithmetic,
}

/// Nonarithmetic iff some nonidentity trace-field class is unbounded.
pub fn arithmeticity_verdict(census: &[CensusRow]) -> ArithmeticityVerdict {
    let unbounded_nonidentity = census
        .iter()
        .any(|r| r.class_label != "id" && !r.bounded);
    if unbounded_nonidentity {
        ArithmeticityVerdict::Nonarithmetic
    } else {
        ArithmeticityVerdict::Arithmetic
    }
}

/// Semi-arithmeticity: totally real trace field and all invariants integral.
pub fn semi_arithmetic_check(field: &AdjointTraceField) -> Result<bool, Error> {
    if !is_totally_real(&field.minimal_polynomial)? {
        return Ok(false);
    }
    Ok(field
        .records
        .iter()
        .all(|r| r.minimal_polynomial.has_integer_coeffs()))
}

/// One named identity check with a human-readable witness.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

/// The quartic `x^4 - 7x^3 + 9x^2 + 7x + 1` generating the `p = 5` trace field.
pub fn delta_quartic() -> QPoly {
    QPoly::from_int_coeffs(&[1, 7, 9, -7, 1])
}

/// Exact and certified checks tying the `p = 5` trace field to its stated
/// generator quartic: the discriminant value, the in-field square-root
/// identity, and the closed-form real embedding.
pub fn trace_field_identity_checks() -> Result<Vec<IdentityCheck>, Error> {
    let p = delta_quartic();
    let mut out = Vec::new();

    // (i) polynomial discriminant equals 6125
    let disc = p.discriminant();
    out.push(IdentityCheck {
        name: "discriminant of the generator quartic".into(),
        passed: disc == Rational::from_integer(6125.into()),
        witness: format!("disc = {}", crate::rational_str(&disc)),
    });

    // the stated real embedding: delta* = (7 - sqrt5 + sqrt(14 (5 - sqrt5)))/4
    let prec = 256usize;
    let five = RealInterval::from_integer(&Integer::from(5), prec);
    let sqrt5 = five.sqrt().expect("sqrt 5");
    let seven = RealInterval::from_integer(&Integer::from(7), prec);
    let fourteen = RealInterval::from_integer(&Integer::from(14), prec);
    let four = RealInterval::from_integer(&Integer::from(4), prec);
    let inner = fourteen.mul(&five.sub(&sqrt5)).sqrt().expect("sqrt of positive");
    let delta_star = seven.sub(&sqrt5).add(&inner).div(&four).expect("divide by 4");

    // (ii) solve x^2 = 5 in Q[x]/(p) and verify the displayed identity exactly
    let fld = NumberField::new(p.clone())?;
    let roots5 = roots_in_field(&QPoly::from_int_coeffs(&[-5, 0, 1]), &fld)?;
    let q_expr = fld.reduce(
        QPoly::from_int_coeffs(&[12, 38, -23, 3]).scale(&Rational::new(1.into(), 7.into())),
    );
    let q_sq = fld.mul(&q_expr, &q_expr);
    let fourteen_q = Rational::from_integer(14.into());
    let mut identity_ok = false;
    let mut witness = String::from("no square root of 5 found");
    for y in &roots5 {
        // only the root that is positive under the stated embedding
        let yv = fld.embed_at(y, &delta_star);
        if !yv.definitely_positive() {
            continue;
        }
        let rhs = fld.scale(
            &fld.add(&fld.from_rational(Rational::from_integer(5.into())), y),
            &(Rational::one() / fourteen_q.clone()),
        );
        identity_ok = q_sq == rhs;
        witness = format!(
            "sqrt5 = {}, ((3d^3 - 23d^2 + 38d + 12)/7)^2 {} (5 + sqrt5)/14",
            y.as_qpoly(),
            if identity_ok { "=" } else { "!=" }
        );
        // the displayed square root is itself positive there
        let qv = fld.embed_at(&q_expr, &delta_star);
        identity_ok = identity_ok && qv.definitely_positive();
        break;
    }
    out.push(IdentityCheck {
        name: "in-field square-root identity".into(),
        passed: identity_ok,
        witness,
    });

    // (iii) the closed form is a root of the quartic to certified 1e-30
    let prec_bits = prec;
    let mut val = RealInterval::zero(prec_bits);
    for c in p.coeffs().iter().rev() {
        val = val
            .mul(&delta_star)
            .add(&RealInterval::from_rational(c, prec_bits));
    }
    let bound = RealInterval::from_rational(
        &Rational::new(Integer::one(), Integer::from(10).pow(30)),
        prec_bits,
    );
    let resid_ok = val.abs().definitely_less(&bound);
    out.push(IdentityCheck {
        name: "closed-form embedding is a root".into(),
        passed: resid_ok,
        witness: format!(
            "delta* ~ {}, |p(delta*)| < 1e-30: {}",
            delta_star.mid_string(12),
            resid_ok
        ),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;

    #[test]
    fn tr_ad_of_identity_and_rotation() {
        let n = 24;
        let id = SquareMatrix::identity(2, n);
        assert_eq!(
            tr_ad(&id).unwrap(),
            FieldElement::from_integer(n, 4)
        );
        // diag(i, -i): trace 0
        let i = FieldElement::zeta(n, 6);
        let m = SquareMatrix::new(
            2,
            vec![i.clone(), FieldElement::zero(n), FieldElement::zero(n), i.neg()],
        );
        assert!(tr_ad(&m).unwrap().is_zero());
    }

    #[test]
    fn tr_ad_conjugation_invariance() {
        let l = build_lattice(5).unwrap();
        let m = l.a2.mul(&l.b2);
        let g = l.c2.mul(&l.d2);
        let conj = g.mul(&m).mul(&g.inverse().unwrap());
        assert_eq!(tr_ad(&m).unwrap(), tr_ad(&conj).unwrap());
    }

    #[test]
    fn commutator_invariant_is_quartic_and_generates_delta_field() {
        let l = build_lattice(5).unwrap();
        let comm = l
            .a2
            .mul(&l.b2)
            .mul(&l.a2.inverse().unwrap())
            .mul(&l.b2.inverse().unwrap());
        let t = tr_ad(&comm).unwrap();
        let mp = t.minimal_polynomial();
        assert_eq!(mp.degree(), Some(4));
        // the invariant's own minimal polynomial (frozen from exact computation)
        assert_eq!(
            mp,
            QPoly::from_int_coeffs(&[130321, -265796, 51046, -1181, 1])
        );
        // and it generates the field of x^4 - 7x^3 + 9x^2 + 7x + 1
        assert!(crate::numberfield::fields_isomorphic(&mp, &delta_quartic()).unwrap());
    }

    #[test]
    fn identity_checks_all_pass() {
        let checks = trace_field_identity_checks().unwrap();
        assert_eq!(checks.len(), 3);
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.witness);
        }
    }

    #[test]
    fn census_for_p5_matches_expected_pattern() {
        let l = build_lattice(5).unwrap();
        let rows = galois_census(&l).unwrap();
        assert_eq!(rows.len(), 16);
        for r in &rows {
            match r.class_label.as_str() {
                "id" | "sigma5" | "sigma7" => {
                    assert_eq!(r.sig_restricted, SignaturePair { positives: 1, negatives: 1 });
                    assert!(!r.bounded);
                    assert_eq!(r.sig_ambient, SignaturePair { positives: 2, negatives: 1 });
                }
                "sigma5sigma7" => {
                    assert!(r.sig_restricted.is_definite());
                    assert!(r.bounded);
                }
                other => panic!("unexpected class {other}"),
            }
        }
        assert_eq!(
            arithmeticity_verdict(&rows),
            ArithmeticityVerdict::Nonarithmetic
        );
    }
}
