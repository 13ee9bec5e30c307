//! Construction of the lattices and their quadrilateral Fuchsian subgroups.
//!
//! For `p` in {5, 8, 12} and `N = 3p`, the generators live in `SU(H)` for an
//! explicit hermitian form `H` over `Q(zeta_N, sqrt(-7))`. The elements
//! `a, b, c, d` centralize `R_1`, so they preserve the orthogonal complement of
//! `e_1` and restrict to a Fuchsian quadrilateral group acting on the disk
//! carried by that complement. Every defining relation is verified exactly at
//! construction time.

use serde::Serialize;

use crate::field::{FieldElement, GaloisMap};
use crate::hermitian::{
    form_signature, orthogonal_complement, projective_order, restrict_to_complement,
    restricted_form, HermitianForm, ProjectiveOrder, SignaturePair, DEFAULT_ORDER_BOUND,
};
use crate::matrix::SquareMatrix;
use crate::{Error, Rational};

/// Everything constructed for one value of `p`: ambient generators, the form,
/// the quadrilateral group generators, and their disk restrictions.
#[derive(Clone, Serialize)]
pub struct LatticePackage {
    pub p: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub u: FieldElement,
    pub tau: FieldElement,
    pub alpha: FieldElement,
    pub beta: FieldElement,
    #[serde(rename = "R1")]
    pub r1: SquareMatrix,
    #[serde(rename = "R2")]
    pub r2: SquareMatrix,
    #[serde(rename = "R3")]
    pub r3: SquareMatrix,
    #[serde(rename = "J")]
    pub j: SquareMatrix,
    #[serde(rename = "H")]
    pub h: HermitianForm,
    pub a: SquareMatrix,
    pub b: SquareMatrix,
    pub c: SquareMatrix,
    pub d: SquareMatrix,
    pub disk_basis: Vec<Vec<FieldElement>>,
    pub restricted_form: HermitianForm,
    pub a2: SquareMatrix,
    pub b2: SquareMatrix,
    pub c2: SquareMatrix,
    pub d2: SquareMatrix,
}

pub const SUPPORTED_P: [u32; 3] = [5, 8, 12];

/// Build and exactly verify the package for `p` in {5, 8, 12}.
pub fn build_lattice(p: u32) -> Result<LatticePackage, Error> {
    assert!(
        SUPPORTED_P.contains(&p),
        "p must be one of {SUPPORTED_P:?}, got {p}"
    );
    let n = 3 * p;
    let half = Rational::new(1.into(), 2.into());
    let u = FieldElement::zeta(n, 1);
    let ub = u.conj();
    let tau = FieldElement::one(n)
        .add(&FieldElement::sqrt_minus7(n))
        .scale(&half)
        .neg();
    let taub = tau.conj();
    let alpha = FieldElement::from_integer(n, 2)
        .sub(&u.pow(3))
        .sub(&ub.pow(3));
    let beta = ub.pow(2).sub(&u).mul(&tau);
    let betab = beta.conj();

    let zero = || FieldElement::zero(n);
    let one = || FieldElement::one(n);
    let r1 = SquareMatrix::new(
        3,
        vec![
            u.pow(2),
            tau.clone(),
            u.mul(&taub).neg(),
            zero(),
            ub.clone(),
            zero(),
            zero(),
            zero(),
            ub.clone(),
        ],
    );
    let j = SquareMatrix::new(
        3,
        vec![
            zero(),
            zero(),
            one(),
            one(),
            zero(),
            zero(),
            zero(),
            one(),
            zero(),
        ],
    );
    let h = HermitianForm::new(SquareMatrix::new(
        3,
        vec![
            alpha.clone(),
            beta.clone(),
            betab.clone(),
            betab.clone(),
            alpha.clone(),
            beta.clone(),
            beta.clone(),
            betab.clone(),
            alpha.clone(),
        ],
    ))?;

    let jinv = j.inverse()?;
    let r2 = j.mul(&r1).mul(&jinv);
    let r3 = jinv.mul(&r1).mul(&j);
    let a = r1.mul(&r2).pow(2);
    let b = r1.mul(&r3).pow(2);
    let c = r2
        .mul(&r3)
        .mul(&r2.inverse()?)
        .mul(&r1.mul(&j).pow(2));
    let d = a.mul(&b).mul(&c).inverse()?;

    let check = |name: &str, ok: bool| -> Result<(), Error> {
        if ok {
            Ok(())
        } else {
            Err(Error::RelationFailed(name.to_string()))
        }
    };

    check("det R1 = 1", r1.det() == one())?;
    check("det J = 1", j.det() == one())?;
    check("J^3 = I", j.pow(3).is_identity())?;
    check("R1* H R1 = H", h.is_unitary(&r1))?;
    check("J* H J = H", h.is_unitary(&j))?;
    check("c^2 = R1^-1", c.pow(2) == r1.inverse()?)?;
    for (name, m) in [("a", &a), ("b", &b), ("c", &c), ("d", &d)] {
        check(
            &format!("{name} R1 = R1 {name}"),
            m.mul(&r1) == r1.mul(m),
        )?;
        check(&format!("{name}* H {name} = H"), h.is_unitary(m))?;
    }
    check("abc d = I", a.mul(&b).mul(&c).mul(&d).is_identity())?;

    let e1 = vec![one(), zero(), zero()];
    let id = GaloisMap::identity(n);
    check("<e1, e1> positive", h.evaluate(&e1, &e1).sign_at(&id)? == 1)?;
    check(
        "H has signature (2,1)",
        form_signature(&h, &id)?
            == SignaturePair {
                positives: 2,
                negatives: 1,
            },
    )?;

    let disk_basis = orthogonal_complement(&h, &e1)?;
    let g2 = restricted_form(&h, &disk_basis)?;
    check(
        "restricted form has signature (1,1)",
        form_signature(&g2, &id)?
            == SignaturePair {
                positives: 1,
                negatives: 1,
            },
    )?;
    let a2 = restrict_to_complement(&a, &disk_basis, "a")?;
    let b2 = restrict_to_complement(&b, &disk_basis, "b")?;
    let c2 = restrict_to_complement(&c, &disk_basis, "c")?;
    let d2 = restrict_to_complement(&d, &disk_basis, "d")?;
    for (name, m) in [("a2", &a2), ("b2", &b2), ("c2", &c2), ("d2", &d2)] {
        check(&format!("{name} preserves restricted form"), g2.is_unitary(m))?;
    }

    Ok(LatticePackage {
        p,
        n,
        u,
        tau,
        alpha,
        beta,
        r1,
        r2,
        r3,
        j,
        h,
        a,
        b,
        c,
        d,
        disk_basis,
        restricted_form: g2,
        a2,
        b2,
        c2,
        d2,
    })
}

impl LatticePackage {
    pub fn generator(&self, name: char) -> Option<&SquareMatrix> {
        match name {
            'a' => Some(&self.a),
            'b' => Some(&self.b),
            'c' => Some(&self.c),
            'd' => Some(&self.d),
            _ => None,
        }
    }

    pub fn restricted_generator(&self, name: char) -> Option<&SquareMatrix> {
        match name {
            'a' => Some(&self.a2),
            'b' => Some(&self.b2),
            'c' => Some(&self.c2),
            'd' => Some(&self.d2),
            _ => None,
        }
    }

    /// Projective orders of the restricted generators `(a2, b2, c2, d2)`.
    pub fn restricted_orders(&self) -> Result<Vec<u32>, Error> {
        [&self.a2, &self.b2, &self.c2, &self.d2]
            .iter()
            .map(|m| match projective_order(m, DEFAULT_ORDER_BOUND)? {
                ProjectiveOrder::Finite(k) => Ok(k),
                ProjectiveOrder::Infinite => Err(Error::RelationFailed(
                    "restricted generator has infinite order".into(),
                )),
            })
            .collect()
    }

    /// Cone orders of the quadrilateral signature, sorted ascending.
    pub fn cone_orders(&self) -> Result<Vec<u32>, Error> {
        let mut v = self.restricted_orders()?;
        v.sort_unstable();
        Ok(v)
    }
}

/// One named exact check.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
}

/// Re-verify the package relations, reporting each identity separately.
pub fn verify_relations(l: &LatticePackage) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    let mut push = |name: &str, ok: bool| {
        out.push(RelationCheck {
            name: name.to_string(),
            passed: ok,
        })
    };
    let r1inv = l.r1.inverse().expect("R1 invertible");
    push("c^2 = R1^-1", l.c.pow(2) == r1inv);
    for (name, m) in [("a", &l.a), ("b", &l.b), ("c", &l.c), ("d", &l.d)] {
        push(
            &format!("[{name}, R1] = I"),
            m.mul(&l.r1) == l.r1.mul(m),
        );
    }
    push(
        "abc d = I",
        l.a.mul(&l.b).mul(&l.c).mul(&l.d).is_identity(),
    );
    push("J^3 = I", l.j.pow(3).is_identity());
    for (name, m) in [
        ("R1", &l.r1),
        ("J", &l.j),
        ("a", &l.a),
        ("b", &l.b),
        ("c", &l.c),
        ("d", &l.d),
    ] {
        push(&format!("{name}* H {name} = H"), l.h.is_unitary(m));
    }
    out
}

/// Evaluate a word over the generators, e.g. `"c c"`, `"a^-1 b^2"`, `"[a,b] J"`.
/// Tokens: `a b c d R1 J`, exponents `^k` with integer `k`, commutators `[x,y]`,
/// parentheses for grouping.
pub fn word_evaluate(l: &LatticePackage, word: &str) -> Result<SquareMatrix, Error> {
    let tokens = tokenize(word)?;
    if tokens.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut pos = 0usize;
    let m = parse_word(l, &tokens, &mut pos, None)?;
    if pos != tokens.len() {
        return Err(Error::WordSyntax(format!(
            "unexpected token at position {pos}"
        )));
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Gen(char),
    R1,
    J,
    Caret,
    Int(i64),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        match ch {
            ' ' | '\t' | '*' | '·' => i += 1,
            'a' | 'b' | 'c' | 'd' => {
                out.push(Token::Gen(ch));
                i += 1;
            }
            'R' => {
                if bytes.get(i + 1) == Some(&'1') {
                    out.push(Token::R1);
                    i += 2;
                } else {
                    return Err(Error::WordSyntax("expected R1".into()));
                }
            }
            'J' => {
                out.push(Token::J);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '[' => {
                out.push(Token::LBracket);
                i += 1;
            }
            ']' => {
                out.push(Token::RBracket);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            ',' => {
                out.push(Token::Comma);
                i += 1;
            }
            '-' | '0'..='9' => {
                let start = i;
                if ch == '-' {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = bytes[start..i].iter().collect();
                let v: i64 = text
                    .parse()
                    .map_err(|_| Error::WordSyntax(format!("bad exponent {text:?}")))?;
                out.push(Token::Int(v));
            }
            other => {
                return Err(Error::WordSyntax(format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(out)
}

fn parse_word(
    l: &LatticePackage,
    tokens: &[Token],
    pos: &mut usize,
    stop: Option<&Token>,
) -> Result<SquareMatrix, Error> {
    let mut acc = SquareMatrix::identity(3, l.n);
    let mut any = false;
    while *pos < tokens.len() {
        if let Some(stop_tok) = stop {
            if &tokens[*pos] == stop_tok {
                break;
            }
            if tokens[*pos] == Token::Comma && *stop_tok == Token::RBracket {
                break;
            }
        }
        let atom = parse_atom(l, tokens, pos)?;
        acc = acc.mul(&atom);
        any = true;
    }
    if !any {
        return Err(Error::EmptyWord);
    }
    Ok(acc)
}

fn parse_atom(
    l: &LatticePackage,
    tokens: &[Token],
    pos: &mut usize,
) -> Result<SquareMatrix, Error> {
    let base = match tokens.get(*pos) {
        Some(Token::Gen(gch)) => {
            let m = l.generator(*gch).unwrap().clone();
            *pos += 1;
            m
        }
        Some(Token::R1) => {
            *pos += 1;
            l.r1.clone()
        }
        Some(Token::J) => {
            *pos += 1;
            l.j.clone()
        }
        Some(Token::LParen) => {
            *pos += 1;
            let m = parse_word(l, tokens, pos, Some(&Token::RParen))?;
            match tokens.get(*pos) {
                Some(Token::RParen) => *pos += 1,
                _ => return Err(Error::WordSyntax("expected )".into())),
            }
            m
        }
        Some(Token::LBracket) => {
            *pos += 1;
            let x = parse_word(l, tokens, pos, Some(&Token::RBracket))?;
            match tokens.get(*pos) {
                Some(Token::Comma) => *pos += 1,
                _ => return Err(Error::WordSyntax("expected , in commutator".into())),
            }
            let y = parse_word(l, tokens, pos, Some(&Token::RBracket))?;
            match tokens.get(*pos) {
                Some(Token::RBracket) => *pos += 1,
                _ => return Err(Error::WordSyntax("expected ]".into())),
            }
            x.mul(&y).mul(&x.inverse()?).mul(&y.inverse()?)
        }
        other => {
            return Err(Error::WordSyntax(format!("unexpected token {other:?}")));
        }
    };
    if tokens.get(*pos) == Some(&Token::Caret) {
        *pos += 1;
        match tokens.get(*pos) {
            Some(Token::Int(e)) => {
                *pos += 1;
                let m = if *e < 0 {
                    base.inverse()?.pow((-e) as u64)
                } else {
                    base.pow(*e as u64)
                };
                Ok(m)
            }
            _ => Err(Error::WordSyntax("expected integer exponent".into())),
        }
    } else {
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p5_package_builds_and_has_correct_orders() {
        let l = build_lattice(5).unwrap();
        assert_eq!(l.cone_orders().unwrap(), vec![2, 10, 10, 10]);
        let orders = l.restricted_orders().unwrap();
        assert_eq!(orders, vec![10, 10, 2, 10]); // (a2, b2, c2, d2)
    }

    #[test]
    fn verify_relations_all_pass_for_p5() {
        let l = build_lattice(5).unwrap();
        let report = verify_relations(&l);
        assert!(report.iter().all(|c| c.passed), "{report:?}");
        assert!(report.iter().any(|c| c.name == "c^2 = R1^-1"));
    }

    #[test]
    fn word_evaluation() {
        let l = build_lattice(5).unwrap();
        // c c = R1^-1
        let cc = word_evaluate(&l, "c c").unwrap();
        assert_eq!(cc, l.r1.inverse().unwrap());
        let same = word_evaluate(&l, "c^2").unwrap();
        assert_eq!(same, cc);
        // a a^-1 = identity
        assert!(word_evaluate(&l, "a a^-1").unwrap().is_identity());
        // [a, b] has eigenvalue 1 on the e1 line: it fixes e1
        let comm = word_evaluate(&l, "[a,b]").unwrap();
        let n = l.n;
        let e1 = vec![
            FieldElement::one(n),
            FieldElement::zero(n),
            FieldElement::zero(n),
        ];
        assert_eq!(comm.apply(&e1), e1);
        // grouping and R1/J tokens
        let w = word_evaluate(&l, "(R1 J)^2 (R1 J)^-2").unwrap();
        assert!(w.is_identity());
        assert!(matches!(word_evaluate(&l, ""), Err(Error::EmptyWord)));
        assert!(word_evaluate(&l, "x").is_err());
    }
}
