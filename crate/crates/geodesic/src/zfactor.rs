//! Factorization of integer and rational polynomials.
//!
//! Pipeline: squarefree reduction, Cantor-Zassenhaus factorization modulo a
//! small good prime, monic Hensel lifting to a power of the prime beyond the
//! Mignotte bound, and brute-force factor recombination. Degrees in this crate
//! never exceed 16, so subset recombination is cheap.

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::qpoly::QPoly;
use crate::{Integer, Rational};

/// Irreducible monic factors of `f` over Q, with multiplicities.
/// The product of `factor^multiplicity` equals `f` up to a rational scalar.
pub fn factor(f: &QPoly) -> Vec<(QPoly, u32)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut out: Vec<(QPoly, u32)> = Vec::new();
    let mut work = f.monic();
    // strip powers of x
    let mut xmult = 0u32;
    while work.coeff(0).is_zero() && work.degree().unwrap_or(0) >= 1 {
        work = work.divrem(&QPoly::x()).0;
        xmult += 1;
    }
    if xmult > 0 {
        out.push((QPoly::x(), xmult));
    }
    if work.degree().unwrap_or(0) == 0 {
        return out;
    }
    let squarefree = work.squarefree_part();
    for g in factor_squarefree(&squarefree) {
        let mut mult = 0u32;
        loop {
            let (q, r) = work.divrem(&g);
            if r.is_zero() {
                work = q;
                mult += 1;
            } else {
                break;
            }
        }
        debug_assert!(mult >= 1);
        out.push((g, mult));
    }
    out.sort_by(|a, b| {
        (a.0.degree(), a.0.to_coeff_strings()).cmp(&(b.0.degree(), b.0.to_coeff_strings()))
    });
    out
}

pub fn is_irreducible(f: &QPoly) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let fs = factor(f);
            fs.len() == 1 && fs[0].1 == 1
        }
    }
}

fn factor_squarefree(f: &QPoly) -> Vec<QPoly> {
    let n = f.degree().expect("nonzero");
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![f.monic()];
    }
    let ints = f.primitive_integer_coeffs();
    let lc = ints.last().unwrap().clone();
    if lc.is_one() {
        return factor_monic_integer(&ints);
    }
    // monicize: F*(x) = lc^(n-1) * F(x / lc) is monic with integer coefficients;
    // coefficient of x^i becomes c_i * lc^(n-1-i)
    let mut scaled = vec![Integer::one(); ints.len()];
    let mut pw = Integer::one();
    for i in (0..n).rev() {
        scaled[i] = &ints[i] * &pw;
        pw *= &lc;
    }
    let factors = factor_monic_integer(&scaled);
    let lcq = Rational::from_integer(lc);
    factors
        .into_iter()
        .map(|g| {
            // map back g(lc * x), then renormalize to monic over Q
            g.compose_linear(&lcq, &Rational::zero()).monic()
        })
        .collect()
}

fn int_to_qpoly(ints: &[Integer]) -> QPoly {
    QPoly::new(ints.iter().cloned().map(Rational::from_integer).collect())
}

/// Factor a squarefree monic integer polynomial into monic irreducible integer polynomials.
fn factor_monic_integer(f: &[Integer]) -> Vec<QPoly> {
    let n = f.len() - 1;
    debug_assert!(f[n].is_one());
    if n == 1 {
        return vec![int_to_qpoly(f)];
    }
    let (p, modular) = modular_factorization(f);
    if modular.len() == 1 {
        return vec![int_to_qpoly(f)];
    }
    // Hensel lift to p^k > 2 * Mignotte bound
    let bound = mignotte_bound(f);
    let mut pk = Integer::from(p);
    let mut k = 1u32;
    let two_bound = &bound * Integer::from(2);
    while pk <= two_bound {
        pk *= Integer::from(p);
        k += 1;
    }
    let lifted = hensel_lift_tree(f, &modular, p, k);
    recombine(f, lifted, &pk)
}

/// Factor f mod p for the first good prime p; returns (p, monic modular factors).
fn modular_factorization(f: &[Integer]) -> (u64, Vec<Vec<u64>>) {
    let mut p = 3u64;
    loop {
        if is_prime(p) {
            let fp = reduce_mod(f, p);
            if fp.len() == f.len() {
                let dfp = poly_derivative(&fp, p);
                if poly_gcd(&fp, &dfp, p).len() == 1 {
                    let mut fs = cz_factor(&fp, p);
                    fs.sort();
                    return (p, fs);
                }
            }
        }
        p += 2;
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mignotte_bound(f: &[Integer]) -> Integer {
    // any monic factor g of monic f satisfies |g|_inf <= 2^n * |f|_2
    let n = f.len() - 1;
    let norm2_sq: Integer = f.iter().map(|c| c * c).sum();
    let norm2 = norm2_sq.sqrt() + Integer::one();
    (Integer::one() << n) * norm2
}

// ---- arithmetic mod a small prime ----

fn reduce_mod(f: &[Integer], p: u64) -> Vec<u64> {
    let pp = Integer::from(p);
    let mut v: Vec<u64> = f
        .iter()
        .map(|c| c.mod_floor(&pp).to_u64().unwrap())
        .collect();
    while v.last().map_or(false, |&c| c == 0) {
        v.pop();
    }
    v
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod_u(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod_u(a, p - 2, p)
}

fn poly_trim(f: &mut Vec<u64>) {
    while f.last().map_or(false, |&c| c == 0) {
        f.pop();
    }
}

fn poly_derivative(f: &[u64], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mulmod(c, (i as u64) % p, p))
        .collect();
    poly_trim(&mut v);
    v
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + mulmod(x, y, p)) % p;
        }
    }
    poly_trim(&mut v);
    v
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let inv_lc = invmod(m[dm], p);
    let mut r = a.to_vec();
    while r.len() > dm {
        let c = mulmod(*r.last().unwrap(), inv_lc, p);
        let k = r.len() - 1 - dm;
        if c != 0 {
            for (j, &mc) in m.iter().enumerate() {
                let sub = mulmod(c, mc, p);
                r[k + j] = (r[k + j] + p - sub) % p;
            }
        }
        r.pop();
        poly_trim(&mut r);
        if r.len() <= dm {
            break;
        }
    }
    poly_trim(&mut r);
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut f, mut g) = (a.to_vec(), b.to_vec());
    while !g.is_empty() {
        let r = poly_rem(&f, &g, p);
        f = g;
        g = r;
    }
    // normalize monic
    if let Some(&lc) = f.last() {
        let inv = invmod(lc, p);
        for c in f.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    f
}

fn poly_powmod(base: &[u64], mut e: Integer, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while e.is_positive() {
        if e.is_odd() {
            acc = poly_rem(&poly_mul(&acc, &b, p), m, p);
        }
        e >>= 1;
        if e.is_positive() {
            b = poly_rem(&poly_mul(&b, &b, p), m, p);
        }
    }
    acc
}

/// Cantor-Zassenhaus factorization of a squarefree monic polynomial mod p (p odd).
fn cz_factor(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    // distinct-degree split
    let mut rest = f.to_vec();
    let mut d = 1usize;
    let mut xp = vec![0u64, 1]; // x
    while rest.len() - 1 >= 2 * d {
        xp = poly_powmod(&xp, Integer::from(p), &rest, p);
        // gcd(x^(p^d) - x, rest)
        let mut diff = xp.clone();
        while diff.len() < 2 {
            diff.push(0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        let g = poly_gcd(&rest, &diff, p);
        if g.len() > 1 {
            edf(&g, d, p, &mut out);
            rest = poly_div_exact(&rest, &g, p);
            xp = poly_rem(&xp, &rest, p);
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(monic_mod(&rest, p));
    }
    out
}

fn poly_div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    // a = q*b exactly
    let db = b.len() - 1;
    let inv_lc = invmod(b[db], p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    while r.len() > db {
        let c = mulmod(*r.last().unwrap(), inv_lc, p);
        let k = r.len() - 1 - db;
        q[k] = c;
        for (j, &bc) in b.iter().enumerate() {
            let sub = mulmod(c, bc, p);
            r[k + j] = (r[k + j] + p - sub) % p;
        }
        r.pop();
        poly_trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    q
}

fn monic_mod(f: &[u64], p: u64) -> Vec<u64> {
    let mut v = f.to_vec();
    let inv = invmod(*v.last().unwrap(), p);
    for c in v.iter_mut() {
        *c = mulmod(*c, inv, p);
    }
    v
}

/// Equal-degree factorization: h is monic squarefree, product of irreducibles of degree d.
fn edf(h: &[u64], d: usize, p: u64, out: &mut Vec<Vec<u64>>) {
    if h.len() - 1 == d {
        out.push(monic_mod(h, p));
        return;
    }
    // deterministic pseudo-random splitting
    let mut seed = 0x9e3779b97f4a7c15u64 ^ (h.len() as u64) ^ (d as u64) << 8;
    let exp = (Integer::from(p).pow(d as u32) - Integer::one()) / Integer::from(2);
    loop {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let mut r: Vec<u64> = (0..h.len() - 1)
            .map(|i| {
                let mut s = seed.wrapping_add((i as u64).wrapping_mul(0x853c49e6748fea9b));
                s ^= s >> 33;
                s = s.wrapping_mul(0xff51afd7ed558ccd);
                s ^= s >> 33;
                s % p
            })
            .collect();
        poly_trim(&mut r);
        if r.len() <= 1 {
            continue;
        }
        let e = poly_powmod(&r, exp.clone(), h, p);
        // gcd(e - 1, h)
        let mut em1 = e;
        if em1.is_empty() {
            em1.push(p - 1);
        } else {
            em1[0] = (em1[0] + p - 1) % p;
        }
        poly_trim(&mut em1);
        if em1.is_empty() {
            continue;
        }
        let g = poly_gcd(h, &em1, p);
        if g.len() > 1 && g.len() < h.len() {
            edf(&g, d, p, out);
            edf(&poly_div_exact(h, &g, p), d, p, out);
            return;
        }
    }
}

// ---- Hensel lifting (monic) ----

/// Lift the modular factorization of monic f to modulus p^k, via a factor tree.
fn hensel_lift_tree(f: &[Integer], factors: &[Vec<u64>], p: u64, k: u32) -> Vec<Vec<Integer>> {
    if factors.len() == 1 {
        // f itself reduced mod p^k
        let pk = Integer::from(p).pow(k);
        return vec![f.iter().map(|c| c.mod_floor(&pk)).collect()];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g0 = left
        .iter()
        .fold(vec![1u64], |acc, fi| poly_mul(&acc, fi, p));
    let h0 = right
        .iter()
        .fold(vec![1u64], |acc, fi| poly_mul(&acc, fi, p));
    let (g, h) = hensel_lift_pair(f, &g0, &h0, p, k);
    let mut out = hensel_lift_tree(&g, left, p, k);
    out.extend(hensel_lift_tree(&h, right, p, k));
    out
}

/// Given monic f = g0*h0 mod p with gcd(g0,h0)=1, lift to f = G*H mod p^k (G, H monic).
fn hensel_lift_pair(
    f: &[Integer],
    g0: &[u64],
    h0: &[u64],
    p: u64,
    k: u32,
) -> (Vec<Integer>, Vec<Integer>) {
    // Bezout: s*g0 + t*h0 = 1 mod p
    let (s0, t0) = poly_xgcd_mod(g0, h0, p);
    let to_int = |v: &[u64]| -> Vec<Integer> { v.iter().map(|&c| Integer::from(c)).collect() };
    let mut g = to_int(g0);
    let mut h = to_int(h0);
    let s = to_int(&s0);
    let t = to_int(&t0);
    let mut modulus = Integer::from(p);
    for _ in 1..k {
        let next = &modulus * Integer::from(p);
        // e = f - g*h mod next
        let gh = zpoly_mul(&g, &h);
        let e = zpoly_sub_mod(f, &gh, &next);
        // all coefficients of e are divisible by modulus
        let e_div: Vec<Integer> = e.iter().map(|c| c / &modulus).collect();
        // g += modulus * (t*e_div mod g), h += modulus * (s*e_div mod h)  (all mod p)
        let dg = zpoly_rem_mod_p(&zpoly_mul(&t, &e_div), &g, p);
        let dh = zpoly_rem_mod_p(&zpoly_mul(&s, &e_div), &h, p);
        g = zpoly_add_scaled_mod(&g, &dg, &modulus, &next);
        h = zpoly_add_scaled_mod(&h, &dh, &modulus, &next);
        modulus = next;
    }
    (g, h)
}

fn poly_xgcd_mod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    // returns (s, t) with s*a + t*b = 1 (a, b coprime mod p)
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem_mod(&r0, &r1, p);
        let snew = poly_sub_mod(&s0, &poly_mul(&q, &s1, p), p);
        let tnew = poly_sub_mod(&t0, &poly_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = snew;
        t0 = t1;
        t1 = tnew;
    }
    // r0 is a nonzero constant; scale to 1
    let inv = invmod(r0[0], p);
    let scale = |v: &[u64]| -> Vec<u64> { v.iter().map(|&c| mulmod(c, inv, p)).collect() };
    (scale(&s0), scale(&t0))
}

fn poly_divrem_mod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (vec![], a.to_vec());
    }
    let inv_lc = invmod(b[db], p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    while r.len() > db {
        let c = mulmod(*r.last().unwrap(), inv_lc, p);
        let k = r.len() - 1 - db;
        q[k] = c;
        for (j, &bc) in b.iter().enumerate() {
            let sub = mulmod(c, bc, p);
            r[k + j] = (r[k + j] + p - sub) % p;
        }
        r.pop();
        poly_trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    poly_trim(&mut q);
    (q, r)
}

fn poly_sub_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut v = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        v[i] = (x + p - y) % p;
    }
    poly_trim(&mut v);
    v
}

fn zpoly_mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

fn zpoly_sub_mod(a: &[Integer], b: &[Integer], m: &Integer) -> Vec<Integer> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Integer::zero);
            let y = b.get(i).cloned().unwrap_or_else(Integer::zero);
            (x - y).mod_floor(m)
        })
        .collect()
}

/// (a mod p) reduced modulo monic integer polynomial g, coefficients mod p.
fn zpoly_rem_mod_p(a: &[Integer], g: &[Integer], p: u64) -> Vec<u64> {
    let pp = Integer::from(p);
    let ap: Vec<u64> = {
        let mut v: Vec<u64> = a
            .iter()
            .map(|c| c.mod_floor(&pp).to_u64().unwrap())
            .collect();
        poly_trim(&mut v);
        v
    };
    let gp = {
        let mut v: Vec<u64> = g
            .iter()
            .map(|c| c.mod_floor(&pp).to_u64().unwrap())
            .collect();
        poly_trim(&mut v);
        v
    };
    if ap.len() < gp.len() {
        return ap;
    }
    poly_rem(&ap, &gp, p)
}

fn zpoly_add_scaled_mod(
    base: &[Integer],
    delta_mod_p: &[u64],
    scale: &Integer,
    modulus: &Integer,
) -> Vec<Integer> {
    let n = base.len().max(delta_mod_p.len());
    (0..n)
        .map(|i| {
            let x = base.get(i).cloned().unwrap_or_else(Integer::zero);
            let d = delta_mod_p
                .get(i)
                .map(|&c| Integer::from(c))
                .unwrap_or_else(Integer::zero);
            (x + scale * d).mod_floor(modulus)
        })
        .collect()
}

// ---- recombination ----

fn symmetric(c: &Integer, m: &Integer) -> Integer {
    let r = c.mod_floor(m);
    if &r * Integer::from(2) > *m {
        r - m
    } else {
        r
    }
}

fn recombine(f: &[Integer], lifted: Vec<Vec<Integer>>, pk: &Integer) -> Vec<QPoly> {
    let mut remaining: Vec<Vec<Integer>> = lifted;
    let mut current: Vec<Integer> = f.to_vec();
    let mut out = Vec::new();
    let mut s = 1usize;
    'outer: while 2 * s <= remaining.len() {
        let masks = subsets_of_size(remaining.len(), s);
        for mask in masks {
            // candidate = product of chosen lifted factors mod p^k, symmetric lift
            let mut cand = vec![Integer::one()];
            for (i, fac) in remaining.iter().enumerate() {
                if mask & (1usize << i) != 0 {
                    cand = zpoly_mul(&cand, fac)
                        .into_iter()
                        .map(|c| c.mod_floor(pk))
                        .collect();
                }
            }
            let cand: Vec<Integer> = cand.iter().map(|c| symmetric(c, pk)).collect();
            if let Some(quot) = zpoly_divide_exact(&current, &cand) {
                out.push(int_to_qpoly(&cand));
                current = quot;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1usize << i) == 0)
                    .map(|(_, v)| v)
                    .collect();
                continue 'outer;
            }
        }
        s += 1;
    }
    if current.len() > 1 {
        out.push(int_to_qpoly(&current));
    }
    out
}

fn subsets_of_size(n: usize, s: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut mask = (1usize << s) - 1;
    if s == 0 || s > n {
        return out;
    }
    let limit = 1usize << n;
    while mask < limit {
        out.push(mask);
        // Gosper's hack
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        if c == 0 {
            break;
        }
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

/// Exact division over Z; None if it does not divide.
fn zpoly_divide_exact(a: &[Integer], b: &[Integer]) -> Option<Vec<Integer>> {
    if b.len() > a.len() {
        return None;
    }
    let db = b.len() - 1;
    let lc = b[db].clone();
    let mut r: Vec<Integer> = a.to_vec();
    let mut q = vec![Integer::zero(); a.len() - db];
    while r.len() > db {
        let (c, rem) = r.last().unwrap().div_rem(&lc);
        if !rem.is_zero() {
            return None;
        }
        let k = r.len() - 1 - db;
        for (j, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[k + j] -= t;
        }
        q[k] = c;
        r.pop();
        while r.last().map_or(false, |c| c.is_zero()) && r.len() > db {
            r.pop();
        }
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_int_coeffs(c)
    }

    #[test]
    fn splits_difference_of_squares() {
        let fs = factor(&p(&[-1, 0, 1]));
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, p(&[-1, 1]));
        assert_eq!(fs[1].0, p(&[1, 1]));
    }

    #[test]
    fn delta_quartic_is_irreducible() {
        assert!(is_irreducible(&p(&[1, 7, 9, -7, 1])));
    }

    #[test]
    fn sqrt2_plus_sqrt7_quartic_is_irreducible() {
        // minimal polynomial of sqrt2 + sqrt7: x^4 - 18x^2 + 25
        assert!(is_irreducible(&p(&[25, 0, -18, 0, 1])));
    }

    #[test]
    fn factors_cyclotomic_products() {
        let f = QPoly::cyclotomic(15).mul(&QPoly::cyclotomic(5)).mul(&p(&[0, 1]));
        let fs = factor(&f);
        let degs: Vec<_> = fs.iter().map(|(g, m)| (g.degree().unwrap(), *m)).collect();
        assert_eq!(degs, vec![(1, 1), (4, 1), (8, 1)]);
    }

    #[test]
    fn multiplicity_detected() {
        let f = p(&[-1, 1]).pow(3).mul(&p(&[1, 1]));
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0], (p(&[-1, 1]), 3));
        assert_eq!(fs[1], (p(&[1, 1]), 1));
    }

    #[test]
    fn nonmonic_input_normalizes() {
        // 16x^4 + 8x^3 - 16x^2 - 8x + 1 (minimal polynomial of cos(pi/15), scaled)
        let f = p(&[1, -8, -16, 8, 16]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0.degree(), Some(4));
        assert!(fs[0].0.is_monic());
    }

    #[test]
    fn degree_16_product() {
        // product of two degree-8 cyclotomics
        let f = QPoly::cyclotomic(15).mul(&QPoly::cyclotomic(24));
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(g, _)| g.degree() == Some(8)));
    }
}
