//! Triangle-group commensurability exclusion.
//!
//! Enumerates every hyperbolic triangle group that could contain a finite-index
//! subgroup of a given orbifold signature. A candidate `(p, q, r)` with index
//! `d` survives three exact filters: the orbifold Euler characteristic ratio is
//! a positive integer; the cone orders distribute over the vertices with
//! consistent local degrees; and the branching datum is realizable by an actual
//! transitive permutation triple (the monodromy of the covering). The last
//! filter is decided by backtracking search, so the emitted list is exactly the
//! set of triangle groups admitting such a subgroup.

use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cyclotomic::CycloElement;
use crate::numberfield::fields_isomorphic;
use crate::qpoly::QPoly;
use crate::{Error, Integer, Rational};

/// Genus and cone orders of a 2-orbifold.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrbifoldSignature {
    pub genus: u32,
    /// sorted ascending
    pub cone_orders: Vec<u32>,
}

impl OrbifoldSignature {
    pub fn new(genus: u32, mut cone_orders: Vec<u32>) -> Self {
        assert!(cone_orders.iter().all(|&m| m >= 2), "cone orders must be >= 2");
        cone_orders.sort_unstable();
        OrbifoldSignature { genus, cone_orders }
    }

    /// Exact orbifold Euler characteristic `2 - 2g - sum(1 - 1/m)`.
    pub fn euler_char(&self) -> Rational {
        let mut chi = Rational::from_integer(Integer::from(2 - 2 * self.genus as i64));
        for &m in &self.cone_orders {
            chi -= Rational::one() - Rational::new(Integer::one(), Integer::from(m));
        }
        chi
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.euler_char().is_negative()
    }
}

impl std::fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let orders: Vec<String> = self.cone_orders.iter().map(|m| m.to_string()).collect();
        write!(f, "({};{})", self.genus, orders.join(","))
    }
}

impl FromStr for OrbifoldSignature {
    type Err = Error;

    /// Parse `"genus;m1,m2,..."`, e.g. `"0;2,10,10,10"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (g, ms) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("signature {s:?} needs 'genus;orders'")))?;
        let genus: u32 = g
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad genus in {s:?}")))?;
        let cone_orders = if ms.trim().is_empty() {
            vec![]
        } else {
            ms.split(',')
                .map(|m| {
                    m.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad cone order {m:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        if cone_orders.iter().any(|&m| m < 2) {
            return Err(Error::Parse("cone orders must be >= 2".into()));
        }
        Ok(OrbifoldSignature::new(genus, cone_orders))
    }
}

/// Convenience: exact Euler characteristic of a signature.
pub fn euler_char(sig: &OrbifoldSignature) -> Rational {
    sig.euler_char()
}

/// A triangle group that admits a finite-index subgroup of the target signature.
#[derive(Clone, Debug, Serialize)]
pub struct TriangleCandidate {
    pub triple: (u32, u32, u32),
    pub index: u32,
    pub trace_field: QPoly,
    /// Orders of vertices whose fibers are entirely smooth in the witness datum
    /// (torsion of the triangle group missing from the subgroup).
    pub new_torsion_orders: Vec<u32>,
    /// Which reading of the torsion-divisibility heuristic the witness satisfies.
    pub new_torsion_divides_index: bool,
    pub index_divides_new_torsion: bool,
}

/// Complete list of triangle groups `(p, q, r)` admitting an index-`d` subgroup
/// of signature `sig`, with exact trace fields.
pub fn enumerate_candidates(sig: &OrbifoldSignature) -> Result<Vec<TriangleCandidate>, Error> {
    let chi_s = sig.euler_char();
    if !chi_s.is_negative() {
        return Err(Error::NotHyperbolic);
    }
    let mut out = Vec::new();
    // |chi(p,q,r)| >= 1/42, so d = chi_s / chi_t <= 42 |chi_s|
    let d_max = (Rational::from_integer(42.into()) * -chi_s.clone())
        .floor()
        .to_integer();
    let d_max: u32 = d_max.try_into().map(|v: i64| v as u32).unwrap_or(0);
    let max_cone = sig.cone_orders.iter().copied().max().unwrap_or(2);
    for d in 1..=d_max {
        let chi_t = chi_s.clone() / Rational::from_integer(Integer::from(d));
        for tri in triples_with_chi(&chi_t, max_cone.saturating_mul(d)) {
            if let Some(cand) = check_candidate(sig, tri, d) {
                out.push(cand);
            }
        }
    }
    out.sort_by_key(|c| c.triple);
    Ok(out)
}

/// All hyperbolic triples `p <= q <= r <= r_bound` with
/// `-1 + 1/p + 1/q + 1/r = chi_t`.
fn triples_with_chi(chi_t: &Rational, r_bound: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    let target = chi_t + Rational::one(); // = 1/p + 1/q + 1/r, in (0, 1)
    if !target.is_positive() {
        return out;
    }
    let mut p = 2u32;
    while Rational::new(3.into(), p.into()) >= target {
        let rest = &target - Rational::new(Integer::one(), p.into());
        if rest.is_positive() {
            let mut q = p;
            while Rational::new(2.into(), q.into()) >= rest {
                let rr = &rest - Rational::new(Integer::one(), q.into());
                if rr.is_positive() && rr.numer().is_one() {
                    let r: Result<i64, _> = rr.denom().clone().try_into();
                    if let Ok(r) = r {
                        let r = r as u32;
                        if r >= q && r <= r_bound {
                            out.push((p, q, r));
                        }
                    }
                }
                q += 1;
            }
        }
        p += 1;
    }
    out
}

/// Filters (ii) and (iii) plus monodromy realizability; returns the candidate
/// with its trace field when some branching datum is realizable.
fn check_candidate(
    sig: &OrbifoldSignature,
    tri: (u32, u32, u32),
    d: u32,
) -> Option<TriangleCandidate> {
    let vertices = [tri.0, tri.1, tri.2];
    // each cone order must divide some vertex order
    if !sig
        .cone_orders
        .iter()
        .all(|&m| vertices.iter().any(|&v| v % m == 0))
    {
        return None;
    }
    for types in branching_data(&sig.cone_orders, &vertices, d) {
        if perm::triple_realizable(d as usize, &types) {
            // new torsion: vertices whose fibers are entirely smooth
            let mut new_torsion = Vec::new();
            for (j, ty) in types.iter().enumerate() {
                if ty.iter().all(|&k| k == vertices[j]) {
                    new_torsion.push(vertices[j]);
                }
            }
            let n_div_d = new_torsion.iter().all(|&n| d % n == 0);
            let d_div_n = new_torsion.iter().all(|&n| n % d == 0);
            return Some(TriangleCandidate {
                triple: tri,
                index: d,
                trace_field: triangle_trace_field(tri.0, tri.1, tri.2),
                new_torsion_orders: new_torsion,
                new_torsion_divides_index: n_div_d,
                index_divides_new_torsion: d_div_n,
            });
        }
    }
    None
}

/// All distinct assignments of the cone multiset to the three vertices with
/// consistent local degrees; yields the three cycle types.
fn branching_data(cones: &[u32], vertices: &[u32; 3], d: u32) -> Vec<[Vec<u32>; 3]> {
    let n = cones.len();
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let total = 3usize.pow(n as u32);
    'outer: for mask in 0..total {
        let mut assign = Vec::with_capacity(n);
        let mut m = mask;
        for _ in 0..n {
            assign.push(m % 3);
            m /= 3;
        }
        // dedupe multiset-identical assignments
        let mut key: Vec<(usize, u32)> = assign.iter().copied().zip(cones.iter().copied()).collect();
        key.sort_unstable();
        if !seen.insert(key) {
            continue;
        }
        let mut types: [Vec<u32>; 3] = [vec![], vec![], vec![]];
        for (j, &nj) in vertices.iter().enumerate() {
            let mut degs: Vec<u32> = Vec::new();
            for (i, &m) in cones.iter().enumerate() {
                if assign[i] == j {
                    if nj % m != 0 {
                        continue 'outer;
                    }
                    degs.push(nj / m);
                }
            }
            let used: u32 = degs.iter().sum();
            if used > d || (d - used) % nj != 0 {
                continue 'outer;
            }
            let smooth = (d - used) / nj;
            degs.extend(std::iter::repeat(nj).take(smooth as usize));
            types[j] = degs;
        }
        out.push(types);
    }
    out
}

/// Adjoint trace field of the `(p, q, r)` triangle group: generated by
/// `cos(2 pi / p), cos(2 pi / q), cos(2 pi / r)` and the product
/// `cos(pi/p) cos(pi/q) cos(pi/r)`, realized exactly in `Q(zeta_{2 lcm})`.
pub fn triangle_trace_field(p: u32, q: u32, r: u32) -> QPoly {
    // symmetric in the three vertex orders
    let mut v = [p, q, r];
    v.sort_unstable();
    let (p, q, r) = (v[0], v[1], v[2]);
    let lcm = lcm3(p, q, r);
    let m = 2 * lcm;
    let half = Rational::new(Integer::one(), Integer::from(2));
    let cos_pi_over = |k: u32| -> CycloElement {
        // cos(pi/k) = (zeta_{2k} + zeta_{2k}^-1)/2, with zeta_{2k} = zeta_m^{m/(2k)}
        let z = CycloElement::root_of_unity(m, m / (2 * k));
        z.add(&z.conj()).scale(&half)
    };
    let cos_2pi_over = |k: u32| -> CycloElement {
        let z = CycloElement::root_of_unity(m, m / k);
        z.add(&z.conj()).scale(&half)
    };
    let mut gens = vec![cos_2pi_over(p), cos_2pi_over(q), cos_2pi_over(r)];
    gens.push(
        cos_pi_over(p)
            .mul(&cos_pi_over(q))
            .mul(&cos_pi_over(r)),
    );
    let mut theta = gens[0].clone();
    for g in &gens[1..] {
        theta = extend_primitive_cyclo(&theta, g);
    }
    theta.minimal_polynomial()
}

fn extend_primitive_cyclo(theta: &CycloElement, t: &CycloElement) -> CycloElement {
    if t.express_in_powers(theta).is_some() {
        return theta.clone();
    }
    if theta.express_in_powers(t).is_some() {
        return t.clone();
    }
    for c in 1..=32i64 {
        let cand = theta.add(&t.scale(&Rational::from_integer(Integer::from(c))));
        if theta.express_in_powers(&cand).is_some() && t.express_in_powers(&cand).is_some() {
            return cand;
        }
    }
    unreachable!("primitive element shift exhausted")
}

fn lcm3(p: u32, q: u32, r: u32) -> u32 {
    use num_integer::Integer as _;
    let l: u64 = (p as u64).lcm(&(q as u64)).lcm(&(r as u64));
    l as u32
}

/// Verdict for one candidate against a reference trace field.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateVerdict {
    pub triple: (u32, u32, u32),
    pub index: u32,
    pub trace_field: QPoly,
    pub isomorphic_to_reference: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExclusionReport {
    pub signature: OrbifoldSignature,
    pub reference_field: QPoly,
    pub candidates: Vec<CandidateVerdict>,
    /// True when some candidate's trace field matches the reference field.
    pub possibly_commensurable: bool,
}

/// Compare every candidate's trace field against `reference_field` (the trace
/// field of the group of signature `sig`); the group is not commensurable with
/// any triangle group exactly when every comparison fails.
pub fn exclusion_report(
    sig: &OrbifoldSignature,
    reference_field: &QPoly,
) -> Result<ExclusionReport, Error> {
    let candidates = enumerate_candidates(sig)?;
    let mut verdicts = Vec::with_capacity(candidates.len());
    let mut any = false;
    for c in candidates {
        let iso = fields_isomorphic(&c.trace_field, reference_field)?;
        any |= iso;
        verdicts.push(CandidateVerdict {
            triple: c.triple,
            index: c.index,
            trace_field: c.trace_field,
            isomorphic_to_reference: iso,
        });
    }
    Ok(ExclusionReport {
        signature: sig.clone(),
        reference_field: reference_field.clone(),
        candidates: verdicts,
        possibly_commensurable: any,
    })
}

/// Transitive permutation-triple realizability (covering monodromy existence).
pub mod perm {
    /// Does a transitive triple `(x, y, z)` with `x y z = 1` and the given cycle
    /// types exist in `S_d`? Roles are rotated so the canonical fixed permutation
    /// is the most rigid type and the product constraint is the tightest one.
    pub fn triple_realizable(d: usize, types: &[Vec<u32>; 3]) -> bool {
        debug_assert!(types
            .iter()
            .all(|t| t.iter().sum::<u32>() as usize == d));
        // constraint: smallest maximum cycle length (ties: more cycles)
        let key = |t: &Vec<u32>| {
            (
                t.iter().copied().max().unwrap_or(1),
                usize::MAX - t.len(),
            )
        };
        let idx = (0..3).min_by_key(|&i| key(&types[i])).unwrap();
        let tc = &types[idx];
        let tn1 = &types[(idx + 1) % 3];
        let tn2 = &types[(idx + 2) % 3];
        // x y z = 1 with type(x) = Tc: search B of type Tn1 against canonical F of
        // type Tn2 with type(B o F) = Tc; or the reversed-inverse arrangement.
        if tn2.iter().max() >= tn1.iter().max() {
            realize(d, tn2, tn1, tc)
        } else {
            realize(d, tn1, tn2, tc)
        }
    }

    struct Search {
        d: usize,
        f: Vec<usize>,
        finv: Vec<usize>,
        /// remaining build-cycle lengths: count per length
        build_budget: Vec<u32>,
        /// remaining constraint-cycle lengths: count per length
        constr_budget: Vec<u32>,
        max_constr: usize,
        b: Vec<Option<usize>>,
        b_in: Vec<bool>,
        // chain structure on the product W = B o F: W(i) = B(F(i))
        chain_start: Vec<Option<usize>>, // indexed by chain end
        chain_end: Vec<Option<usize>>,   // indexed by chain start
        chain_len: Vec<usize>,           // indexed by chain start
    }

    enum EdgeRecord {
        Closed(usize),
        Merged {
            s_i: usize,
            e_k: usize,
            old_si: usize,
            old_k: usize,
        },
    }

    impl Search {
        fn max_remaining_constr(&self) -> usize {
            (1..=self.max_constr)
                .rev()
                .find(|&l| self.constr_budget[l] > 0)
                .unwrap_or(0)
        }

        fn add_edge(&mut self, i: usize, k: usize) -> Option<EdgeRecord> {
            // w-edge i -> k; i must have no outgoing w, k no incoming w
            let s_i = self.chain_start[i]?;
            self.chain_end[k]?;
            if s_i == k {
                let len = self.chain_len[k] + 1;
                if len > self.max_constr || self.constr_budget[len] == 0 {
                    return None;
                }
                self.constr_budget[len] -= 1;
                self.chain_start[i] = None;
                self.chain_end[k] = None;
                let old = self.chain_len[k];
                self.chain_len[k] = 0;
                let _ = old;
                return Some(EdgeRecord::Closed(len));
            }
            let e_k = self.chain_end[k].unwrap();
            let newlen = self.chain_len[s_i] + 1 + self.chain_len[k];
            if newlen + 1 > self.max_remaining_constr() {
                return None;
            }
            let old_si = self.chain_len[s_i];
            let old_k = self.chain_len[k];
            self.chain_start[i] = None;
            self.chain_end[k] = None;
            self.chain_end[s_i] = Some(e_k);
            self.chain_start[e_k] = Some(s_i);
            self.chain_len[s_i] = newlen;
            self.chain_len[k] = 0;
            Some(EdgeRecord::Merged {
                s_i,
                e_k,
                old_si,
                old_k,
            })
        }

        fn undo_edge(&mut self, rec: EdgeRecord, i: usize, k: usize) {
            match rec {
                EdgeRecord::Closed(len) => {
                    self.constr_budget[len] += 1;
                    self.chain_start[i] = Some(k);
                    self.chain_end[k] = Some(i);
                    self.chain_len[k] = len - 1;
                }
                EdgeRecord::Merged {
                    s_i,
                    e_k,
                    old_si,
                    old_k,
                } => {
                    self.chain_end[s_i] = Some(i);
                    self.chain_start[i] = Some(s_i);
                    self.chain_len[s_i] = old_si;
                    self.chain_end[k] = Some(e_k);
                    self.chain_start[e_k] = Some(k);
                    self.chain_len[k] = old_k;
                }
            }
        }

        fn set_b(&mut self, j: usize, k: usize) -> Option<EdgeRecord> {
            let i = self.finv[j];
            let rec = self.add_edge(i, k)?;
            self.b[j] = Some(k);
            self.b_in[k] = true;
            Some(rec)
        }

        fn unset_b(&mut self, j: usize, k: usize, rec: EdgeRecord) {
            self.b[j] = None;
            self.b_in[k] = false;
            self.undo_edge(rec, self.finv[j], k);
        }

        fn extend_cycle(&mut self, start: usize, cur: usize, remaining: usize) -> bool {
            if remaining == 0 {
                if let Some(rec) = self.set_b(cur, start) {
                    if self.next_cycle() {
                        return true;
                    }
                    self.unset_b(cur, start, rec);
                }
                return false;
            }
            for k in 0..self.d {
                if self.b_in[k] || k == start {
                    continue;
                }
                if let Some(rec) = self.set_b(cur, k) {
                    if self.extend_cycle(start, k, remaining - 1) {
                        return true;
                    }
                    self.unset_b(cur, k, rec);
                }
            }
            false
        }

        fn next_cycle(&mut self) -> bool {
            let j = match self.b.iter().position(|v| v.is_none()) {
                None => return self.transitive(),
                Some(j) => j,
            };
            for len in (1..self.build_budget.len()).rev() {
                if self.build_budget[len] == 0 {
                    continue;
                }
                self.build_budget[len] -= 1;
                if len == 1 {
                    if let Some(rec) = self.set_b(j, j) {
                        if self.next_cycle() {
                            return true;
                        }
                        self.unset_b(j, j, rec);
                    }
                } else if self.extend_cycle(j, j, len - 1) {
                    return true;
                }
                self.build_budget[len] += 1;
            }
            false
        }

        fn transitive(&self) -> bool {
            let mut seen = vec![false; self.d];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for w in [self.f[v], self.b[v].unwrap()] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            count == self.d
        }
    }

    /// Search for `B` of type `t_build` with `W = B o F` of type `t_constr`,
    /// where `F` is the canonical permutation of type `t_fixed`.
    fn realize(d: usize, t_fixed: &[u32], t_build: &[u32], t_constr: &[u32]) -> bool {
        let mut f = vec![0usize; d];
        let mut i = 0usize;
        let mut lens: Vec<u32> = t_fixed.to_vec();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        for len in lens {
            let len = len as usize;
            for j in 0..len {
                f[i + j] = i + (j + 1) % len;
            }
            i += len;
        }
        let mut finv = vec![0usize; d];
        for (a, &b) in f.iter().enumerate() {
            finv[b] = a;
        }
        let mut build_budget = vec![0u32; d + 1];
        for &l in t_build {
            build_budget[l as usize] += 1;
        }
        let mut constr_budget = vec![0u32; d + 1];
        for &l in t_constr {
            constr_budget[l as usize] += 1;
        }
        let max_constr = t_constr.iter().copied().max().unwrap_or(1) as usize;
        let mut search = Search {
            d,
            f,
            finv,
            build_budget,
            constr_budget,
            max_constr,
            b: vec![None; d],
            b_in: vec![false; d],
            chain_start: (0..d).map(Some).collect(),
            chain_end: (0..d).map(Some).collect(),
            chain_len: vec![0; d],
        };
        search.next_cycle()
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn small_positive_cases() {
            // (4,10,20) index 2: x = (2), y = id, z = (2)
            assert!(triple_realizable(2, &[vec![2], vec![1, 1], vec![2]]));
            // (3,6,10) index 3: 3-cycle, 3-cycle, identity
            assert!(triple_realizable(3, &[vec![3], vec![3], vec![1, 1, 1]]));
        }

        #[test]
        fn dihedral_obstruction() {
            // would-be (2,4,20) index 6 subgroup: quotient of the finite (2,4,2)
            // von Dyck group of order 8, which has no transitive action on 6 points
            assert!(!triple_realizable(
                6,
                &[vec![2, 2, 2], vec![4, 2], vec![2, 2, 2]]
            ));
        }

        #[test]
        fn a4_obstruction() {
            // would-be (2,3,30) index 9: quotient of the order-12 (2,3,3) group
            assert!(!triple_realizable(
                9,
                &[vec![2, 2, 2, 2, 1], vec![3, 3, 3], vec![3, 3, 3]]
            ));
        }

        #[test]
        fn no_involution_pairing() {
            // would-be (2,4,10) index 8
            assert!(!triple_realizable(
                8,
                &[vec![2, 2, 2, 2], vec![4, 4], vec![5, 1, 1, 1]]
            ));
        }

        #[test]
        fn genuine_index_18_cover_exists() {
            // (2,3,10) index 18
            assert!(triple_realizable(
                18,
                &[
                    vec![2; 9],
                    vec![3; 6],
                    vec![10, 5, 1, 1, 1]
                ]
            ));
        }

        #[test]
        fn exhaustive_refutation_in_s21() {
            // (2,3,8) index 21 with types (2^10 1, 3^7, (8,8,2,2,1)) does not exist
            assert!(!triple_realizable(
                21,
                &[
                    {
                        let mut v = vec![2; 10];
                        v.push(1);
                        v
                    },
                    vec![3; 7],
                    vec![8, 8, 2, 2, 1]
                ]
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> OrbifoldSignature {
        s.parse().unwrap()
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(
            sig("0;2,10,10,10").euler_char(),
            Rational::new((-6).into(), 5.into())
        );
        assert_eq!(
            sig("0;2,3,10").euler_char(),
            Rational::new((-1).into(), 15.into())
        );
        // torus
        assert_eq!(sig("1;").euler_char(), Rational::zero());
        assert!(!sig("1;").is_hyperbolic());
    }

    #[test]
    fn signature_parse_and_display() {
        let s = sig("0;2,10,10,10");
        assert_eq!(s.to_string(), "(0;2,10,10,10)");
        assert_eq!(s.genus, 0);
        assert_eq!(s.cone_orders, vec![2, 10, 10, 10]);
        assert!("x;2".parse::<OrbifoldSignature>().is_err());
        assert!("0;1,2".parse::<OrbifoldSignature>().is_err());
    }

    #[test]
    fn candidates_for_the_three_signatures() {
        let c1 = enumerate_candidates(&sig("0;2,10,10,10")).unwrap();
        let t1: Vec<_> = c1.iter().map(|c| (c.triple, c.index)).collect();
        assert_eq!(
            t1,
            vec![((2, 3, 10), 18), ((3, 6, 10), 3), ((4, 10, 20), 2)]
        );

        let c2 = enumerate_candidates(&sig("0;2,4,4,8")).unwrap();
        let t2: Vec<_> = c2.iter().map(|c| c.triple).collect();
        assert_eq!(
            t2,
            vec![(2, 4, 32), (2, 5, 8), (2, 8, 12), (3, 4, 8), (4, 4, 16)]
        );

        let c3 = enumerate_candidates(&sig("0;2,3,3,4")).unwrap();
        let t3: Vec<_> = c3.iter().map(|c| c.triple).collect();
        assert_eq!(
            t3,
            vec![(2, 3, 8), (2, 3, 12), (2, 3, 20), (3, 3, 4), (3, 4, 8)]
        );

        assert!(matches!(
            enumerate_candidates(&sig("0;2,2,2")),
            Err(Error::NotHyperbolic)
        ));
    }

    #[test]
    fn riemann_hurwitz_consistency() {
        let s = sig("0;2,10,10,10");
        let chi_s = s.euler_char();
        for c in enumerate_candidates(&s).unwrap() {
            let tri_sig = OrbifoldSignature::new(0, vec![c.triple.0, c.triple.1, c.triple.2]);
            let expected = tri_sig.euler_char() * Rational::from_integer(Integer::from(c.index));
            assert_eq!(chi_s, expected);
        }
    }

    #[test]
    fn triangle_trace_fields_match_published_table() {
        // (2,3,10): Q(sqrt 5)
        let f = triangle_trace_field(2, 3, 10);
        assert!(fields_isomorphic(&f, &QPoly::from_int_coeffs(&[-5, 0, 1])).unwrap());
        // (3,6,10): Q(cos(pi/15)), minimal polynomial of 2cos(pi/15) is x^4+x^3-4x^2-4x+1
        let f = triangle_trace_field(3, 6, 10);
        assert!(fields_isomorphic(&f, &QPoly::from_int_coeffs(&[1, -4, -4, 1, 1])).unwrap());
        // (4,10,20): Q(cos(pi/10)), minimal polynomial of 2cos(pi/10) is x^4-5x^2+5
        let f = triangle_trace_field(4, 10, 20);
        assert!(fields_isomorphic(&f, &QPoly::from_int_coeffs(&[5, 0, -5, 0, 1])).unwrap());
        // (2,4,8): Q(sqrt 2)
        let f = triangle_trace_field(2, 4, 8);
        assert!(fields_isomorphic(&f, &QPoly::from_int_coeffs(&[-2, 0, 1])).unwrap());
        // symmetry
        assert_eq!(triangle_trace_field(10, 3, 2), triangle_trace_field(2, 3, 10));
    }

    #[test]
    fn exclusion_positive_control() {
        // injecting Q(sqrt 5) as the reference field must flag (2,3,10)
        let rep = exclusion_report(&sig("0;2,10,10,10"), &QPoly::from_int_coeffs(&[-5, 0, 1]))
            .unwrap();
        assert!(rep.possibly_commensurable);
        let flagged: Vec<_> = rep
            .candidates
            .iter()
            .filter(|c| c.isomorphic_to_reference)
            .map(|c| c.triple)
            .collect();
        assert_eq!(flagged, vec![(2, 3, 10)]);
    }
}
