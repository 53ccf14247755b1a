//! Buchberger's algorithm over the integers (fraction free), with the
//! product and chain criteria. Bases are returned reduced, each generator
//! primitive with a positive leading coefficient.
//!
//! Optionally every basis element carries its representation in terms of
//! the input generators, so that a division by the basis can be lifted to a
//! certificate over the inputs themselves.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::certificate::ReductionCertificate;
use super::division::{divide, poly_reduce, ring_for};
use super::ReduceError;
use crate::polyring::{Monomial, MonomialOrder, Polynomial};

/// Default cap on S-pairs examined before giving up.
pub const DEFAULT_PAIR_CAP: usize = 20_000;

/// `k * g = sum(cof[i] * inputs[i])`.
#[derive(Debug, Clone, PartialEq)]
struct Rep {
    k: BigInt,
    cof: Vec<Polynomial>,
}

impl Rep {
    fn unit(ring: &std::sync::Arc<crate::polyring::Ring>, n: usize, i: usize) -> Rep {
        let mut cof = vec![Polynomial::zero(ring); n];
        cof[i] = Polynomial::one(ring);
        Rep { k: BigInt::one(), cof }
    }

    /// Representation of `sum(coef_j * g_j)` given representations of `g_j`.
    fn combine(parts: &[(Polynomial, &Rep)]) -> Rep {
        let l = parts.iter().fold(BigInt::one(), |l, (_, r)| l.lcm(&r.k));
        let n = parts[0].1.cof.len();
        let ring = parts[0].0.ring().clone();
        let mut cof = vec![Polynomial::zero(&ring); n];
        for (c, r) in parts {
            let c = c.scale(&(&l / &r.k));
            for (acc, f) in cof.iter_mut().zip(&r.cof) {
                if !f.is_zero() {
                    *acc = &*acc + &(&c * f);
                }
            }
        }
        Rep { k: l, cof }.tidy()
    }

    /// Representation of `g / u`.
    fn divided(mut self, u: &BigInt) -> Rep {
        self.k *= u.abs();
        if u.is_negative() {
            self.cof = self.cof.iter().map(|c| -c).collect();
        }
        self.tidy()
    }

    fn tidy(mut self) -> Rep {
        let g = self.cof.iter().fold(self.k.clone(), |g, c| g.gcd(&c.content()));
        if !g.is_one() && !g.is_zero() {
            self.k = &self.k / &g;
            self.cof = self.cof.iter().map(|c| c.scale_div(&g)).collect();
        }
        self
    }
}

trait ScaleDiv {
    fn scale_div(&self, g: &BigInt) -> Polynomial;
}

impl ScaleDiv for Polynomial {
    fn scale_div(&self, g: &BigInt) -> Polynomial {
        Polynomial::from_terms(self.ring(), self.terms().iter().map(|(m, c)| (*m, c / g)))
    }
}

/// The unit `u` with `p / u` primitive and positively led.
fn normalizer(p: &Polynomial) -> BigInt {
    let g = p.content();
    if p.leading_coeff().is_some_and(|c| c.is_negative()) {
        -g
    } else {
        g
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    inputs: Vec<Polynomial>,
    reps: Option<Vec<Rep>>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The generators the basis was computed from, in the basis ring.
    pub fn inputs(&self) -> &[Polynomial] {
        &self.inputs
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn reduce(&self, p: &Polynomial) -> ReductionCertificate {
        poly_reduce(p, &self.generators, &self.order)
    }

    pub fn reduces_to_zero(&self, p: &Polynomial) -> (bool, ReductionCertificate) {
        let cert = self.reduce(p);
        (cert.remainder.is_zero(), cert)
    }

    /// Every S-polynomial of a pair of generators reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| divide(&s_polynomial(&g[i], &g[j]), g).remainder.is_zero())
        })
    }

    /// Every polynomial in `gens` reduces to zero against the basis.
    pub fn contains_all(&self, gens: &[Polynomial]) -> bool {
        gens.iter().all(|p| self.reduces_to_zero(p).0)
    }

    /// Whether cofactors were tracked, so that [`lift`](Self::lift) works.
    pub fn is_tracked(&self) -> bool {
        self.reps.is_some()
    }

    /// Rewrites a certificate whose divisors are this basis into one whose
    /// divisors are the input generators. Needs a tracked basis. The lifted
    /// remainder is the original remainder times the new multiplier factor,
    /// so it is reduced only with respect to the basis.
    pub fn lift(&self, cert: &ReductionCertificate) -> Option<ReductionCertificate> {
        let reps = self.reps.as_ref()?;
        if cert.divisors != self.generators {
            return None;
        }
        let ring = cert.dividend.ring().clone();
        let parts: Vec<(Polynomial, &Rep)> = cert
            .quotients
            .iter()
            .zip(reps)
            .filter(|(q, _)| !q.is_zero())
            .map(|(q, r)| (q.clone(), r))
            .collect();
        let (l, quotients) = if parts.is_empty() {
            (BigInt::one(), vec![Polynomial::zero(&ring); self.inputs.len()])
        } else {
            let rep = Rep::combine(&parts);
            (rep.k, rep.cof)
        };
        Some(ReductionCertificate {
            dividend: cert.dividend.clone(),
            divisors: self.inputs.clone(),
            quotients,
            remainder: cert.remainder.scale(&l),
            multiplier: &cert.multiplier * &l,
            order: cert.order.clone(),
        })
    }
}

pub(crate) fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (a, b) = s_coefficients(f, g);
    &(f * &a) - &(g * &b)
}

/// Monomial multipliers `(a, b)` with `S(f, g) = a*f - b*g`.
fn s_coefficients(f: &Polynomial, g: &Polynomial) -> (Polynomial, Polynomial) {
    let (mf, cf) = f.leading_term().expect("nonzero").clone();
    let (mg, cg) = g.leading_term().expect("nonzero").clone();
    let l = mf.lcm(&mg);
    let gcd = cf.gcd(&cg);
    let ring = f.ring();
    (
        Polynomial::term(ring, mf.quotient_of(&l).unwrap(), &cg / &gcd),
        Polynomial::term(ring, mg.quotient_of(&l).unwrap(), &cf / &gcd),
    )
}

pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, ReduceError> {
    run(gens, order, DEFAULT_PAIR_CAP, false)
}

pub fn buchberger_with_cap(
    gens: &[Polynomial],
    order: &MonomialOrder,
    cap: usize,
) -> Result<GroebnerBasis, ReduceError> {
    run(gens, order, cap, false)
}

/// Like [`buchberger`], additionally tracking how each basis element is
/// built from the inputs.
pub fn buchberger_tracked(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, ReduceError> {
    run(gens, order, DEFAULT_PAIR_CAP, true)
}

/// Ideal membership with a certificate over `divisors` themselves. Plain
/// division is tried first; if it leaves a remainder, the dividend is divided
/// by a tracked Groebner basis of `divisors` and the result lifted back.
/// Returns the plain certificate when neither reaches zero.
pub fn reduce_in_ideal(
    r: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> Result<ReductionCertificate, ReduceError> {
    let plain = poly_reduce(r, divisors, order);
    if plain.remainder.is_zero() {
        return Ok(plain);
    }
    let gb = buchberger_tracked(divisors, order)?;
    let (zero, cert) = gb.reduces_to_zero(r);
    Ok(if zero { gb.lift(&cert).expect("tracked basis") } else { plain })
}

/// Basis under construction, with optional representations.
struct Work {
    polys: Vec<Polynomial>,
    reps: Option<Vec<Rep>>,
}

impl Work {
    /// Normal form of `p` (with representation `rep`) against the current
    /// polynomials, made primitive.
    fn normal_form(&self, p: &Polynomial, rep: Option<Rep>) -> (Polynomial, Option<Rep>) {
        let d = divide(p, &self.polys);
        let u = normalizer(&d.remainder);
        if d.remainder.is_zero() {
            return (d.remainder, None);
        }
        let rem = d.remainder.scale_div(&u);
        let rep = match (&self.reps, rep) {
            (Some(reps), Some(rp)) => {
                let ring = p.ring();
                let mut parts = vec![(Polynomial::constant(ring, d.multiplier.clone()), &rp)];
                for (q, r) in d.quotients.iter().zip(reps) {
                    if !q.is_zero() {
                        parts.push((-q, r));
                    }
                }
                Some(Rep::combine(&parts).divided(&u))
            }
            _ => None,
        };
        (rem, rep)
    }

    fn push(&mut self, p: Polynomial, rep: Option<Rep>) {
        self.polys.push(p);
        if let (Some(reps), Some(r)) = (self.reps.as_mut(), rep) {
            reps.push(r);
        }
    }

    fn rep(&self, i: usize) -> Option<&Rep> {
        self.reps.as_ref().map(|r| &r[i])
    }
}

fn run(gens: &[Polynomial], order: &MonomialOrder, cap: usize, track: bool) -> Result<GroebnerBasis, ReduceError> {
    assert!(!gens.is_empty(), "Buchberger needs at least one generator");
    let ring = ring_for(order, gens[0].ring());
    let inputs: Vec<Polynomial> = gens.iter().map(|g| g.to_ring(&ring)).collect();
    let n = inputs.len();
    let mut work = Work {
        polys: Vec::new(),
        reps: track.then(Vec::new),
    };
    for (i, g) in inputs.iter().enumerate() {
        let (g, rep) = work.normal_form(g, track.then(|| Rep::unit(&ring, n, i)));
        if !g.is_zero() {
            work.push(g, rep);
        }
    }
    let lead = |p: &Polynomial| -> Monomial { p.leading_monomial().unwrap() };

    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..work.polys.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    let mut examined = 0usize;

    while !pairs.is_empty() {
        let basis = &work.polys;
        // normal selection strategy: smallest lcm first
        let &(i, j) = pairs
            .iter()
            .min_by(|a, b| {
                let la = lead(&basis[a.0]).lcm(&lead(&basis[a.1]));
                let lb = lead(&basis[b.0]).lcm(&lead(&basis[b.1]));
                ring.cmp(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pairs.remove(&(i, j));
        let (li, lj) = (lead(&basis[i]), lead(&basis[j]));
        if li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis[k]).divides(&l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        examined += 1;
        if examined > cap {
            return Err(ReduceError::ResourceBound { cap });
        }
        let (a, b) = s_coefficients(&basis[i], &basis[j]);
        let s = &(&basis[i] * &a) - &(&basis[j] * &b);
        let rep = match (work.rep(i), work.rep(j)) {
            (Some(ri), Some(rj)) => Some(Rep::combine(&[(a, ri), (-&b, rj)])),
            _ => None,
        };
        let (r, rep) = work.normal_form(&s, rep);
        if !r.is_zero() {
            let m = work.polys.len();
            work.push(r, rep);
            for k in 0..m {
                pairs.insert((k, m));
            }
        }
    }

    let work = reduce_basis(work);
    Ok(GroebnerBasis {
        generators: work.polys,
        order: order.clone(),
        inputs,
        reps: work.reps,
    })
}

fn reduce_basis(work: Work) -> Work {
    let leads: Vec<Monomial> = work.polys.iter().map(|p| p.leading_monomial().unwrap()).collect();
    let keep: Vec<usize> = (0..leads.len())
        .filter(|&i| {
            !leads
                .iter()
                .enumerate()
                .any(|(j, lj)| j != i && lj.divides(&leads[i]) && (lj != &leads[i] || j < i))
        })
        .collect();
    let mut polys: Vec<Polynomial> = keep.iter().map(|&i| work.polys[i].clone()).collect();
    let mut reps: Option<Vec<Rep>> = work.reps.map(|r| keep.iter().map(|&i| r[i].clone()).collect());

    for i in 0..polys.len() {
        let others: Vec<Polynomial> = (0..polys.len()).filter(|&j| j != i).map(|j| polys[j].clone()).collect();
        let g = &polys[i];
        let (hm, hc) = g.leading_term().cloned().unwrap();
        let head = Polynomial::term(g.ring(), hm, hc);
        let d = divide(&(g - &head), &others);
        // new = multiplier*g - sum(q_j * others_j)
        let new = &head.scale(&d.multiplier) + &d.remainder;
        let u = normalizer(&new);
        if let Some(reps) = reps.as_mut() {
            let ring = g.ring();
            let mut parts = vec![(Polynomial::constant(ring, d.multiplier.clone()), &reps[i])];
            let idx: Vec<usize> = (0..polys.len()).filter(|&j| j != i).collect();
            for (q, &j) in d.quotients.iter().zip(&idx) {
                if !q.is_zero() {
                    parts.push((-q, &reps[j]));
                }
            }
            let rep = Rep::combine(&parts).divided(&u);
            reps[i] = rep;
        }
        polys[i] = new.scale_div(&u);
    }

    let mut idx: Vec<usize> = (0..polys.len()).collect();
    if let Some(first) = polys.first() {
        let ring = first.ring().clone();
        idx.sort_by(|&a, &b| ring.cmp(&polys[a].leading_monomial().unwrap(), &polys[b].leading_monomial().unwrap()));
    }
    Work {
        polys: idx.iter().map(|&i| polys[i].clone()).collect(),
        reps: reps.map(|r| idx.iter().map(|&i| r[i].clone()).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{OrderKind, Ring};
    use std::sync::Arc;

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn single_generator() {
        let r = Ring::new(&["x", "y"], OrderKind::Lex);
        let gb = buchberger(&[p(&r, "x")], r.order()).unwrap();
        assert_eq!(gb.generators(), &[p(&r, "x")]);
    }

    #[test]
    fn principal_ideal() {
        let r = Ring::new(&["x"], OrderKind::Lex);
        let gens = [p(&r, "x^2 - 1"), p(&r, "x - 1")];
        let gb = buchberger(&gens, r.order()).unwrap();
        assert_eq!(gb.generators(), &[p(&r, "x - 1")]);
        assert!(gb.contains_all(&gens));
        assert!(gb.is_groebner());
    }

    #[test]
    fn textbook_example() {
        // Cox, Little, O'Shea: <x^3 - 2xy, x^2 y - 2y^2 + x> under grlex
        let r = Ring::new(&["x", "y"], OrderKind::Grevlex);
        let gens = [p(&r, "x^3 - 2*x*y"), p(&r, "x^2*y - 2*y^2 + x")];
        let gb = buchberger(&gens, r.order()).unwrap();
        let expected = [p(&r, "x^2"), p(&r, "x*y"), p(&r, "2*y^2 - x")];
        assert_eq!(gb.len(), 3);
        for e in &expected {
            assert!(gb.generators().contains(e), "missing {e}");
        }
        assert!(gb.is_groebner());
        assert!(gb.contains_all(&gens));
    }

    #[test]
    fn pair_cap() {
        let r = Ring::new(&["x", "y", "z"], OrderKind::Lex);
        let gens = [p(&r, "x^2 + y*z - 2"), p(&r, "y^2 + x*z - 3"), p(&r, "x*y + z^2 - 5")];
        assert!(matches!(
            buchberger_with_cap(&gens, r.order(), 1),
            Err(ReduceError::ResourceBound { cap: 1 })
        ));
        let gb = buchberger(&gens, r.order()).unwrap();
        assert!(gb.is_groebner());
        assert!(gb.contains_all(&gens));
    }

    #[test]
    fn tracked_basis_matches_untracked() {
        let r = Ring::new(&["x", "y"], OrderKind::Grevlex);
        let gens = [p(&r, "x^3 - 2*x*y"), p(&r, "x^2*y - 2*y^2 + x")];
        let a = buchberger(&gens, r.order()).unwrap();
        let b = buchberger_tracked(&gens, r.order()).unwrap();
        assert_eq!(a.generators(), b.generators());
        assert!(!a.is_tracked() && b.is_tracked());
        for (g, rep) in b.generators().iter().zip(b.reps.as_ref().unwrap()) {
            let sum = rep
                .cof
                .iter()
                .zip(&gens)
                .fold(Polynomial::zero(&r), |acc, (c, f)| &acc + &(c * f));
            assert_eq!(g.scale(&rep.k), sum);
        }
    }

    #[test]
    fn lifted_certificate_uses_inputs() {
        // x*y - 1 is in <x^2 - 1, x*y - x + y - 1>... check with a member
        // that plain division by the inputs misses
        let r = Ring::new(&["x", "y"], OrderKind::Lex);
        let f1 = p(&r, "x*y - 1");
        let f2 = p(&r, "y^2 - 1");
        let member = p(&r, "x - y");
        let plain = poly_reduce(&member, &[f1.clone(), f2.clone()], r.order());
        assert!(!plain.remainder.is_zero());
        let gb = buchberger_tracked(&[f1.clone(), f2.clone()], r.order()).unwrap();
        let (zero, cert) = gb.reduces_to_zero(&member);
        assert!(zero);
        let lifted = gb.lift(&cert).unwrap();
        assert_eq!(lifted.divisors, vec![f1, f2]);
        assert!(lifted.remainder.is_zero());
        assert!(lifted.verify());
        assert!(buchberger(&[p(&r, "x")], r.order()).unwrap().lift(&cert).is_none());
    }
}
