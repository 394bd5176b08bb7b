//! Buchberger's algorithm over `F_p`.
//!
//! Polynomials are converted to a flat representation (terms sorted in
//! descending order, raw residues) for the reductions and converted back
//! once the reduced basis is known. S-pairs are taken in order of the total
//! degree of their lcm, then by the monomial order, after filtering with the
//! coprime-leading-monomial criterion and the chain criterion.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Ideal;
use crate::poly::{Monomial, MonomialOrder, Poly, Vars};
use crate::scalar::{Fp, Prime};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GPoly {
    /// Descending in the active order; no zero coefficients.
    pub(crate) terms: Vec<(Monomial, u32)>,
}

#[derive(Clone, Copy)]
pub(crate) struct Ctx {
    p: u32,
    prime: Prime,
    order: MonomialOrder,
}

impl Ctx {
    pub(crate) fn new(prime: Prime, order: MonomialOrder) -> Ctx {
        Ctx { p: prime.get(), prime, order }
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    fn inv(&self, a: u32) -> u32 {
        crate::scalar::Scalar::inv(&Fp::from_residue(self.prime, a)).expect("nonzero").value()
    }

    pub(crate) fn import(&self, f: &Poly) -> GPoly {
        let mut terms: Vec<(Monomial, u32)> = f.terms().map(|(m, c)| (*m, c.value())).collect();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        GPoly { terms }
    }

    pub(crate) fn export(&self, g: &GPoly, vars: &Vars, prime: Prime) -> Poly {
        Poly::from_terms(vars, prime, g.terms.iter().map(|(m, c)| (*m, Fp::from_residue(prime, *c))))
    }

    fn make_monic(&self, g: &mut GPoly) {
        if let Some(&(_, c)) = g.terms.first() {
            if c != 1 {
                let inv = self.inv(c);
                for t in g.terms.iter_mut() {
                    t.1 = self.mul(t.1, inv);
                }
            }
        }
    }

    /// `a[start..] − c·m·b`, merged in order.
    fn sub_scaled(&self, a: &[(Monomial, u32)], c: u32, m: &Monomial, b: &[(Monomial, u32)]) -> Vec<(Monomial, u32)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let neg_c = if c == 0 { 0 } else { self.p - c };
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let bm = b[j].0.mul(m);
            if i == a.len() {
                out.push((bm, self.mul(neg_c, b[j].1)));
                j += 1;
                continue;
            }
            match self.order.cmp(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, self.mul(neg_c, b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = (a[i].1 + self.mul(neg_c, b[j].1)) % self.p;
                    if v != 0 {
                        out.push((bm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Remainder of `f` modulo the monic `basis` (all terms reduced),
    /// keeping the scale of `f`. Element `skip` of the basis is not used.
    pub(crate) fn remainder(&self, f: &GPoly, basis: &[GPoly], skip: Option<usize>) -> GPoly {
        let mut rest: Vec<(Monomial, u32)> = Vec::new();
        let mut work = f.terms.clone();
        let mut start = 0;
        while start < work.len() {
            let (lm, lc) = work[start];
            let div = basis
                .iter()
                .enumerate()
                .filter(|(k, _)| Some(*k) != skip)
                .find_map(|(_, g)| g.terms[0].0.quotient_of(&lm).map(|q| (q, g)));
            match div {
                Some((q, g)) => {
                    // g is monic, so subtracting lc·q·g cancels the head
                    work = self.sub_scaled(&work[start..], lc, &q, &g.terms);
                    start = 0;
                }
                None => {
                    rest.push((lm, lc));
                    start += 1;
                }
            }
        }
        GPoly { terms: rest }
    }

    /// Monic remainder.
    pub(crate) fn reduce(&self, f: &GPoly, basis: &[GPoly]) -> GPoly {
        let mut g = self.remainder(f, basis, None);
        self.make_monic(&mut g);
        g
    }

    fn s_poly(&self, f: &GPoly, g: &GPoly) -> GPoly {
        let (fm, _) = f.terms[0];
        let (gm, _) = g.terms[0];
        let l = fm.lcm(&gm);
        let qf = fm.quotient_of(&l).expect("lcm");
        let qg = gm.quotient_of(&l).expect("lcm");
        let scaled: Vec<(Monomial, u32)> = f.terms[1..].iter().map(|(m, c)| (m.mul(&qf), *c)).collect();
        GPoly { terms: self.sub_scaled(&scaled, 1, &qg, &g.terms[1..]) }
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Runs Buchberger's algorithm and returns the reduced basis, sorted by
/// ascending leading monomial.
pub(crate) fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Vec<GPoly> {
    let ctx = Ctx::new(ideal.prime(), order);
    let mut basis: Vec<GPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    // pending[i][j] for i < j: pair still waiting in the queue
    let mut pending: Vec<Vec<bool>> = Vec::new();

    let add = |h: GPoly, basis: &mut Vec<GPoly>, pairs: &mut Vec<Pair>, pending: &mut Vec<Vec<bool>>| {
        let k = basis.len();
        let hm = h.terms[0].0;
        for (i, g) in basis.iter().enumerate() {
            let gm = g.terms[0].0;
            pending[i].push(false);
            if gm.is_coprime(&hm) {
                continue;
            }
            pairs.push(Pair { i, j: k, lcm: gm.lcm(&hm) });
            pending[i][k] = true;
        }
        pending.push(vec![false; k + 1]);
        basis.push(h);
    };

    let mut gens: Vec<GPoly> = ideal.generators().iter().map(|g| ctx.import(g)).collect();
    gens.sort_by(|a, b| ctx.order.cmp(&a.terms[0].0, &b.terms[0].0).then(a.terms.len().cmp(&b.terms.len())));
    for g in gens {
        let r = ctx.reduce(&g, &basis);
        if !r.terms.is_empty() {
            if r.terms[0].0 == Monomial::ONE {
                return vec![r];
            }
            add(r, &mut basis, &mut pairs, &mut pending);
        }
    }

    while !pairs.is_empty() {
        // smallest lcm degree, then smallest lcm in the order
        let idx = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.lcm
                    .degree()
                    .cmp(&pb.lcm.degree())
                    .then_with(|| ctx.order.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .expect("nonempty");
        let Pair { i, j, lcm } = pairs.swap_remove(idx);
        pending[i][j] = false;

        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].terms[0].0.divides(&lcm)
                && !is_pending(&pending, i, k)
                && !is_pending(&pending, j, k)
        });
        if chain {
            continue;
        }
        let s = ctx.s_poly(&basis[i], &basis[j]);
        let r = ctx.reduce(&s, &basis);
        if r.terms.is_empty() {
            continue;
        }
        if r.terms[0].0 == Monomial::ONE {
            return vec![r];
        }
        add(r, &mut basis, &mut pairs, &mut pending);
    }

    interreduce(&ctx, basis)
}

fn is_pending(pending: &[Vec<bool>], a: usize, b: usize) -> bool {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    pending[lo][hi]
}

/// Minimalizes and tail-reduces a Gröbner basis.
fn interreduce(ctx: &Ctx, mut basis: Vec<GPoly>) -> Vec<GPoly> {
    basis.sort_by(|a, b| ctx.order.cmp(&a.terms[0].0, &b.terms[0].0));
    let mut minimal: Vec<GPoly> = Vec::new();
    for g in basis {
        let lm = g.terms[0].0;
        if minimal.iter().any(|h| h.terms[0].0.divides(&lm)) {
            continue;
        }
        minimal.push(g);
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let tail = GPoly { terms: minimal[k].terms[1..].to_vec() };
        let r = ctx.remainder(&tail, &minimal, Some(k));
        let mut terms = vec![minimal[k].terms[0]];
        terms.extend(r.terms);
        reduced.push(GPoly { terms });
    }
    reduced
}

impl Ctx {
    pub(crate) fn spoly_remainder(&self, f: &GPoly, g: &GPoly, basis: &[GPoly]) -> GPoly {
        self.remainder(&self.s_poly(f, g), basis, None)
    }
}
