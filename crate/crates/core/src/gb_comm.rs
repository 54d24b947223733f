//! Buchberger completion in commutative polynomial rings.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

use crate::basis::{canonicalize, minimal_subset, GroebnerBasis};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, Term};
use crate::order::OrderingSpec;
use crate::poly::CommPoly;
use crate::reduce::{Divisors, ReductionTrace};
use crate::ring::{check_same, RingContext, RingKind};

/// Result of checking one S-element.
#[derive(Debug, Clone)]
pub struct SCheck<M: Term> {
    pub first: usize,
    pub second: usize,
    pub s_element: crate::poly::Polynomial<M>,
    pub trace: ReductionTrace<M>,
}

impl<M: Term> SCheck<M> {
    pub fn passed(&self) -> bool {
        self.trace.remainder.is_zero()
    }
}

/// Traces of every S-element of a candidate basis.
#[derive(Debug, Clone)]
pub struct Certificate<M: Term> {
    pub checks: Vec<SCheck<M>>,
    /// S-elements not examined because their degree exceeded the bound.
    pub skipped_above_bound: usize,
}

impl<M: Term> Certificate<M> {
    pub fn is_groebner(&self) -> bool {
        self.checks.iter().all(SCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&SCheck<M>> {
        self.checks.iter().find(|c| !c.passed())
    }
}

fn check_inputs(ctx: &Arc<RingContext>, polys: &[CommPoly], ord: &OrderingSpec) -> Result<()> {
    if ctx.kind() != RingKind::Commutative {
        return Err(Error::Context("Buchberger completion needs a commutative ring".into()));
    }
    ord.check_ring(ctx)?;
    for p in polys {
        check_same(ctx, p.ctx())?;
    }
    Ok(())
}

/// `lcm/LT(f) * f - lcm/LT(g) * g`.
pub fn s_polynomial(f: &CommPoly, g: &CommPoly, ord: &OrderingSpec) -> Result<CommPoly> {
    check_same(f.ctx(), g.ctx())?;
    let lf = f.leading(ord).map_err(|_| Error::ZeroInput("s_polynomial"))?;
    let lg = g.leading(ord).map_err(|_| Error::ZeroInput("s_polynomial"))?;
    let lcm = lf.monomial.lcm(&lg.monomial);
    let one = Monomial::one(lcm.exponents().len());
    let a = f.mul_term(&lcm.quotient(&lf.monomial).unwrap(), &lf.coeff.inverse(), &one);
    let b = g.mul_term(&lcm.quotient(&lg.monomial).unwrap(), &lg.coeff.inverse(), &one);
    Ok(&a - &b)
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
///
/// Pairs are processed by the normal strategy (smallest lcm degree, then
/// creation order); the product and chain criteria discard pairs.
pub fn buchberger(
    ctx: &Arc<RingContext>,
    generators: &[CommPoly],
    ord: &OrderingSpec,
) -> Result<GroebnerBasis<Monomial>> {
    check_inputs(ctx, generators, ord)?;
    let weights = ctx.weights().to_vec();

    let mut basis: Vec<CommPoly> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut queue: BinaryHeap<Reverse<(u64, u64, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let mut seq = 0u64;
    let mut unit = false;

    let mut insert = |h: CommPoly,
                      basis: &mut Vec<CommPoly>,
                      lms: &mut Vec<Monomial>,
                      queue: &mut BinaryHeap<Reverse<(u64, u64, usize, usize)>>,
                      pending: &mut HashSet<(usize, usize)>|
     -> Result<bool> {
        let h = h.monic(ord)?;
        let lm = h.lm(ord).expect("nonzero");
        let is_unit = lm.is_one();
        let j = basis.len();
        for (i, other) in lms.iter().enumerate() {
            let lcm = other.lcm(&lm);
            queue.push(Reverse((lcm.degree(&weights), seq, i, j)));
            pending.insert((i, j));
            seq += 1;
        }
        basis.push(h);
        lms.push(lm);
        Ok(is_unit)
    };

    for f in generators {
        if f.is_zero() {
            continue;
        }
        let r = Divisors::new(&basis, ord)?.reduce(f, ord, false).remainder;
        if !r.is_zero() && insert(r, &mut basis, &mut lms, &mut queue, &mut pending)? {
            unit = true;
            break;
        }
    }

    while !unit {
        let Some(Reverse((_, _, i, j))) = queue.pop() else { break };
        pending.remove(&(i, j));
        if lms[i].is_coprime(&lms[j]) {
            done.insert((i, j));
            continue;
        }
        let lcm = lms[i].lcm(&lms[j]);
        let chain = (0..lms.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord)?;
        let r = Divisors::new(&basis, ord)?.reduce(&s, ord, false).remainder;
        done.insert((i, j));
        if !r.is_zero() && insert(r, &mut basis, &mut lms, &mut queue, &mut pending)? {
            unit = true;
        }
    }

    let elements = if unit { vec![CommPoly::one(ctx)] } else { canonicalize(ctx, &basis, ord)? };
    GroebnerBasis::from_parts(ctx, ord, elements, true, None)
}

/// Drops elements whose leading monomial is divisible by another's.
pub fn minimalize<M: Term>(basis: &GroebnerBasis<M>) -> Result<GroebnerBasis<M>> {
    let flags = basis.flags();
    let kept = minimal_subset(basis.elements(), basis.ord())?;
    GroebnerBasis::from_parts(basis.ctx(), basis.ord(), kept, flags.complete, flags.degree_bound)
}

/// The reduced basis with the same leading ideal: minimal, tail-reduced, monic.
pub fn reduced<M: Term>(basis: &GroebnerBasis<M>) -> Result<GroebnerBasis<M>> {
    let flags = basis.flags();
    let elements = canonicalize(basis.ctx(), basis.elements(), basis.ord())?;
    GroebnerBasis::from_parts(basis.ctx(), basis.ord(), elements, flags.complete, flags.degree_bound)
}

/// Checks that every S-polynomial of `polys` reduces to zero.
pub fn verify_groebner(polys: &[CommPoly], ord: &OrderingSpec) -> Result<Certificate<Monomial>> {
    let Some(first) = polys.first() else {
        return Ok(Certificate { checks: Vec::new(), skipped_above_bound: 0 });
    };
    check_inputs(first.ctx(), polys, ord)?;
    let divisors = Divisors::new(polys, ord)?;
    let mut checks = Vec::new();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let s = s_polynomial(&polys[i], &polys[j], ord)?;
            let trace = divisors.reduce(&s, ord, true);
            checks.push(SCheck { first: i, second: j, s_element: s, trace });
        }
    }
    Ok(Certificate { checks, skipped_above_bound: 0 })
}

/// Gröbner test without a certificate: pairs with coprime leading monomials
/// are skipped and no traces are kept.
pub(crate) fn is_groebner(polys: &[CommPoly], ord: &OrderingSpec) -> Result<bool> {
    let Some(first) = polys.first() else { return Ok(true) };
    check_inputs(first.ctx(), polys, ord)?;
    let divisors = Divisors::new(polys, ord)?;
    let lms = divisors.lms();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            if lms[i].is_coprime(&lms[j]) {
                continue;
            }
            let s = s_polynomial(&polys[i], &polys[j], ord)?;
            if !divisors.reduce(&s, ord, false).remainder.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
