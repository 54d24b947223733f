//! Gröbner basis values and the canonicalization shared by both completions.

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::monomial::Term;
use crate::order::OrderingSpec;
use crate::poly::{sort_by_lm, Polynomial};
use crate::reduce::{remainder, Divisors};
use crate::ring::RingContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GbFlags {
    pub minimal: bool,
    pub reduced: bool,
    /// No S-element was left unprocessed (always true for commutative input).
    pub complete: bool,
    pub degree_bound: Option<u64>,
}

/// Monic elements sorted ascending by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<M: Term> {
    ctx: Arc<RingContext>,
    ord: OrderingSpec,
    elements: Vec<Polynomial<M>>,
    flags: GbFlags,
}

impl<M: Term> GroebnerBasis<M> {
    /// Wraps `elements` after normalizing them to monic form and sorting;
    /// `minimal` and `reduced` are recomputed, the other flags are taken as given.
    pub fn from_parts(
        ctx: &Arc<RingContext>,
        ord: &OrderingSpec,
        elements: Vec<Polynomial<M>>,
        complete: bool,
        degree_bound: Option<u64>,
    ) -> Result<Self> {
        let mut elements = elements
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.monic(ord))
            .collect::<Result<Vec<_>>>()?;
        dedup(&mut elements);
        sort_by_lm(&mut elements, ord);
        let minimal = is_minimal(&elements, ord);
        let reduced = minimal && is_reduced(&elements, ord);
        Ok(GroebnerBasis {
            ctx: ctx.clone(),
            ord: ord.clone(),
            elements,
            flags: GbFlags { minimal, reduced, complete, degree_bound },
        })
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn ord(&self) -> &OrderingSpec {
        &self.ord
    }

    pub fn elements(&self) -> &[Polynomial<M>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<M>> {
        self.elements
    }

    pub fn flags(&self) -> GbFlags {
        self.flags
    }

    pub(crate) fn set_complete(&mut self, complete: bool, degree_bound: Option<u64>) {
        self.flags.complete = complete;
        self.flags.degree_bound = degree_bound;
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.len() == 1 && g.monomials().all(|m| m.is_one()))
    }

    pub fn leading_monomials(&self) -> Vec<M> {
        self.elements.iter().map(|g| g.lm(&self.ord).expect("nonzero")).collect()
    }

    /// Ideal membership by reduction; exact when the basis is complete.
    pub fn contains(&self, f: &Polynomial<M>) -> Result<bool> {
        Ok(remainder(f, &self.elements, &self.ord)?.is_zero())
    }

    pub fn display(&self) -> BasisDisplay<'_, M> {
        BasisDisplay { basis: self }
    }
}

pub struct BasisDisplay<'a, M: Term> {
    basis: &'a GroebnerBasis<M>,
}

impl<M: Term> fmt::Display for BasisDisplay<'_, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.basis.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.basis.ord))?;
        }
        write!(f, "}}")
    }
}

fn dedup<M: Term>(polys: &mut Vec<Polynomial<M>>) {
    let mut out: Vec<Polynomial<M>> = Vec::with_capacity(polys.len());
    for p in polys.drain(..) {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    *polys = out;
}

/// No leading monomial divides another.
pub fn is_minimal<M: Term>(polys: &[Polynomial<M>], ord: &OrderingSpec) -> bool {
    let lms = polys.iter().map(|g| g.lm(ord)).collect::<Option<Vec<_>>>();
    let Some(lms) = lms else { return false };
    lms.iter()
        .enumerate()
        .all(|(i, a)| lms.iter().enumerate().all(|(j, b)| i == j || !a.divides(b)))
}

/// Every non-leading monomial is normal with respect to the other elements.
pub fn is_reduced<M: Term>(polys: &[Polynomial<M>], ord: &OrderingSpec) -> bool {
    let lms = polys.iter().map(|g| g.lm(ord)).collect::<Option<Vec<_>>>();
    let Some(lms) = lms else { return false };
    polys.iter().zip(&lms).all(|(g, lm)| {
        g.monomials()
            .filter(|m| *m != lm)
            .all(|m| lms.iter().all(|other| !other.divides(m)))
    })
}

/// Keeps the elements whose leading monomial is not divisible by that of an
/// earlier kept element (ascending LM order, first occurrence wins on ties),
/// made monic.
pub(crate) fn minimal_subset<M: Term>(polys: &[Polynomial<M>], ord: &OrderingSpec) -> Result<Vec<Polynomial<M>>> {
    let mut sorted = polys.iter().filter(|p| !p.is_zero()).cloned().collect::<Vec<_>>();
    sort_by_lm(&mut sorted, ord);
    let mut kept: Vec<(M, Polynomial<M>)> = Vec::new();
    for p in sorted {
        let lm = p.lm(ord).expect("nonzero");
        if kept.iter().all(|(k, _)| !k.divides(&lm)) {
            kept.push((lm, p.monic(ord)?));
        }
    }
    Ok(kept.into_iter().map(|(_, p)| p).collect())
}

/// Tail-reduces each element of a minimal set against the others.
pub(crate) fn reduce_tails<M: Term>(polys: &[Polynomial<M>], ord: &OrderingSpec) -> Result<Vec<Polynomial<M>>> {
    let mut out = polys.to_vec();
    for i in 0..out.len() {
        let lead = out[i].leading(ord)?;
        let head = Polynomial::term(out[i].ctx(), lead.monomial.clone(), lead.coeff.clone());
        let tail = &out[i] - &head;
        let others = out
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect::<Vec<_>>();
        let r = Divisors::new(&others, ord)?.reduce(&tail, ord, false).remainder;
        out[i] = (&head + &r).monic(ord)?;
    }
    Ok(out)
}

/// Monic, minimal, tail-reduced, sorted. A constant collapses the set to `{1}`.
pub(crate) fn canonicalize<M: Term>(
    ctx: &Arc<RingContext>,
    polys: &[Polynomial<M>],
    ord: &OrderingSpec,
) -> Result<Vec<Polynomial<M>>> {
    if polys.iter().any(|p| !p.is_zero() && p.monomials().all(|m| m.is_one())) {
        return Ok(vec![Polynomial::one(ctx)]);
    }
    let mut out = reduce_tails(&minimal_subset(polys, ord)?, ord)?;
    sort_by_lm(&mut out, ord);
    Ok(out)
}
