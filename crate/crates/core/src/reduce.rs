//! Division algorithm with a replayable trace.
//!
//! Strategy is fixed: repeatedly take the largest monomial of the working
//! polynomial; if some leading monomial divides it, reduce by the first such
//! divisor using the leftmost factorization, otherwise move the term to the
//! remainder. The result is full (tail) reduction.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monomial::Term;
use crate::order::OrderingSpec;
use crate::poly::Polynomial;
use crate::ring::check_same;
use crate::scalar::Scalar;

/// One step `coeff * left * g[divisor] * right` subtracted from the working polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep<M> {
    pub divisor: usize,
    pub left: M,
    pub right: M,
    pub coeff: Scalar,
}

/// `f = sum(coeff_i * left_i * g_i * right_i) + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace<M: Term> {
    pub steps: Vec<ReductionStep<M>>,
    pub remainder: Polynomial<M>,
}

impl<M: Term> ReductionTrace<M> {
    /// The traced combination `sum(coeff_i * left_i * g_i * right_i)`.
    pub fn combination(&self, divisors: &[Polynomial<M>]) -> Polynomial<M> {
        let mut acc = Polynomial::zero(self.remainder.ctx());
        for s in &self.steps {
            for (m, c) in divisors[s.divisor].terms() {
                acc.add_term(s.left.mul(m).mul(&s.right), &s.coeff * c);
            }
        }
        acc
    }

    /// `combination + remainder`; equals the reduced input.
    pub fn replay(&self, divisors: &[Polynomial<M>]) -> Polynomial<M> {
        &self.combination(divisors) + &self.remainder
    }

    pub fn render(&self, divisors: &[Polynomial<M>], ord: &OrderingSpec) -> String {
        let ctx = self.remainder.ctx();
        let mut out = String::new();
        for s in &self.steps {
            let lm = divisors[s.divisor].lm(ord).expect("nonzero divisor");
            out.push_str(&format!(
                "  step: {} * ({}) * g{} * ({})   [reduces {}]\n",
                s.coeff,
                s.left.render_in(ctx),
                s.divisor + 1,
                s.right.render_in(ctx),
                s.left.mul(&lm).mul(&s.right).render_in(ctx),
            ));
        }
        out.push_str(&format!("  remainder: {}\n", self.remainder.display(ord)));
        out
    }
}

/// Precomputed leading data of a divisor set.
pub(crate) struct Divisors<'a, M: Term> {
    polys: &'a [Polynomial<M>],
    lms: Vec<M>,
    lc_inv: Vec<Scalar>,
}

impl<'a, M: Term> Divisors<'a, M> {
    pub(crate) fn new(polys: &'a [Polynomial<M>], ord: &OrderingSpec) -> Result<Self> {
        let mut lms = Vec::with_capacity(polys.len());
        let mut lc_inv = Vec::with_capacity(polys.len());
        for g in polys {
            let lead = g.leading(ord).map_err(|_| Error::ZeroInput("divisor set"))?;
            lms.push(lead.monomial);
            lc_inv.push(lead.coeff.inverse());
        }
        Ok(Divisors { polys, lms, lc_inv })
    }

    pub(crate) fn lms(&self) -> &[M] {
        &self.lms
    }

    fn find(&self, m: &M) -> Option<(usize, M, M)> {
        self.lms
            .iter()
            .enumerate()
            .find_map(|(i, lm)| m.factor_through(lm).map(|f| (i, f.left, f.right)))
    }

    pub(crate) fn reduce(&self, f: &Polynomial<M>, ord: &OrderingSpec, record: bool) -> ReductionTrace<M> {
        let ctx = f.ctx();
        let mut work: BTreeMap<Vec<u64>, (M, Scalar)> =
            f.terms().map(|(m, c)| (m.sort_key(ord), (m.clone(), c.clone()))).collect();
        let mut remainder = Vec::new();
        let mut steps = Vec::new();
        while let Some((_, (m, c))) = work.pop_last() {
            match self.find(&m) {
                None => remainder.push((m, c)),
                Some((i, left, right)) => {
                    let coeff = &c * &self.lc_inv[i];
                    // The leading term cancels exactly; subtract the rest.
                    for (gm, gc) in self.polys[i].terms() {
                        if *gm == self.lms[i] {
                            continue;
                        }
                        let prod = left.mul(gm).mul(&right);
                        let delta = -&(&coeff * gc);
                        let key = prod.sort_key(ord);
                        match work.get_mut(&key) {
                            Some(entry) => {
                                let sum = &entry.1 + &delta;
                                if sum.is_zero() {
                                    work.remove(&key);
                                } else {
                                    entry.1 = sum;
                                }
                            }
                            None => {
                                work.insert(key, (prod, delta));
                            }
                        }
                    }
                    if record {
                        steps.push(ReductionStep { divisor: i, left, right, coeff });
                    }
                }
            }
        }
        let trace = ReductionTrace { steps, remainder: Polynomial::from_terms(ctx, remainder) };
        if record && cfg!(debug_assertions) {
            debug_assert_eq!(&trace.replay(self.polys), f, "reduction trace does not replay");
        }
        trace
    }
}

/// Normal form of `f` modulo `divisors`, with the full reduction trace.
pub fn normal_form<M: Term>(
    f: &Polynomial<M>,
    divisors: &[Polynomial<M>],
    ord: &OrderingSpec,
) -> Result<ReductionTrace<M>> {
    for g in divisors {
        check_same(f.ctx(), g.ctx())?;
    }
    ord.check_ring(f.ctx())?;
    Ok(Divisors::new(divisors, ord)?.reduce(f, ord, true))
}

/// Remainder only; skips trace bookkeeping.
pub fn remainder<M: Term>(f: &Polynomial<M>, divisors: &[Polynomial<M>], ord: &OrderingSpec) -> Result<Polynomial<M>> {
    for g in divisors {
        check_same(f.ctx(), g.ctx())?;
    }
    Ok(Divisors::new(divisors, ord)?.reduce(f, ord, false).remainder)
}

pub fn reduces_to_zero<M: Term>(f: &Polynomial<M>, divisors: &[Polynomial<M>], ord: &OrderingSpec) -> Result<bool> {
    Ok(remainder(f, divisors, ord)?.is_zero())
}
