//! Sparse polynomials over an exact field.
//!
//! Terms are stored in an ordering-independent map; every operation that
//! needs leading data takes the monomial order explicitly, so the same value
//! can be inspected under a base order and under its extension.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Term, Word};
use crate::order::OrderingSpec;
use crate::ring::{check_same, RingContext};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<M: Term> {
    ctx: Arc<RingContext>,
    terms: BTreeMap<M, Scalar>,
}

pub type CommPoly = Polynomial<Monomial>;
pub type FreePoly = Polynomial<Word>;

/// Leading monomial, coefficient and term of a nonzero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Leading<M> {
    pub monomial: M,
    pub coeff: Scalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Degree(u64),
    Mixed,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u64> {
        match self {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }
}

impl<M: Term> Polynomial<M> {
    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        Polynomial { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &Arc<RingContext>, c: Scalar) -> Self {
        Self::term(ctx, M::one(ctx.nvars()), c)
    }

    pub fn one(ctx: &Arc<RingContext>) -> Self {
        Self::constant(ctx, ctx.field().one())
    }

    pub fn term(ctx: &Arc<RingContext>, m: M, c: Scalar) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(m, c);
        p
    }

    pub fn variable(ctx: &Arc<RingContext>, index: usize) -> Self {
        Self::term(ctx, M::variable(ctx.nvars(), index), ctx.field().one())
    }

    /// Sums the given terms; repeated monomials are merged and zeros dropped.
    pub fn from_terms(ctx: &Arc<RingContext>, terms: impl IntoIterator<Item = (M, Scalar)>) -> Self {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: M, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &M) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M> {
        self.terms.keys()
    }

    /// Terms sorted strictly descending under `ord`.
    pub fn sorted_terms(&self, ord: &OrderingSpec) -> Vec<(&M, &Scalar)> {
        let mut keyed = self.terms.iter().map(|(m, c)| (m.sort_key(ord), m, c)).collect::<Vec<_>>();
        keyed.sort_by(|a, b| b.0.cmp(&a.0));
        keyed.into_iter().map(|(_, m, c)| (m, c)).collect()
    }

    pub fn leading(&self, ord: &OrderingSpec) -> Result<Leading<M>> {
        let (m, c) = self
            .terms
            .iter()
            .max_by(|a, b| ord.cmp(a.0, b.0))
            .ok_or(Error::ZeroInput("leading"))?;
        Ok(Leading { monomial: m.clone(), coeff: c.clone() })
    }

    /// Leading monomial, or `None` for zero.
    pub fn lm(&self, ord: &OrderingSpec) -> Option<M> {
        self.leading(ord).ok().map(|l| l.monomial)
    }

    /// Weighted degree of the top component; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree(self.ctx.weights())).max()
    }

    pub fn is_homogeneous(&self) -> Homogeneity {
        let weights = self.ctx.weights();
        let mut degrees = self.terms.keys().map(|m| m.degree(weights));
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) if degrees.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Mixed,
        }
    }

    /// Sum of the terms of weighted degree `d`.
    pub fn component(&self, d: u64) -> Self {
        let weights = self.ctx.weights();
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(weights) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The top-degree homogeneous component `LH(f)`.
    pub fn leading_homogeneous(&self) -> Result<HomogeneousPolynomial<M>> {
        let p = self.degree().ok_or(Error::ZeroInput("leading_homogeneous"))?;
        Ok(HomogeneousPolynomial { poly: self.component(p), degree: p })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * left * self * right`.
    pub fn mul_term(&self, left: &M, c: &Scalar, right: &M) -> Self {
        let mut out = Self::zero(&self.ctx);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.add_term(left.mul(m).mul(right), a * c);
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, ord: &OrderingSpec) -> Result<Self> {
        let lc = self.leading(ord)?.coeff;
        Ok(self.scale(&lc.inverse()))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_same(&self.ctx, &other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.ctx, &other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.ctx, &other.ctx)?;
        let mut out = Self::zero(&self.ctx);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, ord: &'a OrderingSpec) -> PolyDisplay<'a, M> {
        PolyDisplay { poly: self, ord }
    }

    /// Rebuilds the polynomial over another ring with a monomial map.
    pub(crate) fn map_monomials<N: Term>(&self, ctx: &Arc<RingContext>, f: impl Fn(&M) -> N) -> Polynomial<N> {
        Polynomial::from_terms(ctx, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }
}

impl<M: Term> Add for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn add(self, rhs: &Polynomial<M>) -> Polynomial<M> {
        self.checked_add(rhs).expect("polynomials over different rings")
    }
}

impl<M: Term> Sub for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn sub(self, rhs: &Polynomial<M>) -> Polynomial<M> {
        self.checked_sub(rhs).expect("polynomials over different rings")
    }
}

impl<M: Term> Mul for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn mul(self, rhs: &Polynomial<M>) -> Polynomial<M> {
        self.checked_mul(rhs).expect("polynomials over different rings")
    }
}

impl<M: Term> Neg for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn neg(self) -> Polynomial<M> {
        self.scale(&-&self.ctx.field().one())
    }
}

/// A polynomial all of whose terms have weighted degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPolynomial<M: Term> {
    poly: Polynomial<M>,
    degree: u64,
}

impl<M: Term> HomogeneousPolynomial<M> {
    /// Fails on inhomogeneous input. The zero polynomial needs an explicit degree.
    pub fn new(poly: Polynomial<M>) -> Result<Self> {
        match poly.is_homogeneous() {
            Homogeneity::Degree(degree) => Ok(HomogeneousPolynomial { poly, degree }),
            Homogeneity::Zero => Err(Error::ZeroInput("homogeneous polynomial")),
            Homogeneity::Mixed => Err(Error::Precondition("polynomial is not homogeneous".into())),
        }
    }

    pub fn poly(&self) -> &Polynomial<M> {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial<M> {
        self.poly
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }
}

pub struct PolyDisplay<'a, M: Term> {
    poly: &'a Polynomial<M>,
    ord: &'a OrderingSpec,
}

impl<M: Term> fmt::Display for PolyDisplay<'_, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.sorted_terms(self.ord).into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.render_in(&self.poly.ctx))?;
            } else {
                write!(f, "{abs} {}", m.render_in(&self.poly.ctx))?;
            }
        }
        Ok(())
    }
}

/// Sorts polynomials ascending by leading monomial (zeros first).
pub(crate) fn sort_by_lm<M: Term>(polys: &mut [Polynomial<M>], ord: &OrderingSpec) {
    polys.sort_by(|a, b| match (a.lm(ord), b.lm(ord)) {
        (Some(x), Some(y)) => ord.cmp(&x, &y),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    });
}
