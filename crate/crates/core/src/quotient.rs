//! Normal monomials, truncated Hilbert data, and the presentation reports of
//! an algebra `A`, its associated graded algebra `G(A)` and its Rees algebra.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::basis::GroebnerBasis;
use crate::dh_central::CentralDh;
use crate::dh_noncentral::NoncentralDh;
use crate::error::{Error, Result};
use crate::gb_comm::{reduced, is_groebner};
use crate::gb_nc::verify_groebner_nc;
use crate::monomial::{Monomial, Term, Word};
use crate::order::OrderingSpec;
use crate::poly::{HomogeneousPolynomial, Polynomial};
use crate::ring::RingContext;

/// Default cap for dimension tables.
pub const DEFAULT_MAX_DEGREE: u64 = 10;

/// Monomials divisible by no leading monomial, grouped by weighted degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalMonomialSet<M: Term> {
    ctx: Arc<RingContext>,
    ord: OrderingSpec,
    leading: Vec<M>,
    by_degree: Vec<Vec<M>>,
}

impl<M: Term> NormalMonomialSet<M> {
    pub fn ctx(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    /// The leading monomials the set was filtered against.
    pub fn leading(&self) -> &[M] {
        &self.leading
    }

    pub fn max_degree(&self) -> u64 {
        self.by_degree.len() as u64 - 1
    }

    /// Normal monomials of degree `d`, ascending; empty beyond the cap.
    pub fn degree(&self, d: u64) -> &[M] {
        self.by_degree.get(d as usize).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &M> {
        self.by_degree.iter().flatten()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, m: &M) -> bool {
        let d = m.degree(self.ctx.weights()) as usize;
        self.by_degree.get(d).is_some_and(|level| level.contains(m))
    }

    /// `{a, b, ...}` in ascending order.
    pub fn render(&self) -> String {
        let items = self.iter().map(|m| m.render_in(&self.ctx)).collect::<Vec<_>>();
        format!("{{{}}}", items.join(", "))
    }
}

/// Enumerates `N(leading)` up to `max_degree`. A normal monomial of positive
/// degree stays normal when its last variable is removed, so each degree is
/// built from the lower ones by appending one variable.
pub fn normal_monomials_of<M: Term>(
    ctx: &Arc<RingContext>,
    ord: &OrderingSpec,
    leading: &[M],
    max_degree: u64,
) -> Result<NormalMonomialSet<M>> {
    ord.check_ring(ctx)?;
    let n = ctx.nvars();
    let weights = ctx.weights();
    let normal = |m: &M| leading.iter().all(|u| !u.divides(m));
    let mut by_degree: Vec<Vec<M>> = Vec::with_capacity(max_degree as usize + 1);
    for d in 0..=max_degree {
        let level = if d == 0 {
            let one = M::one(n);
            if normal(&one) {
                vec![one]
            } else {
                Vec::new()
            }
        } else {
            let mut found = BTreeSet::new();
            for (v, &w) in weights.iter().enumerate() {
                let w = u64::from(w);
                if w > d {
                    continue;
                }
                for m in &by_degree[(d - w) as usize] {
                    let next = m.times_var(v);
                    if normal(&next) {
                        found.insert(next);
                    }
                }
            }
            let mut level = found.into_iter().collect::<Vec<_>>();
            level.sort_by_key(|m| m.sort_key(ord));
            level
        };
        by_degree.push(level);
    }
    Ok(NormalMonomialSet { ctx: ctx.clone(), ord: ord.clone(), leading: leading.to_vec(), by_degree })
}

/// `N(G)` up to `max_degree`.
pub fn normal_monomials<M: Term>(basis: &GroebnerBasis<M>, max_degree: u64) -> Result<NormalMonomialSet<M>> {
    normal_monomials_of(basis.ctx(), basis.ord(), &basis.leading_monomials(), max_degree)
}

/// Number of normal monomials in each degree `0..=max_degree`.
pub fn quotient_dims<M: Term>(basis: &GroebnerBasis<M>, max_degree: u64) -> Result<Vec<usize>> {
    Ok(normal_monomials(basis, max_degree)?.dims())
}

/// Running sums of a dimension table.
pub fn cumulative(dims: &[usize]) -> Vec<usize> {
    dims.iter()
        .scan(0, |acc, d| {
            *acc += d;
            Some(*acc)
        })
        .collect()
}

/// `{LH(g)}`, the top homogeneous component of each element.
pub fn lh_set<M: Term>(polys: &[Polynomial<M>]) -> Result<Vec<HomogeneousPolynomial<M>>> {
    polys.iter().map(|g| g.leading_homogeneous()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationMode {
    Central,
    Noncentral,
}

/// Defining relations of `A`, `G(A)` and the Rees algebra `Ã`, with
/// per-degree dimension tables truncated at `max_degree`.
#[derive(Debug, Clone)]
pub struct PresentationReport<M: Term> {
    pub mode: PresentationMode,
    pub max_degree: u64,
    /// `G_*` or `G_~`, a basis of the ideal presenting `A`.
    pub algebra: GroebnerBasis<M>,
    /// `LH` of the algebra relations; presents `G(A)`.
    pub graded: GroebnerBasis<M>,
    /// The input basis; presents `Ã`.
    pub rees: GroebnerBasis<M>,
    /// Normal monomials of `A` per filtration degree.
    pub dims_algebra: Vec<usize>,
    pub dims_graded: Vec<usize>,
    pub dims_rees: Vec<usize>,
}

impl<M: Term> PresentationReport<M> {
    /// `dim F_p A` for each `p`.
    pub fn cumulative_algebra(&self) -> Vec<usize> {
        cumulative(&self.dims_algebra)
    }

    /// Structured text form of the report.
    pub fn render(&self) -> String {
        let table = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        let mode = match self.mode {
            PresentationMode::Central => "central",
            PresentationMode::Noncentral => "noncentral",
        };
        let _ = writeln!(out, "mode = {mode}");
        let _ = writeln!(out, "A = {} / {}", self.algebra.ctx(), self.algebra.display());
        let _ = writeln!(out, "G(A) = {} / {}", self.graded.ctx(), self.graded.display());
        let _ = writeln!(out, "Rees = {} / {}", self.rees.ctx(), self.rees.display());
        let _ = writeln!(out, "dims A (degrees 0..{}) = {}", self.max_degree, table(&self.dims_algebra));
        let _ = writeln!(out, "dims F_p A = {}", table(&self.cumulative_algebra()));
        let _ = writeln!(out, "dims G(A) = {}", table(&self.dims_graded));
        let _ = write!(out, "dims Rees = {}", table(&self.dims_rees));
        out
    }
}

fn graded_basis<M: Term>(algebra: &GroebnerBasis<M>) -> Result<GroebnerBasis<M>> {
    let lh = lh_set(algebra.elements())?.into_iter().map(HomogeneousPolynomial::into_poly).collect();
    let flags = algebra.flags();
    GroebnerBasis::from_parts(algebra.ctx(), algebra.ord(), lh, flags.complete, flags.degree_bound)
}

fn not_closed<M: Term>(g: &Polynomial<M>, ord: &OrderingSpec) -> Error {
    Error::Precondition(format!("basis is not dh-closed; offending element {}", g.display(ord)))
}

/// Report for a homogeneous Gröbner basis of `R[t]` generating a dh-closed ideal.
pub fn presentation_report_central(
    dh: &CentralDh,
    basis: &GroebnerBasis<Monomial>,
    max_degree: u64,
) -> Result<PresentationReport<Monomial>> {
    let ord = dh.ord_ext();
    if !is_groebner(basis.elements(), ord)? {
        return Err(Error::Argument("input is not a Gröbner basis under the extended order".into()));
    }
    let closure = dh.is_dh_closed_ideal(basis.elements())?;
    if let Some(w) = &closure.witness {
        return Err(not_closed(w, ord));
    }
    let algebra = reduced(&dh.dehomogenize_basis(basis.elements())?)?;
    let graded = graded_basis(&algebra)?;
    let rees = GroebnerBasis::from_parts(dh.ext(), ord, basis.elements().to_vec(), true, None)?;
    Ok(PresentationReport {
        mode: PresentationMode::Central,
        max_degree,
        dims_algebra: quotient_dims(&algebra, max_degree)?,
        dims_graded: quotient_dims(&graded, max_degree)?,
        dims_rees: quotient_dims(&rees, max_degree)?,
        algebra,
        graded,
        rees,
    })
}

/// Report for a homogeneous Gröbner basis of `K<X, T>` containing the
/// commutators and generating a dh-closed ideal.
pub fn presentation_report_noncentral(
    dh: &NoncentralDh,
    basis: &GroebnerBasis<Word>,
    max_degree: u64,
) -> Result<PresentationReport<Word>> {
    let ord = dh.ord_ext();
    if !verify_groebner_nc(basis.elements(), ord, None)?.is_groebner() {
        return Err(Error::Argument("input is not a Gröbner basis under the extended order".into()));
    }
    let top = basis.elements().iter().filter_map(|g| g.degree()).max().unwrap_or(0).max(2);
    let closure = dh.is_dh_closed_ideal(basis.elements(), top)?;
    if let Some(w) = &closure.witness {
        return Err(not_closed(w, ord));
    }
    let rees = closure.basis;
    let (algebra, _) = dh.dehomogenize_basis(&rees)?;
    let algebra = reduced(&algebra)?;
    let graded = graded_basis(&algebra)?;
    Ok(PresentationReport {
        mode: PresentationMode::Noncentral,
        max_degree,
        dims_algebra: quotient_dims(&algebra, max_degree)?,
        dims_graded: quotient_dims(&graded, max_degree)?,
        dims_rees: quotient_dims(&rees, max_degree)?,
        algebra,
        graded,
        rees,
    })
}
