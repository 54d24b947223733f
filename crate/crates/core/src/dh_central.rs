//! Central (de)homogenization between `R = K[x_1..x_m]` and `R[t]`.
//!
//! `R[t]` carries the mixed grading `deg(t^j w) = j + deg(w)` and the block
//! order that compares `t`-free parts first and powers of `t` last.
//! Dehomogenization is the evaluation `t -> 1`.

use std::sync::Arc;

use crate::basis::GroebnerBasis;
use crate::error::{Error, Result};
use crate::gb_comm::{buchberger, reduced, is_groebner};
use crate::monomial::{Monomial, Term};
use crate::order::OrderingSpec;
use crate::poly::{CommPoly, Homogeneity, HomogeneousPolynomial};
use crate::reduce::remainder;
use crate::ring::{check_same, RingContext, RingKind};

/// The pair of rings `R`, `R[t]` with their orders.
#[derive(Debug, Clone)]
pub struct CentralDh {
    base: Arc<RingContext>,
    ext: Arc<RingContext>,
    t: usize,
    ord_base: OrderingSpec,
    ord_ext: OrderingSpec,
    base_to_ext: Vec<usize>,
}

/// Verdict on whether a graded ideal is generated by a dh-closed basis.
#[derive(Debug, Clone)]
pub struct DhClosure<M: Term> {
    /// Reduced basis the verdict was read from.
    pub basis: GroebnerBasis<M>,
    pub closed: bool,
    /// First basis element that is not dh-closed.
    pub witness: Option<crate::poly::Polynomial<M>>,
}

#[derive(Debug, Clone)]
pub struct CentralPipeline {
    pub s_star: Vec<CommPoly>,
    /// Reduced basis of `<S*>` in `R[t]`.
    pub gb_s_star: GroebnerBasis<Monomial>,
    /// Reduced basis of `I = <S>` in `R`.
    pub gb_i: GroebnerBasis<Monomial>,
    /// Homogenization of `gb_i`, a basis of `<I*>`.
    pub gb_i_star: GroebnerBasis<Monomial>,
    pub s_star_in_i_star: bool,
    pub i_star_in_s_star: bool,
    /// An element of `gb_i_star` outside `<S*>`, when the inclusion is strict.
    pub witness: Option<CommPoly>,
}

impl CentralPipeline {
    pub fn ideals_equal(&self) -> bool {
        self.s_star_in_i_star && self.i_star_in_s_star
    }
}

/// Uses variable `index` of `ctx` as `t`; the rest form `R`. `ord` is a
/// graded order on `ctx` whose restriction to `R` becomes the base order.
pub fn treat_variable_as_t(ctx: &Arc<RingContext>, index: usize, ord: &OrderingSpec) -> Result<CentralDh> {
    CentralDh::new(ctx, index, ord)
}

impl CentralDh {
    pub fn new(ext: &Arc<RingContext>, t: usize, ord: &OrderingSpec) -> Result<Self> {
        if ext.kind() != RingKind::Commutative {
            return Err(Error::Argument("central homogenization needs a commutative ring".into()));
        }
        ord.check_ring(ext)?;
        if t >= ext.nvars() {
            return Err(Error::Argument(format!("no variable with index {t}")));
        }
        if ext.weights()[t] != 1 {
            return Err(Error::Argument(format!(
                "variable {} has weight {}; the homogenizing variable must have weight 1",
                ext.vars()[t],
                ext.weights()[t]
            )));
        }
        let base = Arc::new(ext.without_var(t));
        let base_to_ext = (0..ext.nvars()).filter(|&v| v != t).collect::<Vec<_>>();
        let ascending = ord
            .ascending()
            .into_iter()
            .filter(|&v| v != t)
            .map(|v| if v > t { v - 1 } else { v })
            .collect::<Vec<_>>();
        let ord_base = OrderingSpec::deglex(&base, &ascending)?;
        let ord_ext = OrderingSpec::deglex(ext, &ord.ascending())?.central_t(t)?;
        Ok(CentralDh { base, ext: ext.clone(), t, ord_base, ord_ext, base_to_ext })
    }

    /// `R[t]` for a given `R`, with `t` appended as the last variable.
    pub fn extend(base: &Arc<RingContext>, ord_base: &OrderingSpec, t_name: &str) -> Result<Self> {
        let mut vars = base.vars().to_vec();
        vars.push(t_name.to_string());
        let mut weights = base.weights().to_vec();
        weights.push(1);
        let t = base.nvars();
        let ext = Arc::new(RingContext::new(RingKind::Commutative, vars, weights, base.field())?.with_homog_var(t)?);
        let mut asc = ord_base.ascending();
        asc.insert(0, t);
        let ord = OrderingSpec::deglex(&ext, &asc)?;
        let dh = CentralDh::new(&ext, t, &ord)?;
        Ok(CentralDh { base: base.clone(), ord_base: ord_base.clone(), ..dh })
    }

    pub fn base(&self) -> &Arc<RingContext> {
        &self.base
    }

    pub fn ext(&self) -> &Arc<RingContext> {
        &self.ext
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn ord_base(&self) -> &OrderingSpec {
        &self.ord_base
    }

    pub fn ord_ext(&self) -> &OrderingSpec {
        &self.ord_ext
    }

    fn ext_monomial(&self, m: &Monomial, t_power: u32) -> Monomial {
        let mut exps = vec![0; self.ext.nvars()];
        for (i, &e) in m.exponents().iter().enumerate() {
            exps[self.base_to_ext[i]] = e;
        }
        exps[self.t] = t_power;
        Monomial::new(exps)
    }

    fn base_monomial(&self, m: &Monomial) -> Monomial {
        Monomial::new(self.base_to_ext.iter().map(|&v| m.exponents()[v]).collect())
    }

    /// `R -> R[t]` inclusion.
    pub fn embed(&self, f: &CommPoly) -> Result<CommPoly> {
        check_same(f.ctx(), &self.base)?;
        Ok(f.map_monomials(&self.ext, |m| self.ext_monomial(m, 0)))
    }

    /// `f* = f_p + t f_{p-1} + ... + t^s f_{p-s}`.
    pub fn homogenize(&self, f: &CommPoly) -> Result<HomogeneousPolynomial<Monomial>> {
        check_same(f.ctx(), &self.base)?;
        let p = f.degree().ok_or(Error::ZeroInput("homogenize"))?;
        let weights = self.base.weights();
        let h = f.map_monomials(&self.ext, |m| self.ext_monomial(m, (p - m.degree(weights)) as u32));
        HomogeneousPolynomial::new(h)
    }

    /// `F_*`: substitute `t = 1`.
    pub fn dehomogenize(&self, f: &CommPoly) -> Result<CommPoly> {
        check_same(f.ctx(), &self.ext)?;
        Ok(f.map_monomials(&self.base, |m| self.base_monomial(m)))
    }

    /// `(F_*)* = F`, decided by `t` not dividing the leading monomial.
    pub fn is_dh_closed_element(&self, f: &CommPoly) -> Result<bool> {
        check_same(f.ctx(), &self.ext)?;
        match f.is_homogeneous() {
            Homogeneity::Degree(_) => {}
            Homogeneity::Zero => return Err(Error::ZeroInput("is_dh_closed_element")),
            Homogeneity::Mixed => return Err(Error::Precondition("element is not homogeneous".into())),
        }
        let lm = f.lm(&self.ord_ext).expect("nonzero");
        let closed = lm.occurrences(self.t) == 0;
        debug_assert_eq!(closed, self.is_dh_closed_by_definition(f)?, "dh-closure criteria disagree");
        Ok(closed)
    }

    /// `(F_*)* == F` computed literally.
    pub fn is_dh_closed_by_definition(&self, f: &CommPoly) -> Result<bool> {
        let back = self.dehomogenize(f)?;
        if back.is_zero() {
            return Ok(f.is_zero());
        }
        Ok(self.homogenize(&back)?.poly() == f)
    }

    /// `{g*}`; `basis` must be a Gröbner basis of `R` under the base order.
    pub fn homogenize_basis(&self, basis: &GroebnerBasis<Monomial>) -> Result<GroebnerBasis<Monomial>> {
        check_same(basis.ctx(), &self.base)?;
        if !is_groebner(basis.elements(), &self.ord_base)? {
            return Err(Error::Argument("input is not a Gröbner basis under the base order".into()));
        }
        let elements = basis
            .elements()
            .iter()
            .map(|g| self.homogenize(g).map(HomogeneousPolynomial::into_poly))
            .collect::<Result<Vec<_>>>()?;
        let flags = basis.flags();
        GroebnerBasis::from_parts(&self.ext, &self.ord_ext, elements, flags.complete, flags.degree_bound)
    }

    /// `{G_*}` for a homogeneous Gröbner basis of a graded ideal of `R[t]`.
    pub fn dehomogenize_basis(&self, basis: &[CommPoly]) -> Result<GroebnerBasis<Monomial>> {
        for g in basis {
            check_same(g.ctx(), &self.ext)?;
            if g.is_homogeneous() == Homogeneity::Mixed {
                return Err(Error::Precondition(format!(
                    "{} is not homogeneous",
                    g.display(&self.ord_ext)
                )));
            }
        }
        if !is_groebner(basis, &self.ord_ext)? {
            return Err(Error::Argument("input is not a Gröbner basis under the extended order".into()));
        }
        let elements = basis.iter().map(|g| self.dehomogenize(g)).collect::<Result<Vec<_>>>()?;
        GroebnerBasis::from_parts(&self.base, &self.ord_base, elements, true, None)
    }

    /// Reduces `generators` of a graded ideal `J` to its reduced basis and
    /// checks every element for dh-closure.
    pub fn is_dh_closed_ideal(&self, generators: &[CommPoly]) -> Result<DhClosure<Monomial>> {
        for g in generators {
            check_same(g.ctx(), &self.ext)?;
            if g.is_homogeneous() == Homogeneity::Mixed {
                return Err(Error::Precondition(format!(
                    "{} is not homogeneous",
                    g.display(&self.ord_ext)
                )));
            }
        }
        let basis = buchberger(&self.ext, generators, &self.ord_ext)?;
        let mut witness = None;
        for g in basis.elements() {
            if !self.is_dh_closed_element(g)? {
                witness = Some(g.clone());
                break;
            }
        }
        Ok(DhClosure { closed: witness.is_none(), basis, witness })
    }

    /// Homogenize `S`, complete `<S*>`, dehomogenize to a basis of `I`, then
    /// homogenize that basis to get a basis of `<I*>`.
    pub fn pipeline(&self, generators: &[CommPoly]) -> Result<CentralPipeline> {
        let s_star = generators
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| self.homogenize(f).map(HomogeneousPolynomial::into_poly))
            .collect::<Result<Vec<_>>>()?;
        let gb_s_star = buchberger(&self.ext, &s_star, &self.ord_ext)?;
        let gb_i = reduced(&self.dehomogenize_basis(gb_s_star.elements())?)?;
        let gb_i_star = self.homogenize_basis(&gb_i)?;
        let outside = |g: &CommPoly, basis: &GroebnerBasis<Monomial>| -> Result<bool> {
            Ok(!remainder(g, basis.elements(), &self.ord_ext)?.is_zero())
        };
        let mut witness = None;
        for g in gb_i_star.elements() {
            if outside(g, &gb_s_star)? {
                witness = Some(g.clone());
                break;
            }
        }
        let mut s_star_in_i_star = true;
        for g in gb_s_star.elements() {
            if outside(g, &gb_i_star)? {
                s_star_in_i_star = false;
            }
        }
        Ok(CentralPipeline {
            s_star,
            gb_s_star,
            gb_i,
            gb_i_star,
            s_star_in_i_star,
            i_star_in_s_star: witness.is_none(),
            witness,
        })
    }
}
