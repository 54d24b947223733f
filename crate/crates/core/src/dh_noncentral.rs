//! Noncentral (de)homogenization between `K<X>` and `K<X, T>`.
//!
//! `T` is a new letter of weight 1 placed on the left of lower components,
//! and is the smallest letter of the extended order. Because `T` does not
//! commute with the `X_i`, the commutators `X_i T - T X_i` are adjoined to
//! every generating set on the extended side. Dehomogenization erases `T`.

use std::sync::Arc;

use crate::basis::GroebnerBasis;
use crate::dh_central::DhClosure;
use crate::error::{Error, Result};
use crate::gb_comm::reduced;
use crate::gb_nc::{complete_nc, verify_groebner_nc};
use crate::monomial::{Term, Word};
use crate::order::OrderingSpec;
use crate::poly::{FreePoly, Homogeneity, HomogeneousPolynomial};
use crate::reduce::{normal_form, remainder, ReductionTrace};
use crate::ring::{check_same, RingContext, RingKind};

#[derive(Debug, Clone)]
pub struct NoncentralDh {
    base: Arc<RingContext>,
    ext: Arc<RingContext>,
    t: usize,
    ord_base: OrderingSpec,
    ord_ext: OrderingSpec,
    base_to_ext: Vec<usize>,
    commutators: Vec<FreePoly>,
    reordered: bool,
}

/// Result of rewriting a homogeneous element modulo the commutators: every
/// monomial has the shape `T^r w` with `w` free of `T`.
#[derive(Debug, Clone)]
pub struct TLeftNormalForm {
    pub form: FreePoly,
    /// `F = (commutator combination) + form`.
    pub trace: ReductionTrace<Word>,
}

#[derive(Debug, Clone)]
pub struct NoncentralPipeline {
    pub s_tilde: Vec<FreePoly>,
    /// Truncated reduced basis of `<S~>`.
    pub gb_s_tilde: GroebnerBasis<Word>,
    /// Reduced basis of `I = <S>`; `complete` when it passes full overlap
    /// verification and reduces every generator to zero.
    pub gb_i: GroebnerBasis<Word>,
    /// `{g~ : g in gb_i}` plus the commutators.
    pub gb_i_tilde: GroebnerBasis<Word>,
    /// Zero images of commutators dropped while dehomogenizing.
    pub dropped: usize,
    pub s_tilde_in_i_tilde: bool,
    pub i_tilde_in_s_tilde: bool,
    pub witness: Option<FreePoly>,
    pub degree_bound: u64,
}

impl NoncentralPipeline {
    /// Equality of `<S~>` and `<I~>`, decided up to the degree bound.
    pub fn ideals_equal(&self) -> bool {
        self.s_tilde_in_i_tilde && self.i_tilde_in_s_tilde
    }
}

/// Uses letter `index` of `ctx` as `T`; it is moved to the lowest precedence.
pub fn treat_variable_as_t_nc(ctx: &Arc<RingContext>, index: usize, ord: &OrderingSpec) -> Result<NoncentralDh> {
    NoncentralDh::new(ctx, index, ord)
}

impl NoncentralDh {
    pub fn new(ext: &Arc<RingContext>, t: usize, ord: &OrderingSpec) -> Result<Self> {
        if ext.kind() != RingKind::Free {
            return Err(Error::Argument("noncentral homogenization needs a free algebra".into()));
        }
        ord.check_ring(ext)?;
        if t >= ext.nvars() {
            return Err(Error::Argument(format!("no variable with index {t}")));
        }
        if ext.weights()[t] != 1 {
            return Err(Error::Argument(format!(
                "letter {} has weight {}; the homogenizing letter must have weight 1",
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
        let ord_ext = OrderingSpec::deglex(ext, &ord.ascending())?.noncentral_t(t)?;
        let reordered = ord.ascending()[0] != t;
        let one = ext.field().one();
        let tw = Word::from_indices(&[t]);
        let commutators = base_to_ext
            .iter()
            .map(|&x| {
                let xw = Word::from_indices(&[x]);
                FreePoly::from_terms(ext, [(xw.mul(&tw), one.clone()), (tw.mul(&xw), -&one)])
            })
            .collect();
        Ok(NoncentralDh { base, ext: ext.clone(), t, ord_base, ord_ext, base_to_ext, commutators, reordered })
    }

    /// `K<X, T>` for a given `K<X>`, with `T` appended as the last letter.
    pub fn extend(base: &Arc<RingContext>, ord_base: &OrderingSpec, t_name: &str) -> Result<Self> {
        let mut vars = base.vars().to_vec();
        vars.push(t_name.to_string());
        let mut weights = base.weights().to_vec();
        weights.push(1);
        let t = base.nvars();
        let ext = Arc::new(RingContext::new(RingKind::Free, vars, weights, base.field())?.with_homog_var(t)?);
        let mut asc = ord_base.ascending();
        asc.insert(0, t);
        let ord = OrderingSpec::deglex(&ext, &asc)?;
        let dh = NoncentralDh::new(&ext, t, &ord)?;
        Ok(NoncentralDh { base: base.clone(), ord_base: ord_base.clone(), ..dh })
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

    /// `X_i T - T X_i` for every base letter, in base letter order.
    pub fn commutators(&self) -> &[FreePoly] {
        &self.commutators
    }

    /// Whether `T` had to be moved down to become the smallest letter.
    pub fn reordered(&self) -> bool {
        self.reordered
    }

    fn ext_word(&self, w: &Word, t_power: usize) -> Word {
        let mut letters = vec![self.t; t_power];
        letters.extend(w.as_slice().iter().map(|&l| self.base_to_ext[l as usize]));
        Word::from_indices(&letters)
    }

    fn base_word(&self, w: &Word) -> Word {
        let letters = w
            .as_slice()
            .iter()
            .filter(|&&l| l as usize != self.t)
            .map(|&l| {
                let l = l as usize;
                if l > self.t {
                    l - 1
                } else {
                    l
                }
            })
            .collect::<Vec<_>>();
        Word::from_indices(&letters)
    }

    pub fn embed(&self, f: &FreePoly) -> Result<FreePoly> {
        check_same(f.ctx(), &self.base)?;
        Ok(f.map_monomials(&self.ext, |w| self.ext_word(w, 0)))
    }

    /// `f~ = f_p + T f_{p-1} + ... + T^s f_{p-s}`.
    pub fn homogenize(&self, f: &FreePoly) -> Result<HomogeneousPolynomial<Word>> {
        check_same(f.ctx(), &self.base)?;
        let p = f.degree().ok_or(Error::ZeroInput("homogenize_nc"))?;
        let weights = self.base.weights();
        let h = f.map_monomials(&self.ext, |w| self.ext_word(w, (p - w.degree(weights)) as usize));
        HomogeneousPolynomial::new(h)
    }

    /// `F_~`: erase every `T`.
    pub fn dehomogenize(&self, f: &FreePoly) -> Result<FreePoly> {
        check_same(f.ctx(), &self.ext)?;
        Ok(f.map_monomials(&self.base, |w| self.base_word(w)))
    }

    /// Rewrites a homogeneous element modulo the commutators, moving every `T` left.
    pub fn normalize_mod_commutators(&self, f: &FreePoly) -> Result<TLeftNormalForm> {
        check_same(f.ctx(), &self.ext)?;
        if f.is_homogeneous() == Homogeneity::Mixed {
            return Err(Error::Precondition("element is not homogeneous".into()));
        }
        let trace = normal_form(f, &self.commutators, &self.ord_ext)?;
        Ok(TLeftNormalForm { form: trace.remainder.clone(), trace })
    }

    /// `(H_~)~ = H` for the T-left normal form `H` of `f`.
    pub fn is_dh_closed_element(&self, f: &FreePoly) -> Result<bool> {
        check_same(f.ctx(), &self.ext)?;
        match f.is_homogeneous() {
            Homogeneity::Degree(_) => {}
            Homogeneity::Zero => return Err(Error::ZeroInput("is_dh_closed_element_nc")),
            Homogeneity::Mixed => return Err(Error::Precondition("element is not homogeneous".into())),
        }
        let h = self.normalize_mod_commutators(f)?.form;
        if h.is_zero() {
            // f lies in the commutator ideal; its dehomogenization is zero
            return Ok(false);
        }
        let back = self.dehomogenize(&h)?;
        let closed = !back.is_zero() && self.homogenize(&back)?.poly() == &h;
        debug_assert_eq!(
            closed,
            h.lm(&self.ord_ext).unwrap().occurrences(self.t) == 0,
            "dh-closure criteria disagree"
        );
        Ok(closed)
    }

    fn verification_bound(basis: &GroebnerBasis<Word>) -> Option<u64> {
        let flags = basis.flags();
        if flags.complete {
            None
        } else {
            flags.degree_bound
        }
    }

    /// `{g~} ∪ {X_i T - T X_i}`; `basis` must verify under the base order
    /// (up to its degree bound when it is only a truncated basis).
    pub fn homogenize_basis(&self, basis: &GroebnerBasis<Word>) -> Result<GroebnerBasis<Word>> {
        check_same(basis.ctx(), &self.base)?;
        let cert = verify_groebner_nc(basis.elements(), &self.ord_base, Self::verification_bound(basis))?;
        if !cert.is_groebner() {
            return Err(Error::Argument("input is not a Gröbner basis under the base order".into()));
        }
        let mut elements = basis
            .elements()
            .iter()
            .map(|g| self.homogenize(g).map(HomogeneousPolynomial::into_poly))
            .collect::<Result<Vec<_>>>()?;
        elements.extend(self.commutators.iter().cloned());
        let flags = basis.flags();
        GroebnerBasis::from_parts(&self.ext, &self.ord_ext, elements, flags.complete, flags.degree_bound)
    }

    /// `{G_~}` with zero images dropped; returns the basis and the number dropped.
    pub fn dehomogenize_basis(&self, basis: &GroebnerBasis<Word>) -> Result<(GroebnerBasis<Word>, usize)> {
        check_same(basis.ctx(), &self.ext)?;
        for g in basis.elements() {
            if g.is_homogeneous() == Homogeneity::Mixed {
                return Err(Error::Precondition(format!("{} is not homogeneous", g.display(&self.ord_ext))));
            }
        }
        for c in &self.commutators {
            if !remainder(c, basis.elements(), &self.ord_ext)?.is_zero() {
                return Err(Error::Precondition(format!(
                    "commutator {} is not in the ideal",
                    c.display(&self.ord_ext)
                )));
            }
        }
        let cert = verify_groebner_nc(basis.elements(), &self.ord_ext, Self::verification_bound(basis))?;
        if !cert.is_groebner() {
            return Err(Error::Argument("input is not a Gröbner basis under the extended order".into()));
        }
        let images = basis.elements().iter().map(|g| self.dehomogenize(g)).collect::<Result<Vec<_>>>()?;
        let dropped = images.iter().filter(|g| g.is_zero()).count();
        let flags = basis.flags();
        let out = GroebnerBasis::from_parts(&self.base, &self.ord_base, images, flags.complete, flags.degree_bound)?;
        Ok((out, dropped))
    }

    /// Completes `generators` (which must generate the commutators) up to
    /// `degree_bound` and checks the non-commutator part for dh-closure.
    pub fn is_dh_closed_ideal(&self, generators: &[FreePoly], degree_bound: u64) -> Result<DhClosure<Word>> {
        for g in generators {
            check_same(g.ctx(), &self.ext)?;
            if g.is_homogeneous() == Homogeneity::Mixed {
                return Err(Error::Precondition(format!("{} is not homogeneous", g.display(&self.ord_ext))));
            }
        }
        let basis = complete_nc(&self.ext, generators, &self.ord_ext, degree_bound.max(2))?;
        for c in &self.commutators {
            if !remainder(c, basis.elements(), &self.ord_ext)?.is_zero() {
                return Err(Error::Precondition(format!(
                    "commutator {} is not in the ideal",
                    c.display(&self.ord_ext)
                )));
            }
        }
        let mut witness = None;
        for g in basis.elements().iter().filter(|g| !self.commutators.contains(g)) {
            if !self.is_dh_closed_element(g)? {
                witness = Some(g.clone());
                break;
            }
        }
        Ok(DhClosure { closed: witness.is_none(), basis, witness })
    }

    /// Homogenize `S` and adjoin the commutators, complete up to
    /// `degree_bound`, dehomogenize to a basis of `I`, and homogenize back.
    pub fn pipeline(&self, generators: &[FreePoly], degree_bound: u64) -> Result<NoncentralPipeline> {
        let mut s_tilde = generators
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| self.homogenize(f).map(HomogeneousPolynomial::into_poly))
            .collect::<Result<Vec<_>>>()?;
        s_tilde.extend(self.commutators.iter().cloned());
        let gb_s_tilde = complete_nc(&self.ext, &s_tilde, &self.ord_ext, degree_bound)?;
        let (dehom, dropped) = self.dehomogenize_basis(&gb_s_tilde)?;
        let mut gb_i = reduced(&dehom)?;
        let verified = verify_groebner_nc(gb_i.elements(), &self.ord_base, None)?.is_groebner();
        let mut generated = true;
        for f in generators {
            if !remainder(f, gb_i.elements(), &self.ord_base)?.is_zero() {
                generated = false;
            }
        }
        gb_i.set_complete(verified && generated, Some(degree_bound));
        let gb_i_tilde = self.homogenize_basis(&gb_i)?;
        let mut witness = None;
        for g in gb_i_tilde.elements() {
            if !remainder(g, gb_s_tilde.elements(), &self.ord_ext)?.is_zero() {
                witness = Some(g.clone());
                break;
            }
        }
        let mut s_tilde_in_i_tilde = true;
        for g in gb_s_tilde.elements() {
            if !remainder(g, gb_i_tilde.elements(), &self.ord_ext)?.is_zero() {
                s_tilde_in_i_tilde = false;
            }
        }
        Ok(NoncentralPipeline {
            s_tilde,
            gb_s_tilde,
            gb_i,
            gb_i_tilde,
            dropped,
            s_tilde_in_i_tilde,
            i_tilde_in_s_tilde: witness.is_none(),
            witness,
            degree_bound,
        })
    }
}
