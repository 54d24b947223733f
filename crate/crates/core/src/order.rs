//! Weighted graded lexicographic orders and their extensions by a
//! homogenizing variable.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Term;
use crate::ring::{RingContext, RingKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extension {
    /// Plain weighted graded lex.
    None,
    /// Central `t`: compare the `t`-free part under graded lex first, the
    /// power of `t` last.
    CentralT(usize),
    /// Noncentral `T`: graded lex with `T` the smallest letter.
    NoncentralT(usize),
}

/// Weighted degree first, ties broken lexicographically with the highest
/// precedence variable compared first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderingSpec {
    kind: RingKind,
    weights: Vec<u32>,
    /// `rank[v]` is the position of `v` in the ascending precedence list.
    rank: Vec<u32>,
    /// Variables from highest to lowest precedence.
    descending: Vec<usize>,
    extension: Extension,
}

impl OrderingSpec {
    /// Graded lex with `ascending[0] < ascending[1] < ...`.
    pub fn deglex(ctx: &RingContext, ascending: &[usize]) -> Result<Self> {
        let n = ctx.nvars();
        let mut seen = vec![false; n];
        for &v in ascending {
            if v >= n || seen[v] {
                return Err(Error::Argument("precedence must list every variable exactly once".into()));
            }
            seen[v] = true;
        }
        if ascending.len() != n {
            return Err(Error::Argument("precedence must list every variable exactly once".into()));
        }
        let mut rank = vec![0; n];
        for (r, &v) in ascending.iter().enumerate() {
            rank[v] = r as u32;
        }
        Ok(OrderingSpec {
            kind: ctx.kind(),
            weights: ctx.weights().to_vec(),
            rank,
            descending: ascending.iter().rev().copied().collect(),
            extension: Extension::None,
        })
    }

    /// Graded lex with the declaration order as ascending precedence.
    pub fn deglex_declared(ctx: &RingContext) -> Self {
        let asc = (0..ctx.nvars()).collect::<Vec<_>>();
        Self::deglex(ctx, &asc).expect("declared order is a permutation")
    }

    /// Extension by a central variable `t` (commutative rings only).
    pub fn central_t(mut self, t: usize) -> Result<Self> {
        if self.kind != RingKind::Commutative {
            return Err(Error::Argument("central extension needs a commutative ring".into()));
        }
        self.check_unit_weight(t)?;
        self.extension = Extension::CentralT(t);
        Ok(self)
    }

    /// Extension by a noncentral letter `T` (free algebras only). `T` becomes
    /// the smallest letter; the others keep their relative precedence.
    pub fn noncentral_t(mut self, t: usize) -> Result<Self> {
        if self.kind != RingKind::Free {
            return Err(Error::Argument("noncentral extension needs a free algebra".into()));
        }
        self.check_unit_weight(t)?;
        let mut asc = self.ascending();
        asc.retain(|&v| v != t);
        asc.insert(0, t);
        for (r, &v) in asc.iter().enumerate() {
            self.rank[v] = r as u32;
        }
        self.descending = asc.into_iter().rev().collect();
        self.extension = Extension::NoncentralT(t);
        Ok(self)
    }

    fn check_unit_weight(&self, t: usize) -> Result<()> {
        match self.weights.get(t) {
            Some(1) => Ok(()),
            Some(w) => Err(Error::Argument(format!("homogenizing variable must have weight 1, not {w}"))),
            None => Err(Error::Argument(format!("no variable with index {t}"))),
        }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn extension(&self) -> Extension {
        self.extension
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Variables in ascending precedence.
    pub fn ascending(&self) -> Vec<usize> {
        self.descending.iter().rev().copied().collect()
    }

    pub fn check_ring(&self, ctx: &RingContext) -> Result<()> {
        if ctx.kind() != self.kind || ctx.weights() != self.weights.as_slice() {
            return Err(Error::Context(format!("ordering does not belong to {ctx}")));
        }
        Ok(())
    }

    /// Total order on monomials of one ring.
    pub fn compare<M: Term>(&self, a: &M, b: &M) -> Result<Ordering> {
        if M::KIND != self.kind {
            return Err(Error::Context("monomial kind does not match ordering".into()));
        }
        Ok(self.cmp(a, b))
    }

    pub(crate) fn cmp<M: Term>(&self, a: &M, b: &M) -> Ordering {
        a.sort_key(self).cmp(&b.sort_key(self))
    }

    pub(crate) fn commutative_key(&self, exps: &[u32]) -> Vec<u64> {
        debug_assert_eq!(exps.len(), self.weights.len());
        let mut key = Vec::with_capacity(exps.len() + 2);
        match self.extension {
            Extension::CentralT(t) => {
                let deg: u64 = exps
                    .iter()
                    .zip(&self.weights)
                    .enumerate()
                    .filter(|(i, _)| *i != t)
                    .map(|(_, (&e, &w))| e as u64 * w as u64)
                    .sum();
                key.push(deg);
                key.extend(self.descending.iter().filter(|&&v| v != t).map(|&v| exps[v] as u64));
                key.push(exps[t] as u64);
            }
            _ => {
                key.push(exps.iter().zip(&self.weights).map(|(&e, &w)| e as u64 * w as u64).sum());
                key.extend(self.descending.iter().map(|&v| exps[v] as u64));
            }
        }
        key
    }

    pub(crate) fn word_key(&self, letters: &[u32]) -> Vec<u64> {
        let mut key = Vec::with_capacity(letters.len() + 1);
        key.push(letters.iter().map(|&l| self.weights[l as usize] as u64).sum());
        // Words of equal weight never stand in a proper-prefix relation, so
        // comparing the rank sequences lexicographically is graded lex.
        key.extend(letters.iter().map(|&l| self.rank[l as usize] as u64));
        key
    }

    pub fn describe(&self, ctx: &RingContext) -> String {
        let names = ctx.vars();
        let asc = self.ascending();
        let chain = asc.iter().map(|&v| names[v].as_str()).collect::<Vec<_>>().join(" < ");
        match self.extension {
            Extension::None => format!("deglex {chain}"),
            Extension::CentralT(t) => {
                let chain = asc
                    .iter()
                    .filter(|&&v| v != t)
                    .map(|&v| names[v].as_str())
                    .collect::<Vec<_>>()
                    .join(" < ");
                format!("deglex {chain}, central {} compared last", names[t])
            }
            Extension::NoncentralT(_) => format!("deglex {chain}"),
        }
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extension::None => write!(f, "graded"),
            Extension::CentralT(t) => write!(f, "central-t({t})"),
            Extension::NoncentralT(t) => write!(f, "noncentral-T({t})"),
        }
    }
}
