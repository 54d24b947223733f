//! Commutative monomials (exponent vectors) and free-algebra words.

use std::fmt::Debug;
use std::hash::Hash;

use crate::order::OrderingSpec;
use crate::ring::{RingContext, RingKind};

/// `target = left * divisor * right`. For commutative monomials `right` is
/// always the identity and `left` is the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<M> {
    pub left: M,
    pub right: M,
}

/// Common interface of the two standard monomial bases.
pub trait Term: Clone + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    const KIND: RingKind;

    fn one(nvars: usize) -> Self;

    fn variable(nvars: usize, index: usize) -> Self;

    fn is_one(&self) -> bool;

    fn mul(&self, other: &Self) -> Self;

    /// Weighted degree.
    fn degree(&self, weights: &[u32]) -> u64;

    /// How often variable `var` occurs.
    fn occurrences(&self, var: usize) -> u32;

    /// Leftmost factorization of `self` through `divisor`, if any.
    fn factor_through(&self, divisor: &Self) -> Option<Factorization<Self>>;

    /// Key whose lexicographic order is the monomial order `ord`.
    fn sort_key(&self, ord: &OrderingSpec) -> Vec<u64>;

    /// `self` times the variable `var` on the right.
    fn times_var(&self, var: usize) -> Self;

    /// Indices of the variables, one entry per occurrence.
    fn letters(&self) -> Vec<usize>;

    fn render(&self, names: &[String]) -> String;

    /// Rendering used in printed polynomials; a commutative monomial puts the
    /// ring's homogenizing variable first.
    fn render_in(&self, ctx: &RingContext) -> String {
        self.render(ctx.vars())
    }

    fn divides(&self, other: &Self) -> bool {
        other.factor_through(self).is_some()
    }
}

/// Monomial of `K[x_1, ..., x_n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new)
    }
}

impl Term for Monomial {
    const KIND: RingKind = RingKind::Commutative;

    fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    fn variable(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial::new(exps)
    }

    fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    fn degree(&self, weights: &[u32]) -> u64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    fn occurrences(&self, var: usize) -> u32 {
        self.exps[var]
    }

    fn factor_through(&self, divisor: &Self) -> Option<Factorization<Self>> {
        let left = self.quotient(divisor)?;
        let right = Monomial::one(self.exps.len());
        Some(Factorization { left, right })
    }

    fn sort_key(&self, ord: &OrderingSpec) -> Vec<u64> {
        ord.commutative_key(&self.exps)
    }

    fn times_var(&self, var: usize) -> Self {
        let mut exps = self.exps.clone();
        exps[var] += 1;
        Monomial::new(exps)
    }

    fn letters(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| power(&names[i], e))
            .collect::<Vec<_>>()
            .join("*")
    }

    fn render_in(&self, ctx: &RingContext) -> String {
        let Some(h) = ctx.homog_var() else { return self.render(ctx.vars()) };
        if self.exps[h] == 0 || self.is_one() {
            return self.render(ctx.vars());
        }
        let mut rest = self.clone();
        rest.exps[h] = 0;
        let head = power(&ctx.vars()[h], self.exps[h]);
        if rest.is_one() {
            head
        } else {
            format!("{head}*{}", rest.render(ctx.vars()))
        }
    }
}

/// Word of the free algebra `K<X_1, ..., X_n>`; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word { letters }
    }

    pub fn from_indices(letters: &[usize]) -> Self {
        Word::new(letters.iter().map(|&l| l as u32).collect())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word::new(self.letters[range].to_vec())
    }

    /// All positions at which `pattern` occurs, leftmost first.
    pub fn occurrences_of(&self, pattern: &Word) -> impl Iterator<Item = usize> + '_ {
        let n = pattern.len();
        let pat = pattern.letters.clone();
        (0..=self.letters.len().saturating_sub(n))
            .filter(move |&i| self.letters.len() >= n && self.letters[i..i + n] == pat[..])
    }
}

impl Term for Word {
    const KIND: RingKind = RingKind::Free;

    fn one(_nvars: usize) -> Self {
        Word::default()
    }

    fn variable(_nvars: usize, index: usize) -> Self {
        Word::new(vec![index as u32])
    }

    fn is_one(&self) -> bool {
        self.letters.is_empty()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word::new(letters)
    }

    fn degree(&self, weights: &[u32]) -> u64 {
        self.letters.iter().map(|&l| weights[l as usize] as u64).sum()
    }

    fn occurrences(&self, var: usize) -> u32 {
        self.letters.iter().filter(|&&l| l as usize == var).count() as u32
    }

    fn factor_through(&self, divisor: &Self) -> Option<Factorization<Self>> {
        let at = self.occurrences_of(divisor).next()?;
        Some(Factorization {
            left: self.slice(0..at),
            right: self.slice(at + divisor.len()..self.len()),
        })
    }

    fn sort_key(&self, ord: &OrderingSpec) -> Vec<u64> {
        ord.word_key(&self.letters)
    }

    fn times_var(&self, var: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.push(var as u32);
        Word::new(letters)
    }

    fn letters(&self) -> Vec<usize> {
        self.letters.iter().map(|&l| l as usize).collect()
    }

    fn render(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == self.letters[i] {
                j += 1;
            }
            parts.push(power(&names[self.letters[i] as usize], (j - i) as u32));
            i = j;
        }
        parts.join("*")
    }
}

fn power(name: &str, e: u32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

/// Divisibility witness of `v` by `u`: `Some((left, right))` with `v = left * u * right`.
pub fn divide_monomial<M: Term>(u: &M, v: &M) -> Option<Factorization<M>> {
    v.factor_through(u)
}
