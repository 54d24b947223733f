//! Degree-bounded completion in free algebras via overlap ambiguities.
//!
//! Free-algebra Gröbner bases can be infinite, so completion always runs up
//! to a caller-supplied weighted degree bound and reports whether anything
//! was left beyond it.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::Arc;

use crate::basis::{canonicalize, GroebnerBasis};
use crate::error::{Error, Result};
use crate::gb_comm::{Certificate, SCheck};
use crate::monomial::{Term, Word};
use crate::order::OrderingSpec;
use crate::poly::FreePoly;
use crate::reduce::Divisors;
use crate::ring::{check_same, RingContext, RingKind};

/// An ambiguity `word = first_left * u * first_right = second_left * v * second_right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub word: Word,
    pub first_left: Word,
    pub first_right: Word,
    pub second_left: Word,
    pub second_right: Word,
}

/// Suffix/prefix overlaps of `u` and `v` in both orders, and occurrences of
/// one word inside the other. Placements where the words coincide entirely
/// are excluded.
pub fn overlaps(u: &Word, v: &Word) -> Vec<Overlap> {
    let mut out: Vec<Overlap> = Vec::new();
    let mut push = |o: Overlap| {
        if !out.contains(&o) {
            out.push(o);
        }
    };
    let (a, b) = (u.as_slice(), v.as_slice());
    if a.is_empty() || b.is_empty() {
        return out;
    }
    let min = a.len().min(b.len());
    // suffix of u == prefix of v
    for k in 1..min {
        if a[a.len() - k..] == b[..k] {
            push(Overlap {
                word: u.mul(&v.slice(k..b.len())),
                first_left: Word::default(),
                first_right: v.slice(k..b.len()),
                second_left: u.slice(0..a.len() - k),
                second_right: Word::default(),
            });
        }
    }
    // suffix of v == prefix of u; for u == v this mirrors the loop above
    for k in (1..min).filter(|_| u != v) {
        if b[b.len() - k..] == a[..k] {
            push(Overlap {
                word: v.mul(&u.slice(k..a.len())),
                first_left: v.slice(0..b.len() - k),
                first_right: Word::default(),
                second_left: Word::default(),
                second_right: u.slice(k..a.len()),
            });
        }
    }
    if u != v {
        for at in v.occurrences_of(u) {
            push(Overlap {
                word: v.clone(),
                first_left: v.slice(0..at),
                first_right: v.slice(at + a.len()..b.len()),
                second_left: Word::default(),
                second_right: Word::default(),
            });
        }
        for at in u.occurrences_of(v) {
            push(Overlap {
                word: u.clone(),
                first_left: Word::default(),
                first_right: Word::default(),
                second_left: u.slice(0..at),
                second_right: u.slice(at + b.len()..a.len()),
            });
        }
    }
    out
}

/// `first_left * f * first_right / LC(f) - second_left * g * second_right / LC(g)`.
pub fn s_element(f: &FreePoly, g: &FreePoly, overlap: &Overlap, ord: &OrderingSpec) -> Result<FreePoly> {
    check_same(f.ctx(), g.ctx())?;
    let lf = f.leading(ord)?;
    let lg = g.leading(ord)?;
    let a = f.mul_term(&overlap.first_left, &lf.coeff.inverse(), &overlap.first_right);
    let b = g.mul_term(&overlap.second_left, &lg.coeff.inverse(), &overlap.second_right);
    Ok(&a - &b)
}

fn check_inputs(ctx: &Arc<RingContext>, polys: &[FreePoly], ord: &OrderingSpec) -> Result<()> {
    if ctx.kind() != RingKind::Free {
        return Err(Error::Context("overlap completion needs a free algebra".into()));
    }
    ord.check_ring(ctx)?;
    for p in polys {
        check_same(ctx, p.ctx())?;
    }
    Ok(())
}

enum Item {
    Poly(FreePoly),
    Pair { first: usize, second: usize, overlap: Overlap },
}

struct Completion<'a> {
    ord: &'a OrderingSpec,
    weights: Vec<u32>,
    bound: u64,
    elems: Vec<Option<FreePoly>>,
    lms: Vec<Word>,
    items: Vec<Item>,
    queue: BinaryHeap<Reverse<(u64, usize)>>,
    beyond_bound: Vec<(usize, usize)>,
    unit: bool,
}

impl Completion<'_> {
    fn alive(&self) -> Vec<FreePoly> {
        self.elems.iter().flatten().cloned().collect()
    }

    fn schedule(&mut self, degree: u64, item: Item) {
        let idx = self.items.len();
        self.items.push(item);
        self.queue.push(Reverse((degree, idx)));
    }

    fn insert(&mut self, h: &FreePoly) -> Result<()> {
        let alive = self.alive();
        let r = Divisors::new(&alive, self.ord)?.reduce(h, self.ord, false).remainder;
        if r.is_zero() {
            return Ok(());
        }
        let r = r.monic(self.ord)?;
        let lm = r.lm(self.ord).expect("nonzero");
        if lm.is_one() {
            self.unit = true;
            return Ok(());
        }
        // Elements whose leading word contains the new one are re-reduced later.
        for k in 0..self.elems.len() {
            if self.elems[k].is_some() && lm.divides(&self.lms[k]) {
                let old = self.elems[k].take().unwrap();
                self.schedule(self.lms[k].degree(&self.weights), Item::Poly(old));
            }
        }
        let idx = self.elems.len();
        self.elems.push(Some(r));
        self.lms.push(lm.clone());
        for k in 0..=idx {
            if self.elems[k].is_none() {
                continue;
            }
            for overlap in overlaps(&self.lms[k], &lm) {
                let degree = overlap.word.degree(&self.weights);
                if degree <= self.bound {
                    self.schedule(degree, Item::Pair { first: k, second: idx, overlap });
                } else {
                    self.beyond_bound.push((k, idx));
                }
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        while !self.unit {
            let Some(Reverse((_, idx))) = self.queue.pop() else { break };
            let h = match &self.items[idx] {
                Item::Poly(p) => p.clone(),
                Item::Pair { first, second, overlap } => {
                    let (Some(f), Some(g)) = (&self.elems[*first], &self.elems[*second]) else {
                        continue;
                    };
                    s_element(f, g, overlap, self.ord)?
                }
            };
            self.insert(&h)?;
        }
        Ok(())
    }
}

/// Inter-reduced basis whose S-elements up to weighted degree `degree_bound`
/// all reduce to zero. `complete` is set when no S-element between surviving
/// elements lies beyond the bound.
pub fn complete_nc(
    ctx: &Arc<RingContext>,
    generators: &[FreePoly],
    ord: &OrderingSpec,
    degree_bound: u64,
) -> Result<GroebnerBasis<Word>> {
    check_inputs(ctx, generators, ord)?;
    let max_degree = generators.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    if degree_bound < max_degree {
        return Err(Error::Argument(format!(
            "degree bound {degree_bound} is below the generator degree {max_degree}"
        )));
    }
    let mut run = Completion {
        ord,
        weights: ctx.weights().to_vec(),
        bound: degree_bound,
        elems: Vec::new(),
        lms: Vec::new(),
        items: Vec::new(),
        queue: BinaryHeap::new(),
        beyond_bound: Vec::new(),
        unit: false,
    };
    for g in generators.iter().filter(|g| !g.is_zero()) {
        run.schedule(g.degree().unwrap(), Item::Poly(g.clone()));
    }
    run.run()?;
    if run.unit {
        return GroebnerBasis::from_parts(ctx, ord, vec![FreePoly::one(ctx)], true, Some(degree_bound));
    }
    let complete = run
        .beyond_bound
        .iter()
        .all(|&(a, b)| run.elems[a].is_none() || run.elems[b].is_none());
    let elements = canonicalize(ctx, &run.alive(), ord)?;
    GroebnerBasis::from_parts(ctx, ord, elements, complete, Some(degree_bound))
}

/// Checks every overlap and inclusion S-element of `polys` up to
/// `degree_bound` (all of them when `None`; the set is finite).
pub fn verify_groebner_nc(polys: &[FreePoly], ord: &OrderingSpec, degree_bound: Option<u64>) -> Result<Certificate<Word>> {
    let Some(first) = polys.first() else {
        return Ok(Certificate { checks: Vec::new(), skipped_above_bound: 0 });
    };
    let ctx = first.ctx().clone();
    check_inputs(&ctx, polys, ord)?;
    let divisors = Divisors::new(polys, ord)?;
    let lms = divisors.lms().to_vec();
    let weights = ctx.weights();
    let mut checks = Vec::new();
    let mut skipped = 0;
    for i in 0..polys.len() {
        for j in i..polys.len() {
            let mut ambiguities = overlaps(&lms[i], &lms[j]);
            if i != j && lms[i] == lms[j] {
                ambiguities.push(Overlap {
                    word: lms[i].clone(),
                    first_left: Word::default(),
                    first_right: Word::default(),
                    second_left: Word::default(),
                    second_right: Word::default(),
                });
            }
            for overlap in ambiguities {
                if degree_bound.is_some_and(|d| overlap.word.degree(weights) > d) {
                    skipped += 1;
                    continue;
                }
                let s = s_element(&polys[i], &polys[j], &overlap, ord)?;
                let trace = divisors.reduce(&s, ord, true);
                checks.push(SCheck { first: i, second: j, s_element: s, trace });
            }
        }
    }
    Ok(Certificate { checks, skipped_above_bound: skipped })
}
