//! One function per acceptance criterion (and the invariant suites behind
//! them). Every check panics on the first violation.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;

use dhgb::{
    buchberger, complete_nc, lh_set, normal_form, normal_monomials, presentation_report_central,
    presentation_report_noncentral, quotient_dims, reduced, verify_groebner, verify_groebner_nc, CentralDh, CommPoly,
    FreePoly, GroebnerBasis, Monomial, NoncentralDh, Polynomial, Term, Word,
};
use dhgb::reduce::remainder;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::*;

pub fn central_example(dh: &CentralDh) -> Vec<CommPoly> {
    let b = dh.base();
    vec![
        comm(b, &[(q(1, 1), &[0, 3]), (q(-1, 1), &[1, 0]), (q(-1, 1), &[0, 1])]),
        comm(b, &[(q(1, 1), &[0, 2]), (q(1, 1), &[0, 0])]),
    ]
}

pub fn noncentral_example(dh: &NoncentralDh) -> Vec<FreePoly> {
    let b = dh.base();
    vec![
        free(b, &[(q(1, 1), "YYY"), (q(-1, 1), "XY"), (q(-1, 1), "X"), (q(-1, 1), "Y")]),
        free(b, &[(q(1, 1), "YY"), (q(-1, 1), "X"), (q(3, 1), "")]),
    ]
}

fn same_set<M: Term>(a: &[Polynomial<M>], b: &[Polynomial<M>]) -> bool {
    a.len() == b.len() && a.iter().all(|x| b.contains(x))
}

fn is_zero_mod<M: Term>(f: &Polynomial<M>, basis: &GroebnerBasis<M>) -> bool {
    remainder(f, basis.elements(), basis.ord()).unwrap().is_zero()
}

// ---------------------------------------------------------------------------
// worked pipelines

pub fn commutative_pipeline() {
    let dh = central(false);
    let (b, e) = (dh.base(), dh.ext());
    let s = central_example(&dh);
    let run = dh.pipeline(&s).unwrap();

    let gb_i = vec![
        comm(b, &[(q(1, 1), &[0, 1]), (q(1, 2), &[1, 0])]),
        comm(b, &[(q(1, 1), &[2, 0]), (q(4, 1), &[0, 0])]),
    ];
    assert_eq!(run.gb_i.elements(), gb_i.as_slice());
    assert_eq!(run.gb_i.display().to_string(), "{y + 1/2 x, x^2 + 4}");

    let gb_s_star = vec![
        comm(e, &[(q(1, 1), &[0, 2, 0]), (q(1, 1), &[0, 0, 2])]),
        comm(e, &[(q(1, 1), &[0, 1, 2]), (q(1, 2), &[1, 0, 2])]),
        comm(e, &[(q(1, 1), &[2, 0, 2]), (q(4, 1), &[0, 0, 4])]),
    ];
    assert!(same_set(run.gb_s_star.elements(), &gb_s_star));
    let gb_i_star = vec![
        comm(e, &[(q(1, 1), &[0, 1, 0]), (q(1, 2), &[1, 0, 0])]),
        comm(e, &[(q(1, 1), &[2, 0, 0]), (q(4, 1), &[0, 0, 2])]),
    ];
    assert!(same_set(run.gb_i_star.elements(), &gb_i_star));

    // <S*> is strictly inside <I*>: y + x/2 is not in <S*>
    assert!(run.s_star_in_i_star && !run.i_star_in_s_star);
    assert_eq!(run.witness.as_ref(), Some(&gb_i_star[0]));
    assert!(!is_zero_mod(&gb_i_star[0], &run.gb_s_star));
    let s_star = s.iter().map(|f| dh.homogenize(f).unwrap().into_poly()).collect::<Vec<_>>();
    assert_eq!(graded_quotient_dim(e, &s_star, 1), 3, "<S*> has no element of degree 1");
    assert!(!in_graded_ideal(e, &s_star, &gb_i_star[0]));

    // Macaulay matrices up to degree 4 contain the reduced bases as rows
    let rows = macaulay_rref(b, &s, dh.ord_base(), 4);
    for g in &gb_i {
        assert!(rows.contains(g), "{} missing from the Macaulay rows", g.display(dh.ord_base()));
    }
    for r in &rows {
        let lm = r.lm(dh.ord_base()).unwrap();
        assert!(gb_i.iter().any(|g| g.lm(dh.ord_base()).unwrap().divides(&lm)));
    }
    let rows = macaulay_rref(e, &s_star, dh.ord_ext(), 4);
    for g in &gb_s_star {
        assert!(rows.contains(g), "{} missing from the Macaulay rows", g.display(dh.ord_ext()));
    }
    for r in &rows {
        let lm = r.lm(dh.ord_ext()).unwrap();
        assert!(gb_s_star.iter().any(|g| g.lm(dh.ord_ext()).unwrap().divides(&lm)));
    }
}

pub fn noncommutative_pipeline() {
    let dh = noncentral();
    let (b, e) = (dh.base(), dh.ext());
    let s = noncentral_example(&dh);
    let run = dh.pipeline(&s, 6).unwrap();

    let g1 = free(b, &[(q(1, 1), "Y"), (q(1, 4), "X")]);
    let g2 = free(b, &[(q(1, 1), "XX"), (q(-16, 1), "X"), (q(48, 1), "")]);
    assert_eq!(run.gb_i.elements(), &[g1.clone(), g2.clone()]);
    assert!(run.gb_i.flags().complete);

    let mut gb_i_tilde = vec![
        free(e, &[(q(1, 1), "Y"), (q(1, 4), "X")]),
        free(e, &[(q(1, 1), "XX"), (q(-16, 1), "TX"), (q(48, 1), "TT")]),
    ];
    gb_i_tilde.extend(dh.commutators().iter().cloned());
    assert!(same_set(run.gb_i_tilde.elements(), &gb_i_tilde));
    assert_eq!(run.dropped, 2);
    assert!(run.s_tilde_in_i_tilde && !run.i_tilde_in_s_tilde);

    // substitution oracle: a = f2*Y - f1 = X + 4Y, so X = -4Y mod I
    let (f1, f2) = (&s[0], &s[1]);
    let y = FreePoly::variable(b, 1);
    let a = &(f2 * &y) - f1;
    assert_eq!(a, free(b, &[(q(1, 1), "X"), (q(4, 1), "Y")]));
    assert_eq!(a.scale(&q(1, 4)), g1);
    // Y^2 + 4Y + 3 = f2 + a, and X^2 - 16X + 48 = a(a - 4Y - 16) - 4Ya + 16(f2 + a)
    let sixteen = FreePoly::constant(b, q(16, 1));
    let four_y = y.scale(&q(4, 1));
    let combo = &(&(&a * &(&(&a - &four_y) - &sixteen)) - &(&four_y * &a)) + &(&sixteen * &(f2 + &a));
    assert_eq!(combo, g2);
    // conversely S reduces to zero against gb(I), replayably
    for f in &s {
        let trace = normal_form(f, run.gb_i.elements(), dh.ord_base()).unwrap();
        assert!(trace.remainder.is_zero());
        assert_eq!(trace.replay(run.gb_i.elements()), *f);
    }

    // a degree-2 element of <I~> outside <S~>
    let w = free(e, &[(q(1, 1), "XY"), (q(-1, 1), "YX"), (q(1, 1), "TX"), (q(4, 1), "TY")]);
    assert!(is_zero_mod(&w, &run.gb_i_tilde));
    assert!(!is_zero_mod(&w, &run.gb_s_tilde));
    assert!(!in_graded_ideal(e, &run.s_tilde, &w));
    assert!(!in_graded_ideal(e, &run.s_tilde, &gb_i_tilde[0]));
}

// ---------------------------------------------------------------------------
// transfer between R and its homogenization

pub fn transfer_central(cases: usize, seed: u64) {
    let dh = central(true);
    let (b, e) = (dh.base(), dh.ext());
    let mut r = rng(seed);
    let vars = [0, 1, 2];
    for case in 0..cases {
        let k = r.gen_range(1..=3);
        let s: Vec<CommPoly> = (0..k).map(|_| random_poly(&mut r, b, &vars, 4, 4)).collect();
        let star = |set: &[CommPoly]| set.iter().map(|f| dh.homogenize(f).unwrap().into_poly()).collect::<Vec<_>>();

        let g = buchberger(b, &s, dh.ord_base()).unwrap();
        assert!(verify_groebner(g.elements(), dh.ord_base()).unwrap().is_groebner());
        let g_star = star(g.elements());
        assert!(verify_groebner(&g_star, dh.ord_ext()).unwrap().is_groebner(), "case {case}");
        let g_star_basis = dh.homogenize_basis(&g).unwrap();

        // both directions, on sets that need not be bases
        let mut mixed = s.clone();
        if let Some(extra) = g.elements().choose(&mut r) {
            mixed.push(extra.clone());
        }
        for set in [&s, &mixed] {
            let before = verify_groebner(set, dh.ord_base()).unwrap().is_groebner();
            let after = verify_groebner(&star(set), dh.ord_ext()).unwrap().is_groebner();
            assert_eq!(before, after, "case {case}");
        }

        // homogenized elements of I lie in <G*>
        for _ in 0..3 {
            let mut f = CommPoly::zero(b);
            for si in &s {
                let m = random_poly::<Monomial>(&mut r, b, &vars, 2, 2);
                f = &f + &(&m * si);
            }
            if !f.is_zero() {
                assert!(is_zero_mod(&dh.homogenize(&f).unwrap().into_poly(), &g_star_basis));
            }
        }

        // dehomogenizing a homogeneous basis of <S*>
        let j = buchberger(e, &star(&s), dh.ord_ext()).unwrap();
        let d = dh.dehomogenize_basis(j.elements()).unwrap();
        assert!(verify_groebner(d.elements(), dh.ord_base()).unwrap().is_groebner(), "case {case}");
        assert!(s.iter().all(|f| is_zero_mod(f, &d)));
        assert!(d.elements().iter().all(|f| is_zero_mod(f, &g)));
    }
}

/// Returns how many of the dehomogenization checks ran on complete bases.
pub fn transfer_noncentral(cases: usize, seed: u64) -> usize {
    let dh = noncentral();
    let (b, e) = (dh.base(), dh.ext());
    let mut r = rng(seed);
    let bound = 5;
    let mut complete = 0;
    for case in 0..cases {
        let k = r.gen_range(1..=2);
        let s: Vec<FreePoly> = (0..k).map(|_| random_poly(&mut r, b, &[0, 1], 3, 3)).collect();
        let tilde = |set: &[FreePoly]| {
            let mut out = set.iter().map(|f| dh.homogenize(f).unwrap().into_poly()).collect::<Vec<_>>();
            out.extend(dh.commutators().iter().cloned());
            out
        };

        let g = complete_nc(b, &s, dh.ord_base(), bound).unwrap();
        for set in [&s, &g.elements().to_vec()] {
            let before = verify_groebner_nc(set, dh.ord_base(), None).unwrap().is_groebner();
            let after = verify_groebner_nc(&tilde(set), dh.ord_ext(), None).unwrap().is_groebner();
            assert_eq!(before, after, "case {case}");
        }
        if g.flags().complete {
            assert!(verify_groebner_nc(g.elements(), dh.ord_base(), None).unwrap().is_groebner());
            let h = dh.homogenize_basis(&g).unwrap();
            assert!(verify_groebner_nc(h.elements(), dh.ord_ext(), None).unwrap().is_groebner());
        }

        let j = complete_nc(e, &tilde(&s), dh.ord_ext(), bound).unwrap();
        if j.flags().complete {
            complete += 1;
            let (d, _) = dh.dehomogenize_basis(&j).unwrap();
            assert!(verify_groebner_nc(d.elements(), dh.ord_base(), None).unwrap().is_groebner(), "case {case}");
            assert!(s.iter().all(|f| is_zero_mod(f, &d)));
        }
    }
    complete
}

// ---------------------------------------------------------------------------
// homogenization laws

fn t_power_c(dh: &CentralDh, r: u32) -> CommPoly {
    let mut e = vec![0; dh.ext().nvars()];
    e[dh.t()] = r;
    CommPoly::term(dh.ext(), Monomial::new(e), dh.ext().field().one())
}

fn t_power_nc(dh: &NoncentralDh, r: usize) -> FreePoly {
    FreePoly::term(dh.ext(), Word::from_indices(&vec![dh.t(); r]), dh.ext().field().one())
}

fn monomial_poly<M: Term>(ctx: &std::sync::Arc<dhgb::RingContext>, m: M) -> Polynomial<M> {
    Polynomial::term(ctx, m, ctx.field().one())
}

/// Dehomogenization is a ring map, homogenization a degree-preserving
/// section of it, and `t^(p-q) (F_*)* = F` for homogeneous `F`.
pub fn central_element_laws(cases: usize, seed: u64) {
    let dh = central(false);
    let mut r = rng(seed);
    for _ in 0..cases {
        let f: CommPoly = random_poly(&mut r, dh.ext(), &[0, 1, 2], 4, 4);
        let g: CommPoly = random_poly(&mut r, dh.ext(), &[0, 1, 2], 4, 4);
        let (fs, gs) = (dh.dehomogenize(&f).unwrap(), dh.dehomogenize(&g).unwrap());
        assert_eq!(dh.dehomogenize(&(&f + &g)).unwrap(), &fs + &gs);
        assert_eq!(dh.dehomogenize(&(&f * &g)).unwrap(), &fs * &gs);

        let f: CommPoly = random_poly(&mut r, dh.base(), &[0, 1], 5, 4);
        let h = dh.homogenize(&f).unwrap();
        assert_eq!(Some(h.degree()), f.degree());
        assert_eq!(h.poly().is_homogeneous(), dhgb::Homogeneity::Degree(h.degree()));
        assert_eq!(dh.dehomogenize(h.poly()).unwrap(), f);

        let p = r.gen_range(1..=5u64);
        let big: CommPoly = random_homogeneous(&mut r, dh.ext(), &[0, 1, 2], 4, p);
        let back = dh.homogenize(&dh.dehomogenize(&big).unwrap()).unwrap();
        assert!(back.degree() <= p);
        assert_eq!(&t_power_c(&dh, (p - back.degree()) as u32) * back.poly(), big);
    }
}

/// `LM(f*) = LM(f)` and `LM(F_*) = LM(F)_*`.
pub fn central_leading_monomial_laws(cases: usize, seed: u64) {
    let dh = central(false);
    let mut r = rng(seed);
    for _ in 0..cases {
        let f: CommPoly = random_poly(&mut r, dh.base(), &[0, 1], 5, 4);
        let h = dh.homogenize(&f).unwrap();
        let lm = dh.embed(&monomial_poly(dh.base(), f.lm(dh.ord_base()).unwrap())).unwrap();
        assert_eq!(h.poly().lm(dh.ord_ext()), lm.lm(dh.ord_ext()));

        let p = r.gen_range(0..=4u64);
        let big: CommPoly = random_homogeneous(&mut r, dh.ext(), &[0, 1, 2], 4, p);
        let lm_star = dh.dehomogenize(&monomial_poly(dh.ext(), big.lm(dh.ord_ext()).unwrap())).unwrap();
        assert_eq!(dh.dehomogenize(&big).unwrap().lm(dh.ord_base()), lm_star.lm(dh.ord_base()));
    }
}

/// Letter erasure is a ring map, homogenization a section of it, and the
/// T-left normal form `H` of `F` satisfies `F - H` in the commutator ideal
/// and `T^r (H_~)~ = H`.
pub fn noncentral_element_laws(cases: usize, seed: u64) {
    let dh = noncentral();
    let mut r = rng(seed);
    for _ in 0..cases {
        let f: FreePoly = random_poly(&mut r, dh.ext(), &[0, 1, 2], 4, 3);
        let g: FreePoly = random_poly(&mut r, dh.ext(), &[0, 1, 2], 4, 3);
        let (fs, gs) = (dh.dehomogenize(&f).unwrap(), dh.dehomogenize(&g).unwrap());
        assert_eq!(dh.dehomogenize(&(&f + &g)).unwrap(), &fs + &gs);
        assert_eq!(dh.dehomogenize(&(&f * &g)).unwrap(), &fs * &gs);

        let f: FreePoly = random_poly(&mut r, dh.base(), &[0, 1], 5, 4);
        let h = dh.homogenize(&f).unwrap();
        assert_eq!(Some(h.degree()), f.degree());
        assert_eq!(dh.dehomogenize(h.poly()).unwrap(), f);

        let p = r.gen_range(1..=4u64);
        let big: FreePoly = random_homogeneous(&mut r, dh.ext(), &[0, 1, 2], 4, p);
        let nf = dh.normalize_mod_commutators(&big).unwrap();
        let h = &nf.form;
        assert_eq!(&big - h, nf.trace.combination(dh.commutators()));
        assert!(h.monomials().all(|m| is_t_left(m, dh.t())), "not T-left");
        if !h.is_zero() {
            let back = dh.homogenize(&dh.dehomogenize(h).unwrap()).unwrap();
            assert_eq!(&t_power_nc(&dh, (p - back.degree()) as usize) * back.poly(), *h);
        }
    }
}

pub fn is_t_left(m: &Word, t: usize) -> bool {
    let letters = m.as_slice();
    let r = letters.iter().take_while(|&&l| l as usize == t).count();
    letters[r..].iter().all(|&l| l as usize != t)
}

/// `LM(f~) = LM(f)`, and `LM(F_~) = LM(F)_~` whenever no `X_i T` divides `LM(F)`.
pub fn noncentral_leading_monomial_laws(cases: usize, seed: u64) {
    let dh = noncentral();
    let mut r = rng(seed);
    let blockers = dh.commutators().iter().map(|c| c.lm(dh.ord_ext()).unwrap()).collect::<Vec<_>>();
    for _ in 0..cases {
        let f: FreePoly = random_poly(&mut r, dh.base(), &[0, 1], 5, 4);
        let h = dh.homogenize(&f).unwrap();
        let lm = dh.embed(&monomial_poly(dh.base(), f.lm(dh.ord_base()).unwrap())).unwrap();
        assert_eq!(h.poly().lm(dh.ord_ext()), lm.lm(dh.ord_ext()));
    }
    let mut tested = 0;
    while tested < cases {
        let p = r.gen_range(1..=4u64);
        let big: FreePoly = random_homogeneous(&mut r, dh.ext(), &[0, 1, 2], 4, p);
        let lm = big.lm(dh.ord_ext()).unwrap();
        if blockers.iter().any(|u| u.divides(&lm)) {
            continue;
        }
        tested += 1;
        assert!(is_t_left(&lm, dh.t()));
        let lm_tilde = dh.dehomogenize(&monomial_poly(dh.ext(), lm)).unwrap();
        assert_eq!(dh.dehomogenize(&big).unwrap().lm(dh.ord_base()), lm_tilde.lm(dh.ord_base()));
    }
}

// ---------------------------------------------------------------------------
// dh-closure

fn subsets_of<M: Term>(monos: &[M], max_size: usize) -> Vec<Vec<usize>> {
    let n = monos.len();
    let mut out = Vec::new();
    if n <= 16 && max_size >= n {
        for mask in 1u32..(1 << n) {
            out.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
        return out;
    }
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(0, n, max_size, &mut Vec::new(), &mut out);
    out
}

/// Four equivalent descriptions of dh-closed homogeneous elements of
/// `K[x, y, t]`, on every support of every degree up to 4. Returns the number
/// of elements examined.
pub fn central_closure_coherence() -> usize {
    let dh = central(false);
    let e = dh.ext();
    let t = dh.t();
    let mut examined = 0;
    for p in 0..=4u64 {
        let monos = all_monomials::<Monomial>(3, p).into_iter().filter(|m| m.degree(e.weights()) == p).collect::<Vec<_>>();
        for support in subsets_of(&monos, monos.len()) {
            let f = CommPoly::from_terms(
                e,
                support.iter().map(|&i| (monos[i].clone(), q(i as i64 + 1, 1))),
            );
            let lm = f.lm(dh.ord_ext()).unwrap();
            let f_star = dh.dehomogenize(&f).unwrap();
            let i = dh.homogenize(&f_star).unwrap().poly() == &f;
            let ii = dh.embed(&monomial_poly(dh.base(), f_star.lm(dh.ord_base()).unwrap())).unwrap().lm(dh.ord_ext())
                == Some(lm.clone());
            let iii = !f.monomials().all(|m| m.occurrences(t) > 0);
            let iv = lm.occurrences(t) == 0;
            assert!(i == ii && ii == iii && iii == iv, "{}", f.display(dh.ord_ext()));
            assert_eq!(dh.is_dh_closed_element(&f).unwrap(), i);
            examined += 1;
        }
    }
    examined
}

/// dh-closure of T-left normal homogeneous elements of `K<X, Y, T>`: the
/// literal `(F_~)~ = F` against `LM(F_~) = LM(F)`. All supports for degrees
/// up to 3; in degree 4 (31 words) every support of at most four words plus
/// `random_supports` random ones.
pub fn noncentral_closure_coherence(random_supports: usize, seed: u64) -> usize {
    let dh = noncentral();
    let e = dh.ext();
    let t = dh.t();
    let mut r = rng(seed);
    let mut examined = 0;
    for p in 0..=4u64 {
        let monos = all_monomials::<Word>(3, p)
            .into_iter()
            .filter(|m| m.degree(e.weights()) == p && is_t_left(m, t))
            .collect::<Vec<_>>();
        let max_size = if p <= 3 { monos.len() } else { 4 };
        let mut supports = subsets_of(&monos, max_size);
        if p == 4 {
            for _ in 0..random_supports {
                let mask: u32 = r.gen_range(1..1u32 << monos.len());
                supports.push((0..monos.len()).filter(|i| mask >> i & 1 == 1).collect());
            }
        }
        for support in supports {
            let f = FreePoly::from_terms(e, support.iter().map(|&i| (monos[i].clone(), q(i as i64 + 1, 1))));
            assert_eq!(dh.normalize_mod_commutators(&f).unwrap().form, f);
            let lm = f.lm(dh.ord_ext()).unwrap();
            let f_tilde = dh.dehomogenize(&f).unwrap();
            let literal = dh.homogenize(&f_tilde).unwrap().poly() == &f;
            let by_lm = dh.embed(&monomial_poly(dh.base(), f_tilde.lm(dh.ord_base()).unwrap())).unwrap().lm(dh.ord_ext())
                == Some(lm.clone());
            assert_eq!(literal, by_lm, "{}", f.display(dh.ord_ext()));
            assert_eq!(literal, lm.occurrences(t) == 0);
            assert_eq!(dh.is_dh_closed_element(&f).unwrap(), literal);
            examined += 1;
        }
    }
    examined
}

/// Homogenizing and dehomogenizing bases are mutually inverse on the worked
/// minimal bases.
pub fn round_trips() {
    let dh = central(false);
    let gb_i = reduced(&buchberger(dh.base(), &central_example(&dh), dh.ord_base()).unwrap()).unwrap();
    let up = dh.homogenize_basis(&gb_i).unwrap();
    assert_eq!(&reduced(&dh.dehomogenize_basis(up.elements()).unwrap()).unwrap(), &gb_i);
    let again = dh.homogenize_basis(&dh.dehomogenize_basis(up.elements()).unwrap()).unwrap();
    assert!(same_set(again.elements(), up.elements()));
    assert!(dh.is_dh_closed_ideal(up.elements()).unwrap().closed);

    let dh = noncentral();
    let gb_i = reduced(&complete_nc(dh.base(), &noncentral_example(&dh), dh.ord_base(), 6).unwrap()).unwrap();
    let up = dh.homogenize_basis(&gb_i).unwrap();
    let (down, dropped) = dh.dehomogenize_basis(&up).unwrap();
    assert_eq!(dropped, dh.commutators().len());
    assert_eq!(down.elements(), gb_i.elements());
    let again = dh.homogenize_basis(&down).unwrap();
    assert!(same_set(again.elements(), up.elements()));
    assert!(dh.is_dh_closed_ideal(up.elements(), 4).unwrap().closed);
}

// ---------------------------------------------------------------------------
// torsion

/// Multiplication by the homogenizing variable is injective on the degree-p
/// part of the quotient iff the normal forms of `t*m` (m normal of degree
/// p) are linearly independent.
fn t_multiplication_injective<M: Term>(basis: &GroebnerBasis<M>, t_poly: &Polynomial<M>, p: u64) -> bool {
    let normal = normal_monomials(basis, p).unwrap();
    let images = normal
        .degree(p)
        .iter()
        .map(|m| {
            let f = monomial_poly(basis.ctx(), m.clone());
            remainder(&(t_poly * &f), basis.elements(), basis.ord()).unwrap()
        })
        .collect::<Vec<_>>();
    rank(&images) == images.len()
}

pub fn torsion_witnesses() {
    let dh = central(false);
    let e = dh.ext();
    let s_star = central_example(&dh).iter().map(|f| dh.homogenize(f).unwrap().into_poly()).collect::<Vec<_>>();
    let j = buchberger(e, &s_star, dh.ord_ext()).unwrap();
    let t = CommPoly::variable(e, dh.t());
    let f = &t * &comm(e, &[(q(1, 1), &[1, 0, 0]), (q(2, 1), &[0, 1, 0])]);
    assert!(is_zero_mod(&(&t * &f), &j), "tF must lie in J");
    assert!(!is_zero_mod(&f, &j), "F must lie outside J");
    assert!(!t_multiplication_injective(&j, &t, 2));

    let gb_i = reduced(&dh.dehomogenize_basis(j.elements()).unwrap()).unwrap();
    let i_star = dh.homogenize_basis(&gb_i).unwrap();
    for p in 0..=4 {
        assert!(t_multiplication_injective(&i_star, &t, p), "torsion in degree {p}");
    }

    let dh = noncentral();
    let e = dh.ext();
    let run = dh.pipeline(&noncentral_example(&dh), 6).unwrap();
    let t = FreePoly::variable(e, dh.t());
    let f = &t * &free(e, &[(q(1, 1), "X"), (q(4, 1), "Y")]);
    assert!(is_zero_mod(&(&t * &f), &run.gb_s_tilde), "TF must lie in J");
    assert!(!is_zero_mod(&f, &run.gb_s_tilde), "F must lie outside J");
    assert!(!in_graded_ideal(e, &run.s_tilde, &f));
    assert!(in_graded_ideal(e, &run.s_tilde, &(&t * &f)));
    assert!(!t_multiplication_injective(&run.gb_s_tilde, &t, 2));
    for p in 0..=4 {
        assert!(t_multiplication_injective(&run.gb_i_tilde, &t, p), "torsion in degree {p}");
    }
}

// ---------------------------------------------------------------------------
// dimensions

fn convolution(base_dims: &[usize], p: usize) -> usize {
    base_dims[..=p].iter().sum()
}

pub fn dimension_laws() {
    let cap = 8u64;
    let dh = central(false);
    let run = dh.pipeline(&central_example(&dh)).unwrap();
    let base_dims = quotient_dims(&run.gb_i, cap).unwrap();
    let ext_dims = quotient_dims(&run.gb_i_star, cap).unwrap();
    for p in 0..=cap as usize {
        assert_eq!(ext_dims[p], convolution(&base_dims, p), "degree {p}");
        assert_eq!(ext_dims[p], graded_quotient_dim(dh.ext(), run.gb_i_star.elements(), p as u64), "degree {p}");
    }
    let report = presentation_report_central(&dh, &run.gb_i_star, cap).unwrap();
    assert_eq!(report.dims_rees, report.cumulative_algebra());
    assert_eq!(report.dims_algebra, base_dims);
    assert_eq!(report.dims_graded, base_dims);
    assert_eq!(report.algebra.elements(), run.gb_i.elements());
    let lh = lh_set(run.gb_i.elements()).unwrap().into_iter().map(|h| h.into_poly()).collect::<Vec<_>>();
    assert!(same_set(report.graded.elements(), &lh));
    assert!(verify_groebner(&lh, dh.ord_base()).unwrap().is_groebner());

    let dh = noncentral();
    let run = dh.pipeline(&noncentral_example(&dh), 6).unwrap();
    let base_dims = quotient_dims(&run.gb_i, cap).unwrap();
    let ext_dims = quotient_dims(&run.gb_i_tilde, cap).unwrap();
    for p in 0..=cap as usize {
        assert_eq!(ext_dims[p], convolution(&base_dims, p), "degree {p}");
    }
    for p in 0..=4u64 {
        assert_eq!(ext_dims[p as usize], graded_quotient_dim(dh.ext(), run.gb_i_tilde.elements(), p), "degree {p}");
    }
    let report = presentation_report_noncentral(&dh, &run.gb_i_tilde, cap).unwrap();
    assert_eq!(report.dims_rees, report.cumulative_algebra());
    assert_eq!(report.dims_algebra, base_dims);
    assert_eq!(report.dims_graded, base_dims);
    let lh = lh_set(run.gb_i.elements()).unwrap().into_iter().map(|h| h.into_poly()).collect::<Vec<_>>();
    assert!(verify_groebner_nc(&lh, dh.ord_base(), None).unwrap().is_groebner());
}

// ---------------------------------------------------------------------------
// canonical output

fn remix(r: &mut ChaCha8Rng, gens: &[CommPoly], vars: &[usize]) -> Vec<CommPoly> {
    let ctx = gens[0].ctx().clone();
    let mut out = gens.to_vec();
    // unitriangular changes keep the ideal
    for i in 0..out.len() {
        for j in 0..out.len() {
            if i != j && r.gen_bool(0.5) {
                let m = random_poly::<Monomial>(r, &ctx, vars, 2, 2);
                out[i] = &out[i] + &(&m * &out[j]);
            }
        }
        let c = ctx.field().from_i64(r.gen_range(1..=7) * if r.gen_bool(0.5) { 1 } else { -1 });
        out[i] = out[i].scale(&c);
    }
    // and a redundant combination
    let m = random_poly::<Monomial>(r, &ctx, vars, 2, 2);
    out.push(&m * &out[0]);
    out.shuffle(r);
    out
}

pub fn canonicalization(remixes: usize, seed: u64) {
    let mut r = rng(seed);
    let dh = central(false);
    let s = central_example(&dh);
    let reference = buchberger(dh.base(), &s, dh.ord_base()).unwrap();
    let star = s.iter().map(|f| dh.homogenize(f).unwrap().into_poly()).collect::<Vec<_>>();
    let reference_star = buchberger(dh.ext(), &star, dh.ord_ext()).unwrap();
    let dh3 = central(true);
    let s3 = (0..3).map(|_| random_poly::<Monomial>(&mut r, dh3.base(), &[0, 1, 2], 3, 3)).collect::<Vec<_>>();
    let reference3 = buchberger(dh3.base(), &s3, dh3.ord_base()).unwrap();
    for _ in 0..remixes {
        let mixed = remix(&mut r, &s, &[0, 1]);
        assert_eq!(buchberger(dh.base(), &mixed, dh.ord_base()).unwrap(), reference);
        let mixed = remix(&mut r, &star, &[0, 1, 2]);
        assert_eq!(buchberger(dh.ext(), &mixed, dh.ord_ext()).unwrap(), reference_star);
        let mixed = remix(&mut r, &s3, &[0, 1, 2]);
        assert_eq!(buchberger(dh3.base(), &mixed, dh3.ord_base()).unwrap(), reference3);
        let mut shuffled = s3.clone();
        shuffled.shuffle(&mut r);
        assert_eq!(buchberger(dh3.base(), &shuffled, dh3.ord_base()).unwrap(), reference3);
    }
    assert!(reference.flags().reduced && reference_star.flags().reduced && reference3.flags().reduced);
}

pub struct GoldenCase {
    pub name: String,
    pub session: String,
    pub args: Vec<String>,
    pub code: i32,
}

pub fn fixtures_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures"))
}

/// `name code session args...` per line of `fixtures/cases.txt`.
pub fn golden_cases() -> Vec<GoldenCase> {
    let text = std::fs::read_to_string(fixtures_dir().join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut parts = l.split_whitespace().map(String::from);
            let name = parts.next().unwrap();
            let code = parts.next().unwrap().parse().unwrap();
            let session = parts.next().unwrap();
            GoldenCase { name, session, args: parts.collect(), code }
        })
        .collect()
}

/// What the binary printed, in golden-file form.
pub fn run_binary(case: &GoldenCase) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_dhgb"))
        .arg(fixtures_dir().join(&case.session))
        .args(&case.args)
        .output()
        .unwrap();
    let mut text = String::from_utf8(out.stdout).unwrap();
    let err = String::from_utf8(out.stderr).unwrap();
    if !err.is_empty() {
        text.push_str("--- stderr\n");
        text.push_str(&err);
    }
    (text, out.status.code().unwrap_or(-1))
}

pub fn golden_outputs() {
    let cases = golden_cases();
    assert!(!cases.is_empty());
    let mut seen = BTreeSet::new();
    for case in &cases {
        assert!(seen.insert(case.name.clone()), "duplicate case {}", case.name);
        let expected = std::fs::read_to_string(fixtures_dir().join("golden").join(format!("{}.out", case.name)))
            .unwrap_or_else(|_| panic!("missing golden file for {}", case.name));
        let (first, code) = run_binary(case);
        let (second, _) = run_binary(case);
        assert_eq!(code, case.code, "{}: exit code", case.name);
        assert_eq!(first, second, "{}: output differs between runs", case.name);
        assert_eq!(first, expected, "{}: output differs from golden file", case.name);
    }
}
