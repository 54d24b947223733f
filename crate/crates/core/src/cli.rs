//! Command dispatch for sessions and the canonical text output.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};

use crate::basis::GroebnerBasis;
use crate::dh_central::CentralDh;
use crate::dh_noncentral::NoncentralDh;
use crate::error::{Error, Result};
use crate::gb_comm::buchberger;
use crate::gb_nc::complete_nc;
use crate::monomial::{Monomial, Term, Word};
use crate::order::OrderingSpec;
use crate::poly::{CommPoly, FreePoly, Polynomial};
use crate::quotient::{
    normal_monomials, presentation_report_central, presentation_report_noncentral, PresentationReport,
    DEFAULT_MAX_DEGREE,
};
use crate::reduce::normal_form;
use crate::session::{parse_session, Named, Session, SessionPolys};

#[derive(Parser, Debug)]
#[command(name = "command", no_binary_name = true, disable_help_subcommand = true)]
struct CommandArgs {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Gröbner basis of the session polynomials
    Gb(Opts),
    /// Homogenize every polynomial
    Homogenize,
    /// Dehomogenize every polynomial
    Dehomogenize,
    /// dh-closure of each element or of the generated ideal
    Dhcheck {
        #[arg(long, conflicts_with = "ideal", required_unless_present = "ideal")]
        element: bool,
        #[arg(long)]
        ideal: bool,
        #[command(flatten)]
        opts: Opts,
    },
    /// Homogenize, complete, dehomogenize, homogenize back
    Pipeline(Opts),
    /// Normal monomials of the generated ideal
    Normal {
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        maxdeg: u64,
        #[command(flatten)]
        opts: Opts,
    },
    /// Presentations of A, G(A) and the Rees algebra
    Present {
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        maxdeg: u64,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args, Debug, Clone, Copy, Default)]
struct Opts {
    #[arg(long)]
    degree_bound: Option<u64>,
    #[arg(long)]
    trace: bool,
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// 2 for parse errors, 1 for everything else.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Usage(_) => 2,
        _ => 1,
    }
}

/// Parses `text` and runs `args`, or the session's own command line when
/// `args` is empty.
pub fn run(text: &str, args: &[String]) -> Outcome {
    let fail = |e: Error| Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: exit_code(&e) };
    let session = match parse_session(text) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let args = if args.is_empty() { session.command.clone().unwrap_or_default() } else { args.to_vec() };
    match run_command(&session, &args) {
        Ok(stdout) => Outcome { stdout, stderr: String::new(), code: 0 },
        Err(e) => fail(e),
    }
}

/// Runs one command (optionally prefixed by `asvar <name>`) on a session.
pub fn run_command(session: &Session, args: &[String]) -> Result<String> {
    let (homvar, args) = match args {
        [kw, name, rest @ ..] if kw == "asvar" => {
            let v = session
                .ctx
                .var_index(name)
                .ok_or_else(|| Error::Usage(format!("unknown variable `{name}`")))?;
            (Some(v), rest)
        }
        [kw] if kw == "asvar" => return Err(Error::Usage("`asvar` needs a variable name".into())),
        _ => (session.homvar, args),
    };
    if args.is_empty() {
        return Err(Error::Usage("no command given".into()));
    }
    let cmd = CommandArgs::try_parse_from(args)
        .map_err(|e| {
            let first = e.to_string().lines().next().unwrap_or("bad command").to_string();
            Error::Usage(first.trim_start_matches("error: ").to_string())
        })?
        .cmd;
    match &session.polys {
        SessionPolys::Commutative(polys) => Central::new(session, homvar)?.run(&cmd, polys),
        SessionPolys::Free(polys) => Noncentral::new(session, homvar)?.run(&cmd, polys),
    }
}

fn need<T>(x: Option<T>, what: &str) -> Result<T> {
    x.ok_or_else(|| Error::Argument(format!("this command needs {what}")))
}

fn gens<M: Term>(polys: &[Named<M>]) -> Vec<Polynomial<M>> {
    polys.iter().map(|n| n.poly.clone()).collect()
}

fn write_traces<M: Term>(out: &mut String, polys: &[Named<M>], basis: &GroebnerBasis<M>) -> Result<()> {
    for n in polys {
        let trace = normal_form(&n.poly, basis.elements(), basis.ord())?;
        let _ = write!(out, "trace {}:\n{}", n.name, trace.render(basis.elements(), basis.ord()));
    }
    Ok(())
}

fn write_membership<M: Term>(out: &mut String, label: &str, elems: &[Polynomial<M>], basis: &GroebnerBasis<M>) -> Result<()> {
    for g in elems {
        let trace = normal_form(g, basis.elements(), basis.ord())?;
        let _ = write!(
            out,
            "trace {} in {label}:\n{}",
            g.display(basis.ord()),
            trace.render(basis.elements(), basis.ord())
        );
    }
    Ok(())
}

fn write_normal<M: Term>(out: &mut String, basis: &GroebnerBasis<M>, maxdeg: u64) -> Result<()> {
    let n = normal_monomials(basis, maxdeg)?;
    let _ = writeln!(out, "gb = {}", basis.display());
    for d in 0..=maxdeg {
        let level = n.degree(d).iter().map(|m| m.render_in(basis.ctx())).collect::<Vec<_>>();
        let shown = if level.is_empty() { "(none)".to_string() } else { level.join(", ") };
        let _ = writeln!(out, "degree {d}: {shown}");
    }
    let _ = writeln!(out, "dims = {}", join(&n.dims()));
    Ok(())
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn write_report<M: Term>(out: &mut String, report: &PresentationReport<M>) {
    let _ = writeln!(out, "{}", report.render());
}

struct Central<'a> {
    session: &'a Session,
    dh: Option<CentralDh>,
}

impl<'a> Central<'a> {
    fn new(session: &'a Session, homvar: Option<usize>) -> Result<Self> {
        let dh = homvar.map(|t| CentralDh::new(&session.ctx, t, &session.ord)).transpose()?;
        Ok(Central { session, dh })
    }

    fn dh(&self) -> Result<&CentralDh> {
        need(self.dh.as_ref(), "a homogenizing variable (`homvar` or `asvar`)")
    }

    fn ord(&self) -> &OrderingSpec {
        self.dh.as_ref().map_or(&self.session.ord, |dh| dh.ord_ext())
    }

    fn to_base(&self, n: &Named<Monomial>) -> Result<CommPoly> {
        let dh = self.dh()?;
        if n.poly.monomials().any(|m| m.occurrences(dh.t()) > 0) {
            return Err(Error::Precondition(format!(
                "{} involves the homogenizing variable {}",
                n.name,
                dh.ext().vars()[dh.t()]
            )));
        }
        dh.dehomogenize(&n.poly)
    }

    fn run(&self, cmd: &Cmd, polys: &[Named<Monomial>]) -> Result<String> {
        let mut out = String::new();
        match cmd {
            Cmd::Gb(opts) => {
                let basis = buchberger(&self.session.ctx, &gens(polys), self.ord())?;
                let _ = writeln!(out, "gb = {}", basis.display());
                if opts.trace {
                    write_traces(&mut out, polys, &basis)?;
                }
            }
            Cmd::Homogenize => {
                let dh = self.dh()?;
                for n in polys {
                    let h = dh.homogenize(&self.to_base(n)?)?;
                    let _ = writeln!(out, "{}* = {}", n.name, h.poly().display(dh.ord_ext()));
                }
            }
            Cmd::Dehomogenize => {
                let dh = self.dh()?;
                for n in polys {
                    let _ = writeln!(out, "{}_* = {}", n.name, dh.dehomogenize(&n.poly)?.display(dh.ord_base()));
                }
            }
            Cmd::Dhcheck { element: true, .. } => {
                let dh = self.dh()?;
                for n in polys {
                    let verdict = if dh.is_dh_closed_element(&n.poly)? { "dh-closed" } else { "NOT dh-closed" };
                    let _ = writeln!(out, "{}: {verdict}", n.name);
                }
            }
            Cmd::Dhcheck { .. } => {
                let dh = self.dh()?;
                let closure = dh.is_dh_closed_ideal(&gens(polys))?;
                let _ = writeln!(out, "basis = {}", closure.basis.display());
                match &closure.witness {
                    None => out.push_str("dh-closed\n"),
                    Some(w) => {
                        let lm = w.lm(dh.ord_ext()).expect("nonzero");
                        let _ = writeln!(out, "NOT dh-closed; witness LM = {}", lm.render_in(dh.ext()));
                    }
                }
            }
            Cmd::Pipeline(opts) => {
                let dh = self.dh()?;
                let base = polys.iter().map(|n| self.to_base(n)).collect::<Result<Vec<_>>>()?;
                let run = dh.pipeline(&base)?;
                let _ = writeln!(out, "gb(S*) = {}", run.gb_s_star.display());
                let _ = writeln!(out, "gb(I) = {}", run.gb_i.display());
                let _ = writeln!(out, "gb(I*) = {}", run.gb_i_star.display());
                match &run.witness {
                    None if run.ideals_equal() => out.push_str("<S*> = <I*>\n"),
                    None => out.push_str("<S*> is not contained in <I*>\n"),
                    Some(w) => {
                        let _ = writeln!(
                            out,
                            "strict inclusion detected: <S*> is properly contained in <I*>; witness {}",
                            w.display(dh.ord_ext())
                        );
                    }
                }
                if opts.trace {
                    write_membership(&mut out, "<S*>", run.gb_i_star.elements(), &run.gb_s_star)?;
                }
            }
            Cmd::Normal { maxdeg, .. } => {
                let basis = buchberger(&self.session.ctx, &gens(polys), self.ord())?;
                write_normal(&mut out, &basis, *maxdeg)?;
            }
            Cmd::Present { maxdeg, .. } => {
                let dh = self.dh()?;
                let basis = buchberger(dh.ext(), &gens(polys), dh.ord_ext())?;
                write_report(&mut out, &presentation_report_central(dh, &basis, *maxdeg)?);
            }
        }
        Ok(out)
    }
}

struct Noncentral<'a> {
    session: &'a Session,
    dh: Option<NoncentralDh>,
}

impl<'a> Noncentral<'a> {
    fn new(session: &'a Session, homvar: Option<usize>) -> Result<Self> {
        let dh = homvar.map(|t| NoncentralDh::new(&session.ctx, t, &session.ord)).transpose()?;
        Ok(Noncentral { session, dh })
    }

    fn dh(&self) -> Result<&NoncentralDh> {
        need(self.dh.as_ref(), "a homogenizing letter (`homvar` or `asvar`)")
    }

    fn ord(&self) -> &OrderingSpec {
        self.dh.as_ref().map_or(&self.session.ord, |dh| dh.ord_ext())
    }

    fn t_name(&self, dh: &NoncentralDh) -> String {
        dh.ext().vars()[dh.t()].clone()
    }

    fn note_reordering(&self, out: &mut String) {
        if let Some(dh) = &self.dh {
            if dh.reordered() {
                let _ = writeln!(out, "note: {} moved to lowest precedence", self.t_name(dh));
            }
        }
    }

    fn to_base(&self, n: &Named<Word>) -> Result<FreePoly> {
        let dh = self.dh()?;
        if n.poly.monomials().any(|m| m.occurrences(dh.t()) > 0) {
            return Err(Error::Precondition(format!("{} involves the homogenizing letter {}", n.name, self.t_name(dh))));
        }
        dh.dehomogenize(&n.poly)
    }

    /// Session polynomials with the commutators adjoined.
    fn with_commutators(&self, polys: &[Named<Word>]) -> Result<Vec<FreePoly>> {
        let mut g = gens(polys);
        for c in self.dh()?.commutators() {
            if !g.contains(c) {
                g.push(c.clone());
            }
        }
        Ok(g)
    }

    fn bounded_status(basis: &GroebnerBasis<Word>, bound: u64) -> String {
        if basis.flags().complete {
            format!("complete (degree bound {bound})")
        } else {
            format!("truncated at degree {bound}")
        }
    }

    fn run(&self, cmd: &Cmd, polys: &[Named<Word>]) -> Result<String> {
        let mut out = String::new();
        let bound = |opts: &Opts| need(opts.degree_bound, "--degree-bound for noncommutative input");
        match cmd {
            Cmd::Gb(opts) => {
                let b = bound(opts)?;
                self.note_reordering(&mut out);
                let basis = complete_nc(&self.session.ctx, &gens(polys), self.ord(), b)?;
                let _ = writeln!(out, "gb = {}", basis.display());
                let _ = writeln!(out, "status = {}", Self::bounded_status(&basis, b));
                if opts.trace {
                    write_traces(&mut out, polys, &basis)?;
                }
            }
            Cmd::Homogenize => {
                let dh = self.dh()?;
                self.note_reordering(&mut out);
                for n in polys {
                    let h = dh.homogenize(&self.to_base(n)?)?;
                    let _ = writeln!(out, "{}~ = {}", n.name, h.poly().display(dh.ord_ext()));
                }
            }
            Cmd::Dehomogenize => {
                let dh = self.dh()?;
                for n in polys {
                    let _ = writeln!(out, "{}_~ = {}", n.name, dh.dehomogenize(&n.poly)?.display(dh.ord_base()));
                }
            }
            Cmd::Dhcheck { element: true, .. } => {
                let dh = self.dh()?;
                self.note_reordering(&mut out);
                for n in polys {
                    let verdict = if dh.is_dh_closed_element(&n.poly)? { "dh-closed" } else { "NOT dh-closed" };
                    let _ = writeln!(out, "{}: {verdict}", n.name);
                }
            }
            Cmd::Dhcheck { opts, .. } => {
                let dh = self.dh()?;
                let b = bound(opts)?;
                self.note_reordering(&mut out);
                let closure = dh.is_dh_closed_ideal(&self.with_commutators(polys)?, b)?;
                let _ = writeln!(out, "basis = {}", closure.basis.display());
                let _ = writeln!(out, "status = {}", Self::bounded_status(&closure.basis, b));
                match &closure.witness {
                    None => out.push_str("dh-closed\n"),
                    Some(w) => {
                        let lm = w.lm(dh.ord_ext()).expect("nonzero");
                        let _ = writeln!(out, "NOT dh-closed; witness LM = {}", lm.render_in(dh.ext()));
                    }
                }
            }
            Cmd::Pipeline(opts) => {
                let dh = self.dh()?;
                let b = bound(opts)?;
                self.note_reordering(&mut out);
                let base = polys.iter().map(|n| self.to_base(n)).collect::<Result<Vec<_>>>()?;
                let run = dh.pipeline(&base, b)?;
                let _ = writeln!(out, "gb(S~) = {}", run.gb_s_tilde.display());
                let _ = writeln!(out, "status = {}", Self::bounded_status(&run.gb_s_tilde, b));
                let _ = writeln!(out, "gb(I) = {}", run.gb_i.display());
                let verified = if run.gb_i.flags().complete { "verified" } else { "not verified" };
                let _ = writeln!(out, "gb(I) status = {verified}");
                let _ = writeln!(out, "gb(I~) = {}", run.gb_i_tilde.display());
                let _ = writeln!(out, "dropped commutator images = {}", run.dropped);
                match &run.witness {
                    None if run.ideals_equal() => {
                        let _ = writeln!(out, "<S~> = <I~> within degree bound {b}");
                    }
                    None => {
                        let _ = writeln!(out, "<S~> is not contained in <I~> within degree bound {b}");
                    }
                    Some(w) => {
                        let _ = writeln!(
                            out,
                            "strict inclusion detected within degree bound {b}: <S~> is properly contained in <I~>; witness {}",
                            w.display(dh.ord_ext())
                        );
                    }
                }
                if opts.trace {
                    write_membership(&mut out, "<S~>", run.gb_i_tilde.elements(), &run.gb_s_tilde)?;
                }
            }
            Cmd::Normal { maxdeg, opts } => {
                let b = bound(opts)?;
                let basis = complete_nc(&self.session.ctx, &gens(polys), self.ord(), b)?;
                write_normal(&mut out, &basis, *maxdeg)?;
                let _ = writeln!(out, "status = {}", Self::bounded_status(&basis, b));
            }
            Cmd::Present { maxdeg, opts } => {
                let dh = self.dh()?;
                let b = bound(opts)?;
                self.note_reordering(&mut out);
                let basis = complete_nc(dh.ext(), &self.with_commutators(polys)?, dh.ord_ext(), b)?;
                if !basis.flags().complete {
                    return Err(Error::Precondition(format!(
                        "completion truncated at degree {b}; a presentation needs a complete basis"
                    )));
                }
                write_report(&mut out, &presentation_report_noncentral(dh, &basis, *maxdeg)?);
            }
        }
        Ok(out)
    }
}
