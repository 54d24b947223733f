//! Exact Gröbner bases for commutative polynomial rings and free algebras,
//! together with the central and noncentral (de)homogenization calculus
//! that transfers bases between a ring and its homogenized extension.
//!
//! ```
//! use dhgb::{parse_poly, CentralDh, Field, OrderingSpec, RingContext, RingKind};
//!
//! let ext = RingContext::standard(RingKind::Commutative, &["x", "y", "t"], Field::Rationals)?;
//! let ord = OrderingSpec::deglex_declared(&ext);
//! let dh = CentralDh::new(&ext, 2, &ord)?;
//! let s = vec![parse_poly(dh.base(), "y^3 - x - y")?, parse_poly(dh.base(), "y^2 + 1")?];
//! let run = dh.pipeline(&s)?;
//! assert_eq!(run.gb_i.display().to_string(), "{y + 1/2 x, x^2 + 4}");
//! assert!(!run.ideals_equal());
//! # Ok::<(), dhgb::Error>(())
//! ```

pub mod basis;
pub mod cli;
pub mod dh_central;
pub mod dh_noncentral;
pub mod error;
pub mod gb_comm;
pub mod gb_nc;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod quotient;
pub mod reduce;
pub mod ring;
pub mod scalar;
pub mod session;

pub use error::{Error, Result};
pub use monomial::{divide_monomial, Factorization, Monomial, Term, Word};
pub use order::{Extension, OrderingSpec};
pub use poly::{CommPoly, FreePoly, Homogeneity, HomogeneousPolynomial, Leading, Polynomial};
pub use reduce::{normal_form, reduces_to_zero, ReductionStep, ReductionTrace};
pub use ring::{RingContext, RingKind};
pub use scalar::{Field, Scalar};
pub use basis::{GbFlags, GroebnerBasis};
pub use gb_comm::{buchberger, minimalize, reduced, s_polynomial, verify_groebner, Certificate, SCheck};
pub use gb_nc::{complete_nc, overlaps, s_element, verify_groebner_nc, Overlap};
pub use dh_central::{treat_variable_as_t, CentralDh, CentralPipeline, DhClosure};
pub use dh_noncentral::{treat_variable_as_t_nc, NoncentralDh, NoncentralPipeline, TLeftNormalForm};
pub use quotient::{
    cumulative, lh_set, normal_monomials, normal_monomials_of, presentation_report_central,
    presentation_report_noncentral, quotient_dims, NormalMonomialSet, PresentationMode, PresentationReport,
    DEFAULT_MAX_DEGREE,
};
pub use session::{parse_poly, parse_session, Named, Session, SessionPolys};
pub use cli::{exit_code, run, run_command, Outcome};
