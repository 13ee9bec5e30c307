//! Exact arithmetic for a family of Fuchsian groups arising as totally geodesic
//! curves on complex hyperbolic 2-orbifolds.
//!
//! The crate constructs, entirely in exact arithmetic over towers
//! `Q(zeta_N, sqrt(-7))`, three lattice packages (`p = 5, 8, 12`), their
//! quadrilateral Fuchsian subgroups, adjoint trace fields, Galois signature
//! censuses, and triangle-group exclusion searches, and renders the associated
//! Poincare-disk quadrilaterals with certified interval numerics.
//!
//! Entry points:
//! - [`lattice::build_lattice`] constructs a verified [`lattice::LatticePackage`].
//! - [`fuchsian::galois_census`] and [`fuchsian::arithmeticity_verdict`] classify
//!   the Galois conjugates.
//! - [`trisearch::enumerate_candidates`] runs the commensurability exclusion search.
//! - [`disk::build_quadrilaterals`] and [`figure::emit_figure`] produce geometry.
//! - [`report::run_report`] drives the whole pipeline.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod cyclotomic;
pub mod disk;
pub mod error;
pub mod field;
pub mod figure;
pub mod fuchsian;
pub mod hermitian;
pub mod interval;
pub mod lattice;
pub mod matrix;
pub mod numberfield;
pub mod qpoly;
pub mod report;
pub mod trisearch;
pub mod zfactor;

pub use error::Error;
pub use qpoly::QPoly;

/// Rational scalars used throughout: arbitrary-precision, always reduced.
pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

/// Parse a rational from `"n"` or `"n/d"` form.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: Integer = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: Integer = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d == num_traits::Zero::zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Format a rational as `"n"` or `"n/d"` (reduced, denominator positive).
pub fn rational_str(q: &Rational) -> String {
    if num_traits::One::is_one(q.denom()) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
