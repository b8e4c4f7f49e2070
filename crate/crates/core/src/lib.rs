//! Exact K-polynomials and multidegrees of bifiltered modules over the
//! Weyl algebra, with a front end for A-hypergeometric systems.
//!
//! The layers, bottom up: [`coeff`] (exact fields), [`poly`] (sparse
//! polynomials and term orders), [`groebner`] (a Buchberger engine that
//! handles commutative rings and Weyl-type algebras alike), [`weyl`],
//! [`grading`], [`kpoly`], [`bifiltered`] and [`hypergeom`].

pub mod bifiltered;
pub mod coeff;
mod error;
pub mod grading;
pub mod groebner;
pub mod hypergeom;
pub mod kpoly;
pub mod linalg;
pub mod parallel;
pub mod poly;
pub mod rng;
pub mod weyl;

pub use coeff::{CoeffError, Field, ParamPoly, Rational, RationalFunction};
pub use error::{Error, Result};
