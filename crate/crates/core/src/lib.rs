pub mod classify;
pub mod heckenberger;
pub mod hopfops;
pub mod ncpoly;
pub mod presentations;
pub mod scalars;

pub use ncpoly::{Alphabet, FreePoly, Generator, NCPoly, NFMonomial, RewriteSystem};
pub use scalars::{CycloScalar, Field, RootOfUnity};

/// Polynomials over the cyclotomic coefficient field.
pub type Poly = NCPoly<CycloScalar>;
