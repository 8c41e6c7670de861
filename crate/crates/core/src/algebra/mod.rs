//! Exact arithmetic substrate: integer and Laurent polynomials, fraction-free
//! determinants, Sturm root isolation and certified trigonometric bounds.

pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod roots;
pub mod trig;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use laurent::LaurentPoly;
pub use matrix::{bareiss_det, int_det};
pub use poly::IntPoly;
pub use roots::{isolate_real_roots, refine_interval, RationalInterval, SturmChain};
