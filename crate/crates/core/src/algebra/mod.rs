//! Scalar rings and the dense matrix type every construction is built on.

mod bivariate;
mod complex;
mod gaussian;
mod matrix;
mod poly;
mod ring;
mod root_two;
mod text;

pub use bivariate::BivariatePoly;
pub use complex::{ComplexFloat, COMPLEX_TOLERANCE};
pub use gaussian::{Gaussian, GaussianInteger, GaussianRational};
pub use matrix::Matrix;
pub use poly::Poly;
pub use ring::{binomial, int, rational, Field, Ring};
pub use root_two::RootTwo;
