//! Small dense linear algebra kernels shared by the representation,
//! spectra and bound modules.

mod jacobi;
mod matrix;
mod symtridiag;

pub use jacobi::{hermitian_eigen, hermitian_eigenvalues};
pub use matrix::{dot, gram_condition, orthonormalize, vec_norm, CMat};
pub use symtridiag::symmetric_eigenvalues;
