//! Combinatorial R matrices for the one-row crystals B_l of the affine
//! families C and twisted A, energy functions, an alternative +/- diagram
//! algorithm, brute-force verification tables, and the classically
//! restricted one-dimensional sums X_{lambda,mu}(t) with a fermionic
//! Kostka-polynomial cross-check.

pub mod diagram;
pub mod element;
pub mod error;
pub mod kostka;
pub mod laurent;
pub mod letter;
pub mod onedsum;
pub mod oracle;
pub mod rmatrix;
pub mod tableau;

pub use element::{Family, OneRowElement, Partition, TensorElement};
pub use error::Error;
pub use laurent::LaurentPolynomial;
pub use letter::Letter;
