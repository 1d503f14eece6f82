//! Exact-arithmetic classification of SLOCC orbits for pure states of the
//! 2x2x2, 2x2x3 and 2x3x3 formats, together with the geometric registry of
//! orbit closures (representatives, dimensions, inclusion order) and
//! Hilbert-series verification of the covariant algebras.
//!
//! Every computation is over arbitrary-precision rationals; a state is
//! classified by the exact vanishing pattern of a battery of classical
//! covariants and concomitants built from the ground form by Cayley operator
//! transvections.

pub mod cayley;
pub mod classify222;
pub mod classify223;
pub mod classify233;
pub mod conformance;
pub mod error;
pub mod forms;
pub mod hilbert;
pub mod linalg;
pub mod nullity;
pub mod orbitgeom;
pub mod polyalgebra;

pub use error::Error;
pub use forms::{Hypermatrix, Shape, SloccElement, StateDocument};
pub use nullity::NullityVector;
pub use orbitgeom::OrbitRecord;
pub use polyalgebra::{Polynomial, Rational};
