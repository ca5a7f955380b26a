//! Exact fusion rings and partially known modular data.
//!
//! The crate builds the Grothendieck rings, dimensions, twists and S-matrix
//! entries of several families of braided fusion categories, and checks their
//! structural properties with exact cyclotomic arithmetic: Verlinde fusion,
//! the balancing equation, Müger centralizers, symmetric subcategories,
//! gradings and group-theoreticity criteria.

pub mod classifier;
pub mod constructors;
pub mod error;
pub mod fusionring;
pub mod modular;
pub mod numeric;

pub use error::{Error, Result};
pub use fusionring::{FpDim, FusionRing, PartialFusionRing};
pub use modular::{GtDecision, GtVerdict, PartialModularData, SEntry};
pub use numeric::{Cyclotomic, Rational, RealInterval, RootOfUnity};
