//! Concrete fusion rings and modular data.

mod abelian;
mod bseries;
mod dseries;
mod groups;
mod pointed;
mod sl;
mod ty;
mod weights;

pub use abelian::{lagrangian_search, AbelianGroup, BilinearForm};
pub use bseries::{b_even_part, b_labels, b_ring, build_b};
pub use dseries::{build_d, d_duals, d_even_part, d_labels, d_partial_ring};
pub use groups::{dihedral_rep, semidirect_rep};
pub use pointed::{build_pointed_modular, QuadraticForm};
pub use sl::{sl2_ring, su3_example, SU3_LABELS};
pub use ty::{dty_duals, dty_objects, dty_plus_ring, ty_ring, DtyKind, DtyObject};
pub use weights::{qdim_from_weight, quantum_integer, twist_from_weight, LieType, Weight, WeightData};
