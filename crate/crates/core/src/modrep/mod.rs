pub mod descent;
pub mod lattice;
pub mod rep;
pub mod sl2;

pub use descent::{galois_descent, Descent};
pub use lattice::{submodule_lattice_small, SubmoduleLattice, LATTICE_CAP};
pub use rep::{ModuleMap, Representation};
