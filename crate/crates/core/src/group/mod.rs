pub mod chain;
pub mod elem;
pub mod handle;
pub mod perm;
pub mod presentation;
pub mod slp;
pub mod small;
pub mod todd_coxeter;

pub use chain::{orbit, ChainData, ChainOptions, Orbit, StabChain, ORBIT_CAP};
pub use elem::{decode_vector, element_order, encode_vector, Element, ORDER_CAP};
pub use handle::GroupHandle;
pub use perm::Perm;
pub use slp::{Slp, SlpNode};
pub use presentation::{cyclic_reduce, free_reduce, invert_word, presentation_from_chain, Presentation, Word};
pub use small::{
    commutator, coset_action, derived_subgroup_small, enumerate_small, is_perfect_small, normal_closure_small, SMALL_CAP,
};
pub use todd_coxeter::{coset_enumeration, COSET_CAP};
