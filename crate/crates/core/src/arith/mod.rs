pub mod howell;
pub mod mat;
pub mod poly;
pub mod ring;

pub use howell::{howell_solve, kernel, HowellForm, Solution};
pub use mat::{span_rref, Mat, Rref};
pub use poly::{char_poly, Poly};
pub use ring::{CoeffRing, RingKind};
