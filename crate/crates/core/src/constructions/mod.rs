pub mod constants;
pub mod hall_witt;
pub mod theta;
pub mod thm24;

pub use hall_witt::{hall_witt_defect, hall_witt_sweep, GradedTriple, SweepReport};
pub use theta::{theta_submodule_check, ThetaReport};
pub use thm24::{build_thm24, class_certificate, self_centralising_check, ClassCertificate, Thm24};
pub mod alt6;
pub mod psl49;
