//! The family of connected graphs in which every spanning tree has a perfect
//! matching: recognition with certificates and counterexample trees, the
//! brute-force oracle, closure under pendant replacement, and samplers.

mod certificate;
mod compose;
mod recognize;
mod sample;

pub use certificate::{verify_certificate, Certificate, CertificateDefect, Witness, VIRTUAL_VERTEX_BASE};
pub use compose::pendant_replace;
pub use recognize::{
    admits_separation, every_cut_vertex_has_single_leaf, find_separation, lift_witness,
    recognize, recognize_oracle, Recognition, Separation, Side,
};
pub use sample::{sample_member, sample_pm_tree};
