//! Hyperfields given by membership oracles for their hypersums, and weak and
//! strong matroids over them.

mod finite;
mod hyperfield;
mod matroid;
mod morphism;

pub use hyperfield::{builtin, has_ip, HElem, Hyperfield};
pub use matroid::{
    h_chirotope, sign_element, strong_matroid_check, weak_matroid_check, HMatrix, HMatroidReport, HSignMap, HWitness,
};
pub use morphism::{complex_phase_minors, ph, pushforward, Morphism};
