//! Spin structures on a closed surface of genus `g`, as `2 × g` matrices over
//! Z/2, under the action of the braid generators `σ_1, …, σ_{2g+1}` through
//! their hyperelliptic Dehn twists.
//!
//! The crate enumerates orbits, reduces any spin matrix to one of the
//! representatives `M_0, …, M_{⌈g/2⌉}` with a traced word, and checks the
//! isotropy groups of the alternative representatives `M̄_m`.

pub mod braid;
pub mod error;
pub mod gf2;
pub mod normal_form;
pub mod orbit;
pub mod verify;

pub use braid::{
    apply_generator, apply_word, generator_count, permutation_of, tau_word, word_for_permutation,
    GeneratorWord, Permutation,
};
pub use error::{Error, Result};
pub use gf2::{arf, dehn_twist, evaluate, intersection, HomologyClass, SpinMatrix, Z2};
pub use normal_form::{
    canonical_m, classify, fixed_point, normal_bar_m, reduce, BlockA, Move, ReductionTrace,
};
