//! Homological support: polynomial matrices, module Groebner bases and
//! syzygies, free resolutions, Ext presentations and the canonical-module
//! multiplier.

pub mod generator;
pub mod matrix;
pub mod modgb;
pub mod resolution;

pub use generator::{singular_locus_ideal, suggest_test_element, u_generator};
pub use matrix::PolyMatrix;
pub use modgb::syzygy_matrix;
pub use resolution::{ext_presentation, free_resolution, Resolution};
