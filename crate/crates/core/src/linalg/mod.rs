//! Exact linear algebra over prime fields.

mod homology;
mod matrix;
mod prime;

pub use homology::{
    induced_inclusion_map, induced_simplicial_map, relative_homology, simplicial_map_matrix,
    Chain, HomologySummary,
};
pub use matrix::FieldMatrix;
pub use prime::Prime;
