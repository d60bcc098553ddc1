//! Conley-Morse persistence for combinatorial multivector fields on
//! simplicial complexes.

pub mod complex;
pub mod conley;
pub mod dynamics;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod mvf;
pub mod pipeline;
pub mod zigzag;

pub use complex::{SimplexId, SimplexSet, SimplicialComplex, Vertex};
pub use conley::{ConleyMorseGraph, IndexPair, MorseDecomposition};
pub use error::{Error, Result};
pub use linalg::Prime;
pub use mvf::MultivectorField;
pub use pipeline::{full_barcode, CombinedBarcode, PipelineInput};
pub use zigzag::{Bar, ZigzagModule};
