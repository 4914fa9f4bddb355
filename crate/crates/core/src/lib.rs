//! Graph minor category, Gröbner machinery for principal projectives over
//! ordered directed graphs, and reduced Świątkowski complexes with exact
//! integer homology.

pub mod error;
pub mod experiments;
pub mod graph;
pub mod grobner;
pub mod homology;
pub mod minor;
pub mod swiatkowski;
pub mod util;

pub use error::{Error, Result};
pub use graph::Graph;
pub use minor::MinorMorphism;
