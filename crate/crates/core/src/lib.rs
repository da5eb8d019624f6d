pub mod catalog;
pub mod constructions;
pub mod error;
pub mod exterior;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod structures;
