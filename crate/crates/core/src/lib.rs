pub mod algebra;
pub mod field;
pub mod format;
pub mod group;
pub mod invariants;
pub mod linalg;
pub mod replicate;
pub mod symmetry;
