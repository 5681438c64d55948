//! Homological invariants of bound quiver algebras over prime fields.

pub mod algebra;
pub mod linalg;
pub mod fixtures;
pub mod modules;
pub mod torsion;
pub mod complexes;
pub mod random;
pub mod bounds;
pub mod cli;
