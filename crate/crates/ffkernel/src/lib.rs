//! Exact symbolic computations with Segal–Sugawara vectors for loop algebras
//! of simple Lie algebras, the symmetrisation map, the map 𝗆, and their
//! specializations to Mishchenko–Fomenko and Gaudin subalgebras.

pub mod field;
pub mod invariants;
pub mod liealg;
pub mod linalg;
pub mod mmap;
pub mod rational;
pub mod special;
pub mod ssvec;
pub mod suite;
pub mod sympoly;
pub mod uea;
pub mod var;

pub use rational::Q;
