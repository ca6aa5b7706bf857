//! Minimal W-algebras: root data, Chevalley bases, minimal gradings and
//! singular vectors in universal affine vertex algebras.

pub mod acceptance;
pub mod affine;
pub mod chevalley;
pub mod error;
pub mod linalg;
pub mod minimal_data;
pub mod rational;
pub mod rootsys;
pub mod symmod;
pub mod tables;

pub use error::{LieError, Result};
pub use rational::{LevelPoly, Q};
