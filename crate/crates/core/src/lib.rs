//! Exact combinatorics of Iwahori-orbit closures in affine Grassmannians.
//!
//! The central object is the set `Ψ(λ)` of coweights `μ` whose Iwahori orbit
//! lies in the closure of the orbit of `λ`. It is computed three ways: by the
//! `S(μ, α)` filtration ([`psi::psi_infinity`]), by closure under R-operators
//! ([`rops::r_closure`]), and by brute-force Bruhat comparison in the affine
//! Weyl group ([`psi::psi_by_oracle`]).

pub mod afweyl;
pub mod components;
pub mod error;
pub mod kmweights;
pub mod polytope;
pub mod psi;
pub mod rootsys;
pub mod rops;
pub mod selftest;

pub use afweyl::{AffineRoot, AffineWeylElement, BruhatOracle};
pub use components::ComponentIndex;
pub use error::{Error, Result};
pub use psi::PsiSet;
pub use rootsys::{CartanType, Coweight, Root, RootSystem, WeylElement};
