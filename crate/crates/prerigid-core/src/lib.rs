//! Computational kernel for pre-rigid monoidal categories.
//!
//! A monoidal category is *pre-rigid* when every object `X` has a pre-dual
//! `X*` together with an evaluation `ev_X : X* ⊗ X → 𝕀` such that the map
//!
//! ```text
//! Hom(T, X*) → Hom(T ⊗ X, 𝕀),   u ↦ ev_X ∘ (u ⊗ X)
//! ```
//!
//! is bijective for every object `T`. This crate makes that bijectivity
//! *checkable at desk scale*: hom-spaces are either enumerated outright,
//! presented as finite-dimensional spaces over the exact rationals, or
//! sampled, and the universal property is certified by exhaustion, by an
//! exact rank computation, or by dagger round-trips respectively.
//!
//! The crate is organised around a small trait vocabulary ([`cat`]) with
//! concrete instances (finite relations, exact-rational vector spaces,
//! finite pomonoids, graded objects), construction recipes that build new
//! pre-rigid categories out of old ones (families, relation-indexed
//! families, diagram categories), and the lax/colax lifting machinery for
//! adjoint pairs, including the truncated free-algebra witness that
//! separates liftable from non-liftable adjunctions.
//!
//! Everything is exact: scalars are arbitrary-precision rationals, all
//! verdicts are equalities of concrete payloads, and every verifier reports
//! "verified on a finite test set", never "proved".
#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod cat;
pub mod diagram;
pub mod engine;
pub mod fam;
pub mod famrel;
pub mod finrel;
pub mod finvect;
pub mod graded;
pub mod lift;
pub mod matrix;
pub mod pomonoid;
pub mod pregroup;
pub mod rational;
pub mod report;
pub mod rng;

pub use cat::{Braided, CatError, Category, ClosedMonoidal, HomSpace, HomSpaces, Monoidal};
pub use engine::{EngineError, PreDualData, PreRigid};
pub use matrix::Mat;
pub use rational::Rat;
pub use report::{Check, Report, Status};

pub(crate) mod prelude {
    pub use alloc::borrow::ToOwned;
    pub use alloc::boxed::Box;
    pub use alloc::collections::{BTreeMap, BTreeSet};
    pub use alloc::format;
    pub use alloc::string::{String, ToString};
    pub use alloc::vec;
    pub use alloc::vec::Vec;
}
