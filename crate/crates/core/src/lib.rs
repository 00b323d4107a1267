//! Fundamental groups of circle bundles over closed orientable surfaces.
//!
//! The bundle with Euler number `k` over the genus-`g` surface has
//! fundamental group
//!
//! ```text
//! < A1, B1, ..., Ag, Bg, z | z central, [A1,B1]...[Ag,Bg] = z^k >
//! ```
//!
//! This crate solves its word problem exactly, builds the standard maps
//! between automorphisms of this group and of the surface group, and checks
//! the point-pushing identity `sigma(Push(t)) = C_{iota t} ∘ transvection(k [t])`
//! on random samples.

pub mod bundle;
pub mod endo;
pub mod error;
pub mod fixtures;
pub mod homology;
pub mod maps;
pub mod oracle;
pub mod push;
pub mod sample;
pub mod surface;
pub mod verify;
pub mod word;

pub use bundle::{BundleContext, BundleElement, TorusNormalForm};
pub use endo::{certify_inverse, BundleEndo, Conjugation, FreeEndo};
pub use error::{Error, Result};
pub use homology::{
    abelianize, intersection, is_symplectic_action, poincare_delta, poincare_delta_inverse,
    CohomologyClass, HomologyClass, IntMatrix, Orientation,
};
pub use maps::{inner, iota, phi, sigma, tau, transvection};
pub use oracle::{bfs_oracle_trivial, OracleConfig};
pub use push::{FreeAut, PushTable};
pub use surface::{dehn_reduce, is_trivial_surface, surface_equal, DehnResult, SurfaceContext};
pub use verify::{Check, CheckResult, Statement, VerificationReport, Verifier, VerifyConfig};
pub use word::{commutator, free_reduce, surface_relator, Alphabet, FreeWord, Kind, Letter};
