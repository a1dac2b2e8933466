//! Exact computational algebra for finite quandles and their quandle rings.
//!
//! A quandle is a set with a binary operation `*` that is idempotent
//! (`x*x = x`), right-invertible (every right multiplication `R_y: x -> x*y`
//! is a bijection) and right self-distributive
//! (`(x*y)*z = (x*z)*(y*z)`). The quandle ring `k[X]` is the free module on
//! basis `{e_x}` with the bilinear product `e_x e_y = e_{x*y}`; it is
//! nonassociative for every nontrivial quandle.
//!
//! This crate provides:
//!
//! * [`quandle`] — construction, validation and classification of finite
//!   quandles, plus automorphism / homomorphism / exhaustive-table searches;
//! * [`zlattice`] — an exact integer-lattice engine (canonical row Hermite
//!   normal form, membership, Smith invariant factors);
//! * [`qring`] — quandle-ring arithmetic over exact coefficient domains
//!   (arbitrary-precision integers, rationals, prime fields), the
//!   augmentation ideal `Δ` and its right-normed power filtration;
//! * [`idempotents`] — bounded exhaustive idempotent enumeration, the
//!   associated quadratic Diophantine systems, closed-form families, and
//!   ring-automorphism verification / block decomposition for the order-6
//!   involutory quandle;
//! * [`corez`] — exact computations in the quandle ring of the infinite
//!   quandle `Core(Z)` (`e_i e_j = e_{2j-i}`) and the dyadic-rational
//!   quandle probe.
//!
//! Every computation is exact: no floating point is used anywhere.
//!
//! With the default `parallel` feature the large search sweeps
//! (idempotent boxes, Diophantine boxes, table enumeration) are
//! data-parallel via rayon; results are merged deterministically so output
//! never depends on scheduling. Disabling the feature falls back to the
//! sequential implementations, which are also exported separately (`*_seq`)
//! for benchmarking and cross-checking.

pub mod caps;
pub mod corez;
pub mod idempotents;
mod par;
pub mod perm;
pub mod qring;
pub mod quandle;
pub mod zlattice;

pub use caps::Caps;
pub use quandle::{FiniteGroup, PropertyReport, Quandle};
pub use zlattice::Lattice;
