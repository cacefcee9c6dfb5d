//! # crooked-core
//!
//! Exact-arithmetic toolkit for the constructive combinatorics of *crooked*
//! maps on the interval and the circle.
//!
//! The crate provides:
//!
//! - [`interval`] — simplicial maps on finite linear graphs, exact-rational
//!   piecewise-linear self-maps of `[0,1]`, composition, structural
//!   combinators, geometric realization, sup-metric, and moduli of
//!   continuity.
//! - [`crookedness`] — the canonical crooked maps `c_n` with lazy point
//!   evaluation, combinatorial crookedness decision, the ε-crookedness
//!   sandwich decider, and a certificate-propagation calculus.
//! - [`factorization`] — the constructive factorization algorithms:
//!   cofactorization onto the canonical crooked map, factorization of crooked
//!   maps through the canonical one, simplicial approximation, crooked
//!   approximation, the end-to-end crookedness factorization pipeline, and
//!   interval amalgamation.
//! - [`circle`] — circle self-maps as exact piecewise-linear liftings, degree
//!   calculus, circular simplicial maps with a crookedness checker, crooked
//!   circle-map generation, and a grid witness check for the failure of
//!   amalgamation among circle surjections.
//! - [`types`] — supernatural-number arithmetic, type equivalence classes,
//!   multiplication solving, degree-set membership, and the type of a degree
//!   sequence given as finite data.
//! - [`game`] — a category-parametric Banach–Mazur game engine with
//!   epsilon-schedule maintenance, the crooked / point-splitting / solenoid
//!   strategies, finite-horizon transcript verification, and the canonical
//!   doubly-exponential crooked sequence.
//!
//! ## Design principles
//!
//! **Exact arithmetic only.** All core predicates are decided over
//! arbitrary-precision rationals ([`num_rational::BigRational`]); thresholds
//! such as `3/(2n)` are sharp and floats would corrupt them. Rationals
//! serialize as `"num/den"` strings, never as decimals.
//!
//! **Certified outputs.** Every factorization result self-verifies on
//! construction (compose-and-compare, or an exact sup-distance bound), and
//! every crookedness certificate records a provenance chain that can be
//! replayed.
//!
//! **Lazy evaluation of doubly-exponential structures.** The canonical
//! crooked maps grow Pell-fast; point evaluation works at any depth via
//! recursive block descent without materialization, and materialization is
//! gated by a configurable memory bound.
//!
//! All values are immutable after construction and safe to share across
//! threads.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod circle;
pub mod crookedness;
pub mod factorization;
pub mod game;
pub mod interval;
pub mod types;

pub use interval::{Modulus, PLMap, Rat, SimplicialMap};

/// Default memory bound: the largest number of domain edges a map may have
/// before materialization is refused and only lazy evaluation is offered.
pub const DEFAULT_MEMORY_BOUND: u64 = 10_000_000;
