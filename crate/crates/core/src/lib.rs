//! Exact computation of two-sided ideal lattices for Steinberg algebras of
//! finite ample groupoids and for Leavitt path algebras of finite directed
//! graphs, over the coefficient rings `Z`, `Z/n`, and finite products of
//! those.
//!
//! The crate works at three levels that mirror each other:
//!
//! * **Coefficient rings** ([`ring`]): principal ideals of `Z` and `Z/n` in
//!   canonical generator form, with sum, intersection, and containment
//!   carried out as gcd/lcm/divisibility arithmetic.
//! * **Groupoids and their algebras** ([`groupoid`], [`algebra`]): finite
//!   discrete groupoids with an explicit composition table, convolution
//!   algebras over finite coefficient rings, and brute-force enumeration of
//!   all two-sided ideals in canonical triangular-basis form.
//! * **Lattice parameterizations** ([`graph`], [`pi`]): saturated hereditary
//!   vertex sets of a directed graph, invariant open unit sets of a
//!   groupoid, and the order-reversing ideal-valued functions on those
//!   lattices that classify the ideals of the associated algebras. Joins,
//!   meets, and containment of ideals are computed entirely on that
//!   parameterization and can be cross-checked against the brute-force
//!   enumeration.
//!
//! Everything is exact integer arithmetic; there are no floating-point
//! tolerances anywhere. All enumerative operations carry explicit budgets
//! and fail loudly instead of silently truncating.
//!
//! The crate is `no_std` (it requires `alloc`); IO, serialization, and the
//! command-line front end live in the companion `steinberg-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod graph;
pub mod groupoid;
pub mod howell;
pub mod pi;
pub mod ring;

pub use algebra::{AlgebraElement, AlgebraIdeal, SteinbergAlgebra};
pub use graph::{Graph, LassoPath, ShLattice};
pub use groupoid::{FiniteGroupoid, UnitSet};
pub use pi::{CarrierLattice, Monomial, PiFunction};
pub use ring::{RIdeal, RingElement, RingSpec};
