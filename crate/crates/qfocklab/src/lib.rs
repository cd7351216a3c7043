//! Numerical laboratory for q-deformed Fock spaces over orthogonal
//! representations of the reals.
//!
//! The crate builds finite truncations of the full construction — deformed
//! inner products, graded creation/annihilation/field operators, the modular
//! operator and conjugation of the vacuum state — and checks the closed-form
//! identities that govern them against exact combinatorial oracles.
//!
//! Modules, bottom-up:
//!
//! - [`qcomb`] — exact q-combinatorics: inversions, pair-partition
//!   crossings, q-factorials, q-Hermite polynomials. Ground truth for every
//!   floating-point number elsewhere.
//! - [`repn`] — finite-dimensional orthogonal representations: fixed
//!   directions plus 2x2 rotation blocks, the analytic generator `A`, the
//!   deformed inner product and the `A`-eigenbasis.
//! - [`fock`] — the truncated q-Fock space: graded word basis, level Gram
//!   forms, creation/annihilation/field operators, Wick words.
//! - [`modular`] — modular data of the vacuum state: `Delta^z`, the modular
//!   conjugation `J`, the second-quantized flow, closed-form `Delta`-norms.
//! - [`analysis`] — generator-subalgebra diagnostics: Hilbert-Schmidt and
//!   nuclearity certificates, the fixed-vector dichotomy, moment tables and
//!   a numerical commutant probe.
//! - [`cli`] — JSON-configured batch runs with deterministic JSON/CSV
//!   reports; the `qfocklab` binary is a thin wrapper around it.
//!
//! The `examples/` directory walks through each capability; `cargo run
//! --example` each of them, or start with `delta_norms` and `q_moments`.

pub mod analysis;
pub mod cli;
pub mod fock;
pub mod modular;
pub mod qcomb;
pub mod repn;
