//! Exact-arithmetic toolkit for cyclic orbifolds of holomorphic vertex
//! operator algebras.
//!
//! Everything here is computed over ℚ and over cyclotomic fields ℚ(ζ_M);
//! there is no floating point anywhere in a result path.  The main layers:
//!
//! * [`exactmath`] — arbitrary-precision rationals, cyclotomic numbers,
//!   exact linear algebra, Smith normal form and an exact simplex with
//!   Farkas certificates.
//! * [`qseries`] — truncated Puiseux q-expansions with cyclotomic
//!   coefficients; Dedekind eta, eta quotients from cycle shapes and the
//!   Eisenstein series E₂, E₁₄.
//! * [`modular`] — closed-form modular objects (eta factors and
//!   vector-valued lattice theta components) with an exact SL₂(ℤ) action.
//! * [`quadform`] — finite quadratic modules, Weil representations,
//!   Verlinde fusion and the order-n² fusion group of a cyclic orbifold.
//! * [`cocycle`] — normalised abelian 3-cocycles on finite abelian groups.
//! * [`liealg`] — simple Lie algebra root data, integrable weights,
//!   Freudenthal multiplicities and exact power sums.
//! * [`classify`] — the central charge 24 classification engine: candidate
//!   enumeration, linear systems in the module multiplicities and the
//!   exact feasibility cascade.
//! * [`lattice`] — even lattices, Niemeier glue constructions, lattice
//!   automorphisms with cycle shapes, theta series and the orbifold
//!   character pipeline.

pub mod exactmath;
pub mod qseries;
pub mod modular;
pub mod quadform;
pub mod cocycle;
pub mod liealg;
pub mod classify;
pub mod lattice;
pub mod util;
