//! Mechanical verification of algebraic structure carried by symmetric
//! monoidal categories, at desk scale and with exact arithmetic.
//!
//! The library builds three layers and checks the laws tying them together
//! by exhaustive enumeration within configurable bounds:
//!
//! * [`props`]: strict symmetric monoidal theories on the naturals:
//!   bijections, involution-marked wires, finite-set functions and their
//!   duals, cospans (composed by pushout), and matchings-with-circles,
//!   plus free terms over finitely presented theories.
//! * [`smc`]: symmetric monoidal categories with explicit coherence data:
//!   relations over flattened or nested elements, sets and functions,
//!   rational matrices under the Kronecker product, the one-object
//!   category, and any prop viewed as a category. Canonical isomorphisms
//!   between arbitrary bracketings are built uniformly in
//!   [`smc::coherence`].
//! * [`supply`]: assignments of the structure of a prop to every object
//!   of a category, compatibly with its tensor and unit, together with
//!   checkers for the defining squares, the homomorphism property, and the
//!   monoidal subcategory of homomorphisms.
//!
//! [`constructions`] transports supplies along prop functors, strict
//! surjections, biproducts, and strictification; [`suites`] names ready-made
//! verification suites, which the `supplycat` binary runs from the command
//! line. Every check emits a [`report::CheckReport`] whose failures carry
//! fully rendered counterexample morphisms.

pub mod constructions;
pub mod finset;
pub mod props;
pub mod report;
pub mod smc;
pub mod suites;
pub mod supply;
