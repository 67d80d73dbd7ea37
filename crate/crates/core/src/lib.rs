//! Exact computation with LCM monoids and the structures they generate.
//!
//! A cancellative monoid is *LCM* when principal right ideals pairwise
//! intersect in principal right ideals (or not at all), and likewise on the
//! left. From one monoid this crate builds, with integer-exact arithmetic
//! throughout:
//!
//! - the calculus of constructible subsets of the division relation
//!   ([`constructible`]),
//! - an inverse semigroup of validated triples `[p,q,r]` with product, star,
//!   natural order and a group-labeling prehomomorphism ([`isg`]),
//! - finite truncations of its idempotent semilattice, filters,
//!   ultrafilters, covers, and the action on filter pairs ([`spectra`]),
//! - finite-dimensional partial-permutation shadows of the generating
//!   operators, word reduction to normal form, and the diagonal expectation
//!   ([`operator`]),
//! - for free monoids, the cocycle, the shift action on bi-infinite
//!   sequences and its groupoid of germs ([`shift`]),
//! - for self-similar products, the monomial algebra under the standard
//!   isometry/unitary relations ([`monomial`]).
//!
//! Shipped instances: the free monoid `X*`, the grid `N^k`, and Zappa–Szép
//! products `X* ⋈ G` with an exact odometer backend and user-supplied
//! automaton backends ([`instances`]).

pub mod constructible;
pub mod error;
pub mod instances;
pub mod isg;
pub mod label;
pub mod monoid;
pub mod monomial;
pub mod operator;
pub mod shift;
pub mod spectra;
pub mod suites;
pub mod word;

pub use error::{Error, Result};
pub use monoid::{LcmMonoid, LcmWitness, Opposite, Side};
pub use word::Word;
