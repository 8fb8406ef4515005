//! Exact counting of principal series (maximal chains of subgroups) in
//! finite abelian and nilpotent groups.
//!
//! The count for an abelian p-group is a polynomial in p computed three
//! independent ways — a maximal-subgroup recurrence, a binomial closed form
//! for two factors, and a ballot-number form — and the polynomial engine is
//! grounded in an explicit combinatorial model: words over {N, E} encoding
//! lattice paths, their arch decomposition, a symbol weight function, and a
//! constructive bijection onto ballot words. A brute-force subgroup-lattice
//! oracle cross-checks every formula on small groups.
//!
//! Modules:
//! - [`exactmath`]: big-integer combinatorics and sparse polynomials
//! - [`words`]: path words, classification, arch decomposition, enumeration
//! - [`weights`]: symbol/word weights and weights of path families
//! - [`bijection`]: the arch-to-ballot bijection and its inverse
//! - [`chains`]: recurrence, closed forms, nilpotent composition
//! - [`group_oracle`]: subgroup-lattice ground truth

pub mod bijection;
pub mod chains;
pub mod error;
pub mod exactmath;
pub mod group_oracle;
pub mod weights;
pub mod words;

pub use error::{Error, Result};
pub use exactmath::{BigNat, PPolynomial};
pub use words::{LatticePoint, Symbol, Word};
