//! Exact combinatorics of standard reverse composition tableaux.
//!
//! The crate materializes the 0-Hecke action on (skew) standard reverse
//! composition tableaux and everything that hangs off it:
//!
//! - [`compositions`]: compositions, removable nodes, the `▶` total order,
//!   and the reverse composition poset.
//! - [`tableaux`]: SRCTs and skew SRCTs with validation, exhaustive
//!   enumeration, descent data, column words, and growth words.
//! - [`hecke`]: the flips `π_i`, relation verification, and orbits.
//! - [`classes`]: the standardized-column-word equivalence classes with
//!   their unique source and sink tableaux and distinguished removable
//!   nodes.
//! - [`posets`]: the flip order on a class, weak Bruhat intervals, the
//!   isomorphism between them, lattice checks, and rank statistics.
//! - [`qsym`]: quasisymmetric Schur, canonical, and skew expansions in the
//!   fundamental basis, the monomial expansion, and a semistandard-tableau
//!   Schur oracle.
//! - [`modrep`]: explicit module matrices, characteristics, commutants,
//!   indecomposability, and restriction/branching verification.
//! - [`shifted`]: (truncated) shifted reverse tableaux with closed-form
//!   count checks.
//!
//! All arithmetic is exact: machine integers with overflow checks for
//! coefficients, big integers for counting formulas, and rationals for the
//! linear algebra.

pub mod classes;
pub mod compositions;
pub mod hecke;
pub mod linalg;
pub mod modrep;
pub mod perm;
pub mod posets;
pub mod qsym;
pub mod shifted;
pub mod tableaux;

pub use compositions::{Composition, CompositionError, SkewShapePair};
pub use hecke::{pi, pi_word, FlipResult};
pub use perm::Permutation;
pub use qsym::QSymF;
pub use tableaux::{
    canonical_tableau, enumerate_skew_srct, enumerate_srct, SkewSrct, Srct, Tableau,
};
