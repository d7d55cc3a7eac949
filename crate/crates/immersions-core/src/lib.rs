//! Enumeration, counting and classification of closed curves with `n` double
//! points immersed in closed orientable surfaces.
//!
//! Everything is finite and combinatorial: a curve shadow is encoded as one or
//! two permutations (four different encodings are supported, each convenient
//! for a different job), topological equivalence becomes conjugation by a
//! finite reparametrisation group, and counting equivalence classes becomes
//! either an explicit orbit sweep over a ranked universe of codes or exact
//! double-coset arithmetic over cycle-type profiles.
//!
//! Module map:
//!
//! * [`perm`] — permutation arithmetic, cycle structure, lexicographic
//!   ranking, integer partitions, exact big-integer class sizes.
//! * [`groups`] — the reparametrisation groups that act on codes, as
//!   generator sets with exact orders and on-demand materialisation.
//! * [`cosets`] — cycle-type profiles of those groups and exact class
//!   counting via double-coset (Frobenius) arithmetic.
//! * [`encodings`] — the four curve encodings (`XCode`, `YCode`, `UCode`,
//!   `ZCode`), genus computation, validity tests, generators, conversions.
//! * [`maps`] — rotation systems (fat graphs): faces, genus, planarity with
//!   inserted virtual crossings, underlying multigraphs.
//! * [`orbits`] — ranked universes of codes and the shard-based orbit sweep
//!   engine (parallel with the `parallel` feature, sequential otherwise).
//! * [`census`] — the full classification pipeline: symmetry types under
//!   reversal / mirror / colour-swap, count tables for all equivalence kinds,
//!   diagram filters (kink-free, prime), verification of internal sum rules.
//! * [`exec`] — parallelism controls shared by the heavy operations.

pub mod census;
pub mod cosets;
pub mod encodings;
pub mod exec;
pub mod groups;
pub mod maps;
pub mod orbits;
pub mod perm;

mod small;

pub use perm::{
    centralizer_order, class_size, factorial, partitions_of, perm_rank, perm_unrank, CycleType,
    Perm, PermError,
};
