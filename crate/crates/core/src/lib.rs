//! Exact computation of wreath determinants for finite group-subgroup pairs.
//!
//! The central object is `Θ(G, H, φ, f) = wrdet_k X(G, H, φ, f)`, the k-wreath
//! determinant of the `|H| × |G|` matrix with entries `f(h g⁻¹)`, where `k` is
//! the index of the subgroup `H` in `G`, `φ` fixes the column order and the
//! specialization `f` assigns a polynomial to every group element. Everything
//! is computed over exact rationals; there is no floating point anywhere.
//!
//! Module map:
//! - [`exactalg`]: rationals, sparse uni/multivariate polynomials, a small
//!   expression parser, and modular-arithmetic helpers for large determinants.
//! - [`groups`]: finite groups as multiplication tables, subgroups, cosets,
//!   orderings and transversals.
//! - [`symchar`]: partitions, permutations, Murnaghan-Nakayama characters and
//!   the block-average `ω^(kⁿ)` together with the Kronecker permutations it
//!   is evaluated at.
//! - [`wreath`]: matrices over polynomial rings; determinant, α-determinant
//!   and wreath-determinant engines.
//! - [`pairs`]: specializations, pair matrices, Θ computation (direct and
//!   closed-form), group-subgroup pair graphs.
//! - [`suites`]: the named verification suites driven by the CLI.

pub mod exactalg;
pub mod groups;
pub mod pairs;
pub mod suites;
pub mod symchar;
pub mod wreath;

pub use exactalg::{MultiPoly, Rational, UniPoly, VarTable};
pub use groups::{FiniteGroup, GroupOrdering, Subgroup, Transversal};
pub use symchar::{CycleType, Partition, Permutation};
pub use wreath::PolyMatrix;
