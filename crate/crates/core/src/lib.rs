//! Subspace inclusion graphs over finite fields.
//!
//! The inclusion graph of `V = F_q^n` has the nontrivial proper subspaces of
//! `V` as vertices, two of them adjacent when one properly contains the
//! other. This crate builds the graph, measures its invariants, and factors
//! any of its automorphisms (for `n >= 3`) as `tau^delta ∘ theta_X ∘ chi_t`:
//! orthogonal complement, an invertible linear map, and a Frobenius power.
//! An independent brute-force enumerator checks the factorization and the
//! group order on small cases.
//!
//! ```
//! use ingraph::{automorphism, field::Field, graph::InclusionGraph};
//!
//! let field: Field = "2^1".parse()?;
//! let g = InclusionGraph::build(&field, 3)?;
//! assert_eq!(g.vertex_count(), 14);
//!
//! let tau = automorphism::tau_perm(&g);
//! let d = automorphism::decompose(&g, tau.as_slice())?;
//! assert!(d.standard.delta());
//! # Ok::<(), ingraph::Error>(())
//! ```
//!
//! The guide under `book/` walks through each piece; its code listings are
//! compiled and run as doc-tests of this crate.

pub mod automorphism;
pub mod error;
pub mod field;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod search;
pub mod subspace;

pub use error::{Error, ErrorKind, Result, Violation};

// Run the guide's listings with `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/subspaces.md")]
    mod subspaces {}
    #[doc = include_str!("../../../book/src/graph.md")]
    mod graph {}
    #[doc = include_str!("../../../book/src/automorphisms.md")]
    mod automorphisms {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
