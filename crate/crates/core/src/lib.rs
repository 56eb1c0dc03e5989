//! Exact structural analysis of finite-dimensional coalgebras and their
//! comodules over ℚ or a prime field.
//!
//! The crate takes a coalgebra presented by sparse structure constants,
//! optionally a comodule over it, and computes — in exact arithmetic —
//! the operators that drive the theory: annihilators between the module
//! and the dual algebra, closures, components over subcoalgebras, wedges
//! (always available through two independent formulas that can be
//! cross-checked), the coradical and socle, link graphs of simple
//! subcoalgebras and of minimal closed subcomodules, and the direct-sum
//! decompositions those graphs induce. On top sit classification flags
//! and a self-check catalog ([`decomp::verify_structure`]) that recomputes
//! the structural identities from scratch on every instance.
//!
//! Determinism is a design rule: subspaces are kept in reduced row-echelon
//! form, iteration orders are fixed, and randomized twists are seeded, so
//! every analysis is byte-for-byte reproducible.

pub mod builders;
pub mod coalgebra;
pub mod comodule;
pub mod decomp;
pub mod error;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod radical;
pub mod rng;
pub mod subspace;

pub use coalgebra::{Coalgebra, DeltaEntry, Subcoalgebra, WedgeMode, WedgeTower};
pub use comodule::{Comodule, MinimalClosed, RhoEntry, Subcomodule, WeakClosedVerdict};
pub use decomp::{
    classify, coalgebra_link_graph, comodule_link_graph, decompose_coalgebra, decompose_comodule,
    verify_structure, AnalysisOptions, CheckResult, CheckStatus, Classification,
    DecompositionReport, LinkGraph,
};
pub use error::{Error, Result};
pub use field::{Field, FieldElem};
pub use matrix::Matrix;
pub use subspace::Subspace;
