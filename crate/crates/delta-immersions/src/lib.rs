//! Immersions between finite Δ-complexes through inverse monoids.
//!
//! A connected Δ-complex labeled over a one-vertex base complex carries
//! an inverse monoid of generators `X ∪ P` (edge letters and cell
//! letters) acting on its 0-cells by partial injections. This crate
//! makes that machinery executable:
//!
//! * [`word`]: alphabets and words with involution;
//! * [`automaton`]: birooted inverse automata and Stallings-style
//!   folding;
//! * [`complex`]: the semi-simplicial data model, validation, boundary
//!   labels, and the word action;
//! * [`monoid`]: the presented inverse monoid of a base complex, its
//!   word problem and natural partial order via Schützenberger
//!   automata, Munn trees, and fundamental-group presentations;
//! * [`immersion`]: cell maps, immersion and covering checks,
//!   isomorphism of labeled complexes;
//! * [`coset`]: ω-coset automata of finitely generated closed inverse
//!   submonoids, conjugacy witnesses, and the lifted complex with its
//!   immersion.
//!
//! Start with the runnable examples (`cargo run --example ...`); the
//! `dimm` binary exposes the same operations on JSON files.

pub mod automaton;
pub mod complex;
pub mod coset;
mod error;
pub mod immersion;
pub mod monoid;
pub mod samples;
pub mod word;

pub use automaton::InverseAutomaton;
pub use complex::{
    BaseComplex, CellRef, ComplexBuilder, DeltaComplex, Diagnostic, DiagnosticCode, Diagnostics,
    Vertex,
};
pub use coset::{
    are_conjugate, build_complex, build_complex_detailed, coset_automaton,
    coset_automaton_detailed, CosetAutomaton, LiftedComplex, SubmonoidSpec,
};
pub use error::{Error, Result};
pub use immersion::{
    check_immersion, complex_isomorphic, compose, infer_map, is_covering, CellMap,
};
pub use monoid::{munn_tree, ClosureConfig, ClosureStats, Presentation, SchutzCache};
pub use word::{Alphabet, Letter, Word};
