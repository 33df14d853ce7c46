//! Exact linear algebra over prime fields and the rationals.
//!
//! The crate treats linear maps out of coordinate spaces F^n as the
//! primitive objects.  Dimension, bases, spans, independence, quotients,
//! and rank–nullity are all computed by constructive procedures that
//! exhibit an explicit injective or surjective map as the witness, and a
//! naive enumeration oracle over small finite fields cross-checks the
//! structured algorithms.
//!
//! All arithmetic is exact: residues mod a prime p, or arbitrary-precision
//! rationals.  Every canonical form (reduced scalars, reduced row echelon
//! bases, coset representatives) is deterministic, so results compare and
//! print byte-identically across runs.

pub mod classify;
pub mod dimension;
pub mod error;
pub mod field;
pub mod io;
pub mod map;
pub mod matrix;
pub mod oracle;
pub mod sample;
pub mod space;

pub use classify::{classify, linear_combination_of, unique_representation_check, SetClassification};
pub use dimension::{
    build_injective_sequence, extend_injective, extend_to_basis, extract_basis,
    isomorphic_dimension, rank_nullity, BasisExtension, BasisExtraction, DimensionWitness,
    ExtractionStep, InjectiveSequence, RankNullity, SequenceStep,
};
pub use error::Error;
pub use field::{FieldElement, FieldSpec};
pub use map::{EmbedTruncate, LinearMap};
pub use matrix::{Matrix, RrefResult, Vector};
pub use oracle::{
    enumerate_vectors, oracle_dimension, oracle_image, oracle_injective, oracle_span,
    EnumerationBudget, VectorEnumeration,
};
pub use space::{factor_map, Coset, QuotientSpace, Space};
