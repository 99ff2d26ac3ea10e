//! Finite Menger algebras: evaluation, translation closures, principal
//! congruences and strong-subset recognition.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod principal;
pub mod relations;
pub mod subset;
pub mod suite;
pub mod term;

pub use algebra::{ArgVector, Counterexample, Element, MengerAlgebra, Validation};
pub use error::{Error, Result};
pub use principal::{
    check_strong_class_theorems, full_analysis, is_bistrong, is_l_strong, is_strong, l_analysis,
    v_analysis, CongruenceKind, PrincipalAnalysis, StrongMethod,
};
pub use relations::{
    check_partially_v_cancellative, check_relation_property, check_subset_property,
    meet_partitions, PartialPartition, Partition, RelationProperty, SubsetProperty, Verdict,
    Witness, WitnessValue,
};
pub use subset::Subset;
pub use term::{
    associate_polynomial, parse_term, translation_closure, TranslationClosure, TranslationTable,
    TranslationTerm,
};
