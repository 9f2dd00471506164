//! SE-model semantics for individual logic-program rules.
//!
//! Rules are read as here-and-there formulas and compared through their sets
//! of SE-models. The crate computes those sets, maps every rule to the unique
//! canonical rule with the same SE-models, reconstructs rules from sets of
//! SE-interpretations, decides when such a set is expressible by one rule, and
//! compares programs under strong, strong-rule, strong-minimal-rule and
//! strong-update equivalence.

pub mod canonical;
pub mod domain;
pub mod equivalence;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod parser;
pub mod reconstruct;
pub mod semantics;

pub use domain::{
    all_interpretations, all_se_interpretations, Alphabet, Atom, AtomSet, Interpretation, Limits,
    Literals, Program, Rule, SeInterpretation, SeSet,
};
pub use error::{Error, Result};
