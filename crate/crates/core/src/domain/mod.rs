//! Alphabets, interpretations, SE-interpretations, rules and programs.

mod alphabet;
mod interpretation;
mod rule;
mod se;

pub use alphabet::{Alphabet, Atom, Limits};
pub(crate) use alphabet::is_atom_lexeme;
pub use interpretation::Interpretation;
pub use rule::{AtomSet, Literals, Program, Rule};
pub use se::{all_interpretations, all_se_interpretations, SeInterpretation, SeSet};
pub(crate) use se::subsets_of;
