//! Countermodels of a rule as a pair of intervals in the powerset lattice,
//! and the rule-representability decision built on it.
//!
//! For a proper rule, ⟨I, J⟩ is *not* an SE-model exactly when
//! `J ∈ L₂ ∧ (I ∈ L₁ ∨ J ∈ L₁)` with
//! `L₁ = [B⁺, L∖H⁺]` and `L₂ = [H⁻ ∪ B⁺, L∖B⁻]`.

use std::fmt;

use crate::domain::{all_se_interpretations, Alphabet, Interpretation, Literals, Rule, SeSet};
use crate::error::Result;
use crate::semantics::{se_models, Encoded};
use crate::{oracle, reconstruct};

/// `{X : bot ⊆ X ⊆ top}`. Every convex sublattice of a finite powerset
/// lattice is of this form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Interval {
    Empty,
    Span {
        bot: Interpretation,
        top: Interpretation,
    },
}

impl Interval {
    /// Normalizes to [`Interval::Empty`] when `bot ⊄ top`.
    pub fn new(bot: Interpretation, top: Interpretation) -> Self {
        if bot.is_subset(&top) {
            Interval::Span { bot, top }
        } else {
            Interval::Empty
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Interval::Empty)
    }

    pub fn contains(&self, x: &Interpretation) -> bool {
        match self {
            Interval::Empty => false,
            Interval::Span { bot, top } => bot.is_subset(x) && x.is_subset(top),
        }
    }

    pub fn bounds(&self) -> Option<(&Interpretation, &Interpretation)> {
        match self {
            Interval::Empty => None,
            Interval::Span { bot, top } => Some((bot, top)),
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Interval::Empty => f.write_str("[]"),
            Interval::Span { bot, top } => write!(f, "[{bot:?}, {top:?}]"),
        }
    }
}

/// `(L₁, L₂)` for a proper rule; ε has no countermodels and gets two empty
/// intervals.
pub fn rule_to_countermodel_intervals(rule: &Rule, alphabet: &Alphabet) -> Result<(Interval, Interval)> {
    let Some(e) = Encoded::new(rule, alphabet)? else {
        return Ok((Interval::Empty, Interval::Empty));
    };
    let n = alphabet.len();
    let first = Interval::new(e.body_pos.clone(), e.head_pos.complement(n));
    let second = Interval::new(e.head_neg.union(&e.body_pos), e.body_neg.complement(n));
    Ok((first, second))
}

/// `{⟨I, J⟩ : I ∈ L₁ ∧ J ∈ L₂} ∪ {⟨I, J⟩ : J ∈ L₁ ∩ L₂}`
pub fn interval_complement(first: &Interval, second: &Interval, alphabet: &Alphabet) -> Result<SeSet> {
    let universe = all_se_interpretations(alphabet)?;
    Ok(SeSet::filtered(alphabet, &universe, |m| {
        let (i, j) = (m.here(), m.there());
        (first.contains(i) && second.contains(j)) || (first.contains(j) && second.contains(j))
    }))
}

/// The rule whose countermodels are described by `(L₁, L₂)`:
/// `H⁺ = L∖⊤₁`, `H⁻ = ⊥₂`, `B⁺ = ⊥₁`, `B⁻ = L∖⊤₂`.
///
/// If either interval is empty the described complement is empty, so the
/// result is ε.
pub fn intervals_to_rule(first: &Interval, second: &Interval, alphabet: &Alphabet) -> Rule {
    let (Some((bot1, top1)), Some((bot2, top2))) = (first.bounds(), second.bounds()) else {
        return Rule::Epsilon;
    };
    let n = alphabet.len();
    let names = |x: &Interpretation| alphabet.decode(x).into_iter().collect();
    Rule::Proper(Literals {
        head_pos: names(&top1.complement(n)),
        head_neg: names(bot2),
        body_pos: names(bot1),
        body_neg: names(&top2.complement(n)),
    })
}

/// How [`is_rule_representable`] decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Every member of S must be an SE-model of the induced rule.
    Induced,
    /// The complement of S must match the interval pair of the induced rule.
    Lattice,
    /// Scan every rule over the alphabet.
    Brute,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representability {
    pub representable: bool,
    /// A rule with exactly the SE-models in S, when one exists.
    pub witness: Option<Rule>,
}

pub fn is_rule_representable(set: &SeSet, method: Method) -> Result<Representability> {
    let alphabet = set.alphabet();
    match method {
        Method::Induced => {
            let rule = reconstruct::induce_rule(set)?;
            let representable = set.is_subset(&se_models(&rule, alphabet)?)?;
            Ok(Representability {
                representable,
                witness: representable.then_some(rule),
            })
        }
        Method::Lattice => {
            let rule = reconstruct::induce_rule(set)?;
            let (first, second) = rule_to_countermodel_intervals(&rule, alphabet)?;
            let representable = interval_complement(&first, &second, alphabet)? == set.complement()?;
            Ok(Representability {
                representable,
                witness: representable.then(|| intervals_to_rule(&first, &second, alphabet)),
            })
        }
        Method::Brute => {
            let witness = oracle::brute_representable(set)?;
            Ok(Representability {
                representable: witness.is_some(),
                witness,
            })
        }
    }
}
