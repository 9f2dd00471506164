//! Classical models, reducts and SE-models of rules and programs.
//!
//! Everything here is computed by enumerating interpretations and testing
//! each one against the definitions; there is no symbolic shortcut.

use crate::domain::{
    all_interpretations, all_se_interpretations, Alphabet, Interpretation, Literals, Program, Rule,
    SeInterpretation, SeSet,
};
use crate::error::Result;

/// A proper rule with its atom sets encoded over an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Encoded {
    pub head_pos: Interpretation,
    pub head_neg: Interpretation,
    pub body_pos: Interpretation,
    pub body_neg: Interpretation,
}

impl Encoded {
    /// `None` for ε; scope error when the rule mentions an atom outside the
    /// alphabet.
    pub fn new(rule: &Rule, alphabet: &Alphabet) -> Result<Option<Self>> {
        let Some(l) = rule.literals() else {
            return Ok(None);
        };
        Ok(Some(Self {
            head_pos: alphabet.encode(&l.head_pos)?,
            head_neg: alphabet.encode(&l.head_neg)?,
            body_pos: alphabet.encode(&l.body_pos)?,
            body_neg: alphabet.encode(&l.body_neg)?,
        }))
    }

    /// Classical satisfaction of `⋁head ⊂ ⋀body`.
    pub fn satisfied_by(&self, x: &Interpretation) -> bool {
        let body = self.body_pos.is_subset(x) && self.body_neg.is_disjoint(x);
        let head = self.head_pos.intersects(x) || !self.head_neg.is_subset(x);
        !body || head
    }

    /// `r^J`: `None` stands for ε.
    pub fn reduct(&self, there: &Interpretation) -> Option<Self> {
        if !self.head_neg.is_subset(there) || self.body_neg.intersects(there) {
            return None;
        }
        Some(Self {
            head_pos: self.head_pos.clone(),
            head_neg: Interpretation::empty(),
            body_pos: self.body_pos.clone(),
            body_neg: Interpretation::empty(),
        })
    }

    pub fn has_se_model(&self, m: &SeInterpretation) -> bool {
        self.satisfied_by(m.there())
            && self
                .reduct(m.there())
                .is_none_or(|reduct| reduct.satisfied_by(m.here()))
    }
}

fn check_scope(rule: &Rule, alphabet: &Alphabet) -> Result<()> {
    Encoded::new(rule, alphabet).map(|_| ())
}

/// Interpretations of `alphabet` that classically satisfy `rule`.
pub fn c_models(rule: &Rule, alphabet: &Alphabet) -> Result<Vec<Interpretation>> {
    let encoded = Encoded::new(rule, alphabet)?;
    Ok(all_interpretations(alphabet)?
        .into_iter()
        .filter(|j| encoded.as_ref().is_none_or(|e| e.satisfied_by(j)))
        .collect())
}

/// The reduct `r^J` of `rule` relative to `there`. Atoms that are not part of
/// `alphabet` count as false.
pub fn reduct(rule: &Rule, alphabet: &Alphabet, there: &Interpretation) -> Rule {
    let Some(l) = rule.literals() else {
        return Rule::Epsilon;
    };
    let holds = |a| alphabet.index_of(a).is_some_and(|i| there.contains(i));
    if l.head_neg.iter().any(|a| !holds(a)) || l.body_neg.iter().any(holds) {
        return Rule::Epsilon;
    }
    Rule::Proper(Literals {
        head_pos: l.head_pos.clone(),
        body_pos: l.body_pos.clone(),
        ..Literals::default()
    })
}

/// The SE-models of `rule` over `alphabet`.
pub fn se_models(rule: &Rule, alphabet: &Alphabet) -> Result<SeSet> {
    let Some(encoded) = Encoded::new(rule, alphabet)? else {
        return SeSet::full(alphabet.clone());
    };
    let universe = all_se_interpretations(alphabet)?;
    Ok(SeSet::filtered(alphabet, &universe, |m| encoded.has_se_model(m)))
}

/// SE-interpretations that are SE-models of every rule in `program`.
pub fn se_models_program(program: &Program, alphabet: &Alphabet) -> Result<SeSet> {
    let encoded = program
        .rules()
        .map(|r| Encoded::new(r, alphabet))
        .collect::<Result<Vec<_>>>()?;
    let universe = all_se_interpretations(alphabet)?;
    Ok(SeSet::filtered(alphabet, &universe, |m| {
        encoded.iter().flatten().all(|e| e.has_se_model(m))
    }))
}

pub fn is_se_tautology(rule: &Rule, alphabet: &Alphabet) -> Result<bool> {
    se_models(rule, alphabet)?.is_full()
}

/// Whether `set` contains ⟨J, J⟩ whenever it contains some ⟨I, J⟩.
pub fn is_well_defined(set: &SeSet) -> bool {
    set.iter()
        .all(|m| set.contains(&SeInterpretation::total(m.there().clone())))
}

/// Interpretations `J` with ⟨J, J⟩ an SE-model of the program and no ⟨I, J⟩
/// with `I ⊊ J` an SE-model.
pub fn answer_sets(program: &Program, alphabet: &Alphabet) -> Result<Vec<Interpretation>> {
    let models = se_models_program(program, alphabet)?;
    Ok(models
        .iter()
        .filter(|m| m.is_total())
        .filter(|total| {
            !models
                .iter()
                .any(|m| m.there() == total.there() && !m.is_total())
        })
        .map(|m| m.there().clone())
        .collect())
}

pub(crate) fn check_program_scope(program: &Program, alphabet: &Alphabet) -> Result<()> {
    program.rules().try_for_each(|r| check_scope(r, alphabet))
}
