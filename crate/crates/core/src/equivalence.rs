//! Program equivalence: strong (S), strong rule (SR), strong minimal rule
//! (SMR) and strong update (SU).
//!
//! SR compares the families `{mod(r) | r ∈ P ∪ {ε}}` of per-rule SE-model
//! sets, SMR compares only their subset-minimal members, and SU holds exactly
//! when every rule in the symmetric difference of the two programs is an
//! SE-tautology. The four notions form a strict ladder
//! `SU ⇒ SR ⇒ SMR ⇒ S`.

use std::collections::BTreeMap;
use std::fmt;

use crate::canonical::secan;
use crate::domain::{Alphabet, Program, Rule, SeInterpretation, SeSet};
use crate::error::Result;
use crate::semantics::{check_program_scope, is_se_tautology, se_models, se_models_program};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Notion {
    S,
    Smr,
    Sr,
    Su,
}

impl Notion {
    pub const ALL: [Notion; 4] = [Notion::S, Notion::Smr, Notion::Sr, Notion::Su];
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Notion::S => "S",
            Notion::Sr => "SR",
            Notion::Smr => "SMR",
            Notion::Su => "SU",
        })
    }
}

/// Which of the two compared programs a witness belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An SE-model of one program that is not an SE-model of the other.
    Model { model: SeInterpretation, side: Side },
    /// A per-rule SE-model set present in one family only, with a rule of that
    /// program producing it.
    RuleModels { rule: Rule, models: SeSet, side: Side },
    /// A rule of the symmetric difference that is not an SE-tautology.
    Rule { rule: Rule, side: Side },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub alphabet: Alphabet,
    pub verdicts: BTreeMap<Notion, bool>,
    pub witnesses: BTreeMap<Notion, Witness>,
}

impl EquivalenceReport {
    pub fn verdict(&self, notion: Notion) -> bool {
        self.verdicts[&notion]
    }
}

/// The comparison alphabet used when the caller does not fix one.
pub fn default_alphabet(left: &Program, right: &Program) -> Alphabet {
    left.alphabet().union(&right.alphabet())
}

pub fn se_equivalent_rules(r1: &Rule, r2: &Rule, alphabet: &Alphabet) -> Result<bool> {
    Ok(se_models(r1, alphabet)? == se_models(r2, alphabet)?)
}

/// Same question as [`se_equivalent_rules`], answered by comparing canonical
/// forms. Needs no enumeration.
pub fn se_equivalent_rules_syntactic(r1: &Rule, r2: &Rule) -> bool {
    secan(r1) == secan(r2)
}

pub fn strongly_equivalent(left: &Program, right: &Program, alphabet: &Alphabet) -> Result<bool> {
    Ok(strong_witness(left, right, alphabet)?.is_none())
}

pub fn sr_equivalent(left: &Program, right: &Program, alphabet: &Alphabet) -> Result<bool> {
    Ok(sr_witness(left, right, alphabet)?.is_none())
}

pub fn smr_equivalent(left: &Program, right: &Program, alphabet: &Alphabet) -> Result<bool> {
    Ok(smr_witness(left, right, alphabet)?.is_none())
}

pub fn su_equivalent(left: &Program, right: &Program, alphabet: &Alphabet) -> Result<bool> {
    Ok(su_witness(left, right, alphabet)?.is_none())
}

/// SE-model sets of the rules of `program` with ε adjoined, each mapped to the
/// first rule (in program order) producing it.
fn rule_family(program: &Program, alphabet: &Alphabet) -> Result<BTreeMap<SeSet, Rule>> {
    let mut family = BTreeMap::new();
    for rule in program.rules() {
        family.entry(se_models(rule, alphabet)?).or_insert_with(|| rule.clone());
    }
    family
        .entry(SeSet::full(alphabet.clone())?)
        .or_insert(Rule::Epsilon);
    Ok(family)
}

fn minimal(family: BTreeMap<SeSet, Rule>) -> Result<BTreeMap<SeSet, Rule>> {
    let sets: Vec<SeSet> = family.keys().cloned().collect();
    let mut out = BTreeMap::new();
    for (set, rule) in family {
        let mut dominated = false;
        for other in &sets {
            if other != &set && other.is_subset(&set)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            out.insert(set, rule);
        }
    }
    Ok(out)
}

fn family_witness(
    left: &BTreeMap<SeSet, Rule>,
    right: &BTreeMap<SeSet, Rule>,
) -> Option<Witness> {
    let only = |a: &BTreeMap<SeSet, Rule>, b: &BTreeMap<SeSet, Rule>, side| {
        a.iter()
            .find(|(set, _)| !b.contains_key(*set))
            .map(|(set, rule)| Witness::RuleModels {
                rule: rule.clone(),
                models: set.clone(),
                side,
            })
    };
    only(left, right, Side::Left).or_else(|| only(right, left, Side::Right))
}

fn check_scope(left: &Program, right: &Program, alphabet: &Alphabet) -> Result<()> {
    check_program_scope(left, alphabet)?;
    check_program_scope(right, alphabet)
}

fn strong_witness(left: &Program, right: &Program, alphabet: &Alphabet) -> Result<Option<Witness>> {
    check_scope(left, right, alphabet)?;
    let a = se_models_program(left, alphabet)?;
    let b = se_models_program(right, alphabet)?;
    let witness = |x: &SeSet, y: &SeSet, side| {
        x.iter().find(|m| !y.contains(m)).map(|m| Witness::Model {
            model: m.clone(),
            side,
        })
    };
    Ok(witness(&a, &b, Side::Left).or_else(|| witness(&b, &a, Side::Right)))
}

fn sr_witness(left: &Program, right: &Program, alphabet: &Alphabet) -> Result<Option<Witness>> {
    check_scope(left, right, alphabet)?;
    Ok(family_witness(
        &rule_family(left, alphabet)?,
        &rule_family(right, alphabet)?,
    ))
}

fn smr_witness(left: &Program, right: &Program, alphabet: &Alphabet) -> Result<Option<Witness>> {
    check_scope(left, right, alphabet)?;
    Ok(family_witness(
        &minimal(rule_family(left, alphabet)?)?,
        &minimal(rule_family(right, alphabet)?)?,
    ))
}

fn su_witness(left: &Program, right: &Program, alphabet: &Alphabet) -> Result<Option<Witness>> {
    check_scope(left, right, alphabet)?;
    for (from, to, side) in [(left, right, Side::Left), (right, left, Side::Right)] {
        for rule in from.difference(to) {
            if !is_se_tautology(rule, alphabet)? {
                return Ok(Some(Witness::Rule {
                    rule: rule.clone(),
                    side,
                }));
            }
        }
    }
    Ok(None)
}

/// All four verdicts, with a witness for each negative one.
///
/// # Panics
///
/// If the verdicts break the ladder `SU ⇒ SR ⇒ SMR ⇒ S`, which would be a
/// bug in this module.
pub fn equivalence_report(left: &Program, right: &Program, alphabet: &Alphabet) -> Result<EquivalenceReport> {
    let mut verdicts = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for notion in Notion::ALL {
        let witness = decide(notion, left, right, alphabet)?;
        verdicts.insert(notion, witness.is_none());
        if let Some(w) = witness {
            witnesses.insert(notion, w);
        }
    }
    let v = |n| verdicts[&n];
    assert!(
        (!v(Notion::Su) || v(Notion::Sr))
            && (!v(Notion::Sr) || v(Notion::Smr))
            && (!v(Notion::Smr) || v(Notion::S)),
        "equivalence verdicts violate SU => SR => SMR => S: {verdicts:?}"
    );
    Ok(EquivalenceReport {
        alphabet: alphabet.clone(),
        verdicts,
        witnesses,
    })
}

/// Decides one notion and returns the witness when it fails.
pub fn decide(
    notion: Notion,
    left: &Program,
    right: &Program,
    alphabet: &Alphabet,
) -> Result<Option<Witness>> {
    match notion {
        Notion::S => strong_witness(left, right, alphabet),
        Notion::Sr => sr_witness(left, right, alphabet),
        Notion::Smr => smr_witness(left, right, alphabet),
        Notion::Su => su_witness(left, right, alphabet),
    }
}
