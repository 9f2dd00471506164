//! Exhaustive enumerators used as referees: every rule over a small
//! alphabet, the SE-equivalence classes they fall into, brute-force
//! representability, and closure experiments on rule-representable sets.

use std::collections::BTreeMap;
use std::fmt;

use crate::canonical::{is_canonical, secan};
use crate::domain::{all_se_interpretations, subsets_of, Alphabet, Literals, Rule, SeSet};
use crate::error::Result;
use crate::lattice::{interval_complement, Interval};
use crate::reconstruct::induce_rule;
use crate::semantics::{se_models, Encoded};

/// All 16^n proper rules over the alphabet: each atom is independently in or
/// out of each of `H⁺`, `H⁻`, `B⁺`, `B⁻`. Rule `k` puts atom `i` in the sets
/// selected by bits `4i..4i+4` of `k`, in that order, so rule 0 is `:-.`.
pub fn enumerate_rules(alphabet: &Alphabet) -> Result<Vec<Rule>> {
    alphabet.check_rule_enumerable()?;
    let atoms = alphabet.atoms();
    let count = 1u64 << (4 * atoms.len());
    Ok((0..count)
        .map(|k| {
            let mut l = Literals::default();
            for (i, atom) in atoms.iter().enumerate() {
                let state = k >> (4 * i) & 0xF;
                for (bit, set) in [
                    &mut l.head_pos,
                    &mut l.head_neg,
                    &mut l.body_pos,
                    &mut l.body_neg,
                ]
                .into_iter()
                .enumerate()
                {
                    if state >> bit & 1 == 1 {
                        set.insert(atom.clone());
                    }
                }
            }
            Rule::Proper(l)
        })
        .collect())
}

/// ε followed by every canonical proper rule over the alphabet.
pub fn canonical_rules(alphabet: &Alphabet) -> Result<Vec<Rule>> {
    let mut out = vec![Rule::Epsilon];
    out.extend(enumerate_rules(alphabet)?.into_iter().filter(is_canonical));
    Ok(out)
}

/// Number of canonical rules over `n` atoms, ε included: `6^n − 4^n + 3^n + 1`.
///
/// Each atom of a canonical proper rule is in one of six states (absent, `B⁺`,
/// `B⁻`, `H⁺`, `H⁻`, `H⁺` and `H⁻`); the `4^n − 3^n` assignments with a
/// negative head but no positive head are excluded.
pub fn closed_form_class_count(n: u32) -> u128 {
    6u128.pow(n) - 4u128.pow(n) + 3u128.pow(n) + 1
}

/// Each distinct SE-model set among all rules over the alphabet, mapped to
/// its canonical rule. The full set maps to ε.
pub fn se_classes(alphabet: &Alphabet) -> Result<BTreeMap<SeSet, Rule>> {
    let mut classes = BTreeMap::new();
    classes.insert(SeSet::full(alphabet.clone())?, Rule::Epsilon);
    for rule in enumerate_rules(alphabet)? {
        let models = se_models(&rule, alphabet)?;
        classes.entry(models).or_insert_with(|| secan(&rule));
    }
    Ok(classes)
}

/// Number of distinct SE-model sets among all rules over the alphabet,
/// counting the class of ε.
pub fn count_se_classes(alphabet: &Alphabet) -> Result<usize> {
    Ok(se_classes(alphabet)?.len())
}

/// The first enumerated rule whose SE-models are exactly `set`.
pub fn brute_representable(set: &SeSet) -> Result<Option<Rule>> {
    let alphabet = set.alphabet();
    let rules = enumerate_rules(alphabet)?;
    let universe = all_se_interpretations(alphabet)?;
    let wanted: Vec<bool> = universe.iter().map(|m| set.contains(m)).collect();
    // ε represents the full set, even over an empty alphabet
    if set.is_full()? {
        return Ok(Some(Rule::Epsilon));
    }
    for rule in rules {
        let Some(encoded) = Encoded::new(&rule, alphabet)? else { continue };
        if universe.iter().zip(&wanted).all(|(m, &w)| encoded.has_se_model(m) == w) {
            return Ok(Some(rule));
        }
    }
    Ok(None)
}

/// Every interval of the alphabet's powerset lattice, the empty one first.
pub fn all_intervals(alphabet: &Alphabet) -> Result<Vec<Interval>> {
    let mut out = vec![Interval::Empty];
    for m in all_se_interpretations(alphabet)? {
        out.push(Interval::new(m.here().clone(), m.there().clone()));
    }
    Ok(out)
}

/// Exhaustive search for a pair of intervals whose induced countermodel set
/// is the complement of `set`.
pub fn interval_representable(set: &SeSet) -> Result<Option<(Interval, Interval)>> {
    let alphabet = set.alphabet();
    alphabet.check_rule_enumerable()?;
    let complement = set.complement()?;
    let intervals = all_intervals(alphabet)?;
    for first in &intervals {
        for second in &intervals {
            if interval_complement(first, second, alphabet)? == complement {
                return Ok(Some((first.clone(), second.clone())));
            }
        }
    }
    Ok(None)
}

/// Largest alphabet for [`all_se_sets`]; three atoms would already mean 2^27 sets.
pub const SE_SET_SWEEP_ATOMS: usize = 2;

/// Every subset of the alphabet's SE-interpretations (2^(3^n) sets).
pub fn all_se_sets(alphabet: &Alphabet) -> Result<Vec<SeSet>> {
    if alphabet.len() > SE_SET_SWEEP_ATOMS {
        return Err(crate::Error::EnumerationLimit {
            what: "sets of SE-interpretations",
            size: alphabet.len(),
            cap: SE_SET_SWEEP_ATOMS,
        });
    }
    let universe = all_se_interpretations(alphabet)?;
    let indices = crate::Interpretation::full(universe.len());
    subsets_of(&indices)
        .into_iter()
        .map(|pick| SeSet::new(alphabet.clone(), pick.iter().map(|k| universe[k].clone())))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosureOp {
    Union,
    Intersection,
}

impl ClosureOp {
    fn apply(self, a: &SeSet, b: &SeSet) -> Result<SeSet> {
        match self {
            ClosureOp::Union => a.union(b),
            ClosureOp::Intersection => a.intersection(b),
        }
    }
}

impl fmt::Display for ClosureOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureOp::Union => "union",
            ClosureOp::Intersection => "intersection",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub left: Rule,
    pub right: Rule,
    pub combined: SeSet,
    /// The rule induced by the combined set. Its SE-models differ from it.
    pub induced: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub op: ClosureOp,
    pub alphabet: Alphabet,
    pub classes: usize,
    pub pairs: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl ClosureReport {
    pub fn is_closed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Combines every pair of distinct rule-representable sets over the alphabet
/// and records the pairs whose result is not rule-representable.
pub fn closure_experiment(alphabet: &Alphabet, op: ClosureOp) -> Result<ClosureReport> {
    let classes = se_classes(alphabet)?;
    let entries: Vec<_> = classes.iter().collect();
    let mut pairs = 0;
    let mut counterexamples = Vec::new();
    for (i, (left_set, left)) in entries.iter().enumerate() {
        for (right_set, right) in &entries[i + 1..] {
            pairs += 1;
            let combined = op.apply(left_set, right_set)?;
            if !classes.contains_key(&combined) {
                counterexamples.push(Counterexample {
                    left: (*left).clone(),
                    right: (*right).clone(),
                    induced: induce_rule(&combined)?,
                    combined,
                });
            }
        }
    }
    Ok(ClosureReport {
        op,
        alphabet: alphabet.clone(),
        classes: classes.len(),
        pairs,
        counterexamples,
    })
}
