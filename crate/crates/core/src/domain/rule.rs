use std::collections::BTreeSet;
use std::fmt;

use super::{Alphabet, Atom};

pub type AtomSet = BTreeSet<Atom>;

/// The four atom sets of a rule `H⁺; not H⁻ :- B⁺, not B⁻.`
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literals {
    pub head_pos: AtomSet,
    pub head_neg: AtomSet,
    pub body_pos: AtomSet,
    pub body_neg: AtomSet,
}

impl Literals {
    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.head_pos
            .iter()
            .chain(&self.head_neg)
            .chain(&self.body_pos)
            .chain(&self.body_neg)
    }
}

/// A disjunctive rule with default negation in head and body, or the
/// canonical tautology.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// The canonical tautology. It stands for every SE-tautological rule and
    /// is not tied to any atom.
    Epsilon,
    Proper(Literals),
}

impl Rule {
    pub fn new(
        head_pos: impl IntoIterator<Item = Atom>,
        head_neg: impl IntoIterator<Item = Atom>,
        body_pos: impl IntoIterator<Item = Atom>,
        body_neg: impl IntoIterator<Item = Atom>,
    ) -> Self {
        Rule::Proper(Literals {
            head_pos: head_pos.into_iter().collect(),
            head_neg: head_neg.into_iter().collect(),
            body_pos: body_pos.into_iter().collect(),
            body_neg: body_neg.into_iter().collect(),
        })
    }

    /// The rule `:-.` with all four sets empty. It has no classical models.
    pub fn falsity() -> Self {
        Rule::Proper(Literals::default())
    }

    pub fn is_epsilon(&self) -> bool {
        matches!(self, Rule::Epsilon)
    }

    pub fn literals(&self) -> Option<&Literals> {
        match self {
            Rule::Epsilon => None,
            Rule::Proper(l) => Some(l),
        }
    }

    pub fn atoms(&self) -> AtomSet {
        self.literals()
            .map(|l| l.atoms().cloned().collect())
            .unwrap_or_default()
    }
}

impl From<Literals> for Rule {
    fn from(l: Literals) -> Self {
        Rule::Proper(l)
    }
}

/// Prints the rule in the same surface syntax the parser accepts.
///
/// Head literals come positive first, then negative, each group in
/// lexicographic order; the body follows the same convention.
impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = match self {
            Rule::Epsilon => return f.write_str("#taut."),
            Rule::Proper(l) => l,
        };
        let head = join(&l.head_pos, &l.head_neg, "; ");
        let body = join(&l.body_pos, &l.body_neg, ", ");
        match (head.is_empty(), body.is_empty()) {
            (true, true) => f.write_str(":-."),
            (false, true) => write!(f, "{head}."),
            (true, false) => write!(f, ":- {body}."),
            (false, false) => write!(f, "{head} :- {body}."),
        }
    }
}

fn join(pos: &AtomSet, neg: &AtomSet, sep: &str) -> String {
    pos.iter()
        .map(|a| a.to_string())
        .chain(neg.iter().map(|a| format!("not {a}")))
        .collect::<Vec<_>>()
        .join(sep)
}

/// A finite set of rules. Structurally equal rules collapse.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Program {
    rules: BTreeSet<Rule>,
}

impl Program {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, rule: Rule) -> bool {
        self.rules.insert(rule)
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter()
    }

    pub fn contains(&self, rule: &Rule) -> bool {
        self.rules.contains(rule)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn atoms(&self) -> AtomSet {
        self.rules.iter().flat_map(|r| r.atoms()).collect()
    }

    /// Alphabet of the atoms occurring in the program.
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.atoms())
    }

    /// Rules in `self` but not in `other`, by structural equality.
    pub fn difference<'a>(&'a self, other: &'a Program) -> impl Iterator<Item = &'a Rule> {
        self.rules.difference(&other.rules)
    }
}

impl FromIterator<Rule> for Program {
    fn from_iter<T: IntoIterator<Item = Rule>>(iter: T) -> Self {
        Self {
            rules: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a Program {
    type Item = &'a Rule;
    type IntoIter = std::collections::btree_set::Iter<'a, Rule>;

    fn into_iter(self) -> Self::IntoIter {
        self.rules.iter()
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}
