use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::Interpretation;

/// A propositional atom name, matching `[a-z][A-Za-z0-9_]*`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Self> {
        if is_atom_lexeme(name) {
            Ok(Self(name.into()))
        } else {
            Err(Error::InvalidAtom(name.to_owned()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_atom_lexeme(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name != "not"
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s)
    }
}

/// Caps on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest alphabet over which interpretations (2^n) and SE-interpretations
    /// (3^n) are enumerated.
    pub atoms: usize,
    /// Largest alphabet over which all 16^n rules are enumerated.
    pub rule_atoms: usize,
}

impl Limits {
    pub const DEFAULT_ATOMS: usize = 20;
    pub const DEFAULT_RULE_ATOMS: usize = 3;
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            atoms: Self::DEFAULT_ATOMS,
            rule_atoms: Self::DEFAULT_RULE_ATOMS,
        }
    }
}

/// A finite, lexicographically ordered set of atoms. Atom positions index the
/// bits of an [`Interpretation`].
///
/// The enumeration [`Limits`] travel with the alphabet but take no part in
/// equality, ordering or hashing.
#[derive(Clone)]
pub struct Alphabet {
    atoms: Arc<[Atom]>,
    limits: Limits,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Atom>>(atoms: I) -> Self {
        let atoms: BTreeSet<Atom> = atoms.into_iter().collect();
        Self {
            atoms: atoms.into_iter().collect(),
            limits: Limits::default(),
        }
    }

    pub fn from_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let atoms = names
            .into_iter()
            .map(|n| Atom::new(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(atoms))
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn index_of(&self, atom: &Atom) -> Option<usize> {
        self.atoms.binary_search(atom).ok()
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.index_of(atom).is_some()
    }

    /// Union of two alphabets; limits are taken from `self`.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet::new(self.atoms.iter().chain(other.atoms.iter()).cloned()).with_limits(self.limits)
    }

    /// Bit-vector of a set of atoms, failing on the first atom outside the
    /// alphabet.
    pub fn encode<'a, I>(&self, atoms: I) -> Result<Interpretation>
    where
        I: IntoIterator<Item = &'a Atom>,
    {
        let mut out = Interpretation::empty();
        for atom in atoms {
            let i = self
                .index_of(atom)
                .ok_or_else(|| Error::Scope(atom.to_string()))?;
            out.insert(i);
        }
        Ok(out)
    }

    /// Like [`encode`](Self::encode), but atoms outside the alphabet are dropped.
    pub fn encode_lenient<'a, I>(&self, atoms: I) -> Interpretation
    where
        I: IntoIterator<Item = &'a Atom>,
    {
        Interpretation::from_indices(atoms.into_iter().filter_map(|a| self.index_of(a)))
    }

    pub fn decode(&self, interpretation: &Interpretation) -> Vec<Atom> {
        interpretation
            .iter()
            .filter_map(|i| self.atoms.get(i).cloned())
            .collect()
    }

    pub fn full(&self) -> Interpretation {
        Interpretation::full(self.len())
    }

    /// Whether `interpretation` only mentions atoms of this alphabet.
    pub fn covers(&self, interpretation: &Interpretation) -> bool {
        interpretation.width() <= self.len()
    }

    pub(crate) fn check_enumerable(&self, what: &'static str) -> Result<()> {
        if self.len() > self.limits.atoms {
            return Err(Error::EnumerationLimit {
                what,
                size: self.len(),
                cap: self.limits.atoms,
            });
        }
        Ok(())
    }

    pub(crate) fn check_rule_enumerable(&self) -> Result<()> {
        if self.len() > self.limits.rule_atoms {
            return Err(Error::EnumerationLimit {
                what: "rules",
                size: self.len(),
                cap: self.limits.rule_atoms,
            });
        }
        Ok(())
    }

    pub(crate) fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.names(),
                right: other.names(),
            })
        }
    }

    pub fn names(&self) -> Vec<String> {
        self.atoms.iter().map(|a| a.to_string()).collect()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.atoms == other.atoms
    }
}

impl Eq for Alphabet {}

impl Ord for Alphabet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.atoms.cmp(&other.atoms)
    }
}

impl PartialOrd for Alphabet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for Alphabet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.atoms.hash(state);
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.atoms.iter()).finish()
    }
}
