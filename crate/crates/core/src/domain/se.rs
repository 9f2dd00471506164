use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

use super::{Alphabet, Interpretation};

/// A pair ⟨I, J⟩ of interpretations with `I ⊆ J`: the "here" and "there"
/// worlds. Ordered by `(J, I)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeInterpretation {
    here: Interpretation,
    there: Interpretation,
}

impl SeInterpretation {
    pub fn new(here: Interpretation, there: Interpretation) -> Result<Self> {
        if here.is_subset(&there) {
            Ok(Self { here, there })
        } else {
            Err(Error::NotSubset)
        }
    }

    /// ⟨J, J⟩
    pub fn total(there: Interpretation) -> Self {
        Self {
            here: there.clone(),
            there,
        }
    }

    pub fn here(&self) -> &Interpretation {
        &self.here
    }

    pub fn there(&self) -> &Interpretation {
        &self.there
    }

    pub fn is_total(&self) -> bool {
        self.here == self.there
    }
}

impl Ord for SeInterpretation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.there
            .cmp(&other.there)
            .then_with(|| self.here.cmp(&other.here))
    }
}

impl PartialOrd for SeInterpretation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SeInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{:?}, {:?}⟩", self.here, self.there)
    }
}

/// All 2^n interpretations of the alphabet in binary-counting order.
pub fn all_interpretations(alphabet: &Alphabet) -> Result<Vec<Interpretation>> {
    alphabet.check_enumerable("interpretations")?;
    Ok(subsets_of(&alphabet.full()))
}

/// All subsets of `top`, in binary-counting order.
pub(crate) fn subsets_of(top: &Interpretation) -> Vec<Interpretation> {
    let members: Vec<usize> = top.iter().collect();
    (0u64..1 << members.len())
        .map(|mask| {
            Interpretation::from_indices(
                members
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &i)| i),
            )
        })
        .collect()
}

/// All 3^n SE-interpretations of the alphabet, sorted by `(J, I)`.
pub fn all_se_interpretations(alphabet: &Alphabet) -> Result<Vec<SeInterpretation>> {
    alphabet.check_enumerable("SE-interpretations")?;
    Ok(subsets_of(&alphabet.full())
        .into_iter()
        .flat_map(|there| {
            subsets_of(&there).into_iter().map(move |here| SeInterpretation {
                here,
                there: there.clone(),
            })
        })
        .collect())
}

/// A finite set of SE-interpretations over a fixed alphabet.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeSet {
    alphabet: Alphabet,
    models: BTreeSet<SeInterpretation>,
}

impl SeSet {
    pub fn new<I>(alphabet: Alphabet, models: I) -> Result<Self>
    where
        I: IntoIterator<Item = SeInterpretation>,
    {
        let models: BTreeSet<_> = models.into_iter().collect();
        if models.iter().any(|m| !alphabet.covers(m.there())) {
            return Err(Error::OutOfAlphabet);
        }
        Ok(Self { alphabet, models })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            models: BTreeSet::new(),
        }
    }

    /// Every SE-interpretation of the alphabet.
    pub fn full(alphabet: Alphabet) -> Result<Self> {
        let models = all_se_interpretations(&alphabet)?.into_iter().collect();
        Ok(Self { alphabet, models })
    }

    /// Members of `universe` (assumed to range over `alphabet`) accepted by
    /// `keep`.
    pub(crate) fn filtered<'a, F>(
        alphabet: &Alphabet,
        universe: impl IntoIterator<Item = &'a SeInterpretation>,
        mut keep: F,
    ) -> Self
    where
        F: FnMut(&SeInterpretation) -> bool,
    {
        Self {
            alphabet: alphabet.clone(),
            models: universe.into_iter().filter(|m| keep(m)).cloned().collect(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn iter(&self) -> impl Iterator<Item = &SeInterpretation> {
        self.models.iter()
    }

    pub fn len(&self) -> usize {
        self.models.len()
    }

    pub fn is_empty(&self) -> bool {
        self.models.is_empty()
    }

    pub fn contains(&self, m: &SeInterpretation) -> bool {
        self.models.contains(m)
    }

    pub fn is_full(&self) -> Result<bool> {
        let n = self.alphabet.len();
        self.alphabet.check_enumerable("SE-interpretations")?;
        Ok(self.models.len() == 3usize.pow(n as u32))
    }

    pub fn is_subset(&self, other: &SeSet) -> Result<bool> {
        self.alphabet.ensure_same(&other.alphabet)?;
        Ok(self.models.is_subset(&other.models))
    }

    pub fn intersection(&self, other: &SeSet) -> Result<SeSet> {
        self.alphabet.ensure_same(&other.alphabet)?;
        Ok(Self {
            alphabet: self.alphabet.clone(),
            models: self.models.intersection(&other.models).cloned().collect(),
        })
    }

    pub fn union(&self, other: &SeSet) -> Result<SeSet> {
        self.alphabet.ensure_same(&other.alphabet)?;
        Ok(Self {
            alphabet: self.alphabet.clone(),
            models: self.models.union(&other.models).cloned().collect(),
        })
    }

    /// Members of `self` missing from `other`.
    pub fn difference(&self, other: &SeSet) -> Result<SeSet> {
        self.alphabet.ensure_same(&other.alphabet)?;
        Ok(Self {
            alphabet: self.alphabet.clone(),
            models: self.models.difference(&other.models).cloned().collect(),
        })
    }

    /// Complement relative to all SE-interpretations of the alphabet.
    pub fn complement(&self) -> Result<SeSet> {
        SeSet::full(self.alphabet.clone())?.difference(self)
    }
}

impl<'a> IntoIterator for &'a SeSet {
    type Item = &'a SeInterpretation;
    type IntoIter = std::collections::btree_set::Iter<'a, SeInterpretation>;

    fn into_iter(self) -> Self::IntoIter {
        self.models.iter()
    }
}

impl fmt::Debug for SeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.models.iter()).finish()
    }
}
