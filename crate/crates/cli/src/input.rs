use std::fs;
use std::io::{self, Read};

use anyhow::{bail, Context, Result};
use sekit_core::parser::{parse_program, parse_rule};
use sekit_core::{Alphabet, Atom, Limits, Program, SeInterpretation, SeSet};
use serde::{Deserialize, Serialize};

/// Enumeration caps, taken from `SEKIT_ENUM_CAP` (atoms) and
/// `SEKIT_RULE_CAP` (atoms for rule enumeration) when set.
pub fn limits() -> Result<Limits> {
    let mut limits = Limits::default();
    if let Some(cap) = env_cap("SEKIT_ENUM_CAP")? {
        limits.atoms = cap;
    }
    if let Some(cap) = env_cap("SEKIT_RULE_CAP")? {
        limits.rule_atoms = cap;
    }
    Ok(limits)
}

fn env_cap(name: &str) -> Result<Option<usize>> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .with_context(|| format!("{name} must be a non-negative integer, got `{v}`")),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(e).with_context(|| format!("reading {name}")),
    }
}

pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn read_program(path: &str) -> Result<Program> {
    let text = read_source(path)?;
    let (program, _) = parse_program(&text).with_context(|| format!("parsing {path}"))?;
    Ok(program)
}

/// Either an inline rule or a program file.
pub fn read_input(rule: Option<&str>, program: Option<&str>) -> Result<Program> {
    match (rule, program) {
        (Some(r), None) => Ok([parse_rule(r)?].into_iter().collect()),
        (None, Some(path)) => read_program(path),
        (Some(_), Some(_)) => bail!("give either a rule or --program, not both"),
        (None, None) => bail!("missing input: give a rule or --program FILE"),
    }
}

/// The atoms occurring in the input, or the `--alphabet` list, which must
/// include all of them.
pub fn resolve_alphabet(occurring: &Alphabet, flag: Option<&[String]>, limits: Limits) -> Result<Alphabet> {
    let alphabet = match flag {
        None => occurring.clone(),
        Some(names) => {
            let given = Alphabet::from_names(names.iter().map(|n| n.trim()).filter(|n| !n.is_empty()))?;
            let missing: Vec<_> = occurring
                .atoms()
                .iter()
                .filter(|a| !given.contains(a))
                .map(|a| a.to_string())
                .collect();
            if !missing.is_empty() {
                bail!(
                    "--alphabet leaves out occurring atoms: {}",
                    missing.join(", ")
                );
            }
            given
        }
    };
    Ok(alphabet.with_limits(limits))
}

/// Serialized SE-set: sorted alphabet and `[I, J]` pairs sorted by `(J, I)`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeSetDoc {
    pub alphabet: Vec<String>,
    pub models: Vec<[Vec<String>; 2]>,
}

impl SeSetDoc {
    pub fn from_set(set: &SeSet) -> Self {
        let names = |i| set.alphabet().decode(i).iter().map(|a| a.to_string()).collect();
        SeSetDoc {
            alphabet: set.alphabet().names(),
            models: set.iter().map(|m| [names(m.here()), names(m.there())]).collect(),
        }
    }

    pub fn to_set(&self, limits: Limits) -> Result<SeSet> {
        let alphabet = Alphabet::from_names(&self.alphabet)?.with_limits(limits);
        let mut models = Vec::with_capacity(self.models.len());
        for [here, there] in &self.models {
            let encode = |names: &[String]| -> Result<_> {
                let atoms = names.iter().map(|n| n.parse::<Atom>()).collect::<Result<Vec<_>, _>>()?;
                Ok(alphabet.encode(&atoms)?)
            };
            models.push(SeInterpretation::new(encode(here)?, encode(there)?)?);
        }
        Ok(SeSet::new(alphabet, models)?)
    }
}

pub fn read_se_set(path: &str, limits: Limits) -> Result<SeSet> {
    let text = read_source(path)?;
    let doc: SeSetDoc = serde_json::from_str(&text).with_context(|| format!("parsing {path}"))?;
    doc.to_set(limits).with_context(|| format!("reading models from {path}"))
}

/// `p, q, r, ...`: the first `n` atoms used by the explore commands.
pub fn explore_alphabet(n: usize, limits: Limits) -> Result<Alphabet> {
    let letters = "pqrstuvwxyzabcdefghijklmno";
    let names = (0..n).map(|i| match letters.chars().nth(i) {
        Some(c) => c.to_string(),
        None => format!("a{i}"),
    });
    Ok(Alphabet::from_names(names)?.with_limits(limits))
}
