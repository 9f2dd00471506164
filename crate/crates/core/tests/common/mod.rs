#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sekit_core::parser::{parse_program, parse_rule};
use sekit_core::{Alphabet, Atom, Interpretation, Literals, Program, Rule, SeInterpretation, SeSet};

pub fn alphabet(names: &[&str]) -> Alphabet {
    Alphabet::from_names(names).unwrap()
}

pub fn rule(text: &str) -> Rule {
    parse_rule(text).unwrap()
}

pub fn program(text: &str) -> Program {
    parse_program(text).unwrap().0
}

pub fn se(l: &Alphabet, here: &[&str], there: &[&str]) -> SeInterpretation {
    let enc = |names: &[&str]| {
        let atoms: Vec<Atom> = names.iter().map(|n| n.parse().unwrap()).collect();
        l.encode(&atoms).unwrap()
    };
    SeInterpretation::new(enc(here), enc(there)).unwrap()
}

/// Countermodel characterization, written over atom names: ⟨I, J⟩ fails `r`
/// iff `H⁻ ∪ B⁺ ⊆ J ⊆ L∖B⁻` and (`J ∩ H⁺ = ∅` or `B⁺ ⊆ I ⊆ L∖H⁺`).
pub fn countermodel_se_models(r: &Rule, l: &Alphabet) -> SeSet {
    let universe = sekit_core::all_se_interpretations(l).unwrap();
    let Some(lits) = r.literals() else {
        return SeSet::new(l.clone(), universe).unwrap();
    };
    let names = |x: &Interpretation| -> BTreeSet<Atom> { l.decode(x).into_iter().collect() };
    let models = universe.into_iter().filter(|m| {
        let i = names(m.here());
        let j = names(m.there());
        let first = lits.head_neg.is_subset(&j) && lits.body_pos.is_subset(&j) && lits.body_neg.is_disjoint(&j);
        let second = lits.head_pos.is_disjoint(&j)
            || (lits.body_pos.is_subset(&i) && lits.head_pos.is_disjoint(&i));
        !(first && second)
    });
    SeSet::new(l.clone(), models).unwrap()
}

pub fn random_rule(rng: &mut ChaCha8Rng, l: &Alphabet) -> Rule {
    if rng.gen_ratio(1, 20) {
        return Rule::Epsilon;
    }
    let mut lits = Literals::default();
    for atom in l.atoms() {
        let state: u8 = rng.gen_range(0..16);
        // keep most atoms out of most rules
        if rng.gen_bool(0.4) {
            continue;
        }
        if state & 1 != 0 {
            lits.head_pos.insert(atom.clone());
        }
        if state & 2 != 0 {
            lits.head_neg.insert(atom.clone());
        }
        if state & 4 != 0 {
            lits.body_pos.insert(atom.clone());
        }
        if state & 8 != 0 {
            lits.body_neg.insert(atom.clone());
        }
    }
    Rule::Proper(lits)
}

/// Random alphabet of 1 to 3 atoms and a program of up to 4 rules over it.
pub fn random_program(rng: &mut ChaCha8Rng) -> (Program, Alphabet) {
    let n = rng.gen_range(1..=3);
    let l = alphabet(&["p", "q", "r"][..n]);
    let size = rng.gen_range(0..=4);
    let p = (0..size).map(|_| random_rule(rng, &l)).collect();
    (p, l)
}

/// Pair of programs over a shared alphabet. The second is often derived from
/// the first so that the stronger notions are sometimes satisfied.
pub fn random_program_pair(rng: &mut ChaCha8Rng) -> (Program, Program, Alphabet) {
    let (a, l) = random_program(rng);
    let b: Program = match rng.gen_range(0..4) {
        0 => a.clone(),
        1 => a
            .rules()
            .cloned()
            .chain([sekit_core::canonical::secan(&random_rule(rng, &l))])
            .collect(),
        2 => a.rules().map(sekit_core::canonical::secan).collect(),
        _ => (0..rng.gen_range(0..=4)).map(|_| random_rule(rng, &l)).collect(),
    };
    (a, b, l)
}
