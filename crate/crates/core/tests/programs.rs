//! Program-level properties on seeded random programs.

mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sekit_core::equivalence::{
    default_alphabet, equivalence_report, se_equivalent_rules, se_equivalent_rules_syntactic,
    sr_equivalent, su_equivalent, Notion,
};
use sekit_core::oracle::enumerate_rules;
use sekit_core::semantics::{answer_sets, is_well_defined, se_models, se_models_program};
use sekit_core::{Alphabet, Program, Rule, SeSet};

#[test]
fn program_models_are_well_defined() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let (p, l) = random_program(&mut rng);
        assert!(is_well_defined(&se_models_program(&p, &l).unwrap()), "{p}");
    }
}

#[test]
fn program_models_are_the_intersection_of_rule_models() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let (p, l) = random_program(&mut rng);
        let mut expected = SeSet::full(l.clone()).unwrap();
        for r in p.rules() {
            expected = expected.intersection(&se_models(r, &l).unwrap()).unwrap();
        }
        assert_eq!(se_models_program(&p, &l).unwrap(), expected);
    }
}

#[test]
fn answer_sets_are_minimal_total_models() {
    // brute-force Gelfond-Lifschitz check on the same programs
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let (p, l) = random_program(&mut rng);
        let all = sekit_core::all_interpretations(&l).unwrap();
        let expected: Vec<_> = all
            .iter()
            .filter(|j| {
                let reduct: Vec<Rule> = p
                    .rules()
                    .map(|r| sekit_core::semantics::reduct(r, &l, j))
                    .collect();
                let model = |x: &sekit_core::Interpretation| {
                    reduct.iter().all(|r| {
                        sekit_core::semantics::c_models(r, &l).unwrap().contains(x)
                    })
                };
                model(j) && !all.iter().any(|i| i.is_subset(j) && i != *j && model(i))
            })
            .cloned()
            .collect();
        assert_eq!(answer_sets(&p, &l).unwrap(), expected, "{p}");
    }
}

#[test]
fn ladder_holds_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut seen = [0usize; 4];
    for _ in 0..1000 {
        let (a, b, l) = random_program_pair(&mut rng);
        let report = equivalence_report(&a, &b, &l).unwrap();
        let v = |n| report.verdict(n);
        assert!(!v(Notion::Su) || v(Notion::Sr));
        assert!(!v(Notion::Sr) || v(Notion::Smr));
        assert!(!v(Notion::Smr) || v(Notion::S));
        for (k, n) in Notion::ALL.into_iter().enumerate() {
            seen[k] += v(n) as usize;
        }
    }
    // the generator must exercise both outcomes of every notion
    assert!(seen.iter().all(|&c| c > 0 && c < 1000), "{seen:?}");
}

#[test]
fn strictness_witnesses() {
    for (a, b, weaker, stronger) in [
        ("p. q.", "p :- q. q.", Notion::S, Notion::Smr),
        ("p :- q.", "p :- q. p :- q, r.", Notion::Smr, Notion::Sr),
        ("not p.", ":- p.", Notion::Sr, Notion::Su),
    ] {
        let (a, b) = (program(a), program(b));
        let report = equivalence_report(&a, &b, &default_alphabet(&a, &b)).unwrap();
        assert!(report.verdict(weaker), "{a} vs {b}");
        assert!(!report.verdict(stronger), "{a} vs {b}");
    }
}

#[test]
fn semantic_and_syntactic_rule_equivalence_agree() {
    let l = alphabet(&["p", "q"]);
    let rules: Vec<Rule> = enumerate_rules(&l).unwrap().into_iter().chain([Rule::Epsilon]).collect();
    let models: Vec<SeSet> = rules.iter().map(|r| se_models(r, &l).unwrap()).collect();
    for (i, a) in rules.iter().enumerate() {
        for (j, b) in rules.iter().enumerate() {
            assert_eq!(models[i] == models[j], se_equivalent_rules_syntactic(a, b), "{a} vs {b}");
        }
    }
    assert!(se_equivalent_rules(&rules[0], &rules[0], &l).unwrap());
}

#[test]
fn sr_ignores_added_tautologies() {
    let l = alphabet(&["p", "q"]);
    let tautologies = ["p :- p.", "q; not p :- not p.", ":- q, not q.", "p; q :- p, not q.", "#taut."];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let a: Program = (0..3).map(|_| random_rule(&mut rng, &l)).collect();
        for t in tautologies {
            let b: Program = a.rules().cloned().chain([rule(t)]).collect();
            assert!(sr_equivalent(&a, &b, &l).unwrap(), "{a} + {t}");
            assert!(su_equivalent(&a, &b, &l).unwrap(), "{a} + {t}");
        }
    }
}

#[test]
fn verdicts_are_stable_under_a_fresh_atom() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..300 {
        let (a, b, l) = random_program_pair(&mut rng);
        let wider = l.union(&Alphabet::from_names(["z"]).unwrap());
        let narrow = equivalence_report(&a, &b, &l).unwrap();
        let wide = equivalence_report(&a, &b, &wider).unwrap();
        assert_eq!(narrow.verdicts, wide.verdicts, "{a} vs {b}");
    }
}
