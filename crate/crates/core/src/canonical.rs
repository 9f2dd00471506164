//! Canonical rules: one syntactic representative per class of SE-equivalent
//! rules.

use crate::domain::{Literals, Rule};

/// A rule is canonical when it is ε, or when `H⁺ ∪ H⁻`, `B⁺` and `B⁻` are
/// pairwise disjoint and an empty positive head implies an empty negative
/// head.
pub fn is_canonical(rule: &Rule) -> bool {
    let Some(l) = rule.literals() else {
        return true;
    };
    let head_atoms = || l.head_pos.iter().chain(&l.head_neg);
    let disjoint = head_atoms().all(|a| !l.body_pos.contains(a) && !l.body_neg.contains(a))
        && l.body_pos.is_disjoint(&l.body_neg);
    disjoint && (!l.head_pos.is_empty() || l.head_neg.is_empty())
}

/// Maps a rule to the canonical rule with the same SE-models.
///
/// Purely syntactic. A shared atom in `H⁺/B⁺`, `H⁻/B⁻` or `B⁺/B⁻` makes the
/// rule an SE-tautology, so it becomes ε. Otherwise head atoms negated in the
/// body are dropped, and a rule left without positive head turns its negative
/// head into positive body atoms.
pub fn secan(rule: &Rule) -> Rule {
    let Some(l) = rule.literals() else {
        return Rule::Epsilon;
    };
    if !l.head_pos.is_disjoint(&l.body_pos)
        || !l.head_neg.is_disjoint(&l.body_neg)
        || !l.body_pos.is_disjoint(&l.body_neg)
    {
        return Rule::Epsilon;
    }
    let head_pos: crate::AtomSet = l.head_pos.difference(&l.body_neg).cloned().collect();
    let (head_neg, body_pos) = if head_pos.is_empty() {
        (Default::default(), l.body_pos.union(&l.head_neg).cloned().collect())
    } else {
        (l.head_neg.difference(&l.body_pos).cloned().collect(), l.body_pos.clone())
    };
    Rule::Proper(Literals {
        head_pos,
        head_neg,
        body_pos,
        body_neg: l.body_neg.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_rule;

    fn rule(text: &str) -> Rule {
        parse_rule(text).unwrap()
    }

    #[test]
    fn canonical_predicate() {
        assert!(is_canonical(&Rule::Epsilon));
        assert!(is_canonical(&rule("p; not p :-.")));
        assert!(!is_canonical(&rule("not p.")));
        assert!(!is_canonical(&rule("p :- p.")));
        assert!(!is_canonical(&rule(":- p, not p.")));
        assert!(!is_canonical(&rule("not p :- not p.")));
        assert!(is_canonical(&rule(":-.")));
    }

    #[test]
    fn secan_examples() {
        assert_eq!(secan(&rule("p; q :- p, not s.")), Rule::Epsilon);
        assert_eq!(secan(&rule("not p; not q :- not r.")), rule(":- p, q, not r."));
        assert_eq!(secan(&rule("p; not q :- q, not p.")), rule(":- q, not p."));
        assert_eq!(secan(&rule("not p.")), rule(":- p."));
        assert_eq!(secan(&rule("p :- q, not q.")), Rule::Epsilon);
        assert_eq!(secan(&rule("p; not q :- q.")), rule("p :- q."));
        assert_eq!(secan(&Rule::Epsilon), Rule::Epsilon);
    }
}
