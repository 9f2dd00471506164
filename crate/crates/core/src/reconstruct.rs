//! Rules induced by sets of SE-interpretations.
//!
//! Every atom is classified by universally quantified membership conditions
//! over all SE-interpretations of the alphabet:
//!
//! * negative body: every ⟨I, J⟩ with `p ∈ J` is in S;
//! * positive head: not negative body, and every ⟨I, J⟩ with `p ∈ I` is in S;
//! * positive body: every ⟨I, J⟩ with `p ∉ J` is in S, and so is every
//!   ⟨I, J⟩ with `p ∉ I` whose `J` meets the positive head;
//! * negative head: not positive body, and every ⟨I, J⟩ with `p ∉ J` is in S.
//!
//! For the SE-models of a canonical rule this gives back the rule itself.

use crate::domain::{all_se_interpretations, AtomSet, Interpretation, Literals, Rule, SeSet};
use crate::error::Result;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtomClassification {
    pub neg_body: AtomSet,
    pub pos_head: AtomSet,
    pub pos_body: AtomSet,
    pub neg_head: AtomSet,
}

struct Masks {
    neg_body: Interpretation,
    pos_head: Interpretation,
    pos_body: Interpretation,
    neg_head: Interpretation,
}

fn classify(set: &SeSet) -> Result<Masks> {
    let alphabet = set.alphabet();
    let universe = all_se_interpretations(alphabet)?;
    let all_in = |cond: &dyn Fn(&Interpretation, &Interpretation) -> bool| {
        universe
            .iter()
            .filter(|m| cond(m.here(), m.there()))
            .all(|m| set.contains(m))
    };
    let n = alphabet.len();

    let neg_body = Interpretation::from_indices((0..n).filter(|&p| all_in(&|_, j| j.contains(p))));
    let pos_head = Interpretation::from_indices(
        (0..n).filter(|&p| !neg_body.contains(p) && all_in(&|i, _| i.contains(p))),
    );
    let pos_body = Interpretation::from_indices((0..n).filter(|&p| {
        all_in(&|_, j| !j.contains(p)) && all_in(&|i, j| !i.contains(p) && j.intersects(&pos_head))
    }));
    let neg_head = Interpretation::from_indices(
        (0..n).filter(|&p| !pos_body.contains(p) && all_in(&|_, j| !j.contains(p))),
    );
    Ok(Masks {
        neg_body,
        pos_head,
        pos_body,
        neg_head,
    })
}

pub fn classify_atoms(set: &SeSet) -> Result<AtomClassification> {
    let masks = classify(set)?;
    let names = |m: &Interpretation| set.alphabet().decode(m).into_iter().collect();
    Ok(AtomClassification {
        neg_body: names(&masks.neg_body),
        pos_head: names(&masks.pos_head),
        pos_body: names(&masks.pos_body),
        neg_head: names(&masks.neg_head),
    })
}

/// The rule induced by `set`: ε for the full set, otherwise the rule built
/// from [`classify_atoms`].
pub fn induce_rule(set: &SeSet) -> Result<Rule> {
    if set.is_full()? {
        return Ok(Rule::Epsilon);
    }
    let c = classify_atoms(set)?;
    Ok(Rule::Proper(Literals {
        head_pos: c.pos_head,
        head_neg: c.neg_head,
        body_pos: c.pos_body,
        body_neg: c.neg_body,
    }))
}
