use sekit_core::equivalence::{EquivalenceReport, Notion, Side, Witness};
use sekit_core::oracle::ClosureReport;
use sekit_core::{Alphabet, Interpretation, SeInterpretation, SeSet};
use serde_json::{json, Value};

use crate::input::SeSetDoc;

fn names(alphabet: &Alphabet, i: &Interpretation) -> String {
    let atoms: Vec<String> = alphabet.decode(i).iter().map(|a| a.to_string()).collect();
    format!("[{}]", atoms.join(", "))
}

pub fn se_interpretation(alphabet: &Alphabet, m: &SeInterpretation) -> String {
    format!("({}, {})", names(alphabet, m.here()), names(alphabet, m.there()))
}

/// `([], []) ([p], [p])`, in the set's (J, I) order.
pub fn se_set_text(set: &SeSet) -> String {
    set.iter()
        .map(|m| se_interpretation(set.alphabet(), m))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn se_set_json(set: &SeSet) -> Value {
    serde_json::to_value(SeSetDoc::from_set(set)).expect("SE-set documents serialize")
}

fn side(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

fn witness_text(alphabet: &Alphabet, w: &Witness) -> String {
    match w {
        Witness::Model { model, side: s } => {
            format!("{} is an SE-model of the {} program only", se_interpretation(alphabet, model), side(*s))
        }
        Witness::RuleModels { rule, models, side: s } => format!(
            "SE-models of `{rule}` occur on the {} only: {}",
            side(*s),
            se_set_text(models)
        ),
        Witness::Rule { rule, side: s } => {
            format!("`{rule}` occurs on the {} only and is not an SE-tautology", side(*s))
        }
    }
}

fn witness_json(alphabet: &Alphabet, w: &Witness) -> Value {
    match w {
        Witness::Model { model, side: s } => json!({
            "kind": "model",
            "side": side(*s),
            "model": [
                alphabet.decode(model.here()).iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                alphabet.decode(model.there()).iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            ],
        }),
        Witness::RuleModels { rule, models, side: s } => json!({
            "kind": "rule_models",
            "side": side(*s),
            "rule": rule.to_string(),
            "models": se_set_json(models)["models"],
        }),
        Witness::Rule { rule, side: s } => json!({
            "kind": "rule",
            "side": side(*s),
            "rule": rule.to_string(),
        }),
    }
}

pub fn equivalence_text(report: &EquivalenceReport, notions: &[Notion]) -> String {
    let mut out = String::new();
    for &n in notions {
        if report.verdict(n) {
            out.push_str(&format!("{n}: equivalent\n"));
        } else {
            out.push_str(&format!("{n}: not equivalent\n"));
            if let Some(w) = report.witnesses.get(&n) {
                out.push_str(&format!("  witness: {}\n", witness_text(&report.alphabet, w)));
            }
        }
    }
    out
}

pub fn equivalence_json(report: &EquivalenceReport, notions: &[Notion]) -> Value {
    let results: Vec<Value> = notions
        .iter()
        .map(|&n| {
            let mut v = json!({ "notion": n.to_string(), "equivalent": report.verdict(n) });
            if let Some(w) = report.witnesses.get(&n) {
                v["witness"] = witness_json(&report.alphabet, w);
            }
            v
        })
        .collect();
    json!({ "alphabet": report.alphabet.names(), "results": results })
}

pub fn closure_text(report: &ClosureReport) -> String {
    let mut out = format!(
        "{} over {{{}}}: {} classes, {} pairs, {} counterexamples\n",
        report.op,
        report.alphabet.names().join(", "),
        report.classes,
        report.pairs,
        report.counterexamples.len()
    );
    for c in &report.counterexamples {
        out.push_str(&format!(
            "  {} | {}  ->  {}  (induces {})\n",
            c.left,
            c.right,
            se_set_text(&c.combined),
            c.induced
        ));
    }
    out
}

pub fn closure_json(report: &ClosureReport) -> Value {
    json!({
        "op": report.op.to_string(),
        "alphabet": report.alphabet.names(),
        "classes": report.classes,
        "pairs": report.pairs,
        "closed": report.is_closed(),
        "counterexamples": report.counterexamples.iter().map(|c| json!({
            "left": c.left.to_string(),
            "right": c.right.to_string(),
            "combined": se_set_json(&c.combined)["models"],
            "induced": c.induced.to_string(),
        })).collect::<Vec<_>>(),
    })
}
