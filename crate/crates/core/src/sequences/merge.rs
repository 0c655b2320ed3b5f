use serde::{Deserialize, Serialize};

use super::forms::build_term_order;
use super::{LinearSumForm, OrderConstraint};
use crate::algebra::OrderKind;
use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;

/// Where a step of a certificate came from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    FreeVariable,
    LeafPair,
    Chain,
    StarPack,
    Manual,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::FreeVariable => "free-variable",
            Provenance::LeafPair => "leaf-pair",
            Provenance::Chain => "chain",
            Provenance::StarPack => "star-pack",
            Provenance::Manual => "manual",
        }
    }
}

/// A block of forms produced by one construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SequencePart {
    pub provenance: Provenance,
    pub forms: Vec<LinearSumForm>,
}

impl SequencePart {
    pub fn new(provenance: Provenance, forms: Vec<LinearSumForm>) -> Self {
        SequencePart { provenance, forms }
    }

    fn variables(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.forms.iter().flat_map(LinearSumForm::variables).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MergedSequence {
    pub steps: Vec<(LinearSumForm, Provenance)>,
    pub constraints: OrderConstraint,
}

fn reject(rule: &str, detail: String) -> Error {
    Error::MergeRejected {
        rule: rule.into(),
        detail,
    }
}

/// Concatenates parts: free variables first, then leaf pairs, then the
/// remaining parts in their given order. Distinct parts must use disjoint
/// variables; only a chain may reuse a variable, as the leading variable of
/// the form after the one whose tail it is.
pub fn merge_certificates(ideal: &MonomialIdeal, parts: &[SequencePart]) -> Result<MergedSequence> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut constraints = OrderConstraint::new();
    for (k, part) in parts.iter().enumerate() {
        for f in &part.forms {
            if let Some(&v) = f.variables().iter().find(|&&v| v >= n) {
                return Err(reject("ring", format!("variable index {v} out of range")));
            }
        }
        match part.provenance {
            Provenance::Chain => {
                for w in part.forms.windows(2) {
                    if w[0].tail() != [w[1].leading()] {
                        return Err(reject(
                            "chain-shape",
                            format!(
                                "{} does not continue {}",
                                w[1].fmt_with(ring),
                                w[0].fmt_with(ring)
                            ),
                        ));
                    }
                    constraints.push(w[0].leading(), w[1].leading());
                }
            }
            Provenance::FreeVariable => {
                for f in &part.forms {
                    if !f.tail().is_empty() || ideal.var_degree(f.leading()) > 0 {
                        return Err(reject(
                            "free-variable",
                            format!("{} is not a free variable", f.fmt_with(ring)),
                        ));
                    }
                }
            }
            _ => {
                let total: usize = part.forms.iter().map(|f| f.variables().len()).sum();
                if total != part.variables().len() {
                    return Err(reject(
                        "disjoint-forms",
                        format!("forms of a {} block share variables", part.provenance.as_str()),
                    ));
                }
            }
        }
        for v in part.variables() {
            if let Some(other) = owner[v] {
                return Err(reject(
                    "disjoint-variables",
                    format!("{} is used by parts {} and {}", ring.name(v), other + 1, k + 1),
                ));
            }
            owner[v] = Some(k);
        }
        constraints.extend(&OrderConstraint::from_forms(&part.forms));
    }
    build_term_order(ring, &constraints, OrderKind::Lex).map_err(|e| match e {
        Error::CyclicConstraints(vars) => reject("acyclic-order", format!("cycle among {vars}")),
        other => other,
    })?;
    let rank = |p: &SequencePart| match p.provenance {
        Provenance::FreeVariable => 0,
        Provenance::LeafPair => 1,
        _ => 2,
    };
    let mut ordered: Vec<&SequencePart> = parts.iter().collect();
    ordered.sort_by_key(|p| rank(p));
    let steps = ordered
        .into_iter()
        .flat_map(|p| p.forms.iter().map(move |f| (f.clone(), p.provenance)))
        .collect();
    Ok(MergedSequence { steps, constraints })
}
