use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::closed_form::{adjoin, substitute};
use super::{LinearSumForm, Provenance};
use crate::algebra::{OrderKind, Polynomial, Ring, TermOrder};
use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, is_regular_element, PolyIdeal};
use crate::monomial_ideal::MonomialIdeal;

/// One verified step: `form` is regular on `R/ideal`, and the next ideal is
/// `ini_order(ideal, form)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CertificateStep {
    pub form: Polynomial,
    pub linear: Option<LinearSumForm>,
    pub order: TermOrder,
    pub provenance: Provenance,
    pub ideal: MonomialIdeal,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StepFailure {
    pub index: usize,
    pub reason: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IniRegCertificate {
    pub base: PolyIdeal,
    pub initial_order: TermOrder,
    /// `I_1`, the initial ideal of the base ideal.
    pub initial_ideal: MonomialIdeal,
    pub steps: Vec<CertificateStep>,
    pub final_ideal: MonomialIdeal,
    pub verified: bool,
    pub failure: Option<StepFailure>,
}

impl IniRegCertificate {
    pub fn ring(&self) -> &Ring {
        self.base.ring()
    }

    /// Number of verified steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn forms(&self) -> Vec<String> {
        let r = self.ring();
        self.steps
            .iter()
            .map(|s| match &s.linear {
                Some(l) => l.fmt_with(r),
                None => s.form.fmt_with(r, Some(&s.order)),
            })
            .collect()
    }

    pub fn to_json(&self) -> CertificateJson {
        let r = self.ring();
        CertificateJson {
            ring: r.names().to_vec(),
            ideal: self
                .base
                .generators()
                .iter()
                .map(|g| g.fmt_with(r, Some(&self.initial_order)))
                .collect(),
            initial_order: OrderJson::new(&self.initial_order, r),
            initial_ideal: self.initial_ideal.sorted_generator_strings(),
            steps: self
                .steps
                .iter()
                .zip(self.forms())
                .map(|(s, form)| StepJson {
                    form,
                    order: OrderJson::new(&s.order, r),
                    provenance: s.provenance,
                    intermediate_ideal: s.ideal.sorted_generator_strings(),
                })
                .collect(),
            final_ideal: self.final_ideal.sorted_generator_strings(),
            q: self.len(),
            verified: self.verified,
            failure: self.failure.clone(),
            flags: self.flags(),
        }
    }

    pub fn flags(&self) -> Vec<String> {
        let mut flags = Vec::new();
        if self.initial_ideal.is_squarefree() {
            flags.push("initial-ideal-squarefree".to_string());
        }
        if self.base.is_monomial() {
            flags.push("monomial-input".to_string());
        }
        flags
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrderJson {
    pub kind: OrderKind,
    pub priority: Vec<String>,
}

impl OrderJson {
    pub fn new(order: &TermOrder, ring: &Ring) -> Self {
        OrderJson {
            kind: order.kind(),
            priority: order.priority_names(ring),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StepJson {
    pub form: String,
    pub order: OrderJson,
    pub provenance: Provenance,
    /// Generators of the ideal the form is regular on.
    pub intermediate_ideal: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CertificateJson {
    pub ring: Vec<String>,
    pub ideal: Vec<String>,
    pub initial_order: OrderJson,
    pub initial_ideal: Vec<String>,
    pub steps: Vec<StepJson>,
    pub final_ideal: Vec<String>,
    pub q: usize,
    pub verified: bool,
    pub failure: Option<StepFailure>,
    pub flags: Vec<String>,
}

/// Memoised regularity tests and initial-ideal updates on monomial ideals.
#[derive(Default)]
pub struct Verifier {
    regular: HashMap<(MonomialIdeal, Polynomial), std::result::Result<(), String>>,
    next: HashMap<(MonomialIdeal, Polynomial, TermOrder), MonomialIdeal>,
}

impl Verifier {
    pub fn new() -> Self {
        Verifier::default()
    }

    /// `Ok(Err(reason))` when `f` is a zero divisor on `R/ideal` or lies in it.
    pub fn check_regular(
        &mut self,
        ideal: &MonomialIdeal,
        f: &Polynomial,
        order: &TermOrder,
    ) -> Result<std::result::Result<(), String>> {
        let key = (ideal.clone(), f.clone());
        if let Some(r) = self.regular.get(&key) {
            return Ok(r.clone());
        }
        let outcome = match is_regular_element(&PolyIdeal::from_monomial_ideal(ideal), f, order) {
            Ok(true) => Ok(()),
            Ok(false) => Err("is a zero divisor".to_string()),
            Err(Error::ElementInIdeal) => Err("lies in the ideal".to_string()),
            Err(e) => return Err(e),
        };
        self.regular.insert(key, outcome.clone());
        Ok(outcome)
    }

    /// `ini_order(ideal, f)`. For a variable or a sum of two variables the
    /// closed form is computed as well and must agree with Buchberger.
    pub fn next_ideal(
        &mut self,
        ideal: &MonomialIdeal,
        f: &Polynomial,
        linear: Option<&LinearSumForm>,
        order: &TermOrder,
    ) -> Result<MonomialIdeal> {
        let key = (ideal.clone(), f.clone(), order.clone());
        if let Some(r) = self.next.get(&key) {
            return Ok(r.clone());
        }
        let sum = PolyIdeal::from_monomial_ideal(ideal).with_generator(f.clone())?;
        let computed = initial_ideal(&sum, order)?;
        let closed = match linear.map(|l| (l.leading(), l.tail())) {
            Some((x, [])) => Some(adjoin(ideal, x)?),
            Some((b0, &[b1])) if order.var_greater(b0, b1) => Some(substitute(ideal, b0, b1)?),
            _ => None,
        };
        if let Some(closed) = closed {
            if closed != computed {
                return Err(Error::Defect(format!(
                    "closed form {closed} disagrees with Buchberger result {computed}"
                )));
            }
        }
        self.next.insert(key, computed.clone());
        Ok(computed)
    }
}

/// A candidate step fed to the certificate builder.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CandidateStep {
    pub form: Polynomial,
    pub linear: Option<LinearSumForm>,
    pub order: TermOrder,
    pub provenance: Provenance,
}

/// Checks steps in order. With `skip_failures`, a failing step is dropped
/// and the ideal is left unchanged; otherwise the first failure ends the run.
pub(crate) fn build_certificate(
    verifier: &mut Verifier,
    base: &PolyIdeal,
    initial_order: &TermOrder,
    initial: &MonomialIdeal,
    candidates: &[CandidateStep],
    skip_failures: bool,
) -> Result<IniRegCertificate> {
    let mut current = initial.clone();
    let mut steps = Vec::new();
    let mut failure = None;
    for (index, c) in candidates.iter().enumerate() {
        if c.form.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if c.form.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        match verifier.check_regular(&current, &c.form, &c.order)? {
            Ok(()) => {
                let next = verifier.next_ideal(&current, &c.form, c.linear.as_ref(), &c.order)?;
                steps.push(CertificateStep {
                    form: c.form.clone(),
                    linear: c.linear.clone(),
                    order: c.order.clone(),
                    provenance: c.provenance,
                    ideal: current,
                });
                current = next;
            }
            Err(reason) if !skip_failures => {
                let shown = match &c.linear {
                    Some(l) => l.fmt_with(base.ring()),
                    None => c.form.fmt_with(base.ring(), Some(&c.order)),
                };
                failure = Some(StepFailure {
                    index,
                    reason: format!("{shown} {reason}"),
                });
                break;
            }
            Err(_) => {}
        }
    }
    Ok(IniRegCertificate {
        base: base.clone(),
        initial_order: initial_order.clone(),
        initial_ideal: initial.clone(),
        steps,
        final_ideal: current,
        verified: failure.is_none(),
        failure,
    })
}

/// Checks a user-supplied sequence: `I_1 = ini(I)` under `order`, then for
/// each `(f_i, >_{i+1})`, `f_i` regular on `R/I_i` and
/// `I_{i+1} = ini_{>_{i+1}}(I_i, f_i)`. Stops at the first failing step.
pub fn verify_initially_regular(
    ideal: &PolyIdeal,
    order: &TermOrder,
    steps: &[(Polynomial, TermOrder)],
) -> Result<IniRegCertificate> {
    let initial = initial_ideal(ideal, order)?;
    let candidates: Vec<CandidateStep> = steps
        .iter()
        .map(|(f, o)| {
            f.check_ring(ideal.ring().nvars())?;
            Ok(CandidateStep {
                form: f.clone(),
                linear: LinearSumForm::from_polynomial(f, o),
                order: o.clone(),
                provenance: Provenance::Manual,
            })
        })
        .collect::<Result<_>>()?;
    build_certificate(&mut Verifier::new(), ideal, order, &initial, &candidates, false)
}
