use serde::Serialize;

use super::GroebnerBasis;
use crate::algebra::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

/// Two disjoint blocks of variables; `R1` carries monomial factors, `R2` the rest.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FactorablePartition {
    r1_vars: Vec<usize>,
    r2_vars: Vec<usize>,
}

impl FactorablePartition {
    pub fn new(ring: &Ring, r1_vars: Vec<usize>, r2_vars: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ring.nvars()];
        for &v in r1_vars.iter().chain(&r2_vars) {
            if v >= ring.nvars() {
                return Err(Error::InvalidPartition(format!("variable index {v} out of range")));
            }
            if seen[v] {
                return Err(Error::InvalidPartition(format!(
                    "variable {} listed twice",
                    ring.name(v)
                )));
            }
            seen[v] = true;
        }
        Ok(FactorablePartition { r1_vars, r2_vars })
    }

    pub fn r1_vars(&self) -> &[usize] {
        &self.r1_vars
    }

    pub fn r2_vars(&self) -> &[usize] {
        &self.r2_vars
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub monomial: Monomial,
    pub factor: Polynomial,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorabilityReport {
    pub factorable: bool,
    /// One entry per basis element; `None` where no factorization exists.
    pub factors: Vec<Option<Factorization>>,
}

/// Checks that every basis element is `M·g` with `M` a monomial in `R1` and
/// `g` a polynomial in `R2`.
pub fn verify_factorable(
    basis: &GroebnerBasis,
    partition: &FactorablePartition,
) -> Result<FactorabilityReport> {
    let n = basis.order.nvars();
    if let Some(&v) = partition.r1_vars.iter().chain(&partition.r2_vars).find(|&&v| v >= n) {
        return Err(Error::InvalidPartition(format!("variable index {v} out of range")));
    }
    let factors: Vec<Option<Factorization>> = basis
        .elements
        .iter()
        .map(|g| factor(g, partition, n))
        .collect();
    Ok(FactorabilityReport {
        factorable: factors.iter().all(Option::is_some),
        factors,
    })
}

fn factor(g: &Polynomial, p: &FactorablePartition, n: usize) -> Option<Factorization> {
    let terms = g.terms();
    let first = terms.first()?;
    let common = terms
        .iter()
        .fold(first.monomial.clone(), |acc, t| acc.gcd(&t.monomial));
    let mut m = vec![0u32; n];
    for &v in &p.r1_vars {
        m[v] = common.exponent(v);
    }
    let monomial = Monomial::from_exponents(m);
    let rest = Polynomial::from_terms(
        n,
        terms.iter().map(|t| {
            (
                t.monomial.div(&monomial).expect("gcd divides"),
                t.coefficient.clone(),
            )
        }),
    );
    let in_r2 = rest.variables().iter().all(|v| p.r2_vars.contains(v));
    in_r2.then_some(Factorization {
        monomial,
        factor: rest,
    })
}
