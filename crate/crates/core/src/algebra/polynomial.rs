use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrdering, Ring, TermOrder};
use crate::error::{Error, Result};

pub type Coefficient = BigRational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub coefficient: Coefficient,
    pub monomial: Monomial,
}

/// Sparse polynomial in canonical form: nonzero coefficients, distinct
/// monomials, terms sorted descending by exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Coefficient) -> Self {
        Polynomial::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Coefficient::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let n = m.nvars();
        Polynomial::from_terms(n, [(m, Coefficient::one())])
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        Polynomial::from_monomial(Monomial::var(nvars, var))
    }

    /// Sum of the given variables, each with coefficient 1.
    pub fn sum_of_variables(nvars: usize, vars: &[usize]) -> Self {
        Polynomial::from_terms(
            nvars,
            vars.iter().map(|&v| (Monomial::var(nvars, v), Coefficient::one())),
        )
    }

    /// Collects terms, merging duplicate monomials and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coefficient)>,
    {
        let mut acc: BTreeMap<Monomial, Coefficient> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial from a different ring");
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(Coefficient::zero) += c;
        }
        Polynomial::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, map: BTreeMap<Monomial, Coefficient>) -> Self {
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coefficient)| Term { coefficient, monomial })
            .collect();
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.iter().map(|t| t.monomial.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Indices of variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.iter().any(|t| t.monomial.exponent(v) > 0))
            .collect()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Coefficient {
        self.terms
            .iter()
            .find(|t| &t.monomial == m)
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(Coefficient::zero)
    }

    pub fn leading_term(&self, order: &TermOrder) -> Result<Term> {
        self.check_ring(order.nvars())?;
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_monomials(&a.monomial, &b.monomial))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &impl MonomialOrdering) -> Option<&Monomial> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_monomials(&a.monomial, &b.monomial))
            .map(|t| &t.monomial)
    }

    pub(crate) fn check_ring(&self, nvars: usize) -> Result<()> {
        if self.nvars != nvars {
            return Err(Error::RingMismatch {
                expected: nvars,
                found: self.nvars,
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: &t.coefficient * c,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        // multiplication by a monomial preserves the lexicographic term order
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: t.coefficient.clone(),
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &impl MonomialOrdering) -> Self {
        match self
            .terms
            .iter()
            .max_by(|a, b| order.cmp_monomials(&a.monomial, &b.monomial))
        {
            None => self.clone(),
            Some(t) => self.scale(&t.coefficient.recip()),
        }
    }

    /// Re-embeds into a ring with `nvars` variables, shifting indices by `offset`.
    pub fn embed(&self, offset: usize, nvars: usize) -> Self {
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|t| (t.monomial.embed(offset, nvars), t.coefficient.clone())),
        )
    }

    /// Drops the variables outside `keep` range; caller guarantees they do not occur.
    pub(crate) fn restrict(&self, offset: usize, nvars: usize) -> Self {
        Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|t| {
                let e = t.monomial.exponents()[offset..offset + nvars].to_vec();
                (Monomial::from_exponents(e), t.coefficient.clone())
            }),
        )
    }

    /// Renders terms in descending `order` (or canonical order if none).
    pub fn fmt_with(&self, ring: &Ring, order: Option<&TermOrder>) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<&Term> = self.terms.iter().collect();
        if let Some(o) = order {
            terms.sort_by(|a, b| o.cmp_monomials(&b.monomial, &a.monomial));
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            let negative = t.coefficient.is_negative();
            let abs = t.coefficient.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = t.monomial.fmt_with(ring);
            if t.monomial.is_one() {
                out.push_str(&fmt_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&fmt_rational(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

pub(crate) fn fmt_rational(c: &Coefficient) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[cfg(test)]
pub(crate) fn int(n: i64) -> Coefficient {
    Coefficient::from_integer(num_bigint::BigInt::from(n))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = Ring::indexed("x", self.nvars.max(1)).expect("indexed ring");
        f.write_str(&self.fmt_with(&ring, None))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        // merge of two descending sequences
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (a, b) = (&self.terms[i], &rhs.terms[j]);
            match a.monomial.cmp(&b.monomial) {
                std::cmp::Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    terms.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a.coefficient + &b.coefficient;
                    if !c.is_zero() {
                        terms.push(Term {
                            coefficient: c,
                            monomial: a.monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&rhs.terms[j..]);
        Polynomial { nvars: self.nvars, terms }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: -&t.coefficient,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut acc: BTreeMap<Monomial, Coefficient> = BTreeMap::new();
        for a in &self.terms {
            for b in &rhs.terms {
                *acc.entry(a.monomial.mul(&b.monomial))
                    .or_insert_with(Coefficient::zero) += &a.coefficient * &b.coefficient;
            }
        }
        Polynomial::from_map(self.nvars, acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
