//! Buchberger engine: S-polynomials, normal forms, reduced bases, initial
//! ideals, ideal quotients and factorability diagnostics.

mod buchberger;
mod factorable;
mod hilbert;
mod quotient;

use crate::algebra::{Monomial, Polynomial, Ring, TermOrder};
use crate::error::{Error, Result};
use crate::monomial_ideal::{minimalize, MonomialIdeal};

pub use buchberger::{normal_form, reduced_groebner_basis, s_polynomial};
pub use factorable::{verify_factorable, FactorablePartition, FactorabilityReport, Factorization};
pub use hilbert::standard_monomial_counts;
pub use quotient::{divide_exact, ideal_quotient, is_regular_element};

/// An ideal given by generators. An empty generator list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyIdeal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl PolyIdeal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            g.check_ring(ring.nvars())?;
        }
        Ok(PolyIdeal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn from_monomial_ideal(i: &MonomialIdeal) -> Self {
        PolyIdeal {
            ring: i.ring().clone(),
            generators: i
                .generators()
                .iter()
                .cloned()
                .map(Polynomial::from_monomial)
                .collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(Polynomial::is_monomial)
    }

    pub fn with_generator(&self, f: Polynomial) -> Result<Self> {
        let mut g = self.generators.clone();
        g.push(f);
        PolyIdeal::new(&self.ring, g)
    }

    /// The monomial ideal of the generators, if they are all monomials.
    pub fn as_monomial_ideal(&self) -> Option<Result<MonomialIdeal>> {
        if !self.is_monomial() {
            return None;
        }
        Some(minimalize(
            &self.ring,
            self.generators.iter().map(|g| g.terms()[0].monomial.clone()),
        ))
    }
}

/// Reduced Gröbner basis elements are monic and sorted by descending leading
/// monomial. The unit ideal has basis `{1}`; the zero ideal an empty basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    pub elements: Vec<Polynomial>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("nonzero").clone())
            .collect()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Ideal of leading terms, minimally generated.
    pub fn initial_ideal(&self, ring: &Ring) -> Result<MonomialIdeal> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        minimalize(ring, self.leading_monomials())
    }
}

pub fn initial_ideal(ideal: &PolyIdeal, order: &TermOrder) -> Result<MonomialIdeal> {
    if let Some(m) = ideal.as_monomial_ideal() {
        // a monomial ideal is its own initial ideal under every order
        return m;
    }
    reduced_groebner_basis(ideal, order)?.initial_ideal(ideal.ring())
}
