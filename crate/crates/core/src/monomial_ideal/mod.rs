//! Combinatorics of monomial ideals.

mod hypergraph;
mod leaves;
mod polarization;

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{Monomial, Ring};
use crate::error::{Error, Result};

pub use hypergraph::{Edge, Hypergraph};
pub use leaves::LeafPair;
pub use polarization::PolarizationMap;

/// A monomial ideal stored by its minimal generators. The empty generator
/// list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Canonical generator order: ascending degree, then descending exponent vector.
fn canonical(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.cmp(a))
}

/// Divisibility-minimal subset of `gens`, in canonical order.
pub fn minimalize(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut all: Vec<Monomial> = gens.into_iter().collect();
    for m in &all {
        if m.nvars() != ring.nvars() {
            return Err(Error::RingMismatch {
                expected: ring.nvars(),
                found: m.nvars(),
            });
        }
        if m.is_one() {
            return Err(Error::UnitIdeal);
        }
    }
    all.sort_by(canonical);
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
    // a divisor always sorts before its multiples, so one pass suffices
    for m in all {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    Ok(MonomialIdeal {
        ring: ring.clone(),
        gens: kept,
    })
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    /// Parses generators written as monomials, e.g. `["x1*x2", "x3^2"]`.
    pub fn parse<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            let p = crate::algebra::parse_polynomial(g.as_ref(), ring)?;
            if !p.is_monomial() {
                return Err(Error::InvalidForm(format!("`{}` is not a monomial", g.as_ref())));
            }
            out.push(p.terms()[0].monomial.clone());
        }
        minimalize(ring, out)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// `d_x(I)`: the largest exponent of `var` among the minimal generators.
    pub fn var_degree(&self, var: usize) -> u32 {
        self.gens.iter().map(|g| g.exponent(var)).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Variables that occur in no minimal generator.
    pub fn free_variables(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&v| self.gens.iter().all(|g| g.exponent(v) == 0))
            .collect()
    }

    /// Generators divisible by `var`.
    pub fn generators_with(&self, var: usize) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.exponent(var) > 0)
    }

    /// Sum with another monomial ideal over the same ring.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring.nvars(),
                found: other.ring.nvars(),
            });
        }
        minimalize(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn with_generator(&self, m: Monomial) -> Result<MonomialIdeal> {
        minimalize(&self.ring, self.gens.iter().cloned().chain([m]))
    }

    /// `I : m` for a monomial `m`.
    pub fn quotient_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        minimalize(
            &self.ring,
            self.gens.iter().map(|g| g.div(&g.gcd(m)).expect("gcd divides")),
        )
    }

    /// The same generators viewed in a larger ring (new variables appended).
    pub fn extend_ring(&self, ring: &Ring) -> Result<MonomialIdeal> {
        if ring.nvars() < self.ring.nvars()
            || ring.names()[..self.ring.nvars()] != self.ring.names()[..]
        {
            return Err(Error::InvalidRing("target ring must extend the source ring".into()));
        }
        minimalize(ring, self.gens.iter().map(|g| g.embed(0, ring.nvars())))
    }

    /// Generator strings in canonical order.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.fmt_with(&self.ring)).collect()
    }

    /// Generator strings sorted alphabetically, for stable serialisation.
    pub fn sorted_generator_strings(&self) -> Vec<String> {
        let mut s = self.generator_strings();
        s.sort();
        s
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(names: &[&str], gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(&Ring::new(names.iter().copied()).unwrap(), gens).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(&["x", "y"], &["x", "x^2", "x*y"]);
        assert_eq!(i.to_string(), "(x)");
        let j = ideal(&["x1", "x2", "x3"], &["x1*x2", "x2*x3"]);
        assert_eq!(j.len(), 2);
    }

    #[test]
    fn minimalize_removes_duplicates_from_closed_form_output() {
        // generators of ini(I, a+b) for I = (a^2 b, abcd, c^2 d) before minimalizing
        let r = Ring::new(["a", "b", "c", "d"]).unwrap();
        let i = MonomialIdeal::parse(&r, &["a", "b^3", "b^2*c*d", "c^2*d", "b^3", "a"]).unwrap();
        assert_eq!(i.to_string(), "(a, b^3, c^2*d, b^2*c*d)");
    }

    #[test]
    fn minimalize_rejects_unit() {
        let r = Ring::new(["x"]).unwrap();
        assert!(matches!(minimalize(&r, [Monomial::one(1)]), Err(Error::UnitIdeal)));
    }

    #[test]
    fn var_degrees() {
        let i = ideal(&["a", "b", "c", "d"], &["a^2*b", "a*b*c*d", "c^2*d"]);
        assert_eq!(i.var_degree(0), 2);
        assert_eq!(i.var_degree(1), 1);
        let r = Ring::new(["a", "b", "c", "z"]).unwrap();
        let sq = MonomialIdeal::parse(&r, &["a^2*b^2", "a*b^2*c", "b^2*c^2"]).unwrap();
        assert_eq!(sq.var_degree(1), 2);
        assert_eq!(sq.var_degree(3), 0);
    }

    #[test]
    fn free_variables_of_binomial_edge_initial() {
        let names = ["x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"];
        let i = ideal(&names, &["x1*y2", "x2*y3", "x3*y4"]);
        let free: Vec<&str> = i.free_variables().iter().map(|&v| names[v]).collect();
        assert_eq!(free, ["x4", "y1"]);
        let t: Vec<String> = (1..=9).map(|k| format!("T{k}")).collect();
        let t: Vec<&str> = t.iter().map(String::as_str).collect();
        let j = ideal(&t, &["T1*T4*T5", "T6*T8"]);
        let free: Vec<&str> = j.free_variables().iter().map(|&v| t[v]).collect();
        assert_eq!(free, ["T2", "T3", "T7", "T9"]);
        assert!(ideal(&["x", "y"], &["x*y"]).free_variables().is_empty());
    }

    #[test]
    fn membership() {
        let i = ideal(&["x", "y", "z"], &["x*y", "y*z"]);
        let r = i.ring().clone();
        let m = |s: &str| crate::algebra::parse_polynomial(s, &r).unwrap().terms()[0].monomial.clone();
        assert!(i.contains(&m("x*y^2*z")));
        assert!(!i.contains(&m("x")));
        let t = ideal(&["a", "b", "c", "d"], &["a*b*c*d"]);
        let r = t.ring().clone();
        let m2 = crate::algebra::parse_polynomial("a^2*b^2*c^2*d^2", &r).unwrap();
        assert!(t.contains(&m2.terms()[0].monomial));
    }
}
