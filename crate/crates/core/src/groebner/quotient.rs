use std::cmp::Ordering;

use super::buchberger::{groebner_sorted, reduce_sorted, SortedPoly};
use super::{reduced_groebner_basis, PolyIdeal};
use crate::algebra::{MonomialOrdering, Polynomial, TermOrder};
use crate::error::{Error, Result};

/// Block order on `t, x_1..x_n`: the exponent of `t` (index 0) decides first,
/// then the active order on the remaining variables.
struct Elimination<'a> {
    inner: &'a TermOrder,
}

impl MonomialOrdering for Elimination<'_> {
    fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        a[0].cmp(&b[0])
            .then_with(|| self.inner.cmp_exponents(&a[1..], &b[1..]))
    }
}

/// Exact quotient `f / g`; fails unless `g` divides `f`.
pub fn divide_exact(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.nvars();
    let gs = SortedPoly::from_poly(g, order);
    let (gm, gc) = gs.lead().clone();
    let mut rem = SortedPoly::from_poly(f, order);
    let mut quotient = Vec::new();
    while !rem.is_zero() {
        let (m, c) = rem.lead().clone();
        let q = m.div(&gm).ok_or(Error::InexactDivision)?;
        let coeff = &c / &gc;
        rem = rem.sub_mul(&coeff, &q, &gs, order);
        quotient.push((q, coeff));
    }
    Ok(Polynomial::from_terms(n, quotient))
}

/// Generators of `I : f`, computed as `(I ∩ (f)) / f` with the intersection
/// obtained by eliminating an auxiliary variable.
pub fn ideal_quotient(ideal: &PolyIdeal, f: &Polynomial, order: &TermOrder) -> Result<PolyIdeal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = ideal.ring().nvars();
    f.check_ring(n)?;
    if order.nvars() != n {
        return Err(Error::RingMismatch {
            expected: n,
            found: order.nvars(),
        });
    }
    if ideal.is_zero() {
        return PolyIdeal::new(ideal.ring(), Vec::new());
    }
    let elim = Elimination { inner: order };
    let t = Polynomial::variable(n + 1, 0);
    let fe = f.embed(1, n + 1);
    let mut gens: Vec<SortedPoly> = ideal
        .generators()
        .iter()
        .map(|g| SortedPoly::from_poly(&(&t * &g.embed(1, n + 1)), &elim))
        .collect();
    gens.push(SortedPoly::from_poly(&(&(&Polynomial::one(n + 1) - &t) * &fe), &elim));
    let basis = groebner_sorted(gens, &elim);
    let mut out = Vec::new();
    for g in basis {
        if g.lm().exponent(0) > 0 {
            continue;
        }
        let p = g.to_poly(n + 1).restrict(1, n);
        out.push(divide_exact(&p, f, order)?);
    }
    PolyIdeal::new(ideal.ring(), out)
}

/// Whether `f` is a nonzerodivisor on `R/I`, decided by `I : f ⊆ I`.
pub fn is_regular_element(ideal: &PolyIdeal, f: &Polynomial, order: &TermOrder) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let gb = reduced_groebner_basis(ideal, order)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    f.check_ring(ideal.ring().nvars())?;
    if gb.contains(f) {
        return Err(Error::ElementInIdeal);
    }
    if ideal.is_zero() {
        return Ok(true);
    }
    let q = ideal_quotient(ideal, f, order)?;
    let basis: Vec<SortedPoly> = gb
        .elements
        .iter()
        .map(|g| SortedPoly::from_poly(g, order))
        .collect();
    Ok(q
        .generators()
        .iter()
        .all(|g| reduce_sorted(&SortedPoly::from_poly(g, order), &basis, order).is_zero()))
}
