use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::{GroebnerBasis, PolyIdeal};
use crate::algebra::{Coefficient, Monomial, MonomialOrdering, Polynomial, TermOrder};
use crate::error::{Error, Result};

/// Working representation: terms sorted ascending under the active order, so
/// the leading term is the last element.
#[derive(Clone, Debug)]
pub(crate) struct SortedPoly {
    pub(crate) terms: Vec<(Monomial, Coefficient)>,
}

impl SortedPoly {
    pub(crate) fn from_poly(p: &Polynomial, order: &impl MonomialOrdering) -> Self {
        let mut terms: Vec<(Monomial, Coefficient)> = p
            .terms()
            .iter()
            .map(|t| (t.monomial.clone(), t.coefficient.clone()))
            .collect();
        terms.sort_by(|a, b| order.cmp_monomials(&a.0, &b.0));
        SortedPoly { terms }
    }

    pub(crate) fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lead(&self) -> &(Monomial, Coefficient) {
        self.terms.last().expect("nonzero polynomial")
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.lead().0
    }

    pub(crate) fn make_monic(&mut self) {
        let c = self.lead().1.clone();
        if !c.is_one() {
            let inv = c.recip();
            for t in &mut self.terms {
                t.1 *= &inv;
            }
        }
    }

    /// `self - c·m·g`. Multiplying by a monomial preserves any term order, so
    /// this is a plain merge of two sorted sequences.
    pub(crate) fn sub_mul(
        &self,
        c: &Coefficient,
        m: &Monomial,
        g: &SortedPoly,
        order: &impl MonomialOrdering,
    ) -> SortedPoly {
        let shifted = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c));
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = shifted.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match order.cmp_monomials(&x.0, &y.0) {
                    Ordering::Less => out.push(a.next().expect("peeked")),
                    Ordering::Greater => {
                        let (bm, bc) = b.next().expect("peeked");
                        out.push((bm, -bc));
                    }
                    Ordering::Equal => {
                        let (am, ac) = a.next().expect("peeked");
                        let (_, bc) = b.next().expect("peeked");
                        let s = ac - bc;
                        if !s.is_zero() {
                            out.push((am, s));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().expect("peeked")),
                (None, Some(_)) => {
                    let (bm, bc) = b.next().expect("peeked");
                    out.push((bm, -bc));
                }
                (None, None) => break,
            }
        }
        SortedPoly { terms: out }
    }
}

fn spoly_sorted(f: &SortedPoly, g: &SortedPoly, order: &impl MonomialOrdering) -> SortedPoly {
    let (fm, fc) = f.lead();
    let (gm, gc) = g.lead();
    let l = fm.lcm(gm);
    let uf = l.div(fm).expect("lcm");
    let ug = l.div(gm).expect("lcm");
    // (l/in f)/lc(f) · f − (l/in g)/lc(g) · g
    let mut left = SortedPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&uf), c / fc))
            .collect(),
    };
    left = left.sub_mul(&gc.recip(), &ug, g, order);
    left
}

/// Full reduction of `f` modulo `basis`: the highest remaining term is reduced
/// first, by the first basis element (in list order) whose leading monomial
/// divides it.
pub(crate) fn reduce_sorted(
    f: &SortedPoly,
    basis: &[SortedPoly],
    order: &impl MonomialOrdering,
) -> SortedPoly {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, Coefficient)> = Vec::new();
    while let Some((m, c)) = p.terms.last().cloned() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = m.div(g.lm()).expect("divides");
                let coeff = &c / &g.lead().1;
                p = p.sub_mul(&coeff, &q, g, order);
            }
            None => {
                p.terms.pop();
                rem.push((m, c));
            }
        }
    }
    rem.reverse();
    SortedPoly { terms: rem }
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.check_ring(order.nvars())?;
    g.check_ring(order.nvars())?;
    let s = spoly_sorted(
        &SortedPoly::from_poly(f, order),
        &SortedPoly::from_poly(g, order),
        order,
    );
    Ok(s.to_poly(f.nvars()))
}

/// Remainder of multivariate division of `f` by `basis` (zero divisors are ignored).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Polynomial {
    let sorted: Vec<SortedPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| SortedPoly::from_poly(g, order))
        .collect();
    reduce_sorted(&SortedPoly::from_poly(f, order), &sorted, order).to_poly(f.nvars())
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens` (all nonzero) under
/// an arbitrary monomial ordering. Returns `[1]` for the unit ideal.
pub(crate) fn groebner_sorted(
    gens: Vec<SortedPoly>,
    order: &impl MonomialOrdering,
) -> Vec<SortedPoly> {
    let mut basis: Vec<SortedPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let unit = |g: &SortedPoly| g.lm().is_one();

    let add = |mut g: SortedPoly, basis: &mut Vec<SortedPoly>, pairs: &mut Vec<Pair>| -> bool {
        g.make_monic();
        if unit(&g) {
            return true;
        }
        let j = basis.len();
        for i in 0..j {
            pairs.push(Pair {
                i,
                j,
                lcm: basis[i].lm().lcm(g.lm()),
            });
        }
        basis.push(g);
        false
    };

    for g in gens {
        let r = reduce_sorted(&g, &basis, order);
        if r.is_zero() {
            continue;
        }
        if add(r, &mut basis, &mut pairs) {
            return vec![unit_poly(order_nvars(&g))];
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first, ties by insertion
        let pos = (0..pairs.len())
            .min_by(|&a, &b| order.cmp_monomials(&pairs[a].lcm, &pairs[b].lcm).then(a.cmp(&b)))
            .expect("nonempty");
        let Pair { i, j, lcm } = pairs.remove(pos);
        if basis[i].lm().is_coprime(basis[j].lm()) {
            continue;
        }
        // chain criterion: some k with in(k) | lcm whose pairs with i and j were already treated
        let treated = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            !pairs.iter().any(|p| p.i == a && p.j == b)
        };
        if (0..basis.len()).any(|k| {
            k != i && k != j && basis[k].lm().divides(&lcm) && treated(i, k) && treated(j, k)
        }) {
            continue;
        }
        let s = spoly_sorted(&basis[i], &basis[j], order);
        let r = reduce_sorted(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        let nvars = r.lm().nvars();
        if add(r, &mut basis, &mut pairs) {
            return vec![unit_poly(nvars)];
        }
    }

    interreduce(basis, order)
}

fn order_nvars(g: &SortedPoly) -> usize {
    g.lm().nvars()
}

fn unit_poly(nvars: usize) -> SortedPoly {
    SortedPoly {
        terms: vec![(Monomial::one(nvars), Coefficient::one())],
    }
}

fn interreduce(basis: Vec<SortedPoly>, order: &impl MonomialOrdering) -> Vec<SortedPoly> {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            l != k && h.lm().divides(g.lm()) && (h.lm() != g.lm() || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, h)| h.clone())
            .collect();
        let mut r = reduce_sorted(&minimal[k], &others, order);
        r.make_monic();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp_monomials(b.lm(), a.lm()));
    reduced
}

pub fn reduced_groebner_basis(ideal: &PolyIdeal, order: &TermOrder) -> Result<GroebnerBasis> {
    let n = ideal.ring().nvars();
    if order.nvars() != n {
        return Err(Error::RingMismatch {
            expected: n,
            found: order.nvars(),
        });
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| SortedPoly::from_poly(g, order))
        .collect();
    let basis = groebner_sorted(gens, order);
    Ok(GroebnerBasis {
        order: order.clone(),
        elements: basis.iter().map(|g| g.to_poly(n)).collect(),
        reduced: true,
    })
}
