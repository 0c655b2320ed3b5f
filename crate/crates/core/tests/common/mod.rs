//! Seeded instance generators and independent reference computations shared
//! by the integration tests.
#![allow(dead_code)]

pub mod suites;

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use inireg::algebra::{Coefficient, Monomial, OrderKind, Polynomial, Ring, TermOrder};
use inireg::monomial_ideal::MonomialIdeal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_kind(rng: &mut ChaCha8Rng) -> OrderKind {
    [OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex][rng.gen_range(0..3)]
}

pub fn random_order(rng: &mut ChaCha8Rng, n: usize) -> TermOrder {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    TermOrder::new(random_kind(rng), p).unwrap()
}

/// Random order in which every `(a, b)` of `greater` has `a` above `b`;
/// `None` if the constraints are cyclic.
pub fn random_order_respecting(rng: &mut ChaCha8Rng, n: usize, greater: &[(usize, usize)]) -> Option<TermOrder> {
    let mut indeg = vec![0usize; n];
    for &(_, b) in greater {
        indeg[b] += 1;
    }
    let mut done = vec![false; n];
    let mut priority = Vec::with_capacity(n);
    while priority.len() < n {
        let ready: Vec<usize> = (0..n).filter(|&v| !done[v] && indeg[v] == 0).collect();
        let &v = ready.choose(rng)?;
        done[v] = true;
        priority.push(v);
        for &(a, b) in greater {
            if a == v {
                indeg[b] -= 1;
            }
        }
    }
    Some(TermOrder::new(random_kind(rng), priority).unwrap())
}

pub fn ring(n: usize) -> Ring {
    Ring::indexed("x", n).unwrap()
}

/// Random monomial with support in `vars`, total degree in `1..=max_degree`.
pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, vars: &[usize], max_degree: u32) -> Monomial {
    let deg = rng.gen_range(1..=max_degree);
    let mut e = vec![0u32; n];
    for _ in 0..deg {
        e[*vars.choose(rng).unwrap()] += 1;
    }
    Monomial::from_exponents(e)
}

/// Random monomial ideal with `1..=max_gens` generators of degree
/// `1..=max_degree` (never the unit ideal).
pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, ring: &Ring, max_gens: usize, max_degree: u32) -> MonomialIdeal {
    let n = ring.nvars();
    let vars: Vec<usize> = (0..n).collect();
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| random_monomial(rng, n, &vars, max_degree));
    MonomialIdeal::new(ring, gens).unwrap()
}

pub fn random_squarefree_ideal(rng: &mut ChaCha8Rng, ring: &Ring, max_gens: usize, max_size: usize) -> MonomialIdeal {
    let n = ring.nvars();
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k).map(|_| {
        let size = rng.gen_range(1..=max_size.min(n));
        let mut vars: Vec<usize> = (0..n).collect();
        vars.shuffle(rng);
        Monomial::from_support(n, vars[..size].iter().copied())
    });
    MonomialIdeal::new(ring, gens).unwrap()
}

pub fn polarized_size(ideal: &MonomialIdeal) -> usize {
    (0..ideal.ring().nvars()).map(|v| ideal.var_degree(v).max(1) as usize).sum()
}

pub fn small_coefficient(rng: &mut ChaCha8Rng) -> Coefficient {
    let mut c = 0i64;
    while c == 0 {
        c = rng.gen_range(-3..=3);
    }
    BigRational::from_integer(c.into())
}

/// Random polynomial in `vars` with `1..=max_terms` terms of degree `1..=max_degree`.
pub fn random_polynomial(rng: &mut ChaCha8Rng, n: usize, vars: &[usize], max_terms: usize, max_degree: u32) -> Polynomial {
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..k)
        .map(|_| (random_monomial(rng, n, vars, max_degree), small_coefficient(rng)))
        .collect();
    Polynomial::from_terms(n, terms)
}

/// Random homogeneous polynomial of the given degree.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, degree: u32, max_terms: usize) -> Polynomial {
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..k)
        .map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..degree {
                e[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_exponents(e), small_coefficient(rng))
        })
        .collect();
    Polynomial::from_terms(n, terms)
}

/// Rank over the rationals by dense Gaussian elimination.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = &rows[r][c] / &pivot;
                for k in c..cols {
                    let delta = &factor * &rows[rank][k];
                    rows[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced homology ranks of the complex whose faces are `faces` (closed
/// under subsets, `∅` included if non-void), returned as dimension → rank.
fn reduced_homology(faces: &BTreeSet<Vec<usize>>) -> BTreeMap<isize, usize> {
    let mut by_size: BTreeMap<usize, Vec<&Vec<usize>>> = BTreeMap::new();
    for f in faces {
        by_size.entry(f.len()).or_default().push(f);
    }
    let rank_of = |s: usize| -> usize {
        let (Some(upper), Some(lower)) = (by_size.get(&s), by_size.get(&(s - 1))) else {
            return 0;
        };
        let index: BTreeMap<&Vec<usize>, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let rows = upper
            .iter()
            .map(|f| {
                let mut row = vec![BigRational::zero(); lower.len()];
                for i in 0..f.len() {
                    let mut g = (*f).clone();
                    g.remove(i);
                    let sign = if i % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                    row[index[&g]] = sign;
                }
                row
            })
            .collect();
        rational_rank(rows)
    };
    let max = by_size.keys().max().copied().unwrap_or(0);
    let ranks: Vec<usize> = (0..=max + 1).map(|s| if s == 0 { 0 } else { rank_of(s) }).collect();
    let mut out = BTreeMap::new();
    for s in 0..=max {
        let count = by_size.get(&s).map_or(0, Vec::len);
        let h = count - ranks[s] - ranks.get(s + 1).copied().unwrap_or(0);
        if h > 0 {
            out.insert(s as isize - 1, h);
        }
    }
    out
}

/// `depth R/I` straight from the multigraded Betti numbers of `I`, computed
/// with upper Koszul complexes `K^b = {F ⊆ supp b : x^(b−F) ∈ I}` over the
/// lcm lattice; works for any monomial ideal, no polarization involved.
pub fn koszul_depth(ideal: &MonomialIdeal) -> usize {
    let n = ideal.ring().nvars();
    let gens = ideal.generators();
    if gens.is_empty() {
        return n;
    }
    let mut lattice: BTreeSet<Vec<u32>> = BTreeSet::new();
    for g in gens {
        let mut next: Vec<Vec<u32>> = vec![g.exponents().to_vec()];
        for b in &lattice {
            next.push(b.iter().zip(g.exponents()).map(|(x, y)| *x.max(y)).collect());
        }
        lattice.extend(next);
    }
    let in_ideal = |e: &[u32]| gens.iter().any(|g| g.exponents().iter().zip(e).all(|(a, b)| a <= b));
    let mut pd_ideal = 0usize;
    for b in &lattice {
        let support: Vec<usize> = (0..n).filter(|&v| b[v] > 0).collect();
        let mut faces = BTreeSet::new();
        for mask in 0u32..(1 << support.len()) {
            let face: Vec<usize> = (0..support.len()).filter(|i| mask & (1 << i) != 0).map(|i| support[i]).collect();
            let mut e = b.clone();
            for &v in &face {
                e[v] -= 1;
            }
            if in_ideal(&e) {
                faces.insert(face);
            }
        }
        for &dim in reduced_homology(&faces).keys() {
            // β_{i,b}(I) = dim H̃_{i−1}(K^b)
            pd_ideal = pd_ideal.max((dim + 1) as usize);
        }
    }
    n - (pd_ideal + 1)
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `dim_k (R/J)_d` for homogeneous generators, from the rank of the span of
/// `m·g` in degree `d`.
pub fn hilbert_function(gens: &[Polynomial], n: usize, max_degree: u32) -> Vec<u64> {
    (0..=max_degree)
        .map(|d| {
            let basis = monomials_of_degree(n, d);
            let index: BTreeMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows = Vec::new();
            for g in gens {
                let Some(gd) = g.total_degree() else { continue };
                if gd > d {
                    continue;
                }
                for m in monomials_of_degree(n, d - gd) {
                    let shifted = g.mul_monomial(&Monomial::from_exponents(m));
                    let mut row = vec![BigRational::zero(); basis.len()];
                    for t in shifted.terms() {
                        row[index[&t.monomial.exponents().to_vec()]] = t.coefficient.clone();
                    }
                    rows.push(row);
                }
            }
            (basis.len() - rational_rank(rows)) as u64
        })
        .collect()
}
