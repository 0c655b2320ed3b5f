use super::{initial_ideal, PolyIdeal};
use crate::algebra::{Monomial, TermOrder};
use crate::error::Result;

/// Number of standard monomials (monomials outside `ini(I)`) in each degree `0..=max_degree`.
pub fn standard_monomial_counts(
    ideal: &PolyIdeal,
    order: &TermOrder,
    max_degree: u32,
) -> Result<Vec<u64>> {
    let ini = initial_ideal(ideal, order)?;
    let n = ideal.ring().nvars();
    let mut counts = vec![0u64; max_degree as usize + 1];
    let mut exps = vec![0u32; n];
    walk(&mut exps, 0, 0, max_degree, &mut |e, d| {
        let m = Monomial::from_exponents(e.to_vec());
        if !ini.generators().iter().any(|g| g.divides(&m)) {
            counts[d as usize] += 1;
        }
    });
    Ok(counts)
}

fn walk(exps: &mut [u32], var: usize, deg: u32, max: u32, visit: &mut impl FnMut(&[u32], u32)) {
    if var == exps.len() {
        visit(exps, deg);
        return;
    }
    for e in 0..=(max - deg) {
        exps[var] = e;
        walk(exps, var + 1, deg + e, max, visit);
    }
    exps[var] = 0;
}
