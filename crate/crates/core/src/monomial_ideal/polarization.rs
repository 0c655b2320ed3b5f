use serde::Serialize;

use super::MonomialIdeal;
use crate::algebra::{Monomial, Ring};
use crate::error::{Error, Result};

/// Records which polarized variables stand for each original variable.
/// Original variable `x` of degree `d` becomes `x, x_p2, …, x_pd`; the new
/// names are appended after the original ring in variable order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PolarizationMap {
    /// Per original variable, the polarized variable indices `x_{·,1}, …, x_{·,d}`.
    pub columns: Vec<Vec<usize>>,
    pub names: Vec<Vec<String>>,
    pub new_variables: usize,
}

impl PolarizationMap {
    /// Sends every polarized variable back to its original (`x_{·,j} ↦ x`).
    pub fn specialize(&self, m: &Monomial) -> Monomial {
        let mut e = vec![0u32; self.columns.len()];
        for (orig, col) in self.columns.iter().enumerate() {
            e[orig] = col.iter().map(|&v| m.exponent(v)).sum();
        }
        Monomial::from_exponents(e)
    }
}

impl MonomialIdeal {
    pub fn polarize(&self) -> Result<(MonomialIdeal, PolarizationMap)> {
        let ring = self.ring();
        let n = ring.nvars();
        let mut extra = Vec::new();
        let mut columns = Vec::with_capacity(n);
        let mut names = Vec::with_capacity(n);
        let mut next = n;
        for v in 0..n {
            let d = self.var_degree(v).max(1);
            let mut col = vec![v];
            let mut nm = vec![ring.name(v).to_string()];
            for j in 2..=d {
                let name = format!("{}_p{j}", ring.name(v));
                if ring.index_of(&name).is_some() {
                    return Err(Error::InvalidRing(format!(
                        "polarizing variable `{name}` clashes with an existing variable"
                    )));
                }
                extra.push(name.clone());
                nm.push(name);
                col.push(next);
                next += 1;
            }
            columns.push(col);
            names.push(nm);
        }
        let pol_ring: Ring = ring.extended(extra.iter().cloned())?;
        let total = pol_ring.nvars();
        let gens = self.generators().iter().map(|g| {
            Monomial::from_support(
                total,
                (0..n).flat_map(|v| columns[v][..g.exponent(v) as usize].iter().copied()),
            )
        });
        let polarized = MonomialIdeal::new(&pol_ring, gens)?;
        Ok((
            polarized,
            PolarizationMap {
                columns,
                names,
                new_variables: extra.len(),
            },
        ))
    }
}
