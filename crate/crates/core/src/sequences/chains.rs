use serde::Serialize;

use super::star::SearchContext;
use super::{LinearSumForm, OrderConstraint, PipelineConfig};
use crate::error::Result;
use crate::monomial_ideal::MonomialIdeal;

const DFS_BUDGET: usize = 50_000;

/// Variables `b0 > b1 > … > bt` with split index `q`: the forms are
/// `b_{i-1} + b_i` for `i < q`, then `b_{q-1} + b_q + … + b_t`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Chain {
    pub vars: Vec<usize>,
    pub q: usize,
}

impl Chain {
    pub fn forms(&self) -> Vec<LinearSumForm> {
        let mut out: Vec<LinearSumForm> = (1..self.q)
            .map(|i| LinearSumForm::pair(self.vars[i - 1], self.vars[i]).expect("distinct"))
            .collect();
        out.push(
            LinearSumForm::new(self.vars[self.q - 1], self.vars[self.q..].to_vec()).expect("distinct"),
        );
        out
    }

    /// Each variable exceeds all later ones.
    pub fn constraints(&self) -> OrderConstraint {
        let mut c = OrderConstraint::new();
        for w in self.vars[..self.q].windows(2) {
            c.push(w[0], w[1]);
        }
        for &b in &self.vars[self.q..] {
            c.push(self.vars[self.q - 1], b);
        }
        c
    }
}

impl SearchContext {
    /// `u → v` when `v` may sit in a tail and every generator containing `u`
    /// also contains `v`.
    fn arrow(&self, u: usize, v: usize) -> bool {
        u != v
            && self.tail_ok[v]
            && self
                .graph
                .edges
                .iter()
                .all(|e| !e.contains(u) || e.contains(v))
    }

    /// Greedy disjoint chains of length at least two: longest first, then
    /// fewest variables, then lowest ranks.
    pub(crate) fn find_chains(&self, used: &mut [bool]) -> Vec<Chain> {
        let mut out = Vec::new();
        while let Some(chain) = self.best_chain(used) {
            for &v in &chain.vars {
                used[v] = true;
            }
            out.push(chain);
        }
        out
    }

    fn best_chain(&self, used: &[bool]) -> Option<Chain> {
        let vertices = self.free_vertices(used);
        let mut best: Option<(Chain, Vec<usize>)> = None;
        let mut budget = DFS_BUDGET;
        for &start in &vertices {
            let mut path = vec![start];
            self.extend(&vertices, &mut path, &mut best, &mut budget);
        }
        best.map(|(c, _)| c)
    }

    fn extend(
        &self,
        vertices: &[usize],
        path: &mut Vec<usize>,
        best: &mut Option<(Chain, Vec<usize>)>,
        budget: &mut usize,
    ) {
        if *budget == 0 {
            return;
        }
        *budget -= 1;
        let last = *path.last().expect("nonempty path");
        if path.len() >= 2 {
            let pool: Vec<usize> = vertices
                .iter()
                .copied()
                .filter(|v| !path.contains(v) && self.tail_ok[*v])
                .collect();
            if let Some(block) = self.cover(&self.graph.incident(last), &pool) {
                let mut vars = path.clone();
                vars.extend(block);
                let key: Vec<usize> = vars.iter().map(|&v| self.rank[v]).collect();
                let better = match best {
                    None => true,
                    Some((b, bkey)) => (path.len(), std::cmp::Reverse(vars.len()), std::cmp::Reverse(&key))
                        > (b.q, std::cmp::Reverse(b.vars.len()), std::cmp::Reverse(&*bkey)),
                };
                if better {
                    *best = Some((
                        Chain {
                            vars,
                            q: path.len(),
                        },
                        key,
                    ));
                }
            }
        }
        for &v in vertices {
            if !path.contains(&v) && self.arrow(last, v) {
                path.push(v);
                self.extend(vertices, path, best, budget);
                path.pop();
            }
        }
    }
}

/// Disjoint chains in the hypergraph of `ideal`, scanned in natural variable order.
pub fn find_chains(ideal: &MonomialIdeal, config: &PipelineConfig) -> Result<Vec<Chain>> {
    let n = ideal.ring().nvars();
    let ctx = SearchContext::new(ideal, (0..n).collect(), config.relaxed_degrees)?;
    Ok(ctx.find_chains(&mut vec![false; n]))
}
