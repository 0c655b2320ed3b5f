use std::collections::HashMap;

use super::forms::tail_degree_ok;
use super::{LinearSumForm, OrderConstraint, PipelineConfig, Strategy};
use crate::error::Result;
use crate::monomial_ideal::{Hypergraph, MonomialIdeal};

/// Largest candidate set for which `Strategy::Exhaustive` searches all choices.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// Hypergraph data shared by the combinatorial searches, with variables
/// ranked by a (possibly shuffled) priority.
pub(crate) struct SearchContext {
    pub(crate) graph: Hypergraph,
    pub(crate) rank: Vec<usize>,
    /// Whether a variable may appear in the tail of a form.
    pub(crate) tail_ok: Vec<bool>,
}

impl SearchContext {
    pub(crate) fn new(ideal: &MonomialIdeal, rank: Vec<usize>, relaxed: bool) -> Result<Self> {
        let graph = ideal.hypergraph_view()?;
        let tail_ok = (0..ideal.ring().nvars())
            .map(|v| graph.weight(v) > 0 && tail_degree_ok(ideal, v, relaxed))
            .collect();
        Ok(SearchContext {
            graph,
            rank,
            tail_ok,
        })
    }

    pub(crate) fn nvars(&self) -> usize {
        self.rank.len()
    }

    /// Vertices not yet used, by ascending rank.
    pub(crate) fn free_vertices(&self, used: &[bool]) -> Vec<usize> {
        let mut v: Vec<usize> = self.graph.vertices.iter().copied().filter(|&v| !used[v]).collect();
        v.sort_by_key(|&x| self.rank[x]);
        v
    }

    /// Greedy set cover of `edges` from `pool`, pruned to an inclusion-minimal
    /// cover and returned by ascending rank.
    pub(crate) fn cover(&self, edges: &[usize], pool: &[usize]) -> Option<Vec<usize>> {
        let mut uncovered: Vec<usize> = edges.to_vec();
        let mut chosen: Vec<usize> = Vec::new();
        while !uncovered.is_empty() {
            let best = pool
                .iter()
                .copied()
                .filter(|v| !chosen.contains(v))
                .map(|v| {
                    let hits = uncovered.iter().filter(|&&e| self.graph.edges[e].contains(v)).count();
                    (v, hits)
                })
                .filter(|&(_, hits)| hits > 0)
                .max_by(|a, b| a.1.cmp(&b.1).then(self.rank[b.0].cmp(&self.rank[a.0])))?;
            chosen.push(best.0);
            uncovered.retain(|&e| !self.graph.edges[e].contains(best.0));
        }
        // drop redundant picks, latest first
        let mut k = chosen.len();
        while k > 0 {
            k -= 1;
            let without: Vec<usize> = chosen.iter().copied().filter(|&v| v != chosen[k]).collect();
            if edges
                .iter()
                .all(|&e| without.iter().any(|&v| self.graph.edges[e].contains(v)))
            {
                chosen = without;
            }
        }
        chosen.sort_by_key(|&v| self.rank[v]);
        Some(chosen)
    }

    fn tail_pool(&self, used: &[bool], exclude: usize) -> Vec<usize> {
        self.free_vertices(used)
            .into_iter()
            .filter(|&v| v != exclude && self.tail_ok[v])
            .collect()
    }

    /// Star packing: repeatedly pick a leading vertex and a minimal cover of its
    /// incident edges from unused vertices of weight at most one.
    pub(crate) fn star_pack(&self, used: &mut [bool], strategy: Strategy) -> Vec<LinearSumForm> {
        let candidates = self.free_vertices(used);
        if strategy == Strategy::Exhaustive && candidates.len() <= EXHAUSTIVE_LIMIT {
            return self.star_pack_exhaustive(used, &candidates);
        }
        let mut forms = Vec::new();
        loop {
            // fewest incident edges first, ties by rank
            let mut options: Vec<(usize, usize)> = self
                .free_vertices(used)
                .into_iter()
                .map(|v| (v, self.graph.incident(v).len()))
                .collect();
            options.sort_by_key(|&(v, deg)| (deg, self.rank[v]));
            let pick = options.into_iter().find_map(|(b0, _)| {
                let pool = self.tail_pool(used, b0);
                self.cover(&self.graph.incident(b0), &pool).map(|b| (b0, b))
            });
            let Some((b0, tail)) = pick else { break };
            used[b0] = true;
            for &b in &tail {
                used[b] = true;
            }
            forms.push(LinearSumForm::new(b0, tail).expect("distinct variables"));
        }
        forms
    }

    fn star_pack_exhaustive(&self, used: &mut [bool], cand: &[usize]) -> Vec<LinearSumForm> {
        let l = cand.len();
        let bit = |v: usize| cand.iter().position(|&c| c == v).map(|i| 1u32 << i);
        let tail_mask: u32 = (0..l).filter(|&i| self.tail_ok[cand[i]]).map(|i| 1 << i).sum();
        // minimal covers for each leading vertex, over all tail-eligible candidates
        let mut covers: Vec<Vec<u32>> = Vec::with_capacity(l);
        for (i, &b0) in cand.iter().enumerate() {
            let edge_masks: Vec<u32> = self
                .graph
                .incident(b0)
                .into_iter()
                .map(|e| {
                    self.graph.edges[e]
                        .support
                        .iter()
                        .filter_map(|&v| bit(v))
                        .fold(0, |a, b| a | b)
                })
                .collect();
            let pool = tail_mask & !(1 << i);
            let covers_all = |s: u32| edge_masks.iter().all(|&m| m & s != 0);
            let mut subsets: Vec<u32> = (0u32..(1 << l)).filter(|&s| s & !pool == 0).collect();
            subsets.sort_by_key(|&s| (s.count_ones(), s));
            let mut minimal: Vec<u32> = Vec::new();
            for s in subsets {
                if covers_all(s) && !minimal.iter().any(|&m| m & s == m) {
                    minimal.push(s);
                }
            }
            covers.push(minimal);
        }
        let mut memo: HashMap<u32, Vec<(usize, u32)>> = HashMap::new();
        let plan = best_packing(0, l, &covers, &mut memo);
        plan.into_iter()
            .map(|(i, s)| {
                used[cand[i]] = true;
                let mut tail: Vec<usize> = (0..l).filter(|&j| s & (1 << j) != 0).map(|j| cand[j]).collect();
                for &b in &tail {
                    used[b] = true;
                }
                tail.sort_by_key(|&v| self.rank[v]);
                LinearSumForm::new(cand[i], tail).expect("distinct variables")
            })
            .collect()
    }
}

fn best_packing(
    used: u32,
    l: usize,
    covers: &[Vec<u32>],
    memo: &mut HashMap<u32, Vec<(usize, u32)>>,
) -> Vec<(usize, u32)> {
    if let Some(p) = memo.get(&used) {
        return p.clone();
    }
    let mut best: Vec<(usize, u32)> = Vec::new();
    for i in 0..l {
        if used & (1 << i) != 0 {
            continue;
        }
        for &s in &covers[i] {
            if s & used != 0 {
                continue;
            }
            let rest = best_packing(used | (1 << i) | s, l, covers, memo);
            if rest.len() + 1 > best.len() {
                best = std::iter::once((i, s)).chain(rest).collect();
            }
        }
    }
    memo.insert(used, best.clone());
    best
}

/// Star packing over the whole ideal. Runs under the natural variable order and
/// `restarts` shuffled orders, keeping the longest packing.
pub fn star_packing(
    ideal: &MonomialIdeal,
    config: &PipelineConfig,
) -> Result<(Vec<LinearSumForm>, OrderConstraint)> {
    let mut best: Vec<LinearSumForm> = Vec::new();
    for rank in super::pipeline::rankings(ideal.ring().nvars(), config) {
        let ctx = SearchContext::new(ideal, rank, config.relaxed_degrees)?;
        let mut used = vec![false; ctx.nvars()];
        let forms = ctx.star_pack(&mut used, config.strategy);
        if forms.len() > best.len() {
            best = forms;
        }
    }
    let constraints = OrderConstraint::from_forms(&best);
    Ok((best, constraints))
}
