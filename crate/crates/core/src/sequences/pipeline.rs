use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::chains::Chain;
use super::forms::build_term_order_ranked;
use super::merge::{merge_certificates, Provenance, SequencePart};
use super::star::SearchContext;
use super::verify::{build_certificate, CandidateStep, IniRegCertificate, Verifier};
use super::LinearSumForm;
use crate::algebra::TermOrder;
use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, PolyIdeal};
use crate::monomial_ideal::MonomialIdeal;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    #[default]
    Greedy,
    Exhaustive,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(Strategy::Greedy),
            "exhaustive" => Ok(Strategy::Exhaustive),
            _ => Err(Error::Usage(format!("unknown strategy `{s}` (expected greedy or exhaustive)"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub strategy: Strategy,
    /// Extra runs under seeded random variable permutations.
    pub restarts: usize,
    pub seed: u64,
    pub relaxed_degrees: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            strategy: Strategy::Greedy,
            restarts: 8,
            seed: 0,
            relaxed_degrees: false,
        }
    }
}

/// The identity ranking followed by `restarts` seeded shuffles; `rank[v]` is
/// the position of variable `v`.
pub(crate) fn rankings(n: usize, config: &PipelineConfig) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = vec![(0..n).collect::<Vec<_>>()];
    for _ in 0..config.restarts {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut rank = vec![0; n];
        for (pos, &v) in perm.iter().enumerate() {
            rank[v] = pos;
        }
        out.push(rank);
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolarizationAdjustment {
    pub new_variables: usize,
    pub bound_polarized: usize,
    pub bound_original: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DepthReport {
    /// Certified lower bound for the depth of the input ring.
    pub lower_bound: usize,
    pub certificate: IniRegCertificate,
    pub oracle_depth: Option<usize>,
    /// `ini(I)` is squarefree, so `R/I` and `R/ini(I)` have equal depth.
    pub squarefree_equality: bool,
    pub polarization: Option<PolarizationAdjustment>,
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Stage {
    Chains,
    Stars,
    Leaves,
}

const PLANS: [&[Stage]; 4] = [
    &[Stage::Chains, Stage::Stars, Stage::Leaves],
    &[Stage::Leaves, Stage::Chains, Stage::Stars],
    &[Stage::Stars, Stage::Leaves],
    &[Stage::Chains, Stage::Leaves, Stage::Stars],
];

fn run_plan(
    ideal: &MonomialIdeal,
    ctx: &SearchContext,
    stages: &[Stage],
    seeds: &[SequencePart],
    strategy: Strategy,
) -> Vec<SequencePart> {
    let n = ctx.nvars();
    let mut used = vec![false; n];
    let mut parts: Vec<SequencePart> = seeds.to_vec();
    for p in seeds {
        for f in &p.forms {
            for v in f.variables() {
                used[v] = true;
            }
        }
    }
    for stage in stages {
        match stage {
            Stage::Chains => parts.extend(
                ctx.find_chains(&mut used)
                    .into_iter()
                    .map(|c| SequencePart::new(Provenance::Chain, c.forms())),
            ),
            Stage::Stars => {
                let forms = ctx.star_pack(&mut used, strategy);
                if !forms.is_empty() {
                    parts.push(SequencePart::new(Provenance::StarPack, forms));
                }
            }
            Stage::Leaves => {
                let allowed: Vec<bool> = used.iter().map(|u| !u).collect();
                let pairs = ideal.find_leaf_pairs_among(&allowed, &ctx.rank);
                let forms: Vec<LinearSumForm> = pairs
                    .iter()
                    .map(|p| {
                        used[p.x] = true;
                        used[p.y] = true;
                        LinearSumForm::pair(p.x, p.y).expect("distinct leaves")
                    })
                    .collect();
                if !forms.is_empty() {
                    parts.push(SequencePart::new(Provenance::LeafPair, forms));
                }
            }
        }
    }
    parts
}

fn search(
    base: &PolyIdeal,
    order: &TermOrder,
    initial: &MonomialIdeal,
    config: &PipelineConfig,
    seeds: &[SequencePart],
) -> Result<IniRegCertificate> {
    let ring = initial.ring();
    let n = ring.nvars();
    let free: Vec<LinearSumForm> = initial
        .free_variables()
        .into_iter()
        .map(LinearSumForm::single)
        .collect();
    let free_part = SequencePart::new(Provenance::FreeVariable, free);
    let mut verifier = Verifier::new();
    let mut seen = HashSet::new();
    let mut best: Option<IniRegCertificate> = None;

    let mut plans: Vec<(&[Stage], &[SequencePart])> = Vec::new();
    if !seeds.is_empty() {
        plans.push((PLANS[0], seeds));
    }
    plans.extend(PLANS.iter().map(|p| (*p, &[][..])));

    let rankings = if initial.is_zero() {
        vec![(0..n).collect()]
    } else {
        rankings(n, config)
    };
    for rank in rankings {
        let ctx = if initial.is_zero() {
            None
        } else {
            Some(SearchContext::new(initial, rank.clone(), config.relaxed_degrees)?)
        };
        for &(stages, seeds) in &plans {
            let mut parts = vec![free_part.clone()];
            if let Some(ctx) = &ctx {
                parts.extend(run_plan(initial, ctx, stages, seeds, config.strategy));
            }
            let merged = merge_certificates(initial, &parts)
                .map_err(|e| Error::Defect(format!("constructed parts failed to merge: {e}")))?;
            let step_order = build_term_order_ranked(ring, &merged.constraints, order.kind(), &rank)?;
            let forms: Vec<LinearSumForm> = merged.steps.iter().map(|(f, _)| f.clone()).collect();
            if !seen.insert((forms, step_order.priority().to_vec())) {
                continue;
            }
            let candidates: Vec<CandidateStep> = merged
                .steps
                .into_iter()
                .map(|(f, provenance)| CandidateStep {
                    form: f.to_polynomial(n),
                    linear: Some(f),
                    order: step_order.clone(),
                    provenance,
                })
                .collect();
            let cert = build_certificate(&mut verifier, base, order, initial, &candidates, true)?;
            if best.as_ref().is_none_or(|b| cert.len() > b.len()) {
                best = Some(cert);
            }
        }
    }
    Ok(best.expect("at least one plan runs"))
}

fn report(certificate: IniRegCertificate, config: &PipelineConfig) -> DepthReport {
    let squarefree_equality = certificate.initial_ideal.is_squarefree();
    let mut notes = Vec::new();
    if squarefree_equality {
        notes.push(
            "ini(I) is squarefree: depth R/I = depth R/ini(I), so the bound may be attained".to_string(),
        );
    }
    if config.relaxed_degrees {
        notes.push(
            "relaxed degree condition: each tail variable may appear to one fixed power of its own"
                .to_string(),
        );
    }
    DepthReport {
        lower_bound: certificate.len(),
        certificate,
        oracle_depth: None,
        squarefree_equality,
        polarization: None,
        notes,
    }
}

/// Certified lower bound for `depth R/I`: the initial ideal under `order`,
/// free variables, then leaf pairs, chains and star packings assembled into
/// an initially regular sequence. Every step is verified.
pub fn depth_lower_bound(ideal: &PolyIdeal, order: &TermOrder, config: &PipelineConfig) -> Result<DepthReport> {
    let initial = initial_ideal(ideal, order)?;
    let cert = search(ideal, order, &initial, config, &[])?;
    Ok(report(cert, config))
}

/// Bound through the polarization: the polarized chains
/// `x_pd + x_p(d-1), …, x_p2 + x` are always available, and the bound on the
/// original ring is the polarized bound minus the number of new variables.
pub fn polarized_bound(ideal: &MonomialIdeal, order: &TermOrder, config: &PipelineConfig) -> Result<DepthReport> {
    let (pol, map) = ideal.polarize()?;
    let n = ideal.ring().nvars();
    let mut priority = order.priority().to_vec();
    priority.extend(n..pol.ring().nvars());
    let pol_order = TermOrder::new(order.kind(), priority)?;
    let seeds: Vec<SequencePart> = map
        .columns
        .iter()
        .filter(|col| col.len() >= 2)
        .map(|col| {
            let vars: Vec<usize> = col.iter().rev().copied().collect();
            let chain = Chain {
                q: vars.len() - 1,
                vars,
            };
            SequencePart::new(Provenance::Chain, chain.forms())
        })
        .collect();
    let cert = search(&PolyIdeal::from_monomial_ideal(&pol), &pol_order, &pol, config, &seeds)?;
    let bound_polarized = cert.len();
    if bound_polarized < map.new_variables {
        return Err(Error::Defect(format!(
            "polarized bound {bound_polarized} below the {} polarizing variables",
            map.new_variables
        )));
    }
    let mut rep = report(cert, config);
    rep.lower_bound = bound_polarized - map.new_variables;
    rep.polarization = Some(PolarizationAdjustment {
        new_variables: map.new_variables,
        bound_polarized,
        bound_original: rep.lower_bound,
    });
    Ok(rep)
}
