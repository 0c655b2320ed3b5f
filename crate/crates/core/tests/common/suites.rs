//! Randomized suites with fixed seeds. Each returns the number of instances
//! checked, or a description of the first counterexample.

use rand::seq::SliceRandom;
use rand::Rng;

use inireg::groebner::{initial_ideal, is_regular_element, standard_monomial_counts, PolyIdeal};
use inireg::monomial_ideal::MonomialIdeal;
use inireg::oracle::oracle_depth;
use inireg::sequences::{depth_lower_bound, initial_after_linear_sums, polarized_bound, LinearSumForm, PipelineConfig};
use inireg::Error;

use super::*;

pub type SuiteResult = Result<usize, String>;

fn suite_config() -> PipelineConfig {
    PipelineConfig {
        restarts: 2,
        ..PipelineConfig::default()
    }
}

fn with_generators(ideal: &MonomialIdeal, extra: &[Polynomial]) -> PolyIdeal {
    let mut gens: Vec<Polynomial> = ideal.generators().iter().cloned().map(Polynomial::from_monomial).collect();
    gens.extend(extra.iter().cloned());
    PolyIdeal::new(ideal.ring(), gens).unwrap()
}

/// Closed form of `ini(I, x1 + y1, …)` against Buchberger.
pub fn closed_form_vs_buchberger(seed: u64, instances: usize) -> SuiteResult {
    let mut rng = rng(seed);
    for case in 0..instances {
        let n = rng.gen_range(3..=7);
        let r = ring(n);
        let ideal = random_monomial_ideal(&mut rng, &r, 6, 3);
        let l = rng.gen_range(1..=3.min(n - 1));
        let mut vars: Vec<usize> = (0..n).collect();
        vars.shuffle(&mut rng);
        let leading = &vars[..l];
        let mut forms = Vec::new();
        let mut greater = Vec::new();
        for i in 0..l {
            let allowed: Vec<usize> = (0..n).filter(|v| !leading[..=i].contains(v)).collect();
            let y = *allowed.choose(&mut rng).unwrap();
            forms.push(LinearSumForm::pair(leading[i], y).unwrap());
            greater.push((leading[i], y));
            if i + 1 < l {
                greater.push((leading[i], leading[i + 1]));
            }
        }
        let order = random_order_respecting(&mut rng, n, &greater).expect("constraints are acyclic");
        let closed = initial_after_linear_sums(&ideal, &forms, &order)
            .map_err(|e| format!("case {case}: closed form refused: {e}"))?;
        let polys: Vec<Polynomial> = forms.iter().map(|f| f.to_polynomial(n)).collect();
        let full = initial_ideal(&with_generators(&ideal, &polys), &order).map_err(|e| e.to_string())?;
        if closed.sorted_generator_strings() != full.sorted_generator_strings() {
            return Err(format!(
                "case {case}: I = {:?}, forms {:?}, order {}: closed {:?} vs Buchberger {:?}",
                ideal.sorted_generator_strings(),
                forms.iter().map(|f| f.fmt_with(&r)).collect::<Vec<_>>(),
                order.fmt_with(&r),
                closed.sorted_generator_strings(),
                full.sorted_generator_strings()
            ));
        }
    }
    Ok(instances)
}

/// Random monomial ideal (n ≤ 8, ≤ 10 generators, degree ≤ 4) whose
/// polarization stays within the oracle's size guard.
fn oracle_sized_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(2..=8);
        let r = ring(n);
        let ideal = if rng.gen_bool(0.5) {
            random_squarefree_ideal(rng, &r, 10, 4)
        } else {
            random_monomial_ideal(rng, &r, 10, 4)
        };
        if polarized_size(&ideal) <= 16 {
            return ideal;
        }
    }
}

/// Every certificate the pipeline produces is bounded by the oracle depth.
pub fn soundness(seed: u64, instances: usize) -> SuiteResult {
    let mut rng = rng(seed);
    let cfg = suite_config();
    let mut certificates = 0;
    for case in 0..instances {
        let ideal = oracle_sized_ideal(&mut rng);
        let n = ideal.ring().nvars();
        let order = random_order(&mut rng, n);
        let depth = oracle_depth(&ideal, false).map_err(|e| e.to_string())?;
        let rep = depth_lower_bound(&PolyIdeal::from_monomial_ideal(&ideal), &order, &cfg)
            .map_err(|e| format!("case {case}: {e}"))?;
        certificates += 1;
        if !rep.certificate.verified || rep.lower_bound > depth {
            return Err(format!(
                "case {case}: I = {:?}: bound {} (verified {}) vs oracle {depth}",
                ideal.sorted_generator_strings(),
                rep.lower_bound,
                rep.certificate.verified
            ));
        }
        if !ideal.is_squarefree() {
            let pol = polarized_bound(&ideal, &order, &cfg).map_err(|e| format!("case {case}: {e}"))?;
            certificates += 1;
            if !pol.certificate.verified || pol.lower_bound > depth {
                return Err(format!(
                    "case {case}: I = {:?}: polarized bound {} vs oracle {depth}",
                    ideal.sorted_generator_strings(),
                    pol.lower_bound
                ));
            }
        }
    }
    Ok(certificates)
}

fn outcome(r: inireg::Result<bool>) -> Result<bool, String> {
    r.map_err(|e| match e {
        Error::ElementInIdeal => "in ideal".to_string(),
        other => other.to_string(),
    })
}

/// `f` avoiding `b0` is regular on `R/(I, b0 + b1)` iff on `R/ini(I, b0 + b1)`.
pub fn regular_iff_initially_regular(seed: u64, instances: usize) -> SuiteResult {
    let mut rng = rng(seed);
    for case in 0..instances {
        let n = rng.gen_range(3..=6);
        let r = ring(n);
        let ideal = random_monomial_ideal(&mut rng, &r, 5, 3);
        let mut vars: Vec<usize> = (0..n).collect();
        vars.shuffle(&mut rng);
        let (b0, b1) = (vars[0], vars[1]);
        let rest: Vec<usize> = (0..n).filter(|&v| v != b0).collect();
        let f = loop {
            let f = random_polynomial(&mut rng, n, &rest, 3, 2);
            if !f.is_constant() {
                break f;
            }
        };
        let order = random_order_respecting(&mut rng, n, &[(b0, b1)]).unwrap();
        let sum = Polynomial::sum_of_variables(n, &[b0, b1]);
        let with_sum = with_generators(&ideal, &[sum]);
        let ini = initial_ideal(&with_sum, &order).map_err(|e| e.to_string())?;
        let left = outcome(is_regular_element(&with_sum, &f, &order));
        let right = outcome(is_regular_element(&PolyIdeal::from_monomial_ideal(&ini), &f, &order));
        if left != right {
            return Err(format!(
                "case {case}: I = {:?}, b0 = {}, b1 = {}, f = {}: {left:?} vs {right:?}",
                ideal.sorted_generator_strings(),
                r.name(b0),
                r.name(b1),
                f.fmt_with(&r, None)
            ));
        }
    }
    Ok(instances)
}

/// Standard monomials of `ini(J)` count the Hilbert function of `R/J`.
pub fn macaulay_counts(seed: u64, instances: usize) -> SuiteResult {
    let mut rng = rng(seed);
    for case in 0..instances {
        let n = rng.gen_range(2..=4);
        let r = ring(n);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| loop {
                let d = rng.gen_range(1..=3);
                let g = random_homogeneous(&mut rng, n, d, 3);
                if !g.is_zero() {
                    break g;
                }
            })
            .collect();
        let order = random_order(&mut rng, n);
        let ideal = PolyIdeal::new(&r, gens.clone()).unwrap();
        let counts = standard_monomial_counts(&ideal, &order, 6).map_err(|e| e.to_string())?;
        let expected = hilbert_function(&gens, n, 6);
        if counts != expected {
            return Err(format!(
                "case {case}: J = {:?}, order {}: {counts:?} vs {expected:?}",
                gens.iter().map(|g| g.fmt_with(&r, None)).collect::<Vec<_>>(),
                order.fmt_with(&r)
            ));
        }
    }
    Ok(instances)
}

fn non_squarefree_ideal(rng: &mut ChaCha8Rng, max_vars: usize) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(2..=max_vars);
        let ideal = random_monomial_ideal(rng, &ring(n), 5, 3);
        if !ideal.is_squarefree() && polarized_size(&ideal) <= 16 {
            return ideal;
        }
    }
}

/// Depth through the polarization equals depth from the Betti numbers of `I`
/// itself.
pub fn polarization_identity(seed: u64, instances: usize) -> SuiteResult {
    let mut rng = rng(seed);
    for case in 0..instances {
        let ideal = non_squarefree_ideal(&mut rng, 6);
        let (pol, map) = ideal.polarize().map_err(|e| e.to_string())?;
        let through_pol = oracle_depth(&pol, false).map_err(|e| e.to_string())? - map.new_variables;
        let direct = oracle_depth(&ideal, false).map_err(|e| e.to_string())?;
        let koszul = koszul_depth(&ideal);
        if through_pol != koszul || direct != koszul {
            return Err(format!(
                "case {case}: I = {:?}: polarized {through_pol}, oracle {direct}, Koszul {koszul}",
                ideal.sorted_generator_strings()
            ));
        }
    }
    Ok(instances)
}

/// The polarized bound always covers the polarizing variables.
pub fn polarization_guarantee(seed: u64, instances: usize) -> SuiteResult {
    let mut rng = rng(seed);
    let cfg = suite_config();
    for case in 0..instances {
        let ideal = non_squarefree_ideal(&mut rng, 6);
        let order = random_order(&mut rng, ideal.ring().nvars());
        let rep = polarized_bound(&ideal, &order, &cfg).map_err(|e| format!("case {case}: {e}"))?;
        let adj = rep.polarization.expect("polarized report");
        if adj.bound_polarized < adj.new_variables || !rep.certificate.verified {
            return Err(format!(
                "case {case}: I = {:?}: polarized bound {} < {} new variables",
                ideal.sorted_generator_strings(),
                adj.bound_polarized,
                adj.new_variables
            ));
        }
    }
    Ok(instances)
}
