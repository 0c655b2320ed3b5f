//! End-to-end acceptance: the worked examples and the randomized suites,
//! each reported as one PASS/FAIL line. Every comparison is exact.

mod common;

use std::time::Instant;

use inireg::algebra::{parse_polynomial, OrderKind, Polynomial, TermOrder};
use inireg::cli::{fixture, parse_problem, ProblemFile};
use inireg::groebner::{initial_ideal, PolyIdeal};
use inireg::monomial_ideal::MonomialIdeal;
use inireg::oracle::oracle_depth;
use inireg::sequences::{
    build_term_order, depth_lower_bound, find_chains, polarized_bound, star_packing, verify_initially_regular,
    DepthReport, PipelineConfig, Provenance,
};

use common::suites;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn load(name: &str) -> ProblemFile {
    parse_problem(fixture(name).expect("fixture")).expect("fixture parses")
}

fn ideal_of(p: &ProblemFile) -> PolyIdeal {
    PolyIdeal::new(&p.ring, p.ideal.clone()).unwrap()
}

fn monomial_of(p: &ProblemFile) -> MonomialIdeal {
    ideal_of(p).as_monomial_ideal().expect("monomial fixture").unwrap()
}

fn bound(p: &ProblemFile) -> Result<DepthReport, String> {
    let rep = depth_lower_bound(&ideal_of(p), &p.order, &PipelineConfig::default()).map_err(|e| e.to_string())?;
    ensure!(rep.certificate.verified, "certificate not verified");
    Ok(rep)
}

fn ini_strings(p: &ProblemFile) -> Result<Vec<String>, String> {
    Ok(initial_ideal(&ideal_of(p), &p.order).map_err(|e| e.to_string())?.sorted_generator_strings())
}

fn sorted(v: &[&str]) -> Vec<String> {
    let mut out: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    out.sort();
    out
}

fn oracle(i: &MonomialIdeal) -> Result<usize, String> {
    oracle_depth(i, false).map_err(|e| e.to_string())
}

fn oracle_of_initial(p: &ProblemFile) -> Result<usize, String> {
    oracle(&initial_ideal(&ideal_of(p), &p.order).map_err(|e| e.to_string())?)
}

fn bound_and_oracle(name: &str, expected: usize) -> Outcome {
    let p = load(name);
    let rep = bound(&p)?;
    let depth = oracle(&monomial_of(&p))?;
    ensure!(rep.lower_bound == expected, "{name}: bound {} != {expected}", rep.lower_bound);
    ensure!(depth == expected, "{name}: oracle {depth} != {expected}");
    Ok(format!("{name}: bound {} = oracle {depth}", rep.lower_bound))
}

fn c1_intro() -> Outcome {
    let p = load("intro");
    let ini = ini_strings(&p)?;
    ensure!(ini == sorted(&["x3*x5", "x3*x4^2", "x1*x2*x4", "x1*x2*x3"]), "ini = {ini:?}");
    let depth = oracle_of_initial(&p)?;
    ensure!(depth == 2, "oracle depth of ini = {depth}");
    let ideal = ideal_of(&p);
    let f = parse_polynomial("x1 + x2", &p.ring).unwrap();
    let g = parse_polynomial("x5 + x3", &p.ring).unwrap();
    for steps in [[f.clone(), g.clone()], [g, f]] {
        let schedule: Vec<(Polynomial, TermOrder)> = steps.iter().map(|s| (s.clone(), p.order.clone())).collect();
        let cert = verify_initially_regular(&ideal, &p.order, &schedule).map_err(|e| e.to_string())?;
        ensure!(cert.verified && cert.len() == 2, "sequence {:?} not verified", cert.forms());
    }
    let rep = bound(&p)?;
    ensure!(rep.lower_bound == 2, "bound {}", rep.lower_bound);
    Ok("ini matches; f,g and g,f verify; bound 2 = oracle 2".into())
}

fn c2_pentagon() -> Outcome {
    let p = load("extended-pentagon");
    let ini = ini_strings(&p)?;
    let expected = sorted(&["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5", "x1*x6", "x5*x7", "x7*x8"]);
    ensure!(ini == expected, "ini = {ini:?}");
    let rep = bound(&p)?;
    ensure!(rep.lower_bound == 3, "bound {}", rep.lower_bound);
    ensure!(rep.squarefree_equality, "squarefree-equality flag not set");
    let depth = oracle_of_initial(&p)?;
    ensure!(depth >= 3, "oracle depth of ini {depth} < 3");
    Ok(format!("bound 3 via {:?}; oracle(ini) {depth}; squarefree flag set", rep.certificate.forms()))
}

fn c3_better_than_epsilon() -> Outcome {
    bound_and_oracle("better-than-epsilon", 3)
}

fn c4_hypergraph_ten() -> Outcome {
    let summary = bound_and_oracle("hypergraph-ten", 6)?;
    let p = load("hypergraph-ten");
    let ideal = monomial_of(&p);
    let (forms, constraints) = star_packing(&ideal, &PipelineConfig::default()).map_err(|e| e.to_string())?;
    ensure!(forms.len() >= 4, "star packing gives {}", forms.len());
    let order = build_term_order(&p.ring, &constraints, OrderKind::Grevlex).map_err(|e| e.to_string())?;
    let steps: Vec<_> = forms.iter().map(|f| (f.to_polynomial(p.ring.nvars()), order.clone())).collect();
    let cert = verify_initially_regular(&ideal_of(&p), &order, &steps).map_err(|e| e.to_string())?;
    ensure!(cert.verified, "star packing does not verify");
    Ok(format!("{summary}; star packing alone {}", forms.len()))
}

fn c5_tetrahedron() -> Outcome {
    let summary = bound_and_oracle("tetrahedron", 3)?;
    let p = load("tetrahedron");
    let chains = find_chains(&monomial_of(&p), &PipelineConfig::default()).map_err(|e| e.to_string())?;
    let q: usize = chains.iter().map(|c| c.q).sum();
    ensure!(q == 3, "chains give {q}");
    Ok(format!("{summary}; chain length {q}"))
}

fn c6_leaves() -> Outcome {
    let a = bound_and_oracle("h-tree", 3)?;
    let b = bound_and_oracle("pair-leaves", 3)?;
    Ok(format!("{a}; {b}"))
}

fn c7_higher_power() -> Outcome {
    let p = load("higher-power");
    let standard = bound(&p)?;
    let relaxed_cfg = PipelineConfig {
        relaxed_degrees: true,
        ..PipelineConfig::default()
    };
    let relaxed = depth_lower_bound(&ideal_of(&p), &p.order, &relaxed_cfg).map_err(|e| e.to_string())?;
    let depth = oracle(&monomial_of(&p))?;
    ensure!(standard.lower_bound == 2, "standard bound {}", standard.lower_bound);
    ensure!(relaxed.lower_bound == 2 && relaxed.certificate.verified, "relaxed bound {}", relaxed.lower_bound);
    ensure!(depth == 2, "oracle {depth}");
    let order = TermOrder::from_chain(&p.ring, OrderKind::Grevlex, &["a", "b", "c", "d"]).unwrap();
    let steps: Vec<_> = ["a + b", "c + d"]
        .iter()
        .map(|s| (parse_polynomial(s, &p.ring).unwrap(), order.clone()))
        .collect();
    let cert = verify_initially_regular(&ideal_of(&p), &order, &steps).map_err(|e| e.to_string())?;
    ensure!(cert.verified, "a+b, c+d not verified");
    Ok("standard 2, relaxed 2, a+b,c+d verifies, oracle 2".into())
}

fn c8_octagon() -> Outcome {
    let p = load("octagon");
    let natural = TermOrder::natural(OrderKind::Grevlex, p.ring.nvars());
    let rep = depth_lower_bound(&ideal_of(&p), &natural, &PipelineConfig::default()).map_err(|e| e.to_string())?;
    ensure!(rep.lower_bound == 2, "automated bound {}", rep.lower_bound);
    let cert = verify_initially_regular(&ideal_of(&p), &p.order, &p.steps).map_err(|e| e.to_string())?;
    ensure!(cert.verified && cert.len() == 3, "user steps: {:?}", cert.failure);
    let depth = oracle(&monomial_of(&p))?;
    ensure!(depth == 3, "oracle {depth}");
    Ok("automated 2; user steps verify (q = 3); oracle 3".into())
}

fn c9_hypergraph_example() -> Outcome {
    let summary = bound_and_oracle("hypergraph-example", 5)?;
    let rep = bound(&load("hypergraph-example"))?;
    Ok(format!("{summary} via {:?}", rep.certificate.forms()))
}

fn polarized(name: &str) -> Result<(inireg::sequences::PolarizationAdjustment, usize), String> {
    let p = load(name);
    let ideal = monomial_of(&p);
    let rep = polarized_bound(&ideal, &p.order, &PipelineConfig::default()).map_err(|e| e.to_string())?;
    ensure!(rep.certificate.verified, "polarized certificate not verified");
    Ok((rep.polarization.unwrap(), oracle(&ideal)?))
}

fn c10_path() -> Outcome {
    let (adj, depth) = polarized("path-square")?;
    ensure!(
        (adj.bound_polarized, adj.new_variables, adj.bound_original) == (4, 3, 1),
        "got {adj:?}"
    );
    ensure!(depth == 1, "oracle {depth}");
    Ok("bound_pol 4, 3 new variables, bound 1 = oracle 1".into())
}

fn free_steps(rep: &DepthReport) -> usize {
    rep.certificate.steps.iter().filter(|s| s.provenance == Provenance::FreeVariable).count()
}

fn c11_binomial_edge() -> Outcome {
    let p = load("binomial-edge-path");
    let ini = ini_strings(&p)?;
    ensure!(ini == sorted(&["x1*y2", "x2*y3", "x3*y4"]), "ini = {ini:?}");
    let rep = bound(&p)?;
    ensure!(rep.lower_bound == 5, "bound {}", rep.lower_bound);
    ensure!(free_steps(&rep) == 2, "{} free variables", free_steps(&rep));
    let depth = oracle_of_initial(&p)?;
    ensure!(depth == 5, "oracle {depth}");
    Ok(format!("bound 5 via {:?}; oracle(ini) 5", rep.certificate.forms()))
}

fn c12_rees() -> Outcome {
    let p = load("rees-fiber");
    let ini = ini_strings(&p)?;
    ensure!(ini == sorted(&["T1*T4*T5", "T6*T8"]), "ini = {ini:?}");
    let rep = bound(&p)?;
    ensure!(rep.lower_bound == 7, "bound {}", rep.lower_bound);
    ensure!(free_steps(&rep) == 4, "{} free variables", free_steps(&rep));
    let depth = oracle_of_initial(&p)?;
    ensure!(depth == 7, "oracle {depth}");
    Ok(format!("bound 7 via {:?}; oracle(ini) 7", rep.certificate.forms()))
}

fn c13_oriented() -> Outcome {
    let (adj, depth) = polarized("oriented-graph")?;
    ensure!(
        (adj.bound_polarized, adj.new_variables, adj.bound_original) == (4, 2, 2),
        "got {adj:?}"
    );
    ensure!(depth == 2, "oracle {depth}");
    Ok("bound_pol 4, 2 new variables, bound 2 = depth 2".into())
}

fn c14_properties() -> Outcome {
    let runs: [(&str, fn(u64, usize) -> suites::SuiteResult, u64, usize); 6] = [
        ("a closed form", suites::closed_form_vs_buchberger, 0xA1, 200),
        ("b soundness", suites::soundness, 0xB2, 200),
        ("c regular iff ini-regular", suites::regular_iff_initially_regular, 0xC3, 100),
        ("d Macaulay counts", suites::macaulay_counts, 0xD4, 100),
        ("e polarization identity", suites::polarization_identity, 0xE5, 100),
        ("f polarization guarantee", suites::polarization_guarantee, 0xF6, 100),
    ];
    let mut parts = Vec::new();
    let mut failures = Vec::new();
    for (name, suite, seed, count) in runs {
        let start = Instant::now();
        match suite(seed, count) {
            Ok(n) => parts.push(format!("{name}: {n} ok ({:.1}s)", start.elapsed().as_secs_f64())),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if failures.is_empty() {
        Ok(parts.join("; "))
    } else {
        Err(failures.join("; "))
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("intro example", c1_intro),
        ("extended pentagon", c2_pentagon),
        ("better than epsilon", c3_better_than_epsilon),
        ("ten-variable hypergraph", c4_hypergraph_ten),
        ("tetrahedron", c5_tetrahedron),
        ("H-tree and pair leaves", c6_leaves),
        ("higher power", c7_higher_power),
        ("octagon", c8_octagon),
        ("hypergraph example", c9_hypergraph_example),
        ("polarized path", c10_path),
        ("binomial edge ideal", c11_binomial_edge),
        ("fiber cone", c12_rees),
        ("oriented graph", c13_oriented),
        ("property suites", c14_properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
