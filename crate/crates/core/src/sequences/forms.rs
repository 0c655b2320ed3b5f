use serde::{Deserialize, Serialize};

use num_traits::One;

use crate::algebra::{Coefficient, OrderKind, Polynomial, Ring, TermOrder};
use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;

/// `b0 + b1 + … + bt` over distinct variables, with `b0` designated as the
/// variable that must lead.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct LinearSumForm {
    leading: usize,
    tail: Vec<usize>,
}

impl LinearSumForm {
    pub fn new(leading: usize, tail: Vec<usize>) -> Result<Self> {
        let mut seen = vec![leading];
        for &v in &tail {
            if seen.contains(&v) {
                return Err(Error::InvalidForm(format!("variable index {v} repeated")));
            }
            seen.push(v);
        }
        Ok(LinearSumForm { leading, tail })
    }

    pub fn single(var: usize) -> Self {
        LinearSumForm {
            leading: var,
            tail: Vec::new(),
        }
    }

    pub fn pair(leading: usize, other: usize) -> Result<Self> {
        LinearSumForm::new(leading, vec![other])
    }

    pub fn leading(&self) -> usize {
        self.leading
    }

    pub fn tail(&self) -> &[usize] {
        &self.tail
    }

    /// Leading variable first, then the tail.
    pub fn variables(&self) -> Vec<usize> {
        let mut v = vec![self.leading];
        v.extend(&self.tail);
        v
    }

    pub fn to_polynomial(&self, nvars: usize) -> Polynomial {
        Polynomial::sum_of_variables(nvars, &self.variables())
    }

    /// Recognises a sum of distinct variables with unit coefficients whose
    /// leading term under `order` becomes `b0`.
    pub fn from_polynomial(f: &Polynomial, order: &TermOrder) -> Option<Self> {
        if f.is_zero() {
            return None;
        }
        let one = Coefficient::one();
        let mut vars = Vec::new();
        for t in f.terms() {
            if t.coefficient != one || t.monomial.degree() != 1 {
                return None;
            }
            vars.push(t.monomial.support().next().expect("degree one"));
        }
        let lead = f.leading_term(order).ok()?.monomial.support().next()?;
        let tail = vars.into_iter().filter(|&v| v != lead).collect();
        LinearSumForm::new(lead, tail).ok()
    }

    pub fn fmt_with(&self, ring: &Ring) -> String {
        self.variables()
            .iter()
            .map(|&v| ring.name(v))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Pairs `(u, v)` requiring `u > v` in the term order.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct OrderConstraint {
    pairs: Vec<(usize, usize)>,
}

impl OrderConstraint {
    pub fn new() -> Self {
        OrderConstraint::default()
    }

    pub fn from_forms<'a>(forms: impl IntoIterator<Item = &'a LinearSumForm>) -> Self {
        let mut c = OrderConstraint::new();
        for f in forms {
            for &b in f.tail() {
                c.push(f.leading(), b);
            }
        }
        c
    }

    pub fn push(&mut self, greater: usize, smaller: usize) {
        if !self.pairs.contains(&(greater, smaller)) {
            self.pairs.push((greater, smaller));
        }
    }

    pub fn extend(&mut self, other: &OrderConstraint) {
        for &(u, v) in &other.pairs {
            self.push(u, v);
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_satisfied_by(&self, order: &TermOrder) -> bool {
        self.pairs.iter().all(|&(u, v)| order.var_greater(u, v))
    }
}

/// Topological sort of the constraint digraph; among unconstrained choices the
/// lowest variable index goes first.
pub fn build_term_order(ring: &Ring, constraints: &OrderConstraint, kind: OrderKind) -> Result<TermOrder> {
    let rank: Vec<usize> = (0..ring.nvars()).collect();
    build_term_order_ranked(ring, constraints, kind, &rank)
}

pub(crate) fn build_term_order_ranked(
    ring: &Ring,
    constraints: &OrderConstraint,
    kind: OrderKind,
    rank: &[usize],
) -> Result<TermOrder> {
    let n = ring.nvars();
    let mut indegree = vec![0usize; n];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in constraints.pairs() {
        if u >= n || v >= n {
            return Err(Error::RingMismatch {
                expected: n,
                found: u.max(v) + 1,
            });
        }
        if u == v {
            return Err(Error::CyclicConstraints(ring.name(u).to_string()));
        }
        succ[u].push(v);
        indegree[v] += 1;
    }
    let mut placed = vec![false; n];
    let mut priority = Vec::with_capacity(n);
    while priority.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v] && indegree[v] == 0)
            .min_by_key(|&v| rank[v]);
        let Some(v) = next else {
            let stuck: Vec<&str> = (0..n).filter(|&v| !placed[v]).map(|v| ring.name(v)).collect();
            return Err(Error::CyclicConstraints(stuck.join(", ")));
        };
        placed[v] = true;
        priority.push(v);
        for &w in &succ[v] {
            indegree[w] -= 1;
        }
    }
    TermOrder::new(kind, priority)
}

/// A failed hypothesis of the sum-of-variables regularity criterion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SumViolation {
    /// A tail variable appears to a power above one.
    TailDegree { var: usize, degree: u32 },
    /// Relaxed mode: a tail variable's nonzero exponents are not all equal.
    TailDegreeNotConstant { var: usize, degrees: Vec<u32> },
    /// A generator divisible by the leading variable avoids every tail variable.
    Uncovered { generator: String },
}

impl SumViolation {
    pub fn describe(&self, ring: &Ring) -> String {
        match self {
            SumViolation::TailDegree { var, degree } => {
                format!("tail variable {} has degree {degree}", ring.name(*var))
            }
            SumViolation::TailDegreeNotConstant { var, degrees } => format!(
                "tail variable {} appears with differing exponents {degrees:?}",
                ring.name(*var)
            ),
            SumViolation::Uncovered { generator } => {
                format!("generator {generator} contains no tail variable")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SumCheck {
    pub violations: Vec<SumViolation>,
}

impl SumCheck {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Degree condition on a tail variable: exponent at most one, or (relaxed) a
/// single nonzero exponent shared by every generator containing it.
pub(crate) fn tail_degree_ok(ideal: &MonomialIdeal, var: usize, relaxed: bool) -> bool {
    if relaxed {
        let mut exps = ideal.generators().iter().map(|g| g.exponent(var)).filter(|&e| e > 0);
        match exps.next() {
            None => true,
            Some(e) => exps.all(|x| x == e),
        }
    } else {
        ideal.var_degree(var) <= 1
    }
}

pub fn check_sum_conditions(ideal: &MonomialIdeal, form: &LinearSumForm, relaxed: bool) -> SumCheck {
    let mut violations = Vec::new();
    for &b in form.tail() {
        if tail_degree_ok(ideal, b, relaxed) {
            continue;
        }
        if relaxed {
            let mut degrees: Vec<u32> = ideal
                .generators()
                .iter()
                .map(|g| g.exponent(b))
                .filter(|&e| e > 0)
                .collect();
            degrees.sort_unstable();
            degrees.dedup();
            violations.push(SumViolation::TailDegreeNotConstant { var: b, degrees });
        } else {
            violations.push(SumViolation::TailDegree {
                var: b,
                degree: ideal.var_degree(b),
            });
        }
    }
    for g in ideal.generators_with(form.leading()) {
        if !form.tail().iter().any(|&b| g.exponent(b) > 0) {
            violations.push(SumViolation::Uncovered {
                generator: g.fmt_with(ideal.ring()),
            });
        }
    }
    SumCheck { violations }
}
