use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Monomial, Ring};
use crate::error::{Error, Result};

/// Anything that totally orders exponent vectors of a fixed length.
pub trait MonomialOrdering {
    fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering;

    fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exponents(a.exponents(), b.exponents())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Grevlex => "grevlex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grlex" => Ok(OrderKind::Grlex),
            "grevlex" => Ok(OrderKind::Grevlex),
            other => Err(Error::InvalidOrder(format!("unknown order kind `{other}`"))),
        }
    }
}

/// lex / grlex / grevlex with an explicit variable priority (highest first).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    rank: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        if n == 0 {
            return Err(Error::InvalidOrder("empty priority".into()));
        }
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in priority.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::InvalidOrder(
                    "priority is not a permutation of the variables".into(),
                ));
            }
            rank[v] = pos;
        }
        Ok(TermOrder { kind, priority, rank })
    }

    /// Priority equal to the ring's declaration order.
    pub fn natural(kind: OrderKind, nvars: usize) -> Self {
        TermOrder::new(kind, (0..nvars).collect()).expect("identity is a permutation")
    }

    /// Builds an order from a (possibly partial) chain of names; variables not
    /// mentioned follow in declaration order.
    pub fn from_chain<S: AsRef<str>>(ring: &Ring, kind: OrderKind, chain: &[S]) -> Result<Self> {
        let mut priority = Vec::with_capacity(ring.nvars());
        let mut used = vec![false; ring.nvars()];
        for name in chain {
            let name = name.as_ref();
            let v = ring
                .index_of(name)
                .ok_or_else(|| Error::InvalidOrder(format!("unknown variable `{name}`")))?;
            if used[v] {
                return Err(Error::InvalidOrder(format!("variable `{name}` appears twice")));
            }
            used[v] = true;
            priority.push(v);
        }
        priority.extend((0..ring.nvars()).filter(|&v| !used[v]));
        TermOrder::new(kind, priority)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Position of `var` in the priority list (0 = highest).
    pub fn rank(&self, var: usize) -> usize {
        self.rank[var]
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    /// True iff variable `a` is greater than variable `b`.
    pub fn var_greater(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    pub fn with_kind(&self, kind: OrderKind) -> Self {
        TermOrder {
            kind,
            ..self.clone()
        }
    }

    pub fn priority_names(&self, ring: &Ring) -> Vec<String> {
        self.priority.iter().map(|&v| ring.name(v).to_string()).collect()
    }

    pub fn fmt_with(&self, ring: &Ring) -> String {
        format!("{} {}", self.kind, self.priority_names(ring).join(" > "))
    }

    fn lex(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &v in &self.priority {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    fn revlex(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &v in self.priority.iter().rev() {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl MonomialOrdering for TermOrder {
    fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), self.priority.len());
        debug_assert_eq!(b.len(), self.priority.len());
        match self.kind {
            OrderKind::Lex => self.lex(a, b),
            OrderKind::Grlex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| self.lex(a, b))
            }
            OrderKind::Grevlex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| self.revlex(a, b))
            }
        }
    }
}

pub fn compare_monomials(order: &TermOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    for m in [a, b] {
        if m.nvars() != order.nvars() {
            return Err(Error::RingMismatch {
                expected: order.nvars(),
                found: m.nvars(),
            });
        }
    }
    Ok(order.cmp_monomials(a, b))
}

/// Term orders `>_1, …, >_q`, one per step. A single order replicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSchedule {
    orders: Vec<TermOrder>,
}

impl OrderSchedule {
    pub fn new(orders: Vec<TermOrder>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidOrder("an order schedule needs at least one order".into()));
        }
        Ok(OrderSchedule { orders })
    }

    pub fn single(order: TermOrder) -> Self {
        OrderSchedule { orders: vec![order] }
    }

    /// Order for step `i` (0-based); the last order repeats.
    pub fn at(&self, i: usize) -> &TermOrder {
        &self.orders[i.min(self.orders.len() - 1)]
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn graded_orders_compare_degree_first() {
        let r = Ring::indexed("x", 5).unwrap();
        let o = TermOrder::from_chain(&r, OrderKind::Grevlex, &["x1", "x2", "x5", "x4", "x3"]).unwrap();
        // x1x2x3 vs x3x4
        let a = m(&[1, 1, 1, 0, 0]);
        let b = m(&[0, 0, 1, 1, 0]);
        assert_eq!(compare_monomials(&o, &a, &b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn lex_definitional() {
        let o = TermOrder::natural(OrderKind::Lex, 2);
        assert_eq!(o.cmp_monomials(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn grevlex_tie_break_on_last_variable() {
        let o = TermOrder::natural(OrderKind::Grevlex, 4);
        // x2x3 vs x1x4: the smallest variable x4 occurs in the second monomial.
        assert_eq!(o.cmp_monomials(&m(&[0, 1, 1, 0]), &m(&[1, 0, 0, 1])), Ordering::Greater);
        // grlex would say the opposite
        let g = o.with_kind(OrderKind::Grlex);
        assert_eq!(g.cmp_monomials(&m(&[0, 1, 1, 0]), &m(&[1, 0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let o = TermOrder::natural(OrderKind::Lex, 2);
        assert!(compare_monomials(&o, &m(&[1, 0, 0]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn chain_rejects_duplicates() {
        let r = Ring::new(["a", "b"]).unwrap();
        assert!(TermOrder::from_chain(&r, OrderKind::Grevlex, &["a", "a"]).is_err());
        let o = TermOrder::from_chain(&r, OrderKind::Lex, &["b"]).unwrap();
        assert_eq!(o.priority(), &[1, 0]);
    }
}
