use super::LinearSumForm;
use crate::algebra::{Monomial, TermOrder};
use crate::error::{Error, Result};
use crate::monomial_ideal::{minimalize, MonomialIdeal};

/// `ini(I, b0 + b1)` for a monomial ideal `I` and an order with `b0 > b1`:
/// `b0` together with every generator `M` rewritten as `M·b1^d / b0^d`,
/// where `d` is the exponent of `b0` in `M`.
pub(crate) fn substitute(ideal: &MonomialIdeal, b0: usize, b1: usize) -> Result<MonomialIdeal> {
    let n = ideal.ring().nvars();
    let mut gens = vec![Monomial::var(n, b0)];
    for g in ideal.generators() {
        let d = g.exponent(b0);
        gens.push(g.with_exponent(b0, 0).with_exponent(b1, g.exponent(b1) + d));
    }
    minimalize(ideal.ring(), gens)
}

/// `ini(I, x)` for a single variable: adjoin it.
pub(crate) fn adjoin(ideal: &MonomialIdeal, x: usize) -> Result<MonomialIdeal> {
    ideal.with_generator(Monomial::var(ideal.ring().nvars(), x))
}

/// Closed form of `ini(I, x1 + y1, …, xl + yl)` for a monomial ideal and
/// two-variable forms, valid when `xi > yi`, `xi > xj` for `i < j`, and no
/// leading variable reappears as the tail of the same or a later form.
pub fn initial_after_linear_sums(
    ideal: &MonomialIdeal,
    forms: &[LinearSumForm],
    order: &TermOrder,
) -> Result<MonomialIdeal> {
    let ring = ideal.ring();
    if order.nvars() != ring.nvars() {
        return Err(Error::RingMismatch {
            expected: ring.nvars(),
            found: order.nvars(),
        });
    }
    let mut pairs = Vec::with_capacity(forms.len());
    for f in forms {
        let [y] = f.tail() else {
            return Err(Error::InvalidForm(format!(
                "{} is not a sum of two variables",
                f.fmt_with(ring)
            )));
        };
        if f.leading() >= ring.nvars() || *y >= ring.nvars() {
            return Err(Error::InvalidForm("variable index out of range".into()));
        }
        pairs.push((f.leading(), *y));
    }
    let name = |v: usize| ring.name(v);
    for (i, &(x, y)) in pairs.iter().enumerate() {
        if !order.var_greater(x, y) {
            return Err(Error::OrderHypothesis(format!("need {} > {}", name(x), name(y))));
        }
        for (j, &(xj, yj)) in pairs.iter().enumerate().skip(i) {
            if j > i && xj == x {
                return Err(Error::OrderHypothesis(format!(
                    "leading variable {} used twice",
                    name(x)
                )));
            }
            if j > i && !order.var_greater(x, xj) {
                return Err(Error::OrderHypothesis(format!("need {} > {}", name(x), name(xj))));
            }
            if yj == x {
                return Err(Error::OrderHypothesis(format!(
                    "leading variable {} reappears in a later tail",
                    name(x)
                )));
            }
        }
    }
    let mut current = ideal.clone();
    for (x, y) in pairs {
        current = substitute(&current, x, y)?;
    }
    Ok(current)
}
