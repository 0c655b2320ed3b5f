use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Integer arithmetic needed by fraction-free elimination. Operations return
/// `None` on overflow.
trait Scalar: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `p·x − a·y`
    fn cross(p: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(p: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self> {
        p.checked_mul(*x)?.checked_sub(a.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(p: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self> {
        Some(p * x - a * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

type Row<T> = Vec<(usize, T)>;

/// Row echelon reduction of sparse rows; pivots keyed by leading column.
fn echelon_rank<T: Scalar>(rows: &[Vec<(usize, i64)>]) -> Option<usize> {
    let mut pivots: BTreeMap<usize, Row<T>> = BTreeMap::new();
    for row in rows {
        let mut r: Row<T> = row
            .iter()
            .filter(|(_, v)| *v != 0)
            .map(|&(c, v)| (c, T::from_i64(v)))
            .collect();
        r.sort_by_key(|&(c, _)| c);
        while let Some((lead, _)) = r.first() {
            let Some(p) = pivots.get(lead) else { break };
            r = eliminate(&r, p)?;
        }
        if let Some(&(lead, _)) = r.first() {
            pivots.insert(lead, r);
        }
    }
    Some(pivots.len())
}

/// `p·r − a·pivot`, cancelling the shared leading column, then divided by the
/// gcd of its entries.
fn eliminate<T: Scalar>(r: &Row<T>, pivot: &Row<T>) -> Option<Row<T>> {
    let a = &r[0].1;
    let p = &pivot[0].1;
    let g = a.gcd(p);
    let (a, p) = (a.div(&g), p.div(&g));
    let zero = T::from_i64(0);
    let mut out: Row<T> = Vec::with_capacity(r.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < pivot.len() {
        let ci = r.get(i).map(|e| e.0);
        let cj = pivot.get(j).map(|e| e.0);
        let (col, x, y) = match (ci, cj) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
                (x, &r[i - 1].1, &pivot[j - 1].1)
            }
            (Some(x), Some(y)) if x < y => {
                i += 1;
                (x, &r[i - 1].1, &zero)
            }
            (Some(x), None) => {
                i += 1;
                (x, &r[i - 1].1, &zero)
            }
            (_, Some(y)) => {
                j += 1;
                (y, &zero, &pivot[j - 1].1)
            }
            (None, None) => unreachable!(),
        };
        let v = T::cross(&p, x, &a, y)?;
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    if let Some(first) = out.first() {
        let mut g = first.1.clone();
        for (_, v) in &out[1..] {
            if g.is_unit() {
                break;
            }
            g = g.gcd(v);
        }
        if !g.is_unit() && !g.is_zero() {
            for e in &mut out {
                e.1 = e.1.div(&g);
            }
        }
    }
    Some(out)
}

/// Exact rank over the rationals of a sparse integer matrix given by rows of
/// `(column, value)`. Uses 128-bit arithmetic and falls back to big integers
/// on overflow.
pub fn sparse_rank(rows: &[Vec<(usize, i64)>]) -> usize {
    echelon_rank::<i128>(rows).unwrap_or_else(|| echelon_rank::<BigInt>(rows).expect("no overflow"))
}
