use serde::Serialize;

use super::MonomialIdeal;
use crate::algebra::Monomial;

/// Two leaves `x`, `y` whose unique generators `m1 ≠ m2` admit coprime
/// witnesses `z | m1`, `w | m2` (with `x ∤ z`, `y ∤ w`) such that `z·w` is a
/// minimal generator. Then `x + y` is regular on `R/I`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LeafPair {
    pub x: usize,
    pub y: usize,
    #[serde(skip)]
    pub m1: Monomial,
    #[serde(skip)]
    pub m2: Monomial,
    #[serde(skip)]
    pub z: Monomial,
    #[serde(skip)]
    pub w: Monomial,
}

impl MonomialIdeal {
    /// Leaves with the index of their unique generator.
    pub fn leaves(&self) -> Vec<(usize, usize)> {
        (0..self.ring().nvars())
            .filter_map(|v| {
                let mut containing = self
                    .generators()
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| g.exponent(v) > 0);
                match (containing.next(), containing.next()) {
                    (Some((k, _)), None) => Some((v, k)),
                    _ => None,
                }
            })
            .collect()
    }

    /// Greedy disjoint selection of leaf pairs, scanning variables by index.
    pub fn find_leaf_pairs(&self) -> Vec<LeafPair> {
        let n = self.ring().nvars();
        self.find_leaf_pairs_among(&vec![true; n], &(0..n).collect::<Vec<_>>())
    }

    /// Like [`find_leaf_pairs`](Self::find_leaf_pairs) but only over `allowed`
    /// variables, scanning them by ascending `rank`.
    pub fn find_leaf_pairs_among(&self, allowed: &[bool], rank: &[usize]) -> Vec<LeafPair> {
        let mut leaves: Vec<(usize, usize)> =
            self.leaves().into_iter().filter(|&(v, _)| allowed[v]).collect();
        leaves.sort_by_key(|&(v, _)| rank[v]);
        let mut used = vec![false; self.ring().nvars()];
        let mut out = Vec::new();
        for i in 0..leaves.len() {
            for j in i + 1..leaves.len() {
                let ((x, gx), (y, gy)) = (leaves[i], leaves[j]);
                if used[x] || used[y] || gx == gy {
                    continue;
                }
                if let Some(pair) = self.leaf_pair(x, gx, y, gy) {
                    used[x] = true;
                    used[y] = true;
                    out.push(pair);
                }
            }
        }
        out
    }

    fn leaf_pair(&self, x: usize, gx: usize, y: usize, gy: usize) -> Option<LeafPair> {
        let m1 = &self.generators()[gx];
        let m2 = &self.generators()[gy];
        for g in self.generators() {
            let support: Vec<usize> = g.support().collect();
            // coprime splits g = z·w: each variable's full power goes to one side
            for mask in 0u32..(1 << support.len()) {
                let mut z = Monomial::one(g.nvars());
                let mut w = Monomial::one(g.nvars());
                for (k, &v) in support.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        z = z.with_exponent(v, g.exponent(v));
                    } else {
                        w = w.with_exponent(v, g.exponent(v));
                    }
                }
                if z.exponent(x) == 0 && z.divides(m1) && w.exponent(y) == 0 && w.divides(m2) {
                    return Some(LeafPair {
                        x,
                        y,
                        m1: m1.clone(),
                        m2: m2.clone(),
                        z,
                        w,
                    });
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use crate::algebra::Ring;
    use crate::monomial_ideal::MonomialIdeal;

    fn ideal(names: &[&str], gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(&Ring::new(names.iter().copied()).unwrap(), gens).unwrap()
    }

    #[test]
    fn h_tree_pair_c_f() {
        let i = ideal(&["a", "b", "c", "d", "e", "f"], &["a*b", "b*c", "b*e", "d*e", "e*f"]);
        let allowed = [false, false, true, false, false, true];
        let pairs = i.find_leaf_pairs_among(&allowed, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(pairs.len(), 1);
        let p = &pairs[0];
        assert_eq!((p.x, p.y), (2, 5));
        assert_eq!(p.z.fmt_with(i.ring()), "b");
        assert_eq!(p.w.fmt_with(i.ring()), "e");
    }

    #[test]
    fn pair_leaves_example() {
        let names = ["a", "b", "c", "d", "e", "f", "g"];
        let i = ideal(&names, &["a*b", "a*e", "b*c", "b*e", "d*e", "e*f", "b*g"]);
        let pairs: Vec<(&str, &str)> = i
            .find_leaf_pairs()
            .iter()
            .map(|p| (names[p.x], names[p.y]))
            .collect();
        // (c, d) and (f, g) are both valid leaf pairs; (d, g) appears under another scan order
        assert_eq!(pairs, [("c", "d"), ("f", "g")]);
        let rank = [0, 1, 6, 2, 3, 5, 4];
        let pairs: Vec<(&str, &str)> = i
            .find_leaf_pairs_among(&[true; 7], &rank)
            .iter()
            .map(|p| (names[p.x], names[p.y]))
            .collect();
        assert_eq!(pairs, [("d", "g"), ("f", "c")]);
    }

    #[test]
    fn no_pairs_at_distance_two() {
        let r = Ring::indexed("x", 7).unwrap();
        let i = MonomialIdeal::parse(&r, &["x1*x2", "x2*x3", "x2*x4", "x4*x5", "x5*x6", "x5*x7"]).unwrap();
        let leaves: Vec<usize> = i.leaves().iter().map(|&(v, _)| v).collect();
        assert_eq!(leaves, [0, 2, 5, 6]);
        assert!(i.find_leaf_pairs().is_empty());
    }
}
