use serde::Serialize;

use super::MonomialIdeal;
use crate::error::{Error, Result};

/// Support of a minimal generator together with its exponents.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Edge {
    pub support: Vec<usize>,
    pub degrees: Vec<u32>,
}

impl Edge {
    pub fn contains(&self, var: usize) -> bool {
        self.support.contains(&var)
    }
}

/// Vertex-weighted hypergraph of a monomial ideal: one edge per minimal
/// generator, vertex weight `d_x(I)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Hypergraph {
    pub vertices: Vec<usize>,
    /// Indexed by ring variable; zero for variables that are not vertices.
    pub weights: Vec<u32>,
    pub edges: Vec<Edge>,
}

impl Hypergraph {
    pub fn weight(&self, var: usize) -> u32 {
        self.weights[var]
    }

    /// Indices of edges containing `var`.
    pub fn incident(&self, var: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].contains(var)).collect()
    }
}

impl MonomialIdeal {
    pub fn hypergraph_view(&self) -> Result<Hypergraph> {
        if self.is_zero() {
            return Err(Error::InvalidForm("the zero ideal has no hypergraph".into()));
        }
        let n = self.ring().nvars();
        let weights: Vec<u32> = (0..n).map(|v| self.var_degree(v)).collect();
        let vertices = (0..n).filter(|&v| weights[v] > 0).collect();
        let edges = self
            .generators()
            .iter()
            .map(|g| {
                let support: Vec<usize> = g.support().collect();
                let degrees = support.iter().map(|&v| g.exponent(v)).collect();
                Edge { support, degrees }
            })
            .collect();
        Ok(Hypergraph {
            vertices,
            weights,
            edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::algebra::Ring;
    use crate::monomial_ideal::MonomialIdeal;

    #[test]
    fn extended_pentagon_is_a_graph() {
        let r = Ring::indexed("x", 8).unwrap();
        let i = MonomialIdeal::parse(
            &r,
            &["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5", "x1*x6", "x5*x7", "x7*x8"],
        )
        .unwrap();
        let h = i.hypergraph_view().unwrap();
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.edges.len(), 8);
        assert!(h.edges.iter().all(|e| e.support.len() == 2));
        assert!(h.vertices.iter().all(|&v| h.weight(v) == 1));
    }

    #[test]
    fn higher_power_weights() {
        let r = Ring::new(["a", "b", "c", "d"]).unwrap();
        let i = MonomialIdeal::parse(&r, &["a^2*b", "a*b*c*d", "c^2*d"]).unwrap();
        let h = i.hypergraph_view().unwrap();
        assert_eq!(h.weights, vec![2, 1, 2, 1]);
        let supports: Vec<Vec<usize>> = h.edges.iter().map(|e| e.support.clone()).collect();
        assert_eq!(supports, vec![vec![0, 1], vec![2, 3], vec![0, 1, 2, 3]]);
        assert_eq!(h.edges[0].degrees, vec![2, 1]);
    }

    #[test]
    fn single_edge_and_zero_ideal() {
        let r = Ring::indexed("x", 3).unwrap();
        let i = MonomialIdeal::parse(&r, &["x1*x2*x3"]).unwrap();
        assert_eq!(i.hypergraph_view().unwrap().edges[0].support.len(), 3);
        assert!(MonomialIdeal::zero(&r).hypergraph_view().is_err());
    }
}
