//! Brute-force depth of `R/I` for monomial ideals: polarize, then read the
//! projective dimension off Hochster's formula on induced subcomplexes of the
//! Stanley–Reisner complex. Homology is taken over the rationals
//! (characteristic 0).

mod rank;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;

pub use rank::sparse_rank;

/// Default limit on the number of polarized variables.
pub const SIZE_GUARD: usize = 16;

/// Faces are bitmasks over ring variables, so at most 64 variables.
const MAX_VARS: usize = 64;

/// A simplicial complex on `vertices`, stored by its facets. No facets at
/// all is the void complex; the single facet `0` is the complex `{∅}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SimplicialComplex {
    pub vertices: Vec<usize>,
    pub facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Keeps only the maximal faces among `faces`.
    pub fn from_faces(vertices: Vec<usize>, faces: impl IntoIterator<Item = u64>) -> Self {
        let mut all: Vec<u64> = faces.into_iter().collect();
        all.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
        all.dedup();
        let mut facets: Vec<u64> = Vec::new();
        for f in all {
            if !facets.iter().any(|&g| f & g == f) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { vertices, facets }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&g| face & g == face)
    }

    /// All faces (including `∅` unless void), grouped by size.
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        let max = self.facets.iter().map(|f| f.count_ones() as usize).max();
        let Some(max) = max else { return Vec::new() };
        let mut out = vec![Vec::new(); max + 1];
        let mut seen = std::collections::HashSet::new();
        for &facet in &self.facets {
            let mut sub = facet;
            loop {
                if seen.insert(sub) {
                    out[sub.count_ones() as usize].push(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        for layer in &mut out {
            layer.sort_unstable();
        }
        out
    }
}

/// Ranks of reduced homology; `ranks[k]` is the rank in dimension `k − 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HomologyProfile {
    pub ranks: Vec<usize>,
}

impl HomologyProfile {
    pub fn rank(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.ranks.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Stanley–Reisner complex: faces are the supports of squarefree monomials
/// outside `I`.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.ring().nvars();
    if n > MAX_VARS {
        return Err(Error::SizeGuard { vars: n, limit: MAX_VARS });
    }
    let gens = generator_masks(ideal);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let faces = faces_within(all, &gens, n);
    Ok(SimplicialComplex::from_faces(
        (0..n).collect(),
        faces.into_iter().flatten(),
    ))
}

fn generator_masks(ideal: &MonomialIdeal) -> Vec<u64> {
    ideal
        .generators()
        .iter()
        .map(|g| g.support().fold(0u64, |m, v| m | (1 << v)))
        .collect()
}

/// Faces of the complex induced on `sigma` (subsets containing no generator),
/// grouped by size, up to `max_size` vertices.
fn faces_within(sigma: u64, gens: &[u64], max_size: usize) -> Vec<Vec<u64>> {
    let verts: Vec<usize> = (0..64).filter(|&v| sigma & (1 << v) != 0).collect();
    let inside: Vec<u64> = gens.iter().copied().filter(|&g| g & !sigma == 0).collect();
    let mut out = vec![Vec::new(); max_size.min(verts.len()) + 1];
    fn grow(face: u64, start: usize, verts: &[usize], gens: &[u64], out: &mut Vec<Vec<u64>>) {
        let size = face.count_ones() as usize;
        out[size].push(face);
        if size + 1 >= out.len() {
            return;
        }
        for k in start..verts.len() {
            let next = face | (1 << verts[k]);
            if gens.iter().all(|&g| g & !next != 0) {
                grow(next, k + 1, verts, gens, out);
            }
        }
    }
    if inside.iter().all(|&g| g != 0) {
        grow(0, 0, &verts, &inside, &mut out);
    }
    for layer in &mut out {
        layer.sort_unstable();
    }
    out
}

/// Rank of the boundary map from faces of size `s` to faces of size `s − 1`.
fn boundary_rank(upper: &[u64], lower: &[u64]) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<(usize, i64)>> = upper
        .iter()
        .map(|&f| {
            let mut row = Vec::new();
            let mut sign = 1i64;
            for v in 0..64 {
                if f & (1 << v) != 0 {
                    let col = lower.binary_search(&(f & !(1 << v))).expect("faces are closed under subsets");
                    row.push((col, sign));
                    sign = -sign;
                }
            }
            row
        })
        .collect();
    sparse_rank(&rows)
}

/// Reduced homology ranks from faces grouped by size (`layers[s]` holds faces
/// with `s` vertices), for faces of size `0 ..= top_size` (dimensions
/// `−1 ..= top_size − 1`).
fn homology_from_layers(layers: &[Vec<u64>], top_size: usize) -> HomologyProfile {
    // rank of ∂ leaving size-s faces
    let top = (top_size + 1).min(layers.len().saturating_sub(1));
    let mut ranks_out = vec![0usize; top + 2];
    for s in 1..=top {
        ranks_out[s] = boundary_rank(&layers[s], &layers[s - 1]);
    }
    let mut ranks = Vec::with_capacity(top_size + 1);
    for s in 0..=top_size {
        let faces = layers.get(s).map_or(0, Vec::len);
        let rank_here = ranks_out.get(s).copied().unwrap_or(0);
        let rank_above = ranks_out.get(s + 1).copied().unwrap_or(0);
        ranks.push(faces - rank_here - rank_above);
    }
    while ranks.len() > 1 && ranks.last() == Some(&0) {
        ranks.pop();
    }
    HomologyProfile { ranks }
}

pub fn reduced_homology_ranks(complex: &SimplicialComplex) -> HomologyProfile {
    let layers = complex.faces_by_size();
    if layers.is_empty() {
        return HomologyProfile { ranks: vec![0] };
    }
    homology_from_layers(&layers, layers.len() - 1)
}

/// Projective dimension of `R/I` for squarefree `I`, by Hochster's formula
/// `β_{i,σ} = dim H̃_{|σ|−i−1}(K_σ)` over all vertex subsets `σ`.
pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.ring().nvars();
    if n > MAX_VARS {
        return Err(Error::SizeGuard { vars: n, limit: MAX_VARS });
    }
    if ideal.is_zero() {
        return Ok(0);
    }
    let gens = generator_masks(ideal);
    // only unions of generators matter: otherwise some vertex is a cone point
    let mut sigmas: Vec<u64> = Vec::new();
    let mut frontier: std::collections::BTreeSet<u64> = std::collections::BTreeSet::new();
    frontier.insert(0);
    for &g in &gens {
        let grown: Vec<u64> = frontier.iter().map(|&s| s | g).collect();
        frontier.extend(grown);
    }
    sigmas.extend(frontier.into_iter().filter(|&s| s != 0));
    sigmas.sort_by_key(|s| (s.count_ones(), *s));
    let mut pd = 0usize;
    for sigma in sigmas {
        let size = sigma.count_ones() as usize;
        if size <= pd {
            continue;
        }
        // an improvement needs homology on faces of size s = size − i with
        // i > pd, i.e. s < size − pd
        let top_size = size - pd - 1;
        let layers = faces_within(sigma, &gens, top_size + 1);
        let profile = homology_from_layers(&layers, top_size);
        if let Some(s) = profile.ranks.iter().position(|&r| r > 0) {
            pd = size - s;
        }
    }
    Ok(pd)
}

/// `depth R/I` for a proper monomial ideal. Non-squarefree ideals are
/// polarized first and the polarizing variables subtracted. Refuses rings
/// with more than [`SIZE_GUARD`] polarized variables unless `force` is set.
pub fn oracle_depth(ideal: &MonomialIdeal, force: bool) -> Result<usize> {
    let (pol, new_vars) = if ideal.is_squarefree() {
        (ideal.clone(), 0)
    } else {
        let (p, map) = ideal.polarize()?;
        (p, map.new_variables)
    };
    let n = pol.ring().nvars();
    if n > SIZE_GUARD && !force {
        return Err(Error::SizeGuard { vars: n, limit: SIZE_GUARD });
    }
    let pd = projective_dimension(&pol)?;
    Ok(n - pd - new_vars)
}
