//! Finite simplicial complexes and their reduced homology over F_p.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{rank_mod_p, reduce_signed, SparseColumn};

/// A simplicial complex on vertices `0..n`, faces stored as bitmasks.
///
/// The void complex has no faces at all; the irrelevant complex has only the
/// empty face. They differ in reduced homology: `H~_{-1}` is one-dimensional
/// for the irrelevant complex and zero for the void one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n_vertices: usize,
    /// Sorted by (cardinality, mask).
    faces: Vec<u64>,
}

impl SimplicialComplex {
    pub fn void(n_vertices: usize) -> Self {
        assert!(n_vertices <= 64);
        SimplicialComplex {
            n_vertices,
            faces: Vec::new(),
        }
    }

    pub fn irrelevant(n_vertices: usize) -> Self {
        assert!(n_vertices <= 64);
        SimplicialComplex {
            n_vertices,
            faces: vec![0],
        }
    }

    /// Complex from an explicit face list; fails unless closed under subsets.
    pub fn from_faces(n_vertices: usize, faces: impl IntoIterator<Item = u64>) -> Result<Self> {
        let c = Self::from_faces_unchecked(n_vertices, faces);
        if !c.is_closed() {
            return Err(Error::InvalidArgument(
                "face family is not closed under subsets".into(),
            ));
        }
        Ok(c)
    }

    pub(crate) fn from_faces_unchecked(
        n_vertices: usize,
        faces: impl IntoIterator<Item = u64>,
    ) -> Self {
        assert!(n_vertices <= 64);
        let mut faces: Vec<u64> = faces.into_iter().collect();
        faces.sort_unstable_by_key(|&f| (f.count_ones(), f));
        faces.dedup();
        SimplicialComplex { n_vertices, faces }
    }

    /// Downward closure of the given facets.
    pub fn from_facets(n_vertices: usize, facets: &[u64]) -> Self {
        let mut all = std::collections::HashSet::new();
        for &f in facets {
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        Self::from_faces_unchecked(n_vertices, all)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces
            .binary_search_by_key(&(face.count_ones(), face), |&f| (f.count_ones(), f))
            .is_ok()
    }

    fn is_closed(&self) -> bool {
        let in_range = |f: u64| self.n_vertices == 64 || f >> self.n_vertices == 0;
        self.faces.iter().all(|&f| {
            in_range(f)
                && (0..64)
                    .filter(|b| f >> b & 1 == 1)
                    .all(|b| self.contains(f & !(1 << b)))
        })
    }

    /// `dim H~_j` for `j = -1, 0, ..., n_vertices - 1` (index `j + 1`).
    pub fn reduced_homology(&self, p: u64, vertex_budget: usize) -> Result<Vec<usize>> {
        if self.n_vertices > vertex_budget {
            return Err(Error::Budget {
                resource: "simplicial complex vertices",
                requested: self.n_vertices as u128,
                limit: vertex_budget as u128,
            });
        }
        Ok(reduced_homology_unchecked(self.n_vertices, &self.faces, p))
    }
}

/// Reduced homology dims of a face family (closed under subsets) over F_p.
pub(crate) fn reduced_homology_unchecked(n_vertices: usize, faces: &[u64], p: u64) -> Vec<usize> {
    reduced_homology_truncated(n_vertices, faces, p, n_vertices as i64 - 1)
}

/// `dim H~_j` for `j = -1..=max_j` only; higher boundary maps are never built.
pub(crate) fn reduced_homology_truncated(
    n_vertices: usize,
    faces: &[u64],
    p: u64,
    max_j: i64,
) -> Vec<usize> {
    let len = (max_j + 2).clamp(0, n_vertices as i64 + 1) as usize;
    let full = n_vertices + 1;
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); full + 1];
    for &f in faces {
        let k = f.count_ones() as usize;
        if k <= len {
            by_size[k].push(f);
        }
    }
    // Chain group C_j is spanned by faces with j + 1 vertices; C_{-1} by the empty face.
    let index: Vec<HashMap<u64, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();
    // rank of the boundary map from faces of size k to faces of size k - 1.
    let mut rank = vec![0usize; full + 2];
    for k in 1..=len.min(full) {
        if by_size[k].is_empty() || by_size[k - 1].is_empty() {
            continue;
        }
        let cols: Vec<SparseColumn> = by_size[k]
            .iter()
            .map(|&f| {
                let mut col: SparseColumn = Vec::with_capacity(k);
                let mut sign = 1i64;
                let mut bits = f;
                while bits != 0 {
                    let b = bits.trailing_zeros();
                    bits &= bits - 1;
                    let row = index[k - 1][&(f & !(1u64 << b))];
                    col.push((row, reduce_signed(sign, p)));
                    sign = -sign;
                }
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        rank[k] = rank_mod_p(cols, p);
    }
    (0..len)
        .map(|k| by_size[k].len() - rank[k] - rank[k + 1])
        .collect()
}

/// Smallest `j` with `H~_j != 0`, where `dims[j + 1] = dim H~_j`.
pub fn lowest_nonvanishing(dims: &[usize]) -> Option<i64> {
    dims.iter().position(|&d| d > 0).map(|i| i as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 2;

    #[test]
    fn point_is_acyclic() {
        let c = SimplicialComplex::from_facets(1, &[0b1]);
        assert_eq!(c.reduced_homology(P, 20).unwrap(), vec![0, 0]);
    }

    #[test]
    fn two_points() {
        let c = SimplicialComplex::from_facets(2, &[0b01, 0b10]);
        assert_eq!(c.reduced_homology(P, 20).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn hollow_triangle() {
        let c = SimplicialComplex::from_facets(3, &[0b011, 0b101, 0b110]);
        assert_eq!(c.reduced_homology(P, 20).unwrap(), vec![0, 0, 1, 0]);
        assert_eq!(c.reduced_homology(32003, 20).unwrap(), vec![0, 0, 1, 0]);
    }

    #[test]
    fn void_versus_irrelevant() {
        assert_eq!(
            SimplicialComplex::void(2).reduced_homology(P, 20).unwrap(),
            vec![0, 0, 0]
        );
        assert_eq!(
            SimplicialComplex::irrelevant(2)
                .reduced_homology(P, 20)
                .unwrap(),
            vec![1, 0, 0]
        );
        assert_eq!(
            SimplicialComplex::irrelevant(0)
                .reduced_homology(P, 20)
                .unwrap(),
            vec![1]
        );
    }

    #[test]
    fn cone_is_acyclic() {
        // Cone with apex 2 over two points.
        let c = SimplicialComplex::from_facets(3, &[0b101, 0b110]);
        assert_eq!(c.reduced_homology(P, 20).unwrap(), vec![0; 4]);
    }

    #[test]
    fn projective_plane_sees_the_characteristic() {
        // Six-vertex triangulation of RP^2: H~_1 = Z/2, so F_2 sees H~_1 and H~_2, F_3 sees nothing.
        let tris = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let facets: Vec<u64> = tris
            .iter()
            .map(|t| t.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let c = SimplicialComplex::from_facets(6, &facets);
        assert_eq!(
            c.reduced_homology(2, 20).unwrap(),
            vec![0, 0, 1, 1, 0, 0, 0]
        );
        assert_eq!(c.reduced_homology(3, 20).unwrap(), vec![0; 7]);
    }

    #[test]
    fn vertex_budget_is_enforced() {
        let c = SimplicialComplex::irrelevant(5);
        assert!(matches!(
            c.reduced_homology(P, 4),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn from_faces_checks_closure() {
        assert!(SimplicialComplex::from_faces(2, [0b11]).is_err());
        assert!(SimplicialComplex::from_faces(2, [0, 1, 2, 3]).is_ok());
    }
}
