//! Multigraded Betti numbers, projective dimension and depth of `S/I`.
//!
//! `beta_{i,a}(S/I) = dim H~_{i-2}(K^a(I))` for `i >= 1`, where `K^a(I)` is
//! the upper Koszul simplicial complex at `a`. Nonzero values only occur at
//! elements of the lcm lattice, which is enumerated first. The order complex
//! of the open lattice interval below `a` carries the same homology with the
//! same shift and serves as the independent oracle.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::homology::{reduced_homology_unchecked, SimplicialComplex};
use crate::ideal::MonomialIdeal;
use crate::lattice::{lcm_lattice, LcmLattice};
use crate::monomial;

/// Homological shift between `beta_{i,a}(S/I)` and the reduced homology
/// index of the Koszul complex (and of the lattice interval): `i = j + 2`.
pub const HOMOLOGICAL_SHIFT: i64 = 2;

/// Upper Koszul simplicial complex of `I` at `a`.
///
/// Vertex `k` stands for the `k`-th variable in `support(a)`; a squarefree
/// `b` is a face iff `x^(a - b)` lies in `I`. Returns the void complex when
/// `x^a` is not in `I`.
pub fn koszul_complex(ideal: &MonomialIdeal, a: &[u32]) -> Result<SimplicialComplex> {
    if a.len() != ideal.nvars() {
        return Err(Error::InvalidArgument(
            "multidegree has the wrong length".into(),
        ));
    }
    let support: Vec<usize> = (0..a.len()).filter(|&v| a[v] > 0).collect();
    let facets = koszul_facets(ideal, a);
    let compress = |m: u64| {
        support.iter().enumerate().fold(
            0u64,
            |acc, (k, &v)| if m >> v & 1 == 1 { acc | 1 << k } else { acc },
        )
    };
    let facets: Vec<u64> = facets.into_iter().map(compress).collect();
    Ok(SimplicialComplex::from_facets(support.len(), &facets))
}

/// Facet candidates of `K^a(I)` as masks over ring variables: for every
/// generator `g | x^a`, the variables where `g` is strictly below `a`.
fn koszul_facets(ideal: &MonomialIdeal, a: &[u32]) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for g in ideal.rows() {
        if monomial::divides(g, a) {
            let m =
                g.iter().zip(a).enumerate().fold(
                    0u64,
                    |acc, (v, (&ge, &ae))| if ge < ae { acc | 1 << v } else { acc },
                );
            out.push(m);
        }
    }
    // Keep only maximal masks.
    out.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut maximal: Vec<u64> = Vec::with_capacity(out.len());
    for m in out {
        if !maximal.iter().any(|&f| m & !f == 0) {
            maximal.push(m);
        }
    }
    maximal
}

/// Reduced homology of the complex generated by `facets`, with vertices
/// relabelled to `0..k` over the union of the facets plus `extra` vertices.
fn homology_of_facets(facets: &[u64], n_vertices: usize, vertex_bits: u64, p: u64) -> Vec<usize> {
    if facets.is_empty() {
        return vec![0; n_vertices + 1];
    }
    // A vertex common to all facets makes the complex a cone.
    if facets.iter().fold(vertex_bits, |acc, &f| acc & f) != 0 {
        return vec![0; n_vertices + 1];
    }
    let bits: Vec<u32> = (0..64).filter(|&b| vertex_bits >> b & 1 == 1).collect();
    let compress = |m: u64| {
        bits.iter().enumerate().fold(
            0u64,
            |acc, (k, &b)| if m >> b & 1 == 1 { acc | 1 << k } else { acc },
        )
    };
    let compressed: Vec<u64> = facets.iter().map(|&f| compress(f)).collect();
    let c = SimplicialComplex::from_facets(n_vertices, &compressed);
    reduced_homology_unchecked(n_vertices, c.faces(), p)
}

/// Multigraded Betti numbers of `S/I` over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    #[serde(skip)]
    ideal: Option<MonomialIdeal>,
    pub characteristic: u64,
    /// `(i, a) -> beta_{i,a}`; zero entries are omitted.
    pub entries: BTreeMap<(usize, Vec<u32>), usize>,
    pub lattice_size: usize,
}

impl BettiTable {
    pub fn ideal(&self) -> Option<&MonomialIdeal> {
        self.ideal.as_ref()
    }

    pub fn get(&self, i: usize, a: &[u32]) -> usize {
        self.entries.get(&(i, a.to_vec())).copied().unwrap_or(0)
    }

    /// `beta_i = sum_a beta_{i,a}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Total Betti numbers `beta_0, ..., beta_pd`.
    pub fn totals(&self) -> Vec<usize> {
        (0..=self.projective_dimension())
            .map(|i| self.total(i))
            .collect()
    }

    /// Projective dimension of `S/I`.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Entries grouped by total degree: `(i, degree) -> count`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), &v) in &self.entries {
            *out.entry((*i, a.iter().map(|&e| e as u64).sum()))
                .or_insert(0) += v;
        }
        out
    }
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::Precondition("the ideal must be nonzero".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Precondition("the ideal must be proper".into()));
    }
    Ok(())
}

/// Betti numbers at each lattice element, in lattice order.
fn koszul_betti_rows(lattice: &LcmLattice, cfg: &EngineConfig) -> Result<Vec<Vec<usize>>> {
    let ideal = lattice.ideal();
    let p = cfg.characteristic;
    let budget = cfg.vertex_budget;
    lattice
        .elements()
        .par_iter()
        .map(|a| {
            let support = a.iter().filter(|&&e| e > 0).count();
            if support > budget {
                return Err(Error::Budget {
                    resource: "simplicial complex vertices",
                    requested: support as u128,
                    limit: budget as u128,
                });
            }
            let bits = a
                .iter()
                .enumerate()
                .fold(0u64, |acc, (v, &e)| if e > 0 { acc | 1 << v } else { acc });
            let facets = koszul_facets(ideal, a);
            Ok(homology_of_facets(&facets, support, bits, p))
        })
        .collect()
}

pub fn betti_table(ideal: &MonomialIdeal, cfg: &EngineConfig) -> Result<BettiTable> {
    require_proper(ideal)?;
    cfg.validate()?;
    let lattice = lcm_lattice(ideal, cfg)?;
    betti_table_on(&lattice, cfg)
}

pub fn betti_table_on(lattice: &LcmLattice, cfg: &EngineConfig) -> Result<BettiTable> {
    let ideal = lattice.ideal();
    require_proper(ideal)?;
    let rows = koszul_betti_rows(lattice, cfg)?;
    let mut entries = BTreeMap::new();
    entries.insert((0, vec![0; ideal.nvars()]), 1);
    for (a, dims) in lattice.elements().iter().zip(rows) {
        for (idx, &d) in dims.iter().enumerate() {
            if d > 0 {
                // idx = j + 1 with j the homology degree.
                let i = (idx as i64 - 1 + HOMOLOGICAL_SHIFT) as usize;
                entries.insert((i, a.clone()), d);
            }
        }
    }
    Ok(BettiTable {
        ideal: Some(ideal.clone()),
        characteristic: cfg.characteristic,
        entries,
        lattice_size: lattice.len(),
    })
}

/// Betti multiplicities `beta_{i,a}(S/I)` (indexed by `i`) from the order
/// complex of the open interval `(bottom, a)` of the lcm lattice.
pub fn gpw_betti(lattice: &LcmLattice, a: &[u32], cfg: &EngineConfig) -> Result<Vec<usize>> {
    if !lattice.contains(a) {
        return Err(Error::Precondition(
            "multidegree is not in the lcm lattice".into(),
        ));
    }
    let interval = lattice.open_interval_below(a);
    let k = interval.len();
    const MAX_INTERVAL: usize = 64;
    if k > MAX_INTERVAL {
        return Err(Error::Budget {
            resource: "lcm lattice interval elements",
            requested: k as u128,
            limit: MAX_INTERVAL as u128,
        });
    }
    // Chains of the interval; elements are sorted by degree so a chain is an
    // increasing sequence of indices with consecutive divisibility.
    let above: Vec<u64> = (0..k)
        .map(|i| {
            (i + 1..k)
                .filter(|&j| {
                    interval[i] != interval[j] && monomial::divides(interval[i], interval[j])
                })
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect();
    let mut faces = vec![0u64];
    let mut stack: Vec<(u64, u64)> = (0..k).map(|i| (1u64 << i, above[i])).collect();
    while let Some((chain, ext)) = stack.pop() {
        faces.push(chain);
        let mut bits = ext;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            stack.push((chain | 1 << j, ext & above[j]));
        }
    }
    let dims = reduced_homology_unchecked(
        k,
        SimplicialComplex::from_faces_unchecked(k, faces).faces(),
        cfg.characteristic,
    );
    let mut out = vec![0usize; k + 2];
    for (idx, &d) in dims.iter().enumerate() {
        let i = (idx as i64 - 1 + HOMOLOGICAL_SHIFT) as usize;
        out[i] = d;
    }
    Ok(out)
}

/// `depth S/I = dim S - pd S/I`.
pub fn depth(ideal: &MonomialIdeal, cfg: &EngineConfig) -> Result<u32> {
    let table = betti_table(ideal, cfg)?;
    Ok((ideal.nvars() - table.projective_dimension()) as u32)
}

/// Values `depth S/I^n` for `n = 1..N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthFunction {
    pub values: Vec<u32>,
    /// Set only when a construction guarantees the last value persists.
    pub claimed_stable: bool,
}

impl DepthFunction {
    pub fn at(&self, n: u32) -> Option<u32> {
        self.values.get(n.checked_sub(1)? as usize).copied()
    }
}

pub fn depth_function(
    ideal: &MonomialIdeal,
    max_n: u32,
    cfg: &EngineConfig,
) -> Result<DepthFunction> {
    require_proper(ideal)?;
    let powers = ideal.powers(max_n)?;
    let values = powers
        .iter()
        .zip(1..)
        .map(|(q, n)| depth(q, cfg).map_err(|e| e.at_power(n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DepthFunction {
        values,
        claimed_stable: false,
    })
}

/// `pd I^n = dim S - depth S/I^n - 1` for `n = 1..N`.
pub fn pd_function(ideal: &MonomialIdeal, max_n: u32, cfg: &EngineConfig) -> Result<Vec<i64>> {
    let dim = ideal.nvars() as i64;
    Ok(depth_function(ideal, max_n, cfg)?
        .values
        .into_iter()
        .map(|d| dim - d as i64 - 1)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal_file;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal_file(s).unwrap()
    }

    #[test]
    fn koszul_examples() {
        let i = ideal("ring x, y\nideal x, y");
        let k = koszul_complex(&i, &[1, 1]).unwrap();
        assert_eq!(k.faces(), &[0, 0b01, 0b10]);
        let k = koszul_complex(&i, &[1, 0]).unwrap();
        assert_eq!(k.faces(), &[0]);
        let k = koszul_complex(&ideal("ring x, y\nideal x^2"), &[1, 0]).unwrap();
        assert!(k.is_void());
        let t = ideal("ring x, y, z\nideal x, y, z");
        let k = koszul_complex(&t, &[1, 1, 1]).unwrap();
        assert_eq!(k.faces().len(), 7);
        assert!(!k.contains(0b111));
    }

    #[test]
    fn koszul_complex_matches_membership_definition() {
        let i = ideal("ring x, y, z\nideal x^4, x^3 y, x y^3, y^4, x^2 y^2 z");
        let lattice = lcm_lattice(&i, &cfg()).unwrap();
        for a in lattice.elements() {
            let k = koszul_complex(&i, a).unwrap();
            let support: Vec<usize> = (0..3).filter(|&v| a[v] > 0).collect();
            for b in 0u64..(1 << support.len()) {
                let mut m = a.clone();
                for (kk, &v) in support.iter().enumerate() {
                    if b >> kk & 1 == 1 {
                        m[v] -= 1;
                    }
                }
                assert_eq!(k.contains(b), i.contains_exps(&m), "a = {a:?}, b = {b:b}");
            }
        }
    }

    #[test]
    fn koszul_resolutions() {
        let t = betti_table(&ideal("ring x, y\nideal x, y"), &cfg()).unwrap();
        assert_eq!(t.totals(), vec![1, 2, 1]);
        let t = betti_table(&ideal("ring x, y, z\nideal x, y, z"), &cfg()).unwrap();
        assert_eq!(t.totals(), vec![1, 3, 3, 1]);
        assert_eq!(t.get(3, &[1, 1, 1]), 1);
    }

    #[test]
    fn small_resolution() {
        // 0 <- S/I <- S <- S^2 <- S <- 0 with I = (x^2, xy) = x(x, y).
        let t = betti_table(&ideal("ring x, y\nideal x^2, x y"), &cfg()).unwrap();
        assert_eq!(t.totals(), vec![1, 2, 1]);
        assert_eq!(t.get(2, &[2, 1]), 1);
        assert_eq!(t.projective_dimension(), 2);
    }

    #[test]
    fn depth_examples() {
        assert_eq!(depth(&ideal("ring x, y\nideal x y"), &cfg()).unwrap(), 1);
        assert_eq!(depth(&ideal("ring x\nideal x^2"), &cfg()).unwrap(), 0);
        let t1 = ideal("ring x, y, z\nideal x^4, x^3 y, x y^3, y^4, x^2 y^2 z");
        assert_eq!(depth(&t1, &cfg()).unwrap(), 0);
    }

    #[test]
    fn unit_and_zero_rejected() {
        assert!(matches!(
            depth(&ideal("ring x\nideal 1"), &cfg()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            depth(&ideal("ring x\nideal 0"), &cfg()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn pd_of_the_maximal_ideal_powers() {
        assert_eq!(
            pd_function(&ideal("ring x, y\nideal x, y"), 2, &cfg()).unwrap(),
            vec![1, 1]
        );
    }

    #[test]
    fn gpw_agrees_at_the_top_of_two_variables() {
        let i = ideal("ring x, y\nideal x, y");
        let l = lcm_lattice(&i, &cfg()).unwrap();
        let g = gpw_betti(&l, &[1, 1], &cfg()).unwrap();
        assert_eq!(g[2], 1);
        assert_eq!(g.iter().sum::<usize>(), 1);
    }

    #[test]
    fn gpw_matches_koszul_everywhere() {
        for src in [
            "ring x, y\nideal x^2, x y, y^2",
            "ring x, y, z\nideal x^4, x^3 y, x y^3, y^4, x^2 y^2 z",
            "ring t, u, v\nideal t^3, t u v, u^2 v",
        ] {
            let i = ideal(src);
            let table = betti_table(&i, &cfg()).unwrap();
            let l = lcm_lattice(&i, &cfg()).unwrap();
            for a in l.elements() {
                let g = gpw_betti(&l, a, &cfg()).unwrap();
                for (k, &v) in g.iter().enumerate() {
                    assert_eq!(v, table.get(k, a), "{src} at {a:?}, i = {k}");
                }
            }
        }
    }

    #[test]
    fn vertex_budget_surfaces() {
        let i = ideal("ring x, y, z\nideal x, y, z");
        let tight = EngineConfig {
            vertex_budget: 2,
            ..cfg()
        };
        assert!(matches!(betti_table(&i, &tight), Err(Error::Budget { .. })));
    }
}
