//! The lcm lattice of a monomial ideal.
//!
//! Elements are the lcms of nonempty subsets of the minimal generators. The
//! bottom element (the lcm of the empty set) is implicit and not stored.

use rayon::prelude::*;

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    ideal: MonomialIdeal,
    /// Sorted by total degree, then lexicographically.
    elements: Vec<Vec<u32>>,
}

impl LcmLattice {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        self.elements
            .binary_search_by(|e| order_key(e).cmp(&order_key(a)))
            .is_ok()
    }

    /// Elements strictly below `a` (and above the implicit bottom).
    pub fn open_interval_below(&self, a: &[u32]) -> Vec<&[u32]> {
        self.elements
            .iter()
            .filter(|e| e.as_slice() != a && monomial::divides(e, a))
            .map(Vec::as_slice)
            .collect()
    }
}

fn order_key(a: &[u32]) -> (u64, &[u32]) {
    (a.iter().map(|&e| e as u64).sum(), a)
}

fn sort_elements(elements: &mut [Vec<u32>]) {
    elements.sort_unstable_by(|a, b| order_key(a).cmp(&order_key(b)));
}

/// Number of grid candidates the grid-filter enumeration would visit.
pub fn grid_size(ideal: &MonomialIdeal) -> u128 {
    (0..ideal.nvars())
        .map(|v| ideal.distinct_exponents(v).len() as u128)
        .product()
}

/// Grid-filter enumeration: a candidate whose `v`-th coordinate is one of
/// the `v`-exponents of the generators is kept iff it equals the join of the
/// generators dividing it.
pub fn lcm_lattice(ideal: &MonomialIdeal, cfg: &EngineConfig) -> Result<LcmLattice> {
    if ideal.is_zero() {
        return Err(Error::Precondition(
            "the lcm lattice of the zero ideal is empty".into(),
        ));
    }
    let n = ideal.nvars();
    let axes: Vec<Vec<u32>> = (0..n).map(|v| ideal.distinct_exponents(v)).collect();
    let total = grid_size(ideal);
    if total > cfg.grid_budget {
        return Err(Error::Budget {
            resource: "lcm lattice grid candidates",
            requested: total,
            limit: cfg.grid_budget,
        });
    }
    let total = total as usize;
    let rows: Vec<&[u32]> = ideal.rows().collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    const CHUNK: usize = 4096;
    let mut elements: Vec<Vec<u32>> = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .flat_map_iter(|chunk| {
            let start = chunk * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut found = Vec::new();
            let mut a = vec![0u32; n];
            for idx in start..end {
                let mut rest = idx;
                for v in (0..n).rev() {
                    let len = axes[v].len();
                    a[v] = axes[v][rest % len];
                    rest /= len;
                }
                if is_join_of_dividing(&rows, &a, full) {
                    found.push(a.clone());
                }
            }
            found
        })
        .collect();
    sort_elements(&mut elements);
    Ok(LcmLattice {
        ideal: ideal.clone(),
        elements,
    })
}

#[inline]
fn is_join_of_dividing(rows: &[&[u32]], a: &[u32], full: u64) -> bool {
    let mut attained = 0u64;
    let mut any = false;
    for g in rows {
        if monomial::divides(g, a) {
            any = true;
            for (v, (&ge, &ae)) in g.iter().zip(a).enumerate() {
                if ge == ae {
                    attained |= 1 << v;
                }
            }
            if attained == full {
                return true;
            }
        }
    }
    any && attained == full
}

/// Oracle: joins of all nonempty generator subsets, for at most `max_atoms` generators.
pub fn lcm_lattice_by_subsets(ideal: &MonomialIdeal, max_atoms: usize) -> Result<Vec<Vec<u32>>> {
    let rows: Vec<&[u32]> = ideal.rows().collect();
    if rows.len() > max_atoms {
        return Err(Error::Budget {
            resource: "lcm lattice atoms for subset enumeration",
            requested: rows.len() as u128,
            limit: max_atoms as u128,
        });
    }
    let mut set = std::collections::HashSet::new();
    for mask in 1u64..(1u64 << rows.len()) {
        let mut join = vec![0u32; ideal.nvars()];
        for (i, g) in rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (j, &e) in join.iter_mut().zip(g.iter()) {
                    *j = (*j).max(e);
                }
            }
        }
        set.insert(join);
    }
    let mut out: Vec<Vec<u32>> = set.into_iter().collect();
    sort_elements(&mut out);
    Ok(out)
}

/// Oracle: fixpoint closure of the atoms under pairwise join.
pub fn lcm_lattice_by_closure(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    let mut set: std::collections::BTreeSet<Vec<u32>> = ideal.rows().map(<[u32]>::to_vec).collect();
    let atoms: Vec<Vec<u32>> = set.iter().cloned().collect();
    let mut frontier: Vec<Vec<u32>> = atoms.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for a in &atoms {
                let j = monomial::lcm(f, a);
                if set.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Vec<u32>> = set.into_iter().collect();
    sort_elements(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal_file;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    #[test]
    fn two_variables() {
        let i = parse_ideal_file("ring x, y\nideal x, y").unwrap();
        let l = lcm_lattice(&i, &cfg()).unwrap();
        assert_eq!(l.elements(), &[vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn square_of_the_maximal_ideal() {
        let i = parse_ideal_file("ring x, y\nideal x^2, x y, y^2").unwrap();
        let l = lcm_lattice(&i, &cfg()).unwrap();
        let oracle = lcm_lattice_by_subsets(&i, 20).unwrap();
        assert_eq!(l.elements(), oracle.as_slice());
        assert_eq!(l.len(), 6);
        assert!(l.contains(&[2, 2]) && l.contains(&[2, 1]) && !l.contains(&[1, 0]));
    }

    #[test]
    fn type_one_regression() {
        // Subset-join enumeration over the 2^5 subsets gives 19 distinct joins.
        let i = parse_ideal_file("ring x, y, z\nideal x^4, x^3 y, x y^3, y^4, x^2 y^2 z").unwrap();
        let l = lcm_lattice(&i, &cfg()).unwrap();
        let oracle = lcm_lattice_by_subsets(&i, 20).unwrap();
        assert_eq!(l.elements(), oracle.as_slice());
        assert_eq!(l.elements(), lcm_lattice_by_closure(&i).as_slice());
        assert_eq!(l.len(), TYPE_ONE_LATTICE_SIZE);
    }

    const TYPE_ONE_LATTICE_SIZE: usize = 19;

    #[test]
    fn budget_is_a_hard_error() {
        let i = parse_ideal_file("ring x, y\nideal x^2, x y, y^2").unwrap();
        let tight = EngineConfig {
            grid_budget: 4,
            ..cfg()
        };
        assert!(matches!(lcm_lattice(&i, &tight), Err(Error::Budget { .. })));
    }
}
