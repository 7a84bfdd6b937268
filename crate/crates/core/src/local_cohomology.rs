//! Depth from local cohomology of monomial quotients, evaluated on ideals
//! glued along one shared variable.
//!
//! For `a` in `Z^n` let `G = {j : a_j < 0}`. Then
//! `H^i_m(S/I)_a = H~_{i - |G| - 1}(D_a)` where `D_a` is the complex on the
//! vertices outside `G` whose faces are the `F` with `x^a` not in `I`
//! localized at the variables of `F` and `G`. So
//! `depth S/I = min_a (|G| + 1 + lowest nonvanishing index of D_a)`.
//! `D_a` only depends on which generator exponents exceed `a`, so finitely
//! many degree cells cover all of `Z^n`.
//!
//! A [`GluedIdeal`] is a product `C_1 ... C_K` of component ideals that share
//! their first variable (the hub) and are otherwise variable-disjoint. Its
//! powers are the products of the component powers, and both membership
//! and the complexes `D_a` are computed from the components without ever
//! expanding the product.

use std::collections::HashSet;

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::homology::{lowest_nonvanishing, reduced_homology_truncated};
use crate::ideal::MonomialIdeal;
use crate::monomial::{self, Monomial};
use crate::ring::RingSignature;

const INF: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedIdeal {
    ring: RingSignature,
    components: Vec<MonomialIdeal>,
    /// Full-ring index of each component variable; index 0 is always the hub.
    maps: Vec<Vec<usize>>,
}

impl GluedIdeal {
    /// Glues components along their first variables. The full ring lists the
    /// first component's variables, then the non-hub variables of the others.
    pub fn new(components: Vec<MonomialIdeal>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidArgument("a glued ideal needs a component".into()))?;
        let mut names: Vec<String> = first.ring().variables().to_vec();
        let mut maps = vec![(0..names.len()).collect::<Vec<_>>()];
        for c in &components[1..] {
            let mut map = vec![0];
            for v in &c.ring().variables()[1..] {
                if names.contains(v) {
                    return Err(Error::SharedVariables(format!(
                        "variable {v} occurs in two components outside the hub"
                    )));
                }
                map.push(names.len());
                names.push(v.clone());
            }
            maps.push(map);
        }
        let ring = RingSignature::new(&names)?;
        Ok(GluedIdeal {
            ring,
            components,
            maps,
        })
    }

    pub fn single(ideal: MonomialIdeal) -> Self {
        let map = (0..ideal.nvars()).collect();
        GluedIdeal {
            ring: ideal.ring().clone(),
            components: vec![ideal],
            maps: vec![map],
        }
    }

    pub fn ring(&self) -> &RingSignature {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.len()
    }

    pub fn components(&self) -> &[MonomialIdeal] {
        &self.components
    }

    pub fn is_proper_nonzero(&self) -> bool {
        self.components.iter().all(MonomialIdeal::is_proper_nonzero)
    }

    /// Upper bound on the number of minimal generators of the expanded ideal.
    pub fn generator_bound(&self) -> u128 {
        self.components.iter().map(|c| c.len() as u128).product()
    }

    pub fn power(&self, n: u32) -> Result<GluedIdeal> {
        let components = self
            .components
            .iter()
            .map(|c| c.power(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(GluedIdeal {
            ring: self.ring.clone(),
            components,
            maps: self.maps.clone(),
        })
    }

    /// The product of the components, expanded in the full ring.
    pub fn flatten(&self) -> Result<MonomialIdeal> {
        let m = self.nvars();
        let mut acc = MonomialIdeal::unit(&self.ring);
        for (c, map) in self.components.iter().zip(&self.maps) {
            let rows: Vec<Vec<u32>> = c
                .rows()
                .map(|g| {
                    let mut row = vec![0u32; m];
                    for (i, &e) in g.iter().enumerate() {
                        row[map[i]] = e;
                    }
                    row
                })
                .collect();
            acc = acc.product(&MonomialIdeal::from_exponents(&self.ring, &rows)?)?;
        }
        Ok(acc)
    }

    fn private_part(&self, k: usize, exps: &[u32]) -> Vec<u32> {
        self.maps[k][1..].iter().map(|&j| exps[j]).collect()
    }

    pub(crate) fn contains_exps(&self, exps: &[u32]) -> bool {
        let mut total = 0u64;
        for (k, c) in self.components.iter().enumerate() {
            let h = min_hub_exponent(c, &self.private_part(k, exps));
            if h == INF {
                return false;
            }
            total += h as u64;
        }
        total <= exps[0] as u64
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.ring() != &self.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                m.ring(),
                self.ring
            )));
        }
        Ok(self.contains_exps(m.exponents()))
    }

    /// A monomial `w` outside the ideal with `x_j w` inside for every variable,
    /// i.e. a witness that the maximal ideal is associated.
    pub fn max_associated_witness(&self) -> Option<Monomial> {
        let mut w = vec![0u32; self.nvars()];
        let mut total = 0u64;
        for (k, c) in self.components.iter().enumerate() {
            let (point, h) = locally_strict_point(c)?;
            for (i, &e) in point.iter().enumerate() {
                w[self.maps[k][i + 1]] = e;
            }
            total += h as u64;
        }
        if total == 0 {
            return None;
        }
        w[0] = u32::try_from(total - 1).ok()?;
        Some(Monomial::from_raw(&self.ring, w))
    }

    /// `depth S/I` from local cohomology.
    pub fn depth(&self, cfg: &EngineConfig) -> Result<u32> {
        if !self.is_proper_nonzero() {
            return Err(Error::Precondition(
                "every component must be nonzero and proper".into(),
            ));
        }
        cfg.validate()?;
        let profiles: Vec<Vec<Profile>> = self
            .components
            .iter()
            .map(|c| component_profiles(c, cfg))
            .collect::<Result<_>>()?;
        let hub_range: u32 = self
            .components
            .iter()
            .map(|c| c.distinct_exponents(0).last().copied().unwrap_or(0))
            .sum();
        // Hub option `Some(r)` sets its degree to r; `None` puts it in G.
        let hub_options = (0..hub_range).map(Some).chain(std::iter::once(None));
        let mut search = CellSearch::new(&profiles, self.nvars() as u32, cfg)?;
        for hub in hub_options {
            search.run(hub);
        }
        if search.visited > cfg.cell_budget {
            return Err(Error::Budget {
                resource: "local cohomology degree cells",
                requested: search.visited,
                limit: cfg.cell_budget,
            });
        }
        let best = search.best;
        if best as usize > self.nvars() {
            return Err(Error::Invariant(format!(
                "depth {best} exceeds the ring dimension"
            )));
        }
        Ok(best)
    }

    pub fn depth_function(&self, max_n: u32, cfg: &EngineConfig) -> Result<Vec<u32>> {
        (1..=max_n)
            .map(|n| {
                self.power(n)
                    .and_then(|q| q.depth(cfg))
                    .map_err(|e| e.at_power(n))
            })
            .collect()
    }
}

/// `depth S/I` from local cohomology, treating `I` as a single component.
pub fn lc_depth(ideal: &MonomialIdeal, cfg: &EngineConfig) -> Result<u32> {
    GluedIdeal::single(ideal.clone()).depth(cfg)
}

/// Smallest hub exponent among generators whose non-hub part divides `private`.
fn min_hub_exponent(c: &MonomialIdeal, private: &[u32]) -> u32 {
    c.rows()
        .filter(|g| monomial::divides(&g[1..], private))
        .map(|g| g[0])
        .min()
        .unwrap_or(INF)
}

/// A non-hub exponent vector `w` where the smallest usable hub exponent is
/// finite and drops strictly after multiplying by any non-hub variable.
/// Such a drop forces `w_j = g_j - 1` for some generator, which bounds the search.
fn locally_strict_point(c: &MonomialIdeal) -> Option<(Vec<u32>, u32)> {
    let m = c.nvars() - 1;
    let axes: Vec<Vec<u32>> = (1..=m)
        .map(|j| {
            let mut v: Vec<u32> = c.rows().filter(|g| g[j] > 0).map(|g| g[j] - 1).collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    if axes.iter().any(Vec::is_empty) {
        return None;
    }
    let mut idx = vec![0usize; m];
    loop {
        let w: Vec<u32> = idx.iter().zip(&axes).map(|(&i, a)| a[i]).collect();
        let h = min_hub_exponent(c, &w);
        if h != INF {
            let strict = (0..m).all(|j| {
                let mut up = w.clone();
                up[j] += 1;
                min_hub_exponent(c, &up) < h
            });
            if strict {
                return Some((w, h));
            }
        }
        // Mixed-radix increment.
        let mut j = 0;
        loop {
            if j == m {
                return None;
            }
            idx[j] += 1;
            if idx[j] < axes[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// What one component contributes to `D_a` for a fixed non-hub degree cell:
/// the number of its variables in `G`, its remaining vertex count, and for
/// each vertex subset `F` the smallest usable hub exponent once `F` is inverted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Profile {
    g: u32,
    nv: u32,
    h: Vec<u32>,
}

/// Distinct non-cone profiles over all non-hub degree cells of a component.
fn component_profiles(c: &MonomialIdeal, cfg: &EngineConfig) -> Result<Vec<Profile>> {
    let m = c.nvars() - 1;
    // Per variable: option 0 puts it in G, option k > 0 uses threshold thresholds[k - 1].
    let thresholds: Vec<Vec<u32>> = (1..=m)
        .map(|j| {
            let exps = c.distinct_exponents(j);
            let top = exps.last().copied().unwrap_or(0);
            let mut t: Vec<u32> = std::iter::once(0)
                .chain(exps)
                .filter(|&e| e < top)
                .collect();
            t.dedup();
            t
        })
        .collect();
    let cells: u128 = thresholds.iter().map(|t| t.len() as u128 + 1).product();
    if cells > cfg.cell_budget {
        return Err(Error::Budget {
            resource: "local cohomology degree cells",
            requested: cells,
            limit: cfg.cell_budget,
        });
    }
    let rows: Vec<&[u32]> = c.rows().collect();
    let mut seen: HashSet<Profile> = HashSet::new();
    let mut out = Vec::new();
    let mut opt = vec![0usize; m];
    loop {
        if let Some(p) = profile_at(&rows, &thresholds, &opt) {
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        let mut j = 0;
        loop {
            if j == m {
                out.sort_by(|a, b| (a.g, a.nv, &a.h).cmp(&(b.g, b.nv, &b.h)));
                return Ok(out);
            }
            opt[j] += 1;
            if opt[j] <= thresholds[j].len() {
                break;
            }
            opt[j] = 0;
            j += 1;
        }
    }
}

fn profile_at(rows: &[&[u32]], thresholds: &[Vec<u32>], opt: &[usize]) -> Option<Profile> {
    let vertices: Vec<usize> = (0..opt.len()).filter(|&j| opt[j] > 0).collect();
    let nv = vertices.len();
    let mut h = vec![INF; 1 << nv];
    for g in rows {
        // Vertices where the generator exceeds the cell degree.
        let s = vertices.iter().enumerate().fold(0usize, |acc, (b, &j)| {
            if g[j + 1] > thresholds[j][opt[j] - 1] {
                acc | 1 << b
            } else {
                acc
            }
        });
        h[s] = h[s].min(g[0]);
    }
    for b in 0..nv {
        for f in 0..h.len() {
            if f >> b & 1 == 1 {
                h[f] = h[f].min(h[f & !(1 << b)]);
            }
        }
    }
    // A vertex that never changes h is a cone point of every D_a built from this profile.
    for b in 0..nv {
        if (0..h.len()).all(|f| f >> b & 1 == 1 || h[f] == h[f | 1 << b]) {
            return None;
        }
    }
    Some(Profile {
        g: (opt.len() - nv) as u32,
        nv: nv as u32,
        h,
    })
}

/// Minimum of `|G| + 1 + lowest nonvanishing index` over all degree cells.
/// Cells that cannot beat the current minimum are skipped, and homology is
/// only computed up to the index that could still improve it.
struct CellSearch<'a> {
    profiles: &'a [Vec<Profile>],
    /// `suffix_g[k]`: smallest possible G count of components `k..`.
    suffix_g: Vec<u32>,
    best: u32,
    p: u64,
    visited: u128,
    limit: u128,
}

impl<'a> CellSearch<'a> {
    fn new(profiles: &'a [Vec<Profile>], cap: u32, cfg: &EngineConfig) -> Result<Self> {
        let max_nv: u32 = 1 + profiles
            .iter()
            .map(|ps| ps.iter().map(|p| p.nv).max().unwrap_or(0))
            .sum::<u32>();
        if max_nv as usize > cfg.vertex_budget {
            return Err(Error::Budget {
                resource: "simplicial complex vertices",
                requested: max_nv as u128,
                limit: cfg.vertex_budget as u128,
            });
        }
        let mut suffix_g = vec![0u32; profiles.len() + 1];
        for k in (0..profiles.len()).rev() {
            suffix_g[k] = suffix_g[k + 1] + profiles[k].iter().map(|p| p.g).min().unwrap_or(0);
        }
        Ok(CellSearch {
            profiles,
            suffix_g,
            best: cap,
            p: cfg.characteristic,
            visited: 0,
            limit: cfg.cell_budget,
        })
    }

    fn run(&mut self, hub: Option<u32>) {
        if self.profiles.iter().any(Vec::is_empty) || self.visited > self.limit {
            return;
        }
        let mut chosen = Vec::with_capacity(self.profiles.len());
        self.descend(hub, u32::from(hub.is_none()), &mut chosen);
    }

    fn descend(&mut self, hub: Option<u32>, g: u32, chosen: &mut Vec<&'a Profile>) {
        let k = chosen.len();
        if self.visited > self.limit {
            return;
        }
        if k == self.profiles.len() {
            self.visited += 1;
            self.evaluate(hub, g, chosen);
            return;
        }
        let profiles = self.profiles;
        // Profiles are sorted by G count, so the first one too large ends the level.
        for p in &profiles[k] {
            if g + p.g + self.suffix_g[k + 1] >= self.best {
                break;
            }
            chosen.push(p);
            self.descend(hub, g + p.g, chosen);
            chosen.pop();
        }
    }

    fn evaluate(&mut self, hub: Option<u32>, g: u32, chosen: &[&Profile]) {
        // The lowest index is at least -1, so only j <= best - g - 2 can help.
        let max_j = self.best as i64 - g as i64 - 2;
        if max_j < -1 {
            return;
        }
        let nv = u32::from(hub.is_some()) + chosen.iter().map(|p| p.nv).sum::<u32>();
        let faces = cell_faces(chosen, hub);
        let dims = reduced_homology_truncated(nv as usize, &faces, self.p, max_j);
        if let Some(j) = lowest_nonvanishing(&dims) {
            self.best = self.best.min((g as i64 + 1 + j) as u32);
        }
    }
}

/// Faces of `D_a`: vertex 0 is the hub when it lies outside G, followed by
/// each component's vertices in order.
fn cell_faces(chosen: &[&Profile], hub: Option<u32>) -> Vec<u64> {
    let hub_bits = u32::from(hub.is_some());
    let nv: u32 = hub_bits + chosen.iter().map(|p| p.nv).sum::<u32>();
    let mut faces = Vec::new();
    for f in 0u64..(1u64 << nv) {
        let hub_inverted = hub.is_none() || f & 1 == 1;
        let mut shift = hub_bits;
        let mut total = 0u64;
        let mut finite = true;
        for p in chosen {
            let sub = ((f >> shift) & ((1u64 << p.nv) - 1)) as usize;
            shift += p.nv;
            let h = p.h[sub];
            if h == INF {
                finite = false;
                break;
            }
            total += h as u64;
        }
        let in_ideal = finite && (hub_inverted || total <= hub.unwrap() as u64);
        if !in_ideal {
            faces.push(f);
        }
    }
    faces
}
