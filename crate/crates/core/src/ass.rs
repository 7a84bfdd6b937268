//! Associated primes of monomial quotients.
//!
//! Every associated prime of `S/I` is generated by a variable subset `A`, and
//! `P_A` is associated iff the maximal ideal of `k[A]` is associated to the
//! image of `I` with the other variables set to 1. That in turn holds iff some
//! `w` outside the image has `x_j w` inside for every `j`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::local_cohomology::GluedIdeal;
use crate::monomial::Monomial;
use crate::prime::MonomialPrime;

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::Precondition(
            "the ideal must be nonzero and proper".into(),
        ));
    }
    Ok(())
}

fn is_socle_witness(ideal: &MonomialIdeal, w: &[u32]) -> bool {
    if ideal.contains_exps(w) {
        return false;
    }
    let mut up = w.to_vec();
    (0..w.len()).all(|j| {
        up[j] += 1;
        let inside = ideal.contains_exps(&up);
        up[j] -= 1;
        inside
    })
}

/// A monomial `w` outside `I` with `(I : w)` the maximal ideal, if one exists.
///
/// If `x_j w` lies in `I` but `w` does not, some generator has `g_j = w_j + 1`,
/// so each coordinate only ranges over the values `g_j - 1`. This is a subset
/// of the grid strictly below the generator join, and the search is exact.
pub fn has_max_associated(ideal: &MonomialIdeal) -> Option<Monomial> {
    if !ideal.is_proper_nonzero() {
        return None;
    }
    let n = ideal.nvars();
    let axes: Vec<Vec<u32>> = (0..n)
        .map(|j| {
            let mut v: Vec<u32> = ideal
                .rows()
                .filter(|g| g[j] > 0)
                .map(|g| g[j] - 1)
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    if axes.iter().any(Vec::is_empty) {
        return None;
    }
    let mut idx = vec![0usize; n];
    let mut w = vec![0u32; n];
    loop {
        for j in 0..n {
            w[j] = axes[j][idx[j]];
        }
        if is_socle_witness(ideal, &w) {
            return Some(Monomial::from_raw(ideal.ring(), w));
        }
        let mut j = 0;
        loop {
            if j == n {
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

/// Oracle: scans every `w` with `w_j < pad * join_j` (at least one value per axis).
pub fn has_max_associated_exhaustive(ideal: &MonomialIdeal, pad: u32) -> Option<Monomial> {
    if !ideal.is_proper_nonzero() {
        return None;
    }
    let bound: Vec<u32> = ideal
        .join_of_generators()
        .iter()
        .map(|&e| (e * pad).max(1))
        .collect();
    let n = ideal.nvars();
    let mut w = vec![0u32; n];
    loop {
        if is_socle_witness(ideal, &w) {
            return Some(Monomial::from_raw(ideal.ring(), w));
        }
        let mut j = 0;
        loop {
            if j == n {
                return None;
            }
            w[j] += 1;
            if w[j] < bound[j] {
                break;
            }
            w[j] = 0;
            j += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssReport {
    pub ideal: MonomialIdeal,
    /// Sorted by support.
    pub primes: Vec<MonomialPrime>,
    /// Witness in the ring on the prime's variables.
    pub witnesses: BTreeMap<MonomialPrime, Monomial>,
}

impl AssReport {
    pub fn contains_maximal(&self) -> bool {
        self.primes.iter().any(MonomialPrime::is_maximal)
    }

    pub fn to_json(&self, gamma: Option<&GammaSet>) -> serde_json::Value {
        let primes: Vec<Vec<String>> = self.primes.iter().map(MonomialPrime::names).collect();
        let witnesses: serde_json::Map<String, serde_json::Value> = self
            .witnesses
            .iter()
            .map(|(p, w)| (p.names().join(","), w.to_explicit_string().into()))
            .collect();
        let mut out = serde_json::json!({ "primes": primes, "witnesses": witnesses });
        if let Some(g) = gamma {
            out["gamma"] = serde_json::json!({ "N": g.bound, "members": g.members });
        }
        out
    }
}

pub fn ass_primes(ideal: &MonomialIdeal, cfg: &EngineConfig) -> Result<AssReport> {
    require_proper(ideal)?;
    let n = ideal.nvars();
    if n > cfg.var_budget {
        return Err(Error::Budget {
            resource: "ring variables for subset enumeration",
            requested: n as u128,
            limit: cfg.var_budget as u128,
        });
    }
    let found: Vec<(MonomialPrime, Monomial)> = (1u64..(1u64 << n))
        .into_par_iter()
        .map(|mask| -> Result<Option<(MonomialPrime, Monomial)>> {
            let support: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
            let local = ideal.localize(&support)?;
            Ok(has_max_associated(&local).map(|w| (MonomialPrime::new(ideal.ring(), support), w)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut primes: Vec<MonomialPrime> = found.iter().map(|(p, _)| p.clone()).collect();
    primes.sort();
    Ok(AssReport {
        ideal: ideal.clone(),
        primes,
        witnesses: found.into_iter().collect(),
    })
}

/// Minimal primes: minimal variable sets meeting the support of every generator.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    require_proper(ideal)?;
    let n = ideal.nvars();
    if n > 20 {
        return Err(Error::Budget {
            resource: "ring variables for support covers",
            requested: n as u128,
            limit: 20,
        });
    }
    let supports: Vec<u64> = ideal.rows().map(crate::ideal::support_mask).collect();
    let covers: Vec<u64> = (1u64..(1u64 << n))
        .filter(|&m| supports.iter().all(|&s| s & m != 0))
        .collect();
    let mut out: Vec<MonomialPrime> = covers
        .iter()
        .filter(|&&m| !covers.iter().any(|&c| c != m && c & !m == 0))
        .map(|&m| MonomialPrime::new(ideal.ring(), (0..n).filter(|&j| m >> j & 1 == 1).collect()))
        .collect();
    out.sort();
    Ok(out)
}

/// `{n <= N : the maximal ideal is associated to I^n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSet {
    pub bound: u32,
    pub members: Vec<u32>,
    /// Whether `bound` is claimed to lie in the stable range.
    pub eventual: bool,
}

pub fn gamma_set(ideal: &MonomialIdeal, max_n: u32) -> Result<GammaSet> {
    require_proper(ideal)?;
    let powers = ideal.powers(max_n)?;
    let members = powers
        .par_iter()
        .enumerate()
        .filter_map(|(i, q)| has_max_associated(q).map(|_| i as u32 + 1))
        .collect();
    Ok(GammaSet {
        bound: max_n,
        members,
        eventual: false,
    })
}

pub fn gamma_set_glued(ideal: &GluedIdeal, max_n: u32) -> Result<GammaSet> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::Precondition(
            "every component must be nonzero and proper".into(),
        ));
    }
    let mut members = Vec::new();
    for n in 1..=max_n {
        if ideal
            .power(n)
            .map_err(|e| e.at_power(n))?
            .max_associated_witness()
            .is_some()
        {
            members.push(n);
        }
    }
    Ok(GammaSet {
        bound: max_n,
        members,
        eventual: false,
    })
}

/// Associated primes of `(I J, x - y)/(x - y)` predicted from `Ass(I)` and
/// `Ass(J)`: the images of each `p`, of each `q` under `y -> x`, and of `p + q`
/// whenever `x` is in `p` and `y` is in `q`. Lives in the product ring with `y` removed.
pub fn predicted_ass_join(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    x: &str,
    y: &str,
    cfg: &EngineConfig,
) -> Result<Vec<MonomialPrime>> {
    if !i.ring().is_disjoint(j.ring()) {
        return Err(Error::SharedVariables(format!(
            "{} and {}",
            i.ring(),
            j.ring()
        )));
    }
    i.ring().require(x)?;
    j.ring().require(y)?;
    let ring = i.ring().concat(j.ring())?;
    let keep: Vec<usize> = (0..ring.len()).filter(|&v| ring.name(v) != y).collect();
    let target = ring.restrict(&keep)?;
    let image = |names: Vec<String>| -> Result<MonomialPrime> {
        let mapped: Vec<&str> = names
            .iter()
            .map(|n| if n == y { x } else { n.as_str() })
            .collect();
        MonomialPrime::from_names(&target, &mapped)
    };
    let ass_i = ass_primes(i, cfg)?.primes;
    let ass_j = ass_primes(j, cfg)?.primes;
    let xi = i.ring().require(x)?;
    let yj = j.ring().require(y)?;
    let mut out = Vec::new();
    for p in &ass_i {
        out.push(image(p.names())?);
    }
    for q in &ass_j {
        out.push(image(q.names())?);
    }
    for p in ass_i.iter().filter(|p| p.contains_var(xi)) {
        for q in ass_j.iter().filter(|q| q.contains_var(yj)) {
            let mut names = p.names();
            names.extend(q.names());
            out.push(image(names)?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
