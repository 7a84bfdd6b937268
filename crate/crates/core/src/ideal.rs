//! Monomial ideals in canonical form.
//!
//! Every [`MonomialIdeal`] stores its unique minimal generating set, sorted
//! lexicographically descending on exponent vectors, so equality of ideals is
//! plain structural equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{self, Monomial};
use crate::ring::RingSignature;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingSignature,
    nvars: usize,
    /// Row-major exponent matrix, one row per minimal generator.
    data: Vec<u32>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize(gens: &[Monomial], ring: &RingSignature) -> Result<Self> {
        let mut data = Vec::with_capacity(gens.len() * ring.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch(format!(
                    "generator {g} is not in {ring}"
                )));
            }
            data.extend_from_slice(g.exponents());
        }
        Ok(Self::from_flat(ring, data))
    }

    /// Builds the ideal from raw exponent rows (each of the ring's length).
    pub fn from_exponents(ring: &RingSignature, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * ring.len());
        for r in rows {
            if r.len() != ring.len() {
                return Err(Error::RingMismatch(format!(
                    "exponent row of length {} in {ring}",
                    r.len()
                )));
            }
            if r.iter().any(|&e| e > monomial::MAX_EXPONENT) {
                return Err(Error::Overflow {
                    limit: monomial::MAX_EXPONENT,
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Self::from_flat(ring, data))
    }

    pub(crate) fn from_flat(ring: &RingSignature, data: Vec<u32>) -> Self {
        let nvars = ring.len();
        MonomialIdeal {
            ring: ring.clone(),
            nvars,
            data: minimal_rows(nvars, data),
        }
    }

    /// Wraps rows already known to be minimal and canonically sorted.
    pub(crate) fn from_canonical(ring: &RingSignature, data: Vec<u32>) -> Self {
        let ideal = MonomialIdeal {
            ring: ring.clone(),
            nvars: ring.len(),
            data,
        };
        debug_assert!(ideal.is_canonical());
        ideal
    }

    pub fn zero(ring: &RingSignature) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            nvars: ring.len(),
            data: Vec::new(),
        }
    }

    pub fn unit(ring: &RingSignature) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            nvars: ring.len(),
            data: vec![0; ring.len()],
        }
    }

    /// The prime generated by the listed variables.
    pub fn variables(ring: &RingSignature, vars: &[usize]) -> Self {
        let mut data = Vec::with_capacity(vars.len() * ring.len());
        for &v in vars {
            let mut row = vec![0; ring.len()];
            row[v] = 1;
            data.extend(row);
        }
        Self::from_flat(ring, data)
    }

    pub fn ring(&self) -> &RingSignature {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of minimal generators.
    pub fn len(&self) -> usize {
        self.data.len() / self.nvars
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.len() == 1 && self.data.iter().all(|&e| e == 0)
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Exponent rows of the minimal generators.
    pub fn rows(&self) -> std::slice::ChunksExact<'_, u32> {
        self.data.chunks_exact(self.nvars)
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.nvars..(i + 1) * self.nvars]
    }

    pub fn generators(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.rows()
            .map(move |r| Monomial::from_raw(&self.ring, r.to_vec()))
    }

    /// Coordinatewise maximum of the generators (the top of the lcm lattice).
    pub fn join_of_generators(&self) -> Vec<u32> {
        let mut top = vec![0; self.nvars];
        for r in self.rows() {
            for (t, &e) in top.iter_mut().zip(r) {
                *t = (*t).max(e);
            }
        }
        top
    }

    /// Sorted distinct exponents of variable `v` across the generators.
    pub fn distinct_exponents(&self, v: usize) -> Vec<u32> {
        let mut vals: Vec<u32> = self.rows().map(|r| r[v]).collect();
        vals.sort_unstable();
        vals.dedup();
        vals
    }

    pub(crate) fn contains_exps(&self, m: &[u32]) -> bool {
        self.rows().any(|g| monomial::divides(g, m))
    }

    fn check_ring(&self, m: &Monomial) -> Result<()> {
        if m.ring() != &self.ring {
            return Err(Error::RingMismatch(format!("{m} is not in {}", self.ring)));
        }
        Ok(())
    }

    /// Membership test: true iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_ring(m)?;
        Ok(self.contains_exps(m.exponents()))
    }

    /// True iff every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )));
        }
        Ok(other.rows().all(|g| self.contains_exps(g)))
    }

    /// `I * J`. Ideals over the same ring multiply there; ideals over
    /// variable-disjoint rings multiply in the concatenated tensor ring.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ring == other.ring {
            return self.product_same_ring(other);
        }
        if !self.ring.is_disjoint(&other.ring) {
            return Err(Error::SharedVariables(format!(
                "{} and {}; embed both into a common ring first",
                self.ring, other.ring
            )));
        }
        let ring = self.ring.concat(&other.ring)?;
        let (n1, n2) = (self.nvars, other.nvars);
        let mut data = Vec::with_capacity(self.len() * other.len() * (n1 + n2));
        for a in self.rows() {
            for b in other.rows() {
                data.extend_from_slice(a);
                data.extend_from_slice(b);
            }
        }
        // Products of minimal generators in disjoint variables are minimal.
        let mut rows: Vec<&[u32]> = data.chunks_exact(n1 + n2).collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        let data = rows.concat();
        Ok(MonomialIdeal::from_canonical(&ring, data))
    }

    fn product_same_ring(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let n = self.nvars;
        let mut data = Vec::with_capacity(self.len() * other.len() * n);
        for a in self.rows() {
            for b in other.rows() {
                for (&x, &y) in a.iter().zip(b) {
                    data.push(monomial::checked_add(x, y)?);
                }
            }
        }
        Ok(MonomialIdeal::from_flat(&self.ring, data))
    }

    /// `I^n` for `n >= 1`.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::InvalidArgument("powers start at n = 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product_same_ring(self)?;
        }
        Ok(acc)
    }

    /// `I^1, ..., I^max_n`, each computed from the previous one.
    pub fn powers(&self, max_n: u32) -> Result<Vec<MonomialIdeal>> {
        if max_n == 0 {
            return Err(Error::InvalidArgument("powers start at n = 1".into()));
        }
        let mut out = Vec::with_capacity(max_n as usize);
        out.push(self.clone());
        for _ in 1..max_n {
            let next = out.last().unwrap().product_same_ring(self)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )));
        }
        let mut data = Vec::with_capacity(self.len() * other.len() * self.nvars);
        for a in self.rows() {
            for b in other.rows() {
                data.extend(a.iter().zip(b).map(|(&x, &y)| x.max(y)));
            }
        }
        Ok(MonomialIdeal::from_flat(&self.ring, data))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MonomialIdeal::from_flat(&self.ring, data))
    }

    /// `I : m`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_ring(m)?;
        Ok(self.colon_exps(m.exponents()))
    }

    pub(crate) fn colon_exps(&self, m: &[u32]) -> MonomialIdeal {
        let data = self
            .rows()
            .flat_map(|g| g.iter().zip(m).map(|(&a, &b)| a.saturating_sub(b)))
            .collect();
        MonomialIdeal::from_flat(&self.ring, data)
    }

    /// For a monomial ideal, `v` lies in the radical iff a pure power of `v`
    /// is among the minimal generators.
    pub fn variable_in_radical(&self, var: &str) -> Result<bool> {
        let v = self.ring.require(var)?;
        Ok(self
            .rows()
            .any(|g| g.iter().enumerate().all(|(i, &e)| i == v || e == 0)))
    }

    /// Substitutes `drop -> keep` for each pair, removing the dropped
    /// variables from the ring. This is the image of `I` modulo the linear
    /// forms `keep - drop`.
    pub fn identify_variables(&self, pairs: &[(&str, &str)]) -> Result<MonomialIdeal> {
        let mut target: Vec<usize> = (0..self.nvars).collect();
        let mut dropped = vec![false; self.nvars];
        for &(keep, drop) in pairs {
            let k = self.ring.require(keep)?;
            let d = self.ring.require(drop)?;
            if k == d {
                return Err(Error::InvalidArgument(format!(
                    "cannot identify `{keep}` with itself"
                )));
            }
            if dropped[d] {
                return Err(Error::InvalidArgument(format!("`{drop}` is dropped twice")));
            }
            dropped[d] = true;
            target[d] = k;
        }
        for &(keep, _) in pairs {
            if dropped[self.ring.require(keep)?] {
                return Err(Error::InvalidArgument(format!(
                    "`{keep}` is both kept and dropped"
                )));
            }
        }
        let kept: Vec<usize> = (0..self.nvars).filter(|&i| !dropped[i]).collect();
        let ring = self.ring.restrict(&kept)?;
        let mut pos = vec![usize::MAX; self.nvars];
        for (p, &i) in kept.iter().enumerate() {
            pos[i] = p;
        }
        let m = kept.len();
        let mut data = Vec::with_capacity(self.len() * m);
        for g in self.rows() {
            let mut row = vec![0u32; m];
            for (i, &e) in g.iter().enumerate() {
                let p = pos[target[i]];
                row[p] = monomial::checked_add(row[p], e)?;
            }
            data.extend(row);
        }
        Ok(MonomialIdeal::from_flat(&ring, data))
    }

    /// The same ideal viewed in a ring containing all of this ring's variables.
    pub fn embed(&self, ring: &RingSignature) -> Result<MonomialIdeal> {
        let map: Vec<usize> = self
            .ring
            .variables()
            .iter()
            .map(|v| ring.require(v))
            .collect::<Result<_>>()?;
        let m = ring.len();
        let mut data = Vec::with_capacity(self.len() * m);
        for g in self.rows() {
            let mut row = vec![0u32; m];
            for (i, &e) in g.iter().enumerate() {
                row[map[i]] = e;
            }
            data.extend(row);
        }
        Ok(MonomialIdeal::from_flat(ring, data))
    }

    /// Renames the ring variables; the generators are unchanged.
    pub fn rename<F: Fn(&str) -> String>(&self, f: F) -> Result<MonomialIdeal> {
        let ring = self.ring.rename(f)?;
        Ok(MonomialIdeal {
            ring,
            nvars: self.nvars,
            data: self.data.clone(),
        })
    }

    /// Sets every variable outside `keep` to 1; the result lives in the ring
    /// on `keep` (ring order).
    pub fn localize(&self, keep: &[usize]) -> Result<MonomialIdeal> {
        if keep.is_empty() {
            return Err(Error::InvalidArgument(
                "localization needs a nonempty variable set".into(),
            ));
        }
        if let Some(&bad) = keep.iter().find(|&&i| i >= self.nvars) {
            return Err(Error::InvalidArgument(format!(
                "variable index {bad} out of range"
            )));
        }
        let ring = self.ring.restrict(keep)?;
        let idx: Vec<usize> = ring
            .variables()
            .iter()
            .map(|v| self.ring.index_of(v).unwrap())
            .collect();
        let data = self
            .rows()
            .flat_map(|g| idx.iter().map(move |&i| g[i]))
            .collect();
        Ok(MonomialIdeal::from_flat(&ring, data))
    }

    pub(crate) fn is_canonical(&self) -> bool {
        let rows: Vec<&[u32]> = self.rows().collect();
        rows.windows(2).all(|w| w[0] > w[1])
            && rows.iter().enumerate().all(|(i, a)| {
                rows.iter()
                    .enumerate()
                    .all(|(j, b)| i == j || !monomial::divides(a, b))
            })
    }
}

/// Minimal rows of a row-major exponent matrix, sorted descending.
pub(crate) fn minimal_rows(nvars: usize, data: Vec<u32>) -> Vec<u32> {
    if data.is_empty() {
        return data;
    }
    let mut rows: Vec<&[u32]> = data.chunks_exact(nvars).collect();
    rows.sort_unstable();
    rows.dedup();
    // Ascending total degree: a divisor always precedes its proper multiples.
    let mut keyed: Vec<(u64, u64, &[u32])> = rows
        .into_iter()
        .map(|r| (r.iter().map(|&e| e as u64).sum::<u64>(), support_mask(r), r))
        .collect();
    keyed.sort_by_key(|k| k.0);
    let mut kept: Vec<(u64, &[u32])> = Vec::new();
    for (_, mask, r) in keyed {
        let dominated = kept
            .iter()
            .any(|&(m, g)| m & !mask == 0 && monomial::divides(g, r));
        if !dominated {
            kept.push((mask, r));
        }
    }
    let mut out: Vec<&[u32]> = kept.into_iter().map(|(_, r)| r).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.concat()
}

#[inline]
pub(crate) fn support_mask(r: &[u32]) -> u64 {
    r.iter()
        .enumerate()
        .fold(0u64, |m, (i, &e)| if e > 0 { m | (1 << i) } else { m })
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self
            .rows()
            .map(|r| monomial::write_monomial(&self.ring, r, false))
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring)
    }
}
