use std::fmt;

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::ring::RingSignature;

/// A prime generated by a subset of the ring variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ring: RingSignature,
    support: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(ring: &RingSignature, mut support: Vec<usize>) -> Self {
        support.sort_unstable();
        support.dedup();
        assert!(
            support.iter().all(|&i| i < ring.len()),
            "support index out of range"
        );
        MonomialPrime {
            ring: ring.clone(),
            support,
        }
    }

    pub fn from_names(ring: &RingSignature, names: &[&str]) -> Result<Self> {
        let support = names
            .iter()
            .map(|n| ring.require(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialPrime::new(ring, support))
    }

    pub fn maximal(ring: &RingSignature) -> Self {
        MonomialPrime {
            ring: ring.clone(),
            support: (0..ring.len()).collect(),
        }
    }

    pub fn ring(&self) -> &RingSignature {
        &self.ring
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn names(&self) -> Vec<String> {
        self.support
            .iter()
            .map(|&i| self.ring.name(i).to_string())
            .collect()
    }

    pub fn is_maximal(&self) -> bool {
        self.support.len() == self.ring.len()
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.support.binary_search(&v).is_ok()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::variables(&self.ring, &self.support)
    }

    /// A monomial ideal lies in this prime iff every generator involves a
    /// variable of the prime.
    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal.rows().all(|g| self.support.iter().any(|&v| g[v] > 0))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.support
            .cmp(&other.support)
            .then_with(|| self.ring.variables().cmp(other.ring.variables()))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names().join(", "))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
