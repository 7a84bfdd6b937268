//! Monomials as exponent vectors over a [`RingSignature`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::RingSignature;

/// Largest exponent accepted anywhere in the crate.
pub const MAX_EXPONENT: u32 = i32::MAX as u32;

/// A monomial `x^a` with one nonnegative exponent per ring variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    ring: RingSignature,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(ring: &RingSignature, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != ring.len() {
            return Err(Error::RingMismatch(format!(
                "exponent vector of length {} in {ring}",
                exps.len()
            )));
        }
        if exps.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::Overflow {
                limit: MAX_EXPONENT,
            });
        }
        Ok(Monomial {
            ring: ring.clone(),
            exps,
        })
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables accumulate.
    pub fn from_pairs(ring: &RingSignature, pairs: &[(&str, u32)]) -> Result<Self> {
        let mut exps = vec![0u32; ring.len()];
        for &(v, e) in pairs {
            let i = ring.require(v)?;
            exps[i] = checked_add(exps[i], e)?;
        }
        Monomial::new(ring, exps)
    }

    pub fn one(ring: &RingSignature) -> Self {
        Monomial {
            ring: ring.clone(),
            exps: vec![0; ring.len()],
        }
    }

    pub fn var(ring: &RingSignature, name: &str) -> Result<Self> {
        Monomial::from_pairs(ring, &[(name, 1)])
    }

    pub(crate) fn from_raw(ring: &RingSignature, exps: Vec<u32>) -> Self {
        debug_assert_eq!(exps.len(), ring.len());
        Monomial {
            ring: ring.clone(),
            exps,
        }
    }

    pub fn ring(&self) -> &RingSignature {
        &self.ring
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exps
    }

    pub fn exponent(&self, var: &str) -> Result<u32> {
        Ok(self.exps[self.ring.require(var)?])
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    fn same_ring(&self, other: &Monomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.same_ring(other)?;
        Ok(divides(&self.exps, &other.exps))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        let exps = mul(&self.exps, &other.exps)?;
        Ok(Monomial {
            ring: self.ring.clone(),
            exps,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        Ok(Monomial {
            ring: self.ring.clone(),
            exps: lcm(&self.exps, &other.exps),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(Monomial {
            ring: self.ring.clone(),
            exps,
        })
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ring(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        Ok(Monomial {
            ring: self.ring.clone(),
            exps,
        })
    }

    /// Formats with explicit `^1` exponents, e.g. `x^1 y^2`.
    pub fn to_explicit_string(&self) -> String {
        write_monomial(&self.ring, &self.exps, true)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_monomial(&self.ring, &self.exps, false))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn write_monomial(ring: &RingSignature, exps: &[u32], explicit: bool) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 if !explicit => parts.push(ring.name(i).to_string()),
            _ => parts.push(format!("{}^{}", ring.name(i), e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

// Slice-level helpers shared by the engines.

#[inline]
pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[inline]
pub(crate) fn checked_add(a: u32, b: u32) -> Result<u32> {
    match a.checked_add(b) {
        Some(s) if s <= MAX_EXPONENT => Ok(s),
        _ => Err(Error::Overflow {
            limit: MAX_EXPONENT,
        }),
    }
}

pub(crate) fn mul(a: &[u32], b: &[u32]) -> Result<Vec<u32>> {
    a.iter().zip(b).map(|(&x, &y)| checked_add(x, y)).collect()
}

pub(crate) fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}
