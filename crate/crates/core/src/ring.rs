//! Polynomial ring signatures: an ordered list of distinct variable names.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
struct RingInner {
    vars: Vec<String>,
    index: HashMap<String, usize>,
}

/// The ordered variables of a polynomial ring `k[x_1, ..., x_m]`.
///
/// Cloning is cheap (shared storage). Two signatures are equal when their
/// variable lists are equal, in order.
#[derive(Clone)]
pub struct RingSignature(Arc<RingInner>);

impl RingSignature {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        let mut index = HashMap::with_capacity(vars.len());
        let mut names = Vec::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            let v = v.as_ref();
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!(
                    "`{v}` is not a valid variable name"
                )));
            }
            if index.insert(v.to_string(), i).is_some() {
                return Err(Error::InvalidRing(format!("variable `{v}` listed twice")));
            }
            names.push(v.to_string());
        }
        if names.len() > 64 {
            return Err(Error::InvalidRing(
                "at most 64 variables are supported".into(),
            ));
        }
        Ok(RingSignature(Arc::new(RingInner { vars: names, index })))
    }

    pub fn len(&self) -> usize {
        self.0.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.vars.is_empty()
    }

    pub fn variables(&self) -> &[String] {
        &self.0.vars
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn index_of(&self, var: &str) -> Option<usize> {
        self.0.index.get(var).copied()
    }

    pub fn require(&self, var: &str) -> Result<usize> {
        self.index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))
    }

    pub fn contains(&self, var: &str) -> bool {
        self.0.index.contains_key(var)
    }

    /// True when no variable name occurs in both rings.
    pub fn is_disjoint(&self, other: &RingSignature) -> bool {
        self.variables().iter().all(|v| !other.contains(v))
    }

    /// The tensor ring: variables of `self` followed by those of `other`.
    pub fn concat(&self, other: &RingSignature) -> Result<RingSignature> {
        if !self.is_disjoint(other) {
            return Err(Error::SharedVariables(format!("{self} and {other}")));
        }
        let vars: Vec<&str> = self
            .variables()
            .iter()
            .chain(other.variables())
            .map(String::as_str)
            .collect();
        RingSignature::new(&vars)
    }

    /// The ring on the variables whose indices are listed, in ring order.
    pub fn restrict(&self, keep: &[usize]) -> Result<RingSignature> {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let vars: Vec<&str> = keep.iter().map(|&i| self.name(i)).collect();
        RingSignature::new(&vars)
    }

    /// Renames variables through `f`; the result must still have distinct names.
    pub fn rename<F: Fn(&str) -> String>(&self, f: F) -> Result<RingSignature> {
        let vars: Vec<String> = self.variables().iter().map(|v| f(v)).collect();
        RingSignature::new(&vars)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl PartialEq for RingSignature {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.vars == other.0.vars
    }
}

impl Eq for RingSignature {}

impl std::hash::Hash for RingSignature {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.vars.hash(state);
    }
}

impl fmt::Display for RingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[{}]", self.0.vars.join(","))
    }
}

impl fmt::Debug for RingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
