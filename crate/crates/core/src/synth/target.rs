use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A convergent function `f(n) = prefix[n - 1]` for `n <= prefix.len()` and
/// `eventual` afterwards. Stored normalized: the prefix never ends with the
/// eventual value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct TargetFunction {
    prefix: Vec<u32>,
    eventual: u32,
}

impl TargetFunction {
    pub fn new(mut prefix: Vec<u32>, eventual: u32) -> Self {
        while prefix.last() == Some(&eventual) {
            prefix.pop();
        }
        TargetFunction { prefix, eventual }
    }

    pub fn prefix(&self) -> &[u32] {
        &self.prefix
    }

    pub fn eventual(&self) -> u32 {
        self.eventual
    }

    /// `f(n)` for `n >= 1`.
    pub fn value(&self, n: u32) -> u32 {
        match n.checked_sub(1) {
            Some(i) => self
                .prefix
                .get(i as usize)
                .copied()
                .unwrap_or(self.eventual),
            None => panic!("target functions are defined for n >= 1"),
        }
    }

    pub fn values(&self, max_n: u32) -> Vec<u32> {
        (1..=max_n).map(|n| self.value(n)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.eventual == 0 && self.prefix.is_empty()
    }

    pub fn max_value(&self) -> u32 {
        self.prefix
            .iter()
            .copied()
            .chain(std::iter::once(self.eventual))
            .max()
            .unwrap()
    }

    /// Smallest `n` from which the function is constant.
    pub fn stable_from(&self) -> u32 {
        self.prefix.len() as u32 + 1
    }
}

impl FromStr for TargetFunction {
    type Err = Error;

    /// `0,2,1,1*`: comma-separated values, the last marked `*` as the eventual value.
    fn from_str(s: &str) -> Result<Self> {
        let err = |column: usize, message: &str| Error::Parse {
            line: 1,
            column,
            message: message.into(),
        };
        let mut values = Vec::new();
        let mut eventual = None;
        let mut column = 1;
        let parts: Vec<&str> = s.split(',').collect();
        for (i, raw) in parts.iter().enumerate() {
            let lead = raw.len() - raw.trim_start().len();
            let item = raw.trim();
            let at = column + lead;
            if eventual.is_some() {
                return Err(err(at, "the starred value must come last"));
            }
            let (digits, starred) = match item.strip_suffix('*') {
                Some(d) => (d.trim_end(), true),
                None => (item, false),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(at, "expected a nonnegative integer"));
            }
            let v: u32 = digits.parse().map_err(|_| err(at, "value out of range"))?;
            if starred {
                eventual = Some(v);
            } else if i + 1 == parts.len() {
                return Err(err(at + item.len(), "the last value needs a `*` suffix"));
            } else {
                values.push(v);
            }
            column += raw.len() + 1;
        }
        Ok(TargetFunction::new(
            values,
            eventual.expect("loop ends on a starred value"),
        ))
    }
}

impl fmt::Display for TargetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.prefix {
            write!(f, "{v},")?;
        }
        write!(f, "{}*", self.eventual)
    }
}

impl From<TargetFunction> for String {
    fn from(t: TargetFunction) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for TargetFunction {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
