use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient characteristic and resource limits shared by all engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    /// Prime characteristic of the coefficient field.
    pub characteristic: u64,
    /// Maximum number of lcm-lattice grid candidates.
    pub grid_budget: u128,
    /// Maximum number of vertices of a complex whose homology is computed.
    pub vertex_budget: usize,
    /// Maximum number of ring variables for subset enumeration (associated primes).
    pub var_budget: usize,
    /// Maximum number of degree cells enumerated by the local-cohomology route.
    pub cell_budget: u128,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            characteristic: 2,
            grid_budget: 10_000_000,
            vertex_budget: 20,
            var_budget: 16,
            cell_budget: 50_000_000,
        }
    }
}

impl EngineConfig {
    pub fn with_characteristic(p: u64) -> Result<Self> {
        let cfg = EngineConfig {
            characteristic: p,
            ..Default::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.characteristic) {
            return Err(Error::InvalidArgument(format!(
                "characteristic {} is not prime",
                self.characteristic
            )));
        }
        if self.characteristic > u32::MAX as u64 {
            return Err(Error::InvalidArgument(
                "characteristic must fit in 32 bits".into(),
            ));
        }
        if self.grid_budget == 0
            || self.vertex_budget == 0
            || self.var_budget == 0
            || self.cell_budget == 0
        {
            return Err(Error::InvalidArgument("budgets must be positive".into()));
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(32003) && !is_prime(1) && !is_prime(32001));
        assert!(EngineConfig::with_characteristic(4).is_err());
        assert!(EngineConfig::with_characteristic(32003).is_ok());
    }
}
