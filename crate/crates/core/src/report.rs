//! Per-power depth reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::betti;
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice;
use crate::local_cohomology::GluedIdeal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub n: u32,
    pub depth: u32,
    pub pd_ideal: i64,
    #[serde(rename = "char")]
    pub characteristic: u64,
    /// Zero when the depth came from the glued local-cohomology route.
    pub lattice_size: usize,
    pub wall_ms: u64,
}

fn entry(
    n: u32,
    depth: u32,
    nvars: usize,
    cfg: &EngineConfig,
    lattice_size: usize,
    start: Instant,
) -> ReportEntry {
    ReportEntry {
        n,
        depth,
        pd_ideal: nvars as i64 - depth as i64 - 1,
        characteristic: cfg.characteristic,
        lattice_size,
        wall_ms: start.elapsed().as_millis() as u64,
    }
}

/// Betti-route depth of `I^n` for `n = 1..N`.
pub fn depth_report(
    ideal: &MonomialIdeal,
    max_n: u32,
    cfg: &EngineConfig,
) -> Result<Vec<ReportEntry>> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::Precondition(
            "the ideal must be nonzero and proper".into(),
        ));
    }
    let mut out = Vec::new();
    let mut power = ideal.clone();
    for n in 1..=max_n {
        let start = Instant::now();
        if n > 1 {
            power = power.product(ideal).map_err(|e| e.at_power(n))?;
        }
        let table = betti::betti_table(&power, cfg).map_err(|e| e.at_power(n))?;
        let depth = (ideal.nvars() - table.projective_dimension()) as u32;
        out.push(entry(
            n,
            depth,
            ideal.nvars(),
            cfg,
            table.lattice_size,
            start,
        ));
    }
    Ok(out)
}

/// Generator bound under which a glued power is also expanded and checked on the Betti route.
pub const CROSS_CHECK_GENERATORS: u128 = 700;

/// Depth of `Q^n` for a glued `Q`. One component goes through the Betti
/// route. Several go through local cohomology, and small powers are
/// expanded and cross-checked on the Betti route as well.
pub fn glued_entry(ideal: &GluedIdeal, n: u32, cfg: &EngineConfig) -> Result<ReportEntry> {
    let start = Instant::now();
    let power = ideal.power(n).map_err(|e| e.at_power(n))?;
    let nvars = ideal.nvars();
    if power.components().len() == 1 {
        let table = betti::betti_table(&power.components()[0], cfg).map_err(|e| e.at_power(n))?;
        let depth = (nvars - table.projective_dimension()) as u32;
        return Ok(entry(n, depth, nvars, cfg, table.lattice_size, start));
    }
    let depth = power.depth(cfg).map_err(|e| e.at_power(n))?;
    if power.generator_bound() <= CROSS_CHECK_GENERATORS {
        let flat = power.flatten()?;
        if lattice::grid_size(&flat) <= cfg.grid_budget {
            let table = betti::betti_table(&flat, cfg).map_err(|e| e.at_power(n))?;
            let other = (nvars - table.projective_dimension()) as u32;
            if other != depth {
                return Err(Error::Invariant(format!(
                    "at n = {n} local cohomology gives depth {depth} but Betti numbers give {other}"
                )));
            }
            return Ok(entry(n, depth, nvars, cfg, table.lattice_size, start));
        }
    }
    Ok(entry(n, depth, nvars, cfg, 0, start))
}
