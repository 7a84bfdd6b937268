//! Built-in calibration and regression checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ass::has_max_associated;
use crate::betti::{self, gpw_betti};
use crate::config::EngineConfig;
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::lattice::{lcm_lattice, lcm_lattice_by_subsets};
use crate::local_cohomology::{lc_depth, GluedIdeal};
use crate::parse::parse_ideal_file;
use crate::ring::RingSignature;
use crate::synth::{join, spike_factor, type1_ideal, type2_ideal};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    /// Exit code class of the error that stopped the check, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_code: Option<i32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub characteristic: u64,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// 0 when everything passed, otherwise the code of the first error or 1.
    pub fn exit_code(&self) -> i32 {
        match self.checks.iter().find(|c| !c.pass) {
            None => 0,
            Some(c) => c.error_code.unwrap_or(1),
        }
    }
}

fn run(name: &str, f: impl FnOnce() -> Result<std::result::Result<String, String>>) -> Check {
    match f() {
        Ok(Ok(detail)) => Check {
            name: name.into(),
            pass: true,
            detail,
            error_code: None,
        },
        Ok(Err(detail)) => Check {
            name: name.into(),
            pass: false,
            detail,
            error_code: None,
        },
        Err(e) => Check {
            name: name.into(),
            pass: false,
            detail: e.to_string(),
            error_code: Some(e.exit_code()),
        },
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(x_1, ..., x_k)` in `k[x_1, ..., x_m]`.
pub fn variable_ideal(k: usize, m: usize) -> MonomialIdeal {
    let names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let ring = RingSignature::new(&names).expect("valid names");
    MonomialIdeal::variables(&ring, &(0..k).collect::<Vec<_>>())
}

/// The Betti table of `S/(x_1..x_k)` must be `binomial(k, i)` with depth `m - k`.
pub fn calibration(cfg: &EngineConfig) -> Result<std::result::Result<String, String>> {
    let mut cases = 0;
    for m in 1..=5 {
        for k in 1..=m {
            let i = variable_ideal(k, m);
            let t = betti::betti_table(&i, cfg)?;
            let want: Vec<usize> = (0..=k).map(|j| binomial(k, j)).collect();
            if t.totals() != want {
                return Ok(Err(format!(
                    "k = {k}, m = {m}: totals {:?}, expected {want:?}",
                    t.totals()
                )));
            }
            if betti::depth(&i, cfg)? as usize != m - k {
                return Ok(Err(format!("k = {k}, m = {m}: depth is not {}", m - k)));
            }
            cases += 1;
        }
    }
    Ok(Ok(format!("{cases} Koszul cases")))
}

/// Small ideals on which every oracle comparison runs.
pub fn oracle_corpus() -> Vec<MonomialIdeal> {
    [
        "ring x, y\nideal x, y",
        "ring x, y\nideal x^2, x y",
        "ring x, y\nideal x^2, x y, y^2",
        "ring x, y, z\nideal x^4, x^3 y, x y^3, y^4, x^2 y^2 z",
        "ring t, u, v\nideal t^3, t u v, u^2 v",
        "ring x, y, z\nideal x y, y z, x z",
    ]
    .iter()
    .map(|s| parse_ideal_file(s).expect("corpus parses"))
    .collect()
}

pub fn oracle_agreement(cfg: &EngineConfig) -> Result<std::result::Result<String, String>> {
    let mut entries = 0;
    for i in oracle_corpus() {
        let lattice = lcm_lattice(&i, cfg)?;
        if lattice.elements() != lcm_lattice_by_subsets(&i, 20)?.as_slice() {
            return Ok(Err(format!(
                "lcm lattice of {i} disagrees with subset joins"
            )));
        }
        let table = betti::betti_table_on(&lattice, cfg)?;
        for a in lattice.elements() {
            for (k, &v) in gpw_betti(&lattice, a, cfg)?.iter().enumerate() {
                if v != table.get(k, a) {
                    return Ok(Err(format!(
                        "{i}: beta_{k},{a:?} is {} but the interval gives {v}",
                        table.get(k, a)
                    )));
                }
                entries += 1;
            }
        }
    }
    Ok(Ok(format!("{entries} entries agree")))
}

fn depths(i: &MonomialIdeal, max_n: u32, cfg: &EngineConfig) -> Result<Vec<u32>> {
    Ok(betti::depth_function(i, max_n, cfg)?.values)
}

pub fn atom_tables(cfg: &EngineConfig) -> Result<std::result::Result<String, String>> {
    let cases: Vec<(&str, MonomialIdeal, Vec<u32>)> = vec![
        ("step d = 2", type1_ideal(2)?, vec![0, 1, 1, 1]),
        ("step d = 3", type1_ideal(3)?, vec![0, 0, 1, 1, 1]),
        ("spike factor d = 2", spike_factor(2)?, vec![1, 1, 0, 0]),
        ("spike d = 2", type2_ideal(2)?, vec![0, 1, 0, 0]),
    ];
    for (name, i, want) in cases {
        let got = depths(&i, want.len() as u32, cfg)?;
        if got != want {
            return Ok(Err(format!("{name}: {got:?}, expected {want:?}")));
        }
    }
    Ok(Ok("step, spike factor and spike tables reproduced".into()))
}

/// depth 0 iff a maximal-ideal witness exists, and local cohomology agrees with Betti numbers.
pub fn cross_engine(cfg: &EngineConfig) -> Result<std::result::Result<String, String>> {
    let mut count = 0;
    for i in oracle_corpus().into_iter().chain([type2_ideal(2)?]) {
        for n in 1..=3 {
            let q = i.power(n)?;
            let d = betti::depth(&q, cfg)?;
            if has_max_associated(&q).is_some() != (d == 0) {
                return Ok(Err(format!(
                    "{i} at n = {n}: depth {d} disagrees with the witness search"
                )));
            }
            if lc_depth(&q, cfg)? != d {
                return Ok(Err(format!(
                    "{i} at n = {n}: local cohomology disagrees with depth {d}"
                )));
            }
            count += 1;
        }
    }
    Ok(Ok(format!("{count} powers consistent")))
}

fn random_ideal(rng: &mut ChaCha8Rng, names: [&str; 2]) -> MonomialIdeal {
    let ring = RingSignature::new(&names).expect("valid names");
    loop {
        let k = rng.gen_range(1..=3);
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|_| {
                let a = rng.gen_range(0..=3);
                vec![a, rng.gen_range(0..=3 - a)]
            })
            .collect();
        let i = MonomialIdeal::from_exponents(&ring, &rows).expect("valid rows");
        if i.is_proper_nonzero() {
            return i;
        }
    }
}

/// Depth of a join equals the sum of component depths on a few random pairs.
pub fn additivity_sample(
    cfg: &EngineConfig,
    seed: u64,
) -> Result<std::result::Result<String, String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10 {
        let i = random_ideal(&mut rng, ["x", "y"]);
        let j = random_ideal(&mut rng, ["s", "t"]);
        let (q, _) = join(&i, &j)?;
        let glued = GluedIdeal::new(vec![i.clone(), j.clone()])?;
        for n in 1..=2 {
            let want = betti::depth(&i.power(n)?, cfg)? + betti::depth(&j.power(n)?, cfg)?;
            let got = betti::depth(&q.power(n)?, cfg)?;
            if got != want || glued.power(n)?.depth(cfg)? != want {
                return Ok(Err(format!(
                    "join of {i} and {j} at n = {n}: depth {got}, sum {want}"
                )));
            }
        }
    }
    Ok(Ok("10 random joins additive".into()))
}

pub fn run_selftest(cfg: &EngineConfig, seed: u64) -> Result<SelftestReport> {
    cfg.validate()?;
    let checks = vec![
        run("calibration", || calibration(cfg)),
        run("oracle agreement", || oracle_agreement(cfg)),
        run("atom depth tables", || atom_tables(cfg)),
        run("cross-engine consistency", || cross_engine(cfg)),
        run("additivity sample", || additivity_sample(cfg, seed)),
    ];
    Ok(SelftestReport {
        characteristic: cfg.characteristic,
        seed,
        checks,
    })
}
