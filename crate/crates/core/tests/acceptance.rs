//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use monodepth::selftest::{calibration, oracle_agreement};
use monodepth::synth::{join, spike_factor, type1_ideal, type2_ideal};
use monodepth::{
    ass_primes, depth, has_max_associated, predicted_ass_join, synthesize, EngineConfig,
    MonomialIdeal, Result, TargetFunction,
};
use rand::Rng;

const PAIRS_ADDITIVITY: usize = 50;
const PAIRS_ASS: usize = 100;

/// Every computed power goes through here so that depth 0 can be compared
/// with the maximal-ideal witness search.
#[derive(Default)]
struct Tally {
    powers: usize,
    discrepancies: Vec<String>,
}

impl Tally {
    fn depth(&mut self, q: &MonomialIdeal, cfg: &EngineConfig) -> Result<u32> {
        let d = depth(q, cfg)?;
        self.record(d == 0, has_max_associated(q).is_some(), || q.to_string());
        Ok(d)
    }

    fn record(&mut self, depth_zero: bool, witness: bool, what: impl FnOnce() -> String) {
        self.powers += 1;
        if depth_zero != witness {
            self.discrepancies.push(what());
        }
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn table(
    tally: &mut Tally,
    name: &str,
    ideal: &MonomialIdeal,
    expected: &[u32],
    per_power: Duration,
    cfg: &EngineConfig,
) -> Result<std::result::Result<String, String>> {
    let mut got = Vec::new();
    let mut slowest = Duration::ZERO;
    let mut q = ideal.clone();
    for n in 1..=expected.len() {
        if n > 1 {
            q = q.product(ideal)?;
        }
        let t = Instant::now();
        got.push(tally.depth(&q, cfg)?);
        slowest = slowest.max(t.elapsed());
    }
    if got != expected {
        return Ok(Err(format!("{name}: {got:?}, expected {expected:?}")));
    }
    if slowest > per_power {
        return Ok(Err(format!("{name}: slowest power took {slowest:?}")));
    }
    Ok(Ok(format!("{name} {got:?} (slowest power {slowest:.2?})")))
}

fn step_tables(tally: &mut Tally, cfg: &EngineConfig) -> Result<Outcome> {
    let mut details = Vec::new();
    for d in [2u32, 3] {
        let expected: Vec<u32> = (1..=d + 2).map(|n| u32::from(n >= d)).collect();
        match table(
            tally,
            &format!("d = {d}"),
            &type1_ideal(d)?,
            &expected,
            Duration::from_secs(60),
            cfg,
        )? {
            Ok(s) => details.push(s),
            Err(s) => return Ok(outcome(false, s)),
        }
    }
    Ok(outcome(true, details.join("; ")))
}

fn spike_factor_tables(tally: &mut Tally, cfg: &EngineConfig) -> Result<Outcome> {
    let mut details = Vec::new();
    for d in [2u32, 3] {
        let expected: Vec<u32> = (1..=d + 3).map(|n| u32::from(n <= d)).collect();
        match table(
            tally,
            &format!("d = {d}"),
            &spike_factor(d)?,
            &expected,
            Duration::from_secs(60),
            cfg,
        )? {
            Ok(s) => details.push(s),
            Err(s) => return Ok(outcome(false, s)),
        }
    }
    Ok(outcome(true, details.join("; ")))
}

fn spike_table(tally: &mut Tally, cfg: &EngineConfig) -> Result<Outcome> {
    let t = Instant::now();
    let r = table(
        tally,
        "d = 2",
        &type2_ideal(2)?,
        &[0, 1, 0, 0],
        Duration::from_secs(300),
        cfg,
    )?;
    Ok(match r {
        Ok(s) if t.elapsed() <= Duration::from_secs(300) => {
            outcome(true, format!("{s}, total {:.2?}", t.elapsed()))
        }
        Ok(s) => outcome(false, format!("{s}, total {:.2?} over 5 min", t.elapsed())),
        Err(s) => outcome(false, s),
    })
}

fn additivity(tally: &mut Tally, cfg: &EngineConfig) -> Result<Outcome> {
    let mut rng = common::rng(10);
    let mut failures = Vec::new();
    for _ in 0..PAIRS_ADDITIVITY {
        let (i, j) = common::random_pair(&mut rng);
        let (q, _) = join(&i, &j)?;
        for n in 1..=3 {
            let want = tally.depth(&i.power(n)?, cfg)? + tally.depth(&j.power(n)?, cfg)?;
            let got = tally.depth(&q.power(n)?, cfg)?;
            if got != want {
                failures.push(format!("{i} and {j} at n = {n}: {got} vs {want}"));
            }
        }
    }
    Ok(outcome(
        failures.is_empty(),
        format!(
            "{PAIRS_ADDITIVITY} pairs x 3 powers, {} failures {failures:?}",
            failures.len()
        ),
    ))
}

fn disjoint_products(tally: &mut Tally, cfg: &EngineConfig) -> Result<Outcome> {
    // Same stream as the additivity corpus.
    let mut rng = common::rng(10);
    let mut failures = Vec::new();
    for _ in 0..PAIRS_ADDITIVITY {
        let (i, j) = common::random_pair(&mut rng);
        let ring = i.ring().concat(j.ring())?;
        let (ie, je) = (i.embed(&ring)?, j.embed(&ring)?);
        let ij = ie.product(&je)?;
        if ie.intersect(&je)? != ij {
            failures.push(format!("{i} cap {j} is not the product"));
        }
        let want = tally.depth(&i, cfg)? + tally.depth(&j, cfg)? + 1;
        let got = tally.depth(&ij, cfg)?;
        if got != want {
            failures.push(format!("depth of {i} times {j}: {got} vs {want}"));
        }
    }
    Ok(outcome(
        failures.is_empty(),
        format!(
            "{PAIRS_ADDITIVITY} pairs, {} failures {failures:?}",
            failures.len()
        ),
    ))
}

fn predicted_ass(cfg: &EngineConfig) -> Result<Outcome> {
    let mut rng = common::rng(11);
    let mut failures = Vec::new();
    for _ in 0..PAIRS_ASS {
        let (i, j) = common::random_pair(&mut rng);
        let x = ["x", "y"][rng.gen_range(0..2)];
        let y = ["s", "t"][rng.gen_range(0..2)];
        let predicted = predicted_ass_join(&i, &j, x, y, cfg)?;
        let ring = i.ring().concat(j.ring())?;
        let q = i
            .embed(&ring)?
            .product(&j.embed(&ring)?)?
            .identify_variables(&[(x, y)])?;
        if ass_primes(&q, cfg)?.primes != predicted {
            failures.push(format!("{i} and {j} along {x} = {y}"));
        }
    }
    Ok(outcome(
        failures.is_empty(),
        format!(
            "{PAIRS_ASS} pairs, {} failures {failures:?}",
            failures.len()
        ),
    ))
}

fn calibration_gate(cfg: &EngineConfig) -> Result<Outcome> {
    let t = Instant::now();
    let a = calibration(cfg)?;
    let b = oracle_agreement(cfg)?;
    let elapsed = t.elapsed();
    Ok(match (a, b) {
        (Ok(a), Ok(b)) => outcome(
            elapsed <= Duration::from_secs(30),
            format!("{a}; {b}; {elapsed:.2?}"),
        ),
        (Err(e), _) | (_, Err(e)) => outcome(false, e),
    })
}

fn end_to_end(tally: &mut Tally, cfg: &EngineConfig) -> Result<Outcome> {
    let limit = Duration::from_secs(600);
    type Case = (&'static str, u32, Vec<u32>, Option<Vec<u32>>);
    let cases: [Case; 3] = [
        ("0,2,1,1*", 4, vec![0, 2, 1, 1], None),
        ("0,1,0,0*", 4, vec![0, 1, 0, 0], None),
        ("0,1,0,1*", 6, vec![0, 1, 0, 1, 1, 1], Some(vec![1, 3])),
    ];
    let mut details = Vec::new();
    let mut pass = true;
    for (target, max_n, want, gamma) in cases {
        let f: TargetFunction = target.parse()?;
        let t = Instant::now();
        let cert = synthesize(&f, max_n, cfg)?;
        let elapsed = t.elapsed();
        for (k, &d) in cert.depths.iter().enumerate() {
            let n = k as u32 + 1;
            tally.record(d == 0, cert.gamma.contains(&n), || {
                format!("{target} at n = {n}")
            });
        }
        let ok = cert.depths == want
            && gamma.as_ref().is_none_or(|g| &cert.gamma == g)
            && elapsed <= limit;
        pass &= ok;
        details.push(format!(
            "{target}: {:?} Gamma {:?} in {elapsed:.2?}",
            cert.depths, cert.gamma
        ));
    }
    Ok(outcome(pass, details.join("; ")))
}

fn main() {
    let cfg = EngineConfig::default();
    let mut tally = Tally::default();
    println!("acceptance run, seed {}", common::seed());
    let mut all = true;
    let mut report = |k: u32, name: &str, r: Result<Outcome>| {
        let o = r.unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        all &= o.pass;
        println!(
            "{} {k}. {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    };
    report(1, "step ideal depth tables", step_tables(&mut tally, &cfg));
    report(
        2,
        "spike factor depth tables",
        spike_factor_tables(&mut tally, &cfg),
    );
    report(
        3,
        "assembled spike depth table",
        spike_table(&mut tally, &cfg),
    );
    report(4, "additivity of joins", additivity(&mut tally, &cfg));
    report(5, "disjoint products", disjoint_products(&mut tally, &cfg));
    report(
        6,
        "predicted associated primes of joins",
        predicted_ass(&cfg),
    );
    report(
        7,
        "calibration and oracle agreement",
        calibration_gate(&cfg),
    );
    report(8, "end-to-end synthesis", end_to_end(&mut tally, &cfg));
    let t = &tally;
    let o = outcome(
        t.discrepancies.is_empty(),
        format!(
            "{} powers, {} discrepancies {:?}",
            t.powers,
            t.discrepancies.len(),
            t.discrepancies
        ),
    );
    report(9, "depth zero iff maximal-ideal witness", Ok(o));
    if !all {
        std::process::exit(1);
    }
}
