//! Builds a monomial ideal whose depth function is a prescribed convergent
//! function, and checks the result.
//!
//! The target is split into steps and spikes, one ideal is instantiated per
//! atom copy, and the ideals are folded with [`join`]: the rings are made
//! disjoint, the ideals multiplied, and the two first variables identified.
//! Depth functions add under this join.

pub mod atoms;
pub mod target;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use atoms::{
    check_type2_powers, decompose, spike_factor, type1_ideal, type2_d1, type2_ideal,
    zero_function_ideal, AtomKind, AtomSpec,
};
pub use target::TargetFunction;

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::local_cohomology::GluedIdeal;
use crate::parse::{format_ideal_file, parse_ideal_file};
use crate::report::{glued_entry, ReportEntry};

/// One fold step: the accumulated ring, the incoming ring after renaming,
/// the renames applied to the incoming ideal, and the `(keep, drop)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinStep {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub renamed: Vec<(String, String)>,
    pub identified: (String, String),
}

/// Renames the variables of `q` that collide with `taken` to `name2`, `name3`, ...
fn rename_apart(
    q: &MonomialIdeal,
    taken: &[String],
) -> Result<(MonomialIdeal, Vec<(String, String)>)> {
    let mut used: BTreeSet<String> = taken.iter().cloned().collect();
    used.extend(q.ring().variables().iter().cloned());
    let mut renamed = Vec::new();
    for v in q.ring().variables() {
        if taken.contains(v) {
            let fresh = (2u32..)
                .map(|k| format!("{v}{k}"))
                .find(|c| !used.contains(c))
                .expect("unbounded suffixes");
            used.insert(fresh.clone());
            renamed.push((v.clone(), fresh));
        }
    }
    let out = q.rename(|v| {
        renamed
            .iter()
            .find(|(old, _)| old == v)
            .map_or_else(|| v.to_string(), |(_, new)| new.clone())
    })?;
    Ok((out, renamed))
}

/// `(Q1 Q2, x - y)/(x - y)` for the first variables `x` of `Q1` and `y` of `Q2`,
/// after renaming `Q2` apart from `Q1`.
pub fn join(q1: &MonomialIdeal, q2: &MonomialIdeal) -> Result<(MonomialIdeal, JoinStep)> {
    if !q1.is_proper_nonzero() || !q2.is_proper_nonzero() {
        return Err(Error::Precondition(
            "join needs nonzero proper ideals".into(),
        ));
    }
    let (q2, renamed) = rename_apart(q2, q1.ring().variables())?;
    let keep = q1.ring().name(0).to_string();
    let drop = q2.ring().name(0).to_string();
    let joined = q1.product(&q2)?.identify_variables(&[(&keep, &drop)])?;
    let step = JoinStep {
        left: q1.ring().variables().to_vec(),
        right: q2.ring().variables().to_vec(),
        renamed,
        identified: (keep, drop),
    };
    Ok((joined, step))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomRecord {
    #[serde(flatten)]
    pub spec: AtomSpec,
    /// Accepted because the engine verified it, not because of a proof.
    pub empirical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynthesisCertificate {
    pub target: TargetFunction,
    pub atoms: Vec<AtomRecord>,
    /// The ideal in the text ideal format.
    pub ideal: String,
    pub variables: usize,
    pub trace: Vec<JoinStep>,
    pub verified_to: u32,
    pub characteristics: Vec<u64>,
    /// Computed `depth S/Q^n` for `n = 1..verified_to`.
    pub depths: Vec<u32>,
    /// Computed `{n <= verified_to : m in Ass(Q^n)}`.
    pub gamma: Vec<u32>,
    /// `pd Q^n = dim S - depth S/Q^n - 1` for `n = 1..verified_to`.
    pub pd_ideal: Vec<i64>,
    /// `dim S - max f - 1`.
    pub pd_constant: i64,
    /// Value claimed for `n > verified_to` from the atom guarantees.
    pub claimed_eventual: u32,
}

impl SynthesisCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: format!("certificate: {e}"),
        })
    }

    pub fn parsed_ideal(&self) -> Result<MonomialIdeal> {
        parse_ideal_file(&self.ideal)
    }

    pub fn d1_empirical(&self) -> bool {
        self.atoms.iter().any(|a| a.empirical)
    }
}

/// The instantiated construction before verification.
#[derive(Debug, Clone)]
pub struct Assembly {
    pub atoms: Vec<AtomRecord>,
    pub ideal: MonomialIdeal,
    pub glued: GluedIdeal,
    pub trace: Vec<JoinStep>,
}

/// Instantiates one ideal per atom copy and folds them with [`join`].
pub fn assemble(atoms: &[AtomRecord], max_n: u32, cfg: &EngineConfig) -> Result<Assembly> {
    if atoms.is_empty() {
        let z = zero_function_ideal();
        return Ok(Assembly {
            atoms: Vec::new(),
            glued: GluedIdeal::single(z.clone()),
            ideal: z,
            trace: Vec::new(),
        });
    }
    let mut d1_spike: Option<MonomialIdeal> = None;
    let mut copies = Vec::new();
    for a in atoms {
        if a.spec.multiplicity == 0 || a.spec.d == 0 {
            return Err(Error::InvalidArgument(format!(
                "malformed atom {:?}",
                a.spec
            )));
        }
        let q = match (a.spec.kind, a.spec.d) {
            (AtomKind::TypeI, d) => type1_ideal(d)?,
            (AtomKind::TypeII, 1) => match &d1_spike {
                Some(q) => q.clone(),
                None => {
                    let q = type2_d1(cfg)?;
                    d1_spike = Some(q.clone());
                    q
                }
            },
            (AtomKind::TypeII, d) => {
                check_type2_powers(d, max_n, cfg)?;
                type2_ideal(d)?
            }
        };
        for _ in 0..a.spec.multiplicity {
            copies.push(q.clone());
        }
    }
    let mut acc = copies[0].clone();
    let mut components = vec![acc.clone()];
    let mut trace = Vec::new();
    for q in &copies[1..] {
        let (joined, step) = join(&acc, q)?;
        let (renamed, _) = rename_apart(q, acc.ring().variables())?;
        components.push(renamed);
        acc = joined;
        trace.push(step);
    }
    let glued = GluedIdeal::new(components)?;
    if glued.ring() != acc.ring() || glued.flatten()? != acc {
        return Err(Error::Invariant(
            "glued components do not multiply out to the joined ideal".into(),
        ));
    }
    Ok(Assembly {
        atoms: atoms.to_vec(),
        ideal: acc,
        glued,
        trace,
    })
}

fn atom_records(f: &TargetFunction) -> Result<Vec<AtomRecord>> {
    if f.is_zero() {
        return Ok(Vec::new());
    }
    Ok(decompose(f)?
        .into_iter()
        .map(|spec| AtomRecord {
            spec,
            empirical: spec.kind == AtomKind::TypeII && spec.d == 1,
        })
        .collect())
}

fn atoms_sum(atoms: &[AtomRecord], n: u32) -> u32 {
    atoms.iter().map(|a| a.spec.value(n)).sum()
}

/// Checks `sum of atoms = f` up to `max_n` and on the stable range.
fn check_decomposition(f: &TargetFunction, atoms: &[AtomRecord], max_n: u32) -> Result<()> {
    let last = atoms.iter().map(|a| a.spec.d).max().unwrap_or(0);
    let horizon = max_n.max(f.stable_from()).max(last) + 1;
    for n in 1..=horizon {
        if atoms_sum(atoms, n) != f.value(n) {
            return Err(Error::ReplayMismatch(format!(
                "atoms sum to {} at n = {n}, target is {}",
                atoms_sum(atoms, n),
                f.value(n)
            )));
        }
    }
    Ok(())
}

/// Depth and witness check of one power; a depth/witness disagreement is an invariant breach.
fn check_power(glued: &GluedIdeal, n: u32, cfg: &EngineConfig) -> Result<(ReportEntry, bool)> {
    let entry = glued_entry(glued, n, cfg)?;
    let witness = glued.power(n)?.max_associated_witness().is_some();
    if witness != (entry.depth == 0) {
        return Err(Error::Invariant(format!(
            "at n = {n} depth is {} but a maximal-ideal witness was {}found",
            entry.depth,
            if witness { "" } else { "not " }
        )));
    }
    Ok((entry, witness))
}

/// Result of a synthesis run. `Partial` carries a certificate verified up to
/// the power before a resource budget ran out.
#[derive(Debug, Clone)]
pub enum SynthesisOutcome {
    Verified(SynthesisCertificate),
    Partial {
        certificate: SynthesisCertificate,
        error: Error,
    },
}

pub fn synthesize_outcome(
    f: &TargetFunction,
    max_n: u32,
    cfg: &EngineConfig,
) -> Result<SynthesisOutcome> {
    cfg.validate()?;
    if max_n < f.stable_from() {
        return Err(Error::InvalidArgument(format!(
            "verification bound {max_n} must reach the stable range starting at n = {}",
            f.stable_from()
        )));
    }
    let atoms = atom_records(f)?;
    check_decomposition(f, &atoms, max_n)?;
    let asm = assemble(&atoms, max_n, cfg)?;
    let dim = asm.ideal.nvars() as i64;
    let mut cert = SynthesisCertificate {
        target: f.clone(),
        atoms,
        ideal: format_ideal_file(&asm.ideal),
        variables: asm.ideal.nvars(),
        trace: asm.trace.clone(),
        verified_to: 0,
        characteristics: vec![cfg.characteristic],
        depths: Vec::new(),
        gamma: Vec::new(),
        pd_ideal: Vec::new(),
        pd_constant: dim - f.max_value() as i64 - 1,
        claimed_eventual: f.eventual(),
    };
    for n in 1..=max_n {
        let (entry, in_gamma) = match check_power(&asm.glued, n, cfg) {
            Ok(r) => r,
            Err(error) if error.exit_code() == 3 => {
                return Ok(SynthesisOutcome::Partial {
                    certificate: cert,
                    error,
                })
            }
            Err(e) => return Err(e),
        };
        if entry.depth != f.value(n) {
            return Err(Error::VerificationMismatch {
                n,
                expected: f.value(n),
                computed: entry.depth,
            });
        }
        cert.depths.push(entry.depth);
        cert.pd_ideal.push(entry.pd_ideal);
        if in_gamma {
            cert.gamma.push(n);
        }
        cert.verified_to = n;
    }
    Ok(SynthesisOutcome::Verified(cert))
}

/// Decomposes, instantiates, joins and verifies `depth S/Q^n = f(n)` for `n <= N`.
pub fn synthesize(
    f: &TargetFunction,
    max_n: u32,
    cfg: &EngineConfig,
) -> Result<SynthesisCertificate> {
    match synthesize_outcome(f, max_n, cfg)? {
        SynthesisOutcome::Verified(c) => Ok(c),
        SynthesisOutcome::Partial { error, .. } => Err(error),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub n: u32,
    pub expected: u32,
    pub computed: u32,
    pub pass: bool,
    pub in_gamma: bool,
    /// Beyond the certificate's verified range.
    pub fresh: bool,
    pub entry: ReportEntry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub target: TargetFunction,
    pub characteristic: u64,
    pub rows: Vec<VerifyRow>,
    pub gamma: Vec<u32>,
    pub all_pass: bool,
}

/// Replays the construction recorded in `cert` and recomputes the depth
/// function and the Γ-set up to `max_n`.
pub fn verify(cert: &SynthesisCertificate, max_n: u32, cfg: &EngineConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    if max_n == 0 {
        return Err(Error::InvalidArgument("powers start at n = 1".into()));
    }
    check_decomposition(&cert.target, &cert.atoms, max_n)?;
    if atom_records(&cert.target)? != cert.atoms {
        return Err(Error::ReplayMismatch(
            "atom list differs from the decomposition of the target".into(),
        ));
    }
    let asm = assemble(&cert.atoms, max_n.max(cert.verified_to), cfg)?;
    if asm.trace != cert.trace {
        return Err(Error::ReplayMismatch(
            "join trace differs from the replayed construction".into(),
        ));
    }
    let recorded = cert
        .parsed_ideal()
        .map_err(|e| Error::ReplayMismatch(format!("recorded ideal does not parse: {e}")))?;
    if recorded != asm.ideal {
        return Err(Error::ReplayMismatch(
            "recorded ideal differs from the replayed construction".into(),
        ));
    }
    let mut rows = Vec::new();
    let mut gamma = Vec::new();
    for n in 1..=max_n {
        let (entry, in_gamma) = check_power(&asm.glued, n, cfg)?;
        let expected = cert.target.value(n);
        if in_gamma {
            gamma.push(n);
        }
        rows.push(VerifyRow {
            n,
            expected,
            computed: entry.depth,
            pass: entry.depth == expected,
            in_gamma,
            fresh: n > cert.verified_to,
            entry,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(VerifyReport {
        target: cert.target.clone(),
        characteristic: cfg.characteristic,
        rows,
        gamma,
        all_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal_file;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal_file(s).unwrap()
    }

    #[test]
    fn join_of_principal_ideals() {
        let (q, step) = join(&ideal("ring x, y\nideal x"), &ideal("ring t, u\nideal t")).unwrap();
        assert_eq!(format_ideal_file(&q), "ring x, y, u\nideal x^2\n");
        assert!(step.renamed.is_empty());
        assert_eq!(step.identified, ("x".to_string(), "t".to_string()));
    }

    #[test]
    fn join_renames_on_collision() {
        let (q, step) = join(&ideal("ring x, y\nideal x"), &ideal("ring x, y\nideal x")).unwrap();
        assert_eq!(q.ring().variables(), &["x", "y", "y2"]);
        assert_eq!(
            step.renamed,
            vec![("x".into(), "x2".into()), ("y".into(), "y2".into())]
        );
        assert_eq!(q.to_string(), "(x^2)");
        assert!(matches!(
            join(&ideal("ring x\nideal 1"), &ideal("ring t\nideal t")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn constant_one() {
        let c = synthesize(&"1*".parse().unwrap(), 3, &cfg()).unwrap();
        assert_eq!(c.ideal, "ring x, y\nideal x\n");
        assert_eq!(c.depths, vec![1, 1, 1]);
        assert!(c.gamma.is_empty());
    }

    #[test]
    fn zero_function() {
        let c = synthesize(&"0*".parse().unwrap(), 3, &cfg()).unwrap();
        assert_eq!(c.ideal, "ring x\nideal x\n");
        assert_eq!(c.gamma, vec![1, 2, 3]);
        assert_eq!(c.pd_ideal, vec![0, 0, 0]);
    }

    #[test]
    fn bound_must_reach_the_stable_range() {
        assert!(synthesize(&"0,1,0*".parse().unwrap(), 2, &cfg()).is_err());
    }

    #[test]
    fn certificate_round_trip_and_tamper() {
        let c = synthesize(&"1,0*".parse().unwrap(), 3, &cfg()).unwrap();
        assert!(c.d1_empirical());
        let back = SynthesisCertificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert!(verify(&back, 4, &cfg()).unwrap().all_pass);
        let mut bad = c.clone();
        bad.ideal = bad.ideal.replace("t^2", "t^3");
        assert!(matches!(
            verify(&bad, 3, &cfg()),
            Err(Error::ReplayMismatch(_))
        ));
    }
}
