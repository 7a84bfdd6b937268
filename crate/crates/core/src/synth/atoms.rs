use serde::{Deserialize, Serialize};

use crate::betti;
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::parse::parse_ideal_file;

use super::target::TargetFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AtomKind {
    /// `0, ..., 0, 1, 1, ...` with the first 1 at `n = d`.
    TypeI,
    /// `0, ..., 0, 1, 0, 0, ...` with the 1 at `n = d`.
    TypeII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtomSpec {
    pub kind: AtomKind,
    pub d: u32,
    pub multiplicity: u32,
}

impl AtomSpec {
    /// Value of one copy of the atom at `n`.
    pub fn unit_value(&self, n: u32) -> u32 {
        match self.kind {
            AtomKind::TypeI => u32::from(n >= self.d),
            AtomKind::TypeII => u32::from(n == self.d),
        }
    }

    pub fn value(&self, n: u32) -> u32 {
        self.multiplicity * self.unit_value(n)
    }
}

/// Writes `f` as a sum of spikes at each prefix position (multiplicity
/// `f(i)`) plus `c` steps starting right after the prefix, `c` the eventual value.
pub fn decompose(f: &TargetFunction) -> Result<Vec<AtomSpec>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "the zero function has no atom decomposition; use the maximal ideal of k[x]".into(),
        ));
    }
    let mut atoms: Vec<AtomSpec> = f
        .prefix()
        .iter()
        .zip(1..)
        .filter(|(&c, _)| c > 0)
        .map(|(&c, i)| AtomSpec {
            kind: AtomKind::TypeII,
            d: i,
            multiplicity: c,
        })
        .collect();
    if f.eventual() > 0 {
        atoms.push(AtomSpec {
            kind: AtomKind::TypeI,
            d: f.stable_from(),
            multiplicity: f.eventual(),
        });
    }
    Ok(atoms)
}

fn ideal(src: &str) -> MonomialIdeal {
    parse_ideal_file(src).expect("atom families are well-formed")
}

/// Step ideal: depth 0 for `n < d` and 1 for `n >= d`.
/// `(x^{d+2}, x^{d+1} y, x y^{d+1}, y^{d+2}, x^d y^2 z)` for `d >= 2`, and `(x)` in `k[x, y]` for `d = 1`.
pub fn type1_ideal(d: u32) -> Result<MonomialIdeal> {
    match d {
        0 => Err(Error::InvalidArgument("atom positions start at 1".into())),
        1 => Ok(ideal("ring x, y\nideal x")),
        _ => Ok(ideal(&format!(
            "ring x, y, z\nideal x^{}, x^{} y, x y^{}, y^{}, x^{d} y^2 z",
            d + 2,
            d + 1,
            d + 1,
            d + 2
        ))),
    }
}

/// `(t^{d+1}, t u^{d-1} v, u^d v)`: depth 1 for `n <= d` and 0 afterwards.
pub fn spike_factor(d: u32) -> Result<MonomialIdeal> {
    if d == 0 {
        return Err(Error::InvalidArgument("atom positions start at 1".into()));
    }
    Ok(ideal(&format!(
        "ring t, u, v\nideal t^{}, t u^{} v, u^{d} v",
        d + 1,
        d - 1
    )))
}

/// Spike ideal for `d >= 2`: `type1_ideal(d) * spike_factor(d)` with `y = u`
/// and `z = v`, in `k[x, t, u, v]`. Checks that a pure power of `x` lies in the
/// step ideal and a pure power of `t` in the spike factor, so that the
/// remaining variables carry the identification.
pub fn type2_ideal(d: u32) -> Result<MonomialIdeal> {
    if d == 1 {
        return spike_factor(1);
    }
    let i = type1_ideal(d)?;
    let j = spike_factor(d)?;
    if !i.variable_in_radical("x")? {
        return Err(Error::Hypothesis(format!("x is not in the radical of {i}")));
    }
    if !j.variable_in_radical("t")? {
        return Err(Error::Hypothesis(format!("t is not in the radical of {j}")));
    }
    i.product(&j)?.identify_variables(&[("u", "y"), ("v", "z")])
}

/// Per-power hypothesis of the spike construction: for each `n <= max_n`
/// one of the two factors has positive depth at `n`.
pub fn check_type2_powers(d: u32, max_n: u32, cfg: &EngineConfig) -> Result<()> {
    if d < 2 {
        return Ok(());
    }
    let i = betti::depth_function(&type1_ideal(d)?, max_n, cfg)?;
    let j = betti::depth_function(&spike_factor(d)?, max_n, cfg)?;
    for n in 1..=max_n {
        if i.at(n) == Some(0) && j.at(n) == Some(0) {
            return Err(Error::Hypothesis(format!(
                "both factors of the spike at d = {d} have depth 0 at n = {n}"
            )));
        }
    }
    Ok(())
}

/// Bound up to which the `d = 1` spike candidate must verify.
pub const D1_SPIKE_CHECK: u32 = 6;

/// The `d = 1` spike: `spike_factor(1) = (t^2, t v, u v)` if it verifies
/// `1, 0, 0, ...` up to [`D1_SPIKE_CHECK`], else the first verifying
/// exponent perturbation `(t^a, t^b v, u^c v)`.
pub fn type2_d1(cfg: &EngineConfig) -> Result<MonomialIdeal> {
    let expected: Vec<u32> = (1..=D1_SPIKE_CHECK).map(|n| u32::from(n == 1)).collect();
    let mut candidates = vec![spike_factor(1)?];
    for a in 2..=4 {
        for b in 1..=2 {
            for c in 1..=2 {
                candidates.push(ideal(&format!(
                    "ring t, u, v\nideal t^{a}, t^{b} v, u^{c} v"
                )));
            }
        }
    }
    for cand in candidates {
        if betti::depth_function(&cand, D1_SPIKE_CHECK, cfg)?.values == expected {
            return Ok(cand);
        }
    }
    Err(Error::Hypothesis(
        "no d = 1 spike candidate verified".into(),
    ))
}

/// The maximal ideal of `k[x]`, whose depth function is identically 0.
pub fn zero_function_ideal() -> MonomialIdeal {
    ideal("ring x\nideal x")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TargetFunction {
        s.parse().unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let a = decompose(&t("0,2,1,1*")).unwrap();
        assert_eq!(
            a,
            vec![
                AtomSpec {
                    kind: AtomKind::TypeII,
                    d: 2,
                    multiplicity: 2
                },
                AtomSpec {
                    kind: AtomKind::TypeI,
                    d: 3,
                    multiplicity: 1
                },
            ]
        );
        assert_eq!(
            decompose(&t("1*")).unwrap(),
            vec![AtomSpec {
                kind: AtomKind::TypeI,
                d: 1,
                multiplicity: 1
            }]
        );
        assert_eq!(
            decompose(&t("0,0,1,0,0*")).unwrap(),
            vec![AtomSpec {
                kind: AtomKind::TypeII,
                d: 3,
                multiplicity: 1
            }]
        );
        assert!(decompose(&t("0*")).is_err());
    }

    #[test]
    fn families() {
        let same =
            |d: u32, src: &str| assert_eq!(type1_ideal(d).unwrap(), parse_ideal_file(src).unwrap());
        same(2, "ring x, y, z\nideal x^4, x^3 y, x y^3, y^4, x^2 y^2 z");
        same(3, "ring x, y, z\nideal x^5, x^4 y, x y^4, y^5, x^3 y^2 z");
        assert_eq!(type1_ideal(1).unwrap().to_string(), "(x)");
        assert!(type1_ideal(0).is_err());
        let q = type2_ideal(2).unwrap();
        assert_eq!(q.ring().variables(), &["x", "t", "u", "v"]);
        let i =
            parse_ideal_file("ring x, t, u, v\nideal x^4, x^3 u, x u^3, u^4, x^2 u^2 v").unwrap();
        let j = parse_ideal_file("ring x, t, u, v\nideal t^3, t u v, u^2 v").unwrap();
        assert_eq!(q, i.product(&j).unwrap());
        assert_eq!(type2_ideal(1).unwrap().to_string(), "(t^2, t v, u v)");
    }

    #[test]
    fn zero_function() {
        let z = zero_function_ideal();
        let cfg = EngineConfig::default();
        assert_eq!(
            betti::depth_function(&z, 3, &cfg).unwrap().values,
            vec![0, 0, 0]
        );
        assert_eq!(betti::pd_function(&z, 3, &cfg).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn d1_spike_candidate_verifies_without_fallback() {
        assert_eq!(
            type2_d1(&EngineConfig::default()).unwrap(),
            spike_factor(1).unwrap()
        );
        assert_eq!(
            type2_d1(&EngineConfig::with_characteristic(32003).unwrap()).unwrap(),
            spike_factor(1).unwrap()
        );
    }
}
