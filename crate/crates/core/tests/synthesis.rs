//! Decomposition, atom ideals and certificates.

mod common;

use monodepth::synth::{decompose, type1_ideal, type2_d1, type2_ideal};
use monodepth::{
    ass_primes, depth_function, has_max_associated, synthesize, verify, EngineConfig,
    TargetFunction,
};
use rand::Rng;

const CHARACTERISTICS: [u64; 2] = [2, 32003];

#[test]
fn decomposition_sums_to_the_target() {
    let mut rng = common::rng(5);
    let mut checked = 0;
    while checked < 200 {
        let len = rng.gen_range(0..6);
        let prefix: Vec<u32> = (0..len).map(|_| rng.gen_range(0..4)).collect();
        let f = TargetFunction::new(prefix, rng.gen_range(0..4));
        if f.is_zero() {
            assert!(decompose(&f).is_err());
            continue;
        }
        let atoms = decompose(&f).unwrap();
        for n in 1..=f.stable_from() + 3 {
            let sum: u32 = atoms.iter().map(|a| a.value(n)).sum();
            assert_eq!(sum, f.value(n), "{f} at n = {n}: {atoms:?}");
        }
        checked += 1;
    }
}

#[test]
fn atom_ideals_have_their_depth_functions() {
    for p in CHARACTERISTICS {
        let cfg = EngineConfig::with_characteristic(p).unwrap();
        for d in 1..=3 {
            let step: Vec<u32> = (1..=d + 2).map(|n| u32::from(n >= d)).collect();
            let spike: Vec<u32> = (1..=d + 2).map(|n| u32::from(n == d)).collect();
            assert_eq!(
                depth_function(&type1_ideal(d).unwrap(), d + 2, &cfg)
                    .unwrap()
                    .values,
                step,
                "step d = {d}"
            );
            let q = if d == 1 {
                type2_d1(&cfg).unwrap()
            } else {
                type2_ideal(d).unwrap()
            };
            assert_eq!(
                depth_function(&q, d + 2, &cfg).unwrap().values,
                spike,
                "spike d = {d}"
            );
            for n in 1..=d + 2 {
                let qn = q.power(n).unwrap();
                let maximal = ass_primes(&qn, &cfg).unwrap().contains_maximal();
                assert_eq!(maximal, has_max_associated(&qn).is_some());
                assert_eq!(
                    maximal,
                    spike[n as usize - 1] == 0,
                    "spike d = {d}, n = {n}"
                );
            }
        }
    }
}

#[test]
fn certificates_are_deterministic_and_replay() {
    let cfg = EngineConfig::default();
    for s in ["0,1*", "2,0*", "1,0,1*"] {
        let f: TargetFunction = s.parse().unwrap();
        let a = synthesize(&f, f.stable_from() + 1, &cfg).unwrap();
        let b = synthesize(&f, f.stable_from() + 1, &cfg).unwrap();
        assert_eq!(a.to_json(), b.to_json(), "{s}");
        let report = verify(&a, a.verified_to + 1, &cfg).unwrap();
        assert!(report.all_pass, "{s}: {:?}", report.rows);
        assert!(report.rows.last().unwrap().fresh);
    }
}

#[test]
fn certificates_replay_in_another_characteristic() {
    let f: TargetFunction = "1,2*".parse().unwrap();
    let cert = synthesize(&f, 3, &EngineConfig::default()).unwrap();
    let report = verify(&cert, 3, &EngineConfig::with_characteristic(32003).unwrap()).unwrap();
    assert!(report.all_pass);
    assert_eq!(report.characteristic, 32003);
}
