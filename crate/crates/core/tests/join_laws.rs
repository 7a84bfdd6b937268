//! Depth and associated primes under joins of ideals in disjoint variables.

mod common;

use monodepth::synth::join;
use monodepth::{ass_primes, depth, predicted_ass_join, EngineConfig, GluedIdeal};
use rand::Rng;

#[test]
fn join_adds_depth_functions() {
    let cfg = EngineConfig::default();
    let mut rng = common::rng(2);
    for _ in 0..60 {
        let (i, j) = common::random_pair(&mut rng);
        let (q, _) = join(&i, &j).unwrap();
        let glued = GluedIdeal::new(vec![i.clone(), j.clone()]).unwrap();
        for n in 1..=3 {
            let want = depth(&i.power(n).unwrap(), &cfg).unwrap()
                + depth(&j.power(n).unwrap(), &cfg).unwrap();
            assert_eq!(
                depth(&q.power(n).unwrap(), &cfg).unwrap(),
                want,
                "{i} and {j} at n = {n}"
            );
            assert_eq!(
                glued.power(n).unwrap().depth(&cfg).unwrap(),
                want,
                "glued {i} and {j} at n = {n}"
            );
        }
    }
}

#[test]
fn product_in_disjoint_variables_adds_depth_plus_one() {
    let cfg = EngineConfig::default();
    let mut rng = common::rng(3);
    for _ in 0..60 {
        let (i, j) = common::random_pair(&mut rng);
        let ring = i.ring().concat(j.ring()).unwrap();
        let ij = i
            .embed(&ring)
            .unwrap()
            .product(&j.embed(&ring).unwrap())
            .unwrap();
        let want = depth(&i, &cfg).unwrap() + depth(&j, &cfg).unwrap() + 1;
        assert_eq!(depth(&ij, &cfg).unwrap(), want, "{i} and {j}");
    }
}

#[test]
fn predicted_associated_primes_of_a_join() {
    let cfg = EngineConfig::default();
    let mut rng = common::rng(4);
    for _ in 0..120 {
        let (i, j) = common::random_pair(&mut rng);
        let x = ["x", "y"][rng.gen_range(0..2)];
        let y = ["s", "t"][rng.gen_range(0..2)];
        let predicted = predicted_ass_join(&i, &j, x, y, &cfg).unwrap();
        let ring = i.ring().concat(j.ring()).unwrap();
        let q = i
            .embed(&ring)
            .unwrap()
            .product(&j.embed(&ring).unwrap())
            .unwrap();
        let direct = ass_primes(&q.identify_variables(&[(x, y)]).unwrap(), &cfg).unwrap();
        assert_eq!(direct.primes, predicted, "{i} and {j} along {x} = {y}");
    }
}
