#![allow(dead_code)]

use monodepth::{MonomialIdeal, RingSignature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20_260_114;

/// `MONODEPTH_SEED` if set, otherwise a fixed default.
pub fn seed() -> u64 {
    std::env::var("MONODEPTH_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed());
    r.set_stream(stream);
    r
}

/// A random proper nonzero ideal with at most `max_gens` generators of degree at most `max_deg`.
pub fn random_ideal(
    rng: &mut ChaCha8Rng,
    names: &[&str],
    max_gens: usize,
    max_deg: u32,
) -> MonomialIdeal {
    let ring = RingSignature::new(names).unwrap();
    loop {
        let k = rng.gen_range(1..=max_gens);
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|_| {
                let mut row = vec![0; names.len()];
                for _ in 0..rng.gen_range(1..=max_deg) {
                    row[rng.gen_range(0..names.len())] += 1;
                }
                row
            })
            .collect();
        let i = MonomialIdeal::from_exponents(&ring, &rows).unwrap();
        if i.is_proper_nonzero() {
            return i;
        }
    }
}

/// A pair on disjoint variables `x, y` and `s, t`, two variables each side.
pub fn random_pair(rng: &mut ChaCha8Rng) -> (MonomialIdeal, MonomialIdeal) {
    (
        random_ideal(rng, &["x", "y"], 3, 3),
        random_ideal(rng, &["s", "t"], 3, 3),
    )
}
