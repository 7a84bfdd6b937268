use proptest::test_runner::{Config, RngAlgorithm, RngSeed};

/// Default seed for every randomized test; `MONODEPTH_SEED` overrides it.
pub const DEFAULT_SEED: u64 = 20_260_114;

pub fn seed() -> u64 {
    std::env::var("MONODEPTH_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn proptest_config(cases: u32) -> Config {
    Config {
        cases,
        rng_algorithm: RngAlgorithm::ChaCha,
        rng_seed: RngSeed::Fixed(seed()),
        failure_persistence: None,
        ..Config::default()
    }
}
