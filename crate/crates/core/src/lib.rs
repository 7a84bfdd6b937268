//! Monomial ideals, their depth functions and associated primes, and a
//! synthesizer that builds a monomial ideal with a prescribed depth function.

pub mod ass;
pub mod betti;
pub mod cli;
pub mod config;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod local_cohomology;
pub mod monomial;
pub mod parse;
pub mod prime;
pub mod report;
pub mod ring;
pub mod selftest;
pub mod synth;

#[cfg(test)]
mod test_support;

pub use ass::{ass_primes, gamma_set, has_max_associated, predicted_ass_join, AssReport, GammaSet};
pub use betti::{betti_table, depth, depth_function, pd_function, BettiTable, DepthFunction};
pub use config::EngineConfig;
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use local_cohomology::{lc_depth, GluedIdeal};
pub use monomial::Monomial;
pub use parse::{format_ideal_file, parse_ideal_file};
pub use prime::MonomialPrime;
pub use ring::RingSignature;
pub use synth::{synthesize, verify, SynthesisCertificate, TargetFunction};
