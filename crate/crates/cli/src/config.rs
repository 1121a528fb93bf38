//! Defaults and search bounds, gathered so every report can echo them.

use equicurve_core::arith::SquareConfig;
use equicurve_core::curves::{PARAM_SEARCH_BOUND, XI_RESCALE_BOUND};
use equicurve_core::projective::catalog::{LAMBDA_HEIGHT, LAMBDA_NF_COEFF};
use equicurve_core::ramify::C_SEARCH_BOUND;

/// Random instances drawn by the property-style checks of the suite.
pub const RANDOM_SYMBOL_INSTANCES: usize = 50;
pub const RANDOM_SPLIT_INSTANCES: usize = 200;
/// Height of the brute-force isotropy search.
pub const ISOTROPY_HEIGHT: i64 = 50;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub square: SquareConfig,
    /// Seeds the randomized property checks only.
    pub seed: u64,
    pub jobs: usize,
    /// Dev-only: read residue witnesses backwards, so the non-split check
    /// must fail.
    pub mutate_residue: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { square: SquareConfig::default(), seed: 0, jobs: 1, mutate_residue: false }
    }
}

impl RunConfig {
    /// `(key, value)` pairs printed as `CONFIG key value`.
    pub fn echo(&self) -> Vec<(String, String)> {
        let s = &self.square;
        let mut v: Vec<(&str, String)> = vec![
            ("witness_primes", s.witness_primes.to_string()),
            ("lift_bits", s.lift_bits.to_string()),
            ("max_sign_degree", s.max_sign_degree.to_string()),
            ("prime_cap", s.prime_cap.to_string()),
            ("c_search_bound", C_SEARCH_BOUND.to_string()),
            ("param_search_bound", PARAM_SEARCH_BOUND.to_string()),
            ("multiplier_bound", PARAM_SEARCH_BOUND.to_string()),
            ("xi_rescale_bound", XI_RESCALE_BOUND.to_string()),
            ("lambda_height", LAMBDA_HEIGHT.to_string()),
            ("lambda_nf_coeff", LAMBDA_NF_COEFF.to_string()),
            ("random_symbol_instances", RANDOM_SYMBOL_INSTANCES.to_string()),
            ("random_split_instances", RANDOM_SPLIT_INSTANCES.to_string()),
            ("isotropy_height", ISOTROPY_HEIGHT.to_string()),
            ("seed", self.seed.to_string()),
        ];
        if self.mutate_residue {
            v.push(("mutation", "residue-inverted".into()));
        }
        v.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }
}
