//! Fixtures shared by the benchmarks.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tucker_core::{canonicalize, parse_mps, CanonicalLp, Tableau};

pub fn netlib_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/netlib")
}

/// Canonical form of a bundled netlib problem, e.g. `"afiro"`.
pub fn netlib(name: &str) -> CanonicalLp {
    let path = netlib_dir().join(format!("{name}.mps"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    canonicalize(&parse_mps(&text).expect("bundled file parses")).expect("bundled file canonicalizes")
}

/// Dense tableau with entries uniform in `[-1, 1]`.
pub fn random_tableau(m: usize, n: usize, seed: u64) -> Tableau {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |k: usize| -> Vec<f64> { (0..k).map(|_| rng.random_range(-1.0..1.0)).collect() };
    let alpha = (0..m).map(|_| draw(n)).collect();
    let beta = draw(m);
    let gamma = draw(n);
    Tableau::from_parts(alpha, beta, gamma, 0.0).expect("shapes agree")
}
