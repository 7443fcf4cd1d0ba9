use num_bigint::BigInt;

/// Reads one integer per line from a fixture under `tests/fixtures`.
pub fn fixture(name: &str) -> Vec<BigInt> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.trim().parse().expect("integer fixture line"))
        .collect()
}
