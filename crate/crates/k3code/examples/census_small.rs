//! The classification machinery on a small ground set, cross-checked
//! against exhaustive enumeration over the full symmetric group.
//!
//! Run with: cargo run --release --example census_small

use k3code::census::{self, run_census};

fn main() {
    for (n, wt) in [
        (5usize, vec![0u32, 2, 3, 5]),
        (6, vec![0, 2, 4, 6]),
        (6, vec![0, 3, 6]),
    ] {
        let census = run_census(n, &wt, n).unwrap();
        println!("n = {n}, weights {wt:?}:");
        println!("  classes by dimension: {:?}", census.counts());
        for entry in census.entries() {
            let basis: Vec<String> = entry
                .std_basis
                .words
                .iter()
                .map(|&w| {
                    (0..n)
                        .map(|i| if w >> i & 1 == 1 { '1' } else { '0' })
                        .collect()
                })
                .collect();
            println!("  dim {}: {:?}  omega {:?}", entry.dim, basis, entry.omega.0);
        }
        // The independent oracle: every code containing the all-ones word,
        // canonicalized under all n! permutations.
        let truth = census::oracle::classify(n, &wt);
        let ours = census::oracle::canonicalize_census(&census);
        assert_eq!(truth, ours);
        println!("  matches the exhaustive oracle");
    }
}
