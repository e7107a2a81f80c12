//! The full classification on 21 points with the admissible weight set
//! {0,5,8,9,12,13,16,21}: 192 classes, counted by Artin invariant
//! σ = 11 − dim as 1, 3, 13, 41, 58, 43, 21, 8, 3, 1.
//!
//! This is the long run (several minutes).
//!
//! Run with: cargo run --release --example census_full

use std::time::Instant;

use k3code::census::run_census;

fn main() {
    let t = Instant::now();
    let wt = [0u32, 5, 8, 9, 12, 13, 16, 21];
    let census = run_census(21, &wt, 10).unwrap();
    println!("done in {:.1?}", t.elapsed());
    println!("classes by dimension 1..10: {:?}", census.counts());
    let mut by_sigma = [0usize; 11];
    for e in census.entries() {
        by_sigma[e.invariants.sigma as usize] += 1;
    }
    println!("classes by Artin invariant 1..10: {:?}", &by_sigma[1..]);
    println!("total: {}", census.total());

    // Every class is pinned down by its invariant tuple.
    let mut tuples: Vec<[u64; 9]> = census.entries().map(|e| e.invariants.tuple()).collect();
    tuples.sort();
    tuples.dedup();
    println!("distinct invariant tuples: {}", tuples.len());

    // A few of the extreme classes.
    for e in census.entries() {
        if e.invariants.sigma == 1 || e.invariants.sigma == 10 {
            let i = &e.invariants;
            println!(
                "sigma {}: (l,q,e,tl,lq,qq,tq1,tq2) = ({},{},{},{},{},{},{},{})",
                i.sigma, i.l, i.q, i.e, i.tl, i.lq, i.qq, i.tq1, i.tq2
            );
        }
    }
}
