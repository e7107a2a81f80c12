//! Isomorph-free enumeration of the Sₙ-equivalence classes of codes in
//! Pow(Z) that contain the all-ones word and whose word weights lie in a
//! prescribed set WT.
//!
//! Classes are represented by standard bases: linearly independent,
//! Sₙ-increasing word sequences starting with the all-ones word, with all
//! later words of weight ≤ n/2.  Equivalence is decided by the fingerprint
//! ω of a sequence — the weights of all iterated intersections — since two
//! sequences are related by a coordinate permutation exactly when their
//! fingerprints agree.  Levels are built dimension by dimension: every
//! class at level k+1 arises by extending some level-k standard basis with
//! one more word, and duplicates are removed with a fingerprint-matching
//! backtracking search.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::splitcode::{config_invariants_of_words, weight, ConfigInvariants, Word};

/// An ordered list of words (A₀, …, A_{k−1}) with A₀ the all-ones word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSeq {
    pub n: usize,
    pub words: Vec<Word>,
}

impl WordSeq {
    pub fn new(n: usize, words: Vec<Word>) -> Self {
        WordSeq { n, words }
    }

    pub fn all_ones(n: usize) -> Word {
        if n == 32 {
            u32::MAX
        } else {
            (1 << n) - 1
        }
    }
}

/// The fingerprint ω: weights of the iterated-intersection sequence ω̃,
/// of length 2^k.  ω̃ of (A₀) is (Z, A₀); appending a word intersects the
/// whole sequence with it and concatenates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPrint(pub Vec<u32>);

fn omega_tilde(seq: &[Word], all_ones: Word) -> Vec<Word> {
    let mut out = vec![all_ones];
    for &a in seq {
        for j in 0..out.len() {
            out.push(out[j] & a);
        }
    }
    out
}

pub fn omega_print(seq: &WordSeq) -> OmegaPrint {
    let t = omega_tilde(&seq.words, WordSeq::all_ones(seq.n));
    OmegaPrint(t.into_iter().map(weight).collect())
}

/// Big-endian column values must be non-decreasing left to right: the bit
/// of the first word is the most significant.
pub fn is_sn_increasing(seq: &WordSeq) -> bool {
    let col_cmp = |j1: usize, j2: usize| -> std::cmp::Ordering {
        for w in &seq.words {
            let (b1, b2) = (w >> j1 & 1, w >> j2 & 1);
            if b1 != b2 {
                return b1.cmp(&b2);
            }
        }
        std::cmp::Ordering::Equal
    };
    (0..seq.n.saturating_sub(1)).all(|j| col_cmp(j, j + 1) != std::cmp::Ordering::Greater)
}

/// Sorted span of a sequence of words (all 2^k combinations when the
/// sequence is independent).
pub fn span_words(seq: &[Word]) -> Vec<Word> {
    let mut words = vec![0u32];
    for &a in seq {
        let prev = words.clone();
        words.extend(prev.into_iter().map(|w| w ^ a));
    }
    words.sort_unstable();
    words.dedup();
    words
}

fn weight_enumerator(words: &[Word], n: usize) -> Vec<u64> {
    let mut we = vec![0u64; n + 1];
    for &w in words {
        we[weight(w) as usize] += 1;
    }
    we
}

/// Span words bucketed by weight, so the fingerprint search only scans
/// words of the required weight at each position.
fn bucket_by_weight(span: &[Word], n: usize) -> Vec<Vec<Word>> {
    let mut buckets = vec![Vec::new(); n + 1];
    for &w in span {
        buckets[weight(w) as usize].push(w);
    }
    buckets
}

/// Backtracking search for a sequence of span words whose fingerprint is
/// `target`; words are tried in ascending mask order.  `k` is the sequence
/// length (target has length 2^k).
fn find_omega_match(buckets: &[Vec<Word>], target: &[u32], k: usize, all_ones: Word) -> bool {
    fn dfs(buckets: &[Vec<Word>], target: &[u32], tilde: &mut Vec<Word>, m: usize, k: usize) -> bool {
        if m == k {
            return true;
        }
        let base = 1usize << m;
        let Some(bucket) = buckets.get(target[base] as usize) else {
            return false;
        };
        'words: for &w in bucket {
            for j in 1..base {
                if (tilde[j] & w).count_ones() != target[base + j] {
                    continue 'words;
                }
            }
            let len = tilde.len();
            for j in 0..len {
                let t = tilde[j] & w;
                tilde.push(t);
            }
            if dfs(buckets, target, tilde, m + 1, k) {
                return true;
            }
            tilde.truncate(len);
        }
        false
    }
    if target[0] != all_ones.count_ones() {
        return false;
    }
    let mut tilde = vec![all_ones];
    dfs(buckets, target, &mut tilde, 0, k)
}

/// A permutation-invariant hash of a code: for every word, its weight and
/// the histogram of its intersection sizes with all words.  Used only to
/// group candidates before the exact equivalence search.
fn profile_hash(words: &[Word]) -> u64 {
    const FNV: u64 = 0x100000001b3;
    let mut sigs: Vec<u64> = words
        .iter()
        .map(|&w| {
            let mut hist = [0u16; 33];
            for &v in words {
                hist[(w & v).count_ones() as usize] += 1;
            }
            let mut h = 0xcbf29ce484222325u64 ^ weight(w) as u64;
            for c in hist {
                h = (h ^ c as u64).wrapping_mul(FNV);
            }
            h
        })
        .collect();
    sigs.sort_unstable();
    sigs.into_iter()
        .fold(0x9e3779b97f4a7c15u64, |acc, s| (acc ^ s).wrapping_mul(FNV))
}

/// Searches for words of the bucketed span realizing the fingerprint of
/// the generating sequence `gens`.  Any ordering of a generating sequence
/// certifies the same equivalence, so the words are first reordered with
/// the scarcest target weights up front, which multiplies the pruning.
fn spans_match(n: usize, gens: &[Word], buckets: &[Vec<Word>]) -> bool {
    let mut order: Vec<Word> = gens.to_vec();
    order.sort_by_key(|&w| buckets.get(weight(w) as usize).map_or(0, Vec::len));
    let omega = omega_print(&WordSeq::new(n, order.clone()));
    find_omega_match(buckets, &omega.0, order.len(), WordSeq::all_ones(n))
}

/// Decides Sₙ-equivalence of the codes spanned by two sequences: dimension,
/// then weight enumerator, then the fingerprint-matching search.
pub fn equivalent(a: &WordSeq, b: &WordSeq) -> bool {
    assert_eq!(a.n, b.n);
    let span_a = span_words(&a.words);
    let span_b = span_words(&b.words);
    if span_a.len() != span_b.len() {
        return false;
    }
    if weight_enumerator(&span_a, a.n) != weight_enumerator(&span_b, b.n) {
        return false;
    }
    let buckets = bucket_by_weight(&span_b, b.n);
    spans_match(a.n, &a.words, &buckets)
}

// ---------------------------------------------------------------------------
// Classes and levels
// ---------------------------------------------------------------------------

/// One Sₙ-equivalence class, held by a standard basis.
#[derive(Clone, Debug)]
pub struct ClassEntry {
    pub std_basis: WordSeq,
    pub dim: usize,
    /// All 2^dim words of the code, sorted.
    pub words: Vec<Word>,
    pub weight_enumerator: Vec<u64>,
    pub omega: OmegaPrint,
    pub invariants: ConfigInvariants,
    /// Span words bucketed by weight (search acceleration).
    buckets: Vec<Vec<Word>>,
}

impl ClassEntry {
    fn from_basis(n: usize, basis: Vec<Word>) -> ClassEntry {
        let seq = WordSeq::new(n, basis);
        let words = span_words(&seq.words);
        let we = weight_enumerator(&words, n);
        let omega = omega_print(&seq);
        let dim = seq.words.len();
        let invariants = config_invariants_of_words(&words, dim);
        let buckets = bucket_by_weight(&words, n);
        ClassEntry {
            std_basis: seq,
            dim,
            words,
            weight_enumerator: we,
            omega,
            invariants,
            buckets,
        }
    }

    /// The level-1 class: the code {0, Z}.
    pub fn root(n: usize) -> ClassEntry {
        ClassEntry::from_basis(n, vec![WordSeq::all_ones(n)])
    }
}

/// Decides [a] ≤ [b]: a's fingerprint must be realized by words of b.
pub fn class_leq(a: &ClassEntry, b: &ClassEntry) -> bool {
    if a.dim > b.dim {
        return false;
    }
    spans_match(a.std_basis.n, &a.std_basis.words, &b.buckets)
}

/// Column blocks of an Sₙ-increasing basis: maximal runs of equal columns,
/// as (start, len).
fn column_blocks(basis: &[Word], n: usize) -> Vec<(usize, usize)> {
    let col = |j: usize| -> u32 {
        let mut p = 0;
        for (r, &w) in basis.iter().enumerate() {
            p |= ((w >> j) & 1) << r;
        }
        p
    };
    let mut blocks = Vec::new();
    let mut start = 0;
    let mut cur = col(0);
    for j in 1..n {
        let c = col(j);
        if c != cur {
            blocks.push((start, j - start));
            start = j;
            cur = c;
        }
    }
    blocks.push((start, n - start));
    blocks
}

/// All admissible one-word extensions of a standard basis, in ascending
/// mask order.
///
/// Because the basis columns are sorted, an Sₙ-increasing new row is
/// determined by how many ones it places in each column block (the ones go
/// to the block's tail), so candidates are enumerated as weight
/// compositions over blocks.  A composition survives when, for every word
/// B of the span, |B + A| is a nonzero member of WT; the intersection
/// |B ∩ A| is read off the per-block counts.
fn extensions(parent: &ClassEntry, n: usize, wt: &[u32]) -> Vec<Word> {
    debug_assert!(is_sn_increasing(&parent.std_basis));
    let blocks = column_blocks(&parent.std_basis.words, n);
    let nb = blocks.len();
    let max_w = (n / 2) as u32;
    // Bitmask over the possible final weights of the new word.
    let mut allowed0: u32 = 0;
    for &w in wt {
        if w >= 1 && w <= max_w {
            allowed0 |= 1 << w;
        }
    }
    if allowed0 == 0 {
        return Vec::new();
    }
    let wt_mask: u64 = wt.iter().fold(0u64, |m, &w| m | (1u64 << w));

    // Per nonzero span word B: weight and the set of blocks it covers.
    // The word's constraint |B + A| ∈ WT \ {0} becomes a restriction on
    // the final weight of A as soon as the last block of B is decided.
    let mut info: Vec<(u32, u32)> = Vec::new();
    for &b in &parent.words {
        if b == 0 {
            continue;
        }
        let mut cover = 0u32;
        for (bi, &(s, _)) in blocks.iter().enumerate() {
            if b >> s & 1 == 1 {
                cover |= 1 << bi;
            }
        }
        info.push((weight(b), cover));
    }
    let mut containing: Vec<Vec<u32>> = vec![Vec::new(); nb];
    let mut ending: Vec<Vec<u32>> = vec![Vec::new(); nb];
    for (i, &(_, cover)) in info.iter().enumerate() {
        ending[(31 - cover.leading_zeros()) as usize].push(i as u32);
        let mut c = cover;
        while c != 0 {
            containing[c.trailing_zeros() as usize].push(i as u32);
            c &= c - 1;
        }
    }
    // Capacity of the blocks after position j.
    let mut cap_after = vec![0u32; nb + 1];
    for j in (0..nb).rev() {
        cap_after[j] = cap_after[j + 1] + blocks[j].1 as u32;
    }

    struct Dfs<'a> {
        blocks: &'a [(usize, usize)],
        info: &'a [(u32, u32)],
        containing: &'a [Vec<u32>],
        ending: &'a [Vec<u32>],
        cap_after: &'a [u32],
        wt_mask: u64,
        counts: Vec<u32>,
        inter: Vec<u32>,
        out: Vec<Word>,
    }

    fn rec(st: &mut Dfs, j: usize, total: u32, allowed: u32) {
        if j == st.blocks.len() {
            if allowed >> total & 1 == 1 {
                let mut mask: Word = 0;
                for (i, &(s, len)) in st.blocks.iter().enumerate() {
                    for b in 0..st.counts[i] as usize {
                        mask |= 1 << (s + len - 1 - b);
                    }
                }
                st.out.push(mask);
            }
            return;
        }
        let cap = st.blocks[j].1 as u32;
        for c in 0..=cap {
            let nt = total + c;
            // Final weights still reachable from here.
            let hi = nt + st.cap_after[j + 1];
            let hi_mask = if hi >= 31 { !0 } else { (1u32 << (hi + 1)) - 1 };
            let mut al = allowed & (!0u32 << nt) & hi_mask;
            if c > 0 {
                for &i in &st.containing[j] {
                    st.inter[i as usize] += c;
                }
            }
            if al != 0 {
                st.counts[j] = c;
                for &i in &st.ending[j] {
                    let (bw, _) = st.info[i as usize];
                    let inter = st.inter[i as usize];
                    let mut keep = 0u32;
                    let mut bits = al;
                    while bits != 0 {
                        let w = bits.trailing_zeros();
                        bits &= bits - 1;
                        let t = bw as i64 + w as i64 - 2 * inter as i64;
                        if t > 0 && (st.wt_mask >> t) & 1 == 1 {
                            keep |= 1 << w;
                        }
                    }
                    al &= keep;
                    if al == 0 {
                        break;
                    }
                }
                if al != 0 {
                    rec(st, j + 1, nt, al);
                }
                st.counts[j] = 0;
            }
            if c > 0 {
                for &i in &st.containing[j] {
                    st.inter[i as usize] -= c;
                }
            }
        }
    }

    let mut st = Dfs {
        blocks: &blocks,
        info: &info,
        containing: &containing,
        ending: &ending,
        cap_after: &cap_after,
        wt_mask,
        counts: vec![0; nb],
        inter: vec![0; info.len()],
        out: Vec::new(),
    };
    rec(&mut st, 0, 0, allowed0);
    let mut out = st.out;
    out.sort_unstable();
    out
}

/// Produces the complete duplicate-free list of classes at level k+1 from
/// the complete list at level k.
pub fn extend_level(level: &[ClassEntry], n: usize, wt: &[u32]) -> Vec<ClassEntry> {
    // Candidate generation is independent per parent.
    let t0 = std::time::Instant::now();
    let candidate_sets: Vec<(usize, Vec<Word>)> = level
        .par_iter()
        .enumerate()
        .map(|(pi, parent)| (pi, extensions(parent, n, wt)))
        .collect();
    let n_cand: usize = candidate_sets.iter().map(|(_, c)| c.len()).sum();
    eprintln!(
        "level {} -> {}: {} candidates in {:?}",
        level.first().map_or(0, |e| e.dim),
        level.first().map_or(0, |e| e.dim) + 1,
        n_cand,
        t0.elapsed()
    );
    let t1 = std::time::Instant::now();

    // Span and profile hashes per candidate, still parallel over parents.
    let prepared: Vec<(usize, Vec<(Word, u64)>)> = candidate_sets
        .into_par_iter()
        .map(|(pi, cands)| {
            let hashed = cands
                .into_iter()
                .map(|mask| {
                    let mut basis = level[pi].std_basis.words.clone();
                    basis.push(mask);
                    (mask, profile_hash(&span_words(&basis)))
                })
                .collect();
            (pi, hashed)
        })
        .collect();

    // Sequential, deterministic dedup in (parent, mask) order.  Candidates
    // are grouped by the permutation-invariant profile hash; the exact
    // fingerprint search runs only inside a group.
    let all_ones = WordSeq::all_ones(n);
    let mut out: Vec<ClassEntry> = Vec::new();
    let mut groups: HashMap<u64, Vec<usize>> = HashMap::new();
    // Fingerprints already confirmed per class: equal fingerprints mean a
    // permutation maps sequence to sequence, so repeats skip the search.
    let mut known: Vec<std::collections::HashSet<Vec<u32>>> = Vec::new();
    for (pi, cands) in prepared {
        for (mask, key) in cands {
            let mut basis = level[pi].std_basis.words.clone();
            basis.push(mask);
            let mut duplicate = false;
            if let Some(members) = groups.get(&key) {
                let omega = omega_print(&WordSeq::new(n, basis.clone()));
                for &mi in members {
                    if known[mi].contains(&omega.0) {
                        duplicate = true;
                        break;
                    }
                }
                if !duplicate {
                    for &mi in members {
                        if spans_match(n, &basis, &out[mi].buckets) {
                            known[mi].insert(omega.0.clone());
                            duplicate = true;
                            break;
                        }
                    }
                }
            }
            if !duplicate {
                let entry = ClassEntry::from_basis(n, basis);
                groups.entry(key).or_default().push(out.len());
                known.push([entry.omega.0.clone()].into_iter().collect());
                out.push(entry);
            }
        }
    }
    eprintln!("  dedup to {} classes in {:?}", out.len(), t1.elapsed());
    out
}

/// Full census result.
pub struct Census {
    pub n: usize,
    pub weights: Vec<u32>,
    /// levels[k] holds the classes of dimension k+1.
    pub levels: Vec<Vec<ClassEntry>>,
}

impl Census {
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = &ClassEntry> {
        self.levels.iter().flatten()
    }
}

/// Runs the level-by-level enumeration from the one-dimensional code {0, Z}
/// through dimension `max_dim`.
pub fn run_census(n: usize, wt: &[u32], max_dim: usize) -> Result<Census> {
    if n > 32 {
        return Err(Error::InternalInconsistency("word masks are 32-bit".into()));
    }
    if !wt.contains(&(n as u32)) || !wt.contains(&0) {
        return Err(Error::InternalInconsistency(
            "the weight set must contain 0 and n (the code contains 0 and Z)".into(),
        ));
    }
    let mut levels = vec![vec![ClassEntry::root(n)]];
    while levels.len() < max_dim {
        let next = extend_level(levels.last().unwrap(), n, wt);
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    Ok(Census {
        n,
        weights: wt.to_vec(),
        levels,
    })
}

/// The unique class whose invariant tuple matches.
pub fn match_class<'a>(inv: &ConfigInvariants, census: &'a Census) -> Result<&'a ClassEntry> {
    let mut found: Option<&ClassEntry> = None;
    for e in census.entries() {
        if e.invariants == *inv {
            if found.is_some() {
                return Err(Error::AmbiguousMatch);
            }
            found = Some(e);
        }
    }
    found.ok_or(Error::NoMatch)
}

/// A class addressed as (dimension, index within its level).
pub type ClassCoord = (usize, usize);

/// All strictly-comparable pairs ([a] < [b]) as (dim, index) coordinates.
pub fn order_edges(census: &Census) -> Vec<(ClassCoord, ClassCoord)> {
    let mut edges = Vec::new();
    for (ka, la) in census.levels.iter().enumerate() {
        for (kb, lb) in census.levels.iter().enumerate().skip(ka + 1) {
            for (ia, a) in la.iter().enumerate() {
                for (ib, b) in lb.iter().enumerate() {
                    if class_leq(a, b) {
                        edges.push(((ka + 1, ia), (kb + 1, ib)));
                    }
                }
            }
        }
    }
    edges
}

// ---------------------------------------------------------------------------
// Exhaustive oracle (small n)
// ---------------------------------------------------------------------------

/// Brute-force classification for small n, independent of the level
/// algorithm: enumerates every linear code containing the all-ones word
/// with weights in WT, and canonicalizes under the full symmetric group.
pub mod oracle {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![0]];
        }
        let smaller = permutations(n - 1);
        let mut out = Vec::new();
        for p in smaller {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn apply(w: Word, perm: &[usize]) -> Word {
        let mut out = 0;
        let mut rest = w;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << perm[i];
        }
        out
    }

    fn canonical(words: &[Word], perms: &[Vec<usize>]) -> Vec<Word> {
        let mut best: Option<Vec<Word>> = None;
        for p in perms {
            let mut img: Vec<Word> = words.iter().map(|&w| apply(w, p)).collect();
            img.sort_unstable();
            if best.as_ref().is_none_or(|b| &img < b) {
                best = Some(img);
            }
        }
        best.unwrap()
    }

    /// Canonical forms of all admissible codes, grouped by dimension.
    pub fn classify(n: usize, wt: &[u32]) -> BTreeMap<usize, BTreeSet<Vec<Word>>> {
        assert!(n <= 7, "oracle is exhaustive; keep n tiny");
        let perms = permutations(n);
        let all_ones = WordSeq::all_ones(n);
        let wt_ok = |w: Word| wt.contains(&weight(w));
        assert!(wt_ok(all_ones) && wt_ok(0));
        let mut seen: BTreeSet<Vec<Word>> = BTreeSet::new();
        let mut classes: BTreeMap<usize, BTreeSet<Vec<Word>>> = BTreeMap::new();
        let root = vec![0u32, all_ones];
        let mut stack = vec![root.clone()];
        seen.insert(root);
        while let Some(code) = stack.pop() {
            let dim = code.len().trailing_zeros() as usize;
            classes
                .entry(dim)
                .or_default()
                .insert(canonical(&code, &perms));
            for w in 1..all_ones {
                if code.binary_search(&w).is_ok() {
                    continue;
                }
                if !code.iter().all(|&b| wt_ok(b ^ w)) {
                    continue;
                }
                let mut bigger: Vec<Word> = code.iter().map(|&b| b ^ w).chain(code.iter().copied()).collect();
                bigger.sort_unstable();
                bigger.dedup();
                if seen.insert(bigger.clone()) {
                    stack.push(bigger);
                }
            }
        }
        classes
    }

    /// Canonicalizes the classes produced by the level algorithm the same
    /// way, for direct comparison.
    pub fn canonicalize_census(census: &Census) -> BTreeMap<usize, BTreeSet<Vec<Word>>> {
        let perms = permutations(census.n);
        let mut out: BTreeMap<usize, BTreeSet<Vec<Word>>> = BTreeMap::new();
        for e in census.entries() {
            out.entry(e.dim)
                .or_default()
                .insert(canonical(&e.words, &perms));
        }
        out
    }
}
