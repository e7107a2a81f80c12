//! Exact lattice arithmetic in the half-integral frame spanned by e_P/2
//! (one vector per locus point, of square −1/2) and h/2 (of square 1/2).
//!
//! The node lattice S⁰ is the span of the e_P and h; a code containing the
//! full-locus word lifts to an overlattice by adjoining, for each code
//! word A, the vector (Σ_{P∈A} e_P + (|A| mod 2)·h)/2.  Everything stays
//! in integer coordinates in the doubled frame; pairings are halved with
//! an integrality check rather than carrying a rational type.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::splitcode::{weight, Code, Word};

/// A vector in the dual frame: integer coordinates over
/// (e_{P_0}/2, …, e_{P_{n−1}}/2, h/2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicVec(pub Vec<i64>);

impl DyadicVec {
    /// Twice the bilinear pairing, always an integer:
    /// 2(v·w) = −Σ vᵢwᵢ + v_h·w_h.
    pub fn twice_pairing(&self, other: &DyadicVec) -> i64 {
        let n = self.0.len() - 1;
        let mut acc = self.0[n] * other.0[n];
        for i in 0..n {
            acc -= self.0[i] * other.0[i];
        }
        acc
    }
}

/// A full-rank sublattice of the dual frame with exact integer Gram matrix.
pub struct DyadicLattice {
    n: usize,
    basis: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    /// The words of the originating code (used by the evenness criterion).
    words: Vec<Word>,
    code_dim: usize,
}

impl DyadicLattice {
    pub fn rank(&self) -> usize {
        self.n + 1
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn code_dim(&self) -> usize {
        self.code_dim
    }

    pub fn sigma(&self) -> u32 {
        (self.n as u32).div_ceil(2) - self.code_dim as u32
    }
}

/// Builds the overlattice of the node lattice attached to a code.  The
/// code must contain the all-ones word; pairings must come out integral
/// (they do exactly when every lift respects the parity rule).
pub fn lattice_from_code(code: &Code) -> Result<DyadicLattice> {
    let all_ones: Word = if code.n == 32 { u32::MAX } else { (1 << code.n) - 1 };
    if !code.contains(all_ones) {
        return Err(Error::InternalInconsistency(
            "code does not contain the all-ones word".into(),
        ));
    }
    lattice_from_words(code.n, &code.basis, &code.words)
}

/// Overlattice from explicit basis words (no admissibility requirements;
/// inadmissible words simply produce odd or non-type-I lattices).
pub fn lattice_from_words(n: usize, basis_words: &[Word], all_words: &[Word]) -> Result<DyadicLattice> {
    let rank = n + 1;
    let mut gens: Vec<Vec<i64>> = Vec::with_capacity(rank + basis_words.len());
    for i in 0..rank {
        let mut row = vec![0i64; rank];
        row[i] = 2;
        gens.push(row);
    }
    for &w in basis_words {
        let mut row = vec![0i64; rank];
        for i in 0..n {
            if w >> i & 1 == 1 {
                row[i] = 1;
            }
        }
        row[n] = (weight(w) % 2) as i64;
        gens.push(row);
    }
    let basis = hermite_basis(gens, rank)?;
    // Exact Gram: twice the pairing must always be even.
    let mut gram = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            let mut t = basis[i][n] * basis[j][n];
            for c in 0..n {
                t -= basis[i][c] * basis[j][c];
            }
            if t % 2 != 0 {
                return Err(Error::NotIntegral);
            }
            gram[i][j] = t / 2;
        }
    }
    Ok(DyadicLattice {
        n,
        basis,
        gram,
        words: all_words.to_vec(),
        code_dim: basis_words.len(),
    })
}

/// Row-style Hermite reduction: returns an upper-triangular basis of the
/// row span.
fn hermite_basis(mut rows: Vec<Vec<i64>>, rank: usize) -> Result<Vec<Vec<i64>>> {
    let mut out: Vec<Vec<i64>> = Vec::with_capacity(rank);
    for col in 0..rank {
        loop {
            // Find the row with the smallest nonzero entry in this column.
            let mut best: Option<usize> = None;
            for (r, row) in rows.iter().enumerate() {
                if row[col] != 0
                    && best.is_none_or(|b| row[col].abs() < rows[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(p) = best else {
                return Err(Error::InternalInconsistency(
                    "generator matrix is not of full rank".into(),
                ));
            };
            let pivot = rows[p].clone();
            let mut done = true;
            for (r, row) in rows.iter_mut().enumerate() {
                if r == p || row[col] == 0 {
                    continue;
                }
                let q = row[col].div_euclid(pivot[col]);
                for c in 0..rank {
                    row[c] -= q * pivot[c];
                }
                if row[col] != 0 {
                    done = false;
                }
            }
            if done {
                let mut piv = rows.swap_remove(p);
                if piv[col] < 0 {
                    for c in &mut piv {
                        *c = -*c;
                    }
                }
                out.push(piv);
                break;
            }
        }
    }
    Ok(out)
}

/// Exact determinant (Bareiss, big integers) and its sign.
pub fn disc_and_signature(l: &DyadicLattice) -> (BigInt, i8) {
    let det = bareiss_det(&l.gram);
    let sign = match det.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    };
    (det, sign)
}

fn bareiss_det(gram: &[Vec<i64>]) -> BigInt {
    let n = gram.len();
    let mut m: Vec<Vec<BigInt>> = gram
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = t;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Even ⟺ all basis norms even ⟺ every word weight is 0 or 1 mod 4.
/// Both criteria are computed and must agree.
pub fn is_even(l: &DyadicLattice) -> bool {
    let by_gram = (0..l.rank()).all(|i| l.gram[i][i] % 2 == 0);
    let by_weights = l.words.iter().all(|&w| matches!(weight(w) % 4, 0 | 1));
    assert_eq!(
        by_gram, by_weights,
        "diagonal parity and the weight criterion must agree"
    );
    by_gram
}

/// Type I ⟺ every dual vector has integral norm ⟺ the diagonal of the
/// inverse Gram matrix is integral (off-diagonal entries are half-integral
/// automatically for 2-elementary lattices; asserted).
pub fn is_type_i(l: &DyadicLattice) -> bool {
    let inv = invert_gram(&l.gram);
    let two = BigInt::from(2);
    for (i, row) in inv.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i == j {
                if !x.is_integer() {
                    return false;
                }
            } else {
                assert!(
                    (x * &two).is_integer(),
                    "dual pairings of a 2-elementary lattice lie in ½Z"
                );
            }
        }
    }
    true
}

fn invert_gram(gram: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = gram.len();
    let mut a: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from(BigInt::from(x))).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Gram matrix is nondegenerate");
        a.swap(col, p);
        inv.swap(col, p);
        let d = a[col][col].clone();
        for c in 0..n {
            a[col][c] /= d.clone();
            inv[col][c] /= d.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = f.clone() * a[col][c].clone();
                    a[r][c] -= t;
                    let t = f.clone() * inv[col][c].clone();
                    inv[r][c] -= t;
                }
            }
        }
    }
    inv
}

/// Index of the node lattice inside the overlattice, via the determinant
/// ratio |det S⁰| / |det L| = index².
pub fn index_over_node_lattice(l: &DyadicLattice) -> BigInt {
    let node_det_abs = BigInt::one() << (l.n + 1);
    let (det, _) = disc_and_signature(l);
    let ratio = node_det_abs / det.abs();
    ratio.sqrt()
}

// ---------------------------------------------------------------------------
// Discriminant form
// ---------------------------------------------------------------------------

/// The discriminant group of an even overlattice, as F₂-combinations of
/// coset representatives in Pow(Z) ⊕ F₂ (bit n is the h/2 component).
/// b takes values in ½Z/Z (a bit), q in ½Z/2Z (a residue mod 4).
pub struct DiscriminantForm {
    n: usize,
    /// Representatives of a basis of H^⊥/H, as (n+1)-bit vectors.
    pub basis: Vec<u32>,
}

impl DiscriminantForm {
    pub fn order_log2(&self) -> usize {
        self.basis.len()
    }

    /// b(x, y) as the numerator of a value in {0, 1/2} ⊂ Q/Z:
    /// b = (|A∩A′| + αα′)/2 mod Z.
    pub fn b_num(&self, x: u32, y: u32) -> u8 {
        ((x & y).count_ones() % 2) as u8
    }

    /// q(x) as r with q = r/2 mod 2Z, r ∈ {0,1,2,3}:
    /// q(A, α) = (α − |A|)/2 mod 2Z.
    pub fn q_num(&self, x: u32) -> u8 {
        let alpha = (x >> self.n & 1) as i64;
        let wt = (x & ((1 << self.n) - 1)).count_ones() as i64;
        (alpha - wt).rem_euclid(4) as u8
    }
}

/// Discriminant form of the overlattice of an even code: the group
/// H^⊥/H for H the lift of the code, with the forms restricted from the
/// node-lattice discriminant group.  Fails with `NotEven` when some word
/// weight is 2 or 3 mod 4.
pub fn discriminant_form(l: &DyadicLattice) -> Result<DiscriminantForm> {
    if !l.words.iter().all(|&w| matches!(weight(w) % 4, 0 | 1)) {
        return Err(Error::NotEven);
    }
    let n = l.n;
    let dim = n + 1;
    // Lifts of the code words span H; the pairing on Pow(Z) ⊕ F₂ is the
    // standard dot product, so H^⊥ is a plain nullspace.
    let lifts: Vec<u32> = l
        .words
        .iter()
        .filter(|&&w| w != 0)
        .map(|&w| w | ((weight(w) % 2) << n))
        .collect();
    // Isotropy of the lift: q vanishes on H.
    let df_probe = DiscriminantForm {
        n,
        basis: Vec::new(),
    };
    for &h in &lifts {
        if df_probe.q_num(h) != 0 {
            return Err(Error::InternalInconsistency(
                "code lift is not q-isotropic".into(),
            ));
        }
    }
    // Nullspace of the k×dim lift matrix over F₂ (H^⊥ under the standard
    // dot product).
    let mut h_perp: Vec<u32> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut reduced: Vec<u32> = Vec::new();
    for &h in &lifts {
        let mut v = h;
        for (&c, &r) in pivot_cols.iter().zip(&reduced) {
            if v >> c & 1 == 1 {
                v ^= r;
            }
        }
        if v != 0 {
            let c = v.trailing_zeros() as usize;
            pivot_cols.push(c);
            reduced.push(v);
        }
    }
    let k = reduced.len();
    for col in 0..dim {
        if pivot_cols.contains(&col) {
            continue;
        }
        let mut x = 1u32 << col;
        // Back-substitute so every lift row pairs to zero with x.
        loop {
            let bad = reduced
                .iter()
                .position(|&r| (r & x).count_ones() % 2 == 1);
            match bad {
                None => break,
                Some(i) => x ^= 1 << pivot_cols[i],
            }
        }
        h_perp.push(x);
    }
    debug_assert_eq!(h_perp.len(), dim - k);
    // Quotient H^⊥ / H: extend a basis of H to H^⊥ and keep the extension.
    let mut echelon: Vec<u32> = Vec::new();
    let reduce = |echelon: &Vec<u32>, mut v: u32| -> u32 {
        for &b in echelon {
            let lead = 31 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        v
    };
    for &h in &lifts {
        let v = reduce(&echelon, h);
        if v != 0 {
            echelon.push(v);
            echelon.sort_by_key(|x| std::cmp::Reverse(*x));
        }
    }
    let mut basis = Vec::new();
    for &x in &h_perp {
        let v = reduce(&echelon, x);
        if v != 0 {
            echelon.push(v);
            echelon.sort_by_key(|x| std::cmp::Reverse(*x));
            basis.push(x);
        }
    }
    debug_assert_eq!(basis.len(), dim - 2 * k);
    Ok(DiscriminantForm { n, basis })
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

#[derive(Serialize, serde::Deserialize)]
pub struct LatticeExport {
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
    pub determinant: String,
    pub code_dim: usize,
    pub sigma: u32,
    pub even: bool,
    pub type_i: bool,
}

pub fn export(l: &DyadicLattice) -> LatticeExport {
    let (det, _) = disc_and_signature(l);
    LatticeExport {
        rank: l.rank(),
        gram: l.gram.clone(),
        determinant: det.to_string(),
        code_dim: l.code_dim(),
        sigma: l.sigma(),
        even: is_even(l),
        type_i: is_type_i(l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splitcode::span_code;

    fn trivial_code() -> Code {
        span_code(21, &[(1 << 21) - 1])
    }

    #[test]
    fn trivial_code_lattice() {
        let code = trivial_code();
        let l = lattice_from_code(&code).unwrap();
        let (det, sign) = disc_and_signature(&l);
        // |disc| = 2^(n+1)/|C|² = 2^22/4 = 2^20, hyperbolic so negative.
        assert_eq!(det, -(BigInt::from(1) << 20usize));
        assert_eq!(sign, -1);
        assert!(is_even(&l));
        assert!(is_type_i(&l));
        assert_eq!(index_over_node_lattice(&l), BigInt::from(2));
        assert_eq!(l.sigma(), 10);
        let df = discriminant_form(&l).unwrap();
        assert_eq!(df.order_log2(), 20);
    }

    #[test]
    fn node_lattice_determinant() {
        // The frame-diagonal lattice itself: generators 2·(eᵢ/2) = eᵢ and h.
        let l = lattice_from_words(21, &[], &[0]).unwrap();
        let (det, _) = disc_and_signature(&l);
        assert_eq!(det, -(BigInt::from(1) << 22usize));
        // Exactly one positive diagonal entry (hyperbolicity witness).
        let pos = (0..22).filter(|&i| l.gram()[i][i] > 0).count();
        assert_eq!(pos, 1);
    }

    #[test]
    fn inadmissible_pair_word_is_odd() {
        // Lift of {P₁, P₂} has norm −1: not even.
        let l = lattice_from_words(21, &[0b110, (1 << 21) - 1], &[0, 0b110]).unwrap();
        // The weight list passed above matches parity (weight 2 → α = 0):
        // the diagonal check must see an odd entry.
        assert!(!is_even(&l));
    }

    #[test]
    fn discriminant_form_values() {
        let code = trivial_code();
        let l = lattice_from_code(&code).unwrap();
        let df = discriminant_form(&l).unwrap();
        // q of (A, 0) with |A| = 8 is −4 ≡ 0 mod 2Z.
        let a8: u32 = 0xFF;
        assert_eq!(df.q_num(a8), 0);
        // q of (A, 1) with |A| = 5 is −2 ≡ 0 mod 2Z.
        let a5: u32 = 0b11111 | (1 << 21);
        assert_eq!(df.q_num(a5), 0);
        // b((Z,1),(Z,1)) = (21+1)/2 = 11 ≡ 0 mod Z (even numerator).
        let z1: u32 = ((1 << 21) - 1) | (1 << 21);
        assert_eq!(df.b_num(z1, z1), 0);
        // b relates to q: b(x,y) = (q(x+y) − q(x) − q(y))/2 in Q/Z, i.e.
        // q(x+y) − q(x) − q(y) ≡ 2·b(x,y) in ½Z/2Z numerators.
        for x in [a8, a5, z1] {
            for y in [a8, a5, z1] {
                let lhs = df.b_num(x, y) as i64;
                let rhs = (df.q_num(x ^ y) as i64 - df.q_num(x) as i64 - df.q_num(y) as i64)
                    .rem_euclid(4);
                assert_eq!(rhs, 2 * lhs);
            }
        }
    }
}
