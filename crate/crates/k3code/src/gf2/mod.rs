//! Exact arithmetic in F₂[t] and in the finite fields F_{2^m}.
//!
//! A field is constructed from an explicit irreducible polynomial over F₂
//! ([`field_create`]); its elements are residues stored as bit vectors in a
//! single machine word, which caps the degree at 64 (all inputs of interest
//! need m ≤ 24).  Compatible fields (degree dividing degree) are connected
//! by deterministic embeddings so that points of different residue degrees
//! can be placed in one common field.

mod fpoly;

pub use fpoly::{factor_univariate, roots_in, FPoly};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field degree we construct; keeps element bit vectors in a `u64`.
pub const FIELD_DEGREE_CAP: u32 = 64;

// ---------------------------------------------------------------------------
// Polynomials over F₂
// ---------------------------------------------------------------------------

/// Dense polynomial over F₂; bit `i` of the backing words is the coefficient
/// of `t^i`.  The zero polynomial has no set bits; any nonzero polynomial is
/// monic by construction.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GF2Poly {
    limbs: Vec<u64>,
}

impl GF2Poly {
    pub fn zero() -> Self {
        GF2Poly { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        GF2Poly { limbs: vec![1] }
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        GF2Poly { limbs: vec![2] }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut p = GF2Poly::zero();
        for &e in exps {
            p.toggle(e as usize);
        }
        p
    }

    /// Low 64 coefficient bits (enough for any constructed field modulus).
    pub fn low_bits(&self) -> u64 {
        self.limbs.first().copied().unwrap_or(0)
    }

    pub fn from_low_bits(bits: u64) -> Self {
        let mut p = GF2Poly { limbs: vec![bits] };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    fn toggle(&mut self, i: usize) {
        let limb = i / 64;
        if limb >= self.limbs.len() {
            self.limbs.resize(limb + 1, 0);
        }
        self.limbs[limb] ^= 1u64 << (i % 64);
        self.trim();
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|l| (l >> (i % 64)) & 1 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let l = self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + (63 - l.leading_zeros() as usize))
    }

    pub fn add(&self, rhs: &GF2Poly) -> GF2Poly {
        let mut limbs = self.limbs.clone();
        if rhs.limbs.len() > limbs.len() {
            limbs.resize(rhs.limbs.len(), 0);
        }
        for (i, l) in rhs.limbs.iter().enumerate() {
            limbs[i] ^= l;
        }
        let mut p = GF2Poly { limbs };
        p.trim();
        p
    }

    pub fn shl(&self, k: usize) -> GF2Poly {
        if self.is_zero() {
            return GF2Poly::zero();
        }
        let (limb_shift, bit_shift) = (k / 64, k % 64);
        let mut limbs = vec![0u64; self.limbs.len() + limb_shift + 1];
        for (i, &l) in self.limbs.iter().enumerate() {
            limbs[i + limb_shift] ^= l << bit_shift;
            if bit_shift > 0 {
                limbs[i + limb_shift + 1] ^= l >> (64 - bit_shift);
            }
        }
        let mut p = GF2Poly { limbs };
        p.trim();
        p
    }

    pub fn mul(&self, rhs: &GF2Poly) -> GF2Poly {
        let mut acc = GF2Poly::zero();
        for (i, &l) in self.limbs.iter().enumerate() {
            let mut bits = l;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                acc = acc.add(&rhs.shl(i * 64 + b));
                bits &= bits - 1;
            }
        }
        acc
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, rhs: &GF2Poly) -> (GF2Poly, GF2Poly) {
        let d = rhs.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = GF2Poly::zero();
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            quo.toggle(rd - d);
            rem = rem.add(&rhs.shl(rd - d));
        }
        (quo, rem)
    }

    pub fn rem(&self, rhs: &GF2Poly) -> GF2Poly {
        self.divrem(rhs).1
    }

    pub fn gcd(&self, rhs: &GF2Poly) -> GF2Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn sqr_mod(&self, modulus: &GF2Poly) -> GF2Poly {
        self.mul(self).rem(modulus)
    }

    /// `t^(2^k) mod modulus`, by `k` squarings.
    fn t_pow_pow2_mod(k: u32, modulus: &GF2Poly) -> GF2Poly {
        let mut h = GF2Poly::t().rem(modulus);
        for _ in 0..k {
            h = h.sqr_mod(modulus);
        }
        h
    }

    /// Deterministic irreducibility test over F₂: `t^(2^m) ≡ t (mod f)` and,
    /// for every prime divisor ℓ of m, `gcd(t^(2^(m/ℓ)) − t, f) = 1`.
    pub fn is_irreducible(&self) -> bool {
        let m = match self.degree() {
            None | Some(0) => return false,
            Some(m) => m as u32,
        };
        let t = GF2Poly::t();
        let frob_m = GF2Poly::t_pow_pow2_mod(m, self);
        if frob_m != t.rem(self) {
            return false;
        }
        for l in prime_divisors(m) {
            let h = GF2Poly::t_pow_pow2_mod(m / l, self).add(&t);
            if self.gcd(&h).degree() != Some(0) {
                return false;
            }
        }
        true
    }
}

fn prime_divisors(mut m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// The lexicographically smallest irreducible polynomial of degree `m`
/// (low-degree coefficients compared first, given the forced leading term).
pub fn irreducible_poly(m: u32) -> GF2Poly {
    assert!((1..=FIELD_DEGREE_CAP).contains(&m));
    if m == 1 {
        // t itself is irreducible, but as a field modulus we want t + 1 to
        // keep the residue ring {0, 1} = F₂ with the usual arithmetic.
        return GF2Poly::from_low_bits(0b11);
    }
    for low in 1u64.. {
        let mut p = GF2Poly::from_low_bits(low);
        p.toggle(m as usize);
        if p.is_irreducible() {
            return p;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

impl fmt::Display for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..=self.degree().unwrap()).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "t")?,
                _ => write!(f, "t^{}", i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GF2Poly {
    type Err = Error;

    /// Parses the `"t^14+t^13+1"` style; terms in any order, duplicate terms
    /// cancel (XOR), whitespace ignored.
    fn from_str(s: &str) -> Result<Self> {
        parse_poly_text(s, "t")
    }
}

/// Shared term-list parser for F₂[t] ("t" variable) and field elements
/// ("a" variable).
fn parse_poly_text(s: &str, var: &str) -> Result<GF2Poly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial text".into()));
    }
    let mut p = GF2Poly::zero();
    for term in compact.split('+') {
        if term == "0" {
            continue;
        }
        if term == "1" {
            p.toggle(0);
        } else if term == var {
            p.toggle(1);
        } else if let Some(exp) = term.strip_prefix(var).and_then(|r| r.strip_prefix('^')) {
            let e: usize = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in term `{term}`")))?;
            if e > 4096 {
                return Err(Error::Parse(format!("exponent {e} out of range")));
            }
            p.toggle(e);
        } else {
            return Err(Error::Parse(format!("unrecognized term `{term}`")));
        }
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Finite fields
// ---------------------------------------------------------------------------

/// An element of a [`FieldCtx`]: an m-bit residue mod the defining
/// polynomial.  Addition is XOR and x ↦ x² is the Frobenius automorphism.
/// All arithmetic goes through the owning context.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FFElem(u64);

impl FFElem {
    pub const ZERO: FFElem = FFElem(0);
    pub const ONE: FFElem = FFElem(1);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FFElem({:#x})", self.0)
    }
}

struct FieldData {
    m: u32,
    def_poly: GF2Poly,
    /// Defining polynomial as bits, for the extended-Euclid inverse.
    def_bits: u128,
    /// fold_table[8j + high byte value] = (byte << (8j + m)) mod def_poly,
    /// so a 2m-bit product reduces with at most 8 table lookups.
    fold_table: Vec<u64>,
    /// Hardware carry-less multiply available (detected once).
    has_clmul: bool,
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq", enable = "sse2")]
unsafe fn clmul_hw(a: u64, b: u64) -> u128 {
    use std::arch::x86_64::*;
    let va = _mm_set_epi64x(0, a as i64);
    let vb = _mm_set_epi64x(0, b as i64);
    let r = _mm_clmulepi64_si128(va, vb, 0);
    let lo = _mm_cvtsi128_si64(r) as u64 as u128;
    let hi = _mm_extract_epi64(r, 1) as u64 as u128;
    (hi << 64) | lo
}

fn clmul_portable(a: u64, b: u64) -> u128 {
    let mut acc: u128 = 0;
    let bb = b as u128;
    let mut bits = a;
    while bits != 0 {
        let i = bits.trailing_zeros();
        acc ^= bb << i;
        bits &= bits - 1;
    }
    acc
}

/// An explicit field F_{2^m} = F₂[t]/(def_poly).  Immutable and cheap to
/// clone; safe to share across threads.
#[derive(Clone)]
pub struct FieldCtx(Arc<FieldData>);

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.def_poly == other.0.def_poly
    }
}
impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_2^{} (mod {})", self.0.m, self.0.def_poly)
    }
}

/// Builds F_{2^m} from a monic irreducible polynomial of degree m ≥ 1.
pub fn field_create(def_poly: GF2Poly) -> Result<FieldCtx> {
    let m = def_poly.degree().ok_or(Error::NotIrreducible)? as u32;
    if m == 0 {
        return Err(Error::NotIrreducible);
    }
    if m > FIELD_DEGREE_CAP {
        return Err(Error::FieldCapExceeded(m));
    }
    if !def_poly.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    let def_bits = def_poly.low_bits() as u128 | if m == 64 { 1u128 << 64 } else { 0 };
    // Reduce (v << (8j + m)) mod f by plain shift-xor, once per table slot.
    let mut fold_table = vec![0u64; 8 * 256];
    for j in 0..8u32 {
        for v in 0..256u32 {
            let mut p = (v as u128) << (8 * j + m);
            while p >> m != 0 {
                let d = 127 - p.leading_zeros();
                p ^= def_bits << (d - m);
            }
            fold_table[(j * 256 + v) as usize] = p as u64;
        }
    }
    #[cfg(target_arch = "x86_64")]
    let has_clmul = std::arch::is_x86_feature_detected!("pclmulqdq")
        && std::arch::is_x86_feature_detected!("sse2");
    #[cfg(not(target_arch = "x86_64"))]
    let has_clmul = false;
    Ok(FieldCtx(Arc::new(FieldData {
        m,
        def_poly,
        def_bits,
        fold_table,
        has_clmul,
    })))
}

/// The canonical field of degree m, over the deterministic modulus of
/// [`irreducible_poly`].
pub fn canonical_field(m: u32) -> Result<FieldCtx> {
    if m > FIELD_DEGREE_CAP {
        return Err(Error::FieldCapExceeded(m));
    }
    field_create(irreducible_poly(m))
}

impl FieldCtx {
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn def_poly(&self) -> &GF2Poly {
        &self.0.def_poly
    }

    /// The residue class of `t`, a generator of the field over F₂.
    pub fn gen(&self) -> FFElem {
        if self.0.m == 1 {
            FFElem(1)
        } else {
            FFElem(2)
        }
    }

    pub fn elem_from_bits(&self, bits: u64) -> FFElem {
        debug_assert!(self.0.m == 64 || bits < (1u64 << self.0.m));
        FFElem(bits)
    }

    pub fn add(&self, a: FFElem, b: FFElem) -> FFElem {
        FFElem(a.0 ^ b.0)
    }

    /// Reduces a 2m-bit product: one table fold per set high byte.
    #[inline]
    fn reduce(&self, p: u128) -> FFElem {
        let m = self.0.m;
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut acc = p as u64 & mask;
        let mut hi = (p >> m) as u64;
        let table = &self.0.fold_table;
        let mut j = 0usize;
        while hi != 0 {
            acc ^= table[j * 256 + (hi & 0xFF) as usize];
            hi >>= 8;
            j += 1;
        }
        FFElem(acc)
    }

    #[inline]
    fn clmul(&self, a: u64, b: u64) -> u128 {
        #[cfg(target_arch = "x86_64")]
        if self.0.has_clmul {
            // Detected at construction time.
            return unsafe { clmul_hw(a, b) };
        }
        clmul_portable(a, b)
    }

    #[inline]
    pub fn mul(&self, a: FFElem, b: FFElem) -> FFElem {
        self.reduce(self.clmul(a.0, b.0))
    }

    /// Frobenius x ↦ x², via bit interleaving.
    #[inline]
    pub fn sqr(&self, a: FFElem) -> FFElem {
        self.reduce(spread_bits(a.0))
    }

    pub fn frobenius(&self, a: FFElem) -> FFElem {
        self.sqr(a)
    }

    /// x ↦ x^(2^k).
    pub fn frobenius_iter(&self, mut a: FFElem, k: u32) -> FFElem {
        for _ in 0..k {
            a = self.sqr(a);
        }
        a
    }

    pub fn inverse(&self, a: FFElem) -> Result<FFElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid on bit polynomials.
        let mut r0 = self.0.def_bits;
        let mut r1 = a.0 as u128;
        let mut s0: u128 = 0;
        let mut s1: u128 = 1;
        while r1 != 0 {
            let d0 = 127 - r0.leading_zeros() as i32;
            let d1 = 127 - r1.leading_zeros() as i32;
            if d0 < d1 {
                std::mem::swap(&mut r0, &mut r1);
                std::mem::swap(&mut s0, &mut s1);
                continue;
            }
            let sh = (d0 - d1) as u32;
            r0 ^= r1 << sh;
            s0 ^= s1 << sh;
        }
        debug_assert_eq!(r0, 1, "modulus is irreducible so the gcd is 1");
        Ok(self.reduce(s0))
    }

    pub fn div(&self, a: FFElem, b: FFElem) -> Result<FFElem> {
        Ok(self.mul(a, self.inverse(b)?))
    }

    pub fn pow(&self, a: FFElem, mut e: u128) -> FFElem {
        let mut base = a;
        let mut acc = FFElem::ONE;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Smallest t (dividing m) with a^(2^t) = a, i.e. the degree over F₂ of
    /// the subfield generated by `a`.
    pub fn subfield_degree(&self, a: FFElem) -> u32 {
        let mut b = a;
        for t in 1..=self.0.m {
            b = self.sqr(b);
            if b == a && self.0.m.is_multiple_of(t) {
                return t;
            }
        }
        unreachable!("a^(2^m) = a for every element")
    }

    /// Renders an element in the `"a^5+a^3+a+1"` syntax.
    pub fn render(&self, a: FFElem) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for i in (0..self.0.m as usize).rev() {
            if (a.0 >> i) & 1 == 1 {
                parts.push(match i {
                    0 => "1".to_string(),
                    1 => "a".to_string(),
                    _ => format!("a^{}", i),
                });
            }
        }
        parts.join("+")
    }

    /// Parses the `"a^5+a^3+a+1"` syntax.
    pub fn parse_elem(&self, s: &str) -> Result<FFElem> {
        let p = parse_poly_text(s, "a")?;
        if p.degree().is_some_and(|d| d >= self.0.m as usize) {
            return Err(Error::Parse(format!(
                "element `{s}` has degree ≥ field degree {}",
                self.0.m
            )));
        }
        Ok(FFElem(p.low_bits()))
    }
}

/// Interleaves zeros between the bits of `a` (the square map on F₂[t]).
#[inline]
fn spread_bits(a: u64) -> u128 {
    let mut x = a as u128;
    x = (x | (x << 32)) & 0x0000_0000_FFFF_FFFF_0000_0000_FFFF_FFFF;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF_0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF_00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F_0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333_3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555_5555_5555_5555_5555;
    x
}

/// Compares bit vectors with low-degree coefficients first.
pub(crate) fn lex_low_first_smaller(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let low = (a ^ b).trailing_zeros();
    (a >> low) & 1 == 0
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

/// A ring embedding F_{2^d} ↪ F_{2^m} (d | m) fixing F₂, determined by the
/// image of the generator of the subfield.
#[derive(Clone)]
pub struct Embedding {
    sub: FieldCtx,
    sup: FieldCtx,
    image_of_generator: FFElem,
    /// Images of the powers of the subfield generator, for fast application.
    powers: Vec<u64>,
}

impl Embedding {
    pub fn sub(&self) -> &FieldCtx {
        &self.sub
    }

    pub fn sup(&self) -> &FieldCtx {
        &self.sup
    }

    pub fn image_of_generator(&self) -> FFElem {
        self.image_of_generator
    }

    /// Applies the embedding to a subfield element.
    pub fn apply(&self, a: FFElem) -> FFElem {
        let mut acc = 0u64;
        let mut bits = a.bits();
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc ^= self.powers[i];
            bits &= bits - 1;
        }
        FFElem(acc)
    }

    /// Pulls a supfield element known to lie in the image back to the
    /// subfield.  Returns `None` when the element is outside the image.
    pub fn retract(&self, a: FFElem) -> Option<FFElem> {
        // Solve  Σ c_i powers[i] = a  for the c_i over F₂ by row echelon on
        // (image bits, coefficient bits) pairs.
        let d = self.sub.degree() as usize;
        let mut echelon: Vec<(u64, u64)> = Vec::with_capacity(d);
        for i in 0..d {
            let mut row = (self.powers[i], 1u64 << i);
            while row.0 != 0 {
                let lead = 63 - row.0.leading_zeros();
                match echelon.iter().find(|(p, _)| 63 - p.leading_zeros() == lead) {
                    Some(&(p, c)) => {
                        row.0 ^= p;
                        row.1 ^= c;
                    }
                    None => {
                        echelon.push(row);
                        break;
                    }
                }
            }
        }
        let mut t = (a.bits(), 0u64);
        while t.0 != 0 {
            let lead = 63 - t.0.leading_zeros();
            match echelon.iter().find(|(p, _)| 63 - p.leading_zeros() == lead) {
                Some(&(p, c)) => {
                    t.0 ^= p;
                    t.1 ^= c;
                }
                None => return None,
            }
        }
        Some(FFElem(t.1))
    }
}

/// The deterministic embedding of `sub` into `sup`: among the roots of
/// `sub.def_poly` in `sup`, the generator is sent to the one whose bit
/// vector is smallest with low-degree coefficients compared first.  Between
/// equal contexts this is the identity.
pub fn embedding_create(sub: &FieldCtx, sup: &FieldCtx) -> Result<Embedding> {
    if !sup.degree().is_multiple_of(sub.degree()) {
        return Err(Error::IncompatibleFields {
            sub: sub.degree(),
            sup: sup.degree(),
        });
    }
    let image = if sub == sup {
        sub.gen()
    } else {
        let f = FPoly::from_gf2(sup, sub.def_poly());
        let roots = f.roots();
        let mut best: Option<FFElem> = None;
        for r in roots {
            if best.is_none_or(|b| lex_low_first_smaller(r.bits(), b.bits())) {
                best = Some(r);
            }
        }
        best.ok_or_else(|| Error::InternalInconsistency(
            "defining polynomial has no root in a field of compatible degree".into(),
        ))?
    };
    let d = sub.degree() as usize;
    let mut powers = Vec::with_capacity(d);
    let mut acc = FFElem::ONE;
    for _ in 0..d {
        powers.push(acc.bits());
        acc = sup.mul(acc, image);
    }
    Ok(Embedding {
        sub: sub.clone(),
        sup: sup.clone(),
        image_of_generator: image,
        powers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldCtx {
        field_create("t^2+t+1".parse().unwrap()).unwrap()
    }

    #[test]
    fn constructs_f4_with_defining_relation() {
        let k = f4();
        let a = k.gen();
        // α² = α + 1 is forced by t² + t + 1.
        assert_eq!(k.mul(a, a), k.add(a, FFElem::ONE));
        // The multiplicative group has order 3.
        assert_eq!(k.pow(a, 3), FFElem::ONE);
    }

    #[test]
    fn rejects_square_modulus() {
        // t² + 1 = (t+1)² over F₂.
        let e = field_create("t^2+1".parse().unwrap());
        assert!(matches!(e, Err(Error::NotIrreducible)));
    }

    #[test]
    fn accepts_the_degree_14_modulus() {
        let p: GF2Poly = "t^14+t^13+t^12+t^8+t^5+t^4+t^3+t^2+1".parse().unwrap();
        let k = field_create(p).unwrap();
        assert_eq!(k.degree(), 14);
        // α^14 = α^13+α^12+α^8+α^5+α^4+α^3+α^2+1, the defining relation
        // rearranged in characteristic 2.
        let a = k.gen();
        let lhs = k.pow(a, 14);
        let rhs = k.parse_elem("a^13+a^12+a^8+a^5+a^4+a^3+a^2+1").unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_axioms_on_random_elements() {
        let k = canonical_field(20).unwrap();
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            k.elem_from_bits(state & ((1 << 20) - 1))
        };
        for _ in 0..200 {
            let (a, b) = (next(), next());
            // Frobenius additivity.
            let lhs = k.sqr(k.add(a, b));
            let rhs = k.add(k.sqr(a), k.sqr(b));
            assert_eq!(lhs, rhs);
            // a · a⁻¹ = 1.
            if !a.is_zero() {
                assert_eq!(k.mul(a, k.inverse(a).unwrap()), FFElem::ONE);
            }
            // a^(2^m) = a.
            assert_eq!(k.frobenius_iter(a, 20), a);
        }
        assert!(matches!(k.inverse(FFElem::ZERO), Err(Error::DivisionByZero)));
    }

    #[test]
    fn embedding_is_deterministic_and_multiplicative() {
        let k2 = canonical_field(1).unwrap();
        let k4 = f4();
        // F₂ into F₄ is the identity on {0, 1}.
        let e = embedding_create(&k2, &k4).unwrap();
        assert_eq!(e.apply(FFElem::ZERO), FFElem::ZERO);
        assert_eq!(e.apply(FFElem::ONE), FFElem::ONE);
        // F₄ into F₄ is the identity map.
        let id = embedding_create(&k4, &k4).unwrap();
        assert_eq!(id.apply(k4.gen()), k4.gen());
        // Degree 2 does not divide 7.
        let k128 = canonical_field(7).unwrap();
        assert!(matches!(
            embedding_create(&k4, &k128),
            Err(Error::IncompatibleFields { .. })
        ));
        // Multiplicativity into F_{2^14}.
        let k14 = canonical_field(14).unwrap();
        let e = embedding_create(&k4, &k14).unwrap();
        for abits in 0..4u64 {
            for bbits in 0..4u64 {
                let (a, b) = (FFElem(abits), FFElem(bbits));
                assert_eq!(
                    e.apply(k4.mul(a, b)),
                    k14.mul(e.apply(a), e.apply(b))
                );
                assert_eq!(e.apply(k4.add(a, b)), k14.add(e.apply(a), e.apply(b)));
            }
        }
        // Retraction inverts the embedding.
        for bits in 0..4u64 {
            assert_eq!(e.retract(e.apply(FFElem(bits))), Some(FFElem(bits)));
        }
    }

    #[test]
    fn poly_text_roundtrip_and_duplicates() {
        let p: GF2Poly = "t^3 + t + t + 1".parse().unwrap();
        assert_eq!(p.to_string(), "t^3+1");
        let q: GF2Poly = p.to_string().parse().unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn degree_cap_boundary() {
        // Degree 64 is the largest constructible field.
        let k = canonical_field(64).unwrap();
        let a = k.gen();
        assert_eq!(k.mul(a, k.inverse(a).unwrap()), FFElem::ONE);
        assert_eq!(k.frobenius_iter(a, 64), a);
        let b = k.elem_from_bits(u64::MAX);
        assert_eq!(k.mul(b, k.inverse(b).unwrap()), FFElem::ONE);
        // Degree 65 is rejected.
        assert!(matches!(
            canonical_field(65),
            Err(Error::FieldCapExceeded(65))
        ));
    }
}
