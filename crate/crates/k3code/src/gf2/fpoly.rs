//! Univariate polynomials over a constructed field F_{2^m}: arithmetic,
//! gcds, and full factorization (squarefree → distinct-degree → equal-degree
//! with the characteristic-2 trace splitting).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Embedding, FFElem, FieldCtx, GF2Poly};

/// Dense univariate polynomial over a [`FieldCtx`]; `c[i]` is the
/// coefficient of `x^i`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct FPoly {
    ctx: FieldCtx,
    c: Vec<FFElem>,
}

impl std::fmt::Debug for FPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.c.len()).rev() {
            if self.c[i].is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = self.ctx.render(self.c[i]);
            let coef = if coef == "1" && i > 0 {
                String::new()
            } else if coef.contains('+') {
                format!("({coef})")
            } else {
                coef
            };
            match i {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FPoly {
    pub fn zero(ctx: &FieldCtx) -> Self {
        FPoly {
            ctx: ctx.clone(),
            c: Vec::new(),
        }
    }

    pub fn from_coeffs(ctx: &FieldCtx, c: Vec<FFElem>) -> Self {
        let mut p = FPoly {
            ctx: ctx.clone(),
            c,
        };
        p.trim();
        p
    }

    pub fn constant(ctx: &FieldCtx, a: FFElem) -> Self {
        FPoly::from_coeffs(ctx, vec![a])
    }

    /// The monomial x.
    pub fn x(ctx: &FieldCtx) -> Self {
        FPoly::from_coeffs(ctx, vec![FFElem::ZERO, FFElem::ONE])
    }

    /// Lifts a polynomial over F₂ into this field (coefficients 0/1).
    pub fn from_gf2(ctx: &FieldCtx, p: &GF2Poly) -> Self {
        let n = p.degree().map_or(0, |d| d + 1);
        let c = (0..n)
            .map(|i| if p.coeff(i) { FFElem::ONE } else { FFElem::ZERO })
            .collect();
        FPoly::from_coeffs(ctx, c)
    }

    /// Maps the coefficients through a field embedding.
    pub fn embed(&self, e: &Embedding) -> FPoly {
        FPoly::from_coeffs(e.sup(), self.c.iter().map(|&a| e.apply(a)).collect())
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FFElem] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> FFElem {
        self.c.get(i).copied().unwrap_or(FFElem::ZERO)
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&FFElem::ZERO) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn leading(&self) -> FFElem {
        self.c.last().copied().unwrap_or(FFElem::ZERO)
    }

    pub fn add(&self, rhs: &FPoly) -> FPoly {
        let k = &self.ctx;
        let mut c = self.c.clone();
        if rhs.c.len() > c.len() {
            c.resize(rhs.c.len(), FFElem::ZERO);
        }
        for (i, &a) in rhs.c.iter().enumerate() {
            c[i] = k.add(c[i], a);
        }
        FPoly::from_coeffs(k, c)
    }

    pub fn mul(&self, rhs: &FPoly) -> FPoly {
        if self.is_zero() || rhs.is_zero() {
            return FPoly::zero(&self.ctx);
        }
        let k = &self.ctx;
        let mut c = vec![FFElem::ZERO; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = k.add(c[i + j], k.mul(a, b));
                }
            }
        }
        FPoly::from_coeffs(k, c)
    }

    pub fn scale(&self, s: FFElem) -> FPoly {
        let k = &self.ctx;
        FPoly::from_coeffs(k, self.c.iter().map(|&a| k.mul(a, s)).collect())
    }

    /// Square of the polynomial: in characteristic 2 the coefficients square
    /// and spread to the even positions.
    pub fn sqr(&self) -> FPoly {
        if self.is_zero() {
            return self.clone();
        }
        let k = &self.ctx;
        let mut c = vec![FFElem::ZERO; 2 * self.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            c[2 * i] = k.sqr(a);
        }
        FPoly::from_coeffs(k, c)
    }

    pub fn divrem(&self, rhs: &FPoly) -> (FPoly, FPoly) {
        let k = &self.ctx;
        let d = rhs.degree().expect("division by the zero polynomial");
        let lc_inv = k.inverse(rhs.leading()).expect("nonzero leading coefficient");
        let mut rem = self.c.clone();
        let mut quo = vec![FFElem::ZERO; self.c.len().saturating_sub(d)];
        while rem.len() > d {
            let top = rem.len() - 1;
            let q = k.mul(rem[top], lc_inv);
            if !q.is_zero() {
                quo[top - d] = q;
                for i in 0..=d {
                    let t = k.mul(q, rhs.c[i]);
                    rem[top - d + i] = k.add(rem[top - d + i], t);
                }
            }
            rem.pop();
        }
        (FPoly::from_coeffs(k, quo), FPoly::from_coeffs(k, rem))
    }

    pub fn rem(&self, rhs: &FPoly) -> FPoly {
        if self.degree() < rhs.degree() {
            return self.clone();
        }
        self.divrem(rhs).1
    }

    /// Exact quotient; panics in debug builds when the division leaves a
    /// remainder.
    pub fn div_exact(&self, rhs: &FPoly) -> FPoly {
        let (q, r) = self.divrem(rhs);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn gcd(&self, rhs: &FPoly) -> FPoly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> FPoly {
        match self.leading() {
            FFElem::ONE => self.clone(),
            l if l.is_zero() => self.clone(),
            l => self.scale(self.ctx.inverse(l).expect("nonzero")),
        }
    }

    /// Formal derivative (characteristic 2: even-exponent terms die).
    pub fn derivative(&self) -> FPoly {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| if i % 2 == 1 { a } else { FFElem::ZERO })
            .collect();
        FPoly::from_coeffs(&self.ctx, c)
    }

    pub fn eval(&self, x: FFElem) -> FFElem {
        let k = &self.ctx;
        let mut acc = FFElem::ZERO;
        for &a in self.c.iter().rev() {
            acc = k.add(k.mul(acc, x), a);
        }
        acc
    }

    /// self^(2^e) mod m, by iterated squaring-and-reduction.
    fn frob_pow_mod(&self, e: u32, m: &FPoly) -> FPoly {
        let mut h = self.rem(m);
        for _ in 0..e {
            h = h.sqr().rem(m);
        }
        h
    }

    /// x^(2^e) mod self.
    fn x_frob_mod(&self, e: u32) -> FPoly {
        FPoly::x(&self.ctx).frob_pow_mod(e, self)
    }

    /// Coefficient-wise square root of a polynomial in x² (the inverse of
    /// [`FPoly::sqr`]).
    fn sqrt(&self) -> FPoly {
        let k = &self.ctx;
        let m = k.degree();
        let mut c = Vec::with_capacity(self.c.len() / 2 + 1);
        for (i, &a) in self.c.iter().enumerate() {
            if i % 2 == 0 {
                // a^(2^(m-1)) is the square root in F_{2^m}.
                c.push(k.frobenius_iter(a, m - 1));
            } else {
                debug_assert!(a.is_zero(), "not a square");
            }
        }
        FPoly::from_coeffs(k, c)
    }

    /// Squarefree decomposition: pairs (gᵢ, eᵢ) with ∏ gᵢ^eᵢ = self/leading,
    /// each gᵢ monic squarefree, eᵢ distinct.
    pub fn squarefree_decomposition(&self) -> Vec<(FPoly, u32)> {
        let f = self.monic();
        squarefree_inner(&f, 1)
    }

    /// Full factorization into monic irreducibles with multiplicities.
    /// The product of the factors times `leading()` reproduces the input.
    pub fn factor(&self) -> Vec<(FPoly, u32)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut out = Vec::new();
        for (g, e) in self.squarefree_decomposition() {
            for (d, h) in distinct_degree(&g) {
                for irred in equal_degree(&h, d) {
                    out.push((irred, e));
                }
            }
        }
        out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
        out
    }

    /// All roots in the coefficient field, each listed once, sorted by bits.
    pub fn roots(&self) -> Vec<FFElem> {
        assert!(!self.is_zero());
        let k = &self.ctx;
        if self.degree() == Some(0) {
            return Vec::new();
        }
        // Strip the linear-root part: gcd(f, x^(2^m) − x).
        let xq = self.x_frob_mod(k.degree());
        let lin = self.gcd(&xq.add(&FPoly::x(k)));
        let mut roots: Vec<FFElem> = Vec::new();
        if lin.degree() == Some(0) {
            return roots;
        }
        // Remove multiplicities before splitting.
        let mut stack = vec![squarefree_part(&lin)];
        while let Some(f) = stack.pop() {
            match f.degree() {
                Some(1) => {
                    // x + r
                    roots.push(f.coeff(0));
                }
                Some(d) if d > 1 => {
                    let (a, b) = split_equal_degree(&f, 1);
                    stack.push(a);
                    stack.push(b);
                }
                _ => {}
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// Deterministic irreducibility over the coefficient field.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n as u32,
        };
        if n == 1 {
            return true;
        }
        let k = &self.ctx;
        let m = k.degree();
        let x = FPoly::x(k);
        // x^(q^n) ≡ x mod f
        if self.x_frob_mod(m * n) != x.rem(self) {
            return false;
        }
        for l in super::prime_divisors(n) {
            let h = self.x_frob_mod(m * (n / l)).add(&x);
            if self.gcd(&h).degree() != Some(0) {
                return false;
            }
        }
        true
    }
}

/// Deterministic ordering of polynomials for stable factor lists.
fn cmp_poly(a: &FPoly, b: &FPoly) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

fn squarefree_part(f: &FPoly) -> FPoly {
    f.squarefree_decomposition()
        .into_iter()
        .fold(FPoly::constant(f.ctx(), FFElem::ONE), |acc, (g, _)| {
            acc.mul(&g)
        })
}

fn squarefree_inner(f: &FPoly, mult: u32) -> Vec<(FPoly, u32)> {
    let mut out = Vec::new();
    if f.degree().is_none_or(|d| d == 0) {
        return out;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f is a square: pull back through x² and double multiplicities.
        return squarefree_inner(&f.sqrt(), mult * 2);
    }
    let mut dup = f.gcd(&deriv);
    let mut sf = f.div_exact(&dup);
    let mut e = 0;
    while sf.degree().is_some_and(|d| d > 0) {
        let other = dup.gcd(&sf);
        let fac = sf.div_exact(&other);
        dup = dup.div_exact(&other);
        sf = other;
        e += 1;
        if fac.degree().is_some_and(|d| d > 0) {
            out.push((fac.monic(), e * mult));
        }
    }
    if dup.degree().is_some_and(|d| d > 0) {
        out.extend(squarefree_inner(&dup.sqrt(), mult * 2));
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial: returns
/// pairs (d, product of all irreducible factors of degree d).
fn distinct_degree(g: &FPoly) -> Vec<(u32, FPoly)> {
    let k = g.ctx();
    let m = k.degree();
    let mut out = Vec::new();
    let mut g = g.monic();
    let x = FPoly::x(k);
    let mut h = x.clone();
    let mut d = 0u32;
    while g.degree().is_some_and(|deg| deg > 0) {
        d += 1;
        if (g.degree().unwrap() as u32) < 2 * d {
            // What remains is irreducible.
            out.push((g.degree().unwrap() as u32, g.clone()));
            break;
        }
        h = h.frob_pow_mod(m, &g);
        let gd = g.gcd(&h.add(&x));
        if gd.degree().is_some_and(|deg| deg > 0) {
            out.push((d, gd.clone()));
            g = g.div_exact(&gd);
            h = h.rem(&g);
        }
    }
    out
}

/// Splits a monic squarefree product of irreducibles of equal degree `d`
/// into its irreducible factors (trace-map splitting; the exponentiation
/// trick of odd characteristic fails here).
fn equal_degree(h: &FPoly, d: u32) -> Vec<FPoly> {
    let mut out = Vec::new();
    let mut stack = vec![h.monic()];
    while let Some(f) = stack.pop() {
        let deg = f.degree().unwrap_or(0) as u32;
        if deg == 0 {
            continue;
        }
        if deg == d {
            out.push(f);
            continue;
        }
        let (a, b) = split_equal_degree(&f, d);
        stack.push(a);
        stack.push(b);
    }
    out.sort_by(cmp_poly);
    out
}

/// One splitting step: f a monic squarefree product of ≥ 2 irreducibles of
/// degree d.  For u in F_q[x]/f the absolute trace T(u) = Σ u^(2^i)
/// (i < m·d) takes values 0/1 in each residue field, so gcd(f, T(u)) is a
/// nontrivial factor for suitable u.  Candidates are drawn from a stream
/// seeded by the coefficients, so runs are reproducible.
fn split_equal_degree(f: &FPoly, d: u32) -> (FPoly, FPoly) {
    let k = f.ctx();
    let m = k.degree();
    let deg = f.degree().unwrap() as u32;
    let mut seed = 0xD6E8FEB86659FD93u64 ^ ((deg as u64) << 32) ^ d as u64;
    for &a in f.coeffs() {
        seed = seed.wrapping_mul(0x100000001B3).wrapping_add(a.bits());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    loop {
        // Random u of degree < deg f.
        let mut c = Vec::with_capacity(deg as usize);
        for _ in 0..deg {
            c.push(k.elem_from_bits(rng.gen::<u64>() & mask));
        }
        let u = FPoly::from_coeffs(k, c);
        if u.degree().is_none_or(|x| x < 1) {
            continue;
        }
        // T(u) = u + u² + u⁴ + … + u^(2^(m·d−1)) mod f.
        let mut trace = u.clone();
        let mut pw = u.clone();
        for _ in 1..(m * d) {
            pw = pw.sqr().rem(f);
            trace = trace.add(&pw);
        }
        if trace.is_zero() || trace.degree() == Some(0) {
            continue;
        }
        let g = f.gcd(&trace);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg as usize {
            let other = f.div_exact(&g);
            return (g, other.monic());
        }
    }
}

// ---------------------------------------------------------------------------
// Spec-level entry points
// ---------------------------------------------------------------------------

/// Factors a nonzero univariate polynomial over its coefficient field into
/// monic irreducibles with multiplicities.
pub fn factor_univariate(f: &FPoly) -> Vec<(FPoly, u32)> {
    f.factor()
}

/// All roots, each exactly once, of a polynomial over `emb.sub()` inside the
/// target field `emb.sup()`.
pub fn roots_in(f: &FPoly, emb: &Embedding) -> Vec<FFElem> {
    assert_eq!(f.ctx(), emb.sub());
    f.embed(emb).roots()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{canonical_field, embedding_create, field_create};

    fn f2() -> FieldCtx {
        canonical_field(1).unwrap()
    }

    fn f4() -> FieldCtx {
        field_create("t^2+t+1".parse().unwrap()).unwrap()
    }

    #[test]
    fn factors_x4_plus_x_over_f2() {
        // x⁴ + x = x(x+1)(x²+x+1): the elements of F₄ are the roots of x⁴ = x.
        let k = f2();
        let f = FPoly::from_gf2(&k, &"t^4+t".parse().unwrap());
        let fac = factor_univariate(&f);
        let degs: Vec<_> = fac.iter().map(|(g, e)| (g.degree().unwrap(), *e)).collect();
        assert_eq!(degs, vec![(1, 1), (1, 1), (2, 1)]);
        // Re-multiplying reproduces the input.
        let prod = fac
            .iter()
            .fold(FPoly::constant(&k, FFElem::ONE), |acc, (g, e)| {
                (0..*e).fold(acc, |a, _| a.mul(g))
            });
        assert_eq!(prod, f);
    }

    #[test]
    fn splits_x2_x_1_over_f4() {
        // x² + x + 1 = (x+α)(x+α²) over F₄.
        let k = f4();
        let f = FPoly::from_gf2(&k, &"t^2+t+1".parse().unwrap());
        let fac = factor_univariate(&f);
        assert_eq!(fac.len(), 2);
        assert!(fac.iter().all(|(g, e)| g.degree() == Some(1) && *e == 1));
        let mut roots = f.roots();
        roots.sort();
        let a = k.gen();
        let mut expected = vec![a, k.mul(a, a)];
        expected.sort();
        assert_eq!(roots, expected);
    }

    #[test]
    fn irreducible_over_f2_stays_irreducible() {
        let k = f2();
        let f = FPoly::from_gf2(&k, &"t^2+t+1".parse().unwrap());
        let fac = factor_univariate(&f);
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].1, 1);
        assert!(f.is_irreducible());
    }

    #[test]
    fn roots_in_target_fields() {
        let k2 = f2();
        let k4 = f4();
        let f = FPoly::from_gf2(&k2, &"t^2+t+1".parse().unwrap());
        // In F₄: {α, α+1}.
        let e = embedding_create(&k2, &k4).unwrap();
        let r = roots_in(&f, &e);
        assert_eq!(r.len(), 2);
        // In F₈: none, since F₄ ⊄ F₈.
        let k8 = canonical_field(3).unwrap();
        let e8 = embedding_create(&k2, &k8).unwrap();
        assert!(roots_in(&f, &e8).is_empty());
        // A double root is listed once: (x+α)² over F₄.
        let a = k4.gen();
        let lin = FPoly::from_coeffs(&k4, vec![a, FFElem::ONE]);
        let sq = lin.sqr();
        assert_eq!(sq.roots(), vec![a]);
    }

    #[test]
    fn factorization_roundtrip_with_multiplicities() {
        let k = f4();
        let a = k.gen();
        // (x + α)³ (x² + x + α) over F₄.
        let lin = FPoly::from_coeffs(&k, vec![a, FFElem::ONE]);
        let quad = FPoly::from_coeffs(&k, vec![a, FFElem::ONE, FFElem::ONE]);
        assert!(quad.is_irreducible());
        let f = lin.mul(&lin).mul(&lin).mul(&quad);
        let fac = factor_univariate(&f);
        let mut prod = FPoly::constant(&k, f.leading());
        for (g, e) in &fac {
            assert!(g.is_irreducible());
            for _ in 0..*e {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod, f);
        assert_eq!(fac.iter().map(|(_, e)| *e).max(), Some(3));
    }
}
