//! Homogeneous trivariate polynomials over a constructed field: parsing,
//! formal and divided (Hasse) derivatives in characteristic 2, the
//! reduction that strips all-even-exponent monomials (the kernel of G ↦ dG
//! consists exactly of the squares), and scalar equivalence modulo squares.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{Embedding, FFElem, FieldCtx};

/// Exponent triple (i, j, k) with i + j + k = degree.
pub type Exp = (u8, u8, u8);

/// Homogeneous polynomial in X0, X1, X2.  Only nonzero coefficients are
/// stored; the map is keyed by exponent triples.
#[derive(Clone, PartialEq, Eq)]
pub struct HomPoly3 {
    ctx: FieldCtx,
    degree: u32,
    coeffs: BTreeMap<Exp, FFElem>,
}

/// The image of a polynomial under the even-exponent strip: no monomial has
/// all three exponents even.  Two polynomials define the same differential
/// up to scalar iff their reductions are proportional.
#[derive(Clone, PartialEq, Eq)]
pub struct BarPoly(pub HomPoly3);

impl HomPoly3 {
    pub fn zero(ctx: &FieldCtx, degree: u32) -> Self {
        HomPoly3 {
            ctx: ctx.clone(),
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms(ctx: &FieldCtx, degree: u32, terms: &[(Exp, FFElem)]) -> Result<Self> {
        let mut p = HomPoly3::zero(ctx, degree);
        for &(e, c) in terms {
            if (e.0 as u32 + e.1 as u32 + e.2 as u32) != degree {
                return Err(Error::MixedDegree);
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: Exp) -> FFElem {
        self.coeffs.get(&e).copied().unwrap_or(FFElem::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exp, FFElem)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, e: Exp, c: FFElem) {
        if c.is_zero() {
            return;
        }
        let k = self.ctx.clone();
        match self.coeffs.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = k.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    o.insert(s);
                }
            }
        }
    }

    pub fn add(&self, rhs: &HomPoly3) -> HomPoly3 {
        debug_assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn mul(&self, rhs: &HomPoly3) -> HomPoly3 {
        let k = &self.ctx;
        let mut out = HomPoly3::zero(k, self.degree + rhs.degree);
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term((a.0 + b.0, a.1 + b.1, a.2 + b.2), k.mul(ca, cb));
            }
        }
        out
    }

    pub fn scale(&self, s: FFElem) -> HomPoly3 {
        let k = &self.ctx;
        let mut out = HomPoly3::zero(k, self.degree);
        for (e, c) in self.terms() {
            out.add_term(e, k.mul(c, s));
        }
        out
    }

    /// Maps the coefficients through a field embedding.
    pub fn embed(&self, emb: &Embedding) -> HomPoly3 {
        debug_assert_eq!(&self.ctx, emb.sub());
        let mut out = HomPoly3::zero(emb.sup(), self.degree);
        for (e, c) in self.terms() {
            out.add_term(e, emb.apply(c));
        }
        out
    }

    /// Value at the affine representative of a projective point (coordinates
    /// in the same field as the coefficients).
    pub fn evaluate(&self, p: [FFElem; 3]) -> FFElem {
        let k = &self.ctx;
        // Power tables up to the degree.
        let d = self.degree as usize;
        let mut pows = [vec![FFElem::ONE; d + 1], vec![FFElem::ONE; d + 1], vec![
            FFElem::ONE;
            d + 1
        ]];
        for v in 0..3 {
            for i in 1..=d {
                pows[v][i] = k.mul(pows[v][i - 1], p[v]);
            }
        }
        let mut acc = FFElem::ZERO;
        for (e, c) in self.terms() {
            let t = k.mul(
                k.mul(pows[0][e.0 as usize], pows[1][e.1 as usize]),
                pows[2][e.2 as usize],
            );
            acc = k.add(acc, k.mul(c, t));
        }
        acc
    }

    /// The degree over F₂ of the subfield generated by the coefficients.
    pub fn coefficient_subfield_degree(&self) -> u32 {
        let mut s = 1;
        for (_, c) in self.terms() {
            s = lcm_u32(s, self.ctx.subfield_degree(c));
        }
        s
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// Derivatives and the even-exponent reduction
// ---------------------------------------------------------------------------

/// Formal partial derivative with respect to axis 0, 1 or 2.  In
/// characteristic 2 the even-exponent terms die.
pub fn partial(g: &HomPoly3, axis: usize) -> HomPoly3 {
    assert!(axis < 3);
    let d = g.degree().saturating_sub(1);
    let mut out = HomPoly3::zero(g.ctx(), d);
    for (e, c) in g.terms() {
        let exps = [e.0, e.1, e.2];
        if exps[axis] % 2 == 1 {
            let mut ne = exps;
            ne[axis] -= 1;
            out.add_term((ne[0], ne[1], ne[2]), c);
        }
    }
    out
}

/// Mixed divided (Hasse) derivative D_{X_i} D_{X_j}, i ≠ j: the coefficient
/// picks up the factor eᵢ·eⱼ mod 2 and both exponents drop by one.  Because
/// Hasse derivatives commute with translation, evaluating it at a point
/// extracts the mixed coefficient of the local expansion there.
pub fn hasse_mixed(g: &HomPoly3, i: usize, j: usize) -> HomPoly3 {
    assert!(i < 3 && j < 3 && i != j);
    let d = g.degree().saturating_sub(2);
    let mut out = HomPoly3::zero(g.ctx(), d);
    for (e, c) in g.terms() {
        let exps = [e.0, e.1, e.2];
        if exps[i] % 2 == 1 && exps[j] % 2 == 1 {
            let mut ne = exps;
            ne[i] -= 1;
            ne[j] -= 1;
            out.add_term((ne[0], ne[1], ne[2]), c);
        }
    }
    out
}

/// Strips exactly the monomials with all three exponents even.
pub fn bar_reduce(g: &HomPoly3) -> BarPoly {
    let mut out = HomPoly3::zero(g.ctx(), g.degree());
    for (e, c) in g.terms() {
        if e.0 % 2 == 0 && e.1 % 2 == 0 && e.2 % 2 == 0 {
            continue;
        }
        out.add_term(e, c);
    }
    BarPoly(out)
}

/// Decides whether G1 = c·G2 modulo squares for a nonzero scalar c, and
/// returns the scalar.  Both polynomials must live over the same field.
pub fn equiv_mod_squares(g1: &HomPoly3, g2: &HomPoly3) -> Option<FFElem> {
    assert_eq!(g1.ctx(), g2.ctx());
    if g1.degree() != g2.degree() {
        return None;
    }
    let k = g1.ctx();
    let b1 = bar_reduce(g1).0;
    let b2 = bar_reduce(g2).0;
    if b1.is_zero() && b2.is_zero() {
        // Both are squares; every nonzero scalar works.
        return Some(FFElem::ONE);
    }
    if b1.is_zero() != b2.is_zero() || b1.len() != b2.len() {
        return None;
    }
    let (e0, c0) = b1.terms().next().unwrap();
    let d0 = b2.coeff(e0);
    if d0.is_zero() {
        return None;
    }
    let c = k.div(c0, d0).expect("nonzero");
    if b2.scale(c) == b1 {
        Some(c)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

/// Grammar: sum of terms `c*X0^i*X1^j*X2^k`; the coefficient is optional
/// (default 1) and written in the element syntax of the base field, wrapped
/// in parentheses when it has more than one term (`(a^2+a)*X0^3*X2^3`).
/// `^1` may be omitted, whitespace is ignored, and all monomials must have
/// the same total degree.
pub fn parse_poly(text: &str, ctx: &FieldCtx) -> Result<HomPoly3> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    // Split on '+' at parenthesis depth 0.
    let mut terms = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in compact.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?
            }
            '+' if depth == 0 => {
                terms.push(&compact[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    terms.push(&compact[start..]);

    let mut degree: Option<u32> = None;
    let mut parsed: Vec<(Exp, FFElem)> = Vec::new();
    for term in terms {
        if term.is_empty() {
            return Err(Error::Parse("empty term".into()));
        }
        let (coef, exps) = parse_term(term, ctx)?;
        let d = exps.0 as u32 + exps.1 as u32 + exps.2 as u32;
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => return Err(Error::MixedDegree),
            _ => {}
        }
        parsed.push((exps, coef));
    }
    let mut p = HomPoly3::zero(ctx, degree.unwrap_or(0));
    for (e, c) in parsed {
        p.add_term(e, c);
    }
    Ok(p)
}

fn parse_term(term: &str, ctx: &FieldCtx) -> Result<(FFElem, Exp)> {
    let mut coef = FFElem::ONE;
    let mut exps = [0u32; 3];
    let mut saw_factor = false;
    let mut rest = term;
    while !rest.is_empty() {
        let factor;
        if let Some(r) = rest.strip_prefix('(') {
            let close = r
                .find(')')
                .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?;
            factor = &r[..close];
            rest = &r[close + 1..];
            coef = ctx.mul(coef, ctx.parse_elem(factor)?);
        } else {
            let end = rest[1..]
                .find('*')
                .map(|i| i + 1)
                .unwrap_or(rest.len());
            factor = &rest[..end];
            rest = &rest[end..];
            if let Some(var_rest) = factor.strip_prefix('X') {
                let (var, exp) = match var_rest.split_once('^') {
                    Some((v, e)) => (
                        v,
                        e.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (var_rest, 1),
                };
                let idx: usize = var
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable in `{factor}`")))?;
                if idx > 2 {
                    return Err(Error::Parse(format!("variable X{idx} out of range")));
                }
                exps[idx] += exp;
            } else {
                coef = ctx.mul(coef, ctx.parse_elem(factor)?);
            }
        }
        saw_factor = true;
        if let Some(r) = rest.strip_prefix('*') {
            rest = r;
        } else if !rest.is_empty() {
            return Err(Error::Parse(format!("expected `*` in term `{term}`")));
        }
    }
    if !saw_factor {
        return Err(Error::Parse("empty term".into()));
    }
    if exps.iter().any(|&e| e > u8::MAX as u32) {
        return Err(Error::Parse("exponent too large".into()));
    }
    Ok((coef, (exps[0] as u8, exps[1] as u8, exps[2] as u8)))
}

impl fmt::Display for HomPoly3 {
    /// Canonical form: graded reverse-lexicographic monomial order,
    /// coefficients in the element syntax (parenthesized when non-atomic).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(Exp, FFElem)> = self.terms().collect();
        terms.sort_by(|a, b| grevlex(a.0, b.0));
        let mut first = true;
        for (e, c) in terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = self.ctx.render(c);
            let monomial = render_monomial(e);
            match (cs.as_str(), monomial.is_empty()) {
                ("1", false) => write!(f, "{monomial}")?,
                (_, true) => write!(f, "{}", wrap(&cs))?,
                (_, false) => write!(f, "{}*{monomial}", wrap(&cs))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn wrap(c: &str) -> String {
    if c.contains('+') {
        format!("({c})")
    } else {
        c.to_string()
    }
}

fn render_monomial(e: Exp) -> String {
    let mut parts = Vec::new();
    for (idx, &exp) in [e.0, e.1, e.2].iter().enumerate() {
        match exp {
            0 => {}
            1 => parts.push(format!("X{idx}")),
            _ => parts.push(format!("X{idx}^{exp}")),
        }
    }
    parts.join("*")
}

/// Graded reverse-lexicographic order on exponent triples of equal degree:
/// compare the last exponent descending-reversed, then the middle.
fn grevlex(a: Exp, b: Exp) -> std::cmp::Ordering {
    let da = a.0 as u32 + a.1 as u32 + a.2 as u32;
    let db = b.0 as u32 + b.1 as u32 + b.2 as u32;
    db.cmp(&da)
        .then(a.2.cmp(&b.2))
        .then(a.1.cmp(&b.1))
}
