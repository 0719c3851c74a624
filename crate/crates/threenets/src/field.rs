//! Exact arithmetic in GF(p^k) with a polynomial-basis representation.
//!
//! A [`FieldSpec`] fixes the prime `p`, the extension degree `k` and a monic
//! irreducible modulus of degree `k` over Z_p (the lexicographically smallest
//! one under the integer encoding `c0 + c1*p + ...`, so builds are
//! reproducible). [`FieldElement`]s are length-`k` coefficient vectors,
//! low degree first. Subfield embeddings are pinned to a deterministic
//! generator rule so every downstream construction is reproducible.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Default cap on the field order; far above everything the constructions need.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NonPrime(u64),
    TooLarge { p: u64, k: usize, bound: u64 },
    BadDegree(usize),
    DivByZero,
    SpecMismatch,
    NotASubfield,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NonPrime(p) => write!(f, "{} is not prime", p),
            FieldError::TooLarge { p, k, bound } => {
                write!(f, "field order {}^{} exceeds bound {}", p, k, bound)
            }
            FieldError::BadDegree(k) => write!(f, "extension degree {} is not supported", k),
            FieldError::DivByZero => write!(f, "division by zero"),
            FieldError::SpecMismatch => write!(f, "elements belong to different fields"),
            FieldError::NotASubfield => write!(f, "not a subfield"),
        }
    }
}

impl std::error::Error for FieldError {}

#[derive(Debug, PartialEq, Eq)]
struct SpecInner {
    p: u64,
    k: usize,
    /// Monic modulus, k+1 coefficients low-to-high (last one is 1).
    modulus: Vec<u64>,
}

/// Description of GF(p^k). Cheap to clone; interoperable only when identical.
#[derive(Clone)]
pub struct FieldSpec(Arc<SpecInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.k)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// --- univariate polynomial helpers over Z_p (coefficients low-to-high, trimmed) ---

fn poly_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&out, modulus, p)
}

/// Remainder of `a` divided by monic `m` over Z_p.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = poly_trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let sub = (lead * mi) % p;
                r[i + shift] = (r[i + shift] + p - sub) % p;
            }
        }
        // m is monic, so the leading coefficient is now zero
        r.pop();
        r = poly_trim(r);
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        // make b monic before using it as divisor
        let lead = *b.last().unwrap();
        if lead != 1 {
            let inv = mod_inverse(lead, p);
            for c in b.iter_mut() {
                *c = (*c * inv) % p;
            }
        }
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on i64 is enough for p < 2^20
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit");
    ((t % p as i64 + p as i64) % p as i64) as u64
}

/// x^(p^e) mod m, by repeated p-th powering.
fn frobenius_power(m: &[u64], p: u64, e: usize) -> Vec<u64> {
    let x = vec![0, 1];
    let mut r = poly_rem(&x, m, p);
    for _ in 0..e {
        r = poly_pow_mod(&r, p, m, p);
    }
    r
}

fn poly_pow_mod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = base.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            result = poly_mul_mod(&result, &b, m, p);
        }
        b = poly_mul_mod(&b, &b, m, p);
        exp >>= 1;
    }
    result
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let ai = a.get(i).copied().unwrap_or(0);
        let bi = b.get(i).copied().unwrap_or(0);
        out[i] = (ai + p - bi) % p;
    }
    poly_trim(out)
}

/// Irreducibility of a monic degree-k polynomial over Z_p:
/// x^(p^k) = x mod f, and gcd(x^(p^(k/t)) - x, f) = 1 for every prime t | k.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let xpk = frobenius_power(f, p, k);
    if poly_sub(&xpk, &poly_rem(&x, f, p), p) != Vec::<u64>::new() {
        return false;
    }
    let mut rest = k;
    let mut t = 2;
    let mut primes = Vec::new();
    while t * t <= rest {
        if rest % t == 0 {
            primes.push(t);
            while rest % t == 0 {
                rest /= t;
            }
        }
        t += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    for t in primes {
        let xpe = frobenius_power(f, p, k / t);
        let diff = poly_sub(&xpe, &poly_rem(&x, f, p), p);
        let g = poly_gcd(f, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

impl FieldSpec {
    /// Build GF(p^k) with the default order bound.
    pub fn new(p: u64, k: usize) -> Result<FieldSpec, FieldError> {
        FieldSpec::with_bound(p, k, DEFAULT_MAX_ORDER)
    }

    /// Build GF(p^k), rejecting orders above `bound`.
    ///
    /// The modulus is the first monic irreducible of degree k in the
    /// integer encoding order `c0 + c1*p + ... + c_{k-1}*p^{k-1}` (for GF(8)
    /// this picks x^3 + x + 1).
    pub fn with_bound(p: u64, k: usize, bound: u64) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if k == 0 {
            return Err(FieldError::BadDegree(k));
        }
        let mut order: u64 = 1;
        for _ in 0..k {
            order = order
                .checked_mul(p)
                .filter(|&o| o <= bound)
                .ok_or(FieldError::TooLarge { p, k, bound })?;
        }
        let modulus = if k == 1 {
            vec![0, 1] // the polynomial x; elements are plain residues
        } else {
            let mut found = None;
            for idx in 0..order {
                let mut f = Vec::with_capacity(k + 1);
                let mut rest = idx;
                for _ in 0..k {
                    f.push(rest % p);
                    rest /= p;
                }
                f.push(1);
                if is_irreducible(&f, p) {
                    found = Some(f);
                    break;
                }
            }
            found.expect("an irreducible polynomial of every degree exists")
        };
        Ok(FieldSpec(Arc::new(SpecInner { p, k, modulus })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> usize {
        self.0.k
    }

    /// q = p^k
    pub fn order(&self) -> u64 {
        self.0.p.pow(self.0.k as u32)
    }

    /// Modulus coefficients, low degree first, length k+1.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            coeffs: vec![0; self.0.k],
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = vec![0; self.0.k];
        coeffs[0] = 1;
        FieldElement {
            spec: self.clone(),
            coeffs,
        }
    }

    /// Element with the given coefficients (low degree first); reduced mod p.
    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        assert!(
            coeffs.len() <= self.0.k,
            "coefficient vector longer than extension degree"
        );
        let mut c = vec![0; self.0.k];
        for (i, &v) in coeffs.iter().enumerate() {
            c[i] = v % self.0.p;
        }
        FieldElement {
            spec: self.clone(),
            coeffs: c,
        }
    }

    /// Element number `idx` in the enumeration order (digits of idx base p).
    pub fn element_from_index(&self, idx: u64) -> FieldElement {
        assert!(idx < self.order(), "index out of range");
        let mut coeffs = vec![0; self.0.k];
        let mut rest = idx;
        for c in coeffs.iter_mut() {
            *c = rest % self.0.p;
            rest /= self.0.p;
        }
        FieldElement {
            spec: self.clone(),
            coeffs,
        }
    }

    /// All q elements: zero first, then ascending in the fixed enumeration
    /// order (coefficient vector read as a base-p integer). Every
    /// deterministic tie-break in the crate uses this order.
    pub fn enumerate(&self) -> Vec<FieldElement> {
        (0..self.order())
            .map(|i| self.element_from_index(i))
            .collect()
    }

    /// Integer-valued element for prime-field style input.
    pub fn from_int(&self, v: u64) -> FieldElement {
        self.element_from_index(v % self.order())
    }
}

/// An element of GF(p^k): a length-k coefficient vector over Z_p.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    coeffs: Vec<u64>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.spec.k() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "{:?}", self.coeffs)
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    /// Enumeration order: base-p integer value of the coefficient vector.
    fn cmp(&self, other: &Self) -> Ordering {
        self.index().cmp(&other.index())
    }
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Position in the enumeration order.
    pub fn index(&self) -> u64 {
        let p = self.spec.p();
        let mut idx = 0u64;
        for &c in self.coeffs.iter().rev() {
            idx = idx * p + c;
        }
        idx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_spec(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.try_add(other).expect("field mismatch in add")
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_spec(other)?;
        let p = self.spec.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.try_sub(other).expect("field mismatch in sub")
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_spec(other)?;
        let p = self.spec.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(FieldElement {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> FieldElement {
        self.spec.zero().sub(self)
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.try_mul(other).expect("field mismatch in mul")
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_spec(other)?;
        let p = self.spec.p();
        let prod = {
            let mut out = vec![0u64; 2 * self.spec.k() - 1];
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in other.coeffs.iter().enumerate() {
                    out[i + j] = (out[i + j] + a * b) % p;
                }
            }
            out
        };
        let r = poly_rem(&prod, self.spec.modulus(), p);
        let mut coeffs = vec![0u64; self.spec.k()];
        coeffs[..r.len()].copy_from_slice(&r);
        Ok(FieldElement {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    /// Multiplicative inverse; `DivByZero` on zero.
    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivByZero);
        }
        // a^(q-2) = a^{-1}; fine at these orders
        Ok(self.pow(self.spec.order() - 2))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_spec(other)?;
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut exp: u64) -> FieldElement {
        let mut result = self.spec.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        result
    }

    /// Multiplicative order; panics on zero.
    pub fn mult_order(&self) -> u64 {
        assert!(!self.is_zero());
        let group = self.spec.order() - 1;
        let mut divisors: Vec<u64> = (1..=group).filter(|d| group % d == 0).collect();
        divisors.sort_unstable();
        for d in divisors {
            if self.pow(d).is_one() {
                return d;
            }
        }
        unreachable!("order divides q-1")
    }

    /// Lift an integer scalar into the field (n mod p times one).
    pub fn scalar(spec: &FieldSpec, n: u64) -> FieldElement {
        spec.element(&[n % spec.p()])
    }
}

/// The four basic operations as a single fallible entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement, FieldError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => {
            a.check_spec(b)?;
            a.div(b)
        }
    }
}

/// A field homomorphism GF(r) -> GF(q), stored as a full image table.
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    sub: FieldSpec,
    sup: FieldSpec,
    /// images indexed by sub-element enumeration index
    images: Vec<FieldElement>,
}

impl FieldEmbedding {
    pub fn sub(&self) -> &FieldSpec {
        &self.sub
    }

    pub fn sup(&self) -> &FieldSpec {
        &self.sup
    }

    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        assert!(a.spec() == &self.sub, "element not in the source field");
        self.images[a.index() as usize].clone()
    }

    /// Whether `x` lies in the image subfield.
    pub fn contains(&self, x: &FieldElement) -> bool {
        self.images.iter().any(|im| im == x)
    }

    /// Preimage lookup; None if `x` is outside the subfield copy.
    pub fn preimage(&self, x: &FieldElement) -> Option<FieldElement> {
        self.images
            .iter()
            .position(|im| im == x)
            .map(|i| self.sub.element_from_index(i as u64))
    }
}

/// Minimal polynomial of `g` over Z_p, low-to-high monic coefficients.
fn minimal_polynomial(g: &FieldElement) -> Vec<u64> {
    let p = g.spec().p();
    // collect the Frobenius orbit g, g^p, g^(p^2), ...
    let mut orbit = vec![g.clone()];
    let mut cur = g.pow(p);
    while &cur != g {
        orbit.push(cur.clone());
        cur = cur.pow(p);
        assert!(orbit.len() <= g.spec().k(), "orbit longer than degree");
    }
    // expand prod (x - root) with coefficients in GF(p^k); they land in Z_p
    let spec = g.spec();
    let mut poly = vec![spec.one()];
    for root in &orbit {
        let mut next = vec![spec.zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.mul(root));
        }
        poly = next;
    }
    poly.iter()
        .map(|c| {
            assert!(
                c.coeffs()[1..].iter().all(|&x| x == 0),
                "minimal polynomial coefficient not in prime field"
            );
            c.coeffs()[0]
        })
        .collect()
}

/// Canonical embedding GF(r) -> GF(q) for r = p^e, q = p^m, e | m.
///
/// The fixed generator of GF(r)* (first element of multiplicative order r-1
/// in enumeration order) is sent to the first element of GF(q) that has
/// order r-1 and satisfies the generator's minimal polynomial; the rest of
/// the map follows by multiplicativity. The homomorphism laws are verified
/// exhaustively before the map is returned.
pub fn embed_subfield(sub: &FieldSpec, sup: &FieldSpec) -> Result<FieldEmbedding, FieldError> {
    if sub.p() != sup.p() || sup.k() % sub.k() != 0 {
        return Err(FieldError::NotASubfield);
    }
    let r = sub.order();
    if sub == sup {
        let images = sub.enumerate();
        return Ok(FieldEmbedding {
            sub: sub.clone(),
            sup: sup.clone(),
            images,
        });
    }
    // trivial group: GF(2) and GF(p) with r-1 = 1 handled by the same path
    let gen_sub = sub
        .enumerate()
        .into_iter()
        .find(|x| !x.is_zero() && x.mult_order() == r - 1)
        .expect("multiplicative group of a finite field is cyclic");
    let minpoly = minimal_polynomial(&gen_sub);

    let mut image_gen = None;
    for z in sup.enumerate() {
        if z.is_zero() {
            continue;
        }
        if z.mult_order() != r - 1 {
            continue;
        }
        // evaluate the minimal polynomial at z
        let mut acc = sup.zero();
        let mut zpow = sup.one();
        for &c in &minpoly {
            acc = acc.add(&zpow.mul(&FieldElement::scalar(sup, c)));
            zpow = zpow.mul(&z);
        }
        if acc.is_zero() {
            image_gen = Some(z);
            break;
        }
    }
    let image_gen = image_gen.ok_or(FieldError::NotASubfield)?;

    // build the table: 0 -> 0, gen^i -> image^i
    let mut images = vec![sup.zero(); r as usize];
    let mut g = sub.one();
    let mut im = sup.one();
    images[sub.one().index() as usize] = sup.one();
    for _ in 0..(r - 1) {
        g = g.mul(&gen_sub);
        im = im.mul(&image_gen);
        images[g.index() as usize] = im.clone();
    }

    let emb = FieldEmbedding {
        sub: sub.clone(),
        sup: sup.clone(),
        images,
    };
    // verify the homomorphism laws exhaustively
    let elems = sub.enumerate();
    for a in &elems {
        for b in &elems {
            if emb.apply(&a.add(b)) != emb.apply(a).add(&emb.apply(b)) {
                return Err(FieldError::NotASubfield);
            }
            if emb.apply(&a.mul(b)) != emb.apply(a).mul(&emb.apply(b)) {
                return Err(FieldError::NotASubfield);
            }
        }
    }
    assert!(emb.apply(&sub.one()).is_one());
    Ok(emb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        let three = f7.from_int(3);
        let five = f7.from_int(5);
        assert_eq!(three.mul(&five), f7.one());
        assert_eq!(f7.one().div(&three).unwrap(), five);
        assert_eq!(arith(&three, &five, ArithOp::Mul).unwrap(), f7.one());
    }

    #[test]
    fn gf8_modulus_and_reduction() {
        // oracle for the pinned modulus: enumerate monic cubics over Z_2 in the
        // integer encoding order and take the first with no root in Z_2 (degree
        // 3, so root absence is exactly irreducibility)
        let mut expected = None;
        for idx in 0u64..4 {
            let f = [idx & 1, (idx >> 1) & 1, 0, 0]; // c0, c1 placeholder
            let coeffs = [f[0], f[1], (idx >> 2) & 1, 1];
            let eval = |x: u64| -> u64 {
                (coeffs[0] + coeffs[1] * x + coeffs[2] * x * x + coeffs[3] * x * x * x) % 2
            };
            if eval(0) != 0 && eval(1) != 0 {
                expected = Some(vec![coeffs[0], coeffs[1], coeffs[2], coeffs[3]]);
                break;
            }
        }
        assert_eq!(expected, Some(vec![1, 1, 0, 1])); // x^3 + x + 1

        let f8 = FieldSpec::new(2, 3).unwrap();
        assert_eq!(f8.modulus(), &[1, 1, 0, 1]);
        // x * x^2 = x + 1 by the modulus
        let x = f8.element(&[0, 1]);
        let x2 = f8.element(&[0, 0, 1]);
        assert_eq!(x.mul(&x2), f8.element(&[1, 1]));
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(
            FieldSpec::new(4, 1).unwrap_err(),
            FieldError::NonPrime(4)
        );
    }

    #[test]
    fn too_large_rejected() {
        assert!(matches!(
            FieldSpec::with_bound(2, 25, 1 << 20),
            Err(FieldError::TooLarge { .. })
        ));
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.modulus(), &[0, 1]);
        assert_eq!(f7.zero().coeffs().len(), 1);
    }

    #[test]
    fn enumeration_order() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let elems = f3.enumerate();
        assert_eq!(elems.len(), 3);
        assert!(elems[0].is_zero());
        assert_eq!(elems[2], f3.from_int(2));

        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.from_int(5).index(), 5);

        let f4 = FieldSpec::new(2, 2).unwrap();
        let e4 = f4.enumerate();
        assert_eq!(e4.len(), 4);
        assert!(e4[0].is_zero());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, k) in [(2u64, 1usize), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 6)] {
            let f = FieldSpec::new(p, k).unwrap();
            if f.order() > 64 {
                continue;
            }
            let elems = f.enumerate();
            for a in &elems {
                for b in &elems {
                    assert_eq!(a.add(b), b.add(a));
                    assert_eq!(a.mul(b), b.mul(a));
                    for c in &elems {
                        assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
                        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                    }
                }
                if !a.is_zero() {
                    assert!(a.pow(f.order() - 1).is_one(), "Fermat fails in {:?}", f);
                    assert!(a.mul(&a.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn embed_prime_subfield() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let f4 = FieldSpec::new(2, 2).unwrap();
        let emb = embed_subfield(&f2, &f4).unwrap();
        assert!(emb.apply(&f2.zero()).is_zero());
        assert!(emb.apply(&f2.one()).is_one());
    }

    #[test]
    fn embed_gf4_in_gf64() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let f64 = FieldSpec::new(2, 6).unwrap();
        let emb = embed_subfield(&f4, &f64).unwrap();
        // the image of a generator of GF(4)* has multiplicative order 3
        let gen = f4
            .enumerate()
            .into_iter()
            .find(|x| !x.is_zero() && x.mult_order() == 3)
            .unwrap();
        assert_eq!(emb.apply(&gen).mult_order(), 3);
        // homomorphism on all 16 pairs
        for a in f4.enumerate() {
            for b in f4.enumerate() {
                assert_eq!(emb.apply(&a.add(&b)), emb.apply(&a).add(&emb.apply(&b)));
                assert_eq!(emb.apply(&a.mul(&b)), emb.apply(&a).mul(&emb.apply(&b)));
            }
        }
    }

    #[test]
    fn embed_rejects_non_subfield() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let f8 = FieldSpec::new(2, 3).unwrap();
        assert_eq!(embed_subfield(&f4, &f8).unwrap_err(), FieldError::NotASubfield);
        let f9 = FieldSpec::new(3, 2).unwrap();
        assert_eq!(embed_subfield(&f4, &f9).unwrap_err(), FieldError::NotASubfield);
    }

    #[test]
    fn embedding_image_closed() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let f9 = FieldSpec::new(3, 2).unwrap();
        let emb = embed_subfield(&f3, &f9).unwrap();
        let image: Vec<_> = f3.enumerate().iter().map(|a| emb.apply(a)).collect();
        for a in &image {
            for b in &image {
                assert!(image.contains(&a.add(b)));
                assert!(image.contains(&a.mul(b)));
            }
        }
    }

    #[test]
    fn spec_mismatch_detected() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(
            arith(&f5.one(), &f7.one(), ArithOp::Add).unwrap_err(),
            FieldError::SpecMismatch
        );
    }

    #[test]
    fn div_by_zero() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(
            f5.one().div(&f5.zero()).unwrap_err(),
            FieldError::DivByZero
        );
    }
}
