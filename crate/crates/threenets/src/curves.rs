//! Plane conics and cubics over GF(q): interpolation through point sets by
//! exact elimination, containment, irreducibility and non-singularity
//! certificates, tangent lines via formal partials.
//!
//! Monomial orders are fixed once and used by every serialization:
//! degree 2: X², Y², Z², XY, YZ, ZX
//! degree 3: X³, Y³, Z³, X²Y, X²Z, Y²X, Y²Z, Z²X, Z²Y, XYZ

use std::fmt;

use crate::field::{embed_subfield, FieldElement, FieldSpec};
use crate::geometry::{all_lines, all_points, ProjLine, ProjPoint};
use crate::linalg::Matrix;

pub const DEG2_MONOMIALS: [(u32, u32, u32); 6] = [
    (2, 0, 0),
    (0, 2, 0),
    (0, 0, 2),
    (1, 1, 0),
    (0, 1, 1),
    (1, 0, 1),
];

pub const DEG3_MONOMIALS: [(u32, u32, u32); 10] = [
    (3, 0, 0),
    (0, 3, 0),
    (0, 0, 3),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (0, 2, 1),
    (1, 0, 2),
    (0, 1, 2),
    (1, 1, 1),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    ZeroForm,
    BadCoefficientCount { expected: usize, got: usize },
    NotOnCurve,
    SingularPoint,
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::ZeroForm => write!(f, "all coefficients are zero"),
            CurveError::BadCoefficientCount { expected, got } => {
                write!(f, "expected {} coefficients, got {}", expected, got)
            }
            CurveError::NotOnCurve => write!(f, "point not on the curve"),
            CurveError::SingularPoint => write!(f, "gradient vanishes at the point"),
        }
    }
}

impl std::error::Error for CurveError {}

fn normalize_coeffs(coeffs: &mut [FieldElement]) -> Result<(), CurveError> {
    let lead = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(CurveError::ZeroForm)?;
    let inv = coeffs[lead].inv().expect("nonzero");
    for c in coeffs.iter_mut() {
        *c = c.mul(&inv);
    }
    Ok(())
}

fn eval_monomial(p: &ProjPoint, m: (u32, u32, u32)) -> FieldElement {
    let c = p.coords();
    c[0].pow(m.0 as u64)
        .mul(&c[1].pow(m.1 as u64))
        .mul(&c[2].pow(m.2 as u64))
}

/// Row of monomial evaluations at `p` in the fixed order: length 6 for
/// degree 2, length 10 for degree 3.
pub fn veronese_row(p: &ProjPoint, degree: u32) -> Vec<FieldElement> {
    match degree {
        2 => DEG2_MONOMIALS.iter().map(|&m| eval_monomial(p, m)).collect(),
        3 => DEG3_MONOMIALS.iter().map(|&m| eval_monomial(p, m)).collect(),
        _ => panic!("only degrees 2 and 3 are supported"),
    }
}

/// A conic as a normalized 6-coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Conic {
    coeffs: Vec<FieldElement>,
}

/// A cubic as a normalized 10-coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Cubic {
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Conic{:?}", self.coeffs)
    }
}

impl fmt::Debug for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cubic{:?}", self.coeffs)
    }
}

macro_rules! form_impl {
    ($ty:ident, $monomials:ident, $len:expr, $degree:expr) => {
        impl $ty {
            pub fn new(coeffs: Vec<FieldElement>) -> Result<$ty, CurveError> {
                if coeffs.len() != $len {
                    return Err(CurveError::BadCoefficientCount {
                        expected: $len,
                        got: coeffs.len(),
                    });
                }
                let mut coeffs = coeffs;
                normalize_coeffs(&mut coeffs)?;
                Ok($ty { coeffs })
            }

            pub fn from_ints(spec: &FieldSpec, ints: &[i64; $len]) -> $ty {
                let coeffs = ints
                    .iter()
                    .map(|&v| {
                        let p = spec.p() as i64;
                        spec.from_int(((v % p + p) % p) as u64)
                    })
                    .collect();
                $ty::new(coeffs).expect("nonzero form")
            }

            pub fn coeffs(&self) -> &[FieldElement] {
                &self.coeffs
            }

            pub fn spec(&self) -> &FieldSpec {
                self.coeffs[0].spec()
            }

            pub fn degree(&self) -> u32 {
                $degree
            }

            pub fn eval(&self, p: &ProjPoint) -> FieldElement {
                let mut acc = self.spec().zero();
                for (c, &m) in self.coeffs.iter().zip($monomials.iter()) {
                    acc = acc.add(&c.mul(&eval_monomial(p, m)));
                }
                acc
            }

            pub fn contains(&self, p: &ProjPoint) -> bool {
                self.eval(p).is_zero()
            }

            /// Formal gradient at `p` (valid in every characteristic).
            pub fn gradient(&self, p: &ProjPoint) -> [FieldElement; 3] {
                let spec = self.spec();
                let mut grad = [spec.zero(), spec.zero(), spec.zero()];
                let coords = p.coords();
                for (c, &(e1, e2, e3)) in self.coeffs.iter().zip($monomials.iter()) {
                    let exps = [e1, e2, e3];
                    for axis in 0..3 {
                        if exps[axis] == 0 {
                            continue;
                        }
                        let mut term = c.mul(&FieldElement::scalar(spec, exps[axis] as u64));
                        for j in 0..3 {
                            let e = if j == axis { exps[j] - 1 } else { exps[j] };
                            term = term.mul(&coords[j].pow(e as u64));
                        }
                        grad[axis] = grad[axis].add(&term);
                    }
                }
                grad
            }

            /// Tangent line at a non-singular point of the curve.
            pub fn tangent_line(&self, p: &ProjPoint) -> Result<ProjLine, CurveError> {
                if !self.contains(p) {
                    return Err(CurveError::NotOnCurve);
                }
                let g = self.gradient(p);
                ProjLine::new(g[0].clone(), g[1].clone(), g[2].clone())
                    .map_err(|_| CurveError::SingularPoint)
            }

            /// All rational points of the curve, in enumeration order.
            pub fn rational_points(&self) -> Vec<ProjPoint> {
                all_points(self.spec())
                    .into_iter()
                    .filter(|p| self.contains(p))
                    .collect()
            }

            /// Restrict the form to the line spanned by `p0`, `p1`: the
            /// coefficients of the binary form g(s,t) = F(s p0 + t p1),
            /// index i holding the coefficient of s^(d-i) t^i.
            pub fn restrict_to_span(&self, p0: &ProjPoint, p1: &ProjPoint) -> Vec<FieldElement> {
                let spec = self.spec();
                let d = $degree as usize;
                let mut acc = vec![spec.zero(); d + 1];
                for (c, &(e1, e2, e3)) in self.coeffs.iter().zip($monomials.iter()) {
                    if c.is_zero() {
                        continue;
                    }
                    // product of linear binary forms per coordinate
                    let mut term = vec![c.clone()];
                    for (axis, &e) in [e1, e2, e3].iter().enumerate() {
                        let lin = [p0.coords()[axis].clone(), p1.coords()[axis].clone()];
                        for _ in 0..e {
                            term = binary_mul_linear(&term, &lin, spec);
                        }
                    }
                    for (i, t) in term.iter().enumerate() {
                        acc[i] = acc[i].add(t);
                    }
                }
                acc
            }

            /// Transport the curve through a field embedding.
            pub fn map_into(&self, images: impl Fn(&FieldElement) -> FieldElement) -> $ty {
                let coeffs = self.coeffs.iter().map(|c| images(c)).collect();
                $ty::new(coeffs).expect("embedding preserves nonzero-ness")
            }

            /// The composed form x ↦ F(M x). The image of the curve under a
            /// point map M is `substitute` with M⁻¹.
            pub fn substitute(&self, m: &crate::linalg::Matrix) -> $ty {
                let spec = self.spec();
                let composed = substitute_form(&self.coeffs, &$monomials, m);
                let coeffs = $monomials
                    .iter()
                    .map(|mono| {
                        composed
                            .get(&[mono.0, mono.1, mono.2])
                            .cloned()
                            .unwrap_or_else(|| spec.zero())
                    })
                    .collect();
                $ty::new(coeffs).expect("projectivity preserves nonzero-ness")
            }
        }
    };
}

/// Expand F(Mx) for a ternary form given by (coefficient, monomial) pairs.
fn substitute_form(
    coeffs: &[FieldElement],
    monomials: &[(u32, u32, u32)],
    m: &crate::linalg::Matrix,
) -> std::collections::BTreeMap<[u32; 3], FieldElement> {
    use std::collections::BTreeMap;
    let _spec = coeffs[0].spec().clone();
    let mut acc: BTreeMap<[u32; 3], FieldElement> = BTreeMap::new();
    let mul_linear = |poly: &BTreeMap<[u32; 3], FieldElement>, row: usize| {
        let mut out: BTreeMap<[u32; 3], FieldElement> = BTreeMap::new();
        for (exp, c) in poly {
            for axis in 0..3 {
                let coeff = m.at(row, axis);
                if coeff.is_zero() {
                    continue;
                }
                let mut e = *exp;
                e[axis] += 1;
                let add = c.mul(coeff);
                match out.get_mut(&e) {
                    Some(v) => *v = v.add(&add),
                    None => {
                        out.insert(e, add);
                    }
                }
            }
        }
        out
    };
    for (c, &(e1, e2, e3)) in coeffs.iter().zip(monomials.iter()) {
        if c.is_zero() {
            continue;
        }
        let mut term: BTreeMap<[u32; 3], FieldElement> = BTreeMap::new();
        term.insert([0, 0, 0], c.clone());
        for (axis, &e) in [e1, e2, e3].iter().enumerate() {
            for _ in 0..e {
                term = mul_linear(&term, axis);
            }
        }
        for (exp, v) in term {
            match acc.get_mut(&exp) {
                Some(x) => *x = x.add(&v),
                None => {
                    acc.insert(exp, v);
                }
            }
        }
    }
    acc.retain(|_, v| !v.is_zero());
    acc
}

form_impl!(Conic, DEG2_MONOMIALS, 6, 2);
form_impl!(Cubic, DEG3_MONOMIALS, 10, 3);

fn binary_mul_linear(
    f: &[FieldElement],
    lin: &[FieldElement; 2],
    spec: &FieldSpec,
) -> Vec<FieldElement> {
    // multiply binary form f by (lin[0] s + lin[1] t)
    let mut out = vec![spec.zero(); f.len() + 1];
    for (i, c) in f.iter().enumerate() {
        out[i] = out[i].add(&c.mul(&lin[0]));
        out[i + 1] = out[i + 1].add(&c.mul(&lin[1]));
    }
    out
}

/// Exact rank/null-space certificate for interpolation through a point set.
#[derive(Clone, Debug)]
pub struct RankCertificate {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub nullspace: Vec<Vec<FieldElement>>,
}

impl RankCertificate {
    pub fn nullity(&self) -> usize {
        self.nullspace.len()
    }
}

/// Stack the Veronese rows of `points` and compute the exact null space: the
/// coefficient vectors of every degree-`degree` curve through all the points.
/// Each basis vector is re-verified by direct evaluation, independent of the
/// elimination path.
pub fn curves_through(points: &[ProjPoint], degree: u32) -> RankCertificate {
    assert!(!points.is_empty(), "need at least one point");
    let spec = points[0].spec().clone();
    let rows: Vec<Vec<FieldElement>> = points.iter().map(|p| veronese_row(p, degree)).collect();
    let cols = rows[0].len();
    let m = Matrix::from_rows(&spec, &rows);
    let rank = m.rank();
    let nullspace = m.nullspace();
    for v in &nullspace {
        for (p, row) in points.iter().zip(rows.iter()) {
            let mut acc = spec.zero();
            for (c, r) in v.iter().zip(row.iter()) {
                acc = acc.add(&c.mul(r));
            }
            assert!(
                acc.is_zero(),
                "null-space vector fails to annihilate {:?}",
                p
            );
        }
    }
    RankCertificate {
        rows: points.len(),
        cols,
        rank,
        nullspace,
    }
}

/// Irreducibility test for conics, uniform in the characteristic.
///
/// A conic is accepted iff no line of PG(2,q) is contained in its zero set
/// and the zero set has exactly q+1 rational points. The line scan alone
/// misses nothing rational (a rational line factor is found directly); the
/// point count rules out conjugate line pairs, which have a single rational
/// point, and agrees with the scan on the double-line case.
pub fn is_irreducible_conic(c: &Conic) -> bool {
    let spec = c.spec();
    let q = spec.order();
    let mut count = 0u64;
    for p in all_points(spec) {
        if c.contains(&p) {
            count += 1;
        }
    }
    if count != q + 1 {
        return false;
    }
    for line in all_lines(spec) {
        if line.points().iter().all(|p| c.contains(p)) {
            return false;
        }
    }
    true
}

/// Non-singularity of a cubic, certified over the quadratic extension: no
/// point of PG(2,q²) annihilates the form and all three formal partials.
/// (The chord-tangent group construction re-verifies the group axioms, so a
/// singularity over a larger extension would still be caught downstream.)
pub fn is_nonsingular_cubic(c: &Cubic) -> bool {
    let spec = c.spec();
    let ext = FieldSpec::new(spec.p(), 2 * spec.k()).expect("quadratic extension in bounds");
    let emb = embed_subfield(spec, &ext).expect("canonical embedding");
    let lifted = c.map_into(|x| emb.apply(x));
    for p in all_points(&ext) {
        if !lifted.contains(&p) {
            continue;
        }
        let g = lifted.gradient(&p);
        if g.iter().all(|x| x.is_zero()) {
            return false;
        }
    }
    true
}

/// Nucleus of an irreducible conic in characteristic 2: the common point of
/// all tangent lines.
pub fn conic_nucleus(c: &Conic) -> Option<ProjPoint> {
    let spec = c.spec();
    if spec.p() != 2 {
        return None;
    }
    let pts = c.rational_points();
    if pts.len() < 2 {
        return None;
    }
    let t0 = c.tangent_line(&pts[0]).ok()?;
    let t1 = c.tangent_line(&pts[1]).ok()?;
    crate::geometry::meet(&t0, &t1).ok()
}
