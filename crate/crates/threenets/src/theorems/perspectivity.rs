//! Involutory perspectivities of an irreducible conic and the matrix groups
//! they generate.
//!
//! Every irreducible conic is carried onto the canonical XZ = Y² by the
//! projectivity fixing the frame (first conic point, tangent intersection,
//! second conic point, third conic point). On the canonical conic, the
//! involution with center (q0:q1:q2) acts on the parameter as the Möbius map
//! y ↦ (q1 y - q0)/(q2 y - q1), and a Möbius map [a b; c d] lifts to the
//! plane as [a², 2ab, b²; ac, ad+bc, bd; c², 2cd, d²]. The lift is valid in
//! every characteristic; each group element carries its 2×2 shadow so fixed
//! points can be computed over the quadratic extension.

use std::collections::BTreeMap;

use crate::curves::{conic_nucleus, is_irreducible_conic, Conic};
use crate::field::{embed_subfield, FieldElement, FieldSpec};
use crate::geometry::{meet, ProjPoint};
use crate::linalg::Matrix;

use super::TheoremsError;

/// Canonicalizing frame of an irreducible conic: a projectivity carrying it
/// onto XZ - Y² with its parametrization (y², y, 1) ∪ (1, 0, 0).
#[derive(Clone, Debug)]
pub struct ConicFrame {
    conic: Conic,
    to_canonical: Matrix,
    from_canonical: Matrix,
}

fn apply_point(m: &Matrix, p: &ProjPoint) -> ProjPoint {
    let v = m.apply(&p.coords().to_vec());
    ProjPoint::new(v[0].clone(), v[1].clone(), v[2].clone()).expect("projectivity image")
}

/// Matrix sending the standard frame e1, e2, e3, (1,1,1) to the four given
/// points (no three of the first three collinear, fourth off their sides).
fn frame_matrix(points: [&ProjPoint; 4]) -> Result<Matrix, TheoremsError> {
    let spec = points[0].spec().clone();
    let cols = Matrix::from_rows(
        &spec,
        &[
            points[0].coords().to_vec(),
            points[1].coords().to_vec(),
            points[2].coords().to_vec(),
        ],
    )
    .transpose();
    let inv = cols
        .inverse()
        .ok_or_else(|| TheoremsError::Internal("frame points collinear".into()))?;
    let lambda = inv.apply(&points[3].coords().to_vec());
    if lambda.iter().any(|l| l.is_zero()) {
        return Err(TheoremsError::Internal(
            "fourth frame point on a side of the triangle".into(),
        ));
    }
    let mut m = cols;
    for i in 0..3 {
        for j in 0..3 {
            *m.at_mut(i, j) = m.at(i, j).mul(&lambda[j]);
        }
    }
    Ok(m)
}

fn canonical_conic(spec: &FieldSpec) -> Conic {
    // XZ - Y²
    Conic::from_ints(spec, &[0, -1, 0, 0, 0, 1])
}

impl ConicFrame {
    pub fn new(conic: &Conic) -> Result<ConicFrame, TheoremsError> {
        if !is_irreducible_conic(conic) {
            return Err(TheoremsError::PreconditionFailed(
                "conic is not irreducible".into(),
            ));
        }
        let pts = conic.rational_points();
        let p1 = &pts[0];
        let p2 = &pts[1];
        let p3 = &pts[2];
        let t1 = conic.tangent_line(p1).expect("smooth");
        let t2 = conic.tangent_line(p2).expect("smooth");
        let tm = meet(&t1, &t2).expect("distinct tangents");
        // e1 -> p1, e2 -> tangent meet, e3 -> p2, (1,1,1) -> p3
        let from_canonical = frame_matrix([p1, &tm, p2, p3])?;
        let to_canonical = from_canonical
            .inverse()
            .ok_or_else(|| TheoremsError::Internal("frame not invertible".into()))?;
        let frame = ConicFrame {
            conic: conic.clone(),
            to_canonical,
            from_canonical,
        };
        // the conic must land exactly on XZ - Y²
        let composed = conic.substitute(&frame.from_canonical);
        if composed != canonical_conic(conic.spec()) {
            return Err(TheoremsError::Internal(
                "canonicalization missed the standard conic".into(),
            ));
        }
        Ok(frame)
    }

    pub fn conic(&self) -> &Conic {
        &self.conic
    }

    pub fn to_canonical(&self, p: &ProjPoint) -> ProjPoint {
        apply_point(&self.to_canonical, p)
    }

    pub fn from_canonical(&self, p: &ProjPoint) -> ProjPoint {
        apply_point(&self.from_canonical, p)
    }

    pub fn from_canonical_matrix(&self) -> &Matrix {
        &self.from_canonical
    }

    pub fn to_canonical_matrix(&self) -> &Matrix {
        &self.to_canonical
    }
}

/// The plane lift of a Möbius map [a b; c d]: the canonical-conic point P_y
/// goes to P_{(ay+b)/(cy+d)}.
pub fn lift_mobius(
    spec: &FieldSpec,
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
    d: &FieldElement,
) -> Matrix {
    let two = FieldElement::scalar(spec, 2);
    Matrix::from_rows(
        spec,
        &[
            vec![a.mul(a), two.mul(&a.mul(b)), b.mul(b)],
            vec![a.mul(c), a.mul(d).add(&b.mul(c)), b.mul(d)],
            vec![c.mul(c), two.mul(&c.mul(d)), d.mul(d)],
        ],
    )
}

pub(crate) fn normalize_matrix(m: &Matrix) -> Matrix {
    let spec = m.spec().clone();
    let mut data = Vec::new();
    for i in 0..m.rows() {
        data.extend(m.row(i).iter().cloned());
    }
    let lead = data
        .iter()
        .find(|c| !c.is_zero())
        .expect("nonzero matrix")
        .clone();
    let inv = lead.inv().unwrap();
    let data: Vec<FieldElement> = data.iter().map(|c| c.mul(&inv)).collect();
    Matrix::new(&spec, m.rows(), m.cols(), data)
}

fn matrix_key(m: &Matrix) -> Vec<u64> {
    let mut key = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for c in m.row(i) {
            key.push(c.index());
        }
    }
    key
}

fn normalize_pair(v: [FieldElement; 4]) -> [FieldElement; 4] {
    let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero").clone();
    let inv = lead.inv().unwrap();
    [
        v[0].mul(&inv),
        v[1].mul(&inv),
        v[2].mul(&inv),
        v[3].mul(&inv),
    ]
}

fn mobius_mul(x: &[FieldElement; 4], y: &[FieldElement; 4]) -> [FieldElement; 4] {
    normalize_pair([
        x[0].mul(&y[0]).add(&x[1].mul(&y[2])),
        x[0].mul(&y[1]).add(&x[1].mul(&y[3])),
        x[2].mul(&y[0]).add(&x[3].mul(&y[2])),
        x[2].mul(&y[1]).add(&x[3].mul(&y[3])),
    ])
}

/// The unique involution of the plane preserving `conic` with center `q`.
#[derive(Clone, Debug)]
pub struct Perspectivity {
    pub matrix: Matrix,
    /// 2×2 shadow on the canonical parameter (a, b, c, d), normalized
    pub mobius: [FieldElement; 4],
    pub center: ProjPoint,
}

impl Perspectivity {
    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        apply_point(&self.matrix, p)
    }
}

pub fn perspectivity_from(conic: &Conic, q: &ProjPoint) -> Result<Perspectivity, TheoremsError> {
    let frame = ConicFrame::new(conic)?;
    perspectivity_in_frame(&frame, q)
}

/// Same as `perspectivity_from` but reusing an existing frame.
pub fn perspectivity_in_frame(
    frame: &ConicFrame,
    q: &ProjPoint,
) -> Result<Perspectivity, TheoremsError> {
    let conic = frame.conic();
    let spec = conic.spec().clone();
    if conic.contains(q) {
        return Err(TheoremsError::OnConic);
    }
    if spec.p() == 2 {
        if let Some(nucleus) = conic_nucleus(conic) {
            if &nucleus == q {
                return Err(TheoremsError::IsNucleus);
            }
        }
    }
    let qc = frame.to_canonical(q);
    let (q0, q1, q2) = (
        qc.coords()[0].clone(),
        qc.coords()[1].clone(),
        qc.coords()[2].clone(),
    );
    // pairs y, y' collinear with (q0:q1:q2) satisfy q2 y y' - q1 (y+y') + q0 = 0
    let mobius = normalize_pair([q1.clone(), q0.neg(), q2.clone(), q1.neg()]);
    let lifted = lift_mobius(&spec, &mobius[0], &mobius[1], &mobius[2], &mobius[3]);
    let matrix = normalize_matrix(&Matrix::matmul(
        &frame.from_canonical_matrix().matmul(&lifted),
        frame.to_canonical_matrix(),
    ));
    // involutory and center-fixing by construction; verified here once
    let sq = normalize_matrix(&matrix.matmul(&matrix));
    if sq != Matrix::identity(&spec, 3) {
        return Err(TheoremsError::Internal("perspectivity is not an involution".into()));
    }
    let img_q = apply_point(&matrix, q);
    if &img_q != q {
        return Err(TheoremsError::Internal("perspectivity does not fix its center".into()));
    }
    Ok(Perspectivity {
        matrix,
        mobius,
        center: q.clone(),
    })
}

#[derive(Clone, Debug)]
pub struct GroupElement {
    pub matrix: Matrix,
    pub mobius: [FieldElement; 4],
    /// parity of generator words reaching this element
    pub odd: bool,
}

/// The group Φ generated by the involutory perspectivities with centers in a
/// given point set, with its index-two subgroup Ψ of even words.
#[derive(Clone, Debug)]
pub struct PerspectivityGroup {
    frame: ConicFrame,
    generators: Vec<Perspectivity>,
    elements: Vec<GroupElement>,
}

const GROUP_CAP: usize = 4096;

impl PerspectivityGroup {
    pub fn generate(
        conic: &Conic,
        centers: &[ProjPoint],
    ) -> Result<PerspectivityGroup, TheoremsError> {
        let frame = ConicFrame::new(conic)?;
        let spec = conic.spec().clone();
        let generators: Vec<Perspectivity> = centers
            .iter()
            .map(|q| perspectivity_in_frame(&frame, q))
            .collect::<Result<_, _>>()?;
        let identity = GroupElement {
            matrix: Matrix::identity(&spec, 3),
            mobius: normalize_pair([spec.one(), spec.zero(), spec.zero(), spec.one()]),
            odd: false,
        };
        let mut table: BTreeMap<Vec<u64>, GroupElement> = BTreeMap::new();
        table.insert(matrix_key(&identity.matrix), identity.clone());
        let mut frontier = vec![identity];
        while let Some(e) = frontier.pop() {
            for g in &generators {
                let m = normalize_matrix(&e.matrix.matmul(&g.matrix));
                let key = matrix_key(&m);
                let odd = !e.odd;
                match table.get(&key) {
                    Some(existing) => {
                        if existing.odd != odd {
                            return Err(TheoremsError::Internal(
                                "group is not parity-graded".into(),
                            ));
                        }
                    }
                    None => {
                        let elem = GroupElement {
                            matrix: m,
                            mobius: mobius_mul(&e.mobius, &g.mobius),
                            odd,
                        };
                        table.insert(key, elem.clone());
                        frontier.push(elem);
                        if table.len() > GROUP_CAP {
                            return Err(TheoremsError::GroupTooLarge);
                        }
                    }
                }
            }
        }
        let elements: Vec<GroupElement> = table.into_values().collect();
        Ok(PerspectivityGroup {
            frame,
            generators,
            elements,
        })
    }

    pub fn frame(&self) -> &ConicFrame {
        &self.frame
    }

    pub fn generators(&self) -> &[Perspectivity] {
        &self.generators
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements of the even subgroup Ψ.
    pub fn psi(&self) -> Vec<&GroupElement> {
        self.elements.iter().filter(|e| !e.odd).collect()
    }

    pub fn psi_order(&self) -> usize {
        self.psi().len()
    }

    /// Multiplicative order of an element, matrices taken mod scalars.
    pub fn element_order(&self, e: &GroupElement) -> usize {
        let spec = e.matrix.spec().clone();
        let id = Matrix::identity(&spec, 3);
        let mut acc = e.matrix.clone();
        let mut n = 1;
        while normalize_matrix(&acc) != id {
            acc = normalize_matrix(&acc.matmul(&e.matrix));
            n += 1;
            assert!(n <= self.elements.len() + 1, "order overflow");
        }
        n
    }

    /// Orbit of a point under a subset of elements (which must be a group).
    pub fn orbit(&self, p: &ProjPoint, elements: &[&GroupElement]) -> Vec<ProjPoint> {
        let mut orbit: Vec<ProjPoint> = elements
            .iter()
            .map(|e| apply_point(&e.matrix, p))
            .collect();
        orbit.sort();
        orbit.dedup();
        orbit
    }

    /// Image of a point set under one element.
    pub fn image_of_set(&self, e: &GroupElement, set: &[ProjPoint]) -> Vec<ProjPoint> {
        let mut img: Vec<ProjPoint> = set.iter().map(|p| apply_point(&e.matrix, p)).collect();
        img.sort();
        img
    }

    /// Fixed points of an element on the conic, computed over the quadratic
    /// extension via its Möbius shadow. Returned in the original plane over
    /// GF(q²), together with the embedding used.
    pub fn fixed_conic_points_ext(
        &self,
        e: &GroupElement,
    ) -> (Vec<ProjPoint>, crate::field::FieldEmbedding) {
        let spec = self.frame.conic().spec().clone();
        let ext = FieldSpec::new(spec.p(), 2 * spec.k()).expect("extension in bounds");
        let emb = embed_subfield(&spec, &ext).expect("canonical embedding");
        let (a, b, c, d) = (
            emb.apply(&e.mobius[0]),
            emb.apply(&e.mobius[1]),
            emb.apply(&e.mobius[2]),
            emb.apply(&e.mobius[3]),
        );
        // fixed parameters: c y² + (d - a) y - b = 0, plus ∞ when c = 0
        let mut fixed_params: Vec<Option<FieldElement>> = Vec::new();
        for y in ext.enumerate() {
            let val = c
                .mul(&y.mul(&y))
                .add(&d.sub(&a).mul(&y))
                .sub(&b);
            if val.is_zero() {
                fixed_params.push(Some(y));
            }
        }
        if c.is_zero() {
            fixed_params.push(None); // the point at infinity of the parameter
        }
        // canonical conic points over the extension, mapped back through the
        // frame (whose entries are rational, acting on extension vectors)
        let from_rows: Vec<Vec<FieldElement>> = (0..3)
            .map(|i| {
                self.frame
                    .from_canonical_matrix()
                    .row(i)
                    .iter()
                    .map(|x| emb.apply(x))
                    .collect()
            })
            .collect();
        let from_ext = Matrix::from_rows(&ext, &from_rows);
        let points = fixed_params
            .into_iter()
            .map(|param| {
                let v = match param {
                    Some(y) => vec![y.mul(&y), y.clone(), ext.one()],
                    None => vec![ext.one(), ext.zero(), ext.zero()],
                };
                let w = from_ext.apply(&v);
                ProjPoint::new(w[0].clone(), w[1].clone(), w[2].clone()).expect("nonzero")
            })
            .collect();
        (points, emb)
    }
}

/// Structure of Φ by element orders, at desk scale: enough to separate the
/// classification cases that arise for nets (dihedral with p ∤ m versus the
/// elementary-abelian-by-C2 shape).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupClass {
    Cyclic { order: usize },
    ElementaryAbelian { p: u64, order: usize },
    Dihedral { half: usize },
    ElementaryAbelianByC2 { p: u64, half: usize },
    Other,
}

impl std::fmt::Display for GroupClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupClass::Cyclic { order } => write!(f, "cyclic of order {}", order),
            GroupClass::ElementaryAbelian { p, order } => {
                write!(f, "elementary abelian {}-group of order {}", p, order)
            }
            GroupClass::Dihedral { half } => write!(f, "dihedral of order {}", 2 * half),
            GroupClass::ElementaryAbelianByC2 { p, half } => write!(
                f,
                "elementary abelian {}-group of order {} extended by an involution",
                p, half
            ),
            GroupClass::Other => write!(f, "unclassified"),
        }
    }
}

pub fn classify_group(group: &PerspectivityGroup) -> GroupClass {
    let n = group.order();
    let psi: Vec<&GroupElement> = group.psi();
    let m = psi.len();
    let p = group.frame().conic().spec().p();
    let orders: Vec<usize> = group
        .elements()
        .iter()
        .map(|e| group.element_order(e))
        .collect();
    if orders.iter().any(|&o| o == n) {
        return GroupClass::Cyclic { order: n };
    }
    if orders.iter().all(|&o| o == 1 || o as u64 == p) {
        // abelian check on the full element list
        let abelian = is_abelian(group.elements());
        if abelian {
            return GroupClass::ElementaryAbelian { p, order: n };
        }
    }
    if n == 2 * m {
        let odd_all_involutions = group
            .elements()
            .iter()
            .zip(orders.iter())
            .filter(|(e, _)| e.odd)
            .all(|(_, &o)| o == 2);
        if odd_all_involutions {
            let psi_orders: Vec<usize> = psi.iter().map(|e| group.element_order(e)).collect();
            let psi_cyclic = psi_orders.iter().any(|&o| o == m);
            if psi_cyclic && m as u64 % p != 0 {
                return GroupClass::Dihedral { half: m };
            }
            let psi_elementary = psi_orders.iter().all(|&o| o == 1 || o as u64 == p);
            let psi_elems: Vec<GroupElement> = psi.iter().map(|e| (*e).clone()).collect();
            if psi_elementary && is_abelian(&psi_elems) {
                return GroupClass::ElementaryAbelianByC2 { p, half: m };
            }
            if psi_cyclic {
                return GroupClass::Dihedral { half: m };
            }
        }
    }
    GroupClass::Other
}

fn is_abelian(elements: &[GroupElement]) -> bool {
    for (i, x) in elements.iter().enumerate() {
        for y in elements.iter().skip(i + 1) {
            let xy = normalize_matrix(&x.matrix.matmul(&y.matrix));
            let yx = normalize_matrix(&y.matrix.matmul(&x.matrix));
            if xy != yx {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::all_points;

    #[test]
    fn identity_mobius_lifts_to_identity() {
        let f = FieldSpec::new(11, 1).unwrap();
        let lifted = lift_mobius(&f, &f.one(), &f.zero(), &f.zero(), &f.one());
        assert_eq!(normalize_matrix(&lifted), Matrix::identity(&f, 3));
    }

    #[test]
    fn involution_and_pairing() {
        let f = FieldSpec::new(11, 1).unwrap();
        let conic = Conic::from_ints(&f, &[0, -1, 0, 0, 0, 1]); // XZ - Y²
        let frame = ConicFrame::new(&conic).unwrap();
        let mut rng = crate::rng::SplitMix64::new(0xC0DE);
        let pts = all_points(&f);
        let conic_pts = conic.rational_points();
        let mut tested = 0;
        while tested < 20 {
            let q = &pts[rng.below(pts.len() as u64) as usize];
            if conic.contains(q) {
                continue;
            }
            tested += 1;
            let phi = perspectivity_in_frame(&frame, q).unwrap();
            // φ² = 1 mod scalars
            let sq = normalize_matrix(&phi.matrix.matmul(&phi.matrix));
            assert_eq!(sq, Matrix::identity(&f, 3));
            // conic point set preserved; pairs are the chords through q
            for c1 in &conic_pts {
                let image = phi.apply(c1);
                assert!(conic.contains(&image));
                if &image != c1 {
                    let chord = crate::geometry::line_through(c1, &image).unwrap();
                    assert!(q.on(&chord), "pairing line must pass through the center");
                } else {
                    // fixed conic points are the tangency points from q
                    let t = conic.tangent_line(c1).unwrap();
                    assert!(q.on(&t));
                }
            }
        }
    }

    #[test]
    fn center_on_conic_rejected() {
        let f = FieldSpec::new(7, 1).unwrap();
        let conic = Conic::from_ints(&f, &[0, -1, 0, 0, 0, 1]);
        let on = conic.rational_points()[0].clone();
        assert!(matches!(
            perspectivity_from(&conic, &on),
            Err(TheoremsError::OnConic)
        ));
    }

    #[test]
    fn nucleus_rejected_char2() {
        let f8 = FieldSpec::new(2, 3).unwrap();
        let conic = Conic::from_ints(&f8, &[0, 1, 0, 0, 0, 1]); // Y² + XZ
        let nucleus = conic_nucleus(&conic).unwrap();
        assert!(matches!(
            perspectivity_from(&conic, &nucleus),
            Err(TheoremsError::IsNucleus)
        ));
        // other off-conic points are fine
        let q = all_points(&f8)
            .into_iter()
            .find(|p| !conic.contains(p) && *p != nucleus)
            .unwrap();
        let phi = perspectivity_from(&conic, &q).unwrap();
        let sq = normalize_matrix(&phi.matrix.matmul(&phi.matrix));
        assert_eq!(sq, Matrix::identity(&f8, 3));
    }
}
