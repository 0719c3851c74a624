//! Points, lines and incidence in PG(2,q), plus the PG(3,q) machinery used
//! by the subplane projection construction. Homogeneous tuples are
//! normalized so the first nonzero coordinate is 1, which makes equality and
//! ordering plain coordinate comparisons. Affine points are projective
//! points with last coordinate 1; there is no separate affine type.

use std::cmp::Ordering;
use std::fmt;

use crate::field::{FieldElement, FieldSpec};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    ZeroVector,
    SpecMismatch,
    EqualPoints,
    EqualLines,
    PointEqualsCenter,
    CenterOnScreen,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            GeometryError::ZeroVector => "all-zero homogeneous vector",
            GeometryError::SpecMismatch => "coordinates from different fields",
            GeometryError::EqualPoints => "points coincide",
            GeometryError::EqualLines => "lines coincide",
            GeometryError::PointEqualsCenter => "point equals projection center",
            GeometryError::CenterOnScreen => "projection center lies on the screen plane",
        };
        f.write_str(msg)
    }
}

impl std::error::Error for GeometryError {}

fn normalize(coords: &mut [FieldElement]) -> Result<(), GeometryError> {
    let lead = coords.iter().position(|c| !c.is_zero());
    let Some(lead) = lead else {
        return Err(GeometryError::ZeroVector);
    };
    let inv = coords[lead].inv().expect("nonzero");
    for c in coords.iter_mut() {
        *c = c.mul(&inv);
    }
    Ok(())
}

fn check_same_spec(coords: &[FieldElement]) -> Result<(), GeometryError> {
    let spec = coords[0].spec();
    if coords.iter().all(|c| c.spec() == spec) {
        Ok(())
    } else {
        Err(GeometryError::SpecMismatch)
    }
}

/// A point of PG(2,q), normalized.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjPoint {
    coords: [FieldElement; 3],
}

/// A line of PG(2,q) as a normalized dual triple; `P` is on `[u:v:w]` iff
/// `ux + vy + wz = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjLine {
    coeffs: [FieldElement; 3],
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:?}:{:?}:{:?})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?}:{:?}:{:?}]",
            self.coeffs[0], self.coeffs[1], self.coeffs[2]
        )
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords
            .iter()
            .map(|c| c.index())
            .cmp(other.coords.iter().map(|c| c.index()))
    }
}

impl ProjPoint {
    pub fn new(
        x: FieldElement,
        y: FieldElement,
        z: FieldElement,
    ) -> Result<ProjPoint, GeometryError> {
        let mut coords = [x, y, z];
        check_same_spec(&coords)?;
        normalize(&mut coords)?;
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(spec: &FieldSpec, x: u64, y: u64, z: u64) -> ProjPoint {
        ProjPoint::new(spec.from_int(x), spec.from_int(y), spec.from_int(z))
            .expect("nonzero coordinates")
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.coords
    }

    pub fn x(&self) -> &FieldElement {
        &self.coords[0]
    }

    pub fn y(&self) -> &FieldElement {
        &self.coords[1]
    }

    pub fn z(&self) -> &FieldElement {
        &self.coords[2]
    }

    pub fn spec(&self) -> &FieldSpec {
        self.coords[0].spec()
    }

    /// Affine in the chart z ≠ 0 (off the line Z = 0).
    pub fn is_affine(&self) -> bool {
        !self.coords[2].is_zero()
    }

    /// Dehomogenized coordinates (x/z, y/z); None on the line Z = 0.
    pub fn affine_xy(&self) -> Option<(FieldElement, FieldElement)> {
        let z_inv = self.coords[2].inv().ok()?;
        Some((self.coords[0].mul(&z_inv), self.coords[1].mul(&z_inv)))
    }

    pub fn on(&self, line: &ProjLine) -> bool {
        let mut acc = self.spec().zero();
        for (c, l) in self.coords.iter().zip(line.coeffs.iter()) {
            acc = acc.add(&c.mul(l));
        }
        acc.is_zero()
    }
}

impl PartialOrd for ProjLine {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjLine {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .iter()
            .map(|c| c.index())
            .cmp(other.coeffs.iter().map(|c| c.index()))
    }
}

impl ProjLine {
    pub fn new(
        u: FieldElement,
        v: FieldElement,
        w: FieldElement,
    ) -> Result<ProjLine, GeometryError> {
        let mut coeffs = [u, v, w];
        check_same_spec(&coeffs)?;
        normalize(&mut coeffs)?;
        Ok(ProjLine { coeffs })
    }

    pub fn from_ints(spec: &FieldSpec, u: u64, v: u64, w: u64) -> ProjLine {
        ProjLine::new(spec.from_int(u), spec.from_int(v), spec.from_int(w))
            .expect("nonzero coefficients")
    }

    pub fn coeffs(&self) -> &[FieldElement; 3] {
        &self.coeffs
    }

    pub fn spec(&self) -> &FieldSpec {
        self.coeffs[0].spec()
    }

    /// The q+1 points incident with the line, in enumeration order.
    pub fn points(&self) -> Vec<ProjPoint> {
        let spec = self.spec();
        let (p, q) = span_of_line(self);
        let mut pts: Vec<ProjPoint> = Vec::with_capacity(spec.order() as usize + 1);
        pts.push(q.clone());
        for t in spec.enumerate() {
            let coords = [
                p.coords[0].add(&t.mul(&q.coords[0])),
                p.coords[1].add(&t.mul(&q.coords[1])),
                p.coords[2].add(&t.mul(&q.coords[2])),
            ];
            pts.push(
                ProjPoint::new(coords[0].clone(), coords[1].clone(), coords[2].clone())
                    .expect("point on line"),
            );
        }
        pts.sort();
        pts.dedup();
        pts
    }
}

fn cross(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> [FieldElement; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

/// The unique line through two distinct points.
pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, GeometryError> {
    if p == q {
        return Err(GeometryError::EqualPoints);
    }
    let c = cross(&p.coords, &q.coords);
    ProjLine::new(c[0].clone(), c[1].clone(), c[2].clone())
}

/// The unique common point of two distinct lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint, GeometryError> {
    if l == m {
        return Err(GeometryError::EqualLines);
    }
    let c = cross(&l.coeffs, &m.coeffs);
    ProjPoint::new(c[0].clone(), c[1].clone(), c[2].clone())
}

/// Two independent points spanning a line.
fn span_of_line(l: &ProjLine) -> (ProjPoint, ProjPoint) {
    let spec = l.spec();
    // intersect with two coordinate lines that differ from l
    let mut found: Vec<ProjPoint> = Vec::new();
    for axis in 0..3 {
        let mut c = [spec.zero(), spec.zero(), spec.zero()];
        c[axis] = spec.one();
        if let Ok(axis_line) = ProjLine::new(c[0].clone(), c[1].clone(), c[2].clone()) {
            if axis_line != *l {
                if let Ok(pt) = meet(l, &axis_line) {
                    if !found.contains(&pt) {
                        found.push(pt);
                    }
                }
            }
        }
        if found.len() == 2 {
            break;
        }
    }
    assert!(found.len() == 2, "line spans two coordinate sections");
    (found[0].clone(), found[1].clone())
}

/// True iff all points lie on a common line; singletons and empty sets are
/// vacuously collinear.
pub fn collinear(points: &[ProjPoint]) -> bool {
    let mut distinct: Vec<&ProjPoint> = Vec::new();
    for p in points {
        if !distinct.contains(&&*p) {
            distinct.push(p);
        }
        if distinct.len() == 2 {
            break;
        }
    }
    if distinct.len() < 2 {
        return true;
    }
    let line = line_through(distinct[0], distinct[1]).expect("distinct points");
    points.iter().all(|p| p.on(&line))
}

/// All q^2+q+1 points of PG(2,q) in the global enumeration order.
pub fn all_points(spec: &FieldSpec) -> Vec<ProjPoint> {
    let elems = spec.enumerate();
    let mut pts = Vec::with_capacity((spec.order() * spec.order() + spec.order() + 1) as usize);
    // normalized reps in lex order: (0:0:1), (0:1:*), (1:*:*)
    pts.push(ProjPoint::from_ints(spec, 0, 0, 1));
    for z in &elems {
        pts.push(ProjPoint::new(spec.zero(), spec.one(), z.clone()).unwrap());
    }
    for y in &elems {
        for z in &elems {
            pts.push(ProjPoint::new(spec.one(), y.clone(), z.clone()).unwrap());
        }
    }
    pts
}

/// All lines of PG(2,q), dual enumeration order.
pub fn all_lines(spec: &FieldSpec) -> Vec<ProjLine> {
    let elems = spec.enumerate();
    let mut lines = Vec::new();
    lines.push(ProjLine::from_ints(spec, 0, 0, 1));
    for w in &elems {
        lines.push(ProjLine::new(spec.zero(), spec.one(), w.clone()).unwrap());
    }
    for v in &elems {
        for w in &elems {
            lines.push(ProjLine::new(spec.one(), v.clone(), w.clone()).unwrap());
        }
    }
    lines
}

// ---------------------------------------------------------------------------
// PG(3,q)
// ---------------------------------------------------------------------------

/// A point of PG(3,q), normalized.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjPoint3 {
    coords: [FieldElement; 4],
}

/// A plane of PG(3,q) as a normalized dual 4-tuple.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjPlane3 {
    coeffs: [FieldElement; 4],
}

impl fmt::Debug for ProjPoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:?}:{:?}:{:?}:{:?})",
            self.coords[0], self.coords[1], self.coords[2], self.coords[3]
        )
    }
}

impl fmt::Debug for ProjPlane3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?}:{:?}:{:?}:{:?}]",
            self.coeffs[0], self.coeffs[1], self.coeffs[2], self.coeffs[3]
        )
    }
}

impl ProjPoint3 {
    pub fn new(coords: [FieldElement; 4]) -> Result<ProjPoint3, GeometryError> {
        let mut coords = coords;
        check_same_spec(&coords)?;
        normalize(&mut coords)?;
        Ok(ProjPoint3 { coords })
    }

    pub fn coords(&self) -> &[FieldElement; 4] {
        &self.coords
    }

    pub fn spec(&self) -> &FieldSpec {
        self.coords[0].spec()
    }

    pub fn on(&self, plane: &ProjPlane3) -> bool {
        let mut acc = self.spec().zero();
        for (c, l) in self.coords.iter().zip(plane.coeffs.iter()) {
            acc = acc.add(&c.mul(l));
        }
        acc.is_zero()
    }
}

impl ProjPlane3 {
    pub fn new(coeffs: [FieldElement; 4]) -> Result<ProjPlane3, GeometryError> {
        let mut coeffs = coeffs;
        check_same_spec(&coeffs)?;
        normalize(&mut coeffs)?;
        Ok(ProjPlane3 { coeffs })
    }

    pub fn coeffs(&self) -> &[FieldElement; 4] {
        &self.coeffs
    }

    pub fn spec(&self) -> &FieldSpec {
        self.coeffs[0].spec()
    }
}

/// Three points of PG(3,q) on a common line.
pub fn collinear3(a: &ProjPoint3, b: &ProjPoint3, c: &ProjPoint3) -> bool {
    let spec = a.spec();
    let rows = vec![
        a.coords.to_vec(),
        b.coords.to_vec(),
        c.coords.to_vec(),
    ];
    Matrix::from_rows(spec, &rows).rank() <= 2
}

/// Projection of `p` from `center` onto `screen`: the intersection of the
/// line (center, p) with the screen plane.
pub fn project_from_point(
    center: &ProjPoint3,
    p: &ProjPoint3,
    screen: &ProjPlane3,
) -> Result<ProjPoint3, GeometryError> {
    if p == center {
        return Err(GeometryError::PointEqualsCenter);
    }
    if center.on(screen) {
        return Err(GeometryError::CenterOnScreen);
    }
    let spec = p.spec();
    let dot = |pt: &ProjPoint3| -> FieldElement {
        let mut acc = spec.zero();
        for (c, l) in pt.coords.iter().zip(screen.coeffs.iter()) {
            acc = acc.add(&c.mul(l));
        }
        acc
    };
    let pi_p = dot(p);
    let pi_c = dot(center);
    // X = <screen, p> * center - <screen, center> * p lies on the line and the screen
    let coords = [
        pi_p.mul(&center.coords[0]).sub(&pi_c.mul(&p.coords[0])),
        pi_p.mul(&center.coords[1]).sub(&pi_c.mul(&p.coords[1])),
        pi_p.mul(&center.coords[2]).sub(&pi_c.mul(&p.coords[2])),
        pi_p.mul(&center.coords[3]).sub(&pi_c.mul(&p.coords[3])),
    ];
    ProjPoint3::new(coords).map_err(|_| GeometryError::PointEqualsCenter)
}

/// A linear chart from the points of a plane of PG(3,q) onto PG(2,q).
///
/// The chart keeps the three coordinate positions of smallest index whose
/// restriction to the plane is invertible, i.e. it drops the largest index
/// at which the plane has a nonzero coefficient.
#[derive(Clone, Debug)]
pub struct PlaneChart {
    screen: ProjPlane3,
    dropped: usize,
}

impl PlaneChart {
    pub fn new(screen: &ProjPlane3) -> PlaneChart {
        let dropped = (0..4)
            .rev()
            .find(|&i| !screen.coeffs[i].is_zero())
            .expect("plane has a nonzero coefficient");
        PlaneChart {
            screen: screen.clone(),
            dropped,
        }
    }

    pub fn screen(&self) -> &ProjPlane3 {
        &self.screen
    }

    /// Map a point on the screen into PG(2,q).
    pub fn to_plane(&self, p: &ProjPoint3) -> ProjPoint {
        debug_assert!(p.on(&self.screen), "point not on the chart's plane");
        let kept: Vec<&FieldElement> = (0..4)
            .filter(|&i| i != self.dropped)
            .map(|i| &p.coords[i])
            .collect();
        ProjPoint::new(kept[0].clone(), kept[1].clone(), kept[2].clone())
            .expect("screen point is nonzero on kept coordinates")
    }

    /// Inverse chart: reinsert the dropped coordinate from the plane equation.
    pub fn from_plane(&self, p: &ProjPoint) -> ProjPoint3 {
        let spec = p.spec();
        let mut coords = vec![spec.zero(); 4];
        let mut kept_iter = p.coords().iter();
        for (i, c) in coords.iter_mut().enumerate() {
            if i != self.dropped {
                *c = kept_iter.next().unwrap().clone();
            }
        }
        // solve screen . coords = 0 for the dropped coordinate
        let mut acc = spec.zero();
        for i in 0..4 {
            if i != self.dropped {
                acc = acc.add(&coords[i].mul(&self.screen.coeffs[i]));
            }
        }
        let val = acc
            .neg()
            .div(&self.screen.coeffs[self.dropped])
            .expect("dropped coefficient nonzero");
        coords[self.dropped] = val;
        ProjPoint3::new([
            coords[0].clone(),
            coords[1].clone(),
            coords[2].clone(),
            coords[3].clone(),
        ])
        .expect("nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> FieldSpec {
        FieldSpec::new(7, 1).unwrap()
    }

    #[test]
    fn line_through_examples() {
        let f = f7();
        let p = ProjPoint::from_ints(&f, 1, 0, 0);
        let q = ProjPoint::from_ints(&f, 0, 1, 0);
        assert_eq!(line_through(&p, &q).unwrap(), ProjLine::from_ints(&f, 0, 0, 1));

        let p = ProjPoint::from_ints(&f, 0, 0, 1);
        let q = ProjPoint::from_ints(&f, 1, 1, 1);
        let l = line_through(&p, &q).unwrap();
        // both satisfy X - Y = 0
        assert_eq!(l, ProjLine::new(f.one(), f.one().neg(), f.zero()).unwrap());

        assert_eq!(
            line_through(&p, &p).unwrap_err(),
            GeometryError::EqualPoints
        );
    }

    #[test]
    fn meet_examples() {
        let f = f7();
        let l = ProjLine::from_ints(&f, 0, 0, 1);
        let m = ProjLine::from_ints(&f, 0, 1, 0);
        assert_eq!(meet(&l, &m).unwrap(), ProjPoint::from_ints(&f, 1, 0, 0));
        let l2 = ProjLine::from_ints(&f, 1, 0, 0);
        assert_eq!(meet(&l2, &m).unwrap(), ProjPoint::from_ints(&f, 0, 0, 1));
        assert_eq!(meet(&l, &l).unwrap_err(), GeometryError::EqualLines);
    }

    #[test]
    fn collinear_examples() {
        let f = f7();
        let a = ProjPoint::from_ints(&f, 1, 0, 0);
        let b = ProjPoint::from_ints(&f, 0, 1, 0);
        let c = ProjPoint::from_ints(&f, 1, 1, 0);
        let d = ProjPoint::from_ints(&f, 0, 0, 1);
        assert!(collinear(&[a.clone(), b.clone(), c.clone()]));
        assert!(!collinear(&[a.clone(), b.clone(), d]));
        assert!(collinear(&[a]));
    }

    #[test]
    fn incidence_counts_small_q() {
        for (p, k) in [(2u64, 1usize), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = FieldSpec::new(p, k).unwrap();
            let q = f.order();
            let pts = all_points(&f);
            let lines = all_lines(&f);
            let expected = (q * q + q + 1) as usize;
            assert_eq!(pts.len(), expected);
            assert_eq!(lines.len(), expected);
            for l in &lines {
                assert_eq!(l.points().len(), (q + 1) as usize, "q={}", q);
            }
        }
    }

    #[test]
    fn duality_exhaustive_small() {
        for (p, k) in [(2u64, 1usize), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = FieldSpec::new(p, k).unwrap();
            let pts = all_points(&f);
            for (i, a) in pts.iter().enumerate() {
                for b in pts.iter().skip(i + 1) {
                    let l = line_through(a, b).unwrap();
                    assert!(a.on(&l) && b.on(&l));
                }
            }
            let lines = all_lines(&f);
            for (i, l) in lines.iter().enumerate() {
                for m in lines.iter().skip(i + 1) {
                    let x = meet(l, m).unwrap();
                    assert!(x.on(l) && x.on(m));
                }
            }
        }
    }

    #[test]
    fn projection_examples() {
        let f = f7();
        let center = ProjPoint3::new([f.zero(), f.zero(), f.zero(), f.one()]).unwrap();
        let p = ProjPoint3::new([f.one(), f.zero(), f.zero(), f.one()]).unwrap();
        let screen = ProjPlane3::new([f.zero(), f.zero(), f.zero(), f.one()]).unwrap();
        let img = project_from_point(&center, &p, &screen).unwrap();
        assert_eq!(
            img,
            ProjPoint3::new([f.one(), f.zero(), f.zero(), f.zero()]).unwrap()
        );

        // central projection drops the last coordinate for generic points
        let p2 = ProjPoint3::new([f.from_int(3), f.from_int(2), f.from_int(6), f.from_int(4)])
            .unwrap();
        let img2 = project_from_point(&center, &p2, &screen).unwrap();
        assert_eq!(
            img2,
            ProjPoint3::new([f.from_int(3), f.from_int(2), f.from_int(6), f.zero()]).unwrap()
        );

        assert_eq!(
            project_from_point(&center, &center, &screen).unwrap_err(),
            GeometryError::PointEqualsCenter
        );
        let on_screen = ProjPoint3::new([f.one(), f.zero(), f.zero(), f.zero()]).unwrap();
        assert_eq!(
            project_from_point(&on_screen, &p, &screen).unwrap_err(),
            GeometryError::CenterOnScreen
        );
    }

    #[test]
    fn chart_round_trip() {
        let f = f7();
        let screen = ProjPlane3::new([f.one(), f.zero(), f.zero(), f.from_int(3)]).unwrap();
        let chart = PlaneChart::new(&screen);
        // 20 points on the screen via the inverse chart
        let mut count = 0;
        for pt in all_points(&f) {
            let lifted = chart.from_plane(&pt);
            assert!(lifted.on(&screen));
            assert_eq!(chart.to_plane(&lifted), pt);
            count += 1;
            if count == 20 {
                break;
            }
        }
        // images of non-collinear points stay non-collinear (chart is linear)
        let w0 = ProjPlane3::new([f.zero(), f.zero(), f.zero(), f.one()]).unwrap();
        let chart0 = PlaneChart::new(&w0);
        let a = ProjPoint3::new([f.one(), f.zero(), f.zero(), f.zero()]).unwrap();
        let b = ProjPoint3::new([f.zero(), f.one(), f.zero(), f.zero()]).unwrap();
        let c = ProjPoint3::new([f.zero(), f.zero(), f.one(), f.zero()]).unwrap();
        let img = [chart0.to_plane(&a), chart0.to_plane(&b), chart0.to_plane(&c)];
        assert!(!collinear(&img));
    }

    #[test]
    fn chart_drops_w_for_infinity_plane() {
        let f = f7();
        let w0 = ProjPlane3::new([f.zero(), f.zero(), f.zero(), f.one()]).unwrap();
        let chart = PlaneChart::new(&w0);
        let p = ProjPoint3::new([f.from_int(2), f.from_int(5), f.one(), f.zero()]).unwrap();
        assert_eq!(chart.to_plane(&p), ProjPoint::from_ints(&f, 2, 5, 1));
    }
}
