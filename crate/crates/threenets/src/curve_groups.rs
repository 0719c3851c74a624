//! Abelian groups on plane curves: the chord-tangent law on a non-singular
//! cubic, and the geometric group on (irreducible conic) ∪ (line) defined on
//! the conic points off the line. Both are built by brute enumeration and
//! their axioms are re-verified exhaustively at construction, so any
//! far-field singularity or construction bug surfaces immediately.
//!
//! Subgroups and coset triples (a+H, b+H, c+H with a+b+c = 0') feed the
//! net constructors.

use std::collections::BTreeSet;
use std::fmt;

use crate::curves::{is_irreducible_conic, is_nonsingular_cubic, Conic, Cubic};
use crate::field::FieldElement;
use crate::geometry::{line_through, meet, ProjLine, ProjPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    NotOnCurve,
    NotOnConic,
    PointOnLine,
    SingularCurve,
    ReducibleConic,
    EmptyCurve,
    NoSuchSubgroup,
    IndexTooSmall,
    AxiomFailure(String),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::NotOnCurve => write!(f, "point not on the cubic"),
            GroupError::NotOnConic => write!(f, "point not on the conic"),
            GroupError::PointOnLine => write!(f, "point lies on the excluded line"),
            GroupError::SingularCurve => write!(f, "cubic is singular"),
            GroupError::ReducibleConic => write!(f, "conic is not irreducible"),
            GroupError::EmptyCurve => write!(f, "curve has no rational points"),
            GroupError::NoSuchSubgroup => write!(f, "no subgroup of the requested order"),
            GroupError::IndexTooSmall => write!(f, "subgroup index must exceed two"),
            GroupError::AxiomFailure(m) => write!(f, "group axiom failure: {}", m),
        }
    }
}

impl std::error::Error for GroupError {}

/// Parameter (s:t) of `x` on the span of `p0`, `p1`, i.e. x = s*p0 + t*p1.
fn span_parameter(
    p0: &ProjPoint,
    p1: &ProjPoint,
    x: &ProjPoint,
) -> Option<(FieldElement, FieldElement)> {
    let _spec = p0.spec();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let a = &p0.coords()[i];
            let b = &p1.coords()[i];
            let c = &p0.coords()[j];
            let d = &p1.coords()[j];
            let det = a.mul(d).sub(&b.mul(c));
            if det.is_zero() {
                continue;
            }
            let inv = det.inv().unwrap();
            let xi = &x.coords()[i];
            let xj = &x.coords()[j];
            let s = d.mul(xi).sub(&b.mul(xj)).mul(&inv);
            let t = a.mul(xj).sub(&c.mul(xi)).mul(&inv);
            // confirm the remaining coordinate
            let k = 3 - i - j;
            let rebuilt = s.mul(&p0.coords()[k]).add(&t.mul(&p1.coords()[k]));
            if rebuilt != x.coords()[k] {
                return None;
            }
            if s.is_zero() && t.is_zero() {
                return None;
            }
            return Some((s, t));
        }
    }
    None
}

/// Divide the binary form `g` by the linear factor vanishing at root (a:b);
/// panics if (a:b) is not a root.
fn binary_divide_root(
    g: &[FieldElement],
    root: &(FieldElement, FieldElement),
) -> Vec<FieldElement> {
    let spec = g[0].spec();
    let d = g.len() - 1;
    let (a, b) = root;
    if !b.is_zero() {
        // factor b*s - a*t
        let binv = b.inv().unwrap();
        let mut q = Vec::with_capacity(d);
        let mut prev = spec.zero();
        for gi in g.iter().take(d) {
            let qi = gi.add(&a.mul(&prev)).mul(&binv);
            q.push(qi.clone());
            prev = qi;
        }
        let remainder = g[d].add(&a.mul(&prev));
        assert!(remainder.is_zero(), "claimed root is not a root");
        q
    } else {
        // root (1:0): factor is t
        assert!(g[0].is_zero(), "claimed root is not a root");
        g[1..].to_vec()
    }
}

fn point_from_parameter(
    p0: &ProjPoint,
    p1: &ProjPoint,
    s: &FieldElement,
    t: &FieldElement,
) -> ProjPoint {
    let coords: Vec<FieldElement> = (0..3)
        .map(|i| s.mul(&p0.coords()[i]).add(&t.mul(&p1.coords()[i])))
        .collect();
    ProjPoint::new(coords[0].clone(), coords[1].clone(), coords[2].clone())
        .expect("parameter is nonzero")
}

/// Third intersection point of the cubic with the line through P and Q
/// (the tangent at P when P = Q), multiplicities handled exactly by
/// restricting the cubic to the line and dividing out the known roots.
pub fn third_intersection(
    curve: &Cubic,
    p: &ProjPoint,
    q: &ProjPoint,
) -> Result<ProjPoint, GroupError> {
    if !curve.contains(p) || !curve.contains(q) {
        return Err(GroupError::NotOnCurve);
    }
    let line = if p == q {
        curve.tangent_line(p).map_err(|_| GroupError::SingularCurve)?
    } else {
        line_through(p, q).expect("distinct points")
    };
    // span the line by p and a second point
    let other = line
        .points()
        .into_iter()
        .find(|x| x != p)
        .expect("a line has more than one point");
    let g = curve.restrict_to_span(p, &other);
    assert!(
        g.iter().any(|c| !c.is_zero()),
        "line contained in a cubic used for the group law"
    );
    let spec = p.spec();
    // p sits at parameter (1:0)
    let g1 = binary_divide_root(&g, &(spec.one(), spec.zero()));
    let g2 = if p == q {
        binary_divide_root(&g1, &(spec.one(), spec.zero()))
    } else {
        let qp = span_parameter(p, &other, q).expect("q on the line");
        binary_divide_root(&g1, &qp)
    };
    // g2 is linear: root is (g2[1] : -g2[0])
    let s = g2[1].clone();
    let t = g2[0].neg();
    Ok(point_from_parameter(p, &other, &s, &t))
}

/// All rational points of a cubic, in enumeration order. An empty result is
/// reported through `CubicGroup::new`, never silently.
pub fn enumerate_points(curve: &Cubic) -> Vec<ProjPoint> {
    curve.rational_points()
}

/// The abelian group on a non-singular cubic with chosen identity O.
///
/// 0' is the third intersection of the tangent at O with the curve; three
/// distinct points are collinear exactly when they sum to 0'. When O is an
/// inflection point 0' = O.
#[derive(Clone, Debug)]
pub struct CubicGroup {
    curve: Cubic,
    o: ProjPoint,
    zero_prime: ProjPoint,
    points: Vec<ProjPoint>,
}

impl CubicGroup {
    pub fn new(curve: &Cubic, o: &ProjPoint) -> Result<CubicGroup, GroupError> {
        if !is_nonsingular_cubic(curve) {
            return Err(GroupError::SingularCurve);
        }
        if !curve.contains(o) {
            return Err(GroupError::NotOnCurve);
        }
        let points = enumerate_points(curve);
        if points.is_empty() {
            return Err(GroupError::EmptyCurve);
        }
        let zero_prime = third_intersection(curve, o, o)?;
        let group = CubicGroup {
            curve: curve.clone(),
            o: o.clone(),
            zero_prime,
            points,
        };
        group.verify_axioms()?;
        Ok(group)
    }

    pub fn curve(&self) -> &Cubic {
        &self.curve
    }

    pub fn identity(&self) -> &ProjPoint {
        &self.o
    }

    pub fn zero_prime(&self) -> &ProjPoint {
        &self.zero_prime
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn order(&self) -> usize {
        self.points.len()
    }

    /// P ⊕ Q through the chord-tangent composition with identity O.
    pub fn add(&self, p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint, GroupError> {
        let r = third_intersection(&self.curve, p, q)?;
        third_intersection(&self.curve, &self.o, &r)
    }

    pub fn neg(&self, p: &ProjPoint) -> Result<ProjPoint, GroupError> {
        third_intersection(&self.curve, p, &self.zero_prime)
    }

    /// n-fold sum of `p`.
    pub fn scalar_mul(&self, n: u64, p: &ProjPoint) -> Result<ProjPoint, GroupError> {
        let mut acc = self.o.clone();
        for _ in 0..n {
            acc = self.add(&acc, p)?;
        }
        Ok(acc)
    }

    pub fn element_order(&self, p: &ProjPoint) -> Result<u64, GroupError> {
        let mut acc = p.clone();
        let mut n = 1u64;
        while acc != self.o {
            acc = self.add(&acc, p)?;
            n += 1;
            if n as usize > self.points.len() {
                return Err(GroupError::AxiomFailure("order exceeds group size".into()));
            }
        }
        Ok(n)
    }

    /// Whether O is a flex (then 0' = O and coset sums are taken to 0).
    pub fn identity_is_flex(&self) -> bool {
        self.zero_prime == self.o
    }

    fn verify_axioms(&self) -> Result<(), GroupError> {
        verify_abelian(self.points.len(), &|i, j| {
            self.add(&self.points[i], &self.points[j]).unwrap()
        }, &self.points, &self.o)
    }
}

/// The group on the points of an irreducible conic off a fixed line.
///
/// a + b: the chord through a and b (tangent if equal) meets the line in P;
/// the result is the second intersection of OP with the conic, or O itself
/// when OP is the tangent at O.
#[derive(Clone, Debug)]
pub struct ConicLineGroup {
    conic: Conic,
    ell: ProjLine,
    o: ProjPoint,
    points: Vec<ProjPoint>,
}

impl ConicLineGroup {
    pub fn new(conic: &Conic, ell: &ProjLine, o: &ProjPoint) -> Result<ConicLineGroup, GroupError> {
        if !is_irreducible_conic(conic) {
            return Err(GroupError::ReducibleConic);
        }
        if !conic.contains(o) {
            return Err(GroupError::NotOnConic);
        }
        if o.on(ell) {
            return Err(GroupError::PointOnLine);
        }
        let points: Vec<ProjPoint> = conic
            .rational_points()
            .into_iter()
            .filter(|p| !p.on(ell))
            .collect();
        let group = ConicLineGroup {
            conic: conic.clone(),
            ell: ell.clone(),
            o: o.clone(),
            points,
        };
        group.verify_axioms()?;
        Ok(group)
    }

    pub fn conic(&self) -> &Conic {
        &self.conic
    }

    pub fn line(&self) -> &ProjLine {
        &self.ell
    }

    pub fn identity(&self) -> &ProjPoint {
        &self.o
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn order(&self) -> usize {
        self.points.len()
    }

    /// Second intersection of the line through `a` and `b` with the conic
    /// (`a` itself if the line is tangent there). `b` must not be on the conic
    /// or must equal the chord structure; used with chord/line arguments.
    fn second_intersection(&self, on_conic: &ProjPoint, other: &ProjPoint) -> ProjPoint {
        let g = self.conic.restrict_to_span(on_conic, other);
        let spec = on_conic.spec();
        let g1 = binary_divide_root(&g, &(spec.one(), spec.zero()));
        // g1 linear: root (g1[1] : -g1[0])
        point_from_parameter(on_conic, other, &g1[1].clone(), &g1[0].neg())
    }

    pub fn add(&self, a: &ProjPoint, b: &ProjPoint) -> Result<ProjPoint, GroupError> {
        if !self.conic.contains(a) || !self.conic.contains(b) {
            return Err(GroupError::NotOnConic);
        }
        if a.on(&self.ell) || b.on(&self.ell) {
            return Err(GroupError::PointOnLine);
        }
        let chord = if a == b {
            self.conic.tangent_line(a).expect("smooth conic point")
        } else {
            line_through(a, b).expect("distinct")
        };
        let p = meet(&chord, &self.ell).expect("chord differs from the line");
        // line OP; if P = O impossible since O off ell
        let result = self.second_intersection(&self.o, &p);
        debug_assert!(self.conic.contains(&result));
        if result.on(&self.ell) {
            return Err(GroupError::AxiomFailure(
                "sum landed on the excluded line".into(),
            ));
        }
        Ok(result)
    }

    pub fn neg(&self, a: &ProjPoint) -> Result<ProjPoint, GroupError> {
        // -a is the element with a + (-a) = O: the chord through a and -a
        // meets ell where the tangent at O does
        let tangent_o = self.conic.tangent_line(&self.o).expect("smooth");
        let p = meet(&tangent_o, &self.ell).expect("O off ell");
        Ok(self.second_intersection(a, &p))
    }

    pub fn element_order(&self, p: &ProjPoint) -> Result<u64, GroupError> {
        let mut acc = p.clone();
        let mut n = 1u64;
        while acc != self.o {
            acc = self.add(&acc, p)?;
            n += 1;
            if n as usize > self.points.len() {
                return Err(GroupError::AxiomFailure("order exceeds group size".into()));
            }
        }
        Ok(n)
    }

    fn verify_axioms(&self) -> Result<(), GroupError> {
        verify_abelian(self.points.len(), &|i, j| {
            self.add(&self.points[i], &self.points[j]).unwrap()
        }, &self.points, &self.o)
    }
}

/// Exhaustive abelian-group check for carriers up to 40 points; identity,
/// inverse and closure stay exhaustive above that, with sampled
/// associativity.
fn verify_abelian(
    n: usize,
    add: &dyn Fn(usize, usize) -> ProjPoint,
    points: &[ProjPoint],
    identity: &ProjPoint,
) -> Result<(), GroupError> {
    let index_of = |p: &ProjPoint| -> Result<usize, GroupError> {
        points
            .iter()
            .position(|x| x == p)
            .ok_or_else(|| GroupError::AxiomFailure("closure fails".into()))
    };
    let id = index_of(identity)?;
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = index_of(&add(i, j))?;
        }
    }
    for i in 0..n {
        if table[i][id] != i || table[id][i] != i {
            return Err(GroupError::AxiomFailure("identity fails".into()));
        }
        if !(0..n).any(|j| table[i][j] == id) {
            return Err(GroupError::AxiomFailure("inverse fails".into()));
        }
        for j in 0..n {
            if table[i][j] != table[j][i] {
                return Err(GroupError::AxiomFailure("commutativity fails".into()));
            }
        }
    }
    if n <= 40 {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(GroupError::AxiomFailure("associativity fails".into()));
                    }
                }
            }
        }
    } else {
        let mut rng = crate::rng::SplitMix64::new(0xA55);
        for _ in 0..2000 {
            let (i, j, k) = (
                rng.below(n as u64) as usize,
                rng.below(n as u64) as usize,
                rng.below(n as u64) as usize,
            );
            if table[table[i][j]][k] != table[i][table[j][k]] {
                return Err(GroupError::AxiomFailure("associativity fails".into()));
            }
        }
    }
    Ok(())
}

/// Common face of the two groups for coset machinery.
pub trait PointGroup {
    fn carrier(&self) -> &[ProjPoint];
    fn op(&self, a: &ProjPoint, b: &ProjPoint) -> ProjPoint;
    fn invert(&self, a: &ProjPoint) -> ProjPoint;
    fn id(&self) -> &ProjPoint;
    /// The element the collinearity condition sums to: 0' for a cubic group,
    /// the identity for the conic-line group.
    fn sum_target(&self) -> &ProjPoint;
}

impl PointGroup for CubicGroup {
    fn carrier(&self) -> &[ProjPoint] {
        &self.points
    }
    fn op(&self, a: &ProjPoint, b: &ProjPoint) -> ProjPoint {
        self.add(a, b).expect("carrier points")
    }
    fn invert(&self, a: &ProjPoint) -> ProjPoint {
        self.neg(a).expect("carrier point")
    }
    fn id(&self) -> &ProjPoint {
        &self.o
    }
    fn sum_target(&self) -> &ProjPoint {
        &self.zero_prime
    }
}

impl PointGroup for ConicLineGroup {
    fn carrier(&self) -> &[ProjPoint] {
        &self.points
    }
    fn op(&self, a: &ProjPoint, b: &ProjPoint) -> ProjPoint {
        self.add(a, b).expect("carrier points")
    }
    fn invert(&self, a: &ProjPoint) -> ProjPoint {
        self.neg(a).expect("carrier point")
    }
    fn id(&self) -> &ProjPoint {
        &self.o
    }
    fn sum_target(&self) -> &ProjPoint {
        &self.o
    }
}

/// A subgroup H with three pairwise distinct cosets a+H, b+H, c+H whose
/// representatives satisfy a + b + c = 0'.
#[derive(Clone, Debug)]
pub struct CosetTriple {
    pub h: Vec<ProjPoint>,
    pub a: ProjPoint,
    pub b: ProjPoint,
    pub c: ProjPoint,
    pub coset_a: Vec<ProjPoint>,
    pub coset_b: Vec<ProjPoint>,
    pub coset_c: Vec<ProjPoint>,
}

/// All subgroups of order `n` containing 0', each with every coset triple
/// (up to reordering). The groups here are abelian of rank at most two, so
/// closures of single elements and pairs find every subgroup.
pub fn subgroup_and_cosets<G: PointGroup>(
    group: &G,
    n: usize,
) -> Result<Vec<CosetTriple>, GroupError> {
    let carrier = group.carrier();
    let big_n = carrier.len();
    if n == 0 || big_n % n != 0 {
        return Err(GroupError::NoSuchSubgroup);
    }
    if big_n / n <= 2 {
        return Err(GroupError::IndexTooSmall);
    }

    let index_of = |p: &ProjPoint| carrier.iter().position(|x| x == p).expect("closure");
    let id = index_of(group.id());
    let table: Vec<Vec<usize>> = (0..big_n)
        .map(|i| {
            (0..big_n)
                .map(|j| index_of(&group.op(&carrier[i], &carrier[j])))
                .collect()
        })
        .collect();

    let closure = |gens: &[usize]| -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(id);
        let mut frontier: Vec<usize> = vec![id];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = table[x][g];
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    };

    let mut subgroups: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..big_n {
        let c1 = closure(&[i]);
        if c1.len() == n {
            subgroups.insert(c1.iter().copied().collect());
        }
        for j in (i + 1)..big_n {
            let c2 = closure(&[i, j]);
            if c2.len() == n {
                subgroups.insert(c2.iter().copied().collect());
            }
        }
    }
    if n == 1 {
        subgroups.insert(vec![id]);
    }

    let zero_prime = index_of(group.sum_target());
    let mut triples = Vec::new();
    let mut any_subgroup_with_zp = false;
    for h in &subgroups {
        if !h.contains(&zero_prime) {
            continue; // candidate rejected: 0' must lie in H
        }
        any_subgroup_with_zp = true;
        // partition into cosets, rep = smallest member index
        let hset: BTreeSet<usize> = h.iter().copied().collect();
        let mut coset_of = vec![usize::MAX; big_n];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..big_n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let rep_id = reps.len();
            for &hh in &hset {
                coset_of[table[x][hh]] = rep_id;
            }
            reps.push(x);
        }
        let neg = |x: usize| index_of(&group.invert(&carrier[x]));
        let mut seen: BTreeSet<[usize; 3]> = BTreeSet::new();
        for i in 0..reps.len() {
            for j in i..reps.len() {
                let a = reps[i];
                let b = reps[j];
                // c = 0' - a - b
                let c = table[table[zero_prime][neg(a)]][neg(b)];
                let ci = coset_of[c];
                let mut key = [i, j, ci];
                key.sort_unstable();
                if key[0] == key[1] || key[1] == key[2] {
                    continue; // cosets must be pairwise distinct
                }
                if !seen.insert(key) {
                    continue;
                }
                let expand = |rep: usize| -> Vec<ProjPoint> {
                    let mut pts: Vec<ProjPoint> =
                        hset.iter().map(|&hh| carrier[table[rep][hh]].clone()).collect();
                    pts.sort();
                    pts
                };
                let mut hpts: Vec<ProjPoint> = hset.iter().map(|&x| carrier[x].clone()).collect();
                hpts.sort();
                triples.push(CosetTriple {
                    h: hpts,
                    a: carrier[a].clone(),
                    b: carrier[b].clone(),
                    c: carrier[c].clone(),
                    coset_a: expand(a),
                    coset_b: expand(b),
                    coset_c: expand(c),
                });
            }
        }
    }
    if !any_subgroup_with_zp {
        return Err(GroupError::NoSuchSubgroup);
    }
    Ok(triples)
}
