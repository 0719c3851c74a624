//! The order-4 taxonomy: every dual 3-net of order 4 lies on a cubic, and
//! after a canonicalizing projectivity it falls into one of the cases
//! (A / non-A) × (C / non-C) — the fourth point of the taxonomy component
//! maps to (1:1:1) or (1:1:0), and the coordinate pairing between B and C is
//! a 4-cycle or a product of two 2-cycles — plus the degenerate three-lines
//! case. Each branch verifies its relation system and, in case C, the
//! closed-form kernel vector (x1..x7) with x1 = bf - dh, ...,
//! x7 = (bd - fh)(c - g).
//!
//! The B-and-C matchings of a net form a sharply transitive set of four
//! permutations which is always a group (Z4 or Klein); frames are searched
//! in a fixed order and the first one exhibiting a standard presentation
//! (4-cycle with matching ratio pairing, or two distinct 2+2 pairings) is
//! taken — one always exists.

use crate::curves::{curves_through, Cubic};
use crate::field::{FieldElement, FieldSpec};
use crate::geometry::{collinear, line_through, ProjPoint};
use crate::linalg::Matrix;
use crate::nets::{verify_axioms, DualThreeNet};

use super::TheoremsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum N4Case {
    /// 4-cycle pairing, fourth point (1:1:1)
    CycleArc,
    /// 4-cycle pairing, fourth point (1:1:0)
    CycleNonArc,
    /// 2+2 pairing, fourth point (1:1:1)
    DoubleTranspositionArc,
    /// 2+2 pairing, fourth point (1:1:0)
    DoubleTranspositionNonArc,
    /// all three components collinear
    ThreeLines,
}

impl N4Case {
    pub fn is_case_a(&self) -> Option<bool> {
        match self {
            N4Case::CycleArc | N4Case::DoubleTranspositionArc => Some(true),
            N4Case::CycleNonArc | N4Case::DoubleTranspositionNonArc => Some(false),
            N4Case::ThreeLines => None,
        }
    }

    pub fn is_case_c(&self) -> Option<bool> {
        match self {
            N4Case::CycleArc | N4Case::CycleNonArc => Some(true),
            N4Case::DoubleTranspositionArc | N4Case::DoubleTranspositionNonArc => Some(false),
            N4Case::ThreeLines => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClosedFormCheck {
    pub x: Vec<FieldElement>,
    pub in_kernel: bool,
    /// scalar against the computed kernel basis vector when the kernel is
    /// one-dimensional
    pub lambda: Option<FieldElement>,
    pub is_zero: bool,
}

#[derive(Clone, Debug)]
pub struct NonANonCCheck {
    /// e = -a, f = -d, g = -c, h = -b
    pub forced_negations: bool,
    /// d = a - b + c
    pub d_relation: bool,
    /// rank of the residual 4×3 matrix after the forced negations (must be < 3)
    pub second_matrix_rank: usize,
    pub odd_characteristic: bool,
}

#[derive(Clone, Debug)]
pub struct N4Certificate {
    pub case: N4Case,
    /// nullity of the 12-point degree-3 system in the original coordinates
    pub kernel_nullity: usize,
    /// a cubic through all twelve points, original coordinates
    pub cubic: Cubic,
    /// canonical letters (a, b, c, d, e, f, g, h)
    pub letters: Option<[FieldElement; 8]>,
    pub relations: Vec<String>,
    pub relations_verified: bool,
    pub closed_form: Option<ClosedFormCheck>,
    /// Σx = 0 (fourth point (1:1:1)) or x1 + x3 = 0 ((1:1:0)), case C only
    pub extra_condition_holds: Option<bool>,
    pub non_a_non_c: Option<NonANonCCheck>,
}

/// Degree-3 monomial row without the pure cubes, at z = 1:
/// (x²y, x²z, y²x, y²z, z²x, z²y, xyz).
fn mono7(x: &FieldElement, y: &FieldElement) -> Vec<FieldElement> {
    vec![
        x.mul(x).mul(y),
        x.mul(x),
        y.mul(y).mul(x),
        y.mul(y),
        x.clone(),
        y.clone(),
        x.mul(y),
    ]
}

fn perm_is_4cycle(p: &[usize; 4]) -> bool {
    let mut seen = 1;
    let mut cur = p[0];
    while cur != 0 {
        cur = p[cur];
        seen += 1;
        if seen > 4 {
            return false;
        }
    }
    seen == 4
}

fn perm_is_double_transposition(p: &[usize; 4]) -> bool {
    (0..4).all(|i| p[i] != i && p[p[i]] == i)
}

struct Canonicalized {
    letters: [FieldElement; 8],
    arc: bool,
    cycle: bool,
}

/// Try one frame: returns the canonical letters when the presentation
/// matches one of the two standard forms.
fn try_frame(
    spec: &FieldSpec,
    role_a: &[ProjPoint],
    role_b: &[ProjPoint],
    role_c: &[ProjPoint],
    order: [usize; 3],
    arc: bool,
) -> Option<Canonicalized> {
    let (i, j, k) = (order[0], order[1], order[2]);
    let triangle = [&role_a[i], &role_a[j], &role_a[k]];
    if collinear(&[triangle[0].clone(), triangle[1].clone(), triangle[2].clone()]) {
        return None;
    }
    let fourth_idx = (0..4).find(|m| ![i, j, k].contains(m)).unwrap();
    let fourth = &role_a[fourth_idx];
    // build the map canonical -> original with columns scaled to carry the
    // fourth point to (1:1:1) (arc) or (1:1:0) (non-arc)
    let cols = Matrix::from_rows(
        spec,
        &[
            triangle[0].coords().to_vec(),
            triangle[1].coords().to_vec(),
            triangle[2].coords().to_vec(),
        ],
    )
    .transpose();
    let inv = cols.inverse()?;
    let lambda = inv.apply(&fourth.coords().to_vec());
    if arc {
        if lambda.iter().any(|l| l.is_zero()) {
            return None; // fourth point on a side: not an arc frame
        }
    } else {
        // fourth point must lie on the line of the first two triangle points
        if !lambda[2].is_zero() || lambda[0].is_zero() || lambda[1].is_zero() {
            return None;
        }
    }
    let mut from_canonical = cols;
    for r in 0..3 {
        for cidx in 0..2 {
            *from_canonical.at_mut(r, cidx) = from_canonical.at(r, cidx).mul(&lambda[cidx]);
        }
        if arc {
            *from_canonical.at_mut(r, 2) = from_canonical.at(r, 2).mul(&lambda[2]);
        }
    }
    let to_canonical = from_canonical.inverse()?;

    let transform_affine = |pts: &[ProjPoint]| -> Option<Vec<(FieldElement, FieldElement)>> {
        pts.iter()
            .map(|p| {
                let v = to_canonical.apply(&p.coords().to_vec());
                let img = ProjPoint::new(v[0].clone(), v[1].clone(), v[2].clone()).ok()?;
                img.affine_xy()
            })
            .collect()
    };
    let bp = transform_affine(role_b)?;
    let cp = transform_affine(role_c)?;
    // all letters nonzero and coordinates distinct within each slot
    for (x, y) in bp.iter().chain(cp.iter()) {
        if x.is_zero() || y.is_zero() {
            return None;
        }
    }
    // match C points to B by first coordinate
    let mut c_by_first = [usize::MAX; 4];
    for (ci, (cx, _)) in cp.iter().enumerate() {
        let hits: Vec<usize> = bp.iter().enumerate().filter(|(_, (bx, _))| bx == cx).map(|(bi, _)| bi).collect();
        if hits.len() != 1 {
            return None;
        }
        c_by_first[hits[0]] = ci;
    }
    if c_by_first.contains(&usize::MAX) {
        return None;
    }
    // s: C indexed by B-first i carries the second coordinate of B_{s(i)}
    let mut s = [usize::MAX; 4];
    for i in 0..4 {
        let cy = &cp[c_by_first[i]].1;
        let hits: Vec<usize> = bp.iter().enumerate().filter(|(_, (_, by))| by == cy).map(|(bi, _)| bi).collect();
        if hits.len() != 1 {
            return None;
        }
        s[i] = hits[0];
    }
    if (0..4).any(|i| s[i] == i) {
        return None;
    }
    // t: B_j has the same x/y ratio as C_{t(j)}
    let mut t = [usize::MAX; 4];
    for (jb, (bx, by)) in bp.iter().enumerate() {
        let mut found = None;
        for i in 0..4 {
            let (cx, cy) = &cp[c_by_first[i]];
            if bx.mul(cy) == by.mul(cx) {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        t[jb] = found?;
    }

    let s_arr = s;
    let t_arr = t;
    let cycle = if perm_is_4cycle(&s_arr) && s_arr == t_arr {
        true
    } else if perm_is_double_transposition(&s_arr)
        && perm_is_double_transposition(&t_arr)
        && s_arr != t_arr
    {
        false
    } else {
        return None;
    };

    // relabel B so the patterns are the standard ones
    let order_b: [usize; 4] = if cycle {
        [0, s_arr[0], s_arr[s_arr[0]], s_arr[s_arr[s_arr[0]]]]
    } else {
        let b1 = 0;
        let b2 = s_arr[0];
        let rest: Vec<usize> = (0..4).filter(|x| *x != b1 && *x != b2).collect();
        let mut o = [b1, b2, rest[0], s_arr[rest[0]]];
        // t must become (13)(24): on the current labeling it is either that
        // or (14)(23); a swap of the second pair fixes the latter
        let pos = |raw: usize| o.iter().position(|&x| x == raw).unwrap();
        if pos(t_arr[o[0]]) == 3 {
            o.swap(2, 3);
        }
        o
    };
    // extract letters in the relabeled order
    let letters = [
        bp[order_b[0]].0.clone(),
        bp[order_b[0]].1.clone(),
        bp[order_b[1]].0.clone(),
        bp[order_b[1]].1.clone(),
        bp[order_b[2]].0.clone(),
        bp[order_b[2]].1.clone(),
        bp[order_b[3]].0.clone(),
        bp[order_b[3]].1.clone(),
    ];
    Some(Canonicalized { letters, arc, cycle })
}

fn rel(name: &str, lhs: &FieldElement, rhs: &FieldElement, ok: &mut bool) -> String {
    let holds = lhs == rhs;
    if !holds {
        *ok = false;
    }
    format!("{}: {}", name, if holds { "holds" } else { "FAILS" })
}

pub fn check_n4(net: &DualThreeNet) -> Result<N4Certificate, TheoremsError> {
    if net.order() != 4 {
        return Err(TheoremsError::NotOrder4);
    }
    let report = verify_axioms(net)
        .map_err(|e| TheoremsError::PreconditionFailed(e.to_string()))?;
    if !report.pass {
        return Err(TheoremsError::PreconditionFailed(format!(
            "net fails the axioms: {}",
            report.violation.unwrap()
        )));
    }
    let spec = net.spec().clone();
    let all = net.all_points();
    let kernel = curves_through(&all, 3);
    if kernel.nullity() == 0 {
        return Err(TheoremsError::violated(
            "an order-4 net whose twelve points lie on no cubic",
            net,
        ));
    }
    let cubic = Cubic::new(kernel.nullspace[0].clone()).expect("nonzero");

    // degenerate branch: all three components on lines
    let coll = [
        collinear(net.a()),
        collinear(net.b()),
        collinear(net.c()),
    ];
    if coll.iter().all(|&c| c) {
        // the product of the three lines is a cubic through everything
        let lines = [
            line_through(&net.a()[0], &net.a()[1]).unwrap(),
            line_through(&net.b()[0], &net.b()[1]).unwrap(),
            line_through(&net.c()[0], &net.c()[1]).unwrap(),
        ];
        let product = triple_line_cubic(&spec, &lines);
        for p in &all {
            if !product.contains(p) {
                return Err(TheoremsError::Internal(
                    "three-lines product misses a point".into(),
                ));
            }
        }
        return Ok(N4Certificate {
            case: N4Case::ThreeLines,
            kernel_nullity: kernel.nullity(),
            cubic: product,
            letters: None,
            relations: vec!["three collinear components".into()],
            relations_verified: true,
            closed_form: None,
            extra_condition_holds: None,
            non_a_non_c: None,
        });
    }

    // role orders: prefer A as the taxonomy component, then B, then C
    const ROLE_ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    // frame orders on the taxonomy component, smallest indices first
    let mut frame_orders: Vec<[usize; 3]> = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                if i != j && j != k && i != k {
                    frame_orders.push([i, j, k]);
                }
            }
        }
    }

    for roles in ROLE_ORDERS {
        let role_a = net.component(roles[0]);
        let role_b = net.component(roles[1]);
        let role_c = net.component(roles[2]);
        if collinear(role_a) {
            continue;
        }
        // `arc` is intrinsic to the component: no 3 of its 4 points collinear
        let arc = (0..4).all(|skip| {
            let triple: Vec<ProjPoint> = (0..4)
                .filter(|&i| i != skip)
                .map(|i| role_a[i].clone())
                .collect();
            !collinear(&triple)
        });
        for order in &frame_orders {
            let Some(canon) = try_frame(&spec, role_a, role_b, role_c, *order, arc) else {
                continue;
            };
            return finish_certificate(net, &spec, kernel.nullity(), cubic, canon);
        }
    }
    Err(TheoremsError::CanonicalizationFailed(
        "no frame produced a standard presentation".into(),
    ))
}

fn triple_line_cubic(spec: &FieldSpec, lines: &[crate::geometry::ProjLine; 3]) -> Cubic {
    use std::collections::BTreeMap;
    let mut poly: BTreeMap<[u32; 3], FieldElement> = BTreeMap::new();
    poly.insert([0, 0, 0], spec.one());
    for line in lines {
        let mut next: BTreeMap<[u32; 3], FieldElement> = BTreeMap::new();
        for (exp, c) in &poly {
            for axis in 0..3 {
                let coeff = &line.coeffs()[axis];
                if coeff.is_zero() {
                    continue;
                }
                let mut e = *exp;
                e[axis] += 1;
                let add = c.mul(coeff);
                next.entry(e)
                    .and_modify(|v| *v = v.add(&add))
                    .or_insert(add);
            }
        }
        poly = next;
    }
    let coeffs = crate::curves::DEG3_MONOMIALS
        .iter()
        .map(|m| {
            poly.get(&[m.0, m.1, m.2])
                .cloned()
                .unwrap_or_else(|| spec.zero())
        })
        .collect();
    Cubic::new(coeffs).expect("product of lines is nonzero")
}

fn finish_certificate(
    net: &DualThreeNet,
    spec: &FieldSpec,
    kernel_nullity: usize,
    cubic: Cubic,
    canon: Canonicalized,
) -> Result<N4Certificate, TheoremsError> {
    let [a, b, c, d, e, f, g, h] = canon.letters.clone();
    let mut relations = Vec::new();
    let mut relations_verified = true;
    let ok = &mut relations_verified;

    // canonical B and C points (z = 1)
    let bp = [
        (a.clone(), b.clone()),
        (c.clone(), d.clone()),
        (e.clone(), f.clone()),
        (g.clone(), h.clone()),
    ];
    let cp: [(FieldElement, FieldElement); 4] = if canon.cycle {
        [
            (a.clone(), d.clone()),
            (c.clone(), f.clone()),
            (e.clone(), h.clone()),
            (g.clone(), b.clone()),
        ]
    } else {
        [
            (a.clone(), d.clone()),
            (c.clone(), b.clone()),
            (e.clone(), h.clone()),
            (g.clone(), f.clone()),
        ]
    };

    if canon.cycle {
        relations.push(rel("af = bc", &a.mul(&f), &b.mul(&c), ok));
        relations.push(rel("ch = de", &c.mul(&h), &d.mul(&e), ok));
        relations.push(rel("eb = gf", &e.mul(&b), &g.mul(&f), ok));
        relations.push(rel("gd = ah", &g.mul(&d), &a.mul(&h), ok));
    } else {
        relations.push(rel("af = de", &a.mul(&f), &d.mul(&e), ok));
        relations.push(rel("ch = bg", &c.mul(&h), &b.mul(&g), ok));
        relations.push(rel("eb = ah", &e.mul(&b), &a.mul(&h), ok));
        relations.push(rel("gd = fc", &g.mul(&d), &f.mul(&c), ok));
    }
    // matchings through the fourth point of the taxonomy component:
    // B1-C3, B2-C4, B3-C1, B4-C2 (cycle) or B1-C4, B2-C3, B3-C2, B4-C1
    let pairs: [(usize, usize); 4] = if canon.cycle {
        [(0, 2), (1, 3), (2, 0), (3, 1)]
    } else {
        [(0, 3), (1, 2), (2, 1), (3, 0)]
    };
    for (bi, ci) in pairs {
        let (bx, by) = &bp[bi];
        let (cx, cy) = &cp[ci];
        if canon.arc {
            // collinear with (1:1:1): (y - y') - (x - x') + (x y' - x' y) = 0
            let det = by
                .sub(cy)
                .sub(&bx.sub(cx))
                .add(&bx.mul(cy).sub(&cx.mul(by)));
            relations.push(rel(
                &format!("B{}C{} through (1:1:1)", bi + 1, ci + 1),
                &det,
                &spec.zero(),
                ok,
            ));
        } else {
            // collinear with (1:1:0): y - y' = x - x'
            let lhs = by.sub(cy);
            let rhs = bx.sub(cx);
            relations.push(rel(
                &format!("B{}C{} through (1:1:0)", bi + 1, ci + 1),
                &lhs,
                &rhs,
                ok,
            ));
        }
    }

    // the 8 canonical rows on the seven mixed monomials
    let rows8: Vec<Vec<FieldElement>> = bp
        .iter()
        .chain(cp.iter())
        .map(|(x, y)| mono7(x, y))
        .collect();
    let fourth_row: Vec<FieldElement> = if canon.arc {
        vec![spec.one(); 7]
    } else {
        // (1:1:0): x²y, x²z, y²x, y²z, z²x, z²y, xyz at (1,1,0)
        vec![
            spec.one(),
            spec.zero(),
            spec.one(),
            spec.zero(),
            spec.zero(),
            spec.zero(),
            spec.zero(),
        ]
    };
    let mut rows_full = rows8.clone();
    rows_full.push(fourth_row.clone());
    let full_matrix = Matrix::from_rows(spec, &rows_full);
    let full_kernel = full_matrix.nullspace();
    if full_kernel.is_empty() {
        return Err(TheoremsError::violated(
            "canonical seven-column system has full rank",
            net,
        ));
    }

    let (closed_form, extra_condition_holds, non_a_non_c, case) = if canon.cycle {
        // x1..x7 from the letters
        let x = vec![
            b.mul(&f).sub(&d.mul(&h)),
            h.mul(&b).mul(&d).add(&h.mul(&d).mul(&f))
                .sub(&b.mul(&f).mul(&d))
                .sub(&h.mul(&b).mul(&f)),
            a.mul(&h).add(&d.mul(&e)).sub(&b.mul(&c)).sub(&b.mul(&e)),
            a.mul(&e).mul(&b.add(&f).sub(&d).sub(&h)),
            b.mul(&d).mul(&e).mul(&b.add(&f).sub(&d).sub(&h)),
            a.mul(&e).mul(&d.mul(&h).sub(&b.mul(&f))),
            b.mul(&d).sub(&f.mul(&h)).mul(&c.sub(&g)),
        ];
        let is_zero = x.iter().all(|v| v.is_zero());
        let in_kernel = rows8.iter().all(|row| {
            let mut acc = spec.zero();
            for (rv, xv) in row.iter().zip(x.iter()) {
                acc = acc.add(&rv.mul(xv));
            }
            acc.is_zero()
        });
        let sum: FieldElement = x.iter().fold(spec.zero(), |acc, v| acc.add(v));
        let extra = if canon.arc {
            sum.is_zero()
        } else {
            x[0].add(&x[2]).is_zero()
        };
        let lambda = if full_kernel.len() == 1 && !is_zero {
            let k = &full_kernel[0];
            let lead = k.iter().position(|v| !v.is_zero()).unwrap();
            let lam = x[lead].div(&k[lead]).unwrap();
            let matches = x
                .iter()
                .zip(k.iter())
                .all(|(xv, kv)| xv == &lam.mul(kv));
            matches.then_some(lam)
        } else if is_zero {
            Some(spec.zero())
        } else {
            None
        };
        let case = if canon.arc {
            N4Case::CycleArc
        } else {
            N4Case::CycleNonArc
        };
        (
            Some(ClosedFormCheck { x, in_kernel, lambda, is_zero }),
            Some(extra),
            None,
            case,
        )
    } else if canon.arc {
        // non-C with fourth point (1:1:1): the explicit seven-vector
        let x = vec![
            f.add(&h).sub(&b).sub(&d),
            b.mul(&d).sub(&f.mul(&h)),
            a.add(&c).sub(&e).sub(&g),
            e.mul(&g).sub(&a.mul(&c)),
            b.mul(&f.sub(&d)).mul(&e.add(&g)),
            e.mul(&c.sub(&g)).mul(&b.add(&d)),
            spec.zero(),
        ];
        let is_zero = x.iter().all(|v| v.is_zero());
        // membership in the nine-row system (eight points plus (1:1:1))
        let in_kernel = rows_full.iter().all(|row| {
            let mut acc = spec.zero();
            for (rv, xv) in row.iter().zip(x.iter()) {
                acc = acc.add(&rv.mul(xv));
            }
            acc.is_zero()
        });
        let lambda = if full_kernel.len() == 1 && !is_zero {
            let k = &full_kernel[0];
            let lead = k.iter().position(|v| !v.is_zero()).unwrap();
            let lam = x[lead].div(&k[lead]).unwrap();
            x.iter()
                .zip(k.iter())
                .all(|(xv, kv)| xv == &lam.mul(kv))
                .then_some(lam)
        } else if is_zero {
            Some(spec.zero())
        } else {
            None
        };
        (
            Some(ClosedFormCheck { x, in_kernel, lambda, is_zero }),
            None,
            None,
            N4Case::DoubleTranspositionArc,
        )
    } else {
        // non-C, fourth point (1:1:0): forced structure e=-a, f=-d, g=-c,
        // h=-b with d = a - b + c, and odd characteristic
        let forced = e == a.neg() && f == d.neg() && g == c.neg() && h == b.neg();
        let d_rel = d == a.sub(&b).add(&c);
        let odd = spec.p() != 2;
        // the residual 4×3 matrix left after the substitutions must drop rank
        let m2 = Matrix::from_rows(
            spec,
            &[
                vec![a.mul(&a).mul(&b).sub(&a.mul(&b).mul(&b)), a.clone(), b.clone()],
                vec![c.mul(&c).mul(&d).sub(&c.mul(&d).mul(&d)), c.clone(), d.clone()],
                vec![a.mul(&a).mul(&d).sub(&a.mul(&d).mul(&d)), a.clone(), d.clone()],
                vec![c.mul(&c).mul(&b).sub(&c.mul(&b).mul(&b)), c.clone(), b.clone()],
            ],
        );
        let rank = m2.rank();
        if !forced || !d_rel || !odd || rank >= 3 {
            relations_verified = false;
        }
        (
            None,
            None,
            Some(NonANonCCheck {
                forced_negations: forced,
                d_relation: d_rel,
                second_matrix_rank: rank,
                odd_characteristic: odd,
            }),
            N4Case::DoubleTranspositionNonArc,
        )
    };

    Ok(N4Certificate {
        case,
        kernel_nullity,
        cubic,
        letters: Some(canon.letters),
        relations,
        relations_verified,
        closed_form,
        extra_condition_holds,
        non_a_non_c,
    })
}
