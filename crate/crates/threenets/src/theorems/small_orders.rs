//! Validators for orders 2 and 3: projective equivalence with the Pasch
//! configuration plus its cubic pencil, and the collinear-iff-conic
//! biconditional of the order-3 family.

use crate::curves::{curves_through, is_irreducible_conic, Conic, Cubic};
use crate::field::{FieldElement, FieldSpec};
use crate::geometry::{collinear, ProjPoint};
use crate::linalg::Matrix;
use crate::nets::{
    n3_b_collinear_condition, n3_c_collinear_condition, n3_family, pasch_net, verify_axioms,
    DualThreeNet, NetError,
};

use super::TheoremsError;

/// A member of the Pasch cubic pencil:
/// aX²Y + bXY² + c(X²Z - XZ²) + d(Y²Z - YZ²) - (a+b)XYZ.
pub fn pencil_cubic(spec: &FieldSpec, a: u64, b: u64, c: u64, d: u64) -> Cubic {
    let a = FieldElement::scalar(spec, a);
    let b = FieldElement::scalar(spec, b);
    let c = FieldElement::scalar(spec, c);
    let d = FieldElement::scalar(spec, d);
    // monomial order: X³ Y³ Z³ X²Y X²Z Y²X Y²Z Z²X Z²Y XYZ
    let coeffs = vec![
        spec.zero(),
        spec.zero(),
        spec.zero(),
        a.clone(),
        c.clone(),
        b.clone(),
        d.clone(),
        c.neg(),
        d.neg(),
        a.add(&b).neg(),
    ];
    Cubic::new(coeffs).expect("pencil member is nonzero")
}

#[derive(Clone, Debug)]
pub struct N2Report {
    /// projectivity carrying the net onto the standard Pasch net
    pub projectivity: Matrix,
    pub pencil_verified: bool,
}

/// Find a projectivity carrying an order-2 net onto the standard Pasch
/// configuration, component structure included, and verify that the image
/// satisfies the cubic pencil.
pub fn check_n2(net: &DualThreeNet) -> Result<N2Report, TheoremsError> {
    if net.order() != 2 {
        return Err(TheoremsError::NotOrder2);
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
    let target = pasch_net(&spec).map_err(|e| TheoremsError::Internal(e.to_string()))?;
    let mut pasch_points = target.all_points();
    pasch_points.sort();
    let pasch_partition: Vec<Vec<ProjPoint>> = vec![
        target.a().to_vec(),
        target.b().to_vec(),
        target.c().to_vec(),
    ];

    let pts = net.all_points();
    let standard = [
        ProjPoint::from_ints(&spec, 1, 0, 0),
        ProjPoint::from_ints(&spec, 0, 1, 0),
        ProjPoint::from_ints(&spec, 0, 0, 1),
        ProjPoint::from_ints(&spec, 1, 1, 1),
    ];
    // map ordered 4-tuples in general position onto the standard frame
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                for l in 0..6 {
                    if i == j || i == k || i == l || j == k || j == l || k == l {
                        continue;
                    }
                    let quad = [&pts[i], &pts[j], &pts[k], &pts[l]];
                    let Ok(from_std) = frame_matrix_for(quad) else { continue };
                    let Some(to_std) = from_std.inverse() else { continue };
                    let mapped: Vec<ProjPoint> = pts
                        .iter()
                        .map(|p| {
                            let v = to_std.apply(&p.coords().to_vec());
                            ProjPoint::new(v[0].clone(), v[1].clone(), v[2].clone()).unwrap()
                        })
                        .collect();
                    let mut sorted = mapped.clone();
                    sorted.sort();
                    if sorted != pasch_points {
                        continue;
                    }
                    // components must map onto the (unique) Pasch partition
                    let map_comp = |comp: &[ProjPoint]| {
                        let mut v: Vec<ProjPoint> = comp
                            .iter()
                            .map(|p| {
                                let w = to_std.apply(&p.coords().to_vec());
                                ProjPoint::new(w[0].clone(), w[1].clone(), w[2].clone()).unwrap()
                            })
                            .collect();
                        v.sort();
                        v
                    };
                    let image_parts = [map_comp(net.a()), map_comp(net.b()), map_comp(net.c())];
                    let partition_ok = image_parts
                        .iter()
                        .all(|part| pasch_partition.contains(part));
                    if !partition_ok {
                        continue;
                    }
                    // pencil membership for the four generators
                    let gens = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)];
                    let pencil_verified = gens.iter().all(|&(a, b, c, d)| {
                        let cubic = pencil_cubic(&spec, a, b, c, d);
                        mapped.iter().all(|p| cubic.contains(p))
                    });
                    if !pencil_verified {
                        return Err(TheoremsError::violated(
                            "Pasch image escapes the cubic pencil",
                            net,
                        ));
                    }
                    let _ = standard;
                    return Ok(N2Report {
                        projectivity: to_std,
                        pencil_verified,
                    });
                }
            }
        }
    }
    Err(TheoremsError::NoEquivalence(
        "no frame of the six points maps onto the Pasch configuration".into(),
    ))
}

fn frame_matrix_for(points: [&ProjPoint; 4]) -> Result<Matrix, NetError> {
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
        .ok_or_else(|| NetError::BadParameters("frame collinear".into()))?;
    let lambda = inv.apply(&points[3].coords().to_vec());
    if lambda.iter().any(|l| l.is_zero()) {
        return Err(NetError::BadParameters("degenerate frame".into()));
    }
    let mut m = cols;
    for i in 0..3 {
        for j in 0..3 {
            *m.at_mut(i, j) = m.at(i, j).mul(&lambda[j]);
        }
    }
    Ok(m)
}

#[derive(Clone, Debug)]
pub struct N3Report {
    pub b_collinear: bool,
    pub b_condition: bool,
    pub c_collinear: bool,
    pub c_condition: bool,
    pub conic_nullity: usize,
    pub irreducible_conic: Option<Conic>,
    pub cubic_nullity: usize,
}

/// Check the order-3 biconditional: B collinear ⇔ A ∪ C on an irreducible
/// conic (necessarily of type αXY + βYZ + γZX, the triangle kills the pure
/// squares), cross-checked against the closed-form conditions.
pub fn check_n3(
    spec: &FieldSpec,
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
) -> Result<N3Report, TheoremsError> {
    let net = n3_family(spec, a, b, c)
        .map_err(|e| TheoremsError::PreconditionFailed(e.to_string()))?;
    let b_collinear = collinear(net.b());
    let c_collinear = collinear(net.c());
    let b_condition = n3_b_collinear_condition(a, b, c);
    let c_condition = n3_c_collinear_condition(a, b, c);
    if b_collinear != b_condition || c_collinear != c_condition {
        return Err(TheoremsError::violated(
            "closed-form collinearity condition disagrees with direct check",
            &net,
        ));
    }

    let mut ac = net.a().to_vec();
    ac.extend(net.c().iter().cloned());
    let cert = curves_through(&ac, 2);
    // the coordinate triangle forces zero coefficients on X², Y², Z²
    for v in &cert.nullspace {
        if !(v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) {
            return Err(TheoremsError::Internal(
                "conic through the triangle has a pure-square term".into(),
            ));
        }
    }
    let irreducible_conic = find_irreducible_in_kernel(spec, &cert.nullspace);

    // the biconditional of the order-3 statement
    if b_collinear != irreducible_conic.is_some() {
        return Err(TheoremsError::violated(
            "B collinear does not match irreducible conic through A ∪ C",
            &net,
        ));
    }

    // nine points always lie on a cubic (dimension count)
    let cubic_cert = curves_through(&net.all_points(), 3);
    if cubic_cert.nullity() == 0 {
        return Err(TheoremsError::violated("nine points on no cubic", &net));
    }

    Ok(N3Report {
        b_collinear,
        b_condition,
        c_collinear,
        c_condition,
        conic_nullity: cert.nullity(),
        irreducible_conic,
        cubic_nullity: cubic_cert.nullity(),
    })
}

/// Scan the projectivized kernel for an irreducible conic.
fn find_irreducible_in_kernel(
    spec: &FieldSpec,
    basis: &[Vec<FieldElement>],
) -> Option<Conic> {
    match basis.len() {
        0 => None,
        1 => {
            let conic = Conic::new(basis[0].clone()).ok()?;
            is_irreducible_conic(&conic).then_some(conic)
        }
        _ => {
            // all projective combinations of the (small) kernel
            let combos = projective_combinations(spec, basis);
            combos.into_iter().find(|c| is_irreducible_conic(c))
        }
    }
}

fn projective_combinations(spec: &FieldSpec, basis: &[Vec<FieldElement>]) -> Vec<Conic> {
    let mut out = Vec::new();
    let dim = basis.len();
    let elems = spec.enumerate();
    // representatives with first nonzero coefficient 1
    let mut coeff_sets: Vec<Vec<FieldElement>> = vec![];
    fn rec(
        spec: &FieldSpec,
        elems: &[FieldElement],
        dim: usize,
        prefix: &mut Vec<FieldElement>,
        out: &mut Vec<Vec<FieldElement>>,
        lead_fixed: bool,
    ) {
        if prefix.len() == dim {
            if lead_fixed {
                out.push(prefix.clone());
            }
            return;
        }
        if !lead_fixed {
            // leading coefficient is zero or one
            prefix.push(spec.zero());
            rec(spec, elems, dim, prefix, out, false);
            prefix.pop();
            prefix.push(spec.one());
            rec(spec, elems, dim, prefix, out, true);
            prefix.pop();
        } else {
            for e in elems {
                prefix.push(e.clone());
                rec(spec, elems, dim, prefix, out, true);
                prefix.pop();
            }
        }
    }
    rec(spec, &elems, dim, &mut Vec::new(), &mut coeff_sets, false);
    for lambda in coeff_sets {
        let mut v = vec![spec.zero(); basis[0].len()];
        for (l, base) in lambda.iter().zip(basis.iter()) {
            for (vi, bi) in v.iter_mut().zip(base.iter()) {
                *vi = vi.add(&l.mul(bi));
            }
        }
        if let Ok(conic) = Conic::new(v) {
            out.push(conic);
        }
    }
    out
}
