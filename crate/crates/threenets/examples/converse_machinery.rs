//! The converse direction: A ∪ B on an irreducible conic forces C onto a
//! line. The proof machinery is run for real — involutory perspectivities
//! with centers in C, the group Φ they generate, its even subgroup Ψ, the
//! classification, and the concluding line (short orbit or invariant
//! tangent).
//!
//! Run with: cargo run --example converse_machinery

use threenets::field::FieldSpec;
use threenets::nets::{construct_conic_line, ConicLineKind, ConicLineParams};
use threenets::theorems::{check_converse, perspectivity_from, Mechanism};

fn main() {
    // a single perspectivity first
    let f11 = FieldSpec::new(11, 1).unwrap();
    let net = construct_conic_line(
        &f11,
        ConicLineKind::Hyperbola,
        &ConicLineParams { subgroup_order: 5, coset_a: None, coset_b: None },
    )
    .unwrap();
    let conic = threenets::curves::Conic::from_ints(&f11, &[0, 0, -1, 1, 0, 0]); // XY - Z²
    let q = net.c()[0].clone();
    let phi = perspectivity_from(&conic, &q).unwrap();
    println!("φ with center {:?}:", q);
    let a0 = &net.a()[0];
    println!("  sends A-point {:?} to {:?} (a point of B)", a0, phi.apply(a0));

    for (spec, kind, n) in [
        (FieldSpec::new(11, 1).unwrap(), ConicLineKind::Hyperbola, 5),
        (FieldSpec::new(3, 2).unwrap(), ConicLineKind::Circle, 5),
        (FieldSpec::new(7, 2).unwrap(), ConicLineKind::Parabola, 7),
    ] {
        let net = construct_conic_line(
            &spec,
            kind,
            &ConicLineParams { subgroup_order: n, coset_a: None, coset_b: None },
        )
        .unwrap();
        let report = check_converse(&net).unwrap();
        println!(
            "\n{} over GF({}), n = {}:",
            kind.name(),
            spec.order(),
            n
        );
        println!(
            "  |Φ| = {}, |Ψ| = {}, Ψ regular {} abelian {}, Φ is {}",
            report.phi_order, report.psi_order, report.psi_regular, report.psi_abelian, report.class
        );
        match report.mechanism {
            Mechanism::DihedralShortOrbit { fixed_points_rational } => println!(
                "  mechanism: the cyclic part fixes a 2-point short orbit (rational over GF(q): {}); every center swaps it, so C sits on its line",
                fixed_points_rational
            ),
            Mechanism::InvariantTangent { fixed_point } => println!(
                "  mechanism: Ψ fixes the conic point {:?}; Φ preserves its tangent, which carries C",
                fixed_point
            ),
            ref other => println!("  mechanism: {:?}", other),
        }
        println!("  concluded line through C: {:?}", report.line);
    }
}
