//! The five conic-plus-line net families: A and B as subgroup cosets on a
//! parabola, hyperbola, norm circle, or a pair of lines, with C the
//! direction set on the line at infinity.
//!
//! Run with: cargo run --example conic_line_families

use threenets::field::FieldSpec;
use threenets::nets::{
    classify_regularity, construct_conic_line, verify_axioms, ConicLineKind, ConicLineParams,
};

fn main() {
    let instances = [
        (FieldSpec::new(11, 1).unwrap(), ConicLineKind::Hyperbola, 5),
        (FieldSpec::new(7, 2).unwrap(), ConicLineKind::Parabola, 7),
        (FieldSpec::new(3, 2).unwrap(), ConicLineKind::Circle, 5),
        (FieldSpec::new(11, 1).unwrap(), ConicLineKind::LinesMult, 5),
        (FieldSpec::new(7, 1).unwrap(), ConicLineKind::LinesAdd, 7),
    ];
    for (spec, kind, n) in instances {
        let net = construct_conic_line(
            &spec,
            kind,
            &ConicLineParams {
                subgroup_order: n,
                coset_a: None,
                coset_b: None,
            },
        )
        .unwrap();
        let report = verify_axioms(&net).unwrap();
        let reg = classify_regularity(&net);
        println!(
            "{:<10} over GF({:>2}), order {}: axioms {}, {} (A,B,C collinear: {:?})",
            kind.name(),
            spec.order(),
            n,
            if report.pass { "pass" } else { "FAIL" },
            reg.kind,
            reg.collinear,
        );
    }

    // degenerate coset choices are rejected, never silently fixed
    let f7 = FieldSpec::new(7, 1).unwrap();
    let whole_field = construct_conic_line(
        &f7,
        ConicLineKind::Parabola,
        &ConicLineParams { subgroup_order: 7, coset_a: None, coset_b: None },
    );
    println!(
        "\nparabola over GF(7) with the whole additive group: {}",
        whole_field.unwrap_err()
    );
}
