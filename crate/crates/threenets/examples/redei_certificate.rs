//! The Rédei divisibility certificate: for a net with C on a line, the two
//! Rédei polynomials A(T,X), B(T,X) agree in every T-coefficient up to a
//! scalar multiple of ∏(X - m) in the T-free term, and the symmetric /
//! power-sum coefficient polynomials agree below degree n.
//!
//! Run with: cargo run --example redei_certificate

use threenets::field::FieldSpec;
use threenets::nets::{construct_conic_line, ConicLineKind, ConicLineParams};
use threenets::redei::{divisibility_certificate, PowerSumStatus};

fn main() {
    let cases = [
        (FieldSpec::new(11, 1).unwrap(), ConicLineKind::Hyperbola, 5),
        (FieldSpec::new(7, 2).unwrap(), ConicLineKind::Parabola, 7),
        (FieldSpec::new(3, 2).unwrap(), ConicLineKind::Circle, 5),
    ];
    for (spec, kind, n) in cases {
        let net = construct_conic_line(
            &spec,
            kind,
            &ConicLineParams { subgroup_order: n, coset_a: None, coset_b: None },
        )
        .unwrap();
        let report = divisibility_certificate(&net).unwrap();
        println!(
            "{} over GF({}), n = {}: certificate {}",
            kind.name(),
            spec.order(),
            n,
            if report.pass { "PASSES" } else { "FAILS" }
        );
        println!(
            "  directions (slopes of the transversals): {:?}",
            report.directions.iter().map(|m| m.index()).collect::<Vec<_>>()
        );
        println!(
            "  σ_k(A) = σ_k(B) for k < n: {} | remainders all zero: {}",
            report.sigma_equal_below_n,
            report.rows.iter().all(|r| r.remainder_zero)
        );
        if let Some(scalar) = &report.final_scalar {
            println!("  T-free term: λ · ∏(X - m) with λ = {:?}", scalar.coeffs());
        }
        match report.power_sums {
            PowerSumStatus::Verified { count } => {
                println!("  power sums π_1..π_{} verified against direct summation", count)
            }
            PowerSumStatus::SkippedCharTooSmall { n, p } => {
                println!("  power sums skipped: n = {} exceeds the characteristic {}", n, p)
            }
        }
    }
}
