//! Orders 1 to 3: the trivial net, the Pasch configuration with its cubic
//! pencil, and the parametric order-3 family with its collinear-iff-conic
//! biconditional.
//!
//! Run with: cargo run --example small_orders

use threenets::field::FieldSpec;
use threenets::geometry::collinear;
use threenets::nets::{
    latin_square_of, n3_b_collinear_condition, n3_family, pasch_net, verify_axioms,
};
use threenets::theorems::{check_n2, check_n3, pencil_cubic};

fn main() {
    let f7 = FieldSpec::new(7, 1).unwrap();

    let pasch = pasch_net(&f7).unwrap();
    println!("Pasch net over GF(7):");
    println!("  A = {:?}", pasch.a());
    println!("  B = {:?}", pasch.b());
    println!("  C = {:?}", pasch.c());
    println!("  axioms pass: {}", verify_axioms(&pasch).unwrap().pass);
    let cubic = pencil_cubic(&f7, 1, 0, 0, 0);
    println!(
        "  all six points on the pencil member X²Y - XYZ: {}",
        pasch.all_points().iter().all(|p| cubic.contains(p))
    );
    let report = check_n2(&pasch).unwrap();
    println!("  order-2 validator: pencil verified = {}", report.pencil_verified);
    println!("  latin square: {:?}", latin_square_of(&pasch).unwrap().cells());

    println!("\norder-3 family over GF(7):");
    for (a, b, c) in [(1u64, 3, 2), (1, 2, 4)] {
        let (ae, be, ce) = (f7.from_int(a), f7.from_int(b), f7.from_int(c));
        let net = n3_family(&f7, &ae, &be, &ce).unwrap();
        let report = check_n3(&f7, &ae, &be, &ce).unwrap();
        println!(
            "  (a,b,c) = ({},{},{}): B collinear {} (closed form {}), irreducible conic through A∪C: {}, cubic nullity {}",
            a,
            b,
            c,
            collinear(net.b()),
            n3_b_collinear_condition(&ae, &be, &ce),
            report.irreducible_conic.is_some(),
            report.cubic_nullity
        );
    }
}
