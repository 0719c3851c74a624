//! Dual 3-nets from cosets of a cubic's group: pick a subgroup H of index
//! above two containing 0', three cosets with a + b + c = 0', and the
//! collinearity law makes {a+H, b+H, c+H} a net. Their latin squares land in
//! the two order-4 classes.
//!
//! Run with: cargo run --example coset_nets

use threenets::curve_groups::{subgroup_and_cosets, CubicGroup};
use threenets::curves::Cubic;
use threenets::field::FieldSpec;
use threenets::geometry::ProjPoint;
use threenets::nets::{classify_regularity, construct_subgroup_type, latin_square_of, verify_axioms};

fn main() {
    let f13 = FieldSpec::new(13, 1).unwrap();
    let curve = Cubic::from_ints(&f13, &[-1, 0, -1, 0, 0, 0, 1, 0, 0, 0]); // Y²Z - X³ - Z³
    let o = ProjPoint::from_ints(&f13, 0, 1, 0);
    let group = CubicGroup::new(&curve, &o).unwrap();
    println!(
        "cubic group over GF(13): order {} with flex identity",
        group.order()
    );

    let triples = subgroup_and_cosets(&group, 4).unwrap();
    println!("order-4 subgroups with valid coset triples: {} triples", triples.len());

    for (i, triple) in triples.iter().enumerate().take(3) {
        let net = construct_subgroup_type(&group, triple).unwrap();
        let report = verify_axioms(&net).unwrap();
        let reg = classify_regularity(&net);
        let ls = latin_square_of(&net).unwrap();
        println!(
            "net #{}: order {}, axioms {}, {}, latin square class {:?}",
            i,
            net.order(),
            if report.pass { "pass" } else { "FAIL" },
            reg.kind,
            ls.order4_class()
        );
        for row in ls.cells() {
            println!("    {:?}", row);
        }
    }

    // the index bound is enforced: |H| = 6 would have index 2
    match subgroup_and_cosets(&group, 6) {
        Err(e) => println!("requesting |H| = 6: {}", e),
        Ok(_) => unreachable!(),
    }
}
