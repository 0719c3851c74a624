//! Plane curves by exact interpolation: rank certificates through point
//! sets, conic irreducibility, cubic non-singularity, tangent lines.
//!
//! Run with: cargo run --example conics_and_cubics

use threenets::curves::{
    curves_through, is_irreducible_conic, is_nonsingular_cubic, Conic, Cubic,
};
use threenets::field::FieldSpec;
use threenets::geometry::ProjPoint;

fn main() {
    let f7 = FieldSpec::new(7, 1).unwrap();

    // five points of Y² = XZ determine the conic exactly
    let pts = [
        ProjPoint::from_ints(&f7, 1, 0, 0),
        ProjPoint::from_ints(&f7, 0, 0, 1),
        ProjPoint::from_ints(&f7, 1, 1, 1),
        ProjPoint::from_ints(&f7, 4, 2, 1),
        ProjPoint::from_ints(&f7, 2, 3, 1),
    ];
    let cert = curves_through(&pts, 2);
    println!(
        "5 points on Y²=XZ: rank {} of {}, nullity {}",
        cert.rank, cert.cols, cert.nullity()
    );
    let conic = Conic::new(cert.nullspace[0].clone()).unwrap();
    println!(
        "  interpolated conic irreducible: {} ({} rational points)",
        is_irreducible_conic(&conic),
        conic.rational_points().len()
    );
    let tangent = conic.tangent_line(&pts[1]).unwrap();
    println!("  tangent at (0:0:1): {:?}", tangent);

    let split = Conic::from_ints(&f7, &[0, 0, 0, 1, 0, 0]); // XY
    println!(
        "the split conic XY is irreducible: {}",
        is_irreducible_conic(&split)
    );

    let f5 = FieldSpec::new(5, 1).unwrap();
    let smooth = Cubic::from_ints(&f5, &[-1, 0, -1, 0, 0, 0, 1, 0, 0, 0]); // Y²Z - X³ - Z³
    let cusp = Cubic::from_ints(&f5, &[-1, 0, 0, 0, 0, 0, 1, 0, 0, 0]); // Y²Z - X³
    println!(
        "\nY²Z-X³-Z³ over GF(5): non-singular = {} ({} points)",
        is_nonsingular_cubic(&smooth),
        smooth.rational_points().len()
    );
    println!(
        "Y²Z-X³    over GF(5): non-singular = {} (cusp at (0:0:1))",
        is_nonsingular_cubic(&cusp)
    );
}
