//! Exact arithmetic in GF(p^k): construction, enumeration order, and the
//! deterministic subfield embeddings everything else is built on.
//!
//! Run with: cargo run --example field_tour

use threenets::field::{embed_subfield, FieldSpec};

fn main() {
    let f8 = FieldSpec::new(2, 3).unwrap();
    println!(
        "GF(8): modulus coefficients (low degree first) = {:?}",
        f8.modulus()
    );
    let x = f8.element(&[0, 1]);
    let x2 = f8.element(&[0, 0, 1]);
    println!("  x * x² = {:?}  (reduced by the modulus)", x.mul(&x2).coeffs());

    let f9 = FieldSpec::new(3, 2).unwrap();
    println!("\nGF(9) enumeration (zero first, base-p order):");
    for e in f9.enumerate() {
        print!(" {:?}", e.coeffs());
    }
    println!();

    println!("\nFermat check over GF(9): a^(q-1) = 1 for every nonzero a");
    for a in f9.enumerate().into_iter().filter(|a| !a.is_zero()) {
        assert!(a.pow(8).is_one());
    }
    println!("  all 8 nonzero elements pass");

    let f4 = FieldSpec::new(2, 2).unwrap();
    let f64 = FieldSpec::new(2, 6).unwrap();
    let emb = embed_subfield(&f4, &f64).unwrap();
    println!("\nGF(4) -> GF(64) canonical embedding:");
    for a in f4.enumerate() {
        println!("  {:?} -> {:?}", a.coeffs(), emb.apply(&a).coeffs());
    }
    let gen = f4
        .enumerate()
        .into_iter()
        .find(|a| !a.is_zero() && a.mult_order() == 3)
        .unwrap();
    println!(
        "  the image of a generator keeps multiplicative order {}",
        emb.apply(&gen).mult_order()
    );
}
