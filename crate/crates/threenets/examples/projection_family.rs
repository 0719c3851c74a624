//! The subplane projection family: three parallel planes of AG(3,F_r)
//! inside AG(3,F_q) with q > r², projected from a point that avoids every
//! secant of the third plane. The result is an order-r² net with C on a
//! line whose A and B lie on no conic and on no cubic.
//!
//! Run with: cargo run --example projection_family

use threenets::curves::curves_through;
use threenets::geometry::{collinear, line_through};
use threenets::nets::{construct_projection, verify_axioms};

fn main() {
    for (r, q) in [(4u64, 16u64), (3, 81), (4, 64)] {
        match construct_projection(r, q) {
            Ok(net) => {
                let report = verify_axioms(&net).unwrap();
                println!(
                    "(r, q) = ({}, {}): order-{} net, axioms {}, C collinear {}",
                    r,
                    q,
                    net.order(),
                    if report.pass { "pass" } else { "FAIL" },
                    collinear(net.c())
                );
                let mut ab = net.a().to_vec();
                ab.extend(net.b().iter().cloned());
                println!(
                    "  conic through A ∪ B: nullity {} | cubic through A: nullity {} | through B: nullity {}",
                    curves_through(&ab, 2).nullity(),
                    curves_through(net.a(), 3).nullity(),
                    curves_through(net.b(), 3).nullity(),
                );
                // collinear 4-point subsets of A (the traces of the subplane lines)
                let comp = net.a();
                let mut four_secants = 0;
                let mut max_on_line = 0;
                for i in 0..comp.len() {
                    for j in (i + 1)..comp.len() {
                        let line = line_through(&comp[i], &comp[j]).unwrap();
                        let on: Vec<usize> =
                            (0..comp.len()).filter(|&t| comp[t].on(&line)).collect();
                        if on[0] == i && on[1] == j {
                            max_on_line = max_on_line.max(on.len());
                            if on.len() == 4 {
                                four_secants += 1;
                            }
                        }
                    }
                }
                println!(
                    "  A carries {} collinear 4-point subsets and never {} on a line",
                    four_secants,
                    max_on_line + 1
                );
            }
            Err(e) => println!("(r, q) = ({}, {}): rejected — {}", r, q, e),
        }
    }
}
