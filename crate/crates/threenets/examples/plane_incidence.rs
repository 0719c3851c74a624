//! PG(2,q) incidence basics: point/line counts, joins and meets, and the
//! central projection machinery in PG(3,q) behind the subplane family.
//!
//! Run with: cargo run --example plane_incidence

use threenets::field::FieldSpec;
use threenets::geometry::{
    all_lines, all_points, line_through, meet, project_from_point, PlaneChart, ProjPlane3,
    ProjPoint, ProjPoint3,
};

fn main() {
    for q in [2u64, 3, 5, 7] {
        let f = FieldSpec::new(q, 1).unwrap();
        let pts = all_points(&f);
        let lines = all_lines(&f);
        println!(
            "PG(2,{}): {} points, {} lines, {} points per line",
            q,
            pts.len(),
            lines.len(),
            lines[0].points().len()
        );
    }

    let f = FieldSpec::new(7, 1).unwrap();
    let p = ProjPoint::from_ints(&f, 1, 0, 0);
    let q = ProjPoint::from_ints(&f, 0, 1, 0);
    let l = line_through(&p, &q).unwrap();
    println!("\nline through (1:0:0) and (0:1:0): {:?}", l);
    let m = threenets::geometry::ProjLine::from_ints(&f, 0, 1, 0);
    println!("meet with [0:1:0]: {:?}", meet(&l, &m).unwrap());

    // central projection in PG(3,7) onto the plane at infinity
    let center = ProjPoint3::new([f.from_int(2), f.from_int(3), f.from_int(1), f.one()]).unwrap();
    let screen = ProjPlane3::new([f.zero(), f.zero(), f.zero(), f.one()]).unwrap();
    let chart = PlaneChart::new(&screen);
    let target = ProjPoint3::new([f.from_int(5), f.from_int(1), f.from_int(4), f.one()]).unwrap();
    let image = project_from_point(&center, &target, &screen).unwrap();
    println!(
        "\nprojecting {:?} from {:?}: image {:?} reads as {:?} in the chart",
        target,
        center,
        image,
        chart.to_plane(&image)
    );
}
