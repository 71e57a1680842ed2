//! Outer <-> inner description round trips.
//!
//! Run with: cargo run --example conversions

use hedra::rational::{format_vec, rat_int};
use hedra::rep::{HRep, Row};
use hedra::{convert, Caps, Rat};

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn main() {
    let caps = Caps::default();

    // The unit square as inequality rows.
    let square = HRep::new(
        2,
        vec![
            Row::new(ints(&[1, 0]), rat_int(1)),
            Row::new(ints(&[0, 1]), rat_int(1)),
            Row::new(ints(&[-1, 0]), rat_int(0)),
            Row::new(ints(&[0, -1]), rat_int(0)),
        ],
        vec![],
    )
    .unwrap();

    let inner = convert::h_to_v(&square, &caps).unwrap();
    println!("square vertices: {}", inner.points.len());
    for p in &inner.points {
        println!("  ({})", format_vec(p));
    }

    let outer = convert::v_to_h(&inner, &caps).unwrap();
    println!("back to {} irredundant rows", outer.ineqs.len());

    // An unbounded set splits into points and rays.
    let halfline = HRep::new(1, vec![Row::new(ints(&[-1]), rat_int(0))], vec![]).unwrap();
    let inner = convert::h_to_v(&halfline, &caps).unwrap();
    println!(
        "x >= 0 becomes {} point(s) and {} ray(s)",
        inner.points.len(),
        inner.rays.len()
    );

    // Cones convert through the same machinery.
    let gens = vec![ints(&[1, 0]), ints(&[1, 2])];
    let rows = convert::cone_v_to_h(&gens, 2, &caps).unwrap();
    println!("cone of (1,0), (1,2) has rows:");
    for i in 0..rows.row_count() {
        println!("  ({}) . x <= 0", format_vec(rows.row(i)));
    }
    let back = convert::cone_h_to_v(&rows, &caps).unwrap();
    let back: Vec<String> = back.iter().map(|g| format!("({})", format_vec(g))).collect();
    println!("and converts back to generators {}", back.join(", "));
}
