//! Coordinate elimination and general linear projections.
//!
//! Run with: cargo run --example projection

use hedra::linalg::RatMatrix;
use hedra::projection::{eliminate_coords, eliminate_last, project_general};
use hedra::rational::rat_int;
use hedra::rep::{HRep, Row};
use hedra::{Caps, Rat};

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn cube(n: usize) -> HRep {
    let mut rows = Vec::new();
    for i in 0..n {
        let mut a = vec![0i64; n];
        a[i] = 1;
        rows.push(Row::new(ints(&a), rat_int(1)));
        a[i] = -1;
        rows.push(Row::new(ints(&a), rat_int(0)));
    }
    HRep::new(n, rows, vec![]).unwrap()
}

fn main() {
    let caps = Caps::default();

    // One elimination step with its derivation trace.
    let wedge = HRep::new(
        2,
        vec![
            Row::new(ints(&[1, -1]), rat_int(0)),
            Row::new(ints(&[0, 1]), rat_int(3)),
        ],
        vec![],
    )
    .unwrap();
    let (shadow, trace) = eliminate_last(&wedge, &caps).unwrap();
    println!("eliminating x2 from the wedge leaves {:?}", shadow.ineqs);
    println!("derived as {:?}", trace.steps);
    println!("replay matches: {}", trace.replay(&wedge).unwrap() == shadow.ineqs);

    // Iterated elimination shrinks the cube one axis at a time.
    let shadow = eliminate_coords(&cube(3), &[1, 2], &caps).unwrap();
    println!("3-cube onto its first axis: {:?}", shadow.ineqs);

    // A general projection: total value of the square under (1, 1).
    let sum = RatMatrix::from_i64(&[&[1, 1]]);
    let image = project_general(&cube(2), &sum, &caps).unwrap();
    println!("x1 + x2 over the square ranges over: {:?}", image.ineqs);
}
