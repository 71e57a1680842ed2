//! Vertices, facets, the face lattice and irredundancy certification.
//!
//! Run with: cargo run --example face_structure

use hedra::rational::{format_vec, rat, rat_int};
use hedra::rep::{HRep, Row, VRep};
use hedra::structure;
use hedra::{Caps, Rat};

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn main() {
    let caps = Caps::default();
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

    for v in structure::vertices(&square, &caps).unwrap() {
        println!("vertex ({})", format_vec(&v));
    }
    println!("dimension: {}", structure::dimension(&square, &caps).unwrap());

    for face in structure::faces(&square, 100, &caps).unwrap() {
        println!("face dim {} tight rows {:?}", face.dim, face.equality_set);
    }

    // A redundant row defines no facet and fails the irredundancy check.
    let mut padded = square.clone();
    padded.ineqs.push(Row::new(ints(&[1, 1]), rat_int(3)));
    let verdict = structure::certify_irredundant_h(&padded, &caps).unwrap();
    println!("padded square irredundant? {} ({:?})", verdict.irredundant, verdict.violation);

    // The inner-description side: an interior point is flagged.
    let v = VRep::new(
        2,
        vec![
            ints(&[0, 0]),
            ints(&[1, 0]),
            ints(&[0, 1]),
            ints(&[1, 1]),
            vec![rat(1, 2), rat(1, 2)],
        ],
        vec![],
    )
    .unwrap();
    let verdict = structure::certify_irredundant_v(&v, &caps).unwrap();
    println!("with interior point: {:?}", verdict.violation);
}
