//! Exact linear optimization by vertex enumeration.
//!
//! Run with: cargo run --example optimization

use hedra::rational::{format_rat, format_vec, rat_int};
use hedra::rep::{HRep, Row};
use hedra::structure::{optimize, OptOutcome};
use hedra::{Caps, Rat};

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn main() {
    let caps = Caps::default();
    let triangle = HRep::new(
        2,
        vec![
            Row::new(ints(&[-3, 1]), rat_int(0)),
            Row::new(ints(&[1, -3]), rat_int(0)),
            Row::new(ints(&[1, 1]), rat_int(4)),
        ],
        vec![],
    )
    .unwrap();

    for c in [ints(&[1, 1]), ints(&[1, 0]), ints(&[-1, -1])] {
        match optimize(&triangle, &c, &caps).unwrap() {
            OptOutcome::Optimal { value, argmax } => {
                println!(
                    "max ({}): value {} at ({})",
                    format_vec(&c),
                    format_rat(&value),
                    format_vec(&argmax)
                );
            }
            other => println!("max ({}): {other:?}", format_vec(&c)),
        }
    }

    // Unbounded directions are reported as improving rays.
    let halfplane = HRep::new(2, vec![Row::new(ints(&[-1, 0]), rat_int(0))], vec![]).unwrap();
    match optimize(&halfplane, &ints(&[1, 0]), &caps).unwrap() {
        OptOutcome::Unbounded { ray } => println!("x1 is unbounded along ({})", format_vec(&ray)),
        _ => unreachable!(),
    }
}
