//! Feasibility with machine-checkable Farkas certificates.
//!
//! Run with: cargo run --example certificates

use hedra::farkas::{self, Feasibility, Validity};
use hedra::io;
use hedra::rational::{format_vec, rat, rat_int};
use hedra::rep::{HRep, Row};
use hedra::{Caps, Rat};

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn main() {
    let caps = Caps::default();

    // x <= 1 and x >= 2 cannot both hold.
    let contradictory = HRep::new(
        1,
        vec![
            Row::new(ints(&[1]), rat_int(1)),
            Row::new(ints(&[-1]), rat_int(-2)),
        ],
        vec![],
    )
    .unwrap();
    match farkas::feasible(&contradictory, &caps).unwrap() {
        Feasibility::Infeasible(cert) => {
            print!("{}", io::emit_certificate(&cert));
            println!(
                "independent checker accepts: {}",
                farkas::check_infeasibility(&contradictory, &cert)
            );
        }
        Feasibility::Feasible(_) => unreachable!(),
    }

    // Validity of a new inequality comes with multipliers over the rows.
    let diamond = HRep::new(
        2,
        vec![
            Row::new(ints(&[1, 1]), rat_int(1)),
            Row::new(ints(&[1, -1]), rat_int(1)),
            Row::new(ints(&[-1, 1]), rat_int(1)),
            Row::new(ints(&[-1, -1]), rat_int(1)),
        ],
        vec![],
    )
    .unwrap();
    match farkas::is_valid(&diamond, &ints(&[1, 0]), &rat_int(1), &caps).unwrap() {
        Validity::Valid(cert) => {
            println!(
                "x1 <= 1 holds on the diamond; multipliers ({})",
                format_vec(&cert.multipliers)
            );
        }
        Validity::Invalid { .. } => unreachable!(),
    }
    match farkas::is_valid(&diamond, &ints(&[1, 0]), &rat(1, 2), &caps).unwrap() {
        Validity::Invalid { witness } => {
            println!("x1 <= 1/2 fails at the point ({})", format_vec(&witness));
        }
        Validity::Valid(_) => unreachable!(),
    }
}
