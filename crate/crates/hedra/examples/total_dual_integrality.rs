//! Recognizing and constructing totally dual integral systems.
//!
//! Run with: cargo run --example total_dual_integrality

use hedra::integrality::{is_tdi, is_tdi_definitional, make_tdi, verify_strong_duality};
use hedra::rational::{format_rat, format_vec, rat_int};
use hedra::rep::{HRep, Row, VRep};
use hedra::{convert, Caps, Rat};

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn main() {
    let caps = Caps::default();

    // Two rows through the origin that are not a Hilbert basis.
    let skew = HRep::new(
        2,
        vec![
            Row::new(ints(&[1, 1]), rat_int(0)),
            Row::new(ints(&[1, -1]), rat_int(0)),
        ],
        vec![],
    )
    .unwrap();
    let verdict = is_tdi(&skew, &caps).unwrap();
    println!("skew halfcone TDI? {} ({:?})", verdict.tdi, verdict.violation);
    let def = is_tdi_definitional(&skew, 1, &caps).unwrap();
    println!("definitional sweep agrees: {:?}", def.violation);

    // A triangle whose natural description is not TDI gets repaired.
    let tri = VRep::new(2, vec![ints(&[0, 0]), ints(&[2, 1]), ints(&[1, 2])], vec![]).unwrap();
    let h = convert::v_to_h(&tri, &caps).unwrap();
    println!("triangle rows TDI? {}", is_tdi(&h, &caps).unwrap().tdi);
    let repaired = make_tdi(&h, &caps).unwrap();
    println!("rewritten with {} rows:", repaired.ineqs.len());
    for r in &repaired.ineqs {
        println!("  ({}) . x <= {}", format_vec(&r.a), format_rat(&r.b));
    }
    println!("now TDI? {}", is_tdi(&repaired, &caps).unwrap().tdi);

    // Strong duality on a TDI system with integral right-hand side.
    let report = verify_strong_duality(&repaired, &ints(&[1, 1]), &caps).unwrap();
    let show = |v: Option<hedra::Rat>| v.map(|x| format_rat(&x)).unwrap_or_default();
    println!(
        "max (1,1): integral primal {} = integral dual {} ({})",
        show(report.primal_integral),
        show(report.dual_integral),
        if report.equal { "equal" } else { "NOT equal" }
    );
}
