//! The text formats: parse, compute, emit.
//!
//! Run with: cargo run --example file_formats

use hedra::io::{emit_certificate, emit_hrep, emit_vrep, parse_poly, PolyFile};
use hedra::farkas::{feasible, Feasibility};
use hedra::{convert, Caps};

fn main() {
    let caps = Caps::default();
    let text = "\
# the unit square
hrep
4 2
1 0 1
0 1 1
-1 0 0
0 -1 0
";
    let PolyFile::H(square) = parse_poly(text).unwrap() else {
        unreachable!()
    };
    println!("parsed {} rows in dimension {}", square.ineqs.len(), square.dim);

    let v = convert::h_to_v(&square, &caps).unwrap();
    print!("{}", emit_vrep(&v.canonicalized()));
    print!("{}", emit_hrep(&convert::v_to_h(&v, &caps).unwrap()));

    let infeasible = "hrep\n2 1\n1 1\n-1 -2\n";
    let PolyFile::H(h) = parse_poly(infeasible).unwrap() else {
        unreachable!()
    };
    if let Feasibility::Infeasible(cert) = feasible(&h, &caps).unwrap() {
        print!("{}", emit_certificate(&cert));
    }
}
