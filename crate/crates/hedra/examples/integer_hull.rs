//! Integer hulls and vertex integrality.
//!
//! Run with: cargo run --example integer_hull

use hedra::integrality::{integer_hull, is_integral, lattice_points};
use hedra::rational::{format_vec, rat, rat_int};
use hedra::rep::VRep;
use hedra::{convert, Caps, Rat};

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn main() {
    let caps = Caps::default();

    // A triangle with one fractional vertex.
    let v = VRep::new(
        2,
        vec![ints(&[0, 0]), ints(&[2, 0]), vec![rat_int(0), rat(3, 2)]],
        vec![],
    )
    .unwrap();
    let h = convert::v_to_h(&v, &caps).unwrap();

    let verdict = is_integral(&h, &caps).unwrap();
    println!(
        "integral? {} (witness: {})",
        verdict.integral,
        verdict
            .fractional_vertex
            .as_deref()
            .map(format_vec)
            .unwrap_or_default()
    );

    println!("lattice points: {:?}", lattice_points(&h, &caps).unwrap());

    let hull = integer_hull(&h, &caps).unwrap();
    let hull_v = convert::h_to_v(&hull, &caps).unwrap();
    for p in &hull_v.points {
        println!("hull vertex ({})", format_vec(p));
    }
    println!(
        "hull is integral: {}",
        is_integral(&hull, &caps).unwrap().integral
    );
}
