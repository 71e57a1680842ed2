//! Integral Hilbert bases of pointed cones and monoid membership.
//!
//! Run with: cargo run --example hilbert_basis

use hedra::integrality::{hilbert_basis, lattice_decomposition, mono_member, positive_functional};
use hedra::rational::rat_int;
use hedra::rep::{HRep, Row};
use hedra::{Caps, Rat};

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn main() {
    let caps = Caps::default();

    // The cone of (1,0) and (1,2) needs the interior vector (1,1).
    let basis = hilbert_basis(&[ints(&[1, 0]), ints(&[1, 2])], &caps).unwrap();
    println!("Hilbert basis: {:?}", basis.basis);

    let w = positive_functional(&basis.generators, &caps)
        .unwrap()
        .expect("pointed cone");
    let target = vec![5i64, 4];
    match mono_member(&basis.basis, &w, &target, &caps).unwrap() {
        Some(ks) => println!("{target:?} = sum of basis elements with multiplicities {ks:?}"),
        None => println!("{target:?} is not a natural combination"),
    }

    // The same cone as an outer description decomposes its lattice.
    let cone = HRep::new(
        2,
        vec![
            Row::new(ints(&[0, -1]), rat_int(0)),
            Row::new(ints(&[-2, 1]), rat_int(0)),
        ],
        vec![],
    )
    .unwrap();
    let d = lattice_decomposition(&cone, &caps).unwrap();
    println!("cone lattice = {:?} + mono({:?})", d.points, d.generators);
}
