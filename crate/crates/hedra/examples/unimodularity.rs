//! Total unimodularity, incidence matrices, and the integral polytopes
//! they generate.
//!
//! Run with: cargo run --example unimodularity

use hedra::integrality::is_integral;
use hedra::rational::rat_int;
use hedra::unimod::{
    circulation_polytope, is_bipartite, is_tu_determinant, is_tu_ghouila_houri,
    matching_polytope_bipartite, network_matrix, node_edge_incidence, Digraph, Graph,
};
use hedra::{convert, Caps};

fn main() {
    let caps = Caps::default();

    // The triangle's incidence matrix is the smallest non-TU example.
    let c3 = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    println!("C3 bipartite? {:?}", is_bipartite(&c3));
    let inc = node_edge_incidence(&c3);
    println!("determinant oracle: {:?}", is_tu_determinant(&inc, &caps).unwrap().witness);
    println!("signing oracle:     {:?}", is_tu_ghouila_houri(&inc, &caps).unwrap().witness);

    // Network matrices are always TU.
    let d = Digraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
    let n = network_matrix(&d, &[0, 1, 2]).unwrap();
    println!("network matrix TU? {}", is_tu_determinant(&n, &caps).unwrap().is_tu);

    // The bipartite matching polytope has exactly the matchings as
    // vertices.
    let k22 = Graph::new(4, vec![(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    let h = matching_polytope_bipartite(&k22).unwrap();
    let v = convert::h_to_v(&h, &caps).unwrap();
    println!("K22 matching polytope has {} vertices", v.points.len());

    // Circulations under integral bounds form an integral polytope.
    let two_cycle = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
    let circ = circulation_polytope(
        &two_cycle,
        &[rat_int(0), rat_int(0)],
        &[rat_int(3), rat_int(5)],
    )
    .unwrap();
    println!("circulation polytope integral? {}", is_integral(&circ, &caps).unwrap().integral);
}
