//! Shared fixtures for the integration suites: the 15-instance corpus and
//! exact set-equality certification helpers.
//!
//! Each integration target compiles its own copy, so not every helper is
//! used by every suite.
#![allow(dead_code)]

use hedra::farkas::{self, Feasibility, Validity};
use hedra::rational::{rat, rat_int, Rat};
use hedra::rep::{HRep, Row, VRep};
use hedra::Caps;
use num::Zero;

pub fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

pub fn row(a: &[i64], b: i64) -> Row {
    Row::new(ints(a), rat_int(b))
}

pub fn cube(n: usize) -> HRep {
    let mut rows = Vec::new();
    for i in 0..n {
        let mut a = vec![0i64; n];
        a[i] = 1;
        rows.push(row(&a, 1));
        a[i] = -1;
        rows.push(row(&a, 0));
    }
    HRep::new(n, rows, vec![]).unwrap()
}

pub fn simplex(n: usize) -> HRep {
    let mut rows = Vec::new();
    for i in 0..n {
        let mut a = vec![0i64; n];
        a[i] = -1;
        rows.push(row(&a, 0));
    }
    rows.push(row(&vec![1i64; n], 1));
    HRep::new(n, rows, vec![]).unwrap()
}

pub fn cross_polytope(n: usize) -> HRep {
    let mut rows = Vec::new();
    for mask in 0..(1u32 << n) {
        let a: Vec<i64> = (0..n)
            .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
            .collect();
        rows.push(row(&a, 1));
    }
    HRep::new(n, rows, vec![]).unwrap()
}

/// The nonnegative orthant in three variables.
pub fn orthant3() -> HRep {
    HRep::new(
        3,
        vec![row(&[-1, 0, 0], 0), row(&[0, -1, 0], 0), row(&[0, 0, -1], 0)],
        vec![],
    )
    .unwrap()
}

/// A skew two-dimensional cone spanned by (1, 0) and (1, 2).
pub fn skew_cone() -> HRep {
    HRep::new(2, vec![row(&[0, -1], 0), row(&[-2, 1], 0)], vec![]).unwrap()
}

/// Half-plane with the lineality line spanned by (1, −1).
pub fn halfplane() -> HRep {
    HRep::new(2, vec![row(&[1, 1], 1)], vec![]).unwrap()
}

/// A contradictory interval.
pub fn empty_interval() -> HRep {
    HRep::new(1, vec![row(&[1], 1), row(&[-1], -2)], vec![]).unwrap()
}

/// Triangle with one fractional vertex: conv{(0,0), (2,0), (0,3/2)}.
pub fn fractional_triangle() -> HRep {
    let v = VRep::new(
        2,
        vec![ints(&[0, 0]), ints(&[2, 0]), vec![rat_int(0), rat(3, 2)]],
        vec![],
    )
    .unwrap();
    hedra::convert::v_to_h(&v, &Caps::default()).unwrap()
}

/// The 15-instance corpus: cubes and simplices and cross-polytopes in
/// small dimension, two unbounded cones, one lineality-bearing
/// polyhedron, one empty system, one fractional polytope.
pub fn corpus() -> Vec<(&'static str, HRep)> {
    vec![
        ("cube1", cube(1)),
        ("cube2", cube(2)),
        ("cube3", cube(3)),
        ("cube4", cube(4)),
        ("simplex2", simplex(2)),
        ("simplex3", simplex(3)),
        ("simplex4", simplex(4)),
        ("cross2", cross_polytope(2)),
        ("cross3", cross_polytope(3)),
        ("cross4", cross_polytope(4)),
        ("orthant3", orthant3()),
        ("skew_cone", skew_cone()),
        ("halfplane", halfplane()),
        ("empty", empty_interval()),
        ("fractional_triangle", fractional_triangle()),
    ]
}

/// Names of the bounded corpus members.
pub fn corpus_polytopes() -> Vec<(&'static str, HRep)> {
    corpus()
        .into_iter()
        .filter(|(name, _)| !matches!(*name, "orthant3" | "skew_cone" | "halfplane" | "empty"))
        .collect()
}

/// Exact set equality of two outer descriptions, certified by validity of
/// every row of each system over the other (equations as both halves).
pub fn same_set(a: &HRep, b: &HRep, caps: &Caps) -> bool {
    let a_empty = matches!(farkas::feasible(a, caps).unwrap(), Feasibility::Infeasible(_));
    let b_empty = matches!(farkas::feasible(b, caps).unwrap(), Feasibility::Infeasible(_));
    if a_empty || b_empty {
        return a_empty == b_empty;
    }
    rows_valid_on(a, b, caps) && rows_valid_on(b, a, caps)
}

/// Every row of `sys` is validity-certified over `base`.
pub fn rows_valid_on(sys: &HRep, base: &HRep, caps: &Caps) -> bool {
    sys.expanded_rows().iter().all(|r| {
        matches!(
            farkas::is_valid(base, &r.a, &r.b, caps).unwrap(),
            Validity::Valid(_)
        )
    })
}

/// Every generator of `v` lies in the set described by `h` (points
/// satisfy the rows, rays satisfy the homogeneous rows).
pub fn generators_inside(v: &VRep, h: &HRep) -> bool {
    let hom = h.homogeneous();
    v.points.iter().all(|p| h.contains(p).unwrap())
        && v.rays.iter().all(|r| hom.contains(r).unwrap())
}

/// Membership of a point in the homogeneous cone of an HRep.
pub fn in_recession_cone(h: &HRep, y: &[Rat]) -> bool {
    let hom = h.homogeneous();
    hom.contains(y).unwrap()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}
