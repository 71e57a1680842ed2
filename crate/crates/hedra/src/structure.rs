//! Structural analysis of H-represented polyhedra: recession cone,
//! lineality space, dimension and affine hull, vertices, the face lattice,
//! facets, irredundancy certification, and exact linear optimization.
//!
//! Enumeration here is deliberately exhaustive (all basic solutions, all
//! tight-row subsets): correctness over speed, with explicit caps.

use std::collections::BTreeSet;

use itertools::Itertools;
use num::{Signed, Zero};

use crate::convert;
use crate::error::{Error, Result};
use crate::farkas::{self, Certificate, Feasibility, Validity};
use crate::linalg::{self, dot, to_primitive, RatMatrix};
use crate::rational::Rat;
use crate::rep::{HRep, Row, VRep};
use crate::Caps;

/// Recession cone `{y : Ay ≤ 0, A'y = 0}` of a nonempty polyhedron: the
/// same rows with zeroed right-hand sides.
pub fn char_cone(h: &HRep, caps: &Caps) -> Result<HRep> {
    require_nonempty(h, caps)?;
    Ok(h.homogeneous())
}

/// Basis of the lineality space `ker(A)` of a nonempty polyhedron.
pub fn lineality_space(h: &HRep, caps: &Caps) -> Result<Vec<Vec<Rat>>> {
    require_nonempty(h, caps)?;
    let rows: Vec<Vec<Rat>> = h.ineqs.iter().chain(&h.eqs).map(|r| r.a.clone()).collect();
    if rows.is_empty() {
        return Ok(linalg::kernel_basis(&RatMatrix::zero(0, h.dim)));
    }
    Ok(linalg::kernel_basis(&RatMatrix::from_rows(rows)?))
}

fn require_nonempty(h: &HRep, caps: &Caps) -> Result<Vec<Rat>> {
    match farkas::feasible(h, caps)? {
        Feasibility::Feasible(x) => Ok(x),
        Feasibility::Infeasible(_) => Err(Error::pre(
            "operation requires a nonempty polyhedron; run feasible() first".to_string(),
        )),
    }
}

fn is_pointed(h: &HRep, caps: &Caps) -> Result<bool> {
    Ok(lineality_space(h, caps)?.is_empty())
}

/// Full-row-rank equation system describing the affine hull, found by
/// detecting implicit equalities among the inequality rows. Errors on the
/// empty polyhedron.
pub fn affine_hull(h: &HRep, caps: &Caps) -> Result<Vec<Row>> {
    require_nonempty(h, caps)?;
    let mut vectors: Vec<Vec<Rat>> = Vec::new();
    for eq in &h.eqs {
        let mut v = eq.a.clone();
        v.push(eq.b.clone());
        vectors.push(v);
    }
    for row in &h.ineqs {
        let reversed = linalg::neg(&row.a);
        if matches!(
            farkas::is_valid(h, &reversed, &-row.b.clone(), caps)?,
            Validity::Valid(_)
        ) {
            let mut v = row.a.clone();
            v.push(row.b.clone());
            vectors.push(v);
        }
    }
    // Keep an independent subsystem.
    let mut rows: Vec<Row> = Vec::new();
    let mut kept: Vec<Vec<Rat>> = Vec::new();
    for v in vectors {
        let mut candidate = kept.clone();
        candidate.push(v.clone());
        let m = RatMatrix::from_rows(candidate.clone())?;
        if linalg::rank(&m) == candidate.len() {
            kept = candidate;
            let mut a = v;
            let b = a.pop().expect("augmented row is nonempty");
            rows.push(Row::new(a, b));
        }
    }
    Ok(rows)
}

/// Affine dimension; the empty polyhedron has dimension −1 by convention.
pub fn dimension(h: &HRep, caps: &Caps) -> Result<i64> {
    if matches!(farkas::feasible(h, caps)?, Feasibility::Infeasible(_)) {
        return Ok(-1);
    }
    let hull = affine_hull(h, caps)?;
    Ok(h.dim as i64 - hull.len() as i64)
}

/// All vertices, by exhaustive basic-solution enumeration: every choice of
/// `n` rows with a regular coefficient matrix is solved exactly and kept
/// when feasible. Requires a pointed input (quotient nonpointed polyhedra
/// by their lineality space first).
pub fn vertices(h: &HRep, caps: &Caps) -> Result<Vec<Vec<Rat>>> {
    if !is_pointed(h, caps)? {
        return Err(Error::pre(
            "vertex enumeration needs a pointed polyhedron; project along the lineality space first"
                .to_string(),
        ));
    }
    let rows = h.expanded_rows();
    let n = h.dim;
    let m = rows.len();
    if n > m {
        // Pointedness needs n independent rows, so this cannot happen.
        return Ok(Vec::new());
    }
    binomial_capped(m, n, caps.max_subsets).ok_or_else(|| {
        Error::cap(format!(
            "basic-solution candidates exceed the cap {}",
            caps.max_subsets
        ))
    })?;
    let mut found: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for subset in (0..m).combinations(n) {
        let a = RatMatrix::from_rows(subset.iter().map(|&i| rows[i].a.clone()).collect())?;
        let b: Vec<Rat> = subset.iter().map(|&i| rows[i].b.clone()).collect();
        let Ok(x) = linalg::cramer_solve(&a, &b) else {
            continue;
        };
        if h.contains(&x)? {
            found.insert(x);
        }
    }
    Ok(found.into_iter().collect())
}

/// `C(m, k)` if it stays at or below `cap`.
fn binomial_capped(m: usize, k: usize, cap: usize) -> Option<usize> {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((m - i) as u128)? / (i as u128 + 1);
        if acc > cap as u128 {
            return None;
        }
    }
    Some(acc as usize)
}

/// Extreme rays of the recession cone of a pointed polyhedron: kernels of
/// rank `n − 1` tight-row subsets, sign-selected by feasibility,
/// primitive-normalized and sorted.
pub fn extreme_rays(h: &HRep, caps: &Caps) -> Result<Vec<Vec<Rat>>> {
    if !is_pointed(h, caps)? {
        return Err(Error::pre(
            "extreme rays need a pointed polyhedron; project along the lineality space first"
                .to_string(),
        ));
    }
    let n = h.dim;
    if n == 0 {
        return Ok(Vec::new());
    }
    let cone = h.homogeneous();
    let rows = cone.expanded_rows();
    let m = rows.len();
    if m < n - 1 {
        return Ok(Vec::new());
    }
    binomial_capped(m, n - 1, caps.max_subsets).ok_or_else(|| {
        Error::cap(format!(
            "extreme-ray candidates exceed the cap {}",
            caps.max_subsets
        ))
    })?;
    let mut found: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for subset in (0..m).combinations(n - 1) {
        let a = if subset.is_empty() {
            RatMatrix::zero(0, n)
        } else {
            RatMatrix::from_rows(subset.iter().map(|&i| rows[i].a.clone()).collect())?
        };
        let kernel = linalg::kernel_basis(&a);
        if kernel.len() != 1 {
            continue;
        }
        let v = &kernel[0];
        for candidate in [v.clone(), linalg::neg(v)] {
            if cone.contains(&candidate)? {
                found.insert(to_primitive(&candidate).0);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// A face encoded by its maximal tight-row set. Row indices refer to the
/// expanded row order (inequalities first, then each equation as a
/// `≤`/`≥` pair); equation halves are tight on every face. The empty face
/// is reported with the full index set, dimension −1 and no
/// representative point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceDescriptor {
    pub equality_set: BTreeSet<usize>,
    pub dim: i64,
    pub representative: Option<Vec<Rat>>,
}

/// The system whose solutions are exactly the face with the given tight
/// inequality rows.
fn face_system(h: &HRep, tight: &BTreeSet<usize>) -> Result<HRep> {
    let mut ineqs = Vec::new();
    let mut eqs = h.eqs.clone();
    for (i, row) in h.ineqs.iter().enumerate() {
        if tight.contains(&i) {
            eqs.push(row.clone());
        } else {
            ineqs.push(row.clone());
        }
    }
    HRep::new(h.dim, ineqs, eqs)
}

/// Maximal tight inequality set, dimension, and a representative point of
/// a nonempty face.
type ClosedFace = (BTreeSet<usize>, i64, Vec<Rat>);

/// Maximal tight set of the nonempty face spanned by `seed`. Indices are
/// positions in `h.ineqs`; `None` when the face is empty.
fn close_face(h: &HRep, seed: &BTreeSet<usize>, caps: &Caps) -> Result<Option<ClosedFace>> {
    let sys = face_system(h, seed)?;
    let representative = match farkas::feasible(&sys, caps)? {
        Feasibility::Feasible(x) => x,
        Feasibility::Infeasible(_) => return Ok(None),
    };
    let mut tight = seed.clone();
    for (i, row) in h.ineqs.iter().enumerate() {
        if tight.contains(&i) {
            continue;
        }
        let reversed = linalg::neg(&row.a);
        if matches!(
            farkas::is_valid(&sys, &reversed, &-row.b.clone(), caps)?,
            Validity::Valid(_)
        ) {
            tight.insert(i);
        }
    }
    let closed = face_system(h, &tight)?;
    let dim = dimension(&closed, caps)?;
    Ok(Some((tight, dim, representative)))
}

fn expanded_equality_set(h: &HRep, tight_ineqs: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = tight_ineqs.clone();
    let m = h.ineqs.len();
    for i in 0..2 * h.eqs.len() {
        set.insert(m + i);
    }
    set
}

/// Enumerates the face lattice by closing every subset of inequality
/// rows, including the two trivial faces. Faces are sorted by dimension,
/// then by equality set. `max_count` caps the number of distinct faces.
pub fn faces(h: &HRep, max_count: usize, caps: &Caps) -> Result<Vec<FaceDescriptor>> {
    let empty_face = FaceDescriptor {
        equality_set: (0..h.expanded_len()).collect(),
        dim: -1,
        representative: None,
    };
    if matches!(farkas::feasible(h, caps)?, Feasibility::Infeasible(_)) {
        return Ok(vec![empty_face]);
    }
    let m = h.ineqs.len();
    if m >= usize::BITS as usize - 1 || (1usize << m) > caps.max_subsets {
        return Err(Error::cap(format!(
            "face enumeration over {m} rows exceeds the subset cap"
        )));
    }
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut out: Vec<FaceDescriptor> = vec![empty_face];
    for mask in 0..(1usize << m) {
        let seed: BTreeSet<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        let Some((tight, dim, representative)) = close_face(h, &seed, caps)? else {
            continue;
        };
        if !seen.insert(tight.clone()) {
            continue;
        }
        if out.len() == max_count {
            return Err(Error::cap(format!("more than {max_count} faces requested")));
        }
        out.push(FaceDescriptor {
            equality_set: expanded_equality_set(h, &tight),
            dim,
            representative: Some(representative),
        });
    }
    out.sort_by(|x, y| (x.dim, &x.equality_set).cmp(&(y.dim, &y.equality_set)));
    Ok(out)
}

/// Inequality rows defining facets (faces of dimension `dim(P) − 1`),
/// paired with the face they define. Indices refer to `h.ineqs`.
pub fn facets(h: &HRep, caps: &Caps) -> Result<Vec<(usize, FaceDescriptor)>> {
    require_nonempty(h, caps)?;
    let ambient = dimension(h, caps)?;
    let mut out = Vec::new();
    for i in 0..h.ineqs.len() {
        let seed: BTreeSet<usize> = BTreeSet::from([i]);
        let Some((tight, dim, representative)) = close_face(h, &seed, caps)? else {
            continue;
        };
        if dim == ambient - 1 {
            out.push((
                i,
                FaceDescriptor {
                    equality_set: expanded_equality_set(h, &tight),
                    dim,
                    representative: Some(representative),
                },
            ));
        }
    }
    Ok(out)
}

/// Verdict of an irredundancy check, with the first violated clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irredundancy {
    pub irredundant: bool,
    pub violation: Option<String>,
}

impl Irredundancy {
    fn ok() -> Self {
        Self {
            irredundant: true,
            violation: None,
        }
    }

    fn violated(msg: String) -> Self {
        Self {
            irredundant: false,
            violation: Some(msg),
        }
    }
}

/// Checks that an outer description is irredundant: the equation system
/// has full row rank, no inequality is an implicit equality, every
/// inequality defines a facet, and no two inequalities define the same
/// facet.
pub fn certify_irredundant_h(h: &HRep, caps: &Caps) -> Result<Irredundancy> {
    require_nonempty(h, caps)?;
    if !h.eqs.is_empty() {
        let m = RatMatrix::from_rows(h.eqs.iter().map(|r| r.a.clone()).collect())?;
        if linalg::rank(&m) < h.eqs.len() {
            return Ok(Irredundancy::violated(
                "equation rows are linearly dependent".to_string(),
            ));
        }
    }
    let ambient = dimension(h, caps)?;
    let mut facet_sets: Vec<(usize, BTreeSet<usize>)> = Vec::new();
    for (i, row) in h.ineqs.iter().enumerate() {
        let reversed = linalg::neg(&row.a);
        if matches!(
            farkas::is_valid(h, &reversed, &-row.b.clone(), caps)?,
            Validity::Valid(_)
        ) {
            return Ok(Irredundancy::violated(format!(
                "row {i} is an implicit equality"
            )));
        }
        let closed = close_face(h, &BTreeSet::from([i]), caps)?;
        match closed {
            Some((tight, dim, _)) if dim == ambient - 1 => facet_sets.push((i, tight)),
            _ => {
                return Ok(Irredundancy::violated(format!("row {i} defines no facet")));
            }
        }
    }
    for k in 0..facet_sets.len() {
        for l in k + 1..facet_sets.len() {
            if facet_sets[k].1 == facet_sets[l].1 {
                return Ok(Irredundancy::violated(format!(
                    "rows {} and {} define the same facet",
                    facet_sets[k].0, facet_sets[l].0
                )));
            }
        }
    }
    Ok(Irredundancy::ok())
}

/// Checks that an inner description of a pointed polyhedron is
/// irredundant: the points are exactly the vertices and the rays pick
/// exactly one vector from each extreme ray.
pub fn certify_irredundant_v(v: &VRep, caps: &Caps) -> Result<Irredundancy> {
    if v.is_empty() {
        return Err(Error::pre(
            "irredundancy of an inner description is defined for nonempty pointed sets".to_string(),
        ));
    }
    let h = convert::v_to_h(v, caps)?;
    if !is_pointed(&h, caps)? {
        return Err(Error::pre(
            "inner irredundancy needs a pointed polyhedron".to_string(),
        ));
    }
    let vertex_set: BTreeSet<Vec<Rat>> = vertices(&h, caps)?.into_iter().collect();
    for p in &v.points {
        if !vertex_set.contains(p) {
            return Ok(Irredundancy::violated(format!(
                "point ({}) is not a vertex",
                crate::rational::format_vec(p)
            )));
        }
    }
    let points: BTreeSet<Vec<Rat>> = v.points.iter().cloned().collect();
    for vertex in &vertex_set {
        if !points.contains(vertex) {
            return Ok(Irredundancy::violated(format!(
                "vertex ({}) is missing from the point set",
                crate::rational::format_vec(vertex)
            )));
        }
    }
    if points.len() < v.points.len() {
        return Ok(Irredundancy::violated("duplicate points".to_string()));
    }
    let extreme: BTreeSet<Vec<Rat>> = extreme_rays(&h, caps)?.into_iter().collect();
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for (i, ray) in v.rays.iter().enumerate() {
        let primitive = to_primitive(ray).0;
        if !extreme.contains(&primitive) {
            return Ok(Irredundancy::violated(format!(
                "ray ({}) is not extreme",
                crate::rational::format_vec(ray)
            )));
        }
        if !seen.insert(primitive.clone()) {
            let j = v.rays[..i]
                .iter()
                .position(|r| to_primitive(r).0 == primitive)
                .expect("duplicate has an earlier twin");
            return Ok(Irredundancy::violated(format!(
                "rays {j} and {i} span the same extreme ray"
            )));
        }
    }
    for ray in &extreme {
        if !seen.contains(ray) {
            return Ok(Irredundancy::violated(format!(
                "extreme ray ({}) is missing from the ray set",
                crate::rational::format_vec(ray)
            )));
        }
    }
    Ok(Irredundancy::ok())
}


/// Outcome of exact linear maximization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OptOutcome {
    Infeasible(Certificate),
    /// An improving recession direction.
    Unbounded { ray: Vec<Rat> },
    /// Maximum value and the lexicographically smallest maximizing vertex
    /// (a vertex of the lineality section when the input is not pointed).
    Optimal { value: Rat, argmax: Vec<Rat> },
}

/// Maximizes `⟨c, x⟩` by vertex enumeration: infeasibility yields a
/// certificate, an improving extreme ray (or lineality direction) yields
/// unboundedness, and otherwise the maximum is attained at a vertex.
/// Nonpointed inputs are quotiented by their lineality space first.
pub fn optimize(h: &HRep, c: &[Rat], caps: &Caps) -> Result<OptOutcome> {
    if c.len() != h.dim {
        return Err(Error::dim("objective dimension mismatch".to_string()));
    }
    match farkas::feasible(h, caps)? {
        Feasibility::Infeasible(cert) => return Ok(OptOutcome::Infeasible(cert)),
        Feasibility::Feasible(_) => {}
    }
    let lineality = lineality_space(h, caps)?;
    if !lineality.is_empty() {
        for dir in &lineality {
            let gain = dot(c, dir);
            if !gain.is_zero() {
                let ray = if gain.is_positive() {
                    dir.clone()
                } else {
                    linalg::neg(dir)
                };
                return Ok(OptOutcome::Unbounded {
                    ray: to_primitive(&ray).0,
                });
            }
        }
        // The objective is constant along the lineality space: optimize
        // over the orthogonal section, which is pointed.
        let mut section = h.clone();
        for dir in &lineality {
            section.eqs.push(Row::new(dir.clone(), Rat::zero()));
        }
        return optimize(&section, c, caps);
    }
    for ray in extreme_rays(h, caps)? {
        if dot(c, &ray).is_positive() {
            return Ok(OptOutcome::Unbounded { ray });
        }
    }
    let verts = vertices(h, caps)?;
    let mut best: Option<(Rat, Vec<Rat>)> = None;
    for v in verts {
        let value = dot(c, &v);
        let better = match &best {
            None => true,
            Some((bv, bx)) => value > *bv || (value == *bv && v < *bx),
        };
        if better {
            best = Some((value, v));
        }
    }
    let (value, argmax) = best
        .ok_or_else(|| Error::Contract("a nonempty pointed polyhedron has a vertex".to_string()))?;
    Ok(OptOutcome::Optimal { value, argmax })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn caps() -> Caps {
        Caps::default()
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    fn row(a: &[i64], b: i64) -> Row {
        Row::new(ints(a), rat_int(b))
    }

    fn unit_square() -> HRep {
        HRep::new(
            2,
            vec![row(&[1, 0], 1), row(&[0, 1], 1), row(&[-1, 0], 0), row(&[0, -1], 0)],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn recession_cone_zeroes_the_right_hand_sides() {
        let c = char_cone(&unit_square(), &caps()).unwrap();
        assert!(c.is_homogeneous());
        let h = HRep::new(2, vec![row(&[1, -1], 1), row(&[0, 1], 5)], vec![]).unwrap();
        let c = char_cone(&h, &caps()).unwrap();
        assert_eq!(c.ineqs, vec![row(&[1, -1], 0), row(&[0, 1], 0)]);
        assert!(char_cone(&HRep::canonical_empty(1), &caps()).is_err());
    }

    #[test]
    fn lineality_examples() {
        let half = HRep::new(2, vec![row(&[1, 1], 1)], vec![]).unwrap();
        assert_eq!(lineality_space(&half, &caps()).unwrap(), vec![ints(&[1, -1])]);
        assert!(lineality_space(&unit_square(), &caps()).unwrap().is_empty());
        let slab = HRep::new(3, vec![row(&[1, 0, 0], 0), row(&[-1, 0, 0], 0)], vec![]).unwrap();
        assert_eq!(
            lineality_space(&slab, &caps()).unwrap(),
            vec![ints(&[0, 1, 0]), ints(&[0, 0, 1])]
        );
    }

    #[test]
    fn dimension_and_affine_hull() {
        assert_eq!(dimension(&unit_square(), &caps()).unwrap(), 2);
        assert!(affine_hull(&unit_square(), &caps()).unwrap().is_empty());

        let segment = HRep::new(2, vec![row(&[1, 0], 0), row(&[-1, 0], 0)], vec![]).unwrap();
        assert_eq!(dimension(&segment, &caps()).unwrap(), 1);
        let hull = affine_hull(&segment, &caps()).unwrap();
        assert_eq!(hull.len(), 1);
        assert!(hull[0].a == ints(&[1, 0]) || hull[0].a == ints(&[-1, 0]));
        assert!(hull[0].b.is_zero());

        assert_eq!(dimension(&HRep::canonical_empty(2), &caps()).unwrap(), -1);
    }

    #[test]
    fn vertices_of_simple_polytopes() {
        let square_vertices = vertices(&unit_square(), &caps()).unwrap();
        assert_eq!(
            square_vertices,
            vec![ints(&[0, 0]), ints(&[0, 1]), ints(&[1, 0]), ints(&[1, 1])]
        );

        let simplex = HRep::new(
            3,
            vec![
                row(&[-1, 0, 0], 0),
                row(&[0, -1, 0], 0),
                row(&[0, 0, -1], 0),
                row(&[1, 1, 1], 1),
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(vertices(&simplex, &caps()).unwrap().len(), 4);
    }

    #[test]
    fn vertices_of_a_lower_dimensional_polytope() {
        // 2x <= 1, x >= 0, y = 0: a segment in the plane.
        let h = HRep::new(
            2,
            vec![row(&[2, 0], 1), row(&[-1, 0], 0)],
            vec![row(&[0, 1], 0)],
        )
        .unwrap();
        let vs = vertices(&h, &caps()).unwrap();
        assert_eq!(vs, vec![ints(&[0, 0]), vec![rat(1, 2), rat_int(0)]]);
    }

    #[test]
    fn nonpointed_vertex_enumeration_is_rejected() {
        let half = HRep::new(2, vec![row(&[1, 1], 1)], vec![]).unwrap();
        assert!(matches!(vertices(&half, &caps()), Err(Error::Precondition(_))));
    }

    #[test]
    fn face_counts_of_small_polytopes() {
        let interval = HRep::new(1, vec![row(&[1], 1), row(&[-1], 0)], vec![]).unwrap();
        assert_eq!(faces(&interval, 100, &caps()).unwrap().len(), 4);

        assert_eq!(faces(&unit_square(), 100, &caps()).unwrap().len(), 10);

        let triangle = HRep::new(
            2,
            vec![row(&[-1, 0], 0), row(&[0, -1], 0), row(&[1, 1], 1)],
            vec![],
        )
        .unwrap();
        assert_eq!(faces(&triangle, 100, &caps()).unwrap().len(), 8);
    }

    #[test]
    fn facet_detection_and_redundant_rows() {
        let square = unit_square();
        assert_eq!(facets(&square, &caps()).unwrap().len(), 4);

        let mut padded = square.clone();
        padded.ineqs.push(row(&[1, 1], 3));
        let f = facets(&padded, &caps()).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|(i, _)| *i != 4));
    }

    #[test]
    fn facet_of_a_segment_is_a_point() {
        // x1 = 0 and x2 <= 1 in the plane: the facet is the point (0, 1).
        let h = HRep::new(2, vec![row(&[0, 1], 1)], vec![row(&[1, 0], 0)]).unwrap();
        let f = facets(&h, &caps()).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].1.dim, 0);
        assert_eq!(f[0].1.representative, Some(ints(&[0, 1])));
    }

    #[test]
    fn irredundancy_of_outer_descriptions() {
        assert!(certify_irredundant_h(&unit_square(), &caps())
            .unwrap()
            .irredundant);

        let mut dup = unit_square();
        dup.ineqs.push(row(&[1, 0], 1));
        let verdict = certify_irredundant_h(&dup, &caps()).unwrap();
        assert!(!verdict.irredundant);
        assert!(verdict.violation.unwrap().contains("same facet"));

        let mut padded = unit_square();
        padded.ineqs.push(row(&[1, 1], 3));
        let verdict = certify_irredundant_h(&padded, &caps()).unwrap();
        assert!(!verdict.irredundant);
        assert!(verdict.violation.unwrap().contains("defines no facet"));
    }

    #[test]
    fn irredundancy_of_inner_descriptions() {
        let square = VRep::new(
            2,
            vec![ints(&[0, 0]), ints(&[1, 0]), ints(&[0, 1]), ints(&[1, 1])],
            vec![],
        )
        .unwrap();
        assert!(certify_irredundant_v(&square, &caps()).unwrap().irredundant);

        let mut padded = square.clone();
        padded.points.push(vec![rat(1, 2), rat(1, 2)]);
        let verdict = certify_irredundant_v(&padded, &caps()).unwrap();
        assert!(!verdict.irredundant);
        assert!(verdict.violation.unwrap().contains("is not a vertex"));
    }

    #[test]
    fn irredundancy_of_inner_descriptions_with_rays() {
        // Apex plus the two extreme rays of the skew cone.
        let cone = VRep::new(
            2,
            vec![ints(&[0, 0])],
            vec![ints(&[1, 0]), ints(&[1, 2])],
        )
        .unwrap();
        assert!(certify_irredundant_v(&cone, &caps()).unwrap().irredundant);

        let mut padded = cone.clone();
        padded.rays.push(ints(&[1, 1]));
        let verdict = certify_irredundant_v(&padded, &caps()).unwrap();
        assert!(!verdict.irredundant);
        assert!(verdict.violation.unwrap().contains("is not extreme"));

        let mut doubled = cone.clone();
        doubled.rays.push(ints(&[2, 4]));
        let verdict = certify_irredundant_v(&doubled, &caps()).unwrap();
        assert!(!verdict.irredundant);
        assert!(verdict.violation.unwrap().contains("same extreme ray"));
    }

    #[test]
    fn extreme_ray_examples() {
        let orthant = HRep::new(2, vec![row(&[-1, 0], 0), row(&[0, -1], 0)], vec![]).unwrap();
        assert_eq!(
            extreme_rays(&orthant, &caps()).unwrap(),
            vec![ints(&[0, 1]), ints(&[1, 0])]
        );

        assert!(extreme_rays(&unit_square(), &caps()).unwrap().is_empty());

        let cone = HRep::new(2, vec![row(&[0, -1], 0), row(&[-2, 1], 0)], vec![]).unwrap();
        assert_eq!(
            extreme_rays(&cone, &caps()).unwrap(),
            vec![ints(&[1, 0]), ints(&[1, 2])]
        );
    }

    #[test]
    fn optimization_statuses() {
        match optimize(&unit_square(), &ints(&[1, 1]), &caps()).unwrap() {
            OptOutcome::Optimal { value, argmax } => {
                assert_eq!(value, rat_int(2));
                assert_eq!(argmax, ints(&[1, 1]));
            }
            _ => panic!("square maximum is at (1,1)"),
        }

        let halfline = HRep::new(1, vec![row(&[-1], 0)], vec![]).unwrap();
        match optimize(&halfline, &ints(&[1]), &caps()).unwrap() {
            OptOutcome::Unbounded { ray } => assert_eq!(ray, ints(&[1])),
            _ => panic!("x is unbounded above on x >= 0"),
        }

        let empty = HRep::new(1, vec![row(&[1], 1), row(&[-1], -2)], vec![]).unwrap();
        match optimize(&empty, &ints(&[1]), &caps()).unwrap() {
            OptOutcome::Infeasible(cert) => {
                assert!(farkas::check_infeasibility(&empty, &cert));
            }
            _ => panic!("1 < 2 contradiction"),
        }
    }

    #[test]
    fn optimization_quotients_out_lineality() {
        // Half-plane x1 + x2 <= 1 with objective along the lineality line.
        let half = HRep::new(2, vec![row(&[1, 1], 1)], vec![]).unwrap();
        match optimize(&half, &ints(&[1, -1]), &caps()).unwrap() {
            OptOutcome::Unbounded { ray } => assert_eq!(ray, ints(&[1, -1])),
            _ => panic!("objective moves along the lineality space"),
        }
        match optimize(&half, &ints(&[1, 1]), &caps()).unwrap() {
            OptOutcome::Optimal { value, argmax } => {
                assert_eq!(value, rat_int(1));
                assert_eq!(dot(&ints(&[1, 1]), &argmax), rat_int(1));
            }
            _ => panic!("x1 + x2 is bounded by 1"),
        }
    }

    #[test]
    fn optimization_over_the_whole_space() {
        let universe = HRep::universe(2);
        match optimize(&universe, &ints(&[1, 0]), &caps()).unwrap() {
            OptOutcome::Unbounded { ray } => assert_eq!(dot(&ints(&[1, 0]), &ray), rat_int(1)),
            _ => panic!("nonzero objectives are unbounded on the whole space"),
        }
        match optimize(&universe, &ints(&[0, 0]), &caps()).unwrap() {
            OptOutcome::Optimal { value, .. } => assert!(value.is_zero()),
            _ => panic!("the zero objective is constant"),
        }
        assert_eq!(dimension(&universe, &caps()).unwrap(), 2);
    }

    #[test]
    fn vertices_in_dimension_zero() {
        let point = HRep::universe(0);
        assert_eq!(vertices(&point, &caps()).unwrap(), vec![Vec::<Rat>::new()]);
    }
}
