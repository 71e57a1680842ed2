//! Conversions between outer and inner descriptions.
//!
//! Both directions reduce to one primitive: an outer description of a
//! finitely generated cone, computed by projecting the nonnegative orthant
//! through the generator matrix. Polyhedra are homogenized to cones first;
//! polarity (the outer description of `ccone(X)` has the generators of the
//! polar as its rows, and twice polar is the identity on closed cones)
//! turns the generator-finding direction into the same projection.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::farkas::{self, Feasibility, Validity};
use crate::linalg::{self, to_primitive, to_primitive_signed, RatMatrix};
use crate::projection;
use crate::rational::Rat;
use crate::rep::{HRep, Row, VRep};
use crate::Caps;

/// Lift of a polyhedron `{x : Ax ≤ b, A'x = b'}` to the cone
/// `{(x, ξ) : Ax − ξb ≤ 0, A'x − ξb' = 0, ξ ≥ 0}` one dimension up.
/// A point `x` lies in the base polyhedron iff `(x, 1)` lies in the cone;
/// recession directions `y` correspond to `(y, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogenizedCone {
    pub base_dim: usize,
    pub cone: HRep,
}

/// Homogenizes an outer description.
pub fn homogenize(h: &HRep) -> HomogenizedCone {
    let lift = |row: &Row| -> Row {
        let mut a = row.a.clone();
        a.push(-row.b.clone());
        Row::new(a, Rat::zero())
    };
    let mut ineqs: Vec<Row> = h.ineqs.iter().map(&lift).collect();
    let mut xi_row = vec![Rat::zero(); h.dim + 1];
    xi_row[h.dim] = -Rat::one();
    ineqs.push(Row::new(xi_row, Rat::zero()));
    let eqs = h.eqs.iter().map(&lift).collect();
    HomogenizedCone {
        base_dim: h.dim,
        cone: HRep::new(h.dim + 1, ineqs, eqs).expect("lifted rows share the dimension"),
    }
}

/// Reads generators of a homogenized cone back as points and rays: the
/// last coordinate `ξ` scales positive generators to points and marks
/// `ξ = 0` generators as rays. A generator with `ξ < 0` violates the
/// homogenization contract.
pub fn dehomogenize(generators: &[Vec<Rat>]) -> Result<VRep> {
    let Some(first) = generators.first() else {
        return Err(Error::dim(
            "cannot infer the dimension of an empty generator list".to_string(),
        ));
    };
    let n = first.len().saturating_sub(1);
    let mut points = Vec::new();
    let mut rays = Vec::new();
    for g in generators {
        if g.len() != n + 1 {
            return Err(Error::dim("generator dimension mismatch".to_string()));
        }
        let xi = &g[n];
        if xi.is_negative() {
            return Err(Error::Contract(
                "homogenized generator with negative last coordinate".to_string(),
            ));
        }
        if xi.is_zero() {
            if !linalg::is_zero_vec(&g[..n]) {
                rays.push(g[..n].to_vec());
            }
        } else {
            points.push(g[..n].iter().map(|v| v / xi).collect());
        }
    }
    Ok(VRep::new(n, points, rays)?.canonicalized())
}

/// Outer description of `ccone(generators)` in split form (homogeneous
/// inequality rows and homogeneous equation rows), obtained by projecting
/// the nonnegative orthant through the generator matrix: starting from
/// `{(x, λ) : x = Σ λᵢ gᵢ, λ ≥ 0}`, the multiplier coordinates are
/// eliminated one at a time.
///
/// The generators of every intermediate cone are known (each `gᵢ` carries
/// its surviving multiplier unit coordinates), which gives an exact and
/// cheap pruning rule per step: keep one inequality per facet, recognized
/// by the rank of its tight generator set, plus the linear-hull equations.
fn cone_outer_description(generators: &[Vec<Rat>], n: usize, caps: &Caps) -> Result<HRep> {
    let gens: Vec<Vec<Rat>> = generators
        .iter()
        .filter(|g| !linalg::is_zero_vec(g))
        .cloned()
        .collect();
    if gens.iter().any(|g| g.len() != n) {
        return Err(Error::dim("generator dimension mismatch".to_string()));
    }
    if gens.is_empty() {
        // ccone(∅) = {0}.
        let eqs = (0..n)
            .map(|i| {
                let mut a = vec![Rat::zero(); n];
                a[i] = Rat::one();
                Row::new(a, Rat::zero())
            })
            .collect();
        return HRep::new(n, Vec::new(), eqs);
    }
    let k = gens.len();
    // Working space ℝ^{n+k}, coordinates (x, λ). The cone is generated by
    // the lifted vectors (gᵢ, eᵢ).
    let mut lifted: Vec<Vec<Rat>> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut v = g.clone();
            v.extend((0..k).map(|j| if j == i { Rat::one() } else { Rat::zero() }));
            v
        })
        .collect();
    // x_j − Σ_i gᵢ[j] λᵢ = 0 and −λᵢ ≤ 0.
    let mut eqs: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let mut a = vec![Rat::zero(); n + k];
            a[j] = Rat::one();
            for (i, g) in gens.iter().enumerate() {
                a[n + i] = -g[j].clone();
            }
            a
        })
        .collect();
    let mut ineqs: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            let mut a = vec![Rat::zero(); n + k];
            a[n + i] = -Rat::one();
            a
        })
        .collect();
    let mut dim = n + k;
    while dim > n {
        // Pick the multiplier coordinate eliminated cheapest: substitution
        // when an equation mentions it, otherwise the fewest combinations.
        let mut choice: Option<(usize, usize)> = None;
        for j in n..dim {
            if eqs.iter().any(|e| !e[j].is_zero()) {
                choice = Some((j, 0));
                break;
            }
            let pos = ineqs.iter().filter(|r| r[j].is_positive()).count();
            let neg = ineqs.iter().filter(|r| r[j].is_negative()).count();
            let cost = pos * neg;
            if choice.is_none_or(|(_, best)| cost < best) {
                choice = Some((j, cost));
            }
        }
        let (coord, _) = choice.expect("a multiplier coordinate remains");
        let drop = |a: &[Rat]| -> Vec<Rat> {
            let mut v = a.to_vec();
            v.remove(coord);
            v
        };
        let candidates: Vec<Vec<Rat>>;
        if let Some(pivot_idx) = eqs.iter().position(|e| !e[coord].is_zero()) {
            let pivot = eqs[pivot_idx].clone();
            let subst = |a: &[Rat]| -> Vec<Rat> {
                let factor = -&a[coord] / &pivot[coord];
                drop(&linalg::add_scaled(a, &pivot, &factor))
            };
            candidates = ineqs.iter().map(|r| subst(r)).collect();
        } else {
            let mut combos: Vec<Vec<Rat>> = Vec::new();
            let pos: Vec<&Vec<Rat>> = ineqs.iter().filter(|r| r[coord].is_positive()).collect();
            let neg: Vec<&Vec<Rat>> = ineqs.iter().filter(|r| r[coord].is_negative()).collect();
            let zero: Vec<&Vec<Rat>> = ineqs.iter().filter(|r| r[coord].is_zero()).collect();
            if zero.len() + pos.len() * neg.len() > caps.max_rows {
                return Err(Error::cap(format!(
                    "cone conversion step would derive {} rows (cap {})",
                    zero.len() + pos.len() * neg.len(),
                    caps.max_rows
                )));
            }
            for r in zero {
                combos.push(drop(r));
            }
            for p in &pos {
                for ng in &neg {
                    let alpha = -ng[coord].clone();
                    let beta = p[coord].clone();
                    let merged = linalg::add_scaled(&linalg::scale(p, &alpha), ng, &beta);
                    combos.push(drop(&merged));
                }
            }
            candidates = combos;
        }
        for g in &mut lifted {
            g.remove(coord);
        }
        dim -= 1;
        // Rebuild the description of the current cone: hull equations from
        // the generator kernel, one inequality per facet.
        let gen_matrix = RatMatrix::from_rows(lifted.clone())?;
        let hull = linalg::kernel_basis(&gen_matrix);
        let rank = dim - hull.len();
        let mut kept: Vec<Vec<Rat>> = Vec::new();
        for cand in candidates {
            // Reduce modulo the hull, normalize, deduplicate.
            let mut a = cand;
            for e in &hull {
                let p = e.iter().position(|v| !v.is_zero()).expect("hull rows are nonzero");
                if !a[p].is_zero() {
                    let factor = -&a[p] / &e[p];
                    a = linalg::add_scaled(&a, e, &factor);
                }
            }
            if linalg::is_zero_vec(&a) {
                continue;
            }
            let a = to_primitive(&a).0;
            if kept.contains(&a) {
                continue;
            }
            // Facet test: the tight generators must span one dimension
            // less than the cone.
            let tight: Vec<Vec<Rat>> = lifted
                .iter()
                .filter(|g| linalg::dot(&a, g).is_zero())
                .cloned()
                .collect();
            debug_assert!(lifted.iter().all(|g| !linalg::dot(&a, g).is_positive()));
            if rank == 0 || tight.len() < rank - 1 {
                continue;
            }
            let tight_rank = if tight.is_empty() {
                0
            } else {
                linalg::rank(&RatMatrix::from_rows(tight)?)
            };
            if tight_rank == rank - 1 {
                kept.push(a);
            }
        }
        ineqs = kept;
        eqs = hull;
    }
    let ineq_rows = ineqs
        .into_iter()
        .map(|a| Row::new(a, Rat::zero()))
        .collect();
    let eq_rows = eqs.into_iter().map(|a| Row::new(a, Rat::zero())).collect();
    let out = HRep::new(n, ineq_rows, eq_rows)?;
    debug_assert!(out.is_homogeneous());
    Ok(out)
}

/// Outer description of `ccone(generators)` as a single matrix `A` with
/// `ccone(X) = {x : Ax ≤ 0}`; equation rows appear as opposite pairs.
/// Rows are primitive, deduplicated and sorted.
pub fn cone_v_to_h(generators: &[Vec<Rat>], n: usize, caps: &Caps) -> Result<RatMatrix> {
    let h = cone_outer_description(generators, n, caps)?;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for r in &h.ineqs {
        rows.push(to_primitive(&r.a).0);
    }
    for e in &h.eqs {
        let p = to_primitive(&e.a).0;
        rows.push(linalg::neg(&p));
        rows.push(p);
    }
    rows.retain(|r| !linalg::is_zero_vec(r));
    rows.sort();
    rows.dedup();
    RatMatrix::from_rows(rows)
}

/// Generators of the polyhedral cone `{x : Ax ≤ 0}`: the rows of `A`
/// generate the polar cone, and converting the polar back gives the
/// original generators (twice polar is the identity).
pub fn cone_h_to_v(a: &RatMatrix, caps: &Caps) -> Result<Vec<Vec<Rat>>> {
    let n = a.col_count();
    let polar_outer = cone_v_to_h(&a.row_vecs(), n, caps)?;
    let mut gens: Vec<Vec<Rat>> = polar_outer
        .row_vecs()
        .into_iter()
        .filter(|r| !linalg::is_zero_vec(r))
        .map(|r| to_primitive(&r).0)
        .collect();
    gens.sort();
    gens.dedup();
    Ok(gens)
}

/// Canonical form of an outer description: implicit equalities moved to a
/// reduced equation system, inequalities reduced modulo the equations and
/// made primitive, redundant rows pruned, everything sorted. The empty set
/// canonicalizes to `{⟨0, x⟩ ≤ -1}`.
pub fn canonicalize_hrep(h: &HRep, caps: &Caps) -> Result<HRep> {
    if matches!(farkas::feasible(h, caps)?, Feasibility::Infeasible(_)) {
        return Ok(HRep::canonical_empty(h.dim));
    }
    // Implicit equalities: inequality rows whose reverse is also valid.
    let mut eq_vectors: Vec<Vec<Rat>> = Vec::new();
    let mut loose: Vec<Row> = Vec::new();
    for eq in &h.eqs {
        let mut full = eq.a.clone();
        full.push(eq.b.clone());
        eq_vectors.push(full);
    }
    for row in &h.ineqs {
        let reversed: Vec<Rat> = linalg::neg(&row.a);
        match farkas::is_valid(h, &reversed, &-row.b.clone(), caps)? {
            Validity::Valid(_) => {
                let mut full = row.a.clone();
                full.push(row.b.clone());
                eq_vectors.push(full);
            }
            Validity::Invalid { .. } => loose.push(row.clone()),
        }
    }
    // Reduced, full-row-rank equation system in primitive form.
    let eq_rref = reduced_equations(&eq_vectors, h.dim)?;
    // Reduce each inequality modulo the equation space, then clean up.
    let mut ineqs: Vec<Row> = Vec::new();
    for row in &loose {
        let mut full = row.a.clone();
        full.push(row.b.clone());
        for eq in &eq_rref {
            let pivot = eq
                .iter()
                .position(|v| !v.is_zero())
                .expect("reduced equations are nonzero");
            if !full[pivot].is_zero() {
                let factor = -&full[pivot] / &eq[pivot];
                full = linalg::add_scaled(&full, eq, &factor);
            }
        }
        let b = full.pop().expect("rows are nonempty");
        let row = Row::new(full, b).primitive();
        if linalg::is_zero_vec(&row.a) && !row.b.is_negative() {
            continue;
        }
        if !ineqs.contains(&row) {
            ineqs.push(row);
        }
    }
    let eqs: Vec<Row> = eq_rref
        .into_iter()
        .map(|mut full| {
            let b = full.pop().expect("rows are nonempty");
            Row::new(full, b)
        })
        .collect();
    let pruned = projection::prune_redundant(&HRep::new(h.dim, ineqs, eqs)?, caps)?;
    let mut ineqs = pruned.ineqs;
    let mut eqs = pruned.eqs;
    ineqs.sort();
    eqs.sort();
    HRep::new(h.dim, ineqs, eqs)
}

/// Row-reduces augmented equation vectors `(a | b)` to a primitive
/// full-row-rank system.
fn reduced_equations(vectors: &[Vec<Rat>], dim: usize) -> Result<Vec<Vec<Rat>>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let m = RatMatrix::from_rows(vectors.to_vec())?;
    let mut reduced: Vec<Vec<Rat>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for i in 0..m.row_count() {
        let mut v = m.row(i).to_vec();
        for (r, &p) in reduced.iter().zip(&pivots) {
            if !v[p].is_zero() {
                let factor = -&v[p] / &r[p];
                v = linalg::add_scaled(&v, r, &factor);
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            if p == dim {
                return Err(Error::Contract(
                    "contradictory equations in a feasible system".to_string(),
                ));
            }
            reduced.push(v);
            pivots.push(p);
        }
    }
    // Back-substitute to reduced form, normalize, sort by pivot.
    let order: Vec<usize> = {
        let mut idx: Vec<usize> = (0..reduced.len()).collect();
        idx.sort_by_key(|&i| pivots[i]);
        idx
    };
    let reduced_ordered: Vec<Vec<Rat>> = order.iter().map(|&i| reduced[i].clone()).collect();
    let pivots_ordered: Vec<usize> = order.iter().map(|&i| pivots[i]).collect();
    let mut final_rows = reduced_ordered;
    for i in (0..final_rows.len()).rev() {
        for j in 0..i {
            let p = pivots_ordered[i];
            if !final_rows[j][p].is_zero() {
                let factor = -&final_rows[j][p] / &final_rows[i][p];
                final_rows[j] = linalg::add_scaled(&final_rows[j], &final_rows[i].clone(), &factor);
            }
        }
    }
    Ok(final_rows.iter().map(|v| to_primitive_signed(v)).collect())
}

/// Outer description of `conv(points) + ccone(rays)`: homogenize the
/// generators, convert the lifted cone, and read the rows back at the
/// `ξ = 1` slice. The empty description returns `{⟨0, x⟩ ≤ -1}`.
pub fn v_to_h(v: &VRep, caps: &Caps) -> Result<HRep> {
    if v.is_empty() {
        return Ok(HRep::canonical_empty(v.dim));
    }
    let mut gens: Vec<Vec<Rat>> = Vec::new();
    for p in &v.points {
        let mut g = p.clone();
        g.push(Rat::one());
        gens.push(g);
    }
    for r in &v.rays {
        let mut g = r.clone();
        g.push(Rat::zero());
        gens.push(g);
    }
    let lifted = cone_outer_description(&gens, v.dim + 1, caps)?;
    let n = v.dim;
    let mut ineqs = Vec::new();
    let mut eqs = Vec::new();
    let split = |row: &Row| -> (Vec<Rat>, Rat) {
        let a = row.a[..n].to_vec();
        let b = -row.a[n].clone();
        (a, b)
    };
    for row in &lifted.ineqs {
        let (a, b) = split(row);
        if linalg::is_zero_vec(&a) {
            // Only the ξ ≥ 0 direction can appear here; it is dropped.
            debug_assert!(!b.is_negative());
            continue;
        }
        ineqs.push(Row::new(a, b));
    }
    for row in &lifted.eqs {
        let (a, b) = split(row);
        if linalg::is_zero_vec(&a) {
            debug_assert!(b.is_zero());
            continue;
        }
        eqs.push(Row::new(a, b));
    }
    canonicalize_hrep(&HRep::new(n, ineqs, eqs)?, caps)
}

/// Inner description of `{x : Ax ≤ b, A'x = b'}`: homogenize to a cone
/// `K`, generate the polar from the lifted rows, convert it back to an
/// outer description whose rows generate `K`, and split the generators at
/// the `ξ` coordinate. The infeasible case returns the empty description.
pub fn h_to_v(h: &HRep, caps: &Caps) -> Result<VRep> {
    if matches!(farkas::feasible(h, caps)?, Feasibility::Infeasible(_)) {
        return Ok(VRep::empty(h.dim));
    }
    let lifted = homogenize(h);
    // Polar generators: rows of the lifted (expanded) inequality system.
    let polar_gens: Vec<Vec<Rat>> = lifted
        .cone
        .expanded_rows()
        .into_iter()
        .map(|r| r.a)
        .collect();
    let cone_rows = cone_v_to_h(&polar_gens, h.dim + 1, caps)?;
    let generators: Vec<Vec<Rat>> = cone_rows
        .row_vecs()
        .into_iter()
        .filter(|r| !linalg::is_zero_vec(r))
        .collect();
    dehomogenize(&generators)
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

    #[test]
    fn homogenization_has_the_stated_rows() {
        let h = HRep::new(1, vec![row(&[1], 1)], vec![]).unwrap();
        let cone = homogenize(&h);
        assert_eq!(cone.cone.dim, 2);
        assert_eq!(cone.cone.ineqs[0], row(&[1, -1], 0));
        assert_eq!(cone.cone.ineqs[1], row(&[0, -1], 0));
    }

    #[test]
    fn dehomogenize_scales_points_and_keeps_rays() {
        let v = dehomogenize(&[ints(&[2, 4, 2]), ints(&[1, 1, 0])]).unwrap();
        assert_eq!(v.points, vec![ints(&[1, 2])]);
        assert_eq!(v.rays, vec![ints(&[1, 1])]);
        assert!(dehomogenize(&[ints(&[1, -1])]).is_err());
    }

    #[test]
    fn simplex_generators_convert_to_the_standard_rows() {
        let v = VRep::new(2, vec![ints(&[0, 0]), ints(&[1, 0]), ints(&[0, 1])], vec![]).unwrap();
        let h = v_to_h(&v, &caps()).unwrap();
        assert!(h.eqs.is_empty());
        let mut rows = h.ineqs.clone();
        rows.sort();
        assert_eq!(
            rows,
            vec![row(&[-1, 0], 0), row(&[0, -1], 0), row(&[1, 1], 1)]
        );
    }

    #[test]
    fn single_point_converts_to_equations() {
        let v = VRep::new(2, vec![ints(&[2, 3])], vec![]).unwrap();
        let h = v_to_h(&v, &caps()).unwrap();
        assert!(h.ineqs.is_empty());
        let mut eqs = h.eqs.clone();
        eqs.sort();
        assert_eq!(eqs, vec![row(&[0, 1], 3), row(&[1, 0], 2)]);
    }

    #[test]
    fn ray_cone_converts_with_tight_rows() {
        let v = VRep::cone(2, vec![ints(&[1, 0]), ints(&[1, 2])]).unwrap();
        let h = v_to_h(&v, &caps()).unwrap();
        assert!(h.eqs.is_empty());
        let mut rows = h.ineqs.clone();
        rows.sort();
        assert_eq!(rows, vec![row(&[-2, 1], 0), row(&[0, -1], 0)]);
    }

    #[test]
    fn empty_vrep_maps_to_the_canonical_empty_hrep() {
        let h = v_to_h(&VRep::empty(2), &caps()).unwrap();
        assert_eq!(h, HRep::canonical_empty(2));
        let v = h_to_v(&h, &caps()).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn unit_square_vertices_are_recovered() {
        let square = HRep::new(
            2,
            vec![row(&[1, 0], 1), row(&[0, 1], 1), row(&[-1, 0], 0), row(&[0, -1], 0)],
            vec![],
        )
        .unwrap();
        let v = h_to_v(&square, &caps()).unwrap();
        assert!(v.rays.is_empty());
        assert_eq!(
            v.points,
            vec![ints(&[0, 0]), ints(&[0, 1]), ints(&[1, 0]), ints(&[1, 1])]
        );
    }

    #[test]
    fn halfline_splits_into_vertex_and_ray() {
        let h = HRep::new(1, vec![row(&[-1], 0)], vec![]).unwrap();
        let v = h_to_v(&h, &caps()).unwrap();
        assert_eq!(v.points, vec![ints(&[0])]);
        assert_eq!(v.rays, vec![ints(&[1])]);
    }

    #[test]
    fn lineality_halfplane_round_trips() {
        let h = HRep::new(2, vec![row(&[1, 1], 1)], vec![]).unwrap();
        let v = h_to_v(&h, &caps()).unwrap();
        assert_eq!(v.points.len(), 1);
        // The ray set must span the line (1, -1) in both directions.
        assert!(v.rays.contains(&ints(&[1, -1])) || v.rays.contains(&ints(&[-1, 1])));
        let back = v_to_h(&v, &caps()).unwrap();
        assert!(back.eqs.is_empty());
        assert_eq!(back.ineqs, vec![row(&[1, 1], 1)]);
    }

    #[test]
    fn cone_conversions_on_the_orthant() {
        let gens = vec![ints(&[1, 0]), ints(&[0, 1])];
        let a = cone_v_to_h(&gens, 2, &caps()).unwrap();
        let mut rows = a.row_vecs();
        rows.sort();
        assert_eq!(rows, vec![ints(&[-1, 0]), ints(&[0, -1])]);

        let back = cone_h_to_v(&a, &caps()).unwrap();
        assert_eq!(back, vec![ints(&[0, 1]), ints(&[1, 0])]);
    }

    #[test]
    fn skew_cone_rows_are_tight_on_generators() {
        let gens = vec![ints(&[1, 2]), ints(&[2, 1])];
        let a = cone_v_to_h(&gens, 2, &caps()).unwrap();
        assert_eq!(a.row_count(), 2);
        for i in 0..2 {
            let r = a.row(i);
            // Valid on both generators, tight on exactly one.
            let values: Vec<Rat> = gens.iter().map(|g| linalg::dot(r, g)).collect();
            assert!(values.iter().all(|v| !v.is_positive()));
            assert_eq!(values.iter().filter(|v| v.is_zero()).count(), 1);
        }
        // Bipolar round trip.
        let back = cone_h_to_v(&a, &caps()).unwrap();
        assert_eq!(back, vec![ints(&[1, 2]), ints(&[2, 1])]);
    }

    #[test]
    fn universe_conversions() {
        // No rows: the whole space splits into one point and spanning rays.
        let v = h_to_v(&HRep::universe(2), &caps()).unwrap();
        assert_eq!(v.points, vec![ints(&[0, 0])]);
        for e in [ints(&[1, 0]), ints(&[-1, 0]), ints(&[0, 1]), ints(&[0, -1])] {
            assert!(
                matches!(
                    crate::farkas::separate_from_cone(&v.rays, &e, &caps()).unwrap(),
                    crate::farkas::ConeMembership::InCone { .. }
                ),
                "{e:?} must be in the ray cone"
            );
        }
        let back = v_to_h(&v, &caps()).unwrap();
        assert!(back.ineqs.is_empty());
        assert!(back.eqs.is_empty());

        // Dimension zero: the one-point space.
        let v0 = h_to_v(&HRep::universe(0), &caps()).unwrap();
        assert_eq!(v0.points, vec![Vec::<Rat>::new()]);
        let back = v_to_h(&v0, &caps()).unwrap();
        assert_eq!(back, HRep::universe(0));
    }

    #[test]
    fn fractional_generators_round_trip() {
        let v = VRep::new(1, vec![vec![rat(1, 3)], vec![rat(5, 2)]], vec![]).unwrap();
        let h = v_to_h(&v, &caps()).unwrap();
        let back = h_to_v(&h, &caps()).unwrap();
        assert_eq!(back.points, vec![vec![rat(1, 3)], vec![rat(5, 2)]]);
    }
}
