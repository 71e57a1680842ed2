//! Fourier–Motzkin elimination, projection cones, and general linear
//! projections of H-represented polyhedra.
//!
//! Elimination works coordinate by coordinate: rows not mentioning the
//! coordinate pass through, and every (positive, negative) row pair
//! contributes one combined row. Equations are eliminated by exact
//! Gaussian substitution before any inequality elimination. Redundancy is
//! pruned after every step; descriptions can still blow up exponentially,
//! so intermediate sizes are capped by [`Caps::max_rows`].

use num::{One, Signed, Zero};

use crate::convert;
use crate::error::{Error, Result};
use crate::farkas::{self, Feasibility, Validity};
use crate::linalg::{self, to_primitive, AffineSolution, RatMatrix};
use crate::rational::Rat;
use crate::rep::{HRep, Row};
use crate::Caps;

/// How one output row of [`eliminate_last`] arises from the input rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// Input row `row` scaled by the positive factor `scale`.
    Kept { row: usize, scale: Rat },
    /// `pos_mult · input[pos] + neg_mult · input[neg]`, both multipliers
    /// positive; `pos`/`neg` are the rows with positive/negative
    /// coefficient on the eliminated coordinate.
    Combined {
        pos: usize,
        neg: usize,
        pos_mult: Rat,
        neg_mult: Rat,
    },
}

/// Per-output-row derivation record; replaying it reproduces each output
/// row exactly from the input system.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EliminationTrace {
    pub steps: Vec<TraceStep>,
}

impl EliminationTrace {
    /// Recomputes the rows described by the trace from the input system.
    pub fn replay(&self, input: &HRep) -> Result<Vec<Row>> {
        let rows = &input.ineqs;
        let mut out = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            let row = match step {
                TraceStep::Kept { row, scale } => {
                    let r = rows.get(*row).ok_or_else(|| {
                        Error::Contract("trace references a missing row".to_string())
                    })?;
                    let mut a = linalg::scale(&r.a, scale);
                    a.pop();
                    Row::new(a, &r.b * scale)
                }
                TraceStep::Combined {
                    pos,
                    neg,
                    pos_mult,
                    neg_mult,
                } => {
                    let p = rows.get(*pos).ok_or_else(|| {
                        Error::Contract("trace references a missing row".to_string())
                    })?;
                    let n = rows.get(*neg).ok_or_else(|| {
                        Error::Contract("trace references a missing row".to_string())
                    })?;
                    let mut a = linalg::add_scaled(&linalg::scale(&p.a, pos_mult), &n.a, neg_mult);
                    let last = a.pop().expect("input rows are nonempty");
                    debug_assert!(last.is_zero());
                    Row::new(a, &p.b * pos_mult + &n.b * neg_mult)
                }
            };
            out.push(row);
        }
        Ok(out)
    }
}

/// Drops exact duplicates and trivially true rows, then removes every row
/// valid for the remaining system, scanning ascending indices until
/// stable. Carries an arbitrary tag per row so callers can track what
/// survived. On an infeasible system only the syntactic cleanup runs.
fn prune_rows<T: Clone>(dim: usize, rows: Vec<(Row, T)>, caps: &Caps) -> Result<Vec<(Row, T)>> {
    let mut kept: Vec<(Row, T)> = Vec::new();
    for (row, tag) in rows {
        let row = row.primitive();
        if linalg::is_zero_vec(&row.a) && !row.b.is_negative() {
            continue;
        }
        if kept.iter().any(|(r, _)| *r == row) {
            continue;
        }
        kept.push((row, tag));
    }
    let probe = HRep::new(dim, kept.iter().map(|(r, _)| r.clone()).collect(), Vec::new())?;
    if matches!(farkas::feasible(&probe, caps)?, Feasibility::Infeasible(_)) {
        return Ok(kept);
    }
    loop {
        let mut removed_any = false;
        let mut i = 0;
        while i < kept.len() {
            if kept.len() == 1 {
                break;
            }
            let rest: Vec<Row> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, (r, _))| r.clone())
                .collect();
            let sys = HRep::new(dim, rest, Vec::new())?;
            let (a, b) = (&kept[i].0.a, &kept[i].0.b);
            if matches!(farkas::is_valid(&sys, a, b, caps)?, Validity::Valid(_)) {
                kept.remove(i);
                removed_any = true;
            } else {
                i += 1;
            }
        }
        if !removed_any {
            return Ok(kept);
        }
    }
}

/// Removes redundant rows from an outer description without changing the
/// represented set: exact duplicates and `0 ≤ nonneg` rows first, then
/// every inequality certified valid for the remaining system. Equations
/// are deduplicated (up to scaling) and `0 = 0` rows dropped.
pub fn prune_redundant(h: &HRep, caps: &Caps) -> Result<HRep> {
    let mut eqs: Vec<Row> = Vec::new();
    for eq in &h.eqs {
        let mut full = eq.a.clone();
        full.push(eq.b.clone());
        let canon = linalg::to_primitive_signed(&full);
        if linalg::is_zero_vec(&canon) {
            continue;
        }
        let b = canon.last().expect("nonempty").clone();
        let mut a = canon;
        a.pop();
        let row = Row::new(a, b);
        if !eqs.contains(&row) {
            eqs.push(row);
        }
    }
    // Inequalities are checked against the other inequalities plus all
    // equations.
    let mut kept: Vec<Row> = Vec::new();
    for row in &h.ineqs {
        let row = row.primitive();
        if linalg::is_zero_vec(&row.a) && !row.b.is_negative() {
            continue;
        }
        if !kept.contains(&row) {
            kept.push(row);
        }
    }
    let full = HRep::new(h.dim, kept.clone(), eqs.clone())?;
    if matches!(farkas::feasible(&full, caps)?, Feasibility::Infeasible(_)) {
        return Ok(full);
    }
    loop {
        let mut removed_any = false;
        let mut i = 0;
        while i < kept.len() {
            let rest: Vec<Row> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, r)| r.clone())
                .collect();
            let sys = HRep::new(h.dim, rest, eqs.clone())?;
            let (a, b) = (&kept[i].a, &kept[i].b);
            if matches!(farkas::is_valid(&sys, a, b, caps)?, Validity::Valid(_)) {
                kept.remove(i);
                removed_any = true;
            } else {
                i += 1;
            }
        }
        if !removed_any {
            break;
        }
    }
    HRep::new(h.dim, kept, eqs)
}

/// Orthogonal projection to the first `d − 1` coordinates of a pure
/// inequality system, with the derivation trace of the pruned output.
///
/// Preconditions: ambient dimension at least 1, no equation rows (expand
/// them or eliminate them by substitution first; [`eliminate_coords`]
/// does the latter automatically).
pub fn eliminate_last(h: &HRep, caps: &Caps) -> Result<(HRep, EliminationTrace)> {
    if h.dim == 0 {
        return Err(Error::pre("no coordinate left to eliminate".to_string()));
    }
    if !h.eqs.is_empty() {
        return Err(Error::pre(
            "eliminate_last expects a pure inequality system; substitute or expand equations first"
                .to_string(),
        ));
    }
    let d = h.dim - 1;
    // Normalize each derived row to primitive integer form (the trace
    // multipliers rescale by the same positive factor), dropping exact
    // duplicates and trivially true rows as they appear.
    let mut derived: Vec<(Row, TraceStep)> = Vec::new();
    let mut seen: std::collections::BTreeSet<Row> = std::collections::BTreeSet::new();
    let mut push = |row: Row, step: TraceStep, cap: usize| -> Result<()> {
        let mut full = row.a.clone();
        full.push(row.b.clone());
        let (_, factor) = to_primitive(&full);
        let row = Row::new(linalg::scale(&row.a, &factor), &row.b * &factor);
        if linalg::is_zero_vec(&row.a) && !row.b.is_negative() {
            return Ok(());
        }
        if !seen.insert(row.clone()) {
            return Ok(());
        }
        if derived.len() == cap {
            return Err(Error::cap(format!(
                "elimination step exceeds {cap} distinct rows"
            )));
        }
        let step = match step {
            TraceStep::Kept { row, .. } => TraceStep::Kept { row, scale: factor },
            TraceStep::Combined {
                pos,
                neg,
                pos_mult,
                neg_mult,
            } => TraceStep::Combined {
                pos,
                neg,
                pos_mult: pos_mult * &factor,
                neg_mult: neg_mult * &factor,
            },
        };
        derived.push((row, step));
        Ok(())
    };
    let mut pos: Vec<usize> = Vec::new();
    let mut neg: Vec<usize> = Vec::new();
    for (i, row) in h.ineqs.iter().enumerate() {
        let c = &row.a[d];
        if c.is_zero() {
            let mut a = row.a.clone();
            a.pop();
            push(
                Row::new(a, row.b.clone()),
                TraceStep::Kept {
                    row: i,
                    scale: Rat::one(),
                },
                caps.max_rows,
            )?;
        } else if c.is_positive() {
            pos.push(i);
        } else {
            neg.push(i);
        }
    }
    let raw_cap = caps.max_rows.saturating_mul(40);
    if pos.len().saturating_mul(neg.len()) > raw_cap {
        return Err(Error::cap(format!(
            "elimination step would combine {} row pairs (cap {raw_cap})",
            pos.len() * neg.len()
        )));
    }
    for &k in &pos {
        for &l in &neg {
            let pk = &h.ineqs[k];
            let nl = &h.ineqs[l];
            let pos_mult = -nl.a[d].clone();
            let neg_mult = pk.a[d].clone();
            let mut a = linalg::add_scaled(&linalg::scale(&pk.a, &pos_mult), &nl.a, &neg_mult);
            let dropped = a.pop().expect("dimension at least 1");
            debug_assert!(dropped.is_zero());
            let b = &pk.b * &pos_mult + &nl.b * &neg_mult;
            push(
                Row::new(a, b),
                TraceStep::Combined {
                    pos: k,
                    neg: l,
                    pos_mult,
                    neg_mult,
                },
                caps.max_rows,
            )?;
        }
    }
    let pruned = prune_rows(d, derived, caps)?;
    let (rows, steps): (Vec<Row>, Vec<TraceStep>) = pruned.into_iter().unzip();
    Ok((HRep::new(d, rows, Vec::new())?, EliminationTrace { steps }))
}

/// One internal elimination step on an arbitrary coordinate of a mixed
/// system. Uses an equation mentioning the coordinate for substitution
/// when one exists, otherwise runs the inequality combination step.
fn eliminate_coord_once(h: &HRep, coord: usize, caps: &Caps) -> Result<HRep> {
    let drop_coord = |a: &[Rat]| -> Vec<Rat> {
        let mut v = a.to_vec();
        v.remove(coord);
        v
    };
    if let Some(pivot_idx) = h.eqs.iter().position(|e| !e.a[coord].is_zero()) {
        let pivot = h.eqs[pivot_idx].clone();
        let subst = |row: &Row| -> Row {
            let factor = -&row.a[coord] / &pivot.a[coord];
            let a = linalg::add_scaled(&row.a, &pivot.a, &factor);
            debug_assert!(a[coord].is_zero());
            Row::new(drop_coord(&a), &row.b + &pivot.b * &factor)
        };
        let ineqs = h.ineqs.iter().map(&subst).collect();
        let eqs = h
            .eqs
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pivot_idx)
            .map(|(_, e)| subst(e))
            .collect();
        return prune_redundant(&HRep::new(h.dim - 1, ineqs, eqs)?, caps);
    }
    // No equation mentions the coordinate: combine inequalities. The
    // remaining equations pass through with the coordinate dropped.
    let ineq_sys = HRep::new(
        h.dim,
        h.ineqs
            .iter()
            .map(|r| {
                // Move the target coordinate to the last position.
                let mut a = drop_coord(&r.a);
                a.push(r.a[coord].clone());
                Row::new(a, r.b.clone())
            })
            .collect(),
        Vec::new(),
    )?;
    let (projected, _) = eliminate_last(&ineq_sys, caps)?;
    let eqs = h
        .eqs
        .iter()
        .map(|e| Row::new(drop_coord(&e.a), e.b.clone()))
        .collect();
    prune_redundant(&HRep::new(h.dim - 1, projected.ineqs, eqs)?, caps)
}

/// Iterated elimination of a set of coordinates (0-based indices), pruning
/// after every step. Kept coordinates preserve their relative order.
pub fn eliminate_coords(h: &HRep, coords: &[usize], caps: &Caps) -> Result<HRep> {
    let mut sorted: Vec<usize> = coords.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.iter().any(|&j| j >= h.dim) {
        return Err(Error::dim(format!(
            "coordinate out of range for dimension {}",
            h.dim
        )));
    }
    let mut current = h.clone();
    // Descending order keeps the remaining target indices stable.
    for &j in sorted.iter().rev() {
        current = eliminate_coord_once(&current, j, caps).map_err(|e| match e {
            Error::Resource(msg) => Error::cap(format!(
                "while eliminating coordinate {j} ({} coordinates left): {msg}",
                current.dim
            )),
            other => other,
        })?;
    }
    Ok(current)
}

/// Finite generating set of the projection cone
/// `{λ ≥ 0 : λᵀ D_{⋆,j} = 0 for every eliminated column j}`, where the
/// first `kept` columns survive. For a single eliminated column this is
/// the sign-class pairing construction; for more columns the generators
/// come from converting the cone's outer description.
pub fn projection_cone_generators(
    d: &RatMatrix,
    kept: usize,
    caps: &Caps,
) -> Result<Vec<Vec<Rat>>> {
    let q = d.row_count();
    let dims = d.col_count();
    if kept > dims {
        return Err(Error::dim("kept columns exceed column count".to_string()));
    }
    let eliminated = dims - kept;
    let unit = |i: usize| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); q];
        v[i] = Rat::one();
        v
    };
    match eliminated {
        0 => Ok((0..q).map(unit).collect()),
        1 => {
            let col = d.col(kept);
            let mut gens: Vec<Vec<Rat>> = Vec::new();
            for (i, c) in col.iter().enumerate() {
                if c.is_zero() {
                    gens.push(unit(i));
                }
            }
            for (i, ci) in col.iter().enumerate() {
                if !ci.is_positive() {
                    continue;
                }
                for (k, ck) in col.iter().enumerate() {
                    if !ck.is_negative() {
                        continue;
                    }
                    let mut v = vec![Rat::zero(); q];
                    v[i] = -ck.clone();
                    v[k] = ci.clone();
                    gens.push(to_primitive(&v).0);
                }
            }
            gens.sort();
            gens.dedup();
            Ok(gens)
        }
        _ => {
            // Outer description of the cone in λ-space, converted to
            // generators.
            let mut rows: Vec<Vec<Rat>> = (0..q).map(|i| linalg::neg(&unit(i))).collect();
            for j in kept..dims {
                let col = d.col(j);
                rows.push(col.clone());
                rows.push(linalg::neg(&col));
            }
            let matrix = RatMatrix::from_rows(rows)?;
            convert::cone_h_to_v(&matrix, caps)
        }
    }
}

/// Image of `Q` under the linear map `x = T y`, described within the image
/// subspace `T(ℝ^d)`: a change of coordinates makes the projection
/// orthogonal, iterated elimination removes the surplus coordinates, and
/// the image subspace contributes equation rows.
pub fn project_general(h: &HRep, t: &RatMatrix, caps: &Caps) -> Result<HRep> {
    let d = t.col_count();
    let n = t.row_count();
    if h.dim != d {
        return Err(Error::dim(format!(
            "polyhedron lives in dimension {} but the map has {} columns",
            h.dim, d
        )));
    }
    let feasible_input = matches!(farkas::feasible(h, caps)?, Feasibility::Feasible(_));
    if !feasible_input {
        return Ok(HRep::canonical_empty(n));
    }
    // Independent rows R of T and pivot columns C with T[R, C] regular.
    let mut basis_rows: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut candidate = basis_rows.clone();
        candidate.push(i);
        let sub = t.submatrix(&candidate, &(0..d).collect::<Vec<_>>());
        if linalg::rank(&sub) == candidate.len() {
            basis_rows = candidate;
        }
    }
    let rank = basis_rows.len();
    if rank == 0 {
        // T = 0: the image is the origin.
        let eqs = (0..n)
            .map(|i| {
                let mut a = vec![Rat::zero(); n];
                a[i] = Rat::one();
                Row::new(a, Rat::zero())
            })
            .collect();
        return HRep::new(n, Vec::new(), eqs);
    }
    let t_r = t.submatrix(&basis_rows, &(0..d).collect::<Vec<_>>());
    let pivot_cols = {
        // Pivot columns of the row-reduced T[R, *].
        let mut cols = Vec::new();
        let mut probe: Vec<usize> = Vec::new();
        for j in 0..d {
            let mut candidate = probe.clone();
            candidate.push(j);
            let sub = t_r.submatrix(&(0..rank).collect::<Vec<_>>(), &candidate);
            if linalg::rank(&sub) == candidate.len() {
                probe = candidate;
                cols.push(j);
                if cols.len() == rank {
                    break;
                }
            }
        }
        cols
    };
    // Regular change of coordinates: rows of T[R, *] first, then unit rows
    // on the non-pivot columns.
    let mut ext_rows: Vec<Vec<Rat>> = (0..rank).map(|i| t_r.row(i).to_vec()).collect();
    for j in 0..d {
        if !pivot_cols.contains(&j) {
            let mut e = vec![Rat::zero(); d];
            e[j] = Rat::one();
            ext_rows.push(e);
        }
    }
    let t_ext = RatMatrix::from_rows(ext_rows)?;
    let t_ext_inv = linalg::invert(&t_ext)?;
    // Transform rows: a·y ≤ b with y = T̃⁻¹ z becomes (aᵀ T̃⁻¹)·z ≤ b.
    let transform = |row: &Row| -> Result<Row> {
        let a = t_ext_inv.transpose().mat_vec(&row.a)?;
        Ok(Row::new(a, row.b.clone()))
    };
    let ineqs = h.ineqs.iter().map(&transform).collect::<Result<Vec<_>>>()?;
    let eqs = h.eqs.iter().map(&transform).collect::<Result<Vec<_>>>()?;
    let changed = HRep::new(d, ineqs, eqs)?;
    let surplus: Vec<usize> = (rank..d).collect();
    let shadow = eliminate_coords(&changed, &surplus, caps)?;
    // Place the shadow on the coordinates indexed by R, then add the image
    // subspace equations for the remaining coordinates.
    let place = |row: &Row| -> Row {
        let mut a = vec![Rat::zero(); n];
        for (slot, &target) in basis_rows.iter().enumerate() {
            a[target] = row.a[slot].clone();
        }
        Row::new(a, row.b.clone())
    };
    let mut ineqs: Vec<Row> = shadow.ineqs.iter().map(&place).collect();
    let mut eqs: Vec<Row> = shadow.eqs.iter().map(&place).collect();
    for i in 0..n {
        if basis_rows.contains(&i) {
            continue;
        }
        // T[i, *] = Σ c_t · T[R_t, *]; on the image, x_i = Σ c_t · x_{R_t}.
        match linalg::solve_affine(&t_r.transpose(), t.row(i))? {
            AffineSolution::Solution { point: c, .. } => {
                let mut a = vec![Rat::zero(); n];
                a[i] = Rat::one();
                for (slot, &target) in basis_rows.iter().enumerate() {
                    a[target] = -c[slot].clone();
                }
                eqs.push(Row::new(a, Rat::zero()));
            }
            AffineSolution::Infeasible => {
                return Err(Error::Contract(
                    "row outside the span of the chosen basis rows".to_string(),
                ))
            }
        }
    }
    ineqs.retain(|r| !(linalg::is_zero_vec(&r.a) && !r.b.is_negative()));
    eqs.retain(|r| !(linalg::is_zero_vec(&r.a) && r.b.is_zero()));
    prune_redundant(&HRep::new(n, ineqs, eqs)?, caps)
}
