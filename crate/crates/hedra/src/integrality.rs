//! Integer hulls, integrality tests, Hilbert bases, total dual
//! integrality and strong duality.
//!
//! Lattice work runs on machine integers (`i64` coordinates, `i128`
//! accumulators) with explicit caps: at desk scale this is exact, and the
//! per-step bounds come from a strictly positive functional on the pointed
//! cone at hand, so every monoid-membership search terminates with a
//! definite answer. Hilbert bases follow Gordan's construction: the
//! lattice points of the generator zonotope generate, and minimalization
//! removes every element reachable from the others.

use std::collections::BTreeSet;

use num::{BigInt, One, Signed, Zero};

use crate::convert;
use crate::error::{Error, Result};
use crate::farkas::{self, Feasibility};
use crate::linalg::{self, dot, to_primitive, RatMatrix};
use crate::rational::{is_integer, rat_to_i64, Rat};
use crate::rep::{HRep, Row, VRep};
use crate::structure;
use crate::Caps;

/// Integer vector in machine range; the lattice side of the crate.
pub type IntVec = Vec<i64>;

fn int_to_rat(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect()
}

fn rat_to_int(v: &[Rat]) -> Result<IntVec> {
    v.iter()
        .map(|r| {
            rat_to_i64(r).ok_or_else(|| {
                Error::Unsupported(
                    "lattice computations need integer coordinates in machine range".to_string(),
                )
            })
        })
        .collect()
}

fn idot(a: &[i64], b: &[i64]) -> i128 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Primitive integer form of a rational generator.
fn primitive_int(v: &[Rat]) -> Result<IntVec> {
    rat_to_int(&to_primitive(v).0)
}

/// A strictly positive integer functional on `ccone(generators)`, i.e.
/// `w` with `⟨w, g⟩ > 0` for every nonzero generator. Exists iff the cone
/// is pointed; built from the sum of outer-description normals.
pub fn positive_functional(generators: &[IntVec], caps: &Caps) -> Result<Option<IntVec>> {
    let nonzero: Vec<&IntVec> = generators.iter().filter(|g| g.iter().any(|&x| x != 0)).collect();
    let Some(first) = nonzero.first() else {
        return Ok(Some(vec![]));
    };
    let n = first.len();
    let rat_gens: Vec<Vec<Rat>> = nonzero.iter().map(|g| int_to_rat(g)).collect();
    let outer = convert::cone_v_to_h(&rat_gens, n, caps)?;
    let mut w = vec![Rat::zero(); n];
    for i in 0..outer.row_count() {
        w = linalg::add_scaled(&w, outer.row(i), &-Rat::one());
    }
    let w = rat_to_int(&to_primitive(&w).0)?;
    for g in &nonzero {
        if idot(&w, g) <= 0 {
            return Ok(None);
        }
    }
    Ok(Some(w))
}

/// Decides `target ∈ mono(generators)` for a pointed cone, returning the
/// natural-number multipliers (in input order). `w` must be strictly
/// positive on the generators (see [`positive_functional`]); it bounds
/// every multiplier, so the search is exhaustive and exact. Failed
/// subproblems are memoized and suffixes are pruned by coordinate signs.
pub fn mono_member(
    generators: &[IntVec],
    w: &[i64],
    target: &[i64],
    caps: &Caps,
) -> Result<Option<Vec<u64>>> {
    let n = target.len();
    // Heaviest generators first: their multipliers are the most
    // constrained by the budget.
    let mut order: Vec<usize> = (0..generators.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(idot(w, &generators[i])));
    let gens: Vec<&IntVec> = order.iter().map(|&i| &generators[i]).collect();
    let weights: Vec<i128> = gens.iter().map(|g| idot(w, g)).collect();
    debug_assert!(weights.iter().all(|&v| v > 0));
    let budget = idot(w, target);
    if budget < 0 {
        return Ok(None);
    }
    // suffix_sign[idx][j] = (some later generator has a positive entry in
    // coordinate j, some has a negative one).
    let mut suffix_sign: Vec<Vec<(bool, bool)>> = vec![vec![(false, false); n]; gens.len() + 1];
    for idx in (0..gens.len()).rev() {
        for j in 0..n {
            let (mut pos, mut neg) = suffix_sign[idx + 1][j];
            pos |= gens[idx][j] > 0;
            neg |= gens[idx][j] < 0;
            suffix_sign[idx][j] = (pos, neg);
        }
    }
    struct Search<'a> {
        gens: Vec<&'a IntVec>,
        weights: Vec<i128>,
        suffix_sign: Vec<Vec<(bool, bool)>>,
        failed: std::collections::HashSet<(usize, Vec<i128>)>,
        nodes: usize,
        cap: usize,
    }
    impl Search<'_> {
        fn run(
            &mut self,
            residual: &mut Vec<i128>,
            budget: i128,
            idx: usize,
            ks: &mut Vec<u64>,
        ) -> Result<bool> {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::cap(format!(
                    "monoid membership search exceeded {} nodes",
                    self.cap
                )));
            }
            if residual.iter().all(|&x| x == 0) {
                for k in ks.iter_mut().skip(idx) {
                    *k = 0;
                }
                return Ok(true);
            }
            if idx == self.gens.len() || budget <= 0 {
                return Ok(false);
            }
            for (j, &r) in residual.iter().enumerate() {
                let (pos, neg) = self.suffix_sign[idx][j];
                if (r > 0 && !pos) || (r < 0 && !neg) {
                    return Ok(false);
                }
            }
            let key = (idx, residual.clone());
            if self.failed.contains(&key) {
                return Ok(false);
            }
            let g = self.gens[idx];
            let kmax = budget / self.weights[idx];
            // Walk k from kmax down to 0, keeping residual at
            // entry − k·g; after the k = 0 round it is restored.
            for (r, &gi) in residual.iter_mut().zip(g.iter()) {
                *r -= kmax * gi as i128;
            }
            let mut k = kmax;
            loop {
                ks[idx] = k as u64;
                if self.run(residual, budget - k * self.weights[idx], idx + 1, ks)? {
                    return Ok(true);
                }
                if k == 0 {
                    break;
                }
                k -= 1;
                for (r, &gi) in residual.iter_mut().zip(g.iter()) {
                    *r += gi as i128;
                }
            }
            ks[idx] = 0;
            self.failed.insert(key);
            Ok(false)
        }
    }
    let mut search = Search {
        gens,
        weights,
        suffix_sign,
        failed: std::collections::HashSet::new(),
        nodes: 0,
        cap: caps.max_lattice,
    };
    let mut residual: Vec<i128> = target.iter().map(|&x| x as i128).collect();
    let mut ks = vec![0u64; generators.len()];
    if search.run(&mut residual, budget, 0, &mut ks)? {
        // Map multipliers back to the input generator order.
        let mut out = vec![0u64; generators.len()];
        for (pos, &orig) in order.iter().enumerate() {
            out[orig] = ks[pos];
        }
        Ok(Some(out))
    } else {
        Ok(None)
    }
}

/// All integer points of the zonotope `{Σ λ_g g : 0 ≤ λ_g ≤ 1}`.
fn zonotope_lattice_points(generators: &[IntVec], caps: &Caps) -> Result<Vec<IntVec>> {
    let Some(first) = generators.first() else {
        return Ok(vec![]);
    };
    let n = first.len();
    let mut lo = vec![0i64; n];
    let mut hi = vec![0i64; n];
    for g in generators {
        for j in 0..n {
            lo[j] += g[j].min(0);
            hi[j] += g[j].max(0);
        }
    }
    let k = generators.len();
    let gen_cols = RatMatrix::from_rows(generators.iter().map(|g| int_to_rat(g)).collect())?
        .transpose();
    let mut points = Vec::new();
    for z in box_lattice_points(&lo, &hi, caps)? {
        // z is in the zonotope iff Gλ = z is solvable with 0 ≤ λ ≤ 1.
        let mut ineqs = Vec::with_capacity(2 * k);
        for j in 0..k {
            let mut a = vec![Rat::zero(); k];
            a[j] = Rat::one();
            ineqs.push(Row::new(a.clone(), Rat::one()));
            a[j] = -Rat::one();
            ineqs.push(Row::new(a, Rat::zero()));
        }
        let eqs = (0..n)
            .map(|i| Row::new(gen_cols.row(i).to_vec(), Rat::from_integer(BigInt::from(z[i]))))
            .collect();
        let sys = HRep::new(k, ineqs, eqs)?;
        if matches!(farkas::feasible(&sys, caps)?, Feasibility::Feasible(_)) {
            points.push(z);
        }
    }
    Ok(points)
}

/// Integer points of the axis-parallel box `[lo, hi]`.
fn box_lattice_points(lo: &[i64], hi: &[i64], caps: &Caps) -> Result<Vec<IntVec>> {
    let n = lo.len();
    let mut count: u128 = 1;
    for j in 0..n {
        if lo[j] > hi[j] {
            return Ok(vec![]);
        }
        count = count.saturating_mul((hi[j] - lo[j] + 1) as u128);
        if count > caps.max_lattice as u128 {
            return Err(Error::cap(format!(
                "box holds more than {} lattice points",
                caps.max_lattice
            )));
        }
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut current: IntVec = lo.to_vec();
    loop {
        out.push(current.clone());
        let mut j = 0;
        loop {
            if j == n {
                return Ok(out);
            }
            if current[j] < hi[j] {
                current[j] += 1;
                break;
            }
            current[j] = lo[j];
            j += 1;
        }
        if n == 0 {
            return Ok(out);
        }
    }
}

/// True iff the recession cone is trivial (the set is bounded).
pub fn is_bounded(h: &HRep, caps: &Caps) -> Result<bool> {
    Ok(structure::lineality_space(h, caps)?.is_empty()
        && structure::extreme_rays(h, caps)?.is_empty())
}

/// All lattice points of a bounded polyhedron, from the integer bounding
/// box of its vertices.
pub fn lattice_points(h: &HRep, caps: &Caps) -> Result<Vec<IntVec>> {
    if matches!(farkas::feasible(h, caps)?, Feasibility::Infeasible(_)) {
        return Ok(vec![]);
    }
    if !is_bounded(h, caps)? {
        return Err(Error::Unsupported(
            "lattice point enumeration needs a bounded polyhedron".to_string(),
        ));
    }
    let verts = structure::vertices(h, caps)?;
    let mut lo = vec![i64::MAX; h.dim];
    let mut hi = vec![i64::MIN; h.dim];
    for v in &verts {
        for j in 0..h.dim {
            let f = v[j].floor();
            let c = v[j].ceil();
            let fi = rat_to_i64(&f).ok_or_else(|| {
                Error::Unsupported("vertex coordinates exceed machine range".to_string())
            })?;
            let ci = rat_to_i64(&c).ok_or_else(|| {
                Error::Unsupported("vertex coordinates exceed machine range".to_string())
            })?;
            lo[j] = lo[j].min(ci);
            hi[j] = hi[j].max(fi);
        }
    }
    let mut out = Vec::new();
    for z in box_lattice_points(&lo, &hi, caps)? {
        if h.contains(&int_to_rat(&z))? {
            out.push(z);
        }
    }
    Ok(out)
}

/// Outer description of the integer hull `conv(P ∩ ℤⁿ)` of a bounded
/// polyhedron: enumerate the lattice points, then convert their hull. An
/// empty lattice intersection returns the canonical empty description.
pub fn integer_hull(h: &HRep, caps: &Caps) -> Result<HRep> {
    let points = lattice_points(h, caps)?;
    if points.is_empty() {
        return Ok(HRep::canonical_empty(h.dim));
    }
    let v = VRep::new(h.dim, points.iter().map(|z| int_to_rat(z)).collect(), vec![])?;
    convert::v_to_h(&v, caps)
}

/// Integrality verdict with a fractional-vertex witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityVerdict {
    pub integral: bool,
    pub fractional_vertex: Option<Vec<Rat>>,
}

/// A pointed rational polyhedron is integral iff all its vertices are.
pub fn is_integral(h: &HRep, caps: &Caps) -> Result<IntegralityVerdict> {
    let verts = structure::vertices(h, caps)?;
    for v in &verts {
        if v.iter().any(|x| !is_integer(x)) {
            return Ok(IntegralityVerdict {
                integral: false,
                fractional_vertex: Some(v.clone()),
            });
        }
    }
    Ok(IntegralityVerdict {
        integral: true,
        fractional_vertex: None,
    })
}

/// An integral Hilbert basis: `basis` generates the same cone as the
/// input and every integer point of that cone is a natural-number
/// combination of `basis`. Unique minimal for pointed cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    /// The primitive integer forms of the input generators.
    pub generators: Vec<IntVec>,
    pub basis: Vec<IntVec>,
}

/// Computes the unique minimal integral Hilbert basis of the pointed cone
/// spanned by the generators (rational inputs are primitive-scaled
/// first). Nonpointed cones are unsupported: their minimal basis is not
/// unique and the multiplier bounds fail.
pub fn hilbert_basis(generators: &[Vec<Rat>], caps: &Caps) -> Result<HilbertBasis> {
    let mut gens: Vec<IntVec> = Vec::new();
    for g in generators {
        if linalg::is_zero_vec(g) {
            continue;
        }
        let p = primitive_int(g)?;
        if !gens.contains(&p) {
            gens.push(p);
        }
    }
    if gens.is_empty() {
        return Ok(HilbertBasis {
            generators: vec![],
            basis: vec![],
        });
    }
    let Some(w) = positive_functional(&gens, caps)? else {
        return Err(Error::Unsupported(
            "Hilbert bases are computed for pointed cones only".to_string(),
        ));
    };
    let mut candidates: Vec<IntVec> = zonotope_lattice_points(&gens, caps)?
        .into_iter()
        .filter(|z| z.iter().any(|&x| x != 0))
        .collect();
    // Remove reducible elements, heaviest first: an element can only be a
    // combination of elements with strictly smaller functional value.
    candidates.sort_by_key(|z| std::cmp::Reverse(idot(&w, z)));
    let mut basis = candidates.clone();
    for z in candidates {
        let others: Vec<IntVec> = basis.iter().filter(|h| **h != z).cloned().collect();
        if others.is_empty() {
            continue;
        }
        if mono_member(&others, &w, &z, caps)?.is_some() {
            basis.retain(|h| *h != z);
        }
    }
    basis.sort();
    Ok(HilbertBasis {
        generators: gens,
        basis,
    })
}

/// Finite parameterization of the lattice points: `P ∩ ℤⁿ = X + mono(Y)`
/// with `char(P) = ccone(Y)`. Supported shapes: bounded polyhedra (all
/// lattice points, no generators) and pointed cones (the origin plus a
/// Hilbert basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidDecomposition {
    pub points: Vec<IntVec>,
    pub generators: Vec<IntVec>,
}

pub fn lattice_decomposition(h: &HRep, caps: &Caps) -> Result<MonoidDecomposition> {
    if matches!(farkas::feasible(h, caps)?, Feasibility::Infeasible(_)) {
        return Ok(MonoidDecomposition {
            points: vec![],
            generators: vec![],
        });
    }
    if is_bounded(h, caps)? {
        return Ok(MonoidDecomposition {
            points: lattice_points(h, caps)?,
            generators: vec![],
        });
    }
    if h.is_homogeneous() {
        let gens = convert::cone_h_to_v(&h.expanded_matrix(), caps)?;
        let basis = hilbert_basis(&gens, caps)?;
        return Ok(MonoidDecomposition {
            points: vec![vec![0; h.dim]],
            generators: basis.basis,
        });
    }
    Err(Error::Unsupported(
        "lattice decomposition handles bounded polyhedra and pointed cones".to_string(),
    ))
}

/// Witness against total dual integrality: a nonempty face whose tight
/// rows are not a Hilbert basis, shown by an integer point of their cone
/// that is not a natural combination of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdiViolation {
    pub equality_set: BTreeSet<usize>,
    pub point: IntVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdiVerdict {
    pub tdi: bool,
    pub violation: Option<TdiViolation>,
    /// Set when a nonpointed tight-row cone forced the definitional check.
    pub used_definitional_fallback: bool,
}

/// Total dual integrality via the face criterion: the system is TDI iff
/// at every nonempty face the tight rows form an integral Hilbert basis.
/// Tight sets only grow toward smaller faces, and the criterion holds for
/// all faces as soon as it holds at the minimal ones, so only those are
/// checked (the vertices, for a pointed system). The Hilbert property is
/// decided exactly through the zonotope generators of the tight-row cone.
///
/// Requires an integral coefficient matrix; empty systems are TDI by
/// convention. Nonpointed systems, and faces whose tight-row cone is not
/// pointed, fall back to the definitional test (the violation then holds
/// the objective without an integral dual optimum).
pub fn is_tdi(h: &HRep, caps: &Caps) -> Result<TdiVerdict> {
    let rows = h.expanded_rows();
    for r in &rows {
        if r.a.iter().any(|x| !is_integer(x)) {
            return Err(Error::pre(
                "the TDI face criterion needs an integral coefficient matrix".to_string(),
            ));
        }
    }
    if matches!(farkas::feasible(h, caps)?, Feasibility::Infeasible(_)) {
        return Ok(TdiVerdict {
            tdi: true,
            violation: None,
            used_definitional_fallback: false,
        });
    }
    let definitional_fallback = |face: Option<BTreeSet<usize>>| -> Result<TdiVerdict> {
        let fallback = is_tdi_definitional(h, 3, caps)?;
        Ok(TdiVerdict {
            tdi: fallback.tdi,
            violation: fallback.violation.map(|(c, _)| TdiViolation {
                equality_set: face.unwrap_or_default(),
                point: c,
            }),
            used_definitional_fallback: true,
        })
    };
    if !structure::lineality_space(h, caps)?.is_empty() {
        return definitional_fallback(None);
    }
    for vertex in structure::vertices(h, caps)? {
        let mut equality_set: BTreeSet<usize> = BTreeSet::new();
        let mut active: Vec<IntVec> = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.slack(&vertex).is_zero() {
                equality_set.insert(i);
                let a = rat_to_int(&row.a)?;
                if a.iter().any(|&x| x != 0) && !active.contains(&a) {
                    active.push(a);
                }
            }
        }
        if active.is_empty() {
            continue;
        }
        let Some(w) = positive_functional(&active, caps)? else {
            return definitional_fallback(Some(equality_set));
        };
        for z in zonotope_lattice_points(&active, caps)? {
            if z.iter().all(|&x| x == 0) {
                continue;
            }
            if mono_member(&active, &w, &z, caps)?.is_none() {
                return Ok(TdiVerdict {
                    tdi: false,
                    violation: Some(TdiViolation {
                        equality_set,
                        point: z,
                    }),
                    used_definitional_fallback: false,
                });
            }
        }
    }
    Ok(TdiVerdict {
        tdi: true,
        violation: None,
        used_definitional_fallback: false,
    })
}

/// Verdict of the definitional TDI check over a bounded objective box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinitionalTdiVerdict {
    pub tdi: bool,
    /// Objective and optimal value where no integral dual optimum exists.
    pub violation: Option<(IntVec, Rat)>,
    pub c_box: i64,
    /// False when a nonpointed dual search was cut off at the cap, in
    /// which case a reported violation is only "none found within bounds".
    pub search_complete: bool,
}

/// Definitional TDI test: for every integral objective `c` with
/// `‖c‖∞ ≤ c_box` and finite maximum, search an integral dual optimum
/// `y ∈ ℕ^m` with `Aᵀy = c` and `⟨b, y⟩` equal to the optimum. Sound but
/// incomplete: a violation disproves TDI, exhausting the box only reports
/// "no violation up to c_box". Empty systems are TDI by convention.
pub fn is_tdi_definitional(h: &HRep, c_box: i64, caps: &Caps) -> Result<DefinitionalTdiVerdict> {
    let done = |tdi: bool, violation, search_complete| {
        Ok(DefinitionalTdiVerdict {
            tdi,
            violation,
            c_box,
            search_complete,
        })
    };
    if matches!(farkas::feasible(h, caps)?, Feasibility::Infeasible(_)) {
        return done(true, None, true);
    }
    let rows = h.expanded_rows();
    // Lifted dual generators (aᵢ, D·bᵢ) with D clearing all denominators;
    // an ℕ-combination hitting (c, D·ω) is exactly an integral dual
    // optimum.
    let mut denom = BigInt::one();
    for r in &rows {
        if r.a.iter().any(|x| !is_integer(x)) {
            return Err(Error::pre(
                "the definitional TDI check needs an integral coefficient matrix".to_string(),
            ));
        }
        denom = num::Integer::lcm(&denom, r.b.denom());
    }
    let scale = Rat::from_integer(denom);
    let lifted: Vec<IntVec> = rows
        .iter()
        .map(|r| {
            let mut v = rat_to_int(&r.a)?;
            v.push(rat_to_i64(&(&r.b * &scale)).ok_or_else(|| {
                Error::Unsupported("right-hand sides exceed machine range".to_string())
            })?);
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    let functional = positive_functional(&lifted, caps)?;
    let mut search_complete = true;
    // Objective sweep state: maximize by vertices and recession checks.
    let lineality = structure::lineality_space(h, caps)?;
    let section = {
        let mut s = h.clone();
        for dir in &lineality {
            s.eqs.push(Row::new(dir.clone(), Rat::zero()));
        }
        s
    };
    let verts = structure::vertices(&section, caps)?;
    let rays = structure::extreme_rays(&section, caps)?;
    for c in box_lattice_points(&vec![-c_box; h.dim], &vec![c_box; h.dim], caps)? {
        let c_rat = int_to_rat(&c);
        if lineality.iter().any(|l| !dot(&c_rat, l).is_zero()) {
            continue; // unbounded along the lineality space
        }
        if rays.iter().any(|r| dot(&c_rat, r).is_positive()) {
            continue; // unbounded along an extreme ray
        }
        let omega = verts
            .iter()
            .map(|v| dot(&c_rat, v))
            .max()
            .expect("nonempty pointed section has vertices");
        // Target in the lifted lattice.
        let scaled = &omega * &scale;
        if !is_integer(&scaled) {
            return done(false, Some((c, omega)), search_complete);
        }
        let mut target = c.clone();
        target.push(rat_to_i64(&scaled).ok_or_else(|| {
            Error::Unsupported("optimal value exceeds machine range".to_string())
        })?);
        let hit = match &functional {
            Some(w) => mono_member(&lifted, w, &target, caps)?.is_some(),
            None => {
                search_complete = false;
                mono_member_bounded(&lifted, &target, 12, caps)?.is_some()
            }
        };
        if !hit {
            return done(false, Some((c, omega)), search_complete);
        }
    }
    done(true, None, search_complete)
}

/// Capped monoid membership for cones without a positive functional:
/// every multiplier is bounded by `per_var`, so absence of a solution is
/// only conclusive within that box.
fn mono_member_bounded(
    generators: &[IntVec],
    target: &[i64],
    per_var: u64,
    caps: &Caps,
) -> Result<Option<Vec<u64>>> {
    struct Search<'a> {
        gens: &'a [IntVec],
        per_var: u64,
        failed: std::collections::HashSet<(usize, Vec<i128>)>,
        nodes: usize,
        cap: usize,
    }
    impl Search<'_> {
        fn run(&mut self, residual: &mut Vec<i128>, idx: usize, ks: &mut Vec<u64>) -> Result<bool> {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::cap(format!(
                    "bounded monoid search exceeded {} nodes",
                    self.cap
                )));
            }
            if residual.iter().all(|&x| x == 0) {
                for k in ks.iter_mut().skip(idx) {
                    *k = 0;
                }
                return Ok(true);
            }
            if idx == self.gens.len() {
                return Ok(false);
            }
            let key = (idx, residual.clone());
            if self.failed.contains(&key) {
                return Ok(false);
            }
            let g = &self.gens[idx];
            for k in 0..=self.per_var {
                if k > 0 {
                    for (r, &gi) in residual.iter_mut().zip(g.iter()) {
                        *r -= gi as i128;
                    }
                }
                ks[idx] = k;
                if self.run(residual, idx + 1, ks)? {
                    return Ok(true);
                }
            }
            for (r, &gi) in residual.iter_mut().zip(g.iter()) {
                *r += self.per_var as i128 * gi as i128;
            }
            ks[idx] = 0;
            self.failed.insert(key);
            Ok(false)
        }
    }
    let mut search = Search {
        gens: generators,
        per_var,
        failed: std::collections::HashSet::new(),
        nodes: 0,
        cap: caps.max_lattice,
    };
    let mut residual: Vec<i128> = target.iter().map(|&x| x as i128).collect();
    let mut ks = vec![0u64; generators.len()];
    if search.run(&mut residual, 0, &mut ks)? {
        Ok(Some(ks))
    } else {
        Ok(None)
    }
}

/// A TDI description of a bounded full-dimensional polyhedron: for each
/// vertex, the Hilbert basis of its normal cone (the cone of the tight
/// rows) contributes one row per basis element, tight at that vertex. The
/// right-hand side is integral whenever the polyhedron is integral.
pub fn make_tdi(h: &HRep, caps: &Caps) -> Result<HRep> {
    match farkas::feasible(h, caps)? {
        Feasibility::Feasible(_) => {}
        Feasibility::Infeasible(_) => {
            return Err(Error::pre("make_tdi needs a nonempty polyhedron".to_string()))
        }
    }
    if !is_bounded(h, caps)? {
        return Err(Error::Unsupported(
            "make_tdi handles bounded polyhedra (minimal faces are vertices)".to_string(),
        ));
    }
    let rows = h.expanded_rows();
    let mut out_rows: Vec<Row> = Vec::new();
    for v in structure::vertices(h, caps)? {
        let tight: Vec<Vec<Rat>> = rows
            .iter()
            .filter(|r| r.slack(&v).is_zero())
            .map(|r| r.a.clone())
            .collect();
        let basis = hilbert_basis(&tight, caps).map_err(|e| match e {
            Error::Unsupported(_) => Error::Unsupported(
                "make_tdi needs pointed normal cones (full-dimensional input)".to_string(),
            ),
            other => other,
        })?;
        for g in &basis.basis {
            let a = int_to_rat(g);
            let b = dot(&a, &v);
            let row = Row::new(a, b);
            if !out_rows.contains(&row) {
                out_rows.push(row);
            }
        }
    }
    out_rows.sort();
    HRep::new(h.dim, out_rows, vec![])
}

/// Both sides of the integral duality equation for one objective:
/// `max{⟨c, x⟩ : Ax ≤ b, x ∈ ℤⁿ}` versus
/// `min{⟨b, y⟩ : Aᵀy = c, y ∈ ℕ^m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    /// Maximum of the continuous relaxation (over vertices).
    pub primal_lp: Rat,
    /// Maximum over the lattice points, when any exist.
    pub primal_integral: Option<Rat>,
    /// Least value of an integral dual solution found.
    pub dual_integral: Option<Rat>,
    pub dual_witness: Option<Vec<u64>>,
    pub equal: bool,
}

/// Shared precomputation for duality checks on one system.
struct DualitySetup {
    verts: Vec<Vec<Rat>>,
    points: Vec<IntVec>,
    lifted: Vec<IntVec>,
    functional: Option<IntVec>,
}

fn duality_setup(h: &HRep, caps: &Caps) -> Result<DualitySetup> {
    let rows = h.expanded_rows();
    for r in &rows {
        if r.a.iter().any(|x| !is_integer(x)) || !is_integer(&r.b) {
            return Err(Error::pre(
                "strong duality verification needs integral rows".to_string(),
            ));
        }
    }
    match farkas::feasible(h, caps)? {
        Feasibility::Feasible(_) => {}
        Feasibility::Infeasible(_) => {
            return Err(Error::pre(
                "strong duality verification needs a nonempty polyhedron".to_string(),
            ))
        }
    }
    if !is_bounded(h, caps)? {
        return Err(Error::Unsupported(
            "strong duality verification handles bounded polyhedra".to_string(),
        ));
    }
    let lifted: Vec<IntVec> = rows
        .iter()
        .map(|r| {
            let mut v = rat_to_int(&r.a)?;
            v.push(rat_to_i64(&r.b).ok_or_else(|| {
                Error::Unsupported("right-hand sides exceed machine range".to_string())
            })?);
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DualitySetup {
        verts: structure::vertices(h, caps)?,
        points: lattice_points(h, caps)?,
        functional: positive_functional(&lifted, caps)?,
        lifted,
    })
}

fn duality_report(setup: &DualitySetup, c: &[Rat], caps: &Caps) -> Result<DualityReport> {
    let primal_lp = setup
        .verts
        .iter()
        .map(|v| dot(c, v))
        .max()
        .expect("bounded nonempty polyhedron has vertices");
    let primal_integral = setup.points.iter().map(|z| dot(c, &int_to_rat(z))).max();
    let c_int = rat_to_int(c)?;
    let mut dual_integral = None;
    let mut dual_witness = None;
    // The dual value is an integer at least the LP optimum; scan upward a
    // little in case no integral optimum sits exactly at the LP value.
    let start = primal_lp.ceil();
    for offset in 0..=10i64 {
        let value = &start + Rat::from_integer(BigInt::from(offset));
        let mut target = c_int.clone();
        target.push(rat_to_i64(&value).ok_or_else(|| {
            Error::Unsupported("dual value exceeds machine range".to_string())
        })?);
        let hit = match &setup.functional {
            Some(w) => mono_member(&setup.lifted, w, &target, caps)?,
            None => mono_member_bounded(&setup.lifted, &target, 12, caps)?,
        };
        if let Some(ks) = hit {
            dual_integral = Some(value);
            dual_witness = Some(ks);
            break;
        }
    }
    let equal = matches!((&primal_integral, &dual_integral), (Some(p), Some(d)) if p == d);
    Ok(DualityReport {
        primal_lp,
        primal_integral,
        dual_integral,
        dual_witness,
        equal,
    })
}

/// Computes the integral primal maximum by direct lattice search on a
/// bounded polyhedron and the integral dual minimum by monoid-membership
/// search at (then above) the LP optimum. Under a TDI system with
/// integral right-hand side the two sides are equal.
pub fn verify_strong_duality(h: &HRep, c: &[Rat], caps: &Caps) -> Result<DualityReport> {
    if c.len() != h.dim {
        return Err(Error::dim("objective dimension mismatch".to_string()));
    }
    if c.iter().any(|x| !is_integer(x)) {
        return Err(Error::pre("the objective must be integral".to_string()));
    }
    let setup = duality_setup(h, caps)?;
    duality_report(&setup, c, caps)
}

/// Aggregate of a duality sweep over all integral objectives in a box.
#[derive(Clone, Debug)]
pub struct DualitySweep {
    pub checked: usize,
    /// Objectives where the two integral optima differ.
    pub failures: Vec<(IntVec, DualityReport)>,
}

/// Runs [`verify_strong_duality`] for every `c ∈ ℤⁿ` with `‖c‖∞ ≤ c_box`,
/// sharing the per-system precomputation across objectives.
pub fn strong_duality_sweep(h: &HRep, c_box: i64, caps: &Caps) -> Result<DualitySweep> {
    let setup = duality_setup(h, caps)?;
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for c in box_lattice_points(&vec![-c_box; h.dim], &vec![c_box; h.dim], caps)? {
        checked += 1;
        let report = duality_report(&setup, &int_to_rat(&c), caps)?;
        if !report.equal {
            failures.push((c, report));
        }
    }
    Ok(DualitySweep { checked, failures })
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
    fn halved_interval_hull_is_the_origin() {
        // 0 <= 2x <= 1 contains only the lattice point 0.
        let h = HRep::new(1, vec![row(&[2], 1), row(&[-2], 0)], vec![]).unwrap();
        let hull = integer_hull(&h, &caps()).unwrap();
        assert!(hull.ineqs.is_empty());
        assert_eq!(hull.eqs, vec![row(&[1], 0)]);
    }

    #[test]
    fn integral_polytope_is_its_own_hull() {
        let hull = integer_hull(&unit_square(), &caps()).unwrap();
        let v = convert::h_to_v(&hull, &caps()).unwrap();
        assert_eq!(v.points.len(), 4);
        assert!(v.rays.is_empty());
    }

    #[test]
    fn fractional_triangle_hull() {
        // conv{(0,0),(2,0),(0,3/2)} has hull conv{(0,0),(2,0),(0,1)}.
        let tri = VRep::new(
            2,
            vec![ints(&[0, 0]), ints(&[2, 0]), vec![rat_int(0), rat(3, 2)]],
            vec![],
        )
        .unwrap();
        let h = convert::v_to_h(&tri, &caps()).unwrap();
        let hull = integer_hull(&h, &caps()).unwrap();
        let v = convert::h_to_v(&hull, &caps()).unwrap();
        assert_eq!(
            v.points,
            vec![ints(&[0, 0]), ints(&[0, 1]), ints(&[2, 0])]
        );
    }

    #[test]
    fn empty_lattice_intersection() {
        // 1/3 <= x <= 2/3 has no integer points.
        let h = HRep::new(1, vec![row(&[3], 2), row(&[-3], -1)], vec![]).unwrap();
        assert_eq!(integer_hull(&h, &caps()).unwrap(), HRep::canonical_empty(1));
    }

    #[test]
    fn integrality_witness() {
        assert!(is_integral(&unit_square(), &caps()).unwrap().integral);
        let half = HRep::new(
            2,
            vec![row(&[2, 0], 1), row(&[0, 2], 1), row(&[-1, 0], 0), row(&[0, -1], 0)],
            vec![],
        )
        .unwrap();
        let verdict = is_integral(&half, &caps()).unwrap();
        assert!(!verdict.integral);
        let witness = verdict.fractional_vertex.unwrap();
        assert!(witness.iter().any(|x| !is_integer(x)));
        assert!(structure::vertices(&half, &caps()).unwrap().contains(&witness));
    }

    #[test]
    fn hilbert_basis_of_the_orthant_is_the_units() {
        let b = hilbert_basis(&[ints(&[1, 0]), ints(&[0, 1])], &caps()).unwrap();
        assert_eq!(b.basis, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn hilbert_basis_needs_the_middle_generator() {
        let b = hilbert_basis(&[ints(&[1, 0]), ints(&[1, 2])], &caps()).unwrap();
        assert_eq!(b.basis, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn hilbert_basis_drops_redundant_generators() {
        let b = hilbert_basis(&[ints(&[1, 0]), ints(&[0, 1]), ints(&[1, 1])], &caps()).unwrap();
        assert_eq!(b.basis, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn hilbert_basis_rejects_nonpointed_cones() {
        assert!(matches!(
            hilbert_basis(&[ints(&[1]), ints(&[-1])], &caps()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn decomposition_of_square_cone_and_point() {
        let d = lattice_decomposition(&unit_square(), &caps()).unwrap();
        assert_eq!(d.points.len(), 4);
        assert!(d.generators.is_empty());

        // ccone{(1,0),(1,2)} as an outer description.
        let cone = HRep::new(2, vec![row(&[0, -1], 0), row(&[-2, 1], 0)], vec![]).unwrap();
        let d = lattice_decomposition(&cone, &caps()).unwrap();
        assert_eq!(d.points, vec![vec![0, 0]]);
        assert_eq!(d.generators, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);

        let point = HRep::new(
            2,
            vec![],
            vec![row(&[1, 0], 2), row(&[0, 1], 3)],
        )
        .unwrap();
        let d = lattice_decomposition(&point, &caps()).unwrap();
        assert_eq!(d.points, vec![vec![2, 3]]);
        assert!(d.generators.is_empty());
    }

    #[test]
    fn decomposition_rejects_general_unbounded_shapes() {
        // Unbounded but not a cone: neither supported branch applies.
        let h = HRep::new(2, vec![row(&[1, -1], 1), row(&[0, 1], 5)], vec![]).unwrap();
        assert!(matches!(
            lattice_decomposition(&h, &caps()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn nonnegative_orthant_rows_are_tdi() {
        let h = HRep::new(2, vec![row(&[1, 0], 0), row(&[0, 1], 0)], vec![]).unwrap();
        let verdict = is_tdi(&h, &caps()).unwrap();
        assert!(verdict.tdi);
    }

    #[test]
    fn skew_cone_rows_are_not_tdi() {
        // {x1 + x2 <= 0, x1 - x2 <= 0}: at the vertex the rows miss (1, 0).
        let h = HRep::new(2, vec![row(&[1, 1], 0), row(&[1, -1], 0)], vec![]).unwrap();
        let verdict = is_tdi(&h, &caps()).unwrap();
        assert!(!verdict.tdi);
        assert_eq!(verdict.violation.unwrap().point, vec![1, 0]);

        let def = is_tdi_definitional(&h, 1, &caps()).unwrap();
        assert!(!def.tdi);
        let (c, omega) = def.violation.unwrap();
        assert_eq!(omega, rat_int(0));
        assert!(c == vec![1, 0] || c == vec![-1, 0] || c == vec![0, 1] || c == vec![0, -1]);
    }

    #[test]
    fn fractional_bound_with_unimodular_row_is_tdi() {
        // {x <= 1/2}: TU coefficient matrix, so TDI for any rational b.
        let h = HRep::new(1, vec![Row::new(vec![rat_int(1)], rat(1, 2))], vec![]).unwrap();
        assert!(is_tdi(&h, &caps()).unwrap().tdi);
        assert!(is_tdi_definitional(&h, 2, &caps()).unwrap().tdi);
    }

    #[test]
    fn empty_systems_are_tdi_by_convention() {
        let h = HRep::new(1, vec![row(&[1], 0), row(&[-1], -1)], vec![]).unwrap();
        assert!(is_tdi(&h, &caps()).unwrap().tdi);
        assert!(is_tdi_definitional(&h, 2, &caps()).unwrap().tdi);
    }

    #[test]
    fn make_tdi_on_the_square_returns_the_box_rows() {
        let out = make_tdi(&unit_square(), &caps()).unwrap();
        let mut expect = unit_square().ineqs;
        expect.sort();
        assert_eq!(out.ineqs, expect);
        assert!(is_tdi(&out, &caps()).unwrap().tdi);
    }

    #[test]
    fn make_tdi_on_the_standard_triangle() {
        let tri = HRep::new(
            2,
            vec![row(&[-1, 0], 0), row(&[0, -1], 0), row(&[1, 1], 1)],
            vec![],
        )
        .unwrap();
        let out = make_tdi(&tri, &caps()).unwrap();
        assert!(out.ineqs.contains(&row(&[1, 1], 1)));
        assert!(out.ineqs.contains(&row(&[-1, 0], 0)));
        assert!(out.ineqs.contains(&row(&[0, -1], 0)));
        assert!(is_tdi(&out, &caps()).unwrap().tdi);
    }

    #[test]
    fn make_tdi_on_a_skew_integral_triangle() {
        let tri = VRep::new(2, vec![ints(&[0, 0]), ints(&[2, 1]), ints(&[1, 2])], vec![]).unwrap();
        let h = convert::v_to_h(&tri, &caps()).unwrap();
        assert!(!is_tdi(&h, &caps()).unwrap().tdi);
        let out = make_tdi(&h, &caps()).unwrap();
        assert!(is_tdi(&out, &caps()).unwrap().tdi);
        // Same set, and integral right-hand sides for an integral input.
        for r in &out.ineqs {
            assert!(is_integer(&r.b));
        }
        let back = convert::h_to_v(&out, &caps()).unwrap();
        assert_eq!(back.points, vec![ints(&[0, 0]), ints(&[1, 2]), ints(&[2, 1])]);
    }

    #[test]
    fn duality_on_a_segment() {
        // {x <= 3}: max x = 3 = min 3y over y = 1.
        let h = HRep::new(1, vec![row(&[1], 3), row(&[-1], 0)], vec![]).unwrap();
        let report = verify_strong_duality(&h, &ints(&[1]), &caps()).unwrap();
        assert_eq!(report.primal_integral, Some(rat_int(3)));
        assert_eq!(report.dual_integral, Some(rat_int(3)));
        assert!(report.equal);
    }

    #[test]
    fn duality_on_the_simplex() {
        let simplex = HRep::new(
            2,
            vec![row(&[1, 1], 1), row(&[-1, 0], 0), row(&[0, -1], 0)],
            vec![],
        )
        .unwrap();
        let report = verify_strong_duality(&simplex, &ints(&[1, 1]), &caps()).unwrap();
        assert_eq!(report.primal_integral, Some(rat_int(1)));
        assert_eq!(report.dual_integral, Some(rat_int(1)));
        assert!(report.equal);
    }

    #[test]
    fn monoid_membership_requires_natural_coefficients() {
        let gens = vec![vec![1i64, 1], vec![1, -1]];
        let w = positive_functional(&gens, &caps()).unwrap().unwrap();
        assert!(mono_member(&gens, &w, &[2, 0], &caps()).unwrap().is_some());
        assert!(mono_member(&gens, &w, &[1, 0], &caps()).unwrap().is_none());
    }
}
