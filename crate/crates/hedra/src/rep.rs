//! The two polyhedron representations.
//!
//! An [`HRep`] is an outer description: inequality rows `⟨a, x⟩ ≤ b` plus
//! optional equation rows `⟨a, x⟩ = b` (each equation being shorthand for
//! the pair of opposite inequalities). A [`VRep`] is an inner description:
//! a finite point set and a finite ray set, representing
//! `conv(points) + ccone(rays)`.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vec, to_primitive, RatMatrix};
use crate::rational::Rat;

/// One linear row `⟨a, x⟩ ≤ b` (or `= b` when stored as an equation).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Row {
    pub a: Vec<Rat>,
    pub b: Rat,
}

impl Row {
    pub fn new(a: Vec<Rat>, b: Rat) -> Self {
        Self { a, b }
    }

    /// Value `b - ⟨a, x⟩`; nonnegative iff `x` satisfies the inequality.
    pub fn slack(&self, x: &[Rat]) -> Rat {
        &self.b - dot(&self.a, x)
    }

    /// Scales the row to integer coefficients with gcd 1. The inequality
    /// direction is preserved (positive scaling only).
    pub fn primitive(&self) -> Row {
        let mut full = self.a.clone();
        full.push(self.b.clone());
        let (p, _) = to_primitive(&full);
        let b = p.last().expect("row has a right-hand side").clone();
        let mut a = p;
        a.pop();
        Row { a, b }
    }
}

/// Outer description of a polyhedron in `ℝ^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    /// Rows meaning `⟨a, x⟩ ≤ b`.
    pub ineqs: Vec<Row>,
    /// Rows meaning `⟨a, x⟩ = b`.
    pub eqs: Vec<Row>,
}

impl HRep {
    pub fn new(dim: usize, ineqs: Vec<Row>, eqs: Vec<Row>) -> Result<Self> {
        for r in ineqs.iter().chain(&eqs) {
            if r.a.len() != dim {
                return Err(Error::dim(format!(
                    "row has {} coefficients in ambient dimension {dim}",
                    r.a.len()
                )));
            }
        }
        Ok(Self { dim, ineqs, eqs })
    }

    /// The whole space `ℝ^dim` (no rows).
    pub fn universe(dim: usize) -> Self {
        Self {
            dim,
            ineqs: Vec::new(),
            eqs: Vec::new(),
        }
    }

    /// Canonical empty polyhedron `{⟨0, x⟩ ≤ -1}`.
    pub fn canonical_empty(dim: usize) -> Self {
        Self {
            dim,
            ineqs: vec![Row::new(vec![Rat::zero(); dim], -Rat::one())],
            eqs: Vec::new(),
        }
    }

    /// Builds from inequality data given as slices.
    pub fn from_ineqs(dim: usize, rows: Vec<(Vec<Rat>, Rat)>) -> Result<Self> {
        Self::new(
            dim,
            rows.into_iter().map(|(a, b)| Row::new(a, b)).collect(),
            Vec::new(),
        )
    }

    /// Expands equations into inequality pairs. Expanded indexing: the m
    /// inequality rows keep indices 0..m, equation i contributes rows
    /// m + 2i (the `≤` half) and m + 2i + 1 (the `≥` half). Certificates
    /// are always expressed over this indexing.
    pub fn expanded_rows(&self) -> Vec<Row> {
        let mut rows = self.ineqs.clone();
        for eq in &self.eqs {
            rows.push(eq.clone());
            rows.push(Row::new(
                eq.a.iter().map(|x| -x).collect(),
                -eq.b.clone(),
            ));
        }
        rows
    }

    /// Number of rows in the expanded (equation-free) system.
    pub fn expanded_len(&self) -> usize {
        self.ineqs.len() + 2 * self.eqs.len()
    }

    /// Coefficient matrix of the expanded system.
    pub fn expanded_matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(self.expanded_rows().into_iter().map(|r| r.a).collect())
            .expect("expanded rows share the ambient dimension")
    }

    /// Right-hand sides of the expanded system.
    pub fn expanded_rhs(&self) -> Vec<Rat> {
        self.expanded_rows().into_iter().map(|r| r.b).collect()
    }

    /// Exact membership test.
    pub fn contains(&self, x: &[Rat]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::dim(format!(
                "point has {} coordinates in ambient dimension {}",
                x.len(),
                self.dim
            )));
        }
        Ok(self.ineqs.iter().all(|r| !r.slack(x).is_negative())
            && self.eqs.iter().all(|r| r.slack(x).is_zero()))
    }

    /// Indices (in expanded order) of rows violated by `x`.
    pub fn violated_rows(&self, x: &[Rat]) -> Result<Vec<usize>> {
        if x.len() != self.dim {
            return Err(Error::dim("point dimension mismatch".to_string()));
        }
        Ok(self
            .expanded_rows()
            .iter()
            .enumerate()
            .filter(|(_, r)| r.slack(x).is_negative())
            .map(|(i, _)| i)
            .collect())
    }

    /// Same rows with zeroed right-hand sides: the homogeneous system.
    pub fn homogeneous(&self) -> HRep {
        HRep {
            dim: self.dim,
            ineqs: self
                .ineqs
                .iter()
                .map(|r| Row::new(r.a.clone(), Rat::zero()))
                .collect(),
            eqs: self
                .eqs
                .iter()
                .map(|r| Row::new(r.a.clone(), Rat::zero()))
                .collect(),
        }
    }

    /// True if every right-hand side is zero (the set is a cone).
    pub fn is_homogeneous(&self) -> bool {
        self.ineqs.iter().chain(&self.eqs).all(|r| r.b.is_zero())
    }
}

/// Inner description `conv(points) + ccone(rays)` in `ℝ^dim`.
///
/// The represented set is empty iff `points` is empty; the canonical empty
/// description has no rays either (the constructor drops rays when no
/// point is present). Rays are primitive integer vectors; zero rays are
/// rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub dim: usize,
    pub points: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

impl VRep {
    pub fn new(dim: usize, points: Vec<Vec<Rat>>, rays: Vec<Vec<Rat>>) -> Result<Self> {
        for v in points.iter().chain(&rays) {
            if v.len() != dim {
                return Err(Error::dim(format!(
                    "generator has {} coordinates in ambient dimension {dim}",
                    v.len()
                )));
            }
        }
        if rays.iter().any(|r| is_zero_vec(r)) {
            return Err(Error::Contract("zero vector offered as a ray".to_string()));
        }
        let rays = if points.is_empty() {
            Vec::new()
        } else {
            rays.iter().map(|r| to_primitive(r).0).collect()
        };
        Ok(Self { dim, points, rays })
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            points: Vec::new(),
            rays: Vec::new(),
        }
    }

    /// A cone given by its generators, with the apex stored explicitly so
    /// the "empty iff no points" invariant stays uniform.
    pub fn cone(dim: usize, rays: Vec<Vec<Rat>>) -> Result<Self> {
        Self::new(dim, vec![vec![Rat::zero(); dim]], rays)
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Sorts points lexicographically and rays (primitive) likewise, and
    /// removes duplicates. This is the canonical generator order used by
    /// all emitted descriptions.
    pub fn canonicalized(&self) -> VRep {
        let mut points = self.points.clone();
        points.sort();
        points.dedup();
        let mut rays: Vec<Vec<Rat>> = self.rays.iter().map(|r| to_primitive(r).0).collect();
        rays.sort();
        rays.dedup();
        VRep {
            dim: self.dim,
            points,
            rays,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn r(vals: &[i64], b: i64) -> Row {
        Row::new(vals.iter().map(|&v| rat_int(v)).collect(), rat_int(b))
    }

    #[test]
    fn membership_checks_rows_exactly() {
        let square = HRep::new(
            2,
            vec![r(&[1, 0], 1), r(&[0, 1], 1), r(&[-1, 0], 0), r(&[0, -1], 0)],
            vec![],
        )
        .unwrap();
        assert!(square.contains(&[rat(1, 2), rat(1, 2)]).unwrap());
        assert!(square.contains(&[rat_int(1), rat_int(0)]).unwrap());
        assert!(!square.contains(&[rat_int(2), rat_int(0)]).unwrap());
        assert_eq!(
            square.violated_rows(&[rat_int(2), rat_int(0)]).unwrap(),
            vec![0]
        );
    }

    #[test]
    fn equations_expand_to_opposite_pairs() {
        let h = HRep::new(1, vec![r(&[1], 3)], vec![r(&[1], 2)]).unwrap();
        let rows = h.expanded_rows();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[1], r(&[1], 2));
        assert_eq!(rows[2], r(&[-1], -2));
        assert!(h.contains(&[rat_int(2)]).unwrap());
        assert!(!h.contains(&[rat_int(1)]).unwrap());
    }

    #[test]
    fn vrep_normalizes_rays_and_the_empty_case() {
        let v = VRep::new(
            2,
            vec![vec![rat_int(0), rat_int(0)]],
            vec![vec![rat(1, 2), rat(3, 2)]],
        )
        .unwrap();
        assert_eq!(v.rays, vec![vec![rat_int(1), rat_int(3)]]);

        let empty = VRep::new(2, vec![], vec![vec![rat_int(1), rat_int(0)]]).unwrap();
        assert!(empty.is_empty());
        assert!(empty.rays.is_empty());

        assert!(VRep::new(1, vec![vec![rat_int(0)]], vec![vec![rat_int(0)]]).is_err());
    }

    #[test]
    fn canonical_order_is_sorted_and_deduplicated() {
        let v = VRep::new(
            1,
            vec![vec![rat_int(3)], vec![rat_int(1)], vec![rat_int(3)]],
            vec![vec![rat_int(2)], vec![rat_int(1)]],
        )
        .unwrap();
        let c = v.canonicalized();
        assert_eq!(c.points, vec![vec![rat_int(1)], vec![rat_int(3)]]);
        // (2) and (1) are the same primitive direction.
        assert_eq!(c.rays, vec![vec![rat_int(1)]]);
    }
}
