//! Multiplier-tracked Fourier–Motzkin elimination engine.
//!
//! Every live row carries its nonnegative combination multipliers over the
//! base rows, so feasibility verdicts, validity bounds and projection
//! traces all come out of the same loop. Cleanup between steps is purely
//! syntactic (normalization, duplicate/dominated rows, trivial rows);
//! removing dominated rows never changes the solution set, so the
//! eliminated system stays an exact projection at every step.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::to_primitive;
use crate::rational::Rat;
use crate::rep::Row;

/// A derived inequality `⟨a, x⟩ ≤ b` together with the multipliers that
/// produce it from the base rows.
#[derive(Clone, Debug)]
pub struct TrackedRow {
    pub a: Vec<Rat>,
    pub b: Rat,
    pub mult: Vec<Rat>,
}

impl TrackedRow {
    pub fn support(&self) -> usize {
        self.mult.iter().filter(|m| !m.is_zero()).count()
    }

    fn is_constant(&self) -> bool {
        self.a.iter().all(Rat::is_zero)
    }
}

/// Wraps base rows with unit multipliers.
pub fn tracked_rows(rows: &[Row]) -> Vec<TrackedRow> {
    let m = rows.len();
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            let mut mult = vec![Rat::zero(); m];
            mult[i] = Rat::one();
            TrackedRow {
                a: r.a.clone(),
                b: r.b.clone(),
                mult,
            }
        })
        .collect()
}

/// Scales the row so the coefficient vector is a primitive integer vector
/// (multipliers scaled identically). Constant rows are left alone.
fn normalize(row: &mut TrackedRow) {
    if row.is_constant() {
        return;
    }
    let (a, factor) = to_primitive(&row.a);
    row.a = a;
    row.b *= &factor;
    for m in &mut row.mult {
        *m *= &factor;
    }
}

/// A constant row `0 ≤ b` with `b < 0`, if one exists: an exact
/// infeasibility witness for the current system.
pub fn find_contradiction(rows: &[TrackedRow]) -> Option<&TrackedRow> {
    rows.iter()
        .find(|r| r.is_constant() && r.b.is_negative())
}

/// Normalizes, drops trivially true rows, keeps contradictions, and among
/// rows with the same coefficient vector keeps the smallest right-hand
/// side.
pub fn cleanup(rows: Vec<TrackedRow>) -> Vec<TrackedRow> {
    let mut best: BTreeMap<Vec<Rat>, TrackedRow> = BTreeMap::new();
    let mut contradiction: Option<TrackedRow> = None;
    for mut row in rows {
        normalize(&mut row);
        if row.is_constant() {
            if row.b.is_negative() && contradiction.is_none() {
                contradiction = Some(row);
            }
            continue;
        }
        match best.get_mut(&row.a) {
            Some(kept) => {
                if row.b < kept.b {
                    *kept = row;
                }
            }
            None => {
                best.insert(row.a.clone(), row);
            }
        }
    }
    let mut out: Vec<TrackedRow> = contradiction.into_iter().collect();
    out.extend(best.into_values());
    out
}

/// One elimination step on variable index `var`. `max_rows` caps the
/// distinct derived system; the raw combination count gets a generous
/// multiple of that, since duplicate-heavy systems (equation pairs)
/// produce many combinations that merge away.
pub fn eliminate_var(rows: Vec<TrackedRow>, var: usize, max_rows: usize) -> Result<Vec<TrackedRow>> {
    let mut pos: Vec<TrackedRow> = Vec::new();
    let mut negs: Vec<TrackedRow> = Vec::new();
    let mut best: BTreeMap<Vec<Rat>, TrackedRow> = BTreeMap::new();
    let mut contradiction: Option<TrackedRow> = None;
    let mut merge = |mut row: TrackedRow| -> Result<()> {
        normalize(&mut row);
        if row.is_constant() {
            if row.b.is_negative() && contradiction.is_none() {
                contradiction = Some(row);
            }
            return Ok(());
        }
        match best.get_mut(&row.a) {
            Some(kept) => {
                if row.b < kept.b {
                    *kept = row;
                }
            }
            None => {
                if best.len() == max_rows {
                    return Err(Error::cap(format!(
                        "elimination step exceeds {max_rows} distinct rows"
                    )));
                }
                best.insert(row.a.clone(), row);
            }
        }
        Ok(())
    };
    for mut row in rows {
        if row.a[var].is_zero() {
            row.a.remove(var);
            merge(row)?;
        } else if row.a[var].is_positive() {
            pos.push(row);
        } else {
            negs.push(row);
        }
    }
    let raw_cap = max_rows.saturating_mul(40);
    if pos.len().saturating_mul(negs.len()) > raw_cap {
        return Err(Error::cap(format!(
            "elimination step would combine {} row pairs (cap {raw_cap})",
            pos.len() * negs.len()
        )));
    }
    for p in &pos {
        for n in &negs {
            let alpha = p.a[var].clone(); // > 0, multiplies the negative row
            let beta = -n.a[var].clone(); // > 0, multiplies the positive row
            let a: Vec<Rat> = p
                .a
                .iter()
                .zip(&n.a)
                .enumerate()
                .filter(|&(j, _)| j != var)
                .map(|(_, (pj, nj))| nj * &alpha + pj * &beta)
                .collect();
            let b = &n.b * &alpha + &p.b * &beta;
            let mult: Vec<Rat> = p
                .mult
                .iter()
                .zip(&n.mult)
                .map(|(pm, nm)| nm * &alpha + pm * &beta)
                .collect();
            merge(TrackedRow { a, b, mult })?;
        }
    }
    let mut out: Vec<TrackedRow> = contradiction.into_iter().collect();
    out.extend(best.into_values());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn row(a: &[i64], b: i64) -> Row {
        Row::new(a.iter().map(|&v| rat_int(v)).collect(), rat_int(b))
    }

    #[test]
    fn single_step_matches_the_combination_formula() {
        // x1 - x2 <= 0 and x2 <= 3 combine to x1 <= 3.
        let rows = tracked_rows(&[row(&[1, -1], 0), row(&[0, 1], 3)]);
        let out = eliminate_var(rows, 1, 1000).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].a, vec![rat_int(1)]);
        assert_eq!(out[0].b, rat_int(3));
        assert_eq!(out[0].mult, vec![rat_int(1), rat_int(1)]);
    }

    #[test]
    fn trivial_rows_are_dropped_and_contradictions_kept() {
        // x <= 1 and -x <= 0 combine to 0 <= 1 (dropped).
        let rows = tracked_rows(&[row(&[1], 1), row(&[-1], 0)]);
        let out = eliminate_var(rows, 0, 1000).unwrap();
        assert!(out.is_empty());

        // x <= 1 and -x <= -2 combine to 0 <= -1 (kept as witness).
        let rows = tracked_rows(&[row(&[1], 1), row(&[-1], -2)]);
        let out = eliminate_var(rows, 0, 1000).unwrap();
        let bad = find_contradiction(&out).expect("contradiction row");
        assert_eq!(bad.b, rat_int(-1));
        assert_eq!(bad.mult, vec![rat_int(1), rat_int(1)]);
    }

    #[test]
    fn duplicate_directions_keep_the_tighter_bound() {
        let rows = tracked_rows(&[row(&[2, 0], 4), row(&[1, 0], 1)]);
        let out = cleanup(rows);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].b, rat_int(1));
    }

    #[test]
    fn row_cap_is_enforced() {
        // Four combinations with pairwise distinct directions.
        let rows = tracked_rows(&[
            row(&[1, 1, 0], 0),
            row(&[1, 0, 1], 0),
            row(&[-1, 2, 0], 0),
            row(&[-1, 0, 3], 0),
        ]);
        assert!(matches!(eliminate_var(rows, 0, 3), Err(Error::Resource(_))));
    }
}
