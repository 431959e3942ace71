//! Dense exact-rational simplex, two phases, Bland's rule.
//!
//! Sized for the tiny domination programs of this crate (a handful of
//! variables and constraints), where exactness matters more than speed.

use num_traits::Zero;

use crate::error::{MogError, Result};
use crate::rat::Rat;

struct Tableau {
    /// constraint rows, each `cols + 1` wide (last entry is the rhs)
    rows: Vec<Vec<Rat>>,
    /// objective row in reduced-cost form (`-c` priced out on the basis)
    obj: Vec<Rat>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let factor = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v /= &factor;
        }
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let scale = self.rows[r][col].clone();
            for c in 0..=self.cols {
                let delta = &self.rows[row][c] * &scale;
                self.rows[r][c] -= delta;
            }
        }
        if !self.obj[col].is_zero() {
            let scale = self.obj[col].clone();
            for c in 0..=self.cols {
                let delta = &self.rows[row][c] * &scale;
                self.obj[c] -= delta;
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule: entering column = smallest improving index, leaving row
    /// = smallest basis index among the ratio-test minimizers. Never cycles.
    fn run(&mut self, allowed: impl Fn(usize) -> bool) -> Result<()> {
        loop {
            let entering = (0..self.cols)
                .find(|&c| allowed(c) && self.obj[c] < Rat::zero());
            let Some(col) = entering else {
                return Ok(());
            };
            let mut leaving: Option<(usize, Rat)> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][col] <= Rat::zero() {
                    continue;
                }
                let ratio = &self.rows[r][self.cols] / &self.rows[r][col];
                let better = match &leaving {
                    None => true,
                    Some((prev, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*prev])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
            let Some((row, _)) = leaving else {
                return Err(MogError::InvalidArgument(
                    "linear program is unbounded".into(),
                ));
            };
            self.pivot(row, col);
        }
    }
}

/// Maximizes `c . x` subject to `A x = b`, `x >= 0`. Returns `None` when
/// infeasible, otherwise the optimum and one optimal point.
pub(crate) fn simplex_max(
    c: &[Rat],
    a: &[Vec<Rat>],
    b: &[Rat],
) -> Result<Option<(Rat, Vec<Rat>)>> {
    let n = c.len();
    let m = a.len();
    if b.len() != m || a.iter().any(|row| row.len() != n) {
        return Err(MogError::InvalidArgument(
            "inconsistent linear program shape".into(),
        ));
    }

    // phase 1: artificial basis, minimize the artificial mass
    let cols = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let negate = b[i] < Rat::zero();
        let mut full = Vec::with_capacity(cols + 1);
        for v in row {
            full.push(if negate { -v.clone() } else { v.clone() });
        }
        for j in 0..m {
            full.push(if j == i {
                Rat::from_integer(1.into())
            } else {
                Rat::zero()
            });
        }
        full.push(if negate { -b[i].clone() } else { b[i].clone() });
        rows.push(full);
    }
    // phase-1 objective: maximize -(sum of artificials); reduced form needs
    // the basic artificial columns priced out
    let mut obj = vec![Rat::zero(); cols + 1];
    for j in n..cols {
        obj[j] = Rat::from_integer(1.into());
    }
    for row in &rows {
        for (o, v) in obj.iter_mut().zip(row.iter()) {
            *o -= v;
        }
        let rhs = row[cols].clone();
        obj[cols] -= rhs;
    }
    let mut t = Tableau {
        rows,
        obj,
        basis: (n..cols).collect(),
        cols,
    };
    t.run(|_| true)?;

    let artificial_mass: Rat = t
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &v)| v >= n)
        .map(|(r, _)| t.rows[r][cols].clone())
        .sum();
    if !artificial_mass.is_zero() {
        return Ok(None);
    }

    // drive leftover degenerate artificials out of the basis
    for r in 0..t.rows.len() {
        if t.basis[r] < n {
            continue;
        }
        if let Some(col) = (0..n).find(|&c| !t.rows[r][c].is_zero()) {
            t.pivot(r, col);
        }
    }
    // any row still based on an artificial is all-zero over the original
    // variables (a redundant constraint) and can be dropped
    let keep: Vec<usize> = (0..t.rows.len()).filter(|&r| t.basis[r] < n).collect();
    let rows: Vec<Vec<Rat>> = keep
        .iter()
        .map(|&r| {
            let mut row: Vec<Rat> = t.rows[r][..n].to_vec();
            row.push(t.rows[r][cols].clone());
            row
        })
        .collect();
    let basis: Vec<usize> = keep.iter().map(|&r| t.basis[r]).collect();

    // phase 2: the real objective, priced out on the current basis
    let mut obj: Vec<Rat> = c.iter().map(|v| -v.clone()).collect();
    obj.push(Rat::zero());
    for (r, &bv) in basis.iter().enumerate() {
        if obj[bv].is_zero() {
            continue;
        }
        let scale = obj[bv].clone();
        for c in 0..=n {
            let delta = &rows[r][c] * &scale;
            obj[c] -= delta;
        }
    }
    let mut t = Tableau {
        rows,
        obj,
        basis,
        cols: n,
    };
    t.run(|_| true)?;

    let mut solution = vec![Rat::zero(); n];
    for (r, &bv) in t.basis.iter().enumerate() {
        solution[bv] = t.rows[r][n].clone();
    }
    let value = c
        .iter()
        .zip(&solution)
        .map(|(cv, xv)| cv * xv)
        .sum();
    Ok(Some((value, solution)))
}
