//! Phase-1 simplex over exact rationals, Bland's rule.
//!
//! Decides feasibility of {x >= 0 : A x = b} and produces a certificate
//! either way: a feasible point, or a row functional y with yA <= 0
//! componentwise and yb > 0 (so no nonnegative combination can reach b).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::hull::Rational;

pub(crate) enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible(Vec<Rational>),
}

/// `a` is row-major, `b.len()` rows by `n` columns. All rows must have equal
/// length. Minimizes the sum of artificial variables; exact arithmetic
/// throughout, so the zero test on the optimum is meaningful.
pub(crate) fn feasible(a: &[Vec<Rational>], b: &[Rational]) -> Feasibility {
    let m = b.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    debug_assert!(a.len() == m && a.iter().all(|row| row.len() == n));
    if m == 0 {
        return Feasibility::Feasible(vec![Rational::zero(); n]);
    }

    // Flip rows to make the right-hand side nonnegative so the artificial
    // basis starts feasible.
    let mut flip = vec![false; m];
    let width = n + m + 1; // columns, artificials, rhs
    let rhs = n + m;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i].is_negative();
        flip[i] = neg;
        let mut row = Vec::with_capacity(width);
        for j in 0..n {
            row.push(if neg { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rational::one() } else { Rational::zero() });
        }
        row.push(if neg { -b[i].clone() } else { b[i].clone() });
        rows.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Objective row: reduced costs of min sum-of-artificials, with the
    // negated objective value in the rhs slot.
    let mut obj = vec![Rational::zero(); width];
    for j in 0..width {
        if (n..n + m).contains(&j) {
            continue; // artificial columns start with zero reduced cost
        }
        let mut s = Rational::zero();
        for row in &rows {
            s += &row[j];
        }
        obj[j] = -s;
    }

    loop {
        // Bland: entering column = smallest index with negative reduced cost.
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // Ratio test; ties by smallest basis variable index.
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !rows[i][enter].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let cur = &rows[i][rhs] * &rows[l][enter];
                    let best = &rows[l][rhs] * &rows[i][enter];
                    cur < best || (cur == best && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        let leave = leave.expect("phase-1 objective is bounded below by zero");

        // Pivot.
        let piv = rows[leave][enter].clone();
        for x in rows[leave].iter_mut() {
            *x /= &piv;
        }
        for i in 0..m {
            if i == leave || rows[i][enter].is_zero() {
                continue;
            }
            let factor = rows[i][enter].clone();
            for j in 0..width {
                let delta = &factor * &rows[leave][j];
                rows[i][j] -= delta;
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for j in 0..width {
                let delta = &factor * &rows[leave][j];
                obj[j] -= delta;
            }
        }
        basis[leave] = enter;
    }

    let optimum = -obj[rhs].clone();
    debug_assert!(!optimum.is_negative());
    if optimum.is_zero() {
        let mut x = vec![Rational::zero(); n];
        for i in 0..m {
            if basis[i] < n {
                x[basis[i]] = rows[i][rhs].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        // Dual y from the artificial columns: reduced cost there is 1 - y_i.
        // Undo the row flips so y certifies the original system.
        let mut y = Vec::with_capacity(m);
        for i in 0..m {
            let mut yi = Rational::one() - obj[n + i].clone();
            if flip[i] {
                yi = -yi;
            }
            y.push(yi);
        }
        Feasibility::Infeasible(y)
    }
}
