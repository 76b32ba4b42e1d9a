//! Smith and Hermite normal forms over `Z`.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::vector::{Int, Vector};

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d_1 | d_2 | ...`, all non-negative. The inverses of `U` and `V` are
/// tracked along the way.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Number of non-zero diagonal entries.
    pub rank: usize,
}

impl Smith {
    /// Diagonal entries `d_0, ..., d_{min(rows, cols) - 1}`.
    pub fn diagonal(&self) -> Vector {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Non-zero diagonal entries.
    pub fn invariant_factors(&self) -> Vector {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// `row[dst] += k * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, k: &Int) {
        self.a.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    /// `col[dst] += k * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, k: &Int) {
        self.a.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Smallest non-zero absolute value in the trailing submatrix; ties go to
    /// the lowest `(row, col)`.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if self.a[b].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

/// Smith normal form with smallest-absolute-value pivoting.
pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = w.pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = &w.a[(i, t)] / &w.a[(t, t)];
                w.add_row(i, t, &-q);
                if !w.a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = &w.a[(t, j)] / &w.a[(t, t)];
                w.add_col(j, t, &-q);
                if !w.a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // divisibility of the trailing block by the pivot
                let bad = (t + 1..m).find(|&i| {
                    (t + 1..n).any(|j| !w.a[(i, j)].is_multiple_of(&w.a[(t, t)]))
                });
                match bad {
                    None => break,
                    Some(i) => {
                        w.add_row(t, i, &Int::one());
                        continue;
                    }
                }
            }
            let (pi, pj) = w.pivot(t).expect("non-zero entries remain");
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    Smith {
        rank: t,
        u: w.u,
        u_inv: w.u_inv,
        d: w.a,
        v: w.v,
        v_inv: w.v_inv,
    }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: echelon
/// rows with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. The result is a basis of the row lattice and depends only
/// on that lattice.
pub fn hermite_rows(rows: &[Vector]) -> Vec<Vector> {
    let Some(width) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rows: Vec<Vector> = rows
        .iter()
        .filter(|r| !super::vector::is_zero(r))
        .cloned()
        .collect();
    let mut done = 0;
    let mut pivots = Vec::new();
    for col in 0..width {
        if done == rows.len() {
            break;
        }
        // gcd-combine all entries of this column into row `done`
        loop {
            let nz: Vec<usize> = (done..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz
                .iter()
                .min_by(|&&a, &&b| rows[a][col].abs().cmp(&rows[b][col].abs()))
                .expect("non-empty");
            rows.swap(done, p);
            let mut reduced = true;
            for i in done + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[done][col]);
                let pivot = rows[done].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
                if !rows[i][col].is_zero() {
                    reduced = false;
                }
            }
            if reduced {
                break;
            }
        }
        if rows[done][col].is_zero() {
            continue;
        }
        if rows[done][col].is_negative() {
            for x in rows[done].iter_mut() {
                *x = -&*x;
            }
        }
        pivots.push(col);
        done += 1;
    }
    rows.truncate(done);
    // reduce above pivots
    for (k, &col) in pivots.iter().enumerate() {
        let pivot = rows[k].clone();
        for row in rows.iter_mut().take(k) {
            let q = row[col].div_floor(&pivot[col]);
            if !q.is_zero() {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
            }
        }
    }
    rows
}
