//! Integer vectors and a few exact linear-algebra helpers over `Z` and `Q`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision integer used throughout the crate.
pub type Int = BigInt;

/// Integer vector.
pub type Vector = Vec<Int>;

/// Builds an integer vector from machine integers.
pub fn ivec(entries: &[i64]) -> Vector {
    entries.iter().map(|&x| Int::from(x)).collect()
}

pub fn zero_vector(len: usize) -> Vector {
    alloc::vec![Int::zero(); len]
}

pub fn unit_vector(len: usize, index: usize) -> Vector {
    let mut v = zero_vector(len);
    v[index] = Int::one();
    v
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[Int], b: &[Int]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Int], b: &[Int]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Int]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn scale(a: &[Int], k: &Int) -> Vector {
    a.iter().map(|x| x * k).collect()
}

/// `p * a + q * b`
pub fn combine(p: &Int, a: &[Int], q: &Int, b: &[Int]) -> Vector {
    a.iter().zip(b).map(|(x, y)| p * x + q * y).collect()
}

pub fn is_zero(a: &[Int]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Non-negative gcd of the entries; zero for the zero vector.
pub fn content(a: &[Int]) -> Int {
    a.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides by the content, keeping orientation.
pub fn primitive(a: &[Int]) -> Vector {
    let g = content(a);
    if g.is_zero() || g.is_one() {
        return a.to_vec();
    }
    a.iter().map(|x| x / &g).collect()
}

pub fn is_primitive(a: &[Int]) -> bool {
    content(a).is_one()
}

/// Primitive vector spanning the same line, first non-zero entry positive.
pub fn line_representative(a: &[Int]) -> Vector {
    let p = primitive(a);
    match p.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => neg(&p),
        _ => p,
    }
}

/// Rank over `Q` of the given rows.
pub fn rank(rows: &[Vector]) -> usize {
    echelon(rows).len()
}

/// Fraction-free row echelon form; returns the non-zero rows.
pub fn echelon(rows: &[Vector]) -> Vec<Vector> {
    let mut rows: Vec<Vector> = rows.iter().filter(|r| !is_zero(r)).cloned().collect();
    let Some(width) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut done = 0;
    for col in 0..width {
        let Some(p) = (done..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(done, p);
        let pivot = rows[done].clone();
        for row in rows.iter_mut().skip(done + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            *row = primitive(&combine(&pivot[col], row, &-factor, &pivot));
        }
        done += 1;
        if done == rows.len() {
            break;
        }
    }
    rows.truncate(done);
    rows.retain(|r| !is_zero(r));
    rows
}

/// Exact rational solution of `sum_j coeffs[j] * columns[j] = target`, if the
/// columns are linearly independent and the target lies in their span.
pub fn solve_independent(columns: &[Vector], target: &[Int]) -> Option<Vec<BigRational>> {
    let k = columns.len();
    let m = target.len();
    // augmented system, row-major m x (k + 1)
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = columns
                .iter()
                .map(|c| BigRational::from_integer(c[i].clone()))
                .collect();
            row.push(BigRational::from_integer(target[i].clone()));
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..k {
        let p = (pivot_row..m).find(|&i| !a[i][col].is_zero())?;
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for x in a[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m {
            if i != pivot_row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..=k {
                    let t = &a[pivot_row][j] * &f;
                    a[i][j] -= t;
                }
            }
        }
        pivot_row += 1;
    }
    if a[k..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| a[i][k].clone()).collect())
}
