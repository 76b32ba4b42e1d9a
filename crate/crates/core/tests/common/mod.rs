#![allow(dead_code)]

pub mod checks;
#[allow(unused_imports)]
pub use checks::*;

use coxkernel_core::cones::Fan;
use coxkernel_core::lattice::vector::{ivec, Int, Vector};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fan(rank: usize, rays: &[&[i64]], cones: &[&[usize]]) -> Fan {
    Fan::new(rank, rays.iter().map(|r| ivec(r)).collect(), cones.iter().map(|c| c.to_vec()).collect())
}

pub struct CorpusFan {
    pub name: &'static str,
    pub fan: Fan,
    /// Hand-derived `(free rank, torsion)` of `Cl`.
    pub cl: (usize, Vec<i64>),
    /// Hand-derived degree matrix, one row per `Cl` coordinate.
    pub degrees: Vec<Vec<i64>>,
}

pub fn p1() -> Fan {
    fan(1, &[&[1], &[-1]], &[&[0], &[1]])
}

pub fn p2() -> Fan {
    fan(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[2, 0]])
}

pub fn p121() -> Fan {
    fan(2, &[&[1, 0], &[0, 1], &[-1, -2]], &[&[0, 1], &[1, 2], &[2, 0]])
}

pub fn f1() -> Fan {
    fan(2, &[&[1, 0], &[0, 1], &[-1, 1], &[0, -1]], &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]])
}

pub fn a1_chart() -> Fan {
    fan(2, &[&[1, 0], &[1, 2]], &[&[0, 1]])
}

pub fn quadric_cone() -> Fan {
    fan(3, &[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]], &[&[0, 1, 2, 3]])
}

pub fn p1xp1() -> Fan {
    fan(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], &[&[0, 2], &[2, 1], &[1, 3], &[3, 0]])
}

pub fn two_rays() -> Fan {
    fan(2, &[&[1, 0], &[0, 1]], &[&[0], &[1]])
}

pub fn affine_plane() -> Fan {
    fan(2, &[&[1, 0], &[0, 1]], &[&[0, 1]])
}

/// The six class-group fans, then `P¹×P¹` and the non-complete fan.
pub fn corpus() -> Vec<CorpusFan> {
    vec![
        CorpusFan { name: "P1", fan: p1(), cl: (1, vec![]), degrees: vec![vec![1, 1]] },
        CorpusFan { name: "P2", fan: p2(), cl: (1, vec![]), degrees: vec![vec![1, 1, 1]] },
        CorpusFan { name: "P(1,2,1)", fan: p121(), cl: (1, vec![]), degrees: vec![vec![1, 2, 1]] },
        CorpusFan {
            name: "F1",
            fan: f1(),
            cl: (2, vec![]),
            // v0 + v2 + v3 = 0 and v1 + v3 = 0
            degrees: vec![vec![1, 0, 1, 1], vec![0, 1, 0, 1]],
        },
        CorpusFan { name: "A1-chart", fan: a1_chart(), cl: (0, vec![2]), degrees: vec![vec![1, 1]] },
        CorpusFan { name: "quadric cone", fan: quadric_cone(), cl: (1, vec![]), degrees: vec![vec![1, -1, -1, 1]] },
        CorpusFan { name: "P1xP1", fan: p1xp1(), cl: (2, vec![]), degrees: vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]] },
        CorpusFan { name: "two rays", fan: two_rays(), cl: (0, vec![]), degrees: vec![] },
    ]
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `Cl = Z^r / im(P)` for the `r x n` ray matrix `P`, from determinantal
/// divisors: `(r - rank, nontrivial invariant factors)`.
pub fn class_group_by_minors(rays: &[Vector]) -> (usize, Vec<i64>) {
    let m: Vec<Vec<i64>> = rays
        .iter()
        .map(|v| v.iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect();
    let (r, n) = (m.len(), m.first().map_or(0, Vec::len));
    let mut prev = 1i64;
    let mut rank = 0;
    let mut torsion = Vec::new();
    for k in 1..=r.min(n) {
        let g = subsets(r, k)
            .iter()
            .flat_map(|rs| {
                let m = &m;
                subsets(n, k).into_iter().map(move |cs| {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                    det(&sub)
                })
            })
            .fold(0i64, |a, b| a.gcd(&b));
        if g == 0 {
            break;
        }
        rank = k;
        let d = g / prev;
        if d > 1 {
            torsion.push(d);
        }
        prev = g;
    }
    (r - rank, torsion)
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Whether `actual = U * expected` for some `U ∈ GL(k, Z)`, `k <= 2`.
pub fn same_up_to_automorphism(actual: &[Vector], expected: &[Vec<i64>]) -> bool {
    let k = expected.len();
    if actual.len() != k {
        return false;
    }
    if k == 0 {
        return true;
    }
    let cols = expected[0].len();
    let Some(pivots) = subsets(cols, k).into_iter().find(|cs| {
        let sub: Vec<Vec<i64>> = expected.iter().map(|row| cs.iter().map(|&j| row[j]).collect()).collect();
        det(&sub) != 0
    }) else {
        return false;
    };
    let e: Vec<Vec<BigRational>> = expected.iter().map(|row| pivots.iter().map(|&j| q(row[j])).collect()).collect();
    let a: Vec<Vec<BigRational>> = actual
        .iter()
        .map(|row| pivots.iter().map(|&j| BigRational::from_integer(row[j].clone())).collect())
        .collect();
    // U = A_sub * E_sub^{-1}
    let inv: Vec<Vec<BigRational>> = if k == 1 {
        vec![vec![q(1) / e[0][0].clone()]]
    } else {
        let d = e[0][0].clone() * e[1][1].clone() - e[0][1].clone() * e[1][0].clone();
        vec![
            vec![e[1][1].clone() / d.clone(), -e[0][1].clone() / d.clone()],
            vec![-e[1][0].clone() / d.clone(), e[0][0].clone() / d],
        ]
    };
    let u: Vec<Vec<BigRational>> = (0..k)
        .map(|i| (0..k).map(|j| (0..k).map(|l| a[i][l].clone() * inv[l][j].clone()).sum()).collect())
        .collect();
    if u.iter().flatten().any(|x| !x.is_integer()) {
        return false;
    }
    let det_u = if k == 1 { u[0][0].clone() } else { u[0][0].clone() * u[1][1].clone() - u[0][1].clone() * u[1][0].clone() };
    if det_u.abs() != q(1) {
        return false;
    }
    (0..k).all(|i| {
        (0..cols).all(|c| {
            let v: BigRational = (0..k).map(|l| u[i][l].clone() * q(expected[l][c])).sum();
            v == BigRational::from_integer(actual[i][c].clone())
        })
    })
}

/// Carathéodory membership in the real cone over `gens`.
pub fn in_real_cone(gens: &[Vector], x: &[Int]) -> bool {
    if x.iter().all(Zero::is_zero) {
        return true;
    }
    (1..=gens.len()).any(|k| {
        subsets(gens.len(), k).into_iter().any(|s| {
            let cols: Vec<Vector> = s.iter().map(|&i| gens[i].clone()).collect();
            solve_rational(&cols, x).is_some_and(|l| l.iter().all(|c| !c.is_negative()))
        })
    })
}

/// Unique solution of `sum l_i cols_i = x` for independent columns.
fn solve_rational(cols: &[Vector], x: &[Int]) -> Option<Vec<BigRational>> {
    let (n, k) = (x.len(), cols.len());
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| BigRational::from_integer(c[i].clone())).collect();
            row.push(BigRational::from_integer(x[i].clone()));
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..k {
        let p = (r..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, p);
        let piv = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = v.clone() / piv.clone();
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=k {
                    let t = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - t;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

/// Faces of the monoid generated by `gens`, as sorted generator index sets:
/// `S` is a face when `t * sum(S) - g` leaves the cone for every `g ∉ S`.
pub fn monoid_faces_by_subsets(gens: &[Vector]) -> std::collections::BTreeSet<Vec<usize>> {
    let dim = gens.first().map_or(0, Vec::len);
    let t = Int::from(1_000_000_000_000i64);
    let mut out = std::collections::BTreeSet::new();
    for mask in 0u32..(1 << gens.len()) {
        let s: Vec<usize> = (0..gens.len()).filter(|i| mask & (1 << i) != 0).collect();
        let mut big = vec![Int::zero(); dim];
        for &i in &s {
            for (b, x) in big.iter_mut().zip(&gens[i]) {
                *b += x * &t;
            }
        }
        let closure: Vec<usize> = (0..gens.len())
            .filter(|&g| {
                let d: Vector = big.iter().zip(&gens[g]).map(|(b, x)| b - x).collect();
                in_real_cone(gens, &d)
            })
            .collect();
        out.insert(closure);
    }
    out
}

pub fn random_vec(rng: &mut impl Rng, len: usize, lo: i64, hi: i64) -> Vector {
    (0..len).map(|_| Int::from(rng.gen_range(lo..=hi))).collect()
}

/// All exponent vectors in `N^n` with the given degree under the integer
/// weights, entries bounded by `cap`.
pub fn monomials_of_degree(weights: &[Vec<i64>], degree: &[i64], cap: i64) -> Vec<Vector> {
    let n = weights.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut e = vec![0i64; n];
    loop {
        if weights
            .iter()
            .zip(degree)
            .all(|(w, d)| w.iter().zip(&e).map(|(a, b)| a * b).sum::<i64>() == *d)
        {
            out.push(ivec(&e));
        }
        let mut i = 0;
        while i < n && e[i] == cap {
            e[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        e[i] += 1;
    }
    out
}
