//! Finitely generated abelian groups in invariant-factor form and their
//! homomorphisms.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::snf::{hermite_rows, smith_normal_form};
use super::vector::{self, Int, Vector};
use crate::error::{Error, Result};

/// `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `2 <= d_1 | d_2 | ... | d_k`.
///
/// Elements are integer vectors of length `r + k`: free coordinates first,
/// then torsion coordinates, the latter reduced into `[0, d_i)` by
/// [`FgAbelianGroup::canonical_form`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    free_rank: usize,
    torsion: Vec<Int>,
}

impl FgAbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<Int>) -> Result<Self> {
        for (i, d) in torsion.iter().enumerate() {
            if *d < Int::from(2) {
                return Err(Error::InvalidGroup(format!("torsion order {d} is below 2")));
            }
            if i > 0 && !d.is_multiple_of(&torsion[i - 1]) {
                return Err(Error::InvalidGroup(format!(
                    "torsion orders {} and {d} do not form a divisibility chain",
                    torsion[i - 1]
                )));
            }
        }
        Ok(FgAbelianGroup { free_rank, torsion })
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `Z/d`; `d = 1` gives the trivial group and `d = 0` gives `Z`.
    pub fn cyclic(d: u64) -> Self {
        match d {
            0 => Self::free(1),
            1 => Self::trivial(),
            _ => FgAbelianGroup {
                free_rank: 0,
                torsion: alloc::vec![Int::from(d)],
            },
        }
    }

    /// `Z^n / ⟨relations⟩`, normalized. Returns the group together with the
    /// projection `Z^n -> group`.
    pub fn presented(n: usize, relations: &[Vector]) -> Result<(Self, GroupHom)> {
        let source = FgAbelianGroup::free(relations.len());
        let target = FgAbelianGroup::free(n);
        let h = GroupHom::new(source, target, IntMatrix::from_columns(relations, n)?)?;
        let (g, p) = cokernel(&h);
        Ok((g, p))
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    /// Number of coordinates of an element.
    pub fn dim(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<Int> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Order of coordinate `i`: zero for free coordinates.
    pub fn coordinate_order(&self, i: usize) -> Int {
        if i < self.free_rank {
            Int::zero()
        } else {
            self.torsion[i - self.free_rank].clone()
        }
    }

    pub fn check(&self, v: &[Int]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "element of length {} in a group with {} coordinates",
                v.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// Reduces torsion coordinates into `[0, d_i)`.
    pub fn canonical_form(&self, v: &[Int]) -> Vector {
        debug_assert_eq!(v.len(), self.dim());
        v.iter()
            .enumerate()
            .map(|(i, x)| {
                if i < self.free_rank {
                    x.clone()
                } else {
                    x.mod_floor(&self.torsion[i - self.free_rank])
                }
            })
            .collect()
    }

    pub fn zero(&self) -> Vector {
        vector::zero_vector(self.dim())
    }

    pub fn add(&self, a: &[Int], b: &[Int]) -> Vector {
        self.canonical_form(&vector::add(a, b))
    }

    pub fn sub(&self, a: &[Int], b: &[Int]) -> Vector {
        self.canonical_form(&vector::sub(a, b))
    }

    pub fn neg(&self, a: &[Int]) -> Vector {
        self.canonical_form(&vector::neg(a))
    }

    pub fn scale(&self, a: &[Int], k: &Int) -> Vector {
        self.canonical_form(&vector::scale(a, k))
    }

    pub fn is_zero(&self, a: &[Int]) -> bool {
        vector::is_zero(&self.canonical_form(a))
    }

    pub fn equal(&self, a: &[Int], b: &[Int]) -> bool {
        self.is_zero(&vector::sub(a, b))
    }

    /// `dim x dim` diagonal matrix of coordinate orders; its columns span the
    /// relations of the coordinate lattice.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.dim();
        let mut t = IntMatrix::zeros(n, self.torsion.len());
        for (k, d) in self.torsion.iter().enumerate() {
            t[(self.free_rank + k, k)] = d.clone();
        }
        t
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        if self.free_rank > 0 {
            if self.free_rank == 1 {
                f.write_str("Z")?;
            } else {
                write!(f, "Z^{}", self.free_rank)?;
            }
            first = false;
        }
        for d in &self.torsion {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "Z/{d}")?;
            first = false;
        }
        Ok(())
    }
}

/// Index of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(Int),
    Infinite,
}

/// Homomorphism given by a `target.dim() x source.dim()` matrix acting on
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FgAbelianGroup,
    target: FgAbelianGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Checks dimensions and that every torsion generator of the source is
    /// sent to an element whose order divides its own.
    pub fn new(source: FgAbelianGroup, target: FgAbelianGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Dimension(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        for (k, d) in source.torsion.iter().enumerate() {
            let j = source.free_rank + k;
            let image = vector::scale(&matrix.column(j), d);
            if !target.is_zero(&image) {
                return Err(Error::IllDefinedHom(format!(
                    "generator {j} has order {d} but its image does not"
                )));
            }
        }
        let mut matrix = matrix;
        for i in target.free_rank..target.dim() {
            let d = target.coordinate_order(i);
            for j in 0..matrix.cols() {
                let r = matrix[(i, j)].mod_floor(&d);
                matrix[(i, j)] = r;
            }
        }
        Ok(GroupHom {
            source,
            target,
            matrix,
        })
    }

    /// Homomorphism `Z^k -> target` sending `e_i` to `images[i]`.
    pub fn from_images(target: FgAbelianGroup, images: &[Vector]) -> Result<Self> {
        let m = IntMatrix::from_columns(images, target.dim())?;
        GroupHom::new(FgAbelianGroup::free(images.len()), target, m)
    }

    pub fn identity(g: &FgAbelianGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.dim()),
        }
    }

    pub fn zero(source: FgAbelianGroup, target: FgAbelianGroup) -> Self {
        let matrix = IntMatrix::zeros(target.dim(), source.dim());
        GroupHom {
            source,
            target,
            matrix,
        }
    }

    pub fn source(&self) -> &FgAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Int]) -> Vector {
        self.target.canonical_form(&self.matrix.mul_vec(x))
    }

    /// Images of the source coordinate generators.
    pub fn images(&self) -> Vec<Vector> {
        self.matrix.column_vectors()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.target != other.source {
            return Err(Error::Dimension("composition of incompatible maps".into()));
        }
        GroupHom::new(
            self.source.clone(),
            other.target.clone(),
            other.matrix.mul(&self.matrix),
        )
    }

    pub fn is_surjective(&self) -> bool {
        cokernel(self).0.is_trivial()
    }

    pub fn is_injective(&self) -> bool {
        kernel(self).is_empty()
    }

    /// `[H | T]` where `T` holds the relations of the target.
    fn relation_block(&self) -> IntMatrix {
        self.matrix.hconcat(&self.target.relation_matrix())
    }
}

/// `target / im(h)` in invariant-factor form with the projection from the
/// target.
pub fn cokernel(h: &GroupHom) -> (FgAbelianGroup, GroupHom) {
    let a = h.relation_block();
    let n = a.rows();
    let s = smith_normal_form(&a);
    let mut torsion_rows = Vec::new();
    let mut torsion = Vec::new();
    for i in 0..s.rank {
        let d = &s.d[(i, i)];
        if !d.is_one() {
            torsion.push(d.clone());
            let row: Vector = s.u.row(i).iter().map(|x| x.mod_floor(d)).collect();
            torsion_rows.push(row);
        }
    }
    let free_rows: Vec<Vector> = (s.rank..n).map(|i| s.u.row(i).to_vec()).collect();
    let free_rows = if free_rows.is_empty() {
        free_rows
    } else {
        hermite_rows(&free_rows)
    };
    let group = FgAbelianGroup {
        free_rank: free_rows.len(),
        torsion,
    };
    let mut rows = free_rows;
    rows.extend(torsion_rows);
    let matrix = IntMatrix::from_rows(&rows, n).expect("rows of the target width");
    let projection = GroupHom {
        source: h.target.clone(),
        target: group.clone(),
        matrix,
    };
    (group, projection)
}

/// Integer kernel of a matrix: a basis (rows) of `{x : A x = 0}`, in Hermite
/// normal form.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vector> {
    let s = smith_normal_form(a);
    let basis: Vec<Vector> = (s.rank..a.cols()).map(|j| s.v.column(j)).collect();
    hermite_rows(&basis)
}

/// Generators of `ker(h)`, canonical in the source; a basis when the source
/// is free.
pub fn kernel(h: &GroupHom) -> Vec<Vector> {
    let src = h.source();
    let a = h.relation_block();
    let s_dim = src.dim();
    let mut lattice: Vec<Vector> = integer_kernel(&a)
        .into_iter()
        .map(|z| z[..s_dim].to_vec())
        .collect();
    lattice.extend(src.relation_matrix().column_vectors());
    let mut out: Vec<Vector> = Vec::new();
    for row in hermite_rows(&lattice) {
        let c = src.canonical_form(&row);
        if !vector::is_zero(&c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Some `x` with `h(x) = t`, if one exists.
pub fn solve(h: &GroupHom, t: &[Int]) -> Option<Vector> {
    let a = h.relation_block();
    let s = smith_normal_form(&a);
    let ut = s.u.mul_vec(t);
    let mut y = vector::zero_vector(a.cols());
    for (i, c) in ut.iter().enumerate() {
        if i < s.rank {
            let (q, r) = c.div_rem(&s.d[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !c.is_zero() {
            return None;
        }
    }
    let z = s.v.mul_vec(&y);
    let x = h.source().canonical_form(&z[..h.source().dim()]);
    debug_assert!(h.target().equal(&h.apply(&x), t));
    Some(x)
}

/// Whether `elements` generate `g`, with the index of the subgroup they
/// generate.
pub fn subgroup_generates(elements: &[Vector], g: &FgAbelianGroup) -> Result<(bool, Index)> {
    for e in elements {
        g.check(e)?;
    }
    let h = GroupHom::from_images(g.clone(), elements)?;
    let (q, _) = cokernel(&h);
    let index = match q.order() {
        Some(n) => Index::Finite(n),
        None => Index::Infinite,
    };
    Ok((q.is_trivial(), index))
}

/// Image of `h` as a list of generators of the target, nonzero and
/// canonical.
pub fn image_generators(h: &GroupHom) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for c in h.images() {
        let c = h.target().canonical_form(&c);
        if !vector::is_zero(&c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Whether `x` lies in the subgroup of `g` generated by `elements`.
pub fn in_subgroup(x: &[Int], elements: &[Vector], g: &FgAbelianGroup) -> Result<bool> {
    g.check(x)?;
    let h = GroupHom::from_images(g.clone(), elements)?;
    Ok(solve(&h, x).is_some())
}

/// Whether two lists generate the same subgroup of `g`.
pub fn same_subgroup(a: &[Vector], b: &[Vector], g: &FgAbelianGroup) -> Result<bool> {
    for x in a {
        if !in_subgroup(x, b, g)? {
            return Ok(false);
        }
    }
    for x in b {
        if !in_subgroup(x, a, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

impl Index {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Index::Infinite)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => f.write_str("infinite"),
        }
    }
}
