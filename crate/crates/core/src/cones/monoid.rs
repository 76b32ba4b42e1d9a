use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::cone::Cone;
use super::face::{face_lattice, Face};
use super::hilbert::lattice_cone_generators;
use crate::error::Result;
use crate::lattice::vector::{self, Int, Vector};
use crate::lattice::{hermite_rows, solve, FgAbelianGroup, GroupHom};
use crate::poset::Poset;

/// Finitely generated submonoid of `Z^d`.
#[derive(Clone, Debug)]
pub struct AffineMonoid {
    dim: usize,
    generators: Vec<Vector>,
    cone: Cone,
    /// Indices of generators that are units.
    units: Vec<usize>,
    functional: Vector,
    group_basis: Vec<Vector>,
}

impl AffineMonoid {
    pub fn new(dim: usize, generators: Vec<Vector>) -> Result<Self> {
        let cone = Cone::new(dim, generators.clone())?;
        let units = (0..generators.len())
            .filter(|&i| cone.in_lineality(&generators[i]))
            .collect();
        let functional = cone.positive_functional();
        let group_basis = hermite_rows(&generators);
        Ok(AffineMonoid {
            dim,
            generators,
            cone,
            units,
            functional,
            group_basis,
        })
    }

    /// Free commutative monoid `N^n`.
    pub fn free(n: usize) -> Self {
        let gens = (0..n).map(|i| vector::unit_vector(n, i)).collect();
        AffineMonoid::new(n, gens).expect("unit vectors")
    }

    pub fn ambient_rank(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn unit_generators(&self) -> &[usize] {
        &self.units
    }

    pub fn is_pointed(&self) -> bool {
        self.cone.is_pointed()
    }

    /// Whether every element is invertible.
    pub fn is_group(&self) -> bool {
        self.cone.is_linear()
    }

    /// Hermite basis of the group of differences.
    pub fn group_basis(&self) -> &[Vector] {
        &self.group_basis
    }

    pub fn group_rank(&self) -> usize {
        self.group_basis.len()
    }

    fn in_span_lattice(&self, gens: &[Vector], x: &[Int]) -> bool {
        if gens.is_empty() {
            return vector::is_zero(x);
        }
        let h = GroupHom::from_images(FgAbelianGroup::free(self.dim), gens)
            .expect("generators of the ambient rank");
        solve(&h, x).is_some()
    }

    /// Whether `x` lies in the group of differences.
    pub fn in_group(&self, x: &[Int]) -> bool {
        self.in_span_lattice(&self.group_basis, x)
    }

    /// Exact membership: `x` is a non-negative integer combination of the
    /// generators.
    pub fn contains(&self, x: &[Int]) -> bool {
        if x.len() != self.dim || !self.cone.contains(x) || !self.in_group(x) {
            return false;
        }
        let unit_gens: Vec<Vector> = self.units.iter().map(|&i| self.generators[i].clone()).collect();
        let mut memo = BTreeMap::new();
        self.reach(x.to_vec(), &unit_gens, &mut memo)
    }

    fn reach(&self, x: Vector, unit_gens: &[Vector], memo: &mut BTreeMap<Vector, bool>) -> bool {
        if let Some(&r) = memo.get(&x) {
            return r;
        }
        let r = if vector::dot(&self.functional, &x).is_zero() {
            self.in_span_lattice(unit_gens, &x)
        } else {
            let mut found = false;
            for (i, g) in self.generators.iter().enumerate() {
                if self.units.contains(&i) {
                    continue;
                }
                let y = vector::sub(&x, g);
                if self.cone.contains(&y) && self.reach(y, unit_gens, memo) {
                    found = true;
                    break;
                }
            }
            found
        };
        memo.insert(x, r);
        r
    }

    /// Generators of `cone(M) ∩ group(M)` as elements of `Z^d`.
    pub fn saturation_generators(&self) -> Result<Vec<Vector>> {
        let k = self.group_rank();
        if k == 0 {
            return Ok(Vec::new());
        }
        let coords: Vec<Vector> = self
            .generators
            .iter()
            .map(|g| group_coordinates(&self.group_basis, g))
            .collect();
        let local = Cone::new(k, coords)?;
        let gens = lattice_cone_generators(k, local.facets(), local.equations())?;
        Ok(gens
            .iter()
            .map(|y| {
                self.group_basis
                    .iter()
                    .zip(y)
                    .fold(vector::zero_vector(self.dim), |acc, (b, c)| {
                        vector::add(&acc, &vector::scale(b, c))
                    })
            })
            .collect())
    }

    /// Whether `M = cone(M) ∩ group(M)`.
    pub fn is_saturated(&self) -> Result<bool> {
        Ok(self.saturation_generators()?.iter().all(|x| self.contains(x)))
    }

    /// Faces `M ∩ F` for faces `F` of `cone(M)`, by inclusion.
    pub fn faces(&self) -> Poset<Face> {
        face_lattice(&self.cone)
    }
}

/// Integer coordinates of `x` with respect to independent rows `basis`.
pub fn group_coordinates(basis: &[Vector], x: &[Int]) -> Vector {
    vector::solve_independent(basis, x)
        .expect("element of the lattice")
        .iter()
        .map(|q| q.to_integer())
        .collect()
}

/// Faces of the monoid, ordered by inclusion.
pub fn monoid_faces(m: &AffineMonoid) -> Poset<Face> {
    m.faces()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vector::ivec;
    use alloc::vec;

    #[test]
    fn membership() {
        let m = AffineMonoid::new(1, vec![ivec(&[2]), ivec(&[3])]).unwrap();
        assert!(!m.contains(&ivec(&[1])));
        assert!(m.contains(&ivec(&[5])));
        assert!(m.contains(&ivec(&[7])));
        assert!(!m.is_saturated().unwrap());
        let g = AffineMonoid::new(1, vec![ivec(&[2]), ivec(&[-3])]).unwrap();
        assert!(g.is_group());
        assert!(g.contains(&ivec(&[-1])));
    }

    #[test]
    fn faces_of_groups_and_orthants() {
        assert_eq!(AffineMonoid::free(2).faces().len(), 4);
        let z2 = AffineMonoid::new(
            2,
            vec![ivec(&[1, 0]), ivec(&[-1, 0]), ivec(&[0, 1]), ivec(&[0, -1])],
        )
        .unwrap();
        assert_eq!(z2.faces().len(), 1);
        let m = AffineMonoid::new(2, vec![ivec(&[0, 1]), ivec(&[1, 0]), ivec(&[2, -1])]).unwrap();
        assert_eq!(m.faces().len(), 4);
        assert!(m.is_saturated().unwrap());
    }
}
