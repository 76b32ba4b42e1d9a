use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::Zero;

use super::cone::Cone;
use crate::lattice::vector::{self, Vector};
use crate::poset::Poset;

/// Face `C ∩ normal^⊥` of a cone, recorded by the indices of the parent's
/// generators lying in it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    /// Supporting functional: non-negative on the parent, vanishing exactly
    /// on the face.
    pub normal: Vector,
    pub generators: Vec<usize>,
    pub dim: usize,
}

impl Face {
    pub fn contains(&self, x: &[crate::lattice::Int]) -> bool {
        vector::dot(&self.normal, x).is_zero()
    }

    pub fn is_subface_of(&self, other: &Face) -> bool {
        self.generators.iter().all(|g| other.generators.contains(g))
    }
}

fn make_face(c: &Cone, generators: Vec<usize>) -> Face {
    let points: Vec<Vector> = generators.iter().map(|&i| c.generators()[i].clone()).collect();
    let normal = c
        .tight_facets(&points)
        .into_iter()
        .fold(vector::zero_vector(c.ambient_rank()), |acc, i| {
            vector::add(&acc, &c.facets()[i])
        });
    let dim = vector::rank(&points);
    Face {
        normal,
        generators,
        dim,
    }
}

/// All faces of `c`, ordered by inclusion.
pub fn face_lattice(c: &Cone) -> Poset<Face> {
    let all: Vec<usize> = (0..c.generators().len()).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = alloc::vec![all.clone()];
    seen.insert(all);
    while let Some(gens) = queue.pop() {
        for f in c.facets() {
            let next: Vec<usize> = gens
                .iter()
                .copied()
                .filter(|&i| vector::dot(f, &c.generators()[i]).is_zero())
                .collect();
            if next.len() < gens.len() && seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    let mut faces: Vec<Face> = seen.into_iter().map(|g| make_face(c, g)).collect();
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.generators.cmp(&b.generators)));
    Poset::new(faces, |a, b| a.is_subface_of(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vector::ivec;
    use alloc::vec;

    #[test]
    fn orthant_has_four_faces() {
        let c = Cone::new(2, vec![ivec(&[1, 0]), ivec(&[0, 1])]).unwrap();
        let p = face_lattice(&c);
        assert_eq!(p.len(), 4);
        assert_eq!(p.covers().len(), 4);
        assert_eq!(p.get(0).generators, Vec::<usize>::new());
        assert_eq!(p.get(0).normal, ivec(&[1, 1]));
        assert_eq!(p.get(3).normal, ivec(&[0, 0]));
    }

    #[test]
    fn half_plane_has_two_faces() {
        let c = Cone::new(2, vec![ivec(&[1, 0]), ivec(&[-1, 0]), ivec(&[0, 1])]).unwrap();
        let p = face_lattice(&c);
        assert_eq!(p.len(), 2);
        assert_eq!(p.get(0).generators, vec![0, 1]);
        assert_eq!(p.get(0).dim, 1);
    }
}
