//! Finite posets given by their order relation.

use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset<T> {
    elements: Vec<T>,
    le: Vec<Vec<bool>>,
}

impl<T> Poset<T> {
    /// `le(a, b)` must be a partial order on `elements`.
    pub fn new(elements: Vec<T>, le: impl Fn(&T, &T) -> bool) -> Self {
        let le = elements
            .iter()
            .map(|a| elements.iter().map(|b| le(a, b)).collect())
            .collect();
        Poset { elements, le }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le[i][j]
    }

    /// Pairs `(i, j)` with `j` covering `i`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !(0..self.len()).any(|k| self.lt(k, i)))
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !(0..self.len()).any(|k| self.lt(i, k)))
            .collect()
    }

    pub fn position(&self, pred: impl Fn(&T) -> bool) -> Option<usize> {
        self.elements.iter().position(pred)
    }

    /// Same order on relabelled elements.
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Poset<U> {
        Poset {
            elements: self.elements.iter().map(f).collect(),
            le: self.le.clone(),
        }
    }

    /// Opposite order.
    pub fn opposite(&self) -> Poset<T>
    where
        T: Clone,
    {
        let n = self.len();
        Poset {
            elements: self.elements.clone(),
            le: (0..n).map(|i| (0..n).map(|j| self.le[j][i]).collect()).collect(),
        }
    }

    /// Whether the relation is reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| self.le[i][i])
            && (0..n).all(|i| (0..n).all(|j| i == j || !(self.le[i][j] && self.le[j][i])))
            && (0..n).all(|i| {
                (0..n).all(|j| !self.le[i][j] || (0..n).all(|k| !self.le[j][k] || self.le[i][k]))
            })
    }
}
