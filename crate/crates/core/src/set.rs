use std::fmt;

use bitvec::vec::BitVec;

use crate::game::Vertex;

/// A set of vertices drawn from a fixed universe `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: BitVec,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            bits: BitVec::repeat(false, universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        Self {
            bits: BitVec::repeat(true, universe),
        }
    }

    /// Builds a set from an iterator of members.
    ///
    /// Panics if a member is outside the universe.
    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut set = Self::empty(universe);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.get(v).map(|b| *b).unwrap_or(false)
    }

    /// Returns `true` when `v` was not already present.
    pub fn insert(&mut self, v: Vertex) -> bool {
        let was = self.bits[v];
        self.bits.set(v, true);
        !was
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let was = self.bits[v];
        self.bits.set(v, false);
        was
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.not_any()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.iter_ones()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe(), other.universe());
        self.bits |= other.bits.as_bitslice();
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe(), other.universe());
        let mut bits = self.bits.clone();
        bits &= !other.bits.clone();
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.universe(), other.universe());
        let mut bits = self.bits.clone();
        bits &= other.bits.as_bitslice();
        VertexSet { bits }
    }

    /// The complement with respect to the universe.
    pub fn complement(&self) -> VertexSet {
        VertexSet {
            bits: !self.bits.clone(),
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a = VertexSet::from_vertices(6, [0, 2, 4]);
        let b = VertexSet::from_vertices(6, [2, 3]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 4]);
        assert_eq!(a.complement().to_vec(), vec![1, 3, 5]);
        let mut c = a.clone();
        c.union_with(&b);
        assert_eq!(c.to_vec(), vec![0, 2, 3, 4]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.contains(17));
        assert_eq!(format!("{:?}", b), "{2, 3}");
    }
}
