//! Finite abstract simplicial complexes and sets of their simplices.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type SimplexId = usize;
pub type Vertex = u32;

/// A set of simplices of one complex, stored as a bitset over simplex ids.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SimplexSet {
    bits: FixedBitSet,
}

impl SimplexSet {
    pub fn empty(n: usize) -> Self {
        SimplexSet { bits: FixedBitSet::with_capacity(n) }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        SimplexSet { bits }
    }

    pub fn from_ids<I: IntoIterator<Item = SimplexId>>(n: usize, ids: I) -> Self {
        let mut s = Self::empty(n);
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Number of simplices in the owning complex.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, id: SimplexId) -> bool {
        self.bits.contains(id)
    }

    pub fn insert(&mut self, id: SimplexId) -> bool {
        !self.bits.put(id)
    }

    pub fn remove(&mut self, id: SimplexId) {
        self.bits.set(id, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = SimplexId> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<SimplexId> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<SimplexId> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &SimplexSet) -> SimplexSet {
        let mut out = self.clone();
        out.bits.union_with(&other.bits);
        out
    }

    pub fn intersection(&self, other: &SimplexSet) -> SimplexSet {
        let mut out = self.clone();
        out.bits.intersect_with(&other.bits);
        out
    }

    pub fn difference(&self, other: &SimplexSet) -> SimplexSet {
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        out
    }

    pub fn union_with(&mut self, other: &SimplexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &SimplexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &SimplexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &SimplexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &SimplexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &SimplexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Some member of `self` that is not in `other`.
    pub fn first_outside(&self, other: &SimplexSet) -> Option<SimplexId> {
        self.bits.difference(&other.bits).next()
    }
}

impl fmt::Debug for SimplexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite abstract simplicial complex.
///
/// Simplex ids are dense and ordered by (dimension, lexicographic vertex
/// tuple), so every face has a smaller id than its cofaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<Vertex>>,
    index: HashMap<Vec<Vertex>, SimplexId>,
    faces: Vec<Vec<SimplexId>>,
    cofaces: Vec<Vec<SimplexId>>,
    closures: Vec<Vec<SimplexId>>,
}

impl SimplicialComplex {
    /// Builds a complex from raw vertex tuples, adding all missing faces.
    pub fn build<T: AsRef<[Vertex]>>(raw: &[T]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut seen = BTreeSet::new();
        for t in raw {
            let mut s = t.as_ref().to_vec();
            s.sort_unstable();
            if s.is_empty() || s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidSimplex(t.as_ref().to_vec()));
            }
            if !seen.insert(s.clone()) {
                return Err(Error::DuplicateSimplex(s));
            }
        }
        Ok(Self::from_sorted_tuples(seen))
    }

    /// The complex with no simplices.
    pub fn empty() -> Self {
        Self::from_sorted_tuples(BTreeSet::new())
    }

    /// Like [`build`](Self::build) but tolerates an empty list and repeated tuples.
    pub fn from_simplices<T: AsRef<[Vertex]>>(raw: &[T]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for t in raw {
            let mut s = t.as_ref().to_vec();
            s.sort_unstable();
            if s.is_empty() || s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidSimplex(t.as_ref().to_vec()));
            }
            seen.insert(s);
        }
        Ok(Self::from_sorted_tuples(seen))
    }

    fn from_sorted_tuples(maximal: BTreeSet<Vec<Vertex>>) -> Self {
        let mut all: BTreeSet<(usize, Vec<Vertex>)> = BTreeSet::new();
        for s in maximal {
            let k = s.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<Vertex> =
                    (0..k).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
                all.insert((face.len(), face));
            }
        }
        let simplices: Vec<Vec<Vertex>> = all.into_iter().map(|(_, s)| s).collect();
        let index: HashMap<Vec<Vertex>, SimplexId> =
            simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let n = simplices.len();
        let mut faces = vec![Vec::new(); n];
        let mut cofaces = vec![Vec::new(); n];
        for (id, s) in simplices.iter().enumerate() {
            if s.len() < 2 {
                continue;
            }
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                let fid = index[&f];
                faces[id].push(fid);
                cofaces[fid].push(id);
            }
            faces[id].sort_unstable();
        }
        for c in cofaces.iter_mut() {
            c.sort_unstable();
        }
        let mut closures: Vec<Vec<SimplexId>> = Vec::with_capacity(n);
        for id in 0..n {
            let mut cl: BTreeSet<SimplexId> = BTreeSet::new();
            cl.insert(id);
            for &f in &faces[id] {
                cl.extend(closures[f].iter().copied());
            }
            closures.push(cl.into_iter().collect());
        }
        SimplicialComplex { simplices, index, faces, cofaces, closures }
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &[Vec<Vertex>] {
        &self.simplices
    }

    pub fn simplex(&self, id: SimplexId) -> &[Vertex] {
        &self.simplices[id]
    }

    pub fn dim(&self, id: SimplexId) -> usize {
        self.simplices[id].len() - 1
    }

    /// Highest simplex dimension, `None` for the empty complex.
    pub fn max_dim(&self) -> Option<usize> {
        self.simplices.last().map(|s| s.len() - 1)
    }

    /// Id of the simplex with the given vertices (in any order).
    pub fn id_of(&self, vertices: &[Vertex]) -> Option<SimplexId> {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        self.index.get(&v).copied()
    }

    /// Codimension-1 faces.
    pub fn faces(&self, id: SimplexId) -> &[SimplexId] {
        &self.faces[id]
    }

    /// Codimension-1 cofaces.
    pub fn cofaces(&self, id: SimplexId) -> &[SimplexId] {
        &self.cofaces[id]
    }

    /// All faces of `id`, including `id` itself, in increasing order.
    pub fn closure_of(&self, id: SimplexId) -> &[SimplexId] {
        &self.closures[id]
    }

    /// Oriented boundary: codimension-1 faces with signs from the
    /// lexicographic vertex order.
    pub fn boundary(&self, id: SimplexId) -> Vec<(SimplexId, i8)> {
        let s = &self.simplices[id];
        if s.len() < 2 {
            return Vec::new();
        }
        (0..s.len())
            .map(|i| {
                let mut f = s.clone();
                f.remove(i);
                (self.index[&f], if i % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.simplices.iter().take_while(|s| s.len() == 1).map(|s| s[0])
    }

    pub fn empty_set(&self) -> SimplexSet {
        SimplexSet::empty(self.len())
    }

    pub fn full_set(&self) -> SimplexSet {
        SimplexSet::full(self.len())
    }

    pub fn set_of<I: IntoIterator<Item = SimplexId>>(&self, ids: I) -> SimplexSet {
        SimplexSet::from_ids(self.len(), ids)
    }

    pub fn closure(&self, a: &SimplexSet) -> SimplexSet {
        let mut out = self.empty_set();
        for id in a.iter() {
            for &f in &self.closures[id] {
                out.insert(f);
            }
        }
        out
    }

    pub fn mouth(&self, a: &SimplexSet) -> SimplexSet {
        self.closure(a).difference(a)
    }

    /// All simplices having a face in `a`.
    pub fn star(&self, a: &SimplexSet) -> SimplexSet {
        let mut out = a.clone();
        let mut queue: VecDeque<SimplexId> = a.iter().collect();
        while let Some(id) = queue.pop_front() {
            for &c in &self.cofaces[id] {
                if out.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        out
    }

    pub fn is_closed(&self, a: &SimplexSet) -> bool {
        self.closed_witness(a).is_none()
    }

    /// A member of `a` with a codimension-1 face outside `a`.
    pub fn closed_witness(&self, a: &SimplexSet) -> Option<SimplexId> {
        a.iter().find(|&id| self.faces[id].iter().any(|&f| !a.contains(f)))
    }

    pub fn is_convex(&self, a: &SimplexSet) -> bool {
        self.convexity_witness(a).is_none()
    }

    /// A simplex outside `a` lying between two members of `a`.
    pub fn convexity_witness(&self, a: &SimplexSet) -> Option<SimplexId> {
        let between = self.closure(a).intersection(&self.star(a));
        between.first_outside(a)
    }

    pub(crate) fn check_closed(&self, a: &SimplexSet, what: &'static str) -> Result<()> {
        match self.closed_witness(a) {
            Some(witness) => Err(Error::NotClosed { what, witness }),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval() -> SimplicialComplex {
        SimplicialComplex::build(&[vec![0, 1]]).unwrap()
    }

    #[test]
    fn explicit_closed_input() {
        let k = SimplicialComplex::build(&[vec![0], vec![1], vec![0, 1]]).unwrap();
        assert_eq!(k.simplices(), &[vec![0], vec![1], vec![0, 1]]);
    }

    #[test]
    fn face_completion() {
        let k = SimplicialComplex::build(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(k.len(), 7);
        assert_eq!(k.id_of(&[2, 1]), Some(5));
        assert_eq!(k.faces(6), &[3, 4, 5]);
        assert_eq!(k.cofaces(0), &[3, 4]);
        let circle = SimplicialComplex::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(circle.len(), 6);
        assert_eq!(circle.max_dim(), Some(1));
    }

    #[test]
    fn build_errors() {
        assert_eq!(SimplicialComplex::build::<Vec<u32>>(&[]), Err(Error::EmptyInput));
        assert_eq!(
            SimplicialComplex::build(&[vec![1, 0], vec![0, 1]]),
            Err(Error::DuplicateSimplex(vec![0, 1]))
        );
        assert!(matches!(
            SimplicialComplex::build(&[vec![1, 1]]),
            Err(Error::InvalidSimplex(_))
        ));
    }

    #[test]
    fn closure_and_mouth() {
        let k = interval();
        let ab = k.set_of([2]);
        assert_eq!(k.closure(&ab).to_vec(), vec![0, 1, 2]);
        assert!(k.closure(&k.empty_set()).is_empty());
        assert_eq!(k.mouth(&k.set_of([0, 2])).to_vec(), vec![1]);
        assert!(k.mouth(&k.set_of([0])).is_empty());

        let t = SimplicialComplex::build(&[vec![0, 1, 2]]).unwrap();
        assert_eq!(t.closure(&t.set_of([6])).len(), 7);
        assert_eq!(t.mouth(&t.set_of([6])).to_vec(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn convexity() {
        let k = interval();
        assert!(k.is_convex(&k.set_of([0, 2])));
        let t = SimplicialComplex::build(&[vec![0, 1, 2]]).unwrap();
        // {a, abc}: ab and ac lie between
        assert_eq!(t.convexity_witness(&t.set_of([0, 6])), Some(3));
        assert!(t.is_convex(&t.full_set()));
        assert!(t.is_convex(&t.set_of([0, 1, 3])));
    }

    #[test]
    fn boundary_signs() {
        let t = SimplicialComplex::build(&[vec![0, 1, 2]]).unwrap();
        // d[012] = [12] - [02] + [01]
        assert_eq!(t.boundary(6), vec![(5, 1), (4, -1), (3, 1)]);
    }
}
