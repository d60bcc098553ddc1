//! Combinatorial multivector fields.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::complex::{SimplexId, SimplexSet, SimplicialComplex};
use crate::error::{Error, PartitionProblem, Result};
use crate::linalg::{relative_homology, Prime};

/// A partition of a simplicial complex into convex multivectors.
///
/// Vector ids are assigned in order of the smallest simplex id each vector
/// contains.
#[derive(Debug)]
pub struct MultivectorField {
    complex: Arc<SimplicialComplex>,
    vector_of: Vec<usize>,
    vectors: Vec<SimplexSet>,
    members: Vec<Vec<SimplexId>>,
    prime: Prime,
    critical: Mutex<HashMap<(Prime, usize), bool>>,
}

impl Clone for MultivectorField {
    fn clone(&self) -> Self {
        MultivectorField {
            complex: Arc::clone(&self.complex),
            vector_of: self.vector_of.clone(),
            vectors: self.vectors.clone(),
            members: self.members.clone(),
            prime: self.prime,
            critical: Mutex::new(self.critical.lock().unwrap().clone()),
        }
    }
}

impl PartialEq for MultivectorField {
    fn eq(&self, other: &Self) -> bool {
        same_complex(&self.complex, &other.complex) && self.vector_of == other.vector_of
    }
}

pub(crate) fn same_complex(a: &Arc<SimplicialComplex>, b: &Arc<SimplicialComplex>) -> bool {
    Arc::ptr_eq(a, b) || a.simplices() == b.simplices()
}

impl MultivectorField {
    /// Validates `partition` and builds the field. Criticality is evaluated
    /// over F_2 unless changed with [`with_prime`](Self::with_prime).
    pub fn build(complex: Arc<SimplicialComplex>, partition: &[Vec<SimplexId>]) -> Result<Self> {
        let n = complex.len();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for (v, part) in partition.iter().enumerate() {
            for &s in part {
                if s >= n {
                    return Err(Error::NotPartition { simplex: s, problem: PartitionProblem::OutOfRange });
                }
                if owner[s].is_some() {
                    return Err(Error::NotPartition { simplex: s, problem: PartitionProblem::Repeated });
                }
                owner[s] = Some(v);
            }
        }
        if let Some(s) = owner.iter().position(Option::is_none) {
            return Err(Error::NotPartition { simplex: s, problem: PartitionProblem::Uncovered });
        }
        let mut order: Vec<(SimplexId, usize)> = partition
            .iter()
            .enumerate()
            .filter(|(_, part)| !part.is_empty())
            .map(|(v, part)| (*part.iter().min().unwrap(), v))
            .collect();
        order.sort_unstable();
        let mut vectors = Vec::with_capacity(order.len());
        let mut members = Vec::with_capacity(order.len());
        let mut vector_of = vec![0; n];
        for (new_id, &(_, v)) in order.iter().enumerate() {
            let set = complex.set_of(partition[v].iter().copied());
            if let Some(witness) = complex.convexity_witness(&set) {
                return Err(Error::NotConvex { vector: v, witness });
            }
            for s in set.iter() {
                vector_of[s] = new_id;
            }
            members.push(set.to_vec());
            vectors.push(set);
        }
        Ok(MultivectorField {
            complex,
            vector_of,
            vectors,
            members,
            prime: Prime::TWO,
            critical: Mutex::new(HashMap::new()),
        })
    }

    /// The field whose vectors are all singletons.
    pub fn singletons(complex: Arc<SimplicialComplex>) -> Self {
        let parts: Vec<Vec<SimplexId>> = (0..complex.len()).map(|s| vec![s]).collect();
        Self::build(complex, &parts).expect("singletons form a convex partition")
    }

    pub fn with_prime(mut self, prime: Prime) -> Self {
        self.prime = prime;
        self
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector_of(&self, s: SimplexId) -> usize {
        self.vector_of[s]
    }

    pub fn vector(&self, v: usize) -> &SimplexSet {
        &self.vectors[v]
    }

    pub fn members(&self, v: usize) -> &[SimplexId] {
        &self.members[v]
    }

    pub fn vectors(&self) -> &[SimplexSet] {
        &self.vectors
    }

    /// The partition as lists of simplex ids, in vector-id order.
    pub fn partition(&self) -> &[Vec<SimplexId>] {
        &self.members
    }

    /// F_V(σ) = [σ] ∪ cl(σ).
    pub fn fv(&self, s: SimplexId) -> SimplexSet {
        let mut out = self.vectors[self.vector_of[s]].clone();
        for &f in self.complex.closure_of(s) {
            out.insert(f);
        }
        out
    }

    /// Elements of F_V(σ), possibly with repetitions.
    pub(crate) fn fv_iter(&self, s: SimplexId) -> impl Iterator<Item = SimplexId> + '_ {
        self.members[self.vector_of[s]]
            .iter()
            .copied()
            .chain(self.complex.closure_of(s).iter().copied())
    }

    /// F_V applied to every member of `a`.
    pub fn fv_set(&self, a: &SimplexSet) -> SimplexSet {
        let mut out = self.complex.empty_set();
        for s in a.iter() {
            for t in self.fv_iter(s) {
                out.insert(t);
            }
        }
        out
    }

    /// Whether vector `v` is critical over the field's own characteristic.
    pub fn is_critical(&self, v: usize) -> bool {
        self.is_critical_with(v, self.prime)
    }

    /// Whether H(cl V, mo V; F_p) is nontrivial.
    pub fn is_critical_with(&self, v: usize, prime: Prime) -> bool {
        if let Some(&c) = self.critical.lock().unwrap().get(&(prime, v)) {
            return c;
        }
        let set = &self.vectors[v];
        let cl = self.complex.closure(set);
        let mo = cl.difference(set);
        let h = relative_homology(&self.complex, &cl, &mo, prime)
            .expect("closure and mouth of a multivector are closed and nested");
        let c = !h.is_trivial();
        *self.critical.lock().unwrap().entry((prime, v)).or_insert(c)
    }

    pub fn is_critical_simplex(&self, s: SimplexId) -> bool {
        self.is_critical(self.vector_of[s])
    }

    /// ⟨A⟩: the union of the selected vectors.
    pub fn union_of(&self, selection: &[usize]) -> SimplexSet {
        let mut out = self.complex.empty_set();
        for &v in selection {
            out.union_with(&self.vectors[v]);
        }
        out
    }

    /// Whether `a` is a union of whole vectors.
    pub fn is_compatible(&self, a: &SimplexSet) -> bool {
        self.compatibility_witness(a).is_none()
    }

    /// A pair (σ ∈ a, τ ∉ a) with σ and τ in the same vector.
    pub fn compatibility_witness(&self, a: &SimplexSet) -> Option<(SimplexId, SimplexId)> {
        for s in a.iter() {
            for &t in &self.members[self.vector_of[s]] {
                if !a.contains(t) {
                    return Some((s, t));
                }
            }
        }
        None
    }
}

/// Whether every vector of `f1` lies inside a single vector of `f2`.
pub fn is_refinement(f1: &MultivectorField, f2: &MultivectorField) -> Result<bool> {
    if !same_complex(&f1.complex, &f2.complex) {
        return Err(Error::DifferentComplex);
    }
    Ok(f1.members.iter().all(|m| {
        let target = f2.vector_of[m[0]];
        m.iter().all(|&s| f2.vector_of[s] == target)
    }))
}

/// The field of nonempty pairwise intersections V1 ∩ V2.
pub fn intersect_fields(f1: &MultivectorField, f2: &MultivectorField) -> Result<MultivectorField> {
    if !same_complex(&f1.complex, &f2.complex) {
        return Err(Error::DifferentComplex);
    }
    let mut groups: HashMap<(usize, usize), Vec<SimplexId>> = HashMap::new();
    for s in 0..f1.complex.len() {
        groups.entry((f1.vector_of[s], f2.vector_of[s])).or_default().push(s);
    }
    let parts: Vec<Vec<SimplexId>> = groups.into_values().collect();
    let field = MultivectorField::build(Arc::clone(&f1.complex), &parts)?.with_prime(f1.prime);
    debug_assert!(is_refinement(&field, f1)? && is_refinement(&field, f2)?);
    Ok(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval() -> MultivectorField {
        let k = Arc::new(SimplicialComplex::build(&[vec![0, 1]]).unwrap());
        MultivectorField::build(k, &[vec![0, 2], vec![1]]).unwrap()
    }

    fn circle(parts: &[Vec<SimplexId>]) -> MultivectorField {
        // ids: a=0 b=1 c=2 ab=3 ac=4 bc=5
        let k = Arc::new(SimplicialComplex::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap());
        MultivectorField::build(k, parts).unwrap()
    }

    #[test]
    fn build_and_errors() {
        let f = interval();
        assert_eq!(f.len(), 2);
        assert_eq!(f.members(0), &[0, 2]);
        let k = Arc::clone(f.complex());
        assert_eq!(
            MultivectorField::build(Arc::clone(&k), &[vec![0], vec![1]]).unwrap_err(),
            Error::NotPartition { simplex: 2, problem: PartitionProblem::Uncovered }
        );
        assert!(matches!(
            MultivectorField::build(Arc::clone(&k), &[vec![0, 1, 2], vec![1]]),
            Err(Error::NotPartition { simplex: 1, problem: PartitionProblem::Repeated })
        ));
        let t = Arc::new(SimplicialComplex::build(&[vec![0, 1, 2]]).unwrap());
        assert!(matches!(
            MultivectorField::build(t, &[vec![0, 6], vec![1], vec![2], vec![3], vec![4], vec![5]]),
            Err(Error::NotConvex { vector: 0, witness: 3 })
        ));
    }

    #[test]
    fn dynamics_generator() {
        let f = interval();
        assert_eq!(f.fv(2).to_vec(), vec![0, 1, 2]);
        assert_eq!(f.fv(1).to_vec(), vec![1]);
        assert_eq!(f.fv(0).to_vec(), vec![0, 2]);
    }

    #[test]
    fn criticality() {
        let f = interval();
        assert!(f.is_critical(f.vector_of(1)));
        assert!(!f.is_critical(f.vector_of(0)));
        let t = Arc::new(SimplicialComplex::build(&[vec![0, 1, 2]]).unwrap());
        let ft = MultivectorField::build(t, &[vec![6], vec![0, 3], vec![1, 5], vec![2, 4]]).unwrap();
        assert!(ft.is_critical_simplex(6));
        assert!(!ft.is_critical_simplex(0));
        assert!(ft.is_critical_with(ft.vector_of(6), Prime::new(3).unwrap()));
    }

    #[test]
    fn refinement() {
        let f = interval();
        let s = MultivectorField::singletons(Arc::clone(f.complex()));
        assert!(is_refinement(&f, &f).unwrap());
        assert!(is_refinement(&s, &f).unwrap());
        assert!(!is_refinement(&f, &s).unwrap());
        let other = Arc::new(SimplicialComplex::build(&[vec![0, 2]]).unwrap());
        assert_eq!(
            is_refinement(&f, &MultivectorField::singletons(other)),
            Err(Error::DifferentComplex)
        );
    }

    #[test]
    fn intersections() {
        let cyc = circle(&[vec![0, 3], vec![1, 5], vec![2, 4]]);
        let other = circle(&[vec![0], vec![3], vec![1, 5], vec![2, 4]]);
        let both = intersect_fields(&cyc, &other).unwrap();
        assert_eq!(both, other);
        assert_eq!(intersect_fields(&cyc, &cyc).unwrap(), cyc);
        let s = MultivectorField::singletons(Arc::clone(cyc.complex()));
        assert_eq!(intersect_fields(&s, &cyc).unwrap(), s);
    }
}
