//! Relative simplicial homology by column reduction of the quotient
//! boundary matrix, with representative cycles for induced maps.

use std::collections::HashMap;

use super::{FieldMatrix, Prime};
use crate::complex::{SimplexId, SimplexSet, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Sparse chain: `(simplex id, nonzero coefficient)` with strictly increasing ids.
pub type Chain = Vec<(SimplexId, u32)>;

/// `x + a * y` over F_p.
fn axpy(p: Prime, x: &Chain, a: u32, y: &Chain) -> Chain {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            let c = p.mul(a, y[j].1);
            if c != 0 {
                out.push((y[j].0, c));
            }
            j += 1;
        } else {
            let c = p.add(x[i].1, p.mul(a, y[j].1));
            if c != 0 {
                out.push((x[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

struct Reduced {
    column: Chain,
    combination: Chain,
}

/// Homology of the quotient complex C(P)/C(E) with a fixed basis of
/// representative relative cycles in every dimension.
#[derive(Clone, Debug)]
pub struct HomologySummary {
    prime: Prime,
    p_set: SimplexSet,
    e_set: SimplexSet,
    /// lowest entry of a reduced nonzero column -> that column
    pivots: HashMap<SimplexId, Chain>,
    /// essential simplex -> representative cycle
    representatives: HashMap<SimplexId, Chain>,
    basis: Vec<Vec<SimplexId>>,
    position: HashMap<SimplexId, usize>,
}

/// Homology of the pair (P, E) over F_p.
pub fn relative_homology(
    k: &SimplicialComplex,
    p_set: &SimplexSet,
    e_set: &SimplexSet,
    prime: Prime,
) -> Result<HomologySummary> {
    k.check_closed(p_set, "P")?;
    k.check_closed(e_set, "E")?;
    if let Some(witness) = e_set.first_outside(p_set) {
        return Err(Error::NotNested { witness });
    }
    let top = k.max_dim().map_or(0, |d| d + 1);
    let mut reduced: HashMap<SimplexId, Reduced> = HashMap::new();
    let mut cycles: Vec<(SimplexId, Chain)> = Vec::new();
    for j in p_set.difference(e_set).iter() {
        let mut column: Chain = k
            .boundary(j)
            .into_iter()
            .filter(|(f, _)| !e_set.contains(*f))
            .map(|(f, s)| (f, if s > 0 { 1 } else { prime.neg(1) }))
            .collect();
        column.sort_unstable_by_key(|e| e.0);
        let mut combination: Chain = vec![(j, 1)];
        while let Some(&(low, c)) = column.last() {
            let Some(r) = reduced.get(&low) else { break };
            let lead = r.column.last().expect("reduced columns are nonzero").1;
            let factor = prime.neg(prime.mul(c, prime.inv(lead)));
            column = axpy(prime, &column, factor, &r.column);
            combination = axpy(prime, &combination, factor, &r.combination);
        }
        match column.last() {
            Some(&(low, _)) => {
                reduced.insert(low, Reduced { column, combination });
            }
            None => cycles.push((j, combination)),
        }
    }
    let mut basis = vec![Vec::new(); top];
    let mut representatives = HashMap::new();
    for (j, rep) in cycles {
        if !reduced.contains_key(&j) {
            basis[k.dim(j)].push(j);
            representatives.insert(j, rep);
        }
    }
    let position = basis
        .iter()
        .flat_map(|b| b.iter().enumerate().map(|(i, &s)| (s, i)))
        .collect();
    let pivots = reduced.into_iter().map(|(low, r)| (low, r.column)).collect();
    Ok(HomologySummary {
        prime,
        p_set: p_set.clone(),
        e_set: e_set.clone(),
        pivots,
        representatives,
        basis,
        position,
    })
}

impl HomologySummary {
    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn p_set(&self) -> &SimplexSet {
        &self.p_set
    }

    pub fn e_set(&self) -> &SimplexSet {
        &self.e_set
    }

    /// Number of tracked dimensions (dimension of the complex plus one).
    pub fn dims(&self) -> usize {
        self.basis.len()
    }

    pub fn betti(&self, k: usize) -> usize {
        self.basis.get(k).map_or(0, Vec::len)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.iter().all(Vec::is_empty)
    }

    /// The simplices labelling the basis classes of dimension `k`.
    pub fn basis(&self, k: usize) -> &[SimplexId] {
        self.basis.get(k).map_or(&[], Vec::as_slice)
    }

    /// Representative relative cycle of the `i`-th basis class in dimension `k`.
    pub fn representative(&self, k: usize, i: usize) -> &Chain {
        &self.representatives[&self.basis[k][i]]
    }

    /// Coordinates of the class of a relative cycle of dimension `k`.
    pub fn coordinates(&self, k: usize, chain: &Chain) -> Result<Vec<u32>> {
        let p = self.prime;
        let mut coords = vec![0; self.betti(k)];
        let mut z: Chain = chain.iter().copied().filter(|(s, _)| !self.e_set.contains(*s)).collect();
        while let Some(&(low, c)) = z.last() {
            if let Some(col) = self.pivots.get(&low) {
                let lead = col.last().expect("nonzero column").1;
                z = axpy(p, &z, p.neg(p.mul(c, p.inv(lead))), col);
            } else if let Some(rep) = self.representatives.get(&low) {
                coords[self.position[&low]] = c;
                z = axpy(p, &z, p.neg(c), rep);
            } else {
                return Err(Error::Invalid(format!(
                    "chain is not a relative cycle of (P, E) (stuck at simplex {low})"
                )));
            }
        }
        Ok(coords)
    }
}

/// Matrix of H_k(P', E') -> H_k(P, E) induced by inclusion, in the stored bases.
pub fn induced_inclusion_map(
    source: &HomologySummary,
    target: &HomologySummary,
    k: usize,
) -> Result<FieldMatrix> {
    if let Some(witness) = source.p_set.first_outside(&target.p_set) {
        return Err(Error::NotSubpair { witness });
    }
    if let Some(witness) = source.e_set.first_outside(&target.e_set) {
        return Err(Error::NotSubpair { witness });
    }
    assert_eq!(source.prime, target.prime, "characteristic mismatch");
    let cols: Vec<Vec<u32>> = (0..source.betti(k))
        .map(|i| target.coordinates(k, source.representative(k, i)))
        .collect::<Result<_>>()?;
    Ok(FieldMatrix::from_columns(target.betti(k), &cols, source.prime))
}

fn permutation_is_odd(v: &[Vertex]) -> bool {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Image of a simplex under a vertex map: `None` when it collapses, otherwise
/// the target simplex id and whether the orientation flips.
fn map_simplex(
    src: &SimplicialComplex,
    tgt: &SimplicialComplex,
    vertex_map: &HashMap<Vertex, Vertex>,
    id: SimplexId,
) -> Result<Option<(SimplexId, bool)>> {
    let s = src.simplex(id);
    let mut image = Vec::with_capacity(s.len());
    for v in s {
        match vertex_map.get(v) {
            Some(&w) => image.push(w),
            None => {
                return Err(Error::NotSimplicial { simplex: s.to_vec(), image: Vec::new() })
            }
        }
    }
    let odd = permutation_is_odd(&image);
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let Some(tid) = tgt.id_of(&sorted) else {
        return Err(Error::NotSimplicial { simplex: s.to_vec(), image: sorted });
    };
    if sorted.len() < s.len() {
        return Ok(None);
    }
    Ok(Some((tid, odd)))
}

/// Matrix of H_k(K) -> H_k(L) induced by a vertex map, given absolute
/// homology summaries of both complexes.
pub fn simplicial_map_matrix(
    src: &SimplicialComplex,
    src_h: &HomologySummary,
    tgt: &SimplicialComplex,
    tgt_h: &HomologySummary,
    vertex_map: &HashMap<Vertex, Vertex>,
    k: usize,
) -> Result<FieldMatrix> {
    let p = src_h.prime;
    for id in 0..src.len() {
        map_simplex(src, tgt, vertex_map, id)?;
    }
    let mut cols = Vec::with_capacity(src_h.betti(k));
    for i in 0..src_h.betti(k) {
        let mut image: Chain = Vec::new();
        for &(s, c) in src_h.representative(k, i) {
            if let Some((t, odd)) = map_simplex(src, tgt, vertex_map, s)? {
                let c = if odd { p.neg(c) } else { c };
                image = axpy(p, &image, c, &vec![(t, 1)]);
            }
        }
        cols.push(tgt_h.coordinates(k, &image)?);
    }
    Ok(FieldMatrix::from_columns(tgt_h.betti(k), &cols, p))
}

/// Matrix of H_k(K) -> H_k(L) induced by a vertex map K -> L.
pub fn induced_simplicial_map(
    src: &SimplicialComplex,
    tgt: &SimplicialComplex,
    vertex_map: &HashMap<Vertex, Vertex>,
    k: usize,
    prime: Prime,
) -> Result<FieldMatrix> {
    let src_h = relative_homology(src, &src.full_set(), &src.empty_set(), prime)?;
    let tgt_h = relative_homology(tgt, &tgt.full_set(), &tgt.empty_set(), prime)?;
    simplicial_map_matrix(src, &src_h, tgt, &tgt_h, vertex_map, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(raw: &[Vec<u32>]) -> SimplicialComplex {
        SimplicialComplex::build(raw).unwrap()
    }

    /// betti_k = dim C_k - rank d_k - rank d_{k+1}, with dense matrices.
    fn dense_betti(k: &SimplicialComplex, p_set: &SimplexSet, e_set: &SimplexSet, prime: Prime) -> Vec<usize> {
        let cells: Vec<SimplexId> = p_set.difference(e_set).to_vec();
        let top = k.max_dim().map_or(0, |d| d + 1);
        let by_dim = |d: usize| cells.iter().copied().filter(|&c| k.dim(c) == d).collect::<Vec<_>>();
        let bd = |d: usize| -> usize {
            if d == 0 {
                return 0;
            }
            let rows = by_dim(d - 1);
            let cols = by_dim(d);
            let mut m = FieldMatrix::zeros(rows.len(), cols.len(), prime);
            for (j, &c) in cols.iter().enumerate() {
                for (f, s) in k.boundary(c) {
                    if let Some(i) = rows.iter().position(|&r| r == f) {
                        m.set(i, j, prime.reduce(s as i64));
                    }
                }
            }
            m.rank()
        };
        (0..top).map(|d| by_dim(d).len() - bd(d) - bd(d + 1)).collect()
    }

    #[test]
    fn interval_relative_to_endpoint_is_trivial() {
        let k = cx(&[vec![0, 1]]);
        let h = relative_homology(&k, &k.full_set(), &k.set_of([1]), Prime::TWO).unwrap();
        assert_eq!(h.betti_numbers(), vec![0, 0]);
    }

    #[test]
    fn triangle_relative_to_boundary() {
        let k = cx(&[vec![0, 1, 2]]);
        let h = relative_homology(&k, &k.full_set(), &k.set_of(0..6), Prime::TWO).unwrap();
        assert_eq!(h.betti_numbers(), vec![0, 0, 1]);
    }

    #[test]
    fn hollow_circle() {
        let k = cx(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
        for p in [2, 3, 5] {
            let h = relative_homology(&k, &k.full_set(), &k.empty_set(), Prime::new(p).unwrap()).unwrap();
            assert_eq!(h.betti_numbers(), vec![1, 1]);
        }
    }

    #[test]
    fn errors() {
        let k = cx(&[vec![0, 1]]);
        assert!(matches!(
            relative_homology(&k, &k.set_of([2]), &k.empty_set(), Prime::TWO),
            Err(Error::NotClosed { .. })
        ));
        assert!(matches!(
            relative_homology(&k, &k.set_of([0]), &k.set_of([1]), Prime::TWO),
            Err(Error::NotNested { witness: 1 })
        ));
    }

    #[test]
    fn agrees_with_dense_ranks() {
        let k = cx(&[vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4], vec![0, 4], vec![3, 5]]);
        let subsets: Vec<(Vec<SimplexId>, Vec<SimplexId>)> = vec![
            ((0..k.len()).collect(), vec![]),
            ((0..k.len()).collect(), vec![0, 1]),
            ((0..k.len()).collect(), vec![0, 1, 2, k.id_of(&[0, 1]).unwrap()]),
        ];
        for (pp, ee) in subsets {
            let p_set = k.closure(&k.set_of(pp));
            let e_set = k.closure(&k.set_of(ee));
            for prime in [2, 3, 7] {
                let prime = Prime::new(prime).unwrap();
                let h = relative_homology(&k, &p_set, &e_set, prime).unwrap();
                assert_eq!(h.betti_numbers(), dense_betti(&k, &p_set, &e_set, prime));
            }
        }
    }

    #[test]
    fn inclusion_maps() {
        let k = cx(&[vec![0, 1]]);
        let p = Prime::TWO;
        let big = relative_homology(&k, &k.full_set(), &k.empty_set(), p).unwrap();
        let id = induced_inclusion_map(&big, &big, 0).unwrap();
        assert!(id.is_identity());
        let empty = relative_homology(&k, &k.empty_set(), &k.empty_set(), p).unwrap();
        let z = induced_inclusion_map(&empty, &big, 0).unwrap();
        assert_eq!((z.rows(), z.cols()), (1, 0));
        let b = relative_homology(&k, &k.set_of([1]), &k.empty_set(), p).unwrap();
        let m = induced_inclusion_map(&b, &big, 0).unwrap();
        assert_eq!(m, FieldMatrix::identity(1, p));
        assert!(matches!(induced_inclusion_map(&big, &b, 0), Err(Error::NotSubpair { .. })));
    }

    #[test]
    fn collapse_and_rotation() {
        let p = Prime::TWO;
        let edge = cx(&[vec![0, 1]]);
        let point = cx(&[vec![7]]);
        let vm: HashMap<Vertex, Vertex> = [(0, 7), (1, 7)].into_iter().collect();
        assert_eq!(induced_simplicial_map(&edge, &point, &vm, 0, p).unwrap(), FieldMatrix::identity(1, p));
        let h1 = induced_simplicial_map(&edge, &point, &vm, 1, p).unwrap();
        assert_eq!((h1.rows(), h1.cols()), (0, 0));

        let circle = cx(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let rot: HashMap<Vertex, Vertex> = [(0, 1), (1, 2), (2, 0)].into_iter().collect();
        for q in [2, 3, 5] {
            let q = Prime::new(q).unwrap();
            let m = induced_simplicial_map(&circle, &circle, &rot, 1, q).unwrap();
            assert!(m.is_identity(), "{m:?}");
        }
        let flip: HashMap<Vertex, Vertex> = [(0, 1), (1, 0), (2, 2)].into_iter().collect();
        let q = Prime::new(3).unwrap();
        let m = induced_simplicial_map(&circle, &circle, &flip, 1, q).unwrap();
        assert_eq!(m.get(0, 0), 2, "reflection has degree -1");
    }

    #[test]
    fn non_simplicial_map() {
        let circle = cx(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let path = cx(&[vec![0, 1], vec![1, 2]]);
        let id: HashMap<Vertex, Vertex> = [(0, 0), (1, 1), (2, 2)].into_iter().collect();
        assert!(matches!(
            induced_simplicial_map(&circle, &path, &id, 0, Prime::TWO),
            Err(Error::NotSimplicial { .. })
        ));
    }
}
