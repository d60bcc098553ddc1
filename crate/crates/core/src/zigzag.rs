//! Zigzag modules over F_p and their interval decompositions.

use std::collections::HashMap;

use crate::complex::{SimplexSet, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::linalg::{induced_inclusion_map, relative_homology, simplicial_map_matrix, FieldMatrix, HomologySummary, Prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrow {
    /// V_i → V_{i+1}
    Forward,
    /// V_i ← V_{i+1}
    Backward,
}

/// A finite zigzag of vector spaces. Positions are 0-based internally and
/// 1-based in [`Bar`].
#[derive(Debug, Clone, PartialEq)]
pub struct ZigzagModule {
    prime: Prime,
    degree: usize,
    dims: Vec<usize>,
    arrows: Vec<(Arrow, FieldMatrix)>,
}

impl ZigzagModule {
    /// `arrows[i]` connects positions i and i+1; a forward matrix has shape
    /// dims[i+1] × dims[i], a backward one dims[i] × dims[i+1].
    pub fn new(prime: Prime, degree: usize, dims: Vec<usize>, arrows: Vec<(Arrow, FieldMatrix)>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::EmptyInput);
        }
        if arrows.len() + 1 != dims.len() {
            return Err(Error::Invalid(format!("{} spaces need {} arrows, got {}", dims.len(), dims.len() - 1, arrows.len())));
        }
        for (i, (dir, m)) in arrows.iter().enumerate() {
            let (src, tgt) = match dir {
                Arrow::Forward => (dims[i], dims[i + 1]),
                Arrow::Backward => (dims[i + 1], dims[i]),
            };
            if m.rows() != tgt || m.cols() != src {
                return Err(Error::Invalid(format!(
                    "arrow {i} has shape {}x{}, expected {tgt}x{src}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.prime() != prime {
                return Err(Error::Invalid(format!("arrow {i} has the wrong characteristic")));
            }
        }
        Ok(ZigzagModule { prime, degree, dims, arrows })
    }

    /// The outward zigzag V_1 ← W_1 → V_2 ← W_2 → ⋯ → V_n, where
    /// `left[j]`: W_j → V_j and `right[j]`: W_j → V_{j+1}.
    pub fn alternating(
        prime: Prime,
        degree: usize,
        dims: Vec<usize>,
        left: Vec<FieldMatrix>,
        right: Vec<FieldMatrix>,
    ) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::Invalid("left and right map counts differ".into()));
        }
        let mut arrows = Vec::with_capacity(2 * left.len());
        for (l, r) in left.into_iter().zip(right) {
            arrows.push((Arrow::Backward, l));
            arrows.push((Arrow::Forward, r));
        }
        Self::new(prime, degree, dims, arrows)
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    /// Homology degree the module was built from.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arrows(&self) -> &[(Arrow, FieldMatrix)] {
        &self.arrows
    }

    /// The same module read right to left.
    pub fn reversed(&self) -> ZigzagModule {
        let arrows = self
            .arrows
            .iter()
            .rev()
            .map(|(d, m)| {
                let flipped = match d {
                    Arrow::Forward => Arrow::Backward,
                    Arrow::Backward => Arrow::Forward,
                };
                (flipped, m.clone())
            })
            .collect();
        ZigzagModule { prime: self.prime, degree: self.degree, dims: self.dims.iter().rev().copied().collect(), arrows }
    }

    /// Offset of each position's block inside ⊕_{i=a..=b} V_i.
    fn offsets(&self, a: usize, b: usize) -> (Vec<usize>, usize) {
        let mut off = Vec::with_capacity(b - a + 1);
        let mut total = 0;
        for i in a..=b {
            off.push(total);
            total += self.dims[i];
        }
        (off, total)
    }

    /// Rank of the map from the limit to the colimit of the restriction to
    /// positions a..=b: the number of bars containing [a, b].
    pub fn generalized_rank(&self, a: usize, b: usize) -> usize {
        let p = self.prime;
        let (off, total) = self.offsets(a, b);
        if self.dims[a] == 0 {
            return 0;
        }
        // limit: kernel of the compatibility constraints
        let rows: usize = (a..b)
            .map(|i| match self.arrows[i].0 {
                Arrow::Forward => self.dims[i + 1],
                Arrow::Backward => self.dims[i],
            })
            .sum();
        let mut cons = FieldMatrix::zeros(rows, total, p);
        let mut relations: Vec<Vec<u32>> = Vec::new();
        let mut r0 = 0;
        for i in a..b {
            let (dir, m) = &self.arrows[i];
            let (src, tgt) = match dir {
                Arrow::Forward => (i, i + 1),
                Arrow::Backward => (i + 1, i),
            };
            let (so, to) = (off[src - a], off[tgt - a]);
            for r in 0..self.dims[tgt] {
                for c in 0..self.dims[src] {
                    cons.set(r0 + r, so + c, m.get(r, c));
                }
                cons.set(r0 + r, to + r, p.neg(1));
            }
            r0 += self.dims[tgt];
            for c in 0..self.dims[src] {
                let mut col = vec![0u32; total];
                col[so + c] = 1;
                for r in 0..self.dims[tgt] {
                    col[to + r] = p.sub(col[to + r], m.get(r, c));
                }
                relations.push(col);
            }
        }
        let lim = cons.kernel();
        let mut cols = relations.clone();
        for j in 0..lim.cols() {
            let mut col = vec![0u32; total];
            for r in 0..self.dims[a] {
                col[r] = lim.get(r, j);
            }
            cols.push(col);
        }
        let rel_rank = FieldMatrix::from_columns(total, &relations, p).rank();
        FieldMatrix::from_columns(total, &cols, p).rank() - rel_rank
    }

    /// Rank of the composite along positions a..=b, defined when every
    /// arrow in between points the same way.
    pub fn composite_rank(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return Some(self.dims[a]);
        }
        let dir = self.arrows[a].0;
        if self.arrows[a..b].iter().any(|(d, _)| *d != dir) {
            return None;
        }
        let mut acc = FieldMatrix::identity(
            match dir {
                Arrow::Forward => self.dims[a],
                Arrow::Backward => self.dims[b],
            },
            self.prime,
        );
        match dir {
            Arrow::Forward => {
                for (_, m) in &self.arrows[a..b] {
                    acc = m.mul(&acc);
                }
            }
            Arrow::Backward => {
                for (_, m) in self.arrows[a..b].iter().rev() {
                    acc = m.mul(&acc);
                }
            }
        }
        Some(acc.rank())
    }
}

/// An interval summand; positions are 1-based and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bar {
    pub dim: usize,
    pub birth: usize,
    pub death: usize,
}

impl Bar {
    pub fn new(dim: usize, birth: usize, death: usize) -> Self {
        debug_assert!(1 <= birth && birth <= death);
        Bar { dim, birth, death }
    }

    pub fn covers(&self, pos: usize) -> bool {
        self.birth <= pos && pos <= self.death
    }

    /// Field index at the left end; an even birth position sits between
    /// fields and opens the interval on that side.
    pub fn birth_field(&self) -> usize {
        if self.birth % 2 == 1 {
            self.birth.div_ceil(2)
        } else {
            self.birth / 2
        }
    }

    pub fn death_field(&self) -> usize {
        if self.death % 2 == 1 {
            self.death.div_ceil(2)
        } else {
            self.death / 2 + 1
        }
    }

    pub fn birth_open(&self) -> bool {
        self.birth % 2 == 0
    }

    pub fn death_open(&self) -> bool {
        self.death % 2 == 0
    }

    /// Moves the bar by `2 * fields` positions.
    pub fn shifted(&self, fields: usize) -> Bar {
        Bar { dim: self.dim, birth: self.birth + 2 * fields, death: self.death + 2 * fields }
    }
}

/// Interval decomposition by Möbius inversion of the generalized rank.
pub fn interval_decompose(m: &ZigzagModule) -> Vec<Bar> {
    let n = m.len();
    let mut r = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in a..n {
            // ranks vanish once a single position in the range is zero
            if b > a && r[a][b - 1] == 0 {
                break;
            }
            r[a][b] = m.generalized_rank(a, b);
        }
    }
    let get = |a: isize, b: usize| -> isize {
        if a < 0 || b >= n {
            0
        } else {
            r[a as usize][b] as isize
        }
    };
    let mut bars = Vec::new();
    for a in 0..n {
        for b in a..n {
            let ai = a as isize;
            let mult = get(ai, b) - get(ai - 1, b) - get(ai, b + 1) + get(ai - 1, b + 1);
            debug_assert!(mult >= 0, "negative interval multiplicity");
            for _ in 0..mult.max(0) {
                bars.push(Bar::new(m.degree(), a + 1, b + 1));
            }
        }
    }
    bars.sort();
    bars
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditFailure {
    /// Bars covering a position disagree with its dimension.
    Dimension { pos: usize, expected: usize, covering: usize },
    /// Bars spanning an arrow disagree with its rank.
    ArrowRank { from: usize, to: usize, rank: usize, covering: usize },
    /// Bars spanning a same-direction run disagree with the composite rank.
    Composite { from: usize, to: usize, rank: usize, covering: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AuditReport {
    pub failures: Vec<AuditFailure>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks a claimed decomposition against dimensions, arrow ranks and the
/// ranks of maximal same-direction composites. Positions in failures are
/// 1-based.
pub fn audit_barcode(m: &ZigzagModule, bars: &[Bar]) -> AuditReport {
    let n = m.len();
    let covering = |a: usize, b: usize| bars.iter().filter(|x| x.birth <= a + 1 && b + 1 <= x.death).count();
    let mut failures = Vec::new();
    for i in 0..n {
        let c = covering(i, i);
        if c != m.dims()[i] {
            failures.push(AuditFailure::Dimension { pos: i + 1, expected: m.dims()[i], covering: c });
        }
    }
    for i in 0..n.saturating_sub(1) {
        let rank = m.arrows()[i].1.rank();
        let c = covering(i, i + 1);
        if c != rank {
            failures.push(AuditFailure::ArrowRank { from: i + 1, to: i + 2, rank, covering: c });
        }
    }
    let mut start = 0;
    while start + 1 < n {
        let dir = m.arrows()[start].0;
        let mut end = start + 1;
        while end + 1 < n && m.arrows()[end].0 == dir {
            end += 1;
        }
        if end - start >= 2 {
            let rank = m.composite_rank(start, end).expect("same-direction run");
            let c = covering(start, end);
            if c != rank {
                failures.push(AuditFailure::Composite { from: start + 1, to: end + 1, rank, covering: c });
            }
        }
        start = end;
    }
    AuditReport { failures }
}

/// Zigzag modules (one per degree up to the top dimension of the complex)
/// for slots (P_1, E_1), (P_{1,2}, E_{1,2}), (P_2, E_2), …, where each
/// even slot maps into both neighbours by inclusion.
pub fn zigzag_of_pairs(
    complex: &SimplicialComplex,
    slots: &[(SimplexSet, SimplexSet)],
    prime: Prime,
) -> Result<Vec<ZigzagModule>> {
    if slots.len() % 2 == 0 {
        return Err(Error::Invalid("a zigzag of pairs needs an odd number of slots".into()));
    }
    let summaries: Vec<HomologySummary> = slots
        .iter()
        .map(|(p, e)| relative_homology(complex, p, e, prime))
        .collect::<Result<_>>()?;
    let top = complex.max_dim().unwrap_or(0);
    let mut out = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let dims = summaries.iter().map(|h| h.betti(k)).collect();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for j in (1..slots.len()).step_by(2) {
            left.push(induced_inclusion_map(&summaries[j], &summaries[j - 1], k)?);
            right.push(induced_inclusion_map(&summaries[j], &summaries[j + 1], k)?);
        }
        out.push(ZigzagModule::alternating(prime, k, dims, left, right)?);
    }
    Ok(out)
}

/// An undirected simple graph on vertices 0..vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl UGraph {
    /// Forgets edge orientation, self-loops and repeated edges.
    pub fn from_directed(vertices: usize, edges: &[(usize, usize)]) -> Self {
        let mut und: Vec<(usize, usize)> =
            edges.iter().filter(|(u, v)| u != v).map(|&(u, v)| (u.min(v), u.max(v))).collect();
        und.sort_unstable();
        und.dedup();
        UGraph { vertices, edges: und }
    }

    pub fn to_complex(&self) -> SimplicialComplex {
        let mut raw: Vec<Vec<Vertex>> = (0..self.vertices as Vertex).map(|v| vec![v]).collect();
        raw.extend(self.edges.iter().map(|&(u, v)| vec![u as Vertex, v as Vertex]));
        SimplicialComplex::from_simplices(&raw).expect("graph simplices are valid")
    }
}

/// H_0 and H_1 zigzags of G_1 ← G_{1,2} → G_2 ← ⋯ with the vertex maps
/// `left[j]`: G_{j,j+1} → G_j and `right[j]`: G_{j,j+1} → G_{j+1}.
pub fn graph_zigzag(
    graphs: &[UGraph],
    between: &[UGraph],
    left: &[Vec<usize>],
    right: &[Vec<usize>],
    prime: Prime,
) -> Result<Vec<ZigzagModule>> {
    if graphs.is_empty() {
        return Err(Error::EmptyInput);
    }
    if between.len() + 1 != graphs.len() || left.len() != between.len() || right.len() != between.len() {
        return Err(Error::Invalid("graph zigzag has mismatched lengths".into()));
    }
    let odd: Vec<SimplicialComplex> = graphs.iter().map(UGraph::to_complex).collect();
    let even: Vec<SimplicialComplex> = between.iter().map(UGraph::to_complex).collect();
    let homology = |c: &SimplicialComplex| relative_homology(c, &c.full_set(), &c.empty_set(), prime);
    let odd_h: Vec<HomologySummary> = odd.iter().map(homology).collect::<Result<_>>()?;
    let even_h: Vec<HomologySummary> = even.iter().map(homology).collect::<Result<_>>()?;
    let as_map = |m: &[usize]| -> HashMap<Vertex, Vertex> {
        m.iter().enumerate().map(|(i, &j)| (i as Vertex, j as Vertex)).collect()
    };
    let mut out = Vec::with_capacity(2);
    for k in 0..=1 {
        let mut dims = Vec::with_capacity(2 * graphs.len() - 1);
        let mut lm = Vec::new();
        let mut rm = Vec::new();
        for j in 0..graphs.len() {
            dims.push(odd_h[j].betti(k));
            if j + 1 < graphs.len() {
                dims.push(even_h[j].betti(k));
                lm.push(simplicial_map_matrix(&even[j], &even_h[j], &odd[j], &odd_h[j], &as_map(&left[j]), k)?);
                rm.push(simplicial_map_matrix(&even[j], &even_h[j], &odd[j + 1], &odd_h[j + 1], &as_map(&right[j]), k)?);
            }
        }
        out.push(ZigzagModule::alternating(prime, k, dims, lm, rm)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p2() -> Prime {
        Prime::TWO
    }

    fn mat(rows: &[Vec<i64>], cols: usize, p: Prime) -> FieldMatrix {
        if rows.is_empty() {
            FieldMatrix::zeros(0, cols, p)
        } else {
            FieldMatrix::from_rows(rows, p)
        }
    }

    #[test]
    fn identities_give_one_bar() {
        let p = p2();
        let id = FieldMatrix::identity(1, p);
        let m = ZigzagModule::alternating(p, 0, vec![1, 1, 1], vec![id.clone()], vec![id]).unwrap();
        assert_eq!(interval_decompose(&m), vec![Bar::new(0, 1, 3)]);
    }

    #[test]
    fn broken_middle() {
        let p = p2();
        let m = ZigzagModule::alternating(p, 0, vec![1, 0, 1], vec![mat(&[vec![]], 0, p)], vec![mat(&[vec![]], 0, p)])
            .unwrap();
        assert_eq!(interval_decompose(&m), vec![Bar::new(0, 1, 1), Bar::new(0, 3, 3)]);
    }

    #[test]
    fn rank_drop_on_the_right() {
        let p = p2();
        let m = ZigzagModule::alternating(p, 0, vec![1, 1, 1], vec![mat(&[vec![1]], 1, p)], vec![mat(&[vec![0]], 1, p)])
            .unwrap();
        let bars = interval_decompose(&m);
        assert_eq!(bars, vec![Bar::new(0, 1, 2), Bar::new(0, 3, 3)]);
        assert!(audit_barcode(&m, &bars).passed());
    }

    #[test]
    fn audit_catches_miscounts() {
        let p = p2();
        let id = FieldMatrix::identity(1, p);
        let m = ZigzagModule::alternating(p, 0, vec![1, 1, 1], vec![id.clone()], vec![id]).unwrap();
        let r = audit_barcode(&m, &[Bar::new(0, 1, 2)]);
        assert!(r.failures.contains(&AuditFailure::Dimension { pos: 3, expected: 1, covering: 0 }));
    }

    #[test]
    fn shape_errors() {
        let p = p2();
        let bad = ZigzagModule::alternating(p, 0, vec![1, 2, 1], vec![FieldMatrix::identity(1, p)], vec![FieldMatrix::identity(1, p)]);
        assert!(matches!(bad, Err(Error::Invalid(_))));
    }

    #[test]
    fn field_projection() {
        let b = Bar::new(0, 2, 4);
        assert_eq!((b.birth_field(), b.death_field()), (1, 3));
        assert!(b.birth_open() && b.death_open());
        let b = Bar::new(0, 1, 5);
        assert_eq!((b.birth_field(), b.death_field()), (1, 3));
        assert_eq!(Bar::new(1, 3, 3).shifted(2), Bar::new(1, 7, 7));
    }

    fn random_invertible(n: usize, p: Prime, rng: &mut ChaCha8Rng) -> FieldMatrix {
        loop {
            let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p.get() as i64)).collect()).collect();
            let m = if n == 0 { FieldMatrix::zeros(0, 0, p) } else { FieldMatrix::from_rows(&rows, p) };
            if m.rank() == n {
                return m;
            }
        }
    }

    fn inverse(m: &FieldMatrix) -> FieldMatrix {
        let n = m.rows();
        let p = m.prime();
        // solve M X = I column by column via kernel of [M | -e_j]
        let mut cols = Vec::new();
        for j in 0..n {
            let mut aug = FieldMatrix::zeros(n, n + 1, p);
            for r in 0..n {
                for c in 0..n {
                    aug.set(r, c, m.get(r, c));
                }
            }
            aug.set(j, n, p.neg(1));
            let k = aug.kernel();
            let c = (0..k.cols()).find(|&c| k.get(n, c) != 0).unwrap();
            let s = p.inv(k.get(n, c));
            cols.push((0..n).map(|r| p.mul(k.get(r, c), s)).collect());
        }
        FieldMatrix::from_columns(n, &cols, p)
    }

    /// Direct sum of interval modules over the given arrow pattern, with a
    /// random change of basis at every position.
    fn interval_sum(p: Prime, dirs: &[Arrow], bars: &[(usize, usize)], rng: &mut ChaCha8Rng) -> ZigzagModule {
        let n = dirs.len() + 1;
        let members: Vec<Vec<usize>> =
            (0..n).map(|i| (0..bars.len()).filter(|&b| bars[b].0 <= i && i <= bars[b].1).collect()).collect();
        let bases: Vec<FieldMatrix> = members.iter().map(|m| random_invertible(m.len(), p, rng)).collect();
        let mut arrows = Vec::new();
        for i in 0..n - 1 {
            let (src, tgt) = match dirs[i] {
                Arrow::Forward => (i, i + 1),
                Arrow::Backward => (i + 1, i),
            };
            let mut raw = FieldMatrix::zeros(members[tgt].len(), members[src].len(), p);
            for (c, b) in members[src].iter().enumerate() {
                if let Some(r) = members[tgt].iter().position(|x| x == b) {
                    raw.set(r, c, 1);
                }
            }
            let conj = bases[tgt].mul(&raw).mul(&inverse(&bases[src]));
            arrows.push((dirs[i], conj));
        }
        ZigzagModule::new(p, 0, members.iter().map(Vec::len).collect(), arrows).unwrap()
    }

    #[test]
    fn recovers_planted_intervals() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..300 {
            let p = [2, 3, 5][trial % 3];
            let p = Prime::new(p).unwrap();
            let n = rng.gen_range(1..=7);
            let dirs: Vec<Arrow> =
                (0..n - 1).map(|_| if rng.gen_bool(0.5) { Arrow::Forward } else { Arrow::Backward }).collect();
            let nbars = rng.gen_range(0..=5);
            let mut bars: Vec<(usize, usize)> = (0..nbars)
                .map(|_| {
                    let a = rng.gen_range(0..n);
                    (a, rng.gen_range(a..n))
                })
                .collect();
            let m = interval_sum(p, &dirs, &bars, &mut rng);
            bars.sort();
            let got: Vec<(usize, usize)> = interval_decompose(&m).iter().map(|b| (b.birth - 1, b.death - 1)).collect();
            assert_eq!(got, bars, "trial {trial}");
        }
    }

    #[test]
    fn reversal_mirrors_bars() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p = Prime::new(3).unwrap();
        let dirs = [Arrow::Forward, Arrow::Backward, Arrow::Backward, Arrow::Forward];
        let m = interval_sum(p, &dirs, &[(0, 2), (1, 4), (3, 3), (0, 4)], &mut rng);
        let n = m.len();
        let mut mirrored: Vec<Bar> =
            interval_decompose(&m).iter().map(|b| Bar::new(b.dim, n + 1 - b.death, n + 1 - b.birth)).collect();
        mirrored.sort();
        assert_eq!(interval_decompose(&m.reversed()), mirrored);
    }

    #[test]
    fn pair_zigzag_of_repeated_pairs() {
        let k = SimplicialComplex::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let all = k.full_set();
        let none = k.empty_set();
        let slots = vec![(all.clone(), none.clone()); 5];
        let mods = zigzag_of_pairs(&k, &slots, p2()).unwrap();
        assert_eq!(mods.len(), 2);
        for (deg, m) in mods.iter().enumerate() {
            assert!(m.arrows().iter().all(|(_, a)| a.is_identity()));
            assert_eq!(interval_decompose(m), vec![Bar::new(deg, 1, 5)]);
        }
    }

    #[test]
    fn graph_zigzags() {
        let p = p2();
        let point = UGraph { vertices: 1, edges: vec![] };
        let mods = graph_zigzag(&[point.clone(), point.clone()], &[point.clone()], &[vec![0]], &[vec![0]], p).unwrap();
        assert_eq!(interval_decompose(&mods[0]), vec![Bar::new(0, 1, 3)]);
        assert!(interval_decompose(&mods[1]).is_empty());
        let empty = UGraph::default();
        let mods = graph_zigzag(&[point.clone(), point.clone()], &[empty], &[vec![]], &[vec![]], p).unwrap();
        assert_eq!(interval_decompose(&mods[0]), vec![Bar::new(0, 1, 1), Bar::new(0, 3, 3)]);
        // an edge collapsed to a vertex
        let edge = UGraph { vertices: 2, edges: vec![(0, 1)] };
        let mods = graph_zigzag(&[edge.clone(), point.clone()], &[edge.clone()], &[vec![0, 1]], &[vec![0, 0]], p).unwrap();
        assert_eq!(interval_decompose(&mods[0]), vec![Bar::new(0, 1, 3)]);
        let two = UGraph { vertices: 2, edges: vec![] };
        assert!(matches!(
            graph_zigzag(&[two.clone(), two.clone()], &[edge], &[vec![0, 1]], &[vec![0, 1]], p),
            Err(Error::NotSimplicial { .. })
        ));
    }
}
