//! Morse decompositions, index pairs, Conley indices and Conley-Morse graphs.

use std::sync::Arc;

use crate::complex::{SimplexId, SimplexSet};
use crate::dynamics::{
    check_isolated, direct_connection, essential_sccs, invariant_part, push_forward, AnchorKind, DynDigraph,
};
use crate::error::{Error, Result};
use crate::linalg::{relative_homology, Prime};
use crate::mvf::{intersect_fields, same_complex, MultivectorField};

/// Disjoint isolated invariant sets in N with the reachability order.
#[derive(Debug, Clone)]
pub struct MorseDecomposition {
    n: SimplexSet,
    sets: Vec<SimplexSet>,
    anchors: Vec<AnchorKind>,
    reaches: Vec<Vec<bool>>,
    hasse: Vec<(usize, usize)>,
}

impl MorseDecomposition {
    /// Validates user-supplied Morse sets and derives their order.
    pub fn from_sets(field: &MultivectorField, n: &SimplexSet, sets: Vec<SimplexSet>) -> Result<Self> {
        field.complex().check_closed(n, "isolating set")?;
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                if let Some(w) = a.intersection(b).first() {
                    return Err(Error::Invalid(format!("Morse sets overlap at simplex {w}")));
                }
            }
            let iso = check_isolated(field, n, a)?;
            if !iso.is_isolated() {
                return Err(Error::NotIsolated(format!("Morse set {i}: {}", iso.describe())));
            }
        }
        let anchors = sets
            .iter()
            .map(|s| {
                if s.iter().any(|x| field.is_critical_simplex(x)) {
                    AnchorKind::CriticalVector
                } else {
                    AnchorKind::MultiVectorCycle
                }
            })
            .collect();
        Self::with_order(field, n, sets, anchors)
    }

    fn with_order(
        field: &MultivectorField,
        n: &SimplexSet,
        sets: Vec<SimplexSet>,
        anchors: Vec<AnchorKind>,
    ) -> Result<Self> {
        let g = DynDigraph::new(field, n);
        let k = sets.len();
        let mut reaches = vec![vec![false; k]; k];
        for i in 0..k {
            let fwd = g.forward_reach(&sets[i]);
            for j in 0..k {
                reaches[i][j] = i != j && fwd.intersects(&sets[j]);
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                if reaches[i][j] && reaches[j][i] {
                    return Err(Error::OrderCycle(i, j));
                }
            }
        }
        let mut hasse = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if reaches[i][j] && !(0..k).any(|m| reaches[i][m] && reaches[m][j]) {
                    hasse.push((i, j));
                }
            }
        }
        Ok(MorseDecomposition { n: n.clone(), sets, anchors, reaches, hasse })
    }

    pub fn isolating_set(&self) -> &SimplexSet {
        &self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[SimplexSet] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &SimplexSet {
        &self.sets[i]
    }

    pub fn anchor(&self, i: usize) -> AnchorKind {
        self.anchors[i]
    }

    /// Whether a path in N runs from set `i` to set `j` (i ≠ j).
    pub fn reaches(&self, i: usize, j: usize) -> bool {
        self.reaches[i][j]
    }

    /// M_i ≤ M_j, i.e. M_j flows down to M_i.
    pub fn less_eq(&self, i: usize, j: usize) -> bool {
        i == j || self.reaches[j][i]
    }

    /// Transitive reduction of the reachability relation, as (from, to).
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// Index of the set containing `s`.
    pub fn set_containing(&self, s: SimplexId) -> Option<usize> {
        self.sets.iter().position(|m| m.contains(s))
    }

    pub fn union(&self) -> SimplexSet {
        let mut out = SimplexSet::empty(self.n.universe());
        for m in &self.sets {
            out.union_with(m);
        }
        out
    }
}

/// The essential strongly connected components of inv(N).
pub fn minimal_morse_decomposition(field: &MultivectorField, n: &SimplexSet) -> Result<MorseDecomposition> {
    field.complex().check_closed(n, "isolating set")?;
    let inv = invariant_part(field, n);
    let (sets, anchors): (Vec<_>, Vec<_>) = essential_sccs(field, &inv).into_iter().map(|c| (c.members, c.anchor)).unzip();
    for (i, s) in sets.iter().enumerate() {
        let iso = check_isolated(field, n, s)?;
        if !iso.is_isolated() {
            return Err(Error::NotIsolated(format!("minimal Morse set {i}: {}", iso.describe())));
        }
    }
    MorseDecomposition::with_order(field, n, sets, anchors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// Index pair in N: all four in-N clauses.
    InN,
    /// Index pair in the plain sense.
    Plain,
}

/// A nested pair of closed sets (P, E) for the invariant set S.
#[derive(Debug, Clone)]
pub struct IndexPair {
    pub p: SimplexSet,
    pub e: SimplexSet,
    pub n: SimplexSet,
    pub field: Arc<MultivectorField>,
    pub kind: PairKind,
    /// The invariant set S the pair is claimed for.
    pub invariant: SimplexSet,
}

impl PartialEq for IndexPair {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.n == other.n && self.kind == other.kind
    }
}

impl IndexPair {
    /// Builds a pair without checking the index-pair clauses; use
    /// [`validate_index_pair`] for that.
    pub fn new(
        field: Arc<MultivectorField>,
        p: SimplexSet,
        e: SimplexSet,
        n: SimplexSet,
        kind: PairKind,
        invariant: SimplexSet,
    ) -> Self {
        IndexPair { p, e, n, field, kind, invariant }
    }

    /// Builds a pair whose claimed invariant set is inv(P ∖ E).
    pub fn from_sets(field: Arc<MultivectorField>, p: SimplexSet, e: SimplexSet, n: SimplexSet, kind: PairKind) -> Self {
        let invariant = invariant_part(&field, &p.difference(&e));
        IndexPair { p, e, n, field, kind, invariant }
    }

    pub fn interior(&self) -> SimplexSet {
        self.p.difference(&self.e)
    }

    fn validated(self) -> Result<Self> {
        let report = validate_index_pair(&self);
        if report.passed() {
            Ok(self)
        } else {
            Err(Error::ValidationFailed(report.summary()))
        }
    }
}

/// One clause of an index-pair check with a violating simplex, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub witness: Option<SimplexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub clauses: Vec<Clause>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.witness.is_none())
    }

    pub fn failed(&self) -> Vec<&Clause> {
        self.clauses.iter().filter(|c| c.witness.is_some()).collect()
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .failed()
            .iter()
            .map(|c| format!("{} (simplex {})", c.name, c.witness.unwrap()))
            .collect();
        if failed.is_empty() {
            "all clauses hold".to_string()
        } else {
            failed.join("; ")
        }
    }
}

pub const CLAUSE_P_CLOSED: &str = "P closed";
pub const CLAUSE_E_CLOSED: &str = "E closed";
pub const CLAUSE_NESTED: &str = "E ⊆ P";
pub const CLAUSE_IN_N: &str = "P ⊆ N";
pub const CLAUSE_EXIT_IN_P: &str = "F(E) ∩ P ⊆ E";
pub const CLAUSE_INTERIOR_IN_P: &str = "F(P∖E) ⊆ P";
pub const CLAUSE_EXIT_IN_N: &str = "F(E) ∩ N ⊆ E";
pub const CLAUSE_P_IN_N: &str = "F(P) ∩ N ⊆ P";
pub const CLAUSE_INTERIOR_IN_N: &str = "F(P∖E) ⊆ N";
pub const CLAUSE_INVARIANT: &str = "S = inv(P∖E)";

/// Checks every clause of the pair's definition; the plain clauses are
/// checked for in-N pairs too.
pub fn validate_index_pair(ip: &IndexPair) -> ValidationReport {
    let f = &ip.field;
    let k = f.complex();
    let outside = |img: SimplexSet, allowed: &SimplexSet| img.first_outside(allowed);
    let mut clauses = vec![
        Clause { name: CLAUSE_P_CLOSED, witness: k.closed_witness(&ip.p) },
        Clause { name: CLAUSE_E_CLOSED, witness: k.closed_witness(&ip.e) },
        Clause { name: CLAUSE_NESTED, witness: ip.e.first_outside(&ip.p) },
    ];
    let interior = ip.interior();
    let fe = f.fv_set(&ip.e);
    let fi = f.fv_set(&interior);
    clauses.push(Clause { name: CLAUSE_EXIT_IN_P, witness: outside(fe.intersection(&ip.p), &ip.e) });
    clauses.push(Clause { name: CLAUSE_INTERIOR_IN_P, witness: outside(fi.clone(), &ip.p) });
    if ip.kind == PairKind::InN {
        clauses.push(Clause { name: CLAUSE_IN_N, witness: ip.p.first_outside(&ip.n) });
        clauses.push(Clause { name: CLAUSE_EXIT_IN_N, witness: outside(fe.intersection(&ip.n), &ip.e) });
        let fp = f.fv_set(&ip.p);
        clauses.push(Clause { name: CLAUSE_P_IN_N, witness: outside(fp.intersection(&ip.n), &ip.p) });
        clauses.push(Clause { name: CLAUSE_INTERIOR_IN_N, witness: outside(fi, &ip.n) });
    }
    let inv = invariant_part(f, &interior);
    let witness = ip.invariant.first_outside(&inv).or_else(|| inv.first_outside(&ip.invariant));
    clauses.push(Clause { name: CLAUSE_INVARIANT, witness });
    ValidationReport { clauses }
}

/// (pf_N(cl S), pf_N(mo S)) as an index pair in N for the isolated set S.
pub fn index_pair_pf(field: &Arc<MultivectorField>, n: &SimplexSet, s: &SimplexSet) -> Result<IndexPair> {
    let iso = check_isolated(field, n, s)?;
    if !iso.is_isolated() {
        return Err(Error::NotIsolated(iso.describe()));
    }
    let k = field.complex();
    let cl = k.closure(s);
    let mo = cl.difference(s);
    let p = push_forward(field, n, &cl)?;
    let e = push_forward(field, n, &mo)?;
    IndexPair::new(Arc::clone(field), p, e, n.clone(), PairKind::InN, s.clone()).validated()
}

/// (cl S, mo S) as a plain index pair.
pub fn index_pair_closure(field: &Arc<MultivectorField>, s: &SimplexSet) -> IndexPair {
    let k = field.complex();
    let cl = k.closure(s);
    let mo = cl.difference(s);
    IndexPair::new(Arc::clone(field), cl, mo, k.full_set(), PairKind::Plain, s.clone())
}

/// (P1 ∩ P2, E1 ∩ E2) under the intersection field.
pub fn intersect_index_pairs(ip1: &IndexPair, ip2: &IndexPair) -> Result<IndexPair> {
    let field = Arc::new(intersect_fields(&ip1.field, &ip2.field)?);
    intersect_index_pairs_with(ip1, ip2, field)
}

/// Like [`intersect_index_pairs`] with a precomputed intersection field.
pub fn intersect_index_pairs_with(ip1: &IndexPair, ip2: &IndexPair, field: Arc<MultivectorField>) -> Result<IndexPair> {
    if !same_complex(ip1.field.complex(), ip2.field.complex()) || !same_complex(ip1.field.complex(), field.complex()) {
        return Err(Error::DifferentComplex);
    }
    if ip1.n != ip2.n {
        return Err(Error::DifferentN);
    }
    let p = ip1.p.intersection(&ip2.p);
    let e = ip1.e.intersection(&ip2.e);
    IndexPair::from_sets(field, p, e, ip1.n.clone(), PairKind::InN).validated()
}

/// (P ∩ N', E ∩ N') as an index pair in the smaller isolating set N'.
pub fn restrict_index_pair(ip: &IndexPair, n2: &SimplexSet) -> Result<IndexPair> {
    ip.field.complex().check_closed(n2, "isolating set")?;
    if let Some(witness) = n2.first_outside(&ip.n) {
        return Err(Error::NotContained { witness });
    }
    if let Some(witness) = ip.interior().first_outside(n2) {
        return Err(Error::InteriorEscapes { witness });
    }
    let out = IndexPair::from_sets(
        Arc::clone(&ip.field),
        ip.p.intersection(n2),
        ip.e.intersection(n2),
        n2.clone(),
        PairKind::InN,
    );
    if out.invariant != ip.invariant {
        return Err(Error::InvariantChanged("restriction"));
    }
    out.validated()
}

/// Grows P by `rounds` rounds of whole multivectors that sit on top of P,
/// avoid E, and meet no Morse set outside S.
pub fn thicken_index_pair(ip: &IndexPair, decomposition: &MorseDecomposition, rounds: usize) -> Result<IndexPair> {
    let f = &ip.field;
    let k = f.complex();
    let foreign: Vec<&SimplexSet> = decomposition.sets().iter().filter(|m| !m.is_subset(&ip.invariant)).collect();
    let mut p = ip.p.clone();
    for _ in 0..rounds {
        let mut grown = p.clone();
        for v in f.vectors() {
            if v.is_subset(&p)
                || !v.is_subset(&ip.n)
                || v.intersects(&ip.e)
                || !k.mouth(v).is_subset(&p)
                || foreign.iter().any(|m| m.intersects(v))
            {
                continue;
            }
            grown.union_with(v);
        }
        if grown == p {
            break;
        }
        p = grown;
    }
    let out = IndexPair::new(Arc::clone(f), p, ip.e.clone(), ip.n.clone(), ip.kind, ip.invariant.clone());
    if invariant_part(f, &out.interior()) != ip.invariant {
        return Err(Error::InvariantChanged("thickening"));
    }
    out.validated()
}

/// Betti numbers of H(P, E).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConleyIndex {
    pub betti: Vec<usize>,
}

impl ConleyIndex {
    pub fn betti(&self, k: usize) -> usize {
        self.betti.get(k).copied().unwrap_or(0)
    }

    /// Poincaré polynomial coefficients, trimmed after the last nonzero one.
    pub fn poincare(&self) -> Vec<usize> {
        let end = self.betti.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
        self.betti[..end].to_vec()
    }

    pub fn is_trivial(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }
}

pub fn conley_index(ip: &IndexPair, prime: Prime) -> Result<ConleyIndex> {
    let h = relative_homology(ip.field.complex(), &ip.p, &ip.e, prime)?;
    Ok(ConleyIndex { betti: h.betti_numbers() })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CmVertex {
    pub set: SimplexSet,
    pub poincare: Vec<usize>,
}

/// Morse sets as vertices, direct connections as edges.
#[derive(Debug, Clone, PartialEq)]
pub struct ConleyMorseGraph {
    pub vertices: Vec<CmVertex>,
    pub edges: Vec<(usize, usize)>,
}

impl ConleyMorseGraph {
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }
}

pub fn conley_morse_graph(
    field: &Arc<MultivectorField>,
    decomposition: &MorseDecomposition,
    prime: Prime,
) -> Result<ConleyMorseGraph> {
    let n = decomposition.isolating_set();
    let sets = decomposition.sets();
    let mut vertices = Vec::with_capacity(sets.len());
    for s in sets {
        let ip = index_pair_pf(field, n, s)?;
        vertices.push(CmVertex { set: s.clone(), poincare: conley_index(&ip, prime)?.poincare() });
    }
    let mut edges = Vec::new();
    for u in 0..sets.len() {
        for v in 0..sets.len() {
            if u != v && direct_connection(field, n, sets, u, v).is_some() {
                edges.push((u, v));
            }
        }
    }
    Ok(ConleyMorseGraph { vertices, edges })
}
