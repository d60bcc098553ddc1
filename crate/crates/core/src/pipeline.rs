//! From a sequence of multivector fields to the combined barcode.

use std::collections::HashSet;
use std::sync::Arc;

use crate::complex::SimplexSet;
use crate::conley::{
    conley_index, conley_morse_graph, index_pair_pf, intersect_index_pairs_with, minimal_morse_decomposition,
    restrict_index_pair, thicken_index_pair, ConleyMorseGraph, IndexPair, MorseDecomposition,
};
use crate::dynamics::DynDigraph;
use crate::error::{Error, Result};
use crate::linalg::Prime;
use crate::mvf::{intersect_fields, same_complex, MultivectorField};
use crate::zigzag::{graph_zigzag, interval_decompose, zigzag_of_pairs, Bar, UGraph};

/// A chain of Morse sets, one per step from `start` (0-based) on.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequence {
    pub start: usize,
    pub sets: Vec<usize>,
}

impl Sequence {
    /// Last step covered (0-based, inclusive).
    pub fn end(&self) -> usize {
        self.start + self.sets.len() - 1
    }
}

/// Maximal sequences of linked Morse sets. `counts[i]` is the number of
/// Morse sets at step i and `link(i, a, b)` says whether set `a` of step i
/// links to set `b` of step i+1. Follows the alive/dead bookkeeping of the
/// filtration search step by step; output is sorted.
pub fn maximal_sequences(counts: &[usize], link: impl Fn(usize, usize, usize) -> bool) -> Vec<Sequence> {
    let mut alive: Vec<Sequence> = Vec::new();
    let mut all: Vec<Sequence> = Vec::new();
    for (i, &count) in counts.iter().enumerate() {
        let mut still_alive = Vec::new();
        let mut extended = vec![false; alive.len()];
        let mut in_sequence = vec![false; count];
        for (si, seq) in alive.iter().enumerate() {
            let last = *seq.sets.last().expect("sequences are nonempty");
            for (m, flag) in in_sequence.iter_mut().enumerate() {
                if link(i - 1, last, m) {
                    let mut next = seq.clone();
                    next.sets.push(m);
                    still_alive.push(next);
                    *flag = true;
                    extended[si] = true;
                }
            }
        }
        all.extend(alive.into_iter().zip(extended).filter(|(_, e)| !e).map(|(s, _)| s));
        alive = still_alive;
        for (m, &used) in in_sequence.iter().enumerate() {
            if !used {
                alive.push(Sequence { start: i, sets: vec![m] });
            }
        }
    }
    all.extend(alive);
    all.sort();
    all.dedup();
    all
}

/// A maximal sequence with its index pairs and the pairs filling the
/// intersection slots.
#[derive(Debug, Clone)]
pub struct FiltrationSequence {
    pub sequence: Sequence,
    pub pairs: Vec<IndexPair>,
    pub links: Vec<IndexPair>,
}

impl FiltrationSequence {
    /// First field covered, 1-based.
    pub fn start_field(&self) -> usize {
        self.sequence.start + 1
    }

    /// Last field covered, 1-based.
    pub fn end_field(&self) -> usize {
        self.sequence.end() + 1
    }

    /// The pairs (P_1, E_1), (P_{1,2}, E_{1,2}), (P_2, E_2), … in order.
    pub fn slots(&self) -> Vec<(SimplexSet, SimplexSet)> {
        let mut out = Vec::with_capacity(2 * self.pairs.len() - 1);
        for (i, ip) in self.pairs.iter().enumerate() {
            if i > 0 {
                let l = &self.links[i - 1];
                out.push((l.p.clone(), l.e.clone()));
            }
            out.push((ip.p.clone(), ip.e.clone()));
        }
        out
    }

    /// Whether fields a..=b (1-based) carry the same pairs here and in
    /// `other`.
    pub fn same_subfiltration(&self, other: &FiltrationSequence, a: usize, b: usize) -> bool {
        let covers = |f: &FiltrationSequence| f.start_field() <= a && b <= f.end_field();
        if !covers(self) || !covers(other) {
            return false;
        }
        (a..=b).all(|t| {
            let x = &self.pairs[t - self.start_field()];
            let y = &other.pairs[t - other.start_field()];
            x.p == y.p && x.e == y.e
        })
    }
}

/// Maximal feasible sequences for one isolating set shared by all steps.
pub fn find_conley_morse_filtrations(
    decompositions: &[MorseDecomposition],
    pairs: &[Vec<IndexPair>],
    intersection_fields: &[Arc<MultivectorField>],
) -> Result<Vec<FiltrationSequence>> {
    check_pairs(decompositions, pairs)?;
    let interiors: Vec<Vec<SimplexSet>> = pairs.iter().map(|ps| ps.iter().map(IndexPair::interior).collect()).collect();
    let counts: Vec<usize> = decompositions.iter().map(MorseDecomposition::len).collect();
    let seqs = maximal_sequences(&counts, |i, a, b| interiors[i][a].intersects(&interiors[i + 1][b]));
    seqs.into_iter()
        .map(|sequence| {
            let chosen: Vec<IndexPair> =
                sequence.sets.iter().enumerate().map(|(t, &m)| pairs[sequence.start + t][m].clone()).collect();
            let links = chosen
                .windows(2)
                .enumerate()
                .map(|(t, w)| intersect_index_pairs_with(&w[0], &w[1], Arc::clone(&intersection_fields[sequence.start + t])))
                .collect::<Result<_>>()?;
            Ok(FiltrationSequence { sequence, pairs: chosen, links })
        })
        .collect()
}

/// Maximal sequences when each step has its own isolating set. A link
/// additionally needs both interiors inside N_i ∩ N_{i+1}; its slot is
/// (P_i ∩ P_{i+1} ∩ N_i ∩ N_{i+1}, E_i ∩ E_{i+1} ∩ N_i ∩ N_{i+1}).
pub fn changing_n_sequences(
    decompositions: &[MorseDecomposition],
    pairs: &[Vec<IndexPair>],
    intersection_fields: &[Arc<MultivectorField>],
) -> Result<Vec<FiltrationSequence>> {
    check_pairs(decompositions, pairs)?;
    let ns: Vec<&SimplexSet> = decompositions.iter().map(MorseDecomposition::isolating_set).collect();
    let interiors: Vec<Vec<SimplexSet>> = pairs.iter().map(|ps| ps.iter().map(IndexPair::interior).collect()).collect();
    let counts: Vec<usize> = decompositions.iter().map(MorseDecomposition::len).collect();
    let seqs = maximal_sequences(&counts, |i, a, b| {
        let common = ns[i].intersection(ns[i + 1]);
        interiors[i][a].intersects(&interiors[i + 1][b])
            && interiors[i][a].is_subset(&common)
            && interiors[i + 1][b].is_subset(&common)
    });
    seqs.into_iter()
        .map(|sequence| {
            let chosen: Vec<IndexPair> =
                sequence.sets.iter().enumerate().map(|(t, &m)| pairs[sequence.start + t][m].clone()).collect();
            let links = chosen
                .windows(2)
                .enumerate()
                .map(|(t, w)| {
                    let i = sequence.start + t;
                    let common = ns[i].intersection(ns[i + 1]);
                    let a = restrict_index_pair(&w[0], &common)?;
                    let b = restrict_index_pair(&w[1], &common)?;
                    intersect_index_pairs_with(&a, &b, Arc::clone(&intersection_fields[i]))
                })
                .collect::<Result<_>>()?;
            Ok(FiltrationSequence { sequence, pairs: chosen, links })
        })
        .collect()
}

fn check_pairs(decompositions: &[MorseDecomposition], pairs: &[Vec<IndexPair>]) -> Result<()> {
    if decompositions.len() != pairs.len() {
        return Err(Error::Invalid("one list of index pairs per step is required".into()));
    }
    for (step, (d, ps)) in decompositions.iter().zip(pairs).enumerate() {
        if ps.len() < d.len() {
            return Err(Error::MissingIndexPair { step, set: ps.len() });
        }
    }
    Ok(())
}

/// Intersection-field Morse sets contained in Morse sets of both flanking
/// decompositions, joined by relevant connections.
#[derive(Debug, Clone)]
pub struct RelevantCMGraph {
    pub decomposition: MorseDecomposition,
    /// Indices into `decomposition` of the relevant sets.
    pub relevant: Vec<usize>,
    pub poincare: Vec<Vec<usize>>,
    /// Directed edges between positions in `relevant`.
    pub edges: Vec<(usize, usize)>,
    pub iota1: Vec<usize>,
    pub iota2: Vec<usize>,
}

impl RelevantCMGraph {
    pub fn len(&self) -> usize {
        self.relevant.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relevant.is_empty()
    }

    pub fn set(&self, v: usize) -> &SimplexSet {
        self.decomposition.set(self.relevant[v])
    }
}

fn containing(d: &MorseDecomposition, m: &SimplexSet) -> Option<usize> {
    let hits: Vec<usize> = (0..d.len()).filter(|&i| m.is_subset(d.set(i))).collect();
    debug_assert!(hits.len() <= 1, "a nonempty set lies in two disjoint Morse sets");
    hits.first().copied()
}

/// Relevant Conley-Morse graph between two steps. `n12` is the common
/// isolating set (N_1 ∩ N_2 when they differ).
pub fn relevant_cm_graph(
    field12: &Arc<MultivectorField>,
    n12: &SimplexSet,
    d1: &MorseDecomposition,
    g1: &ConleyMorseGraph,
    d2: &MorseDecomposition,
    g2: &ConleyMorseGraph,
    prime: Prime,
) -> Result<RelevantCMGraph> {
    let d12 = minimal_morse_decomposition(field12, n12)?;
    let mut relevant = Vec::new();
    let mut iota1 = Vec::new();
    let mut iota2 = Vec::new();
    for i in 0..d12.len() {
        if let (Some(a), Some(b)) = (containing(d1, d12.set(i)), containing(d2, d12.set(i))) {
            relevant.push(i);
            iota1.push(a);
            iota2.push(b);
        }
    }
    let mut poincare = Vec::with_capacity(relevant.len());
    for &i in &relevant {
        let ip = index_pair_pf(field12, n12, d12.set(i))?;
        poincare.push(conley_index(&ip, prime)?.poincare());
    }
    let g = DynDigraph::new(field12, n12);
    let all12 = d12.union();
    let mut edges = Vec::new();
    for u in 0..relevant.len() {
        for v in 0..relevant.len() {
            if u == v {
                continue;
            }
            let mut interior = n12.difference(&all12);
            for (d, iu, iv) in [(d1, iota1[u], iota1[v]), (d2, iota2[u], iota2[v])] {
                for (k, m) in d.sets().iter().enumerate() {
                    if k != iu && k != iv {
                        interior.difference_with(m);
                    }
                }
            }
            if g.path_between(d12.set(relevant[u]), d12.set(relevant[v]), &interior, false).is_some() {
                edges.push((u, v));
            }
        }
    }
    for &(u, v) in &edges {
        for (iota, gk) in [(&iota1, g1), (&iota2, g2)] {
            if iota[u] != iota[v] && !gk.has_edge(iota[u], iota[v]) {
                return Err(Error::EdgeNotPreserved(u, v));
            }
        }
    }
    Ok(RelevantCMGraph { decomposition: d12, relevant, poincare, edges, iota1, iota2 })
}

/// A bar of a Conley-Morse filtration, in global positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SourcedBar {
    pub filtration: usize,
    pub bar: Bar,
}

/// Drops redundant bars, one dimension at a time, with the per-filtration
/// `forbidden` flags keyed by the field range of each bar.
pub fn eliminate_redundancies(filtrations: &[FiltrationSequence], barcodes: &[Vec<Bar>]) -> Vec<SourcedBar> {
    let mut dims: Vec<usize> = barcodes.iter().flatten().map(|b| b.dim).collect();
    dims.sort_unstable();
    dims.dedup();
    let mut kept = Vec::new();
    for dim in dims {
        let mut forbidden: HashSet<(usize, usize, usize)> = HashSet::new();
        for (i, bars) in barcodes.iter().enumerate() {
            for bar in bars.iter().filter(|b| b.dim == dim) {
                let (a, b) = (bar.birth_field(), bar.death_field());
                let mut redundant = false;
                for j in 0..filtrations.len() {
                    if j != i
                        && !forbidden.contains(&(j, a, b))
                        && filtrations[i].same_subfiltration(&filtrations[j], a, b)
                    {
                        redundant = true;
                        forbidden.insert((i, a, b));
                    }
                }
                if !redundant {
                    kept.push(SourcedBar { filtration: i, bar: *bar });
                }
            }
        }
    }
    kept.sort_by_key(|s| (s.bar, s.filtration));
    kept
}

/// Everything computed for one field.
#[derive(Debug, Clone)]
pub struct Step {
    pub field: Arc<MultivectorField>,
    pub decomposition: MorseDecomposition,
    pub pairs: Vec<IndexPair>,
    pub graph: ConleyMorseGraph,
}

#[derive(Debug, Clone)]
pub struct PipelineInput {
    pub fields: Vec<Arc<MultivectorField>>,
    /// One isolating set shared by every field, or one per field.
    pub isolating: Vec<SimplexSet>,
    /// Morse sets per field replacing the minimal decompositions.
    pub decompositions: Option<Vec<Vec<SimplexSet>>>,
    pub prime: Prime,
    pub thicken: usize,
}

impl PipelineInput {
    pub fn new(fields: Vec<Arc<MultivectorField>>, isolating: SimplexSet) -> Self {
        PipelineInput { fields, isolating: vec![isolating], decompositions: None, prime: Prime::TWO, thicken: 0 }
    }

    pub fn isolating_set(&self, i: usize) -> &SimplexSet {
        if self.isolating.len() == 1 {
            &self.isolating[0]
        } else {
            &self.isolating[i]
        }
    }

    fn changing_n(&self) -> bool {
        self.isolating.len() > 1 && self.isolating.iter().any(|n| *n != self.isolating[0])
    }
}

#[derive(Debug, Clone)]
pub struct CombinedBarcode {
    pub steps: Vec<Step>,
    pub relevant: Vec<RelevantCMGraph>,
    pub filtrations: Vec<FiltrationSequence>,
    /// Bars of each filtration before redundancy elimination.
    pub filtration_bars: Vec<Vec<Bar>>,
    pub conley_bars: Vec<SourcedBar>,
    pub graph_bars: Vec<Bar>,
}

/// Morse decomposition, index pairs and Conley-Morse graph of every field.
pub fn prepare_steps(input: &PipelineInput) -> Result<Vec<Step>> {
    if input.fields.is_empty() {
        return Err(Error::EmptyInput);
    }
    if input.isolating.len() != 1 && input.isolating.len() != input.fields.len() {
        return Err(Error::Invalid("give one isolating set or one per field".into()));
    }
    let k0 = input.fields[0].complex();
    if input.fields.iter().any(|f| !same_complex(f.complex(), k0)) {
        return Err(Error::DifferentComplex);
    }
    if let Some(ds) = &input.decompositions {
        if ds.len() != input.fields.len() {
            return Err(Error::Invalid("give one decomposition per field".into()));
        }
    }
    let mut steps = Vec::with_capacity(input.fields.len());
    for (i, field) in input.fields.iter().enumerate() {
        let n = input.isolating_set(i);
        let minimal = minimal_morse_decomposition(field, n)?;
        let decomposition = match &input.decompositions {
            Some(ds) => MorseDecomposition::from_sets(field, n, ds[i].clone())?,
            None => minimal.clone(),
        };
        let pairs = decomposition
            .sets()
            .iter()
            .map(|s| {
                let ip = index_pair_pf(field, n, s)?;
                if input.thicken > 0 {
                    thicken_index_pair(&ip, &minimal, input.thicken)
                } else {
                    Ok(ip)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let graph = conley_morse_graph(field, &decomposition, input.prime)?;
        steps.push(Step { field: Arc::clone(field), decomposition, pairs, graph });
    }
    Ok(steps)
}

/// Runs the whole construction: per-field decompositions and index pairs,
/// maximal sequences, their zigzag barcodes, redundancy elimination, and the
/// zigzag of Conley-Morse graphs.
pub fn full_barcode(input: &PipelineInput) -> Result<CombinedBarcode> {
    let steps = prepare_steps(input)?;
    let complex = Arc::clone(steps[0].field.complex());
    let inter: Vec<Arc<MultivectorField>> = steps
        .windows(2)
        .map(|w| intersect_fields(&w[0].field, &w[1].field).map(|f| Arc::new(f.with_prime(input.prime))))
        .collect::<Result<_>>()?;
    let decompositions: Vec<MorseDecomposition> = steps.iter().map(|s| s.decomposition.clone()).collect();
    let pairs: Vec<Vec<IndexPair>> = steps.iter().map(|s| s.pairs.clone()).collect();
    let filtrations = if input.changing_n() {
        changing_n_sequences(&decompositions, &pairs, &inter)?
    } else {
        find_conley_morse_filtrations(&decompositions, &pairs, &inter)?
    };
    let mut filtration_bars = Vec::with_capacity(filtrations.len());
    for f in &filtrations {
        let mut bars = Vec::new();
        for m in zigzag_of_pairs(&complex, &f.slots(), input.prime)? {
            bars.extend(interval_decompose(&m).into_iter().map(|b| b.shifted(f.sequence.start)));
        }
        bars.sort();
        filtration_bars.push(bars);
    }
    let conley_bars = eliminate_redundancies(&filtrations, &filtration_bars);

    let mut relevant = Vec::with_capacity(inter.len());
    for (i, f12) in inter.iter().enumerate() {
        let n12 = input.isolating_set(i).intersection(input.isolating_set(i + 1));
        relevant.push(relevant_cm_graph(
            f12,
            &n12,
            &steps[i].decomposition,
            &steps[i].graph,
            &steps[i + 1].decomposition,
            &steps[i + 1].graph,
            input.prime,
        )?);
    }
    let graphs: Vec<UGraph> =
        steps.iter().map(|s| UGraph::from_directed(s.graph.vertices.len(), &s.graph.edges)).collect();
    let between: Vec<UGraph> = relevant.iter().map(|r| UGraph::from_directed(r.len(), &r.edges)).collect();
    let left: Vec<Vec<usize>> = relevant.iter().map(|r| r.iota1.clone()).collect();
    let right: Vec<Vec<usize>> = relevant.iter().map(|r| r.iota2.clone()).collect();
    let mut graph_bars = Vec::new();
    for m in graph_zigzag(&graphs, &between, &left, &right, input.prime)? {
        graph_bars.extend(interval_decompose(&m));
    }
    graph_bars.sort();
    Ok(CombinedBarcode { steps, relevant, filtrations, filtration_bars, conley_bars, graph_bars })
}
