//! Random inputs and brute-force references shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use conmorse::complex::{SimplexId, SimplexSet, SimplicialComplex, Vertex};
use conmorse::linalg::{FieldMatrix, Prime};
use conmorse::mvf::MultivectorField;
use conmorse::pipeline::{FiltrationSequence, SourcedBar};
use conmorse::zigzag::{Arrow, Bar, ZigzagModule};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected-ish random complex with at most `max` simplices.
pub fn random_complex(rng: &mut ChaCha8Rng, max: usize) -> Arc<SimplicialComplex> {
    let nv: Vertex = rng.gen_range(2..=5);
    let mut tops: Vec<Vec<Vertex>> = vec![vec![0, 1]];
    for _ in 0..12 {
        let k = rng.gen_range(2..=3).min(nv as usize);
        let mut vs: Vec<Vertex> = (0..nv).collect();
        vs.shuffle(rng);
        let mut s = vs[..k].to_vec();
        s.sort_unstable();
        let mut trial = tops.clone();
        trial.push(s);
        if SimplicialComplex::from_simplices(&trial).unwrap().len() <= max {
            tops = trial;
        }
    }
    Arc::new(SimplicialComplex::from_simplices(&tops).unwrap())
}

/// A random partition into convex vectors, grown by merging neighbours.
pub fn random_field(rng: &mut ChaCha8Rng, k: &Arc<SimplicialComplex>) -> Arc<MultivectorField> {
    let n = k.len();
    let mut owner: Vec<usize> = (0..n).collect();
    let merges = rng.gen_range(0..=2 * n);
    for _ in 0..merges {
        let s = rng.gen_range(0..n);
        let faces = k.faces(s);
        if faces.is_empty() {
            continue;
        }
        let t = faces[rng.gen_range(0..faces.len())];
        let (a, b) = (owner[s], owner[t]);
        if a == b {
            continue;
        }
        let set = k.set_of((0..n).filter(|&x| owner[x] == a || owner[x] == b));
        if k.is_convex(&set) {
            for o in owner.iter_mut() {
                if *o == b {
                    *o = a;
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<SimplexId>> = HashMap::new();
    for (s, &o) in owner.iter().enumerate() {
        groups.entry(o).or_default().push(s);
    }
    let parts: Vec<Vec<SimplexId>> = groups.into_values().collect();
    Arc::new(MultivectorField::build(Arc::clone(k), &parts).unwrap())
}

/// Simplices reachable from `from` by F_V-steps inside `domain`.
pub fn reachable(field: &MultivectorField, domain: &SimplexSet, from: &[SimplexId]) -> BTreeSet<SimplexId> {
    let mut seen: BTreeSet<SimplexId> = from.iter().copied().filter(|&s| domain.contains(s)).collect();
    let mut queue: VecDeque<SimplexId> = seen.iter().copied().collect();
    while let Some(s) = queue.pop_front() {
        for t in field.fv(s).iter() {
            if domain.contains(t) && seen.insert(t) {
                queue.push_back(t);
            }
        }
    }
    seen
}

/// Whether every member of `m` reaches every other inside `m`.
pub fn strongly_connected(field: &MultivectorField, m: &SimplexSet) -> bool {
    let all: BTreeSet<SimplexId> = m.iter().collect();
    m.iter().all(|s| {
        let mut r = BTreeSet::new();
        for t in field.fv(s).iter().filter(|&t| m.contains(t)) {
            r.extend(reachable(field, m, &[t]));
        }
        r == all
    })
}

/// Whether a path inside `n` leaves `a` and comes back.
pub fn returns_through(field: &MultivectorField, n: &SimplexSet, a: &SimplexSet) -> bool {
    let outside = n.difference(a);
    let exits: Vec<SimplexId> =
        a.iter().flat_map(|s| field.fv(s).iter().collect::<Vec<_>>()).filter(|&t| outside.contains(t)).collect();
    let r = reachable(field, &outside, &exits);
    r.iter().any(|&s| field.fv(s).iter().any(|t| a.contains(t)))
}

/// Vector ids whose members lie in `m`.
pub fn vectors_in(field: &MultivectorField, m: &SimplexSet) -> Vec<usize> {
    let mut vs: Vec<usize> = m.iter().map(|s| field.vector_of(s)).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Random zigzag module with arbitrary arrow directions.
pub fn random_module(rng: &mut ChaCha8Rng, max_len: usize, max_dim: usize, prime: Prime) -> ZigzagModule {
    let len = rng.gen_range(1..=max_len);
    let dims: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=max_dim)).collect();
    let p = prime.get();
    let arrows = (0..len - 1)
        .map(|i| {
            let dir = if rng.gen_bool(0.5) { Arrow::Forward } else { Arrow::Backward };
            let (src, tgt) = match dir {
                Arrow::Forward => (dims[i], dims[i + 1]),
                Arrow::Backward => (dims[i + 1], dims[i]),
            };
            let sparse = rng.gen_bool(0.4);
            let rows: Vec<Vec<i64>> = (0..tgt)
                .map(|_| {
                    (0..src).map(|_| if sparse && rng.gen_bool(0.6) { 0 } else { rng.gen_range(0..p) as i64 }).collect()
                })
                .collect();
            let m = if tgt == 0 { FieldMatrix::zeros(0, src, prime) } else { FieldMatrix::from_rows(&rows, prime) };
            (dir, m)
        })
        .collect();
    ZigzagModule::new(prime, 0, dims, arrows).unwrap()
}

/// Identity of a bar for comparisons: dimension, raw positions and the
/// index pairs of its filtration over the fields it meets.
pub type BarKey = (usize, usize, usize, Vec<(Vec<SimplexId>, Vec<SimplexId>)>);

pub fn bar_key(f: &FiltrationSequence, bar: &Bar) -> BarKey {
    let content = (bar.birth_field()..=bar.death_field())
        .map(|t| {
            let ip = &f.pairs[t - f.start_field()];
            (ip.p.to_vec(), ip.e.to_vec())
        })
        .collect();
    (bar.dim, bar.birth, bar.death, content)
}

/// Maximal bars of the redundancy order, checked against every filtration.
/// Filtrations carrying the same pairs over the fields of a bar x restrict
/// to the same module there, so each has a bar meeting that window exactly
/// in x's positions. x is maximal when each of them has such a bar that
/// stays inside the window, i.e. none of them extends every copy of x.
pub fn maximal_bars(filtrations: &[FiltrationSequence], bars: &[Vec<Bar>]) -> BTreeSet<BarKey> {
    let mut out = BTreeSet::new();
    for (i, bs) in bars.iter().enumerate() {
        for x in bs {
            let (a, b) = (x.birth_field(), x.death_field());
            let maximal = (0..filtrations.len())
                .filter(|&j| filtrations[i].same_subfiltration(&filtrations[j], a, b))
                .all(|j| bars[j].contains(x));
            if maximal {
                out.insert(bar_key(&filtrations[i], x));
            }
        }
    }
    out
}

pub fn kept_keys(filtrations: &[FiltrationSequence], kept: &[SourcedBar]) -> BTreeSet<BarKey> {
    kept.iter().map(|s| bar_key(&filtrations[s.filtration], &s.bar)).collect()
}

/// Every maximal chain of linked sets, by extending each start in every
/// possible way.
pub fn enumerate_maximal_sequences(
    counts: &[usize],
    link: &dyn Fn(usize, usize, usize) -> bool,
) -> Vec<conmorse::pipeline::Sequence> {
    let n = counts.len();
    let mut out = Vec::new();
    for start in 0..n {
        let mut partial: Vec<Vec<usize>> = (0..counts[start]).map(|m| vec![m]).collect();
        while let Some(seq) = partial.pop() {
            let end = start + seq.len() - 1;
            let extends_left = start > 0 && (0..counts[start - 1]).any(|m| link(start - 1, m, seq[0]));
            let last = *seq.last().unwrap();
            let nexts: Vec<usize> =
                if end + 1 < n { (0..counts[end + 1]).filter(|&m| link(end, last, m)).collect() } else { vec![] };
            if nexts.is_empty() && !extends_left {
                out.push(conmorse::pipeline::Sequence { start, sets: seq.clone() });
            }
            for m in nexts {
                let mut s = seq.clone();
                s.push(m);
                partial.push(s);
            }
        }
    }
    out.sort();
    out
}

/// Small named fields with one shared isolating set each.
pub fn fixture_fields() -> Vec<(String, Arc<MultivectorField>)> {
    use conmorse::fixtures::*;
    let mut out = vec![
        ("interval".to_string(), interval()),
        ("full triangle".to_string(), full_triangle()),
        ("hollow circle".to_string(), hollow_circle()),
    ];
    for (i, f) in three_field_disk(3).1.into_iter().enumerate() {
        out.push((format!("disk field {}", i + 1), f));
    }
    for (i, f) in shifted_annulus(3).1.into_iter().enumerate() {
        out.push((format!("annulus field {}", i + 1), f));
    }
    out
}
