//! Reachability dynamics of F_V restricted to a set of simplices.

use std::collections::{HashSet, VecDeque};

use crate::complex::{SimplexId, SimplexSet};
use crate::error::{Error, Result};
use crate::mvf::MultivectorField;

/// Directed graph on a domain A with σ → τ iff τ ∈ F_V(σ) ∩ A.
#[derive(Debug, Clone)]
pub struct DynDigraph {
    domain: SimplexSet,
    succ: Vec<Vec<SimplexId>>,
}

impl DynDigraph {
    pub fn new(field: &MultivectorField, domain: &SimplexSet) -> Self {
        let n = field.complex().len();
        let mut succ = vec![Vec::new(); n];
        for s in domain.iter() {
            let mut out: Vec<SimplexId> = field.fv_iter(s).filter(|&t| domain.contains(t)).collect();
            out.sort_unstable();
            out.dedup();
            succ[s] = out;
        }
        DynDigraph { domain: domain.clone(), succ }
    }

    pub fn domain(&self) -> &SimplexSet {
        &self.domain
    }

    pub fn successors(&self, s: SimplexId) -> &[SimplexId] {
        &self.succ[s]
    }

    pub fn has_edge(&self, s: SimplexId, t: SimplexId) -> bool {
        self.succ[s].binary_search(&t).is_ok()
    }

    fn predecessors(&self) -> Vec<Vec<SimplexId>> {
        let mut pred = vec![Vec::new(); self.succ.len()];
        for s in self.domain.iter() {
            for &t in &self.succ[s] {
                pred[t].push(s);
            }
        }
        pred
    }

    /// Everything reachable from `from` (which is included).
    pub fn forward_reach(&self, from: &SimplexSet) -> SimplexSet {
        reach(&self.domain, from, |s| &self.succ[s])
    }

    /// Everything that reaches `to` (which is included).
    pub fn backward_reach(&self, to: &SimplexSet) -> SimplexSet {
        let pred = self.predecessors();
        reach(&self.domain, to, |s| &pred[s])
    }

    /// Strongly connected components, each sorted, ordered by minimal member.
    pub fn sccs(&self) -> Vec<Vec<SimplexId>> {
        let n = self.succ.len();
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comps = Vec::new();
        let mut counter = 0;
        for root in self.domain.iter() {
            if index[root] != UNSEEN {
                continue;
            }
            // (node, next successor position)
            let mut call: Vec<(SimplexId, usize)> = vec![(root, 0)];
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if let Some(&w) = self.succ[v].get(*pos) {
                    *pos += 1;
                    if index[w] == UNSEEN {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
        comps.sort_unstable_by_key(|c| c[0]);
        comps
    }

    /// Shortest path whose first node lies in `start`, last node in `end`,
    /// and whose interior nodes all lie in `interior`. With
    /// `need_interior`, single-edge paths are not accepted.
    pub fn path_between(
        &self,
        start: &SimplexSet,
        end: &SimplexSet,
        interior: &SimplexSet,
        need_interior: bool,
    ) -> Option<Vec<SimplexId>> {
        // parent of an interior node: (previous node, previous is a start node)
        let mut parent: Vec<Option<(SimplexId, bool)>> = vec![None; self.succ.len()];
        let mut queue: VecDeque<(SimplexId, bool)> =
            start.iter().filter(|&s| self.domain.contains(s)).map(|s| (s, true)).collect();
        while let Some((v, at_start)) = queue.pop_front() {
            for &w in &self.succ[v] {
                if end.contains(w) && (!at_start || !need_interior) {
                    let mut path = vec![w, v];
                    let (mut cur, mut cur_start) = (v, at_start);
                    while !cur_start {
                        let (p, ps) = parent[cur].expect("interior node has a parent");
                        path.push(p);
                        cur = p;
                        cur_start = ps;
                    }
                    path.reverse();
                    return Some(path);
                }
                if interior.contains(w) && parent[w].is_none() {
                    parent[w] = Some((v, at_start));
                    queue.push_back((w, false));
                }
            }
        }
        None
    }
}

fn reach<'a, F>(domain: &SimplexSet, from: &SimplexSet, next: F) -> SimplexSet
where
    F: Fn(SimplexId) -> &'a [SimplexId],
{
    let mut out = from.intersection(domain);
    let mut queue: Vec<SimplexId> = out.to_vec();
    while let Some(v) = queue.pop() {
        for &w in next(v) {
            if out.insert(w) {
                queue.push(w);
            }
        }
    }
    out
}

pub fn build_digraph(field: &MultivectorField, a: &SimplexSet) -> DynDigraph {
    DynDigraph::new(field, a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnchorKind {
    CriticalVector,
    MultiVectorCycle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EssentialScc {
    pub members: SimplexSet,
    pub anchor: AnchorKind,
}

fn classify(field: &MultivectorField, comp: &[SimplexId]) -> Option<AnchorKind> {
    if comp.iter().any(|&s| field.is_critical_simplex(s)) {
        return Some(AnchorKind::CriticalVector);
    }
    let v0 = field.vector_of(comp[0]);
    comp.iter()
        .any(|&s| field.vector_of(s) != v0)
        .then_some(AnchorKind::MultiVectorCycle)
}

fn essential_of(field: &MultivectorField, g: &DynDigraph) -> Vec<EssentialScc> {
    let n = field.complex().len();
    g.sccs()
        .into_iter()
        .filter_map(|comp| {
            let anchor = classify(field, &comp)?;
            let members = SimplexSet::from_ids(n, comp);
            debug_assert!(field.is_compatible(&members) || !field.is_compatible(g.domain()));
            Some(EssentialScc { members, anchor })
        })
        .collect()
}

/// Strongly connected components of the digraph on `a` that carry an
/// essential solution.
pub fn essential_sccs(field: &MultivectorField, a: &SimplexSet) -> Vec<EssentialScc> {
    essential_of(field, &DynDigraph::new(field, a))
}

/// inv(A): simplices of A on a path inside A between essential components.
pub fn invariant_part(field: &MultivectorField, a: &SimplexSet) -> SimplexSet {
    let g = DynDigraph::new(field, a);
    let mut anchors = field.complex().empty_set();
    for c in essential_of(field, &g) {
        anchors.union_with(&c.members);
    }
    g.forward_reach(&anchors).intersection(&g.backward_reach(&anchors))
}

/// pf_N(A): simplices reachable from A by paths in N.
pub fn push_forward(field: &MultivectorField, n: &SimplexSet, a: &SimplexSet) -> Result<SimplexSet> {
    field.complex().check_closed(n, "isolating set")?;
    if let Some(witness) = a.first_outside(n) {
        return Err(Error::NotContained { witness });
    }
    Ok(DynDigraph::new(field, n).forward_reach(a))
}

/// Outcome of an isolation check. Conditions are tested in the order the
/// variants are listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isolation {
    Isolated,
    /// `witness` ∈ S carries no essential solution inside S.
    NotInvariant { witness: SimplexId },
    /// `inside` ∈ S shares a multivector with `outside` ∉ S.
    NotCompatible { inside: SimplexId, outside: SimplexId },
    /// A path in N from S back to S through simplices outside S.
    Returns { path: Vec<SimplexId> },
}

impl Isolation {
    pub fn is_isolated(&self) -> bool {
        matches!(self, Isolation::Isolated)
    }

    pub fn describe(&self) -> String {
        match self {
            Isolation::Isolated => "isolated".to_string(),
            Isolation::NotInvariant { witness } => {
                format!("simplex {witness} is not in the invariant part")
            }
            Isolation::NotCompatible { inside, outside } => {
                format!("simplex {inside} shares a multivector with {outside} outside the set")
            }
            Isolation::Returns { path } => format!("path {path:?} leaves the set and returns"),
        }
    }
}

/// Checks whether S is an isolated invariant set with isolating set N.
pub fn check_isolated(field: &MultivectorField, n: &SimplexSet, s: &SimplexSet) -> Result<Isolation> {
    field.complex().check_closed(n, "isolating set")?;
    if let Some(witness) = s.first_outside(n) {
        return Err(Error::NotContained { witness });
    }
    let inv = invariant_part(field, s);
    if let Some(witness) = s.first_outside(&inv) {
        return Ok(Isolation::NotInvariant { witness });
    }
    if let Some((inside, outside)) = field.compatibility_witness(s) {
        return Ok(Isolation::NotCompatible { inside, outside });
    }
    let g = DynDigraph::new(field, n);
    let outside = n.difference(s);
    if let Some(path) = g.path_between(s, s, &outside, true) {
        return Ok(Isolation::Returns { path });
    }
    Ok(Isolation::Isolated)
}

pub fn is_isolated(field: &MultivectorField, n: &SimplexSet, s: &SimplexSet) -> Result<bool> {
    Ok(check_isolated(field, n, s)?.is_isolated())
}

/// iscomp_N(S): S together with every simplex on a path in N from S to S.
pub fn isolated_completion(field: &MultivectorField, n: &SimplexSet, s: &SimplexSet) -> Result<SimplexSet> {
    field.complex().check_closed(n, "isolating set")?;
    if let Some(witness) = s.first_outside(n) {
        return Err(Error::NotContained { witness });
    }
    if let Some(witness) = s.first_outside(&invariant_part(field, s)) {
        return Err(Error::NotInvariant { witness });
    }
    let g = DynDigraph::new(field, n);
    let mut out = g.forward_reach(s).intersection(&g.backward_reach(s));
    out.union_with(s);
    Ok(out)
}

/// A path in N from `morse_sets[from]` to `morse_sets[to]` whose interior
/// avoids every listed set. For `from == to` the interior must be nonempty.
pub fn direct_connection(
    field: &MultivectorField,
    n: &SimplexSet,
    morse_sets: &[SimplexSet],
    from: usize,
    to: usize,
) -> Option<Vec<SimplexId>> {
    let mut interior = n.clone();
    for m in morse_sets {
        interior.difference_with(m);
    }
    DynDigraph::new(field, n).path_between(&morse_sets[from], &morse_sets[to], &interior, from == to)
}

/// Largest domain accepted by [`oracle_invariant_part`].
pub const ORACLE_LIMIT: usize = 40;

/// Exhaustive invariant part: σ is kept iff some solution inside A that
/// runs through σ and repeats a closed walk in both time directions is
/// essential when checked literally.
pub fn oracle_invariant_part(field: &MultivectorField, a: &SimplexSet) -> Result<SimplexSet> {
    if a.len() > ORACLE_LIMIT {
        return Err(Error::TooLarge(a.len()));
    }
    let nodes = a.to_vec();
    let adjacency: HashSet<(SimplexId, SimplexId)> = nodes
        .iter()
        .flat_map(|&s| field.fv(s).iter().filter(|&t| a.contains(t)).map(move |t| (s, t)).collect::<Vec<_>>())
        .collect();
    let edge = |s: SimplexId, t: SimplexId| adjacency.contains(&(s, t));
    let loops: Vec<Vec<SimplexId>> = nodes.iter().filter_map(|&x| qualifying_loop(field, &nodes, &edge, x)).collect();
    let mut out = field.complex().empty_set();
    for &sigma in &nodes {
        'search: for cb in &loops {
            let Some(into) = bfs_path(&nodes, &edge, &cb[..1], sigma) else { continue };
            for cf in &loops {
                let Some(outof) = bfs_path_to_cycle(&nodes, &edge, sigma, cf) else { continue };
                if literal_essential(field, &edge, cb, &into, &outof, cf) {
                    out.insert(sigma);
                    break 'search;
                }
            }
        }
    }
    Ok(out)
}

/// A closed walk from `x` that is a periodic essential solution: the
/// self-loop of a critical vector, or a round trip through another vector.
fn qualifying_loop(
    field: &MultivectorField,
    nodes: &[SimplexId],
    edge: &dyn Fn(SimplexId, SimplexId) -> bool,
    x: SimplexId,
) -> Option<Vec<SimplexId>> {
    if edge(x, x) && field.is_critical(field.vector_of(x)) {
        return Some(vec![x]);
    }
    for &y in nodes {
        if field.vector_of(y) == field.vector_of(x) {
            continue;
        }
        if let (Some(there), Some(back)) = (bfs_path(nodes, edge, &[x], y), bfs_path(nodes, edge, &[y], x)) {
            let mut walk = there;
            walk.extend_from_slice(&back[1..back.len() - 1]);
            return Some(walk);
        }
    }
    None
}

fn bfs_path(
    nodes: &[SimplexId],
    edge: &dyn Fn(SimplexId, SimplexId) -> bool,
    from: &[SimplexId],
    to: SimplexId,
) -> Option<Vec<SimplexId>> {
    let mut parent: std::collections::HashMap<SimplexId, Option<SimplexId>> =
        from.iter().map(|&s| (s, None)).collect();
    let mut queue: VecDeque<SimplexId> = from.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![v];
            let mut cur = v;
            while let Some(Some(p)) = parent.get(&cur) {
                path.push(*p);
                cur = *p;
            }
            path.reverse();
            return Some(path);
        }
        for &w in nodes {
            if !parent.contains_key(&w) && edge(v, w) {
                parent.insert(w, Some(v));
                queue.push_back(w);
            }
        }
    }
    None
}

fn bfs_path_to_cycle(
    nodes: &[SimplexId],
    edge: &dyn Fn(SimplexId, SimplexId) -> bool,
    from: SimplexId,
    cycle: &[SimplexId],
) -> Option<Vec<SimplexId>> {
    cycle
        .iter()
        .filter_map(|&c| bfs_path(nodes, edge, &[from], c))
        .min_by_key(|p| p.len())
}

fn rotate_to(cycle: &[SimplexId], start: SimplexId) -> Vec<SimplexId> {
    let k = cycle.iter().position(|&c| c == start).expect("node on cycle");
    cycle[k..].iter().chain(&cycle[..k]).copied().collect()
}

/// Builds Cb^r · into · outof · Cf^r and checks the essential-solution
/// condition for every position away from the truncated ends.
fn literal_essential(
    field: &MultivectorField,
    edge: &dyn Fn(SimplexId, SimplexId) -> bool,
    cb: &[SimplexId],
    into: &[SimplexId],
    outof: &[SimplexId],
    cf: &[SimplexId],
) -> bool {
    const R: usize = 3;
    let back = rotate_to(cb, into[0]);
    let last = *outof.last().unwrap();
    let fwd = rotate_to(cf, last);
    let mut seq = Vec::new();
    for _ in 0..R {
        seq.extend_from_slice(&back);
    }
    seq.extend_from_slice(into);
    seq.extend_from_slice(&outof[1..]);
    for _ in 0..R {
        seq.extend_from_slice(&fwd[1..]);
        seq.push(fwd[0]);
    }
    if seq.windows(2).any(|w| !edge(w[0], w[1])) {
        return false;
    }
    let lo = back.len() * (R - 1);
    let hi = seq.len() - fwd.len() * (R - 1);
    let vec_at: Vec<usize> = seq.iter().map(|&s| field.vector_of(s)).collect();
    (lo..hi).all(|i| {
        field.is_critical(vec_at[i])
            || (vec_at[..i].iter().any(|&v| v != vec_at[i]) && vec_at[i + 1..].iter().any(|&v| v != vec_at[i]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use std::sync::Arc;

    fn field(raw: &[Vec<u32>], parts: &[Vec<SimplexId>]) -> MultivectorField {
        let k = Arc::new(SimplicialComplex::build(raw).unwrap());
        MultivectorField::build(k, parts).unwrap()
    }

    fn interval() -> MultivectorField {
        field(&[vec![0, 1]], &[vec![0, 2], vec![1]])
    }

    // a=0 b=1 c=2 ab=3 ac=4 bc=5
    fn cyclic_circle() -> MultivectorField {
        field(&[vec![0, 1], vec![1, 2], vec![0, 2]], &[vec![0, 3], vec![1, 5], vec![2, 4]])
    }

    // boundary flows a→b→c→a, triangle critical
    fn triangle() -> MultivectorField {
        field(&[vec![0, 1, 2]], &[vec![6], vec![0, 3], vec![1, 5], vec![2, 4]])
    }

    fn set(f: &MultivectorField, ids: &[SimplexId]) -> SimplexSet {
        f.complex().set_of(ids.iter().copied())
    }

    #[test]
    fn digraph_edges() {
        let f = interval();
        let g = build_digraph(&f, &f.complex().full_set());
        assert_eq!(g.successors(0), &[0, 2]);
        assert_eq!(g.successors(2), &[0, 1, 2]);
        assert_eq!(g.successors(1), &[1]);
        let c = cyclic_circle();
        let g = build_digraph(&c, &c.complex().full_set());
        assert_eq!(g.successors(4), &[0, 2, 4]);
        let g = build_digraph(&f, &set(&f, &[1]));
        assert_eq!(g.successors(1), &[1]);
    }

    #[test]
    fn essential_components() {
        let f = interval();
        let e = essential_sccs(&f, &f.complex().full_set());
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].members.to_vec(), vec![1]);
        assert_eq!(e[0].anchor, AnchorKind::CriticalVector);
        let c = cyclic_circle();
        let e = essential_sccs(&c, &c.complex().full_set());
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].members.len(), 6);
        assert_eq!(e[0].anchor, AnchorKind::MultiVectorCycle);
        assert!(essential_sccs(&c, &set(&c, &[0, 3])).is_empty());
    }

    #[test]
    fn invariant_parts() {
        let f = interval();
        assert_eq!(invariant_part(&f, &f.complex().full_set()).to_vec(), vec![1]);
        let c = cyclic_circle();
        assert_eq!(invariant_part(&c, &c.complex().full_set()).len(), 6);
        let t = triangle();
        assert_eq!(invariant_part(&t, &t.complex().full_set()).len(), 7);
        for fx in [&f, &c, &t] {
            let all = fx.complex().full_set();
            assert_eq!(oracle_invariant_part(fx, &all).unwrap(), invariant_part(fx, &all));
        }
        assert!(oracle_invariant_part(&c, &set(&c, &[0, 3])).unwrap().is_empty());
    }

    #[test]
    fn push_forwards() {
        let f = interval();
        let all = f.complex().full_set();
        assert_eq!(push_forward(&f, &all, &set(&f, &[0])).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(push_forward(&f, &all, &set(&f, &[1])).unwrap().to_vec(), vec![1]);
        assert!(push_forward(&f, &all, &f.complex().empty_set()).unwrap().is_empty());
        assert_eq!(
            push_forward(&f, &set(&f, &[1]), &set(&f, &[0])),
            Err(Error::NotContained { witness: 0 })
        );
        assert!(matches!(push_forward(&f, &set(&f, &[2]), &f.complex().empty_set()), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn isolation() {
        let f = interval();
        let all = f.complex().full_set();
        assert!(is_isolated(&f, &all, &set(&f, &[1])).unwrap());
        let t = triangle();
        let all = t.complex().full_set();
        assert!(is_isolated(&t, &all, &set(&t, &[0, 1, 2, 3, 4, 5])).unwrap());
        assert!(is_isolated(&t, &all, &set(&t, &[6])).unwrap());
        assert_eq!(
            check_isolated(&t, &all, &set(&t, &[0, 3])).unwrap(),
            Isolation::NotInvariant { witness: 0 }
        );
    }

    #[test]
    fn completion_of_isolated_sets_is_trivial() {
        // a=0 b=1 c=2 ab=3 bc=4, all singletons
        let f = field(&[vec![0, 1], vec![1, 2]], &[vec![0], vec![2], vec![1], vec![3], vec![4]]);
        let all = f.complex().full_set();
        assert_eq!(isolated_completion(&f, &all, &set(&f, &[0, 2])).unwrap().to_vec(), vec![0, 2]);
        let g = field(&[vec![0, 1], vec![1, 2]], &[vec![0, 3], vec![1], vec![2, 4]]);
        let all = g.complex().full_set();
        let s = set(&g, &[1]);
        assert_eq!(isolated_completion(&g, &all, &s).unwrap(), s);
        let c = cyclic_circle();
        let all = c.complex().full_set();
        assert_eq!(isolated_completion(&c, &all, &all).unwrap(), all);
        assert_eq!(
            isolated_completion(&c, &all, &set(&c, &[0, 3])),
            Err(Error::NotInvariant { witness: 0 })
        );
    }

    #[test]
    fn completion_through_a_loop() {
        // a=0 b=1 c=2 ab=3 ac=4 bc=5; a, b, ab, ac critical, {c, bc} regular
        let f = field(&[vec![0, 1], vec![1, 2], vec![0, 2]], &[vec![0], vec![1], vec![2, 5], vec![3], vec![4]]);
        let all = f.complex().full_set();
        let s = set(&f, &[0, 1]);
        assert_eq!(isolated_completion(&f, &all, &s).unwrap(), s);
        // ac → c → bc → b returns to S
        let s = set(&f, &[0, 1, 4]);
        assert_eq!(isolated_completion(&f, &all, &s).unwrap().to_vec(), vec![0, 1, 2, 4, 5]);
        assert!(!is_isolated(&f, &all, &s).unwrap());
        let done = isolated_completion(&f, &all, &s).unwrap();
        assert!(is_isolated(&f, &all, &done).unwrap());
    }

    #[test]
    fn direct_connections() {
        let t = triangle();
        let all = t.complex().full_set();
        let sets = vec![set(&t, &[6]), set(&t, &[0, 1, 2, 3, 4, 5])];
        let p = direct_connection(&t, &all, &sets, 0, 1).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p[0], 6);
        assert!(direct_connection(&t, &all, &sets, 1, 0).is_none());
        let f = interval();
        let all = f.complex().full_set();
        assert!(direct_connection(&f, &all, &[set(&f, &[1])], 0, 0).is_none());
        let two = field(&[vec![0], vec![1]], &[vec![0], vec![1]]);
        let all = two.complex().full_set();
        assert!(direct_connection(&two, &all, &[set(&two, &[0]), set(&two, &[1])], 0, 1).is_none());
    }

    #[test]
    fn self_connection_needs_interior() {
        // a=0 b=1 c=2 ab=3 bc=4; ab and c critical, {b, bc} regular
        let f = field(&[vec![0, 1], vec![1, 2]], &[vec![0], vec![3], vec![1, 4], vec![2]]);
        let all = f.complex().full_set();
        let s = set(&f, &[2, 3]);
        assert_eq!(check_isolated(&f, &all, &s).unwrap(), Isolation::Returns { path: vec![3, 1, 4, 2] });
        assert_eq!(direct_connection(&f, &all, &[s.clone()], 0, 0), Some(vec![3, 1, 4, 2]));
        assert!(direct_connection(&f, &all, &[set(&f, &[2])], 0, 0).is_none());
    }
}
