//! Small hand-built complexes and field sequences used by tests, examples
//! and benchmarks.
//!
//! Ring triangulations: ring `r` has vertices `r*m + i (+1 with a center)`,
//! and the band between ring `r` (inner, L) and ring `r+1` (outer, H) has
//! triangles X_i = [l_i, h_i, h_{i+1}] and Y_i = [l_i, l_{i+1}, h_{i+1}].

use std::sync::Arc;

use crate::complex::{SimplexId, SimplicialComplex, Vertex};
use crate::mvf::MultivectorField;

/// Segment [0, 1] with the edge flowing to vertex 0 and vertex 1 critical.
pub fn interval() -> Arc<MultivectorField> {
    let k = Arc::new(SimplicialComplex::build(&[vec![0, 1]]).unwrap());
    Arc::new(MultivectorField::build(k, &[vec![0, 2], vec![1]]).unwrap())
}

/// Filled triangle: repelling triangle over an attracting boundary cycle.
/// Ids: a0 b1 c2 ab3 ac4 bc5 abc6.
pub fn full_triangle() -> Arc<MultivectorField> {
    let k = Arc::new(SimplicialComplex::build(&[vec![0, 1, 2]]).unwrap());
    Arc::new(MultivectorField::build(k, &[vec![6], vec![0, 3], vec![1, 5], vec![2, 4]]).unwrap())
}

/// Boundary of a triangle carrying a periodic orbit.
/// Ids: a0 b1 c2 ab3 ac4 bc5.
pub fn hollow_circle() -> Arc<MultivectorField> {
    let k = Arc::new(SimplicialComplex::build(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap());
    Arc::new(MultivectorField::build(k, &[vec![0, 3], vec![1, 5], vec![2, 4]]).unwrap())
}

/// Concentric rings of `m` vertices, optionally coned to a center vertex 0.
#[derive(Debug, Clone)]
pub struct Rings {
    pub m: usize,
    pub rings: usize,
    pub center: bool,
    pub complex: Arc<SimplicialComplex>,
}

impl Rings {
    pub fn new(m: usize, rings: usize, center: bool) -> Self {
        assert!(m >= 3 && rings >= 1);
        let mut r = Rings { m, rings, center, complex: Arc::new(SimplicialComplex::empty()) };
        let mut tris: Vec<Vec<Vertex>> = Vec::new();
        if center {
            for i in 0..m {
                tris.push(vec![0, r.v(0, i), r.v(0, i + 1)]);
            }
        }
        for b in 0..rings - 1 {
            for i in 0..m {
                let [x, y] = r.band_triangles(b, i);
                tris.push(x);
                tris.push(y);
            }
        }
        if tris.is_empty() {
            tris = (0..m).map(|i| vec![r.v(0, i), r.v(0, i + 1)]).collect();
        }
        r.complex = Arc::new(SimplicialComplex::build(&tris).unwrap());
        r
    }

    /// Vertex `i` (mod m) of ring `ring`.
    pub fn v(&self, ring: usize, i: usize) -> Vertex {
        (ring * self.m + i % self.m + usize::from(self.center)) as Vertex
    }

    fn band_triangles(&self, b: usize, i: usize) -> [Vec<Vertex>; 2] {
        let (l, h) = (b, b + 1);
        [vec![self.v(l, i), self.v(h, i), self.v(h, i + 1)], vec![self.v(l, i), self.v(l, i + 1), self.v(h, i + 1)]]
    }

    pub fn id(&self, vertices: &[Vertex]) -> SimplexId {
        self.complex.id_of(vertices).expect("simplex of the ring complex")
    }

    /// Ids of every simplex of ring `ring` (vertices and edges).
    pub fn ring_ids(&self, ring: usize) -> Vec<SimplexId> {
        (0..self.m).flat_map(|i| [self.id(&[self.v(ring, i)]), self.id(&[self.v(ring, i), self.v(ring, i + 1)])]).collect()
    }

    /// Ring `ring` as a periodic orbit: vectors {v_i, [v_i, v_{i+1}]}.
    pub fn cycle(&self, ring: usize) -> Vec<Vec<SimplexId>> {
        (0..self.m)
            .map(|i| vec![self.id(&[self.v(ring, i)]), self.id(&[self.v(ring, i), self.v(ring, i + 1)])])
            .collect()
    }

    /// Band `b` flowing from its inner ring to its outer ring. Uses up the
    /// inner ring.
    pub fn outward(&self, b: usize) -> Vec<Vec<SimplexId>> {
        let (l, h) = (b, b + 1);
        let mut out = Vec::new();
        for i in 0..self.m {
            let [x, y] = self.band_triangles(b, i);
            out.push(vec![
                self.id(&[self.v(l, i)]),
                self.id(&[self.v(l, i), self.v(h, i)]),
                self.id(&[self.v(l, i), self.v(h, i + 1)]),
                self.id(&x),
            ]);
            out.push(vec![self.id(&[self.v(l, i), self.v(l, i + 1)]), self.id(&y)]);
        }
        out
    }

    /// Band `b` flowing from its outer ring to its inner ring. Uses up the
    /// outer ring.
    pub fn inward(&self, b: usize) -> Vec<Vec<SimplexId>> {
        let (l, h) = (b, b + 1);
        let mut out = Vec::new();
        for i in 0..self.m {
            let [x, y] = self.band_triangles(b, i);
            out.push(vec![
                self.id(&[self.v(h, i + 1)]),
                self.id(&[self.v(h, i + 1), self.v(l, i)]),
                self.id(&[self.v(h, i + 1), self.v(l, i + 1)]),
                self.id(&y),
            ]);
            out.push(vec![self.id(&[self.v(h, i), self.v(h, i + 1)]), self.id(&x)]);
        }
        out
    }

    /// Band `b` without its rings as a periodic repeller: vectors
    /// {[l_i, h_i], X_i} and {[l_i, h_{i+1}], Y_i}.
    pub fn repeller(&self, b: usize) -> Vec<Vec<SimplexId>> {
        let (l, h) = (b, b + 1);
        let mut out = Vec::new();
        for i in 0..self.m {
            let [x, y] = self.band_triangles(b, i);
            out.push(vec![self.id(&[self.v(l, i), self.v(h, i)]), self.id(&x)]);
            out.push(vec![self.id(&[self.v(l, i), self.v(h, i + 1)]), self.id(&y)]);
        }
        out
    }

    /// Band `b` plus its outer ring as one recurrent region that leaks into
    /// the inner ring: vectors {h_i, [l_i, h_i], [h_i, h_{i+1}], X_i} and
    /// {[l_i, h_{i+1}], Y_i}. Uses up the outer ring.
    pub fn semistable(&self, b: usize) -> Vec<Vec<SimplexId>> {
        let (l, h) = (b, b + 1);
        let mut out = Vec::new();
        for i in 0..self.m {
            let [x, y] = self.band_triangles(b, i);
            out.push(vec![
                self.id(&[self.v(h, i)]),
                self.id(&[self.v(l, i), self.v(h, i)]),
                self.id(&[self.v(h, i), self.v(h, i + 1)]),
                self.id(&x),
            ]);
            out.push(vec![self.id(&[self.v(l, i), self.v(h, i + 1)]), self.id(&y)]);
        }
        out
    }

    /// The disk inside ring 0 flowing into the center: vectors
    /// {u_i, [c, u_i]} and {[u_i, u_{i+1}], [c, u_i, u_{i+1}]}. Uses up
    /// ring 0 but not the center.
    pub fn to_center(&self) -> Vec<Vec<SimplexId>> {
        assert!(self.center);
        let mut out = Vec::new();
        for i in 0..self.m {
            let (a, b) = (self.v(0, i), self.v(0, i + 1));
            out.push(vec![self.id(&[a]), self.id(&[0, a])]);
            out.push(vec![self.id(&[a, b]), self.id(&[0, a, b])]);
        }
        out
    }

    /// Every simplex of the closed disk bounded by ring `ring` that is not
    /// on that ring.
    pub fn open_disk(&self, ring: usize) -> Vec<SimplexId> {
        assert!(self.center);
        let (lo, hi) = (self.v(ring, 0), self.v(ring + 1, 0));
        (0..self.complex.len())
            .filter(|&s| {
                let vs = self.complex.simplex(s);
                vs.iter().all(|&x| x < hi) && vs.iter().any(|&x| x < lo)
            })
            .collect()
    }

    pub fn field(&self, vectors: Vec<Vec<SimplexId>>) -> Arc<MultivectorField> {
        Arc::new(MultivectorField::build(Arc::clone(&self.complex), &vectors).expect("fixture field is valid"))
    }
}

/// Disk made of a center, rings u (0), w (1), z (2), with three fields:
///
/// 1. the open disk inside w as one critical vector (repelling region),
///    w an attracting cycle, the outer band flowing in;
/// 2. the center attracting, the band between u and w a periodic repeller,
///    w still attracting;
/// 3. the center attracting, the band between u and w merged with w into
///    a semistable cycle.
pub fn three_field_disk(m: usize) -> (Rings, Vec<Arc<MultivectorField>>) {
    let r = Rings::new(m, 3, true);
    let mut f1 = vec![r.open_disk(1)];
    f1.extend(r.cycle(1));
    f1.extend(r.inward(1));

    let mut f2 = vec![vec![r.id(&[0])]];
    f2.extend(r.to_center());
    f2.extend(r.repeller(0));
    f2.extend(r.cycle(1));
    f2.extend(r.inward(1));

    let mut f3 = vec![vec![r.id(&[0])]];
    f3.extend(r.to_center());
    f3.extend(r.semistable(0));
    f3.extend(r.inward(1));

    let fields = vec![r.field(f1), r.field(f2), r.field(f3)];
    (r, fields)
}

/// Annulus of four rings whose attracting cycle sits on ring 2, then 1,
/// then 2 again.
pub fn shifted_annulus(m: usize) -> (Rings, Vec<Arc<MultivectorField>>) {
    let r = Rings::new(m, 4, false);
    let at = |q: usize| {
        let mut vs = r.cycle(q);
        for b in 0..3 {
            vs.extend(if b < q { r.outward(b) } else { r.inward(b) });
        }
        r.field(vs)
    };
    let fields = vec![at(2), at(1), at(2)];
    (r, fields)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conley::minimal_morse_decomposition;

    #[test]
    fn ring_complexes() {
        let (r, fs) = three_field_disk(5);
        assert_eq!(r.complex.len(), 1 + 16 * 5);
        assert_eq!(fs.len(), 3);
        let (a, gs) = shifted_annulus(4);
        assert_eq!(a.complex.len(), 4 * 4 + (4 * 4 + 3 * 2 * 4) + 3 * 2 * 4);
        assert_eq!(gs.len(), 3);
    }

    #[test]
    fn disk_morse_sets() {
        let (r, fs) = three_field_disk(4);
        let n = r.complex.full_set();
        let sizes: Vec<usize> = fs.iter().map(|f| minimal_morse_decomposition(f, &n).unwrap().len()).collect();
        assert_eq!(sizes, vec![2, 3, 2]);
    }

    #[test]
    fn annulus_morse_sets() {
        let (r, fs) = shifted_annulus(4);
        let n = r.complex.full_set();
        for (f, q) in fs.iter().zip([2, 1, 2]) {
            let d = minimal_morse_decomposition(f, &n).unwrap();
            assert_eq!(d.len(), 1);
            assert_eq!(d.set(0).to_vec(), {
                let mut ids = r.ring_ids(q);
                ids.sort_unstable();
                ids
            });
        }
    }
}
