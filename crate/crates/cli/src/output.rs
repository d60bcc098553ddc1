//! JSON shapes written by the subcommands.

use conmorse::conley::{ConleyMorseGraph, MorseDecomposition};
use conmorse::dynamics::AnchorKind;
use conmorse::pipeline::{CombinedBarcode, FiltrationSequence};
use conmorse::zigzag::Bar;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarOut {
    pub dim: usize,
    pub birth_pos: usize,
    pub death_pos: usize,
    pub birth_field: usize,
    pub death_field: usize,
    pub source: String,
}

impl BarOut {
    pub fn new(bar: &Bar, source: String) -> Self {
        BarOut {
            dim: bar.dim,
            birth_pos: bar.birth,
            death_pos: bar.death,
            birth_field: bar.birth_field(),
            death_field: bar.death_field(),
            source,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SlotOut {
    pub p: Vec<usize>,
    pub e: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiltrationOut {
    pub id: usize,
    pub start_field: usize,
    pub end_field: usize,
    /// Morse set index at each covered field.
    pub morse_sets: Vec<usize>,
    /// (P, E) for every slot, intersections included.
    pub slots: Vec<SlotOut>,
}

impl FiltrationOut {
    pub fn new(id: usize, f: &FiltrationSequence) -> Self {
        FiltrationOut {
            id,
            start_field: f.start_field(),
            end_field: f.end_field(),
            morse_sets: f.sequence.sets.clone(),
            slots: f.slots().into_iter().map(|(p, e)| SlotOut { p: p.to_vec(), e: e.to_vec() }).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexOut {
    pub set: Vec<usize>,
    pub poincare: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphOut {
    pub field: usize,
    pub vertices: Vec<VertexOut>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphOut {
    pub fn new(field: usize, g: &ConleyMorseGraph) -> Self {
        GraphOut {
            field,
            vertices: g.vertices.iter().map(|v| VertexOut { set: v.set.to_vec(), poincare: v.poincare.clone() }).collect(),
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BarcodeOut {
    pub graph_bars: Vec<BarOut>,
    pub conley_bars: Vec<BarOut>,
    pub filtrations: Vec<FiltrationOut>,
    pub cm_graphs: Vec<GraphOut>,
}

impl BarcodeOut {
    pub fn new(out: &CombinedBarcode) -> Self {
        BarcodeOut {
            graph_bars: out.graph_bars.iter().map(|b| BarOut::new(b, "graph".into())).collect(),
            conley_bars: out
                .conley_bars
                .iter()
                .map(|s| BarOut::new(&s.bar, format!("filtration:{}", s.filtration)))
                .collect(),
            filtrations: out.filtrations.iter().enumerate().map(|(i, f)| FiltrationOut::new(i, f)).collect(),
            cm_graphs: out.steps.iter().enumerate().map(|(i, s)| GraphOut::new(i + 1, &s.graph)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorseSetOut {
    pub simplices: Vec<usize>,
    pub kind: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorseOut {
    pub field: usize,
    pub morse_sets: Vec<MorseSetOut>,
    /// Hasse diagram of the order, as (higher, lower) index pairs.
    pub order: Vec<[usize; 2]>,
}

impl MorseOut {
    pub fn new(field: usize, d: &MorseDecomposition) -> Self {
        MorseOut {
            field,
            morse_sets: (0..d.len())
                .map(|i| MorseSetOut {
                    simplices: d.set(i).to_vec(),
                    kind: match d.anchor(i) {
                        AnchorKind::CriticalVector => "critical".into(),
                        AnchorKind::MultiVectorCycle => "cycle".into(),
                    },
                })
                .collect(),
            order: d.hasse_edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}
