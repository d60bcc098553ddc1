//! Input bundle: parsing, validation and conversion to library types.

use std::path::Path;
use std::sync::Arc;

use conmorse::complex::{SimplexId, SimplexSet, SimplicialComplex, Vertex};
use conmorse::conley::MorseDecomposition;
use conmorse::linalg::Prime;
use conmorse::mvf::MultivectorField;
use conmorse::pipeline::PipelineInput;
use serde::Deserialize;

use crate::Failure;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Isolating {
    Shared(Vec<SimplexId>),
    PerField(Vec<Vec<SimplexId>>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputBundle {
    pub complex: Vec<Vec<Vertex>>,
    pub fields: Vec<Vec<Vec<SimplexId>>>,
    #[serde(default)]
    pub isolating: Option<Isolating>,
    #[serde(default)]
    pub char: Option<u32>,
    #[serde(default)]
    pub thicken: Option<usize>,
    #[serde(default)]
    pub decompositions: Option<Vec<Vec<Vec<SimplexId>>>>,
}

pub fn read_bundle(path: &Path) -> Result<InputBundle, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// A bundle converted to library objects.
pub struct Loaded {
    pub complex: Arc<SimplicialComplex>,
    pub fields: Vec<Arc<MultivectorField>>,
    pub isolating: Vec<SimplexSet>,
    pub decompositions: Option<Vec<Vec<SimplexSet>>>,
    pub prime: Prime,
    pub thicken: usize,
    /// Non-fatal remarks, e.g. isolating sets that had to be closed.
    pub warnings: Vec<String>,
}

impl Loaded {
    pub fn pipeline_input(&self) -> PipelineInput {
        PipelineInput {
            fields: self.fields.clone(),
            isolating: self.isolating.clone(),
            decompositions: self.decompositions.clone(),
            prime: self.prime,
            thicken: self.thicken,
        }
    }

    pub fn isolating_set(&self, i: usize) -> &SimplexSet {
        if self.isolating.len() == 1 {
            &self.isolating[0]
        } else {
            &self.isolating[i]
        }
    }
}

fn index_set(k: &SimplicialComplex, ids: &[SimplexId], what: &str, problems: &mut Vec<String>) -> SimplexSet {
    for &s in ids.iter().filter(|&&s| s >= k.len()) {
        problems.push(format!("{what}: simplex index {s} is out of range (complex has {} simplices)", k.len()));
    }
    k.set_of(ids.iter().copied().filter(|&s| s < k.len()))
}

/// Converts the bundle, collecting every violation instead of stopping at
/// the first. `char_flag` and `thicken_flag` override the file's options.
pub fn load(bundle: &InputBundle, char_flag: Option<u32>, thicken_flag: Option<usize>) -> Result<Loaded, Vec<String>> {
    let mut problems = Vec::new();
    let mut warnings = Vec::new();
    let complex = match SimplicialComplex::build(&bundle.complex) {
        Ok(k) => Arc::new(k),
        Err(e) => return Err(vec![format!("complex: {e}")]),
    };
    let prime = match Prime::new(char_flag.or(bundle.char).unwrap_or(2)) {
        Ok(p) => p,
        Err(e) => return Err(vec![format!("characteristic: {e}")]),
    };
    if bundle.fields.is_empty() {
        problems.push("fields: empty input".to_string());
    }
    let mut fields = Vec::new();
    for (i, parts) in bundle.fields.iter().enumerate() {
        match MultivectorField::build(Arc::clone(&complex), parts) {
            Ok(f) => fields.push(Arc::new(f.with_prime(prime))),
            Err(e) => problems.push(format!("field {}: {e}", i + 1)),
        }
    }
    let raw_sets: Vec<Vec<SimplexId>> = match &bundle.isolating {
        None => vec![(0..complex.len()).collect()],
        Some(Isolating::Shared(ids)) => vec![ids.clone()],
        Some(Isolating::PerField(sets)) => {
            if sets.len() != bundle.fields.len() {
                problems.push(format!(
                    "isolating: {} sets given for {} fields",
                    sets.len(),
                    bundle.fields.len()
                ));
            }
            sets.clone()
        }
    };
    let mut isolating = Vec::new();
    for (i, ids) in raw_sets.iter().enumerate() {
        let what = if raw_sets.len() == 1 { "isolating set".to_string() } else { format!("isolating set {}", i + 1) };
        let set = index_set(&complex, ids, &what, &mut problems);
        let closed = complex.closure(&set);
        if closed != set {
            warnings.push(format!("{what} is not closed; using its closure ({} simplices added)", closed.len() - set.len()));
        }
        isolating.push(closed);
    }
    let decompositions = bundle.decompositions.as_ref().map(|ds| {
        if ds.len() != bundle.fields.len() {
            problems.push(format!("decompositions: {} given for {} fields", ds.len(), bundle.fields.len()));
        }
        ds.iter()
            .enumerate()
            .map(|(i, sets)| {
                sets.iter().map(|s| index_set(&complex, s, &format!("decomposition {}", i + 1), &mut problems)).collect()
            })
            .collect::<Vec<Vec<SimplexSet>>>()
    });
    if problems.is_empty() {
        for (i, f) in fields.iter().enumerate() {
            let n = if isolating.len() == 1 { &isolating[0] } else { &isolating[i] };
            if let Some((inside, outside)) = f.compatibility_witness(n) {
                problems.push(format!(
                    "isolating set {}: not a union of vectors of field {} (simplex {inside} is in, {outside} of the same vector is not)",
                    if isolating.len() == 1 { 1 } else { i + 1 },
                    i + 1
                ));
            }
            if let Some(ds) = &decompositions {
                if let Err(e) = MorseDecomposition::from_sets(f, n, ds[i].clone()) {
                    problems.push(format!("decomposition {}: {e}", i + 1));
                }
            }
        }
    }
    if !problems.is_empty() {
        return Err(problems);
    }
    Ok(Loaded {
        complex,
        fields,
        isolating,
        decompositions,
        prime,
        thicken: thicken_flag.or(bundle.thicken).unwrap_or(0),
        warnings,
    })
}
