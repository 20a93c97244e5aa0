use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::matching::Matching;

/// A gadget graph with role labels, its declared bipartition and the
/// matching number the construction guarantees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionArtifact {
    pub graph: Graph,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub metadata: BTreeMap<String, usize>,
    pub predicted_nu: usize,
}

impl ReductionArtifact {
    pub(crate) fn assemble(
        graph: Graph,
        mut v1: Vec<usize>,
        mut v2: Vec<usize>,
        metadata: BTreeMap<String, usize>,
        predicted_nu: usize,
    ) -> Result<Self> {
        v1.sort_unstable();
        v2.sort_unstable();
        let a = ReductionArtifact {
            graph,
            v1,
            v2,
            metadata,
            predicted_nu,
        };
        if !a.bipartition().is_valid_for(&a.graph) {
            return Err(Error::InternalInvariantViolation(
                "declared sides are not a bipartition of the gadget".into(),
            ));
        }
        Ok(a)
    }

    pub fn bipartition(&self) -> Bipartition {
        Bipartition {
            side_one: self.v1.clone(),
            side_two: self.v2.clone(),
        }
    }

    pub fn meta(&self, key: &str) -> Option<usize> {
        self.metadata.get(key).copied()
    }

    /// Label → vertex lookup table.
    pub fn label_index(&self) -> LabelIndex {
        LabelIndex::new(&self.graph)
    }
}

/// Resolves role labels to vertex ids.
pub struct LabelIndex {
    map: HashMap<String, usize>,
}

impl LabelIndex {
    pub fn new(g: &Graph) -> Self {
        LabelIndex {
            map: g.labels().iter().map(|(&v, l)| (l.clone(), v)).collect(),
        }
    }

    pub fn get(&self, label: &str) -> Option<usize> {
        self.map.get(label).copied()
    }

    /// Like [`LabelIndex::get`] but reports a missing label as an error.
    pub fn id(&self, label: &str) -> Result<usize> {
        self.get(label).ok_or_else(|| {
            Error::PreconditionViolated(format!("artifact has no vertex labeled `{label}`"))
        })
    }
}

/// Pairs consecutive vertices: `[a, b, c, d]` → `ab, cd`.
pub(crate) fn pair_up(path: &[usize], out: &mut Vec<(usize, usize)>) {
    debug_assert!(path.len().is_multiple_of(2));
    for w in path.chunks_exact(2) {
        out.push((w[0], w[1]));
    }
}

/// Validates a constructed witness: right size, and exactly `components`
/// components in the subgraph it induces.
pub(crate) fn checked_witness(
    g: &Graph,
    pairs: &[(usize, usize)],
    size: usize,
    components: usize,
) -> Result<Matching> {
    let m = Matching::new(g, pairs).map_err(|e| {
        Error::InternalInvariantViolation(format!("witness is not a matching: {e}"))
    })?;
    let a = m.analyze(g);
    if m.len() != size || a.induced_components != components {
        return Err(Error::InternalInvariantViolation(format!(
            "witness has size {} with {} components, expected size {size} with {components}",
            m.len(),
            a.induced_components
        )));
    }
    Ok(m)
}
