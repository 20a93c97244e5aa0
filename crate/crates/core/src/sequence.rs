//! Graphs realizing a prescribed chain `ν_{d,1} ≥ … ≥ ν_{d,k}`.
//!
//! Start from `k − 1` disjoint edges `E_1..E_{k−1}` plus a clique on
//! `2(β_k − k + 1)` vertices, then for `i = k−1, …, 1` add a clique on
//! `2(β_i − β_{i+1})` vertices joined to everything built so far except
//! `E_1..E_{i−1}`. Edge `E_l` is labeled `E:l:a`/`E:l:b`, the r-th vertex of
//! the stage-i clique `K:i:r`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::restricted::{c_disconnected_matching_number, Budget};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceSpec {
    pub betas: Vec<usize>,
}

impl SequenceSpec {
    pub fn new(betas: Vec<usize>) -> Result<Self> {
        let spec = SequenceSpec { betas };
        spec.validate()?;
        Ok(spec)
    }

    pub fn k(&self) -> usize {
        self.betas.len()
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k();
        if k == 0 {
            return Err(Error::InvalidSequence("the sequence is empty".into()));
        }
        if let Some(w) = self.betas.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidSequence(format!(
                "not non-increasing: {} is followed by {}",
                w[0], w[1]
            )));
        }
        if self.betas[k - 1] < k {
            return Err(Error::InvalidSequence(format!(
                "last entry {} is below the length {k}",
                self.betas[k - 1]
            )));
        }
        Ok(())
    }
}

/// Vertex counts of the stage graphs: `sizes[i − 1] = |V(G_i)|`. Every
/// `G_i` is the subgraph induced by the first `sizes[i − 1]` vertices of
/// the final graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stages {
    pub graph: Graph,
    pub sizes: Vec<usize>,
}

impl Stages {
    /// `G_i`, for `1 ≤ i ≤ k`.
    pub fn stage(&self, i: usize) -> Graph {
        let keep: Vec<usize> = (0..self.sizes[i - 1]).collect();
        self.graph
            .induced_subgraph(&keep)
            .expect("prefix is valid")
            .graph
    }
}

pub fn construct_stages(spec: &SequenceSpec) -> Result<Stages> {
    spec.validate()?;
    let k = spec.k();
    let beta = |i: usize| spec.betas[i - 1];
    let mut b = GraphBuilder::new();
    for l in 1..k {
        let x = b.add_vertex(format!("E:{l}:a"));
        let y = b.add_vertex(format!("E:{l}:b"));
        b.add_edge(x, y);
    }
    add_clique(&mut b, k, 2 * (beta(k) - (k - 1)), None);
    let mut sizes = vec![0; k];
    sizes[k - 1] = b.n();
    for i in (1..k).rev() {
        // E_1..E_{i−1} occupy the first 2(i − 1) ids
        add_clique(&mut b, i, 2 * (beta(i) - beta(i + 1)), Some(2 * (i - 1)));
        sizes[i - 1] = b.n();
    }
    Ok(Stages {
        graph: b.build()?,
        sizes,
    })
}

/// Adds the stage clique and joins it to every existing vertex with id at
/// least `join_from`.
fn add_clique(b: &mut GraphBuilder, stage: usize, size: usize, join_from: Option<usize>) {
    let old = b.n();
    let clique: Vec<usize> = (1..=size)
        .map(|r| b.add_vertex(format!("K:{stage}:{r}")))
        .collect();
    for (a, &x) in clique.iter().enumerate() {
        for &y in &clique[a + 1..] {
            b.add_edge(x, y);
        }
        for y in join_from.unwrap_or(old)..old {
            b.add_edge(x, y);
        }
    }
}

pub fn construct_sequence_graph(spec: &SequenceSpec) -> Result<Graph> {
    Ok(construct_stages(spec)?.graph)
}

/// Whether `ν_{d,i}(g) = β_i` for every `i`.
pub fn verify_sequence_graph(g: &Graph, spec: &SequenceSpec, budget: Budget) -> Result<bool> {
    for (c, &beta) in (1..).zip(&spec.betas) {
        if c_disconnected_matching_number(g, c, budget)? != beta {
            return Ok(false);
        }
    }
    Ok(true)
}
