//! ν = ν_{d,j} on graphs of diameter at most 3.
//!
//! In such a graph any two components of `G[V(M)]` are at distance two, so
//! they are separated by a single vertex; equality holds iff deleting some
//! vertex leaves at least `j` non-trivial components without lowering ν.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::matching_number;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterWitness {
    pub vertex: usize,
    pub nontrivial_components: usize,
    pub matching_preserved: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterDecision {
    pub equal: bool,
    pub witness: Option<DiameterWitness>,
}

impl DiameterDecision {
    fn no() -> Self {
        DiameterDecision {
            equal: false,
            witness: None,
        }
    }
}

fn check_shape(g: &Graph, j: usize, max_diameter: usize) -> Result<()> {
    if j < 2 {
        return Err(Error::PreconditionViolated(format!(
            "j must be at least 2, got {j}"
        )));
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.m() == 0 {
        return Err(Error::PreconditionViolated("graph has no edges".into()));
    }
    match g.diameter()?.finite() {
        None => Err(Error::PreconditionViolated("graph is disconnected".into())),
        Some(d) if d > max_diameter => Err(Error::PreconditionViolated(format!(
            "diameter exceeds {max_diameter} (it is {d})"
        ))),
        Some(_) => Ok(()),
    }
}

/// Tries every vertex in ascending order and reports the first one that
/// works.
pub fn decide_nu_eq_nudj_small_diameter(g: &Graph, j: usize) -> Result<DiameterDecision> {
    check_shape(g, j, 3)?;
    let nu = matching_number(g);
    for v in 0..g.n() {
        let rest = g.delete_vertices(&[v])?.graph;
        let nontrivial = rest.components().nontrivial;
        if nontrivial < j {
            continue;
        }
        if matching_number(&rest) == nu {
            return Ok(DiameterDecision {
                equal: true,
                witness: Some(DiameterWitness {
                    vertex: v,
                    nontrivial_components: nontrivial,
                    matching_preserved: true,
                }),
            });
        }
    }
    Ok(DiameterDecision::no())
}

/// Diameter-2 shortcut: only universal vertices whose removal leaves a
/// perfectly matchable graph with at least `j` non-trivial components.
pub fn decide_nu_eq_nudj_diameter2(g: &Graph, j: usize) -> Result<DiameterDecision> {
    check_shape(g, j, 2)?;
    let n = g.n();
    for v in (0..n).filter(|&v| g.degree(v) == n - 1) {
        let rest = g.delete_vertices(&[v])?.graph;
        let nontrivial = rest.components().nontrivial;
        if nontrivial < j || rest.n() % 2 == 1 {
            continue;
        }
        if 2 * matching_number(&rest) == rest.n() {
            return Ok(DiameterDecision {
                equal: true,
                witness: Some(DiameterWitness {
                    vertex: v,
                    nontrivial_components: nontrivial,
                    matching_preserved: true,
                }),
            });
        }
    }
    Ok(DiameterDecision::no())
}
