//! Edge-wise bounds on the induced matching number, and the disequality
//! certificate for ν_d ≠ ν_s built on them.
//!
//! For an edge `uv`, an induced matching through `uv` is `uv` plus an
//! induced matching of `G - N[{u,v}]`, which is at most ν of that graph and
//! drops by one more unless ν = ν_s there. Maximizing over edges gives
//! `s(G) ≥ ν_s(G)`.

use serde::Serialize;

use crate::deciders::cw::decide_nu_eq_nus;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{matching_number, Matching};
use crate::restricted::{disconnected_matching_number, induced_matching_number, Budget};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeBound {
    pub edge: (usize, usize),
    /// ν(G − N[{u,v}])
    pub residual_nu: usize,
    /// whether ν = ν_s on the residual graph
    pub indicator: bool,
}

impl EdgeBound {
    pub fn value(&self) -> usize {
        self.residual_nu + usize::from(self.indicator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SBoundReport {
    pub s_value: usize,
    pub argmax_edge: (usize, usize),
    /// One entry per edge, in lexicographic edge order.
    pub per_edge: Vec<EdgeBound>,
}

fn residual(g: &Graph, edge: (usize, usize)) -> Graph {
    g.delete_closed_neighborhood(&[edge.0, edge.1])
        .expect("edge endpoints are valid")
        .graph
}

pub fn compute_s_bound(g: &Graph) -> Result<SBoundReport> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let per_edge: Vec<EdgeBound> = g
        .edges()
        .iter()
        .map(|&edge| {
            let rest = residual(g, edge);
            EdgeBound {
                edge,
                residual_nu: matching_number(&rest),
                indicator: decide_nu_eq_nus(&rest),
            }
        })
        .collect();
    // first edge attaining the maximum, edges being in lexicographic order
    let best = per_edge.iter().fold(
        &per_edge[0],
        |acc, e| if e.value() > acc.value() { e } else { acc },
    );
    Ok(SBoundReport {
        s_value: best.value(),
        argmax_edge: best.edge,
        per_edge,
    })
}

/// `1 + max_{uv} ν(G − N[{u,v}])`.
pub fn middle_bound(g: &Graph) -> Result<usize> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(1 + max_residual_nu(g))
}

fn max_residual_nu(g: &Graph) -> usize {
    g.edges()
        .iter()
        .map(|&e| matching_number(&residual(g, e)))
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundChainReport {
    pub nu_s: usize,
    pub middle: usize,
    pub nu_d: usize,
    /// Set when every residual graph is edgeless. The edge `uv` alone is then
    /// the only matching the lower argument produces, and it is connected,
    /// so `middle ≤ ν_d` is not implied.
    pub right_inequality_vacuous: bool,
}

/// Computes `ν_s ≤ 1 + max_{uv} ν(G − N[{u,v}]) ≤ ν_d` and checks both
/// inequalities, the right one only when it is not vacuous.
pub fn check_bound_chain(g: &Graph, budget: Budget) -> Result<BoundChainReport> {
    let middle = middle_bound(g)?;
    let nu_s = induced_matching_number(g, budget)?;
    let nu_d = disconnected_matching_number(g, budget)?;
    let report = BoundChainReport {
        nu_s,
        middle,
        nu_d,
        right_inequality_vacuous: middle == 1,
    };
    if nu_s > middle {
        return Err(Error::InternalInvariantViolation(format!(
            "nu_s = {nu_s} exceeds 1 + max residual nu = {middle}"
        )));
    }
    if !report.right_inequality_vacuous && middle > nu_d {
        return Err(Error::InternalInvariantViolation(format!(
            "1 + max residual nu = {middle} exceeds nu_d = {nu_d}"
        )));
    }
    Ok(report)
}

/// A disconnected matching larger than `s(G)` proves ν_d ≠ ν_s, and can be
/// checked in polynomial time.
pub fn verify_disequality_certificate(g: &Graph, pairs: &[(usize, usize)]) -> Result<bool> {
    let m = Matching::new(g, pairs)?;
    if !m.analyze(g).is_disconnected {
        return Ok(false);
    }
    if g.m() == 0 {
        return Ok(false);
    }
    Ok(m.len() > compute_s_bound(g)?.s_value)
}
