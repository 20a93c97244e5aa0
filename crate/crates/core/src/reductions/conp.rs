//! Reduction from "ν_d(g) ≥ k" on bipartite graphs to `ν_s ≠ ν_d`.

use std::collections::BTreeMap;

use crate::deciders::middle_bound;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::matching::matching_number;
use crate::reductions::artifact::ReductionArtifact;

/// Adds `k − 1` edges `u_ℓv_ℓ`, joins every `v_ℓ` to side `A` of `g` and
/// every `u_ℓ` to side `B`. The result is bipartite with diameter at most 3,
/// and `ν_s ≠ ν_d` on it exactly when `ν_d(g) ≥ k`.
///
/// Requires `k > 1 + max_{uv} ν(g − N[{u,v}])`; smaller `k` are answered
/// directly by that bound. Original vertices keep their ids, the new ones
/// are labeled `u:l` and `v:l`.
pub fn build_conp_reduction(g: &Graph, k: usize) -> Result<ReductionArtifact> {
    let sides = g.bipartition()?;
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let bound = middle_bound(g)?;
    if k <= bound {
        return Err(Error::KTooSmall { k, bound });
    }

    let mut b = GraphBuilder::new();
    for v in 0..g.n() {
        match g.label(v) {
            Some(l) => b.add_vertex(l),
            None => b.add_unlabeled_vertex(),
        };
    }
    for &(x, y) in g.edges() {
        b.add_edge(x, y);
    }
    let mut v1 = sides.side_one.clone();
    let mut v2 = sides.side_two.clone();
    for l in 1..k {
        let u = b.add_vertex(format!("u:{l}"));
        let v = b.add_vertex(format!("v:{l}"));
        b.add_edge(u, v);
        for &a in &sides.side_one {
            b.add_edge(v, a);
        }
        for &x in &sides.side_two {
            b.add_edge(u, x);
        }
        v1.push(u);
        v2.push(v);
    }
    let out = b.build()?;
    if !out.diameter()?.at_most(3) {
        return Err(Error::InternalInvariantViolation(
            "padded graph has diameter above 3".into(),
        ));
    }
    let predicted = matching_number(&out);
    let meta = BTreeMap::from([("k".to_string(), k)]);
    ReductionArtifact::assemble(out, v1, v2, meta, predicted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restricted::oracle_enumerate_with_limit;

    fn disjoint_k2(count: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..count).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::new(2 * count, &pairs).unwrap()
    }

    #[test]
    fn two_pairs() {
        let a = build_conp_reduction(&disjoint_k2(2), 3).unwrap();
        assert_eq!(a.graph.n(), 8);
        let o = oracle_enumerate_with_limit(&a.graph, 64).unwrap();
        // ν_d of the base is 2 < 3
        assert_eq!(o.nu_s, o.nu_d);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            build_conp_reduction(&disjoint_k2(3), 3),
            Err(Error::KTooSmall { k: 3, bound: 3 })
        ));
        assert!(matches!(
            build_conp_reduction(&Graph::complete(3), 5),
            Err(Error::NotBipartite)
        ));
    }

    #[test]
    fn even_cycle() {
        let a = build_conp_reduction(&Graph::cycle(8), 4).unwrap();
        assert_eq!(a.graph.n(), 14);
        assert!(a.graph.diameter().unwrap().at_most(3));
        assert!(a.bipartition().is_valid_for(&a.graph));
    }
}
