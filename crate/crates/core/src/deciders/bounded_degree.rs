//! ν_d = ν_s for graphs of small maximum degree.
//!
//! With two or more non-trivial components ν_d = ν, so the question becomes
//! ν = ν_s. A single non-trivial component `H` with an induced matching of
//! size `2Δ(H)` has ν_d = ν_s exactly when it is a Cameron-Walker graph.
//! Anything else is small enough in ν_s to compare the two numbers exactly.

use serde::Serialize;

use crate::deciders::cw::{decide_nu_eq_nus, recognize_cameron_walker};
use crate::error::Result;
use crate::graph::Graph;
use crate::restricted::induced::induced_matching_at_least;
use crate::restricted::{disconnected_matching_number, Budget};

/// Which argument settled the question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Edgeless,
    SeveralComponents,
    StructureTheorem,
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundedDegreeDecision {
    pub equal: bool,
    pub route: Route,
}

pub fn decide_nud_eq_nus_bounded_degree(
    g: &Graph,
    budget: Budget,
) -> Result<BoundedDegreeDecision> {
    let comps = g.components();
    let decision = |equal, route| Ok(BoundedDegreeDecision { equal, route });
    match comps.nontrivial {
        0 => return decision(true, Route::Edgeless),
        1 => {}
        _ => return decision(decide_nu_eq_nus(g), Route::SeveralComponents),
    }
    let core: &Vec<usize> = comps
        .sets
        .iter()
        .find(|c| c.len() > 1)
        .expect("one non-trivial component");
    let h = g.induced_subgraph(core)?.graph;
    let target = 2 * h.max_degree();
    let ind = induced_matching_at_least(&h, target, budget)?;
    if ind.len() >= target {
        let cw = recognize_cameron_walker(&h)?.is_some();
        return decision(cw, Route::StructureTheorem);
    }
    // ind is a maximum induced matching here
    let nu_d = disconnected_matching_number(&h, budget)?;
    decision(nu_d == ind.len(), Route::Exhaustive)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decide(g: &Graph) -> BoundedDegreeDecision {
        decide_nud_eq_nus_bounded_degree(g, Budget::default()).unwrap()
    }

    #[test]
    fn examples() {
        let k3 = decide(&Graph::complete(3));
        assert_eq!((k3.equal, k3.route), (false, Route::Exhaustive));
        let two_k2 = decide(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!(
            (two_k2.equal, two_k2.route),
            (true, Route::SeveralComponents)
        );
        assert!(!decide(&Graph::path(4)).equal);
        assert!(decide(&Graph::empty(3)).equal);
    }

    #[test]
    fn isolated_vertices_are_ignored() {
        let g = Graph::path(5).disjoint_union(&Graph::empty(2));
        assert_eq!(decide(&g).equal, decide(&Graph::path(5)).equal);
    }
}
