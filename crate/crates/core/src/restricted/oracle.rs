//! Ground-truth matching numbers by enumerating every matching.
//!
//! Nothing here is shared with the branch-and-bound solvers: each edge is
//! either skipped or taken when both ends are still free, and every
//! resulting matching is classified with [`crate::matching::analyze`].

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{analyze, Matching};
use crate::restricted::MatchingNumbers;

/// Default edge cap for [`oracle_enumerate`].
pub const ORACLE_EDGE_LIMIT: usize = 24;

pub fn oracle_enumerate(g: &Graph) -> Result<MatchingNumbers> {
    oracle_enumerate_with_limit(g, ORACLE_EDGE_LIMIT)
}

/// Same as [`oracle_enumerate`] with a caller-chosen edge cap. The running
/// time is proportional to the number of matchings, which for sparse
/// graphs stays manageable well past the default cap.
pub fn oracle_enumerate_with_limit(g: &Graph, edge_limit: usize) -> Result<MatchingNumbers> {
    if g.m() > edge_limit {
        return Err(Error::TooLarge {
            what: "edge count",
            actual: g.m(),
            limit: edge_limit,
        });
    }
    let mut e = Enumerator {
        g,
        used: vec![false; g.n()],
        current: Vec::new(),
        nu: 0,
        nu_s: 0,
        by_components: vec![0; g.n() / 2 + 2],
    };
    e.walk(0);

    // best size among matchings with at least c components
    let mut at_least = e.by_components.clone();
    for c in (0..at_least.len() - 1).rev() {
        at_least[c] = at_least[c].max(at_least[c + 1]);
    }
    let chain: Vec<usize> = (1..=e.nu_s).map(|c| at_least[c]).collect();
    Ok(MatchingNumbers {
        nu: e.nu,
        nu_s: e.nu_s,
        nu_d: chain.get(1).copied().unwrap_or(0),
        chain,
    })
}

struct Enumerator<'a> {
    g: &'a Graph,
    used: Vec<bool>,
    current: Vec<(usize, usize)>,
    nu: usize,
    nu_s: usize,
    /// largest matching with exactly `k` induced components
    by_components: Vec<usize>,
}

impl Enumerator<'_> {
    fn walk(&mut self, i: usize) {
        let edges = self.g.edges();
        if i == edges.len() {
            self.classify();
            return;
        }
        self.walk(i + 1);
        let (u, v) = edges[i];
        if !self.used[u] && !self.used[v] {
            self.used[u] = true;
            self.used[v] = true;
            self.current.push((u, v));
            self.walk(i + 1);
            self.current.pop();
            self.used[u] = false;
            self.used[v] = false;
        }
    }

    fn classify(&mut self) {
        let m = Matching::new(self.g, &self.current).expect("enumerated matchings are valid");
        let a = analyze(self.g, &m);
        let k = m.len();
        self.nu = self.nu.max(k);
        if a.is_induced {
            self.nu_s = self.nu_s.max(k);
        }
        let slot = &mut self.by_components[a.induced_components];
        *slot = (*slot).max(k);
    }
}
