//! Maximum matchings and the structure of the subgraph a matching induces.

mod blossom;
mod hopcroft_karp;

pub use blossom::{matching_number_adj, maximum_matching_adj};
pub use hopcroft_karp::hopcroft_karp;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge_key, Graph};

/// A validated matching of some host graph. Edges are stored normalized
/// and sorted; the host is passed back in to the methods that need it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Checks that every pair is a host edge and that no vertex repeats.
    pub fn new(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut used = vec![false; g.n()];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= g.n() || v >= g.n() {
                return Err(Error::InvalidMatching(format!(
                    "pair ({u}, {v}) has an endpoint outside 0..{}",
                    g.n()
                )));
            }
            if !g.has_edge(u, v) {
                return Err(Error::InvalidMatching(format!("({u}, {v}) is not an edge")));
            }
            for x in [u, v] {
                if used[x] {
                    return Err(Error::InvalidMatching(format!(
                        "vertex {x} is matched twice"
                    )));
                }
                used[x] = true;
            }
            edges.push(edge_key(u, v));
        }
        edges.sort_unstable();
        Ok(Matching { edges })
    }

    fn from_mates(mate: &[Option<usize>]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| (v, w)))
            .collect();
        Matching { edges }
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `V(M)` in ascending order.
    pub fn saturated(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        s.sort_unstable();
        s
    }

    pub fn analyze(&self, g: &Graph) -> MatchingAnalysis {
        analyze(g, self)
    }

    pub fn is_maximal(&self, g: &Graph) -> bool {
        is_maximal(g, self)
    }
}

/// Structure of `G[V(M)]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingAnalysis {
    pub size: usize,
    pub saturated: Vec<usize>,
    pub induced_components: usize,
    pub is_induced: bool,
    pub is_disconnected: bool,
}

impl MatchingAnalysis {
    /// The empty matching counts as c-disconnected for every c.
    pub fn is_c_disconnected(&self, c: usize) -> bool {
        self.size == 0 || self.induced_components >= c
    }
}

pub fn analyze(g: &Graph, m: &Matching) -> MatchingAnalysis {
    let saturated = m.saturated();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in saturated.iter().enumerate() {
        index[v] = i;
    }
    // union-find over the saturated vertices
    let mut parent: Vec<usize> = (0..saturated.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut induced_edges = 0;
    let mut components = saturated.len();
    for &v in &saturated {
        for &w in g.neighbors(v) {
            if w <= v || index[w] == usize::MAX {
                continue;
            }
            induced_edges += 1;
            let (a, b) = (find(&mut parent, index[v]), find(&mut parent, index[w]));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    // every saturated vertex sits next to its partner, so no singletons
    debug_assert!(saturated.is_empty() || components <= m.len());
    MatchingAnalysis {
        size: m.len(),
        induced_components: components,
        is_induced: induced_edges == m.len(),
        is_disconnected: m.is_empty() || components >= 2,
        saturated,
    }
}

/// True iff no host edge joins two exposed vertices.
pub fn is_maximal(g: &Graph, m: &Matching) -> bool {
    let mut used = vec![false; g.n()];
    for &(u, v) in m.edges() {
        used[u] = true;
        used[v] = true;
    }
    g.edges().iter().all(|&(u, v)| used[u] || used[v])
}

/// A maximum matching. Bipartite inputs go through Hopcroft-Karp, the rest
/// through the blossom algorithm; both are deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    match g.bipartition() {
        Ok(bp) => {
            let mut left = vec![false; g.n()];
            for &v in &bp.side_one {
                left[v] = true;
            }
            Matching::from_mates(&hopcroft_karp(g.adjacency(), &left))
        }
        Err(_) => Matching::from_mates(&maximum_matching_adj(g.adjacency())),
    }
}

/// General-graph maximum matching without the bipartite fast path.
pub fn maximum_matching_general(g: &Graph) -> Matching {
    Matching::from_mates(&maximum_matching_adj(g.adjacency()))
}

pub fn matching_number(g: &Graph) -> usize {
    matching_number_adj(g.adjacency())
}
