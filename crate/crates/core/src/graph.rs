//! Undirected simple graphs with dense integer vertex ids.
//!
//! A [`Graph`] is immutable once built. Gadget constructions go through
//! [`GraphBuilder`], which hands out ids in creation order and lets every
//! vertex carry a role label such as `"t-"` or `"w:3,1"`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Normalizes an unordered pair so that the smaller id comes first.
#[inline]
pub fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: BTreeMap<usize, String>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges collapse; endpoints
    /// must be in range and distinct.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        Self::with_labels(n, edge_list, BTreeMap::new())
    }

    pub fn with_labels(
        n: usize,
        edge_list: &[(usize, usize)],
        labels: BTreeMap<usize, String>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edge_list {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert(edge_key(u, v));
        }
        if let Some((&v, _)) = labels.iter().find(|(&v, _)| v >= n) {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            labels,
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            labels: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    /// First vertex carrying exactly this label.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels
            .iter()
            .find(|(_, l)| l.as_str() == label)
            .map(|(&v, _)| v)
    }

    fn check_vertices<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> Result<()> {
        for &v in set {
            if v >= self.n {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        Ok(())
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Components {
        let mut seen = vec![false; self.n];
        let mut sets = Vec::new();
        let mut nontrivial = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            if comp.len() > 1 {
                nontrivial += 1;
            }
            sets.push(comp);
        }
        Components { sets, nontrivial }
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().sets.len() == 1
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Longest shortest-path distance, or [`Diameter::Infinite`] when the
    /// graph is disconnected.
    pub fn diameter(&self) -> Result<Diameter> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs_distances(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Ok(Diameter::Infinite),
                }
            }
        }
        Ok(Diameter::Finite(best))
    }

    /// Two-coloring by BFS. In each component the smallest id lands on
    /// `side_one`.
    pub fn bipartition(&self) -> Result<Bipartition> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap_or(false);
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return Err(Error::NotBipartite),
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut side_one, mut side_two) = (Vec::new(), Vec::new());
        for (v, c) in color.into_iter().enumerate() {
            if c == Some(false) {
                side_one.push(v);
            } else {
                side_two.push(v);
            }
        }
        Ok(Bipartition { side_one, side_two })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }

    /// `G[W]` together with the id translation in both directions. New ids
    /// follow ascending old ids; labels carry over.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<InducedSubgraph> {
        self.check_vertices(w)?;
        let keep: BTreeSet<usize> = w.iter().copied().collect();
        let new_to_old: Vec<usize> = keep.iter().copied().collect();
        let mut old_to_new = vec![None; self.n];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
            .collect();
        let labels = self
            .labels
            .iter()
            .filter_map(|(&v, l)| Some((old_to_new[v]?, l.clone())))
            .collect();
        let graph = Graph::with_labels(new_to_old.len(), &edges, labels)?;
        Ok(InducedSubgraph {
            graph,
            old_to_new,
            new_to_old,
        })
    }

    /// `N[S]`, sorted.
    pub fn closed_neighborhood(&self, s: &[usize]) -> Result<Vec<usize>> {
        self.check_vertices(s)?;
        let mut set = BTreeSet::new();
        for &v in s {
            set.insert(v);
            set.extend(self.adj[v].iter().copied());
        }
        Ok(set.into_iter().collect())
    }

    /// `G - N[S]`.
    pub fn delete_closed_neighborhood(&self, s: &[usize]) -> Result<InducedSubgraph> {
        let closed = self.closed_neighborhood(s)?;
        self.delete_vertices(&closed)
    }

    /// `G - S`.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<InducedSubgraph> {
        self.check_vertices(s)?;
        let gone: BTreeSet<usize> = s.iter().copied().collect();
        let rest: Vec<usize> = (0..self.n).filter(|v| !gone.contains(v)).collect();
        self.induced_subgraph(&rest)
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::PreconditionViolated(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n, &edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|(&v, l)| (v + shift, l.clone())));
        Graph::with_labels(self.n + other.n, &edges, labels)
            .expect("union of valid graphs is valid")
    }

    // A few named graphs used all over the tests and examples.

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).expect("complete graph")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).expect("cycle")
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).expect("star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (0..b).map(move |v| (u, a + v)))
            .collect();
        Graph::new(a + b, &edges).expect("complete bipartite")
    }
}

/// Result of [`Graph::components`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub sets: Vec<Vec<usize>>,
    /// Components containing at least one edge.
    pub nontrivial: usize,
}

impl Components {
    pub fn count(&self) -> usize {
        self.sets.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    /// True when the diameter is finite and at most `bound`.
    pub fn at_most(self, bound: usize) -> bool {
        matches!(self, Diameter::Finite(d) if d <= bound)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
pub struct Bipartition {
    pub side_one: Vec<usize>,
    pub side_two: Vec<usize>,
}

impl Bipartition {
    /// Checks that the sides partition `V(g)` and that both are independent.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut side = vec![None; g.n()];
        for (s, set) in [(0u8, &self.side_one), (1u8, &self.side_two)] {
            for &v in set {
                if v >= g.n() || side[v].is_some() {
                    return false;
                }
                side[v] = Some(s);
            }
        }
        side.iter().all(Option::is_some) && g.edges().iter().all(|&(u, v)| side[u] != side[v])
    }
}

/// `G[W]` plus id translation.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

/// Incremental construction with role labels. Ids are handed out in
/// creation order.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: BTreeMap<usize, String>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        let id = self.n;
        self.n += 1;
        self.labels.insert(id, label.into());
        id
    }

    pub fn add_unlabeled_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Adds a path over the given vertices.
    pub fn add_path(&mut self, vertices: &[usize]) {
        for w in vertices.windows(2) {
            self.add_edge(w[0], w[1]);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn build(self) -> Result<Graph> {
        Graph::with_labels(self.n, &self.edges, self.labels)
    }
}
