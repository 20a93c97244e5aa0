//! Maximum c-disconnected matchings.
//!
//! A matching with at least `c` components in `G[V(M)]` exists exactly when
//! the vertices can be split into "unused" and `c` groups such that no edge
//! joins two different groups and every group contains an edge; the best
//! such matching is then a maximum matching of the union of the groups.
//! So instead of branching on edges we label vertices: 0 for unused, or a
//! group number `1..=c`.
//!
//! A vertex next to two different groups is forced to 0. A vertex next to
//! exactly one group `L` may only be `L` or 0. A vertex next to no group may
//! open a new group. The bound at every node is the matching number of the
//! graph on all vertices that may still be used, restricted to edges whose
//! endpoints could end up in the same group.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{matching_number_adj, maximum_matching, Matching};
use crate::restricted::{Budget, Ticker};

const UNSET: u32 = u32::MAX;
const FREE: u32 = u32::MAX - 1;

pub fn disconnected_matching_number(g: &Graph, budget: Budget) -> Result<usize> {
    c_disconnected_matching_number(g, 2, budget)
}

pub fn c_disconnected_matching_number(g: &Graph, c: usize, budget: Budget) -> Result<usize> {
    Ok(c_disconnected_matching(g, c, budget)?.len())
}

/// A maximum matching among those whose saturated vertices induce at least
/// `c` components. Returns the empty matching when nothing else qualifies.
pub fn c_disconnected_matching(g: &Graph, c: usize, budget: Budget) -> Result<Matching> {
    if c == 0 {
        return Err(Error::PreconditionViolated("c must be at least 1".into()));
    }
    Ok(solve(g, c, budget, usize::MAX)?.0)
}

/// Solver entry shared with the profile code. `upper` is a known upper
/// bound on the answer (for instance ν_{d,c-1}). Returns the matching and
/// its component count.
pub(crate) fn solve(
    g: &Graph,
    c: usize,
    budget: Budget,
    upper: usize,
) -> Result<(Matching, usize)> {
    let mm = maximum_matching(g);
    let comps = mm.analyze(g).induced_components;
    if c == 1 || comps >= c {
        return Ok((mm, comps));
    }
    let ceiling = mm.len().min(upper);
    if c > g.n() / 2 {
        return Ok((Matching::empty(), 0));
    }

    let mut s = Search {
        g,
        c: c as u32,
        label: vec![UNSET; g.n()],
        key: vec![UNSET; g.n()],
        used: 0,
        trail: Vec::new(),
        best_size: 0,
        best_keep: None,
        ceiling,
        stop: false,
        ticker: Ticker::new(budget),
        adj: vec![Vec::new(); g.n()],
    };
    s.seed_with_deletions();
    if !s.stop {
        s.node()?;
    }
    let Some(keep) = s.best_keep else {
        return Ok((Matching::empty(), 0));
    };
    let sub = g.induced_subgraph(&keep)?;
    let inner = maximum_matching(&sub.graph);
    let pairs: Vec<_> = inner
        .edges()
        .iter()
        .map(|&(u, v)| (sub.new_to_old[u], sub.new_to_old[v]))
        .collect();
    let m = Matching::new(g, &pairs)?;
    let comps = m.analyze(g).induced_components;
    if m.len() != s.best_size || comps < c {
        return Err(Error::InternalInvariantViolation(format!(
            "reconstructed matching has size {} and {comps} components, expected size {} with at least {c}",
            m.len(),
            s.best_size
        )));
    }
    Ok((m, comps))
}

struct Search<'a> {
    g: &'a Graph,
    c: u32,
    /// UNSET, 0, or a group number.
    label: Vec<u32>,
    /// Scratch per node: for unlabeled vertices the only group they may
    /// join, or FREE.
    key: Vec<u32>,
    used: u32,
    trail: Vec<usize>,
    best_size: usize,
    /// Vertex set whose maximum matching realizes `best_size`.
    best_keep: Option<Vec<usize>>,
    ceiling: usize,
    stop: bool,
    ticker: Ticker,
    adj: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Starting incumbent: delete one vertex and hope the rest falls apart
    /// into enough pieces.
    fn seed_with_deletions(&mut self) {
        for v in 0..self.g.n() {
            let rest = match self.g.delete_vertices(&[v]) {
                Ok(r) => r,
                Err(_) => continue,
            };
            if rest.graph.components().nontrivial < self.c as usize {
                continue;
            }
            let size = matching_number_adj(rest.graph.adjacency());
            if size > self.best_size {
                self.best_size = size;
                self.best_keep = Some(rest.new_to_old.clone());
                if size >= self.ceiling {
                    self.stop = true;
                    return;
                }
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("trail above mark");
            self.label[v] = UNSET;
        }
    }

    fn assign(&mut self, v: usize, l: u32) {
        self.label[v] = l;
        self.trail.push(v);
    }

    fn node(&mut self) -> Result<()> {
        self.ticker.tick()?;
        let mark = self.trail.len();
        let used_before = self.used;
        let r = self.expand();
        self.undo_to(mark);
        self.used = used_before;
        r
    }

    fn compatible(&self, x: usize, y: usize) -> bool {
        let (a, b) = (self.key[x], self.key[y]);
        a == FREE || b == FREE || a == b
    }

    fn expand(&mut self) -> Result<()> {
        let n = self.g.n();
        // forced zeros and domains
        for v in 0..n {
            if self.label[v] != UNSET {
                self.key[v] = self.label[v];
                continue;
            }
            let mut seen = FREE;
            let mut conflict = false;
            for &w in self.g.neighbors(v) {
                let l = self.label[w];
                if l == UNSET || l == 0 {
                    continue;
                }
                if seen == FREE {
                    seen = l;
                } else if seen != l {
                    conflict = true;
                    break;
                }
            }
            if conflict {
                self.assign(v, 0);
                self.key[v] = 0;
            } else {
                self.key[v] = seen;
            }
        }
        // zero-labeled vertices have their key equal to 0 and drop out
        for list in &mut self.adj {
            list.clear();
        }
        for &(x, y) in self.g.edges() {
            if self.key[x] != 0 && self.key[y] != 0 && self.compatible(x, y) {
                self.adj[x].push(y);
                self.adj[y].push(x);
            }
        }
        let bound = matching_number_adj(&self.adj);
        if bound <= self.best_size {
            return Ok(());
        }

        // every open group must still be able to get an edge
        let mut group_ok = vec![false; self.used as usize + 1];
        for &(x, y) in self.g.edges() {
            let (lx, ly) = (self.label[x], self.label[y]);
            if lx != UNSET && lx != 0 && (ly == lx || (ly == UNSET && self.key[y] == lx)) {
                group_ok[lx as usize] = true;
            }
            if ly != UNSET && ly != 0 && (lx == ly || (lx == UNSET && self.key[x] == ly)) {
                group_ok[ly as usize] = true;
            }
        }
        if group_ok[1..].iter().any(|ok| !ok) {
            return Ok(());
        }

        // new groups can only come from free vertices, pairwise disjointly
        let mut free_adj = vec![Vec::new(); n];
        for &(x, y) in self.g.edges() {
            if self.label[x] == UNSET
                && self.label[y] == UNSET
                && self.key[x] == FREE
                && self.key[y] == FREE
            {
                free_adj[x].push(y);
                free_adj[y].push(x);
            }
        }
        let missing = (self.c - self.used) as usize;
        if missing > 0 && matching_number_adj(&free_adj) < missing {
            return Ok(());
        }

        // constrained vertices first, so open groups grow and close
        let constrained = (0..n)
            .filter(|&v| self.label[v] == UNSET && self.key[v] != FREE)
            .max_by_key(|&v| (self.adj[v].len(), std::cmp::Reverse(v)));
        if let Some(v) = constrained {
            let l = self.key[v];
            for choice in [l, 0] {
                let mark = self.trail.len();
                self.assign(v, choice);
                self.node()?;
                self.undo_to(mark);
                if self.stop {
                    break;
                }
            }
            return Ok(());
        }

        let opener = (0..n)
            .filter(|&v| self.label[v] == UNSET && !free_adj[v].is_empty())
            .max_by_key(|&v| (free_adj[v].len(), std::cmp::Reverse(v)));
        match opener {
            Some(v) if self.used < self.c => {
                let mark = self.trail.len();
                self.used += 1;
                self.assign(v, self.used);
                self.node()?;
                self.undo_to(mark);
                self.used -= 1;
                if self.stop {
                    return Ok(());
                }
                self.assign(v, 0);
                self.node()?;
                self.undo_to(mark);
            }
            _ => {
                // All groups are open and nothing is constrained: every
                // remaining vertex can join group 1 at no cost, so the
                // bound is attained.
                debug_assert_eq!(self.used, self.c);
                self.record(bound);
            }
        }
        Ok(())
    }

    fn record(&mut self, value: usize) {
        if value <= self.best_size {
            return;
        }
        self.best_size = value;
        let keep = (0..self.g.n()).filter(|&v| self.key[v] != 0).collect();
        self.best_keep = Some(keep);
        if value >= self.ceiling {
            self.stop = true;
        }
    }
}
