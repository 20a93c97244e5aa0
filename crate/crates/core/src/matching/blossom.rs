//! Edmonds' augmenting-path algorithm with blossom contraction.
//!
//! Works on a bare adjacency list so the solvers can call it on scratch
//! subgraphs without building a [`crate::Graph`] first.

const NONE: usize = usize::MAX;

/// Maximum matching as a mate array (`None` for exposed vertices).
///
/// Vertices are scanned in ascending order and neighbor lists in the given
/// order, so the result is deterministic.
pub fn maximum_matching_adj(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut b = Blossom::new(adj);
    b.greedy();
    b.augment_all();
    b.mate.iter().map(|&m| (m != NONE).then_some(m)).collect()
}

/// Size of a maximum matching of the adjacency list.
pub fn matching_number_adj(adj: &[Vec<usize>]) -> usize {
    let mut b = Blossom::new(adj);
    b.greedy();
    b.augment_all();
    b.mate.iter().filter(|&&m| m != NONE).count() / 2
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
    head: usize,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
            head: 0,
        }
    }

    // Cheap warm start: most vertices get matched here and the augmenting
    // phase only has to fix up the rest.
    fn greedy(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
    }

    fn augment_all(&mut self) {
        for root in 0..self.adj.len() {
            if self.mate[root] != NONE || self.adj[root].is_empty() {
                continue;
            }
            if let Some(end) = self.find_path(root) {
                let mut v = end;
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        self.head = 0;
        while self.head < self.queue.len() {
            let v = self.queue[self.head];
            self.head += 1;
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for x in 0..n {
                        if self.in_blossom[self.base[x]] {
                            self.base[x] = cur;
                            if !self.used[x] {
                                self.used[x] = true;
                                self.queue.push(x);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }
}
