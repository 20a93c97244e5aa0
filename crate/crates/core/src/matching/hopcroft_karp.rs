//! Hopcroft-Karp for bipartite graphs: BFS layers from all free left
//! vertices, then vertex-disjoint shortest augmenting paths by DFS.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Maximum matching of a bipartite adjacency list. `left[v]` marks the side
/// of `v`; every edge must cross sides. Returns a mate array.
pub fn hopcroft_karp(adj: &[Vec<usize>], left: &[bool]) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    let mut dist = vec![u32::MAX; n];
    let lefts: Vec<usize> = (0..n).filter(|&v| left[v]).collect();
    loop {
        // layer the free left vertices
        let mut queue = VecDeque::new();
        for &u in &lefts {
            if mate[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = u32::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mate[v];
                if w == NONE {
                    found = true;
                } else if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        let mut it = vec![0usize; n];
        for &u in &lefts {
            if mate[u] == NONE {
                augment(u, adj, &mut mate, &mut dist, &mut it);
            }
        }
    }
    mate.into_iter().map(|m| (m != NONE).then_some(m)).collect()
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    mate: &mut [usize],
    dist: &mut [u32],
    it: &mut [usize],
) -> bool {
    while it[u] < adj[u].len() {
        let v = adj[u][it[u]];
        it[u] += 1;
        let w = mate[v];
        let ok = w == NONE || (dist[w] == dist[u] + 1 && augment(w, adj, mate, dist, it));
        if ok {
            mate[u] = v;
            mate[v] = u;
            return true;
        }
    }
    dist[u] = u32::MAX;
    false
}
