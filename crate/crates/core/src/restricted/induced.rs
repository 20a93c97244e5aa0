//! Maximum induced matching by branch-and-bound over edges.
//!
//! Each node either takes an edge `uv` (and deletes `N[{u,v}]`) or bans it.
//! The bound is the current size plus the matching number of what is left,
//! since any induced matching of the remainder is in particular a matching.

use crate::error::Result;
use crate::graph::Graph;
use crate::matching::{matching_number_adj, Matching};
use crate::restricted::{Budget, Ticker};

pub fn induced_matching_number(g: &Graph, budget: Budget) -> Result<usize> {
    Ok(induced_matching(g, budget)?.len())
}

pub fn induced_matching(g: &Graph, budget: Budget) -> Result<Matching> {
    search(g, usize::MAX, budget)
}

/// Stops as soon as an induced matching of size `target` is found. The
/// returned matching is maximum whenever it is smaller than `target`.
pub fn induced_matching_at_least(g: &Graph, target: usize, budget: Budget) -> Result<Matching> {
    search(g, target, budget)
}

fn search(g: &Graph, target: usize, budget: Budget) -> Result<Matching> {
    let mut s = Search {
        g,
        alive: vec![true; g.n()],
        banned: vec![false; g.m()],
        current: Vec::new(),
        best: Vec::new(),
        target,
        ticker: Ticker::new(budget),
        adj: vec![Vec::new(); g.n()],
    };
    s.node()?;
    let pairs: Vec<_> = s.best.iter().map(|&e| g.edges()[e]).collect();
    Matching::new(g, &pairs)
}

struct Search<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
    banned: Vec<bool>,
    current: Vec<usize>,
    best: Vec<usize>,
    target: usize,
    ticker: Ticker,
    adj: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.best.len() >= self.target
    }

    fn node(&mut self) -> Result<()> {
        self.ticker.tick()?;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if self.done() {
            return Ok(());
        }
        let edges = self.g.edges();
        let live: Vec<usize> = (0..edges.len())
            .filter(|&i| {
                let (u, v) = edges[i];
                !self.banned[i] && self.alive[u] && self.alive[v]
            })
            .collect();
        if live.is_empty() {
            return Ok(());
        }
        for list in &mut self.adj {
            list.clear();
        }
        for &i in &live {
            let (u, v) = edges[i];
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
        if self.current.len() + matching_number_adj(&self.adj) <= self.best.len() {
            return Ok(());
        }
        // branch on the edge with the largest residual degree sum
        let pick = *live
            .iter()
            .max_by_key(|&&i| {
                let (u, v) = edges[i];
                (self.adj[u].len() + self.adj[v].len(), std::cmp::Reverse(i))
            })
            .expect("live is non-empty");
        let (u, v) = edges[pick];

        let mut removed = Vec::new();
        for x in [u, v] {
            for &y in self.g.neighbors(x).iter().chain(std::iter::once(&x)) {
                if self.alive[y] {
                    self.alive[y] = false;
                    removed.push(y);
                }
            }
        }
        self.current.push(pick);
        self.node()?;
        self.current.pop();
        for y in removed {
            self.alive[y] = true;
        }
        if self.done() {
            return Ok(());
        }

        self.banned[pick] = true;
        let r = self.node();
        self.banned[pick] = false;
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn nus(g: &Graph) -> usize {
        induced_matching_number(g, Budget::default()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(nus(&Graph::complete(4)), 1);
        assert_eq!(nus(&Graph::path(5)), 2);
        assert_eq!(nus(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap()), 2);
        assert_eq!(nus(&Graph::empty(3)), 0);
        assert_eq!(nus(&Graph::cycle(6)), 2);
        assert_eq!(nus(&Graph::path(8)), 3);
    }

    #[test]
    fn result_is_induced() {
        let g = Graph::cycle(9);
        let m = induced_matching(&g, Budget::default()).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.analyze(&g).is_induced);
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::cycle(30);
        assert_eq!(
            induced_matching_number(&g, Budget::new(3)),
            Err(Error::BudgetExhausted { budget: 3 })
        );
    }

    #[test]
    fn target_stops_early() {
        let m = induced_matching_at_least(&Graph::path(20), 2, Budget::default()).unwrap();
        assert_eq!(m.len(), 2);
    }
}
