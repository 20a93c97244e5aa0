//! Test corpora: every connected graph on a few vertices up to isomorphism,
//! and seeded random graphs under simple constraints.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_code`]; the code packs the upper
/// triangle of the adjacency matrix into a `u128`.
pub const CANONICAL_MAX_N: usize = 16;

/// An isomorphism invariant that is also complete: two graphs of the same
/// order get equal codes iff they are isomorphic.
///
/// Color refinement followed by individualization of the first non-singleton
/// cell; the code is the smallest adjacency bit string over all leaves.
pub fn canonical_code(g: &Graph) -> u128 {
    canonical_form(g).0
}

/// The canonical code together with a vertex order realizing it.
pub fn canonical_form(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.n();
    assert!(
        n <= CANONICAL_MAX_N,
        "canonical form supports at most 16 vertices"
    );
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut best: Option<(u128, Vec<usize>)> = None;
    let cells = refine(&masks, vec![(0..n).collect()]);
    search(&masks, cells, &mut best);
    best.unwrap_or((0, Vec::new()))
}

/// Graph with vertices renumbered into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    let mut perm = vec![0; g.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.permuted(&perm).expect("canonical order is a permutation")
}

fn code_of(masks: &[u32], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code <<= 1;
            if masks[order[i]] & (1 << order[j]) != 0 {
                code |= 1;
            }
        }
    }
    code
}

fn search(masks: &[u32], cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = code_of(masks, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = cells.clone();
        let rest: Vec<usize> = next[target].iter().copied().filter(|&w| w != v).collect();
        next[target] = vec![v];
        next.insert(target + 1, rest);
        search(masks, refine(masks, next), best);
    }
}

/// Equitable refinement of an ordered partition. Cells split by the count
/// of neighbors in every cell; the split pieces are ordered by that
/// signature, which keeps the result isomorphism invariant.
fn refine(masks: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let cell_masks: Vec<u32> = cells
            .iter()
            .map(|c| c.iter().fold(0u32, |m, &v| m | (1 << v)))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = cell_masks
                        .iter()
                        .map(|&cm| (masks[v] & cm).count_ones())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    let mut piece: Vec<usize> = keyed[start..i].iter().map(|&(_, v)| v).collect();
                    piece.sort_unstable();
                    next.push(piece);
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Every connected graph on `n` vertices for `n = 1..=max_n`, one per
/// isomorphism class, in a fixed order. Index `k` of the result holds the
/// graphs on `k + 1` vertices.
///
/// Each level extends the previous one by a vertex joined to every
/// non-empty subset; that reaches every class because any connected graph
/// has a vertex whose removal keeps it connected.
pub fn connected_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= 10, "exhaustive census is limited to 10 vertices");
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_n == 0 {
        return levels;
    }
    levels.push(vec![Graph::empty(1)]);
    for n in 2..=max_n {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for g in &levels[n - 2] {
            for subset in 1u32..(1 << (n - 1)) {
                let mut edges = g.edges().to_vec();
                edges.extend(
                    (0..n - 1)
                        .filter(|&v| subset & (1 << v) != 0)
                        .map(|v| (v, n - 1)),
                );
                let h = Graph::new(n, &edges).expect("extension is simple");
                let (code, order) = canonical_form(&h);
                if seen.insert(code) {
                    let mut perm = vec![0; n];
                    for (new, &old) in order.iter().enumerate() {
                        perm[old] = new;
                    }
                    out.push((code, h.permuted(&perm).expect("permutation")));
                }
            }
        }
        out.sort_by_key(|(code, _)| *code);
        levels.push(out.into_iter().map(|(_, g)| g).collect());
    }
    levels
}

/// All graphs of [`connected_graphs`] flattened, smallest order first.
pub fn connected_graphs_flat(max_n: usize) -> Vec<Graph> {
    connected_graphs(max_n).into_iter().flatten().collect()
}

/// Constraints for [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GenOptions {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub max_degree: Option<usize>,
}

const GEN_ATTEMPTS: usize = 1000;

/// Random graph with exactly `m` edges satisfying the options,
/// deterministic in `seed`. Infeasible combinations are rejected up front
/// when the counting argument is simple; otherwise generation retries a
/// bounded number of times before giving up.
pub fn generate(opts: GenOptions, seed: u64) -> Result<Graph> {
    let GenOptions {
        n,
        m,
        connected,
        bipartite,
        max_degree,
    } = opts;
    let infeasible = |why: String| Err(Error::PreconditionViolated(why));
    let pair_cap = if bipartite {
        (n / 2) * n.div_ceil(2)
    } else {
        n * n.saturating_sub(1) / 2
    };
    if m > pair_cap {
        return infeasible(format!("{m} edges exceed the maximum of {pair_cap}"));
    }
    if let Some(d) = max_degree {
        if m > n * d / 2 {
            return infeasible(format!(
                "{m} edges exceed the maximum of {} at degree {d}",
                n * d / 2
            ));
        }
    }
    if connected {
        if n == 0 {
            return infeasible("a connected graph needs a vertex".into());
        }
        if m + 1 < n {
            return infeasible(format!(
                "a connected graph on {n} vertices needs {} edges",
                n - 1
            ));
        }
        if max_degree.is_some_and(|d| d < 2 && n > 2) {
            return infeasible(
                "a connected graph with maximum degree 1 has at most 2 vertices".into(),
            );
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GEN_ATTEMPTS {
        if let Some(g) = attempt(opts, &mut rng) {
            return Ok(g);
        }
    }
    infeasible(format!("no graph found after {GEN_ATTEMPTS} attempts"))
}

fn attempt(opts: GenOptions, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let GenOptions {
        n,
        m,
        connected,
        bipartite,
        max_degree,
    } = opts;
    let cap = max_degree.unwrap_or(usize::MAX);
    let mut side = vec![false; n];
    if bipartite {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for &v in &order[..n / 2] {
            side[v] = true;
        }
    }
    let allowed = |u: usize, v: usize| !bipartite || side[u] != side[v];
    let mut degree = vec![0usize; n];
    let mut chosen = BTreeSet::new();

    if connected {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for i in 1..n {
            let v = order[i];
            let options: Vec<usize> = order[..i]
                .iter()
                .copied()
                .filter(|&u| allowed(u, v) && degree[u] < cap)
                .collect();
            let &u = options.choose(rng)?;
            degree[u] += 1;
            degree[v] += 1;
            chosen.insert((u.min(v), u.max(v)));
        }
    }
    let mut pool: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| allowed(u, v) && !chosen.contains(&(u, v)))
        .collect();
    pool.shuffle(rng);
    for (u, v) in pool {
        if chosen.len() >= m {
            break;
        }
        if degree[u] < cap && degree[v] < cap {
            degree[u] += 1;
            degree[v] += 1;
            chosen.insert((u, v));
        }
    }
    if chosen.len() != m {
        return None;
    }
    let edges: Vec<_> = chosen.into_iter().collect();
    Graph::new(n, &edges).ok()
}

/// Uniformly random simple graph with `n` vertices and `m` edges, `m`
/// clamped to the number of pairs.
pub fn random_graph(n: usize, m: usize, rng: &mut impl Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::new(n, &pairs).expect("pairs are distinct and in range")
}
