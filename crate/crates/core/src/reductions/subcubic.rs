//! Degree-3 bipartite variant of the exact cover reduction.
//!
//! The high-degree pieces of the base graph are swapped for bounded-degree
//! gadgets: a grid of paths `H(q, m)` in place of `K_{q,m}`, a caterpillar
//! `Π(v, k)` in place of each hub, and a path in place of each `K_{f,f−1}`.
//!
//! Labels are 1-based. In `H`: `B:k,p` and `A:k,p` for odd and even
//! position `p` of the k-th row path, `c*:j`, `C:j,p` and `D:j,p` for
//! position 1, odd and even positions of the j-th column path. Caterpillars
//! use `{name}:l,r`; per triple the caterpillar is `u:j` and its tail is
//! `u:j:5,1`, `u+:j`, `u-:j`. Element paths use `w:i,j` and `w-:i,r`, hubs
//! are `t:l,r` and `b:l,r`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::matching::{matching_number, Matching};
use crate::reductions::artifact::{checked_witness, pair_up, LabelIndex, ReductionArtifact};
use crate::reductions::x3c::X3CInstance;

/// Vertices of the path grid, row paths first.
struct Grid {
    rows: Vec<Vec<usize>>,
    columns: Vec<Vec<usize>>,
}

/// Row `k` has `2m − 1` vertices, column `j` has `2q − 1`; the `(2j−1)`-th
/// vertex of row `k` meets the `(2k−1)`-th vertex of column `j`.
fn add_grid(b: &mut GraphBuilder, q: usize, m: usize, v1: &mut Vec<usize>) -> Grid {
    let rows: Vec<Vec<usize>> = (1..=q)
        .map(|k| {
            (1..2 * m)
                .map(|p| {
                    let odd = p % 2 == 1;
                    let v = b.add_vertex(format!("{}:{k},{p}", if odd { "B" } else { "A" }));
                    if odd {
                        v1.push(v);
                    }
                    v
                })
                .collect()
        })
        .collect();
    let columns: Vec<Vec<usize>> = (1..=m)
        .map(|j| {
            (1..2 * q)
                .map(|p| {
                    let label = match p {
                        1 => format!("c*:{j}"),
                        _ if p % 2 == 1 => format!("C:{j},{p}"),
                        _ => format!("D:{j},{p}"),
                    };
                    let v = b.add_vertex(label);
                    if p % 2 == 0 {
                        v1.push(v);
                    }
                    v
                })
                .collect()
        })
        .collect();
    for path in rows.iter().chain(&columns) {
        b.add_path(path);
    }
    for (k, row) in rows.iter().enumerate() {
        for (j, col) in columns.iter().enumerate() {
            b.add_edge(row[2 * j], col[2 * k]);
        }
    }
    Grid { rows, columns }
}

/// `4k` vertices: spine `(1,1)(1,2)(2,1)…(k,2)` and a tail `(l,2)(l,3)(l,4)`
/// per `l`. Positions `(l,1)` and `(l,3)` go to `v1` when given.
fn add_caterpillar(
    b: &mut GraphBuilder,
    k: usize,
    name: &str,
    mut v1: Option<&mut Vec<usize>>,
) -> Vec<[usize; 4]> {
    let rungs: Vec<[usize; 4]> = (1..=k)
        .map(|l| std::array::from_fn(|r| b.add_vertex(format!("{name}:{l},{}", r + 1))))
        .collect();
    for (l, rung) in rungs.iter().enumerate() {
        b.add_edge(rung[0], rung[1]);
        b.add_edge(rung[1], rung[2]);
        b.add_edge(rung[2], rung[3]);
        if let Some(next) = rungs.get(l + 1) {
            b.add_edge(rung[1], next[0]);
        }
        if let Some(side) = v1.as_deref_mut() {
            side.extend([rung[0], rung[2]]);
        }
    }
    rungs
}

/// The caterpillar `Π(label, k)`; it has a perfect matching of size `2k`.
pub fn build_gadget_pi(k: usize, label: &str) -> Result<Graph> {
    if k == 0 {
        return Err(Error::PreconditionViolated(
            "caterpillar needs k >= 1".into(),
        ));
    }
    let mut b = GraphBuilder::new();
    add_caterpillar(&mut b, k, label, None);
    b.build()
}

/// The path grid `H(q, m)`. For `q ≤ m` its matching number is
/// `m(2q − 1)`; narrower grids get theirs computed.
pub fn build_gadget_h(q: usize, m: usize) -> Result<ReductionArtifact> {
    if q == 0 || m == 0 {
        return Err(Error::PreconditionViolated("grid needs q, m >= 1".into()));
    }
    let mut b = GraphBuilder::new();
    let mut v1 = Vec::new();
    add_grid(&mut b, q, m, &mut v1);
    let g = b.build()?;
    let v2 = complement(g.n(), &v1);
    let predicted = if q <= m {
        m * (2 * q - 1)
    } else {
        matching_number(&g)
    };
    let meta = BTreeMap::from([("q".to_string(), q), ("m".to_string(), m)]);
    ReductionArtifact::assemble(g, v1, v2, meta, predicted)
}

fn complement(n: usize, side: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; n];
    for &v in side {
        inside[v] = true;
    }
    (0..n).filter(|&v| !inside[v]).collect()
}

/// Grid matching that leaves exactly the column heads `c*_j`, `j ∈ skip`,
/// unsaturated. Row `k` is crossed over to the k-th kept column; everything
/// left splits into even paths.
fn grid_pairs(
    idx: &LabelIndex,
    q: usize,
    m: usize,
    skip: &[usize],
    out: &mut Vec<(usize, usize)>,
) -> Result<()> {
    if q > m || skip.len() != m - q {
        return Err(Error::WrongSetSize {
            expected: m.saturating_sub(q),
            actual: skip.len(),
        });
    }
    let mut skipped = vec![false; m];
    for &j in skip {
        if j >= m || skipped[j] {
            return Err(Error::PreconditionViolated(format!(
                "skip set must hold distinct column indices below {m}"
            )));
        }
        skipped[j] = true;
    }
    let kept: Vec<usize> = (0..m).filter(|&j| !skipped[j]).collect();
    let row = |k: usize| -> Result<Vec<usize>> {
        (1..2 * m)
            .map(|p| {
                idx.id(&format!(
                    "{}:{},{p}",
                    if p % 2 == 1 { "B" } else { "A" },
                    k + 1
                ))
            })
            .collect()
    };
    let column = |j: usize| -> Result<Vec<usize>> {
        (1..2 * q)
            .map(|p| match p {
                1 => idx.id(&format!("c*:{}", j + 1)),
                _ if p % 2 == 1 => idx.id(&format!("C:{},{p}", j + 1)),
                _ => idx.id(&format!("D:{},{p}", j + 1)),
            })
            .collect()
    };
    let mut crossed = vec![None; m];
    for (k, &j) in kept.iter().enumerate() {
        let r = row(k)?;
        let c = column(j)?;
        out.push((r[2 * j], c[2 * k]));
        pair_up(&r[..2 * j], out);
        pair_up(&r[2 * j + 1..], out);
        crossed[j] = Some(k);
    }
    for (j, hit) in crossed.into_iter().enumerate() {
        let c = column(j)?;
        // a skipped column loses its head, a kept one its crossing vertex
        let gap = hit.map_or(0, |k| 2 * k);
        pair_up(&c[..gap], out);
        pair_up(&c[gap + 1..], out);
    }
    Ok(())
}

/// Maximum matching of `H(q, m)` avoiding exactly the heads `c*_j` for the
/// 0-based column indices in `s`, which must number `m − q`.
pub fn s_avoiding_h_matching(gadget: &ReductionArtifact, s: &[usize]) -> Result<Matching> {
    let (q, m) = match (
        gadget.meta("q"),
        gadget.meta("m").or(gadget.meta("triples")),
    ) {
        (Some(q), Some(m)) => (q, m),
        _ => {
            return Err(Error::PreconditionViolated(
                "artifact does not record the grid shape".into(),
            ))
        }
    };
    let mut pairs = Vec::new();
    grid_pairs(&gadget.label_index(), q, m, s, &mut pairs)?;
    Matching::new(&gadget.graph, &pairs)
}

/// Hub size `Q = q(m − 1) + m`.
pub fn hub_size_top(q: usize, m: usize) -> usize {
    q * (m - 1) + m
}

/// Hub size `Q′ = m + Σ min(f_i, 2)`.
pub fn hub_size_bottom(inst: &X3CInstance) -> usize {
    inst.triples.len() + inst.occurrence().iter().map(|&f| f.min(2)).sum::<usize>()
}

/// Degree-3 bipartite graph whose ν equals its first side, with a
/// disconnected maximum matching exactly when the instance has a cover.
pub fn build_subcubic_f(inst: &X3CInstance) -> Result<ReductionArtifact> {
    inst.validate()?;
    let q = inst.q();
    let m = inst.triples.len();
    if q < 2 {
        return Err(Error::PreconditionViolated(format!(
            "the degree-3 reduction needs q >= 2, got q = {q}"
        )));
    }
    let f = inst.occurrence();
    if let Some(i) = f.iter().position(|&x| x == 0) {
        return Err(Error::PreconditionViolated(format!(
            "element {i} lies in no triple"
        )));
    }

    let mut b = GraphBuilder::new();
    let mut v1 = Vec::new();
    let grid = add_grid(&mut b, q, m, &mut v1);

    let mut u_plus = Vec::with_capacity(m);
    let mut u_minus = Vec::with_capacity(m);
    let mut hooks: Vec<[usize; 3]> = Vec::with_capacity(m);
    for j in 1..=m {
        let rungs = add_caterpillar(&mut b, 4, &format!("u:{j}"), Some(&mut v1));
        let tail = b.add_vertex(format!("u:{j}:5,1"));
        let plus = b.add_vertex(format!("u+:{j}"));
        let minus = b.add_vertex(format!("u-:{j}"));
        v1.push(tail);
        b.add_edge(tail, plus);
        b.add_edge(tail, minus);
        b.add_edge(rungs[3][1], tail);
        b.add_edge(rungs[3][2], grid.columns[j - 1][0]);
        hooks.push([rungs[0][2], rungs[1][2], rungs[2][2]]);
        u_plus.push(plus);
        u_minus.push(minus);
    }

    // element paths; slot r of triple j is its r-th smallest element
    let mut ends = Vec::new();
    for (i, &fi) in f.iter().enumerate() {
        let owners = inst.triples_with(i);
        let path: Vec<usize> = (0..2 * fi - 1)
            .map(|p| {
                if p % 2 == 0 {
                    b.add_vertex(format!("w:{},{}", i + 1, owners[p / 2] + 1))
                } else {
                    let v = b.add_vertex(format!("w-:{},{}", i + 1, p / 2 + 1));
                    v1.push(v);
                    v
                }
            })
            .collect();
        b.add_path(&path);
        for (slot, &j) in owners.iter().enumerate() {
            let r = inst.sorted_triple(j).iter().position(|&x| x == i).unwrap();
            b.add_edge(hooks[j][r], path[2 * slot]);
        }
        ends.push(path[0]);
        if fi >= 2 {
            ends.push(path[path.len() - 1]);
        }
    }

    let top = hub_size_top(q, m);
    let bottom = hub_size_bottom(inst);
    let t = add_caterpillar(&mut b, top, "t", Some(&mut v1));
    let evens = grid.rows.iter().flat_map(|r| r.iter().skip(1).step_by(2));
    for (rung, &x) in t.iter().zip(evens.chain(&u_plus)) {
        b.add_edge(rung[2], x);
    }
    let bt = add_caterpillar(&mut b, bottom, "b", Some(&mut v1));
    for (rung, &x) in bt.iter().zip(ends.iter().chain(&u_minus)) {
        b.add_edge(rung[2], x);
    }

    let g = b.build()?;
    if g.max_degree() > 3 {
        return Err(Error::InternalInvariantViolation(format!(
            "maximum degree {} exceeds 3",
            g.max_degree()
        )));
    }
    let v2 = complement(g.n(), &v1);
    let predicted = v1.len();
    let meta = BTreeMap::from([
        ("q".to_string(), q),
        ("triples".to_string(), m),
        ("Q".to_string(), top),
        ("Q_prime".to_string(), bottom),
    ]);
    ReductionArtifact::assemble(g, v1, v2, meta, predicted)
}

/// The two-component maximum matching of the degree-3 graph read off an
/// exact cover.
pub fn witness_matching_f(
    art: &ReductionArtifact,
    inst: &X3CInstance,
    cover: &[usize],
) -> Result<Matching> {
    let cover = inst.check_cover(cover)?;
    let idx = art.label_index();
    let id = |l: String| idx.id(&l);
    let q = inst.q();
    let m = inst.triples.len();
    let mut pairs = Vec::new();

    let skip: Vec<usize> = (0..m).filter(|j| !cover.contains(j)).collect();
    grid_pairs(&idx, q, m, &skip, &mut pairs)?;

    let caterpillar = |name: &str, k: usize, out: &mut Vec<(usize, usize)>| -> Result<()> {
        for l in 1..=k {
            out.push((id(format!("{name}:{l},1"))?, id(format!("{name}:{l},2"))?));
            out.push((id(format!("{name}:{l},3"))?, id(format!("{name}:{l},4"))?));
        }
        Ok(())
    };
    for j in 1..=m {
        caterpillar(&format!("u:{j}"), 4, &mut pairs)?;
        let end = if cover.contains(&(j - 1)) { "u+" } else { "u-" };
        pairs.push((id(format!("u:{j}:5,1"))?, id(format!("{end}:{j}"))?));
    }

    for i in 0..inst.ground_size {
        let owners = inst.triples_with(i);
        let path: Vec<usize> = (0..2 * owners.len() - 1)
            .map(|p| {
                if p % 2 == 0 {
                    id(format!("w:{},{}", i + 1, owners[p / 2] + 1))
                } else {
                    id(format!("w-:{},{}", i + 1, p / 2 + 1))
                }
            })
            .collect::<Result<_>>()?;
        let slot = owners
            .iter()
            .position(|j| cover.contains(j))
            .expect("a checked cover hits every element");
        pair_up(&path[..2 * slot], &mut pairs);
        pair_up(&path[2 * slot + 1..], &mut pairs);
    }

    caterpillar("t", hub_size_top(q, m), &mut pairs)?;
    caterpillar("b", hub_size_bottom(inst), &mut pairs)?;
    checked_witness(&art.graph, &pairs, art.predicted_nu, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> X3CInstance {
        X3CInstance::new(6, vec![[0, 1, 2], [0, 1, 3], [0, 1, 4], [3, 4, 5]]).unwrap()
    }

    #[test]
    fn caterpillar_shapes() {
        let p1 = build_gadget_pi(1, "v").unwrap();
        assert_eq!((p1.n(), p1.m()), (4, 3));
        assert_eq!(p1.max_degree(), 2);
        let p3 = build_gadget_pi(3, "v").unwrap();
        assert_eq!((p3.n(), p3.m()), (12, 11));
        assert_eq!(matching_number(&p3), 6);
        assert_eq!(build_gadget_pi(2, "v").unwrap().max_degree(), 3);
        assert!(build_gadget_pi(0, "v").is_err());
    }

    #[test]
    fn grid_shapes() {
        let h = build_gadget_h(3, 5).unwrap();
        assert_eq!(h.graph.n(), 52);
        assert_eq!(matching_number(&h.graph), 25);
        let h = build_gadget_h(1, 1).unwrap();
        assert_eq!((h.graph.n(), h.graph.m()), (2, 1));
        assert_eq!(build_gadget_h(2, 2).unwrap().graph.n(), 12);
    }

    #[test]
    fn avoiding_matchings() {
        let h = build_gadget_h(3, 5).unwrap();
        let m = s_avoiding_h_matching(&h, &[0, 2]).unwrap();
        assert_eq!(m.len(), 25);
        let missed: Vec<usize> = {
            let sat = m.saturated();
            (0..h.graph.n()).filter(|v| !sat.contains(v)).collect()
        };
        let idx = h.label_index();
        assert_eq!(
            missed,
            vec![idx.id("c*:1").unwrap(), idx.id("c*:3").unwrap()]
        );

        let h = build_gadget_h(2, 2).unwrap();
        assert_eq!(s_avoiding_h_matching(&h, &[]).unwrap().len(), 6);
        let h = build_gadget_h(2, 3).unwrap();
        for j in 0..3 {
            assert_eq!(s_avoiding_h_matching(&h, &[j]).unwrap().len(), 9);
        }
        assert!(matches!(
            s_avoiding_h_matching(&h, &[0, 1]),
            Err(Error::WrongSetSize {
                expected: 1,
                actual: 2
            })
        ));
    }

    #[test]
    fn sample_hub_sizes() {
        let f = build_subcubic_f(&sample()).unwrap();
        assert_eq!(f.meta("Q"), Some(10));
        assert_eq!(f.meta("Q_prime"), Some(14));
        assert_eq!(f.v1.len(), 102);
        assert_eq!(f.predicted_nu, 102);
        assert_eq!(f.graph.max_degree(), 3);
        assert!(f.graph.is_bipartite());
        assert_eq!(matching_number(&f.graph), 102);
    }

    #[test]
    fn witnesses() {
        let inst = sample();
        let f = build_subcubic_f(&inst).unwrap();
        let w = witness_matching_f(&f, &inst, &[0, 3]).unwrap();
        assert_eq!(w.len(), 102);
        assert!(matches!(
            witness_matching_f(&f, &inst, &[0, 1]),
            Err(Error::InvalidCover(_))
        ));

        let small = X3CInstance::new(6, vec![[0, 1, 2], [3, 4, 5]]).unwrap();
        let f = build_subcubic_f(&small).unwrap();
        let w = witness_matching_f(&f, &small, &[0, 1]).unwrap();
        assert_eq!(w.len(), matching_number(&f.graph));
    }

    #[test]
    fn preconditions() {
        let q1 = X3CInstance::new(3, vec![[0, 1, 2]]).unwrap();
        assert!(matches!(
            build_subcubic_f(&q1),
            Err(Error::PreconditionViolated(_))
        ));
        let gap = X3CInstance::new(6, vec![[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(matches!(
            build_subcubic_f(&gap),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
