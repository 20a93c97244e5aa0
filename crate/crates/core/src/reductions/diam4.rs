//! Bipartite reduction from exact cover to `ν = ν_d`, with apex and K₂
//! padding variants that move the question to `ν = ν_{d,i}` (diameter 4)
//! and `ν_{d,i} = ν_{d,j}` (diameter 3).
//!
//! Labels are 1-based: `h:j`, `h':k`, `u:j`, `u+:j`, `u-:j`, `w:i,j`
//! (element `i` inside triple `j`), `w-:i,r`, `t+`, `t-`, `b+`, `b-`, the
//! apex `u`, padding pairs `k2u:l`/`k2v:l`, and `v` for the second apex.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Diameter, GraphBuilder};
use crate::matching::Matching;
use crate::reductions::artifact::{checked_witness, ReductionArtifact};
use crate::reductions::x3c::X3CInstance;

/// The base graph under construction, with its two sides.
struct Base {
    b: GraphBuilder,
    v1: Vec<usize>,
    v2: Vec<usize>,
}

impl Base {
    fn side_one(&mut self, label: String) -> usize {
        let v = self.b.add_vertex(label);
        self.v1.push(v);
        v
    }

    fn side_two(&mut self, label: String) -> usize {
        let v = self.b.add_vertex(label);
        self.v2.push(v);
        v
    }
}

fn build_base(inst: &X3CInstance) -> Result<Base> {
    inst.validate()?;
    let q = inst.q();
    let m = inst.triples.len();
    let mut g = Base {
        b: GraphBuilder::new(),
        v1: Vec::new(),
        v2: Vec::new(),
    };

    let h_prime: Vec<usize> = (1..=q).map(|k| g.side_one(format!("h':{k}"))).collect();
    let h: Vec<usize> = (1..=m).map(|j| g.side_two(format!("h:{j}"))).collect();
    for &a in &h_prime {
        for &c in &h {
            g.b.add_edge(a, c);
        }
    }

    let mut u = Vec::with_capacity(m);
    let mut u_plus = Vec::with_capacity(m);
    let mut u_minus = Vec::with_capacity(m);
    for j in 1..=m {
        let mid = g.side_one(format!("u:{j}"));
        let plus = g.side_two(format!("u+:{j}"));
        let minus = g.side_two(format!("u-:{j}"));
        g.b.add_edge(mid, plus);
        g.b.add_edge(mid, minus);
        g.b.add_edge(mid, h[j - 1]);
        u.push(mid);
        u_plus.push(plus);
        u_minus.push(minus);
    }

    let mut w_plus_all = Vec::new();
    for i in 0..inst.ground_size {
        let owners = inst.triples_with(i);
        let plus: Vec<usize> = owners
            .iter()
            .map(|&j| g.side_two(format!("w:{},{}", i + 1, j + 1)))
            .collect();
        let minus: Vec<usize> = (1..owners.len())
            .map(|r| g.side_one(format!("w-:{},{r}", i + 1)))
            .collect();
        for (&w, &j) in plus.iter().zip(&owners) {
            g.b.add_edge(u[j], w);
            for &x in &minus {
                g.b.add_edge(w, x);
            }
        }
        w_plus_all.extend(plus);
    }

    let t_plus = g.side_two("t+".into());
    let t_minus = g.side_one("t-".into());
    let b_plus = g.side_two("b+".into());
    let b_minus = g.side_one("b-".into());
    g.b.add_edge(t_plus, t_minus);
    g.b.add_edge(b_plus, b_minus);
    for &x in u_minus.iter().chain(&w_plus_all) {
        g.b.add_edge(b_minus, x);
    }
    for &x in h.iter().chain(&u_plus) {
        g.b.add_edge(t_minus, x);
    }
    Ok(g)
}

fn base_metadata(inst: &X3CInstance) -> BTreeMap<String, usize> {
    BTreeMap::from([
        ("q".to_string(), inst.q()),
        ("triples".to_string(), inst.triples.len()),
    ])
}

/// `4|C| − 2q + 2`, the matching number of the base graph when every
/// element lies in some triple. An uncovered element would count as −1
/// here, so builders report the size of the first side instead.
pub fn base_matching_number(inst: &X3CInstance) -> usize {
    4 * inst.triples.len() + 2 - 2 * inst.q()
}

/// The base graph, optionally with an apex joined to the whole first side,
/// which brings the diameter down to 4 without changing ν or ν_d.
pub fn build_reduction_diam4(
    inst: &X3CInstance,
    add_diameter_vertex: bool,
) -> Result<ReductionArtifact> {
    let mut g = build_base(inst)?;
    if add_diameter_vertex {
        let side = g.v1.clone();
        let apex = g.side_two("u".into());
        for x in side {
            g.b.add_edge(apex, x);
        }
    }
    let predicted = g.v1.len();
    if inst.occurrence().iter().all(|&f| f > 0) {
        debug_assert_eq!(predicted, base_matching_number(inst));
    }
    ReductionArtifact::assemble(g.b.build()?, g.v1, g.v2, base_metadata(inst), predicted)
}

/// Adds `i − 2` disjoint K₂'s and an apex joined to the first side and to
/// one end of each K₂. `ν = ν_{d,i}` holds exactly when `ν = ν_d` does on
/// the base graph.
pub fn build_reduction_nu_nudi(inst: &X3CInstance, i: usize) -> Result<ReductionArtifact> {
    if i < 2 {
        return Err(Error::PreconditionViolated(format!(
            "i = {i} must be at least 2"
        )));
    }
    let mut g = build_base(inst)?;
    add_pairs(&mut g, i - 2);
    let side = g.v1.clone();
    let apex = g.side_two("u".into());
    for x in side {
        g.b.add_edge(apex, x);
    }
    let predicted = g.v1.len();
    let mut meta = base_metadata(inst);
    meta.insert("i".into(), i);
    let art = ReductionArtifact::assemble(g.b.build()?, g.v1, g.v2, meta, predicted)?;
    expect_diameter(&art, 4)?;
    Ok(art)
}

/// Adds `j − 2` disjoint K₂'s and an edge `uv` with `u` joined to the first
/// side and `v` to the second. Diameter 3; `ν_{d,i} = ν_{d,j}` holds exactly
/// when `ν = ν_d` does on the base graph.
pub fn build_reduction_nudi_nudj(
    inst: &X3CInstance,
    i: usize,
    j: usize,
) -> Result<ReductionArtifact> {
    if i < 2 || i >= j {
        return Err(Error::PreconditionViolated(format!(
            "need 2 <= i < j, got i = {i}, j = {j}"
        )));
    }
    let mut g = build_base(inst)?;
    add_pairs(&mut g, j - 2);
    let one = g.v1.clone();
    let two = g.v2.clone();
    let u = g.side_two("u".into());
    let v = g.side_one("v".into());
    g.b.add_edge(u, v);
    for x in one {
        g.b.add_edge(u, x);
    }
    for x in two {
        g.b.add_edge(v, x);
    }
    let predicted = g.v1.len();
    let mut meta = base_metadata(inst);
    meta.insert("i".into(), i);
    meta.insert("j".into(), j);
    let art = ReductionArtifact::assemble(g.b.build()?, g.v1, g.v2, meta, predicted)?;
    expect_diameter(&art, 3)?;
    Ok(art)
}

fn add_pairs(g: &mut Base, count: usize) {
    for l in 1..=count {
        let a = g.side_two(format!("k2u:{l}"));
        let b = g.side_one(format!("k2v:{l}"));
        g.b.add_edge(a, b);
    }
}

fn expect_diameter(art: &ReductionArtifact, d: usize) -> Result<()> {
    match art.graph.diameter()? {
        Diameter::Finite(x) if x == d => Ok(()),
        other => Err(Error::InternalInvariantViolation(format!(
            "gadget diameter is {other:?}, expected {d}"
        ))),
    }
}

/// The two-component maximum matching read off an exact cover. Works on
/// the base graph and on every padded variant (padding K₂'s are added as
/// extra components, apexes stay unsaturated).
pub fn witness_matching_diam4(
    art: &ReductionArtifact,
    inst: &X3CInstance,
    cover: &[usize],
) -> Result<Matching> {
    let cover = inst.check_cover(cover)?;
    let idx = art.label_index();
    let id = |l: String| idx.id(&l);
    let mut pairs = vec![
        (id("b-".into())?, id("b+".into())?),
        (id("t-".into())?, id("t+".into())?),
    ];
    for (k, &j) in cover.iter().enumerate() {
        pairs.push((id(format!("h':{}", k + 1))?, id(format!("h:{}", j + 1))?));
    }
    for j in 0..inst.triples.len() {
        let end = if cover.contains(&j) { "u+" } else { "u-" };
        pairs.push((id(format!("u:{}", j + 1))?, id(format!("{end}:{}", j + 1))?));
    }
    for i in 0..inst.ground_size {
        let chosen = *cover
            .iter()
            .find(|&&j| inst.triples[j].contains(&i))
            .expect("a checked cover hits every element");
        let rest = inst.triples_with(i).into_iter().filter(|&j| j != chosen);
        for (r, j) in rest.enumerate() {
            pairs.push((
                id(format!("w:{},{}", i + 1, j + 1))?,
                id(format!("w-:{},{}", i + 1, r + 1))?,
            ));
        }
    }
    let padding = art.meta("j").or(art.meta("i")).unwrap_or(2) - 2;
    for l in 1..=padding {
        pairs.push((id(format!("k2u:{l}"))?, id(format!("k2v:{l}"))?));
    }
    checked_witness(
        &art.graph,
        &pairs,
        base_matching_number(inst) + padding,
        2 + padding,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::matching_number;
    use crate::reductions::x3c::solve_x3c;
    use crate::restricted::{c_disconnected_matching_number, disconnected_matching_number, Budget};

    fn sample() -> X3CInstance {
        X3CInstance::new(6, vec![[0, 1, 2], [0, 1, 3], [0, 1, 4], [3, 4, 5]]).unwrap()
    }

    fn minimal() -> X3CInstance {
        X3CInstance::new(3, vec![[0, 1, 2]]).unwrap()
    }

    #[test]
    fn base_sizes() {
        let a = build_reduction_diam4(&sample(), false).unwrap();
        assert_eq!(a.predicted_nu, 14);
        assert_eq!(matching_number(&a.graph), 14);
        assert_eq!(a.graph.n(), 40);
        let m = build_reduction_diam4(&minimal(), false).unwrap();
        assert_eq!(m.predicted_nu, 4);
        assert_eq!(m.graph.n(), 12);
    }

    #[test]
    fn apex_gives_diameter_four() {
        for inst in [sample(), minimal()] {
            let a = build_reduction_diam4(&inst, true).unwrap();
            assert_eq!(a.graph.diameter().unwrap(), Diameter::Finite(4));
            assert_eq!(matching_number(&a.graph), a.predicted_nu);
        }
    }

    #[test]
    fn witness_on_examples() {
        let inst = sample();
        let a = build_reduction_diam4(&inst, true).unwrap();
        let w = witness_matching_diam4(&a, &inst, &[0, 3]).unwrap();
        assert_eq!(w.len(), 14);
        assert!(w.analyze(&a.graph).is_disconnected);
        assert!(matches!(
            witness_matching_diam4(&a, &inst, &[0, 1]),
            Err(Error::InvalidCover(_))
        ));

        let inst = minimal();
        let a = build_reduction_diam4(&inst, true).unwrap();
        let w = witness_matching_diam4(&a, &inst, &[0]).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(
            disconnected_matching_number(&a.graph, Budget::default()).unwrap(),
            4
        );
    }

    #[test]
    fn padded_variants() {
        let base = build_reduction_diam4(&minimal(), true).unwrap();
        let same = build_reduction_nu_nudi(&minimal(), 2).unwrap();
        assert_eq!(
            (same.graph.n(), same.graph.m()),
            (base.graph.n(), base.graph.m())
        );
        assert_eq!(
            build_reduction_nu_nudi(&sample(), 3).unwrap().predicted_nu,
            15
        );
        let four = build_reduction_nu_nudi(&sample(), 4).unwrap();
        assert_eq!(four.predicted_nu, 16);
        assert_eq!(matching_number(&four.graph), 16);
        let w = witness_matching_diam4(&four, &sample(), &[0, 3]).unwrap();
        assert!(w.analyze(&four.graph).is_c_disconnected(4));
        assert!(build_reduction_nu_nudi(&sample(), 1).is_err());
    }

    #[test]
    fn two_apex_variant() {
        let a = build_reduction_nudi_nudj(&minimal(), 2, 3).unwrap();
        assert_eq!(a.graph.diameter().unwrap(), Diameter::Finite(3));
        assert_eq!(matching_number(&a.graph), a.predicted_nu);
        let idx = a.label_index();
        let (u, v) = (idx.id("u").unwrap(), idx.id("v").unwrap());
        let rest = a.graph.delete_vertices(&[u, v]).unwrap().graph;
        let b = Budget::default();
        assert_eq!(
            c_disconnected_matching_number(&a.graph, 3, b).unwrap(),
            c_disconnected_matching_number(&rest, 3, b).unwrap()
        );

        let a = build_reduction_nudi_nudj(&sample(), 2, 4).unwrap();
        let idx = a.label_index();
        let (u, v) = (idx.id("u").unwrap(), idx.id("v").unwrap());
        assert_eq!(
            a.graph
                .delete_vertices(&[u, v])
                .unwrap()
                .graph
                .components()
                .count(),
            3
        );
        assert!(build_reduction_nudi_nudj(&sample(), 3, 3).is_err());
    }

    #[test]
    fn smallest_no_instance_loses_a_unit() {
        let no = X3CInstance::new(6, vec![[0, 1, 2], [2, 3, 4], [1, 4, 5]]).unwrap();
        assert!(solve_x3c(&no).unwrap().is_none());
        let a = build_reduction_diam4(&no, true).unwrap();
        let nu_d = disconnected_matching_number(&a.graph, Budget::default()).unwrap();
        assert!(nu_d < a.predicted_nu);
    }
}
