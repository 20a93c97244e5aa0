//! Recognition of Cameron-Walker graphs, the connected graphs whose
//! matching number equals their induced matching number.
//!
//! The decomposition is forced almost everywhere: neighbors of pendant
//! vertices must be in B, and two adjacent degree-2 vertices with a common
//! third neighbor must form a D pair. So we build the only candidate and
//! check it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CWDecomposition {
    pub set_a: Vec<usize>,
    pub set_b: Vec<usize>,
    pub set_c: Vec<usize>,
    pub set_d: Vec<usize>,
}

impl CWDecomposition {
    /// Checks the four defining clauses plus that the sets partition V(g).
    /// Returns the first violated clause.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        const NONE: u8 = 4;
        let mut part = vec![NONE; g.n()];
        for (tag, set) in [&self.set_a, &self.set_b, &self.set_c, &self.set_d]
            .into_iter()
            .enumerate()
        {
            for &v in set {
                if v >= g.n() {
                    return Err(format!("vertex {v} out of range"));
                }
                if part[v] != NONE {
                    return Err(format!("vertex {v} appears in two sets"));
                }
                part[v] = tag as u8;
            }
        }
        if let Some(v) = part.iter().position(|&p| p == NONE) {
            return Err(format!("vertex {v} is in no set"));
        }
        let (a, b, c, d) = (0u8, 1u8, 2u8, 3u8);
        for &v in &self.set_a {
            if g.degree(v) != 1 {
                return Err(format!("A-vertex {v} has degree {}", g.degree(v)));
            }
        }
        // G[A ∪ B] is a perfect matching between A and B
        for v in self.set_a.iter().chain(&self.set_b) {
            let inside: Vec<usize> = g
                .neighbors(*v)
                .iter()
                .copied()
                .filter(|&w| part[w] == a || part[w] == b)
                .collect();
            if inside.len() != 1 || part[inside[0]] == part[*v] {
                return Err(format!("vertex {v} is not matched across A and B"));
            }
        }
        for &(x, y) in g.edges() {
            let (px, py) = (part[x], part[y]);
            if px == py && (px == b || px == c) {
                return Err(format!("edge {x}-{y} lies inside one side of B/C"));
            }
        }
        for &x in &self.set_d {
            let in_d: Vec<usize> = g
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&w| part[w] == d)
                .collect();
            if in_d.len() != 1 {
                return Err(format!("D-vertex {x} has {} D-neighbors", in_d.len()));
            }
            let y = in_d[0];
            let others_x: Vec<usize> = g.neighbors(x).iter().copied().filter(|&w| w != y).collect();
            let others_y: Vec<usize> = g.neighbors(y).iter().copied().filter(|&w| w != x).collect();
            match (others_x.as_slice(), others_y.as_slice()) {
                ([z1], [z2]) if z1 == z2 && part[*z1] == c => {}
                _ => {
                    return Err(format!(
                        "D-pair {x}-{y} does not hang off a single C-vertex"
                    ))
                }
            }
        }
        Ok(())
    }
}

/// The decomposition of a connected graph, or `None` when it is not a
/// Cameron-Walker graph.
pub fn recognize_cameron_walker(g: &Graph) -> Result<Option<CWDecomposition>> {
    if !g.is_connected() {
        return Err(Error::PreconditionViolated(if g.n() == 0 {
            "graph has no vertices".into()
        } else {
            "graph is disconnected".into()
        }));
    }
    let n = g.n();
    if n == 2 {
        return Ok(Some(CWDecomposition {
            set_a: vec![0],
            set_b: vec![1],
            set_c: vec![],
            set_d: vec![],
        }));
    }
    let mut in_d = vec![false; n];
    if n == 3 && g.m() == 3 {
        in_d[0] = true;
        in_d[1] = true;
    } else {
        for &(x, y) in g.edges() {
            if g.degree(x) != 2 || g.degree(y) != 2 {
                continue;
            }
            let zx = g.neighbors(x).iter().find(|&&w| w != y);
            let zy = g.neighbors(y).iter().find(|&&w| w != x);
            if zx.is_some() && zx == zy {
                in_d[x] = true;
                in_d[y] = true;
            }
        }
    }
    let mut in_b = vec![false; n];
    let mut in_a = vec![false; n];
    for v in (0..n).filter(|&v| g.degree(v) == 1) {
        in_b[g.neighbors(v)[0]] = true;
    }
    for b in (0..n).filter(|&b| in_b[b]) {
        if let Some(&p) = g.neighbors(b).iter().find(|&&w| g.degree(w) == 1) {
            in_a[p] = true;
        }
    }
    let mut dec = CWDecomposition {
        set_a: Vec::new(),
        set_b: Vec::new(),
        set_c: Vec::new(),
        set_d: Vec::new(),
    };
    for v in 0..n {
        if in_a[v] {
            dec.set_a.push(v);
        } else if in_b[v] {
            dec.set_b.push(v);
        } else if in_d[v] {
            dec.set_d.push(v);
        } else {
            dec.set_c.push(v);
        }
    }
    Ok(dec.verify(g).is_ok().then_some(dec))
}

/// ν = ν_s, decided per non-trivial component.
pub fn decide_nu_eq_nus(g: &Graph) -> bool {
    g.components().sets.iter().filter(|c| c.len() > 1).all(|c| {
        let sub = g
            .induced_subgraph(c)
            .expect("component vertices are valid")
            .graph;
        matches!(recognize_cameron_walker(&sub), Ok(Some(_)))
    })
}
