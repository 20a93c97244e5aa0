//! Exact Cover by 3-Sets instances and a small exhaustive solver.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ground set `{0, …, 3q-1}` and a list of 3-element subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3CInstance {
    pub ground_size: usize,
    pub triples: Vec<[usize; 3]>,
}

/// Largest triple count accepted by [`solve_x3c`].
pub const X3C_TRIPLE_LIMIT: usize = 20;

impl X3CInstance {
    pub fn new(ground_size: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        let inst = X3CInstance {
            ground_size,
            triples,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInstance(msg));
        if self.ground_size == 0 || !self.ground_size.is_multiple_of(3) {
            return bad(format!(
                "ground size {} is not a positive multiple of 3",
                self.ground_size
            ));
        }
        for (j, t) in self.triples.iter().enumerate() {
            if t.iter().any(|&x| x >= self.ground_size) {
                return bad(format!(
                    "triple {j} has an element outside 0..{}",
                    self.ground_size
                ));
            }
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return bad(format!("triple {j} repeats an element"));
            }
        }
        if self.triples.len() < self.q() {
            return bad(format!(
                "{} triples cannot cover {} elements",
                self.triples.len(),
                self.ground_size
            ));
        }
        Ok(())
    }

    pub fn q(&self) -> usize {
        self.ground_size / 3
    }

    /// `f_i`: how many triples contain element `i`.
    pub fn occurrence(&self) -> Vec<usize> {
        let mut f = vec![0; self.ground_size];
        for t in &self.triples {
            for &x in t {
                f[x] += 1;
            }
        }
        f
    }

    /// Indices of the triples containing `element`, ascending.
    pub fn triples_with(&self, element: usize) -> Vec<usize> {
        (0..self.triples.len())
            .filter(|&j| self.triples[j].contains(&element))
            .collect()
    }

    /// Elements of triple `j` in ascending order.
    pub fn sorted_triple(&self, j: usize) -> [usize; 3] {
        let mut t = self.triples[j];
        t.sort_unstable();
        t
    }

    /// Checks that `cover` picks `q` pairwise disjoint triples covering the
    /// ground set. Returns the cover sorted.
    pub fn check_cover(&self, cover: &[usize]) -> Result<Vec<usize>> {
        let mut sorted = cover.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != cover.len() {
            return Err(Error::InvalidCover("a triple is listed twice".into()));
        }
        if let Some(&j) = sorted.iter().find(|&&j| j >= self.triples.len()) {
            return Err(Error::InvalidCover(format!("no triple with index {j}")));
        }
        let mut hit = vec![false; self.ground_size];
        for &j in &sorted {
            for &x in &self.triples[j] {
                if hit[x] {
                    return Err(Error::InvalidCover(format!("element {x} is covered twice")));
                }
                hit[x] = true;
            }
        }
        if let Some(x) = hit.iter().position(|&h| !h) {
            return Err(Error::InvalidCover(format!("element {x} is not covered")));
        }
        Ok(sorted)
    }
}

/// Some exact cover, or `None`. Branches on the smallest uncovered element
/// over the triples containing it, in index order, so the first cover found
/// is deterministic.
pub fn solve_x3c(inst: &X3CInstance) -> Result<Option<Vec<usize>>> {
    inst.validate()?;
    if inst.triples.len() > X3C_TRIPLE_LIMIT {
        return Err(Error::TooLarge {
            what: "triple count",
            actual: inst.triples.len(),
            limit: X3C_TRIPLE_LIMIT,
        });
    }
    let mut covered = vec![false; inst.ground_size];
    let mut chosen = Vec::new();
    Ok(cover_from(inst, &mut covered, &mut chosen).then_some(chosen))
}

fn cover_from(inst: &X3CInstance, covered: &mut [bool], chosen: &mut Vec<usize>) -> bool {
    let Some(x) = covered.iter().position(|&c| !c) else {
        return true;
    };
    for (j, t) in inst.triples.iter().enumerate() {
        if !t.contains(&x) || t.iter().any(|&y| covered[y]) {
            continue;
        }
        for &y in t {
            covered[y] = true;
        }
        chosen.push(j);
        if cover_from(inst, covered, chosen) {
            return true;
        }
        chosen.pop();
        for &y in t {
            covered[y] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> X3CInstance {
        X3CInstance::new(6, vec![[0, 1, 2], [0, 1, 3], [0, 1, 4], [3, 4, 5]]).unwrap()
    }

    #[test]
    fn solver_examples() {
        assert_eq!(solve_x3c(&sample()).unwrap(), Some(vec![0, 3]));
        let single = X3CInstance::new(3, vec![[0, 1, 2]]).unwrap();
        assert_eq!(solve_x3c(&single).unwrap(), Some(vec![0]));
        let overlapping = X3CInstance::new(6, vec![[0, 1, 2], [2, 3, 4], [1, 4, 5]]).unwrap();
        assert_eq!(solve_x3c(&overlapping).unwrap(), None);
    }

    #[test]
    fn occurrences() {
        assert_eq!(sample().occurrence(), vec![3, 3, 1, 2, 2, 1]);
        assert_eq!(sample().triples_with(3), vec![1, 3]);
    }

    #[test]
    fn validation() {
        assert!(X3CInstance::new(5, vec![[0, 1, 2]]).is_err());
        assert!(X3CInstance::new(3, vec![[0, 1, 1]]).is_err());
        assert!(X3CInstance::new(3, vec![[0, 1, 3]]).is_err());
        assert!(X3CInstance::new(6, vec![[0, 1, 2]]).is_err());
    }

    #[test]
    fn cover_checks() {
        let inst = sample();
        assert_eq!(inst.check_cover(&[3, 0]).unwrap(), vec![0, 3]);
        assert!(matches!(
            inst.check_cover(&[0, 1]),
            Err(Error::InvalidCover(_))
        ));
        assert!(inst.check_cover(&[0]).is_err());
        assert!(inst.check_cover(&[0, 9]).is_err());
    }

    #[test]
    fn triple_cap() {
        let triples = vec![[0, 1, 2]; 21];
        let inst = X3CInstance::new(3, triples).unwrap();
        assert!(matches!(solve_x3c(&inst), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn json_shape() {
        let text = serde_json::to_string(&sample()).unwrap();
        assert_eq!(
            text,
            r#"{"ground_size":6,"triples":[[0,1,2],[0,1,3],[0,1,4],[3,4,5]]}"#
        );
    }
}
