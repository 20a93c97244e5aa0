//! Exact induced, disconnected and c-disconnected matching numbers.
//!
//! The branch-and-bound solvers live in [`induced`] and [`disconnected`];
//! [`oracle`] is a plain enumerator kept deliberately separate from them so
//! it can serve as ground truth.

pub mod disconnected;
pub mod induced;
pub mod oracle;

pub use disconnected::{
    c_disconnected_matching, c_disconnected_matching_number, disconnected_matching_number,
};
pub use induced::{induced_matching, induced_matching_number};
pub use oracle::{oracle_enumerate, oracle_enumerate_with_limit, ORACLE_EDGE_LIMIT};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::matching_number;

/// Cap on explored search nodes for a single solver call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn new(nodes: u64) -> Self {
        Budget { nodes }
    }

    pub fn unlimited() -> Self {
        Budget { nodes: u64::MAX }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_NODES)
    }
}

/// Node counter shared by the search routines.
#[derive(Debug)]
pub(crate) struct Ticker {
    used: u64,
    limit: u64,
}

impl Ticker {
    pub(crate) fn new(budget: Budget) -> Self {
        Ticker {
            used: 0,
            limit: budget.nodes,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExhausted { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// ν, ν_s, ν_d and the chain ν_{d,1} ≥ ν_{d,2} ≥ … ≥ ν_{d,ν_s}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingNumbers {
    pub nu: usize,
    pub nu_s: usize,
    pub nu_d: usize,
    /// `chain[c - 1]` is ν_{d,c} for `c = 1..=nu_s`.
    pub chain: Vec<usize>,
}

impl MatchingNumbers {
    /// ν_{d,c}; zero past `nu_s` since only the empty matching qualifies there.
    pub fn nu_dc(&self, c: usize) -> usize {
        assert!(c >= 1, "c must be positive");
        if c == 1 {
            self.nu
        } else {
            self.chain.get(c - 1).copied().unwrap_or(0)
        }
    }

    /// Structural checks every correct profile satisfies. Returns a
    /// description of the first violation.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.chain.len() != self.nu_s {
            return Err(format!(
                "chain has {} entries, expected nu_s = {}",
                self.chain.len(),
                self.nu_s
            ));
        }
        if let Some(&first) = self.chain.first() {
            if first != self.nu {
                return Err(format!("nu_d,1 = {first} differs from nu = {}", self.nu));
            }
        }
        if let Some(w) = self.chain.windows(2).find(|w| w[0] < w[1]) {
            return Err(format!("chain increases from {} to {}", w[0], w[1]));
        }
        if self.chain.contains(&0) {
            return Err("chain contains a zero below nu_s".into());
        }
        if let Some(&last) = self.chain.last() {
            if last < self.nu_s {
                return Err(format!("nu_d,nu_s = {last} is below nu_s = {}", self.nu_s));
            }
        }
        if self.nu_s > self.nu {
            return Err(format!("nu_s = {} exceeds nu = {}", self.nu_s, self.nu));
        }
        let expected_nu_d = if self.nu_s >= 2 { self.chain[1] } else { 0 };
        if self.nu_d != expected_nu_d {
            return Err(format!(
                "nu_d = {} but chain says {expected_nu_d}",
                self.nu_d
            ));
        }
        Ok(())
    }
}

/// Full profile by branch-and-bound. The budget applies to each solver
/// call separately.
pub fn full_profile(g: &Graph, budget: Budget) -> Result<MatchingNumbers> {
    let nu = matching_number(g);
    let nu_s = induced_matching_number(g, budget)?;
    let mut chain = Vec::with_capacity(nu_s);
    if nu_s >= 1 {
        chain.push(nu);
    }
    let mut c = 2;
    while c <= nu_s {
        let upper = chain[c - 2];
        let (m, comps) = disconnected::solve(g, c, budget, upper)?;
        // the optimum for c is also optimal for every larger c it satisfies
        let reach = comps.clamp(c, nu_s);
        for _ in c..=reach {
            chain.push(m.len());
        }
        c = reach + 1;
    }
    let nu_d = chain.get(1).copied().unwrap_or(0);
    let numbers = MatchingNumbers {
        nu,
        nu_s,
        nu_d,
        chain,
    };
    numbers.check().map_err(Error::InternalInvariantViolation)?;
    Ok(numbers)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k2() -> Graph {
        Graph::new(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn profile_examples() {
        let p = full_profile(&two_k2(), Budget::default()).unwrap();
        assert_eq!(
            (p.nu, p.nu_s, p.nu_d, p.chain.clone()),
            (2, 2, 2, vec![2, 2])
        );
        let p = full_profile(&Graph::complete(4), Budget::default()).unwrap();
        assert_eq!((p.nu, p.nu_s, p.nu_d, p.chain.clone()), (2, 1, 0, vec![2]));
        let p = full_profile(&Graph::cycle(6), Budget::default()).unwrap();
        assert_eq!((p.nu, p.nu_s, p.chain.clone()), (3, 2, vec![3, 2]));
    }

    #[test]
    fn profile_serializes_with_fixed_keys() {
        let p = full_profile(&two_k2(), Budget::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"nu":2,"nu_s":2,"nu_d":2,"chain":[2,2]}"#
        );
    }

    #[test]
    fn check_rejects_bad_chains() {
        let bad = MatchingNumbers {
            nu: 3,
            nu_s: 2,
            nu_d: 4,
            chain: vec![3, 4],
        };
        assert!(bad.check().is_err());
        let bad = MatchingNumbers {
            nu: 3,
            nu_s: 2,
            nu_d: 1,
            chain: vec![3, 1],
        };
        assert!(bad.check().is_err());
    }

    #[test]
    fn nu_dc_past_nu_s_is_zero() {
        let p = full_profile(&Graph::complete(4), Budget::default()).unwrap();
        assert_eq!(p.nu_dc(1), 2);
        assert_eq!(p.nu_dc(2), 0);
    }
}
