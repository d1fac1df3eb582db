use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::label::{admissible, Label};
use crate::{Error, Result};

/// Boundary condition of the fusion tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Boundary {
    /// Labels `j_0 .. j_{n-1}` with `j_n = j_0`.
    Periodic,
    /// Labels `j_0 .. j_n` with both end labels fixed.
    Fixed { left: Label, right: Label },
}

/// Admissible labelings of a fusion tree of `sites` sigma-anyons.
#[derive(Clone, Debug)]
pub struct FusionBasis {
    level: u32,
    sites: usize,
    boundary: Boundary,
    states: Vec<Vec<Label>>,
    index: HashMap<Vec<Label>, usize>,
}

fn step_ok(k: u32, a: Label, b: Label) -> bool {
    admissible(k, a, Label::SIGMA, b)
}

impl FusionBasis {
    pub fn new(level: u32, sites: usize, boundary: Boundary) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidLevel);
        }
        if sites == 0 {
            return Err(Error::EmptyDiagram);
        }
        if let Boundary::Fixed { left, right } = boundary {
            for l in [left, right] {
                if l.0 > level {
                    return Err(Error::LabelOutOfRange { label: l.to_string(), level });
                }
            }
        }
        let labels: Vec<Label> = (0..=level).map(Label).collect();
        let len = match boundary {
            Boundary::Periodic => sites,
            Boundary::Fixed { .. } => sites + 1,
        };
        let mut states = Vec::new();
        let mut prefix = Vec::with_capacity(len);
        let starts: Vec<Label> = match boundary {
            Boundary::Periodic => labels.clone(),
            Boundary::Fixed { left, .. } => vec![left],
        };
        for s in starts {
            prefix.push(s);
            extend(level, len, boundary, &labels, &mut prefix, &mut states);
            prefix.pop();
        }
        let index = states.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Ok(Self { level, sites, boundary, states, index })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[Vec<Label>] {
        &self.states
    }

    pub fn index_of(&self, state: &[Label]) -> Option<usize> {
        self.index.get(state).copied()
    }

    /// Sites carrying a projector: all sites when periodic, the interior labels otherwise.
    pub fn generator_sites(&self) -> Vec<usize> {
        match self.boundary {
            Boundary::Periodic => (0..self.sites).collect(),
            Boundary::Fixed { .. } => (1..self.sites).collect(),
        }
    }

    /// Labels `(j_{x-1}, j_x, j_{x+1})` around generator site `x`.
    pub(crate) fn neighborhood(&self, state: &[Label], x: usize) -> (Label, Label, Label) {
        match self.boundary {
            Boundary::Periodic => {
                let n = self.sites;
                (state[(x + n - 1) % n], state[x], state[(x + 1) % n])
            }
            Boundary::Fixed { .. } => (state[x - 1], state[x], state[x + 1]),
        }
    }

    /// Two generator sites are neighbors (cyclically when periodic).
    pub fn are_adjacent(&self, x: usize, y: usize) -> bool {
        let d = x.abs_diff(y);
        match self.boundary {
            Boundary::Periodic => d == 1 || (self.sites > 2 && d == self.sites - 1),
            Boundary::Fixed { .. } => d == 1,
        }
    }
}

fn extend(
    k: u32,
    len: usize,
    boundary: Boundary,
    labels: &[Label],
    prefix: &mut Vec<Label>,
    out: &mut Vec<Vec<Label>>,
) {
    if prefix.len() == len {
        let ok = match boundary {
            Boundary::Periodic => step_ok(k, prefix[len - 1], prefix[0]),
            Boundary::Fixed { right, .. } => prefix[len - 1] == right,
        };
        if ok {
            out.push(prefix.clone());
        }
        return;
    }
    let last = *prefix.last().expect("nonempty prefix");
    for &next in labels {
        if step_ok(k, last, next) {
            prefix.push(next);
            extend(k, len, boundary, labels, prefix, out);
            prefix.pop();
        }
    }
}

/// Number of admissible labelings from powers of the sigma-fusion adjacency matrix:
/// `tr(A^n)` for periodic chains, `(A^n)_{left,right}` for fixed ends.
pub fn transfer_count(level: u32, sites: usize, boundary: Boundary) -> u128 {
    let m = level as usize + 1;
    let adj: Vec<Vec<u128>> = (0..m)
        .map(|a| (0..m).map(|b| step_ok(level, Label(a as u32), Label(b as u32)) as u128).collect())
        .collect();
    let mut pow: Vec<Vec<u128>> = (0..m).map(|a| (0..m).map(|b| (a == b) as u128).collect()).collect();
    for _ in 0..sites {
        pow = (0..m)
            .map(|a| (0..m).map(|b| (0..m).map(|c| pow[a][c] * adj[c][b]).sum()).collect())
            .collect();
    }
    match boundary {
        Boundary::Periodic => (0..m).map(|a| pow[a][a]).sum(),
        Boundary::Fixed { left, right } => pow[left.0 as usize][right.0 as usize],
    }
}
