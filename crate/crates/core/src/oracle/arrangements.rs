//! Bisector arrangements over a finite plane, handled through a precomputed
//! table of midpoints of every line against every line pair.

use std::collections::{BTreeSet, HashMap};

use super::brute::{all_line_pairs, brute_mid, line_product, Plane};
use crate::conic::{LinePair, MidResult};
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::geometry::Midpoint;

/// Midpoint bookkeeping for one line against a set of pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineState {
    Unset,
    Mid(Midpoint<Fp>),
    Conflict,
}

impl LineState {
    fn merge(&self, m: &MidResult<Fp>) -> LineState {
        match (self, m) {
            (LineState::Conflict, _) => LineState::Conflict,
            (s, MidResult::MeetsNoCross | MidResult::NoMeet) => s.clone(),
            (LineState::Unset, MidResult::Crosses(m)) => LineState::Mid(m.clone()),
            (LineState::Mid(a), MidResult::Crosses(b)) if a == b => self.clone(),
            _ => LineState::Conflict,
        }
    }
}

pub struct Universe {
    pub plane: Plane,
    pub pairs: Vec<LinePair<Fp>>,
    /// Line indices of each pair.
    pub ends: Vec<[usize; 2]>,
    index: HashMap<LinePair<Fp>, usize>,
    /// `mids[pair][line]`.
    mids: Vec<Vec<MidResult<Fp>>>,
}

impl Universe {
    pub fn new(plane: Plane) -> Self {
        let pairs = all_line_pairs(&plane.lines);
        let line_index: HashMap<_, _> = plane
            .lines
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let ends = pairs
            .iter()
            .map(|p| [line_index[p.first()], line_index[p.second()]])
            .collect();
        let mids = pairs
            .iter()
            .map(|p| {
                let f = line_product(p.first(), p.second());
                plane
                    .lines
                    .iter()
                    .map(|l| brute_mid(&plane, &f, l))
                    .collect()
            })
            .collect();
        let index = pairs
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Universe {
            plane,
            pairs,
            ends,
            index,
            mids,
        }
    }

    pub fn index_of(&self, pair: &LinePair<Fp>) -> usize {
        self.index[pair]
    }

    pub fn empty_state(&self) -> Vec<LineState> {
        vec![LineState::Unset; self.plane.lines.len()]
    }

    pub fn add(&self, state: &[LineState], pair: usize) -> Vec<LineState> {
        state
            .iter()
            .zip(&self.mids[pair])
            .map(|(s, m)| s.merge(m))
            .collect()
    }

    pub fn state_of(&self, set: &[usize]) -> Vec<LineState> {
        set.iter().fold(self.empty_state(), |s, &p| self.add(&s, p))
    }

    /// Whether every line of `set` has a consistent midpoint in `state`.
    pub fn consistent(&self, state: &[LineState], set: &[usize]) -> bool {
        set.iter()
            .flat_map(|&p| self.ends[p])
            .all(|l| state[l] != LineState::Conflict)
    }

    pub fn is_arrangement(&self, set: &[usize]) -> bool {
        self.consistent(&self.state_of(set), set)
    }

    /// Pairs outside `set` whose addition keeps it an arrangement.
    pub fn extensions(&self, set: &[usize], state: &[LineState]) -> Vec<usize> {
        let members: BTreeSet<usize> = set.iter().copied().collect();
        let mut with = set.to_vec();
        with.push(0);
        (0..self.pairs.len())
            .filter(|q| !members.contains(q))
            .filter(|&q| {
                *with.last_mut().expect("nonempty") = q;
                self.consistent(&self.add(state, q), &with)
            })
            .collect()
    }

    pub fn to_pairs(&self, set: &[usize]) -> Vec<LinePair<Fp>> {
        set.iter().map(|&i| self.pairs[i].clone()).collect()
    }
}

/// Every maximal arrangement over GF(3), by depth-first extension in index
/// order.
pub fn maximal_arrangements(u: &Universe) -> Result<Vec<Vec<usize>>> {
    if u.plane.p > 3 {
        return Err(Error::FieldTooLarge(format!(
            "maximal-arrangement search is limited to F3; {} has {} line pairs",
            u.plane.spec,
            u.pairs.len()
        )));
    }
    let mut out = Vec::new();
    let mut set = Vec::new();
    dfs(u, &mut set, &u.empty_state(), &mut out);
    Ok(out)
}

fn dfs(u: &Universe, set: &mut Vec<usize>, state: &[LineState], out: &mut Vec<Vec<usize>>) {
    let ext = u.extensions(set, state);
    if ext.is_empty() {
        out.push(set.clone());
        return;
    }
    let floor = set.last().map_or(0, |&l| l + 1);
    for q in ext.into_iter().filter(|&q| q >= floor) {
        let next = u.add(state, q);
        set.push(q);
        dfs(u, set, &next, out);
        set.pop();
    }
}
