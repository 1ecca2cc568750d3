use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ribbon_braid::BraidKey;
use crate::tangle::{applicable_moves, apply_move, infer_type, normalize, Generator, StandardForm, TangleExpr};

/// Outcome of the bounded search. `NotProven` says nothing about isotopy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Proven { steps: usize },
    NotProven,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Proven { steps } => write!(f, "Proven ({steps} steps)"),
            Verdict::NotProven => write!(f, "NotProven"),
        }
    }
}

type Key = (Vec<Generator>, BraidKey);

fn key(sf: &StandardForm) -> Key {
    (sf.word.clone(), sf.braid.key())
}

struct Side {
    seen: HashMap<Key, usize>,
    frontier: Vec<StandardForm>,
    depth: usize,
}

impl Side {
    fn new(sf: StandardForm) -> Self {
        let mut seen = HashMap::new();
        seen.insert(key(&sf), 0);
        Side {
            seen,
            frontier: vec![sf],
            depth: 0,
        }
    }

    /// Expand one layer; returns the length of a connecting path if a new
    /// state is already known to `other`.
    fn expand(&mut self, other: &Side) -> Option<usize> {
        let mut next = Vec::new();
        let mut found: Option<usize> = None;
        for sf in &self.frontier {
            for mv in applicable_moves(sf) {
                let t = apply_move(sf, &mv).expect("listed move applies");
                let k = key(&t);
                if self.seen.contains_key(&k) {
                    continue;
                }
                if let Some(&d) = other.seen.get(&k) {
                    let total = self.depth + 1 + d;
                    found = Some(found.map_or(total, |f| f.min(total)));
                }
                self.seen.insert(k, self.depth + 1);
                next.push(t);
            }
        }
        next.sort_by(|a, b| a.word.cmp(&b.word));
        self.frontier = next;
        self.depth += 1;
        found
    }
}

/// Breadth-first search from both ends for a chain of at most `budget` moves
/// between the standard forms of `a` and `b`. States are compared by word and
/// braid group element.
pub fn equivalent(a: &TangleExpr, b: &TangleExpr, budget: usize) -> Result<Verdict> {
    let (ta, tb) = (infer_type(a)?, infer_type(b)?);
    if ta != tb {
        return Err(Error::SignatureMismatch {
            left: ta.to_string(),
            right: tb.to_string(),
        });
    }
    Ok(search(normalize(a)?, normalize(b)?, budget))
}

pub(crate) fn search(a: StandardForm, b: StandardForm, budget: usize) -> Verdict {
    let mut left = Side::new(a);
    let mut right = Side::new(b);
    if left.seen.contains_key(&key(&right.frontier[0])) {
        return Verdict::Proven { steps: 0 };
    }
    while left.depth + right.depth < budget {
        if left.frontier.is_empty() || right.frontier.is_empty() {
            break;
        }
        let found = if left.frontier.len() <= right.frontier.len() {
            left.expand(&right)
        } else {
            right.expand(&left)
        };
        if let Some(steps) = found {
            return Verdict::Proven { steps };
        }
    }
    Verdict::NotProven
}
