//! Local moves between standard forms of isotopic anchored tangles.
//!
//! Exchange moves act on two adjacent generators `word[pos]` (upper) and
//! `word[pos + 1]` (lower). Each exchange family is a list of rules, every
//! rule being one case of the relations between generators read in one
//! direction.

use std::fmt;

use crate::error::{Error, Result};
use crate::ribbon_braid::{Letter, RibbonBraid};
use crate::tangle::{Generator, StandardForm};

use Generator::{Cap, Cup, Pin};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// `Insert` grows the word, `Remove` shrinks it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Insert,
    Remove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Exchange the heights of two adjacent pins; corrects the braid by `ε_a^{±1}`.
    M1 { pos: usize, rule: u8 },
    /// Exchange a pin with an adjacent cap or cup.
    M2 { pos: usize, rule: u8 },
    /// Exchange two adjacent critical points.
    M3 { pos: usize, rule: u8 },
    /// Cancel a cap directly above a cup joining a neighbouring point.
    M4 { pos: usize },
    /// Slide a boundary point of the pin at `pos` past its equator.
    M5 { pos: usize, side: Side, dir: Direction },
    /// Move the anchor point of the pin at `pos` across the north pole; `Right`
    /// is the positive rotation, corrected by `ϑ_a^{-1}`.
    M6 { pos: usize, side: Side, dir: Direction },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::M1 { pos, rule } => write!(f, "M1@{pos}/{rule}"),
            Move::M2 { pos, rule } => write!(f, "M2@{pos}/{rule}"),
            Move::M3 { pos, rule } => write!(f, "M3@{pos}/{rule}"),
            Move::M4 { pos } => write!(f, "M4@{pos}"),
            Move::M5 { pos, side, dir } => write!(f, "M5@{pos}/{side:?}/{dir:?}"),
            Move::M6 { pos, side, dir } => write!(f, "M6@{pos}/{side:?}/{dir:?}"),
        }
    }
}

const M1_RULES: u8 = 2;
const M2_RULES: u8 = 8;
const M3_RULES: u8 = 8;

/// Rule `rule` of the pin exchange: `Some((upper, lower, sign))` where the braid
/// becomes `ε_a^{sign}·σ`.
fn m1_rule(rule: u8, upper: Generator, lower: Generator) -> Option<(Generator, Generator, bool)> {
    let (Pin(a, l, _), Pin(c, j, nd)) = (upper, lower) else {
        return None;
    };
    match rule {
        // p_{i+j+k,l} ∘ p_{i,j}  →  p_{i,j} ∘ p_{i+k,l}
        0 if a >= c + j => Some((Pin(c, j, nd + l), Pin(a - j, l, nd), true)),
        // p_{i,j} ∘ p_{i+k,l}  →  p_{i+j+k,l} ∘ p_{i,j}
        1 if a <= c => Some((Pin(c + l, j, nd + l), Pin(a, l, nd), false)),
        _ => None,
    }
}

fn m2_rule(rule: u8, upper: Generator, lower: Generator) -> Option<(Generator, Generator)> {
    match (rule, upper, lower) {
        (0, Cap(i, _), Pin(j, k, n)) if i + 1 < j => Some((Pin(j - 2, k, n - 2), Cap(i, n - 2))),
        (1, Cap(i, _), Pin(j, k, n)) if i + 1 > j + k => Some((Pin(j, k, n - 2), Cap(i - k, n - 2))),
        (2, Cup(i, _), Pin(j, k, n)) if i <= j => Some((Pin(j + 2, k, n + 2), Cup(i, n))),
        (3, Cup(i, _), Pin(j, k, n)) if i >= j + k => Some((Pin(j, k, n + 2), Cup(i - k, n))),
        (4, Pin(j, k, n), Cap(i, _)) if i <= j => Some((Cap(i, n + k), Pin(j + 2, k, n + 2))),
        (5, Pin(j, k, n), Cap(i, _)) if i >= j => Some((Cap(i + k, n + k), Pin(j, k, n + 2))),
        (6, Pin(j, k, n), Cup(i, _)) if i + 2 <= j => {
            Some((Cup(i, n - 2 + k), Pin(j - 2, k, n - 2)))
        }
        (7, Pin(j, k, n), Cup(i, _)) if i >= j => Some((Cup(i + k, n - 2 + k), Pin(j, k, n - 2))),
        _ => None,
    }
}

fn m3_rule(rule: u8, upper: Generator, lower: Generator) -> Option<(Generator, Generator)> {
    match (rule, upper, lower) {
        (0, Cap(i, n), Cap(j, _)) if i + 1 < j => Some((Cap(j - 2, n), Cap(i, n + 2))),
        (1, Cap(u, n), Cap(l, _)) if u >= l => Some((Cap(l, n), Cap(u + 2, n + 2))),
        (2, Cup(i, n), Cup(j, _)) if i <= j => Some((Cup(j + 2, n), Cup(i, n - 2))),
        (3, Cup(u, n), Cup(l, _)) if u >= l + 2 => Some((Cup(l, n), Cup(u - 2, n - 2))),
        (4, Cap(i, n), Cup(j, _)) if i + 1 < j => Some((Cup(j - 2, n - 2), Cap(i, n - 2))),
        (5, Cap(i, n), Cup(j, _)) if i > j + 1 => Some((Cup(j, n - 2), Cap(i - 2, n - 2))),
        (6, Cup(u, m), Cap(l, _)) if l <= u => Some((Cap(l, m + 2), Cup(u + 2, m + 2))),
        (7, Cup(u, m), Cap(l, _)) if l >= u => Some((Cap(l + 2, m + 2), Cup(u, m + 2))),
        _ => None,
    }
}

/// Boundary-point slide block replacing `p_{i,j}(n)`, top first.
fn slide_block(side: Side, i: usize, j: usize, n: usize) -> [Generator; 3] {
    match side {
        Side::Right => [Cap(i + j - 1, n + j), Pin(i, j, n + 2), Cup(i, n)],
        Side::Left => [Cap(i + 1, n + j), Pin(i + 2, j, n + 2), Cup(i, n)],
    }
}

/// Rotation block replacing `p_{i,j}(n)`, top first: `j` caps, the pin
/// `p_{i+j,j}(n+2j)`, then `j` cups.
fn rotation_block(side: Side, i: usize, j: usize, n: usize) -> Vec<Generator> {
    let first = match side {
        Side::Right => i + j,
        Side::Left => i,
    };
    let mut out: Vec<Generator> = (0..j).map(|t| Cap(first + t, n + j + 2 * t)).collect();
    out.push(Pin(i + j, j, n + 2 * j));
    out.extend((0..j).rev().map(|t| Cup(i + t, n + 2 * t)));
    out
}

fn with_braid(sf: &StandardForm, letter: Letter) -> RibbonBraid {
    let g = RibbonBraid::generator(sf.braid.strands(), letter).expect("letter in range");
    g.multiply(&sf.braid).expect("same strand count")
}

fn splice(sf: &StandardForm, start: usize, len: usize, repl: &[Generator], braid: RibbonBraid) -> StandardForm {
    let mut word = sf.word[..start].to_vec();
    word.extend_from_slice(repl);
    word.extend_from_slice(&sf.word[start + len..]);
    StandardForm { word, braid }
}

/// `(i, j, n)` of the pin at `pos`, if any.
fn pin_at(sf: &StandardForm, pos: usize) -> Option<(usize, usize, usize)> {
    match sf.word.get(pos) {
        Some(&Pin(i, j, n)) => Some((i, j, n)),
        _ => None,
    }
}

fn try_apply(sf: &StandardForm, mv: &Move) -> Option<StandardForm> {
    let pair = |pos: usize| -> Option<(Generator, Generator)> {
        Some((*sf.word.get(pos)?, *sf.word.get(pos + 1)?))
    };
    match *mv {
        Move::M1 { pos, rule } => {
            let (u, l) = pair(pos)?;
            let (nu, nl, positive) = m1_rule(rule, u, l)?;
            let a = sf.input_number(pos + 1);
            let letter = if positive { Letter::E(a) } else { Letter::EInv(a) };
            Some(splice(sf, pos, 2, &[nu, nl], with_braid(sf, letter)))
        }
        Move::M2 { pos, rule } => {
            let (u, l) = pair(pos)?;
            let (nu, nl) = m2_rule(rule, u, l)?;
            Some(splice(sf, pos, 2, &[nu, nl], sf.braid.clone()))
        }
        Move::M3 { pos, rule } => {
            let (u, l) = pair(pos)?;
            let (nu, nl) = m3_rule(rule, u, l)?;
            Some(splice(sf, pos, 2, &[nu, nl], sf.braid.clone()))
        }
        Move::M4 { pos } => match pair(pos)? {
            (Cap(i, _), Cup(j, _)) if i == j + 1 || j == i + 1 => {
                Some(splice(sf, pos, 2, &[], sf.braid.clone()))
            }
            _ => None,
        },
        Move::M5 { pos, side, dir } => match dir {
            Direction::Insert => {
                let (i, j, n) = pin_at(sf, pos)?;
                if j == 0 {
                    return None;
                }
                Some(splice(sf, pos, 1, &slide_block(side, i, j, n), sf.braid.clone()))
            }
            Direction::Remove => {
                let (pi, j, _) = pin_at(sf, pos)?;
                let start = pos.checked_sub(1)?;
                let Some(&Cup(i, n)) = sf.word.get(pos + 1) else {
                    return None;
                };
                if j == 0 || pi < i || (side == Side::Left && pi < i + 2) {
                    return None;
                }
                let block = slide_block(side, i, j, n);
                if sf.word[start..pos + 2] != block {
                    return None;
                }
                Some(splice(sf, start, 3, &[Pin(i, j, n)], sf.braid.clone()))
            }
        },
        Move::M6 { pos, side, dir } => {
            let a = sf.input_number(pos);
            let positive = matches!((side, dir), (Side::Right, Direction::Insert) | (Side::Left, Direction::Remove));
            let letter = if positive { Letter::TInv(a) } else { Letter::T(a) };
            match dir {
                Direction::Insert => {
                    let (i, j, n) = pin_at(sf, pos)?;
                    let block = rotation_block(side, i, j, n);
                    Some(splice(sf, pos, 1, &block, with_braid(sf, letter)))
                }
                Direction::Remove => {
                    let (pi, j, pn) = pin_at(sf, pos)?;
                    if pi < j || pn < 2 * j || pos < j {
                        return None;
                    }
                    let (i, n) = (pi - j, pn - 2 * j);
                    let block = rotation_block(side, i, j, n);
                    let start = pos - j;
                    if sf.word.get(start..start + block.len())? != block.as_slice() {
                        return None;
                    }
                    Some(splice(sf, start, block.len(), &[Pin(i, j, n)], with_braid(sf, letter)))
                }
            }
        }
    }
}

/// Apply a move, failing if its pattern does not match at the position.
pub fn apply_move(sf: &StandardForm, mv: &Move) -> Result<StandardForm> {
    try_apply(sf, mv).ok_or_else(|| Error::MoveNotApplicable(format!("{mv} on {sf}")))
}

/// Every move applicable to `sf`, in a fixed order.
pub fn applicable_moves(sf: &StandardForm) -> Vec<Move> {
    let mut out = Vec::new();
    let len = sf.word.len();
    for pos in 0..len.saturating_sub(2) {
        let (u, l) = (sf.word[pos], sf.word[pos + 1]);
        for rule in 0..M1_RULES {
            if m1_rule(rule, u, l).is_some() {
                out.push(Move::M1 { pos, rule });
            }
        }
        for rule in 0..M2_RULES {
            if m2_rule(rule, u, l).is_some() {
                out.push(Move::M2 { pos, rule });
            }
        }
        for rule in 0..M3_RULES {
            if m3_rule(rule, u, l).is_some() {
                out.push(Move::M3 { pos, rule });
            }
        }
        if try_apply(sf, &Move::M4 { pos }).is_some() {
            out.push(Move::M4 { pos });
        }
    }
    for pos in 0..len {
        if !matches!(sf.word[pos], Pin(..)) {
            continue;
        }
        for side in [Side::Left, Side::Right] {
            for dir in [Direction::Insert, Direction::Remove] {
                for mv in [Move::M5 { pos, side, dir }, Move::M6 { pos, side, dir }] {
                    if try_apply(sf, &mv).is_some() {
                        out.push(mv);
                    }
                }
            }
        }
    }
    out
}
