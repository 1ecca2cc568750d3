//! Anchored planar tangles as typed expressions.
//!
//! A [`TangleExpr`] is built from generating tangles by operadic composition
//! and by the action of ribbon braids on the input discs. [`normalize`]
//! turns any expression into a [`StandardForm`]: a `∘₁`-chain of generators
//! ending in the unit, plus one ribbon braid acting on the inputs.

mod equiv;
mod moves;
mod normal;
pub mod parse;
pub mod random;

use std::fmt;

use crate::error::{Error, Result};
use crate::ribbon_braid::RibbonBraid;

pub use equiv::{equivalent, Verdict};
pub use moves::{applicable_moves, apply_move, Direction, Move, Side};
pub use normal::{combine, normalize, StandardForm};
pub use parse::parse_expr;

/// Arity signature `(k_1,…,k_r; k_0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangleType {
    pub inputs: Vec<usize>,
    pub output: usize,
}

impl fmt::Display for TangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ins: Vec<String> = self.inputs.iter().map(|k| k.to_string()).collect();
        write!(f, "({}; {})", ins.join(","), self.output)
    }
}

/// Generating tangles. Index conventions: `Cap(i, n)` has type `(n+2; n)` and
/// joins boundary points `i+1, i+2`; `Cup(i, n)` has type `(n; n+2)`;
/// `Pin(i, j, n)` has type `(n, j; n+j)` and places its second input at output
/// positions `i+1..=i+j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Unit,
    Id(usize),
    Cap(usize, usize),
    Cup(usize, usize),
    Pin(usize, usize, usize),
}

impl Generator {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Generator::Unit | Generator::Id(_) => true,
            Generator::Cap(i, n) | Generator::Cup(i, n) => i <= n,
            Generator::Pin(i, _, n) => i <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadGenerator(self.to_string()))
        }
    }

    pub fn tangle_type(&self) -> TangleType {
        match *self {
            Generator::Unit => TangleType {
                inputs: vec![],
                output: 0,
            },
            Generator::Id(n) => TangleType {
                inputs: vec![n],
                output: n,
            },
            Generator::Cap(_, n) => TangleType {
                inputs: vec![n + 2],
                output: n,
            },
            Generator::Cup(_, n) => TangleType {
                inputs: vec![n],
                output: n + 2,
            },
            Generator::Pin(_, j, n) => TangleType {
                inputs: vec![n, j],
                output: n + j,
            },
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Unit => write!(f, "u"),
            Generator::Id(n) => write!(f, "(id {n})"),
            Generator::Cap(i, n) => write!(f, "(cap {i} {n})"),
            Generator::Cup(i, n) => write!(f, "(cup {i} {n})"),
            Generator::Pin(i, j, n) => write!(f, "(p {i} {j} {n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TangleExpr {
    Gen(Generator),
    Comp(Box<TangleExpr>, usize, Box<TangleExpr>),
    Act(Box<TangleExpr>, RibbonBraid),
}

impl TangleExpr {
    pub fn unit() -> Self {
        TangleExpr::Gen(Generator::Unit)
    }

    pub fn id(n: usize) -> Self {
        TangleExpr::Gen(Generator::Id(n))
    }

    pub fn cap(i: usize, n: usize) -> Self {
        TangleExpr::Gen(Generator::Cap(i, n))
    }

    pub fn cup(i: usize, n: usize) -> Self {
        TangleExpr::Gen(Generator::Cup(i, n))
    }

    pub fn pin(i: usize, j: usize, n: usize) -> Self {
        TangleExpr::Gen(Generator::Pin(i, j, n))
    }

    /// Unchecked composition; use [`compose`] for the type-checked version.
    pub fn comp(outer: TangleExpr, slot: usize, inner: TangleExpr) -> Self {
        TangleExpr::Comp(Box::new(outer), slot, Box::new(inner))
    }

    pub fn act(body: TangleExpr, braid: RibbonBraid) -> Self {
        TangleExpr::Act(Box::new(body), braid)
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            TangleExpr::Gen(_) => 1,
            TangleExpr::Comp(a, _, b) => 1 + a.size() + b.size(),
            TangleExpr::Act(a, _) => 1 + a.size(),
        }
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Gen(g) => write!(f, "{g}"),
            TangleExpr::Comp(a, s, b) => write!(f, "(comp {s} {a} {b})"),
            TangleExpr::Act(a, b) => write!(f, "(act {a} {b})"),
        }
    }
}

pub fn infer_type(e: &TangleExpr) -> Result<TangleType> {
    infer_at(e, "root")
}

fn infer_at(e: &TangleExpr, path: &str) -> Result<TangleType> {
    match e {
        TangleExpr::Gen(g) => {
            g.validate()?;
            Ok(g.tangle_type())
        }
        TangleExpr::Comp(outer, slot, inner) => {
            let to = infer_at(outer, &format!("{path}.outer"))?;
            let ti = infer_at(inner, &format!("{path}.inner"))?;
            if *slot == 0 || *slot > to.inputs.len() {
                return Err(Error::SlotOutOfRange {
                    slot: *slot,
                    arity: to.inputs.len(),
                    path: path.to_string(),
                });
            }
            let expected = to.inputs[slot - 1];
            if expected != ti.output {
                return Err(Error::TypeMismatch {
                    path: path.to_string(),
                    expected,
                    found: ti.output,
                });
            }
            let mut inputs = to.inputs[..slot - 1].to_vec();
            inputs.extend_from_slice(&ti.inputs);
            inputs.extend_from_slice(&to.inputs[*slot..]);
            Ok(TangleType {
                inputs,
                output: to.output,
            })
        }
        TangleExpr::Act(body, braid) => {
            let tb = infer_at(body, &format!("{path}.body"))?;
            if braid.strands() != tb.inputs.len() {
                return Err(Error::StrandMismatch {
                    left: tb.inputs.len(),
                    right: braid.strands(),
                });
            }
            // Input i of the result feeds input π(i) of the body.
            let pi = braid.permutation();
            let inputs = (0..tb.inputs.len()).map(|i| tb.inputs[pi.apply(i)]).collect();
            Ok(TangleType {
                inputs,
                output: tb.output,
            })
        }
    }
}

/// Type-checked operadic composition.
pub fn compose(outer: TangleExpr, slot: usize, inner: TangleExpr) -> Result<TangleExpr> {
    let e = TangleExpr::comp(outer, slot, inner);
    infer_type(&e)?;
    Ok(e)
}

/// Type-checked braid action.
pub fn act(body: TangleExpr, braid: RibbonBraid) -> Result<TangleExpr> {
    let e = TangleExpr::act(body, braid);
    infer_type(&e)?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon_braid::Letter;

    #[test]
    fn generator_types() {
        let t = infer_type(&TangleExpr::pin(2, 3, 5)).unwrap();
        assert_eq!(t.inputs, vec![5, 3]);
        assert_eq!(t.output, 8);
        assert!(infer_type(&TangleExpr::cap(3, 2)).is_err());
    }

    #[test]
    fn composition_types() {
        let e = TangleExpr::comp(TangleExpr::cap(0, 2), 1, TangleExpr::cup(0, 2));
        let t = infer_type(&e).unwrap();
        assert_eq!((t.inputs, t.output), (vec![2], 2));
        let bad = TangleExpr::comp(TangleExpr::cap(0, 2), 1, TangleExpr::cup(0, 4));
        assert!(matches!(infer_type(&bad), Err(Error::TypeMismatch { .. })));
        let e = compose(TangleExpr::pin(0, 3, 0), 1, TangleExpr::unit()).unwrap();
        assert_eq!(infer_type(&e).unwrap(), TangleType { inputs: vec![3], output: 3 });
    }

    #[test]
    fn action_types_compose() {
        let body = TangleExpr::comp(TangleExpr::pin(1, 2, 3), 1, TangleExpr::pin(0, 1, 2));
        // inputs (2, 1, 2)
        let s = RibbonBraid::from_word(3, &[Letter::E(1)]).unwrap();
        let t = RibbonBraid::from_word(3, &[Letter::E(2), Letter::T(1)]).unwrap();
        let twice = TangleExpr::act(TangleExpr::act(body.clone(), s.clone()), t.clone());
        let once = TangleExpr::act(body.clone(), s.multiply(&t).unwrap());
        assert_eq!(infer_type(&twice).unwrap(), infer_type(&once).unwrap());
        let e1 = infer_type(&TangleExpr::act(body.clone(), s)).unwrap();
        assert_eq!(e1.inputs, vec![1, 2, 2]);
        let id = TangleExpr::act(body.clone(), RibbonBraid::identity(3));
        assert_eq!(infer_type(&id).unwrap(), infer_type(&body).unwrap());
        assert!(act(body, RibbonBraid::identity(2)).is_err());
    }
}
