use std::fmt;

use crate::error::{Error, Result};
use crate::ribbon_braid::RibbonBraid;
use crate::tangle::{infer_type, Generator, TangleExpr, TangleType};

/// A chain `g_N ∘₁ ⋯ ∘₁ g_0` (stored top first, `g_0 = Unit`) and a ribbon
/// braid on its inputs. The inputs of the chain are the second slots of its
/// `Pin`s, numbered from the bottom of the chain upwards. The tangle it
/// denotes evaluates as `Z(chain) ∘ P(braid)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub word: Vec<Generator>,
    pub braid: RibbonBraid,
}

impl StandardForm {
    /// Check that the chain is well typed and the braid has one strand per input.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadGenerator(msg));
        match self.word.last() {
            Some(Generator::Unit) => {}
            _ => return bad("standard form must end in the unit".into()),
        }
        let mut size = 0usize;
        for (depth, g) in self.word.iter().rev().enumerate().skip(1) {
            g.validate()?;
            let t = g.tangle_type();
            if matches!(g, Generator::Unit | Generator::Id(_)) {
                return bad(format!("{g} inside a standard form"));
            }
            if t.inputs[0] != size {
                return Err(Error::TypeMismatch {
                    path: format!("word[{}]", self.word.len() - 1 - depth),
                    expected: t.inputs[0],
                    found: size,
                });
            }
            size = t.output;
        }
        let r = self.input_sizes().len();
        if self.braid.strands() != r {
            return Err(Error::StrandMismatch {
                left: r,
                right: self.braid.strands(),
            });
        }
        Ok(())
    }

    /// Box sizes of the chain's inputs, bottom pin first.
    pub fn input_sizes(&self) -> Vec<usize> {
        self.word
            .iter()
            .rev()
            .filter_map(|g| match g {
                Generator::Pin(_, j, _) => Some(*j),
                _ => None,
            })
            .collect()
    }

    pub fn output_size(&self) -> usize {
        match self.word.first() {
            Some(g) => g.tangle_type().output,
            None => 0,
        }
    }

    /// Type of the denoted tangle, i.e. with the braid applied.
    pub fn tangle_type(&self) -> TangleType {
        let k = self.input_sizes();
        let pi = self.braid.permutation();
        TangleType {
            inputs: (0..k.len()).map(|i| k[pi.apply(i)]).collect(),
            output: self.output_size(),
        }
    }

    /// Word index of the `b`-th pin counted from the bottom (1-based).
    pub fn pin_position(&self, b: usize) -> Option<usize> {
        let mut count = 0;
        for idx in (0..self.word.len()).rev() {
            if matches!(self.word[idx], Generator::Pin(..)) {
                count += 1;
                if count == b {
                    return Some(idx);
                }
            }
        }
        None
    }

    /// Input number (1-based, from the bottom) of the pin at word index `idx`.
    pub fn input_number(&self, idx: usize) -> usize {
        self.word[idx..]
            .iter()
            .filter(|g| matches!(g, Generator::Pin(..)))
            .count()
    }

    /// The expression `(act (comp 1 g_N (comp 1 … u)) braid)`; the action is
    /// omitted when the braid word is empty.
    pub fn to_expr(&self) -> TangleExpr {
        let mut e = TangleExpr::unit();
        for g in self.word.iter().rev().skip(1) {
            e = TangleExpr::comp(TangleExpr::Gen(*g), 1, e);
        }
        if self.braid.is_trivial_word() {
            e
        } else {
            TangleExpr::act(e, self.braid.clone())
        }
    }
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

fn generator_form(g: Generator) -> StandardForm {
    let (word, r) = match g {
        Generator::Unit => (vec![Generator::Unit], 0),
        Generator::Id(n) => (vec![Generator::Pin(0, n, 0), Generator::Unit], 1),
        Generator::Cap(_, n) => (vec![g, Generator::Pin(0, n + 2, 0), Generator::Unit], 1),
        Generator::Cup(_, n) => (vec![g, Generator::Pin(0, n, 0), Generator::Unit], 1),
        Generator::Pin(_, _, n) => (vec![g, Generator::Pin(0, n, 0), Generator::Unit], 2),
    };
    StandardForm {
        word,
        braid: RibbonBraid::identity(r),
    }
}

/// Normalize a well-typed expression.
pub fn normalize(e: &TangleExpr) -> Result<StandardForm> {
    infer_type(e)?;
    Ok(normalize_typed(e))
}

fn normalize_typed(e: &TangleExpr) -> StandardForm {
    match e {
        TangleExpr::Gen(g) => generator_form(*g),
        TangleExpr::Comp(a, slot, b) => {
            combine(&normalize_typed(a), *slot, &normalize_typed(b)).expect("typed composition")
        }
        TangleExpr::Act(a, tau) => {
            let sf = normalize_typed(a);
            StandardForm {
                word: sf.word,
                braid: sf.braid.multiply(tau).expect("typed action"),
            }
        }
    }
}

/// Compose two standard forms at input `slot` of `outer`:
/// `(W,σ) ∘_a (W′,σ′) = (W ∘_{π_σ(a)} W′, σ ∘_a σ′)`.
///
/// The pin `p_{i,j}(n)` carrying chain input `π_σ(a)` is replaced by the
/// generators of `W′` (above its unit), each shifted by `i` in position and by
/// `n` in ambient size. This is the iterated form of the gluing rules
/// `p∘₂u = id`, `p_{i,j}∘₂a_k = a_{i+k}∘₁p_{i,j+2}`,
/// `p_{i,j}∘₂ā_k = ā_{i+k}∘₁p_{i,j−2}`, `p_{i,j}∘₂p_{k,l} = p_{i+k,l}∘₁p_{i,j−l}`.
pub fn combine(outer: &StandardForm, slot: usize, inner: &StandardForm) -> Result<StandardForm> {
    let r = outer.braid.strands();
    if slot == 0 || slot > r {
        return Err(Error::SlotOutOfRange {
            slot,
            arity: r,
            path: "combine".into(),
        });
    }
    let b = outer.braid.permutation().apply(slot - 1) + 1;
    let idx = outer.pin_position(b).expect("braid strands match pins");
    let (i, j, n) = match outer.word[idx] {
        Generator::Pin(i, j, n) => (i, j, n),
        _ => unreachable!(),
    };
    if inner.output_size() != j {
        return Err(Error::TypeMismatch {
            path: format!("combine slot {slot}"),
            expected: j,
            found: inner.output_size(),
        });
    }
    let shifted = inner.word[..inner.word.len() - 1].iter().map(|g| match *g {
        Generator::Cap(c, m) => Generator::Cap(c + i, m + n),
        Generator::Cup(c, m) => Generator::Cup(c + i, m + n),
        Generator::Pin(c, l, m) => Generator::Pin(c + i, l, m + n),
        other => unreachable!("{other} inside a standard form"),
    });
    let mut word = outer.word[..idx].to_vec();
    word.extend(shifted);
    word.extend_from_slice(&outer.word[idx + 1..]);
    let braid = outer.braid.compose_at(slot, &inner.braid)?;
    Ok(StandardForm { word, braid })
}
