//! The ribbon braid group RB_n = B_n ⋉ Z^n.
//!
//! An element is stored as a crossing word followed by a twist vector, so the
//! element is `(crossings) · (twists)`. Words multiply by concatenation and the
//! action on tensor products satisfies `P(a·b) = P(a) ∘ P(b)`; the twists act
//! first, on the input positions. Generator `ε_i` is the positive crossing of
//! strands `i` and `i+1`; as a map it is the braiding `β` on factors `i, i+1`.
//!
//! Equality of the braid part is decided with the Artin action on the free
//! group of rank n, which is faithful.

use std::fmt;

use crate::error::{Error, Result};

/// One letter of a ribbon braid word. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// ε_k
    E(usize),
    /// ε_k⁻¹
    EInv(usize),
    /// ϑ_k
    T(usize),
    /// ϑ_k⁻¹
    TInv(usize),
}

/// A crossing `ε_index^{±1}`, index 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub index: usize,
    pub positive: bool,
}

impl Crossing {
    fn inverse(self) -> Crossing {
        Crossing {
            index: self.index,
            positive: !self.positive,
        }
    }
}

/// A permutation of `1..=n`, stored 0-based. `apply(i)` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from 1-based images. Fails unless the images form a bijection.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::ParamOutOfRange(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    fn swap_adjacent(&mut self, k: usize) {
        // self := self ∘ (k k+1), k 0-based
        self.images.swap(k, k + 1);
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, ")")
    }
}

/// Element of RB_n in normal position.
#[derive(Clone, Debug)]
pub struct RibbonBraid {
    strands: usize,
    crossings: Vec<Crossing>,
    twists: Vec<i64>,
}

/// Hashable complete invariant of a ribbon braid: twist vector plus reduced
/// Artin images of the free generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidKey {
    pub twists: Vec<i64>,
    pub images: Vec<Vec<i32>>,
}

impl RibbonBraid {
    pub fn identity(n: usize) -> Self {
        RibbonBraid {
            strands: n,
            crossings: Vec::new(),
            twists: vec![0; n],
        }
    }

    pub fn from_word(n: usize, word: &[Letter]) -> Result<Self> {
        let mut out = RibbonBraid::identity(n);
        for &letter in word {
            let g = RibbonBraid::generator(n, letter)?;
            out = out.multiply(&g)?;
        }
        Ok(out)
    }

    /// A single generator as an element of RB_n.
    pub fn generator(n: usize, letter: Letter) -> Result<Self> {
        let mut out = RibbonBraid::identity(n);
        match letter {
            Letter::E(k) | Letter::EInv(k) => {
                if k == 0 || k >= n {
                    return Err(Error::IndexOutOfRange {
                        what: "crossing",
                        index: k,
                        max: n.saturating_sub(1),
                    });
                }
                out.crossings.push(Crossing {
                    index: k,
                    positive: matches!(letter, Letter::E(_)),
                });
            }
            Letter::T(k) | Letter::TInv(k) => {
                if k == 0 || k > n {
                    return Err(Error::IndexOutOfRange {
                        what: "twist",
                        index: k,
                        max: n,
                    });
                }
                out.twists[k - 1] = if matches!(letter, Letter::T(_)) { 1 } else { -1 };
            }
        }
        Ok(out)
    }

    /// Build directly from normal-position data.
    pub fn from_parts(n: usize, crossings: Vec<Crossing>, twists: Vec<i64>) -> Result<Self> {
        if twists.len() != n {
            return Err(Error::StrandMismatch {
                left: n,
                right: twists.len(),
            });
        }
        for c in &crossings {
            if c.index == 0 || c.index >= n {
                return Err(Error::IndexOutOfRange {
                    what: "crossing",
                    index: c.index,
                    max: n.saturating_sub(1),
                });
            }
        }
        Ok(RibbonBraid {
            strands: n,
            crossings,
            twists,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// True when the stored word is empty (no crossings, no twists).
    pub fn is_trivial_word(&self) -> bool {
        self.crossings.is_empty() && self.twists.iter().all(|&t| t == 0)
    }

    /// The word in normal position: crossings, then twists strand by strand.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self
            .crossings
            .iter()
            .map(|c| {
                if c.positive {
                    Letter::E(c.index)
                } else {
                    Letter::EInv(c.index)
                }
            })
            .collect();
        for (k, &t) in self.twists.iter().enumerate() {
            let l = if t > 0 { Letter::T(k + 1) } else { Letter::TInv(k + 1) };
            out.extend(std::iter::repeat_n(l, t.unsigned_abs() as usize));
        }
        out
    }

    fn check_same(&self, other: &RibbonBraid) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Product `self · other`, so that `P(self·other) = P(self) ∘ P(other)`.
    pub fn multiply(&self, other: &RibbonBraid) -> Result<Self> {
        self.check_same(other)?;
        // self.twists sit between the two crossing words; sliding them down
        // through other's crossings relabels strand k to π_other⁻¹(k).
        let pi = other.permutation();
        let twists = (0..self.strands)
            .map(|k| self.twists[pi.apply(k)] + other.twists[k])
            .collect();
        let mut crossings = self.crossings.clone();
        crossings.extend_from_slice(&other.crossings);
        Ok(RibbonBraid {
            strands: self.strands,
            crossings,
            twists,
        })
    }

    pub fn inverse(&self) -> Self {
        // (C·T)⁻¹ = T⁻¹·C⁻¹ = C⁻¹ · (T⁻¹ relabeled through C⁻¹)
        let crossings: Vec<Crossing> = self.crossings.iter().rev().map(|c| c.inverse()).collect();
        let cinv = RibbonBraid {
            strands: self.strands,
            crossings,
            twists: vec![0; self.strands],
        };
        let tinv = RibbonBraid {
            strands: self.strands,
            crossings: Vec::new(),
            twists: self.twists.iter().map(|t| -t).collect(),
        };
        tinv.multiply(&cinv).expect("same strand count")
    }

    /// The underlying permutation π, with `π(ab) = π(a) ∘ π(b)`.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for c in &self.crossings {
            p.swap_adjacent(c.index - 1);
        }
        p
    }

    /// Images of the free generators under the Artin action, fully reduced.
    /// Letters are `±(g+1)` for generator `x_g`.
    pub fn artin_images(&self) -> Vec<Vec<i32>> {
        let n = self.strands;
        let mut images: Vec<Vec<i32>> = (0..n).map(|g| vec![g as i32 + 1]).collect();
        for c in self.crossings.iter().rev() {
            for w in images.iter_mut() {
                *w = free_reduce(&artin_substitute(c, w));
            }
        }
        images
    }

    pub fn key(&self) -> BraidKey {
        BraidKey {
            twists: self.twists.clone(),
            images: self.artin_images(),
        }
    }

    /// Group equality.
    pub fn equals(&self, other: &RibbonBraid) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.twists == other.twists && self.artin_images() == other.artin_images())
    }

    /// Operadic composition: cable strand `slot` (1-based) into `tau.strands()`
    /// parallel strands and insert `tau` at the bottom of the cable.
    pub fn compose_at(&self, slot: usize, tau: &RibbonBraid) -> Result<Self> {
        let r = self.strands;
        if slot == 0 || slot > r {
            return Err(Error::IndexOutOfRange {
                what: "composition slot",
                index: slot,
                max: r,
            });
        }
        let s = tau.strands;
        let p = slot - 1;
        let total = r + s - 1;

        // Position of the cabled strand just below each crossing.
        let mut below = vec![0; self.crossings.len()];
        let mut pos = p;
        for (idx, c) in self.crossings.iter().enumerate().rev() {
            below[idx] = pos;
            let k = c.index - 1;
            if pos == k {
                pos = k + 1;
            } else if pos == k + 1 {
                pos = k;
            }
        }

        let mut crossings = Vec::new();
        let push = |out: &mut Vec<Crossing>, k0: usize, positive: bool| {
            out.push(Crossing {
                index: k0 + 1,
                positive,
            })
        };
        for (c, &pos) in self.crossings.iter().zip(&below) {
            let k = c.index - 1;
            if pos == k {
                // cable on the left crosses the single strand at k+s
                if c.positive {
                    for t in k..k + s {
                        push(&mut crossings, t, true);
                    }
                } else {
                    for t in k..k + s {
                        push(&mut crossings, t, false);
                    }
                }
            } else if pos == k + 1 {
                // single strand at k crosses the cable at k+1..=k+s
                if c.positive {
                    for t in (k..k + s).rev() {
                        push(&mut crossings, t, true);
                    }
                } else {
                    for t in (k..k + s).rev() {
                        push(&mut crossings, t, false);
                    }
                }
            } else {
                let kk = if k < pos { k } else { k + s - 1 };
                push(&mut crossings, kk, c.positive);
            }
        }

        let mut twists = vec![0i64; total];
        for (q, &t) in self.twists.iter().enumerate() {
            if q < p {
                twists[q] = t;
            } else if q > p {
                twists[q + s - 1] = t;
            }
        }
        let t = self.twists[p];
        if s > 0 && t != 0 {
            let ft = full_twist(s);
            let block: Vec<Crossing> = if t > 0 {
                ft
            } else {
                ft.iter().rev().map(|c| c.inverse()).collect()
            };
            for _ in 0..t.unsigned_abs() {
                for c in &block {
                    crossings.push(Crossing {
                        index: c.index + p,
                        positive: c.positive,
                    });
                }
            }
            for tw in twists.iter_mut().skip(p).take(s) {
                *tw = t;
            }
        }
        let cabled = RibbonBraid {
            strands: total,
            crossings,
            twists,
        };

        let mut shifted_twists = vec![0i64; total];
        shifted_twists[p..p + s].copy_from_slice(&tau.twists);
        let shifted = RibbonBraid {
            strands: total,
            crossings: tau
                .crossings
                .iter()
                .map(|c| Crossing {
                    index: c.index + p,
                    positive: c.positive,
                })
                .collect(),
            twists: shifted_twists,
        };
        cabled.multiply(&shifted)
    }
}

/// Positive full twist `(ε_1 ⋯ ε_{s−1})^s` on s strands.
pub fn full_twist(s: usize) -> Vec<Crossing> {
    let mut out = Vec::new();
    for _ in 0..s {
        for k in 1..s {
            out.push(Crossing {
                index: k,
                positive: true,
            });
        }
    }
    out
}

/// Substitute the Artin automorphism of one crossing into a free word.
/// ε_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i.
fn artin_substitute(c: &Crossing, w: &[i32]) -> Vec<i32> {
    let a = c.index as i32; // x_i has letter i
    let b = a + 1;
    let mut out = Vec::with_capacity(w.len() + 2);
    for &l in w {
        let g = l.abs();
        let img: Vec<i32> = if c.positive {
            if g == a {
                vec![a, b, -a]
            } else if g == b {
                vec![a]
            } else {
                vec![g]
            }
        } else if g == a {
            vec![b]
        } else if g == b {
            vec![-b, a, b]
        } else {
            vec![g]
        };
        if l > 0 {
            out.extend(img);
        } else {
            out.extend(img.iter().rev().map(|x| -x));
        }
    }
    out
}

/// Free reduction of a word in a free group (letters `±g`, g ≥ 1).
pub fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl PartialEq for RibbonBraid {
    fn eq(&self, other: &Self) -> bool {
        self.strands == other.strands && self.equals(other).unwrap_or(false)
    }
}

impl Eq for RibbonBraid {}

impl fmt::Display for RibbonBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rb({})[", self.strands)?;
        for (i, l) in self.letters().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match l {
                Letter::E(k) => write!(f, "e {k}")?,
                Letter::EInv(k) => write!(f, "e' {k}")?,
                Letter::T(k) => write!(f, "t {k}")?,
                Letter::TInv(k) => write!(f, "t' {k}")?,
            }
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for RibbonBraid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = crate::tangle::parse::Scanner::new(s);
        let b = p.braid()?;
        p.end()?;
        Ok(b)
    }
}
