//! Morphisms built from the generating maps by composition and tensor product.

use std::fmt;

use crate::error::Result;
use crate::ribbon_braid::Permutation;
use crate::tangle::Generator;
use crate::tl::{eval_generator, TensorMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Morph {
    /// `η : 1 → P[0]`.
    Eta,
    /// `α_i : P[n+2] → P[n]`.
    Alpha(usize, usize),
    /// `ᾱ_i : P[n] → P[n+2]`.
    AlphaBar(usize, usize),
    /// `ϖ_{i,j} : P[n]⊗P[j] → P[n+j]`.
    Varpi(usize, usize, usize),
    /// Identity on `P[k_1]⊗⋯⊗P[k_r]`.
    Id(Vec<usize>),
    /// Braiding `P[a]⊗P[b] → P[b]⊗P[a]`.
    Beta(usize, usize),
    /// Twist on `P[n]`.
    Theta(usize),
    /// `outer ∘ inner`.
    Comp(Box<Morph>, Box<Morph>),
    Tensor(Box<Morph>, Box<Morph>),
}

impl Morph {
    pub fn comp(outer: Morph, inner: Morph) -> Self {
        Morph::Comp(Box::new(outer), Box::new(inner))
    }

    pub fn tensor(f: Morph, g: Morph) -> Self {
        Morph::Tensor(Box::new(f), Box::new(g))
    }

    pub fn id(n: usize) -> Self {
        Morph::Id(vec![n])
    }

    /// Composite of a list, applied last first.
    pub fn chain(parts: Vec<Morph>) -> Self {
        parts
            .into_iter()
            .reduce(Morph::comp)
            .expect("nonempty chain")
    }

    /// Matrix in the Temperley-Lieb planar algebra, where `β` is the flip of
    /// tensor factors and `θ` is the identity. Panics on a type mismatch.
    pub fn eval_tl(&self) -> Result<TensorMap> {
        Ok(match self {
            Morph::Eta => eval_generator(&Generator::Unit)?,
            Morph::Alpha(i, n) => eval_generator(&Generator::Cap(*i, *n))?,
            Morph::AlphaBar(i, n) => eval_generator(&Generator::Cup(*i, *n))?,
            Morph::Varpi(i, j, n) => eval_generator(&Generator::Pin(*i, *j, *n))?,
            Morph::Id(sizes) => TensorMap::identity(sizes),
            Morph::Beta(a, b) => TensorMap::permutation(&[*a, *b], &Permutation::from_zero_based(vec![1, 0])),
            Morph::Theta(n) => TensorMap::identity(&[*n]),
            Morph::Comp(f, g) => f.eval_tl()?.compose(&g.eval_tl()?),
            Morph::Tensor(f, g) => f.eval_tl()?.tensor(&g.eval_tl()?),
        })
    }
}

impl fmt::Display for Morph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Morph::Eta => write!(f, "eta"),
            Morph::Alpha(i, n) => write!(f, "alpha[{i};{n}]"),
            Morph::AlphaBar(i, n) => write!(f, "alphabar[{i};{n}]"),
            Morph::Varpi(i, j, n) => write!(f, "varpi[{i},{j};{n}]"),
            Morph::Id(s) => {
                let s: Vec<String> = s.iter().map(|k| k.to_string()).collect();
                write!(f, "id[{}]", s.join(","))
            }
            Morph::Beta(a, b) => write!(f, "beta[{a},{b}]"),
            Morph::Theta(n) => write!(f, "theta[{n}]"),
            Morph::Comp(a, b) => write!(f, "({a} . {b})"),
            Morph::Tensor(a, b) => write!(f, "({a} x {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_is_the_flip() {
        let m = Morph::Beta(2, 4).eval_tl().unwrap();
        assert_eq!(m.domain(), &[2, 4]);
        assert_eq!(m.codomain(), &[4, 2]);
        // P[2]⊗P[4] has basis (0,0),(0,1); the flip sends (0,b) to (b,0).
        assert_eq!(m.column(1)[0].0, 1);
        let back = Morph::comp(Morph::Beta(4, 2), Morph::Beta(2, 4)).eval_tl().unwrap();
        assert_eq!(back, TensorMap::identity(&[2, 4]));
    }
}
