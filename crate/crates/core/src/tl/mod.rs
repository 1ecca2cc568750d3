//! The Temperley-Lieb planar algebra with symbolic loop value δ.
//!
//! `P[n]` has the non-crossing perfect matchings of `n` points as a basis.
//! Braids act on tensor products by permuting factors and twists act
//! trivially, since Vec is symmetric.

mod map;
mod pairing;
mod poly;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::tangle::{infer_type, normalize, Generator, StandardForm, TangleExpr};

pub use map::{join_index, split_index, tensor_dim, TensorMap};
pub use pairing::{basis, box_dim, enumerate_basis, Basis, Pairing};
pub use poly::Poly;

/// Action of one generator on basis diagrams, returning the output diagram
/// and the number of closed loops removed. `second` is the second input of
/// a `Pin`.
pub fn apply_generator(g: &Generator, first: &Pairing, second: Option<&Pairing>) -> (Pairing, usize) {
    match *g {
        Generator::Unit => (Pairing::empty(), 0),
        Generator::Id(_) => (first.clone(), 0),
        Generator::Cap(i, _) => {
            let (p, closed) = first.cap(i);
            (p, closed as usize)
        }
        Generator::Cup(i, _) => (first.cup(i), 0),
        Generator::Pin(i, _, _) => (first.insert(i, second.expect("pin needs two inputs")), 0),
    }
}

fn lookup(p: &Pairing) -> usize {
    basis(p.len()).index_of(p).expect("result is a basis diagram")
}

/// Matrix of a generating tangle.
pub fn eval_generator(g: &Generator) -> Result<TensorMap> {
    g.validate()?;
    let t = g.tangle_type();
    let inputs = t.inputs.clone();
    let bases: Vec<_> = inputs.iter().map(|&n| basis(n)).collect();
    Ok(TensorMap::from_columns(t.inputs, vec![t.output], |c| {
        let digits = split_index(&inputs, c);
        let args: Vec<&Pairing> = digits
            .iter()
            .zip(&bases)
            .map(|(&d, b)| &b.diagrams[d])
            .collect();
        let empty = Pairing::empty();
        let first = args.first().copied().unwrap_or(&empty);
        let (out, loops) = apply_generator(g, first, args.get(1).copied());
        vec![(lookup(&out), Poly::delta_pow(loops))]
    }))
}

/// Compositional evaluation of an expression: generators by their matrices,
/// `Comp` by operadic composition of matrices, `Act` by precomposition with
/// the factor permutation. Independent of [`normalize`].
pub fn eval_expr(e: &TangleExpr) -> Result<TensorMap> {
    infer_type(e)?;
    Ok(eval_typed(e))
}

fn eval_typed(e: &TangleExpr) -> TensorMap {
    match e {
        TangleExpr::Gen(g) => eval_generator(g).expect("validated"),
        TangleExpr::Comp(a, slot, b) => eval_typed(a).compose_at(slot - 1, &eval_typed(b)),
        TangleExpr::Act(a, sigma) => eval_typed(a).permute_domain(&sigma.permutation()),
    }
}

/// Evaluation of a standard form `Z(chain) ∘ P(braid)`: each tuple of input
/// diagrams is pushed up the chain.
pub fn eval_standard_form(sf: &StandardForm) -> Result<TensorMap> {
    sf.validate()?;
    let sizes = sf.input_sizes();
    let out = sf.output_size();
    let bases: Vec<_> = sizes.iter().map(|&n| basis(n)).collect();
    let chain = TensorMap::from_columns(sizes.clone(), vec![out], |c| {
        let digits = split_index(&sizes, c);
        let mut inputs = digits.iter().zip(&bases).map(|(&d, b)| &b.diagrams[d]);
        let mut current = Pairing::empty();
        let mut loops = 0;
        for g in sf.word.iter().rev() {
            let second = match g {
                Generator::Pin(..) => Some(inputs.next().expect("one input per pin")),
                _ => None,
            };
            let (next, l) = apply_generator(g, &current, second);
            current = next;
            loops += l;
        }
        vec![(lookup(&current), Poly::delta_pow(loops))]
    });
    Ok(chain.permute_domain(&sf.braid.permutation()))
}

/// Evaluate through the normal form.
pub fn eval_normalized(e: &TangleExpr) -> Result<TensorMap> {
    eval_standard_form(&normalize(e)?)
}

/// Element of a box space: a linear combination of diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TLElement {
    pub n: usize,
    pub terms: BTreeMap<Pairing, Poly>,
}

impl TLElement {
    pub fn new(n: usize) -> Self {
        TLElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, p: Pairing, c: Poly) {
        let entry = self.terms.entry(p.clone()).or_default();
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }
}

impl fmt::Display for TLElement {
    /// One line per diagram: `partners = coefficient`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, c) in &self.terms {
            let ps: Vec<String> = p.partners().iter().map(|x| x.to_string()).collect();
            writeln!(f, "{} = {}", ps.join(" "), c)?;
        }
        Ok(())
    }
}

/// Apply a single-output map to one element per domain factor.
pub fn apply_map(map: &TensorMap, args: &[TLElement]) -> Result<TLElement> {
    if args.len() != map.domain().len() || args.iter().zip(map.domain()).any(|(a, &n)| a.n != n) {
        return Err(Error::ParamOutOfRange(format!(
            "inputs do not match domain {:?}",
            map.domain()
        )));
    }
    assert_eq!(map.codomain().len(), 1, "single output expected");
    let out_n = map.codomain()[0];
    let mut result = TLElement::new(out_n);
    let mut expand: Vec<(Vec<usize>, Poly)> = vec![(Vec::new(), Poly::one())];
    for (a, &n) in args.iter().zip(map.domain()) {
        let b = basis(n);
        let mut next = Vec::new();
        for (digits, coeff) in &expand {
            for (p, c) in &a.terms {
                let idx = b.index_of(p).ok_or_else(|| {
                    Error::ParamOutOfRange(format!("{:?} is not a basis diagram", p.partners()))
                })?;
                let mut d = digits.clone();
                d.push(idx);
                next.push((d, coeff * c));
            }
        }
        expand = next;
    }
    let out_basis = basis(out_n);
    for (digits, coeff) in expand {
        let col = join_index(map.domain(), &digits);
        for (row, p) in map.column(col) {
            result.add_term(out_basis.diagrams[*row].clone(), &coeff * p);
        }
    }
    Ok(result)
}

/// Parse input vectors from lines `slot: partner-list = coefficient`, where
/// `slot` is the 1-based input number and partners are 1-based. Blank lines
/// and lines starting with `#` are ignored. Slots without lines are zero.
pub fn parse_inputs(text: &str, domain: &[usize]) -> Result<Vec<TLElement>> {
    let mut out: Vec<TLElement> = domain.iter().map(|&n| TLElement::new(n)).collect();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Parse {
            pos: lineno + 1,
            msg: format!("inputs line {}: {msg}", lineno + 1),
        };
        let (slot, rest) = line.split_once(':').ok_or_else(|| err("expected `slot:`"))?;
        let slot: usize = slot.trim().parse().map_err(|_| err("bad slot"))?;
        if slot == 0 || slot > domain.len() {
            return Err(err("slot out of range"));
        }
        let (partners, coeff) = rest.split_once('=').ok_or_else(|| err("expected `=`"))?;
        let partners: Vec<usize> = partners
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| err("bad partner")))
            .collect::<Result<_>>()?;
        if partners.len() != domain[slot - 1] || partners.contains(&0) {
            return Err(err("partner list does not fit the input box size"));
        }
        let p = Pairing(partners.iter().map(|x| x - 1).collect());
        if !p.is_valid() {
            return Err(err("not a non-crossing perfect matching"));
        }
        out[slot - 1].add_term(p, Poly::parse(coeff)?);
    }
    Ok(out)
}
