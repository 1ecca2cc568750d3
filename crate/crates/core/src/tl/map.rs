use std::fmt::Write as _;

use crate::ribbon_braid::Permutation;
use crate::tl::pairing::box_dim;
use crate::tl::poly::Poly;

/// Linear map `P[d_1]⊗⋯⊗P[d_r] → P[c_1]⊗⋯⊗P[c_s]` over ℤ[δ], stored as
/// sparse columns. Tensor basis vectors are indexed in mixed radix with the
/// first factor most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMap {
    domain: Vec<usize>,
    codomain: Vec<usize>,
    /// `cols[c]` lists `(row, coefficient)` sorted by row with no zeros.
    cols: Vec<Vec<(usize, Poly)>>,
}

pub fn tensor_dim(sizes: &[usize]) -> usize {
    sizes.iter().map(|&n| box_dim(n)).product()
}

/// Mixed-radix digits of `index` for the given box sizes.
pub fn split_index(sizes: &[usize], mut index: usize) -> Vec<usize> {
    let mut digits = vec![0; sizes.len()];
    for (k, &n) in sizes.iter().enumerate().rev() {
        let d = box_dim(n);
        digits[k] = index % d;
        index /= d;
    }
    digits
}

pub fn join_index(sizes: &[usize], digits: &[usize]) -> usize {
    sizes
        .iter()
        .zip(digits)
        .fold(0, |acc, (&n, &d)| acc * box_dim(n) + d)
}

impl TensorMap {
    /// Build from a column function returning unsorted `(row, coeff)` terms.
    pub fn from_columns<F>(domain: Vec<usize>, codomain: Vec<usize>, mut column: F) -> Self
    where
        F: FnMut(usize) -> Vec<(usize, Poly)>,
    {
        let cols = (0..tensor_dim(&domain)).map(|c| normalize_column(column(c))).collect();
        TensorMap {
            domain,
            codomain,
            cols,
        }
    }

    pub fn identity(sizes: &[usize]) -> Self {
        TensorMap::from_columns(sizes.to_vec(), sizes.to_vec(), |c| vec![(c, Poly::one())])
    }

    /// The map `v_1⊗⋯⊗v_r ↦ w` with `w_{π(i)} = v_i`, i.e. `P(σ)` in Vec for
    /// `π = π_σ`. Domain sizes are `sizes`.
    pub fn permutation(sizes: &[usize], pi: &Permutation) -> Self {
        assert_eq!(sizes.len(), pi.len());
        let r = sizes.len();
        let mut codomain = vec![0; r];
        for i in 0..r {
            codomain[pi.apply(i)] = sizes[i];
        }
        let cod = codomain.clone();
        TensorMap::from_columns(sizes.to_vec(), codomain, |c| {
            let v = split_index(sizes, c);
            let mut w = vec![0; r];
            for i in 0..r {
                w[pi.apply(i)] = v[i];
            }
            vec![(join_index(&cod, &w), Poly::one())]
        })
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn codomain(&self) -> &[usize] {
        &self.codomain
    }

    pub fn column(&self, c: usize) -> &[(usize, Poly)] {
        &self.cols[c]
    }

    pub fn scale(&self, k: &Poly) -> Self {
        TensorMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            cols: self
                .cols
                .iter()
                .map(|col| normalize_column(col.iter().map(|(r, p)| (*r, p * k)).collect()))
                .collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &TensorMap) -> Self {
        assert_eq!(self.domain, other.codomain, "composition type mismatch");
        TensorMap::from_columns(other.domain.clone(), self.codomain.clone(), |c| {
            let mut out = Vec::new();
            for (mid, p) in &other.cols[c] {
                for (row, q) in &self.cols[*mid] {
                    out.push((*row, p * q));
                }
            }
            out
        })
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &TensorMap) -> Self {
        let mut domain = self.domain.clone();
        domain.extend_from_slice(&other.domain);
        let mut codomain = self.codomain.clone();
        codomain.extend_from_slice(&other.codomain);
        let dd = tensor_dim(&other.domain);
        let dc = tensor_dim(&other.codomain);
        TensorMap::from_columns(domain, codomain, |c| {
            let (a, b) = (c / dd, c % dd);
            let mut out = Vec::new();
            for (ra, pa) in &self.cols[a] {
                for (rb, pb) in &other.cols[b] {
                    out.push((ra * dc + rb, pa * pb));
                }
            }
            out
        })
    }

    /// `self ∘ (id ⊗ other ⊗ id)` where `other`'s codomain occupies domain
    /// factors `slot..slot+len` of `self` (0-based). For a single-output
    /// `other` this is the operadic composition `self ∘_{slot+1} other`.
    pub fn compose_at(&self, slot: usize, other: &TensorMap) -> Self {
        let len = other.codomain.len();
        assert!(slot + len <= self.domain.len(), "slot out of range");
        assert_eq!(&self.domain[slot..slot + len], other.codomain.as_slice());
        let left = TensorMap::identity(&self.domain[..slot]);
        let right = TensorMap::identity(&self.domain[slot + len..]);
        self.compose(&left.tensor(other).tensor(&right))
    }

    /// Precompose with the factor permutation `P(σ)`, `π = π_σ`.
    pub fn permute_domain(&self, pi: &Permutation) -> Self {
        let r = self.domain.len();
        let sizes: Vec<usize> = (0..r).map(|i| self.domain[pi.apply(i)]).collect();
        self.compose(&TensorMap::permutation(&sizes, pi))
    }

    /// Dense TSV: one line per codomain basis vector, one column per domain
    /// basis vector.
    pub fn to_tsv(&self) -> String {
        let rows = tensor_dim(&self.codomain);
        let mut dense = vec![vec![Poly::zero(); self.cols.len()]; rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, p) in col {
                dense[*r][c] = p.clone();
            }
        }
        let mut out = String::new();
        for row in dense {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(out, "{}", cells.join("\t"));
        }
        out
    }
}

fn normalize_column(mut terms: Vec<(usize, Poly)>) -> Vec<(usize, Poly)> {
    terms.sort_by_key(|(r, _)| *r);
    let mut out: Vec<(usize, Poly)> = Vec::with_capacity(terms.len());
    for (r, p) in terms {
        match out.last_mut() {
            Some((lr, lp)) if *lr == r => *lp = &*lp + &p,
            _ => out.push((r, p)),
        }
    }
    out.retain(|(_, p)| !p.is_zero());
    out
}
