//! Box objects of module tensor categories at the level of Grothendieck
//! groups: `P[k] = Tr(m^{⊗k})` with `Tr = Φᵀ` on simples.

mod parse;
mod presets;

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use parse::parse_fusion_data;
pub use presets::{cyclic_ring, preset, tlj_ring, PRESET_NAMES};

/// Based ring with non-negative structure constants:
/// `a⊗b = Σ_c n[a][b][c]·c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    pub simples: Vec<String>,
    pub unit: usize,
    pub n: Vec<Vec<Vec<u64>>>,
}

/// Outcome of [`FusionRing::verify_axioms`]. A failing axiom carries a
/// witness: `(b, c)` with `1⊗b` or `b⊗1` having the wrong coefficient at `c`,
/// or `(a, b, c, d)` where the two bracketings differ at `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub unit: Option<(String, String)>,
    pub associativity: Option<(String, String, String, String)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.unit.is_none() && self.associativity.is_none()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.unit {
            None => writeln!(f, "unit\tpass")?,
            Some((b, c)) => writeln!(f, "unit\tfail\t{b} {c}")?,
        }
        match &self.associativity {
            None => writeln!(f, "associativity\tpass"),
            Some((a, b, c, d)) => writeln!(f, "associativity\tfail\t{a} {b} {c} {d}"),
        }
    }
}

impl FusionRing {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.simples.iter().position(|s| s == label)
    }

    /// Product of two multiplicity vectors.
    pub fn multiply(&self, x: &[BigUint], y: &[BigUint]) -> Vec<BigUint> {
        let r = self.rank();
        let mut out = vec![BigUint::zero(); r];
        for a in 0..r {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..r {
                if y[b].is_zero() {
                    continue;
                }
                let xy = &x[a] * &y[b];
                for c in 0..r {
                    let m = self.n[a][b][c];
                    if m != 0 {
                        out[c] += &xy * m;
                    }
                }
            }
        }
        out
    }

    /// Basis vector of a simple.
    pub fn basis_vector(&self, a: usize) -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); self.rank()];
        v[a] = BigUint::from(1u32);
        v
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        let r = self.rank();
        let label = |i: usize| self.simples[i].clone();
        let mut unit = None;
        'unit: for b in 0..r {
            for c in 0..r {
                let want = u64::from(b == c);
                if self.n[self.unit][b][c] != want || self.n[b][self.unit][c] != want {
                    unit = Some((label(b), label(c)));
                    break 'unit;
                }
            }
        }
        let mut associativity = None;
        'assoc: for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let left: u64 = (0..r).map(|e| self.n[a][b][e] * self.n[e][c][d]).sum();
                        let right: u64 = (0..r).map(|f| self.n[b][c][f] * self.n[a][f][d]).sum();
                        if left != right {
                            associativity = Some((label(a), label(b), label(c), label(d)));
                            break 'assoc;
                        }
                    }
                }
            }
        }
        AxiomReport { unit, associativity }
    }
}

/// Multiplicity-level data of a pointed module tensor category `(M, m)` over `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleTensorData {
    pub ring: FusionRing,
    pub module_simples: Vec<String>,
    pub unit_m: usize,
    /// `action[y][x]`: multiplicity of `y` in `x⊗m`.
    pub action: Vec<Vec<u64>>,
    /// `phi[x][c]`: multiplicity of `x` in `Φ(c)`.
    pub phi: Vec<Vec<u64>>,
    /// Fusion rules of `M` itself, where known.
    pub module_ring: Option<FusionRing>,
}

impl ModuleTensorData {
    /// Check shapes and that `Φ` sends the unit to the unit.
    pub fn validate(&self) -> Result<()> {
        let (rc, rm) = (self.ring.rank(), self.module_simples.len());
        let bad = |msg: String| Err(Error::FusionData(msg));
        if self.ring.unit >= rc || self.unit_m >= rm {
            return bad("unit out of range".into());
        }
        if self.action.len() != rm || self.action.iter().any(|row| row.len() != rm) {
            return bad(format!("action matrix must be {rm}×{rm}"));
        }
        if self.phi.len() != rm || self.phi.iter().any(|row| row.len() != rc) {
            return bad(format!("phi matrix must be {rm}×{rc}"));
        }
        for x in 0..rm {
            if self.phi[x][self.ring.unit] != u64::from(x == self.unit_m) {
                return bad("phi does not send the unit to the unit".into());
            }
        }
        Ok(())
    }

    /// `trace[c][x] = phi[x][c]`.
    pub fn trace(&self) -> Vec<Vec<u64>> {
        let rc = self.ring.rank();
        (0..rc)
            .map(|c| self.phi.iter().map(|row| row[c]).collect())
            .collect()
    }

    /// `Tr(x)` as a vector over the simples of `C`.
    pub fn trace_of(&self, x: usize) -> Vec<u64> {
        self.phi[x].clone()
    }

    /// `m^{⊗k}` over the simples of `M`: `A^k` applied to the unit.
    pub fn tensor_power_decomp(&self, k: usize) -> Vec<BigUint> {
        let mut v = self.unit_vector();
        for _ in 0..k {
            v = self.act(&v);
        }
        v
    }

    fn unit_vector(&self) -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); self.module_simples.len()];
        v[self.unit_m] = BigUint::from(1u32);
        v
    }

    fn act(&self, v: &[BigUint]) -> Vec<BigUint> {
        self.action
            .iter()
            .map(|row| row.iter().zip(v).map(|(&a, x)| x * a).sum())
            .collect()
    }

    /// Apply `Tr` to a vector over the simples of `M`.
    pub fn apply_trace(&self, v: &[BigUint]) -> Vec<BigUint> {
        (0..self.ring.rank())
            .map(|c| self.phi.iter().zip(v).map(|(row, x)| x * row[c]).sum())
            .collect()
    }

    /// `P[0..=kmax]`.
    pub fn box_table(&self, kmax: usize) -> Vec<Vec<BigUint>> {
        let mut out = Vec::with_capacity(kmax + 1);
        let mut v = self.unit_vector();
        for k in 0..=kmax {
            if k > 0 {
                v = self.act(&v);
            }
            out.push(self.apply_trace(&v));
        }
        out
    }

    /// Box table as TSV with a header line `k` followed by the simples of `C`.
    pub fn box_table_tsv(&self, kmax: usize) -> String {
        let mut out = format!("k\t{}\n", self.ring.simples.join("\t"));
        for (k, row) in self.box_table(kmax).iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("{k}\t{}\n", cells.join("\t")));
        }
        out
    }
}

/// `Φ` from a Chebyshev recursion: `Φ(c_1) = 1`, `Φ(c_2) = A·1`,
/// `Φ(c_{k+1}) = A·Φ(c_k) − Φ(c_{k−1})` along the listed simples of `C`.
/// Returns `phi[x][c]`; fails if an entry turns negative.
pub fn chebyshev_phi(recursion: &[Vec<u64>], unit_m: usize, count: usize) -> Result<Vec<Vec<u64>>> {
    let rm = recursion.len();
    let mut cols: Vec<Vec<i128>> = Vec::with_capacity(count);
    let mut prev = vec![0i128; rm];
    let mut cur = vec![0i128; rm];
    cur[unit_m] = 1;
    for _ in 0..count {
        cols.push(cur.clone());
        let next: Vec<i128> = (0..rm)
            .map(|y| {
                let s: i128 = (0..rm).map(|x| recursion[y][x] as i128 * cur[x]).sum();
                s - prev[y]
            })
            .collect();
        prev = std::mem::replace(&mut cur, next);
    }
    if let Some(c) = cols.iter().position(|col| col.iter().any(|&x| x < 0)) {
        return Err(Error::FusionData(format!(
            "Chebyshev recursion gives a negative multiplicity at simple {}",
            c + 1
        )));
    }
    Ok((0..rm)
        .map(|x| cols.iter().map(|col| col[x] as u64).collect())
        .collect())
}

/// `f(k)` for near-group categories: `f(1)=0, f(2)=1, f(k+1) = N(f(k)+f(k−1))`.
pub fn near_group_f(n: u64, k: usize) -> BigUint {
    assert!(k >= 1, "f is defined for k ≥ 1");
    let (mut a, mut b) = (BigUint::zero(), BigUint::from(1u32));
    if k == 1 {
        return a;
    }
    for _ in 2..k {
        let c = (&a + &b) * n;
        a = std::mem::replace(&mut b, c);
    }
    b
}

/// `(a_k, b_k)` with `a_0 = 1, b_0 = 0, a_k = a_{k−1}+b_{k−1}, b_k = b_{k−1}+2a_k−1`.
pub fn e6_ab(k: usize) -> (BigUint, BigUint) {
    let one = BigUint::from(1u32);
    let (mut a, mut b) = (one.clone(), BigUint::zero());
    for _ in 0..k {
        a = &a + &b;
        b = &b + &a * 2u32 - &one;
    }
    (a, b)
}
