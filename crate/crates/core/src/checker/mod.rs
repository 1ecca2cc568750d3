//! Batch verification of the relation families, move invariance and braid
//! equivariance against the Temperley-Lieb backend.

mod instances;
mod morph;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ribbon_braid::{Permutation, RibbonBraid};
use crate::tangle::random::{random_braid, random_standard_form, Bounds};
use crate::tangle::{applicable_moves, apply_move, Move, TangleExpr};
use crate::tl::{eval_expr, eval_standard_form, join_index, split_index, Poly, TensorMap};

pub use instances::rotation;
pub use morph::Morph;

/// Relation families: `A*` are identities between tangles, `C*` between
/// morphisms built from the generating maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::A1,
        Family::A2,
        Family::A3,
        Family::A4,
        Family::A5,
        Family::A6,
        Family::A7,
        Family::C1,
        Family::C2,
        Family::C3,
        Family::C4,
        Family::C5,
        Family::C6,
        Family::C7,
        Family::C8,
        Family::C9,
    ];

    pub fn is_tangle_family(self) -> bool {
        (self as usize) < 7
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationSide {
    Tangle(TangleExpr),
    Morph(Morph),
}

impl RelationSide {
    fn eval_tl(&self) -> Result<TensorMap> {
        match self {
            RelationSide::Tangle(e) => eval_expr(e),
            RelationSide::Morph(m) => m.eval_tl(),
        }
    }
}

impl fmt::Display for RelationSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationSide::Tangle(e) => write!(f, "{e}"),
            RelationSide::Morph(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub family: Family,
    pub params: Vec<(&'static str, usize)>,
    pub lhs: RelationSide,
    pub rhs: RelationSide,
}

impl RelationInstance {
    pub fn params_string(&self) -> String {
        let p: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        p.join(" ")
    }
}

/// Backends for relation checks. Only `Tl` evaluates morphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Tl,
    Groth,
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tl" => Ok(Backend::Tl),
            "groth" => Ok(Backend::Groth),
            _ => Err(Error::ParamOutOfRange(format!("unknown backend `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub family: String,
    pub params: String,
    pub pass: bool,
    /// Both evaluated sides as TSV matrices, on failure.
    pub counterexample: Option<(String, String)>,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub entries: Vec<Entry>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.pass).count()
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
        self.elapsed += other.elapsed;
    }

    fn record(&mut self, family: String, params: String, lhs: &TensorMap, rhs: &TensorMap) {
        let pass = lhs == rhs;
        self.entries.push(Entry {
            family,
            params,
            pass,
            counterexample: (!pass).then(|| (lhs.to_tsv(), rhs.to_tsv())),
        });
    }

    /// `family\tparams\tverdict` per instance; timing is left out so that
    /// reports are reproducible byte for byte.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let verdict = if e.pass { "pass" } else { "fail" };
            out.push_str(&format!("{}\t{}\t{}\n", e.family, e.params, verdict));
        }
        out
    }
}

pub fn enumerate_instances(family: Family, nmax: usize) -> Vec<RelationInstance> {
    instances::enumerate(family, nmax)
}

pub fn check_relations(backend: Backend, family: Family, nmax: usize) -> Result<Report> {
    if backend != Backend::Tl {
        return Err(Error::NoMorphismEvaluation(format!("{backend:?}").to_lowercase()));
    }
    let start = Instant::now();
    let mut report = Report::default();
    for inst in enumerate_instances(family, nmax) {
        let lhs = inst.lhs.eval_tl()?;
        let rhs = inst.rhs.eval_tl()?;
        report.record(family.to_string(), inst.params_string(), &lhs, &rhs);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// All sixteen families in order.
pub fn check_all_relations(backend: Backend, nmax: usize) -> Result<Report> {
    let mut report = Report::default();
    for f in Family::ALL {
        report.extend(check_relations(backend, f, nmax)?);
    }
    Ok(report)
}

/// `P(σ)` with the inputs grouped into blocks: block `g` of the domain goes to
/// block `π(g)` of the codomain, keeping its internal order.
fn block_permutation(blocks: &[Vec<usize>], pi: &Permutation) -> TensorMap {
    let r = blocks.len();
    let domain: Vec<usize> = blocks.concat();
    let mut target = vec![Vec::new(); r];
    for (g, b) in blocks.iter().enumerate() {
        target[pi.apply(g)] = b.clone();
    }
    let codomain: Vec<usize> = target.concat();
    let cod = codomain.clone();
    let dom = domain.clone();
    TensorMap::from_columns(domain, codomain, |c| {
        let digits = split_index(&dom, c);
        let mut grouped = Vec::with_capacity(r);
        let mut at = 0;
        for b in blocks {
            grouped.push(digits[at..at + b.len()].to_vec());
            at += b.len();
        }
        let mut moved = vec![Vec::new(); r];
        for (g, d) in grouped.into_iter().enumerate() {
            moved[pi.apply(g)] = d;
        }
        vec![(join_index(&cod, &moved.concat()), Poly::one())]
    })
}

/// One equivariance instance: `P(σ∘_iτ)` against `P(σ)∘_i P(τ)` on the given
/// domain box sizes (`r + s − 1` of them).
pub fn equivariance_holds(sigma: &RibbonBraid, slot: usize, tau: &RibbonBraid, sizes: &[usize]) -> Result<bool> {
    let (r, s) = (sigma.strands(), tau.strands());
    if sizes.len() + 1 != r + s {
        return Err(Error::StrandMismatch {
            left: sizes.len(),
            right: r + s - 1,
        });
    }
    let composed = sigma.compose_at(slot, tau)?;
    let lhs = TensorMap::permutation(sizes, &composed.permutation());

    let p = slot - 1;
    let inner = TensorMap::permutation(&sizes[p..p + s], &tau.permutation());
    let prepared = TensorMap::identity(&sizes[..p])
        .tensor(&inner)
        .tensor(&TensorMap::identity(&sizes[p + s..]));
    let mid = prepared.codomain().to_vec();
    let mut blocks: Vec<Vec<usize>> = mid[..p].iter().map(|&k| vec![k]).collect();
    blocks.push(mid[p..p + s].to_vec());
    blocks.extend(mid[p + s..].iter().map(|&k| vec![k]));
    let rhs = block_permutation(&blocks, &sigma.permutation()).compose(&prepared);
    Ok(lhs == rhs)
}

/// Random trials of `P(σ∘_iτ) = P(σ)∘_i P(τ)` with `σ, τ` on at most `n`
/// strands and box sizes drawn from `{0, 2, 4}`.
pub fn check_equivariance(n: usize, trials: usize, seed: u64) -> Result<Report> {
    if n == 0 {
        return Err(Error::ParamOutOfRange("equivariance needs n ≥ 1".into()));
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::default();
    for trial in 0..trials {
        let r = rng.gen_range(1..=n);
        let s = rng.gen_range(1..=n);
        let sigma = random_braid(&mut rng, r, 6);
        let tau = random_braid(&mut rng, s, 6);
        let slot = rng.gen_range(1..=r);
        let sizes: Vec<usize> = (0..r + s - 1).map(|_| 2 * rng.gen_range(0..=2)).collect();
        let pass = equivariance_holds(&sigma, slot, &tau, &sizes)?;
        let sz: Vec<String> = sizes.iter().map(|k| k.to_string()).collect();
        report.entries.push(Entry {
            family: "RB".into(),
            params: format!("trial={trial} sigma={sigma} i={slot} tau={tau} sizes={}", sz.join(",")),
            pass,
            counterexample: (!pass).then(|| (composed_tsv(&sigma, slot, &tau, &sizes), String::new())),
        });
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn composed_tsv(sigma: &RibbonBraid, slot: usize, tau: &RibbonBraid, sizes: &[usize]) -> String {
    match sigma.compose_at(slot, tau) {
        Ok(b) => TensorMap::permutation(sizes, &b.permutation()).to_tsv(),
        Err(e) => e.to_string(),
    }
}

/// For `trials` random standard forms, every applicable move must preserve the
/// evaluation. One entry per applied move, labelled by move family.
pub fn check_moves(trials: usize, seed: u64, bounds: Bounds) -> Result<Report> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::default();
    for trial in 0..trials {
        let sf = random_standard_form(&mut rng, bounds);
        let before = eval_standard_form(&sf)?;
        for mv in applicable_moves(&sf) {
            let after = eval_standard_form(&apply_move(&sf, &mv)?)?;
            report.record(move_family(&mv).into(), format!("trial={trial} move={mv}"), &before, &after);
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn move_family(mv: &Move) -> &'static str {
    match mv {
        Move::M1 { .. } => "M1",
        Move::M2 { .. } => "M2",
        Move::M3 { .. } => "M3",
        Move::M4 { .. } => "M4",
        Move::M5 { .. } => "M5",
        Move::M6 { .. } => "M6",
    }
}
