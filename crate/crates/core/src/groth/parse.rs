//! Text format for fusion data:
//!
//! ```text
//! [ring]
//! simples 1 2 3
//! unit 1
//! fuse 2 2 -> 1:1 3:1
//! [module]
//! simples a b c
//! unit a
//! act a -> b:1
//! phi 2 -> b:1
//! phi-recursion chebyshev 2
//! recursion-act a -> b:1
//! ```
//!
//! Products with the unit may be omitted. `phi-recursion chebyshev g` builds
//! `Φ` along the listed ring simples, `g` being the second one; it uses the
//! `recursion-act` matrix if given and the `act` matrix otherwise.

use crate::error::{Error, Result};
use crate::groth::{chebyshev_phi, FusionRing, ModuleTensorData};

#[derive(PartialEq)]
enum Section {
    None,
    Ring,
    Module,
}

struct Line<'a> {
    no: usize,
    words: Vec<&'a str>,
}

impl Line<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.no,
            msg: format!("line {}: {}", self.no, msg.into()),
        }
    }
}

fn index(labels: &[String], s: &str, line: &Line) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == s)
        .ok_or_else(|| line.err(format!("unknown simple `{s}`")))
}

/// Parse `src -> dst:mult …` into `(src, [(dst, mult)])`.
fn arrow<'a>(line: &Line<'a>, start: usize) -> Result<(Vec<&'a str>, Vec<(&'a str, u64)>)> {
    let arrow = line
        .words
        .iter()
        .position(|w| *w == "->")
        .ok_or_else(|| line.err("expected `->`"))?;
    if arrow < start {
        return Err(line.err("misplaced `->`"));
    }
    let lhs = line.words[start..arrow].to_vec();
    let mut rhs = Vec::new();
    for w in &line.words[arrow + 1..] {
        let (label, mult) = w.rsplit_once(':').ok_or_else(|| line.err(format!("expected label:mult, got `{w}`")))?;
        let mult: u64 = mult.parse().map_err(|_| line.err(format!("bad multiplicity `{mult}`")))?;
        rhs.push((label, mult));
    }
    Ok((lhs, rhs))
}

pub fn parse_fusion_data(text: &str) -> Result<ModuleTensorData> {
    let mut section = Section::None;
    let mut ring_simples: Option<Vec<String>> = None;
    let mut ring_unit: Option<String> = None;
    let mut fuse = Vec::new();
    let mut mod_simples: Option<Vec<String>> = None;
    let mut mod_unit: Option<String> = None;
    let mut acts = Vec::new();
    let mut rec_acts = Vec::new();
    let mut phis = Vec::new();
    let mut chebyshev: Option<(Line, String)> = None;

    let lines = text.lines().enumerate().map(|(i, l)| Line {
        no: i + 1,
        words: l.split('#').next().unwrap_or("").split_whitespace().collect(),
    });
    for line in lines {
        let Some(&head) = line.words.first() else {
            continue;
        };
        match head {
            "[ring]" => section = Section::Ring,
            "[module]" => section = Section::Module,
            _ if section == Section::None => return Err(line.err("expected a `[ring]` section")),
            "simples" => {
                let s = line.words[1..].iter().map(|w| w.to_string()).collect();
                match section {
                    Section::Ring => ring_simples = Some(s),
                    _ => mod_simples = Some(s),
                }
            }
            "unit" => {
                let u = line.words.get(1).ok_or_else(|| line.err("missing unit"))?.to_string();
                match section {
                    Section::Ring => ring_unit = Some(u),
                    _ => mod_unit = Some(u),
                }
            }
            "fuse" if section == Section::Ring => fuse.push(line),
            "act" if section == Section::Module => acts.push(line),
            "recursion-act" if section == Section::Module => rec_acts.push(line),
            "phi" if section == Section::Module => phis.push(line),
            "phi-recursion" if section == Section::Module => {
                if line.words.get(1) != Some(&"chebyshev") || line.words.len() != 3 {
                    return Err(line.err("expected `phi-recursion chebyshev <label>`"));
                }
                let g = line.words[2].to_string();
                chebyshev = Some((line, g));
            }
            other => return Err(line.err(format!("unexpected `{other}`"))),
        }
    }

    let missing = |what: &str| Error::Parse {
        pos: 0,
        msg: format!("missing {what}"),
    };
    let simples = ring_simples.ok_or_else(|| missing("ring simples"))?;
    let rc = simples.len();
    let unit_label = ring_unit.ok_or_else(|| missing("ring unit"))?;
    let unit = simples
        .iter()
        .position(|s| *s == unit_label)
        .ok_or_else(|| missing("ring unit among the simples"))?;
    let mut n = vec![vec![vec![0u64; rc]; rc]; rc];
    let mut given = vec![vec![false; rc]; rc];
    for line in &fuse {
        let (lhs, rhs) = arrow(line, 1)?;
        let [a, b] = lhs[..] else {
            return Err(line.err("expected `fuse a b -> …`"));
        };
        let (a, b) = (index(&simples, a, line)?, index(&simples, b, line)?);
        given[a][b] = true;
        for (c, m) in rhs {
            n[a][b][index(&simples, c, line)?] += m;
        }
    }
    for x in 0..rc {
        for (a, b) in [(unit, x), (x, unit)] {
            if !given[a][b] {
                n[a][b][x] = 1;
            }
        }
    }
    let ring = FusionRing {
        simples,
        unit,
        n,
    };

    let msimples = mod_simples.ok_or_else(|| missing("module simples"))?;
    let rm = msimples.len();
    let unit_m_label = mod_unit.ok_or_else(|| missing("module unit"))?;
    let unit_m = msimples
        .iter()
        .position(|s| *s == unit_m_label)
        .ok_or_else(|| missing("module unit among the simples"))?;
    let matrix = |lines: &[Line]| -> Result<Vec<Vec<u64>>> {
        let mut a = vec![vec![0u64; rm]; rm];
        for line in lines {
            let (lhs, rhs) = arrow(line, 1)?;
            let [x] = lhs[..] else {
                return Err(line.err("expected one simple before `->`"));
            };
            let x = index(&msimples, x, line)?;
            for (y, m) in rhs {
                a[index(&msimples, y, line)?][x] += m;
            }
        }
        Ok(a)
    };
    let action = matrix(&acts)?;
    let phi = match chebyshev {
        Some((line, g)) => {
            if !phis.is_empty() {
                return Err(line.err("give either `phi` lines or a recursion, not both"));
            }
            if ring.simples.get(1) != Some(&g) || ring.unit != 0 {
                return Err(line.err("the recursion runs along the listed ring simples: unit first, generator second"));
            }
            let rec = if rec_acts.is_empty() { action.clone() } else { matrix(&rec_acts)? };
            chebyshev_phi(&rec, unit_m, rc)?
        }
        None => {
            let mut phi = vec![vec![0u64; rc]; rm];
            for line in &phis {
                let (lhs, rhs) = arrow(line, 1)?;
                let [c] = lhs[..] else {
                    return Err(line.err("expected one simple before `->`"));
                };
                let c = index(&ring.simples, c, line)?;
                for (x, m) in rhs {
                    phi[index(&msimples, x, line)?][c] += m;
                }
            }
            phi
        }
    };
    let data = ModuleTensorData {
        ring,
        module_simples: msimples,
        unit_m,
        action,
        phi,
        module_ring: None,
    };
    data.validate()?;
    Ok(data)
}
