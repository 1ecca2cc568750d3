use crate::error::{Error, Result};
use crate::groth::{chebyshev_phi, FusionRing, ModuleTensorData};

pub const PRESET_NAMES: &[&str] = &["group:N", "tlj:n", "ty:N", "ng:N", "d2n:n", "d4z", "e6", "e6d", "e7x"];

/// Group ring of `Z/N` with simples `0..N-1`.
pub fn cyclic_ring(n: usize) -> FusionRing {
    let mut t = vec![vec![vec![0; n]; n]; n];
    for (a, row) in t.iter_mut().enumerate() {
        for (b, out) in row.iter_mut().enumerate() {
            out[(a + b) % n] = 1;
        }
    }
    FusionRing {
        simples: (0..n).map(|a| a.to_string()).collect(),
        unit: 0,
        n: t,
    }
}

/// Truncated Chebyshev ring `A_n` with simples `1..n`:
/// `a⊗b = ⊕ c` for `c = |a−b|+1, |a−b|+3, …, min(a+b−1, 2n+1−a−b)`.
pub fn tlj_ring(n: usize) -> FusionRing {
    let mut t = vec![vec![vec![0; n]; n]; n];
    for a in 1..=n {
        for b in 1..=n {
            let lo = a.abs_diff(b) + 1;
            let hi = (a + b - 1).min(2 * n + 1 - a - b);
            let mut c = lo;
            while c <= hi {
                t[a - 1][b - 1][c - 1] = 1;
                c += 2;
            }
        }
    }
    FusionRing {
        simples: (1..=n).map(|a| a.to_string()).collect(),
        unit: 0,
        n: t,
    }
}

/// Symmetric adjacency matrix of an undirected graph.
fn graph(labels: &[String], edges: &[(&str, &str)]) -> Vec<Vec<u64>> {
    let r = labels.len();
    let idx = |s: &str| labels.iter().position(|l| l == s).expect("edge endpoint is a vertex");
    let mut a = vec![vec![0; r]; r];
    for &(x, y) in edges {
        let (i, j) = (idx(x), idx(y));
        a[i][j] += 1;
        a[j][i] += 1;
    }
    a
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn identity_phi(rm: usize, rc: usize) -> Vec<Vec<u64>> {
    (0..rm).map(|x| (0..rc).map(|c| u64::from(x == c)).collect()).collect()
}

fn group(n: usize) -> ModuleTensorData {
    let ring = cyclic_ring(n);
    let action = (0..n)
        .map(|y| (0..n).map(|x| u64::from(y == (x + 1) % n)).collect())
        .collect();
    ModuleTensorData {
        module_simples: ring.simples.clone(),
        unit_m: 0,
        action,
        phi: identity_phi(n, n),
        module_ring: Some(ring.clone()),
        ring,
    }
}

fn tlj(n: usize) -> Result<ModuleTensorData> {
    let ring = tlj_ring(n);
    let edges: Vec<(String, String)> = (1..n).map(|a| (a.to_string(), (a + 1).to_string())).collect();
    let edges: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let action = graph(&ring.simples, &edges);
    let phi = chebyshev_phi(&action, 0, n)?;
    Ok(ModuleTensorData {
        module_simples: ring.simples.clone(),
        unit_m: 0,
        action,
        phi,
        module_ring: Some(ring.clone()),
        ring,
    })
}

/// Tambara-Yamagami (`extra = 0`) or near-group (`extra = N`) data over `Z/N`:
/// `m⊗m = extra·m ⊕ ⊕_a a`.
fn near_group(n: usize, extra: u64) -> ModuleTensorData {
    let ring = cyclic_ring(n);
    let mut simples = ring.simples.clone();
    simples.push("m".into());
    let m = n;
    let mut action = vec![vec![0; n + 1]; n + 1];
    for a in 0..n {
        action[m][a] = 1;
        action[a][m] = 1;
    }
    action[m][m] = extra;
    let mut t = vec![vec![vec![0; n + 1]; n + 1]; n + 1];
    for a in 0..n {
        for b in 0..n {
            t[a][b][(a + b) % n] = 1;
        }
        t[a][m][m] = 1;
        t[m][a][m] = 1;
        t[m][m][a] = 1;
    }
    t[m][m][m] = extra;
    ModuleTensorData {
        phi: identity_phi(n + 1, n),
        module_ring: Some(FusionRing {
            simples: simples.clone(),
            unit: 0,
            n: t,
        }),
        module_simples: simples,
        unit_m: 0,
        action,
        ring,
    }
}

fn d2n(n: usize) -> Result<ModuleTensorData> {
    let ring = tlj_ring(4 * n - 3);
    let mut simples: Vec<String> = (1..=2 * n - 1).map(|a| a.to_string()).collect();
    simples.push(format!("{}'", 2 * n - 1));
    let mut edges: Vec<(String, String)> = (1..2 * n - 1).map(|a| (a.to_string(), (a + 1).to_string())).collect();
    edges.push(((2 * n - 2).to_string(), format!("{}'", 2 * n - 1)));
    let edges: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let action = graph(&simples, &edges);
    let phi = chebyshev_phi(&action, 0, ring.rank())?;
    Ok(ModuleTensorData {
        ring,
        module_simples: simples,
        unit_m: 0,
        action,
        phi,
        module_ring: None,
    })
}

fn d4z() -> ModuleTensorData {
    let a5 = tlj_ring(5);
    let z3 = ["1", "3", "3'"];
    // Z/3 with 3⊗3 = 3'
    let z3_mul = |q: usize, r: usize| (q + r) % 3;
    let mut simples = Vec::new();
    for p in 1..=5 {
        for q in z3 {
            simples.push(format!("({p},{q})"));
        }
    }
    let idx = |p: usize, q: usize| p * 3 + q;
    let mut t = vec![vec![vec![0; 15]; 15]; 15];
    for p in 0..5 {
        for q in 0..3 {
            for p2 in 0..5 {
                for q2 in 0..3 {
                    for c in 0..5 {
                        t[idx(p, q)][idx(p2, q2)][idx(c, z3_mul(q, q2))] = a5.n[p][p2][c];
                    }
                }
            }
        }
    }
    let ring = FusionRing {
        simples,
        unit: 0,
        n: t,
    };
    let module_simples = labels(&["1", "2", "3", "3'"]);
    let action = graph(&module_simples, &[("1", "2"), ("2", "3"), ("2", "3'")]);
    // Φ(p,q) = p⊗q, rows p = 1..5, columns q = 1, 3, 3'
    let table: [[&[&str]; 3]; 5] = [
        [&["1"], &["3"], &["3'"]],
        [&["2"], &["2"], &["2"]],
        [&["3", "3'"], &["1", "3'"], &["1", "3"]],
        [&["2"], &["2"], &["2"]],
        [&["1"], &["3"], &["3'"]],
    ];
    let mut phi = vec![vec![0; 15]; 4];
    for (p, row) in table.iter().enumerate() {
        for (q, images) in row.iter().enumerate() {
            for x in images.iter() {
                let xi = module_simples.iter().position(|s| s == x).expect("D4 simple");
                phi[xi][idx(p, q)] += 1;
            }
        }
    }
    ModuleTensorData {
        ring,
        module_simples,
        unit_m: 0,
        action,
        phi,
        module_ring: None,
    }
}

const E6_SIMPLES: [&str; 6] = ["1", "m", "x", "psim", "psi", "sigma"];
const E6_EDGES: [(&str, &str); 5] = [("1", "m"), ("m", "x"), ("x", "psim"), ("psim", "psi"), ("x", "sigma")];

fn e6() -> Result<ModuleTensorData> {
    let ring = tlj_ring(11);
    let simples = labels(&E6_SIMPLES);
    let action = graph(&simples, &E6_EDGES);
    let phi = chebyshev_phi(&action, 0, 11)?;
    Ok(ModuleTensorData {
        ring,
        module_simples: simples,
        unit_m: 0,
        action,
        phi,
        module_ring: None,
    })
}

fn e6d() -> ModuleTensorData {
    // σ⊗σ = 1⊕ψ, ψ⊗ψ = 1, σ⊗ψ = ψ⊗σ = σ
    let mut t = vec![vec![vec![0; 3]; 3]; 3];
    let (one, s, p) = (0, 1, 2);
    for a in 0..3 {
        t[one][a][a] = 1;
        t[a][one][a] = 1;
    }
    t[s][s][one] = 1;
    t[s][s][p] = 1;
    t[p][p][one] = 1;
    t[s][p][s] = 1;
    t[p][s][s] = 1;
    let ring = FusionRing {
        simples: labels(&["1", "sigma", "psi"]),
        unit: 0,
        n: t,
    };
    let simples = labels(&E6_SIMPLES);
    let action = graph(&simples, &E6_EDGES);
    let mut phi = vec![vec![0; 3]; 6];
    phi[0][0] = 1;
    phi[5][1] = 1;
    phi[4][2] = 1;
    ModuleTensorData {
        ring,
        module_simples: simples,
        unit_m: 0,
        action,
        phi,
        module_ring: None,
    }
}

/// Vertices of the 17-vertex graph, `x` being the unit.
const E7X_SIMPLES: [&str; 17] = [
    "x", "a", "b", "c", "d", "m", "n", "p", "q", "r", "s", "t", "u", "v", "w", "y", "z",
];

/// Fusion with `m`.
const E7X_ORANGE: [(&str, &str); 15] = [
    ("x", "c"),
    ("c", "d"),
    ("d", "m"),
    ("m", "y"),
    ("y", "q"),
    ("q", "z"),
    ("z", "s"),
    ("s", "u"),
    ("s", "b"),
    ("a", "v"),
    ("v", "t"),
    ("t", "w"),
    ("w", "p"),
    ("r", "p"),
    ("w", "n"),
];

/// Fusion with `m′`, the image of the strand of the acting `A_17`.
const E7X_BLUE: [(&str, &str); 15] = [
    ("x", "a"),
    ("a", "b"),
    ("b", "n"),
    ("n", "y"),
    ("y", "p"),
    ("p", "z"),
    ("z", "t"),
    ("t", "u"),
    ("t", "d"),
    ("c", "v"),
    ("v", "s"),
    ("s", "w"),
    ("w", "q"),
    ("r", "q"),
    ("w", "m"),
];

fn e7x() -> Result<ModuleTensorData> {
    let ring = tlj_ring(17);
    let simples = labels(&E7X_SIMPLES);
    let action = graph(&simples, &E7X_ORANGE);
    let blue = graph(&simples, &E7X_BLUE);
    let phi = chebyshev_phi(&blue, 0, 17)?;
    Ok(ModuleTensorData {
        ring,
        module_simples: simples,
        unit_m: 0,
        action,
        phi,
        module_ring: None,
    })
}

/// Built-in data sets; see [`PRESET_NAMES`].
pub fn preset(name: &str) -> Result<ModuleTensorData> {
    let (base, arg) = match name.split_once(':') {
        Some((b, a)) => (b, Some(a)),
        None => (name, None),
    };
    let param = |min: usize| -> Result<usize> {
        let a = arg.ok_or_else(|| Error::ParamOutOfRange(format!("{name} needs a parameter")))?;
        let v: usize = a
            .parse()
            .map_err(|_| Error::ParamOutOfRange(format!("bad parameter in {name}")))?;
        if v < min {
            return Err(Error::ParamOutOfRange(format!("{name}: parameter must be at least {min}")));
        }
        Ok(v)
    };
    let no_param = || -> Result<()> {
        match arg {
            None => Ok(()),
            Some(_) => Err(Error::ParamOutOfRange(format!("{base} takes no parameter"))),
        }
    };
    let data = match base {
        "group" => group(param(1)?),
        "tlj" => tlj(param(1)?)?,
        "ty" => near_group(param(1)?, 0),
        "ng" => {
            let n = param(1)?;
            near_group(n, n as u64)
        }
        "d2n" => d2n(param(2)?)?,
        "d4z" => {
            no_param()?;
            d4z()
        }
        "e6" => {
            no_param()?;
            e6()?
        }
        "e6d" => {
            no_param()?;
            e6d()
        }
        "e7x" => {
            no_param()?;
            e7x()?
        }
        _ => return Err(Error::UnknownPreset(name.to_string())),
    };
    data.validate()?;
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_build() {
        for name in ["group:4", "tlj:5", "ty:3", "ng:2", "d2n:2", "d2n:3", "d4z", "e6", "e6d", "e7x"] {
            let d = preset(name).unwrap();
            assert!(d.ring.verify_axioms().passed(), "{name}");
            if let Some(r) = &d.module_ring {
                assert!(r.verify_axioms().passed(), "{name}");
            }
        }
    }

    #[test]
    fn bad_names() {
        assert!(matches!(preset("tlj:0"), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(preset("tlj"), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(preset("e8"), Err(Error::UnknownPreset(_))));
        assert!(matches!(preset("e6:2"), Err(Error::ParamOutOfRange(_))));
    }

    #[test]
    fn tambara_yamagami_rules() {
        let d = preset("ty:3").unwrap();
        let r = d.module_ring.unwrap();
        let m = r.index_of("m").unwrap();
        assert_eq!(r.n[m][m], vec![1, 1, 1, 0]);
        assert_eq!(r.n[1][m], vec![0, 0, 0, 1]);
    }
}
