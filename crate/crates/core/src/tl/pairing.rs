use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Non-crossing perfect matching of `n` boundary points, stored as the
/// 0-based partner function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing(pub Vec<usize>);

impl Pairing {
    pub fn empty() -> Self {
        Pairing(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        let p = &self.0;
        let n = p.len();
        for i in 0..n {
            if p[i] >= n || p[i] == i || p[p[i]] != i {
                return false;
            }
        }
        for a in 0..n {
            let b = p[a];
            if b < a {
                continue;
            }
            // every point strictly inside (a,b) must be matched inside
            if (a + 1..b).any(|c| p[c] < a || p[c] > b) {
                return false;
            }
        }
        true
    }

    /// Join points `i, i+1` (0-based). Returns the new pairing and whether a
    /// closed loop was removed.
    pub fn cap(&self, i: usize) -> (Pairing, bool) {
        let p = &self.0;
        let mut q = p.clone();
        let loop_closed = p[i] == i + 1;
        if !loop_closed {
            let a = p[i];
            let b = p[i + 1];
            q[a] = b;
            q[b] = a;
        }
        let out = q
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i && *k != i + 1)
            .map(|(_, &x)| if x > i + 1 { x - 2 } else { x })
            .collect();
        (Pairing(out), loop_closed)
    }

    /// Insert a new pair at points `i, i+1` (0-based).
    pub fn cup(&self, i: usize) -> Pairing {
        let shift = |x: usize| if x >= i { x + 2 } else { x };
        let mut out: Vec<usize> = Vec::with_capacity(self.len() + 2);
        out.extend(self.0[..i].iter().map(|&x| shift(x)));
        out.push(i + 1);
        out.push(i);
        out.extend(self.0[i..].iter().map(|&x| shift(x)));
        Pairing(out)
    }

    /// Place `inner` at points `i..i+inner.len()` inside `self`.
    pub fn insert(&self, i: usize, inner: &Pairing) -> Pairing {
        let j = inner.len();
        let shift = |x: usize| if x >= i { x + j } else { x };
        let mut out: Vec<usize> = Vec::with_capacity(self.len() + j);
        out.extend(self.0[..i].iter().map(|&x| shift(x)));
        out.extend(inner.0.iter().map(|&x| x + i));
        out.extend(self.0[i..].iter().map(|&x| shift(x)));
        Pairing(out)
    }

    /// 1-based partner list.
    pub fn partners(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }
}

/// Diagram basis of one box space, in lexicographic order of the partner function.
#[derive(Debug)]
pub struct Basis {
    pub diagrams: Vec<Pairing>,
    index: HashMap<Pairing, usize>,
}

impl Basis {
    pub fn index_of(&self, p: &Pairing) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }
}

fn generate(n: usize) -> Vec<Pairing> {
    if n % 2 == 1 {
        return Vec::new();
    }
    fn rec(p: &mut Vec<Option<usize>>, out: &mut Vec<Pairing>) {
        let Some(a) = p.iter().position(|x| x.is_none()) else {
            out.push(Pairing(p.iter().map(|x| x.unwrap()).collect()));
            return;
        };
        // partner b of the first free point a: the gap a+1..b must be
        // closable inside, so it has even length and contains no used point
        let mut b = a + 1;
        while b < p.len() {
            if p[b].is_some() {
                break;
            }
            if (b - a) % 2 == 1 {
                p[a] = Some(b);
                p[b] = Some(a);
                rec(p, out);
                p[a] = None;
                p[b] = None;
            }
            b += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![None; n], &mut out);
    out.sort();
    out
}

/// Shared basis of `P[n]`.
pub fn basis(n: usize) -> Arc<Basis> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().expect("basis cache").get(&n) {
        return b.clone();
    }
    let diagrams = generate(n);
    let index = diagrams.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let b = Arc::new(Basis { diagrams, index });
    cache.lock().expect("basis cache").insert(n, b.clone());
    b
}

pub fn enumerate_basis(n: usize) -> Vec<Pairing> {
    basis(n).diagrams.clone()
}

/// Dimension of `P[n]`: the Catalan number `C_{n/2}` for even n, else 0.
pub fn box_dim(n: usize) -> usize {
    if n % 2 == 1 {
        return 0;
    }
    let m = (n / 2) as u128;
    // C_m = binom(2m, m) / (m+1)
    (num_integer::binomial(2 * m, m) / (m + 1)) as usize
}
