//! Seeded random tangles and braids for property checks.

use rand::Rng;

use crate::ribbon_braid::{Letter, RibbonBraid};
use crate::tangle::{infer_type, normalize, Generator, StandardForm, TangleExpr};

/// Bounds for random expressions.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    /// Maximum number of nodes.
    pub size: usize,
    /// Maximum box size anywhere in the expression.
    pub max_box: usize,
    /// Maximum number of letters in each braid.
    pub braid_len: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            size: 10,
            max_box: 6,
            braid_len: 4,
        }
    }
}

pub fn random_braid<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> RibbonBraid {
    let len = rng.gen_range(0..=max_len);
    let mut word = Vec::with_capacity(len);
    for _ in 0..len {
        if strands == 0 {
            break;
        }
        let crossing = strands >= 2 && rng.gen_bool(0.6);
        let inverse = rng.gen_bool(0.5);
        word.push(match (crossing, inverse) {
            (true, false) => Letter::E(rng.gen_range(1..strands)),
            (true, true) => Letter::EInv(rng.gen_range(1..strands)),
            (false, false) => Letter::T(rng.gen_range(1..=strands)),
            (false, true) => Letter::TInv(rng.gen_range(1..=strands)),
        });
    }
    RibbonBraid::from_word(strands, &word).expect("indices in range")
}

/// A generator with output `k`, all box sizes at most `max_box`.
pub fn random_generator<R: Rng>(rng: &mut R, k: usize, max_box: usize) -> Generator {
    let mut options = vec![Generator::Id(k)];
    if k == 0 {
        options.push(Generator::Unit);
    }
    if k + 2 <= max_box {
        for i in 0..=k {
            options.push(Generator::Cap(i, k));
        }
    }
    if k >= 2 {
        for i in 0..=k - 2 {
            options.push(Generator::Cup(i, k - 2));
        }
    }
    for j in 0..=k {
        let n = k - j;
        for i in 0..=n {
            options.push(Generator::Pin(i, j, n));
        }
    }
    options[rng.gen_range(0..options.len())]
}

/// A random well-typed expression with output `k` and at most `bounds.size` nodes.
pub fn random_expr_with_output<R: Rng>(rng: &mut R, k: usize, bounds: Bounds) -> TangleExpr {
    build(rng, k, bounds.size.max(1), bounds)
}

fn build<R: Rng>(rng: &mut R, k: usize, size: usize, bounds: Bounds) -> TangleExpr {
    if size <= 1 {
        return TangleExpr::Gen(random_generator(rng, k, bounds.max_box));
    }
    if size == 2 || rng.gen_bool(0.2) {
        let body = build(rng, k, size - 1, bounds);
        let r = infer_type(&body).expect("well typed").inputs.len();
        return TangleExpr::act(body, random_braid(rng, r, bounds.braid_len));
    }
    let outer_size = rng.gen_range(1..size - 1);
    let outer = build(rng, k, outer_size, bounds);
    let inputs = infer_type(&outer).expect("well typed").inputs;
    if inputs.is_empty() {
        return outer;
    }
    let slot = rng.gen_range(0..inputs.len());
    let inner = build(rng, inputs[slot], size - outer_size - 1, bounds);
    TangleExpr::comp(outer, slot + 1, inner)
}

/// A random expression with random even output size.
pub fn random_expr<R: Rng>(rng: &mut R, bounds: Bounds) -> TangleExpr {
    let k = 2 * rng.gen_range(0..=bounds.max_box / 2);
    random_expr_with_output(rng, k, bounds)
}

pub fn random_standard_form<R: Rng>(rng: &mut R, bounds: Bounds) -> StandardForm {
    normalize(&random_expr(rng, bounds)).expect("generated expressions are well typed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_expressions_are_well_typed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let b = Bounds::default();
            let e = random_expr(&mut rng, b);
            assert!(e.size() <= b.size, "{e}");
            let t = infer_type(&e).unwrap();
            assert!(t.inputs.iter().all(|&k| k <= b.max_box));
        }
    }
}
