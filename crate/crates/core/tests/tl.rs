use anchored::tangle::parse_expr;
use anchored::tl::{
    apply_map, box_dim, enumerate_basis, eval_expr, eval_generator, parse_inputs, Pairing, Poly, TLElement,
    TensorMap,
};
use anchored::Generator;
use proptest::prelude::*;

/// All fixed-point-free involutions of `0..n` without a crossing pair
/// `a < b < c < d` with `a~c, b~d`, sorted.
fn brute_force_basis(n: usize) -> Vec<Vec<usize>> {
    fn all(p: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(a) = p.iter().position(|x| x.is_none()) else {
            out.push(p.iter().map(|x| x.unwrap()).collect());
            return;
        };
        for b in a + 1..p.len() {
            if p[b].is_none() {
                p[a] = Some(b);
                p[b] = Some(a);
                all(p, out);
                p[a] = None;
                p[b] = None;
            }
        }
    }
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        all(&mut vec![None; n], &mut out);
    }
    out.retain(|m| {
        !(0..n).any(|a| {
            let c = m[a];
            (a + 1..c).any(|b| m[b] > c)
        })
    });
    out.sort();
    out
}

#[test]
fn basis_matches_brute_force() {
    for n in 0..=10 {
        let b: Vec<Vec<usize>> = enumerate_basis(n).into_iter().map(|p| p.0).collect();
        assert_eq!(b, brute_force_basis(n), "n={n}");
        assert_eq!(box_dim(n), b.len());
    }
    assert_eq!(box_dim(8), 14);
    assert_eq!(box_dim(0), 1);
}

fn element(n: usize, partners: &[usize]) -> TLElement {
    let mut e = TLElement::new(n);
    e.add_term(Pairing(partners.to_vec()), Poly::one());
    e
}

#[test]
fn pin_places_the_second_input_inside_the_first() {
    let m = eval_generator(&Generator::Pin(0, 2, 2)).unwrap();
    let out = apply_map(&m, &[element(2, &[1, 0]), element(2, &[1, 0])]).unwrap();
    assert_eq!(out, element(4, &[1, 0, 3, 2]));
    let m = eval_generator(&Generator::Pin(1, 2, 2)).unwrap();
    let out = apply_map(&m, &[element(2, &[1, 0]), element(2, &[1, 0])]).unwrap();
    assert_eq!(out, element(4, &[3, 2, 1, 0]));
}

#[test]
fn identity_generator_is_the_identity() {
    for n in 0..=6 {
        assert_eq!(eval_generator(&Generator::Id(n)).unwrap(), TensorMap::identity(&[n]));
    }
}

#[test]
fn loops_carry_delta() {
    let m = eval_expr(&parse_expr("(comp 1 (cap 0 0) (comp 1 (cap 1 2) (comp 1 (cup 1 2) (cup 0 0))))").unwrap()).unwrap();
    assert_eq!(m.column(0), &[(0, Poly::delta_pow(2))]);
}

#[test]
fn tsv_uses_sparse_polynomials() {
    let m = eval_expr(&parse_expr("(comp 1 (cap 0 2) (cup 0 2))").unwrap()).unwrap();
    assert_eq!(m.to_tsv(), "1*d\n");
    let p = Poly::parse("1+2*d-3*d^2").unwrap();
    assert_eq!(p.to_string(), "1+2*d-3*d^2");
    assert_eq!(Poly::parse(&p.to_string()).unwrap(), p);
    let twice = m.scale(&Poly::constant(2));
    assert_eq!(twice.to_tsv(), "2*d\n");
}

#[test]
fn inputs_file_feeds_evaluation() {
    let e = parse_expr("(p 1 2 2)").unwrap();
    let m = eval_expr(&e).unwrap();
    let inputs = parse_inputs("1: 2 1 = 1\n2: 2 1 = 1+d\n", m.domain()).unwrap();
    let out = apply_map(&m, &inputs).unwrap();
    let mut want = TLElement::new(4);
    want.add_term(Pairing(vec![3, 2, 1, 0]), Poly::parse("1+d").unwrap());
    assert_eq!(out, want);
}

fn poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-5i64..=5, 0..4).prop_map(Poly::from_coeffs)
}

proptest! {
    #[test]
    fn polynomials_form_a_ring(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(Poly::parse(&a.to_string()).unwrap(), a);
    }

    /// Capping a cup at the same position gives δ, at a neighbouring position the identity.
    #[test]
    fn cap_cup_relations(n in 0usize..=6, i in 0usize..=6) {
        prop_assume!(i <= n && n % 2 == 0);
        let cup = eval_generator(&Generator::Cup(i, n)).unwrap();
        let same = eval_generator(&Generator::Cap(i, n)).unwrap().compose(&cup);
        prop_assert_eq!(same, TensorMap::identity(&[n]).scale(&Poly::delta_pow(1)));
        if i < n {
            let next = eval_generator(&Generator::Cap(i + 1, n)).unwrap().compose(&cup);
            prop_assert_eq!(next, TensorMap::identity(&[n]));
        }
    }
}
