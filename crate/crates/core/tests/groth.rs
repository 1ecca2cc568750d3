use anchored::groth::{e6_ab, near_group_f, parse_fusion_data, preset, tlj_ring, FusionRing, ModuleTensorData};
use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

/// `Σ_{i=2}^{⌊k/2⌋+1} C(k−i, i−2)·N^{k−i}`.
fn pascal_f(n: u64, k: usize) -> BigUint {
    (2..=k / 2 + 1)
        .map(|i| BigUint::from(binomial((k - i) as u64, (i - 2) as u64)) * BigUint::from(n).pow((k - i) as u32))
        .sum()
}

#[test]
fn near_group_recursion_matches_pascal_diagonals() {
    for n in 1..=5u64 {
        for k in 1..=12 {
            assert_eq!(near_group_f(n, k), pascal_f(n, k), "N={n} k={k}");
        }
    }
    assert_eq!(near_group_f(2, 6), BigUint::from(44u32));
}

#[test]
fn near_group_boxes_are_uniform() {
    for n in 1..=5usize {
        let d = preset(&format!("ng:{n}")).unwrap();
        let table = d.box_table(12);
        assert_eq!(table[2], vec![BigUint::one(); n]);
        for (k, row) in table.iter().enumerate().skip(1) {
            let f = near_group_f(n as u64, k);
            assert!(row.iter().all(|x| *x == f), "N={n} k={k}");
        }
    }
}

#[test]
fn tambara_yamagami_boxes() {
    for n in 1..=5usize {
        let table = preset(&format!("ty:{n}")).unwrap().box_table(10);
        for (k, row) in table.iter().enumerate() {
            let total: BigUint = row.iter().sum();
            if k % 2 == 1 {
                assert!(total.is_zero());
            } else {
                assert_eq!(total, BigUint::from(n).pow((k / 2) as u32));
                if k >= 2 {
                    let each = BigUint::from(n).pow((k / 2 - 1) as u32);
                    assert!(row.iter().all(|x| *x == each));
                }
            }
        }
    }
}

/// `(1 ⊕ g)·2^{⊗k}` inside `A_{4n−3}`, with `g` the last simple.
fn ring_side(ring: &FusionRing, k: usize) -> Vec<BigUint> {
    let r = ring.rank();
    let mut v = ring.basis_vector(0);
    v[r - 1] += 1u32;
    let two = ring.basis_vector(1);
    for _ in 0..k {
        v = ring.multiply(&v, &two);
    }
    v
}

#[test]
fn even_dihedral_matches_ring_side() {
    for n in 2..=4 {
        let d = preset(&format!("d2n:{n}")).unwrap();
        let ring = tlj_ring(4 * n - 3);
        assert_eq!(d.ring, ring);
        for (k, row) in d.box_table(10).iter().enumerate() {
            assert_eq!(*row, ring_side(&ring, k), "n={n} k={k}");
        }
    }
}

#[test]
fn boxes_respect_parity() {
    for name in ["d2n:2", "d2n:3", "e7x", "tlj:6"] {
        let table = preset(name).unwrap().box_table(11);
        for (k, row) in table.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                assert!(c % 2 == k % 2 || x.is_zero(), "{name} k={k} c={c}");
            }
        }
    }
}

/// `M(1)=I, M(2)=A, M(k+1)=A·M(k)−M(k−1)` with signed entries.
fn chebyshev_matrices(a: &[Vec<u64>], count: usize) -> Vec<Vec<Vec<i64>>> {
    let r = a.len();
    let a: Vec<Vec<i64>> = a.iter().map(|row| row.iter().map(|&x| x as i64).collect()).collect();
    let id: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    let mut out = vec![id, a.clone()];
    while out.len() < count {
        let (p, q) = (&out[out.len() - 1], &out[out.len() - 2]);
        let next = (0..r)
            .map(|i| (0..r).map(|j| (0..r).map(|t| a[i][t] * p[t][j]).sum::<i64>() - q[i][j]).collect())
            .collect();
        out.push(next);
    }
    out.truncate(count);
    out
}

#[test]
fn chebyshev_matrices_are_nonnegative() {
    for name in ["tlj:3", "tlj:7", "d2n:2", "d2n:3", "e6"] {
        let d = preset(name).unwrap();
        for (k, m) in chebyshev_matrices(&d.action, d.ring.rank()).iter().enumerate() {
            assert!(m.iter().flatten().all(|&x| x >= 0), "{name} M({})", k + 1);
            let col: Vec<u64> = (0..m.len()).map(|x| m[x][d.unit_m] as u64).collect();
            let phi: Vec<u64> = d.phi.iter().map(|row| row[k]).collect();
            assert_eq!(col, phi, "{name} Φ({})", k + 1);
        }
    }
}

#[test]
fn e6_trace_table() {
    let d = preset("e6").unwrap();
    let expect: [(&str, &[usize]); 6] = [
        ("1", &[1, 7]),
        ("m", &[2, 6, 8]),
        ("x", &[3, 5, 7, 9]),
        ("psim", &[4, 6, 10]),
        ("psi", &[5, 11]),
        ("sigma", &[4, 8]),
    ];
    for (x, cs) in expect {
        let xi = d.module_simples.iter().position(|s| s == x).unwrap();
        let want: Vec<u64> = (1..=11).map(|c| u64::from(cs.contains(&c))).collect();
        assert_eq!(d.trace_of(xi), want, "Tr({x})");
    }
}

#[test]
fn e6_closed_formulas() {
    let d = preset("e6").unwrap();
    let table = d.box_table(17);
    let one = BigUint::one();
    for k in 0..=8 {
        let (a, b) = e6_ab(k);
        let mut even = vec![BigUint::zero(); 11];
        even[0] = a.clone();
        even[2] = b.clone();
        even[4] = &a + &b - &one;
        even[6] = &a + &b;
        even[8] = b.clone();
        even[10] = &a - &one;
        assert_eq!(table[2 * k], even, "P[{}]", 2 * k);

        let (a1, _) = e6_ab(k + 1);
        let mut odd = vec![BigUint::zero(); 11];
        odd[1] = a1.clone();
        odd[3] = &a1 + &b - &one;
        odd[5] = &a1 * 2u32 - &one;
        odd[7] = &a1 + &b;
        odd[9] = &a1 - &one;
        assert_eq!(table[2 * k + 1], odd, "P[{}]", 2 * k + 1);
    }
    let m6 = d.tensor_power_decomp(6);
    assert_eq!(m6, big(&[6, 0, 15, 0, 5, 0]));
    assert_eq!(d.tensor_power_decomp(3), big(&[0, 2, 0, 1, 0, 1]));
}

#[test]
fn e6_projected_boxes() {
    let table = preset("e6d").unwrap().box_table(21);
    let one = BigUint::one();
    for k in 0..=10 {
        let (a, b) = e6_ab(k);
        assert_eq!(table[2 * k], vec![a.clone(), BigUint::zero(), &a - &one]);
        assert_eq!(table[2 * k + 1], vec![BigUint::zero(), b, BigUint::zero()]);
    }
}

#[test]
fn d4_over_z3() {
    let d = preset("d4z").unwrap();
    let table = d.box_table(10);
    let row = |entries: &[(&str, u64)]| -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); d.ring.rank()];
        for (label, m) in entries {
            v[d.ring.index_of(label).unwrap()] = BigUint::from(*m);
        }
        v
    };
    assert_eq!(table[0], row(&[("(1,1)", 1), ("(3,3)", 1), ("(3,3')", 1), ("(5,1)", 1)]));
    assert_eq!(
        table[1],
        row(&[("(2,1)", 1), ("(2,3)", 1), ("(2,3')", 1), ("(4,1)", 1), ("(4,3)", 1), ("(4,3')", 1)])
    );
    assert_eq!(
        table[2],
        row(&[
            ("(1,1)", 1),
            ("(1,3)", 1),
            ("(1,3')", 1),
            ("(3,1)", 2),
            ("(3,3)", 2),
            ("(3,3')", 2),
            ("(5,1)", 1),
            ("(5,3)", 1),
            ("(5,3')", 1),
        ])
    );
    for k in 3..=10 {
        let thrice: Vec<BigUint> = table[k - 2].iter().map(|x| x * 3u32).collect();
        assert_eq!(table[k], thrice, "k={k}");
    }
}

#[test]
fn d10_e7_tables() {
    let d = preset("e7x").unwrap();
    let odd = |pairs: &[(usize, u64)]| -> Vec<BigUint> {
        let mut v = vec![BigUint::zero(); 17];
        for &(c, m) in pairs {
            v[c - 1] = BigUint::from(m);
        }
        v
    };
    let printed = [
        odd(&[(1, 1), (17, 1)]),
        odd(&[(1, 1), (9, 1), (17, 1)]),
        odd(&[(1, 2), (5, 1), (9, 3), (13, 1), (17, 2)]),
        odd(&[(1, 5), (5, 5), (7, 1), (9, 9), (11, 1), (13, 5), (17, 5)]),
        odd(&[(1, 14), (3, 1), (5, 20), (7, 7), (9, 29), (11, 7), (13, 20), (15, 1), (17, 14)]),
        odd(&[(1, 42), (3, 9), (5, 75), (7, 36), (9, 99), (11, 36), (13, 75), (15, 9), (17, 42)]),
    ];
    let table = d.box_table(10);
    for (k, want) in printed.iter().enumerate() {
        assert_eq!(table[2 * k], *want, "P[{}]", 2 * k);
        if 2 * k < 10 {
            assert!(table[2 * k + 1].iter().all(Zero::is_zero), "P[{}]", 2 * k + 1);
        }
    }
    let labels: [&[(&str, u64)]; 5] = [
        &[("x", 1), ("d", 1)],
        &[("x", 2), ("d", 3), ("y", 1)],
        &[("x", 5), ("d", 9), ("y", 5), ("z", 1)],
        &[("x", 14), ("d", 28), ("y", 20), ("z", 7), ("u", 1), ("b", 1)],
        &[("x", 42), ("d", 90), ("y", 75), ("z", 36), ("u", 9), ("b", 9)],
    ];
    for (t, want) in labels.iter().enumerate() {
        let k = 2 * (t + 1);
        let mut v = vec![BigUint::zero(); 17];
        for (label, m) in *want {
            v[d.module_simples.iter().position(|s| s == label).unwrap()] = BigUint::from(*m);
        }
        assert_eq!(d.tensor_power_decomp(k), v, "m^{k}");
    }
}

#[test]
fn trace_is_phi_transposed() {
    for name in ["tlj:4", "d2n:3", "e6", "e7x", "d4z"] {
        let d = preset(name).unwrap();
        let tr = d.trace();
        for (c, row) in tr.iter().enumerate() {
            for (x, &v) in row.iter().enumerate() {
                assert_eq!(v, d.phi[x][c]);
            }
        }
    }
}

#[test]
fn axioms_find_a_witness() {
    let mut r = tlj_ring(5);
    assert!(r.verify_axioms().passed());
    assert!(preset("group:4").unwrap().ring.verify_axioms().passed());
    r.n[1][1][2] += 1;
    let rep = r.verify_axioms();
    assert!(!rep.passed());
    assert!(rep.associativity.is_some());
    assert!(rep.to_string().contains("associativity\tfail"));
}

const TLJ4: &str = "
# A_4 acting on itself
[ring]
simples 1 2 3 4
unit 1
fuse 2 2 -> 1:1 3:1
fuse 2 3 -> 2:1 4:1
fuse 3 2 -> 2:1 4:1
fuse 2 4 -> 3:1
fuse 4 2 -> 3:1
fuse 3 3 -> 1:1 3:1
fuse 3 4 -> 2:1
fuse 4 3 -> 2:1
fuse 4 4 -> 1:1
[module]
simples 1 2 3 4
unit 1
act 1 -> 2:1
act 2 -> 1:1 3:1
act 3 -> 2:1 4:1
act 4 -> 3:1
phi-recursion chebyshev 2
";

#[test]
fn fusion_file_reproduces_preset() {
    let parsed = parse_fusion_data(TLJ4).unwrap();
    let p = preset("tlj:4").unwrap();
    assert_eq!(parsed.ring, p.ring);
    assert_eq!(parsed.box_table(8), p.box_table(8));
    assert!(parsed.ring.verify_axioms().passed());
}

#[test]
fn fusion_file_with_explicit_phi() {
    let text = "
[ring]
simples 0 1
unit 0
fuse 1 1 -> 0:1
[module]
simples 0 1
unit 0
act 0 -> 1:1
act 1 -> 0:1
phi 0 -> 0:1
phi 1 -> 1:1
";
    let d: ModuleTensorData = parse_fusion_data(text).unwrap();
    assert_eq!(d.box_table(3), vec![big(&[1, 0]), big(&[0, 1]), big(&[1, 0]), big(&[0, 1])]);
    assert!(parse_fusion_data("[module]\nsimples a\n").is_err());
    assert!(parse_fusion_data(&text.replace("phi 0 -> 0:1", "phi 0 -> 1:1")).is_err());
}

proptest! {
    #[test]
    fn box_tables_are_consistent_with_powers(k in 0usize..=12) {
        for name in ["tlj:5", "e6", "ng:3"] {
            let d = preset(name).unwrap();
            let direct = d.apply_trace(&d.tensor_power_decomp(k));
            prop_assert_eq!(&d.box_table(k)[k], &direct);
        }
    }

    #[test]
    fn tlj_rings_are_associative(n in 1usize..=9) {
        prop_assert!(tlj_ring(n).verify_axioms().passed());
    }
}
