use anchored::checker::{
    check_all_relations, check_equivariance, check_moves, check_relations, enumerate_instances, equivariance_holds,
    rotation, Backend, Family, Morph,
};
use anchored::tangle::random::Bounds;
use anchored::tl::TensorMap;
use anchored::{Letter, RibbonBraid};

fn count(family: Family, nmax: usize) -> usize {
    enumerate_instances(family, nmax).len()
}

/// Triangular count of pairs `i < j − 1` (or `i ≤ j`) for each `n ≤ nmax − 4`.
fn quadratic_count(nmax: usize) -> usize {
    (0..=nmax).filter(|n| n + 4 <= nmax).map(|n| (n + 1) * (n + 2) / 2).sum()
}

#[test]
fn instance_counts_match_closed_forms() {
    for nmax in 0..=6 {
        assert_eq!(count(Family::A1, nmax), (nmax + 1) + (nmax + 1) * (nmax + 2) / 2);
        assert_eq!(count(Family::A2, nmax), quadratic_count(nmax), "nmax={nmax}");
        assert_eq!(count(Family::A3, nmax), quadratic_count(nmax), "nmax={nmax}");
        let a4: usize = (0..=nmax).map(|n| (n + 1) * (n + 1)).sum();
        assert_eq!(count(Family::A4, nmax), a4);
        let mut a7 = 0;
        for n in 0..=nmax {
            for j in 0..=nmax - n {
                for k in 0..=nmax - n - j {
                    a7 += (nmax - n - j - k + 1) * (n + 1);
                }
            }
        }
        assert_eq!(count(Family::A7, nmax), a7, "nmax={nmax}");
        assert_eq!(count(Family::C7, nmax), a7);
        assert_eq!(count(Family::C9, nmax), nmax + 1);
    }
}

#[test]
fn tangle_and_morphism_families_line_up() {
    let pairs = [(Family::A1, Family::C1), (Family::A2, Family::C2), (Family::A3, Family::C3), (Family::A7, Family::C7)];
    for (a, c) in pairs {
        let ta: Vec<String> = enumerate_instances(a, 5).iter().map(|x| x.params_string()).collect();
        let tc: Vec<String> = enumerate_instances(c, 5).iter().map(|x| x.params_string()).collect();
        assert_eq!(ta, tc, "{a} vs {c}");
    }
}

#[test]
fn rotation_is_the_identity() {
    for n in 0..=6 {
        assert_eq!(rotation(n).eval_tl().unwrap(), TensorMap::identity(&[n]), "n={n}");
        assert_eq!(Morph::Theta(n).eval_tl().unwrap(), TensorMap::identity(&[n]));
    }
}

#[test]
fn all_relations_hold_at_four() {
    let report = check_all_relations(Backend::Tl, 4).unwrap();
    assert!(report.passed(), "{}", report.to_tsv());
    assert_eq!(report.failures(), 0);
    for family in Family::ALL {
        assert!(report.entries.iter().any(|e| e.family == family.to_string()), "{family}");
    }
}

#[test]
fn reports_are_deterministic() {
    let a = check_all_relations(Backend::Tl, 3).unwrap().to_tsv();
    let b = check_all_relations(Backend::Tl, 3).unwrap().to_tsv();
    assert_eq!(a, b);
    assert!(a.lines().all(|l| l.split('\t').count() == 3 && l.ends_with("\tpass")));
    let e1 = check_equivariance(3, 20, 9).unwrap().to_tsv();
    let e2 = check_equivariance(3, 20, 9).unwrap().to_tsv();
    assert_eq!(e1, e2);
}

#[test]
fn groth_backend_cannot_evaluate_morphisms() {
    assert!(check_relations(Backend::Groth, Family::C2, 4).is_err());
    assert!("tl".parse::<Backend>().is_ok());
    assert!("qq".parse::<Backend>().is_err());
    assert!("c10".parse::<Family>().is_err());
    assert_eq!("c4".parse::<Family>().unwrap(), Family::C4);
}

#[test]
fn equivariance_on_a_crossing() {
    let sigma = RibbonBraid::from_word(2, &[Letter::E(1)]).unwrap();
    let tau = RibbonBraid::from_word(2, &[Letter::T(1)]).unwrap();
    for sizes in [[0, 2, 4], [2, 2, 0], [4, 0, 2]] {
        assert!(equivariance_holds(&sigma, 1, &tau, &sizes).unwrap());
        assert!(equivariance_holds(&sigma, 2, &tau, &sizes).unwrap());
    }
    assert!(equivariance_holds(&sigma, 1, &tau, &[2, 2]).is_err());
    let report = check_equivariance(4, 50, 1).unwrap();
    assert!(report.passed());
    assert_eq!(report.entries.len(), 50);
}

#[test]
fn moves_preserve_evaluation() {
    let report = check_moves(200, 0, Bounds::default()).unwrap();
    assert!(report.passed());
    for family in ["M1", "M2", "M3", "M4", "M5", "M6"] {
        assert!(report.entries.iter().any(|e| e.family == family), "{family}");
    }
}
