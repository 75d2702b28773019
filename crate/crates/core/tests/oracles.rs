mod common;

use common::*;
use rand::Rng;
use reeskit::hilbert::{artinian_length, hilbert_samuel_profile, Length};
use reeskit::modmat::free_resolution;
use reeskit::{Ideal, Limits, ModulePresentation, Monomial, Polynomial, PolyMatrix};

#[test]
fn groebner_corpus_matches_criterion_free_buchberger() {
    for (o, vars, gens) in groebner_corpus() {
        checks::groebner_matches_naive(o, &vars, &gens).unwrap();
    }
}

#[test]
fn rees_presentations_match_linear_algebra() {
    for (vars, gens) in checks::rees_corpus() {
        checks::rees_matches_kernel(&vars, &gens, 3).unwrap();
    }
}

#[test]
fn determinants_match_leibniz() {
    let r = ring(&["x", "y"]);
    let mut g = rng(11);
    for n in 1..=6 {
        for _ in 0..4 {
            let rows: Vec<Vec<Polynomial>> =
                (0..n).map(|_| (0..n).map(|_| random_poly(&mut g, &r, 2, 1)).collect()).collect();
            let m = PolyMatrix::from_rows(&r, rows.clone()).unwrap();
            assert_eq!(m.determinant().unwrap(), leibniz(&rows, &r), "n = {n}");
        }
    }
}

#[test]
fn koszul_resolutions_have_binomial_ranks() {
    let names = ["a", "b", "c", "d"];
    for n in 1..=4 {
        let r = ring(&names[..n]);
        let m = ModulePresentation::cyclic(&Ideal::of_vars(&r, &names[..n]).unwrap());
        let res = free_resolution(&m, n + 1, &Limits::default()).unwrap();
        let want: Vec<usize> = (0..=n).map(|k| binomial(n, k)).collect();
        assert_eq!(res.ranks(), want);
    }
}

#[test]
fn artinian_lengths_match_monomial_count() {
    let r = ring(&["x", "y", "z"]);
    let mut g = rng(5);
    for _ in 0..40 {
        let mut gens: Vec<Vec<u32>> = (0..3).map(|i| {
            let mut e = vec![0; 3];
            e[i] = g.gen_range(1..=4);
            e
        }).collect();
        for _ in 0..g.gen_range(0..4) {
            gens.push((0..3).map(|_| g.gen_range(0..=3)).collect());
        }
        let i = Ideal::new(
            &r,
            gens.iter().map(|e| Polynomial::monomial(&r, Monomial::from_exponents(e), q(1))),
        )
        .unwrap();
        let want = standard_monomials(3, &gens, 12) as u64;
        assert_eq!(artinian_length(&i, &Limits::default()).unwrap(), Length::Finite(want), "{i}");
    }
}

#[test]
fn double_point_multiplicity_from_length_sequence() {
    let gens = vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    let lengths: Vec<i64> = (1..=6).map(|s| standard_monomials(3, &monomial_power(&gens, s), 3 * s + 3) as i64).collect();
    let mut d = lengths.clone();
    for _ in 0..3 {
        d = d.windows(2).map(|w| w[1] - w[0]).collect();
    }
    assert!(d.iter().all(|&x| x == 2), "{d:?}");
    let r = ring(&["x", "y", "t"]);
    let profile = hilbert_samuel_profile(&ideal(&r, &["x^2", "y", "t"]), &Limits::default()).unwrap();
    assert_eq!(profile.lengths, lengths.iter().map(|&l| l as u64).collect::<Vec<_>>());
    assert_eq!(profile.multiplicity, 2);
}
