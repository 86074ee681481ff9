//! Enumeration against independent counts.

use std::collections::BTreeSet;

use qslift_core::algebra::monomials_of_degree;
use qslift_core::lifting::{enumerate_monomial_liftings, gotzmann_number, saturated_quasi_stable};
use qslift_core::{HilbertPoly, Monomial, MonomialIdeal};

/// Partitions of `p` as nonincreasing parts.
fn partitions(p: u32, max: u32) -> Vec<Vec<u32>> {
    if p == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(p)).rev() {
        for mut rest in partitions(p - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The staircase of a partition: column `i` holds `x0^i x1^k` for `k < parts[i]`.
fn staircase_ideal(parts: &[u32]) -> MonomialIdeal {
    let mut gens = vec![Monomial::from_exponents(&[parts.len() as u32])];
    for (i, &h) in parts.iter().enumerate() {
        gens.push(Monomial::from_exponents(&[i as u32, h]));
    }
    MonomialIdeal::new(3, gens)
}

fn key(j: &MonomialIdeal) -> String {
    j.to_string()
}

#[test]
fn points_in_the_plane_are_partitions() {
    // a saturated ideal of p points in P^2 with x2 generic is a staircase in x0, x1
    for p in 1..=7 {
        let expected: BTreeSet<String> = partitions(p, p).iter().map(|q| key(&staircase_ideal(q))).collect();
        let got: BTreeSet<String> = saturated_quasi_stable(3, &HilbertPoly::constant(p as i64)).iter().map(key).collect();
        assert_eq!(got, expected, "p = {}", p);
    }
}

/// Every saturated quasi-stable ideal of K[x0, x1, x2] whose generators lie
/// in K[x0, x1] with degree at most `d`, found by trying all subsets.
fn all_ideals_up_to(d: u32) -> Vec<MonomialIdeal> {
    let terms: Vec<Monomial> = (1..=d).flat_map(|k| monomials_of_degree(2, k)).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 1u32..(1 << terms.len()) {
        let gens = terms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, m)| m.clone());
        let j = MonomialIdeal::new(3, gens);
        if j.is_quasi_stable() && j.is_saturated() && seen.insert(key(&j)) {
            out.push(j);
        }
    }
    out
}

#[test]
fn brute_force_search_agrees_for_small_constants() {
    // p points have regularity at most p, so generators of degree <= 3 cover p <= 3
    let all = all_ideals_up_to(3);
    for p in 1..=3 {
        let brute: BTreeSet<String> = all
            .iter()
            .filter(|j| j.hilbert_polynomial() == HilbertPoly::constant(p))
            .map(key)
            .collect();
        let got: BTreeSet<String> = saturated_quasi_stable(3, &HilbertPoly::constant(p)).iter().map(key).collect();
        assert_eq!(brute, got, "p = {}", p);
    }
}

#[test]
fn pools_have_the_requested_hilbert_polynomial() {
    for p in [HilbertPoly::from_ints(&[1, 2]), HilbertPoly::from_ints(&[0, 3]), HilbertPoly::constant(4)] {
        for j in saturated_quasi_stable(4, &p) {
            assert_eq!(j.hilbert_polynomial(), p, "{}", j);
            assert!(j.is_quasi_stable() && j.is_saturated(), "{}", j);
        }
    }
}

#[test]
fn lines_in_space_have_one_saturated_quasi_stable_ideal() {
    let pool = saturated_quasi_stable(4, &HilbertPoly::from_ints(&[1, 1]));
    assert_eq!(pool.len(), 1);
    assert_eq!(pool[0].to_string(), "(x0, x1)");
}

#[test]
fn the_double_point_lifts_to_two_ideals() {
    let jprime = MonomialIdeal::new(3, [Monomial::from_exponents(&[1]), Monomial::from_exponents(&[0, 2])]);
    let e = enumerate_monomial_liftings(&jprime, &HilbertPoly::from_ints(&[2, 2])).unwrap();
    let got: Vec<String> = e.liftings.iter().map(key).collect();
    assert_eq!(got.len(), 2);
    assert!(got.contains(&"(x0, x1^3, x1^2*x2)".to_string()), "{:?}", got);
    assert!(got.contains(&"(x0^2, x0*x1, x1^2, x0*x2)".to_string()), "{:?}", got);
    assert_eq!(e.gotzmann, gotzmann_number(&HilbertPoly::from_ints(&[2, 2])).unwrap());
    let single = enumerate_monomial_liftings(&jprime, &HilbertPoly::from_ints(&[1, 2])).unwrap();
    assert_eq!(single.liftings.len(), 1);
    assert_eq!(key(&single.liftings[0]), "(x0, x1^2)");
}
