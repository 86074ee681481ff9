use std::cmp::Ordering;

use proptest::prelude::*;

use qslift_core::algebra::{monomials_of_degree, rat};
use qslift_core::groebner::buchberger;
use qslift_core::monomial_ideal::pommaret_divides;
use qslift_core::parse::{parse_polys, parse_ideal};
use qslift_core::{FieldPoly, Monomial, MonomialIdeal, Ring};

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::from_exponents(&e))
}

fn homogeneous(n: usize, d: u32) -> impl Strategy<Value = FieldPoly> {
    let terms = monomials_of_degree(n, d);
    let k = terms.len();
    prop::collection::vec((0..k, -3i64..=3), 1..4).prop_map(move |picks| {
        FieldPoly::from_terms(picks.into_iter().map(|(i, c)| (terms[i].clone(), rat(c))))
    })
}

/// Strongly stable closure of a few terms of one degree: quasi-stable by construction.
fn strongly_stable(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1u32..=3, prop::collection::vec(any::<prop::sample::Index>(), 1..3)).prop_map(move |(d, picks)| {
        let terms = monomials_of_degree(n, d);
        let mut gens: Vec<Monomial> = picks.iter().map(|i| terms[i.index(terms.len())].clone()).collect();
        let mut k = 0;
        while k < gens.len() {
            let m = gens[k].clone();
            for (i, _) in m.support() {
                for j in 0..i {
                    let moved = m.div(&Monomial::var(i)).unwrap().mul_var(j);
                    if !gens.contains(&moved) {
                        gens.push(moved);
                    }
                }
            }
            k += 1;
        }
        MonomialIdeal::new(n, gens)
    })
}

fn brute_hilbert(j: &MonomialIdeal, t: u32) -> i64 {
    monomials_of_degree(j.nvars(), t).iter().filter(|m| !j.contains(m)).count() as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degrevlex_is_a_multiplicative_degree_order(a in monomial(4, 3), b in monomial(4, 3), c in monomial(4, 3)) {
        prop_assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
        if a.degree() != b.degree() {
            prop_assert_eq!(a.cmp(&b), a.degree().cmp(&b.degree()));
        }
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
    }

    #[test]
    fn leading_term_divisible_by_last_variable_means_all_terms_are(f in homogeneous(4, 3)) {
        prop_assume!(!f.is_zero());
        let lm = f.leading_monomial().unwrap();
        if lm.exponent(3) > 0 {
            prop_assert!(f.support().all(|m| m.exponent(3) > 0));
        }
    }

    #[test]
    fn normal_forms_decide_membership(
        g1 in homogeneous(3, 2), g2 in homogeneous(3, 2), q1 in homogeneous(3, 1), q2 in homogeneous(3, 1), f in homogeneous(3, 3),
    ) {
        let ring = Ring::new(3);
        let gb = buchberger(&ring, &[g1.clone(), g2.clone()]).unwrap();
        let member = q1.mul(&g1).add(&q2.mul(&g2));
        prop_assert!(gb.contains(&member));
        let nf = gb.normal_form(&f);
        prop_assert!(gb.contains(&f.sub(&nf)));
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        let inn = gb.initial_ideal();
        prop_assert!(nf.support().all(|m| !inn.contains(m)));
        prop_assert_eq!(gb.contains(&f), nf.is_zero());
    }

    #[test]
    fn reduced_basis_ignores_generator_order(g1 in homogeneous(3, 2), g2 in homogeneous(3, 2), g3 in homogeneous(3, 3)) {
        let ring = Ring::new(3);
        let a = buchberger(&ring, &[g1.clone(), g2.clone(), g3.clone()]).unwrap();
        let b = buchberger(&ring, &[g3, g2, g1]).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn printing_parses_back(f in homogeneous(4, 3), g in homogeneous(4, 2)) {
        let text = format!("{}, {}", f, g);
        let back = parse_polys(&text, 4).unwrap();
        prop_assert_eq!(back, vec![f.clone(), g.clone()]);
        let (_, checked) = parse_ideal(&text, Some(4)).unwrap();
        prop_assert_eq!(checked.len(), 2);
    }

    #[test]
    fn hilbert_function_counts_the_sous_escalier(j in strongly_stable(4)) {
        for t in 0i64..6 {
            prop_assert_eq!(j.hilbert_function(t), brute_hilbert(&j, t as u32));
        }
        let reg = j.hilbert_regularity_bound().max(0);
        let hp = j.hilbert_polynomial();
        for t in reg..reg + 3 {
            prop_assert_eq!(hp.eval_int(t), Some(j.hilbert_function(t)));
        }
    }

    #[test]
    fn truncations_stay_quasi_stable(j in strongly_stable(4), m in 0u32..5) {
        prop_assert!(j.is_quasi_stable());
        let tr = j.truncate(m);
        prop_assert!(tr.is_quasi_stable());
        for t in m..m + 3 {
            prop_assert_eq!(tr.hilbert_function(t as i64), j.hilbert_function(t as i64));
        }
    }

    #[test]
    fn pommaret_cones_tile_the_ideal(j in strongly_stable(3)) {
        let basis = j.pommaret_basis().unwrap().to_vec();
        let top = j.max_gen_degree() + 2;
        for d in 0..=top {
            for m in j.terms_of_degree(d) {
                let owners = basis.iter().filter(|p| pommaret_divides(p, &m)).count();
                prop_assert_eq!(owners, 1, "{} has {} Pommaret divisors", m, owners);
            }
        }
    }

    #[test]
    fn saturation_is_idempotent(j in strongly_stable(4)) {
        let s = j.saturation();
        prop_assert!(s.is_saturated());
        prop_assert_eq!(s.saturation(), s.clone());
        prop_assert!(s.contains_ideal(&j));
        // a saturated quasi-stable ideal has no generator divisible by the last variable
        prop_assert!(s.gens().iter().all(|g| g.exponent(3) == 0));
    }

    #[test]
    fn polynomial_saturation_is_idempotent(g1 in homogeneous(3, 2), g2 in homogeneous(3, 2)) {
        let ring = Ring::new(3);
        let gb = buchberger(&ring, &[g1, g2]).unwrap();
        let s = gb.saturation().unwrap();
        prop_assert!(s.contains_ideal(&gb));
        prop_assert_eq!(s.saturation().unwrap(), s.clone());
        prop_assert!(s.is_saturated().unwrap());
    }
}

#[test]
fn degrevlex_breaks_ties_at_the_last_variable() {
    let m = |e: &[u32]| Monomial::from_exponents(e);
    // x1^2 > x0*x2 because x0*x2 has more of the last variable
    assert_eq!(m(&[0, 2, 0]).cmp(&m(&[1, 0, 1])), Ordering::Greater);
    assert_eq!(m(&[1, 1, 0]).cmp(&m(&[0, 2, 0])), Ordering::Greater);
}
