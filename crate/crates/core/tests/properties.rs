use num_traits::{One, Zero};
use proptest::prelude::*;

use jackbern::bernoulli::{bernoulli_number, mv_bernoulli};
use jackbern::jack::{jack_eigenvalue, jack_p, jack_psi, monomial_to_psi, pieri_coefficient, psi_normalizer};
use jackbern::json::{sympoly_from_json, sympoly_to_json};
use jackbern::linalg::solve;
use jackbern::partition::{enumerate_partitions, partitions_of};
use jackbern::rational::{format_rational, frac, parse_rational};
use jackbern::series::{bernoulli_scalar_series, ScalarSeries};
use jackbern::shifted::{binomial, self_value, shifted_jack};
use jackbern::{Partition, Rational, SymPoly};

fn d_strategy() -> impl Strategy<Value = Rational> {
    (1i64..=7, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| frac(p, q))
}

fn partition_strategy(r: usize, max_weight: u32) -> impl Strategy<Value = Partition> {
    let all = enumerate_partitions(r, max_weight);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn r_and_partition(max_weight: u32) -> impl Strategy<Value = (usize, Partition)> {
    (1usize..=3).prop_flat_map(move |r| (Just(r), partition_strategy(r, max_weight)))
}

fn poly_strategy(r: usize) -> impl Strategy<Value = SymPoly> {
    let all = enumerate_partitions(r, 3);
    prop::collection::vec((0..all.len(), rational_strategy()), 0..5)
        .prop_map(move |terms| SymPoly::from_terms(r, terms.into_iter().map(|(i, c)| (all[i].clone(), c))))
}

fn dominated(k: &Partition, m: &Partition) -> bool {
    let mut acc = (0u32, 0u32);
    k.weight() == m.weight()
        && (1..=k.len().max(m.len())).all(|i| {
            acc.0 += k.part(i);
            acc.1 += m.part(i);
            acc.0 <= acc.1
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jack_p_is_a_triangular_eigenvector((r, m) in r_and_partition(5), d in d_strategy()) {
        let p = jack_p(&m, r, &d).unwrap();
        prop_assert!(p.coeff(&m).is_one());
        prop_assert!(p.terms().all(|(k, _)| dominated(k, &m)));
        prop_assert_eq!(p.apply_d2(&d).unwrap(), p.scale(&jack_eigenvalue(&m, r, &d)));
    }

    #[test]
    fn binomial_vanishes_exactly_off_containment(
        (r, m) in r_and_partition(4),
        k_idx in 0usize..20,
        d in d_strategy(),
    ) {
        let ks = enumerate_partitions(r, 4);
        let k = &ks[k_idx % ks.len()];
        let b = binomial(&m, k, r, &d).unwrap();
        prop_assert_eq!(b.is_zero(), !m.contains(k));
    }

    #[test]
    fn binomial_of_added_box_is_pieri_coefficient((r, m) in r_and_partition(4), d in d_strategy()) {
        for i in 1..=r {
            if let Some(up) = m.add_box(i, r) {
                prop_assert_eq!(binomial(&up, &m, r, &d).unwrap(), pieri_coefficient(&m, i, r, &d).unwrap());
            }
        }
    }

    #[test]
    fn binomial_corner_values((r, m) in r_and_partition(4), d in d_strategy()) {
        prop_assert!(binomial(&m, &Partition::empty(), r, &d).unwrap().is_one());
        prop_assert!(binomial(&m, &m, r, &d).unwrap().is_one());
    }

    #[test]
    fn shifted_jack_self_value_and_top((r, k) in r_and_partition(4), d in d_strategy()) {
        let sj = shifted_jack(&k, r, &d).unwrap();
        prop_assert_eq!(self_value(&k, r, &d).unwrap(), psi_normalizer(&k, r, &d));
        prop_assert_eq!(sj.poly.component(k.weight()), (*jack_p(&k, r, &d).unwrap()).clone());
        for n in enumerate_partitions(r, k.weight()) {
            if n != k {
                prop_assert!(sj.eval_at_partition(&n).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn interpolation_system_is_uniquely_solvable((r, k) in r_and_partition(4), d in d_strategy(), bump in 1i64..5) {
        // Matrix of P_n(m + hδ) over |n|, |m| ≤ |k|: full rank, so the
        // values determine the polynomial uniquely.
        let parts = enumerate_partitions(r, k.weight());
        let rows: Vec<Vec<Rational>> = parts
            .iter()
            .map(|m| {
                let pt = jackbern::shifted::shifted_point(m, r, &d).unwrap();
                parts.iter().map(|n| jack_p(n, r, &d).unwrap().evaluate(&pt).unwrap()).collect()
            })
            .collect();
        let mut rhs = vec![Rational::zero(); parts.len()];
        let idx = parts.iter().position(|n| n == &k).unwrap();
        rhs[idx] = frac(bump, 1);
        prop_assert!(solve(&rows, &rhs).is_some());
    }

    #[test]
    fn r1_reductions(m in 0u32..8, d in d_strategy()) {
        let mp = Partition::new(vec![m]).unwrap();
        prop_assert_eq!((*jack_p(&mp, 1, &d).unwrap()).clone(), SymPoly::monomial(&mp, 1));
        prop_assert_eq!(mv_bernoulli(&mp, 1, &d).unwrap(), mv_bernoulli(&mp, 1, &frac(1, 1)).unwrap());
        prop_assert_eq!(mv_bernoulli(&mp, 1, &d).unwrap().constant_term(), bernoulli_number(m));
    }

    #[test]
    fn psi_basis_round_trip(r in 1usize..=3, f in (1usize..=3).prop_flat_map(poly_strategy), d in d_strategy()) {
        let f = SymPoly::from_terms(r, f.terms().filter(|(k, _)| k.len() <= r).map(|(k, c)| (k.clone(), c.clone())));
        let e = monomial_to_psi(&f, &d).unwrap();
        let mut back = SymPoly::zero(r);
        for (k, c) in &e.coeffs {
            back = &back + &jack_psi(k, r, &d).unwrap().scale(c);
        }
        prop_assert_eq!(back, f);
    }

    #[test]
    fn power_of_e1_in_psi_basis(r in 1usize..=3, n in 0u32..=4, d in d_strategy()) {
        let e = monomial_to_psi(&SymPoly::e1(r).pow(n), &d).unwrap();
        let want: Vec<Partition> = partitions_of(n, r);
        let fact: Rational = (1..=n).map(|i| frac(i as i64, 1)).product();
        prop_assert_eq!(e.coeffs.len(), want.len());
        for k in want {
            prop_assert_eq!(e.coeff(&k), fact.clone());
        }
    }

    #[test]
    fn multiplication_is_evaluation_homomorphism(
        f in poly_strategy(2),
        g in poly_strategy(2),
        z in prop::collection::vec(rational_strategy(), 2),
    ) {
        let fg = f.multiply(&g).unwrap();
        prop_assert_eq!(fg.evaluate(&z).unwrap(), f.evaluate(&z).unwrap() * g.evaluate(&z).unwrap());
        prop_assert_eq!(fg, g.multiply(&f).unwrap());
    }

    #[test]
    fn json_round_trip(f in poly_strategy(3), family in prop::option::of(prop::sample::select(vec!["P", "Phi", "Psi", "Pip"]))) {
        let text = sympoly_to_json(&f, family);
        let (back, fam) = sympoly_from_json(&text).unwrap();
        prop_assert_eq!(back, f);
        prop_assert_eq!(fam.as_deref(), family);
    }

    #[test]
    fn rational_text_round_trip(x in rational_strategy()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn series_inverse(coeffs in prop::collection::vec(rational_strategy(), 1..7), lead in 1i64..5) {
        let mut c = coeffs;
        c[0] = frac(lead, 1);
        let s = ScalarSeries::new(c);
        let prod = s.mul(&s.inverse().unwrap()).unwrap();
        prop_assert_eq!(prod, ScalarSeries::one(s.max_degree()));
    }

    #[test]
    fn bernoulli_kernel_times_expm1_is_one(w in rational_strategy().prop_filter("nonzero", |w| !w.is_zero())) {
        let b = bernoulli_scalar_series(&w, 6).unwrap();
        let e = ScalarSeries::expm1_over_t(&w, 6);
        prop_assert_eq!(b.mul(&e).unwrap(), ScalarSeries::one(6));
    }

    #[test]
    fn enumeration_counts_match_brute_force(r in 1usize..=4, n in 0u32..=8) {
        let mut brute = 0;
        let mut stack = vec![(n, n, 0usize)];
        while let Some((left, cap, used)) = stack.pop() {
            if left == 0 {
                brute += 1;
                continue;
            }
            if used == r {
                continue;
            }
            for p in 1..=cap.min(left) {
                stack.push((left - p, p, used + 1));
            }
        }
        prop_assert_eq!(partitions_of(n, r).len(), brute);
    }
}
