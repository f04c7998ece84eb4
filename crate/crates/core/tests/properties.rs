//! Seeded randomized properties over random quivers.

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qgr::graded::{projective, split_tail, GradedMap};
use qgr::leavitt::LeavittAlgebra;
use qgr::linalg::{rational, QMatrix};
use qgr::quiver::enumerate_paths;
use qgr::series::{hilbert_series, satisfies_defining_identity};
use qgr::tower::{K0Group, Tower, TowerElement};
use qgr::Quiver;

fn build(n: usize, edges: &[(usize, usize)]) -> Quiver {
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let arrows: Vec<(String, String, String)> = edges
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| (format!("a{k}"), format!("v{}", s % n), format!("v{}", t % n)))
        .collect();
    Quiver::new(vertices, arrows).unwrap()
}

fn any_quiver() -> impl Strategy<Value = Quiver> {
    (1usize..=3, prop::collection::vec((0usize..3, 0usize..3), 0..=5)).prop_map(|(n, e)| build(n, &e))
}

/// A cycle through every vertex plus extra arrows: no sinks, no sources.
fn core_quiver() -> impl Strategy<Value = Quiver> {
    (1usize..=3, prop::collection::vec((0usize..3, 0usize..3), 0..=2)).prop_map(|(n, extra)| {
        let mut e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        e.extend(extra);
        build(n, &e)
    })
}

fn random_element(t: &Tower, level: usize, seed: u64) -> TowerElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let blocks = t
        .sizes(level)
        .iter()
        .map(|&s| {
            let rows: Vec<Vec<i64>> = (0..s).map(|_| (0..s).map(|_| rng.gen_range(-3..=3)).collect()).collect();
            QMatrix::from_ints(&rows)
        })
        .collect();
    t.element(level, blocks).unwrap()
}

fn small(t: &Tower, level: usize) -> bool {
    t.sizes(level + 2).iter().sum::<usize>() <= 40
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn theta_is_a_unital_homomorphism(q in any_quiver(), level in 0usize..=3, s1: u64, s2: u64) {
        let t = Tower::new(&q);
        prop_assume!(small(&t, level));
        let (x, y) = (random_element(&t, level, s1), random_element(&t, level, s2));
        prop_assert_eq!(t.theta(&t.mul(&x, &y)), t.mul(&t.theta(&x), &t.theta(&y)));
        prop_assert_eq!(t.theta(&t.add(&x, &y)), t.add(&t.theta(&x), &t.theta(&y)));
        prop_assert_eq!(t.theta(&t.unit(level)), t.unit(level + 1));
        // Σᵢ c_ji p_{n,i} = p_{n+1,j}
        let c = q.incidence_counts();
        let (now, next) = (t.sizes(level), t.sizes(level + 1));
        for j in 0..q.vertex_count() {
            prop_assert_eq!((0..q.vertex_count()).map(|i| c[j][i] * now[i]).sum::<usize>(), next[j]);
        }
    }

    #[test]
    fn limit_equality_is_a_congruence(q in any_quiver(), level in 0usize..=2, up in 0usize..=2, s1: u64, s2: u64, k in -3i64..=3) {
        let t = Tower::new(&q);
        prop_assume!(small(&t, level + up));
        let a = random_element(&t, level, s1);
        let c = random_element(&t, level, s2);
        let mut b = t.raise_to_level(&a, level + up);
        // add something that dies: a multiple of a sink block
        for v in q.sinks() {
            let e = t.scalar_mul(&rational(k), &t.block_idempotent(level + up, v));
            b = t.add(&b, &e);
        }
        prop_assert!(t.limit_equal(&a, &b));
        prop_assert!(t.limit_equal(&t.mul(&a, &c), &t.mul(&b, &c)));
        prop_assert!(t.limit_equal(&t.mul(&c, &a), &t.mul(&c, &b)));
        prop_assert!(t.limit_equal(&t.add(&a, &c), &t.add(&b, &c)));
        prop_assert!(t.limit_equal(&t.scalar_mul(&rational(k), &a), &t.scalar_mul(&rational(k), &b)));
    }

    #[test]
    fn k0_level_identification(q in any_quiver(), v in prop::collection::vec(-5i64..=5, 3), level in 0usize..=4) {
        let g = K0Group::new(&q);
        let v: Vec<BigInt> = v[..q.vertex_count()].iter().map(|&x| x.into()).collect();
        let x = g.class(v.clone(), level).unwrap();
        let cv = q.incidence_matrix().mul_vec(&v);
        let y = g.class(cv, level + 1).unwrap();
        prop_assert!(g.equal(&x, &y));
        prop_assert!(g.equal(&y, &x));
        prop_assert!(g.is_zero(&g.add(&x, &g.neg(&y))));
        prop_assert_eq!(g.is_zero(&x), g.is_zero(&y));
    }

    #[test]
    fn delta_product_law(q in core_quiver(), n in 0u32..=2, seed: u64) {
        let l = LeavittAlgebra::new(&q).unwrap();
        let paths: Vec<_> = enumerate_paths(&q, n).unwrap().into_iter().flatten().collect();
        prop_assume!(!paths.is_empty() && paths.len() <= 30);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10 {
            let pick = |r: &mut ChaCha8Rng| paths[r.gen_range(0..paths.len())].clone();
            let (p, qq, x, y) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
            // only genuine monomials: both sides end together
            if p.end() != qq.end() || x.end() != y.end() {
                continue;
            }
            let left = l.multiply(&l.monomial(&p, &qq).unwrap().element, &l.monomial(&x, &y).unwrap().element).unwrap();
            let right = if qq == x { l.monomial(&p, &y).unwrap().element } else { qgr::leavitt::LeavittElement::zero() };
            prop_assert!(l.equal(&left, &right).unwrap());
        }
    }

    #[test]
    fn split_tail_is_a_left_inverse(q in core_quiver(), arrow in 0usize..8, n in 1i64..=2) {
        let a = arrow % q.arrow_count();
        let f = GradedMap::right_multiplication(&q, a, (0, 4)).unwrap();
        let g = split_tail(&f, n).unwrap();
        prop_assert!(g.after(&f.truncate(n).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn identity_on_sums_of_projectives_splits(q in core_quiver(), i in 0usize..3, j in 0usize..3, k in 0i64..=2) {
        let (i, j) = (i % q.vertex_count(), j % q.vertex_count());
        let m = projective(&q, i, 0, (0, 4)).unwrap().direct_sum(&projective(&q, j, -k, (0, 4)).unwrap()).unwrap();
        let n = k.max(1);
        let g = split_tail(&GradedMap::identity(&m), n).unwrap();
        prop_assert!(g.is_identity());
    }

    #[test]
    fn hilbert_reduction_is_canonical(q in any_quiver()) {
        let h = hilbert_series(&q);
        prop_assert!(satisfies_defining_identity(&q, &h));
        prop_assert_eq!(h.denominator.coeff(0), num_bigint::BigInt::from(1));
        // the same quiver with its vertices listed backwards
        let order: Vec<usize> = (0..q.vertex_count()).rev().collect();
        let r = q.relabeled(&order).unwrap();
        let hr = hilbert_series(&r);
        prop_assert_eq!(&h.denominator, &hr.denominator);
        for (name, num) in h.vertex_names.iter().zip(&h.numerators) {
            let k = hr.vertex_names.iter().position(|n| n == name).unwrap();
            prop_assert_eq!(num, &hr.numerators[k]);
        }
    }
}
