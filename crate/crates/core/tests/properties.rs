use jordan_flow::algebra::io::{from_json, to_json};
use jordan_flow::algebra::{act, derivation_algebra, flags, inf_act, is_jordan, jordan_defect, power_dims, radical, GroupElement, StructureTensor};
use jordan_flow::catalog::{all, builtin};
use jordan_flow::flow::{random_group_element, random_unitary};
use jordan_flow::linalg::{inner, re, C};
use jordan_flow::moment::{energy, energy_gradient, moment_matrix, moment_map};
use jordan_flow::stratify::{beta_mu, min_norm_point, support_weights, WeightVector};
use proptest::prelude::*;

fn tensor_from(n: usize, coeffs: &[f64]) -> StructureTensor {
    let mut p = Vec::new();
    let mut it = coeffs.chunks(2);
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let c = it.next().unwrap();
                p.push((i, j, k, C::new(c[0], c[1])));
            }
        }
    }
    StructureTensor::from_products(n, &p)
}

fn slots(n: usize) -> usize {
    n * (n + 1) / 2 * n * 2
}

fn random_tensor(max_n: usize) -> impl Strategy<Value = StructureTensor> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(-1.0..1.0f64, slots(n))))
        .prop_map(|(n, c)| tensor_from(n, &c))
        .prop_filter("nonzero", |t| t.norm() > 1e-3)
}

/// Sparse real tensors: each coefficient is kept with probability ~1/3.
fn sparse_tensor(max_n: usize) -> impl Strategy<Value = StructureTensor> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0u8..3, 0.2..2.0f64), slots(n) / 2)))
        .prop_map(|(n, c)| {
            let flat: Vec<f64> = c.iter().flat_map(|&(keep, v)| [if keep == 0 { v } else { 0.0 }, 0.0]).collect();
            tensor_from(n, &flat)
        })
        .prop_filter("nonzero", |t| !t.is_zero())
}

fn catalog_name() -> impl Strategy<Value = String> {
    (0..all().len()).prop_map(|i| all()[i].name.clone())
}

fn close(a: &StructureTensor, b: &StructureTensor, tol: f64) -> bool {
    a.distance(b) <= tol * a.norm().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn storage_is_symmetric(mu in random_tensor(5)) {
        let n = mu.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    prop_assert_eq!(mu.get(i, j, k), mu.get(j, i, k));
                }
            }
        }
    }

    #[test]
    fn json_round_trip_is_exact(mu in random_tensor(4)) {
        prop_assert_eq!(from_json(&to_json(&mu)).unwrap(), mu);
    }

    #[test]
    fn action_composes(mu in random_tensor(4), s1 in 0u64..1000, s2 in 0u64..1000) {
        let n = mu.dim();
        let g = random_group_element(n, s1);
        let h = random_group_element(n, s2);
        let lhs = act(&g, &act(&h, &mu).unwrap()).unwrap();
        let rhs = act(&g.compose(&h), &mu).unwrap();
        prop_assert!(close(&lhs, &rhs, 1e-9));
        let back = act(&g.inverse(), &act(&g, &mu).unwrap()).unwrap();
        prop_assert!(close(&back, &mu, 1e-9));
    }

    #[test]
    fn trace_of_moment(mu in random_tensor(6)) {
        let tr = moment_matrix(&mu).unwrap().trace();
        prop_assert!((tr.re + mu.norm_sq()).abs() <= 1e-9 * mu.norm_sq());
        prop_assert!(tr.im.abs() <= 1e-9 * mu.norm_sq());
    }

    #[test]
    fn moment_is_unitarily_equivariant(mu in random_tensor(5), seed in 0u64..1000) {
        let k = random_unitary(mu.dim(), seed);
        let lhs = moment_matrix(&act(&k, &mu).unwrap()).unwrap();
        let km = k.matrix();
        let rhs = km * moment_matrix(&mu).unwrap() * km.adjoint();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * mu.norm_sq());
        prop_assert!((energy(&act(&k, &mu).unwrap()).unwrap() - energy(&mu).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn energy_is_scale_invariant(mu in random_tensor(5), s in 0.1..10.0f64) {
        prop_assert!((energy(&mu.scale(re(s))).unwrap() - energy(&mu).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn gradient_matches_finite_differences(mu in random_tensor(4), dir in prop::collection::vec(-1.0..1.0f64, slots(4))) {
        let n = mu.dim();
        let delta = tensor_from(n, &dir[..slots(n)]);
        let grad = energy_gradient(&mu).unwrap();
        let h = 1e-5 * mu.norm();
        let ep = energy(&mu.add_scaled(&delta, re(h))).unwrap();
        let em = energy(&mu.add_scaled(&delta, re(-h))).unwrap();
        let fd = (ep - em) / (2.0 * h);
        let an = grad.inner(&delta).re;
        prop_assert!((fd - an).abs() <= 1e-6 * (1.0 + an.abs()), "fd {} analytic {}", fd, an);
    }

    #[test]
    fn weights_sum_to_minus_one(n in 1usize..6, i in 0usize..6, j in 0usize..6, k in 0usize..6) {
        let (i, j, k) = (i % n, j % n, k % n);
        let w = WeightVector::new(n, i, j, k);
        prop_assert_eq!(w.diag.iter().sum::<i32>(), -1);
        prop_assert!(w.diag.iter().all(|x| (-2..=1).contains(x)));
    }

    #[test]
    fn min_norm_certificate(points in prop::collection::vec(prop::collection::vec(-2.0..2.0f64, 4), 1..12)) {
        let p = min_norm_point(&points).unwrap();
        let xx = p.norm_sq();
        for v in &points {
            let d: f64 = p.point.iter().zip(v).map(|(a, b)| a * b).sum();
            prop_assert!(d >= xx - 1e-10, "gap {}", d - xx);
        }
        let s: f64 = p.coefficients.iter().sum();
        prop_assert!((s - 1.0).abs() < 1e-12);
        prop_assert!(p.coefficients.iter().all(|&c| c >= -1e-12));
    }

    #[test]
    fn min_norm_ignores_order_and_duplicates(points in prop::collection::vec(prop::collection::vec(-2.0..2.0f64, 3), 1..8), rot in 0usize..8) {
        let p = min_norm_point(&points).unwrap();
        let mut shuffled = points.clone();
        shuffled.rotate_left(rot % points.len());
        shuffled.extend(points.iter().cloned());
        let q = min_norm_point(&shuffled).unwrap();
        for (a, b) in p.point.iter().zip(&q.point) {
            prop_assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn support_is_scale_free(mu in sparse_tensor(4), s in 1e-3..1e3f64) {
        let a = support_weights(&mu, 1e-10).unwrap();
        let b = support_weights(&mu.scale(re(s)), 1e-10).unwrap();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    // Most sparse tensors have a non-diagonal moment map.
    #![proptest_config(ProptestConfig { max_global_rejects: 1 << 16, ..ProptestConfig::with_cases(64) })]

    #[test]
    fn energy_bounds_beta_mu_when_diagonal(mu in sparse_tensor(5)) {
        let m = moment_map(&mu).unwrap();
        let n = mu.dim();
        let off = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).map(|(i, j)| m[(i, j)].norm()).fold(0.0, f64::max);
        prop_assume!(off < 1e-12);
        let b = beta_mu(&mu).unwrap();
        prop_assert!(energy(&mu).unwrap() >= b.norm_sq - 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn invariants_survive_basis_change(name in catalog_name(), seed in 0u64..1000) {
        let e = builtin(&name).unwrap();
        let g = random_group_element(e.dim, seed);
        let nu = act(&g, &e.tensor).unwrap();
        prop_assert!(is_jordan(&nu, 1e-9), "{} defect {}", name, jordan_defect(&nu));
        prop_assert_eq!(flags(&nu), flags(&e.tensor));
        prop_assert_eq!(power_dims(&nu), power_dims(&e.tensor));
        prop_assert_eq!(derivation_algebra(&nu).dim, derivation_algebra(&e.tensor).dim);
    }

    #[test]
    fn moment_is_orthogonal_to_derivations(name in catalog_name(), seed in 0u64..1000) {
        let e = builtin(&name).unwrap();
        let nu = act(&random_group_element(e.dim, seed), &e.tensor).unwrap();
        let m = moment_matrix(&nu).unwrap();
        for d in derivation_algebra(&nu).basis {
            prop_assert!(inner(&m, &d).norm() <= 1e-8 * nu.norm_sq() * d.norm());
            prop_assert!(inf_act(&d, &nu).unwrap().norm() <= 1e-8 * nu.norm() * d.norm());
        }
    }

    #[test]
    fn radical_is_an_ideal(name in catalog_name()) {
        let e = builtin(&name).unwrap();
        let rad = radical(&e.tensor);
        for v in &rad.basis {
            for i in 0..e.dim {
                let x = jordan_flow::linalg::unit_vector(e.dim, i);
                let p = e.tensor.evaluate(&x, v).unwrap();
                prop_assert!(rad.residual(&p) <= 1e-9 * (1.0 + p.norm()), "{}", name);
            }
        }
    }
}

#[test]
fn group_elements_reject_singular_matrices() {
    let m = jordan_flow::linalg::CMat::zeros(2, 2);
    assert!(GroupElement::new(m).is_err());
}
