//! Acceptance suite: one test per criterion, each printing a pass line.
//! Everything is exact except the Monte-Carlo cross-check, whose tolerance is
//! five estimated standard errors at 10^7 samples.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use weylchi_core::arith::{factorial, q_int, Q};
use weylchi_core::polytope::Summand;
use weylchi_core::{
    bk_degree, bk_integrand, build_root_system, chern1_polytope, chern_top_degree,
    chi_complete_intersection, chi_terms, curve_chi, curve_invariants,
    inclusion_exclusion_identity_check, integrate_over_polytope, lattice_volume, mixed_degree,
    selfcheck, weight_polytope, CartanType, FactorSpec, GroupSpec, RationalPolytope,
    RepresentationSpec, RootSystem,
};

fn qv(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q_int(x)).collect()
}

fn a1() -> RootSystem {
    build_root_system(&GroupSpec::new(vec![FactorSpec::new(CartanType::A, 1)], 0)).unwrap()
}

fn sym(n: u32) -> RepresentationSpec {
    RepresentationSpec::irreducible(vec![vec![n]], vec![])
}

fn sym_polytope(rs: &RootSystem, n: u32) -> RationalPolytope {
    weight_polytope(rs, &sym(n)).unwrap()
}

#[test]
fn acceptance_1_sl2_golden_suite() {
    let start = Instant::now();
    let rs = a1();
    let p2 = sym_polytope(&rs, 2);
    for n in 1..=6i64 {
        let p = sym_polytope(&rs, n as u32);
        assert_eq!(bk_degree(&rs, &p).unwrap().value, q_int(2 * n * n * n));
        assert_eq!(
            mixed_degree(&rs, &[(p2.clone(), 1), (p.clone(), 2)]).unwrap().value,
            q_int(4 * n * n)
        );
        assert_eq!(
            chern_top_degree(&rs, &[(p.clone(), 1)]).unwrap().value,
            q_int(4 * n)
        );
        let chi = chi_complete_intersection(&rs, &[sym(n as u32)]).unwrap();
        assert_eq!(
            chi.value,
            Some(BigInt::from(2 * n * n * n - 4 * n * n + 4 * n))
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "golden suite took {elapsed:?}, budget is 5 s"
    );
    println!("acceptance criterion 1 (SL2 golden suite, n = 1..6, < 5 s): PASS ({elapsed:?})");
}

#[test]
fn acceptance_2_sl2_curve_suite() {
    let rs = a1();
    let p2rho = chern1_polytope(&rs).unwrap();
    assert_eq!(p2rho.vertices(), &[qv(&[-2]), qv(&[2])]);
    for m in 1..=5i64 {
        for n in 1..=5i64 {
            let chi = curve_chi(&rs, &[sym(m as u32), sym(n as u32)]).unwrap();
            assert_eq!(chi, BigInt::from(-2 * m * n * (m + n - 2)), "m={m} n={n}");
            let pairing = mixed_degree(
                &rs,
                &[
                    (p2rho.clone(), 1),
                    (sym_polytope(&rs, m as u32), 1),
                    (sym_polytope(&rs, n as u32), 1),
                ],
            )
            .unwrap();
            assert_eq!(pairing.value, q_int(4 * m * n), "m={m} n={n}");
        }
    }
    println!("acceptance criterion 2 (SL2 curve suite, chi = -2mn(m+n-2) and 4mn pairing): PASS");
}

/// Exact shoelace area of a full-dimensional 2-D lattice polytope.
fn shoelace_2d(p: &RationalPolytope) -> Q {
    let verts = p.vertices();
    let n = verts.len();
    let centroid: Vec<Q> = (0..2)
        .map(|j| {
            verts
                .iter()
                .map(|v| v[j].clone())
                .fold(Q::zero(), |a, b| a + b)
                / q_int(n as i64)
        })
        .collect();
    let mut ordered: Vec<Vec<Q>> = verts.to_vec();
    let sign = |x: &Q| -> i32 {
        if x.is_zero() {
            0
        } else if x.is_positive() {
            1
        } else {
            -1
        }
    };
    ordered.sort_by(|a, b| {
        let da: Vec<Q> = a.iter().zip(&centroid).map(|(x, c)| x - c).collect();
        let db: Vec<Q> = b.iter().zip(&centroid).map(|(x, c)| x - c).collect();
        let ha = if sign(&da[1]) > 0 || (da[1].is_zero() && sign(&da[0]) > 0) { 0 } else { 1 };
        let hb = if sign(&db[1]) > 0 || (db[1].is_zero() && sign(&db[0]) > 0) { 0 } else { 1 };
        ha.cmp(&hb).then_with(|| {
            let cross = &da[0] * &db[1] - &da[1] * &db[0];
            sign(&cross).cmp(&0).reverse()
        })
    });
    let mut twice = Q::zero();
    for i in 0..n {
        let a = &ordered[i];
        let b = &ordered[(i + 1) % n];
        twice += &a[0] * &b[1] - &a[1] * &b[0];
    }
    if twice.is_negative() {
        twice = -twice;
    }
    twice / q_int(2)
}

/// Pick's theorem check: area = interior + boundary/2 - 1 by direct lattice
/// point enumeration.
fn pick_area_2d(p: &RationalPolytope) -> Q {
    let verts = p.vertices();
    let bound = |j: usize, max: bool| -> i64 {
        let vals = verts.iter().map(|v| v[j].to_integer());
        let v = if max { vals.max() } else { vals.min() };
        i64::try_from(v.unwrap()).unwrap()
    };
    let (x0, x1) = (bound(0, false), bound(0, true));
    let (y0, y1) = (bound(1, false), bound(1, true));
    let mut interior = 0i64;
    let mut boundary = 0i64;
    for x in x0..=x1 {
        for y in y0..=y1 {
            let pt = qv(&[x, y]);
            if !p.contains(&pt) {
                continue;
            }
            let on_facet = p.facets().iter().any(|f| {
                let dot: BigRational = f
                    .normal
                    .iter()
                    .zip(&pt)
                    .map(|(n, c)| Q::from_integer(n.clone()) * c)
                    .fold(Q::zero(), |a, b| a + b);
                dot == f.offset
            });
            if on_facet {
                boundary += 1;
            } else {
                interior += 1;
            }
        }
    }
    q_int(interior) + q_int(boundary) / q_int(2) - q_int(1)
}

#[test]
fn acceptance_3_torus_bkk_suite() {
    let mut rng = StdRng::seed_from_u64(0xB0_1234_5678);
    let mut done = 0usize;
    for (rank, count) in [(1usize, 3usize), (2, 4), (3, 3)] {
        let rs = build_root_system(&GroupSpec::torus(rank)).unwrap();
        let mut produced = 0;
        while produced < count {
            let num_points = rng.random_range(rank + 2..rank + 6);
            let points: Vec<Vec<i64>> = (0..num_points)
                .map(|_| (0..rank).map(|_| rng.random_range(-4i64..5)).collect())
                .collect();
            let rep = RepresentationSpec {
                summands: points
                    .iter()
                    .map(|pt| Summand {
                        weight: vec![],
                        central: pt.iter().map(|&c| BigInt::from(c)).collect(),
                    })
                    .collect(),
                name: None,
            };
            let p = weight_polytope(&rs, &rep).unwrap();
            if !p.is_full_dimensional() {
                continue;
            }
            produced += 1;
            done += 1;

            let vol = lattice_volume(&p).unwrap();
            let expected = &vol * Q::from_integer(factorial(rank));
            assert_eq!(bk_degree(&rs, &p).unwrap().value, expected);

            let chi = chi_complete_intersection(&rs, &[rep]).unwrap();
            let signed = if rank % 2 == 1 {
                expected.clone()
            } else {
                -expected.clone()
            };
            assert_eq!(chi.value, Some(signed.numer().clone()));

            match rank {
                1 => {
                    let lo = p.vertices()[0][0].clone();
                    let hi = p.vertices()[p.vertices().len() - 1][0].clone();
                    assert_eq!(vol, hi - lo);
                }
                2 => {
                    assert_eq!(vol, shoelace_2d(&p));
                    assert_eq!(vol, pick_area_2d(&p));
                }
                _ => {}
            }
        }
    }
    assert_eq!(done, 10);
    println!("acceptance criterion 3 (torus BKK suite, 10 random lattice polytopes rank 1-3): PASS");
}

#[test]
fn acceptance_4_formal_identity() {
    for l in 1..=6 {
        assert!(
            inclusion_exclusion_identity_check(l).unwrap(),
            "identity failed at l = {l}"
        );
    }
    println!("acceptance criterion 4 (inclusion-exclusion identity, l = 1..6): PASS");
}

#[test]
fn acceptance_5_adjunction_path_consistency() {
    // --- A1, n = 3, k = 1: everything is evaluable. ---
    let rs = a1();
    // m = n - 1 = 2: generic path equals the curve shortcut.
    for (m, n) in [(1u32, 1u32), (2, 3), (4, 2)] {
        let generic = chi_complete_intersection(&rs, &[sym(m), sym(n)]).unwrap();
        let shortcut = curve_chi(&rs, &[sym(m), sym(n)]).unwrap();
        assert_eq!(generic.value, Some(shortcut));
    }
    // m = 1: term-by-term against direct degree calls.
    for n in 1..=4u32 {
        let p = sym_polytope(&rs, n);
        let terms = chi_terms(&rs, &[sym(n)]).unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(
            terms[0].1.as_ref().unwrap(),
            &bk_degree(&rs, &p).unwrap().value
        );
        let c1 = chern1_polytope(&rs).unwrap();
        assert_eq!(
            terms[1].1.as_ref().unwrap(),
            &mixed_degree(&rs, &[(c1, 1), (p.clone(), 2)]).unwrap().value
        );
        assert_eq!(
            terms[2].1.as_ref().unwrap(),
            &chern_top_degree(&rs, &[(p.clone(), 1)]).unwrap().value
        );
        let total: Q = terms
            .iter()
            .map(|(t, v)| {
                let v = v.clone().unwrap();
                if t.sign >= 0 {
                    v
                } else {
                    -v
                }
            })
            .fold(Q::zero(), |a, b| a + b);
        let chi = chi_complete_intersection(&rs, &[sym(n)]).unwrap();
        assert_eq!(total.numer(), &chi.value.unwrap());
    }

    // --- A1 x A1, n = 6, k = 2. ---
    let rs2 = build_root_system(&GroupSpec::new(
        vec![
            FactorSpec::new(CartanType::A, 1),
            FactorSpec::new(CartanType::A, 1),
        ],
        0,
    ))
    .unwrap();
    let rect = |a: u32, b: u32| RepresentationSpec::irreducible(vec![vec![a], vec![b]], vec![]);
    // m = n - 1 = 5.
    let reps = [rect(1, 1), rect(2, 1), rect(1, 2), rect(2, 2), rect(1, 1)];
    let generic = chi_complete_intersection(&rs2, &reps).unwrap();
    let shortcut = curve_chi(&rs2, &reps).unwrap();
    assert_eq!(generic.value, Some(shortcut));
    // m = 1: evaluable terms match direct calls; S_2, S_3 stay symbolic.
    let rep = rect(1, 2);
    let p = weight_polytope(&rs2, &rep).unwrap();
    let terms = chi_terms(&rs2, &[rep.clone()]).unwrap();
    assert_eq!(terms.len(), 5);
    for (term, value) in &terms {
        match term.chern_index {
            0 => assert_eq!(
                value.as_ref().unwrap(),
                &bk_degree(&rs2, &p).unwrap().value
            ),
            1 => {
                let c1 = chern1_polytope(&rs2).unwrap();
                assert_eq!(
                    value.as_ref().unwrap(),
                    &mixed_degree(&rs2, &[(c1, 1), (p.clone(), 5)]).unwrap().value
                );
            }
            4 => assert_eq!(
                value.as_ref().unwrap(),
                &chern_top_degree(&rs2, &[(p.clone(), 2)]).unwrap().value
            ),
            2 | 3 => assert!(value.is_none(), "S_{} must stay symbolic", term.chern_index),
            j => panic!("unexpected Chern index {j}"),
        }
    }
    let chi = chi_complete_intersection(&rs2, &[rep]).unwrap();
    assert!(chi.value.is_none());
    assert_eq!(
        chi.symbolic_residual
            .iter()
            .map(|t| t.chern_index)
            .collect::<Vec<_>>(),
        vec![2, 3]
    );
    println!("acceptance criterion 5 (adjunction path consistency on A1 and A1xA1): PASS");
}

struct F64Poly {
    terms: Vec<(f64, Vec<u32>)>,
}

impl F64Poly {
    fn from_exact(p: &weylchi_core::MultivariatePolynomial) -> F64Poly {
        F64Poly {
            terms: p
                .terms()
                .map(|(e, c)| (c.to_f64().expect("coefficient fits f64"), e.clone()))
                .collect(),
        }
    }

    fn eval(&self, x: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (c, exp) in &self.terms {
            let mut t = *c;
            for (xi, &e) in x.iter().zip(exp) {
                t *= xi.powi(e as i32);
            }
            acc += t;
        }
        acc
    }
}

/// Monte-Carlo estimate of the integral over a 2-D polytope together with the
/// estimated standard error.
fn mc_integral_2d(
    p: &RationalPolytope,
    f: &F64Poly,
    samples: u64,
    seed: u64,
) -> (f64, f64) {
    let verts: Vec<(f64, f64)> = p
        .vertices()
        .iter()
        .map(|v| (v[0].to_f64().unwrap(), v[1].to_f64().unwrap()))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &verts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let facets: Vec<(f64, f64, f64)> = p
        .facets()
        .iter()
        .map(|fa| {
            (
                fa.normal[0].to_f64().unwrap(),
                fa.normal[1].to_f64().unwrap(),
                fa.offset.to_f64().unwrap(),
            )
        })
        .collect();
    let box_vol = (x1 - x0) * (y1 - y0);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..samples {
        let x = x0 + (x1 - x0) * rng.random::<f64>();
        let y = y0 + (y1 - y0) * rng.random::<f64>();
        let inside = facets.iter().all(|&(a, b, c)| a * x + b * y <= c);
        let val = if inside { f.eval(&[x, y]) } else { 0.0 };
        sum += val;
        sum_sq += val * val;
    }
    let n = samples as f64;
    let mean = sum / n;
    let var = (sum_sq / n - mean * mean).max(0.0);
    let estimate = box_vol * mean;
    let se = box_vol * (var / n).sqrt();
    (estimate, se)
}

#[test]
fn acceptance_6_integration_oracle() {
    let cases = [
        (
            GroupSpec::new(vec![FactorSpec::new(CartanType::A, 2)], 0),
            vec![1u32, 1],
            "A2",
        ),
        (
            GroupSpec::new(vec![FactorSpec::new(CartanType::B, 2)], 0),
            vec![1, 1],
            "B2",
        ),
        (
            GroupSpec::new(vec![FactorSpec::new(CartanType::G, 2)], 0),
            vec![1, 0],
            "G2",
        ),
    ];
    for (i, (spec, hw, label)) in cases.into_iter().enumerate() {
        let rs = build_root_system(&spec).unwrap();
        let p = weight_polytope(&rs, &RepresentationSpec::irreducible(vec![hw], vec![])).unwrap();
        assert!(p.is_full_dimensional());
        let f = bk_integrand(&rs);
        let exact = integrate_over_polytope(&f, &p).unwrap();

        // Integrality of the scaled degree.
        let scale = Q::new(
            factorial(rs.group_dim()),
            BigInt::from(rs.weyl_order()),
        );
        let degree = &exact * scale;
        assert!(degree.is_integer(), "{label}: scaled degree not integral");
        assert!(degree.is_positive());

        // 10^7-sample Monte-Carlo cross-check within 5 standard errors.
        let (estimate, se) = mc_integral_2d(&p, &F64Poly::from_exact(&f), 10_000_000, 2026 + i as u64);
        let exact_f = exact.to_f64().unwrap();
        assert!(se > 0.0);
        assert!(
            (exact_f - estimate).abs() <= 5.0 * se,
            "{label}: exact {exact_f} vs MC {estimate} (se {se})"
        );
    }
    println!("acceptance criterion 6 (integration oracle: A2/B2/G2 vs 10^7-sample MC, 5 se): PASS");
}

#[test]
fn acceptance_7_genus_suite() {
    let rs = a1();
    let expect = [
        ((1u32, 1u32), 0i64),
        ((1, 2), 1),
        ((2, 2), 5),
    ];
    for ((m, n), g) in expect {
        assert_eq!(
            curve_invariants(&rs, &[sym(m), sym(n)]).unwrap().genus,
            BigInt::from(g)
        );
    }
    // Randomized parity sweep: chi(compactified curve) is even.
    let mut rng = StdRng::seed_from_u64(7_777);
    for _ in 0..12 {
        let m = rng.random_range(1u32..=8);
        let n = rng.random_range(1u32..=8);
        let inv = curve_invariants(&rs, &[sym(m), sym(n)]).unwrap();
        let compact = &inv.chi + &inv.boundary_points;
        assert_eq!(&compact % BigInt::from(2), BigInt::zero(), "m={m} n={n}");
        assert!(!inv.genus.is_negative());
    }
    println!("acceptance criterion 7 (genus suite and compactified-chi parity): PASS");
}

#[test]
fn acceptance_8_invariant_suite() {
    let suites = selfcheck::default_suite().unwrap();
    let mut count = 0;
    for (group, outcomes) in &suites {
        for o in outcomes {
            assert!(o.passed, "{group}/{}: {}", o.name, o.detail);
            count += 1;
        }
    }
    assert!(count >= 20, "expected a substantive invariant suite");
    println!("acceptance criterion 8 (built-in invariant suite, {count} exact checks): PASS");
}
