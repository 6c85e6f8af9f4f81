//! Exact integration of rational polynomials over polytopes and facets, and
//! the Brion-Kazarnovskii integrand.
//!
//! Simplex integrals go through barycentric substitution and the Dirichlet
//! integral of barycentric monomials:
//! integral over the standard d-simplex of prod lambda_i^{a_i} equals
//! prod(a_i!) / (d + sum a_i)!.
//!
//! The integrand degree is 2 |R+|, which grows quickly (G2: 12, B3: 18);
//! expansion cost is fine at the guarded ranks, with |R+| <= 12 as the
//! documented soft cap.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{factorial, Q};
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::MultivariatePolynomial;
use crate::polytope::{triangulate, RationalPolytope, Simplex};
use crate::rootsys::RootSystem;

/// The Weyl-invariant integrand prod over positive roots of
/// (x, alpha)^2 / (rho, alpha)^2, as a polynomial in lattice coordinates.
/// The empty product (a torus) is the constant 1.
pub fn bk_integrand(rs: &RootSystem) -> MultivariatePolynomial {
    let k = rs.rank();
    let mut out = MultivariatePolynomial::one(k);
    let rho = rs.rho();
    for alpha in rs.positive_roots() {
        let alpha_q: Vec<Q> = alpha
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        // Linear form x -> (x, alpha) has coefficients Gram * alpha.
        let coeffs: Vec<Q> = (0..k)
            .map(|i| linalg::dot(&rs.gram()[i], &alpha_q))
            .collect();
        let denom = linalg::dot(rho, &coeffs); // (rho, alpha)
        debug_assert!(denom.is_positive());
        let scaled: Vec<Q> = coeffs.iter().map(|c| c / &denom).collect();
        let form = MultivariatePolynomial::linear_form(&scaled);
        out = out.mul_poly(&form.mul_poly(&form));
    }
    out
}

/// Exact integral of `f` over a full-dimensional simplex under Lebesgue
/// measure in lattice coordinates.
pub fn integrate_over_simplex(f: &MultivariatePolynomial, s: &Simplex) -> Result<Q> {
    let d = s.dim();
    if f.num_vars() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: f.num_vars(),
        });
    }
    let v0 = &s.vertices()[0];
    // x = v0 + E lambda with E columns v_i - v0.
    let mat: Vec<Vec<Q>> = (0..d)
        .map(|row| {
            (1..=d)
                .map(|i| &s.vertices()[i][row] - &v0[row])
                .collect()
        })
        .collect();
    let jac = linalg::det(&mat);
    if jac.is_zero() {
        return Err(Error::InvalidArgument("degenerate simplex".into()));
    }
    let jac_abs = if jac.is_negative() { -jac } else { jac };
    let g = f.substitute_affine(v0, &mat, d);
    let mut acc = Q::zero();
    for (exp, c) in g.terms() {
        let total: u32 = exp.iter().sum();
        let mut numer = BigInt::from(1);
        for &e in exp {
            numer *= factorial(e as usize);
        }
        let denom = factorial(d + total as usize);
        acc += c * Q::new(numer, denom);
    }
    Ok(acc * jac_abs)
}

/// Exact integral of `f` over a full-dimensional polytope; independent of the
/// triangulation used.
pub fn integrate_over_polytope(f: &MultivariatePolynomial, p: &RationalPolytope) -> Result<Q> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            affine_dim: p.affine_dim(),
            ambient: p.dim_ambient(),
        });
    }
    let mut acc = Q::zero();
    for s in triangulate(p)? {
        acc += integrate_over_simplex(f, &s)?;
    }
    Ok(acc)
}

/// Exact integral of `f` over one facet of a full-dimensional polytope, in
/// the lattice-normalized facet measure: coordinates come from an integer
/// basis of the facet's direction sublattice, so that sublattice covolume
/// is 1. A 0-dimensional facet contributes the point mass, i.e. the value
/// of `f` at the facet.
pub fn integrate_over_facet(
    f: &MultivariatePolynomial,
    p: &RationalPolytope,
    facet_index: usize,
) -> Result<Q> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            affine_dim: p.affine_dim(),
            ambient: p.dim_ambient(),
        });
    }
    let k = p.dim_ambient();
    if f.num_vars() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            got: f.num_vars(),
        });
    }
    let facet = p
        .facets()
        .get(facet_index)
        .ok_or_else(|| Error::InvalidArgument(format!("no facet #{facet_index}")))?;
    if !linalg::is_primitive(&facet.normal) {
        return Err(Error::Internal("facet normal is not primitive".into()));
    }

    let facet_vertices: Vec<Vec<Q>> = facet
        .vertex_indices
        .iter()
        .map(|&i| p.vertices()[i].clone())
        .collect();

    if k == 1 {
        // The facet is a single point.
        return Ok(f.eval(&facet_vertices[0]));
    }

    // Base point on the facet hyperplane and an integer basis of its
    // direction sublattice.
    let nn: BigInt = facet.normal.iter().map(|x| x * x).sum();
    let x0: Vec<Q> = facet
        .normal
        .iter()
        .map(|ni| &facet.offset * Q::new(ni.clone(), nn.clone()))
        .collect();
    let basis = linalg::integer_kernel_basis(&facet.normal);
    debug_assert_eq!(basis.len(), k - 1);

    // Facet vertices in lattice-basis coordinates y: solve B y = v - x0.
    let b_rows: Vec<Vec<Q>> = (0..k)
        .map(|r| {
            basis
                .iter()
                .map(|col| BigRational::from_integer(col[r].clone()))
                .collect()
        })
        .collect();
    let ys: Vec<Vec<Q>> = facet_vertices
        .iter()
        .map(|v| {
            let rhs: Vec<Q> = v.iter().zip(&x0).map(|(a, b)| a - b).collect();
            linalg::solve(&b_rows, &rhs)
                .ok_or_else(|| Error::Internal("facet vertex outside facet hyperplane".into()))
        })
        .collect::<Result<_>>()?;

    let facet_poly = crate::polytope::convex_hull(&ys)?;
    if !facet_poly.is_full_dimensional() {
        return Err(Error::Internal(
            "facet is not full-dimensional in its hyperplane".into(),
        ));
    }

    // f restricted to the facet: x = x0 + B y.
    let restricted = f.substitute_affine(&x0, &b_rows, k - 1);
    integrate_over_polytope(&restricted, &facet_poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q_int, q_ratio};
    use crate::polytope::{convex_hull, triangulate_coned, weight_polytope, RepresentationSpec};
    use crate::rootsys::{build_root_system, CartanType, FactorSpec, GroupSpec};

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q_int(x)).collect()
    }

    fn a1() -> RootSystem {
        build_root_system(&GroupSpec::new(vec![FactorSpec::new(CartanType::A, 1)], 0)).unwrap()
    }

    fn a2() -> RootSystem {
        build_root_system(&GroupSpec::new(vec![FactorSpec::new(CartanType::A, 2)], 0)).unwrap()
    }

    #[test]
    fn integrand_a1_is_t_squared() {
        let f = bk_integrand(&a1());
        assert_eq!(f, MultivariatePolynomial::variable(1, 0).pow(2));
    }

    #[test]
    fn integrand_torus_is_one() {
        let rs = build_root_system(&GroupSpec::torus(2)).unwrap();
        assert_eq!(bk_integrand(&rs), MultivariatePolynomial::one(2));
    }

    #[test]
    fn integrand_a2_normalized_at_rho() {
        let rs = a2();
        let f = bk_integrand(&rs);
        assert_eq!(f.degree(), 6);
        assert_eq!(f.eval(rs.rho()), q_int(1));
    }

    #[test]
    fn integrand_weyl_invariant() {
        for spec in [
            GroupSpec::new(vec![FactorSpec::new(CartanType::A, 2)], 0),
            GroupSpec::new(vec![FactorSpec::new(CartanType::B, 2)], 0),
            GroupSpec::new(vec![FactorSpec::new(CartanType::G, 2)], 0),
        ] {
            let rs = build_root_system(&spec).unwrap();
            let f = bk_integrand(&rs);
            for x in [
                vec![q_int(1), q_int(2)],
                vec![q_ratio(1, 3), q_int(-1)],
                vec![q_int(5), q_ratio(-2, 7)],
            ] {
                let base = f.eval(&x);
                for w in rs.weyl_elements() {
                    assert_eq!(f.eval(&w.apply_q(&x)), base);
                }
            }
        }
    }

    #[test]
    fn simplex_integrals() {
        // Constant 1 over the standard k-simplex gives 1/k!.
        for k in 1..4usize {
            let mut pts = vec![vec![Q::zero(); k]];
            for i in 0..k {
                let mut e = vec![Q::zero(); k];
                e[i] = Q::from_integer(BigInt::from(1));
                pts.push(e);
            }
            let s = Simplex::new(pts).unwrap();
            let one = MultivariatePolynomial::one(k);
            assert_eq!(
                integrate_over_simplex(&one, &s).unwrap(),
                Q::new(BigInt::from(1), factorial(k))
            );
        }
        // t^2 over [0, 1] = 1/3.
        let seg = Simplex::new(vec![qv(&[0]), qv(&[1])]).unwrap();
        let t2 = MultivariatePolynomial::variable(1, 0).pow(2);
        assert_eq!(integrate_over_simplex(&t2, &seg).unwrap(), q_ratio(1, 3));
        // xy over the standard 2-simplex = 1/24 (Dirichlet).
        let tri = Simplex::new(vec![qv(&[0, 0]), qv(&[1, 0]), qv(&[0, 1])]).unwrap();
        let xy = MultivariatePolynomial::variable(2, 0)
            .mul_poly(&MultivariatePolynomial::variable(2, 1));
        assert_eq!(integrate_over_simplex(&xy, &tri).unwrap(), q_ratio(1, 24));
    }

    #[test]
    fn polytope_integrals() {
        let t2 = MultivariatePolynomial::variable(1, 0).pow(2);
        for n in 1..5i64 {
            let seg = convex_hull(&[qv(&[-n]), qv(&[n])]).unwrap();
            assert_eq!(
                integrate_over_polytope(&t2, &seg).unwrap(),
                q_ratio(2 * n * n * n, 3)
            );
            let one = MultivariatePolynomial::one(1);
            assert_eq!(
                integrate_over_polytope(&one, &seg).unwrap(),
                crate::polytope::lattice_volume(&seg).unwrap()
            );
        }
    }

    #[test]
    fn triangulation_independence() {
        let rs = a2();
        let hex = weight_polytope(&rs, &RepresentationSpec::irreducible(vec![vec![1, 1]], vec![]))
            .unwrap();
        let f = bk_integrand(&rs);
        let canonical = integrate_over_polytope(&f, &hex).unwrap();
        // A different cone apex gives a genuinely different triangulation.
        let apex = hex.vertices()[0].clone();
        let alt: Q = triangulate_coned(&hex, &apex)
            .unwrap()
            .iter()
            .map(|s| integrate_over_simplex(&f, s).unwrap())
            .fold(Q::zero(), |a, b| a + b);
        assert_eq!(canonical, alt);
    }

    #[test]
    fn additivity_under_splitting() {
        // Split the square [0,2]^2 by x = 1.
        let f = {
            let x = MultivariatePolynomial::variable(2, 0);
            let y = MultivariatePolynomial::variable(2, 1);
            &x.pow(2) + &(&x * &y)
        };
        let whole = convex_hull(&[qv(&[0, 0]), qv(&[2, 0]), qv(&[0, 2]), qv(&[2, 2])]).unwrap();
        let left = convex_hull(&[qv(&[0, 0]), qv(&[1, 0]), qv(&[0, 2]), qv(&[1, 2])]).unwrap();
        let right = convex_hull(&[qv(&[1, 0]), qv(&[2, 0]), qv(&[1, 2]), qv(&[2, 2])]).unwrap();
        let a = integrate_over_polytope(&f, &whole).unwrap();
        let b = integrate_over_polytope(&f, &left).unwrap();
        let c = integrate_over_polytope(&f, &right).unwrap();
        assert_eq!(a, b + c);
    }

    #[test]
    fn homogeneous_scaling_law() {
        let rs = a2();
        let f = bk_integrand(&rs);
        let hex = weight_polytope(&rs, &RepresentationSpec::irreducible(vec![vec![1, 1]], vec![]))
            .unwrap();
        let base = integrate_over_polytope(&f, &hex).unwrap();
        for t in 2..4i64 {
            let scaled = integrate_over_polytope(&f, &hex.dilate(&q_int(t)).unwrap()).unwrap();
            let expected = crate::arith::q_pow(&q_int(t), (rs.rank() as u32) + f.degree()) * &base;
            assert_eq!(scaled, expected);
        }
    }

    #[test]
    fn facet_integrals() {
        // t^2 over the 0-dimensional facet {n} of [-n, n].
        let rs = a1();
        let t2 = bk_integrand(&rs);
        for n in 1..4i64 {
            let seg = convex_hull(&[qv(&[-n]), qv(&[n])]).unwrap();
            let total: Q = (0..seg.facets().len())
                .map(|i| integrate_over_facet(&t2, &seg, i).unwrap())
                .fold(Q::zero(), |a, b| a + b);
            assert_eq!(total, q_int(2 * n * n));
        }

        // 1 over the facet x = n of the square [0, n]^2 has lattice length n.
        let one = MultivariatePolynomial::one(2);
        let n = 3i64;
        let sq = convex_hull(&[qv(&[0, 0]), qv(&[n, 0]), qv(&[0, n]), qv(&[n, n])]).unwrap();
        let fi = sq
            .facets()
            .iter()
            .position(|f| f.normal == vec![BigInt::from(1), BigInt::from(0)])
            .unwrap();
        assert_eq!(integrate_over_facet(&one, &sq, fi).unwrap(), q_int(n));

        // Hexagon edge between (1,1) and (-1,2): primitive direction, lattice
        // length 1.
        let rs2 = a2();
        let hex = weight_polytope(&rs2, &RepresentationSpec::irreducible(vec![vec![1, 1]], vec![]))
            .unwrap();
        let one2 = MultivariatePolynomial::one(2);
        let target: std::collections::BTreeSet<Vec<Q>> =
            [qv(&[1, 1]), qv(&[-1, 2])].into_iter().collect();
        let fi = hex
            .facets()
            .iter()
            .position(|f| {
                let set: std::collections::BTreeSet<Vec<Q>> = f
                    .vertex_indices
                    .iter()
                    .map(|&i| hex.vertices()[i].clone())
                    .collect();
                set == target
            })
            .unwrap();
        assert_eq!(integrate_over_facet(&one2, &hex, fi).unwrap(), q_int(1));
    }

    #[test]
    fn skew_facet_measure_in_rank_three() {
        // The facet x+y+z = 1 of the standard 3-simplex has normalized area
        // 1/2 in its direction sublattice (three lattice points, none
        // interior, by Pick in that lattice).
        let simplex = convex_hull(&[
            qv(&[0, 0, 0]),
            qv(&[1, 0, 0]),
            qv(&[0, 1, 0]),
            qv(&[0, 0, 1]),
        ])
        .unwrap();
        let fi = simplex
            .facets()
            .iter()
            .position(|f| f.normal == vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)])
            .unwrap();
        let one = MultivariatePolynomial::one(3);
        assert_eq!(
            integrate_over_facet(&one, &simplex, fi).unwrap(),
            q_ratio(1, 2)
        );
        // x restricted to the facet integrates to area/3 by symmetry.
        let x = MultivariatePolynomial::variable(3, 0);
        assert_eq!(
            integrate_over_facet(&x, &simplex, fi).unwrap(),
            q_ratio(1, 6)
        );
    }
}
