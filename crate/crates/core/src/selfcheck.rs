//! Built-in invariant suite: exact, zero-tolerance checks over a given group
//! and representations. Backs the CLI `check` command.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{q_int, Q};
use crate::degrees::{bk_degree, mixed_degree};
use crate::error::Result;
use crate::integrate::{bk_integrand, integrate_over_polytope, integrate_over_simplex};
use crate::polytope::{
    convex_hull, lattice_volume, minkowski_sum, triangulate, triangulate_coned, weight_polytope,
    RationalPolytope, RepresentationSpec,
};
use crate::rootsys::RootSystem;

/// Outcome of one invariant check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: false,
            detail: detail.into(),
        }
    }
}

/// Deterministic pseudo-random small rationals, no external RNG needed.
struct Lcg(u64);

impl Lcg {
    fn next_u32(&mut self) -> u32 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 33) as u32
    }

    fn rational(&mut self) -> Q {
        let p = (self.next_u32() % 21) as i64 - 10;
        let q = (self.next_u32() % 7) as i64 + 1;
        crate::arith::q_ratio(p, q)
    }

    fn vector(&mut self, k: usize) -> Vec<Q> {
        (0..k).map(|_| self.rational()).collect()
    }
}

fn run_check(name: &str, body: impl FnOnce() -> Result<Option<String>>) -> CheckOutcome {
    match body() {
        Ok(None) => CheckOutcome::pass(name, "ok"),
        Ok(Some(problem)) => CheckOutcome::fail(name, problem),
        Err(e) => CheckOutcome::fail(name, format!("error: {e}")),
    }
}

/// Runs every invariant check against the group and the weight polytopes of
/// the given representations.
pub fn run(rs: &RootSystem, reps: &[RepresentationSpec]) -> Vec<CheckOutcome> {
    let mut out = Vec::new();

    out.push(run_check("weyl-closure", || {
        let set: HashSet<_> = rs.weyl_elements().iter().collect();
        for w in rs.weyl_elements() {
            for s in rs.simple_reflections() {
                if !set.contains(&s.mul(w)) {
                    return Ok(Some("closure violated".into()));
                }
            }
        }
        Ok(None)
    }));

    out.push(run_check("form-invariance", || {
        let mut lcg = Lcg(0x5eed_0001);
        for _ in 0..3 {
            let x = lcg.vector(rs.rank());
            let y = lcg.vector(rs.rank());
            let base = rs.pairing(&x, &y);
            for w in rs.weyl_elements() {
                if rs.pairing(&w.apply_q(&x), &w.apply_q(&y)) != base {
                    return Ok(Some("pairing not Weyl-invariant".into()));
                }
            }
        }
        Ok(None)
    }));

    out.push(run_check("rho-identity", || {
        let mut total = vec![BigInt::zero(); rs.rank()];
        for root in rs.positive_roots() {
            for (i, x) in root.iter().enumerate() {
                total[i] += x;
            }
        }
        if &total[..] != rs.two_rho() {
            return Ok(Some("2 rho differs from the sum of positive roots".into()));
        }
        for i in 0..rs.simple_coroots().len() {
            if rs.coroot_pairing(rs.rho(), i) != q_int(1) {
                return Ok(Some(format!("<rho, coroot {i}> is not 1")));
            }
        }
        Ok(None)
    }));

    out.push(run_check("orbit-stabilizer", || {
        let mut lcg = Lcg(0x5eed_0002);
        let mut samples = vec![rs.rho().to_vec()];
        samples.push(lcg.vector(rs.rank()));
        for x in samples {
            let orbit = rs.weyl_orbit(&x)?.len();
            let stab = rs
                .weyl_elements()
                .iter()
                .filter(|w| w.apply_q(&x) == x)
                .count();
            if (orbit * stab) as u128 != rs.weyl_order() {
                return Ok(Some(format!(
                    "orbit {} times stabilizer {} differs from |W| = {}",
                    orbit,
                    stab,
                    rs.weyl_order()
                )));
            }
        }
        Ok(None)
    }));

    let polytopes: Vec<(String, RationalPolytope)> = reps
        .iter()
        .enumerate()
        .filter_map(|(i, rep)| {
            let name = rep.name.clone().unwrap_or_else(|| format!("rep{i}"));
            weight_polytope(rs, rep).ok().map(|p| (name, p))
        })
        .collect();

    for (name, p) in &polytopes {
        out.push(run_check(&format!("hull-idempotence[{name}]"), || {
            let again = convex_hull(p.vertices())?;
            Ok((again != *p).then(|| "hull of vertices differs".to_string()))
        }));

        out.push(run_check(&format!("minkowski-scaling[{name}]"), || {
            let doubled = minkowski_sum(p, p)?;
            let dilated = p.dilate(&q_int(2))?;
            Ok((doubled.vertices() != dilated.vertices())
                .then(|| "P + P differs from 2P".to_string()))
        }));

        if p.is_full_dimensional() {
            out.push(run_check(
                &format!("triangulation-independence[{name}]"),
                || {
                    let f = bk_integrand(rs);
                    let canonical = integrate_over_polytope(&f, p)?;
                    let apex = p.vertices()[p.vertices().len() - 1].clone();
                    let mut alt = Q::zero();
                    for s in triangulate_coned(p, &apex)? {
                        alt += integrate_over_simplex(&f, &s)?;
                    }
                    Ok((canonical != alt).then(|| "integrals differ".to_string()))
                },
            ));

            out.push(run_check(
                &format!("triangulation-volume[{name}]"),
                || {
                    let mut total = Q::zero();
                    for s in triangulate(p)? {
                        total += s.volume();
                    }
                    Ok((total != lattice_volume(p)?)
                        .then(|| "simplex volumes do not sum to the volume".to_string()))
                },
            ));

            out.push(run_check(&format!("mixed-degree-diagonal[{name}]"), || {
                let n = rs.group_dim() as u32;
                let direct = bk_degree(rs, p)?.value;
                let diag = mixed_degree(rs, &[(p.clone(), n)])?.value;
                Ok((direct != diag).then(|| "diagonal property violated".to_string()))
            }));

            out.push(run_check(&format!("mixed-degree-symmetry[{name}]"), || {
                let n = rs.group_dim() as u32;
                let q = p.dilate(&q_int(2))?;
                let ab = mixed_degree(rs, &[(p.clone(), n - 1), (q.clone(), 1)])?.value;
                let ba = mixed_degree(rs, &[(q, 1), (p.clone(), n - 1)])?.value;
                Ok((ab != ba).then(|| "argument order changed the value".to_string()))
            }));
        }
    }

    out
}

/// The default configurations exercised when no input document is given:
/// SL2, the rank-2 special linear group, and a rank-2 torus.
pub fn default_suite() -> Result<Vec<(String, Vec<CheckOutcome>)>> {
    use crate::polytope::Summand;
    use crate::rootsys::{build_root_system, CartanType, FactorSpec, GroupSpec};

    let mut out = Vec::new();

    let a1 = build_root_system(&GroupSpec::new(vec![FactorSpec::new(CartanType::A, 1)], 0))?;
    out.push((
        "A1".to_string(),
        run(
            &a1,
            &[RepresentationSpec::irreducible(vec![vec![2]], vec![]).named("sym2")],
        ),
    ));

    let a2 = build_root_system(&GroupSpec::new(vec![FactorSpec::new(CartanType::A, 2)], 0))?;
    out.push((
        "A2".to_string(),
        run(
            &a2,
            &[RepresentationSpec::irreducible(vec![vec![1, 1]], vec![]).named("adjoint")],
        ),
    ));

    let t2 = build_root_system(&GroupSpec::torus(2))?;
    let square = RepresentationSpec {
        summands: (0..4u32)
            .map(|m| Summand {
                weight: vec![],
                central: vec![BigInt::from(m & 1), BigInt::from((m >> 1) & 1)],
            })
            .collect(),
        name: Some("square".to_string()),
    };
    out.push(("T2".to_string(), run(&t2, &[square])));

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        for (group, outcomes) in default_suite().unwrap() {
            for o in outcomes {
                assert!(o.passed, "{group}/{}: {}", o.name, o.detail);
            }
        }
    }
}
