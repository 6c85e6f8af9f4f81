//! Intersection numbers: Brion-Kazarnovskii degrees, their polarizations,
//! torus (BKK) degrees, and the computable Chern-class degrees.
//!
//! The self-intersection degree of the hyperplane section of a representation
//! with weight polytope P is n! times the integral of the invariant integrand
//! over the dominant part of P. Both P and the integrand are Weyl-invariant
//! and chamber walls have measure zero, so we integrate over all of P and
//! divide by |W| instead of clipping to a chamber.
//!
//! Mixed degrees come from polarization: F(t) = D(t_1 P_1 + ... + t_m P_m)
//! is a polynomial of total degree n on the open positive orthant, and the
//! coefficient of prod t_i^{r_i} with sum r_i = n is the iterated forward
//! difference of F at (1, ..., 1). All evaluation points keep every t_i >= 1,
//! away from the degenerate t = 0 locus.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorial, Q};
use crate::error::{Error, Result};
use crate::integrate::{bk_integrand, integrate_over_facet, integrate_over_polytope};
use crate::polytope::{
    convex_hull, lattice_volume, minkowski_sum, vertex_permutations, RationalPolytope,
};
use crate::rootsys::{to_q_vec, RootSystem};

/// An intersection index. When `expected_integer` is set (all inputs were
/// lattice polytopes) the value has been checked to be an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionNumber {
    pub value: Q,
    pub expected_integer: bool,
}

impl IntersectionNumber {
    fn checked(value: Q, expected_integer: bool, require_positive: bool) -> Result<Self> {
        if expected_integer {
            if !value.is_integer() {
                return Err(Error::Internal(format!(
                    "intersection number {} is not an integer on lattice input",
                    crate::arith::format_rational(&value)
                )));
            }
            if require_positive && !value.is_positive() {
                return Err(Error::Internal(format!(
                    "intersection number {} is not positive",
                    crate::arith::format_rational(&value)
                )));
            }
        }
        Ok(IntersectionNumber {
            value,
            expected_integer,
        })
    }

    /// Exact integer value, when the value is integral.
    pub fn as_integer(&self) -> Option<BigInt> {
        crate::arith::to_integer(&self.value)
    }
}

fn check_rank(rs: &RootSystem, p: &RationalPolytope) -> Result<()> {
    if p.dim_ambient() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: p.dim_ambient(),
        });
    }
    Ok(())
}

fn require_faithful(p: &RationalPolytope) -> Result<()> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFaithful {
            affine_dim: p.affine_dim(),
            ambient: p.dim_ambient(),
        });
    }
    Ok(())
}

/// n! / |W| as an exact rational.
fn chamber_factor(rs: &RootSystem) -> Q {
    Q::new(
        factorial(rs.group_dim()),
        BigInt::from(rs.weyl_order()),
    )
}

fn bk_value_raw(rs: &RootSystem, p: &RationalPolytope) -> Result<Q> {
    require_faithful(p)?;
    let integral = integrate_over_polytope(&bk_integrand(rs), p)?;
    Ok(integral * chamber_factor(rs))
}

/// Self-intersection degree of the hyperplane section with weight polytope
/// `p`: (n!/|W|) times the integral of the invariant integrand over `p`.
pub fn bk_degree(rs: &RootSystem, p: &RationalPolytope) -> Result<IntersectionNumber> {
    check_rank(rs, p)?;
    require_faithful(p)?;
    vertex_permutations(rs, p)?;
    let value = bk_value_raw(rs, p)?;
    IntersectionNumber::checked(value, p.is_lattice(), true)
}

fn torus_value_raw(rs: &RootSystem, p: &RationalPolytope) -> Result<Q> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            affine_dim: p.affine_dim(),
            ambient: p.dim_ambient(),
        });
    }
    Ok(lattice_volume(p)? * Q::from_integer(factorial(rs.rank())))
}

/// Degree of the torus embedded by characters with Newton polytope `p`:
/// k! times the lattice volume.
pub fn torus_degree(rs: &RootSystem, p: &RationalPolytope) -> Result<IntersectionNumber> {
    check_rank(rs, p)?;
    let value = torus_value_raw(rs, p)?;
    IntersectionNumber::checked(value, p.is_lattice(), true)
}

/// Deduplicates equal polytopes, merging multiplicities.
fn dedup_polys(polys: &[(RationalPolytope, u32)]) -> Vec<(RationalPolytope, u32)> {
    let mut out: Vec<(RationalPolytope, u32)> = Vec::new();
    for (p, r) in polys {
        match out.iter_mut().find(|(q, _)| q == p) {
            Some((_, mult)) => *mult += r,
            None => out.push((p.clone(), *r)),
        }
    }
    out
}

/// Polarization of a homogeneous degree-`total` functional via iterated
/// forward differences at the base point (1, ..., 1).
fn polarize<F>(polys: &[(RationalPolytope, u32)], total: usize, eval: F) -> Result<Q>
where
    F: Fn(&RationalPolytope) -> Result<Q>,
{
    if polys.is_empty() {
        return Err(Error::InvalidArgument("no polytopes given".into()));
    }
    if polys.iter().any(|(_, r)| *r == 0) {
        return Err(Error::InvalidArgument(
            "multiplicities must be positive".into(),
        ));
    }
    let sum: u32 = polys.iter().map(|(_, r)| r).sum();
    if sum as usize != total {
        return Err(Error::InvalidArgument(format!(
            "multiplicities sum to {}, expected {}",
            sum, total
        )));
    }
    let polys = dedup_polys(polys);
    let m = polys.len();
    let mut acc = Q::zero();
    let mut offsets = vec![0u32; m];
    loop {
        // Evaluate at t_i = 1 + offsets_i.
        let mut combo: Option<RationalPolytope> = None;
        for ((p, _), &j) in polys.iter().zip(&offsets) {
            let scaled = p.dilate(&crate::arith::q_int((1 + j) as i64))?;
            combo = Some(match combo {
                None => scaled,
                Some(acc_p) => minkowski_sum(&acc_p, &scaled)?,
            });
        }
        let val = eval(&combo.expect("at least one polytope"))?;
        let mut coeff = BigInt::one();
        for ((_, r), &j) in polys.iter().zip(&offsets) {
            coeff *= binomial(*r as usize, j as usize);
        }
        let parity = total as u32 - offsets.iter().sum::<u32>();
        if parity % 2 == 1 {
            coeff = -coeff;
        }
        acc += Q::from_integer(coeff) * val;

        // Mixed-radix increment of offsets over 0..=r_i.
        let mut i = 0;
        loop {
            if i == m {
                return Ok(acc / Q::from_integer(factorial(total)));
            }
            if offsets[i] < polys[i].1 {
                offsets[i] += 1;
                break;
            }
            offsets[i] = 0;
            i += 1;
        }
    }
}

fn validate_mixed_inputs(
    rs: &RootSystem,
    polys: &[(RationalPolytope, u32)],
) -> Result<(bool, bool)> {
    let mut all_lattice = true;
    let mut all_full = true;
    for (p, _) in polys {
        check_rank(rs, p)?;
        vertex_permutations(rs, p)?;
        all_lattice &= p.is_lattice();
        all_full &= p.is_full_dimensional();
    }
    Ok((all_lattice, all_full))
}

/// Polarized mixed degree D_pol with the given multiplicities; total
/// multiplicity must equal n. Symmetric in its arguments and agreeing with
/// [`bk_degree`] on the diagonal.
///
/// Arguments must be Weyl-invariant; lower-dimensional arguments are accepted
/// as long as every sampled Minkowski combination is full-dimensional (this
/// is what the first Chern class insertion needs on groups with a central
/// torus).
pub fn mixed_degree(
    rs: &RootSystem,
    polys: &[(RationalPolytope, u32)],
) -> Result<IntersectionNumber> {
    let (all_lattice, all_full) = validate_mixed_inputs(rs, polys)?;
    let value = polarize(polys, rs.group_dim(), |p| bk_value_raw(rs, p))?;
    IntersectionNumber::checked(value, all_lattice, all_full)
}

/// Polarized torus degree (mixed volume times k!); total multiplicity must
/// equal k.
pub fn torus_mixed_degree(
    rs: &RootSystem,
    polys: &[(RationalPolytope, u32)],
) -> Result<IntersectionNumber> {
    let (all_lattice, all_full) = validate_mixed_inputs(rs, polys)?;
    let value = polarize(polys, rs.rank(), |p| torus_value_raw(rs, p))?;
    IntersectionNumber::checked(value, all_lattice, all_full)
}

/// Weight polytope of the irreducible representation with highest weight
/// 2 rho, which represents the first Chern class as a hyperplane section.
pub fn chern1_polytope(rs: &RootSystem) -> Result<RationalPolytope> {
    if rs.num_positive_roots() == 0 {
        return Err(Error::InvalidArgument(
            "S_1 vanishes for tori: all Chern classes of a torus are zero".into(),
        ));
    }
    let orbit = rs.weyl_orbit(&to_q_vec(rs.two_rho()))?;
    convex_hull(&orbit)
}

/// Degree pairing with the top Chern class: |W| times the torus mixed degree
/// of the restricted polytopes (the top class is |W| translates of a maximal
/// torus). Total multiplicity must equal k.
pub fn chern_top_degree(
    rs: &RootSystem,
    polys: &[(RationalPolytope, u32)],
) -> Result<IntersectionNumber> {
    if rs.group_dim() == rs.rank() {
        return Err(Error::InvalidArgument(
            "a torus has no top Chern class (n - k = 0)".into(),
        ));
    }
    let inner = torus_mixed_degree(rs, polys)?;
    let value = inner.value * Q::from_integer(BigInt::from(rs.weyl_order()));
    IntersectionNumber::checked(value, inner.expected_integer, inner.expected_integer)
}

/// The boundary functional scaled for the curve count:
/// (n-1)! * (1/|W|) * sum over all facets of the facet integral of the
/// invariant integrand, in the lattice-normalized facet measure.
fn boundary_value_raw(rs: &RootSystem, p: &RationalPolytope) -> Result<Q> {
    require_faithful(p)?;
    let f = bk_integrand(rs);
    let mut acc = Q::zero();
    for i in 0..p.facets().len() {
        acc += integrate_over_facet(&f, p, i)?;
    }
    let scale = Q::new(
        factorial(rs.group_dim() - 1),
        BigInt::from(rs.weyl_order()),
    );
    Ok(acc * scale)
}

/// Number of boundary points acquired when compactifying a generic
/// complete-intersection curve: the W-averaged whole-boundary facet sum,
/// polarized over the given multiplicities (total n - 1).
pub fn boundary_count(
    rs: &RootSystem,
    polys: &[(RationalPolytope, u32)],
) -> Result<IntersectionNumber> {
    let (all_lattice, _) = validate_mixed_inputs(rs, polys)?;
    let value = polarize(polys, rs.group_dim() - 1, |p| boundary_value_raw(rs, p))?;
    if value.is_negative() {
        return Err(Error::Internal(format!(
            "boundary count {} is negative",
            crate::arith::format_rational(&value)
        )));
    }
    IntersectionNumber::checked(value, all_lattice, false)
}
