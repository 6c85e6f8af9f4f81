//! The adjunction expansion for complete intersections of generic hyperplane
//! sections, and its evaluation: Euler characteristics, boundary counts, and
//! curve genus.
//!
//! The Euler characteristic of a generic complete intersection of m sections
//! is the degree-n term of (1 + S_1 + ... + S_{n-k}) * prod H_i (1 + H_i)^{-1}
//! in the ring of conditions. Expanding the geometric series yields signed
//! terms S_j * prod H_i^{e_i} with every e_i >= 1. Only j in {0, 1, n-k} have
//! known degree formulas; the remaining terms are returned symbolically
//! rather than approximated.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::Q;
use crate::degrees::{boundary_count, chern1_polytope, chern_top_degree, mixed_degree};
use crate::error::{Error, Result};
use crate::poly::MultivariatePolynomial;
use crate::polytope::{weight_polytope, RationalPolytope, RepresentationSpec};
use crate::rootsys::RootSystem;

/// Cap on the variable count of the formal inclusion-exclusion check.
pub const MAX_IDENTITY_VARS: usize = 12;

/// One signed monomial S_j * prod H_i^{e_i} of the adjunction expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionTerm {
    /// Chern index j, between 0 and n - k.
    pub chern_index: usize,
    /// Exponents of the m sections; each is at least 1 and j + sum = n.
    pub exponents: Vec<u32>,
    /// (-1)^(sum (e_i - 1)).
    pub sign: i8,
    /// Whether the term has a known degree formula (j in {0, 1, n-k}).
    pub evaluable: bool,
}

impl AdjunctionTerm {
    /// Degree bookkeeping: j + sum e_i.
    pub fn total_degree(&self) -> usize {
        self.chern_index + self.exponents.iter().sum::<u32>() as usize
    }
}

/// Result of evaluating the adjunction expansion: a plain integer when every
/// term is evaluable, otherwise the evaluated part plus symbolic leftovers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiResult {
    /// Present iff `symbolic_residual` is empty.
    pub value: Option<BigInt>,
    /// Signed sum of the evaluable terms (equals `value` when complete).
    pub evaluated_part: BigInt,
    /// Terms with no known degree formula, in series order.
    pub symbolic_residual: Vec<AdjunctionTerm>,
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    // Compositions of `total` into `parts` parts, each >= 1, lex order.
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if (parts as u32) > total {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 1..=(total - parts as u32 + 1) {
        for rest in compositions(total - first, parts - 1) {
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

/// All degree-n terms of the adjunction expansion for m sections on a group
/// of dimension n and rank k. For m > n the list is empty (no term has all
/// exponents positive).
pub fn adjunction_series(m: usize, n: usize, k: usize) -> Result<Vec<AdjunctionTerm>> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "need at least one hyperplane section".into(),
        ));
    }
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "rank {} exceeds dimension {}",
            k, n
        )));
    }
    let mut terms = Vec::new();
    for j in 0..=(n - k) {
        let remaining = (n - j) as u32;
        for e in compositions(remaining, m) {
            let flips: u32 = e.iter().map(|&x| x - 1).sum();
            let sign = if flips % 2 == 0 { 1 } else { -1 };
            let evaluable = j == 0 || j == 1 || j == n - k;
            terms.push(AdjunctionTerm {
                chern_index: j,
                exponents: e,
                sign,
                evaluable,
            });
        }
    }
    Ok(terms)
}

/// The adjunction terms for the given sections, each paired with its exact
/// degree when evaluable.
pub fn chi_terms(
    rs: &RootSystem,
    reps: &[RepresentationSpec],
) -> Result<Vec<(AdjunctionTerm, Option<Q>)>> {
    let n = rs.group_dim();
    let k = rs.rank();
    let m = reps.len();
    if m == 0 || m > n {
        return Err(Error::InvalidArgument(format!(
            "number of sections must be between 1 and n = {}, got {}",
            n, m
        )));
    }
    let polytopes: Vec<RationalPolytope> = reps
        .iter()
        .map(|rep| {
            let p = weight_polytope(rs, rep)?;
            if !p.is_full_dimensional() {
                return Err(Error::NotFaithful {
                    affine_dim: p.affine_dim(),
                    ambient: p.dim_ambient(),
                });
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;

    let mut out = Vec::new();
    for term in adjunction_series(m, n, k)? {
        let with_mults = |extra: Option<&RationalPolytope>| -> Vec<(RationalPolytope, u32)> {
            let mut list: Vec<(RationalPolytope, u32)> = Vec::new();
            if let Some(p) = extra {
                list.push((p.clone(), 1));
            }
            for (p, &e) in polytopes.iter().zip(&term.exponents) {
                list.push((p.clone(), e));
            }
            list
        };
        let value = if term.chern_index == 0 {
            Some(mixed_degree(rs, &with_mults(None))?.value)
        } else if term.chern_index == 1 {
            let c1 = chern1_polytope(rs)?;
            Some(mixed_degree(rs, &with_mults(Some(&c1)))?.value)
        } else if term.chern_index == n - k {
            Some(chern_top_degree(rs, &with_mults(None))?.value)
        } else {
            None
        };
        out.push((term, value));
    }
    Ok(out)
}

/// Euler characteristic of the generic complete intersection of the given
/// hyperplane sections. Fully numeric when every Chern term appearing is one
/// of S_0, S_1, S_{n-k}; otherwise the unevaluable terms are reported
/// symbolically and no total is claimed.
pub fn chi_complete_intersection(
    rs: &RootSystem,
    reps: &[RepresentationSpec],
) -> Result<ChiResult> {
    let terms = chi_terms(rs, reps)?;
    let mut total = Q::zero();
    let mut residual = Vec::new();
    for (term, value) in terms {
        match value {
            Some(v) => {
                let signed = if term.sign >= 0 { v } else { -v };
                total += signed;
            }
            None => residual.push(term),
        }
    }
    if !total.is_integer() {
        return Err(Error::Internal(format!(
            "Euler characteristic partial sum {} is not an integer",
            crate::arith::format_rational(&total)
        )));
    }
    let evaluated_part = total.numer().clone();
    Ok(ChiResult {
        value: residual.is_empty().then(|| evaluated_part.clone()),
        evaluated_part,
        symbolic_residual: residual,
    })
}

/// Euler characteristic, boundary point count, and genus of the generic
/// complete-intersection curve cut out by n - 1 sections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveInvariants {
    pub chi: BigInt,
    pub boundary_points: BigInt,
    pub genus: BigInt,
}

/// Computes all curve invariants for n - 1 sections.
pub fn curve_invariants(rs: &RootSystem, reps: &[RepresentationSpec]) -> Result<CurveInvariants> {
    let n = rs.group_dim();
    if reps.len() + 1 != n {
        return Err(Error::InvalidArgument(format!(
            "a curve needs n - 1 = {} sections, got {}",
            n - 1,
            reps.len()
        )));
    }
    let polytopes: Vec<RationalPolytope> = reps
        .iter()
        .map(|rep| weight_polytope(rs, rep))
        .collect::<Result<_>>()?;

    // chi(C) = D_pol(P_{2rho}, P_1, ..., P_{n-1})
    //            - sum_i D_pol(P_i, P_1, ..., P_{n-1}).
    let base: Vec<(RationalPolytope, u32)> =
        polytopes.iter().map(|p| (p.clone(), 1u32)).collect();
    let c1 = chern1_polytope(rs)?;
    let mut with_c1 = vec![(c1, 1u32)];
    with_c1.extend(base.iter().cloned());
    let mut chi = mixed_degree(rs, &with_c1)?.value;
    for p in &polytopes {
        let mut args = vec![(p.clone(), 1u32)];
        args.extend(base.iter().cloned());
        chi -= mixed_degree(rs, &args)?.value;
    }
    let chi = crate::arith::to_integer(&chi)
        .ok_or_else(|| Error::Internal("curve Euler characteristic not an integer".into()))?;

    let boundary = boundary_count(rs, &base)?;
    let boundary = boundary
        .as_integer()
        .ok_or_else(|| Error::Internal("boundary count not an integer".into()))?;

    let compact_chi = &chi + &boundary;
    if (&compact_chi % BigInt::from(2)) != BigInt::zero() {
        return Err(Error::Internal(format!(
            "compactified Euler characteristic {} is odd",
            compact_chi
        )));
    }
    let genus = BigInt::one() - compact_chi / BigInt::from(2);
    if genus.is_negative() {
        return Err(Error::Internal(format!("negative genus {}", genus)));
    }
    Ok(CurveInvariants {
        chi,
        boundary_points: boundary,
        genus,
    })
}

/// Euler characteristic of a generic complete-intersection curve.
pub fn curve_chi(rs: &RootSystem, reps: &[RepresentationSpec]) -> Result<BigInt> {
    Ok(curve_invariants(rs, reps)?.chi)
}

/// Genus of a generic complete-intersection curve:
/// g = 1 - (chi + boundary points) / 2.
pub fn curve_genus(rs: &RootSystem, reps: &[RepresentationSpec]) -> Result<BigInt> {
    Ok(curve_invariants(rs, reps)?.genus)
}

/// Expands 1 = prod ((1 + x_i) - x_i) by inclusion-exclusion over l formal
/// variables and confirms the alternating sum collapses to the constant 1.
pub fn inclusion_exclusion_identity_check(l: usize) -> Result<bool> {
    inclusion_exclusion_identity_check_with_cap(l, MAX_IDENTITY_VARS)
}

/// Same as [`inclusion_exclusion_identity_check`] with an explicit cap on the
/// variable count (the expansion has 2^l terms).
pub fn inclusion_exclusion_identity_check_with_cap(l: usize, cap: usize) -> Result<bool> {
    if l == 0 {
        return Err(Error::InvalidArgument(
            "need at least one variable".into(),
        ));
    }
    if l > cap {
        return Err(Error::ResourceCap(format!(
            "identity check capped at {} variables, got {}",
            cap, l
        )));
    }
    let one = MultivariatePolynomial::one(l);
    let mut total = MultivariatePolynomial::zero(l);
    for mask in 0u32..(1 << l) {
        let mut term = MultivariatePolynomial::one(l);
        for i in 0..l {
            let xi = MultivariatePolynomial::variable(l, i);
            if mask & (1 << i) != 0 {
                term = term.mul_poly(&xi);
            } else {
                term = term.mul_poly(&(&one + &xi));
            }
        }
        if mask.count_ones() % 2 == 1 {
            term = term.scale(&-Q::one());
        }
        total.add_assign(&term);
    }
    Ok(total == one)
}
