//! Exact intersection theory on complex reductive groups.
//!
//! This crate computes intersection numbers of generic hyperplane sections of
//! a reductive group embedded by a representation, entirely in exact rational
//! arithmetic. The main entry points:
//!
//! - [`rootsys`]: root-system data, Weyl groups, and the invariant form for a
//!   product of simple factors and a central torus;
//! - [`polytope`]: an exact rational polytope kernel (hulls, facets,
//!   triangulations, Minkowski sums, lattice volumes) and weight polytopes;
//! - [`integrate`]: exact integration of rational polynomials over polytopes
//!   and their facets, and the Brion-Kazarnovskii integrand;
//! - [`degrees`]: Brion-Kazarnovskii degrees, polarized mixed degrees, torus
//!   (BKK) degrees, and the computable Chern-class degrees;
//! - [`adjunction`]: the adjunction expansion, Euler characteristics of
//!   complete intersections, and curve Euler characteristic / genus;
//! - [`selfcheck`]: the built-in invariant suite backing the CLI `check`
//!   command.
//!
//! No floating-point arithmetic is used anywhere in the computation paths.

#![forbid(unsafe_code)]

pub mod adjunction;
pub mod arith;
pub mod degrees;
pub mod error;
pub mod integrate;
pub mod linalg;
pub mod poly;
pub mod polytope;
pub mod rootsys;
pub mod selfcheck;

pub use error::{Error, Result};

pub use adjunction::{
    adjunction_series, chi_complete_intersection, chi_terms, curve_chi, curve_genus,
    curve_invariants, inclusion_exclusion_identity_check, AdjunctionTerm, ChiResult,
    CurveInvariants,
};
pub use degrees::{
    bk_degree, boundary_count, chern1_polytope, chern_top_degree, mixed_degree, torus_degree,
    torus_mixed_degree, IntersectionNumber,
};
pub use integrate::{
    bk_integrand, integrate_over_facet, integrate_over_polytope, integrate_over_simplex,
};
pub use poly::MultivariatePolynomial;
pub use polytope::{
    convex_hull, facet_orbits, lattice_volume, minkowski_sum, triangulate, triangulate_coned,
    weight_polytope, Facet, FacetOrbit, RationalPolytope, RepresentationSpec, Simplex, Summand,
};
pub use rootsys::{
    build_root_system, build_root_system_with_cap, CartanType, FactorSpec, GroupSpec,
    LatticeBasis, RootSystem,
};
