//! Exact rational convex polytopes: hulls, facets, triangulations, Minkowski
//! sums, lattice volumes, and weight polytopes.
//!
//! Hulls are built by incremental insertion with exact rational orientation
//! predicates, keeping a triangulated boundary internally; coplanar simplicial
//! pieces are merged into facets with primitive integer normals on output.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorial, Q};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{to_q_vec, RootSystem};

/// Ambient dimensions above this are refused; exactness is the point here,
/// not asymptotics.
pub const MAX_HULL_DIM: usize = 6;

/// Supporting halfspace { x : <normal, x> <= offset } of a polytope, with the
/// normal primitive in the dual lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: Q,
    /// Indices into the polytope's vertex list of the vertices on this facet.
    pub vertex_indices: Vec<usize>,
}

/// Full-dimensional simplex: d+1 affinely independent rational points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    vertices: Vec<Vec<Q>>,
}

impl Simplex {
    pub fn new(vertices: Vec<Vec<Q>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("simplex needs vertices".into()));
        }
        let d = vertices[0].len();
        if vertices.len() != d + 1 {
            return Err(Error::InvalidArgument(format!(
                "simplex in dimension {} needs {} vertices, got {}",
                d,
                d + 1,
                vertices.len()
            )));
        }
        let s = Simplex { vertices };
        if s.edge_determinant().is_zero() {
            return Err(Error::InvalidArgument(
                "degenerate simplex: vertices affinely dependent".into(),
            ));
        }
        Ok(s)
    }

    pub fn vertices(&self) -> &[Vec<Q>] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    fn edge_determinant(&self) -> Q {
        let d = self.dim();
        if d == 0 {
            return Q::one();
        }
        let rows: Vec<Vec<Q>> = (1..=d)
            .map(|i| vec_sub(&self.vertices[i], &self.vertices[0]))
            .collect();
        linalg::det(&rows)
    }

    /// Euclidean volume in lattice coordinates.
    pub fn volume(&self) -> Q {
        let det = self.edge_determinant();
        let abs = if det.is_negative() { -det } else { det };
        abs / Q::from_integer(factorial(self.dim()))
    }
}

/// A representation given by the dominant highest weights of its irreducible
/// summands (fundamental coordinates per factor) and central characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    /// Nonnegative fundamental coordinates, one vector per simple factor.
    pub weight: Vec<Vec<u32>>,
    /// Central character on the torus directions.
    pub central: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationSpec {
    pub summands: Vec<Summand>,
    pub name: Option<String>,
}

impl RepresentationSpec {
    pub fn irreducible(weight: Vec<Vec<u32>>, central: Vec<BigInt>) -> Self {
        RepresentationSpec {
            summands: vec![Summand { weight, central }],
            name: None,
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.summands.is_empty() {
            return Err(Error::InvalidArgument(
                "representation needs at least one summand".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
struct BoundarySimplex {
    facet: usize,
    points: Vec<Vec<Q>>,
}

/// Exact rational polytope with cross-validated V- and H-representations.
///
/// Lower-dimensional polytopes are first-class values: `affine_dim` records
/// the dimension of the affine hull, and facets are supporting halfspaces of
/// the polytope within that hull, lifted to ambient coordinates.
#[derive(Debug, Clone)]
pub struct RationalPolytope {
    dim_ambient: usize,
    vertices: Vec<Vec<Q>>,
    facets: Vec<Facet>,
    affine_dim: usize,
    boundary: Vec<BoundarySimplex>,
}

impl PartialEq for RationalPolytope {
    fn eq(&self, other: &Self) -> bool {
        // The triangulated boundary is construction detail, not identity.
        self.dim_ambient == other.dim_ambient
            && self.affine_dim == other.affine_dim
            && self.vertices == other.vertices
            && self.facets == other.facets
    }
}

impl Eq for RationalPolytope {}

impl RationalPolytope {
    pub fn dim_ambient(&self) -> usize {
        self.dim_ambient
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim_ambient
    }

    /// Extreme points, sorted lexicographically.
    pub fn vertices(&self) -> &[Vec<Q>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Halfspace membership test; exact for full-dimensional polytopes. For
    /// lower-dimensional ones it only tests the lifted facet constraints.
    pub fn contains(&self, x: &[Q]) -> bool {
        self.facets
            .iter()
            .all(|f| linalg::dot_int(&f.normal, x) <= f.offset)
    }

    fn strictly_contains(&self, x: &[Q]) -> bool {
        self.is_full_dimensional()
            && self
                .facets
                .iter()
                .all(|f| linalg::dot_int(&f.normal, x) < f.offset)
    }

    /// Support function h(n) = max over vertices of <n, v>.
    pub fn support(&self, n: &[BigInt]) -> Q {
        self.vertices
            .iter()
            .map(|v| linalg::dot_int(n, v))
            .max()
            .expect("polytope has vertices")
    }

    /// All vertex coordinates integral.
    pub fn is_lattice(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|x| x.is_integer()))
    }

    /// Scales by a positive rational factor.
    pub fn dilate(&self, t: &Q) -> Result<RationalPolytope> {
        if !t.is_positive() {
            return Err(Error::InvalidArgument(
                "dilation factor must be positive".into(),
            ));
        }
        Ok(RationalPolytope {
            dim_ambient: self.dim_ambient,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * t).collect())
                .collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: &f.offset * t,
                    vertex_indices: f.vertex_indices.clone(),
                })
                .collect(),
            affine_dim: self.affine_dim,
            boundary: self
                .boundary
                .iter()
                .map(|bs| BoundarySimplex {
                    facet: bs.facet,
                    points: bs
                        .points
                        .iter()
                        .map(|p| p.iter().map(|x| x * t).collect())
                        .collect(),
                })
                .collect(),
        })
    }
}

fn vec_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Tracks the affine rank of a growing set of difference vectors.
struct RankTracker {
    rows: Vec<Vec<Q>>,
}

impl RankTracker {
    fn new() -> Self {
        RankTracker { rows: Vec::new() }
    }

    /// Adds the row if it increases the rank; reports whether it did.
    fn try_add(&mut self, row: Vec<Q>) -> bool {
        let mut r = row;
        for pivot_row in &self.rows {
            let pc = pivot_row
                .iter()
                .position(|x| !x.is_zero())
                .expect("stored rows are nonzero");
            if !r[pc].is_zero() {
                let f = &r[pc] / &pivot_row[pc];
                for (x, p) in r.iter_mut().zip(pivot_row) {
                    let t = p * &f;
                    *x -= t;
                }
            }
        }
        if r.iter().all(|x| x.is_zero()) {
            false
        } else {
            self.rows.push(r);
            // Keep rows in echelon-ish shape by leading column.
            self.rows.sort_by_key(|row| {
                row.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX)
            });
            true
        }
    }
}

/// Hyperplane through d affinely independent points in dimension d, as a
/// primitive integer normal and rational offset. Returns None if degenerate.
fn hyperplane(points: &[Vec<Q>]) -> Option<(Vec<BigInt>, Q)> {
    let d = points[0].len();
    debug_assert_eq!(points.len(), d);
    if d == 1 {
        let n = vec![BigInt::one()];
        let b = points[0][0].clone();
        return Some((n, b));
    }
    let rows: Vec<Vec<Q>> = points[1..]
        .iter()
        .map(|p| vec_sub(p, &points[0]))
        .collect();
    let ker = linalg::kernel_basis(&rows);
    if ker.len() != 1 {
        return None;
    }
    let n = linalg::primitive_integer(&ker[0]);
    let b = linalg::dot_int(&n, &points[0]);
    Some((n, b))
}

struct SimplicialFacet {
    normal: Vec<BigInt>,
    offset: Q,
    points: Vec<Vec<Q>>,
}

/// Incremental hull of a full-rank point set in dimension d.
fn full_dim_hull(
    points: &[Vec<Q>],
    basis_idx: &[usize],
    d: usize,
) -> Result<(Vec<Vec<Q>>, Vec<Facet>, Vec<BoundarySimplex>)> {
    debug_assert_eq!(basis_idx.len(), d + 1);
    let simplex_pts: Vec<Vec<Q>> = basis_idx.iter().map(|&i| points[i].clone()).collect();
    let dim_q = crate::arith::q_int((d + 1) as i64);
    let ref_point: Vec<Q> = (0..d)
        .map(|j| {
            let mut acc = Q::zero();
            for p in &simplex_pts {
                acc += &p[j];
            }
            acc / &dim_q
        })
        .collect();

    let mut sfacets: Vec<SimplicialFacet> = Vec::new();
    for omit in 0..=d {
        let pts: Vec<Vec<Q>> = simplex_pts
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != omit)
            .map(|(_, p)| p.clone())
            .collect();
        let (mut n, mut b) = hyperplane(&pts)
            .ok_or_else(|| Error::Internal("initial simplex facet degenerate".into()))?;
        let side = linalg::dot_int(&n, &simplex_pts[omit]);
        if side > b {
            for x in n.iter_mut() {
                *x = -x.clone();
            }
            b = -b;
        } else if side == b {
            return Err(Error::Internal("initial simplex not full-dimensional".into()));
        }
        sfacets.push(SimplicialFacet {
            normal: n,
            offset: b,
            points: pts,
        });
    }

    let basis_set: BTreeSet<usize> = basis_idx.iter().copied().collect();
    for (pi, p) in points.iter().enumerate() {
        if basis_set.contains(&pi) {
            continue;
        }
        let mut visible = Vec::new();
        let mut invisible = Vec::new();
        for f in sfacets.into_iter() {
            if linalg::dot_int(&f.normal, p) > f.offset {
                visible.push(f);
            } else {
                invisible.push(f);
            }
        }
        if visible.is_empty() {
            sfacets = invisible;
            continue;
        }
        // Horizon ridges appear in exactly one visible facet.
        let mut ridge_count: BTreeMap<Vec<Vec<Q>>, usize> = BTreeMap::new();
        for f in &visible {
            for omit in 0..d {
                let mut ridge: Vec<Vec<Q>> = f
                    .points
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != omit)
                    .map(|(_, q)| q.clone())
                    .collect();
                ridge.sort();
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        for (ridge, count) in ridge_count {
            if count != 1 {
                continue;
            }
            let mut pts = ridge;
            pts.push(p.clone());
            let (mut n, mut b) = hyperplane(&pts).ok_or_else(|| {
                Error::Internal("degenerate facet created during insertion".into())
            })?;
            let side = linalg::dot_int(&n, &ref_point);
            if side > b {
                for x in n.iter_mut() {
                    *x = -x.clone();
                }
                b = -b;
            } else if side == b {
                return Err(Error::Internal(
                    "hull reference point landed on a facet".into(),
                ));
            }
            invisible.push(SimplicialFacet {
                normal: n,
                offset: b,
                points: pts,
            });
        }
        sfacets = invisible;

        // Closed-boundary invariant: every ridge is shared by exactly two
        // simplicial facets.
        #[cfg(debug_assertions)]
        {
            let mut counts: BTreeMap<Vec<Vec<Q>>, usize> = BTreeMap::new();
            for f in &sfacets {
                for omit in 0..d {
                    let mut ridge: Vec<Vec<Q>> = f
                        .points
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != omit)
                        .map(|(_, q)| q.clone())
                        .collect();
                    ridge.sort();
                    *counts.entry(ridge).or_insert(0) += 1;
                }
            }
            debug_assert!(
                counts.values().all(|&c| c == 2),
                "hull boundary is not a closed triangulated manifold"
            );
        }
    }

    // Merge coplanar simplicial pieces into facets.
    let mut grouped: BTreeMap<(Vec<BigInt>, Q), Vec<usize>> = BTreeMap::new();
    for (i, f) in sfacets.iter().enumerate() {
        grouped
            .entry((f.normal.clone(), f.offset.clone()))
            .or_default()
            .push(i);
    }

    let mut boundary_points: BTreeSet<Vec<Q>> = BTreeSet::new();
    for f in &sfacets {
        for p in &f.points {
            boundary_points.insert(p.clone());
        }
    }
    let facet_keys: Vec<(Vec<BigInt>, Q)> = grouped.keys().cloned().collect();

    // A boundary point is a vertex iff its active facet normals span R^d.
    let mut vertices: Vec<Vec<Q>> = Vec::new();
    for q in boundary_points {
        let active: Vec<Vec<Q>> = facet_keys
            .iter()
            .filter(|(n, b)| linalg::dot_int(n, &q) == *b)
            .map(|(n, _)| n.iter().map(|x| Q::from_integer(x.clone())).collect())
            .collect();
        if linalg::rank(&active) == d {
            vertices.push(q);
        }
    }
    // BTreeSet iteration already sorted them lexicographically.

    let mut facets = Vec::with_capacity(facet_keys.len());
    let mut boundary = Vec::new();
    for (fi, (n, b)) in facet_keys.iter().enumerate() {
        let vertex_indices: Vec<usize> = vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| linalg::dot_int(n, v) == *b)
            .map(|(i, _)| i)
            .collect();
        if vertex_indices.len() < d {
            return Err(Error::Internal(format!(
                "facet supported by {} vertices, expected at least {}",
                vertex_indices.len(),
                d
            )));
        }
        for &si in &grouped[&(n.clone(), b.clone())] {
            boundary.push(BoundarySimplex {
                facet: fi,
                points: sfacets[si].points.clone(),
            });
        }
        facets.push(Facet {
            normal: n.clone(),
            offset: b.clone(),
            vertex_indices,
        });
    }

    // V/H cross-validation: every vertex satisfies every halfspace.
    for v in &vertices {
        for f in &facets {
            if linalg::dot_int(&f.normal, v) > f.offset {
                return Err(Error::Internal(
                    "hull vertex violates a facet inequality".into(),
                ));
            }
        }
    }

    Ok((vertices, facets, boundary))
}

/// Convex hull of a nonempty set of rational points.
///
/// Lower-dimensional hulls are handled by recursing inside the affine hull;
/// their facets are supporting halfspaces within that hull, lifted back to
/// ambient coordinates with primitive integer normals.
pub fn convex_hull(points: &[Vec<Q>]) -> Result<RationalPolytope> {
    if points.is_empty() {
        return Err(Error::InvalidArgument(
            "convex hull of an empty point set".into(),
        ));
    }
    let dim = points[0].len();
    if dim == 0 {
        return Err(Error::InvalidArgument("ambient dimension is zero".into()));
    }
    if dim > MAX_HULL_DIM {
        return Err(Error::ResourceCap(format!(
            "hull dimension {} exceeds supported maximum {}",
            dim, MAX_HULL_DIM
        )));
    }
    for p in points {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.len(),
            });
        }
    }

    let unique: BTreeSet<Vec<Q>> = points.iter().cloned().collect();
    let pts: Vec<Vec<Q>> = unique.into_iter().collect();

    // Greedy affine basis.
    let mut tracker = RankTracker::new();
    let mut basis_idx = vec![0usize];
    for (i, p) in pts.iter().enumerate().skip(1) {
        if tracker.try_add(vec_sub(p, &pts[0])) {
            basis_idx.push(i);
            if basis_idx.len() == dim + 1 {
                break;
            }
        }
    }
    let affine_dim = basis_idx.len() - 1;

    if affine_dim == dim {
        let (vertices, facets, boundary) = full_dim_hull(&pts, &basis_idx, dim)?;
        return Ok(RationalPolytope {
            dim_ambient: dim,
            vertices,
            facets,
            affine_dim,
            boundary,
        });
    }

    if affine_dim == 0 {
        return Ok(RationalPolytope {
            dim_ambient: dim,
            vertices: vec![pts[0].clone()],
            facets: Vec::new(),
            affine_dim: 0,
            boundary: Vec::new(),
        });
    }

    // Embed into the affine hull, hull there, lift back.
    let p0 = pts[basis_idx[0]].clone();
    let basis_cols: Vec<Vec<Q>> = basis_idx[1..]
        .iter()
        .map(|&i| vec_sub(&pts[i], &p0))
        .collect();
    // Rows of the system B y = p - p0.
    let b_rows: Vec<Vec<Q>> = (0..dim)
        .map(|r| basis_cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let embedded: Vec<Vec<Q>> = pts
        .iter()
        .map(|p| {
            linalg::solve(&b_rows, &vec_sub(p, &p0))
                .ok_or_else(|| Error::Internal("point outside its own affine hull".into()))
        })
        .collect::<Result<_>>()?;

    let mut etracker = RankTracker::new();
    let mut ebasis = vec![0usize];
    for (i, p) in embedded.iter().enumerate().skip(1) {
        if etracker.try_add(vec_sub(p, &embedded[0])) {
            ebasis.push(i);
            if ebasis.len() == affine_dim + 1 {
                break;
            }
        }
    }
    debug_assert_eq!(ebasis.len(), affine_dim + 1);
    let (evertices, efacets, _) = full_dim_hull(&embedded, &ebasis, affine_dim)?;

    // Lift vertices: y -> p0 + B y.
    let lift = |y: &[Q]| -> Vec<Q> {
        let mut out = p0.clone();
        for (ci, col) in basis_cols.iter().enumerate() {
            for (r, x) in col.iter().enumerate() {
                out[r] += x * &y[ci];
            }
        }
        out
    };
    let mut lifted: Vec<(Vec<Q>, usize)> = evertices
        .iter()
        .enumerate()
        .map(|(i, y)| (lift(y), i))
        .collect();
    lifted.sort();
    let vertices: Vec<Vec<Q>> = lifted.iter().map(|(v, _)| v.clone()).collect();
    let mut index_map = vec![0usize; evertices.len()];
    for (new_i, (_, old_i)) in lifted.iter().enumerate() {
        index_map[*old_i] = new_i;
    }

    // Lift facet normals: solve n B = m, scale primitive, lift offset.
    let bt_rows: Vec<Vec<Q>> = (0..affine_dim)
        .map(|r| (0..dim).map(|c| basis_cols[r][c].clone()).collect())
        .collect();
    let mut facets = Vec::with_capacity(efacets.len());
    for ef in &efacets {
        let m_q: Vec<Q> = ef
            .normal
            .iter()
            .map(|x| Q::from_integer(x.clone()))
            .collect();
        let n_rat = linalg::solve(&bt_rows, &m_q)
            .ok_or_else(|| Error::Internal("facet normal lift failed".into()))?;
        let n_int = linalg::primitive_integer(&n_rat);
        let scale_idx = n_rat
            .iter()
            .position(|x| !x.is_zero())
            .ok_or_else(|| Error::Internal("zero facet normal".into()))?;
        let lambda = Q::from_integer(n_int[scale_idx].clone()) / &n_rat[scale_idx];
        let offset = (linalg::dot(&n_rat, &p0) + &ef.offset) * &lambda;
        let mut vertex_indices: Vec<usize> =
            ef.vertex_indices.iter().map(|&i| index_map[i]).collect();
        vertex_indices.sort_unstable();
        facets.push(Facet {
            normal: n_int,
            offset,
            vertex_indices,
        });
    }
    facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));

    for v in &vertices {
        for f in &facets {
            if linalg::dot_int(&f.normal, v) > f.offset {
                return Err(Error::Internal(
                    "lifted facet inequality violated by a vertex".into(),
                ));
            }
        }
    }

    Ok(RationalPolytope {
        dim_ambient: dim,
        vertices,
        facets,
        affine_dim,
        boundary: Vec::new(),
    })
}

/// Triangulates a full-dimensional polytope: cone from 0 when it is strictly
/// interior (the Weyl-invariant case), otherwise a pulling triangulation from
/// the lexicographically smallest vertex.
pub fn triangulate(p: &RationalPolytope) -> Result<Vec<Simplex>> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            affine_dim: p.affine_dim,
            ambient: p.dim_ambient,
        });
    }
    let zero = vec![Q::zero(); p.dim_ambient];
    let apex = if p.strictly_contains(&zero) {
        zero
    } else {
        p.vertices[0].clone()
    };
    triangulate_coned(p, &apex)
}

/// Triangulation by coning from a chosen apex inside the polytope over the
/// boundary simplices of facets not containing it.
pub fn triangulate_coned(p: &RationalPolytope, apex: &[Q]) -> Result<Vec<Simplex>> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            affine_dim: p.affine_dim,
            ambient: p.dim_ambient,
        });
    }
    if apex.len() != p.dim_ambient {
        return Err(Error::DimensionMismatch {
            expected: p.dim_ambient,
            got: apex.len(),
        });
    }
    if !p.contains(apex) {
        return Err(Error::InvalidArgument(
            "triangulation apex must lie in the polytope".into(),
        ));
    }
    let mut simplices = Vec::new();
    for bs in &p.boundary {
        let f = &p.facets[bs.facet];
        if linalg::dot_int(&f.normal, apex) == f.offset {
            continue; // facet contains the apex; cone degenerates
        }
        let mut pts = vec![apex.to_vec()];
        pts.extend(bs.points.iter().cloned());
        simplices.push(Simplex::new(pts)?);
    }
    Ok(simplices)
}

/// Exact Lebesgue volume in lattice coordinates of a full-dimensional polytope.
pub fn lattice_volume(p: &RationalPolytope) -> Result<Q> {
    let mut total = Q::zero();
    for s in triangulate(p)? {
        total += s.volume();
    }
    Ok(total)
}

/// Minkowski sum: hull of pairwise vertex sums.
pub fn minkowski_sum(p: &RationalPolytope, q: &RationalPolytope) -> Result<RationalPolytope> {
    if p.dim_ambient != q.dim_ambient {
        return Err(Error::DimensionMismatch {
            expected: p.dim_ambient,
            got: q.dim_ambient,
        });
    }
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            sums.push(vec_add(a, b));
        }
    }
    let out = convex_hull(&sums)?;
    // Support function additivity on the result's facet normals.
    debug_assert!(out
        .facets
        .iter()
        .all(|f| out.support(&f.normal) == p.support(&f.normal) + q.support(&f.normal)));
    Ok(out)
}

/// Weight polytope: convex hull of the Weyl orbits of the summands' highest
/// weights (with central characters).
pub fn weight_polytope(rs: &RootSystem, rep: &RepresentationSpec) -> Result<RationalPolytope> {
    rep.validate()?;
    let mut points = Vec::new();
    for summand in &rep.summands {
        let hw = rs.dominant_weight_to_lattice(&summand.weight, &summand.central)?;
        for w in rs.weyl_orbit(&to_q_vec(&hw))? {
            points.push(w);
        }
    }
    convex_hull(&points)
}

/// Verifies that every Weyl element permutes the vertex set, returning the
/// induced permutation per element.
pub fn vertex_permutations(rs: &RootSystem, p: &RationalPolytope) -> Result<Vec<Vec<usize>>> {
    if p.dim_ambient != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: p.dim_ambient,
        });
    }
    let index: BTreeMap<&Vec<Q>, usize> = p
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    let mut perms = Vec::with_capacity(rs.weyl_elements().len());
    for (wi, w) in rs.weyl_elements().iter().enumerate() {
        let mut perm = Vec::with_capacity(p.vertices.len());
        for v in &p.vertices {
            let image = w.apply_q(v);
            match index.get(&image) {
                Some(&j) => perm.push(j),
                None => {
                    return Err(Error::NotWeylInvariant(format!(
                        "Weyl element #{} maps vertex {:?} outside the vertex set",
                        wi,
                        v.iter().map(crate::arith::format_rational).collect::<Vec<_>>()
                    )))
                }
            }
        }
        perms.push(perm);
    }
    Ok(perms)
}

/// One Weyl orbit of facets of a Weyl-invariant polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetOrbit {
    /// Smallest facet index in the orbit.
    pub representative: usize,
    /// All facet indices in the orbit, sorted.
    pub members: Vec<usize>,
    /// Order of the setwise stabilizer; members.len() * stabilizer = |W|.
    pub stabilizer_order: u128,
}

/// Partitions the facets of a Weyl-invariant polytope into Weyl orbits.
pub fn facet_orbits(rs: &RootSystem, p: &RationalPolytope) -> Result<Vec<FacetOrbit>> {
    let perms = vertex_permutations(rs, p)?;
    // Identify each facet by its sorted vertex-index set.
    let key_of: Vec<BTreeSet<usize>> = p
        .facets
        .iter()
        .map(|f| f.vertex_indices.iter().copied().collect())
        .collect();
    let facet_by_key: BTreeMap<&BTreeSet<usize>, usize> =
        key_of.iter().enumerate().map(|(i, k)| (k, i)).collect();

    // image[w][f] = index of the facet w maps facet f to.
    let mut image = vec![vec![0usize; p.facets.len()]; perms.len()];
    for (wi, perm) in perms.iter().enumerate() {
        for (fi, key) in key_of.iter().enumerate() {
            let mapped: BTreeSet<usize> = key.iter().map(|&v| perm[v]).collect();
            let Some(&target) = facet_by_key.get(&mapped) else {
                return Err(Error::Internal(
                    "Weyl element maps a facet outside the facet set".into(),
                ));
            };
            image[wi][fi] = target;
        }
    }

    let mut assigned = vec![false; p.facets.len()];
    let mut orbits = Vec::new();
    for start in 0..p.facets.len() {
        if assigned[start] {
            continue;
        }
        let mut members: BTreeSet<usize> = BTreeSet::new();
        for row in &image {
            members.insert(row[start]);
        }
        for &m in &members {
            assigned[m] = true;
        }
        let stabilizer = image.iter().filter(|row| row[start] == start).count() as u128;
        if members.len() as u128 * stabilizer != rs.weyl_order() {
            return Err(Error::Internal(format!(
                "orbit size {} times stabilizer {} differs from |W| = {}",
                members.len(),
                stabilizer,
                rs.weyl_order()
            )));
        }
        orbits.push(FacetOrbit {
            representative: start,
            members: members.into_iter().collect(),
            stabilizer_order: stabilizer,
        });
    }
    Ok(orbits)
}
