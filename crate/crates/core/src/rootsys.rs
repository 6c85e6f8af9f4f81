//! Root-system data for reductive groups: simple/positive roots, Weyl groups,
//! the invariant form, and lattice conventions.
//!
//! A group is specified as a product of simple factors (by Cartan type and
//! rank) and a central torus. All vectors live in a fixed basis of the
//! character lattice of a maximal torus: per semisimple factor either the
//! fundamental-weight basis or the simple-root basis, plus the standard basis
//! on the central directions. Lebesgue measure in these coordinates gives the
//! lattice covolume 1.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::Q;
use crate::error::{Error, Result};
use crate::linalg;

/// Default cap on the Weyl group order; construction refuses larger groups.
pub const DEFAULT_WEYL_CAP: u128 = 1_000_000;

/// Cartan series of a simple factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(&self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<CartanType> {
        match c.to_ascii_uppercase() {
            'A' => Some(CartanType::A),
            'B' => Some(CartanType::B),
            'C' => Some(CartanType::C),
            'D' => Some(CartanType::D),
            'E' => Some(CartanType::E),
            'F' => Some(CartanType::F),
            'G' => Some(CartanType::G),
            _ => None,
        }
    }
}

/// Character-lattice convention for a semisimple factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LatticeBasis {
    /// Fundamental-weight basis: the weight lattice (simply connected cover).
    #[default]
    Weight,
    /// Simple-root basis: the root lattice (adjoint group).
    Root,
}

/// One simple factor of the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSpec {
    pub cartan: CartanType,
    pub rank: usize,
    pub lattice: LatticeBasis,
}

impl FactorSpec {
    pub fn new(cartan: CartanType, rank: usize) -> Self {
        FactorSpec {
            cartan,
            rank,
            lattice: LatticeBasis::Weight,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self.cartan {
            CartanType::A => self.rank >= 1,
            CartanType::B => self.rank >= 2,
            CartanType::C => self.rank >= 2,
            CartanType::D => self.rank >= 3,
            CartanType::E => matches!(self.rank, 6 | 7 | 8),
            CartanType::F => self.rank == 4,
            CartanType::G => self.rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGroup(format!(
                "invalid rank {} for Cartan type {}",
                self.rank,
                self.cartan.letter()
            )))
        }
    }

    fn weyl_order(&self) -> u128 {
        let r = self.rank as u128;
        let fact = |n: u128| (1..=n).product::<u128>();
        match self.cartan {
            CartanType::A => fact(r + 1),
            CartanType::B | CartanType::C => (1u128 << r) * fact(r),
            CartanType::D => (1u128 << (r - 1)) * fact(r),
            CartanType::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                8 => 696_729_600,
                _ => unreachable!(),
            },
            CartanType::F => 1152,
            CartanType::G => 12,
        }
    }
}

/// A reductive group: simple factors plus a central torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub factors: Vec<FactorSpec>,
    pub torus_rank: usize,
}

impl GroupSpec {
    pub fn new(factors: Vec<FactorSpec>, torus_rank: usize) -> Self {
        GroupSpec {
            factors,
            torus_rank,
        }
    }

    /// Pure torus of the given rank.
    pub fn torus(rank: usize) -> Self {
        GroupSpec {
            factors: Vec::new(),
            torus_rank: rank,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for f in &self.factors {
            f.validate()?;
        }
        if self.rank() == 0 {
            return Err(Error::InvalidGroup(
                "group must have positive rank".into(),
            ));
        }
        Ok(())
    }

    /// Total rank: factor ranks plus the central torus.
    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum::<usize>() + self.torus_rank
    }

    /// Weyl group order from the closed-form per-factor orders.
    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(|f| f.weyl_order()).product()
    }
}

/// Unimodular integer matrix acting on lattice coordinates (row-major).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    pub k: usize,
    pub a: Vec<i64>,
}

impl IntMat {
    pub fn identity(k: usize) -> Self {
        let mut a = vec![0; k * k];
        for i in 0..k {
            a[i * k + i] = 1;
        }
        IntMat { k, a }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.k + j]
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        let k = self.k;
        debug_assert_eq!(k, other.k);
        let mut a = vec![0i64; k * k];
        for i in 0..k {
            for l in 0..k {
                let s = self.get(i, l);
                if s == 0 {
                    continue;
                }
                for j in 0..k {
                    a[i * k + j] += s * other.get(l, j);
                }
            }
        }
        IntMat { k, a }
    }

    pub fn apply_q(&self, v: &[Q]) -> Vec<Q> {
        debug_assert_eq!(v.len(), self.k);
        (0..self.k)
            .map(|i| {
                let mut acc = Q::zero();
                for j in 0..self.k {
                    let c = self.get(i, j);
                    if c != 0 {
                        acc += Q::from_integer(BigInt::from(c)) * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn apply_int(&self, v: &[BigInt]) -> Vec<BigInt> {
        debug_assert_eq!(v.len(), self.k);
        (0..self.k)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.k {
                    let c = self.get(i, j);
                    if c != 0 {
                        acc += BigInt::from(c) * &v[j];
                    }
                }
                acc
            })
            .collect()
    }
}

/// Cartan matrix (rows/cols indexed by simple roots) for one simple type.
fn cartan_matrix(cartan: CartanType, r: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |edges: &[(usize, usize)], m: &mut Vec<Vec<i64>>| {
        for &(i, j) in edges {
            m[i][j] = -1;
            m[j][i] = -1;
        }
    };
    match cartan {
        CartanType::A => {
            let edges: Vec<_> = (0..r.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut a);
        }
        CartanType::B => {
            let edges: Vec<_> = (0..r - 1).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut a);
            a[r - 2][r - 1] = -2; // alpha_{r-1} long, alpha_r short
        }
        CartanType::C => {
            let edges: Vec<_> = (0..r - 1).map(|i| (i, i + 1)).collect();
            chain(&edges, &mut a);
            a[r - 1][r - 2] = -2; // alpha_r long
        }
        CartanType::D => {
            let mut edges: Vec<_> = (0..r.saturating_sub(3)).map(|i| (i, i + 1)).collect();
            edges.push((r - 3, r - 2));
            edges.push((r - 3, r - 1));
            chain(&edges, &mut a);
        }
        CartanType::E => {
            // Bourbaki numbering, 0-indexed.
            let mut edges = vec![(0, 2), (2, 3), (3, 4), (1, 3)];
            for i in 4..r - 1 {
                edges.push((i, i + 1));
            }
            chain(&edges, &mut a);
        }
        CartanType::F => {
            chain(&[(0, 1), (2, 3)], &mut a);
            a[1][2] = -2;
            a[2][1] = -1;
        }
        CartanType::G => {
            a[0][1] = -1;
            a[1][0] = -3;
        }
    }
    a
}

/// Symmetrizer d_i = (alpha_i, alpha_i)/2 with short roots normalized to
/// squared length 2; then (alpha_i, alpha_j) = d_j a_{ij}.
fn symmetrizer(cartan: CartanType, r: usize) -> Vec<i64> {
    match cartan {
        CartanType::A | CartanType::D | CartanType::E => vec![1; r],
        CartanType::B => {
            let mut d = vec![2; r];
            d[r - 1] = 1;
            d
        }
        CartanType::C => {
            let mut d = vec![1; r];
            d[r - 1] = 2;
            d
        }
        CartanType::F => vec![2, 2, 1, 1],
        CartanType::G => vec![1, 3],
    }
}

/// All roots of one factor in simple-root coordinates, via reflection closure.
fn factor_roots(cartan_mat: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan_mat.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0i64; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(u) = queue.pop_front() {
        for i in 0..r {
            // s_i(u) subtracts <u, alpha_i_vee> from coordinate i.
            let pairing: i64 = (0..r).map(|j| cartan_mat[j][i] * u[j]).sum();
            let mut v = u.clone();
            v[i] -= pairing;
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().collect()
}

/// Complete root-system data for a [`GroupSpec`].
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: GroupSpec,
    k: usize,
    semisimple_rank: usize,
    num_positive_roots: usize,
    group_dim: usize,
    simple_roots: Vec<Vec<BigInt>>,
    positive_roots: Vec<Vec<BigInt>>,
    simple_coroots: Vec<Vec<BigInt>>,
    fundamental_weights: Vec<Vec<Q>>,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<Q>>,
    rho: Vec<Q>,
    two_rho: Vec<BigInt>,
    simple_reflections: Vec<IntMat>,
    weyl_elements: Vec<IntMat>,
    weyl_order: u128,
    factor_offsets: Vec<usize>,
}

/// Builds root-system data with the default Weyl-order cap.
pub fn build_root_system(spec: &GroupSpec) -> Result<RootSystem> {
    build_root_system_with_cap(spec, DEFAULT_WEYL_CAP)
}

/// Builds root-system data, refusing groups whose Weyl order exceeds `cap`.
pub fn build_root_system_with_cap(spec: &GroupSpec, cap: u128) -> Result<RootSystem> {
    spec.validate()?;
    let order = spec.weyl_order();
    if order > cap {
        return Err(Error::ResourceCap(format!(
            "Weyl group order {} exceeds cap {}",
            order, cap
        )));
    }

    let k = spec.rank();
    let ss_rank: usize = spec.factors.iter().map(|f| f.rank).sum();
    let mut factor_offsets = Vec::with_capacity(spec.factors.len());
    {
        let mut off = 0;
        for f in &spec.factors {
            factor_offsets.push(off);
            off += f.rank;
        }
    }

    let mut simple_roots: Vec<Vec<BigInt>> = Vec::new();
    let mut positive_roots: Vec<Vec<BigInt>> = Vec::new();
    let mut simple_coroots: Vec<Vec<BigInt>> = Vec::new();
    let mut fundamental_weights: Vec<Vec<Q>> = Vec::new();
    let mut cartan = vec![vec![0i64; ss_rank]; ss_rank];
    let mut gram = vec![vec![Q::zero(); k]; k];
    let mut simple_reflections: Vec<IntMat> = Vec::new();

    for (fi, f) in spec.factors.iter().enumerate() {
        let off = factor_offsets[fi];
        let r = f.rank;
        let a = cartan_matrix(f.cartan, r);
        let d = symmetrizer(f.cartan, r);
        for i in 0..r {
            for j in 0..r {
                cartan[off + i][off + j] = a[i][j];
            }
        }

        let a_q: Vec<Vec<Q>> = a
            .iter()
            .map(|row| row.iter().map(|&x| crate::arith::q_int(x)).collect())
            .collect();
        let a_inv = linalg::inverse(&a_q)
            .ok_or_else(|| Error::Internal("Cartan matrix not invertible".into()))?;

        // Local Gram matrix on the simple-root basis.
        let g_root: Vec<Vec<Q>> = (0..r)
            .map(|i| (0..r).map(|j| crate::arith::q_int(d[j] * a[i][j])).collect())
            .collect();

        // Local Gram on the chosen lattice basis.
        let g_local: Vec<Vec<Q>> = match f.lattice {
            LatticeBasis::Root => g_root.clone(),
            LatticeBasis::Weight => {
                // A^{-1} G_root A^{-T}
                let mut tmp = vec![vec![Q::zero(); r]; r];
                for i in 0..r {
                    for j in 0..r {
                        let mut acc = Q::zero();
                        for l in 0..r {
                            acc += &a_inv[i][l] * &g_root[l][j];
                        }
                        tmp[i][j] = acc;
                    }
                }
                (0..r)
                    .map(|i| {
                        (0..r)
                            .map(|j| {
                                let mut acc = Q::zero();
                                for l in 0..r {
                                    acc += &tmp[i][l] * &a_inv[j][l];
                                }
                                acc
                            })
                            .collect()
                    })
                    .collect()
            }
        };
        for i in 0..r {
            for j in 0..r {
                gram[off + i][off + j] = g_local[i][j].clone();
            }
        }

        // Roots in local root coordinates, then converted to lattice coords.
        let all_roots = factor_roots(&a);
        let to_lattice = |u: &[i64]| -> Vec<BigInt> {
            let local: Vec<i64> = match f.lattice {
                LatticeBasis::Root => u.to_vec(),
                // c = A^T u
                LatticeBasis::Weight => (0..r)
                    .map(|i| (0..r).map(|j| a[j][i] * u[j]).sum())
                    .collect(),
            };
            let mut v = vec![BigInt::zero(); k];
            for (i, x) in local.iter().enumerate() {
                v[off + i] = BigInt::from(*x);
            }
            v
        };
        for u in all_roots.iter().filter(|u| u.iter().all(|&x| x >= 0)) {
            positive_roots.push(to_lattice(u));
        }
        for i in 0..r {
            let mut e = vec![0i64; r];
            e[i] = 1;
            simple_roots.push(to_lattice(&e));
        }

        // Simple coroot functionals and reflections in lattice coordinates.
        for i in 0..r {
            let mut cov = vec![BigInt::zero(); k];
            match f.lattice {
                LatticeBasis::Weight => {
                    cov[off + i] = BigInt::one();
                }
                LatticeBasis::Root => {
                    for j in 0..r {
                        cov[off + j] = BigInt::from(a[j][i]);
                    }
                }
            }
            simple_coroots.push(cov);

            let mut m = IntMat::identity(k);
            match f.lattice {
                LatticeBasis::Weight => {
                    // S_i = I - alpha_i e_i^T  with alpha_i = row i of A.
                    for j in 0..r {
                        m.a[(off + j) * k + (off + i)] -= a[i][j];
                    }
                }
                LatticeBasis::Root => {
                    // S_i = I - e_i f_i^T  with f_i = column i of A.
                    for j in 0..r {
                        m.a[(off + i) * k + (off + j)] -= a[j][i];
                    }
                }
            }
            simple_reflections.push(m);
        }

        // Fundamental weights in lattice coordinates.
        for i in 0..r {
            let local: Vec<Q> = match f.lattice {
                LatticeBasis::Weight => (0..r)
                    .map(|j| {
                        if i == j {
                            Q::one()
                        } else {
                            Q::zero()
                        }
                    })
                    .collect(),
                // root coords of omega_i = row i of A^{-1}
                LatticeBasis::Root => a_inv[i].clone(),
            };
            let mut v = vec![Q::zero(); k];
            for (j, x) in local.into_iter().enumerate() {
                v[off + j] = x;
            }
            fundamental_weights.push(v);
        }
    }

    let num_positive_roots = positive_roots.len();
    let group_dim = k + 2 * num_positive_roots;

    let mut two_rho = vec![BigInt::zero(); k];
    for root in &positive_roots {
        for (i, x) in root.iter().enumerate() {
            two_rho[i] += x;
        }
    }
    let rho: Vec<Q> = two_rho
        .iter()
        .map(|x| Q::new(x.clone(), BigInt::from(2)))
        .collect();

    // Breadth-first closure of the simple reflections.
    let mut weyl_elements = Vec::with_capacity(order as usize);
    let mut seen: HashSet<IntMat> = HashSet::with_capacity(order as usize * 2);
    let id = IntMat::identity(k);
    seen.insert(id.clone());
    let mut queue = VecDeque::new();
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for s in &simple_reflections {
            let next = s.mul(&w);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        weyl_elements.push(w);
    }
    if weyl_elements.len() as u128 != order {
        return Err(Error::Internal(format!(
            "Weyl enumeration produced {} elements, expected {}",
            weyl_elements.len(),
            order
        )));
    }

    Ok(RootSystem {
        spec: spec.clone(),
        k,
        semisimple_rank: ss_rank,
        num_positive_roots,
        group_dim,
        simple_roots,
        positive_roots,
        simple_coroots,
        fundamental_weights,
        cartan,
        gram,
        rho,
        two_rho,
        simple_reflections,
        weyl_elements,
        weyl_order: order,
        factor_offsets,
    })
}

impl RootSystem {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Total rank k (dimension of a maximal torus).
    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn torus_rank(&self) -> usize {
        self.spec.torus_rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.semisimple_rank
    }

    /// Group dimension n = k + 2 |R+|.
    pub fn group_dim(&self) -> usize {
        self.group_dim
    }

    pub fn num_positive_roots(&self) -> usize {
        self.num_positive_roots
    }

    pub fn simple_roots(&self) -> &[Vec<BigInt>] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vec<BigInt>] {
        &self.positive_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<BigInt>] {
        &self.simple_coroots
    }

    pub fn fundamental_weights(&self) -> &[Vec<Q>] {
        &self.fundamental_weights
    }

    /// Block-diagonal Cartan matrix of the semisimple part.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Weyl-invariant form on lattice coordinates (zero on central directions).
    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn rho(&self) -> &[Q] {
        &self.rho
    }

    pub fn two_rho(&self) -> &[BigInt] {
        &self.two_rho
    }

    pub fn weyl_elements(&self) -> &[IntMat] {
        &self.weyl_elements
    }

    pub fn simple_reflections(&self) -> &[IntMat] {
        &self.simple_reflections
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    /// Invariant pairing (x, y).
    pub fn pairing(&self, x: &[Q], y: &[Q]) -> Q {
        let gy = linalg::mat_vec(&self.gram, y);
        linalg::dot(x, &gy)
    }

    /// Pairing <x, alpha_i_vee> against the i-th simple coroot.
    pub fn coroot_pairing(&self, x: &[Q], i: usize) -> Q {
        linalg::dot_int(&self.simple_coroots[i], x)
    }

    fn check_dim(&self, v: &[Q]) -> Result<()> {
        if v.len() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Whether a weight lies in the closed dominant chamber.
    pub fn is_dominant(&self, weight: &[Q]) -> Result<bool> {
        self.check_dim(weight)?;
        Ok((0..self.simple_coroots.len())
            .all(|i| !self.coroot_pairing(weight, i).is_negative()))
    }

    /// Full Weyl orbit of a weight, sorted for determinism.
    pub fn weyl_orbit(&self, weight: &[Q]) -> Result<Vec<Vec<Q>>> {
        self.check_dim(weight)?;
        let mut seen: BTreeSet<Vec<Q>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(weight.to_vec());
        queue.push_back(weight.to_vec());
        while let Some(v) = queue.pop_front() {
            for s in &self.simple_reflections {
                let next = s.apply_q(&v);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Converts a dominant weight given in per-factor fundamental coordinates
    /// plus a central character into lattice coordinates. Errors if the weight
    /// does not lie in the chosen character lattice.
    pub fn dominant_weight_to_lattice(
        &self,
        fundamental: &[Vec<u32>],
        central: &[BigInt],
    ) -> Result<Vec<BigInt>> {
        if fundamental.len() != self.spec.factors.len() {
            return Err(Error::InvalidArgument(format!(
                "expected fundamental coordinates for {} factor(s), got {}",
                self.spec.factors.len(),
                fundamental.len()
            )));
        }
        if central.len() != self.spec.torus_rank {
            return Err(Error::InvalidArgument(format!(
                "expected central character of length {}, got {}",
                self.spec.torus_rank,
                central.len()
            )));
        }
        let mut v = vec![BigInt::zero(); self.k];
        for (fi, f) in self.spec.factors.iter().enumerate() {
            let coords = &fundamental[fi];
            if coords.len() != f.rank {
                return Err(Error::InvalidArgument(format!(
                    "factor {} has rank {}, got {} fundamental coordinates",
                    fi,
                    f.rank,
                    coords.len()
                )));
            }
            let off = self.factor_offsets[fi];
            match f.lattice {
                LatticeBasis::Weight => {
                    for (i, &c) in coords.iter().enumerate() {
                        v[off + i] = BigInt::from(c);
                    }
                }
                LatticeBasis::Root => {
                    // lambda = sum c_i omega_i; root coordinates must be integral.
                    let mut local = vec![Q::zero(); f.rank];
                    for (i, &c) in coords.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let cq = crate::arith::q_int(c as i64);
                        for j in 0..f.rank {
                            local[j] += &cq * &self.fundamental_weights[off + i][off + j];
                        }
                    }
                    for (j, x) in local.into_iter().enumerate() {
                        if !x.is_integer() {
                            return Err(Error::WeightNotInLattice(format!(
                                "weight {:?} of factor {} is not in the root lattice",
                                coords, fi
                            )));
                        }
                        v[off + j] = x.numer().clone();
                    }
                }
            }
        }
        for (i, c) in central.iter().enumerate() {
            v[self.k - self.spec.torus_rank + i] = c.clone();
        }
        Ok(v)
    }
}

/// Lattice vector as rationals.
pub fn to_q_vec(v: &[BigInt]) -> Vec<Q> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}
