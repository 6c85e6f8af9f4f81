//! Exact rational linear algebra and integer lattice utilities.
//!
//! Everything here is dense and unoptimized; dimensions in this crate are
//! single digits, so clarity and exactness win over asymptotics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Q;

/// Dot product of two rational vectors.
pub fn dot(a: &[Q], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Dot product of an integer covector with a rational vector.
pub fn dot_int(a: &[BigInt], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b) {
        acc += Q::from_integer(x.clone()) * y;
    }
    acc
}

/// Matrix-vector product with a rational matrix given by rows.
pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Reduced row echelon form in place; returns pivot column indices.
fn rref(m: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rational matrix.
pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// One solution of `m x = b` if the system is consistent (free variables set
/// to zero), determined by leftmost pivoting, hence deterministic.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = m.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // Inconsistent iff a pivot lands in the augmented column.
    if pivots.iter().any(|&c| c == cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Basis of the kernel of a rational matrix (columns of the matrix index the
/// variables). Deterministic ordering by free column.
pub fn kernel_basis(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -work[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a square rational matrix.
pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut work = m.to_vec();
    let mut acc = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !work[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            work.swap(c, p);
            acc = -acc;
        }
        acc *= work[c][c].clone();
        let inv = work[c][c].recip();
        for i in c + 1..n {
            if work[i][c].is_zero() {
                continue;
            }
            let f = &work[i][c] * &inv;
            for j in c..n {
                let t = &work[c][j] * &f;
                work[i][j] -= t;
            }
        }
    }
    acc
}

/// Inverse of a square rational matrix, if invertible.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Q::one() } else { Q::zero() });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Scales a nonzero rational vector to a primitive integer vector, preserving
/// orientation (positive multiple).
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    ints
}

/// Whether an integer vector has gcd 1.
pub fn is_primitive(v: &[BigInt]) -> bool {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    g.is_one()
}

/// Basis of the sublattice { x in Z^k : n . x = 0 } for a primitive integer
/// covector n, as k-1 integer columns of a unimodular completion.
pub fn integer_kernel_basis(n: &[BigInt]) -> Vec<Vec<BigInt>> {
    let k = n.len();
    assert!(k >= 1);
    // Column-reduce n by unimodular operations tracked in u.
    let mut target = n.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect(); // u[row][col]
    for i in 1..k {
        if target[i].is_zero() {
            continue;
        }
        let a = target[0].clone();
        let b = target[i].clone();
        let eg = a.extended_gcd(&b);
        let (g, s, t) = (eg.gcd, eg.x, eg.y);
        let (p, q) = (&a / &g, &b / &g);
        // New col0 = s*col0 + t*coli; new coli = -q*col0 + p*coli. Det = s*p + t*q = 1.
        for row in u.iter_mut() {
            let c0 = row[0].clone();
            let ci = row[i].clone();
            row[0] = &s * &c0 + &t * &ci;
            row[i] = -&q * &c0 + &p * &ci;
        }
        target[0] = g;
        target[i] = BigInt::zero();
    }
    if target[0].is_negative() {
        for row in u.iter_mut() {
            row[0] = -row[0].clone();
        }
        target[0] = -target[0].clone();
    }
    debug_assert!(target[0].is_one(), "covector must be primitive");
    // Columns 1..k of u span the kernel lattice.
    (1..k)
        .map(|c| u.iter().map(|row| row[c].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q_int, q_ratio};

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q_int(x)).collect()
    }

    #[test]
    fn solve_and_rank() {
        let m = vec![qv(&[1, 2]), qv(&[3, 4])];
        let x = solve(&m, &qv(&[5, 6])).unwrap();
        assert_eq!(x, vec![q_int(-4), q_ratio(9, 2)]);
        assert_eq!(rank(&m), 2);
        let singular = vec![qv(&[1, 2]), qv(&[2, 4])];
        assert_eq!(rank(&singular), 1);
        assert!(solve(&singular, &qv(&[1, 3])).is_none());
        assert!(solve(&singular, &qv(&[1, 2])).is_some());
    }

    #[test]
    fn kernel_and_det() {
        let m = vec![qv(&[1, 2, 3])];
        let ker = kernel_basis(&m);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(dot(&m[0], v).is_zero());
        }
        assert_eq!(det(&[qv(&[2, 1]), qv(&[1, 2])]), q_int(3));
        assert_eq!(det(&[qv(&[1, 2]), qv(&[2, 4])]), q_int(0));
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![q_ratio(2, 3), q_ratio(-4, 3)];
        assert_eq!(
            primitive_integer(&v),
            vec![BigInt::from(1), BigInt::from(-2)]
        );
    }

    #[test]
    fn integer_kernel_is_unimodular_complement() {
        let n: Vec<BigInt> = [3, 5, 7].iter().map(|&x| BigInt::from(x)).collect();
        // 3,5,7 has gcd 1.
        let basis = integer_kernel_basis(&n);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            let s: BigInt = n.iter().zip(b).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
        // The basis spans the full rational kernel.
        let rows: Vec<Vec<Q>> = vec![n.iter().map(|x| Q::from_integer(x.clone())).collect()];
        let qbasis: Vec<Vec<Q>> = basis
            .iter()
            .map(|b| b.iter().map(|x| Q::from_integer(x.clone())).collect())
            .collect();
        assert_eq!(rank(&qbasis), kernel_basis(&rows).len());
    }
}
