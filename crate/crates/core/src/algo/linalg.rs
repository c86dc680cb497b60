//! Dense square matrices and determinants, generic over the scalar.
//!
//! Two routes are provided:
//! * fraction-free Bareiss elimination over any [`ExactInteger`] (machine
//!   integers with overflow checks, or `BigInt`), and
//! * Gaussian elimination over any [`Field`] (the prime field [`ModP`] used by
//!   the randomized matching test, or exact rationals).

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use crate::error::{Error, Result};
use crate::graph::DiGraph;

/// Integer scalar usable by Bareiss elimination.
pub trait ExactInteger:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + CheckedMul
    + CheckedSub
    + CheckedDiv
{
}

impl ExactInteger for i32 {}
impl ExactInteger for i64 {}
impl ExactInteger for i128 {}
impl ExactInteger for BigInt {}

/// Scalar with exact division by nonzero elements.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn inverse(&self) -> Option<Self>;
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                left: bad.len(),
                right: n,
            });
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.data.swap(a * self.n + j, b * self.n + j);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.data.chunks(self.n.max(1)).collect();
        write!(f, "Matrix{rows:?}")
    }
}

/// 0/1 adjacency matrix: entry `(u, v)` is one iff arc `(u, v)` is present.
pub fn adjacency_matrix<T: Clone + Zero + One>(d: &DiGraph) -> Matrix<T> {
    let mut m = Matrix::from_fn(d.n_vertices(), |_, _| T::zero());
    for (u, v) in d.arcs() {
        m[(u, v)] = T::one();
    }
    m
}

/// Fraction-free (Bareiss) determinant. Every intermediate value is a minor of
/// the input, and every division is exact.
pub fn bareiss_determinant<T: ExactInteger>(m: &Matrix<T>) -> Result<T> {
    let n = m.dim();
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[(i, j)].checked_mul(&a[(k, k)]).ok_or(Error::Overflow)?;
                let rhs = a[(i, k)].checked_mul(&a[(k, j)]).ok_or(Error::Overflow)?;
                let num = lhs.checked_sub(&rhs).ok_or(Error::Overflow)?;
                a[(i, j)] = num.checked_div(&prev).ok_or(Error::Overflow)?;
            }
            a[(i, k)] = T::zero();
        }
        prev = a[(k, k)].clone();
    }
    let det = a[(n - 1, n - 1)].clone();
    Ok(if negate { -det } else { det })
}

/// Gaussian-elimination determinant over a field.
pub fn field_determinant<F: Field>(m: &Matrix<F>) -> F {
    let n = m.dim();
    let mut a = m.clone();
    let mut det = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
            return F::zero();
        };
        if p != k {
            a.swap_rows(k, p);
            det = -det;
        }
        let pivot = a[(k, k)].clone();
        det = det * pivot.clone();
        let inv = pivot.inverse().expect("nonzero pivot");
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let factor = a[(i, k)].clone() * inv.clone();
            for j in k..n {
                let delta = factor.clone() * a[(k, j)].clone();
                a[(i, j)] = a[(i, j)].clone() - delta;
            }
        }
    }
    det
}

pub const DET_DIM_LIMIT: usize = 64;

/// Exact determinant of a digraph's adjacency matrix in the scalar `T`.
pub fn det_integer_in<T: ExactInteger>(d: &DiGraph) -> Result<T> {
    if d.n_vertices() > DET_DIM_LIMIT {
        return Err(Error::TooLarge {
            n: d.n_vertices(),
            limit: DET_DIM_LIMIT,
        });
    }
    bareiss_determinant(&adjacency_matrix::<T>(d))
}

/// Exact determinant in the crate's default wide integer.
pub fn det_integer(d: &DiGraph) -> Result<crate::DetInt> {
    det_integer_in::<crate::DetInt>(d)
}

/// Element of the prime field of order `2^31 - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ModP(u64);

impl ModP {
    pub const MODULUS: u64 = (1 << 31) - 1;

    pub fn new(value: u64) -> Self {
        ModP(value % Self::MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = ModP(1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Debug for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for ModP {
    type Output = ModP;

    fn add(self, rhs: ModP) -> ModP {
        ModP((self.0 + rhs.0) % Self::MODULUS)
    }
}

impl Sub for ModP {
    type Output = ModP;

    fn sub(self, rhs: ModP) -> ModP {
        ModP((self.0 + Self::MODULUS - rhs.0) % Self::MODULUS)
    }
}

impl Mul for ModP {
    type Output = ModP;

    fn mul(self, rhs: ModP) -> ModP {
        ModP(self.0 * rhs.0 % Self::MODULUS)
    }
}

impl Neg for ModP {
    type Output = ModP;

    fn neg(self) -> ModP {
        ModP((Self::MODULUS - self.0) % Self::MODULUS)
    }
}

impl Zero for ModP {
    fn zero() -> Self {
        ModP(0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for ModP {
    fn one() -> Self {
        ModP(1)
    }
}

impl Field for ModP {
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(Self::MODULUS - 2))
        }
    }
}
