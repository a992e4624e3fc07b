//! Fixed-size square matrices over any of the crate's coefficient rings.
//!
//! Only 2×2 and 4×4 are used. Determinants and adjugates are computed by
//! division-free cofactor expansion so they work over polynomial rings;
//! inverses and ranks need a field.

use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{Field, Ring, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<R, const N: usize> {
    rows: [[R; N]; N],
}

pub type Mat2<R> = Mat<R, 2>;
pub type Mat4<R> = Mat<R, 4>;

impl<R: Ring, const N: usize> Mat<R, N> {
    pub fn from_rows(rows: [[R; N]; N]) -> Self {
        Mat { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> R) -> Self {
        Mat {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| R::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diag(d: [R; N]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { R::zero() })
    }

    pub fn from_ints(rows: [[i64; N]; N]) -> Self {
        Self::from_fn(|i, j| R::from_int(rows[i][j]))
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.rows[i][j] = value;
    }

    pub fn rows(&self) -> &[[R; N]; N] {
        &self.rows
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Mat<S, N> {
        Mat::from_fn(|i, j| f(&self.rows[i][j]))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].clone())
    }

    pub fn scale(&self, k: &R) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn trace(&self) -> R {
        (0..N).fold(R::zero(), |acc, i| acc + self.rows[i][i].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..N).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub fn is_trace_zero(&self) -> bool {
        self.trace().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_zero())
    }

    pub fn det(&self) -> R {
        let rows: Vec<Vec<R>> = self.rows.iter().map(|r| r.to_vec()).collect();
        cofactor_det(&rows)
    }

    /// Transposed cofactor matrix, so that `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> Self {
        if N == 1 {
            return Self::identity();
        }
        Self::from_fn(|i, j| {
            let minor: Vec<Vec<R>> = (0..N)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..N)
                        .filter(|&c| c != i)
                        .map(|c| self.rows[r][c].clone())
                        .collect()
                })
                .collect();
            let m = cofactor_det(&minor);
            if (i + j) % 2 == 0 {
                m
            } else {
                -m
            }
        })
    }

    pub fn mul_vec(&self, v: &[R; N]) -> [R; N] {
        std::array::from_fn(|i| {
            (0..N).fold(R::zero(), |acc, j| {
                acc + self.rows[i][j].clone() * v[j].clone()
            })
        })
    }

    /// `ᵗv A w`.
    pub fn bilinear(&self, v: &[R; N], w: &[R; N]) -> R {
        let aw = self.mul_vec(w);
        (0..N).fold(R::zero(), |acc, i| acc + v[i].clone() * aw[i].clone())
    }

    pub fn quadratic_form(&self, v: &[R; N]) -> R {
        self.bilinear(v, v)
    }

    /// `ᵗP A P`.
    pub fn congruence(&self, p: &Self) -> Self {
        &(&p.transpose() * self) * p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| &acc * self)
    }
}

impl<F: Field, const N: usize> Mat<F, N> {
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        let inv = d.try_inv().ok_or(Error::SingularMatrix)?;
        Ok(self.adjugate().scale(&inv))
    }

    pub fn rank(&self) -> usize {
        rank_dense(self.rows.iter().map(|r| r.to_vec()).collect())
    }
}

impl<const N: usize> Mat<Scalar, N> {
    pub fn from_fractions(rows: [[(i64, i64); N]; N]) -> Self {
        Self::from_fn(|i, j| crate::algebra::ratio(rows[i][j].0, rows[i][j].1))
    }
}

fn cofactor_det<R: Ring>(m: &[Vec<R>]) -> R {
    match m.len() {
        0 => R::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        n => {
            let mut acc = R::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].clone() * cofactor_det(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Fraction-free (Bareiss) determinant of a dense square matrix.
pub fn bareiss_det<F: Field>(mut a: Vec<Vec<F>>) -> F {
    let n = a.len();
    if n == 0 {
        return F::one();
    }
    let mut negate = false;
    let mut prev = F::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return F::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank by Gaussian elimination over a field.
pub fn rank_dense<F: Field>(mut a: Vec<Vec<F>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].try_inv().expect("pivot is nonzero");
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() * inv.clone();
            for c in col..cols {
                let sub = factor.clone() * a[rank][c].clone();
                a[r][c] = a[r][c].clone() - sub;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Coefficients of `det(tI − A) = t⁴ − c1 t³ + c2 t² − c3 t + c4`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly<R> {
    pub c1: R,
    pub c2: R,
    pub c3: R,
    pub c4: R,
}

impl<R: Ring> CharPoly<R> {
    pub fn new(c1: R, c2: R, c3: R, c4: R) -> Self {
        CharPoly { c1, c2, c3, c4 }
    }

    pub fn as_tuple(&self) -> (R, R, R, R) {
        (
            self.c1.clone(),
            self.c2.clone(),
            self.c3.clone(),
            self.c4.clone(),
        )
    }

    /// Value of the characteristic polynomial at `t`.
    pub fn eval(&self, t: &R) -> R {
        let t2 = t.clone() * t.clone();
        let t3 = t2.clone() * t.clone();
        let t4 = t3.clone() * t.clone();
        t4 - self.c1.clone() * t3 + self.c2.clone() * t2 - self.c3.clone() * t.clone()
            + self.c4.clone()
    }
}

/// Characteristic polynomial from power traces via Newton's identities.
pub fn char_poly4<R: Ring>(a: &Mat4<R>) -> CharPoly<R> {
    let a2 = a * a;
    let p1 = a.trace();
    let p2 = a2.trace();
    let p3 = (&a2 * a).trace();
    let p4 = (&a2 * &a2).trace();
    let div = |x: R, k: i64| x.scale(&crate::algebra::ratio(1, k));
    let c1 = p1.clone();
    let c2 = div(c1.clone() * p1.clone() - p2.clone(), 2);
    let c3 = div(
        c2.clone() * p1.clone() - c1.clone() * p2.clone() + p3.clone(),
        3,
    );
    let c4 = div(c3.clone() * p1 - c2.clone() * p2 + c1.clone() * p3 - p4, 4);
    CharPoly { c1, c2, c3, c4 }
}

impl<R: Ring, const N: usize> Add for &Mat<R, N> {
    type Output = Mat<R, N>;
    fn add(self, rhs: Self) -> Mat<R, N> {
        Mat::from_fn(|i, j| self.rows[i][j].clone() + rhs.rows[i][j].clone())
    }
}

impl<R: Ring, const N: usize> Sub for &Mat<R, N> {
    type Output = Mat<R, N>;
    fn sub(self, rhs: Self) -> Mat<R, N> {
        Mat::from_fn(|i, j| self.rows[i][j].clone() - rhs.rows[i][j].clone())
    }
}

impl<R: Ring, const N: usize> Mul for &Mat<R, N> {
    type Output = Mat<R, N>;
    fn mul(self, rhs: Self) -> Mat<R, N> {
        Mat::from_fn(|i, j| {
            (0..N).fold(R::zero(), |acc, k| {
                let (x, y) = (&self.rows[i][k], &rhs.rows[k][j]);
                if x.is_zero() || y.is_zero() {
                    acc
                } else {
                    acc + x.clone() * y.clone()
                }
            })
        })
    }
}

impl<R: Ring, const N: usize> Neg for &Mat<R, N> {
    type Output = Mat<R, N>;
    fn neg(self) -> Mat<R, N> {
        self.map(|x| -x.clone())
    }
}

macro_rules! forward_mat_ops {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<R: Ring, const N: usize> $tr for Mat<R, N> {
            type Output = Mat<R, N>;
            fn $f(self, rhs: Self) -> Mat<R, N> { (&self).$f(&rhs) }
        }
    )*};
}
forward_mat_ops!(Add::add, Sub::sub, Mul::mul);
