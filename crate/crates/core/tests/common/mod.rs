#![allow(dead_code)]

use d5slice::algebra::{int, ratio, Scalar, Zero};
use d5slice::matrix::Mat4;
use d5slice::pencil::SymPencil;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut StdRng) -> Scalar {
    ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

pub fn nonzero_rational(rng: &mut StdRng) -> Scalar {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_matrix(rng: &mut StdRng) -> Mat4<Scalar> {
    Mat4::from_fn(|_, _| small_rational(rng))
}

pub fn random_symmetric(rng: &mut StdRng) -> Mat4<Scalar> {
    let m = random_matrix(rng);
    &m + &m.transpose()
}

pub fn random_invertible(rng: &mut StdRng) -> Mat4<Scalar> {
    loop {
        let m = random_matrix(rng);
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn random_pencil(rng: &mut StdRng) -> SymPencil<Scalar> {
    SymPencil::new(random_symmetric(rng), random_symmetric(rng)).unwrap()
}

/// `(ᵗP P, ᵗP diag(λ) P)` with four distinct eigenvalues `λ`, hence a
/// squarefree pencil.
pub fn random_squarefree_pencil(rng: &mut StdRng) -> SymPencil<Scalar> {
    let mut l: Vec<i64> = Vec::new();
    while l.len() < 4 {
        let x = rng.gen_range(-30..=30);
        if !l.contains(&x) {
            l.push(x);
        }
    }
    let p = random_invertible(rng);
    let x = Mat4::identity().congruence(&p);
    let y = Mat4::diag([l[0], l[1], l[2], l[3]].map(int)).congruence(&p);
    SymPencil::new(x, y).unwrap()
}

/// `Σ cᵢ uᵢ ᵗuᵢ` over at most two vectors: a symmetric matrix of rank ≤ 2.
pub fn random_low_rank_symmetric(rng: &mut StdRng) -> Mat4<Scalar> {
    let mut m = Mat4::zero();
    for _ in 0..rng.gen_range(0..=2) {
        let u: [Scalar; 4] = std::array::from_fn(|_| small_rational(rng));
        let c = small_rational(rng);
        m = &m + &Mat4::from_fn(|i, j| &c * &u[i] * &u[j]);
    }
    m
}
