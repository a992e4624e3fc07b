//! Pencils of quadrics `sX + tY` in four variables.
//!
//! Coefficients of the binary quartic `det(sX + tY)` come from trace
//! identities, and the discriminant of that form decides whether the
//! intersection of the two quadrics is a D̃₅ singularity. Everything here is
//! exact; eigenvalues never enter.

use serde::{Deserialize, Serialize};

use crate::algebra::{int, Field, Ring, Scalar, Zero};
use crate::error::{Error, Result};
use crate::matrix::{char_poly4, CharPoly, Mat4};

#[derive(Clone, Debug, PartialEq)]
pub struct SymPencil<R> {
    x: Mat4<R>,
    y: Mat4<R>,
}

impl<R: Ring> SymPencil<R> {
    pub fn new(x: Mat4<R>, y: Mat4<R>) -> Result<Self> {
        if !x.is_symmetric() || !y.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(SymPencil { x, y })
    }

    pub fn x(&self) -> &Mat4<R> {
        &self.x
    }

    pub fn y(&self) -> &Mat4<R> {
        &self.y
    }

    /// The member `aX + bY`.
    pub fn member(&self, a: &R, b: &R) -> Mat4<R> {
        &self.x.scale(a) + &self.y.scale(b)
    }

    /// The pencil `(aX + bY, cX + dY)`.
    pub fn transform(&self, a: &R, b: &R, c: &R, d: &R) -> SymPencil<R> {
        SymPencil {
            x: self.member(a, b),
            y: self.member(c, d),
        }
    }

    pub fn swapped(&self) -> SymPencil<R> {
        SymPencil {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    pub fn coeffs(&self) -> PencilCoeffs<R> {
        pencil_coeffs(self)
    }

    pub fn discriminant(&self) -> R {
        pencil_discriminant(self)
    }
}

/// `det(sX + tY) = c40 s⁴ + c31 s³t + c22 s²t² + c13 st³ + c04 t⁴`.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilCoeffs<R> {
    pub c40: R,
    pub c31: R,
    pub c22: R,
    pub c13: R,
    pub c04: R,
}

impl<R: Ring> PencilCoeffs<R> {
    pub fn as_array(&self) -> [R; 5] {
        [
            self.c40.clone(),
            self.c31.clone(),
            self.c22.clone(),
            self.c13.clone(),
            self.c04.clone(),
        ]
    }

    pub fn all_zero(&self) -> bool {
        self.as_array().iter().all(|c| c.is_zero())
    }
}

fn tr<R: Ring>(m: &Mat4<R>) -> R {
    m.trace()
}

/// Second elementary symmetric function of the eigenvalues:
/// `(tr(M)² − tr(M²)) / 2`.
fn c2_of<R: Ring>(m: &Mat4<R>) -> R {
    let t = m.trace();
    (t.clone() * t - (m * m).trace()).scale(&crate::algebra::ratio(1, 2))
}

/// The five coefficients of `det(sX + tY)` from the trace expressions.
pub fn pencil_coeffs<R: Ring>(pencil: &SymPencil<R>) -> PencilCoeffs<R> {
    let (x, y) = (&pencil.x, &pencil.y);
    let cx = char_poly4(x);
    let cy = char_poly4(y);
    let xy = x * y;
    let x2 = x * x;
    let y2 = y * y;
    let (tx, ty, txy) = (tr(x), tr(y), tr(&xy));
    let tx2y = tr(&(&x2 * y));
    let txy2 = tr(&(x * &y2));

    let c31 = cx.c3.clone() * ty.clone() - cx.c2.clone() * txy.clone() + tx2y.clone() * tx.clone()
        - tr(&(&(&x2 * x) * y));
    let c22 = cx.c2.clone() * cy.c2.clone() + c2_of(&xy) - tr(&(&x2 * &y2))
        + tx2y * ty.clone()
        + txy2.clone() * tx.clone()
        - txy.clone() * tx.clone() * ty.clone();
    let c13 = cy.c3.clone() * tx - cy.c2.clone() * txy + txy2 * ty - tr(&(x * &(&y2 * y)));
    PencilCoeffs {
        c40: cx.c4,
        c31,
        c22,
        c13,
        c04: cy.c4,
    }
}

/// Discriminant of the monic quartic `t⁴ − a t³ + b t² − c t + d`, by the
/// explicit sixteen-term formula.
pub fn quartic_discriminant<R: Ring>(a: &R, b: &R, c: &R, d: &R) -> R {
    let n = |k: i64| R::from_int(k);
    let (a2, a3, a4) = (a.pow(2), a.pow(3), a.pow(4));
    let (b2, b3, b4) = (b.pow(2), b.pow(3), b.pow(4));
    let (c2, c3, c4) = (c.pow(2), c.pow(3), c.pow(4));
    let (d2, d3) = (d.pow(2), d.pow(3));
    let (a, b, c, d) = (a.clone(), b.clone(), c.clone(), d.clone());

    n(-27) * a4.clone() * d2.clone() + n(18) * a3.clone() * b.clone() * c.clone() * d.clone()
        - n(4) * a3 * c3.clone()
        - n(4) * a2.clone() * b3.clone() * d.clone()
        + a2.clone() * b2.clone() * c2.clone()
        + n(144) * a2.clone() * b.clone() * d2.clone()
        - n(6) * a2 * c2.clone() * d.clone()
        - n(80) * a.clone() * b2.clone() * c.clone() * d.clone()
        + n(18) * a.clone() * b.clone() * c3.clone()
        + n(16) * b4 * d.clone()
        - n(4) * b3 * c2.clone()
        - n(192) * a * c.clone() * d2.clone()
        - n(128) * b2 * d2
        + n(144) * b * c2 * d.clone()
        - n(27) * c4
        + n(256) * d3
}

pub fn quartic_discriminant_of<R: Ring>(cp: &CharPoly<R>) -> R {
    quartic_discriminant(&cp.c1, &cp.c2, &cp.c3, &cp.c4)
}

/// Discriminant `D(X, Y)` of the binary quartic `det(tX + Y)`, by the
/// explicit formula in `det X`, `det Y` and the mixed coefficients.
pub fn pencil_discriminant<R: Ring>(pencil: &SymPencil<R>) -> R {
    let PencilCoeffs {
        c40: dx,
        c31,
        c22,
        c13,
        c04: dy,
    } = pencil_coeffs(pencil);
    let n = |k: i64| R::from_int(k);
    let p = |x: &R, e: u32| x.pow(e);

    n(256) * p(&dx, 3) * p(&dy, 3)
        - n(27) * p(&dx, 2) * p(&c13, 4)
        - n(27) * p(&dy, 2) * p(&c31, 4)
        - n(4) * p(&c31, 3) * p(&c13, 3)
        - n(128) * p(&dx, 2) * p(&dy, 2) * p(&c22, 2)
        + n(16) * dx.clone() * dy.clone() * p(&c22, 4)
        - n(80) * dx.clone() * dy.clone() * c31.clone() * p(&c22, 2) * c13.clone()
        - n(4) * dx.clone() * p(&c22, 3) * p(&c13, 2)
        - n(4) * dy.clone() * p(&c31, 2) * p(&c22, 3)
        + n(18) * dy.clone() * p(&c31, 3) * c22.clone() * c13.clone()
        + n(18) * dx.clone() * c31.clone() * c22.clone() * p(&c13, 3)
        + n(144) * dx.clone() * p(&dy, 2) * p(&c31, 2) * c22.clone()
        + n(144) * p(&dx, 2) * dy.clone() * c22.clone() * p(&c13, 2)
        + p(&c31, 2) * p(&c22, 2) * p(&c13, 2)
        - n(6) * dx.clone() * dy.clone() * p(&c31, 2) * p(&c13, 2)
        - n(192) * p(&dx, 2) * p(&dy, 2) * c31 * c13
}

/// j-invariant of the exceptional curve of `S_(I₄, A)` where `A` has
/// characteristic polynomial `t⁴ − a t³ + b t² − c t + d`.
pub fn j_from_charpoly<F: Field>(a: &F, b: &F, c: &F, d: &F) -> Result<F> {
    let disc = quartic_discriminant(a, b, c, d);
    let inv = disc.try_inv().ok_or(Error::MultipleRoot)?;
    let n = |k: i64| F::from_int(k);
    let num = n(1728) * d.pow(3) - n(1296) * a.clone() * c.clone() * d.pow(2)
        + n(432) * b.pow(2) * d.pow(2)
        + n(324) * a.pow(2) * c.pow(2) * d.clone()
        - n(216) * a.clone() * b.pow(2) * c.clone() * d.clone()
        + n(36) * b.pow(4) * d.clone()
        - n(27) * a.pow(3) * c.pow(3)
        + n(27) * a.pow(2) * b.pow(2) * c.pow(2)
        - n(9) * a.clone() * b.pow(4) * c.clone()
        + b.pow(6);
    Ok(n(256) * num * inv)
}

pub fn j_of_charpoly<F: Field>(cp: &CharPoly<F>) -> Result<F> {
    j_from_charpoly(&cp.c1, &cp.c2, &cp.c3, &cp.c4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    EllipticD5,
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegenerateReason {
    IdenticallySingularPencil,
    LowRank,
    MultipleRoot,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub verdict: Verdict,
    pub reason: Option<DegenerateReason>,
    pub j: Option<Scalar>,
}

impl Classification {
    pub fn is_elliptic(&self) -> bool {
        self.verdict == Verdict::EllipticD5
    }
}

/// Members `aX + bY` tried, in order, when looking for an invertible one.
/// A nonzero binary quartic has at most four projective roots, so the first
/// five entries already guarantee a hit.
pub const PROBES: [(i64, i64); 8] = [
    (1, 0),
    (0, 1),
    (1, 1),
    (1, -1),
    (1, 2),
    (2, 1),
    (1, -2),
    (2, -1),
];

/// A basis change `(a b; c d)` of the pencil with `aX + bY` invertible.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilFrame {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

impl PencilFrame {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        PencilFrame { a, b, c, d }
    }

    pub fn det(&self) -> Scalar {
        &self.a * &self.d - &self.b * &self.c
    }
}

/// First probe with `aX + bY` invertible, completed by the first probe
/// independent of it.
pub fn invertible_frame(pencil: &SymPencil<Scalar>) -> Option<PencilFrame> {
    let (a, b) = PROBES
        .iter()
        .find(|(a, b)| !pencil.member(&int(*a), &int(*b)).det().is_zero())?;
    let (c, d) = PROBES.iter().find(|(c, d)| a * d - b * c != 0)?;
    Some(PencilFrame::new(int(*a), int(*b), int(*c), int(*d)))
}

/// `(aX + bY)⁻¹ (cX + dY)` for the given frame.
pub fn reduced_matrix(pencil: &SymPencil<Scalar>, frame: &PencilFrame) -> Result<Mat4<Scalar>> {
    let m = pencil.member(&frame.a, &frame.b).inverse()?;
    Ok(&m * &pencil.member(&frame.c, &frame.d))
}

/// j computed through a particular frame; the value does not depend on the
/// frame as long as `aX + bY` is invertible and `ad − bc ≠ 0`.
pub fn j_in_frame(pencil: &SymPencil<Scalar>, frame: &PencilFrame) -> Result<Scalar> {
    if frame.det().is_zero() {
        return Err(Error::InvalidArgument(
            "frame (a b; c d) is not invertible".into(),
        ));
    }
    let a = reduced_matrix(pencil, frame)?;
    j_of_charpoly(&char_poly4(&a))
}

pub fn classify(pencil: &SymPencil<Scalar>) -> Classification {
    if !pencil.discriminant().is_zero() {
        let j = invertible_frame(pencil).and_then(|f| j_in_frame(pencil, &f).ok());
        return Classification {
            verdict: Verdict::EllipticD5,
            reason: None,
            j,
        };
    }
    // Low rank everywhere implies identically singular, so it is checked first
    // as the more specific reason.
    let low_rank = PROBES
        .iter()
        .all(|(a, b)| pencil.member(&int(*a), &int(*b)).rank() <= 2);
    let reason = if low_rank {
        DegenerateReason::LowRank
    } else if pencil.coeffs().all_zero() {
        DegenerateReason::IdenticallySingularPencil
    } else {
        DegenerateReason::MultipleRoot
    };
    Classification {
        verdict: Verdict::Degenerate,
        reason: Some(reason),
        j: None,
    }
}

/// Congruence test for pencils whose reduced matrix `X⁻¹Y` has a squarefree
/// characteristic polynomial (hence is diagonalizable): equivalent iff the
/// characteristic polynomials agree.
pub fn equivalent(p: &SymPencil<Scalar>, other: &SymPencil<Scalar>) -> Result<bool> {
    let a = &p.x.inverse()? * &p.y;
    let b = &other.x.inverse()? * &other.y;
    let (ca, cb) = (char_poly4(&a), char_poly4(&b));
    if quartic_discriminant_of(&ca).is_zero() {
        return Err(Error::MultipleRoot);
    }
    Ok(ca == cb)
}

fn unit(i: usize) -> [Scalar; 4] {
    std::array::from_fn(|k| if k == i { int(1) } else { int(0) })
}

/// A vector `v` with `ᵗvXv = r ≠ 0`: a coordinate vector when some
/// diagonal entry is nonzero, otherwise `eᵢ + eⱼ` for a nonzero `Xᵢⱼ`.
pub fn find_nonisotropic_vector(x: &Mat4<Scalar>) -> Result<([Scalar; 4], Scalar)> {
    if let Some(i) = (0..4).find(|&i| !x.get(i, i).is_zero()) {
        return Ok((unit(i), x.get(i, i).clone()));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if !x.get(i, j).is_zero() {
                let v: [Scalar; 4] =
                    std::array::from_fn(|k| if k == i || k == j { int(1) } else { int(0) });
                let r = x.quadratic_form(&v);
                return Ok((v, r));
            }
        }
    }
    Err(Error::ZeroMatrix)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Diagonalization {
    pub p: Mat4<Scalar>,
    pub diagonal: [Scalar; 4],
    pub rank: usize,
}

/// Rational congruence diagonalization `ᵗPXP = diag(d)`, nonzero entries
/// first. Each step picks a non-isotropic vector in the remaining block and
/// clears its row and column with fraction-free column operations.
pub fn congruence_diagonalize(x: &Mat4<Scalar>) -> Result<Diagonalization> {
    if !x.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut p = Mat4::<Scalar>::identity();
    let mut rank = 0;
    for k in 0..4 {
        let m = x.congruence(&p);
        let block = Mat4::from_fn(|i, j| {
            if i >= k && j >= k {
                m.get(i, j).clone()
            } else {
                Scalar::zero()
            }
        });
        let Ok((v, _)) = find_nonisotropic_vector(&block) else {
            break;
        };
        // v is e_i or e_i + e_j with k <= i < j.
        let support: Vec<usize> = (0..4).filter(|&i| !v[i].is_zero()).collect();
        let i = support[0];
        if let Some(&j) = support.get(1) {
            for r in 0..4 {
                let sum = p.get(r, i) + p.get(r, j);
                p.set(r, i, sum);
            }
        }
        if i != k {
            for r in 0..4 {
                let (a, b) = (p.get(r, i).clone(), p.get(r, k).clone());
                p.set(r, i, b);
                p.set(r, k, a);
            }
        }
        let m = x.congruence(&p);
        let pivot = m.get(k, k).clone();
        for j in k + 1..4 {
            let off = m.get(k, j).clone();
            if off.is_zero() {
                continue;
            }
            for r in 0..4 {
                let updated = &pivot * p.get(r, j) - &off * p.get(r, k);
                p.set(r, j, updated);
            }
        }
        rank += 1;
    }
    let m = x.congruence(&p);
    Ok(Diagonalization {
        diagonal: std::array::from_fn(|i| m.get(i, i).clone()),
        p,
        rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{quartic_discriminant_oracle, ratio};

    type Q4 = Mat4<Scalar>;

    fn diag(d: [i64; 4]) -> Q4 {
        Q4::diag(d.map(int))
    }

    fn pencil(x: Q4, y: Q4) -> SymPencil<Scalar> {
        SymPencil::new(x, y).unwrap()
    }

    #[test]
    fn asymmetric_member_rejected() {
        let mut y = Q4::zero();
        y.set(0, 1, int(1));
        assert_eq!(SymPencil::new(Q4::identity(), y), Err(Error::NotSymmetric));
    }

    #[test]
    fn coefficient_examples() {
        let c = pencil(Q4::identity(), Q4::identity()).coeffs().as_array();
        assert_eq!(c, [1, 4, 6, 4, 1].map(int));
        let c = pencil(Q4::identity(), diag([0, 1, 2, 3]))
            .coeffs()
            .as_array();
        assert_eq!(c, [1, 6, 11, 6, 0].map(int));
        let c = pencil(Q4::zero(), Q4::zero()).coeffs().as_array();
        assert_eq!(c, [0, 0, 0, 0, 0].map(int));
    }

    #[test]
    fn quartic_discriminant_examples() {
        let z = int(0);
        assert_eq!(
            quartic_discriminant(&int(6), &int(11), &int(6), &z),
            int(144)
        );
        assert_eq!(quartic_discriminant(&z, &int(-2), &z, &int(1)), int(0));
        assert_eq!(quartic_discriminant(&z, &z, &z, &z), int(0));
        let (a, b, c, d) = (ratio(1, 3), int(-2), ratio(5, 7), int(4));
        assert_eq!(
            quartic_discriminant(&a, &b, &c, &d),
            quartic_discriminant_oracle(&a, &b, &c, &d)
        );
    }

    #[test]
    fn pencil_discriminant_examples() {
        assert_eq!(
            pencil(Q4::identity(), Q4::identity()).discriminant(),
            int(0)
        );
        assert_eq!(
            pencil(Q4::identity(), diag([0, 1, 2, 3])).discriminant(),
            int(144)
        );
        let x = Q4::from_ints([[1, 2, 0, 0], [2, 0, 1, 0], [0, 1, 3, 1], [0, 0, 1, -1]]);
        assert_eq!(pencil(x.clone(), x.scale(&int(2))).discriminant(), int(0));
    }

    #[test]
    fn j_examples() {
        let j = j_from_charpoly(&int(6), &int(11), &int(6), &int(0)).unwrap();
        assert_eq!(j, ratio(35152, 9));
        let j = j_from_charpoly(&int(0), &int(-10), &int(0), &int(9)).unwrap();
        assert_eq!(j, ratio(35152, 9));
        let z = int(0);
        assert_eq!(
            j_from_charpoly(&z, &int(-2), &z, &int(1)),
            Err(Error::MultipleRoot)
        );
    }

    #[test]
    fn classification_examples() {
        let c = classify(&pencil(Q4::identity(), diag([0, 1, 2, 3])));
        assert_eq!(c.verdict, Verdict::EllipticD5);
        assert_eq!(c.j, Some(ratio(35152, 9)));

        let c = classify(&pencil(Q4::identity(), Q4::identity()));
        assert_eq!(c.verdict, Verdict::Degenerate);
        assert_eq!(c.reason, Some(DegenerateReason::MultipleRoot));

        // Y supported on the same two coordinates: every member has rank <= 2.
        let y = Q4::from_ints([[3, 1, 0, 0], [1, -2, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]);
        let c = classify(&pencil(diag([1, 1, 0, 0]), y));
        assert_eq!(c.reason, Some(DegenerateReason::LowRank));

        // Every member singular but the generic member has rank 3.
        let x = diag([1, 1, 1, 0]);
        let y = Q4::from_ints([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 2, 0], [0, 0, 0, 0]]);
        let c = classify(&pencil(x, y));
        assert_eq!(c.reason, Some(DegenerateReason::IdenticallySingularPencil));
    }

    #[test]
    fn equivalence_examples() {
        let d = diag([0, 1, 2, 3]);
        let q = Q4::from_ints([[1, 2, 0, 1], [0, 1, 3, 0], [1, 0, 1, 2], [0, 1, 0, 1]]);
        assert!(!q.det().is_zero());
        let p1 = pencil(Q4::identity(), d.clone());
        let p2 = pencil(Q4::identity().congruence(&q), d.congruence(&q));
        assert!(equivalent(&p1, &p2).unwrap());
        assert!(!equivalent(&p1, &pencil(Q4::identity(), diag([0, 1, 2, 4]))).unwrap());
        let perm = Q4::from_ints([[0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0]]);
        let permuted = &(&perm * &d) * &perm.transpose();
        assert!(equivalent(&p1, &pencil(Q4::identity(), permuted)).unwrap());
        assert_eq!(
            equivalent(&pencil(diag([1, 1, 1, 0]), d.clone()), &p1),
            Err(Error::SingularMatrix)
        );
        assert_eq!(
            equivalent(&pencil(Q4::identity(), diag([1, 1, 2, 3])), &p1),
            Err(Error::MultipleRoot)
        );
    }

    #[test]
    fn nonisotropic_vectors() {
        let (v, r) = find_nonisotropic_vector(&diag([1, 0, 0, 0])).unwrap();
        assert_eq!((v, r), (unit(0), int(1)));
        let x = Q4::from_ints([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]);
        let (v, r) = find_nonisotropic_vector(&x).unwrap();
        assert_eq!(v, [1, 1, 0, 0].map(int));
        assert_eq!(r, int(2));
        assert_eq!(
            find_nonisotropic_vector(&Q4::zero()),
            Err(Error::ZeroMatrix)
        );
    }

    #[test]
    fn congruence_examples() {
        let d = congruence_diagonalize(&Q4::identity()).unwrap();
        assert_eq!(d.p, Q4::identity());
        assert_eq!(d.diagonal, [1, 1, 1, 1].map(int));
        assert_eq!(d.rank, 4);

        let x = Q4::from_ints([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]);
        let d = congruence_diagonalize(&x).unwrap();
        assert_eq!(d.diagonal, [2, -2, 0, 0].map(int));
        assert_eq!(d.rank, 2);
        assert_eq!(x.congruence(&d.p), Q4::diag(d.diagonal.clone()));
        assert!(!d.p.det().is_zero());

        let d = congruence_diagonalize(&Q4::zero()).unwrap();
        assert_eq!(
            (d.p, d.diagonal, d.rank),
            (Q4::identity(), [0, 0, 0, 0].map(int), 0)
        );
    }
}
