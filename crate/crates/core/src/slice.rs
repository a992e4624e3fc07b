//! Good slices of 𝔤 = sl(2) ⊕ sl(2).
//!
//! A good pair `x = (x_s, x_n)`, `y = (y_n, y_s)` is conjugated into the
//! normal form `x_s = y_s = H`, `x_n = (p 1; −p² −p)`, `y_n = (q 1; −q² −q)`
//! (or `(0 0; 1 0)`, the coordinate at infinity). The slice orthogonal to
//! `span(x, y)` meets the nilpotent variety in a complete intersection of two
//! quadrics whose pencil is built here, together with the closed-form
//! j-invariant in `t = pq`.

use num_complex::Complex64;

use crate::algebra::{format_scalar, int, ratio, MPoly, One, Ring, Scalar, SqrtField, Var, Zero};
use crate::error::{Error, Result};
use crate::matrix::{Mat2, Mat4};
use crate::pencil::{pencil_discriminant, SymPencil};

/// `((a b; c −a), (d e; f −d))`.
#[derive(Clone, Debug, PartialEq)]
pub struct GElem<R = Scalar> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
    pub e: R,
    pub f: R,
}

impl<R: Ring> GElem<R> {
    pub fn new(a: R, b: R, c: R, d: R, e: R, f: R) -> Self {
        GElem { a, b, c, d, e, f }
    }

    pub fn zero() -> Self {
        GElem::new(
            R::zero(),
            R::zero(),
            R::zero(),
            R::zero(),
            R::zero(),
            R::zero(),
        )
    }

    pub fn from_mats(first: &Mat2<R>, second: &Mat2<R>) -> Result<Self> {
        if !first.is_trace_zero() || !second.is_trace_zero() {
            return Err(Error::InvalidArgument(
                "components must have trace 0".into(),
            ));
        }
        Ok(GElem::new(
            first.get(0, 0).clone(),
            first.get(0, 1).clone(),
            first.get(1, 0).clone(),
            second.get(0, 0).clone(),
            second.get(0, 1).clone(),
            second.get(1, 0).clone(),
        ))
    }

    pub fn first(&self) -> Mat2<R> {
        Mat2::from_rows([
            [self.a.clone(), self.b.clone()],
            [self.c.clone(), -self.a.clone()],
        ])
    }

    pub fn second(&self) -> Mat2<R> {
        Mat2::from_rows([
            [self.d.clone(), self.e.clone()],
            [self.f.clone(), -self.d.clone()],
        ])
    }

    pub fn coords(&self) -> [R; 6] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
        ]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> GElem<S> {
        GElem::new(
            f(&self.a),
            f(&self.b),
            f(&self.c),
            f(&self.d),
            f(&self.e),
            f(&self.f),
        )
    }
}

/// The Killing-type form `⟨z, w⟩ = 4(tr(z₁w₁) + tr(z₂w₂))`.
pub fn killing_form<R: Ring>(z: &GElem<R>, w: &GElem<R>) -> R {
    let t = (&z.first() * &w.first()).trace() + (&z.second() * &w.second()).trace();
    R::from_int(4) * t
}

/// A slice coordinate: finite, or the alternative normal form `(0 0; 1 0)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Coord<F = Scalar> {
    Finite(F),
    Infinity,
}

impl<F: Clone> Coord<F> {
    pub fn finite(&self) -> Option<&F> {
        match self {
            Coord::Finite(v) => Some(v),
            Coord::Infinity => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SliceSpec<F = Scalar> {
    pub p: Coord<F>,
    pub q: Coord<F>,
}

impl<F: Ring> SliceSpec<F> {
    pub fn finite(p: F, q: F) -> Self {
        SliceSpec {
            p: Coord::Finite(p),
            q: Coord::Finite(q),
        }
    }

    pub fn pq(&self) -> Result<(F, F)> {
        match (&self.p, &self.q) {
            (Coord::Finite(p), Coord::Finite(q)) => Ok((p.clone(), q.clone())),
            _ => Err(Error::InfiniteCoordinate),
        }
    }

    pub fn t(&self) -> Option<F> {
        self.pq().ok().map(|(p, q)| p * q)
    }
}

impl SliceSpec<Scalar> {
    pub fn from_ints(p: i64, q: i64) -> Self {
        SliceSpec::finite(int(p), int(q))
    }
}

/// A pair satisfying the good-subspace pattern: `x = (x_s, x_n)` and
/// `y = (y_n, y_s)` with `x_s, y_s` nonzero semisimple and `x_n, y_n`
/// nonzero nilpotent.
#[derive(Clone, Debug, PartialEq)]
pub struct GoodPairRaw {
    x: GElem,
    y: GElem,
}

fn check_semisimple(m: &Mat2<Scalar>, what: &str) -> Result<()> {
    if m.det().is_zero() {
        return Err(Error::NotGoodPair(format!(
            "{what} is not a nonzero semisimple element"
        )));
    }
    Ok(())
}

fn check_nilpotent(m: &Mat2<Scalar>, what: &str) -> Result<()> {
    if m.is_zero() || !m.det().is_zero() {
        return Err(Error::NotGoodPair(format!(
            "{what} is not a nonzero nilpotent element"
        )));
    }
    Ok(())
}

impl GoodPairRaw {
    pub fn new(x: GElem, y: GElem) -> Result<Self> {
        check_semisimple(&x.first(), "x_s")?;
        check_nilpotent(&x.second(), "x_n")?;
        check_nilpotent(&y.first(), "y_n")?;
        check_semisimple(&y.second(), "y_s")?;
        Ok(GoodPairRaw { x, y })
    }

    pub fn x(&self) -> &GElem {
        &self.x
    }

    pub fn y(&self) -> &GElem {
        &self.y
    }
}

fn h<F: Ring>() -> Mat2<F> {
    Mat2::diag([F::one(), -F::one()])
}

/// `(c 1; −c² −c)`, or `(0 0; 1 0)` at infinity.
pub fn nilpotent_normal_form<F: Ring>(c: &Coord<F>) -> Mat2<F> {
    match c {
        Coord::Finite(c) => Mat2::from_rows([
            [c.clone(), F::one()],
            [-(c.clone() * c.clone()), -c.clone()],
        ]),
        Coord::Infinity => Mat2::from_rows([[F::zero(), F::zero()], [F::one(), F::zero()]]),
    }
}

/// The basis `x = (H, x_n(p))`, `y = (y_n(q), H)` of the normalized good
/// subspace.
pub fn normal_form_pair<F: Ring>(spec: &SliceSpec<F>) -> (GElem<F>, GElem<F>) {
    let x = GElem::from_mats(&h(), &nilpotent_normal_form(&spec.p)).expect("trace zero");
    let y = GElem::from_mats(&nilpotent_normal_form(&spec.q), &h()).expect("trace zero");
    (x, y)
}

/// Result of conjugating a good pair into normal form:
/// `P⁻¹(λx_s)P = H`, `Q⁻¹(λx_n)Q = x_n(p)`, `P⁻¹(μy_n)P = y_n(q)`,
/// `Q⁻¹(μy_s)Q = H`, with `det P = det Q = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Normalized<F> {
    pub p_mat: Mat2<F>,
    pub q_mat: Mat2<F>,
    pub scale_x: F,
    pub scale_y: F,
    pub spec: SliceSpec<F>,
}

fn largest<F: SqrtField>(v: &[F; 2]) -> usize {
    if v[1].magnitude() > v[0].magnitude() {
        1
    } else {
        0
    }
}

fn nonzero<F: SqrtField>(v: &[F; 2]) -> bool {
    v.iter().any(|x| x.magnitude() > F::EPS)
}

/// `P′ ∈ SL(2)` with `P′⁻¹ s P′ = H`, for trace-zero `s` with `det s = −1`.
fn eigen_frame<F: SqrtField>(s: &Mat2<F>) -> Mat2<F> {
    let (u, v, w) = (
        s.get(0, 0).clone(),
        s.get(0, 1).clone(),
        s.get(1, 0).clone(),
    );
    let one = F::one();
    // Kernel vectors of s − I and s + I; each row gives a candidate and at
    // least one candidate is nonzero since s ≠ ±I.
    let pick = |c1: [F; 2], c2: [F; 2]| {
        let better = |a: &[F; 2]| a[0].magnitude().max(a[1].magnitude());
        if nonzero(&c1) && (F::EPS == 0.0 || better(&c1) >= better(&c2)) {
            c1
        } else {
            c2
        }
    };
    let plus = pick(
        [v.clone(), one.clone() - u.clone()],
        [u.clone() + one.clone(), w.clone()],
    );
    let minus = pick(
        [v.clone(), -(one.clone() + u.clone())],
        [u.clone() - one.clone(), w.clone()],
    );
    let lead = plus[largest(&plus)].try_inv().expect("nonzero eigenvector");
    let plus = [plus[0].clone() * lead.clone(), plus[1].clone() * lead];
    let det = plus[0].clone() * minus[1].clone() - plus[1].clone() * minus[0].clone();
    let inv = det.try_inv().expect("independent eigenvectors");
    let minus = [minus[0].clone() * inv.clone(), minus[1].clone() * inv];
    Mat2::from_rows([
        [plus[0].clone(), minus[0].clone()],
        [plus[1].clone(), minus[1].clone()],
    ])
}

/// Given `P′` and the conjugated nilpotent `(α β; γ −α)`, the diagonal
/// correction bringing it to normal form, and the coordinate.
fn nilpotent_step<F: SqrtField>(frame: &Mat2<F>, n: &Mat2<F>) -> Result<(Mat2<F>, Coord<F>)> {
    let m = &frame.inverse()? * &(n * frame);
    let (alpha, beta, gamma) = (
        m.get(0, 0).clone(),
        m.get(0, 1).clone(),
        m.get(1, 0).clone(),
    );
    let scale = alpha
        .magnitude()
        .max(beta.magnitude())
        .max(gamma.magnitude());
    if beta.magnitude() > F::EPS * scale {
        let r = beta.try_sqrt()?;
        let d = Mat2::diag([r.clone(), r.try_inv().expect("nonzero root")]);
        Ok((frame * &d, Coord::Finite(alpha)))
    } else {
        let r = gamma.try_sqrt()?;
        let d = Mat2::diag([r.try_inv().expect("nonzero root"), r]);
        Ok((frame * &d, Coord::Infinity))
    }
}

/// Normalization following the constructive proof: rescale so that the
/// semisimple parts have determinant −1, diagonalize them in SL(2), then fix
/// the nilpotent parts with a diagonal square-root scaling.
pub fn normalize_in<F: SqrtField>(x: &GElem<F>, y: &GElem<F>) -> Result<Normalized<F>> {
    let minus_one = -F::one();
    let lambda =
        (minus_one.clone() * x.first().det().try_inv().ok_or(Error::SingularMatrix)?).try_sqrt()?;
    let mu = (minus_one * y.second().det().try_inv().ok_or(Error::SingularMatrix)?).try_sqrt()?;
    let p_frame = eigen_frame(&x.first().scale(&lambda));
    let q_frame = eigen_frame(&y.second().scale(&mu));
    let (q_mat, p) = nilpotent_step(&q_frame, &x.second().scale(&lambda))?;
    let (p_mat, q) = nilpotent_step(&p_frame, &y.first().scale(&mu))?;
    Ok(Normalized {
        p_mat,
        q_mat,
        scale_x: lambda,
        scale_y: mu,
        spec: SliceSpec { p, q },
    })
}

/// Exact normalization; fails with `NeedsNumericExtension` when one of the
/// square roots is irrational.
pub fn normalize_good_pair(pair: &GoodPairRaw) -> Result<Normalized<Scalar>> {
    normalize_in(&pair.x, &pair.y)
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericNormalization {
    pub normalized: Normalized<Complex64>,
    /// Largest entry of the four normal-form defects and of `det − 1`.
    pub residual: f64,
}

pub fn normal_form_residual(
    pair: &GElem<Complex64>,
    other: &GElem<Complex64>,
    n: &Normalized<Complex64>,
) -> Result<f64> {
    let (x, y) = (pair, other);
    let pi = n.p_mat.inverse()?;
    let qi = n.q_mat.inverse()?;
    let (hx, hy) = normal_form_pair(&n.spec);
    let defects = [
        &(&pi * &(&x.first().scale(&n.scale_x) * &n.p_mat)) - &hx.first(),
        &(&qi * &(&x.second().scale(&n.scale_x) * &n.q_mat)) - &hx.second(),
        &(&pi * &(&y.first().scale(&n.scale_y) * &n.p_mat)) - &hy.first(),
        &(&qi * &(&y.second().scale(&n.scale_y) * &n.q_mat)) - &hy.second(),
    ];
    let mut r = defects
        .iter()
        .flat_map(|m| {
            m.rows()
                .iter()
                .flatten()
                .map(|z| z.norm())
                .collect::<Vec<_>>()
        })
        .fold(0.0, f64::max);
    for m in [&n.p_mat, &n.q_mat] {
        r = r.max((m.det() - Complex64::new(1.0, 0.0)).norm());
    }
    Ok(r)
}

/// Complex floating-point normalization; always succeeds for a good pair.
pub fn normalize_good_pair_numeric(pair: &GoodPairRaw) -> Result<NumericNormalization> {
    let to_c = |r: &Scalar| Complex64::from_rational(r);
    let (x, y) = (pair.x.map(to_c), pair.y.map(to_c));
    let normalized = normalize_in(&x, &y)?;
    let residual = normal_form_residual(&x, &y, &normalized)?;
    Ok(NumericNormalization {
        normalized,
        residual,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Normalization {
    Exact(Normalized<Scalar>),
    Numeric(NumericNormalization),
}

/// Exact normalization when possible, otherwise the numeric one.
pub fn normalize_auto(pair: &GoodPairRaw) -> Result<Normalization> {
    match normalize_good_pair(pair) {
        Ok(n) => Ok(Normalization::Exact(n)),
        Err(Error::NeedsNumericExtension(_)) => {
            normalize_good_pair_numeric(pair).map(Normalization::Numeric)
        }
        Err(e) => Err(e),
    }
}

fn poly_coords(spec: &SliceSpec) -> Result<(MPoly, MPoly)> {
    let (p, q) = spec.pq()?;
    Ok((MPoly::constant(p), MPoly::constant(q)))
}

fn symbolic_pq() -> (MPoly, MPoly) {
    (MPoly::var(Var::P), MPoly::var(Var::Q))
}

fn slice_forms(p: &MPoly, q: &MPoly) -> [MPoly; 2] {
    let v = MPoly::var;
    let two = MPoly::int(2);
    [
        &two * &v(Var::A) + &two * p * v(Var::D) - p * p * v(Var::E) + v(Var::F),
        &two * q * v(Var::A) - q * q * v(Var::B) + v(Var::C) + &two * &v(Var::D),
    ]
}

/// `2a + 2pd − p²e + f` and `2qa − q²b + c + 2d`.
pub fn good_slice_equations(spec: &SliceSpec) -> Result<[MPoly; 2]> {
    let (p, q) = poly_coords(spec)?;
    Ok(slice_forms(&p, &q))
}

pub fn good_slice_equations_symbolic() -> [MPoly; 2] {
    let (p, q) = symbolic_pq();
    slice_forms(&p, &q)
}

fn variety_forms(p: &MPoly, q: &MPoly) -> (MPoly, MPoly) {
    let v = MPoly::var;
    let (a, b, d, e) = (v(Var::A), v(Var::B), v(Var::D), v(Var::E));
    let two = MPoly::int(2);
    let g1 = &a * &a - &two * q * &a * &b + q * q * &b * &b - &two * &b * &d;
    let g2 = -(&two * &a * &e) + &d * &d - &two * p * &d * &e + p * p * &e * &e;
    (g1, g2)
}

/// The quadrics `g₁, g₂` in `(a, b, d, e)` cutting out the slice variety
/// after eliminating `c` and `f`.
pub fn variety_equations(spec: &SliceSpec) -> Result<(MPoly, MPoly)> {
    let (p, q) = poly_coords(spec)?;
    Ok(variety_forms(&p, &q))
}

pub fn variety_equations_symbolic() -> (MPoly, MPoly) {
    let (p, q) = symbolic_pq();
    variety_forms(&p, &q)
}

/// The pencil `(X(q), Y(p))` whose quadratic forms in `v = (a, b, d, e)`
/// are `g₁` and `g₂`.
pub fn pencil_matrices<R: Ring>(p: &R, q: &R) -> SymPencil<R> {
    let n = |k: i64| R::from_int(k);
    let z = R::zero;
    let x = Mat4::from_rows([
        [n(1), -q.clone(), z(), z()],
        [-q.clone(), q.clone() * q.clone(), n(-1), z()],
        [z(), n(-1), z(), z()],
        [z(), z(), z(), z()],
    ]);
    let y = Mat4::from_rows([
        [z(), z(), z(), n(-1)],
        [z(), z(), z(), z()],
        [z(), z(), n(1), -p.clone()],
        [n(-1), z(), -p.clone(), p.clone() * p.clone()],
    ]);
    SymPencil::new(x, y).expect("both members are symmetric")
}

pub fn pencil_from_pq(spec: &SliceSpec) -> Result<SymPencil<Scalar>> {
    let (p, q) = spec.pq()?;
    Ok(pencil_matrices(&p, &q))
}

pub fn pencil_symbolic() -> SymPencil<MPoly> {
    let (p, q) = symbolic_pq();
    pencil_matrices(&p, &q)
}

/// The variables `v = (a, b, d, e)` the pencil acts on.
pub fn pencil_vector() -> [MPoly; 4] {
    [Var::A, Var::B, Var::D, Var::E].map(MPoly::var)
}

fn degenerate_t(t: &Scalar) -> bool {
    t.is_zero() || *t == ratio(1, 4)
}

/// `256(t⁶ − 12t⁵ + 51t⁴ − 88t³ + 51t² − 12t + 1) / (t⁴(1 − 4t))`.
pub fn j_of_t(t: &Scalar) -> Result<Scalar> {
    if degenerate_t(t) {
        return Err(Error::DegenerateSlice(format_scalar(t)));
    }
    let c = |k: i64| int(k);
    let num = Ring::pow(t, 6) - c(12) * Ring::pow(t, 5) + c(51) * Ring::pow(t, 4)
        - c(88) * Ring::pow(t, 3)
        + c(51) * Ring::pow(t, 2)
        - c(12) * t
        + c(1);
    let den = Ring::pow(t, 4) * (c(1) - c(4) * t);
    Ok(c(256) * num / den)
}

pub fn j_closed_form(spec: &SliceSpec) -> Result<Scalar> {
    let t = spec.t().ok_or(Error::InfiniteCoordinate)?;
    j_of_t(&t)
}

pub fn is_degenerate(spec: &SliceSpec) -> bool {
    spec.t().is_none_or(|t| degenerate_t(&t))
}

/// `D(X(q), Y(p)) = constant · pᵃ qᵃ (1 − 4pq)ᵇ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegeneracyFactorization {
    pub constant: Scalar,
    pub a: u32,
    pub b: u32,
}

/// Factor the symbolic pencil discriminant of the slice pencil by peeling
/// off the monomial content and then powers of `1 − 4pq`.
pub fn degeneracy_factorization() -> Result<DegeneracyFactorization> {
    let d = pencil_discriminant(&pencil_symbolic());
    let content = d.monomial_gcd();
    let (ap, aq) = (content.exponent(Var::P), content.exponent(Var::Q));
    if ap != aq || content.total_degree() != u32::from(ap) + u32::from(aq) {
        return Err(Error::InvalidArgument(format!(
            "unexpected monomial content {content:?}"
        )));
    }
    let mut rest = d.div_monomial(&content).ok_or(Error::ZeroPolynomial)?;
    let (p, q) = symbolic_pq();
    let factor = MPoly::one() - MPoly::int(4) * p * q;
    let mut b = 0;
    while rest.as_constant().is_none() {
        rest = rest.div_exact(&factor).ok_or_else(|| {
            Error::InvalidArgument("discriminant has a factor other than p, q, 1 − 4pq".into())
        })?;
        b += 1;
    }
    let constant = rest.as_constant().expect("loop exit");
    if constant.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(DegeneracyFactorization {
        constant,
        a: u32::from(ap),
        b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::{classify, Verdict};

    fn g(m1: [[i64; 2]; 2], m2: [[i64; 2]; 2]) -> GElem {
        GElem::from_mats(&Mat2::from_ints(m1), &Mat2::from_ints(m2)).unwrap()
    }

    const H: [[i64; 2]; 2] = [[1, 0], [0, -1]];
    const E: [[i64; 2]; 2] = [[0, 1], [0, 0]];
    const F: [[i64; 2]; 2] = [[0, 0], [1, 0]];
    const O: [[i64; 2]; 2] = [[0, 0], [0, 0]];

    #[test]
    fn killing_examples() {
        assert_eq!(killing_form(&g(E, O), &g(F, O)), int(4));
        assert_eq!(killing_form(&g(H, O), &g(H, O)), int(8));
        let z = g([[3, -1], [2, -3]], [[1, 5], [7, -1]]);
        assert!(killing_form(&z, &GElem::zero()).is_zero());
    }

    #[test]
    fn normalization_examples() {
        let pair = GoodPairRaw::new(g(H, E), g(E, H)).unwrap();
        let n = normalize_good_pair(&pair).unwrap();
        assert_eq!(n.spec, SliceSpec::from_ints(0, 0));
        assert_eq!(n.p_mat, Mat2::identity());

        let pair = GoodPairRaw::new(g(H, [[1, 1], [-1, -1]]), g([[2, 1], [-4, -2]], H)).unwrap();
        assert_eq!(
            normalize_good_pair(&pair).unwrap().spec,
            SliceSpec::from_ints(1, 2)
        );

        let pair = GoodPairRaw::new(g(H, F), g(E, H)).unwrap();
        let n = normalize_good_pair(&pair).unwrap();
        assert_eq!(n.spec.p, Coord::Infinity);
        assert_eq!(n.spec.q, Coord::Finite(int(0)));
    }

    #[test]
    fn normalization_conjugates_exactly() {
        // x_s = (0 1; 1 0) has det −1 but is not diagonal.
        let pair = GoodPairRaw::new(
            g([[0, 1], [1, 0]], [[2, 4], [-1, -2]]),
            g([[3, 9], [-1, -3]], [[1, 2], [0, -1]]),
        )
        .unwrap();
        let n = normalize_good_pair(&pair).unwrap();
        let (hx, hy) = normal_form_pair(&n.spec);
        let conj = |m: &Mat2<Scalar>, c: &Mat2<Scalar>| &c.inverse().unwrap() * &(m * c);
        assert_eq!(
            conj(&pair.x().first().scale(&n.scale_x), &n.p_mat),
            hx.first()
        );
        assert_eq!(
            conj(&pair.x().second().scale(&n.scale_x), &n.q_mat),
            hx.second()
        );
        assert_eq!(
            conj(&pair.y().first().scale(&n.scale_y), &n.p_mat),
            hy.first()
        );
        assert_eq!(
            conj(&pair.y().second().scale(&n.scale_y), &n.q_mat),
            hy.second()
        );
        assert_eq!(n.p_mat.det(), int(1));
        assert_eq!(n.q_mat.det(), int(1));
    }

    #[test]
    fn irrational_roots_fall_back() {
        // det x_s = −2, so the rescaling factor is 1/√2.
        let pair = GoodPairRaw::new(g([[0, 2], [1, 0]], E), g(E, H)).unwrap();
        assert!(matches!(
            normalize_good_pair(&pair),
            Err(Error::NeedsNumericExtension(_))
        ));
        let Normalization::Numeric(n) = normalize_auto(&pair).unwrap() else {
            panic!("expected numeric path");
        };
        assert!(n.residual <= 1e-10, "residual {}", n.residual);
    }

    #[test]
    fn bad_pairs_rejected() {
        assert!(matches!(
            GoodPairRaw::new(g(E, E), g(E, H)),
            Err(Error::NotGoodPair(_))
        ));
        assert!(matches!(
            GoodPairRaw::new(g(H, H), g(E, H)),
            Err(Error::NotGoodPair(_))
        ));
        assert!(matches!(
            GoodPairRaw::new(g(H, O), g(E, H)),
            Err(Error::NotGoodPair(_))
        ));
        assert!(matches!(
            GoodPairRaw::new(g(H, E), g(E, E)),
            Err(Error::NotGoodPair(_))
        ));
    }

    #[test]
    fn slice_equations_examples() {
        let v = MPoly::var;
        let [l1, l2] = good_slice_equations(&SliceSpec::from_ints(0, 0)).unwrap();
        assert_eq!(l1, MPoly::int(2) * v(Var::A) + v(Var::F));
        assert_eq!(l2, v(Var::C) + MPoly::int(2) * v(Var::D));
        assert_eq!(
            good_slice_equations(&SliceSpec {
                p: Coord::Infinity,
                q: Coord::Finite(int(0))
            }),
            Err(Error::InfiniteCoordinate)
        );
    }

    #[test]
    fn variety_examples() {
        let v = MPoly::var;
        let (g1, g2) = variety_equations(&SliceSpec::from_ints(0, 0)).unwrap();
        assert_eq!(
            g1,
            v(Var::A) * v(Var::A) - MPoly::int(2) * v(Var::B) * v(Var::D)
        );
        assert_eq!(
            g2,
            -(MPoly::int(2) * v(Var::A) * v(Var::E)) + v(Var::D) * v(Var::D)
        );
        let (g1, _) = variety_equations(&SliceSpec::from_ints(1, 1)).unwrap();
        assert_eq!(g1.eval_with(|_| Some(int(1))).unwrap(), int(-2));
    }

    #[test]
    fn pencil_quadrics_match_variety() {
        let pencil = pencil_symbolic();
        let v = pencil_vector();
        let (g1, g2) = variety_equations_symbolic();
        assert_eq!(pencil.x().quadratic_form(&v), g1);
        assert_eq!(pencil.y().quadratic_form(&v), g2);
        let p0 = pencil_from_pq(&SliceSpec::from_ints(0, 0)).unwrap();
        assert_eq!(
            p0.x(),
            &Mat4::from_ints([[1, 0, 0, 0], [0, 0, -1, 0], [0, -1, 0, 0], [0, 0, 0, 0]])
        );
        let c = classify(&pencil_from_pq(&SliceSpec::from_ints(1, 1)).unwrap());
        assert_eq!(c.verdict, Verdict::EllipticD5);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            j_closed_form(&SliceSpec::from_ints(1, -1)).unwrap(),
            int(55296) / int(5)
        );
        assert_eq!(
            j_closed_form(&SliceSpec::from_ints(1, 1)).unwrap(),
            ratio(2048, 3)
        );
        let half = SliceSpec::finite(ratio(1, 2), ratio(1, 2));
        assert!(matches!(
            j_closed_form(&half),
            Err(Error::DegenerateSlice(_))
        ));
    }

    #[test]
    fn degeneracy_examples() {
        assert!(is_degenerate(&SliceSpec::from_ints(0, 5)));
        assert!(is_degenerate(&SliceSpec {
            p: Coord::Infinity,
            q: Coord::Finite(int(3))
        }));
        assert!(!is_degenerate(&SliceSpec::from_ints(1, 1)));
    }

    #[test]
    fn symbolic_discriminant_factors() {
        let f = degeneracy_factorization().unwrap();
        assert_eq!((f.a, f.b), (4, 1));
        assert!(!f.constant.is_zero());
    }
}
