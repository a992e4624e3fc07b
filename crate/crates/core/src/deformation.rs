//! The Tjurina module T¹ of the slice singularity and its semi-universal
//! deformation coming from deforming the adjoint quotient and the slice.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;

use crate::algebra::{format_scalar, MPoly, Monomial, One, RatFunc, Ring, Scalar, Var, Zero};
use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::slice::{is_degenerate, killing_form, nilpotent_normal_form, Coord, GElem, SliceSpec};

/// An element of O² with coefficients in ℚ(p, q).
#[derive(Clone, Debug, PartialEq)]
pub struct PolyVecPair {
    pub first: RatFunc,
    pub second: RatFunc,
}

impl PolyVecPair {
    pub fn new(first: impl Into<RatFunc>, second: impl Into<RatFunc>) -> Self {
        PolyVecPair {
            first: first.into(),
            second: second.into(),
        }
    }

    pub fn zero() -> Self {
        PolyVecPair::new(RatFunc::zero(), RatFunc::zero())
    }

    pub fn times(&self, c: &RatFunc) -> Self {
        PolyVecPair {
            first: self.first.clone() * c.clone(),
            second: self.second.clone() * c.clone(),
        }
    }

    pub fn times_poly(&self, c: &MPoly) -> Self {
        self.times(&RatFunc::from_poly(c.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    /// Both components as polynomials, when no denominator survives.
    pub fn as_polys(&self) -> Option<(MPoly, MPoly)> {
        Some((self.first.as_poly()?, self.second.as_poly()?))
    }
}

impl Add for PolyVecPair {
    type Output = PolyVecPair;
    fn add(self, rhs: PolyVecPair) -> PolyVecPair {
        PolyVecPair {
            first: self.first + rhs.first,
            second: self.second + rhs.second,
        }
    }
}

impl Sub for PolyVecPair {
    type Output = PolyVecPair;
    fn sub(self, rhs: PolyVecPair) -> PolyVecPair {
        self + (-rhs)
    }
}

impl Neg for PolyVecPair {
    type Output = PolyVecPair;
    fn neg(self) -> PolyVecPair {
        PolyVecPair {
            first: -self.first,
            second: -self.second,
        }
    }
}

fn var(v: Var) -> MPoly {
    MPoly::var(v)
}

fn n(k: i64) -> MPoly {
    MPoly::int(k)
}

fn finite_params(spec: &SliceSpec) -> Result<(MPoly, MPoly)> {
    let (p, q) = spec.pq()?;
    Ok((MPoly::constant(p), MPoly::constant(q)))
}

fn admissible_params(spec: &SliceSpec) -> Result<(MPoly, MPoly)> {
    let params = finite_params(spec)?;
    if is_degenerate(spec) {
        let t = spec.t().expect("finite");
        return Err(Error::DegenerateSlice(format_scalar(&t)));
    }
    Ok(params)
}

fn symbolic_params() -> (MPoly, MPoly) {
    (var(Var::P), var(Var::Q))
}

fn g_pair(p: &MPoly, q: &MPoly) -> (MPoly, MPoly) {
    let (a, b, d, e) = (var(Var::A), var(Var::B), var(Var::D), var(Var::E));
    let g1 = &a * &a - &(&n(2) * q) * &(&a * &b) + &(q * q) * &(&b * &b) - &n(2) * &(&b * &d);
    let g2 = -(&n(2) * &(&a * &e)) + &d * &d - &(&n(2) * p) * &(&d * &e) + &(p * p) * &(&e * &e);
    (g1, g2)
}

fn half_gradient(g: &(MPoly, MPoly), v: Var, sign: i64) -> PolyVecPair {
    let c = crate::algebra::ratio(sign, 2);
    PolyVecPair::new(g.0.derivative(v).scale(&c), g.1.derivative(v).scale(&c))
}

fn generators_in(p: &MPoly, q: &MPoly) -> [PolyVecPair; 8] {
    let g = g_pair(p, q);
    let z = MPoly::zero;
    [
        PolyVecPair::new(g.0.clone(), z()),
        PolyVecPair::new(g.1.clone(), z()),
        PolyVecPair::new(z(), g.0.clone()),
        PolyVecPair::new(z(), g.1.clone()),
        half_gradient(&g, Var::A, 1),
        half_gradient(&g, Var::B, -1),
        half_gradient(&g, Var::D, -1),
        half_gradient(&g, Var::E, -1),
    ]
}

/// `v₁ … v₈`: the equations placed in either slot, and the (scaled)
/// gradients of `(g₁, g₂)` in `a, b, d, e`.
pub fn jacobian_generators(spec: &SliceSpec) -> Result<[PolyVecPair; 8]> {
    let (p, q) = finite_params(spec)?;
    Ok(generators_in(&p, &q))
}

pub fn jacobian_generators_symbolic() -> [PolyVecPair; 8] {
    let (p, q) = symbolic_params();
    generators_in(&p, &q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub label: String,
    pub holds: bool,
}

/// `v₁ … v₁₈` with the outcome of comparing each derived vector against its
/// closed form, plus the two rewriting identities.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub vectors: Vec<PolyVecPair>,
    pub checks: Vec<IdentityCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.label.as_str())
            .collect()
    }

    /// `vᵢ`, 1-based.
    pub fn v(&self, i: usize) -> &PolyVecPair {
        &self.vectors[i - 1]
    }
}

fn displayed_forms(p: &MPoly, q: &MPoly) -> Vec<(usize, MPoly, MPoly)> {
    let (a, b, d, e) = (var(Var::A), var(Var::B), var(Var::D), var(Var::E));
    let z = MPoly::zero;
    let pq = p * q;
    let (p2, q2) = (p * p, q * q);
    let (p3, p4) = (&p2 * p, &p2 * &p2);
    vec![
        (5, &a - &(q * &b), -e.clone()),
        (6, q * &a - &q2 * &b + d.clone(), z()),
        (7, b.clone(), -d.clone() + p * &e),
        (8, z(), a.clone() + p * &d - &p2 * &e),
        (9, a.clone(), -e.clone() - q * &d + &pq * &e),
        (10, d.clone(), q * &e),
        (
            11,
            &p2 * &(&e * &e),
            -(&(&n(3) * q) * &(&d * &e)) + &(&n(4) * &pq - n(2)) * &(&e * &e),
        ),
        (
            12,
            z(),
            &q2 * &(&b * &b) + &(&n(2) * &pq - n(2)) * &(&b * &d)
                - &(&n(2) * &(&p2 * q)) * &(&b * &e)
                + &p2 * &(&d * &d)
                - &(&n(2) * &p3) * &(&d * &e)
                + &p4 * &(&e * &e),
        ),
        (
            13,
            z(),
            q * &(&b * &d) + &(n(1) - pq.clone()) * &(&b * &e) + p * &(&d * &d)
                - &(&n(2) * &p2) * &(&d * &e)
                + &p3 * &(&e * &e),
        ),
        (14, z(), q * &(&b * &e) + &d * &d - p * &(&d * &e)),
        (15, z(), &d * &d - &p2 * &(&e * &e)),
        (
            16,
            z(),
            -(&(&n(2) * &(&p2 * q)) * &(&e * &e)) + &(&n(2) * &pq - n(1)) * &(&d * &e),
        ),
        (17, z(), &(&d * &d) * &e),
        (18, z(), &d * &(&e * &e)),
    ]
}

fn relations_in(p: &MPoly, q: &MPoly) -> RelationReport {
    let (a, b, d, e) = (var(Var::A), var(Var::B), var(Var::D), var(Var::E));
    let rf = |m: MPoly| RatFunc::from_poly(m);
    let mut v: Vec<PolyVecPair> = generators_in(p, q).to_vec();
    let at = |v: &Vec<PolyVecPair>, i: usize| v[i - 1].clone();
    let pq = p * q;

    let v9 = at(&v, 5) + at(&v, 7).times_poly(q);
    v.push(v9);
    let v10 = at(&v, 6) - at(&v, 5).times_poly(q);
    v.push(v10);
    let v11 = at(&v, 2)
        + at(&v, 9).times_poly(&(&n(2) * &e))
        + at(&v, 10).times_poly(&(&(&n(2) * p) * &e - d.clone()));
    v.push(v11);
    let v12 = at(&v, 3)
        + at(&v, 8).times_poly(&(-a.clone() + &n(2) * &(q * &b) + p * &d - &(p * p) * &e));
    v.push(v12);
    let v13 = at(&v, 7).times_poly(&a) + at(&v, 8).times_poly(&(d.clone() - p * &e))
        - at(&v, 9).times_poly(&b);
    v.push(v13);
    let v14 = -at(&v, 7).times_poly(&d) + at(&v, 10).times_poly(&b);
    v.push(v14);
    let v15 = at(&v, 4) + at(&v, 8).times_poly(&(&n(2) * &e));
    v.push(v15);
    let v16 = at(&v, 4).times_poly(q)
        + at(&v, 8).times_poly(&(&(&n(3) * q) * &e))
        + at(&v, 9).times_poly(&d)
        - at(&v, 10).times_poly(&a);
    v.push(v16);
    let two_pq_minus_one = &n(2) * &pq - n(1);
    let inner = at(&v, 15).times_poly(&(&(&n(4) * &(&pq * &pq)) * &e))
        - at(&v, 16).times_poly(&(&two_pq_minus_one * &d))
        - at(&v, 16).times_poly(&(&(&n(2) * &(&(p * p) * q)) * &e));
    let v17 = inner.times(&RatFunc::new(n(1), &n(4) * &pq - n(1)).expect("nonzero polynomial"));
    v.push(v17);
    let v18 = (-at(&v, 16).times_poly(&d) + at(&v, 17).times_poly(&two_pq_minus_one))
        .times(&RatFunc::new(n(1), &n(2) * &(&(p * p) * q)).expect("nonzero polynomial"));
    v.push(v18);

    let mut checks: Vec<IdentityCheck> = displayed_forms(p, q)
        .into_iter()
        .map(|(i, f, s)| IdentityCheck {
            label: format!("v{i}"),
            holds: v[i - 1] == PolyVecPair::new(f, s),
        })
        .collect();

    let z = MPoly::zero;
    let unit2 = |m: MPoly| PolyVecPair::new(z(), m);
    let rewrite_d = -at(&v, 7) + PolyVecPair::new(b.clone(), z()) + unit2(p * &e);
    checks.push(IdentityCheck {
        label: "(0,d) = -v7 + (b,0) + p(0,e)".into(),
        holds: rewrite_d == unit2(d.clone()),
    });
    let rewrite_de =
        at(&v, 8).times_poly(&(&(&n(2) * q) * &e)) - unit2(&(&n(2) * q) * &(&a * &e)) - at(&v, 16);
    checks.push(IdentityCheck {
        label: "(0,de) = 2qe v8 - 2q(0,ae) - v16".into(),
        holds: rewrite_de == PolyVecPair::new(rf(z()), rf(&d * &e)),
    });
    RelationReport { vectors: v, checks }
}

/// `v₁ … v₁₈` at an admissible `(p, q)` with the identity report.
pub fn derived_relations(spec: &SliceSpec) -> Result<RelationReport> {
    let (p, q) = admissible_params(spec)?;
    Ok(relations_in(&p, &q))
}

/// The same relations over ℚ(p, q) with `p, q` symbolic.
pub fn derived_relations_symbolic() -> RelationReport {
    let (p, q) = symbolic_params();
    relations_in(&p, &q)
}

#[derive(Clone, Debug, PartialEq)]
pub struct T1Basis {
    pub elements: [PolyVecPair; 7],
}

impl T1Basis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `(1,0), (b,0), (e,0), (0,1), (0,b), (0,ae), (0,e)`.
pub fn t1_basis(spec: &SliceSpec) -> Result<T1Basis> {
    admissible_params(spec)?;
    let (b, e) = (var(Var::B), var(Var::E));
    let z = MPoly::zero;
    Ok(T1Basis {
        elements: [
            PolyVecPair::new(n(1), z()),
            PolyVecPair::new(b.clone(), z()),
            PolyVecPair::new(e.clone(), z()),
            PolyVecPair::new(z(), n(1)),
            PolyVecPair::new(z(), b),
            PolyVecPair::new(z(), &var(Var::A) * &e),
            PolyVecPair::new(z(), e),
        ],
    })
}

const ABDE: [Var; 4] = [Var::A, Var::B, Var::D, Var::E];

fn monomials_up_to(bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for total in 0..=bound {
        for i in 0..=total {
            for j in 0..=total - i {
                for k in 0..=total - i - j {
                    let l = total - i - j - k;
                    let mut exps = vec![0u16; Var::E.index() + 1];
                    for (v, x) in ABDE.iter().zip([i, j, k, l]) {
                        exps[v.index()] = x as u16;
                    }
                    out.push(Monomial::from_exponents(exps));
                }
            }
        }
    }
    out
}

/// Incremental row echelon form over ℚ with sparse rows.
struct SparseEchelon {
    pivots: HashMap<usize, BTreeMap<usize, Scalar>>,
}

impl SparseEchelon {
    fn new() -> Self {
        SparseEchelon {
            pivots: HashMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn insert(&mut self, mut row: BTreeMap<usize, Scalar>) {
        while let Some((&col, lead)) = row.iter().next() {
            let Some(pivot) = self.pivots.get(&col) else {
                let inv = lead.recip();
                for x in row.values_mut() {
                    *x = &*x * &inv;
                }
                self.pivots.insert(col, row);
                return;
            };
            let factor = lead.clone();
            for (c, x) in pivot {
                let entry = row.entry(*c).or_insert_with(Scalar::zero);
                *entry = &*entry - &factor * x;
                if entry.is_zero() {
                    row.remove(c);
                }
            }
        }
    }
}

/// Dimension of `A²/M_A` where `A = ℚ[a,b,d,e]` truncated above total
/// degree `bound` and `M_A` is spanned by `m·vᵢ` (i = 1..8, m monomial).
pub fn t1_dimension_truncated(spec: &SliceSpec, bound: u32) -> Result<usize> {
    if bound < 3 {
        return Err(Error::InvalidArgument(format!(
            "degree bound {bound} must be at least 3"
        )));
    }
    let (p, q) = admissible_params(spec)?;
    let gens: Vec<(MPoly, MPoly)> = generators_in(&p, &q)
        .iter()
        .map(|g| g.as_polys().expect("polynomial generators"))
        .collect();
    let monomials = monomials_up_to(bound);
    let index: HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let offset = monomials.len();
    let mut echelon = SparseEchelon::new();
    for m in &monomials {
        for (f, s) in &gens {
            let mut row = BTreeMap::new();
            for (slot, poly) in [(0, f), (offset, s)] {
                for (mono, c) in poly.mul_monomial(m).terms() {
                    if mono.total_degree() <= bound {
                        row.insert(slot + index[mono], c.clone());
                    }
                }
            }
            if !row.is_empty() {
                echelon.insert(row);
            }
        }
    }
    Ok(2 * offset - echelon.rank())
}

/// A point `(α, β, γ, δ, ε, λ, μ)` of the deformation base.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationPoint<R = Scalar> {
    pub alpha: R,
    pub beta: R,
    pub gamma: R,
    pub delta: R,
    pub epsilon: R,
    pub lambda: R,
    pub mu: R,
}

impl<R: Ring> DeformationPoint<R> {
    pub fn zero() -> Self {
        let z = R::zero;
        DeformationPoint {
            alpha: z(),
            beta: z(),
            gamma: z(),
            delta: z(),
            epsilon: z(),
            lambda: z(),
            mu: z(),
        }
    }
}

impl DeformationPoint<MPoly> {
    pub fn symbolic() -> Self {
        DeformationPoint {
            alpha: var(Var::ALPHA),
            beta: var(Var::BETA),
            gamma: var(Var::GAMMA),
            delta: var(Var::DELTA),
            epsilon: var(Var::EPSILON),
            lambda: var(Var::LAMBDA),
            mu: var(Var::MU),
        }
    }
}

/// `(det z₁, det z₂) = (−a² − bc, −d² − ef)`.
pub fn adjoint_quotient<R: Ring>(z: &GElem<R>) -> (R, R) {
    (z.first().det(), z.second().det())
}

/// `(−a² − bc + 4αe, −d² − ef + 4βb)`.
pub fn deformed_adjoint_quotient<R: Ring>(z: &GElem<R>, alpha: &R, beta: &R) -> (R, R) {
    let four = R::from_int(4);
    (
        -(z.a.clone() * z.a.clone()) - z.b.clone() * z.c.clone()
            + four.clone() * alpha.clone() * z.e.clone(),
        -(z.d.clone() * z.d.clone()) - z.e.clone() * z.f.clone()
            + four * beta.clone() * z.b.clone(),
    )
}

fn x_infinity<R: Ring>() -> Mat2<R> {
    nilpotent_normal_form(&Coord::Infinity)
}

/// The same map from its definition
/// `(det z₁ + α⟨z, (0, x_∞)⟩, det z₂ + β⟨z, (y_∞, 0)⟩)`.
pub fn deformed_adjoint_quotient_killing<R: Ring>(z: &GElem<R>, alpha: &R, beta: &R) -> (R, R) {
    let zero = Mat2::<R>::zero();
    let x_inf = GElem::from_mats(&zero, &x_infinity()).expect("trace zero");
    let y_inf = GElem::from_mats(&x_infinity(), &zero).expect("trace zero");
    let (d1, d2) = adjoint_quotient(z);
    (
        d1 + alpha.clone() * killing_form(z, &x_inf),
        d2 + beta.clone() * killing_form(z, &y_inf),
    )
}

/// `(2a + 2γa + 2pd − p²e + f − δ, 2qa − q²b + 2d + c − ε)`.
pub fn slice_residuals_closed<R: Ring>(
    z: &GElem<R>,
    p: &R,
    q: &R,
    gamma: &R,
    delta: &R,
    epsilon: &R,
) -> (R, R) {
    let two = R::from_int(2);
    (
        two.clone() * z.a.clone()
            + two.clone() * gamma.clone() * z.a.clone()
            + two.clone() * p.clone() * z.d.clone()
            - p.clone() * p.clone() * z.e.clone()
            + z.f.clone()
            - delta.clone(),
        two.clone() * q.clone() * z.a.clone() - q.clone() * q.clone() * z.b.clone()
            + two * z.d.clone()
            + z.c.clone()
            - epsilon.clone(),
    )
}

/// The defining equations `⟨z, x⟩ + γ⟨z, (x_s, 0)⟩ − 4δ` and `⟨z, y⟩ − 4ε`,
/// divided by 4 so that they are comparable with the closed form.
pub fn slice_residuals_killing<R: Ring>(
    z: &GElem<R>,
    p: &R,
    q: &R,
    gamma: &R,
    delta: &R,
    epsilon: &R,
) -> (R, R) {
    let spec = SliceSpec::finite(p.clone(), q.clone());
    let (x, y) = crate::slice::normal_form_pair(&spec);
    let xs = GElem::from_mats(&x.first(), &Mat2::zero()).expect("trace zero");
    let four = R::from_int(4);
    let quarter = crate::algebra::ratio(1, 4);
    (
        (killing_form(z, &x) + gamma.clone() * killing_form(z, &xs) - four.clone() * delta.clone())
            .scale(&quarter),
        (killing_form(z, &y) - four * epsilon.clone()).scale(&quarter),
    )
}

/// Residuals of the deformed slice equations at `z`; both vanish exactly when
/// `z` lies on the deformed slice.
pub fn deformed_slice_residuals(
    z: &GElem,
    spec: &SliceSpec,
    gamma: &Scalar,
    delta: &Scalar,
    epsilon: &Scalar,
) -> Result<(Scalar, Scalar)> {
    let (p, q) = spec.pq()?;
    Ok(slice_residuals_closed(z, &p, &q, gamma, delta, epsilon))
}

fn total_space_in(p: &MPoly, q: &MPoly, pt: &DeformationPoint<MPoly>) -> (MPoly, MPoly) {
    let (g1, g2) = g_pair(p, q);
    let (a, b, e) = (var(Var::A), var(Var::B), var(Var::E));
    let h1 = g1 - &(&n(4) * &pt.alpha) * &e + &pt.epsilon * &b + pt.lambda.clone();
    let h2 = g2 - &(&n(4) * &pt.beta) * &b - &(&n(2) * &pt.gamma) * &(&a * &e)
        + &pt.delta * &e
        + pt.mu.clone();
    (h1, h2)
}

/// Fiber equations `(h₁, h₂)` of the family over `point`:
/// `h₁ = g₁ − 4αe + εb + λ`, `h₂ = g₂ − 4βb − 2γae + δe + μ`.
pub fn total_space_equations(spec: &SliceSpec, point: &DeformationPoint) -> Result<(MPoly, MPoly)> {
    let (p, q) = admissible_params(spec)?;
    let pt = DeformationPoint {
        alpha: MPoly::constant(point.alpha.clone()),
        beta: MPoly::constant(point.beta.clone()),
        gamma: MPoly::constant(point.gamma.clone()),
        delta: MPoly::constant(point.delta.clone()),
        epsilon: MPoly::constant(point.epsilon.clone()),
        lambda: MPoly::constant(point.lambda.clone()),
        mu: MPoly::constant(point.mu.clone()),
    };
    Ok(total_space_in(&p, &q, &pt))
}

/// `(h₁, h₂)` with `p, q` and all seven deformation parameters symbolic.
pub fn total_space_equations_symbolic() -> (MPoly, MPoly) {
    let (p, q) = symbolic_params();
    total_space_in(&p, &q, &DeformationPoint::symbolic())
}

fn symbolic_z() -> GElem<MPoly> {
    GElem::new(
        var(Var::A),
        var(Var::B),
        var(Var::C),
        var(Var::D),
        var(Var::E),
        var(Var::F),
    )
}

/// The fiber `f_(α,β)(z) = (λ′, μ′)` of the deformed adjoint quotient over the
/// deformed slice, after solving the slice equations for `f` and `c`. Both
/// maps are taken from their Killing-form definitions. Returns
/// `f_(α,β)(z) − (λ′, μ′)` as polynomials in `a, b, d, e` and the parameters.
pub fn elimination_fiber_equations(
    lambda_prime: &MPoly,
    mu_prime: &MPoly,
) -> Result<(MPoly, MPoly)> {
    let (p, q) = symbolic_params();
    let pt = DeformationPoint::symbolic();
    let z = symbolic_z();
    let (r1, r2) = slice_residuals_killing(&z, &p, &q, &pt.gamma, &pt.delta, &pt.epsilon);
    // Each residual is monic linear in the eliminated coordinate.
    if r1.coefficients_in(Var::F).get(1) != Some(&MPoly::one()) || r1.degree_in(Var::F) != Some(1) {
        return Err(Error::InvalidArgument(
            "slice equation is not solvable for f".into(),
        ));
    }
    if r2.coefficients_in(Var::C).get(1) != Some(&MPoly::one()) || r2.degree_in(Var::C) != Some(1) {
        return Err(Error::InvalidArgument(
            "slice equation is not solvable for c".into(),
        ));
    }
    let f_sol = &var(Var::F) - &r1;
    let c_sol = &var(Var::C) - &r2;
    let (f1, f2) = deformed_adjoint_quotient_killing(&z, &pt.alpha, &pt.beta);
    let eliminate = |m: MPoly| m.substitute(Var::F, &f_sol).substitute(Var::C, &c_sol);
    Ok((
        eliminate(f1 - lambda_prime.clone()),
        eliminate(f2 - mu_prime.clone()),
    ))
}

/// Whether `a = c·b` for some nonzero rational `c`.
pub fn proportional(a: &MPoly, b: &MPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let (m, cb) = b.leading_term().expect("nonzero");
    let c = a.coefficient(m) / cb;
    !c.is_zero() && *a == b.scale(&c)
}

fn check_m(m: u32) -> Result<()> {
    if !(1..=10_000).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "m = {m} must lie in [1, 10000]"
        )));
    }
    Ok(())
}

/// `BW(m) = 2^{m−1}(m² − m + 2) − 1`.
pub fn bw_sequence(m: u32) -> Result<BigInt> {
    check_m(m)?;
    let m_big = BigInt::from(m);
    Ok((BigInt::one() << (m - 1)) * (&m_big * &m_big - &m_big + 2) - 1)
}

/// `Σ_{i=3}^{m+2} C(m+2, i)·C(i−1, 2)`.
pub fn bw_binomial_sum(m: u32) -> Result<BigInt> {
    check_m(m)?;
    let top = BigInt::from(m + 2);
    Ok((3..=m + 2)
        .map(|i| {
            binomial(top.clone(), BigInt::from(i)) * binomial(BigInt::from(i - 1), BigInt::from(2))
        })
        .sum())
}

/// `(2m − 1)(m + 2)`.
pub fn aff_dimension(m: u32) -> Result<u64> {
    check_m(m)?;
    let m = u64::from(m);
    Ok((2 * m - 1) * (m + 2))
}

/// `dim Grass(dim 𝔤_m + 1, m + 2) = (m + 2)((3m + 1) − (m + 2))`.
pub fn aff_dimension_grassmannian(m: u32) -> Result<u64> {
    check_m(m)?;
    let m = u64::from(m);
    let (k, total) = (m + 2, 3 * m + 1);
    Ok(k * (total - k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};
    use crate::slice::variety_equations;

    fn pair(f: MPoly, s: MPoly) -> PolyVecPair {
        PolyVecPair::new(f, s)
    }

    #[test]
    fn generators_match_display() {
        let v = jacobian_generators_symbolic();
        let (p, q) = symbolic_params();
        let (a, b, d, e) = (var(Var::A), var(Var::B), var(Var::D), var(Var::E));
        assert_eq!(v[4], pair(&a - &(&q * &b), -e.clone()));
        assert_eq!(
            v[5],
            pair(&q * &a - &(&q * &q) * &b + d.clone(), MPoly::zero())
        );
        assert_eq!(
            v[7],
            pair(MPoly::zero(), a.clone() + &p * &d - &(&p * &p) * &e)
        );
        let v0 = jacobian_generators(&SliceSpec::from_ints(0, 0)).unwrap();
        assert_eq!(v0[7], pair(MPoly::zero(), a));
    }

    #[test]
    fn symbolic_relations_hold() {
        let report = derived_relations_symbolic();
        assert_eq!(report.vectors.len(), 18);
        assert!(report.all_hold(), "failed: {:?}", report.failures());
        let d = var(Var::D);
        let e = var(Var::E);
        assert_eq!(report.v(17), &pair(MPoly::zero(), &(&d * &d) * &e));
    }

    #[test]
    fn relations_at_one_one() {
        let r = derived_relations(&SliceSpec::from_ints(1, 1)).unwrap();
        let (d, e) = (var(Var::D), var(Var::E));
        let ee = &e * &e;
        assert_eq!(
            r.v(11),
            &pair(ee.clone(), -(&n(3) * &(&d * &e)) + &n(2) * &ee)
        );
        assert!(r.all_hold());
        assert!(matches!(
            derived_relations(&SliceSpec::finite(ratio(1, 2), ratio(1, 2))),
            Err(Error::DegenerateSlice(_))
        ));
    }

    #[test]
    fn basis_shape() {
        let basis = t1_basis(&SliceSpec::from_ints(1, 1)).unwrap();
        assert_eq!(basis.len(), 7);
        for v in &basis.elements {
            let (f, s) = v.as_polys().unwrap();
            assert!(f.total_degree().unwrap_or(0) <= 2 && s.total_degree().unwrap_or(0) <= 2);
        }
        assert!(t1_basis(&SliceSpec::from_ints(0, 3)).is_err());
    }

    #[test]
    fn truncated_dimension() {
        let spec = SliceSpec::from_ints(1, 1);
        assert_eq!(t1_dimension_truncated(&spec, 5).unwrap(), 7);
        assert_eq!(t1_dimension_truncated(&spec, 6).unwrap(), 7);
        assert_eq!(
            t1_dimension_truncated(&SliceSpec::finite(int(2), ratio(1, 3)), 5).unwrap(),
            7
        );
        assert!(t1_dimension_truncated(&spec, 2).is_err());
    }

    #[test]
    fn adjoint_quotient_examples() {
        let h = GElem::new(int(1), int(0), int(0), int(1), int(0), int(0));
        assert_eq!(adjoint_quotient(&h), (int(-1), int(-1)));
        let nil = GElem::new(int(0), int(1), int(0), int(2), int(-4), int(1));
        assert_eq!(adjoint_quotient(&nil), (int(0), int(0)));
        let z = GElem::zero();
        assert_eq!(
            deformed_adjoint_quotient(&z, &int(1), &int(1)),
            (int(0), int(0))
        );
        let w = GElem::new(int(3), int(0), int(5), int(-2), int(0), int(7));
        assert_eq!(
            deformed_adjoint_quotient(&w, &int(9), &int(-4)),
            adjoint_quotient(&w)
        );
    }

    #[test]
    fn deformed_maps_agree_with_definitions() {
        let z = symbolic_z();
        let pt = DeformationPoint::symbolic();
        assert_eq!(
            deformed_adjoint_quotient(&z, &pt.alpha, &pt.beta),
            deformed_adjoint_quotient_killing(&z, &pt.alpha, &pt.beta)
        );
        let (p, q) = symbolic_params();
        assert_eq!(
            slice_residuals_closed(&z, &p, &q, &pt.gamma, &pt.delta, &pt.epsilon),
            slice_residuals_killing(&z, &p, &q, &pt.gamma, &pt.delta, &pt.epsilon)
        );
    }

    #[test]
    fn slice_residual_examples() {
        let spec = SliceSpec::from_ints(2, 3);
        let z0 = GElem::zero();
        let r = deformed_slice_residuals(&z0, &spec, &int(0), &int(1), &int(0)).unwrap();
        assert_eq!(r, (int(-1), int(0)));
        // b and e free, a = d = 0, f = p²e, c = q²b on the undeformed slice.
        let z = GElem::new(int(0), int(5), int(45), int(0), int(7), int(28));
        let r = deformed_slice_residuals(&z, &spec, &int(0), &int(0), &int(0)).unwrap();
        assert_eq!(r, (int(0), int(0)));
    }

    #[test]
    fn central_fiber_and_elimination() {
        let spec = SliceSpec::finite(ratio(3, 2), int(-1));
        let h = total_space_equations(&spec, &DeformationPoint::zero()).unwrap();
        assert_eq!(h, variety_equations(&spec).unwrap());

        let (h1, h2) = total_space_equations_symbolic();
        let pt = DeformationPoint::symbolic();
        let (f1, f2) = elimination_fiber_equations(&pt.lambda, &pt.mu).unwrap();
        assert_eq!(f1, -h1);
        assert_eq!(f2, -h2);
    }

    #[test]
    fn bw_examples() {
        assert_eq!(bw_sequence(1).unwrap(), BigInt::from(1));
        assert_eq!(bw_sequence(2).unwrap(), BigInt::from(7));
        assert_eq!(bw_sequence(3).unwrap(), BigInt::from(31));
        for m in 1..=20 {
            assert_eq!(bw_sequence(m).unwrap(), bw_binomial_sum(m).unwrap());
        }
        assert!(bw_sequence(0).is_err());
        assert!(bw_sequence(10_001).is_err());
        assert_eq!(aff_dimension(2).unwrap(), 12);
        assert_eq!(aff_dimension(1).unwrap(), 3);
        for m in 1..=50 {
            assert_eq!(
                aff_dimension(m).unwrap(),
                aff_dimension_grassmannian(m).unwrap()
            );
        }
    }

    #[test]
    fn proportionality() {
        let a = var(Var::A);
        assert!(proportional(&(&n(3) * &a), &a));
        assert!(!proportional(&(&a + &n(1)), &a));
        assert!(proportional(&MPoly::zero(), &MPoly::zero()));
    }
}
