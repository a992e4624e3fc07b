//! Floating-point complex oracles.
//!
//! These back up the exact layer where the constructions need eigenvalues or
//! square roots: the cross-ratio form of j, orthogonal diagonalization of
//! complex symmetric matrices, isotropic eigenvectors, and inverting the
//! j-map of the slice family.

use num_complex::Complex64;

use crate::algebra::Ring;
use crate::error::{Error, Result};
use crate::matrix::{char_poly4, Mat4};

pub type CNum = Complex64;

/// Tolerances shared by the numeric routines.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Residual / isotropy threshold.
    pub tol: f64,
    /// Relative separation below which two eigenvalues count as coincident.
    pub sep: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            tol: 1e-8,
            sep: 1e-8,
        }
    }
}

fn c(re: f64) -> CNum {
    CNum::new(re, 0.0)
}

fn finite(z: CNum) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Eigenvalues of an upper Hessenberg matrix by single-shift complex QR
/// with Wilkinson shifts, working on the trailing unreduced block.
fn hessenberg_eigenvalues(mut h: Vec<Vec<CNum>>) -> Result<Vec<CNum>> {
    let mut n = h.len();
    let mut eig = Vec::with_capacity(n);
    let mut iter = 0;
    while n > 0 {
        if n == 1 {
            eig.push(h[0][0]);
            break;
        }
        // Start of the trailing unreduced block.
        let mut l = n - 1;
        while l > 0 {
            let scale = h[l][l].norm() + h[l - 1][l - 1].norm();
            if h[l][l - 1].norm() <= f64::EPSILON * scale.max(f64::MIN_POSITIVE) {
                h[l][l - 1] = c(0.0);
                break;
            }
            l -= 1;
        }
        if l == n - 1 {
            eig.push(h[n - 1][n - 1]);
            n -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        if iter > 500 {
            return Err(Error::PolishingDiverged(
                "QR iteration did not converge".into(),
            ));
        }
        let (a, b, cc, d) = (
            h[n - 2][n - 2],
            h[n - 2][n - 1],
            h[n - 1][n - 2],
            h[n - 1][n - 1],
        );
        let mut shift = if iter % 11 == 0 {
            // Exceptional shift to break cycles.
            d + c(0.75) * h[n - 1][n - 2].norm()
        } else {
            let half = (a - d) * 0.5;
            let disc = (half * half + b * cc).sqrt();
            let (m1, m2) = ((a + d) * 0.5 + disc, (a + d) * 0.5 - disc);
            if (m1 - d).norm() < (m2 - d).norm() {
                m1
            } else {
                m2
            }
        };
        if !finite(shift) {
            shift = d;
        }
        for i in l..n {
            h[i][i] -= shift;
        }
        let mut rots = Vec::with_capacity(n - l);
        for k in l..n - 1 {
            let (x, y) = (h[k][k], h[k + 1][k]);
            let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
            if r == 0.0 {
                rots.push((c(1.0), c(0.0)));
                continue;
            }
            let (cs, sn) = (x / r, y / r);
            for j in l..n {
                let (u, w) = (h[k][j], h[k + 1][j]);
                h[k][j] = cs.conj() * u + sn.conj() * w;
                h[k + 1][j] = -sn * u + cs * w;
            }
            rots.push((cs, sn));
        }
        for (k, (cs, sn)) in (l..n - 1).zip(rots) {
            for i in l..n {
                let (u, w) = (h[i][k], h[i][k + 1]);
                h[i][k] = u * cs + w * sn;
                h[i][k + 1] = -u * sn.conj() + w * cs.conj();
            }
        }
        for i in l..n {
            h[i][i] += shift;
        }
    }
    Ok(eig)
}

fn horner(coeffs: &[CNum], x: CNum) -> (CNum, CNum) {
    let mut p = c(0.0);
    let mut dp = c(0.0);
    for &a in coeffs {
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp)
}

fn polish(coeffs: &[CNum], mut r: CNum) -> CNum {
    let mut best = horner(coeffs, r).0.norm();
    for _ in 0..60 {
        let (p, dp) = horner(coeffs, r);
        if p.norm() == 0.0 || dp.norm() == 0.0 {
            break;
        }
        let next = r - p / dp;
        let val = horner(coeffs, next).0.norm();
        if val.is_nan() || val >= best {
            break;
        }
        best = val;
        let step = (next - r).norm();
        r = next;
        if step <= f64::EPSILON * r.norm() {
            break;
        }
    }
    r
}

/// All roots of `Σ coeffs[i] t^{n−i}` (leading coefficient first) from the
/// eigenvalues of the companion matrix, each refined by Newton's method.
/// Each root satisfies `|P(r)| ≤ 1e−10 · (1 + max|aᵢ|)` or, for large roots,
/// the relative bound `|P(r)| ≤ 1e−10 · Σ|aᵢ||r|^{n−i}`.
pub fn poly_roots(coeffs: &[CNum]) -> Result<Vec<CNum>> {
    let lead = *coeffs
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty coefficient list".into()))?;
    if lead.norm() == 0.0 {
        return Err(Error::InvalidArgument("leading coefficient is zero".into()));
    }
    if !coeffs.iter().all(|z| finite(*z)) {
        return Err(Error::InvalidArgument("non-finite coefficient".into()));
    }
    let monic: Vec<CNum> = coeffs.iter().map(|z| z / lead).collect();
    let n = monic.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut comp = vec![vec![c(0.0); n]; n];
    for j in 0..n {
        comp[0][j] = -monic[j + 1];
    }
    for i in 1..n {
        comp[i][i - 1] = c(1.0);
    }
    let raw = hessenberg_eigenvalues(comp)?;
    let abs_coeffs: Vec<CNum> = monic.iter().map(|z| c(z.norm())).collect();
    let absolute = 1e-10 * (1.0 + abs_coeffs.iter().map(|z| z.re).fold(0.0, f64::max));
    let mut roots = Vec::with_capacity(n);
    for r in raw {
        let r = polish(&monic, r);
        let res = horner(&monic, r).0.norm();
        let bound = absolute.max(1e-10 * horner(&abs_coeffs, c(r.norm())).0.re);
        if !finite(r) || res > bound {
            return Err(Error::PolishingDiverged(format!(
                "|P(r)| = {res:e} at r = {r}"
            )));
        }
        roots.push(r);
    }
    roots.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    Ok(roots)
}

/// Roots of `t⁴ − a t³ + b t² − c t + d`, each with
/// `|P(r)| ≤ 1e−10 · (1 + max|coefficient|)`.
pub fn quartic_roots(a: CNum, b: CNum, cc: CNum, d: CNum) -> Result<[CNum; 4]> {
    let coeffs = [c(1.0), -a, b, -cc, d];
    let roots = poly_roots(&coeffs)?;
    let bound = 1e-10 * (1.0 + coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max));
    for r in &roots {
        let res = horner(&coeffs, *r).0.norm();
        if res > bound {
            return Err(Error::PolishingDiverged(format!(
                "|P(r)| = {res:e} at r = {r}"
            )));
        }
    }
    Ok([roots[0], roots[1], roots[2], roots[3]])
}

fn check_separated(l: &[CNum], sep: f64) -> Result<()> {
    let scale = l.iter().map(|z| z.norm()).fold(1.0, f64::max);
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            if (l[i] - l[j]).norm() < sep * scale {
                return Err(Error::CoincidentEigenvalues(format!(
                    "{} and {}",
                    l[i], l[j]
                )));
            }
        }
    }
    Ok(())
}

/// `2⁸(N² − MN + M²)³ / (M²N²(N − M)²)` with `M = (λ₁ − λ₃)/(λ₀ − λ₃)` and
/// `N = (λ₁ − λ₂)/(λ₀ − λ₂)`.
pub fn j_from_eigenvalues(l: [CNum; 4], sep: f64) -> Result<CNum> {
    check_separated(&l, sep)?;
    let m = (l[1] - l[3]) / (l[0] - l[3]);
    let n = (l[1] - l[2]) / (l[0] - l[2]);
    let num = (n * n - m * n + m * m).powu(3);
    let den = m * m * n * n * (n - m) * (n - m);
    let j = c(256.0) * num / den;
    if !finite(j) {
        return Err(Error::CoincidentEigenvalues(
            "degenerate cross-ratio".into(),
        ));
    }
    Ok(j)
}

/// j of `S_(I₄, A)` through eigenvalues of `A`.
pub fn j_numeric(a: &Mat4<CNum>, sep: f64) -> Result<CNum> {
    let cp = char_poly4(a);
    j_from_eigenvalues(quartic_roots(cp.c1, cp.c2, cp.c3, cp.c4)?, sep)
}

type Vec4 = [CNum; 4];

fn bilinear(v: &Vec4, w: &Vec4) -> CNum {
    v.iter().zip(w).map(|(x, y)| x * y).sum()
}

/// Unit Hermitian norm, with the largest entry made real and positive.
fn hermitian_normalize(v: &Vec4) -> Vec4 {
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let lead = v
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(c(1.0));
    let phase = if lead.norm() > 0.0 {
        lead.conj() / lead.norm()
    } else {
        c(1.0)
    };
    v.map(|z| z * phase / n)
}

fn max_abs(m: &Mat4<CNum>) -> f64 {
    m.rows()
        .iter()
        .flatten()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Kernel basis of `m` by Gaussian elimination with complete pivoting,
/// treating pivots below `tol` as zero.
fn kernel(m: &Mat4<CNum>, tol: f64) -> Vec<Vec4> {
    let mut a: Vec<Vec<CNum>> = m.rows().iter().map(|r| r.to_vec()).collect();
    let mut cols: Vec<usize> = (0..4).collect();
    let mut rank = 0;
    for k in 0..4 {
        let mut best = (0.0, k, k);
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, z) in row.iter().enumerate().skip(k) {
                if z.norm() > best.0 {
                    best = (z.norm(), i, j);
                }
            }
        }
        if best.0 <= tol {
            break;
        }
        a.swap(k, best.1);
        for row in a.iter_mut() {
            row.swap(k, best.2);
        }
        cols.swap(k, best.2);
        let piv = a[k][k];
        for i in 0..4 {
            if i != k {
                let f = a[i][k] / piv;
                for j in k..4 {
                    let t = a[k][j];
                    a[i][j] -= f * t;
                }
            }
        }
        for j in k..4 {
            a[k][j] /= piv;
        }
        rank += 1;
    }
    (rank..4)
        .map(|free| {
            let mut v = [c(0.0); 4];
            v[cols[free]] = c(1.0);
            for (i, row) in a.iter().enumerate().take(rank) {
                v[cols[i]] = -row[free];
            }
            hermitian_normalize(&v)
        })
        .collect()
}

fn solve(m: &Mat4<CNum>, b: &Vec4) -> Vec4 {
    let mut a: Vec<Vec<CNum>> = m.rows().iter().map(|r| r.to_vec()).collect();
    let mut x = *b;
    let tiny = f64::EPSILON * max_abs(m).max(1.0);
    for k in 0..4 {
        let p = (k..4)
            .max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm()))
            .unwrap();
        a.swap(k, p);
        x.swap(k, p);
        if a[k][k].norm() < tiny {
            a[k][k] = c(tiny);
        }
        for i in k + 1..4 {
            let f = a[i][k] / a[k][k];
            for j in k..4 {
                let t = a[k][j];
                a[i][j] -= f * t;
            }
            let t = x[k];
            x[i] -= f * t;
        }
    }
    for k in (0..4).rev() {
        let s: CNum = (k + 1..4).map(|j| a[k][j] * x[j]).sum();
        x[k] = (x[k] - s) / a[k][k];
    }
    x
}

/// Refine an eigenvector by inverse iteration at a fixed shift.
fn inverse_iteration(a: &Mat4<CNum>, alpha: CNum, seed: Vec4) -> Vec4 {
    let shifted = a - &Mat4::identity().scale(&alpha);
    let mut v = seed;
    for _ in 0..3 {
        let w = solve(&shifted, &v);
        if !w.iter().all(|z| finite(*z)) {
            break;
        }
        v = hermitian_normalize(&w);
    }
    v
}

/// Eigenvalues grouped into clusters of coincident values, each with the
/// cluster mean and multiplicity.
fn eigen_clusters(a: &Mat4<CNum>, sep: f64) -> Result<Vec<(CNum, usize)>> {
    let cp = char_poly4(a);
    let roots = quartic_roots(cp.c1, cp.c2, cp.c3, cp.c4)?;
    let scale = roots.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let mut clusters: Vec<Vec<CNum>> = Vec::new();
    for r in roots {
        match clusters
            .iter_mut()
            .find(|cl| cl.iter().any(|x| (x - r).norm() < sep.sqrt() * scale))
        {
            Some(cl) => cl.push(r),
            None => clusters.push(vec![r]),
        }
    }
    Ok(clusters
        .into_iter()
        .map(|cl| (cl.iter().sum::<CNum>() / cl.len() as f64, cl.len()))
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenpair {
    pub alpha: CNum,
    /// Unit vector in the Hermitian norm.
    pub v: [CNum; 4],
    /// `ᵗvv`.
    pub vtv: CNum,
}

/// Eigenvectors of `a`: one per simple eigenvalue (refined by inverse
/// iteration), a kernel basis of `a − αI` for coincident ones.
pub fn eigenpairs(a: &Mat4<CNum>, tol: Tolerances) -> Result<Vec<Eigenpair>> {
    let scale = max_abs(a).max(1.0);
    let mut out = Vec::new();
    for (alpha, mult) in eigen_clusters(a, tol.sep)? {
        let shifted = a - &Mat4::identity().scale(&alpha);
        let mut basis = kernel(&shifted, tol.tol * scale);
        if basis.is_empty() {
            // Rounding hid the kernel; fall back to the weakest direction.
            basis = kernel(&shifted, f64::INFINITY);
            basis.truncate(1);
        }
        if mult == 1 {
            basis = vec![inverse_iteration(a, alpha, basis[0])];
        }
        for v in basis {
            out.push(Eigenpair {
                alpha,
                vtv: bilinear(&v, &v),
                v,
            });
        }
    }
    Ok(out)
}

/// Orthonormalize `vs` for the complex bilinear form `ᵗvw`: each step picks
/// a non-isotropic combination (a vector itself, or a sum of two vectors
/// pairing nontrivially), scales it by `1/√(ᵗvv)` and projects it out.
fn bilinear_orthonormalize(mut vs: Vec<Vec4>, tol: f64) -> Result<Vec<Vec4>> {
    let mut out = Vec::new();
    while !vs.is_empty() {
        let (i, best) = vs
            .iter()
            .enumerate()
            .map(|(i, v)| (i, bilinear(v, v).norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty");
        if best <= tol && vs.len() > 1 {
            let pair = (0..vs.len())
                .flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j)))
                .max_by(|&(a, b), &(x, y)| {
                    bilinear(&vs[a], &vs[b])
                        .norm()
                        .total_cmp(&bilinear(&vs[x], &vs[y]).norm())
                });
            if let Some((a, b)) = pair {
                if bilinear(&vs[a], &vs[b]).norm() > tol {
                    let sum: Vec4 = std::array::from_fn(|k| vs[a][k] + vs[b][k]);
                    vs[a] = sum;
                    continue;
                }
            }
        }
        let v = vs.remove(i);
        let r = bilinear(&v, &v);
        if r.norm() <= tol {
            return Err(Error::CoincidentEigenvalues(
                "eigenspace is degenerate for the bilinear form".into(),
            ));
        }
        let u = v.map(|z| z / r.sqrt());
        for w in vs.iter_mut() {
            let k = bilinear(&u, w);
            for (x, y) in w.iter_mut().zip(&u) {
                *x -= k * y;
            }
        }
        out.push(u);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalDiagonalization {
    pub q: Mat4<CNum>,
    pub diagonal: [CNum; 4],
    /// `max |ᵗQQ − I|`.
    pub orthogonality_residual: f64,
    /// `max |ᵗQXQ − diag|`.
    pub diagonal_residual: f64,
}

/// `Q` with `ᵗQQ = I` and `ᵗQXQ` diagonal, from the eigenvector matrix `R`
/// corrected blockwise so that `ᵗRR` becomes the identity.
pub fn orthogonal_diagonalize(
    x: &Mat4<CNum>,
    tol: Tolerances,
) -> Result<OrthogonalDiagonalization> {
    if !x.rows().iter().flatten().all(|z| finite(*z)) {
        return Err(Error::InvalidArgument("non-finite entry".into()));
    }
    for i in 0..4 {
        for j in 0..i {
            if (x.get(i, j) - x.get(j, i)).norm() > tol.tol * max_abs(x).max(1.0) {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let scale = max_abs(x).max(1.0);
    let mut columns = Vec::new();
    let mut diagonal = Vec::new();
    for (alpha, mult) in eigen_clusters(x, tol.sep)? {
        let shifted = x - &Mat4::identity().scale(&alpha);
        let mut basis = kernel(&shifted, tol.tol * scale);
        if basis.len() != mult {
            return Err(Error::CoincidentEigenvalues(format!(
                "eigenvalue {alpha} has multiplicity {mult} but a {}-dimensional eigenspace",
                basis.len()
            )));
        }
        if mult == 1 {
            basis = vec![inverse_iteration(x, alpha, basis[0])];
        }
        for u in bilinear_orthonormalize(basis, tol.tol)? {
            columns.push(u);
            diagonal.push(alpha);
        }
    }
    let q = Mat4::from_fn(|i, j| columns[j][i]);
    let d: [CNum; 4] = std::array::from_fn(|i| diagonal[i]);
    let orth = &q.transpose() * &q;
    let orthogonality_residual = max_abs(&(&orth - &Mat4::identity()));
    let conj = x.congruence(&q);
    let diagonal_residual = max_abs(&(&conj - &Mat4::diag(d)));
    Ok(OrthogonalDiagonalization {
        q,
        diagonal: d,
        orthogonality_residual,
        diagonal_residual,
    })
}

/// Numeric normal form `ᵗPXP = diag(1, …, 1, 0, …, 0)` for a symmetric
/// matrix; returns `P` and the rank.
pub fn unit_congruence_form(x: &Mat4<CNum>, tol: f64) -> Result<(Mat4<CNum>, usize)> {
    let scale = max_abs(x).max(1.0);
    let standard: Vec<Vec4> = (0..4)
        .map(|i| std::array::from_fn(|k| if k == i { c(1.0) } else { c(0.0) }))
        .collect();
    // Orthonormalize the standard basis for the form ᵗuXv.
    let form = |u: &Vec4, v: &Vec4| bilinear(u, &x.mul_vec(v));
    let mut pending = standard;
    let mut cols: Vec<Vec4> = Vec::new();
    while !pending.is_empty() {
        let (i, best) = pending
            .iter()
            .enumerate()
            .map(|(i, v)| (i, form(v, v).norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty");
        if best <= tol * scale {
            let pair = (0..pending.len())
                .flat_map(|i| (i + 1..pending.len()).map(move |j| (i, j)))
                .find(|&(a, b)| form(&pending[a], &pending[b]).norm() > tol * scale);
            match pair {
                Some((a, b)) => {
                    pending[a] = std::array::from_fn(|k| pending[a][k] + pending[b][k]);
                    continue;
                }
                None => break,
            }
        }
        let v = pending.remove(i);
        let u = v.map(|z| z / form(&v, &v).sqrt());
        for w in pending.iter_mut() {
            let k = form(&u, w);
            for (a, b) in w.iter_mut().zip(&u) {
                *a -= k * b;
            }
        }
        cols.push(u);
    }
    let rank = cols.len();
    cols.extend(pending);
    Ok((Mat4::from_fn(|i, j| cols[j][i]), rank))
}

/// Eigenpairs of `a` together with those whose eigenvector is isotropic
/// (`|ᵗvv| ≤ tol`): the singular directions of `S_(I₄, A)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularLocusProbe {
    pub eigenpairs: Vec<Eigenpair>,
    pub singular: Vec<Eigenpair>,
}

pub fn singular_locus_probe(a: &Mat4<CNum>, tol: Tolerances) -> Result<SingularLocusProbe> {
    let eigenpairs = eigenpairs(a, tol)?;
    let singular = eigenpairs
        .iter()
        .filter(|e| e.vtv.norm() <= tol.tol)
        .cloned()
        .collect();
    Ok(SingularLocusProbe {
        eigenpairs,
        singular,
    })
}

/// `256(t⁶ − 12t⁵ + 51t⁴ − 88t³ + 51t² − 12t + 1) / (t⁴(1 − 4t))` in floating
/// point.
pub fn j_of_t_numeric(t: CNum) -> CNum {
    let num = horner(&[1.0, -12.0, 51.0, -88.0, 51.0, -12.0, 1.0].map(c), t).0;
    c(256.0) * num / (t.powu(4) * (c(1.0) - t * 4.0))
}

#[derive(Clone, Debug, PartialEq)]
pub struct JSolution {
    pub t: CNum,
    /// `|j(t) − target| / (1 + |target|)`.
    pub relative_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JSolveReport {
    pub roots: Vec<JSolution>,
    /// Roots of the sextic at `t = 0` or `t = 1/4`, which are excluded.
    pub filtered: Vec<CNum>,
}

/// All `t` with `j(t) = target`, from the roots of
/// `256(t⁶ − …) − target·t⁴(1 − 4t)`.
pub fn solve_j_target(target: CNum, tol: f64) -> Result<JSolveReport> {
    let coeffs = [
        c(256.0),
        c(-3072.0) + target * 4.0,
        c(13056.0) - target,
        c(-22528.0),
        c(13056.0),
        c(-3072.0),
        c(256.0),
    ];
    let mut roots = Vec::new();
    let mut filtered = Vec::new();
    for t in poly_roots(&coeffs)? {
        if t.norm() <= tol || (t - c(0.25)).norm() <= tol {
            filtered.push(t);
            continue;
        }
        let relative_error = (j_of_t_numeric(t) - target).norm() / (1.0 + target.norm());
        roots.push(JSolution { t, relative_error });
    }
    Ok(JSolveReport { roots, filtered })
}

pub fn to_complex(m: &Mat4<crate::algebra::Scalar>) -> Mat4<CNum> {
    m.map(CNum::from_rational)
}
