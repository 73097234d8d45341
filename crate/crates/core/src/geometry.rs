//! Floating-point verification of the explicit contactomorphism from the
//! one-jet space of the circle to the complement of a Hopf fibre in the
//! three-sphere: the defining formula, its pullback identity, the two
//! auxiliary coordinate changes, the pushforward of the fibre direction, and
//! Gauss linking integrals for the core unknot and Hopf fibres.
//!
//! Angle convention: the circle coordinate `q` is stored in [0, 1) and scaled
//! by 2 pi at trigonometric call sites. Tangent vectors are expressed in the
//! `(theta, p, z)` basis where `theta` is the angle itself.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const TAU: f64 = std::f64::consts::TAU;

/// Residual tolerance for the exact differential-geometric identities.
pub const TOL_IDENTITY: f64 = 1e-10;
/// Tolerance for the unit-sphere constraint on the map itself.
pub const TOL_SPHERE: f64 = 1e-12;
/// Agreement required between the analytic Jacobian and central differences.
pub const TOL_JACOBIAN_FD: f64 = 1e-6;
/// Linking estimates must round to an integer within this distance.
pub const TOL_LINKING: f64 = 0.05;
/// Curves closer than this are rejected by the linking integral.
pub const MIN_SEPARATION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3Jet {
    /// Circle coordinate in [0, 1); the angle is 2 pi q.
    pub q: f64,
    pub p: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point4Sphere {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
}

impl Point4Sphere {
    pub fn as_array(&self) -> [f64; 4] {
        [self.x1, self.y1, self.x2, self.y2]
    }

    pub fn norm(&self) -> f64 {
        self.as_array().iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// The contactomorphism: `f(q, p, z) = lambda (p/2 sin - z cos, cos, sin,
/// p/2 cos + z sin)` with `lambda = 1/sqrt(1 + p^2/4 + z^2)` and the angle
/// `2 pi q` in the trigonometric functions. The image avoids the fibre
/// `K0 = {y1 = x2 = 0}`.
pub fn map_f(pt: Point3Jet) -> Point4Sphere {
    let th = TAU * pt.q;
    let (s, c) = th.sin_cos();
    let lambda = 1.0 / (1.0 + pt.p * pt.p / 4.0 + pt.z * pt.z).sqrt();
    Point4Sphere {
        x1: lambda * (pt.p / 2.0 * s - pt.z * c),
        y1: lambda * c,
        x2: lambda * s,
        y2: lambda * (pt.p / 2.0 * c + pt.z * s),
    }
}

/// Analytic Jacobian of `map_f` with respect to `(theta, p, z)`, as four rows
/// of three partial derivatives.
pub fn jacobian_f(pt: Point3Jet) -> [[f64; 3]; 4] {
    let th = TAU * pt.q;
    let (s, c) = th.sin_cos();
    let lam = 1.0 / (1.0 + pt.p * pt.p / 4.0 + pt.z * pt.z).sqrt();
    let lam3 = lam * lam * lam;
    let dl_dp = -(pt.p / 4.0) * lam3;
    let dl_dz = -pt.z * lam3;
    let u = [
        pt.p / 2.0 * s - pt.z * c,
        c,
        s,
        pt.p / 2.0 * c + pt.z * s,
    ];
    let du_dth = [
        pt.p / 2.0 * c + pt.z * s,
        -s,
        c,
        -pt.p / 2.0 * s + pt.z * c,
    ];
    let du_dp = [s / 2.0, 0.0, 0.0, c / 2.0];
    let du_dz = [-c, 0.0, 0.0, s];
    let mut j = [[0.0; 3]; 4];
    for r in 0..4 {
        j[r][0] = lam * du_dth[r];
        j[r][1] = dl_dp * u[r] + lam * du_dp[r];
        j[r][2] = dl_dz * u[r] + lam * du_dz[r];
    }
    j
}

fn mat_vec(j: &[[f64; 3]; 4], v: [f64; 3]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for r in 0..4 {
        out[r] = j[r][0] * v[0] + j[r][1] * v[1] + j[r][2] * v[2];
    }
    out
}

/// The standard contact form `x1 dy1 - y1 dx1 + x2 dy2 - y2 dx2` evaluated on
/// a tangent vector `w` at the point `y`.
fn alpha0(y: [f64; 4], w: [f64; 4]) -> f64 {
    y[0] * w[1] - y[1] * w[0] + y[2] * w[3] - y[3] * w[2]
}

fn lambda_sq(pt: Point3Jet) -> f64 {
    1.0 / (1.0 + pt.p * pt.p / 4.0 + pt.z * pt.z)
}

/// `|alpha0(Df v) - lambda^2 (dz - p dtheta)(v)|` for a tangent vector `v`
/// in the `(theta, p, z)` basis.
pub fn pullback_residual(pt: Point3Jet, v: [f64; 3]) -> f64 {
    let y = map_f(pt).as_array();
    let w = mat_vec(&jacobian_f(pt), v);
    let lhs = alpha0(y, w);
    let rhs = lambda_sq(pt) * (v[2] - pt.p * v[0]);
    (lhs - rhs).abs()
}

/// Frame fields trivializing the standard contact structure.
pub fn frame_e1(y: [f64; 4]) -> [f64; 4] {
    [-y[3], -y[2], y[1], y[0]]
}

pub fn frame_e2(y: [f64; 4]) -> [f64; 4] {
    [y[2], -y[3], -y[0], y[1]]
}

/// `|Df(d/dp) - (lambda^2 / 2)(e2 - z e1)|` at the image point.
pub fn pushforward_dp_residual(pt: Point3Jet) -> f64 {
    let y = map_f(pt).as_array();
    let got = mat_vec(&jacobian_f(pt), [0.0, 1.0, 0.0]);
    let e1 = frame_e1(y);
    let e2 = frame_e2(y);
    let l2 = lambda_sq(pt) / 2.0;
    let mut acc = 0.0;
    for r in 0..4 {
        let want = l2 * (e2[r] - pt.z * e1[r]);
        acc += (got[r] - want) * (got[r] - want);
    }
    acc.sqrt()
}

/// Residual of `dz - p dtheta = cos(2 theta) dx - sin(2 theta) dy` under the
/// chart `p = -2x sin(2 theta) - 2y cos(2 theta)`,
/// `z = x cos(2 theta) - y sin(2 theta)`, on a tangent `(u_theta, u_x, u_y)`.
pub fn coordinate_change_2q_residual(th: f64, x: f64, y: f64, u: [f64; 3]) -> f64 {
    let (s2, c2) = (2.0 * th).sin_cos();
    let p = -2.0 * x * s2 - 2.0 * y * c2;
    let dz = (-2.0 * x * s2 - 2.0 * y * c2) * u[0] + c2 * u[1] - s2 * u[2];
    let lhs = dz - p * u[0];
    let rhs = c2 * u[1] - s2 * u[2];
    (lhs - rhs).abs()
}

/// Residual of `dz - p dtheta = cos(theta) du - sin(theta) dv` under the
/// chart `p = -u sin(theta) - v cos(theta)`, `z = u cos(theta) - v sin(theta)`.
pub fn coordinate_change_uv_residual(th: f64, uu: f64, vv: f64, t: [f64; 3]) -> f64 {
    let (s, c) = th.sin_cos();
    let p = -uu * s - vv * c;
    let dz = (-uu * s - vv * c) * t[0] + c * t[1] - s * t[2];
    let lhs = dz - p * t[0];
    let rhs = c * t[1] - s * t[2];
    (lhs - rhs).abs()
}

/// Central-difference cross-check of the analytic Jacobian.
pub fn jacobian_fd_residual(pt: Point3Jet, step: f64) -> f64 {
    let j = jacobian_f(pt);
    let mut worst = 0.0f64;
    for col in 0..3 {
        let mut plus = pt;
        let mut minus = pt;
        match col {
            // Column 0 differentiates in theta; q is theta / tau.
            0 => {
                plus.q += step / TAU;
                minus.q -= step / TAU;
            }
            1 => {
                plus.p += step;
                minus.p -= step;
            }
            _ => {
                plus.z += step;
                minus.z -= step;
            }
        }
        let fp = map_f(plus).as_array();
        let fm = map_f(minus).as_array();
        for r in 0..4 {
            let fd = (fp[r] - fm[r]) / (2.0 * step);
            worst = worst.max((fd - j[r][col]).abs());
        }
    }
    worst
}

// ---------------------------------------------------------------------------
// Curves, projection, linking

pub type Curve3 = Vec<[f64; 3]>;
pub type Curve4 = Vec<[f64; 4]>;

/// The fibre `K0 = {(cos, 0, 0, sin)}`.
pub fn k0_curve(segments: usize) -> Curve4 {
    (0..segments)
        .map(|i| {
            let t = TAU * (i as f64) / (segments as f64);
            [t.cos(), 0.0, 0.0, t.sin()]
        })
        .collect()
}

/// Contact push-off of the core fibre: `{(cos, cos, -sin, sin)}/sqrt(2)`.
pub fn k0_pushoff_curve(segments: usize) -> Curve4 {
    let r = 0.5f64.sqrt();
    (0..segments)
        .map(|i| {
            let t = TAU * (i as f64) / (segments as f64);
            [r * t.cos(), r * t.cos(), -r * t.sin(), r * t.sin()]
        })
        .collect()
}

/// Image of the horizontal circle through `(p0, z0)`: a Hopf fibre.
pub fn hopf_fibre_curve(p0: f64, z0: f64, segments: usize) -> Curve4 {
    (0..segments)
        .map(|i| {
            map_f(Point3Jet {
                q: (i as f64) / (segments as f64),
                p: p0,
                z: z0,
            })
            .as_array()
        })
        .collect()
}

fn dot4(a: [f64; 4], b: [f64; 4]) -> f64 {
    (0..4).map(|i| a[i] * b[i]).sum()
}

fn det4(m: [[f64; 4]; 4]) -> f64 {
    let mut a = m;
    let mut det = 1.0;
    for col in 0..4 {
        let mut piv = col;
        for r in col + 1..4 {
            if a[r][col].abs() > a[piv][col].abs() {
                piv = r;
            }
        }
        if a[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..4 {
            let f = a[r][col] / a[col][col];
            for c in col..4 {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    det
}

/// Stereographic projection from the pole: coordinates of `x` in an
/// orthonormal basis of the pole's complement, divided by `1 - <x, pole>`.
/// The basis is oriented so the projection respects the orientation of the
/// sphere as the boundary of the ball (linking numbers are preserved, not
/// flipped).
pub fn stereographic_project(curve: &Curve4, pole: [f64; 4]) -> Curve3 {
    // Deterministic orthonormal basis of the orthogonal complement.
    let mut basis: Vec<[f64; 4]> = Vec::new();
    let candidates = [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ];
    for cand in candidates {
        if basis.len() == 3 {
            break;
        }
        let mut v = cand;
        let along = dot4(v, pole);
        for r in 0..4 {
            v[r] -= along * pole[r];
        }
        for b in &basis {
            let along = dot4(v, *b);
            for r in 0..4 {
                v[r] -= along * b[r];
            }
        }
        let n = dot4(v, v).sqrt();
        if n > 1e-8 {
            for r in v.iter_mut() {
                *r /= n;
            }
            basis.push(v);
        }
    }
    // Projection is orientation-compatible at the antipode of the pole when
    // (-pole, e_a, e_b, e_c) is a positive frame of R^4.
    if det4([[-pole[0], -pole[1], -pole[2], -pole[3]], basis[0], basis[1], basis[2]]) < 0.0 {
        for r in 0..4 {
            basis[2][r] = -basis[2][r];
        }
    }
    curve
        .iter()
        .map(|&x| {
            let denom = 1.0 - dot4(x, pole);
            [
                dot4(x, basis[0]) / denom,
                dot4(x, basis[1]) / denom,
                dot4(x, basis[2]) / denom,
            ]
        })
        .collect()
}

/// Default pole with deterministic fallbacks, keeping distance >= 0.3 from
/// both curves.
pub fn choose_pole(curves: &[&Curve4]) -> [f64; 4] {
    let h = 0.5f64.sqrt();
    let candidates: Vec<[f64; 4]> = vec![
        [0.0, -1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, -h, h, 0.0],
        [0.0, h, -h, 0.0],
        [0.0, -h, -h, 0.0],
        [0.0, h, h, 0.0],
        [-h, -h, 0.0, 0.0],
        [h, 0.0, 0.0, h],
    ];
    for cand in &candidates {
        let ok = curves.iter().all(|c| {
            c.iter().all(|&x| {
                let d: f64 = (0..4).map(|i| (x[i] - cand[i]) * (x[i] - cand[i])).sum();
                d.sqrt() >= 0.3
            })
        });
        if ok {
            return *cand;
        }
    }
    // Last resort; the caller's curves cover nearly all of the sphere.
    [0.0, -1.0, 0.0, 0.0]
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LinkingEstimate {
    pub estimate: f64,
    pub rounded: i64,
    pub distance_to_integer: f64,
}

/// Gauss linking integral of two closed polylines, discretized as the double
/// sum over segment midpoints.
pub fn gauss_linking(c1: &Curve3, c2: &Curve3) -> Result<LinkingEstimate> {
    if c1.len() < 3 || c2.len() < 3 {
        return Err(Error::InvalidInput("curves need at least 3 points".into()));
    }
    let mids_and_edges = |c: &Curve3| -> Vec<([f64; 3], [f64; 3])> {
        (0..c.len())
            .map(|i| {
                let a = c[i];
                let b = c[(i + 1) % c.len()];
                (
                    [
                        (a[0] + b[0]) / 2.0,
                        (a[1] + b[1]) / 2.0,
                        (a[2] + b[2]) / 2.0,
                    ],
                    [b[0] - a[0], b[1] - a[1], b[2] - a[2]],
                )
            })
            .collect()
    };
    let e1 = mids_and_edges(c1);
    let e2 = mids_and_edges(c2);
    let min_sep = e1
        .par_iter()
        .map(|(m1, _)| {
            e2.iter()
                .map(|(m2, _)| {
                    let d = [m1[0] - m2[0], m1[1] - m2[1], m1[2] - m2[2]];
                    (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
                })
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| f64::INFINITY, f64::min);
    if min_sep < MIN_SEPARATION {
        return Err(Error::CurvesIntersect {
            min_distance: min_sep,
        });
    }
    let sum: f64 = e1
        .par_iter()
        .map(|(m1, d1)| {
            let mut acc = 0.0;
            for (m2, d2) in &e2 {
                let r = [m1[0] - m2[0], m1[1] - m2[1], m1[2] - m2[2]];
                let cross = [
                    d1[1] * d2[2] - d1[2] * d2[1],
                    d1[2] * d2[0] - d1[0] * d2[2],
                    d1[0] * d2[1] - d1[1] * d2[0],
                ];
                let rn = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
                acc += (r[0] * cross[0] + r[1] * cross[1] + r[2] * cross[2]) / (rn * rn * rn);
            }
            acc
        })
        .sum();
    let estimate = sum / (4.0 * std::f64::consts::PI);
    let rounded = estimate.round() as i64;
    Ok(LinkingEstimate {
        estimate,
        rounded,
        distance_to_integer: (estimate - rounded as f64).abs(),
    })
}

/// Linking number of two Hopf fibres (images of horizontal circles), via
/// stereographic projection and the Gauss integral. Distinct fibres link -1.
pub fn verify_hopf_fibre_linking(
    p0: f64,
    z0: f64,
    p1: f64,
    z1: f64,
    segments: usize,
    pole: Option<[f64; 4]>,
) -> Result<LinkingEstimate> {
    if p0 == p1 && z0 == z1 {
        return Err(Error::CurvesIntersect { min_distance: 0.0 });
    }
    let a = hopf_fibre_curve(p0, z0, segments);
    let b = hopf_fibre_curve(p1, z1, segments);
    let pole = pole.unwrap_or_else(|| choose_pole(&[&a, &b]));
    let pa = stereographic_project(&a, pole);
    let pb = stereographic_project(&b, pole);
    gauss_linking(&pa, &pb)
}

// ---------------------------------------------------------------------------
// Report

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntegerEstimate {
    pub label: String,
    pub estimate: f64,
    pub rounded: i64,
    pub distance_to_integer: f64,
    pub expected: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub samples: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub integer_estimates: Vec<IntegerEstimate>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeometryReport {
    pub seed: u64,
    pub samples: usize,
    pub segments: usize,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
}

fn sample_points(samples: usize, rng: &mut ChaCha8Rng) -> Vec<Point3Jet> {
    (0..samples)
        .map(|_| Point3Jet {
            q: rng.gen_range(0.0..1.0),
            p: rng.gen_range(-10.0..10.0),
            z: rng.gen_range(-10.0..10.0),
        })
        .collect()
}

fn unit3(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v = [
            rng.gen_range(-1.0..1.0f64),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-3 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

fn residual_check(name: &str, residuals: Vec<f64>, tolerance: f64) -> CheckResult {
    let max_residual = residuals.par_iter().cloned().reduce(|| 0.0, f64::max);
    CheckResult {
        name: name.into(),
        samples: residuals.len(),
        max_residual,
        tolerance,
        pass: max_residual < tolerance,
        integer_estimates: Vec::new(),
    }
}

/// Runs the full verification suite. Deterministic for a given seed.
pub fn run_geometry_suite(samples: usize, seed: u64, segments: usize) -> Result<GeometryReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = sample_points(samples, &mut rng);
    let vecs: Vec<[f64; 3]> = (0..samples).map(|_| unit3(&mut rng)).collect();
    let charts: Vec<[f64; 6]> = (0..samples)
        .map(|_| {
            [
                rng.gen_range(0.0..TAU),
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ]
        })
        .collect();

    let mut checks = Vec::new();
    checks.push(residual_check(
        "sphere-constraint",
        pts.par_iter().map(|&p| (map_f(p).norm() - 1.0).abs()).collect(),
        TOL_SPHERE,
    ));
    checks.push(residual_check(
        "pullback-identity",
        pts.par_iter()
            .zip(vecs.par_iter())
            .map(|(&p, &v)| pullback_residual(p, v))
            .collect(),
        TOL_IDENTITY,
    ));
    checks.push(residual_check(
        "coordinate-change-2q",
        charts
            .par_iter()
            .map(|c| coordinate_change_2q_residual(c[0], c[1], c[2], [c[3], c[4], c[5]]))
            .collect(),
        TOL_IDENTITY,
    ));
    checks.push(residual_check(
        "coordinate-change-uv",
        charts
            .par_iter()
            .map(|c| coordinate_change_uv_residual(c[0], c[1], c[2], [c[3], c[4], c[5]]))
            .collect(),
        TOL_IDENTITY,
    ));
    checks.push(residual_check(
        "pushforward-dp",
        pts.par_iter().map(|&p| pushforward_dp_residual(p)).collect(),
        TOL_IDENTITY,
    ));
    checks.push(residual_check(
        "jacobian-fd-crosscheck",
        pts.iter()
            .take(64)
            .map(|&p| jacobian_fd_residual(p, 1e-6))
            .collect(),
        TOL_JACOBIAN_FD,
    ));

    // Linking integrals: the core fibre and its contact push-off reproduce
    // tb(K0) = -1; distinct Hopf fibres link -1.
    let mut link_check = CheckResult {
        name: "linking-integrals".into(),
        samples: segments,
        max_residual: 0.0,
        tolerance: TOL_LINKING,
        pass: true,
        integer_estimates: Vec::new(),
    };
    {
        let k0 = k0_curve(segments);
        let k0p = k0_pushoff_curve(segments);
        let pole = choose_pole(&[&k0, &k0p]);
        let est = gauss_linking(
            &stereographic_project(&k0, pole),
            &stereographic_project(&k0p, pole),
        )?;
        link_check.integer_estimates.push(IntegerEstimate {
            label: "lk(K0, K0')".into(),
            estimate: est.estimate,
            rounded: est.rounded,
            distance_to_integer: est.distance_to_integer,
            expected: -1,
        });
    }
    for (p0, z0, p1, z1) in [(0.0, 0.0, 1.0, 0.0), (0.0, 0.0, 0.0, 1.0), (1.0, 0.0, 0.0, 1.0)] {
        let est = verify_hopf_fibre_linking(p0, z0, p1, z1, segments, None)?;
        link_check.integer_estimates.push(IntegerEstimate {
            label: format!("lk(fibre({p0},{z0}), fibre({p1},{z1}))"),
            estimate: est.estimate,
            rounded: est.rounded,
            distance_to_integer: est.distance_to_integer,
            expected: -1,
        });
    }
    for e in &link_check.integer_estimates {
        link_check.max_residual = link_check.max_residual.max(e.distance_to_integer);
        if e.rounded != e.expected || e.distance_to_integer >= TOL_LINKING {
            link_check.pass = false;
        }
    }
    checks.push(link_check);

    let pass = checks.iter().all(|c| c.pass);
    Ok(GeometryReport {
        seed,
        samples,
        segments,
        pass,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_f_examples() {
        let y = map_f(Point3Jet { q: 0.0, p: 0.0, z: 0.0 });
        assert!((y.x1 - 0.0).abs() < 1e-15);
        assert!((y.y1 - 1.0).abs() < 1e-15);
        assert!((y.x2 - 0.0).abs() < 1e-15);
        assert!((y.y2 - 0.0).abs() < 1e-15);

        // (q, 0, 0) |-> (0, cos, sin, 0): the fibre through the disc origins.
        let y = map_f(Point3Jet { q: 0.3, p: 0.0, z: 0.0 });
        let th = TAU * 0.3;
        assert!((y.y1 - th.cos()).abs() < 1e-15);
        assert!((y.x2 - th.sin()).abs() < 1e-15);
        assert!(y.x1.abs() < 1e-15 && y.y2.abs() < 1e-15);
    }

    #[test]
    fn pullback_example_value() {
        // At (0, 1, 0) with v = d/dtheta: alpha0(Df v) = -p lambda^2 = -4/5.
        let pt = Point3Jet { q: 0.0, p: 1.0, z: 0.0 };
        let w = mat_vec(&jacobian_f(pt), [1.0, 0.0, 0.0]);
        let got = alpha0(map_f(pt).as_array(), w);
        assert!((got - (-0.8)).abs() < 1e-12, "{got}");
        assert!(pullback_residual(pt, [1.0, 0.0, 0.0]) < 1e-12);
    }

    #[test]
    fn pushforward_at_origin() {
        let pt = Point3Jet { q: 0.0, p: 0.0, z: 0.0 };
        let got = mat_vec(&jacobian_f(pt), [0.0, 1.0, 0.0]);
        assert!((got[3] - 0.5).abs() < 1e-15);
        assert!(got[0].abs() + got[1].abs() + got[2].abs() < 1e-15);
        assert!(pushforward_dp_residual(pt) < 1e-12);
    }

    #[test]
    fn pushforward_section_never_vanishes() {
        // |(lambda^2/2)(e2 - z e1)| = (lambda^2/2) sqrt(1 + z^2) > 0.
        for &(q, p, z) in &[(0.1, 2.0, -3.0), (0.7, -8.0, 0.5), (0.9, 0.0, 9.0)] {
            let pt = Point3Jet { q, p, z };
            let y = map_f(pt).as_array();
            let e1 = frame_e1(y);
            let e2 = frame_e2(y);
            let l2 = lambda_sq(pt) / 2.0;
            let mut n = 0.0;
            for r in 0..4 {
                let v = l2 * (e2[r] - z * e1[r]);
                n += v * v;
            }
            let want = l2 * (1.0 + z * z).sqrt();
            assert!((n.sqrt() - want).abs() < 1e-12);
            assert!(n.sqrt() > 0.0);
        }
    }

    #[test]
    fn split_circles_do_not_link() {
        let a: Curve3 = (0..128)
            .map(|i| {
                let t = TAU * (i as f64) / 128.0;
                [t.cos(), t.sin(), 0.0]
            })
            .collect();
        let b: Curve3 = (0..128)
            .map(|i| {
                let t = TAU * (i as f64) / 128.0;
                [t.cos() + 5.0, t.sin(), 0.0]
            })
            .collect();
        let est = gauss_linking(&a, &b).unwrap();
        assert_eq!(est.rounded, 0);
        assert!(est.distance_to_integer < 0.05);
    }

    #[test]
    fn hopf_pair_links_once() {
        let a: Curve3 = (0..256)
            .map(|i| {
                let t = TAU * (i as f64) / 256.0;
                [t.cos(), t.sin(), 0.0]
            })
            .collect();
        let b: Curve3 = (0..256)
            .map(|i| {
                let t = TAU * (i as f64) / 256.0;
                [1.0 + t.cos(), 0.0, t.sin()]
            })
            .collect();
        let est = gauss_linking(&a, &b).unwrap();
        assert_eq!(est.rounded.abs(), 1);
        assert!(est.distance_to_integer < 0.05);
    }

    #[test]
    fn k0_pushoff_linking_reproduces_tb() {
        let k0 = k0_curve(512);
        let k0p = k0_pushoff_curve(512);
        let pole = choose_pole(&[&k0, &k0p]);
        let est = gauss_linking(
            &stereographic_project(&k0, pole),
            &stereographic_project(&k0p, pole),
        )
        .unwrap();
        assert_eq!(est.rounded, -1);
        assert!(est.distance_to_integer < 0.05, "{}", est.distance_to_integer);
    }

    #[test]
    fn fibre_self_pair_rejected() {
        assert!(matches!(
            verify_hopf_fibre_linking(0.0, 0.0, 0.0, 0.0, 128, None),
            Err(Error::CurvesIntersect { .. })
        ));
    }

    #[test]
    fn suite_passes_smoke() {
        let r = run_geometry_suite(500, 7, 192).unwrap();
        assert!(r.pass, "{:#?}", r.checks);
    }

    #[test]
    fn suite_is_deterministic() {
        let a = run_geometry_suite(200, 11, 128).unwrap();
        let b = run_geometry_suite(200, 11, 128).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
