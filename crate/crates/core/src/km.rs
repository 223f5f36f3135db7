//! The reduced phase space of four vectors with fixed lengths summing to
//! zero, a sphere with canonical coordinates `(J12, φ12)`.

use std::f64::consts::PI;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    cayley_menger, classical_j12_range, classical_j23_range, hinge, hinge_params, signed_volume,
    VectorConfig,
};

/// A point `(J12, φ12)` of the reduced phase space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KMPoint {
    pub j12: f64,
    pub phi12: f64,
}

/// Standard spherical angles of a point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphereEmbedding {
    pub theta: f64,
    pub phi: f64,
}

impl SphereEmbedding {
    /// Point on the unit sphere.
    pub fn cartesian(&self) -> [f64; 3] {
        [
            self.theta.sin() * self.phi.cos(),
            self.theta.sin() * self.phi.sin(),
            self.theta.cos(),
        ]
    }
}

/// Rotationally invariant functions on the sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Observable {
    J12,
    J23,
    J13,
    V,
}

impl FromStr for Observable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "j12" => Ok(Observable::J12),
            "j23" => Ok(Observable::J23),
            "j13" => Ok(Observable::J13),
            "v" => Ok(Observable::V),
            _ => Err(Error::Domain(format!("unknown observable `{s}`"))),
        }
    }
}

/// Values of the other observables at a point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KMObservables {
    pub j23: f64,
    pub j13: f64,
    pub volume: f64,
}

/// A quad of lengths together with its `J12` range.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KMSphere {
    pub quad: [f64; 4],
    pub j12_min: f64,
    pub j12_max: f64,
}

/// `J23² = a − b cos φ`, `J13² = c + b cos φ`, `V = d sin φ` at fixed `J12`.
#[derive(Clone, Copy, Debug)]
struct Slice {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl KMSphere {
    pub fn new(quad: [f64; 4]) -> Result<Self> {
        let (j12_min, j12_max) = classical_j12_range(quad)?;
        if j12_max <= j12_min {
            return Err(Error::DegenerateConfig(format!("the sphere of {quad:?} is a point")));
        }
        Ok(KMSphere { quad, j12_min, j12_max })
    }

    /// `J12_max − J12_min`.
    pub fn width(&self) -> f64 {
        self.j12_max - self.j12_min
    }

    /// `2π (J12_max − J12_min)`.
    pub fn total_area(&self) -> f64 {
        2.0 * PI * self.width()
    }

    fn check(&self, j12: f64) -> Result<()> {
        let eps = 1e-12 * self.j12_max;
        if j12 < self.j12_min - eps || j12 > self.j12_max + eps {
            return Err(Error::Domain(format!(
                "J12 = {j12} outside [{}, {}]",
                self.j12_min, self.j12_max
            )));
        }
        Ok(())
    }

    fn clamp(&self, j12: f64) -> f64 {
        j12.clamp(self.j12_min, self.j12_max)
    }

    fn slice(&self, j12: f64) -> Result<Slice> {
        let (z1, r1, z3, r3) = hinge_params(self.quad, j12)?;
        Ok(Slice {
            a: r1 * r1 + r3 * r3 + (z1 - z3).powi(2),
            b: 2.0 * r1 * r3,
            c: r1 * r1 + r3 * r3 + (z1 + z3 - j12).powi(2),
            d: j12 * r1 * r3 / 6.0,
        })
    }

    /// Vector configuration at a point; at the poles it does not depend on
    /// `φ12`.
    pub fn config(&self, p: KMPoint) -> Result<VectorConfig> {
        self.check(p.j12)?;
        hinge(self.quad, self.clamp(p.j12), p.phi12, false)
    }

    /// `|J2 + J3|`, `|J1 + J3|` and the signed volume at `p`.
    pub fn observables(&self, p: KMPoint) -> Result<KMObservables> {
        let v = self.config(p)?;
        Ok(KMObservables {
            j23: v.j23_vec().norm(),
            j13: v.j13_vec().norm(),
            volume: signed_volume(&v),
        })
    }

    pub fn value(&self, obs: Observable, p: KMPoint) -> Result<f64> {
        let o = self.observables(p)?;
        Ok(match obs {
            Observable::J12 => p.j12,
            Observable::J23 => o.j23,
            Observable::J13 => o.j13,
            Observable::V => o.volume,
        })
    }

    /// `J12 = J12_min + (D/2)(1 + cos θ)`, `φ = φ12`.
    pub fn embed(&self, p: KMPoint) -> Result<SphereEmbedding> {
        self.check(p.j12)?;
        let c = (2.0 * (self.clamp(p.j12) - self.j12_min) / self.width() - 1.0).clamp(-1.0, 1.0);
        Ok(SphereEmbedding { theta: c.acos(), phi: p.phi12.rem_euclid(2.0 * PI) })
    }

    pub fn inverse(&self, s: SphereEmbedding) -> KMPoint {
        KMPoint {
            j12: self.j12_min + 0.5 * self.width() * (1.0 + s.theta.cos()),
            phi12: s.phi.rem_euclid(2.0 * PI),
        }
    }

    /// Smallest and largest value of `obs` on the sphere.
    pub fn range(&self, obs: Observable) -> Result<(f64, f64)> {
        let [j1, j2, j3, j4] = self.quad;
        Ok(match obs {
            Observable::J12 => (self.j12_min, self.j12_max),
            Observable::J23 => classical_j23_range(self.quad)?,
            Observable::J13 => ((j1 - j3).abs().max((j2 - j4).abs()), (j1 + j3).min(j2 + j4)),
            Observable::V => {
                let d = |j12: f64| self.slice(j12).map(|s| s.d).unwrap_or(0.0);
                let nodes = self.nodes(1025);
                let k = (0..nodes.len()).max_by(|&a, &b| d(nodes[a]).total_cmp(&d(nodes[b]))).unwrap_or(0);
                let (mut a, mut b) = (nodes[k.saturating_sub(1)], nodes[(k + 1).min(nodes.len() - 1)]);
                let g = 0.5 * (5f64.sqrt() - 1.0);
                for _ in 0..120 {
                    let (m1, m2) = (b - g * (b - a), a + g * (b - a));
                    if d(m1) < d(m2) {
                        a = m1;
                    } else {
                        b = m2;
                    }
                }
                let v = d(0.5 * (a + b)).max(d(nodes[k]));
                (-v, v)
            }
        })
    }

    /// Nodes in `J12`, denser towards the poles.
    fn nodes(&self, n: usize) -> Vec<f64> {
        let n = n.max(2);
        (0..n)
            .map(|k| {
                let t = PI * k as f64 / (n - 1) as f64;
                self.j12_min + 0.5 * self.width() * (1.0 - t.cos())
            })
            .collect()
    }

    /// The two angles in `[0, 2π)` on the level set at this `J12`, the first
    /// on the upper branch walked with increasing `J12`.
    fn level_angles(&self, obs: Observable, value: f64, j12: f64) -> Option<(f64, f64)> {
        let s = self.slice(j12).ok()?;
        match obs {
            Observable::J12 => None,
            Observable::J23 | Observable::J13 => {
                if s.b <= 0.0 {
                    return None;
                }
                let c = match obs {
                    Observable::J23 => (s.a - value * value) / s.b,
                    _ => (value * value - s.c) / s.b,
                };
                (-1.0..=1.0).contains(&c).then(|| {
                    let phi = c.acos();
                    (phi, 2.0 * PI - phi)
                })
            }
            Observable::V => {
                if s.d <= 0.0 || value.abs() > s.d {
                    return None;
                }
                let phi = (value.abs() / s.d).asin();
                Some(if value >= 0.0 { (phi, PI - phi) } else { (2.0 * PI - phi, PI + phi) })
            }
        }
    }

    /// Ordered sampling of the level set `obs = value`: the upper branch with
    /// increasing `J12`, then its mirror image with decreasing `J12`. Level
    /// sets of `J12` are circles of constant `J12`.
    pub fn level_curve(&self, obs: Observable, value: f64, n_points: usize) -> Result<Vec<KMPoint>> {
        let n_points = n_points.max(4);
        if obs == Observable::J12 {
            self.check(value).map_err(|_| {
                Error::EmptyLevelSet(format!("J12 = {value} is outside the sphere"))
            })?;
            return Ok((0..n_points)
                .map(|k| KMPoint { j12: value, phi12: 2.0 * PI * k as f64 / n_points as f64 })
                .collect());
        }
        let slices: Vec<(f64, Option<(f64, f64)>)> = self
            .nodes(n_points / 2 + 1)
            .into_par_iter()
            .map(|j12| (j12, self.level_angles(obs, value, j12)))
            .collect();
        let up: Vec<KMPoint> = slices
            .iter()
            .filter_map(|(j12, a)| a.map(|(p, _)| KMPoint { j12: *j12, phi12: p }))
            .collect();
        if up.is_empty() {
            return Err(Error::EmptyLevelSet(format!("{obs:?} never equals {value}")));
        }
        let down = slices
            .iter()
            .rev()
            .filter_map(|(j12, a)| a.map(|(_, p)| KMPoint { j12: *j12, phi12: p }));
        Ok(up.into_iter().chain(down).collect())
    }

    /// Angular measure of `{φ12 : obs < value}` at this `J12`.
    fn measure_below(&self, obs: Observable, value: f64, j12: f64) -> f64 {
        let Ok(s) = self.slice(j12) else { return 0.0 };
        let full = 2.0 * PI;
        let acos_measure = |c: f64| {
            if c >= 1.0 {
                0.0
            } else if c <= -1.0 {
                full
            } else {
                2.0 * c.acos()
            }
        };
        match obs {
            Observable::J12 => {
                if j12 < value {
                    full
                } else {
                    0.0
                }
            }
            Observable::J23 => {
                if s.b <= 0.0 {
                    return if s.a < value * value { full } else { 0.0 };
                }
                acos_measure((s.a - value * value) / s.b)
            }
            Observable::J13 => {
                if s.b <= 0.0 {
                    return if s.c < value * value { full } else { 0.0 };
                }
                full - acos_measure((value * value - s.c) / s.b)
            }
            Observable::V => {
                if s.d <= 0.0 {
                    return if value > 0.0 { full } else { 0.0 };
                }
                PI + 2.0 * (value / s.d).clamp(-1.0, 1.0).asin()
            }
        }
    }

    /// Symplectic area `∫∫ dJ12 dφ12` of the region where `obs < value`.
    /// For `J12` this is the cap around the `J12_min` pole; the whole sphere
    /// has area `2π (J12_max − J12_min)`.
    pub fn enclosed_area(&self, obs: Observable, value: f64) -> Result<f64> {
        if obs == Observable::J12 {
            self.check(value)
                .map_err(|_| Error::EmptyLevelSet(format!("J12 = {value} is outside the sphere")))?;
            return Ok(2.0 * PI * (self.clamp(value) - self.j12_min));
        }
        let f = |j12: f64| self.measure_below(obs, value, j12);
        let full = 2.0 * PI;
        let saturated = |m: f64| m <= 0.0 || m >= full;
        let nodes = self.nodes(513);
        let mut cuts = vec![self.j12_min];
        for w in nodes.windows(2) {
            let (a, b) = (w[0], w[1]);
            if saturated(f(a)) != saturated(f(b)) {
                let (mut lo, mut hi) = (a, b);
                let s_lo = saturated(f(lo));
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if saturated(f(mid)) == s_lo {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                    if hi - lo <= 1e-15 * self.j12_max {
                        break;
                    }
                }
                cuts.push(0.5 * (lo + hi));
            }
        }
        cuts.push(self.j12_max);
        let mut area = 0.0;
        let mut any_curve = false;
        for w in cuts.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b <= a {
                continue;
            }
            let mid = f(0.5 * (a + b));
            if saturated(mid) {
                area += mid * (b - a);
            } else {
                any_curve = true;
                let g = |t: f64| {
                    let j12 = 0.5 * (a + b) - 0.5 * (b - a) * t.cos();
                    f(j12) * 0.5 * (b - a) * t.sin()
                };
                area += adaptive_simpson(&g, 0.0, PI, 1e-11 * full * (b - a));
            }
        }
        if !any_curve {
            return Err(Error::EmptyLevelSet(format!("{obs:?} never equals {value}")));
        }
        Ok(area)
    }

    /// The flat tetrahedra, `V = 0`, as a closed polyline in the `(J12, J23)`
    /// plane: the same-side branch with increasing `J12`, then the
    /// opposite-side branch with decreasing `J12`.
    pub fn caustic_curve(&self, n_points: usize) -> Vec<(f64, f64)> {
        let pts: Vec<(f64, Option<(f64, f64)>)> = self
            .nodes(n_points / 2 + 1)
            .into_par_iter()
            .map(|j12| {
                let ext = self.slice(j12).ok().map(|s| ((s.a - s.b).max(0.0).sqrt(), (s.a + s.b).sqrt()));
                (j12, ext)
            })
            .collect();
        let lower = pts.iter().filter_map(|(j, e)| e.map(|(lo, _)| (*j, lo)));
        let upper = pts.iter().rev().filter_map(|(j, e)| e.map(|(_, hi)| (*j, hi)));
        let mut out: Vec<(f64, f64)> = Vec::new();
        for p in lower.chain(upper) {
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
        out
    }

    /// `|cayley_menger|` at a point of the `(J12, J23)` plane.
    pub fn caustic_residual(&self, j12: f64, j23: f64) -> f64 {
        let q = self.quad;
        cayley_menger(q[0], q[1], q[2], q[3], j12, j23).abs()
    }
}

/// Adaptive Simpson quadrature of `f` on `[a, b]` to absolute tolerance
/// `tol`.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn step(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                + step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
        }
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 48)
}

/// Observables at `p` on the sphere of `quad`.
pub fn km_observables(quad: [f64; 4], p: KMPoint) -> Result<KMObservables> {
    KMSphere::new(quad)?.observables(p)
}

pub fn level_curve(quad: [f64; 4], obs: Observable, value: f64, n_points: usize) -> Result<Vec<KMPoint>> {
    KMSphere::new(quad)?.level_curve(obs, value, n_points)
}

pub fn enclosed_area(quad: [f64; 4], obs: Observable, value: f64) -> Result<f64> {
    KMSphere::new(quad)?.enclosed_area(obs, value)
}

pub fn caustic_curve(quad: [f64; 4], n_points: usize) -> Result<Vec<(f64, f64)>> {
    Ok(KMSphere::new(quad)?.caustic_curve(n_points))
}

pub fn sphere_embed(quad: [f64; 4], p: KMPoint) -> Result<SphereEmbedding> {
    KMSphere::new(quad)?.embed(p)
}

pub fn sphere_inverse(quad: [f64; 4], s: SphereEmbedding) -> Result<KMPoint> {
    Ok(KMSphere::new(quad)?.inverse(s))
}
