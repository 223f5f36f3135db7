use std::f64::consts::PI;

use nalgebra::{Matrix3, Rotation3, Unit, UnitQuaternion};
use serde::{Deserialize, Serialize};

use super::tetra::{dihedral_angles, signed_volume, Vec3, VectorConfig};
use crate::error::{Error, Result};

/// Rotation by `angle` about `axis` (right-hand rule).
pub fn rotation(axis: &Vec3, angle: f64) -> Rotation3<f64> {
    Rotation3::from_axis_angle(&Unit::new_normalize(*axis), angle)
}

/// The SU(2) element with the same axis and angle, as a unit quaternion.
pub fn spin_rotation(axis: &Vec3, angle: f64) -> UnitQuaternion<f64> {
    UnitQuaternion::from_axis_angle(&Unit::new_normalize(*axis), angle)
}

/// `R(a3, 2φ3) R(a2, 2φ2) R(a1, 2φ1)`; the identity when `(a_i, φ_i)` are the
/// vertices and interior angles of a spherical triangle.
pub fn rodrigues_hamilton(a: [Vec3; 3], phi: [f64; 3]) -> Matrix3<f64> {
    (rotation(&a[2], 2.0 * phi[2]) * rotation(&a[1], 2.0 * phi[1]) * rotation(&a[0], 2.0 * phi[0]))
        .into_inner()
}

/// Interior angles of the spherical triangle with vertices `a1, a2, a3`,
/// joined by short arcs, whose interior lies to the right when the boundary
/// is followed `1 → 2 → 3 → 1`.
pub fn spherical_triangle_angles(a: [Vec3; 3]) -> Result<[f64; 3]> {
    let u = a.map(|v| v.normalize());
    let mut alpha = [0.0; 3];
    for i in 0..3 {
        let (p, n) = (u[(i + 2) % 3], u[(i + 1) % 3]);
        let tn = n - u[i] * u[i].dot(&n);
        let tp = p - u[i] * u[i].dot(&p);
        if tn.norm() < 1e-12 || tp.norm() < 1e-12 {
            return Err(Error::DegenerateConfig("coincident or antipodal vertices".into()));
        }
        alpha[i] = tn.cross(&tp).norm().atan2(tn.dot(&tp));
    }
    let orient = u[0].dot(&u[1].cross(&u[2]));
    if orient.abs() < 1e-14 {
        return Err(Error::DegenerateConfig("vertices lie on a great circle".into()));
    }
    Ok(if orient < 0.0 { alpha } else { alpha.map(|x| 2.0 * PI - x) })
}

/// Results of carrying a tetrahedron around the cycle generated by `J12²`,
/// `J23²` and the closing rotation about `J4`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CycleReport {
    /// `+1` when the configuration lies on the manifold with `V < 0`, where
    /// the cycle turns by `+2φ` about each axis; `-1` on the mirror image.
    pub orientation: i8,
    /// Largest deviation of `R23 R12 J_r` from `R(j4, 2φ4) J_r`.
    pub composite_error: f64,
    /// Largest deviation from the identity among the four closed SO(3)
    /// loops.
    pub loop_error: f64,
    /// Sign of the SU(2) lift of each spinor's loop before the closing
    /// `-2π` rotation.
    pub lift_signs: [i8; 4],
    /// Largest deviation of the lifts from `±1`.
    pub lift_error: f64,
    /// U(1) holonomy angles of the four spinors:
    /// `2φ1 − 2π, 2φ2, 2φ3 − 2π, 2φ4` (times the orientation).
    pub holonomy: [f64; 4],
}

fn dist_to_identity(m: &Matrix3<f64>) -> f64 {
    (m - Matrix3::identity()).amax()
}

fn lift_sign(q: &UnitQuaternion<f64>) -> (i8, f64) {
    let w = q.w;
    (if w < 0.0 { -1 } else { 1 }, (1.0 - w.abs()).abs().max(q.imag().amax()))
}

/// Runs the rotation cycle on `v`.
pub fn rotation_cycle(v: &VectorConfig) -> Result<CycleReport> {
    let d = dihedral_angles(v)?;
    let vol = signed_volume(v);
    let scale = v.j.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if vol.abs() <= 1e-12 * scale.powi(3) {
        return Err(Error::DegenerateConfig("flat tetrahedron".into()));
    }
    let s: f64 = if vol < 0.0 { 1.0 } else { -1.0 };
    let [j1, j2, j3, j4] = v.j;
    let a12 = (j1 + j2).normalize();
    let r12 = rotation(&a12, s * 2.0 * d.phi12);
    let (j1p, j2p) = (r12 * j1, r12 * j2);
    let a23p = (j2p + j3).normalize();
    let r23 = rotation(&a23p, s * 2.0 * d.phi23);
    let after = [j1p, r23 * j2p, r23 * j3, j4];
    let r4 = rotation(&j4, s * 2.0 * d.phi4);
    let composite_error = (0..4)
        .map(|r| (after[r] - r4 * v.j[r]).norm() / scale)
        .fold(0.0, f64::max);

    let m4 = -j4;
    let so3 = |axes: &[(Vec3, f64)]| {
        axes.iter()
            .map(|(a, t)| rotation(a, s * 2.0 * t).into_inner())
            .fold(Matrix3::identity(), |acc, m| acc * m)
    };
    let su2 = |axes: &[(Vec3, f64)]| {
        axes.iter()
            .map(|(a, t)| spin_rotation(a, s * 2.0 * t))
            .fold(UnitQuaternion::identity(), |acc, q| acc * q)
    };
    let loops: [Vec<(Vec3, f64)>; 4] = [
        vec![(j1, d.phi1), (m4, d.phi4), (a12, d.phi12)],
        vec![(j2, d.phi2), (m4, d.phi4), (a23p, d.phi23), (a12, d.phi12)],
        vec![(j3, d.phi3), (m4, d.phi4), (a23p, d.phi23)],
        vec![(j4, d.phi4), (m4, d.phi4)],
    ];
    let loop_error = loops.iter().map(|l| dist_to_identity(&so3(l))).fold(0.0, f64::max);
    let mut lift_signs = [0i8; 4];
    let mut lift_error = 0.0f64;
    for (k, l) in loops.iter().enumerate() {
        let (sg, err) = lift_sign(&su2(l));
        lift_signs[k] = sg;
        lift_error = lift_error.max(err);
    }
    let holonomy = [
        s * (2.0 * d.phi1 - 2.0 * PI),
        s * 2.0 * d.phi2,
        s * (2.0 * d.phi3 - 2.0 * PI),
        s * 2.0 * d.phi4,
    ];
    Ok(CycleReport {
        orientation: s as i8,
        composite_error,
        loop_error,
        lift_signs,
        lift_error,
        holonomy,
    })
}
