use nalgebra::Vector3;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vec3 = Vector3<f64>;

/// Lengths of the six edges of the tetrahedron: the four vectors and the two
/// diagonals `J12 = |J1 + J2|`, `J23 = |J2 + J3|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LengthSet {
    pub j1: f64,
    pub j2: f64,
    pub j3: f64,
    pub j4: f64,
    pub j12: f64,
    pub j23: f64,
}

impl LengthSet {
    pub fn new(j1: f64, j2: f64, j3: f64, j4: f64, j12: f64, j23: f64) -> Self {
        LengthSet { j1, j2, j3, j4, j12, j23 }
    }

    pub fn quad(&self) -> [f64; 4] {
        [self.j1, self.j2, self.j3, self.j4]
    }

    /// Largest of the six lengths.
    pub fn scale(&self) -> f64 {
        [self.j1, self.j2, self.j3, self.j4, self.j12, self.j23]
            .into_iter()
            .fold(0.0, f64::max)
    }

    /// Vector configuration with these lengths on the branch `V ≥ 0`.
    pub fn build(&self) -> Result<VectorConfig> {
        let phi12 = phi12_for_j23(self.quad(), self.j12, self.j23)?;
        build_vectors(self.quad(), self.j12, phi12)
    }
}

/// Four vectors `J1..J4` summing to zero.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorConfig {
    pub j: [Vec3; 4],
}

impl VectorConfig {
    pub fn new(j: [Vec3; 4]) -> Self {
        VectorConfig { j }
    }

    pub fn j12_vec(&self) -> Vec3 {
        self.j[0] + self.j[1]
    }

    pub fn j23_vec(&self) -> Vec3 {
        self.j[1] + self.j[2]
    }

    pub fn j13_vec(&self) -> Vec3 {
        self.j[0] + self.j[2]
    }

    pub fn lengths(&self) -> LengthSet {
        LengthSet {
            j1: self.j[0].norm(),
            j2: self.j[1].norm(),
            j3: self.j[2].norm(),
            j4: self.j[3].norm(),
            j12: self.j12_vec().norm(),
            j23: self.j23_vec().norm(),
        }
    }

    /// All vectors negated.
    pub fn time_reversed(&self) -> Self {
        VectorConfig { j: self.j.map(|v| -v) }
    }

    /// Reflection `y → -y`.
    pub fn mirrored(&self) -> Self {
        VectorConfig { j: self.j.map(|v| Vec3::new(v.x, -v.y, v.z)) }
    }

    /// Vertices `P0 = 0, P1 = J1, P2 = J1 + J2, P3 = J1 + J2 + J3`.
    pub fn vertices(&self) -> [Vec3; 4] {
        let p1 = self.j[0];
        let p2 = p1 + self.j[1];
        let p3 = p2 + self.j[2];
        [Vec3::zeros(), p1, p2, p3]
    }

    pub fn closure_error(&self) -> f64 {
        (self.j[0] + self.j[1] + self.j[2] + self.j[3]).norm()
    }
}

/// Interior dihedral angles at the six edges.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DihedralSet {
    pub phi1: f64,
    pub phi2: f64,
    pub phi3: f64,
    pub phi4: f64,
    pub phi12: f64,
    pub phi23: f64,
}

impl DihedralSet {
    /// Angles in the order `1, 2, 3, 4, 12, 23`.
    pub fn as_array(&self) -> [f64; 6] {
        [self.phi1, self.phi2, self.phi3, self.phi4, self.phi12, self.phi23]
    }
}

/// Whether four lengths close into a polygon: `max ≤ ½ Σ`.
pub fn polygon_inequality(j: [f64; 4]) -> bool {
    let sum: f64 = j.iter().sum();
    let max = j.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    j.iter().all(|&x| x >= 0.0) && max <= 0.5 * sum
}

fn range_of(a: f64, b: f64, c: f64, d: f64) -> (f64, f64) {
    ((a - b).abs().max((c - d).abs()), (a + b).min(c + d))
}

/// Classical range of `J12`: `[max(|J1−J2|, |J3−J4|), min(J1+J2, J3+J4)]`.
pub fn classical_j12_range(j: [f64; 4]) -> Result<(f64, f64)> {
    if !polygon_inequality(j) {
        return Err(Error::EmptyRange(format!("lengths {j:?} violate the polygon inequality")));
    }
    Ok(range_of(j[0], j[1], j[2], j[3]))
}

/// Classical range of `J23`: `[max(|J2−J3|, |J1−J4|), min(J2+J3, J1+J4)]`.
pub fn classical_j23_range(j: [f64; 4]) -> Result<(f64, f64)> {
    if !polygon_inequality(j) {
        return Err(Error::EmptyRange(format!("lengths {j:?} violate the polygon inequality")));
    }
    Ok(range_of(j[1], j[2], j[0], j[3]))
}

fn cm_matrix<T: Clone>(zero: T, one: T, [j1, j2, j3, j4, j12, x]: [T; 6]) -> [[T; 5]; 5] {
    let o = || one.clone();
    let z = || zero.clone();
    [
        [z(), o(), o(), o(), o()],
        [o(), z(), j1.clone(), j12.clone(), j4.clone()],
        [o(), j1, z(), j2.clone(), x.clone()],
        [o(), j12, j2, z(), j3.clone()],
        [o(), j4, x, j3, z()],
    ]
}

/// The 5×5 Cayley–Menger determinant with squared distances
/// `P0P1 = J1, P1P2 = J2, P2P3 = J3, P3P0 = J4, P0P2 = J12, P1P3 = x`.
/// Equals `288 V²`.
pub fn cayley_menger(j1: f64, j2: f64, j3: f64, j4: f64, j12: f64, x: f64) -> f64 {
    let m = cm_matrix(0.0, 1.0, [j1, j2, j3, j4, j12, x].map(|l| l * l));
    let m = nalgebra::Matrix5::from_fn(|r, c| m[r][c]);
    m.determinant()
}

/// [`cayley_menger`] in exact rational arithmetic, taking squared lengths.
pub fn cayley_menger_exact(sq: [BigRational; 6]) -> BigRational {
    let m = cm_matrix(BigRational::zero(), BigRational::one(), sq);
    let mut m: Vec<Vec<BigRational>> = m.into_iter().map(|r| r.to_vec()).collect();
    let n = 5;
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Position of the apex of a triangle on the base `0 → L` (along z) with
/// distances `a` from the base start and `b` from the base end: returns
/// `(z, r)` where `r ≥ 0` is the distance from the axis.
fn apex(a: f64, b: f64, l: f64) -> Result<(f64, f64)> {
    if l <= 0.0 {
        return Err(Error::DegenerateConfig("diagonal of zero length".into()));
    }
    let z = (a * a - b * b + l * l) / (2.0 * l);
    let r2 = a * a - z * z;
    let tol = 1e-14 * a.max(b).max(l).powi(2);
    if r2 < -tol {
        return Err(Error::DegenerateConfig(format!(
            "no triangle with sides {a}, {b}, {l}"
        )));
    }
    Ok((z, r2.max(0.0).sqrt()))
}

fn diagonal_extrema(a: f64, b: f64, c: f64, d: f64, l: f64) -> Result<(f64, f64)> {
    let (z1, r1) = apex(a, b, l)?;
    let (z3, r3) = apex(d, c, l)?;
    let tiny = 1e-12 * a.max(b).max(c).max(d).max(l);
    if r1 <= tiny || r3 <= tiny {
        return Err(Error::DegenerateConfig("a bounding triangle has zero area".into()));
    }
    let dz2 = (z1 - z3).powi(2);
    Ok((((r1 - r3).powi(2) + dz2).sqrt(), ((r1 + r3).powi(2) + dz2).sqrt()))
}

/// Roots of the Cayley–Menger determinant in `x = J23` at fixed `J12`: the
/// lengths of `J2 + J3` for the two flat tetrahedra (triangles 1-2-12 and
/// 3-4-12 on the same side, and on opposite sides, of the line 12).
pub fn j23_extrema(j: [f64; 4], j12: f64) -> Result<(f64, f64)> {
    diagonal_extrema(j[0], j[1], j[2], j[3], j12)
}

/// Roots of the Cayley–Menger determinant in `x = J12` at fixed `J23`.
pub fn j12_extrema(j: [f64; 4], j23: f64) -> Result<(f64, f64)> {
    // base P1 → P3; P2 at distances J2, J3; P0 at distances J1, J4
    diagonal_extrema(j[1], j[2], j[3], j[0], j23)
}

/// Four vectors with the given lengths, `|J1 + J2| = J12`, and interior
/// dihedral angle `phi12` at the 12-edge.
///
/// Gauge: `J12` along `+z` starting at the origin, triangle 3-4-12 in the
/// half-plane `x > 0` of the xz-plane, triangle 1-2-12 rotated from the
/// folded position by `phi12` about `+z` (right-hand rule). The signed
/// volume is positive for `phi12 ∈ (0, π)`.
pub fn build_vectors(j: [f64; 4], j12: f64, phi12: f64) -> Result<VectorConfig> {
    hinge(j, j12, phi12, true)
}

/// As [`build_vectors`], but a bounding triangle may be flat; then the
/// configuration does not depend on `phi12`.
pub(crate) fn hinge(j: [f64; 4], j12: f64, phi12: f64, strict: bool) -> Result<VectorConfig> {
    let (z1, r1) = apex(j[0], j[1], j12)?;
    let (z3, r3) = apex(j[3], j[2], j12)?;
    let tiny = 1e-12 * j.iter().cloned().fold(j12, f64::max);
    if strict && (r1 <= tiny || r3 <= tiny) {
        return Err(Error::DegenerateConfig("a bounding triangle has zero area".into()));
    }
    let p1 = Vec3::new(r1 * phi12.cos(), r1 * phi12.sin(), z1);
    let p2 = Vec3::new(0.0, 0.0, j12);
    let p3 = Vec3::new(r3, 0.0, z3);
    Ok(VectorConfig { j: [p1, p2 - p1, p3 - p2, -p3] })
}

/// Hinge parameters at fixed `J12`: apex heights and radii of the two
/// triangles, `(z1, r1, z3, r3)`.
pub(crate) fn hinge_params(j: [f64; 4], j12: f64) -> Result<(f64, f64, f64, f64)> {
    let (z1, r1) = apex(j[0], j[1], j12)?;
    let (z3, r3) = apex(j[3], j[2], j12)?;
    Ok((z1, r1, z3, r3))
}

/// The interior dihedral angle `phi12 ∈ [0, π]` at which `|J2 + J3| = j23`.
pub fn phi12_for_j23(j: [f64; 4], j12: f64, j23: f64) -> Result<f64> {
    let (z1, r1) = apex(j[0], j[1], j12)?;
    let (z3, r3) = apex(j[3], j[2], j12)?;
    if r1 == 0.0 || r3 == 0.0 {
        return Err(Error::DegenerateConfig("a bounding triangle has zero area".into()));
    }
    let c = (r1 * r1 + r3 * r3 + (z1 - z3).powi(2) - j23 * j23) / (2.0 * r1 * r3);
    if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&c) {
        return Err(Error::NotAllowed(format!("J23 = {j23} is outside the allowed range at J12 = {j12}")));
    }
    Ok(c.clamp(-1.0, 1.0).acos())
}

/// `V = (1/6) J1 · (J2 × J3)`.
pub fn signed_volume(v: &VectorConfig) -> f64 {
    v.j[0].dot(&v.j[1].cross(&v.j[2])) / 6.0
}

/// Interior angle between faces `(e, a)` and `(e, b)` sharing the edge
/// `p → q`, where `a`, `b` are the opposite vertices.
fn edge_dihedral(p: Vec3, q: Vec3, a: Vec3, b: Vec3) -> Result<f64> {
    let e = q - p;
    let ua = a - p - e * ((a - p).dot(&e) / e.norm_squared());
    let ub = b - p - e * ((b - p).dot(&e) / e.norm_squared());
    let scale = e.norm().max((a - p).norm()).max((b - p).norm());
    if e.norm() <= 1e-14 * scale || ua.norm() <= 1e-12 * scale || ub.norm() <= 1e-12 * scale {
        return Err(Error::DegenerateConfig("a face has zero area".into()));
    }
    Ok(ua.cross(&ub).norm().atan2(ua.dot(&ub)))
}

/// Interior dihedral angles at edges `1, 2, 3, 4, 12, 23`.
pub fn dihedral_angles(v: &VectorConfig) -> Result<DihedralSet> {
    let [p0, p1, p2, p3] = v.vertices();
    Ok(DihedralSet {
        phi1: edge_dihedral(p0, p1, p2, p3)?,
        phi2: edge_dihedral(p1, p2, p0, p3)?,
        phi3: edge_dihedral(p2, p3, p1, p0)?,
        phi4: edge_dihedral(p3, p0, p2, p1)?,
        phi12: edge_dihedral(p0, p2, p1, p3)?,
        phi23: edge_dihedral(p1, p3, p2, p0)?,
    })
}

/// Classification of a point of the `(J12, J23)` plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    /// Outside the rectangle where both coupling triangles exist.
    NotExist,
    Allowed,
    Forbidden,
    Caustic,
    /// On the edge of the rectangle.
    Boundary,
}

impl Region {
    /// One-letter tag: `U`, `A`, `F`, `C`, `B`.
    pub fn tag(self) -> &'static str {
        match self {
            Region::NotExist => "U",
            Region::Allowed => "A",
            Region::Forbidden => "F",
            Region::Caustic => "C",
            Region::Boundary => "B",
        }
    }
}

/// Tolerance on the Cayley–Menger determinant below which a point counts as
/// caustic: `1e-9 · scale⁸`.
pub fn caustic_tolerance(scale: f64) -> f64 {
    1e-9 * scale.powi(8)
}

/// Classifies `(J12, J23)` for the quad `J1..J4`.
pub fn classify_region(l: &LengthSet) -> Region {
    let q = l.quad();
    let (Ok((a0, a1)), Ok((b0, b1))) = (classical_j12_range(q), classical_j23_range(q)) else {
        return Region::NotExist;
    };
    let scale = l.scale().max(f64::MIN_POSITIVE);
    let eps = 1e-12 * scale;
    let outside = |x: f64, lo: f64, hi: f64| x < lo - eps || x > hi + eps;
    if outside(l.j12, a0, a1) || outside(l.j23, b0, b1) {
        return Region::NotExist;
    }
    let on = |x: f64, lo: f64, hi: f64| (x - lo).abs() <= eps || (x - hi).abs() <= eps;
    if on(l.j12, a0, a1) || on(l.j23, b0, b1) {
        return Region::Boundary;
    }
    let det = cayley_menger(l.j1, l.j2, l.j3, l.j4, l.j12, l.j23);
    let tol = caustic_tolerance(scale);
    if det >= tol {
        Region::Allowed
    } else if det <= -tol {
        Region::Forbidden
    } else {
        Region::Caustic
    }
}
