//! Ponzano–Regge asymptotics of the 6j-symbol: quantization, the phase
//! `Ψ`, the action around the rotation cycle, the amplitude and the Weyl
//! symbols of the basic operators.

use std::f64::consts::PI;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rat, HalfInt};
use crate::geometry::{
    classify_region, dihedral_angles, rotation_cycle, signed_volume, LengthSet, Region, VectorConfig,
};
use crate::symbols::{j23_bounds, six_j_msum, six_j_racah, JQuad, SixJArgs};

/// `J = j + 1/2`.
pub fn quantize(j: HalfInt) -> f64 {
    j.to_f64() + 0.5
}

/// Six quantum numbers of a 6j-symbol `{j1 j2 j12; j3 j4 j23}` with the
/// couplings `(j1 j2 j12)`, `(j3 j4 j12)`, `(j2 j3 j23)`, `(j1 j4 j23)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantizedLengths {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j3: HalfInt,
    pub j4: HalfInt,
    pub j12: HalfInt,
    pub j23: HalfInt,
}

impl QuantizedLengths {
    /// Checks the four coupling triangles.
    pub fn new(args: &SixJArgs) -> Result<Self> {
        if !args.is_admissible() {
            return Err(Error::Domain(format!("{args} violates a coupling triangle")));
        }
        Ok(QuantizedLengths {
            j1: args.j1,
            j2: args.j2,
            j3: args.j3,
            j4: args.j4,
            j12: args.j12,
            j23: args.j23,
        })
    }

    pub fn args(&self) -> SixJArgs {
        SixJArgs::new(self.j1, self.j2, self.j12, self.j3, self.j4, self.j23)
    }

    /// Edge lengths `J = j + 1/2`.
    pub fn lengths(&self) -> LengthSet {
        LengthSet::new(
            quantize(self.j1),
            quantize(self.j2),
            quantize(self.j3),
            quantize(self.j4),
            quantize(self.j12),
            quantize(self.j23),
        )
    }

    /// `(-1)^{j2 + j4 + j12 + j23}`.
    pub fn parity_sign(&self) -> i64 {
        (self.j2 + self.j4 + self.j12 + self.j23)
            .parity_sign()
            .expect("coupling parities make the exponent an integer")
    }
}

/// `Ψ = Σ J_r (π − φ_r)` over the six edges.
pub fn pr_phase(v: &VectorConfig) -> Result<f64> {
    let d = dihedral_angles(v)?.as_array();
    let l = v.lengths();
    let lens = [l.j1, l.j2, l.j3, l.j4, l.j12, l.j23];
    Ok(lens.iter().zip(d).map(|(j, phi)| j * (PI - phi)).sum())
}

/// Action around the rotation cycle, `S = 2 Σ J_r φ_r − 2π (J1 + J3)`.
pub fn relative_action(v: &VectorConfig) -> Result<f64> {
    let d = dihedral_angles(v)?.as_array();
    let l = v.lengths();
    let lens = [l.j1, l.j2, l.j3, l.j4, l.j12, l.j23];
    let sum: f64 = lens.iter().zip(d).map(|(j, phi)| j * phi).sum();
    Ok(2.0 * sum - 2.0 * PI * (l.j1 + l.j3))
}

/// The same action written as `−2Ψ + 2π (J2 + J4 + J12 + J23)`.
pub fn relative_action_from_phase(v: &VectorConfig) -> Result<f64> {
    let l = v.lengths();
    Ok(-2.0 * pr_phase(v)? + 2.0 * PI * (l.j2 + l.j4 + l.j12 + l.j23))
}

/// The action assembled from the rotation cycle: `2 J12 φ12 + 2 J23 φ23`
/// plus `J_r` times each spinor's holonomy angle.
pub fn relative_action_from_holonomy(v: &VectorConfig) -> Result<f64> {
    let report = rotation_cycle(v)?;
    let d = dihedral_angles(v)?;
    let l = v.lengths();
    let s = report.orientation as f64;
    let spins = [l.j1, l.j2, l.j3, l.j4];
    let holonomy: f64 = spins.iter().zip(report.holonomy).map(|(j, h)| j * h * s).sum();
    Ok(2.0 * l.j12 * d.phi12 + 2.0 * l.j23 * d.phi23 + holonomy)
}

/// Poisson bracket `{|J2 + J3|, |J1 + J2|} = 6V / (J12 J23)`.
pub fn wigner_amplitude(v: &VectorConfig) -> f64 {
    let l = v.lengths();
    6.0 * signed_volume(v) / (l.j12 * l.j23)
}

/// Ponzano–Regge estimate of a 6j-symbol.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PRResult {
    pub volume: f64,
    pub psi: f64,
    pub amplitude: f64,
    pub value: f64,
    pub region: Region,
    /// Set when `|V| < 1e-6 · scale³`, where the estimate is unreliable.
    pub near_caustic: bool,
}

/// `{6j} ≈ cos(Ψ + π/4) / √(12π|V|)` on the tetrahedron with edge lengths
/// `j + 1/2`.
pub fn ponzano_regge(q: &QuantizedLengths) -> Result<PRResult> {
    let l = q.lengths();
    let region = classify_region(&l);
    if region != Region::Allowed {
        return Err(Error::NotAllowed(format!("{} is in region {region:?}", q.args())));
    }
    let v = l.build()?;
    let volume = signed_volume(&v);
    let psi = pr_phase(&v)?;
    let amplitude = 1.0 / (12.0 * PI * volume.abs()).sqrt();
    Ok(PRResult {
        volume,
        psi,
        amplitude,
        value: amplitude * (psi + PI / 4.0).cos(),
        region,
        near_caustic: volume.abs() < 1e-6 * l.scale().powi(3),
    })
}

/// Operators whose Weyl symbols are tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeylOperator {
    /// `Î_r`, half the number operator of the r-th Schwinger oscillator pair.
    I,
    /// `Ĵ_r²`.
    JsqR,
    /// `Ĵ_12²`.
    Jsq12,
    /// `Ĵ_23²`.
    Jsq23,
}

impl FromStr for WeylOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I_r" | "I" => Ok(WeylOperator::I),
            "Jsq_r" => Ok(WeylOperator::JsqR),
            "Jsq_12" => Ok(WeylOperator::Jsq12),
            "Jsq_23" => Ok(WeylOperator::Jsq23),
            other => Err(Error::UnknownOperator(other.to_string())),
        }
    }
}

/// The Weyl symbol of `op` evaluated on the manifold quantized at `j`:
/// `j` for `I_r`, `(j+½)² − 3/8 = j(j+1) − 1/8` for `J_r²`, and
/// `(j+½)² − 3/4 = j(j+1) − 1/2` for `J_12²`, `J_23²`.
pub fn weyl_eigenvalue(op: WeylOperator, j: HalfInt) -> Result<BigRational> {
    if j.twice() < 0 {
        return Err(Error::Domain(format!("negative angular momentum {j}")));
    }
    let big = rat(j.twice() + 1, 2);
    let sq = &big * &big;
    Ok(match op {
        WeylOperator::I => rat(j.twice(), 2),
        WeylOperator::JsqR => sq - rat(3, 8),
        WeylOperator::Jsq12 | WeylOperator::Jsq23 => sq - rat(3, 4),
    })
}

/// Exact eigenvalue `j(j+1)` of a squared angular momentum.
pub fn casimir(j: HalfInt) -> BigRational {
    rat(j.twice() * (j.twice() + 2), 4)
}

/// One row of an exact-versus-asymptotic comparison at fixed quad and `j12`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub j23: HalfInt,
    pub exact: f64,
    /// Exact value as `coef·√radicand`.
    pub exact_text: String,
    pub pr: Option<f64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub region: Region,
    pub near_caustic: bool,
}

/// Compares exact 6j-symbols with the Ponzano–Regge estimate for every
/// quantized `j23` of the quad at fixed `j12`. Rows are in increasing `j23`;
/// points outside the allowed region carry their region and no estimate.
/// With `oracle` the exact values come from the explicit m-sum.
pub fn compare_slice(quad: &JQuad, j12: HalfInt, oracle: bool) -> Result<Vec<CompareRow>> {
    let (lo, hi) = j23_bounds(quad);
    let mut j23s = Vec::new();
    let mut x = lo;
    while x <= hi {
        j23s.push(x);
        x = x + HalfInt::ONE;
    }
    j23s.into_par_iter()
        .map(|j23| {
            let args = SixJArgs::new(quad.j1, quad.j2, j12, quad.j3, quad.j4, j23);
            let exact = if oracle { six_j_msum(&args)? } else { six_j_racah(&args)? };
            let ql = QuantizedLengths::new(&args)?;
            let (pr, region, near) = match ponzano_regge(&ql) {
                Ok(r) => (Some(r.value), r.region, r.near_caustic),
                Err(Error::NotAllowed(_)) => (None, classify_region(&ql.lengths()), false),
                Err(e) => return Err(e),
            };
            let e = exact.to_f64();
            let abs_err = pr.map(|p| (p - e).abs());
            Ok(CompareRow {
                j23,
                exact: e,
                exact_text: exact.to_string(),
                pr,
                abs_err,
                rel_err: abs_err.map(|a| if e != 0.0 { a / e.abs() } else { f64::INFINITY }),
                region,
                near_caustic: near,
            })
        })
        .collect()
}

/// Root-mean-square relative error over the middle half of the allowed rows.
pub fn mid_region_rms(rows: &[CompareRow]) -> Option<f64> {
    let allowed: Vec<f64> = rows.iter().filter_map(|r| r.rel_err).collect();
    let n = allowed.len();
    if n == 0 {
        return None;
    }
    let mid = &allowed[n / 4..n - n / 4];
    let mid = if mid.is_empty() { &allowed[..] } else { mid };
    Some((mid.iter().map(|e| e * e).sum::<f64>() / mid.len() as f64).sqrt())
}
