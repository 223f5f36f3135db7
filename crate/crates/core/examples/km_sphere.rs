//! The reduced phase space of four vectors: observables, level curves and
//! Bohr–Sommerfeld areas.

use std::f64::consts::PI;

use w6j::km::{KMPoint, KMSphere, Observable};
use w6j::symbols::{dim_zs, JQuad};

fn main() -> w6j::Result<()> {
    let quad = JQuad::from_twice([9, 6, 11, 12]);
    let s = KMSphere::new(quad.as_array().map(|j| j.to_f64() + 0.5))?;
    println!("lengths {:?}: J12 in [{}, {}]", s.quad, s.j12_min, s.j12_max);
    println!("total area / 2π = {:.12}, dim = {}", s.total_area() / (2.0 * PI), dim_zs(&quad));

    let o = s.observables(KMPoint { j12: 5.0, phi12: 1.0 })?;
    println!("at (J12, φ12) = (5, 1): J23 = {:.6}, J13 = {:.6}, V = {:.6}", o.j23, o.j13, o.volume);

    println!("\nBohr–Sommerfeld: area/2π of quantized orbits");
    for obs in [Observable::J12, Observable::J23] {
        let (lo, _) = s.range(obs)?;
        let areas: Vec<String> = (0..7)
            .map(|n| {
                s.enclosed_area(obs, lo + n as f64 + 0.5)
                    .map(|a| format!("{:.9}", a / (2.0 * PI)))
                    .unwrap_or_default()
            })
            .collect();
        println!("  {obs:?}: {}", areas.join(" "));
    }

    for obs in [Observable::J23, Observable::J13, Observable::V] {
        let (lo, hi) = s.range(obs)?;
        let mid = 0.5 * (lo + hi);
        let curve = s.level_curve(obs, mid, 400)?;
        let area = s.enclosed_area(obs, mid)?;
        println!("\n{obs:?} in [{lo:.4}, {hi:.4}]; level {mid:.4}: {} points, area/2π {:.6}", curve.len(), area / (2.0 * PI));
        for p in curve.iter().step_by(curve.len() / 6) {
            let e = s.embed(*p)?.cartesian();
            println!("  J12 = {:.4}, φ12 = {:.4} -> ({:.4}, {:.4}, {:.4})", p.j12, p.phi12, e[0], e[1], e[2]);
        }
    }

    let caustic = s.caustic_curve(16);
    println!("\ncaustic polyline in the (J12, J23) plane:");
    for (a, b) in caustic {
        println!("  ({a:.4}, {b:.4})");
    }
    Ok(())
}
