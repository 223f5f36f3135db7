//! The cycle of rotations generated by J12², J23² and the closing rotation
//! about J4, with the SU(2) lift signs and U(1) holonomies.

use std::f64::consts::PI;

use w6j::geometry::{build_vectors, rodrigues_hamilton, rotation_cycle, spherical_triangle_angles, Vec3};
use w6j::semiclassical::{relative_action, relative_action_from_holonomy, relative_action_from_phase};

fn main() -> w6j::Result<()> {
    let a = [Vec3::new(1.0, 0.2, 0.1), Vec3::new(0.1, 1.0, 0.3), Vec3::new(0.2, 0.1, 1.0)].map(|v| v.normalize());
    let phi = spherical_triangle_angles(a)?;
    let m = rodrigues_hamilton(a, phi);
    println!("spherical triangle angles {phi:?}");
    println!("R(a3,2φ3) R(a2,2φ2) R(a1,2φ1) - 1 = {:.2e}", (m - nalgebra::Matrix3::identity()).amax());

    let v = build_vectors([5.0, 3.5, 6.0, 6.5], 5.0, 2.0)?;
    for (label, c) in [("V > 0", v), ("V < 0", v.mirrored())] {
        let r = rotation_cycle(&c)?;
        println!("\n{label}: orientation {}", r.orientation);
        println!("  composite rotation error {:.2e}, loop error {:.2e}", r.composite_error, r.loop_error);
        println!("  SU(2) lift signs {:?}", r.lift_signs);
        println!("  holonomies / π {:?}", r.holonomy.map(|h| (h / PI * 1e6).round() / 1e6));
        println!(
            "  action: {:.12} (dihedral) {:.12} (phase) {:.12} (holonomy)",
            relative_action(&c)?,
            relative_action_from_phase(&c)?,
            relative_action_from_holonomy(&c)?
        );
    }
    Ok(())
}
