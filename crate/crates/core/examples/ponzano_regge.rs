//! Exact 6j-symbols against the Ponzano–Regge formula, for one slice and
//! for the equilateral family.

use w6j::semiclassical::{compare_slice, mid_region_rms, ponzano_regge, QuantizedLengths};
use w6j::symbols::{six_j_racah, JQuad, SixJArgs};
use w6j::HalfInt;

fn main() -> w6j::Result<()> {
    let args = SixJArgs::from_twice([9, 6, 9, 11, 12, 9]);
    let pr = ponzano_regge(&QuantizedLengths::new(&args)?)?;
    println!("{args}: exact {:.10}, PR {:.10}", six_j_racah(&args)?.to_f64(), pr.value);
    println!("  V = {:.6}, Ψ = {:.6}, amplitude = {:.6}", pr.volume, pr.psi, pr.amplitude);

    let quad = JQuad::from_twice([9, 6, 11, 12]);
    println!("\nslice j12 = 9/2 of {:?}:", quad.as_array().map(|j| j.to_string()));
    println!("  {:>5} {:>14} {:>14} {:>10} region", "j23", "exact", "PR", "rel err");
    for r in compare_slice(&quad, HalfInt::from_twice(9), false)? {
        let pr = r.pr.map(|x| format!("{x:14.10}")).unwrap_or_else(|| format!("{:>14}", "-"));
        let rel = r.rel_err.map(|x| format!("{x:10.2e}")).unwrap_or_else(|| format!("{:>10}", "-"));
        println!("  {:>5} {:14.10} {pr} {rel} {}", r.j23.to_string(), r.exact, r.region.tag());
    }

    println!("\nequilateral family, rms relative error over the middle of the allowed region:");
    for j in [5, 10, 20, 40] {
        let x = HalfInt::from_int(j);
        let rows = compare_slice(&JQuad::new(x, x, x, x), x, false)?;
        println!("  j = {j:>2}: {:.3e}", mid_region_rms(&rows).unwrap_or(f64::NAN));
    }
    Ok(())
}
