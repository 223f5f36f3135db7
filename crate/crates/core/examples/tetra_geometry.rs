//! Tetrahedra from six lengths: vectors, volume, Cayley–Menger determinant,
//! dihedral angles, and the allowed/forbidden classification of the
//! (J12, J23) square.

use w6j::geometry::{
    build_vectors, cayley_menger, classical_j12_range, classical_j23_range, classify_region,
    dihedral_angles, j23_extrema, signed_volume, LengthSet,
};

fn main() -> w6j::Result<()> {
    let q = [5.0, 3.5, 6.0, 6.5];
    let (a0, a1) = classical_j12_range(q)?;
    let (b0, b1) = classical_j23_range(q)?;
    println!("quad {q:?}: J12 in [{a0}, {a1}], J23 in [{b0}, {b1}]");

    let v = build_vectors(q, 5.0, 1.2)?;
    let l = v.lengths();
    let vol = signed_volume(&v);
    println!("J12 = 5, phi12 = 1.2: J23 = {:.6}, V = {vol:.6}", l.j23);
    println!("  CM = {:.6}, 288 V^2 = {:.6}", cayley_menger(l.j1, l.j2, l.j3, l.j4, l.j12, l.j23), 288.0 * vol * vol);
    let d = dihedral_angles(&v)?;
    println!("  dihedral angles {:?}", d.as_array().map(|x| (x * 1e4).round() / 1e4));

    println!("\ncaustic (flat tetrahedra) at a few J12:");
    for j12 in [2.0, 3.5, 5.0, 6.5, 8.0] {
        let (lo, hi) = j23_extrema(q, j12)?;
        println!("  J12 = {j12}: allowed J23 in [{lo:.6}, {hi:.6}]");
    }

    println!("\nregion map (rows J23 descending, U/A/F/C/B):");
    let n = 24;
    for r in (0..=n).rev() {
        let j23 = b0 - 1.0 + (b1 - b0 + 2.0) * r as f64 / n as f64;
        let row: String = (0..=n)
            .map(|c| {
                let j12 = a0 - 1.0 + (a1 - a0 + 2.0) * c as f64 / n as f64;
                classify_region(&LengthSet::new(q[0], q[1], q[2], q[3], j12, j23)).tag()
            })
            .collect();
        println!("  {row}");
    }
    Ok(())
}
