//! Tetrahedra built from four angular momenta: Cayley–Menger determinant,
//! vector reconstruction, dihedral angles, region classification and the
//! rotation cycle with its SU(2) lifts.

mod rotation;
mod tetra;

pub use rotation::{
    rodrigues_hamilton, rotation, rotation_cycle, spherical_triangle_angles, spin_rotation, CycleReport,
};
pub(crate) use tetra::{hinge, hinge_params};
pub use tetra::{
    build_vectors, caustic_tolerance, cayley_menger, cayley_menger_exact, classical_j12_range,
    classical_j23_range, classify_region, dihedral_angles, j12_extrema, j23_extrema, phi12_for_j23,
    polygon_inequality, signed_volume, DihedralSet, LengthSet, Region, Vec3, VectorConfig,
};
