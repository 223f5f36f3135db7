use std::f64::consts::PI;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use w6j::geometry::*;
use w6j::symbols::{j12_bounds, j23_bounds, JQuad};
use w6j::Error;

fn random_config(rng: &mut ChaCha8Rng) -> VectorConfig {
    loop {
        let mut v = [Vec3::zeros(); 4];
        for k in 0..3 {
            v[k] = Vec3::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        }
        v[3] = -(v[0] + v[1] + v[2]);
        let c = VectorConfig::new(v);
        let vol = signed_volume(&c).abs();
        let scale = v.iter().map(|x| x.norm()).fold(0.0, f64::max);
        if vol > 1e-3 * scale.powi(3) && v.iter().all(|x| x.norm() > 0.1) {
            return c;
        }
    }
}

#[test]
fn polygon_inequality_examples() {
    assert!(polygon_inequality([1.0, 1.0, 1.0, 1.0]));
    assert!(!polygon_inequality([1.0, 1.0, 1.0, 4.0]));
    assert!(polygon_inequality([1.0, 1.0, 1.0, 3.0]));
}

#[test]
fn classical_ranges() {
    assert_eq!(classical_j12_range([5.0, 3.5, 6.0, 6.5]).unwrap(), (1.5, 8.5));
    assert_eq!(classical_j23_range([5.0, 3.5, 6.0, 6.5]).unwrap(), (2.5, 9.5));
    assert_eq!(classical_j12_range([1.0; 4]).unwrap(), (0.0, 2.0));
    assert!(matches!(classical_j12_range([2.0, 1.0, 1.0, 5.0]), Err(Error::EmptyRange(_))));
}

#[test]
fn regular_tetrahedron() {
    let reg = (1.0f64 / 3.0).acos();
    assert!((cayley_menger(1.0, 1.0, 1.0, 1.0, 1.0, 1.0) - 4.0).abs() < 1e-12);
    let v = build_vectors([1.0; 4], 1.0, reg).unwrap();
    assert!((v.j23_vec().norm() - 1.0).abs() < 1e-12);
    assert!((signed_volume(&v) - 1.0 / (6.0 * 2f64.sqrt())).abs() < 1e-12);
    for phi in dihedral_angles(&v).unwrap().as_array() {
        assert!((phi - 1.2309594173407747).abs() < 1e-12);
    }
    let exact = cayley_menger_exact(std::array::from_fn(|_| BigRational::from_integer(1.into())));
    assert_eq!(exact, BigRational::from_integer(4.into()));
}

#[test]
fn build_vectors_gauge_and_mirror() {
    let q = [5.0, 3.5, 6.0, 6.5];
    let flat = build_vectors(q, 4.0, 0.0).unwrap();
    assert!(signed_volume(&flat).abs() < 1e-12);
    let a = build_vectors(q, 4.0, 1.1).unwrap();
    let b = build_vectors(q, 4.0, 2.0 * PI - 1.1).unwrap();
    assert!(signed_volume(&a) > 0.0);
    assert!((signed_volume(&a) + signed_volume(&b)).abs() < 1e-10);
    assert!((signed_volume(&a.time_reversed()) + signed_volume(&a)).abs() < 1e-12);
    assert!(a.closure_error() < 1e-12);
    let l = a.lengths();
    for (x, y) in [(l.j1, 5.0), (l.j2, 3.5), (l.j3, 6.0), (l.j4, 6.5), (l.j12, 4.0)] {
        assert!((x - y).abs() < 1e-12);
    }
    assert!((a.j12_vec().normalize() - Vec3::z()).norm() < 1e-12);
    assert!(a.j[2].y.abs() < 1e-12 && a.j[3].y.abs() < 1e-12);
    assert!((dihedral_angles(&a).unwrap().phi12 - 1.1).abs() < 1e-12);
    assert!(matches!(build_vectors([1.0, 1.0, 1.0, 1.0], 2.0, 1.0), Err(Error::DegenerateConfig(_))));
}

#[test]
fn cayley_menger_is_288_volume_squared() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..500 {
        let v = random_config(&mut rng);
        let l = v.lengths();
        let det = cayley_menger(l.j1, l.j2, l.j3, l.j4, l.j12, l.j23);
        let want = 288.0 * signed_volume(&v).powi(2);
        assert!((det - want).abs() <= 1e-8 * want.abs(), "{det} {want}");
    }
}

#[test]
fn extrema_match_a_sweep_and_are_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..500 {
        let l = random_config(&mut rng).lengths();
        let q = l.quad();
        let (lo, hi) = j23_extrema(q, l.j12).unwrap();
        // the extrema sit at φ12 = 0 and π; a dense sweep approaches them
        let n = 2000;
        let (mut smin, mut smax) = (f64::INFINITY, 0.0f64);
        for k in 0..=n {
            let phi = 2.0 * PI * k as f64 / n as f64;
            let x = build_vectors(q, l.j12, phi).unwrap().j23_vec().norm();
            smin = smin.min(x);
            smax = smax.max(x);
        }
        assert!((smin - lo).abs() < 1e-9 * l.scale() && (smax - hi).abs() < 1e-9 * l.scale());
        for x in [lo, hi] {
            let det = cayley_menger(l.j1, l.j2, l.j3, l.j4, l.j12, x);
            assert!(det.abs() < 1e-9 * l.scale().powi(8));
        }
        let beyond = cayley_menger(l.j1, l.j2, l.j3, l.j4, l.j12, hi * 1.05);
        assert!(beyond < 0.0);
        assert!(lo <= l.j23 && l.j23 <= hi);
        let (lo12, hi12) = j12_extrema(q, l.j23).unwrap();
        assert!(lo12 <= l.j12 + 1e-9 && l.j12 <= hi12 + 1e-9);
    }
}

#[test]
fn extrema_pinch_at_the_end_of_the_range() {
    let q = [5.0, 3.5, 6.0, 6.5];
    let (lo, hi) = j23_extrema(q, 8.5 - 1e-7).unwrap();
    assert!(hi - lo < 1e-2);
    let (lo, hi) = j23_extrema(q, 4.0).unwrap();
    let same_side = build_vectors(q, 4.0, 0.0).unwrap().j23_vec().norm();
    let opposite = build_vectors(q, 4.0, PI).unwrap().j23_vec().norm();
    assert!((same_side - lo).abs() < 1e-12 && (opposite - hi).abs() < 1e-12);
}

#[test]
fn caustic_stays_inside_the_square() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut violations = 0;
    for _ in 0..1000 {
        let q = random_config(&mut rng).lengths().quad();
        let (a0, a1) = classical_j12_range(q).unwrap();
        let (b0, b1) = classical_j23_range(q).unwrap();
        for k in 1..50 {
            let j12 = a0 + (a1 - a0) * k as f64 / 50.0;
            if let Ok((lo, hi)) = j23_extrema(q, j12) {
                let eps = 1e-9 * b1;
                if lo < b0 - eps || hi > b1 + eps {
                    violations += 1;
                }
            }
        }
    }
    assert_eq!(violations, 0);
}

#[test]
fn no_flat_quantized_tetrahedra() {
    // squared lengths (j + 1/2)² = (2j + 1)²/4
    let sq = |t: i64| BigRational::new(((t + 1) * (t + 1)).into(), 4.into());
    let max2 = 8;
    let mut checked = 0u64;
    for a in 0..=max2 {
        for b in 0..=max2 {
            for c in 0..=max2 {
                for d in 0..=max2 {
                    let q = JQuad::from_twice([a, b, c, d]);
                    if !q.has_integer_sum() {
                        continue;
                    }
                    let (x0, x1) = j12_bounds(&q);
                    let (y0, y1) = j23_bounds(&q);
                    let mut x = x0.twice();
                    while x <= x1.twice() {
                        let mut y = y0.twice();
                        while y <= y1.twice() {
                            let det = cayley_menger_exact([sq(a), sq(b), sq(c), sq(d), sq(x), sq(y)]);
                            assert!(!det.is_zero(), "{a} {b} {c} {d} {x} {y}");
                            checked += 1;
                            y += 2;
                        }
                        x += 2;
                    }
                }
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn region_classification() {
    let q = [5.0, 3.5, 6.0, 6.5];
    let at = |j12, j23| classify_region(&LengthSet::new(q[0], q[1], q[2], q[3], j12, j23));
    assert_eq!(at(5.0, 2.0), Region::NotExist);
    assert_eq!(at(5.0, 1.5 + 8.0), Region::Boundary);
    let (lo, hi) = j23_extrema(q, 5.0).unwrap();
    assert_eq!(at(5.0, 0.5 * (lo + hi)), Region::Allowed);
    assert_eq!(at(5.0, lo), Region::Caustic);
    assert_eq!(at(5.0, hi), Region::Caustic);
    assert_eq!(at(5.0, hi + 0.3), Region::Forbidden);
    assert_eq!(classify_region(&LengthSet::new(2.0, 1.0, 1.0, 5.0, 1.0, 1.0)), Region::NotExist);
}

#[test]
fn rodrigues_hamilton_identity() {
    let axes = [Vec3::x(), Vec3::y(), Vec3::z()];
    assert!((rodrigues_hamilton(axes, [PI / 2.0; 3]) - nalgebra::Matrix3::identity()).amax() < 1e-12);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1000 {
        let a: [Vec3; 3] = std::array::from_fn(|_| {
            Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)).normalize()
        });
        let Ok(phi) = spherical_triangle_angles(a) else { continue };
        let m = rodrigues_hamilton(a, phi);
        assert!((m - nalgebra::Matrix3::identity()).amax() < 1e-10);
    }
    let z = Vec3::z();
    let m = rodrigues_hamilton([z, z, z], [0.1, 0.2, 0.3]);
    assert!((m - rotation(&z, 1.2).into_inner()).amax() < 1e-12);
}

#[test]
fn rotation_cycle_on_random_tetrahedra() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let v = random_config(&mut rng);
        for c in [v, v.mirrored(), v.time_reversed()] {
            let r = rotation_cycle(&c).unwrap();
            assert!(r.composite_error < 1e-10);
            assert!(r.loop_error < 1e-10);
            assert!(r.lift_error < 1e-10);
            assert_eq!(r.lift_signs, [-1, 1, -1, 1]);
        }
    }
}
