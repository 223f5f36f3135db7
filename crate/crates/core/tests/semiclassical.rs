use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use w6j::exact::rat;
use w6j::geometry::{build_vectors, classical_j12_range, dihedral_angles, j23_extrema, LengthSet, Region, Vec3, VectorConfig};
use w6j::semiclassical::*;
use w6j::symbols::{dim_zs, six_j_msum, JQuad, SixJArgs};
use w6j::{Error, HalfInt};

fn h(t: i64) -> HalfInt {
    HalfInt::from_twice(t)
}

fn random_allowed(rng: &mut ChaCha8Rng) -> VectorConfig {
    loop {
        let q = [0; 4].map(|_| rng.gen_range(1.0..8.0));
        let Ok((a, b)) = classical_j12_range(q) else { continue };
        let j12 = rng.gen_range(a..b);
        let Ok(v) = build_vectors(q, j12, rng.gen_range(0.05..PI - 0.05)) else { continue };
        if dihedral_angles(&v).is_ok() {
            return v;
        }
    }
}

#[test]
fn quantization() {
    assert_eq!(quantize(h(0)), 0.5);
    assert_eq!(quantize(h(1)), 1.0);
    assert_eq!(quantize(h(12)), 6.5);
}

#[test]
fn regular_tetrahedron_phase_and_amplitude() {
    let reg = (1.0f64 / 3.0).acos();
    let v = build_vectors([1.0; 4], 1.0, reg).unwrap();
    let psi = pr_phase(&v).unwrap();
    assert!((psi - 6.0 * (PI - 1.2309594173407747)).abs() < 1e-12);
    assert!((psi - 11.463).abs() < 1e-3);
    let big = build_vectors([3.0; 4], 3.0, reg).unwrap();
    assert!((pr_phase(&big).unwrap() - 3.0 * psi).abs() < 1e-10);
    assert!((wigner_amplitude(&v) - 1.0 / 2f64.sqrt()).abs() < 1e-12);
    assert!((wigner_amplitude(&v.time_reversed()) + wigner_amplitude(&v)).abs() < 1e-12);
    let flat = build_vectors([5.0, 3.5, 6.0, 6.5], 5.0, 0.0).unwrap();
    assert!(wigner_amplitude(&flat).abs() < 1e-12);
}

#[test]
fn phase_is_continuous_towards_the_flat_limit() {
    let q = [5.0, 3.5, 6.0, 6.5];
    let mut prev = None;
    for k in 1..=200 {
        let phi = 0.2 * (1.0 - k as f64 / 200.0) + 1e-6;
        let psi = pr_phase(&build_vectors(q, 5.0, phi).unwrap()).unwrap();
        if let Some(p) = prev {
            assert!((psi - p as f64).abs() < 0.05);
        }
        prev = Some(psi);
    }
}

#[test]
fn action_identities_on_random_configurations() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let v = random_allowed(&mut rng);
        for c in [v, v.time_reversed()] {
            let s1 = relative_action(&c).unwrap();
            let s2 = relative_action_from_phase(&c).unwrap();
            let s3 = relative_action_from_holonomy(&c).unwrap();
            assert!((s1 - s2).abs() < 1e-10, "{s1} {s2}");
            assert!((s1 - s3).abs() < 1e-9, "{s1} {s3}");
        }
    }
}

#[test]
fn quantized_action_wraps_to_minus_twice_psi() {
    for t in [[2, 2, 2, 2, 2, 2], [9, 6, 11, 12, 9, 8], [6, 4, 4, 6, 4, 6]] {
        let args = SixJArgs::from_twice(t);
        let q = QuantizedLengths::new(&args).unwrap();
        assert!(q.parity_sign().abs() == 1);
        let Ok(v) = q.lengths().build() else { continue };
        let s = relative_action(&v).unwrap();
        let psi = pr_phase(&v).unwrap();
        let d = (s + 2.0 * psi) / (2.0 * PI);
        assert!((d - d.round()).abs() < 1e-9, "{args}: {d}");
    }
}

#[test]
fn psi_generates_the_exterior_angles() {
    let base = LengthSet::new(5.0, 3.5, 6.0, 6.5, 5.0, 6.0);
    let psi_at = |l: LengthSet| pr_phase(&l.build().unwrap()).unwrap();
    let d = dihedral_angles(&base.build().unwrap()).unwrap();
    let step = 1e-5;
    let mut p = base;
    let mut m = base;
    p.j12 += step;
    m.j12 -= step;
    let d12 = (psi_at(p) - psi_at(m)) / (2.0 * step);
    assert!((d12 - (PI - d.phi12)).abs() < 1e-4);
    let (mut p, mut m) = (base, base);
    p.j23 += step;
    m.j23 -= step;
    let d23 = (psi_at(p) - psi_at(m)) / (2.0 * step);
    assert!((d23 - (PI - d.phi23)).abs() < 1e-4);
}

#[test]
fn ponzano_regge_small_and_forbidden() {
    let args = SixJArgs::from_ints([1; 6]);
    let pr = ponzano_regge(&QuantizedLengths::new(&args).unwrap()).unwrap();
    assert!(pr.value.is_finite());
    assert!((pr.value - 1.0 / 6.0).abs() < 0.05);
    assert!((pr.amplitude - 1.0 / (12.0 * PI * pr.volume.abs()).sqrt()).abs() < 1e-15);
    assert_eq!(pr.region, Region::Allowed);
    let q = JQuad::from_twice([9, 6, 11, 12]);
    let (j12, forbidden) = [3, 5, 7, 9, 11, 13, 15]
        .into_iter()
        .find_map(|t| {
            let rows = compare_slice(&q, h(t), false).unwrap();
            rows.into_iter().find(|r| r.region == Region::Forbidden).map(|r| (h(t), r))
        })
        .unwrap();
    assert!(forbidden.pr.is_none());
    let args = SixJArgs::new(q.j1, q.j2, j12, q.j3, q.j4, forbidden.j23);
    assert!(matches!(ponzano_regge(&QuantizedLengths::new(&args).unwrap()), Err(Error::NotAllowed(_))));
}

#[test]
fn compare_slice_has_one_row_per_state() {
    let q = JQuad::from_twice([9, 6, 11, 12]);
    let rows = compare_slice(&q, h(9), false).unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows.len() as i64, dim_zs(&q));
    let oracle = compare_slice(&q, h(9), true).unwrap();
    assert_eq!(rows, oracle);
    for r in &rows {
        assert_eq!(r.pr.is_some(), r.region == Region::Allowed);
    }
    assert_eq!(rows[0].exact_text, six_j_msum(&SixJArgs::new(q.j1, q.j2, h(9), q.j3, q.j4, rows[0].j23)).unwrap().to_string());
}

#[test]
fn larger_quads_agree_better() {
    let small = compare_slice(&JQuad::from_twice([9, 6, 11, 12]), h(9), false).unwrap();
    let large = compare_slice(&JQuad::from_twice([39, 27, 47, 51]), h(40), false).unwrap();
    let (a, b) = (mid_region_rms(&small).unwrap(), mid_region_rms(&large).unwrap());
    assert!(b < a, "{a} {b}");
}

#[test]
fn equilateral_family_converges() {
    let mut prev = f64::INFINITY;
    for j in [5, 10, 20] {
        let x = HalfInt::from_int(j);
        let rows = compare_slice(&JQuad::new(x, x, x, x), x, false).unwrap();
        let rms = mid_region_rms(&rows).unwrap();
        assert!(rms < prev, "j = {j}: {rms} ≥ {prev}");
        prev = rms;
    }
}

#[test]
fn weyl_eigenvalues() {
    assert_eq!(weyl_eigenvalue(WeylOperator::I, h(4)).unwrap(), rat(2, 1));
    assert_eq!(weyl_eigenvalue(WeylOperator::JsqR, h(4)).unwrap(), rat(47, 8));
    assert_eq!(weyl_eigenvalue(WeylOperator::Jsq12, h(2)).unwrap(), rat(3, 2));
    for t in 0..20 {
        let j = h(t);
        assert_eq!(weyl_eigenvalue(WeylOperator::JsqR, j).unwrap(), casimir(j) - rat(1, 8));
        assert_eq!(weyl_eigenvalue(WeylOperator::Jsq23, j).unwrap(), casimir(j) - rat(1, 2));
        assert_eq!(weyl_eigenvalue(WeylOperator::I, j).unwrap(), rat(t, 2));
    }
    assert_eq!("Jsq_12".parse::<WeylOperator>().unwrap(), WeylOperator::Jsq12);
    assert!(matches!("Lz".parse::<WeylOperator>(), Err(Error::UnknownOperator(_))));
}

#[test]
fn extrema_and_branch_choice() {
    let l = LengthSet::new(5.0, 3.5, 6.0, 6.5, 5.0, 6.0);
    let v = l.build().unwrap();
    assert!(w6j::geometry::signed_volume(&v) > 0.0);
    assert!((v.j23_vec().norm() - 6.0).abs() < 1e-12);
    let (lo, hi) = j23_extrema(l.quad(), 5.0).unwrap();
    assert!(lo < 6.0 && 6.0 < hi);
    let _ = Vec3::zeros();
}
