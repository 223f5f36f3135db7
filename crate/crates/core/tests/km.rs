use std::f64::consts::PI;

use w6j::error::Error;
use w6j::geometry::{cayley_menger, classical_j23_range};
use w6j::km::{KMPoint, KMSphere, Observable, SphereEmbedding};
use w6j::symbols::{dim_zs, j12_bounds, j23_bounds, JQuad};
use w6j::HalfInt;

fn lengths(q: &JQuad) -> [f64; 4] {
    q.as_array().map(|j| j.to_f64() + 0.5)
}

fn fig_quad() -> KMSphere {
    KMSphere::new([5.0, 3.5, 6.0, 6.5]).unwrap()
}

fn quantized_quads(max_twice: i64) -> Vec<JQuad> {
    let mut out = Vec::new();
    for a in 0..=max_twice {
        for b in 0..=max_twice {
            for c in 0..=max_twice {
                for d in 0..=max_twice {
                    let q = JQuad::from_twice([a, b, c, d]);
                    if dim_zs(&q) >= 2 {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn total_area_is_two_pi_times_dimension() {
    let mut checked = 0;
    for q in quantized_quads(12).into_iter().step_by(7) {
        let s = KMSphere::new(lengths(&q)).unwrap();
        let n = s.total_area() / (2.0 * PI);
        assert_eq!(n.round() as i64, dim_zs(&q), "{q:?}");
        assert!((n - dim_zs(&q) as f64).abs() < 1e-9, "{q:?}: {n}");
        checked += 1;
    }
    assert!(checked > 500);
}

#[test]
fn j12_orbits_enclose_half_odd_cells() {
    for q in quantized_quads(8).into_iter().step_by(11) {
        let s = KMSphere::new(lengths(&q)).unwrap();
        let (lo, hi) = j12_bounds(&q);
        let mut prev: Option<f64> = None;
        let mut j12 = lo;
        let mut n = 0;
        while j12 <= hi {
            let a = s.enclosed_area(Observable::J12, j12.to_f64() + 0.5).unwrap();
            let want = (n as f64 + 0.5) * 2.0 * PI;
            assert!((a - want).abs() <= 1e-6 * want, "{q:?} n={n}: {a} vs {want}");
            if let Some(p) = prev {
                assert!(((a - p) - 2.0 * PI).abs() <= 1e-6 * 2.0 * PI);
            }
            prev = Some(a);
            j12 = j12 + HalfInt::ONE;
            n += 1;
        }
    }
}

#[test]
fn j23_orbits_enclose_half_odd_cells() {
    let quads = [[9, 6, 11, 12], [2, 2, 2, 2], [4, 6, 8, 6], [7, 5, 6, 8], [20, 20, 20, 20]];
    for t in quads {
        let q = JQuad::from_twice(t);
        let s = KMSphere::new(lengths(&q)).unwrap();
        let (lo, hi) = j23_bounds(&q);
        let mut j23 = lo;
        let mut m = 0;
        while j23 <= hi {
            let a = s.enclosed_area(Observable::J23, j23.to_f64() + 0.5).unwrap();
            let want = (m as f64 + 0.5) * 2.0 * PI;
            assert!((a - want).abs() <= 1e-6 * want, "{t:?} m={m}: {a} vs {want}");
            j23 = j23 + HalfInt::ONE;
            m += 1;
        }
    }
}

#[test]
fn j13_and_volume_areas_partition_the_sphere() {
    let s = fig_quad();
    let total = s.total_area();
    let a0 = s.enclosed_area(Observable::V, 0.0).unwrap();
    assert!((a0 - 0.5 * total).abs() < 1e-7 * total);
    let v = 3.0;
    let plus = s.enclosed_area(Observable::V, v).unwrap();
    let minus = s.enclosed_area(Observable::V, -v).unwrap();
    assert!((plus + minus - total).abs() < 1e-7 * total);
    let mut last = 0.0;
    for x in [3.5, 5.0, 7.0, 9.0] {
        let a = s.enclosed_area(Observable::J13, x).unwrap();
        assert!(a > last && a < total);
        last = a;
    }
}

#[test]
fn observables_examples() {
    let s = fig_quad();
    let j12 = 5.3;
    let o = s.observables(KMPoint { j12, phi12: 0.0 }).unwrap();
    assert!(o.volume.abs() < 1e-12);
    for phi in [0.3, 1.1, 2.0, 2.9] {
        let a = s.observables(KMPoint { j12, phi12: phi }).unwrap();
        let b = s.observables(KMPoint { j12, phi12: 2.0 * PI - phi }).unwrap();
        assert!((a.j23 - b.j23).abs() < 1e-12);
        assert!((a.j13 - b.j13).abs() < 1e-12);
        assert!((a.volume + b.volume).abs() < 1e-10);
        assert!(a.volume > 0.0);
    }
    for j12 in [s.j12_min, s.j12_max] {
        let first = s.observables(KMPoint { j12, phi12: 0.0 }).unwrap();
        for phi in [0.7, 2.5, 4.0] {
            let o = s.observables(KMPoint { j12, phi12: phi }).unwrap();
            assert!((o.j23 - first.j23).abs() < 1e-12);
            assert!((o.j13 - first.j13).abs() < 1e-12);
            assert!(o.volume.abs() < 1e-12);
        }
    }
    assert!(matches!(
        s.observables(KMPoint { j12: s.j12_max + 1.0, phi12: 0.0 }),
        Err(Error::Domain(_))
    ));
}

#[test]
fn j23_extrema_over_the_sphere() {
    let s = fig_quad();
    let j23_at = |j12: f64, phi12: f64| s.observables(KMPoint { j12, phi12 }).unwrap().j23;
    let refine = |phi12: f64, sign: f64| {
        let n = 2000;
        let f = |j12: f64| sign * j23_at(j12, phi12);
        let k = (0..=n)
            .map(|k| s.j12_min + s.width() * k as f64 / n as f64)
            .max_by(|a, b| f(*a).total_cmp(&f(*b)))
            .unwrap();
        let h = s.width() / n as f64;
        let (mut a, mut b) = ((k - h).max(s.j12_min), (k + h).min(s.j12_max));
        for _ in 0..200 {
            let (m1, m2) = (a + (b - a) / 3.0, b - (b - a) / 3.0);
            if f(m1) < f(m2) {
                a = m1;
            } else {
                b = m2;
            }
        }
        sign * f(0.5 * (a + b))
    };
    let (lo, hi) = (refine(0.0, -1.0), refine(PI, 1.0));
    let (glo, ghi) = classical_j23_range(s.quad).unwrap();
    assert!((lo - glo).abs() < 1e-9 && (hi - ghi).abs() < 1e-9, "{lo} {hi} vs {glo} {ghi}");
    let top = s.level_curve(Observable::J23, ghi - 1e-2, 2000).unwrap();
    for p in &top {
        let c = s.config(*p).unwrap();
        assert!(c.j[0].x < 0.0 || (p.phi12 - PI).abs() < 1e-3);
    }
    assert!(matches!(
        s.level_curve(Observable::J23, ghi + 0.1, 50),
        Err(Error::EmptyLevelSet(_))
    ));
}

#[test]
fn level_curves_lie_on_their_level_sets() {
    let s = fig_quad();
    for (obs, value) in [(Observable::J23, 6.0), (Observable::J13, 7.5), (Observable::V, 4.0), (Observable::V, -4.0)] {
        let pts = s.level_curve(obs, value, 200).unwrap();
        assert!(pts.len() > 20);
        for p in &pts {
            let got = s.value(obs, *p).unwrap();
            assert!((got - value).abs() < 1e-8 * value.abs().max(1.0), "{obs:?}: {got} vs {value}");
        }
        let half = pts.len() / 2;
        assert!(pts[..half].windows(2).all(|w| w[1].j12 >= w[0].j12));
        assert!(pts[half..].windows(2).all(|w| w[1].j12 <= w[0].j12));
    }
    let circle = s.level_curve(Observable::J12, 6.0, 64).unwrap();
    assert_eq!(circle.len(), 64);
    let theta = s.embed(circle[0]).unwrap().theta;
    for p in &circle {
        assert!((s.embed(*p).unwrap().theta - theta).abs() < 1e-14);
    }
    let meridian = s.level_curve(Observable::V, 0.0, 100).unwrap();
    for p in &meridian {
        assert!(p.phi12.abs() < 1e-12 || (p.phi12 - PI).abs() < 1e-12);
    }
}

#[test]
fn butterfly_sign_tracks_volume() {
    let s = fig_quad();
    for j12 in [3.0, 5.0, 7.0] {
        let n = 720;
        let h = 1e-6;
        for k in 1..n {
            let phi = 2.0 * PI * k as f64 / n as f64;
            let v = s.observables(KMPoint { j12, phi12: phi }).unwrap().volume;
            if v.abs() < 1e-6 {
                continue;
            }
            let f = |p: f64| s.observables(KMPoint { j12, phi12: p }).unwrap().j23;
            let d = (f(phi + h) - f(phi - h)) / (2.0 * h);
            assert_eq!(d > 0.0, v > 0.0, "J12={j12} phi={phi}");
        }
    }
}

#[test]
fn caustic_lies_on_the_determinant_zero_set() {
    let s = fig_quad();
    let curve = s.caustic_curve(400);
    let scale: f64 = 6.5;
    let (lo23, hi23) = classical_j23_range(s.quad).unwrap();
    for &(j12, j23) in &curve {
        let q = s.quad;
        assert!(cayley_menger(q[0], q[1], q[2], q[3], j12, j23).abs() < 1e-7 * scale.powi(8));
        assert!(j12 >= s.j12_min - 1e-12 && j12 <= s.j12_max + 1e-12);
        assert!(j23 >= lo23 - 1e-9 && j23 <= hi23 + 1e-9);
    }
    assert!(curve.iter().any(|p| (p.0 - s.j12_min).abs() < 1e-12));
    assert!(curve.iter().any(|p| (p.0 - s.j12_max).abs() < 1e-12));
    assert!(curve.iter().any(|p| (p.1 - lo23).abs() < 1e-3));
    assert!(curve.iter().any(|p| (p.1 - hi23).abs() < 1e-3));
}

#[test]
fn symmetric_quad_caustic_is_symmetric() {
    let s = KMSphere::new([1.0, 1.0, 1.0, 1.0]).unwrap();
    let curve = s.caustic_curve(200);
    for &(a, b) in &curve {
        assert!(s.caustic_residual(b, a) < 1e-9, "({a}, {b})");
    }
}

#[test]
fn embedding_round_trip() {
    let s = fig_quad();
    let n = s.embed(KMPoint { j12: s.j12_max, phi12: 1.0 }).unwrap();
    assert!(n.theta.abs() < 1e-12);
    let south = s.embed(KMPoint { j12: s.j12_min, phi12: 1.0 }).unwrap();
    assert!((south.theta - PI).abs() < 1e-12);
    let mid = s.embed(KMPoint { j12: s.j12_min + 0.5 * s.width(), phi12: 1.0 }).unwrap();
    assert!((mid.theta - PI / 2.0).abs() < 1e-12);
    for k in 1..100 {
        let p = KMPoint { j12: s.j12_min + s.width() * k as f64 / 100.0, phi12: 0.06 * k as f64 };
        let back = s.inverse(s.embed(p).unwrap());
        assert!((back.j12 - p.j12).abs() < 1e-12 && (back.phi12 - p.phi12).abs() < 1e-12);
    }
    let e = SphereEmbedding { theta: 1.0, phi: 2.0 };
    let c = e.cartesian();
    assert!(((c[0] * c[0] + c[1] * c[1] + c[2] * c[2]) - 1.0).abs() < 1e-15);
}
