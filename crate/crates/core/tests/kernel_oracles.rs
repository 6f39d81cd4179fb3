//! Cross-checks of the distance kernels against independently coded oracles:
//! a Poincare-ball two-point formula, dense grids on planes and segments, and
//! a handful of frozen reference values computed outside this crate.

use cpwidth::hyp::{
    dist_point_plane, dist_point_point, dist_point_segment, klein_embed, mink_inner,
    GeodesicSegment, HPlane, HPoint, IdealPoint, MinkVec, SegEnd,
};
use cpwidth::mobius::{mobius_to_lorentz, Isom, MobiusMap};
use nalgebra::Vector3;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Second closed form for the two-point distance, through the Poincare ball.
fn poincare_dist(k1: Vector3<f64>, k2: Vector3<f64>) -> f64 {
    let to_poincare = |k: Vector3<f64>| k / (1.0 + (1.0 - k.norm_squared()).sqrt());
    let p1 = to_poincare(k1);
    let p2 = to_poincare(k2);
    let num = 2.0 * (p1 - p2).norm_squared();
    let den = (1.0 - p1.norm_squared()) * (1.0 - p2.norm_squared());
    (1.0 + num / den).acosh()
}

fn rand_klein(rng: &mut ChaCha20Rng, r: f64) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.gen_range(-r..r),
            rng.gen_range(-r..r),
            rng.gen_range(-r..r),
        );
        if v.norm() < r {
            return v;
        }
    }
}

fn rand_unit(rng: &mut ChaCha20Rng) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 0.1 && n < 1.0 {
            return v / n;
        }
    }
}

#[test]
fn two_point_distance_matches_poincare_formula() {
    // frozen instance, value computed independently
    let k1 = Vector3::new(0.1, 0.2, 0.3);
    let k2 = Vector3::new(-0.4, 0.1, 0.5);
    let d = dist_point_point(&klein_embed(k1).unwrap(), &klein_embed(k2).unwrap());
    assert!((d - 0.6684339173564516).abs() < 1e-12);

    let mut rng = ChaCha20Rng::seed_from_u64(41);
    for _ in 0..1000 {
        let k1 = rand_klein(&mut rng, 0.95);
        let k2 = rand_klein(&mut rng, 0.95);
        let d = dist_point_point(&klein_embed(k1).unwrap(), &klein_embed(k2).unwrap());
        assert!((d - poincare_dist(k1, k2)).abs() < 1e-9);
    }
}

/// Brute-force minimization over a plane: geodesic polar grid about the
/// plane point closest to the ball center, refined in three stages.
fn plane_grid_min(p: &HPoint, u: Vector3<f64>, c: f64) -> f64 {
    let pick = if u.x.abs() < 0.9 {
        Vector3::x()
    } else {
        Vector3::y()
    };
    let e1 = (pick - u * pick.dot(&u)).normalize();
    let e2 = u.cross(&e1);
    let base = u * c;
    let rmax = (1.0 - c * c).sqrt();
    let eval = |a: f64, b: f64| -> f64 {
        let k = base + (e1 * a + e2 * b) * rmax;
        if k.norm() >= 1.0 - 1e-9 {
            return f64::INFINITY;
        }
        dist_point_point(p, &klein_embed(k).unwrap())
    };
    let (mut ca, mut cb, mut h) = (0.0f64, 0.0f64, 0.5f64);
    let mut best = f64::INFINITY;
    for _ in 0..14 {
        let (mut na, mut nb) = (ca, cb);
        for i in -8..=8 {
            for j in -8..=8 {
                let (a, b) = (ca + h * i as f64 / 8.0, cb + h * j as f64 / 8.0);
                if a * a + b * b >= 1.0 {
                    continue;
                }
                let d = eval(a, b);
                if d < best {
                    best = d;
                    na = a;
                    nb = b;
                }
            }
        }
        ca = na;
        cb = nb;
        h *= 0.35;
    }
    best
}

#[test]
fn plane_distance_matches_grid_oracle() {
    // frozen instance
    let p = klein_embed(Vector3::new(0.3, -0.2, 0.1)).unwrap();
    let pl = HPlane::from_klein(Vector3::new(1.0, 2.0, 2.0).normalize(), 0.4).unwrap();
    let (d, _) = dist_point_plane(&p, &pl);
    assert!((d - 0.4190315175730463).abs() < 1e-12);

    let mut rng = ChaCha20Rng::seed_from_u64(42);
    for _ in 0..1000 {
        let u = rand_unit(&mut rng);
        let c = rng.gen_range(-0.7..0.7);
        let pl = HPlane::from_klein(u, c).unwrap();
        let p = klein_embed(rand_klein(&mut rng, 0.8)).unwrap();
        let (d, foot) = dist_point_plane(&p, &pl);
        assert!(mink_inner(foot.mink(), pl.mink()).abs() < 1e-9);
        let grid = plane_grid_min(&p, u, c);
        assert!(
            (d - grid).abs() < 1e-6,
            "plane distance {d} vs grid {grid}"
        );
    }
}

/// Dense sampling along the Klein chord, which is the geodesic.
fn segment_sample_min(p: &HPoint, ka: Vector3<f64>, kb: Vector3<f64>) -> f64 {
    let eval = |t: f64| -> f64 {
        let k = ka + (kb - ka) * t;
        if k.norm() >= 1.0 - 1e-12 {
            return f64::INFINITY;
        }
        dist_point_point(p, &klein_embed(k).unwrap())
    };
    let (mut c, mut h) = (0.5f64, 0.5f64);
    let mut best = f64::INFINITY;
    for _ in 0..16 {
        let mut nc = c;
        for i in -10..=10 {
            let t = (c + h * i as f64 / 10.0).clamp(0.0, 1.0);
            let d = eval(t);
            if d < best {
                best = d;
                nc = t;
            }
        }
        c = nc;
        h *= 0.3;
    }
    best
}

#[test]
fn segment_distance_matches_sampling_oracle() {
    // frozen instances: interior foot, clamped foot, two ideal endpoints
    let a = klein_embed(Vector3::new(0.5, 0.0, 0.0)).unwrap();
    let b = klein_embed(Vector3::new(0.0, 0.5, 0.0)).unwrap();
    let seg = GeodesicSegment::new(SegEnd::Finite(a), SegEnd::Finite(b)).unwrap();
    let p = klein_embed(Vector3::new(0.1, 0.1, 0.4)).unwrap();
    assert!((dist_point_segment(&p, &seg).0 - 0.48815891010045454).abs() < 1e-12);
    let p2 = klein_embed(Vector3::new(0.7, -0.3, 0.0)).unwrap();
    assert!((dist_point_segment(&p2, &seg).0 - 0.555214747765319).abs() < 1e-12);
    let ideal = GeodesicSegment::ideal(Vector3::x(), Vector3::y()).unwrap();
    let p3 = klein_embed(Vector3::new(0.2, 0.1, -0.3)).unwrap();
    assert!((dist_point_segment(&p3, &ideal).0 - 0.7491603447709949).abs() < 1e-11);

    let mut rng = ChaCha20Rng::seed_from_u64(43);
    for _ in 0..700 {
        let ka = rand_klein(&mut rng, 0.9);
        let kb = rand_klein(&mut rng, 0.9);
        if (ka - kb).norm() < 0.05 {
            continue;
        }
        let seg = GeodesicSegment::new(
            SegEnd::Finite(klein_embed(ka).unwrap()),
            SegEnd::Finite(klein_embed(kb).unwrap()),
        )
        .unwrap();
        let p = klein_embed(rand_klein(&mut rng, 0.9)).unwrap();
        let (d, _) = dist_point_segment(&p, &seg);
        let oracle = segment_sample_min(&p, ka, kb);
        assert!((d - oracle).abs() < 1e-6, "segment {d} vs oracle {oracle}");
    }
    // ideal endpoints against sampling on a slightly shrunk chord
    for _ in 0..300 {
        let ua = rand_unit(&mut rng);
        let ub = rand_unit(&mut rng);
        if (ua - ub).norm() < 0.2 {
            continue;
        }
        let seg = GeodesicSegment::ideal(ua, ub).unwrap();
        let p = klein_embed(rand_klein(&mut rng, 0.8)).unwrap();
        let (d, _) = dist_point_segment(&p, &seg);
        let oracle = segment_sample_min(&p, ua * (1.0 - 1e-9), ub * (1.0 - 1e-9));
        assert!((d - oracle).abs() < 1e-4, "ideal segment {d} vs {oracle}");
    }
}

#[test]
fn segment_distance_never_below_line_distance() {
    // the full-line distance through the span is a lower bound; clamping to an
    // endpoint can only increase it
    let mut rng = ChaCha20Rng::seed_from_u64(44);
    for _ in 0..500 {
        let ka = rand_klein(&mut rng, 0.9);
        let kb = rand_klein(&mut rng, 0.9);
        if (ka - kb).norm() < 0.05 {
            continue;
        }
        let a = klein_embed(ka).unwrap();
        let b = klein_embed(kb).unwrap();
        let seg = GeodesicSegment::new(SegEnd::Finite(a), SegEnd::Finite(b)).unwrap();
        let p = klein_embed(rand_klein(&mut rng, 0.9)).unwrap();
        let (d, _) = dist_point_segment(&p, &seg);
        let (da, db) = (dist_point_point(&p, &a), dist_point_point(&p, &b));
        assert!(d <= da + 1e-12 && d <= db + 1e-12);
    }
}

#[test]
fn paper_square_pole_inner_product() {
    let m = HPoint::normalize(MinkVec::new(2.0, 1.0, 1.0, 0.0)).unwrap();
    let v = MinkVec::new(1.0, 1.0, -1.0, 0.0);
    assert!((mink_inner(m.mink(), &v) + (2.0f64).sqrt()).abs() < 1e-12);
}

#[test]
fn kernels_are_isometry_equivariant_to_1e9() {
    let mut rng = ChaCha20Rng::seed_from_u64(45);
    for _ in 0..200 {
        let mut c = || Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        let m = match MobiusMap::new(c(), c(), c(), c()) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let l = mobius_to_lorentz(&m);
        let p = klein_embed(rand_klein(&mut rng, 0.7)).unwrap();
        let q = klein_embed(rand_klein(&mut rng, 0.7)).unwrap();
        assert!(
            (dist_point_point(&p, &q) - dist_point_point(&p.transform(&l), &q.transform(&l)))
                .abs()
                < 1e-9
        );
        let seg = GeodesicSegment::new(
            SegEnd::Ideal(IdealPoint::from_sphere(rand_unit(&mut rng)).unwrap()),
            SegEnd::Ideal(IdealPoint::from_sphere(rand_unit(&mut rng)).unwrap()),
        );
        if let Ok(seg) = seg {
            let (d0, _) = dist_point_segment(&p, &seg);
            let (d1, _) = dist_point_segment(&p.transform(&l), &seg.transform(&l));
            assert!((d0 - d1).abs() < 1e-9);
        }
    }
}
