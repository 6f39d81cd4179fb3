//! Riemann-sphere arithmetic: stereographic projection, Mobius maps, and
//! their extension to Lorentz isometries of H^3.
//!
//! Stereographic convention (shared by every module): infinity at the north
//! pole (0,0,1), zero at the south pole, the unit circle on the equator.

use nalgebra::{Matrix2, Matrix4, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hyp::{GeodesicSegment, HPlane, HPoint, IdealPoint, MinkVec, SegEnd};
use crate::TOL_ALG;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ComplexPoint {
    Finite(Complex64),
    Infinity,
}

impl ComplexPoint {
    pub fn finite(re: f64, im: f64) -> Self {
        ComplexPoint::Finite(Complex64::new(re, im))
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        ComplexPoint::Finite(z)
    }
}

/// z maps to (2 Re z, 2 Im z, |z|^2 - 1)/(1 + |z|^2); infinity to (0,0,1).
pub fn stereo_to_sphere(z: &ComplexPoint) -> Vector3<f64> {
    match z {
        ComplexPoint::Infinity => Vector3::new(0.0, 0.0, 1.0),
        ComplexPoint::Finite(z) => {
            let n2 = z.norm_sqr();
            if n2.is_infinite() {
                return Vector3::new(0.0, 0.0, 1.0);
            }
            Vector3::new(2.0 * z.re, 2.0 * z.im, n2 - 1.0) / (1.0 + n2)
        }
    }
}

pub fn sphere_to_plane(u: &Vector3<f64>) -> Result<ComplexPoint> {
    if (u.norm() - 1.0).abs() > TOL_ALG {
        return Err(Error::NotOnSphere(u.norm()));
    }
    let denom = 1.0 - u.z;
    if denom < 1e-12 {
        return Ok(ComplexPoint::Infinity);
    }
    Ok(ComplexPoint::finite(u.x / denom, u.y / denom))
}

/// Fractional-linear map z -> (az+b)/(cz+d), stored with ad - bc = 1.
#[derive(Clone, Copy, Debug)]
pub struct MobiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl MobiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let det = a * d - b * c;
        if det.norm() < 1e-12 {
            return Err(Error::SingularMobius);
        }
        let s = det.sqrt();
        Ok(MobiusMap {
            a: a / s,
            b: b / s,
            c: c / s,
            d: d / s,
        })
    }

    pub fn identity() -> Self {
        MobiusMap {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    pub fn translation(w: Complex64) -> Self {
        MobiusMap {
            a: Complex64::new(1.0, 0.0),
            b: w,
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    /// diag(sqrt(s), 1/sqrt(s)): z -> s z.
    pub fn scaling(s: Complex64) -> Result<Self> {
        if s.norm() < 1e-12 {
            return Err(Error::SingularMobius);
        }
        let r = s.sqrt();
        Ok(MobiusMap {
            a: r,
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: r.inv(),
        })
    }

    pub fn compose(&self, o: &MobiusMap) -> Self {
        // self after o
        MobiusMap {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inverse(&self) -> Self {
        MobiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Rotation by `angle` about the axis with the two given fixed points.
    pub fn elliptic(fix1: &ComplexPoint, fix2: &ComplexPoint, angle: f64) -> Result<Self> {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        // t maps fix1 -> 0, fix2 -> infinity
        let t = match (fix1, fix2) {
            (ComplexPoint::Finite(p), ComplexPoint::Finite(q)) => {
                MobiusMap::new(one, -p, one, -q)?
            }
            (ComplexPoint::Finite(p), ComplexPoint::Infinity) => {
                MobiusMap::new(one, -p, zero, one)?
            }
            (ComplexPoint::Infinity, ComplexPoint::Finite(q)) => {
                MobiusMap::new(zero, one, one, -q)?
            }
            (ComplexPoint::Infinity, ComplexPoint::Infinity) => {
                return Err(Error::SingularMobius)
            }
        };
        let rot = Complex64::from_polar(1.0, angle / 2.0);
        let diag = MobiusMap {
            a: rot,
            b: zero,
            c: zero,
            d: rot.conj(),
        };
        Ok(t.inverse().compose(&diag).compose(&t))
    }

    pub fn apply(&self, z: &ComplexPoint) -> ComplexPoint {
        mobius_apply(self, z)
    }
}

pub fn mobius_apply(m: &MobiusMap, z: &ComplexPoint) -> ComplexPoint {
    match z {
        ComplexPoint::Infinity => {
            if m.c.norm() < 1e-14 {
                ComplexPoint::Infinity
            } else {
                ComplexPoint::Finite(m.a / m.c)
            }
        }
        ComplexPoint::Finite(z) => {
            let den = m.c * z + m.d;
            if den.norm() < 1e-14 {
                ComplexPoint::Infinity
            } else {
                ComplexPoint::Finite((m.a * z + m.b) / den)
            }
        }
    }
}

/// 4x4 real matrix preserving the Minkowski form and the future cone.
#[derive(Clone, Debug)]
pub struct LorentzMat(Matrix4<f64>);

impl LorentzMat {
    pub fn identity() -> Self {
        LorentzMat(Matrix4::identity())
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.0
    }

    pub fn compose(&self, o: &LorentzMat) -> Self {
        LorentzMat(self.0 * o.0)
    }

    pub fn apply_vec(&self, v: &MinkVec) -> MinkVec {
        let w = self.0 * nalgebra::Vector4::new(v.t, v.x, v.y, v.z);
        MinkVec::new(w[0], w[1], w[2], w[3])
    }
}

/// Extension of a Mobius map to an isometry of H^3, through the action
/// X -> M X M* on Hermitian matrices X = [[t+z, x+iy],[x-iy, t-z]].
pub fn mobius_to_lorentz(m: &MobiusMap) -> LorentzMat {
    let mm = Matrix2::new(m.a, m.b, m.c, m.d);
    let mstar = Matrix2::new(m.a.conj(), m.c.conj(), m.b.conj(), m.d.conj());
    let herm = |t: f64, x: f64, y: f64, z: f64| {
        Matrix2::new(
            Complex64::new(t + z, 0.0),
            Complex64::new(x, y),
            Complex64::new(x, -y),
            Complex64::new(t - z, 0.0),
        )
    };
    let basis = [
        herm(1.0, 0.0, 0.0, 0.0),
        herm(0.0, 1.0, 0.0, 0.0),
        herm(0.0, 0.0, 1.0, 0.0),
        herm(0.0, 0.0, 0.0, 1.0),
    ];
    let mut out = Matrix4::zeros();
    for (col, x) in basis.iter().enumerate() {
        let xi = mm * x * mstar;
        let t = 0.5 * (xi[(0, 0)].re + xi[(1, 1)].re);
        let z = 0.5 * (xi[(0, 0)].re - xi[(1, 1)].re);
        let x_ = xi[(0, 1)].re;
        let y_ = xi[(0, 1)].im;
        out[(0, col)] = t;
        out[(1, col)] = x_;
        out[(2, col)] = y_;
        out[(3, col)] = z;
    }
    LorentzMat(out)
}

/// Objects that transform under a Lorentz isometry, renormalizing their
/// defining invariant.
pub trait Isom: Sized {
    fn transform(&self, l: &LorentzMat) -> Self;
}

impl Isom for HPoint {
    fn transform(&self, l: &LorentzMat) -> Self {
        HPoint::normalize(l.apply_vec(self.mink())).expect("isometry preserves timelike vectors")
    }
}

impl Isom for IdealPoint {
    fn transform(&self, l: &LorentzMat) -> Self {
        IdealPoint::from_mink(l.apply_vec(self.mink()))
            .expect("isometry preserves future null vectors")
    }
}

impl Isom for HPlane {
    fn transform(&self, l: &LorentzMat) -> Self {
        HPlane::normalize(l.apply_vec(self.mink())).expect("isometry preserves spacelike vectors")
    }
}

impl Isom for GeodesicSegment {
    fn transform(&self, l: &LorentzMat) -> Self {
        let (a, b) = self.ends();
        let tr = |e: &SegEnd| match e {
            SegEnd::Finite(p) => SegEnd::Finite(p.transform(l)),
            SegEnd::Ideal(p) => SegEnd::Ideal(p.transform(l)),
        };
        GeodesicSegment::new(tr(a), tr(b)).expect("isometry preserves independence")
    }
}

pub fn isometry_apply<T: Isom>(l: &LorentzMat, obj: &T) -> T {
    obj.transform(l)
}
