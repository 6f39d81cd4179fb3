//! Minkowski-model kernel: R^{3,1} vectors, hyperbolic points, planes,
//! geodesic segments and the exact distance formulas between them.
//!
//! Conventions: the form is <u,v> = -u_t v_t + u.v; hyperbolic points satisfy
//! <v,v> = -1 with v_t > 0; planes are unit spacelike normals; ideal points are
//! future null vectors normalized to v_t = 1, so they biject with the unit
//! sphere (the Klein-ball boundary).

use nalgebra::Vector3;

use crate::error::{Error, Result};
use crate::TOL_ALG;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinkVec {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl MinkVec {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        MinkVec { t, x, y, z }
    }

    pub fn from_spatial(t: f64, s: Vector3<f64>) -> Self {
        MinkVec::new(t, s.x, s.y, s.z)
    }

    pub fn spatial(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn scale(&self, s: f64) -> Self {
        MinkVec::new(self.t * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn add(&self, o: &MinkVec) -> Self {
        MinkVec::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }

    pub fn sub(&self, o: &MinkVec) -> Self {
        MinkVec::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

pub fn mink_inner(u: &MinkVec, v: &MinkVec) -> f64 {
    -u.t * v.t + u.x * v.x + u.y * v.y + u.z * v.z
}

/// A point of H^3 on the future hyperboloid.
#[derive(Clone, Copy, Debug)]
pub struct HPoint(MinkVec);

impl HPoint {
    pub fn from_mink(v: MinkVec) -> Result<Self> {
        let q = mink_inner(&v, &v);
        if (q + 1.0).abs() > TOL_ALG {
            return Err(Error::NotTimelike(q));
        }
        if v.t <= 0.0 {
            return Err(Error::NotFuture(v.t));
        }
        Ok(HPoint(v))
    }

    /// Rescales a timelike vector onto the hyperboloid.
    pub fn normalize(v: MinkVec) -> Result<Self> {
        let q = mink_inner(&v, &v);
        if q >= 0.0 {
            return Err(Error::NotTimelike(q));
        }
        let w = v.scale(1.0 / (-q).sqrt());
        if w.t <= 0.0 {
            return Err(Error::NotFuture(w.t));
        }
        Ok(HPoint(w))
    }

    pub fn mink(&self) -> &MinkVec {
        &self.0
    }

    pub fn origin() -> Self {
        HPoint(MinkVec::new(1.0, 0.0, 0.0, 0.0))
    }
}

/// A point of the ideal boundary, stored with t = 1; the spatial part is a
/// unit sphere vector.
#[derive(Clone, Copy, Debug)]
pub struct IdealPoint(MinkVec);

impl IdealPoint {
    pub fn from_sphere(u: Vector3<f64>) -> Result<Self> {
        let n = u.norm();
        if n < TOL_ALG {
            return Err(Error::NotOnSphere(n));
        }
        let s = u / n;
        Ok(IdealPoint(MinkVec::from_spatial(1.0, s)))
    }

    pub fn from_mink(v: MinkVec) -> Result<Self> {
        if v.t <= 0.0 {
            return Err(Error::NotFuture(v.t));
        }
        let q = mink_inner(&v, &v);
        // null up to roundoff relative to the vector's size
        if q.abs() > TOL_ALG * (v.t * v.t).max(1.0) {
            return Err(Error::NotNull(q));
        }
        let s = v.spatial() / v.t;
        Self::from_sphere(s)
    }

    pub fn mink(&self) -> &MinkVec {
        &self.0
    }

    pub fn sphere(&self) -> Vector3<f64> {
        self.0.spatial()
    }
}

/// Totally geodesic plane {p : <p,n> = 0} with unit spacelike normal; the
/// preferred half-space is where <.,n> <= 0.
#[derive(Clone, Copy, Debug)]
pub struct HPlane(MinkVec);

impl HPlane {
    pub fn from_mink(n: MinkVec) -> Result<Self> {
        let q = mink_inner(&n, &n);
        if (q - 1.0).abs() > TOL_ALG {
            return Err(Error::NotSpacelike(q));
        }
        Ok(HPlane(n))
    }

    pub fn normalize(n: MinkVec) -> Result<Self> {
        let q = mink_inner(&n, &n);
        if q <= 0.0 {
            return Err(Error::NotSpacelike(q));
        }
        Ok(HPlane(n.scale(1.0 / q.sqrt())))
    }

    /// Plane cutting the Klein ball along {k : u.k = c}, |u| = 1, |c| < 1.
    pub fn from_klein(u: Vector3<f64>, c: f64) -> Result<Self> {
        if c.abs() >= 1.0 {
            return Err(Error::BadSupportPlane(c.abs()));
        }
        let s = (1.0 - c * c).sqrt();
        Ok(HPlane(MinkVec::from_spatial(c / s, u / s)))
    }

    pub fn mink(&self) -> &MinkVec {
        &self.0
    }

    /// Inverse of `from_klein`: (u, c) with the ball trace {u.k = c}.
    pub fn klein_trace(&self) -> (Vector3<f64>, f64) {
        let s = self.0.spatial();
        let ns = s.norm(); // ns = sqrt(1 + t^2) > |t|, always valid
        (s / ns, self.0.t / ns)
    }
}

#[derive(Clone, Copy, Debug)]
pub enum SegEnd {
    Finite(HPoint),
    Ideal(IdealPoint),
}

impl SegEnd {
    pub fn mink(&self) -> &MinkVec {
        match self {
            SegEnd::Finite(p) => p.mink(),
            SegEnd::Ideal(p) => p.mink(),
        }
    }

    fn gram_self(&self) -> f64 {
        match self {
            SegEnd::Finite(_) => -1.0,
            SegEnd::Ideal(_) => 0.0,
        }
    }
}

/// Geodesic segment spanned by two endpoints, each finite or ideal.
#[derive(Clone, Copy, Debug)]
pub struct GeodesicSegment {
    a: SegEnd,
    b: SegEnd,
}

impl GeodesicSegment {
    pub fn new(a: SegEnd, b: SegEnd) -> Result<Self> {
        let ga = a.gram_self();
        let gb = b.gram_self();
        let gab = mink_inner(a.mink(), b.mink());
        // Gram determinant vanishes iff the span is degenerate.
        if (ga * gb - gab * gab).abs() < 1e-12 {
            return Err(Error::DegenerateSegment);
        }
        Ok(GeodesicSegment { a, b })
    }

    pub fn ends(&self) -> (&SegEnd, &SegEnd) {
        (&self.a, &self.b)
    }

    pub fn ideal(a: Vector3<f64>, b: Vector3<f64>) -> Result<Self> {
        Self::new(
            SegEnd::Ideal(IdealPoint::from_sphere(a)?),
            SegEnd::Ideal(IdealPoint::from_sphere(b)?),
        )
    }
}

/// cosh d = -<p,q>. Evaluated as 2 asinh(|p-q|_M / 2), the half-angle form of
/// the same identity, which keeps full precision near coincident points where
/// arccosh(-<p,q>) would lose half the mantissa; the clamp absorbs roundoff
/// that would push the squared interval norm negative.
pub fn dist_point_point(p: &HPoint, q: &HPoint) -> f64 {
    let d = p.mink().sub(q.mink());
    let s2 = mink_inner(&d, &d).max(0.0);
    2.0 * (0.5 * s2.sqrt()).asinh()
}

/// sinh d = |<p,n>|; the foot is the Minkowski-orthogonal projection
/// renormalized to the hyperboloid.
pub fn dist_point_plane(p: &HPoint, plane: &HPlane) -> (f64, HPoint) {
    let s = mink_inner(p.mink(), plane.mink());
    let foot = p.mink().sub(&plane.mink().scale(s)).scale(1.0 / (1.0 + s * s).sqrt());
    (s.abs().asinh(), HPoint(foot))
}

/// Distance to a segment: project onto span(a,b); a foot beyond a finite
/// endpoint clamps to that endpoint, while ideal endpoints force the foot
/// branch (the projection coefficient toward an ideal endpoint is always
/// positive).
pub fn dist_point_segment(p: &HPoint, seg: &GeodesicSegment) -> (f64, HPoint) {
    let (a, b) = (&seg.a, &seg.b);
    let ga = a.gram_self();
    let gb = b.gram_self();
    let gab = mink_inner(a.mink(), b.mink());
    let pa = mink_inner(p.mink(), a.mink());
    let pb = mink_inner(p.mink(), b.mink());
    let det = ga * gb - gab * gab;
    // q = alpha a + beta b with <q,a> = <p,a>, <q,b> = <p,b>
    let alpha = (pa * gb - pb * gab) / det;
    let beta = (ga * pb - gab * pa) / det;

    if beta < 0.0 {
        if let SegEnd::Finite(fa) = a {
            return (dist_point_point(p, fa), *fa);
        }
    }
    if alpha < 0.0 {
        if let SegEnd::Finite(fb) = b {
            return (dist_point_point(p, fb), *fb);
        }
    }

    let q = a.mink().scale(alpha).add(&b.mink().scale(beta));
    let qq = mink_inner(&q, &q);
    if qq >= 0.0 {
        // roundoff collapse: p essentially on the ideal line at infinity
        return (0.0, *p);
    }
    // <p,q> = <q,q>, so cosh d = sqrt(-<q,q>); going through the foot keeps
    // precision when p lies on the segment
    let foot = HPoint(q.scale(1.0 / (-qq).sqrt()));
    (dist_point_point(p, &foot), foot)
}

pub fn klein_embed(k: Vector3<f64>) -> Result<HPoint> {
    let r2 = k.norm_squared();
    if r2 >= 1.0 {
        return Err(Error::OutsideBall(r2.sqrt()));
    }
    let s = 1.0 / (1.0 - r2).sqrt();
    Ok(HPoint(MinkVec::from_spatial(s, k * s)))
}

pub fn klein_extract(p: &HPoint) -> Vector3<f64> {
    p.mink().spatial() / p.mink().t
}
