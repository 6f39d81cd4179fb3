//! Jordan curves as closed chains of oriented circular arcs on the unit
//! sphere, plus the constructions and estimators built on them.

pub mod bigon;
pub mod build;
pub mod plane;
pub mod turning;

use nalgebra::Vector3;

use crate::error::{Error, Result};
use crate::hyp::HPlane;
use crate::mobius::LorentzMat;
use crate::TOL_ALG;

/// Circle {x in S^2 : u.x = c} with |u| = 1, |c| < 1.
#[derive(Clone, Copy, Debug)]
pub struct SphereCircle {
    u: Vector3<f64>,
    c: f64,
}

impl SphereCircle {
    pub fn new(u: Vector3<f64>, c: f64) -> Result<Self> {
        let n = u.norm();
        if n < 1e-9 {
            return Err(Error::BadCircle(format!("zero normal (|u| = {n})")));
        }
        if c.abs() >= 1.0 {
            return Err(Error::BadCircle(format!("empty trace (|c| = {})", c.abs())));
        }
        Ok(SphereCircle { u: u / n, c })
    }

    pub fn normal(&self) -> Vector3<f64> {
        self.u
    }

    pub fn offset(&self) -> f64 {
        self.c
    }

    /// Euclidean center and radius of the circle as a curve in R^3.
    pub fn center(&self) -> Vector3<f64> {
        self.u * self.c
    }

    pub fn radius(&self) -> f64 {
        (1.0 - self.c * self.c).sqrt()
    }

    /// Deterministic frame (e1, e2) with e1 x e2 = u; positive angles wind
    /// counterclockwise around u.
    pub fn frame(&self) -> (Vector3<f64>, Vector3<f64>) {
        let ax = self.u.x.abs();
        let ay = self.u.y.abs();
        let az = self.u.z.abs();
        let pick = if ax <= ay && ax <= az {
            Vector3::x()
        } else if ay <= az {
            Vector3::y()
        } else {
            Vector3::z()
        };
        let e1 = (pick - self.u * pick.dot(&self.u)).normalize();
        (e1, self.u.cross(&e1))
    }

    pub fn point_at(&self, phi: f64) -> Vector3<f64> {
        let (e1, e2) = self.frame();
        self.center() + (e1 * phi.cos() + e2 * phi.sin()) * self.radius()
    }

    pub fn angle_of(&self, x: &Vector3<f64>) -> f64 {
        let (e1, e2) = self.frame();
        x.dot(&e2).atan2(x.dot(&e1))
    }

    /// Residual of the two defining equations at x.
    pub fn residual(&self, x: &Vector3<f64>) -> f64 {
        (self.u.dot(x) - self.c).abs().max((x.norm() - 1.0).abs())
    }

    /// The hyperbolic plane whose ideal trace is this circle.
    pub fn to_hplane(&self) -> HPlane {
        HPlane::from_klein(self.u, self.c).expect("|c| < 1 by construction")
    }

    pub fn from_hplane(pl: &HPlane) -> Self {
        let (u, c) = pl.klein_trace();
        SphereCircle { u, c }
    }

    pub fn transform(&self, l: &LorentzMat) -> Self {
        use crate::mobius::Isom;
        Self::from_hplane(&self.to_hplane().transform(l))
    }

    /// Identity as unoriented point sets.
    pub fn same_circle(&self, o: &SphereCircle) -> bool {
        let direct = (self.u - o.u).norm() < 1e-9 && (self.c - o.c).abs() < 1e-9;
        let flipped = (self.u + o.u).norm() < 1e-9 && (self.c + o.c).abs() < 1e-9;
        direct || flipped
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Counterclockwise around the circle normal.
    Pos,
    Neg,
}

/// Oriented arc on a circle. Equal endpoints encode the full circle.
#[derive(Clone, Debug)]
pub struct Arc {
    pub circle: SphereCircle,
    pub start: Vector3<f64>,
    pub end: Vector3<f64>,
    pub orientation: Orientation,
}

const FULL_CIRCLE_EPS: f64 = 1e-9;

impl Arc {
    pub fn new(
        circle: SphereCircle,
        start: Vector3<f64>,
        end: Vector3<f64>,
        orientation: Orientation,
    ) -> Result<Self> {
        let r = circle.residual(&start).max(circle.residual(&end));
        if r > 1e-7 {
            return Err(Error::ArcOffCircle(r));
        }
        Ok(Arc {
            circle,
            start,
            end,
            orientation,
        })
    }

    pub fn is_full_circle(&self) -> bool {
        (self.start - self.end).norm() < FULL_CIRCLE_EPS
    }

    /// Swept angle in (0, 2*pi], measured in the travel direction.
    pub fn sweep(&self) -> f64 {
        if self.is_full_circle() {
            return std::f64::consts::TAU;
        }
        let a = self.circle.angle_of(&self.start);
        let b = self.circle.angle_of(&self.end);
        let d = match self.orientation {
            Orientation::Pos => b - a,
            Orientation::Neg => a - b,
        };
        d.rem_euclid(std::f64::consts::TAU)
    }

    /// Arc length as a space curve (and as a spherical curve).
    pub fn length(&self) -> f64 {
        self.sweep() * self.circle.radius()
    }

    pub fn point_at_frac(&self, t: f64) -> Vector3<f64> {
        let a = self.circle.angle_of(&self.start);
        let step = match self.orientation {
            Orientation::Pos => self.sweep() * t,
            Orientation::Neg => -self.sweep() * t,
        };
        self.circle.point_at(a + step)
    }

    pub fn midpoint(&self) -> Vector3<f64> {
        self.point_at_frac(0.5)
    }

    /// Unit tangent in the travel direction at parameter t.
    pub fn tangent_at_frac(&self, t: f64) -> Vector3<f64> {
        let a = self.circle.angle_of(&self.start);
        let phi = match self.orientation {
            Orientation::Pos => a + self.sweep() * t,
            Orientation::Neg => a - self.sweep() * t,
        };
        let (e1, e2) = self.circle.frame();
        let d = -e1 * phi.sin() + e2 * phi.cos();
        match self.orientation {
            Orientation::Pos => d,
            Orientation::Neg => -d,
        }
    }

    /// Whether x lies on the closed arc, within a chordal tolerance.
    pub fn contains_point(&self, x: &Vector3<f64>, tol: f64) -> bool {
        if self.circle.residual(x) > tol {
            return false;
        }
        if self.is_full_circle() {
            return true;
        }
        let r = self.circle.radius().max(1e-9);
        let tol_ang = tol / r;
        let a = self.circle.angle_of(&self.start);
        let phi = self.circle.angle_of(x);
        let along = match self.orientation {
            Orientation::Pos => (phi - a).rem_euclid(std::f64::consts::TAU),
            Orientation::Neg => (a - phi).rem_euclid(std::f64::consts::TAU),
        };
        along <= self.sweep() + tol_ang || along >= std::f64::consts::TAU - tol_ang
    }

    /// Distance from an endpoint below which a point is not "interior".
    pub fn interior_contains(&self, x: &Vector3<f64>, tol: f64, end_margin: f64) -> bool {
        self.contains_point(x, tol)
            && (x - self.start).norm() > end_margin
            && (x - self.end).norm() > end_margin
    }

    pub fn transform(&self, l: &LorentzMat) -> Result<Self> {
        use crate::hyp::IdealPoint;
        use crate::mobius::Isom;
        let circle = self.circle.transform(l);
        let map = |v: &Vector3<f64>| -> Result<Vector3<f64>> {
            Ok(IdealPoint::from_sphere(*v)?.transform(l).sphere())
        };
        let start = map(&self.start)?;
        let end = map(&self.end)?;
        if self.is_full_circle() {
            return Arc::new(circle, start, end, self.orientation);
        }
        let via = map(&self.midpoint())?;
        arc_through(circle, start, end, &via)
    }
}

/// The arc from start to end passing through the interior witness `via`.
pub fn arc_through(
    circle: SphereCircle,
    start: Vector3<f64>,
    end: Vector3<f64>,
    via: &Vector3<f64>,
) -> Result<Arc> {
    let pos = Arc::new(circle, start, end, Orientation::Pos)?;
    if pos.is_full_circle() {
        return Ok(pos);
    }
    let neg = Arc::new(circle, start, end, Orientation::Neg)?;
    let in_pos = pos.contains_point(via, 1e-6);
    let in_neg = neg.contains_point(via, 1e-6);
    match (in_pos, in_neg) {
        (true, false) => Ok(pos),
        (false, true) => Ok(neg),
        _ => Err(Error::BadCircle(
            "orientation witness does not select an arc side".into(),
        )),
    }
}

/// Intersection of two distinct circles on the sphere.
pub enum CircleMeet {
    Empty,
    Points(Vec<Vector3<f64>>),
}

pub fn circle_intersections(c1: &SphereCircle, c2: &SphereCircle) -> Result<CircleMeet> {
    if c1.same_circle(c2) {
        return Err(Error::IdenticalCircles);
    }
    let d = c1.u.dot(&c2.u);
    let denom = 1.0 - d * d;
    if denom < 1e-14 {
        // parallel planes, distinct circles
        return Ok(CircleMeet::Empty);
    }
    let alpha = (c1.c - d * c2.c) / denom;
    let beta = (c2.c - d * c1.c) / denom;
    let t2 = (1.0 - alpha * alpha - beta * beta - 2.0 * alpha * beta * d) / denom;
    if t2 < -1e-12 {
        return Ok(CircleMeet::Empty);
    }
    let base = c1.u * alpha + c2.u * beta;
    let axis = c1.u.cross(&c2.u);
    if t2 <= 1e-12 {
        return Ok(CircleMeet::Points(vec![base.normalize()]));
    }
    let t = t2.sqrt();
    Ok(CircleMeet::Points(vec![
        (base + axis * t).normalize(),
        (base - axis * t).normalize(),
    ]))
}

/// Relative position of two circles.
pub enum CircleRelation {
    /// Interior intersection angle in [0, pi]; tangency gives 0 (internal)
    /// or pi (external).
    Intersecting { angle: f64 },
    /// No common point; the inversive distance (|i| > 1) records the two
    /// planes' relative position, with sign separating nested from separated.
    Disjoint { inversive: f64 },
}

pub fn angle_between_circles(c1: &SphereCircle, c2: &SphereCircle) -> Result<CircleRelation> {
    if c1.same_circle(c2) {
        return Err(Error::IdenticalCircles);
    }
    let i = (c1.u.dot(&c2.u) - c1.c * c2.c) / (c1.radius() * c2.radius());
    if i.abs() <= 1.0 + 1e-12 {
        Ok(CircleRelation::Intersecting {
            angle: i.clamp(-1.0, 1.0).acos(),
        })
    } else {
        Ok(CircleRelation::Disjoint { inversive: i })
    }
}

/// Closed simple chain of arcs; consecutive arcs share endpoints.
#[derive(Clone, Debug)]
pub struct JordanCurve {
    arcs: Vec<Arc>,
}

impl JordanCurve {
    pub fn new(arcs: Vec<Arc>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::EmptyCurve);
        }
        let n = arcs.len();
        for i in 0..n {
            let gap = (arcs[i].end - arcs[(i + 1) % n].start).norm();
            if gap > TOL_ALG {
                return Err(Error::NotClosed(i, gap));
            }
        }
        let curve = JordanCurve { arcs };
        curve.check_simple()?;
        Ok(curve)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn total_length(&self) -> f64 {
        self.arcs.iter().map(Arc::length).sum()
    }

    fn check_simple(&self) -> Result<()> {
        let n = self.arcs.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                let shared: Option<Vector3<f64>> = if j == i + 1 {
                    Some(self.arcs[j].start)
                } else if i == 0 && j == n - 1 {
                    Some(self.arcs[i].start)
                } else {
                    None
                };
                if self.arcs_cross(i, j, consecutive, shared)? {
                    return Err(Error::NotSimple(i, j));
                }
            }
        }
        Ok(())
    }

    fn arcs_cross(
        &self,
        i: usize,
        j: usize,
        consecutive: bool,
        shared: Option<Vector3<f64>>,
    ) -> Result<bool> {
        const TOUCH: f64 = 1e-7;
        let (a, b) = (&self.arcs[i], &self.arcs[j]);
        if a.circle.same_circle(&b.circle) {
            // same carrier: interiors must not overlap; sample one arc
            // against the other (angular intervals, done chordally)
            for k in 0..64 {
                let t = (k as f64 + 0.5) / 64.0;
                let x = a.point_at_frac(t);
                if b.interior_contains(&x, TOUCH, TOUCH) {
                    return Ok(true);
                }
                let y = b.point_at_frac(t);
                if a.interior_contains(&y, TOUCH, TOUCH) {
                    return Ok(true);
                }
            }
            if !consecutive {
                // even endpoint contact is disallowed between far arcs
                for x in [&a.start, &a.end] {
                    if b.contains_point(x, TOUCH) {
                        return Ok(true);
                    }
                }
            }
            return Ok(false);
        }
        let meet = circle_intersections(&a.circle, &b.circle)?;
        let pts = match meet {
            CircleMeet::Empty => return Ok(false),
            CircleMeet::Points(p) => p,
        };
        for x in pts {
            if a.contains_point(&x, TOUCH) && b.contains_point(&x, TOUCH) {
                let at_shared = shared.map_or(false, |s| (x - s).norm() < 1e-6);
                if !(consecutive && at_shared) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// N points in cyclic order, allocated proportionally to arc length;
    /// every joint is a sample and interior points are evenly spaced.
    pub fn sample(&self, n: usize) -> Result<Vec<Vector3<f64>>> {
        let arcs = self.arcs.len();
        let min = arcs.max(4);
        if n < min {
            return Err(Error::TooFewSamples(n, min));
        }
        let lengths: Vec<f64> = self.arcs.iter().map(Arc::length).collect();
        let total: f64 = lengths.iter().sum();
        let interior = n - arcs;
        // largest-remainder rounding to hit the exact total
        let ideal: Vec<f64> = lengths
            .iter()
            .map(|l| interior as f64 * l / total)
            .collect();
        let mut counts: Vec<usize> = ideal.iter().map(|x| x.floor() as usize).collect();
        let assigned: usize = counts.iter().sum();
        let mut order: Vec<usize> = (0..arcs).collect();
        order.sort_by(|&p, &q| {
            let fp = ideal[p] - ideal[p].floor();
            let fq = ideal[q] - ideal[q].floor();
            fq.partial_cmp(&fp).unwrap().then(p.cmp(&q))
        });
        for &idx in order.iter().take(interior - assigned) {
            counts[idx] += 1;
        }
        let mut out = Vec::with_capacity(n);
        for (arc, &k) in self.arcs.iter().zip(&counts) {
            out.push(arc.start);
            for j in 0..k {
                out.push(arc.point_at_frac((j + 1) as f64 / (k + 1) as f64));
            }
        }
        debug_assert_eq!(out.len(), n);
        Ok(out)
    }

    pub fn transform(&self, l: &LorentzMat) -> Result<Self> {
        let arcs: Result<Vec<Arc>> = self.arcs.iter().map(|a| a.transform(l)).collect();
        JordanCurve::new(arcs?)
    }
}
