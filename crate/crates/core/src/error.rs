use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vector is not a hyperbolic point: <v,v> = {0}, expected -1")]
    NotTimelike(f64),
    #[error("vector is not future-pointing (t = {0})")]
    NotFuture(f64),
    #[error("vector is not null: <v,v> = {0}")]
    NotNull(f64),
    #[error("vector is not a unit spacelike normal: <n,n> = {0}")]
    NotSpacelike(f64),
    #[error("segment endpoints are linearly dependent")]
    DegenerateSegment,
    #[error("Klein coordinates lie outside the open unit ball: |k| = {0}")]
    OutsideBall(f64),
    #[error("vector is not on the unit sphere: |u| = {0}")]
    NotOnSphere(f64),
    #[error("Mobius map has zero determinant")]
    SingularMobius,
    #[error("invalid circle: {0}")]
    BadCircle(String),
    #[error("circles are identical")]
    IdenticalCircles,
    #[error("arc endpoints do not lie on the carrier circle (residual {0})")]
    ArcOffCircle(f64),
    #[error("curve is not closed: arc {0} ends away from the next start (gap {1})")]
    NotClosed(usize, f64),
    #[error("curve is not simple: arcs {0} and {1} cross")]
    NotSimple(usize, usize),
    #[error("curve has no arcs")]
    EmptyCurve,
    #[error("construction certificate failed: {0}")]
    Certificate(String),
    #[error("hull needs at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("hull input is degenerate (collinear points)")]
    CollinearInput,
    #[error("support plane outside the ball: |c| = {0} >= 1")]
    BadSupportPlane(f64),
    #[error("face {0} could not be assigned to a complementary region")]
    FaceClassification(usize),
    #[error("face label class {0} is empty")]
    EmptyLabelClass(&'static str),
    #[error("face label class is not edge-connected ({0} components)")]
    DisconnectedLabel(usize),
    #[error("sample count {0} too small (need >= {1})")]
    TooFewSamples(usize, usize),
    #[error("planar metric undefined: sample {0} is at the north pole")]
    SampleAtInfinity(usize),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
