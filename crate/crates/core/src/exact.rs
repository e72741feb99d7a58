//! Exact rational kernel for straight-line work, plus the tolerance-based
//! float regime used for unit-circle constructions.
//!
//! Public values are expressed with [`Rat`], [`ExactPoint`] and [`ExactLine`].
//! Hot loops (arrangement construction, line walks, zones) run on the
//! homogeneous integer forms [`HomPoint`] and [`IntLine`], which avoid gcd
//! normalisation on every operation while staying exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Absolute tolerance for the float (circle) regime. Inputs are expected to be
/// pre-scaled so that every coordinate satisfies `|c| <= COORD_LIMIT`.
pub const TAU: f64 = 1e-9;
pub const COORD_LIMIT: f64 = 1e3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("cannot parse `{0}` as a rational number")]
    BadNumber(String),
    #[error("degenerate line: a and b are both zero")]
    DegenerateLine,
    #[error("vertical line has no vertical distance")]
    VerticalLine,
    #[error("coordinate {0} is outside the supported range |c| <= 1e3 or not finite")]
    OutOfRange(f64),
}

/// Arbitrary-precision rational, always normalised (denominator > 0, reduced).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn from_int(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Rat(BigRational::from_integer(v))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact conversion of a finite binary64 value.
    pub fn from_f64(v: f64) -> Option<Rat> {
        BigRational::from_float(v).map(Rat)
    }

    pub fn min(self, other: Rat) -> Rat {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Rat) -> Rat {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_int(v)
    }
}

impl FromStr for Rat {
    type Err = GeomError;

    /// Accepts integers, decimals (`-1.25`), fractions (`3/7`) and decimal
    /// exponents (`2.5e-3`). The value is parsed exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GeomError::BadNumber(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Rat::new(n, d));
        }
        let (mantissa, exp) = match t.find(['e', 'E']) {
            Some(i) => {
                let e: i32 = t[i + 1..].parse().map_err(|_| bad())?;
                (&t[..i], e)
            }
            None => (t, 0),
        };
        let (neg, digits) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let all = format!("{int_part}{frac_part}");
        let mut num: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().map_err(|_| bad())? };
        if neg {
            num = -num;
        }
        let scale = exp - frac_part.len() as i32;
        let ten = BigInt::from(10);
        let r = if scale >= 0 {
            Rat::from_bigint(num * num_traits::pow(ten, scale as usize))
        } else {
            Rat::new(num, num_traits::pow(ten, (-scale) as usize))
        };
        Ok(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let text = match v {
            serde_json::Value::String(s) => s,
            serde_json::Value::Number(n) => n.to_string(),
            other => return Err(serde::de::Error::custom(format!("expected number string, got {other}"))),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rat_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $f(self, rhs: Rat) -> Rat {
                Rat(self.0.$f(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $f(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$f(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $f(self, rhs: &'a Rat) -> Rat {
                Rat(self.0.$f(&rhs.0))
            }
        }
    };
}
rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExactPoint {
    pub x: Rat,
    pub y: Rat,
}

impl ExactPoint {
    pub fn new(x: Rat, y: Rat) -> Self {
        ExactPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        ExactPoint::new(Rat::from_int(x), Rat::from_int(y))
    }

    pub fn to_approx(&self) -> ApproxPoint {
        ApproxPoint { x: self.x.to_f64(), y: self.y.to_f64() }
    }
}

impl fmt::Debug for ExactPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The line `a·x + b·y = c`, normalised so the first nonzero of `(a, b)` is 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactLine {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl ExactLine {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self, GeomError> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(GeomError::DegenerateLine);
        };
        Ok(ExactLine { a: &a / &lead, b: &b / &lead, c: &c / &lead })
    }

    /// `y = slope·x + intercept`.
    pub fn from_slope_intercept(slope: Rat, intercept: Rat) -> Self {
        ExactLine::new(-slope, Rat::one(), intercept).expect("b = 1 is never degenerate")
    }

    /// Line through two distinct points.
    pub fn through(p: &ExactPoint, q: &ExactPoint) -> Result<Self, GeomError> {
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &(&a * &p.x) + &(&b * &p.y);
        ExactLine::new(a, b, c)
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    /// Signed value `a·x + b·y − c`.
    pub fn eval(&self, p: &ExactPoint) -> Rat {
        &(&(&self.a * &p.x) + &(&self.b * &p.y)) - &self.c
    }

    pub fn contains(&self, p: &ExactPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// `y` on the line at abscissa `x`; `None` for vertical lines.
    pub fn y_at(&self, x: &Rat) -> Option<Rat> {
        if self.b.is_zero() {
            return None;
        }
        Some(&(&self.c - &(&self.a * x)) / &self.b)
    }

    pub fn is_parallel(&self, other: &ExactLine) -> bool {
        (&(&self.a * &other.b) - &(&other.a * &self.b)).is_zero()
    }

    pub(crate) fn to_int(&self) -> IntLine {
        IntLine::from_exact(self)
    }
}

impl fmt::Debug for ExactLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x + {}y = {}]", self.a, self.b, self.c)
    }
}

/// Float point for the circle regime.
#[derive(Clone, Copy, PartialEq, Debug, Serialize, Deserialize)]
pub struct ApproxPoint {
    pub x: f64,
    pub y: f64,
}

impl ApproxPoint {
    pub fn new(x: f64, y: f64) -> Self {
        ApproxPoint { x, y }
    }

    /// Validating constructor: finite and within the pre-scaled coordinate box.
    pub fn checked(x: f64, y: f64) -> Result<Self, GeomError> {
        for v in [x, y] {
            if !v.is_finite() || v.abs() > COORD_LIMIT {
                return Err(GeomError::OutOfRange(v));
            }
        }
        Ok(ApproxPoint { x, y })
    }

    pub fn dist(&self, o: &ApproxPoint) -> f64 {
        (self.x - o.x).hypot(self.y - o.y)
    }
}

/// Result of intersecting two lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Intersection {
    Point(ExactPoint),
    /// Determinant zero: parallel or identical lines.
    Parallel,
}

/// Orientation of `r` relative to the directed line `p → q`.
pub fn orient(p: &ExactPoint, q: &ExactPoint, r: &ExactPoint) -> i32 {
    cross(p, q, r).signum()
}

fn cross(p: &ExactPoint, q: &ExactPoint, r: &ExactPoint) -> Rat {
    let ux = &q.x - &p.x;
    let uy = &q.y - &p.y;
    let vx = &r.x - &p.x;
    let vy = &r.y - &p.y;
    &(&ux * &vy) - &(&uy * &vx)
}

/// Point-line duality: `(px, py) ↦ y = px·x − py`.
pub fn dual_of_point(p: &ExactPoint) -> ExactLine {
    ExactLine::from_slope_intercept(p.x.clone(), -&p.y)
}

pub fn line_intersection(l1: &ExactLine, l2: &ExactLine) -> Intersection {
    let det = &(&l1.a * &l2.b) - &(&l2.a * &l1.b);
    if det.is_zero() {
        return Intersection::Parallel;
    }
    let x = &(&(&l1.c * &l2.b) - &(&l2.c * &l1.b)) / &det;
    let y = &(&(&l1.a * &l2.c) - &(&l2.a * &l1.c)) / &det;
    Intersection::Point(ExactPoint::new(x, y))
}

pub fn vertical_distance(q: &ExactPoint, l: &ExactLine) -> Result<Rat, GeomError> {
    let y = l.y_at(&q.x).ok_or(GeomError::VerticalLine)?;
    Ok((&y - &q.y).abs())
}

/// Twice the triangle area; zero iff the points are collinear.
pub fn triangle_area2(a: &ExactPoint, b: &ExactPoint, c: &ExactPoint) -> Rat {
    cross(a, b, c).abs()
}

/// Intersections of two circles of equal radius `r`. Tangency (within
/// [`TAU`]) yields the single touching point; coincident centres yield none.
pub fn circle_circle_intersections(c1: ApproxPoint, c2: ApproxPoint, r: f64) -> Vec<ApproxPoint> {
    assert!(r > 0.0, "radius must be positive");
    let dx = c2.x - c1.x;
    let dy = c2.y - c1.y;
    let d = dx.hypot(dy);
    if d < TAU || d > 2.0 * r + TAU {
        return Vec::new();
    }
    let mx = c1.x + dx / 2.0;
    let my = c1.y + dy / 2.0;
    let h2 = r * r - d * d / 4.0;
    if (2.0 * r - d).abs() <= TAU || h2 <= 0.0 {
        return vec![ApproxPoint::new(mx, my)];
    }
    let h = h2.sqrt();
    let ox = -dy / d * h;
    let oy = dx / d * h;
    vec![ApproxPoint::new(mx + ox, my + oy), ApproxPoint::new(mx - ox, my - oy)]
}

// ---------------------------------------------------------------------------
// Homogeneous integer kernel
// ---------------------------------------------------------------------------

/// Point `(x/w, y/w)` with `w > 0` and `gcd(x, y, w) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomPoint {
    pub x: BigInt,
    pub y: BigInt,
    pub w: BigInt,
}

impl HomPoint {
    pub fn new(mut x: BigInt, mut y: BigInt, mut w: BigInt) -> Self {
        assert!(!w.is_zero(), "homogeneous point at infinity");
        if w.is_negative() {
            x = -x;
            y = -y;
            w = -w;
        }
        let g = x.gcd(&y).gcd(&w);
        if !g.is_one() && !g.is_zero() {
            x /= &g;
            y /= &g;
            w /= &g;
        }
        HomPoint { x, y, w }
    }

    pub fn from_exact(p: &ExactPoint) -> Self {
        let w = p.x.denom().lcm(p.y.denom());
        let x = p.x.numer() * (&w / p.x.denom());
        let y = p.y.numer() * (&w / p.y.denom());
        HomPoint::new(x, y, w)
    }

    pub fn to_exact(&self) -> ExactPoint {
        ExactPoint::new(Rat::new(self.x.clone(), self.w.clone()), Rat::new(self.y.clone(), self.w.clone()))
    }

    pub fn to_approx(&self) -> ApproxPoint {
        self.to_exact().to_approx()
    }

    /// Lexicographic `(x, y)` comparison.
    pub fn cmp_xy(&self, o: &HomPoint) -> Ordering {
        let lx = &self.x * &o.w;
        let rx = &o.x * &self.w;
        lx.cmp(&rx).then_with(|| (&self.y * &o.w).cmp(&(&o.y * &self.w)))
    }

    pub fn cmp_x(&self, o: &HomPoint) -> Ordering {
        (&self.x * &o.w).cmp(&(&o.x * &self.w))
    }

    pub fn cmp_y(&self, o: &HomPoint) -> Ordering {
        (&self.y * &o.w).cmp(&(&o.y * &self.w))
    }
}

/// Line `a·x + b·y = c` with integer, primitive coefficients. Scaling from an
/// [`ExactLine`] is by a positive factor so orientation is preserved.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntLine {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl IntLine {
    pub fn from_exact(l: &ExactLine) -> Self {
        let m = l.a.denom().lcm(l.b.denom()).lcm(l.c.denom());
        let a = l.a.numer() * (&m / l.a.denom());
        let b = l.b.numer() * (&m / l.b.denom());
        let c = l.c.numer() * (&m / l.c.denom());
        IntLine::primitive(a, b, c)
    }

    pub fn primitive(mut a: BigInt, mut b: BigInt, mut c: BigInt) -> Self {
        let g = a.gcd(&b).gcd(&c);
        if !g.is_zero() && !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        IntLine { a, b, c }
    }

    /// Line through two distinct homogeneous points (orientation arbitrary).
    pub fn through(p: &HomPoint, q: &HomPoint) -> Self {
        // Cross product of (x, y, w) vectors gives (L1, L2, L3) with
        // L1·x + L2·y + L3·w = 0.
        let l1 = &p.y * &q.w - &p.w * &q.y;
        let l2 = &p.w * &q.x - &p.x * &q.w;
        let l3 = &p.x * &q.y - &p.y * &q.x;
        IntLine::primitive(l1, l2, -l3)
    }

    pub fn to_exact(&self) -> ExactLine {
        ExactLine::new(Rat::from_bigint(self.a.clone()), Rat::from_bigint(self.b.clone()), Rat::from_bigint(self.c.clone()))
            .expect("integer line is never degenerate")
    }

    /// Sign of `a·x + b·y − c` at `p`.
    pub fn side(&self, p: &HomPoint) -> i32 {
        let v = &self.a * &p.x + &self.b * &p.y - &self.c * &p.w;
        sign(&v)
    }

    pub fn meet(&self, o: &IntLine) -> Option<HomPoint> {
        let det = &self.a * &o.b - &o.a * &self.b;
        if det.is_zero() {
            return None;
        }
        let x = &self.c * &o.b - &o.c * &self.b;
        let y = &self.a * &o.c - &o.a * &self.c;
        Some(HomPoint::new(x, y, det))
    }

    pub fn is_parallel(&self, o: &IntLine) -> bool {
        (&self.a * &o.b - &o.a * &self.b).is_zero()
    }

    /// Direction vector `(b, −a)`.
    pub fn direction(&self) -> (BigInt, BigInt) {
        (self.b.clone(), -self.a.clone())
    }

    /// Same point set (coefficients proportional).
    pub fn coincides(&self, o: &IntLine) -> bool {
        self.is_parallel(o)
            && (&self.a * &o.c - &o.a * &self.c).is_zero()
            && (&self.b * &o.c - &o.b * &self.c).is_zero()
    }

    /// Position of `p` along this line, `(b·x − a·y)/w`, as a comparable pair.
    pub fn param(&self, p: &HomPoint) -> Rat {
        Rat::new(&self.b * &p.x - &self.a * &p.y, p.w.clone())
    }
}

pub(crate) fn sign(v: &BigInt) -> i32 {
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Half-plane index of a direction for angular sorting: 0 for angles in
/// `[0, π)`, 1 for `[π, 2π)`.
fn half(d: &(BigInt, BigInt)) -> u8 {
    if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
        0
    } else {
        1
    }
}

/// Counter-clockwise angular order of nonzero direction vectors starting at
/// the positive x-axis.
pub fn cmp_angle(u: &(BigInt, BigInt), v: &(BigInt, BigInt)) -> Ordering {
    let hu = half(u);
    let hv = half(v);
    if hu != hv {
        return hu.cmp(&hv);
    }
    let c = &u.0 * &v.1 - &u.1 * &v.0;
    match sign(&c) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &str, y: &str) -> ExactPoint {
        ExactPoint::new(x.parse().unwrap(), y.parse().unwrap())
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p("0", "0"), &p("1", "0"), &p("2", "0")), 0);
        assert_eq!(orient(&p("0", "0"), &p("1", "0"), &p("0", "1")), 1);
        assert_eq!(orient(&p("0", "0"), &p("1/3", "1/7"), &p("2/3", "2/7")), 0);
    }

    #[test]
    fn dual_examples() {
        let l = dual_of_point(&p("2", "3"));
        assert_eq!(l, ExactLine::from_slope_intercept(Rat::from_int(2), Rat::from_int(-3)));
        assert!(l.contains(&p("0", "-3")) && l.contains(&p("1", "-1")));
        let l0 = dual_of_point(&p("0", "0"));
        assert_eq!(l0, ExactLine::new(Rat::zero(), Rat::one(), Rat::zero()).unwrap());
        let l2 = dual_of_point(&p("-1", "1/2"));
        assert_eq!(l2.y_at(&Rat::zero()), Some("-1/2".parse().unwrap()));
        assert_eq!(l2.y_at(&Rat::one()), Some("-3/2".parse().unwrap()));
    }

    #[test]
    fn intersection_examples() {
        let one = Rat::one();
        let yx = ExactLine::from_slope_intercept(one.clone(), Rat::zero());
        let ynx = ExactLine::from_slope_intercept(-one.clone(), Rat::zero());
        assert_eq!(line_intersection(&yx, &ynx), Intersection::Point(p("0", "0")));
        let a = ExactLine::from_slope_intercept(Rat::from_int(2), Rat::from_int(-3));
        let b = ExactLine::from_slope_intercept(Rat::from_int(2), Rat::from_int(1));
        assert_eq!(line_intersection(&a, &b), Intersection::Parallel);
        // Elimination by hand: 2x − 3 = x − 1 → x = 2, y = 1.
        let c = ExactLine::from_slope_intercept(one.clone(), -one);
        assert_eq!(line_intersection(&a, &c), Intersection::Point(p("2", "1")));
    }

    #[test]
    fn vertical_distance_examples() {
        let y1 = ExactLine::from_slope_intercept(Rat::zero(), Rat::one());
        assert_eq!(vertical_distance(&p("0", "0"), &y1).unwrap(), Rat::one());
        let y2x = ExactLine::from_slope_intercept(Rat::from_int(2), Rat::zero());
        assert_eq!(vertical_distance(&p("1", "2"), &y2x).unwrap(), Rat::zero());
        // 3·1 − 1 = 2, minus 0.
        let l = ExactLine::from_slope_intercept(Rat::from_int(3), Rat::from_int(-1));
        assert_eq!(vertical_distance(&p("1", "0"), &l).unwrap(), Rat::from_int(2));
        let vert = ExactLine::new(Rat::one(), Rat::zero(), Rat::zero()).unwrap();
        assert_eq!(vertical_distance(&p("1", "0"), &vert), Err(GeomError::VerticalLine));
    }

    #[test]
    fn area_examples() {
        assert_eq!(triangle_area2(&p("0", "0"), &p("1", "0"), &p("0", "1")), Rat::one());
        assert_eq!(triangle_area2(&p("0", "0"), &p("2", "0"), &p("4", "0")), Rat::zero());
        // |3·4 − 1·1| = 11
        assert_eq!(triangle_area2(&p("0", "0"), &p("3", "1"), &p("1", "4")), Rat::from_int(11));
    }

    #[test]
    fn circle_examples() {
        let o = ApproxPoint::new(0.0, 0.0);
        let t = circle_circle_intersections(o, ApproxPoint::new(2.0, 0.0), 1.0);
        assert_eq!(t.len(), 1);
        assert!((t[0].x - 1.0).abs() < TAU && t[0].y.abs() < TAU);
        assert!(circle_circle_intersections(o, o, 1.0).is_empty());
        let two = circle_circle_intersections(o, ApproxPoint::new(1.0, 0.0), 1.0);
        assert_eq!(two.len(), 2);
        let h = 3f64.sqrt() / 2.0;
        let mut ys: Vec<f64> = two.iter().map(|q| q.y).collect();
        ys.sort_by(f64::total_cmp);
        assert!((ys[0] + h).abs() < TAU && (ys[1] - h).abs() < TAU);
        assert!(two.iter().all(|q| (q.x - 0.5).abs() < TAU));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("1.25".parse::<Rat>().unwrap(), Rat::new(5, 4));
        assert_eq!("-3".parse::<Rat>().unwrap(), Rat::from_int(-3));
        assert_eq!("2/6".parse::<Rat>().unwrap(), Rat::new(1, 3));
        assert_eq!("2.5e-3".parse::<Rat>().unwrap(), Rat::new(1, 400));
        assert_eq!("-.5".parse::<Rat>().unwrap(), Rat::new(-1, 2));
        assert!("abc".parse::<Rat>().is_err());
        assert!("1/0".parse::<Rat>().is_err());
    }

    #[test]
    fn homogeneous_kernel_matches_rationals() {
        let l1 = ExactLine::from_slope_intercept(Rat::new(2, 3), Rat::new(-1, 5));
        let l2 = ExactLine::from_slope_intercept(Rat::new(-7, 2), Rat::new(4, 1));
        let Intersection::Point(pt) = line_intersection(&l1, &l2) else { panic!() };
        let h = l1.to_int().meet(&l2.to_int()).unwrap();
        assert_eq!(h.to_exact(), pt);
        assert_eq!(HomPoint::from_exact(&pt), h);
        let q = p("3", "1/2");
        let through = IntLine::through(&h, &HomPoint::from_exact(&q));
        assert_eq!(through.side(&h), 0);
        assert_eq!(through.side(&HomPoint::from_exact(&q)), 0);
    }
}
