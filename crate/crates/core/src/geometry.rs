//! Exact planar primitives over arbitrary-precision rationals.
//!
//! Nothing in here touches floating point. Points carry `BigRational`
//! coordinates and lines are kept in a canonical homogeneous integer form so
//! that two descriptions of the same geometric line compare equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for an integral rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    /// Both coordinates as machine integers, if they are integral and fit.
    pub fn as_ints(&self) -> Option<(i64, i64)> {
        use num_traits::ToPrimitive;
        if !self.x.is_integer() || !self.y.is_integer() {
            return None;
        }
        Some((self.x.to_integer().to_i64()?, self.y.to_integer().to_i64()?))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the orientation determinant. The derived order is
/// `Clockwise < Collinear < CounterClockwise`, which is also the symbol order
/// used when comparing order-type strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn from_sign(s: i32) -> Self {
        match s.signum() {
            -1 => Orientation::Clockwise,
            0 => Orientation::Collinear,
            _ => Orientation::CounterClockwise,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Orientation::Clockwise => '-',
            Orientation::Collinear => '0',
            Orientation::CounterClockwise => '+',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '-' => Some(Orientation::Clockwise),
            '0' => Some(Orientation::Collinear),
            '+' => Some(Orientation::CounterClockwise),
            _ => None,
        }
    }
}

/// Sign of `det [[1, px, py], [1, qx, qy], [1, rx, ry]]`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    if det.is_zero() {
        Orientation::Collinear
    } else if det.is_positive() {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

/// True iff every triple is collinear. Vacuously true for fewer than three
/// points.
pub fn collinear(points: &[Point]) -> bool {
    // With a base pair of distinct points it suffices to test each point
    // against that pair; repeated points are collinear with anything.
    let Some(p) = points.first() else {
        return true;
    };
    let Some(q) = points.iter().find(|q| *q != p) else {
        return true;
    };
    points
        .iter()
        .all(|r| orientation(p, q, r) == Orientation::Collinear)
}

/// A line `a·x + b·y + c = 0` with integer coefficients in canonical form:
/// `gcd(|a|, |b|, |c|) = 1` and the first nonzero of `(a, b)` is positive.
///
/// The derived `Ord` is the canonical line order used wherever a
/// deterministic scan over lines is needed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    /// Builds the canonical line from rational coefficients. Returns `None`
    /// when `a = b = 0`.
    pub fn from_coefficients(a: &Rational, b: &Rational, c: &Rational) -> Option<Line> {
        if a.is_zero() && b.is_zero() {
            return None;
        }
        let denom = a.denom().lcm(b.denom()).lcm(c.denom());
        let scale = |r: &Rational| r.numer() * (&denom / r.denom());
        let (mut a, mut b, mut c) = (scale(a), scale(b), scale(c));
        let g = a.gcd(&b).gcd(&c);
        a /= &g;
        b /= &g;
        c /= &g;
        let leading_negative = if a.is_zero() {
            b.is_negative()
        } else {
            a.is_negative()
        };
        if leading_negative {
            a = -a;
            b = -b;
            c = -c;
        }
        Some(Line { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Option<Line> {
        Line::from_coefficients(&rat(a), &rat(b), &rat(c))
    }

    /// The line `y = m·x + c`.
    pub fn from_slope_intercept(m: &Rational, c: &Rational) -> Line {
        Line::from_coefficients(m, &-Rational::one(), c).expect("b = -1 is nonzero")
    }

    /// Horizontal line through `p`.
    pub fn horizontal_through(p: &Point) -> Line {
        Line::from_coefficients(&Rational::zero(), &Rational::one(), &-p.y.clone())
            .expect("b = 1 is nonzero")
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    /// `(m, c)` with `y = m·x + c`, or `None` for vertical lines.
    pub fn slope_intercept(&self) -> Option<(Rational, Rational)> {
        if self.is_vertical() {
            return None;
        }
        let b = Rational::from_integer(self.b.clone());
        let m = -Rational::from_integer(self.a.clone()) / &b;
        let c = -Rational::from_integer(self.c.clone()) / &b;
        Some((m, c))
    }

    pub fn is_parallel_to(&self, other: &Line) -> bool {
        &self.a * &other.b == &other.a * &self.b
    }

    pub fn contains(&self, p: &Point) -> bool {
        on_line(p, self)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.a, self.b, self.c)
    }
}

pub fn line_through(p: &Point, q: &Point) -> Result<Line> {
    if p == q {
        return Err(Error::IdenticalPoints(Box::new(p.clone())));
    }
    let a = &q.y - &p.y;
    let b = &p.x - &q.x;
    let c = -(&a * &p.x + &b * &p.y);
    Ok(Line::from_coefficients(&a, &b, &c).expect("distinct points span a line"))
}

pub fn on_line(p: &Point, line: &Line) -> bool {
    let a = Rational::from_integer(line.a.clone());
    let b = Rational::from_integer(line.b.clone());
    let c = Rational::from_integer(line.c.clone());
    (a * &p.x + b * &p.y + c).is_zero()
}

/// The common point of two distinct lines, or `None` when they are parallel.
pub fn intersect(l1: &Line, l2: &Line) -> Result<Option<Point>> {
    if l1 == l2 {
        return Err(Error::IdenticalLines(Box::new(l1.clone())));
    }
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Ok(None);
    }
    let x = &l1.b * &l2.c - &l2.b * &l1.c;
    let y = &l1.c * &l2.a - &l2.c * &l1.a;
    let det = Rational::from_integer(det);
    Ok(Some(Point::new(
        Rational::from_integer(x) / &det,
        Rational::from_integer(y) / det,
    )))
}
