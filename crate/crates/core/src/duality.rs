//! Point–line duality between Line Point Cover and Point Line Cover.
//!
//! A point `(a, b)` lies on `y = m·x + c` iff `(m, -c)` lies on
//! `y = a·x - b`; both say `b = m·a + c`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{intersect, Line, Point, Rational};
use crate::plc::PlcInstance;

/// A non-vertical line `y = m·x + c`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlopeIntercept {
    pub m: Rational,
    pub c: Rational,
}

impl SlopeIntercept {
    pub fn new(m: Rational, c: Rational) -> Self {
        SlopeIntercept { m, c }
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.y == &self.m * &p.x + &self.c
    }

    pub fn to_line(&self) -> Line {
        Line::from_slope_intercept(&self.m, &self.c)
    }
}

impl fmt::Display for SlopeIntercept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.m, self.c)
    }
}

/// Cover `lines` with at most `k` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpcInstance {
    lines: Vec<SlopeIntercept>,
    pub k: usize,
}

impl LpcInstance {
    pub fn new(lines: Vec<SlopeIntercept>, k: usize) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for l in &lines {
            if !seen.insert(l) {
                return Err(Error::DuplicateLine {
                    m: l.m.to_string(),
                    c: l.c.to_string(),
                });
            }
        }
        Ok(LpcInstance { lines, k })
    }

    pub fn lines(&self) -> &[SlopeIntercept] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

/// `y = m·x + c` becomes the point `(m, -c)`.
pub fn dualize_line(line: &SlopeIntercept) -> Point {
    Point::new(line.m.clone(), -line.c.clone())
}

/// `(a, b)` becomes the line `y = a·x - b`.
pub fn dualize_point(p: &Point) -> SlopeIntercept {
    SlopeIntercept::new(p.x.clone(), -p.y.clone())
}

/// Replaces each line by its dual point, keeping `k`.
///
/// Incidences are preserved exactly. The answer is preserved when no two
/// lines are parallel: equal slopes dualize to points on one vertical line,
/// which a single cover line can take although no point lies on both
/// original lines.
pub fn dualize_lpc(inst: &LpcInstance) -> Result<PlcInstance> {
    // LpcInstance already guarantees distinct lines, so the dual points are
    // distinct as well.
    PlcInstance::new(inst.lines.iter().map(dualize_line).collect(), inst.k)
}

/// The change of coordinates `(x, y) ↦ (x + t·y, y)`.
pub fn shear_point(p: &Point, t: i64) -> Point {
    Point::new(&p.x + Rational::from_integer(t.into()) * &p.y, p.y.clone())
}

/// Image of `a·x + b·y + c = 0` under [`shear_point`]: `a·x + (b - a·t)·y + c = 0`.
pub fn shear_line(line: &Line, t: i64) -> Line {
    let a = Rational::from_integer(line.a().clone());
    let b = Rational::from_integer(line.b().clone());
    let c = Rational::from_integer(line.c().clone());
    let t = Rational::from_integer(t.into());
    let b2 = &b - &a * t;
    Line::from_coefficients(&a, &b2, &c).expect("a shear is invertible")
}

/// Finds the smallest `t ≥ 0` for which no sheared line is vertical and
/// returns it with the sheared lines in slope-intercept form.
///
/// Line `a·x + b·y + c = 0` turns vertical exactly when `b = a·t`, so each
/// line forbids at most one `t` and some `t ≤ lines.len()` is free.
pub fn shear_to_slope_intercept(lines: &[Line]) -> (i64, Vec<SlopeIntercept>) {
    let forbidden: BTreeSet<Rational> = lines
        .iter()
        .filter(|l| !l.a().is_zero())
        .map(|l| Rational::new(l.b().clone(), l.a().clone()))
        .collect();
    let t = (0i64..)
        .find(|&t| !forbidden.contains(&Rational::from_integer(t.into())))
        .expect("finitely many forbidden values");
    let out = lines
        .iter()
        .map(|l| {
            let (m, c) = shear_line(l, t)
                .slope_intercept()
                .expect("t avoids every vertical image");
            SlopeIntercept::new(m, c)
        })
        .collect();
    (t, out)
}

/// Cap on line count for [`lpc_min_cover`].
pub const LPC_BRUTE_FORCE_CAP: usize = 16;

/// Minimum number of points hitting every line, by exhaustive search.
///
/// Candidates are all pairwise intersections plus one point on each line. A
/// cover point on a single line can slide along it to that line's fallback
/// point, so this candidate set loses nothing.
pub fn lpc_min_cover(lines: &[SlopeIntercept]) -> Result<usize> {
    let m = lines.len();
    if m > LPC_BRUTE_FORCE_CAP {
        return Err(Error::cap("line-cover line count", LPC_BRUTE_FORCE_CAP, m));
    }
    let as_lines: Vec<Line> = lines.iter().map(SlopeIntercept::to_line).collect();
    let mut candidates: BTreeSet<Point> = BTreeSet::new();
    for i in 0..m {
        for j in i + 1..m {
            if let Ok(Some(p)) = intersect(&as_lines[i], &as_lines[j]) {
                candidates.insert(p);
            }
        }
        // (0, c) is on y = m·x + c
        candidates.insert(Point::new(Rational::zero(), lines[i].c.clone()));
    }
    let hits: Vec<u32> = candidates
        .iter()
        .map(|p| {
            lines
                .iter()
                .enumerate()
                .filter(|(_, l)| l.contains(p))
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();

    // Breadth-first over covered-line masks, one cover point per layer.
    let full: u32 = (1u32 << m) - 1;
    let mut frontier: BTreeSet<u32> = BTreeSet::from([0]);
    let mut used = 0usize;
    while !frontier.contains(&full) {
        frontier = frontier
            .iter()
            .flat_map(|&mask| hits.iter().map(move |&h| mask | h))
            .collect();
        used += 1;
    }
    Ok(used)
}

pub fn lpc_brute_force(inst: &LpcInstance) -> Result<bool> {
    Ok(lpc_min_cover(&inst.lines)? <= inst.k)
}

/// Incidence matrix `[i][j] = points[j] lies on lines[i]`.
pub fn incidence_matrix(lines: &[SlopeIntercept], points: &[Point]) -> Vec<Vec<bool>> {
    lines
        .iter()
        .map(|l| points.iter().map(|p| l.contains(p)).collect())
        .collect()
}

impl From<&SlopeIntercept> for Line {
    fn from(l: &SlopeIntercept) -> Line {
        l.to_line()
    }
}
