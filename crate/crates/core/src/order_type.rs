//! Order types of ordered planar point sets.
//!
//! The order type records, for each index triple `i < j < k` in lexicographic
//! order, the orientation of the corresponding points. Its string form (one
//! of `-`, `0`, `+` per triple) is what gets compared, sorted and sent around.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{orientation, Orientation, Point};
use crate::plc::brute_force_min_cover;

/// Largest point count for permutation-search canonicalization.
pub const CANONICAL_CAP: usize = 8;

/// Largest number of grid subsets [`enumerate_grid_order_types`] will visit.
pub const ENUMERATION_BUDGET: u128 = 5_000_000;

/// Order type of an ordered point set.
///
/// Ordering compares point count first, then the orientation sequence
/// lexicographically with `- < 0 < +`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Otr {
    n: usize,
    values: Vec<Orientation>,
}

pub fn triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

impl Otr {
    pub fn new(n: usize, values: Vec<Orientation>) -> Result<Self> {
        if values.len() != triple_count(n) {
            return Err(Error::Infeasible(format!(
                "order type of {n} points needs {} symbols, got {}",
                triple_count(n),
                values.len()
            )));
        }
        Ok(Otr { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Orientation] {
        &self.values
    }

    /// The symbol string, e.g. `"++-0"`.
    pub fn symbols(&self) -> String {
        self.values.iter().map(|o| o.symbol()).collect()
    }

    pub fn from_symbols(n: usize, s: &str) -> Result<Self> {
        let values = s
            .chars()
            .map(|c| {
                Orientation::from_symbol(c)
                    .ok_or_else(|| Error::Infeasible(format!("bad order-type symbol {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Otr::new(n, values)
    }
}

impl fmt::Display for Otr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols())
    }
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

fn reject_duplicates(points: &[Point]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for p in points {
        if !seen.insert(p) {
            return Err(Error::DuplicatePoint(Box::new(p.clone())));
        }
    }
    Ok(())
}

pub fn otr(points: &[Point]) -> Result<Otr> {
    reject_duplicates(points)?;
    let n = points.len();
    let values = triples(n)
        .map(|(i, j, k)| orientation(&points[i], &points[j], &points[k]))
        .collect();
    Ok(Otr { n, values })
}

/// Orientations of every ordered triple, indexed `[i][j][k]`.
struct OrientationTable {
    n: usize,
    cells: Vec<Orientation>,
}

impl OrientationTable {
    fn new(points: &[Point]) -> Self {
        let n = points.len();
        let ints: Option<Vec<(i64, i64)>> = points
            .iter()
            .map(|p| {
                p.as_ints()
                    .filter(|(x, y)| x.abs() < 1 << 40 && y.abs() < 1 << 40)
            })
            .collect();
        let mut cells = vec![Orientation::Collinear; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    cells[(i * n + j) * n + k] = match &ints {
                        Some(q) => small_orientation(q[i], q[j], q[k]),
                        None => orientation(&points[i], &points[j], &points[k]),
                    };
                }
            }
        }
        OrientationTable { n, cells }
    }

    fn get(&self, i: usize, j: usize, k: usize) -> Orientation {
        self.cells[(i * self.n + j) * self.n + k]
    }
}

fn small_orientation(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> Orientation {
    let det = (q.0 - p.0) as i128 * (r.1 - p.1) as i128 - (q.1 - p.1) as i128 * (r.0 - p.0) as i128;
    Orientation::from_sign(det.signum() as i32)
}

/// Smallest order type over all orderings of `points`, together with an
/// ordering that realizes it.
pub fn canonical_ordering(points: &[Point]) -> Result<(Otr, Vec<usize>)> {
    let n = points.len();
    if n > CANONICAL_CAP {
        return Err(Error::cap(
            "canonical order-type point count",
            CANONICAL_CAP,
            n,
        ));
    }
    reject_duplicates(points)?;
    let table = OrientationTable::new(points);
    let tri: Vec<(usize, usize, usize)> = triples(n).collect();

    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Vec<Orientation> = tri.iter().map(|&(i, j, k)| table.get(i, j, k)).collect();
    let mut best_perm = perm.clone();
    while next_permutation(&mut perm) {
        // compare lazily; most orderings lose within a few symbols
        let mut candidate_smaller = false;
        for (pos, &(i, j, k)) in tri.iter().enumerate() {
            let v = table.get(perm[i], perm[j], perm[k]);
            match v.cmp(&best[pos]) {
                std::cmp::Ordering::Less => {
                    candidate_smaller = true;
                    break;
                }
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
        if candidate_smaller {
            best = tri
                .iter()
                .map(|&(i, j, k)| table.get(perm[i], perm[j], perm[k]))
                .collect();
            best_perm.clone_from(&perm);
        }
    }
    Ok((Otr { n, values: best }, best_perm))
}

pub fn canonical_otr(points: &[Point]) -> Result<Otr> {
    canonical_ordering(points).map(|(otr, _)| otr)
}

/// Whether `p` and `q` admit orderings with identical order types.
pub fn equivalent(p: &[Point], q: &[Point]) -> Result<bool> {
    if p.len() != q.len() {
        return Ok(false);
    }
    Ok(canonical_otr(p)? == canonical_otr(q)?)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("v[i] qualifies");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub otr: Otr,
    /// Points ordered so that their order type is exactly `otr`.
    pub representative: Vec<Point>,
    pub min_cover: usize,
}

/// Canonical order types realized by `n`-subsets of the `grid × grid`
/// integer grid, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderTypeCatalog {
    pub n: usize,
    pub grid: u32,
    entries: Vec<CatalogEntry>,
}

impl OrderTypeCatalog {
    /// Checks sizes, strict ordering and that each representative realizes
    /// its order type.
    pub fn from_entries(n: usize, grid: u32, entries: Vec<CatalogEntry>) -> Result<Self> {
        for e in &entries {
            if e.otr.n() != n || e.representative.len() != n {
                return Err(Error::Infeasible(format!(
                    "catalog entry {} does not describe {n} points",
                    e.otr
                )));
            }
        }
        for e in &entries {
            if otr(&e.representative)? != e.otr {
                return Err(Error::Infeasible(format!(
                    "representative does not realize {}",
                    e.otr
                )));
            }
        }
        if entries.windows(2).any(|w| w[0].otr >= w[1].otr) {
            return Err(Error::Infeasible(
                "catalog entries are not strictly increasing".into(),
            ));
        }
        Ok(OrderTypeCatalog { n, grid, entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup(&self, otr: &Otr) -> Option<&CatalogEntry> {
        self.entries
            .binary_search_by(|e| e.otr.cmp(otr))
            .ok()
            .map(|i| &self.entries[i])
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Visits every `n`-subset of the grid and records one representative and
/// its exact minimum line cover per canonical order type. Degenerate
/// subsets are included.
pub fn enumerate_grid_order_types(n: usize, grid: u32) -> Result<OrderTypeCatalog> {
    if n > CANONICAL_CAP {
        return Err(Error::cap("catalog point count", CANONICAL_CAP, n));
    }
    let cells = grid as u128 * grid as u128;
    let work = binomial(cells, n as u128);
    if work > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "{work} subsets of a {grid}x{grid} grid (budget {ENUMERATION_BUDGET})"
        )));
    }
    if (n as u128) > cells {
        return Err(Error::Infeasible(format!(
            "{n} points do not fit on a {grid}x{grid} grid"
        )));
    }

    let universe: Vec<Point> = (0..grid as i64)
        .flat_map(|x| (0..grid as i64).map(move |y| Point::from_ints(x, y)))
        .collect();

    let mut classes: BTreeMap<Otr, Vec<Point>> = BTreeMap::new();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let subset: Vec<Point> = idx.iter().map(|&i| universe[i].clone()).collect();
        let (otr, order) = canonical_ordering(&subset)?;
        classes
            .entry(otr)
            .or_insert_with(|| order.iter().map(|&i| subset[i].clone()).collect());
        if !next_combination(&mut idx, universe.len()) {
            break;
        }
    }

    let entries = classes
        .into_iter()
        .map(|(otr, representative)| {
            let min_cover = brute_force_min_cover(&representative)?;
            Ok(CatalogEntry {
                otr,
                representative,
                min_cover,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrderTypeCatalog { n, grid, entries })
}

fn next_combination(idx: &mut [usize], universe: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < universe - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Orientation::*;

    fn pts(coords: &[(i64, i64)]) -> Vec<Point> {
        coords
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect()
    }

    #[test]
    fn otr_examples() {
        assert_eq!(
            otr(&pts(&[(0, 0), (1, 0), (0, 1)])).unwrap().values(),
            &[CounterClockwise]
        );
        assert_eq!(
            otr(&pts(&[(0, 0), (1, 1), (2, 2)])).unwrap().values(),
            &[Collinear]
        );
        // Oracle: cofactor expansion of det [[1, ax, ay], [1, bx, by], [1, cx, cy]].
        let det3 = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| {
            (b.0 * c.1 - c.0 * b.1) - a.0 * (c.1 - b.1) + a.1 * (c.0 - b.0)
        };
        let square = [(0, 0), (1, 0), (0, 1), (1, 1)];
        let expected: String = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
            .iter()
            .map(
                |&(i, j, k)| match det3(square[i], square[j], square[k]).signum() {
                    -1 => '-',
                    0 => '0',
                    _ => '+',
                },
            )
            .collect();
        assert_eq!(expected, "++--");
        let sq = otr(&pts(&square)).unwrap();
        assert_eq!(sq.symbols(), expected);
        assert_eq!(
            otr(&pts(&[(0, 0), (1, 1), (0, 0)])),
            Err(Error::DuplicatePoint(Box::new(Point::from_ints(0, 0))))
        );
        assert_eq!(otr(&pts(&[(4, 4)])).unwrap().symbols(), "");
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            canonical_otr(&pts(&[(0, 0), (1, 0), (0, 1)]))
                .unwrap()
                .symbols(),
            "-"
        );
        assert_eq!(
            canonical_otr(&pts(&[(0, 0), (1, 1), (2, 2)]))
                .unwrap()
                .symbols(),
            "0"
        );
        assert_eq!(
            canonical_otr(&pts(&[(0, 0), (1, 0), (0, 1)])).unwrap(),
            canonical_otr(&pts(&[(0, 0), (2, 0), (0, 2)])).unwrap()
        );
        let nine: Vec<Point> = (0..9).map(|i| Point::from_ints(i, i * i)).collect();
        assert!(matches!(
            canonical_otr(&nine),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn canonical_ordering_realizes_otr() {
        let p = pts(&[(3, 1), (0, 0), (5, 5), (1, 4), (2, 2)]);
        let (c, order) = canonical_ordering(&p).unwrap();
        let reordered: Vec<Point> = order.iter().map(|&i| p[i].clone()).collect();
        assert_eq!(otr(&reordered).unwrap(), c);
    }

    #[test]
    fn equivalence_examples() {
        let p = pts(&[(0, 0), (3, 1), (1, 2), (4, 4)]);
        let mut q = p.clone();
        q.reverse();
        assert!(equivalent(&p, &q).unwrap());
        assert!(!equivalent(
            &pts(&[(0, 0), (1, 1), (2, 2)]),
            &pts(&[(0, 0), (1, 0), (0, 1)])
        )
        .unwrap());
        assert!(!equivalent(&p, &p[..3]).unwrap());
    }

    #[test]
    fn symbol_string_round_trip() {
        let o = Otr::from_symbols(4, "+-0+").unwrap();
        assert_eq!(o.to_string(), "+-0+");
        assert_eq!(Otr::from_symbols(2, "").unwrap().n(), 2);
        assert!(Otr::from_symbols(4, "+-0").is_err());
        assert!(Otr::from_symbols(3, "x").is_err());
    }

    #[test]
    fn permutation_and_combination_helpers() {
        let mut v = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 6);
        let mut c = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut c, 4) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(binomial(16, 5), 4368);
    }

    #[test]
    fn catalog_single_point() {
        let cat = enumerate_grid_order_types(1, 3).unwrap();
        assert_eq!(cat.len(), 1);
        assert_eq!(cat.entries()[0].otr.symbols(), "");
        assert_eq!(cat.entries()[0].min_cover, 1);
    }

    #[test]
    fn catalog_budget() {
        assert!(matches!(
            enumerate_grid_order_types(8, 40),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
