//! Point Line Cover instances, the mandatory-line kernel, an exhaustive
//! minimum-cover oracle and a bounded-search decider.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::geometry::{line_through, Line, Point};

/// Largest point count accepted by [`brute_force_min_cover`].
pub const BRUTE_FORCE_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlcInstance {
    points: Vec<Point>,
    pub k: usize,
}

impl PlcInstance {
    /// Rejects repeated points instead of silently merging them.
    pub fn new(points: Vec<Point>, k: usize) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint(Box::new(p.clone())));
            }
        }
        Ok(PlcInstance { points, k })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn with_k(&self, k: usize) -> Self {
        PlcInstance {
            points: self.points.clone(),
            k,
        }
    }
}

/// A line through at least two input points together with every input point
/// it covers (indices ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateLine {
    pub line: Line,
    pub covered: Vec<usize>,
}

/// Every line spanned by two or more of `points`, once each, in canonical
/// line order.
pub fn candidate_lines(points: &[Point]) -> Vec<CandidateLine> {
    let mut by_line: BTreeMap<Line, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let Ok(line) = line_through(&points[i], &points[j]) else {
                continue;
            };
            let covered = by_line.entry(line).or_default();
            covered.insert(i);
            covered.insert(j);
        }
    }
    by_line
        .into_iter()
        .map(|(line, covered)| CandidateLine {
            line,
            covered: covered.into_iter().collect(),
        })
        .collect()
}

/// A line forced by the `k + 1` rule, with the state it fired in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MandatoryLine {
    pub line: Line,
    /// Points of the instance the line removed.
    pub covered: Vec<Point>,
    /// Parameter value just before the rule fired.
    pub k_before: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub reduced: PlcInstance,
    pub mandatory_lines: Vec<MandatoryLine>,
    pub decided: Option<bool>,
}

/// Candidate lines as bitsets over the original point indices. Built once
/// per instance; every sub-instance is a mask over the same points, and a
/// line through two remaining points is always one of these.
struct Arrangement<'a> {
    points: &'a [Point],
    lines: Vec<(Line, FixedBitSet)>,
}

struct Reduction {
    remaining: FixedBitSet,
    k: usize,
    fired: Vec<(usize, usize)>,
    decided: Option<bool>,
}

impl<'a> Arrangement<'a> {
    fn new(points: &'a [Point]) -> Self {
        let n = points.len();
        let lines = candidate_lines(points)
            .into_iter()
            .map(|c| {
                let mut bits = FixedBitSet::with_capacity(n);
                for i in c.covered {
                    bits.insert(i);
                }
                (c.line, bits)
            })
            .collect();
        Arrangement { points, lines }
    }

    fn full_mask(&self) -> FixedBitSet {
        let mut m = FixedBitSet::with_capacity(self.points.len());
        m.insert_range(..);
        m
    }

    /// Applies the kernel rules to a fixpoint. `fired` holds
    /// `(line index, k before firing)`.
    fn reduce(&self, mut remaining: FixedBitSet, mut k: usize) -> Reduction {
        let mut fired = Vec::new();
        let decided = loop {
            let n = remaining.count_ones(..);
            if n == 0 {
                break Some(true);
            }
            if k == 0 {
                break Some(false);
            }
            let heavy = self
                .lines
                .iter()
                .position(|(_, bits)| bits.intersection_count(&remaining) > k);
            if let Some(idx) = heavy {
                remaining.difference_with(&self.lines[idx].1);
                fired.push((idx, k));
                k -= 1;
                continue;
            }
            if n > k * k {
                break Some(false);
            }
            break None;
        };
        Reduction {
            remaining,
            k,
            fired,
            decided,
        }
    }

    fn search(
        &self,
        remaining: FixedBitSet,
        k: usize,
        chosen: &mut Vec<Line>,
        failed: &mut HashSet<(FixedBitSet, usize)>,
    ) -> bool {
        if failed.contains(&(remaining.clone(), k)) {
            return false;
        }
        let mark = chosen.len();
        let red = self.reduce(remaining.clone(), k);
        chosen.extend(red.fired.iter().map(|&(idx, _)| self.lines[idx].0.clone()));
        let found = match red.decided {
            Some(answer) => answer,
            None => self.branch(&red.remaining, red.k, chosen, failed),
        };
        if !found {
            chosen.truncate(mark);
            failed.insert((remaining, k));
        }
        found
    }

    fn branch(
        &self,
        remaining: &FixedBitSet,
        k: usize,
        chosen: &mut Vec<Line>,
        failed: &mut HashSet<(FixedBitSet, usize)>,
    ) -> bool {
        let n = remaining.count_ones(..);
        let p = remaining.ones().next().expect("reduction leaves points");

        // k lines cover at most the sum of the k largest line loads.
        let mut loads: Vec<usize> = self
            .lines
            .iter()
            .map(|(_, bits)| bits.intersection_count(remaining))
            .filter(|&c| c >= 2)
            .collect();
        loads.sort_unstable_by(|a, b| b.cmp(a));
        let reach: usize = loads
            .iter()
            .copied()
            .chain(std::iter::repeat(1))
            .take(k)
            .sum();
        if reach < n {
            return false;
        }

        let mut through_p: Vec<(usize, usize)> = self
            .lines
            .iter()
            .enumerate()
            .filter(|(_, (_, bits))| bits.contains(p))
            .map(|(idx, (_, bits))| (idx, bits.intersection_count(remaining)))
            .filter(|&(_, load)| load >= 2)
            .collect();

        if through_p.is_empty() {
            // p is alone; any line through it finishes the cover.
            chosen.push(Line::horizontal_through(&self.points[p]));
            return true;
        }

        through_p.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        for (idx, _) in through_p {
            let mut rest = remaining.clone();
            rest.difference_with(&self.lines[idx].1);
            chosen.push(self.lines[idx].0.clone());
            if self.search(rest, k - 1, chosen, failed) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Exhaustively applies the mandatory-line rule and the size bound.
///
/// Lines are scanned in canonical order, so the report is reproducible.
pub fn kernelize(inst: &PlcInstance) -> KernelReport {
    let arr = Arrangement::new(&inst.points);
    let red = arr.reduce(arr.full_mask(), inst.k);

    let mut remaining = arr.full_mask();
    let mandatory_lines = red
        .fired
        .iter()
        .map(|&(idx, k_before)| {
            let (line, bits) = &arr.lines[idx];
            let covered = bits
                .intersection(&remaining)
                .map(|i| inst.points[i].clone())
                .collect();
            remaining.difference_with(bits);
            MandatoryLine {
                line: line.clone(),
                covered,
                k_before,
            }
        })
        .collect();

    let points = red
        .remaining
        .ones()
        .map(|i| inst.points[i].clone())
        .collect();
    KernelReport {
        reduced: PlcInstance { points, k: red.k },
        mandatory_lines,
        decided: red.decided,
    }
}

/// Exact minimum number of lines covering `points`.
pub fn brute_force_min_cover(points: &[Point]) -> Result<usize> {
    brute_force_cover(points).map(|lines| lines.len())
}

/// A minimum line cover, found by exhaustive search over candidate lines
/// with single-point lines for anything left over.
pub fn brute_force_cover(points: &[Point]) -> Result<Vec<Line>> {
    let n = points.len();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::cap("brute-force point count", BRUTE_FORCE_CAP, n));
    }
    let lines: Vec<(Line, u32)> = candidate_lines(points)
        .into_iter()
        .map(|c| (c.line, c.covered.iter().fold(0u32, |m, &i| m | (1 << i))))
        .collect();

    // best[mask] = minimum lines covering the points in mask; u8::MAX = unknown.
    let full = (1u32 << n) - 1;
    let mut best = vec![u8::MAX; 1usize << n];
    best[0] = 0;
    fn solve(mask: u32, lines: &[(Line, u32)], best: &mut [u8]) -> u8 {
        if best[mask as usize] != u8::MAX {
            return best[mask as usize];
        }
        let low = mask & mask.wrapping_neg();
        let mut value = 1 + solve(mask & !low, lines, best);
        for &(_, bits) in lines {
            if bits & low != 0 {
                value = value.min(1 + solve(mask & !bits, lines, best));
            }
        }
        best[mask as usize] = value;
        value
    }
    solve(full, &lines, &mut best);

    let mut cover = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let low = mask & mask.wrapping_neg();
        let target = best[mask as usize] - 1;
        let via_line = lines
            .iter()
            .find(|(_, bits)| bits & low != 0 && best[(mask & !bits) as usize] == target);
        match via_line {
            Some((line, bits)) => {
                cover.push(line.clone());
                mask &= !bits;
            }
            None => {
                let idx = low.trailing_zeros() as usize;
                cover.push(Line::horizontal_through(&points[idx]));
                mask &= !low;
            }
        }
    }
    Ok(cover)
}

/// Kernel plus branching on the lines through the first uncovered point.
pub fn fpt_decide(inst: &PlcInstance) -> bool {
    fpt_cover(inst).is_some()
}

/// Like [`fpt_decide`] but returns a cover of at most `k` lines on success.
pub fn fpt_cover(inst: &PlcInstance) -> Option<Vec<Line>> {
    let arr = Arrangement::new(&inst.points);
    let mut chosen = Vec::new();
    let mut failed = HashSet::new();
    arr.search(arr.full_mask(), inst.k, &mut chosen, &mut failed)
        .then_some(chosen)
}

/// Whether the points can be covered by at most `k` lines.
pub fn decide(inst: &PlcInstance) -> bool {
    solve(inst).is_some()
}

/// A cover of at most `k` lines, if one exists. Small instances go to the
/// exhaustive oracle, larger ones to the branching search.
pub fn solve(inst: &PlcInstance) -> Option<Vec<Line>> {
    if inst.len() <= BRUTE_FORCE_CAP {
        let cover = brute_force_cover(&inst.points).expect("under the cap");
        (cover.len() <= inst.k).then_some(cover)
    } else {
        fpt_cover(inst)
    }
}
