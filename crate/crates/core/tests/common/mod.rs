#![allow(dead_code)]

use linecover::duality::SlopeIntercept;
use linecover::io::{generate, GeneratorSpec};
use linecover::{PlcInstance, Point, Rational};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Seeded mix of planted, uniform and lattice instances with `n <= 12`,
/// `k <= 4`.
pub fn kernel_corpus(count: usize, seed: u64) -> Vec<PlcInstance> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let spec = match out.len() % 3 {
            0 => GeneratorSpec::Planted {
                n: rng.gen_range(1..=12),
                k: rng.gen_range(1..=4),
                g: rng.gen_range(4..=12),
                seed: rng.gen(),
            },
            1 => GeneratorSpec::Uniform {
                n: rng.gen_range(0..=12),
                k: rng.gen_range(0..=4),
                g: rng.gen_range(4..=7),
                seed: rng.gen(),
            },
            _ => {
                let rows = rng.gen_range(1..=4);
                let cols = rng.gen_range(1..=12 / rows);
                GeneratorSpec::Grid {
                    rows,
                    cols,
                    k: rng.gen_range(0..=4),
                }
            }
        };
        let Ok(inst) = generate(&spec) else {
            continue;
        };
        // Planted instances keep their planted k half of the time.
        let inst = match spec {
            GeneratorSpec::Planted { .. } if rng.gen_bool(0.5) => inst.with_k(rng.gen_range(0..=4)),
            _ => inst,
        };
        out.push(inst);
    }
    out
}

/// Random non-vertical lines with small slopes and intercepts, so that
/// concurrencies and parallels actually occur.
pub fn random_lpc_lines(rng: &mut ChaCha8Rng, m: usize) -> Vec<SlopeIntercept> {
    let mut lines: Vec<SlopeIntercept> = Vec::new();
    while lines.len() < m {
        let slope = if rng.gen_bool(0.2) {
            frac(rng.gen_range(-3..=3), 2)
        } else {
            frac(rng.gen_range(-3..=3), 1)
        };
        let l = SlopeIntercept::new(slope, frac(rng.gen_range(-3..=3), 1));
        if !lines.contains(&l) {
            lines.push(l);
        }
    }
    lines
}

/// Like [`random_lpc_lines`] but with pairwise distinct slopes.
pub fn random_nonparallel_lpc_lines(rng: &mut ChaCha8Rng, m: usize) -> Vec<SlopeIntercept> {
    let mut lines: Vec<SlopeIntercept> = Vec::new();
    while lines.len() < m {
        let l = random_lpc_lines(rng, 1).pop().unwrap();
        if lines.iter().all(|o| o.m != l.m) {
            lines.push(l);
        }
    }
    lines
}

/// Random positive-determinant rational affine map applied to `points`.
pub fn random_affine_image(rng: &mut ChaCha8Rng, points: &[Point]) -> Vec<Point> {
    let entry = |rng: &mut ChaCha8Rng| frac(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    let (a, b, c, d) = loop {
        let m = (entry(rng), entry(rng), entry(rng), entry(rng));
        let det = &m.0 * &m.3 - &m.1 * &m.2;
        if det > frac(0, 1) {
            break m;
        }
    };
    let (tx, ty) = (entry(rng), entry(rng));
    points
        .iter()
        .map(|p| Point::new(&a * &p.x + &b * &p.y + &tx, &c * &p.x + &d * &p.y + &ty))
        .collect()
}

/// `n` distinct points of the `g × g` grid.
pub fn random_grid_points(rng: &mut ChaCha8Rng, n: usize, g: i64) -> Vec<Point> {
    let mut cells: Vec<(i64, i64)> = (0..g).flat_map(|x| (0..g).map(move |y| (x, y))).collect();
    cells.shuffle(rng);
    cells[..n]
        .iter()
        .map(|&(x, y)| Point::from_ints(x, y))
        .collect()
}

/// Literal search over subsets of candidate lines: the fewest lines such
/// that the chosen lines plus one line per leftover point cover everything.
/// Independent of the library's cover search; exponential, small `n` only.
pub fn subset_enumeration_min_cover(points: &[Point]) -> usize {
    use linecover::geometry::line_through;
    let n = points.len();
    let mut lines: Vec<u32> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let l = line_through(&points[i], &points[j]).unwrap();
            let mask = (0..n)
                .filter(|&t| l.contains(&points[t]))
                .fold(0u32, |m, t| m | 1 << t);
            if !lines.contains(&mask) {
                lines.push(mask);
            }
        }
    }
    let mut best = n;
    fn walk(lines: &[u32], start: usize, used: usize, covered: u32, n: usize, best: &mut usize) {
        let leftover = n - covered.count_ones() as usize;
        *best = (*best).min(used + leftover);
        if used + 1 >= *best {
            return;
        }
        for i in start..lines.len() {
            walk(lines, i + 1, used + 1, covered | lines[i], n, best);
        }
    }
    walk(&lines, 0, 0, 0, n, &mut best);
    best
}
