//! Line-oriented text formats and seeded instance generators.
//!
//! All formats share the same lexical rules: `#` starts a comment, blank
//! lines are ignored, rationals are written `p/q` or as bare integers.
//!
//! ```text
//! plc      n k            then n lines  x y
//! lpc      m k            then m lines  slope intercept
//! graph    n m k          then m lines  u v   (1-indexed)
//! otr      otr n          then one line of C(n,3) symbols over - 0 +
//! catalog  catalog n g c  then c lines  symbols min_cover x1 y1 ... xn yn
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::duality::{LpcInstance, SlopeIntercept};
use crate::error::{Error, Result};
use crate::geometry::{Line, Point, Rational};
use crate::order_type::{triple_count, CatalogEntry, OrderTypeCatalog, Otr};
use crate::plc::{KernelReport, PlcInstance};
use crate::vc::{Graph, VcInstance};

/// Meaningful lines of `text` as `(1-based line number, tokens)`.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_count(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {tok:?}")))
}

fn parse_rational(line: usize, tok: &str) -> Result<Rational> {
    tok.parse::<Rational>()
        .map_err(|_| Error::parse(line, format!("expected a rational, found {tok:?}")))
}

fn expect_arity(line: usize, tokens: &[&str], want: usize, what: &str) -> Result<()> {
    if tokens.len() != want {
        return Err(Error::parse(
            line,
            format!("{what} needs {want} fields, found {}", tokens.len()),
        ));
    }
    Ok(())
}

fn header<'a, I>(recs: &mut I, want: usize, what: &str) -> Result<(usize, Vec<&'a str>)>
where
    I: Iterator<Item = (usize, Vec<&'a str>)>,
{
    let (line, tokens) = recs
        .next()
        .ok_or_else(|| Error::parse(1, format!("missing {what} header")))?;
    expect_arity(line, &tokens, want, what)?;
    Ok((line, tokens))
}

fn body<'a, I>(recs: I, count: usize, header_line: usize) -> Result<Vec<(usize, Vec<&'a str>)>>
where
    I: Iterator<Item = (usize, Vec<&'a str>)>,
{
    let rows: Vec<_> = recs.collect();
    if rows.len() != count {
        let line = rows.get(count).map_or(header_line, |r| r.0);
        return Err(Error::parse(
            line,
            format!("header announces {count} records, found {}", rows.len()),
        ));
    }
    Ok(rows)
}

pub fn parse_plc(text: &str) -> Result<PlcInstance> {
    let mut recs = records(text);
    let (hl, h) = header(&mut recs, 2, "plc `n k`")?;
    let n = parse_count(hl, h[0], "a point count")?;
    let k = parse_count(hl, h[1], "a parameter k")?;
    let mut points = Vec::with_capacity(n);
    let mut seen = BTreeSet::new();
    for (line, tokens) in body(recs, n, hl)? {
        expect_arity(line, &tokens, 2, "a point")?;
        let p = Point::new(
            parse_rational(line, tokens[0])?,
            parse_rational(line, tokens[1])?,
        );
        if !seen.insert(p.clone()) {
            return Err(Error::parse(line, format!("duplicate point {p}")));
        }
        points.push(p);
    }
    PlcInstance::new(points, k)
}

pub fn emit_plc(inst: &PlcInstance) -> String {
    let mut out = format!("{} {}\n", inst.len(), inst.k);
    for p in inst.points() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

pub fn parse_lpc(text: &str) -> Result<LpcInstance> {
    let mut recs = records(text);
    let (hl, h) = header(&mut recs, 2, "lpc `m k`")?;
    let m = parse_count(hl, h[0], "a line count")?;
    let k = parse_count(hl, h[1], "a parameter k")?;
    let mut lines = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    for (line, tokens) in body(recs, m, hl)? {
        expect_arity(line, &tokens, 2, "a line")?;
        let l = SlopeIntercept::new(
            parse_rational(line, tokens[0])?,
            parse_rational(line, tokens[1])?,
        );
        if !seen.insert(l.clone()) {
            return Err(Error::parse(line, format!("duplicate line {l}")));
        }
        lines.push(l);
    }
    LpcInstance::new(lines, k)
}

pub fn emit_lpc(inst: &LpcInstance) -> String {
    let mut out = format!("{} {}\n", inst.len(), inst.k);
    for l in inst.lines() {
        let _ = writeln!(out, "{} {}", l.m, l.c);
    }
    out
}

pub fn parse_graph(text: &str) -> Result<VcInstance> {
    let mut recs = records(text);
    let (hl, h) = header(&mut recs, 3, "graph `n m k`")?;
    let n = parse_count(hl, h[0], "a vertex count")?;
    let m = parse_count(hl, h[1], "an edge count")?;
    let k = parse_count(hl, h[2], "a parameter k")?;
    let mut graph = Graph::new(n);
    for (line, tokens) in body(recs, m, hl)? {
        expect_arity(line, &tokens, 2, "an edge")?;
        let u = parse_count(line, tokens[0], "a vertex")?;
        let v = parse_count(line, tokens[1], "a vertex")?;
        if u == 0 || v == 0 {
            return Err(Error::parse(line, "vertices are numbered from 1"));
        }
        graph
            .add_edge(u - 1, v - 1)
            .map_err(|e| Error::parse(line, e.to_string()))?;
    }
    VcInstance::new(graph, k).map_err(|e| Error::parse(hl, e.to_string()))
}

pub fn emit_graph(inst: &VcInstance) -> String {
    let g = &inst.graph;
    let mut out = format!("{} {} {}\n", g.n(), g.edge_count(), inst.k);
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_otr(text: &str) -> Result<Otr> {
    let mut recs = records(text);
    let (hl, h) = header(&mut recs, 2, "otr `otr n`")?;
    if h[0] != "otr" {
        return Err(Error::parse(
            hl,
            format!("expected `otr`, found {:?}", h[0]),
        ));
    }
    let n = parse_count(hl, h[1], "a point count")?;
    let rest: Vec<_> = recs.collect();
    let (line, symbols) = match rest.as_slice() {
        [] if triple_count(n) == 0 => (hl, ""),
        [(line, tokens)] if tokens.len() == 1 => (*line, tokens[0]),
        _ => return Err(Error::parse(hl, "expected exactly one symbol line")),
    };
    Otr::from_symbols(n, symbols).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn emit_otr(otr: &Otr) -> String {
    format!("otr {}\n{}\n", otr.n(), otr.symbols())
}

const EMPTY_SYMBOLS: &str = ".";

pub fn parse_catalog(text: &str) -> Result<OrderTypeCatalog> {
    let mut recs = records(text);
    let (hl, h) = header(&mut recs, 4, "catalog `catalog n g count`")?;
    if h[0] != "catalog" {
        return Err(Error::parse(
            hl,
            format!("expected `catalog`, found {:?}", h[0]),
        ));
    }
    let n = parse_count(hl, h[1], "a point count")?;
    let grid = parse_count(hl, h[2], "a grid side")? as u32;
    let count = parse_count(hl, h[3], "an entry count")?;
    let mut entries = Vec::with_capacity(count);
    for (line, tokens) in body(recs, count, hl)? {
        expect_arity(line, &tokens, 2 + 2 * n, "a catalog entry")?;
        let symbols = if tokens[0] == EMPTY_SYMBOLS {
            ""
        } else {
            tokens[0]
        };
        let otr = Otr::from_symbols(n, symbols).map_err(|e| Error::parse(line, e.to_string()))?;
        let min_cover = parse_count(line, tokens[1], "a cover size")?;
        let representative = tokens[2..]
            .chunks(2)
            .map(|xy| {
                Ok(Point::new(
                    parse_rational(line, xy[0])?,
                    parse_rational(line, xy[1])?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        entries.push(CatalogEntry {
            otr,
            representative,
            min_cover,
        });
    }
    OrderTypeCatalog::from_entries(n, grid, entries).map_err(|e| Error::parse(hl, e.to_string()))
}

pub fn emit_catalog(catalog: &OrderTypeCatalog) -> String {
    let mut out = format!("catalog {} {} {}\n", catalog.n, catalog.grid, catalog.len());
    for e in catalog.entries() {
        let symbols = e.otr.symbols();
        let _ = write!(
            out,
            "{} {}",
            if symbols.is_empty() {
                EMPTY_SYMBOLS
            } else {
                &symbols
            },
            e.min_cover
        );
        for p in &e.representative {
            let _ = write!(out, " {} {}", p.x, p.y);
        }
        out.push('\n');
    }
    out
}

/// One witness line: canonical `a b c`, plus `y = m x + c` when defined.
pub fn describe_line(line: &Line) -> String {
    match line.slope_intercept() {
        Some((m, c)) => format!("line {line} # y = {m} x + {c}"),
        None => format!("line {line} # vertical"),
    }
}

pub fn emit_kernel_report(report: &KernelReport) -> String {
    let mut out = String::new();
    let status = match report.decided {
        Some(true) => "yes",
        Some(false) => "no",
        None => "undecided",
    };
    let _ = writeln!(out, "# decided {status}");
    for m in &report.mandatory_lines {
        let _ = writeln!(
            out,
            "# mandatory {} covering {} points at k = {}",
            describe_line(&m.line).trim_start_matches("line "),
            m.covered.len(),
            m.k_before
        );
    }
    out.push_str(&emit_plc(&report.reduced));
    out
}

/// Recipe for a random or structured instance. Randomized kinds always
/// carry an explicit seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// `n` points sampled from `k` random lines through grid point pairs.
    Planted {
        n: usize,
        k: usize,
        g: u32,
        seed: u64,
    },
    /// `n` distinct uniform points of the `g × g` grid.
    Uniform {
        n: usize,
        k: usize,
        g: u32,
        seed: u64,
    },
    /// The full `rows × cols` lattice.
    Grid { rows: u32, cols: u32, k: usize },
}

const PLANTED_DIRECTIONS: [(i64, i64); 12] = [
    (1, 0),
    (0, 1),
    (1, 1),
    (1, -1),
    (1, 2),
    (2, 1),
    (1, -2),
    (2, -1),
    (1, 3),
    (3, 1),
    (1, -3),
    (3, -1),
];

fn lattice_on_line(p: (i64, i64), d: (i64, i64), g: i64) -> Vec<(i64, i64)> {
    let inside = |q: (i64, i64)| (0..g).contains(&q.0) && (0..g).contains(&q.1);
    let mut start = p;
    while inside((start.0 - d.0, start.1 - d.1)) {
        start = (start.0 - d.0, start.1 - d.1);
    }
    let mut out = Vec::new();
    let mut q = start;
    while inside(q) {
        out.push(q);
        q = (q.0 + d.0, q.1 + d.1);
    }
    out
}

pub fn generate(spec: &GeneratorSpec) -> Result<PlcInstance> {
    match *spec {
        GeneratorSpec::Planted { n, k, g, seed } => planted(n, k, g, seed),
        GeneratorSpec::Uniform { n, k, g, seed } => {
            let cells = g as usize * g as usize;
            if n > cells {
                return Err(Error::Infeasible(format!(
                    "{n} distinct points requested from a {g}x{g} grid"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let points = sample(&mut rng, cells, n)
                .into_iter()
                .map(|i| Point::from_ints((i / g as usize) as i64, (i % g as usize) as i64))
                .collect();
            PlcInstance::new(points, k)
        }
        GeneratorSpec::Grid { rows, cols, k } => {
            let points = (0..cols as i64)
                .flat_map(|x| (0..rows as i64).map(move |y| Point::from_ints(x, y)))
                .collect();
            PlcInstance::new(points, k)
        }
    }
}

fn planted(n: usize, k: usize, g: u32, seed: u64) -> Result<PlcInstance> {
    if n == 0 {
        return PlcInstance::new(Vec::new(), k);
    }
    if k == 0 {
        return Err(Error::Infeasible(
            "cannot plant points on zero lines".into(),
        ));
    }
    if g < 2 {
        return Err(Error::Infeasible(format!("a {g}x{g} grid spans no lines")));
    }
    let side = g as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: BTreeSet<Line> = BTreeSet::new();
    let mut pool: BTreeSet<(i64, i64)> = BTreeSet::new();
    let mut attempts = 0;
    while chosen.len() < k {
        attempts += 1;
        if attempts > 10_000 {
            return Err(Error::Infeasible(format!(
                "could not find {k} distinct lines on a {g}x{g} grid"
            )));
        }
        let p = (rng.gen_range(0..side), rng.gen_range(0..side));
        let d = PLANTED_DIRECTIONS[rng.gen_range(0..PLANTED_DIRECTIONS.len())];
        let on_line = lattice_on_line(p, d, side);
        if on_line.len() < 2 {
            continue;
        }
        let a = Point::from_ints(on_line[0].0, on_line[0].1);
        let b = Point::from_ints(on_line[1].0, on_line[1].1);
        let line = crate::geometry::line_through(&a, &b)?;
        if chosen.insert(line) {
            pool.extend(on_line);
        }
    }
    let pool: Vec<(i64, i64)> = pool.into_iter().collect();
    if pool.len() < n {
        return Err(Error::Infeasible(format!(
            "{k} planted lines hold only {} grid points, {n} requested",
            pool.len()
        )));
    }
    let points = sample(&mut rng, pool.len(), n)
        .into_iter()
        .map(|i| Point::from_ints(pool[i].0, pool[i].1))
        .collect();
    PlcInstance::new(points, k)
}
