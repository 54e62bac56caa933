//! Two-party protocol deciding Point Line Cover by binary search over a
//! sorted catalog of order types.
//!
//! Alice holds the instance and is polynomially bounded; Bob is the
//! catalog-building oracle. Only bits Alice sends are charged.
//!
//! 1. Alice sends `n`, length-prefixed.
//! 2. Alice computes the canonical order type of her points.
//! 3. Bob builds the catalog of `n`-point order types on the shared grid.
//! 4. Bob sends the median order type of his interval, Alice answers with
//!    two bits (smaller / equal / larger). Repeat until "equal".
//! 5. Bob sends the minimum cover size of the located entry; Alice compares
//!    it with `k`.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::{Orientation, Point};
use crate::order_type::{
    canonical_otr, enumerate_grid_order_types, OrderTypeCatalog, Otr, CANONICAL_CAP,
};
use crate::plc::PlcInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProtocolConfig {
    /// Side length of the grid both parties draw points from.
    pub grid: u32,
    /// Largest `n` Alice will canonicalize.
    pub max_points: usize,
}

impl ProtocolConfig {
    pub fn new(grid: u32) -> Result<Self> {
        if grid < 2 {
            return Err(Error::Infeasible(format!("grid side {grid} is below 2")));
        }
        Ok(ProtocolConfig {
            grid,
            max_points: CANONICAL_CAP,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    AliceToBob,
    BobToAlice,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::AliceToBob => "A->B",
            Direction::BobToAlice => "B->A",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Message {
    pub direction: Direction,
    pub bits: Vec<bool>,
    /// Human-readable meaning of the payload.
    pub note: String,
}

/// Alice's reply to a median probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Smaller,
    Equal,
    Larger,
}

impl Comparison {
    fn bits(self) -> [bool; 2] {
        match self {
            Comparison::Smaller => [false, false],
            Comparison::Equal => [false, true],
            Comparison::Larger => [true, false],
        }
    }

    fn from_bits(bits: &[bool]) -> Option<Self> {
        match bits {
            [false, false] => Some(Comparison::Smaller),
            [false, true] => Some(Comparison::Equal),
            [true, false] => Some(Comparison::Larger),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtocolTranscript {
    pub grid: u32,
    pub n: usize,
    pub k: usize,
    pub catalog_size: usize,
    pub messages: Vec<Message>,
    /// Sum of Alice→Bob payload lengths.
    pub alice_cost_bits: usize,
    /// Number of median probes.
    pub rounds: usize,
    pub alice_otr: Otr,
    pub located_otr: Option<Otr>,
    pub min_cover: usize,
    pub answer: bool,
}

impl ProtocolTranscript {
    pub fn bob_bits(&self) -> usize {
        self.messages
            .iter()
            .filter(|m| m.direction == Direction::BobToAlice)
            .map(|m| m.bits.len())
            .sum()
    }

    /// Deterministic text log: one line per message, then a footer.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# order-type search protocol; catalog restricted to the shared {0}x{0} grid",
            self.grid
        );
        let _ = writeln!(
            out,
            "# n {} k {} catalog {}",
            self.n, self.k, self.catalog_size
        );
        for m in &self.messages {
            let _ = writeln!(
                out,
                "{} {} {} # {}",
                m.direction,
                m.bits.len(),
                render_bits(&m.bits),
                m.note
            );
        }
        let _ = writeln!(out, "alice_cost_bits {}", self.alice_cost_bits);
        let _ = writeln!(out, "rounds {}", self.rounds);
        let _ = writeln!(out, "answer {}", if self.answer { "yes" } else { "no" });
        out
    }
}

fn render_bits(bits: &[bool]) -> String {
    if bits.is_empty() {
        return "-".into();
    }
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Self-delimiting binary: the bit length `ℓ` in unary (`ℓ` ones and a
/// zero), then the `ℓ` bits of the value, most significant first. Zero is
/// the single bit `0`.
pub fn encode_length_prefixed(value: u64) -> Vec<bool> {
    let len = (u64::BITS - value.leading_zeros()) as usize;
    let mut bits = vec![true; len];
    bits.push(false);
    bits.extend((0..len).rev().map(|i| value >> i & 1 == 1));
    bits
}

/// Inverse of [`encode_length_prefixed`]; returns the value and the number
/// of bits consumed.
pub fn decode_length_prefixed(bits: &[bool]) -> Option<(u64, usize)> {
    let len = bits.iter().position(|&b| !b)?;
    if len > 64 {
        return None;
    }
    let body = bits.get(len + 1..2 * len + 1)?;
    let value = body.iter().fold(0u64, |acc, &b| acc << 1 | b as u64);
    Some((value, 2 * len + 1))
}

pub fn encoded_len(value: u64) -> usize {
    2 * (u64::BITS - value.leading_zeros()) as usize + 1
}

fn encode_otr(otr: &Otr) -> Vec<bool> {
    otr.values()
        .iter()
        .flat_map(|o| match o {
            Orientation::Clockwise => [false, false],
            Orientation::Collinear => [false, true],
            Orientation::CounterClockwise => [true, false],
        })
        .collect()
}

fn decode_otr(n: usize, bits: &[bool]) -> Option<Otr> {
    let values = bits
        .chunks(2)
        .map(|pair| match pair {
            [false, false] => Some(Orientation::Clockwise),
            [false, true] => Some(Orientation::Collinear),
            [true, false] => Some(Orientation::CounterClockwise),
            _ => None,
        })
        .collect::<Option<Vec<_>>>()?;
    Otr::new(n, values).ok()
}

fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

/// Upper bound on Alice's bits: the encoding of `n` plus two bits for each
/// of at most `⌈log₂ size⌉ + 1` probes.
pub fn cost_bound(n: usize, catalog_size: usize) -> usize {
    encoded_len(n as u64) + 2 * (ceil_log2(catalog_size.max(1)) + 1)
}

/// Most probes binary search can take over `catalog_size` entries.
pub fn max_rounds(catalog_size: usize) -> usize {
    ceil_log2(catalog_size.max(1)) + 1
}

fn check_on_grid(points: &[Point], grid: u32) -> Result<()> {
    let side = BigInt::from(grid);
    let zero = BigInt::from(0);
    for p in points {
        let ok = [&p.x, &p.y]
            .iter()
            .all(|c| c.is_integer() && c.numer() >= &zero && c.numer() < &side);
        if !ok {
            return Err(Error::OffGrid(Box::new(p.clone())));
        }
    }
    Ok(())
}

/// Runs the protocol; Bob builds his catalog from scratch.
pub fn run_protocol(inst: &PlcInstance, cfg: &ProtocolConfig) -> Result<ProtocolTranscript> {
    check_inputs(inst, cfg)?;
    let catalog = if inst.is_empty() {
        None
    } else {
        Some(enumerate_grid_order_types(inst.len(), cfg.grid)?)
    };
    run(inst, cfg, catalog.as_ref())
}

/// Runs the protocol against a catalog Bob prepared earlier. The catalog
/// must be for `inst.len()` points on the configured grid.
pub fn run_protocol_with_catalog(
    inst: &PlcInstance,
    cfg: &ProtocolConfig,
    catalog: &OrderTypeCatalog,
) -> Result<ProtocolTranscript> {
    check_inputs(inst, cfg)?;
    if catalog.n != inst.len() || catalog.grid != cfg.grid {
        return Err(Error::Infeasible(format!(
            "catalog is for {} points on a {} grid, instance has {} points on a {} grid",
            catalog.n,
            catalog.grid,
            inst.len(),
            cfg.grid
        )));
    }
    run(inst, cfg, (!inst.is_empty()).then_some(catalog))
}

fn check_inputs(inst: &PlcInstance, cfg: &ProtocolConfig) -> Result<()> {
    if cfg.grid < 2 {
        return Err(Error::Infeasible(format!(
            "grid side {} is below 2",
            cfg.grid
        )));
    }
    if inst.len() > cfg.max_points {
        return Err(Error::cap(
            "protocol point count",
            cfg.max_points,
            inst.len(),
        ));
    }
    check_on_grid(inst.points(), cfg.grid)
}

fn run(
    inst: &PlcInstance,
    cfg: &ProtocolConfig,
    catalog: Option<&OrderTypeCatalog>,
) -> Result<ProtocolTranscript> {
    let n = inst.len();
    let mut messages = Vec::new();

    // Step 1: Alice announces n.
    let n_bits = encode_length_prefixed(n as u64);
    let (bob_n, _) = decode_length_prefixed(&n_bits).expect("well-formed encoding");
    messages.push(Message {
        direction: Direction::AliceToBob,
        bits: n_bits,
        note: format!("n = {bob_n}"),
    });

    // Step 2: Alice's search key.
    let alice_otr = canonical_otr(inst.points())?;

    let mut rounds = 0;
    let mut located = None;
    let catalog_size = catalog.map_or(0, |c| c.len());
    let min_cover = match catalog {
        None => 0,
        Some(catalog) => {
            // Step 4: binary search, Bob probing, Alice comparing.
            let entries = catalog.entries();
            let (mut lo, mut hi) = (0usize, entries.len());
            let idx = loop {
                if lo >= hi {
                    return Err(Error::CatalogMiss(alice_otr.to_string()));
                }
                let mid = lo + (hi - lo) / 2;
                let probe = encode_otr(&entries[mid].otr);
                messages.push(Message {
                    direction: Direction::BobToAlice,
                    note: format!("median [{lo}, {hi}) -> {}", entries[mid].otr),
                    bits: probe,
                });
                let received = decode_otr(n, &messages.last().expect("just pushed").bits)
                    .expect("Bob sends well-formed order types");
                let reply = match alice_otr.cmp(&received) {
                    std::cmp::Ordering::Less => Comparison::Smaller,
                    std::cmp::Ordering::Equal => Comparison::Equal,
                    std::cmp::Ordering::Greater => Comparison::Larger,
                };
                messages.push(Message {
                    direction: Direction::AliceToBob,
                    bits: reply.bits().to_vec(),
                    note: format!("{reply:?}").to_lowercase(),
                });
                rounds += 1;
                match Comparison::from_bits(&reply.bits()).expect("valid reply") {
                    Comparison::Equal => break mid,
                    Comparison::Smaller => hi = mid,
                    Comparison::Larger => lo = mid + 1,
                }
            };
            located = Some(entries[idx].otr.clone());
            entries[idx].min_cover
        }
    };

    // Step 5: Bob reports the cover size; Alice decides locally.
    let cover_bits = encode_length_prefixed(min_cover as u64);
    let (alice_cover, _) = decode_length_prefixed(&cover_bits).expect("well-formed encoding");
    messages.push(Message {
        direction: Direction::BobToAlice,
        bits: cover_bits,
        note: format!("min cover = {alice_cover}"),
    });

    let alice_cost_bits = messages
        .iter()
        .filter(|m| m.direction == Direction::AliceToBob)
        .map(|m| m.bits.len())
        .sum();

    Ok(ProtocolTranscript {
        grid: cfg.grid,
        n,
        k: inst.k,
        catalog_size,
        messages,
        alice_cost_bits,
        rounds,
        alice_otr,
        located_otr: located,
        min_cover,
        answer: alice_cover as usize <= inst.k,
    })
}
