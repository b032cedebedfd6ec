//! Deterministic workload generation.
//!
//! Streams are reproducible across runs, platforms and implementations: all
//! randomness comes from splitmix64 (the generator from Steele, Lea and
//! Flood's SplittableRandom), with range reduction by plain modulo and reals
//! drawn as the top 53 bits times 2^-53. The exact algorithm is spelled out
//! in `SplitMix64` so another implementation can replay a seed bit for bit.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

/// splitmix64: state advances by the golden-ratio increment, output mixes
/// the state with two multiply-xorshift rounds.
///
/// ```text
/// state += 0x9E3779B97F4A7C15
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// output = z ^ (z >> 31)
/// ```
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in 0..bound by modulo reduction (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform real in [0, 1) from the top 53 bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Geometric batch size: start at 1, keep growing while a 3/4 coin hits
    /// (mean 4), capped.
    pub fn geometric_size(&mut self, cap: usize) -> usize {
        let mut size = 1;
        while size < cap && self.below(4) != 0 {
            size += 1;
        }
        size.max(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WorkloadModel {
    /// Uniform random centers and uniform random partners.
    ErdosRenyiTouching,
    /// Centers connect to consecutive neighbors in vertex order, which makes
    /// long directed chains emerge.
    PathHeavy,
}

impl WorkloadModel {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "erdos-renyi-touching" => Some(WorkloadModel::ErdosRenyiTouching),
            "path-heavy" => Some(WorkloadModel::PathHeavy),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            WorkloadModel::ErdosRenyiTouching => "erdos-renyi-touching",
            WorkloadModel::PathHeavy => "path-heavy",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MixWeights {
    pub insert: f64,
    pub delete: f64,
    pub query: f64,
}

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub n: u32,
    pub ops: u64,
    pub mix: MixWeights,
    pub seed: u64,
    pub model: WorkloadModel,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("mix probabilities must be non-negative and sum to 1, got {insert}, {delete}, {query}")]
    InvalidMix { insert: f64, delete: f64, query: f64 },
    #[error("n and ops must both be at least 1")]
    InvalidSize,
}

/// Alive-edge mirror so generated inserts never duplicate a live pair and
/// deletes sample real edges.
struct AliveEdges {
    list: Vec<(u32, u32)>,
    index: HashMap<(u32, u32), usize>,
}

impl AliveEdges {
    fn new() -> Self {
        AliveEdges { list: Vec::new(), index: HashMap::new() }
    }

    fn len(&self) -> usize {
        self.list.len()
    }

    fn contains(&self, pair: (u32, u32)) -> bool {
        self.index.contains_key(&pair)
    }

    fn insert(&mut self, pair: (u32, u32)) {
        self.index.insert(pair, self.list.len());
        self.list.push(pair);
    }

    fn remove_at(&mut self, pos: usize) -> (u32, u32) {
        let pair = self.list.swap_remove(pos);
        self.index.remove(&pair);
        if pos < self.list.len() {
            self.index.insert(self.list[pos], pos);
        }
        pair
    }
}

fn wrap(n: u32, base: u32, offset: u32) -> u32 {
    (base - 1 + offset) % n + 1
}

/// Generate a stream of `ops` commands for an n-vertex graph. Deterministic
/// for a given config; the output always parses and satisfies every insert
/// precondition. Update ops degrade to queries when no legal batch exists
/// (saturated center, nothing alive to delete) so the command count is
/// exact.
pub fn generate_workload(cfg: &GenConfig) -> Result<String, GenError> {
    if cfg.n == 0 || cfg.ops == 0 {
        return Err(GenError::InvalidSize);
    }
    let MixWeights { insert, delete, query } = cfg.mix;
    let sum = insert + delete + query;
    if insert < 0.0 || delete < 0.0 || query < 0.0 || (sum - 1.0).abs() > 1e-9 {
        return Err(GenError::InvalidMix { insert, delete, query });
    }

    let n = cfg.n;
    let mut rng = SplitMix64::new(cfg.seed);
    let mut alive = AliveEdges::new();
    let mut out = String::new();
    writeln!(
        out,
        "# workload n={} ops={} mix={},{},{} seed={} model={}",
        n, cfg.ops, insert, delete, query, cfg.seed,
        cfg.model.name()
    )
    .unwrap();
    writeln!(out, "init {n}").unwrap();

    for _ in 0..cfg.ops {
        let draw = rng.unit();
        if draw < insert {
            if emit_insert(&mut out, &mut rng, &mut alive, n, cfg.model) {
                continue;
            }
        } else if draw < insert + delete && emit_delete(&mut out, &mut rng, &mut alive) {
            continue;
        }
        let a = rng.below(n as u64) as u32 + 1;
        let b = rng.below(n as u64) as u32 + 1;
        writeln!(out, "query {a} {b}").unwrap();
    }
    Ok(out)
}

fn emit_insert(
    out: &mut String,
    rng: &mut SplitMix64,
    alive: &mut AliveEdges,
    n: u32,
    model: WorkloadModel,
) -> bool {
    let center = rng.below(n as u64) as u32 + 1;
    let target = rng.geometric_size((n as usize - 1).max(1));
    let mut batch: Vec<(u32, u32)> = Vec::new();

    match model {
        WorkloadModel::ErdosRenyiTouching => {
            let mut attempts = 0;
            while batch.len() < target && attempts < 4 * target + 16 {
                attempts += 1;
                let other = rng.below(n as u64) as u32 + 1;
                let pair = if rng.below(2) == 0 { (center, other) } else { (other, center) };
                if alive.contains(pair) || batch.contains(&pair) {
                    continue;
                }
                batch.push(pair);
            }
        }
        WorkloadModel::PathHeavy => {
            for i in 1..=target as u32 {
                let pair = if i % 2 == 1 {
                    (center, wrap(n, center, i.div_ceil(2)))
                } else {
                    (wrap(n, center, n - i / 2), center)
                };
                if !alive.contains(pair) && !batch.contains(&pair) {
                    batch.push(pair);
                }
            }
        }
    }

    if batch.is_empty() {
        return false;
    }
    let mut line = format!("insert {center}");
    for &(a, b) in &batch {
        write!(line, " {a} {b}").unwrap();
        alive.insert((a, b));
    }
    out.push_str(&line);
    out.push('\n');
    true
}

fn emit_delete(out: &mut String, rng: &mut SplitMix64, alive: &mut AliveEdges) -> bool {
    if alive.len() == 0 {
        return false;
    }
    let size = rng.geometric_size(4).min(alive.len());
    let mut line = String::from("delete");
    for _ in 0..size {
        let pos = rng.below(alive.len() as u64) as usize;
        let (a, b) = alive.remove_at(pos);
        write!(line, " {a} {b}").unwrap();
        if alive.len() == 0 {
            break;
        }
    }
    out.push_str(&line);
    out.push('\n');
    true
}
