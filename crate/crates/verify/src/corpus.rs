//! Graph corpora: exhaustive labeled enumeration, seeded sampling, graph6
//! files, generator output, trees and random unicyclic graphs.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use inertia_core::generator::{generate_extremal, GeneratorParams, Residue};
use inertia_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::format::{parse_graph6, FormatError};

/// Largest order for exhaustive labeled enumeration (2^15 graphs at 6).
pub const EXHAUSTIVE_MAX_ORDER: usize = 6;
/// Largest order accepted by [`sample_random`].
pub const RANDOM_MAX_ORDER: usize = 12;
/// Largest order for the tree corpus (719 rooted trees at 10).
pub const TREES_MAX_ORDER: usize = 12;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(
        "exhaustive enumeration is capped at {EXHAUSTIVE_MAX_ORDER} vertices (got {0}); \
         use a random:... sample or a graph6:... file for larger graphs"
    )]
    ExhaustiveTooLarge(usize),
    #[error("random sampling is capped at {RANDOM_MAX_ORDER} vertices (got {0})")]
    RandomTooLarge(usize),
    #[error("edge probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("tree corpus is capped at {TREES_MAX_ORDER} vertices (got {0})")]
    TreesTooLarge(usize),
    #[error("unicyclic graphs need 3 <= min <= max vertices (got {0}-{1})")]
    UnicyclicRange(usize, usize),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Graph6 {
        path: PathBuf,
        line: usize,
        #[source]
        source: FormatError,
    },
    #[error("bad corpus spec {spec:?}: {reason}")]
    Spec { spec: String, reason: String },
}

/// Where a corpus comes from. The `Display` form parses back via `FromStr`.
#[derive(Clone, Debug, PartialEq)]
pub enum CorpusSource {
    /// Every labeled graph for each order in `min..=max`.
    Exhaustive {
        min: usize,
        max: usize,
    },
    Random {
        order: usize,
        edge_probability: f64,
        count: usize,
        seed: u64,
    },
    Graph6File(PathBuf),
    /// `count` generator runs with seeds `params.rng_seed + i`.
    Generated {
        params: GeneratorParams,
        count: usize,
    },
    /// Every rooted tree (as a level sequence) for each order in `min..=max`.
    Trees {
        min: usize,
        max: usize,
    },
    Unicyclic {
        min: usize,
        max: usize,
        count: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
    /// Set for generator output: the residue class whose bounds it must attain.
    pub residue: Option<Residue>,
}

impl CorpusEntry {
    fn plain(id: String, graph: Graph) -> Self {
        CorpusEntry {
            id,
            graph,
            residue: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.entries.iter().map(|e| &e.graph)
    }

    pub fn extend(&mut self, other: Corpus) {
        self.entries.extend(other.entries);
    }

    /// Wraps explicit graphs with ids `{prefix}-{index}`.
    pub fn from_graphs(prefix: &str, graphs: impl IntoIterator<Item = Graph>) -> Self {
        let entries = graphs
            .into_iter()
            .enumerate()
            .map(|(i, g)| CorpusEntry::plain(format!("{prefix}-{i}"), g))
            .collect();
        Corpus { entries }
    }
}

impl CorpusSource {
    pub fn load(&self) -> Result<Corpus, CorpusError> {
        match self {
            CorpusSource::Exhaustive { min, max } => {
                let mut c = Corpus::default();
                for n in *min..=*max {
                    c.extend(enumerate_labeled(n)?);
                }
                Ok(c)
            }
            &CorpusSource::Random {
                order,
                edge_probability,
                count,
                seed,
            } => sample_random(order, edge_probability, count, seed),
            CorpusSource::Graph6File(path) => read_graph6_file(path.clone()),
            CorpusSource::Generated { params, count } => Ok(generated(params, *count)),
            CorpusSource::Trees { min, max } => {
                let mut c = Corpus::default();
                for n in *min..=*max {
                    c.extend(rooted_trees(n)?);
                }
                Ok(c)
            }
            &CorpusSource::Unicyclic {
                min,
                max,
                count,
                seed,
            } => random_unicyclic(min, max, count, seed),
        }
    }
}

/// Loads several sources in order. With more than one source each id gets a
/// `k/` prefix, `k` being the source's position, so ids stay unique.
pub fn load_all(sources: &[CorpusSource]) -> Result<Corpus, CorpusError> {
    let mut corpus = Corpus::default();
    for (k, s) in sources.iter().enumerate() {
        let mut c = s.load()?;
        if sources.len() > 1 {
            for e in &mut c.entries {
                e.id = format!("{k}/{}", e.id);
            }
        }
        corpus.extend(c);
    }
    Ok(corpus)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// All labeled graphs on `n` vertices. Graph `k` contains the `b`-th pair of
/// the lexicographic pair list `(0,1), (0,2), ..., (n-2,n-1)` iff bit `b` of
/// `k` is set.
pub fn enumerate_labeled(n: usize) -> Result<Corpus, CorpusError> {
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(CorpusError::ExhaustiveTooLarge(n));
    }
    let pairs = pairs(n);
    let entries = (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).expect("pairs are simple edges");
            CorpusEntry::plain(format!("exhaustive{n}-{mask}"), g)
        })
        .collect();
    Ok(Corpus { entries })
}

/// `count` independent G(n, p) samples from a ChaCha8 stream seeded by `seed`.
pub fn sample_random(n: usize, p: f64, count: usize, seed: u64) -> Result<Corpus, CorpusError> {
    if n > RANDOM_MAX_ORDER {
        return Err(CorpusError::RandomTooLarge(n));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(CorpusError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = pairs(n);
    let entries = (0..count)
        .map(|i| {
            let edges: Vec<_> = pairs
                .iter()
                .copied()
                .filter(|_| rng.random_bool(p))
                .collect();
            let g = Graph::from_edges(n, edges).expect("pairs are simple edges");
            CorpusEntry::plain(format!("random{n}-{seed}-{i}"), g)
        })
        .collect();
    Ok(Corpus { entries })
}

/// One graph per non-empty line; lines starting with `>` are comments unless
/// they carry the `>>graph6<<` marker.
pub fn read_graph6_file(path: PathBuf) -> Result<Corpus, CorpusError> {
    let text = fs::read_to_string(&path).map_err(|source| CorpusError::Io {
        path: path.clone(),
        source,
    })?;
    parse_graph6_lines(&text).map_err(|(line, source)| CorpusError::Graph6 { path, line, source })
}

/// Parses graph6 text; errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Corpus, (usize, FormatError)> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || (line.starts_with('>') && !line.starts_with(">>graph6<<")) {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| (i + 1, e))?;
        entries.push(CorpusEntry::plain(format!("line{}", i + 1), g));
    }
    Ok(Corpus { entries })
}

pub fn generated(params: &GeneratorParams, count: usize) -> Corpus {
    let entries = (0..count as u64)
        .map(|i| {
            let mut p = params.clone();
            p.rng_seed = params.rng_seed.wrapping_add(i);
            CorpusEntry {
                id: format!("generated{}-{}", params.residue.value(), p.rng_seed),
                graph: generate_extremal(&p),
                residue: Some(params.residue),
            }
        })
        .collect();
    Corpus { entries }
}

/// Every rooted tree on `n` vertices, one per canonical level sequence, in
/// the order of the constant-time successor rule on level sequences. Distinct
/// rooted trees may be isomorphic as free trees.
pub fn rooted_trees(n: usize) -> Result<Corpus, CorpusError> {
    if n > TREES_MAX_ORDER {
        return Err(CorpusError::TreesTooLarge(n));
    }
    let mut entries = Vec::new();
    if n == 0 {
        return Ok(Corpus { entries });
    }
    let mut levels: Vec<usize> = (0..n).collect();
    loop {
        let mut parent_at = vec![0usize; n];
        let mut edges = Vec::with_capacity(n - 1);
        for (v, &l) in levels.iter().enumerate() {
            if l > 0 {
                edges.push((parent_at[l - 1], v));
            }
            parent_at[l] = v;
        }
        let g = Graph::from_edges(n, edges).expect("level sequences give trees");
        entries.push(CorpusEntry::plain(format!("tree{n}-{}", entries.len()), g));

        let Some(p) = levels.iter().rposition(|&l| l > 1) else {
            break;
        };
        let q = levels[..p]
            .iter()
            .rposition(|&l| l == levels[p] - 1)
            .expect("level sequences step down by one");
        for i in p..n {
            levels[i] = levels[i - (p - q)];
        }
    }
    Ok(Corpus { entries })
}

fn prufer_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let seq: Vec<usize> = (0..n - 2)
        .map(|_| rng.random_range(0..n as u32) as usize)
        .collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Connected unicyclic graphs: a uniform labeled tree on `n` vertices
/// (`n` uniform in `min..=max`) plus one uniform non-edge.
pub fn random_unicyclic(
    min: usize,
    max: usize,
    count: usize,
    seed: u64,
) -> Result<Corpus, CorpusError> {
    if min < 3 || min > max || max > inertia_core::graph::MAX_VERTICES {
        return Err(CorpusError::UnicyclicRange(min, max));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..count)
        .map(|i| {
            let n = rng.random_range(min as u32..=max as u32) as usize;
            let tree =
                Graph::from_edges(n, prufer_tree(n, &mut rng)).expect("Prüfer trees are simple");
            let non_edges: Vec<(usize, usize)> = pairs(n)
                .into_iter()
                .filter(|&(u, v)| !tree.has_edge(u, v))
                .collect();
            let extra = non_edges[rng.random_range(0..non_edges.len() as u32) as usize];
            let g = tree.extended(0, &[extra]).expect("non-edge is in range");
            CorpusEntry::plain(format!("unicyclic-{seed}-{i}"), g)
        })
        .collect();
    Ok(Corpus { entries })
}

fn range(s: &str) -> Option<(usize, usize)> {
    match s.split_once('-') {
        Some((a, b)) => Some((a.parse().ok()?, b.parse().ok()?)),
        None => s.parse().ok().map(|n| (n, n)),
    }
}

impl FromStr for CorpusSource {
    type Err = CorpusError;

    /// Grammar (fields separated by `:`, `N` may be a range `A-B`):
    /// `exhaustive:N`, `random:ORDER:P:COUNT:SEED`, `graph6:PATH`,
    /// `generated:RESIDUE:CYCLES:STEPS:COUNT:SEED[:ISOLATED[:LENGTHS]]`,
    /// `trees:N`, `unicyclic:N:COUNT:SEED`.
    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| CorpusError::Spec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let (kind, rest) = spec
            .split_once(':')
            .ok_or_else(|| bad("expected KIND:ARGS"))?;
        if kind == "graph6" {
            return Ok(CorpusSource::Graph6File(PathBuf::from(rest)));
        }
        let f: Vec<&str> = rest.split(':').collect();
        let num = |i: usize| -> Result<u64, CorpusError> {
            f.get(i)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad(&format!("field {} must be a non-negative integer", i + 1)))
        };
        let size = |i: usize| num(i).map(|x| x as usize);
        let arity = |lo: usize, hi: usize| {
            if (lo..=hi).contains(&f.len()) {
                Ok(())
            } else if lo == hi {
                Err(bad(&format!("expected {lo} fields after {kind}:")))
            } else {
                Err(bad(&format!("expected {lo} to {hi} fields after {kind}:")))
            }
        };
        let orders = || range(f[0]).ok_or_else(|| bad("expected an order N or a range A-B"));
        match kind {
            "exhaustive" => {
                arity(1, 1)?;
                let (min, max) = orders()?;
                Ok(CorpusSource::Exhaustive { min, max })
            }
            "trees" => {
                arity(1, 1)?;
                let (min, max) = orders()?;
                Ok(CorpusSource::Trees { min, max })
            }
            "random" => {
                arity(4, 4)?;
                let edge_probability: f64 = f[1]
                    .parse()
                    .map_err(|_| bad("edge probability must be a number"))?;
                Ok(CorpusSource::Random {
                    order: size(0)?,
                    edge_probability,
                    count: size(2)?,
                    seed: num(3)?,
                })
            }
            "generated" => {
                arity(5, 7)?;
                let residue = u8::try_from(num(0)?)
                    .ok()
                    .and_then(|r| Residue::from_u8(r).ok())
                    .ok_or_else(|| bad("residue must be 0, 1 or 3"))?;
                let mut params = GeneratorParams::new(residue, size(1)?, size(2)?, num(4)?);
                if f.len() > 5 {
                    params.num_isolated_seeds = size(5)?;
                }
                if f.len() > 6 {
                    params.length_choices = size(6)?;
                }
                Ok(CorpusSource::Generated {
                    params,
                    count: size(3)?,
                })
            }
            "unicyclic" => {
                arity(3, 3)?;
                let (min, max) = orders()?;
                Ok(CorpusSource::Unicyclic {
                    min,
                    max,
                    count: size(1)?,
                    seed: num(2)?,
                })
            }
            _ => Err(bad(
                "unknown kind; expected exhaustive, random, graph6, generated, trees or unicyclic",
            )),
        }
    }
}

impl fmt::Display for CorpusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |a: usize, b: usize| {
            if a == b {
                a.to_string()
            } else {
                format!("{a}-{b}")
            }
        };
        match self {
            CorpusSource::Exhaustive { min, max } => write!(f, "exhaustive:{}", r(*min, *max)),
            CorpusSource::Random {
                order,
                edge_probability,
                count,
                seed,
            } => write!(f, "random:{order}:{edge_probability}:{count}:{seed}"),
            CorpusSource::Graph6File(p) => write!(f, "graph6:{}", p.display()),
            CorpusSource::Generated { params, count } => write!(
                f,
                "generated:{}:{}:{}:{count}:{}:{}:{}",
                params.residue.value(),
                params.num_cycles,
                params.num_steps,
                params.rng_seed,
                params.num_isolated_seeds,
                params.length_choices
            ),
            CorpusSource::Trees { min, max } => write!(f, "trees:{}", r(*min, *max)),
            CorpusSource::Unicyclic {
                min,
                max,
                count,
                seed,
            } => write!(f, "unicyclic:{}:{count}:{seed}", r(*min, *max)),
        }
    }
}
