//! Seeded instance generators.
//!
//! All generators draw from a caller-provided RNG; the CLI seeds a
//! `ChaCha8Rng` from a 64-bit seed so output is reproducible.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::CpInstance;
use crate::star::NnInstance;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelParams {
    /// Labels are drawn from `universe` tokens.
    pub universe: usize,
    pub min_labels: usize,
    pub max_labels: usize,
}

impl LabelParams {
    pub fn new(universe: usize, min_labels: usize, max_labels: usize) -> Result<Self> {
        if min_labels > max_labels || max_labels > universe {
            return Err(Error::Param(format!(
                "need min-labels <= max-labels <= universe (got {min_labels}, {max_labels}, {universe})"
            )));
        }
        Ok(LabelParams {
            universe,
            min_labels,
            max_labels,
        })
    }

    pub fn token(&self, i: usize) -> String {
        let width = self.universe.saturating_sub(1).to_string().len();
        format!("l{i:0width$}")
    }

    /// Size uniform in `[min, max]`, then a uniform subset of that size.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<String> {
        let k = rng.gen_range(self.min_labels..=self.max_labels);
        let mut ids = sample(rng, self.universe, k).into_vec();
        ids.sort_unstable();
        ids.into_iter().map(|i| self.token(i)).collect()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Param("n must be >= 1".into()))
    } else {
        Ok(())
    }
}

/// Vertex `v ≥ 1` attaches to a uniformly random earlier vertex that has
/// fewer than two children. Rooted at 0 the result is binary.
pub fn random_binary_tree<R: Rng + ?Sized>(rng: &mut R, n: usize, labels: LabelParams) -> Result<CpInstance> {
    check_n(n)?;
    let mut open: Vec<usize> = vec![0];
    let mut children = vec![0u8; n];
    let mut edges = Vec::with_capacity(n - 1);
    for v in 1..n {
        let i = rng.gen_range(0..open.len());
        let p = open[i];
        edges.push((p, v));
        children[p] += 1;
        if children[p] == 2 {
            open.swap_remove(i);
        }
        open.push(v);
    }
    let sets = (0..n).map(|_| labels.sample(rng)).collect();
    CpInstance::new(n, edges, sets)
}

/// Vertex `v ≥ 1` attaches to a uniformly random earlier vertex.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize, labels: LabelParams) -> Result<CpInstance> {
    check_n(n)?;
    let edges = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let sets = (0..n).map(|_| labels.sample(rng)).collect();
    CpInstance::new(n, edges, sets)
}

/// Star with center 0 and `n - 1` leaves; every vertex samples from the
/// same label parameters.
pub fn random_star<R: Rng + ?Sized>(rng: &mut R, n: usize, labels: LabelParams) -> Result<CpInstance> {
    check_n(n)?;
    let edges = (1..n).map(|v| (0, v)).collect();
    let sets = (0..n).map(|_| labels.sample(rng)).collect();
    CpInstance::new(n, edges, sets)
}

/// Each of the `n_u · n_v` edges is present independently with probability `p`.
pub fn random_bipartite<R: Rng + ?Sized>(rng: &mut R, n_u: usize, n_v: usize, p: f64) -> Result<NnInstance> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Param(format!("edge probability must be in [0, 1] (got {p})")));
    }
    let mut edges = Vec::new();
    for u in 0..n_u {
        for v in 0..n_v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    NnInstance::new(n_u, n_v, &edges)
}

/// Complete binary tree of height `h` in heap order (children of `v` are
/// `2v + 1` and `2v + 2`), every label set empty.
pub fn complete_binary_tree(h: u32) -> CpInstance {
    let n = (1usize << (h + 1)) - 1;
    let edges = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    CpInstance::new(n, edges, vec![Vec::new(); n]).expect("heap-ordered tree")
}
