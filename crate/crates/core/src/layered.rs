//! Layered approximation for binary trees.
//!
//! Root the tree and pick `L >= 2`. Class `c` deletes every edge whose child
//! endpoint has depth `≡ c (mod L)`, which leaves a forest of pieces spanning
//! at most `L` depth levels. Each edge is deleted in exactly one class and
//! kept in the other `L - 1`, so summing the class optima covers the optimum
//! `L - 1` times and the best class is worth at least `(1 - 1/L)·OPT`.

use crate::error::{Error, Result};
use crate::exact::{ExactLimits, ExactSolver};
use crate::instance::{evaluate_unchecked, Assignment, CpInstance, Rooted};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerClass {
    /// Edges removed in this class, `(u, v)` with `u < v`, sorted.
    pub deleted_edges: Vec<(usize, usize)>,
    /// Vertex-disjoint pieces, each sorted, ordered by smallest vertex.
    pub pieces: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub l: usize,
    pub root: usize,
    pub depth: Vec<usize>,
    pub classes: Vec<LayerClass>,
}

impl LayerDecomposition {
    /// Number of depth levels spanned by a piece.
    pub fn levels(&self, piece: &[usize]) -> usize {
        let lo = piece.iter().map(|&v| self.depth[v]).min().unwrap_or(0);
        let hi = piece.iter().map(|&v| self.depth[v]).max().unwrap_or(0);
        hi - lo + 1
    }
}

pub fn decompose(inst: &CpInstance, root: usize, l: usize) -> Result<LayerDecomposition> {
    if l < 2 {
        return Err(Error::BlockHeight(l));
    }
    let rooted = inst.rooted(root)?;
    rooted.ensure_binary()?;
    Ok(decompose_rooted(inst, &rooted, l))
}

fn decompose_rooted(inst: &CpInstance, rooted: &Rooted, l: usize) -> LayerDecomposition {
    let n = inst.n();
    let mut classes = Vec::with_capacity(l);
    for c in 0..l {
        let cut_here = |child: usize| rooted.depth[child] % l == c;
        let mut deleted_edges: Vec<(usize, usize)> = inst
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                let child = if rooted.parent[v] == Some(u) { v } else { u };
                cut_here(child)
            })
            .collect();
        deleted_edges.sort();

        // Every piece has a unique top vertex: the root, or a vertex whose
        // parent edge is deleted. BFS order puts parents first.
        let mut piece_of = vec![usize::MAX; n];
        let mut pieces: Vec<Vec<usize>> = Vec::new();
        for &v in &rooted.order {
            match rooted.parent[v] {
                Some(p) if !cut_here(v) => {
                    piece_of[v] = piece_of[p];
                    pieces[piece_of[v]].push(v);
                }
                _ => {
                    piece_of[v] = pieces.len();
                    pieces.push(vec![v]);
                }
            }
        }
        pieces.iter_mut().for_each(|p| p.sort());
        pieces.sort();
        classes.push(LayerClass { deleted_edges, pieces });
    }
    LayerDecomposition {
        l,
        root: rooted.root,
        depth: rooted.depth.clone(),
        classes,
    }
}

#[derive(Debug, Clone)]
pub struct ApproxResult {
    pub l: usize,
    pub best_class: usize,
    /// Sum of exact piece optima for every class.
    pub class_values: Vec<usize>,
    /// Optimum of the best class.
    pub layer_value: usize,
    /// Total benefit of the stitched assignment on the full tree.
    pub realized_value: usize,
    pub assignment: Assignment,
    pub decomposition: LayerDecomposition,
}

impl ApproxResult {
    /// `layer_value · L ≥ (L − 1) · exact`, in integers.
    pub fn guarantee_holds(&self, exact: usize) -> bool {
        self.layer_value * self.l >= (self.l - 1) * exact
    }
}

pub fn solve_approx(inst: &CpInstance, root: usize, l: usize) -> Result<ApproxResult> {
    solve_approx_with(inst, root, l, ExactLimits::default())
}

pub fn solve_approx_with(inst: &CpInstance, root: usize, l: usize, limits: ExactLimits) -> Result<ApproxResult> {
    let decomposition = decompose(inst, root, l)?;
    let mut solver = ExactSolver::with_limits(inst, limits);
    let mut class_values = Vec::with_capacity(l);
    for class in &decomposition.classes {
        let mut sum = 0;
        for piece in &class.pieces {
            sum += solver.solve_component(piece)?;
        }
        class_values.push(sum);
    }
    let (best_class, &layer_value) = class_values
        .iter()
        .enumerate()
        .rev()
        .max_by_key(|&(_, v)| *v)
        .expect("at least two classes");

    let mut perms = vec![Vec::new(); inst.n()];
    for piece in &decomposition.classes[best_class].pieces {
        let trace = solver.trace(piece)?;
        crate::exact::reconstruct_into(inst, &trace, &mut perms);
    }
    let assignment = Assignment { perms };
    let realized_value = evaluate_unchecked(inst, &assignment).total;
    Ok(ApproxResult {
        l,
        best_class,
        class_values,
        layer_value,
        realized_value,
        assignment,
        decomposition,
    })
}

/// `max(2, ⌈1/ε⌉)` when `epsilon` is given, else `max(2, ⌊log₂ log₂ n⌋)`.
pub fn choose_block_height(n: usize, epsilon: Option<f64>) -> Result<usize> {
    if n < 2 {
        return Err(Error::Param(format!("n must be >= 2 (got {n})")));
    }
    match epsilon {
        Some(e) if !(e > 0.0 && e < 1.0) => Err(Error::Epsilon(e)),
        Some(e) => Ok(((1.0 / e).ceil() as usize).max(2)),
        // ⌊log₂ x⌋ for real x ≥ 1 equals ⌊log₂ ⌊x⌋⌋
        None => Ok((n.ilog2().ilog2() as usize).max(2)),
    }
}
