//! Exact Common Prefix optimum on arbitrary trees.
//!
//! For a connected vertex set `C` the optimum is
//! `|∩_{v∈C} S_v| + max_e (opt(C₁) + opt(C₂))` where `C₁`, `C₂` are the two
//! sides of `C` with edge `e` removed; a single vertex scores 0. Components
//! are memoized, so the cost is proportional to the number of connected
//! subtrees reached, which is polynomial on paths and on shallow binary
//! trees but exponential in general.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::instance::{evaluate_unchecked, Assignment, CpInstance, Label};

/// Memo key for a connected vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ComponentKey {
    /// Used when the whole instance has at most 64 vertices.
    Mask(u64),
    /// Sorted vertex ids.
    Ids(Box<[u32]>),
}

impl ComponentKey {
    fn of(n: usize, vertices: &[usize]) -> Self {
        if n <= 64 {
            ComponentKey::Mask(vertices.iter().fold(0u64, |m, &v| m | 1 << v))
        } else {
            ComponentKey::Ids(vertices.iter().map(|&v| v as u32).collect())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactLimits {
    /// Maximum number of memoized components before the solver gives up.
    pub max_components: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits {
            max_components: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct MemoEntry {
    value: usize,
    cut: Option<(usize, usize)>,
}

/// Recursion tree of the optimum: each node is a component, its common label
/// count, and the edge chosen to split it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceNode {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// Labels shared by every vertex of the component, sorted.
    pub common: Vec<Label>,
    pub value: usize,
    /// `None` exactly for single-vertex components.
    pub cut: Option<(usize, usize)>,
    /// Both sides of `cut`, the side containing `cut.0` first.
    pub children: Vec<TraceNode>,
}

impl TraceNode {
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(TraceNode::node_count).sum::<usize>()
    }
}

#[derive(Debug, Clone)]
pub struct ExactResult {
    pub value: usize,
    pub assignment: Assignment,
    pub trace: TraceNode,
    /// Number of distinct components memoized while solving.
    pub components: usize,
}

/// Memoizing solver bound to one instance. The memo is kept across calls, so
/// solving overlapping components of the same tree shares work.
pub struct ExactSolver<'a> {
    inst: &'a CpInstance,
    limits: ExactLimits,
    memo: HashMap<ComponentKey, MemoEntry>,
}

impl<'a> ExactSolver<'a> {
    pub fn new(inst: &'a CpInstance) -> Self {
        Self::with_limits(inst, ExactLimits::default())
    }

    pub fn with_limits(inst: &'a CpInstance, limits: ExactLimits) -> Self {
        ExactSolver {
            inst,
            limits,
            memo: HashMap::new(),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn memo_keys(&self) -> impl Iterator<Item = &ComponentKey> {
        self.memo.keys()
    }

    /// Optimum of the subtree induced by `vertices` (sorted, connected).
    pub fn solve_component(&mut self, vertices: &[usize]) -> Result<usize> {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Ok(self.solve_rec(vertices)?.value)
    }

    fn solve_rec(&mut self, comp: &[usize]) -> Result<MemoEntry> {
        let key = ComponentKey::of(self.inst.n(), comp);
        if let Some(e) = self.memo.get(&key) {
            return Ok(*e);
        }
        if self.memo.len() >= self.limits.max_components {
            return Err(Error::SizeGuard {
                guard: "exact-components",
                measured: format!("more than {} memoized components", self.memo.len()),
                limit: self.limits.max_components.to_string(),
            });
        }
        let entry = if comp.len() == 1 {
            MemoEntry { value: 0, cut: None }
        } else {
            let common = common_label_count(self.inst, comp);
            let mut best: Option<(usize, (usize, usize))> = None;
            for e in component_edges(self.inst, comp) {
                let (a, b) = split(self.inst, comp, e);
                let v = self.solve_rec(&a)?.value + self.solve_rec(&b)?.value;
                if best.map_or(true, |(bv, _)| v > bv) {
                    best = Some((v, e));
                }
            }
            let (v, e) = best.expect("connected component with >= 2 vertices has an edge");
            MemoEntry {
                value: common + v,
                cut: Some(e),
            }
        };
        self.memo.insert(key, entry);
        Ok(entry)
    }

    /// Solves `vertices` and returns the recursion tree of the optimum.
    pub fn trace(&mut self, vertices: &[usize]) -> Result<TraceNode> {
        let entry = self.solve_rec(vertices)?;
        let children = match entry.cut {
            Some(e) => {
                let (a, b) = split(self.inst, vertices, e);
                vec![self.trace(&a)?, self.trace(&b)?]
            }
            None => Vec::new(),
        };
        Ok(TraceNode {
            vertices: vertices.to_vec(),
            common: common_labels(self.inst, vertices),
            value: entry.value,
            cut: entry.cut,
            children,
        })
    }
}

fn intersection(inst: &CpInstance, comp: &[usize]) -> FixedBitSet {
    let mut acc = inst.label_set(comp[0]).clone();
    for &v in &comp[1..] {
        acc.intersect_with(inst.label_set(v));
    }
    acc
}

/// `|∩_{v∈C} S_v|` for a nonempty component.
pub fn common_label_count(inst: &CpInstance, comp: &[usize]) -> usize {
    intersection(inst, comp).count_ones(..)
}

pub fn common_labels(inst: &CpInstance, comp: &[usize]) -> Vec<Label> {
    intersection(inst, comp).ones().map(|i| Label(i as u32)).collect()
}

/// Tree edges with both endpoints in `comp`, as `(u, v)` with `u < v`, in
/// lexicographic order.
pub fn component_edges(inst: &CpInstance, comp: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(comp.len().saturating_sub(1));
    for &u in comp {
        for &w in inst.neighbors(u) {
            if w > u && comp.binary_search(&w).is_ok() {
                out.push((u, w));
            }
        }
    }
    out
}

/// The two sides of `comp` after deleting `edge`; the side holding `edge.0`
/// comes first. Both sides are sorted.
pub fn split(inst: &CpInstance, comp: &[usize], edge: (usize, usize)) -> (Vec<usize>, Vec<usize>) {
    let mut in_a = vec![false; comp.len()];
    let pos = |v: usize| comp.binary_search(&v).ok();
    let start = pos(edge.0).expect("edge endpoint inside component");
    in_a[start] = true;
    let mut stack = vec![edge.0];
    while let Some(x) = stack.pop() {
        for &w in inst.neighbors(x) {
            if (x, w) == edge || (w, x) == edge {
                continue;
            }
            if let Some(i) = pos(w) {
                if !in_a[i] {
                    in_a[i] = true;
                    stack.push(w);
                }
            }
        }
    }
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (i, &v) in comp.iter().enumerate() {
        if in_a[i] {
            a.push(v)
        } else {
            b.push(v)
        }
    }
    (a, b)
}

pub fn solve_exact(inst: &CpInstance) -> Result<ExactResult> {
    solve_exact_with(inst, ExactLimits::default())
}

/// Refuses up front when the tree has more connected subtrees than
/// `limits.max_components`: every one of them ends up memoized.
pub fn solve_exact_with(inst: &CpInstance, limits: ExactLimits) -> Result<ExactResult> {
    let count = crate::analysis::count_connected_subtrees(inst, 0)?.total;
    if count > limits.max_components.into() {
        return Err(Error::SizeGuard {
            guard: "exact-components",
            measured: format!("{count} connected subtrees"),
            limit: limits.max_components.to_string(),
        });
    }
    let mut solver = ExactSolver::with_limits(inst, limits);
    let all: Vec<usize> = (0..inst.n()).collect();
    let trace = solver.trace(&all)?;
    let assignment = reconstruct(inst, &trace);
    debug_assert_eq!(evaluate_unchecked(inst, &assignment).total, trace.value);
    Ok(ExactResult {
        value: trace.value,
        assignment,
        trace,
        components: solver.memo_len(),
    })
}

/// Builds permutations from a recursion tree: each component appends its
/// not-yet-emitted common labels (sorted) to every member, then its two
/// sides continue from there. Vertices outside the trace get their labels
/// in sorted order.
pub fn reconstruct(inst: &CpInstance, trace: &TraceNode) -> Assignment {
    let mut perms = vec![Vec::new(); inst.n()];
    let mut covered = vec![false; inst.n()];
    trace.vertices.iter().for_each(|&v| covered[v] = true);
    reconstruct_into(inst, trace, &mut perms);
    for v in 0..inst.n() {
        if !covered[v] {
            perms[v] = inst.labels(v).to_vec();
        }
    }
    Assignment { perms }
}

/// Writes the permutations of the vertices of `trace` into `perms`, leaving
/// other entries untouched.
pub fn reconstruct_into(inst: &CpInstance, trace: &TraceNode, perms: &mut [Vec<Label>]) {
    for &v in &trace.vertices {
        perms[v].clear();
    }
    let emitted = FixedBitSet::with_capacity(inst.alphabet().len());
    emit(trace, &emitted, perms);
}

fn emit(node: &TraceNode, emitted: &FixedBitSet, perms: &mut [Vec<Label>]) {
    let block: Vec<Label> = node
        .common
        .iter()
        .copied()
        .filter(|l| !emitted.contains(l.index()))
        .collect();
    for &v in &node.vertices {
        perms[v].extend_from_slice(&block);
    }
    if node.children.is_empty() {
        return;
    }
    let mut next = emitted.clone();
    block.iter().for_each(|l| next.insert(l.index()));
    for c in &node.children {
        emit(c, &next, perms);
    }
}

pub const DEFAULT_ORACLE_LIMIT: u64 = 10_000_000;

/// Exhaustive maximum over all assignments.
pub fn oracle_solve(inst: &CpInstance) -> Result<usize> {
    oracle_solve_with_limit(inst, DEFAULT_ORACLE_LIMIT)
}

pub fn oracle_solve_with_limit(inst: &CpInstance, limit: u64) -> Result<usize> {
    let mut count: u64 = 1;
    for v in 0..inst.n() {
        for k in 2..=inst.labels(v).len() as u64 {
            count = count.saturating_mul(k);
        }
    }
    if count > limit {
        return Err(Error::SizeGuard {
            guard: "oracle-assignments",
            measured: count.to_string(),
            limit: limit.to_string(),
        });
    }
    let choices: Vec<Vec<Vec<Label>>> = (0..inst.n()).map(|v| all_permutations(inst.labels(v))).collect();
    let mut idx = vec![0usize; inst.n()];
    let mut best = 0;
    loop {
        let total: usize = inst
            .edges()
            .iter()
            .map(|&(u, v)| crate::lcp_length(&choices[u][idx[u]], &choices[v][idx[v]]))
            .sum();
        best = best.max(total);
        // odometer step
        let mut v = 0;
        loop {
            if v == idx.len() {
                return Ok(best);
            }
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

/// All permutations of `items` in lexicographic order (`items` sorted).
pub fn all_permutations<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut cur = items.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::evaluate;
    use crate::instance::tests::{inst, three_path};

    fn two_path() -> CpInstance {
        inst(2, &[(0, 1)], &[&["x", "y"], &["y", "z"]])
    }

    #[test]
    fn common_count_examples() {
        let t = three_path();
        assert_eq!(common_label_count(&t, &[0, 1, 2]), 1);
        let one = inst(1, &[], &[&["x", "y"]]);
        assert_eq!(common_label_count(&one, &[0]), 2);
        let dis = inst(2, &[(0, 1)], &[&["a"], &["b"]]);
        assert_eq!(common_label_count(&dis, &[0, 1]), 0);
    }

    #[test]
    fn exact_examples() {
        assert_eq!(solve_exact(&two_path()).unwrap().value, 1);
        let star = inst(3, &[(0, 1), (0, 2)], &[&["1", "2"], &["1"], &["2"]]);
        assert_eq!(solve_exact(&star).unwrap().value, 1);
        let r = solve_exact(&three_path()).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(evaluate(&three_path(), &r.assignment).unwrap().total, 3);
        // ties broken towards the smallest edge
        assert_eq!(r.trace.cut, Some((0, 1)));
    }

    #[test]
    fn single_vertex_scores_zero() {
        let one = inst(1, &[], &[&["b", "a"]]);
        let r = solve_exact(&one).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.assignment.tokens(&one, 0), vec!["a", "b"]);
        assert_eq!(oracle_solve(&one).unwrap(), 0);
    }

    #[test]
    fn reconstruct_two_path() {
        let t = two_path();
        let r = solve_exact(&t).unwrap();
        assert_eq!(r.assignment.tokens(&t, 0), vec!["y", "x"]);
        assert_eq!(r.assignment.tokens(&t, 1), vec!["y", "z"]);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_solve(&two_path()).unwrap(), 1);
        assert_eq!(oracle_solve(&three_path()).unwrap(), 3);
        assert_eq!(all_permutations(&[1, 2, 3]).len(), 6);
    }

    #[test]
    fn oracle_guard() {
        let labels: Vec<String> = (0..11).map(|i| format!("l{i:02}")).collect();
        let big = CpInstance::new(1, vec![], vec![labels]).unwrap();
        let e = oracle_solve(&big).unwrap_err();
        assert!(e.is_size_guard());
        assert!(e.to_string().contains("39916800"));
    }

    #[test]
    fn component_guard() {
        let t = three_path();
        let e = solve_exact_with(&t, ExactLimits { max_components: 5 }).unwrap_err();
        assert!(e.is_size_guard());
        assert!(e.to_string().contains("6 connected subtrees"), "{e}");
        let mut s = ExactSolver::with_limits(&t, ExactLimits { max_components: 2 });
        assert!(s.solve_component(&[0, 1, 2]).unwrap_err().is_size_guard());
    }

    #[test]
    fn path_memo_is_all_subpaths() {
        for n in 1..=12 {
            let sets: Vec<Vec<String>> = (0..n).map(|v| vec![format!("l{}", v % 3)]).collect();
            let edges = (1..n).map(|v| (v - 1, v)).collect();
            let p = CpInstance::new(n, edges, sets).unwrap();
            let r = solve_exact(&p).unwrap();
            assert_eq!(r.components, n * (n + 1) / 2);
            let mut s = ExactSolver::new(&p);
            s.solve_component(&(0..n).collect::<Vec<_>>()).unwrap();
            for k in s.memo_keys() {
                let ComponentKey::Mask(m) = k else {
                    panic!("bitmask key expected")
                };
                // contiguous run of ones
                let shifted = m >> m.trailing_zeros();
                assert_eq!(shifted & (shifted + 1), 0);
            }
        }
    }

    #[test]
    fn sorted_list_keys_beyond_64() {
        let n = 70;
        let sets: Vec<Vec<String>> = (0..n).map(|_| vec!["a".to_string(), "b".to_string()]).collect();
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        let p = CpInstance::new(n, edges, sets).unwrap();
        let mut s = ExactSolver::new(&p);
        assert_eq!(s.solve_component(&(0..n).collect::<Vec<_>>()).unwrap(), 2 * (n - 1));
        assert!(s.memo_keys().all(|k| matches!(k, ComponentKey::Ids(_))));
    }

    #[test]
    fn split_sides() {
        let t = three_path();
        assert_eq!(split(&t, &[0, 1, 2], (1, 2)), (vec![0, 1], vec![2]));
        assert_eq!(component_edges(&t, &[1, 2]), vec![(1, 2)]);
    }
}
