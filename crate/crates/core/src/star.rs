//! Stars, Nested Neighborhoods and edge bicliques.
//!
//! A Nested Neighborhoods (NN) solution picks `V′ ⊆ V` and a chain
//! `u₁, …, u_k` with `Γ(u₁)∩V′ ⊇ … ⊇ Γ(u_k)∩V′`, scoring `Σ |Γ(u_i)∩V′|`.
//! An NN instance maps to a star whose center carries all of `V` and whose
//! leaves carry their neighborhoods; NN solutions become star assignments of
//! at least the same value.
//!
//! The reverse direction is weaker than it looks. A star assignment lets
//! every leaf match a different prefix of the center, while an NN solution
//! restricts all leaves by one common `V′`. Center `{a,b,c}` with leaves
//! `{a,b,c}`, `{a,b}`, `{a,c}` scores 6 as a star but only 5 as NN, because
//! `{a,c}∩V′` is incomparable with `{a,b}∩V′` whenever `b, c ∈ V′`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::instance::{evaluate_unchecked, parse_index, significant_lines, Assignment, CpInstance, Label};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NnInstance {
    n_u: usize,
    n_v: usize,
    adj: Vec<Vec<usize>>,
    v_names: Option<Vec<String>>,
}

impl NnInstance {
    /// Builds from an edge list; rejects out-of-range ids and duplicate edges.
    pub fn new(n_u: usize, n_v: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n_u];
        for &(u, v) in edges {
            if u >= n_u || v >= n_v {
                return Err(Error::Param(format!("edge {u} {v} out of range ({n_u} x {n_v})")));
            }
            adj[u].push(v);
        }
        for (u, nb) in adj.iter_mut().enumerate() {
            nb.sort_unstable();
            if let Some(w) = nb.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Param(format!("duplicate edge {u} {}", w[0])));
            }
        }
        Ok(NnInstance {
            n_u,
            n_v,
            adj,
            v_names: None,
        })
    }

    /// Attaches label tokens to the V side.
    pub fn with_v_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n_v {
            return Err(Error::Param(format!(
                "expected {} V names, got {}",
                self.n_v,
                names.len()
            )));
        }
        let distinct: BTreeSet<&str> = names.iter().map(String::as_str).collect();
        if distinct.len() != names.len() || !names.iter().all(|t| crate::instance::is_valid_token(t)) {
            return Err(Error::Param("V names must be distinct non-whitespace tokens".into()));
        }
        self.v_names = Some(names);
        Ok(self)
    }

    pub fn n_u(&self) -> usize {
        self.n_u
    }

    pub fn n_v(&self) -> usize {
        self.n_v
    }

    /// Sorted neighborhood `Γ(u)`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().map(move |&v| (u, v)))
    }

    pub fn v_names(&self) -> Option<&[String]> {
        self.v_names.as_deref()
    }

    /// Token used for `v` in the star reduction. Unnamed graphs use `v`
    /// followed by a zero-padded index, so token order equals index order.
    pub fn v_token(&self, v: usize) -> String {
        match &self.v_names {
            Some(names) => names[v].clone(),
            None => {
                let width = self.n_v.saturating_sub(1).to_string().len();
                format!("v{v:0width$}")
            }
        }
    }

    /// Same sides and edges, ignoring names.
    pub fn same_graph(&self, other: &NnInstance) -> bool {
        self.n_u == other.n_u && self.n_v == other.n_v && self.adj == other.adj
    }

    fn masks(&self) -> Vec<u64> {
        debug_assert!(self.n_v <= 64);
        self.adj
            .iter()
            .map(|nb| nb.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }
}

/// Chain `u₁..u_k` with restriction set `V′`; nesting is checked on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NnSolution {
    pub chain: Vec<usize>,
    /// Sorted.
    pub vprime: Vec<usize>,
    /// `y_i = |Γ(u_i) ∩ V′|`, non-increasing.
    pub y: Vec<usize>,
    pub cost: usize,
}

impl NnSolution {
    pub fn empty() -> Self {
        NnSolution {
            chain: Vec::new(),
            vprime: Vec::new(),
            y: Vec::new(),
            cost: 0,
        }
    }

    pub fn new(g: &NnInstance, chain: Vec<usize>, mut vprime: Vec<usize>) -> Result<Self> {
        vprime.sort_unstable();
        vprime.dedup();
        if let Some(&v) = vprime.iter().find(|&&v| v >= g.n_v()) {
            return Err(Error::Infeasible(format!("V vertex {v} out of range")));
        }
        let mut seen = vec![false; g.n_u()];
        for &u in &chain {
            if u >= g.n_u() {
                return Err(Error::Infeasible(format!("U vertex {u} out of range")));
            }
            if std::mem::replace(&mut seen[u], true) {
                return Err(Error::Infeasible(format!("U vertex {u} repeated in chain")));
            }
        }
        let restricted: Vec<Vec<usize>> = chain.iter().map(|&u| restrict(g.neighbors(u), &vprime)).collect();
        for (i, w) in restricted.windows(2).enumerate() {
            if !is_subset(&w[1], &w[0]) {
                return Err(Error::Infeasible(format!(
                    "not nested: Γ(u{})∩V′ ⊉ Γ(u{})∩V′",
                    chain[i],
                    chain[i + 1]
                )));
            }
        }
        let y: Vec<usize> = restricted.iter().map(Vec::len).collect();
        let cost = y.iter().sum();
        Ok(NnSolution { chain, vprime, y, cost })
    }

    pub fn restricted(&self, g: &NnInstance, i: usize) -> Vec<usize> {
        restrict(g.neighbors(self.chain[i]), &self.vprime)
    }
}

fn restrict(nb: &[usize], vprime: &[usize]) -> Vec<usize> {
    nb.iter().copied().filter(|v| vprime.binary_search(v).is_ok()).collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Biclique {
    /// Sorted.
    pub uside: Vec<usize>,
    /// Sorted.
    pub vside: Vec<usize>,
}

impl Biclique {
    pub fn edge_count(&self) -> usize {
        self.uside.len() * self.vside.len()
    }

    pub fn is_complete_in(&self, g: &NnInstance) -> bool {
        self.uside
            .iter()
            .all(|&u| u < g.n_u() && self.vside.iter().all(|&v| g.has_edge(u, v)))
    }
}

/// Star with center 0 labeled by all of `V`, and leaf `u + 1` labeled by `Γ(u)`.
pub fn nn_to_star(g: &NnInstance) -> CpInstance {
    let tokens: Vec<String> = (0..g.n_v()).map(|v| g.v_token(v)).collect();
    let mut sets = Vec::with_capacity(g.n_u() + 1);
    sets.push(tokens.clone());
    for u in 0..g.n_u() {
        sets.push(g.neighbors(u).iter().map(|&v| tokens[v].clone()).collect());
    }
    let edges = (1..=g.n_u()).map(|leaf| (0, leaf)).collect();
    CpInstance::new(g.n_u() + 1, edges, sets).expect("star with distinct tokens is valid")
}

pub fn check_star(inst: &CpInstance, center: usize) -> Result<()> {
    if center >= inst.n() {
        return Err(Error::VertexOutOfRange {
            vertex: center,
            n: inst.n(),
        });
    }
    match inst.edges().iter().find(|&&(u, v)| u != center && v != center) {
        Some(&(u, v)) => Err(Error::NotAStar { center, u, v }),
        None => Ok(()),
    }
}

/// Leaves in increasing vertex order become `U`; the center's labels in
/// sorted order become `V`. Leaf labels missing from the center are dropped.
pub fn star_to_nn(inst: &CpInstance, center: usize) -> Result<NnInstance> {
    check_star(inst, center)?;
    let center_labels = inst.labels(center);
    let leaves: Vec<usize> = (0..inst.n()).filter(|&v| v != center).collect();
    let mut edges = Vec::new();
    for (u, &leaf) in leaves.iter().enumerate() {
        for (j, &l) in center_labels.iter().enumerate() {
            if inst.label_set(leaf).contains(l.index()) {
                edges.push((u, j));
            }
        }
    }
    let names = center_labels.iter().map(|&l| inst.token(l).to_string()).collect();
    NnInstance::new(leaves.len(), center_labels.len(), &edges)?.with_v_names(names)
}

fn leaf_vertices(star: &CpInstance, center: usize) -> Vec<usize> {
    (0..star.n()).filter(|&v| v != center).collect()
}

fn v_labels(g: &NnInstance, star: &CpInstance) -> Result<Vec<Label>> {
    (0..g.n_v())
        .map(|v| {
            let tok = g.v_token(v);
            star.label(&tok)
                .ok_or_else(|| Error::Infeasible(format!("label {tok:?} missing from star")))
        })
        .collect()
}

/// Star assignment realizing an NN solution on `nn_to_star(g)`: the center
/// lists `Γ(u_k)∩V′` first, then each earlier difference, then the rest of
/// `V`; chain leaves copy the center prefix of their restricted set. The
/// resulting total is at least `solution.cost`.
pub fn translate_nn_to_cp(solution: &NnSolution, g: &NnInstance, star: &CpInstance) -> Result<Assignment> {
    let center = 0;
    check_star(star, center)?;
    if star.n() != g.n_u() + 1 {
        return Err(Error::Infeasible("star does not match the NN instance".into()));
    }
    let solution = NnSolution::new(g, solution.chain.clone(), solution.vprime.clone())?;
    let lab = v_labels(g, star)?;

    let mut center_perm: Vec<Label> = Vec::with_capacity(g.n_v());
    let mut placed = vec![false; g.n_v()];
    for i in (0..solution.chain.len()).rev() {
        let mut block: Vec<Label> = solution
            .restricted(g, i)
            .into_iter()
            .filter(|&v| !std::mem::replace(&mut placed[v], true))
            .map(|v| lab[v])
            .collect();
        block.sort();
        center_perm.extend(block);
    }
    let mut rest: Vec<Label> = (0..g.n_v()).filter(|&v| !placed[v]).map(|v| lab[v]).collect();
    rest.sort();
    center_perm.extend(rest);

    let mut perms = vec![Vec::new(); star.n()];
    for u in 0..g.n_u() {
        perms[u + 1] = star.labels(u + 1).to_vec();
    }
    for (i, &u) in solution.chain.iter().enumerate() {
        let y = solution.y[i];
        let leaf = u + 1;
        let mut perm = center_perm[..y].to_vec();
        perm.extend(
            star.labels(leaf)
                .iter()
                .copied()
                .filter(|l| !center_perm[..y].contains(l)),
        );
        perms[leaf] = perm;
    }
    perms[center] = center_perm;
    let a = Assignment { perms };
    a.check(star)?;
    Ok(a)
}

/// Reads an NN solution off a star assignment.
///
/// Each leaf's benefit `b` marks a center prefix of length `b`. For every
/// benefited prefix length `j`, `V′` is taken to be the first `j` center
/// labels and a maximum-weight nested chain is chosen; the best `j` wins.
/// When the leaves ordered by decreasing benefit are nested under the longest
/// prefix, the cost is at least the assignment total. Otherwise the cost may
/// be lower, since one `V′` cannot always reproduce per-leaf prefixes.
pub fn translate_cp_to_nn(
    assignment: &Assignment,
    star: &CpInstance,
    center: usize,
) -> Result<(NnInstance, NnSolution)> {
    let g = star_to_nn(star, center)?;
    assignment.check(star)?;
    let report = evaluate_unchecked(star, assignment);
    let leaves = leaf_vertices(star, center);
    let longest = leaves
        .iter()
        .map(|&leaf| report.per_edge[&(center.min(leaf), center.max(leaf))])
        .max()
        .unwrap_or(0);
    let center_labels = star.labels(center);
    let v_of = |l: Label| center_labels.binary_search(&l).expect("center label");

    let mut best = NnSolution::empty();
    for j in 1..=longest {
        let vprime: Vec<usize> = assignment.perms[center][..j].iter().map(|&l| v_of(l)).collect();
        let mut sorted = vprime.clone();
        sorted.sort_unstable();
        let restricted: Vec<Vec<usize>> = (0..g.n_u()).map(|u| restrict(g.neighbors(u), &sorted)).collect();
        let (cost, chain) = max_weight_chain(&restricted);
        if cost > best.cost {
            best = NnSolution::new(&g, chain, sorted)?;
        }
    }
    Ok((g, best))
}

/// Set operations needed by the chain search.
trait VSet: Clone + Ord {
    fn size(&self) -> usize;
    fn within(&self, other: &Self) -> bool;
}

impl VSet for u64 {
    fn size(&self) -> usize {
        self.count_ones() as usize
    }
    fn within(&self, other: &Self) -> bool {
        self & !other == 0
    }
}

impl VSet for Vec<usize> {
    fn size(&self) -> usize {
        self.len()
    }
    fn within(&self, other: &Self) -> bool {
        is_subset(self, other)
    }
}

/// Maximum-weight chain in the containment order of the restricted sets.
/// Vertices with equal sets are taken together; empty sets are skipped.
/// Among optimal chains the lexicographically smallest vertex sequence is
/// returned.
fn max_weight_chain<S: VSet>(restricted: &[S]) -> (usize, Vec<usize>) {
    let mut order: Vec<(S, usize)> = restricted
        .iter()
        .cloned()
        .enumerate()
        .filter(|(_, s)| s.size() > 0)
        .map(|(u, s)| (s, u))
        .collect();
    order.sort();
    // groups of equal sets; members ascending
    let mut groups: Vec<(S, Vec<usize>)> = Vec::new();
    for (s, u) in order {
        match groups.last_mut() {
            Some((gs, members)) if *gs == s => members.push(u),
            _ => groups.push((s, vec![u])),
        }
    }
    groups.sort_by_key(|(s, _)| s.size());
    let weight = |g: &(S, Vec<usize>)| g.0.size() * g.1.len();
    let mut best_from = vec![0usize; groups.len()];
    for i in 0..groups.len() {
        let below = (0..i)
            .filter(|&h| groups[h].0.size() < groups[i].0.size() && groups[h].0.within(&groups[i].0))
            .map(|h| best_from[h])
            .max()
            .unwrap_or(0);
        best_from[i] = weight(&groups[i]) + below;
    }
    let pick = |cands: &mut dyn Iterator<Item = usize>, target: usize| {
        cands
            .filter(|&h| best_from[h] == target)
            .min_by_key(|&h| groups[h].1[0])
    };
    let total = best_from.iter().copied().max().unwrap_or(0);
    let mut chain = Vec::new();
    let mut cur = pick(&mut (0..groups.len()), total);
    let mut remaining = total;
    while let Some(g) = cur {
        chain.extend_from_slice(&groups[g].1);
        remaining -= weight(&groups[g]);
        if remaining == 0 {
            break;
        }
        cur = pick(
            &mut (0..groups.len())
                .filter(|&h| groups[h].0.size() < groups[g].0.size() && groups[h].0.within(&groups[g].0)),
            remaining,
        );
    }
    (total, chain)
}

pub const NN_SUBSET_LIMIT: usize = 24;

pub fn solve_nn_exact(g: &NnInstance) -> Result<NnSolution> {
    solve_nn_exact_with_limit(g, NN_SUBSET_LIMIT)
}

/// Optimum over every `V′ ⊆ V`, scanning masks in increasing order and
/// keeping the first strict improvement.
pub fn solve_nn_exact_with_limit(g: &NnInstance, max_v: usize) -> Result<NnSolution> {
    if g.n_v() > max_v.min(63) {
        return Err(Error::SizeGuard {
            guard: "nn-v-side",
            measured: g.n_v().to_string(),
            limit: max_v.min(63).to_string(),
        });
    }
    let masks = g.masks();
    let mut best: Option<(usize, u64, Vec<usize>)> = None;
    let mut restricted = vec![0u64; g.n_u()];
    for vmask in 0u64..(1u64 << g.n_v()) {
        for (r, m) in restricted.iter_mut().zip(&masks) {
            *r = m & vmask;
        }
        let (cost, chain) = max_weight_chain(&restricted);
        if best.as_ref().map_or(true, |b| cost > b.0) {
            best = Some((cost, vmask, chain));
        }
    }
    let (_, vmask, chain) = best.expect("at least the empty V′");
    let vprime = (0..g.n_v()).filter(|&v| vmask >> v & 1 == 1).collect();
    NnSolution::new(g, chain, vprime)
}

pub const EBCS_SIDE_LIMIT: usize = 24;

pub fn solve_ebcs_exact(g: &NnInstance) -> Result<Biclique> {
    solve_ebcs_exact_with_limit(g, EBCS_SIDE_LIMIT)
}

/// Enumerates subsets of the smaller side (`U` on ties); the partner side is
/// the common neighborhood. Ties keep the smaller subset mask.
pub fn solve_ebcs_exact_with_limit(g: &NnInstance, max_side: usize) -> Result<Biclique> {
    let small = g.n_u().min(g.n_v());
    if small > max_side.min(63) {
        return Err(Error::SizeGuard {
            guard: "ebcs-smaller-side",
            measured: small.to_string(),
            limit: max_side.min(63).to_string(),
        });
    }
    let use_u = g.n_u() <= g.n_v();
    // adjacency of the enumerated side, as sorted lists into the other side
    let (lists, other_n): (Vec<Vec<usize>>, usize) = if use_u {
        (g.adj.clone(), g.n_v())
    } else {
        let mut t = vec![Vec::new(); g.n_v()];
        for (u, v) in g.edges() {
            t[v].push(u);
        }
        (t, g.n_u())
    };
    let mut best = (0usize, Vec::new(), Vec::new());
    let mut marks = vec![0usize; other_n];
    for mask in 1u64..(1u64 << small) {
        let chosen: Vec<usize> = (0..small).filter(|&i| mask >> i & 1 == 1).collect();
        marks.iter_mut().for_each(|m| *m = 0);
        for &x in &chosen {
            for &y in &lists[x] {
                marks[y] += 1;
            }
        }
        let partner: Vec<usize> = (0..other_n).filter(|&y| marks[y] == chosen.len()).collect();
        let edges = chosen.len() * partner.len();
        if edges > best.0 {
            best = (edges, chosen, partner);
        }
    }
    let (_, a, b) = best;
    Ok(if use_u {
        Biclique { uside: a, vside: b }
    } else {
        Biclique { uside: b, vside: a }
    })
}

/// A biclique read as an NN solution: every restricted neighborhood equals
/// the V side.
pub fn biclique_to_nn(b: &Biclique, g: &NnInstance) -> Result<NnSolution> {
    if !b.is_complete_in(g) {
        return Err(Error::Infeasible("biclique is not complete in the graph".into()));
    }
    let mut chain = b.uside.clone();
    chain.sort_unstable();
    NnSolution::new(g, chain, b.vside.clone())
}

/// Best prefix biclique `({u₁..u_i}, Γ(u_i)∩V′)` of a nested chain, with
/// `i·y_i` edges; the smallest `i` wins ties. Its size is at least
/// `cost / H_k` for a chain of length `k`.
pub fn extract_prefix_biclique(solution: &NnSolution, g: &NnInstance) -> Result<Biclique> {
    let solution = NnSolution::new(g, solution.chain.clone(), solution.vprime.clone())?;
    let Some(i) = (0..solution.chain.len()).rev().max_by_key(|&i| (i + 1) * solution.y[i]) else {
        return Ok(Biclique::default());
    };
    let mut uside = solution.chain[..=i].to_vec();
    uside.sort_unstable();
    Ok(Biclique {
        uside,
        vside: solution.restricted(g, i),
    })
}

/// `Γ(u_i) = {v_1, …, v_⌊n/i⌋}` for `i = 1..n` (0-based ids in the result).
pub fn tight_family(n: usize) -> NnInstance {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n / (u + 1)).map(move |v| (u, v))).collect();
    NnInstance::new(n, n, &edges).expect("in range")
}

pub fn parse_nn(text: &str) -> Result<NnInstance> {
    let syntax = |line, msg: String| Error::Syntax { line, msg };
    let mut lines = significant_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `nn <nU> <nV>` header".into()))?;
    let (n_u, n_v) = match header.as_slice() {
        ["nn", a, b] => (parse_index(a, hline, "U size")?, parse_index(b, hline, "V size")?),
        _ => return Err(syntax(hline, "expected `nn <nU> <nV>` header".into())),
    };
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for (line, toks) in lines {
        let (u, v) = match toks.as_slice() {
            ["edge", u, v] => (parse_index(u, line, "U id")?, parse_index(v, line, "V id")?),
            _ => return Err(syntax(line, "expected `edge <u> <v>`".into())),
        };
        if u >= n_u || v >= n_v {
            return Err(syntax(line, format!("edge {u} {v} out of range ({n_u} x {n_v})")));
        }
        if !seen.insert((u, v)) {
            return Err(syntax(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    NnInstance::new(n_u, n_v, &edges)
}

/// Header plus edges sorted by `u`, then `v`.
pub fn serialize_nn(g: &NnInstance) -> String {
    let mut out = format!("nn {} {}\n", g.n_u(), g.n_v());
    for (u, v) in g.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::harmonic;
    use crate::exact::{oracle_solve, solve_exact};
    use crate::instance::evaluate;
    use crate::instance::tests::inst;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn small() -> NnInstance {
        NnInstance::new(2, 2, &[(0, 0), (0, 1), (1, 0)]).unwrap()
    }

    fn k22() -> NnInstance {
        NnInstance::new(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap()
    }

    fn abc_star() -> CpInstance {
        inst(
            4,
            &[(0, 1), (0, 2), (0, 3)],
            &[&["a", "b", "c"], &["a", "b"], &["a"], &["b", "c"]],
        )
    }

    #[test]
    fn nn_to_star_examples() {
        let s = nn_to_star(&small());
        assert_eq!(s.tokens(0), vec!["v0", "v1"]);
        assert_eq!(s.tokens(1), vec!["v0", "v1"]);
        assert_eq!(s.tokens(2), vec!["v0"]);

        let empty = NnInstance::new(2, 2, &[]).unwrap();
        let s = nn_to_star(&empty);
        assert!(s.labels(1).is_empty() && s.labels(2).is_empty());
        assert_eq!(solve_exact(&s).unwrap().value, 0);

        let t4 = nn_to_star(&tight_family(4));
        assert_eq!(oracle_solve(&t4).unwrap(), 8);
    }

    #[test]
    fn padded_tokens_keep_index_order() {
        let g = tight_family(12);
        assert_eq!(g.v_token(3), "v03");
        let back = star_to_nn(&nn_to_star(&g), 0).unwrap();
        assert!(back.same_graph(&g));
    }

    #[test]
    fn star_to_nn_examples() {
        let g = star_to_nn(&abc_star(), 0).unwrap();
        assert_eq!(g.neighbors(0), &[0, 1]);
        assert_eq!(g.neighbors(1), &[0]);
        assert_eq!(g.neighbors(2), &[1, 2]);
        assert_eq!(g.v_names().unwrap(), &["a", "b", "c"]);

        let extra = inst(2, &[(0, 1)], &[&["a", "b"], &["a", "z"]]);
        let g = star_to_nn(&extra, 0).unwrap();
        assert_eq!(g.neighbors(0), &[0]);

        let path = inst(4, &[(0, 1), (1, 2), (2, 3)], &[&[], &[], &[], &[]]);
        assert!(matches!(star_to_nn(&path, 1), Err(Error::NotAStar { .. })));
    }

    #[test]
    fn nn_to_cp_translation() {
        let g = small();
        let sol = NnSolution::new(&g, vec![0, 1], vec![0, 1]).unwrap();
        assert_eq!(sol.cost, 3);
        let star = nn_to_star(&g);
        let a = translate_nn_to_cp(&sol, &g, &star).unwrap();
        assert_eq!(a.tokens(&star, 0), vec!["v0", "v1"]);
        assert_eq!(evaluate(&star, &a).unwrap().total, 3);

        let a = translate_nn_to_cp(&NnSolution::empty(), &g, &star).unwrap();
        assert!(a.check(&star).is_ok());
    }

    #[test]
    fn cp_to_nn_translation() {
        let star = abc_star();
        let r = solve_exact(&star).unwrap();
        assert_eq!(r.value, 3);
        let (g, sol) = translate_cp_to_nn(&r.assignment, &star, 0).unwrap();
        assert_eq!(sol.cost, 3);
        assert_eq!(solve_nn_exact(&g).unwrap().cost, 3);
    }

    #[test]
    fn star_can_beat_nested_neighborhoods() {
        let star = inst(
            4,
            &[(0, 1), (0, 2), (0, 3)],
            &[&["a", "b", "c"], &["a", "b", "c"], &["a", "b"], &["a", "c"]],
        );
        assert_eq!(solve_exact(&star).unwrap().value, 6);
        assert_eq!(oracle_solve(&star).unwrap(), 6);
        let g = star_to_nn(&star, 0).unwrap();
        assert_eq!(solve_nn_exact(&g).unwrap().cost, 5);
    }

    #[test]
    fn nn_exact_examples() {
        let s = solve_nn_exact(&small()).unwrap();
        assert_eq!((s.cost, s.chain.clone(), s.vprime.clone()), (3, vec![0, 1], vec![0, 1]));
        assert_eq!(solve_nn_exact(&k22()).unwrap().cost, 4);
        let t = solve_nn_exact(&tight_family(4)).unwrap();
        assert_eq!(t.cost, 8);
        assert_eq!(t.y, vec![4, 2, 1, 1]);
    }

    #[test]
    fn nn_rejects_non_nested() {
        let g = NnInstance::new(2, 2, &[(0, 0), (1, 1)]).unwrap();
        assert!(matches!(
            NnSolution::new(&g, vec![0, 1], vec![0, 1]),
            Err(Error::Infeasible(_))
        ));
        assert!(NnSolution::new(&g, vec![0, 1], vec![0]).is_ok());
        assert!(NnSolution::new(&g, vec![0, 0], vec![]).is_err());
    }

    #[test]
    fn ebcs_examples() {
        assert_eq!(solve_ebcs_exact(&k22()).unwrap().edge_count(), 4);
        assert_eq!(solve_ebcs_exact(&tight_family(4)).unwrap().edge_count(), 4);
        let e = solve_ebcs_exact(&NnInstance::new(3, 2, &[]).unwrap()).unwrap();
        assert_eq!(e.edge_count(), 0);
        // V side smaller
        let g = NnInstance::new(3, 1, &[(0, 0), (2, 0)]).unwrap();
        let b = solve_ebcs_exact(&g).unwrap();
        assert_eq!(
            b,
            Biclique {
                uside: vec![0, 2],
                vside: vec![0]
            }
        );
        assert!(b.is_complete_in(&g));
    }

    #[test]
    fn guards() {
        let g = NnInstance::new(1, 30, &[]).unwrap();
        assert!(solve_nn_exact(&g).unwrap_err().is_size_guard());
        let g = NnInstance::new(30, 30, &[]).unwrap();
        assert!(solve_ebcs_exact(&g).unwrap_err().is_size_guard());
    }

    #[test]
    fn biclique_to_nn_examples() {
        let b = Biclique {
            uside: vec![0, 1],
            vside: vec![0, 1],
        };
        assert_eq!(biclique_to_nn(&b, &k22()).unwrap().cost, 4);
        let one = NnInstance::new(1, 1, &[(0, 0)]).unwrap();
        let b = Biclique {
            uside: vec![0],
            vside: vec![0],
        };
        assert_eq!(biclique_to_nn(&b, &one).unwrap().cost, 1);
        let bad = Biclique {
            uside: vec![0, 1],
            vside: vec![1],
        };
        assert!(biclique_to_nn(&bad, &small()).is_err());
    }

    #[test]
    fn prefix_biclique_examples() {
        let g = tight_family(4);
        let opt = solve_nn_exact(&g).unwrap();
        let b = extract_prefix_biclique(&opt, &g).unwrap();
        assert_eq!(b.edge_count(), 4);
        assert_eq!(b.uside, vec![0]);
        let h4 = harmonic(4);
        assert_eq!(h4, BigRational::new(BigInt::from(25), BigInt::from(12)));
        assert!(BigRational::from_integer(b.edge_count().into()) * h4 >= BigRational::from_integer(8.into()));

        let k = solve_nn_exact(&k22()).unwrap();
        assert_eq!(extract_prefix_biclique(&k, &k22()).unwrap().edge_count(), k.cost);

        assert_eq!(
            extract_prefix_biclique(&NnSolution::empty(), &g).unwrap(),
            Biclique::default()
        );
    }

    #[test]
    fn tight_family_shape() {
        let one = tight_family(1);
        assert_eq!(one.edges().collect::<Vec<_>>(), vec![(0, 0)]);
        let t = tight_family(4);
        let sizes: Vec<usize> = (0..4).map(|u| t.neighbors(u).len()).collect();
        assert_eq!(sizes, vec![4, 2, 1, 1]);
    }

    #[test]
    fn nn_format() {
        let g = parse_nn("nn 2 2\nedge 0 0\nedge 0 1\nedge 1 0").unwrap();
        assert!(g.same_graph(&small()));
        let g = parse_nn("nn 2 2\nedge 1 0\nedge 0 1\nedge 0 0\n").unwrap();
        assert_eq!(serialize_nn(&g), "nn 2 2\nedge 0 0\nedge 0 1\nedge 1 0\n");
        let e = parse_nn("nn 1 1\nedge 0 5").unwrap_err();
        assert!(e.to_string().contains("out of range"));
        assert!(parse_nn("nn 1 1\nedge 0 0\nedge 0 0").is_err());
        assert!(parse_nn("nn 1\n").is_err());
    }

    #[test]
    fn chain_ties_are_lexicographic() {
        // u0 ⊋ u2 and u1 ⊋ u2 with equal weights: chain starts at u0
        let g = NnInstance::new(3, 3, &[(0, 0), (0, 1), (1, 0), (1, 2), (2, 0)]).unwrap();
        let restricted: Vec<u64> = g.masks();
        let (cost, chain) = max_weight_chain(&restricted);
        assert_eq!((cost, chain), (3, vec![0, 2]));
    }
}
