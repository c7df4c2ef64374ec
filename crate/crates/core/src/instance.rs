//! Tree instances with per-vertex label sets, label permutations, and the
//! benefit objective.
//!
//! Labels are interned: every distinct token gets a dense [`Label`] id, and
//! ids are handed out in sorted token order, so comparing ids compares the
//! underlying tokens.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Diagnostic, Error, Result};

/// Interned label id. Ordering matches the lexicographic order of the tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub u32);

impl Label {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

pub fn is_valid_token(tok: &str) -> bool {
    !tok.is_empty() && !tok.chars().any(char::is_whitespace)
}

/// Unchecked instance data, as read from a file or assembled by a caller.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawInstance {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub label_sets: Vec<Vec<String>>,
}

impl RawInstance {
    pub fn validate(&self) -> Result<(), Diagnostic> {
        validate(self)
    }

    pub fn into_instance(self) -> Result<CpInstance> {
        CpInstance::new(self.n, self.edges, self.label_sets)
    }
}

/// Checks the tree and label-set invariants, reporting the first violation.
///
/// Tree structure is checked before labels; within the tree checks, edges are
/// scanned in input order.
pub fn validate(raw: &RawInstance) -> Result<(), Diagnostic> {
    validate_tree(raw.n, &raw.edges)?;
    validate_labels(raw.n, &raw.label_sets)
}

fn validate_tree(n: usize, edges: &[(usize, usize)]) -> Result<(), Diagnostic> {
    if n == 0 {
        return Err(Diagnostic::NoVertices);
    }
    for &(u, v) in edges {
        for x in [u, v] {
            if x >= n {
                return Err(Diagnostic::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Diagnostic::SelfLoop { vertex: u });
        }
    }
    let mut dsu = Dsu::new(n);
    for &(u, v) in edges {
        if !dsu.union(u, v) {
            return Err(Diagnostic::Cycle { u, v });
        }
    }
    let r = dsu.find(0);
    if let Some(v) = (1..n).find(|&v| dsu.find(v) != r) {
        return Err(Diagnostic::Disconnected { vertex: v });
    }
    Ok(())
}

fn validate_labels(n: usize, sets: &[Vec<String>]) -> Result<(), Diagnostic> {
    if sets.len() != n {
        return Err(Diagnostic::LabelSetCount {
            expected: n,
            found: sets.len(),
        });
    }
    for (v, set) in sets.iter().enumerate() {
        let mut seen = std::collections::HashSet::new();
        for tok in set {
            if !is_valid_token(tok) {
                return Err(Diagnostic::BadToken {
                    vertex: v,
                    token: tok.clone(),
                });
            }
            if !seen.insert(tok.as_str()) {
                return Err(Diagnostic::DuplicateLabel {
                    vertex: v,
                    label: tok.clone(),
                });
            }
        }
    }
    Ok(())
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// A validated Common Prefix instance: a tree on `0..n` and a label set per
/// vertex. Immutable once built.
#[derive(Debug, Clone)]
pub struct CpInstance {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Vec<Vec<Label>>,
    sets: Vec<FixedBitSet>,
    alphabet: Vec<String>,
    index: HashMap<String, Label>,
}

impl PartialEq for CpInstance {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges && self.alphabet == other.alphabet && self.labels == other.labels
    }
}

impl Eq for CpInstance {}

impl CpInstance {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, label_sets: Vec<Vec<String>>) -> Result<Self> {
        validate_tree(n, &edges).map_err(Error::NotATree)?;
        validate_labels(n, &label_sets).map_err(Error::Invalid)?;

        let mut alphabet: Vec<String> = label_sets.iter().flatten().cloned().collect();
        alphabet.sort();
        alphabet.dedup();
        let index: HashMap<String, Label> = alphabet
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), Label(i as u32)))
            .collect();

        let labels: Vec<Vec<Label>> = label_sets
            .iter()
            .map(|set| {
                let mut ids: Vec<Label> = set.iter().map(|t| index[t]).collect();
                ids.sort();
                ids
            })
            .collect();
        let sets = labels
            .iter()
            .map(|ids| {
                let mut bs = FixedBitSet::with_capacity(alphabet.len());
                ids.iter().for_each(|l| bs.insert(l.index()));
                bs
            })
            .collect();

        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj.iter_mut().for_each(|a| a.sort());

        Ok(CpInstance {
            n,
            edges,
            adj,
            labels,
            sets,
            alphabet,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Tree edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Sorted label ids of vertex `v`.
    pub fn labels(&self, v: usize) -> &[Label] {
        &self.labels[v]
    }

    pub fn label_set(&self, v: usize) -> &FixedBitSet {
        &self.sets[v]
    }

    /// Distinct tokens over all vertices, sorted. Index `i` is `Label(i)`.
    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn token(&self, l: Label) -> &str {
        &self.alphabet[l.index()]
    }

    pub fn label(&self, tok: &str) -> Option<Label> {
        self.index.get(tok).copied()
    }

    pub fn tokens(&self, v: usize) -> Vec<&str> {
        self.labels[v].iter().map(|&l| self.token(l)).collect()
    }

    pub fn to_raw(&self) -> RawInstance {
        RawInstance {
            n: self.n,
            edges: self.edges.clone(),
            label_sets: (0..self.n)
                .map(|v| self.tokens(v).into_iter().map(str::to_owned).collect())
                .collect(),
        }
    }

    /// Sum over edges of `min(|S_u|, |S_v|)`, an upper bound on any total.
    pub fn benefit_upper_bound(&self) -> usize {
        self.edges
            .iter()
            .map(|&(u, v)| self.labels[u].len().min(self.labels[v].len()))
            .sum()
    }

    /// Roots the tree at `root`: BFS order, parents, depths and children.
    pub fn rooted(&self, root: usize) -> Result<Rooted> {
        if root >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: self.n,
            });
        }
        let mut parent = vec![None; self.n];
        let mut depth = vec![0; self.n];
        let mut children = vec![Vec::new(); self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    children[v].push(w);
                    queue.push_back(w);
                }
            }
        }
        Ok(Rooted {
            root,
            parent,
            depth,
            children,
            order,
        })
    }
}

#[derive(Debug, Clone)]
pub struct Rooted {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
    pub children: Vec<Vec<usize>>,
    /// Vertices in BFS order from the root.
    pub order: Vec<usize>,
}

impl Rooted {
    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn ensure_binary(&self) -> Result<()> {
        match self.children.iter().position(|c| c.len() > 2) {
            Some(v) => Err(Error::NotBinary {
                vertex: v,
                children: self.children[v].len(),
                root: self.root,
            }),
            None => Ok(()),
        }
    }
}

/// Length of the longest common prefix of two sequences.
pub fn lcp_length<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// One permutation of its own label set per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub perms: Vec<Vec<Label>>,
}

impl Assignment {
    /// Each vertex gets its labels in sorted order.
    pub fn sorted(inst: &CpInstance) -> Self {
        Assignment {
            perms: (0..inst.n()).map(|v| inst.labels(v).to_vec()).collect(),
        }
    }

    pub fn from_tokens<S: AsRef<str>>(inst: &CpInstance, perms: &[Vec<S>]) -> Result<Self> {
        let perms = perms
            .iter()
            .enumerate()
            .map(|(v, p)| {
                p.iter()
                    .map(|t| {
                        inst.label(t.as_ref()).ok_or_else(|| Error::InvalidAssignment {
                            vertex: v,
                            reason: format!("unknown label {:?}", t.as_ref()),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let a = Assignment { perms };
        a.check(inst)?;
        Ok(a)
    }

    /// Verifies that `perms[v]` is a permutation of `S_v` for every vertex.
    pub fn check(&self, inst: &CpInstance) -> Result<()> {
        if self.perms.len() != inst.n() {
            return Err(Error::InvalidAssignment {
                vertex: self.perms.len().min(inst.n()),
                reason: format!("expected {} permutations, found {}", inst.n(), self.perms.len()),
            });
        }
        for (v, perm) in self.perms.iter().enumerate() {
            let mut sorted = perm.clone();
            sorted.sort();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidAssignment {
                    vertex: v,
                    reason: "repeated label".into(),
                });
            }
            if sorted != inst.labels(v) {
                return Err(Error::InvalidAssignment {
                    vertex: v,
                    reason: "not a permutation of the vertex label set".into(),
                });
            }
        }
        Ok(())
    }

    pub fn tokens<'a>(&self, inst: &'a CpInstance, v: usize) -> Vec<&'a str> {
        self.perms[v].iter().map(|&l| inst.token(l)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenefitReport {
    /// Keyed by `(u, v)` with `u < v`.
    pub per_edge: BTreeMap<(usize, usize), usize>,
    pub total: usize,
}

pub fn evaluate(inst: &CpInstance, assignment: &Assignment) -> Result<BenefitReport> {
    assignment.check(inst)?;
    Ok(evaluate_unchecked(inst, assignment))
}

pub(crate) fn evaluate_unchecked(inst: &CpInstance, assignment: &Assignment) -> BenefitReport {
    let per_edge: BTreeMap<_, _> = inst
        .edges()
        .iter()
        .map(|&(u, v)| ((u, v), lcp_length(&assignment.perms[u], &assignment.perms[v])))
        .collect();
    let total = per_edge.values().sum();
    BenefitReport { per_edge, total }
}

/// Significant lines of a text file: 1-based line number plus whitespace
/// tokens, skipping blank lines and `#` comment lines.
pub(crate) fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim_start();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t.split_whitespace().collect()))
        }
    })
}

pub(crate) fn parse_index(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Syntax {
        line,
        msg: format!("expected {what}, found {tok:?}"),
    })
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, msg: msg.into() }
}

/// Reads the line-based CP instance format without validating the tree.
pub fn parse_cp_raw(text: &str) -> Result<RawInstance> {
    let mut lines = significant_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing `cp <n>` header"))?;
    let n = match header.as_slice() {
        ["cp", n] => parse_index(n, hline, "vertex count")?,
        _ => return Err(syntax(hline, "expected `cp <n>` header")),
    };
    let mut edges = Vec::new();
    let mut label_sets: Vec<Option<Vec<String>>> = vec![None; n];
    let mut last_line = hline;
    for (line, toks) in lines {
        last_line = line;
        match toks[0] {
            "edge" => {
                if toks.len() != 3 {
                    return Err(syntax(line, "expected `edge <u> <v>`"));
                }
                let u = parse_index(toks[1], line, "vertex id")?;
                let v = parse_index(toks[2], line, "vertex id")?;
                for x in [u, v] {
                    if x >= n {
                        return Err(syntax(line, format!("vertex {x} out of range (n = {n})")));
                    }
                }
                edges.push((u, v));
            }
            "labels" => {
                if toks.len() < 2 {
                    return Err(syntax(line, "expected `labels <v> <tok> ...`"));
                }
                let v = parse_index(toks[1], line, "vertex id")?;
                if v >= n {
                    return Err(syntax(line, format!("vertex {v} out of range (n = {n})")));
                }
                if label_sets[v].is_some() {
                    return Err(syntax(line, format!("second labels line for vertex {v}")));
                }
                label_sets[v] = Some(toks[2..].iter().map(|s| s.to_string()).collect());
            }
            kw => return Err(syntax(line, format!("unknown keyword {kw:?}"))),
        }
    }
    let label_sets = label_sets
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| syntax(last_line, format!("missing labels line for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(RawInstance { n, edges, label_sets })
}

pub fn parse_cp(text: &str) -> Result<CpInstance> {
    parse_cp_raw(text)?.into_instance()
}

/// Canonical text form: sorted edges, then one `labels` line per vertex with
/// tokens in sorted order.
pub fn serialize_cp(inst: &CpInstance) -> String {
    let mut out = format!("cp {}\n", inst.n());
    for &(u, v) in inst.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    for v in 0..inst.n() {
        out.push_str("labels ");
        out.push_str(&v.to_string());
        for t in inst.tokens(v) {
            out.push(' ');
            out.push_str(t);
        }
        out.push('\n');
    }
    out
}

/// `value <total>` followed by one `perm` line per vertex.
pub fn serialize_solution(inst: &CpInstance, value: usize, assignment: &Assignment) -> String {
    let mut out = format!("value {value}\n");
    for v in 0..inst.n() {
        out.push_str("perm ");
        out.push_str(&v.to_string());
        for t in assignment.tokens(inst, v) {
            out.push(' ');
            out.push_str(t);
        }
        out.push('\n');
    }
    out
}

/// Parses a solution file against `inst`, returning the declared value and
/// the checked assignment.
pub fn parse_solution(text: &str, inst: &CpInstance) -> Result<(usize, Assignment)> {
    let mut lines = significant_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing `value` line"))?;
    let value = match header.as_slice() {
        ["value", x] => parse_index(x, hline, "value")?,
        _ => return Err(syntax(hline, "expected `value <total>`")),
    };
    let mut perms: Vec<Option<Vec<&str>>> = vec![None; inst.n()];
    let mut last_line = hline;
    for (line, toks) in lines {
        last_line = line;
        if toks[0] != "perm" || toks.len() < 2 {
            return Err(syntax(line, "expected `perm <v> <tok> ...`"));
        }
        let v = parse_index(toks[1], line, "vertex id")?;
        if v >= inst.n() {
            return Err(syntax(line, format!("vertex {v} out of range (n = {})", inst.n())));
        }
        if perms[v].is_some() {
            return Err(syntax(line, format!("second perm line for vertex {v}")));
        }
        perms[v] = Some(toks[2..].to_vec());
    }
    let perms = perms
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| syntax(last_line, format!("missing perm line for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok((value, Assignment::from_tokens(inst, &perms)?))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn inst(n: usize, edges: &[(usize, usize)], sets: &[&[&str]]) -> CpInstance {
        CpInstance::new(
            n,
            edges.to_vec(),
            sets.iter().map(|s| s.iter().map(|t| t.to_string()).collect()).collect(),
        )
        .unwrap()
    }

    pub(crate) fn three_path() -> CpInstance {
        inst(3, &[(0, 1), (1, 2)], &[&["1", "2"], &["1", "2", "3"], &["2", "3"]])
    }

    #[test]
    fn lcp_examples() {
        assert_eq!(lcp_length(&["y", "x"], &["y", "z"]), 1);
        assert_eq!(lcp_length::<&str>(&[], &["a", "b"]), 0);
        assert_eq!(lcp_length(&[2, 1], &[2, 1, 3]), 2);
    }

    #[test]
    fn evaluate_three_path() {
        let t = three_path();
        let a = Assignment::from_tokens(&t, &[vec!["2", "1"], vec!["2", "1", "3"], vec!["2", "3"]]).unwrap();
        let r = evaluate(&t, &a).unwrap();
        assert_eq!(r.per_edge[&(0, 1)], 2);
        assert_eq!(r.per_edge[&(1, 2)], 1);
        assert_eq!(r.total, 3);
    }

    #[test]
    fn evaluate_star() {
        let t = inst(
            4,
            &[(0, 1), (0, 2), (0, 3)],
            &[&["a", "b", "c"], &["a", "b"], &["a"], &["b", "c"]],
        );
        let a = Assignment::from_tokens(&t, &[vec!["a", "b", "c"], vec!["a", "b"], vec!["a"], vec!["b", "c"]]).unwrap();
        assert_eq!(evaluate(&t, &a).unwrap().total, 3);
    }

    #[test]
    fn disjoint_sets_give_zero() {
        let t = inst(3, &[(0, 1), (0, 2)], &[&["a", "b"], &["c"], &["d", "e"]]);
        let a = Assignment::from_tokens(&t, &[vec!["b", "a"], vec!["c"], vec!["e", "d"]]).unwrap();
        assert_eq!(evaluate(&t, &a).unwrap().total, 0);
    }

    #[test]
    fn evaluate_rejects_non_permutation() {
        let t = three_path();
        let bad = Assignment {
            perms: vec![t.labels(0).to_vec(), t.labels(0).to_vec(), t.labels(2).to_vec()],
        };
        assert!(matches!(
            evaluate(&t, &bad),
            Err(Error::InvalidAssignment { vertex: 1, .. })
        ));
        let l = t.labels(0)[0];
        let dup = Assignment {
            perms: vec![vec![l, l], t.labels(1).to_vec(), t.labels(2).to_vec()],
        };
        assert!(matches!(
            evaluate(&t, &dup),
            Err(Error::InvalidAssignment { vertex: 0, .. })
        ));
    }

    #[test]
    fn parse_examples() {
        let one = parse_cp("cp 1\nlabels 0 a").unwrap();
        assert_eq!(one.n(), 1);
        assert_eq!(one.tokens(0), vec!["a"]);

        let two = parse_cp("cp 2\nedge 0 1\nlabels 0 x y\nlabels 1 y z").unwrap();
        assert_eq!(two.edges(), &[(0, 1)]);
        assert_eq!(two.tokens(1), vec!["y", "z"]);

        let err = parse_cp("cp 2\nedge 0 0\nlabels 0 a\nlabels 1 b").unwrap_err();
        assert!(matches!(err, Error::NotATree(Diagnostic::SelfLoop { vertex: 0 })));
    }

    #[test]
    fn parse_errors() {
        let e = parse_cp("cp 2\nedge 0 1\nlabels 0 a a\nlabels 1 b").unwrap_err();
        assert!(matches!(
            e,
            Error::Invalid(Diagnostic::DuplicateLabel { vertex: 0, .. })
        ));
        let e = parse_cp("cp 2\n# c\nedge 0 x\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 3, .. }), "{e}");
        let e = parse_cp("cp 2\nedge 0 1\nlabels 0 a\n").unwrap_err();
        assert!(e.to_string().contains("missing labels line for vertex 1"));
        let e = parse_cp("cp 2\nedge 0 7\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 2, .. }));
        let e = parse_cp("tree 2").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, .. }));
    }

    #[test]
    fn parse_allows_empty_label_sets_and_comments() {
        let t = parse_cp("# star\ncp 2\n\nedge 1 0\nlabels 1\nlabels 0 q\n").unwrap();
        assert!(t.labels(1).is_empty());
        assert_eq!(serialize_cp(&t), "cp 2\nedge 0 1\nlabels 0 q\nlabels 1\n");
    }

    #[test]
    fn serialize_sorts_labels() {
        let t = inst(2, &[(1, 0)], &[&["z", "a"], &["m"]]);
        assert_eq!(serialize_cp(&t), "cp 2\nedge 0 1\nlabels 0 a z\nlabels 1 m\n");
    }

    #[test]
    fn validate_examples() {
        let raw = three_path().to_raw();
        assert_eq!(validate(&raw), Ok(()));

        let disc = RawInstance {
            n: 3,
            edges: vec![(0, 1)],
            label_sets: vec![vec![]; 3],
        };
        let d = validate(&disc).unwrap_err();
        assert!(d.to_string().contains("disconnected"));

        let cyc = RawInstance {
            n: 3,
            edges: vec![(0, 1), (1, 2), (2, 0)],
            label_sets: vec![vec![]; 3],
        };
        let d = validate(&cyc).unwrap_err();
        assert!(d.to_string().contains("cycle"));
        assert_eq!(d, Diagnostic::Cycle { u: 2, v: 0 });

        let bad_tok = RawInstance {
            n: 1,
            edges: vec![],
            label_sets: vec![vec!["a b".into()]],
        };
        assert!(matches!(validate(&bad_tok), Err(Diagnostic::BadToken { .. })));
    }

    #[test]
    fn solution_round_trip() {
        let t = three_path();
        let a = Assignment::from_tokens(&t, &[vec!["2", "1"], vec!["2", "3", "1"], vec!["2", "3"]]).unwrap();
        let text = serialize_solution(&t, 3, &a);
        assert_eq!(text, "value 3\nperm 0 2 1\nperm 1 2 3 1\nperm 2 2 3\n");
        let (v, back) = parse_solution(&text, &t).unwrap();
        assert_eq!((v, back), (3, a));
        assert!(parse_solution("value 3\nperm 0 1 2\n", &t).is_err());
    }

    #[test]
    fn rooted_and_binary_check() {
        let star = inst(4, &[(0, 1), (0, 2), (0, 3)], &[&[], &[], &[], &[]]);
        let r = star.rooted(0).unwrap();
        assert_eq!(r.children[0], vec![1, 2, 3]);
        assert!(matches!(
            r.ensure_binary(),
            Err(Error::NotBinary {
                vertex: 0,
                children: 3,
                ..
            })
        ));
        let r1 = star.rooted(1).unwrap();
        assert_eq!(r1.height(), 2);
        assert!(r1.ensure_binary().is_ok());
    }
}
