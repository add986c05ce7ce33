//! Detour sequences: statistics, closed forms for named families, the tree
//! characterisation with its realiser, and the path-unicyclic algorithm.

use crate::graph::SimpleGraph;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("sequence terms must be nondecreasing")]
    BadSequence,
    #[error("empty sequence")]
    Empty,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("not a tree detour sequence")]
    Unrealizable,
    #[error("a path-unicyclic spec needs at least one attached path")]
    NotPathUnicyclic,
    #[error("cannot parse detour sequence: {0}")]
    Parse(String),
}

/// A nondecreasing sequence of vertex detour orders.
/// Equality is term-wise; the run-length encoding is derived.
#[derive(Clone, PartialEq, Eq)]
pub struct DetourSequence {
    terms: Vec<usize>,
}

impl DetourSequence {
    /// Accepts already-sorted terms; rejects unsorted input.
    pub fn from_terms(terms: Vec<usize>) -> Result<Self, SequenceError> {
        if terms.windows(2).any(|w| w[0] > w[1]) {
            return Err(SequenceError::BadSequence);
        }
        Ok(DetourSequence { terms })
    }

    pub fn from_unsorted(mut terms: Vec<usize>) -> Self {
        terms.sort_unstable();
        DetourSequence { terms }
    }

    pub fn from_runs(runs: &[(usize, usize)]) -> Self {
        let mut terms = Vec::new();
        for &(value, mult) in runs {
            terms.extend(std::iter::repeat(value).take(mult));
        }
        terms.sort_unstable();
        DetourSequence { terms }
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        self.terms.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.terms.last().copied()
    }

    /// Run-length encoding [(value, multiplicity)], values strictly increasing.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &t in &self.terms {
            match out.last_mut() {
                Some((v, m)) if *v == t => *m += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }

    pub fn max_gap(&self) -> usize {
        self.terms
            .windows(2)
            .map(|w| w[1] - w[0])
            .max()
            .unwrap_or(0)
    }

    /// Every integer between min and max occurs (gap ≤ 1).
    pub fn is_full(&self) -> bool {
        self.max_gap() <= 1
    }

    pub fn is_constant(&self) -> bool {
        self.max_gap() == 0
    }
}

impl std::fmt::Debug for DetourSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DetourSequence({self})")
    }
}

/// Run notation: single terms bare, runs as `(v)xK`, comma separated.
impl std::fmt::Display for DetourSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .runs()
            .iter()
            .map(|&(v, m)| {
                if m == 1 {
                    v.to_string()
                } else {
                    format!("({v})x{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses both the expanded form `10,11,12,12` and the run form `10,11,(12)x2`.
impl std::str::FromStr for DetourSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut terms = Vec::new();
        for raw in s.split(',') {
            let tok = raw.trim();
            if tok.is_empty() {
                continue;
            }
            if let Some(rest) = tok.strip_prefix('(') {
                let (value, mult) = rest
                    .split_once(')')
                    .ok_or_else(|| SequenceError::Parse(format!("missing ')' in {tok:?}")))?;
                let v: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| SequenceError::Parse(format!("bad value in {tok:?}")))?;
                let m: usize = mult
                    .trim()
                    .strip_prefix('x')
                    .ok_or_else(|| SequenceError::Parse(format!("missing 'x' in {tok:?}")))?
                    .trim()
                    .parse()
                    .map_err(|_| SequenceError::Parse(format!("bad multiplicity in {tok:?}")))?;
                terms.extend(std::iter::repeat(v).take(m));
            } else {
                terms.push(
                    tok.parse()
                        .map_err(|_| SequenceError::Parse(format!("bad term {tok:?}")))?,
                );
            }
        }
        if terms.is_empty() {
            return Err(SequenceError::Empty);
        }
        DetourSequence::from_terms(terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceReport {
    pub max_gap: usize,
    pub full: bool,
    pub constant: bool,
    /// Maximal runs with multiplicity ≥ 2.
    pub repetitions: Vec<(usize, usize)>,
    pub longest_repetition: usize,
}

/// Bound checks for a sequence of a connected graph of the given order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceBounds {
    /// gap ≤ ⌊τ/2⌋
    pub gap_within_bound: bool,
    /// distinct terms ≤ ⌈τ/2⌉
    pub distinct_within_bound: bool,
    /// some repetition of length ≥ ⌈2n/τ⌉
    pub repetition_long_enough: bool,
    /// min term ≥ ⌈(τ+1)/2⌉
    pub min_term_within_bound: bool,
}

impl SequenceBounds {
    pub fn all_hold(&self) -> bool {
        self.gap_within_bound
            && self.distinct_within_bound
            && self.repetition_long_enough
            && self.min_term_within_bound
    }
}

pub fn analyze_sequence(
    d: &DetourSequence,
    n_vertices: usize,
    tau: usize,
) -> Result<(SequenceReport, SequenceBounds), SequenceError> {
    if d.is_empty() {
        return Err(SequenceError::Empty);
    }
    if d.max() != Some(tau) {
        return Err(SequenceError::BadParams(format!(
            "tau {tau} is not the maximum term {:?}",
            d.max()
        )));
    }
    let runs = d.runs();
    let repetitions: Vec<(usize, usize)> = runs.iter().copied().filter(|&(_, m)| m >= 2).collect();
    let longest_repetition = runs.iter().map(|&(_, m)| m).max().unwrap_or(0);
    let report = SequenceReport {
        max_gap: d.max_gap(),
        full: d.is_full(),
        constant: d.is_constant(),
        repetitions,
        longest_repetition,
    };
    let bounds = SequenceBounds {
        gap_within_bound: d.max_gap() <= tau / 2,
        distinct_within_bound: runs.len() <= tau.div_ceil(2),
        repetition_long_enough: n_vertices <= 1
            || longest_repetition >= (2 * n_vertices).div_ceil(tau),
        min_term_within_bound: d.min().unwrap() >= (tau + 1).div_ceil(2),
    };
    Ok((report, bounds))
}

/// Detour sequence of the path P_n: (a)_k,(a+1)_2,…,(n)_2 with a = ⌈(n+1)/2⌉,
/// k = 1 for odd n and k = 2 for even n.
pub fn path_sequence(n: usize) -> Result<DetourSequence, SequenceError> {
    if n == 0 {
        return Err(SequenceError::Empty);
    }
    let a = (n + 1).div_ceil(2);
    let mut runs = vec![(a, if n % 2 == 1 { 1 } else { 2 })];
    for v in a + 1..=n {
        runs.push((v, 2));
    }
    Ok(DetourSequence::from_runs(&runs))
}

/// Detour sequence of G_{n,m} (two cliques sharing a vertex): n,(n+m−1)_{n+m−2}.
pub fn two_clique_sequence(n: usize, m: usize) -> Result<DetourSequence, SequenceError> {
    if m <= 1 || m > n {
        return Err(SequenceError::BadParams(format!(
            "need 1 < m <= n, got n={n} m={m}"
        )));
    }
    Ok(DetourSequence::from_runs(&[(n, 1), (n + m - 1, n + m - 2)]))
}

/// The graph G_{n,m}: K_n and K_m sharing exactly the vertex w = 0.
pub fn two_clique_graph(n: usize, m: usize) -> Result<SimpleGraph, SequenceError> {
    if m <= 1 || m > n {
        return Err(SequenceError::BadParams(format!(
            "need 1 < m <= n, got n={n} m={m}"
        )));
    }
    // A = {0..n-1}, B = {0} ∪ {n..n+m-2}
    let total = n + m - 1;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    let b: Vec<usize> = std::iter::once(0).chain(n..total).collect();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            edges.push((b[i], b[j]));
        }
    }
    Ok(SimpleGraph::build(total, &edges).unwrap())
}

/// Detour sequence of the complete multipartite graph K(n_1,…,n_p):
/// (N)_N when 2·n_p ≤ N, else (2(N−n_p))_{N−n_p}, (2(N−n_p)+1)_{n_p}.
pub fn multipartite_sequence(parts: &[usize]) -> Result<DetourSequence, SequenceError> {
    let parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
    if parts.len() < 2 {
        return Err(SequenceError::BadParams(
            "need at least two nonempty parts".into(),
        ));
    }
    let total: usize = parts.iter().sum();
    let np = parts.iter().copied().max().unwrap();
    if 2 * np <= total {
        Ok(DetourSequence::from_runs(&[(total, total)]))
    } else {
        let s = total - np;
        Ok(DetourSequence::from_runs(&[(2 * s, s), (2 * s + 1, np)]))
    }
}

/// The complete multipartite graph itself (empty parts dropped).
pub fn multipartite_graph(parts: &[usize]) -> Result<SimpleGraph, SequenceError> {
    let parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
    if parts.len() < 2 {
        return Err(SequenceError::BadParams(
            "need at least two nonempty parts".into(),
        ));
    }
    let n: usize = parts.iter().sum();
    let mut side = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        side.extend(std::iter::repeat(i).take(p));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(SimpleGraph::build(n, &edges).unwrap())
}

/// Is `d` the detour sequence of SOME complete multipartite graph:
/// (N)_N, or (2n)_n,(2n+1)_m with m > n.
pub fn is_multipartite_sequence(d: &DetourSequence) -> bool {
    let runs = d.runs();
    match runs.as_slice() {
        [(v, m)] => *v == *m && *v >= 1,
        [(v1, m1), (v2, m2)] => *v1 == 2 * *m1 && *v2 == *v1 + 1 && *m2 > *m1,
        _ => false,
    }
}

/// Tree characterisation: 1, or 2,2, or (a)_k,(a+1)_{k_1},…,(m)_{k_l} with
/// m ≥ 3, a = ⌈(m+1)/2⌉, l = m−a, every k_j ≥ 2, and k = 1 for odd m, 2 for even.
pub fn is_tree_sequence(d: &DetourSequence) -> bool {
    let runs = d.runs();
    if runs == vec![(1, 1)] || runs == vec![(2, 2)] {
        return true;
    }
    let m = match d.max() {
        Some(m) if m >= 3 => m,
        _ => return false,
    };
    let a = (m + 1).div_ceil(2);
    let expected_first_mult = if m % 2 == 1 { 1 } else { 2 };
    // runs must be consecutive values a, a+1, ..., m
    if runs.len() != m - a + 1 {
        return false;
    }
    for (i, &(v, mult)) in runs.iter().enumerate() {
        if v != a + i {
            return false;
        }
        if i == 0 {
            if mult != expected_first_mult {
                return false;
            }
        } else if mult < 2 {
            return false;
        }
    }
    true
}

/// Builds the canonical tree realising a tree detour sequence: a path of
/// order m with k_j − 2 extra leaves attached at v_{a+j-1}.
pub fn realize_tree(d: &DetourSequence) -> Result<SimpleGraph, SequenceError> {
    if !is_tree_sequence(d) {
        return Err(SequenceError::Unrealizable);
    }
    let runs = d.runs();
    if runs == vec![(1, 1)] {
        return Ok(SimpleGraph::empty(1));
    }
    if runs == vec![(2, 2)] {
        return Ok(SimpleGraph::build(2, &[(0, 1)]).unwrap());
    }
    let m = d.max().unwrap();
    let a = (m + 1).div_ceil(2);
    let mut edges: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
    let mut next = m;
    for (j, &(_, mult)) in runs.iter().enumerate().skip(1) {
        // run j has value a+j; attach mult-2 leaves at path vertex a+j-1 (1-based)
        let host = a + j - 2; // 0-based index of v_{a+j-1}
        for _ in 0..mult - 2 {
            edges.push((host, next));
            next += 1;
        }
    }
    Ok(SimpleGraph::build(next, &edges).unwrap())
}

/// A cycle with pendant paths: `attachments` maps cycle vertex index to the
/// order of the path attached there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnicyclicSpec {
    pub cycle_len: usize,
    pub attachments: BTreeMap<usize, usize>,
}

impl UnicyclicSpec {
    pub fn new(
        cycle_len: usize,
        attachments: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, SequenceError> {
        let attachments: BTreeMap<usize, usize> = attachments.into_iter().collect();
        if cycle_len < 3 {
            return Err(SequenceError::BadParams("cycle length must be >= 3".into()));
        }
        if attachments.is_empty() {
            return Err(SequenceError::NotPathUnicyclic);
        }
        for (&v, &p) in &attachments {
            if v >= cycle_len {
                return Err(SequenceError::BadParams(format!(
                    "attachment vertex {v} outside cycle of length {cycle_len}"
                )));
            }
            if p == 0 {
                return Err(SequenceError::BadParams("attached path order must be >= 1".into()));
            }
        }
        Ok(UnicyclicSpec {
            cycle_len,
            attachments,
        })
    }

    pub fn order(&self) -> usize {
        self.cycle_len + self.attachments.values().sum::<usize>()
    }
}

/// The path-unicyclic graph: cycle 0..n-1, pendant paths appended in
/// ascending attachment-vertex order.
pub fn build_path_unicyclic(spec: &UnicyclicSpec) -> Result<SimpleGraph, SequenceError> {
    let n = spec.cycle_len;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut next = n;
    for (&v, &p) in &spec.attachments {
        let mut prev = v;
        for _ in 0..p {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(SimpleGraph::build(next, &edges).unwrap())
}

/// Cycle-vertex detour orders and the full detour sequence of a
/// path-unicyclic graph, by the box-update algorithm with cyclic indexing.
///
/// The detour order of a cycle vertex is the max of: the cycle itself (n),
/// its own path (p_i + 1), and for every other attachment the long way
/// around the cycle into that path (n + p_j + 1 − dist(i, j)). Off-cycle
/// orders ascend from k_i + 1 when k_i > p_i + 1; when k_i = p_i + 1 (the
/// extreme vertex) they descend to m = ⌈(M+1)/2⌉ and ascend to M, with m
/// doubled exactly when M is even.
pub fn unicyclic_sequence(
    spec: &UnicyclicSpec,
) -> Result<(Vec<usize>, DetourSequence), SequenceError> {
    let n = spec.cycle_len;
    if spec.attachments.is_empty() {
        return Err(SequenceError::NotPathUnicyclic);
    }
    let p = |i: usize| spec.attachments.get(&i).copied().unwrap_or(0);
    let dist = |i: usize, j: usize| {
        let d = if i > j { i - j } else { j - i };
        d.min(n - d)
    };
    let mut k = vec![n; n];
    for i in 0..n {
        k[i] = k[i].max(p(i) + 1);
        for (&j, &pj) in &spec.attachments {
            if j != i {
                k[i] = k[i].max(n + pj + 1 - dist(i, j));
            }
        }
    }
    let mut terms = k.clone();
    // M over non-extreme cycle vertices, needed for the extreme case
    let big_m = (0..n)
        .filter(|&i| p(i) + 1 < k[i])
        .map(|i| k[i] + p(i))
        .max();
    for (&i, &pi) in &spec.attachments {
        debug_assert!(k[i] >= pi + 1, "cycle box below its own path bound");
        if k[i] > pi + 1 {
            terms.extend(k[i] + 1..=k[i] + pi);
        } else {
            let big_m = big_m.expect("at most one extreme vertex on a cycle of length >= 3");
            let m = (big_m + 1).div_ceil(2);
            // orders along v_i, u_1, ..., u_p: descend k_i..m, (m again when
            // M even), ascend to M; drop the leading k_i (the cycle vertex)
            let mut along: Vec<usize> = (m..=k[i]).rev().collect();
            if big_m % 2 == 0 {
                along.push(m);
                along.extend(m + 1..=2 * m - 2);
            } else {
                along.extend(m + 1..=2 * m - 1);
            }
            debug_assert_eq!(along.len(), pi + 1);
            terms.extend(along.into_iter().skip(1));
        }
    }
    Ok((k, DetourSequence::from_unsorted(terms)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{detour_profile, SearchMode};

    #[test]
    fn run_encoding_and_display() {
        let d = DetourSequence::from_terms(vec![5, 5, 6, 6, 6, 6]).unwrap();
        assert_eq!(d.runs(), vec![(5, 2), (6, 4)]);
        assert_eq!(d.to_string(), "(5)x2,(6)x4");
        assert_eq!(d.max_gap(), 1);
        assert!(d.is_full() && !d.is_constant());
    }

    #[test]
    fn parse_both_forms() {
        let a: DetourSequence = "10,11,(12)x2,(13)x3".parse().unwrap();
        let b: DetourSequence = "10,11,12,12,13,13,13".parse().unwrap();
        assert_eq!(a, b);
        assert!("12,(11)x2".parse::<DetourSequence>().is_err());
        assert!("".parse::<DetourSequence>().is_err());
    }

    #[test]
    fn rejects_unsorted() {
        assert_eq!(
            DetourSequence::from_terms(vec![3, 2]).unwrap_err(),
            SequenceError::BadSequence
        );
    }

    #[test]
    fn analyze_example_sequence() {
        let d = DetourSequence::from_terms(vec![5, 5, 6, 6, 6, 6]).unwrap();
        let (rep, bounds) = analyze_sequence(&d, 6, 6).unwrap();
        assert_eq!(rep.repetitions, vec![(5, 2), (6, 4)]);
        assert!(rep.full && !rep.constant);
        assert!(bounds.all_hold());
    }

    #[test]
    fn analyze_constant_17() {
        let d = DetourSequence::from_runs(&[(17, 18)]);
        let (rep, bounds) = analyze_sequence(&d, 18, 17).unwrap();
        assert!(rep.constant && rep.max_gap == 0);
        assert!(bounds.all_hold());
    }

    #[test]
    fn analyze_two_clique_gap_tight() {
        // G_{3,3}: 3,(5)_4; gap 2 = ⌊5/2⌋ achieves the bound
        let d = two_clique_sequence(3, 3).unwrap();
        assert_eq!(d.terms(), &[3, 5, 5, 5, 5]);
        let (rep, bounds) = analyze_sequence(&d, 5, 5).unwrap();
        assert_eq!(rep.max_gap, 2);
        assert!(bounds.gap_within_bound && bounds.all_hold());
    }

    #[test]
    fn path_sequences() {
        assert_eq!(path_sequence(5).unwrap().terms(), &[3, 4, 4, 5, 5]);
        assert_eq!(path_sequence(2).unwrap().terms(), &[2, 2]);
        assert_eq!(path_sequence(1).unwrap().terms(), &[1]);
        assert_eq!(path_sequence(6).unwrap().terms(), &[4, 4, 5, 5, 6, 6]);
        assert!(path_sequence(0).is_err());
    }

    #[test]
    fn two_clique_params() {
        assert_eq!(
            two_clique_sequence(4, 3).unwrap().runs(),
            vec![(4, 1), (6, 5)]
        );
        assert!(two_clique_sequence(3, 1).is_err());
        assert!(two_clique_sequence(3, 4).is_err());
    }

    #[test]
    fn two_clique_graph_profile_matches_formula() {
        let g = two_clique_graph(4, 3).unwrap();
        let profile = detour_profile(&g, SearchMode::certified()).unwrap();
        assert_eq!(profile.sequence, two_clique_sequence(4, 3).unwrap());
        // tau at the shared vertex is n
        assert_eq!(profile.per_vertex[0], 4);
    }

    #[test]
    fn multipartite_cases() {
        assert_eq!(
            multipartite_sequence(&[1, 1, 1, 1]).unwrap().runs(),
            vec![(4, 4)]
        );
        assert_eq!(
            multipartite_sequence(&[1, 1, 1, 5]).unwrap().runs(),
            vec![(6, 3), (7, 5)]
        );
        assert_eq!(multipartite_sequence(&[3, 3]).unwrap().runs(), vec![(6, 6)]);
        assert!(multipartite_sequence(&[5]).is_err());
        // empty parts dropped
        assert_eq!(
            multipartite_sequence(&[0, 2, 2]).unwrap(),
            multipartite_sequence(&[2, 2]).unwrap()
        );
    }

    #[test]
    fn multipartite_checker() {
        assert!(is_multipartite_sequence(&DetourSequence::from_runs(&[(4, 4)])));
        assert!(is_multipartite_sequence(&DetourSequence::from_runs(&[
            (6, 3),
            (7, 5)
        ])));
        // m > n required
        assert!(!is_multipartite_sequence(&DetourSequence::from_runs(&[
            (6, 3),
            (7, 3)
        ])));
        assert!(!is_multipartite_sequence(
            &DetourSequence::from_terms(vec![3, 4, 4]).unwrap()
        ));
    }

    #[test]
    fn tree_sequence_recognition() {
        let yes: DetourSequence = "3,(4)x2,(5)x3".parse().unwrap();
        assert!(is_tree_sequence(&yes));
        assert!(is_tree_sequence(&"2,2".parse().unwrap()));
        assert!(is_tree_sequence(&"1".parse().unwrap()));
        // m = 5 odd needs first multiplicity 1
        let no: DetourSequence = "(3)x2,(4)x2,(5)x2".parse().unwrap();
        assert!(!is_tree_sequence(&no));
        // missing value
        assert!(!is_tree_sequence(&"3,(5)x4".parse().unwrap()));
    }

    #[test]
    fn realize_tree_examples() {
        let d: DetourSequence = "3,(4)x2,(5)x3".parse().unwrap();
        let t = realize_tree(&d).unwrap();
        assert_eq!(t.n(), 6);
        let profile = detour_profile(&t, SearchMode::certified()).unwrap();
        assert_eq!(profile.sequence, d);

        assert_eq!(realize_tree(&"2,2".parse().unwrap()).unwrap().n(), 2);

        let p7: DetourSequence = "(4)x2,(5)x2,(6)x2,(7)x2".parse().unwrap();
        let t7 = realize_tree(&p7).unwrap();
        assert_eq!(t7.n(), 7);
        assert_eq!(t7.m(), 6);
        let profile = detour_profile(&t7, SearchMode::certified()).unwrap();
        assert_eq!(profile.sequence, p7);

        assert_eq!(
            realize_tree(&"3,3".parse().unwrap()).unwrap_err(),
            SequenceError::Unrealizable
        );
    }

    #[test]
    fn unicyclic_worked_example() {
        // cycle of order 8, paths of order 4, 3, 7 at (1-based) v3, v6, v8
        let spec = UnicyclicSpec::new(8, [(2, 4), (5, 3), (7, 7)]).unwrap();
        let (k, seq) = unicyclic_sequence(&spec).unwrap();
        assert_eq!(k, vec![15, 14, 13, 12, 13, 14, 15, 10]);
        let expected: DetourSequence = "10,11,(12)x2,(13)x3,(14)x4,(15)x5,(16)x3,(17)x3"
            .parse()
            .unwrap();
        assert_eq!(seq, expected);
        assert_eq!(build_path_unicyclic(&spec).unwrap().n(), 22);
    }

    #[test]
    fn unicyclic_triangle_pendant() {
        let spec = UnicyclicSpec::new(3, [(0, 1)]).unwrap();
        let (k, seq) = unicyclic_sequence(&spec).unwrap();
        assert_eq!(k, vec![3, 4, 4]);
        assert_eq!(seq.terms(), &[3, 4, 4, 4]);
        let g = build_path_unicyclic(&spec).unwrap();
        assert_eq!(g.n(), 4);
        let profile = detour_profile(&g, SearchMode::certified()).unwrap();
        assert_eq!(profile.sequence, seq);
    }

    #[test]
    fn unicyclic_extreme_vertex_case() {
        // long path at one vertex makes it extreme: k_0 = p+1
        let spec = UnicyclicSpec::new(3, [(0, 5)]).unwrap();
        let (k, seq) = unicyclic_sequence(&spec).unwrap();
        assert_eq!(k[0], 6);
        let g = build_path_unicyclic(&spec).unwrap();
        let profile = detour_profile(&g, SearchMode::certified()).unwrap();
        assert_eq!(profile.sequence, seq, "k = {k:?}");
        assert!(seq.is_full());
    }

    #[test]
    fn unicyclic_requires_attachment() {
        assert_eq!(
            UnicyclicSpec::new(5, []).unwrap_err(),
            SequenceError::NotPathUnicyclic
        );
    }
}
