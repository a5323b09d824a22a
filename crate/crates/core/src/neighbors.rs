//! The labeled neighbor graph of a disk-like tile and its sofic-shift queries.
//!
//! Vertices are the nonzero `l` with `T ∩ (T + l) != ∅`; an edge `l -> l'`
//! labeled `b1` exists when `l' = A l - b1 v`. Infinite label streams read
//! from `l` are exactly the difference expansions of boundary points of
//! `T ∩ (T + l)`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    eval_radix_periodic, neighbor_step, validate_poly, Family, LatticeVec, PeriodicWord, RadixWord,
    RationalVec, TilePoly,
};
use crate::appendix::{family_tables, order_rank};
use crate::error::{Result, TileError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborGraph {
    poly: TilePoly,
    vertices: Vec<LatticeVec>,
    edges: Vec<Edge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    NonPositive,
    NonNegative,
}

impl Sign {
    pub fn admits(self, label: i64) -> bool {
        match self {
            Sign::NonPositive => label <= 0,
            Sign::NonNegative => label >= 0,
        }
    }
}

/// An eventually periodic label stream read from `start`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignPath {
    pub start: LatticeVec,
    pub labels: PeriodicWord,
    pub sign: Sign,
}

impl NeighborGraph {
    /// Builds a graph from explicit triples. Vertices are put in the
    /// reference order of the family; edges are sorted.
    pub fn from_triples(
        poly: &TilePoly,
        vertices: impl IntoIterator<Item = LatticeVec>,
        triples: impl IntoIterator<Item = (LatticeVec, i64, LatticeVec)>,
    ) -> Result<NeighborGraph> {
        let order = family_tables(poly).order;
        let mut vertices: Vec<LatticeVec> = vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        vertices.sort_by_key(|l| order_rank(&order, l));
        let index: HashMap<LatticeVec, usize> = vertices.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let mut edges = Vec::new();
        for (from, label, to) in triples {
            let f = *index.get(&from).ok_or(TileError::UnknownVertex(from))?;
            let t = *index.get(&to).ok_or(TileError::UnknownVertex(to))?;
            edges.push(Edge { from: f, to: t, label });
        }
        edges.sort();
        edges.dedup();
        Ok(NeighborGraph { poly: *poly, vertices, edges })
    }

    pub fn poly(&self) -> &TilePoly {
        &self.poly
    }
    pub fn vertices(&self) -> &[LatticeVec] {
        &self.vertices
    }
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
    pub fn len(&self) -> usize {
        self.vertices.len()
    }
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, ell: &LatticeVec) -> Option<usize> {
        self.vertices.iter().position(|x| x == ell)
    }

    pub fn contains(&self, ell: &LatticeVec) -> bool {
        self.index_of(ell).is_some()
    }

    pub fn out_edges(&self, from: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.from == from)
    }

    /// Edges as `(from, label, to)` lattice triples.
    pub fn triples(&self) -> BTreeSet<(LatticeVec, i64, LatticeVec)> {
        self.edges
            .iter()
            .map(|e| (self.vertices[e.from], e.label, self.vertices[e.to]))
            .collect()
    }

    /// Same vertex set and same labeled edges. Vertices are lattice points,
    /// so the only admissible bijection is the identity on points.
    pub fn same_labeled_graph(&self, other: &NeighborGraph) -> bool {
        let a: BTreeSet<_> = self.vertices.iter().collect();
        let b: BTreeSet<_> = other.vertices.iter().collect();
        a == b && self.triples() == other.triples()
    }

    /// The edge from `from` with this label, if any.
    pub fn step(&self, from: usize, label: i64) -> Option<usize> {
        self.out_edges(from).find(|e| e.label == label).map(|e| e.to)
    }

    /// Vertices with an infinite path using only labels admitted by `keep`.
    pub fn live_set(&self, keep: impl Fn(i64) -> bool) -> Vec<bool> {
        let mut live = vec![true; self.len()];
        loop {
            let mut changed = false;
            for v in 0..self.len() {
                if live[v] && !self.out_edges(v).any(|e| keep(e.label) && live[e.to]) {
                    live[v] = false;
                    changed = true;
                }
            }
            if !changed {
                return live;
            }
        }
    }

    /// Text export: header `p q family |V|`, then `idx gamma delta` per vertex
    /// and `from to label` per edge.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {} {}", self.poly.p(), self.poly.q(), self.poly.family().name(), self.len());
        for (i, l) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "{i} {} {}", l.gamma, l.delta);
        }
        for e in &self.edges {
            let _ = writeln!(s, "{} {} {}", e.from, e.to, e.label);
        }
        s
    }

    pub fn from_text(text: &str) -> Result<NeighborGraph> {
        let bad = |msg: &str| TileError::Parse(msg.to_string());
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<&str> = lines.next().ok_or_else(|| bad("empty graph text"))?.split_whitespace().collect();
        if header.len() != 4 {
            return Err(bad("header must be `p q family |V|`"));
        }
        let num = |s: &str| s.parse::<i64>().map_err(|_| bad(&format!("not an integer: {s}")));
        let (p, q) = (num(header[0])?, num(header[1])?);
        let poly = validate_poly(p, q)?;
        if Family::from_name(header[2]) != Some(poly.family()) {
            return Err(bad("family does not match p and q"));
        }
        let n = num(header[3])? as usize;
        let mut vertices = Vec::with_capacity(n);
        for i in 0..n {
            let f: Vec<&str> = lines.next().ok_or_else(|| bad("missing vertex line"))?.split_whitespace().collect();
            if f.len() != 3 || num(f[0])? as usize != i {
                return Err(bad("vertex line must be `idx gamma delta`"));
            }
            vertices.push(LatticeVec::new(num(f[1])?, num(f[2])?));
        }
        let mut triples = Vec::new();
        for line in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 {
                return Err(bad("edge line must be `from to label`"));
            }
            let (a, b) = (num(f[0])? as usize, num(f[1])? as usize);
            if a >= n || b >= n {
                return Err(bad("edge endpoint out of range"));
            }
            triples.push((vertices[a], num(f[2])?, vertices[b]));
        }
        NeighborGraph::from_triples(&poly, vertices, triples)
    }

    /// Graphviz export.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph neighbors {{");
        let _ = writeln!(s, "  label=\"{}\";", self.poly);
        for (i, l) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", l.name());
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.label);
        }
        s.push_str("}\n");
        s
    }
}

/// Vertices of the greatest fixed point inside `|gamma| <= gmax, |delta| <= dmax`.
fn prune_box(poly: &TilePoly, gmax: i64, dmax: i64) -> HashSet<LatticeVec> {
    let mut alive: HashSet<LatticeVec> = (-dmax..=dmax)
        .flat_map(|d| (-gmax..=gmax).map(move |g| LatticeVec::new(g, d)))
        .filter(|l| !l.is_zero())
        .collect();
    let bmax = poly.max_difference_digit();
    loop {
        let dead: Vec<LatticeVec> = alive
            .iter()
            .filter(|l| {
                !(-bmax..=bmax).any(|b| neighbor_step(**l, b, poly).map(|t| alive.contains(&t)).unwrap_or(false))
            })
            .copied()
            .collect();
        if dead.is_empty() {
            return alive;
        }
        for l in dead {
            alive.remove(&l);
        }
    }
}

pub(crate) fn neighbor_set_in_box(poly: &TilePoly, gmax: i64, dmax: i64) -> Result<HashSet<LatticeVec>> {
    let on_edge = |set: &HashSet<LatticeVec>, g: i64, d: i64| {
        set.iter().any(|l| l.gamma.abs() == g || l.delta.abs() == d)
    };
    let first = prune_box(poly, gmax, dmax);
    if !on_edge(&first, gmax, dmax) {
        return Ok(first);
    }
    let second = prune_box(poly, 2 * gmax, 2 * dmax);
    if on_edge(&second, 2 * gmax, 2 * dmax) {
        return Err(TileError::BoxExhausted);
    }
    Ok(second)
}

/// Neighbor graph by pruning the candidate box `|delta| <= 3`,
/// `|gamma| <= |p| + |q| + 1` down to its greatest fixed point.
pub fn build_neighbor_graph(poly: &TilePoly) -> Result<NeighborGraph> {
    let gmax = poly.p().abs() + poly.digit_count() + 1;
    let set = neighbor_set_in_box(poly, gmax, 3)?;
    let bmax = poly.max_difference_digit();
    let mut triples = Vec::new();
    for l in &set {
        for b in -bmax..=bmax {
            let t = neighbor_step(*l, b, poly)?;
            if set.contains(&t) {
                triples.push((*l, b, t));
            }
        }
    }
    NeighborGraph::from_triples(poly, set.iter().copied(), triples)
}

/// The reference graph of the family with `|p|`, `|q|` substituted.
pub fn appendix_neighbor_graph(poly: &TilePoly) -> NeighborGraph {
    let t = family_tables(poly);
    NeighborGraph::from_triples(poly, t.order, t.edges).expect("reference edges stay on reference vertices")
}

/// `0 ∈ ∂T` iff some infinite path has labels of a single sign.
pub fn origin_on_boundary(g: &NeighborGraph) -> bool {
    [Sign::NonPositive, Sign::NonNegative]
        .into_iter()
        .any(|s| g.live_set(|b| s.admits(b)).contains(&true))
}

/// A single-signed infinite path starting at the first live vertex.
///
/// The walk always takes the smallest admissible label whose target is
/// still live, so the result is deterministic.
pub fn find_sign_path(g: &NeighborGraph, sign: Sign) -> Option<SignPath> {
    let live = g.live_set(|b| sign.admits(b));
    let start = live.iter().position(|&x| x)?;
    walk_live(g, start, sign, &live)
}

/// Like [`find_sign_path`] but from a chosen start vertex.
pub fn find_sign_path_from(g: &NeighborGraph, start: LatticeVec, sign: Sign) -> Result<Option<SignPath>> {
    let s = g.index_of(&start).ok_or(TileError::UnknownVertex(start))?;
    let live = g.live_set(|b| sign.admits(b));
    if !live[s] {
        return Ok(None);
    }
    Ok(walk_live(g, s, sign, &live))
}

fn walk_live(g: &NeighborGraph, start: usize, sign: Sign, live: &[bool]) -> Option<SignPath> {
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut at = start;
    while !seen.contains_key(&at) {
        seen.insert(at, labels.len());
        let e = g
            .out_edges(at)
            .filter(|e| sign.admits(e.label) && live[e.to])
            .min_by_key(|e| (e.label, e.to))?;
        labels.push(e.label);
        at = e.to;
    }
    let cut = seen[&at];
    let period = labels.split_off(cut);
    let word = PeriodicWord::new(RadixWord(labels), RadixWord(period)).ok()?;
    Some(SignPath { start: g.vertices[start], labels: word, sign })
}

/// Whether `word` is the label sequence of a path from `start`.
pub fn accepts(g: &NeighborGraph, start: LatticeVec, word: &RadixWord) -> Result<bool> {
    let mut at = g.index_of(&start).ok_or(TileError::UnknownVertex(start))?;
    for &b in word.digits() {
        match g.step(at, b) {
            Some(t) => at = t,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// The point `x ∈ T ∩ (T + l)` encoded by a sign path, using the split
/// `a_i = max(b_i, 0)`, `a'_i = max(-b_i, 0)`.
pub fn boundary_point_from_path(sp: &SignPath, poly: &TilePoly) -> Result<RationalVec> {
    let bad = TileError::InvalidPath(sp.start);
    let mut at = sp.start;
    let pre = sp.labels.preperiod().digits();
    let per = sp.labels.period().digits();
    let trace = |at: &mut LatticeVec, labels: &[i64]| -> Result<()> {
        for &b in labels {
            poly.check_difference_digit(b).map_err(|_| bad.clone())?;
            *at = neighbor_step(*at, b, poly)?;
            if at.is_zero() {
                return Err(bad.clone());
            }
        }
        Ok(())
    };
    trace(&mut at, pre)?;
    let entry = at;
    trace(&mut at, per)?;
    if at != entry {
        return Err(bad);
    }
    eval_radix_periodic(&sp.labels.map_digits(|b| b.max(0)), poly)
}

/// Companion of [`boundary_point_from_path`]: the `a'` stream with
/// `x - l = 0.a'_1 a'_2 ...`.
pub fn boundary_point_shifted(sp: &SignPath, poly: &TilePoly) -> Result<RationalVec> {
    eval_radix_periodic(&sp.labels.map_digits(|b| (-b).max(0)), poly)
}
