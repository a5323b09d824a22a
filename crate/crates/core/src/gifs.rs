//! Graph-directed system for the boundary pieces `T_l = T ∩ (T + l)`.
//!
//! Each neighbor edge `l -> l'` with label `b1` contributes the maps
//! `x -> A^{-1}(x + j v)`, `j ∈ I_{b1}`, carrying `T_{l'}` into `T_l`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::algebra::{LatticeVec, TilePoly};
use crate::appendix::SetEquationTerm;
use crate::error::{Result, TileError};
use crate::neighbors::NeighborGraph;

/// `I_b = {b, .., |q|-1}` for `b >= 0`, `{0, .., |q|-1+b}` for `b < 0`.
pub fn index_set(b1: i64, q: i64) -> Result<RangeInclusive<i64>> {
    let qa = q.abs();
    if qa < 2 {
        return Err(TileError::DegenerateDeterminant(qa));
    }
    if b1.abs() > qa - 1 {
        return Err(TileError::DigitOutOfRange { digit: b1, bound: qa - 1 });
    }
    Ok(if b1 >= 0 { b1..=qa - 1 } else { 0..=qa - 1 + b1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GifsMap {
    pub from: usize,
    pub to: usize,
    pub j: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GifsSystem {
    pub graph: NeighborGraph,
    pub maps: Vec<GifsMap>,
}

impl GifsSystem {
    pub fn poly(&self) -> &TilePoly {
        self.graph.poly()
    }

    pub fn maps_from(&self, from: usize) -> impl Iterator<Item = &GifsMap> {
        self.maps.iter().filter(move |m| m.from == from)
    }

    /// One `U_{j=lo..hi}(T_to + j v)` block per neighbor edge.
    pub fn set_equations(&self) -> Vec<SetEquationTerm> {
        let v = self.graph.vertices();
        let mut out: Vec<SetEquationTerm> = Vec::new();
        for m in &self.maps {
            match out.last_mut() {
                Some(t) if t.from == v[m.from] && t.to == v[m.to] && t.hi + 1 == m.j => t.hi = m.j,
                _ => out.push(SetEquationTerm { from: v[m.from], to: v[m.to], lo: m.j, hi: m.j }),
            }
        }
        out
    }

    /// Edge-list export: header `p q family |maps|`, then `from to j` by name.
    pub fn to_text(&self) -> String {
        let poly = self.poly();
        let v = self.graph.vertices();
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {} {}", poly.p(), poly.q(), poly.family().name(), self.maps.len());
        for m in &self.maps {
            let _ = writeln!(s, "{} {} {}", v[m.from].name(), v[m.to].name(), m.j);
        }
        s
    }
}

pub fn build_gifs(g: &NeighborGraph, poly: &TilePoly) -> Result<GifsSystem> {
    let mut maps = Vec::new();
    for e in g.edges() {
        for j in index_set(e.label, poly.q())? {
            maps.push(GifsMap { from: e.from, to: e.to, j });
        }
    }
    maps.sort();
    Ok(GifsSystem { graph: g.clone(), maps })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactMatrix {
    order: Vec<LatticeVec>,
    entries: Vec<Vec<i64>>,
}

impl ContactMatrix {
    pub fn new(order: Vec<LatticeVec>, entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) || (!order.is_empty() && order.len() != n) {
            return Err(TileError::NotSquare);
        }
        for (i, r) in entries.iter().enumerate() {
            if let Some(j) = r.iter().position(|&x| x < 0) {
                return Err(TileError::NegativeEntry(i, j));
            }
        }
        Ok(ContactMatrix { order, entries })
    }

    /// A bare matrix with no vertex labels.
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<Self> {
        ContactMatrix::new(Vec::new(), entries)
    }

    pub fn order(&self) -> &[LatticeVec] {
        &self.order
    }
    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }
    pub fn dim(&self) -> usize {
        self.entries.len()
    }
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Header row of vertex names, then one labeled row per vertex.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("vertex");
        for l in &self.order {
            s.push(',');
            s.push_str(&l.name());
        }
        s.push('\n');
        for (i, row) in self.entries.iter().enumerate() {
            s.push_str(&self.order.get(i).map(|l| l.name()).unwrap_or_else(|| i.to_string()));
            for x in row {
                let _ = write!(s, ",{x}");
            }
            s.push('\n');
        }
        s
    }
}

/// `M[l][l'] = #I_{b1} = |q| - |b1|`, rows in the graph's vertex order.
pub fn contact_matrix(g: &NeighborGraph, poly: &TilePoly) -> Result<ContactMatrix> {
    let gs = build_gifs(g, poly)?;
    Ok(contact_matrix_of(&gs))
}

pub fn contact_matrix_of(gs: &GifsSystem) -> ContactMatrix {
    let n = gs.graph.len();
    let mut m = vec![vec![0i64; n]; n];
    for map in &gs.maps {
        m[map.from][map.to] += 1;
    }
    ContactMatrix { order: gs.graph.vertices().to_vec(), entries: m }
}

/// Strong connectivity of the support graph of `m`.
pub fn is_irreducible(m: &ContactMatrix) -> bool {
    let n = m.dim();
    if n == 0 {
        return false;
    }
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let w = if forward { m.get(i, j) } else { m.get(j, i) };
                if w > 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().all(|&x| x)
    };
    reach(true) && reach(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_poly;
    use crate::appendix::{appendix_contact_table, appendix_set_equations};
    use crate::neighbors::appendix_neighbor_graph;

    fn setup(p: i64, q: i64) -> (TilePoly, NeighborGraph) {
        let poly = validate_poly(p, q).unwrap();
        (poly, appendix_neighbor_graph(&poly))
    }

    #[test]
    fn index_sets() {
        assert_eq!(index_set(-2, 3).unwrap(), 0..=0);
        assert_eq!(index_set(0, 3).unwrap(), 0..=2);
        assert_eq!(index_set(2, 3).unwrap(), 2..=2);
        assert_eq!(index_set(3, 3), Err(TileError::DigitOutOfRange { digit: 3, bound: 2 }));
        assert_eq!(index_set(1, -4).unwrap(), 1..=3);
    }

    #[test]
    fn translations_of_single_edges() {
        let (poly, g) = setup(2, 3);
        let gs = build_gifs(&g, &poly).unwrap();
        let i = |l| g.index_of(&l).unwrap();
        let js = |a, b| gs.maps.iter().filter(|m| m.from == a && m.to == b).map(|m| m.j).collect::<Vec<_>>();
        assert_eq!(js(i(LatticeVec::new(1, 0)), i(LatticeVec::new(1, 1))), [0, 1]);
        assert_eq!(js(i(LatticeVec::new(2, 1)), i(LatticeVec::new(-1, 0))), [0]);

        let (poly, g) = setup(2, 2);
        let gs = build_gifs(&g, &poly).unwrap();
        let i = |l| g.index_of(&l).unwrap();
        let js: Vec<_> = gs
            .maps
            .iter()
            .filter(|m| m.from == i(LatticeVec::new(-2, -1)) && m.to == i(LatticeVec::new(1, 0)))
            .map(|m| m.j)
            .collect();
        assert_eq!(js, [1]);
    }

    #[test]
    fn matrices_match_tables() {
        let (poly, g) = setup(2, 3);
        let m = contact_matrix(&g, &poly).unwrap();
        assert_eq!(m.entries()[0], [0, 2, 1, 0, 0, 0]);
        let (poly, g) = setup(0, 2);
        let m = contact_matrix(&g, &poly).unwrap();
        assert_eq!(m.dim(), 8);
        assert_eq!(m.entries()[0], [0, 2, 0, 0, 1, 0, 0, 1]);
        for (p, q) in [(2, 2), (-3, 5), (1, -5), (0, -3)] {
            let (poly, g) = setup(p, q);
            let (order, table) = appendix_contact_table(&poly);
            let m = contact_matrix(&g, &poly).unwrap();
            assert_eq!(m.order(), &order[..]);
            assert_eq!(m.entries(), &table[..]);
            let mut eq = build_gifs(&g, &poly).unwrap().set_equations();
            let mut want = appendix_set_equations(&poly);
            eq.sort();
            want.sort();
            assert_eq!(eq, want, "({p},{q})");
        }
    }

    #[test]
    fn irreducibility() {
        let (poly, g) = setup(2, 3);
        assert!(is_irreducible(&contact_matrix(&g, &poly).unwrap()));
        let (poly, g) = setup(0, 2);
        assert!(!is_irreducible(&contact_matrix(&g, &poly).unwrap()));
        assert!(is_irreducible(&ContactMatrix::from_rows(vec![vec![1]]).unwrap()));
    }

    #[test]
    fn matrix_validation() {
        assert_eq!(ContactMatrix::from_rows(vec![vec![1, 2]]), Err(TileError::NotSquare));
        assert_eq!(ContactMatrix::from_rows(vec![vec![0, -1], vec![0, 0]]), Err(TileError::NegativeEntry(0, 1)));
    }

    #[test]
    fn csv_header_uses_names() {
        let (poly, g) = setup(2, 3);
        let csv = contact_matrix(&g, &poly).unwrap().to_csv();
        let first = csv.lines().next().unwrap();
        assert_eq!(first, "vertex,v,Av+v,Av+2v,-v,-Av-v,-Av-2v");
        assert_eq!(csv.lines().nth(1).unwrap(), "v,0,2,1,0,0,0");
    }
}
