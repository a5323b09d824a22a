//! Fixture and oracle suites run by `tilelab verify`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{validate_poly, Family, LatticeVec, PolyFlags, TilePoly};
use crate::appendix::{appendix_contact_table, appendix_set_equations};
use crate::error::{Result, TileError};
use crate::gifs::{build_gifs, contact_matrix};
use crate::neighbors::{appendix_neighbor_graph, build_neighbor_graph, origin_on_boundary};
use crate::numbersys::{digit_expansion, is_number_system, neighbor_digit_expansion};
use crate::spectral::{char_poly, cubic_largest_root, dimension_cubic, power_iteration_radius, spectral_radius, IntPoly};

/// Three instances per family (one each for `x^2 +- 2x + 2`).
pub const SAMPLE_GRID: &[(i64, i64)] = &[
    (0, 2),
    (0, 3),
    (0, 5),
    (0, -2),
    (0, -3),
    (0, -5),
    (1, 2),
    (1, 3),
    (1, 5),
    (-1, 2),
    (-1, 3),
    (-1, 5),
    (2, 3),
    (2, 4),
    (3, 5),
    (-2, 3),
    (-2, 4),
    (-3, 5),
    (1, -4),
    (1, -5),
    (2, -6),
    (-1, -4),
    (-1, -5),
    (-2, -6),
    (2, 2),
    (-2, 2),
];

/// One representative per family, in family order.
pub const REPRESENTATIVES: &[(i64, i64)] =
    &[(0, 2), (0, -2), (1, 2), (-1, 2), (2, 3), (-2, 3), (1, -4), (-1, -4), (2, 2), (-2, 2)];

pub fn sample_polys() -> Vec<TilePoly> {
    SAMPLE_GRID.iter().map(|&(p, q)| validate_poly(p, q).expect("sample grid is disk-like")).collect()
}

/// Disk-like expanding pairs with `p` in `[-6, 6]`, `q` in `[2, 12]`.
pub fn positive_q_grid() -> Vec<TilePoly> {
    (2..=12)
        .flat_map(|q| (-6..=6).map(move |p| (p, q)))
        .filter(|&(p, q)| {
            let f = PolyFlags::of(p, q);
            f.expanding && f.disk_like
        })
        .map(|(p, q)| validate_poly(p, q).expect("flags checked"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Suite {
    AppendixA,
    AppendixB,
    AppendixC,
    Theorem26,
    Theorem39,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::AppendixA, Suite::AppendixB, Suite::AppendixC, Suite::Theorem26, Suite::Theorem39];

    pub fn name(self) -> &'static str {
        match self {
            Suite::AppendixA => "appendixA",
            Suite::AppendixB => "appendixB",
            Suite::AppendixC => "appendixC",
            Suite::Theorem26 => "theorem26",
            Suite::Theorem39 => "theorem39",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = TileError;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| TileError::Parse(format!("unknown suite {s}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub suite: Suite,
    pub case: String,
    pub passed: bool,
    pub diff: Vec<String>,
}

impl CaseResult {
    fn new(suite: Suite, poly: &TilePoly, diff: Vec<String>) -> Self {
        CaseResult { suite, case: format!("({}, {}) {}", poly.p(), poly.q(), poly), passed: diff.is_empty(), diff }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub cases: Vec<CaseResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.passed).count()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            s.push_str(&format!("{} {} {}\n", if c.passed { "ok  " } else { "FAIL" }, c.suite, c.case));
            for d in &c.diff {
                s.push_str(&format!("     {d}\n"));
            }
        }
        s.push_str(&format!("{} cases, {} failed\n", self.cases.len(), self.failures()));
        s
    }
}

fn err_diff(e: TileError) -> Vec<String> {
    vec![format!("error: {e}")]
}

fn edge_name(t: &(LatticeVec, i64, LatticeVec)) -> String {
    format!("{} -[{}]-> {}", t.0.name(), t.1, t.2.name())
}

fn check_appendix_a(poly: &TilePoly) -> Vec<String> {
    let built = match build_neighbor_graph(poly) {
        Ok(g) => g,
        Err(e) => return err_diff(e),
    };
    let want = appendix_neighbor_graph(poly);
    let mut diff = Vec::new();
    let bv: BTreeSet<_> = built.vertices().iter().copied().collect();
    let wv: BTreeSet<_> = want.vertices().iter().copied().collect();
    for l in bv.difference(&wv) {
        diff.push(format!("extra vertex {}", l.name()));
    }
    for l in wv.difference(&bv) {
        diff.push(format!("missing vertex {}", l.name()));
    }
    let (bt, wt) = (built.triples(), want.triples());
    for t in bt.difference(&wt) {
        diff.push(format!("extra edge {}", edge_name(t)));
    }
    for t in wt.difference(&bt) {
        diff.push(format!("missing edge {}", edge_name(t)));
    }
    diff
}

fn check_appendix_b(poly: &TilePoly) -> Vec<String> {
    let built = build_neighbor_graph(poly).and_then(|g| build_gifs(&g, poly));
    let gs = match built {
        Ok(g) => g,
        Err(e) => return err_diff(e),
    };
    let mut diff = Vec::new();
    let got: BTreeSet<_> = gs.set_equations().into_iter().collect();
    let want: BTreeSet<_> = appendix_set_equations(poly).into_iter().collect();
    let show = |t: &crate::appendix::SetEquationTerm| {
        format!("A T_{{{}}} ⊇ U_{{j={}..{}}} (T_{{{}}} + jv)", t.from.name(), t.lo, t.hi, t.to.name())
    };
    for t in got.difference(&want) {
        diff.push(format!("extra {}", show(t)));
    }
    for t in want.difference(&got) {
        diff.push(format!("missing {}", show(t)));
    }
    // every piece T_{l'} + jv of A T_l sits in both T + D and T + D + A l
    let qa = poly.digit_count();
    let v = gs.graph.vertices();
    for m in &gs.maps {
        let d = v[m.to] + LatticeVec::new(m.j, 0) - crate::algebra::apply_a(v[m.from], poly);
        if !(0..qa).contains(&m.j) || d.delta != 0 || !(0..qa).contains(&d.gamma) {
            diff.push(format!("piece T_{{{}}}+{}v leaves A T_{{{}}}", v[m.to].name(), m.j, v[m.from].name()));
        }
    }
    diff
}

fn check_appendix_c(poly: &TilePoly) -> Vec<String> {
    let m = match build_neighbor_graph(poly).and_then(|g| contact_matrix(&g, poly)) {
        Ok(m) => m,
        Err(e) => return err_diff(e),
    };
    let (order, table) = appendix_contact_table(poly);
    let mut diff = Vec::new();
    if m.order() != &order[..] {
        diff.push("vertex order differs".to_string());
    }
    for (i, (a, b)) in m.entries().iter().zip(&table).enumerate() {
        if a != b {
            diff.push(format!("row {}: got {:?}, want {:?}", order[i].name(), a, b));
        }
    }
    diff
}

/// Witnesses of the four equivalent number-system conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberSystemWitnesses {
    pub arithmetic: bool,
    pub origin_interior: bool,
    pub box_terminates: bool,
    pub neighbors_represented: bool,
}

impl NumberSystemWitnesses {
    pub fn consistent(&self) -> bool {
        let a = self.arithmetic;
        self.origin_interior == a && self.box_terminates == a && self.neighbors_represented == a
    }
}

pub fn number_system_witnesses(poly: &TilePoly, arithmetic: &dyn Fn(&TilePoly) -> bool, radius: i64) -> Result<NumberSystemWitnesses> {
    let g = build_neighbor_graph(poly)?;
    let qa = poly.digit_count();
    let box_terminates = (-radius..=radius).all(|d| {
        (-radius..=radius).all(|gm| {
            let ell = LatticeVec::new(gm, d);
            digit_expansion(ell, poly).is_ok_and(|w| {
                w.digits().iter().all(|x| (0..qa).contains(x)) && crate::algebra::eval_integer_word(&w, poly) == ell
            })
        })
    });
    let neighbors_represented = g
        .vertices()
        .iter()
        .all(|l| neighbor_digit_expansion(*l, poly).is_ok_and(|r| r.evaluate(poly) == *l));
    Ok(NumberSystemWitnesses {
        arithmetic: arithmetic(poly),
        origin_interior: !origin_on_boundary(&g),
        box_terminates,
        neighbors_represented,
    })
}

/// Four-way equivalence check with an injectable arithmetic predicate.
pub fn verify_theorem26_with(arithmetic: &dyn Fn(&TilePoly) -> bool) -> Vec<CaseResult> {
    let mut polys = positive_q_grid();
    polys.extend(sample_polys().into_iter().filter(|p| p.q() < 0));
    polys
        .iter()
        .map(|poly| {
            let diff = match number_system_witnesses(poly, arithmetic, 10) {
                Ok(w) if w.consistent() => Vec::new(),
                Ok(w) => vec![format!(
                    "arithmetic={} origin_interior={} box_terminates={} neighbors_represented={}",
                    w.arithmetic, w.origin_interior, w.box_terminates, w.neighbors_represented
                )],
                Err(e) => err_diff(e),
            };
            CaseResult::new(Suite::Theorem26, poly, diff)
        })
        .collect()
}

fn linear(c0: i64, c1: i64) -> IntPoly {
    IntPoly::new(vec![c0, c1])
}

fn quad(c0: i64, c1: i64) -> IntPoly {
    IntPoly::new(vec![c0, c1, 1])
}

/// Factored characteristic polynomial of the contact matrix, for the
/// families with a closed form.
pub fn expected_char_poly(poly: &TilePoly) -> Option<IntPoly> {
    let (pa, qa) = (poly.p().abs(), poly.digit_count());
    let cubic = dimension_cubic(pa, qa);
    let f = match poly.family() {
        Family::PlusXPlusQ | Family::PlusPxPlusQ | Family::PlusTwoXPlusTwo => {
            IntPoly::product(&[linear(-1, 1), quad(qa, pa), cubic])
        }
        Family::MinusXPlusQ | Family::MinusPxPlusQ | Family::MinusTwoXPlusTwo => {
            IntPoly::product(&[linear(1, 1), quad(qa, -pa), cubic])
        }
        Family::SquarePlusQ => IntPoly::product(&[
            quad(-qa, 0),
            quad(qa, 0),
            linear(-1, 1),
            linear(1, 1),
            quad(1, 0),
        ]),
        Family::SquareMinusQ => IntPoly::product(&[
            quad(-qa, 0),
            quad(-qa, 0),
            linear(1, 1),
            linear(-1, 1),
            linear(-1, 1),
            linear(-1, 1),
        ]),
        Family::PlusPxMinusQ | Family::MinusPxMinusQ => return None,
    };
    Some(f)
}

fn check_theorem39(poly: &TilePoly) -> Vec<String> {
    let m = match build_neighbor_graph(poly).and_then(|g| contact_matrix(&g, poly)) {
        Ok(m) => m,
        Err(e) => return err_diff(e),
    };
    let mut diff = Vec::new();
    let cp = match char_poly(&m) {
        Ok(c) => c,
        Err(e) => return err_diff(e),
    };
    if let Some(want) = expected_char_poly(poly) {
        if cp != want {
            diff.push(format!("char poly {cp} != {want}"));
        }
    }
    let rho = match spectral_radius(&m) {
        Ok(r) => r,
        Err(e) => return err_diff(e),
    };
    let rho_power = power_iteration_radius(&m, 200);
    if (rho - rho_power).abs() > 1e-6 {
        diff.push(format!("rho {rho} disagrees with power iteration {rho_power}"));
    }
    if poly.similarity() {
        let c = cubic_largest_root(poly.p(), poly.q());
        if (rho - c).abs() > 1e-9 {
            diff.push(format!("rho {rho} != cubic root {c}"));
        }
    }
    diff
}

pub fn verify(suite: Suite) -> VerifyReport {
    let mut cases = Vec::new();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in suites {
        match s {
            Suite::AppendixA => cases.extend(sample_polys().iter().map(|p| CaseResult::new(s, p, check_appendix_a(p)))),
            Suite::AppendixB => cases.extend(sample_polys().iter().map(|p| CaseResult::new(s, p, check_appendix_b(p)))),
            Suite::AppendixC => cases.extend(sample_polys().iter().map(|p| CaseResult::new(s, p, check_appendix_c(p)))),
            Suite::Theorem26 => cases.extend(verify_theorem26_with(&is_number_system)),
            Suite::Theorem39 => cases.extend(sample_polys().iter().map(|p| CaseResult::new(s, p, check_theorem39(p)))),
            Suite::All => unreachable!("expanded above"),
        }
    }
    VerifyReport { cases }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("appendixD".parse::<Suite>().is_err());
    }

    #[test]
    fn grid_is_valid_and_covers_families() {
        let fams: BTreeSet<_> = sample_polys().iter().map(|p| p.family()).collect();
        assert_eq!(fams.len(), 10);
        for (i, &(p, q)) in REPRESENTATIVES.iter().enumerate() {
            assert_eq!(validate_poly(p, q).unwrap().family().number(), i + 1);
        }
    }

    #[test]
    fn fixture_suites_pass() {
        for s in [Suite::AppendixA, Suite::AppendixB, Suite::AppendixC, Suite::Theorem39] {
            let r = verify(s);
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn negated_predicate_is_caught() {
        let cases = verify_theorem26_with(&|p: &TilePoly| !is_number_system(p));
        assert!(cases.iter().all(|c| !c.passed));
    }
}
