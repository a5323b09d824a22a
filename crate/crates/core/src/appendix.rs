//! Hard-coded reference tables for the ten disk-like families.
//!
//! Every table is written in terms of `P = |p|` and `Q = |q|`, the
//! parameters of `x^2 +- P x +- Q`. For each family we record
//!
//! * the vertex order used by the contact-matrix tables,
//! * the labeled neighbor-graph edges `(from, b1, to)`,
//! * the boundary set equations `A T_from = U_{j=lo..hi} (T_to + j v)`,
//! * the contact matrix entries in that vertex order.
//!
//! Four printed entries disagree with `l' = A l - b1 v` or with the contact
//! matrices; the tables below carry the corrected values and mark them.

use crate::algebra::{Family, LatticeVec, TilePoly};

/// One union block `U_{j=lo..=hi} (T_to + j v)` in the equation for `A T_from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetEquationTerm {
    pub from: LatticeVec,
    pub to: LatticeVec,
    pub lo: i64,
    pub hi: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTables {
    pub family: Family,
    pub order: Vec<LatticeVec>,
    pub edges: Vec<(LatticeVec, i64, LatticeVec)>,
    pub equations: Vec<SetEquationTerm>,
    pub matrix: Vec<Vec<i64>>,
}

const fn lv(gamma: i64, delta: i64) -> LatticeVec {
    LatticeVec::new(gamma, delta)
}

fn term(from: LatticeVec, to: LatticeVec, lo: i64, hi: i64) -> SetEquationTerm {
    SetEquationTerm { from, to, lo, hi }
}

/// Reference tables for `poly`'s family with `P`, `Q` substituted.
pub fn family_tables(poly: &TilePoly) -> FamilyTables {
    let pp = poly.p().abs();
    let qq = poly.digit_count();
    let family = poly.family();
    let (order, edges, equations, matrix) = match family {
        Family::SquarePlusQ => {
            let (v, av, avmv, avpv) = (lv(1, 0), lv(0, 1), lv(-1, 1), lv(1, 1));
            let order = vec![v, av, -v, -av, avmv, -avpv, -avmv, avpv];
            let edges = vec![
                (v, 1, avmv),
                (v, 0, av),
                (v, -1, avpv),
                (avmv, -(qq - 1), -avpv),
                (av, -(qq - 1), -v),
                (avpv, -(qq - 1), avmv),
                (-v, -1, -avmv),
                (-v, 0, -av),
                (-v, 1, -avpv),
                (-avmv, qq - 1, avpv),
                (-av, qq - 1, v),
                (-avpv, qq - 1, -avmv),
            ];
            let equations = vec![
                term(v, avmv, 1, qq - 1),
                term(v, av, 0, qq - 1),
                term(v, avpv, 0, qq - 2),
                term(avmv, -avpv, 0, 0),
                term(av, -v, 0, 0),
                term(avpv, avmv, 0, 0),
                term(-v, -avmv, 0, qq - 2),
                term(-v, -av, 0, qq - 1),
                term(-v, -avpv, 1, qq - 1),
                term(-avmv, avpv, qq - 1, qq - 1),
                term(-av, v, qq - 1, qq - 1),
                term(-avpv, -avmv, qq - 1, qq - 1),
            ];
            let matrix = vec![
                vec![0, qq, 0, 0, qq - 1, 0, 0, qq - 1],
                vec![0, 0, 1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, qq, 0, qq - 1, qq - 1, 0],
                vec![1, 0, 0, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 0, 1, 0, 0, 0],
            ];
            (order, edges, equations, matrix)
        }
        Family::SquareMinusQ => {
            let (v, av, avmv, avpv) = (lv(1, 0), lv(0, 1), lv(-1, 1), lv(1, 1));
            let order = vec![v, av, -v, -av, avmv, -avmv, avpv, -avpv];
            let edges = vec![
                (v, 1, avmv),
                (v, 0, av),
                (v, -1, avpv),
                (av, qq - 1, v),
                (avmv, qq - 1, -avmv),
                (-avmv, -(qq - 1), avmv),
                (-v, -1, -avmv),
                (-v, 0, -av),
                (-v, 1, -avpv),
                (-av, -(qq - 1), -v),
                (avpv, qq - 1, avpv),
                (-avpv, -(qq - 1), -avpv),
            ];
            let equations = vec![
                term(v, avmv, 1, qq - 1),
                term(v, av, 0, qq - 1),
                term(v, avpv, 0, qq - 2),
                term(avmv, -avmv, qq - 1, qq - 1),
                term(av, v, qq - 1, qq - 1),
                term(avpv, avpv, qq - 1, qq - 1),
                term(-v, -avmv, 0, qq - 2),
                term(-v, -av, 0, qq - 1),
                term(-v, -avpv, 1, qq - 1),
                term(-avmv, avmv, 0, 0),
                term(-av, -v, 0, 0),
                term(-avpv, -avpv, 0, 0),
            ];
            let matrix = vec![
                vec![0, qq, 0, 0, qq - 1, 0, qq - 1, 0],
                vec![1, 0, 0, 0, 0, 0, 0, 0],
                vec![0, 0, 0, qq, 0, qq - 1, 0, qq - 1],
                vec![0, 0, 1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 0, 0, 0, 1],
            ];
            (order, edges, equations, matrix)
        }
        Family::PlusXPlusQ => {
            let (v, av, avpv) = (lv(1, 0), lv(0, 1), lv(1, 1));
            let order = vec![v, av, avpv, -v, -av, -avpv];
            let edges = vec![
                (v, 0, av),
                (v, -1, avpv),
                (av, -(qq - 1), -avpv),
                (avpv, -(qq - 1), -v),
                (-v, 0, -av),
                (-v, 1, -avpv),
                (-av, qq - 1, avpv),
                (-avpv, qq - 1, v),
            ];
            let equations = vec![
                term(v, av, 0, qq - 1),
                term(v, avpv, 0, qq - 2),
                term(av, -avpv, 0, 0),
                term(avpv, -v, 0, 0),
                term(-v, -av, 0, qq - 1),
                term(-v, -avpv, 1, qq - 1),
                term(-av, avpv, qq - 1, qq - 1),
                term(-avpv, v, qq - 1, qq - 1),
            ];
            let matrix = vec![
                vec![0, qq, qq - 1, 0, 0, 0],
                vec![0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, qq, qq - 1],
                vec![0, 0, 1, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0],
            ];
            (order, edges, equations, matrix)
        }
        Family::MinusXPlusQ => {
            let (v, av, avmv) = (lv(1, 0), lv(0, 1), lv(-1, 1));
            let order = vec![v, av, avmv, -v, -av, -avmv];
            // corrected: the printed figure labels v -> Av-v by -1 and
            // -v -> -Av+v by 1; A v - b1 v = Av - v forces b1 = 1.
            let edges = vec![
                (v, 0, av),
                (v, 1, avmv),
                (av, -(qq - 1), avmv),
                (avmv, -(qq - 1), -v),
                (-v, 0, -av),
                (-v, -1, -avmv),
                (-av, qq - 1, -avmv),
                (-avmv, qq - 1, v),
            ];
            // corrected index ranges for the two edges above
            let equations = vec![
                term(v, av, 0, qq - 1),
                term(v, avmv, 1, qq - 1),
                term(av, avmv, 0, 0),
                term(avmv, -v, 0, 0),
                term(-v, -av, 0, qq - 1),
                term(-v, -avmv, 0, qq - 2),
                term(-av, -avmv, qq - 1, qq - 1),
                term(-avmv, v, qq - 1, qq - 1),
            ];
            let matrix = vec![
                vec![0, qq, qq - 1, 0, 0, 0],
                vec![0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, qq, qq - 1],
                vec![0, 0, 0, 0, 0, 1],
                vec![1, 0, 0, 0, 0, 0],
            ];
            (order, edges, equations, matrix)
        }
        Family::PlusPxPlusQ => {
            let (v, u2, u3) = (lv(1, 0), lv(pp - 1, 1), lv(pp, 1));
            let order = vec![v, u2, u3, -v, -u2, -u3];
            let edges = vec![
                (v, -(pp - 1), u2),
                (v, -pp, u3),
                (u2, -(qq - pp), -u3),
                (u2, -(qq - pp + 1), -u2),
                (u3, -(qq - 1), -v),
                (-v, pp - 1, -u2),
                (-v, pp, -u3),
                (-u2, qq - pp, u3),
                (-u2, qq - pp + 1, u2),
                (-u3, qq - 1, v),
            ];
            let equations = vec![
                term(v, u2, 0, qq - pp),
                term(v, u3, 0, qq - pp - 1),
                term(u2, -u2, 0, pp - 2),
                term(u2, -u3, 0, pp - 1),
                term(u3, -v, 0, 0),
                term(-v, -u2, pp - 1, qq - 1),
                term(-v, -u3, pp, qq - 1),
                term(-u2, u2, qq - pp + 1, qq - 1),
                term(-u2, u3, qq - pp, qq - 1),
                term(-u3, v, qq - 1, qq - 1),
            ];
            let matrix = vec![
                vec![0, qq - pp + 1, qq - pp, 0, 0, 0],
                vec![0, 0, 0, 0, pp - 1, pp],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, qq - pp + 1, qq - pp],
                vec![0, pp - 1, pp, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0],
            ];
            (order, edges, equations, matrix)
        }
        Family::MinusPxPlusQ => {
            let (v, u2, u3) = (lv(1, 0), lv(-(pp - 1), 1), lv(-pp, 1));
            let order = vec![v, u2, u3, -v, -u2, -u3];
            let edges = vec![
                (v, pp - 1, u2),
                (v, pp, u3),
                (u2, -(qq - pp + 1), u2),
                (u2, -(qq - pp), u3),
                (u3, -(qq - 1), -v),
                (-v, -(pp - 1), -u2),
                (-v, -pp, -u3),
                (-u2, qq - pp + 1, -u2),
                (-u2, qq - pp, -u3),
                (-u3, qq - 1, v),
            ];
            let equations = vec![
                term(v, u2, pp - 1, qq - 1),
                term(v, u3, pp, qq - 1),
                // corrected: printed upper limit is p, the contact entry p-1 needs p-2
                term(u2, u2, 0, pp - 2),
                term(u2, u3, 0, pp - 1),
                term(u3, -v, 0, 0),
                term(-v, -u2, 0, qq - pp),
                term(-v, -u3, 0, qq - pp - 1),
                term(-u2, -u2, qq - pp + 1, qq - 1),
                term(-u2, -u3, qq - pp, qq - 1),
                term(-u3, v, qq - 1, qq - 1),
            ];
            let matrix = vec![
                vec![0, qq - pp + 1, qq - pp, 0, 0, 0],
                vec![0, pp - 1, pp, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, qq - pp + 1, qq - pp],
                vec![0, 0, 0, 0, pp - 1, pp],
                vec![1, 0, 0, 0, 0, 0],
            ];
            (order, edges, equations, matrix)
        }
        Family::PlusPxMinusQ => {
            let (v, u2, u3) = (lv(1, 0), lv(pp, 1), lv(pp + 1, 1));
            let order = vec![v, u2, u3, -v, -u2, -u3];
            let edges = vec![
                (v, -pp, u2),
                (v, -(pp + 1), u3),
                (u2, qq - 1, v),
                (u3, qq - pp, u2),
                (u3, qq - pp - 1, u3),
                (-v, pp, -u2),
                (-v, pp + 1, -u3),
                (-u2, -(qq - 1), -v),
                (-u3, -(qq - pp), -u2),
                (-u3, -(qq - pp - 1), -u3),
            ];
            let equations = vec![
                term(v, u2, 0, qq - pp - 1),
                term(v, u3, 0, qq - pp - 2),
                term(u2, v, qq - 1, qq - 1),
                term(u3, u2, qq - pp, qq - 1),
                term(u3, u3, qq - pp - 1, qq - 1),
                term(-v, -u2, pp, qq - 1),
                term(-v, -u3, pp + 1, qq - 1),
                // corrected: printed target is T_{u1}; the edge goes to -v
                term(-u2, -v, 0, 0),
                term(-u3, -u2, 0, pp - 1),
                term(-u3, -u3, 0, pp),
            ];
            let matrix = vec![
                vec![0, qq - pp, qq - pp - 1, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0],
                vec![0, pp, pp + 1, 0, 0, 0],
                vec![0, 0, 0, 0, qq - pp, qq - pp - 1],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, pp, pp + 1],
            ];
            (order, edges, equations, matrix)
        }
        Family::MinusPxMinusQ => {
            let (v, u2, u3) = (lv(1, 0), lv(-pp, 1), lv(-(pp + 1), 1));
            let order = vec![v, u2, u3, -v, -u2, -u3];
            let edges = vec![
                (v, pp, u2),
                (v, pp + 1, u3),
                (u2, qq - 1, v),
                (u3, qq - pp, -u2),
                (u3, qq - pp - 1, -u3),
                (-v, -pp, -u2),
                (-v, -(pp + 1), -u3),
                (-u2, -(qq - 1), -v),
                (-u3, -(qq - pp), u2),
                (-u3, -(qq - pp - 1), u3),
            ];
            let equations = vec![
                term(v, u2, pp, qq - 1),
                term(v, u3, pp + 1, qq - 1),
                term(u2, v, qq - 1, qq - 1),
                term(u3, -u2, qq - pp, qq - 1),
                term(u3, -u3, qq - pp - 1, qq - 1),
                term(-v, -u2, 0, qq - pp - 1),
                term(-v, -u3, 0, qq - pp - 2),
                term(-u2, -v, 0, 0),
                term(-u3, u2, 0, pp - 1),
                // corrected: printed upper limit is p-2, the contact entry p+1 needs p
                term(-u3, u3, 0, pp),
            ];
            let matrix = vec![
                vec![0, qq - pp, qq - pp - 1, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, pp, pp + 1],
                vec![0, 0, 0, 0, qq - pp, qq - pp - 1],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, pp, pp + 1, 0, 0, 0],
            ];
            (order, edges, equations, matrix)
        }
        Family::PlusTwoXPlusTwo => {
            let (v, u2, u3) = (lv(1, 0), lv(1, 1), lv(2, 1));
            let order = vec![v, u2, u3, -v, -u2, -u3];
            let edges = vec![
                (v, -1, u2),
                (u2, -1, -u2),
                (u2, 0, -u3),
                (u3, -1, -v),
                (-v, 1, -u2),
                (-u2, 1, u2),
                (-u2, 0, u3),
                (-u3, 1, v),
            ];
            let equations = vec![
                term(v, u2, 0, 0),
                term(u2, -u2, 0, 0),
                term(u2, -u3, 0, 1),
                term(u3, -v, 0, 0),
                term(-v, -u2, 1, 1),
                term(-u2, u2, 1, 1),
                term(-u2, u3, 0, 1),
                term(-u3, v, 1, 1),
            ];
            let matrix = vec![
                vec![0, 1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 1, 2],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 1, 0],
                vec![0, 1, 2, 0, 0, 0],
                vec![1, 0, 0, 0, 0, 0],
            ];
            (order, edges, equations, matrix)
        }
        Family::MinusTwoXPlusTwo => {
            let (v, u2, u3) = (lv(1, 0), lv(-1, 1), lv(-2, 1));
            let order = vec![v, u2, u3, -v, -u2, -u3];
            let edges = vec![
                (v, 1, u2),
                (u2, -1, u2),
                (u2, 0, u3),
                (u3, -1, -v),
                (-v, -1, -u2),
                (-u2, 1, -u2),
                (-u2, 0, -u3),
                (-u3, 1, v),
            ];
            let equations = vec![
                term(v, u2, 1, 1),
                term(u2, u2, 0, 0),
                term(u2, u3, 0, 1),
                term(u3, -v, 0, 0),
                term(-v, -u2, 0, 0),
                term(-u2, -u2, 1, 1),
                term(-u2, -u3, 0, 1),
                term(-u3, v, 1, 1),
            ];
            let matrix = vec![
                vec![0, 1, 0, 0, 0, 0],
                vec![0, 1, 2, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 1, 2],
                vec![1, 0, 0, 0, 0, 0],
            ];
            (order, edges, equations, matrix)
        }
    };
    FamilyTables { family, order, edges, equations, matrix }
}

/// Vertex order of the contact-matrix table for `poly`'s family.
pub fn vertex_order(poly: &TilePoly) -> Vec<LatticeVec> {
    family_tables(poly).order
}

/// Rank of `ell` in the reference order; vertices outside it sort last.
pub fn order_rank(order: &[LatticeVec], ell: &LatticeVec) -> (usize, LatticeVec) {
    (order.iter().position(|x| x == ell).unwrap_or(order.len()), *ell)
}

/// The six-or-eight-row contact table with `P`, `Q` substituted.
pub fn appendix_contact_table(poly: &TilePoly) -> (Vec<LatticeVec>, Vec<Vec<i64>>) {
    let t = family_tables(poly);
    (t.order, t.matrix)
}

/// The boundary set equations for `poly`'s family.
pub fn appendix_set_equations(poly: &TilePoly) -> Vec<SetEquationTerm> {
    family_tables(poly).equations
}
