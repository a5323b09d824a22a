//! Number-system property and digit representations `l = sum_i d_i A^i v`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{eval_integer_word, Family, LatticeVec, RadixWord, TilePoly};
use crate::appendix::family_tables;
use crate::error::{Result, TileError};

/// Digits `d_0, d_1, ...` over `{0, .., q-1}` with `sum d_i A^i v = subject`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Representation {
    pub digits: RadixWord,
    pub subject: LatticeVec,
}

impl Representation {
    pub fn evaluate(&self, poly: &TilePoly) -> LatticeVec {
        eval_integer_word(&self.digits, poly)
    }
}

/// `(A, D)` is a number system exactly when `p >= -1` and `q >= 2`.
pub fn is_number_system(poly: &TilePoly) -> bool {
    poly.p() >= -1 && poly.q() >= 2
}

fn step_cap(ell: &LatticeVec) -> usize {
    let norm = ell.sup_norm() as f64;
    64 + (8.0 * (1.0 + norm).log2()).ceil() as usize
}

/// Division algorithm without the number-system precondition.
///
/// Each step takes `a = gamma mod |q|` and moves to `A^{-1}(l - a v)`.
/// Fails with `NonTermination` on a repeated state or past the step cap.
pub fn digit_expansion(ell: LatticeVec, poly: &TilePoly) -> Result<RadixWord> {
    let (p, q) = (poly.p(), poly.q());
    let qa = poly.digit_count();
    let cap = step_cap(&ell);
    let mut seen = HashSet::new();
    let mut digits = Vec::new();
    let mut cur = ell;
    while !cur.is_zero() {
        if digits.len() >= cap || !seen.insert(cur) {
            return Err(TileError::NonTermination(ell));
        }
        let a = cur.gamma.rem_euclid(qa);
        let beta = -(cur.gamma - a) / q;
        digits.push(a);
        cur = LatticeVec::new(cur.delta + p * beta, beta);
    }
    Ok(RadixWord(digits))
}

pub fn represent(ell: LatticeVec, poly: &TilePoly) -> Result<Representation> {
    if !is_number_system(poly) {
        return Err(TileError::NotANumberSystem { p: poly.p(), q: poly.q() });
    }
    Ok(Representation { digits: digit_expansion(ell, poly)?, subject: ell })
}

fn is_neighbor(ell: &LatticeVec, poly: &TilePoly) -> bool {
    family_tables(poly).order.contains(ell)
}

/// `l = sum_{i=0..k} b_i A^i v` with `|b_i| <= |q|-1` and `b_k = +-1`.
///
/// The plain coordinates `[gamma, delta]` already work except for
/// `+-(Av +- 2v)` under `x^2 +- 2x + 2`, which need `k = 3`.
pub fn neighbor_delta_form(ell: LatticeVec, poly: &TilePoly) -> Result<RadixWord> {
    if !is_neighbor(&ell, poly) {
        return Err(TileError::NotANeighbor(ell));
    }
    let bmax = poly.max_difference_digit();
    let word = if ell.delta == 0 {
        vec![ell.gamma]
    } else if ell.gamma.abs() <= bmax {
        vec![ell.gamma, ell.delta]
    } else {
        // Av + 2sv = A^3 v + s A^2 v + Av, with s = sign(p)
        let s = poly.p().signum();
        let sign = ell.delta;
        vec![0, sign, sign * s, sign]
    };
    let word = RadixWord(word);
    debug_assert_eq!(eval_integer_word(&word, poly), ell);
    Ok(word)
}

/// Closed-form `D`-digit words for the neighbors with a negative
/// coordinate, one table per number-system family.
pub(crate) fn closed_form_digits(ell: LatticeVec, poly: &TilePoly) -> Option<Vec<i64>> {
    let (p, q) = (poly.p(), poly.q());
    let key = (ell.gamma, ell.delta);
    let w = match poly.family() {
        Family::SquarePlusQ => match key {
            (-1, 1) => vec![q - 1, 1, 1],
            (-1, 0) => vec![q - 1, 0, 1],
            (0, -1) => vec![0, q - 1, 0, 1],
            (1, -1) => vec![1, q - 1, 0, 1],
            (-1, -1) => vec![q - 1, q - 1, 1, 1],
            _ => return None,
        },
        Family::PlusXPlusQ => match key {
            (-1, 0) => vec![q - 1, 1, 1],
            (0, -1) => vec![0, q - 1, 1, 1],
            (-1, -1) => vec![q - 1, 0, 1],
            _ => return None,
        },
        Family::PlusPxPlusQ => match key {
            (-1, 0) => vec![q - 1, p, 1],
            (g, -1) if g == -(p - 1) => vec![q - p + 1, p - 1, 1],
            (g, -1) if g == -p => vec![q - p, p - 1, 1],
            _ => return None,
        },
        Family::PlusTwoXPlusTwo => match key {
            (2, 1) => vec![0, 1, 1, 1],
            (-1, 0) => vec![1, 0, 1, 1, 1],
            (-1, -1) => vec![1, 1, 1],
            (-2, -1) => vec![0, 1, 1],
            _ => return None,
        },
        Family::MinusXPlusQ => match key {
            (-1, 1) => vec![q - 1, 0, 1],
            (-1, 0) => vec![q - 1, q - 1, 0, 1],
            (0, -1) => vec![0, q - 1, q - 1, 0, 1],
            (1, -1) => vec![1, q - 1, q - 1, 0, 1],
            _ => return None,
        },
        _ => return None,
    };
    Some(w)
}

/// Digit representation of a neighbor, preferring the closed-form
/// identities and falling back to the division algorithm.
pub fn neighbor_digit_form(ell: LatticeVec, poly: &TilePoly) -> Result<Representation> {
    if !is_number_system(poly) {
        return Err(TileError::NotANumberSystem { p: poly.p(), q: poly.q() });
    }
    neighbor_digit_expansion(ell, poly)
}

/// [`neighbor_digit_form`] without the number-system precondition; fails
/// with `NonTermination` when the division algorithm cycles.
pub fn neighbor_digit_expansion(ell: LatticeVec, poly: &TilePoly) -> Result<Representation> {
    if !is_neighbor(&ell, poly) {
        return Err(TileError::NotANeighbor(ell));
    }
    if let Some(w) = closed_form_digits(ell, poly) {
        let rep = Representation { digits: RadixWord(w), subject: ell };
        if rep.evaluate(poly) == ell {
            return Ok(rep);
        }
    }
    Ok(Representation { digits: digit_expansion(ell, poly)?, subject: ell })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_poly;

    fn poly(p: i64, q: i64) -> TilePoly {
        validate_poly(p, q).unwrap()
    }

    #[test]
    fn verdicts() {
        assert!(is_number_system(&poly(1, 2)));
        assert!(!is_number_system(&poly(-2, 2)));
        assert!(!is_number_system(&poly(0, -2)));
    }

    #[test]
    fn represent_examples() {
        let mv = LatticeVec::new(-1, 0);
        assert_eq!(represent(mv, &poly(2, 3)).unwrap().digits.digits(), &[2, 2, 1]);
        assert_eq!(represent(mv, &poly(-1, 2)).unwrap().digits.digits(), &[1, 1, 0, 1]);
        assert!(represent(LatticeVec::ZERO, &poly(2, 3)).unwrap().digits.is_empty());
        assert_eq!(
            represent(mv, &poly(-2, 2)),
            Err(TileError::NotANumberSystem { p: -2, q: 2 })
        );
    }

    #[test]
    fn division_loops_without_number_system() {
        // the division map has a nonzero cycle through -v
        assert!(matches!(digit_expansion(LatticeVec::new(-1, 0), &poly(-2, 2)), Err(TileError::NonTermination(_))));
    }

    #[test]
    fn delta_forms() {
        assert_eq!(neighbor_delta_form(LatticeVec::new(2, 1), &poly(2, 3)).unwrap().digits(), &[2, 1]);
        assert_eq!(neighbor_delta_form(LatticeVec::new(2, 1), &poly(2, 2)).unwrap().digits(), &[0, 1, 1, 1]);
        assert_eq!(neighbor_delta_form(LatticeVec::new(-2, 1), &poly(-2, 2)).unwrap().digits(), &[0, 1, -1, 1]);
        assert_eq!(neighbor_delta_form(LatticeVec::new(-1, 0), &poly(2, 3)).unwrap().digits(), &[-1]);
        assert_eq!(neighbor_delta_form(LatticeVec::new(5, 0), &poly(2, 3)), Err(TileError::NotANeighbor(LatticeVec::new(5, 0))));
    }

    #[test]
    fn digit_form_examples() {
        let f = |p, q, g, d| neighbor_digit_form(LatticeVec::new(g, d), &poly(p, q)).unwrap().digits.0;
        assert_eq!(f(0, 2, -1, 0), [1, 0, 1]);
        assert_eq!(f(1, 2, -1, -1), [1, 0, 1]);
        assert_eq!(f(2, 2, -2, -1), [0, 1, 1]);
    }

    #[test]
    fn closed_forms_evaluate_exactly() {
        for (p, q) in [(0, 2), (0, 5), (1, 2), (1, 7), (2, 3), (3, 8), (2, 2), (-1, 2), (-1, 6)] {
            let poly = poly(p, q);
            for ell in family_tables(&poly).order {
                if let Some(w) = closed_form_digits(ell, &poly) {
                    assert!(w.iter().all(|d| (0..q).contains(d)), "({p},{q}) {ell}");
                    assert_eq!(eval_integer_word(&RadixWord(w), &poly), ell, "({p},{q}) {ell}");
                } else {
                    assert!(ell.gamma >= 0 && ell.delta >= 0, "({p},{q}) {ell} needs a closed form");
                }
            }
        }
    }
}
