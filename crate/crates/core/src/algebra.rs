//! Exact arithmetic for the companion action on the lattice `Z v + Z Av`.
//!
//! The expanding matrix is always realized as the companion matrix of
//! `x^2 + p x + q` acting on coordinates `(gamma, delta)` of
//! `gamma * v + delta * Av`, so `A(gamma, delta) = (-q delta, gamma - p delta)`.
//! Radix values are kept as exact rationals; floats only appear in
//! [`RationalVec::to_f64`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, TileError};

/// The ten polynomial families of disk-like tiles, numbered as in the
/// reference tables (1 = `x^2+q`, ..., 10 = `x^2-2x+2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `x^2 + q`, `q >= 2`
    SquarePlusQ,
    /// `x^2 - q`, `q >= 2`
    SquareMinusQ,
    /// `x^2 + x + q`
    PlusXPlusQ,
    /// `x^2 - x + q`
    MinusXPlusQ,
    /// `x^2 + px + q`, `p >= 2`, excluding `p = q = 2`
    PlusPxPlusQ,
    /// `x^2 - px + q`, `p >= 2`, excluding `p = q = 2`
    MinusPxPlusQ,
    /// `x^2 + px - q`, `p >= 1`
    PlusPxMinusQ,
    /// `x^2 - px - q`, `p >= 1`
    MinusPxMinusQ,
    /// `x^2 + 2x + 2`
    PlusTwoXPlusTwo,
    /// `x^2 - 2x + 2`
    MinusTwoXPlusTwo,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::SquarePlusQ,
        Family::SquareMinusQ,
        Family::PlusXPlusQ,
        Family::MinusXPlusQ,
        Family::PlusPxPlusQ,
        Family::MinusPxPlusQ,
        Family::PlusPxMinusQ,
        Family::MinusPxMinusQ,
        Family::PlusTwoXPlusTwo,
        Family::MinusTwoXPlusTwo,
    ];

    /// Short whitespace-free name used in text exports.
    pub fn name(self) -> &'static str {
        match self {
            Family::SquarePlusQ => "x^2+q",
            Family::SquareMinusQ => "x^2-q",
            Family::PlusXPlusQ => "x^2+x+q",
            Family::MinusXPlusQ => "x^2-x+q",
            Family::PlusPxPlusQ => "x^2+px+q",
            Family::MinusPxPlusQ => "x^2-px+q",
            Family::PlusPxMinusQ => "x^2+px-q",
            Family::MinusPxMinusQ => "x^2-px-q",
            Family::PlusTwoXPlusTwo => "x^2+2x+2",
            Family::MinusTwoXPlusTwo => "x^2-2x+2",
        }
    }

    /// 1-based position in the reference tables.
    pub fn number(self) -> usize {
        Family::ALL.iter().position(|&f| f == self).unwrap() + 1
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == name)
    }

    /// Families with eight neighbors (square tiles).
    pub fn is_square(self) -> bool {
        matches!(self, Family::SquarePlusQ | Family::SquareMinusQ)
    }

    fn classify(p: i64, q: i64) -> Family {
        match (p, q) {
            (2, 2) => Family::PlusTwoXPlusTwo,
            (-2, 2) => Family::MinusTwoXPlusTwo,
            (0, q) if q > 0 => Family::SquarePlusQ,
            (0, _) => Family::SquareMinusQ,
            (1, q) if q > 0 => Family::PlusXPlusQ,
            (-1, q) if q > 0 => Family::MinusXPlusQ,
            (p, q) if q > 0 && p >= 2 => Family::PlusPxPlusQ,
            (_, q) if q > 0 => Family::MinusPxPlusQ,
            (p, _) if p >= 1 => Family::PlusPxMinusQ,
            _ => Family::MinusPxMinusQ,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Flags of `x^2 + p x + q` computed without rejecting anything.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyFlags {
    pub expanding: bool,
    pub disk_like: bool,
    pub similarity: bool,
}

impl PolyFlags {
    pub fn of(p: i64, q: i64) -> PolyFlags {
        let expanding = (q >= 2 && p.abs() <= q) || (q <= -2 && p.abs() <= (q + 2).abs());
        let disk_like = 2 * p.abs() <= (q + 2).abs();
        let similarity = p == 0 || (q > 0 && p * p <= 4 * q);
        PolyFlags { expanding, disk_like, similarity }
    }
}

/// A validated characteristic polynomial `x^2 + p x + q` of a disk-like tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TilePoly {
    p: i64,
    q: i64,
    family: Family,
    disk_like: bool,
    expanding: bool,
    similarity: bool,
}

impl TilePoly {
    pub fn p(&self) -> i64 {
        self.p
    }
    pub fn q(&self) -> i64 {
        self.q
    }
    /// `|q|`, the number of digits and `|det A|`.
    pub fn digit_count(&self) -> i64 {
        self.q.abs()
    }
    pub fn family(&self) -> Family {
        self.family
    }
    pub fn disk_like(&self) -> bool {
        self.disk_like
    }
    pub fn expanding(&self) -> bool {
        self.expanding
    }
    pub fn similarity(&self) -> bool {
        self.similarity
    }

    /// Largest admissible absolute value of a difference digit, `|q| - 1`.
    pub fn max_difference_digit(&self) -> i64 {
        self.digit_count() - 1
    }

    pub fn check_difference_digit(&self, b: i64) -> Result<()> {
        let bound = self.max_difference_digit();
        if b.abs() > bound {
            Err(TileError::DigitOutOfRange { digit: b, bound })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for TilePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^2")?;
        match self.p {
            0 => {}
            1 => write!(f, "+x")?,
            -1 => write!(f, "-x")?,
            p if p > 0 => write!(f, "+{p}x")?,
            p => write!(f, "{p}x")?,
        }
        if self.q > 0 {
            write!(f, "+{}", self.q)
        } else {
            write!(f, "{}", self.q)
        }
    }
}

pub fn validate_poly(p: i64, q: i64) -> Result<TilePoly> {
    if q.abs() < 2 {
        return Err(TileError::DegenerateDeterminant(q.abs()));
    }
    let flags = PolyFlags::of(p, q);
    if !flags.expanding {
        return Err(TileError::NotExpanding { p, q });
    }
    if !flags.disk_like {
        return Err(TileError::NotDiskLike { p, q });
    }
    Ok(TilePoly {
        p,
        q,
        family: Family::classify(p, q),
        disk_like: flags.disk_like,
        expanding: flags.expanding,
        similarity: flags.similarity,
    })
}

/// `gamma * v + delta * Av`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct LatticeVec {
    pub gamma: i64,
    pub delta: i64,
}

impl LatticeVec {
    pub const ZERO: LatticeVec = LatticeVec { gamma: 0, delta: 0 };

    pub const fn new(gamma: i64, delta: i64) -> Self {
        LatticeVec { gamma, delta }
    }

    pub fn is_zero(&self) -> bool {
        self.gamma == 0 && self.delta == 0
    }

    pub fn sup_norm(&self) -> i64 {
        self.gamma.abs().max(self.delta.abs())
    }

    /// Name in the `Av+2v` notation, e.g. `-Av+v`, `v`, `2Av-3v`.
    pub fn name(&self) -> String {
        fn term(coef: i64, sym: &str, leading: bool) -> String {
            let sign = if coef < 0 {
                "-"
            } else if leading {
                ""
            } else {
                "+"
            };
            match coef.abs() {
                1 => format!("{sign}{sym}"),
                c => format!("{sign}{c}{sym}"),
            }
        }
        match (self.gamma, self.delta) {
            (0, 0) => "0".to_string(),
            (g, 0) => term(g, "v", true),
            (0, d) => term(d, "Av", true),
            (g, d) => format!("{}{}", term(d, "Av", true), term(g, "v", false)),
        }
    }

    /// Inverse of [`LatticeVec::name`].
    pub fn parse_name(s: &str) -> Option<LatticeVec> {
        let s = s.trim();
        if s == "0" {
            return Some(LatticeVec::ZERO);
        }
        let mut out = LatticeVec::ZERO;
        let mut rest = s;
        let mut seen = false;
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ if !seen => (1, rest),
                _ => return None,
            };
            let digits = body.bytes().take_while(u8::is_ascii_digit).count();
            let coef: i64 = if digits == 0 { 1 } else { body[..digits].parse().ok()? };
            let after = &body[digits..];
            if let Some(tail) = after.strip_prefix("Av") {
                out.delta += sign * coef;
                rest = tail;
            } else {
                rest = after.strip_prefix('v')?;
                out.gamma += sign * coef;
            }
            seen = true;
        }
        Some(out)
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Add for LatticeVec {
    type Output = LatticeVec;
    fn add(self, o: LatticeVec) -> LatticeVec {
        LatticeVec::new(self.gamma + o.gamma, self.delta + o.delta)
    }
}

impl Sub for LatticeVec {
    type Output = LatticeVec;
    fn sub(self, o: LatticeVec) -> LatticeVec {
        LatticeVec::new(self.gamma - o.gamma, self.delta - o.delta)
    }
}

impl Neg for LatticeVec {
    type Output = LatticeVec;
    fn neg(self) -> LatticeVec {
        LatticeVec::new(-self.gamma, -self.delta)
    }
}

/// `A(gamma v + delta Av) = (-q delta) v + (gamma - p delta) Av`, from `f(A)v = 0`.
pub fn apply_a(ell: LatticeVec, poly: &TilePoly) -> LatticeVec {
    LatticeVec::new(-poly.q * ell.delta, ell.gamma - poly.p * ell.delta)
}

/// `A ell - b1 v`; the edge map of the neighbor graph.
pub fn neighbor_step(ell: LatticeVec, b1: i64, poly: &TilePoly) -> Result<LatticeVec> {
    poly.check_difference_digit(b1)?;
    Ok(LatticeVec::new(-(poly.q * ell.delta + b1), ell.gamma - poly.p * ell.delta))
}

/// Integer 2x2 matrix of `A^n` in the `(v, Av)` basis, columns = images of `v`, `Av`.
pub fn a_power(poly: &TilePoly, n: u32) -> [[i128; 2]; 2] {
    let (p, q) = (poly.p as i128, poly.q as i128);
    let a = [[0, -q], [1, -p]];
    let mut acc = [[1i128, 0], [0, 1]];
    for _ in 0..n {
        acc = [
            [
                a[0][0] * acc[0][0] + a[0][1] * acc[1][0],
                a[0][0] * acc[0][1] + a[0][1] * acc[1][1],
            ],
            [
                a[1][0] * acc[0][0] + a[1][1] * acc[1][0],
                a[1][0] * acc[0][1] + a[1][1] * acc[1][1],
            ],
        ];
    }
    acc
}

/// A point `gamma v + delta Av` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalVec {
    pub gamma: BigRational,
    pub delta: BigRational,
}

impl RationalVec {
    pub fn zero() -> Self {
        RationalVec { gamma: BigRational::zero(), delta: BigRational::zero() }
    }

    pub fn from_ints(gamma: i64, delta: i64) -> Self {
        RationalVec { gamma: ratio(gamma, 1), delta: ratio(delta, 1) }
    }

    pub fn from_ratios(gn: i64, gd: i64, dn: i64, dd: i64) -> Self {
        RationalVec { gamma: ratio(gn, gd), delta: ratio(dn, dd) }
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.is_zero() && self.delta.is_zero()
    }

    /// The lattice vector this equals, if both coordinates are integers.
    pub fn to_lattice(&self) -> Option<LatticeVec> {
        use num_traits::ToPrimitive;
        if self.gamma.is_integer() && self.delta.is_integer() {
            Some(LatticeVec::new(self.gamma.to_integer().to_i64()?, self.delta.to_integer().to_i64()?))
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (self.gamma.to_f64().unwrap_or(f64::NAN), self.delta.to_f64().unwrap_or(f64::NAN))
    }

    fn add_gamma(&self, d: i64) -> Self {
        RationalVec { gamma: &self.gamma + ratio(d, 1), delta: self.delta.clone() }
    }
}

impl From<LatticeVec> for RationalVec {
    fn from(l: LatticeVec) -> Self {
        RationalVec::from_ints(l.gamma, l.delta)
    }
}

impl Add for &RationalVec {
    type Output = RationalVec;
    fn add(self, o: &RationalVec) -> RationalVec {
        RationalVec { gamma: &self.gamma + &o.gamma, delta: &self.delta + &o.delta }
    }
}

impl Sub for &RationalVec {
    type Output = RationalVec;
    fn sub(self, o: &RationalVec) -> RationalVec {
        RationalVec { gamma: &self.gamma - &o.gamma, delta: &self.delta - &o.delta }
    }
}

impl fmt::Display for RationalVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.gamma, self.delta)
    }
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `A` on rational coordinates.
pub fn apply_a_rational(x: &RationalVec, poly: &TilePoly) -> RationalVec {
    let p = ratio(poly.p, 1);
    let q = ratio(poly.q, 1);
    RationalVec { gamma: -(&q * &x.delta), delta: &x.gamma - &p * &x.delta }
}

/// `A^{-1}(alpha v + beta Av) = (beta - p alpha / q) v + (-alpha / q) Av`.
pub fn apply_a_inverse(x: &RationalVec, poly: &TilePoly) -> RationalVec {
    let p = ratio(poly.p, 1);
    let q = ratio(poly.q, 1);
    RationalVec { gamma: &x.delta - &p * &x.gamma / &q, delta: -(&x.gamma / &q) }
}

/// A finite digit word; `digits[0]` is the first digit after the radix point
/// (or the coefficient of `A^0 v` when used as an integer representation).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct RadixWord(pub Vec<i64>);

impl RadixWord {
    pub fn new(digits: Vec<i64>) -> Self {
        RadixWord(digits)
    }
    pub fn digits(&self) -> &[i64] {
        &self.0
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn repeat(&self, k: usize) -> RadixWord {
        RadixWord(self.0.repeat(k))
    }
}

impl From<Vec<i64>> for RadixWord {
    fn from(v: Vec<i64>) -> Self {
        RadixWord(v)
    }
}

impl fmt::Display for RadixWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The stream `preperiod (period)^infinity`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeriodicWord {
    preperiod: RadixWord,
    period: RadixWord,
}

impl PeriodicWord {
    pub fn new(preperiod: RadixWord, period: RadixWord) -> Result<Self> {
        if period.is_empty() {
            return Err(TileError::EmptyPeriod);
        }
        Ok(PeriodicWord { preperiod, period })
    }

    pub fn purely_periodic(period: Vec<i64>) -> Result<Self> {
        PeriodicWord::new(RadixWord::default(), RadixWord(period))
    }

    pub fn preperiod(&self) -> &RadixWord {
        &self.preperiod
    }
    pub fn period(&self) -> &RadixWord {
        &self.period
    }

    /// Digit at position `i` (0-based) of the infinite stream.
    pub fn digit(&self, i: usize) -> i64 {
        let k = self.preperiod.len();
        if i < k {
            self.preperiod.0[i]
        } else {
            self.period.0[(i - k) % self.period.len()]
        }
    }

    /// First `n` digits of the stream.
    pub fn truncate(&self, n: usize) -> RadixWord {
        RadixWord((0..n).map(|i| self.digit(i)).collect())
    }

    pub fn map_digits(&self, f: impl Fn(i64) -> i64) -> PeriodicWord {
        PeriodicWord {
            preperiod: RadixWord(self.preperiod.0.iter().map(|&d| f(d)).collect()),
            period: RadixWord(self.period.0.iter().map(|&d| f(d)).collect()),
        }
    }
}

impl fmt::Display for PeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pre: Vec<String> = self.preperiod.0.iter().map(i64::to_string).collect();
        let per: Vec<String> = self.period.0.iter().map(i64::to_string).collect();
        write!(f, "0.{}({})^", pre.join(" "), per.join(" "))
    }
}

/// `sum_{i=1..n} a_i A^{-i} v`, by Horner's rule with `A^{-1}`.
pub fn eval_radix_finite(word: &RadixWord, poly: &TilePoly) -> RationalVec {
    word.0
        .iter()
        .rev()
        .fold(RationalVec::zero(), |acc, &d| apply_a_inverse(&acc.add_gamma(d), poly))
}

/// Exact value of an eventually periodic radix expansion.
///
/// The tail `y = 0.(c_1 .. c_m)^` satisfies `y = c + A^{-m} y` with
/// `c = 0.c_1..c_m`, a 2x2 rational system solved by Cramer's rule.
pub fn eval_radix_periodic(word: &PeriodicWord, poly: &TilePoly) -> Result<RationalVec> {
    let m = word.period.len();
    let c = eval_radix_finite(&word.period, poly);
    // columns of A^{-m}
    let mut e1 = RationalVec::from_ints(1, 0);
    let mut e2 = RationalVec::from_ints(0, 1);
    for _ in 0..m {
        e1 = apply_a_inverse(&e1, poly);
        e2 = apply_a_inverse(&e2, poly);
    }
    let one = ratio(1, 1);
    // (I - A^{-m}) y = c
    let m11 = &one - &e1.gamma;
    let m21 = -e1.delta.clone();
    let m12 = -e2.gamma.clone();
    let m22 = &one - &e2.delta;
    let det = &m11 * &m22 - &m12 * &m21;
    if det.is_zero() {
        return Err(TileError::SingularPeriod(m));
    }
    let tail = RationalVec {
        gamma: (&c.gamma * &m22 - &m12 * &c.delta) / &det,
        delta: (&m11 * &c.delta - &m21 * &c.gamma) / &det,
    };
    let mut shifted = tail;
    for _ in 0..word.preperiod.len() {
        shifted = apply_a_inverse(&shifted, poly);
    }
    Ok(&eval_radix_finite(&word.preperiod, poly) + &shifted)
}

/// `sum_i digits[i] A^i v` for an integer-position word (no radix point).
pub fn eval_integer_word(word: &RadixWord, poly: &TilePoly) -> LatticeVec {
    word.0
        .iter()
        .rev()
        .fold(LatticeVec::ZERO, |acc, &d| apply_a(acc, poly) + LatticeVec::new(d, 0))
}

/// Euclidean-style sup norm on rationals, for tests and reports.
pub fn rational_abs_max(x: &RationalVec) -> BigRational {
    let a = x.gamma.abs();
    let b = x.delta.abs();
    if a > b {
        a
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: i64, q: i64) -> TilePoly {
        validate_poly(p, q).unwrap()
    }

    #[test]
    fn validate_examples() {
        let t = poly(2, 3);
        assert_eq!(t.family(), Family::PlusPxPlusQ);
        assert!(t.disk_like() && t.similarity() && t.expanding());
        let t = poly(-2, 2);
        assert_eq!(t.family(), Family::MinusTwoXPlusTwo);
        assert!(t.disk_like() && t.similarity());
        assert_eq!(validate_poly(3, 3), Err(TileError::NotDiskLike { p: 3, q: 3 }));
        assert_eq!(validate_poly(0, 1), Err(TileError::DegenerateDeterminant(1)));
        assert_eq!(validate_poly(0, -1), Err(TileError::DegenerateDeterminant(1)));
        assert_eq!(validate_poly(4, 3), Err(TileError::NotExpanding { p: 4, q: 3 }));
        assert_eq!(validate_poly(1, -2), Err(TileError::NotExpanding { p: 1, q: -2 }));
    }

    #[test]
    fn families_cover_signs() {
        let cases = [
            ((0, 5), Family::SquarePlusQ),
            ((0, -3), Family::SquareMinusQ),
            ((1, 4), Family::PlusXPlusQ),
            ((-1, 4), Family::MinusXPlusQ),
            ((3, 5), Family::PlusPxPlusQ),
            ((-3, 5), Family::MinusPxPlusQ),
            ((1, -4), Family::PlusPxMinusQ),
            ((-2, -6), Family::MinusPxMinusQ),
            ((2, 2), Family::PlusTwoXPlusTwo),
            ((-2, 2), Family::MinusTwoXPlusTwo),
        ];
        for ((p, q), fam) in cases {
            assert_eq!(poly(p, q).family(), fam, "({p},{q})");
            assert_eq!(Family::from_name(fam.name()), Some(fam));
        }
        // scaled reflection vs. rotation
        assert!(poly(0, -3).similarity());
        assert!(!poly(1, -4).similarity());
        assert!(!poly(7, 12).similarity());
        // p^2 = 4q on the disk-like side
        assert!(poly(8, 16).similarity());
    }

    #[test]
    fn apply_a_examples() {
        assert_eq!(apply_a(LatticeVec::new(0, 1), &poly(2, 3)), LatticeVec::new(-3, -2));
        assert_eq!(apply_a(LatticeVec::ZERO, &poly(2, 3)), LatticeVec::ZERO);
        assert_eq!(apply_a(LatticeVec::new(1, 0), &poly(-2, 2)), LatticeVec::new(0, 1));
    }

    #[test]
    fn neighbor_step_examples() {
        let t = poly(2, 3);
        assert_eq!(neighbor_step(LatticeVec::new(1, 0), -2, &t).unwrap(), LatticeVec::new(2, 1));
        assert_eq!(neighbor_step(LatticeVec::new(2, 1), -2, &t).unwrap(), LatticeVec::new(-1, 0));
        assert_eq!(neighbor_step(LatticeVec::ZERO, 0, &t).unwrap(), LatticeVec::ZERO);
        assert_eq!(
            neighbor_step(LatticeVec::new(1, 0), 3, &t),
            Err(TileError::DigitOutOfRange { digit: 3, bound: 2 })
        );
    }

    #[test]
    fn apply_a_inverse_examples() {
        let t = poly(2, 3);
        assert_eq!(apply_a_inverse(&RationalVec::from_ints(-3, -2), &t), RationalVec::from_ints(0, 1));
        assert!(apply_a_inverse(&RationalVec::zero(), &t).is_zero());
        let t = poly(-2, 2);
        assert_eq!(apply_a_inverse(&RationalVec::from_ints(0, 1), &t), RationalVec::from_ints(1, 0));
    }

    #[test]
    fn finite_radix_examples() {
        let t = poly(2, 3);
        assert!(eval_radix_finite(&RadixWord::default(), &t).is_zero());
        // A^{-1}(-2 v) = (4/3, 2/3), computed by hand from the inverse formula
        assert_eq!(eval_radix_finite(&RadixWord(vec![-2]), &t), RationalVec::from_ratios(4, 3, 2, 3));
        // (-2,2), 0.11: frozen from an independent fraction computation
        let t = poly(-2, 2);
        let x = eval_radix_finite(&RadixWord(vec![1, 1]), &t);
        assert_eq!(x, RationalVec::from_ratios(3, 2, -1, 1));
        // Horner round trip: A(A x - v) - v = 0
        let back = apply_a_rational(&x, &t);
        let back = &back - &RationalVec::from_ints(1, 0);
        let back = apply_a_rational(&back, &t);
        let back = &back - &RationalVec::from_ints(1, 0);
        assert!(back.is_zero());
    }

    #[test]
    fn periodic_radix_examples() {
        let t = poly(-2, 2);
        let zero = PeriodicWord::purely_periodic(vec![0]).unwrap();
        assert!(eval_radix_periodic(&zero, &t).unwrap().is_zero());
        // x = A^{-1}(x + v) gives x = v - Av
        let one = PeriodicWord::purely_periodic(vec![1]).unwrap();
        assert_eq!(eval_radix_periodic(&one, &t).unwrap(), RationalVec::from_ints(1, -1));
        // x^2 - 2: A^2 = 2I, so 0.(01)^ = sum 2^{-k} v = v
        let t = poly(0, -2);
        let w = PeriodicWord::purely_periodic(vec![0, 1]).unwrap();
        assert_eq!(eval_radix_periodic(&w, &t).unwrap(), RationalVec::from_ints(1, 0));
        assert_eq!(PeriodicWord::purely_periodic(vec![]), Err(TileError::EmptyPeriod));
    }

    #[test]
    fn preperiod_is_prepended() {
        let t = poly(2, 3);
        let w = PeriodicWord::new(RadixWord(vec![2, -1]), RadixWord(vec![1, 0, -2])).unwrap();
        let x = eval_radix_periodic(&w, &t).unwrap();
        // x = 0.2(-1) + A^{-2} * tail
        let tail = eval_radix_periodic(&PeriodicWord::purely_periodic(vec![1, 0, -2]).unwrap(), &t).unwrap();
        let mut shifted = tail;
        for _ in 0..2 {
            shifted = apply_a_inverse(&shifted, &t);
        }
        assert_eq!(x, &eval_radix_finite(&RadixWord(vec![2, -1]), &t) + &shifted);
    }

    #[test]
    fn names_round_trip() {
        for (g, d, s) in [(1, 0, "v"), (-1, 0, "-v"), (0, 1, "Av"), (2, 1, "Av+2v"), (1, -1, "-Av+v"), (-3, 2, "2Av-3v")] {
            let l = LatticeVec::new(g, d);
            assert_eq!(l.name(), s);
            assert_eq!(LatticeVec::parse_name(s), Some(l));
        }
        assert_eq!(LatticeVec::parse_name("Av+"), None);
        assert_eq!(LatticeVec::parse_name("Avv"), None);
    }

    #[test]
    fn a_power_matches_iteration() {
        let t = poly(-3, 5);
        let m = a_power(&t, 5);
        let mut v = LatticeVec::new(1, 0);
        let mut av = LatticeVec::new(0, 1);
        for _ in 0..5 {
            v = apply_a(v, &t);
            av = apply_a(av, &t);
        }
        assert_eq!((m[0][0] as i64, m[1][0] as i64), (v.gamma, v.delta));
        assert_eq!((m[0][1] as i64, m[1][1] as i64), (av.gamma, av.delta));
    }

    #[test]
    fn integer_word_eval() {
        // -v = A^2 v + 2Av + 2v for x^2+2x+3
        let t = poly(2, 3);
        assert_eq!(eval_integer_word(&RadixWord(vec![2, 2, 1]), &t), LatticeVec::new(-1, 0));
    }
}
