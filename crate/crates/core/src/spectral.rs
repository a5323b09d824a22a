//! Characteristic polynomials, spectral radii and boundary dimensions.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Family, TilePoly};
use crate::error::{Result, TileError};
use crate::gifs::{contact_matrix, is_irreducible, ContactMatrix};
use crate::neighbors::build_neighbor_graph;

/// Integer polynomial, coefficients lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn x() -> Self {
        IntPoly(vec![0, 1])
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn checked_mul(&self, other: &IntPoly) -> Result<IntPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPoly::default());
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                let t = a.checked_mul(*b).ok_or(TileError::Overflow)?;
                out[i + j] = out[i + j].checked_add(t).ok_or(TileError::Overflow)?;
            }
        }
        Ok(IntPoly::new(out))
    }

    /// Product of factors; panics on overflow, for small fixed inputs.
    pub fn product(factors: &[IntPoly]) -> IntPoly {
        factors
            .iter()
            .try_fold(IntPoly::constant(1), |acc, f| acc.checked_mul(f))
            .expect("factor product fits in i64")
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn eval_i128(&self, x: i128) -> Option<i128> {
        self.0
            .iter()
            .rev()
            .try_fold(0i128, |acc, &c| acc.checked_mul(x)?.checked_add(c as i128))
    }

    fn to_rational(&self) -> RatPoly {
        RatPoly::new(self.0.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            let body = match (k, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "x".to_string(),
                (1, m) => format!("{m}x"),
                (k, 1) => format!("x^{k}"),
                (k, m) => format!("{m}x^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// `det(xI - M)` by the Faddeev–LeVerrier recurrence in checked `i128`.
pub fn char_poly(m: &ContactMatrix) -> Result<IntPoly> {
    let n = m.dim();
    let a: Vec<Vec<i128>> = m.entries().iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut mk = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // mk <- A * mk + c[n-k+1] I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0i128;
                for l in 0..n {
                    s = s.checked_add(a[i][l].checked_mul(mk[l][j]).ok_or(TileError::Overflow)?).ok_or(TileError::Overflow)?;
                }
                next[i][j] = s;
            }
            next[i][i] = next[i][i].checked_add(c[n - k + 1]).ok_or(TileError::Overflow)?;
        }
        mk = next;
        let mut tr = 0i128;
        for i in 0..n {
            for l in 0..n {
                tr = tr.checked_add(a[i][l].checked_mul(mk[l][i]).ok_or(TileError::Overflow)?).ok_or(TileError::Overflow)?;
            }
        }
        c[n - k] = -tr / k as i128;
    }
    let coeffs = c.into_iter().map(|x| i64::try_from(x).map_err(|_| TileError::Overflow)).collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

#[derive(Debug, Clone, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        RatPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let mut r = self.0.clone();
        let dl = d.0.len();
        if r.len() < dl {
            return (RatPoly(Vec::new()), self.clone());
        }
        let lead = d.0[dl - 1].clone();
        let mut q = vec![BigRational::zero(); r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let t = &r[k + dl - 1] / &lead;
            for (i, c) in d.0.iter().enumerate() {
                r[k + i] = &r[k + i] - &t * c;
            }
            q[k] = t;
        }
        (RatPoly::new(q), RatPoly::new(r))
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

/// Sturm chain of a squarefree polynomial.
struct Sturm(Vec<RatPoly>);

impl Sturm {
    fn new(f: RatPoly) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        while !chain[chain.len() - 1].is_zero() {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(RatPoly::new(r.0.into_iter().map(|c| -c).collect()));
        }
        Sturm(chain)
    }

    fn variations(&self, x: &BigRational) -> usize {
        let signs: Vec<bool> = self
            .0
            .iter()
            .map(|p| p.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Largest real root of `f` in `[0, inf)`, to within `tol`; `None` if
/// `f` has no nonnegative root.
pub fn largest_nonnegative_root(f: &IntPoly, tol: f64) -> Option<f64> {
    if f.is_zero() {
        return None;
    }
    let rf = f.to_rational();
    let g = rf.gcd(&rf.derivative());
    let sq = if g.0.len() <= 1 { rf } else { rf.div_rem(&g).0 };
    let lead = sq.0.last()?.abs();
    // Cauchy bound
    let mut hi = BigRational::one();
    for c in &sq.0[..sq.0.len() - 1] {
        let r = c.abs() / &lead;
        if r > hi {
            hi = r;
        }
    }
    hi += BigRational::one();
    let sturm = Sturm::new(sq.clone());
    let zero = BigRational::zero();
    if sturm.count(&zero, &hi) == 0 {
        return if sq.eval(&zero).is_zero() { Some(0.0) } else { None };
    }
    let mut lo = zero;
    let two = BigRational::from_integer(BigInt::from(2));
    let tol = BigRational::from_float(tol).unwrap_or_else(|| BigRational::new(BigInt::one(), BigInt::from(1u64 << 40)));
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        if sturm.count(&mid, &hi) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    ((lo + hi) / two).to_f64()
}

/// `rho(M)` as the largest real root of the characteristic polynomial.
pub fn spectral_radius(m: &ContactMatrix) -> Result<f64> {
    if let Some((i, j)) = first_negative(m) {
        return Err(TileError::NegativeEntry(i, j));
    }
    if m.dim() == 0 {
        return Ok(0.0);
    }
    let cp = char_poly(m)?;
    Ok(largest_nonnegative_root(&cp, 1e-12).unwrap_or(0.0))
}

fn first_negative(m: &ContactMatrix) -> Option<(usize, usize)> {
    for (i, r) in m.entries().iter().enumerate() {
        if let Some(j) = r.iter().position(|&x| x < 0) {
            return Some((i, j));
        }
    }
    None
}

/// Power iteration on `M + I`, starting from the all-ones vector.
pub fn power_iteration_radius(m: &ContactMatrix, steps: usize) -> f64 {
    let n = m.dim();
    if n == 0 {
        return 0.0;
    }
    let mut x = vec![1.0f64; n];
    let mut lambda = 0.0;
    for _ in 0..steps {
        let y: Vec<f64> = (0..n)
            .map(|i| x[i] + (0..n).map(|j| m.get(i, j) as f64 * x[j]).sum::<f64>())
            .collect();
        let norm = y.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
        let prev = x.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
        if norm == 0.0 {
            return 0.0;
        }
        lambda = norm / prev;
        x = y.into_iter().map(|v| v / norm).collect();
    }
    lambda - 1.0
}

/// `x^3 - (|p|-1) x^2 - (|q|-|p|) x - |q|`.
pub fn dimension_cubic(p: i64, q: i64) -> IntPoly {
    let (pa, qa) = (p.abs(), q.abs());
    IntPoly::new(vec![-qa, -(qa - pa), -(pa - 1), 1])
}

/// Largest real root of [`dimension_cubic`], by bisection on `[1, 1+|p|+|q|]`.
pub fn cubic_largest_root(p: i64, q: i64) -> f64 {
    let f = dimension_cubic(p, q);
    let (mut lo, mut hi) = (1.0f64, 1.0 + (p.abs() + q.abs()) as f64);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if f.eval_f64(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn dimension_from_radius(rho: f64, q: i64) -> f64 {
    2.0 * rho.ln() / (q.abs() as f64).ln()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub p: i64,
    pub q: i64,
    pub family: Family,
    pub vertex_count: usize,
    pub char_poly: IntPoly,
    pub rho: f64,
    pub rho_power: f64,
    pub dim_generalized: f64,
    pub cubic: IntPoly,
    pub cubic_root: f64,
    /// Dimension from the cubic; present only for similarities.
    pub dim_similarity: Option<f64>,
    /// Dimension from the cubic regardless of similarity.
    pub dim_cubic: f64,
    /// Set when `dim_cubic` is not backed by the similarity hypothesis.
    pub conjectural: bool,
    pub irreducible: bool,
}

impl DimensionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn dimension_report(poly: &TilePoly) -> Result<DimensionReport> {
    let g = build_neighbor_graph(poly)?;
    let m = contact_matrix(&g, poly)?;
    let cp = char_poly(&m)?;
    let rho = spectral_radius(&m)?;
    let cubic = dimension_cubic(poly.p(), poly.q());
    let cubic_root = cubic_largest_root(poly.p(), poly.q());
    let dim_cubic = dimension_from_radius(cubic_root, poly.q());
    Ok(DimensionReport {
        p: poly.p(),
        q: poly.q(),
        family: poly.family(),
        vertex_count: g.len(),
        char_poly: cp,
        rho,
        rho_power: power_iteration_radius(&m, 200),
        dim_generalized: dimension_from_radius(rho, poly.q()),
        cubic,
        cubic_root,
        dim_similarity: poly.similarity().then_some(dim_cubic),
        dim_cubic,
        conjectural: !poly.similarity(),
        irreducible: is_irreducible(&m),
    })
}
