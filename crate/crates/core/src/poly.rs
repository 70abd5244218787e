//! Dense univariate polynomials over the integers.
//!
//! Everything here is exact: coefficients are arbitrary-precision integers and
//! the few places that need fractions (root means, coefficient bounds) use
//! [`BigRational`]. Real-root questions are answered with Sturm sequences built
//! from primitive pseudo-remainders, so no floating point is involved.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no roots to classify")]
    ZeroPolynomial,
    #[error("leading coefficient {0} is not 1 or -1")]
    NotMonic(BigInt),
    #[error("division leaves remainder {remainder}")]
    NonDivisible { remainder: IntPoly },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Polynomial in one indeterminate; `coeffs[i]` multiplies `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x - root`.
    pub fn linear(root: &BigInt) -> Self {
        Self::from_coeffs(vec![-root.clone(), BigInt::one()])
    }

    /// Monic polynomial with exactly the given roots (with repetition).
    pub fn from_roots<I>(roots: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(&r.into()))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Long division over the integers; fails with the running remainder as
    /// soon as a step is not integral or the final remainder is nonzero.
    pub fn divide_exact(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        let Some(dd) = divisor.degree() else {
            return Err(PolyError::PreconditionViolated(
                "division by the zero polynomial".into(),
            ));
        };
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(PolyError::NonDivisible {
                    remainder: self.clone(),
                })
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NonDivisible {
                    remainder: IntPoly::from_coeffs(rem),
                });
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        let rem = IntPoly::from_coeffs(rem);
        if rem.is_zero() {
            Ok(IntPoly::from_coeffs(quot))
        } else {
            Err(PolyError::NonDivisible { remainder: rem })
        }
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`, and the exponent used.
    fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> (IntPoly, usize) {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.leading().unwrap().clone();
        let mut r = a.clone();
        let Some(da) = a.degree() else {
            return (Self::zero(), 0);
        };
        if da < db {
            return (r, 0);
        }
        let exponent = da - db + 1;
        let mut used = 0;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            // r <- lb * r - lr * x^(dr-db) * b
            r = &r.scale(&lb) - &b.scale(&lr).shift_up(dr - db);
            used += 1;
        }
        let remaining = exponent - used;
        (r.scale(&lb.pow(remaining as u32)), exponent)
    }

    /// Primitive gcd (positive leading coefficient) via a primitive remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (r, _) = Self::pseudo_rem(&a, &b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Product of the distinct irreducible factors, up to a constant.
    pub fn square_free_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .divide_exact(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    /// Sturm sequence of `self` (assumed square-free), each term made primitive.
    ///
    /// Every term is a positive multiple of the classical Sturm term, so sign
    /// variation counts are unchanged.
    pub fn sturm_sequence(&self) -> Vec<IntPoly> {
        let mut seq = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return seq;
        }
        seq.push(self.derivative());
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            let (prem, exponent) = Self::pseudo_rem(a, b);
            if prem.is_zero() {
                break;
            }
            // prem = lc(b)^e * rem; the Sturm term is -rem.
            let lb_neg = b.leading().unwrap().is_negative();
            let flip = !(lb_neg && exponent % 2 == 1);
            let mut next = if flip { -&prem } else { prem };
            let c = next.content();
            next = IntPoly {
                coeffs: next.coeffs.iter().map(|x| x / &c).collect(),
            };
            seq.push(next);
        }
        seq
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let seq = self.square_free_part().sturm_sequence();
        let at_neg_inf = variations(seq.iter().map(|p| {
            let s = p.leading().unwrap().sign_ordering();
            if p.degree().unwrap() % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }));
        let at_pos_inf = variations(seq.iter().map(|p| p.leading().unwrap().sign_ordering()));
        at_neg_inf - at_pos_inf
    }

    /// Number of distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_roots_between(&self, lo: &BigInt, hi: &BigInt) -> usize {
        let sqf = self.square_free_part();
        let seq = sqf.sturm_sequence();
        count_in(&seq, lo, hi)
    }

    /// Number of distinct roots in `(0, +inf)`.
    pub fn count_positive_roots(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let seq = self.square_free_part().sturm_sequence();
        let at_zero = variations(seq.iter().map(|p| p.coeff(0).sign_ordering()));
        let at_pos_inf = variations(seq.iter().map(|p| p.leading().unwrap().sign_ordering()));
        at_zero - at_pos_inf
    }

    /// Upper bound on the absolute value of every complex root (Fujiwara-style,
    /// for leading coefficient +-1).
    fn root_modulus_bound(&self) -> BigInt {
        let d = self.degree().unwrap_or(0);
        let mut best = BigInt::one();
        for j in 1..=d {
            let c = self.coeffs[d - j].abs();
            if c.is_zero() {
                continue;
            }
            let mut r = c.nth_root(j as u32);
            if r.pow(j as u32) < c {
                r += 1;
            }
            best = best.max(r);
        }
        best * 2
    }

    fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            if i == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }

    /// Integer roots split off, remaining factor in parentheses:
    /// `(x-1)(x-2)^3·(x^3-5x^2+9x-7)`.
    pub fn factored_string(&self) -> String {
        let Ok(report) = integer_roots(self) else {
            return self.to_string();
        };
        let mut out = String::new();
        let mut cof = report.nonintegral_part.clone();
        if cof.leading().is_some_and(|l| l.is_negative()) {
            out.push('-');
            cof = -&cof;
        }
        for (root, mult) in &report.integer_roots {
            let factor = if root.is_zero() {
                "x".to_string()
            } else if root.is_negative() {
                format!("(x+{})", root.abs())
            } else {
                format!("(x-{root})")
            };
            out.push_str(&factor);
            if *mult > 1 {
                out.push_str(&format!("^{mult}"));
            }
        }
        if cof.degree().unwrap_or(0) > 0 {
            if !report.integer_roots.is_empty() {
                out.push('·');
            }
            out.push('(');
            out.push_str(&cof.to_string());
            out.push(')');
        } else if report.integer_roots.is_empty() {
            out.push('1');
        }
        out
    }

    /// Parses the coefficient-list form `[-7, 9, -5, 1]` (low to high).
    pub fn parse_coeff_list(s: &str) -> Result<IntPoly, PolyError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| PolyError::Parse(format!("expected [..], got {t:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Self::zero());
        }
        inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<BigInt>()
                    .map_err(|e| PolyError::Parse(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::from_coeffs)
    }

    /// `[c0, c1, ...]`, matching [`IntPoly::parse_coeff_list`].
    pub fn coeff_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(seq: &[IntPoly], x: &BigInt) -> usize {
    variations(seq.iter().map(|p| p.eval(x).sign_ordering()))
}

fn count_in(seq: &[IntPoly], lo: &BigInt, hi: &BigInt) -> usize {
    variations_at(seq, lo).saturating_sub(variations_at(seq, hi))
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.render("x"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs(
            (0..n)
                .map(|i| {
                    let mut c = self.coeff(i);
                    if let Some(d) = rhs.coeffs.get(i) {
                        c += d;
                    }
                    c
                })
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

// Coefficients serialize as JSON integers when they fit in i64, otherwise as
// decimal strings, so that reports survive a parse/re-serialize round trip.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }
        let raw = Vec::<Coeff>::deserialize(d)?;
        let coeffs = raw
            .into_iter()
            .map(|c| match c {
                Coeff::Int(v) => Ok(BigInt::from(v)),
                Coeff::Text(t) => t.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

/// Integer part of the roots of a polynomial and what is left over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    /// Distinct integer roots in increasing order, with multiplicities.
    pub integer_roots: Vec<(BigInt, usize)>,
    /// Cofactor without integer roots; a constant `+-1` when everything split.
    pub nonintegral_part: IntPoly,
    pub all_roots_integral: bool,
    pub all_roots_real: bool,
    /// Mean of all roots (with multiplicity); `None` for constants.
    pub lambda_bar: Option<BigRational>,
    pub delta_split: Option<DeltaSplit>,
}

/// Ceiling, floor and count for a non-integral root mean of integer roots:
/// `n * mean = (n - delta) * upper + delta * lower`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaSplit {
    #[serde(with = "big_serde")]
    pub upper: BigInt,
    #[serde(with = "big_serde")]
    pub lower: BigInt,
    pub delta: usize,
}

/// Serde helpers writing a [`BigInt`] as a JSON integer when it fits in
/// `i64` and as a decimal string otherwise.
pub mod big_serde {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(BigInt::from(v)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

impl RootReport {
    pub fn root_count(&self) -> usize {
        self.integer_roots.iter().map(|(_, m)| m).sum()
    }

    /// Roots listed with repetition.
    pub fn roots_with_multiplicity(&self) -> Vec<BigInt> {
        self.integer_roots
            .iter()
            .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m))
            .collect()
    }
}

/// Mean of the roots of a polynomial with leading coefficient `+-1`.
pub fn root_mean(p: &IntPoly) -> Option<BigRational> {
    let n = p.degree()?;
    if n == 0 {
        return None;
    }
    let sum = -(p.coeff(n - 1) * p.leading().unwrap());
    Some(BigRational::new(sum, BigInt::from(n)))
}

fn delta_split_for(n: usize, mean: &BigRational) -> Option<DeltaSplit> {
    if mean.is_integer() || n == 0 {
        return None;
    }
    let upper = mean.ceil().to_integer();
    let lower = mean.floor().to_integer();
    let total = mean * BigRational::from_integer(BigInt::from(n));
    let delta = BigRational::from_integer(&upper * BigInt::from(n)) - total;
    Some(DeltaSplit {
        upper,
        lower,
        delta: delta.to_integer().to_usize().expect("0 < delta < n"),
    })
}

/// Largest candidate bound for which integer roots are found by scanning
/// divisors; beyond it Sturm bisection isolates unit intervals instead.
const SCAN_LIMIT: u64 = 1 << 16;

/// Splits off every integer root (with multiplicity).
pub fn integer_roots(p: &IntPoly) -> Result<RootReport, PolyError> {
    let lead = p.leading().ok_or(PolyError::ZeroPolynomial)?;
    if !lead.abs().is_one() {
        return Err(PolyError::NotMonic(lead.clone()));
    }
    let mut found: Vec<(BigInt, usize)> = Vec::new();
    let zero_mult = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut rest = IntPoly::from_coeffs(p.coeffs[zero_mult..].to_vec());
    if zero_mult > 0 {
        found.push((BigInt::zero(), zero_mult));
    }

    if rest.degree().unwrap_or(0) > 0 {
        let bound = rest.root_modulus_bound();
        let mut candidates: Vec<BigInt> = Vec::new();
        match bound.to_u64() {
            Some(b) if b <= SCAN_LIMIT => {
                let c0 = rest.coeff(0);
                for k in 1..=b {
                    let k = BigInt::from(k);
                    if (&c0 % &k).is_zero() {
                        candidates.push(-k.clone());
                        candidates.push(k);
                    }
                }
            }
            _ => {
                let seq = rest.square_free_part().sturm_sequence();
                isolate_integers(&seq, &(-&bound - 1), &bound, &mut candidates);
            }
        }
        for k in candidates {
            let lin = IntPoly::linear(&k);
            let mut mult = 0;
            while rest.degree().unwrap_or(0) > 0 && rest.eval(&k).is_zero() {
                rest = rest.divide_exact(&lin).expect("root gives a linear factor");
                mult += 1;
            }
            if mult > 0 {
                found.push((k, mult));
            }
        }
    }
    found.sort();

    let all_roots_integral = rest.degree() == Some(0);
    let all_roots_real = all_roots_integral || all_roots_real(&rest);
    let lambda_bar = root_mean(p);
    let delta_split = if all_roots_integral {
        lambda_bar
            .as_ref()
            .and_then(|m| delta_split_for(p.degree().unwrap(), m))
    } else {
        None
    };
    Ok(RootReport {
        integer_roots: found,
        nonintegral_part: rest,
        all_roots_integral,
        all_roots_real,
        lambda_bar,
        delta_split,
    })
}

fn isolate_integers(seq: &[IntPoly], lo: &BigInt, hi: &BigInt, out: &mut Vec<BigInt>) {
    if count_in(seq, lo, hi) == 0 {
        return;
    }
    if hi - lo == BigInt::one() {
        out.push(hi.clone());
        return;
    }
    let mid: BigInt = (lo + hi).div_floor(&BigInt::from(2));
    isolate_integers(seq, lo, &mid, out);
    isolate_integers(seq, &mid, hi, out);
}

/// True iff every complex root of `p` is real.
pub fn all_roots_real(p: &IntPoly) -> bool {
    if p.is_zero() {
        return false;
    }
    let sqf = p.square_free_part();
    let d = sqf.degree().unwrap_or(0);
    d == 0 || sqf.count_real_roots() == d
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundMode {
    /// All roots real and positive; every coefficient checked against the mean.
    RealCase,
    /// All roots positive integers with a non-integral mean; `a_2` only.
    IntegerCase,
}

/// One coefficient compared with its bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientBound {
    pub m: usize,
    /// `a_m`, i.e. `(-1)^m` times the coefficient of `x^(n-m)`.
    pub coefficient: BigInt,
    pub bound: BigRational,
    pub slack: BigRational,
    pub equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub mode: BoundMode,
    pub degree: usize,
    pub lambda_bar: BigRational,
    pub delta_split: Option<DeltaSplit>,
    pub entries: Vec<CoefficientBound>,
    /// Whether `p` equals the extremal form (`(x - mean)^n`, or the two-value
    /// split for the integer case).
    pub is_extremal_form: bool,
}

impl BoundReport {
    /// Every bound satisfied.
    pub fn bounds_hold(&self) -> bool {
        self.entries.iter().all(|e| !e.slack.is_negative())
    }

    /// Equality at an index happens exactly when `p` has the extremal form.
    pub fn equality_matches_form(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.equality == self.is_extremal_form)
    }
}

/// `a_m` for a polynomial written `x^n - a_1 x^(n-1) + a_2 x^(n-2) - ...`.
pub fn signed_coefficient(p: &IntPoly, m: usize) -> BigInt {
    let n = p.degree().unwrap_or(0);
    let c = p.coeff(n - m);
    if m % 2 == 1 {
        -c
    } else {
        c
    }
}

/// Compares the coefficients of a real- or integer-rooted monic polynomial
/// with the extremal values attained when the roots are as equal as allowed.
pub fn check_coefficient_bound(p: &IntPoly, mode: BoundMode) -> Result<BoundReport, PolyError> {
    let n = p
        .degree()
        .ok_or_else(|| PolyError::PreconditionViolated("zero polynomial".into()))?;
    if !p.leading().unwrap().is_one() {
        return Err(PolyError::PreconditionViolated("polynomial is not monic".into()));
    }
    if n == 0 {
        return Err(PolyError::PreconditionViolated("constant polynomial".into()));
    }
    if p.coeff(0).is_zero() {
        return Err(PolyError::PreconditionViolated("0 is a root".into()));
    }
    let mean = root_mean(p).expect("degree >= 1");
    match mode {
        BoundMode::RealCase => {
            let sqf = p.square_free_part();
            let d = sqf.degree().unwrap();
            if sqf.count_real_roots() != d {
                return Err(PolyError::PreconditionViolated("non-real roots".into()));
            }
            if sqf.count_positive_roots() != d {
                return Err(PolyError::PreconditionViolated("non-positive roots".into()));
            }
            let is_extremal_form = mean.is_integer()
                && *p == IntPoly::linear(&mean.to_integer()).pow(n);
            let entries = (2..=n)
                .map(|m| {
                    let bound = BigRational::from_integer(binomial(n, m)) * pow_rat(&mean, m);
                    entry(m, signed_coefficient(p, m), bound)
                })
                .collect();
            Ok(BoundReport {
                mode,
                degree: n,
                lambda_bar: mean,
                delta_split: None,
                entries,
                is_extremal_form,
            })
        }
        BoundMode::IntegerCase => {
            let roots = integer_roots(p)?;
            if !roots.all_roots_integral {
                return Err(PolyError::PreconditionViolated("non-integral roots".into()));
            }
            if roots.integer_roots.iter().any(|(r, _)| !r.is_positive()) {
                return Err(PolyError::PreconditionViolated("non-positive roots".into()));
            }
            let split = delta_split_for(n, &mean).ok_or_else(|| {
                PolyError::PreconditionViolated("mean of the roots is an integer".into())
            })?;
            let (hi, lo, delta) = (&split.upper, &split.lower, split.delta);
            let bound = binomial(n - delta, 2) * hi * hi
                + BigInt::from((n - delta) * delta) * hi * lo
                + binomial(delta, 2) * lo * lo;
            let form = &IntPoly::linear(hi).pow(n - delta) * &IntPoly::linear(lo).pow(delta);
            let is_extremal_form = *p == form;
            let entries = if n >= 2 {
                vec![entry(2, signed_coefficient(p, 2), BigRational::from_integer(bound))]
            } else {
                Vec::new()
            };
            Ok(BoundReport {
                mode,
                degree: n,
                lambda_bar: mean,
                delta_split: Some(split),
                entries,
                is_extremal_form,
            })
        }
    }
}

fn pow_rat(x: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * x)
}

fn entry(m: usize, coefficient: BigInt, bound: BigRational) -> CoefficientBound {
    let slack = &bound - BigRational::from_integer(coefficient.clone());
    CoefficientBound {
        m,
        equality: slack.is_zero(),
        coefficient,
        bound,
        slack,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn cubic() -> IntPoly {
        p(&[-7, 9, -5, 1])
    }

    #[test]
    fn eval_examples() {
        assert_eq!(IntPoly::from_roots([1, 2, 3]).eval_i64(3), BigInt::zero());
        assert_eq!(p(&[0, 0, 1]).eval_i64(5), BigInt::from(25));
        assert_eq!(cubic().eval_i64(1), BigInt::from(-2));
    }

    #[test]
    fn mul_and_divide() {
        let a = IntPoly::from_roots([1]);
        let b = IntPoly::from_roots([2]);
        assert_eq!(&a * &b, p(&[2, -3, 1]));
        assert_eq!(IntPoly::from_roots([1, 2]).divide_exact(&a).unwrap(), b);
        match p(&[2, -3, 1]).divide_exact(&IntPoly::from_roots([3])) {
            Err(PolyError::NonDivisible { remainder }) => assert_eq!(remainder, p(&[2])),
            other => panic!("expected NonDivisible, got {other:?}"),
        }
    }

    #[test]
    fn figure_polynomial_roots() {
        let f = &IntPoly::from_roots([1, 2, 2, 2, 3, 3]) * &cubic();
        let r = integer_roots(&f).unwrap();
        let expect: Vec<(BigInt, usize)> =
            vec![(1.into(), 1), (2.into(), 3), (3.into(), 2)];
        assert_eq!(r.integer_roots, expect);
        assert_eq!(r.nonintegral_part, cubic());
        assert!(!r.all_roots_integral);
        assert!(!r.all_roots_real);
        assert_eq!(f.factored_string(), "(x-1)(x-2)^3(x-3)^2·(x^3-5x^2+9x-7)");
    }

    #[test]
    fn integral_examples() {
        let r = integer_roots(&IntPoly::from_roots([1, 2, 3])).unwrap();
        assert!(r.all_roots_integral && r.all_roots_real);
        assert_eq!(r.root_count(), 3);
        let sq = integer_roots(&p(&[0, 0, 1])).unwrap();
        assert_eq!(sq.integer_roots, vec![(BigInt::zero(), 2)]);
        assert!(sq.all_roots_integral);
        assert_eq!(
            integer_roots(&p(&[1, 2])),
            Err(PolyError::NotMonic(BigInt::from(2)))
        );
        assert_eq!(integer_roots(&IntPoly::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn large_roots_use_bisection() {
        let big = BigInt::from(10).pow(12u32) + 39;
        let f = &IntPoly::linear(&big) * &IntPoly::from_roots([-5, 7, 7]);
        let r = integer_roots(&f).unwrap();
        assert!(r.all_roots_integral);
        assert_eq!(r.roots_with_multiplicity(), vec![(-5).into(), 7.into(), 7.into(), big]);
    }

    #[test]
    fn realness() {
        assert!(all_roots_real(&IntPoly::from_roots([3, 3, 3, 3])));
        assert!(!all_roots_real(&cubic()));
        assert!(!all_roots_real(&p(&[1, 0, 1])));
        assert_eq!(p(&[-2, 0, 1]).count_real_roots(), 2);
        assert_eq!(IntPoly::from_roots([-1, 2, 5]).count_positive_roots(), 2);
    }

    #[test]
    fn negative_leading_factored() {
        let f = -&IntPoly::from_roots([0, -2]);
        assert_eq!(f.factored_string(), "-(x+2)x");
    }

    #[test]
    fn real_case_equality() {
        let r = check_coefficient_bound(&IntPoly::from_roots([3, 3, 3, 3]), BoundMode::RealCase)
            .unwrap();
        let a2 = &r.entries[0];
        assert_eq!(a2.coefficient, BigInt::from(54));
        assert_eq!(a2.bound, BigRational::from_integer(54.into()));
        assert!(a2.equality && r.is_extremal_form && r.equality_matches_form());
    }

    #[test]
    fn real_case_strict() {
        let r =
            check_coefficient_bound(&IntPoly::from_roots([2, 4]), BoundMode::RealCase).unwrap();
        assert_eq!(r.entries[0].coefficient, BigInt::from(8));
        assert_eq!(r.entries[0].bound, BigRational::from_integer(9.into()));
        assert!(!r.entries[0].equality && r.bounds_hold());
    }

    #[test]
    fn integer_case_equality() {
        let r = check_coefficient_bound(&IntPoly::from_roots([2, 3, 3]), BoundMode::IntegerCase)
            .unwrap();
        assert_eq!(r.lambda_bar, BigRational::new(8.into(), 3.into()));
        let split = r.delta_split.clone().unwrap();
        assert_eq!((split.upper, split.lower, split.delta), (3.into(), 2.into(), 1));
        assert_eq!(r.entries[0].coefficient, BigInt::from(21));
        assert!(r.entries[0].equality && r.is_extremal_form);
    }

    #[test]
    fn integer_case_rejects_integral_mean() {
        assert!(matches!(
            check_coefficient_bound(&IntPoly::from_roots([2, 4]), BoundMode::IntegerCase),
            Err(PolyError::PreconditionViolated(_))
        ));
        assert!(matches!(
            check_coefficient_bound(&cubic(), BoundMode::RealCase),
            Err(PolyError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn coeff_list_round_trip() {
        let f = cubic();
        assert_eq!(f.coeff_list_string(), "[-7, 9, -5, 1]");
        assert_eq!(IntPoly::parse_coeff_list("[-7, 9, -5, 1]").unwrap(), f);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, "[-7,9,-5,1]");
        assert_eq!(serde_json::from_str::<IntPoly>(&json).unwrap(), f);
    }
}
