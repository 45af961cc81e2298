//! Exact arithmetic functions: Euler's totient, Möbius, distinct prime
//! count, totients restricted to an interval, and the smallest non-divisors
//! `a(n)` and `p0(n)`.
//!
//! Everything here works on `u64` by trial division; the target range is
//! n ≤ 10⁷.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Intervals at most this long are counted by a direct gcd scan; longer ones
/// go through Möbius inclusion–exclusion.
pub const SCAN_LIMIT: i64 = 1_000_000;

/// An interval of the real line with exact rational endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Rational64,
    pub hi: Rational64,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Interval {
    pub fn new(lo: Rational64, hi: Rational64, lo_open: bool, hi_open: bool) -> Result<Self> {
        if lo < Rational64::from_integer(0) {
            return Err(Error::Domain(format!("interval endpoint {lo} is negative")));
        }
        if lo > hi {
            return Err(Error::Domain(format!("interval endpoints out of order: {lo} > {hi}")));
        }
        Ok(Interval { lo, hi, lo_open, hi_open })
    }

    /// `[lo, hi)`
    pub fn closed_open(lo: Rational64, hi: Rational64) -> Result<Self> {
        Self::new(lo, hi, false, true)
    }

    /// `(lo, hi)`
    pub fn open(lo: Rational64, hi: Rational64) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    pub fn contains(&self, x: Rational64) -> bool {
        let above = if self.lo_open { x > self.lo } else { x >= self.lo };
        let below = if self.hi_open { x < self.hi } else { x <= self.hi };
        above && below
    }

    pub fn length(&self) -> Rational64 {
        self.hi - self.lo
    }

    /// True for degenerate intervals such as `(x, x)` or `[x, x)`.
    pub fn is_empty(&self) -> bool {
        self.lo == self.hi && (self.lo_open || self.hi_open)
    }

    /// True when every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        if self.is_empty() {
            return true;
        }
        let lo_ok = self.lo > other.lo || (self.lo == other.lo && (!other.lo_open || self.lo_open));
        let hi_ok = self.hi < other.hi || (self.hi == other.hi && (!other.hi_open || self.hi_open));
        lo_ok && hi_ok
    }

    /// Positive integers in the interval, in increasing order.
    pub fn positive_integers(&self) -> impl Iterator<Item = i64> + '_ {
        let start = (self.lo.floor().to_integer()).max(0);
        let end = self.hi.ceil().to_integer();
        (start..=end).filter(move |&i| i >= 1 && self.contains(Rational64::from_integer(i)))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_open { '(' } else { '[' },
            self.lo,
            self.hi,
            if self.hi_open { ')' } else { ']' }
        )
    }
}

fn parse_rational(s: &str) -> Result<Rational64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(a, b))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Interval {
    type Err = Error;

    /// Parses `[a,b)`, `(a,b]` etc. with integer or `p/q` endpoints.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad interval {s:?}"));
        let lo_open = match s.chars().next() {
            Some('[') => false,
            Some('(') => true,
            _ => return Err(bad()),
        };
        let hi_open = match s.chars().last() {
            Some(']') => false,
            Some(')') => true,
            _ => return Err(bad()),
        };
        let inner = &s[1..s.len() - 1];
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        Interval::new(parse_rational(a)?, parse_rational(b)?, lo_open, hi_open)
    }
}

/// Summary of the arithmetic functions at a single `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TotientReport {
    pub n: u64,
    pub phi: u64,
    pub nu: u32,
    pub mu: i8,
}

fn check_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::Domain("n must be positive".into()))
    } else {
        Ok(())
    }
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn smallest_prime_divisor(n: u64) -> Option<u64> {
    factorize(n).first().map(|&(p, _)| p)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    check_positive(n)?;
    Ok(factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

pub fn moebius(n: u64) -> Result<i8> {
    check_positive(n)?;
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if f.len().is_multiple_of(2) {
        Ok(1)
    } else {
        Ok(-1)
    }
}

pub fn nu(n: u64) -> Result<u32> {
    check_positive(n)?;
    Ok(factorize(n).len() as u32)
}

pub fn totient_report(n: u64) -> Result<TotientReport> {
    Ok(TotientReport { n, phi: euler_phi(n)?, nu: nu(n)?, mu: moebius(n)? })
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn check_interval(interval: &Interval, n: u64) -> Result<()> {
    check_positive(n)?;
    let whole = Interval::new(Rational64::from_integer(0), Rational64::from_integer(n as i64), false, false)?;
    if !interval.is_subset_of(&whole) {
        return Err(Error::Domain(format!("interval {interval} is not inside [0,{n}]")));
    }
    Ok(())
}

/// Number of integers `i ≥ 1` in `interval` with `gcd(i, n) = 1`.
pub fn phi_interval(interval: &Interval, n: u64) -> Result<u64> {
    check_interval(interval, n)?;
    if interval.length() <= Rational64::from_integer(SCAN_LIMIT) {
        Ok(phi_interval_scan(interval, n))
    } else {
        Ok(phi_interval_mobius(interval, n))
    }
}

/// Direct gcd scan over the integers of the interval.
pub fn phi_interval_scan(interval: &Interval, n: u64) -> u64 {
    interval.positive_integers().filter(|&i| (i as u64).gcd(&n) == 1).count() as u64
}

/// Number of positive multiples of `d` that are `≤ x` (or `< x` when `strict`).
fn multiples_up_to(x: Rational64, d: i64, strict: bool) -> i64 {
    if x <= Rational64::from_integer(0) {
        return 0;
    }
    let q = x / d;
    let count = if strict { q.ceil().to_integer() - 1 } else { q.floor().to_integer() };
    count.max(0)
}

/// Inclusion–exclusion over the squarefree divisors of `n`:
/// φ(I;n) = Σ_{d|n} μ(d) · #{i ∈ I : d | i}.
pub fn phi_interval_mobius(interval: &Interval, n: u64) -> u64 {
    if interval.is_empty() {
        return 0;
    }
    let primes: Vec<i64> = factorize(n).iter().map(|&(p, _)| p as i64).collect();
    let mut total: i64 = 0;
    for mask in 0u32..(1 << primes.len()) {
        let d: i64 = primes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).product();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        let upto_hi = multiples_up_to(interval.hi, d, interval.hi_open);
        let below_lo = multiples_up_to(interval.lo, d, !interval.lo_open);
        total += sign * (upto_hi - below_lo);
    }
    total as u64
}

/// Least positive integer not dividing `n`.
pub fn a_of_n(n: u64) -> Result<u64> {
    check_positive(n)?;
    Ok((2..).find(|x| !n.is_multiple_of(*x)).expect("some integer does not divide n"))
}

/// Least prime not dividing `n`.
pub fn p0_of_n(n: u64) -> Result<u64> {
    check_positive(n)?;
    Ok((2..).find(|&x| is_prime(x) && !n.is_multiple_of(x)).expect("some prime does not divide n"))
}
