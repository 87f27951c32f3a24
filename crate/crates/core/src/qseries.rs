//! Truncated q-expansions and the invariants of the Tate curve
//! `y^2 + xy = x^3 + a4(q) x + a6(q)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{InvertedSet, LocalizedScalar};
use crate::report::{Check, OperationReport};

/// `c_0 + c_1 q + ... + c_{N-1} q^{N-1} + O(q^N)`.
///
/// The precision `N` is the number of stored coefficients. Binary
/// operations return the smaller of the two precisions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<LocalizedScalar>,
    context: InvertedSet,
}

impl QSeries {
    pub fn new(coeffs: Vec<LocalizedScalar>, context: &InvertedSet) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precision { min: 1, got: 0 });
        }
        let mut context = context.clone();
        for c in &coeffs {
            context = context.union(c.context());
        }
        Ok(Self { coeffs, context })
    }

    pub fn from_integers<I>(coeffs: I, context: &InvertedSet) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let coeffs = coeffs
            .into_iter()
            .map(|c| LocalizedScalar::integer(c, context))
            .collect();
        Self::new(coeffs, context)
    }

    pub fn zero(precision: usize, context: &InvertedSet) -> Self {
        Self::constant(LocalizedScalar::zero(context), precision)
    }

    pub fn one(precision: usize, context: &InvertedSet) -> Self {
        Self::constant(LocalizedScalar::one(context), precision)
    }

    pub fn constant(c: LocalizedScalar, precision: usize) -> Self {
        assert!(precision >= 1, "precision must be positive");
        let context = c.context().clone();
        let mut coeffs = vec![LocalizedScalar::zero(&context); precision];
        coeffs[0] = c;
        Self { coeffs, context }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn context(&self) -> &InvertedSet {
        &self.context
    }

    pub fn coeffs(&self) -> &[LocalizedScalar] {
        &self.coeffs
    }

    /// Coefficient of `q^i`; `None` beyond the stored precision.
    pub fn coeff(&self, i: usize) -> Option<&LocalizedScalar> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LocalizedScalar::is_zero)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision >= 1 && precision <= self.precision(), "can only lower precision");
        Self {
            coeffs: self.coeffs[..precision].to_vec(),
            context: self.context.clone(),
        }
    }

    /// Exponent of the lowest nonzero coefficient within the precision.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, s: &LocalizedScalar) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            context: self.context.union(s.context()),
        }
    }

    pub fn scale_int(&self, s: i64) -> Self {
        self.scale(&LocalizedScalar::integer(s, &self.context))
    }

    /// Divides every coefficient by `d`, requiring the quotient to stay
    /// in the series' ring.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let q = LocalizedScalar::from_rational(c.value() / BigRational::from_integer(d.clone()), self.context.clone())
                .map_err(|_| Error::DivisionNotExact {
                    index: i,
                    divisor: d.to_string(),
                })?;
            out.push(q);
        }
        Ok(Self {
            coeffs: out,
            context: self.context.clone(),
        })
    }

    /// Removes a factor `q^k`; the first `k` coefficients must vanish.
    /// Precision drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k >= self.precision() {
            return Err(Error::Precision {
                min: k + 1,
                got: self.precision(),
            });
        }
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::DivisionNotExact {
                index: i,
                divisor: format!("q^{k}"),
            });
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
            context: self.context.clone(),
        })
    }

    /// Multiplicative inverse; the constant term must be a unit of the ring.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = c0.inverse().map_err(|_| Error::SeriesNotInvertible)?;
        let n = self.precision();
        let mut out: Vec<LocalizedScalar> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for m in 1..n {
            let mut acc = LocalizedScalar::zero(&self.context);
            for k in 1..=m {
                acc = &acc + &(&self.coeffs[k] * &out[m - k]);
            }
            out.push(-(&acc * &inv0));
        }
        Ok(Self {
            coeffs: out,
            context: self.context.clone(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.precision(), &self.context);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&LocalizedScalar, &LocalizedScalar) -> LocalizedScalar) -> Self {
        let n = self.precision().min(rhs.precision());
        Self {
            coeffs: (0..n).map(|i| f(&self.coeffs[i], &rhs.coeffs[i])).collect(),
            context: self.context.union(&rhs.context),
        }
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            context: self.context.clone(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    fn mul(self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        let context = self.context.union(&rhs.context);
        let mut coeffs = vec![LocalizedScalar::zero(&context); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        QSeries { coeffs, context }
    }
}

/// `sum_{d | m} d^k` for `0 <= m < n` (zero at `m = 0`), by a sieve over divisors.
pub fn divisor_sums(n: usize, k: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for d in 1..n {
        let dk = num_traits::pow(BigInt::from(d), k as usize);
        for m in (d..n).step_by(d) {
            out[m] += &dk;
        }
    }
    out
}

fn check_precision(prec: usize, min: usize) -> Result<()> {
    if prec < min {
        return Err(Error::Precision { min, got: prec });
    }
    Ok(())
}

/// `a4(q) = -5 sum_n n^3 q^n / (1 - q^n)`, whose `q^m` coefficient is `-5 sigma_3(m)`.
pub fn tate_a4(prec: usize) -> Result<QSeries> {
    check_precision(prec, 1)?;
    let s3 = divisor_sums(prec, 3);
    QSeries::from_integers(s3.into_iter().map(|s| s * -5), &InvertedSet::integers())
}

/// `a6(q) = -(1/12) sum_n (5n^3 + 7n^5) q^n / (1 - q^n)`.
///
/// `12 | 5d^3 + 7d^5` for every `d`, so the coefficients are integers;
/// a failure here is a bug, reported as [`Error::NonIntegralCoefficient`].
pub fn tate_a6(prec: usize) -> Result<QSeries> {
    check_precision(prec, 1)?;
    let s3 = divisor_sums(prec, 3);
    let s5 = divisor_sums(prec, 5);
    let twelve = BigInt::from(12);
    let mut coeffs = Vec::with_capacity(prec);
    for (m, (a, b)) in s3.into_iter().zip(s5).enumerate() {
        let total: BigInt = a * 5 + b * 7;
        let (q, r) = total.div_rem(&twelve);
        if !r.is_zero() {
            return Err(Error::NonIntegralCoefficient {
                index: m,
                value: format!("-{total}/12"),
            });
        }
        coeffs.push(-q);
    }
    QSeries::from_integers(coeffs, &InvertedSet::integers())
}

/// Coefficients of a Weierstrass equation
/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over a q-series ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassData {
    pub a1: QSeries,
    pub a2: QSeries,
    pub a3: QSeries,
    pub a4: QSeries,
    pub a6: QSeries,
}

impl WeierstrassData {
    pub fn tate_curve(prec: usize) -> Result<Self> {
        let z = InvertedSet::integers();
        Ok(Self {
            a1: QSeries::one(prec, &z),
            a2: QSeries::zero(prec, &z),
            a3: QSeries::zero(prec, &z),
            a4: tate_a4(prec)?,
            a6: tate_a6(prec)?,
        })
    }

    pub fn precision(&self) -> usize {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
            .iter()
            .map(|s| s.precision())
            .min()
            .expect("five fields")
    }
}

/// A Laurent expansion `q^leading_exponent * series`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentQ {
    pub leading_exponent: i64,
    pub series: QSeries,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassInvariants {
    pub b2: QSeries,
    pub b4: QSeries,
    pub b6: QSeries,
    pub b8: QSeries,
    pub c4: QSeries,
    pub c6: QSeries,
    pub delta: QSeries,
    /// `c4^3 / delta`, or `None` when delta has no invertible leading coefficient.
    pub j: Option<LaurentQ>,
}

pub fn weierstrass_invariants(w: &WeierstrassData) -> Result<WeierstrassInvariants> {
    let WeierstrassData { a1, a2, a3, a4, a6 } = w;
    let b2 = &(a1 * a1) + &a2.scale_int(4);
    let b4 = &a4.scale_int(2) + &(a1 * a3);
    let b6 = &(a3 * a3) + &a6.scale_int(4);
    let b8 = &(&(&(&(&(a1 * a1) * a6) + &(a2 * a6).scale_int(4)) - &(&(a1 * a3) * a4)) + &(&(a2 * a3) * a3)) - &(a4 * a4);
    let c4 = &(&b2 * &b2) - &b4.scale_int(24);
    let c6 = &(&(-&(&(&b2 * &b2) * &b2)) + &(&b2 * &b4).scale_int(36)) - &b6.scale_int(216);
    let c4_cubed = c4.pow(3);
    let delta = (&c4_cubed - &(&c6 * &c6)).div_exact(&BigInt::from(1728))?;
    let j = match delta.valuation() {
        Some(v) => {
            let unit = delta.shift_down(v)?;
            match unit.inverse() {
                Ok(inv) => Some(LaurentQ {
                    leading_exponent: -(v as i64),
                    series: &c4_cubed.truncate(unit.precision()) * &inv,
                }),
                Err(_) => None,
            }
        }
        None => None,
    };
    Ok(WeierstrassInvariants {
        b2,
        b4,
        b6,
        b8,
        c4,
        c6,
        delta,
        j,
    })
}

/// `q * prod_{n >= 1} (1 - q^n)^24`, truncated at `prec`.
pub fn eta_product_delta(prec: usize) -> Result<QSeries> {
    check_precision(prec, 1)?;
    // integer product of prod (1 - q^n)^24 up to q^{prec-2}
    let len = prec.saturating_sub(1);
    let mut p = vec![BigInt::zero(); len];
    if len > 0 {
        p[0] = BigInt::one();
    }
    for n in 1..len {
        for _ in 0..24 {
            for m in (n..len).rev() {
                let t = p[m - n].clone();
                p[m] -= t;
            }
        }
    }
    let mut coeffs = vec![BigInt::zero(); prec];
    for (m, c) in p.into_iter().enumerate() {
        coeffs[m + 1] = c;
    }
    QSeries::from_integers(coeffs, &InvertedSet::integers())
}

/// Checks, for the Tate curve at precision `prec`:
/// `c4^3 - c6^2 = 1728 delta`, delta against the eta product, and that the
/// `q^1` coefficient of delta is 1. Checks are indexed by q-exponent.
pub fn verify_tate_identities(prec: usize) -> Result<OperationReport> {
    check_precision(prec, 2)?;
    let inv = weierstrass_invariants(&WeierstrassData::tate_curve(prec)?)?;
    let eta = eta_product_delta(prec)?;
    let lhs = &inv.c4.pow(3) - &(&inv.c6 * &inv.c6);
    let rhs = inv.delta.scale_int(1728);
    let mut report = OperationReport::new("tate", (0, prec as i64 - 1));
    for m in 0..prec {
        report.push(Check::compare(m as i64, "c4^3 - c6^2 = 1728*Delta", &rhs.coeffs[m], &lhs.coeffs[m]));
        report.push(Check::compare(m as i64, "Delta = q*prod(1-q^n)^24", &eta.coeffs[m], &inv.delta.coeffs[m]));
    }
    report.push(Check::compare(1, "Delta q^1 coefficient", 1, &inv.delta.coeffs[1]));
    report.sort();
    Ok(report)
}

/// Named series for dumping.
pub fn named_series(name: &str, prec: usize) -> Result<Option<QSeries>> {
    let tate = || -> Result<WeierstrassInvariants> { weierstrass_invariants(&WeierstrassData::tate_curve(prec)?) };
    Ok(Some(match name {
        "a4" => tate_a4(prec)?,
        "a6" => tate_a6(prec)?,
        "b2" => tate()?.b2,
        "b4" => tate()?.b4,
        "b6" => tate()?.b6,
        "b8" => tate()?.b8,
        "c4" => tate()?.c4,
        "c6" => tate()?.c6,
        "delta" => tate()?.delta,
        "eta-delta" => eta_product_delta(prec)?,
        // j has a simple pole; we expose q * j
        "qj" => match tate()?.j {
            Some(j) => j.series,
            None => return Err(Error::SeriesNotInvertible),
        },
        _ => return Ok(None),
    }))
}

pub const SERIES_NAMES: &[&str] = &["a4", "a6", "b2", "b4", "b6", "b8", "c4", "c6", "delta", "eta-delta", "qj"];

/// JSON form `{"name", "precision", "coeffs": ["p/q", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDump {
    pub name: String,
    pub precision: usize,
    pub coeffs: Vec<LocalizedScalar>,
}

impl SeriesDump {
    pub fn new(name: &str, s: &QSeries) -> Self {
        Self {
            name: name.to_string(),
            precision: s.precision(),
            coeffs: s.coeffs.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.numerator()).unwrap()
            })
            .collect()
    }

    /// Expands `sum_n f(n) q^n / (1 - q^n) = sum_n sum_k f(n) q^{nk}` term by term.
    fn geometric_lambert(prec: usize, f: impl Fn(i64) -> i64) -> Vec<i64> {
        let mut out = vec![0; prec];
        for n in 1..prec {
            let mut e = n;
            while e < prec {
                out[e] += f(n as i64);
                e += n;
            }
        }
        out
    }

    #[test]
    fn a4_matches_geometric_expansion() {
        assert_eq!(ints(&tate_a4(4).unwrap()), vec![0, -5, -45, -140]);
        assert_eq!(ints(&tate_a4(5).unwrap())[4], -365);
        let oracle: Vec<i64> = geometric_lambert(30, |n| n.pow(3)).into_iter().map(|x| -5 * x).collect();
        assert_eq!(ints(&tate_a4(30).unwrap()), oracle);
    }

    #[test]
    fn a6_matches_geometric_expansion() {
        assert_eq!(ints(&tate_a6(2).unwrap()), vec![0, -1]);
        assert_eq!(ints(&tate_a6(3).unwrap())[2], -23);
        let oracle: Vec<i64> = geometric_lambert(30, |n| 5 * n.pow(3) + 7 * n.pow(5))
            .into_iter()
            .map(|x| {
                assert_eq!(x % 12, 0);
                -x / 12
            })
            .collect();
        assert_eq!(ints(&tate_a6(30).unwrap()), oracle);
    }

    #[test]
    fn zero_precision_is_rejected() {
        assert!(tate_a4(0).is_err());
        assert!(eta_product_delta(0).is_err());
        assert!(verify_tate_identities(1).is_err());
    }

    #[test]
    fn eta_product_small() {
        assert_eq!(ints(&eta_product_delta(3).unwrap()), vec![0, 1, -24]);
        assert_eq!(ints(&eta_product_delta(5).unwrap())[4], -1472);
        assert_eq!(ints(&eta_product_delta(1).unwrap()), vec![0]);
    }

    #[test]
    fn tate_invariants_match_eisenstein_series() {
        let inv = weierstrass_invariants(&WeierstrassData::tate_curve(5).unwrap()).unwrap();
        assert_eq!(ints(&inv.c4)[..4], [1, 240, 2160, 6720]);
        assert_eq!(ints(&inv.c6)[..3], [-1, 504, 16632]);
        assert_eq!(ints(&inv.delta), vec![0, 1, -24, 252, -1472]);
        // E4 = 1 + 240 sigma_3, E6 = 1 - 504 sigma_5, with c6 = -E6 for this model
        let s3 = divisor_sums(20, 3);
        let s5 = divisor_sums(20, 5);
        let inv = weierstrass_invariants(&WeierstrassData::tate_curve(20).unwrap()).unwrap();
        for m in 1..20 {
            assert_eq!(inv.c4.coeff(m).unwrap().numerator(), &(&s3[m] * 240));
            assert_eq!(inv.c6.coeff(m).unwrap().numerator(), &(&s5[m] * 504));
        }
    }

    #[test]
    fn j_has_a_simple_pole() {
        let inv = weierstrass_invariants(&WeierstrassData::tate_curve(4).unwrap()).unwrap();
        let j = inv.j.unwrap();
        assert_eq!(j.leading_exponent, -1);
        assert_eq!(ints(&j.series), vec![1, 744, 196884]);
    }

    #[test]
    fn precision_propagates_as_minimum() {
        let z = InvertedSet::integers();
        let a = QSeries::from_integers([1, 2, 3, 4], &z).unwrap();
        let b = QSeries::from_integers([1, 1], &z).unwrap();
        assert_eq!((&a * &b).precision(), 2);
        assert_eq!((&a + &b).precision(), 2);
        assert_eq!(ints(&(&a * &b)), vec![1, 3]);
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let z = InvertedSet::integers();
        let s = QSeries::from_integers([1, -1, 0, 0, 0], &z).unwrap();
        assert_eq!(ints(&s.inverse().unwrap()), vec![1, 1, 1, 1, 1]);
        let t = QSeries::from_integers([2, 1], &z).unwrap();
        assert_eq!(t.inverse(), Err(Error::SeriesNotInvertible));
    }

    #[test]
    fn small_precision_identities() {
        let r = verify_tate_identities(2).unwrap();
        assert!(r.passed(), "{}", r.summary());
        let r = verify_tate_identities(50).unwrap();
        assert!(r.passed(), "{}", r.summary());
    }

    #[test]
    fn dump_roundtrip() {
        let s = named_series("delta", 6).unwrap().unwrap();
        let dump = SeriesDump::new("delta", &s);
        let json = serde_json::to_string(&dump).unwrap();
        assert_eq!(json, r#"{"name":"delta","precision":6,"coeffs":["0","1","-24","252","-1472","4830"]}"#);
        let back: SeriesDump = serde_json::from_str(&json).unwrap();
        assert_eq!(back, dump);
        assert!(named_series("nope", 3).unwrap().is_none());
    }
}
