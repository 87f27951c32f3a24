//! Cohomology of the weighted projective line `P(w1, w2)` with its graded
//! structure sheaf, computed from the Čech/Koszul complex
//! `A -> A[1/g1] x A[1/g2] -> A[1/g1 g2]` for `A = base[g1, g2]`.
//!
//! `H^0(O(w))` is spanned by monomials `g1^a g2^b` (`a, b >= 0`) of weight
//! `w`, and `H^1(O(w))` by the inverse monomials `1/(g1^i g2^j)` (`i, j >= 1`).
//! The weights are algebraic; topological degrees are assigned elsewhere.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{invariant_factors, int_pow, FinAbGroup, IntMatrix, InvertedSet, LocalizedScalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WpsConfig {
    pub w1: u32,
    pub w2: u32,
    pub base: InvertedSet,
    /// Display names of the two generators.
    pub names: [String; 2],
}

impl WpsConfig {
    pub fn new(w1: u32, w2: u32, base: InvertedSet) -> Self {
        assert!(w1 > 0 && w2 > 0, "weights must be positive");
        Self {
            w1,
            w2,
            base,
            names: ["g1".into(), "g2".into()],
        }
    }

    /// `P(4, 6)` with generators `c4`, `c6`.
    pub fn elliptic(base: InvertedSet) -> Self {
        Self {
            names: ["c4".into(), "c6".into()],
            ..Self::new(4, 6, base)
        }
    }

    /// `P(2, 2)` with generators `lambda1`, `lambda2`.
    pub fn level_two(base: InvertedSet) -> Self {
        Self {
            names: ["lambda1".into(), "lambda2".into()],
            ..Self::new(2, 2, base)
        }
    }

    /// Weight of the dualizing sheaf, `-w1 - w2`.
    pub fn dualizing_weight(&self) -> i64 {
        -(self.w1 as i64) - (self.w2 as i64)
    }

    fn power(&self, which: usize, e: i64) -> String {
        match e {
            0 => String::new(),
            1 => self.names[which].clone(),
            e => format!("{}^{}", self.names[which], e),
        }
    }

    fn product(&self, a: i64, b: i64) -> String {
        let parts: Vec<String> = [self.power(0, a), self.power(1, b)]
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// `g1^a g2^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct H0Monomial {
    pub a: u32,
    pub b: u32,
}

impl H0Monomial {
    pub fn weight(&self, cfg: &WpsConfig) -> i64 {
        (cfg.w1 * self.a + cfg.w2 * self.b) as i64
    }

    pub fn label(&self, cfg: &WpsConfig) -> String {
        cfg.product(self.a as i64, self.b as i64)
    }

    /// The H^1 monomial it pairs with: `(a, b) -> 1/(g1^(a+1) g2^(b+1))`.
    pub fn serre_dual(&self) -> H1Monomial {
        H1Monomial {
            i: self.a + 1,
            j: self.b + 1,
        }
    }
}

/// `1 / (g1^i g2^j)` with `i, j >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct H1Monomial {
    pub i: u32,
    pub j: u32,
}

impl H1Monomial {
    pub fn new(i: u32, j: u32) -> Self {
        assert!(i >= 1 && j >= 1, "H^1 monomials need both exponents >= 1");
        Self { i, j }
    }

    pub fn weight(&self, cfg: &WpsConfig) -> i64 {
        -((cfg.w1 * self.i + cfg.w2 * self.j) as i64)
    }

    pub fn label(&self, cfg: &WpsConfig) -> String {
        format!("1/({})", cfg.product(self.i as i64, self.j as i64))
    }
}

/// All `g1^a g2^b` of the given weight, lexicographic in `(a, b)`.
pub fn h0_basis(cfg: &WpsConfig, weight: i64) -> Vec<H0Monomial> {
    if weight < 0 {
        return Vec::new();
    }
    let (w1, w2) = (cfg.w1 as i64, cfg.w2 as i64);
    (0..=weight / w1)
        .filter_map(|a| {
            let rest = weight - w1 * a;
            (rest % w2 == 0).then(|| H0Monomial {
                a: a as u32,
                b: (rest / w2) as u32,
            })
        })
        .collect()
}

/// All `1/(g1^i g2^j)` of the given weight, lexicographic in `(i, j)`.
pub fn h1_basis(cfg: &WpsConfig, weight: i64) -> Vec<H1Monomial> {
    let (w1, w2) = (cfg.w1 as i64, cfg.w2 as i64);
    let total = -weight;
    if total < w1 + w2 {
        return Vec::new();
    }
    (1..=(total - w2) / w1)
        .filter_map(|i| {
            let rest = total - w1 * i;
            (rest >= w2 && rest % w2 == 0).then(|| H1Monomial {
                i: i as u32,
                j: (rest / w2) as u32,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CohomDegree {
    H0,
    H1,
}

impl CohomDegree {
    pub fn index(self) -> u8 {
        match self {
            CohomDegree::H0 => 0,
            CohomDegree::H1 => 1,
        }
    }
}

/// A homogeneous class in `H^0(O(w))` or `H^1(O(w))`, as coefficients over
/// monomials. Exponents are stored as `(a, b)` for `H^0` and `(i, j)` for `H^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    degree: CohomDegree,
    weight: i64,
    coeffs: BTreeMap<(u32, u32), LocalizedScalar>,
}

impl GradedElement {
    pub fn zero(degree: CohomDegree, weight: i64) -> Self {
        Self {
            degree,
            weight,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn h0(cfg: &WpsConfig, m: H0Monomial) -> Self {
        let mut e = Self::zero(CohomDegree::H0, m.weight(cfg));
        e.coeffs.insert((m.a, m.b), LocalizedScalar::one(&cfg.base));
        e
    }

    pub fn h1(cfg: &WpsConfig, m: H1Monomial) -> Self {
        let mut e = Self::zero(CohomDegree::H1, m.weight(cfg));
        e.coeffs.insert((m.i, m.j), LocalizedScalar::one(&cfg.base));
        e
    }

    pub fn degree(&self) -> CohomDegree {
        self.degree
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), LocalizedScalar> {
        &self.coeffs
    }

    pub fn coeff(&self, exps: (u32, u32)) -> Option<&LocalizedScalar> {
        self.coeffs.get(&exps)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn insert_add(&mut self, key: (u32, u32), c: LocalizedScalar) {
        let sum = match self.coeffs.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(key, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.degree, self.weight),
            (other.degree, other.weight),
            "adding classes of different bidegree"
        );
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.insert_add(*k, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &LocalizedScalar) -> Self {
        let mut out = Self::zero(self.degree, self.weight);
        if s.is_zero() {
            return out;
        }
        for (k, c) in &self.coeffs {
            out.coeffs.insert(*k, c * s);
        }
        out
    }

    /// Product in the graded ring `H^0`, or the `H^0`-module action on `H^1`.
    /// Products of two `H^1` classes are not defined.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (lhs, rhs) = match (self.degree, other.degree) {
            (CohomDegree::H1, CohomDegree::H0) => (other, self),
            (_, _) => (self, other),
        };
        if lhs.degree == CohomDegree::H1 {
            return Err(Error::DegreeMismatch { expected: 0, got: 1 });
        }
        let mut out = Self::zero(rhs.degree, lhs.weight + rhs.weight);
        for (&(a, b), x) in &lhs.coeffs {
            for (&(p, q), y) in &rhs.coeffs {
                let key = match rhs.degree {
                    CohomDegree::H0 => Some((a + p, b + q)),
                    // g1^a g2^b / (g1^p g2^q) survives only if both exponents stay negative
                    CohomDegree::H1 => (a < p && b < q).then(|| (p - a, q - b)),
                };
                if let Some(key) = key {
                    out.insert_add(key, x * y);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32, cfg: &WpsConfig) -> Result<Self> {
        let mut out = Self::h0(cfg, H0Monomial { a: 0, b: 0 });
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn label(&self, cfg: &WpsConfig) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&(x, y), c)| {
                let mono = match self.degree {
                    CohomDegree::H0 => H0Monomial { a: x, b: y }.label(cfg),
                    CohomDegree::H1 => H1Monomial { i: x, j: y }.label(cfg),
                };
                if c.is_one() {
                    mono
                } else {
                    format!("({c})*{mono}")
                }
            })
            .collect();
        terms.join(" + ")
    }
}

/// `Δ = (c4^3 - c6^2) / 1728` in `H^0(O(12))` of `P(4, 6)`; requires 2 and 3 inverted.
pub fn discriminant(cfg: &WpsConfig) -> Result<GradedElement> {
    assert_eq!((cfg.w1, cfg.w2), (4, 6), "the discriminant lives on P(4, 6)");
    let inv = LocalizedScalar::integer(1728, &cfg.base).inverse()?;
    let c4_cubed = GradedElement::h0(cfg, H0Monomial { a: 3, b: 0 });
    let c6_sq = GradedElement::h0(cfg, H0Monomial { a: 0, b: 2 });
    Ok(c4_cubed.add(&c6_sq.scale(&-LocalizedScalar::one(&cfg.base))).scale(&inv))
}

/// Ranks of `H^0(O(w))` and `H^1(O(w))`, computed from the Čech complex and
/// checked against [`h0_basis`] and [`h1_basis`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulCohomology {
    pub weight: i64,
    pub h0: FinAbGroup,
    pub h1: FinAbGroup,
}

/// The weight-`w` piece of `A[1/g1] x A[1/g2] -> A[1/(g1 g2)]`, `(s, t) -> t - s`,
/// restricted to monomials with exponents `>= -bound`. The complex splits
/// monomial by monomial, so the truncation is a direct summand.
struct CechPiece {
    source: Vec<(usize, i64, i64)>,
    target: Vec<(i64, i64)>,
    matrix: IntMatrix,
}

fn monomials_of_weight(cfg: &WpsConfig, weight: i64, a_min: i64, b_min: i64) -> Vec<(i64, i64)> {
    let (w1, w2) = (cfg.w1 as i64, cfg.w2 as i64);
    // w1*a + w2*b = weight with b >= b_min gives a <= (weight - w2*b_min)/w1
    let a_max = (weight - w2 * b_min).div_euclid(w1);
    (a_min..=a_max)
        .filter_map(|a| {
            let rest = weight - w1 * a;
            (rest.rem_euclid(w2) == 0 && rest / w2 >= b_min).then(|| (a, rest / w2))
        })
        .collect()
}

fn cech_piece(cfg: &WpsConfig, weight: i64) -> CechPiece {
    let min_w = cfg.w1.min(cfg.w2) as i64;
    let bound = (-weight).max(0) / min_w + 1;
    let target = monomials_of_weight(cfg, weight, -bound, -bound);
    let mut source: Vec<(usize, i64, i64)> = monomials_of_weight(cfg, weight, -bound, 0)
        .into_iter()
        .map(|(a, b)| (0, a, b))
        .collect();
    source.extend(
        monomials_of_weight(cfg, weight, 0, -bound)
            .into_iter()
            .map(|(a, b)| (1, a, b)),
    );
    let row_of: BTreeMap<(i64, i64), usize> = target.iter().enumerate().map(|(r, &m)| (m, r)).collect();
    let mut matrix = IntMatrix::zeros(target.len(), source.len());
    for (col, &(chart, a, b)) in source.iter().enumerate() {
        let row = row_of[&(a, b)];
        matrix[(row, col)] = if chart == 0 { -1 } else { 1 };
    }
    CechPiece {
        source,
        target,
        matrix,
    }
}

pub fn koszul_cohomology(cfg: &WpsConfig, weight: i64) -> Result<KoszulCohomology> {
    let mismatch = |detail: String| Error::BasisMismatch { weight, detail };
    let piece = cech_piece(cfg, weight);
    let rows = piece.target.len();
    let cols = piece.source.len();
    let factors = invariant_factors(&piece.matrix)?;
    let rank = factors.len();

    // H^0 = ker: every basis monomial must give a cocycle (m, m)
    let h0_rank = cols - rank;
    let b0 = h0_basis(cfg, weight);
    if h0_rank != b0.len() {
        return Err(mismatch(format!("ker has rank {h0_rank}, basis has {}", b0.len())));
    }
    for m in &b0 {
        let key = (m.a as i64, m.b as i64);
        let hits: Vec<usize> = piece
            .source
            .iter()
            .enumerate()
            .filter(|(_, &(_, a, b))| (a, b) == key)
            .map(|(c, _)| c)
            .collect();
        let image: i64 = hits.iter().map(|&c| (0..rows).map(|r| piece.matrix[(r, c)]).sum::<i64>()).sum();
        if hits.len() != 2 || image != 0 {
            return Err(mismatch(format!("{} is not a cocycle", m.label(cfg))));
        }
    }

    // H^1 = coker: must be torsion-free and generated by the basis monomials
    let h1 = FinAbGroup::from_presentation(&piece.matrix)?;
    let b1 = h1_basis(cfg, weight);
    if !h1.is_torsion_free() || h1.free_rank() != b1.len() {
        return Err(mismatch(format!("coker is {h1}, basis has {} monomials", b1.len())));
    }
    let mut augmented = IntMatrix::zeros(rows, cols + b1.len());
    for r in 0..rows {
        for c in 0..cols {
            augmented[(r, c)] = piece.matrix[(r, c)];
        }
    }
    for (k, m) in b1.iter().enumerate() {
        let key = (-(m.i as i64), -(m.j as i64));
        let r = piece
            .target
            .iter()
            .position(|&t| t == key)
            .ok_or_else(|| mismatch(format!("{} missing from the complex", m.label(cfg))))?;
        augmented[(r, cols + k)] = 1;
    }
    let aug = FinAbGroup::from_presentation(&augmented)?;
    if !aug.is_zero() {
        return Err(mismatch(format!("basis monomials leave cokernel {aug}")));
    }

    Ok(KoszulCohomology {
        weight,
        h0: FinAbGroup::free(h0_rank).localize(&cfg.base),
        h1: h1.localize(&cfg.base),
    })
}

/// Multiplies `f` (in `H^0`, weight `k`) by `g` (in `H^1`, weight
/// `-k - w1 - w2`) and reads off the coefficient of `1/(g1 g2)`.
pub fn serre_pairing(cfg: &WpsConfig, f: &GradedElement, g: &GradedElement) -> Result<LocalizedScalar> {
    if f.degree() != CohomDegree::H0 {
        return Err(Error::DegreeMismatch { expected: 0, got: 1 });
    }
    if g.degree() != CohomDegree::H1 {
        return Err(Error::DegreeMismatch { expected: 1, got: 0 });
    }
    let expected = -f.weight() + cfg.dualizing_weight();
    if g.weight() != expected {
        return Err(Error::WeightMismatch {
            expected,
            got: g.weight(),
        });
    }
    let product = f.mul(g)?;
    Ok(product
        .coeff((1, 1))
        .cloned()
        .unwrap_or_else(|| LocalizedScalar::zero(&cfg.base)))
}

/// Gram matrix of the pairing between `h0_basis(k)` (rows) and
/// `h1_basis(-k - w1 - w2)` (columns).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingMatrix {
    pub weight: i64,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<LocalizedScalar>>,
}

impl PairingMatrix {
    pub fn is_permutation(&self) -> bool {
        if self.rows.len() != self.cols.len() {
            return false;
        }
        let is_unit = |c: &LocalizedScalar| c.is_one();
        let rows_ok = self
            .entries
            .iter()
            .all(|r| r.iter().filter(|c| is_unit(c)).count() == 1 && r.iter().all(|c| c.is_zero() || is_unit(c)));
        let cols_ok = (0..self.cols.len()).all(|j| self.entries.iter().filter(|r| is_unit(&r[j])).count() == 1);
        rows_ok && cols_ok
    }
}

pub fn pairing_matrix(cfg: &WpsConfig, k: i64) -> Result<PairingMatrix> {
    let b0 = h0_basis(cfg, k);
    let b1 = h1_basis(cfg, -k + cfg.dualizing_weight());
    let mut entries = Vec::with_capacity(b0.len());
    for m in &b0 {
        let f = GradedElement::h0(cfg, *m);
        let row = b1
            .iter()
            .map(|n| serre_pairing(cfg, &f, &GradedElement::h1(cfg, *n)))
            .collect::<Result<Vec<_>>>()?;
        entries.push(row);
    }
    Ok(PairingMatrix {
        weight: k,
        rows: b0.iter().map(|m| m.label(cfg)).collect(),
        cols: b1.iter().map(|m| m.label(cfg)).collect(),
        entries,
    })
}

/// `n^weight` in the base ring: the scalar by which `psi^n` acts on weight `weight`.
pub fn adams_scalar(base: &InvertedSet, weight: i64, n: i64) -> Result<LocalizedScalar> {
    assert!(n != 0, "psi^0 is not an operation");
    int_pow(n, weight, base)
}

/// `psi^n` on a class, induced by `g1 -> n^w1 g1`, `g2 -> n^w2 g2`.
pub fn apply_adams(cfg: &WpsConfig, n: i64, x: &GradedElement) -> Result<GradedElement> {
    let s1 = int_pow(n, cfg.w1 as i64, &cfg.base)?;
    let s2 = int_pow(n, cfg.w2 as i64, &cfg.base)?;
    let mut out = GradedElement::zero(x.degree(), x.weight());
    for (&(p, q), c) in x.coeffs() {
        let (p, q) = match x.degree() {
            CohomDegree::H0 => (p as i64, q as i64),
            CohomDegree::H1 => (-(p as i64), -(q as i64)),
        };
        let s = &s1.pow(p)? * &s2.pow(q)?;
        out.insert_add((p.unsigned_abs() as u32, q.unsigned_abs() as u32), c * &s);
    }
    Ok(out)
}

impl fmt::Display for KoszulCohomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weight {}: H0 = {}, H1 = {}", self.weight, self.h0, self.h1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z6() -> InvertedSet {
        InvertedSet::new([2, 3]).unwrap()
    }

    fn ell() -> WpsConfig {
        WpsConfig::elliptic(z6())
    }

    fn h0(a: u32, b: u32) -> H0Monomial {
        H0Monomial { a, b }
    }

    fn h1(i: u32, j: u32) -> H1Monomial {
        H1Monomial::new(i, j)
    }

    #[test]
    fn h0_examples() {
        let cfg = ell();
        assert_eq!(h0_basis(&cfg, 12), vec![h0(0, 2), h0(3, 0)]);
        assert_eq!(h0_basis(&cfg, 0), vec![h0(0, 0)]);
        assert!(h0_basis(&cfg, 2).is_empty());
        assert!(h0_basis(&cfg, -4).is_empty());
    }

    #[test]
    fn h1_examples() {
        let cfg = ell();
        assert_eq!(h1_basis(&cfg, -10), vec![h1(1, 1)]);
        assert!(h1_basis(&cfg, -4).is_empty());
        assert_eq!(h1_basis(&cfg, -22), vec![h1(1, 3), h1(4, 1)]);
        assert!(h1_basis(&cfg, 0).is_empty());
    }

    #[test]
    fn koszul_examples() {
        let cfg = ell();
        let k = koszul_cohomology(&cfg, -10).unwrap();
        assert_eq!((k.h0.free_rank(), k.h1.free_rank()), (0, 1));
        let k = koszul_cohomology(&cfg, 0).unwrap();
        assert_eq!((k.h0.free_rank(), k.h1.free_rank()), (1, 0));
        // 4a + 6b = 24: (0,4), (3,2), (6,0)
        let k = koszul_cohomology(&cfg, 24).unwrap();
        assert_eq!((k.h0.free_rank(), k.h1.free_rank()), (3, 0));
    }

    #[test]
    fn pairing_examples() {
        let cfg = ell();
        let f = GradedElement::h0(&cfg, h0(1, 1));
        let g = GradedElement::h1(&cfg, h1(2, 2));
        assert!(serre_pairing(&cfg, &f, &g).unwrap().is_one());
        let one = GradedElement::h0(&cfg, h0(0, 0));
        assert!(serre_pairing(&cfg, &one, &GradedElement::h1(&cfg, h1(1, 1))).unwrap().is_one());
        let f = GradedElement::h0(&cfg, h0(3, 0));
        let g = GradedElement::h1(&cfg, h1(1, 3));
        assert!(serre_pairing(&cfg, &f, &g).unwrap().is_zero());
    }

    #[test]
    fn pairing_rejects_wrong_weights() {
        let cfg = ell();
        let f = GradedElement::h0(&cfg, h0(1, 0));
        let g = GradedElement::h1(&cfg, h1(1, 1));
        assert_eq!(
            serre_pairing(&cfg, &f, &g),
            Err(Error::WeightMismatch { expected: -14, got: -10 })
        );
        assert!(serre_pairing(&cfg, &g, &f).is_err());
    }

    #[test]
    fn pairing_matrix_at_twelve() {
        let m = pairing_matrix(&ell(), 12).unwrap();
        assert_eq!(m.rows, vec!["c6^2", "c4^3"]);
        assert_eq!(m.cols, vec!["1/(c4 c6^3)", "1/(c4^4 c6)"]);
        assert!(m.is_permutation());
    }

    #[test]
    fn adams_scalar_examples() {
        let z = InvertedSet::integers();
        assert_eq!(adams_scalar(&z, 4, 5).unwrap().to_string(), "625");
        assert!(adams_scalar(&z, 0, 7).unwrap().is_one());
        let z5 = InvertedSet::new([5]).unwrap();
        assert_eq!(adams_scalar(&z5, -10, 5).unwrap().to_string(), "1/9765625");
        assert!(matches!(adams_scalar(&z, -10, 5), Err(Error::NotInvertible { .. })));
    }

    #[test]
    fn adams_from_generators_matches_weight_scalar() {
        let cfg = WpsConfig::elliptic(InvertedSet::new([2, 3, 5]).unwrap());
        let x = GradedElement::h1(&cfg, h1(1, 1));
        let y = apply_adams(&cfg, 5, &x).unwrap();
        assert_eq!(y, x.scale(&adams_scalar(&cfg.base, -10, 5).unwrap()));
        let d = discriminant(&cfg).unwrap();
        let y = apply_adams(&cfg, 5, &d).unwrap();
        assert_eq!(y, d.scale(&adams_scalar(&cfg.base, 12, 5).unwrap()));
    }

    #[test]
    fn module_action_on_h1() {
        let cfg = ell();
        let c4 = GradedElement::h0(&cfg, h0(1, 0));
        let x = GradedElement::h1(&cfg, h1(2, 1));
        assert_eq!(c4.mul(&x).unwrap(), GradedElement::h1(&cfg, h1(1, 1)));
        // c4 / (c4 c6) = 1/c6 vanishes in H^1
        assert!(c4.mul(&GradedElement::h1(&cfg, h1(1, 1))).unwrap().is_zero());
        assert!(x.mul(&x).is_err());
    }

    #[test]
    fn discriminant_expansion() {
        let cfg = ell();
        let d = discriminant(&cfg).unwrap();
        assert_eq!(d.weight(), 12);
        assert_eq!(d.label(&cfg), "(-1/1728)*c6^2 + (1/1728)*c4^3");
        assert!(discriminant(&WpsConfig::elliptic(InvertedSet::integers())).is_err());
    }
}
