//! Graded homotopy models of `Tmf[1/S]`, `KU`, `KO`, `Tmf(2)`, and the
//! Anderson self-duality witnesses of the `Tmf_1(m)`.
//!
//! Degree convention for the sheaf-cohomology models: a class of `H^0(ω^w)`
//! sits in degree `2w`, a class of `H^1(ω^w)` in degree `2w - 1`. In both
//! cases `ceil(k / 2)` recovers the weight.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{FinAbGroup, InvertedSet, LocalizedScalar};
use crate::ledger::TorsionLedger;
use crate::wpsline::{h0_basis, h1_basis, CohomDegree, GradedElement, H0Monomial, H1Monomial, WpsConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModelId {
    Tmf,
    Ku,
    Ko,
    Tmf2,
    Tmf1(u64),
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelId::Tmf => write!(f, "tmf"),
            ModelId::Ku => write!(f, "ku"),
            ModelId::Ko => write!(f, "ko"),
            ModelId::Tmf2 => write!(f, "tmf2"),
            ModelId::Tmf1(m) => write!(f, "tmf1({m})"),
        }
    }
}

impl FromStr for ModelId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "tmf" => Ok(ModelId::Tmf),
            "ku" => Ok(ModelId::Ku),
            "ko" => Ok(ModelId::Ko),
            "tmf2" => Ok(ModelId::Tmf2),
            other => {
                let m = other
                    .strip_prefix("tmf1(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|m| m.parse().ok())
                    .ok_or_else(|| format!("unknown model `{s}`"))?;
                Ok(ModelId::Tmf1(m))
            }
        }
    }
}

/// Generators of free summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FreeGen {
    /// A monomial of the weighted projective line: `(a, b)` in `H^0`, or
    /// `(i, j)` standing for `1/(g1^i g2^j)` in `H^1`.
    Wps { degree: u8, x: u32, y: u32 },
    /// `u^j` in `pi_{2j} KU`.
    Bott(i64),
    /// `uR^j` in `pi_{8j} KO`, or `v uR^j` in `pi_{8j+4} KO` when `v` is set.
    Real { period: i64, v: bool },
}

/// Generator of a cyclic torsion summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorsionGen {
    pub family: String,
    pub index: i64,
    pub summand: usize,
    pub order: u64,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generator {
    Free(FreeGen),
    Torsion(TorsionGen),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisClass {
    pub generator: Generator,
    pub degree: i64,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomotopyGroup {
    pub degree: i64,
    pub group: FinAbGroup,
    pub basis: Vec<BasisClass>,
}

/// `ceil(k / 2)`: the algebraic weight of a class in topological degree `k`.
pub fn weight_of_degree(k: i64) -> i64 {
    (k + 1).div_euclid(2)
}

/// `(l_m, m)` pairs for which `Tmf_1(m)` is Anderson self-dual, with `Σ^{l_m}`
/// as the shift.
pub const TMF1_TABLE: [(u64, i64); 11] = [
    (2, 13),
    (3, 9),
    (4, 7),
    (5, 5),
    (6, 5),
    (7, 3),
    (8, 3),
    (11, 1),
    (14, 1),
    (15, 1),
    (23, -1),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumModel {
    id: ModelId,
    base: InvertedSet,
    ledger: TorsionLedger,
}

impl SpectrumModel {
    /// The model over `Z[1/S]`. `Tmf(2)` always inverts 2.
    pub fn new(id: ModelId, base: InvertedSet) -> Self {
        let base = match id {
            ModelId::Tmf2 => base.with([2]).expect("2 is prime"),
            ModelId::Tmf1(m) => base.union(&InvertedSet::inverting(m as i64)),
            _ => base,
        };
        Self {
            id,
            base,
            ledger: TorsionLedger::builtin(),
        }
    }

    pub fn tmf(base: InvertedSet) -> Self {
        Self::new(ModelId::Tmf, base)
    }

    pub fn ku(base: InvertedSet) -> Self {
        Self::new(ModelId::Ku, base)
    }

    pub fn ko(base: InvertedSet) -> Self {
        Self::new(ModelId::Ko, base)
    }

    pub fn tmf2(base: InvertedSet) -> Self {
        Self::new(ModelId::Tmf2, base)
    }

    pub fn tmf1(m: u64) -> Self {
        Self::new(ModelId::Tmf1(m), InvertedSet::integers())
    }

    pub fn with_ledger(mut self, ledger: TorsionLedger) -> Self {
        self.ledger = ledger;
        self
    }

    /// The same model with more primes inverted.
    pub fn localized(&self, extra: &InvertedSet) -> Self {
        Self {
            id: self.id,
            base: self.base.union(extra),
            ledger: self.ledger.clone(),
        }
    }

    pub fn id(&self) -> ModelId {
        self.id
    }

    pub fn base(&self) -> &InvertedSet {
        &self.base
    }

    pub fn ledger(&self) -> &TorsionLedger {
        &self.ledger
    }

    /// The weighted projective line whose cohomology computes the model.
    pub fn wps(&self) -> Option<WpsConfig> {
        match self.id {
            ModelId::Tmf => Some(WpsConfig::elliptic(self.base.clone())),
            ModelId::Tmf2 => Some(WpsConfig::level_two(self.base.clone())),
            _ => None,
        }
    }

    fn require(&self, primes: &[u64]) -> Result<()> {
        if primes.iter().all(|&p| self.base.contains(p)) {
            Ok(())
        } else {
            Err(Error::MissingPrimes {
                model: self.id.to_string(),
                required: primes.to_vec(),
            })
        }
    }

    pub fn homotopy_group(&self, k: i64) -> Result<HomotopyGroup> {
        let mut basis = Vec::new();
        match self.id {
            ModelId::Tmf | ModelId::Tmf2 => {
                if self.id == ModelId::Tmf {
                    self.require(&[2, 3])?;
                }
                let cfg = self.wps().expect("sheaf model");
                basis.extend(wps_classes(&cfg, k));
                basis.extend(self.ledger_classes(k));
            }
            ModelId::Ku => {
                if k.rem_euclid(2) == 0 {
                    basis.push(free_class(FreeGen::Bott(k / 2), k, bott_label("u", k / 2)));
                }
            }
            ModelId::Ko => {
                let j = k.div_euclid(8);
                let uj = |prefix: &str| {
                    let tail = bott_label("uR", j);
                    match (prefix, tail.as_str()) {
                        ("", t) => t.to_string(),
                        (p, "1") => p.to_string(),
                        (p, t) => format!("{p} {t}"),
                    }
                };
                match k.rem_euclid(8) {
                    0 => basis.push(free_class(FreeGen::Real { period: j, v: false }, k, uj(""))),
                    4 => basis.push(free_class(FreeGen::Real { period: j, v: true }, k, uj("v"))),
                    1 if !self.base.contains(2) => basis.push(torsion_class("eta", j, 0, 2, k, uj("eta"))),
                    2 if !self.base.contains(2) => basis.push(torsion_class("eta^2", j, 0, 2, k, uj("eta^2"))),
                    _ => {}
                }
            }
            ModelId::Tmf1(_) => {
                return Err(Error::UnsupportedModel {
                    model: self.id.to_string(),
                })
            }
        }
        let free = basis.iter().filter(|b| matches!(b.generator, Generator::Free(_))).count();
        let orders = basis.iter().filter_map(|b| match &b.generator {
            Generator::Torsion(t) => Some(t.order),
            Generator::Free(_) => None,
        });
        Ok(HomotopyGroup {
            degree: k,
            group: FinAbGroup::new(free, orders),
            basis,
        })
    }

    /// Ledger torsion of `Tmf` in degree `k` at the primes not inverted in
    /// the base. Empty for every other model.
    pub fn ledger_classes(&self, k: i64) -> Vec<BasisClass> {
        if self.id != ModelId::Tmf {
            return Vec::new();
        }
        let mut out = Vec::new();
        for e in self.ledger.entries() {
            if self.base.contains(e.prime) {
                continue;
            }
            if let Some(l) = e.parameter_for(k) {
                for (s, &order) in e.orders.iter().enumerate() {
                    let label = format!("{}[l={l}]", e.family);
                    out.push(torsion_class(&e.family, l as i64, s, order, k, label));
                }
            }
        }
        out
    }
}

impl SpectrumModel {
    /// Human-readable form of `x` using this model's generator names,
    /// e.g. `625*c4` or `-1/5*u^-1`.
    pub fn render(&self, x: &Element) -> String {
        let cfg = self.wps();
        let mut parts = Vec::new();
        for (g, c) in &x.free {
            if c.is_zero() {
                continue;
            }
            let name = match (*g, &cfg) {
                (FreeGen::Wps { degree: 0, x, y }, Some(cfg)) => H0Monomial { a: x, b: y }.label(cfg),
                (FreeGen::Wps { x, y, .. }, Some(cfg)) => H1Monomial::new(x, y).label(cfg),
                _ => gen_label(g),
            };
            parts.push(term(&c.to_string(), &name));
        }
        for (t, &r) in &x.torsion {
            if r != 0 {
                parts.push(term(&r.to_string(), &t.label));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn term(coeff: &str, name: &str) -> String {
    match coeff {
        "1" => name.to_string(),
        "-1" => format!("-{name}"),
        c => format!("{c}*{name}"),
    }
}

fn free_class(g: FreeGen, degree: i64, label: String) -> BasisClass {
    BasisClass {
        generator: Generator::Free(g),
        degree,
        label,
    }
}

fn torsion_class(family: &str, index: i64, summand: usize, order: u64, degree: i64, label: String) -> BasisClass {
    BasisClass {
        generator: Generator::Torsion(TorsionGen {
            family: family.into(),
            index,
            summand,
            order,
            label: label.clone(),
        }),
        degree,
        label,
    }
}

fn bott_label(name: &str, j: i64) -> String {
    match j {
        0 => "1".into(),
        1 => name.into(),
        j => format!("{name}^{j}"),
    }
}

fn wps_classes(cfg: &WpsConfig, k: i64) -> Vec<BasisClass> {
    if k >= 0 && k % 2 == 0 {
        h0_basis(cfg, k / 2)
            .into_iter()
            .map(|m| free_class(FreeGen::Wps { degree: 0, x: m.a, y: m.b }, k, m.label(cfg)))
            .collect()
    } else if k < 0 && k % 2 != 0 {
        h1_basis(cfg, (k + 1) / 2)
            .into_iter()
            .map(|m| free_class(FreeGen::Wps { degree: 1, x: m.i, y: m.j }, k, m.label(cfg)))
            .collect()
    } else {
        Vec::new()
    }
}

/// A homogeneous element: coefficients over free generators in `Z[1/S]` and
/// residues over torsion generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    degree: i64,
    free: BTreeMap<FreeGen, LocalizedScalar>,
    torsion: BTreeMap<TorsionGen, u64>,
}

impl Element {
    pub fn zero(degree: i64) -> Self {
        Self {
            degree,
            free: BTreeMap::new(),
            torsion: BTreeMap::new(),
        }
    }

    /// The basis class itself, with coefficient 1.
    pub fn basis(class: &BasisClass, base: &InvertedSet) -> Self {
        let mut e = Self::zero(class.degree);
        match &class.generator {
            Generator::Free(g) => {
                e.free.insert(*g, LocalizedScalar::one(base));
            }
            Generator::Torsion(t) => {
                e.torsion.insert(t.clone(), 1 % t.order);
            }
        }
        e
    }

    /// Embeds a sheaf-cohomology class using the degree convention.
    pub fn from_graded(x: &GradedElement) -> Self {
        let (deg, shift) = match x.degree() {
            CohomDegree::H0 => (0u8, 0),
            CohomDegree::H1 => (1u8, 1),
        };
        let mut e = Self::zero(2 * x.weight() - shift);
        for (&(a, b), c) in x.coeffs() {
            e.free.insert(FreeGen::Wps { degree: deg, x: a, y: b }, c.clone());
        }
        e
    }

    /// The sheaf-cohomology class of a purely free element of a sheaf model.
    pub fn to_graded(&self, cfg: &WpsConfig) -> Option<GradedElement> {
        if !self.torsion.is_empty() {
            return None;
        }
        let w = weight_of_degree(self.degree);
        let degree = if self.degree.rem_euclid(2) == 0 { CohomDegree::H0 } else { CohomDegree::H1 };
        let mut out = GradedElement::zero(degree, w);
        for (g, c) in &self.free {
            let FreeGen::Wps { degree: d, x, y } = *g else { return None };
            let unit = if d == 0 {
                GradedElement::h0(cfg, H0Monomial { a: x, b: y })
            } else {
                GradedElement::h1(cfg, H1Monomial::new(x, y))
            };
            out = out.add(&unit.scale(c));
        }
        Some(out)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Adds `c` to the coefficient of `g`.
    pub fn insert_free(&mut self, g: FreeGen, c: LocalizedScalar) {
        let v = match self.free.remove(&g) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.free.insert(g, v);
        }
    }

    /// Sum of two elements of the same degree.
    pub fn sum(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (g, c) in &other.free {
            out.insert_free(*g, c.clone());
        }
        for (t, &r) in &other.torsion {
            let v = (out.torsion.remove(t).unwrap_or(0) + r) % t.order;
            if v != 0 {
                out.torsion.insert(t.clone(), v);
            }
        }
        out
    }

    pub fn free_coeffs(&self) -> &BTreeMap<FreeGen, LocalizedScalar> {
        &self.free
    }

    pub fn torsion_residues(&self) -> &BTreeMap<TorsionGen, u64> {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free.values().all(LocalizedScalar::is_zero) && self.torsion.values().all(|&r| r == 0)
    }

    pub fn is_torsion(&self) -> bool {
        self.free.values().all(LocalizedScalar::is_zero)
    }

    /// Multiplies free coefficients by `free_scalar` and torsion residues by
    /// `torsion_scalar` read modulo each order.
    pub fn act(&self, free_scalar: &LocalizedScalar, torsion_scalar: &LocalizedScalar) -> Result<Self> {
        let mut out = Self::zero(self.degree);
        for (g, c) in &self.free {
            let v = c * free_scalar;
            if !v.is_zero() {
                out.free.insert(*g, v);
            }
        }
        for (t, &r) in &self.torsion {
            let s = torsion_scalar.residue_mod(t.order).ok_or_else(|| Error::NotInvertible {
                value: torsion_scalar.to_string(),
                context: format!("Z/{}", t.order),
            })?;
            let v = (r as u128 * s as u128 % t.order as u128) as u64;
            if v != 0 {
                out.torsion.insert(t.clone(), v);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &LocalizedScalar) -> Result<Self> {
        self.act(s, s)
    }

    pub fn label(&self) -> String {
        let mut parts: Vec<String> = self
            .free
            .iter()
            .map(|(g, c)| format!("({c})*{}", gen_label(g)))
            .collect();
        parts.extend(
            self.torsion
                .iter()
                .map(|(t, r)| format!("{r}*{}", t.label)),
        );
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn gen_label(g: &FreeGen) -> String {
    match *g {
        FreeGen::Wps { degree: 0, x, y } => format!("g1^{x} g2^{y}"),
        FreeGen::Wps { x, y, .. } => format!("1/(g1^{x} g2^{y})"),
        FreeGen::Bott(j) => bott_label("u", j),
        FreeGen::Real { period, v: false } => bott_label("uR", period),
        FreeGen::Real { period: 0, v: true } => "v".into(),
        FreeGen::Real { period, v: true } => format!("v {}", bott_label("uR", period)),
    }
}

/// Data of an Anderson self-duality `Σ^shift R -> I_A R` witnessed by a
/// generator `D` of `pi_{-shift} R`, together with the exponent `e` such
/// that `psi^n(D) = n^e D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityWitness {
    pub model: ModelId,
    pub shift: i64,
    pub witness_degree: i64,
    pub element: String,
    pub lambda_exponent: i64,
}

impl DualityWitness {
    /// `lambda(n) = n^lambda_exponent` in `Z[1/S]`, with the primes of `n` added.
    pub fn lambda(&self, n: i64, base: &InvertedSet) -> Result<LocalizedScalar> {
        crate::exactmath::int_pow(n, self.lambda_exponent, &base.union(&InvertedSet::inverting(n)))
    }
}

pub fn witness(id: ModelId) -> Result<DualityWitness> {
    let w = |shift: i64, element: &str, lambda_exponent| DualityWitness {
        model: id,
        shift,
        witness_degree: -shift,
        element: element.into(),
        lambda_exponent,
    };
    Ok(match id {
        ModelId::Ku => w(0, "1", 0),
        ModelId::Ko => w(4, "v uR^-1", -2),
        ModelId::Tmf => w(21, "1/(c4 c6)", -10),
        ModelId::Tmf2 => w(9, "1/(lambda1 lambda2)", -4),
        ModelId::Tmf1(m) => {
            let (_, l) = TMF1_TABLE
                .iter()
                .find(|(mm, _)| *mm == m)
                .ok_or(Error::NoSelfDuality { m })?;
            w(*l, &format!("D_{m}"), -(l - 1) / 2)
        }
    })
}

/// The witness `D` as an element of the model's homotopy.
pub fn witness_element(model: &SpectrumModel) -> Result<Element> {
    let wit = witness(model.id())?;
    let group = model.homotopy_group(wit.witness_degree)?;
    let free: Vec<&BasisClass> = group
        .basis
        .iter()
        .filter(|b| matches!(b.generator, Generator::Free(_)))
        .collect();
    match free.as_slice() {
        [d] => Ok(Element::basis(d, model.base())),
        _ => Err(Error::ForeignElement {
            model: model.id().to_string(),
            degree: wit.witness_degree,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: &[u64]) -> InvertedSet {
        InvertedSet::new(p.iter().copied()).unwrap()
    }

    #[test]
    fn tmf_examples() {
        let tmf = SpectrumModel::tmf(s(&[2, 3]));
        let g = tmf.homotopy_group(8).unwrap();
        assert_eq!(g.group, FinAbGroup::free(1));
        assert_eq!(g.basis[0].label, "c4");
        let g = tmf.homotopy_group(-21).unwrap();
        assert_eq!(g.group, FinAbGroup::free(1));
        assert_eq!(g.basis[0].label, "1/(c4 c6)");
        assert!(tmf.homotopy_group(3).unwrap().group.is_zero());
        assert!(tmf.homotopy_group(-4).unwrap().group.is_zero());
        assert!(tmf.homotopy_group(-3).unwrap().group.is_zero());
        assert!(matches!(
            SpectrumModel::tmf(s(&[5])).homotopy_group(8),
            Err(Error::MissingPrimes { .. })
        ));
    }

    #[test]
    fn ko_examples() {
        let ko = SpectrumModel::ko(InvertedSet::integers());
        assert_eq!(ko.homotopy_group(-6).unwrap().group, FinAbGroup::cyclic(2));
        let expected = ["Z", "Z/2", "Z/2", "0", "Z", "0", "0", "0"];
        for k in 0..8 {
            assert_eq!(ko.homotopy_group(k).unwrap().group.to_string(), expected[k as usize]);
        }
        assert_eq!(ko.homotopy_group(-4).unwrap().basis[0].label, "v uR^-1");
        // 2 inverted kills eta
        let ko2 = SpectrumModel::ko(s(&[2]));
        assert!(ko2.homotopy_group(1).unwrap().group.is_zero());
    }

    #[test]
    fn ku_and_tmf1() {
        let ku = SpectrumModel::ku(InvertedSet::integers());
        assert_eq!(ku.homotopy_group(-2).unwrap().basis[0].label, "u^-1");
        assert!(ku.homotopy_group(3).unwrap().group.is_zero());
        assert!(matches!(
            SpectrumModel::tmf1(5).homotopy_group(0),
            Err(Error::UnsupportedModel { .. })
        ));
    }

    #[test]
    fn tmf2_inverts_two() {
        let m = SpectrumModel::tmf2(InvertedSet::integers());
        assert!(m.base().contains(2));
        assert_eq!(m.homotopy_group(-9).unwrap().basis[0].label, "1/(lambda1 lambda2)");
        assert_eq!(m.homotopy_group(8).unwrap().group, FinAbGroup::free(3));
    }

    #[test]
    fn witness_examples() {
        let w = witness(ModelId::Tmf1(5)).unwrap();
        assert_eq!((w.shift, w.lambda_exponent), (5, -2));
        let w = witness(ModelId::Ku).unwrap();
        assert_eq!((w.shift, w.lambda_exponent), (0, 0));
        let w = witness(ModelId::Tmf1(23)).unwrap();
        assert_eq!((w.shift, w.lambda_exponent), (-1, 1));
        assert_eq!(w.lambda(3, &InvertedSet::integers()).unwrap().to_string(), "3");
        assert_eq!(witness(ModelId::Tmf1(9)), Err(Error::NoSelfDuality { m: 9 }));
        let w = witness(ModelId::Tmf).unwrap();
        assert_eq!((w.shift, w.witness_degree), (21, -21));
    }

    #[test]
    fn ledger_classes_only_at_uninverted_primes() {
        let m = SpectrumModel::tmf(s(&[5]));
        let c = m.ledger_classes(75);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].label, "alpha*Delta^{3(l+1)}[l=0]");
        assert!(SpectrumModel::tmf(s(&[3, 5])).ledger_classes(75).is_empty());
        assert_eq!(m.ledger_classes(195).len(), 1);
    }

    #[test]
    fn graded_roundtrip() {
        let cfg = WpsConfig::elliptic(s(&[2, 3]));
        let d = crate::wpsline::discriminant(&cfg).unwrap();
        let e = Element::from_graded(&d);
        assert_eq!(e.degree(), 24);
        assert_eq!(e.to_graded(&cfg).unwrap(), d);
        assert_eq!(weight_of_degree(-21), -10);
        assert_eq!(weight_of_degree(24), 12);
        assert_eq!(weight_of_degree(-9), -4);
    }

    #[test]
    fn rendering() {
        let tmf = SpectrumModel::tmf(s(&[2, 3, 5]));
        let c4 = &tmf.homotopy_group(8).unwrap().basis[0];
        let x = Element::basis(c4, tmf.base()).scale(&LocalizedScalar::integer(625, tmf.base())).unwrap();
        assert_eq!(tmf.render(&x), "625*c4");
        let ku = SpectrumModel::ku(s(&[5]));
        let u = &ku.homotopy_group(-2).unwrap().basis[0];
        let y = Element::basis(u, ku.base()).scale(&"-1/5".parse().unwrap()).unwrap();
        assert_eq!(ku.render(&y), "-1/5*u^-1");
        assert_eq!(ku.render(&Element::zero(4)), "0");
    }

    #[test]
    fn model_ids_parse() {
        assert_eq!("TMF".parse::<ModelId>().unwrap(), ModelId::Tmf);
        assert_eq!("tmf1(7)".parse::<ModelId>().unwrap(), ModelId::Tmf1(7));
        assert!("foo".parse::<ModelId>().is_err());
    }
}
