//! Adams operations `psi^n` and their Anderson duals on the homotopy models,
//! together with the verification suites built on them.
//!
//! `psi^n` on sheaf models is computed from the generators (`g_i -> n^{w_i} g_i`),
//! on `KO` through complexification into `KU`. The dual operations are the
//! explicit scalar rules `psi_dual = lambda * psi^{-1}` on free classes.

use crate::error::{Error, Result};
use crate::exactmath::{ext1_to, hom_to, int_pow, ses_assemble, FinAbGroup, InvertedSet, LocalizedScalar};
use crate::models::{
    weight_of_degree, witness, witness_element, BasisClass, Element, FreeGen, Generator, ModelId, SpectrumModel,
};
use crate::report::{Check, OperationReport};
use crate::wpsline::{adams_scalar, apply_adams, h0_basis, h1_basis, serre_pairing, GradedElement, WpsConfig};

fn undefined(model: &SpectrumModel, n: i64) -> Error {
    Error::OperationUndefined {
        model: model.id().to_string(),
        n,
    }
}

fn foreign(model: &SpectrumModel, x: &Element) -> Error {
    Error::ForeignElement {
        model: model.id().to_string(),
        degree: x.degree(),
    }
}

/// Complexification `c: KO -> KU` on free generators: `c(uR^j) = u^{4j}`,
/// `c(v uR^j) = 2 u^{4j+2}`.
fn complexify(g: FreeGen) -> Option<(i64, i64)> {
    match g {
        FreeGen::Real { period, v: false } => Some((4 * period, 1)),
        FreeGen::Real { period, v: true } => Some((4 * period + 2, 2)),
        _ => None,
    }
}

fn generator_fits(model: ModelId, g: &FreeGen) -> bool {
    matches!(
        (model, g),
        (ModelId::Tmf | ModelId::Tmf2, FreeGen::Wps { .. }) | (ModelId::Ku, FreeGen::Bott(_)) | (ModelId::Ko, FreeGen::Real { .. })
    )
}

/// The Adams operation `psi^n`. Ledger and `KO` torsion classes are fixed.
pub fn psi(model: &SpectrumModel, n: i64, x: &Element) -> Result<Element> {
    if n == 0 || matches!(model.id(), ModelId::Tmf1(_)) {
        return Err(undefined(model, n));
    }
    let base = model.base();
    let mut out = Element::zero(x.degree());
    // torsion part: identity
    let torsion_only = x.act(&LocalizedScalar::zero(base), &LocalizedScalar::one(base))?;
    for (g, c) in x.free_coeffs() {
        if !generator_fits(model.id(), g) {
            return Err(foreign(model, x));
        }
        let image = match *g {
            FreeGen::Wps { .. } => {
                let cfg = model.wps().expect("sheaf model");
                let single = single_term(&Element::zero(x.degree()), *g, c.clone());
                let graded = single.to_graded(&cfg).ok_or_else(|| foreign(model, x))?;
                Element::from_graded(&apply_adams(&cfg, n, &graded)?)
            }
            FreeGen::Bott(j) => single_term(&Element::zero(x.degree()), *g, c * &int_pow(n, j, base)?),
            FreeGen::Real { .. } => {
                let (p, mult) = complexify(*g).expect("real generator");
                let ku = SpectrumModel::ku(base.clone());
                let cx = single_term(&Element::zero(2 * p), FreeGen::Bott(p), c * &LocalizedScalar::integer(mult, base));
                let image = psi(&ku, n, &cx)?;
                let coeff = image.free_coeffs().get(&FreeGen::Bott(p)).cloned().unwrap_or_else(|| LocalizedScalar::zero(base));
                // c is injective on free parts, so divide the multiplicity back out
                let back = LocalizedScalar::from_rational(
                    coeff.value() / num_rational::BigRational::from_integer(mult.into()),
                    coeff.context().clone(),
                )?;
                single_term(&Element::zero(x.degree()), *g, back)
            }
        };
        out = out.sum(&image);
    }
    Ok(out.sum(&torsion_only))
}

fn single_term(zero: &Element, g: FreeGen, c: LocalizedScalar) -> Element {
    let mut e = zero.clone();
    e.insert_free(g, c);
    e
}

/// The reason `psi_dual(n)` is left undetermined on free classes of `Tmf` in
/// degree `k`, if it is.
pub fn psi_dual_exception(model: ModelId, n: i64, k: i64) -> Option<&'static str> {
    if model != ModelId::Tmf {
        return None;
    }
    if n % 3 != 0 && k >= 0 && k.rem_euclid(72) == 40 {
        return Some("3 does not divide n and |x| = 40 mod 72");
    }
    if n % 3 != 0 && k < 0 && k.rem_euclid(72) == (-49i64).rem_euclid(72) {
        return Some("3 does not divide n and |x| = -49 mod 72");
    }
    if n % 2 != 0 && k < 0 && [-49i64, -73, -97, -121, -145, -169].iter().any(|r| k.rem_euclid(192) == r.rem_euclid(192)) {
        return Some("2 does not divide n and |x| is exceptional mod 192");
    }
    None
}

/// Exponent `e` with `psi^n = n^e` on the free generator `g` in degree `k`.
fn psi_exponent(g: FreeGen, k: i64) -> i64 {
    match g {
        FreeGen::Wps { .. } => weight_of_degree(k),
        FreeGen::Bott(j) => j,
        FreeGen::Real { .. } => complexify(g).expect("real generator").0,
    }
}

/// The dual Adams operation: on free classes `n^{-10-ceil(k/2)}` for `Tmf`,
/// `n^{-j}` on `u^j` for `KU`, `n^{-2-e}` for `KO` (with `psi^n = n^e`), and
/// `n^{-4-w}` for `Tmf(2)`. `Tmf` ledger torsion scales by `n^{-10}`, `KO`
/// torsion is fixed.
pub fn psi_dual(model: &SpectrumModel, n: i64, x: &Element) -> Result<Element> {
    if n == 0 || matches!(model.id(), ModelId::Tmf1(_)) {
        return Err(undefined(model, n));
    }
    let base = model.base();
    let k = x.degree();
    if !x.is_torsion() {
        if let Some(reason) = psi_dual_exception(model.id(), n, k) {
            return Err(Error::DualUndetermined {
                n,
                degree: k,
                reason: reason.into(),
            });
        }
    }
    let torsion_scalar = match model.id() {
        ModelId::Tmf => int_pow(n, -10, &base.union(&InvertedSet::inverting(n)))?,
        _ => LocalizedScalar::one(base),
    };
    let mut out = x.act(&LocalizedScalar::zero(base), &torsion_scalar)?;
    for (g, c) in x.free_coeffs() {
        if !generator_fits(model.id(), g) {
            return Err(foreign(model, x));
        }
        let e = match model.id() {
            ModelId::Tmf => -10 - weight_of_degree(k),
            ModelId::Ku => -psi_exponent(*g, k),
            ModelId::Ko => -2 - psi_exponent(*g, k),
            ModelId::Tmf2 => -4 - weight_of_degree(k),
            ModelId::Tmf1(_) => unreachable!(),
        };
        out.insert_free(*g, c * &int_pow(n, e, base)?);
    }
    Ok(out)
}

/// `pi_k I_A R = Ext^1(pi_{-k-1} R, A) + Hom(pi_{-k} R, A)`.
pub fn anderson_dual_group(model: &SpectrumModel, a: &InvertedSet, k: i64) -> Result<FinAbGroup> {
    let ext = ext1_to(&model.homotopy_group(-k - 1)?.group, a);
    let hom = hom_to(&model.homotopy_group(-k)?.group, a);
    Ok(ses_assemble(&ext, &hom))
}

fn degrees(window: (i64, i64)) -> impl Iterator<Item = i64> {
    window.0..=window.1
}

fn classes(model: &SpectrumModel, k: i64) -> Result<Vec<BasisClass>> {
    Ok(model.homotopy_group(k)?.basis)
}

fn scaled(model: &SpectrumModel, x: &Element, s: &LocalizedScalar) -> Result<Element> {
    let s = s.widen(&s.context().union(model.base()));
    x.scale(&s)
}

/// Runs `body` on every basis class in the window, turning errors into
/// failed checks.
fn per_class(
    report: &mut OperationReport,
    model: &SpectrumModel,
    window: (i64, i64),
    mut body: impl FnMut(&BasisClass, &Element) -> Result<Vec<Check>>,
) {
    for k in degrees(window) {
        match classes(model, k) {
            Ok(basis) => {
                for class in &basis {
                    let x = Element::basis(class, model.base());
                    match body(class, &x) {
                        Ok(checks) => checks.into_iter().for_each(|c| report.push(c)),
                        Err(e) => report.push(Check::failed(k, &class.label, "-", e)),
                    }
                }
            }
            Err(e) => report.push(Check::failed(k, "pi_k", "-", e)),
        }
    }
}

/// `pi_k I_A R` against `pi_{k-d} R` for the witness shift `d`.
pub fn verify_self_duality(model: &SpectrumModel, a: &InvertedSet, window: (i64, i64)) -> Result<OperationReport> {
    let d = witness(model.id())?.shift;
    let mut report = OperationReport::new(format!("self-duality/{}", model.id()), window);
    for k in degrees(window) {
        let check = anderson_dual_group(model, a, k).and_then(|lhs| {
            let rhs = model.homotopy_group(k - d)?;
            let labels: Vec<&str> = rhs.basis.iter().map(|b| b.label.as_str()).collect();
            let basis = format!("pi_{k} I_A vs pi_{} [{}]", k - d, labels.join(", "));
            Ok(Check::compare(k, basis, rhs.group, lhs))
        });
        report.push(check.unwrap_or_else(|e| Check::failed(k, "pi_k I_A", "-", e)));
    }
    Ok(report)
}

/// `psi^m psi^n = psi^{mn}` over the model with `mn` inverted, and
/// `psi^{-1} = psi^1 = id` over the model itself.
pub fn verify_composition(model: &SpectrumModel, m: i64, n: i64, window: (i64, i64)) -> Result<OperationReport> {
    let mut report = OperationReport::new(format!("composition/{}", model.id()), window);
    let local = model.localized(&InvertedSet::inverting(m * n));
    per_class(&mut report, &local, window, |class, x| {
        let lhs = psi(&local, m, &psi(&local, n, x)?)?;
        let rhs = psi(&local, m * n, x)?;
        let basis = format!("psi^{m} psi^{n} = psi^{} on {}", m * n, class.label);
        Ok(vec![Check::compare(x.degree(), basis, local.render(&rhs), local.render(&lhs))])
    });
    per_class(&mut report, model, window, |class, x| {
        let mut out = Vec::new();
        for e in [1, -1] {
            let got = psi(model, e, x)?;
            let basis = format!("psi^{e} = id on {}", class.label);
            out.push(Check::compare(x.degree(), basis, model.render(x), model.render(&got)));
        }
        Ok(out)
    });
    report.sort();
    Ok(report)
}

/// `psi^n(x) = n^{ceil(|x|/2)} x` on the free classes of `Tmf[1/6n]`, and
/// `psi^n(x) = x` on the ledger classes at primes in `{2, 3}` not dividing `n`.
pub fn verify_theorem_b(n: i64, window: (i64, i64)) -> Result<OperationReport> {
    verify_theorem_b_with(&SpectrumModel::tmf(InvertedSet::inverting(6 * n)), n, window)
}

/// As [`verify_theorem_b`] with the ledger of `model` (whose base is ignored).
pub fn verify_theorem_b_with(model: &SpectrumModel, n: i64, window: (i64, i64)) -> Result<OperationReport> {
    if n == 0 {
        return Err(undefined(model, n));
    }
    let mut report = OperationReport::new("theorem-b", window);
    let free = SpectrumModel::tmf(InvertedSet::inverting(6 * n)).with_ledger(model.ledger().clone());
    per_class(&mut report, &free, window, |class, x| {
        let got = psi(&free, n, x)?;
        let expected = x.scale(&adams_scalar(free.base(), weight_of_degree(x.degree()), n)?)?;
        Ok(vec![Check::compare(x.degree(), &class.label, free.render(&expected), free.render(&got))])
    });
    let torsion = SpectrumModel::tmf(InvertedSet::inverting(n)).with_ledger(model.ledger().clone());
    for k in degrees(window) {
        for class in torsion.ledger_classes(k) {
            let x = Element::basis(&class, torsion.base());
            let check = psi(&torsion, n, &x)
                .map(|got| Check::compare(k, &class.label, torsion.render(&x), torsion.render(&got)))
                .unwrap_or_else(|e| Check::failed(k, &class.label, torsion.render(&x), e));
            report.push(check);
        }
    }
    report.sort();
    Ok(report)
}

/// `psi_dual(n) = n^{-10-ceil(|x|/2)}` on the free classes of `Tmf[1/6n]`,
/// with exceptional degrees reported as skipped.
pub fn verify_dual_operation(n: i64, window: (i64, i64)) -> Result<OperationReport> {
    let tmf = SpectrumModel::tmf(InvertedSet::inverting(6 * n));
    let mut report = OperationReport::new("dual-operation", window);
    per_class(&mut report, &tmf, window, |class, x| {
        let k = x.degree();
        let expected = x.scale(&int_pow(n, -10 - weight_of_degree(k), tmf.base())?)?;
        if let Some(reason) = psi_dual_exception(ModelId::Tmf, n, k) {
            return Ok(vec![Check::skipped(k, &class.label, tmf.render(&expected), reason)]);
        }
        let got = psi_dual(&tmf, n, x)?;
        Ok(vec![Check::compare(k, &class.label, tmf.render(&expected), tmf.render(&got))])
    });
    Ok(report)
}

/// Checks `F(D) = lambda D` for `F = psi^n`, then `psi_dual psi = psi psi_dual
/// = lambda` on every class in the window. The model is localized at `n`.
pub fn verify_conjecture(model: &SpectrumModel, n: i64, window: (i64, i64)) -> Result<OperationReport> {
    let wit = witness(model.id())?;
    let model = model.localized(&InvertedSet::inverting(n));
    let lambda = wit.lambda(n, model.base())?;
    let d = witness_element(&model)?;
    let fd = psi(&model, n, &d)?;
    let lambda_d = scaled(&model, &d, &lambda)?;
    if fd != lambda_d {
        return Err(Error::WitnessNotScaled {
            expected: lambda.to_string(),
            got: model.render(&fd),
        });
    }
    let mut report = OperationReport::new(format!("conjecture/{}", model.id()), window);
    report.push(Check::compare(
        wit.witness_degree,
        format!("F(D) for D = {}", wit.element),
        model.render(&lambda_d),
        model.render(&fd),
    ));
    per_class(&mut report, &model, window, |class, x| {
        let k = x.degree();
        let expected = model.render(&scaled(&model, x, &lambda)?);
        if !x.is_torsion() {
            if let Some(reason) = psi_dual_exception(model.id(), n, k) {
                return Ok(vec![Check::skipped(k, &class.label, expected, reason)]);
            }
        }
        let a = psi_dual(&model, n, &psi(&model, n, x)?)?;
        let b = psi(&model, n, &psi_dual(&model, n, x)?)?;
        Ok(vec![
            Check::compare(k, format!("psi_dual psi on {}", class.label), &expected, model.render(&a)),
            Check::compare(k, format!("psi psi_dual on {}", class.label), &expected, model.render(&b)),
        ])
    });
    report.sort();
    Ok(report)
}

/// Compatibility of `psi_dual(n)` on `pi_k R = pi_{k+d} I_A R` with the
/// functoriality of the Anderson sequence: on free classes it must act by the
/// scalar of `Hom(psi^n, A)` on `pi_{-k-d}`, on torsion classes by that of
/// `Ext^1(psi^n, A)` on `pi_{-k-d-1}`.
pub fn diagram_check(model: &SpectrumModel, n: i64, k: i64) -> Result<OperationReport> {
    let d = witness(model.id())?.shift;
    let mut report = OperationReport::new(format!("diagram/{}", model.id()), (k, k));
    let base = model.base();
    let hom_scalar = || -> Result<Option<LocalizedScalar>> {
        let dual = classes(model, -k - d)?;
        let Some(y) = dual.iter().find(|b| matches!(b.generator, Generator::Free(_))) else {
            return Ok(None);
        };
        let image = psi(model, n, &Element::basis(y, base))?;
        Ok(image.free_coeffs().values().next().cloned())
    };
    // ledger and KO torsion are fixed by psi^n, so Ext^1(psi^n, A) is the identity
    let ext_scalar = LocalizedScalar::one(base);
    for class in classes(model, k)? {
        let x = Element::basis(&class, base);
        let check = match &class.generator {
            Generator::Free(_) => match hom_scalar() {
                Ok(Some(s)) => scaled(model, &x, &s).and_then(|expected| {
                    let got = psi_dual(model, n, &x)?;
                    Ok(Check::compare(k, format!("Hom part: {}", class.label), model.render(&expected), model.render(&got)))
                }),
                Ok(None) => Ok(Check::compare(k, format!("Hom part: {}", class.label), "free dual class", "none")),
                Err(e) => Err(e),
            },
            Generator::Torsion(_) => scaled(model, &x, &ext_scalar).and_then(|expected| {
                let got = psi_dual(model, n, &x)?;
                Ok(Check::compare(k, format!("Ext part: {}", class.label), model.render(&expected), model.render(&got)))
            }),
        };
        report.push(check.unwrap_or_else(|e| Check::failed(k, &class.label, "-", e)));
    }
    Ok(report)
}

/// Serre pairing against `psi^n`: `<psi f, psi g> = n^{-10} <f, g>` and the
/// adjunction `<psi f, g> = <f, psi_dual g>` for every pair of basis classes
/// `f` in `H^0(w^k)`, `g` in `H^1(w^{-k-10})`, `|k| <= bound`.
pub fn verify_pairing_equivariance(cfg: &WpsConfig, n: i64, bound: i64) -> Result<OperationReport> {
    let mut report = OperationReport::new("pairing-equivariance", (-bound, bound));
    let model = SpectrumModel::tmf(cfg.base.union(&InvertedSet::inverting(n)));
    let cfg = model.wps().expect("sheaf model");
    let lambda = int_pow(n, cfg.dualizing_weight(), model.base())?;
    for k in -bound..=bound {
        for f in h0_basis(&cfg, k) {
            for g in h1_basis(&cfg, cfg.dualizing_weight() - k) {
                let f = GradedElement::h0(&cfg, f);
                let g = GradedElement::h1(&cfg, g);
                let label = format!("<{}, {}>", f.label(&cfg), g.label(&cfg));
                let pf = apply_adams(&cfg, n, &f)?;
                let pg = apply_adams(&cfg, n, &g)?;
                let base = serre_pairing(&cfg, &f, &g)?;
                report.push(Check::compare(
                    2 * k,
                    format!("psi psi {label}"),
                    &lambda * &base,
                    serre_pairing(&cfg, &pf, &pg)?,
                ));
                // 6 is inverted here, so the torsion exceptions of psi_dual do not arise
                let dg = g.scale(&int_pow(n, cfg.dualizing_weight() - g.weight(), model.base())?);
                report.push(Check::compare(
                    2 * k,
                    format!("adjoint {label}"),
                    serre_pairing(&cfg, &pf, &g)?,
                    serre_pairing(&cfg, &f, &dg)?,
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::wpsline::discriminant;

    fn s(p: &[u64]) -> InvertedSet {
        InvertedSet::new(p.iter().copied()).unwrap()
    }

    fn first(model: &SpectrumModel, k: i64) -> Element {
        Element::basis(&model.homotopy_group(k).unwrap().basis[0], model.base())
    }

    fn times(model: &SpectrumModel, x: &Element, v: &str) -> Element {
        scaled(model, x, &v.parse().unwrap()).unwrap()
    }

    #[test]
    fn psi_examples() {
        let tmf = SpectrumModel::tmf(s(&[2, 3, 5]));
        let c4 = first(&tmf, 8);
        assert_eq!(psi(&tmf, 5, &c4).unwrap(), times(&tmf, &c4, "625"));
        let d = first(&tmf, -21);
        assert_eq!(psi(&tmf, 5, &d).unwrap(), times(&tmf, &d, "1/9765625"));
        let ledger = SpectrumModel::tmf(s(&[5]));
        let alpha = Element::basis(&ledger.ledger_classes(75)[0], ledger.base());
        assert_eq!(psi(&ledger, 5, &alpha).unwrap(), alpha);
    }

    #[test]
    fn psi_on_k_theory() {
        let ku = SpectrumModel::ku(s(&[3]));
        let u = first(&ku, 2);
        assert_eq!(psi(&ku, 3, &u).unwrap(), times(&ku, &u, "3"));
        assert_eq!(psi(&ku, -1, &u).unwrap(), times(&ku, &u, "-1"));
        let ko = SpectrumModel::ko(s(&[3]));
        let v = first(&ko, 4);
        assert_eq!(psi(&ko, 3, &v).unwrap(), times(&ko, &v, "9"));
        let ur = first(&ko, 8);
        assert_eq!(psi(&ko, 3, &ur).unwrap(), times(&ko, &ur, "81"));
        let eta = first(&ko, 1);
        assert_eq!(psi(&ko, 3, &eta).unwrap(), eta);
        assert!(matches!(psi(&SpectrumModel::ku(s(&[])), 2, &first(&ku, -2)), Err(Error::NotInvertible { .. })));
    }

    #[test]
    fn psi_dual_examples() {
        let tmf = SpectrumModel::tmf(s(&[2, 3, 5]));
        let cfg = tmf.wps().unwrap();
        let delta = Element::from_graded(&discriminant(&cfg).unwrap());
        let expected = times(&tmf, &delta, &format!("1/{}", num_bigint::BigInt::from(5).pow(22)));
        assert_eq!(psi_dual(&tmf, 5, &delta).unwrap(), expected);
        let d = first(&tmf, -21);
        assert_eq!(psi_dual(&tmf, 5, &d).unwrap(), d);
        let ku = SpectrumModel::ku(s(&[3]));
        let one = first(&ku, 0);
        assert_eq!(psi_dual(&ku, 3, &one).unwrap(), one);
        // exceptional degree 40
        assert!(psi_dual(&tmf, 5, &first(&tmf, 40)).is_err());
        assert!(psi_dual(&tmf, 6, &first(&tmf, 40)).is_ok());
    }

    #[test]
    fn exceptional_degrees() {
        assert!(psi_dual_exception(ModelId::Tmf, 5, 40).is_some());
        assert!(psi_dual_exception(ModelId::Tmf, 5, 112).is_some());
        assert!(psi_dual_exception(ModelId::Tmf, 3, 40).is_none());
        assert!(psi_dual_exception(ModelId::Tmf, 5, -49).is_some());
        assert!(psi_dual_exception(ModelId::Tmf, 3, -73).is_some());
        assert!(psi_dual_exception(ModelId::Tmf, 2, -73).is_none());
        assert!(psi_dual_exception(ModelId::Tmf, 5, -21).is_none());
        assert!(psi_dual_exception(ModelId::Ku, 5, 40).is_none());
    }

    #[test]
    fn anderson_dual_examples() {
        let ko = SpectrumModel::ko(s(&[]));
        assert_eq!(anderson_dual_group(&ko, &s(&[]), -2).unwrap(), FinAbGroup::cyclic(2));
        let ku = SpectrumModel::ku(s(&[]));
        assert!(anderson_dual_group(&ku, &s(&[]), 3).unwrap().is_zero());
        let tmf = SpectrumModel::tmf(s(&[2, 3]));
        assert!(anderson_dual_group(&tmf, tmf.base(), 3).unwrap().is_zero());
    }

    #[test]
    fn self_duality_suites() {
        let z = s(&[]);
        assert!(verify_self_duality(&SpectrumModel::ku(z.clone()), &z, (-10, 10)).unwrap().passed());
        assert!(verify_self_duality(&SpectrumModel::ko(z.clone()), &z, (-16, 16)).unwrap().passed());
        let tmf = SpectrumModel::tmf(s(&[2, 3]));
        assert!(verify_self_duality(&tmf, tmf.base(), (-60, 60)).unwrap().passed());
        let tmf2 = SpectrumModel::tmf2(z);
        assert!(verify_self_duality(&tmf2, tmf2.base(), (-60, 60)).unwrap().passed());
    }

    #[test]
    fn composition_and_theorem_b() {
        let tmf = SpectrumModel::tmf(s(&[2, 3]));
        assert!(verify_composition(&tmf, 2, 3, (-48, 48)).unwrap().passed());
        let r = verify_theorem_b(5, (-48, 48)).unwrap();
        assert!(r.passed() && r.count(Status::Pass) > 0);
        let r = verify_theorem_b(5, (0, 400)).unwrap();
        assert!(r.checks.iter().any(|c| c.basis.starts_with("alpha")));
        assert!(r.passed());
        let r = verify_theorem_b(7, (-21, -21)).unwrap();
        assert_eq!(r.checks[0].got, format!("1/{}*1/(c4 c6)", 7u64.pow(10)));
    }

    #[test]
    fn ku_sign_breaks_psi_minus_one() {
        let r = verify_composition(&SpectrumModel::ku(s(&[])), 2, 3, (-4, 4)).unwrap();
        let bad: Vec<_> = r.failures().map(|c| c.degree).collect();
        assert_eq!(bad, vec![-2, 2]);
    }

    #[test]
    fn conjecture_suites() {
        for model in [
            SpectrumModel::ku(s(&[])),
            SpectrumModel::ko(s(&[])),
            SpectrumModel::tmf(s(&[2, 3])),
            SpectrumModel::tmf2(s(&[])),
        ] {
            let r = verify_conjecture(&model, 5, (-48, 48)).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn diagram_examples() {
        let tmf = SpectrumModel::tmf(s(&[2, 3, 5]));
        let r = diagram_check(&tmf, 5, -21).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].expected, "1/(c4 c6)");
        let ku = SpectrumModel::ku(s(&[]));
        assert!(!diagram_check(&ku, 2, 2).unwrap().passed());
        assert!(diagram_check(&ku.localized(&s(&[2])), 2, 2).unwrap().passed());
        let ko = SpectrumModel::ko(s(&[]));
        for k in -9..9 {
            assert!(diagram_check(&ko, 1, k).unwrap().passed());
        }
    }

    #[test]
    fn pairing_equivariance() {
        let r = verify_pairing_equivariance(&WpsConfig::elliptic(s(&[2, 3])), 5, 30).unwrap();
        assert!(r.passed() && !r.checks.is_empty());
    }
}
