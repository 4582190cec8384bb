//! Secondary constructions `h = f + F(phi)` and their duals.
//!
//! The central object is the [`PrCertificate`]: `f` and an (n, r)-function
//! `phi` such that every `f + omega . phi` is bent with dual
//! `f* + omega . varphi` for one fixed companion `varphi`. Given such a
//! certificate, `f + F(phi)` is bent with dual `f* + F(varphi)` for every
//! Boolean function `F` on r variables ([`build_generic`]). The remaining
//! builders are the classical special cases; each one checks its own side
//! conditions, evaluates its closed-form dual, and verifies the result
//! spectrally.

use std::fmt;

use crate::boolfun::{BooleanFunction, VectorialFunction};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::gf2::Echelon;
use crate::pairing::Pairing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideCondition {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl SideCondition {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Spectral check of a built function against its formula dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verification {
    pub h_bent: bool,
    pub dual_matches: bool,
}

#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub construction: &'static str,
    pub pairing: Pairing,
    pub h: BooleanFunction,
    /// Formula dual; absent when the formula is undefined (non-bent inputs).
    pub h_star: Option<BooleanFunction>,
    pub side_conditions: Vec<SideCondition>,
    pub parameters: Vec<(String, String)>,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
    pub verification: Verification,
}

impl ConstructionReport {
    pub(crate) fn new(
        construction: &'static str,
        pairing: &Pairing,
        h: BooleanFunction,
        h_star: Option<BooleanFunction>,
    ) -> Self {
        Self {
            construction,
            pairing: pairing.clone(),
            h,
            h_star,
            side_conditions: Vec::new(),
            parameters: Vec::new(),
            warnings: Vec::new(),
            notes: Vec::new(),
            verification: Verification {
                h_bent: false,
                dual_matches: false,
            },
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.parameters.push((key.to_string(), value.to_string()));
        self
    }

    pub(crate) fn conditions(mut self, conds: impl IntoIterator<Item = SideCondition>) -> Self {
        self.side_conditions.extend(conds);
        self
    }

    pub fn conditions_passed(&self) -> bool {
        self.side_conditions.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&SideCondition> {
        self.side_conditions.iter().find(|c| !c.passed)
    }

    /// All side conditions passed, `h` is bent and its dual equals `h_star`.
    pub fn is_valid(&self) -> bool {
        self.conditions_passed() && self.verification.h_bent && self.verification.dual_matches
    }

    fn verify(&mut self) {
        let h_bent = self.pairing.is_bent(&self.h);
        let dual_matches = h_bent
            && match (&self.h_star, self.pairing.dual(&self.h)) {
                (Some(hs), Ok(d)) => *hs == d,
                _ => false,
            };
        self.verification = Verification {
            h_bent,
            dual_matches,
        };
    }

    /// Runs the spectral verification and converts a failed side condition
    /// into an error carrying the report.
    pub(crate) fn finish(mut self) -> Result<Self> {
        self.verify();
        match self.first_failure() {
            None => Ok(self),
            Some(c) => {
                let condition = match &c.detail {
                    Some(d) => format!("{} ({d})", c.name),
                    None => c.name.clone(),
                };
                Err(Error::SideConditionFailed {
                    condition,
                    report: Box::new(self),
                })
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrFailure {
    FNotBent,
    ShiftNotBent,
    DualMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrWitness {
    pub omega: u32,
    /// First point where the dual of the shift disagrees with `f* + omega . varphi`.
    pub x: Option<u32>,
    pub failure: PrFailure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrCertificate {
    pub holds: bool,
    pub varphi: Option<VectorialFunction>,
    pub witness: Option<PrWitness>,
}

impl PrCertificate {
    fn fail(omega: u32, x: Option<u32>, failure: PrFailure) -> Self {
        Self {
            holds: false,
            varphi: None,
            witness: Some(PrWitness { omega, x, failure }),
        }
    }
}

fn check_arity(expected: u32, got: u32) -> Result<()> {
    if expected != got {
        Err(Error::ArityMismatch { expected, got })
    } else {
        Ok(())
    }
}

fn first_difference(a: &BooleanFunction, b: &BooleanFunction) -> Option<u32> {
    (0..a.len() as u32).find(|&x| a.get(x) != b.get(x))
}

/// Decides whether `f` has the certificate property with respect to `phi`.
///
/// The companion `varphi_i = f* + (f + phi_i)*` is forced by the weight-one
/// shifts; every one of the `2^r` shifts is then checked against it.
pub fn check_property_pr(
    pairing: &Pairing,
    f: &BooleanFunction,
    phi: &VectorialFunction,
) -> Result<PrCertificate> {
    check_arity(pairing.n(), f.n())?;
    check_arity(f.n(), phi.n())?;
    let Ok(f_star) = pairing.dual(f) else {
        return Ok(PrCertificate::fail(0, None, PrFailure::FNotBent));
    };
    let mut varphi = Vec::with_capacity(phi.r() as usize);
    for (i, phi_i) in phi.components().iter().enumerate() {
        match pairing.dual(&(f ^ phi_i)) {
            Ok(d) => varphi.push(&f_star ^ &d),
            Err(_) => return Ok(PrCertificate::fail(1 << i, None, PrFailure::ShiftNotBent)),
        }
    }
    let varphi = VectorialFunction::new(varphi)?;
    for omega in 0..1u32 << phi.r() {
        if omega.count_ones() < 2 {
            continue;
        }
        let shifted = f ^ &phi.dot(omega);
        let Ok(d) = pairing.dual(&shifted) else {
            return Ok(PrCertificate::fail(omega, None, PrFailure::ShiftNotBent));
        };
        let expected = &f_star ^ &varphi.dot(omega);
        if let Some(x) = first_difference(&d, &expected) {
            return Ok(PrCertificate::fail(omega, Some(x), PrFailure::DualMismatch));
        }
    }
    Ok(PrCertificate {
        holds: true,
        varphi: Some(varphi),
        witness: None,
    })
}

/// True iff every sum of an odd number of functions among `f, g_1, ..., g_r`
/// is bent with dual equal to the sum of the individual duals.
pub fn check_odd_sum_condition(
    pairing: &Pairing,
    f: &BooleanFunction,
    g_list: &[BooleanFunction],
) -> Result<bool> {
    check_arity(pairing.n(), f.n())?;
    for g in g_list {
        check_arity(f.n(), g.n())?;
    }
    let members: Vec<&BooleanFunction> = std::iter::once(f).chain(g_list).collect();
    let mut duals = Vec::with_capacity(members.len());
    for m in &members {
        match pairing.dual(m) {
            Ok(d) => duals.push(d),
            Err(_) => return Ok(false),
        }
    }
    let zero = BooleanFunction::zero(f.n());
    for subset in 1u32..1 << members.len() {
        if subset.count_ones() % 2 == 0 || subset.count_ones() == 1 {
            continue;
        }
        let pick = |fs: &[&BooleanFunction]| {
            fs.iter()
                .enumerate()
                .filter(|(i, _)| subset >> i & 1 == 1)
                .fold(zero.clone(), |acc, (_, g)| &acc ^ *g)
        };
        let sum = pick(&members);
        let dual_sum = pick(&duals.iter().collect::<Vec<_>>());
        match pairing.dual(&sum) {
            Ok(d) if d == dual_sum => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

fn is_linear(f: &BooleanFunction) -> bool {
    !f.get(0) && f.algebraic_degree() <= 1
}

/// `h = f + F(phi)`, `h* = f* + F(varphi)` from a valid certificate.
pub fn build_generic(
    pairing: &Pairing,
    f: &BooleanFunction,
    outer: &BooleanFunction,
    phi: &VectorialFunction,
    certificate: &PrCertificate,
) -> Result<ConstructionReport> {
    let varphi = match (&certificate.varphi, certificate.holds) {
        (Some(v), true) => v,
        _ => return Err(Error::CertificateInvalid),
    };
    check_arity(phi.r(), outer.n())?;
    check_arity(phi.r(), varphi.r())?;
    let f_star = pairing.dual(f)?;
    let h = f ^ &BooleanFunction::compose(outer, phi)?;
    let h_star = &f_star ^ &BooleanFunction::compose(outer, varphi)?;
    let mut report = ConstructionReport::new("generic", pairing, h, Some(h_star))
        .param("r", phi.r())
        .param("F", outer.to_table_string())
        .conditions([SideCondition::new("property P_r", true)]);
    if phi.components().iter().all(is_linear) {
        report
            .notes
            .push("phi is linear: translation-of-dual form of the certificate applies".into());
    }
    report.finish()
}

/// Warnings for zero, repeated or linearly dependent shift elements.
pub(crate) fn mu_warnings(mus: &[FieldElement]) -> Vec<String> {
    let mut warnings = Vec::new();
    if mus.contains(&0) {
        warnings.push("a mu is zero".to_string());
    }
    let mut sorted = mus.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        warnings.push("repeated mu".to_string());
    }
    if Echelon::from_vectors(mus.iter().copied()).rank() < mus.len() && !mus.contains(&0) {
        warnings.push("mus are linearly dependent".to_string());
    }
    warnings
}

pub(crate) fn format_mus(mus: &[FieldElement]) -> String {
    crate::format::write_tuple(mus)
}

/// Conditions `D_{mu_i} D_{mu_j} f* = 0` for every pair, labelled from `first_label`.
pub(crate) fn pairwise_second_derivatives(
    f_star: &BooleanFunction,
    mus: &[FieldElement],
    first_label: usize,
) -> Vec<SideCondition> {
    let derivs: Vec<BooleanFunction> = mus.iter().map(|&mu| f_star.derivative(mu)).collect();
    let mut out = Vec::new();
    for i in 0..mus.len() {
        for j in i + 1..mus.len() {
            let dd = derivs[i].derivative(mus[j]);
            let mut c = SideCondition::new(
                format!(
                    "D_mu{}D_mu{} f* = 0",
                    i + first_label,
                    j + first_label
                ),
                dd.is_zero(),
            );
            if let Some(x) = first_difference(&dd, &BooleanFunction::zero(dd.n())) {
                c = c.with_detail(format!("nonzero at x={x:x}"));
            }
            out.push(c);
        }
    }
    out
}

pub(crate) fn linear_forms(pairing: &Pairing, mus: &[FieldElement]) -> Vec<BooleanFunction> {
    mus.iter().map(|&mu| pairing.linear_form(mu)).collect()
}

pub(crate) fn require_bent(pairing: &Pairing, f: &BooleanFunction, name: &str) -> Result<BooleanFunction> {
    check_arity(pairing.n(), f.n())?;
    pairing
        .dual(f)
        .map_err(|_| Error::NotBent(format!("{name} is not bent")))
}

/// `x -> F(first(x), second_1(x), ...)`.
pub(crate) fn compose_with(
    outer: &BooleanFunction,
    first: Option<BooleanFunction>,
    rest: Vec<BooleanFunction>,
) -> Result<BooleanFunction> {
    let components: Vec<BooleanFunction> = first.into_iter().chain(rest).collect();
    let phi = VectorialFunction::new(components)?;
    BooleanFunction::compose(outer, &phi)
}

/// `h = f1 f2 + f1 f3 + f2 f3` with dual `f1* f2* + f1* f3* + f2* f3*`.
pub fn carlet_build(
    pairing: &Pairing,
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
) -> Result<ConstructionReport> {
    for f in [f1, f2, f3] {
        check_arity(pairing.n(), f.n())?;
    }
    let maj = |a: &BooleanFunction, b: &BooleanFunction, c: &BooleanFunction| {
        &(&(a & b) ^ &(a & c)) ^ &(b & c)
    };
    let h = maj(f1, f2, f3);
    let duals: Vec<Option<BooleanFunction>> = [f1, f2, f3].iter().map(|f| pairing.dual(f).ok()).collect();
    let sum = &(f1 ^ f2) ^ f3;
    let sum_dual = pairing.dual(&sum).ok();
    let mut conds: Vec<SideCondition> = duals
        .iter()
        .enumerate()
        .map(|(i, d)| SideCondition::new(format!("f{} bent", i + 1), d.is_some()))
        .collect();
    conds.push(SideCondition::new("f1+f2+f3 bent", sum_dual.is_some()));
    let h_star = match (&duals[0], &duals[1], &duals[2]) {
        (Some(a), Some(b), Some(c)) => {
            let additive = sum_dual.as_ref().map(|d| *d == &(a ^ b) ^ c).unwrap_or(false);
            conds.push(SideCondition::new("(f1+f2+f3)* = f1*+f2*+f3*", additive));
            Some(maj(a, b, c))
        }
        _ => {
            conds.push(SideCondition::new("(f1+f2+f3)* = f1*+f2*+f3*", false));
            None
        }
    };
    ConstructionReport::new("carlet", pairing, h, h_star)
        .conditions(conds)
        .finish()
}

/// `h = f + <a,x><b,x>`, bent iff `D_a D_b f* = 0`.
pub fn mesnager_build(
    pairing: &Pairing,
    f: &BooleanFunction,
    a: FieldElement,
    b: FieldElement,
) -> Result<ConstructionReport> {
    let f_star = require_bent(pairing, f, "f")?;
    let cond = pairwise_second_derivatives(&f_star, &[a, b], 1)
        .pop()
        .expect("one pair")
        .clone();
    let cond = SideCondition { name: "D_aD_b f* = 0".into(), ..cond };
    let h = f ^ &(&pairing.linear_form(a) & &pairing.linear_form(b));
    let fa = f_star.translate(a);
    let fb = f_star.translate(b);
    let h_star = &(&(&f_star & &fa) ^ &(&f_star & &fb)) ^ &(&fa & &fb);
    let mut report = ConstructionReport::new("mesnager1", pairing, h, Some(h_star))
        .param("a", format!("{a:x}"))
        .param("b", format!("{b:x}"))
        .conditions([cond]);
    report.warnings = mu_warnings(&[a, b]);
    report.finish()
}

/// `h = f1 + <a,x>(f1 + f2)`, bent iff `D_a(f1* + f2*) = 0`, with dual
/// `f1* + (f1* + f2*) D_a f1*`.
pub fn mesnager2_build(
    pairing: &Pairing,
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    a: FieldElement,
) -> Result<ConstructionReport> {
    let d1 = require_bent(pairing, f1, "f1")?;
    let d2 = require_bent(pairing, f2, "f2")?;
    let sum_dual = &d1 ^ &d2;
    let cond = SideCondition::new("D_a(f1*+f2*) = 0", sum_dual.derivative(a).is_zero());
    let h = f1 ^ &(&pairing.linear_form(a) & &(f1 ^ f2));
    let h_star = &d1 ^ &(&sum_dual & &d1.derivative(a));
    ConstructionReport::new("mesnager2", pairing, h, Some(h_star))
        .param("a", format!("{a:x}"))
        .conditions([cond])
        .finish()
}

/// `h = f + F(<mu_1,x>, ..., <mu_r,x>)` under pairwise vanishing second
/// derivatives of `f*`; `h* = f* + F(f* + f*(x + mu_i))`.
pub fn zlj_build(
    pairing: &Pairing,
    f: &BooleanFunction,
    mus: &[FieldElement],
    outer: &BooleanFunction,
) -> Result<ConstructionReport> {
    check_arity(mus.len() as u32, outer.n())?;
    let f_star = require_bent(pairing, f, "f")?;
    let conds = pairwise_second_derivatives(&f_star, mus, 1);
    let h = f ^ &compose_with(outer, None, linear_forms(pairing, mus))?;
    let varphi = mus.iter().map(|&mu| f_star.derivative(mu)).collect();
    let h_star = &f_star ^ &compose_with(outer, None, varphi)?;
    let mut report = ConstructionReport::new("zlj", pairing, h, Some(h_star))
        .param("mus", format_mus(mus))
        .param("F", outer.to_table_string())
        .conditions(conds);
    report.warnings = mu_warnings(mus);
    report.finish()
}

/// Condition (B): for every `omega'` and `x`,
/// `g*(x + sum omega_i mu_i) = g*(x) + [wt odd] f*(x) + sum omega_i f*(x + mu_i)`.
fn condition_b(
    f_star: &BooleanFunction,
    g_star: &BooleanFunction,
    mus: &[FieldElement],
) -> SideCondition {
    let n = f_star.n();
    let shifted: Vec<BooleanFunction> = mus.iter().map(|&mu| f_star.translate(mu)).collect();
    for omega in 0..1u32 << mus.len() {
        let offset = mus
            .iter()
            .enumerate()
            .filter(|(i, _)| omega >> i & 1 == 1)
            .fold(0, |acc, (_, &mu)| acc ^ mu);
        let mut rhs = shifted
            .iter()
            .enumerate()
            .filter(|(i, _)| omega >> i & 1 == 1)
            .fold(g_star.clone(), |acc, (_, s)| &acc ^ s);
        if omega.count_ones() % 2 == 1 {
            rhs = &rhs ^ f_star;
        }
        let lhs = g_star.translate(offset);
        if let Some(x) = first_difference(&lhs, &rhs) {
            return SideCondition::new("condition (B)", false).with_detail(format!(
                "omega'={} x={x:x}",
                (0..mus.len())
                    .map(|i| if omega >> i & 1 == 1 { '1' } else { '0' })
                    .collect::<String>()
            ));
        }
    }
    let _ = n;
    SideCondition::new("condition (B)", true)
}

/// `h = f + F(f + g, <mu_2,x>, ..., <mu_r,x>)`, dual
/// `f* + F(f* + g*, f* + f*(x + mu_2), ...)`.
pub fn cornew_build(
    pairing: &Pairing,
    f: &BooleanFunction,
    g: &BooleanFunction,
    mus: &[FieldElement],
    outer: &BooleanFunction,
) -> Result<ConstructionReport> {
    check_arity(mus.len() as u32 + 1, outer.n())?;
    let f_star = require_bent(pairing, f, "f")?;
    let g_star = require_bent(pairing, g, "g")?;
    let mut conds: Vec<SideCondition> = pairwise_second_derivatives(&f_star, mus, 2)
        .into_iter()
        .map(|c| SideCondition {
            name: format!("(A) {}", c.name),
            ..c
        })
        .collect();
    conds.push(condition_b(&f_star, &g_star, mus));
    let h = f ^ &compose_with(outer, Some(f ^ g), linear_forms(pairing, mus))?;
    let varphi = mus.iter().map(|&mu| f_star.derivative(mu)).collect();
    let h_star = &f_star ^ &compose_with(outer, Some(&f_star ^ &g_star), varphi)?;
    let mut report = ConstructionReport::new("cornew", pairing, h, Some(h_star))
        .param("mus", format_mus(mus))
        .param("F", outer.to_table_string())
        .conditions(conds);
    report.warnings = mu_warnings(mus);
    report.finish()
}

/// `h = f + F(f + f(x + alpha), <mu_2,x>, ...)` with `alpha` orthogonal to the
/// mus; dual `f* + F(<alpha,x>, f* + f*(x + mu_2), ...)`.
pub fn correduced_build(
    pairing: &Pairing,
    f: &BooleanFunction,
    alpha: FieldElement,
    mus: &[FieldElement],
    outer: &BooleanFunction,
) -> Result<ConstructionReport> {
    check_arity(mus.len() as u32 + 1, outer.n())?;
    let f_star = require_bent(pairing, f, "f")?;
    let mut conds = vec![SideCondition::new(
        "alpha in <mus>^perp",
        pairing.in_complement(alpha, mus),
    )];
    conds.extend(pairwise_second_derivatives(&f_star, mus, 2));
    let h = f ^ &compose_with(outer, Some(f.derivative(alpha)), linear_forms(pairing, mus))?;
    let varphi = mus.iter().map(|&mu| f_star.derivative(mu)).collect();
    let h_star = &f_star ^ &compose_with(outer, Some(pairing.linear_form(alpha)), varphi)?;
    let mut report = ConstructionReport::new("correduced", pairing, h, Some(h_star))
        .param("alpha", format!("{alpha:x}"))
        .param("mus", format_mus(mus))
        .param("F", outer.to_table_string())
        .conditions(conds);
    report.warnings = mu_warnings(mus);
    report.finish()
}
