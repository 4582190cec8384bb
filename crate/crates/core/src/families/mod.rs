//! Concrete bent families over GF(2^n): Gold monomials with their duals and
//! the constructions built on them, and a Maiorana-McFarland type family
//! with an explicit dual.

pub(crate) mod gold;
mod mm;

pub use gold::{
    corn4t_build, cort_m_build, gold_build, gold_dual, gold_dual_build, gold_function, gold_in_s,
    p_lambda, thfromgold_build, GoldParams,
};
pub use mm::{mm_build, mm_dual, mm_dual_build, mm_function, thmm_build, MMParams, Permutation};

use crate::boolfun::BooleanFunction;
use crate::constructions::{compose_with, ConstructionReport, SideCondition};
use crate::error::Result;
use crate::field::{FieldElement, FieldSpec};
use crate::pairing::Pairing;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `x -> Tr(a x)` as a truth table.
pub(crate) fn trace_form(spec: &FieldSpec, a: FieldElement) -> BooleanFunction {
    BooleanFunction::linear(spec.n(), spec.trace_vector(a))
}

/// Pairwise condition on the mus, labelled from 2 as in the reduced construction.
pub(crate) fn pairwise(
    mus: &[FieldElement],
    label: &str,
    holds: impl Fn(FieldElement, FieldElement) -> bool,
) -> Vec<SideCondition> {
    let mut out = Vec::new();
    for i in 0..mus.len() {
        for j in i + 1..mus.len() {
            out.push(SideCondition::new(
                format!("{label} (mu{}, mu{})", i + 2, j + 2),
                holds(mus[i], mus[j]),
            ));
        }
    }
    out
}

/// Pieces of a build of the shape
/// `h = base + F(first, Tr(mu_2 x), ...)`, `h* = base* + F(Tr(alpha x), varphi_2, ...)`.
pub(crate) struct ReducedShape {
    pub base: BooleanFunction,
    pub first: BooleanFunction,
    pub base_star: BooleanFunction,
    pub varphi: Vec<BooleanFunction>,
}

pub(crate) fn assemble(
    name: &'static str,
    spec: &FieldSpec,
    shape: ReducedShape,
    mus: &[FieldElement],
    alpha: FieldElement,
    outer: &BooleanFunction,
) -> Result<ConstructionReport> {
    let linear = mus.iter().map(|&mu| trace_form(spec, mu)).collect();
    let h = &shape.base ^ &compose_with(outer, Some(shape.first), linear)?;
    let h_star = &shape.base_star
        ^ &compose_with(outer, Some(trace_form(spec, alpha)), shape.varphi)?;
    let mut report = ConstructionReport::new(name, &Pairing::trace(spec), h, Some(h_star));
    report.warnings = crate::constructions::mu_warnings(mus);
    Ok(report)
}

pub(crate) fn check_outer_arity(mus: &[FieldElement], outer: &BooleanFunction) -> Result<()> {
    let expected = mus.len() as u32 + 1;
    if outer.n() != expected {
        return Err(crate::error::Error::ArityMismatch {
            expected,
            got: outer.n(),
        });
    }
    Ok(())
}
