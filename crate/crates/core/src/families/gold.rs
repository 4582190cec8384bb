use crate::boolfun::BooleanFunction;
use crate::constructions::{format_mus, ConstructionReport, SideCondition};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, LinearizedSolver};
use crate::pairing::Pairing;

use super::{assemble, check_outer_arity, gcd, pairwise, trace_form, ReducedShape};

/// `Tr(lambda x^(2^t + 1))` on GF(2^n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldParams {
    spec: FieldSpec,
    lambda: FieldElement,
    t: u64,
}

impl GoldParams {
    pub fn new(spec: &FieldSpec, lambda: FieldElement, t: u64) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParameter("t must be positive".into()));
        }
        if lambda > spec.mask() {
            return Err(Error::InvalidParameter(format!(
                "lambda {lambda:x} out of range for n = {}",
                spec.n()
            )));
        }
        Ok(Self {
            spec: spec.clone(),
            lambda,
            t,
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `gcd(t, n)`.
    pub fn d(&self) -> u64 {
        gcd(self.t, self.spec.n() as u64)
    }

    pub fn n_over_d_even(&self) -> bool {
        (self.spec.n() as u64 / self.d()) % 2 == 0
    }

    pub fn is_bent_admissible(&self) -> bool {
        self.n_over_d_even() && !gold_in_s(self)
    }

    fn require_admissible(&self) -> Result<()> {
        if !self.n_over_d_even() {
            return Err(Error::NotBentAdmissible(format!(
                "n/d = {} is odd",
                self.spec.n() as u64 / self.d()
            )));
        }
        if gold_in_s(self) {
            return Err(Error::NotBentAdmissible(format!(
                "lambda {:x} lies in S",
                self.lambda
            )));
        }
        Ok(())
    }

    fn exponent_value(&self, x: FieldElement) -> FieldElement {
        // x^(2^t + 1)
        self.spec.mul(self.spec.frobenius(x, self.t), x)
    }
}

pub fn gold_function(p: &GoldParams) -> BooleanFunction {
    let s = &p.spec;
    BooleanFunction::from_fn(s.n(), |x| s.trace(s.mul(p.lambda, p.exponent_value(x))))
}

/// Whether `lambda` is a `(2^t + 1)`-th power, by the order test.
pub fn gold_in_s(p: &GoldParams) -> bool {
    if p.lambda == 0 {
        return true;
    }
    let s = &p.spec;
    let order = s.order() as u64 - 1;
    // 2^t mod (2^n - 1) = 2^(t mod n)
    let e = (1u64 << (p.t % s.n() as u64)) + 1;
    let g = gcd(e % order.max(1), order).max(1);
    s.pow(p.lambda, order / g) == 1
}

/// Closed-form dual `Tr(lambda x0^(2^t + 1)) + (m/d mod 2)` where `x0` solves
/// `lambda x0 + lambda^(2^t) x0^(2^(2t)) = x^(2^t)`.
pub fn gold_dual(p: &GoldParams) -> Result<BooleanFunction> {
    p.require_admissible()?;
    let s = &p.spec;
    let solver = LinearizedSolver::new(s, p.lambda, p.t)?;
    let constant = (s.n() as u64 / 2 / p.d()) % 2 == 1;
    Ok(BooleanFunction::from_fn(s.n(), |x| {
        let x0 = solver.solve(s.frobenius(x, p.t));
        s.trace(s.mul(p.lambda, p.exponent_value(x0))) ^ constant
    }))
}

/// The Gold function itself, with its closed-form dual when admissible.
pub fn gold_build(p: &GoldParams) -> Result<ConstructionReport> {
    let conds = [
        SideCondition::new("n/d even", p.n_over_d_even()),
        {
            let c = SideCondition::new("lambda not in S", !gold_in_s(p));
            if gold_in_s(p) {
                c.with_detail("lambda in S")
            } else {
                c
            }
        },
    ];
    let h_star = gold_dual(p).ok();
    ConstructionReport::new("gold", &Pairing::trace(&p.spec), gold_function(p), h_star)
        .param("n", p.spec.n())
        .param("t", p.t)
        .param("lambda", format!("{:x}", p.lambda))
        .conditions(conds)
        .finish()
}

/// The closed-form Gold dual, whose own dual is the Gold function.
pub fn gold_dual_build(p: &GoldParams) -> Result<ConstructionReport> {
    let h = gold_dual(p)?;
    ConstructionReport::new("gold-dual", &Pairing::trace(&p.spec), h, Some(gold_function(p)))
        .param("n", p.spec.n())
        .param("t", p.t)
        .param("lambda", format!("{:x}", p.lambda))
        .finish()
}

// Tr(lambda (mu x^(2^t) + mu^(2^t) x + mu^(2^t + 1)))
fn gold_derivative(p: &GoldParams, mu: FieldElement) -> BooleanFunction {
    let s = &p.spec;
    let mu_t = s.frobenius(mu, p.t);
    let c = s.trace(s.mul(p.lambda, s.mul(mu_t, mu)));
    BooleanFunction::from_fn(s.n(), |x| {
        let inner = s.mul(mu, s.frobenius(x, p.t)) ^ s.mul(mu_t, x);
        s.trace(s.mul(p.lambda, inner)) ^ c
    })
}

fn gold_pair_condition(p: &GoldParams, a: FieldElement, b: FieldElement) -> bool {
    let s = &p.spec;
    let v = s.mul(s.frobenius(a, p.t), b) ^ s.mul(a, s.frobenius(b, p.t));
    !s.trace(s.mul(p.lambda, v))
}

pub(crate) fn gold_pair_holds(p: &GoldParams, a: FieldElement, b: FieldElement) -> bool {
    gold_pair_condition(p, a, b)
}

fn complement_condition(spec: &FieldSpec, alpha: FieldElement, mus: &[FieldElement]) -> SideCondition {
    SideCondition::new(
        "alpha in <mus>^perp",
        Pairing::trace(spec).in_complement(alpha, mus),
    )
}

fn common_params(
    report: ConstructionReport,
    mus: &[FieldElement],
    alpha: FieldElement,
    outer: &BooleanFunction,
) -> ConstructionReport {
    report
        .param("mus", format_mus(mus))
        .param("alpha", format!("{alpha:x}"))
        .param("F", outer.to_table_string())
}

/// `h = g* + F(g*(x) + g*(x + alpha), Tr(mu_2 x), ...)` with
/// `h* = g + F(Tr(alpha x), varphi_2, ...)` for a Gold `g`.
pub fn thfromgold_build(
    p: &GoldParams,
    mus: &[FieldElement],
    alpha: FieldElement,
    outer: &BooleanFunction,
) -> Result<ConstructionReport> {
    check_outer_arity(mus, outer)?;
    let f = gold_dual(p)?;
    let mut conds = vec![complement_condition(&p.spec, alpha, mus)];
    conds.extend(pairwise(mus, "Tr(lambda(mu_i^(2^t) mu_j + mu_i mu_j^(2^t))) = 0", |a, b| {
        gold_pair_condition(p, a, b)
    }));
    let shape = ReducedShape {
        first: f.derivative(alpha),
        base: f,
        base_star: gold_function(p),
        varphi: mus.iter().map(|&mu| gold_derivative(p, mu)).collect(),
    };
    let report = assemble("thm8", &p.spec, shape, mus, alpha, outer)?
        .param("n", p.spec.n())
        .param("t", p.t)
        .param("lambda", format!("{:x}", p.lambda));
    common_params(report, mus, alpha, outer)
        .conditions(conds)
        .finish()
}

/// The `t = m` case with `theta` in GF(2^m)*:
/// `h = Tr_1^m(theta x^(2^m + 1)) + F(Tr(theta alpha^(2^m) x) + Tr_1^m(theta alpha^(2^m + 1)), Tr(mu_2 x), ...) + 1`.
pub fn cort_m_build(
    spec: &FieldSpec,
    theta: FieldElement,
    mus: &[FieldElement],
    alpha: FieldElement,
    outer: &BooleanFunction,
) -> Result<ConstructionReport> {
    check_outer_arity(mus, outer)?;
    let m = spec
        .m()
        .ok_or_else(|| Error::InvalidParameter(format!("n = {} is odd", spec.n())))?;
    if theta == 0 || !spec.in_subfield(theta, m)? {
        return Err(Error::InvalidParameter(format!(
            "theta {theta:x} is not in GF(2^{m})*"
        )));
    }
    let theta_inv = spec.inv(theta).expect("nonzero");
    let mm = m as u64;
    let norm = |x: FieldElement| spec.mul(spec.frobenius(x, mm), x);
    let tr_m = |y: FieldElement| spec.subfield_trace(y, m).expect("norm lies in the subfield");
    let n = spec.n();

    let quad = |c: FieldElement| BooleanFunction::from_fn(n, |x| tr_m(spec.mul(c, norm(x))));
    let base = !quad(theta);
    let first = &trace_form(spec, spec.mul(theta, spec.frobenius(alpha, mm)))
        ^ &BooleanFunction::constant(n, tr_m(spec.mul(theta, norm(alpha))));
    let varphi = mus
        .iter()
        .map(|&mu| {
            &trace_form(spec, spec.mul(theta_inv, spec.frobenius(mu, mm)))
                ^ &BooleanFunction::constant(n, tr_m(spec.mul(theta_inv, norm(mu))))
        })
        .collect();
    let shape = ReducedShape {
        base,
        first,
        base_star: quad(theta_inv),
        varphi,
    };
    let mut conds = vec![complement_condition(spec, alpha, mus)];
    conds.extend(pairwise(mus, "Tr(theta^-1 mu_i mu_j^(2^m)) = 0", |a, b| {
        !spec.trace(spec.mul(theta_inv, spec.mul(a, spec.frobenius(b, mm))))
    }));
    let report = assemble("cor9", spec, shape, mus, alpha, outer)?
        .param("n", n)
        .param("theta", format!("{theta:x}"));
    common_params(report, mus, alpha, outer)
        .conditions(conds)
        .finish()
}

/// `P(lambda) = (lambda^(2^(m+1) + 1) + lambda^(2^t + 2^m + 2^(3t))) / Tr_t^m(N(lambda^2))`
/// for `n = 4t`, with `N(y) = y^(2^m + 1)`.
pub fn p_lambda(spec: &FieldSpec, lambda: FieldElement) -> Result<FieldElement> {
    let n = spec.n() as u64;
    if n % 4 != 0 {
        return Err(Error::InvalidParameter(format!("n = {n} is not a multiple of 4")));
    }
    let (t, m) = (n / 4, n / 2);
    let f = |x, k| spec.frobenius(x, k);
    let numerator = spec.mul(f(lambda, m + 1), lambda)
        ^ spec.mul(spec.mul(f(lambda, t), f(lambda, m)), f(lambda, 3 * t));
    let sq = spec.square(lambda);
    let norm = spec.mul(f(sq, m), sq);
    let denominator = norm ^ f(norm, t);
    let inv = spec.inv(denominator).ok_or(Error::ZeroDenominator)?;
    Ok(spec.mul(numerator, inv))
}

/// The `n = 4t` case with the explicit dual coefficient `P(lambda)`:
/// `h = Tr(P x^(2^t + 1)) + F(Tr(P(alpha^(2^t) x + alpha x^(2^t) + alpha^(2^t + 1))), Tr(mu_2 x), ...)`.
pub fn corn4t_build(
    spec: &FieldSpec,
    lambda: FieldElement,
    mus: &[FieldElement],
    alpha: FieldElement,
    outer: &BooleanFunction,
) -> Result<ConstructionReport> {
    check_outer_arity(mus, outer)?;
    let p_val = p_lambda(spec, lambda)?;
    let t = spec.n() as u64 / 4;
    let gold = GoldParams::new(spec, lambda, t)?;
    gold.require_admissible()?;
    let dual_side = GoldParams::new(spec, p_val, t)?;
    let shape = ReducedShape {
        base: gold_function(&dual_side),
        first: gold_derivative(&dual_side, alpha),
        base_star: gold_function(&gold),
        varphi: mus.iter().map(|&mu| gold_derivative(&gold, mu)).collect(),
    };
    let mut conds = vec![complement_condition(spec, alpha, mus)];
    conds.extend(pairwise(mus, "Tr(lambda(mu_i^(2^t) mu_j + mu_i mu_j^(2^t))) = 0", |a, b| {
        gold_pair_condition(&gold, a, b)
    }));
    let report = assemble("cor10", spec, shape, mus, alpha, outer)?
        .param("n", spec.n())
        .param("t", t)
        .param("lambda", format!("{lambda:x}"))
        .param("P(lambda)", format!("{p_val:x}"));
    common_params(report, mus, alpha, outer)
        .conditions(conds)
        .finish()
}
