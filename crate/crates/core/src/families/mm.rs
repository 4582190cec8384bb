use crate::boolfun::BooleanFunction;
use crate::constructions::{format_mus, pairwise_second_derivatives, SideCondition};
use crate::constructions::ConstructionReport;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec, SubfieldEmbedding};
use crate::format::validate_permutation;
use crate::pairing::Pairing;

use super::{assemble, check_outer_arity, gcd, ReducedShape};

/// A permutation of GF(2^m), given on subfield indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Permutation {
    Table(Vec<FieldElement>),
    /// `z -> z^k` with `gcd(k, 2^m - 1) = 1`.
    Power(u64),
}

/// `f(x) = Tr(lambda x^(2^t) pi(x + x^(2^m))) + g(x + x^(2^m))` on GF(2^(2m)).
#[derive(Clone, Debug)]
pub struct MMParams {
    spec: FieldSpec,
    lambda: FieldElement,
    t: u64,
    pi: Vec<FieldElement>,
    pi_inv: Vec<FieldElement>,
    g_sub: BooleanFunction,
    embedding: SubfieldEmbedding,
    omega: FieldElement,
}

impl MMParams {
    pub fn new(
        spec: &FieldSpec,
        lambda: FieldElement,
        t: u64,
        pi: Permutation,
        g_sub: BooleanFunction,
    ) -> Result<Self> {
        let m = spec
            .m()
            .ok_or_else(|| Error::InvalidParameter(format!("n = {} is odd", spec.n())))?;
        if lambda > spec.mask() {
            return Err(Error::InvalidParameter(format!("lambda {lambda:x} out of range")));
        }
        if g_sub.n() != m {
            return Err(Error::ArityMismatch {
                expected: m,
                got: g_sub.n(),
            });
        }
        let embedding = SubfieldEmbedding::new(spec, m)?;
        let sub = embedding.subfield();
        let pi = match pi {
            Permutation::Table(table) => table,
            Permutation::Power(k) => {
                let order = sub.order() as u64 - 1;
                if gcd(k, order) != 1 {
                    return Err(Error::InvalidParameter(format!(
                        "x^{k} does not permute GF(2^{m})"
                    )));
                }
                (0..sub.order() as u32).map(|z| sub.pow(z, k)).collect()
            }
        };
        validate_permutation(m, &pi)?;
        let mut pi_inv = vec![0; pi.len()];
        for (z, &v) in pi.iter().enumerate() {
            pi_inv[v as usize] = z as u32;
        }
        let mm = m as u64;
        let omega = (0..=spec.mask())
            .find(|&w| w ^ spec.frobenius(w, mm) == 1)
            .expect("the relative trace is onto");
        Ok(Self {
            spec: spec.clone(),
            lambda,
            t,
            pi,
            pi_inv,
            g_sub,
            embedding,
            omega,
        })
    }

    /// Replaces the default `omega` by another solution of `omega + omega^(2^m) = 1`.
    pub fn with_omega(mut self, omega: FieldElement) -> Result<Self> {
        if omega > self.spec.mask() || omega ^ self.spec.frobenius(omega, self.m() as u64) != 1 {
            return Err(Error::InvalidParameter(format!(
                "omega {omega:x} does not satisfy omega + omega^(2^m) = 1"
            )));
        }
        self.omega = omega;
        Ok(self)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn m(&self) -> u32 {
        self.spec.n() / 2
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn omega(&self) -> FieldElement {
        self.omega
    }

    pub fn pi_table(&self) -> &[FieldElement] {
        &self.pi
    }

    pub fn g_sub(&self) -> &BooleanFunction {
        &self.g_sub
    }

    pub fn embedding(&self) -> &SubfieldEmbedding {
        &self.embedding
    }

    /// `lambda + lambda^(2^m)`.
    pub fn big_lambda(&self) -> FieldElement {
        self.lambda ^ self.spec.frobenius(self.lambda, self.m() as u64)
    }

    pub fn is_bent_admissible(&self) -> bool {
        self.big_lambda() != 0
    }

    /// `x + x^(2^m)` as a subfield index.
    fn t_map(&self, x: FieldElement) -> FieldElement {
        let z = x ^ self.spec.frobenius(x, self.m() as u64);
        self.embedding.to_small(z).expect("relative trace lies in the subfield")
    }

    fn pi_big(&self, z_small: FieldElement) -> FieldElement {
        self.embedding.to_big(self.pi[z_small as usize])
    }

    /// `pi^-1(Lambda^-1 (x + x^(2^m))^(2^t))` in the big field.
    fn u_map(&self, x: FieldElement, lambda_inv: FieldElement) -> FieldElement {
        let s = &self.spec;
        let z = self.embedding.to_big(self.t_map(x));
        let v = s.mul(lambda_inv, s.frobenius(z, self.t));
        let v_small = self.embedding.to_small(v).expect("subfield is closed");
        self.embedding.to_big(self.pi_inv[v_small as usize])
    }
}

pub fn mm_function(p: &MMParams) -> BooleanFunction {
    let s = &p.spec;
    BooleanFunction::from_fn(s.n(), |x| {
        let z = p.t_map(x);
        let lin = s.mul(p.lambda, s.mul(s.frobenius(x, p.t), p.pi_big(z)));
        s.trace(lin) ^ p.g_sub.get(z)
    })
}

/// Closed-form dual `Tr(omega x u) + G(u)` with
/// `u = pi^-1(Lambda^-1 (x + x^(2^m))^(2^t))` and
/// `G(z) = Tr(lambda (omega z)^(2^t) pi(z)) + g(z)`.
pub fn mm_dual(p: &MMParams) -> Result<BooleanFunction> {
    let s = &p.spec;
    let lambda_inv = s.inv(p.big_lambda()).ok_or_else(|| {
        Error::NotBent(format!("lambda {:x} lies in the subfield", p.lambda))
    })?;
    let big_g = |z_big: FieldElement| {
        let z_small = p.embedding.to_small(z_big).expect("u lies in the subfield");
        let w = s.frobenius(s.mul(p.omega, z_big), p.t);
        s.trace(s.mul(p.lambda, s.mul(w, p.pi_big(z_small)))) ^ p.g_sub.get(z_small)
    };
    Ok(BooleanFunction::from_fn(s.n(), |x| {
        let u = p.u_map(x, lambda_inv);
        s.trace(s.mul(p.omega, s.mul(x, u))) ^ big_g(u)
    }))
}

fn mm_params_echo(report: ConstructionReport, p: &MMParams) -> ConstructionReport {
    report
        .param("n", p.spec.n())
        .param("t", p.t)
        .param("lambda", format!("{:x}", p.lambda))
        .param("omega", format!("{:x}", p.omega))
}

/// The family member itself, with its closed-form dual when `lambda` is outside GF(2^m).
pub fn mm_build(p: &MMParams) -> Result<ConstructionReport> {
    let cond = SideCondition::new("lambda not in GF(2^m)", p.is_bent_admissible());
    let report = ConstructionReport::new("mm", &Pairing::trace(&p.spec), mm_function(p), mm_dual(p).ok());
    mm_params_echo(report, p).conditions([cond]).finish()
}

/// The closed-form dual as the built function; its dual is the family member.
pub fn mm_dual_build(p: &MMParams) -> Result<ConstructionReport> {
    let h = mm_dual(p).map_err(|_| {
        Error::NotBentAdmissible(format!("lambda {:x} lies in GF(2^m)", p.lambda))
    })?;
    let report = ConstructionReport::new("mm-dual", &Pairing::trace(&p.spec), h, Some(mm_function(p)));
    mm_params_echo(report, p).finish()
}

/// `h = f + F(f(x) + f(x + alpha), Tr(mu_2 x), ...)` for the family above with
/// every `mu_i` in GF(2^m)*; `h* = f* + F(Tr(alpha x), Tr(omega mu_2 u), ...)`.
pub fn thmm_build(
    p: &MMParams,
    mus: &[FieldElement],
    alpha: FieldElement,
    outer: &BooleanFunction,
) -> Result<ConstructionReport> {
    check_outer_arity(mus, outer)?;
    let s = &p.spec;
    let f = mm_function(p);
    let f_star = mm_dual(p)?;
    let lambda_inv = s.inv(p.big_lambda()).expect("checked by mm_dual");
    let mut conds: Vec<SideCondition> = mus
        .iter()
        .enumerate()
        .map(|(i, &mu)| {
            SideCondition::new(
                format!("mu{} in GF(2^m)*", i + 2),
                mu != 0 && mu <= s.mask() && s.in_subfield(mu, p.m()).unwrap_or(false),
            )
        })
        .collect();
    conds.push(SideCondition::new(
        "alpha in <mus>^perp",
        Pairing::trace(s).in_complement(alpha, mus),
    ));
    conds.extend(pairwise_second_derivatives(&f_star, mus, 2));
    let u: Vec<FieldElement> = (0..s.order() as u32).map(|x| p.u_map(x, lambda_inv)).collect();
    let varphi = mus
        .iter()
        .map(|&mu| {
            let c = s.mul(p.omega, mu);
            BooleanFunction::from_fn(s.n(), |x| s.trace(s.mul(c, u[x as usize])))
        })
        .collect();
    let shape = ReducedShape {
        first: f.derivative(alpha),
        base: f,
        base_star: f_star,
        varphi,
    };
    assemble("thm12", s, shape, mus, alpha, outer)?
        .param("n", s.n())
        .param("t", p.t)
        .param("lambda", format!("{:x}", p.lambda))
        .param("omega", format!("{:x}", p.omega))
        .param("mus", format_mus(mus))
        .param("alpha", format!("{alpha:x}"))
        .param("F", outer.to_table_string())
        .conditions(conds)
        .finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: u32, lambda: FieldElement) -> MMParams {
        let s = FieldSpec::new(n, None).unwrap();
        MMParams::new(&s, lambda, 0, Permutation::Power(1), BooleanFunction::zero(n / 2)).unwrap()
    }

    #[test]
    fn omega_solves_relative_trace_equation() {
        let p = identity(6, 2);
        let s = p.spec();
        assert_eq!(p.omega() ^ s.frobenius(p.omega(), 3), 1);
        assert!(p.clone().with_omega(1).is_err());
    }

    #[test]
    fn subfield_lambda_is_not_admissible() {
        let p = identity(6, 1);
        assert!(!p.is_bent_admissible());
        assert!(matches!(mm_dual(&p), Err(Error::NotBent(_))));
        assert!(!mm_function(&p).is_bent());
    }

    #[test]
    fn identity_instance_is_bent_with_formula_dual() {
        let s = FieldSpec::new(6, None).unwrap();
        let lambda = (0..64).find(|&l| !s.in_subfield(l, 3).unwrap()).unwrap();
        let p = identity(6, lambda);
        let f = mm_function(&p);
        assert!(f.is_bent());
        assert_eq!(mm_dual(&p).unwrap(), Pairing::trace(&s).dual(&f).unwrap());
    }

    #[test]
    fn bad_permutations_are_rejected() {
        let s = FieldSpec::new(6, None).unwrap();
        let g = BooleanFunction::zero(3);
        // gcd(7, 7) = 7
        assert!(MMParams::new(&s, 2, 0, Permutation::Power(7), g.clone()).is_err());
        assert!(MMParams::new(&s, 2, 0, Permutation::Table(vec![0; 8]), g.clone()).is_err());
        assert!(MMParams::new(&s, 2, 0, Permutation::Power(3), BooleanFunction::zero(2)).is_err());
    }

    #[test]
    fn thm12_zero_outer_and_non_subfield_mu() {
        let s = FieldSpec::new(6, None).unwrap();
        let lambda = (0..64).find(|&l| !s.in_subfield(l, 3).unwrap()).unwrap();
        let p = identity(6, lambda);
        let r = thmm_build(&p, &[], 0, &BooleanFunction::zero(1)).unwrap();
        assert_eq!(r.h, mm_function(&p));
        assert_eq!(r.h_star.unwrap(), mm_dual(&p).unwrap());
        let outside = (1..64).find(|&x| !s.in_subfield(x, 3).unwrap()).unwrap();
        match thmm_build(&p, &[outside], 0, &BooleanFunction::zero(2)) {
            Err(Error::SideConditionFailed { condition, .. }) => {
                assert!(condition.starts_with("mu2 in GF(2^m)*"))
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
