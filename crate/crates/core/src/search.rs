//! Parameter searches, brute-force oracles and an EA-invariant fingerprint.
//!
//! All enumerations run in ascending index order and can be resumed from the
//! last emitted tuple.

use std::fmt;

use crate::boolfun::BooleanFunction;
use crate::constructions::ConstructionReport;
use crate::families::GoldParams;
use crate::field::{FieldElement, FieldSpec};
use crate::gf2::Echelon;
use crate::pairing::Pairing;

/// Pairwise condition imposed on every pair of a mu tuple.
#[derive(Clone, Debug)]
pub enum MuMode {
    /// `D_a D_b f* = 0` for the given `f*`.
    SecondDerivative(BooleanFunction),
    /// `Tr(lambda(a^(2^t) b + a b^(2^t))) = 0`.
    GoldTrace(GoldParams),
    /// `Tr(theta^-1 a b^(2^m)) = 0`.
    Cor9Trace { spec: FieldSpec, theta: FieldElement },
}

impl MuMode {
    pub fn n(&self) -> u32 {
        match self {
            MuMode::SecondDerivative(f) => f.n(),
            MuMode::GoldTrace(p) => p.spec().n(),
            MuMode::Cor9Trace { spec, .. } => spec.n(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MuMode::SecondDerivative(_) => "second-derivative",
            MuMode::GoldTrace(_) => "gold-trace",
            MuMode::Cor9Trace { .. } => "cor9-trace",
        }
    }

    /// Literal evaluation of the pair condition.
    pub fn pair_holds(&self, a: FieldElement, b: FieldElement) -> bool {
        match self {
            MuMode::SecondDerivative(f) => f.derivative(a).derivative(b).is_zero(),
            MuMode::GoldTrace(p) => crate::families::gold::gold_pair_holds(p, a, b),
            MuMode::Cor9Trace { spec, theta } => {
                let m = spec.n() as u64 / 2;
                let ti = spec.inv(*theta).unwrap_or(0);
                !spec.trace(spec.mul(ti, spec.mul(a, spec.frobenius(b, m))))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct MuSearchSpec {
    pub mode: MuMode,
    pub r: usize,
    pub limit: usize,
    pub require_independent: bool,
    /// Resume strictly after this tuple.
    pub cursor: Option<Vec<FieldElement>>,
}

impl MuSearchSpec {
    pub fn new(mode: MuMode, r: usize, limit: usize) -> Self {
        Self {
            mode,
            r,
            limit,
            require_independent: true,
            cursor: None,
        }
    }
}

struct Dfs<'a> {
    spec: &'a MuSearchSpec,
    max: FieldElement,
    out: Vec<Vec<FieldElement>>,
    tuple: Vec<FieldElement>,
    // D_mu f* for each chosen mu in second-derivative mode
    derivs: Vec<BooleanFunction>,
}

impl Dfs<'_> {
    fn compatible(&self, c: FieldElement) -> bool {
        match &self.spec.mode {
            MuMode::SecondDerivative(_) => self.derivs.iter().all(|d| d.derivative(c).is_zero()),
            mode => self.tuple.iter().all(|&a| mode.pair_holds(a, c)),
        }
    }

    // `on_cursor`: the current prefix equals the cursor's prefix
    fn run(&mut self, start: FieldElement, on_cursor: bool) {
        let depth = self.tuple.len();
        if depth == self.spec.r {
            if !on_cursor {
                self.out.push(self.tuple.clone());
            }
            return;
        }
        let cursor_here = if on_cursor {
            self.spec.cursor.as_ref().and_then(|c| c.get(depth).copied())
        } else {
            None
        };
        let from = cursor_here.map_or(start, |c| c.max(start));
        for c in from..=self.max {
            if self.out.len() >= self.spec.limit {
                return;
            }
            if self.spec.require_independent
                && Echelon::from_vectors(self.tuple.iter().copied()).contains(c)
            {
                continue;
            }
            if !self.compatible(c) {
                continue;
            }
            self.tuple.push(c);
            if let MuMode::SecondDerivative(f) = &self.spec.mode {
                self.derivs.push(f.derivative(c));
            }
            self.run(c + 1, cursor_here == Some(c));
            self.tuple.pop();
            if matches!(self.spec.mode, MuMode::SecondDerivative(_)) {
                self.derivs.pop();
            }
        }
    }
}

/// Strictly increasing tuples of nonzero elements satisfying every pairwise condition.
pub fn find_mu_tuples(spec: &MuSearchSpec) -> Vec<Vec<FieldElement>> {
    if spec.r == 0 || spec.limit == 0 {
        return Vec::new();
    }
    let mut dfs = Dfs {
        spec,
        max: ((1u64 << spec.mode.n()) - 1) as u32,
        out: Vec::new(),
        tuple: Vec::with_capacity(spec.r),
        derivs: Vec::new(),
    };
    dfs.run(1, spec.cursor.is_some());
    dfs.out
}

/// Elements of `<mus>^perp` in ascending order, including 0.
pub fn find_alphas(pairing: &Pairing, mus: &[FieldElement], limit: usize) -> Vec<FieldElement> {
    Echelon::from_vectors(pairing.ortho_complement(mus))
        .span_ascending()
        .take(limit)
        .collect()
}

/// Bent-admissible Gold coefficients in ascending order, starting after `after`.
pub fn find_gold_lambdas(
    spec: &FieldSpec,
    t: u64,
    limit: usize,
    after: Option<FieldElement>,
) -> Vec<FieldElement> {
    let from = after.map_or(0, |a| a + 1);
    (from..=spec.mask())
        .filter(|&l| {
            GoldParams::new(spec, l, t)
                .map(|p| p.is_bent_admissible())
                .unwrap_or(false)
        })
        .take(limit)
        .collect()
}

/// `lambda` in GF(2^m) with `lambda + lambda^(2^t) = 1`, for `n = 4t`.
pub fn find_self_dual_lambdas(spec: &FieldSpec) -> Vec<FieldElement> {
    let n = spec.n();
    if n % 4 != 0 {
        return Vec::new();
    }
    (0..=spec.mask())
        .filter(|&l| {
            spec.frobenius(l, n as u64 / 2) == l && l ^ spec.frobenius(l, n as u64 / 4) == 1
        })
        .collect()
}

/// Algebraic degree together with the distribution of `deg(D_a h)` over all `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EaFingerprint {
    pub degree: u32,
    /// `derivative_degrees[k]` counts the `a` with `deg(D_a h) = k`.
    pub derivative_degrees: Vec<u64>,
}

impl fmt::Display for EaFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree={} derivative_degrees=[", self.degree)?;
        for (k, c) in self.derivative_degrees.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{k}:{c}")?;
        }
        write!(f, "]")
    }
}

pub fn ea_fingerprint(h: &BooleanFunction) -> EaFingerprint {
    let mut counts = vec![0u64; h.n() as usize + 1];
    for a in 0..h.len() as u32 {
        counts[h.derivative(a).algebraic_degree() as usize] += 1;
    }
    EaFingerprint {
        degree: h.algebraic_degree(),
        derivative_degrees: counts,
    }
}

/// Walsh values by direct double summation over the dot product.
pub fn brute_force_walsh(h: &BooleanFunction) -> Vec<i64> {
    let size = h.len() as u32;
    (0..size)
        .map(|u| {
            (0..size)
                .map(|x| {
                    if h.get(x) ^ ((u & x).count_ones() & 1 == 1) {
                        -1
                    } else {
                        1
                    }
                })
                .sum()
        })
        .collect()
}

pub fn brute_force_bent_check(h: &BooleanFunction) -> bool {
    brute_force_dual(h).is_some()
}

/// Dot-product dual from the direct spectrum, `None` if `h` is not bent.
pub fn brute_force_dual(h: &BooleanFunction) -> Option<BooleanFunction> {
    if h.n() % 2 == 1 {
        return None;
    }
    let scale = 1i64 << (h.n() / 2);
    let w = brute_force_walsh(h);
    if w.iter().any(|&v| v.abs() != scale) {
        return None;
    }
    Some(BooleanFunction::from_fn(h.n(), |u| w[u as usize] < 0))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Indices of the failing reports.
    pub failures: Vec<usize>,
}

/// Rechecks every report independently of the transform used to build it:
/// direct summation up to n = 12, the fast transform above.
pub fn batch_verify(reports: &[ConstructionReport]) -> BatchSummary {
    let mut summary = BatchSummary::default();
    for (i, r) in reports.iter().enumerate() {
        let ok = match &r.h_star {
            None => false,
            Some(hs) => {
                let dual = if r.h.n() <= 12 {
                    brute_force_dual(&r.h).map(|d| reindex(&r.pairing, &d))
                } else {
                    r.pairing.dual(&r.h).ok()
                };
                dual.as_ref() == Some(hs)
            }
        };
        summary.total += 1;
        if ok {
            summary.passed += 1;
        } else {
            summary.failed += 1;
            summary.failures.push(i);
        }
    }
    summary
}

// dot-product dual -> dual under `pairing`
fn reindex(pairing: &Pairing, d: &BooleanFunction) -> BooleanFunction {
    BooleanFunction::from_fn(d.n(), |a| d.get(pairing.vector(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn r1_lists_first_nonzero_elements() {
        let f = BooleanFunction::zero(4);
        let spec = MuSearchSpec::new(MuMode::SecondDerivative(f), 1, 5);
        let got = find_mu_tuples(&spec);
        assert_eq!(got, (1..=5).map(|x| vec![x]).collect::<Vec<_>>());
    }

    #[test]
    fn cursor_resumes_after_last_tuple() {
        let f = BooleanFunction::zero(4);
        let mut spec = MuSearchSpec::new(MuMode::SecondDerivative(f), 2, 40);
        let all = find_mu_tuples(&spec);
        assert_eq!(all.len(), 40);
        spec.limit = 10;
        let mut resumed = Vec::new();
        while resumed.len() < 40 {
            let chunk = find_mu_tuples(&spec);
            spec.cursor = chunk.last().cloned();
            resumed.extend(chunk);
        }
        assert_eq!(resumed, all);
    }

    #[test]
    fn independence_filter() {
        let f = BooleanFunction::zero(3);
        let mut spec = MuSearchSpec::new(MuMode::SecondDerivative(f), 3, 1000);
        assert!(find_mu_tuples(&spec).iter().all(|t| t != &vec![1, 2, 3]));
        spec.require_independent = false;
        assert!(find_mu_tuples(&spec).contains(&vec![1, 2, 3]));
    }

    #[test]
    fn alphas_trivial_cases() {
        let p = Pairing::dot(4);
        assert_eq!(find_alphas(&p, &[1, 2, 4, 8], 100), vec![0]);
        assert_eq!(find_alphas(&p, &[], 100), (0..16).collect::<Vec<_>>());
        assert_eq!(find_alphas(&p, &[], 3), vec![0, 1, 2]);
    }

    #[test]
    fn alphas_form_a_subspace() {
        let s = FieldSpec::new(8, None).unwrap();
        let p = Pairing::trace(&s);
        let alphas = find_alphas(&p, &[3, 0x51], usize::MAX);
        assert_eq!(alphas.len(), 64);
        for &a in &alphas {
            for &b in &alphas {
                assert!(alphas.binary_search(&(a ^ b)).is_ok());
            }
        }
    }

    #[test]
    fn fingerprint_of_affine_function() {
        let h = &BooleanFunction::linear(6, 0b101) ^ &BooleanFunction::constant(6, true);
        let fp = ea_fingerprint(&h);
        assert!(fp.degree <= 1);
        assert_eq!(fp.derivative_degrees[0], 64);
    }

    #[test]
    fn brute_force_agrees_with_transform() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(!brute_force_bent_check(&BooleanFunction::zero(8)));
        for _ in 0..100 {
            let f = BooleanFunction::from_fn(8, |_| rng.gen());
            assert_eq!(brute_force_bent_check(&f), f.is_bent());
        }
        let mm = BooleanFunction::from_fn(8, |x| ((x & 15) & (x >> 4)).count_ones() & 1 == 1);
        assert!(brute_force_bent_check(&mm));
        assert_eq!(brute_force_dual(&mm).unwrap(), mm.dual().unwrap());
    }

    #[test]
    fn self_dual_lambdas_at_n8() {
        let s = FieldSpec::new(8, None).unwrap();
        let ls = find_self_dual_lambdas(&s);
        // x^4 + x + 1 splits in GF(16)
        assert_eq!(ls.len(), 4);
    }
}
