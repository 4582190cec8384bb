//! Arithmetic in GF(2^n), 1 <= n <= 24, in the polynomial basis.
//!
//! An element is its coefficient vector packed into a `u32`: bit `i` is the
//! coefficient of `X^i`. The same integer is used as the truth-table index
//! of a Boolean function on the field.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, Echelon};

/// Polynomial-basis index of a field element.
pub type FieldElement = u32;

pub const MAX_DEGREE: u32 = 24;

/// GF(2^n) defined by an irreducible modulus of degree `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldSpec {
    n: u32,
    modulus: u32,
    // bit i set iff Tr(X^i) = 1
    trace_mask: u32,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}; {:x})", self.n, self.modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} modulus={:x}", self.n, self.modulus)
    }
}

fn degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn poly_mod(mut a: u64, b: u64) -> u64 {
    let db = degree(b);
    while a != 0 && degree(a) >= db {
        a ^= b << (degree(a) - db);
    }
    a
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_mod(a, b);
        a = b;
        b = r;
    }
    a
}

// a * b mod f in GF(2)[X], with deg a, deg b < deg f <= 24
fn poly_mulmod(mut a: u64, mut b: u64, f: u64) -> u64 {
    let n = degree(f);
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> n & 1 == 1 {
            a ^= f;
        }
    }
    acc
}

/// Ben-Or irreducibility test: `f` of degree `n` is irreducible iff
/// `gcd(X^(2^i) - X, f) = 1` for every `1 <= i <= n/2`.
pub fn is_irreducible(f: u64) -> bool {
    let n = degree(f);
    if n < 1 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = 0b10;
    let mut h = x;
    for _ in 1..=n / 2 {
        h = poly_mulmod(h, h, f);
        if poly_gcd(f, h ^ x) != 1 {
            return false;
        }
    }
    true
}

fn scan_smallest_irreducible(n: u32) -> u32 {
    // odd candidates only: a zero constant term means X divides the polynomial
    ((1u32 << n) + 1..1u32 << (n + 1))
        .step_by(2)
        .find(|&p| is_irreducible(p as u64))
        .expect("an irreducible polynomial exists in every degree")
}

/// Smallest irreducible polynomial (as a bitmask) of degree `n` with nonzero
/// constant term.
pub fn default_modulus(n: u32) -> Result<u32> {
    static TABLE: OnceLock<Vec<u32>> = OnceLock::new();
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::UnsupportedDegree(n));
    }
    let table = TABLE.get_or_init(|| {
        (0..=MAX_DEGREE)
            .map(|n| if n == 0 { 1 } else { scan_smallest_irreducible(n) })
            .collect()
    });
    Ok(table[n as usize])
}

impl FieldSpec {
    /// Builds GF(2^n). Without a modulus the default one is used.
    pub fn new(n: u32, modulus: Option<u32>) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::UnsupportedDegree(n));
        }
        let modulus = match modulus {
            None => default_modulus(n)?,
            Some(m) => {
                if degree(m as u64) != n as i32 {
                    return Err(Error::DegreeMismatch { n, modulus: m });
                }
                if !is_irreducible(m as u64) {
                    return Err(Error::NonIrreducible { n, modulus: m });
                }
                m
            }
        };
        let mut spec = FieldSpec {
            n,
            modulus,
            trace_mask: 0,
        };
        spec.trace_mask = (0..n).fold(0, |acc, i| {
            let t = spec.conjugate_sum(1 << i, 1, n);
            debug_assert!(t <= 1);
            acc | (t << i)
        });
        Ok(spec)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `n / 2` for even `n`.
    pub fn m(&self) -> Option<u32> {
        (self.n % 2 == 0).then_some(self.n / 2)
    }

    pub fn order(&self) -> usize {
        1usize << self.n
    }

    pub fn mask(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    /// Divisors of `n`, i.e. the degrees of the subfields.
    pub fn subfield_degrees(&self) -> Vec<u32> {
        (1..=self.n).filter(|r| self.n % r == 0).collect()
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a ^ b
    }

    pub fn mul(&self, mut a: FieldElement, mut b: FieldElement) -> FieldElement {
        let n = self.n;
        let mut acc = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> n & 1 == 1 {
                a ^= self.modulus;
            }
        }
        acc
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = 1;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a != 0).then(|| self.pow(a, (1u64 << self.n) - 2))
    }

    /// `a^(2^k)`.
    pub fn frobenius(&self, a: FieldElement, k: u64) -> FieldElement {
        (0..k % self.n as u64).fold(a, |x, _| self.square(x))
    }

    // sum_{j < count} a^(2^(j*step))
    fn conjugate_sum(&self, a: FieldElement, step: u32, count: u32) -> FieldElement {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..count {
            acc ^= x;
            for _ in 0..step {
                x = self.square(x);
            }
        }
        acc
    }

    /// Absolute trace `Tr_1^n(a)`.
    #[inline]
    pub fn trace(&self, a: FieldElement) -> bool {
        gf2::dot(self.trace_mask, a)
    }

    /// Absolute trace computed from its defining sum of conjugates.
    pub fn trace_by_conjugates(&self, a: FieldElement) -> FieldElement {
        self.conjugate_sum(a, 1, self.n)
    }

    fn check_divisor(&self, r: u32) -> Result<()> {
        if r == 0 || self.n % r != 0 {
            Err(Error::NotADivisor { r, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Relative trace `Tr_r^n(a) = a + a^(2^r) + ... + a^(2^(n-r))`.
    pub fn trace_rel(&self, a: FieldElement, r: u32) -> Result<FieldElement> {
        self.check_divisor(r)?;
        Ok(self.conjugate_sum(a, r, self.n / r))
    }

    /// Absolute trace `Tr_1^r(a)` of an element of the subfield GF(2^r).
    pub fn subfield_trace(&self, a: FieldElement, r: u32) -> Result<bool> {
        if !self.in_subfield(a, r)? {
            return Err(Error::InvalidParameter(format!(
                "{a:x} is not in the subfield of degree {r}"
            )));
        }
        let t = self.conjugate_sum(a, 1, r);
        debug_assert!(t <= 1);
        Ok(t == 1)
    }

    pub fn in_subfield(&self, a: FieldElement, r: u32) -> Result<bool> {
        self.check_divisor(r)?;
        Ok(self.frobenius(a, r as u64) == a)
    }

    /// The vector `v` with `dot(v, x) = Tr(a x)` for every `x`.
    pub fn trace_vector(&self, a: FieldElement) -> u32 {
        (0..self.n).fold(0, |v, i| v | (u32::from(self.trace(self.mul(a, 1 << i))) << i))
    }

    /// Basis of `{alpha : Tr(alpha mu) = 0 for every mu in mus}`.
    pub fn ortho_complement(&self, mus: &[FieldElement]) -> Vec<FieldElement> {
        let rows: Vec<u32> = mus.iter().map(|&mu| self.trace_vector(mu)).collect();
        gf2::null_space(&rows, self.n)
    }

    /// Formats an element as lowercase hex without prefix.
    pub fn format_element(a: FieldElement) -> String {
        format!("{a:x}")
    }

    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let v = u32::from_str_radix(s.trim().trim_start_matches("0x"), 16)
            .map_err(|e| Error::Parse(format!("bad field element {s:?}: {e}")))?;
        if v > self.mask() {
            return Err(Error::Parse(format!(
                "element {s} out of range for n = {}",
                self.n
            )));
        }
        Ok(v)
    }
}

/// Solver for `lambda y + lambda^(2^t) y^(2^(2t)) = rhs`.
///
/// The map is GF(2)-linear; its matrix over the polynomial basis is built and
/// inverted once, then every solve is a matrix-vector product.
#[derive(Clone, Debug)]
pub struct LinearizedSolver {
    forward: BitMatrix,
    inverse: BitMatrix,
}

impl LinearizedSolver {
    pub fn new(spec: &FieldSpec, lambda: FieldElement, t: u64) -> Result<Self> {
        let lt = spec.frobenius(lambda, t);
        let image = |y: FieldElement| spec.mul(lambda, y) ^ spec.mul(lt, spec.frobenius(y, 2 * t));
        let columns: Vec<u32> = (0..spec.n()).map(|i| image(1 << i)).collect();
        let forward = BitMatrix::from_columns(&columns);
        let inverse = forward.inverse().ok_or(Error::SingularMap)?;
        Ok(Self { forward, inverse })
    }

    pub fn apply(&self, y: FieldElement) -> FieldElement {
        self.forward.apply(y)
    }

    pub fn solve(&self, rhs: FieldElement) -> FieldElement {
        self.inverse.apply(rhs)
    }
}

/// Unique `x0` with `lambda x0 + lambda^(2^t) x0^(2^(2t)) = rhs`.
pub fn solve_linearized(
    spec: &FieldSpec,
    lambda: FieldElement,
    t: u64,
    rhs: FieldElement,
) -> Result<FieldElement> {
    Ok(LinearizedSolver::new(spec, lambda, t)?.solve(rhs))
}

/// Isomorphism between GF(2^r), in its own polynomial basis, and the fixed
/// field of `x -> x^(2^r)` inside a larger field.
#[derive(Clone, Debug)]
pub struct SubfieldEmbedding {
    sub: FieldSpec,
    to_big: Vec<FieldElement>,
    // (reduced image vector, subfield coordinates), keyed by leading bit
    back: Vec<(u32, u32)>,
}

impl SubfieldEmbedding {
    pub fn new(big: &FieldSpec, r: u32) -> Result<Self> {
        big.check_divisor(r)?;
        let sub = FieldSpec::new(r, None)?;
        // smallest root of the subfield modulus in the big field
        let eval = |beta: FieldElement| {
            (0..=r)
                .rev()
                .fold(0, |acc, i| big.mul(acc, beta) ^ (sub.modulus() >> i & 1))
        };
        let beta = (0..=big.mask())
            .find(|&b| eval(b) == 0)
            .expect("subfield modulus splits in the extension");
        let mut powers = Vec::with_capacity(r as usize);
        let mut p = 1;
        for _ in 0..r {
            powers.push(p);
            p = big.mul(p, beta);
        }
        let to_big = (0..1u32 << r)
            .map(|c| {
                powers
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| c >> i & 1 == 1)
                    .fold(0, |acc, (_, &b)| acc ^ b)
            })
            .collect();
        let mut back: Vec<(u32, u32)> = Vec::new();
        for (i, &pw) in powers.iter().enumerate() {
            let (mut v, mut c) = (pw, 1u32 << i);
            for &(rv, rc) in &back {
                if v >> (31 - rv.leading_zeros()) & 1 == 1 {
                    v ^= rv;
                    c ^= rc;
                }
            }
            debug_assert!(v != 0);
            let lead = 31 - v.leading_zeros();
            for (rv, rc) in &mut back {
                if *rv >> lead & 1 == 1 {
                    *rv ^= v;
                    *rc ^= c;
                }
            }
            back.push((v, c));
        }
        Ok(Self { sub, to_big, back })
    }

    pub fn subfield(&self) -> &FieldSpec {
        &self.sub
    }

    pub fn to_big(&self, small: FieldElement) -> FieldElement {
        self.to_big[small as usize]
    }

    /// Subfield index of a big-field element, `None` if it is outside the subfield.
    pub fn to_small(&self, big: FieldElement) -> Option<FieldElement> {
        let mut v = big;
        let mut c = 0;
        for &(rv, rc) in &self.back {
            if v >> (31 - rv.leading_zeros()) & 1 == 1 {
                v ^= rv;
                c ^= rc;
            }
        }
        (v == 0).then_some(c)
    }
}

/// Rank of the span of `vs`.
pub fn span_rank(vs: &[FieldElement]) -> usize {
    Echelon::from_vectors(vs.iter().copied()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    // trial division by every polynomial of degree 1..=n/2
    fn irreducible_by_trial_division(f: u64) -> bool {
        let n = degree(f);
        (2u64..1 << (n / 2 + 1)).all(|d| poly_mod(f, d) != 0)
    }

    #[test]
    fn default_moduli_small() {
        assert_eq!(default_modulus(1).unwrap(), 0b11);
        assert_eq!(default_modulus(2).unwrap(), 0b111);
        assert!(matches!(default_modulus(25), Err(Error::UnsupportedDegree(25))));
    }

    #[test]
    fn default_modulus_matches_trial_division_scan() {
        for n in 2..=16u32 {
            let oracle = ((1u64 << n) + 1..1 << (n + 1))
                .step_by(2)
                .find(|&p| irreducible_by_trial_division(p))
                .unwrap();
            assert_eq!(default_modulus(n).unwrap() as u64, oracle, "n = {n}");
        }
        // frozen from the trial-division oracle
        assert_eq!(default_modulus(8).unwrap(), 0x11b);
    }

    #[test]
    fn ben_or_agrees_with_trial_division() {
        for f in 4u64..1 << 11 {
            assert_eq!(is_irreducible(f), irreducible_by_trial_division(f), "{f:b}");
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(matches!(
            FieldSpec::new(9, Some(0b10_0000_0011 ^ 0b1)),
            Err(Error::NonIrreducible { .. }) | Err(Error::DegreeMismatch { .. })
        ));
        // X^4 + 1 = (X + 1)^4
        assert!(matches!(
            FieldSpec::new(4, Some(0b10001)),
            Err(Error::NonIrreducible { .. })
        ));
        assert!(matches!(
            FieldSpec::new(4, Some(0b111)),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(FieldSpec::new(25, None), Err(Error::UnsupportedDegree(25))));
        assert!(FieldSpec::new(24, None).is_ok());
    }

    #[test]
    fn gf4_examples() {
        let f = FieldSpec::new(2, None).unwrap();
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(0, 3), 0);
        assert_eq!(f.mul(1, 3), 3);
        assert_eq!(f.frobenius(2, 1), 3);
        assert_eq!(f.frobenius(2, 0), 2);
        assert_eq!(f.frobenius(2, 2), 2);
        assert!(!f.trace(0));
        assert!(!f.trace(1));
        assert!(f.trace(2));
        assert_eq!(f.trace_by_conjugates(2), 1);
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [3u32, 8, 13, 24] {
            let f = FieldSpec::new(n, None).unwrap();
            for _ in 0..200 {
                let (a, b, c) = (
                    rng.gen::<u32>() & f.mask(),
                    rng.gen::<u32>() & f.mask(),
                    rng.gen::<u32>() & f.mask(),
                );
                assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn frobenius_has_order_n() {
        for n in 1..=12u32 {
            let f = FieldSpec::new(n, None).unwrap();
            for a in 0..=f.mask() {
                let mut x = a;
                for _ in 0..n {
                    x = f.frobenius(x, 1);
                }
                assert_eq!(x, a);
                assert_eq!(f.frobenius(a, n as u64), a);
            }
        }
    }

    #[test]
    fn trace_is_balanced_linear_and_matches_conjugates() {
        for n in 1..=10u32 {
            let f = FieldSpec::new(n, None).unwrap();
            let zeros = (0..=f.mask()).filter(|&a| !f.trace(a)).count();
            assert_eq!(zeros, 1 << (n - 1));
            for a in 0..=f.mask() {
                assert_eq!(f.trace(a) as u32, f.trace_by_conjugates(a));
                assert_eq!(f.trace(a), f.trace(f.square(a)));
            }
            for a in (0..=f.mask()).step_by(3) {
                for b in (0..=f.mask()).step_by(5) {
                    assert_eq!(f.trace(a ^ b), f.trace(a) ^ f.trace(b));
                }
            }
        }
    }

    #[test]
    fn relative_trace_lands_in_subfield() {
        let f = FieldSpec::new(16, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = rng.gen::<u32>() & f.mask();
            let t = f.trace_rel(a, 2).unwrap();
            assert_eq!(f.frobenius(t, 2), t);
        }
        assert_eq!(f.trace_rel(0, 4).unwrap(), 0);
        assert_eq!(f.trace_rel(0x1234, 16).unwrap(), 0x1234);
        assert!(matches!(f.trace_rel(1, 3), Err(Error::NotADivisor { .. })));
        assert_eq!(f.trace_rel(0x1234, 1).unwrap(), f.trace(0x1234) as u32);
    }

    #[test]
    fn subfield_membership_counts() {
        let f = FieldSpec::new(4, None).unwrap();
        assert_eq!((0..16).filter(|&a| f.in_subfield(a, 2).unwrap()).count(), 4);
        assert!(f.in_subfield(0, 2).unwrap());
        assert!(f.in_subfield(1, 1).unwrap());
        assert!(f.in_subfield(1, 2).unwrap());
        assert!(matches!(f.in_subfield(1, 3), Err(Error::NotADivisor { .. })));
    }

    #[test]
    fn linearized_solver_roundtrip() {
        let f = FieldSpec::new(4, None).unwrap();
        // a non-cube: lambda^5 != 1
        let lambda = (1..16).find(|&l| f.pow(l, 5) != 1).unwrap();
        let s = LinearizedSolver::new(&f, lambda, 1).unwrap();
        for c in 0..16 {
            let x0 = s.solve(c);
            let lhs = f.mul(lambda, x0) ^ f.mul(f.frobenius(lambda, 1), f.frobenius(x0, 2));
            assert_eq!(lhs, c);
        }
        assert_eq!(solve_linearized(&f, lambda, 1, 0).unwrap(), 0);
        assert!(matches!(
            LinearizedSolver::new(&f, 1, 4),
            Err(Error::SingularMap)
        ));
    }

    #[test]
    fn ortho_complement_examples() {
        let f = FieldSpec::new(6, None).unwrap();
        assert_eq!(f.ortho_complement(&[]).len(), 6);
        let basis = f.ortho_complement(&[1]);
        assert_eq!(basis.len(), 5);
        assert_eq!(Echelon::from_vectors(basis.iter().copied()).span_ascending().count(), 32);

        let mus = [0b000001, 0b000110];
        let basis = f.ortho_complement(&mus);
        let span: Vec<u32> = Echelon::from_vectors(basis.iter().copied())
            .span_ascending()
            .collect();
        let brute: Vec<u32> = (0..64)
            .filter(|&a| mus.iter().all(|&mu| !f.trace(f.mul(a, mu))))
            .collect();
        assert_eq!(span, brute);
        for &a in &basis {
            assert!(mus.iter().all(|&mu| !f.trace(f.mul(a, mu))));
        }
    }

    #[test]
    fn ortho_complement_dimension_matches_rank() {
        let f = FieldSpec::new(8, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for k in 0..6 {
            let mus: Vec<u32> = (0..k).map(|_| rng.gen::<u32>() & 0xff).collect();
            assert_eq!(
                f.ortho_complement(&mus).len(),
                8 - gf2::rank(&mus),
                "{mus:?}"
            );
        }
    }

    #[test]
    fn trace_vector_represents_trace_form() {
        let f = FieldSpec::new(5, None).unwrap();
        for a in 0..32 {
            let v = f.trace_vector(a);
            for x in 0..32 {
                assert_eq!(gf2::dot(v, x), f.trace(f.mul(a, x)));
            }
        }
    }

    #[test]
    fn embedding_is_a_field_isomorphism() {
        let big = FieldSpec::new(8, None).unwrap();
        let e = SubfieldEmbedding::new(&big, 4).unwrap();
        let sub = e.subfield().clone();
        for a in 0..16 {
            let ba = e.to_big(a);
            assert!(big.in_subfield(ba, 4).unwrap());
            assert_eq!(e.to_small(ba), Some(a));
            for b in 0..16 {
                assert_eq!(e.to_big(sub.mul(a, b)), big.mul(ba, e.to_big(b)));
            }
        }
        let outside = (0..256).filter(|&x| e.to_small(x).is_none()).count();
        assert_eq!(outside, 256 - 16);
    }
}
