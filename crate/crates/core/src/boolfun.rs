//! Boolean functions on GF(2)^n as bit-packed truth tables, with the exact
//! Walsh-Hadamard transform, duals, derivatives and the algebraic normal form.
//!
//! Truth-table index `x` doubles as the polynomial-basis index of a field
//! element; bit `i` of `x` is the value of variable `x_{i+1}`.
//!
//! Everything here uses the bitwise dot product `u . x`. Spectra and duals
//! with respect to the trace pairing live in [`crate::pairing`].

use std::fmt;
use std::ops::{BitAnd, BitXor, Not};

use crate::error::{Error, Result};

pub const MAX_ARITY: u32 = 24;

// LOW_HALF[k]: within each block of 2^(k+1) bits, the lower 2^k bits
const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: u32,
    words: Vec<u64>,
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n, self.to_table_string())
    }
}

impl BooleanFunction {
    fn word_count(n: u32) -> usize {
        if n <= 6 {
            1
        } else {
            1 << (n - 6)
        }
    }

    fn tail_mask(&self) -> u64 {
        if self.n >= 6 {
            u64::MAX
        } else {
            (1u64 << (1 << self.n)) - 1
        }
    }

    pub fn zero(n: u32) -> Self {
        assert!(n <= MAX_ARITY, "arity {n} exceeds {MAX_ARITY}");
        Self {
            n,
            words: vec![0; Self::word_count(n)],
        }
    }

    pub fn constant(n: u32, value: bool) -> Self {
        let mut f = Self::zero(n);
        if value {
            f.words.iter_mut().for_each(|w| *w = u64::MAX);
            let mask = f.tail_mask();
            f.words[0] &= mask;
        }
        f
    }

    pub fn from_fn(n: u32, mut eval: impl FnMut(u32) -> bool) -> Self {
        let mut f = Self::zero(n);
        for x in 0..1u32 << n {
            if eval(x) {
                f.words[(x >> 6) as usize] |= 1 << (x & 63);
            }
        }
        f
    }

    /// The linear function `x -> v . x`.
    pub fn linear(n: u32, v: u32) -> Self {
        Self::from_fn(n, |x| (x & v).count_ones() & 1 == 1)
    }

    /// Builds from raw little-endian words; bits past `2^n` must be clear.
    pub fn from_words(n: u32, words: Vec<u64>) -> Result<Self> {
        let f = Self { n, words };
        if f.words.len() != Self::word_count(n) || f.words[0] & !f.tail_mask() != 0 {
            return Err(Error::InvalidParameter(format!(
                "word buffer does not fit a table of arity {n}"
            )));
        }
        Ok(f)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of table entries, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, x: u32) -> bool {
        self.words[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    pub fn set(&mut self, x: u32, value: bool) {
        let w = &mut self.words[(x >> 6) as usize];
        if value {
            *w |= 1 << (x & 63);
        } else {
            *w &= !(1 << (x & 63));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..1u32 << self.n).map(|x| self.get(x))
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::ArityMismatch {
                expected: self.n,
                got: other.n,
            })
        } else {
            Ok(())
        }
    }

    fn zip_words(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "arity mismatch");
        Self {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    /// `x -> f(x + a)`.
    pub fn translate(&self, a: u32) -> Self {
        let high = (a >> 6) as usize;
        let mut words: Vec<u64> = (0..self.words.len()).map(|j| self.words[j ^ high]).collect();
        for (k, &mask) in LOW_HALF.iter().enumerate().take(self.n.min(6) as usize) {
            if a >> k & 1 == 1 {
                let s = 1 << k;
                for w in &mut words {
                    *w = ((*w & mask) << s) | ((*w >> s) & mask);
                }
            }
        }
        Self { n: self.n, words }
    }

    /// First derivative `D_a f(x) = f(x) + f(x + a)`.
    pub fn derivative(&self, a: u32) -> Self {
        self ^ &self.translate(a)
    }

    /// Exact Walsh-Hadamard spectrum `W_f(u) = sum_x (-1)^(f(x) + u.x)`.
    pub fn walsh(&self) -> WalshSpectrum {
        let mut values: Vec<i32> = self.iter().map(|b| if b { -1 } else { 1 }).collect();
        butterfly(&mut values);
        WalshSpectrum { n: self.n, values }
    }

    pub fn is_bent(&self) -> bool {
        self.walsh().is_bent()
    }

    /// The dual `f*` with `W_f(u) = 2^(n/2) (-1)^(f*(u))`.
    pub fn dual(&self) -> Result<Self> {
        self.walsh().dual()
    }

    pub fn anf(&self) -> AnfForm {
        AnfForm {
            coeffs: moebius(self),
        }
    }

    /// Maximum weight of a monomial in the ANF; 0 for the zero function.
    pub fn algebraic_degree(&self) -> u32 {
        self.anf().degree()
    }

    /// `x -> outer(phi_1(x), ..., phi_r(x))`, component `i` feeding bit `i`
    /// of the truth-table index of `outer`.
    pub fn compose(outer: &BooleanFunction, phi: &VectorialFunction) -> Result<Self> {
        if outer.n != phi.r() {
            return Err(Error::ArityMismatch {
                expected: phi.r(),
                got: outer.n,
            });
        }
        Ok(Self::from_fn(phi.n(), |x| outer.get(phi.eval(x))))
    }

    /// Pointwise XOR, checking arities.
    pub fn try_xor(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(self ^ other)
    }

    /// The table as a `0`/`1` string `f(0) f(1) ... f(2^n - 1)`.
    pub fn to_table_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Parses a `0`/`1` string whose length is a power of two.
    pub fn from_table_string(s: &str) -> Result<Self> {
        let s = s.trim();
        let len = s.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::Parse(format!(
                "binary table length {len} is not a power of two"
            )));
        }
        let n = len.trailing_zeros();
        if n > MAX_ARITY {
            return Err(Error::UnsupportedDegree(n));
        }
        let bytes = s.as_bytes();
        if let Some(bad) = bytes.iter().find(|&&c| c != b'0' && c != b'1') {
            return Err(Error::Parse(format!("unexpected character {:?}", *bad as char)));
        }
        Ok(Self::from_fn(n, |x| bytes[x as usize] == b'1'))
    }
}

impl BitXor for &BooleanFunction {
    type Output = BooleanFunction;
    fn bitxor(self, rhs: Self) -> BooleanFunction {
        self.zip_words(rhs, |a, b| a ^ b)
    }
}

impl BitXor for BooleanFunction {
    type Output = BooleanFunction;
    fn bitxor(self, rhs: Self) -> BooleanFunction {
        &self ^ &rhs
    }
}

impl BitAnd for &BooleanFunction {
    type Output = BooleanFunction;
    fn bitand(self, rhs: Self) -> BooleanFunction {
        self.zip_words(rhs, |a, b| a & b)
    }
}

impl BitAnd for BooleanFunction {
    type Output = BooleanFunction;
    fn bitand(self, rhs: Self) -> BooleanFunction {
        &self & &rhs
    }
}

impl Not for &BooleanFunction {
    type Output = BooleanFunction;
    fn not(self) -> BooleanFunction {
        let mut f = self.clone();
        f.words.iter_mut().for_each(|w| *w = !*w);
        let mask = f.tail_mask();
        f.words[0] &= mask;
        f
    }
}

impl Not for BooleanFunction {
    type Output = BooleanFunction;
    fn not(self) -> BooleanFunction {
        !&self
    }
}

/// In-place unnormalized Walsh-Hadamard butterfly.
pub fn butterfly<T>(values: &mut [T])
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    let len = values.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in values.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

// Moebius transform over GF(2); an involution on tables.
fn moebius(f: &BooleanFunction) -> BooleanFunction {
    let mut words = f.words.clone();
    for (k, &mask) in LOW_HALF.iter().enumerate().take(f.n.min(6) as usize) {
        let s = 1 << k;
        for w in &mut words {
            *w ^= (*w & mask) << s;
        }
    }
    let mut h = 1;
    while h < words.len() {
        for block in words.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter().zip(hi.iter_mut()) {
                *b ^= *a;
            }
        }
        h *= 2;
    }
    BooleanFunction { n: f.n, words }
}

/// Exact Walsh spectrum, `values[u] = W_f(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn new(n: u32, values: Vec<i32>) -> Result<Self> {
        if values.len() != 1usize << n {
            return Err(Error::InvalidParameter(format!(
                "spectrum of length {} for arity {n}",
                values.len()
            )));
        }
        Ok(Self { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn get(&self, u: u32) -> i32 {
        self.values[u as usize]
    }

    /// `sum W(u)^2 == 2^(2n)`.
    pub fn parseval_holds(&self) -> bool {
        let total: i128 = self.values.iter().map(|&v| (v as i128) * (v as i128)).sum();
        total == 1i128 << (2 * self.n)
    }

    pub fn is_bent(&self) -> bool {
        if self.n % 2 != 0 {
            return false;
        }
        let amp = 1i32 << (self.n / 2);
        self.values.iter().all(|&v| v == amp || v == -amp)
    }

    pub fn dual(&self) -> Result<BooleanFunction> {
        if !self.is_bent() {
            return Err(Error::NotBent("spectrum is not flat".into()));
        }
        Ok(BooleanFunction::from_fn(self.n, |u| self.values[u as usize] < 0))
    }

    /// Inverse transform. Returns `None` unless every `2^-n sum_u W(u)(-1)^(u.x)`
    /// is exactly `+1` or `-1`.
    pub fn inverse(&self) -> Option<BooleanFunction> {
        let mut v: Vec<i64> = self.values.iter().map(|&x| x as i64).collect();
        butterfly(&mut v);
        let scale = 1i64 << self.n;
        let signs: Option<Vec<bool>> = v
            .iter()
            .map(|&s| match s {
                s if s == scale => Some(false),
                s if s == -scale => Some(true),
                _ => None,
            })
            .collect();
        let signs = signs?;
        Some(BooleanFunction::from_fn(self.n, |x| signs[x as usize]))
    }
}

/// Algebraic normal form: bit `u` of `coeffs` is the coefficient of the
/// monomial `prod_{i in supp(u)} x_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnfForm {
    coeffs: BooleanFunction,
}

impl AnfForm {
    pub fn from_coefficients(coeffs: BooleanFunction) -> Self {
        Self { coeffs }
    }

    pub fn n(&self) -> u32 {
        self.coeffs.n
    }

    pub fn coefficients(&self) -> &BooleanFunction {
        &self.coeffs
    }

    pub fn degree(&self) -> u32 {
        (0..1u32 << self.coeffs.n)
            .filter(|&u| self.coeffs.get(u))
            .map(u32::count_ones)
            .max()
            .unwrap_or(0)
    }

    /// Monomial masks with nonzero coefficient, ascending.
    pub fn monomials(&self) -> impl Iterator<Item = u32> + '_ {
        (0..1u32 << self.coeffs.n).filter(|&u| self.coeffs.get(u))
    }

    pub fn truth_table(&self) -> BooleanFunction {
        moebius(&self.coeffs)
    }
}

impl fmt::Display for AnfForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .monomials()
            .map(|u| {
                if u == 0 {
                    "1".to_string()
                } else {
                    (0..self.n())
                        .filter(|i| u >> i & 1 == 1)
                        .map(|i| format!("x{}", i + 1))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// An (n, r)-function given by its r coordinate functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorialFunction {
    n: u32,
    components: Vec<BooleanFunction>,
}

pub const MAX_OUTPUTS: usize = 16;

impl VectorialFunction {
    pub fn new(components: Vec<BooleanFunction>) -> Result<Self> {
        let n = components
            .first()
            .map(|c| c.n())
            .ok_or_else(|| Error::InvalidParameter("vectorial function needs r >= 1".into()))?;
        if components.len() > MAX_OUTPUTS {
            return Err(Error::InvalidParameter(format!(
                "r = {} exceeds {MAX_OUTPUTS}",
                components.len()
            )));
        }
        if let Some(c) = components.iter().find(|c| c.n() != n) {
            return Err(Error::ArityMismatch {
                expected: n,
                got: c.n(),
            });
        }
        Ok(Self { n, components })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn components(&self) -> &[BooleanFunction] {
        &self.components
    }

    /// Output vector at `x`, component `i` in bit `i`.
    pub fn eval(&self, x: u32) -> u32 {
        self.components
            .iter()
            .enumerate()
            .fold(0, |acc, (i, c)| acc | (u32::from(c.get(x)) << i))
    }

    /// `x -> omega . phi(x)`.
    pub fn dot(&self, omega: u32) -> BooleanFunction {
        self.components
            .iter()
            .enumerate()
            .filter(|(i, _)| omega >> i & 1 == 1)
            .fold(BooleanFunction::zero(self.n), |acc, (_, c)| &acc ^ c)
    }
}
