//! Inner products used to define spectra and duals.
//!
//! On GF(2)^n the pairing is the bitwise dot product. On GF(2^n) it is
//! `Tr(a x)`. Both are nondegenerate and symmetric, so every statement about
//! bentness and duality holds for either, provided a single pairing is used
//! throughout. `Tr(a x) = tau(a) . x` for a linear bijection `tau`, which
//! turns trace spectra into reindexed bitwise spectra.

use crate::boolfun::{BooleanFunction, WalshSpectrum};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::gf2;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Dot,
    Trace {
        field: FieldSpec,
        // tau(X^j)
        images: Vec<u32>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    n: u32,
    kind: Kind,
}

impl Pairing {
    pub fn dot(n: u32) -> Self {
        Self { n, kind: Kind::Dot }
    }

    pub fn trace(field: &FieldSpec) -> Self {
        let images = (0..field.n()).map(|j| field.trace_vector(1 << j)).collect();
        Self {
            n: field.n(),
            kind: Kind::Trace {
                field: field.clone(),
                images,
            },
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn field(&self) -> Option<&FieldSpec> {
        match &self.kind {
            Kind::Dot => None,
            Kind::Trace { field, .. } => Some(field),
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            Kind::Dot => "dot",
            Kind::Trace { .. } => "trace",
        }
    }

    /// The vector `v` with `<a, x> = v . x`.
    pub fn vector(&self, a: FieldElement) -> u32 {
        match &self.kind {
            Kind::Dot => a,
            Kind::Trace { images, .. } => images
                .iter()
                .enumerate()
                .filter(|(j, _)| a >> j & 1 == 1)
                .fold(0, |acc, (_, &v)| acc ^ v),
        }
    }

    fn vector_table(&self) -> Vec<u32> {
        let size = 1usize << self.n;
        match &self.kind {
            Kind::Dot => (0..size as u32).collect(),
            Kind::Trace { images, .. } => {
                let mut table = vec![0u32; size];
                for a in 1..size {
                    table[a] = table[a & (a - 1)] ^ images[a.trailing_zeros() as usize];
                }
                table
            }
        }
    }

    pub fn inner(&self, a: FieldElement, x: FieldElement) -> bool {
        gf2::dot(self.vector(a), x)
    }

    /// `x -> <a, x>`.
    pub fn linear_form(&self, a: FieldElement) -> BooleanFunction {
        BooleanFunction::linear(self.n, self.vector(a))
    }

    fn check(&self, f: &BooleanFunction) -> Result<()> {
        if f.n() != self.n {
            Err(Error::ArityMismatch {
                expected: self.n,
                got: f.n(),
            })
        } else {
            Ok(())
        }
    }

    /// `W_f(a) = sum_x (-1)^(f(x) + <a, x>)`.
    pub fn spectrum(&self, f: &BooleanFunction) -> Result<WalshSpectrum> {
        self.check(f)?;
        let w = f.walsh();
        match self.kind {
            Kind::Dot => Ok(w),
            Kind::Trace { .. } => {
                let tau = self.vector_table();
                WalshSpectrum::new(self.n, tau.iter().map(|&v| w.get(v)).collect())
            }
        }
    }

    pub fn is_bent(&self, f: &BooleanFunction) -> bool {
        f.n() == self.n && f.is_bent()
    }

    /// Dual with respect to this pairing.
    pub fn dual(&self, f: &BooleanFunction) -> Result<BooleanFunction> {
        self.check(f)?;
        let d = f.dual()?;
        match self.kind {
            Kind::Dot => Ok(d),
            Kind::Trace { .. } => {
                let tau = self.vector_table();
                Ok(BooleanFunction::from_fn(self.n, |a| d.get(tau[a as usize])))
            }
        }
    }

    /// Basis of `{alpha : <alpha, mu> = 0 for all mu in mus}`.
    pub fn ortho_complement(&self, mus: &[FieldElement]) -> Vec<FieldElement> {
        match &self.kind {
            Kind::Dot => gf2::null_space(mus, self.n),
            Kind::Trace { field, .. } => field.ortho_complement(mus),
        }
    }

    pub fn in_complement(&self, alpha: FieldElement, mus: &[FieldElement]) -> bool {
        mus.iter().all(|&mu| !self.inner(alpha, mu))
    }
}
