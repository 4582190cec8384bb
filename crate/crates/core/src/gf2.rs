//! Dense linear algebra over GF(2) on vectors packed into `u32`.
//!
//! Every vector space handled by the crate has dimension at most 24, so a
//! single machine word per vector suffices.

/// Parity of `row & x`, i.e. the standard dot product over GF(2).
#[inline]
pub fn dot(row: u32, x: u32) -> bool {
    (row & x).count_ones() & 1 == 1
}

/// Incrementally maintained reduced basis, keyed by each vector's highest
/// set bit. No vector in the basis has another vector's leading bit set.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<u32>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<I: IntoIterator<Item = u32>>(vs: I) -> Self {
        let mut e = Self::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: u32) -> u32 {
        for &r in &self.rows {
            let lead = 31 - r.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    pub fn contains(&self, v: u32) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v` to the basis. Returns `false` if `v` was already in the span.
    pub fn insert(&mut self, v: u32) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let lead = 31 - v.leading_zeros();
        for r in &mut self.rows {
            if *r >> lead & 1 == 1 {
                *r ^= v;
            }
        }
        let pos = self
            .rows
            .iter()
            .position(|&r| r.leading_zeros() < v.leading_zeros())
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        true
    }

    /// Basis vectors sorted ascending by leading bit.
    pub fn basis(&self) -> Vec<u32> {
        let mut b = self.rows.clone();
        b.sort_unstable();
        b
    }

    /// Iterates over the span in ascending integer order.
    pub fn span_ascending(&self) -> SpanIter {
        SpanIter {
            basis: self.basis(),
            next: 0,
        }
    }
}

/// Ascending enumeration of a subspace given by a reduced basis.
#[derive(Clone, Debug)]
pub struct SpanIter {
    basis: Vec<u32>,
    next: u64,
}

impl Iterator for SpanIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.next >> self.basis.len() != 0 {
            return None;
        }
        let k = self.next;
        self.next += 1;
        Some(
            self.basis
                .iter()
                .enumerate()
                .filter(|(i, _)| k >> i & 1 == 1)
                .fold(0, |acc, (_, &b)| acc ^ b),
        )
    }
}

pub fn rank(vs: &[u32]) -> usize {
    Echelon::from_vectors(vs.iter().copied()).rank()
}

/// Basis of `{x in GF(2)^n : dot(row, x) = 0 for every row}`.
pub fn null_space(rows: &[u32], n: u32) -> Vec<u32> {
    let mut reduced: Vec<(u32, u32)> = Vec::new(); // (pivot bit, row)
    for &row in rows {
        let mut v = row;
        for &(p, r) in &reduced {
            if v >> p & 1 == 1 {
                v ^= r;
            }
        }
        if v == 0 {
            continue;
        }
        let p = v.trailing_zeros();
        for (_, r) in &mut reduced {
            if *r >> p & 1 == 1 {
                *r ^= v;
            }
        }
        reduced.push((p, v));
    }
    let pivots: u32 = reduced.iter().fold(0, |acc, &(p, _)| acc | 1 << p);
    (0..n)
        .filter(|f| pivots >> f & 1 == 0)
        .map(|f| {
            reduced
                .iter()
                .filter(|(_, r)| r >> f & 1 == 1)
                .fold(1u32 << f, |acc, &(p, _)| acc | 1 << p)
        })
        .collect()
}

/// Square matrix over GF(2), stored as rows; bit `j` of `rows[i]` is entry (i, j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    n: u32,
    rows: Vec<u32>,
}

impl BitMatrix {
    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[u32]) -> Self {
        let n = columns.len() as u32;
        let rows = (0..n)
            .map(|i| {
                columns
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, &c)| acc | ((c >> i & 1) << j))
            })
            .collect();
        Self { n, rows }
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &r)| acc | (u32::from(dot(r, v)) << i))
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.n as usize;
        let mut a = self.rows.clone();
        let mut inv: Vec<u32> = (0..n).map(|i| 1u32 << i).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r] >> col & 1 == 1)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(BitMatrix {
            n: self.n,
            rows: inv,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_of_single_constraint() {
        let basis = null_space(&[0b1], 6);
        assert_eq!(basis.len(), 5);
        assert!(basis.iter().all(|&b| !dot(1, b)));
        assert_eq!(rank(&basis), 5);
    }

    #[test]
    fn null_space_is_orthogonal_and_full() {
        let rows = [0b1011, 0b0110, 0b1101];
        let basis = null_space(&rows, 4);
        // 0b1101 = 0b1011 ^ 0b0110, so rank 2 and nullity 2.
        assert_eq!(basis.len(), 2);
        for &b in &basis {
            for &r in &rows {
                assert!(!dot(r, b));
            }
        }
        let brute = (0u32..16)
            .filter(|&x| rows.iter().all(|&r| !dot(r, x)))
            .count();
        assert_eq!(brute, 4);
    }

    #[test]
    fn span_is_ascending() {
        let e = Echelon::from_vectors([0b1010, 0b0110, 0b0011]);
        let all: Vec<u32> = e.span_ascending().collect();
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for &x in &all {
            assert!(e.contains(x));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = BitMatrix::from_columns(&[0b011, 0b110, 0b100]);
        let inv = m.inverse().unwrap();
        for v in 0..8 {
            assert_eq!(inv.apply(m.apply(v)), v);
        }
        assert!(BitMatrix::from_columns(&[0b01, 0b01]).inverse().is_none());
    }
}
