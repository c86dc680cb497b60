//! Fixed-length bit strings and square bit matrices used as inputs to the
//! gadget reductions, plus the two-party Boolean functions built on them.
//!
//! Bit `i` of a vector (0-based) corresponds to input position `i + 1`. When a
//! vector is written as an integer (hex on the command line), position 1 is the
//! least significant bit.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    bits: Vec<bool>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            bits: vec![false; len],
        }
    }

    pub fn ones(len: usize) -> Self {
        BitVector {
            bits: vec![true; len],
        }
    }

    pub fn from_bools(bits: Vec<bool>) -> Self {
        BitVector { bits }
    }

    /// Low `len` bits of `value`, position 1 = least significant bit.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= 64, "from_u64 supports at most 64 bits");
        BitVector {
            bits: (0..len).map(|i| (value >> i) & 1 == 1).collect(),
        }
    }

    /// Parses `0x..`-prefixed or bare hex. Bits above `len` must be zero.
    pub fn from_hex(text: &str, len: usize) -> Result<Self> {
        let digits = text
            .trim()
            .strip_prefix("0x")
            .or_else(|| text.trim().strip_prefix("0X"))
            .unwrap_or(text.trim());
        if digits.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "empty hex string {text:?}"
            )));
        }
        let mut bits = Vec::with_capacity(digits.len() * 4);
        for c in digits.chars().rev() {
            let d = c.to_digit(16).ok_or_else(|| {
                Error::InvalidParameter(format!("bad hex digit {c:?} in {text:?}"))
            })?;
            for k in 0..4 {
                bits.push((d >> k) & 1 == 1);
            }
        }
        if bits.iter().skip(len).any(|&b| b) {
            return Err(Error::InvalidParameter(format!(
                "hex value {text} does not fit in {len} bits"
            )));
        }
        bits.resize(len, false);
        Ok(BitVector { bits })
    }

    pub fn to_hex(&self) -> String {
        let mut out = String::new();
        let nibbles = self.bits.len().div_ceil(4).max(1);
        for k in (0..nibbles).rev() {
            let mut d = 0u32;
            for j in 0..4 {
                if self.bits.get(4 * k + j).copied().unwrap_or(false) {
                    d |= 1 << j;
                }
            }
            out.push(char::from_digit(d, 16).unwrap());
        }
        format!("0x{out}")
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        BitVector {
            bits: (0..len).map(|_| rng.gen::<bool>()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// 0-based access.
    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i] = value;
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn and(&self, other: &BitVector) -> Result<BitVector> {
        check_len(self.len(), other.len())?;
        Ok(BitVector {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| *a && *b)
                .collect(),
        })
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Square `n x n` bit matrix, row-major. Entry `(i, j)` is 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    bits: BitVector,
}

impl BitMatrix {
    pub fn zeros(n: usize) -> Self {
        BitMatrix {
            n,
            bits: BitVector::zeros(n * n),
        }
    }

    pub fn ones(n: usize) -> Self {
        BitMatrix {
            n,
            bits: BitVector::ones(n * n),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Row-major flattening; entry `(i, j)` is bit `i * n + j`.
    pub fn from_flat(n: usize, bits: BitVector) -> Result<Self> {
        check_len(bits.len(), n * n)?;
        Ok(BitMatrix { n, bits })
    }

    pub fn from_u64(value: u64, n: usize) -> Self {
        BitMatrix {
            n,
            bits: BitVector::from_u64(value, n * n),
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        BitMatrix {
            n,
            bits: BitVector::random(n * n, rng),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits.get(i * self.n + j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits.set(i * self.n + j, value);
    }

    pub fn flat(&self) -> &BitVector {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.weight()
    }

    pub fn and(&self, other: &BitMatrix) -> Result<BitMatrix> {
        check_len(self.n, other.n)?;
        Ok(BitMatrix {
            n: self.n,
            bits: self.bits.and(&other.bits)?,
        })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if self.get(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

fn check_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LengthMismatch { left, right });
    }
    Ok(())
}

pub fn hamming_weight(x: &BitVector) -> usize {
    x.weight()
}

/// `|x AND y| mod 2`.
pub fn inner_product(x: &BitVector, y: &BitVector) -> Result<bool> {
    Ok(x.and(y)?.weight() % 2 == 1)
}

/// True iff `x` and `y` share no common 1-position.
pub fn disjointness(x: &BitVector, y: &BitVector) -> Result<bool> {
    Ok(x.and(y)?.weight() == 0)
}
