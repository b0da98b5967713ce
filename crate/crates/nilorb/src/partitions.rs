//! Integer partitions, parity classes, dominance order, and the collapse
//! maps that send an arbitrary partition to the largest partition below it
//! inside a parity class.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Parity class of partitions attached to a family of classical algebras.
///
/// * `A` — all partitions (type A, no constraint).
/// * `Plus` — even parts occur with even multiplicity (orthogonal types B/D).
/// * `Minus` — odd parts occur with even multiplicity (symplectic type C);
///   membership forces the total to be even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EpsClass {
    A,
    Plus,
    Minus,
}

impl fmt::Display for EpsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EpsClass::A => write!(f, "P"),
            EpsClass::Plus => write!(f, "P_1"),
            EpsClass::Minus => write!(f, "P_-1"),
        }
    }
}

/// A partition: a non-increasing sequence of positive integers.
///
/// The empty partition (of 0) is allowed. Parts are stored without trailing
/// zeros. Ordering (`Ord`) is lexicographic on the part vector, which is only
/// used to make sets and sorted output deterministic; the mathematically
/// meaningful order is [`Partition::dominated_by`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from a non-increasing sequence. Zeros are stripped;
    /// an out-of-order sequence is rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be non-increasing, got {parts:?}"
            )));
        }
        parts.retain(|&p| p > 0);
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order (zeros allowed).
    pub fn from_unsorted(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts: Vec<u32> = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The i-th part with zero padding beyond the length (0-based).
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The integer being partitioned.
    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The dual (conjugate) partition: column lengths of the Young diagram.
    pub fn dual(&self) -> Partition {
        let rows = self.parts.len();
        let mut dual = Vec::new();
        if rows == 0 {
            return Partition { parts: dual };
        }
        let mut col = 1u32;
        loop {
            let height = self.parts.iter().take_while(|&&p| p >= col).count() as u32;
            if height == 0 {
                break;
            }
            dual.push(height);
            col += 1;
        }
        Partition { parts: dual }
    }

    /// Multiset union of parts, resorted.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Dominance order: `self <= other` iff all prefix sums of `self` are
    /// bounded by those of `other`. Errors if the two sums differ.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        if self.sum() != other.sum() {
            return Err(Error::SizeMismatch(format!(
                "dominance compares partitions of the same integer: {} vs {}",
                self.sum(),
                other.sum()
            )));
        }
        let k = self.parts.len().max(other.parts.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..k {
            a += u64::from(self.part(i));
            b += u64::from(other.part(i));
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership in a parity class.
    pub fn in_class(&self, eps: EpsClass) -> bool {
        match eps {
            EpsClass::A => true,
            EpsClass::Plus => class_ok(&self.parts, |p| p % 2 == 0),
            EpsClass::Minus => class_ok(&self.parts, |p| p % 2 == 1),
        }
    }

    /// All parts even (the partitions of 2n giving two orthogonal orbits).
    pub fn is_very_even(&self) -> bool {
        !self.parts.is_empty() && self.parts.iter().all(|p| p % 2 == 0)
    }

    /// True if all parts are equal (including the empty partition).
    pub fn is_rectangular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Number of distinct column lengths exceeding each other by at least 2,
    /// i.e. the parts of the dual read as jumps; used by membership
    /// predicates. Returns the list of indices k (0-based) with
    /// `part(k) >= part(k+1) + 2`.
    pub fn jump_indices(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&k| self.part(k) >= self.part(k + 1) + 2)
            .collect()
    }

    /// The collapse of `self` into the class `eps`: the unique dominance-
    /// maximal element of the class below `self`. For `EpsClass::A` this is
    /// the identity. `Minus` requires an even sum.
    pub fn collapse(&self, eps: EpsClass) -> Result<Partition> {
        let even_target = match eps {
            EpsClass::A => return Ok(self.clone()),
            EpsClass::Plus => true,
            EpsClass::Minus => {
                if self.sum() % 2 != 0 {
                    return Err(Error::ClassMismatch {
                        partition: self.to_string(),
                        class: eps.to_string(),
                        n: self.sum(),
                    });
                }
                false
            }
        };
        let n = self.sum() as usize;
        let mut v = vec![0u32; n];
        v[..self.parts.len()].copy_from_slice(&self.parts);

        // Repeatedly repair the first prefix where class membership breaks:
        // shrink the offending part by one and grow the first later part of
        // the wrong parity (zeros count as even) by one.
        loop {
            if slice_in_class(&v, even_target) {
                break;
            }
            let mut r = 0;
            for l in (1..=n).rev() {
                if slice_in_class(&v[..l], even_target) {
                    r = l;
                    break;
                }
            }
            debug_assert!(r + 1 <= n, "offending index must exist");
            v[r] -= 1;
            let s = (r + 1..n)
                .find(|&s| (v[s] % 2 == 0) == even_target)
                .ok_or_else(|| {
                    Error::Domain(format!("collapse of {self} into {eps} has no repair slot"))
                })?;
            v[s] += 1;
            debug_assert!(
                v.windows(2).all(|w| w[0] >= w[1]),
                "collapse step must preserve sortedness"
            );
        }
        Partition::new(v)
    }

    /// All partitions of `n` lying in `eps`, in descending lexicographic
    /// order (so the class-regular partition comes first and the zero
    /// partition `1^n` last).
    pub fn enumerate(n: u32, eps: EpsClass) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        gen_parts(n, n, &mut prefix, &mut |parts| {
            let p = Partition {
                parts: parts.to_vec(),
            };
            if p.in_class(eps) {
                out.push(p);
            }
        });
        out
    }

    /// Parses partition text: comma-separated parts, each optionally with an
    /// exponent, e.g. `"3,2^2,1^5"` or `"3,2,2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for chunk in text.split(',') {
            let chunk = chunk.trim();
            let (base, mult) = match chunk.split_once('^') {
                Some((b, m)) => (b.trim(), m.trim()),
                None => (chunk, "1"),
            };
            let base: u32 = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part {chunk:?}")))?;
            let mult: u32 = mult
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {chunk:?}")))?;
            if base == 0 || mult == 0 {
                return Err(Error::Parse(format!("zero part or exponent in {chunk:?}")));
            }
            parts.extend(std::iter::repeat(base).take(mult as usize));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "partition parts must be non-increasing: {text:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Exponent form, e.g. `3,2^2,1^5`.
    pub fn to_exp_string(&self) -> String {
        if self.parts.is_empty() {
            return "0".to_string();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == v {
                j += 1;
            }
            if j - i == 1 {
                out.push(format!("{v}"));
            } else {
                out.push(format!("{v}^{}", j - i));
            }
            i = j;
        }
        out.join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

/// Parts of the given parity must occur an even number of times
/// (`wrong_parity` selects which parity is constrained).
fn class_ok(parts: &[u32], constrained: impl Fn(u32) -> bool) -> bool {
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == v {
            j += 1;
        }
        if v > 0 && constrained(v) && (j - i) % 2 != 0 {
            return false;
        }
        i = j;
    }
    true
}

/// Class check on a prefix slice that may contain zero padding.
fn slice_in_class(v: &[u32], even_constrained: bool) -> bool {
    if even_constrained {
        class_ok(v, |p| p % 2 == 0)
    } else {
        class_ok(v, |p| p % 2 == 1)
    }
}

fn gen_parts(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if remaining == 0 {
        emit(prefix);
        return;
    }
    let mut p = max_part.min(remaining);
    while p >= 1 {
        prefix.push(p);
        gen_parts(remaining - p, p, prefix, emit);
        prefix.pop();
        p -= 1;
    }
}
