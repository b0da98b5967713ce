//! Orbit-level semantics: algebras, orbits (partition-labeled for the
//! classical families, Bala-Carter-labeled for the exceptional types),
//! dimension formulas, closure order, littleness, rigidity, and the named
//! regular/subregular/minimal orbits.

use crate::error::{Error, Result};
use crate::excdata;
use crate::partitions::{EpsClass, Partition};
use crate::rootsys::RootKind;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A complex simple (or partition-level classical) Lie algebra.
///
/// `Sl(n)` is sl_n, `So(n)` is so_n, `Sp(m)` is sp_m with m even. The
/// small-rank orthogonal degeneracies (so_2, so_4 not simple) are handled
/// uniformly at partition level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algebra {
    Sl(u32),
    So(u32),
    Sp(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::Sl(n) => write!(f, "sl{n}"),
            Algebra::So(n) => write!(f, "so{n}"),
            Algebra::Sp(n) => write!(f, "sp{n}"),
            Algebra::G2 => write!(f, "G2"),
            Algebra::F4 => write!(f, "F4"),
            Algebra::E6 => write!(f, "E6"),
            Algebra::E7 => write!(f, "E7"),
            Algebra::E8 => write!(f, "E8"),
        }
    }
}

impl Algebra {
    /// Parses `"sl6"`, `"so8"`, `"sp4"`, `"E7"`, `"g2"`, ...
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        match t.to_ascii_uppercase().as_str() {
            "G2" => return Ok(Algebra::G2),
            "F4" => return Ok(Algebra::F4),
            "E6" => return Ok(Algebra::E6),
            "E7" => return Ok(Algebra::E7),
            "E8" => return Ok(Algebra::E8),
            _ => {}
        }
        let (family, size) = t.split_at(t.len().min(2));
        let n: u32 = size
            .parse()
            .map_err(|_| Error::InvalidAlgebra(format!("cannot parse {text:?}")))?;
        let alg = match family {
            "sl" => Algebra::Sl(n),
            "so" => Algebra::So(n),
            "sp" => Algebra::Sp(n),
            _ => return Err(Error::InvalidAlgebra(format!("cannot parse {text:?}"))),
        };
        alg.check()?;
        Ok(alg)
    }

    fn check(self) -> Result<()> {
        match self {
            Algebra::Sl(n) | Algebra::So(n) if n >= 1 => Ok(()),
            Algebra::Sp(m) if m >= 2 && m % 2 == 0 => Ok(()),
            Algebra::Sl(_) | Algebra::So(_) | Algebra::Sp(_) => Err(Error::InvalidAlgebra(
                format!("{self} out of the supported range"),
            )),
            _ => Ok(()),
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Algebra::Sl(_) | Algebra::So(_) | Algebra::Sp(_))
    }

    /// The partition size n carried by a classical algebra (so the partition
    /// of an orbit sums to this).
    pub fn partition_size(self) -> Option<u32> {
        match self {
            Algebra::Sl(n) | Algebra::So(n) | Algebra::Sp(n) => Some(n),
            _ => None,
        }
    }

    /// Parity class of the partitions labeling nilpotent orbits.
    pub fn eps_class(self) -> Option<EpsClass> {
        match self {
            Algebra::Sl(_) => Some(EpsClass::A),
            Algebra::So(_) => Some(EpsClass::Plus),
            Algebra::Sp(_) => Some(EpsClass::Minus),
            _ => None,
        }
    }

    /// Dimension of the algebra (closed forms for the classical families,
    /// constants for the exceptional types).
    pub fn dim(self) -> i64 {
        match self {
            Algebra::Sl(n) => {
                let n = i64::from(n);
                n * n - 1
            }
            Algebra::So(n) => {
                let n = i64::from(n);
                n * (n - 1) / 2
            }
            Algebra::Sp(m) => {
                // sp_{2n} has dimension n(2n+1); here m = 2n.
                let n = i64::from(m) / 2;
                n * (2 * n + 1)
            }
            Algebra::G2 => 14,
            Algebra::F4 => 52,
            Algebra::E6 => 78,
            Algebra::E7 => 133,
            Algebra::E8 => 248,
        }
    }

    pub fn rank(self) -> i64 {
        match self {
            Algebra::Sl(n) => i64::from(n) - 1,
            Algebra::So(n) => i64::from(n / 2),
            Algebra::Sp(m) => i64::from(m / 2),
            Algebra::G2 => 2,
            Algebra::F4 => 4,
            Algebra::E6 => 6,
            Algebra::E7 => 7,
            Algebra::E8 => 8,
        }
    }

    /// The root-system type of this algebra (classical low ranks resolve to
    /// their usual types; so_2 has none).
    pub fn root_kind(self) -> RootKind {
        match self {
            Algebra::Sl(n) => RootKind::A(n as usize - 1),
            Algebra::So(n) if n % 2 == 1 => RootKind::B(n as usize / 2),
            Algebra::So(n) => RootKind::D(n as usize / 2),
            Algebra::Sp(m) => RootKind::C(m as usize / 2),
            Algebra::G2 => RootKind::G2,
            Algebra::F4 => RootKind::F4,
            Algebra::E6 => RootKind::E6,
            Algebra::E7 => RootKind::E7,
            Algebra::E8 => RootKind::E8,
        }
    }
}

/// Tag distinguishing the two orbits attached to a very even partition in
/// so_{2n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VeryEvenTag {
    I,
    II,
}

impl fmt::Display for VeryEvenTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VeryEvenTag::I => write!(f, "I"),
            VeryEvenTag::II => write!(f, "II"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum OrbitLabel {
    Classical {
        partition: Partition,
        tag: Option<VeryEvenTag>,
    },
    Exceptional(String),
}

/// A nilpotent orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orbit {
    algebra: Algebra,
    label: OrbitLabel,
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            OrbitLabel::Classical { partition, tag } => {
                write!(f, "{}:{}", self.algebra, partition.to_exp_string())?;
                if let Some(tag) = tag {
                    write!(f, ":{tag}")?;
                }
                Ok(())
            }
            OrbitLabel::Exceptional(label) => write!(f, "{}:{}", self.algebra, label),
        }
    }
}

impl Orbit {
    /// A classical orbit with an explicit (possibly absent) very-even tag.
    /// The tag must be present exactly when the algebra is so_{2n} and the
    /// partition is very even.
    pub fn classical(
        algebra: Algebra,
        partition: Partition,
        tag: Option<VeryEvenTag>,
    ) -> Result<Self> {
        algebra.check()?;
        let eps = algebra
            .eps_class()
            .ok_or_else(|| Error::InvalidAlgebra(format!("{algebra} is not classical")))?;
        let n = algebra.partition_size().unwrap();
        if partition.sum() != n {
            return Err(Error::SizeMismatch(format!(
                "partition of {} in {algebra} (needs {n})",
                partition.sum()
            )));
        }
        if !partition.in_class(eps) {
            return Err(Error::ClassMismatch {
                partition: partition.to_string(),
                class: eps.to_string(),
                n,
            });
        }
        let needs_tag =
            matches!(algebra, Algebra::So(m) if m % 2 == 0) && partition.is_very_even();
        match (needs_tag, tag.is_some()) {
            (true, false) => Err(Error::Domain(format!(
                "very even partition {partition} in {algebra} needs a I/II tag"
            ))),
            (false, true) => Err(Error::Domain(format!(
                "partition {partition} in {algebra} must not carry a I/II tag"
            ))),
            _ => Ok(Orbit {
                algebra,
                label: OrbitLabel::Classical { partition, tag },
            }),
        }
    }

    /// A classical orbit, defaulting a required very-even tag to I.
    pub fn classical_untagged(algebra: Algebra, partition: Partition) -> Result<Self> {
        let needs_tag =
            matches!(algebra, Algebra::So(m) if m % 2 == 0) && partition.is_very_even();
        Orbit::classical(
            algebra,
            partition,
            if needs_tag { Some(VeryEvenTag::I) } else { None },
        )
    }

    /// An exceptional orbit; the label must exist in the curated tables.
    pub fn exceptional(algebra: Algebra, label: &str) -> Result<Self> {
        if algebra.is_classical() {
            return Err(Error::InvalidAlgebra(format!(
                "{algebra} orbits are labeled by partitions"
            )));
        }
        excdata::lookup(algebra, label)?;
        Ok(Orbit {
            algebra,
            label: OrbitLabel::Exceptional(label.to_string()),
        })
    }

    /// Parses orbit text: `"sl6:3,3"`, `"so8:2^4:I"`, `"sp4:2,2"`,
    /// `"E7:A4+A1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let (alg_text, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("orbit text {text:?} lacks ':'")))?;
        let algebra = Algebra::parse(alg_text)?;
        if !algebra.is_classical() {
            return Orbit::exceptional(algebra, rest.trim());
        }
        let (part_text, tag) = match rest.rsplit_once(':') {
            Some((p, "I")) => (p, Some(VeryEvenTag::I)),
            Some((p, "II")) => (p, Some(VeryEvenTag::II)),
            Some(_) => return Err(Error::Parse(format!("bad orbit tag in {text:?}"))),
            None => (rest, None),
        };
        Orbit::classical(algebra, Partition::parse(part_text)?, tag)
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    /// The labeling partition, for classical orbits.
    pub fn partition(&self) -> Option<&Partition> {
        match &self.label {
            OrbitLabel::Classical { partition, .. } => Some(partition),
            OrbitLabel::Exceptional(_) => None,
        }
    }

    pub fn very_even_tag(&self) -> Option<VeryEvenTag> {
        match &self.label {
            OrbitLabel::Classical { tag, .. } => *tag,
            OrbitLabel::Exceptional(_) => None,
        }
    }

    /// The Bala-Carter label, for exceptional orbits.
    pub fn exceptional_label(&self) -> Option<&str> {
        match &self.label {
            OrbitLabel::Exceptional(label) => Some(label),
            OrbitLabel::Classical { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.label {
            OrbitLabel::Classical { partition, .. } => partition.parts().iter().all(|&p| p == 1),
            OrbitLabel::Exceptional(_) => false,
        }
    }

    /// Orbit dimension from the duality formulas (classical) or the curated
    /// tables (exceptional).
    pub fn dim(&self) -> Result<i64> {
        match &self.label {
            OrbitLabel::Classical { partition, .. } => {
                Ok(classical_orbit_dim(self.algebra, partition))
            }
            OrbitLabel::Exceptional(label) => {
                Ok(excdata::lookup(self.algebra, label)?.dim)
            }
        }
    }

    /// Codimension in the ambient algebra.
    pub fn codim(&self) -> Result<i64> {
        Ok(self.algebra.dim() - self.dim()?)
    }

    /// Closure order: is `self` contained in the closure of `other`?
    /// Partition dominance decides; equal very even partitions with distinct
    /// tags are mutually incomparable.
    pub fn closure_leq(&self, other: &Orbit) -> Result<bool> {
        if self.algebra != other.algebra {
            return Err(Error::SizeMismatch(format!(
                "closure order compares orbits of one algebra: {} vs {}",
                self.algebra, other.algebra
            )));
        }
        match (&self.label, &other.label) {
            (
                OrbitLabel::Classical {
                    partition: p1,
                    tag: t1,
                },
                OrbitLabel::Classical {
                    partition: p2,
                    tag: t2,
                },
            ) => {
                if p1 == p2 {
                    return Ok(t1 == t2);
                }
                p1.dominated_by(p2)
            }
            _ => Err(Error::Domain(
                "closure order for exceptional orbits is out of scope".into(),
            )),
        }
    }

    /// All orbits strictly below this one in the closure order.
    pub fn boundary(&self) -> Result<Vec<Orbit>> {
        let OrbitLabel::Classical { partition, .. } = &self.label else {
            return Err(Error::Domain(
                "boundary of exceptional orbits is out of scope".into(),
            ));
        };
        let eps = self.algebra.eps_class().unwrap();
        let mut out = Vec::new();
        for mu in Partition::enumerate(partition.sum(), eps) {
            if &mu == partition || !mu.dominated_by(partition)? {
                continue;
            }
            for orbit in expand_tags(self.algebra, mu) {
                out.push(orbit);
            }
        }
        Ok(out)
    }

    /// Littleness: 0 < 2 dim orbit <= dim algebra.
    pub fn is_little(&self) -> Result<bool> {
        if let OrbitLabel::Exceptional(label) = &self.label {
            return Ok(excdata::lookup(self.algebra, label)?.little);
        }
        let d = self.dim()?;
        Ok(d > 0 && 2 * d <= self.algebra.dim())
    }

    /// Rigidity: not induced from any proper Levi. Closed combinatorial
    /// criteria for the classical families; table lookup for exceptional.
    pub fn is_rigid(&self) -> Result<bool> {
        let partition = match &self.label {
            OrbitLabel::Exceptional(label) => {
                return Ok(excdata::lookup(self.algebra, label)?.rigid)
            }
            OrbitLabel::Classical { partition, .. } => partition,
        };
        match self.algebra {
            Algebra::Sl(_) => Ok(self.is_zero()),
            Algebra::So(_) | Algebra::Sp(_) => {
                let steps_ok = (0..partition.len())
                    .all(|i| partition.part(i) - partition.part(i + 1) <= 1);
                if !steps_ok {
                    return Ok(false);
                }
                // The parity-constrained value must never occur exactly
                // twice: odd values for so, even values for sp.
                let bad_parity = match self.algebra {
                    Algebra::So(_) => 1,
                    _ => 0,
                };
                let parts = partition.parts();
                let mut i = 0;
                while i < parts.len() {
                    let v = parts[i];
                    let mut j = i;
                    while j < parts.len() && parts[j] == v {
                        j += 1;
                    }
                    if v % 2 == bad_parity && j - i == 2 {
                        return Ok(false);
                    }
                    i = j;
                }
                Ok(true)
            }
            _ => unreachable!("classical label on exceptional algebra"),
        }
    }
}

/// Dimension of the partition-labeled orbit (same for both very even tags).
pub fn classical_orbit_dim(algebra: Algebra, partition: &Partition) -> i64 {
    let dual = partition.dual();
    let sq: i64 = dual.parts().iter().map(|&d| i64::from(d) * i64::from(d)).sum();
    let odd = partition.parts().iter().filter(|&&p| p % 2 == 1).count() as i64;
    match algebra {
        Algebra::Sl(n) => i64::from(n) * i64::from(n) - sq,
        Algebra::So(n) => {
            let n = i64::from(n);
            n * (n - 1) / 2 - (sq - odd) / 2
        }
        Algebra::Sp(m) => {
            let n = i64::from(m) / 2;
            n * (2 * n + 1) - (sq + odd) / 2
        }
        _ => panic!("classical_orbit_dim on exceptional algebra"),
    }
}

/// The orbit(s) attached to a partition: two tagged orbits when the
/// partition is very even in so_{2n}, one orbit otherwise.
pub fn expand_tags(algebra: Algebra, partition: Partition) -> Vec<Orbit> {
    let needs_tag = matches!(algebra, Algebra::So(m) if m % 2 == 0) && partition.is_very_even();
    if needs_tag {
        vec![
            Orbit::classical(algebra, partition.clone(), Some(VeryEvenTag::I)).unwrap(),
            Orbit::classical(algebra, partition, Some(VeryEvenTag::II)).unwrap(),
        ]
    } else {
        vec![Orbit::classical(algebra, partition, None).unwrap()]
    }
}

/// All orbits of a classical algebra, in descending lexicographic partition
/// order (very even partitions contribute a I and a II orbit).
pub fn all_orbits(algebra: Algebra) -> Result<Vec<Orbit>> {
    let eps = algebra
        .eps_class()
        .ok_or_else(|| Error::InvalidAlgebra(format!("{algebra} is not classical")))?;
    let n = algebra.partition_size().unwrap();
    Ok(Partition::enumerate(n, eps)
        .into_iter()
        .flat_map(|p| expand_tags(algebra, p))
        .collect())
}

/// Partition of the regular (dense) nilpotent orbit: the collapse of (n).
pub fn regular_partition(algebra: Algebra) -> Result<Partition> {
    let eps = algebra
        .eps_class()
        .ok_or_else(|| Error::InvalidAlgebra(format!("{algebra} is not classical")))?;
    let n = algebra.partition_size().unwrap();
    Partition::new(vec![n])?.collapse(eps)
}

/// The unique maximal orbit strictly below the regular one. Errors if the
/// maximum is not unique (signals a bug or a degenerate algebra).
pub fn subregular_orbit(algebra: Algebra) -> Result<Orbit> {
    let reg = regular_partition(algebra)?;
    let reg_orbit = Orbit::classical_untagged(algebra, reg)?;
    let below = reg_orbit.boundary()?;
    let mut maximal: Vec<&Orbit> = Vec::new();
    for o in &below {
        let dominated = below
            .iter()
            .any(|other| other != o && o.closure_leq(other).unwrap());
        if !dominated {
            maximal.push(o);
        }
    }
    match maximal.as_slice() {
        [o] => Ok((*o).clone()),
        _ => Err(Error::Domain(format!(
            "{algebra} has {} maximal orbits below the regular",
            maximal.len()
        ))),
    }
}

/// The unique nonzero orbit of minimal dimension.
pub fn minimal_orbit(algebra: Algebra) -> Result<Orbit> {
    if !algebra.is_classical() {
        // First table row (tables are sorted by dimension).
        let rec = excdata::list_orbits(algebra)
            .first()
            .copied()
            .ok_or_else(|| Error::Domain(format!("no table rows for {algebra}")))?;
        return Orbit::exceptional(algebra, &rec.label);
    }
    let nonzero: Vec<Orbit> = all_orbits(algebra)?
        .into_iter()
        .filter(|o| !o.is_zero())
        .collect();
    let min_dim = nonzero
        .iter()
        .map(|o| o.dim().unwrap())
        .min()
        .ok_or_else(|| Error::Domain(format!("{algebra} has no nonzero orbit")))?;
    let mins: Vec<Orbit> = nonzero
        .into_iter()
        .filter(|o| o.dim().unwrap() == min_dim)
        .collect();
    match mins.as_slice() {
        [o] => Ok(o.clone()),
        _ => Err(Error::Domain(format!(
            "{algebra} has {} orbits of minimal dimension",
            mins.len()
        ))),
    }
}
