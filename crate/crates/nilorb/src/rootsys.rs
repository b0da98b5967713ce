//! Root systems of the finite simple types in exact integer coordinates.
//!
//! Roots are stored with all coordinates doubled so that the half-integer
//! coordinates of types E and F become integers; Cartan pairings are exact
//! integer arithmetic throughout. Simple roots follow the standard Bourbaki
//! numbering.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// The nine finite simple types (classical types carry their rank).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKind::A(n) => write!(f, "A{n}"),
            RootKind::B(n) => write!(f, "B{n}"),
            RootKind::C(n) => write!(f, "C{n}"),
            RootKind::D(n) => write!(f, "D{n}"),
            RootKind::E6 => write!(f, "E6"),
            RootKind::E7 => write!(f, "E7"),
            RootKind::E8 => write!(f, "E8"),
            RootKind::F4 => write!(f, "F4"),
            RootKind::G2 => write!(f, "G2"),
        }
    }
}

impl RootKind {
    pub fn rank(self) -> usize {
        match self {
            RootKind::A(n) | RootKind::B(n) | RootKind::C(n) | RootKind::D(n) => n,
            RootKind::E6 => 6,
            RootKind::E7 => 7,
            RootKind::E8 => 8,
            RootKind::F4 => 4,
            RootKind::G2 => 2,
        }
    }
}

type Vec8 = Vec<i64>;

/// A concrete root system: the full set of roots and a simple system, in a
/// fixed orthonormal realization (coordinates doubled).
#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: RootKind,
    simple: Vec<Vec8>,
    roots: Vec<Vec8>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact Cartan pairing 2(a,b)/(b,b); errors are impossible for genuine
/// roots, so divisibility is asserted.
fn pairing(b_check_of: &[i64], a: &[i64]) -> i64 {
    let num = 2 * dot(b_check_of, a);
    let den = dot(b_check_of, b_check_of);
    debug_assert_eq!(num % den, 0, "pairing must be integral");
    num / den
}

impl RootSystem {
    /// Builds the root system of the given kind. Classical ranks: A needs
    /// rank >= 1, B and C rank >= 1, D rank >= 2 (D2 and D3 are the usual
    /// low-rank degeneracies A1+A1 and A3 and are built verbatim).
    pub fn new(kind: RootKind) -> Result<Self> {
        let simple: Vec<Vec8> = match kind {
            RootKind::A(n) => {
                if n < 1 {
                    return Err(Error::InvalidAlgebra("A requires rank >= 1".into()));
                }
                (0..n).map(|i| e_minus_e(n + 1, i, i + 1)).collect()
            }
            RootKind::B(n) => {
                if n < 1 {
                    return Err(Error::InvalidAlgebra("B requires rank >= 1".into()));
                }
                let mut s: Vec<Vec8> = (0..n - 1).map(|i| e_minus_e(n, i, i + 1)).collect();
                s.push(unit(n, n - 1, 2));
                s
            }
            RootKind::C(n) => {
                if n < 1 {
                    return Err(Error::InvalidAlgebra("C requires rank >= 1".into()));
                }
                let mut s: Vec<Vec8> = (0..n - 1).map(|i| e_minus_e(n, i, i + 1)).collect();
                s.push(unit(n, n - 1, 4));
                s
            }
            RootKind::D(n) => {
                if n < 2 {
                    return Err(Error::InvalidAlgebra("D requires rank >= 2".into()));
                }
                let mut s: Vec<Vec8> = (0..n - 1).map(|i| e_minus_e(n, i, i + 1)).collect();
                let mut last = unit(n, n - 1, 2);
                last[n - 2] = 2;
                s.push(last);
                s
            }
            RootKind::G2 => vec![e_minus_e(3, 0, 1), vec![-4, 2, 2]],
            RootKind::F4 => vec![
                e_minus_e(4, 1, 2),
                e_minus_e(4, 2, 3),
                unit(4, 3, 2),
                vec![1, -1, -1, -1],
            ],
            RootKind::E6 => e_simple(6),
            RootKind::E7 => e_simple(7),
            RootKind::E8 => e_simple(8),
        };
        let roots = reflection_closure(&simple);
        let expected = match kind {
            RootKind::A(n) => n * (n + 1),
            RootKind::B(n) | RootKind::C(n) => 2 * n * n,
            RootKind::D(n) => 2 * n * (n - 1),
            RootKind::E6 => 72,
            RootKind::E7 => 126,
            RootKind::E8 => 240,
            RootKind::F4 => 48,
            RootKind::G2 => 12,
        };
        assert_eq!(roots.len(), expected, "root count for {kind}");
        Ok(RootSystem {
            kind,
            simple,
            roots,
        })
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn roots(&self) -> &[Vec8] {
        &self.roots
    }

    pub fn simple_roots(&self) -> &[Vec8] {
        &self.simple
    }

    /// Dimension of the algebra: number of roots plus the rank.
    pub fn algebra_dim(&self) -> i64 {
        self.roots.len() as i64 + self.rank() as i64
    }

    /// Cartan pairing `<alpha_i^vee, alpha_j>` between simple roots
    /// (the Cartan matrix entry in row i, column j).
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        pairing(&self.simple[i], &self.simple[j])
    }

    /// Pairing `<alpha_i^vee, beta>` of a simple coroot against any vector.
    pub fn simple_pairing(&self, i: usize, beta: &[i64]) -> i64 {
        pairing(&self.simple[i], beta)
    }

    /// The support condition on a subset S of simple-root indices (1-based):
    /// every root of the ambient system must pair nontrivially with at least
    /// one simple root indexed by S.
    pub fn levi_condition_i(&self, subset: &[usize]) -> Result<bool> {
        let s = self.check_subset(subset)?;
        Ok(self.roots.iter().all(|root| {
            s.iter()
                .any(|&i| pairing(&self.simple[i - 1], root) != 0)
        }))
    }

    /// Splits the subdiagram spanned by a subset of simple-root indices
    /// (1-based) into connected components and identifies the type of each.
    /// Components come back ordered by their smallest node, each with its
    /// node list in diagram order.
    pub fn levi_components(&self, subset: &[usize]) -> Result<Vec<LeviComponent>> {
        let s = self.check_subset(subset)?;
        let nodes: Vec<usize> = s.iter().copied().collect();
        let mut seen = vec![false; nodes.len()];
        let mut comps = Vec::new();
        for start in 0..nodes.len() {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(i) = stack.pop() {
                comp.push(nodes[i]);
                for j in 0..nodes.len() {
                    if !seen[j] && self.cartan(nodes[i] - 1, nodes[j] - 1) != 0 {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            let kind = self.classify_component(&comp)?;
            comps.push(LeviComponent { kind, nodes: comp });
        }
        Ok(comps)
    }

    fn check_subset(&self, subset: &[usize]) -> Result<BTreeSet<usize>> {
        let s: BTreeSet<usize> = subset.iter().copied().collect();
        if s.len() != subset.len() {
            return Err(Error::Domain("subset has repeated nodes".into()));
        }
        if let Some(&bad) = s.iter().find(|&&i| i == 0 || i > self.rank()) {
            return Err(Error::Domain(format!(
                "node {bad} out of range 1..={}",
                self.rank()
            )));
        }
        Ok(s)
    }

    /// Identifies the type of a connected subdiagram given by 1-based node
    /// ids, using only the Cartan matrix.
    fn classify_component(&self, comp: &[usize]) -> Result<RootKind> {
        let k = comp.len();
        let cart = |a: usize, b: usize| self.cartan(comp[a] - 1, comp[b] - 1);
        let mut adj = vec![Vec::new(); k];
        let mut multi_edges = Vec::new();
        for a in 0..k {
            for b in (a + 1)..k {
                let m = cart(a, b) * cart(b, a);
                if m != 0 {
                    adj[a].push(b);
                    adj[b].push(a);
                    if m > 1 {
                        multi_edges.push((a, b, m));
                    }
                }
            }
        }
        if multi_edges.len() > 1 {
            return Err(Error::Domain("unrecognizable subdiagram".into()));
        }
        if let Some(&(a, b, m)) = multi_edges.first() {
            if m == 3 {
                return Ok(RootKind::G2);
            }
            // One double edge: B, C, or F4, depending on where it sits and
            // which end is short. cart(a,b) == -2 means comp[b] is short.
            let interior = adj[a].len() > 1 && adj[b].len() > 1;
            if interior {
                if k == 4 {
                    return Ok(RootKind::F4);
                }
                return Err(Error::Domain("unrecognizable subdiagram".into()));
            }
            // The chain endpoint adjacent to the double edge determines B/C:
            // cart(i, j) == -2 exactly when alpha_i is short and alpha_j long,
            // so an endpoint receiving -2 is the long root of type C.
            let (end, _other) = if adj[a].len() == 1 { (a, b) } else { (b, a) };
            let neighbor = adj[end][0];
            let end_is_long = cart(neighbor, end) == -2;
            return Ok(if end_is_long {
                RootKind::C(k)
            } else {
                RootKind::B(k)
            });
        }
        // Simply laced: A (path), D (one branch node with a length-1 arm
        // pair), or E (arm lengths 1,2,k-4... i.e. {1,2,2},{1,2,3},{1,2,4}).
        let branch: Vec<usize> = (0..k).filter(|&a| adj[a].len() >= 3).collect();
        match branch.len() {
            0 => Ok(RootKind::A(k)),
            1 => {
                let b = branch[0];
                if adj[b].len() != 3 {
                    return Err(Error::Domain("unrecognizable subdiagram".into()));
                }
                let mut arms: Vec<usize> = adj[b]
                    .iter()
                    .map(|&first| {
                        let mut len = 1;
                        let (mut prev, mut cur) = (b, first);
                        while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                            prev = cur;
                            cur = next;
                            len += 1;
                        }
                        len
                    })
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => Ok(RootKind::D(k)),
                    [1, 2, 2] => Ok(RootKind::E6),
                    [1, 2, 3] => Ok(RootKind::E7),
                    [1, 2, 4] => Ok(RootKind::E8),
                    _ => Err(Error::Domain("unrecognizable subdiagram".into())),
                }
            }
            _ => Err(Error::Domain("unrecognizable subdiagram".into())),
        }
    }
}

/// A connected component of a Levi subdiagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviComponent {
    pub kind: RootKind,
    /// 1-based ambient node ids, ascending.
    pub nodes: Vec<usize>,
}

fn unit(dim: usize, i: usize, val: i64) -> Vec8 {
    let mut v = vec![0; dim];
    v[i] = val;
    v
}

fn e_minus_e(dim: usize, i: usize, j: usize) -> Vec8 {
    let mut v = vec![0; dim];
    v[i] = 2;
    v[j] = -2;
    v
}

/// Bourbaki simple roots of E6/E7/E8 inside the 8-dimensional realization
/// of E8 (coordinates doubled: half-integers become +-1).
fn e_simple(rank: usize) -> Vec<Vec8> {
    let mut s = vec![
        vec![1, -1, -1, -1, -1, -1, -1, 1],
        vec![2, 2, 0, 0, 0, 0, 0, 0],
        vec![-2, 2, 0, 0, 0, 0, 0, 0],
        vec![0, -2, 2, 0, 0, 0, 0, 0],
        vec![0, 0, -2, 2, 0, 0, 0, 0],
        vec![0, 0, 0, -2, 2, 0, 0, 0],
        vec![0, 0, 0, 0, -2, 2, 0, 0],
        vec![0, 0, 0, 0, 0, -2, 2, 0],
    ];
    s.truncate(rank);
    s
}

/// Closure of the simple system under simple reflections; since every root
/// is Weyl-conjugate to a simple root, iterating to a fixed point yields the
/// full root system.
fn reflection_closure(simple: &[Vec8]) -> Vec<Vec8> {
    let mut set: BTreeSet<Vec8> = simple.iter().cloned().collect();
    loop {
        let mut fresh = Vec::new();
        for root in &set {
            for s in simple {
                let c = pairing(s, root);
                let reflected: Vec8 = root
                    .iter()
                    .zip(s)
                    .map(|(&r, &si)| r - c * si)
                    .collect();
                if !set.contains(&reflected) {
                    fresh.push(reflected);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        set.extend(fresh);
    }
    set.into_iter().collect()
}
