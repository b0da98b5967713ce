//! First-order jet reducibility verdicts: littleness, the Levi-restriction
//! route with its curated registry, the sl(2p)/(2^p) special case, and the
//! zero-fiber dimension bounds.

use crate::error::{Error, Result};
use crate::excdata;
use crate::orbits::{Algebra, Orbit};
use crate::rootsys::RootSystem;
use std::sync::OnceLock;

/// Why (or whether) an orbit is known to have a reducible first jet scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rc1Verdict {
    Yes(Rc1Reason),
    No(Rc1Reason),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rc1Reason {
    /// The orbit is little.
    Little,
    /// The orbit appears as the sub-orbit of a restriction-registry row
    /// (identified by its registry index).
    Restriction(usize),
    /// The sl(2p) orbit (2^p), p >= 2, whose closure's first jet scheme is
    /// reducible with all extra components of codimension one.
    SpecialCase2p,
    /// Verdict transcribed from the exceptional data tables.
    ExceptionalTable,
}

/// One row of the restriction registry: a maximal Levi with one-dimensional
/// center and simple semisimple part `a`, an orbit G.e of the ambient
/// algebra meeting `a`, and its `a`-orbit A.e.
#[derive(Debug, Clone)]
pub struct RestrictionDatum {
    pub ambient: Algebra,
    /// Simple-root indices (1-based, Bourbaki) spanning the Levi.
    pub levi_subset: Vec<usize>,
    pub ambient_orbit: Orbit,
    pub sub_orbit: Orbit,
    /// Registry row index, used as the verdict's reason tag.
    pub source_row: usize,
}

/// Outcome of the three restriction conditions for a datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RestrictionCheck {
    /// The Levi's semisimple part contains a regular semisimple element of
    /// the ambient algebra.
    pub cond_i: bool,
    /// The sub-orbit is nonzero (so its smallest semisimple ideal is all of
    /// the simple algebra `a`).
    pub cond_ii: bool,
    /// 2 dim G.e <= dim g - 1 (the Levi center is one-dimensional).
    pub cond_iii: bool,
}

impl RestrictionCheck {
    pub fn all(self) -> bool {
        self.cond_i && self.cond_ii && self.cond_iii
    }
}

/// Evaluates the three conditions of the restriction criterion for a datum.
pub fn restriction_check(d: &RestrictionDatum) -> Result<RestrictionCheck> {
    let rs = RootSystem::new(d.ambient.root_kind())?;
    let cond_i = rs.levi_condition_i(&d.levi_subset)?;
    let cond_ii = !d.sub_orbit.is_zero();
    let cond_iii = 2 * d.ambient_orbit.dim()? <= d.ambient.dim() - 1;
    Ok(RestrictionCheck {
        cond_i,
        cond_ii,
        cond_iii,
    })
}

/// Registry rows: ambient algebra, Levi simple-root subset, ambient orbit,
/// sub-orbit. Every row drops the branching node so the Levi's semisimple
/// part is the next-smaller simple algebra of the same letter.
const REGISTRY_CSV: &str = "\
ambient,levi_subset,ambient_orbit,sub_orbit
so12,2 3 4 5 6,3 2^2 1^5,3 2^2 1^3
so14,2 3 4 5 6 7,3^2 1^8,3^2 1^6
so18,2 3 4 5 6 7 8 9,3^2 2^2 1^8,3^2 2^2 1^6
so20,2 3 4 5 6 7 8 9 10,3^3 1^11,3^3 1^9
so20,2 3 4 5 6 7 8 9 10,4^2 1^12,4^2 1^10
so20,2 3 4 5 6 7 8 9 10,5 2^2 1^11,5 2^2 1^9
so20,2 3 4 5 6 7 8 9 10,5 3 1^12,5 3 1^10
E7,1 2 3 4 5 6,(3A1)',3A1
E7,1 2 3 4 5 6,A2,A2
";

fn parse_registry() -> Result<Vec<RestrictionDatum>> {
    let mut rows = Vec::new();
    for (idx, line) in REGISTRY_CSV.lines().skip(1).enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::Parse(format!("registry row {idx}: bad field count")));
        }
        let ambient = Algebra::parse(fields[0])?;
        let levi_subset = fields[1]
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("registry row {idx}: bad node {t}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        let sub_algebra = sub_algebra_of(ambient, levi_subset.len())?;
        let parse_orbit = |alg: Algebra, text: &str| -> Result<Orbit> {
            if alg.is_classical() {
                Orbit::classical_untagged(alg, crate::Partition::parse(&text.replace(' ', ","))?)
            } else {
                Orbit::exceptional(alg, text)
            }
        };
        rows.push(RestrictionDatum {
            ambient,
            levi_subset: levi_subset.clone(),
            ambient_orbit: parse_orbit(ambient, fields[2])?,
            sub_orbit: parse_orbit(sub_algebra, fields[3])?,
            source_row: idx,
        });
    }
    Ok(rows)
}

/// The simple algebra generated by a registry Levi subset: the next-smaller
/// D for an orthogonal ambient, E6 inside E7.
fn sub_algebra_of(ambient: Algebra, subset_len: usize) -> Result<Algebra> {
    match ambient {
        Algebra::So(n) if n % 2 == 0 && subset_len + 1 == (n / 2) as usize => {
            Ok(Algebra::So(n - 2))
        }
        Algebra::E7 if subset_len == 6 => Ok(Algebra::E6),
        _ => Err(Error::Domain(format!(
            "unsupported registry Levi in {ambient}"
        ))),
    }
}

/// The restriction registry, parsed once and verified against the three
/// conditions; a corrupt registry is a programming error.
pub fn restriction_registry() -> &'static [RestrictionDatum] {
    static REGISTRY: OnceLock<Vec<RestrictionDatum>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let rows = parse_registry().expect("embedded restriction registry must parse");
        for d in &rows {
            let check = restriction_check(d).expect("registry rows must be checkable");
            assert!(
                check.all(),
                "registry row {} fails a restriction condition",
                d.source_row
            );
        }
        rows
    })
}

/// Decides reducibility of the first jet scheme of the orbit closure.
/// `Unknown` means no certificate applies — never "irreducible".
pub fn rc1_status(o: &Orbit) -> Result<Rc1Verdict> {
    if let Some(label) = o.exceptional_label() {
        let rec = excdata::lookup(o.algebra(), label)?;
        return Ok(match rec.rc1 {
            excdata::Rc1::Yes(excdata::Rc1Reason::Little) => Rc1Verdict::Yes(Rc1Reason::Little),
            excdata::Rc1::Yes(excdata::Rc1Reason::Restriction { .. }) => {
                match restriction_registry()
                    .iter()
                    .find(|d| &d.sub_orbit == o)
                {
                    Some(d) => Rc1Verdict::Yes(Rc1Reason::Restriction(d.source_row)),
                    None => Rc1Verdict::Yes(Rc1Reason::ExceptionalTable),
                }
            }
            excdata::Rc1::No => Rc1Verdict::No(Rc1Reason::ExceptionalTable),
        });
    }
    if o.is_little()? {
        return Ok(Rc1Verdict::Yes(Rc1Reason::Little));
    }
    if let (Algebra::Sl(n), Some(lam)) = (o.algebra(), o.partition()) {
        let parts = lam.parts();
        if n >= 4 && n % 2 == 0 && parts.len() == (n / 2) as usize && parts.iter().all(|&p| p == 2)
        {
            return Ok(Rc1Verdict::Yes(Rc1Reason::SpecialCase2p));
        }
    }
    if let Some(d) = restriction_registry().iter().find(|d| &d.sub_orbit == o) {
        return Ok(Rc1Verdict::Yes(Rc1Reason::Restriction(d.source_row)));
    }
    Ok(Rc1Verdict::Unknown)
}

/// Lower bound for the dimension of the zero fiber of the m-jet projection
/// of the orbit closure: dim g for m = 1, m dim O + codim O for m >= 2.
pub fn zero_fiber_lower_bound(o: &Orbit, m: u32) -> Result<i64> {
    if o.is_zero() {
        return Err(Error::Domain(
            "the zero-fiber bound concerns nonzero orbits".into(),
        ));
    }
    if m == 0 {
        return Err(Error::Domain("jet order must be at least 1".into()));
    }
    if m == 1 {
        Ok(o.algebra().dim())
    } else {
        Ok(i64::from(m) * o.dim()? + o.codim()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Partition;

    #[test]
    fn registry_rows_pass_all_conditions() {
        let rows = restriction_registry();
        assert_eq!(rows.len(), 9);
        for d in rows {
            let check = restriction_check(d).unwrap();
            assert!(check.all(), "row {} failed", d.source_row);
        }
        // The E7 A2 row attains condition (iii) with equality: 2*66 = 133-1.
        let a2 = &rows[8];
        assert_eq!(a2.ambient_orbit.dim().unwrap(), 66);
        assert_eq!(a2.ambient.dim(), 133);
    }

    #[test]
    fn restriction_conditions_can_fail() {
        // B4 with a B3 Levi fails condition (i).
        let rs = RootSystem::new(crate::rootsys::RootKind::B(4)).unwrap();
        assert!(!rs.levi_condition_i(&[2, 3, 4]).unwrap());
        // A zero sub-orbit fails condition (ii).
        let d = RestrictionDatum {
            ambient: Algebra::So(12),
            levi_subset: vec![2, 3, 4, 5, 6],
            ambient_orbit: Orbit::parse("so12:3,2^2,1^5").unwrap(),
            sub_orbit: Orbit::parse("so10:1^10").unwrap(),
            source_row: 99,
        };
        let check = restriction_check(&d).unwrap();
        assert!(check.cond_i && !check.cond_ii && check.cond_iii);
        // A regular ambient orbit fails condition (iii).
        let d = RestrictionDatum {
            ambient_orbit: Orbit::parse("so12:11,1").unwrap(),
            ..d
        };
        assert!(!restriction_check(&d).unwrap().cond_iii);
    }

    #[test]
    fn verdicts() {
        assert_eq!(
            rc1_status(&Orbit::parse("sl4:2,2").unwrap()).unwrap(),
            Rc1Verdict::Yes(Rc1Reason::SpecialCase2p)
        );
        assert_eq!(
            rc1_status(&Orbit::parse("G2:~A1").unwrap()).unwrap(),
            Rc1Verdict::No(Rc1Reason::ExceptionalTable)
        );
        // Sub-orbits of the registry rows get the restriction verdict.
        assert_eq!(
            rc1_status(&Orbit::parse("so10:3,2^2,1^3").unwrap()).unwrap(),
            Rc1Verdict::Yes(Rc1Reason::Restriction(0))
        );
        assert_eq!(
            rc1_status(&Orbit::parse("E6:3A1").unwrap()).unwrap(),
            Rc1Verdict::Yes(Rc1Reason::Restriction(7))
        );
        assert_eq!(
            rc1_status(&Orbit::parse("E6:A2").unwrap()).unwrap(),
            Rc1Verdict::Yes(Rc1Reason::Restriction(8))
        );
        // Little orbits are certified by littleness.
        assert_eq!(
            rc1_status(&Orbit::parse("sp6:2,1^4").unwrap()).unwrap(),
            Rc1Verdict::Yes(Rc1Reason::Little)
        );
        assert_eq!(
            rc1_status(&Orbit::parse("F4:A1").unwrap()).unwrap(),
            Rc1Verdict::Yes(Rc1Reason::Little)
        );
        // Regular orbits carry no certificate.
        assert_eq!(
            rc1_status(&Orbit::parse("sl5:5").unwrap()).unwrap(),
            Rc1Verdict::Unknown
        );
    }

    #[test]
    fn little_orbits_all_certified() {
        for n in 2..=10u32 {
            for alg in [Algebra::Sl(n), Algebra::So(n), Algebra::Sp(2 * (n / 2))] {
                for o in crate::orbits::all_orbits(alg).unwrap() {
                    if o.is_little().unwrap() {
                        assert!(
                            matches!(rc1_status(&o).unwrap(), Rc1Verdict::Yes(_)),
                            "{o:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn zero_fiber_bounds() {
        // sl2, regular orbit (2): m >= 2 gives 2m + 1.
        let o = Orbit::parse("sl2:2").unwrap();
        for m in 2..=5 {
            assert_eq!(zero_fiber_lower_bound(&o, m).unwrap(), 2 * i64::from(m) + 1);
        }
        assert_eq!(zero_fiber_lower_bound(&o, 1).unwrap(), 3);
        // sp4, (2,2): m=2 gives 16 < 18 = 3 dim O, consistent with
        // (2,2) not being little.
        let o = Orbit::parse("sp4:2,2").unwrap();
        assert_eq!(zero_fiber_lower_bound(&o, 2).unwrap(), 16);
        assert!(!o.is_little().unwrap());
        // The m=1 bound reaches 2 dim O exactly when the orbit is little.
        for n in 2..=10u32 {
            for o in crate::orbits::all_orbits(Algebra::So(n)).unwrap() {
                if o.is_zero() {
                    continue;
                }
                let b = zero_fiber_lower_bound(&o, 1).unwrap();
                assert_eq!(b >= 2 * o.dim().unwrap(), o.is_little().unwrap(), "{o:?}");
            }
        }
        let zero = Orbit::classical_untagged(
            Algebra::Sl(3),
            Partition::parse("1^3").unwrap(),
        )
        .unwrap();
        assert!(zero_fiber_lower_bound(&zero, 1).is_err());
    }
}
