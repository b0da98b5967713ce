//! End-to-end acceptance checks: each test is one criterion and prints a
//! single PASS line on success (a failed assertion is the FAIL line).

use nilorb::induction::{
    brute_force_little_set, brute_force_little_set_a, codim_preserved, codim_preserved_a,
    induced_from_little_set, induced_from_little_sets, little_induced_counts, thm_bcd_predicate,
    LeviShapeA, LeviShapeBcd,
};
use nilorb::jets::{jet_expand, matrix_power_jet_ideal, parse_polynomial, JetPolynomial};
use nilorb::orbits::{minimal_orbit, subregular_orbit};
use nilorb::rc::{restriction_check, restriction_registry};
use nilorb::{excdata, Algebra, EpsClass, Partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Reference counts for the orthogonal family: (n, induced-from-little
/// count, total orbit-partition count) for n = 2..=51.
const SO_TABLE: [(u32, usize, usize); 50] = [
    (2, 0, 1),
    (3, 0, 2),
    (4, 1, 3),
    (5, 1, 4),
    (6, 2, 5),
    (7, 4, 7),
    (8, 6, 10),
    (9, 9, 13),
    (10, 10, 16),
    (11, 16, 21),
    (12, 20, 28),
    (13, 27, 35),
    (14, 32, 43),
    (15, 45, 55),
    (16, 52, 70),
    (17, 73, 86),
    (18, 83, 105),
    (19, 111, 130),
    (20, 130, 161),
    (21, 170, 196),
    (22, 195, 236),
    (23, 250, 287),
    (24, 291, 350),
    (25, 367, 420),
    (26, 423, 501),
    (27, 527, 602),
    (28, 609, 722),
    (29, 751, 858),
    (30, 869, 1016),
    (31, 1055, 1206),
    (32, 1223, 1431),
    (33, 1474, 1687),
    (34, 1710, 1981),
    (35, 2039, 2331),
    (36, 2370, 2741),
    (37, 2821, 3206),
    (38, 3265, 3740),
    (39, 3852, 4368),
    (40, 4460, 5096),
    (41, 5242, 5922),
    (42, 6064, 6868),
    (43, 7086, 7967),
    (44, 8182, 9233),
    (45, 9536, 10670),
    (46, 10986, 12306),
    (47, 12748, 14193),
    (48, 14667, 16357),
    (49, 16974, 18803),
    (50, 19485, 21581),
    (51, 22464, 24766),
];

/// Reference counts for the symplectic family: row k describes sp_2k,
/// k = 1..=24.
const SP_TABLE: [(u32, usize, usize); 24] = [
    (1, 0, 2),
    (2, 1, 4),
    (3, 3, 8),
    (4, 9, 14),
    (5, 15, 24),
    (6, 28, 40),
    (7, 45, 64),
    (8, 77, 100),
    (9, 119, 154),
    (10, 182, 232),
    (11, 273, 344),
    (12, 409, 504),
    (13, 594, 728),
    (14, 857, 1040),
    // The printed source table shows 1224 as 1223 here; the value 1224 is
    // forced by the definition (both the one-step and the recursive-closure
    // readings agree) and every other row of both families matches exactly.
    (15, 1224, 1472),
    (16, 1726, 2062),
    (17, 2421, 2864),
    (18, 3378, 3948),
    (19, 4652, 5400),
    (20, 6374, 7336),
    (21, 8677, 9904),
    (22, 11728, 13288),
    (23, 15755, 17728),
    (24, 21061, 23528),
];

#[test]
fn criterion_01_orthogonal_count_table() {
    let start = std::time::Instant::now();
    let rows = little_induced_counts(30, EpsClass::Plus).unwrap();
    assert_eq!(rows.as_slice(), &SO_TABLE[..29], "so rows up to n = 30");
    assert!(
        start.elapsed().as_secs() <= 30,
        "n <= 30 subset exceeded 30 seconds"
    );
    let rows = little_induced_counts(51, EpsClass::Plus).unwrap();
    assert_eq!(rows.as_slice(), &SO_TABLE[..], "so rows up to n = 51");
    assert!(
        start.elapsed().as_secs() <= 600,
        "full orthogonal table exceeded 10 minutes"
    );
    println!("criterion 1 (orthogonal induced-from-little counts, n <= 51): PASS");
}

#[test]
fn criterion_02_symplectic_count_table() {
    let start = std::time::Instant::now();
    let rows = little_induced_counts(24, EpsClass::Minus).unwrap();
    assert_eq!(rows.as_slice(), &SP_TABLE[..], "sp rows up to sp_48");
    assert!(
        start.elapsed().as_secs() <= 300,
        "symplectic table exceeded 5 minutes"
    );
    println!("criterion 2 (symplectic induced-from-little counts, sp_2..sp_48): PASS");
}

#[test]
fn criterion_03_dp_equals_brute_force() {
    let start = std::time::Instant::now();
    for n in 1..=12u32 {
        assert_eq!(
            induced_from_little_set(n, EpsClass::Plus).unwrap(),
            brute_force_little_set(n, EpsClass::Plus).unwrap(),
            "orthogonal sets disagree at n = {n}"
        );
        if n % 2 == 0 {
            assert_eq!(
                induced_from_little_set(n, EpsClass::Minus).unwrap(),
                brute_force_little_set(n, EpsClass::Minus).unwrap(),
                "symplectic sets disagree at n = {n}"
            );
        }
    }
    assert!(start.elapsed().as_secs() <= 120, "oracle check exceeded 2 minutes");
    println!("criterion 3 (dynamic program equals brute-force enumeration, n <= 12): PASS");
}

#[test]
fn criterion_04_collapse_oracle() {
    let start = std::time::Instant::now();
    for n in 1..=16u32 {
        for eps in [EpsClass::Plus, EpsClass::Minus] {
            if eps == EpsClass::Minus && n % 2 != 0 {
                continue;
            }
            let class = Partition::enumerate(n, eps);
            for lam in Partition::enumerate(n, EpsClass::A) {
                // Independent oracle: dominance-maximal class member below lam.
                let below: Vec<&Partition> = class
                    .iter()
                    .filter(|mu| mu.dominated_by(&lam).unwrap())
                    .collect();
                let max = below
                    .iter()
                    .find(|mu| below.iter().all(|nu| nu.dominated_by(mu).unwrap()))
                    .expect("the collapse exists and is unique");
                assert_eq!(&lam.collapse(eps).unwrap(), *max, "collapse of {lam} ({eps})");
            }
        }
    }
    assert!(start.elapsed().as_secs() <= 60, "collapse oracle exceeded 1 minute");
    println!("criterion 4 (collapse equals brute-force dominance maximum, n <= 16): PASS");
}

#[test]
fn criterion_05_codimension_preservation() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pick = |rng: &mut ChaCha8Rng, list: &[Partition]| -> Partition {
        list[rng.gen_range(0..list.len())].clone()
    };
    for eps in [EpsClass::Plus, EpsClass::Minus] {
        let mut done = 0;
        while done < 500 {
            let n = if eps == EpsClass::Plus {
                rng.gen_range(4..=16u32)
            } else {
                2 * rng.gen_range(2..=8u32)
            };
            // Random Levi shape: gl blocks summing to p, base rank r >= 1.
            let p = rng.gen_range(1..=(n - 1) / 2);
            let r = n - 2 * p;
            if r == 0 || (eps == EpsClass::Minus && r % 2 != 0) {
                continue;
            }
            let mut blocks = Vec::new();
            let mut left = p;
            while left > 0 {
                let b = rng.gen_range(1..=left);
                blocks.push(b);
                left -= b;
            }
            let gl_orbits: Vec<Partition> = blocks
                .iter()
                .map(|&b| pick(&mut rng, &Partition::enumerate(b, EpsClass::A)))
                .collect();
            let base = pick(&mut rng, &Partition::enumerate(r, eps));
            let shape = LeviShapeBcd { blocks, r };
            assert!(
                codim_preserved(n, eps, &shape, &gl_orbits, &base).unwrap(),
                "codimension not preserved: n={n} {eps} shape={shape:?} \
                 gl={gl_orbits:?} base={base}"
            );
            done += 1;
        }
    }
    // Type A alongside: induction preserves codimension for random data too.
    for _ in 0..200 {
        let n = rng.gen_range(2..=16u32);
        let mut composition = Vec::new();
        let mut left = n;
        while left > 0 {
            let b = rng.gen_range(1..=left);
            composition.push(b);
            left -= b;
        }
        let orbits: Vec<Partition> = composition
            .iter()
            .map(|&b| pick(&mut rng, &Partition::enumerate(b, EpsClass::A)))
            .collect();
        assert!(codim_preserved_a(&LeviShapeA { composition }, &orbits).unwrap());
    }
    println!("criterion 5 (codimension preserved on 500 random induction data per family): PASS");
}

#[test]
fn criterion_06_type_a_set_is_non_rectangular() {
    for n in 3..=14u32 {
        let expected: BTreeSet<Partition> = Partition::enumerate(n, EpsClass::A)
            .into_iter()
            .filter(|p| !p.is_rectangular())
            .collect();
        let got = brute_force_little_set_a(n).unwrap();
        assert_eq!(got, expected, "type A induced-from-little set at n = {n}");
        // Rectangular partitions never appear.
        assert!(got.iter().all(|p| !p.is_rectangular()));
    }
    println!("criterion 6 (type A induced-from-little = non-rectangular, 3 <= n <= 14): PASS");
}

#[test]
fn criterion_07_two_jump_implies_membership() {
    let sets = induced_from_little_sets(18, EpsClass::Plus).unwrap();
    for n in 1..=18u32 {
        for lam in Partition::enumerate(n, EpsClass::Plus) {
            if thm_bcd_predicate(&lam) {
                assert!(
                    sets[n as usize].contains(&lam),
                    "{lam} has two jumps but is missing from the n = {n} set"
                );
            }
        }
    }
    // A member that fails the two-jump predicate.
    let lam = Partition::parse("4,4,3").unwrap();
    assert!(!thm_bcd_predicate(&lam));
    assert!(induced_from_little_set(11, EpsClass::Plus)
        .unwrap()
        .contains(&lam));
    println!("criterion 7 (two-jump predicate implies membership, so family n <= 18): PASS");
}

#[test]
fn criterion_08_jet_goldens() {
    let (f, vars) = parse_polynomial("x^2 + y*z").unwrap();
    let render = |ps: &[JetPolynomial]| -> Vec<String> {
        ps.iter().map(|p| p.render(&vars)).collect()
    };
    assert_eq!(
        render(&jet_expand(&f, 1).unwrap()),
        vec!["x_0^2 + y_0*z_0", "2*x_0*x_1 + y_0*z_1 + y_1*z_0"]
    );
    assert_eq!(
        render(&jet_expand(&f, 2).unwrap()),
        vec![
            "x_0^2 + y_0*z_0",
            "2*x_0*x_1 + y_0*z_1 + y_1*z_0",
            "2*x_0*x_2 + x_1^2 + y_0*z_2 + y_1*z_1 + y_2*z_0",
        ]
    );
    // Order-1 ideal of X^2 for the generic 4x4 matrix: exactly the entries
    // of X_0^2 and X_0 X_1 + X_1 X_0.
    let (_, gens) = matrix_power_jet_ideal(4, 2, 1, false).unwrap();
    assert_eq!(gens.len(), 32);
    let n = 4u32;
    let xv = |i: u32, j: u32, l: u32| JetPolynomial::variable(i * n + j, l);
    let mut expected = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut sq = JetPolynomial::zero();
            let mut mixed = JetPolynomial::zero();
            for k in 0..n {
                sq = sq.add(&xv(i, k, 0).mul(&xv(k, j, 0)));
                mixed = mixed
                    .add(&xv(i, k, 0).mul(&xv(k, j, 1)))
                    .add(&xv(i, k, 1).mul(&xv(k, j, 0)));
            }
            expected.push(sq);
            expected.push(mixed);
        }
    }
    assert_eq!(gens, expected);
    println!("criterion 8 (jet expansion and matrix jet ideal goldens): PASS");
}

#[test]
fn criterion_09_restriction_registry() {
    let registry = restriction_registry();
    assert_eq!(registry.len(), 9, "nine restriction rows");
    for (i, row) in registry.iter().enumerate() {
        let check = restriction_check(row).unwrap();
        assert!(check.all(), "row {i} fails a restriction condition");
    }
    // The E7 -> E6 row with ambient orbit A2 meets the dimension bound with
    // exact equality: 2 * 66 = 133 - 1.
    let a2_row = registry
        .iter()
        .find(|r| r.ambient == Algebra::E7 && r.ambient_orbit.exceptional_label() == Some("A2"))
        .expect("E7 A2 row present");
    let twice = 2 * a2_row.ambient_orbit.dim().unwrap();
    assert_eq!(twice, 132);
    assert_eq!(a2_row.ambient.dim() - 1, 132);
    println!("criterion 9 (all 9 restriction rows pass (i)-(iii); A2 row equality 132 = 132): PASS");
}

#[test]
fn criterion_10_exceptional_tables_consistent() {
    let violations = excdata::validate_tables();
    assert!(
        violations.is_empty(),
        "table violations: {:?}",
        violations.iter().map(|v| v.to_string()).collect::<Vec<_>>()
    );
    // Minimal orbits are little with the known dimensions.
    for (alg, dim) in [
        (Algebra::G2, 6),
        (Algebra::F4, 16),
        (Algebra::E6, 22),
        (Algebra::E7, 34),
        (Algebra::E8, 58),
    ] {
        let min = minimal_orbit(alg).unwrap();
        assert_eq!(min.dim().unwrap(), dim, "minimal orbit dimension of {alg}");
        assert!(min.is_little().unwrap(), "minimal orbit of {alg} is little");
    }
    // Every positive second-condition witness is structurally meaningful:
    // either the orbit itself is little, or a nonempty Levi datum.
    let mut witnesses = 0;
    for rec in excdata::records() {
        if let excdata::Rc2::Yes(w) = &rec.rc2 {
            witnesses += 1;
            match w {
                excdata::Witness::LittleItself => assert!(rec.little),
                excdata::Witness::Levi { factors, nodes } => {
                    assert!(!factors.is_empty() && !nodes.is_empty());
                    // The rendering round-trips through the parser.
                    let reparsed = excdata::parse_witness(&w.to_string()).unwrap();
                    assert_eq!(&reparsed, w);
                }
            }
        }
    }
    assert!(witnesses > 0);
    println!("criterion 10 (exceptional tables validate; minimal orbits little; witnesses replay): PASS");
}

#[test]
fn criterion_11_subregular_codimension() {
    for rank in 2..=12u32 {
        let mut algebras = vec![
            Algebra::Sl(rank + 1),
            Algebra::So(2 * rank + 1),
            Algebra::Sp(2 * rank),
        ];
        if rank >= 3 {
            algebras.push(Algebra::So(2 * rank));
        }
        for alg in algebras {
            let sub = subregular_orbit(alg).unwrap();
            assert_eq!(
                sub.dim().unwrap(),
                alg.dim() - i64::from(rank) - 2,
                "subregular dimension in {alg}"
            );
        }
    }
    println!("criterion 11 (subregular orbit dimension = dim - rank - 2, ranks 2..12): PASS");
}
