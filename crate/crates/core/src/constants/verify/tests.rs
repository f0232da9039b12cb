use super::*;
use crate::algebraic::poly::Rational;
use num_bigint::BigInt;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn named_base(name: &str) -> Base {
    Base::from_named(&constants::lookup(name).unwrap()).unwrap()
}

/// Simple quadratic bases strictly between golden and q_aleph0.
fn sampled_bases() -> Vec<Base> {
    let golden = constants::golden();
    let aleph = constants::q_aleph0();
    ["5x^2-10x+3", "20x^2-20x-21", "30x^2-30x-31"]
        .iter()
        .map(|poly| {
            let p = crate::algebraic::parse_polynomial(poly).unwrap();
            let roots =
                crate::algebraic::isolate_real_roots(&p, (&rat(8, 5), &rat(2, 1))).unwrap();
            assert_eq!(roots.len(), 1, "{poly}");
            let r = roots.into_iter().next().unwrap();
            assert_eq!(r.compare(&golden), std::cmp::Ordering::Greater, "{poly}");
            assert_eq!(r.compare(&aleph), std::cmp::Ordering::Less, "{poly}");
            Base::new(r).unwrap()
        })
        .collect()
}

fn outcomes(reports: &[VerificationReport]) -> Vec<Outcome> {
    reports.iter().map(|r| r.outcome).collect()
}

#[test]
fn branching_points_hold_at_sampled_bases() {
    for b in sampled_bases() {
        let reports = verify_prop_branching_points(&b).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(
            reports.iter().all(|r| r.outcome == Outcome::Holds),
            "{:?}",
            outcomes(&reports)
        );
    }
}

#[test]
fn branching_points_boundary_at_q_aleph0() {
    let reports = verify_prop_branching_points(&named_base("q_aleph0")).unwrap();
    assert_eq!(reports[0].outcome, Outcome::Holds);
    assert_eq!(reports[1].outcome, Outcome::EqualityBoundary);
    assert_eq!(reports[2].outcome, Outcome::EqualityBoundary);
    assert_eq!(reports[3].outcome, Outcome::Holds);
}

#[test]
fn branching_points_break_above_q_aleph0() {
    let reports = verify_prop_branching_points(&named_base("r4")).unwrap();
    assert!(
        reports.iter().any(|r| r.outcome == Outcome::Fails),
        "{:?}",
        outcomes(&reports)
    );
}

#[test]
fn branching_points_reject_bases_outside_window() {
    assert!(verify_prop_branching_points(&named_base("golden")).is_err());
    assert!(verify_prop_branching_points(&named_base("q_f")).is_err());
}

#[test]
fn sequence_bounds_windows() {
    // inside all windows
    let reports = verify_lemma_sequence_bounds(&named_base("q_aleph0")).unwrap();
    assert!(reports.iter().all(|r| r.outcome == Outcome::Holds));
    // exactly at the window root of item (2)
    let reports = verify_lemma_sequence_bounds(&named_base("r1")).unwrap();
    assert_eq!(reports[1].outcome, Outcome::EqualityBoundary);
    // q_2 lies above both window roots
    let reports = verify_lemma_sequence_bounds(&named_base("q_2")).unwrap();
    assert_eq!(reports[1].outcome, Outcome::Fails);
    assert_eq!(reports[2].outcome, Outcome::Fails);
    // the window prediction agrees with the exact comparison everywhere
    for name in ["q_aleph0", "r1", "r2", "r4", "r5", "q_2"] {
        for r in verify_lemma_sequence_bounds(&named_base(name)).unwrap() {
            assert!(
                r.details.iter().all(|d| !d.contains("DISAGREES")),
                "{name} {}: {:?}",
                r.id,
                r.details
            );
        }
    }
}

#[test]
fn preimage_memberships_hold_inside_the_window() {
    for b in sampled_bases() {
        let reports = verify_prop_first_half(&b, 10).unwrap();
        assert_eq!(reports.len(), 12);
        assert!(
            reports.iter().all(|r| r.outcome == Outcome::Holds),
            "{:?}",
            outcomes(&reports)
        );
    }
}

#[test]
fn preimage_memberships_at_the_window_edges() {
    let groups = |r: &[VerificationReport]| {
        (0..4)
            .map(|g| r[3 * g..3 * g + 3].to_vec())
            .collect::<Vec<_>>()
    };

    // at q_aleph0 the last family sits exactly on its validity boundary
    let reports = verify_prop_first_half(&named_base("q_aleph0"), 10).unwrap();
    let gs = groups(&reports);
    for g in &gs[0..3] {
        assert!(g.iter().all(|r| r.outcome == Outcome::Holds));
    }
    assert!(gs[3]
        .iter()
        .any(|r| r.outcome == Outcome::EqualityBoundary));
    assert!(gs[3].iter().all(|r| r.outcome != Outcome::Fails));

    // at r4, the families with window r3 and r5 still hold; the r4 family
    // and the q_aleph0 family no longer do
    let reports = verify_prop_first_half(&named_base("r4"), 10).unwrap();
    let gs = groups(&reports);
    assert!(gs[0].iter().all(|r| r.outcome == Outcome::Holds));
    assert!(gs[1].iter().any(|r| r.outcome != Outcome::Holds));
    assert!(gs[2].iter().all(|r| r.outcome == Outcome::Holds));
    assert!(gs[3].iter().any(|r| r.outcome == Outcome::Fails));

    // q_2 lies above every window
    let reports = verify_prop_first_half(&named_base("q_2"), 10).unwrap();
    let gs = groups(&reports);
    for g in &gs {
        assert!(g.iter().any(|r| r.outcome != Outcome::Holds));
    }
}

#[test]
fn second_half_reproduction() {
    let reports = verify_prop_second_half();
    assert_eq!(reports.len(), 4);
    for r in &reports {
        assert_eq!(r.outcome, Outcome::Holds, "{}: {:?}", r.id, r.details);
    }
}

#[test]
fn alpha_family_properties() {
    let reports = verify_alpha_properties(6);
    for r in &reports {
        assert_eq!(r.outcome, Outcome::Holds, "{}: {:?}", r.id, r.details);
    }
    // (a), (b), (c) for k=3..6, Eq6 for k=3..6
    assert_eq!(reports.len(), 2 + 4 + 4);
}

#[test]
fn contradiction_step_avoids_unique_points() {
    // For q sampled inside (golden, q_aleph0), T_0^-j(y) + 1 never lands in
    // U_q for the four switch words and 1 <= j <= 10. Checked against the
    // family up to k = 12, with the tail certified by exact monotonicity:
    // every shifted value stays strictly below (1^12 (10)^inf)_q and
    // strictly above 1.
    let b = &sampled_bases()[0];
    let inv_q = b.q().inv().unwrap();
    let one = b.one();
    let family = crate::expansions::u_family(b, 12).unwrap();
    let big_member = crate::expansions::eval_word(
        b,
        &EventuallyPeriodicWord::new(
            Word(vec![Digit::One; 12]),
            Word::parse("10").unwrap(),
        )
        .unwrap(),
    );
    for word in ["01|10", "011|10", "10|01", "100|01"] {
        let y = eval_word(b, &epw(word));
        assert_eq!(y.sign(), crate::algebraic::poly::Sign::Positive);
        for j in 1..=10usize {
            let s = y.mul(&inv_q.pow(j as u32)).add(&one);
            for (w, v) in &family {
                assert_ne!(
                    s.compare(v),
                    std::cmp::Ordering::Equal,
                    "T_0^-{j}(({word})_q)+1 hit family member {w}"
                );
            }
            assert_eq!(s.compare(&big_member), std::cmp::Ordering::Less);
            assert_eq!(s.compare(&one), std::cmp::Ordering::Greater);
        }
    }
}

#[test]
fn report_line_format() {
    let reports = verify_lemma_sequence_bounds(&named_base("q_aleph0")).unwrap();
    let line = reports[0].line();
    assert!(line.starts_with("Lemma3.3-(1)  1.64541  "));
    assert!(line.ends_with("Holds"));
}
