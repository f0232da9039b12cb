use super::*;
use crate::algebraic::poly::Rational;
use crate::algebraic::real::RealAlgebraic;
use crate::constants;
use num_bigint::BigInt;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn base(name: &str) -> Base {
    Base::from_named(&constants::lookup(name).unwrap()).unwrap()
}

fn rational_base(n: i64, d: i64) -> Base {
    Base::new(RealAlgebraic::from_rational(rat(n, d))).unwrap()
}

fn epw(s: &str) -> EventuallyPeriodicWord {
    EventuallyPeriodicWord::parse(s).unwrap()
}

#[test]
fn base_rejects_values_outside_one_two() {
    assert!(Base::new(RealAlgebraic::from_rational(rat(1, 1))).is_err());
    assert!(Base::new(RealAlgebraic::from_rational(rat(2, 1))).is_err());
    assert!(Base::new(RealAlgebraic::from_rational(rat(5, 2))).is_err());
    assert!(Base::new(RealAlgebraic::from_rational(rat(3, 2))).is_ok());
}

#[test]
fn t_map_basics() {
    let g = base("golden");
    // T_1(1/q) = 0
    let x = g.switch_left().clone();
    assert!(t_map(&g, Digit::One, &x).is_zero());
    // golden: T_1(q) = q^2 - 1 = q, the fixed right endpoint of I_q
    let q = g.q().clone();
    assert_eq!(t_map(&g, Digit::One, &q), q);
    assert_eq!(g.i_right().compare(&q), std::cmp::Ordering::Equal);
}

#[test]
fn period_four_identities() {
    // T_1(T_0(left)) = right and T_0(T_1(right)) = left, any base
    for b in [base("q_aleph0"), base("golden"), rational_base(3, 2)] {
        let (jl, jr) = j_interval(&b);
        let up = t_map(&b, Digit::One, &t_map(&b, Digit::Zero, &jl));
        assert_eq!(up.compare(&jr), std::cmp::Ordering::Equal);
        let down = t_map(&b, Digit::Zero, &t_map(&b, Digit::One, &jr));
        assert_eq!(down.compare(&jl), std::cmp::Ordering::Equal);
    }
}

#[test]
fn region_examples() {
    let g = base("golden");
    // golden: S = [q-1, 1]; x = 1 is the right endpoint
    assert_eq!(region(&g, &g.one()), Region::Switch);
    assert_eq!(region(&g, &g.zero()), Region::BelowSwitch);
    assert_eq!(region(&g, &g.from_rational(rat(-1, 10))), Region::OutOfRange);
    assert_eq!(region(&g, &g.from_rational(rat(5, 1))), Region::OutOfRange);
    let a = base("q_aleph0");
    let (_, jr) = j_interval(&a);
    assert_eq!(region(&a, &jr), Region::Switch);
}

#[test]
fn eval_word_examples() {
    let g = base("golden");
    // (10)^inf at golden evaluates to 1: q/(q^2-1) with q^2-1 = q
    let v = eval_word(&g, &epw("|10"));
    assert_eq!(v.compare(&g.one()), std::cmp::Ordering::Equal);
    // 1(0)^inf = 1/q at any base
    for b in [base("golden"), base("q_f"), rational_base(3, 2)] {
        let v = eval_word(&b, &epw("1|0"));
        assert_eq!(v.compare(b.switch_left()), std::cmp::Ordering::Equal);
    }
    // (0110)^inf = (q+q^2)/(q^4-1) at any base
    for b in [base("q_aleph0"), rational_base(3, 2)] {
        let (jl, _) = j_interval(&b);
        let v = eval_word(&b, &epw("|0110"));
        assert_eq!(v.compare(&jl), std::cmp::Ordering::Equal);
    }
}

#[test]
fn eval_word_lands_in_i_q() {
    for b in [base("golden"), base("q_2"), rational_base(7, 4)] {
        for w in ["|0", "|1", "0111|10", "|0110", "101|001", "1|0"] {
            let v = eval_word(&b, &epw(w));
            assert!(in_range(&b, &v), "eval({w}) outside I_q");
        }
    }
}

#[test]
fn greedy_and_lazy_hand_orbits() {
    let g = base("golden");
    let one = g.one();
    assert_eq!(
        greedy_lazy(&g, &one, 5, Mode::Greedy).unwrap().to_string(),
        "11000"
    );
    assert_eq!(
        greedy_lazy(&g, &one, 5, Mode::Lazy).unwrap().to_string(),
        "01111"
    );
    let b = rational_base(3, 2);
    assert_eq!(
        greedy_lazy(&b, &b.zero(), 4, Mode::Greedy).unwrap().to_string(),
        "0000"
    );
    assert!(matches!(
        greedy_lazy(&g, &g.from_rational(rat(9, 1)), 3, Mode::Greedy),
        Err(Error::OutOfRange)
    ));
}

#[test]
fn greedy_dominates_lazy_and_ties_iff_unique() {
    let b = base("q_f");
    // unique expansion point: greedy = lazy
    let u = eval_word(&b, &epw("1|10"));
    let gw = greedy_lazy(&b, &u, 12, Mode::Greedy).unwrap();
    let lw = greedy_lazy(&b, &u, 12, Mode::Lazy).unwrap();
    assert_eq!(gw, lw);
    assert_eq!(is_unique(&b, &u, 64).unwrap(), Uniqueness::Unique);
    // a switch point: greedy strictly above lazy
    let (jl, _) = j_interval(&b);
    let gw = greedy_lazy(&b, &jl, 12, Mode::Greedy).unwrap();
    let lw = greedy_lazy(&b, &jl, 12, Mode::Lazy).unwrap();
    assert!(gw > lw);
}

#[test]
fn forced_orbit_outcomes() {
    let a = base("q_aleph0");
    let (_, jr) = j_interval(&a);
    match follow_forced(&a, &jr, 100).unwrap() {
        ForcedOutcome::HitSwitch { prefix, point } => {
            assert!(prefix.is_empty());
            assert_eq!(point.compare(&jr), std::cmp::Ordering::Equal);
        }
        other => panic!("expected HitSwitch, got {other:?}"),
    }
    match follow_forced(&a, &a.zero(), 100).unwrap() {
        ForcedOutcome::Cycle {
            prefix,
            cycle_length,
        } => {
            assert!(prefix.is_empty());
            assert_eq!(cycle_length, 1);
        }
        other => panic!("expected Cycle, got {other:?}"),
    }
    // q_f: 00(10)^inf is a unique-expansion point; orbit settles on the
    // 2-cycle (01)^inf <-> (10)^inf
    let f = base("q_f");
    let x = eval_word(&f, &epw("00|10"));
    match follow_forced(&f, &x, 100).unwrap() {
        ForcedOutcome::Cycle {
            prefix,
            cycle_length,
        } => {
            assert_eq!(prefix.len(), 1);
            assert_eq!(cycle_length, 2);
        }
        other => panic!("expected Cycle, got {other:?}"),
    }
    // tiny budget gives Truncated
    assert!(matches!(
        follow_forced(&f, &x, 1).unwrap(),
        ForcedOutcome::Truncated { .. }
    ));
}

#[test]
fn uniqueness_examples() {
    let a = base("q_aleph0");
    assert_eq!(is_unique(&a, &a.zero(), 100).unwrap(), Uniqueness::Unique);
    let sl = a.switch_left().clone();
    assert_eq!(
        is_unique(&a, &sl, 100).unwrap(),
        Uniqueness::NotUnique(Word::empty())
    );
    let f = base("q_f");
    let x = eval_word(&f, &epw("1|10"));
    assert_eq!(is_unique(&f, &x, 100).unwrap(), Uniqueness::Unique);
}

#[test]
fn u_family_counts_and_values() {
    let f = base("q_f");
    let fam = u_family(&f, 0).unwrap();
    assert_eq!(fam.len(), 3);
    let ten = eval_word(&f, &epw("|10"));
    assert!(fam
        .iter()
        .any(|(_, v)| v.compare(&ten) == std::cmp::Ordering::Equal));
    // the two k=0 members coincide, so: 2 endpoints + (2*k_max + 1) words
    let a = base("q_aleph0");
    let fam = u_family(&a, 3).unwrap();
    assert_eq!(fam.len(), 9);
    for w in fam.windows(2) {
        assert_eq!(w[0].1.compare(&w[1].1), std::cmp::Ordering::Less);
    }
}

#[test]
fn u_family_members_have_unique_expansions() {
    // a base just above golden: root of 5x^2 - 10x + 3 = 0, ~1.63246
    let p = crate::algebraic::parse_polynomial("5x^2-10x+3").unwrap();
    let roots =
        crate::algebraic::isolate_real_roots(&p, (&rat(1, 1), &rat(2, 1))).unwrap();
    let b = Base::new(roots.into_iter().next().unwrap()).unwrap();
    assert!(b.in_unique_window());
    for (w, v) in u_family(&b, 4).unwrap() {
        assert_eq!(
            is_unique(&b, &v, 500).unwrap(),
            Uniqueness::Unique,
            "family member {w} should be unique"
        );
    }
}

#[test]
fn u_family_rejects_bases_outside_window() {
    assert!(matches!(
        u_family(&base("golden"), 2),
        Err(Error::BaseOutOfRange(_))
    ));
    assert!(matches!(
        u_family(&rational_base(3, 2), 2),
        Err(Error::BaseOutOfRange(_))
    ));
}

#[test]
fn j_interval_boundary_cases() {
    // at q_f, J_q = S_q exactly
    let f = base("q_f");
    let (jl, jr) = j_interval(&f);
    assert_eq!(jl.compare(f.switch_left()), std::cmp::Ordering::Equal);
    assert_eq!(jr.compare(f.switch_right()), std::cmp::Ordering::Equal);
    // at golden (outside the Lemma window), J sits strictly inside S
    let g = base("golden");
    let (jl, jr) = j_interval(&g);
    assert_eq!(jl.compare(g.switch_left()), std::cmp::Ordering::Greater);
    assert_eq!(jr.compare(g.switch_right()), std::cmp::Ordering::Less);
    // q_aleph0: left endpoint is ((0110)^inf)_q
    let a = base("q_aleph0");
    let (jl, _) = j_interval(&a);
    let v = eval_word(&a, &epw("|0110"));
    assert_eq!(jl.compare(&v), std::cmp::Ordering::Equal);
}

#[test]
fn scaling_identities() {
    // T_1(T_0(y)) - 1/(q^2-1) = q^2 (y - 1/(q^2-1)) and symmetrically,
    // exact at every base and any y
    for b in [base("golden"), base("q_aleph0"), rational_base(3, 2)] {
        let q2 = b.q().mul(b.q());
        let fp0 = q2.sub(&b.one()).inv().unwrap();
        let fp1 = b.q().mul(&fp0);
        for t in [rat(1, 7), rat(1, 2), rat(5, 8), rat(99, 100)] {
            let y = fp0
                .mul_rational(&(rat(1, 1) - t.clone()))
                .add(&fp1.mul_rational(&t));
            let up = t_map(&b, Digit::One, &t_map(&b, Digit::Zero, &y));
            let lhs = up.sub(&fp0);
            let rhs = y.sub(&fp0).mul(&q2);
            assert_eq!(lhs, rhs);
            let down = t_map(&b, Digit::Zero, &t_map(&b, Digit::One, &y));
            let lhs = fp1.sub(&down);
            let rhs = fp1.sub(&y).mul(&q2);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn word_orbit_duality() {
    // walking the preperiod digits of w lands exactly on the evaluated tail
    let a = base("q_aleph0");
    let w = epw("0111|10");
    let mut x = eval_word(&a, &w);
    for &d in w.preperiod().digits() {
        assert!(in_range(&a, &x));
        x = t_map(&a, d, &x);
    }
    let tail = eval_word(&a, &epw("|10"));
    assert_eq!(x.compare(&tail), std::cmp::Ordering::Equal);
}

#[test]
fn map_into_j_examples() {
    let a = base("q_aleph0");
    let (jl, jr) = j_interval(&a);
    // already inside: empty word
    let (w, p) = map_into_j(&a, &jl).unwrap();
    assert!(w.is_empty());
    assert_eq!(p.compare(&jl), std::cmp::Ordering::Equal);
    // from the left endpoint of S: blocks of 01
    let sl = a.switch_left().clone();
    let (w, p) = map_into_j(&a, &sl).unwrap();
    assert!(!w.is_empty());
    assert_eq!(w.len() % 2, 0);
    assert_eq!(w.to_string(), "0101");
    assert!(p.compare(&jl) != std::cmp::Ordering::Less);
    assert!(p.compare(&jr) != std::cmp::Ordering::Greater);
    // at q_f the whole switch region is J
    let f = base("q_f");
    let mid = f
        .switch_left()
        .add(f.switch_right())
        .mul_rational(&rat(1, 2));
    let (w, _) = map_into_j(&f, &mid).unwrap();
    assert!(w.is_empty());
    // not in switch
    assert!(matches!(map_into_j(&a, &a.zero()), Err(Error::NotInSwitch)));
    // base outside the window
    assert!(matches!(
        map_into_j(&base("golden"), &base("golden").one()),
        Err(Error::BaseOutOfRange(_))
    ));
}
