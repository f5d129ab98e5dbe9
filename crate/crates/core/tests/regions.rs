mod common;

use common::*;
use degseq::graphicality::{
    is_graphic, is_primitive, jms_star_sigma_margin, leg, region_fully_graphic,
    region_satisfies_stability_bound, satisfies_stability_bound, very_simple_region_fully_graphic,
    RegionPredicate,
};
use degseq::{DegreeSequence, Region, SimpleRegion, VerySimpleRegion};
use num_rational::Ratio;

fn very_simple_regions(max_n: usize) -> impl Iterator<Item = (usize, u32, u32)> {
    (1..=max_n).flat_map(|n| (0..n as u32).flat_map(move |c1| (0..=c1).map(move |c2| (n, c1, c2))))
}

#[test]
fn leg_is_the_lex_max_and_only_primitive_member() {
    for (n, sigma, c1, c2) in simple_regions(ORACLE_MAX_N) {
        let r = SimpleRegion::new(n, sigma, c1, c2).unwrap();
        let l = leg(&r);
        let members = region_members(n, sigma, c1, c2);
        assert!(l.is_member_of(&Region::Simple(r)), "{r}");
        assert_eq!(members.iter().max(), Some(&l.degrees().to_vec()), "{r}");
        let primitive: Vec<_> = members
            .iter()
            .filter(|v| is_primitive(&DegreeSequence::new(v.to_vec()).unwrap(), c1, c2))
            .collect();
        assert_eq!(primitive, vec![&l.degrees().to_vec()], "{r}");
        let listed: Vec<Vec<u32>> = r.members().into_iter().map(|d| d.into_vec()).collect();
        assert_eq!(listed, members, "{r}");
    }
}

#[test]
fn region_decision_matches_members() {
    for (n, sigma, c1, c2) in simple_regions(ORACLE_MAX_N) {
        let r = SimpleRegion::new(n, sigma, c1, c2).unwrap();
        let all = region_members(n, sigma, c1, c2).iter().all(|v| brute_count_u32(v) > 0);
        assert_eq!(region_fully_graphic(&r), all, "{r}");
    }
}

#[test]
fn one_step_towards_the_middle_keeps_graphicality() {
    for (n, sigma, c1, c2) in simple_regions(ORACLE_MAX_N) {
        for v in region_members(n, sigma, c1, c2) {
            let d = DegreeSequence::new(v.clone()).unwrap();
            let d_graphic = is_graphic(&d).graphic;
            for l in 0..n {
                for m in l + 1..n {
                    if v[l] >= c1 || v[m] <= c2 {
                        continue;
                    }
                    let mut w = v.clone();
                    w[l] += 1;
                    w[m] -= 1;
                    let moved = DegreeSequence::new(w).unwrap();
                    if is_graphic(&moved).graphic {
                        assert!(d_graphic, "{moved} graphic but {d} is not");
                    }
                }
            }
        }
    }
}

#[test]
fn failing_index_lies_between_the_bounds() {
    for (n, sigma, c1, c2) in simple_regions(ORACLE_MAX_N) {
        for v in region_members(n, sigma, c1, c2) {
            let report = is_graphic(&DegreeSequence::new(v.clone()).unwrap());
            if let Some(k) = report.failing_k {
                assert!(k as u32 > c2 && k as u32 <= c1, "{v:?} fails at {k} in c2={c2}, c1={c1}");
            }
        }
    }
}

#[test]
fn jms_regions_are_fully_graphic() {
    for (n, c1, c2) in very_simple_regions(12) {
        if RegionPredicate::Jms.evaluate(n, None, c1, c2).unwrap() {
            let r = VerySimpleRegion::new(n, c1, c2).unwrap();
            assert!(very_simple_region_fully_graphic(&r), "{r}");
        }
    }
}

#[test]
fn jms_star_regions_are_fully_graphic() {
    for (n, sigma, c1, c2) in simple_regions(12) {
        let r = SimpleRegion::new(n, sigma, c1, c2).unwrap();
        if RegionPredicate::JmsStarSigma.evaluate(n, Some(sigma), c1, c2).unwrap() {
            assert!(region_fully_graphic(&r), "{r}");
        }
    }
    for (n, c1, c2) in very_simple_regions(12) {
        if RegionPredicate::JmsStarK.evaluate(n, None, c1, c2).unwrap() {
            let r = VerySimpleRegion::new(n, c1, c2).unwrap();
            assert!(very_simple_region_fully_graphic(&r), "{r}");
        }
    }
}

#[test]
fn d_m_margin_and_leg() {
    for m in 4..=10u32 {
        let n = 2 * m as usize;
        let r = SimpleRegion::new(n, 4 * m as u64, m, 1).unwrap();
        let mut expected = vec![m, m, 3];
        expected.resize(n, 1);
        assert_eq!(leg(&r).degrees(), &expected[..]);
        let m = m as i128;
        assert_eq!(jms_star_sigma_margin(n, r.sigma, r.c1, 1), 2 * m * m - 6 * m);
        assert!(satisfies_stability_bound(&leg(&r)));
    }
}

#[test]
fn square_root_regions_are_fully_graphic() {
    let ninth = RegionPredicate::eps(Ratio::new(8, 9)).unwrap();
    let half = RegionPredicate::eps(Ratio::new(1, 2)).unwrap();
    for (n, sigma, c1, c2) in simple_regions(12) {
        let r = SimpleRegion::new(n, sigma, c1, c2).unwrap();
        if ninth.evaluate(n, Some(sigma), c1, c2).unwrap() {
            assert!(region_fully_graphic(&r), "{r}");
        }
        if RegionPredicate::Gs.evaluate(n, Some(sigma), c1, c2).unwrap() {
            assert!(region_fully_graphic(&r), "{r}");
        }
        if n >= 3 && half.evaluate(n, Some(sigma), c1, c2).unwrap() {
            assert!(region_fully_graphic(&r), "{r}");
        }
    }
    assert!(ninth.exceptional_length_bound().unwrap() < 1.0);
    let b = half.exceptional_length_bound().unwrap();
    assert!(b > 1.0 && b < 3.0, "{b}");
}

#[test]
fn fully_graphic_regions_satisfy_the_plus_one_form() {
    for (n, c1, c2) in very_simple_regions(12) {
        let r = VerySimpleRegion::new(n, c1, c2).unwrap();
        if very_simple_region_fully_graphic(&r) {
            assert!(RegionPredicate::Fg.evaluate(n, None, c1, c2).unwrap(), "{r}");
        }
    }
}

#[test]
fn stability_bound_on_a_region_is_decided_by_its_leg() {
    for (n, sigma, c1, c2) in simple_regions(ORACLE_MAX_N) {
        let r = SimpleRegion::new(n, sigma, c1, c2).unwrap();
        let all = region_members(n, sigma, c1, c2)
            .into_iter()
            .all(|v| satisfies_stability_bound(&DegreeSequence::new(v).unwrap()));
        assert_eq!(region_satisfies_stability_bound(&r), all, "{r}");
    }
}
