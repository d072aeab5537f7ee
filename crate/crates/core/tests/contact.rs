mod common;

use common::{random_positive_word, random_word_upto, rng, w};
use rand::Rng;
use tmarkov::contact::{
    closure_indices, compare_closure, disjoint_union, front_mu, front_tb, l_pq, parse_front,
    rho_index, transversalize, write_front, zeta, ContactError, FrontDiagram, LegendrianSpec,
    Sign,
};
use tmarkov::moves::{apply_move, Move};

/// All valid specs with |μ|, |tb| ≤ 10 and up to three components.
fn all_specs() -> Vec<LegendrianSpec> {
    let mut out = Vec::new();
    for components in 1..=3 {
        for mu in -10..=10 {
            for tb in -10..=10 {
                if let Ok(s) = LegendrianSpec::new(mu, tb, components) {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn parity_ok(s: &LegendrianSpec) -> bool {
    let m = s.components() as i64;
    (s.tb() + s.mu() - m).rem_euclid(2) == 0 && (s.tb() - s.mu() - m).rem_euclid(2) == 0
}

#[test]
fn l_pq_table() {
    for p in 0..=3u32 {
        for q in 0..=3u32 {
            let l = l_pq(p, q);
            assert_eq!(l.mu(), i64::from(p) - i64::from(q));
            assert_eq!(l.tb(), -1 - i64::from(p) - i64::from(q));
            assert_eq!(l.components(), 1);
        }
    }
    assert_eq!((l_pq(0, 0).mu(), l_pq(0, 0).tb()), (0, -1));
    assert_eq!((l_pq(2, 1).mu(), l_pq(2, 1).tb()), (1, -4));
    assert_eq!(l_pq(2, 1).tag(), Some("L_{2,1}"));
}

#[test]
fn l_pq_is_iterated_zeta_and_inverts() {
    for p in 0..=10u32 {
        for q in 0..=10u32 {
            let mut s = l_pq(0, 0);
            for _ in 0..q {
                s = zeta(&s, Sign::Minus);
            }
            for _ in 0..p {
                s = zeta(&s, Sign::Plus);
            }
            let l = l_pq(p, q);
            assert_eq!((s.mu(), s.tb()), (l.mu(), l.tb()));
            assert!(parity_ok(&l));
            // Bennequin: tb + |μ| ≤ −χ(disk)
            assert!(l.tb() + l.mu().abs() <= -1);
            assert_eq!((l.mu() - l.tb() - 1) / 2, i64::from(p));
            assert_eq!((-l.mu() - l.tb() - 1) / 2, i64::from(q));
        }
    }
}

#[test]
fn parity_rule() {
    for components in 1..=4usize {
        for mu in -10..=10i64 {
            for tb in -10..=10i64 {
                let expect = (tb + mu - components as i64).rem_euclid(2) == 0;
                let got = LegendrianSpec::new(mu, tb, components);
                assert_eq!(got.is_ok(), expect, "mu={mu} tb={tb} m={components}");
                if !expect {
                    assert!(matches!(got, Err(ContactError::Parity { .. })));
                }
            }
        }
    }
    assert!(matches!(LegendrianSpec::new(0, -1, 0), Err(ContactError::NoComponents)));
}

#[test]
fn index_identities_hold_exhaustively() {
    for s in all_specs() {
        // zeta shifts (property 4) and parity
        let plus = zeta(&s, Sign::Plus);
        let minus = zeta(&s, Sign::Minus);
        assert_eq!((plus.mu(), plus.tb()), (s.mu() + 1, s.tb() - 1));
        assert_eq!((minus.mu(), minus.tb()), (s.mu() - 1, s.tb() - 1));
        assert!(parity_ok(&plus) && parity_ok(&minus));

        // ζ₊ and ζ₋ commute (property 2)
        let pm = zeta(&plus, Sign::Minus);
        let mp = zeta(&minus, Sign::Plus);
        assert_eq!((pm.mu(), pm.tb()), (mp.mu(), mp.tb()));
        assert_eq!((pm.mu(), pm.tb()), (s.mu(), s.tb() - 2));

        // push-offs after a zig-zag (property 5)
        let up = transversalize(&s, Sign::Plus);
        let down = transversalize(&s, Sign::Minus);
        assert_eq!(transversalize(&plus, Sign::Plus), up);
        assert_eq!(transversalize(&plus, Sign::Minus), rho_index(down));
        assert_eq!(transversalize(&minus, Sign::Minus), down);
        assert_eq!(transversalize(&minus, Sign::Plus), rho_index(up));

        assert_eq!(rho_index(rho_index(s.tb())), s.tb() - 4);
        assert_eq!((up - s.components() as i64).rem_euclid(2), 0);
    }
}

#[test]
fn negative_stabilization_realizes_rho() {
    let mut r = rng(41);
    for _ in 0..300 {
        let n = r.gen_range(2..=6);
        let b = random_word_upto(&mut r, n, 16);
        let k = r.gen_range(1..=n);
        let s = apply_move(&b, &Move::StabNeg(k)).unwrap();
        assert_eq!(s.self_linking(), rho_index(b.self_linking()));
    }
}

#[test]
fn transversalize_examples() {
    assert_eq!(transversalize(&l_pq(0, 0), Sign::Plus), -1);
    assert_eq!(transversalize(&l_pq(1, 0), Sign::Plus), -1);
    assert_eq!(transversalize(&l_pq(1, 0), Sign::Minus), -3);
    assert_eq!(rho_index(-1), -3);
}

#[test]
fn disjoint_union_examples() {
    let u = disjoint_union(&l_pq(0, 0), &l_pq(0, 0), 0);
    assert_eq!((u.mu(), u.tb(), u.components()), (0, -2, 2));
    let u = disjoint_union(&l_pq(0, 0), &l_pq(0, 0), 1);
    assert_eq!(u.tb(), 0);
    let specs = all_specs();
    for a in specs.iter().step_by(7) {
        for b in specs.iter().step_by(11) {
            for lk in -2..=2 {
                assert!(parity_ok(&disjoint_union(a, b, lk)));
            }
        }
    }
}

#[test]
fn closure_formula_on_random_positive_words() {
    let mut r = rng(42);
    for _ in 0..20 {
        let n = r.gen_range(1..=5);
        let len = r.gen_range(0..=12);
        let b = random_positive_word(&mut r, n, len);
        let (p, q) = (r.gen_range(0..=3u32), r.gen_range(0..=3u32));
        let spec = closure_indices(&l_pq(p, q), &b).unwrap();
        let n = n as i64;
        assert_eq!(spec.mu(), n * (i64::from(p) - i64::from(q)));
        assert_eq!(spec.tb(), b.degree() - n * n * i64::from(p + q + 1));
        assert_eq!(spec.components(), b.components());
    }
}

#[test]
fn closure_examples() {
    let single = closure_indices(&l_pq(0, 0), &w(1, &[])).unwrap();
    assert_eq!((single.mu(), single.tb()), (0, -1));
    assert_eq!(single.tb(), w(1, &[]).self_linking());

    // Trivial positive braid: every pair of strands links like tb_a.
    for n in 1..=5usize {
        let a = l_pq(1, 2);
        let spec = closure_indices(&a, &w(n, &[])).unwrap();
        let n = n as i64;
        assert_eq!(spec.tb(), n * a.tb() + n * (n - 1) * a.tb());
    }

    assert!(matches!(closure_indices(&l_pq(0, 0), &w(2, &[-1])), Err(ContactError::NotPositive)));
    let link = LegendrianSpec::new(0, -2, 2).unwrap();
    assert!(matches!(closure_indices(&link, &w(2, &[1])), Err(ContactError::NotAKnot(2))));
}

#[test]
fn closure_braid_comparison_is_reported() {
    let mut r = rng(43);
    let mut matches = [0usize; 4];
    let mut component_mismatches = 0;
    for _ in 0..40 {
        let n = r.gen_range(1..=4);
        let len = r.gen_range(0..=8);
        let b = random_positive_word(&mut r, n, len);
        let (p, q) = (r.gen_range(0..=2u32), r.gen_range(0..=2u32));
        let cmp = compare_closure(p, q, &b).unwrap();
        // An even power of Δ is a pure braid; an odd one reverses the strands.
        if (p + q + 1) % 2 == 0 || n == 1 {
            assert!(cmp.components_agree(), "{cmp}");
        } else if !cmp.components_agree() {
            component_mismatches += 1;
        }
        let slot = match cmp.matching_index() {
            Some("tb+mu") => 0,
            Some("tb-mu") => 1,
            Some(_) => 2,
            None => 3,
        };
        matches[slot] += 1;
    }
    println!(
        "closure comparison: tb+mu {} tb-mu {} tb {} none {}; component mismatches (odd Δ power) {}",
        matches[0], matches[1], matches[2], matches[3], component_mismatches
    );
}

#[test]
fn front_examples() {
    let u = FrontDiagram::unknot();
    assert_eq!(front_tb(&u), -1);
    assert_eq!(front_mu(&u).unwrap(), 0);
    assert_eq!(front_tb(&FrontDiagram::new(3, 0, 1, 1, 1).unwrap()), 2);

    let z = u.zigzag(Sign::Plus);
    assert_eq!((z.up_cusps, z.down_cusps), (1, 3));
    assert_eq!(front_mu(&z).unwrap(), 1);
    let expected = zeta(&u.to_spec().unwrap(), Sign::Plus);
    assert_eq!((front_mu(&z).unwrap(), front_tb(&z)), (expected.mu(), expected.tb()));

    let mut f = FrontDiagram::new(2, 0, 1, 1, 1).unwrap();
    let mut spec = f.to_spec().unwrap();
    for sign in [Sign::Plus, Sign::Minus, Sign::Minus, Sign::Plus, Sign::Plus] {
        f = f.zigzag(sign);
        spec = zeta(&spec, sign);
        assert_eq!((front_mu(&f).unwrap(), front_tb(&f)), (spec.mu(), spec.tb()));
    }
    let rev = f.reversed();
    assert_eq!(front_mu(&rev).unwrap(), -front_mu(&f).unwrap());
    assert_eq!(front_tb(&rev), front_tb(&f));

    assert!(matches!(FrontDiagram::new(0, 0, 1, 0, 1), Err(ContactError::OddCusps(1))));
    assert!(matches!(
        front_mu(&FrontDiagram::new(0, 0, 0, 2, 1).unwrap().zigzag(Sign::Minus).zigzag(Sign::Minus)),
        Ok(-1)
    ));
    let odd = FrontDiagram::new(0, 0, 3, 1, 1).unwrap();
    assert_eq!(front_mu(&odd).unwrap(), -1);
    let bad = FrontDiagram::new(0, 0, 2, 4, 1).unwrap();
    assert_eq!(front_mu(&bad).unwrap(), 1);
}

#[test]
fn front_text_round_trips() {
    for f in [
        FrontDiagram::unknot(),
        FrontDiagram::new(3, 1, 2, 4, 1).unwrap(),
        FrontDiagram::new(0, 2, 0, 0, 2).unwrap(),
    ] {
        assert_eq!(parse_front(&write_front(&f)).unwrap(), f);
    }
    assert!(parse_front("front crossings+=1").is_err());
    assert!(parse_front("front crossings+=0 crossings-=0 cusps_up=1 cusps_down=0 components=1").is_err());
}
