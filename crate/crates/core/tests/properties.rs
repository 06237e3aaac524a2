//! Randomized algebraic invariants. Each property draws a seed and builds its
//! instance from the crate's own seeded generators or from small term lists.

mod common;

use linkext::cli::{run_command, Invocation};
use linkext::double_lines::{classify, ClassifyMode};
use linkext::groebner::{buchberger, normal_form};
use linkext::ideal::ideal_equal;
use linkext::instances::{campaign_ring, meeting_instance, random_curve_triple, MeetingKind};
use linkext::linkage::link;
use linkext::session::parse_polynomial;
use linkext::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Terms = Vec<((i64, i64), [u32; 3])>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec(((-6i64..=6, 1i64..=4), [0u32..=2, 0u32..=2, 0u32..=2]), 0..4)
}

fn field(prime: bool) -> Field {
    if prime {
        Field::prime(31).unwrap()
    } else {
        Field::Rationals
    }
}

fn order(k: u8) -> MonomialOrder {
    [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Block(1)][k as usize % 3]
}

fn poly(ring: &Ring, t: &Terms) -> Polynomial {
    let f = ring.field();
    let c = |&(n, d): &(i64, i64)| match f {
        // keep the denominator invertible mod 31 as well
        Field::Prime(_) => f.from_i64(n),
        Field::Rationals => f.from_ratio(&n.into(), &d.into()).unwrap(),
    };
    Polynomial::from_terms(ring, t.iter().map(|(k, e)| (Monomial::from_exponents(e), c(k))).collect())
}

fn ring(prime: bool, k: u8) -> Ring {
    make_ring(&["a", "b", "c"], field(prime), order(k)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(p in terms(), q in terms(), r in terms(), prime: bool, k in 0u8..3) {
        let ring = ring(prime, k);
        let (p, q, r) = (poly(&ring, &p), poly(&ring, &q), poly(&ring, &r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn display_parses_back(p in terms(), prime: bool) {
        let ring = ring(prime, 0);
        let p = poly(&ring, &p);
        prop_assert_eq!(parse_polynomial(&ring, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn reduced_basis_ignores_redundant_generators(
        f in terms(), g in terms(), m in terms(), prime: bool, k in 0u8..3,
    ) {
        let ring = ring(prime, k);
        let gens = vec![poly(&ring, &f), poly(&ring, &g)];
        let gb = buchberger(&gens, order(k)).unwrap();
        for h in &gens {
            prop_assert!(normal_form(h, &gb).unwrap().is_zero());
        }
        let extra = &gens[0] * &poly(&ring, &m);
        let mut padded = gens.clone();
        padded.insert(0, extra);
        let again = buchberger(&padded, order(k)).unwrap();
        prop_assert_eq!(again.elements(), gb.elements());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn classify_is_symmetric_and_scale_invariant(seed: u64, kind in 0usize..4, r in 1u32..=2) {
        let kind = [MeetingKind::A, MeetingKind::BHolds, MeetingKind::BViolated, MeetingKind::OneSided][kind];
        let ring = campaign_ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (l1, l2) = meeting_instance(&ring, kind, r, &mut rng);
        let base = classify(&l1, &l2, ClassifyMode::Conditions, 0).unwrap().verdict;
        let swapped = classify(&l2, &l1, ClassifyMode::Conditions, 0).unwrap().verdict;
        let scaled = classify(&l1.scaled(&ring.field().from_i64(7)), &l2, ClassifyMode::Conditions, 0).unwrap().verdict;
        prop_assert_eq!(base.lal, swapped.lal);
        prop_assert_eq!(base.case_tag, swapped.case_tag);
        prop_assert_eq!(base.lal, scaled.lal);
        prop_assert_eq!(base.lal, matches!(kind, MeetingKind::A | MeetingKind::BHolds));
    }

    #[test]
    fn linking_twice_returns_the_start(seed: u64) {
        let ring = campaign_ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(t) = random_curve_triple(&ring, &mut rng).unwrap() {
            let back = link(&t.ib, &t.i2).unwrap();
            prop_assert!(ideal_equal(&back, &t.i1).unwrap());
        }
    }
}

#[test]
fn json_documents_round_trip() {
    for (fixture, cmd, names) in common::GOLDEN_CASES {
        let out = run_command(&common::load(fixture), &Invocation::new(cmd, names)).unwrap();
        let text = out.json_string();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["schema"], 1, "{fixture} {cmd}");
        assert_eq!(value["command"], *cmd);
        assert_eq!(serde_json::to_string_pretty(&value).unwrap(), text.trim_end());
    }
}
