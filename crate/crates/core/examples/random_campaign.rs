//! A small seeded campaign: random double-line pairs of every kind over F31,
//! classified by both routes, and random linked triples verified.

use linkext::double_lines::{classify, ClassifyMode};
use linkext::instances::{campaign_ring, meeting_instance, random_artinian_triple, random_double_line, random_invertible, same_support_partner, MeetingKind};
use linkext::linkage::verify_linked_triple;
use linkext::{Field, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> Result<()> {
    let ring = campaign_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for kind in [MeetingKind::A, MeetingKind::BHolds, MeetingKind::BViolated, MeetingKind::OneSided] {
        let mut lal = 0;
        for _ in 0..5 {
            let (l1, l2) = meeting_instance(&ring, kind, 2, &mut rng);
            lal += classify(&l1, &l2, ClassifyMode::Both, 0)?.verdict.lal as usize;
        }
        println!("{kind:?}: {lal}/5 linked, conditions and oracle agree");
    }
    for traceless in [true, false] {
        let l1 = random_double_line(&ring, (0, 1), 2, &mut rng);
        let n = random_invertible(ring.field(), traceless, &mut rng);
        let l2 = same_support_partner(&l1, &n);
        let c = classify(&l1, &l2, ClassifyMode::Both, 0)?;
        println!("same support, traceless N {traceless}: lal {}", c.verdict.lal);
    }
    let mut passed = 0;
    for _ in 0..5 {
        let t = random_artinian_triple(&Field::prime(31)?, 3, &mut rng)?;
        passed += verify_linked_triple(&t, None, 0)?.pass as usize;
    }
    println!("artinian triples verified: {passed}/5");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
