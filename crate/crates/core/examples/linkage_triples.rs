//! Linked triples: the colon symmetry, degree additivity, the Gorenstein
//! property at witness points, doublings, regular elements and socles.

use linkext::linkage::{doubling_check, link, regular_element_transfer_test, socle_lemma_test, verify_linked_triple, LinkedTriple};
use linkext::session::parse_polynomial;
use linkext::{make_ring, Field, Ideal, MonomialOrder, Result, Ring};

fn ideal(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
    let polys = gens.iter().map(|g| parse_polynomial(ring, g)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, polys)
}

pub fn run() -> Result<()> {
    let r = make_ring(&["x1", "x2"], Field::Rationals, MonomialOrder::GrevLex)?;
    let b = ideal(&r, &["x1^2 + x1*x2", "x2^2"])?;
    let a1 = ideal(&r, &["x1", "x2^2"])?;
    let a2 = link(&b, &a1)?;
    println!("link(B, A1) = {a2}");
    let t = LinkedTriple { ib: b.clone(), i1: a1.clone(), i2: a2 };
    let rep = verify_linked_triple(&t, None, 0)?;
    println!("verified: {} (degrees {:?}, Gorenstein {}; {})", rep.pass, rep.degrees, rep.gorenstein, rep.note);
    println!("B is a doubling of A1: {}", doubling_check(&b, &a1)?);
    let soc = socle_lemma_test(&t)?;
    println!("socles: B {}, omega1 {}, omega2 {}, coincide {}", soc.socle_b, soc.socle_omega_1, soc.socle_omega_2, soc.coincide);

    let p3 = make_ring(&["x", "y", "z", "u"], Field::Rationals, MonomialOrder::GrevLex)?;
    let y = ideal(&p3, &["x^2", "y^2"])?;
    let i1 = ideal(&p3, &["z*x + u*y", "x^2", "x*y", "y^2"])?;
    let t = LinkedTriple::from_link(y, i1)?;
    let rep = verify_linked_triple(&t, None, 0)?;
    println!("double lines: pass {}, witness points {:?}", rep.pass, rep.gorenstein_points.iter().map(|p| &p.point).collect::<Vec<_>>());
    for h in ["z", "x"] {
        let tr = regular_element_transfer_test(&t, &parse_polynomial(&p3, h)?)?;
        println!("{h}: regular on B {}, on A1 {}, on A2 {}, consistent {}", tr.regular_b, tr.regular_1, tr.regular_2, tr.consistent);
    }

    let doubled = ideal(&p3, &["x^2", "y"])?;
    println!("(x^2, y) doubles (x, y): {}", doubling_check(&doubled, &ideal(&p3, &["x", "y"])?)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
