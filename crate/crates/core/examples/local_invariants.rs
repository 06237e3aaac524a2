//! Invariants at a point: minimal number of generators, the point-primary
//! component, Artinian reduction and the Gorenstein verdict.

use linkext::local::{artinian_invariants, artinian_reduction, local_ci_test, local_component, local_mu, translate_to_origin, RationalPoint};
use linkext::session::parse_polynomial;
use linkext::{make_ring, Field, Ideal, MonomialOrder, Result};

pub fn run() -> Result<()> {
    let plane = make_ring(&["x", "y"], Field::Rationals, MonomialOrder::GrevLex)?;
    let p = |s: &str| parse_polynomial(&plane, s);

    // three generators, but the first is redundant near the origin
    let i = Ideal::new(&plane, vec![p("x^2*y + x*y^2")?, p("x^2")?, p("y^2")?])?;
    println!("mu at the origin of (x^2*y + x*y^2, x^2, y^2): {}", local_mu(&i)?);

    // the origin component of an ideal with two points
    let two_points = Ideal::new(&plane, vec![p("x^2")?, p("y*(y - 1)")?])?;
    let q = local_component(&two_points)?;
    let inv = artinian_invariants(&q)?;
    println!("origin component {q}: length {}, socle dim {}, Gorenstein {}", inv.length, inv.socle_dim, inv.gorenstein);

    let not_gor = Ideal::new(&plane, vec![p("x^2")?, p("x*y")?, p("y^2")?])?;
    println!("(x, y)^2: socle dim {}", artinian_invariants(&not_gor)?.socle_dim);

    // a double line, tested at a point of P^3
    let p3 = make_ring(&["x", "y", "z", "u"], Field::Rationals, MonomialOrder::GrevLex)?;
    let q3 = |s: &str| parse_polynomial(&p3, s);
    let dl = Ideal::new(&p3, vec![q3("z*x + u*y")?, q3("x^2")?, q3("x*y")?, q3("y^2")?])?;
    let pt = RationalPoint::projective(p3.field(), vec![0, 0, 0, 1].into_iter().map(|c| p3.field().from_i64(c)).collect())?;
    let chart = translate_to_origin(&dl, &pt)?;
    println!("in the chart u = 1: {chart}");
    let cut = artinian_reduction(&chart, &parse_polynomial(chart.ring(), "z")?)?;
    println!("cut by z: {cut}");
    let report = local_ci_test(&dl, &pt, 0)?;
    println!(
        "at {}: mu {}, codim {}, lci {}, Gorenstein {:?}, slices {:?}",
        report.point, report.mu, report.codim, report.lci, report.gorenstein, report.slices
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
