//! Intersections, colons, saturation, elimination and Hilbert data.

use linkext::ideal::{eliminate, hilbert_data, ideal_colon, ideal_intersect, ideal_product, saturate};
use linkext::session::parse_polynomial;
use linkext::{make_ring, Field, Ideal, MonomialOrder, Result};

fn show(label: &str, i: &Ideal) {
    let g: Vec<String> = i.reduced_gens().iter().map(|p| p.to_string()).collect();
    println!("{label} = ({})", g.join(", "));
}

pub fn run() -> Result<()> {
    let ring = make_ring(&["x", "y", "z", "u"], Field::Rationals, MonomialOrder::GrevLex)?;
    let ideal = |gens: &[&str]| -> Result<Ideal> {
        let polys = gens.iter().map(|g| parse_polynomial(&ring, g)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, polys)
    };

    let y = ideal(&["x^2", "y^2"])?;
    let i1 = ideal(&["z*x + u*y", "x^2", "x*y", "y^2"])?;
    show("(x^2, y^2) : I1", &ideal_colon(&y, &i1)?);

    let line1 = ideal(&["x", "y"])?;
    let line2 = ideal(&["x", "z"])?;
    show("two meeting lines", &ideal_intersect(&line1, &line2)?);
    show("their product", &ideal_product(&line1, &line2)?);

    let m = ideal(&["x", "y", "z", "u"])?;
    let embedded = ideal_intersect(&line1, &ideal(&["x^2", "y^2", "z^2", "u^2"])?)?;
    show("line with an embedded point, saturated", &saturate(&embedded, &m)?);

    let cone = ideal(&["x - z^2", "y - z^3"])?;
    show("eliminating z from (x - z^2, y - z^3)", &eliminate(&cone, &[2])?);

    for (name, i) in [("double line", &i1), ("(x,y)^2", &ideal(&["x^2", "x*y", "y^2"])?), ("(x^2,y^2)", &y)] {
        let h = hilbert_data(i)?;
        println!("{name}: projective dimension {}, degree {}", h.projective_dim, h.degree);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
