//! Polynomials over Q and F_p, monomial orders, reduced Gröbner bases,
//! normal forms and syzygies.

use linkext::groebner::{buchberger, normal_form, syzygies};
use linkext::session::parse_polynomial;
use linkext::{make_ring, Field, MonomialOrder, Polynomial, Result};

pub fn run() -> Result<()> {
    let ring = make_ring(&["x", "y", "z"], Field::Rationals, MonomialOrder::GrevLex)?;
    let p = |s: &str| parse_polynomial(&ring, s);

    let gens = vec![p("x*z - y^2")?, p("y*z - x*z")?, p("x^2 - y")?];
    let gb = buchberger(&gens, MonomialOrder::GrevLex)?;
    println!("grevlex basis:");
    for g in gb.elements() {
        println!("  {g}");
    }

    let lex = buchberger(&gens, MonomialOrder::Lex)?;
    let lex_gens: Vec<String> = lex.elements().iter().map(Polynomial::to_string).collect();
    println!("lex basis: {}", lex_gens.join(", "));

    let f = &(&gens[0] * &p("x + 3")?) + &(&gens[2] * &p("z^2")?);
    println!("normal form of a combination of generators: {}", normal_form(&f, &gb)?);
    println!("normal form of x^3: {}", normal_form(&p("x^3")?, &gb)?);

    let syz = syzygies(&gens)?;
    println!("{} syzygies among the three generators, e.g.:", syz.len());
    if let Some(s) = syz.first() {
        let parts: Vec<String> = s.components().iter().map(Polynomial::to_string).collect();
        println!("  ({})", parts.join(", "));
    }

    let f31 = make_ring(&["x", "y"], Field::prime(31)?, MonomialOrder::Lex)?;
    let q = parse_polynomial(&f31, "1/2*x - 1/3*y")?;
    println!("over F31: 1/2*x - 1/3*y = {q}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
