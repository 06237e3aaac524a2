//! Deciding whether two double lines in P^3 are locally algebraically linked,
//! by explicit conditions and by the geometric oracle.

use linkext::double_lines::{classify, ClassifyMode, DoubleLine};
use linkext::session::parse_polynomial;
use linkext::{make_ring, Field, MonomialOrder, Result, Ring};

fn dline(ring: &Ring, s0: &str, s1: &str, a: &str, b: &str) -> Result<DoubleLine> {
    DoubleLine::from_names(ring, s0, s1, parse_polynomial(ring, a)?, parse_polynomial(ring, b)?)
}

pub fn run() -> Result<()> {
    let ring = make_ring(&["x", "y", "z", "u"], Field::Rationals, MonomialOrder::GrevLex)?;
    let pairs = [
        ("disjoint", dline(&ring, "x", "y", "z", "u")?, dline(&ring, "z", "u", "x", "y")?),
        ("meeting, generic", dline(&ring, "x", "y", "z", "u")?, dline(&ring, "x", "z", "y", "u")?),
        ("meeting, tangent", dline(&ring, "x", "y", "u", "z")?, dline(&ring, "x", "z", "u", "y")?),
        ("meeting, mismatched", dline(&ring, "x", "y", "2*u", "z")?, dline(&ring, "x", "z", "u", "y")?),
        ("meeting, one-sided", dline(&ring, "x", "y", "z", "u")?, dline(&ring, "x", "z", "u", "y")?),
        ("same line, opposite", dline(&ring, "x", "y", "z", "u")?, dline(&ring, "x", "y", "z", "-u")?),
        ("same line, rotated", dline(&ring, "x", "y", "z^2", "u^2 + z*u")?, dline(&ring, "x", "y", "u^2 + z*u", "-z^2")?),
        ("same line, sheared", dline(&ring, "x", "y", "z", "u")?, dline(&ring, "x", "y", "z", "z + u")?),
    ];
    for (label, l1, l2) in &pairs {
        let c = classify(l1, l2, ClassifyMode::Both, 0)?;
        let v = &c.verdict;
        print!("{label:22} lal {:5} {:?}", v.lal, v.case_tag);
        if let Some(w) = &v.witness {
            print!("  [{}]", w.describe());
        }
        println!();
        if let Some(y) = &v.extension {
            let gens: Vec<String> = y.reduced_gens().iter().map(|g| g.to_string()).collect();
            println!("{:22} extension ({})", "", gens.join(", "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
