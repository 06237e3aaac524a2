//! Linkage extensions `B = R/I_B` of a pair `A1 = R/I1`, `A2 = R/I2`, checked
//! through their colon and socle shadows: `(I_B : I1) = I2`, `(I_B : I2) = I1`,
//! additivity of degrees, the Gorenstein property of `B` at witness points,
//! transfer of regular elements and coincidence of socles.
//!
//! The module-level compatibility conditions are not checked directly; every
//! report is a necessary-condition verification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{colon_poly, ideal_colon, ideal_intersect, Ideal};
use crate::local::{local_ci_test, LocalPointReport, RationalPoint};
use crate::poly::Polynomial;

pub const NECESSARY_CONDITIONS_NOTE: &str = "necessary-condition verification";

#[derive(Clone, Debug)]
pub struct LinkedTriple {
    pub ib: Ideal,
    pub i1: Ideal,
    pub i2: Ideal,
}

impl LinkedTriple {
    /// Completes `(I_B, I1)` with `I2 = (I_B : I1)`.
    pub fn from_link(ib: Ideal, i1: Ideal) -> Result<LinkedTriple> {
        let i2 = link(&ib, &i1)?;
        Ok(LinkedTriple { ib, i1, i2 })
    }
}

/// `(I_B : I1)`, after checking `I_B ⊆ I1` and equal dimensions.
pub fn link(ib: &Ideal, i1: &Ideal) -> Result<Ideal> {
    if !ib.is_subset_of(i1) {
        return Err(Error::NotContained(format!("{ib} is not contained in {i1}")));
    }
    let (d, d1) = (ib.krull_dim(), i1.krull_dim());
    if d != d1 {
        return Err(Error::DimensionMismatch(format!("dim R/I_B = {d}, dim R/I1 = {d1}")));
    }
    ideal_colon(ib, i1)
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkageReport {
    pub pass: bool,
    /// `(I_B : I1) = I2`.
    pub colon_1: bool,
    /// `(I_B : I2) = I1`.
    pub colon_2: bool,
    /// Krull dimensions of `R/I_B`, `R/I1`, `R/I2`.
    pub dims: [i64; 3],
    pub degrees: [i64; 3],
    pub degree_additive: bool,
    pub gorenstein_points: Vec<LocalPointReport>,
    pub gorenstein: bool,
    /// Some witness point ran out of slice attempts.
    pub inconclusive: bool,
    pub note: &'static str,
}

/// Coordinate points of the relevant chart(s) lying on `V(I_B)`: the affine
/// origin for zero-dimensional ideals, otherwise the projective coordinate points.
pub fn default_witness_points(ib: &Ideal) -> Vec<RationalPoint> {
    let ring = ib.ring();
    let field = ring.field();
    let n = ring.nvars();
    let candidates: Vec<RationalPoint> = if ib.krull_dim() == 0 || !ib.is_homogeneous() {
        vec![RationalPoint::origin(field, n)]
    } else {
        (0..n).map(|i| RationalPoint::coordinate_point(field, n, i)).collect()
    };
    candidates.into_iter().filter(|p| p.lies_on(ib)).collect()
}

pub fn verify_linked_triple(t: &LinkedTriple, points: Option<&[RationalPoint]>, seed: u64) -> Result<LinkageReport> {
    let dims = [t.ib.krull_dim(), t.i1.krull_dim(), t.i2.krull_dim()];
    if dims[1] != dims[0] || dims[2] != dims[0] {
        return Err(Error::DimensionMismatch(format!(
            "dim R/I_B = {}, dim R/I1 = {}, dim R/I2 = {}",
            dims[0], dims[1], dims[2]
        )));
    }
    let colon_1 = ideal_colon(&t.ib, &t.i1)? == t.i2;
    let colon_2 = ideal_colon(&t.ib, &t.i2)? == t.i1;
    let degrees = [t.ib.dimension_degree().1, t.i1.dimension_degree().1, t.i2.dimension_degree().1];
    let degree_additive = degrees[0] == degrees[1] + degrees[2];
    let points = match points {
        Some(p) => p.to_vec(),
        None => default_witness_points(&t.ib),
    };
    let mut gorenstein_points = Vec::new();
    for p in &points {
        gorenstein_points.push(local_ci_test(&t.ib, p, seed)?);
    }
    let inconclusive = gorenstein_points.iter().any(|r| r.gorenstein.is_none());
    let gorenstein = gorenstein_points.iter().all(|r| r.gorenstein == Some(true));
    Ok(LinkageReport {
        pass: colon_1 && colon_2 && degree_additive && gorenstein,
        colon_1,
        colon_2,
        dims,
        degrees,
        degree_additive,
        gorenstein_points,
        gorenstein,
        inconclusive,
        note: NECESSARY_CONDITIONS_NOTE,
    })
}

/// `B` is a doubling of `A1`: `I1` is self-linked and the degree doubles.
pub fn doubling_check(ib: &Ideal, i1: &Ideal) -> Result<bool> {
    if !ib.is_subset_of(i1) {
        return Err(Error::NotContained(format!("{ib} is not contained in {i1}")));
    }
    let self_linked = ideal_colon(ib, i1)? == *i1;
    Ok(self_linked && ib.dimension_degree().1 == 2 * i1.dimension_degree().1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegularTransfer {
    pub regular_b: bool,
    pub regular_1: bool,
    pub regular_2: bool,
    /// `regular_b == (regular_1 && regular_2)`.
    pub consistent: bool,
}

fn regular_mod(i: &Ideal, h: &Polynomial) -> Result<bool> {
    Ok(colon_poly(i, h)? == *i)
}

/// `h` is regular mod `I_B` exactly when it is regular mod `I1` and mod `I2`.
pub fn regular_element_transfer_test(t: &LinkedTriple, h: &Polynomial) -> Result<RegularTransfer> {
    let regular_b = regular_mod(&t.ib, h)?;
    let regular_1 = regular_mod(&t.i1, h)?;
    let regular_2 = regular_mod(&t.i2, h)?;
    Ok(RegularTransfer { regular_b, regular_1, regular_2, consistent: regular_b == (regular_1 && regular_2) })
}

#[derive(Clone, Debug, Serialize)]
pub struct SocleReport {
    /// `dim (I_B : m) / I_B`.
    pub socle_b: i64,
    /// `dim ((I_B : m) ∩ I2) / I_B`, the socle of the carrier of `ω1`.
    pub socle_omega_1: i64,
    /// `dim ((I_B : m) ∩ I1) / I_B`.
    pub socle_omega_2: i64,
    pub coincide: bool,
}

/// For Artinian triples linked at the origin, the socle of `B` lies inside both
/// `I1` and `I2`.
pub fn socle_lemma_test(t: &LinkedTriple) -> Result<SocleReport> {
    for i in [&t.ib, &t.i1, &t.i2] {
        if i.krull_dim() != 0 {
            return Err(Error::NotZeroDimensional);
        }
    }
    if ideal_colon(&t.ib, &t.i1)? != t.i2 || ideal_colon(&t.ib, &t.i2)? != t.i1 {
        return Err(Error::Precondition("colon symmetry fails".into()));
    }
    let socle = ideal_colon(&t.ib, &Ideal::origin(t.ib.ring()))?;
    let s1 = ideal_intersect(&socle, &t.i2)?;
    let s2 = ideal_intersect(&socle, &t.i1)?;
    let len = |i: &Ideal| i.dimension_degree().1;
    let base = len(&t.ib);
    Ok(SocleReport {
        socle_b: base - len(&socle),
        socle_omega_1: base - len(&s1),
        socle_omega_2: base - len(&s2),
        coincide: s1 == socle && s2 == socle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::ring::{make_ring, Ring};

    fn ring(names: &[&str]) -> Ring {
        make_ring(names, Field::Rationals, MonomialOrder::GrevLex).unwrap()
    }

    fn ideal(r: &Ring, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(r, gens).unwrap()
    }

    fn fossum() -> LinkedTriple {
        let r = ring(&["x1", "x2"]);
        let (x1, x2) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let ib = ideal(&r, vec![&(&x1 * &x1) + &(&x1 * &x2), &x2 * &x2]);
        let i1 = ideal(&r, vec![x1.clone(), &x2 * &x2]);
        let i2 = ideal(&r, vec![&x1 + &x2, &x2 * &x2]);
        LinkedTriple { ib, i1, i2 }
    }

    fn double_line_triple() -> LinkedTriple {
        let r = ring(&["x", "y", "z", "u"]);
        let v = |i| Polynomial::var(&r, i);
        let (x, y, z, u) = (v(0), v(1), v(2), v(3));
        let sq = [&x * &x, &x * &y, &y * &y];
        let ib = ideal(&r, vec![sq[0].clone(), sq[2].clone()]);
        let mut g1 = vec![&(&z * &x) + &(&u * &y)];
        g1.extend(sq.iter().cloned());
        let mut g2 = vec![&(&z * &x) - &(&u * &y)];
        g2.extend(sq.iter().cloned());
        LinkedTriple { ib, i1: ideal(&r, g1), i2: ideal(&r, g2) }
    }

    #[test]
    fn link_examples() {
        let t = double_line_triple();
        assert_eq!(link(&t.ib, &t.i1).unwrap(), t.i2);
        let f = fossum();
        assert_eq!(link(&f.ib, &f.i1).unwrap(), f.i2);
        assert!(link(&f.ib, &f.ib).unwrap().is_unit());
        assert!(matches!(link(&f.i1, &f.ib), Err(Error::NotContained(_))));
    }

    #[test]
    fn verify_fixtures() {
        let rep = verify_linked_triple(&fossum(), None, 1).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.degrees, [4, 2, 2]);
        let rep = verify_linked_triple(&double_line_triple(), None, 1).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.degrees, [4, 2, 2]);
        assert_eq!(rep.gorenstein_points.len(), 2);

        let r = ring(&["x", "y"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let xy = ideal(&r, vec![x.clone(), y.clone()]);
        let broken = LinkedTriple { ib: ideal(&r, vec![&x * &x, &y * &y]), i1: xy.clone(), i2: xy };
        let rep = verify_linked_triple(&broken, None, 1).unwrap();
        assert!(!rep.pass && !rep.colon_1);
    }

    #[test]
    fn doublings() {
        let r = ring(&["x", "y", "z"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        assert!(doubling_check(&ideal(&r, vec![&x * &x, y.clone()]), &ideal(&r, vec![x.clone(), y.clone()])).unwrap());
        let f = fossum();
        assert!(!doubling_check(&f.ib, &f.i1).unwrap());
        let r2 = ring(&["x", "y"]);
        let (x, y) = (Polynomial::var(&r2, 0), Polynomial::var(&r2, 1));
        assert!(doubling_check(&ideal(&r2, vec![&x * &x, &y * &y]), &ideal(&r2, vec![x.clone(), &y * &y])).unwrap());
    }

    #[test]
    fn regular_elements() {
        let t = double_line_triple();
        let r = t.ib.ring().clone();
        let z = regular_element_transfer_test(&t, &Polynomial::var(&r, 2)).unwrap();
        assert!(z.regular_b && z.regular_1 && z.regular_2 && z.consistent);
        let x = regular_element_transfer_test(&t, &Polynomial::var(&r, 0)).unwrap();
        assert!(!x.regular_b && !x.regular_1 && x.consistent);
        let f = fossum();
        let x2 = regular_element_transfer_test(&f, &Polynomial::var(f.ib.ring(), 1)).unwrap();
        assert!(!x2.regular_b && !x2.regular_1 && !x2.regular_2 && x2.consistent);
    }

    #[test]
    fn socles() {
        let rep = socle_lemma_test(&fossum()).unwrap();
        assert_eq!((rep.socle_b, rep.socle_omega_1, rep.socle_omega_2, rep.coincide), (1, 1, 1, true));
        let r = ring(&["x", "y"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let ib = ideal(&r, vec![&x * &x, &y * &y]);
        let t = LinkedTriple::from_link(ib, ideal(&r, vec![x.clone(), &y * &y])).unwrap();
        let rep = socle_lemma_test(&t).unwrap();
        assert_eq!((rep.socle_b, rep.coincide), (1, true));
        assert!(matches!(socle_lemma_test(&double_line_triple()), Err(Error::NotZeroDimensional)));
    }
}
