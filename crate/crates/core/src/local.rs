//! Invariants of an ideal at a rational point: the local number of generators,
//! the point-primary component, length, socle dimension and the Gorenstein and
//! complete-intersection verdicts.
//!
//! Everything is computed with the global Gröbner engine. The point is first
//! moved to the origin of an affine chart; the minimal number of generators is
//! read off the syzygies evaluated there; the Gorenstein question is reduced to
//! an Artinian one by cutting with linear forms certified regular through
//! `(I : h) = I`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::groebner::syzygies;
use crate::hilbert::standard_monomials;
use crate::ideal::{colon_poly, ideal_colon, ideal_sum, saturate, Ideal};
use crate::linalg::Matrix;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// Attempts per slice when looking for a regular linear form.
pub const SLICE_BUDGET: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalPoint {
    Affine(Vec<Coeff>),
    /// Homogeneous coordinates normalized so that `coords[chart] = 1`.
    Projective { chart: usize, coords: Vec<Coeff> },
}

impl RationalPoint {
    pub fn origin(field: &Field, n: usize) -> RationalPoint {
        RationalPoint::Affine(vec![field.zero(); n])
    }

    /// Normalizes by the last nonzero coordinate, which becomes the chart.
    pub fn projective(field: &Field, coords: Vec<Coeff>) -> Result<RationalPoint> {
        let chart = coords
            .iter()
            .rposition(|c| !field.is_zero(c))
            .ok_or_else(|| Error::Precondition("projective point with all coordinates zero".into()))?;
        let inv = field.inv(&coords[chart]).unwrap();
        let coords = coords.iter().map(|c| field.mul(c, &inv)).collect();
        Ok(RationalPoint::Projective { chart, coords })
    }

    /// The projective point with a 1 in position `i` and zeros elsewhere.
    pub fn coordinate_point(field: &Field, n: usize, i: usize) -> RationalPoint {
        let mut coords = vec![field.zero(); n];
        coords[i] = field.one();
        RationalPoint::Projective { chart: i, coords }
    }

    pub fn coords(&self) -> &[Coeff] {
        match self {
            RationalPoint::Affine(c) => c,
            RationalPoint::Projective { coords, .. } => coords,
        }
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        match self {
            RationalPoint::Affine(_) => format!("({})", parts.join(",")),
            RationalPoint::Projective { .. } => format!("({})", parts.join(":")),
        }
    }

    pub fn lies_on(&self, ideal: &Ideal) -> bool {
        let field = ideal.ring().field();
        ideal.gens().iter().all(|g| field.is_zero(&g.evaluate(self.coords())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalPointReport {
    pub point: String,
    pub mu: usize,
    pub codim: usize,
    pub lci: bool,
    pub length: Option<usize>,
    pub socle_dim: Option<usize>,
    pub gorenstein: Option<bool>,
    /// Linear forms (chart coordinates) used to cut down to an Artinian ring.
    pub slices: Vec<String>,
    /// No certified-regular slice was found within the budget.
    pub inconclusive: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArtinianInvariants {
    pub length: usize,
    pub socle_dim: usize,
    pub gorenstein: bool,
}

/// Move `p` to the origin of an affine chart. Projective points drop the chart
/// variable (set to 1); the chart ring keeps the other names, ordered by grevlex.
pub fn translate_to_origin(ideal: &Ideal, p: &RationalPoint) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if p.coords().len() != n {
        return Err(Error::LengthMismatch(n, p.coords().len()));
    }
    if !p.lies_on(ideal) {
        return Err(Error::PointNotOnVariety(p.describe()));
    }
    match p {
        RationalPoint::Affine(c) => {
            let images: Vec<Polynomial> = (0..n)
                .map(|i| &Polynomial::var(ring, i) + &Polynomial::constant(ring, c[i].clone()))
                .collect();
            let gens = ideal.gens().iter().map(|g| g.substitute(&images)).collect::<Result<Vec<_>>>()?;
            Ideal::new(ring, gens)
        }
        RationalPoint::Projective { chart, coords } => {
            let names: Vec<String> = (0..n).filter(|i| i != chart).map(|i| ring.vars()[i].clone()).collect();
            let chart_ring = ring.with_vars(names, MonomialOrder::GrevLex);
            let mut k = 0;
            let images: Vec<Polynomial> = (0..n)
                .map(|i| {
                    if i == *chart {
                        Polynomial::one(&chart_ring)
                    } else {
                        let v = &Polynomial::var(&chart_ring, k) + &Polynomial::constant(&chart_ring, coords[i].clone());
                        k += 1;
                        v
                    }
                })
                .collect();
            let gens = ideal.gens().iter().map(|g| g.substitute(&images)).collect::<Result<Vec<_>>>()?;
            Ideal::new(&chart_ring, gens)
        }
    }
}

fn at_origin(ideal: &Ideal) -> bool {
    let field = ideal.ring().field();
    ideal.gens().iter().all(|g| field.is_zero(&g.constant_term()))
}

/// Minimal number of generators of `I` localized at the origin: the number of
/// generators minus the rank of the syzygy module evaluated at the origin.
pub fn local_mu(ideal: &Ideal) -> Result<usize> {
    if !at_origin(ideal) {
        return Err(Error::PointNotOnVariety("origin".into()));
    }
    let gens = ideal.gens();
    if gens.is_empty() {
        return Ok(0);
    }
    let field = ideal.ring().field();
    let rows: Vec<Vec<Coeff>> = syzygies(gens)?.iter().map(|s| s.value_at_origin()).collect();
    let rank = Matrix::from_rows(field, &rows, gens.len()).rank(field);
    Ok(gens.len() - rank)
}

/// Origin-primary component `I : (I : m^∞)` of a zero-dimensional ideal.
pub fn local_component(ideal: &Ideal) -> Result<Ideal> {
    if !at_origin(ideal) {
        return Err(Error::PointNotOnVariety("origin".into()));
    }
    if ideal.krull_dim() != 0 {
        return Err(Error::NotZeroDimensional);
    }
    let m = Ideal::origin(ideal.ring());
    let away = saturate(ideal, &m)?;
    if away.is_unit() {
        return Ok(ideal.clone());
    }
    ideal_colon(ideal, &away)
}

fn quotient_length(ideal: &Ideal) -> Result<usize> {
    let gb = ideal.groebner_basis();
    standard_monomials(&gb.leading_monomials(), ideal.ring().nvars())
        .map(|s| s.len())
        .ok_or(Error::NotZeroDimensional)
}

/// Length, socle dimension and Gorenstein verdict of `R/Q` for an origin-primary `Q`.
pub fn artinian_invariants(q: &Ideal) -> Result<ArtinianInvariants> {
    let length = quotient_length(q)?;
    if length == 0 {
        return Ok(ArtinianInvariants { length: 0, socle_dim: 0, gorenstein: false });
    }
    let socle_ideal = ideal_colon(q, &Ideal::origin(q.ring()))?;
    let socle_dim = length - quotient_length(&socle_ideal)?;
    Ok(ArtinianInvariants { length, socle_dim, gorenstein: socle_dim == 1 })
}

/// Cut a curve (or higher-dimensional germ) through the origin by `h`, after
/// certifying `(I : h) = I`. A zero-dimensional result is localized at the origin.
pub fn artinian_reduction(ideal: &Ideal, h: &Polynomial) -> Result<Ideal> {
    let field = ideal.ring().field();
    if !field.is_zero(&h.constant_term()) {
        return Err(Error::Precondition(format!("{h} does not vanish at the origin")));
    }
    if !is_regular(ideal, h)? {
        return Err(Error::ZeroDivisor(h.to_string()));
    }
    let cut = ideal_sum(ideal, &Ideal::new(ideal.ring(), vec![h.clone()])?)?;
    if cut.krull_dim() == 0 {
        local_component(&cut)
    } else {
        Ok(cut)
    }
}

/// `h` is a nonzerodivisor modulo `I`.
pub fn is_regular(ideal: &Ideal, h: &Polynomial) -> Result<bool> {
    Ok(colon_poly(ideal, h)?.is_subset_of(ideal))
}

fn random_linear_form(ideal: &Ideal, rng: &mut ChaCha8Rng) -> Polynomial {
    let ring = ideal.ring();
    loop {
        let mut h = Polynomial::zero(ring);
        for i in 0..ring.nvars() {
            let c: i64 = rng.gen_range(-5..=5);
            if c != 0 {
                h = &h + &Polynomial::var(ring, i).scale(&ring.field().from_i64(c));
            }
        }
        if !h.is_zero() {
            return h;
        }
    }
}

/// Local verdicts of `I` at `p`. Codimension is the chart dimension minus the
/// Krull dimension of the translated ideal, which is the local codimension for
/// equidimensional inputs such as curves and Artinian ideals.
pub fn local_ci_test(ideal: &Ideal, p: &RationalPoint, seed: u64) -> Result<LocalPointReport> {
    let local = translate_to_origin(ideal, p)?;
    let n = local.ring().nvars();
    let mu = local_mu(&local)?;
    let dim = local.krull_dim();
    let codim = (n as i64 - dim).max(0) as usize;
    let lci = mu == codim;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = local;
    let mut slices = Vec::new();
    let mut inconclusive = false;
    while cur.krull_dim() > 0 {
        let mut found = None;
        for _ in 0..SLICE_BUDGET {
            let h = random_linear_form(&cur, &mut rng);
            if is_regular(&cur, &h)? {
                found = Some(h);
                break;
            }
        }
        match found {
            Some(h) => {
                slices.push(h.to_string());
                cur = ideal_sum(&cur, &Ideal::new(cur.ring(), vec![h])?)?;
            }
            None => {
                inconclusive = true;
                break;
            }
        }
    }
    let (length, socle_dim, gorenstein) = if inconclusive {
        (None, None, None)
    } else {
        let inv = artinian_invariants(&local_component(&cur)?)?;
        (Some(inv.length), Some(inv.socle_dim), Some(inv.gorenstein))
    };
    Ok(LocalPointReport { point: p.describe(), mu, codim, lci, length, socle_dim, gorenstein, slices, inconclusive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::ring::{make_ring, Ring};

    fn ring(names: &[&str]) -> Ring {
        make_ring(names, Field::Rationals, MonomialOrder::GrevLex).unwrap()
    }

    fn v(r: &Ring, i: usize) -> Polynomial {
        Polynomial::var(r, i)
    }

    fn id(r: &Ring, gens: &[Polynomial]) -> Ideal {
        Ideal::new(r, gens.to_vec()).unwrap()
    }

    #[test]
    fn chart_translation() {
        let r = ring(&["x", "y", "z", "u"]);
        let (x, y, z, u) = (v(&r, 0), v(&r, 1), v(&r, 2), v(&r, 3));
        let i1 = id(&r, &[&(&z * &x) + &(&u * &y), &x * &x, &x * &y, &y * &y]);
        let f = Field::Rationals;
        let p = RationalPoint::projective(&f, vec![f.zero(), f.zero(), f.zero(), f.from_i64(3)]).unwrap();
        assert_eq!(p.describe(), "(0:0:0:1)");
        let local = translate_to_origin(&i1, &p).unwrap();
        let c = local.ring().clone();
        let (cx, cy, cz) = (v(&c, 0), v(&c, 1), v(&c, 2));
        assert_eq!(local, id(&c, &[&(&cz * &cx) + &cy, &cx * &cx, &cx * &cy, &cy * &cy]));

        let off = RationalPoint::coordinate_point(&f, 4, 0);
        assert!(matches!(translate_to_origin(&i1, &off), Err(Error::PointNotOnVariety(_))));
        let line = id(&r, std::slice::from_ref(&x));
        assert_eq!(translate_to_origin(&line, &RationalPoint::origin(&f, 4)).unwrap(), line);
    }

    #[test]
    fn mu_examples() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        assert_eq!(local_mu(&id(&r, &[x.clone(), y.clone()])).unwrap(), 2);
        assert_eq!(local_mu(&id(&r, &[x.clone(), y.clone(), &x + &y])).unwrap(), 2);
        assert_eq!(local_mu(&id(&r, &[&x + &Polynomial::one(&r)])), Err(Error::PointNotOnVariety("origin".into())));
    }

    #[test]
    fn point_components() {
        let r = ring(&["x"]);
        let x = v(&r, 0);
        let one = Polynomial::one(&r);
        let xm1 = &x - &one;
        assert_eq!(local_component(&id(&r, &[&x * &xm1])).unwrap(), id(&r, std::slice::from_ref(&x)));
        assert_eq!(local_component(&id(&r, &[&(&x * &x) * &xm1])).unwrap(), id(&r, &[&x * &x]));
        assert_eq!(local_component(&id(&r, &[&x * &x])).unwrap(), id(&r, &[&x * &x]));
    }

    #[test]
    fn artinian_examples() {
        let r = ring(&["x", "y"]);
        let (x, y) = (v(&r, 0), v(&r, 1));
        let ci = artinian_invariants(&id(&r, &[&x * &x, &y * &y])).unwrap();
        assert_eq!(ci, ArtinianInvariants { length: 4, socle_dim: 1, gorenstein: true });
        let sq = artinian_invariants(&id(&r, &[&x * &x, &x * &y, &y * &y])).unwrap();
        assert_eq!(sq, ArtinianInvariants { length: 3, socle_dim: 2, gorenstein: false });

        let lex = make_ring(&["x1", "x2"], Field::Rationals, MonomialOrder::Lex).unwrap();
        let (a, b) = (v(&lex, 0), v(&lex, 1));
        let fossum = artinian_invariants(&id(&lex, &[&(&a * &a) + &(&a * &b), &b * &b])).unwrap();
        assert_eq!(fossum, ArtinianInvariants { length: 4, socle_dim: 1, gorenstein: true });
        assert_eq!(artinian_invariants(&id(&r, &[&x * &x])), Err(Error::NotZeroDimensional));
    }

    #[test]
    fn reductions() {
        let r = ring(&["x", "y", "z"]);
        let (x, y, z) = (v(&r, 0), v(&r, 1), v(&r, 2));
        let ci = id(&r, &[&x * &x, &y * &y]);
        let q = artinian_reduction(&ci, &z).unwrap();
        assert_eq!(q, id(&r, &[&x * &x, &y * &y, z.clone()]));
        assert!(artinian_invariants(&q).unwrap().gorenstein);

        let sq = id(&r, &[&x * &x, &x * &y, &y * &y]);
        let inv = artinian_invariants(&artinian_reduction(&sq, &z).unwrap()).unwrap();
        assert_eq!((inv.length, inv.gorenstein), (3, false));

        assert_eq!(artinian_reduction(&ci, &x), Err(Error::ZeroDivisor("x".into())));
    }

    #[test]
    fn line_in_affine_space() {
        let r = ring(&["x", "y", "z"]);
        let line = id(&r, &[v(&r, 0), v(&r, 1)]);
        let rep = local_ci_test(&line, &RationalPoint::origin(&Field::Rationals, 3), 0).unwrap();
        assert_eq!((rep.mu, rep.codim, rep.lci, rep.gorenstein), (2, 2, true, Some(true)));
    }
}
