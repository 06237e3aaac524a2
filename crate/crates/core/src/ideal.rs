//! Ideals and the ideal-level operations built on the Gröbner engine.

use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger_in, BuchbergerOptions, GroebnerBasis};
use crate::hilbert::{codim_and_degree, hilbert_numerator, IntPoly};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    // write-once per order; a racing fill computes the same basis twice
    cache: Mutex<Vec<(MonomialOrder, Arc<GroebnerBasis>)>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Equality as ideals, i.e. equal reduced bases.
impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        ideal_equal(self, other).unwrap_or(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Krull dimension of `R/I`; -1 for the unit ideal.
    pub krull_dim: i64,
    /// Dimension of the projective scheme, `krull_dim - 1`.
    pub projective_dim: i64,
    pub degree: i64,
    /// Numerator of the Hilbert series over `(1-t)^n`.
    pub numerator: IntPoly,
}

impl Ideal {
    /// Generators are moved into `ring` (which must share variables and field);
    /// zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| !g.ring().compatible(ring)) {
            return Err(Error::RingMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.in_ring(ring)).collect();
        Ok(Ideal { ring: ring.clone(), gens, cache: Mutex::new(Vec::new()) })
    }

    pub fn from_gens(gens: Vec<Polynomial>) -> Result<Ideal> {
        let ring = gens.first().ok_or(Error::EmptyInput("ideal with no generators"))?.ring().clone();
        Ideal::new(&ring, gens)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new(), cache: Mutex::new(Vec::new()) }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The ideal `(x_1, ..., x_n)` of the origin.
    pub fn origin(ring: &Ring) -> Ideal {
        Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect()).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner_basis(&self) -> Arc<GroebnerBasis> {
        self.groebner_basis_in(self.ring.order())
    }

    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some((_, gb)) = self.cache.lock().unwrap().iter().find(|(o, _)| *o == order) {
            return gb.clone();
        }
        let gb = Arc::new(
            buchberger_in(&self.ring, &self.gens, order, BuchbergerOptions::default())
                .expect("generators share the ideal's ring"),
        );
        let mut cache = self.cache.lock().unwrap();
        if let Some((_, existing)) = cache.iter().find(|(o, _)| *o == order) {
            return existing.clone();
        }
        cache.push((order, gb.clone()));
        gb
    }

    /// Reduced basis elements in the ideal's own ring.
    pub fn reduced_gens(&self) -> Vec<Polynomial> {
        self.groebner_basis().elements().to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.groebner_basis().contains(f)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if self.ring.compatible(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Krull dimension (-1 for the unit ideal) and degree of the leading-term
    /// ideal under grevlex. For homogeneous ideals these are the projective
    /// cone's invariants; for affine ideals, those of the projective closure.
    pub fn dimension_degree(&self) -> (i64, i64) {
        let gb = self.groebner_basis_in(MonomialOrder::GrevLex);
        let num = hilbert_numerator(&gb.leading_monomials());
        match codim_and_degree(&num) {
            None => (-1, 0),
            Some((c, d)) => (self.ring.nvars() as i64 - c as i64, d),
        }
    }

    pub fn krull_dim(&self) -> i64 {
        self.dimension_degree().0
    }
}

pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check(j)?;
    let mut gens = i.gens.clone();
    gens.extend(j.gens.iter().cloned());
    Ideal::new(&i.ring, gens)
}

pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check(j)?;
    let mut gens = Vec::with_capacity(i.gens.len() * j.gens.len());
    for f in &i.gens {
        for g in &j.gens {
            gens.push(f * &g.in_ring(&i.ring));
        }
    }
    Ideal::new(&i.ring, gens)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1-t)·J`.
pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check(j)?;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(&i.ring));
    }
    let ring = &i.ring;
    let n = ring.nvars();
    let mut names = vec![ring.fresh_name("t")];
    names.extend(ring.vars().iter().cloned());
    let ext = ring.with_vars(names, MonomialOrder::Block(1));
    let up: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for f in &i.gens {
        gens.push(&t * &f.map_vars(&ext, &up));
    }
    for g in &j.gens {
        gens.push(&one_minus_t * &g.map_vars(&ext, &up));
    }
    let gb = buchberger_in(&ext, &gens, MonomialOrder::Block(1), BuchbergerOptions::default())?;
    let mut down = vec![0usize];
    down.extend(0..n);
    let kept = gb
        .elements()
        .iter()
        .filter(|g| !g.involves(0))
        .map(|g| g.map_vars(ring, &down))
        .collect();
    Ideal::new(ring, kept)
}

/// `(I : f) = (1/f)·(I ∩ (f))`.
pub fn colon_poly(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() || i.contains(f) {
        return Ok(Ideal::unit(&i.ring));
    }
    let f = f.in_ring(&i.ring);
    let inter = ideal_intersect(i, &Ideal::new(&i.ring, vec![f.clone()])?)?;
    let gens = inter
        .gens
        .iter()
        .map(|g| g.div_exact(&f).ok_or_else(|| Error::Internal("intersection element not divisible".into())))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&i.ring, gens)
}

/// `(I : J) = ∩_j (I : f_j)`.
pub fn ideal_colon(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check(j)?;
    if j.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut acc: Option<Ideal> = None;
    for f in &j.gens {
        let q = colon_poly(i, f)?;
        if q.is_unit() {
            continue;
        }
        acc = Some(match acc {
            None => q,
            Some(a) => ideal_intersect(&a, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(&i.ring)))
}

/// `(I : J^∞)` by iterating the colon until it stabilizes.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut cur = i.clone();
    loop {
        let next = ideal_colon(&cur, j)?;
        if next.is_subset_of(&cur) {
            return Ok(cur);
        }
        cur = next;
    }
}

/// `I ∩ k[remaining variables]`, generated by the elimination basis elements
/// free of `vars`.
pub fn eliminate(i: &Ideal, vars: &[usize]) -> Result<Ideal> {
    if vars.is_empty() {
        return Ok(i.clone());
    }
    let ring = &i.ring;
    let n = ring.nvars();
    if vars.iter().any(|&v| v >= n) {
        return Err(Error::InvalidVariable(format!("index {}", vars.iter().max().unwrap())));
    }
    let mut perm: Vec<usize> = vars.to_vec();
    perm.sort_unstable();
    perm.dedup();
    let k = perm.len();
    perm.extend((0..n).filter(|v| !vars.contains(v)));
    // new position of old variable v
    let mut to_new = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        to_new[old] = new;
    }
    let names = perm.iter().map(|&v| ring.vars()[v].clone()).collect();
    let order = if k == n { MonomialOrder::GrevLex } else { MonomialOrder::Block(k) };
    let ext = ring.with_vars(names, order);
    let gens: Vec<Polynomial> = i.gens.iter().map(|g| g.map_vars(&ext, &to_new)).collect();
    let gb = buchberger_in(&ext, &gens, order, BuchbergerOptions::default())?;
    let kept = gb
        .elements()
        .iter()
        .filter(|g| (0..k).all(|v| !g.involves(v)))
        .map(|g| g.map_vars(ring, &perm))
        .collect();
    Ideal::new(ring, kept)
}

/// Krull dimension, degree and Hilbert numerator of `R/I` for homogeneous `I`.
pub fn hilbert_data(i: &Ideal) -> Result<HilbertData> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = i.groebner_basis_in(MonomialOrder::GrevLex);
    let numerator = hilbert_numerator(&gb.leading_monomials());
    let (krull_dim, degree) = match codim_and_degree(&numerator) {
        None => (-1, 0),
        Some((c, d)) => (i.ring.nvars() as i64 - c as i64, d),
    };
    Ok(HilbertData { krull_dim, projective_dim: krull_dim - 1, degree, numerator })
}

pub fn ideal_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    i.check(j)?;
    let order = i.ring.order();
    Ok(i.groebner_basis_in(order).elements() == j.groebner_basis_in(order).elements())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::make_ring;

    fn setup() -> (Ring, Vec<Polynomial>) {
        let r = make_ring(&["x", "y", "z", "u"], Field::Rationals, MonomialOrder::GrevLex).unwrap();
        let v = (0..4).map(|i| Polynomial::var(&r, i)).collect();
        (r, v)
    }

    fn id(r: &Ring, gens: &[Polynomial]) -> Ideal {
        Ideal::new(r, gens.to_vec()).unwrap()
    }

    #[test]
    fn sums_products_and_idempotence() {
        let (r, v) = setup();
        let (x, y) = (&v[0], &v[1]);
        assert_eq!(ideal_sum(&id(&r, std::slice::from_ref(x)), &id(&r, std::slice::from_ref(y))).unwrap(), id(&r, &[x.clone(), y.clone()]));
        assert_eq!(ideal_product(&id(&r, std::slice::from_ref(x)), &id(&r, std::slice::from_ref(y))).unwrap(), id(&r, &[x * y]));
        let i = id(&r, &[x * x, x * y]);
        assert_eq!(ideal_sum(&i, &i).unwrap(), i);
    }

    #[test]
    fn intersections() {
        let (r, v) = setup();
        let (x, y) = (&v[0], &v[1]);
        let i = id(&r, std::slice::from_ref(x));
        let j = id(&r, std::slice::from_ref(y));
        assert_eq!(ideal_intersect(&i, &j).unwrap(), id(&r, &[x * y]));
        assert_eq!(ideal_intersect(&i, &i).unwrap(), i);
    }

    #[test]
    fn colons() {
        let (r, v) = setup();
        let (x, y, z, u) = (&v[0], &v[1], &v[2], &v[3]);
        assert_eq!(ideal_colon(&id(&r, &[x * y]), &id(&r, std::slice::from_ref(x))).unwrap(), id(&r, std::slice::from_ref(y)));
        let ci = id(&r, &[x * x, y * y]);
        let i1 = id(&r, &[&(z * x) + &(u * y), x * x, x * y, y * y]);
        let i2 = id(&r, &[&(z * x) - &(u * y), x * x, x * y, y * y]);
        assert_eq!(ideal_colon(&ci, &i1).unwrap(), i2);
        assert_eq!(ideal_colon(&ci, &Ideal::zero(&r)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn fossum_colon() {
        let r = make_ring(&["x1", "x2"], Field::Rationals, MonomialOrder::Lex).unwrap();
        let (a, b) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let ib = id(&r, &[&(&a * &a) + &(&a * &b), &b * &b]);
        let a1 = id(&r, &[a.clone(), &b * &b]);
        let a2 = id(&r, &[&a + &b, &b * &b]);
        assert_eq!(ideal_colon(&ib, &a1).unwrap(), a2);
        assert_eq!(ideal_colon(&ib, &a2).unwrap(), a1);
    }

    #[test]
    fn saturations() {
        let (r, v) = setup();
        let (x, y) = (&v[0], &v[1]);
        let sat = saturate(&id(&r, &[&(x * x) * y]), &id(&r, std::slice::from_ref(y))).unwrap();
        assert_eq!(sat, id(&r, &[x * x]));
        assert_eq!(saturate(&id(&r, std::slice::from_ref(x)), &id(&r, std::slice::from_ref(y))).unwrap(), id(&r, std::slice::from_ref(x)));
        assert_eq!(saturate(&sat, &id(&r, std::slice::from_ref(y))).unwrap(), sat);
    }

    #[test]
    fn elimination() {
        let r = make_ring(&["t", "x", "y"], Field::Rationals, MonomialOrder::GrevLex).unwrap();
        let (t, x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2));
        let one = Polynomial::one(&r);
        let i = id(&r, &[&t * &x, &(&one - &t) * &y]);
        assert_eq!(eliminate(&i, &[0]).unwrap(), id(&r, &[&x * &y]));
        assert_eq!(eliminate(&i, &[]).unwrap(), i);
        let h = id(&r, &[x.clone(), &y * &y]);
        assert!(eliminate(&h, &[0, 1, 2]).unwrap().is_zero());
    }

    #[test]
    fn hilbert_degrees() {
        let (r, v) = setup();
        let (x, y, z, u) = (&v[0], &v[1], &v[2], &v[3]);
        let sq = hilbert_data(&id(&r, &[x * x, x * y, y * y])).unwrap();
        assert_eq!((sq.krull_dim, sq.projective_dim, sq.degree), (2, 1, 3));
        let dl = hilbert_data(&id(&r, &[&(z * x) + &(u * y), x * x, x * y, y * y])).unwrap();
        assert_eq!((dl.projective_dim, dl.degree), (1, 2));
        assert_eq!(hilbert_data(&id(&r, &[x * x, y * y])).unwrap().degree, 4);
        assert_eq!(hilbert_data(&id(&r, &[&(x * x) + y])), Err(Error::NotHomogeneous));
    }

    #[test]
    fn equality() {
        let (r, v) = setup();
        let (x, y) = (&v[0], &v[1]);
        assert!(ideal_equal(&id(&r, &[x.clone(), y.clone()]), &id(&r, &[x + y, y.clone()])).unwrap());
        assert!(!ideal_equal(&id(&r, std::slice::from_ref(x)), &id(&r, &[x * x])).unwrap());
    }
}
