//! Buchberger's algorithm over free modules `R^s`.
//!
//! Polynomial ideals are the rank-one case: [`buchberger`] lifts its generators
//! into `R^1`, runs the module engine and reads the result back. Syzygies come
//! from a module basis of `(g_i, e_i)` under a position-over-term order that
//! eliminates the first component.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{same_ring, Polynomial};
use crate::ring::Ring;

/// How module terms `m·e_i` are compared. In both orders a lower position index
/// is the larger one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    TermOverPosition,
    PositionOverTerm,
}

/// An element of a free module `R^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorElement {
    components: Vec<Polynomial>,
}

impl VectorElement {
    pub fn new(components: Vec<Polynomial>) -> Result<VectorElement> {
        let first = components.first().ok_or(Error::EmptyInput("vector with no components"))?;
        if components.iter().any(|c| !same_ring(c.ring(), first.ring())) {
            return Err(Error::RingMismatch);
        }
        Ok(VectorElement { components })
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn ring(&self) -> &Ring {
        self.components[0].ring()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Constant parts of the components, i.e. the value at the origin.
    pub fn value_at_origin(&self) -> Vec<Coeff> {
        self.components.iter().map(Polynomial::constant_term).collect()
    }
}

type Term = (Monomial, usize, Coeff);

#[derive(Clone, Debug)]
struct SVec {
    terms: Vec<Term>,
}

impl SVec {
    fn lead(&self) -> &Term {
        &self.terms[0]
    }
}

struct Engine<'a> {
    ring: &'a Ring,
    morder: ModuleOrder,
}

impl<'a> Engine<'a> {
    fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let order = self.ring.order();
        match self.morder {
            ModuleOrder::TermOverPosition => order.cmp(a.0, b.0).then(b.1.cmp(&a.1)),
            ModuleOrder::PositionOverTerm => b.1.cmp(&a.1).then_with(|| order.cmp(a.0, b.0)),
        }
    }

    fn to_svec(&self, v: &VectorElement) -> SVec {
        let mut terms: Vec<Term> = Vec::new();
        for (pos, p) in v.components.iter().enumerate() {
            let p = p.in_ring(self.ring);
            terms.extend(p.into_terms().into_iter().map(|(m, c)| (m, pos, c)));
        }
        terms.sort_by(|a, b| self.cmp((&b.0, b.1), (&a.0, a.1)));
        SVec { terms }
    }

    fn to_vector(&self, v: &SVec, rank: usize) -> VectorElement {
        let mut comps: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for (m, pos, c) in &v.terms {
            comps[*pos].push((m.clone(), c.clone()));
        }
        VectorElement {
            components: comps.into_iter().map(|t| Polynomial::from_sorted(self.ring, t)).collect(),
        }
    }

    /// `a - c·m·b`, where the caller guarantees the leading terms cancel.
    fn sub_multiple(&self, a: &[Term], b: &[Term], m: &Monomial, c: &Coeff) -> Vec<Term> {
        let field = self.ring.field();
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |t: &Term| (t.0.mul(m), t.1, field.neg(&field.mul(&t.2, c)));
        while i < a.len() && j < b.len() {
            let bm = b[j].0.mul(m);
            match self.cmp((&a[i].0, a[i].1), (&bm, b[j].1)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(scaled(&b[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = field.sub(&a[i].2, &field.mul(&b[j].2, c));
                    if !field.is_zero(&v) {
                        out.push((bm, a[i].1, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(scaled));
        out
    }

    fn monic(&self, v: &mut SVec) {
        let field = self.ring.field();
        let inv = field.inv(&v.lead().2).expect("nonzero lead");
        for t in v.terms.iter_mut() {
            t.2 = field.mul(&t.2, &inv);
        }
    }

    /// Full reduction of `f` by the monic basis elements accepted by `usable`.
    fn reduce(&self, f: &SVec, basis: &[SVec], usable: impl Fn(usize) -> bool) -> SVec {
        let mut cur = f.terms.clone();
        let mut start = 0;
        let mut rem: Vec<Term> = Vec::new();
        while start < cur.len() {
            let (m, pos, c) = &cur[start];
            let divisor = basis
                .iter()
                .enumerate()
                .find(|(k, g)| usable(*k) && g.lead().1 == *pos && g.lead().0.divides(m));
            match divisor {
                Some((_, g)) => {
                    let q = m.div(&g.lead().0).expect("divisible");
                    let c = c.clone();
                    cur = self.sub_multiple(&cur[start + 1..], &g.terms[1..], &q, &c);
                    start = 0;
                }
                None => {
                    rem.push(cur[start].clone());
                    start += 1;
                }
            }
        }
        SVec { terms: rem }
    }

    fn spoly(&self, f: &SVec, g: &SVec) -> SVec {
        let lcm = f.lead().0.lcm(&g.lead().0);
        let mf = lcm.div(&f.lead().0).unwrap();
        let mg = lcm.div(&g.lead().0).unwrap();
        let field = self.ring.field();
        let one = field.one();
        // both monic: mf*f - mg*g
        let fm: Vec<Term> = f.terms.iter().map(|(m, p, c)| (m.mul(&mf), *p, c.clone())).collect();
        let terms = self.sub_multiple(&fm[1..], &g.terms[1..], &mg, &one);
        SVec { terms }
    }

    /// Buchberger with the Gebauer–Möller update, always treating the pair with
    /// the smallest lcm next. Sugar selection was tried and swells badly in lex
    /// and block orders over Q. Without criteria every pair between active
    /// elements is reduced.
    fn groebner(&self, gens: Vec<SVec>, opts: BuchbergerOptions, rank: usize) -> Vec<SVec> {
        let mut basis: Vec<SVec> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut queue: BTreeSet<(usize, usize)> = BTreeSet::new();
        let product_ok = rank == 1;

        for g in gens {
            let mut r = self.reduce(&g, &basis, |k| active[k]);
            if !r.terms.is_empty() {
                self.monic(&mut r);
                self.update(r, &mut basis, &mut active, &mut queue, opts, product_ok);
            }
        }

        let lcm_of = |basis: &[SVec], (i, j): (usize, usize)| (basis[i].lead().0.lcm(&basis[j].lead().0), basis[i].lead().1);
        while let Some(&(i, j)) = queue.iter().min_by(|&&a, &&b| {
            let (la, pa) = lcm_of(&basis, a);
            let (lb, pb) = lcm_of(&basis, b);
            self.cmp((&la, pa), (&lb, pb)).then(a.cmp(&b))
        }) {
            queue.remove(&(i, j));
            let sp = self.spoly(&basis[i], &basis[j]);
            let mut r = self.reduce(&sp, &basis, |k| active[k]);
            if !r.terms.is_empty() {
                self.monic(&mut r);
                self.update(r, &mut basis, &mut active, &mut queue, opts, product_ok);
            }
        }
        let kept = basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
        self.interreduce(kept)
    }

    fn update(
        &self,
        h: SVec,
        basis: &mut Vec<SVec>,
        active: &mut Vec<bool>,
        queue: &mut BTreeSet<(usize, usize)>,
        opts: BuchbergerOptions,
        product_ok: bool,
    ) {
        let hn = basis.len();
        let (hl, hpos) = (h.lead().0.clone(), h.lead().1);
        let candidates: Vec<(usize, Monomial)> = (0..hn)
            .filter(|&k| active[k] && basis[k].lead().1 == hpos)
            .map(|k| (k, basis[k].lead().0.lcm(&hl)))
            .collect();

        let new_pairs: Vec<usize> = if opts.use_criteria {
            let coprime = |k: usize| product_ok && basis[k].lead().0.is_coprime(&hl);
            // keep (h, g) unless another new lcm properly divides its lcm; among
            // equal lcms keep the first, preferring a coprime pair
            let mut kept: Vec<usize> = Vec::new();
            for (idx, (k, lcm)) in candidates.iter().enumerate() {
                let dominated = candidates.iter().enumerate().any(|(o, (k2, l2))| {
                    o != idx
                        && l2.divides(lcm)
                        && (l2 != lcm || (coprime(*k2) && !coprime(*k)) || (coprime(*k2) == coprime(*k) && o < idx))
                });
                if !dominated {
                    kept.push(idx);
                }
            }
            kept.into_iter().filter(|&idx| !coprime(candidates[idx].0)).map(|idx| candidates[idx].0).collect()
        } else {
            candidates.iter().map(|(k, _)| *k).collect()
        };

        if opts.use_criteria {
            // drop old pairs whose lcm is properly covered through h
            queue.retain(|&(i, j)| {
                if basis[i].lead().1 != hpos {
                    return true;
                }
                let lij = basis[i].lead().0.lcm(&basis[j].lead().0);
                !(hl.divides(&lij) && basis[i].lead().0.lcm(&hl) != lij && basis[j].lead().0.lcm(&hl) != lij)
            });
            for k in 0..hn {
                if active[k] && basis[k].lead().1 == hpos && hl.divides(&basis[k].lead().0) {
                    active[k] = false;
                }
            }
        }
        for k in new_pairs {
            queue.insert((k, hn));
        }
        basis.push(h);
        active.push(true);
    }

    fn interreduce(&self, mut basis: Vec<SVec>) -> Vec<SVec> {
        basis.sort_by(|a, b| self.cmp((&a.lead().0, a.lead().1), (&b.lead().0, b.lead().1)));
        let mut minimal: Vec<SVec> = Vec::new();
        for g in basis {
            let redundant = minimal
                .iter()
                .any(|h| h.lead().1 == g.lead().1 && h.lead().0.divides(&g.lead().0));
            if !redundant {
                minimal.push(g);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let mut r = self.reduce(&minimal[k], &minimal, |j| j != k);
            self.monic(&mut r);
            out.push(r);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Apply the product and chain criteria to prune S-pairs.
    pub use_criteria: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { use_criteria: true }
    }
}

/// A reduced Gröbner basis: monic, interreduced, sorted ascending by leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(&f.in_ring(&self.ring), self).map(|r| r.is_zero()).unwrap_or(false)
    }

    fn svecs(&self, engine: &Engine) -> Vec<SVec> {
        self.elements
            .iter()
            .map(|p| engine.to_svec(&VectorElement { components: vec![p.clone()] }))
            .collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let first = gens.first().ok_or(Error::EmptyInput("no generators"))?;
    buchberger_in(first.ring(), gens, order, BuchbergerOptions::default())
}

/// As [`buchberger`], with an explicit ring so the generator list may be empty.
pub fn buchberger_in(
    ring: &Ring,
    gens: &[Polynomial],
    order: MonomialOrder,
    opts: BuchbergerOptions,
) -> Result<GroebnerBasis> {
    if gens.iter().any(|g| !ring.compatible(g.ring())) {
        return Err(Error::RingMismatch);
    }
    let ring = if ring.order() == order { ring.clone() } else { ring.with_order(order) };
    let engine = Engine { ring: &ring, morder: ModuleOrder::TermOverPosition };
    let svecs = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| engine.to_svec(&VectorElement { components: vec![g.clone()] }))
        .collect();
    let basis = engine.groebner(svecs, opts, 1);
    let elements = basis.iter().map(|v| engine.to_vector(v, 1).components.remove(0)).collect();
    Ok(GroebnerBasis { ring, elements })
}

/// Remainder of `f` on full reduction by `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if !f.ring().compatible(&gb.ring) {
        return Err(Error::RingMismatch);
    }
    if f.ring().order() != gb.order() {
        return Err(Error::OrderMismatch);
    }
    let engine = Engine { ring: &gb.ring, morder: ModuleOrder::TermOverPosition };
    let basis = gb.svecs(&engine);
    let fv = engine.to_svec(&VectorElement { components: vec![f.clone()] });
    let r = engine.reduce(&fv, &basis, |_| true);
    Ok(engine.to_vector(&r, 1).components.remove(0))
}

/// Gröbner basis of the submodule generated by `gens`, reduced and sorted.
pub fn module_groebner(gens: &[VectorElement], order: ModuleOrder) -> Result<Vec<VectorElement>> {
    module_groebner_with(gens, order, BuchbergerOptions::default())
}

pub fn module_groebner_with(
    gens: &[VectorElement],
    order: ModuleOrder,
    opts: BuchbergerOptions,
) -> Result<Vec<VectorElement>> {
    let first = gens.first().ok_or(Error::EmptyInput("no generators"))?;
    let rank = first.rank();
    let ring = first.ring().clone();
    for g in gens {
        if g.rank() != rank {
            return Err(Error::RankMismatch(rank, g.rank()));
        }
        if !same_ring(g.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
    }
    let engine = Engine { ring: &ring, morder: order };
    let svecs = gens.iter().filter(|g| !g.is_zero()).map(|g| engine.to_svec(g)).collect();
    let basis = engine.groebner(svecs, opts, rank);
    Ok(basis.iter().map(|v| engine.to_vector(v, rank)).collect())
}

/// Generators of the syzygy module `{a : Σ a_i g_i = 0}` of `gens`.
pub fn syzygies(gens: &[Polynomial]) -> Result<Vec<VectorElement>> {
    let first = gens.first().ok_or(Error::EmptyInput("syzygies of an empty list"))?;
    let ring = first.ring().clone();
    if gens.iter().any(|g| !same_ring(g.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    let s = gens.len();
    let lifted: Vec<VectorElement> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut comps = vec![Polynomial::zero(&ring); s + 1];
            comps[0] = g.clone();
            comps[i + 1] = Polynomial::one(&ring);
            VectorElement { components: comps }
        })
        .collect();
    let basis = module_groebner(&lifted, ModuleOrder::PositionOverTerm)?;
    let mut out = Vec::new();
    for v in basis {
        if !v.components[0].is_zero() {
            continue;
        }
        let syz = VectorElement { components: v.components[1..].to_vec() };
        let mut sum = Polynomial::zero(&ring);
        for (a, g) in syz.components.iter().zip(gens) {
            sum = &sum + &(a * g);
        }
        if !sum.is_zero() {
            return Err(Error::Internal("syzygy does not annihilate the generators".into()));
        }
        out.push(syz);
    }
    Ok(out)
}
