//! Seeded random instances: double-line pairs of each meeting kind, same-support
//! pairs related by a chosen matrix, and linked triples for campaigns.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::double_lines::{binary_form, binary_resultant, DoubleLine};
use crate::error::Result;
use crate::field::{Coeff, Field};
use crate::ideal::{ideal_colon, Ideal};
use crate::linkage::LinkedTriple;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{make_ring, Ring};

/// `F_31[x, y, z, u]` with grevlex.
pub fn campaign_ring() -> Ring {
    make_ring(&["x", "y", "z", "u"], Field::Prime(31), MonomialOrder::GrevLex).unwrap()
}

fn random_coeff(field: &Field, rng: &mut ChaCha8Rng) -> Coeff {
    match field {
        Field::Prime(p) => Coeff::Fp(rng.gen_range(0..*p)),
        Field::Rationals => field.from_i64(rng.gen_range(-5..=5)),
    }
}

fn random_nonzero(field: &Field, rng: &mut ChaCha8Rng) -> Coeff {
    loop {
        let c = random_coeff(field, rng);
        if !field.is_zero(&c) {
            return c;
        }
    }
}

fn random_coeffs(field: &Field, r: u32, rng: &mut ChaCha8Rng) -> Vec<Coeff> {
    (0..=r).map(|_| random_coeff(field, rng)).collect()
}

fn coprime(field: &Field, a: &[Coeff], b: &[Coeff]) -> bool {
    !field.is_zero(&binary_resultant(field, a, b))
}

/// A random double line of degree `r` on `x_{s0} = x_{s1} = 0`.
pub fn random_double_line(ring: &Ring, support: (usize, usize), r: u32, rng: &mut ChaCha8Rng) -> DoubleLine {
    let field = ring.field();
    let pencil = pencil_of(support);
    loop {
        let (a, b) = (random_coeffs(field, r, rng), random_coeffs(field, r, rng));
        if coprime(field, &a, &b) {
            return line(ring, support, pencil, &a, &b);
        }
    }
}

fn pencil_of(support: (usize, usize)) -> [usize; 2] {
    let p: Vec<usize> = (0..4).filter(|&i| i != support.0 && i != support.1).collect();
    [p[0], p[1]]
}

fn line(ring: &Ring, support: (usize, usize), pencil: [usize; 2], a: &[Coeff], b: &[Coeff]) -> DoubleLine {
    let (a, b) = (binary_form(ring, pencil, a), binary_form(ring, pencil, b));
    DoubleLine::new(ring, support, a, b).expect("generated forms are coprime")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeetingKind {
    /// Neither linear coefficient vanishes at the meeting point.
    A,
    /// Both vanish and the derivative condition holds.
    BHolds,
    /// Both vanish and the derivative condition fails.
    BViolated,
    /// Exactly one vanishes.
    OneSided,
}

/// Lines `x = y = 0` and `x = z = 0` in [`campaign_ring`] order, meeting at
/// `(0:0:0:1)`. Binary-form coefficient `k` multiplies `p0^k · u^(r-k)`, so
/// index 0 is the value at the meeting point and index 1 the first derivative
/// in the non-`u` pencil variable. Kinds other than `A` need `r >= 1`.
pub fn meeting_instance(ring: &Ring, kind: MeetingKind, r: u32, rng: &mut ChaCha8Rng) -> (DoubleLine, DoubleLine) {
    assert!(r >= 1 || kind == MeetingKind::A, "vanishing at a point needs positive degree");
    let field = ring.field();
    let (s1, s2) = ((0, 1), (0, 2));
    loop {
        let mut a = random_coeffs(field, r, rng);
        let mut b = random_coeffs(field, r, rng);
        let mut c = random_coeffs(field, r, rng);
        let mut d = random_coeffs(field, r, rng);
        a[0] = random_nonzero(field, rng);
        c[0] = random_nonzero(field, rng);
        match kind {
            MeetingKind::A => {
                b[0] = random_nonzero(field, rng);
                d[0] = random_nonzero(field, rng);
            }
            MeetingKind::OneSided => {
                b[0] = field.zero();
                d[0] = random_nonzero(field, rng);
                if rng.gen_bool(0.5) {
                    std::mem::swap(&mut b, &mut d);
                }
            }
            MeetingKind::BHolds | MeetingKind::BViolated => {
                b[0] = field.zero();
                d[0] = field.zero();
                // a(P)·d'(P) = c(P)·b'(P) exactly when holding
                let target = field.div(&field.mul(&c[0], &b[1]), &a[0]).unwrap();
                d[1] = if kind == MeetingKind::BHolds {
                    target
                } else {
                    field.add(&target, &random_nonzero(field, rng))
                };
            }
        }
        if coprime(field, &a, &b) && coprime(field, &c, &d) {
            return (line(ring, s1, pencil_of(s1), &a, &b), line(ring, s2, pencil_of(s2), &c, &d));
        }
    }
}

/// A random invertible `2×2` matrix, rows first, with trace zero exactly when
/// `traceless` is set.
pub fn random_invertible(field: &Field, traceless: bool, rng: &mut ChaCha8Rng) -> [[Coeff; 2]; 2] {
    loop {
        let n11 = random_coeff(field, rng);
        let n22 = if traceless { field.neg(&n11) } else { random_coeff(field, rng) };
        let (n12, n21) = (random_coeff(field, rng), random_coeff(field, rng));
        let det = field.sub(&field.mul(&n11, &n22), &field.mul(&n12, &n21));
        let trace_ok = traceless || !field.is_zero(&field.add(&n11, &n22));
        if trace_ok && !field.is_zero(&det) {
            return [[n11, n12], [n21, n22]];
        }
    }
}

/// `L2` on the same support with `(a2, b2) = (a1, b1)·N`.
pub fn same_support_partner(l1: &DoubleLine, n: &[[Coeff; 2]; 2]) -> DoubleLine {
    let (a1, b1) = l1.forms();
    let c = |i: usize, j: usize| n[i][j].clone();
    let a2 = &a1.scale(&c(0, 0)) + &b1.scale(&c(1, 0));
    let b2 = &a1.scale(&c(0, 1)) + &b1.scale(&c(1, 1));
    let s = l1.support();
    DoubleLine::new(l1.ring(), (s[0], s[1]), a2, b2).expect("an invertible N preserves coprimality")
}

fn random_form(ring: &Ring, vars: &[usize], degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let mut terms = Vec::new();
    let mut exps = vec![0u32; ring.nvars()];
    fn rec(
        ring: &Ring,
        vars: &[usize],
        left: u32,
        exps: &mut Vec<u32>,
        out: &mut Vec<(Monomial, Coeff)>,
        rng: &mut ChaCha8Rng,
    ) {
        let field = ring.field();
        if vars.len() == 1 {
            exps[vars[0]] = left;
            out.push((Monomial::from_exponents(exps), random_coeff(field, rng)));
            exps[vars[0]] = 0;
            return;
        }
        for e in 0..=left {
            exps[vars[0]] = e;
            rec(ring, &vars[1..], left - e, exps, out, rng);
        }
        exps[vars[0]] = 0;
    }
    rec(ring, vars, degree, &mut exps, &mut terms, rng);
    Polynomial::from_terms(ring, terms)
}

/// Random form of `degree` in the ideal `(x_{g[0]}, x_{g[1]})`.
fn random_form_in(ring: &Ring, g: [usize; 2], degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let all: Vec<usize> = (0..ring.nvars()).collect();
    let p = random_form(ring, &all, degree - 1, rng);
    let q = random_form(ring, &all, degree - 1, rng);
    &(&p * &Polynomial::var(ring, g[0])) + &(&q * &Polynomial::var(ring, g[1]))
}

/// A linked triple of curves in `P^3`: `I_B` a complete intersection of two
/// forms through the line `x = y = 0`, `I1` that line, `I2 = (I_B : I1)`.
/// `None` when the random forms share a factor.
pub fn random_curve_triple(ring: &Ring, rng: &mut ChaCha8Rng) -> Result<Option<LinkedTriple>> {
    let d1 = rng.gen_range(1..=3);
    let d2 = rng.gen_range(2..=3);
    let f = random_form_in(ring, [0, 1], d1, rng);
    let g = random_form_in(ring, [0, 1], d2, rng);
    let ib = Ideal::new(ring, vec![f, g])?;
    if ib.krull_dim() != 2 {
        return Ok(None);
    }
    let i1 = Ideal::new(ring, vec![Polynomial::var(ring, 0), Polynomial::var(ring, 1)])?;
    let i2 = ideal_colon(&ib, &i1)?;
    Ok(Some(LinkedTriple { ib, i1, i2 }))
}

/// A zero-dimensional linked triple in `k[x1..xn]` supported at the origin:
/// `I_B` a complete intersection of forms `x_i^d + (terms in later variables)`,
/// `I1 = I_B + (m)` for a monomial `m ∉ I_B` of degree 1 or 2, `I2 = (I_B : I1)`.
pub fn random_artinian_triple(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> Result<LinkedTriple> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = make_ring(&names, field.clone(), MonomialOrder::GrevLex)?;
    let all: Vec<usize> = (0..n).collect();
    let degs: Vec<u32> = (0..n).map(|_| rng.gen_range(2..=3)).collect();
    let gens: Vec<Polynomial> = (0..n)
        .map(|i| {
            let pure = Polynomial::var(&ring, i).pow(degs[i]);
            let tail = if i + 1 < n { random_form(&ring, &all[i + 1..], degs[i], rng) } else { Polynomial::zero(&ring) };
            &pure + &tail
        })
        .collect();
    let ib = Ideal::new(&ring, gens)?;
    let m = loop {
        let v = Polynomial::var(&ring, rng.gen_range(0..n));
        let m = if rng.gen_bool(0.5) { v } else { &v * &Polynomial::var(&ring, rng.gen_range(0..n)) };
        if !ib.contains(&m) {
            break m;
        }
    };
    let mut g1 = ib.gens().to_vec();
    g1.push(m);
    let i1 = Ideal::new(&ring, g1)?;
    let i2 = ideal_colon(&ib, &i1)?;
    Ok(LinkedTriple { ib, i1, i2 })
}
