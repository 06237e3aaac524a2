//! Hilbert series of monomial ideals.

use crate::monomial::Monomial;

/// Univariate integer polynomial, coefficient of `t^k` at index `k`.
pub type IntPoly = Vec<i64>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn shift(p: &IntPoly, k: u32) -> IntPoly {
    let mut out = vec![0i64; k as usize];
    out.extend_from_slice(p);
    out
}

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Drop generators divisible by another; equal duplicates keep one copy.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^n` of `k[x]/(gens)`.
pub fn hilbert_numerator(gens: &[Monomial]) -> IntPoly {
    let gens = minimalize(gens);
    numerator_rec(&gens)
}

fn numerator_rec(gens: &[Monomial]) -> IntPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return vec![0];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![1], |acc, m| {
            let mut f = vec![0i64; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            mul(&acc, &f)
        });
    }
    // N(I) = N(I') - t^deg(m) N(I' : m), with I = I' + (m)
    let (m, rest) = gens.split_last().unwrap();
    let colon: Vec<Monomial> = rest.iter().map(|g| g.div(&g.gcd(m)).unwrap()).collect();
    let colon = minimalize(&colon);
    sub(&numerator_rec(rest), &shift(&numerator_rec(&colon), m.degree()))
}

/// `(codim, degree)` from a numerator: `N(t) = (1-t)^codim Q(t)` with `Q(1) != 0`.
/// The zero numerator (unit ideal) has no codimension.
pub fn codim_and_degree(numerator: &IntPoly) -> Option<(usize, i64)> {
    if numerator.iter().all(|&c| c == 0) {
        return None;
    }
    let mut q = numerator.clone();
    let mut codim = 0;
    loop {
        let at_one: i64 = q.iter().sum();
        if at_one != 0 {
            return Some((codim, at_one));
        }
        // synthetic division by (1 - t): q = (1-t) s, s_k = sum_{i<=k} q_i
        let mut s = Vec::with_capacity(q.len() - 1);
        let mut acc = 0;
        for c in &q[..q.len() - 1] {
            acc += c;
            s.push(acc);
        }
        q = trim(s);
        codim += 1;
    }
}

/// Monomials not divisible by any generator; `None` when there are infinitely many.
pub fn standard_monomials(gens: &[Monomial], nvars: usize) -> Option<Vec<Monomial>> {
    let mut bounds = vec![u32::MAX; nvars];
    for g in gens {
        let support: Vec<usize> = (0..nvars).filter(|&i| g.exponents()[i] > 0).collect();
        if support.len() == 1 {
            let i = support[0];
            bounds[i] = bounds[i].min(g.exponents()[i]);
        }
        if g.is_one() {
            return Some(Vec::new());
        }
    }
    if bounds.contains(&u32::MAX) {
        return None;
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::from_exponents(&exps);
        if !gens.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
        let mut i = 0;
        loop {
            if i == nvars {
                return Some(out);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}
