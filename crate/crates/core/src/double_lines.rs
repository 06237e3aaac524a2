//! Pairs of double lines in `P^3` and the decision of whether they are locally
//! algebraically linked (l.a.l.).
//!
//! A double line on the coordinate line `s0 = s1 = 0` is given by two binary
//! forms `a, b` of the same degree in the two remaining (pencil) variables,
//! without common zeros; its ideal is `(a·s0 + b·s1, s0², s0·s1, s1²)`.
//!
//! Two independent routes decide the l.a.l. question:
//!
//! * conditions: evaluate the forms at the meeting point (lines that meet), or
//!   solve for a traceless `2×2` matrix relating the two form pairs (lines
//!   that coincide);
//! * oracle: intersect the two ideals and test the local complete-intersection
//!   property at the meeting point and at sample points (lines that meet), or
//!   search for a complete intersection of two constant quadrics `Y` with
//!   `ℓ1·ℓ2 ∈ Y` and confirm `(Y : I1) = I2` by colon computations (lines that
//!   coincide).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::ideal::{ideal_colon, ideal_intersect, Ideal};
use crate::linalg::Matrix;
use crate::local::{local_ci_test, local_mu, translate_to_origin, LocalPointReport, RationalPoint};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug)]
pub struct DoubleLine {
    ring: Ring,
    support: [usize; 2],
    pencil: [usize; 2],
    a: Polynomial,
    b: Polynomial,
    degree: u32,
}

/// Coefficients of a binary form of degree `r` in `pencil`, index `k` holding
/// the coefficient of `pencil[0]^k · pencil[1]^(r-k)`.
fn binary_coeffs(f: &Polynomial, pencil: [usize; 2], r: u32) -> Vec<Coeff> {
    let n = f.ring().nvars();
    (0..=r)
        .map(|k| {
            let mut e = vec![0u32; n];
            e[pencil[0]] = k;
            e[pencil[1]] = r - k;
            f.coeff_of(&Monomial::from_exponents(&e))
        })
        .collect()
}

pub(crate) fn binary_form(ring: &Ring, pencil: [usize; 2], coeffs: &[Coeff]) -> Polynomial {
    let r = coeffs.len() as u32 - 1;
    let n = ring.nvars();
    let terms = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut e = vec![0u32; n];
            e[pencil[0]] = k as u32;
            e[pencil[1]] = r - k as u32;
            (Monomial::from_exponents(&e), c.clone())
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Homogeneous resultant of two binary forms of formal degree `r`
/// (coefficient vectors as in [`binary_coeffs`]). Zero iff they share a zero in `P^1`.
pub fn binary_resultant(field: &Field, f: &[Coeff], g: &[Coeff]) -> Coeff {
    let r = f.len() - 1;
    if r == 0 {
        // constants: a common zero only when both vanish
        return if field.is_zero(&f[0]) && field.is_zero(&g[0]) { field.zero() } else { field.one() };
    }
    let n = 2 * r;
    let mut m = Matrix::zeros(field, n, n);
    for row in 0..r {
        for k in 0..=r {
            m.set(row, row + k, f[r - k].clone());
            m.set(row + r, row + k, g[r - k].clone());
        }
    }
    m.det(field)
}

impl DoubleLine {
    /// The double line on `x_{s0} = x_{s1} = 0` with ideal `(a·x_{s0} + b·x_{s1}, ...)`.
    pub fn new(ring: &Ring, support: (usize, usize), a: Polynomial, b: Polynomial) -> Result<DoubleLine> {
        if ring.nvars() != 4 {
            return Err(Error::InvalidDoubleLine(format!("needs 4 variables, ring has {}", ring.nvars())));
        }
        let (s0, s1) = support;
        if s0 == s1 || s0 >= 4 || s1 >= 4 {
            return Err(Error::InvalidDoubleLine("support needs two distinct variables".into()));
        }
        let pencil: Vec<usize> = (0..4).filter(|&i| i != s0 && i != s1).collect();
        let pencil = [pencil[0], pencil[1]];
        let a = a.in_ring(ring);
        let b = b.in_ring(ring);
        for f in [&a, &b] {
            if [s0, s1].iter().any(|&v| f.involves(v)) {
                return Err(Error::InvalidDoubleLine(format!("{f} involves a support variable")));
            }
            if !f.is_homogeneous() {
                return Err(Error::InvalidDoubleLine(format!("{f} is not a form")));
            }
        }
        let degree = match (a.total_degree(), b.total_degree()) {
            (None, None) => return Err(Error::InvalidDoubleLine("both forms are zero".into())),
            (Some(d), None) | (None, Some(d)) => d,
            (Some(d), Some(e)) if d == e => d,
            (Some(d), Some(e)) => {
                return Err(Error::InvalidDoubleLine(format!("forms have degrees {d} and {e}")));
            }
        };
        let line = DoubleLine { ring: ring.clone(), support: [s0, s1], pencil, a, b, degree };
        let res = binary_resultant(ring.field(), &line.coeffs_a(), &line.coeffs_b());
        if ring.field().is_zero(&res) {
            return Err(Error::InvalidDoubleLine("forms have a common zero on the support (resultant 0)".into()));
        }
        Ok(line)
    }

    pub fn from_names(ring: &Ring, s0: &str, s1: &str, a: Polynomial, b: Polynomial) -> Result<DoubleLine> {
        let idx = |n: &str| ring.var_index(n).ok_or_else(|| Error::UnknownName(n.to_string()));
        DoubleLine::new(ring, (idx(s0)?, idx(s1)?), a, b)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn support(&self) -> [usize; 2] {
        self.support
    }

    pub fn pencil(&self) -> [usize; 2] {
        self.pencil
    }

    pub fn forms(&self) -> (&Polynomial, &Polynomial) {
        (&self.a, &self.b)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn coeffs_a(&self) -> Vec<Coeff> {
        binary_coeffs(&self.a, self.pencil, self.degree)
    }

    fn coeffs_b(&self) -> Vec<Coeff> {
        binary_coeffs(&self.b, self.pencil, self.degree)
    }

    /// Same ideal: both forms multiplied by a nonzero constant.
    pub fn scaled(&self, c: &Coeff) -> DoubleLine {
        DoubleLine { a: self.a.scale(c), b: self.b.scale(c), ..self.clone() }
    }

    /// The same double line written with the support variables in `order`.
    fn oriented(&self, order: [usize; 2]) -> DoubleLine {
        if order == self.support {
            self.clone()
        } else {
            DoubleLine { support: order, a: self.b.clone(), b: self.a.clone(), ..self.clone() }
        }
    }

    /// Coefficient of support variable `v` in the linear generator.
    fn form_of(&self, v: usize) -> &Polynomial {
        if self.support[0] == v {
            &self.a
        } else {
            &self.b
        }
    }

    /// `a·s0 + b·s1`.
    pub fn linear_generator(&self) -> Polynomial {
        let s0 = Polynomial::var(&self.ring, self.support[0]);
        let s1 = Polynomial::var(&self.ring, self.support[1]);
        &(&self.a * &s0) + &(&self.b * &s1)
    }

    /// A point on the support line with pencil coordinates `(t : 1)`.
    fn point_on_line(&self, t: Coeff) -> RationalPoint {
        let field = self.ring.field();
        let mut coords = vec![field.zero(); 4];
        coords[self.pencil[0]] = t;
        coords[self.pencil[1]] = field.one();
        RationalPoint::projective(field, coords).unwrap()
    }
}

impl fmt::Display for DoubleLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.ring.vars();
        write!(f, "support {},{} pair ({}, {})", v[self.support[0]], v[self.support[1]], self.a, self.b)
    }
}

/// `(a·s0 + b·s1, s0², s0·s1, s1²)`.
pub fn double_line_ideal(line: &DoubleLine) -> Ideal {
    let s0 = Polynomial::var(&line.ring, line.support[0]);
    let s1 = Polynomial::var(&line.ring, line.support[1]);
    Ideal::new(&line.ring, vec![line.linear_generator(), &s0 * &s0, &s0 * &s1, &s1 * &s1]).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportRelation {
    Same,
    /// The lines meet where every variable except `point_var` vanishes.
    Meeting { shared: usize, point_var: usize },
    Disjoint,
}

pub fn support_relation(l1: &DoubleLine, l2: &DoubleLine) -> SupportRelation {
    let common: Vec<usize> = l1.support.iter().copied().filter(|v| l2.support.contains(v)).collect();
    match common.len() {
        2 => SupportRelation::Same,
        1 => {
            let used = [l1.support[0], l1.support[1], l2.support[0], l2.support[1]];
            let point_var = (0..4).find(|v| !used.contains(v)).unwrap();
            SupportRelation::Meeting { shared: common[0], point_var }
        }
        _ => SupportRelation::Disjoint,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    Disjoint,
    MeetingA,
    MeetingB,
    SameSupportEqual,
    SameSupportPm,
    NotLinked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Proportionality constant between the local linear generators.
    Lambda(Coeff),
    /// Traceless invertible `N` with `(a2, b2) = (a1, b1)·N`, rows first.
    Traceless([[Coeff; 2]; 2]),
    /// Human-readable description of the condition that failed.
    FailedCondition(String),
}

impl Witness {
    pub fn describe(&self) -> String {
        match self {
            Witness::Lambda(l) => format!("lambda = {l}"),
            Witness::Traceless(n) => format!("N = [[{}, {}], [{}, {}]]", n[0][0], n[0][1], n[1][0], n[1][1]),
            Witness::FailedCondition(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationVerdict {
    pub lal: bool,
    pub case_tag: CaseTag,
    pub witness: Option<Witness>,
    /// The linkage extension `Y`, when one was constructed.
    pub extension: Option<Ideal>,
}

impl ClassificationVerdict {
    fn linked(case_tag: CaseTag, witness: Option<Witness>, extension: Option<Ideal>) -> Self {
        ClassificationVerdict { lal: true, case_tag, witness, extension }
    }

    fn not_linked(reason: impl Into<String>) -> Self {
        ClassificationVerdict {
            lal: false,
            case_tag: CaseTag::NotLinked,
            witness: Some(Witness::FailedCondition(reason.into())),
            extension: None,
        }
    }
}

fn evaluate_at_point(f: &Polynomial, point_var: usize) -> Coeff {
    let field = f.ring().field();
    let mut p = vec![field.zero(); 4];
    p[point_var] = field.one();
    f.evaluate(&p)
}

/// The meeting-point test for double lines on `s = p = 0` and `s = q = 0`.
/// Writing `b` for the coefficient of `p` in the first line and `d` for that of
/// `q` in the second, both evaluated at the meeting point: both nonzero gives
/// case (a); both zero requires `a·∂d/∂p = c·∂b/∂q` there; exactly one zero is
/// never linked.
pub fn classify_meeting_pair(l1: &DoubleLine, l2: &DoubleLine) -> Result<ClassificationVerdict> {
    let SupportRelation::Meeting { shared, point_var } = support_relation(l1, l2) else {
        return Err(Error::Precondition("supports do not meet in a single point".into()));
    };
    let field = l1.ring.field();
    let p = if l1.support[0] == shared { l1.support[1] } else { l1.support[0] };
    let q = if l2.support[0] == shared { l2.support[1] } else { l2.support[0] };
    let (a, b) = (l1.form_of(shared), l1.form_of(p));
    let (c, d) = (l2.form_of(shared), l2.form_of(q));
    let b0 = evaluate_at_point(b, point_var);
    let d0 = evaluate_at_point(d, point_var);
    match (field.is_zero(&b0), field.is_zero(&d0)) {
        (false, false) => Ok(ClassificationVerdict::linked(CaseTag::MeetingA, None, None)),
        (true, true) => {
            let a0 = evaluate_at_point(a, point_var);
            let c0 = evaluate_at_point(c, point_var);
            let db = evaluate_at_point(&b.derivative(q), point_var);
            let dd = evaluate_at_point(&d.derivative(p), point_var);
            let lhs = field.mul(&a0, &dd);
            let rhs = field.mul(&c0, &db);
            if lhs == rhs {
                let lambda = field.div(&a0, &c0)?;
                Ok(ClassificationVerdict::linked(CaseTag::MeetingB, Some(Witness::Lambda(lambda)), None))
            } else {
                Ok(ClassificationVerdict::not_linked(format!(
                    "a(P)*dd/d{}(P) = {lhs} != {rhs} = c(P)*db/d{}(P)",
                    l1.ring.vars()[p],
                    l1.ring.vars()[q]
                )))
            }
        }
        _ => Ok(ClassificationVerdict::not_linked(format!(
            "exactly one of b(P) = {b0}, d(P) = {d0} vanishes"
        ))),
    }
}

/// Solve `(a2, b2) = (a1, b1)·N` by coefficient comparison, optionally with
/// `trace N = 0`. Returns a particular solution and a basis of the homogeneous
/// solutions, unknowns ordered `n11, n12, n21, n22`.
fn solve_for_n(
    field: &Field,
    l1: &DoubleLine,
    l2: &DoubleLine,
    traceless: bool,
) -> Option<(Vec<Coeff>, Vec<Vec<Coeff>>)> {
    let (a1, b1, a2, b2) = (l1.coeffs_a(), l1.coeffs_b(), l2.coeffs_a(), l2.coeffs_b());
    let z = field.zero();
    // columns: n11 n12 n21 n22 | s (the rhs is multiplied by -s)
    let mut rows = Vec::new();
    for k in 0..a1.len() {
        rows.push(vec![a1[k].clone(), z.clone(), b1[k].clone(), z.clone(), field.neg(&a2[k])]);
        rows.push(vec![z.clone(), a1[k].clone(), z.clone(), b1[k].clone(), field.neg(&b2[k])]);
    }
    if traceless {
        rows.push(vec![field.one(), z.clone(), z.clone(), field.one(), z.clone()]);
    }
    let kernel = Matrix::from_rows(field, &rows, 5).kernel(field);
    let particular = kernel.iter().find(|v| !field.is_zero(&v[4]))?;
    let s_inv = field.inv(&particular[4]).unwrap();
    let particular: Vec<Coeff> = particular[..4].iter().map(|c| field.mul(c, &s_inv)).collect();
    let homogeneous = kernel
        .iter()
        .filter(|v| field.is_zero(&v[4]))
        .map(|v| v[..4].to_vec())
        .collect();
    Some((particular, homogeneous))
}

fn det2(field: &Field, n: &[Coeff]) -> Coeff {
    field.sub(&field.mul(&n[0], &n[3]), &field.mul(&n[1], &n[2]))
}

/// Small grid of points of an affine solution space, particular solution first.
fn grid(field: &Field, particular: &[Coeff], homogeneous: &[Vec<Coeff>]) -> Vec<Vec<Coeff>> {
    let k = homogeneous.len().min(3);
    let mut out = Vec::new();
    let total = 3usize.pow(k as u32);
    for idx in 0..total {
        let mut v = particular.to_vec();
        let mut rem = idx;
        for h in homogeneous.iter().take(k) {
            let t = field.from_i64((rem % 3) as i64);
            rem /= 3;
            for (vi, hi) in v.iter_mut().zip(h) {
                *vi = field.add(vi, &field.mul(&t, hi));
            }
        }
        out.push(v);
    }
    out
}

/// The complete intersection `(q1, q2)` of constant quadrics in the support
/// variables spanning the eigenspace of `S ↦ Nᵀ S N` for eigenvalue `-det N`.
fn extension_from_traceless(line: &DoubleLine, n: &[Coeff]) -> Result<Ideal> {
    let ring = &line.ring;
    let field = ring.field();
    let neg_det = field.neg(&det2(field, n));
    // S = [[s11, s12], [s12, s22]]; (Nᵀ S N)_{ij} = Σ_kl N_ki S_kl N_lj
    let nm = |i: usize, j: usize| n[2 * i + j].clone();
    let sym = [(0usize, 0usize), (0, 1), (1, 1)];
    let mut rows = Vec::new();
    for &(i, j) in &sym {
        let mut row = vec![field.zero(); 3];
        for k in 0..2 {
            for l in 0..2 {
                let coef = field.mul(&nm(k, i), &nm(l, j));
                let col = match (k.min(l), k.max(l)) {
                    (0, 0) => 0,
                    (0, 1) => 1,
                    _ => 2,
                };
                row[col] = field.add(&row[col], &coef);
            }
        }
        let diag = match (i, j) {
            (0, 0) => 0,
            (0, 1) => 1,
            _ => 2,
        };
        row[diag] = field.sub(&row[diag], &neg_det);
        rows.push(row);
    }
    let kernel = Matrix::from_rows(field, &rows, 3).kernel(field);
    if kernel.len() != 2 {
        return Err(Error::Internal(format!("eigenspace of dimension {} for a traceless N", kernel.len())));
    }
    let x = Polynomial::var(ring, line.support[0]);
    let y = Polynomial::var(ring, line.support[1]);
    let two = field.from_i64(2);
    let quadrics = kernel
        .iter()
        .map(|s| {
            let xx = (&x * &x).scale(&s[0]);
            let xy = (&x * &y).scale(&field.mul(&two, &s[1]));
            let yy = (&y * &y).scale(&s[2]);
            &(&xx + &xy) + &yy
        })
        .collect();
    Ideal::new(ring, quadrics)
}

/// `(Y : I1) = I2` and `(Y : I2) = I1`.
fn colon_witness_holds(y: &Ideal, i1: &Ideal, i2: &Ideal) -> Result<bool> {
    Ok(ideal_colon(y, i1)? == *i2 && ideal_colon(y, i2)? == *i1)
}

/// Same support: linked when the ideals are equal or a traceless invertible `N` relates the form pairs.
/// Positive answers carry the extension `Y`, checked by colon computations.
pub fn classify_same_support_pair(l1: &DoubleLine, l2: &DoubleLine) -> Result<ClassificationVerdict> {
    if support_relation(l1, l2) != SupportRelation::Same {
        return Err(Error::Precondition("supports differ".into()));
    }
    let field = l1.ring.field();
    let l2 = l2.oriented(l1.support);
    let cross = &(&l1.a * &l2.b) - &(&l2.a * &l1.b);
    if cross.is_zero() {
        return Ok(ClassificationVerdict::linked(CaseTag::SameSupportEqual, None, None));
    }
    if l1.degree != l2.degree {
        return Ok(ClassificationVerdict::not_linked(format!(
            "form degrees differ ({} vs {})",
            l1.degree, l2.degree
        )));
    }
    let Some((particular, homogeneous)) = solve_for_n(field, l1, &l2, true) else {
        let reason = match solve_for_n(field, l1, &l2, false) {
            Some((n, _)) => format!(
                "(a2, b2) = (a1, b1)*N only for N = [[{}, {}], [{}, {}]] with trace {}",
                n[0],
                n[1],
                n[2],
                n[3],
                field.add(&n[0], &n[3])
            ),
            None => "no constant matrix relates the form pairs".to_string(),
        };
        return Ok(ClassificationVerdict::not_linked(reason));
    };
    let Some(n) = grid(field, &particular, &homogeneous)
        .into_iter()
        .find(|n| !field.is_zero(&det2(field, n)))
    else {
        return Ok(ClassificationVerdict::not_linked("every traceless solution is singular"));
    };
    let y = extension_from_traceless(l1, &n)?;
    let (i1, i2) = (double_line_ideal(l1), double_line_ideal(&l2));
    if !colon_witness_holds(&y, &i1, &i2)? {
        return Err(Error::Discrepancy(format!("traceless N gives Y = {y}, but (Y : I1) != I2")));
    }
    let witness = Witness::Traceless([[n[0].clone(), n[1].clone()], [n[2].clone(), n[3].clone()]]);
    Ok(ClassificationVerdict::linked(CaseTag::SameSupportPm, Some(witness), Some(y)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleVerdict {
    Lal,
    NotLal,
    Inconclusive,
}

impl fmt::Display for OracleVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleVerdict::Lal => "lal",
            OracleVerdict::NotLal => "not_lal",
            OracleVerdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub verdict: OracleVerdict,
    pub reports: Vec<LocalPointReport>,
    /// The union `I1 ∩ I2` (distinct supports) or the constructed `Y` (same support).
    pub extension: Option<Ideal>,
    pub note: String,
}

fn sample_parameter(field: &Field, rng: &mut ChaCha8Rng) -> Coeff {
    match field {
        Field::Prime(p) => Coeff::Fp(rng.gen_range(1..*p)),
        Field::Rationals => field.from_i64(rng.gen_range(1..=50)),
    }
}

/// μ and codimension only, for sample points away from special loci.
fn lci_at(ideal: &Ideal, p: &RationalPoint) -> Result<LocalPointReport> {
    let local = translate_to_origin(ideal, p)?;
    let mu = local_mu(&local)?;
    let codim = (local.ring().nvars() as i64 - local.krull_dim()).max(0) as usize;
    Ok(LocalPointReport {
        point: p.describe(),
        mu,
        codim,
        lci: mu == codim,
        length: None,
        socle_dim: None,
        gorenstein: None,
        slices: Vec::new(),
        inconclusive: false,
    })
}

/// Geometric oracle for lines with distinct supports: the union must be a
/// local complete intersection at the meeting point and at sample points.
pub fn oracle_lal(l1: &DoubleLine, l2: &DoubleLine, seed: u64) -> Result<OracleReport> {
    let relation = support_relation(l1, l2);
    if relation == SupportRelation::Same {
        return same_support_oracle(l1, l2);
    }
    let field = l1.ring.field();
    let union = ideal_intersect(&double_line_ideal(l1), &double_line_ideal(l2))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    if let SupportRelation::Meeting { point_var, .. } = relation {
        let p = RationalPoint::coordinate_point(field, 4, point_var);
        reports.push(local_ci_test(&union, &p, seed)?);
    }
    for line in [l1, l2] {
        for _ in 0..2 {
            let p = line.point_on_line(sample_parameter(field, &mut rng));
            reports.push(lci_at(&union, &p)?);
        }
    }
    let verdict = if reports.iter().all(|r| r.lci) { OracleVerdict::Lal } else { OracleVerdict::NotLal };
    let note = match relation {
        SupportRelation::Meeting { .. } => "union tested at the meeting point and two sample points per line",
        _ => "disjoint supports; union tested at two sample points per line",
    };
    Ok(OracleReport { verdict, reports, extension: Some(union), note: note.into() })
}

/// Quadrics `c0·x² + c1·xy + c2·y²` with `w·c = 0`, as coefficient vectors.
fn quadrics_orthogonal_to(field: &Field, w: &[Coeff]) -> Vec<Vec<Coeff>> {
    Matrix::from_rows(field, &[w.to_vec()], 3).kernel(field)
}

fn is_complete_intersection(field: &Field, q1: &[Coeff], q2: &[Coeff]) -> bool {
    // binary quadrics in (x, y); coefficient of x^k y^(2-k) at index k
    let f = [q1[2].clone(), q1[1].clone(), q1[0].clone()];
    let g = [q2[2].clone(), q2[1].clone(), q2[0].clone()];
    !field.is_zero(&binary_resultant(field, &f, &g))
}

/// Same-support oracle. Equal ideals are linked by a doubling; otherwise look
/// for constant quadrics `Y = (q1, q2)`, a complete intersection, containing
/// `ℓ1·ℓ2`, and confirm the links by colon computations.
fn same_support_oracle(l1: &DoubleLine, l2: &DoubleLine) -> Result<OracleReport> {
    let field = l1.ring.field();
    let (i1, i2) = (double_line_ideal(l1), double_line_ideal(l2));
    if i1 == i2 {
        return Ok(OracleReport {
            verdict: OracleVerdict::Lal,
            reports: Vec::new(),
            extension: None,
            note: "equal ideals".into(),
        });
    }
    let l2 = l2.oriented(l1.support);
    let products = [&l1.a * &l2.a, &(&l1.a * &l2.b) + &(&l2.a * &l1.b), &l1.b * &l2.b];
    let r = l1.degree + l2.degree;
    let coeffs: Vec<Vec<Coeff>> = products.iter().map(|p| binary_coeffs(p, l1.pencil, r)).collect();
    let rows: Vec<Vec<Coeff>> =
        (0..=r as usize).map(|k| vec![coeffs[0][k].clone(), coeffs[1][k].clone(), coeffs[2][k].clone()]).collect();
    let ws = Matrix::from_rows(field, &rows, 3).kernel(field);

    let mut candidates: Vec<Vec<Coeff>> = ws.clone();
    if ws.len() >= 2 {
        for t in 1..=4 {
            let t = field.from_i64(t);
            candidates.push(ws[0].iter().zip(&ws[1]).map(|(a, b)| field.add(a, &field.mul(&t, b))).collect());
        }
    }
    let x = Polynomial::var(&l1.ring, l1.support[0]);
    let y = Polynomial::var(&l1.ring, l1.support[1]);
    let monos = [&x * &x, &x * &y, &y * &y];
    for w in candidates {
        let qs = quadrics_orthogonal_to(field, &w);
        if qs.len() != 2 || !is_complete_intersection(field, &qs[0], &qs[1]) {
            continue;
        }
        let gens = qs
            .iter()
            .map(|q| {
                monos.iter().zip(q).fold(Polynomial::zero(&l1.ring), |acc, (m, c)| &acc + &m.scale(c))
            })
            .collect();
        let candidate = Ideal::new(&l1.ring, gens)?;
        if colon_witness_holds(&candidate, &i1, &i2)? {
            return Ok(OracleReport {
                verdict: OracleVerdict::Lal,
                reports: Vec::new(),
                extension: Some(candidate),
                note: "complete intersection of constant quadrics containing l1*l2, links confirmed".into(),
            });
        }
    }
    Ok(OracleReport {
        verdict: OracleVerdict::NotLal,
        reports: Vec::new(),
        extension: None,
        note: format!("no complete intersection of constant quadrics contains l1*l2 ({} candidates)", ws.len()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassifyMode {
    Conditions,
    Oracle,
    Both,
}

impl std::str::FromStr for ClassifyMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conditions" => Ok(ClassifyMode::Conditions),
            "oracle" => Ok(ClassifyMode::Oracle),
            "both" => Ok(ClassifyMode::Both),
            _ => Err(Error::Usage(format!("unknown mode `{s}` (conditions|oracle|both)"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub verdict: ClassificationVerdict,
    pub conditions: Option<ClassificationVerdict>,
    pub oracle: Option<OracleReport>,
    /// The oracle could not decide (only possible when it ran).
    pub inconclusive: bool,
}

fn conditions_verdict(l1: &DoubleLine, l2: &DoubleLine) -> Result<ClassificationVerdict> {
    match support_relation(l1, l2) {
        SupportRelation::Disjoint => Ok(ClassificationVerdict::linked(CaseTag::Disjoint, None, None)),
        SupportRelation::Meeting { .. } => classify_meeting_pair(l1, l2),
        SupportRelation::Same => classify_same_support_pair(l1, l2),
    }
}

/// Verdict from the oracle alone, tagged by the shape of the pair.
fn oracle_verdict(l1: &DoubleLine, l2: &DoubleLine, report: &OracleReport) -> ClassificationVerdict {
    if report.verdict != OracleVerdict::Lal {
        let reason = match report.reports.iter().find(|r| !r.lci) {
            Some(r) => format!("union is not a local complete intersection at {} (mu {} > codim {})", r.point, r.mu, r.codim),
            None => report.note.clone(),
        };
        return ClassificationVerdict::not_linked(reason);
    }
    let tag = match support_relation(l1, l2) {
        SupportRelation::Disjoint => CaseTag::Disjoint,
        SupportRelation::Meeting { shared, point_var } => {
            let p = if l1.support[0] == shared { l1.support[1] } else { l1.support[0] };
            let b0 = evaluate_at_point(l1.form_of(p), point_var);
            if l1.ring.field().is_zero(&b0) {
                CaseTag::MeetingB
            } else {
                CaseTag::MeetingA
            }
        }
        SupportRelation::Same if report.extension.is_none() => CaseTag::SameSupportEqual,
        SupportRelation::Same => CaseTag::SameSupportPm,
    };
    ClassificationVerdict::linked(tag, None, report.extension.clone())
}

/// Decide whether two double lines are l.a.l. In mode `Both` a disagreement
/// between the two routes is an error.
pub fn classify(l1: &DoubleLine, l2: &DoubleLine, mode: ClassifyMode, seed: u64) -> Result<Classification> {
    if !l1.ring.compatible(&l2.ring) {
        return Err(Error::RingMismatch);
    }
    let conditions = match mode {
        ClassifyMode::Oracle => None,
        _ => Some(conditions_verdict(l1, l2)?),
    };
    let oracle = match mode {
        ClassifyMode::Conditions => None,
        _ => Some(oracle_lal(l1, l2, seed)?),
    };
    let inconclusive = oracle.as_ref().is_some_and(|o| o.verdict == OracleVerdict::Inconclusive);
    let verdict = match (&conditions, &oracle) {
        (Some(c), Some(o)) => {
            if !inconclusive && c.lal != (o.verdict == OracleVerdict::Lal) {
                return Err(Error::Discrepancy(format!(
                    "conditions say lal = {}, oracle says {:?} ({})",
                    c.lal, o.verdict, o.note
                )));
            }
            let mut v = c.clone();
            if v.extension.is_none() {
                v.extension = o.extension.clone().filter(|_| v.lal);
            }
            v
        }
        (Some(c), None) => c.clone(),
        (None, Some(o)) => oracle_verdict(l1, l2, o),
        (None, None) => unreachable!(),
    };
    Ok(Classification { verdict, conditions, oracle, inconclusive })
}
