//! Liftings of a saturated ideal `I'` to one more variable.
//!
//! Given `I'` in `K[x0..x_{n-1}]` and a Hilbert polynomial `p` with
//! `p(t) - p(t-1)` equal to the Hilbert polynomial of `I'`, this module
//! enumerates the quasi-stable saturated monomial liftings `J` of `in(I')`
//! and, for each of them, produces a chart: a parametric family of
//! polynomials together with the constraint ideal whose rational points give
//! liftings of `I'`.
//!
//! Two kinds of chart are built. [`lifting_gs`] works inside the Groebner
//! stratum of `J`; [`lifting_ms`] works with marked bases over the Pommaret
//! basis of a truncation of `J`, whose charts are open and may contain
//! liftings with a different initial ideal.
//!
//! The enumeration uses a recursion on the number of variables rather than a
//! search bounded by the Gotzmann number: a saturated quasi-stable `J` in `r`
//! variables has no generator divisible by the last variable, so it is the
//! extension of a quasi-stable `L` in `r - 1` variables; `L` differs from
//! `L^sat` by finitely many terms, and `L^sat` is again saturated
//! quasi-stable with Hilbert polynomial `Δp`.


use num_traits::{Signed, Zero};
use rand::Rng;

use crate::algebra::{monomials_of_degree, FieldPoly, Monomial, ParamPoly, Rational, Ring};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::hilbert::HilbertPoly;
use crate::linalg;
use crate::monomial_ideal::MonomialIdeal;
use crate::par;
use crate::parametric::{
    generic_marked_set, generic_stratum_set, marked_constraints, stratum_constraints,
    solvable_variable, ConstraintIdeal, Flavor, MarkedPoly, MarkedReducer, MarkedSet, Strategy,
};

/// The Hilbert polynomial `p` with `Δp = p_y` and `p(0) = c`.
pub fn admissible_polynomial(p_y: &HilbertPoly, c: i64) -> Result<HilbertPoly> {
    if !p_y.is_numerical() {
        return Err(Error::NotAdmissible(format!("{} is not a numerical polynomial", p_y)));
    }
    Ok(p_y.antidifference(c))
}

/// Gotzmann number of `p`: the number of terms in its expansion
/// `p(t) = sum_{i=1..r} C(t + a_i - i + 1, a_i)` with `a_1 >= ... >= a_r >= 0`.
pub fn gotzmann_number(p: &HilbertPoly) -> Result<u32> {
    const LIMIT: u32 = 100_000;
    let mut rest = p.clone();
    let mut r: u32 = 0;
    while !rest.is_zero() {
        let d = rest.degree();
        if rest.coeffs()[d as usize].is_negative() || r >= LIMIT {
            return Err(Error::NotAdmissible(format!(
                "{} is not the Hilbert polynomial of a projective scheme",
                p
            )));
        }
        rest = rest.sub(&HilbertPoly::binomial(d - r as i64, d as u32));
        r += 1;
    }
    Ok(r)
}

/// Output of [`enumerate_monomial_liftings`].
#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Every saturated quasi-stable ideal in one more variable with Hilbert polynomial `p`.
    pub pool: Vec<MonomialIdeal>,
    /// Those whose saturated section is `J'`.
    pub liftings: Vec<MonomialIdeal>,
    pub gotzmann: u32,
}

/// Saturated quasi-stable ideals in `nvars` variables with Hilbert polynomial `p`,
/// sorted.
pub fn saturated_quasi_stable(nvars: usize, p: &HilbertPoly) -> Vec<MonomialIdeal> {
    let mut out = sat_qs(nvars, p);
    out.sort();
    out
}

fn sat_qs(nvars: usize, p: &HilbertPoly) -> Vec<MonomialIdeal> {
    if nvars == 0 {
        return Vec::new();
    }
    if nvars == 1 {
        return match p.coeffs() {
            [] => vec![MonomialIdeal::unit(1)],
            [c] if c == &Rational::from_integer(1.into()) => vec![MonomialIdeal::zero(1)],
            _ => Vec::new(),
        };
    }
    let sections = sat_qs(nvars - 1, &p.delta());
    let found = par::map(&sections, |m| {
        let rest = p.sub(&m.extend().hilbert_polynomial());
        let e = match rest.coeffs() {
            [] => 0,
            [c] if c.is_integer() && !c.is_negative() => match c.numer().try_into() {
                Ok(e) => e,
                Err(_) => return Vec::new(),
            },
            _ => return Vec::new(),
        };
        let mut out = Vec::new();
        for s in downsets(m, e) {
            let l = remove_terms(m, &s);
            if l.is_quasi_stable() {
                out.push(l.extend());
            }
        }
        out
    });
    found.into_iter().flatten().collect()
}

/// Sets of `e` terms of `M` closed under taking divisors inside `M`.
fn downsets(m: &MonomialIdeal, e: usize) -> Vec<Vec<Monomial>> {
    if e == 0 {
        return vec![Vec::new()];
    }
    if m.is_zero() {
        return Vec::new();
    }
    // a chain of e terms starts at a generator, so degrees stay below maxgen + e
    let top = m.max_gen_degree() + e as u32 - 1;
    let mut cand: Vec<Monomial> = Vec::new();
    for d in 0..=top {
        cand.extend(m.terms_of_degree(d));
    }
    let mut out = Vec::new();
    let mut chosen: Vec<Monomial> = Vec::new();
    grow(m, &cand, 0, e, &mut chosen, &mut out);
    out
}

fn grow(
    m: &MonomialIdeal,
    cand: &[Monomial],
    from: usize,
    left: usize,
    chosen: &mut Vec<Monomial>,
    out: &mut Vec<Vec<Monomial>>,
) {
    if left == 0 {
        out.push(chosen.clone());
        return;
    }
    for k in from..cand.len() {
        let t = &cand[k];
        // divisors come earlier in the candidate order, so each set is built once
        let closed = t.support().all(|(i, _)| {
            let u = t.div(&Monomial::var(i)).unwrap();
            !m.contains(&u) || chosen.contains(&u)
        });
        if closed {
            chosen.push(t.clone());
            grow(m, cand, k + 1, left - 1, chosen, out);
            chosen.pop();
        }
    }
}

/// The ideal whose terms are those of `M` outside `s`.
fn remove_terms(m: &MonomialIdeal, s: &[Monomial]) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = m.gens().iter().filter(|g| !s.contains(g)).cloned().collect();
    for t in s {
        for i in 0..m.nvars() {
            let u = t.mul_var(i);
            if !s.contains(&u) {
                gens.push(u);
            }
        }
    }
    MonomialIdeal::new(m.nvars(), gens)
}

/// All saturated quasi-stable `J` in one more variable with Hilbert polynomial
/// `p`, and among them the liftings of `J'`.
pub fn enumerate_monomial_liftings(jprime: &MonomialIdeal, p: &HilbertPoly) -> Result<Enumeration> {
    if !jprime.is_quasi_stable() {
        return Err(Error::NotQuasiStable(format!("{} is not quasi-stable", jprime)));
    }
    if !jprime.is_saturated() {
        return Err(Error::Precondition(format!("{} is not saturated", jprime)));
    }
    check_admissible(&jprime.hilbert_polynomial(), p)?;
    let gotzmann = gotzmann_number(p)?;
    let pool = saturated_quasi_stable(jprime.nvars() + 1, p);
    let liftings = pool
        .iter()
        .filter(|j| &j.section().saturation() == jprime)
        .cloned()
        .collect();
    Ok(Enumeration {
        pool,
        liftings,
        gotzmann,
    })
}

fn check_admissible(p_y: &HilbertPoly, p: &HilbertPoly) -> Result<()> {
    if &p.delta() != p_y {
        return Err(Error::NotAdmissible(format!(
            "the first difference of {} is {}, not the Hilbert polynomial {} of I'",
            p,
            p.delta(),
            p_y
        )));
    }
    Ok(())
}

/// `I'` with a target Hilbert polynomial, validated.
#[derive(Clone, Debug)]
pub struct LiftingProblem {
    ring: Ring,
    iprime: GroebnerBasis,
    jprime: MonomialIdeal,
    hp: HilbertPoly,
}

impl LiftingProblem {
    /// `ring` is the ring of the liftings; `I'` lives in its section.
    pub fn new(ring: Ring, iprime_gens: &[FieldPoly], hp: HilbertPoly) -> Result<Self> {
        if ring.nvars() < 2 {
            return Err(Error::Precondition("liftings need at least two variables".into()));
        }
        let iprime = buchberger(&ring.section(), iprime_gens)?;
        if !iprime.is_saturated()? {
            return Err(Error::Precondition("I' is not saturated".into()));
        }
        let jprime = iprime.initial_ideal();
        check_admissible(&iprime.hilbert_polynomial(), &hp)?;
        Ok(LiftingProblem {
            ring,
            iprime,
            jprime,
            hp,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn iprime(&self) -> &GroebnerBasis {
        &self.iprime
    }

    pub fn jprime(&self) -> &MonomialIdeal {
        &self.jprime
    }

    pub fn hp(&self) -> &HilbertPoly {
        &self.hp
    }

    pub fn enumerate(&self) -> Result<Enumeration> {
        enumerate_monomial_liftings(&self.jprime, &self.hp)
    }
}

/// One output unit: a monomial lifting `J`, a parametric family and the
/// constraints on its parameters.
#[derive(Clone, Debug)]
pub struct LiftingChart {
    pub j: MonomialIdeal,
    /// Satiety of the section of `J` for marked charts; `None` for strata.
    pub m: Option<u32>,
    pub family: MarkedSet,
    /// The full constraint ideal (`a_J + b` or `A + B`).
    pub constraints: ConstraintIdeal,
    /// The part coming from the comparison with `I'` (`b` or `B`).
    pub section_constraints: ConstraintIdeal,
}

impl LiftingChart {
    pub fn is_marked(&self) -> bool {
        self.m.is_some()
    }

    pub fn nvars(&self) -> usize {
        self.family.nvars()
    }

    /// Specializes the family at a point of the parameter space.
    pub fn specialize(&self, point: &[Rational]) -> Vec<FieldPoly> {
        self.family.specialize(point)
    }

    /// The ideal a point stands for: the specialized family for a stratum
    /// chart, the saturation of the truncation it generates for a marked one.
    pub fn lifting_at(&self, point: &[Rational]) -> Result<GroebnerBasis> {
        let gb = buchberger(&Ring::new(self.nvars()), &self.specialize(point))?;
        if self.is_marked() {
            gb.saturation()
        } else {
            Ok(gb)
        }
    }

    /// Indices of the parameters in the `x_n`-free part of the family.
    pub fn section_parameters(&self) -> Vec<usize> {
        let last = self.nvars() - 1;
        let mut out = Vec::new();
        for p in self.family.polys() {
            if p.head.exponent(last) > 0 {
                continue;
            }
            for (t, c) in p.tail.terms() {
                if t.exponent(last) == 0 {
                    if let Some(k) = param_index(c) {
                        out.push(k);
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Dimension of the affine space cut out by the linear section
    /// constraints on the `x_n`-free parameters; `None` when it is empty.
    pub fn free_section_parameters(&self) -> Option<usize> {
        let vars = self.section_parameters();
        let (_, kernel) = linalg::solve_linear(self.section_constraints.gens(), self.family.alphabet().len())?;
        Some(
            kernel
                .iter()
                .filter(|v| vars.iter().any(|&k| !v[k].is_zero()))
                .count(),
        )
    }
}

/// The parameter index of a coefficient that is a single parameter.
pub fn param_index(c: &FieldPoly) -> Option<usize> {
    match c.terms() {
        [(m, k)] if m.degree() == 1 && num_traits::One::is_one(k) => m.support().next().map(|(v, _)| v),
        _ => None,
    }
}

/// Normal form of each term of `f` modulo a field basis, coefficients kept.
pub fn param_normal_form(f: &ParamPoly, gb: &GroebnerBasis) -> ParamPoly {
    let mut acc: Vec<(Monomial, FieldPoly)> = Vec::new();
    for (m, c) in f.terms() {
        let nf = gb.normal_form(&FieldPoly::monomial(m.clone()));
        for (t, e) in nf.terms() {
            acc.push((t.clone(), c.scale(e)));
        }
    }
    ParamPoly::from_terms(acc)
}

/// Charts through Groebner strata, one per monomial lifting of `in(I')`.
pub fn lifting_gs(problem: &LiftingProblem) -> Result<Vec<LiftingChart>> {
    if !problem.jprime.is_saturated() {
        return Err(Error::Precondition(
            "the last variable of the section ring is not generic for I' (in(I') is not saturated)".into(),
        ));
    }
    let liftings = problem.enumerate()?.liftings;
    par::try_map(&liftings, |j| stratum_chart(problem, j))
}

/// The Groebner-stratum chart of one monomial lifting `J`.
pub fn stratum_chart(problem: &LiftingProblem, j: &MonomialIdeal) -> Result<LiftingChart> {
    let family = generic_stratum_set(j);
    let a = stratum_constraints(&family, Strategy::FirstDivisor);
    let last = j.nvars() - 1;
    let mut b = ConstraintIdeal::new(family.alphabet().clone());
    for f in family.polys() {
        if f.head.exponent(last) > 0 {
            continue;
        }
        let restricted = f.to_poly().subst_zero(last);
        let r = param_normal_form(&restricted, &problem.iprime);
        b.push_coefficients(&r, &format!("NF(f[{}])", f.head));
    }
    let mut constraints = a;
    constraints.extend(&b);
    Ok(LiftingChart {
        j: j.clone(),
        m: None,
        family,
        constraints,
        section_constraints: b,
    })
}

/// Marked-basis charts, one per monomial lifting of the quasi-stable `in(I')`.
pub fn lifting_ms(problem: &LiftingProblem) -> Result<Vec<LiftingChart>> {
    let liftings = problem.enumerate()?.liftings;
    par::try_map(&liftings, |j| marked_chart(problem, j))
}

/// The marked chart of `J` over `P(J_{>=m-1})`, `m` the satiety of the section of `J`.
pub fn marked_chart(problem: &LiftingProblem, j: &MonomialIdeal) -> Result<LiftingChart> {
    let m = j.section().satiety();
    let family = generic_marked_set(j, m.saturating_sub(1))?;
    let a = marked_constraints(&family)?;
    let last = j.nvars() - 1;
    let mut reducer = MarkedReducer::new(&family);
    let mut section: Vec<(String, ParamPoly)> = Vec::new();
    for t in family.head_ideal().terms_of_degree(m) {
        if t.exponent(last) > 0 {
            continue;
        }
        let g = ParamPoly::monomial(t.clone()).sub(&reducer.term_nf(&t)?);
        section.push((format!("NF(g[{}])", t), g.subst_zero(last)));
    }
    for f in family.polys() {
        if f.head.degree() > m && f.head.exponent(last) == 0 {
            section.push((format!("NF(f[{}])", f.head), f.to_poly().subst_zero(last)));
        }
    }
    let mut b = ConstraintIdeal::new(family.alphabet().clone());
    for (tag, g) in &section {
        b.push_coefficients(&param_normal_form(g, &problem.iprime), tag);
    }
    let mut constraints = a;
    constraints.extend(&b);
    Ok(LiftingChart {
        j: j.clone(),
        m: Some(m),
        family,
        constraints,
        section_constraints: b,
    })
}

/// Membership verdict with the parameter point read off the ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct Membership {
    pub member: bool,
    pub point: Option<Vec<Rational>>,
    pub reason: String,
}

/// Decides whether the saturated ideal `I` is a point of the chart.
pub fn membership(i_gens: &[FieldPoly], chart: &LiftingChart) -> Result<Membership> {
    let ring = Ring::new(chart.nvars());
    let i = buchberger(&ring, i_gens)?;
    if !i.is_saturated()? {
        return Err(Error::Precondition("membership needs a saturated ideal".into()));
    }
    let point = if chart.is_marked() {
        marked_coordinates(&i, &chart.family)
    } else {
        stratum_coordinates(&i, &chart.family)
    };
    Ok(match point {
        Err(reason) => Membership {
            member: false,
            point: None,
            reason,
        },
        Ok(point) => {
            let ok = chart.constraints.is_satisfied(&point);
            Membership {
                member: ok,
                reason: if ok {
                    "coordinates satisfy the constraints".into()
                } else {
                    "coordinates violate the constraints".into()
                },
                point: Some(point),
            }
        }
    })
}

/// Coordinates of `I` in a stratum family: `in(I)` must be the head ideal.
pub fn stratum_coordinates(i: &GroebnerBasis, family: &MarkedSet) -> std::result::Result<Vec<Rational>, String> {
    let inn = i.initial_ideal();
    if &inn != family.head_ideal() {
        return Err(format!("in(I) = {} differs from {}", inn, family.head_ideal()));
    }
    let mut point = vec![Rational::zero(); family.alphabet().len()];
    for f in family.polys() {
        let g = i
            .polys()
            .iter()
            .find(|g| g.leading_monomial() == Some(&f.head))
            .ok_or_else(|| format!("no basis element with head {}", f.head))?;
        read_tail(g, f, &mut point)?;
    }
    Ok(point)
}

fn read_tail(g: &FieldPoly, f: &MarkedPoly, point: &mut [Rational]) -> std::result::Result<(), String> {
    let mut seen = 0;
    for (t, c) in f.tail.terms() {
        let k = param_index(c).ok_or_else(|| format!("tail of {} is not generic", f.head))?;
        if let Some(v) = g.coeff(t) {
            point[k] = v.clone();
            seen += 1;
        }
    }
    if seen + 1 != g.len() {
        return Err(format!("basis element with head {} has terms outside the tail", f.head));
    }
    Ok(())
}

/// Coordinates of `I` in a marked family: in each degree `d` of the heads,
/// `I_d` must be a complement of `<N(J)_d>`, and projecting onto the
/// `J_d` coordinates gives the marked polynomials.
pub fn marked_coordinates(i: &GroebnerBasis, family: &MarkedSet) -> std::result::Result<Vec<Rational>, String> {
    let heads = family.head_ideal();
    let mut degrees: Vec<u32> = family.polys().iter().map(|p| p.head.degree()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut point = vec![Rational::zero(); family.alphabet().len()];
    for d in degrees {
        let rows = graded_piece(i, d);
        let inside = heads.terms_of_degree(d);
        let outside = heads.sous_escalier(d);
        let columns: Vec<Monomial> = inside.iter().chain(&outside).cloned().collect();
        let mut m = linalg::coefficient_rows(&rows, &columns);
        let pivots = linalg::row_reduce(&mut m, columns.len());
        if pivots.len() != inside.len() || pivots.iter().enumerate().any(|(k, &p)| k != p) {
            return Err(format!("N(J)_{} is not a basis of the quotient in degree {}", d, d));
        }
        for f in family.polys().iter().filter(|p| p.head.degree() == d) {
            let r = inside.iter().position(|t| t == &f.head).unwrap();
            for (t, c) in f.tail.terms() {
                let k = param_index(c).ok_or_else(|| format!("tail of {} is not generic", f.head))?;
                let col = inside.len() + outside.iter().position(|u| u == t).unwrap();
                point[k] = m[r][col].clone();
            }
        }
    }
    Ok(point)
}

/// A spanning set of `I_d`.
pub fn graded_piece(i: &GroebnerBasis, d: u32) -> Vec<FieldPoly> {
    let mut rows = Vec::new();
    for g in i.polys() {
        let e = g.degree();
        if e > d {
            continue;
        }
        for q in monomials_of_degree(i.nvars(), d - e) {
            rows.push(g.mul_monomial(&q));
        }
    }
    rows
}

/// Random small value, zero half of the time.
fn small_value(rng: &mut impl Rng) -> Rational {
    if rng.gen_bool(0.5) {
        Rational::zero()
    } else {
        let v: i64 = rng.gen_range(1..=3);
        Rational::from_integer((if rng.gen_bool(0.5) { v } else { -v }).into())
    }
}

/// Looks for a rational point of `V(ideal)`.
///
/// Parameters are fixed one at a time and substituted. A generator of the
/// form `c v + r` with `c` and `r` constant forces `v`; otherwise a parameter
/// of the shortest generator (other than one it could be solved for) gets a
/// random small value. The result is checked exactly, and the search
/// restarts up to `tries` times.
pub fn sample_solution(ideal: &ConstraintIdeal, rng: &mut impl Rng, tries: usize) -> Option<Vec<Rational>> {
    let n = ideal.alphabet().len();
    for _ in 0..tries {
        if let Some(p) = sample_once(ideal.gens(), n, rng) {
            if ideal.is_satisfied(&p) {
                return Some(p);
            }
        }
    }
    None
}

fn sample_once(gens: &[FieldPoly], n: usize, rng: &mut impl Rng) -> Option<Vec<Rational>> {
    let mut point: Vec<Option<Rational>> = vec![None; n];
    let mut gens: Vec<FieldPoly> = gens.to_vec();
    loop {
        gens.retain(|g| !g.is_zero());
        if gens.iter().any(|g| g.is_constant()) {
            return None;
        }
        let Some(g) = gens.iter().min_by_key(|g| g.len()) else { break };
        let (v, value) = match solvable_variable(g) {
            Some((v, r)) if r.is_constant() => (v, r.terms().first().map(|t| t.1.clone()).unwrap_or_default()),
            solvable => {
                let skip = solvable.map(|(v, _)| v);
                let v = g
                    .support()
                    .flat_map(|m| m.support().map(|(v, _)| v))
                    .find(|&u| Some(u) != skip)
                    .or(skip)?;
                (v, small_value(rng))
            }
        };
        gens = gens.iter().map(|g| g.subst_value(v, &value)).collect();
        point[v] = Some(value);
    }
    Some(point.into_iter().map(|x| x.unwrap_or_else(|| small_value(rng))).collect())
}

/// Points of a marked chart from points of another chart: the ideal is
/// rebuilt and its marked coordinates read off.
pub fn transport_point(
    from: &LiftingChart,
    point: &[Rational],
    to: &LiftingChart,
) -> Result<Option<Vec<Rational>>> {
    let polys = from.specialize(point);
    Ok(membership(&polys, to)?.point)
}

/// The `x_n`-free part of a stratum family with its linear section
/// constraints solved: the new parameters `t1, t2, ...` are coordinates on
/// their solution space. `None` when the constraints are inconsistent.
pub fn restricted_section_family(chart: &LiftingChart) -> Option<MarkedSet> {
    let n = chart.family.alphabet().len();
    let (particular, kernel) = linalg::solve_linear(chart.section_constraints.gens(), n)?;
    let vars = chart.section_parameters();
    let kernel: Vec<Vec<Rational>> = kernel
        .into_iter()
        .filter(|v| vars.iter().any(|&k| !v[k].is_zero()))
        .collect();
    let mut alphabet = crate::algebra::Alphabet::default();
    for k in 0..kernel.len() {
        alphabet.push(format!("t{}", k + 1));
    }
    let value = |k: usize| -> FieldPoly {
        let mut terms = vec![(Monomial::one(), particular[k].clone())];
        for (i, v) in kernel.iter().enumerate() {
            terms.push((Monomial::var(i), v[k].clone()));
        }
        FieldPoly::from_terms(terms)
    };
    let last = chart.nvars() - 1;
    let polys: Vec<MarkedPoly> = chart
        .family
        .polys()
        .iter()
        .filter(|p| p.head.exponent(last) == 0)
        .map(|p| {
            let tail = p
                .tail
                .terms()
                .iter()
                .filter(|(t, _)| t.exponent(last) == 0)
                .map(|(t, c)| (t.clone(), value(param_index(c).unwrap())));
            MarkedPoly {
                head: p.head.clone(),
                tail: ParamPoly::from_terms(tail.collect::<Vec<_>>()),
            }
        })
        .collect();
    let heads = MonomialIdeal::new(last, polys.iter().map(|p| p.head.clone()));
    Some(MarkedSet::from_parts(last, heads, polys, alphabet, Flavor::Stratum))
}

/// Random liftings in the stratum of a stratum chart, as generator lists.
///
/// A base point comes from the solved section constraints: the `x_n`-free
/// family at random `t` generates `H`, and `H` extended is a lifting when
/// those polynomials are a Groebner basis with heads `J`. The base is then
/// moved by `x_j -> x_j + l_j x_n` and `x_n -> c x_n`. Every term only drops
/// in degrevlex under the shear, and `x_n = 0` is untouched, so the image
/// stays in the same stratum and restricts to the same `H`.
pub fn sample_liftings(chart: &LiftingChart, rng: &mut impl Rng, count: usize, tries: usize) -> Result<Vec<Vec<FieldPoly>>> {
    if chart.is_marked() {
        return Err(Error::Precondition("liftings are sampled from stratum charts".into()));
    }
    let Some(section) = restricted_section_family(chart) else {
        return Ok(Vec::new());
    };
    let n = chart.nvars();
    let last = n - 1;
    let mut out = Vec::new();
    for _ in 0..tries {
        if out.len() == count {
            break;
        }
        let t: Vec<Rational> = (0..section.alphabet().len()).map(|_| small_value(rng)).collect();
        let base = section.specialize(&t);
        let mut images: Vec<FieldPoly> = (0..last)
            .map(|j| FieldPoly::var(j).add(&FieldPoly::var(last).scale(&small_value(rng))))
            .collect();
        let c = loop {
            let c = small_value(rng);
            if !c.is_zero() {
                break c;
            }
        };
        images.push(FieldPoly::var(last).scale(&c));
        let gens: Vec<FieldPoly> = base.iter().map(|g| g.substitute(&images)).collect();
        if membership(&gens, chart)?.member {
            out.push(gens);
        }
    }
    Ok(out)
}

/// Points of `chart` read off sampled liftings of `source`, a stratum chart.
pub fn sample_points(
    source: &LiftingChart,
    chart: &LiftingChart,
    rng: &mut impl Rng,
    count: usize,
) -> Result<Vec<Vec<Rational>>> {
    let mut out = Vec::new();
    for gens in sample_liftings(source, rng, count, 4 * count)? {
        let m = membership(&gens, chart)?;
        if let (true, Some(p)) = (m.member, m.point) {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polys;

    #[test]
    fn admissible_polynomials() {
        let py = HilbertPoly::from_ints(&[3, 2]);
        assert_eq!(admissible_polynomial(&py, 0).unwrap().to_string(), "t^2 + 4*t");
        assert_eq!(admissible_polynomial(&HilbertPoly::zero(), 3).unwrap(), HilbertPoly::constant(3));
        assert_eq!(
            admissible_polynomial(&HilbertPoly::constant(2), 1).unwrap().to_string(),
            "2*t + 1"
        );
    }

    #[test]
    fn gotzmann_numbers() {
        assert_eq!(gotzmann_number(&HilbertPoly::constant(2)).unwrap(), 2);
        assert_eq!(gotzmann_number(&HilbertPoly::from_ints(&[1, 1])).unwrap(), 1);
        assert_eq!(gotzmann_number(&HilbertPoly::from_ints(&[2, 2])).unwrap(), 3);
        assert_eq!(gotzmann_number(&HilbertPoly::from_ints(&[1, 4, 1])).unwrap(), 7);
        assert!(gotzmann_number(&HilbertPoly::from_ints(&[0, -1])).is_err());
    }

    #[test]
    fn double_point_liftings() {
        let jp = MonomialIdeal::from_exponents(3, &[&[1], &[0, 2]]);
        let e = enumerate_monomial_liftings(&jp, &HilbertPoly::from_ints(&[1, 2])).unwrap();
        assert_eq!(e.liftings, vec![jp.extend()]);
        let e = enumerate_monomial_liftings(&jp, &HilbertPoly::from_ints(&[2, 2])).unwrap();
        let mut want = vec![
            MonomialIdeal::from_exponents(4, &[&[1], &[0, 3], &[0, 2, 1]]),
            MonomialIdeal::from_exponents(4, &[&[2], &[1, 1], &[0, 2], &[1, 0, 1]]),
        ];
        want.sort();
        assert_eq!(e.liftings, want);
        assert!(enumerate_monomial_liftings(&jp, &HilbertPoly::from_ints(&[2, 3])).is_err());
    }

    #[test]
    fn sampler_solves_triangular_systems() {
        let a = crate::algebra::Alphabet::new(vec!["a".into(), "b".into(), "c".into()]);
        let mut ideal = ConstraintIdeal::new(a);
        for g in parse_polys("x0*x1 - x2, x1 - 2", 3).unwrap() {
            ideal.push(&g, "test");
        }
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
        let p = sample_solution(&ideal, &mut rng, 10).unwrap();
        assert!(ideal.is_satisfied(&p));
    }

    #[test]
    fn cone_chart_contains_its_parametric_family() {
        let ring = Ring::new(4);
        let iprime = parse_polys("x0, x1^2", 3).unwrap();
        let problem = LiftingProblem::new(ring, &iprime, HilbertPoly::from_ints(&[1, 2])).unwrap();
        let charts = lifting_gs(&problem).unwrap();
        assert_eq!(charts.len(), 1);
        assert_eq!(charts[0].free_section_parameters(), Some(0));
        // G(0,0,0,1) = (x0, x1^2 + x3^2)
        let g = parse_polys("x0, x1^2 + x3^2", 4).unwrap();
        let m = membership(&g, &charts[0]).unwrap();
        assert!(m.member, "{}", m.reason);
        let ms = lifting_ms(&problem).unwrap();
        assert_eq!(ms[0].m, Some(0));
        assert!(membership(&g, &ms[0]).unwrap().member);
    }
}
