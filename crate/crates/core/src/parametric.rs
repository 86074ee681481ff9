//! Families of polynomials with parameter coefficients: generic Groebner
//! stratum sets, generic marked sets over Pommaret bases, the reductions they
//! support, and the constraint ideals those reductions produce.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::algebra::{Alphabet, Coefficient, FieldPoly, Monomial, ParamPoly, Rational};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::monomial_ideal::{pommaret_divides, MonomialIdeal};
use crate::par;

use num_bigint::BigInt;
use num_traits::Zero as _;

/// Whether tails are restricted to terms below the head (Groebner strata) or
/// range over the whole sous-escalier (marked sets over a Pommaret basis).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Stratum,
    Marked,
}

/// Monic marked polynomial `head + tail`.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkedPoly {
    pub head: Monomial,
    pub tail: ParamPoly,
}

impl MarkedPoly {
    pub fn to_poly(&self) -> ParamPoly {
        ParamPoly::monomial(self.head.clone()).add(&self.tail)
    }
}

#[derive(Clone, Debug)]
pub struct MarkedSet {
    nvars: usize,
    polys: Vec<MarkedPoly>,
    /// Ideal generated by the heads; tails live in its sous-escalier.
    heads: MonomialIdeal,
    alphabet: Alphabet,
    flavor: Flavor,
}

/// Name of the parameter `C_{head,tail}`, e.g. `C[x0^2][x1*x3]`.
pub fn param_name(head: &Monomial, tail: &Monomial, names: &[String]) -> String {
    format!(
        "C[{}][{}]",
        head.display_with(names),
        tail.display_with(names)
    )
}

impl MarkedSet {
    /// One fresh parameter per `(head, tail term)`, numbered in the given order.
    pub fn generic(
        nvars: usize,
        heads: MonomialIdeal,
        shape: Vec<(Monomial, Vec<Monomial>)>,
        flavor: Flavor,
    ) -> Self {
        let mut alphabet = Alphabet::default();
        let mut polys = Vec::with_capacity(shape.len());
        for (head, tails) in shape {
            let terms = tails.into_iter().map(|t| {
                let k = alphabet.push(param_name(&head, &t, &[]));
                (t, FieldPoly::var(k))
            });
            let tail = ParamPoly::from_terms(terms.collect::<Vec<_>>());
            polys.push(MarkedPoly { head, tail });
        }
        MarkedSet {
            nvars,
            polys,
            heads,
            alphabet,
            flavor,
        }
    }

    /// A marked set with given (not necessarily generic) tails.
    pub fn from_parts(
        nvars: usize,
        heads: MonomialIdeal,
        polys: Vec<MarkedPoly>,
        alphabet: Alphabet,
        flavor: Flavor,
    ) -> Self {
        MarkedSet {
            nvars,
            polys,
            heads,
            alphabet,
            flavor,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[MarkedPoly] {
        &self.polys
    }

    pub fn head_ideal(&self) -> &MonomialIdeal {
        &self.heads
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn find(&self, head: &Monomial) -> Option<&MarkedPoly> {
        self.polys.iter().find(|p| &p.head == head)
    }

    /// Substitutes parameter values, giving monic polynomials with the same heads.
    pub fn specialize(&self, point: &[Rational]) -> Vec<FieldPoly> {
        self.polys
            .iter()
            .map(|p| FieldPoly::monomial(p.head.clone()).add(&p.tail.specialize(point)))
            .collect()
    }

    /// Applies `f` to every coefficient, e.g. a partial substitution of parameters.
    pub fn map_params(&self, f: impl Fn(&FieldPoly) -> FieldPoly) -> MarkedSet {
        let polys = self
            .polys
            .iter()
            .map(|p| MarkedPoly {
                head: p.head.clone(),
                tail: p.tail.map_coeffs(&f),
            })
            .collect();
        MarkedSet {
            polys,
            ..self.clone()
        }
    }
}

/// For each minimal generator `x^a` of `J`, the polynomial `x^a + sum C x^g`
/// over the terms `x^g` of `N(J)_|a|` below `x^a`.
pub fn generic_stratum_set(j: &MonomialIdeal) -> MarkedSet {
    let shape = j
        .gens()
        .iter()
        .map(|a| {
            let tails = j
                .sous_escalier(a.degree())
                .into_iter()
                .filter(|g| g < a)
                .collect();
            (a.clone(), tails)
        })
        .collect();
    MarkedSet::generic(j.nvars(), j.clone(), shape, Flavor::Stratum)
}

/// For each term of the Pommaret basis of `J_{>=m}`, a polynomial whose
/// tail runs over all of `N(J)` in that degree.
pub fn generic_marked_set(j: &MonomialIdeal, m: u32) -> Result<MarkedSet> {
    j.pommaret_basis()?;
    let trunc = j.truncate(m);
    let basis = trunc.pommaret_basis()?.to_vec();
    let mut by_degree: HashMap<u32, Vec<Monomial>> = HashMap::new();
    let shape = basis
        .into_iter()
        .map(|a| {
            let tails = by_degree
                .entry(a.degree())
                .or_insert_with(|| j.sous_escalier(a.degree()))
                .clone();
            (a, tails)
        })
        .collect();
    Ok(MarkedSet::generic(j.nvars(), trunc, shape, Flavor::Marked))
}

/// Choice of reducer when several heads divide a term (Groebner flavor).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// The first dividing head in generator order.
    FirstDivisor,
    /// The last dividing head in generator order.
    LastDivisor,
}

/// Division by the heads of a stratum set: the largest reducible term is
/// rewritten first. Terminates because tails sit below their heads.
pub fn stratum_reduce(f: &ParamPoly, set: &MarkedSet, strategy: Strategy) -> ParamPoly {
    let mut f = f.clone();
    let mut start = 0;
    loop {
        let mut hit = None;
        for (k, (m, _)) in f.terms().iter().enumerate().skip(start) {
            let mut divisors = set.polys.iter().filter(|p| p.head.divides(m));
            let choice = match strategy {
                Strategy::FirstDivisor => divisors.next(),
                Strategy::LastDivisor => divisors.next_back(),
            };
            if let Some(p) = choice {
                hit = Some((k, m.div(&p.head).unwrap(), p));
                break;
            }
        }
        let Some((k, q, p)) = hit else { return f };
        let c = f.terms()[k].1.clone();
        f = f.sub(&p.to_poly().mul_term(&q, &c));
        start = k;
    }
}

/// Memoized normal forms of terms modulo a marked set over a Pommaret basis.
///
/// A term `x^g` of the head ideal has a unique Pommaret divisor `x^a` with
/// `x^g = x^e x^a`, and `x^g = x^e F_a - x^e (F_a - x^a)`. Rewriting the
/// right-hand side recursively terminates for quasi-stable head ideals.
pub struct MarkedReducer<'a> {
    set: &'a MarkedSet,
    memo: HashMap<Monomial, ParamPoly>,
    active: HashSet<Monomial>,
}

impl<'a> MarkedReducer<'a> {
    pub fn new(set: &'a MarkedSet) -> Self {
        MarkedReducer {
            set,
            memo: HashMap::new(),
            active: HashSet::new(),
        }
    }

    /// Normal form of a single term.
    pub fn term_nf(&mut self, t: &Monomial) -> Result<ParamPoly> {
        if !self.set.heads.contains(t) {
            return Ok(ParamPoly::monomial(t.clone()));
        }
        if let Some(r) = self.memo.get(t) {
            return Ok(r.clone());
        }
        if !self.active.insert(t.clone()) {
            return Err(Error::BoundExceeded(format!(
                "marked reduction cycles at {}",
                t
            )));
        }
        let set = self.set;
        let p = set
            .polys
            .iter()
            .find(|p| pommaret_divides(&p.head, t))
            .ok_or_else(|| {
                Error::BoundExceeded(format!("no Pommaret divisor for {}", t))
            })?;
        let eta = t.div(&p.head).unwrap();
        let mut acc: Vec<(Monomial, FieldPoly)> = Vec::new();
        for (d, c) in p.tail.terms() {
            let sub = self.term_nf(&eta.mul(d))?;
            let neg = c.neg();
            for (m, e) in sub.terms() {
                acc.push((m.clone(), Coefficient::mul(e, &neg)));
            }
        }
        let r = ParamPoly::from_terms(acc);
        self.active.remove(t);
        self.memo.insert(t.clone(), r.clone());
        Ok(r)
    }

    /// Normal form of a polynomial; the result is supported in `N(J)`.
    pub fn reduce(&mut self, f: &ParamPoly) -> Result<ParamPoly> {
        let mut acc: Vec<(Monomial, FieldPoly)> = Vec::new();
        for (m, c) in f.terms() {
            if self.set.heads.contains(m) {
                for (t, e) in self.term_nf(m)?.terms() {
                    acc.push((t.clone(), Coefficient::mul(e, c)));
                }
            } else {
                acc.push((m.clone(), c.clone()));
            }
        }
        Ok(ParamPoly::from_terms(acc))
    }

    /// Fills the memo for every term of the head ideal in degree `d`.
    pub fn fill_degree(&mut self, d: u32) -> Result<()> {
        for t in self.set.heads.terms_of_degree(d) {
            self.term_nf(&t)?;
        }
        Ok(())
    }

    /// Read-only lookup after [`fill_degree`](Self::fill_degree).
    pub fn reduce_filled(&self, f: &ParamPoly) -> ParamPoly {
        let mut acc: Vec<(Monomial, FieldPoly)> = Vec::new();
        for (m, c) in f.terms() {
            match self.memo.get(m) {
                Some(r) => {
                    for (t, e) in r.terms() {
                        acc.push((t.clone(), Coefficient::mul(e, c)));
                    }
                }
                None => {
                    debug_assert!(!self.set.heads.contains(m));
                    acc.push((m.clone(), c.clone()));
                }
            }
        }
        ParamPoly::from_terms(acc)
    }
}

/// Generators in a parameter ring, with a note on where each came from.
#[derive(Clone, Debug, Default)]
pub struct ConstraintIdeal {
    alphabet: Alphabet,
    gens: Vec<FieldPoly>,
    provenance: Vec<String>,
}

impl ConstraintIdeal {
    pub fn new(alphabet: Alphabet) -> Self {
        ConstraintIdeal {
            alphabet,
            gens: Vec::new(),
            provenance: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn gens(&self) -> &[FieldPoly] {
        &self.gens
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Adds a generator, scaled to coprime integer coefficients; zero and
    /// repeated generators are dropped.
    pub fn push(&mut self, g: &FieldPoly, provenance: &str) {
        if g.is_zero() {
            return;
        }
        let g = g.primitive();
        if !self.gens.contains(&g) {
            self.gens.push(g);
            self.provenance.push(provenance.to_string());
        }
    }

    /// Adds every parameter coefficient of `r`.
    pub fn push_coefficients(&mut self, r: &ParamPoly, provenance: &str) {
        for c in r.coefficients() {
            self.push(c, provenance);
        }
    }

    pub fn extend(&mut self, other: &ConstraintIdeal) {
        assert_eq!(self.alphabet, other.alphabet, "constraint alphabets differ");
        for (g, p) in other.gens.iter().zip(&other.provenance) {
            self.push(g, p);
        }
    }

    /// Reduced Groebner basis in the parameter ring.
    pub fn groebner(&self) -> GroebnerBasis {
        GroebnerBasis::new(self.alphabet.len(), &self.gens)
    }

    /// Ideal equality, decided by [`ConstraintIdeal::contains_ideal`] both ways.
    pub fn same_ideal(&self, other: &ConstraintIdeal) -> bool {
        self.alphabet == other.alphabet && self.contains_ideal(other) && other.contains_ideal(self)
    }

    /// Whether every generator of `other` lies in this ideal.
    ///
    /// Generators `c v + r` with `v` absent from `r` are solved for `v` first,
    /// which writes the ideal as `(v_i - phi_i) + R` with `R` free of the
    /// `v_i`. Then `g` lies in the ideal exactly when `g(v_i = phi_i)` lies in
    /// `R`, and only `R` needs a Groebner basis.
    pub fn contains_ideal(&self, other: &ConstraintIdeal) -> bool {
        let (subs, residual) = eliminate_linear(&self.gens);
        let gb = GroebnerBasis::new(self.alphabet.len(), &residual);
        par::map(&other.gens, |g| gb.contains(&substitute_solved(g, &subs)))
            .into_iter()
            .all(|b| b)
    }

    pub fn eval(&self, point: &[Rational]) -> Vec<Rational> {
        self.gens.iter().map(|g| g.eval(point)).collect()
    }

    pub fn is_satisfied(&self, point: &[Rational]) -> bool {
        // integral points skip the gcd work of rational arithmetic
        if point.iter().all(|x| x.is_integer()) {
            let ints: Vec<BigInt> = point.iter().map(|x| x.to_integer()).collect();
            return par::map(&self.gens, |g| vanishes_at(g, point, &ints)).into_iter().all(|b| b);
        }
        par::map(&self.gens, |g| num_traits::Zero::is_zero(&g.eval(point)))
            .into_iter()
            .all(|b| b)
    }

    pub fn gen_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| g.to_string_with(self.alphabet.names(), &[]))
            .collect()
    }
}

/// A parameter `v` with `g = c v + r`, `c` a nonzero constant and `r` free of `v`,
/// together with `-r / c`.
pub fn solvable_variable(g: &FieldPoly) -> Option<(usize, FieldPoly)> {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for m in g.support() {
        for (v, _) in m.support() {
            *counts.entry(v).or_default() += 1;
        }
    }
    let mut vars: Vec<usize> = counts.into_iter().filter(|&(_, c)| c == 1).map(|(v, _)| v).collect();
    vars.sort_unstable();
    for v in vars {
        let x = Monomial::var(v);
        if let Some(c) = g.coeff(&x) {
            let rest = g.sub(&FieldPoly::term(x, c.clone()));
            let inv = -(Rational::from_integer(1.into()) / c);
            return Some((v, rest.scale(&inv)));
        }
    }
    None
}

/// Solves generators of the form `c v + r` for `v`, one at a time and
/// shortest first. Returns the solved variables, each expressed in the
/// unsolved ones, and the remaining generators.
pub fn eliminate_linear(gens: &[FieldPoly]) -> (Vec<(usize, FieldPoly)>, Vec<FieldPoly>) {
    let mut gens: Vec<FieldPoly> = gens.to_vec();
    let mut subs: Vec<(usize, FieldPoly)> = Vec::new();
    loop {
        gens.retain(|g| !g.is_zero());
        let pick = gens
            .iter()
            .enumerate()
            .filter_map(|(k, g)| solvable_variable(g).map(|s| (k, g.len(), s)))
            .min_by_key(|(_, len, _)| *len);
        let Some((k, _, (v, phi))) = pick else { break };
        gens.swap_remove(k);
        gens = par::map(&gens, |g| substitute_var(g, v, &phi));
        for (_, psi) in subs.iter_mut() {
            *psi = substitute_var(psi, v, &phi);
        }
        subs.push((v, phi));
    }
    (subs, gens)
}

fn substitute_var(g: &FieldPoly, v: usize, phi: &FieldPoly) -> FieldPoly {
    if !g.support().any(|m| m.exponent(v) > 0) {
        return g.clone();
    }
    let images: Vec<FieldPoly> = (0..=v)
        .map(|i| if i == v { phi.clone() } else { FieldPoly::var(i) })
        .collect();
    g.substitute(&images)
}

fn substitute_solved(g: &FieldPoly, subs: &[(usize, FieldPoly)]) -> FieldPoly {
    // every phi is free of all solved variables, so one pass suffices
    subs.iter().fold(g.clone(), |acc, (v, phi)| substitute_var(&acc, *v, phi))
}

fn vanishes_at(g: &FieldPoly, point: &[Rational], ints: &[BigInt]) -> bool {
    if g.terms().iter().any(|(_, c)| !c.is_integer()) {
        return num_traits::Zero::is_zero(&g.eval(point));
    }
    let mut total = BigInt::zero();
    'terms: for (m, c) in g.terms() {
        let mut v = c.to_integer();
        for (i, e) in m.support() {
            let x = &ints[i];
            if x.is_zero() {
                continue 'terms;
            }
            for _ in 0..e {
                v *= x;
            }
        }
        total += v;
    }
    total.is_zero()
}

impl fmt::Display for ConstraintIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gen_strings().join(", "))
    }
}

/// The ideal `a_J` of the Groebner stratum over `J`: coefficients of the
/// reduced S-polynomials of the generic stratum set.
pub fn stratum_ideal(j: &MonomialIdeal) -> (MarkedSet, ConstraintIdeal) {
    stratum_ideal_with(j, Strategy::FirstDivisor)
}

pub fn stratum_ideal_with(j: &MonomialIdeal, strategy: Strategy) -> (MarkedSet, ConstraintIdeal) {
    let set = generic_stratum_set(j);
    let ideal = stratum_constraints(&set, strategy);
    (set, ideal)
}

/// S-pair conditions for an arbitrary stratum-flavored family.
pub fn stratum_constraints(set: &MarkedSet, strategy: Strategy) -> ConstraintIdeal {
    let n = set.polys.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |k| (i, k)))
        .collect();
    let remainders = par::map(&pairs, |&(i, k)| {
        let (f, g) = (&set.polys[i], &set.polys[k]);
        let l = f.head.lcm(&g.head);
        let s = f
            .to_poly()
            .mul_monomial(&l.div(&f.head).unwrap())
            .sub(&g.to_poly().mul_monomial(&l.div(&g.head).unwrap()));
        stratum_reduce(&s, set, strategy)
    });
    let mut ideal = ConstraintIdeal::new(set.alphabet.clone());
    for ((i, k), r) in pairs.iter().zip(remainders) {
        ideal.push_coefficients(&r, &format!("S({},{})", set.polys[*i].head, set.polys[*k].head));
    }
    ideal
}

/// The ideal `A` of the marked family over `P(J_{>=m})`: coefficients of the
/// normal forms of the non-multiplicative prolongations `x_j F_a`.
pub fn marked_family_ideal(j: &MonomialIdeal, m: u32) -> Result<(MarkedSet, ConstraintIdeal)> {
    let set = generic_marked_set(j, m)?;
    let ideal = marked_constraints(&set)?;
    Ok((set, ideal))
}

pub fn marked_constraints(set: &MarkedSet) -> Result<ConstraintIdeal> {
    let mut jobs: Vec<(usize, usize)> = Vec::new();
    for (k, p) in set.polys.iter().enumerate() {
        for v in 0..p.head.min_variable().unwrap_or(0) {
            jobs.push((k, v));
        }
    }
    let mut reducer = MarkedReducer::new(set);
    let mut degrees: Vec<u32> = jobs.iter().map(|&(k, _)| set.polys[k].head.degree() + 1).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        reducer.fill_degree(d)?;
    }
    let reducer = &reducer;
    let remainders = par::map(&jobs, |&(k, v)| {
        let f = set.polys[k].to_poly().mul_monomial(&Monomial::var(v));
        reducer.reduce_filled(&f)
    });
    let mut ideal = ConstraintIdeal::new(set.alphabet.clone());
    for ((k, v), r) in jobs.iter().zip(remainders) {
        ideal.push_coefficients(&r, &format!("x{}*F[{}]", v, set.polys[*k].head));
    }
    Ok(ideal)
}

/// True when `N(J)_t` is a basis of the degree-`t` quotient by the ideal
/// generated by `polys`, decided by linear algebra on coefficient vectors.
pub fn sous_escalier_is_basis(
    nvars: usize,
    polys: &[FieldPoly],
    heads: &MonomialIdeal,
    t: u32,
) -> bool {
    use crate::algebra::monomials_of_degree;
    let terms = monomials_of_degree(nvars, t);
    let mut rows: Vec<FieldPoly> = Vec::new();
    for p in polys {
        let d = p.degree();
        if d > t {
            continue;
        }
        for q in monomials_of_degree(nvars, t - d) {
            rows.push(p.mul_monomial(&q));
        }
    }
    let rank = crate::linalg::rank_of_polys(&rows, &terms);
    let expected = terms.len() - heads.sous_escalier(t).len();
    if rank != expected {
        return false;
    }
    // the span of the rows must meet <N(J)_t> trivially: rank with N(J)_t added is full
    let mut all = rows;
    all.extend(heads.sous_escalier(t).into_iter().map(FieldPoly::monomial));
    crate::linalg::rank_of_polys(&all, &terms) == terms.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Coefficient};
    use crate::parse::parse_polys;

    fn ideal(nvars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(nvars, gens)
    }

    #[test]
    fn stratum_set_of_a_principal_ideal() {
        let set = generic_stratum_set(&ideal(2, &[&[2]]));
        assert_eq!(set.polys().len(), 1);
        assert_eq!(set.alphabet().len(), 2);
        assert_eq!(set.alphabet().names()[0], "C[x0^2][x0*x1]");
        let (_, a) = stratum_ideal(&ideal(3, &[&[1, 1]]));
        assert!(a.is_zero());
    }

    #[test]
    fn stratum_set_shape_for_the_double_point() {
        let set = generic_stratum_set(&ideal(4, &[&[1], &[0, 2]]));
        assert_eq!(set.polys()[0].tail.len(), 3);
        // N(J)_2 below x1^2: x1x2, x2^2, x1x3, x2x3, x3^2
        assert_eq!(set.polys()[1].tail.len(), 5);
    }

    #[test]
    fn stratum_of_a_complete_intersection_is_trivial() {
        let (set, a) = stratum_ideal(&ideal(3, &[&[1], &[0, 1]]));
        assert!(a.is_zero());
        assert_eq!(set.alphabet().len(), 2);
    }

    #[test]
    fn marked_set_tails_above_heads() {
        let set = generic_marked_set(&ideal(2, &[&[1]]), 1).unwrap();
        assert_eq!(set.polys().len(), 1);
        assert_eq!(set.polys()[0].tail.len(), 1);
        let j2 = ideal(5, &[&[1, 0, 1], &[2], &[1, 1, 0, 1], &[0, 2, 1], &[0, 3], &[1, 2]]);
        let set = generic_marked_set(&j2, 2).unwrap();
        let head = Monomial::from_exponents(&[1, 0, 1]);
        let f = set.find(&head).unwrap();
        assert!(f.tail.support().any(|t| t == &Monomial::from_exponents(&[1, 1])));
        assert!(generic_marked_set(&ideal(3, &[&[1, 0, 1]]), 2).is_err());
    }

    #[test]
    fn reductions_leave_normal_forms_alone() {
        let j = ideal(3, &[&[1], &[0, 2]]);
        let set = generic_marked_set(&j, 1).unwrap();
        let f = ParamPoly::monomial(Monomial::from_exponents(&[0, 1, 1]));
        let mut r = MarkedReducer::new(&set);
        assert_eq!(r.reduce(&f).unwrap(), f);
        let g = generic_stratum_set(&j);
        assert_eq!(stratum_reduce(&f, &g, Strategy::FirstDivisor), f);
    }

    #[test]
    fn field_reduction_embeds() {
        // x0x1 modulo {x0x1 + x1^2} is -x1^2
        let j = ideal(3, &[&[1, 1]]);
        let p = parse_polys("x0*x1 + x1^2", 3).unwrap();
        let set = MarkedSet::from_parts(
            3,
            j.clone(),
            vec![MarkedPoly {
                head: Monomial::from_exponents(&[1, 1]),
                tail: ParamPoly::from_field(&p[0].sub(&FieldPoly::monomial(Monomial::from_exponents(&[1, 1])))),
            }],
            Alphabet::default(),
            Flavor::Stratum,
        );
        let f = ParamPoly::monomial(Monomial::from_exponents(&[1, 1]));
        let r = stratum_reduce(&f, &set, Strategy::FirstDivisor);
        assert_eq!(r.specialize(&[]).to_string(), "-x1^2");
    }

    #[test]
    fn prolongation_coefficients_have_low_degree() {
        let j = ideal(4, &[&[1], &[0, 2]]);
        let set = generic_marked_set(&j, 2).unwrap();
        let mut red = MarkedReducer::new(&set);
        let f = set.polys()[0].to_poly().mul_monomial(&Monomial::var(0));
        let r = red.reduce(&f).unwrap();
        assert!(r.coefficients().all(|c| c.total_degree() <= 2));
    }

    #[test]
    fn specialization_at_zero_gives_the_heads() {
        let j = ideal(4, &[&[1], &[0, 2]]);
        let set = generic_stratum_set(&j);
        let zero = vec![rat(0); set.alphabet().len()];
        let spec = set.specialize(&zero);
        assert_eq!(spec.iter().map(|p| p.to_string()).collect::<Vec<_>>(), ["x0", "x1^2"]);
        assert!(Coefficient::is_one(set.polys()[0].to_poly().leading_coeff().unwrap()));
    }
}
