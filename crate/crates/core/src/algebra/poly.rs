use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::coeff::{Coefficient, Rational};
use super::monomial::Monomial;

/// Sparse polynomial with terms sorted strictly descending in degrevlex and no
/// zero coefficients. The representation is canonical, so `==` is equality of
/// polynomials.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R> {
    terms: Vec<(Monomial, R)>,
}

/// Polynomial with rational coefficients.
pub type FieldPoly = Poly<Rational>;
/// Polynomial in the x-variables whose coefficients are polynomials in parameters.
pub type ParamPoly = Poly<FieldPoly>;

impl<R: Coefficient> Default for Poly<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Coefficient> Poly<R> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: vec![(m, c)],
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, R::one())
    }

    pub fn var(index: usize) -> Self {
        Self::monomial(Monomial::var(index))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, R)>) -> Self {
        let mut terms: Vec<(Monomial, R)> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, R)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1.add_assign(&c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|l| l.1.is_zero()) {
            out.pop();
        }
        Poly { terms: out }
    }

    /// Wraps terms that are already sorted descending with non-zero coefficients.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, R)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, R)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, R)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&R> {
        self.terms
            .binary_search_by(|t| m.cmp(&t.0))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.0)
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// One more than the largest variable index occurring.
    pub fn span(&self) -> usize {
        self.terms.iter().map(|t| t.0.span()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { t.1.neg() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { terms: out }
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|x| x.mul(c))
    }

    /// Multiplication by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(t, x)| {
                let y = x.mul(c);
                (!y.is_zero()).then(|| (t.mul(m), y))
            })
            .collect();
        // multiplication by a term preserves the order
        Poly { terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, R> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.mul(c2);
                acc.entry(m1.mul(m2))
                    .and_modify(|x| x.add_assign(&c))
                    .or_insert(c);
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(R::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `self -= c * m * g`, the basic reduction step.
    pub fn sub_mul_term(&mut self, c: &R, m: &Monomial, g: &Self) {
        let shifted = g.mul_term(m, c);
        *self = self.sub(&shifted);
    }

    pub fn map_coeffs<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (m.clone(), d))
            })
            .collect();
        Poly { terms }
    }

    /// Substitutes `var := 0`, dropping every term divisible by it.
    pub fn subst_zero(&self, var: usize) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|t| t.0.exponent(var) == 0)
                .cloned()
                .collect(),
        }
    }

    /// Divides every term by `var^k` where `k` is the largest power dividing
    /// the whole polynomial.
    pub fn strip_var(&self, var: usize) -> (Self, u32) {
        let k = self
            .terms
            .iter()
            .map(|t| t.0.exponent(var))
            .min()
            .unwrap_or(0);
        if k == 0 {
            return (self.clone(), 0);
        }
        let d = Monomial::var_pow(var, k);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.div(&d).unwrap(), c.clone()))
            .collect();
        (Poly { terms }, k)
    }

    /// Renames variables; the map must be injective. Re-sorts the terms.
    pub fn remap_vars(&self, map: impl Fn(usize) -> usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.remap(&map), c.clone())))
    }

    /// Replaces variable `i` by `images[i]`; variables beyond `images` are kept.
    pub fn substitute(&self, images: &[Poly<R>]) -> Self {
        let mut powers: HashMap<(usize, u32), Poly<R>> = HashMap::new();
        let mut acc: Vec<(Monomial, R)> = Vec::new();
        for (m, c) in &self.terms {
            let mut prod = Poly::constant(c.clone());
            for (v, e) in m.support() {
                if v < images.len() {
                    let p = powers
                        .entry((v, e))
                        .or_insert_with(|| images[v].pow(e))
                        .clone();
                    prod = prod.mul(&p);
                } else {
                    prod = prod.mul_monomial(&Monomial::var_pow(v, e));
                }
                if prod.is_zero() {
                    break;
                }
            }
            acc.extend(prod.terms);
        }
        Self::from_terms(acc)
    }

    pub fn display_with<'a>(
        &'a self,
        names: &'a [String],
        coeff_names: &'a [String],
    ) -> PolyDisplay<'a, R> {
        PolyDisplay {
            poly: self,
            names,
            coeff_names,
        }
    }

    pub fn to_string_with(&self, names: &[String], coeff_names: &[String]) -> String {
        self.display_with(names, coeff_names).to_string()
    }
}

impl Poly<Rational> {
    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if Coefficient::is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.map_coeffs(|c| c * &inv)
            }
        }
    }

    /// Value at a rational point (`point[i]` for variable `i`).
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut total = <Rational as Coefficient>::zero();
        'terms: for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, e) in m.support() {
                let x = &point[i];
                if num_traits::Zero::is_zero(x) {
                    continue 'terms;
                }
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    /// Multiplies through by a positive rational so that the coefficients are
    /// coprime integers and the leading coefficient is positive.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        use num_traits::{One, Signed};
        if self.is_zero() {
            return self.clone();
        }
        let mut den = num_bigint::BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::from(0);
        for (_, c) in &self.terms {
            let n = c.numer() * (&den / c.denom());
            g = g.gcd(&n);
        }
        let mut factor = Rational::new(den, g);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.map_coeffs(|c| c * &factor)
    }

    /// Substitutes the value `c` for the variable `var`.
    pub fn subst_value(&self, var: usize, c: &Rational) -> Self {
        if !self.terms.iter().any(|(m, _)| m.exponent(var) > 0) {
            return self.clone();
        }
        Self::from_terms(self.terms.iter().filter_map(|(m, a)| {
            let e = m.exponent(var);
            if e == 0 {
                return Some((m.clone(), a.clone()));
            }
            if num_traits::Zero::is_zero(c) {
                return None;
            }
            let mut f = a.clone();
            for _ in 0..e {
                f *= c;
            }
            Some((m.without_var(var), f))
        }))
    }

    /// Total degree of the polynomial when viewed in its own variables.
    pub fn total_degree(&self) -> u32 {
        self.degree()
    }
}

impl Poly<FieldPoly> {
    /// Evaluates every parameter coefficient at `point`.
    pub fn specialize(&self, point: &[Rational]) -> FieldPoly {
        self.map_coeffs(|c| c.eval(point))
    }

    /// Lifts a rational polynomial to constant parameter coefficients.
    pub fn from_field(f: &FieldPoly) -> Self {
        f.map_coeffs(|c| Poly::constant(c.clone()))
    }

    /// All parameter coefficients, in term order.
    pub fn coefficients(&self) -> impl Iterator<Item = &FieldPoly> {
        self.terms.iter().map(|t| &t.1)
    }
}

impl<R: Coefficient> Coefficient for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn from_rational(q: Rational) -> Self {
        Poly::constant(R::from_rational(q))
    }
    fn render(&self, names: &[String]) -> (String, bool) {
        let s = self.display_with(names, &[]).to_string();
        (s, self.terms.len() > 1)
    }
}

pub struct PolyDisplay<'a, R> {
    poly: &'a Poly<R>,
    names: &'a [String],
    coeff_names: &'a [String],
}

impl<R: Coefficient> fmt::Display for PolyDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let (text, wrap) = c.render(self.coeff_names);
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !wrap => (true, rest.to_string()),
                _ => (false, text),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = m.display_with(self.names).to_string();
            if m.is_one() {
                if wrap {
                    write!(f, "({})", body)?;
                } else {
                    write!(f, "{}", body)?;
                }
            } else if body == "1" {
                write!(f, "{}", mono)?;
            } else if wrap {
                write!(f, "({})*{}", body, mono)?;
            } else {
                write!(f, "{}*{}", body, mono)?;
            }
        }
        Ok(())
    }
}

impl<R: Coefficient> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[], &[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::{rat, ratio};

    fn x(i: usize) -> FieldPoly {
        FieldPoly::var(i)
    }

    #[test]
    fn cancellation_and_canonical_form() {
        let f = x(0).mul(&x(1)).add(&x(1).mul(&x(1)));
        assert!(f.sub(&f).is_zero());
        let g = FieldPoly::from_terms(vec![
            (Monomial::var(1), rat(2)),
            (Monomial::var(0), rat(1)),
            (Monomial::var(1), rat(-2)),
        ]);
        assert_eq!(g, x(0));
    }

    #[test]
    fn substitute_last_var_zero() {
        let f = x(0).mul(&x(0)).add(&x(3).mul(&x(3)));
        assert_eq!(f.subst_zero(3), x(0).mul(&x(0)));
        assert_eq!(x(0).mul(&x(1)).mul(&x(4)).to_string(), "x0*x1*x4");
    }

    #[test]
    fn printing() {
        let f = FieldPoly::from_terms(vec![
            (Monomial::from_exponents(&[2]), rat(1)),
            (Monomial::from_exponents(&[1, 1]), ratio(-1, 2)),
            (Monomial::one(), rat(3)),
        ]);
        assert_eq!(f.to_string(), "x0^2 - 1/2*x0*x1 + 3");
        let p = ParamPoly::from_terms(vec![
            (Monomial::var(0), FieldPoly::var(0).add(&FieldPoly::var(1))),
            (Monomial::var(1), FieldPoly::var(0).neg()),
        ]);
        let c = vec!["a".to_string(), "b".to_string()];
        assert_eq!(p.to_string_with(&[], &c), "(a + b)*x0 - a*x1");
    }

    #[test]
    fn primitive_normalization() {
        let f = FieldPoly::from_terms(vec![
            (Monomial::var(0), ratio(-1, 2)),
            (Monomial::var(1), ratio(1, 3)),
        ]);
        assert_eq!(f.primitive().to_string(), "3*x0 - 2*x1");
    }

    #[test]
    fn substitution_by_polynomials() {
        // x0*x1 with x0 -> x0 + x1
        let f = x(0).mul(&x(1));
        let g = f.substitute(&[x(0).add(&x(1))]);
        assert_eq!(g.to_string(), "x0*x1 + x1^2");
    }
}
