//! Monomial ideals: minimal bases, sous-escalier, quasi-stability, Pommaret
//! bases, Hilbert functions and polynomials, saturation and sections.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;

use crate::algebra::{monomials_of_degree, Monomial, Rational};
use crate::error::{Error, Result};
use crate::hilbert::{binom, HilbertPoly};

/// Monomial ideal in `nvars` variables, stored by its minimal generators.
#[derive(Clone)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
    cache: Arc<Cache>,
}

#[derive(Default)]
struct Cache {
    numerator: OnceLock<Vec<i128>>,
    pommaret: OnceLock<std::result::Result<Vec<Monomial>, (Monomial, usize)>>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, with redundant generators removed.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for g in &all {
            assert!(g.span() <= nvars, "generator {} outside ring", g);
        }
        all.sort_by(gen_order);
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        // divisors have smaller degree, so earlier entries are final
        for g in all {
            if !gens.iter().any(|h| h.divides(&g)) {
                gens.push(g);
            }
        }
        MonomialIdeal {
            nvars,
            gens,
            cache: Arc::default(),
        }
    }

    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Self {
        Self::new(nvars, gens.iter().map(|e| Monomial::from_exponents(e)))
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, [])
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new(nvars, [Monomial::one()])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators, by increasing degree and decreasing degrevlex within a degree.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Degree-`t` terms outside the ideal, descending in degrevlex.
    pub fn sous_escalier(&self, t: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, t)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// Degree-`t` terms of the ideal, descending in degrevlex.
    pub fn terms_of_degree(&self, t: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars, t)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// A violation `(generator, j)` of quasi-stability, if any.
    ///
    /// Checking minimal generators is enough: if `x^b = x^d x^a` with `x^a`
    /// a generator and `min(x^b) = min(x^a)`, a power `x_j^t x^a / min(x^a)`
    /// in `J` gives `x_j^t x^b / min(x^b)` in `J`; if `min(x^b)` is smaller
    /// then `x^b / min(x^b)` is already a multiple of `x^a`.
    pub fn quasi_stability_witness(&self) -> Option<(Monomial, usize)> {
        for g in &self.gens {
            let Some(k) = g.min_variable() else { continue };
            let u = g.div(&Monomial::var(k)).unwrap();
            for j in 0..k {
                // some x_j^t * u in J iff a generator divides u away from x_j
                let ok = self.gens.iter().any(|h| {
                    h.support()
                        .all(|(i, e)| i == j || e <= u.exponent(i))
                });
                if !ok {
                    return Some((g.clone(), j));
                }
            }
        }
        None
    }

    pub fn is_quasi_stable(&self) -> bool {
        self.quasi_stability_witness().is_none()
    }

    /// The Pommaret basis, or `NotQuasiStable` with a witness.
    pub fn pommaret_basis(&self) -> Result<&[Monomial]> {
        let cached = self.cache.pommaret.get_or_init(|| match self.quasi_stability_witness() {
            Some(w) => Err(w),
            None => Ok(self.compute_pommaret()),
        });
        match cached {
            Ok(p) => Ok(p),
            Err((g, j)) => Err(Error::NotQuasiStable(format!(
                "no power of x{} times {}/x{} lies in the ideal",
                j,
                g,
                g.min_variable().unwrap()
            ))),
        }
    }

    fn compute_pommaret(&self) -> Vec<Monomial> {
        // involutive completion: close under non-multiplicative prolongations
        let mut basis: BTreeSet<Monomial> = self.gens.iter().cloned().collect();
        // lowest degree first: a depth-first order can run away before the
        // low-degree Pommaret divisors are found
        let mut queue: BTreeSet<(u32, Monomial)> =
            self.gens.iter().map(|g| (g.degree(), g.clone())).collect();
        while let Some((_, a)) = queue.pop_first() {
            let k = a.min_variable().unwrap_or(0);
            for j in 0..k {
                let b = a.mul_var(j);
                if !basis.iter().any(|p| pommaret_divides(p, &b)) {
                    basis.insert(b.clone());
                    queue.insert((b.degree(), b));
                }
            }
        }
        // the minimal basis: terms x^b with x^b / min(x^b) outside the ideal
        let mut out: Vec<Monomial> = basis
            .into_iter()
            .filter(|b| match b.min_variable() {
                None => true,
                Some(k) => !self.contains(&b.div(&Monomial::var(k)).unwrap()),
            })
            .collect();
        out.sort_by(gen_order);
        out
    }

    /// The unique Pommaret divisor of `m` in `basis`.
    pub fn pommaret_divisor<'a>(basis: &'a [Monomial], m: &Monomial) -> Option<&'a Monomial> {
        basis.iter().find(|p| pommaret_divides(p, m))
    }

    /// Numerator `N(z)` of the Hilbert series `N(z) / (1 - z)^nvars` of the quotient.
    pub fn hilbert_numerator(&self) -> &[i128] {
        self.cache
            .numerator
            .get_or_init(|| numerator(self.nvars, &self.gens))
    }

    /// `dim (R/J)_t`.
    pub fn hilbert_function(&self, t: i64) -> i64 {
        if t < 0 {
            return 0;
        }
        let n = self.nvars as i64;
        if n == 0 {
            return if t == 0 && !self.is_unit() { 1 } else { 0 };
        }
        let total: i128 = self
            .hilbert_numerator()
            .iter()
            .enumerate()
            .map(|(k, q)| q * binom(t - k as i64 + n - 1, n - 1))
            .sum();
        total as i64
    }

    pub fn hilbert_polynomial(&self) -> HilbertPoly {
        let n = self.nvars as i64;
        if n == 0 {
            return HilbertPoly::zero();
        }
        let mut acc = HilbertPoly::zero();
        for (k, q) in self.hilbert_numerator().iter().enumerate() {
            if *q != 0 {
                let b = HilbertPoly::binomial(n - 1 - k as i64, (n - 1) as u32);
                acc = acc.add(&b.scale(&Rational::from_integer(BigInt::from(*q))));
            }
        }
        acc
    }

    /// A degree from which the Hilbert function agrees with the polynomial.
    pub fn hilbert_regularity_bound(&self) -> i64 {
        let d = self.hilbert_numerator().len() as i64 - 1;
        (d - self.nvars as i64 + 1).max(0)
    }

    /// `J : x_var^infinity`.
    pub fn colon_var_infinity(&self, var: usize) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.without_var(var)))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.nvars, other.nvars);
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, lcms)
    }

    /// `J : m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens.iter().map(|g| g.lcm(m).div(m).unwrap()),
        )
    }

    /// Saturation with respect to the irrelevant ideal: the intersection of
    /// the colon ideals `J : x_i^infinity`.
    pub fn saturation(&self) -> MonomialIdeal {
        let mut acc = self.colon_var_infinity(0);
        for i in 1..self.nvars {
            acc = acc.intersect(&self.colon_var_infinity(i));
        }
        acc
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }

    /// Smallest `m` with `J_t = (J^sat)_t` for all `t >= m`.
    pub fn satiety(&self) -> u32 {
        let sat = self.saturation();
        if sat == *self {
            return 0;
        }
        let bound = self
            .hilbert_numerator()
            .len()
            .max(sat.hilbert_numerator().len()) as i64;
        let mut last = None;
        for t in 0..=bound {
            if self.hilbert_function(t) != sat.hilbert_function(t) {
                last = Some(t);
            }
        }
        last.map_or(0, |t| t as u32 + 1)
    }

    /// The ideal `J_{>=m}`.
    pub fn truncate(&self, m: u32) -> MonomialIdeal {
        let mut out = Vec::new();
        for g in &self.gens {
            if g.degree() >= m {
                out.push(g.clone());
            } else {
                for q in monomials_of_degree(self.nvars, m - g.degree()) {
                    out.push(g.mul(&q));
                }
            }
        }
        MonomialIdeal::new(self.nvars, out)
    }

    /// `(J, x_n) / (x_n)` in the ring without the last variable.
    pub fn section(&self) -> MonomialIdeal {
        assert!(self.nvars >= 1, "section needs at least one variable");
        let last = self.nvars - 1;
        MonomialIdeal::new(
            last,
            self.gens.iter().filter(|g| g.exponent(last) == 0).cloned(),
        )
    }

    /// The same generators read in a ring with one more variable.
    pub fn extend(&self) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars + 1,
            gens: self.gens.clone(),
            cache: Arc::default(),
        }
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> IdealDisplay<'a> {
        IdealDisplay { ideal: self, names }
    }
}

/// Generator order: increasing degree, then decreasing degrevlex.
fn gen_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.cmp(a))
}

/// `p` divides `m` with a quotient in the variables `x_i`, `i >= min(p)`.
pub fn pommaret_divides(p: &Monomial, m: &Monomial) -> bool {
    let k = p.min_variable().unwrap_or(0);
    match m.div(p) {
        Some(q) => q.support().all(|(i, _)| i >= k),
        None => false,
    }
}

/// Hilbert series numerator by `N(I + (m)) = N(I) - z^deg(m) N(I : m)`.
fn numerator(nvars: usize, gens: &[Monomial]) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![];
    }
    // pairwise coprime generators: a complete intersection
    if gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)))
    {
        let mut acc = vec![1i128];
        for g in gens {
            acc = sub_shift(&acc, &acc, g.degree() as usize);
        }
        return trim(acc);
    }
    let (last, rest) = gens.split_last().unwrap();
    let base = MonomialIdeal::new(nvars, rest.iter().cloned());
    let colon = base.colon(last);
    let a = numerator(nvars, base.gens());
    let b = numerator(nvars, colon.gens());
    trim(sub_shift(&a, &b, last.degree() as usize))
}

/// `a - z^s * b`.
fn sub_shift(a: &[i128], b: &[i128], s: usize) -> Vec<i128> {
    let mut out = vec![0i128; a.len().max(b.len() + s)];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i + s] -= x;
    }
    out
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl std::hash::Hash for MonomialIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.nvars.hash(state);
        self.gens.hash(state);
    }
}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Deterministic ordering used for chart lists: by ring size, then
/// lexicographically on the sorted generator lists.
impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.nvars.cmp(&other.nvars).then_with(|| {
            let key = |j: &MonomialIdeal| {
                let mut g = j.gens.clone();
                g.sort_by(|a, b| b.cmp(a));
                g
            };
            let (a, b) = (key(self), key(other));
            for (x, y) in a.iter().zip(&b) {
                match y.cmp(x) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

pub struct IdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    names: &'a [String],
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.ideal.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display_with(self.names))?;
        }
        write!(f, ")")
    }
}
