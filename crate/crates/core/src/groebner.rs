//! Buchberger's algorithm over the rationals in degrevlex, with the
//! saturation and lifting tests built on it.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FieldPoly, Monomial, Rational, Ring};
use crate::error::{Error, Result};
use crate::hilbert::HilbertPoly;
use crate::monomial_ideal::MonomialIdeal;

/// Reduced Groebner basis: monic, interreduced, sorted by leading term
/// descending. Works in any number of variables and does not require
/// homogeneous input (parameter rings use it too).
#[derive(Clone, PartialEq, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    polys: Vec<FieldPoly>,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

impl GroebnerBasis {
    /// Reduced basis of the ideal generated by `gens` in `nvars` variables.
    pub fn new(nvars: usize, gens: &[FieldPoly]) -> Self {
        let mut engine = Engine::default();
        let mut input: Vec<FieldPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        input.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
        for g in input {
            let sugar = g.degree();
            let r = engine.reduce_by_active(g);
            if !r.is_zero() {
                engine.insert(r.monic(), sugar);
            }
        }
        while let Some(pair) = engine.next_pair() {
            let s = spoly(&engine.polys[pair.i], &engine.polys[pair.j]);
            let r = engine.reduce_by_active(s);
            if !r.is_zero() {
                engine.insert(r.monic(), pair.sugar);
            }
        }
        GroebnerBasis {
            nvars,
            polys: engine.finish(),
        }
    }

    /// Wraps a list already known to be a reduced basis.
    pub fn from_reduced_unchecked(nvars: usize, mut polys: Vec<FieldPoly>) -> Self {
        polys.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
        GroebnerBasis { nvars, polys }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[FieldPoly] {
        &self.polys
    }

    /// True for the zero ideal (empty basis).
    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().unwrap())
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.leading_monomials().cloned())
    }

    /// Remainder of `f` with support outside `in(G)`. Always reduces the
    /// largest reducible term first.
    pub fn normal_form(&self, f: &FieldPoly) -> FieldPoly {
        let divisors: Vec<&FieldPoly> = self.polys.iter().collect();
        reduce(f.clone(), &divisors, true)
    }

    pub fn contains(&self, f: &FieldPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_all(&self, fs: &[FieldPoly]) -> bool {
        fs.iter().all(|f| self.contains(f))
    }

    /// `I : x_n^infinity` for the last variable: divide each element by the
    /// largest power of `x_n` dividing it and re-reduce. Valid for degrevlex
    /// bases of homogeneous ideals.
    pub fn saturate_by_last_var(&self) -> GroebnerBasis {
        let last = self.nvars - 1;
        let stripped: Vec<FieldPoly> = self.polys.iter().map(|p| p.strip_var(last).0).collect();
        if stripped == self.polys {
            return self.clone();
        }
        GroebnerBasis::new(self.nvars, &stripped)
    }

    /// `I : x_var^infinity`, by moving `x_var` to the last position.
    pub fn colon_var_infinity(&self, var: usize) -> GroebnerBasis {
        let n = self.nvars;
        if var == n - 1 {
            return self.saturate_by_last_var();
        }
        let fwd = |v: usize| match v.cmp(&var) {
            Ordering::Less => v,
            Ordering::Equal => n - 1,
            Ordering::Greater => v - 1,
        };
        let back = |v: usize| match v.cmp(&(n - 1)) {
            Ordering::Equal => var,
            _ if v >= var => v + 1,
            _ => v,
        };
        let moved: Vec<FieldPoly> = self.polys.iter().map(|p| p.remap_vars(fwd)).collect();
        let sat = GroebnerBasis::new(n, &moved).saturate_by_last_var();
        let restored: Vec<FieldPoly> = sat.polys.iter().map(|p| p.remap_vars(back)).collect();
        GroebnerBasis::new(n, &restored)
    }

    /// `I : l^infinity` for the linear form `l = x_n + sum lambda_i x_i`.
    fn colon_linear_form(&self, lambda: &[Rational]) -> GroebnerBasis {
        let n = self.nvars;
        let last = n - 1;
        // y_n = l: substitute x_n := y_n - sum lambda_i y_i
        let mut img = FieldPoly::var(last);
        for (i, l) in lambda.iter().enumerate() {
            img = img.sub(&FieldPoly::var(i).scale(l));
        }
        let mut images: Vec<FieldPoly> = (0..last).map(FieldPoly::var).collect();
        images.push(img);
        let moved: Vec<FieldPoly> = self.polys.iter().map(|p| p.substitute(&images)).collect();
        let sat = GroebnerBasis::new(n, &moved).saturate_by_last_var();
        let mut inv = FieldPoly::var(last);
        for (i, l) in lambda.iter().enumerate() {
            inv = inv.add(&FieldPoly::var(i).scale(l));
        }
        images[last] = inv;
        let back: Vec<FieldPoly> = sat.polys.iter().map(|p| p.substitute(&images)).collect();
        GroebnerBasis::new(n, &back)
    }

    /// `(G) ⊆ (self)`.
    pub fn contains_ideal(&self, other: &GroebnerBasis) -> bool {
        self.contains_all(&other.polys)
    }

    /// Saturation with respect to the irrelevant ideal.
    ///
    /// A candidate `Q = I : h^infinity` always contains `I^sat`; it is
    /// certified equal once `Q ⊆ I : x_i^infinity` for every variable, since
    /// the intersection of those colons is `I^sat`. Candidates are the
    /// variables from the last one up, then seeded random linear forms.
    pub fn saturation(&self) -> Result<GroebnerBasis> {
        if self.is_zero_ideal() || self.is_unit_ideal() {
            return Ok(self.clone());
        }
        let n = self.nvars;
        let colons: Vec<GroebnerBasis> = (0..n).map(|i| self.colon_var_infinity(i)).collect();
        let certified = |q: &GroebnerBasis| colons.iter().all(|c| c.contains_ideal(q));
        for q in colons.iter().rev() {
            if certified(q) {
                return Ok(q.clone());
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5a7);
        for _ in 0..8 {
            let lambda: Vec<Rational> = (0..n - 1)
                .map(|_| Rational::from_integer(rng.gen_range(-20i64..=20).into()))
                .collect();
            let q = self.colon_linear_form(&lambda);
            if certified(&q) {
                return Ok(q);
            }
        }
        Err(Error::BoundExceeded(
            "saturation candidate could not be certified".into(),
        ))
    }

    pub fn is_saturated(&self) -> Result<bool> {
        Ok(self.saturation()? == *self)
    }

    /// True when `x_n` is a non-zero-divisor modulo `I^sat`, i.e. no minimal
    /// generator of `in(I^sat)` is divisible by `x_n`.
    pub fn is_generic_last_var(&self) -> Result<bool> {
        let sat = self.saturation()?;
        Ok(sat.last_var_is_regular())
    }

    /// `I : x_n = I`, read off the leading terms.
    pub fn last_var_is_regular(&self) -> bool {
        let last = self.nvars - 1;
        self.leading_monomials().all(|m| m.exponent(last) == 0)
    }

    /// The ideal `(I, x_n)/(x_n)` in the ring without `x_n`.
    pub fn hyperplane_section(&self) -> GroebnerBasis {
        let last = self.nvars - 1;
        let gens: Vec<FieldPoly> = self.polys.iter().map(|p| p.subst_zero(last)).collect();
        GroebnerBasis::new(last, &gens)
    }

    pub fn hilbert_polynomial(&self) -> HilbertPoly {
        self.initial_ideal().hilbert_polynomial()
    }

    pub fn hilbert_function(&self, t: i64) -> i64 {
        self.initial_ideal().hilbert_function(t)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> BasisDisplay<'a> {
        BasisDisplay { basis: self, names }
    }
}

pub struct BasisDisplay<'a> {
    basis: &'a GroebnerBasis,
    names: &'a [String],
}

impl fmt::Display for BasisDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.basis.polys.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p.display_with(self.names, &[]))?;
        }
        write!(f, "}}")
    }
}

/// Reduced basis of homogeneous generators in `ring`.
pub fn buchberger(ring: &Ring, gens: &[FieldPoly]) -> Result<GroebnerBasis> {
    ring.check(gens)?;
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous(g.display_with(ring.names(), &[]).to_string()));
        }
    }
    Ok(GroebnerBasis::new(ring.nvars(), gens))
}

/// `(lcm / lt(f)) f / lc(f) - (lcm / lt(g)) g / lc(g)`.
pub fn spoly(f: &FieldPoly, g: &FieldPoly) -> FieldPoly {
    let (mf, mg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = mf.lcm(mg);
    let cf = f.leading_coeff().unwrap().recip();
    let cg = g.leading_coeff().unwrap().recip();
    let a = f.mul_term(&l.div(mf).unwrap(), &cf);
    let b = g.mul_term(&l.div(mg).unwrap(), &cg);
    a.sub(&b)
}

/// Division with remainder by monic-or-not divisors; `full` also reduces
/// the terms below the leading one.
pub fn reduce(f: FieldPoly, divisors: &[&FieldPoly], full: bool) -> FieldPoly {
    let mut work = f.into_terms();
    let mut pos = 0;
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while pos < work.len() {
        let (m, c) = &work[pos];
        let found = divisors.iter().find_map(|g| {
            let lt = g.leading_monomial()?;
            m.div(lt).map(|q| (q, *g))
        });
        match found {
            Some((q, g)) => {
                let factor = c / g.leading_coeff().unwrap();
                work = sub_scaled_tail(&work[pos + 1..], &factor, &q, &g.terms()[1..]);
                pos = 0;
            }
            None => {
                if !full {
                    break;
                }
                rem.push(work[pos].clone());
                pos += 1;
            }
        }
    }
    rem.extend(work.drain(pos..));
    FieldPoly::from_sorted_unchecked(rem)
}

/// `a - factor * q * b`, both sorted descending.
fn sub_scaled_tail(
    a: &[(Monomial, Rational)],
    factor: &Rational,
    q: &Monomial,
    b: &[(Monomial, Rational)],
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let next_b = |j: usize| (b[j].0.mul(q), &b[j].1 * factor);
    let mut pending = (j < b.len()).then(|| next_b(j));
    while i < a.len() || pending.is_some() {
        match (&a.get(i), &pending) {
            (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                Ordering::Greater => {
                    out.push((*x).clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = pending.take().unwrap();
                    out.push((m, -c));
                    j += 1;
                    pending = (j < b.len()).then(|| next_b(j));
                }
                Ordering::Equal => {
                    let (m, c) = pending.take().unwrap();
                    let d = &x.1 - c;
                    if !d.is_zero() {
                        out.push((m, d));
                    }
                    i += 1;
                    j += 1;
                    pending = (j < b.len()).then(|| next_b(j));
                }
            },
            (Some(x), None) => {
                out.push((*x).clone());
                i += 1;
            }
            (None, Some(_)) => {
                let (m, c) = pending.take().unwrap();
                out.push((m, -c));
                j += 1;
                pending = (j < b.len()).then(|| next_b(j));
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[derive(Default)]
struct Engine {
    polys: Vec<FieldPoly>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn lt(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    fn reduce_by_active(&self, f: FieldPoly) -> FieldPoly {
        let divisors: Vec<&FieldPoly> = self
            .polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect();
        reduce(f, &divisors, true)
    }

    /// Gebauer-Moeller update for the new element `h`.
    fn insert(&mut self, h: FieldPoly, sugar: u32) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.sugar.push(sugar.max(self.polys[hi].degree()));
        self.active.push(true);
        let lh = self.lt(hi).clone();

        let cands: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, lh.lcm(self.lt(g))))
            .collect();
        // chain criterion among the new pairs
        let mut keep: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g, l)) in cands.iter().enumerate() {
            let coprime = lh.is_coprime(self.lt(*g));
            let dominated = cands[k + 1..].iter().any(|(_, l2)| l2.divides(l))
                || keep.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                keep.push((*g, l.clone()));
            }
        }
        // among equal lcms keep one pair
        let mut fresh: Vec<(usize, Monomial)> = Vec::new();
        for (g, l) in keep {
            if !lh.is_coprime(self.lt(g)) && !fresh.iter().any(|(_, l2)| *l2 == l) {
                fresh.push((g, l));
            }
        }
        // old pairs whose lcm is strictly divisible by lt(h)
        let polys = &self.polys;
        let lt = |i: usize| polys[i].leading_monomial().unwrap();
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && lh.lcm(lt(p.i)) != p.lcm
                && lh.lcm(lt(p.j)) != p.lcm)
        });
        for (g, l) in fresh {
            let sugar = (self.sugar[hi] + l.degree() - lh.degree())
                .max(self.sugar[g] + l.degree() - self.lt(g).degree());
            self.pairs.push(Pair {
                i: g,
                j: hi,
                lcm: l,
                sugar,
            });
        }
        for g in 0..hi {
            if self.active[g] && lh.divides(self.lt(g)) {
                self.active[g] = false;
            }
        }
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| a.lcm.cmp(&b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn finish(self) -> Vec<FieldPoly> {
        let mut basis: Vec<FieldPoly> = self
            .polys
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect();
        basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
        // interreduce, smallest leading terms first
        let mut out: Vec<FieldPoly> = Vec::with_capacity(basis.len());
        for k in 0..basis.len() {
            let others: Vec<&FieldPoly> = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, p)| p)
                .collect();
            let head = basis[k].leading_monomial().unwrap().clone();
            let lc = basis[k].leading_coeff().unwrap().clone();
            let tail = FieldPoly::from_sorted_unchecked(basis[k].terms()[1..].to_vec());
            let tail = reduce(tail, &others, true);
            let p = FieldPoly::term(head, lc).add(&tail);
            out.push(p.monic());
        }
        debug_assert!(out.iter().all(|p| p.leading_coeff().is_some_and(|c| c.is_one())));
        out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
        out
    }
}

/// Outcome of [`verify_lifting`].
#[derive(Clone, Debug)]
pub struct LiftingReport {
    pub is_lifting: bool,
    /// `I : x_n = I`, equivalently `I` saturated with `x_n` generic.
    pub saturated_and_generic: bool,
    /// The saturated hyperplane section equals `I'`.
    pub section_saturates_to_iprime: bool,
    pub is_xn_lifting: bool,
    pub hp_i: HilbertPoly,
    pub hp_iprime: HilbertPoly,
    pub hp_section: HilbertPoly,
    /// `hp_i(t) - hp_i(t-1) = hp_iprime(t)`.
    pub delta_ok: bool,
}

/// True when the reduced basis of `I` restricts at `x_n = 0` to the reduced
/// basis of `H` with the same leading terms.
pub fn is_xn_lifting(i_basis: &GroebnerBasis, h_basis: &GroebnerBasis) -> bool {
    let last = i_basis.nvars() - 1;
    if i_basis.polys().len() != h_basis.polys().len() {
        return false;
    }
    if !i_basis.last_var_is_regular() {
        return false;
    }
    let mut restricted: Vec<FieldPoly> = i_basis.polys().iter().map(|p| p.subst_zero(last)).collect();
    restricted.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    restricted == h_basis.polys()
}

/// Decides whether `I` (in `nvars` variables) is a lifting of the saturated
/// ideal `I'` (in `nvars - 1` variables).
pub fn verify_lifting(
    nvars: usize,
    i_gens: &[FieldPoly],
    iprime_gens: &[FieldPoly],
) -> Result<LiftingReport> {
    let ring = Ring::new(nvars);
    let iprime = buchberger(&ring.section(), iprime_gens)?;
    if !iprime.is_saturated()? {
        return Err(Error::Precondition("I' is not saturated".into()));
    }
    let i = buchberger(&ring, i_gens)?;
    Ok(verify_lifting_basis(&i, &iprime))
}

/// [`verify_lifting`] on reduced bases, with `I'` assumed saturated.
pub fn verify_lifting_basis(i: &GroebnerBasis, iprime: &GroebnerBasis) -> LiftingReport {
    let saturated_and_generic = i.last_var_is_regular();
    let h = i.hyperplane_section();
    let hp_section = h.hilbert_polynomial();
    let hp_iprime = iprime.hilbert_polynomial();
    // H ⊆ I' with equal Hilbert polynomials forces H^sat = I' when I' is saturated
    let section_saturates_to_iprime = iprime.contains_ideal(&h) && hp_section == hp_iprime;
    let hp_i = i.hilbert_polynomial();
    let delta_ok = hp_i.delta() == hp_iprime;
    LiftingReport {
        is_lifting: saturated_and_generic && section_saturates_to_iprime,
        saturated_and_generic,
        section_saturates_to_iprime,
        is_xn_lifting: is_xn_lifting(i, iprime),
        hp_i,
        hp_iprime,
        hp_section,
        delta_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polys;

    fn gb(n: usize, s: &str) -> GroebnerBasis {
        GroebnerBasis::new(n, &parse_polys(s, n).unwrap())
    }

    fn polys(n: usize, s: &str) -> Vec<FieldPoly> {
        parse_polys(s, n).unwrap()
    }

    #[test]
    fn golden_basis_of_iprime() {
        let g = gb(4, "x0^2, x0*x1 + x1^2, x0*x2");
        let expected = polys(4, "x0^2, x0*x1 + x1^2, x0*x2, x1^3, x1^2*x2");
        assert_eq!(g.polys().len(), 5);
        for p in &expected {
            assert!(g.polys().contains(p), "{} missing", p);
        }
        assert_eq!(
            g.initial_ideal(),
            MonomialIdeal::new(4, polys(4, "x0^2, x0*x1, x0*x2, x1^2*x2, x1^3").iter().map(|p| p.leading_monomial().unwrap().clone()))
        );
        assert_eq!(GroebnerBasis::new(4, g.polys()), g);
    }

    #[test]
    fn remark_initial_ideal() {
        let g = gb(3, "x0^2, x1*x0 + x2^2");
        assert_eq!(g.initial_ideal().to_string(), "(x0^2, x0*x1, x0*x2^2, x2^4)");
    }

    #[test]
    fn normal_forms() {
        let g = gb(4, "x0^2, x0*x1 + x1^2, x0*x2");
        let f = polys(4, "x1^2, x0*x1")[..].to_vec();
        assert_eq!(g.normal_form(&f[0]), f[0]);
        assert_eq!(g.normal_form(&f[1]).to_string(), "-x1^2");
    }

    #[test]
    fn spoly_example() {
        let f = polys(3, "x0*x1 + x1^2, x0*x2");
        assert_eq!(spoly(&f[0], &f[1]).to_string(), "x1^2*x2");
        assert!(spoly(&f[0], &f[0]).is_zero());
    }

    #[test]
    fn saturation_examples() {
        let g = gb(3, "x0, x1^3, x1^2*x2");
        assert_eq!(g.saturate_by_last_var(), gb(3, "x0, x1^2"));
        assert_eq!(g.saturation().unwrap(), gb(3, "x0, x1^2"));
        let w = gb(4, "x0^2, x0*x1, x1^2, x0*x2 - x1*x3");
        assert_eq!(w.saturation().unwrap(), w);
        // a non-monomial saturation that x_n alone does not reach
        let h = gb(3, "x0^2, x0*x1 + x1^2, x0*x2");
        let sat = h.saturation().unwrap();
        assert!(sat.contains_ideal(&h));
    }

    #[test]
    fn genericity() {
        // x1*x3^2 lies in this ideal but x1 does not; its saturation has a
        // component (x0, x1, x3^2) inside the hyperplane x3 = 0
        let i = gb(4, "x0^2 + x3^2, x0*x1, x0*x2, x1^2, x1*x2");
        assert!(i.contains(&polys(4, "x1*x3^2")[0]));
        assert!(!i.is_generic_last_var().unwrap());
        let sat = i.saturation().unwrap();
        assert!(sat.contains(&FieldPoly::var(1)));
        assert!(!sat.last_var_is_regular());
        assert!(gb(4, "x0^2, x0*x1, x1^2, x0*x2 - x1*x3").is_generic_last_var().unwrap());
        assert!(!gb(4, "x3").is_generic_last_var().unwrap());
    }

    #[test]
    fn xn_lifting_examples() {
        let h = gb(3, "x0, x1");
        let i = gb(4, "x0^2 + x3^2, x0*x1, x0*x2, x1^2, x1*x2");
        assert!(!is_xn_lifting(&i, &h));
        let g = gb(4, "x0 + x3, x1^2 + x1*x3 + x2*x3 + x3^2");
        assert!(is_xn_lifting(&g, &gb(3, "x0, x1^2")));
        let cone = gb(4, "x0, x1^2");
        assert!(is_xn_lifting(&cone, &gb(3, "x0, x1^2")));
    }

    #[test]
    fn lifting_verification() {
        let r = verify_lifting(
            4,
            &polys(4, "x0^2, x0*x1, x1^2, x0*x2 - x1*x3"),
            &polys(3, "x0, x1^2"),
        )
        .unwrap();
        assert!(r.is_lifting && r.delta_ok);
        assert_eq!(r.hp_i, HilbertPoly::from_ints(&[2, 2]));
        let r = verify_lifting(
            4,
            &polys(4, "x0^2 + x3^2, x0*x1, x0*x2, x1^2, x1*x2"),
            &polys(3, "x0, x1"),
        )
        .unwrap();
        assert!(!r.is_xn_lifting);
        assert!(!r.saturated_and_generic && !r.is_lifting);
        let e = verify_lifting(4, &polys(4, "x0"), &polys(3, "x0, x1^3, x1^2*x2"));
        assert!(matches!(e, Err(Error::Precondition(_))));
    }
}
