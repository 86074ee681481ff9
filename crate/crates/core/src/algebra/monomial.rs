//! Power products stored sparsely and compared in degree reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

/// Variable index and exponent. Variables are ordered `x0 > x1 > ... `.
type Entry = (u16, u16);

/// A power product `x_0^a_0 ... x_k^a_k`.
///
/// Only non-zero exponents are stored, sorted by variable index, so the same
/// type serves both the handful of coordinate variables and the (possibly
/// several hundred) parameters of a family. The total order implemented by
/// [`Ord`] is degrevlex with `x0 > x1 > ...`.
#[derive(Clone, Default)]
pub struct Monomial {
    degree: u32,
    exps: SmallVec<[Entry; 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(index: usize) -> Self {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: usize, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        let mut exps = SmallVec::new();
        exps.push((to_u16(index), to_u16(exp as usize)));
        Monomial { degree: exp, exps }
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        let mut exps = SmallVec::new();
        let mut degree = 0;
        for (i, &e) in exponents.iter().enumerate() {
            if e > 0 {
                exps.push((to_u16(i), to_u16(e as usize)));
                degree += e;
            }
        }
        Monomial { degree, exps }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        match self.exps.binary_search_by_key(&(var as u16), |e| e.0) {
            Ok(i) => self.exps[i].1 as u32,
            Err(_) => 0,
        }
    }

    /// Non-zero `(variable, exponent)` pairs in increasing variable order.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(v, e)| (v as usize, e as u32))
    }

    /// Dense exponent vector of length `nvars`.
    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        let mut v = vec![0; nvars];
        for &(i, e) in &self.exps {
            v[i as usize] = e as u32;
        }
        v
    }

    /// Index of the smallest variable dividing the monomial, i.e. the largest
    /// index with a non-zero exponent. `None` for the monomial 1.
    pub fn min_variable(&self) -> Option<usize> {
        self.exps.last().map(|e| e.0 as usize)
    }

    /// Largest variable index used plus one (0 for the monomial 1).
    pub fn span(&self) -> usize {
        self.min_variable().map_or(0, |v| v + 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    exps.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a.1.checked_add(b.1).expect("exponent overflow");
                    exps.push((a.0, e));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn mul_var(&self, var: usize) -> Monomial {
        self.mul(&Monomial::var(var))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.exps.len() > other.exps.len() {
            return false;
        }
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j == other.exps.len() || other.exps[j].0 != v || other.exps[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        other.div(self)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = SmallVec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            if j < other.exps.len() && other.exps[j].0 == v {
                let d = e - other.exps[j].1;
                if d > 0 {
                    exps.push((v, d));
                }
                j += 1;
            } else {
                exps.push((v, e));
            }
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            exps,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let mut degree = 0;
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let next = match (self.exps.get(i), other.exps.get(j)) {
                (Some(&a), Some(&b)) => match a.0.cmp(&b.0) {
                    Ordering::Less => {
                        i += 1;
                        a
                    }
                    Ordering::Greater => {
                        j += 1;
                        b
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (a.0, a.1.max(b.1))
                    }
                },
                (Some(&a), None) => {
                    i += 1;
                    a
                }
                (None, Some(&b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            degree += next.1 as u32;
            exps.push(next);
        }
        Monomial { degree, exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Sets the exponent of `var` to zero.
    pub fn without_var(&self, var: usize) -> Monomial {
        let e = self.exponent(var);
        if e == 0 {
            return self.clone();
        }
        let exps = self
            .exps
            .iter()
            .copied()
            .filter(|x| x.0 as usize != var)
            .collect();
        Monomial {
            degree: self.degree - e,
            exps,
        }
    }

    /// Renames variables through `map` (old index to new index). The map
    /// must be injective on the support.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Monomial {
        let mut exps: SmallVec<[Entry; 4]> = self
            .exps
            .iter()
            .map(|&(v, e)| (to_u16(map(v as usize)), e))
            .collect();
        exps.sort_unstable_by_key(|e| e.0);
        debug_assert!(exps.windows(2).all(|w| w[0].0 != w[1].0));
        Monomial {
            degree: self.degree,
            exps,
        }
    }

    /// Degree reverse lexicographic comparison.
    pub fn degrevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // walk from the smallest variable upwards; the first difference decides
        let (mut i, mut j) = (self.exps.len(), other.exps.len());
        loop {
            match (i, j) {
                (0, 0) => return Ordering::Equal,
                (0, _) => return Ordering::Greater,
                (_, 0) => return Ordering::Less,
                _ => {}
            }
            let (a, b) = (self.exps[i - 1], other.exps[j - 1]);
            match a.0.cmp(&b.0) {
                // self has a positive exponent at a smaller variable
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    if a.1 != b.1 {
                        return b.1.cmp(&a.1);
                    }
                    i -= 1;
                    j -= 1;
                }
            }
        }
    }

    /// Formats with the given variable names (falls back to `x<i>`).
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

fn to_u16(x: usize) -> u16 {
    u16::try_from(x).expect("index or exponent exceeds u16 range")
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degrevlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.mono.support().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            match self.names.get(v) {
                Some(name) => write!(f, "{}", name)?,
                None => write!(f, "x{}", v)?,
            }
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of degree `degree` in `nvars` variables, in decreasing
/// degrevlex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    let mut exps = vec![0u32; nvars];
    fill(&mut exps, 0, degree, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill(exps: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = left;
        out.push(Monomial::from_exponents(exps));
        exps[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[pos] = e;
        fill(exps, pos + 1, left - e, out);
    }
    exps[pos] = 0;
}
