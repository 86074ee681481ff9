//! Dense exact linear algebra over the rationals.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{FieldPoly, Monomial, Rational};

/// Row echelon form in place; returns the pivot columns.
pub fn row_reduce(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Coefficient vectors of `polys` on the given list of terms.
pub fn coefficient_rows(polys: &[FieldPoly], terms: &[Monomial]) -> Vec<Vec<Rational>> {
    let index: HashMap<&Monomial, usize> = terms.iter().enumerate().map(|(i, t)| (t, i)).collect();
    polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); terms.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect()
}

pub fn rank_of_polys(polys: &[FieldPoly], terms: &[Monomial]) -> usize {
    let mut rows = coefficient_rows(polys, terms);
    row_reduce(&mut rows, terms.len()).len()
}

/// Solution set of a system of polynomials of degree at most one in
/// `nvars` unknowns: a particular solution and a kernel basis, or `None`
/// when the system is inconsistent.
pub fn solve_linear(eqs: &[FieldPoly], nvars: usize) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let mut rows: Vec<Vec<Rational>> = eqs
        .iter()
        .map(|e| {
            let mut row = vec![Rational::zero(); nvars + 1];
            for (m, c) in e.terms() {
                match m.degree() {
                    0 => row[nvars] = -c.clone(),
                    1 => row[m.support().next().unwrap().0] = c.clone(),
                    _ => panic!("solve_linear: nonlinear equation"),
                }
            }
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows, nvars + 1);
    if pivots.last() == Some(&nvars) {
        return None;
    }
    let mut particular = vec![Rational::zero(); nvars];
    for (row, &p) in rows.iter().zip(&pivots) {
        particular[p] = row[nvars].clone();
    }
    let free: Vec<usize> = (0..nvars).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); nvars];
            v[f] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    Some((particular, kernel))
}
