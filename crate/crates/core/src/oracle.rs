//! Brute-force reference computations used to cross-check the igs machinery.
//!
//! Nothing here touches the `igs` module: subgroups are enumerated by closing
//! a generating set under multiplication, and subgroups of `Z^n` are handled
//! by an integer Hermite normal form.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cardinal::Cardinal;
use crate::collect::Element;
use crate::error::Error;
use crate::pcpres::PcPresentation;
use crate::Result;

pub const DEFAULT_ENUMERATION_BOUND: usize = 4096;

fn checked_order(pres: &PcPresentation, bound: usize) -> Result<usize> {
    match pres.group_order() {
        Cardinal::Infinite => Err(Error::InfiniteGroup),
        Cardinal::Finite(order) => match order.to_usize() {
            Some(o) if o <= bound => Ok(o),
            _ => Err(Error::BoundExceeded { order: order.to_string(), bound }),
        },
    }
}

/// Every element of a finite polycyclic group, listed by normal form.
#[derive(Debug, Clone)]
pub struct FiniteGroupTable {
    pres: Arc<PcPresentation>,
    elements: Vec<Element>,
}

impl FiniteGroupTable {
    pub fn new(pres: &Arc<PcPresentation>, bound: usize) -> Result<Self> {
        let order = checked_order(pres, bound)?;
        let radices: Vec<usize> = pres.orders().iter().map(|r| r.to_usize().unwrap()).collect();
        let mut elements = Vec::with_capacity(order);
        let mut digits = vec![0usize; radices.len()];
        loop {
            let exps = digits.iter().map(|&d| BigInt::from(d)).collect();
            elements.push(Element::from_exponents(pres, exps)?);
            // odometer, last position fastest
            let mut pos = radices.len();
            loop {
                if pos == 0 {
                    return Ok(FiniteGroupTable { pres: Arc::clone(pres), elements });
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < radices[pos] {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    pub fn presentation(&self) -> &Arc<PcPresentation> {
        &self.pres
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// The subgroup generated by `gens`, by saturating under right multiplication
/// with the generators. In a finite group this is closed under inverses too.
pub fn enumerate_subgroup(
    pres: &Arc<PcPresentation>,
    gens: &[Element],
    bound: usize,
) -> Result<HashSet<Element>> {
    checked_order(pres, bound)?;
    let id = Element::identity(pres);
    if gens.iter().any(|g| !g.same_presentation(&id)) {
        return Err(Error::Binding);
    }
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.multiply(g)?;
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}

/// Row-style Hermite normal form of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    /// Nonzero rows in echelon form; pivots positive and entries above each
    /// pivot reduced into `0..pivot`.
    pub rows: Vec<Vec<BigInt>>,
    /// Column of each row's pivot.
    pub pivot_cols: Vec<usize>,
    /// Unimodular `U` with `U * input` = `rows` followed by zero rows.
    pub transform: Vec<Vec<BigInt>>,
}

impl Hnf {
    pub fn pivots(&self) -> Vec<BigInt> {
        self.rows.iter().zip(&self.pivot_cols).map(|(r, &c)| r[c].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Index of the row lattice in `Z^ncols`.
    pub fn lattice_index(&self, ncols: usize) -> Cardinal {
        if self.rank() < ncols {
            return Cardinal::Infinite;
        }
        self.pivots().into_iter().map(|p| Cardinal::Finite(p.magnitude().clone())).product()
    }

    /// Whether `v` lies in the row lattice, by echelon back-substitution.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivot_cols) {
            if v[..c].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = v[c].div_rem(&row[c]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Computes the Hermite normal form of the row lattice of `m` (all rows of
/// length `ncols`).
pub fn hermite_normal_form(m: &[Vec<BigInt>], ncols: usize) -> Hnf {
    let nrows = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..nrows)
        .map(|i| (0..nrows).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();

    fn sub_multiple(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
        let src = rows[source].clone();
        for (x, y) in rows[target].iter_mut().zip(&src) {
            *x -= q * y;
        }
    }

    let mut pivot_cols = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == nrows {
            break;
        }
        // Euclid down the column until a single nonzero entry remains.
        loop {
            let best = (top..nrows)
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(best) = best else { break };
            a.swap(top, best);
            u.swap(top, best);
            let mut done = true;
            for i in top + 1..nrows {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[top][col]);
                sub_multiple(&mut a, i, top, &q);
                sub_multiple(&mut u, i, top, &q);
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[top][col].is_zero() {
            continue;
        }
        if a[top][col].is_negative() {
            for x in a[top].iter_mut().chain(u[top].iter_mut()) {
                *x = -&*x;
            }
        }
        for i in 0..top {
            let q = a[i][col].div_floor(&a[top][col]);
            if !q.is_zero() {
                sub_multiple(&mut a, i, top, &q);
                sub_multiple(&mut u, i, top, &q);
            }
        }
        pivot_cols.push(col);
        top += 1;
    }
    a.truncate(top);
    Hnf { rows: a, pivot_cols, transform: u }
}

/// Matrix product helper for checking `transform * input`.
pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|c| row.iter().zip(b).map(|(x, brow)| x * &brow[c]).sum())
                .collect()
        })
        .collect()
}
