//! Group elements in normal form and the collector that produces them.
//!
//! Collection works from the left: the collected prefix is kept as a
//! normal-form exponent vector, and each new generator power `g_k^e` is moved
//! into position `k` by conjugating the part of the prefix deeper than `k`:
//!
//! ```text
//! (A * g_k^a * T) * g_k^e = A * g_k^(a+e) * T^(g_k^e)
//! ```
//!
//! `T^(g_k^e)` lies in `G_(k+1)`. For large `|e|` it is computed by squaring
//! the conjugation automorphism, so the cost grows with `log |e|`. Every
//! recursive call works in a strictly deeper subgroup, which bounds the
//! recursion.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cardinal::Cardinal;
use crate::error::Error;
use crate::pcpres::{fmt_exponents, PcPresentation, Word};
use crate::Result;

// Vector-level collector. Indices are 0-based; vectors have length n and are
// always in normal form.
impl PcPresentation {
    /// `v := v * g_k^e`.
    pub(crate) fn mul_gen_power(&self, v: &mut [BigInt], k: usize, e: &BigInt) {
        if e.is_zero() {
            return;
        }
        let r = &self.orders()[k];
        if r.is_positive() {
            // g_k^e = g_k^rem * (g_k^r)^q with 0 <= rem < r
            let (q, rem) = e.div_mod_floor(r);
            if !rem.is_zero() {
                self.mul_gen_reduced(v, k, &rem);
            }
            if !q.is_zero() {
                if let Some(p) = &self.power_img[k] {
                    let pq = self.pow_vec(p, &q);
                    self.mul_vec(v, &pq);
                }
            }
        } else {
            self.mul_gen_reduced(v, k, e);
        }
    }

    // Requires 0 < e < r_k when r_k > 0.
    fn mul_gen_reduced(&self, v: &mut [BigInt], k: usize, e: &BigInt) {
        let moved = if v[k + 1..].iter().any(|x| !x.is_zero()) {
            let mut tail = vec![BigInt::zero(); v.len()];
            for (dst, src) in tail[k + 1..].iter_mut().zip(v[k + 1..].iter_mut()) {
                std::mem::swap(dst, src);
            }
            Some(self.conj_by_gen_power(tail, k, e))
        } else {
            None
        };
        v[k] += e;
        let r = &self.orders()[k];
        if r.is_positive() && &v[k] >= r {
            v[k] -= r;
            if let Some(p) = &self.power_img[k] {
                self.mul_vec(v, p);
            }
        }
        if let Some(t) = moved {
            self.mul_vec(v, &t);
        }
    }

    /// `v := v * w` for normal-form `w`.
    pub(crate) fn mul_vec(&self, v: &mut [BigInt], w: &[BigInt]) {
        for (k, e) in w.iter().enumerate() {
            if !e.is_zero() {
                self.mul_gen_power(v, k, e);
            }
        }
    }

    pub(crate) fn inv_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); v.len()];
        for (k, e) in v.iter().enumerate().rev() {
            if !e.is_zero() {
                self.mul_gen_power(&mut out, k, &-e);
            }
        }
        out
    }

    pub(crate) fn pow_vec(&self, v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        let n = v.len();
        let mut out = vec![BigInt::zero(); n];
        if m.is_zero() {
            return out;
        }
        let mut support = v.iter().enumerate().filter(|(_, e)| !e.is_zero());
        match (support.next(), support.next()) {
            (None, _) => return out,
            (Some((k, e)), None) => {
                self.mul_gen_power(&mut out, k, &(e * m));
                return out;
            }
            _ => {}
        }
        let mut base = if m.is_negative() { self.inv_vec(v) } else { v.to_vec() };
        let mut m = m.abs();
        loop {
            if m.is_odd() {
                self.mul_vec(&mut out, &base);
            }
            m >>= 1u32;
            if m.is_zero() {
                break;
            }
            let square = base.clone();
            self.mul_vec(&mut base, &square);
        }
        out
    }

    /// `g_k^-e * t * g_k^e` for `t` supported on positions deeper than `k`.
    fn conj_by_gen_power(&self, t: Vec<BigInt>, k: usize, e: &BigInt) -> Vec<BigInt> {
        let n = t.len();
        let images = if e.is_positive() { &self.conj_img } else { &self.inv_conj_img };
        let commutes = t
            .iter()
            .enumerate()
            .all(|(l, x)| x.is_zero() || images[l * n + k].is_none());
        if commutes {
            return t;
        }
        let step = |x: &[BigInt]| {
            let mut out = vec![BigInt::zero(); n];
            for (l, xl) in x.iter().enumerate().skip(k + 1) {
                if xl.is_zero() {
                    continue;
                }
                match &images[l * n + k] {
                    None => self.mul_gen_power(&mut out, l, xl),
                    Some(img) => {
                        let p = self.pow_vec(img, xl);
                        self.mul_vec(&mut out, &p);
                    }
                }
            }
            out
        };
        let mut m = e.abs();
        if m <= BigInt::from(4) {
            let mut t = t;
            while !m.is_zero() {
                t = step(&t);
                m -= 1;
            }
            return t;
        }
        // Square the automorphism x -> g_k^-s x g_k^s through the images of
        // g_(k+1), ..., g_n, and apply it along the binary digits of |e|.
        let mut auto: Vec<Vec<BigInt>> = (k + 1..n)
            .map(|l| {
                let mut unit = vec![BigInt::zero(); n];
                unit[l] = BigInt::one();
                step(&unit)
            })
            .collect();
        let mut t = t;
        loop {
            if m.is_odd() {
                t = self.apply_images(&auto, k, &t);
            }
            m >>= 1u32;
            if m.is_zero() {
                return t;
            }
            auto = auto.iter().map(|img| self.apply_images(&auto, k, img)).collect();
        }
    }

    /// Applies the endomorphism of `G_(k+1)` sending `g_(k+1+i)` to `auto[i]`.
    fn apply_images(&self, auto: &[Vec<BigInt>], k: usize, x: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); x.len()];
        for (img, xl) in auto.iter().zip(&x[k + 1..]) {
            if !xl.is_zero() {
                let p = self.pow_vec(img, xl);
                self.mul_vec(&mut out, &p);
            }
        }
        out
    }

    fn collect_word(&self, w: &Word) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.n()];
        for (i, e) in w.entries() {
            self.mul_gen_power(&mut v, i - 1, e);
        }
        v
    }
}

/// Collects a word to its normal form.
pub fn collect(pres: &Arc<PcPresentation>, w: &Word) -> Result<Element> {
    w.validate(pres.n())?;
    Ok(Element { pres: Arc::clone(pres), exps: pres.collect_word(w) })
}

/// A group element `g_1^e_1 * ... * g_n^e_n` in normal form, bound to its
/// presentation.
#[derive(Clone)]
pub struct Element {
    pres: Arc<PcPresentation>,
    exps: Vec<BigInt>,
}

/// Depth, leading exponent and relative order of an element. The identity
/// has depth `n + 1` and neither of the other two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementStats {
    pub depth: usize,
    pub leading_exponent: Option<BigInt>,
    pub relative_order: Option<Cardinal>,
}

impl Element {
    pub fn identity(pres: &Arc<PcPresentation>) -> Self {
        Element { pres: Arc::clone(pres), exps: vec![BigInt::zero(); pres.n()] }
    }

    /// The generator `g_i` (1-based).
    pub fn generator(pres: &Arc<PcPresentation>, i: usize) -> Result<Self> {
        if i == 0 || i > pres.n() {
            return Err(Error::Word {
                word: format!("g{i}"),
                msg: format!("generator out of range 1..={}", pres.n()),
            });
        }
        let mut exps = vec![BigInt::zero(); pres.n()];
        exps[i - 1] = BigInt::one();
        Ok(Element { pres: Arc::clone(pres), exps })
    }

    /// Builds an element from an exponent vector that is already in normal form.
    pub fn from_exponents(pres: &Arc<PcPresentation>, exps: Vec<BigInt>) -> Result<Self> {
        if exps.len() != pres.n() {
            return Err(Error::Validation(format!(
                "exponent vector has length {}, expected {}",
                exps.len(),
                pres.n()
            )));
        }
        for (k, (e, r)) in exps.iter().zip(pres.orders()).enumerate() {
            if r.is_positive() && (e.is_negative() || e >= r) {
                return Err(Error::Validation(format!(
                    "exponent {e} of g{} is not reduced modulo {r}",
                    k + 1
                )));
            }
        }
        Ok(Element { pres: Arc::clone(pres), exps })
    }

    pub fn from_i64s(pres: &Arc<PcPresentation>, exps: &[i64]) -> Result<Self> {
        Self::from_exponents(pres, exps.iter().map(|&e| BigInt::from(e)).collect())
    }

    /// Parses and collects a word such as `g1^2*g3^-1`.
    pub fn parse(pres: &Arc<PcPresentation>, word: &str) -> Result<Self> {
        collect(pres, &word.parse()?)
    }

    pub fn presentation(&self) -> &Arc<PcPresentation> {
        &self.pres
    }

    /// Normal-form exponents; index `k` holds the exponent of `g_(k+1)`.
    pub fn exponents(&self) -> &[BigInt] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<BigInt> {
        self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(Zero::is_zero)
    }

    pub fn same_presentation(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) || *self.pres == *other.pres
    }

    fn check_binding(&self, other: &Element) -> Result<()> {
        if self.same_presentation(other) {
            Ok(())
        } else {
            Err(Error::Binding)
        }
    }

    fn with_exps(&self, exps: Vec<BigInt>) -> Element {
        Element { pres: Arc::clone(&self.pres), exps }
    }

    pub(crate) fn mul_unchecked(&self, other: &Element) -> Element {
        debug_assert!(self.same_presentation(other));
        let mut v = self.exps.clone();
        self.pres.mul_vec(&mut v, &other.exps);
        self.with_exps(v)
    }

    pub fn multiply(&self, other: &Element) -> Result<Element> {
        self.check_binding(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn inverse(&self) -> Element {
        self.with_exps(self.pres.inv_vec(&self.exps))
    }

    /// `self^k`; negative `k` allowed.
    pub fn pow(&self, k: &BigInt) -> Element {
        self.with_exps(self.pres.pow_vec(&self.exps, k))
    }

    pub fn pow_i64(&self, k: i64) -> Element {
        self.pow(&BigInt::from(k))
    }

    /// `other^-1 * self * other`.
    pub fn conjugate(&self, other: &Element) -> Result<Element> {
        self.check_binding(other)?;
        Ok(other.inverse().mul_unchecked(self).mul_unchecked(other))
    }

    /// `[self, other] = self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Element) -> Result<Element> {
        self.check_binding(other)?;
        let left = self.inverse().mul_unchecked(&other.inverse());
        Ok(left.mul_unchecked(self).mul_unchecked(other))
    }

    /// 1-based position of the first nonzero exponent, `n + 1` for the identity.
    pub fn depth(&self) -> usize {
        self.exps.iter().position(|e| !e.is_zero()).map_or(self.exps.len() + 1, |k| k + 1)
    }

    pub fn leading_exponent(&self) -> Option<&BigInt> {
        self.exps.iter().find(|e| !e.is_zero())
    }

    /// Order of `g G_(d+1)` in `G_d / G_(d+1)`: `r_d / gcd(e_d, r_d)`, or
    /// infinite when `r_d = 0`.
    pub fn relative_order(&self) -> Option<Cardinal> {
        let d = self.depth();
        let lead = self.leading_exponent()?;
        let r = self.pres.relative_order(d);
        if r.is_zero() {
            Some(Cardinal::Infinite)
        } else {
            Some(Cardinal::Finite((r / lead.gcd(r)).magnitude().clone()))
        }
    }

    pub fn stats(&self) -> ElementStats {
        ElementStats {
            depth: self.depth(),
            leading_exponent: self.leading_exponent().cloned(),
            relative_order: self.relative_order(),
        }
    }

    /// The power of `self` whose leading exponent generates the cyclic image
    /// `<g G_(d+1)>` canonically: `|lead|` when `r_d = 0`, otherwise
    /// `gcd(lead, r_d)`.
    ///
    /// For finite `r_d = m` with `x = gcd(lead, m)` and `y = lead / x`, the
    /// exponent used is `z = y^-1 mod (m / x)`. The inverse of `y` modulo `m`
    /// itself need not exist (`lead = 4`, `m = 6`).
    pub fn normalise(&self) -> Result<Element> {
        let d = self.depth();
        let lead = self.leading_exponent().ok_or(Error::IdentityNormalisation)?;
        let m = self.pres.relative_order(d);
        if m.is_zero() {
            return Ok(if lead.is_negative() { self.inverse() } else { self.clone() });
        }
        let x = lead.gcd(m);
        let y = lead / &x;
        let modulus = m / &x;
        let z = mod_inverse(&y, &modulus);
        if z.is_one() {
            Ok(self.clone())
        } else {
            Ok(self.pow(&z))
        }
    }

    pub fn is_normalised(&self) -> bool {
        match self.normalise() {
            Ok(h) => h.exps == self.exps,
            Err(_) => false,
        }
    }

    pub fn to_word(&self) -> Word {
        Word::new(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(k, e)| (k + 1, e.clone()))
                .collect(),
        )
    }
}

/// Inverse of `y` modulo `m` for coprime `y`, `m` with `m >= 1`, in `0..m`.
pub(crate) fn mod_inverse(y: &BigInt, m: &BigInt) -> BigInt {
    let g = y.extended_gcd(m);
    debug_assert!(g.gcd.abs().is_one(), "{y} is not invertible modulo {m}");
    let x = if g.gcd.is_negative() { -g.x } else { g.x };
    x.mod_floor(m)
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps && self.same_presentation(other)
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_exponents(f, &self.exps)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}
