//! Induced generating sequences: the non-commutative Gauss algorithm.
//!
//! A [`PartialIgs`] has one slot per depth; slot `d` is empty or holds a
//! normalised element of depth `d`. Adding an element runs a Euclid-style
//! elimination down the slots. [`igs_by_generators`] repeats this while also
//! feeding back powers and commutators of every changed slot, which closes the
//! slots into an [`Igs`]. From an igs we read off order and index, sift for
//! membership, and reduce to the canonical igs that decides subgroup equality.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cardinal::Cardinal;
use crate::collect::{mod_inverse, Element};
use crate::error::Error;
use crate::pcpres::PcPresentation;
use crate::Result;

/// A length-`n` list of slots; slot `d` is empty or a normalised element of depth `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialIgs {
    pres: Arc<PcPresentation>,
    slots: Vec<Option<Element>>,
}

/// Elements waiting to be eliminated, shallowest depth first and FIFO among
/// equal depths.
struct WorkList {
    queue: BTreeMap<(usize, u64), Element>,
    seq: u64,
}

impl WorkList {
    fn new() -> Self {
        WorkList { queue: BTreeMap::new(), seq: 0 }
    }

    fn push(&mut self, g: Element) {
        self.seq += 1;
        self.queue.insert((g.depth(), self.seq), g);
    }

    fn pop(&mut self) -> Option<Element> {
        self.queue.pop_first().map(|(_, g)| g)
    }
}

/// `h * k^(-l(h) / l(k))`; `l(k)` divides `l(h)` by construction.
fn quotient(h: &Element, k: &Element) -> Element {
    let lh = h.leading_exponent().expect("nontrivial element");
    let lk = k.leading_exponent().expect("nontrivial element");
    debug_assert!(lh.is_multiple_of(lk));
    h.mul_unchecked(&k.pow(&-(lh / lk)))
}

impl PartialIgs {
    pub fn new(pres: &Arc<PcPresentation>) -> Self {
        PartialIgs { pres: Arc::clone(pres), slots: vec![None; pres.n()] }
    }

    pub fn presentation(&self) -> &Arc<PcPresentation> {
        &self.pres
    }

    /// The element at depth `d` (1-based), if any.
    pub fn slot(&self, d: usize) -> Option<&Element> {
        self.slots.get(d.wrapping_sub(1)).and_then(Option::as_ref)
    }

    pub fn slots(&self) -> &[Option<Element>] {
        &self.slots
    }

    /// Occupied slots as `(depth, element)` in depth order.
    pub fn occupied(&self) -> impl Iterator<Item = (usize, &Element)> {
        self.slots.iter().enumerate().filter_map(|(k, s)| s.as_ref().map(|g| (k + 1, g)))
    }

    /// Smallest `l` such that slots `l..=n` are all filled with leading
    /// exponent 1, or `n + 1`. Those slots generate `G_l`.
    fn full_suffix_start(&self) -> usize {
        let mut l = self.slots.len() + 1;
        for slot in self.slots.iter().rev() {
            match slot.as_ref().and_then(Element::leading_exponent) {
                Some(e) if e.is_one() => l -= 1,
                _ => break,
            }
        }
        l
    }

    fn set_slot(&mut self, d: usize, g: Element) {
        debug_assert_eq!(g.depth(), d);
        if let Some(old) = &self.slots[d - 1] {
            let (old_lead, new_lead) = (old.leading_exponent(), g.leading_exponent());
            assert!(
                old_lead.unwrap().is_multiple_of(new_lead.unwrap()),
                "slot {d}: leading exponent must shrink along a divisibility chain"
            );
        }
        self.slots[d - 1] = Some(g);
    }

    /// Adds `g` in place so that `<self>` becomes `<self, g>`. Returns the
    /// depths whose slot content changed.
    pub fn add(&mut self, g: &Element) -> Result<Vec<usize>> {
        if !g.same_presentation(&Element::identity(&self.pres)) {
            return Err(Error::Binding);
        }
        let before = self.slots.clone();
        let n = self.slots.len();
        let mut work = WorkList::new();
        work.push(g.clone());

        while let Some(h) = work.pop() {
            let d = h.depth();
            if d > n || d >= self.full_suffix_start() {
                continue;
            }
            let mut push = |x: Element| {
                assert!(x.depth() > d, "eliminated element did not get deeper");
                if !x.is_identity() {
                    work.push(x);
                }
            };
            match self.slots[d - 1].clone() {
                None => {
                    let normed = h.normalise()?;
                    let finite = self.pres.relative_order(d).is_positive();
                    self.set_slot(d, normed.clone());
                    if finite {
                        push(quotient(&h, &normed));
                    }
                }
                Some(k) => {
                    let a = h.leading_exponent().unwrap().clone();
                    let b = k.leading_exponent().unwrap().clone();
                    let e = a.gcd(&b);
                    if e == b {
                        // k already generates the image of h
                        push(quotient(&h, &k));
                    } else if e == a.abs() {
                        let normed = h.normalise()?;
                        self.set_slot(d, normed.clone());
                        push(quotient(&k, &normed));
                    } else {
                        let bez = a.extended_gcd(&b);
                        let (u, v) = if bez.gcd.is_negative() {
                            (-bez.x, -bez.y)
                        } else {
                            (bez.x, bez.y)
                        };
                        let w = h.pow(&u).mul_unchecked(&k.pow(&v));
                        let normed = w.normalise()?;
                        self.set_slot(d, normed.clone());
                        push(quotient(&h, &normed));
                        push(quotient(&k, &normed));
                    }
                }
            }
        }

        // Once slots l..=n all have leading exponent 1 they generate G_l, so
        // the generators themselves can stand in for them.
        let l = self.full_suffix_start();
        for d in l..=n {
            let gen = Element::generator(&self.pres, d)?;
            if self.slots[d - 1].as_ref() != Some(&gen) {
                self.slots[d - 1] = Some(gen);
            }
        }

        Ok((1..=n).filter(|&d| before[d - 1] != self.slots[d - 1]).collect())
    }

    pub fn to_igs(&self) -> Igs {
        Igs { pres: Arc::clone(&self.pres), gens: self.slots.iter().flatten().cloned().collect() }
    }
}

/// Returns `J` with `<J> = <pigs, g>` together with the depths whose slots changed.
pub fn add_gen_to_pigs(pigs: &PartialIgs, g: &Element) -> Result<(PartialIgs, Vec<usize>)> {
    let mut next = pigs.clone();
    let changed = next.add(g)?;
    Ok((next, changed))
}

/// An induced generating sequence `u_1, ..., u_m` with strictly increasing depths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Igs {
    pres: Arc<PcPresentation>,
    gens: Vec<Element>,
}

/// Computes an igs of the subgroup generated by `gens`.
pub fn igs_by_generators(pres: &Arc<PcPresentation>, gens: &[Element]) -> Result<Igs> {
    let id = Element::identity(pres);
    if gens.iter().any(|g| !g.same_presentation(&id)) {
        return Err(Error::Binding);
    }
    let mut pigs = PartialIgs::new(pres);
    let mut work: VecDeque<Element> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();

    while let Some(g) = work.pop_front() {
        let changed = pigs.add(&g)?;
        for d in changed {
            let x = pigs.slot(d).expect("changed slots are filled").clone();
            if let Some(Cardinal::Finite(r)) = x.relative_order() {
                let p = x.pow(&BigInt::from(r));
                if !p.is_identity() {
                    work.push_back(p);
                }
            }
            for (e, y) in pigs.occupied() {
                if e != d {
                    let c = x.commutator(y)?;
                    if !c.is_identity() {
                        work.push_back(c);
                    }
                }
            }
        }
    }
    Ok(pigs.to_igs())
}

/// Sifts `g` through a depth-sorted list. Returns the residue and whether it
/// reached the identity. Reaching the identity always proves membership in
/// `<gens>`; failing proves non-membership when `gens` is an igs.
fn sift_through(gens: &[Element], g: &Element) -> (Element, bool) {
    let mut res = g.clone();
    for u in gens {
        let d = u.depth();
        let rd = res.depth();
        if rd < d {
            break;
        }
        if rd > d {
            continue;
        }
        let e = res.leading_exponent().unwrap();
        let l = u.leading_exponent().unwrap();
        let r = u.presentation().relative_order(d);
        let q = if r.is_zero() {
            if !e.is_multiple_of(l) {
                break;
            }
            e / l
        } else {
            // solve q * l = e (mod r)
            let gcd = l.gcd(r);
            if !e.is_multiple_of(&gcd) {
                break;
            }
            let modulus = r / &gcd;
            ((e / &gcd) * mod_inverse(&(l / &gcd), &modulus)).mod_floor(&modulus)
        };
        res = res.mul_unchecked(&u.pow(&-q));
        assert!(res.depth() > d, "sifting did not increase depth");
    }
    let member = res.is_identity();
    (res, member)
}

/// Tests the igs criterion on a candidate list: nontrivial normalised
/// elements of strictly increasing depth such that for all `j < i`,
/// `u_i^(u_j)` lies in `<u_(j+1), ..., u_m>`, and `u_i^(r(u_i))` lies in
/// `<u_(i+1), ..., u_m>` whenever `r(u_i)` is finite.
pub fn verify_igs(candidate: &[Element]) -> bool {
    let Some(first) = candidate.first() else {
        return true;
    };
    if candidate.iter().any(|u| !u.same_presentation(first) || u.is_identity() || !u.is_normalised()) {
        return false;
    }
    if candidate.windows(2).any(|w| w[0].depth() >= w[1].depth()) {
        return false;
    }
    for (i, u) in candidate.iter().enumerate() {
        if let Some(Cardinal::Finite(r)) = u.relative_order() {
            let p = u.pow(&BigInt::from(r));
            if !sift_through(&candidate[i + 1..], &p).1 {
                return false;
            }
        }
        for (j, v) in candidate[..i].iter().enumerate() {
            let c = v.inverse().mul_unchecked(u).mul_unchecked(v);
            if !sift_through(&candidate[j + 1..], &c).1 {
                return false;
            }
        }
    }
    true
}

impl Igs {
    pub fn presentation(&self) -> &Arc<PcPresentation> {
        &self.pres
    }

    pub fn gens(&self) -> &[Element] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn depths(&self) -> Vec<usize> {
        self.gens.iter().map(Element::depth).collect()
    }

    pub fn verify(&self) -> bool {
        verify_igs(&self.gens)
    }

    /// `|U| = r(u_1) * ... * r(u_m)`.
    pub fn order(&self) -> Cardinal {
        self.gens.iter().map(|u| u.relative_order().expect("nontrivial")).product()
    }

    /// `[G:U] = l(u_1) * ... * l(u_m) * prod r_d` over depths `d` not hit.
    pub fn index(&self) -> Cardinal {
        let depths = self.depths();
        let leads: Cardinal = self
            .gens
            .iter()
            .map(|u| Cardinal::Finite(u.leading_exponent().unwrap().magnitude().clone()))
            .product();
        let missing: Cardinal = (1..=self.pres.n())
            .filter(|d| !depths.contains(d))
            .map(|d| Cardinal::from_relative_order(self.pres.relative_order(d)))
            .product();
        leads * missing
    }

    /// Divides `g` by the igs depth by depth; `(residue, is_member)`.
    pub fn sift(&self, g: &Element) -> Result<(Element, bool)> {
        if !g.same_presentation(&Element::identity(&self.pres)) {
            return Err(Error::Binding);
        }
        Ok(sift_through(&self.gens, g))
    }

    pub fn contains(&self, g: &Element) -> Result<bool> {
        self.sift(g).map(|(_, m)| m)
    }

    /// Reduces, for every `u_k` at depth `d`, the `d`-th exponent of each
    /// earlier `u_i` into `0..l(u_k)` by replacing `u_i` with `u_i * u_k^-q`.
    /// The result is unique per subgroup.
    pub fn canonical(&self) -> Igs {
        let mut gens = self.gens.clone();
        for i in 0..gens.len() {
            for k in i + 1..gens.len() {
                let d = gens[k].depth();
                let l = gens[k].leading_exponent().unwrap();
                let q = gens[i].exponents()[d - 1].div_floor(l);
                if !q.is_zero() {
                    let reduced = gens[i].mul_unchecked(&gens[k].pow(&-q));
                    gens[i] = reduced;
                }
            }
        }
        Igs { pres: Arc::clone(&self.pres), gens }
    }
}

impl fmt::Display for Igs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, u) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}")?;
        }
        f.write_str("]")
    }
}

/// Decides `<u_gens> = <v_gens>` by comparing canonical igs.
pub fn subgroups_equal(
    pres: &Arc<PcPresentation>,
    u_gens: &[Element],
    v_gens: &[Element],
) -> Result<bool> {
    let u = igs_by_generators(pres, u_gens)?.canonical();
    let v = igs_by_generators(pres, v_gens)?.canonical();
    Ok(u.gens == v.gens)
}
