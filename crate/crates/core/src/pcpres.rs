//! Polycyclic presentations, relation tails, generator words, and the
//! line-oriented `.pcp` file format.
//!
//! A presentation on generators `g_1, ..., g_n` with relative orders
//! `r_1, ..., r_n` (`0` meaning infinite) carries three families of relations:
//!
//! ```text
//! conj i j     g_i g_j      = g_j      * tail     (j < i)
//! invconj i j  g_i g_j^-1   = g_j^-1   * tail     (j < i, needed when r_j = 0)
//! power i      g_i^r_i      = tail                (r_i > 0)
//! ```
//!
//! Every tail is a normal-form word in generators strictly deeper than the key.
//! Missing `conj` entries mean the two generators commute; missing `power`
//! entries mean `g_i^r_i = 1`. The presentation is assumed consistent; only
//! the structural shape of the relations is validated here.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cardinal::Cardinal;
use crate::error::Error;
use crate::Result;

/// Right-hand side of a relation: `g_k1^e1 * g_k2^e2 * ...` with strictly
/// increasing indices and nonzero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Tail {
    entries: Vec<(usize, BigInt)>,
}

impl Tail {
    pub fn new(entries: Vec<(usize, BigInt)>) -> Result<Self> {
        for (pos, (k, e)) in entries.iter().enumerate() {
            if *k == 0 {
                return Err(Error::Validation("generator indices start at 1".into()));
            }
            if e.is_zero() {
                return Err(Error::Validation(format!("tail exponent of g{k} is zero")));
            }
            if pos > 0 && entries[pos - 1].0 >= *k {
                return Err(Error::Validation(
                    "tail indices must be strictly increasing".into(),
                ));
            }
        }
        Ok(Tail { entries })
    }

    pub fn identity() -> Self {
        Tail::default()
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_empty()
    }

    fn is_generator(&self, i: usize) -> bool {
        self.entries.len() == 1 && self.entries[0].0 == i && self.entries[0].1.is_one()
    }
}

/// An unreduced product of generator powers, e.g. `g2*g1^-3*g2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    entries: Vec<(usize, BigInt)>,
}

impl Word {
    pub fn new(entries: Vec<(usize, BigInt)>) -> Self {
        Word { entries }
    }

    pub fn identity() -> Self {
        Word::default()
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.entries
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self.entries.iter().find(|(i, _)| *i == 0 || *i > n) {
            Some((i, _)) => Err(Error::Word {
                word: self.to_string(),
                msg: format!("generator g{i} out of range 1..={n}"),
            }),
            None => Ok(()),
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `g<i>^<e>` tokens joined by `*`. A missing exponent means 1;
    /// the empty string and `1` denote the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::identity());
        }
        let bad = |msg: String| Error::Word { word: s.to_string(), msg };
        let mut entries = Vec::new();
        for token in s.split('*') {
            let token = token.trim();
            let body = token
                .strip_prefix('g')
                .ok_or_else(|| bad(format!("token {token:?} does not start with 'g'")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad generator index in {token:?}")))?;
            if idx == 0 {
                return Err(bad("generator indices start at 1".into()));
            }
            let exp: BigInt = exp
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad exponent in {token:?}")))?;
            entries.push((idx, exp));
        }
        Ok(Word { entries })
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, i: usize, e: &BigInt) -> fmt::Result {
    if e.is_one() {
        write!(f, "g{i}")
    } else {
        write!(f, "g{i}^{e}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("1");
        }
        for (pos, (i, e)) in self.entries.iter().enumerate() {
            if pos > 0 {
                f.write_str("*")?;
            }
            write_power(f, *i, e)?;
        }
        Ok(())
    }
}

/// Writes a normal-form exponent vector (0-based) as a word, `1` for the identity.
pub(crate) fn fmt_exponents(f: &mut fmt::Formatter<'_>, exps: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (k, e) in exps.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write_power(f, k + 1, e)?;
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// A consistent polycyclic presentation. Immutable once built.
#[derive(Debug, Clone)]
pub struct PcPresentation {
    orders: Vec<BigInt>,
    conjugates: BTreeMap<(usize, usize), Tail>,
    inv_conjugates: BTreeMap<(usize, usize), Tail>,
    powers: BTreeMap<usize, Tail>,
    // Tails as dense 0-based exponent vectors, `None` where the relation is
    // trivial. Indexed by `i * n + j`.
    pub(crate) conj_img: Vec<Option<Vec<BigInt>>>,
    pub(crate) inv_conj_img: Vec<Option<Vec<BigInt>>>,
    pub(crate) power_img: Vec<Option<Vec<BigInt>>>,
}

impl PartialEq for PcPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.orders == other.orders
            && self.conjugates == other.conjugates
            && self.inv_conjugates == other.inv_conjugates
            && self.powers == other.powers
    }
}

impl Eq for PcPresentation {}

impl PcPresentation {
    /// Builds and structurally validates a presentation. Keys are 1-based:
    /// `conjugates[(i, j)]` is the tail of `g_i g_j = g_j * tail`.
    pub fn new(
        orders: Vec<BigInt>,
        conjugates: BTreeMap<(usize, usize), Tail>,
        inv_conjugates: BTreeMap<(usize, usize), Tail>,
        powers: BTreeMap<usize, Tail>,
    ) -> Result<Self> {
        let n = orders.len();
        if n == 0 {
            return Err(Error::Validation("a presentation needs at least one generator".into()));
        }
        if let Some(r) = orders.iter().find(|r| r.is_negative()) {
            return Err(Error::Validation(format!("negative relative order {r}")));
        }

        let check_tail = |what: &str, above: usize, tail: &Tail| -> Result<()> {
            for (k, e) in tail.entries() {
                if *k <= above || *k > n {
                    return Err(Error::Validation(format!(
                        "{what}: tail generator g{k} must lie in g{}..g{n}",
                        above + 1
                    )));
                }
                let r = &orders[k - 1];
                if r.is_positive() && (e.is_negative() || e >= r) {
                    return Err(Error::Validation(format!(
                        "{what}: exponent {e} of g{k} outside 0..{r}"
                    )));
                }
            }
            Ok(())
        };
        let check_pair = |what: &str, i: usize, j: usize| -> Result<()> {
            if !(1 <= j && j < i && i <= n) {
                return Err(Error::Validation(format!(
                    "{what} {i} {j}: need 1 <= j < i <= {n}"
                )));
            }
            Ok(())
        };

        for (&(i, j), tail) in &conjugates {
            check_pair("conj", i, j)?;
            check_tail(&format!("conj {i} {j}"), j, tail)?;
        }
        for (&(i, j), tail) in &inv_conjugates {
            check_pair("invconj", i, j)?;
            check_tail(&format!("invconj {i} {j}"), j, tail)?;
        }
        for (&i, tail) in &powers {
            if i == 0 || i > n {
                return Err(Error::Validation(format!("power {i}: generator out of range")));
            }
            if orders[i - 1].is_zero() {
                return Err(Error::Validation(format!(
                    "power {i}: g{i} has infinite relative order"
                )));
            }
            check_tail(&format!("power {i}"), i, tail)?;
        }
        // Collection rewrites g_i past g_j^-1 exactly when r_j = 0.
        for (&(i, j), tail) in &conjugates {
            if orders[j - 1].is_zero()
                && !tail.is_generator(i)
                && !inv_conjugates.contains_key(&(i, j))
            {
                return Err(Error::Validation(format!(
                    "missing invconj {i} {j}: g{j} has infinite relative order and conj {i} {j} is nontrivial"
                )));
            }
        }

        let dense = |tail: &Tail| {
            let mut v = vec![BigInt::zero(); n];
            for (k, e) in tail.entries() {
                v[k - 1] = e.clone();
            }
            v
        };
        let mut conj_img = vec![None; n * n];
        for (&(i, j), tail) in &conjugates {
            if !tail.is_generator(i) {
                conj_img[(i - 1) * n + (j - 1)] = Some(dense(tail));
            }
        }
        let mut inv_conj_img = vec![None; n * n];
        for (&(i, j), tail) in &inv_conjugates {
            if !tail.is_generator(i) {
                inv_conj_img[(i - 1) * n + (j - 1)] = Some(dense(tail));
            }
        }
        let mut power_img = vec![None; n];
        for (&i, tail) in &powers {
            if !tail.is_identity() {
                power_img[i - 1] = Some(dense(tail));
            }
        }

        Ok(PcPresentation {
            orders,
            conjugates,
            inv_conjugates,
            powers,
            conj_img,
            inv_conj_img,
            power_img,
        })
    }

    /// The free abelian group `Z^n`.
    pub fn free_abelian(n: usize) -> Result<Self> {
        Self::new(vec![BigInt::zero(); n], BTreeMap::new(), BTreeMap::new(), BTreeMap::new())
    }

    /// The cyclic group of order `m` on one generator (`m = 0` gives `Z`).
    pub fn cyclic(m: u64) -> Result<Self> {
        Self::new(vec![BigInt::from(m)], BTreeMap::new(), BTreeMap::new(), BTreeMap::new())
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_pcp(text)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        parse_pcp(&text)
    }

    /// Number of generators.
    pub fn n(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    /// Relative order `r_i` of generator `i` (1-based); zero means infinite.
    pub fn relative_order(&self, i: usize) -> &BigInt {
        &self.orders[i - 1]
    }

    pub fn conjugate(&self, i: usize, j: usize) -> Option<&Tail> {
        self.conjugates.get(&(i, j))
    }

    pub fn inverse_conjugate(&self, i: usize, j: usize) -> Option<&Tail> {
        self.inv_conjugates.get(&(i, j))
    }

    pub fn power(&self, i: usize) -> Option<&Tail> {
        self.powers.get(&i)
    }

    pub fn conjugates(&self) -> &BTreeMap<(usize, usize), Tail> {
        &self.conjugates
    }

    pub fn inv_conjugates(&self) -> &BTreeMap<(usize, usize), Tail> {
        &self.inv_conjugates
    }

    pub fn powers(&self) -> &BTreeMap<usize, Tail> {
        &self.powers
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|r| r.is_positive())
    }

    /// `|G| = r_1 * ... * r_n`.
    pub fn group_order(&self) -> Cardinal {
        self.orders.iter().map(Cardinal::from_relative_order).product()
    }

    /// True when this is the standard presentation of `Z^n`: all relative
    /// orders infinite and all generators commuting.
    pub fn is_free_abelian(&self) -> bool {
        self.orders.iter().all(|r| r.is_zero())
            && self.conj_img.iter().all(Option::is_none)
            && self.inv_conj_img.iter().all(Option::is_none)
    }

    /// Serialises to the `.pcp` format; `parse` inverts this exactly.
    pub fn to_pcp_string(&self) -> String {
        let mut out = format!("pcp {}\norders", self.n());
        for r in &self.orders {
            out.push_str(&format!(" {r}"));
        }
        out.push('\n');
        let tail_str = |t: &Tail| {
            t.entries().iter().map(|(k, e)| format!(" {k}^{e}")).collect::<String>()
        };
        for ((i, j), t) in &self.conjugates {
            out.push_str(&format!("conj {i} {j}{}\n", tail_str(t)));
        }
        for ((i, j), t) in &self.inv_conjugates {
            out.push_str(&format!("invconj {i} {j}{}\n", tail_str(t)));
        }
        for (i, t) in &self.powers {
            out.push_str(&format!("power {i}{}\n", tail_str(t)));
        }
        out
    }
}

impl fmt::Display for PcPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pcp_string())
    }
}

impl FromStr for PcPresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pcp(s)
    }
}

/// Reads a presentation in the `.pcp` format from a byte stream.
pub fn load_presentation<R: Read>(mut source: R) -> Result<PcPresentation> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    let text = String::from_utf8(bytes).map_err(|_| Error::Syntax {
        line: 0,
        msg: "input is not valid UTF-8".into(),
    })?;
    parse_pcp(&text)
}

fn parse_pcp(text: &str) -> Result<PcPresentation> {
    let mut n: Option<usize> = None;
    let mut orders: Option<Vec<BigInt>> = None;
    let mut conjugates = BTreeMap::new();
    let mut inv_conjugates = BTreeMap::new();
    let mut powers = BTreeMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |msg: String| Error::Syntax { line, msg };
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        let rest: Vec<&str> = tokens.collect();

        let int = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| syntax(format!("expected a non-negative integer, got {s:?}")))
        };
        let tail = |toks: &[&str]| -> Result<Tail> {
            let mut entries = Vec::with_capacity(toks.len());
            for tok in toks {
                let (k, e) = tok.split_once('^').unwrap_or((tok, "1"));
                let k = int(k)?;
                let e: BigInt =
                    e.parse().map_err(|_| syntax(format!("bad exponent in {tok:?}")))?;
                entries.push((k, e));
            }
            Tail::new(entries).map_err(|e| match e {
                Error::Validation(msg) => Error::Syntax { line, msg },
                other => other,
            })
        };

        match (keyword, n.is_some(), orders.is_some()) {
            ("pcp", false, _) => {
                if rest.len() != 1 {
                    return Err(syntax("expected `pcp <n>`".into()));
                }
                n = Some(int(rest[0])?);
            }
            (_, false, _) => return Err(syntax("the first line must be `pcp <n>`".into())),
            ("orders", true, false) => {
                let count = n.unwrap_or_default();
                if rest.len() != count {
                    return Err(syntax(format!("expected {count} relative orders, got {}", rest.len())));
                }
                let parsed = rest
                    .iter()
                    .map(|s| int(s).map(BigInt::from))
                    .collect::<Result<Vec<_>>>()?;
                orders = Some(parsed);
            }
            (_, true, false) => return Err(syntax("expected `orders` after `pcp`".into())),
            ("conj" | "invconj", true, true) => {
                if rest.len() < 2 {
                    return Err(syntax(format!("expected `{keyword} <i> <j> ...`")));
                }
                let key = (int(rest[0])?, int(rest[1])?);
                let map = if keyword == "conj" { &mut conjugates } else { &mut inv_conjugates };
                if map.insert(key, tail(&rest[2..])?).is_some() {
                    return Err(syntax(format!("duplicate `{keyword} {} {}`", key.0, key.1)));
                }
            }
            ("power", true, true) => {
                if rest.is_empty() {
                    return Err(syntax("expected `power <i> ...`".into()));
                }
                let key = int(rest[0])?;
                if powers.insert(key, tail(&rest[1..])?).is_some() {
                    return Err(syntax(format!("duplicate `power {key}`")));
                }
            }
            (other, _, _) => return Err(syntax(format!("unknown directive {other:?}"))),
        }
    }

    let orders = orders.ok_or(Error::Syntax {
        line: 0,
        msg: "missing `pcp` or `orders` line".into(),
    })?;
    PcPresentation::new(orders, conjugates, inv_conjugates, powers)
}

/// Checks every stored `invconj i j` tail against the `conj` relations by
/// collecting `(g_j^-1 * tail) * g_j` and comparing with `g_i`. Returns the
/// failing `(i, j)` keys.
pub fn validate_inverse_tails(pres: &PcPresentation) -> Vec<(usize, usize)> {
    let n = pres.n();
    let mut bad = Vec::new();
    for (&(i, j), tail) in pres.inv_conjugates() {
        let mut v = vec![BigInt::zero(); n];
        pres.mul_gen_power(&mut v, j - 1, &-BigInt::one());
        for (k, e) in tail.entries() {
            pres.mul_gen_power(&mut v, k - 1, e);
        }
        pres.mul_gen_power(&mut v, j - 1, &BigInt::one());
        let expected: Vec<BigInt> =
            (0..n).map(|k| if k == i - 1 { BigInt::one() } else { BigInt::zero() }).collect();
        if v != expected {
            bad.push((i, j));
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    const D8: &str = "pcp 3\norders 2 2 2\nconj 2 1 2^1 3^1\npower 2 3^1\n";

    #[test]
    fn cyclic_defaults() {
        let p = PcPresentation::parse("pcp 1\norders 4\n").unwrap();
        assert_eq!(p.n(), 1);
        assert_eq!(p.relative_order(1), &BigInt::from(4));
        assert!(p.power(1).is_none());
        assert_eq!(p.group_order(), Cardinal::from(4u32));
    }

    #[test]
    fn d8_parses() {
        let p = PcPresentation::parse(D8).unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.conjugate(2, 1).unwrap().entries().len(), 2);
        assert!(p.conjugate(3, 1).is_none());
        assert_eq!(p.group_order(), Cardinal::from(8u32));
    }

    #[test]
    fn comments_and_bare_indices() {
        let p = PcPresentation::parse(
            "# dihedral of order 8\npcp 3   # three generators\norders 2 2 2\n\nconj 2 1 2 3\npower 2 3\n",
        )
        .unwrap();
        assert_eq!(p, PcPresentation::parse(D8).unwrap());
    }

    #[test]
    fn tail_index_must_exceed_key() {
        let err = PcPresentation::parse("pcp 2\norders 2 2\nconj 2 1 1^1\n").unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn tail_exponent_range() {
        let err = PcPresentation::parse("pcp 2\norders 2 2\npower 1 2^2\n").unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
        let err = PcPresentation::parse("pcp 2\norders 2 2\npower 1 2^-1\n").unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
        // infinite positions take any exponent
        PcPresentation::parse("pcp 2\norders 2 0\nconj 2 1 2^-1\n").unwrap();
    }

    #[test]
    fn missing_inverse_tail() {
        let heis = "pcp 3\norders 0 0 0\nconj 2 1 2 3\n";
        let err = PcPresentation::parse(heis).unwrap_err();
        assert!(err.to_string().contains("missing invconj 2 1"), "{err}");
        PcPresentation::parse(&format!("{heis}invconj 2 1 2 3^-1\n")).unwrap();
    }

    #[test]
    fn power_on_infinite_generator_rejected() {
        assert!(PcPresentation::parse("pcp 2\norders 0 0\npower 1 2\n").is_err());
    }

    #[test]
    fn syntax_errors() {
        for bad in [
            "",
            "orders 2\n",
            "pcp 2\nconj 2 1\n",
            "pcp 2\norders 2\n",
            "pcp 2\norders 2 x\n",
            "pcp 2\norders 2 2\nfoo 1\n",
            "pcp 2\norders 2 2\nconj 2\n",
            "pcp 2\norders 2 2\npower 1 2^1\npower 1 2^1\n",
            "pcp 2\norders 2 2\nconj 2 1 2^a\n",
            "pcp 3\norders 2 2 2\nconj 3 1 3^1 2^1\n",
            "pcp 2\norders 2 2\nconj 2 1 2^0\n",
        ] {
            let err = PcPresentation::parse(bad).unwrap_err();
            assert!(matches!(err, Error::Syntax { .. }), "{bad:?} gave {err}");
        }
    }

    #[test]
    fn save_round_trip() {
        let p = PcPresentation::parse(D8).unwrap();
        let text = p.to_pcp_string();
        assert_eq!(text, D8);
        assert_eq!(PcPresentation::parse(&text).unwrap(), p);
    }

    #[test]
    fn load_from_reader() {
        let p = load_presentation(D8.as_bytes()).unwrap();
        assert_eq!(p.n(), 3);
        let err = load_presentation(&[0xffu8, 0xfe][..]).unwrap_err();
        assert!(matches!(err, Error::Syntax { .. }));
    }

    #[test]
    fn words() {
        let w: Word = "g1^2*g3^-1".parse().unwrap();
        assert_eq!(w.entries(), &[(1, BigInt::from(2)), (3, BigInt::from(-1))]);
        assert_eq!(w.to_string(), "g1^2*g3^-1");
        let w: Word = " g2 * g1 ".parse().unwrap();
        assert_eq!(w.to_string(), "g2*g1");
        assert_eq!("1".parse::<Word>().unwrap(), Word::identity());
        assert_eq!("".parse::<Word>().unwrap(), Word::identity());
        for bad in ["h1", "g", "g0", "g1^", "g1^x", "g1**g2"] {
            assert!(bad.parse::<Word>().is_err(), "{bad}");
        }
        assert!("g4".parse::<Word>().unwrap().validate(3).is_err());
        assert!("g3".parse::<Word>().unwrap().validate(3).is_ok());
    }

    #[test]
    fn inverse_tails_checked() {
        assert!(validate_inverse_tails(&PcPresentation::parse(D8).unwrap()).is_empty());
        let good = "pcp 2\norders 2 0\nconj 2 1 2^-1\ninvconj 2 1 2^-1\n";
        assert!(validate_inverse_tails(&PcPresentation::parse(good).unwrap()).is_empty());
        let bad = "pcp 2\norders 2 0\nconj 2 1 2^-1\ninvconj 2 1 2^1\n";
        assert_eq!(validate_inverse_tails(&PcPresentation::parse(bad).unwrap()), vec![(2, 1)]);
        let heis = "pcp 3\norders 0 0 0\nconj 2 1 2 3\ninvconj 2 1 2 3^-1\n";
        assert!(validate_inverse_tails(&PcPresentation::parse(heis).unwrap()).is_empty());
        let heis_bad = "pcp 3\norders 0 0 0\nconj 2 1 2 3\ninvconj 2 1 2 3\n";
        assert_eq!(validate_inverse_tails(&PcPresentation::parse(heis_bad).unwrap()), vec![(2, 1)]);
    }

    #[test]
    fn free_abelian_detection() {
        assert!(PcPresentation::free_abelian(3).unwrap().is_free_abelian());
        assert!(!PcPresentation::parse(D8).unwrap().is_free_abelian());
        assert_eq!(PcPresentation::free_abelian(2).unwrap().group_order(), Cardinal::Infinite);
    }
}
