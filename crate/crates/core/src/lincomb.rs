//! Sparse integer linear combinations over an ordered set of basis keys.
//!
//! Every polynomial-like object in the crate (ab- and cd-polynomials,
//! quasisymmetric functions, tensors) is a `LinComb` over some key type.
//! Zero coefficients are never stored, so structural equality is equality
//! of elements.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A basis element that has a text form.
pub trait Monomial: Ord + Clone + fmt::Display + Sized {
    fn parse_monomial(s: &str) -> Result<Self>;

    /// The multiplicative unit, if the basis has one; lets a bare integer
    /// such as `3` parse as three times the unit.
    fn unit() -> Option<Self> {
        None
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff.into());
        out
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, BigInt> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: K, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    /// Linear extension of a map on basis keys.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Linear extension of a scalar functional on basis keys.
    pub fn eval_linear(&self, mut f: impl FnMut(&K) -> BigInt) -> BigInt {
        self.terms.iter().map(|(k, c)| c * f(k)).sum()
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigInt)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, BigInt);
    type IntoIter = btree_map::IntoIter<K, BigInt>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a BigInt);
    type IntoIter = btree_map::Iter<'a, K, BigInt>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> AddAssign for LinComb<K> {
    fn add_assign(&mut self, rhs: LinComb<K>) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self += rhs;
        self
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add<&LinComb<K>> for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: &LinComb<K>) -> LinComb<K> {
        self += rhs;
        self
    }
}

impl<K: Ord + Clone> Sub<&LinComb<K>> for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: &LinComb<K>) -> LinComb<K> {
        self -= rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        LinComb {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.clone().neg()
    }
}

impl<K: Ord + Clone> Sum for LinComb<K> {
    fn sum<I: Iterator<Item = LinComb<K>>>(iter: I) -> Self {
        let mut out = Self::zero();
        for x in iter {
            out += x;
        }
        out
    }
}

fn write_terms<K>(
    terms: &BTreeMap<K, BigInt>,
    f: &mut fmt::Formatter<'_>,
    key: impl Fn(&K, &mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (k, c)) in terms.iter().enumerate() {
        let sign = match (i, c.is_negative()) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        write!(f, "{sign}{}*", c.abs())?;
        key(k, f)?;
    }
    Ok(())
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(&self.terms, f, |k, f| write!(f, "{k}"))
    }
}

/// Same layout as `Display`, but usable for keys such as tuples.
impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(&self.terms, f, |k, f| write!(f, "{k:?}"))
    }
}

impl<K: Monomial> FromStr for LinComb<K> {
    type Err = Error;

    /// Parses `±k*monomial` terms joined by `+` or `-`. The coefficient and
    /// its `*` may be omitted; `0` is the zero element.
    fn from_str(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(input, "empty expression"));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut depth = 0usize;
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            match ch {
                '[' => {
                    depth += 1;
                    current.push(ch);
                }
                ']' => {
                    depth = depth.saturating_sub(1);
                    current.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if i > 0 {
                        if current.is_empty() {
                            return Err(Error::parse(input, "dangling sign"));
                        }
                        chunks.push((negative, std::mem::take(&mut current)));
                    }
                    negative = ch == '-';
                }
                _ => current.push(ch),
            }
        }
        if current.is_empty() {
            return Err(Error::parse(input, "dangling sign"));
        }
        chunks.push((negative, current));

        let mut out = Self::zero();
        for (negative, body) in chunks {
            let (coeff, mono) = split_coefficient(&body);
            let coeff: BigInt = match coeff {
                Some(digits) => digits
                    .parse()
                    .map_err(|_| Error::parse(input, format!("bad coefficient `{digits}`")))?,
                None => BigInt::one(),
            };
            let key = match mono {
                Some(m) => K::parse_monomial(m)?,
                None => K::unit().ok_or_else(|| Error::parse(input, "bare integer term"))?,
            };
            out.add_term(key, if negative { -coeff } else { coeff });
        }
        Ok(out)
    }
}

/// Splits `12*ab` into (`12`, `ab`), `ab` into (None, `ab`) and `12` into
/// (`12`, None). The word `1` alone is a monomial, not a coefficient.
fn split_coefficient(body: &str) -> (Option<&str>, Option<&str>) {
    if let Some((head, tail)) = body.split_once('*') {
        if !head.is_empty() && head.chars().all(|c| c.is_ascii_digit()) {
            return (Some(head), Some(tail));
        }
        return (None, Some(body));
    }
    if body != "1" && body.chars().all(|c| c.is_ascii_digit()) {
        return (Some(body), None);
    }
    (None, Some(body))
}

/// A basis key for tensor products: one factor per tensor slot.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorKey<K>(pub Vec<K>);

impl<K: fmt::Display> fmt::Display for TensorKey<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊗ ")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// Sparse element of a tensor power.
pub type Tensor<K> = LinComb<TensorKey<K>>;

/// Tensor product of two elements, `x ⊗ y`.
pub fn tensor2<K: Ord + Clone>(x: &LinComb<K>, y: &LinComb<K>) -> Tensor<K> {
    let mut out = Tensor::zero();
    for (kx, cx) in x {
        for (ky, cy) in y {
            out.add_term(TensorKey(vec![kx.clone(), ky.clone()]), cx * cy);
        }
    }
    out
}

/// Tensor product for mixed factor types, keyed by a pair.
pub fn tensor_pair<K: Ord + Clone, L: Ord + Clone>(
    x: &LinComb<K>,
    y: &LinComb<L>,
) -> LinComb<(K, L)> {
    let mut out = LinComb::zero();
    for (kx, cx) in x {
        for (ky, cy) in y {
            out.add_term((kx.clone(), ky.clone()), cx * cy);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
    struct Sym(String);

    impl fmt::Display for Sym {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", self.0)
        }
    }

    impl Monomial for Sym {
        fn parse_monomial(s: &str) -> Result<Self> {
            Ok(Sym(s.to_string()))
        }
        fn unit() -> Option<Self> {
            Some(Sym("1".into()))
        }
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut x = LinComb::<Sym>::term(Sym("x".into()), 2);
        x.add_term(Sym("x".into()), BigInt::from(-2));
        assert!(x.is_zero());
        assert_eq!(x.to_string(), "0");
    }

    #[test]
    fn parse_and_print() {
        let p: LinComb<Sym> = "2*y - 3*x + x".parse().unwrap();
        assert_eq!(p.to_string(), "-2*x + 2*y");
        let q: LinComb<Sym> = "-4".parse().unwrap();
        assert_eq!(q.to_string(), "-4*1");
        assert!("2*x +".parse::<LinComb<Sym>>().is_err());
    }
}
