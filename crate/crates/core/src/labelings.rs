//! Edge labelings of graded posets: R- and EL-labelings, Jordan–Hölder
//! sets, descent words, and the labelings induced on Tchebyshev
//! transforms, Cartesian products and dual diamond products.
//!
//! Labels are tokens with a declared linear order; internally a label is its
//! position in that order. Distinct edges may share a label.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poset::{
    boolean_algebra, cartesian_product, dual_diamond_product_with_map, ladder,
    tchebyshev_poset_with_map, Poset,
};
use crate::word::{AbPoly, AbWord};

/// Rank above which the exhaustive R/EL checks refuse to run by default.
pub const DEFAULT_RANK_CAP: usize = 6;

/// A label string, as positions in the label order.
pub type LabelString = Vec<usize>;

#[derive(Clone, Debug)]
pub struct EdgeLabeling {
    poset: Poset,
    order: Vec<String>,
    labels: HashMap<(usize, usize), usize>,
}

/// Outcome of the exhaustive interval scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabelingVerdict {
    pub is_r: bool,
    pub is_el: bool,
}

/// An interval with no unique rising chain, or whose rising chain is not
/// lexicographically least.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub lower: usize,
    pub upper: usize,
    pub rising_chains: usize,
}

#[derive(Clone, Default)]
struct IntervalStats {
    rising: usize,
    rising_string: Option<LabelString>,
    lex_min: Option<LabelString>,
}

impl EdgeLabeling {
    /// Checks that every Hasse edge gets a token from `order`, and nothing else.
    pub fn new(
        poset: Poset,
        order: Vec<String>,
        edge_labels: HashMap<(usize, usize), String>,
    ) -> Result<Self> {
        let mut position = HashMap::new();
        for (i, tok) in order.iter().enumerate() {
            if position.insert(tok.clone(), i).is_some() {
                return Err(Error::BadParameter(format!("label `{tok}` declared twice")));
            }
        }
        let mut labels = HashMap::new();
        for (x, y) in poset.hasse_edges() {
            let tok = edge_labels.get(&(x, y)).ok_or_else(|| {
                Error::BadParameter(format!(
                    "edge {} < {} has no label",
                    poset.name(x),
                    poset.name(y)
                ))
            })?;
            let &i = position
                .get(tok)
                .ok_or_else(|| Error::BadParameter(format!("label `{tok}` not in order")))?;
            labels.insert((x, y), i);
        }
        if let Some(&(x, y)) = edge_labels.keys().find(|&&(x, y)| !poset.covers(x, y)) {
            return Err(Error::BadParameter(format!(
                "{} < {} is not a Hasse edge",
                poset.name(x),
                poset.name(y)
            )));
        }
        Ok(EdgeLabeling {
            poset,
            order,
            labels,
        })
    }

    /// Labels every Hasse edge by `f`.
    pub fn from_fn(
        poset: Poset,
        order: Vec<String>,
        f: impl Fn(usize, usize) -> String,
    ) -> Result<Self> {
        let edge_labels = poset.hasse_edges().map(|(x, y)| ((x, y), f(x, y))).collect();
        Self::new(poset, order, edge_labels)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn order(&self) -> &[String] {
        &self.order
    }

    /// Position of the label of the Hasse edge `x ≺ y`.
    pub fn label(&self, x: usize, y: usize) -> usize {
        self.labels[&(x, y)]
    }

    pub fn token(&self, x: usize, y: usize) -> &str {
        &self.order[self.label(x, y)]
    }

    pub fn tokens(&self, s: &[usize]) -> Vec<String> {
        s.iter().map(|&i| self.order[i].clone()).collect()
    }

    /// Label strings of all maximal chains of `[x, y]`, sorted.
    pub fn jordan_holder(&self, x: usize, y: usize) -> Result<Vec<LabelString>> {
        if !self.poset.leq(x, y) {
            return Err(Error::NotComparable(
                self.poset.name(x).to_string(),
                self.poset.name(y).to_string(),
            ));
        }
        let mut out: Vec<LabelString> = self
            .poset
            .maximal_chains(x, y)
            .iter()
            .map(|c| c.windows(2).map(|e| self.label(e[0], e[1])).collect())
            .collect();
        out.sort();
        Ok(out)
    }

    /// `JH(P)`, the label strings of the maximal chains of the whole poset.
    pub fn jordan_holder_full(&self) -> Vec<LabelString> {
        self.jordan_holder(self.poset.bottom(), self.poset.top())
            .expect("bottom is below top")
    }

    /// `JH(P)` as token strings, sorted.
    pub fn jordan_holder_tokens(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .jordan_holder_full()
            .iter()
            .map(|s| self.tokens(s))
            .collect();
        out.sort();
        out
    }

    /// Scans every interval, refusing posets of rank above `cap`.
    pub fn verdict_with_cap(&self, cap: usize) -> Result<LabelingVerdict> {
        let mut verdict = LabelingVerdict {
            is_r: true,
            is_el: true,
        };
        for v in self.violations_with_cap(cap)? {
            if v.rising_chains != 1 {
                verdict.is_r = false;
            }
            verdict.is_el = false;
        }
        Ok(verdict)
    }

    /// Every interval that breaks the R or EL condition.
    pub fn violations_with_cap(&self, cap: usize) -> Result<Vec<Violation>> {
        if self.poset.rank() > cap {
            return Err(Error::BadParameter(format!(
                "rank {} exceeds the labeling check cap {cap}",
                self.poset.rank()
            )));
        }
        let mut out = Vec::new();
        for x in 0..self.poset.len() {
            let stats = self.intervals_from(x);
            for y in (0..self.poset.len()).filter(|&y| self.poset.lt(x, y)) {
                let s = &stats[y];
                if s.rising != 1 || s.rising_string != s.lex_min {
                    out.push(Violation {
                        lower: x,
                        upper: y,
                        rising_chains: s.rising,
                    });
                }
            }
        }
        Ok(out)
    }

    pub fn is_r_labeling(&self) -> Result<bool> {
        Ok(self.verdict_with_cap(DEFAULT_RANK_CAP)?.is_r)
    }

    pub fn is_el_labeling(&self) -> Result<bool> {
        Ok(self.verdict_with_cap(DEFAULT_RANK_CAP)?.is_el)
    }

    /// Walks every saturated chain starting at `x`, recording per endpoint
    /// the number of weakly rising chains and the lexicographically least
    /// label string.
    fn intervals_from(&self, x: usize) -> Vec<IntervalStats> {
        let mut stats = vec![IntervalStats::default(); self.poset.len()];
        let mut path: LabelString = Vec::new();
        self.walk(x, true, &mut path, &mut stats);
        stats
    }

    fn walk(&self, at: usize, rising: bool, path: &mut LabelString, stats: &mut [IntervalStats]) {
        for &next in self.poset.upper_covers(at) {
            let l = self.label(at, next);
            let still_rising = rising && path.last().is_none_or(|&prev| prev <= l);
            path.push(l);
            let s = &mut stats[next];
            if still_rising {
                s.rising += 1;
                s.rising_string = Some(path.clone());
            }
            if s.lex_min.as_ref().is_none_or(|m| *path < *m) {
                s.lex_min = Some(path.clone());
            }
            self.walk(next, still_rising, path, stats);
            path.pop();
        }
    }

    /// `Σ_{λ ∈ JH(P)} u_λ`; the ab-index when the labeling is an R-labeling.
    pub fn descent_sum(&self) -> AbPoly {
        let mut out = AbPoly::zero();
        for s in self.jordan_holder_full() {
            out.add_term(descent_word(&s), 1.into());
        }
        out
    }

    /// Text form: `order` line, then one `label` line per Hasse edge.
    pub fn emit(&self) -> String {
        let mut out = format!("order {}\n", self.order.join(" "));
        let mut edges: Vec<(usize, usize)> = self.poset.hasse_edges().collect();
        edges.sort_by(|a, b| {
            (self.poset.name(a.0), self.poset.name(a.1)).cmp(&(self.poset.name(b.0), self.poset.name(b.1)))
        });
        for (x, y) in edges {
            let _ = writeln!(
                out,
                "label {} {} {}",
                self.poset.name(x),
                self.poset.name(y),
                self.token(x, y)
            );
        }
        out
    }
}

/// Parses `order <tok>…` and `label <id1> <id2> <token>` lines against `poset`.
/// Blank lines and `#` comments are skipped.
pub fn parse_labeling(poset: &Poset, text: &str) -> Result<EdgeLabeling> {
    let mut order: Option<Vec<String>> = None;
    let mut edge_labels = HashMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let malformed = || Error::MalformedLine {
            line: n + 1,
            text: raw.to_string(),
        };
        match fields.as_slice() {
            ["order", toks @ ..] if !toks.is_empty() && order.is_none() => {
                order = Some(toks.iter().map(|t| t.to_string()).collect());
            }
            ["label", x, y, tok] => {
                let (x, y) = (poset.index_of(x)?, poset.index_of(y)?);
                if edge_labels.insert((x, y), tok.to_string()).is_some() {
                    return Err(malformed());
                }
            }
            _ => return Err(malformed()),
        }
    }
    let order = order.ok_or_else(|| Error::BadParameter("missing `order` line".into()))?;
    EdgeLabeling::new(poset.clone(), order, edge_labels)
}

/// `u_i = a` if `λ_i ≤ λ_{i+1}`, else `b`.
pub fn descent_word<T: Ord>(labels: &[T]) -> AbWord {
    assert!(!labels.is_empty(), "descent word of an empty label string");
    let letters: Vec<bool> = labels.windows(2).map(|w| w[0] > w[1]).collect();
    AbWord::from_letters(&letters)
}

/// All interleavings of `x` and `y` that keep each string's internal order.
pub fn shuffle<T: Clone>(x: &[T], y: &[T]) -> Vec<Vec<T>> {
    if x.is_empty() || y.is_empty() {
        return vec![if x.is_empty() { y.to_vec() } else { x.to_vec() }];
    }
    let mut out = Vec::new();
    for mut rest in shuffle(&x[1..], y) {
        rest.insert(0, x[0].clone());
        out.push(rest);
    }
    for mut rest in shuffle(x, &y[1..]) {
        rest.insert(0, y[0].clone());
        out.push(rest);
    }
    out
}

/// `X ⋆ Y`, as a sorted multiset.
pub fn shuffle_sets<T: Clone + Ord>(xs: &[Vec<T>], ys: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = xs
        .iter()
        .flat_map(|x| ys.iter().flat_map(move |y| shuffle(x, y)))
        .collect();
    out.sort();
    out
}

pub fn signed_s(tok: &str) -> String {
    format!("{tok}^s")
}

pub fn signed_b(tok: &str) -> String {
    format!("{tok}^b")
}

/// The label shared by all edges into the top of a Tchebyshev transform.
pub const ZERO: &str = "0";

/// `JH^{sb} ∘ 0`: every way of signing each label, followed by `0`. Sorted.
pub fn signed_closure(strings: &[Vec<String>]) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    for s in strings {
        for mask in 0u64..(1 << s.len()) {
            let mut signed: Vec<String> = s
                .iter()
                .enumerate()
                .map(|(i, t)| if mask >> i & 1 == 1 { signed_b(t) } else { signed_s(t) })
                .collect();
            signed.push(ZERO.to_string());
            out.push(signed);
        }
    }
    out.sort();
    out
}

/// Labeling of `T(P)`: `[x,y] ≺ [y,w]` gets `λ(y,w)^s`, `[x,y] ≺ [x,w]` gets
/// `λ(y,w)^b`, and edges into the new top get `0`; order `Λ^s < 0 < Λ^b`.
pub fn tcheb_labeling(l: &EdgeLabeling) -> Result<EdgeLabeling> {
    let t = tchebyshev_poset_with_map(l.poset())?;
    let mut order: Vec<String> = l.order().iter().map(|t| signed_s(t)).collect();
    order.push(ZERO.to_string());
    order.extend(l.order().iter().map(|t| signed_b(t)));
    let elems = &t.elems;
    EdgeLabeling::from_fn(t.poset.clone(), order, |u, v| {
        let (Some(from), Some(to)) = (elems[u], elems[v]) else {
            return ZERO.to_string();
        };
        let tok = l.token(from.upper, to.upper);
        if to.lower == Some(from.upper) {
            signed_s(tok)
        } else {
            debug_assert_eq!(to.lower, from.lower);
            signed_b(tok)
        }
    })
}

fn left(tok: &str) -> String {
    format!("L{tok}")
}

fn right(tok: &str) -> String {
    format!("R{tok}")
}

/// Labeling of `P₁ × P₂` with label order `Λ₁` then `Λ₂`; tokens are
/// prefixed `L` and `R` to keep the two label sets disjoint.
pub fn product_labeling(l1: &EdgeLabeling, l2: &EdgeLabeling) -> Result<EdgeLabeling> {
    let (p, q) = (l1.poset(), l2.poset());
    let prod = cartesian_product(p, q);
    let order = l1.order().iter().map(|t| left(t)).chain(l2.order().iter().map(|t| right(t))).collect();
    let split = |i: usize| (i / q.len(), i % q.len());
    EdgeLabeling::from_fn(prod, order, |u, v| {
        let ((x, y), (z, w)) = (split(u), split(v));
        if y == w {
            left(l1.token(x, z))
        } else {
            right(l2.token(y, w))
        }
    })
}

/// Labeling of `P₁ ⋄* P₂` for labelings that put `0` exactly on the edges
/// into the top. The merged order is `Λ₁` below 0, `Λ₂` below 0, `0`,
/// `Λ₁` above 0, `Λ₂` above 0; non-zero tokens are prefixed `L` and `R`.
pub fn dual_diamond_labeling(l1: &EdgeLabeling, l2: &EdgeLabeling) -> Result<EdgeLabeling> {
    let zero_at = |l: &EdgeLabeling| -> Result<usize> {
        let z = l
            .order()
            .iter()
            .position(|t| t == ZERO)
            .ok_or_else(|| Error::BadParameter("labeling has no `0` label".into()))?;
        let p = l.poset();
        let exact = p
            .hasse_edges()
            .all(|(x, y)| (l.label(x, y) == z) == (y == p.top()));
        if !exact {
            return Err(Error::BadParameter(
                "label `0` must sit exactly on the edges into the top".into(),
            ));
        }
        Ok(z)
    };
    let (z1, z2) = (zero_at(l1)?, zero_at(l2)?);
    let mut order: Vec<String> = Vec::new();
    order.extend(l1.order()[..z1].iter().map(|t| left(t)));
    order.extend(l2.order()[..z2].iter().map(|t| right(t)));
    order.push(ZERO.to_string());
    order.extend(l1.order()[z1 + 1..].iter().map(|t| left(t)));
    order.extend(l2.order()[z2 + 1..].iter().map(|t| right(t)));

    let (poset, pairs) = dual_diamond_product_with_map(l1.poset(), l2.poset())?;
    EdgeLabeling::from_fn(poset, order, |u, v| match (pairs[u], pairs[v]) {
        (Some((x, y)), Some((z, w))) => {
            if y == w {
                left(l1.token(x, z))
            } else {
                right(l2.token(y, w))
            }
        }
        _ => ZERO.to_string(),
    })
}

/// `JH₀`: strings of `JH` with their final `0` removed.
pub fn strip_final_zero(strings: &[Vec<String>]) -> Vec<Vec<String>> {
    strings
        .iter()
        .map(|s| {
            assert_eq!(s.last().map(String::as_str), Some(ZERO), "string does not end in 0");
            s[..s.len() - 1].to_vec()
        })
        .collect()
}

/// Appends `0` to every string.
pub fn append_zero(strings: &[Vec<String>]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = strings
        .iter()
        .map(|s| {
            let mut t = s.clone();
            t.push(ZERO.to_string());
            t
        })
        .collect();
    out.sort();
    out
}

/// Tokens of `L₁` and `L₂` renamed as in [`product_labeling`].
pub fn prefix_tokens(strings: &[Vec<String>], left_side: bool) -> Vec<Vec<String>> {
    strings
        .iter()
        .map(|s| {
            s.iter()
                .map(|t| {
                    if t == ZERO {
                        t.clone()
                    } else if left_side {
                        left(t)
                    } else {
                        right(t)
                    }
                })
                .collect()
        })
        .collect()
}

/// `B_n` with the edge `S ≺ S ∪ {i}` labeled `i`; an EL-labeling.
pub fn boolean_el_labeling(n: usize) -> EdgeLabeling {
    let p = boolean_algebra(n);
    let order = (1..=n).map(|i| i.to_string()).collect();
    EdgeLabeling::from_fn(p, order, |x, y| ((x ^ y).trailing_zeros() + 1).to_string())
        .expect("every edge is labeled")
}

/// EL-labeling of `ladder(n)`: an edge into the left element at rank `r`
/// gets `r`, into the right element `2n + 2 − r`, into the top `n + 1`.
/// Left labels increase and right labels decrease with rank, and every
/// right label exceeds every left one, so each interval rises only through
/// the left elements.
pub fn ladder_el_labeling(n: usize) -> EdgeLabeling {
    let p = ladder(n);
    let order = (1..=2 * n + 1).map(|i| i.to_string()).collect();
    let label = |y: usize| -> String {
        let name = p.name(y);
        let r = p.rank_of(y);
        let value = if name.starts_with('r') {
            2 * n + 2 - r
        } else {
            r
        };
        value.to_string()
    };
    let labels = p.hasse_edges().map(|(x, y)| ((x, y), label(y))).collect();
    EdgeLabeling::new(p.clone(), order, labels).expect("every edge is labeled")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab_algebra::{ab, ab_index};
    use crate::poset::{chain, tchebyshev_poset};

    #[test]
    fn boolean_and_chain() {
        let b2 = boolean_el_labeling(2);
        assert!(b2.is_el_labeling().unwrap());
        let rising = EdgeLabeling::from_fn(chain(3), vec!["x".into(), "y".into()], |x, _| {
            if x == 0 { "x".into() } else { "y".into() }
        })
        .unwrap();
        assert!(rising.is_el_labeling().unwrap());
        // A chain with a descent has an interval whose only chain falls.
        let falling = EdgeLabeling::from_fn(chain(3), vec!["x".into(), "y".into()], |x, _| {
            if x % 2 == 0 { "y".into() } else { "x".into() }
        })
        .unwrap();
        assert!(!falling.is_r_labeling().unwrap());
    }

    #[test]
    fn two_rising_chains_is_not_r() {
        let p = boolean_algebra(2);
        let l = EdgeLabeling::from_fn(p, vec!["1".into()], |_, _| "1".into()).unwrap();
        assert!(!l.is_r_labeling().unwrap());
        assert!(!l.is_el_labeling().unwrap());
    }

    #[test]
    fn jordan_holder_sets() {
        let c = EdgeLabeling::from_fn(chain(1), vec!["1".into()], |_, _| "1".into()).unwrap();
        assert_eq!(c.jordan_holder_full().len(), 1);
        let b3 = boolean_el_labeling(3);
        assert_eq!(b3.jordan_holder_full().len(), 6);
        let p = b3.poset();
        assert!(matches!(
            b3.jordan_holder(p.index_of("{1}").unwrap(), p.index_of("{2}").unwrap()),
            Err(Error::NotComparable(..))
        ));
    }

    #[test]
    fn descent_words() {
        assert_eq!(descent_word(&[1, 2, 3]), "aa".parse().unwrap());
        assert_eq!(descent_word(&[3, 2, 1]), "bb".parse().unwrap());
        assert_eq!(boolean_el_labeling(2).descent_sum(), ab("a + b"));
    }

    #[test]
    fn shuffles() {
        assert_eq!(shuffle(&[1], &[2]).len(), 2);
        assert_eq!(shuffle(&[1, 2, 3], &[4, 5]).len(), 10);
    }

    #[test]
    fn tchebyshev_labeling_small() {
        let l = boolean_el_labeling(2);
        let t = tcheb_labeling(&l).unwrap();
        assert_eq!(t.jordan_holder_full().len(), 4 * 2);
        let psi = ab_index(&tchebyshev_poset(l.poset()).unwrap()).unwrap();
        assert_eq!(t.descent_sum(), psi);
        assert_eq!(t.jordan_holder_tokens(), signed_closure(&l.jordan_holder_tokens()));
    }

    #[test]
    fn tchebyshev_labeling_of_b2_has_a_falling_interval() {
        // [[-1, {}], [{2}, {1,2}]] has the chains (2^s, 1^s) and (2^b, 1^s).
        let t = tcheb_labeling(&boolean_el_labeling(2)).unwrap();
        let p = t.poset();
        let (x, y) = (p.index_of("[-,{}]").unwrap(), p.index_of("[{2},{1,2}]").unwrap());
        let jh: Vec<Vec<String>> = t.jordan_holder(x, y).unwrap().iter().map(|s| t.tokens(s)).collect();
        assert_eq!(jh, vec![vec!["2^s", "1^s"], vec!["2^b", "1^s"]]);
        let violations = t.violations_with_cap(DEFAULT_RANK_CAP).unwrap();
        assert!(violations.contains(&Violation { lower: x, upper: y, rising_chains: 0 }));
        assert!(!t.is_r_labeling().unwrap());
    }

    #[test]
    fn ladder_labeling() {
        for n in 0..=3 {
            assert!(ladder_el_labeling(n).is_el_labeling().unwrap(), "ladder {n}");
        }
    }

    #[test]
    fn labeling_file_round_trip() {
        let l = boolean_el_labeling(2);
        let parsed = parse_labeling(l.poset(), &l.emit()).unwrap();
        assert_eq!(parsed.emit(), l.emit());
        assert!(parse_labeling(l.poset(), "label {1} {1,2} 2\n").is_err());
        assert!(parse_labeling(l.poset(), "order 1 2\nlabel x y 1\n").is_err());
    }
}
