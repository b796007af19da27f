//! Quasisymmetric functions in the monomial basis, their type B analogue,
//! the isomorphisms with the ab-algebra, and the poset invariants `F`, `F_B`.
//!
//! `γ` sends the eb-word `e^{p₁−1} b e^{p₂−1} b ⋯ b e^{p_k−1}` (with
//! `e = a − b`) to `M_{(p₁,…,p_k)}`, so ab-degree `n` lands in weight `n + 1`.
//! `γ_B` sends `e^p b e^{p₁−1} b ⋯ b e^{p_k−1}` to `s^p·M_{(p₁,…,p_k)}` and the
//! pure word `e^p` to `s^p`, preserving degree.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ab_algebra::{ab_index, ab_to_eb, eb_to_ab};
use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Monomial};
use crate::poset::Poset;
use crate::transforms::{chain_map_first, chain_map_second, tcheb_u, Character};
use crate::word::{AbPoly, EbPoly, EbWord};

/// A composition: a sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    /// Panics if any part is zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "composition parts must be positive");
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn split_at(&self, i: usize) -> (Composition, Composition) {
        (Composition(self.0[..i].to_vec()), Composition(self.0[i..].to_vec()))
    }
}

impl Ord for Composition {
    /// Weight, then number of parts, then lexicographic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        write!(f, "M[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_bracketed(s: &str) -> Result<Composition> {
    let body = s
        .strip_prefix("M[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse(s, "expected M[p1,...,pk]"))?;
    if body.is_empty() {
        return Ok(Composition::empty());
    }
    let parts = body
        .split(',')
        .map(|p| match p.trim().parse::<u32>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(Error::parse(s, format!("bad part `{p}`"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Composition(parts))
}

impl Monomial for Composition {
    fn parse_monomial(s: &str) -> Result<Self> {
        if s == "1" {
            return Ok(Composition::empty());
        }
        parse_bracketed(s)
    }

    fn unit() -> Option<Self> {
        Some(Composition::empty())
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_monomial(s)
    }
}

/// Basis element `s^p·M_α` of the type B quasisymmetric functions.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BMonomial {
    pub s: u32,
    pub comp: Composition,
}

impl BMonomial {
    pub fn new(s: u32, comp: Composition) -> Self {
        BMonomial { s, comp }
    }

    pub fn degree(&self) -> u32 {
        self.s + self.comp.weight()
    }
}

impl Ord for BMonomial {
    /// Total degree, then `s`-exponent, then composition.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.s.cmp(&other.s))
            .then_with(|| self.comp.cmp(&other.comp))
    }
}

impl PartialOrd for BMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.s, self.comp.is_empty()) {
            (0, _) => write!(f, "{}", self.comp),
            (1, true) => write!(f, "s"),
            (p, true) => write!(f, "s^{p}"),
            (1, false) => write!(f, "s*{}", self.comp),
            (p, false) => write!(f, "s^{p}*{}", self.comp),
        }
    }
}

impl fmt::Debug for BMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Monomial for BMonomial {
    fn parse_monomial(s: &str) -> Result<Self> {
        let (power, rest) = match s.strip_prefix('s') {
            None => (0, s),
            Some(r) => {
                let (exp, rest) = match r.strip_prefix('^') {
                    Some(r2) => {
                        let end = r2.find('*').unwrap_or(r2.len());
                        let p = r2[..end]
                            .parse::<u32>()
                            .map_err(|_| Error::parse(s, "bad s-exponent"))?;
                        (p, &r2[end..])
                    }
                    None => (1, r),
                };
                match rest.strip_prefix('*') {
                    Some(m) => (exp, m),
                    None if rest.is_empty() => (exp, "1"),
                    None => return Err(Error::parse(s, "expected `*` after s-power")),
                }
            }
        };
        Ok(BMonomial::new(power, Composition::parse_monomial(rest)?))
    }

    fn unit() -> Option<Self> {
        Some(BMonomial::default())
    }
}

pub type QSymElem = LinComb<Composition>;
pub type BQSymElem = LinComb<BMonomial>;
pub type QSymTensor = LinComb<(Composition, Composition)>;
pub type BQSymTensor = LinComb<(BMonomial, Composition)>;

pub fn m(parts: &[u32]) -> QSymElem {
    QSymElem::basis(Composition::new(parts.to_vec()))
}

pub fn qsym_one() -> QSymElem {
    QSymElem::basis(Composition::empty())
}

/// Quasi-shuffle of two compositions.
pub fn quasi_shuffle(x: &Composition, y: &Composition) -> QSymElem {
    fn go(
        x: &[u32],
        y: &[u32],
        memo: &mut HashMap<(usize, usize), Vec<(Vec<u32>, BigInt)>>,
    ) -> Vec<(Vec<u32>, BigInt)> {
        if x.is_empty() || y.is_empty() {
            let rest = if x.is_empty() { y } else { x };
            return vec![(rest.to_vec(), BigInt::from(1))];
        }
        let key = (x.len(), y.len());
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut out = Vec::new();
        let mut push = |head: u32, tail: Vec<(Vec<u32>, BigInt)>| {
            for (mut w, c) in tail {
                w.insert(0, head);
                out.push((w, c));
            }
        };
        let t1 = go(&x[1..], y, memo);
        push(x[0], t1);
        let t2 = go(x, &y[1..], memo);
        push(y[0], t2);
        let t3 = go(&x[1..], &y[1..], memo);
        push(x[0] + y[0], t3);
        memo.insert(key, out.clone());
        out
    }
    // Suffixes of fixed x and y are identified by their lengths.
    go(&x.0, &y.0, &mut HashMap::new())
        .into_iter()
        .map(|(w, c)| (Composition(w), c))
        .collect()
}

pub fn qsym_product(f: &QSymElem, g: &QSymElem) -> QSymElem {
    let mut out = QSymElem::zero();
    for (x, cx) in f {
        for (y, cy) in g {
            out.add_scaled(&quasi_shuffle(x, y), &(cx * cy));
        }
    }
    out
}

/// Deconcatenation: `Δ(M_α) = Σ_i M_{α₁..α_i} ⊗ M_{α_{i+1}..α_k}`.
pub fn qsym_coproduct(f: &QSymElem) -> QSymTensor {
    let mut out = QSymTensor::zero();
    for (x, c) in f {
        for i in 0..=x.len() {
            out.add_term(x.split_at(i), c.clone());
        }
    }
    out
}

/// `ε(M_α) = [α = ∅]`.
pub fn qsym_counit(f: &QSymElem) -> BigInt {
    f.coeff(&Composition::empty())
}

fn eb_word_to_comp(w: EbWord) -> Composition {
    let mut parts = vec![1u32];
    for l in w.letters() {
        if l {
            parts.push(1);
        } else {
            *parts.last_mut().expect("nonempty") += 1;
        }
    }
    Composition(parts)
}

fn comp_to_eb_word(c: &Composition) -> EbWord {
    let mut letters = Vec::new();
    for (i, &p) in c.parts().iter().enumerate() {
        if i > 0 {
            letters.push(true);
        }
        letters.extend(std::iter::repeat_n(false, p as usize - 1));
    }
    EbWord::from_letters(&letters)
}

pub fn gamma(u: &AbPoly) -> QSymElem {
    ab_to_eb(u)
        .iter()
        .map(|(w, c)| (eb_word_to_comp(*w), c.clone()))
        .collect()
}

/// Inverse of [`gamma`]; the constant `1` has no preimage.
pub fn gamma_inv(f: &QSymElem) -> Result<AbPoly> {
    if !f.coeff(&Composition::empty()).is_zero() {
        return Err(Error::NonPositiveDegree);
    }
    let eb: EbPoly = f.iter().map(|(c, k)| (comp_to_eb_word(c), k.clone())).collect();
    Ok(eb_to_ab(&eb))
}

pub fn gamma_b(u: &AbPoly) -> BQSymElem {
    ab_to_eb(u)
        .iter()
        .map(|(w, c)| {
            let key = match (0..w.len()).find(|&i| w.letter(i)) {
                None => BMonomial::new(w.len() as u32, Composition::empty()),
                Some(i) => BMonomial::new(i as u32, eb_word_to_comp(w.slice(i + 1, w.len()))),
            };
            (key, c.clone())
        })
        .collect()
}

pub fn gamma_b_inv(f: &BQSymElem) -> AbPoly {
    let eb: EbPoly = f
        .iter()
        .map(|(m, k)| {
            let mut w = EbWord::from_bits(m.s as usize, 0);
            if !m.comp.is_empty() {
                w = w.concat(&EbWord::second_letter()).concat(&comp_to_eb_word(&m.comp));
            }
            (w, k.clone())
        })
        .collect();
    eb_to_ab(&eb)
}

/// `F(P) = γ(Ψ(P))`, with `F(•) = 1`.
pub fn f_poset(p: &Poset) -> QSymElem {
    if p.rank() == 0 {
        return qsym_one();
    }
    gamma(&ab_index(p).expect("rank is positive"))
}

/// `F_B(P) = γ_B(Ψ(P))`.
pub fn f_b_poset(p: &Poset) -> Result<BQSymElem> {
    Ok(gamma_b(&ab_index(p)?))
}

/// `F_B(P) = Σ_{0̂ < x ≤ 1̂} s^{ρ(x)−1}·F([x, 1̂])`.
pub fn f_b_by_intervals(p: &Poset) -> Result<BQSymElem> {
    if p.rank() == 0 {
        return Err(Error::RankZeroInput);
    }
    let mut out = BQSymElem::zero();
    for x in (0..p.len()).filter(|&x| x != p.bottom()) {
        let f = f_poset(&p.interval(x, p.top())?);
        out += &s_times(p.rank_of(x) as u32 - 1, &f);
    }
    Ok(out)
}

/// `s^p·f` for a quasisymmetric `f`.
pub fn s_times(p: u32, f: &QSymElem) -> BQSymElem {
    f.iter()
        .map(|(c, k)| (BMonomial::new(p, c.clone()), k.clone()))
        .collect()
}

pub fn bqsym_product(f: &BQSymElem, g: &BQSymElem) -> BQSymElem {
    let mut out = BQSymElem::zero();
    for (x, cx) in f {
        for (y, cy) in g {
            let k = cx * cy;
            for (c, kc) in &quasi_shuffle(&x.comp, &y.comp) {
                out.add_term(BMonomial::new(x.s + y.s, c.clone()), &k * kc);
            }
        }
    }
    out
}

/// `Δ(s^p·M_α) = Σ s^p·M_{α₁..α_i} ⊗ M_{α_{i+1}..α_k}`.
pub fn bqsym_coproduct(f: &BQSymElem) -> BQSymTensor {
    let mut out = BQSymTensor::zero();
    for (x, c) in f {
        for i in 0..=x.comp.len() {
            let (l, r) = x.comp.split_at(i);
            out.add_term((BMonomial::new(x.s, l), r), c.clone());
        }
    }
    out
}

/// `ε(s^p·M_α) = [p = 0][α = ∅]`.
pub fn bqsym_counit(f: &BQSymElem) -> BigInt {
    f.coeff(&BMonomial::default())
}

/// `M(u, v) = γ⁻¹(γ(u)·γ(v))`; `Ψ(P × Q) = M(Ψ(P), Ψ(Q))`.
pub fn mix_m(u: &AbPoly, v: &AbPoly) -> AbPoly {
    gamma_inv(&qsym_product(&gamma(u), &gamma(v))).expect("product of positive-weight terms")
}

/// `N(u, v) = γ_B⁻¹(γ_B(u)·γ_B(v))`; `Ψ(P ⋄ Q) = N(Ψ(P), Ψ(Q))`.
pub fn mix_n(u: &AbPoly, v: &AbPoly) -> AbPoly {
    gamma_b_inv(&bqsym_product(&gamma_b(u), &gamma_b(v)))
}

/// `N*(u, v) = N(u*, v*)*`; `Ψ(P ⋄* Q) = N*(Ψ(P), Ψ(Q))`.
pub fn mix_n_star(u: &AbPoly, v: &AbPoly) -> AbPoly {
    use crate::ab_algebra::star;
    star(&mix_n(&star(u), &star(v)))
}

/// Conjugates an ab-map by `γ`, fixing the unit.
fn conjugate(f: &QSymElem, map: impl Fn(&AbPoly) -> AbPoly) -> QSymElem {
    let constant = f.coeff(&Composition::empty());
    let rest = f.filter(|c| !c.is_empty());
    let mut out = gamma(&map(&gamma_inv(&rest).expect("constant removed")));
    out.add_term(Composition::empty(), constant);
    out
}

/// `U(f) = γ(U(γ⁻¹(f)))`, `U(1) = 1`.
pub fn u_qsym(f: &QSymElem) -> QSymElem {
    conjugate(f, tcheb_u)
}

/// `g̃(f) = γ(g̃(γ⁻¹(f)))`, `g̃(1) = 1`.
pub fn gtilde_qsym(g: &Character, f: &QSymElem) -> QSymElem {
    conjugate(f, |u| chain_map_second(g, u))
}

/// `g(f) = γ_B(g(γ_B⁻¹(f)))`.
pub fn g_bqsym(g: &Character, f: &BQSymElem) -> BQSymElem {
    gamma_b(&chain_map_first(g, &gamma_b_inv(f)))
}

/// Lifts a QSym map to a tensor, slot by slot.
pub fn tensor_apply(
    t: &QSymTensor,
    left: impl Fn(&QSymElem) -> QSymElem,
    right: impl Fn(&QSymElem) -> QSymElem,
) -> QSymTensor {
    let mut out = QSymTensor::zero();
    for ((x, y), c) in t {
        let lx = left(&QSymElem::basis(x.clone()));
        let ry = right(&QSymElem::basis(y.clone()));
        out.add_scaled(&crate::lincomb::tensor_pair(&lx, &ry), c);
    }
    out
}

/// Lifts a pair of maps to the BQSym ⊗ QSym tensor.
pub fn btensor_apply(
    t: &BQSymTensor,
    left: impl Fn(&BQSymElem) -> BQSymElem,
    right: impl Fn(&QSymElem) -> QSymElem,
) -> BQSymTensor {
    let mut out = BQSymTensor::zero();
    for ((x, y), c) in t {
        let lx = left(&BQSymElem::basis(x.clone()));
        let ry = right(&QSymElem::basis(y.clone()));
        out.add_scaled(&crate::lincomb::tensor_pair(&lx, &ry), c);
    }
    out
}

/// Homogeneous components of a quasisymmetric function by weight.
pub fn qsym_weight_parts(f: &QSymElem) -> Vec<(u32, QSymElem)> {
    let mut parts: Vec<(u32, QSymElem)> = Vec::new();
    for (c, k) in f {
        match parts.last_mut() {
            Some((w, p)) if *w == c.weight() => p.add_term(c.clone(), k.clone()),
            _ => parts.push((c.weight(), QSymElem::term(c.clone(), k.clone()))),
        }
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab_algebra::ab;
    use crate::poset::{boolean_algebra, diamond_product, point};

    fn q(s: &str) -> QSymElem {
        s.parse().unwrap()
    }

    fn bq(s: &str) -> BQSymElem {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(q("M[2] + 2*M[1,1]").to_string(), "1*M[2] + 2*M[1,1]");
        assert_eq!(q("3 - M[1]").to_string(), "3*1 - 1*M[1]");
        assert_eq!(bq("s^3*M[1] + 2*s + M[2]").to_string(), "2*s + 1*M[2] + 1*s^3*M[1]");
        assert!("M[0]".parse::<QSymElem>().is_err());
        assert!("M[1".parse::<QSymElem>().is_err());
    }

    #[test]
    fn product_examples() {
        assert_eq!(qsym_product(&m(&[1]), &m(&[1])), q("2*M[1,1] + M[2]"));
        let f = q("M[2,1] - 3*M[1]");
        assert_eq!(qsym_product(&qsym_one(), &f), f);
        let b1 = f_poset(&boolean_algebra(1));
        assert_eq!(qsym_product(&b1, &b1), f_poset(&boolean_algebra(2)));
    }

    #[test]
    fn coproduct_examples() {
        let d = qsym_coproduct(&m(&[2]));
        assert_eq!(d.len(), 2);
        assert_eq!(qsym_coproduct(&m(&[1, 2])).len(), 3);
        let fb2 = f_poset(&boolean_algebra(2));
        let fb1 = f_poset(&boolean_algebra(1));
        let mut expected = crate::lincomb::tensor_pair(&fb2, &qsym_one());
        expected += &crate::lincomb::tensor_pair(&qsym_one(), &fb2);
        expected.add_scaled(&crate::lincomb::tensor_pair(&fb1, &fb1), &BigInt::from(2));
        assert_eq!(qsym_coproduct(&fb2), expected);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&ab("1")), m(&[1]));
        assert_eq!(gamma(&ab("b")), m(&[1, 1]));
        let f = q("M[2,1] - 3*M[1] + 5*M[1,1,2]");
        assert_eq!(gamma(&gamma_inv(&f).unwrap()), f);
        assert_eq!(gamma_inv(&qsym_one()), Err(Error::NonPositiveDegree));
        assert_eq!(f_poset(&point()), qsym_one());
        assert_eq!(f_poset(&boolean_algebra(1)), m(&[1]));
        assert_eq!(f_poset(&boolean_algebra(2)), q("M[2] + 2*M[1,1]"));
    }

    #[test]
    fn gamma_b_examples() {
        assert_eq!(f_b_poset(&boolean_algebra(1)).unwrap(), bq("1"));
        assert_eq!(gamma_b(&ab("a - b")), bq("s"));
        assert_eq!(f_b_poset(&boolean_algebra(2)).unwrap(), bq("s + 2*M[1]"));
        for n in 1..=3 {
            let p = boolean_algebra(n);
            assert_eq!(f_b_poset(&p).unwrap(), f_b_by_intervals(&p).unwrap());
        }
        let f = bq("s^2*M[1,3] - M[2] + 4*s");
        assert_eq!(gamma_b(&gamma_b_inv(&f)), f);
    }

    #[test]
    fn bqsym_products() {
        assert_eq!(bqsym_product(&bq("s^2"), &bq("s^3")), bq("s^5"));
        let b1 = f_b_poset(&boolean_algebra(1)).unwrap();
        assert_eq!(bqsym_product(&b1, &b1), bq("1"));
        let b2 = boolean_algebra(2);
        let fb = f_b_poset(&b2).unwrap();
        let dia = diamond_product(&b2, &b2).unwrap();
        assert_eq!(bqsym_product(&fb, &fb), f_b_poset(&dia).unwrap());
        let d = bqsym_coproduct(&bq("s^3"));
        assert_eq!(d, BQSymTensor::basis((BMonomial::new(3, Composition::empty()), Composition::empty())));
    }

    #[test]
    fn mixing_operators() {
        assert_eq!(mix_m(&ab("1"), &ab("1")), ab("a + b"));
        let psi = |n| ab_index(&boolean_algebra(n)).unwrap();
        assert_eq!(mix_m(&psi(2), &psi(1)), psi(3));
        let (u, v) = (ab("ab - 2*b"), ab("ba + 1"));
        let a = ab("a");
        assert_eq!(mix_n(&(&a * &u), &(&a * &v)), &a * &mix_m(&u, &v));
    }

    #[test]
    fn u_qsym_unit() {
        assert_eq!(u_qsym(&qsym_one()), qsym_one());
    }
}
