//! Arithmetic in the free algebras `Z⟨a,b⟩` and `Z⟨c,d⟩`: products, the
//! delete-one-letter coproduct, the star involution, the functionals `A`
//! and `C`, basis changes, and the ab-index of a graded poset.

use std::collections::BTreeMap;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Tensor, TensorKey};
use crate::linalg;
use crate::poset::Poset;
use crate::word::{
    cd_words_of_degree, Ab, AbPoly, AbWord, Alphabet, CdPoly, CdWord, EbPoly, EbWord, Poly,
    Word,
};

impl<A: Alphabet> Mul for &Poly<A> {
    type Output = Poly<A>;
    fn mul(self, rhs: &Poly<A>) -> Poly<A> {
        let mut out = Poly::zero();
        for (x, cx) in self {
            for (y, cy) in rhs {
                out.add_term(x.concat(y), cx * cy);
            }
        }
        out
    }
}

impl<A: Alphabet> Mul for Poly<A> {
    type Output = Poly<A>;
    fn mul(self, rhs: Poly<A>) -> Poly<A> {
        &self * &rhs
    }
}

pub fn multiply<A: Alphabet>(u: &Poly<A>, v: &Poly<A>) -> Poly<A> {
    u * v
}

pub fn pow<A: Alphabet>(u: &Poly<A>, n: usize) -> Poly<A> {
    let mut out = Word::<A>::empty().poly();
    for _ in 0..n {
        out = &out * u;
    }
    out
}

pub fn star<A: Alphabet>(u: &Poly<A>) -> Poly<A> {
    u.iter().map(|(w, c)| (w.reverse(), c.clone())).collect()
}

pub fn a() -> AbPoly {
    AbWord::first_letter().poly()
}

pub fn b() -> AbPoly {
    AbWord::second_letter().poly()
}

pub fn c() -> CdPoly {
    CdWord::first_letter().poly()
}

pub fn d() -> CdPoly {
    CdWord::second_letter().poly()
}

/// `(a − b)^n`, expanded: a word with `k` b's has coefficient `(−1)^k`.
pub fn e_pow(n: usize) -> AbPoly {
    (0..(1u64 << n))
        .map(|bits| {
            let w = AbWord::from_bits(n, bits);
            let sign = if w.count_second().is_multiple_of(2) { 1 } else { -1 };
            (w, BigInt::from(sign))
        })
        .collect()
}

/// Splits a polynomial into its homogeneous components.
pub fn homogeneous_parts<A: Alphabet>(u: &Poly<A>) -> BTreeMap<usize, Poly<A>> {
    let mut out: BTreeMap<usize, Poly<A>> = BTreeMap::new();
    for (w, c) in u {
        out.entry(w.degree()).or_default().add_term(*w, c.clone());
    }
    out
}

/// `Δ(u₁⋯u_k) = Σ u₁⋯u_{i−1} ⊗ u_{i+1}⋯u_k`; `Δ(1) = 0`.
pub fn coproduct(u: &AbPoly) -> Tensor<AbWord> {
    let mut out = Tensor::zero();
    for (w, c) in u {
        for i in 0..w.len() {
            let key = TensorKey(vec![w.slice(0, i), w.slice(i + 1, w.len())]);
            out.add_term(key, c.clone());
        }
    }
    out
}

/// `Δ^k`: delete `k − 1` letters, giving `k` tensor factors. `Δ¹ = id`.
pub fn coproduct_k(u: &AbPoly, k: usize) -> Tensor<AbWord> {
    assert!(k >= 1, "iterated coproduct needs k >= 1");
    let mut out = Tensor::zero();
    for (w, c) in u {
        for_each_split(*w, k - 1, |parts| {
            out.add_term(TensorKey(parts.to_vec()), c.clone());
        });
    }
    out
}

/// Calls `f` with the factors of every way of deleting `cuts` letters of `w`.
pub(crate) fn for_each_split(w: AbWord, cuts: usize, mut f: impl FnMut(&[AbWord])) {
    fn go(
        w: AbWord,
        start: usize,
        cuts: usize,
        parts: &mut Vec<AbWord>,
        f: &mut dyn FnMut(&[AbWord]),
    ) {
        if cuts == 0 {
            parts.push(w.slice(start, w.len()));
            f(parts);
            parts.pop();
            return;
        }
        for i in start..w.len() {
            if w.len() - i < cuts {
                break;
            }
            parts.push(w.slice(start, i));
            go(w, i + 1, cuts - 1, parts, f);
            parts.pop();
        }
    }
    go(w, 0, cuts, &mut Vec::new(), &mut f);
}

/// Applies a linear map to every tensor slot.
pub fn tensor_map(t: &Tensor<AbWord>, mut f: impl FnMut(&AbPoly) -> AbPoly) -> Tensor<AbWord> {
    let mut out = Tensor::zero();
    for (key, coeff) in t {
        let mut acc: Vec<(Vec<AbWord>, BigInt)> = vec![(Vec::new(), coeff.clone())];
        for w in &key.0 {
            let image = f(&w.poly());
            let mut next = Vec::new();
            for (prefix, c) in &acc {
                for (iw, ic) in &image {
                    let mut p = prefix.clone();
                    p.push(*iw);
                    next.push((p, c * ic));
                }
            }
            acc = next;
        }
        for (k, c) in acc {
            out.add_term(TensorKey(k), c);
        }
    }
    out
}

/// Commutative evaluation at scalars.
pub fn eval(u: &AbPoly, a_val: i64, b_val: i64) -> BigInt {
    let (av, bv) = (BigInt::from(a_val), BigInt::from(b_val));
    u.eval_linear(|w| {
        let nb = w.count_second();
        Pow::pow(&av, (w.len() - nb) as u32) * Pow::pow(&bv, nb as u32)
    })
}

/// `A(word) = 1` if the word has no `b`.
pub fn map_a_word(w: AbWord) -> BigInt {
    BigInt::from(u8::from(w.count_second() == 0))
}

/// `C(1) = 2`, `C(a·u) = A(u) + C(u)`, `C(b·u) = A(u)`.
pub fn map_c_word(w: AbWord) -> BigInt {
    let mut acc = BigInt::from(2);
    for i in (0..w.len()).rev() {
        let rest = map_a_word(w.slice(i + 1, w.len()));
        acc = if w.letter(i) { rest } else { rest + acc };
    }
    acc
}

pub fn map_a(u: &AbPoly) -> BigInt {
    u.eval_linear(|w| map_a_word(*w))
}

pub fn map_c(u: &AbPoly) -> BigInt {
    u.eval_linear(|w| map_c_word(*w))
}

/// `C(u) = 2A(u) + Σ A(u₍₁₎)A(u₍₂₎)`, straight from the coproduct.
pub fn map_c_by_coproduct(u: &AbPoly) -> BigInt {
    let split: BigInt = coproduct(u)
        .iter()
        .map(|(k, c)| c * map_a_word(k.0[0]) * map_a_word(k.0[1]))
        .sum();
    BigInt::from(2) * map_a(u) + split
}

/// Degree-wise `u ↦ G(u)·(a − b)^{deg u}` for a functional on words.
pub fn hat(u: &AbPoly, mut g: impl FnMut(AbWord) -> BigInt) -> AbPoly {
    let mut out = AbPoly::zero();
    for (deg, part) in homogeneous_parts(u) {
        let value = part.eval_linear(|w| g(*w));
        if !value.is_zero() {
            out.add_scaled(&e_pow(deg), &value);
        }
    }
    out
}

pub fn kappa(u: &AbPoly) -> AbPoly {
    hat(u, map_a_word)
}

pub fn nu(u: &AbPoly) -> AbPoly {
    hat(u, map_c_word)
}

/// Strips the leading letter; `H(1) = 0`.
pub fn map_h(u: &AbPoly) -> AbPoly {
    u.iter()
        .filter(|(w, _)| !w.is_empty())
        .map(|(w, c)| (w.tail(), c.clone()))
        .collect()
}

/// Strips the trailing letter; `H*(1) = 0`.
pub fn map_h_star(u: &AbPoly) -> AbPoly {
    u.iter()
        .filter(|(w, _)| !w.is_empty())
        .map(|(w, c)| (w.init(), c.clone()))
        .collect()
}

/// `H` on cd-polynomials: `H(c·v) = 2v`, `H(d·v) = c·v`.
pub fn map_h_cd(v: &CdPoly) -> CdPoly {
    let mut out = CdPoly::zero();
    for (w, k) in v.iter().filter(|(w, _)| !w.is_empty()) {
        if w.letter(0) {
            out.add_term(CdWord::first_letter().concat(&w.tail()), k.clone());
        } else {
            out.add_term(w.tail(), k * 2);
        }
    }
    out
}

/// `H*` on cd-polynomials: `H*(v·c) = 2v`, `H*(v·d) = v·c`.
pub fn map_h_star_cd(v: &CdPoly) -> CdPoly {
    let mut out = CdPoly::zero();
    for (w, k) in v.iter().filter(|(w, _)| !w.is_empty()) {
        let last = w.len() - 1;
        if w.letter(last) {
            out.add_term(w.init().concat(&CdWord::first_letter()), k.clone());
        } else {
            out.add_term(w.init(), k * 2);
        }
    }
    out
}

/// Replaces each `ab` by `2d` and every other letter by `c`.
pub fn omega(u: &AbPoly) -> CdPoly {
    let mut out = CdPoly::zero();
    for (w, k) in u {
        let mut letters = Vec::with_capacity(w.len());
        let mut factor = k.clone();
        let mut i = 0;
        while i < w.len() {
            if i + 1 < w.len() && !w.letter(i) && w.letter(i + 1) {
                letters.push(true);
                factor *= 2;
                i += 2;
            } else {
                letters.push(false);
                i += 1;
            }
        }
        out.add_term(CdWord::from_letters(&letters), factor);
    }
    out
}

/// Expands `c → a + b`, `d → ab + ba`.
pub fn cd_to_ab(v: &CdPoly) -> AbPoly {
    let c_ab = a() + b();
    let d_ab = &(&a() * &b()) + &(&b() * &a());
    v.map_linear(|w| {
        w.letters().fold(AbWord::empty().poly(), |acc, l| {
            &acc * if l { &d_ab } else { &c_ab }
        })
    })
}

/// Rewrites an ab-polynomial in `c`, `d`.
///
/// Peels one cd-letter at a time: if `u = c·X + d·Y` then, writing
/// `u = a·U_a + b·U_b`, we get `U_b − U_a = (a − b)·Y` and `X = U_a − b·Y`.
/// Every step is checked exactly, so a non-expressible input is detected.
pub fn to_cd(u: &AbPoly) -> Result<CdPoly> {
    let mut out = CdPoly::zero();
    for (deg, part) in homogeneous_parts(u) {
        out += &peel_cd(&part, deg)?;
    }
    Ok(out)
}

fn peel_cd(u: &AbPoly, deg: usize) -> Result<CdPoly> {
    if u.is_zero() {
        return Ok(CdPoly::zero());
    }
    if deg == 0 {
        return Ok(CdPoly::term(CdWord::empty(), u.coeff(&AbWord::empty())));
    }
    let (mut ua, mut ub) = (AbPoly::zero(), AbPoly::zero());
    for (w, k) in u {
        let target = if w.letter(0) { &mut ub } else { &mut ua };
        target.add_term(w.tail(), k.clone());
    }
    let diff = &ub - &ua;
    if deg == 1 {
        if !diff.is_zero() {
            return Err(Error::NotCdExpressible);
        }
        return Ok(CdPoly::term(CdWord::first_letter(), ua.coeff(&AbWord::empty())));
    }
    // diff = a·Y − b·Y
    let (mut y, mut minus_y) = (AbPoly::zero(), AbPoly::zero());
    for (w, k) in &diff {
        let target = if w.letter(0) { &mut minus_y } else { &mut y };
        target.add_term(w.tail(), k.clone());
    }
    if y != -minus_y {
        return Err(Error::NotCdExpressible);
    }
    let x = &ua - &(&b() * &y);
    let mut out = CdPoly::zero();
    for (w, k) in &peel_cd(&x, deg - 1)? {
        out.add_term(CdWord::first_letter().concat(w), k.clone());
    }
    if deg >= 2 {
        for (w, k) in &peel_cd(&y, deg - 2)? {
            out.add_term(CdWord::second_letter().concat(w), k.clone());
        }
    }
    Ok(out)
}

/// Rewrites in `c`, `d` by solving the expansion system over the rationals.
///
/// Slower than [`to_cd`]; kept as an independent route for cross-checks.
pub fn to_cd_by_solve(u: &AbPoly) -> Result<CdPoly> {
    let mut out = CdPoly::zero();
    for (deg, part) in homogeneous_parts(u) {
        let cols = cd_words_of_degree(deg);
        let images: Vec<AbPoly> = cols.iter().map(|w| cd_to_ab(&w.poly())).collect();
        let rows: Vec<AbWord> = crate::word::words_of_length::<Ab>(deg).collect();
        let matrix: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| images.iter().map(|im| BigRational::from(im.coeff(r))).collect())
            .collect();
        let rhs: Vec<BigRational> = rows.iter().map(|r| BigRational::from(part.coeff(r))).collect();
        let sol = linalg::solve(&matrix, &rhs).ok_or(Error::NotCdExpressible)?;
        for (w, x) in cols.iter().zip(sol) {
            if !x.is_integer() {
                return Err(Error::NotCdExpressible);
            }
            out.add_term(*w, x.to_integer());
        }
    }
    if cd_to_ab(&out) != *u {
        return Err(Error::NotCdExpressible);
    }
    Ok(out)
}

/// Whether every word with `k` d's has a coefficient divisible by `2^k`.
pub fn is_c2d(v: &CdPoly) -> bool {
    v.iter().all(|(w, k)| {
        let m = BigInt::one() << w.count_second();
        (k % m).is_zero()
    })
}

/// Reads `e = a − b` as a letter: the same polynomial in the basis `{e, b}`.
pub fn ab_to_eb(u: &AbPoly) -> EbPoly {
    let mut out = EbPoly::zero();
    for (deg, part) in homogeneous_parts(u) {
        let n = deg;
        let mut dense = vec![BigInt::zero(); 1 << n];
        for (w, k) in &part {
            dense[w.bits() as usize] += k;
        }
        // a = e + b: the coefficient of an eb-word S is the sum over ab-words B ⊆ S.
        for bit in 0..n {
            for mask in 0..(1usize << n) {
                if mask & (1 << bit) != 0 {
                    let lower = dense[mask ^ (1 << bit)].clone();
                    dense[mask] += lower;
                }
            }
        }
        for (bits, k) in dense.into_iter().enumerate() {
            out.add_term(EbWord::from_bits(n, bits as u64), k);
        }
    }
    out
}

/// Inverse of [`ab_to_eb`].
pub fn eb_to_ab(u: &EbPoly) -> AbPoly {
    let mut out = AbPoly::zero();
    for (deg, part) in homogeneous_parts(u) {
        let dense = eb_dense_to_ab(deg, {
            let mut v = vec![BigInt::zero(); 1 << deg];
            for (w, k) in &part {
                v[w.bits() as usize] += k;
            }
            v
        });
        for (bits, k) in dense.into_iter().enumerate() {
            out.add_term(AbWord::from_bits(deg, bits as u64), k);
        }
    }
    out
}

/// Dense version of the eb→ab change of basis on words of length `n`.
pub(crate) fn eb_dense_to_ab(n: usize, mut dense: Vec<BigInt>) -> Vec<BigInt> {
    for bit in 0..n {
        for mask in 0..(1usize << n) {
            if mask & (1 << bit) != 0 {
                let lower = dense[mask ^ (1 << bit)].clone();
                dense[mask] -= lower;
            }
        }
    }
    dense
}

/// Flag f-vector indexed by rank sets: bit `i − 1` of the index is rank `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    rank: usize,
    values: Vec<BigInt>,
}

impl FlagVector {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `f_S` for a set of ranks in `1..rank`.
    pub fn get(&self, ranks: &[usize]) -> BigInt {
        let mask = ranks.iter().fold(0usize, |m, &r| {
            assert!(r >= 1 && r < self.rank, "rank {r} outside 1..{}", self.rank);
            m | 1 << (r - 1)
        });
        self.values[mask].clone()
    }

    /// `(S, f_S)` with `S` as a sorted rank list.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &BigInt)> + '_ {
        self.values.iter().enumerate().map(move |(mask, v)| {
            let ranks = (1..self.rank).filter(|r| mask >> (r - 1) & 1 == 1).collect();
            (ranks, v)
        })
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Flag h-vector: `h_S = Σ_{T ⊆ S} (−1)^{|S − T|} f_T`.
    pub fn flag_h(&self) -> Vec<BigInt> {
        let n = self.rank - 1;
        let mut h = self.values.clone();
        for bit in 0..n {
            for mask in 0..(1usize << n) {
                if mask & (1 << bit) != 0 {
                    let lower = h[mask ^ (1 << bit)].clone();
                    h[mask] -= lower;
                }
            }
        }
        h
    }
}

/// Counts chains by their rank set, extending chains one rank set at a time.
pub fn flag_f_vector(p: &Poset) -> Result<FlagVector> {
    let rank = p.rank();
    if rank == 0 {
        return Err(Error::RankZeroInput);
    }
    let levels: Vec<Vec<usize>> = (0..=rank).map(|r| p.elements_of_rank(r)).collect();
    let mut values = vec![BigInt::zero(); 1 << (rank - 1)];

    fn extend(
        p: &Poset,
        levels: &[Vec<usize>],
        from: usize,
        counts: &[BigInt],
        mask: usize,
        values: &mut [BigInt],
    ) {
        let rank = levels.len() - 1;
        for next in from + 1..=rank {
            let reached: Vec<BigInt> = levels[next]
                .iter()
                .map(|&x| {
                    levels[from]
                        .iter()
                        .zip(counts)
                        .filter(|(&y, _)| p.lt(y, x))
                        .map(|(_, c)| c.clone())
                        .sum()
                })
                .collect();
            if next == rank {
                values[mask] = reached.into_iter().sum();
            } else {
                extend(p, levels, next, &reached, mask | 1 << (next - 1), values);
            }
        }
    }

    extend(p, &levels, 0, &[BigInt::one()], 0, &mut values);
    Ok(FlagVector { rank, values })
}

/// `Ψ(P) = Σ_S h_S · u_S`, where `u_S` has `b` exactly at the positions in `S`.
pub fn ab_index(p: &Poset) -> Result<AbPoly> {
    let f = flag_f_vector(p)?;
    let n = p.rank() - 1;
    let h = f.flag_h();
    Ok(h.into_iter()
        .enumerate()
        .map(|(mask, k)| {
            let letters: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            (AbWord::from_letters(&letters), k)
        })
        .collect())
}

/// The cd-index of `P`; fails unless `Ψ(P)` lies in `Z⟨c,d⟩`.
pub fn cd_index(p: &Poset) -> Result<CdPoly> {
    to_cd(&ab_index(p)?)
}

/// Largest coefficient in absolute value (zero for the zero polynomial).
pub fn max_abs_coeff<K: Ord + Clone>(u: &LinComb<K>) -> BigInt {
    u.iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
}

/// Convenience parser for tests and examples. Panics on bad input.
pub fn ab(s: &str) -> AbPoly {
    s.parse().unwrap_or_else(|e| panic!("bad ab-polynomial `{s}`: {e}"))
}

/// Convenience parser for tests and examples. Panics on bad input.
pub fn cd(s: &str) -> CdPoly {
    s.parse().unwrap_or_else(|e| panic!("bad cd-polynomial `{s}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{boolean_algebra, chain, crosspolytope, ladder};

    #[test]
    fn star_and_unit() {
        assert_eq!(star(&ab("ab")), ab("ba"));
        let u = ab("aab - 3*ba");
        assert_eq!(&ab("1") * &u, u);
        assert_eq!(star(&(&u * &ab("b + ab"))), &star(&ab("b + ab")) * &star(&u));
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct(&ab("a")).to_string(), "1*(1 ⊗ 1)");
        assert_eq!(coproduct(&ab("ab")).to_string(), "1*(1 ⊗ b) + 1*(a ⊗ 1)");
        assert!(coproduct(&ab("1")).is_zero());
        let d2 = coproduct_k(&ab("aba"), 3);
        let middle_deg1 = d2.iter().filter(|(k, _)| k.0[1].len() == 1).count();
        assert_eq!(middle_deg1, 1);
        let d1 = coproduct_k(&ab("ab"), 1);
        assert_eq!(d1.to_string(), "1*(ab)");
    }

    #[test]
    fn functionals() {
        assert_eq!(map_c(&ab("1")), BigInt::from(2));
        assert_eq!(map_c(&ab("a")), BigInt::from(3));
        assert_eq!(map_c(&ab_index(&boolean_algebra(3)).unwrap()), BigInt::from(8));
        for s in ["1", "a", "b", "aab", "aba", "bba", "aaaa", "abaa"] {
            assert_eq!(map_c(&ab(s)), map_c_by_coproduct(&ab(s)), "{s}");
        }
        assert_eq!(kappa(&ab("1")), ab("1"));
        assert_eq!(nu(&ab("1")), ab("2*1"));
        assert!(kappa(&ab("ab")).is_zero());
        assert_eq!(nu(&ab("a")), ab("3*a - 3*b"));
        assert_eq!(eval(&ab("a + b"), 1, 1), BigInt::from(2));
        assert_eq!(eval(&e_pow(3), 0, 1), BigInt::from(-1));
    }

    #[test]
    fn h_maps_and_omega() {
        assert_eq!(map_h(&ab("ab")), ab("b"));
        let psi = ab_index(&boolean_algebra(3)).unwrap();
        assert_eq!(map_h_star(&psi), ab("3*a + 3*b"));
        assert_eq!(map_h_cd(&cd("cd")), cd("2*d"));
        assert_eq!(map_h_star_cd(&cd("cd")), cd("cc"));
        assert_eq!(omega(&ab("aa")), cd("cc"));
        assert_eq!(omega(&ab("ab")), cd("2*d"));
        assert_eq!(omega(&ab("abab")), cd("4*dd"));
        assert_eq!(omega(&ab("bab")), cd("2*cd"));
    }

    #[test]
    fn cd_conversion() {
        assert_eq!(to_cd(&ab("aa + ab + ba + bb")).unwrap(), cd("cc"));
        assert_eq!(to_cd(&ab("a")), Err(Error::NotCdExpressible));
        assert_eq!(to_cd_by_solve(&ab("a")), Err(Error::NotCdExpressible));
        let psi = ab_index(&boolean_algebra(3)).unwrap();
        assert_eq!(to_cd(&psi).unwrap(), cd("cc + d"));
        assert_eq!(cd_to_ab(&cd("cc + d")), psi);
        assert_eq!(to_cd(&ab("3*1")).unwrap(), cd("3*1"));
        for n in 1..=5 {
            for w in cd_words_of_degree(n) {
                let v = CdPoly::term(w, 3) + cd("c");
                let u = cd_to_ab(&v);
                assert_eq!(to_cd(&u).unwrap(), v);
                assert_eq!(to_cd_by_solve(&u).unwrap(), v);
            }
        }
        assert!(is_c2d(&cd("cc + 2*d")));
        assert!(!is_c2d(&cd("cc + d")));
        assert!(is_c2d(&cd("ccccc")));
    }

    #[test]
    fn ab_index_examples() {
        assert_eq!(ab_index(&chain(1)).unwrap(), ab("1"));
        assert_eq!(ab_index(&boolean_algebra(2)).unwrap(), ab("a + b"));
        assert_eq!(ab_index(&ladder(2)).unwrap(), ab("aa + ab + ba + bb"));
        assert_eq!(ab_index(&crate::poset::point()), Err(Error::RankZeroInput));
        assert_eq!(eval(&ab_index(&boolean_algebra(2)).unwrap(), 1, 1), BigInt::from(2));
        let c3 = cd_index(&crosspolytope(3)).unwrap();
        assert!(c3.all_nonnegative());
        assert_eq!(c3.coeff(&"ccc".parse().unwrap()), BigInt::one());
    }

    #[test]
    fn flag_vectors() {
        let b2 = flag_f_vector(&boolean_algebra(2)).unwrap();
        assert_eq!(b2.get(&[]), BigInt::one());
        assert_eq!(b2.get(&[1]), BigInt::from(2));
        let p = ladder(3);
        let f = flag_f_vector(&p).unwrap();
        let g = flag_f_vector(&p.dual()).unwrap();
        for (s, v) in f.iter() {
            let mirrored: Vec<usize> = s.iter().map(|r| p.rank() - r).collect();
            assert_eq!(&g.get(&mirrored), v);
        }
    }

    #[test]
    fn eb_basis_round_trip() {
        let u = ab("3*aab - ba + 2*1 + b");
        assert_eq!(eb_to_ab(&ab_to_eb(&u)), u);
        let e: EbPoly = "e".parse().unwrap();
        assert_eq!(eb_to_ab(&e), ab("a - b"));
        assert_eq!(ab_to_eb(&ab("a")), "e + b".parse::<EbPoly>().unwrap());
    }
}
