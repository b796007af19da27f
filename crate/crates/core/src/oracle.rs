//! Brute-force reference computations used to cross-check the fast paths.
//!
//! Nothing here calls the flag-vector, γ, quasi-shuffle, Möbius-row or
//! chain-kernel code; each function works from the order relation alone.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poset::Poset;
use crate::qsym::{Composition, QSymElem};
use crate::transforms::Character;
use crate::word::{AbPoly, AbWord};

/// Number of chains `0̂ < x₁ < ⋯ < x_k < 1̂` with rank set exactly `S`, for
/// every `S ⊆ {1, …, n−1}` as a bitmask (bit `r−1` is rank `r`).
pub fn flag_f_brute(p: &Poset) -> Vec<BigInt> {
    let n = p.rank();
    assert!(n >= 1, "flag vector of a rank-0 poset");
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0usize..(1 << (n - 1)) {
        let mut ranks: Vec<usize> = (1..n).filter(|r| mask >> (r - 1) & 1 == 1).collect();
        ranks.push(n);
        let mut counts: Vec<(usize, BigInt)> = vec![(p.bottom(), BigInt::one())];
        for r in ranks {
            counts = (0..p.len())
                .filter(|&y| p.rank_of(y) == r)
                .map(|y| {
                    let total: BigInt = counts
                        .iter()
                        .filter(|(x, _)| p.lt(*x, y))
                        .map(|(_, c)| c.clone())
                        .sum();
                    (y, total)
                })
                .collect();
        }
        out.push(counts.into_iter().map(|(_, c)| c).sum());
    }
    out
}

/// `Ψ(P) = Σ_S f_S · u_S` with `u_S` carrying `b` at the positions in `S` and
/// `a − b` elsewhere, expanded word by word.
pub fn psi_brute(p: &Poset) -> AbPoly {
    let n = p.rank();
    let f = flag_f_brute(p);
    let mut out = AbPoly::zero();
    for (s, fs) in f.iter().enumerate() {
        if fs.is_zero() {
            continue;
        }
        for t in 0usize..(1 << (n - 1)) {
            if t & s != s {
                continue;
            }
            let sign = if (t & !s).count_ones() % 2 == 1 { -fs } else { fs.clone() };
            let letters: Vec<bool> = (0..n - 1).map(|i| t >> i & 1 == 1).collect();
            out.add_term(AbWord::from_letters(&letters), sign);
        }
    }
    out
}

/// `μ(x, y)` by Philip Hall's theorem: the reduced Euler characteristic of
/// the chains strictly between `x` and `y`.
pub fn mobius_hall(p: &Poset, x: usize, y: usize) -> BigInt {
    if !p.leq(x, y) {
        return BigInt::zero();
    }
    if x == y {
        return BigInt::one();
    }
    // Signed count of chains x = z₀ < z₁ < ⋯ < z_k = y, sign (−1)^k.
    fn walk(p: &Poset, from: usize, y: usize, memo: &mut HashMap<usize, BigInt>) -> BigInt {
        if let Some(v) = memo.get(&from) {
            return v.clone();
        }
        let mut total = -BigInt::one();
        for z in (0..p.len()).filter(|&z| p.lt(from, z) && p.lt(z, y)) {
            total -= walk(p, z, y, memo);
        }
        memo.insert(from, total.clone());
        total
    }
    walk(p, x, y, &mut HashMap::new())
}

/// `Σ_x base^{ρ(x)} μ(0̂, x)` from Hall's theorem.
pub fn signed_mobius_brute(p: &Poset, base: i64) -> BigInt {
    (0..p.len())
        .map(|x| num_traits::pow(BigInt::from(base), p.rank_of(x)) * mobius_hall(p, p.bottom(), x))
        .sum()
}

/// `Σ_x (−1)^{ρ(x)} μ(0̂, x)`.
pub fn zaslavsky_brute(p: &Poset) -> BigInt {
    signed_mobius_brute(p, -1)
}

/// Every interval of length at least one has as many elements of even rank
/// as of odd rank.
pub fn is_eulerian_brute(p: &Poset) -> bool {
    (0..p.len()).all(|x| {
        (0..p.len()).filter(|&y| p.lt(x, y)).all(|y| {
            let balance: i64 = (0..p.len())
                .filter(|&z| p.leq(x, z) && p.leq(z, y))
                .map(|z| if p.rank_of(z).is_multiple_of(2) { 1 } else { -1 })
                .sum();
            balance == 0
        })
    })
}

/// Polynomial in `t₁, …, t_m` keyed by exponent vector.
type Monomials = HashMap<Vec<u32>, BigInt>;

fn expand_m(comp: &Composition, m: usize) -> Monomials {
    let parts = comp.parts();
    let mut out = Monomials::new();
    let mut positions = Vec::new();
    fn go(parts: &[u32], m: usize, start: usize, positions: &mut Vec<usize>, out: &mut Monomials) {
        if positions.len() == parts.len() {
            let mut exps = vec![0u32; m];
            for (&pos, &e) in positions.iter().zip(parts) {
                exps[pos] = e;
            }
            *out.entry(exps).or_default() += 1;
            return;
        }
        for pos in start..m {
            positions.push(pos);
            go(parts, m, pos + 1, positions, out);
            positions.pop();
        }
    }
    go(parts, m, 0, &mut positions, &mut out);
    out
}

fn expand(f: &QSymElem, m: usize) -> Monomials {
    let mut out = Monomials::new();
    for (comp, c) in f {
        for (exps, k) in expand_m(comp, m) {
            *out.entry(exps).or_default() += c * k;
        }
    }
    out
}

/// Reads a quasisymmetric polynomial in `m` variables back into the
/// monomial basis from its left-packed monomials.
fn collapse(poly: &Monomials) -> QSymElem {
    poly.iter()
        .filter(|(exps, _)| {
            let k = exps.iter().take_while(|&&e| e > 0).count();
            exps[k..].iter().all(|&e| e == 0)
        })
        .map(|(exps, c)| {
            let parts: Vec<u32> = exps.iter().copied().take_while(|&e| e > 0).collect();
            (Composition::new(parts), c.clone())
        })
        .collect()
}

/// `f·g` by multiplying the polynomials in enough commuting variables that
/// no monomial of the product is lost.
pub fn qsym_product_brute(f: &QSymElem, g: &QSymElem) -> QSymElem {
    let longest = |h: &QSymElem| h.keys().map(Composition::len).max().unwrap_or(0);
    let m = (longest(f) + longest(g)).max(1);
    let (pf, pg) = (expand(f, m), expand(g, m));
    let mut prod = Monomials::new();
    for (x, cx) in &pf {
        for (y, cy) in &pg {
            let exps: Vec<u32> = x.iter().zip(y).map(|(a, b)| a + b).collect();
            *prod.entry(exps).or_default() += cx * cy;
        }
    }
    collapse(&prod)
}

/// Visits every chain `0̂ = x₀ < x₁ < ⋯ < x_k = 1̂`.
fn for_each_chain(p: &Poset, mut visit: impl FnMut(&[usize])) {
    fn go(p: &Poset, chain: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        let last = *chain.last().unwrap();
        if last == p.top() {
            visit(chain);
            return;
        }
        for z in (0..p.len()).filter(|&z| p.lt(last, z)) {
            chain.push(z);
            go(p, chain, visit);
            chain.pop();
        }
    }
    let mut chain = vec![p.bottom()];
    if p.bottom() == p.top() {
        visit(&chain);
        return;
    }
    go(p, &mut chain, &mut visit);
}

/// `F(P) = Σ_c M_{(ρ(x₀,x₁), …, ρ(x_{k−1},x_k))}` over chains from 0̂ to 1̂.
pub fn f_brute(p: &Poset) -> QSymElem {
    let mut out = QSymElem::zero();
    for_each_chain(p, |c| {
        let parts = c.windows(2).map(|w| (p.rank_of(w[1]) - p.rank_of(w[0])) as u32).collect();
        out.add_term(Composition::new(parts), BigInt::one());
    });
    out
}

/// `g̃(F(P)) = Σ_c Π G(Ψ([x_{i−1}, x_i]))·M_{ranks(c)}`, with every interval
/// index taken from [`psi_brute`].
pub fn gtilde_f_brute(g: &Character, p: &Poset) -> QSymElem {
    let mut cache: HashMap<(usize, usize), BigInt> = HashMap::new();
    let mut out = QSymElem::zero();
    for_each_chain(p, |c| {
        let mut weight = BigInt::one();
        for w in c.windows(2) {
            let v = cache.entry((w[0], w[1])).or_insert_with(|| {
                let interval = p.interval(w[0], w[1]).expect("chain steps are comparable");
                g.eval(&psi_brute(&interval))
            });
            weight *= &*v;
        }
        let parts = c.windows(2).map(|w| (p.rank_of(w[1]) - p.rank_of(w[0])) as u32).collect();
        out.add_term(Composition::new(parts), weight);
    });
    out
}

/// `g(F_B(P)) = Σ_{0̂ < x ≤ 1̂} s^{ρ(x)−1}·g̃(F([x, 1̂]))`.
pub fn g_fb_brute(g: &Character, p: &Poset) -> crate::qsym::BQSymElem {
    let mut out = crate::qsym::BQSymElem::zero();
    for x in (0..p.len()).filter(|&x| x != p.bottom()) {
        let upper = p.interval(x, p.top()).expect("x is below the top");
        for (comp, c) in &gtilde_f_brute(g, &upper) {
            out.add_term(
                crate::qsym::BMonomial::new(p.rank_of(x) as u32 - 1, comp.clone()),
                c.clone(),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab_algebra::ab;
    use crate::poset::{boolean_algebra, chain};
    use crate::qsym::m;

    #[test]
    fn hand_values() {
        assert_eq!(psi_brute(&chain(3)), ab("aa"));
        assert_eq!(psi_brute(&boolean_algebra(2)), ab("a + b"));
        assert_eq!(mobius_hall(&boolean_algebra(3), 0, 7), BigInt::from(-1));
        assert_eq!(zaslavsky_brute(&boolean_algebra(2)), BigInt::from(4));
        assert!(is_eulerian_brute(&boolean_algebra(3)));
        assert!(!is_eulerian_brute(&chain(2)));
        assert_eq!(qsym_product_brute(&m(&[1]), &m(&[1])), m(&[2]) + m(&[1, 1]).scale(&2.into()));
        assert_eq!(f_brute(&boolean_algebra(2)), m(&[2]) + m(&[1, 1]).scale(&2.into()));
    }
}
