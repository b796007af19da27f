//! The Tchebyshev transforms of the first and second kind on ab-polynomials,
//! the operators σ, π and η, characters, and the chain maps `g` and `g̃`.
//!
//! Every map here has the shape
//!
//! ```text
//! u ↦ Σ_k Σ f₁(u₍₁₎)·b·f₂(u₍₂₎)·b ⋯ b·f_k(u₍ₖ₎),   f_i(v) = F_i(v)·(a − b)^{deg v}
//! ```
//!
//! for scalar functionals `F_i` that depend only on whether a factor is the
//! first, a middle, or the last one. Writing `e = a − b`, the term for a
//! given set of deleted positions is a scalar times the eb-word with `b`
//! exactly at those positions, so the whole sum is accumulated densely in
//! the `{e, b}` basis and converted back to `{a, b}` once per degree.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::ab_algebra::{
    a, b, coproduct, coproduct_k, e_pow, eb_dense_to_ab, homogeneous_parts, kappa,
    map_a_word, map_c_word, map_h_star, nu, star, to_cd,
};
use crate::error::Result;
use crate::word::{AbPoly, AbWord, CdPoly};

type Functional<'a> = &'a dyn Fn(AbWord) -> BigInt;

/// Scalar functionals applied to the factors of an iterated coproduct.
struct Kernel<'a> {
    /// Used when nothing is deleted (`k = 1`).
    single: Functional<'a>,
    first: Functional<'a>,
    middle: Functional<'a>,
    last: Functional<'a>,
}

fn zero_functional(_: AbWord) -> BigInt {
    BigInt::zero()
}

fn chain_kernel(u: &AbPoly, kernel: &Kernel<'_>) -> AbPoly {
    let mut out = AbPoly::zero();
    for (n, part) in homogeneous_parts(u) {
        let mut dense = vec![BigInt::zero(); 1 << n];
        for (w, coeff) in &part {
            accumulate(*w, coeff, kernel, &mut dense);
        }
        for (bits, k) in eb_dense_to_ab(n, dense).into_iter().enumerate() {
            out.add_term(AbWord::from_bits(n, bits as u64), k);
        }
    }
    out
}

/// Adds `coeff · Σ_S weight(w, S) · eb(S)` to `dense`.
fn accumulate(w: AbWord, coeff: &BigInt, kernel: &Kernel<'_>, dense: &mut [BigInt]) {
    let n = w.len();
    let single = (kernel.single)(w);
    if !single.is_zero() {
        dense[0] += coeff * single;
    }
    // Stack of (segment start, product so far, eb bits so far).
    let mut stack: Vec<(usize, BigInt, u64)> = Vec::new();
    for cut in 0..n {
        let f = (kernel.first)(w.slice(0, cut));
        if !f.is_zero() {
            stack.push((cut + 1, coeff * f, 1u64 << (n - 1 - cut)));
        }
    }
    while let Some((start, product, bits)) = stack.pop() {
        let last = (kernel.last)(w.slice(start, n));
        if !last.is_zero() {
            dense[bits as usize] += &product * last;
        }
        for cut in start..n {
            let m = (kernel.middle)(w.slice(start, cut));
            if !m.is_zero() {
                stack.push((cut + 1, &product * m, bits | 1u64 << (n - 1 - cut)));
            }
        }
    }
}

/// Tchebyshev transform of the first kind:
/// `T(u) = Σ ν(u₍₁₎)·b·ν(u₍₂₎)·b ⋯ b·κ(u₍ₖ₎)`.
pub fn tcheb_t(u: &AbPoly) -> AbPoly {
    chain_kernel(
        u,
        &Kernel {
            single: &map_a_word,
            first: &map_c_word,
            middle: &map_c_word,
            last: &map_a_word,
        },
    )
}

/// `T` expanded term by term over the iterated coproducts. Exponential;
/// an independent route for checking [`tcheb_t`].
pub fn tcheb_t_by_coproducts(u: &AbPoly) -> AbPoly {
    let top = u.keys().map(|w| w.len()).max().unwrap_or(0);
    let mut out = AbPoly::zero();
    for k in 1..=top + 1 {
        for (key, coeff) in &coproduct_k(u, k) {
            let factors = &key.0;
            let mut term = AbWord::empty().poly();
            for (i, f) in factors.iter().enumerate() {
                if i > 0 {
                    term = &term * &b();
                }
                let piece = if i + 1 == factors.len() {
                    kappa(&f.poly())
                } else {
                    nu(&f.poly())
                };
                term = &term * &piece;
            }
            out.add_scaled(&term, coeff);
        }
    }
    out
}

/// `σ(u) = Σ κ(u₍₁₎)·b·T(u₍₂₎)`.
pub fn sigma(u: &AbPoly) -> AbPoly {
    let mut out = AbPoly::zero();
    for (key, coeff) in &coproduct(u) {
        let term = &(&kappa(&key.0[0].poly()) * &b()) * &tcheb_t(&key.0[1].poly());
        out.add_scaled(&term, coeff);
    }
    out
}

/// `π(u) = 2b·T(u) + 2(a − b)·σ(u)`.
pub fn pi(u: &AbPoly) -> AbPoly {
    let two = BigInt::from(2);
    (&b() * &tcheb_t(u)).scale(&two) + (&e_pow(1) * &sigma(u)).scale(&two)
}

/// `T` and `σ` from the joint recursion on the first letter:
/// `T(a·u) = (a+b)T(u) + (a−b)σ(u)`, `T(b·u) = 2bT(u) + (a−b)σ(u)`,
/// `σ(a·u) = bT(u) + (a−b)σ(u)`, `σ(b·u) = bT(u)`, `T(1) = 1`, `σ(1) = 0`.
pub fn tcheb_t_sigma_recursive(u: &AbPoly) -> (AbPoly, AbPoly) {
    let mut memo: HashMap<AbWord, (AbPoly, AbPoly)> = HashMap::new();
    let (mut t, mut s) = (AbPoly::zero(), AbPoly::zero());
    for (w, coeff) in u {
        let (tw, sw) = recurse(*w, &mut memo);
        t.add_scaled(&tw, coeff);
        s.add_scaled(&sw, coeff);
    }
    (t, s)
}

fn recurse(w: AbWord, memo: &mut HashMap<AbWord, (AbPoly, AbPoly)>) -> (AbPoly, AbPoly) {
    if w.is_empty() {
        return (AbWord::empty().poly(), AbPoly::zero());
    }
    if let Some(hit) = memo.get(&w) {
        return hit.clone();
    }
    let (tu, su) = recurse(w.tail(), memo);
    let e_sigma = &e_pow(1) * &su;
    let b_t = &b() * &tu;
    let result = if w.letter(0) {
        (b_t.scale(&BigInt::from(2)) + e_sigma, b_t)
    } else {
        (&(&(a() + b()) * &tu) + &e_sigma, b_t + e_sigma)
    };
    memo.insert(w, result.clone());
    result
}

/// Tchebyshev transform of the second kind:
/// `U(u) = Σ ν(u₍₁₎)·b·ν(u₍₂₎)·b ⋯ b·ν(u₍ₖ₎)`.
pub fn tcheb_u(u: &AbPoly) -> AbPoly {
    chain_kernel(
        u,
        &Kernel {
            single: &map_c_word,
            first: &map_c_word,
            middle: &map_c_word,
            last: &map_c_word,
        },
    )
}

/// `U(u) = H*(T(u·a))`.
pub fn tcheb_u_via_t(u: &AbPoly) -> AbPoly {
    map_h_star(&tcheb_t(&(u * &a())))
}

/// A linear functional on `Z⟨a,b⟩`, given by its values on words.
#[derive(Clone)]
pub struct Character {
    name: String,
    f: Arc<dyn Fn(AbWord) -> BigInt + Send + Sync>,
}

impl Character {
    pub fn new(name: impl Into<String>, f: impl Fn(AbWord) -> BigInt + Send + Sync + 'static) -> Self {
        Character {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval_word(&self, w: AbWord) -> BigInt {
        (self.f)(w)
    }

    pub fn eval(&self, u: &AbPoly) -> BigInt {
        u.eval_linear(|w| self.eval_word(*w))
    }

    /// `ĝ(u) = G(u)·(a − b)^{deg u}`, degree-wise.
    pub fn hat(&self, u: &AbPoly) -> AbPoly {
        crate::ab_algebra::hat(u, |w| self.eval_word(w))
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character({})", self.name)
    }
}

/// `G = A`; it takes the value 1 on every ab-index.
pub fn char_const_one() -> Character {
    Character::new("const-one", map_a_word)
}

/// `G = C`; `C(Ψ(P)) = |P|`.
pub fn char_cardinality() -> Character {
    Character::new("cardinality", map_c_word)
}

/// `G(Ψ(P)) = Σ_x (−1)^{ρ(x)} μ(0̂, x)`.
pub fn char_zaslavsky() -> Character {
    let mut c = char_r_signed(2);
    c.name = "zaslavsky".into();
    c
}

/// `G(Ψ(P)) = Σ_x (1 − r)^{ρ(x)} μ(0̂, x)`.
///
/// With `E(u) = eval(u, 0, 1)` (the coefficient of the all-b word) this is
/// `G(u) = A(u) + (r−1)^{deg u + 1} E(u) + Σ (r−1)^{deg u₍₁₎ + 1} E(u₍₁₎) A(u₍₂₎)`:
/// the three terms are `x = 0̂`, `x = 1̂` and `0̂ < x < 1̂`, using
/// `(−1)^{ρ(P)} μ(P) = E(Ψ(P))` and `A(Ψ(Q)) = 1`.
pub fn char_r_signed(r: i64) -> Character {
    let base = BigInt::from(r - 1);
    Character::new(format!("r-signed({r})"), move |w: AbWord| {
        let n = w.len();
        let all_b = |v: AbWord| v.count_second() == v.len();
        let mut total = map_a_word(w);
        if all_b(w) {
            total += Pow::pow(&base, (n + 1) as u32);
        }
        for i in 0..n {
            if all_b(w.slice(0, i)) && w.slice(i + 1, n).count_second() == 0 {
                total += Pow::pow(&base, (i + 1) as u32);
            }
        }
        total
    })
}

/// The four characters exercised by the verification suites.
pub fn builtin_characters() -> Vec<Character> {
    vec![
        char_const_one(),
        char_cardinality(),
        char_zaslavsky(),
        char_r_signed(3),
    ]
}

/// Chain map of the first kind: `g(u) = Σ κ(u₍₁₎)·b·ĝ(u₍₂₎)·b ⋯ b·ĝ(u₍ₖ₎)`.
pub fn chain_map_first(g: &Character, u: &AbPoly) -> AbPoly {
    let gf = |w: AbWord| g.eval_word(w);
    chain_kernel(
        u,
        &Kernel {
            single: &map_a_word,
            first: &map_a_word,
            middle: &gf,
            last: &gf,
        },
    )
}

/// Chain map of the second kind: `g̃(u) = Σ ĝ(u₍₁₎)·b·ĝ(u₍₂₎)·b ⋯ b·ĝ(u₍ₖ₎)`.
pub fn chain_map_second(g: &Character, u: &AbPoly) -> AbPoly {
    let gf = |w: AbWord| g.eval_word(w);
    chain_kernel(
        u,
        &Kernel {
            single: &gf,
            first: &gf,
            middle: &gf,
            last: &gf,
        },
    )
}

/// `η(u) = Z(u)·(a − b)^{deg u}` with `Z` the Zaslavsky character.
///
/// On the span of ab-indices this is the operator determined by
/// `η(Ψ(P)) = (Σ (−1)^{ρ(x)} μ(0̂,x))·(a − b)^{ρ(P)−1}`; off that span the
/// extension through the word formula for `Z` is a choice.
pub fn eta(u: &AbPoly) -> AbPoly {
    char_zaslavsky().hat(u)
}

/// `σ`'s kernel form, kept for cross-checking the coproduct definition.
pub fn sigma_kernel(u: &AbPoly) -> AbPoly {
    chain_kernel(
        u,
        &Kernel {
            single: &zero_functional,
            first: &map_a_word,
            middle: &map_c_word,
            last: &map_a_word,
        },
    )
}

/// Univariate polynomial with integer coefficients, lowest degree first.
pub type IntPoly = Vec<BigInt>;

/// Tchebyshev polynomials recovered from the transforms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TchebyshevPolynomials {
    /// `T_n` from `T(c^{n−1}·a)`.
    pub first: IntPoly,
    /// `U_{n−1}` from `½·U(c^{n−1})`.
    pub second: IntPoly,
}

/// Substitutes `c → x`, `d → (x² − 1)/2` into the cd-forms of
/// `T(c^{n−1}·a)` and `½·U(c^{n−1})`. Requires `n ≥ 1`.
pub fn tcheb_polynomial_check(n: usize) -> Result<TchebyshevPolynomials> {
    if n == 0 {
        return Err(crate::Error::BadParameter("n must be at least 1".into()));
    }
    let c_ab = a() + b();
    let base = crate::ab_algebra::pow(&c_ab, n - 1);
    let first = substitute(&to_cd(&tcheb_t(&(&base * &a())))?, &BigRational::one());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let second = substitute(&to_cd(&tcheb_u(&base))?, &half);
    Ok(TchebyshevPolynomials {
        first: integral(first)?,
        second: integral(second)?,
    })
}

fn substitute(v: &CdPoly, scale: &BigRational) -> Vec<BigRational> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let x: Vec<BigRational> = vec![BigRational::zero(), BigRational::one()];
    let dx: Vec<BigRational> = vec![-half.clone(), BigRational::zero(), half];
    let mut out: Vec<BigRational> = Vec::new();
    for (w, k) in v {
        let mut term = vec![BigRational::from(k.clone()) * scale];
        for l in w.letters() {
            term = poly_mul(&term, if l { &dx } else { &x });
        }
        poly_add_into(&mut out, &term);
    }
    trim(out)
}

fn poly_mul(p: &[BigRational], q: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_into(acc: &mut Vec<BigRational>, p: &[BigRational]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigRational::zero());
    }
    for (a, x) in acc.iter_mut().zip(p) {
        *a += x;
    }
}

fn trim<T: Zero>(mut p: Vec<T>) -> Vec<T> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn integral(p: Vec<BigRational>) -> Result<IntPoly> {
    p.into_iter()
        .map(|x| {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(crate::Error::NotCdExpressible)
            }
        })
        .collect()
}

/// `T_n` from `T₀ = 1`, `T₁ = x`, `T_{n+1} = 2x·T_n − T_{n−1}`.
pub fn classical_first_kind(n: usize) -> IntPoly {
    classical(n, vec![BigInt::one()], vec![BigInt::zero(), BigInt::one()])
}

/// `U_n` from `U₀ = 1`, `U₁ = 2x`, `U_{n+1} = 2x·U_n − U_{n−1}`.
pub fn classical_second_kind(n: usize) -> IntPoly {
    classical(n, vec![BigInt::one()], vec![BigInt::zero(), BigInt::from(2)])
}

fn classical(n: usize, p0: IntPoly, p1: IntPoly) -> IntPoly {
    let (mut prev, mut cur) = (p0, p1);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, x) in cur.iter().enumerate() {
            next[i + 1] += x * 2;
        }
        for (i, x) in prev.iter().enumerate() {
            next[i] -= x;
        }
        prev = std::mem::replace(&mut cur, trim(next));
    }
    cur
}

/// `v·a` with `v` read through `c → a + b`, `d → ab + ba`.
pub fn cd_times_a(v: &CdPoly) -> AbPoly {
    &crate::ab_algebra::cd_to_ab(v) * &a()
}

/// `T(u*)*`, the form in which `T` appears as a chain map of the first kind.
pub fn tcheb_t_starred(u: &AbPoly) -> AbPoly {
    star(&tcheb_t(&star(u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ab_algebra::{ab, cd, cd_to_ab, omega};

    #[test]
    fn first_kind_values() {
        assert_eq!(tcheb_t(&ab("1")), ab("1"));
        assert_eq!(tcheb_t(&ab("a")), ab("a + b"));
        let ca = cd_times_a(&cd("c"));
        assert_eq!(to_cd(&tcheb_t(&ca)).unwrap(), cd("cc + 2*d"));
        for s in ["1", "a", "b", "ab", "bba", "abab", "aabba"] {
            let u = ab(s);
            assert_eq!(tcheb_t(&u), tcheb_t_by_coproducts(&u), "{s}");
            let (t, sg) = tcheb_t_sigma_recursive(&u);
            assert_eq!(t, tcheb_t(&u), "{s}");
            assert_eq!(sg, sigma(&u), "{s}");
            assert_eq!(sg, sigma_kernel(&u), "{s}");
        }
    }

    #[test]
    fn sigma_pi_values() {
        assert!(sigma(&ab("1")).is_zero());
        assert_eq!(sigma(&ab("b")), ab("b"));
        assert_eq!(to_cd(&pi(&ab("a"))).unwrap(), cd("2*d"));
    }

    #[test]
    fn second_kind_values() {
        assert_eq!(tcheb_u(&ab("1")), ab("2*1"));
        assert_eq!(tcheb_u(&ab("a")), ab("3*a + b"));
        assert_eq!(tcheb_u(&ab("a + b")), ab("4*a + 4*b"));
        for s in ["1", "a", "b", "ab", "bba", "abab"] {
            assert_eq!(tcheb_u(&ab(s)), tcheb_u_via_t(&ab(s)), "{s}");
        }
    }

    #[test]
    fn omega_equivalence_small() {
        for s in ["c", "d", "cc", "cd", "dc", "ccc"] {
            let v = cd(s);
            let lhs = tcheb_t(&cd_times_a(&v));
            let rhs = star(&cd_to_ab(&omega(&(&ab("a") * &star(&cd_to_ab(&v))))));
            assert_eq!(lhs, rhs, "{s}");
        }
    }

    #[test]
    fn characters() {
        let z = char_zaslavsky();
        assert_eq!(z.eval(&ab("1")), BigInt::from(2));
        assert_eq!(z.eval(&ab("a + b")), BigInt::from(4));
        let r2 = char_r_signed(2);
        for s in ["1", "a", "b", "ab", "ba", "bba", "abab"] {
            assert_eq!(z.eval(&ab(s)), r2.eval(&ab(s)));
        }
        assert_eq!(char_cardinality().eval(&ab("aa + 2*ab + 2*ba + bb")), BigInt::from(8));
    }

    #[test]
    fn chain_map_degenerations() {
        let one = char_const_one();
        let card = char_cardinality();
        for s in ["1", "a", "b", "ab", "bab", "aabb - 2*ba"] {
            let u = ab(s);
            assert_eq!(chain_map_first(&one, &u), u);
            assert_eq!(chain_map_second(&one, &u), u);
            assert_eq!(star(&chain_map_first(&card, &star(&u))), tcheb_t(&u));
            assert_eq!(chain_map_second(&card, &u), tcheb_u(&u));
        }
    }

    #[test]
    fn eta_matches_nu_on_cd() {
        for s in ["c", "cc", "d", "cd", "dc"] {
            let u = cd_to_ab(&cd(s));
            assert_eq!(eta(&u), nu(&u), "{s}");
        }
        assert_eq!(eta(&ab("a + b")), ab("4*a - 4*b"));
    }

    #[test]
    fn tchebyshev_polynomials() {
        let int = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<IntPoly>();
        assert_eq!(tcheb_polynomial_check(1).unwrap().first, int(&[0, 1]));
        assert_eq!(tcheb_polynomial_check(2).unwrap().first, int(&[-1, 0, 2]));
        assert_eq!(tcheb_polynomial_check(3).unwrap().first, int(&[0, -3, 0, 4]));
        for n in 1..=6 {
            let p = tcheb_polynomial_check(n).unwrap();
            assert_eq!(p.first, classical_first_kind(n));
            assert_eq!(p.second, classical_second_kind(n - 1));
        }
    }
}
