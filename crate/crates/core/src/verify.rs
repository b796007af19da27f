//! Named verification suites that re-derive the theorems on small posets
//! and random polynomials, each reporting pass/fail with a witness.
//!
//! Every check is deterministic in the configured seed: check `i` draws from
//! stream `i` of a ChaCha8 generator seeded with it.

use std::fmt::Debug;
use std::time::Instant;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ab_algebra::{
    a, ab_index, b, c, cd_to_ab, coproduct, d, e_pow, is_c2d, kappa, nu, omega, star, to_cd,
};
use crate::error::{Error, Result};
use crate::labelings::{
    append_zero, boolean_el_labeling, dual_diamond_labeling, ladder_el_labeling, prefix_tokens,
    product_labeling, shuffle_sets, signed_closure, strip_final_zero, tcheb_labeling, EdgeLabeling,
    DEFAULT_RANK_CAP,
};
use crate::lincomb::{tensor_pair, TensorKey};
use crate::oracle;
use crate::poset::{
    boolean_algebra, cartesian_product, chain, crosspolytope, diamond_product,
    dual_diamond_product, ladder, random_graded_poset, tchebyshev_poset, Poset,
};
use crate::qsym::{
    bqsym_coproduct, bqsym_product, btensor_apply, f_b_by_intervals, f_b_poset, f_poset, g_bqsym,
    gamma, gtilde_qsym, mix_m, mix_n_star, qsym_coproduct, qsym_one, qsym_product, quasi_shuffle,
    tensor_apply, u_qsym, BMonomial, BQSymElem, BQSymTensor, Composition, QSymElem, QSymTensor,
};
use crate::spectral::{eigenbasis, verify_spectrum};
use crate::transforms::{
    builtin_characters, char_cardinality, char_const_one, char_r_signed, char_zaslavsky,
    chain_map_first, chain_map_second, eta, pi, sigma, sigma_kernel, tcheb_polynomial_check,
    tcheb_t, tcheb_t_by_coproducts, tcheb_t_sigma_recursive, tcheb_u, tcheb_u_via_t,
};
use crate::word::{cd_words_of_degree, words_of_length, Ab, AbPoly, AbWord, CdPoly};

/// Names accepted by [`run`], in execution and report order.
pub const CHECKS: [&str; 13] = [
    "eulerian-preservation",
    "psi-vs-poset",
    "omega-equiv",
    "recursions",
    "cartesian-diamond",
    "el-labeling",
    "jordan-holder",
    "spectrum",
    "qsym-hopf",
    "bqsym-comodule",
    "chain-maps",
    "tcheb-polynomials",
    "zaslavsky-character",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest rank of a poset fed to a poset-level check.
    pub max_rank: usize,
    /// Largest degree of a polynomial fed to a polynomial-level check.
    pub degree: usize,
    pub seed: u64,
    /// Random posets per poset-level check.
    pub random_posets: usize,
    /// Random polynomial samples per polynomial-level identity.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_rank: 5,
            degree: 8,
            seed: 0,
            random_posets: 20,
            samples: 12,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub instance: String,
    pub status: Status,
    /// Present exactly when the status is `fail`.
    pub witness: Option<String>,
    pub ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Runs one named check, or every check for `all`. Checks run concurrently;
/// reports come back in [`CHECKS`] order.
pub fn run(check: &str, cfg: &VerifyConfig) -> Result<Vec<VerifyReport>> {
    if check == "all" {
        let batches = std::thread::scope(|scope| {
            let handles: Vec<_> = CHECKS
                .iter()
                .map(|name| scope.spawn(move || run_one(name, cfg)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("check panicked"))
                .collect::<Vec<_>>()
        });
        return Ok(batches.into_iter().flatten().collect());
    }
    let name = CHECKS
        .iter()
        .find(|&&c| c == check)
        .ok_or_else(|| Error::UnknownCheck(check.to_string()))?;
    Ok(run_one(name, cfg))
}

fn run_one(check: &'static str, cfg: &VerifyConfig) -> Vec<VerifyReport> {
    let stream = CHECKS.iter().position(|&c| c == check).expect("known check") as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    let mut suite = Suite {
        check,
        reports: Vec::new(),
    };
    let s = &mut suite;
    match check {
        "eulerian-preservation" => eulerian_preservation(s, cfg, &mut rng),
        "psi-vs-poset" => psi_vs_poset(s, cfg, &mut rng),
        "omega-equiv" => omega_equiv(s, cfg),
        "recursions" => recursions(s, cfg, &mut rng),
        "cartesian-diamond" => cartesian_diamond(s, cfg, &mut rng),
        "el-labeling" => el_labeling(s, cfg),
        "jordan-holder" => jordan_holder(s, cfg),
        "spectrum" => spectrum(s, cfg, &mut rng),
        "qsym-hopf" => qsym_hopf(s, cfg, &mut rng),
        "bqsym-comodule" => bqsym_comodule(s, cfg, &mut rng),
        "chain-maps" => chain_maps(s, cfg, &mut rng),
        "tcheb-polynomials" => tcheb_polynomials(s, cfg),
        "zaslavsky-character" => zaslavsky_character(s, cfg, &mut rng),
        _ => unreachable!("dispatch covers CHECKS"),
    }
    suite.reports
}

/// `Err` carries the witness.
pub type Outcome = std::result::Result<(), String>;

struct Suite {
    check: &'static str,
    reports: Vec<VerifyReport>,
}

impl Suite {
    fn case(&mut self, instance: impl Into<String>, body: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = body();
        let ms = start.elapsed().as_millis() as u64;
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        self.reports.push(VerifyReport {
            check: self.check.to_string(),
            instance: instance.into(),
            status,
            witness,
            ms,
        });
    }
}

/// Fails with both sides printed when `lhs != rhs`.
pub fn expect_eq<T: PartialEq + Debug>(what: &str, lhs: &T, rhs: &T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: left = {lhs:?}, right = {rhs:?}"))
    }
}

pub fn expect(what: &str, holds: bool) -> Outcome {
    if holds {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("library error: {e}"))
}

/// Built-in families with rank between 1 and `max_rank`.
pub fn family_posets(max_rank: usize) -> Vec<(String, Poset)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push((format!("chain({n})"), chain(n)));
    }
    for n in 1..=max_rank {
        out.push((format!("boolean({n})"), boolean_algebra(n)));
    }
    for n in 0..max_rank {
        out.push((format!("ladder({n})"), ladder(n)));
    }
    for n in 1..max_rank {
        out.push((format!("crosspolytope({n})"), crosspolytope(n)));
    }
    out
}

/// Random posets of rank at most `max_rank` and width at most 3; the
/// instance name records the seed that regenerates each one.
pub fn random_posets(rng: &mut ChaCha8Rng, count: usize, max_rank: usize) -> Vec<(String, Poset)> {
    (0..count)
        .map(|_| {
            let seed: u64 = rng.gen();
            let p = random_graded_poset(max_rank, 3, seed).expect("parameters are positive");
            (format!("random(max_rank={max_rank}, width=3, seed={seed})"), p)
        })
        .collect()
}

/// Homogeneous ab-polynomial of degree `n` with up to `terms` words and
/// coefficients in `-3..=3`.
pub fn random_ab_poly(rng: &mut ChaCha8Rng, n: usize, terms: usize) -> AbPoly {
    let mut out = AbPoly::zero();
    for _ in 0..terms.max(1) {
        let bits = if n == 0 { 0 } else { rng.gen_range(0..1u64 << n) };
        out.add_term(AbWord::from_bits(n, bits), rng.gen_range(-3..=3).into());
    }
    if out.is_zero() {
        out.add_term(AbWord::from_bits(n, 0), 1.into());
    }
    out
}

/// Homogeneous cd-polynomial of degree `n` with nonnegative coefficients.
pub fn random_cd_poly(rng: &mut ChaCha8Rng, n: usize, terms: usize) -> CdPoly {
    let words = cd_words_of_degree(n);
    let mut out = CdPoly::zero();
    for _ in 0..terms.max(1) {
        let w = *words.choose(rng).expect("every degree has a cd-word");
        out.add_term(w, rng.gen_range(1..=3).into());
    }
    out
}

fn random_composition(rng: &mut ChaCha8Rng, weight: u32) -> Composition {
    let mut parts = Vec::new();
    let mut left = weight;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    Composition::new(parts)
}

/// Quasisymmetric function of weight at most `max_weight`, possibly with a
/// constant term.
pub fn random_qsym(rng: &mut ChaCha8Rng, max_weight: u32, terms: usize) -> QSymElem {
    let mut out = QSymElem::zero();
    for _ in 0..terms.max(1) {
        let w = rng.gen_range(0..=max_weight);
        out.add_term(random_composition(rng, w), rng.gen_range(-3..=3).into());
    }
    out
}

pub fn random_bqsym(rng: &mut ChaCha8Rng, max_degree: u32, terms: usize) -> BQSymElem {
    let mut out = BQSymElem::zero();
    for _ in 0..terms.max(1) {
        let deg = rng.gen_range(0..=max_degree);
        let s = rng.gen_range(0..=deg);
        out.add_term(
            BMonomial::new(s, random_composition(rng, deg - s)),
            rng.gen_range(-3..=3).into(),
        );
    }
    out
}

fn eulerian_preservation(s: &mut Suite, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    let mut posets = family_posets(cfg.max_rank.saturating_sub(1));
    posets.extend(random_posets(rng, cfg.random_posets, cfg.max_rank.saturating_sub(1)));
    for (name, p) in posets {
        s.case(&name, || {
            let eulerian = p.is_eulerian();
            expect_eq("is_eulerian vs even/odd count", &eulerian, &oracle::is_eulerian_brute(&p))?;
            if !eulerian {
                return Ok(());
            }
            let t = lib(tchebyshev_poset(&p))?;
            expect("T(P) is Eulerian by Möbius values", t.is_eulerian())?;
            expect("T(P) is Eulerian by even/odd counts", oracle::is_eulerian_brute(&t))
        });
    }
}

fn psi_vs_poset(s: &mut Suite, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    let mut posets = family_posets(cfg.max_rank.saturating_sub(1));
    posets.extend(random_posets(rng, cfg.random_posets, cfg.max_rank.saturating_sub(1)));
    for (name, p) in posets {
        s.case(&name, || {
            let psi = lib(ab_index(&p))?;
            expect_eq("Ψ(P) vs chain sum", &psi, &oracle::psi_brute(&p))?;
            let t = lib(tchebyshev_poset(&p))?;
            let psi_t = lib(ab_index(&t))?;
            expect_eq("Ψ(T(P)) vs chain sum", &psi_t, &oracle::psi_brute(&t))?;
            expect_eq("Ψ(T(P)) vs T(Ψ(P)·a)", &psi_t, &tcheb_t(&(&psi * &a())))?;
            expect_eq("Ψ(P*) vs Ψ(P)*", &lib(ab_index(&p.dual()))?, &star(&psi))
        });
    }
}

/// `T(v·a) = ω(a·v*)*`, `π(v·a) = ω(a·v*·b)*`, and the c-2d shape of
/// `T(v·a)` for a cd-word `v`.
pub fn omega_identities(v: &CdPoly) -> Outcome {
    let u = cd_to_ab(v);
    let ua = &u * &a();
    let t = tcheb_t(&ua);
    let lhs = lib(to_cd(&t))?;
    expect_eq("T(v·a) vs ω(a·v*)*", &lhs, &star(&omega(&(&a() * &star(&u)))))?;
    let pi_lhs = lib(to_cd(&pi(&ua)))?;
    let pi_rhs = star(&omega(&(&(&a() * &star(&u)) * &b())));
    expect_eq("π(v·a) vs ω(a·v*·b)*", &pi_lhs, &pi_rhs)?;
    if v.all_nonnegative() {
        expect("T(v·a) is c-2d", is_c2d(&lhs))?;
        expect("T(v·a) is nonnegative", lhs.all_nonnegative())?;
    }
    Ok(())
}

/// Number of `c`/`2d` monomials in `v` counted with multiplicity: the sum
/// of `coeff / 2^{#d}`. Only meaningful when `v` is c-2d.
pub fn c2d_monomial_count(v: &CdPoly) -> BigInt {
    v.iter().map(|(w, k)| k >> w.count_second()).sum()
}

fn omega_equiv(s: &mut Suite, cfg: &VerifyConfig) {
    for n in 0..=cfg.degree.saturating_sub(2) {
        s.case(format!("cd-words of degree {n}"), || {
            for w in cd_words_of_degree(n) {
                let v = w.poly();
                omega_identities(&v).map_err(|e| format!("v = {v}: {e}"))?;
                let t = lib(to_cd(&tcheb_t(&(&cd_to_ab(&v) * &a()))))?;
                let expected = BigInt::from(1u64 << w.len());
                expect_eq(&format!("c-2d-monomials of T(({v})·a)"), &c2d_monomial_count(&t), &expected)?;
            }
            Ok(())
        });
    }
}

/// The joint ab- and cd-recursions, the (a−b) and c²−2d corollaries, and the
/// functional equation, at one input `u`.
pub fn recursion_identities(u: &AbPoly) -> Outcome {
    let (t, sg) = (tcheb_t(u), sigma(u));
    expect_eq("T by kernel vs by coproducts", &t, &tcheb_t_by_coproducts(u))?;
    expect_eq("σ by coproducts vs by kernel", &sg, &sigma_kernel(u))?;
    expect_eq("(T, σ) vs joint recursion", &(t.clone(), sg.clone()), &tcheb_t_sigma_recursive(u))?;
    let (ab_a, ab_b, e) = (a(), b(), e_pow(1));
    let two = BigInt::from(2);
    expect_eq(
        "T(a·u)",
        &tcheb_t(&(&ab_a * u)),
        &(&(&ab_a + &ab_b) * &t + &e * &sg),
    )?;
    expect_eq("T(b·u)", &tcheb_t(&(&ab_b * u)), &((&ab_b * &t).scale(&two) + &e * &sg))?;
    expect_eq("σ(a·u)", &sigma(&(&ab_a * u)), &(&ab_b * &t + &e * &sg))?;
    expect_eq("σ(b·u)", &sigma(&(&ab_b * u)), &(&ab_b * &t))?;

    let (cc, dd) = (cd_to_ab(&c()), cd_to_ab(&d()));
    let two_d = dd.scale(&two);
    let p = pi(u);
    expect_eq("T(c·u)", &tcheb_t(&(&cc * u)), &(&cc * &t + &p))?;
    expect_eq("T(d·u)", &tcheb_t(&(&dd * u)), &(&two_d * &t + &cc * &p))?;
    expect_eq("π(c·u)", &pi(&(&cc * u)), &(&two_d * &t + &cc * &p))?;
    expect_eq("π(d·u)", &pi(&(&dd * u)), &(&(&cc * &two_d) * &t + &two_d * &p))?;

    expect_eq("T((a−b)·u)", &tcheb_t(&(&e * u)), &(&e * &t))?;
    let c2_2d = &(&cc * &cc) - &two_d;
    expect_eq("T((c²−2d)·u)", &tcheb_t(&(&c2_2d * u)), &(&c2_2d * &t))?;
    let rhs = (&cc * &tcheb_t(&(&cc * u))).scale(&two) + &(&two_d - &(&cc * &cc)) * &t;
    expect_eq("T(c²·u)", &tcheb_t(&(&(&cc * &cc) * u)), &rhs)?;

    let mut functional = kappa(u);
    for (TensorKey(parts), k) in &coproduct(u) {
        let (u1, u2) = (parts[0].poly(), parts[1].poly());
        functional.add_scaled(&(&(&nu(&u1) * &ab_b) * &tcheb_t(&u2)), k);
    }
    expect_eq("T(u) vs κ(u) + Σ ν(u₁)·b·T(u₂)", &t, &functional)?;

    let uu = tcheb_u(u);
    expect_eq("U(u) vs H*(T(u·a))", &uu, &tcheb_u_via_t(u))?;
    expect_eq("U(u*) vs U(u)*", &tcheb_u(&star(u)), &star(&uu))?;
    let mut lifted = crate::lincomb::Tensor::<AbWord>::zero();
    for (TensorKey(parts), k) in &coproduct(u) {
        let pair = crate::lincomb::tensor2(&tcheb_u(&parts[0].poly()), &tcheb_u(&parts[1].poly()));
        lifted.add_scaled(&pair, k);
    }
    expect_eq("Δ(U(u)) vs Σ U(u₁) ⊗ U(u₂)", &coproduct(&uu), &lifted)
}

fn recursions(s: &mut Suite, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    // Each identity raises the degree by at most two.
    let top = cfg.degree.saturating_sub(2);
    for n in 0..=top {
        let inputs: Vec<AbPoly> = (0..cfg.samples).map(|_| random_ab_poly(rng, n, 3)).collect();
        s.case(format!("{} random ab-polynomials of degree {n}", cfg.samples), || {
            for u in &inputs {
                recursion_identities(u).map_err(|e| format!("u = {u}: {e}"))?;
            }
            Ok(())
        });
    }
}

/// Family pairs whose ranks sum to at most `max_total`.
pub fn family_pairs(max_total: usize) -> Vec<(String, Poset, String, Poset)> {
    let fam = family_posets(max_total.saturating_sub(1));
    let mut out = Vec::new();
    for (n1, p) in &fam {
        for (n2, q) in &fam {
            if p.rank() + q.rank() <= max_total {
                out.push((n1.clone(), p.clone(), n2.clone(), q.clone()));
            }
        }
    }
    out
}

fn cartesian_diamond(s: &mut Suite, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    for (n1, p, n2, q) in family_pairs(cfg.max_rank) {
        s.case(format!("{n1} × {n2}"), || {
            let lhs = lib(ab_index(&lib(tchebyshev_poset(&cartesian_product(&p, &q)))?))?;
            let tp = lib(tchebyshev_poset(&p))?;
            let tq = lib(tchebyshev_poset(&q))?;
            let rhs = lib(ab_index(&lib(dual_diamond_product(&tp, &tq))?))?;
            expect_eq("Ψ(T(P×Q)) vs Ψ(T(P) ⋄* T(Q))", &lhs, &rhs)
        });
    }
    let top = cfg.degree.saturating_sub(4).min(4);
    for n in 0..=top {
        for m in 0..=top - n {
            let (u, v) = (random_ab_poly(rng, n, 3), random_ab_poly(rng, m, 3));
            s.case(format!("T(M(u,v)·a), deg u = {n}, deg v = {m}"), || {
                let lhs = tcheb_t(&(&mix_m(&u, &v) * &a()));
                let rhs = mix_n_star(&tcheb_t(&(&u * &a())), &tcheb_t(&(&v * &a())));
                expect_eq(&format!("u = {u}, v = {v}"), &lhs, &rhs)
            });
        }
    }
    s.case("T(B3) is not a lattice", || t_b3_structure().map(|_| ()));
}

/// Facts about `T(B₃)`: a pair of elements with two common upper covers
/// below the top, agreement of Ψ with `T(B₂) ⋄* T(B₁)`, and the element
/// counts `(6, 12, 8)` at ranks 1 to 3. Returns the non-lattice pair.
pub fn t_b3_structure() -> std::result::Result<(String, String, Vec<String>), String> {
    let t = lib(tchebyshev_poset(&boolean_algebra(3)))?;
    let (x, y, ups) = t.two_common_upper_covers().ok_or("no pair with two common upper covers")?;
    let witness = (
        t.name(x).to_string(),
        t.name(y).to_string(),
        ups.iter().map(|&z| t.name(z).to_string()).collect(),
    );
    let rhs = lib(dual_diamond_product(
        &lib(tchebyshev_poset(&boolean_algebra(2)))?,
        &lib(tchebyshev_poset(&boolean_algebra(1)))?,
    ))?;
    expect_eq("Ψ(T(B₃)) vs Ψ(T(B₂) ⋄* T(B₁))", &lib(ab_index(&t))?, &lib(ab_index(&rhs))?)?;
    let counts: Vec<usize> = (1..=3).map(|r| t.elements_of_rank(r).len()).collect();
    expect_eq("cells of T(B₃) by dimension", &counts, &vec![6, 12, 8])?;
    Ok(witness)
}

fn describe_violation(l: &EdgeLabeling, cap: usize) -> std::result::Result<Option<String>, String> {
    let violations = lib(l.violations_with_cap(cap))?;
    let Some(v) = violations.first() else {
        return Ok(None);
    };
    let p = l.poset();
    let strings: Vec<Vec<String>> = lib(l.jordan_holder(v.lower, v.upper))?
        .iter()
        .map(|s| l.tokens(s))
        .collect();
    Ok(Some(format!(
        "{} failing intervals; first [{}, {}] has {} rising chains, label strings {:?}",
        violations.len(),
        p.name(v.lower),
        p.name(v.upper),
        v.rising_chains,
        strings
    )))
}

/// The labelings whose Tchebyshev transforms the EL check examines.
pub fn el_inputs(max_n: usize) -> Vec<(String, EdgeLabeling)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((format!("boolean({n})"), boolean_el_labeling(n)));
    }
    for n in 0..=max_n {
        out.push((format!("ladder({n})"), ladder_el_labeling(n)));
    }
    out
}

/// EL-shellability of the signed labeling of `T(P)` and the Jordan–Hölder
/// description `JH(T(P)) = JH(P)^{sb} ∘ 0`.
pub fn el_case(l: &EdgeLabeling) -> Outcome {
    if let Some(w) = describe_violation(l, DEFAULT_RANK_CAP)? {
        return Err(format!("input labeling is not EL: {w}"));
    }
    let t = lib(tcheb_labeling(l))?;
    let jh = expect_eq(
        "JH(T(P)) vs JH(P)^{sb}∘0",
        &t.jordan_holder_tokens(),
        &signed_closure(&l.jordan_holder_tokens()),
    );
    match describe_violation(&t, DEFAULT_RANK_CAP)? {
        Some(w) => Err(format!("signed labeling of T(P) is not EL: {w}")),
        None => jh,
    }
}

fn el_labeling(s: &mut Suite, cfg: &VerifyConfig) {
    let max_n = cfg.max_rank.saturating_sub(1).min(DEFAULT_RANK_CAP - 2);
    for (name, l) in el_inputs(max_n) {
        s.case(format!("T({name})"), || el_case(&l));
    }
}

/// Björner–Stanley sum, Cartesian and dual-diamond labeling lemmas, and the
/// replay of `Ψ(T(P₁×P₂)) = Ψ(T(P₁) ⋄* T(P₂))` through label strings.
pub fn jordan_holder_case(l1: &EdgeLabeling, l2: &EdgeLabeling) -> Outcome {
    for l in [l1, l2] {
        expect_eq("Σ u_λ vs Ψ(P)", &l.descent_sum(), &lib(ab_index(l.poset()))?)?;
    }
    let prod = lib(product_labeling(l1, l2))?;
    expect("product labeling is an R-labeling", lib(prod.is_r_labeling())?)?;
    let shuffled = shuffle_sets(
        &prefix_tokens(&l1.jordan_holder_tokens(), true),
        &prefix_tokens(&l2.jordan_holder_tokens(), false),
    );
    expect_eq("JH(P₁×P₂) vs JH(P₁) ⋆ JH(P₂)", &prod.jordan_holder_tokens(), &shuffled)?;
    expect_eq("Σ u_λ vs Ψ(P₁×P₂)", &prod.descent_sum(), &lib(ab_index(prod.poset()))?)?;

    let (t1, t2) = (lib(tcheb_labeling(l1))?, lib(tcheb_labeling(l2))?);
    let dd = lib(dual_diamond_labeling(&t1, &t2))?;
    let expected = append_zero(&shuffle_sets(
        &prefix_tokens(&strip_final_zero(&t1.jordan_holder_tokens()), true),
        &prefix_tokens(&strip_final_zero(&t2.jordan_holder_tokens()), false),
    ));
    expect_eq("JH(P₁ ⋄* P₂) vs (JH₀(P₁) ⋆ JH₀(P₂))∘0", &dd.jordan_holder_tokens(), &expected)?;

    let t_prod = lib(tcheb_labeling(&prod))?;
    expect_eq(
        "JH(T(P₁×P₂)) vs JH(T(P₁) ⋄* T(P₂))",
        &t_prod.jordan_holder_tokens(),
        &dd.jordan_holder_tokens(),
    )?;
    let via_strings = t_prod.descent_sum();
    expect_eq("Σ u_λ over JH(T(P₁×P₂)) vs Ψ(T(P₁×P₂))", &via_strings, &lib(ab_index(t_prod.poset()))?)?;
    expect_eq("Σ u_λ over JH(T(P₁) ⋄* T(P₂)) vs Ψ", &dd.descent_sum(), &lib(ab_index(dd.poset()))?)?;
    expect_eq("Σ u_λ on both sides", &via_strings, &dd.descent_sum())
}

fn jordan_holder(s: &mut Suite, cfg: &VerifyConfig) {
    let bound = cfg.max_rank.saturating_sub(1).max(2);
    let mut inputs = Vec::new();
    for n in 1..bound {
        inputs.push((format!("boolean({n})"), boolean_el_labeling(n)));
    }
    for n in 0..bound - 1 {
        inputs.push((format!("ladder({n})"), ladder_el_labeling(n)));
    }
    for (n1, l1) in &inputs {
        for (n2, l2) in &inputs {
            if l1.poset().rank() + l2.poset().rank() <= bound {
                s.case(format!("{n1} × {n2}"), || jordan_holder_case(l1, l2));
            }
        }
    }
}

fn spectrum(s: &mut Suite, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    for n in 0..=cfg.max_rank {
        s.case(format!("U on degree {n}"), || {
            let r = verify_spectrum(n);
            expect(&format!("{r:?}"), r.passed())
        });
    }
    let top = cfg.max_rank.saturating_sub(1).min(3);
    let pool: Vec<_> = (0..=top).flat_map(eigenbasis).collect();
    let pairs: Vec<_> = (0..cfg.samples)
        .map(|_| (pool.choose(rng).unwrap().clone(), pool.choose(rng).unwrap().clone()))
        .collect();
    s.case(format!("{} random eigenvector pairs", pairs.len()), || {
        for (x, y) in &pairs {
            let mixed = mix_m(&x.vector, &y.vector);
            let lambda = BigInt::from(x.eigenvalue * y.eigenvalue);
            expect_eq("U(M(u₁,u₂)) vs λ₁λ₂·M(u₁,u₂)", &tcheb_u(&mixed), &mixed.scale(&lambda))?;
            let shifted = &e_pow(1) * &x.vector;
            let lambda = BigInt::from(x.eigenvalue);
            expect_eq("U((a−b)·u) vs λ·(a−b)·u", &tcheb_u(&shifted), &shifted.scale(&lambda))?;
        }
        Ok(())
    });
}

fn compositions_up_to(weight: u32) -> Vec<Composition> {
    (0..=weight as usize)
        .flat_map(|w| words_of_length::<Ab>(w.saturating_sub(1)).map(move |word| (w, word)))
        .map(|(w, word)| {
            if w == 0 {
                return Composition::empty();
            }
            // b at position i cuts the weight between i and i + 1.
            let mut parts = Vec::new();
            let mut run = 1;
            for bit in word.letters() {
                if bit {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition::new(parts)
        })
        .collect()
}

/// Hopf-endomorphism laws for `U` and `g̃` at one pair of inputs.
pub fn qsym_hopf_identities(f: &QSymElem, h: &QSymElem) -> Outcome {
    let fh = qsym_product(f, h);
    expect_eq("f·h vs truncation oracle", &fh, &oracle::qsym_product_brute(f, h))?;
    expect_eq("U(f·h)", &u_qsym(&fh), &qsym_product(&u_qsym(f), &u_qsym(h)))?;
    expect_eq(
        "Δ(U(f))",
        &qsym_coproduct(&u_qsym(f)),
        &tensor_apply(&qsym_coproduct(f), u_qsym, u_qsym),
    )?;
    for g in builtin_characters() {
        let gt = |x: &QSymElem| gtilde_qsym(&g, x);
        expect_eq(&format!("g̃(f·h), {}", g.name()), &gt(&fh), &qsym_product(&gt(f), &gt(h)))?;
        expect_eq(
            &format!("Δ(g̃(f)), {}", g.name()),
            &qsym_coproduct(&gt(f)),
            &tensor_apply(&qsym_coproduct(f), gt, gt),
        )?;
    }
    Ok(())
}

fn qsym_hopf(s: &mut Suite, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    let max_weight = (cfg.degree as u32).saturating_sub(1).min(7);
    s.case(format!("quasi-shuffles of total weight ≤ {max_weight}"), || {
        let comps = compositions_up_to(max_weight);
        for x in &comps {
            for y in comps.iter().filter(|y| x.weight() + y.weight() <= max_weight) {
                let (fx, fy) = (QSymElem::basis(x.clone()), QSymElem::basis(y.clone()));
                expect_eq(
                    &format!("M{x} · M{y}"),
                    &quasi_shuffle(x, y),
                    &oracle::qsym_product_brute(&fx, &fy),
                )?;
            }
        }
        Ok(())
    });
    for (n1, p, n2, q) in family_pairs(cfg.max_rank + 1) {
        s.case(format!("F({n1} × {n2})"), || {
            let fp = f_poset(&p);
            expect_eq("F(P) vs chain sum", &fp, &oracle::f_brute(&p))?;
            expect_eq("F(P×Q) vs F(P)·F(Q)", &f_poset(&cartesian_product(&p, &q)), &qsym_product(&fp, &f_poset(&q)))
        });
    }
    let top = (cfg.degree as u32).saturating_sub(3).min(5);
    let inputs: Vec<_> = (0..cfg.samples)
        .map(|_| (random_qsym(rng, top, 3), random_qsym(rng, top, 3)))
        .collect();
    s.case(format!("{} random pairs of weight ≤ {top}", inputs.len()), || {
        for (f, h) in &inputs {
            qsym_hopf_identities(f, h).map_err(|e| format!("f = {f}, h = {h}: {e}"))?;
            let u = crate::qsym::gamma_inv(&f.filter(|c| !c.is_empty())).unwrap_or_default();
            let mut expected = QSymTensor::zero();
            let gu = gamma(&u);
            expected += &tensor_pair(&gu, &qsym_one());
            expected += &tensor_pair(&qsym_one(), &gu);
            for (TensorKey(parts), k) in &coproduct(&u) {
                let pair = tensor_pair(&gamma(&parts[0].poly()), &gamma(&parts[1].poly()));
                expected.add_scaled(&pair, k);
            }
            expect_eq("Δ(γ(v)) vs γ(v)⊗1 + 1⊗γ(v) + Σ γ(v₁)⊗γ(v₂)", &qsym_coproduct(&gu), &expected)?;
        }
        Ok(())
    });
}

/// `Δ(F_B(P)) = Σ_{0̂ < x ≤ 1̂} F_B([0̂, x]) ⊗ F([x, 1̂])`.
pub fn bqsym_interval_coproduct(p: &Poset) -> std::result::Result<BQSymTensor, String> {
    let mut out = BQSymTensor::zero();
    for x in (0..p.len()).filter(|&x| x != p.bottom()) {
        let lower = lib(f_b_poset(&lib(p.interval(p.bottom(), x))?))?;
        let upper = f_poset(&lib(p.interval(x, p.top()))?);
        out += &tensor_pair(&lower, &upper);
    }
    Ok(out)
}

fn bqsym_comodule(s: &mut Suite, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    let chars = builtin_characters();
    for (name, p) in family_posets(cfg.max_rank.saturating_sub(1)) {
        s.case(&name, || {
            let fb = lib(f_b_poset(&p))?;
            expect_eq("F_B(P) vs Σ s^{ρ(x)−1}·F([x,1̂])", &fb, &lib(f_b_by_intervals(&p))?)?;
            expect_eq("Δ(F_B(P)) vs interval sum", &bqsym_coproduct(&fb), &bqsym_interval_coproduct(&p)?)?;
            for g in &chars {
                let gfb = g_bqsym(g, &fb);
                expect_eq(&format!("g(F_B(P)) vs chain sum, {}", g.name()), &gfb, &oracle::g_fb_brute(g, &p))?;
                expect_eq(
                    &format!("Δ∘g vs (g⊗g̃)∘Δ, {}", g.name()),
                    &bqsym_coproduct(&gfb),
                    &btensor_apply(&bqsym_coproduct(&fb), |x| g_bqsym(g, x), |x| gtilde_qsym(g, x)),
                )?;
            }
            Ok(())
        });
    }
    for (n1, p, n2, q) in family_pairs(cfg.max_rank) {
        s.case(format!("F_B({n1} ⋄ {n2})"), || {
            let lhs = lib(f_b_poset(&lib(diamond_product(&p, &q))?))?;
            let rhs = bqsym_product(&lib(f_b_poset(&p))?, &lib(f_b_poset(&q))?);
            expect_eq("F_B(P⋄Q) vs F_B(P)·F_B(Q)", &lhs, &rhs)
        });
    }
    let top = (cfg.degree as u32).saturating_sub(3).min(5);
    let inputs: Vec<_> = (0..cfg.samples)
        .map(|_| (random_bqsym(rng, top, 3), random_bqsym(rng, top, 3)))
        .collect();
    s.case(format!("{} random pairs of degree ≤ {top}", inputs.len()), || {
        for (f, h) in &inputs {
            for g in &chars {
                let gm = |x: &BQSymElem| g_bqsym(g, x);
                expect_eq(
                    &format!("g(f·h), {}, f = {f}, h = {h}", g.name()),
                    &gm(&bqsym_product(f, h)),
                    &bqsym_product(&gm(f), &gm(h)),
                )?;
                expect_eq(
                    &format!("Δ∘g vs (g⊗g̃)∘Δ, {}, f = {f}", g.name()),
                    &bqsym_coproduct(&gm(f)),
                    &btensor_apply(&bqsym_coproduct(f), gm, |x| gtilde_qsym(g, x)),
                )?;
            }
        }
        Ok(())
    });
}

/// `g = g̃ = id` for the constant-one character; `g(u*)* = T(u)` and
/// `g̃ = U` for the cardinality character.
pub fn degeneration_identities(u: &AbPoly) -> Outcome {
    let one = char_const_one();
    expect_eq("g(u) = u, const-one", &chain_map_first(&one, u), u)?;
    expect_eq("g̃(u) = u, const-one", &chain_map_second(&one, u), u)?;
    let card = char_cardinality();
    expect_eq("g(u*)* = T(u), cardinality", &star(&chain_map_first(&card, &star(u))), &tcheb_t(u))?;
    expect_eq("g̃(u) = U(u), cardinality", &chain_map_second(&card, u), &tcheb_u(u))
}

fn chain_maps(s: &mut Suite, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    for n in 0..=cfg.degree.saturating_sub(2) {
        let inputs: Vec<AbPoly> = (0..cfg.samples).map(|_| random_ab_poly(rng, n, 3)).collect();
        s.case(format!("degenerations on degree {n}"), || {
            for u in &inputs {
                degeneration_identities(u).map_err(|e| format!("u = {u}: {e}"))?;
            }
            Ok(())
        });
    }
    let chars = builtin_characters();
    let mut posets = family_posets(cfg.max_rank.saturating_sub(1));
    posets.extend(random_posets(rng, cfg.random_posets, cfg.max_rank.saturating_sub(1)));
    for (name, p) in posets {
        s.case(&name, || {
            let fp = f_poset(&p);
            for g in &chars {
                expect_eq(
                    &format!("g̃(F(P)) vs chain sum, {}", g.name()),
                    &gtilde_qsym(g, &fp),
                    &oracle::gtilde_f_brute(g, &p),
                )?;
            }
            let psi = lib(ab_index(&p))?;
            let z = oracle::zaslavsky_brute(&p);
            expect_eq("η(Ψ(P))", &eta(&psi), &e_pow(p.rank() - 1).scale(&z))
        });
    }
}

fn tcheb_polynomials(s: &mut Suite, cfg: &VerifyConfig) {
    for n in 1..=cfg.degree.max(1) {
        s.case(format!("n = {n}"), || {
            let r = lib(tcheb_polynomial_check(n))?;
            expect_eq("T_n", &r.first, &crate::transforms::classical_first_kind(n))?;
            expect_eq("U_{n−1}", &r.second, &crate::transforms::classical_second_kind(n - 1))
        });
    }
}

/// The closed-form Zaslavsky and r-signed characters against Möbius sums.
pub fn zaslavsky_case(p: &Poset) -> Outcome {
    let psi = lib(ab_index(p))?;
    expect_eq("Z(Ψ(P)) vs Σ (−1)^ρ μ", &char_zaslavsky().eval(&psi), &oracle::zaslavsky_brute(p))?;
    for r in [0, 3, 5] {
        expect_eq(
            &format!("G_{r}(Ψ(P)) vs Σ (1−r)^ρ μ"),
            &char_r_signed(r).eval(&psi),
            &oracle::signed_mobius_brute(p, 1 - r),
        )?;
    }
    Ok(())
}

fn zaslavsky_character(s: &mut Suite, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) {
    let mut posets = family_posets(cfg.max_rank.saturating_sub(1));
    posets.extend(random_posets(rng, cfg.random_posets, cfg.max_rank.saturating_sub(1)));
    for (name, p) in posets {
        s.case(&name, || zaslavsky_case(&p));
    }
}

/// Whether a report stream contains a failure.
pub fn any_failed(reports: &[VerifyReport]) -> bool {
    reports.iter().any(|r| !r.passed())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_check() {
        assert_eq!(
            run("nope", &VerifyConfig::default()),
            Err(Error::UnknownCheck("nope".into()))
        );
    }

    #[test]
    fn compositions_enumerate() {
        assert_eq!(compositions_up_to(3).len(), 1 + 1 + 2 + 4);
    }

    #[test]
    fn small_config_is_deterministic() {
        let cfg = VerifyConfig {
            max_rank: 3,
            degree: 4,
            seed: 7,
            random_posets: 3,
            samples: 2,
        };
        let strip = |rs: Vec<VerifyReport>| -> Vec<(String, Status)> {
            rs.into_iter().map(|r| (r.instance, r.status)).collect()
        };
        let first = strip(run("zaslavsky-character", &cfg).unwrap());
        assert_eq!(first, strip(run("zaslavsky-character", &cfg).unwrap()));
        assert!(first.iter().all(|(_, st)| *st == Status::Pass));
    }
}
