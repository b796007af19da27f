//! Acceptance criteria 1 to 11. Each prints one `[PASS]` or `[FAIL]` line.
//!
//! All comparisons are exact. Criterion 8 cannot be met: the signed labeling
//! of `T(P)` is not an R-labeling once `P` has a non-chain interval, so that
//! criterion is run as stated and its failure is pinned below.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tchebyshev::ab_algebra::{a, ab_index, cd_to_ab, to_cd};
use tchebyshev::labelings::{boolean_el_labeling, ladder_el_labeling};
use tchebyshev::oracle;
use tchebyshev::poset::{
    boolean_algebra, cartesian_product, chain, crosspolytope, dual_diamond_product, ladder,
    random_graded_poset, tchebyshev_poset, Poset,
};
use tchebyshev::qsym::{mix_m, mix_n_star};
use tchebyshev::spectral::verify_spectrum;
use tchebyshev::transforms::{char_zaslavsky, tcheb_polynomial_check, tcheb_t, IntPoly};
use tchebyshev::verify::{
    c2d_monomial_count, degeneration_identities, el_case, family_pairs, omega_identities,
    qsym_hopf_identities, random_ab_poly, random_bqsym, random_qsym, t_b3_structure,
};
use tchebyshev::word::cd_words_of_degree;
use tchebyshev::Error;

/// Runtime budgets for criteria 1 and 6.
const AC1_BUDGET: Duration = Duration::from_secs(30);
const AC6_BUDGET: Duration = Duration::from_secs(60);
/// Fixed seed for every random input below.
const SEED: u64 = 20_240_601;
/// Criteria that are implemented as stated and fail.
const KNOWN_FAILURES: &[usize] = &[8];

type Outcome = Result<String, String>;

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, lhs: &T, rhs: &T) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs:?} != {rhs:?}"))
    }
}

fn lib<T>(r: tchebyshev::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn named(family: &str, range: std::ops::RangeInclusive<usize>, f: fn(usize) -> Poset) -> Vec<(String, Poset)> {
    range.map(|n| (format!("{family}({n})"), f(n))).collect()
}

fn random_family(count: usize, max_rank: usize, stream: u64) -> Vec<(String, Poset)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    rng.set_stream(stream);
    (0..count)
        .map(|_| {
            let seed: u64 = rng.gen();
            let p = random_graded_poset(max_rank, 3, seed).expect("valid parameters");
            (format!("random(seed={seed})"), p)
        })
        .collect()
}

fn ac1_poset_polynomial_agreement() -> Outcome {
    let start = Instant::now();
    // Ψ and T both need rank at least one, so B₀ must be refused on both sides.
    eq("Ψ(B₀)", &ab_index(&boolean_algebra(0)).err(), &Some(Error::RankZeroInput))?;
    eq("T(B₀)", &tchebyshev_poset(&boolean_algebra(0)).err(), &Some(Error::RankZeroInput))?;
    let mut posets = named("boolean", 1..=4, boolean_algebra);
    posets.extend(named("ladder", 0..=4, ladder));
    posets.extend(named("crosspolytope", 1..=3, crosspolytope));
    posets.extend(named("chain", 1..=4, chain));
    posets.extend(random_family(50, 4, 1));
    for (name, p) in &posets {
        let t = lib(tchebyshev_poset(p))?;
        let psi_t = lib(ab_index(&t))?;
        eq(&format!("{name}: Ψ(T(P)) vs chain sum"), &psi_t, &oracle::psi_brute(&t))?;
        let rhs = tcheb_t(&(&lib(ab_index(p))? * &a()));
        eq(&format!("{name}: Ψ(T(P)) vs T(Ψ(P)·a)"), &psi_t, &rhs)?;
    }
    let elapsed = start.elapsed();
    if elapsed > AC1_BUDGET {
        return Err(format!("took {elapsed:?}, budget {AC1_BUDGET:?}"));
    }
    Ok(format!("{} posets plus B₀ refused, {elapsed:.2?}", posets.len()))
}

fn ac2_eulerian_preservation() -> Outcome {
    let mut posets = named("boolean", 1..=4, boolean_algebra);
    posets.extend(named("ladder", 0..=3, ladder));
    posets.extend(named("crosspolytope", 1..=3, crosspolytope));
    posets.push(("chain(1)".into(), chain(1)));
    for (name, p) in &posets {
        eq(&format!("{name} is Eulerian"), &(p.is_eulerian(), oracle::is_eulerian_brute(p)), &(true, true))?;
        let t = lib(tchebyshev_poset(p))?;
        eq(&format!("T({name}) is Eulerian"), &(t.is_eulerian(), oracle::is_eulerian_brute(&t)), &(true, true))?;
    }
    Ok(format!("{} Eulerian posets", posets.len()))
}

fn ac3_omega_equivalence() -> Outcome {
    let mut count = 0;
    for n in 0..=6 {
        for w in cd_words_of_degree(n) {
            let v = w.poly();
            omega_identities(&v).map_err(|e| format!("v = {v}: {e}"))?;
            let t = lib(to_cd(&tcheb_t(&(&cd_to_ab(&v) * &a()))))?;
            eq(
                &format!("c-2d-monomials of T(({v})·a)"),
                &c2d_monomial_count(&t),
                &BigInt::from(1u64 << w.len()),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} cd-words of degree ≤ 6"))
}

fn ac4_crosspolytope() -> Outcome {
    for n in 1..=3 {
        let lhs = lib(to_cd(&lib(ab_index(&lib(tchebyshev_poset(&boolean_algebra(n)))?))?))?;
        let rhs = lib(to_cd(&lib(ab_index(&crosspolytope(n)))?))?;
        eq(&format!("cd(T(B{n})) vs cd(C{n})"), &lhs, &rhs)?;
    }
    Ok("n = 1, 2, 3".into())
}

fn poly_mul_x(p: &IntPoly) -> IntPoly {
    let mut out = vec![BigInt::from(0)];
    out.extend(p.iter().cloned());
    out
}

fn poly_sub(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let len = p.len().max(q.len());
    let mut out: IntPoly = (0..len)
        .map(|i| p.get(i).cloned().unwrap_or_default() - q.get(i).cloned().unwrap_or_default())
        .collect();
    while out.len() > 1 && out.last() == Some(&BigInt::from(0)) {
        out.pop();
    }
    out
}

/// `P_{k+1} = 2x·P_k − P_{k−1}` from the given seeds.
fn three_term(p0: IntPoly, p1: IntPoly, n: usize) -> IntPoly {
    let (mut prev, mut cur) = (p0, p1);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let two_x: IntPoly = poly_mul_x(&cur).iter().map(|c| c * 2).collect();
        let next = poly_sub(&two_x, &prev);
        prev = cur;
        cur = next;
    }
    cur
}

fn ac5_tchebyshev_polynomials() -> Outcome {
    let int = |v: &[i64]| -> IntPoly { v.iter().map(|&c| BigInt::from(c)).collect() };
    for n in 1..=8 {
        let r = lib(tcheb_polynomial_check(n))?;
        eq(&format!("T_{n}"), &r.first, &three_term(int(&[1]), int(&[0, 1]), n))?;
        eq(&format!("U_{}", n - 1), &r.second, &three_term(int(&[1]), int(&[0, 2]), n - 1))?;
    }
    Ok("n ≤ 8".into())
}

fn ac6_spectrum() -> Outcome {
    let mut at_eight = Duration::ZERO;
    for n in 0..=8 {
        let start = Instant::now();
        let r = verify_spectrum(n);
        let elapsed = start.elapsed();
        if !r.passed() {
            return Err(format!("degree {n}: {r:?}"));
        }
        let expected: std::collections::BTreeMap<u64, usize> =
            (0..=n).map(|i| (1u64 << (i + 1), binom(n, i))).collect();
        eq(&format!("multiplicities at {n}"), &r.multiplicities, &expected)?;
        eq(&format!("trace at {n}"), &r.trace, &(2 * 3u64.pow(n as u32)).to_string())?;
        eq(&format!("rank at {n}"), &r.rank, &(1usize << n))?;
        at_eight = elapsed;
    }
    if at_eight > AC6_BUDGET {
        return Err(format!("n = 8 took {at_eight:?}, budget {AC6_BUDGET:?}"));
    }
    Ok(format!("n ≤ 8, n = 8 in {at_eight:.2?}"))
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn ac7_cartesian_dual_diamond() -> Outcome {
    let pairs = family_pairs(5);
    for (n1, p, n2, q) in &pairs {
        let lhs = lib(ab_index(&lib(tchebyshev_poset(&cartesian_product(p, q)))?))?;
        let rhs = lib(ab_index(&lib(dual_diamond_product(
            &lib(tchebyshev_poset(p))?,
            &lib(tchebyshev_poset(q))?,
        ))?))?;
        eq(&format!("Ψ(T({n1} × {n2})) vs Ψ(T({n1}) ⋄* T({n2}))"), &lhs, &rhs)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    rng.set_stream(7);
    let mut samples = 0;
    for n in 0..=4 {
        for m in 0..=4 {
            for _ in 0..2 {
                let (u, v) = (random_ab_poly(&mut rng, n, 3), random_ab_poly(&mut rng, m, 3));
                let lhs = tcheb_t(&(&mix_m(&u, &v) * &a()));
                let rhs = mix_n_star(&tcheb_t(&(&u * &a())), &tcheb_t(&(&v * &a())));
                eq(&format!("T(M(u,v)·a) vs N*(T(u·a), T(v·a)), u = {u}, v = {v}"), &lhs, &rhs)?;
                samples += 1;
            }
        }
    }
    let (x, y, ups) = t_b3_structure()?;
    Ok(format!(
        "{} family pairs, {samples} polynomial pairs; T(B3): {x} and {y} share upper covers {ups:?}, cells (6, 12, 8)",
        pairs.len()
    ))
}

fn ac8_el_shellability() -> Outcome {
    let mut failures = Vec::new();
    let inputs = (1..=4)
        .map(|n| (format!("B{n}"), boolean_el_labeling(n)))
        .chain((0..=4).map(|n| (format!("ladder({n})"), ladder_el_labeling(n))));
    let mut total = 0;
    for (name, l) in inputs {
        total += 1;
        if let Err(w) = el_case(&l) {
            failures.push(format!("T({name}): {w}"));
        }
    }
    if failures.is_empty() {
        Ok(format!("{total} labelings"))
    } else {
        Err(format!("{} of {total} fail; {}", failures.len(), failures[0]))
    }
}

fn ac9_hopf_endomorphisms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    rng.set_stream(9);
    let chars = tchebyshev::transforms::builtin_characters();
    for _ in 0..20 {
        let (f, h) = (random_qsym(&mut rng, 5, 3), random_qsym(&mut rng, 5, 3));
        qsym_hopf_identities(&f, &h).map_err(|e| format!("f = {f}, h = {h}: {e}"))?;
    }
    use tchebyshev::qsym::{bqsym_coproduct, bqsym_product, btensor_apply, g_bqsym, gtilde_qsym};
    for _ in 0..20 {
        let (f, h) = (random_bqsym(&mut rng, 5, 3), random_bqsym(&mut rng, 5, 3));
        for g in &chars {
            let gm = |x: &tchebyshev::qsym::BQSymElem| g_bqsym(g, x);
            eq(
                &format!("g(f·h), {}, f = {f}, h = {h}", g.name()),
                &gm(&bqsym_product(&f, &h)),
                &bqsym_product(&gm(&f), &gm(&h)),
            )?;
            eq(
                &format!("Δ∘g vs (g⊗g̃)∘Δ, {}, f = {f}", g.name()),
                &bqsym_coproduct(&gm(&f)),
                &btensor_apply(&bqsym_coproduct(&f), gm, |x| gtilde_qsym(g, x)),
            )?;
        }
    }
    Ok("20 QSym and 20 BQSym pairs, 4 characters".into())
}

fn ac10_zaslavsky_oracle() -> Outcome {
    let mut posets = named("boolean", 1..=4, boolean_algebra);
    posets.extend(named("ladder", 0..=3, ladder));
    posets.extend(named("crosspolytope", 1..=3, crosspolytope));
    posets.extend(named("chain", 1..=4, chain));
    posets.extend(random_family(100, 4, 10));
    let z = char_zaslavsky();
    for (name, p) in &posets {
        let closed = z.eval(&lib(ab_index(p))?);
        eq(&format!("{name}: Z(Ψ(P)) vs Σ (−1)^ρ μ"), &closed, &oracle::zaslavsky_brute(p))?;
    }
    Ok(format!("{} posets", posets.len()))
}

fn ac11_chain_map_degenerations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    rng.set_stream(11);
    let mut count = 0;
    for n in 0..=6 {
        for _ in 0..8 {
            let u = random_ab_poly(&mut rng, n, 4);
            degeneration_identities(&u).map_err(|e| format!("u = {u}: {e}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} random inputs of degree ≤ 6"))
}

/// Runs without the libtest harness so the report is never captured.
fn main() {
    let criteria: [(usize, &str, fn() -> Outcome); 11] = [
        (1, "poset/polynomial agreement", ac1_poset_polynomial_agreement),
        (2, "Eulerian preservation", ac2_eulerian_preservation),
        (3, "omega equivalence", ac3_omega_equivalence),
        (4, "crosspolytope", ac4_crosspolytope),
        (5, "Tchebyshev polynomials", ac5_tchebyshev_polynomials),
        (6, "spectrum of U", ac6_spectrum),
        (7, "Cartesian and dual diamond products", ac7_cartesian_dual_diamond),
        (8, "EL-shellability of T(P)", ac8_el_shellability),
        (9, "Hopf endomorphisms", ac9_hopf_endomorphisms),
        (10, "Zaslavsky character oracle", ac10_zaslavsky_oracle),
        (11, "chain-map degenerations", ac11_chain_map_degenerations),
    ];
    let mut failed = Vec::new();
    for (id, title, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] AC-{id} {title}: {detail}"),
            Err(witness) => {
                println!("[FAIL] AC-{id} {title}: {witness}");
                failed.push(id);
            }
        }
    }
    println!("{} of 11 criteria passed; failing: {failed:?}, expected: {KNOWN_FAILURES:?}", 11 - failed.len());
    if failed != KNOWN_FAILURES {
        eprintln!("failing criteria differ from the pinned set");
        std::process::exit(1);
    }
}
