//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use dfixed::betti::{betti_table, default_max_degree, extremal_from_betti, reg_from_betti, BettiTable, CHECK_PRIME, DEFAULT_PRIME};
use dfixed::dseq::{all_representations, DSequence, LooseSequence};
use dfixed::fixed::{closure, is_borel_type, is_dfixed, is_stable, principal_ideal, PrincipalInput};
use dfixed::ideal::MonomialIdeal;
use dfixed::monomial::{binomial, monomials_of_degree, Monomial};
use dfixed::regularity::{corners, reg_formula, reg_sequential, reg_stability_for, stable_factorization};
use dfixed::socle::{
    agrees_with_direct, enumerate_pairs, pair_component, socle_direct, socle_formula, ComponentKey, IndexPair,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn seq(s: &str) -> DSequence {
    s.parse().unwrap()
}

fn sequences() -> Vec<DSequence> {
    vec![seq("1,2,4,12"), seq("1,2,4,8,16"), seq("1,3,9")]
}

fn mono(s: &str, n: usize) -> Monomial {
    Monomial::parse(s, n).unwrap()
}

fn input(d: &DSequence, u: &str, n: usize) -> PrincipalInput {
    PrincipalInput::from_monomial(d.clone(), &mono(u, n)).unwrap()
}

fn bracket(q: usize, d: u32, n: usize) -> MonomialIdeal {
    MonomialIdeal::prefix_frobenius(q, d, n).unwrap()
}

fn product(factors: &[MonomialIdeal]) -> MonomialIdeal {
    factors
        .iter()
        .fold(MonomialIdeal::unit(factors[0].n()), |acc, f| acc.multiply(f).unwrap())
}

fn ideal(gens: &[&str], n: usize) -> MonomialIdeal {
    MonomialIdeal::minimalize(n, gens.iter().map(|g| mono(g, n))).unwrap()
}

/// `x_n^α` for `α ∈ 1..=25`, `n ∈ {2, 3}`, three d-sequences.
fn pure_power_corpus() -> Vec<PrincipalInput> {
    let mut out = Vec::new();
    for d in sequences() {
        for n in [2, 3] {
            for alpha in 1..=25 {
                out.push(PrincipalInput::pure_power(d.clone(), n, alpha).unwrap());
            }
        }
    }
    out
}

fn betti_subsample() -> Vec<PrincipalInput> {
    pure_power_corpus()
        .into_iter()
        .filter(|i| i.n() == 3 && i.blocks()[0].exponent <= 21)
        .collect()
}

fn describe(i: &PrincipalInput) -> String {
    format!("{} over d=({}) n={}", i.monomial(), i.d(), i.n())
}

fn betti_for(inp: &PrincipalInput, characteristic: u64) -> Result<BettiTable, String> {
    let ideal = principal_ideal(inp).map_err(|e| e.to_string())?;
    let reg = reg_formula(inp).map_err(|e| e.to_string())?.value;
    let max = default_max_degree(&ideal, Some(reg)).map_err(|e| e.to_string())?;
    betti_table(&ideal, max, characteristic).map_err(|e| e.to_string())
}

fn c1_decomposition() -> Outcome {
    let d = seq("1,2,4,12");
    for (a, digits) in [(21, vec![1, 0, 2, 1]), (9, vec![1, 0, 2, 0]), (16, vec![0, 0, 1, 1])] {
        let got = d.decompose(a).digits().to_vec();
        ensure(got == digits, || format!("decompose({a}) = {got:?}, expected {digits:?}"))?;
    }
    Ok("21, 9, 16 decomposed exactly".into())
}

fn c2_expansion() -> Outcome {
    let d = seq("1,2,4,12");
    let inp = input(&d, "x3^21", 3);
    let by_product = principal_ideal(&inp).unwrap();
    let explicit = product(&[bracket(3, 1, 3), bracket(3, 4, 3), bracket(3, 4, 3), bracket(3, 12, 3)]);
    let by_closure = closure(&[mono("x3^21", 3)], &d).unwrap();
    ensure(by_product == explicit, || "product formula differs from (m)(m^[4])^2(m^[12])".into())?;
    ensure(by_closure == explicit, || "closure fixpoint differs from (m)(m^[4])^2(m^[12])".into())?;
    Ok(format!("{} generators, all three constructions equal", explicit.gens().len()))
}

fn c3_regularity() -> Outcome {
    let d = seq("1,2,4,12");
    let r = reg_formula(&input(&d, "x3^21", 3)).unwrap();
    ensure(r.value == 34, || format!("reg(x3^21) = {}", r.value))?;
    let r = reg_formula(&input(&d, "x1^2*x2^16*x3^9", 3)).unwrap();
    ensure(r.value == 32, || format!("reg(x1^2 x2^16 x3^9) = {}", r.value))?;
    ensure(r.d_values == [23, 30], || format!("D-values {:?}", r.d_values))?;
    Ok("34 and 32 with D = {23, 30}".into())
}

fn c4_pure_power_agreement() -> Outcome {
    let corpus = pure_power_corpus();
    corpus.par_iter().try_for_each(|inp| {
        let ideal = principal_ideal(inp).unwrap();
        let f = reg_formula(inp).unwrap().value;
        let st = reg_stability_for(inp).unwrap().value;
        let sq = reg_sequential(&ideal).unwrap().value;
        ensure(f == st && f == sq, || format!("{}: formula {f}, stability {st}, sequential {sq}", describe(inp)))
    })?;
    let sub = betti_subsample();
    sub.par_iter().try_for_each(|inp| {
        let f = reg_formula(inp).unwrap().value;
        let table = betti_for(inp, DEFAULT_PRIME)?;
        let b = reg_from_betti(&table).map_err(|e| format!("{}: {e}", describe(inp)))?.ideal;
        ensure(b == f, || format!("{}: formula {f}, Betti {b}", describe(inp)))
    })?;
    Ok(format!("{} inputs on three routes, {} Betti tables", corpus.len(), sub.len()))
}

fn c5_socle_agreement() -> Outcome {
    let d = seq("1,2,4,12");
    let mut corpus = pure_power_corpus();
    for u in ["x2^9*x3^16", "x2^16*x3^9", "x2^5*x3^5"] {
        corpus.push(input(&d, u, 3));
    }
    corpus.par_iter().try_for_each(|inp| {
        let report = socle_formula(inp).unwrap();
        ensure(agrees_with_direct(inp, &report).unwrap(), || {
            format!("{}: formula {:?} disagrees with enumeration", describe(inp), report.degrees)
        })?;
        if inp.r() == 1 {
            // Single-block dimensions are the binomial products, summed over equal degrees.
            let mut expected = std::collections::BTreeMap::<u64, u128>::new();
            for t in (0..inp.d().len()).filter(|&t| inp.digit(0, t) > 0) {
                let n = inp.n() as u64;
                let mut h = binomial(n + inp.digit(0, t) as u64 - 2, n - 1);
                for &a in &inp.digits(0)[t + 1..] {
                    h *= binomial(n + a as u64 - 1, n - 1);
                }
                *expected.entry(dfixed::socle::single_degree(inp, t)).or_default() += h;
            }
            let got: std::collections::BTreeMap<u64, u128> =
                report.degrees.iter().map(|s| (s.degree, s.dimension)).collect();
            ensure(got == expected, || format!("{}: dims {got:?} vs binomials {expected:?}", describe(inp)))?;
        }
        Ok::<(), String>(())
    })?;
    let golden = socle_formula(&input(&d, "x3^21", 3)).unwrap();
    let got: Vec<(u64, u128)> = golden.degrees.iter().map(|s| (s.degree, s.dimension)).collect();
    ensure(got == [(20, 18), (25, 9), (33, 1)], || format!("x3^21 socle {got:?}"))?;
    Ok(format!("{} inputs; x3^21 gives (20,18) (25,9) (33,1)", corpus.len()))
}

fn c6_worked_example() -> Outcome {
    let d = seq("1,2,4,12");
    let inp = input(&d, "x2^9*x3^16", 3);
    let pair = |l: &[usize], t: &[usize]| IndexPair { lambda: l.to_vec(), t: t.to_vec() };
    let pairs = enumerate_pairs(&inp);
    ensure(pairs.len() == 5, || format!("{} index pairs", pairs.len()))?;
    let c = |l: &[usize], t: &[usize]| pair_component(&inp, &pair(l, t)).unwrap();
    let m2_4 = bracket(2, 4, 3);
    let m3_12 = bracket(3, 12, 3);
    let expected = [
        (pair(&[2], &[3]), ideal(&["x1^11*x2^11*x3^11"], 3)),
        (
            pair(&[1, 2], &[0, 2]),
            product(&[ideal(&["x3^3"], 3), m2_4.clone(), m2_4.clone(), m2_4.clone(), m3_12.clone()]),
        ),
        (
            pair(&[1, 2], &[0, 3]),
            product(&[ideal(&["x3^11"], 3), bracket(2, 12, 3), m2_4.clone(), m2_4.clone()]),
        ),
        (
            pair(&[1, 2], &[2, 3]),
            product(&[ideal(&["x1^3*x2^3*x3^11"], 3), bracket(2, 12, 3), m2_4.clone()]),
        ),
    ];
    for (p, want) in &expected {
        let got = c(&p.lambda, &p.t);
        ensure(&got == want, || format!("J_{p} = {got}, expected {want}"))?;
    }
    let fifth = c(&[2], &[2]);
    let want = product(&[ideal(&["x1^3*x2^3*x3^3"], 3), m3_12, m2_4.clone(), m2_4]);
    ensure(fifth == want, || format!("J_((2),(2)) = {fifth}"))?;
    let ideal_i = principal_ideal(&inp).unwrap();
    let direct = socle_direct(&ideal_i, 29, 29).unwrap();
    let witnesses: Vec<&Monomial> = fifth.gens().iter().filter(|g| !ideal_i.member(g)).collect();
    ensure(
        direct.len() == 1 && direct[0].basis.len() == witnesses.len() && witnesses.iter().all(|w| direct[0].basis.contains(w)),
        || format!("degree-29 socle {direct:?} vs J_((2),(2)) witnesses {witnesses:?}"),
    )?;
    let report = socle_formula(&inp).unwrap();
    let deg = report
        .components
        .iter()
        .find(|c| c.key == ComponentKey::Pair(pair(&[2], &[2])))
        .map(|c| c.degree);
    ensure(deg == Some(29), || format!("J_((2),(2)) degree {deg:?}"))?;
    Ok(format!("four printed components exact; J_((2),(2)) has exponent 2 and {} socle witnesses at degree 29", witnesses.len()))
}

fn c7_stability_laws() -> Outcome {
    pure_power_corpus().par_iter().try_for_each(|inp| {
        let ideal = principal_ideal(inp).unwrap();
        let reg = reg_formula(inp).unwrap().value as u32;
        for e in reg..=reg + 2 {
            ensure(is_stable(&ideal.truncate(e)), || format!("{}: unstable at {e}", describe(inp)))?;
        }
        let deg = ideal.ideal_degree().unwrap();
        if reg >= deg + 1 {
            ensure(!is_stable(&ideal.truncate(reg - 1)), || format!("{}: stable at reg - 1", describe(inp)))?;
        }
        Ok::<(), String>(())
    })?;
    Ok("stable at reg..reg+2, unstable at reg-1".into())
}

fn c8_corners() -> Outcome {
    let d = seq("1,2,4,12");
    let inp = input(&d, "x3^21", 3);
    let table = betti_for(&inp, DEFAULT_PRIME)?;
    let ext: Vec<(usize, u64, u64)> = extremal_from_betti(&table).unwrap().iter().map(|e| (e.i, e.row, e.beta)).collect();
    ensure(ext == [(3, 33, 1)], || format!("x3^21 extremal {ext:?}"))?;
    let cs: Vec<(usize, u64, u64)> = corners(&inp).unwrap().iter().filter(|c| c.survives).map(|c| (c.position, c.row, c.beta as u64)).collect();
    ensure(cs == ext, || format!("x3^21 corners {cs:?}"))?;

    let inp = input(&d, "x2^16*x3^9", 3);
    let table = betti_for(&inp, DEFAULT_PRIME)?;
    let ext: Vec<(usize, u64, u64)> = extremal_from_betti(&table).unwrap().iter().map(|e| (e.i, e.row, e.beta)).collect();
    let cands = corners(&inp).unwrap();
    let rows: Vec<(usize, u64)> = cands.iter().map(|c| (c.position, c.row)).collect();
    ensure(rows == [(3, 29), (2, 22)], || format!("candidates {rows:?}"))?;
    for c in &cands {
        let in_oracle = ext.iter().find(|e| (e.0, e.1) == (c.position, c.row));
        match (c.survives, in_oracle) {
            (true, Some(e)) => ensure(e.2 == c.beta as u64, || format!("beta at {:?}: {} vs {}", (c.position, c.row), c.beta, e.2))?,
            (false, None) => {}
            _ => return Err(format!("candidate {:?} survives={} but oracle extremal set is {ext:?}", (c.position, c.row), c.survives)),
        }
    }
    ensure(ext.len() == cands.iter().filter(|c| c.survives).count(), || format!("oracle extremal {ext:?}"))?;
    Ok(format!("x3^21 -> (3,33,1); x2^16 x3^9 -> survivors {ext:?}, (2,22) dominated"))
}

fn random_dseq(rng: &mut ChaCha8Rng) -> DSequence {
    let len = rng.gen_range(1..=5);
    let mut v = vec![1u32];
    for _ in 1..len {
        let last = *v.last().unwrap();
        v.push(last * rng.gen_range(2..=5));
    }
    DSequence::new(v).unwrap()
}

fn c9_properties() -> Outcome {
    const CASES: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    // d-adic round trip and uniqueness.
    for _ in 0..CASES {
        let d = random_dseq(&mut rng);
        let a = rng.gen_range(0..5000u32);
        let digits = d.decompose(a);
        ensure(digits.compose() == a, || format!("round trip {a} over ({d})"))?;
        let small = a % 300;
        let reps = all_representations(small, &LooseSequence::new(d.entries().to_vec()).unwrap());
        ensure(reps == [d.decompose(small).digits().to_vec()], || format!("{small} over ({d}): {reps:?}"))?;
    }
    // Converse witness: a non-chain yields some integer without a unique representation.
    let mut witnessed = 0;
    while witnessed < CASES {
        let len = rng.gen_range(2..=4);
        let mut v = vec![1u32];
        for _ in 1..len {
            let last = *v.last().unwrap();
            v.push(last + rng.gen_range(1..=6));
        }
        if DSequence::new(v.clone()).is_ok() {
            continue;
        }
        let loose = LooseSequence::new(v.clone()).unwrap();
        let top = *v.last().unwrap();
        ensure((0..=top).any(|a| all_representations(a, &loose).len() != 1), || format!("no witness for {v:?}"))?;
        witnessed += 1;
    }
    // ≤_d is a partial order refining ≤.
    for _ in 0..CASES {
        let d = random_dseq(&mut rng);
        let [a, b, c] = [0; 3].map(|_| rng.gen_range(0..400u32));
        ensure(d.leq(a, a), || format!("reflexivity {a}"))?;
        ensure(!(d.leq(a, b) && d.leq(b, a)) || a == b, || format!("antisymmetry {a} {b}"))?;
        ensure(!(d.leq(a, b) && d.leq(b, c)) || d.leq(a, c), || format!("transitivity {a} {b} {c}"))?;
        ensure(!d.leq(a, b) || a <= b, || format!("refines {a} {b}"))?;
    }
    // Splitting.
    for _ in 0..CASES {
        let d = random_dseq(&mut rng);
        let (b1, b2) = (rng.gen_range(0..200u32), rng.gen_range(0..200u32));
        let subs = d.sub_values(b1 + b2);
        let a = subs[rng.gen_range(0..subs.len())];
        let (x, y) = d.split(a, b1, b2).map_err(|e| format!("split {a} of {b1}+{b2} over ({d}): {e}"))?;
        ensure(x + y == a && d.leq(x, b1) && d.leq(y, b2), || format!("split {a} -> {x}+{y}"))?;
    }
    // Closure idempotence, d-fixedness and Borel type.
    for _ in 0..CASES {
        let d = random_dseq(&mut rng);
        let n = rng.gen_range(2..=3);
        let gens: Vec<Monomial> = (0..rng.gen_range(1..=3))
            .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..5)).collect()).unwrap())
            .filter(|m| !m.is_one())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let c = closure(&gens, &d).unwrap();
        ensure(closure(c.gens(), &d).unwrap() == c, || format!("closure not idempotent on {gens:?}"))?;
        ensure(is_dfixed(&c, &d) && is_borel_type(&c).unwrap(), || format!("closure of {gens:?} not d-fixed Borel"))?;
    }
    // Monotonicity in the exponent.
    for _ in 0..CASES {
        let d = random_dseq(&mut rng);
        let n = rng.gen_range(2..=3);
        let a = rng.gen_range(1..=20u32);
        let b = rng.gen_range(a..=25u32);
        let small = principal_ideal(&PrincipalInput::pure_power(d.clone(), n, b).unwrap()).unwrap();
        let big = principal_ideal(&PrincipalInput::pure_power(d.clone(), n, a).unwrap()).unwrap();
        ensure(big.contains(&small), || format!("<x_n^{b}> not inside <x_n^{a}> over ({d})"))?;
    }
    // Factorization witnesses at degree reg + 1.
    for _ in 0..CASES {
        let d = sequences()[rng.gen_range(0..3)].clone();
        let n = rng.gen_range(2..=3);
        let inp = PrincipalInput::pure_power(d, n, rng.gen_range(1..=12)).unwrap();
        let ideal = principal_ideal(&inp).unwrap();
        let reg = reg_formula(&inp).unwrap().value as u32;
        for v in monomials_of_degree(n, reg + 1) {
            if ideal.member(&v) {
                ensure(stable_factorization(&ideal, &v).is_some(), || format!("{}: no witness for {v}", describe(&inp)))?;
            }
        }
    }
    Ok(format!("{CASES} seeded cases per family, 7 families"))
}

fn c10_characteristic() -> Outcome {
    let sub = betti_subsample();
    sub.par_iter().try_for_each(|inp| {
        let a = betti_for(inp, DEFAULT_PRIME)?;
        let b = betti_for(inp, CHECK_PRIME)?;
        ensure(a.entries == b.entries, || format!("{}: tables differ between {DEFAULT_PRIME} and {CHECK_PRIME}", describe(inp)))
    })?;
    Ok(format!("{} tables agree over {DEFAULT_PRIME} and {CHECK_PRIME}", sub.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 decomposition goldens", c1_decomposition),
        ("2 expansion goldens", c2_expansion),
        ("3 regularity goldens", c3_regularity),
        ("4 pure-power oracle agreement", c4_pure_power_agreement),
        ("5 socle agreement", c5_socle_agreement),
        ("6 two-block worked example", c6_worked_example),
        ("7 stability laws", c7_stability_laws),
        ("8 corner verification", c8_corners),
        ("9 property suites", c9_properties),
        ("10 characteristic sanity", c10_characteristic),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name:<32} {secs:>7.2}s  {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name:<32} {secs:>7.2}s  {detail}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
