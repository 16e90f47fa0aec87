//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every identity is exact (zero tolerance) at finite truncation; the only
//! approximations anywhere are the truncation orders stated per criterion.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use bubbles::brauer::{
    brew_form, check_admissible, check_weak_admissible, classify_brauer, hat_poly,
    omega_of_roots, oo_from_omega, oo_of_poly, oracle_classify, BrauerBranch, BrauerOO, OmegaSeq,
};
use bubbles::exactmath::{Poly, RatFunc, RootMultiset, Scalar};
use bubbles::kauffman::{
    check_duality, classify_kauffman, hat_poly_k, oracle_classify_k, roo_of_poly, sneeze_check,
    KOmegaSeq, KauffmanBranch, KauffmanOO, KauffmanParams,
};

fn finish(number: u32, label: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!(
        "ACCEPTANCE {} ({}): PASS in {:.3}s (budget {:.0}s)",
        number,
        label,
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(
        elapsed < budget,
        "criterion {} exceeded its runtime budget: {:?} > {:?}",
        number,
        elapsed,
        budget
    );
}

fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let numer = rng.gen_range(-9i64..=9);
    let denom = *[1i64, 1, 2, 3, 4].choose(rng).unwrap();
    Scalar::ratio(numer, denom)
}

fn rand_monic(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    let d = rng.gen_range(0..=max_deg);
    let mut coeffs: Vec<Scalar> = (0..d).map(|_| rand_scalar(rng)).collect();
    coeffs.push(Scalar::one());
    Poly::new(coeffs)
}

/// All multisets of size `<= max_size` drawn from `pool` (values may repeat).
fn multisets(pool: &[Scalar], max_size: usize) -> Vec<RootMultiset> {
    let mut out = vec![vec![]];
    for size in 1..=max_size {
        let mut level: Vec<Vec<usize>> = Vec::new();
        fn build(pool_len: usize, start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for i in start..pool_len {
                cur.push(i);
                build(pool_len, i, left - 1, cur, out);
                cur.pop();
            }
        }
        build(pool.len(), 0, size, &mut Vec::new(), &mut level);
        out.extend(level);
    }
    out.into_iter()
        .map(|idx| RootMultiset::new(idx.into_iter().map(|i| pool[i].clone()).collect()))
        .collect()
}

#[test]
fn acceptance_1_grassmannian_identity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..200 {
        let f = rand_monic(&mut rng, 6);
        let oo = oo_of_poly(&f).unwrap();
        let product = &oo * &oo.subst_neg();
        assert!(product.is_one(), "O_f(u) O_f(-u) != 1 for f = {}", f);
    }
    finish(1, "grassmannian identity, 200 random f", start, Duration::from_secs(5));
}

#[test]
fn acceptance_2_odd_bubble_recursion() {
    let start = Instant::now();
    let pool: Vec<Scalar> = vec![
        Scalar::from_int(0),
        Scalar::from_int(1),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::from_int(-2),
        Scalar::from_int(3),
        Scalar::ratio(1, 2),
    ];
    let order = 64i64;
    let sets = multisets(&pool, 4);
    assert_eq!(sets.len(), 330);
    for (i, roots) in sets.iter().enumerate() {
        let w = omega_of_roots(roots, order);
        // the odd-index recursion, checked directly
        let mut j = 1usize;
        while j as i64 <= order {
            let mut sum = Scalar::zero();
            for k in 0..=(j - 1) {
                let term = &w.get(k) * &w.get(j - 1 - k);
                sum = if k % 2 == 0 { sum + term } else { sum - term };
            }
            let expected = &(sum - &w.get(j - 1)) * &Scalar::half();
            assert_eq!(w.get(j), expected, "recursion fails at index {} for {:?}", j, roots);
            j += 2;
        }
        // spot-check the library verdict too, which additionally
        // cross-validates against the grassmannian product
        if i % 10 == 0 {
            assert!(check_admissible(&w).pass);
        }
    }
    finish(
        2,
        "odd-bubble recursion, 330 exhaustive multisets to order 64",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn acceptance_3_brauer_classification_vs_oracle() {
    let start = Instant::now();
    let pool: Vec<Scalar> = [0i64, 1, -1, 2, -3]
        .iter()
        .map(|&v| Scalar::from_int(v))
        .collect();
    // all multisets with multiplicity <= 2 and total degree 1..=5
    let mut sets = Vec::new();
    let mut mults = [0usize; 5];
    loop {
        let total: usize = mults.iter().sum();
        if (1..=5).contains(&total) {
            let mut roots = Vec::new();
            for (i, &m) in mults.iter().enumerate() {
                for _ in 0..m {
                    roots.push(pool[i].clone());
                }
            }
            sets.push(RootMultiset::new(roots));
        }
        // odometer over multiplicities 0..=2
        let mut i = 0;
        loop {
            if i == 5 {
                break;
            }
            mults[i] += 1;
            if mults[i] <= 2 {
                break;
            }
            mults[i] = 0;
            i += 1;
        }
        if i == 5 {
            break;
        }
    }
    assert_eq!(sets.len(), 146);

    let mut pairs = 0usize;
    for roots in &sets {
        let p = Poly::from_roots(roots);
        for sub in roots.sub_multisets() {
            let f = Poly::from_roots(&sub);
            let oo = BrauerOO::from_ratfunc(oo_of_poly(&f).unwrap(), 64).unwrap();
            let c = classify_brauer(&p, &oo, 64).unwrap();
            let o = oracle_classify(roots, &oo, 64).unwrap();
            assert_eq!(
                c.nonzero,
                o.is_some(),
                "verdict mismatch at p = {}, O = O_({})",
                p,
                f
            );
            if let Some(m) = o {
                assert_eq!(c.m, Some(m), "minimal polynomial mismatch at p = {}", p);
            }
            pairs += 1;
        }
    }
    finish(
        3,
        &format!("brauer classification vs oracle, {} exhaustive pairs", pairs),
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn acceptance_4_worked_instance() {
    let start = Instant::now();
    // p = (u-1)(u-2)(u+1), O = 1
    let roots = RootMultiset::new(vec![
        Scalar::from_int(1),
        Scalar::from_int(2),
        Scalar::from_int(-1),
    ]);
    let p = Poly::from_roots(&roots);
    let oo = BrauerOO::one(64);
    let c = classify_brauer(&p, &oo, 64).unwrap();
    assert!(c.nonzero);
    assert_eq!(c.m, Some(Poly::from_ints(&[-1, 0, 1])));
    // Q = (u-1)(u+1), of even degree
    assert_eq!(c.q_poly, Some(Poly::from_ints(&[-1, 0, 1])));
    assert_eq!(c.branch, Some(BrauerBranch::QEvenOrDefault));
    // re-derived by the oracle
    let o = oracle_classify(&roots, &oo, 64).unwrap();
    assert_eq!(o, Some(Poly::from_ints(&[-1, 0, 1])));
    finish(4, "worked instance m = u^2 - 1", start, Duration::from_secs(5));
}

fn kauffman_samples() -> Vec<KauffmanParams> {
    vec![
        KauffmanParams::new(Scalar::from_int(2), Scalar::from_int(3)).unwrap(),
        KauffmanParams::new(Scalar::from_int(3), Scalar::ratio(1, 2)).unwrap(),
        KauffmanParams::new(Scalar::ratio(1, 2), Scalar::from_int(-2)).unwrap(),
    ]
}

#[test]
fn acceptance_5_kauffman_tri_equivalence() {
    let start = Instant::now();
    for params in kauffman_samples() {
        // rational root pool rich enough to produce sneeze-passing f of every
        // epsilon class in degrees 1..=3, plus plenty of violating f
        let mut pool: Vec<Scalar> = [1i64, -1, 2, -2, 3, -3]
            .iter()
            .map(|&v| Scalar::from_int(v))
            .collect();
        pool.push(Scalar::half());
        pool.push(-Scalar::half());
        for extra in [
            params.t.clone(),
            -&params.t,
            &params.q * &params.t,
            -&(&params.q * &params.t),
            &params.q.inv().unwrap() * &params.t,
            -&(&params.q.inv().unwrap() * &params.t),
        ] {
            if !pool.contains(&extra) {
                pool.push(extra);
            }
        }
        let mut passing = 0usize;
        let mut failing = 0usize;
        let mut seen_eps = Vec::new();
        for roots in multisets(&pool, 3) {
            if roots.is_empty() {
                continue;
            }
            let f = Poly::from_roots(&roots);
            if f.constant_term().is_zero() {
                continue;
            }
            let verdict = check_duality(&f, &params).unwrap();
            // items (1), (2), (3) simultaneously true or simultaneously false
            assert!(
                verdict.consistent(),
                "tri-equivalence broken for f = {} at q = {}, t = {}",
                f,
                params.q,
                params.t
            );
            match verdict.eps {
                Some(e) => {
                    passing += 1;
                    if !seen_eps.contains(&e) {
                        seen_eps.push(e);
                    }
                }
                None => {
                    assert!(!verdict.inverse_substitution_ok && !verdict.product_is_one);
                    failing += 1;
                }
            }
        }
        assert!(passing > 0 && failing > 0);
        assert_eq!(seen_eps.len(), 4, "all four epsilon classes must occur");
    }
    finish(
        5,
        "kauffman tri-equivalence over three parameter samples",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn acceptance_6_kauffman_classification_vs_oracle() {
    let start = Instant::now();
    for params in kauffman_samples() {
        let m = Poly::new(vec![-&params.t, Scalar::one()]); // u - t
        let oo = KauffmanOO::canonical(&m, 64, &params).unwrap();
        let branch_cases = [
            (vec![], KauffmanBranch::OddR0PlusT),
            (vec![Scalar::one()], KauffmanBranch::EvenR0MinusT),
            (vec![-Scalar::one()], KauffmanBranch::EvenR0PlusT),
            (vec![Scalar::one(), -Scalar::one()], KauffmanBranch::OddR0MinusT),
        ];
        for (extra, branch) in &branch_cases {
            let mut roots = vec![params.t.clone()];
            roots.extend(extra.clone());
            let rm = RootMultiset::new(roots);
            let p = Poly::from_roots(&rm);
            let c = classify_kauffman(&p, &oo, &params, 64).unwrap();
            let o = oracle_classify_k(&rm, &oo, &params, 64).unwrap();
            assert!(c.nonzero, "p = {} at t = {}", p, params.t);
            assert_eq!(c.branch, Some(*branch), "branch tag for p = {}", p);
            assert_eq!(c.m.as_ref(), Some(&m));
            assert_eq!(o.as_ref(), Some(&m), "oracle for p = {}", p);
        }
        // a spectator factor drops out
        let rm = RootMultiset::new(vec![params.t.clone(), Scalar::from_int(5)]);
        let c = classify_kauffman(&Poly::from_roots(&rm), &oo, &params, 64).unwrap();
        let o = oracle_classify_k(&rm, &oo, &params, 64).unwrap();
        assert!(c.nonzero);
        assert_eq!(c.m, o);
        // zero category: no divisor matches
        let rm = RootMultiset::new(vec![Scalar::from_int(5), Scalar::from_int(7)]);
        let c = classify_kauffman(&Poly::from_roots(&rm), &oo, &params, 64).unwrap();
        let o = oracle_classify_k(&rm, &oo, &params, 64).unwrap();
        assert!(!c.nonzero);
        assert!(o.is_none());
        // zero category without rational roots (classifier only)
        let c = classify_kauffman(&Poly::from_ints(&[1, 0, 1]), &oo, &params, 64).unwrap();
        assert!(!c.nonzero);
    }
    finish(
        6,
        "kauffman classification vs oracle with all four branches",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn acceptance_7_hat_closure_factorizations() {
    let start = Instant::now();
    // Brauer: hat(m, O_m) = ((-1)^{1 + deg m} u - 1/2) m for deg m in 1..=5
    let pool: Vec<Scalar> = [1i64, -1, 2, -2, 3]
        .iter()
        .map(|&v| Scalar::from_int(v))
        .collect();
    for size in 1..=5usize {
        let roots = RootMultiset::new(pool[..size].to_vec());
        let m = Poly::from_roots(&roots);
        let oo = BrauerOO::from_ratfunc(oo_of_poly(&m).unwrap(), 64).unwrap();
        let hat = hat_poly(&m, &oo, 16).unwrap();
        let sign = if (size + 1) % 2 == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        let expected = &Poly::new(vec![-Scalar::half(), sign]) * &m;
        assert_eq!(hat, expected, "brauer hat factorization for deg {}", size);
    }
    // Kauffman: deg p_hat = deg p + 2, constant term t, leading -t^-1 p(0)
    for params in kauffman_samples() {
        let t = &params.t;
        let palindromic = Poly::from_ints(&[1, 5, 1]);
        let mut ms = vec![
            Poly::new(vec![-t, Scalar::one()]),
            Poly::new(vec![t.clone(), Scalar::one()]),
        ];
        // even-degree representatives with f(0) = qt and f(0) = -q^-1 t
        ms.push(
            &Poly::from_ints(&[-1, 1]) * &Poly::new(vec![-&(&params.q * t), Scalar::one()]),
        );
        ms.push(
            &Poly::from_ints(&[1, 1])
                * &Poly::new(vec![-&(&params.q.inv().unwrap() * t), Scalar::one()]),
        );
        ms.push(&ms[0] * &palindromic); // degree 3
        for m in &ms {
            assert!(sneeze_check(m, &params).unwrap().is_some());
            let oo = KauffmanOO::canonical(m, 64, &params).unwrap();
            let hat = hat_poly_k(m, &oo, &params, 16).unwrap();
            let d = m.degree().unwrap() as i64;
            assert_eq!(hat.deg(), d + 2, "hat degree for m = {}", m);
            assert_eq!(hat.constant_term(), *t, "hat constant term for m = {}", m);
            let expected_lead = -&t.inv().unwrap() * &m.constant_term();
            assert_eq!(
                hat.leading(),
                Some(&expected_lead),
                "hat leading coefficient for m = {}",
                m
            );
        }
    }
    finish(7, "hat-closure factorizations", start, Duration::from_secs(10));
}

#[test]
fn acceptance_8_weak_admissibility_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let pool: Vec<Scalar> = vec![
        Scalar::from_int(0),
        Scalar::from_int(1),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::from_int(-2),
        Scalar::half(),
    ];
    let order = 48i64;
    let mut passes = 0usize;
    let mut fails = 0usize;
    for i in 0..500 {
        let size = rng.gen_range(1..=4);
        let roots = RootMultiset::new(
            (0..size)
                .map(|_| pool.choose(&mut rng).unwrap().clone())
                .collect(),
        );
        let mut w = omega_of_roots(&roots, order);
        let m = if i % 3 == 0 {
            // matching m: a passing case
            Poly::from_roots(&roots)
        } else if i % 3 == 1 {
            // unrelated m
            rand_monic_pos_deg(&mut rng)
        } else {
            // perturbed bubble data against the matching m
            let mut vals = w.values().to_vec();
            let k = rng.gen_range(0..vals.len());
            vals[k] = &vals[k] + &Scalar::from_int(rng.gen_range(1..=3));
            w = OmegaSeq::new(vals).unwrap();
            Poly::from_roots(&roots)
        };
        let weak = check_weak_admissible(&w, &m).unwrap();
        let (_, tail_ok) = brew_form(&w, &m).unwrap();
        assert_eq!(
            weak.pass, tail_ok,
            "weak admissibility and numerator form disagree for m = {}",
            m
        );
        if weak.pass {
            passes += 1;
        } else {
            fails += 1;
        }
    }
    assert!(passes > 50 && fails > 50, "need both outcomes: {} / {}", passes, fails);
    finish(
        8,
        "weak-admissibility equivalence on 500 randomized pairs",
        start,
        Duration::from_secs(10),
    );
}

fn rand_monic_pos_deg(rng: &mut ChaCha8Rng) -> Poly {
    let d = rng.gen_range(1..=3);
    let mut coeffs: Vec<Scalar> = (0..d).map(|_| rand_scalar(rng)).collect();
    coeffs.push(Scalar::one());
    Poly::new(coeffs)
}

#[test]
fn acceptance_9_coefficient_anchors() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    // [O_Omega]_{u^-1} = omega_0 and [O_Omega]_{u^-2} = omega_1 + omega_0/2
    for _ in 0..100 {
        let vals: Vec<Scalar> = (0..8).map(|_| rand_scalar(&mut rng)).collect();
        let w = OmegaSeq::new(vals.clone()).unwrap();
        let oo = oo_from_omega(&w);
        assert_eq!(oo.series.coeff(0).unwrap(), Scalar::one());
        assert_eq!(oo.series.coeff(-1).unwrap(), vals[0]);
        assert_eq!(
            oo.series.coeff(-2).unwrap(),
            &vals[1] + &(&vals[0] * &Scalar::half())
        );
    }
    // omega_0 = (t - t^-1)/z + 1 is enforced by KOmegaSeq
    for params in kauffman_samples() {
        let w0 = params.omega_zero();
        let good = vec![w0.clone(), Scalar::zero(), Scalar::zero()];
        assert!(KOmegaSeq::new(good.clone(), good, &params).is_ok());
        let bad = vec![&w0 + &Scalar::one(), Scalar::zero(), Scalar::zero()];
        assert!(KOmegaSeq::new(bad.clone(), bad, &params).is_err());
        // and the canonical series has exactly that constant bubble value:
        // [Omega(u)]_{u^0} of u * uptri-bubble equals omega_0
        let m = Poly::new(vec![-&params.t, Scalar::one()]);
        let roo = roo_of_poly(&m, &params).unwrap();
        // recover omega_0 from rOO via the defining affine relation:
        // rOO = ((t^-1 - z)u^2 - t^-1)/(u^2-zu-1) + z(u^2-1)/(u^2-zu-1) * Omega
        let prefix = RatFunc::new(
            Poly::new(vec![-&params.t.inv().unwrap(), Scalar::zero(), &params.t.inv().unwrap() - &params.z]),
            params.quad_minus(),
        )
        .unwrap();
        let factor = RatFunc::new(
            Poly::new(vec![-&params.z, Scalar::zero(), params.z.clone()]),
            params.quad_minus(),
        )
        .unwrap();
        let omega_rf = &(&roo - &prefix) / &factor;
        assert_eq!(omega_rf.expand(8).coeff(0).unwrap(), params.omega_zero());
    }
    finish(9, "coefficient anchors", start, Duration::from_secs(5));
}
