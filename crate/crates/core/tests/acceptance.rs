//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails. All checks are exact: the tolerance on
//! every comparison is zero.

mod common;

use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use bott_core::{
    biholomorphic, enumerate_labelled, enumerate_shapes, make_deck, product_chern, reconstruct,
    tower_of_diagram, BottDiagram, BottMatrix, Monomial, RawMonomial, Reconstruction, RingElement,
    RingPresentation,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact comparison only; no numeric slack anywhere.
const TOLERANCE: u32 = 0;
const SEED: u64 = 0x5eed_b077;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hirzebruch_separation() -> Check {
    let f: Vec<BottMatrix> = (1..=5i64)
        .map(|q| BottMatrix::from_i64_rows(&[&[], &[2 * q]]).unwrap())
        .collect();
    let want = "1 + 2*z1 + 2*z2 + 4*z1z2";
    for (i, a) in f.iter().enumerate() {
        let c = a.chern_in_z_basis().map_err(|e| e.to_string())?;
        ensure(c.display_with('z').to_string() == want, || {
            format!("F_{}: chern {}", 2 * (i + 1), c.display_with('z'))
        })?;
        for (j, b) in f.iter().enumerate() {
            let same = biholomorphic(a, b).map_err(|e| e.to_string())?;
            ensure(same == (i == j), || {
                format!(
                    "F_{} vs F_{}: biholomorphic={same}",
                    2 * (i + 1),
                    2 * (j + 1)
                )
            })?;
        }
    }
    Ok("F_2..F_10 pairwise distinct, all chern = 1 + 2*z1 + 2*z2 + 4*z1z2".into())
}

fn chern_product_form() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let bound = BigInt::from(12);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(1..=6);
        let m = common::random_z_trivial(&mut rng, n, 6);
        if common::max_abs_entry(&m) > bound {
            continue;
        }
        let c = m.chern_in_z_basis().map_err(|e| format!("{m}: {e}"))?;
        ensure(c == product_chern(n), || format!("{m}: {c}"))?;
        done += 1;
    }
    Ok(format!("{done} towers"))
}

fn direct_z_trivial(m: &BottMatrix) -> bool {
    let p = m.presentation();
    (0..m.n()).all(|j| {
        let h = p.h(j);
        RingPresentation::is_even(&h) && p.multiply(&h, &h).unwrap().is_zero()
    })
}

fn z_triviality_consistency() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let (mut yes, mut no) = (0, 0);
    for i in 0..500 {
        let n = rng.gen_range(1..=6);
        let m = if i % 2 == 0 {
            common::random_matrix(&mut rng, n, 4)
        } else {
            let mut m = common::random_z_trivial(&mut rng, n, 3);
            if n >= 2 && rng.gen_bool(0.5) {
                let j = rng.gen_range(1..n);
                let k = rng.gen_range(0..j);
                let a = m.entry(j, k) + [-2i64, -1, 1, 2][rng.gen_range(0..4)];
                m.set(j, k, a);
            }
            m
        };
        let accepted = m.z_basis().is_ok();
        ensure(accepted == direct_z_trivial(&m), || format!("{m}"))?;
        if accepted {
            yes += 1
        } else {
            no += 1
        }
    }
    Ok(format!("500 matrices, {yes} accepted, {no} rejected"))
}

fn ring_correctness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    for _ in 0..500 {
        let n = rng.gen_range(1..=5);
        let m = common::random_matrix(&mut rng, n, 6);
        let p = m.presentation();
        let a = common::random_element(&mut rng, n, 6, 9);
        let b = common::random_element(&mut rng, n, 6, 9);
        let got = p.multiply(&a, &b).map_err(|e| e.to_string())?;
        ensure(got == common::oracle_multiply(&a, &b, m.rows()), || {
            format!("{m}\n({a}) * ({b}) = {got}")
        })?;
    }

    // every monomial with exponents <= 2 reduces into the span of the
    // squarefree ones, and those are fixed by reduction: rank 2^n
    for n in 1..=6 {
        let m = common::random_matrix(&mut rng, n, 4);
        let p = m.presentation();
        let mut support = std::collections::BTreeSet::new();
        for code in 0..3usize.pow(n as u32) {
            let e: Vec<u32> = (0..n)
                .map(|i| (code / 3usize.pow(i as u32) % 3) as u32)
                .collect();
            let r = p
                .reduce([(RawMonomial::from_exponents(e), BigInt::from(1))])
                .map_err(|e| e.to_string())?;
            support.extend(r.terms().map(|(mono, _)| mono));
        }
        for bits in 0..(1u64 << n) {
            let mono = Monomial::from_bits(bits);
            let raw = RawMonomial::from_factors(&mono.indices().collect::<Vec<_>>());
            let r = p
                .reduce([(raw, BigInt::from(1))])
                .map_err(|e| e.to_string())?;
            ensure(r == RingElement::term(mono, BigInt::from(1)), || {
                format!("n={n}: squarefree monomial not in normal form")
            })?;
            support.insert(mono);
        }
        ensure(support.len() == 1 << n, || {
            format!("n={n}: {} normal-form monomials", support.len())
        })?;
    }

    for n in 1..=8 {
        let c = BottMatrix::zeros(n).unwrap().presentation().total_chern();
        let top = Monomial::from_bits((1u64 << n) - 1);
        ensure(c.coefficient(top) == BigInt::from(1u64 << n), || {
            format!("n={n}: top chern {}", c.coefficient(top))
        })?;
    }
    Ok("500 products, rank 2^n for n<=6, top chern 2^n for n<=8".into())
}

fn classification_round_trip() -> Check {
    let mut total = 0;
    for n in 1..=7 {
        for d in enumerate_labelled(n, 3) {
            let m = tower_of_diagram(&d).map_err(|e| format!("{d}: {e}"))?;
            let back = m.diagram().map_err(|e| format!("{d}: {e}"))?;
            ensure(back.is_isomorphic(&d), || format!("{d}\n{m}\n{back}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} diagrams"))
}

fn census_counts() -> Check {
    ensure(enumerate_shapes(2).len() == 2, || "n=2".into())?;
    ensure(enumerate_shapes(3).len() == 4, || "n=3".into())?;
    for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 9), (5, 20)] {
        let brute = common::brute_classes(&common::all_ordered_forests(n, 1), false).len();
        let got = enumerate_shapes(n).len();
        ensure(brute == want && got == want, || {
            format!("n={n}: census {got}, brute force {brute}, expected {want}")
        })?;
    }
    Ok("1, 2, 4, 9, 20".into())
}

fn reconstruction() -> Check {
    let mut unlabelled = 0;
    for n in 1..=7 {
        for d in enumerate_shapes(n) {
            let r = reconstruct(&make_deck(&d).unwrap(), false).map_err(|e| format!("{d}: {e}"))?;
            let f = r.forest().ok_or_else(|| format!("{d}: ambiguous"))?;
            ensure(f.is_isomorphic(&d), || format!("{d}\n{f}"))?;
            unlabelled += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut labelled = 0;
    while labelled < 1000 {
        let n = rng.gen_range(2..=12);
        let d = common::random_forest(&mut rng, n, 9, 0.35);
        if d.roots().len() < 2 {
            continue;
        }
        let r = reconstruct(&make_deck(&d).unwrap(), true).map_err(|e| format!("{d}: {e}"))?;
        let f = r.forest().ok_or_else(|| format!("{d}: ambiguous"))?;
        ensure(f.is_isomorphic(&d), || format!("{d}\n{f}"))?;
        labelled += 1;
    }
    Ok(format!("{unlabelled} unlabelled, {labelled} labelled"))
}

fn labelled_indeterminacy() -> Check {
    let mut total = 0;
    for n in 1..=6 {
        for d in enumerate_labelled(n, 3) {
            if !d.is_connected() {
                continue;
            }
            let r = reconstruct(&make_deck(&d).unwrap(), true).map_err(|e| format!("{d}: {e}"))?;
            let Reconstruction::Ambiguous { shape, unknown } = r else {
                return Err(format!("{d}: not ambiguous"));
            };
            // erase labels on root edges of both sides, compare exactly
            let erase = |f: &BottDiagram| {
                let root = f.roots()[0];
                BottDiagram::new(
                    f.parents().to_vec(),
                    (0..f.n())
                        .map(|v| match f.parent(v) {
                            Some(p) if p == root => Some(1),
                            _ => f.label(v),
                        })
                        .collect(),
                )
                .unwrap()
            };
            ensure(shape.is_isomorphic(&erase(&d)), || format!("{d}\n{shape}"))?;
            let root = shape.roots()[0];
            let root_edges: Vec<usize> = (0..shape.n())
                .filter(|&v| shape.parent(v) == Some(root))
                .collect();
            ensure(unknown == root_edges, || {
                format!("{d}: unknown {unknown:?}")
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} trees"))
}

fn cli_golden() -> Check {
    let bin = Path::new(env!("CARGO_BIN_EXE_bott"));
    let bad = common::golden::mismatches(bin);
    ensure(bad.is_empty(), || format!("mismatched: {bad:?}"))?;
    Ok(format!(
        "{} transcripts byte-identical",
        common::golden::CASES.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("hirzebruch separation", hirzebruch_separation),
        ("chern product form", chern_product_form),
        ("z-triviality consistency", z_triviality_consistency),
        ("ring correctness", ring_correctness),
        ("classification round trip", classification_round_trip),
        ("census counts", census_counts),
        ("reconstruction", reconstruction),
        ("labelled indeterminacy", labelled_indeterminacy),
        ("cli golden files", cli_golden),
    ];
    println!("acceptance (tolerance {TOLERANCE}, seed {SEED:#x})");
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
