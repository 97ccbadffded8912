//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs as a plain binary so the lines always show. Criteria listed in
//! `EXPECTED_RED` are mathematically unattainable as stated; they are still
//! evaluated in full and reported as FAIL, and the run only succeeds while
//! they stay red and every other criterion is green.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qsync::cyclic::{
    self, bch_bound, enumerate_min_distance, is_dual_containing, is_subcode,
    min_distance_by_support, root_cosets,
};
use qsync::cyclotomy::{coset_size, cosets_bruteforce, cosets_closed_form, z_decompose};
use qsync::qsc::{
    enumerate_theorem1_configs, hat_ms, sync_certificate, theorem1_pair, DistanceKind, PairOptions,
    Theorem1Config,
};
use qsync::{CodeFamily, CyclicCode, Polynomial};

const QS: [u64; 9] = [5, 9, 13, 17, 25, 41, 49, 73, 97];
const NS: std::ops::RangeInclusive<u32> = 3..=10;
/// Largest extension degree used for the factorization grid.
const MAX_T: u32 = 16;
const RANDOM_SELECTIONS: usize = 200;
const SEED: u64 = 0x5eed_2024;

const EXPECTED_RED: &[(&str, &str)] = &[(
    "AC5",
    "Table 1 row 2 is [8,3,4]_5 with k < N/2, so it cannot contain its dual",
)];

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

/// Grid points whose minimal polynomials live in GF(q^t) with t <= MAX_T.
fn realizable() -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for q in QS {
        let z = z_decompose(q).unwrap().z;
        for n in NS {
            if n.saturating_sub(z) <= MAX_T.ilog2() {
                out.push((q, n));
            }
        }
    }
    out
}

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ac1() -> Outcome {
    let mut points = 0;
    for q in QS {
        for n in NS {
            let closed = cosets_closed_form(q, n).map_err(|e| e.to_string())?;
            let brute = cosets_bruteforce(q, n).map_err(|e| e.to_string())?;
            check(closed == brute, format!("q={q} n={n}: closed form differs"))?;
            check(
                (0..closed.len()).all(|i| closed.negate(i) == brute.negate(i)),
                format!("q={q} n={n}: pairing differs"),
            )?;
            points += 1;
        }
    }
    Ok(format!(
        "{points} grid points, partition and pairing identical"
    ))
}

fn ac2() -> Outcome {
    let mut cosets = 0;
    for q in QS {
        let z = z_decompose(q).unwrap().z;
        for n in NS {
            let brute = cosets_bruteforce(q, n).map_err(|e| e.to_string())?;
            for i in 0..brute.len() {
                let rep = brute.coset(i).rep;
                let r = if rep == 0 {
                    0
                } else {
                    n - rep.trailing_zeros()
                };
                let want = coset_size(n, z, r);
                check(
                    brute.coset(i).len() as u64 == want,
                    format!(
                        "q={q} n={n} C_{rep}: orbit {} vs formula {want}",
                        brute.coset(i).len()
                    ),
                )?;
                if rep % 2 == 1 && n > z {
                    check(want == 1 << (n - z), format!("q={q} n={n}: odd coset size"))?;
                }
                cosets += 1;
            }
        }
    }
    Ok(format!("{cosets} cosets, orbit length = formula"))
}

fn ac3() -> Outcome {
    let points = realizable();
    for &(q, n) in &points {
        let fam = CodeFamily::new(q, n).map_err(|e| format!("q={q} n={n}: {e}"))?;
        let tower = fam.tower();
        let mut product = Polynomial::one(fam.field());
        for i in 0..fam.table().len() {
            let m = fam.minimal_by_index(i);
            let coset = fam.table().coset(i);
            check(
                m.field() == fam.field() && m.is_monic(),
                format!("q={q} n={n}: M_{} not monic over GF(q)", coset.rep),
            )?;
            check(
                m.degree() == Some(coset.len()),
                format!("q={q} n={n}: deg M_{}", coset.rep),
            )?;
            let lifted = tower.embed_poly(m);
            for &e in &coset.elements {
                let root = tower.top().pow(fam.alpha(), e as u128);
                check(
                    lifted.eval(&root).is_zero(),
                    format!("q={q} n={n}: alpha^{e} is not a root of M_{}", coset.rep),
                )?;
            }
            product = &product * m;
        }
        let xn1 = fam.x_pow_minus_one();
        let (_, rem) = xn1.divmod(&product).map_err(|e| e.to_string())?;
        check(
            product == xn1 && rem.is_zero(),
            format!("q={q} n={n}: product is not x^N - 1"),
        )?;
    }
    Ok(format!(
        "{} realizable points (t <= {MAX_T}), product = x^N - 1, all M_s over GF(q)",
        points.len()
    ))
}

fn ac4() -> Outcome {
    let table = cosets_closed_form(17, 5).map_err(|e| e.to_string())?;
    let listed: [[u64; 2]; 8] = [
        [1, 17],
        [31, 15],
        [3, 19],
        [29, 13],
        [9, 25],
        [23, 7],
        [27, 11],
        [5, 21],
    ];
    for pair in listed {
        let got: BTreeSet<u64> = table
            .coset(table.index_of(pair[0]))
            .elements
            .iter()
            .copied()
            .collect();
        check(
            got == pair.into_iter().collect(),
            format!("coset of {} is {got:?}", pair[0]),
        )?;
    }
    let odd = table.cosets().iter().filter(|c| c.rep % 2 == 1).count();
    check(odd == 8, format!("{odd} odd cosets"))?;
    let fam = CodeFamily::new(17, 5).map_err(|e| e.to_string())?;
    let hat = hat_ms(&fam).map_err(|e| e.to_string())?;
    let mut cosets = hat.cosets.clone();
    cosets.extend((1..=4).map(|j| fam.table().index_of(2 * j)));
    let code = fam.code_from_cosets(&cosets);
    check(
        (1..=8).all(|i| code.roots().contains(&i)),
        "roots miss part of 1..8",
    )?;
    let bch = bch_bound(&code);
    check(bch.bound >= 9, format!("BCH bound {}", bch.bound))?;
    Ok(format!("8 odd cosets as listed, BCH bound {}", bch.bound))
}

fn exact_with_oracle(code: &CyclicCode) -> Result<usize, String> {
    let d = cyclic::min_distance(code, cyclic::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let exact = d.exact.ok_or("support search ran out of budget")?;
    if let Some(o) = d.oracle {
        check(o == exact, format!("support {exact} vs enumeration {o}"))?;
    }
    Ok(exact)
}

fn params(code: &CyclicCode) -> Result<(usize, usize, usize), String> {
    Ok((code.length(), code.dimension(), exact_with_oracle(code)?))
}

fn ac5() -> Outcome {
    let fam = CodeFamily::new(5, 3).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let rows: [(&str, &[u64], (usize, usize, usize), (usize, usize, usize)); 2] = [
        ("row 1", &[1, 5, 2], (8, 5, 3), (8, 3, 4)),
        ("row 2", &[1, 5, 3, 6, 7], (8, 3, 4), (8, 5, 2)),
    ];
    for (name, roots, want, want_dual) in rows {
        let c = fam.code_from_residues(roots);
        let d = c.dual();
        for code in [&c, &d] {
            let size = 5u128.pow(code.dimension() as u32);
            check(size <= cyclic::ORACLE_LIMIT, "oracle must run")?;
        }
        let (got, got_dual) = (params(&c)?, params(&d)?);
        if got != want || got_dual != want_dual {
            failures.push(format!("{name}: {got:?} / {got_dual:?}"));
        }
        let dc = is_dual_containing(&c, fam.table()).map_err(|e| e.to_string())?;
        if dc.holds {
            notes.push(format!("{name} dual-containing"));
        } else {
            failures.push(format!(
                "{name}: dual containment fails (pair-rule violations {:?})",
                dc.violations
            ));
        }
    }
    let out = Command::new(env!("CARGO_BIN_EXE_qsync"))
        .arg("verify-paper")
        .output()
        .map_err(|e| e.to_string())?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let row3 = v["result"]["checks"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["id"] == "table1-row3"))
        .ok_or("verify-paper has no table1-row3 check")?;
    if row3["status"] != "mismatch-flagged"
        || !row3["computed"]
            .as_str()
            .unwrap_or("")
            .starts_with("[16,6,8]_9 / dual [16,10,4]_9")
    {
        failures.push(format!(
            "row 3 not flagged with corrected parameters: {row3}"
        ));
    } else {
        notes.push("row 3 flagged as [16,6,8]_9 / dual [16,10,4]_9".into());
    }
    if failures.is_empty() {
        Ok(format!(
            "parameters exact and enumeration-checked; {}",
            notes.join("; ")
        ))
    } else {
        Err(format!(
            "{}; passing parts: {}",
            failures.join("; "),
            notes.join("; ")
        ))
    }
}

fn ac6() -> Outcome {
    let cases: [(
        u64,
        u32,
        &[u64],
        &[u64],
        (usize, usize, usize),
        (usize, usize, usize),
    ); 2] = [
        (5, 3, &[1, 2], &[2], (8, 5, 3), (8, 7, 2)),
        (5, 4, &[1, 4], &[4], (16, 11, 3), (16, 15, 2)),
    ];
    let mut notes = Vec::new();
    for (q, n, ra, rb, want_a, want_b) in cases {
        let fam = CodeFamily::new(q, n).map_err(|e| e.to_string())?;
        let a = fam.code_from_residues(ra);
        let b = fam.code_from_residues(rb);
        check(params(&a)? == want_a, format!("C_a = {:?}", params(&a)?))?;
        check(params(&b)? == want_b, format!("C_b = {:?}", params(&b)?))?;
        check(is_subcode(&a, &b).map_err(|e| e.to_string())?, "C_a ⊄ C_b")?;
        check(a.roots().is_superset(b.roots()), "root sets not nested")?;
        check(
            is_dual_containing(&a, fam.table())
                .map_err(|e| e.to_string())?
                .holds,
            "C_a not dual-containing",
        )?;
        notes.push(format!("{want_a:?} ⊆ {want_b:?}"));
    }
    Ok(notes.join(", "))
}

fn ac7() -> Outcome {
    let fam = CodeFamily::new(41, 4).map_err(|e| e.to_string())?;
    let cfg = Theorem1Config {
        delta1: 1,
        extra: vec![6],
        eps: vec![0],
    };
    let out = theorem1_pair(
        &cfg,
        &fam,
        PairOptions {
            cl: 0,
            cr: 0,
            budget: cyclic::DEFAULT_BUDGET,
        },
    )
    .map_err(|e| e.to_string())?;
    let r = &out.report;
    check(
        r.code_a.notation == "[16,9,6]_41",
        r.code_a.notation.clone(),
    )?;
    check(
        r.code_b.notation == "[16,12,4]_41",
        r.code_b.notation.clone(),
    )?;
    check(
        r.code_a.distance.kind == DistanceKind::Exact
            && r.code_b.distance.kind == DistanceKind::Exact,
        "distances not exact",
    )?;
    let da =
        min_distance_by_support(&out.code_a, cyclic::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    check(
        da.support.as_ref().map(Vec::len) == Some(6),
        "C_a witness support is not of size 6",
    )?;
    check(
        r.f_roots == vec![1, 6, 9],
        format!("f roots {:?}", r.f_roots),
    )?;
    let ord = out.f.order_of(16).map_err(|e| e.to_string())?;
    let sync = sync_certificate(&out.f, &fam).map_err(|e| e.to_string())?;
    check(
        ord == 16 && sync.maximal && sync.order == 16,
        format!("ord {ord}, odd-root {:?}", sync.witness),
    )?;
    check(
        r.qsc.logical == 2 && r.qsc.bit_floor == 1 && r.qsc.phase_floor == 2,
        format!("{:?}", r.qsc),
    )?;
    for (cl, cr) in [(0, 15), (7, 8), (3, 4)] {
        let o = theorem1_pair(&cfg, &fam, PairOptions { cl, cr, budget: 0 })
            .map_err(|e| e.to_string())?;
        check(
            o.report.qsc.length == 16 + cl + cr,
            "length is not 16 + c_l + c_r",
        )?;
    }
    check(r.verified, "some certificate failed")?;
    Ok("C_a [16,9,6]_41 ⊆ C_b [16,12,4]_41, f roots {1,6,9}, ord 16 both ways, [[16+c_l+c_r,2]]_41, floors 1/2".into())
}

fn ac8() -> Outcome {
    let mut total = 0;
    let mut notes = Vec::new();
    for (n, q) in [(4u32, 41u64), (4, 73), (5, 17)] {
        let fam = CodeFamily::new(q, n).map_err(|e| e.to_string())?;
        let (configs, empty) = enumerate_theorem1_configs(&fam, 2).map_err(|e| e.to_string())?;
        let len = 1u64 << n;
        let quarter = len / 4;
        for cfg in &configs {
            let tag = format!("q={q} n={n} {cfg:?}");
            let o = theorem1_pair(
                cfg,
                &fam,
                PairOptions {
                    cl: 0,
                    cr: 0,
                    budget: 0,
                },
            )
            .map_err(|e| format!("{tag}: {e}"))?;
            let (a, b) = (&o.code_a, &o.code_b);
            check(
                is_dual_containing(a, fam.table())
                    .map_err(|e| e.to_string())?
                    .holds,
                format!("{tag}: not dual-containing"),
            )?;
            check(
                is_subcode(a, b).map_err(|e| e.to_string())?,
                format!("{tag}: not nested"),
            )?;
            let kq = 2 * a.dimension() as i64 - len as i64;
            check(
                kq == quarter as i64 - 2 * cfg.delta1 as i64,
                format!("{tag}: k_q = {kq}"),
            )?;
            check(
                (1..=quarter).all(|i| a.roots().contains(&i)),
                format!("{tag}: roots(g_1)"),
            )?;
            check(
                (2..=quarter).all(|i| b.roots().contains(&i)),
                format!("{tag}: roots(g_2)"),
            )?;
            check(
                o.f.order_of(len).map_err(|e| e.to_string())? == len,
                format!("{tag}: ord(f)"),
            )?;
            total += 1;
        }
        notes.push(format!(
            "(n={n},q={q}): {} configs, no selection for delta_1 in {empty:?}",
            configs.len()
        ));
    }
    Ok(format!("{total} configs; {}", notes.join("; ")))
}

fn ac9() -> Outcome {
    let mut codes: Vec<CyclicCode> = Vec::new();
    let f53 = CodeFamily::new(5, 3).map_err(|e| e.to_string())?;
    let f54 = CodeFamily::new(5, 4).map_err(|e| e.to_string())?;
    let f41 = CodeFamily::new(41, 4).map_err(|e| e.to_string())?;
    for roots in [&[1u64, 5, 2][..], &[1, 5, 3, 6, 7], &[2]] {
        let c = f53.code_from_residues(roots);
        codes.push(c.dual());
        codes.push(c);
    }
    for roots in [&[1u64, 4][..], &[4]] {
        let c = f54.code_from_residues(roots);
        codes.push(c.dual());
        codes.push(c);
    }
    let o = theorem1_pair(
        &Theorem1Config {
            delta1: 1,
            extra: vec![6],
            eps: vec![0],
        },
        &f41,
        PairOptions {
            cl: 0,
            cr: 0,
            budget: 0,
        },
    )
    .map_err(|e| e.to_string())?;
    codes.extend([o.code_a.dual(), o.code_b.dual(), o.code_a, o.code_b]);
    for q in [5u64, 9, 13] {
        let fam = CodeFamily::new(q, 3).map_err(|e| e.to_string())?;
        let m = fam.table().len();
        for mask in 0u32..(1 << m) {
            let sel: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            codes.push(fam.code_from_cosets(&sel));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let m = f54.table().len();
    for _ in 0..40 {
        let sel: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.5)).collect();
        codes.push(f54.code_from_cosets(&sel));
    }
    let mut compared = 0;
    for c in &codes {
        let k = c.dimension();
        if k == 0
            || k == c.length()
            || c.field()
                .order()
                .checked_pow(k as u32)
                .map_or(true, |s| s > cyclic::ORACLE_LIMIT)
        {
            continue;
        }
        let s = min_distance_by_support(c, cyclic::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let (e, _) = enumerate_min_distance(c).map_err(|e| e.to_string())?;
        check(
            s.exact == Some(e),
            format!(
                "{}: support {:?} vs enumeration {e}",
                c.generator(),
                s.exact
            ),
        )?;
        compared += 1;
    }
    Ok(format!(
        "{compared} codes with q^k <= 10^6, support search = enumeration"
    ))
}

fn ac10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let points = realizable();
    let mut tested = 0;
    let mut containing = 0;
    for &(q, n) in &points {
        let fam = CodeFamily::new(q, n).map_err(|e| e.to_string())?;
        let table = fam.table();
        for i in 0..table.len() {
            let m = fam.minimal_by_index(i);
            let r = m.reciprocal().map_err(|e| e.to_string())?.monic();
            check(
                &r == fam.minimal_by_index(table.negate(i)),
                format!("q={q} n={n}: reciprocal(M_{}) != M_-s", table.coset(i).rep),
            )?;
        }
        let pairs = table.pairs();
        for k in 0..RANDOM_SELECTIONS {
            // alternate free subsets with pair-rule selections so both verdicts occur
            let sel: Vec<usize> = if k % 2 == 0 {
                (0..table.len()).filter(|_| rng.gen_bool(0.5)).collect()
            } else {
                pairs
                    .iter()
                    .filter_map(|&(p, m)| match rng.gen_range(0..3) {
                        0 => None,
                        1 => Some(p),
                        _ => Some(m),
                    })
                    .collect()
            };
            let c = fam.code_from_cosets(&sel);
            let by_division = c.generator().divides(
                &c.check_polynomial()
                    .reciprocal()
                    .map_err(|e| e.to_string())?,
            );
            let rc = root_cosets(&c, table).map_err(|e| e.to_string())?;
            let by_pairs = rc
                .iter()
                .all(|&i| !table.is_self_paired(i) && !rc.contains(&table.negate(i)));
            check(
                by_division == by_pairs,
                format!("q={q} n={n} {sel:?}: division {by_division}, pair rule {by_pairs}"),
            )?;
            let lib = is_dual_containing(&c, table).map_err(|e| e.to_string())?;
            check(lib.holds == by_pairs, "library verdict differs")?;
            containing += by_pairs as usize;
            tested += 1;
        }
    }
    Ok(format!("{} points x {RANDOM_SELECTIONS} selections = {tested} codes ({containing} dual-containing), tests agree; reciprocal(M_s) = M_-s", points.len()))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: "AC1",
            title: "coset classification",
            limit: Some(Duration::from_secs(10)),
            run: ac1,
        },
        Criterion {
            id: "AC2",
            title: "order formula",
            limit: None,
            run: ac2,
        },
        Criterion {
            id: "AC3",
            title: "factorization",
            limit: None,
            run: ac3,
        },
        Criterion {
            id: "AC4",
            title: "Example 1 reproduction",
            limit: Some(Duration::from_secs(1)),
            run: ac4,
        },
        Criterion {
            id: "AC5",
            title: "Table 1 rows 1-2",
            limit: Some(Duration::from_secs(5)),
            run: ac5,
        },
        Criterion {
            id: "AC6",
            title: "Table 2 rows 1-2",
            limit: Some(Duration::from_secs(10)),
            run: ac6,
        },
        Criterion {
            id: "AC7",
            title: "Example 2 end-to-end",
            limit: Some(Duration::from_secs(30)),
            run: ac7,
        },
        Criterion {
            id: "AC8",
            title: "Theorem 1 property sweep",
            limit: Some(Duration::from_secs(120)),
            run: ac8,
        },
        Criterion {
            id: "AC9",
            title: "oracle equivalence",
            limit: None,
            run: ac9,
        },
        Criterion {
            id: "AC10",
            title: "duality algebra",
            limit: None,
            run: ac10,
        },
    ];
    let mut unexpected = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        let timing = match c.limit {
            Some(l) => format!("{elapsed:.2?} / {l:?}"),
            None => format!("{elapsed:.2?}"),
        };
        let red = EXPECTED_RED.iter().find(|(id, _)| *id == c.id);
        match (&outcome, red) {
            (Ok(msg), None) => println!("PASS {} {} [{timing}]: {msg}", c.id, c.title),
            (Ok(msg), Some(_)) => {
                println!(
                    "PASS {} {} [{timing}]: {msg} (listed as unattainable; update EXPECTED_RED)",
                    c.id, c.title
                );
                unexpected.push(c.id);
            }
            (Err(msg), Some((_, why))) => println!(
                "FAIL {} {} [{timing}]: {msg} (unattainable: {why})",
                c.id, c.title
            ),
            (Err(msg), None) => {
                println!("FAIL {} {} [{timing}]: {msg}", c.id, c.title);
                unexpected.push(c.id);
            }
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcomes: {unexpected:?}");
        ExitCode::FAILURE
    }
}
