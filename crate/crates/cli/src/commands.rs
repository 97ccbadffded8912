use serde::Serialize;
use serde_json::{json, Value};

use qsync::cyclic::{
    self, bch_bound, is_dual_containing, is_subcode, BchBound, DistanceResult, DualContainment,
};
use qsync::cyclotomy::{
    coset_size, cosets_bruteforce, cosets_closed_form, z_decompose, CosetLabel, TableSource,
};
use qsync::gf::FieldTable;
use qsync::qsc::{
    self, build_augmented_pair, sync_certificate, theorem1_pair, Certificate, CodeParams,
    DistanceSummary, PairOptions, SelectionVector, Theorem1Config,
};
use qsync::{CodeFamily, CyclicCode};

use crate::args::Params;
use crate::output::{join, to_value, Output, Table};
use crate::CliError;

fn cert(name: &str, passed: bool, detail: impl Into<String>) -> Certificate {
    Certificate {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

pub fn point_meta(q: u64, n: u32) -> Result<Value, CliError> {
    let d = z_decompose(q)?;
    Ok(json!({ "q": q, "n": n, "z": d.z, "c": d.c }))
}

fn family(p: &Params) -> Result<CodeFamily, CliError> {
    let (q, n) = p.point()?;
    Ok(CodeFamily::new(q, n)?)
}

#[derive(Serialize)]
struct CosetRow {
    rep: u64,
    size: usize,
    level: u32,
    elements: Vec<u64>,
    negation: u64,
    self_paired: bool,
    label: Option<CosetLabel>,
}

#[derive(Serialize)]
struct CosetsResult {
    source: TableSource,
    count: usize,
    cosets: Vec<CosetRow>,
    pairs: Vec<[u64; 2]>,
}

pub fn cosets(p: &Params) -> Result<Output, CliError> {
    let (q, n) = p.point()?;
    let meta = point_meta(q, n)?;
    let z = z_decompose(q)?.z;
    let table = cosets_closed_form(q, n)?;
    let brute = cosets_bruteforce(q, n)?;
    let rows: Vec<CosetRow> = (0..table.len())
        .map(|i| CosetRow {
            rep: table.coset(i).rep,
            size: table.coset(i).len(),
            level: table.level(i),
            elements: table.coset(i).elements.clone(),
            negation: table.coset(table.negate(i)).rep,
            self_paired: table.is_self_paired(i),
            label: table.label(i),
        })
        .collect();
    let sizes_ok = rows
        .iter()
        .all(|r| r.size as u64 == coset_size(n, z, r.level));
    let certificates = vec![
        cert(
            "closed_form_matches_orbits",
            table == brute,
            "closed-form partition and pairing equal brute-force orbits",
        ),
        cert(
            "sizes_match_order_formula",
            sizes_ok,
            "|C_s| = 2^(r-z) for r > z, else 1",
        ),
    ];
    let mut t = Table::new(&[
        "rep",
        "size",
        "level",
        "elements",
        "negation",
        "self_paired",
    ]);
    for r in &rows {
        t.push(vec![
            r.rep.to_string(),
            r.size.to_string(),
            r.level.to_string(),
            join(&r.elements),
            r.negation.to_string(),
            r.self_paired.to_string(),
        ]);
    }
    let result = CosetsResult {
        source: table.source(),
        count: rows.len(),
        pairs: table
            .pairs()
            .iter()
            .map(|&(a, b)| [table.coset(a).rep, table.coset(b).rep])
            .collect(),
        cosets: rows,
    };
    Ok(Output {
        meta,
        result: to_value(&result),
        certificates,
        table: t,
        status: 0,
    })
}

#[derive(Serialize)]
struct FactorRow {
    rep: u64,
    elements: Vec<u64>,
    degree: usize,
    polynomial: String,
    reciprocal_rep: u64,
}

#[derive(Serialize)]
struct FactorResult {
    field: String,
    extension_degree: usize,
    top_field: String,
    alpha: String,
    factors: Vec<FactorRow>,
}

pub fn factor(p: &Params) -> Result<Output, CliError> {
    let fam = family(p)?;
    let meta = point_meta(fam.q(), fam.n())?;
    let table = fam.table();
    let product_ok = fam.factorization().is_ok();
    let mut recip_ok = true;
    let mut rows = Vec::new();
    for i in 0..table.len() {
        let m = fam.minimal_by_index(i);
        let neg = table.negate(i);
        recip_ok &= m.reciprocal()? == *fam.minimal_by_index(neg);
        rows.push(FactorRow {
            rep: table.coset(i).rep,
            elements: table.coset(i).elements.clone(),
            degree: m.degree().unwrap_or(0),
            polynomial: m.to_string(),
            reciprocal_rep: table.coset(neg).rep,
        });
    }
    let certificates = vec![
        cert(
            "product_is_x_n_minus_1",
            product_ok,
            format!("prod M_s = x^{} - 1", fam.length()),
        ),
        cert(
            "coefficients_in_base_field",
            true,
            "every M_s projected back to GF(q)",
        ),
        cert("reciprocal_pairs", recip_ok, "reciprocal(M_s) = M_{-s}"),
    ];
    let mut t = Table::new(&["rep", "elements", "degree", "polynomial", "reciprocal_rep"]);
    for r in &rows {
        t.push(vec![
            r.rep.to_string(),
            join(&r.elements),
            r.degree.to_string(),
            r.polynomial.clone(),
            r.reciprocal_rep.to_string(),
        ]);
    }
    let tower = fam.tower();
    let result = FactorResult {
        field: format!("{:?}", fam.field()),
        extension_degree: tower.degree(),
        top_field: format!("{:?}", tower.top()),
        alpha: tower.top().format(fam.alpha()),
        factors: rows,
    };
    Ok(Output {
        meta,
        result: to_value(&result),
        certificates,
        table: t,
        status: 0,
    })
}

#[derive(Serialize)]
pub struct DistanceDetail {
    pub exact: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: Option<usize>,
    pub witness: Option<String>,
    pub support: Option<Vec<usize>>,
    pub rank_tests: u64,
    pub oracle: Option<usize>,
}

impl DistanceDetail {
    fn from_result(d: &DistanceResult) -> DistanceDetail {
        DistanceDetail {
            exact: d.exact,
            lower_bound: d.lower_bound,
            upper_bound: d.upper_bound,
            witness: d.witness.as_ref().map(|w| w.to_string()),
            support: d.support.clone(),
            rank_tests: d.rank_tests,
            oracle: d.oracle,
        }
    }
}

#[derive(Serialize)]
pub struct CodeSummary {
    pub params: CodeParams,
    pub check_polynomial: String,
    pub parity_generator: String,
    pub root_cosets: Vec<u64>,
    pub bch: BchBound,
    pub dual_containing: DualContainment,
    pub distance_search: Option<DistanceDetail>,
}

/// Parameters of one code. A zero budget skips the distance search.
pub fn summarize(
    fam: &CodeFamily,
    code: &CyclicCode,
    budget: u64,
) -> Result<(CodeSummary, Vec<Certificate>), CliError> {
    let table = fam.table();
    let bch = bch_bound(code);
    let dc = is_dual_containing(code, table)?;
    let mut certs = vec![cert(
        "generator_divides_x_n_minus_1",
        code.generator().divides(&fam.x_pow_minus_one()),
        format!("g | x^{} - 1", code.length()),
    )];
    let degenerate = code.dimension() == 0 || code.dimension() == code.length();
    let (distance, search) = if budget == 0 || degenerate {
        (DistanceSummary::bound_only(code), None)
    } else {
        let d = cyclic::min_distance(code, budget)?;
        if let Some(o) = d.oracle {
            certs.push(cert(
                "distance_oracle_agrees",
                d.exact.map_or(true, |e| e == o),
                format!("full enumeration gives d = {o}"),
            ));
        }
        (
            DistanceSummary::from_result(&d, bch.bound),
            Some(DistanceDetail::from_result(&d)),
        )
    };
    let roots = cyclic::root_cosets(code, table)?;
    let summary = CodeSummary {
        params: CodeParams::new(code, distance, fam.q()),
        check_polynomial: code.check_polynomial().to_string(),
        parity_generator: code.check_polynomial().reciprocal()?.to_string(),
        root_cosets: roots.iter().map(|&i| table.coset(i).rep).collect(),
        bch,
        dual_containing: dc,
        distance_search: search,
    };
    Ok((summary, certs))
}

fn code_row(t: &mut Table, role: &str, s: &CodeSummary) {
    t.push(vec![
        role.to_string(),
        s.params.length.to_string(),
        s.params.dimension.to_string(),
        s.params.distance.value.to_string(),
        to_value(&s.params.distance.kind)
            .as_str()
            .unwrap_or_default()
            .to_string(),
        s.bch.bound.to_string(),
        s.dual_containing.holds.to_string(),
        s.params.generator.clone(),
    ]);
}

const CODE_HEADERS: [&str; 8] = [
    "role",
    "length",
    "dimension",
    "distance",
    "distance_kind",
    "bch",
    "dual_containing",
    "generator",
];

fn selected_code(p: &Params, fam: &CodeFamily) -> Result<CyclicCode, CliError> {
    let reps = Params::require(&p.cosets, "--cosets")?;
    Ok(fam.code_from_residues(reps))
}

fn budget(p: &Params) -> u64 {
    p.budget.unwrap_or(cyclic::DEFAULT_BUDGET)
}

pub fn code(p: &Params) -> Result<Output, CliError> {
    let fam = family(p)?;
    let c = selected_code(p, &fam)?;
    let (s, certs) = summarize(&fam, &c, budget(p))?;
    let mut t = Table::new(&CODE_HEADERS);
    code_row(&mut t, "code", &s);
    Ok(Output {
        meta: point_meta(fam.q(), fam.n())?,
        result: to_value(&s),
        certificates: certs,
        table: t,
        status: 0,
    })
}

pub fn dual(p: &Params) -> Result<Output, CliError> {
    let fam = family(p)?;
    let c = selected_code(p, &fam)?;
    let d = c.dual();
    let (primal, _) = summarize(&fam, &c, budget(p))?;
    let (s, mut certs) = summarize(&fam, &d, budget(p))?;
    let tab = FieldTable::new(fam.field())?;
    let orth = c
        .generator_matrix()?
        .mul_transpose(&d.generator_matrix()?, &tab)
        .is_zero();
    certs.push(cert("orthogonal", orth, "G * G_dual^T = 0"));
    certs.push(cert(
        "dimensions_sum",
        c.dimension() + d.dimension() == c.length(),
        "k + k_dual = N",
    ));
    certs.push(cert(
        "involution",
        d.dual() == c,
        "dual of the dual is the code",
    ));
    let mut t = Table::new(&CODE_HEADERS);
    code_row(&mut t, "code", &primal);
    code_row(&mut t, "dual", &s);
    let result = json!({ "code": to_value(&primal.params), "dual": to_value(&s) });
    Ok(Output {
        meta: point_meta(fam.q(), fam.n())?,
        result,
        certificates: certs,
        table: t,
        status: 0,
    })
}

pub fn mindist(p: &Params) -> Result<Output, CliError> {
    let fam = family(p)?;
    let c = selected_code(p, &fam)?;
    let b = p.budget.unwrap_or(cyclic::DEFAULT_BUDGET).max(1);
    let d = cyclic::min_distance(&c, b)?;
    let bch = bch_bound(&c);
    let mut certs = vec![cert(
        "at_least_bch",
        d.best_known() >= bch.bound,
        format!("d {} vs BCH {}", d.best_known(), bch.bound),
    )];
    if let Some(w) = &d.witness {
        certs.push(cert(
            "witness_is_codeword",
            c.contains(w),
            format!("weight {}", w.weight()),
        ));
    }
    if let Some(o) = d.oracle {
        certs.push(cert(
            "distance_oracle_agrees",
            d.exact.map_or(true, |e| e == o),
            format!("full enumeration gives d = {o}"),
        ));
    }
    let detail = DistanceDetail::from_result(&d);
    let mut t = Table::new(&[
        "length",
        "dimension",
        "exact",
        "lower_bound",
        "upper_bound",
        "rank_tests",
        "oracle",
        "witness",
    ]);
    let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    t.push(vec![
        c.length().to_string(),
        c.dimension().to_string(),
        opt(detail.exact),
        detail.lower_bound.to_string(),
        opt(detail.upper_bound),
        detail.rank_tests.to_string(),
        opt(detail.oracle),
        detail.witness.clone().unwrap_or_default(),
    ]);
    let result = json!({
        "length": c.length(),
        "dimension": c.dimension(),
        "generator": c.generator().to_string(),
        "bch": to_value(&bch),
        "distance": to_value(&detail),
    });
    Ok(Output {
        meta: point_meta(fam.q(), fam.n())?,
        result,
        certificates: certs,
        table: t,
        status: 0,
    })
}

pub fn augment(p: &Params) -> Result<Output, CliError> {
    let fam = family(p)?;
    let table = fam.table();
    let sa = SelectionVector::from_residues(table, Params::require(&p.cosets_a, "--cosets-a")?)?;
    let sb = SelectionVector::from_residues(table, Params::require(&p.cosets_b, "--cosets-b")?)?;
    let (a, b) = build_augmented_pair(&sa, &sb, &fam)?;
    let bud = budget(p);
    let (ra, mut certs) = summarize(&fam, &a, bud)?;
    let (rb, cb) = summarize(&fam, &b, bud)?;
    certs.extend(cb);
    certs.push(cert(
        "dual_containing",
        ra.dual_containing.holds,
        "C_a^perp ⊆ C_a",
    ));
    certs.push(cert("nested", is_subcode(&a, &b)?, "C_a ⊆ C_b (g_b | g_a)"));
    certs.push(cert(
        "dimension_gap",
        a.dimension() < b.dimension(),
        format!("k_a = {}, k_b = {}", a.dimension(), b.dimension()),
    ));
    let f = a.generator().div_exact(b.generator())?;
    let mut t = Table::new(&CODE_HEADERS);
    code_row(&mut t, "C_a", &ra);
    code_row(&mut t, "C_b", &rb);
    let result = json!({
        "code_a": to_value(&ra),
        "code_b": to_value(&rb),
        "f": f.to_string(),
        "f_roots": fam.roots_of(&f),
        "sync": to_value(&sync_certificate(&f, &fam)?),
    });
    Ok(Output {
        meta: point_meta(fam.q(), fam.n())?,
        result,
        certificates: certs,
        table: t,
        status: 0,
    })
}

const QSC_HEADERS: [&str; 14] = [
    "q",
    "n",
    "delta1",
    "extra",
    "eps",
    "code_a",
    "code_b",
    "ord_f",
    "max_tolerance",
    "qsc",
    "bit_floor",
    "phase_floor",
    "floors_exact",
    "verified",
];

fn qsc_row(t: &mut Table, q: u64, n: u32, cfg: Option<&Theorem1Config>, r: &qsc::QscReport) {
    t.push(vec![
        q.to_string(),
        n.to_string(),
        cfg.map(|c| c.delta1.to_string()).unwrap_or_default(),
        cfg.map(|c| join(&c.extra)).unwrap_or_default(),
        cfg.map(|c| join(&c.eps)).unwrap_or_default(),
        r.code_a.notation.clone(),
        r.code_b.notation.clone(),
        r.ord_f.to_string(),
        r.max_tolerance.to_string(),
        r.qsc.notation.clone(),
        r.qsc.bit_floor.to_string(),
        r.qsc.phase_floor.to_string(),
        r.qsc.floors_exact.to_string(),
        r.verified.to_string(),
    ]);
}

pub fn qsc(p: &Params) -> Result<Output, CliError> {
    let fam = family(p)?;
    let meta = point_meta(fam.q(), fam.n())?;
    let bud = budget(p);
    let mut t = Table::new(&QSC_HEADERS);
    if let Some(reps_a) = &p.cosets_a {
        let table = fam.table();
        let sa = SelectionVector::from_residues(table, reps_a)?;
        let sb =
            SelectionVector::from_residues(table, Params::require(&p.cosets_b, "--cosets-b")?)?;
        let (a, b) = build_augmented_pair(&sa, &sb, &fam)?;
        let distance = |c: &CyclicCode| -> Result<DistanceResult, CliError> {
            if bud == 0 {
                let bch = bch_bound(c).bound;
                Ok(DistanceResult {
                    exact: None,
                    lower_bound: bch,
                    upper_bound: Some(c.generator().weight()),
                    witness: Some(c.generator().clone()),
                    support: None,
                    rank_tests: 0,
                    oracle: None,
                })
            } else {
                Ok(cyclic::min_distance(c, bud)?)
            }
        };
        let mut report = qsc::qsc_params(&fam, &a, &b, &distance(&a)?, &distance(&b)?, p.cl, p.cr)?;
        qsc_row(&mut t, fam.q(), fam.n(), None, &report);
        let certs = std::mem::take(&mut report.certificates);
        return Ok(Output {
            meta,
            result: to_value(&report),
            certificates: certs,
            table: t,
            status: 0,
        });
    }
    let extra = p.extra.clone().unwrap_or_default();
    let cfg = Theorem1Config {
        delta1: p.delta1.unwrap_or(extra.len()),
        extra,
        eps: p.eps.clone().unwrap_or_default(),
    };
    let out = theorem1_pair(
        &cfg,
        &fam,
        PairOptions {
            cl: p.cl,
            cr: p.cr,
            budget: bud,
        },
    )?;
    let mut report = out.report;
    qsc_row(&mut t, fam.q(), fam.n(), Some(&cfg), &report);
    let certs = std::mem::take(&mut report.certificates);
    let result = json!({ "config": to_value(&cfg), "report": to_value(&report) });
    Ok(Output {
        meta,
        result,
        certificates: certs,
        table: t,
        status: 0,
    })
}

pub fn sweep(p: &Params) -> Result<Output, CliError> {
    let max = p.max_delta1.unwrap_or(2);
    let bud = p.budget.unwrap_or(0);
    let (points, summary) = qsc::sweep(&p.q, &p.n, max, bud);
    let mut t = Table::new(&QSC_HEADERS);
    let mut certs = Vec::new();
    for pt in &points {
        for e in &pt.entries {
            qsc_row(&mut t, pt.q, pt.n, Some(&e.config), &e.report);
        }
        if pt.invalid.is_none() {
            let ok = pt.entries.iter().all(|e| e.report.verified);
            certs.push(cert(
                &format!("q{}_n{}", pt.q, pt.n),
                ok,
                format!("{} configs, all certificates pass: {ok}", pt.entries.len()),
            ));
        }
    }
    let meta = json!({ "q": p.q, "n": p.n, "max_delta1": max, "budget": bud });
    let result = json!({ "points": to_value(&points), "summary": to_value(&summary) });
    Ok(Output {
        meta,
        result,
        certificates: certs,
        table: t,
        status: 0,
    })
}
