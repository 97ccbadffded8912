//! Dual-containing generators, augmented pairs, and quantum synchronizable
//! code (QSC) parameters.
//!
//! A pair of cyclic codes `C_a ⊆ C_b` with `C_a^perp ⊆ C_a`, generated by
//! `g_1` and `g_2`, yields a `(c_l, c_r)-[[N + c_l + c_r, 2 k_1 - N]]_q` QSC.
//! It corrects at least `floor((d_b - 1) / 2)` bit errors and
//! `floor((d_a - 1) / 2)` phase errors, and tolerates any misalignment with
//! `c_l + c_r < ord(g_1 / g_2)`.
//!
//! [`theorem1_pair`] builds the pair from the odd cosets `{2k - 1, e_k}` of
//! [`hat_ms`], the even singletons `2, 4, ..., 2^{n-2}`, and optional extra
//! even cosets. Every claim about the result is re-checked and recorded as a
//! [`Certificate`] rather than assumed.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cyclic::{
    self, bch_bound, is_dual_containing, is_subcode, CodeFamily, CyclicCode, DistanceResult,
};
use crate::cyclotomy::CosetTable;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Which member of a `{C_s, C_{-s}}` pair is selected.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairChoice {
    #[default]
    Neither,
    Plus,
    Minus,
}

/// One [`PairChoice`] per entry of [`CosetTable::pairs`]. Selecting at most
/// one member of each pair, and never a self-paired coset, is exactly what
/// makes the product of the selected `M_s` a dual-containing generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SelectionVector {
    choices: Vec<PairChoice>,
}

impl SelectionVector {
    pub fn empty(table: &CosetTable) -> SelectionVector {
        SelectionVector {
            choices: vec![PairChoice::Neither; table.pairs().len()],
        }
    }

    pub fn choices(&self) -> &[PairChoice] {
        &self.choices
    }

    pub fn from_cosets(table: &CosetTable, cosets: &[usize]) -> Result<SelectionVector> {
        let pairs = table.pairs();
        let mut choices = vec![PairChoice::Neither; pairs.len()];
        for &idx in cosets.iter().collect::<BTreeSet<_>>() {
            if table.is_self_paired(idx) {
                return Err(Error::InvalidSelection(format!(
                    "C_{} is self-paired and can never be selected",
                    table.coset(idx).rep
                )));
            }
            let (slot, choice) = pairs
                .iter()
                .enumerate()
                .find_map(|(i, &(p, m))| {
                    (p == idx)
                        .then_some((i, PairChoice::Plus))
                        .or((m == idx).then_some((i, PairChoice::Minus)))
                })
                .expect("every non-self-paired coset is in a pair");
            if choices[slot] != PairChoice::Neither {
                return Err(Error::InvalidSelection(format!(
                    "both C_{} and C_{} selected",
                    table.coset(pairs[slot].0).rep,
                    table.coset(pairs[slot].1).rep
                )));
            }
            choices[slot] = choice;
        }
        Ok(SelectionVector { choices })
    }

    /// Cosets named by any of their members.
    pub fn from_residues(table: &CosetTable, residues: &[u64]) -> Result<SelectionVector> {
        let idx: Vec<usize> = residues.iter().map(|&s| table.index_of(s)).collect();
        SelectionVector::from_cosets(table, &idx)
    }

    /// Cosets given by their full root sets; rejects any exponent set that is
    /// not a union of whole cosets.
    pub fn from_root_exponents(table: &CosetTable, exponents: &[u64]) -> Result<SelectionVector> {
        let roots: BTreeSet<u64> = exponents.iter().map(|&e| e % table.modulus()).collect();
        let cosets: BTreeSet<usize> = roots.iter().map(|&e| table.index_of(e)).collect();
        for &idx in &cosets {
            if let Some(missing) = table
                .coset(idx)
                .elements
                .iter()
                .find(|e| !roots.contains(e))
            {
                return Err(Error::InvalidAugmentation(format!(
                    "factor is not coset-closed: alpha^{missing} from C_{} is missing",
                    table.coset(idx).rep
                )));
            }
        }
        SelectionVector::from_cosets(table, &cosets.into_iter().collect::<Vec<_>>())
    }

    /// Selected coset indices, ascending.
    pub fn cosets(&self, table: &CosetTable) -> Vec<usize> {
        let mut out: Vec<usize> = table
            .pairs()
            .iter()
            .zip(&self.choices)
            .filter_map(|(&(p, m), c)| match c {
                PairChoice::Neither => None,
                PairChoice::Plus => Some(p),
                PairChoice::Minus => Some(m),
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Swaps plus and minus everywhere.
    pub fn negated(&self) -> SelectionVector {
        let choices = self
            .choices
            .iter()
            .map(|c| match c {
                PairChoice::Neither => PairChoice::Neither,
                PairChoice::Plus => PairChoice::Minus,
                PairChoice::Minus => PairChoice::Plus,
            })
            .collect();
        SelectionVector { choices }
    }

    /// Componentwise `self <= other`: every selection here is also made there.
    pub fn dominated_by(&self, other: &SelectionVector) -> bool {
        self.choices.len() == other.choices.len()
            && self
                .choices
                .iter()
                .zip(&other.choices)
                .all(|(a, b)| *a == PairChoice::Neither || a == b)
    }

    pub fn count(&self) -> usize {
        self.choices
            .iter()
            .filter(|c| **c != PairChoice::Neither)
            .count()
    }
}

/// The code generated by the selected minimal polynomials. Its dual
/// containment is re-verified.
pub fn build_dual_containing(sel: &SelectionVector, family: &CodeFamily) -> Result<CyclicCode> {
    let table = family.table();
    let cosets = sel.cosets(table);
    let code = family.code_from_cosets(&cosets);
    let expected_k = family.length() - cosets.iter().map(|&i| table.coset(i).len()).sum::<usize>();
    if code.dimension() != expected_k {
        return Err(Error::Verification(format!(
            "dimension {} != {expected_k}",
            code.dimension()
        )));
    }
    if !is_dual_containing(&code, table)?.holds {
        return Err(Error::Verification(
            "pair-rule selection produced a code without dual containment".into(),
        ));
    }
    Ok(code)
}

/// `C_a ⊆ C_b` where `C_b` drops at least one of `C_a`'s selected cosets.
pub fn build_augmented_pair(
    sel_a: &SelectionVector,
    sel_b: &SelectionVector,
    family: &CodeFamily,
) -> Result<(CyclicCode, CyclicCode)> {
    if !sel_b.dominated_by(sel_a) {
        return Err(Error::InvalidAugmentation(
            "C_b selects a coset that C_a does not".into(),
        ));
    }
    if sel_b.count() == sel_a.count() {
        return Err(Error::InvalidAugmentation(
            "C_b must drop at least one coset so that k_1 < k_2".into(),
        ));
    }
    let a = build_dual_containing(sel_a, family)?;
    let b = family.code_from_cosets(&sel_b.cosets(family.table()));
    if !is_subcode(&a, &b)? || a.dimension() >= b.dimension() {
        return Err(Error::Verification(
            "augmented pair is not strictly nested".into(),
        ));
    }
    Ok((a, b))
}

/// The odd cosets `C_{2k-1} = {2k - 1, e_k}`, `k = 1..2^{n-3}`, and the
/// product of their minimal polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatMs {
    pub cosets: Vec<usize>,
    /// `(2k - 1, e_k)` per chosen coset.
    pub exponents: Vec<(u64, u64)>,
    pub polynomial: Polynomial,
}

impl HatMs {
    pub fn roots(&self) -> BTreeSet<u64> {
        self.exponents.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// The same product without the coset of 1, i.e. divided by
    /// `(x - alpha)(x - alpha^{e_1})`.
    pub fn overline(&self, family: &CodeFamily) -> HatMs {
        let cosets = self.cosets[1..].to_vec();
        let polynomial = cosets
            .iter()
            .fold(Polynomial::one(family.field()), |acc, &i| {
                &acc * family.minimal_by_index(i)
            });
        HatMs {
            cosets,
            exponents: self.exponents[1..].to_vec(),
            polynomial,
        }
    }
}

fn require_z_is_n_minus_one(family: &CodeFamily) -> Result<()> {
    let z = family.decomposition().z;
    let n = family.n();
    if n < 3 || z + 1 != n {
        return Err(Error::InvalidConfig(format!(
            "construction needs n >= 3 and z = n - 1; got n = {n}, z = {z}"
        )));
    }
    Ok(())
}

pub fn hat_ms(family: &CodeFamily) -> Result<HatMs> {
    require_z_is_n_minus_one(family)?;
    let table = family.table();
    let len = family.length() as u64;
    let q = family.q() % len;
    let count = 1u64 << (family.n() - 3);
    let mut cosets = Vec::new();
    let mut exponents = Vec::new();
    for k in 1..=count {
        let odd = 2 * k - 1;
        let idx = table.index_of(odd);
        let coset = table.coset(idx);
        let e = odd * q % len;
        if coset.len() != 2 || !coset.contains(e) {
            return Err(Error::Verification(format!(
                "coset of {odd} is not {{{odd}, {e}}}"
            )));
        }
        if cosets.contains(&idx) || cosets.contains(&table.negate(idx)) {
            return Err(Error::Verification(format!(
                "coset of {odd} repeats an earlier pair"
            )));
        }
        cosets.push(idx);
        exponents.push((odd, e));
    }
    let polynomial = cosets
        .iter()
        .fold(Polynomial::one(family.field()), |acc, &i| {
            &acc * family.minimal_by_index(i)
        });
    Ok(HatMs {
        cosets,
        exponents,
        polynomial,
    })
}

/// Extra cosets and their `g_2` exponents for [`theorem1_pair`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Theorem1Config {
    pub delta1: usize,
    /// Any member of each extra coset.
    pub extra: Vec<u64>,
    /// `eps[i] = 1` keeps extra coset `i` in `g_2` as well (so it cancels
    /// out of `f`). Empty means all zero.
    pub eps: Vec<u8>,
}

/// Largest `delta_1` the construction allows: `2^{n-2} - 2`.
pub fn max_delta1(n: u32) -> usize {
    (1usize << (n - 2)).saturating_sub(2)
}

/// Coset indices allowed as extras: even, not `0` or `N/2`, and not
/// `C_{2j}` or `C_{N-2j}` for `1 <= j <= 2^{n-3}`.
pub fn eligible_extra_cosets(family: &CodeFamily) -> Result<Vec<usize>> {
    require_z_is_n_minus_one(family)?;
    let table = family.table();
    let len = family.length() as u64;
    let mut excluded: BTreeSet<usize> = [0, len / 2].iter().map(|&s| table.index_of(s)).collect();
    for j in 1..=(1u64 << (family.n() - 3)) {
        excluded.insert(table.index_of(2 * j));
        excluded.insert(table.index_of(len - 2 * j));
    }
    Ok((0..table.len())
        .filter(|&i| table.coset(i).rep % 2 == 0 && !excluded.contains(&i))
        .collect())
}

/// Valid configs for `delta_1 = 0..=max`, in enumeration order, plus the
/// `delta_1` values within the allowed range that admit no valid selection.
pub fn enumerate_theorem1_configs(
    family: &CodeFamily,
    max: usize,
) -> Result<(Vec<Theorem1Config>, Vec<usize>)> {
    let eligible = eligible_extra_cosets(family)?;
    let table = family.table();
    let mut configs = Vec::new();
    let mut empty = Vec::new();
    for delta1 in 0..=max.min(max_delta1(family.n())) {
        let mut found = false;
        for subset in subsets_of_size(eligible.len(), delta1) {
            let chosen: Vec<usize> = subset.iter().map(|&i| eligible[i]).collect();
            if chosen.iter().any(|&c| chosen.contains(&table.negate(c))) {
                continue;
            }
            found = true;
            for mask in 0..(1u32 << delta1) {
                let eps = (0..delta1)
                    .map(|i| ((mask >> (delta1 - 1 - i)) & 1) as u8)
                    .collect();
                configs.push(Theorem1Config {
                    delta1,
                    extra: chosen.iter().map(|&c| table.coset(c).rep).collect(),
                    eps,
                });
            }
        }
        if !found {
            empty.push(delta1);
        }
    }
    Ok((configs, empty))
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        out.push(combo.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] < n - k + i {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Order of `f` by two routes: [`Polynomial::order_of`], and the odd-root
/// criterion (`ord f = N` iff `f(alpha^i) = 0` for some odd `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SyncCertificate {
    pub order: u64,
    pub maximal: bool,
    /// Least odd root exponent, when there is one.
    pub witness: Option<u64>,
}

pub fn sync_certificate(f: &Polynomial, family: &CodeFamily) -> Result<SyncCertificate> {
    let len = family.length() as u64;
    if !f.divides(&family.x_pow_minus_one()) {
        return Err(Error::NotDivisor(format!(
            "{f} does not divide x^{len} - 1"
        )));
    }
    let order = f.order_of(len)?;
    let witness = family.roots_of(f).into_iter().find(|i| i % 2 == 1);
    let maximal = witness.is_some();
    if (order == len) != maximal {
        return Err(Error::Verification(format!(
            "ord(f) = {order} but odd-root criterion says maximal = {maximal}"
        )));
    }
    Ok(SyncCertificate {
        order,
        maximal,
        witness,
    })
}

/// One named check in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Certificate {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Certificate {
        Certificate {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceKind {
    Exact,
    LowerBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceSummary {
    pub value: usize,
    pub kind: DistanceKind,
    pub bch: usize,
    pub upper_bound: Option<usize>,
}

impl DistanceSummary {
    pub fn from_result(d: &DistanceResult, bch: usize) -> DistanceSummary {
        match d.exact {
            Some(v) => DistanceSummary {
                value: v,
                kind: DistanceKind::Exact,
                bch,
                upper_bound: Some(v),
            },
            None => DistanceSummary {
                value: d.lower_bound.max(bch),
                kind: DistanceKind::LowerBound,
                bch,
                upper_bound: d.upper_bound,
            },
        }
    }

    pub fn bound_only(code: &CyclicCode) -> DistanceSummary {
        let bch = bch_bound(code).bound;
        DistanceSummary {
            value: bch,
            kind: DistanceKind::LowerBound,
            bch,
            upper_bound: Some(code.generator().weight()),
        }
    }

    /// `"6"` or `">= 6"`.
    pub fn label(&self) -> String {
        match self.kind {
            DistanceKind::Exact => self.value.to_string(),
            DistanceKind::LowerBound => format!(">= {}", self.value),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub length: usize,
    pub dimension: usize,
    pub generator: String,
    pub roots: Vec<u64>,
    pub distance: DistanceSummary,
    /// `[N,k,d]_q`, with `>=` when only a bound is known.
    pub notation: String,
}

impl CodeParams {
    pub fn new(code: &CyclicCode, distance: DistanceSummary, q: u64) -> CodeParams {
        let notation = format!(
            "[{},{},{}]_{q}",
            code.length(),
            code.dimension(),
            distance.label()
        );
        CodeParams {
            length: code.length(),
            dimension: code.dimension(),
            generator: code.generator().to_string(),
            roots: code.roots().iter().copied().collect(),
            distance,
            notation,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QscBlock {
    pub cl: u64,
    pub cr: u64,
    /// `N + c_l + c_r`.
    pub length: u64,
    /// `k_q = 2 k_1 - N`.
    pub logical: u64,
    /// `floor((d_b - 1) / 2)`.
    pub bit_floor: usize,
    /// `floor((d_a - 1) / 2)`.
    pub phase_floor: usize,
    /// False when a floor comes from a distance lower bound.
    pub floors_exact: bool,
    /// `c_l + c_r` must stay below this.
    pub tolerance_limit: u64,
    pub notation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QscReport {
    pub code_a: CodeParams,
    pub code_b: CodeParams,
    pub f: String,
    pub f_roots: Vec<u64>,
    pub ord_f: u64,
    pub max_tolerance: bool,
    pub witness_root: Option<u64>,
    pub qsc: QscBlock,
    pub certificates: Vec<Certificate>,
    pub verified: bool,
}

fn assemble_report(
    family: &CodeFamily,
    a: &CyclicCode,
    b: &CyclicCode,
    da: DistanceSummary,
    db: DistanceSummary,
    f: &Polynomial,
    sync: SyncCertificate,
    (cl, cr): (u64, u64),
    certificates: Vec<Certificate>,
) -> QscReport {
    let q = family.q();
    let len = family.length() as u64;
    let k1 = a.dimension() as u64;
    let logical = (2 * k1).saturating_sub(len);
    let floors_exact = da.kind == DistanceKind::Exact && db.kind == DistanceKind::Exact;
    let total = len + cl + cr;
    let qsc = QscBlock {
        cl,
        cr,
        length: total,
        logical,
        bit_floor: (db.value.saturating_sub(1)) / 2,
        phase_floor: (da.value.saturating_sub(1)) / 2,
        floors_exact,
        tolerance_limit: sync.order,
        notation: format!("({cl},{cr})-[[{total},{logical}]]_{q}"),
    };
    let verified = certificates.iter().all(|c| c.passed);
    QscReport {
        code_a: CodeParams::new(a, da, q),
        code_b: CodeParams::new(b, db, q),
        f: f.to_string(),
        f_roots: family.roots_of(f).into_iter().collect(),
        ord_f: sync.order,
        max_tolerance: sync.maximal,
        witness_root: sync.witness,
        qsc,
        certificates,
        verified,
    }
}

fn chain_certificates(
    family: &CodeFamily,
    a: &CyclicCode,
    b: &CyclicCode,
) -> Result<Vec<Certificate>> {
    let dc = is_dual_containing(a, family.table())?;
    let nested = is_subcode(a, b)?;
    let (k1, k2) = (a.dimension(), b.dimension());
    Ok(vec![
        Certificate::new(
            "dual_containing",
            dc.holds,
            if dc.holds {
                "C_a^perp ⊆ C_a".to_string()
            } else {
                format!("violating cosets {:?}", dc.violations)
            },
        ),
        Certificate::new("nested", nested, "C_a ⊆ C_b (g_b | g_a)"),
        Certificate::new("dimension_gap", k1 < k2, format!("k_1 = {k1}, k_2 = {k2}")),
    ])
}

/// QSC parameters for a verified chain `C_a^perp ⊆ C_a ⊆ C_b`. Exact
/// distances are used when available, BCH-based lower bounds otherwise.
pub fn qsc_params(
    family: &CodeFamily,
    a: &CyclicCode,
    b: &CyclicCode,
    da: &DistanceResult,
    db: &DistanceResult,
    cl: u64,
    cr: u64,
) -> Result<QscReport> {
    let certs = chain_certificates(family, a, b)?;
    if let Some(bad) = certs.iter().find(|c| !c.passed) {
        return Err(Error::ChainCondition(format!(
            "{}: {}",
            bad.name, bad.detail
        )));
    }
    let f = a.generator().div_exact(b.generator())?;
    let sync = sync_certificate(&f, family)?;
    if cl + cr >= sync.order {
        return Err(Error::Tolerance {
            total: cl + cr,
            order: sync.order,
        });
    }
    let sa = DistanceSummary::from_result(da, bch_bound(a).bound);
    let sb = DistanceSummary::from_result(db, bch_bound(b).bound);
    Ok(assemble_report(
        family,
        a,
        b,
        sa,
        sb,
        &f,
        sync,
        (cl, cr),
        certs,
    ))
}

/// Everything [`theorem1_pair`] builds.
#[derive(Clone, Debug)]
pub struct Theorem1Outcome {
    pub code_a: CyclicCode,
    pub code_b: CyclicCode,
    pub f: Polynomial,
    pub report: QscReport,
}

/// Misalignment and distance settings for [`theorem1_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairOptions {
    pub cl: u64,
    pub cr: u64,
    /// Rank-test budget for exact distances; `0` reports BCH bounds only.
    pub budget: u64,
}

impl Default for PairOptions {
    fn default() -> Self {
        PairOptions {
            cl: 0,
            cr: 0,
            budget: cyclic::DEFAULT_BUDGET,
        }
    }
}

fn validate_config(cfg: &Theorem1Config, family: &CodeFamily) -> Result<Vec<(usize, u8)>> {
    require_z_is_n_minus_one(family)?;
    let n = family.n();
    if cfg.delta1 > max_delta1(n) {
        return Err(Error::InvalidConfig(format!(
            "delta_1 = {} exceeds 2^(n-2) - 2 = {}",
            cfg.delta1,
            max_delta1(n)
        )));
    }
    if cfg.extra.len() != cfg.delta1 {
        return Err(Error::InvalidConfig(format!(
            "delta_1 = {} but {} extra cosets given",
            cfg.delta1,
            cfg.extra.len()
        )));
    }
    if !cfg.eps.is_empty() && cfg.eps.len() != cfg.delta1 {
        return Err(Error::InvalidConfig(
            "one eps flag is needed per extra coset".into(),
        ));
    }
    if cfg.eps.iter().any(|&e| e > 1) {
        return Err(Error::InvalidConfig("eps flags must be 0 or 1".into()));
    }
    let table = family.table();
    let eligible = eligible_extra_cosets(family)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (i, &s) in cfg.extra.iter().enumerate() {
        let idx = table.index_of(s);
        if !eligible.contains(&idx) {
            return Err(Error::InvalidConfig(format!(
                "C_{s} is not an eligible extra coset"
            )));
        }
        if !seen.insert(idx) {
            return Err(Error::InvalidConfig(format!("C_{s} listed twice")));
        }
        if seen.contains(&table.negate(idx)) {
            return Err(Error::InvalidConfig(format!(
                "C_{s} and its negation are both extras; dual containment would fail"
            )));
        }
        out.push((idx, cfg.eps.get(i).copied().unwrap_or(0)));
    }
    Ok(out)
}

/// `g_1 = hat M_S * prod_j (x - alpha^{2j}) * prod_i M_{s_i}` and
/// `g_2 = overline hat M_S * prod_j (x - alpha^{2j}) * prod_i M_{s_i}^{eps_i}`,
/// with every structural claim recorded as a certificate.
pub fn theorem1_pair(
    cfg: &Theorem1Config,
    family: &CodeFamily,
    opts: PairOptions,
) -> Result<Theorem1Outcome> {
    let extras = validate_config(cfg, family)?;
    let len = family.length() as u64;
    if opts.cl + opts.cr >= len {
        return Err(Error::Tolerance {
            total: opts.cl + opts.cr,
            order: len,
        });
    }
    let table = family.table();
    let n = family.n();
    let quarter = len / 4; // 2^{n-2}
    let eighth = len / 8; // 2^{n-3}
    let hat = hat_ms(family)?;
    let bar = hat.overline(family);
    let evens: Vec<usize> = (1..=eighth).map(|j| table.index_of(2 * j)).collect();

    let mut cos_a: Vec<usize> = hat.cosets.iter().chain(&evens).copied().collect();
    cos_a.extend(extras.iter().map(|&(i, _)| i));
    let mut cos_b: Vec<usize> = bar.cosets.iter().chain(&evens).copied().collect();
    cos_b.extend(extras.iter().filter(|&&(_, e)| e == 1).map(|&(i, _)| i));
    let a = family.code_from_cosets(&cos_a);
    let b = family.code_from_cosets(&cos_b);

    let mut certs = chain_certificates(family, &a, &b)?;
    let deg_a = a.generator().degree().unwrap();
    let want_deg = (quarter + eighth) as usize + cfg.delta1;
    certs.push(Certificate::new(
        "degree_g1",
        deg_a == want_deg,
        format!("deg g_1 = {deg_a}, expected {want_deg}"),
    ));

    let removed: usize = extras
        .iter()
        .filter(|&&(_, e)| e == 0)
        .map(|&(i, _)| table.coset(i).len())
        .sum();
    let deg_gap = deg_a - b.generator().degree().unwrap();
    certs.push(Certificate::new(
        "degree_gap",
        deg_gap == 2 + removed,
        format!("deg g_1 - deg g_2 = {deg_gap}, expected {}", 2 + removed),
    ));

    let run_a: BTreeSet<u64> = (1..=quarter).collect();
    let run_b: BTreeSet<u64> = (2..=quarter).collect();
    certs.push(Certificate::new(
        "roots_g1_cover_run",
        run_a.is_subset(a.roots()),
        format!("roots(g_1) ⊇ {{1..{quarter}}}"),
    ));
    certs.push(Certificate::new(
        "roots_g2_cover_run",
        run_b.is_subset(b.roots()),
        format!("roots(g_2) ⊇ {{2..{quarter}}}"),
    ));
    let bch_a = bch_bound(&a);
    let bch_b = bch_bound(&b);
    certs.push(Certificate::new(
        "bch_d1",
        bch_a.bound > quarter as usize,
        format!(
            "BCH bound {} (run {} from {}), need >= {}",
            bch_a.bound,
            bch_a.run,
            bch_a.run_start,
            quarter + 1
        ),
    ));
    certs.push(Certificate::new(
        "bch_d2",
        bch_b.bound >= quarter as usize,
        format!(
            "BCH bound {} (run {} from {}), need >= {quarter}",
            bch_b.bound, bch_b.run, bch_b.run_start
        ),
    ));

    let (f, rem) = a.generator().divmod(b.generator())?;
    certs.push(Certificate::new(
        "f_exact",
        rem.is_zero(),
        "g_2 | g_1 with zero remainder",
    ));
    let sync = sync_certificate(&f, family)?;
    certs.push(Certificate::new(
        "max_tolerance",
        sync.maximal && sync.order == len,
        format!("ord(f) = {}, odd root {:?}", sync.order, sync.witness),
    ));

    let kq = (2 * a.dimension() as i64) - len as i64;
    let want_kq = quarter as i64 - 2 * cfg.delta1 as i64;
    certs.push(Certificate::new(
        "logical_dimension",
        kq == want_kq,
        format!(
            "k_q = {kq}, expected 2^{}-2*{} = {want_kq}",
            n - 2,
            cfg.delta1
        ),
    ));

    let (da, db) = if opts.budget == 0 {
        (
            DistanceSummary::bound_only(&a),
            DistanceSummary::bound_only(&b),
        )
    } else {
        let ra = cyclic::min_distance(&a, opts.budget)?;
        let rb = cyclic::min_distance(&b, opts.budget)?;
        (
            DistanceSummary::from_result(&ra, bch_a.bound),
            DistanceSummary::from_result(&rb, bch_b.bound),
        )
    };
    certs.push(Certificate::new(
        "d1_at_least",
        da.value > quarter as usize,
        format!("d_1 {} vs 2^{} + 1", da.label(), n - 2),
    ));
    certs.push(Certificate::new(
        "d2_at_least",
        db.value >= quarter as usize,
        format!("d_2 {} vs 2^{}", db.label(), n - 2),
    ));

    let report = assemble_report(family, &a, &b, da, db, &f, sync, (opts.cl, opts.cr), certs);
    Ok(Theorem1Outcome {
        code_a: a,
        code_b: b,
        f,
        report,
    })
}

/// One `(q, n)` grid point of a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepPoint {
    pub q: u64,
    pub n: u32,
    /// Set when the point cannot host the construction at all.
    pub invalid: Option<String>,
    /// `delta_1` values in range that admit no valid selection.
    pub empty_delta1: Vec<usize>,
    pub entries: Vec<SweepEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepEntry {
    pub config: Theorem1Config,
    pub report: QscReport,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub points: usize,
    pub invalid_points: usize,
    pub reports: usize,
    pub verified: usize,
    pub maximal_tolerance: usize,
}

/// Runs [`theorem1_pair`] over every valid config with `delta_1 <= max`
/// for each grid point, in grid order then enumeration order.
pub fn sweep(qs: &[u64], ns: &[u32], max: usize, budget: u64) -> (Vec<SweepPoint>, SweepSummary) {
    let mut points = Vec::new();
    let mut summary = SweepSummary::default();
    for &q in qs {
        for &n in ns {
            summary.points += 1;
            let mut point = SweepPoint {
                q,
                n,
                invalid: None,
                empty_delta1: Vec::new(),
                entries: Vec::new(),
            };
            let run = || -> Result<(Vec<SweepEntry>, Vec<usize>)> {
                let family = CodeFamily::new(q, n)?;
                let (configs, empty) = enumerate_theorem1_configs(&family, max)?;
                let opts = PairOptions {
                    cl: 0,
                    cr: 0,
                    budget,
                };
                let entries = configs
                    .into_iter()
                    .map(|config| {
                        let report = theorem1_pair(&config, &family, opts)?.report;
                        Ok(SweepEntry { config, report })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((entries, empty))
            };
            match run() {
                Ok((entries, empty)) => {
                    summary.reports += entries.len();
                    summary.verified += entries.iter().filter(|e| e.report.verified).count();
                    summary.maximal_tolerance +=
                        entries.iter().filter(|e| e.report.max_tolerance).count();
                    point.entries = entries;
                    point.empty_delta1 = empty;
                }
                Err(e) => {
                    summary.invalid_points += 1;
                    point.invalid = Some(e.to_string());
                }
            }
            points.push(point);
        }
    }
    (points, summary)
}
