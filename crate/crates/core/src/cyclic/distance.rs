//! Exact minimum distance.
//!
//! The main route looks for the smallest set of linearly dependent columns of
//! the parity-check matrix, trying supports of size `w = 1, 2, ...` in
//! lexicographic order. The first dependent support found is the
//! lexicographically least minimum-weight support, and its null vector is a
//! minimum-weight codeword.
//!
//! [`enumerate_min_distance`] is the independent oracle: it walks every
//! message through the generator matrix. It is only run when `q^k` is at most
//! [`ORACLE_LIMIT`].

use crate::error::{Error, Result};
use crate::gf::FieldTable;
use crate::linalg::Matrix;
use crate::poly::Polynomial;

use super::{bch_bound, CyclicCode};

/// Rank tests allowed before falling back to bounds.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Largest codebook size the enumeration oracle will walk.
pub const ORACLE_LIMIT: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub exact: Option<usize>,
    /// BCH bound, raised to `w` when every support smaller than `w` was
    /// checked and found independent.
    pub lower_bound: usize,
    /// Weight of [`DistanceResult::witness`].
    pub upper_bound: Option<usize>,
    pub witness: Option<Polynomial>,
    /// Support of the witness, when it came from the support search.
    pub support: Option<Vec<usize>>,
    pub rank_tests: u64,
    /// Distance from full codeword enumeration, when it was run.
    pub oracle: Option<usize>,
}

impl DistanceResult {
    /// The exact distance if known, otherwise the lower bound.
    pub fn best_known(&self) -> usize {
        self.exact.unwrap_or(self.lower_bound)
    }
}

fn check_nondegenerate(code: &CyclicCode) -> Result<()> {
    let (n, k) = (code.length(), code.dimension());
    if k == 0 || k == n {
        return Err(Error::DegenerateCode { n, k });
    }
    Ok(())
}

/// Support search, then the enumeration oracle when the code is small enough.
/// A disagreement between the two is a [`Error::Verification`] failure.
pub fn min_distance(code: &CyclicCode, budget: u64) -> Result<DistanceResult> {
    let mut res = min_distance_by_support(code, budget)?;
    let k = code.dimension() as u32;
    let size = code.field().order().checked_pow(k);
    if size.is_some_and(|s| s <= ORACLE_LIMIT) {
        let (d, _) = enumerate_min_distance(code)?;
        if let Some(exact) = res.exact {
            if exact != d {
                return Err(Error::Verification(format!(
                    "support search found d = {exact}, enumeration found d = {d}"
                )));
            }
        }
        res.oracle = Some(d);
    }
    Ok(res)
}

pub fn min_distance_by_support(code: &CyclicCode, budget: u64) -> Result<DistanceResult> {
    check_nondegenerate(code)?;
    let t = FieldTable::new(code.field())?;
    let h = code.parity_check_matrix()?;
    let n = code.length();
    let r = h.rows();
    let bch = bch_bound(code).bound;
    let mut tests = 0u64;
    // Singleton bound: some n - k + 1 columns are always dependent
    for w in 1..=r + 1 {
        let mut combo: Vec<usize> = (0..w).collect();
        loop {
            if tests >= budget {
                let fallback = code.generator().clone();
                return Ok(DistanceResult {
                    exact: None,
                    lower_bound: bch.max(w),
                    upper_bound: Some(fallback.weight()),
                    witness: Some(fallback),
                    support: None,
                    rank_tests: tests,
                    oracle: None,
                });
            }
            tests += 1;
            let mut sub = Matrix::zeros(r, w);
            for (j, &c) in combo.iter().enumerate() {
                for i in 0..r {
                    sub.set(i, j, h.get(i, c));
                }
            }
            if let Some(x) = sub.null_vector(&t) {
                let field = code.field();
                let mut coeffs = vec![field.zero(); n];
                for (j, &c) in combo.iter().enumerate() {
                    coeffs[c] = field.element(x[j] as u128);
                }
                let witness = Polynomial::new(field, coeffs);
                if witness.weight() != w || !code.contains(&witness) {
                    return Err(Error::Verification(
                        "null vector is not a codeword of full support".into(),
                    ));
                }
                if w < bch {
                    return Err(Error::Verification(format!(
                        "codeword of weight {w} below the BCH bound {bch}"
                    )));
                }
                return Ok(DistanceResult {
                    exact: Some(w),
                    lower_bound: w,
                    upper_bound: Some(w),
                    witness: Some(witness),
                    support: Some(combo),
                    rank_tests: tests,
                    oracle: None,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("any n - k + 1 columns of the parity-check matrix are dependent")
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let w = combo.len();
    let mut i = w;
    while i > 0 {
        i -= 1;
        if combo[i] < n - w + i {
            combo[i] += 1;
            for j in i + 1..w {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum nonzero weight over all `q^k` codewords `m G`, with one codeword
/// attaining it (the first in message order).
pub fn enumerate_min_distance(code: &CyclicCode) -> Result<(usize, Polynomial)> {
    check_nondegenerate(code)?;
    let field = code.field();
    let k = code.dimension();
    let size = field.order().checked_pow(k as u32);
    if !size.is_some_and(|s| s <= ORACLE_LIMIT) {
        return Err(Error::InvalidConfig(format!(
            "q^k exceeds the enumeration limit {ORACLE_LIMIT}"
        )));
    }
    let t = FieldTable::new(field)?;
    let g = code.generator_matrix()?;
    let n = code.length();
    let q = t.order();
    // stepping digit v -> v + 1 (mod q) adds (e_{v+1} - e_v) * row
    let steps: Vec<u16> = (0..q)
        .map(|v| t.sub(((v + 1) % q) as u16, v as u16))
        .collect();
    let mut digits = vec![0usize; k];
    let mut word = vec![0u16; n];
    let mut best: Option<(usize, Vec<u16>)> = None;
    'outer: loop {
        let mut i = 0;
        loop {
            if i == k {
                break 'outer;
            }
            let s = steps[digits[i]];
            for (c, &gv) in word.iter_mut().zip(g.row(i)) {
                if gv != 0 {
                    *c = t.add(*c, t.mul(s, gv));
                }
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        let wt = word.iter().filter(|&&c| c != 0).count();
        if wt > 0 && best.as_ref().map_or(true, |(b, _)| wt < *b) {
            best = Some((wt, word.clone()));
        }
    }
    let (d, w) = best.expect("k >= 1 gives a nonzero codeword");
    let poly = Polynomial::new(field, w.iter().map(|&v| field.element(v as u128)).collect());
    Ok((d, poly))
}
