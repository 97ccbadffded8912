//! Cyclic codes of length `N = 2^n` over GF(q).
//!
//! A [`CodeFamily`] fixes `(q, n)` and owns everything shared by the codes of
//! that length: the coset table, the tower GF(q) ⊆ GF(q^t) with a primitive
//! `N`-th root of unity `alpha`, and the minimal polynomial of every coset.
//! A [`CyclicCode`] is a monic generator `g | x^N - 1` together with its
//! root exponents `{i : g(alpha^i) = 0}`.

mod distance;

use std::collections::BTreeSet;

use serde::Serialize;

pub use distance::{
    enumerate_min_distance, min_distance, min_distance_by_support, DistanceResult, DEFAULT_BUDGET,
    ORACLE_LIMIT,
};

use crate::arith;
use crate::cyclotomy::{self, CosetTable, ZDecomposition};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement, FieldTable, Tower};
use crate::linalg::Matrix;
use crate::poly::Polynomial;

/// `M_s(x) = prod_{i in C_s} (x - alpha^i)`, computed in the top field and
/// read back into GF(q).
pub fn minimal_polynomial(
    table: &CosetTable,
    tower: &Tower,
    alpha: &FieldElement,
    s: u64,
) -> Result<Polynomial> {
    let top = tower.top();
    let coset = table.coset(table.index_of(s));
    let mut m = Polynomial::one(top);
    for &i in &coset.elements {
        m = &m * &Polynomial::linear(top, &top.pow(alpha, i as u128));
    }
    if let Some(bad) = m.coeffs().iter().find(|c| !tower.is_in_subfield(c)) {
        return Err(Error::Verification(format!(
            "coefficient {} of M_{} is outside GF({})",
            top.format(bad),
            coset.rep,
            table.q()
        )));
    }
    tower.project_poly(&m).map_err(|_| {
        Error::Verification(format!(
            "M_{} does not project to GF({})",
            coset.rep,
            table.q()
        ))
    })
}

/// One minimal polynomial per coset, checked to multiply out to `x^N - 1`.
pub fn factorize_xn_minus_1(
    table: &CosetTable,
    tower: &Tower,
    alpha: &FieldElement,
) -> Result<Vec<(usize, Polynomial)>> {
    let factors = (0..table.len())
        .map(|idx| {
            Ok((
                idx,
                minimal_polynomial(table, tower, alpha, table.coset(idx).rep)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    check_product(table, tower.base(), &factors)?;
    Ok(factors)
}

fn check_product(table: &CosetTable, field: &Field, factors: &[(usize, Polynomial)]) -> Result<()> {
    let product = factors
        .iter()
        .fold(Polynomial::one(field), |acc, (_, m)| &acc * m);
    let target = Polynomial::x_pow_minus_one(field, table.modulus() as usize);
    if product != target {
        return Err(Error::Verification(format!(
            "product of minimal polynomials is {product}, not x^N - 1"
        )));
    }
    Ok(())
}

/// All length-`2^n` machinery for one field GF(q).
#[derive(Clone, Debug)]
pub struct CodeFamily {
    n: u32,
    len: usize,
    decomposition: ZDecomposition,
    field: Field,
    tower: Tower,
    alpha: FieldElement,
    alpha_pows: Vec<FieldElement>,
    table: CosetTable,
    minimal: Vec<Polynomial>,
}

impl CodeFamily {
    /// Builds GF(q), the coset table, the tower of degree
    /// `t = ord(q mod 2^n)`, `alpha`, and every `M_s`.
    pub fn new(q: u64, n: u32) -> Result<CodeFamily> {
        let decomposition = cyclotomy::z_decompose(q)?;
        if n == 0 {
            return Err(Error::InvalidLength(n));
        }
        let table = cyclotomy::cosets_closed_form(q, n)?;
        let len = table.modulus();
        let field = Field::from_order(q)?;
        let t = arith::multiplicative_order(q, len).expect("q is odd");
        let tower = Tower::new(&field, t as usize)?;
        let alpha = tower.primitive_nth_root(len)?;
        let top = tower.top();
        let mut alpha_pows = Vec::with_capacity(len as usize);
        let mut acc = top.one();
        for _ in 0..len {
            alpha_pows.push(acc.clone());
            acc = top.mul(&acc, &alpha);
        }
        let minimal = (0..table.len())
            .map(|idx| minimal_polynomial(&table, &tower, &alpha, table.coset(idx).rep))
            .collect::<Result<Vec<_>>>()?;
        Ok(CodeFamily {
            n,
            len: len as usize,
            decomposition,
            field,
            tower,
            alpha,
            alpha_pows,
            table,
            minimal,
        })
    }

    pub fn q(&self) -> u64 {
        self.decomposition.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Code length `N = 2^n`.
    pub fn length(&self) -> usize {
        self.len
    }

    pub fn decomposition(&self) -> ZDecomposition {
        self.decomposition
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    /// `M_s` for the coset containing `s`.
    pub fn minimal_polynomial(&self, s: u64) -> &Polynomial {
        &self.minimal[self.table.index_of(s)]
    }

    pub fn minimal_by_index(&self, idx: usize) -> &Polynomial {
        &self.minimal[idx]
    }

    /// `(coset index, M_s)` for every coset, with the product re-checked.
    pub fn factorization(&self) -> Result<Vec<(usize, Polynomial)>> {
        let factors: Vec<_> = self.minimal.iter().cloned().enumerate().collect();
        check_product(&self.table, &self.field, &factors)?;
        Ok(factors)
    }

    pub fn x_pow_minus_one(&self) -> Polynomial {
        Polynomial::x_pow_minus_one(&self.field, self.len)
    }

    /// Exponents `i` in `[0, N)` with `f(alpha^i) = 0`, by direct evaluation.
    pub fn roots_of(&self, f: &Polynomial) -> BTreeSet<u64> {
        let lifted = self.tower.embed_poly(f);
        (0..self.len as u64)
            .filter(|&i| lifted.eval(&self.alpha_pows[i as usize]).is_zero())
            .collect()
    }

    /// The code generated by the product of `M_s` over the given cosets.
    pub fn code_from_cosets(&self, cosets: &[usize]) -> CyclicCode {
        let chosen: BTreeSet<usize> = cosets.iter().copied().collect();
        let generator = chosen.iter().fold(Polynomial::one(&self.field), |acc, &i| {
            &acc * &self.minimal[i]
        });
        let roots = chosen
            .iter()
            .flat_map(|&i| self.table.coset(i).elements.iter().copied())
            .collect();
        let check = self
            .x_pow_minus_one()
            .div_exact(&generator)
            .expect("product of distinct M_s divides x^N - 1");
        CyclicCode {
            field: self.field.clone(),
            len: self.len,
            generator,
            check,
            roots,
        }
    }

    /// Same as [`CodeFamily::code_from_cosets`], with cosets named by any member.
    pub fn code_from_residues(&self, residues: &[u64]) -> CyclicCode {
        let idx: Vec<usize> = residues.iter().map(|&s| self.table.index_of(s)).collect();
        self.code_from_cosets(&idx)
    }

    /// Wraps an arbitrary divisor of `x^N - 1`; roots found by evaluation.
    pub fn code_from_generator(&self, g: &Polynomial) -> Result<CyclicCode> {
        if g.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let generator = g.monic();
        let check = self
            .x_pow_minus_one()
            .div_exact(&generator)
            .map_err(|_| Error::NotDivisor(format!("{g} does not divide x^{} - 1", self.len)))?;
        let roots = self.roots_of(&generator);
        Ok(CyclicCode {
            field: self.field.clone(),
            len: self.len,
            generator,
            check,
            roots,
        })
    }
}

/// A cyclic code `<g>` of length `N` over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    field: Field,
    len: usize,
    generator: Polynomial,
    check: Polynomial,
    roots: BTreeSet<u64>,
}

impl CyclicCode {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.len
    }

    /// `k = N - deg g`.
    pub fn dimension(&self) -> usize {
        self.len - self.generator.degree().expect("generator is nonzero")
    }

    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }

    /// `h = (x^N - 1) / g`.
    pub fn check_polynomial(&self) -> &Polynomial {
        &self.check
    }

    pub fn roots(&self) -> &BTreeSet<u64> {
        &self.roots
    }

    /// `C^perp`, generated by the reciprocal of `h`. Its roots are the
    /// negatives of the non-roots of `C`.
    pub fn dual(&self) -> CyclicCode {
        let generator = self
            .check
            .reciprocal()
            .expect("h divides x^N - 1, so h(0) != 0");
        let n = self.len as u64;
        let roots = (0..n)
            .filter(|i| !self.roots.contains(i))
            .map(|i| (n - i) % n)
            .collect();
        let check = Polynomial::x_pow_minus_one(&self.field, self.len)
            .div_exact(&generator)
            .expect("reciprocal of a divisor of x^N - 1 divides it");
        CyclicCode {
            field: self.field.clone(),
            len: self.len,
            generator,
            check,
            roots,
        }
    }

    /// Whether `c` (degree < N) is a codeword.
    pub fn contains(&self, c: &Polynomial) -> bool {
        c.degree().map_or(true, |d| d < self.len) && self.generator.divides(c)
    }

    /// Rows are the cyclic shifts `x^i g(x)`, `i < k`.
    pub fn generator_matrix(&self) -> Result<Matrix> {
        let t = FieldTable::new(&self.field)?;
        Ok(shift_matrix(
            &self.field,
            &self.generator,
            self.dimension(),
            self.len,
            &t,
        ))
    }

    /// Rows are the shifts `x^i h~(x)`, `i < N - k`, of the reciprocal check
    /// polynomial.
    pub fn parity_check_matrix(&self) -> Result<Matrix> {
        let t = FieldTable::new(&self.field)?;
        let recip = self.check.reciprocal()?;
        Ok(shift_matrix(
            &self.field,
            &recip,
            self.len - self.dimension(),
            self.len,
            &t,
        ))
    }
}

fn shift_matrix(
    field: &Field,
    row: &Polynomial,
    rows: usize,
    cols: usize,
    _t: &FieldTable,
) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for (j, c) in row.coeffs().iter().enumerate() {
            m.set(r, (r + j) % cols, field.index_of(c) as u16);
        }
    }
    m
}

/// Outcome of the dual-containment test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualContainment {
    pub holds: bool,
    /// Representatives of root cosets that break the pair rule: self-paired
    /// cosets, or cosets whose negation is also a root coset.
    pub violations: Vec<u64>,
}

/// `C^perp ⊆ C`, decided twice: by `g | h~` and by the pair rule on root
/// cosets. The two answers must match.
pub fn is_dual_containing(code: &CyclicCode, table: &CosetTable) -> Result<DualContainment> {
    let by_division = code.generator.divides(&code.check.reciprocal()?);
    let root_cosets = root_cosets(code, table)?;
    let violations: Vec<u64> = root_cosets
        .iter()
        .filter(|&&i| table.is_self_paired(i) || root_cosets.contains(&table.negate(i)))
        .map(|&i| table.coset(i).rep)
        .collect();
    let by_pairs = violations.is_empty();
    if by_division != by_pairs {
        return Err(Error::Verification(format!(
            "dual containment: divisibility says {by_division}, pair rule says {by_pairs}"
        )));
    }
    Ok(DualContainment {
        holds: by_pairs,
        violations,
    })
}

/// Coset indices making up the root set; fails if the roots are not a union
/// of cosets.
pub fn root_cosets(code: &CyclicCode, table: &CosetTable) -> Result<BTreeSet<usize>> {
    if table.modulus() as usize != code.len {
        return Err(Error::InvalidConfig(
            "coset table and code lengths differ".into(),
        ));
    }
    let idx: BTreeSet<usize> = code.roots.iter().map(|&s| table.index_of(s)).collect();
    let covered: usize = idx.iter().map(|&i| table.coset(i).len()).sum();
    if covered != code.roots.len() {
        return Err(Error::Verification(
            "root set is not a union of cyclotomic cosets".into(),
        ));
    }
    Ok(idx)
}

/// `C_a ⊆ C_b`: `g_b | g_a`, cross-checked against `roots(C_b) ⊆ roots(C_a)`.
pub fn is_subcode(a: &CyclicCode, b: &CyclicCode) -> Result<bool> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    if a.len != b.len {
        return Err(Error::InvalidConfig("codes have different lengths".into()));
    }
    let by_division = b.generator.divides(&a.generator);
    let by_roots = b.roots.is_subset(&a.roots);
    if by_division != by_roots {
        return Err(Error::Verification(format!(
            "subcode test: divisibility says {by_division}, roots say {by_roots}"
        )));
    }
    Ok(by_division)
}

/// Longest run of consecutive root exponents and the bound it implies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BchBound {
    /// `1 + run`, with runs allowed to wrap around `N - 1 -> 0`.
    pub bound: usize,
    pub run_start: u64,
    pub run: usize,
    /// Longest run inside `0..N` without wraparound.
    pub linear_run: usize,
}

pub fn bch_bound(code: &CyclicCode) -> BchBound {
    let n = code.len;
    let present: Vec<bool> = (0..n as u64).map(|i| code.roots.contains(&i)).collect();
    let mut linear_run = 0;
    let mut cur = 0;
    for &p in &present {
        cur = if p { cur + 1 } else { 0 };
        linear_run = linear_run.max(cur);
    }
    if linear_run == n {
        return BchBound {
            bound: n + 1,
            run_start: 0,
            run: n,
            linear_run,
        };
    }
    // start scanning just after a gap so every wrapped run is seen whole
    let gap = present.iter().position(|&p| !p).unwrap();
    let (mut best, mut best_start) = (0, 0u64);
    let mut cur = 0;
    for step in 1..=n {
        let i = (gap + step) % n;
        if present[i] {
            cur += 1;
            let start = ((i + n + 1 - cur) % n) as u64;
            if cur > best || (cur == best && start < best_start) {
                best = cur;
                best_start = start;
            }
        } else {
            cur = 0;
        }
    }
    BchBound {
        bound: best + 1,
        run_start: best_start,
        run: best,
        linear_run,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomials_of_q41_n4() {
        let fam = CodeFamily::new(41, 4).unwrap();
        let f = fam.field();
        assert_eq!(
            fam.minimal_polynomial(0),
            &Polynomial::from_ints(f, &[-1, 1])
        );
        assert_eq!(
            fam.minimal_polynomial(8),
            &Polynomial::from_ints(f, &[1, 1])
        );
        let m1 = fam.minimal_polynomial(1);
        assert_eq!(m1.degree(), Some(2));
        assert_eq!(fam.roots_of(m1), BTreeSet::from([1, 9]));
    }

    #[test]
    fn factorization_q5_n3() {
        let fam = CodeFamily::new(5, 3).unwrap();
        let degrees: Vec<usize> = fam
            .factorization()
            .unwrap()
            .iter()
            .map(|(_, m)| m.degree().unwrap())
            .collect();
        assert_eq!(degrees, vec![1, 2, 1, 2, 1, 1]);
    }

    #[test]
    fn duality_basics() {
        let fam = CodeFamily::new(5, 3).unwrap();
        let whole = fam.code_from_cosets(&[]);
        assert_eq!(whole.dimension(), 8);
        let zero = whole.dual();
        assert_eq!(zero.dimension(), 0);
        assert_eq!(zero.generator(), &fam.x_pow_minus_one());
        let c = fam.code_from_residues(&[1, 2]);
        assert_eq!(c.dual().dual(), c);
        assert_eq!(c.dimension() + c.dual().dimension(), 8);
        assert_eq!(fam.roots_of(c.dual().generator()), *c.dual().roots());
    }

    #[test]
    fn dual_containment_cases() {
        let fam = CodeFamily::new(5, 3).unwrap();
        let t = fam.table();
        let with_one = fam.code_from_residues(&[0, 1]);
        let res = is_dual_containing(&with_one, t).unwrap();
        assert!(!res.holds);
        assert_eq!(res.violations, vec![0]);
        assert!(
            is_dual_containing(&fam.code_from_residues(&[1, 2]), t)
                .unwrap()
                .holds
        );
        assert!(
            !is_dual_containing(&fam.code_from_residues(&[1, 3]), t)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn subcodes() {
        let fam = CodeFamily::new(5, 3).unwrap();
        let a = fam.code_from_residues(&[1, 2]);
        let b = fam.code_from_residues(&[2]);
        assert!(is_subcode(&a, &a).unwrap());
        assert!(is_subcode(&a, &b).unwrap());
        assert!(!is_subcode(&b, &a).unwrap());
    }

    #[test]
    fn bch_runs() {
        let fam = CodeFamily::new(41, 4).unwrap();
        let c = fam.code_from_residues(&[1, 3, 2, 4, 6]);
        assert_eq!(
            c.roots().iter().copied().collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 6, 9, 11]
        );
        let b = bch_bound(&c);
        assert_eq!((b.bound, b.run_start, b.run), (5, 1, 4));
        // {15, 0, 1} wraps around
        let w = fam.code_from_residues(&[15, 0, 1]);
        let bw = bch_bound(&w);
        assert_eq!((bw.run, bw.run_start, bw.linear_run), (3, 15, 2));
    }

    #[test]
    fn matrices_are_orthogonal() {
        let fam = CodeFamily::new(5, 3).unwrap();
        let c = fam.code_from_residues(&[1, 2]);
        let t = FieldTable::new(fam.field()).unwrap();
        let g = c.generator_matrix().unwrap();
        let h = c.parity_check_matrix().unwrap();
        assert_eq!((g.rows(), h.rows()), (5, 3));
        assert!(g.mul_transpose(&h, &t).is_zero());
    }
}
