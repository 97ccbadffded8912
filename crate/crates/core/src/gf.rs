//! Exact arithmetic in GF(p), GF(p^a) and the extension tower that hosts a
//! primitive `N`-th root of unity.
//!
//! A [`Field`] is a cheap, clonable handle to an immutable [`FieldSpec`].
//! Elements ([`FieldElement`]) are plain coefficient vectors; they carry no
//! back-reference to their field, so every operation goes through the field
//! handle: `field.mul(&x, &y)`.
//!
//! Elements of GF(p^a) are residues modulo a monic irreducible polynomial of
//! degree `a` over GF(p), stored in ascending degree. Prime fields use the
//! degree-one modulus `y`, so the same code path covers both cases.

use std::fmt;
use std::sync::Arc;

use smallvec::{smallvec, SmallVec};

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub(crate) type Coeffs = SmallVec<[u32; 4]>;

/// Characteristic, extension degree and defining modulus of a finite field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    degree: usize,
    // monic, ascending, len == degree + 1
    modulus: Vec<u32>,
}

/// Shared handle to a finite field of odd characteristic.
#[derive(Clone)]
pub struct Field {
    spec: Arc<FieldSpec>,
}

/// An element of some [`Field`]: `degree` residues mod `p`, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub(crate) Coeffs);

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.spec, &other.spec) || *self.spec == *other.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.spec.p, self.spec.degree)
    }
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        if p < 3 || p > u32::MAX as u64 || !arith::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Field {
            spec: Arc::new(FieldSpec {
                p: p as u32,
                degree: 1,
                modulus: vec![0, 1],
            }),
        })
    }

    /// GF(p^a) defined by an explicit monic modulus (ascending coefficients).
    pub fn with_modulus(p: u64, modulus: &[u32]) -> Result<Field> {
        let prime = Field::prime(p)?;
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::BadModulus);
        }
        if let Some(&bad) = modulus.iter().find(|&&c| c as u64 >= p) {
            return Err(Error::CoefficientRange {
                value: bad as u64,
                p: p as u32,
            });
        }
        let poly = Polynomial::from_ints(
            &prime,
            &modulus.iter().map(|&c| c as i64).collect::<Vec<_>>(),
        );
        if !poly.is_irreducible() {
            return Err(Error::ReducibleModulus(p as u32));
        }
        Ok(Field::from_spec_unchecked(p as u32, modulus.to_vec()))
    }

    /// GF(p^a) with the first irreducible modulus of [`find_irreducible`].
    pub fn with_degree(p: u64, a: usize) -> Result<Field> {
        if a == 1 {
            return Field::prime(p);
        }
        let modulus = find_irreducible(p, a, 0)?;
        Ok(Field::from_spec_unchecked(
            p as u32,
            modulus.coeffs().iter().map(|c| c.0[0]).collect(),
        ))
    }

    /// GF(q) for an odd prime power `q`.
    pub fn from_order(q: u64) -> Result<Field> {
        match arith::prime_power(q) {
            Some((p, a)) if p != 2 => Field::with_degree(p, a as usize),
            _ => Err(Error::NotPrimePower(q)),
        }
    }

    fn from_spec_unchecked(p: u32, modulus: Vec<u32>) -> Field {
        Field {
            spec: Arc::new(FieldSpec {
                p,
                degree: modulus.len() - 1,
                modulus,
            }),
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p as u64
    }

    pub fn degree(&self) -> usize {
        self.spec.degree
    }

    /// The defining modulus, or `None` for a prime field.
    pub fn modulus(&self) -> Option<&[u32]> {
        (self.spec.degree > 1).then_some(&self.spec.modulus[..])
    }

    /// Number of elements, if it fits in a `u128`.
    pub fn checked_order(&self) -> Option<u128> {
        (self.spec.p as u128).checked_pow(self.spec.degree as u32)
    }

    pub fn order(&self) -> u128 {
        self.checked_order().expect("field order overflows u128")
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(smallvec![0; self.spec.degree])
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer under the prime-subfield embedding.
    pub fn from_int(&self, v: i64) -> FieldElement {
        let p = self.spec.p as i64;
        let mut e = self.zero();
        e.0[0] = v.rem_euclid(p) as u32;
        e
    }

    /// Builds an element from at most `degree` residues.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.spec.degree {
            return Err(Error::BadModulus);
        }
        let mut e = self.zero();
        for (slot, &c) in e.0.iter_mut().zip(coeffs) {
            if c >= self.spec.p {
                return Err(Error::CoefficientRange {
                    value: c as u64,
                    p: self.spec.p,
                });
            }
            *slot = c;
        }
        Ok(e)
    }

    /// The class of `y` modulo the defining polynomial (zero for prime fields).
    pub fn adjoined_root(&self) -> FieldElement {
        let mut e = self.zero();
        if self.spec.degree > 1 {
            e.0[1] = 1;
        } else {
            e.0[0] = (self.spec.p - self.spec.modulus[0]) % self.spec.p;
        }
        e
    }

    /// Element with base-`p` digits of `index` as coefficients.
    pub fn element(&self, mut index: u128) -> FieldElement {
        let p = self.spec.p as u128;
        let mut e = self.zero();
        for slot in e.0.iter_mut() {
            *slot = (index % p) as u32;
            index /= p;
        }
        e
    }

    /// Inverse of [`Field::element`].
    pub fn index_of(&self, e: &FieldElement) -> u128 {
        let p = self.spec.p as u128;
        e.0.iter().rev().fold(0u128, |acc, &c| acc * p + c as u128)
    }

    pub fn is_one(&self, e: &FieldElement) -> bool {
        e.0[0] == 1 && e.0[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let p = self.spec.p;
        FieldElement(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| {
                    let s = a + b;
                    if s >= p {
                        s - p
                    } else {
                        s
                    }
                })
                .collect(),
        )
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let p = self.spec.p;
        FieldElement(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| if a >= b { a - b } else { a + p - b })
                .collect(),
        )
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        let p = self.spec.p;
        FieldElement(
            x.0.iter()
                .map(|&a| if a == 0 { 0 } else { p - a })
                .collect(),
        )
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let p = self.spec.p as u64;
        let a = self.spec.degree;
        if a == 1 {
            return FieldElement(smallvec![((x.0[0] as u64 * y.0[0] as u64) % p) as u32]);
        }
        let mut t: SmallVec<[u64; 8]> = smallvec![0; 2 * a - 1];
        for (i, &xi) in x.0.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.0.iter().enumerate() {
                t[i + j] = (t[i + j] + xi as u64 * yj as u64) % p;
            }
        }
        let m = &self.spec.modulus;
        for i in (a..2 * a - 1).rev() {
            let c = t[i];
            if c == 0 {
                continue;
            }
            // y^a = -(m_0 + ... + m_{a-1} y^{a-1})
            for j in 0..a {
                if m[j] != 0 {
                    t[i - a + j] = (t[i - a + j] + c * (p - m[j] as u64)) % p;
                }
            }
            t[i] = 0;
        }
        FieldElement(t[..a].iter().map(|&c| c as u32).collect())
    }

    pub fn square(&self, x: &FieldElement) -> FieldElement {
        self.mul(x, x)
    }

    pub fn pow(&self, x: &FieldElement, mut e: u128) -> FieldElement {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if self.spec.degree == 1 {
            return Ok(FieldElement(smallvec![mod_inverse(x.0[0], self.spec.p)]));
        }
        Ok(self.pow(x, self.order() - 2))
    }

    pub fn div(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// Canonical text form: `c` for prime fields, `(c0,c1,...)` otherwise.
    pub fn format(&self, e: &FieldElement) -> String {
        if self.spec.degree == 1 {
            e.0[0].to_string()
        } else {
            let parts: Vec<String> = e.0.iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }

    /// Every element in index order. Only sensible for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

/// First monic irreducible polynomial of degree `m` over GF(p).
///
/// Candidates are enumerated by reading a counter, starting at `seed`, as the
/// base-`p` digits of the lower coefficients (constant term first). The
/// enumeration is fixed, so the result is reproducible.
pub fn find_irreducible(p: u64, m: usize, seed: u128) -> Result<Polynomial> {
    let field = Field::prime(p)?;
    if m == 0 {
        return Err(Error::BadModulus);
    }
    let mut digits = vec![0u32; m];
    let mut s = seed;
    for d in digits.iter_mut() {
        *d = (s % p as u128) as u32;
        s /= p as u128;
    }
    loop {
        let mut coeffs: Vec<FieldElement> =
            digits.iter().map(|&d| FieldElement(smallvec![d])).collect();
        coeffs.push(field.one());
        let candidate = Polynomial::new(&field, coeffs);
        if candidate.is_irreducible() {
            return Ok(candidate);
        }
        // increment with carry; wraps to zero after p^m candidates
        for d in digits.iter_mut() {
            *d += 1;
            if (*d as u64) < p {
                break;
            }
            *d = 0;
        }
    }
}

/// Base field GF(q) together with an extension GF(q^t) = GF(p^{a t}).
///
/// The top field is built directly over GF(p) with a single modulus. The
/// base field is embedded by sending its adjoined root `y` to a root `theta`
/// of the base modulus inside the top field (the root of least index).
#[derive(Clone, Debug)]
pub struct Tower {
    base: Field,
    top: Field,
    degree: usize,
    // theta^0, ..., theta^{a-1}
    basis: Vec<FieldElement>,
}

impl Tower {
    pub fn new(base: &Field, t: usize) -> Result<Tower> {
        if t == 0 {
            return Err(Error::BadModulus);
        }
        let a = base.degree();
        let p = base.characteristic();
        let top_degree = a * t;
        if (p as u128).checked_pow(top_degree as u32).is_none() {
            return Err(Error::FieldTooLarge(format!("GF({p}^{top_degree})")));
        }
        let top = if t == 1 {
            base.clone()
        } else {
            Field::with_degree(p, top_degree)?
        };
        let theta = if t == 1 {
            base.adjoined_root()
        } else if a == 1 {
            top.zero()
        } else {
            let modulus: Vec<FieldElement> = base
                .spec
                .modulus
                .iter()
                .map(|&c| top.from_int(c as i64))
                .collect();
            let roots = Polynomial::new(&top, modulus).roots();
            roots.into_iter().next().ok_or_else(|| {
                Error::Verification("base modulus has no root in the top field".into())
            })?
        };
        let mut basis = Vec::with_capacity(a);
        let mut acc = top.one();
        for _ in 0..a {
            basis.push(acc.clone());
            acc = top.mul(&acc, &theta);
        }
        Ok(Tower {
            base: base.clone(),
            top,
            degree: t,
            basis,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn top(&self) -> &Field {
        &self.top
    }

    /// Extension degree `t` of the top field over the base field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn embed(&self, c: &FieldElement) -> FieldElement {
        let mut acc = self.top.zero();
        for (ci, b) in c.0.iter().zip(&self.basis) {
            if *ci != 0 {
                let term = self.top.mul(&self.top.from_int(*ci as i64), b);
                acc = self.top.add(&acc, &term);
            }
        }
        acc
    }

    /// Frobenius fixed-point test `x^q = x`.
    pub fn is_in_subfield(&self, x: &FieldElement) -> bool {
        self.top.pow(x, self.base.order()) == *x
    }

    /// Preimage of `x` under [`Tower::embed`], found by solving the linear
    /// system `sum c_i theta^i = x` over GF(p).
    pub fn project(&self, x: &FieldElement) -> Result<FieldElement> {
        let p = self.base.characteristic();
        let a = self.basis.len();
        let rows = self.top.degree();
        // augmented rows x (a + 1)
        let mut m: Vec<Vec<u64>> = (0..rows)
            .map(|r| {
                let mut row: Vec<u64> = self.basis.iter().map(|b| b.0[r] as u64).collect();
                row.push(x.0[r] as u64);
                row
            })
            .collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::with_capacity(a);
        for col in 0..a {
            let Some(sel) = (pivot_row..rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(pivot_row, sel);
            let inv = mod_inverse(m[pivot_row][col] as u32, p as u32) as u64;
            for v in m[pivot_row].iter_mut() {
                *v = *v * inv % p;
            }
            for r in 0..rows {
                if r != pivot_row && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in 0..=a {
                        m[r][c] = (m[r][c] + (p - factor) * m[pivot_row][c]) % p;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        if m[pivot_row..].iter().any(|row| row[a] != 0) {
            return Err(Error::NotInSubfield);
        }
        let mut out = self.base.zero();
        for (r, &col) in pivots.iter().enumerate() {
            out.0[col] = m[r][a] as u32;
        }
        Ok(out)
    }

    pub fn embed_poly(&self, f: &Polynomial) -> Polynomial {
        Polynomial::new(
            &self.top,
            f.coeffs().iter().map(|c| self.embed(c)).collect(),
        )
    }

    pub fn project_poly(&self, f: &Polynomial) -> Result<Polynomial> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| self.project(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(&self.base, coeffs))
    }

    /// An element of multiplicative order exactly `n` in the top field.
    ///
    /// Top-field elements are scanned in index order; each candidate is
    /// raised to `(|top| - 1) / n` and the first power of exact order `n` wins.
    pub fn primitive_nth_root(&self, n: u64) -> Result<FieldElement> {
        let group = self.top.order() - 1;
        if n == 0 || group % n as u128 != 0 {
            return Err(Error::NoRootOfUnity {
                n,
                group_order: group.to_string(),
            });
        }
        if n == 1 {
            return Ok(self.top.one());
        }
        let cofactor = group / n as u128;
        let primes = arith::prime_divisors(n);
        for index in 1..=group {
            let beta = self.top.pow(&self.top.element(index), cofactor);
            if primes
                .iter()
                .all(|&l| !self.top.is_one(&self.top.pow(&beta, (n / l) as u128)))
            {
                return Ok(beta);
            }
        }
        unreachable!("the multiplicative group is cyclic")
    }
}

/// Dense lookup tables for a small field, used by the matrix routines.
///
/// Elements are encoded by their [`Field::index_of`] value.
#[derive(Clone, Debug)]
pub struct FieldTable {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl FieldTable {
    pub const MAX_ORDER: u128 = 1024;

    pub fn new(field: &Field) -> Result<FieldTable> {
        let order = field.checked_order().unwrap_or(u128::MAX);
        if order > Self::MAX_ORDER {
            return Err(Error::FieldTooLarge(format!(
                "tables need |F| <= {}",
                Self::MAX_ORDER
            )));
        }
        let order = order as usize;
        let elems: Vec<FieldElement> = field.elements().collect();
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                add[i * order + j] = field.index_of(&field.add(&elems[i], &elems[j])) as u16;
                mul[i * order + j] = field.index_of(&field.mul(&elems[i], &elems[j])) as u16;
            }
        }
        let neg = elems
            .iter()
            .map(|e| field.index_of(&field.neg(e)) as u16)
            .collect();
        let inv = elems
            .iter()
            .map(|e| field.inv(e).map(|v| field.index_of(&v) as u16).unwrap_or(0))
            .collect();
        Ok(FieldTable {
            order,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    /// Inverse; zero maps to zero.
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }
}
