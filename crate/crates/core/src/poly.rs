//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored in ascending degree with no trailing zeros; the
//! zero polynomial has no coefficients at all.
//!
//! # Order of a polynomial
//!
//! [`Polynomial::order_of`] returns the least `e` with `f(x) | x^e - 1`. A
//! literal reading of "`f(x) | x^e`" would only be satisfiable by powers of
//! `x`, so the standard `x^e - 1` reading is used throughout. Any factor
//! `x^tau` is stripped first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

#[derive(Clone, Debug)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Polynomial {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    /// Coefficients given as integers, mapped into the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Polynomial {
        Polynomial::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Field) -> Polynomial {
        Polynomial {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Polynomial {
        Polynomial::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: FieldElement) -> Polynomial {
        Polynomial::new(field, vec![c])
    }

    pub fn x(field: &Field) -> Polynomial {
        Polynomial::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: &Field, c: FieldElement, k: usize) -> Polynomial {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Polynomial::new(field, coeffs)
    }

    /// `x - root`.
    pub fn linear(field: &Field, root: &FieldElement) -> Polynomial {
        Polynomial::new(field, vec![field.neg(root), field.one()])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(field: &Field, n: usize) -> Polynomial {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[0] = field.from_int(-1);
        coeffs[n] = field.add(&coeffs[n], &field.one());
        Polynomial::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial::new(
            &self.field,
            self.coeffs.iter().map(|a| self.field.mul(a, c)).collect(),
        )
    }

    /// Rescaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("leading coefficient is nonzero")),
        }
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| {
            self.field.add(&self.field.mul(&acc, x), c)
        })
    }

    fn check_field(&self, other: &Polynomial) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_field(d)?;
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Polynomial::zero(f), self.clone()));
        };
        let lead_inv = f.inv(&d.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let c = &rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let qc = f.mul(c, &lead_inv);
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] = f.sub(&rem[i + j], &f.mul(&qc, dj));
                }
            }
            quot[i] = qc;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(f, quot), Polynomial::new(f, rem)))
    }

    pub fn rem(&self, d: &Polynomial) -> Result<Polynomial> {
        Ok(self.divmod(d)?.1)
    }

    /// Quotient `self / d`, failing unless the division is exact.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.divmod(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisor(format!("{d} does not divide {self}")))
        }
    }

    /// `self | other`. The zero polynomial only divides zero.
    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("same field, nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let g = self.gcd(other);
        (&self.div_exact(&g).expect("gcd divides") * other).monic()
    }

    pub fn mul_mod(&self, other: &Polynomial, m: &Polynomial) -> Result<Polynomial> {
        (self * other).rem(m)
    }

    pub fn pow_mod(&self, mut e: u128, m: &Polynomial) -> Result<Polynomial> {
        let mut base = self.rem(m)?;
        let mut acc = Polynomial::one(&self.field).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m)?;
            }
        }
        Ok(acc)
    }

    /// `h(0)^{-1} x^{deg h} h(1/x)`: coefficient `i` of the result is
    /// `h(0)^{-1} h_{deg - i}`. The result is always monic.
    pub fn reciprocal(&self) -> Result<Polynomial> {
        let c0 = self
            .coeffs
            .first()
            .filter(|c| !c.is_zero())
            .ok_or(Error::ZeroConstantTerm)?;
        let inv = self.field.inv(c0)?;
        Ok(Polynomial::new(
            &self.field,
            self.coeffs
                .iter()
                .rev()
                .map(|c| self.field.mul(c, &inv))
                .collect(),
        ))
    }

    /// Whether the reciprocal equals `self` up to monic normalization.
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(self.reciprocal()? == self.monic())
    }

    /// Splits off the largest power of `x`: returns `(tau, g)` with
    /// `self = x^tau g` and `g(0) != 0`.
    pub fn strip_x_power(&self) -> (usize, Polynomial) {
        let tau = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (
            tau,
            Polynomial::new(&self.field, self.coeffs[tau..].to_vec()),
        )
    }

    /// Least `e | n` with `f | x^e - 1`, after stripping any `x^tau` factor.
    ///
    /// The stripped polynomial must divide `x^n - 1`, so the order is one of
    /// the divisors of `n`; they are tried in ascending order.
    pub fn order_of(&self, n: u64) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::NotDivisor("the zero polynomial has no order".into()));
        }
        let (_, g) = self.strip_x_power();
        let xn1 = Polynomial::x_pow_minus_one(&self.field, n as usize);
        if !g.divides(&xn1) {
            return Err(Error::NotDivisor(format!("{g} does not divide x^{n} - 1")));
        }
        if g.degree() == Some(0) {
            return Ok(1);
        }
        let x = Polynomial::x(&self.field);
        let one = Polynomial::one(&self.field);
        for e in arith::divisors(n) {
            if x.pow_mod(e as u128, &g)? == one {
                return Ok(e);
            }
        }
        unreachable!("x^n = 1 modulo a divisor of x^n - 1")
    }

    /// Rabin's irreducibility test over a field of order `Q`: `f` of degree
    /// `m` is irreducible iff `x^{Q^m} = x (mod f)` and
    /// `gcd(x^{Q^{m/l}} - x, f) = 1` for every prime `l | m`.
    pub fn is_irreducible(&self) -> bool {
        let Some(m) = self.degree() else { return false };
        if m == 0 {
            return false;
        }
        if m == 1 {
            return true;
        }
        let f = self.monic();
        let q = self.field.order();
        let x = Polynomial::x(&self.field);
        // frob[k] = x^{Q^k} mod f
        let mut frob = vec![x.rem(&f).unwrap()];
        for k in 1..=m {
            let next = frob[k - 1].pow_mod(q, &f).unwrap();
            frob.push(next);
        }
        if frob[m] != x.rem(&f).unwrap() {
            return false;
        }
        arith::prime_divisors(m as u64)
            .into_iter()
            .all(|l| (&frob[m / l as usize] - &x).gcd(&f).is_one())
    }

    /// Distinct roots in the coefficient field, sorted by element index.
    ///
    /// Takes `gcd(x^Q - x, f)` and splits it with the Cantor-Zassenhaus
    /// trick `gcd((x + d)^{(Q-1)/2} - 1, g)`, scanning shifts `d` in index
    /// order so the procedure is deterministic. Requires odd characteristic.
    pub fn roots(&self) -> Vec<FieldElement> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let q = self.field.order();
        let x = Polynomial::x(&self.field);
        let xq = x.pow_mod(q, &f).unwrap();
        let split = (&xq - &x).gcd(&f);
        let mut out = Vec::new();
        self.split_linear(&split, q, &mut out);
        out.sort_by_key(|r| self.field.index_of(r));
        out
    }

    fn split_linear(&self, g: &Polynomial, q: u128, out: &mut Vec<FieldElement>) {
        let f = &self.field;
        match g.degree() {
            None | Some(0) => {}
            Some(1) => {
                let root = f.neg(&f.div(&g.coeffs[0], &g.coeffs[1]).unwrap());
                out.push(root);
            }
            Some(d) => {
                let one = Polynomial::one(f);
                for index in 0..q {
                    let shifted = Polynomial::new(f, vec![f.element(index), f.one()]);
                    let h = &shifted.pow_mod((q - 1) / 2, g).unwrap() - &one;
                    let c = h.gcd(g);
                    let cd = c.degree().unwrap_or(0);
                    if cd > 0 && cd < d {
                        let rest = g.div_exact(&c).unwrap();
                        self.split_linear(&c, q, out);
                        self.split_linear(&rest, q, out);
                        return;
                    }
                }
                unreachable!("some shift separates the roots");
            }
        }
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form `c0 + c1*x + ... + ck*x^k`, zero terms omitted.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let c = self.field.format(c);
            match i {
                0 => write!(out, "{c}")?,
                1 => write!(out, "{c}*x")?,
                _ => write!(out, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.field == rhs.field, "field mismatch");
        let f = &self.field;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            f,
            (0..len)
                .map(|i| f.add(&self.coeff(i), &rhs.coeff(i)))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.field == rhs.field, "field mismatch");
        let f = &self.field;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            f,
            (0..len)
                .map(|i| f.sub(&self.coeff(i), &rhs.coeff(i)))
                .collect(),
        )
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(
            &self.field,
            self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        )
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.field == rhs.field, "field mismatch");
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = f.add(&out[i + j], &f.mul(a, b));
                }
            }
        }
        Polynomial::new(f, out)
    }
}
