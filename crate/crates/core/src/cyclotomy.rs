//! q-cyclotomic cosets modulo `N = 2^n`.
//!
//! Two independent constructions are provided. [`cosets_bruteforce`] walks
//! the orbits of multiplication by `q`. [`cosets_closed_form`] never computes
//! an orbit: it lists the representatives `0`, `2^{n-1}` and `S 2^{n-r}` for
//! `S` in the signed-power sets [`s_r`], and fills each coset from the size
//! formula [`coset_size`]. The two must agree exactly.
//!
//! Cosets are identified by their least element and kept sorted by it.

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};

/// `q = 1 + 2^z c` with `c` odd and `z >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZDecomposition {
    pub q: u64,
    pub z: u32,
    pub c: u64,
}

pub fn z_decompose(q: u64) -> Result<ZDecomposition> {
    match arith::prime_power(q) {
        Some((p, _)) if p != 2 => {}
        _ => return Err(Error::NotPrimePower(q)),
    }
    if q % 4 != 1 {
        return Err(Error::QNotOneModFour(q));
    }
    let z = (q - 1).trailing_zeros();
    Ok(ZDecomposition {
        q,
        z,
        c: (q - 1) >> z,
    })
}

/// Size of every coset at level `r`, i.e. of `C_{S 2^{n-r}}`: the order of
/// `q` modulo `2^r`, which is `2^{r-z}` for `r > z` and `1` otherwise.
pub fn coset_size(n: u32, z: u32, r: u32) -> u64 {
    debug_assert!(r <= n);
    if r > z {
        1 << (r - z)
    } else {
        1
    }
}

/// `+3^j` or `-3^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignedPower {
    pub negative: bool,
    pub power: u32,
}

impl SignedPower {
    /// `(+-3^power mod 2^bits)`.
    pub fn residue(&self, bits: u32) -> u64 {
        let m = 1u64 << bits;
        let mut v = 1u64;
        for _ in 0..self.power {
            v = v * 3 % m;
        }
        if self.negative {
            (m - v) % m
        } else {
            v
        }
    }
}

/// The signed representatives at level `r`: `+-3^j` for
/// `0 <= j < 2^{min(r, z) - 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SrSet {
    pub r: u32,
    pub members: Vec<SignedPower>,
}

pub fn s_r(z: u32, r: u32) -> SrSet {
    assert!(r >= 2 && z >= 2);
    let count = 1u32 << (r.min(z) - 2);
    let members = [false, true]
        .into_iter()
        .flat_map(|negative| (0..count).map(move |power| SignedPower { negative, power }))
        .collect();
    SrSet { r, members }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coset {
    pub rep: u64,
    /// Sorted ascending; `elements[0] == rep`.
    pub elements: Vec<u64>,
}

impl Coset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, s: u64) -> bool {
        self.elements.binary_search(&s).is_ok()
    }
}

/// Where a coset sits in the closed-form classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CosetLabel {
    Zero,
    Half,
    /// `C_{S 2^{n-r}}` with `S = +-3^power`.
    Scaled {
        r: u32,
        negative: bool,
        power: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableSource {
    BruteForce,
    ClosedForm,
    /// Closed form requested for `n < 3`; orbits were used instead.
    BruteForceFallback,
}

/// Partition of `Z_N` into q-cyclotomic cosets with the `s -> -s` pairing.
#[derive(Clone, Debug)]
pub struct CosetTable {
    n: u32,
    len: u64,
    q: u64,
    z: Option<u32>,
    cosets: Vec<Coset>,
    rep_of: Vec<usize>,
    pairing: Vec<usize>,
    source: TableSource,
}

impl PartialEq for CosetTable {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len
            && self.q == other.q
            && self.cosets == other.cosets
            && self.pairing == other.pairing
    }
}

impl CosetTable {
    fn from_cosets(
        n: u32,
        q: u64,
        mut cosets: Vec<Coset>,
        source: TableSource,
    ) -> Result<CosetTable> {
        let len = 1u64 << n;
        for c in cosets.iter_mut() {
            c.elements.sort_unstable();
            c.rep = c.elements[0];
        }
        cosets.sort_by_key(|c| c.rep);
        let mut rep_of = vec![usize::MAX; len as usize];
        for (idx, c) in cosets.iter().enumerate() {
            for &s in &c.elements {
                let slot = rep_of
                    .get_mut(s as usize)
                    .ok_or_else(|| Error::Verification(format!("residue {s} out of range")))?;
                if *slot != usize::MAX {
                    return Err(Error::Verification(format!(
                        "residue {s} lies in two cosets"
                    )));
                }
                *slot = idx;
            }
        }
        if let Some(s) = rep_of.iter().position(|&i| i == usize::MAX) {
            return Err(Error::Verification(format!("residue {s} is not covered")));
        }
        let pairing = cosets
            .iter()
            .map(|c| rep_of[((len - c.rep) % len) as usize])
            .collect();
        let z = (q % 4 == 1).then(|| (q - 1).trailing_zeros());
        Ok(CosetTable {
            n,
            len,
            q,
            z,
            cosets,
            rep_of,
            pairing,
            source,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The modulus `N = 2^n`.
    pub fn modulus(&self) -> u64 {
        self.len
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn source(&self) -> TableSource {
        self.source
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    pub fn coset(&self, idx: usize) -> &Coset {
        &self.cosets[idx]
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset containing `s mod N`.
    pub fn index_of(&self, s: u64) -> usize {
        self.rep_of[(s % self.len) as usize]
    }

    /// Index of `C_{-s}` for the coset `C_s` at `idx`.
    pub fn negate(&self, idx: usize) -> usize {
        self.pairing[idx]
    }

    pub fn is_self_paired(&self, idx: usize) -> bool {
        self.pairing[idx] == idx
    }

    /// Level `r` of a coset: its representative is an odd multiple of
    /// `2^{n-r}`. The zero coset has level 0.
    pub fn level(&self, idx: usize) -> u32 {
        let rep = self.cosets[idx].rep;
        if rep == 0 {
            0
        } else {
            self.n - rep.trailing_zeros()
        }
    }

    pub fn label(&self, idx: usize) -> Option<CosetLabel> {
        let z = self.z?;
        let rep = self.cosets[idx].rep;
        if rep == 0 {
            return Some(CosetLabel::Zero);
        }
        let r = self.level(idx);
        if r == 1 {
            return Some(CosetLabel::Half);
        }
        let m = r.min(z);
        let v = (rep >> (self.n - r)) & ((1 << m) - 1);
        for power in 0..(1u32 << (m - 2)) {
            for negative in [false, true] {
                if (SignedPower { negative, power }).residue(m) == v {
                    return Some(CosetLabel::Scaled { r, negative, power });
                }
            }
        }
        None
    }

    /// Unordered `{C_s, C_{-s}}` pairs with `C_s != C_{-s}`, as
    /// `(plus, minus)`. The plus member is the one labelled `+3^j`; without a
    /// label the smaller representative is used. Sorted by plus representative.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.len())
            .filter(|&i| !self.is_self_paired(i))
            .filter(|&i| match self.label(i) {
                Some(CosetLabel::Scaled { negative, .. }) => !negative,
                _ => i < self.negate(i),
            })
            .map(|i| (i, self.negate(i)))
            .collect();
        out.sort_by_key(|&(p, _)| self.cosets[p].rep);
        out
    }
}

fn check_n(n: u32) -> Result<()> {
    if n > 24 {
        Err(Error::InvalidLength(n))
    } else {
        Ok(())
    }
}

/// Orbits of `s -> s q mod 2^n`.
pub fn cosets_bruteforce(q: u64, n: u32) -> Result<CosetTable> {
    if q % 2 == 0 {
        return Err(Error::NotPrimePower(q));
    }
    check_n(n)?;
    let len = 1u64 << n;
    let qm = q % len;
    let mut seen = vec![false; len as usize];
    let mut cosets = Vec::new();
    for s in 0..len {
        if seen[s as usize] {
            continue;
        }
        let mut elements = Vec::new();
        let mut t = s;
        loop {
            seen[t as usize] = true;
            elements.push(t);
            t = ((t as u128 * qm as u128) % len as u128) as u64;
            if t == s {
                break;
            }
        }
        cosets.push(Coset { rep: s, elements });
    }
    CosetTable::from_cosets(n, q, cosets, TableSource::BruteForce)
}

/// Classification-based construction: representatives from [`s_r`],
/// coset sizes from [`coset_size`]. Falls back to orbits when `n < 3`.
pub fn cosets_closed_form(q: u64, n: u32) -> Result<CosetTable> {
    let d = z_decompose(q)?;
    check_n(n)?;
    if n < 3 {
        let mut t = cosets_bruteforce(q, n)?;
        t.source = TableSource::BruteForceFallback;
        return Ok(t);
    }
    let len = 1u64 << n;
    let qm = q % len;
    let mut cosets = vec![
        Coset {
            rep: 0,
            elements: vec![0],
        },
        Coset {
            rep: len / 2,
            elements: vec![len / 2],
        },
    ];
    for r in 2..=n {
        let size = coset_size(n, d.z, r);
        for s in s_r(d.z, r).members {
            let rep = (s.residue(n) << (n - r)) % len;
            let mut elements = Vec::with_capacity(size as usize);
            let mut t = rep;
            for _ in 0..size {
                elements.push(t);
                t = ((t as u128 * qm as u128) % len as u128) as u64;
            }
            cosets.push(Coset { rep, elements });
        }
    }
    CosetTable::from_cosets(n, q, cosets, TableSource::ClosedForm)
}
