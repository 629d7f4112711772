//! Exact Laurent polynomials over arbitrary-precision integers.
//!
//! [`LaurentZ`] lives in `Z[z, z^-1]` and is the coefficient ring of the
//! Hecke algebra. [`LaurentVZ`] lives in `Z[v^±1, z^±1]` and holds framed and
//! unframed HOMFLY values. Both keep a canonical sparse representation: a
//! sorted map with no zero coefficients, so structural equality is value
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A Laurent polynomial in `z` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentZ {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The variable `z`.
    pub fn z() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl AddAssign<&LaurentZ> for LaurentZ {
    fn add_assign(&mut self, rhs: &LaurentZ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentZ> for LaurentZ {
    fn sub_assign(&mut self, rhs: &LaurentZ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentZ {
    type Output = LaurentZ;
    fn add(self, rhs: &LaurentZ) -> LaurentZ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentZ {
    type Output = LaurentZ;
    fn sub(self, rhs: &LaurentZ) -> LaurentZ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentZ {
    type Output = LaurentZ;
    fn neg(self) -> LaurentZ {
        LaurentZ {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentZ {
    type Output = LaurentZ;
    fn mul(self, rhs: &LaurentZ) -> LaurentZ {
        let mut out = LaurentZ::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monos = self.terms.iter().map(|(e, c)| (c, monomial_name(&[("z", *e)])));
        write_sum(f, monos)
    }
}

/// A Laurent polynomial in `v` and `z` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentVZ {
    // keyed by (v-exponent, z-exponent); BTreeMap order is the canonical
    // serialization order
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentVZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(v: i64, z: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(v, z, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for ((v, z), c) in terms {
            p.add_term(v, z, c.into());
        }
        p
    }

    /// `v^k * p(z)`.
    pub fn from_z(p: &LaurentZ, v_exp: i64) -> Self {
        Self {
            terms: p.terms().map(|(e, c)| ((v_exp, e), c.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: i64, z: i64) -> BigInt {
        self.terms.get(&(v, z)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms ordered by ascending v-exponent, then ascending z-exponent.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_v_degree(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.0).min()
    }

    pub fn max_v_degree(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn min_z_degree(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.1).min()
    }

    pub fn max_z_degree(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// The polynomial in `z` multiplying `v^k`.
    pub fn coeff_of_v(&self, k: i64) -> LaurentZ {
        LaurentZ::from_terms(
            self.terms
                .range((k, i64::MIN)..=(k, i64::MAX))
                .map(|((_, z), c)| (*z, c.clone())),
        )
    }

    /// Multiply by `v^a z^b`.
    pub fn shift(&self, v: i64, z: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + v, b + z), c.clone()))
                .collect(),
        }
    }

    pub fn scale_z(&self, p: &LaurentZ) -> Self {
        self * &LaurentVZ::from_z(p, 0)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `((v^-1 - v) / z)^k`, the framed value of the `(k+1)`-component
    /// crossing-free unlink.
    pub fn delta_pow(k: u32) -> Self {
        let delta = LaurentVZ::from_terms([((-1, -1), 1), ((1, -1), -1)]);
        delta.pow(k)
    }

    /// The substitution `v -> -v^-1`, which sends the HOMFLY polynomial of a
    /// link to that of its mirror image.
    pub fn mirror(&self) -> Self {
        LaurentVZ::from_terms(self.terms.iter().map(|((v, z), c)| {
            let c = if v.rem_euclid(2) == 1 { -c } else { c.clone() };
            ((-v, *z), c)
        }))
    }

    fn add_term(&mut self, v: i64, z: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((v, z)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms
                .iter()
                .map(|((v, z), c)| TermJson {
                    v: *v,
                    z: *z,
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self, Error> {
        let mut p = Self::zero();
        for t in &json.terms {
            let c = BigInt::from_str(t.c.trim())
                .map_err(|_| Error::Format(format!("bad coefficient {:?}", t.c)))?;
            p.add_term(t.v, t.z, c);
        }
        Ok(p)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("polynomial json is always serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self, Error> {
        let json: PolyJson =
            serde_json::from_str(s).map_err(|e| Error::Format(format!("polynomial json: {e}")))?;
        Self::from_json(&json)
    }
}

/// Wire form of a [`LaurentVZ`]: `{"terms":[{"v":-6,"z":0,"c":"2"}, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub v: i64,
    pub z: i64,
    /// Decimal coefficient, kept as a string so big values round-trip.
    pub c: String,
}

impl AddAssign<&LaurentVZ> for LaurentVZ {
    fn add_assign(&mut self, rhs: &LaurentVZ) {
        for ((v, z), c) in &rhs.terms {
            self.add_term(*v, *z, c.clone());
        }
    }
}

impl SubAssign<&LaurentVZ> for LaurentVZ {
    fn sub_assign(&mut self, rhs: &LaurentVZ) {
        for ((v, z), c) in &rhs.terms {
            self.add_term(*v, *z, -c);
        }
    }
}

impl Add for &LaurentVZ {
    type Output = LaurentVZ;
    fn add(self, rhs: &LaurentVZ) -> LaurentVZ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentVZ {
    type Output = LaurentVZ;
    fn sub(self, rhs: &LaurentVZ) -> LaurentVZ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentVZ {
    type Output = LaurentVZ;
    fn neg(self) -> LaurentVZ {
        LaurentVZ {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &LaurentVZ {
    type Output = LaurentVZ;
    fn mul(self, rhs: &LaurentVZ) -> LaurentVZ {
        let mut out = LaurentVZ::zero();
        for ((v1, z1), c1) in &self.terms {
            for ((v2, z2), c2) in &rhs.terms {
                out.add_term(v1 + v2, z1 + z2, c1 * c2);
            }
        }
        out
    }
}

impl std::iter::Sum for LaurentVZ {
    fn sum<I: Iterator<Item = LaurentVZ>>(iter: I) -> Self {
        let mut acc = LaurentVZ::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl fmt::Display for LaurentVZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monos = self
            .terms
            .iter()
            .map(|((v, z), c)| (c, monomial_name(&[("v", *v), ("z", *z)])));
        write_sum(f, monos)
    }
}

fn monomial_name(vars: &[(&str, i64)]) -> String {
    vars.iter()
        .filter(|(_, e)| *e != 0)
        .map(|(name, e)| if *e == 1 { name.to_string() } else { format!("{name}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn write_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    monos: impl Iterator<Item = (&'a BigInt, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in monos {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match (abs.is_one(), mono.is_empty()) {
            (_, true) => write!(f, "{abs}")?,
            (true, false) => write!(f, "{mono}")?,
            (false, false) => write!(f, "{abs}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
