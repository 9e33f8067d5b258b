// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Exact rational coordinates.
//!
//! Every endpoint is an exact rational in lowest terms, so coinciding
//! endpoints are detected exactly and tie handling never depends on rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// Largest decimal exponent accepted by the parser.
const MAX_EXPONENT: i64 = 4096;

/// A point on the real line, stored as a reduced fraction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coord(BigRational);

impl Coord {
    pub fn new(numer: BigInt, denom: BigInt) -> Option<Coord> {
        if denom.is_zero() {
            return None;
        }
        Some(Coord(BigRational::new(numer, denom)))
    }

    pub fn from_int(value: i64) -> Coord {
        Coord(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numer / denom` for small fractions; panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Coord {
        Coord::new(BigInt::from(numer), BigInt::from(denom)).expect("zero denominator")
    }

    pub fn zero() -> Coord {
        Coord(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn midpoint(&self, other: &Coord) -> Coord {
        Coord((&self.0 + &other.0) / BigRational::from_integer(BigInt::from(2)))
    }

    pub fn half(&self) -> Coord {
        Coord(&self.0 / BigRational::from_integer(BigInt::from(2)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    fn terminating_digits(&self) -> Option<usize> {
        // Number of decimal places needed, if the denominator is 2^a * 5^b.
        let mut d = self.0.denom().clone();
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        let (mut twos, mut fives) = (0usize, 0usize);
        while d.is_even() {
            d /= &two;
            twos += 1;
        }
        while (&d % &five).is_zero() {
            d /= &five;
            fives += 1;
        }
        d.is_one().then(|| twos.max(fives))
    }
}

impl Ord for Coord {
    fn cmp(&self, other: &Coord) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        if a.denom() == b.denom() {
            return a.numer().cmp(b.numer());
        }
        (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
    }
}

impl PartialOrd for Coord {
    fn partial_cmp(&self, other: &Coord) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Coord {
    type Output = Coord;
    fn add(self, rhs: &Coord) -> Coord {
        Coord(&self.0 + &rhs.0)
    }
}

impl Sub for &Coord {
    type Output = Coord;
    fn sub(self, rhs: &Coord) -> Coord {
        Coord(&self.0 - &rhs.0)
    }
}

impl Add for Coord {
    type Output = Coord;
    fn add(self, rhs: Coord) -> Coord {
        Coord(self.0 + rhs.0)
    }
}

impl Sub for Coord {
    type Output = Coord;
    fn sub(self, rhs: Coord) -> Coord {
        Coord(self.0 - rhs.0)
    }
}

impl From<i64> for Coord {
    fn from(value: i64) -> Coord {
        Coord::from_int(value)
    }
}

impl From<BigRational> for Coord {
    fn from(value: BigRational) -> Coord {
        Coord(value)
    }
}

impl FromStr for Coord {
    type Err = ParseError;

    /// Accepts `-12`, `3.25`, `.5`, `1e-3`, `2.5E+2` and `7/3`.
    fn from_str(s: &str) -> Result<Coord, ParseError> {
        let s = s.trim();
        let bad = || ParseError::Coord(s.to_string());
        if let Some((n, d)) = s.split_once('/') {
            let numer: BigInt = parse_integer(n.trim()).ok_or_else(bad)?;
            let denom: BigInt = parse_integer(d.trim()).ok_or_else(bad)?;
            return Coord::new(numer, denom).ok_or_else(bad);
        }

        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (mantissa, exponent) = match body.find(['e', 'E']) {
            Some(pos) => {
                let exp: i64 = parse_exponent(&body[pos + 1..]).ok_or_else(bad)?;
                (&body[..pos], exp)
            }
            None => (body, 0),
        };
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut numer: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let scale = exponent - frac_part.len() as i64;
        if scale.abs() > MAX_EXPONENT {
            return Err(bad());
        }
        let power = num_traits::pow(BigInt::from(10), scale.unsigned_abs() as usize);
        let value = if scale >= 0 {
            BigRational::from_integer(numer * power)
        } else {
            BigRational::new(numer, power)
        };
        Ok(Coord(value))
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_exponent(s: &str) -> Option<i64> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || digits.len() > 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for Coord {
    /// Integers print plainly, terminating fractions as exact decimals and
    /// everything else as `p/q`. The output always parses back to `self`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            return write!(f, "{}", self.0.numer());
        }
        match self.terminating_digits() {
            Some(places) if places <= 40 => {
                let scaled = &self.0 * BigRational::from_integer(num_traits::pow(BigInt::from(10), places));
                let n = scaled.to_integer();
                let sign = if n.is_negative() { "-" } else { "" };
                let digits = n.abs().to_string();
                let digits = format!("{digits:0>width$}", width = places + 1);
                let (int_part, frac_part) = digits.split_at(digits.len() - places);
                write!(f, "{sign}{int_part}.{frac_part}")
            }
            _ => write!(f, "{}/{}", self.0.numer(), self.0.denom()),
        }
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

struct CoordVisitor;

impl<'de> Visitor<'de> for CoordVisitor {
    type Value = Coord;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a decimal string or a number")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Coord, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coord, E> {
        Ok(Coord::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coord, E> {
        Ok(Coord(BigRational::from_integer(BigInt::from(v))))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Coord, E> {
        if !v.is_finite() {
            return Err(E::custom("non-finite coordinate"));
        }
        // Shortest round-trip decimal of the literal, not its binary expansion.
        format!("{v:?}").parse().map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Coord, D::Error> {
        deserializer.deserialize_any(CoordVisitor)
    }
}
