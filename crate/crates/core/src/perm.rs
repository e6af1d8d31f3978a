//! Small-degree permutations ("color permutations").
//!
//! Points are 0-based in the API and printed 1-based in cycle notation, so
//! `Perm::parse_cycles("(12)", 2)` swaps points 0 and 1. Composition is the
//! left action: `f.compose(&g)` maps `x` to `f(g(x))`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest supported degree.
pub const MAX_DEGREE: usize = 12;

/// A bijection of `{0, .., degree - 1}`.
///
/// Entries past `degree` are kept as the identity so the derived ordering
/// compares one-line notation lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    degree: u8,
    images: [u8; MAX_DEGREE],
}

const IDENTITY_IMAGES: [u8; MAX_DEGREE] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11];

impl Perm {
    pub fn identity(degree: usize) -> Result<Perm> {
        check_degree(degree)?;
        Ok(Perm {
            degree: degree as u8,
            images: IDENTITY_IMAGES,
        })
    }

    /// Builds a permutation from 0-based one-line notation.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let degree = images.len();
        check_degree(degree)?;
        let mut seen = [false; MAX_DEGREE];
        let mut out = IDENTITY_IMAGES;
        for (i, &img) in images.iter().enumerate() {
            if img >= degree || seen[img] {
                return Err(Error::MalformedPerm(format!("{images:?}")));
            }
            seen[img] = true;
            out[i] = img as u8;
        }
        Ok(Perm {
            degree: degree as u8,
            images: out,
        })
    }

    /// Parses cycle notation such as `(12)(34)` or `(1)`. Points are written
    /// 1-based; cycles containing a comma are split on commas (needed once
    /// points exceed 9), otherwise every digit is one point.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
        check_degree(degree)?;
        let bad = || Error::MalformedPerm(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "()" || compact == "(1)" {
            return Perm::identity(degree);
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body_start = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body_start.find(')').ok_or_else(bad)?;
            let body = &body_start[..close];
            rest = &body_start[close + 1..];

            let points: Vec<usize> = if body.contains(',') {
                body.split(',')
                    .map(|s| s.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                    .collect::<Result<_>>()?
            };
            if points.is_empty() {
                return Err(bad());
            }
            for &p in &points {
                if p == 0 || p > degree || seen[p - 1] {
                    return Err(bad());
                }
                seen[p - 1] = true;
            }
            for (k, &p) in points.iter().enumerate() {
                let next = points[(k + 1) % points.len()];
                images[p - 1] = next - 1;
            }
        }
        Perm::from_images(&images)
    }

    /// The transposition of two 0-based points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        if a >= degree || b >= degree {
            return Err(Error::MalformedPerm(format!(
                "({a} {b}) in degree {degree}"
            )));
        }
        images.swap(a, b);
        Perm::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    /// 0-based one-line notation.
    pub fn images(&self) -> &[u8] {
        &self.images[..self.degree as usize]
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images == IDENTITY_IMAGES
    }

    /// `(self · other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    fn compose_unchecked(&self, other: &Perm) -> Perm {
        let mut images = IDENTITY_IMAGES;
        for (i, slot) in images.iter_mut().enumerate().take(self.degree as usize) {
            *slot = self.images[other.images[i] as usize];
        }
        Perm {
            degree: self.degree,
            images,
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = IDENTITY_IMAGES;
        for i in 0..self.degree as usize {
            images[self.images[i] as usize] = i as u8;
        }
        Perm {
            degree: self.degree,
            images,
        }
    }

    /// `self^k` for a non-negative exponent.
    pub fn pow(&self, k: u32) -> Perm {
        let mut result = Perm {
            degree: self.degree,
            images: IDENTITY_IMAGES,
        };
        let mut base = *self;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            k >>= 1;
        }
        result
    }

    /// Least `k >= 1` with `self^k` the identity.
    pub fn order(&self) -> u64 {
        self.cycles().iter().map(|c| c.len() as u64).fold(1, lcm)
    }

    /// `sigma · self · sigma⁻¹`.
    pub fn conjugate_by(&self, sigma: &Perm) -> Result<Perm> {
        Ok(sigma.compose(self)?.compose_unchecked(&sigma.inverse()))
    }

    /// Nontrivial cycles as 0-based points, each starting at its least point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.apply(point) == point
    }
}

impl Mul for Perm {
    type Output = Perm;

    /// Left-action product; panics on degree mismatch.
    fn mul(self, rhs: Perm) -> Perm {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in product");
        self.compose_unchecked(&rhs)
    }
}

impl<'a> Mul<&'a Perm> for &'a Perm {
    type Output = Perm;

    fn mul(self, rhs: &'a Perm) -> Perm {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("(1)");
        }
        let wide = self.degree() > 9;
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if wide && k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.degree)
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::DegreeCap(degree));
    }
    Ok(())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// All elements of the symmetric group of the given degree, in lexicographic
/// order of their one-line notation.
pub fn symmetric_group(degree: usize) -> Result<Vec<Perm>> {
    check_degree(degree)?;
    let mut current: Vec<usize> = (0..degree).collect();
    let mut out = Vec::new();
    loop {
        out.push(Perm::from_images(&current)?);
        // next lexicographic permutation
        let Some(i) = (0..degree.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..degree)
            .rev()
            .find(|&j| current[j] > current[i])
            .unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    Ok(out)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Perm {
        Perm::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert!((p("(12)", 2) * p("(12)", 2)).is_identity());
        assert_eq!(p("(12)", 3) * p("(13)", 3), p("(132)", 3));
        assert_eq!(Perm::identity(3).unwrap() * p("(123)", 3), p("(123)", 3));
    }

    #[test]
    fn compose_degree_mismatch() {
        let err = p("(12)", 2).compose(&p("(12)", 3)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn inverse_and_order() {
        assert_eq!(p("(23)", 3).order(), 2);
        assert_eq!(p("(123)", 3).order(), 3);
        assert_eq!(p("(123)", 3).inverse(), p("(132)", 3));
        assert_eq!(p("(12)(345)", 5).order(), 6);
        assert_eq!(Perm::identity(4).unwrap().order(), 1);
    }

    #[test]
    fn cycle_notation_round_trip() {
        for text in ["(1)", "(12)", "(132)", "(12)(34)", "(1423)"] {
            assert_eq!(p(text, 4).to_string(), text);
        }
        assert_eq!(p(" ( 1 2 ) ( 3 4 ) ", 4).to_string(), "(12)(34)");
        assert_eq!(p("(1,10,12)", 12).to_string(), "(1,10,12)");
        assert_eq!(p("(21)", 2).to_string(), "(12)");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Perm::parse_cycles("(13)", 2).is_err());
        assert!(Perm::parse_cycles("(11)", 2).is_err());
        assert!(Perm::parse_cycles("(12", 2).is_err());
        assert!(Perm::parse_cycles("12", 2).is_err());
        assert!(Perm::parse_cycles("(1)", 13).is_err());
    }

    #[test]
    fn symmetric_group_is_lexicographic() {
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(s3.len(), 6);
        assert!(s3.windows(2).all(|w| w[0] < w[1]));
        assert!(s3[0].is_identity());
        assert_eq!(symmetric_group(4).unwrap().len(), 24);
        assert_eq!(symmetric_group(1).unwrap().len(), 1);
    }

    #[test]
    fn compose_is_associative_exhaustively() {
        for n in 1..=4 {
            let g = symmetric_group(n).unwrap();
            for a in &g {
                for b in &g {
                    for c in &g {
                        assert_eq!((a * b) * *c, *a * (b * c));
                    }
                }
            }
        }
    }

    #[test]
    fn order_divides_group_order() {
        for n in 1..=5 {
            for f in symmetric_group(n).unwrap() {
                let k = f.order();
                assert_eq!(factorial(n) % k, 0);
                assert!(f.pow(k as u32).is_identity());
                for j in 1..k {
                    assert!(!f.pow(j as u32).is_identity());
                }
            }
        }
    }
}
