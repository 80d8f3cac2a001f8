use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A permutation of the points `0..degree`.
///
/// Points are 0-based inside the library. Cycle notation (`Display`,
/// [`Permutation::parse_cycles`]) and the on-disk group format are 1-based.
///
/// Products act on the right: `a * b` applies `a` first, then `b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, rejecting anything that is
    /// not a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} of point {} is out of range for degree {}",
                    x + 1,
                    i + 1,
                    n
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "point {} appears twice among the images",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from 1-based images, as stored in group files.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mut zero = Vec::with_capacity(images.len());
        for (i, &x) in images.iter().enumerate() {
            if x == 0 {
                return Err(Error::InvalidPermutation(format!(
                    "image of point {} is 0; points are 1-based",
                    i + 1
                )));
            }
            zero.push((x - 1) as u32);
        }
        Self::from_images(zero)
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if touched[p - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} occurs in more than one cycle"
                    )));
                }
                touched[p - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(Error::PointOutOfRange { point: next, degree });
                }
                images[p - 1] = (next - 1) as u32;
            }
        }
        Self::from_images(images)
    }

    /// Parses 1-based cycle notation such as `"(1 2)(3 4 5)"` or `"()"`.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number = String::new();
        let flush = |number: &mut String, current: &mut Option<Vec<usize>>| -> Result<()> {
            if number.is_empty() {
                return Ok(());
            }
            let value = number.parse::<usize>().map_err(|e| Error::Parse {
                location: format!("cycle notation {text:?}"),
                message: e.to_string(),
            })?;
            number.clear();
            match current {
                Some(c) => {
                    c.push(value);
                    Ok(())
                }
                None => Err(Error::Parse {
                    location: format!("cycle notation {text:?}"),
                    message: "number outside parentheses".into(),
                }),
            }
        };
        for ch in text.chars() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::Parse {
                            location: format!("cycle notation {text:?}"),
                            message: "nested parenthesis".into(),
                        });
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut number, &mut current)?;
                    match current.take() {
                        Some(c) => cycles.push(c),
                        None => {
                            return Err(Error::Parse {
                                location: format!("cycle notation {text:?}"),
                                message: "unbalanced ')'".into(),
                            })
                        }
                    }
                }
                '0'..='9' => number.push(ch),
                ' ' | ',' | '\t' => flush(&mut number, &mut current)?,
                other => {
                    return Err(Error::Parse {
                        location: format!("cycle notation {text:?}"),
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        if current.is_some() {
            return Err(Error::Parse {
                location: format!("cycle notation {text:?}"),
                message: "unterminated cycle".into(),
            });
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn pow(&self, exponent: i64) -> Self {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        g.inverse().then(self).then(g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Self {
        a.inverse().then(&b.inverse()).then(a).then(b)
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Restriction to an invariant set of points, relabelled `0..points.len()`
    /// in the order given. Returns `None` if the set is not invariant.
    pub fn restrict(&self, points: &[usize]) -> Option<Permutation> {
        let mut label = vec![u32::MAX; self.degree()];
        for (i, &p) in points.iter().enumerate() {
            label[p] = i as u32;
        }
        let images: Option<Vec<u32>> = points
            .iter()
            .map(|&p| {
                let l = label[self.image(p)];
                (l != u32::MAX).then_some(l)
            })
            .collect();
        images.and_then(|v| Permutation::from_images(v).ok())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        self.then(&rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}
