use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    TypeA,
    /// Lagrangian Grassmannian `LG(n, 2n)`, carried on the tower of `G(n, 2n)`.
    Lagrangian,
}

/// A partial flag manifold `Fl(s_1, ..., s_l; n)` or a Lagrangian Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagShape {
    dims: Vec<usize>,
    ambient: usize,
    flavor: Flavor,
}

impl FlagShape {
    pub fn flag(dims: &[usize], ambient: usize) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidShape("no flag steps".into()));
        }
        let mut prev = 0;
        for &s in dims.iter().chain(std::iter::once(&ambient)) {
            if s <= prev {
                return Err(Error::InvalidShape(format!(
                    "dimensions must satisfy 0 < s_1 < ... < s_l < n, got {dims:?}; {ambient}"
                )));
            }
            prev = s;
        }
        Ok(FlagShape { dims: dims.to_vec(), ambient, flavor: Flavor::TypeA })
    }

    pub fn grassmannian(s: usize, n: usize) -> Result<Self> {
        Self::flag(&[s], n)
    }

    /// `P^{n-1}` as `Fl(1; n)`.
    pub fn projective(n: usize) -> Result<Self> {
        Self::flag(&[1], n)
    }

    /// `LG(n, 2n)`.
    pub fn lagrangian(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidShape("lagrangian rank must be positive".into()));
        }
        Ok(FlagShape { dims: vec![n], ambient: 2 * n, flavor: Flavor::Lagrangian })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_lagrangian(&self) -> bool {
        self.flavor == Flavor::Lagrangian
    }

    /// Number of flag steps `l`.
    pub fn levels(&self) -> usize {
        self.dims.len()
    }

    /// `s_i` for a 0-based level index, with `s_{l+1} = n`.
    pub fn level_size(&self, level: usize) -> usize {
        if level < self.dims.len() {
            self.dims[level]
        } else {
            self.ambient
        }
    }

    pub fn num_vars(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Index of `H_{i,j}` (both 1-based) among the tower variables.
    pub fn var_index(&self, i: usize, j: usize) -> Option<usize> {
        if i == 0 || i > self.levels() || j == 0 || j > self.dims[i - 1] {
            return None;
        }
        Some(self.dims[..i - 1].iter().sum::<usize>() + j - 1)
    }

    /// Variable index range of a 0-based level.
    pub fn level_vars(&self, level: usize) -> std::ops::Range<usize> {
        let start: usize = self.dims[..level].iter().sum();
        start..start + self.dims[level]
    }

    /// 0-based level of a variable.
    pub fn level_of(&self, var: usize) -> usize {
        (0..self.levels()).find(|&l| self.level_vars(l).contains(&var)).expect("variable out of range")
    }

    pub fn var_name(&self, var: usize) -> String {
        let level = self.level_of(var);
        let j = var - self.level_vars(level).start + 1;
        format!("H[{},{}]", level + 1, j)
    }

    /// Order of the Weyl group `prod_i s_i!`.
    pub fn weyl_order(&self) -> u64 {
        self.dims.iter().map(|&s| (1..=s as u64).product::<u64>()).product()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.dims.iter().map(|s| s * (s - 1) / 2).sum()
    }

    /// Complex dimension of the abelian quotient (the tower).
    pub fn tower_dim(&self) -> usize {
        (0..self.levels()).map(|i| self.level_size(i) * (self.level_size(i + 1) - 1)).sum()
    }

    /// Complex dimension of the flag manifold itself.
    pub fn dim(&self) -> usize {
        match self.flavor {
            Flavor::TypeA => {
                (0..self.levels()).map(|i| self.level_size(i) * (self.level_size(i + 1) - self.level_size(i))).sum()
            }
            Flavor::Lagrangian => {
                let n = self.dims[0];
                n * (n + 1) / 2
            }
        }
    }
}

impl fmt::Display for FlagShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.flavor {
            Flavor::Lagrangian => write!(f, "lagrangian:{}", self.dims[0]),
            Flavor::TypeA if self.dims.len() == 1 => write!(f, "grass:{},{}", self.dims[0], self.ambient),
            Flavor::TypeA => {
                let d: Vec<String> = self.dims.iter().map(|s| s.to_string()).collect();
                write!(f, "flag:{};{}", d.join(","), self.ambient)
            }
        }
    }
}

impl FromStr for FlagShape {
    type Err = Error;

    /// `flag:1,2;3`, `grass:2,4`, `lagrangian:2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidShape(format!("cannot parse {s:?}"));
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums = |t: &str| -> Result<Vec<usize>> {
            t.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect()
        };
        match kind.trim() {
            "flag" => {
                let (dims, n) = rest.split_once(';').ok_or_else(bad)?;
                let n = n.trim().parse().map_err(|_| bad())?;
                Self::flag(&nums(dims)?, n)
            }
            "grass" => match nums(rest)?.as_slice() {
                [s, n] => Self::grassmannian(*s, *n),
                _ => Err(bad()),
            },
            "lagrangian" => match nums(rest)?.as_slice() {
                [n] => Self::lagrangian(*n),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}
