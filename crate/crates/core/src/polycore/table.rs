use std::fmt;

use crate::error::{Error, Result};

/// Shape of the generic matrix whose entries name the ring variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Symmetric,
    Skew,
    Generic,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::Symmetric => "symmetric",
            MatrixKind::Skew => "skew",
            MatrixKind::Generic => "generic",
        })
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" => Ok(MatrixKind::Symmetric),
            "skew" | "pfaffian" => Ok(MatrixKind::Skew),
            "generic" => Ok(MatrixKind::Generic),
            other => Err(Error::InvalidArgument(format!("unknown matrix kind `{other}`"))),
        }
    }
}

/// The variables `x[i,j]` of an `n x n` matrix of the given kind, in
/// row-major order, optionally followed by auxiliary variables used for
/// elimination.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableTable {
    n: usize,
    kind: MatrixKind,
    entries: Vec<(usize, usize)>,
    aux: Vec<String>,
}

impl VariableTable {
    pub fn new(kind: MatrixKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("matrix size must be at least 1".into()));
        }
        let mut entries = Vec::new();
        for i in 1..=n {
            let first = match kind {
                MatrixKind::Symmetric => i,
                MatrixKind::Skew => i + 1,
                MatrixKind::Generic => 1,
            };
            for j in first..=n {
                entries.push((i, j));
            }
        }
        Ok(VariableTable { n, kind, entries, aux: Vec::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn aux_names(&self) -> &[String] {
        &self.aux
    }

    /// Number of matrix variables, excluding auxiliary ones.
    pub fn matrix_vars(&self) -> usize {
        self.entries.len()
    }

    /// Total number of variables.
    pub fn len(&self) -> usize {
        self.entries.len() + self.aux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// A copy of this table with extra auxiliary variables appended.
    pub fn with_aux(&self, names: &[&str]) -> Self {
        let mut t = self.clone();
        t.aux.extend(names.iter().map(|s| s.to_string()));
        t
    }

    /// Drops all auxiliary variables.
    pub fn without_aux(&self) -> Self {
        let mut t = self.clone();
        t.aux.clear();
        t
    }

    /// Resolves `x[i,j]` to a variable position and a sign. Symmetric tables
    /// fold `x[j,i]` onto `x[i,j]`; skew tables read `x[j,i]` as `-x[i,j]`.
    pub fn resolve(&self, i: usize, j: usize) -> Result<(usize, bool)> {
        let unknown = || Error::UnknownVariable { i, j };
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(unknown());
        }
        let (a, b, negated) = match self.kind {
            MatrixKind::Generic => (i, j, false),
            MatrixKind::Symmetric => (i.min(j), i.max(j), false),
            MatrixKind::Skew => {
                if i == j {
                    return Err(unknown());
                }
                (i.min(j), i.max(j), i > j)
            }
        };
        self.index_of(a, b).map(|k| (k, negated)).ok_or_else(unknown)
    }

    /// Position of the canonical entry `(i, j)` in the table.
    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return None;
        }
        let n = self.n;
        match self.kind {
            MatrixKind::Generic => Some((i - 1) * n + (j - 1)),
            MatrixKind::Symmetric if i <= j => {
                // rows 1..i-1 contribute n, n-1, ..., n-i+2 entries
                let before = (i - 1) * (n + 1) - i * (i - 1) / 2;
                Some(before + (j - i))
            }
            MatrixKind::Skew if i < j => {
                let before = (i - 1) * n - i * (i - 1) / 2;
                Some(before + (j - i - 1))
            }
            _ => None,
        }
    }

    /// Printed name of variable `k`.
    pub fn name(&self, k: usize) -> String {
        match self.entries.get(k) {
            Some((i, j)) => format!("x[{i},{j}]"),
            None => self.aux[k - self.entries.len()].clone(),
        }
    }
}
