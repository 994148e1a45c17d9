use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order of the product of two generators. `None` is `∞`.
pub type Bond = Option<u32>;

/// A validated Coxeter matrix.
///
/// The JSON form is `{"rank": n, "m": [[1,3,2],[3,1,3],[2,3,1]]}` with `0`
/// standing for `∞`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct CoxeterMatrix {
    rank: usize,
    // row-major; 0 encodes ∞
    entries: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    rank: usize,
    m: Vec<Vec<u32>>,
}

impl TryFrom<RawMatrix> for CoxeterMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        if raw.m.len() != raw.rank {
            return Err(Error::MalformedMatrix(format!(
                "rank is {} but the matrix has {} rows",
                raw.rank,
                raw.m.len()
            )));
        }
        CoxeterMatrix::from_rows(&raw.m)
    }
}

impl From<CoxeterMatrix> for RawMatrix {
    fn from(m: CoxeterMatrix) -> Self {
        RawMatrix {
            rank: m.rank,
            m: m.entries.chunks(m.rank).map(<[u32]>::to_vec).collect(),
        }
    }
}

impl CoxeterMatrix {
    /// Builds a matrix from rows, with `0` encoding `∞`.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::MalformedMatrix("rank must be at least 1".into()));
        }
        if rank > crate::word::Letter::MAX as usize {
            return Err(Error::MalformedMatrix(format!("rank {rank} is too large")));
        }
        let mut entries = Vec::with_capacity(rank * rank);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::MalformedMatrix(format!(
                    "row {} has {} entries, expected {rank}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 1 {
                    return Err(Error::MalformedMatrix(format!(
                        "diagonal entry ({0},{0}) is {m}, expected 1",
                        i + 1
                    )));
                }
                if i != j && m == 1 {
                    return Err(Error::MalformedMatrix(format!(
                        "off-diagonal entry ({},{}) is 1",
                        i + 1,
                        j + 1
                    )));
                }
                if m != rows[j][i] {
                    return Err(Error::MalformedMatrix(format!(
                        "not symmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
                entries.push(m);
            }
        }
        Ok(CoxeterMatrix { rank, entries })
    }

    /// Builds a matrix from the bonds of a (possibly branching) diagram.
    /// Unlisted pairs commute. Generators are 1-based.
    pub fn from_bonds(rank: usize, bonds: &[(usize, usize, Bond)]) -> Result<Self> {
        let mut rows = vec![vec![2u32; rank]; rank];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, m) in bonds {
            if i == 0 || j == 0 || i > rank || j > rank || i == j {
                return Err(Error::MalformedMatrix(format!("bad bond ({i},{j})")));
            }
            let v = m.unwrap_or(0);
            rows[i - 1][j - 1] = v;
            rows[j - 1][i - 1] = v;
        }
        Self::from_rows(&rows)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m(s_i, s_j)` for 0-based generator indices.
    pub fn bond(&self, i: usize, j: usize) -> Bond {
        match self.entries[i * self.rank + j] {
            0 => None,
            m => Some(m),
        }
    }

    /// Raw entry with `0` for `∞`.
    pub fn raw(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.rank + j]
    }

    /// Whether `s_i` and `s_j` are joined in the Coxeter diagram.
    pub fn joined(&self, i: usize, j: usize) -> bool {
        i != j && self.raw(i, j) != 2
    }

    /// The matrix with generators relabelled: new generator `i` is old
    /// generator `order[i]` (0-based).
    pub fn permuted(&self, order: &[usize]) -> CoxeterMatrix {
        let rank = self.rank;
        let mut entries = Vec::with_capacity(rank * rank);
        for &i in order {
            for &j in order {
                entries.push(self.raw(i, j));
            }
        }
        CoxeterMatrix { rank, entries }
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.rank)
            .map(<[u32]>::to_vec)
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::MalformedMatrix(e.to_string()))
    }
}

impl fmt::Debug for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterMatrix")
            .field("m", &self.rows())
            .finish()
    }
}
