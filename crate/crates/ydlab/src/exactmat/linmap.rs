use std::fmt;

use serde::{Deserialize, Serialize};

use super::ExactScalar;
use crate::error::{Result, YdError};
use crate::par::{self, Execution};

/// A linear map `k^dom -> k^cod`, stored as a dense row-major `cod x dom` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    cod: usize,
    dom: usize,
    entries: Vec<ExactScalar>,
}

/// First entry at which two equally shaped maps differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Difference {
    pub row: usize,
    pub col: usize,
    pub lhs: ExactScalar,
    pub rhs: ExactScalar,
}

// Below this many multiply-adds a product is not worth splitting across threads.
const PAR_THRESHOLD: usize = 1 << 14;

impl LinMap {
    pub fn new(cod: usize, dom: usize, entries: Vec<ExactScalar>) -> Result<Self> {
        if cod == 0 || dom == 0 {
            return Err(YdError::MalformedInput(format!(
                "dimensions must be positive, got {cod}x{dom}"
            )));
        }
        if entries.len() != cod * dom {
            return Err(YdError::DimensionMismatch(format!(
                "{} entries for a {cod}x{dom} matrix",
                entries.len()
            )));
        }
        Ok(LinMap { cod, dom, entries })
    }

    pub fn zeros(cod: usize, dom: usize) -> Self {
        assert!(cod > 0 && dom > 0, "dimensions must be positive");
        LinMap { cod, dom, entries: vec![ExactScalar::zero(); cod * dom] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = ExactScalar::one();
        }
        m
    }

    pub fn scalar(c: ExactScalar) -> Self {
        LinMap { cod: 1, dom: 1, entries: vec![c] }
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let cod = rows.len();
        let dom = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != dom) {
            return Err(YdError::MalformedInput("ragged matrix rows".into()));
        }
        Self::new(cod, dom, rows.into_iter().flatten().collect())
    }

    /// Convenience for literals in code and tests; panics on a ragged or empty array.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| ExactScalar::from_int(x)).collect())
            .collect();
        Self::from_rows(rows).expect("well-formed integer matrix")
    }

    /// Parses the string-matrix literal used in every file format.
    pub fn from_literal(rows: &[Vec<String>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn to_literal(&self) -> Vec<Vec<String>> {
        self.entries.chunks(self.dom).map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }

    /// Column vector `e_i` in `k^n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut m = Self::zeros(n, 1);
        m.entries[i] = ExactScalar::one();
        m
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.cod, self.dom)
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &ExactScalar {
        &self.entries[row * self.dom + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: ExactScalar) {
        self.entries[row * self.dom + col] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExactScalar::is_zero)
    }

    /// `self ∘ g`, i.e. the matrix product `self · g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        let exec = if self.cod * self.dom * g.dom >= PAR_THRESHOLD {
            Execution::default()
        } else {
            Execution::Sequential
        };
        self.compose_with(g, exec)
    }

    /// [`LinMap::compose`] with the row loop run as `exec` says.
    pub fn compose_with(&self, g: &LinMap, exec: Execution) -> Result<LinMap> {
        if self.dom != g.cod {
            return Err(YdError::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.cod, self.dom, g.cod, g.dom
            )));
        }
        // Structure-constant matrices are mostly zeros, so walk nonzeros only.
        let g_rows: Vec<Vec<(usize, &ExactScalar)>> = g
            .entries
            .chunks(g.dom)
            .map(|r| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        let rows = par::map_indices(exec, self.cod, |i| {
            let mut acc = vec![ExactScalar::zero(); g.dom];
            for (k, a) in self.entries[i * self.dom..(i + 1) * self.dom].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &g_rows[k] {
                    acc[j] = acc[j].add_ref(&a.mul_ref(b));
                }
            }
            acc
        });
        Ok(LinMap { cod: self.cod, dom: g.dom, entries: rows.into_iter().flatten().collect() })
    }

    /// Composes a chain read right to left: `chain(&[a, b, c]) = a ∘ b ∘ c`.
    pub fn chain(maps: &[&LinMap]) -> Result<LinMap> {
        let (last, rest) = maps.split_last().expect("empty composition chain");
        let mut acc = (*last).clone();
        for m in rest.iter().rev() {
            acc = m.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Kronecker product; `e_i ⊗ e_j` has flat index `i * n + j`.
    pub fn kron(&self, g: &LinMap) -> LinMap {
        let (cod, dom) = (self.cod * g.cod, self.dom * g.dom);
        let mut entries = vec![ExactScalar::zero(); cod * dom];
        for i in 0..self.cod {
            for j in 0..self.dom {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..g.cod {
                    for l in 0..g.dom {
                        let b = g.get(k, l);
                        if !b.is_zero() {
                            entries[(i * g.cod + k) * dom + j * g.dom + l] = a.mul_ref(b);
                        }
                    }
                }
            }
        }
        LinMap { cod, dom, entries }
    }

    /// Kronecker product of several factors, left to right.
    pub fn kron_all(maps: &[&LinMap]) -> LinMap {
        let (first, rest) = maps.split_first().expect("empty tensor product");
        rest.iter().fold((*first).clone(), |acc, m| acc.kron(m))
    }

    /// The symmetry `k^m ⊗ k^n -> k^n ⊗ k^m`, `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
    pub fn flip(m: usize, n: usize) -> LinMap {
        let mut out = Self::zeros(m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                out.set(j * m + i, i * n + j, ExactScalar::one());
            }
        }
        out
    }

    /// Reorders tensor factors of `k^{dims[0]} ⊗ k^{dims[1]} ⊗ ...`: output
    /// factor `t` is input factor `order[t]`. `flip(m, n) = permute(&[m, n], &[1, 0])`.
    pub fn permute(dims: &[usize], order: &[usize]) -> LinMap {
        let mut seen = vec![false; dims.len()];
        assert!(order.len() == dims.len(), "permutation length");
        for &o in order {
            assert!(!std::mem::replace(&mut seen[o], true), "not a permutation");
        }
        let total: usize = dims.iter().product();
        let out_dims: Vec<usize> = order.iter().map(|&o| dims[o]).collect();
        let mut out = Self::zeros(total, total);
        let mut digits = vec![0; dims.len()];
        for i in 0..total {
            let mut r = i;
            for (d, &s) in digits.iter_mut().zip(dims).rev() {
                *d = r % s;
                r /= s;
            }
            let j = order.iter().zip(&out_dims).fold(0, |acc, (&o, &s)| acc * s + digits[o]);
            out.set(j, i, ExactScalar::one());
        }
        out
    }

    pub fn transpose(&self) -> LinMap {
        let mut out = Self::zeros(self.dom, self.cod);
        for i in 0..self.cod {
            for j in 0..self.dom {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    fn zip(&self, g: &LinMap, f: impl Fn(&ExactScalar, &ExactScalar) -> ExactScalar) -> Result<LinMap> {
        if self.shape() != g.shape() {
            return Err(YdError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.cod, self.dom, g.cod, g.dom
            )));
        }
        let entries = self.entries.iter().zip(&g.entries).map(|(a, b)| f(a, b)).collect();
        Ok(LinMap { cod: self.cod, dom: self.dom, entries })
    }

    pub fn add(&self, g: &LinMap) -> Result<LinMap> {
        self.zip(g, ExactScalar::add_ref)
    }

    pub fn sub(&self, g: &LinMap) -> Result<LinMap> {
        self.zip(g, ExactScalar::sub_ref)
    }

    pub fn scale(&self, c: &ExactScalar) -> LinMap {
        LinMap {
            cod: self.cod,
            dom: self.dom,
            entries: self.entries.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    /// `None` when equal; otherwise the first differing entry in row-major order.
    /// Maps of different shapes differ at `(0, 0)` with the shape mismatch
    /// treated as an error by callers.
    pub fn first_difference(&self, g: &LinMap) -> Option<Difference> {
        if self.shape() != g.shape() {
            return Some(Difference {
                row: 0,
                col: 0,
                lhs: self.entries[0].clone(),
                rhs: g.entries[0].clone(),
            });
        }
        self.entries.iter().zip(&g.entries).position(|(a, b)| a != b).map(|p| Difference {
            row: p / self.dom,
            col: p % self.dom,
            lhs: self.entries[p].clone(),
            rhs: g.entries[p].clone(),
        })
    }

    /// Solves `self · X = rhs` for square invertible `self`.
    pub fn solve(&self, rhs: &LinMap) -> Result<LinMap> {
        if self.cod != self.dom {
            return Err(YdError::DimensionMismatch(format!(
                "solve needs a square matrix, got {}x{}",
                self.cod, self.dom
            )));
        }
        if rhs.cod != self.cod {
            return Err(YdError::DimensionMismatch(format!(
                "right-hand side has {} rows, expected {}",
                rhs.cod, self.cod
            )));
        }
        let n = self.cod;
        let w = n + rhs.dom;
        let mut a: Vec<Vec<ExactScalar>> = (0..n)
            .map(|i| {
                let mut row = self.entries[i * n..(i + 1) * n].to_vec();
                row.extend_from_slice(&rhs.entries[i * rhs.dom..(i + 1) * rhs.dom]);
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(YdError::NotInvertible)?;
            a.swap(c, p);
            let inv = a[c][c].recip().expect("nonzero pivot");
            for x in a[c].iter_mut() {
                *x = x.mul_ref(&inv);
            }
            let pivot = a[c].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == c || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for k in c..w {
                    if !pivot[k].is_zero() {
                        row[k] = row[k].sub_ref(&factor.mul_ref(&pivot[k]));
                    }
                }
            }
        }
        let entries = a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
        Ok(LinMap { cod: n, dom: rhs.dom, entries })
    }

    pub fn inverse(&self) -> Result<LinMap> {
        self.solve(&LinMap::identity(self.cod))
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} [", self.cod, self.dom)?;
        for r in self.entries.chunks(self.dom) {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for LinMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_literal().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<ExactScalar>> = Vec::deserialize(d)?;
        LinMap::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
