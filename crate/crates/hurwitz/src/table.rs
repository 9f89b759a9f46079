//! Multiplication tables grown by doubling.
//!
//! A [`StructureTable`] stores the structure constants of one algebra in the
//! tower ℝ → ℂ → ℍ → 𝕆 → (dim 16): a `dim × dim` grid where cell `(j, k)`
//! holds `e_j · e_k` as a *signed basis reference* — always exactly ± one
//! basis element, never a general linear combination.
//!
//! Tables are not hard-coded. [`build_table`] starts from the real line and
//! doubles: each doubling adjoins a fresh unit generator `g` orthogonal to
//! everything so far (`u`, then `v`, `w`, `s`) and fills the enlarged grid
//! with seven rewrite rules, each one forced by the algebra laws already in
//! play at the smaller size:
//!
//! * **R0** — unit: `1·x = x·1 = x`.
//! * **R1** — imaginary squares: `e_k·e_k = −1` for `k ≥ 1`.
//! * **R2** — inherited products: both factors from the lower level; copy
//!   the lower table's answer.
//! * **R3** — generator naming: `p·g = pg` (that is what the new basis
//!   element *means*) and `g·p = −(pg)` by anticommutativity.
//! * **R4** — braiding across the generator: `p·(qg) = −(pq)·g` for distinct
//!   imaginary `p ≠ q`; the reversed order `(qg)·p` follows by
//!   anticommutativity.
//! * **R5** — cross products: `(pg)·(qg) = −(p·q)` for distinct `p, q`.
//! * **R6** — cancellation: `g·(qg) = q`, `(qg)·g = −q`, and likewise with a
//!   lower-level element in place of `g`: `p·(pg) = −g`, `(pg)·p = g`.
//!
//! The rules are tried in the order R0, R1, R2, R3, R4, R5, R6; the first
//! match decides the cell and is recorded as its provenance tag. Priority
//! encodes the distinctness hypotheses the rules carry (for example R1 wins
//! over R5 when `p = q`).
//!
//! Applied once, the rules produce ℂ; three more doublings give ℍ, 𝕆 and the
//! 16-dimensional table. The last one is a perfectly well-defined bilinear
//! product — it just no longer satisfies ‖xy‖ = ‖x‖·‖y‖, which the verifier
//! detects rather than assumes.

use crate::Error;
use serde::Serialize;
use std::fmt;

/// Sign of a basis product: every `e_j · e_k` is exactly `± e_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Sign of a product of two signed quantities.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A product of two basis elements: `sign · e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedBasisRef {
    pub sign: Sign,
    pub index: usize,
}

impl SignedBasisRef {
    pub fn new(sign: Sign, index: usize) -> Self {
        SignedBasisRef { sign, index }
    }

    pub fn negated(self) -> Self {
        SignedBasisRef {
            sign: self.sign.flipped(),
            index: self.index,
        }
    }
}

/// Which rewrite rule produced a table cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    R0,
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::R0 => "R0",
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
            Rule::R6 => "R6",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Structure constants of one algebra in the doubling tower.
///
/// Immutable once built; `entries` and `rules` are parallel row-major grids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    dim: usize,
    labels: Vec<String>,
    entries: Vec<SignedBasisRef>,
    rules: Vec<Rule>,
}

/// Machine-readable rendering of a table: one object per cell, row-major.
#[derive(Serialize)]
pub struct MachineTable {
    pub dim: usize,
    pub labels: Vec<String>,
    pub entries: Vec<MachineEntry>,
}

#[derive(Serialize)]
pub struct MachineEntry {
    pub sign: i8,
    pub index: usize,
    pub rule: &'static str,
}

/// Builds the multiplication table for `dim ∈ {1, 2, 4, 8, 16}` by repeated
/// doubling from the real line.
pub fn build_table(dim: usize) -> Result<StructureTable, Error> {
    if !matches!(dim, 1 | 2 | 4 | 8 | 16) {
        return Err(Error::UnsupportedDimension(dim));
    }
    let mut table = StructureTable::real_line();
    while table.dim < dim {
        table = table.doubled();
    }
    Ok(table)
}

impl StructureTable {
    /// Dimension 1: the real line, basis {1}.
    fn real_line() -> Self {
        StructureTable {
            dim: 1,
            labels: vec!["1".to_string()],
            entries: vec![SignedBasisRef::new(Sign::Plus, 0)],
            rules: vec![Rule::R0],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    /// The product `e_j · e_k` as a signed basis reference.
    pub fn entry(&self, j: usize, k: usize) -> SignedBasisRef {
        self.entries[j * self.dim + k]
    }

    /// The rewrite rule that produced cell `(j, k)`.
    pub fn rule(&self, j: usize, k: usize) -> Rule {
        self.rules[j * self.dim + k]
    }

    /// The fresh generator adjoined when doubling away from `dim`.
    fn generator_label(dim: usize) -> &'static str {
        match dim {
            1 => "u",
            2 => "v",
            4 => "w",
            8 => "s",
            _ => unreachable!("doubling stops at dimension 16"),
        }
    }

    /// Label of a doubled basis element `e_k · g`.
    fn compose_label(lower: &str, generator: &str) -> String {
        if lower == "1" {
            generator.to_string()
        } else if lower.len() == 1 {
            format!("{lower}{generator}")
        } else {
            format!("({lower}){generator}")
        }
    }

    /// One doubling step: dimension `m` to `2m` with generator `g = e_m`.
    fn doubled(&self) -> StructureTable {
        let m = self.dim;
        let dim = 2 * m;
        let generator = Self::generator_label(m);

        let mut labels = self.labels.clone();
        labels.extend(
            self.labels
                .iter()
                .map(|l| Self::compose_label(l, generator)),
        );

        let mut entries = Vec::with_capacity(dim * dim);
        let mut rules = Vec::with_capacity(dim * dim);
        for j in 0..dim {
            for k in 0..dim {
                let (entry, rule) = self.doubled_cell(j, k, m);
                entries.push(entry);
                rules.push(rule);
            }
        }

        StructureTable {
            dim,
            labels,
            entries,
            rules,
        }
    }

    /// Applies the rewrite rules, in priority order, to one cell of the
    /// doubled table. `m` is the lower dimension; `g = e_m` is the
    /// generator; `p, q` name lower-level imaginary elements.
    fn doubled_cell(&self, j: usize, k: usize, m: usize) -> (SignedBasisRef, Rule) {
        use Sign::{Minus, Plus};

        // R0: unit.
        if j == 0 || k == 0 {
            return (SignedBasisRef::new(Plus, j + k), Rule::R0);
        }
        // R1: imaginary squares.
        if j == k {
            return (SignedBasisRef::new(Minus, 0), Rule::R1);
        }
        // R2: both factors from the lower level.
        if j < m && k < m {
            return (self.entry(j, k), Rule::R2);
        }
        // R3: p·g = pg, g·p = −(pg).
        if k == m {
            if j < m {
                return (SignedBasisRef::new(Plus, j + m), Rule::R3);
            }
        } else if j == m && k < m {
            return (SignedBasisRef::new(Minus, k + m), Rule::R3);
        }
        // p·(qg): R4 when p ≠ q, else R6 cancellation p·(pg) = −g.
        if j < m && k > m {
            let q = k - m;
            if q == j {
                return (SignedBasisRef::new(Minus, m), Rule::R6);
            }
            let pq = self.entry(j, q);
            return (
                SignedBasisRef::new(pq.sign.flipped(), pq.index + m),
                Rule::R4,
            );
        }
        // (pg)·q: R4 reversed via anticommutativity, (pg)·(p) = g as R6.
        if j > m && k < m {
            let p = j - m;
            if p == k {
                return (SignedBasisRef::new(Plus, m), Rule::R6);
            }
            let qp = self.entry(k, p);
            return (SignedBasisRef::new(qp.sign, qp.index + m), Rule::R4);
        }
        // R6: g·(qg) = q and (qg)·g = −q.
        if j == m {
            return (SignedBasisRef::new(Plus, k - m), Rule::R6);
        }
        if k == m {
            return (SignedBasisRef::new(Minus, j - m), Rule::R6);
        }
        // R5: (pg)·(qg) = −(p·q), distinct p, q ≥ 1.
        let pq = self.entry(j - m, k - m);
        (SignedBasisRef::new(pq.sign.flipped(), pq.index), Rule::R5)
    }

    /// The cell rendered as a signed label, e.g. `-uv`.
    pub fn signed_label(&self, entry: SignedBasisRef) -> String {
        match entry.sign {
            Sign::Plus => self.labels[entry.index].clone(),
            Sign::Minus => format!("-{}", self.labels[entry.index]),
        }
    }

    /// Aligned text grid of signed labels, columns separated by two spaces.
    pub fn render_text(&self) -> String {
        let cells: Vec<Vec<String>> = (0..self.dim)
            .map(|j| {
                (0..self.dim)
                    .map(|k| self.signed_label(self.entry(j, k)))
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = (0..self.dim)
            .map(|k| cells.iter().map(|row| row[k].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    /// Machine-readable form: `dim`, `labels`, and a flat row-major list of
    /// `{sign, index, rule}` cells.
    pub fn machine_document(&self) -> MachineTable {
        MachineTable {
            dim: self.dim,
            labels: self.labels.clone(),
            entries: self
                .entries
                .iter()
                .zip(&self.rules)
                .map(|(e, r)| MachineEntry {
                    sign: e.sign.as_i8(),
                    index: e.index,
                    rule: r.as_str(),
                })
                .collect(),
        }
    }
}
