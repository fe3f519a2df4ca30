//! Graded Betti numbers of `S/I` from Koszul homology.
//!
//! `Tor_i(k, S/I)_j` is the homology of `S/I ⊗ Λ^i k^n` in degree `j`.
//! The complex splits by multidegree: in multidegree `a` the `i`-chains
//! have basis `x^{a-F} ⊗ e_F` with `F ⊆ supp(a)`, `|F| = i` and
//! `x^{a-F} ∉ I`. Each block is at most `C(n, i)` wide, so the table is
//! assembled from many tiny ranks. [`koszul_boundary`] builds the whole
//! degree-`j` boundary matrix as a second route to the same ranks.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixed::min_stable_truncation_within;
use crate::ideal::{MembershipGrid, MonomialIdeal};
use crate::linalg::{check_characteristic, rank, Matrix};
use crate::monomial::{monomials_of_degree, Monomial};

pub const DEFAULT_PRIME: u64 = 1_000_003;
pub const CHECK_PRIME: u64 = 65_537;

/// Why the computed window contains every nonzero `β_{i,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `max_degree >= deg lcm(G(I))`: every Betti multidegree divides the lcm.
    Lcm { lcm_degree: u32 },
    /// `I_{>=e}` is stable, so `reg(I) <= e` and `β_{i,j}(S/I) = 0` for
    /// `j > e + n - 1 <= max_degree`.
    StableTruncation { e: u32 },
    Uncertified { needed: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRecord {
    pub i: usize,
    pub j: u32,
    pub beta: u64,
}

/// `β_{i,j}(S/I)` for `j <= max_degree`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub n: usize,
    pub characteristic: u64,
    pub max_degree: u32,
    pub certificate: Certificate,
    pub entries: Vec<BettiRecord>,
    /// `dim (S/I ⊗ Λ^i)_j` for every computed `(i, j)`, as records.
    pub chain_dims: Vec<BettiRecord>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries
            .iter()
            .find(|r| r.i == i && r.j == j)
            .map_or(0, |r| r.beta)
    }

    pub fn is_certified(&self) -> bool {
        !matches!(self.certificate, Certificate::Uncertified { .. })
    }

    fn require_certified(&self) -> Result<()> {
        match self.certificate {
            Certificate::Uncertified { needed } => {
                Err(Error::Uncertified { max_degree: self.max_degree, needed })
            }
            _ => Ok(()),
        }
    }

    /// `Σ_i (-1)^i dim K_{i,j} = Σ_i (-1)^i β_{i,j}` for every `j`.
    pub fn euler_characteristics_match(&self) -> bool {
        (0..=self.max_degree).all(|j| {
            let alt = |recs: &[BettiRecord]| {
                recs.iter()
                    .filter(|r| r.j == j)
                    .map(|r| if r.i % 2 == 0 { r.beta as i128 } else { -(r.beta as i128) })
                    .sum::<i128>()
            };
            alt(&self.chain_dims) == alt(&self.entries)
        })
    }

    /// Macaulay-style table: columns are `i`, rows are `j - i`.
    pub fn to_text(&self) -> String {
        let top_i = self.entries.iter().map(|r| r.i).max().unwrap_or(0);
        let top_row = self.entries.iter().map(|r| r.j as usize - r.i).max().unwrap_or(0);
        let cell = |i: usize, row: usize| {
            let b = self.get(i, (row + i) as u32);
            if b == 0 { ".".to_string() } else { b.to_string() }
        };
        let totals: Vec<u64> = (0..=top_i)
            .map(|i| self.entries.iter().filter(|r| r.i == i).map(|r| r.beta).sum())
            .collect();
        let width = totals
            .iter()
            .map(|t| t.to_string().len())
            .max()
            .unwrap_or(1)
            .max(top_i.to_string().len());
        let label = top_row.to_string().len().max(6);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "characteristic {}, degrees <= {}, {}",
            self.characteristic,
            self.max_degree,
            match self.certificate {
                Certificate::Lcm { lcm_degree } => format!("certified by lcm degree {lcm_degree}"),
                Certificate::StableTruncation { e } => format!("certified by stable truncation at {e}"),
                Certificate::Uncertified { needed } => format!("UNCERTIFIED (needs degree {needed})"),
            }
        );
        let _ = write!(out, "{:>label$}", "");
        for i in 0..=top_i {
            let _ = write!(out, " {i:>width$}");
        }
        let _ = write!(out, "\n{:>label$}", "total:");
        for t in &totals {
            let _ = write!(out, " {t:>width$}");
        }
        out.push('\n');
        for row in 0..=top_row {
            let _ = write!(out, "{:>label$}", format!("{row}:"));
            for i in 0..=top_i {
                let _ = write!(out, " {:>width$}", cell(i, row));
            }
            out.push('\n');
        }
        out
    }
}

/// Subsets of `{0..n}` as bitmasks; numeric order on masks is colex order.
fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

fn mask_vars(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |v| mask >> v & 1 == 1)
}

/// Boundary `∂_i : (S/I ⊗ Λ^i)_j → (S/I ⊗ Λ^{i-1})_j` with its bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulBoundary {
    /// Rows index the target, columns the domain.
    pub matrix: Matrix,
    pub domain: Vec<(Monomial, Vec<usize>)>,
    pub target: Vec<(Monomial, Vec<usize>)>,
}

fn chain_basis(ideal: &MonomialIdeal, i: usize, j: u32) -> Vec<(Monomial, u32)> {
    if i > ideal.n() || (j as usize) < i {
        return Vec::new();
    }
    let subsets = subsets_of_size(ideal.n(), i);
    ideal
        .standard_monomials(j - i as u32)
        .into_iter()
        .flat_map(|w| subsets.iter().map(move |&f| (w.clone(), f)))
        .collect()
}

/// The sign of removing the `k`-th (1-based) element is `(-1)^{k+1}`;
/// images landing in `I` vanish.
pub fn koszul_boundary(ideal: &MonomialIdeal, i: usize, j: u32) -> Result<KoszulBoundary> {
    if i > ideal.n() {
        return Err(Error::Precondition(format!(
            "homological index {i} exceeds n = {}",
            ideal.n()
        )));
    }
    let domain = chain_basis(ideal, i, j);
    let target = if i == 0 { Vec::new() } else { chain_basis(ideal, i - 1, j) };
    let index: HashMap<&(Monomial, u32), usize> =
        target.iter().enumerate().map(|(k, b)| (b, k)).collect();
    let mut matrix = Matrix::zeros(target.len(), domain.len());
    for (col, (w, f)) in domain.iter().enumerate() {
        for (k, v) in mask_vars(*f).enumerate() {
            let image = (w.times_var(v, 1), f & !(1 << v));
            if let Some(&row) = index.get(&image) {
                matrix.set(row, col, if k % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    let label = |b: &[(Monomial, u32)]| {
        b.iter().map(|(w, f)| (w.clone(), mask_vars(*f).collect())).collect()
    };
    Ok(KoszulBoundary { matrix, domain: label(&domain), target: label(&target) })
}

/// Chain dimensions and boundary ranks for one multidegree.
struct Block {
    dims: Vec<usize>,
    /// `ranks[i]` is the rank of `∂_i`; `ranks[0] = 0`.
    ranks: Vec<usize>,
}

fn multidegree_block(grid: &MembershipGrid, a: &[u32], characteristic: u64) -> Result<Block> {
    let n = a.len();
    let support: u32 = (0..n).filter(|&v| a[v] > 0).fold(0, |m, v| m | 1 << v);
    let standard = |f: u32| {
        let mut w = a.to_vec();
        for v in mask_vars(f) {
            w[v] -= 1;
        }
        !grid.contains(&w)
    };
    let bases: Vec<Vec<u32>> = (0..=n)
        .map(|i| {
            subsets_of_size(n, i)
                .into_iter()
                .filter(|&f| f & !support == 0 && standard(f))
                .collect()
        })
        .collect();
    let mut ranks = vec![0; n + 2];
    for i in 1..=n {
        let (dom, tgt) = (&bases[i], &bases[i - 1]);
        if dom.is_empty() || tgt.is_empty() {
            continue;
        }
        let mut m = Matrix::zeros(tgt.len(), dom.len());
        for (col, &f) in dom.iter().enumerate() {
            for (k, v) in mask_vars(f).enumerate() {
                if let Ok(row) = tgt.binary_search(&(f & !(1 << v))) {
                    m.set(row, col, if k % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        ranks[i] = rank(&m, characteristic)?;
    }
    Ok(Block { dims: bases.iter().map(Vec::len).collect(), ranks })
}

fn exponent_vectors(n: usize, deg: u32) -> Vec<Vec<u32>> {
    monomials_of_degree(n, deg)
        .into_iter()
        .map(|m| m.exponents().to_vec())
        .collect()
}

fn certify(ideal: &MonomialIdeal, max_degree: u32) -> Certificate {
    let lcm_degree = ideal.lcm_of_generators().degree();
    if ideal.is_zero() || lcm_degree <= max_degree {
        return Certificate::Lcm { lcm_degree };
    }
    let n = ideal.n() as u32;
    if max_degree + 1 >= n {
        if let Ok(e) = min_stable_truncation_within(ideal, max_degree + 1 - n) {
            return Certificate::StableTruncation { e };
        }
    }
    Certificate::Uncertified { needed: lcm_degree }
}

pub fn betti_table(ideal: &MonomialIdeal, max_degree: u32, characteristic: u64) -> Result<BettiTable> {
    betti_table_with_progress(ideal, max_degree, characteristic, |_| {})
}

/// As [`betti_table`], calling `progress(j)` as each degree finishes.
pub fn betti_table_with_progress<F>(
    ideal: &MonomialIdeal,
    max_degree: u32,
    characteristic: u64,
    progress: F,
) -> Result<BettiTable>
where
    F: Fn(u32) + Sync,
{
    check_characteristic(characteristic)?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("betti_table"));
    }
    if !ideal.is_zero() && max_degree < ideal.ideal_degree()? {
        return Err(Error::Precondition(format!(
            "max degree {max_degree} is below the generator degree {}",
            ideal.ideal_degree()?
        )));
    }
    let n = ideal.n();
    let grid = MembershipGrid::new(ideal, max_degree);
    let per_degree: Vec<(u32, Vec<u64>, Vec<u64>)> = (0..=max_degree)
        .into_par_iter()
        .map(|j| {
            let mut betti = vec![0u64; n + 1];
            let mut dims = vec![0u64; n + 1];
            for a in exponent_vectors(n, j) {
                let block = multidegree_block(&grid, &a, characteristic)?;
                for i in 0..=n {
                    dims[i] += block.dims[i] as u64;
                    betti[i] += (block.dims[i] - block.ranks[i] - block.ranks[i + 1]) as u64;
                }
            }
            progress(j);
            Ok((j, betti, dims))
        })
        .collect::<Result<_>>()?;
    let mut entries = Vec::new();
    let mut chain_dims = Vec::new();
    for (j, betti, dims) in per_degree {
        for i in 0..=n {
            if betti[i] > 0 {
                entries.push(BettiRecord { i, j, beta: betti[i] });
            }
            if dims[i] > 0 {
                chain_dims.push(BettiRecord { i, j, beta: dims[i] });
            }
        }
    }
    entries.sort_by_key(|r| (r.i, r.j));
    chain_dims.sort_by_key(|r| (r.i, r.j));
    Ok(BettiTable {
        n,
        characteristic,
        max_degree,
        certificate: certify(ideal, max_degree),
        entries,
        chain_dims,
    })
}

/// `β_{i,j}(S/I)` for a single `(i, j)` from the full boundary matrices.
pub fn betti_number_by_matrices(ideal: &MonomialIdeal, i: usize, j: u32, characteristic: u64) -> Result<u64> {
    let d_i = koszul_boundary(ideal, i, j)?;
    let r_i = rank(&d_i.matrix, characteristic)?;
    let r_next = if i < ideal.n() {
        rank(&koszul_boundary(ideal, i + 1, j)?.matrix, characteristic)?
    } else {
        0
    };
    Ok((d_i.domain.len() - r_i - r_next) as u64)
}

/// Regularity read off a table, in both normalizations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRegularity {
    /// `max{ j - i + 1 : β_{i,j}(S/I) ≠ 0, i >= 1 }`.
    pub ideal: u64,
    /// `max{ j - i : β_{i,j}(S/I) ≠ 0 }`.
    pub quotient: u64,
}

pub fn reg_from_betti(table: &BettiTable) -> Result<BettiRegularity> {
    table.require_certified()?;
    let ideal = table
        .entries
        .iter()
        .filter(|r| r.i >= 1)
        .map(|r| (r.j as u64 + 1) - r.i as u64)
        .max()
        .ok_or(Error::ZeroIdeal("reg_from_betti"))?;
    let quotient = table
        .entries
        .iter()
        .map(|r| r.j as u64 - r.i as u64)
        .max()
        .unwrap_or(0);
    Ok(BettiRegularity { ideal, quotient })
}

/// A nonzero `β_{i,j}(S/I)` placed at `(i, j - i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Extremal {
    pub i: usize,
    pub row: u64,
    pub beta: u64,
}

/// Nonzero entries with no other nonzero entry weakly above-right.
pub fn extremal_from_betti(table: &BettiTable) -> Result<Vec<Extremal>> {
    table.require_certified()?;
    let points: Vec<Extremal> = table
        .entries
        .iter()
        .map(|r| Extremal { i: r.i, row: r.j as u64 - r.i as u64, beta: r.beta })
        .collect();
    Ok(points
        .iter()
        .filter(|p| {
            !points
                .iter()
                .any(|q| q.i >= p.i && q.row >= p.row && (q.i, q.row) != (p.i, p.row))
        })
        .copied()
        .collect())
}

/// Maps `(i, j)` to `β_{i,j}`.
pub fn as_map(table: &BettiTable) -> BTreeMap<(usize, u32), u64> {
    table.entries.iter().map(|r| ((r.i, r.j), r.beta)).collect()
}

/// `reg + n + 1` when a regularity value is known, otherwise `n·deg(I) + 1`.
pub fn default_max_degree(ideal: &MonomialIdeal, known_reg: Option<u64>) -> Result<u32> {
    let n = ideal.n() as u64;
    let v = match known_reg {
        Some(reg) => reg + n + 1,
        None => n * ideal.ideal_degree()? as u64 + 1,
    };
    u32::try_from(v).map_err(|_| Error::Overflow("default max degree"))
}
