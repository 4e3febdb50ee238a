//! Shared result types: homology reports and graded summaries.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::ring::CoefficientRing;

/// One homology (or homotopy) group, reported structurally.
///
/// Over a field only `dimension` is meaningful (and `free_rank` mirrors
/// it). Over ℤ, `free_rank` counts ℤ-summands and `torsion` lists the
/// invariant factors > 1 in a divisibility chain. Over ℤ/m the factors
/// equal to m count as free ℤ/m-rank and the rest stay in `torsion`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub dimension: Option<usize>,
    /// (generators, relations) when the group is reported as a presented
    /// module rather than by rank/torsion (infinite-dimensional cases).
    pub presentation: Option<(usize, usize)>,
}

impl HomologyReport {
    pub fn zero(degree: i64, field: bool) -> Self {
        HomologyReport {
            degree,
            free_rank: 0,
            torsion: Vec::new(),
            dimension: if field { Some(0) } else { None },
            presentation: None,
        }
    }

    pub fn field(degree: i64, dim: usize) -> Self {
        HomologyReport {
            degree,
            free_rank: dim,
            torsion: Vec::new(),
            dimension: Some(dim),
            presentation: None,
        }
    }

    pub fn over_z(degree: i64, free_rank: usize, torsion: Vec<BigInt>) -> Self {
        HomologyReport {
            degree,
            free_rank,
            torsion,
            dimension: None,
            presentation: None,
        }
    }

    /// Package ℤ/m invariant factors: factors equal to the full modulus are
    /// free summands of the ℤ/m-module.
    pub fn over_zmod(degree: i64, modulus: u64, factors: Vec<BigInt>) -> Self {
        let m = BigInt::from(modulus);
        let free = factors.iter().filter(|f| **f == m).count();
        let torsion = factors
            .into_iter()
            .filter(|f| *f != m && !f.is_one())
            .collect();
        HomologyReport {
            degree,
            free_rank: free,
            torsion,
            dimension: None,
            presentation: None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0
            && self.torsion.is_empty()
            && self.presentation.map_or(true, |(g, _)| g == 0)
    }

    /// Total length as an abelian-group invariant list (free rank summands
    /// plus torsion factors); used for degreewise comparisons.
    pub fn signature(&self) -> (usize, Vec<BigInt>) {
        (self.free_rank, self.torsion.clone())
    }

    pub fn describe(&self, ring: &CoefficientRing) -> String {
        match ring {
            CoefficientRing::Rationals | CoefficientRing::PrimeField(_) => {
                alloc::format!("dim {}", self.dimension.unwrap_or(self.free_rank))
            }
            CoefficientRing::Integers => {
                alloc::format!("free {} torsion {:?}", self.free_rank, self.torsion)
            }
            CoefficientRing::IntegersMod(m) => {
                alloc::format!("free(Z/{m}) {} torsion {:?}", self.free_rank, self.torsion)
            }
        }
    }
}

/// A graded collection of reports with a reliability cutoff: degrees above
/// `reliable_through` are computed from truncated data and flagged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedReport {
    pub reports: Vec<HomologyReport>,
    pub reliable_through: i64,
    pub notes: Vec<String>,
}

impl GradedReport {
    pub fn dimensions(&self) -> Vec<usize> {
        self.reports
            .iter()
            .map(|r| r.dimension.unwrap_or(r.free_rank))
            .collect()
    }

    pub fn report_at(&self, degree: i64) -> Option<&HomologyReport> {
        self.reports.iter().find(|r| r.degree == degree)
    }
}
