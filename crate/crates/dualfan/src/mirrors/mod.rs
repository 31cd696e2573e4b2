//! Mirror pipelines. Each one builds a pair of fans `Sigma_X` (in the
//! one-parameter lattice) and `Sigma_X'` (in the character lattice), the two
//! auxiliary coefficient spaces, and checks that the toric LG models of the
//! pair arise from the auxiliary models by base change.

mod bb;
mod bhk;
mod givental;
mod quintic;

pub use bb::{
    bb_mirror_pair, dual_splittings, is_gorenstein, is_reflexive, support_partition, GorensteinCertificate,
    ReflexiveData, SupportPartition,
};
pub use bhk::{bhk_pair, krawitz_dual_group, phase_symmetries, verify_bhk_criterion, BHKInput};
pub use givental::{
    givental_basis_independence, givental_mirror, givental_mirror_with_basis, hori_vafa_mirror, splitting_basis,
    GiventalInput,
};
pub use quintic::{quintic_base_fan, quintic_phases, quintic_pipeline};

use crate::fans::{DualFanReport, Fan};
use crate::lattice::{FiniteAbelianGroup, LatticeMap};
use crate::poly::ParamPoly;
use crate::toric_lg::BaseChangeReport;
use crate::{Error, IntVec, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPotential {
    pub name: String,
    pub terms: Vec<(IntVec, ParamPoly)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorReport {
    pub pipeline: String,
    pub sigma: Fan,
    pub sigma_prime: Fan,
    pub duality: DualFanReport,
    /// Characters indexing the coordinates of `Gamma`.
    pub xi: Vec<IntVec>,
    /// Exponents indexing the coordinates of `Gamma'`.
    pub xi_prime: Vec<IntVec>,
    /// `C(Sigma') -> Gamma`.
    pub inclusion: BaseChangeReport,
    /// `C(Sigma) -> Gamma'`.
    pub inclusion_prime: BaseChangeReport,
    pub groups: Vec<(String, FiniteAbelianGroup)>,
    pub matrices: Vec<(String, LatticeMap)>,
    pub potentials: Vec<NamedPotential>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl MirrorReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.check(name).is_some_and(|c| c.passed)
    }

    pub fn potential(&self, name: &str) -> Option<&NamedPotential> {
        self.potentials.iter().find(|p| p.name == name)
    }

    pub fn group(&self, name: &str) -> Option<&FiniteAbelianGroup> {
        self.groups.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn matrix(&self, name: &str) -> Option<&LatticeMap> {
        self.matrices.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    /// The report itself when every check passed, otherwise an error naming
    /// the first failure.
    pub fn verify(self) -> Result<Self> {
        match self.checks.iter().find(|c| !c.passed) {
            None => Ok(self),
            Some(c) => Err(Error::CheckFailed(format!("{}: {}", c.name, c.detail))),
        }
    }
}

pub(crate) fn duality_detail(d: &DualFanReport) -> String {
    match &d.witness {
        None => "every pairing of ray generators is nonnegative".into(),
        Some(w) => format!("ray {} of Sigma' pairs to {} with ray {} of Sigma", w.dual_ray, w.pairing, w.ray),
    }
}

/// Accumulates named checks while a pipeline runs.
#[derive(Default)]
pub(crate) struct Checks(pub Vec<Check>);

impl Checks {
    pub fn add(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.0.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
        passed
    }
}
