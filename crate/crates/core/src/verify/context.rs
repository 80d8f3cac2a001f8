use std::sync::{Arc, OnceLock};

use crate::algebra::{
    automorphism_generators, is_characteristic, normal_subgroups, AutGenerators, Characteristic, ElementTable,
    LatticeBudget, NormalSubgroups, Subgroup,
};
use crate::error::{Error, Result};
use crate::invariants::{
    composition_factors, frattini, invariant_profile, simple_subnormals, CompositionData, InvariantProfile,
    SimpleSubnormals,
};
use crate::perm::Group;

/// Limits on the expensive computations. Exceeding one turns the affected
/// check into a skipped record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Largest group that is enumerated at all.
    pub max_order: u128,
    /// Largest group whose classes and normal subgroups are computed.
    pub normal: u128,
    /// Largest group whose automorphism group is searched.
    pub aut: u128,
    pub lattice: LatticeBudget,
    /// Largest group for the minimum generating set search.
    pub min_generators: u128,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_order: 5000,
            normal: 5000,
            aut: 500,
            lattice: LatticeBudget::default(),
            min_generators: 5000,
        }
    }
}

/// Decides whether normal subgroups are characteristic. A normal subgroup
/// that is the only one of its order is characteristic outright; the others
/// are tested against generators of the automorphism group, searched once on
/// first use.
pub struct CharTester {
    g: Subgroup,
    normals: NormalSubgroups,
    auts: OnceLock<AutGenerators>,
    aut_budget: u128,
}

impl CharTester {
    pub fn new(g: &Subgroup, budgets: &Budgets) -> Result<Self> {
        Ok(CharTester {
            g: g.clone(),
            normals: normal_subgroups(g, budgets.normal)?,
            auts: OnceLock::new(),
            aut_budget: budgets.aut,
        })
    }

    pub fn group(&self) -> &Subgroup {
        &self.g
    }

    pub fn normals(&self) -> &NormalSubgroups {
        &self.normals
    }

    pub fn auts(&self) -> &AutGenerators {
        self.auts.get_or_init(|| automorphism_generators(&self.g, self.aut_budget))
    }

    /// Whether `n` (normal in the group) is characteristic, and how that was
    /// decided.
    pub fn is_characteristic(&self, n: &Subgroup) -> Result<(bool, &'static str)> {
        if n.is_trivial() || n.order() == self.g.order() {
            return Ok((true, "trivial or whole group"));
        }
        if self.normals.unique_order(n) {
            return Ok((true, "only normal subgroup of its order"));
        }
        match is_characteristic(&self.g, n, self.auts()) {
            Characteristic::Yes => Ok((true, "fixed by automorphism generators")),
            Characteristic::No => Ok((false, "moved by an automorphism")),
            Characteristic::Unknown(_) => Err(Error::BudgetExceeded {
                what: "automorphism search",
                needed: self.g.order() as u128,
                budget: self.aut_budget,
            }),
        }
    }
}

/// A corpus group with its lazily computed, shared invariants.
pub struct GroupContext {
    pub name: String,
    pub group: Group,
    pub table: Arc<ElementTable>,
    pub g: Subgroup,
    pub budgets: Budgets,
    /// `(p, e)` for the semilinear example family.
    pub example: Option<(u64, u32)>,
    profile: OnceLock<InvariantProfile>,
    chars: OnceLock<Result<CharTester>>,
    comps: OnceLock<Result<SimpleSubnormals>>,
    composition: OnceLock<Result<CompositionData>>,
    frattini: OnceLock<Result<Subgroup>>,
}

impl GroupContext {
    pub fn new(name: impl Into<String>, group: Group, budgets: Budgets) -> Result<Self> {
        let table = ElementTable::new(&group, budgets.max_order)?;
        let g = table.whole();
        Ok(GroupContext {
            name: name.into(),
            group,
            table,
            g,
            budgets,
            example: None,
            profile: OnceLock::new(),
            chars: OnceLock::new(),
            comps: OnceLock::new(),
            composition: OnceLock::new(),
            frattini: OnceLock::new(),
        })
    }

    pub fn with_example(mut self, p: u64, e: u32) -> Self {
        self.example = Some((p, e));
        self
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn profile(&self) -> &InvariantProfile {
        self.profile.get_or_init(|| invariant_profile(&self.g))
    }

    pub fn chars(&self) -> Result<&CharTester> {
        self.chars
            .get_or_init(|| CharTester::new(&self.g, &self.budgets))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn normals(&self) -> Result<&NormalSubgroups> {
        self.chars().map(CharTester::normals)
    }

    pub fn simple_subnormals(&self) -> Result<&SimpleSubnormals> {
        self.comps
            .get_or_init(|| simple_subnormals(&self.g, self.budgets.normal))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn composition(&self) -> Result<&CompositionData> {
        self.composition
            .get_or_init(|| composition_factors(&self.g, self.budgets.normal))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn frattini(&self) -> Result<&Subgroup> {
        self.frattini
            .get_or_init(|| frattini(&self.g, &self.budgets.lattice))
            .as_ref()
            .map_err(Clone::clone)
    }
}
