//! Finite groups as Cayley tables, subgroup lattices, double cosets and
//! quotients.

mod builtin;
mod lattice;
mod table;

pub use builtin::{
    alternating, builtin, cyclic, dihedral, direct_product, quaternion8, semidirect_cyclic, sl23, suite_names,
    symmetric,
};
pub use lattice::{
    double_cosets, quotient_group, DoubleCosets, Subgroup, SubgroupLattice, DEFAULT_LATTICE_BOUND,
    MAX_LATTICE_ORDER,
};
pub(crate) use lattice::is_power_of;
pub use table::{GroupTable, MAX_CLOSURE_ORDER, MAX_PERMUTATION_DEGREE};

/// A group together with its subgroup lattice.
#[derive(Clone, Debug)]
pub struct Group {
    pub table: GroupTable,
    pub lattice: SubgroupLattice,
}

impl Group {
    pub fn new(table: GroupTable) -> crate::Result<Self> {
        let lattice = SubgroupLattice::new(&table)?;
        Ok(Group { table, lattice })
    }

    pub fn with_bound(table: GroupTable, bound: usize) -> crate::Result<Self> {
        let lattice = SubgroupLattice::with_bound(&table, bound)?;
        Ok(Group { table, lattice })
    }

    pub fn builtin(name: &str) -> crate::Result<Self> {
        Self::new(builtin(name)?)
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn name(&self) -> &str {
        self.table.name()
    }
}
