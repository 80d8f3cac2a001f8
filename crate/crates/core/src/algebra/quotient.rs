use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::algebra::{is_normal, ElementTable, Subgroup};
use crate::error::{Error, Result};
use crate::perm::{Group, Permutation};

/// `G/N` realised as a permutation group on the right cosets of `N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    source: Subgroup,
    kernel: Subgroup,
    table: Arc<ElementTable>,
    /// Image of each source-table element in the quotient table
    /// (`u32::MAX` outside `G`).
    projection: Vec<u32>,
}

impl Quotient {
    pub fn source(&self) -> &Subgroup {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn group(&self) -> &Group {
        self.table.group()
    }

    pub fn table(&self) -> &Arc<ElementTable> {
        &self.table
    }

    pub fn whole(&self) -> Subgroup {
        self.table.whole()
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    /// Image of a source element.
    pub fn project(&self, x: u32) -> u32 {
        self.projection[x as usize]
    }

    /// Image of a subgroup of `G`.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<u32> = h.generators().iter().map(|&x| self.project(x)).collect();
        self.table.closure(&gens)
    }

    /// Full preimage in `G` of a subgroup of the quotient.
    pub fn preimage(&self, q: &Subgroup) -> Subgroup {
        let t = self.source.table();
        let mut bits = FixedBitSet::with_capacity(t.len());
        for x in self.source.elements() {
            if q.contains(self.project(x)) {
                bits.insert(x as usize);
            }
        }
        t.subgroup_from_bits(bits)
    }
}

/// Builds `G/N`. Fails with a domain error when `N` is not normal in `G`.
pub fn quotient(g: &Subgroup, n: &Subgroup, budget: u128) -> Result<Quotient> {
    if !g.same_table(n) || !is_normal(g, n) {
        return Err(Error::domain("quotient requires a normal subgroup"));
    }
    let t = g.table();
    if n.is_trivial() {
        if g.is_whole() {
            return Ok(Quotient {
                source: g.clone(),
                kernel: n.clone(),
                table: Arc::clone(t),
                projection: (0..t.len() as u32).collect(),
            });
        }
        let qt = ElementTable::new(&g.to_group(), budget)?;
        let mut projection = vec![u32::MAX; t.len()];
        for x in g.elements() {
            projection[x as usize] = qt.index_of(t.element(x)).expect("element of G");
        }
        return Ok(Quotient {
            source: g.clone(),
            kernel: n.clone(),
            table: qt,
            projection,
        });
    }

    let mut label = vec![u32::MAX; t.len()];
    let mut reps: Vec<u32> = Vec::new();
    let kernel: Vec<u32> = n.elements().collect();
    for x in g.elements() {
        if label[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        for &k in &kernel {
            label[t.mul(k, x) as usize] = c;
        }
        reps.push(x);
    }
    let m = reps.len();
    let gens = g.generators();
    let qgens: Vec<Permutation> = if gens.is_empty() {
        vec![Permutation::identity(m)]
    } else {
        gens.iter()
            .map(|&s| {
                let images = reps.iter().map(|&r| label[t.mul(r, s) as usize]).collect();
                Permutation::from_images(images).expect("coset action is a bijection")
            })
            .collect()
    };
    let qgroup = Group::new(m, qgens)?;
    let qt = ElementTable::new(&qgroup, budget)?;
    if qt.len() * n.order() != g.order() {
        return Err(Error::domain("coset action is not faithful on G/N"));
    }

    // projection through a spanning tree of G's Cayley graph
    let mut projection = vec![u32::MAX; t.len()];
    projection[t.identity() as usize] = qt.identity();
    let qgen_idx = qt.generators().to_vec();
    let mut queue = vec![t.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (i, &s) in gens.iter().enumerate() {
            let y = t.mul(x, s);
            if projection[y as usize] == u32::MAX {
                projection[y as usize] = qt.mul(projection[x as usize], qgen_idx[i]);
                queue.push(y);
            }
        }
    }
    Ok(Quotient {
        source: g.clone(),
        kernel: n.clone(),
        table: qt,
        projection,
    })
}
