use std::collections::HashMap;

use crate::kernel::SetMap;
use crate::{Error, Result};

/// A finite carrier of named atoms with an equality given by a partition.
///
/// Blocks are normalized: block ids follow the order in which each block's
/// first atom appears, so two setoids with the same atoms and the same
/// equality compare equal regardless of how their blocks were listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSetoid {
    name: String,
    atoms: Vec<String>,
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl FinSetoid {
    /// Builds a setoid from atoms and a partition given by atom names.
    pub fn new<N, A, B>(name: N, atoms: A, blocks: B) -> Result<Self>
    where
        N: Into<String>,
        A: IntoIterator,
        A::Item: Into<String>,
        B: IntoIterator,
        B::Item: IntoIterator,
        <B::Item as IntoIterator>::Item: AsRef<str>,
    {
        let name = name.into();
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        let index = atom_index(&name, &atoms)?;
        let mut ids = vec![usize::MAX; atoms.len()];
        for (b, block) in blocks.into_iter().enumerate() {
            let mut empty = true;
            for atom in block {
                empty = false;
                let atom = atom.as_ref();
                let &i = index.get(atom).ok_or_else(|| Error::InvalidPartition {
                    set: name.clone(),
                    reason: format!("block mentions unknown atom `{atom}`"),
                })?;
                if ids[i] != usize::MAX {
                    return Err(Error::InvalidPartition {
                        set: name.clone(),
                        reason: format!("atom `{atom}` appears in more than one block"),
                    });
                }
                ids[i] = b;
            }
            if empty {
                return Err(Error::InvalidPartition {
                    set: name.clone(),
                    reason: "empty block".into(),
                });
            }
        }
        if let Some(i) = ids.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition {
                set: name,
                reason: format!("atom `{}` is in no block", atoms[i]),
            });
        }
        Ok(Self::from_block_ids_unchecked(name, atoms, &ids))
    }

    /// Every atom in its own block.
    pub fn discrete<N, A>(name: N, atoms: A) -> Result<Self>
    where
        N: Into<String>,
        A: IntoIterator,
        A::Item: Into<String>,
    {
        let name = name.into();
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        atom_index(&name, &atoms)?;
        let ids: Vec<usize> = (0..atoms.len()).collect();
        Ok(Self::from_block_ids_unchecked(name, atoms, &ids))
    }

    /// Builds a setoid from an arbitrary block labelling (`ids[i]` is the
    /// label of atom `i`); labels are renumbered.
    pub fn from_block_ids<N, A>(name: N, atoms: A, ids: &[usize]) -> Result<Self>
    where
        N: Into<String>,
        A: IntoIterator,
        A::Item: Into<String>,
    {
        let name = name.into();
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        atom_index(&name, &atoms)?;
        if ids.len() != atoms.len() {
            return Err(Error::InvalidPartition {
                set: name,
                reason: format!("{} labels for {} atoms", ids.len(), atoms.len()),
            });
        }
        Ok(Self::from_block_ids_unchecked(name, atoms, ids))
    }

    /// Builds a setoid from an equality predicate, checking that it is an
    /// equivalence relation.
    pub fn from_relation<N, A>(name: N, atoms: A, eq: impl Fn(usize, usize) -> bool) -> Result<Self>
    where
        N: Into<String>,
        A: IntoIterator,
        A::Item: Into<String>,
    {
        let name = name.into();
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        atom_index(&name, &atoms)?;
        let n = atoms.len();
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        for i in 0..n {
            if ids[i] == usize::MAX {
                for (j, id) in ids.iter_mut().enumerate().skip(i) {
                    if *id == usize::MAX && eq(i, j) {
                        *id = next;
                    }
                }
                next += 1;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if eq(i, j) != (ids[i] == ids[j]) {
                    return Err(Error::InvalidPartition {
                        set: name,
                        reason: format!(
                            "relation is not an equivalence at ({}, {})",
                            atoms[i], atoms[j]
                        ),
                    });
                }
            }
        }
        Ok(Self::from_block_ids_unchecked(name, atoms, &ids))
    }

    pub(crate) fn from_block_ids_unchecked(
        name: String,
        atoms: Vec<String>,
        ids: &[usize],
    ) -> Self {
        let mut renumber: HashMap<usize, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = Vec::with_capacity(ids.len());
        for (i, id) in ids.iter().enumerate() {
            let b = *renumber.entry(*id).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i);
            block_of.push(b);
        }
        FinSetoid {
            name,
            atoms,
            block_of,
            blocks,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom(&self, i: usize) -> &str {
        &self.atoms[i]
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == atom)
    }

    pub fn require(&self, atom: &str) -> Result<usize> {
        self.index_of(atom).ok_or_else(|| Error::UnknownAtom {
            set: self.name.clone(),
            atom: atom.to_string(),
        })
    }

    /// `x =_X y`
    pub fn eq(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.block_of
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// First atom of `x`'s block.
    pub fn representative(&self, x: usize) -> usize {
        self.blocks[self.block_of[x]][0]
    }

    /// Same atoms (in the same order) and the same equality; names ignored.
    pub fn same_structure(&self, other: &FinSetoid) -> bool {
        self.atoms == other.atoms && self.block_of == other.block_of
    }

    /// Same atoms in the same order; the equalities may differ.
    pub fn same_atoms(&self, other: &FinSetoid) -> bool {
        self.atoms == other.atoms
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.atoms.len()
    }

    /// The equality is the total relation.
    pub fn is_total(&self) -> bool {
        self.blocks.len() <= 1
    }

    /// `true` when every pair equal here is equal in `coarser`.
    pub fn refines(&self, coarser: &FinSetoid) -> bool {
        debug_assert_eq!(self.len(), coarser.len());
        (0..self.len()).all(|x| {
            self.blocks[self.block_of[x]]
                .iter()
                .all(|&y| coarser.eq(x, y))
        })
    }

    /// Same atoms with a different equality.
    pub fn with_partition(&self, name: impl Into<String>, ids: &[usize]) -> Self {
        Self::from_block_ids_unchecked(name.into(), self.atoms.clone(), ids)
    }

    /// The subset on the listed atoms with the restricted equality, and its
    /// embedding into `self`.
    pub fn subset(&self, name: impl Into<String>, atoms: &[&str]) -> Result<(FinSetoid, SetMap)> {
        let name = name.into();
        let idx: Vec<usize> = atoms
            .iter()
            .map(|a| self.require(a))
            .collect::<Result<_>>()?;
        let ids: Vec<usize> = idx.iter().map(|&i| self.block_of[i]).collect();
        let sub =
            FinSetoid::from_block_ids(name.clone(), atoms.iter().map(|a| a.to_string()), &ids)?;
        let incl = SetMap::new(format!("i_{name}"), idx);
        Ok((sub, incl))
    }
}

fn atom_index(name: &str, atoms: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(atoms.len());
    for (i, a) in atoms.iter().enumerate() {
        if index.insert(a.clone(), i).is_some() {
            return Err(Error::InvalidPartition {
                set: name.to_string(),
                reason: format!("duplicate atom `{a}`"),
            });
        }
    }
    Ok(index)
}
