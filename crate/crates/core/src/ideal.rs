//! Two-sided ideals of F2[G]: closure from generators, membership, the
//! weight-2 detector, and transport along conjugation and `g -> g^-1`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2la::{BitVector, EchelonBasis};
use crate::findex::PermGroup;
use crate::galg::AlgebraElement;
use crate::perm::{centralizer_of_set, normalizer_of_set, PermSet, Permutation};

/// Largest group algebra an ideal closure is computed in.
pub const DEFAULT_CLOSURE_BOUND: usize = 5040;

#[derive(Clone)]
pub struct Ideal {
    group: Arc<PermGroup>,
    group_gens: Vec<usize>,
    generators: Vec<AlgebraElement>,
    basis: EchelonBasis,
    closed: bool,
}

/// Generator expressions and dimension, as embedded in certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    pub generators: Vec<String>,
    pub dim: usize,
}

impl Ideal {
    /// The smallest two-sided ideal containing `gens`.
    ///
    /// Multiplying by `group_gens` on both sides is enough: products of
    /// generators reach every group element, and group elements span F2[G].
    pub fn close(group: &Arc<PermGroup>, group_gens: &[Permutation], gens: &[AlgebraElement]) -> Result<Ideal> {
        let n = group.size();
        if n > DEFAULT_CLOSURE_BOUND {
            return Err(Error::DimensionBound { dim: n, bound: DEFAULT_CLOSURE_BOUND });
        }
        let gen_idx = group_gens.iter().map(|p| group.index_of_perm(p)).collect::<Result<Vec<usize>>>()?;
        if group.generated_subgroup(&gen_idx).len() != n {
            return Err(Error::NotGenerating);
        }
        let mut ideal = Ideal {
            group: Arc::clone(group),
            group_gens: gen_idx,
            generators: Vec::new(),
            basis: EchelonBasis::new(n),
            closed: true,
        };
        ideal.absorb(gens)?;
        Ok(ideal)
    }

    /// The ideal generated by `self` together with `extra`.
    pub fn extend(&self, extra: &[AlgebraElement]) -> Result<Ideal> {
        let mut out = self.clone();
        out.absorb(extra)?;
        Ok(out)
    }

    fn absorb(&mut self, gens: &[AlgebraElement]) -> Result<()> {
        for g in gens {
            if !Arc::ptr_eq(g.group(), &self.group) {
                return Err(Error::GroupMismatch);
            }
        }
        let maps: Vec<Vec<u32>> = self
            .group_gens
            .iter()
            .flat_map(|&s| [self.group.left_translation(s), self.group.right_translation(s)])
            .collect();
        let mut queue: VecDeque<BitVector> = gens.iter().map(|g| g.coeffs().clone()).collect();
        while let Some(mut v) = queue.pop_front() {
            self.basis.reduce_in_place(&mut v);
            if v.is_zero() {
                continue;
            }
            // v differs from the queued vector by a span element, whose
            // translates are handled when that element was inserted
            for map in &maps {
                queue.push_back(v.permuted(map));
            }
            self.basis.insert_reduced(v);
        }
        self.generators.extend(gens.iter().cloned());
        self.closed = true;
        Ok(())
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn group_generators(&self) -> Vec<Permutation> {
        self.group_gens.iter().map(|&i| *self.group.element(i)).collect()
    }

    pub fn generators(&self) -> &[AlgebraElement] {
        &self.generators
    }

    pub fn basis(&self) -> &EchelonBasis {
        &self.basis
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Dimension over F2.
    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    /// Dimension of the quotient F2[G]/I.
    pub fn codim(&self) -> usize {
        self.group.size() - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.codim() == 0
    }

    pub fn contains(&self, x: &AlgebraElement) -> Result<bool> {
        if !Arc::ptr_eq(x.group(), &self.group) {
            return Err(Error::GroupMismatch);
        }
        self.basis.contains(x.coeffs())
    }

    /// Canonical coset representative of `x`.
    pub fn canonicalize(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if !Arc::ptr_eq(x.group(), &self.group) {
            return Err(Error::GroupMismatch);
        }
        AlgebraElement::from_coeffs(&self.group, self.basis.reduce(x.coeffs())?)
    }

    /// Distinct `g`, `h` with `g + h` in the ideal, if any exist.
    ///
    /// `g + h` lies in the ideal exactly when `e_g` and `e_h` have the same
    /// canonical form, so one pass over the group finds every collision.
    pub fn weight2_witness(&self) -> Option<(Permutation, Permutation)> {
        let mut seen: HashMap<BitVector, usize> = HashMap::with_capacity(self.group.size());
        for g in 0..self.group.size() {
            let form = self.basis.reduce_unit(g);
            if let Some(&h) = seen.get(&form) {
                return Some((*self.group.element(h), *self.group.element(g)));
            }
            seen.insert(form, g);
        }
        None
    }

    /// Whether `s * r` and `r * s` stay in the span for every basis row and
    /// group generator.
    pub fn check_closed(&self) -> bool {
        self.group_gens.iter().all(|&s| {
            let left = self.group.left_translation(s);
            let right = self.group.right_translation(s);
            self.basis.rows().iter().all(|r| {
                self.basis.contains(&r.permuted(&left)).unwrap() && self.basis.contains(&r.permuted(&right)).unwrap()
            })
        })
    }

    pub fn same_span(&self, other: &Ideal) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.basis == other.basis
    }

    fn transported(&self, map: &[u32], generators: Vec<AlgebraElement>) -> Result<Ideal> {
        let rows: Vec<BitVector> = self.basis.rows().iter().map(|r| r.permuted(map)).collect();
        Ok(Ideal {
            group: Arc::clone(&self.group),
            group_gens: self.group_gens.clone(),
            generators,
            basis: EchelonBasis::from_vectors(self.group.size(), &rows)?,
            closed: self.closed,
        })
    }

    /// `t I t^-1`; conjugation is an algebra automorphism, so the result is
    /// again a two-sided ideal.
    pub fn conjugate(&self, t: &Permutation) -> Result<Ideal> {
        let ti = self.group.index_of_perm(t)?;
        let map: Vec<u32> = (0..self.group.size()).map(|g| self.group.conj(ti, g) as u32).collect();
        let generators = self
            .generators
            .iter()
            .map(|x| AlgebraElement::from_coeffs(&self.group, x.coeffs().permuted(&map)))
            .collect::<Result<Vec<_>>>()?;
        self.transported(&map, generators)
    }

    /// Image under `g -> g^-1`, which makes F2[G]/I and F2[G]/antipode(I)
    /// opposite rings.
    pub fn antipode(&self) -> Result<Ideal> {
        let map: Vec<u32> = (0..self.group.size()).map(|g| self.group.inv(g) as u32).collect();
        let generators: Vec<AlgebraElement> = self.generators.iter().map(AlgebraElement::antipode).collect();
        let mut out = self.transported(&map, generators)?;
        let rows: Vec<AlgebraElement> = out
            .basis
            .rows()
            .iter()
            .map(|r| AlgebraElement::from_coeffs(&self.group, r.clone()))
            .collect::<Result<_>>()?;
        let generators = std::mem::take(&mut out.generators);
        out.absorb(&rows)?;
        out.generators = generators;
        Ok(out)
    }

    pub fn summary(&self) -> IdealSummary {
        IdealSummary { generators: self.generators.iter().map(ToString::to_string).collect(), dim: self.dim() }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("generators", &self.generators.iter().map(ToString::to_string).collect::<Vec<_>>())
            .field("dim", &self.dim())
            .field("ambient", &self.group.size())
            .finish()
    }
}

pub fn close(group: &Arc<PermGroup>, group_gens: &[Permutation], gens: &[AlgebraElement]) -> Result<Ideal> {
    Ideal::close(group, group_gens, gens)
}

pub fn conjugate_ideal(ideal: &Ideal, t: &Permutation) -> Result<Ideal> {
    ideal.conjugate(t)
}

pub fn antipode_ideal(ideal: &Ideal) -> Result<Ideal> {
    ideal.antipode()
}

/// Every `σ` that can satisfy `T + σ ∈ I` for the unit `T`: the centralizer
/// of the setwise normalizer of `T`.
pub fn sigma_candidates(g: &PermSet, t: &PermSet) -> Result<PermSet> {
    let normalizer = normalizer_of_set(g, t)?;
    centralizer_of_set(g, &normalizer)
}
