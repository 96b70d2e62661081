//! Monomial (permutation-times-diagonal) matrices over roots of unity and
//! representations of free groups by them.
//!
//! A representation whose permutation parts generate a group of p-power
//! order and whose diagonal entries are p-power roots of unity factors
//! through a p-group; that is the admissible twist class for every
//! obstruction computed by this crate.

use std::collections::{HashSet, VecDeque};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{Cyclotomic, RootOfUnity};
use crate::error::{Error, Result};
use crate::word::FreeWord;

/// Permutation-times-diagonal matrix: column c carries the entry
/// `diag[c]` in row `perm[c]` (0-based internally).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialMatrix {
    perm: Vec<usize>,
    diag: Vec<RootOfUnity>,
}

impl MonomialMatrix {
    pub fn new(perm: Vec<usize>, diag: Vec<RootOfUnity>) -> Result<Self> {
        if perm.len() != diag.len() {
            return Err(Error::SizeMismatch(perm.len(), diag.len()));
        }
        let k = perm.len();
        let mut seen = vec![false; k];
        for &r in &perm {
            if r >= k || seen[r] {
                return Err(Error::Parse(format!("not a permutation: {perm:?}")));
            }
            seen[r] = true;
        }
        Ok(MonomialMatrix { perm, diag })
    }

    pub fn identity(k: usize) -> Self {
        MonomialMatrix {
            perm: (0..k).collect(),
            diag: vec![RootOfUnity::one(); k],
        }
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn diag(&self) -> &[RootOfUnity] {
        &self.diag
    }

    /// Product, staying in closed monomial form.
    pub fn mul(&self, other: &MonomialMatrix) -> Result<MonomialMatrix> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let k = self.size();
        let mut perm = vec![0usize; k];
        let mut diag = vec![RootOfUnity::one(); k];
        for c in 0..k {
            let mid = other.perm[c];
            perm[c] = self.perm[mid];
            diag[c] = self.diag[mid].mul(&other.diag[c]);
        }
        Ok(MonomialMatrix { perm, diag })
    }

    pub fn inv(&self) -> MonomialMatrix {
        let k = self.size();
        let mut perm = vec![0usize; k];
        for (c, &r) in self.perm.iter().enumerate() {
            perm[r] = c;
        }
        let diag = (0..k).map(|c| self.diag[perm[c]].inv()).collect();
        MonomialMatrix { perm, diag }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(c, &r)| c == r)
            && self.diag.iter().all(|d| d.is_one())
    }

    /// Sign of the permutation part.
    pub fn perm_sign(&self) -> i8 {
        let transpositions = self.size() - self.cycles().len();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.size();
        let mut seen = vec![false; k];
        let mut cycles = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                cycle.push(c);
                c = self.perm[c];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// det = sign(perm) * prod(diag), a root of unity.
    pub fn det(&self) -> RootOfUnity {
        let mut d = if self.perm_sign() < 0 {
            RootOfUnity::minus_one()
        } else {
            RootOfUnity::one()
        };
        for e in &self.diag {
            d = d.mul(e);
        }
        d
    }

    /// Exact eigenvalue multiset: each permutation cycle of length l with
    /// diagonal product w contributes the l distinct l-th roots of w.
    /// Sorted for deterministic output.
    pub fn eigenvalues(&self) -> Vec<RootOfUnity> {
        let mut eigs = Vec::with_capacity(self.size());
        for cycle in self.cycles() {
            let mut w = RootOfUnity::one();
            for &c in &cycle {
                w = w.mul(&self.diag[c]);
            }
            eigs.extend(w.nth_roots(cycle.len() as u64));
        }
        eigs.sort_by(|a, b| {
            (a.numerator() as u128 * b.denominator() as u128)
                .cmp(&(b.numerator() as u128 * a.denominator() as u128))
        });
        eigs
    }

    /// Smallest conductor containing every diagonal entry.
    pub fn entry_conductor(&self) -> u64 {
        self.diag.iter().fold(1u64, |acc, d| acc.lcm(&d.order()))
    }

    /// Dense expansion over Z[zeta_conductor].
    pub fn to_dense(&self, conductor: u64) -> Result<Vec<Vec<Cyclotomic>>> {
        let k = self.size();
        let mut rows = vec![vec![Cyclotomic::zero(conductor); k]; k];
        for c in 0..k {
            rows[self.perm[c]][c] = self.diag[c].to_cyclotomic(conductor)?;
        }
        Ok(rows)
    }

    pub fn order_divides_power_of(&self, p: u64, max_exponent: u32) -> bool {
        let mut m = self.clone();
        for _ in 0..=max_exponent {
            if m.is_identity() {
                return true;
            }
            let mut next = m.clone();
            for _ in 1..p {
                next = next.mul(&m).unwrap();
            }
            m = next;
        }
        m.is_identity()
    }
}

/// Cyclic group of roots of unity generated by the determinants of a
/// representation's generators.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DetGroup {
    pub order: u64,
    pub generator: RootOfUnity,
}

/// The intersection of a determinant group with the reals.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RealUnits {
    /// {1}
    One,
    /// {1, -1}
    PlusMinusOne,
}

impl DetGroup {
    pub fn real_intersection(&self) -> RealUnits {
        if self.order % 2 == 0 {
            RealUnits::PlusMinusOne
        } else {
            RealUnits::One
        }
    }

    pub fn contains(&self, x: &RootOfUnity) -> bool {
        self.order % x.order() == 0
    }
}

/// Certificate reported by [`MonomialRep::verify_p_group`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PGroupCertificate {
    pub permutation_group_order: u64,
    pub permutation_order_is_p_power: bool,
    pub max_diag_order: u64,
    pub diag_orders_are_p_powers: bool,
}

impl PGroupCertificate {
    pub fn holds(&self) -> bool {
        self.permutation_order_is_p_power && self.diag_orders_are_p_powers
    }
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// An assignment of monomial matrices to free-group generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialRep {
    generators: Vec<MonomialMatrix>,
    size: usize,
    conductor: u64,
}

pub const DEFAULT_CLOSURE_BUDGET: usize = 1_000_000;

impl MonomialRep {
    pub fn new(generators: Vec<MonomialMatrix>) -> Result<Self> {
        let size = generators.first().map(|g| g.size()).unwrap_or(1);
        let mut conductor = 1u64;
        for g in &generators {
            if g.size() != size {
                return Err(Error::SizeMismatch(size, g.size()));
            }
            conductor = conductor.lcm(&g.entry_conductor());
        }
        Ok(MonomialRep {
            generators,
            size,
            conductor,
        })
    }

    /// Trivial k-dimensional representation on m generators.
    pub fn trivial(m: usize, k: usize) -> Self {
        MonomialRep {
            generators: vec![MonomialMatrix::identity(k); m],
            size: k,
            conductor: 1,
        }
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// lcm of the diagonal orders of all generators.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn generators(&self) -> &[MonomialMatrix] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &MonomialMatrix {
        &self.generators[i]
    }

    /// Left-to-right product of generator images.
    pub fn evaluate_word(&self, w: &FreeWord) -> Result<MonomialMatrix> {
        let mut acc = MonomialMatrix::identity(self.size);
        for &(g, e) in w.letters() {
            if g > self.generators.len() {
                return Err(Error::Parse(format!(
                    "word uses generator x{g} but the representation has {}",
                    self.generators.len()
                )));
            }
            let img = &self.generators[g - 1];
            let factor = if e > 0 { img.clone() } else { img.inv() };
            acc = acc.mul(&factor)?;
        }
        Ok(acc)
    }

    /// Breadth-first closure of the group generated by the permutation
    /// parts, capped at `budget` elements.
    pub fn permutation_group_order(&self, budget: usize) -> Result<u64> {
        let k = self.size;
        let mut gens: Vec<Vec<usize>> = self.generators.iter().map(|g| g.perm.clone()).collect();
        let inverses: Vec<Vec<usize>> = gens
            .iter()
            .map(|p| {
                let mut inv = vec![0usize; k];
                for (c, &r) in p.iter().enumerate() {
                    inv[r] = c;
                }
                inv
            })
            .collect();
        gens.extend(inverses);
        let identity: Vec<usize> = (0..k).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(cur) = queue.pop_front() {
            for g in &gens {
                let next: Vec<usize> = (0..k).map(|c| g[cur[c]]).collect();
                if seen.insert(next.clone()) {
                    if seen.len() > budget {
                        return Err(Error::ClosureBudgetExceeded(budget));
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.len() as u64)
    }

    /// Checks the two p-group conditions: the permutation parts generate a
    /// group of p-power order and every diagonal entry is a p-power root
    /// of unity. The representation is assumed already in monomial form.
    pub fn verify_p_group(&self, p: u64, budget: usize) -> Result<PGroupCertificate> {
        let order = self.permutation_group_order(budget)?;
        let max_diag_order = self
            .generators
            .iter()
            .flat_map(|g| g.diag.iter().map(|d| d.order()))
            .max()
            .unwrap_or(1);
        let diag_ok = self
            .generators
            .iter()
            .all(|g| g.diag.iter().all(|d| is_p_power(d.order(), p)));
        Ok(PGroupCertificate {
            permutation_group_order: order,
            permutation_order_is_p_power: is_p_power(order, p),
            max_diag_order,
            diag_orders_are_p_powers: diag_ok,
        })
    }

    /// The finite cyclic group generated by the generator determinants.
    pub fn det_group(&self) -> DetGroup {
        let dets: Vec<RootOfUnity> = self.generators.iter().map(|g| g.det()).collect();
        let lcm = dets.iter().fold(1u64, |acc, d| acc.lcm(&d.order()));
        // subgroup of Z/lcm generated by the turn numerators
        let mut g = lcm;
        for d in &dets {
            g = g.gcd(&(d.numerator() * (lcm / d.order())));
        }
        DetGroup {
            order: lcm / g,
            generator: RootOfUnity::new(g as i64, lcm),
        }
    }
}

/// JSON wire format for a representation file.
#[derive(Serialize, Deserialize)]
struct RepFile {
    size: usize,
    conductor: u64,
    generators: Vec<GenFile>,
}

#[derive(Serialize, Deserialize)]
struct GenFile {
    /// 1-indexed images: column c maps to row perm[c].
    perm: Vec<usize>,
    diag: Vec<RootOfUnity>,
}

impl MonomialRep {
    pub fn from_json(s: &str) -> Result<Self> {
        let file: RepFile =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("rep file: {e}")))?;
        let mut generators = Vec::with_capacity(file.generators.len());
        for g in &file.generators {
            if g.perm.len() != file.size || g.diag.len() != file.size {
                return Err(Error::SizeMismatch(file.size, g.perm.len()));
            }
            let perm: Vec<usize> = g
                .perm
                .iter()
                .map(|&r| {
                    if r >= 1 && r <= file.size {
                        Ok(r - 1)
                    } else {
                        Err(Error::Parse(format!("perm image {r} out of range")))
                    }
                })
                .collect::<Result<_>>()?;
            generators.push(MonomialMatrix::new(perm, g.diag.clone())?);
        }
        let rep = MonomialRep::new(generators)?;
        if file.conductor % rep.conductor() != 0 {
            return Err(Error::NotDivisor(rep.conductor(), file.conductor));
        }
        Ok(rep)
    }

    pub fn to_json(&self) -> String {
        let file = RepFile {
            size: self.size,
            conductor: self.conductor,
            generators: self
                .generators
                .iter()
                .map(|g| GenFile {
                    perm: g.perm.iter().map(|&r| r + 1).collect(),
                    diag: g.diag.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_matrix(entries: &[RootOfUnity]) -> MonomialMatrix {
        MonomialMatrix::new((0..entries.len()).collect(), entries.to_vec()).unwrap()
    }

    #[test]
    fn identity_multiplication() {
        let m = MonomialMatrix::new(
            vec![1, 2, 0],
            vec![
                RootOfUnity::new(1, 8),
                RootOfUnity::one(),
                RootOfUnity::new(3, 4),
            ],
        )
        .unwrap();
        let id = MonomialMatrix::identity(3);
        assert_eq!(id.mul(&m).unwrap(), m);
        assert_eq!(m.mul(&id).unwrap(), m);
        assert!(m.mul(&m.inv()).unwrap().is_identity());
        assert!(m.inv().mul(&m).unwrap().is_identity());
    }

    #[test]
    fn diagonal_matrices_multiply_entrywise() {
        let a = diag_matrix(&[RootOfUnity::new(1, 8), RootOfUnity::new(1, 2)]);
        let b = diag_matrix(&[RootOfUnity::new(1, 4), RootOfUnity::new(1, 2)]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.diag(), &[RootOfUnity::new(3, 8), RootOfUnity::one()]);
        assert_eq!(ab.perm(), &[0, 1]);
    }

    #[test]
    fn eigenvalues_of_identity() {
        let id = MonomialMatrix::identity(4);
        assert_eq!(id.eigenvalues(), vec![RootOfUnity::one(); 4]);
    }

    #[test]
    fn eigenvalues_of_a_cycle() {
        // 3-cycle with diagonal product zeta_2: eigenvalues are the cube
        // roots of -1
        let m = MonomialMatrix::new(
            vec![1, 2, 0],
            vec![
                RootOfUnity::minus_one(),
                RootOfUnity::one(),
                RootOfUnity::one(),
            ],
        )
        .unwrap();
        let eigs = m.eigenvalues();
        assert_eq!(eigs.len(), 3);
        for e in &eigs {
            assert_eq!(e.pow(3), RootOfUnity::minus_one());
        }
    }

    #[test]
    fn det_of_monomial_matrix() {
        // transposition has sign -1
        let m = MonomialMatrix::new(
            vec![1, 0],
            vec![RootOfUnity::new(1, 8), RootOfUnity::one()],
        )
        .unwrap();
        assert_eq!(m.det(), RootOfUnity::new(5, 8));
    }

    #[test]
    fn word_evaluation() {
        let rep = MonomialRep::trivial(2, 3);
        let w = FreeWord::parse("[x,y]").unwrap();
        assert!(rep.evaluate_word(&w).unwrap().is_identity());
        let empty = rep.evaluate_word(&FreeWord::identity()).unwrap();
        assert!(empty.is_identity());
        let cancel = rep.evaluate_word(&FreeWord::parse("x1X1").unwrap()).unwrap();
        assert!(cancel.is_identity());
    }

    #[test]
    fn trivial_rep_is_p_group_for_any_p() {
        let rep = MonomialRep::trivial(1, 1);
        for p in [2, 3, 5] {
            let cert = rep.verify_p_group(p, DEFAULT_CLOSURE_BUDGET).unwrap();
            assert!(cert.holds());
            assert_eq!(cert.permutation_group_order, 1);
        }
    }

    #[test]
    fn order_three_diagonal_fails_p_two() {
        let rep = MonomialRep::new(vec![diag_matrix(&[
            RootOfUnity::new(1, 3),
            RootOfUnity::one(),
        ])])
        .unwrap();
        let cert = rep.verify_p_group(2, DEFAULT_CLOSURE_BUDGET).unwrap();
        assert!(!cert.holds());
        assert!(!cert.diag_orders_are_p_powers);
        assert!(rep.verify_p_group(3, DEFAULT_CLOSURE_BUDGET).unwrap().holds());
    }

    #[test]
    fn det_group_of_single_diagonal_generator() {
        let rep = MonomialRep::new(vec![diag_matrix(&[RootOfUnity::new(1, 8)])]).unwrap();
        let dg = rep.det_group();
        assert_eq!(dg.order, 8);
        assert_eq!(dg.generator, RootOfUnity::new(1, 8));
        assert_eq!(dg.real_intersection(), RealUnits::PlusMinusOne);
        let trivial = MonomialRep::trivial(2, 4).det_group();
        assert_eq!(trivial.order, 1);
        assert_eq!(trivial.real_intersection(), RealUnits::One);
    }

    #[test]
    fn rep_json_round_trip() {
        let rep = MonomialRep::new(vec![MonomialMatrix::new(
            vec![1, 0],
            vec![RootOfUnity::new(1, 4), RootOfUnity::minus_one()],
        )
        .unwrap()])
        .unwrap();
        let back = MonomialRep::from_json(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
    }
}
