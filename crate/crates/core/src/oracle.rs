//! Brute-force finite group theory.
//!
//! Everything here works on explicit element lists, so it can re-derive the
//! commutator subgroup, abelianization and linear characters of a small group
//! without relying on any of the closed-form character formulas.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::chars::UnityRoot;
use crate::error::{Error, Result};
use crate::finring::Ring;
use crate::finring::RingHom;
use crate::sl2core::{enumerate_sl2_bounded, Mat2};

/// Default cap on the size of groups built by [`closure`].
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

/// Groups at most this large get a precomputed multiplication table.
pub const CAYLEY_LIMIT: usize = 10_000;

pub trait GroupElement: Clone + Eq + Hash + Ord + Debug {
    fn op(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

impl GroupElement for Mat2 {
    fn op(&self, other: &Mat2) -> Mat2 {
        *self * *other
    }

    /// Adjugate divided by the determinant; the determinant must be a unit.
    fn inverse(&self) -> Mat2 {
        let [a, b, c, d] = self.entries();
        let di = self
            .det()
            .inv()
            .expect("matrix with non-unit determinant in a group");
        Mat2::new(d * di, -b * di, -c * di, a * di).unwrap()
    }
}

/// A finite group given by its elements in ascending order.
#[derive(Debug, Clone)]
pub struct FiniteGroup<E: GroupElement> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    identity: usize,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl<E: GroupElement> FiniteGroup<E> {
    /// Builds a group from its elements, checking closure under product and inverse.
    pub fn from_elements(mut elements: Vec<E>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        if elements.is_empty() {
            return Err(Error::NotClosed);
        }
        let index: HashMap<E, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let e0 = &elements[0];
        let id = e0.op(&e0.inverse());
        let identity = *index.get(&id).ok_or(Error::NotClosed)?;
        let inverses = elements
            .iter()
            .map(|e| index.get(&e.inverse()).copied().ok_or(Error::NotClosed))
            .collect::<Result<Vec<_>>>()?;
        let n = elements.len();
        let table = if n <= CAYLEY_LIMIT {
            let mut t = Vec::with_capacity(n * n);
            for x in &elements {
                for y in &elements {
                    let i = index.get(&x.op(y)).ok_or(Error::NotClosed)?;
                    t.push(*i as u32);
                }
            }
            Some(t)
        } else {
            for x in &elements {
                for y in &elements {
                    if !index.contains_key(&x.op(y)) {
                        return Err(Error::NotClosed);
                    }
                }
            }
            None
        };
        Ok(FiniteGroup {
            elements,
            index,
            identity,
            inverses,
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn identity(&self) -> &E {
        &self.elements[self.identity]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.table {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.index[&self.elements[i].op(&self.elements[j])],
        }
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn pow(&self, i: usize, k: u64) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, i))
    }

    pub fn element_order(&self, i: usize) -> u64 {
        let mut x = i;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// Indices of the subgroup generated by `gens`, in discovery order.
    pub fn generated(&self, gens: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[self.identity] = true;
        let mut list = vec![self.identity];
        let mut used = Vec::new();
        for g in gens {
            if member[g] {
                continue;
            }
            used.push(g);
            let mut i = 0;
            while i < list.len() {
                let x = list[i];
                for &u in &used {
                    let y = self.mul(x, u);
                    if !member[y] {
                        member[y] = true;
                        list.push(y);
                    }
                }
                i += 1;
            }
        }
        list
    }

    /// The subgroup with the given member indices.
    pub fn subgroup(&self, members: &[usize]) -> Result<FiniteGroup<E>> {
        FiniteGroup::from_elements(members.iter().map(|&i| self.elements[i].clone()).collect())
    }

    pub fn is_normal(&self, sub: &FiniteGroup<E>) -> bool {
        self.elements.iter().all(|g| {
            let gi = g.inverse();
            sub.elements.iter().all(|k| sub.contains(&g.op(k).op(&gi)))
        })
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|i| (0..i).all(|j| self.mul(i, j) == self.mul(j, i)))
    }
}

/// The subgroup generated by `gens` under their own multiplication.
pub fn closure<E: GroupElement>(gens: &[E], cap: usize) -> Result<FiniteGroup<E>> {
    let first = gens.first().ok_or(Error::NotClosed)?;
    let id = first.op(&first.inverse());
    let mut seen: std::collections::HashSet<E> = std::collections::HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        for g in gens {
            let y = queue[i].op(g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::GroupTooLarge {
                        size: seen.len(),
                        cap,
                    });
                }
                queue.push(y);
            }
        }
        i += 1;
    }
    FiniteGroup::from_elements(queue)
}

/// SL2 over `ring` as a [`FiniteGroup`], with the ring-size bound of [`enumerate_sl2_bounded`].
pub fn sl2_group(ring: Ring, ring_bound: u64) -> Result<FiniteGroup<Mat2>> {
    FiniteGroup::from_elements(enumerate_sl2_bounded(ring, ring_bound)?)
}

fn commutator_indices<E: GroupElement>(g: &FiniteGroup<E>) -> Vec<usize> {
    let n = g.order();
    let mut is_comm = vec![false; n];
    for x in 0..n {
        let xi = g.inv(x);
        for y in 0..n {
            let c = g.mul(g.mul(x, y), g.mul(xi, g.inv(y)));
            is_comm[c] = true;
        }
    }
    let comms = (0..n).filter(|&i| is_comm[i]);
    g.generated(comms)
}

/// The commutator subgroup `[G, G]`.
pub fn commutator_subgroup<E: GroupElement>(g: &FiniteGroup<E>) -> Result<FiniteGroup<E>> {
    g.subgroup(&commutator_indices(g))
}

/// Invariant-factor structure of `G / [G, G]` with the projection onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianStructure {
    /// `d1 | d2 | ... | dk`, each at least 2.
    pub divisors: Vec<u64>,
    /// Coordinates of each group element (indexed like the group) in `⊕ Z/di`.
    pub projection: Vec<Vec<u64>>,
    pub commutator_order: usize,
}

impl AbelianStructure {
    pub fn order(&self) -> u64 {
        self.divisors.iter().product()
    }
}

/// A finite abelian group by its addition table.
struct AbTable {
    add: Vec<Vec<usize>>,
    zero: usize,
}

impl AbTable {
    fn n(&self) -> usize {
        self.add.len()
    }

    fn times(&self, x: usize, k: u64) -> usize {
        (0..k).fold(self.zero, |acc, _| self.add[acc][x])
    }

    fn order_of(&self, x: usize) -> u64 {
        let mut y = x;
        let mut k = 1;
        while y != self.zero {
            y = self.add[y][x];
            k += 1;
        }
        k
    }

    /// Quotient by the subgroup `members`; returns the table and the coset map.
    fn quotient(&self, members: &[usize]) -> (AbTable, Vec<usize>) {
        let mut coset = vec![usize::MAX; self.n()];
        let mut reps = Vec::new();
        for g in 0..self.n() {
            if coset[g] != usize::MAX {
                continue;
            }
            for &k in members {
                coset[self.add[g][k]] = reps.len();
            }
            reps.push(g);
        }
        let add = reps
            .iter()
            .map(|&x| reps.iter().map(|&y| coset[self.add[x][y]]).collect())
            .collect();
        (
            AbTable {
                add,
                zero: coset[self.zero],
            },
            coset,
        )
    }

    /// Basis elements whose orders multiply to the group order.
    ///
    /// Takes an element of maximal order (which spans a direct summand),
    /// recurses on the quotient, and lifts each quotient basis element to one
    /// of the same order.
    fn basis(&self) -> Vec<(usize, u64)> {
        if self.n() == 1 {
            return Vec::new();
        }
        let (x, d) = (0..self.n())
            .map(|i| (i, self.order_of(i)))
            .max_by_key(|&(i, o)| (o, std::cmp::Reverse(i)))
            .unwrap();
        let cyclic: Vec<usize> = (0..d).map(|k| self.times(x, k)).collect();
        let (quot, coset) = self.quotient(&cyclic);
        let mut out = vec![(x, d)];
        for (qb, e) in quot.basis() {
            let y = (0..self.n()).find(|&g| coset[g] == qb).unwrap();
            let lifted = cyclic
                .iter()
                .map(|&m| self.add[y][m])
                .find(|&z| self.times(z, e) == self.zero)
                .expect("maximal-order cyclic subgroup is a direct summand");
            out.push((lifted, e));
        }
        out
    }
}

/// Computes `G / [G, G]` by cosets and extracts its invariant factors.
pub fn abelianization<E: GroupElement>(g: &FiniteGroup<E>) -> Result<AbelianStructure> {
    let k = commutator_indices(g);
    let n = g.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] != usize::MAX {
            continue;
        }
        for &c in &k {
            coset[g.mul(x, c)] = reps.len();
        }
        reps.push(x);
    }
    let add = reps
        .iter()
        .map(|&x| reps.iter().map(|&y| coset[g.mul(x, y)]).collect())
        .collect();
    let quot = AbTable {
        add,
        zero: coset[g.identity_index()],
    };
    let mut basis = quot.basis();
    basis.sort_by_key(|&(_, o)| o);

    // coordinates of every quotient element
    let mut coords: Vec<Vec<u64>> = vec![Vec::new(); quot.n()];
    let mut tuple = vec![0u64; basis.len()];
    loop {
        let elem = basis
            .iter()
            .zip(&tuple)
            .fold(quot.zero, |acc, (&(b, _), &c)| {
                quot.add[acc][quot.times(b, c)]
            });
        coords[elem] = tuple.clone();
        // odometer over the tuple
        let mut i = 0;
        while i < tuple.len() {
            tuple[i] += 1;
            if tuple[i] < basis[i].1 {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if i == tuple.len() {
            break;
        }
    }
    Ok(AbelianStructure {
        divisors: basis.iter().map(|&(_, o)| o).collect(),
        projection: (0..n).map(|x| coords[coset[x]].clone()).collect(),
        commutator_order: k.len(),
    })
}

/// A linear character as its value table, indexed like the group's elements.
pub type CharacterTable = Vec<UnityRoot>;

/// Every linear character of `G`, via the dual of its abelianization.
pub fn all_linear_characters<E: GroupElement>(g: &FiniteGroup<E>) -> Result<Vec<CharacterTable>> {
    let ab = abelianization(g)?;
    let mut out = Vec::with_capacity(ab.order() as usize);
    let mut exps = vec![0u64; ab.divisors.len()];
    loop {
        let table = ab
            .projection
            .iter()
            .map(|c| {
                c.iter()
                    .zip(&exps)
                    .zip(&ab.divisors)
                    .map(|((&x, &k), &d)| UnityRoot::new((x * k) as i64, d))
                    .product()
            })
            .collect();
        out.push(table);
        let mut i = 0;
        while i < exps.len() {
            exps[i] += 1;
            if exps[i] < ab.divisors[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
        if i == exps.len() {
            break;
        }
    }
    Ok(out)
}

/// True iff `values` is a homomorphism `G -> roots of unity`.
pub fn is_character<E: GroupElement>(g: &FiniteGroup<E>, values: &[UnityRoot]) -> bool {
    let n = g.order();
    values.len() == n
        && (0..n).all(|i| (0..n).all(|j| values[g.mul(i, j)] == values[i] * values[j]))
}

/// `G = H ⋉ K`: `K` normal, `H ∩ K` trivial and `|H| |K| = |G|`.
pub fn verify_semidirect<E: GroupElement>(
    g: &FiniteGroup<E>,
    h: &FiniteGroup<E>,
    k: &FiniteGroup<E>,
) -> bool {
    let inside = |s: &FiniteGroup<E>| s.elements().iter().all(|e| g.contains(e));
    if !inside(h) || !inside(k) {
        return false;
    }
    let meet = h.elements().iter().filter(|e| k.contains(e)).count();
    meet == 1 && h.order() * k.order() == g.order() && g.is_normal(k)
}

/// All `x` with `x^m = 1`.
pub fn elements_of_order_dividing<E: GroupElement>(g: &FiniteGroup<E>, m: u64) -> Vec<E> {
    (0..g.order())
        .filter(|&i| g.pow(i, m) == g.identity_index())
        .map(|i| g.element(i).clone())
        .collect()
}

/// All `x` of order exactly `m`.
pub fn elements_of_order<E: GroupElement>(g: &FiniteGroup<E>, m: u64) -> Vec<E> {
    (0..g.order())
        .filter(|&i| g.element_order(i) == m)
        .map(|i| g.element(i).clone())
        .collect()
}

/// `{A in G : h(A) = 1}`.
pub fn kernel_of_reduction(g: &FiniteGroup<Mat2>, h: &RingHom) -> Result<FiniteGroup<Mat2>> {
    let members: Vec<usize> = (0..g.order())
        .filter(|&i| g.element(i).map_entries(h).is_identity())
        .collect();
    g.subgroup(&members)
}

/// Every subgroup of a group of order at most 16, each as sorted member indices.
pub fn all_subgroups<E: GroupElement>(g: &FiniteGroup<E>) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    if n > 16 {
        return Err(Error::GroupTooLarge { size: n, cap: 16 });
    }
    let mut found: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut gen = g.generated(members.iter().copied());
        gen.sort();
        if gen == members {
            found.push(gen);
        }
    }
    Ok(found)
}
