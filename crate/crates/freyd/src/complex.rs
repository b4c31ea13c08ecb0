//! Bounded chain complexes of finite-rank free modules, chain maps, shifts,
//! mapping cones, homology, and seeded random generation.
//!
//! Degrees are integers; `ranks[k]` is the rank in degree `min_degree + k`,
//! and the differential leaving degree `i` has shape `rank(i-1)` by
//! `rank(i)`. The composite of consecutive differentials must vanish, and
//! construction validates that.
//!
//! Conventions, fixed once and used consistently everywhere: shifting by n
//! multiplies differentials by `(-1)^n`; the cone of `f: K -> L` has terms
//! `L_i (+) K_{i-1}` with differential `[[d_L, f], [0, -d_K]]`; chain maps
//! of degree n satisfy the unsigned rule `f_{i-1} d_i = d_{i+n} f_i`, with
//! signs living in shifted targets rather than in map data.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::linalg::LinearSolver;
use crate::matrix::{hstack, vstack, Matrix};
use crate::module::{subquotient, ModuleMap, Subquotient};
use crate::ring::{RingElement, RingSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("objects live over different rings")]
    RingMismatch,
    #[error("matrix at degree {degree} has shape {got:?}, expected {expected:?}")]
    BadShape { degree: i64, expected: (usize, usize), got: (usize, usize) },
    #[error("differentials fail d*d = 0 at degree {degree}")]
    BrokenSquare { degree: i64 },
    #[error("components fail to commute with differentials at degree {degree}")]
    NotChainMap { degree: i64 },
}

#[derive(Clone, PartialEq, Debug)]
pub struct ChainComplex {
    pub ring: RingSpec,
    pub min_degree: i64,
    pub ranks: Vec<usize>,
    /// `diffs[k]` is the differential leaving degree `min_degree + k + 1`.
    diffs: Vec<Matrix>,
}

impl ChainComplex {
    pub fn new(
        ring: &RingSpec,
        min_degree: i64,
        ranks: Vec<usize>,
        diffs: Vec<Matrix>,
    ) -> Result<Self, ComplexError> {
        let expected_diffs = ranks.len().saturating_sub(1);
        assert_eq!(diffs.len(), expected_diffs, "one differential per adjacent degree pair");
        for (k, d) in diffs.iter().enumerate() {
            if d.ring != *ring {
                return Err(ComplexError::RingMismatch);
            }
            let expected = (ranks[k], ranks[k + 1]);
            if (d.rows, d.cols) != expected {
                return Err(ComplexError::BadShape {
                    degree: min_degree + k as i64 + 1,
                    expected,
                    got: (d.rows, d.cols),
                });
            }
        }
        for k in 0..diffs.len().saturating_sub(1) {
            if !diffs[k].mul(&diffs[k + 1]).is_zero() {
                return Err(ComplexError::BrokenSquare { degree: min_degree + k as i64 + 2 });
            }
        }
        Ok(ChainComplex { ring: ring.clone(), min_degree, ranks, diffs })
    }

    pub fn zero_complex(ring: &RingSpec) -> Self {
        ChainComplex { ring: ring.clone(), min_degree: 0, ranks: vec![], diffs: vec![] }
    }

    pub fn free_in_degree(ring: &RingSpec, degree: i64, rank: usize) -> Self {
        ChainComplex { ring: ring.clone(), min_degree: degree, ranks: vec![rank], diffs: vec![] }
    }

    /// The shifted unit: the ring sitting alone in one degree.
    pub fn sphere(ring: &RingSpec, degree: i64) -> Self {
        ChainComplex::free_in_degree(ring, degree, 1)
    }

    pub fn rank(&self, i: i64) -> usize {
        let k = i - self.min_degree;
        if k < 0 || k as usize >= self.ranks.len() {
            0
        } else {
            self.ranks[k as usize]
        }
    }

    /// Largest degree with an allocated slot; one below `min_degree` when
    /// the complex is empty.
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.min_degree..=self.max_degree()
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// The differential leaving degree `i`, materialized with its correct
    /// (possibly empty) shape.
    pub fn d(&self, i: i64) -> Matrix {
        let k = i - self.min_degree;
        if k >= 1 && (k as usize) <= self.diffs.len() {
            self.diffs[k as usize - 1].clone()
        } else {
            Matrix::zero(&self.ring, self.rank(i - 1), self.rank(i))
        }
    }

    pub fn shift(&self, n: i64) -> ChainComplex {
        let diffs = if n % 2 == 0 {
            self.diffs.clone()
        } else {
            self.diffs.iter().map(Matrix::neg).collect()
        };
        ChainComplex {
            ring: self.ring.clone(),
            min_degree: self.min_degree + n,
            ranks: self.ranks.clone(),
            diffs,
        }
    }
}

/// A chain map of degree `degree_shift` (component at degree i lands in
/// target degree `i + degree_shift`), commuting with differentials by the
/// unsigned rule.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub degree_shift: i64,
    components: BTreeMap<i64, Matrix>,
}

impl ChainMap {
    pub fn new_checked(
        source: ChainComplex,
        target: ChainComplex,
        degree_shift: i64,
        components: BTreeMap<i64, Matrix>,
    ) -> Result<Self, ComplexError> {
        if source.ring != target.ring {
            return Err(ComplexError::RingMismatch);
        }
        for (&i, m) in &components {
            let expected = (target.rank(i + degree_shift), source.rank(i));
            if (m.rows, m.cols) != expected {
                return Err(ComplexError::BadShape { degree: i, expected, got: (m.rows, m.cols) });
            }
            if m.ring != source.ring {
                return Err(ComplexError::RingMismatch);
            }
        }
        let map = ChainMap { source, target, degree_shift, components };
        for i in map.source.min_degree..=map.source.max_degree() {
            let walk_down = map.component(i - 1).mul(&map.source.d(i));
            let push_down = map.target.d(i + degree_shift).mul(&map.component(i));
            if walk_down != push_down {
                return Err(ComplexError::NotChainMap { degree: i });
            }
        }
        Ok(map)
    }

    pub fn zero(source: ChainComplex, target: ChainComplex, degree_shift: i64) -> Self {
        ChainMap { source, target, degree_shift, components: BTreeMap::new() }
    }

    pub fn identity(x: &ChainComplex) -> Self {
        let components = x
            .degrees()
            .map(|i| (i, Matrix::identity(&x.ring, x.rank(i))))
            .collect();
        ChainMap { source: x.clone(), target: x.clone(), degree_shift: 0, components }
    }

    pub fn component(&self, i: i64) -> Matrix {
        match self.components.get(&i) {
            Some(m) => m.clone(),
            None => Matrix::zero(
                &self.source.ring,
                self.target.rank(i + self.degree_shift),
                self.source.rank(i),
            ),
        }
    }

    /// `self` after `other`; degree shifts add.
    pub fn compose(&self, other: &ChainMap) -> ChainMap {
        assert_eq!(self.source, other.target, "composition endpoints do not meet");
        let shift = other.degree_shift;
        let components = other
            .source
            .degrees()
            .map(|i| (i, self.component(i + shift).mul(&other.component(i))))
            .collect();
        ChainMap {
            source: other.source.clone(),
            target: self.target.clone(),
            degree_shift: self.degree_shift + other.degree_shift,
            components,
        }
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        assert_eq!(self.degree_shift, other.degree_shift);
        let components = self
            .source
            .degrees()
            .map(|i| (i, self.component(i).add(&other.component(i))))
            .collect();
        ChainMap { components, ..self.clone() }
    }

    pub fn neg(&self) -> ChainMap {
        let components = self.components.iter().map(|(&i, m)| (i, m.neg())).collect();
        ChainMap { components, ..self.clone() }
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &RingElement) -> ChainMap {
        let components = self.components.iter().map(|(&i, m)| (i, m.scale(c))).collect();
        ChainMap { components, ..self.clone() }
    }

    /// The same components viewed between shifted complexes. No signs enter:
    /// source and target differentials pick up the same factor.
    pub fn shift(&self, n: i64) -> ChainMap {
        let components = self.components.iter().map(|(&i, m)| (i + n, m.clone())).collect();
        ChainMap {
            source: self.source.shift(n),
            target: self.target.shift(n),
            degree_shift: self.degree_shift,
            components,
        }
    }

    /// True when every component matrix is zero (stronger than being
    /// null-homotopic).
    pub fn is_zero_on_the_nose(&self) -> bool {
        self.components.values().all(Matrix::is_zero)
    }
}

/// The triangle `K -f-> L -incl-> cone(f) -proj-> shift(K, 1)`.
#[derive(Clone, Debug)]
pub struct Triangle {
    pub f: ChainMap,
    pub incl: ChainMap,
    pub proj: ChainMap,
}

impl Triangle {
    pub fn k(&self) -> &ChainComplex {
        &self.f.source
    }

    pub fn l(&self) -> &ChainComplex {
        &self.f.target
    }

    pub fn cone(&self) -> &ChainComplex {
        &self.incl.target
    }
}

/// The mapping cone of a degree-zero chain map, with its triangle.
pub fn mapping_cone(f: &ChainMap) -> Result<(ChainComplex, Triangle), ComplexError> {
    assert_eq!(f.degree_shift, 0, "cones are taken over degree-zero maps");
    let k = &f.source;
    let l = &f.target;
    let ring = &k.ring;

    let (lo, hi) = if k.ranks.is_empty() && l.ranks.is_empty() {
        (0, -1)
    } else if k.ranks.is_empty() {
        (l.min_degree, l.max_degree())
    } else if l.ranks.is_empty() {
        (k.min_degree + 1, k.max_degree() + 1)
    } else {
        (
            l.min_degree.min(k.min_degree + 1),
            l.max_degree().max(k.max_degree() + 1),
        )
    };

    let mut ranks = Vec::new();
    let mut diffs = Vec::new();
    for i in lo..=hi {
        ranks.push(l.rank(i) + k.rank(i - 1));
    }
    for i in lo + 1..=hi {
        let top = hstack(ring, l.rank(i - 1), &[l.d(i), f.component(i - 1)]);
        let bot = hstack(
            ring,
            k.rank(i - 2),
            &[Matrix::zero(ring, k.rank(i - 2), l.rank(i)), k.d(i - 1).neg()],
        );
        diffs.push(vstack(ring, l.rank(i) + k.rank(i - 1), &[top, bot]));
    }
    let cone = ChainComplex::new(ring, lo, ranks, diffs)?;

    let incl_comps = l
        .degrees()
        .map(|i| {
            (i, Matrix::from_fn(ring, cone.rank(i), l.rank(i), |r, c| {
                if r == c { ring.one() } else { ring.zero() }
            }))
        })
        .collect();
    let incl = ChainMap::new_checked(l.clone(), cone.clone(), 0, incl_comps)?;

    let sk = k.shift(1);
    let proj_comps = cone
        .degrees()
        .map(|i| {
            (i, Matrix::from_fn(ring, k.rank(i - 1), cone.rank(i), |r, c| {
                if c == l.rank(i) + r { ring.one() } else { ring.zero() }
            }))
        })
        .collect();
    let proj = ChainMap::new_checked(cone.clone(), sk, 0, proj_comps)?;

    let triangle = Triangle { f: f.clone(), incl, proj };
    Ok((cone, triangle))
}

/// Homology in degree `i` as a subquotient of the degree-`i` term: cycles of
/// the outgoing differential modulo columns of the incoming one. The
/// subquotient remembers cycle representatives for every class.
pub fn homology(x: &ChainComplex, i: i64) -> Subquotient {
    let cycles = LinearSolver::new(&x.d(i)).kernel();
    subquotient(&cycles, &x.d(i + 1)).expect("boundaries are cycles")
}

/// Degree-`i` cohomology of the dual complex with terms `Hom(K_i, R)`:
/// cocycles of the transposed incoming differential modulo transposed
/// outgoing columns.
pub fn cohomology_vs_r(k: &ChainComplex, i: i64) -> Subquotient {
    let cocycles = LinearSolver::new(&k.d(i + 1).transpose()).kernel();
    subquotient(&cocycles, &k.d(i).transpose()).expect("coboundaries are cocycles")
}

/// The map induced on degree-`i` homology by a degree-zero chain map,
/// expressed in homology generator coordinates via cycle lifts.
pub fn induced_homology_map(f: &ChainMap, i: i64) -> ModuleMap {
    assert_eq!(f.degree_shift, 0, "homology functoriality is for degree-zero maps");
    let hs = homology(&f.source, i);
    let ht = homology(&f.target, i);
    let fi = f.component(i);
    let cols: Vec<Vec<RingElement>> = (0..hs.module.gens)
        .map(|g| {
            let pushed = fi.mul_vec(&hs.generator_in_ambient(g));
            ht.express(&pushed)
                .expect("a chain map sends cycles to cycles")
        })
        .collect();
    let matrix = Matrix::from_cols(&f.source.ring, ht.module.gens, &cols);
    ModuleMap::new_checked(hs.module.clone(), ht.module.clone(), matrix)
        .expect("pushing cycles forward respects homology relations")
}

/// Mix a base seed with a salt into an independent stream seed.
pub fn sub_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A deterministic pseudorandom bounded complex, built as an iterated
/// mapping cone: start from a free module in a degree near zero, then
/// repeatedly attach free cells one degree up along maps hitting random
/// cycles. Every output therefore lies in the smallest triangulated
/// subcategory containing the free modules, and satisfies d*d = 0 by
/// construction.
pub fn random_complex(
    ring: &RingSpec,
    seed: u64,
    max_length: usize,
    max_rank: usize,
) -> ChainComplex {
    assert!(max_length >= 1 && max_rank >= 1, "bounds must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let length = rng.gen_range(1..=max_length);
    let base = rng.gen_range(-1i64..=1);
    let mut x = ChainComplex::free_in_degree(ring, base, rng.gen_range(1..=max_rank));

    for step in 1..length {
        let attach_at = base + step as i64 - 1;
        let cells = rng.gen_range(0..=max_rank);
        if cells == 0 {
            continue;
        }
        let cycles = LinearSolver::new(&x.d(attach_at)).kernel();
        let cols: Vec<Vec<RingElement>> = (0..cells)
            .map(|_| {
                let mut v = vec![ring.zero(); x.rank(attach_at)];
                for j in 0..cycles.cols {
                    let c = ring.random_element(&mut rng, 2);
                    for (row, slot) in v.iter_mut().enumerate() {
                        *slot = ring.add(slot, &ring.mul(&c, cycles.get(row, j)));
                    }
                }
                v
            })
            .collect();
        let w = ChainComplex::free_in_degree(ring, attach_at, cells);
        let attach = Matrix::from_cols(ring, x.rank(attach_at), &cols);
        let g = ChainMap::new_checked(w, x.clone(), 0, BTreeMap::from([(attach_at, attach)]))
            .expect("attaching columns are cycles");
        let (cone, _) = mapping_cone(&g).expect("cone of a validated map");
        x = cone;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::ModuleInvariants;
    use num_bigint::BigInt;

    fn z() -> RingSpec {
        RingSpec::integers()
    }

    /// The two-term complex with a single differential entry `c`, in degrees
    /// 1 and 0.
    fn two_term(ring: &RingSpec, c: i64) -> ChainComplex {
        ChainComplex::new(
            ring,
            0,
            vec![1, 1],
            vec![Matrix::from_int_rows(ring, &[vec![c]])],
        )
        .unwrap()
    }

    fn torsion(vals: &[i64]) -> ModuleInvariants {
        ModuleInvariants::FreeAndTorsion {
            free_rank: 0,
            torsion: vals.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    fn factors(vals: &[i64]) -> ModuleInvariants {
        ModuleInvariants::CyclicFactors {
            factors: vals.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    #[test]
    fn construction_rejects_broken_squares_and_shapes() {
        let zr = z();
        let err = ChainComplex::new(
            &zr,
            0,
            vec![1, 1, 1],
            vec![
                Matrix::from_int_rows(&zr, &[vec![2]]),
                Matrix::from_int_rows(&zr, &[vec![3]]),
            ],
        )
        .unwrap_err();
        assert_eq!(err, ComplexError::BrokenSquare { degree: 2 });

        let err = ChainComplex::new(
            &zr,
            0,
            vec![2, 1],
            vec![Matrix::from_int_rows(&zr, &[vec![1, 0]])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            ComplexError::BadShape { degree: 1, expected: (2, 1), got: (1, 2) }
        );
    }

    #[test]
    fn homology_of_multiplication_by_two() {
        let k = two_term(&z(), 2);
        assert_eq!(homology(&k, 0).module.invariants(), torsion(&[2]));
        assert!(homology(&k, 1).module.is_zero());
        assert!(homology(&k, 5).module.is_zero());

        let z4 = RingSpec::integers_mod(4).unwrap();
        let k4 = two_term(&z4, 2);
        assert_eq!(homology(&k4, 0).module.invariants(), factors(&[2]));
        assert_eq!(homology(&k4, 1).module.invariants(), factors(&[2]));
    }

    #[test]
    fn homology_of_the_zero_complex_vanishes() {
        let zero = ChainComplex::zero_complex(&z());
        for i in -2..=2 {
            assert!(homology(&zero, i).module.is_zero());
        }
    }

    #[test]
    fn shifts_move_degrees_and_flip_signs() {
        let zr = z();
        let s = ChainComplex::sphere(&zr, 0);
        assert_eq!(s.shift(3).min_degree, 3);
        let k = two_term(&zr, 2);
        let sk = k.shift(1);
        assert_eq!(sk.d(2), Matrix::from_int_rows(&zr, &[vec![-2]]));
        assert_eq!(sk.shift(-1), k);
        // Homology moves along.
        assert_eq!(homology(&sk, 1).module.invariants(), torsion(&[2]));
    }

    #[test]
    fn chain_map_validation() {
        let zr = z();
        let k = two_term(&zr, 2);
        // Degree-0 component 1 with degree-1 component 0 fails to commute.
        let bad = ChainMap::new_checked(
            k.clone(),
            k.clone(),
            0,
            BTreeMap::from([(0, Matrix::from_int_rows(&zr, &[vec![1]]))]),
        );
        assert_eq!(bad.unwrap_err(), ComplexError::NotChainMap { degree: 1 });
        // The identity and multiplication by any constant on both degrees pass.
        let ok = ChainMap::new_checked(
            k.clone(),
            k.clone(),
            0,
            BTreeMap::from([
                (0, Matrix::from_int_rows(&zr, &[vec![3]])),
                (1, Matrix::from_int_rows(&zr, &[vec![3]])),
            ]),
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn cone_of_doubling_is_the_two_term_complex() {
        let z4 = RingSpec::integers_mod(4).unwrap();
        let r = ChainComplex::sphere(&z4, 0);
        let double = ChainMap::new_checked(
            r.clone(),
            r.clone(),
            0,
            BTreeMap::from([(0, Matrix::from_int_rows(&z4, &[vec![2]]))]),
        )
        .unwrap();
        let (cone, tri) = mapping_cone(&double).unwrap();
        assert_eq!(cone, two_term(&z4, 2));
        assert_eq!(tri.cone(), &cone);
        assert_eq!(tri.proj.target, r.shift(1));
    }

    #[test]
    fn cone_of_zero_splits_off_both_spheres() {
        let zr = z();
        let r = ChainComplex::sphere(&zr, 0);
        let zero_map = ChainMap::zero(r.clone(), r.clone(), 0);
        let (cone, _) = mapping_cone(&zero_map).unwrap();
        let h0 = homology(&cone, 0).module.invariants();
        let h1 = homology(&cone, 1).module.invariants();
        let free1 = ModuleInvariants::FreeAndTorsion { free_rank: 1, torsion: vec![] };
        assert_eq!(h0, free1);
        assert_eq!(h1, free1);
    }

    #[test]
    fn cone_of_identity_has_no_homology() {
        let zr = z();
        let k = two_term(&zr, 2);
        let (cone, _) = mapping_cone(&ChainMap::identity(&k)).unwrap();
        for i in -1..=3 {
            assert!(homology(&cone, i).module.is_zero(), "degree {i}");
        }
    }

    #[test]
    fn cohomology_against_the_ring() {
        let zr = z();
        let s = ChainComplex::sphere(&zr, 0);
        let free1 = ModuleInvariants::FreeAndTorsion { free_rank: 1, torsion: vec![] };
        assert_eq!(cohomology_vs_r(&s, 0).module.invariants(), free1);
        assert!(cohomology_vs_r(&s, 1).module.is_zero());

        let k = two_term(&zr, 2);
        assert!(cohomology_vs_r(&k, 0).module.is_zero());
        assert_eq!(cohomology_vs_r(&k, 1).module.invariants(), torsion(&[2]));

        let z4 = RingSpec::integers_mod(4).unwrap();
        let k4 = two_term(&z4, 2);
        assert_eq!(cohomology_vs_r(&k4, 0).module.invariants(), factors(&[2]));
        assert_eq!(cohomology_vs_r(&k4, 1).module.invariants(), factors(&[2]));
    }

    #[test]
    fn induced_maps_on_homology() {
        let z4 = RingSpec::integers_mod(4).unwrap();
        let k = two_term(&z4, 2);
        let id = ChainMap::identity(&k);
        let h0_id = induced_homology_map(&id, 0);
        assert!(h0_id.is_isomorphism());

        // Multiplying degree 0 by 2 kills both homology groups.
        let ghostly = ChainMap::new_checked(
            k.clone(),
            k.clone(),
            0,
            BTreeMap::from([(0, Matrix::from_int_rows(&z4, &[vec![2]]))]),
        )
        .unwrap();
        assert!(induced_homology_map(&ghostly, 0).is_zero_map());
        assert!(induced_homology_map(&ghostly, 1).is_zero_map());
        assert!(!ghostly.is_zero_on_the_nose());
    }

    #[test]
    fn composition_and_shifting_of_maps() {
        let zr = z();
        let k = two_term(&zr, 2);
        let id = ChainMap::identity(&k);
        let sum = id.add(&id);
        let sq = sum.compose(&sum);
        assert_eq!(sq.component(0), Matrix::from_int_rows(&zr, &[vec![4]]));
        let shifted = sum.shift(1);
        assert_eq!(shifted.source, k.shift(1));
        assert_eq!(shifted.component(1), Matrix::from_int_rows(&zr, &[vec![2]]));
        // Scaling by -1 agrees with negation.
        assert_eq!(
            sum.neg().component(0),
            sum.scale(&zr.from_i64(-1)).component(0)
        );
    }

    #[test]
    fn random_complexes_are_deterministic_and_bounded() {
        for ring in [
            z(),
            RingSpec::integers_mod(4).unwrap(),
            RingSpec::prime_field(3).unwrap(),
            RingSpec::prime_product(vec![2, 3]).unwrap(),
        ] {
            for seed in 0..12 {
                let a = random_complex(&ring, seed, 4, 3);
                let b = random_complex(&ring, seed, 4, 3);
                assert_eq!(a, b, "seed {seed} must reproduce");
                assert!(a.ranks.len() <= 4, "one degree slot per attachment round");
                assert!(a.ranks.iter().all(|&r| r <= 3));
                assert!((-1..=1).contains(&a.min_degree));
            }
            let single = random_complex(&ring, 7, 1, 3);
            assert_eq!(single.ranks.len(), 1);
        }
        assert_ne!(random_complex(&z(), 1, 4, 3), random_complex(&z(), 2, 4, 3));
    }

    #[test]
    fn sub_seed_mixes() {
        assert_ne!(sub_seed(1, 0), sub_seed(1, 1));
        assert_ne!(sub_seed(1, 0), sub_seed(2, 0));
        assert_eq!(sub_seed(9, 3), sub_seed(9, 3));
    }
}
