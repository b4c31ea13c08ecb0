//! Brute-force oracles used by the integration suites. Everything here is
//! deliberately naive: exhaustive enumeration and closure computations that
//! are obviously correct, against which the linear-algebra implementations
//! are judged.

// Each test binary pulls in a different subset of these oracles.
#![allow(dead_code)]

use freyd::{
    derived_hom, mapping_cone, ChainComplex, ChainMap, FPModule, HomGroup, RingElement, RingSpec,
    Triangle,
};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A chain map drawn from a random coordinate vector in a hom-set.
pub fn random_class_map(h: &HomGroup, rng: &mut ChaCha8Rng) -> ChainMap {
    let ring = h.source.ring.clone();
    let coords: Vec<RingElement> =
        (0..h.module().gens).map(|_| ring.random_element(rng, 2)).collect();
    h.map_for_coords(&coords)
}

/// A seeded triangle: two random complexes, a random degree-zero class
/// between them, and the cone on a representative.
pub fn random_triangle(
    ring: &RingSpec,
    seed: u64,
    max_length: usize,
    max_rank: usize,
) -> (Triangle, ChainComplex) {
    let k = freyd::random_complex(ring, freyd::sub_seed(seed, 0), max_length, max_rank);
    let l = freyd::random_complex(ring, freyd::sub_seed(seed, 1), max_length, max_rank);
    let h = derived_hom(&k, &l, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(freyd::sub_seed(seed, 2));
    let f = if h.module().gens > 0 {
        random_class_map(&h, &mut rng)
    } else {
        ChainMap::zero(k.clone(), l.clone(), 0)
    };
    let (cone, tri) = mapping_cone(&f).unwrap();
    (tri, cone)
}

/// All vectors of the given length over a finite ring.
pub fn enumerate_vectors(ring: &RingSpec, len: usize) -> Vec<Vec<RingElement>> {
    let elements = ring.elements().expect("enumeration needs a finite ring");
    let mut out: Vec<Vec<RingElement>> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * elements.len());
        for v in &out {
            for e in &elements {
                let mut w = v.clone();
                w.push(e.clone());
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// The distinct elements of a finitely presented module over a finite ring,
/// as canonical representatives of coordinate vectors.
pub fn module_elements(m: &FPModule) -> Vec<Vec<RingElement>> {
    let mut seen: Vec<Vec<RingElement>> = Vec::new();
    for v in enumerate_vectors(&m.ring, m.gens) {
        if !seen.iter().any(|w| m.el_eq(w, &v)) {
            seen.push(v);
        }
    }
    seen
}

/// Module cardinality by brute force.
pub fn bruteforce_cardinality(m: &FPModule) -> BigInt {
    BigInt::from(module_elements(m).len())
}

/// Number of homomorphisms `m -> n` between modules over a finite ring, by
/// trying every matrix of generator images and keeping the well-defined
/// ones; counted up to equality of induced maps on generators.
pub fn hom_count_bruteforce(m: &FPModule, n: &FPModule) -> BigInt {
    let ring = &m.ring;
    let images = enumerate_vectors(ring, m.gens * n.gens);
    let mut count = BigInt::from(0);
    'outer: for flat in images {
        // Candidate sends generator j to the slice [j*n.gens, (j+1)*n.gens).
        // Well-defined iff every relation column maps to zero.
        for r in 0..m.relations.cols {
            let mut acc = vec![ring.zero(); n.gens];
            for j in 0..m.gens {
                let c = m.relations.get(j, r);
                for (t, slot) in acc.iter_mut().enumerate() {
                    *slot = ring.add(slot, &ring.mul(c, &flat[j * n.gens + t]));
                }
            }
            if !n.el_is_zero(&acc) {
                continue 'outer;
            }
        }
        count += 1;
    }
    // Candidates that agree elementwise on all generators are the same map;
    // dividing by the multiplicity of the zero map's representatives gives
    // distinct maps. Each map has the same number of representing matrices
    // (those differing by per-generator zero elements), so count the
    // representatives of zero and divide.
    let zero_reps = count_zero_representatives(m, n);
    count / zero_reps
}

fn count_zero_representatives(m: &FPModule, n: &FPModule) -> BigInt {
    // Matrices representing the zero map: every generator image is zero in n.
    let ring = &m.ring;
    let mut per_gen = BigInt::from(0);
    for v in enumerate_vectors(ring, n.gens) {
        if n.el_is_zero(&v) {
            per_gen += 1;
        }
    }
    let mut total = BigInt::from(1);
    for _ in 0..m.gens {
        total *= per_gen.clone();
    }
    total
}

/// Cardinality of `Z/a (x) Z/b`-style products: for cyclic decompositions
/// with factors `a_i`, `b_j` over Z or Z/n, the tensor has cardinality
/// `prod gcd(a_i, b_j)` (0 meaning an infinite cyclic factor).
pub fn tensor_cardinality_of_cyclics(a: &[u64], b: &[u64]) -> Option<BigInt> {
    let mut total = BigInt::from(1);
    for &x in a {
        for &y in b {
            let g = gcd(x, y);
            if g == 0 {
                return None;
            }
            total *= g;
        }
    }
    Some(total)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Cyclic decomposition of a finite module over Z/n by element-order
/// statistics: the number of solutions of `k*x = 0` equals
/// `prod gcd(d_i, k)` over the cyclic factors `d_i`, and the profile over
/// all divisors `k` of `n` pins the multiset of factors uniquely.
pub fn bruteforce_cyclic_decomposition(m: &FPModule) -> Vec<u64> {
    let ring = &m.ring;
    let card = ring.cardinality().expect("needs a finite ring");
    let n: u64 = card.try_into().expect("ring cardinality fits in u64");
    let elements = module_elements(m);
    let annihilated = |k: u64| -> u64 {
        elements
            .iter()
            .filter(|v| {
                let scaled: Vec<RingElement> =
                    v.iter().map(|e| ring.mul(&ring.from_i64(k as i64), e)).collect();
                m.el_is_zero(&scaled)
            })
            .count() as u64
    };
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let profile: Vec<(u64, u64)> = divisors.iter().map(|&k| (k, annihilated(k))).collect();
    let total = elements.len() as u64;
    let mut best: Option<Vec<u64>> = None;
    search_multisets(&divisors, total, &mut Vec::new(), &profile, &mut best);
    best.expect("some multiset matches the annihilator profile")
}

fn search_multisets(
    divisors: &[u64],
    target: u64,
    acc: &mut Vec<u64>,
    profile: &[(u64, u64)],
    best: &mut Option<Vec<u64>>,
) {
    if best.is_some() {
        return;
    }
    if target == 1 {
        // Check profile: number of elements killed by k must equal
        // prod gcd(d, k) over chosen factors d.
        for &(k, expected) in profile {
            let mut got: u64 = 1;
            for &d in acc.iter() {
                got *= gcd(d, k);
            }
            if got != expected {
                return;
            }
        }
        let mut sorted = acc.clone();
        sorted.sort_unstable();
        *best = Some(sorted);
        return;
    }
    for &d in divisors {
        if d > 1 && target % d == 0 {
            if let Some(&last) = acc.last() {
                if d > last {
                    continue;
                }
            }
            acc.push(d);
            search_multisets(divisors, target / d, acc, profile, best);
            acc.pop();
            if best.is_some() {
                return;
            }
        }
    }
}

/// Closure of a generating set inside a finite module: all reachable
/// elements under addition of generators. Returns canonical representatives.
pub fn span_set(m: &FPModule, gens: &[Vec<RingElement>]) -> Vec<Vec<RingElement>> {
    let ring = &m.ring;
    let mut seen: Vec<Vec<RingElement>> = vec![vec![ring.zero(); m.gens]];
    let mut frontier = seen.clone();
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w: Vec<RingElement> =
                v.iter().zip(g).map(|(a, b)| ring.add(a, b)).collect();
            if !seen.iter().any(|s| m.el_eq(s, &w)) {
                seen.push(w.clone());
                frontier.push(w);
            }
        }
    }
    seen
}
