//! Hom-sets in the derived category: chain maps modulo chain homotopy,
//! null-homotopy decision, ghosts, and the ghost subgroup of a hom-set.
//!
//! For bounded complexes of frees, `[K, X]_n` is chain maps `K -> shift(X, n)`
//! of degree zero modulo homotopy. Packing all component matrices of a
//! candidate map into one coordinate vector (column-major per degree) turns
//! the chain-map condition into a kernel computation and the null-homotopy
//! condition into a column span, and the hom-set becomes a subquotient.
//!
//! A ghost is a map that is not null-homotopic yet induces zero on homology
//! in every degree. These are exactly the maps that homology cannot see, and
//! the ghost subgroup of `[K, X]_0` measures their presence for a pair.

use std::collections::BTreeMap;

use crate::complex::{homology, induced_homology_map, ChainComplex, ChainMap};
use crate::linalg::LinearSolver;
use crate::matrix::Matrix;
use crate::module::{hom_module, subquotient, FPModule, ModuleMap, Subquotient};
use crate::ring::{RingElement, RingSpec};

/// Packing of per-degree component matrices into one flat coordinate space.
/// Block `k` covers `degrees[k]` with shape `shapes[k]`, vectorized
/// column-major, at `offsets[k]`.
#[derive(Clone, Debug)]
struct MapLayout {
    ring: RingSpec,
    degrees: Vec<i64>,
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    total: usize,
}

fn degree_window(k: &ChainComplex, y: &ChainComplex) -> std::ops::RangeInclusive<i64> {
    let lo = k.min_degree.min(y.min_degree) - 1;
    let hi = k.max_degree().max(y.max_degree()) + 1;
    lo..=hi
}

impl MapLayout {
    fn collect(
        ring: &RingSpec,
        window: std::ops::RangeInclusive<i64>,
        shape: impl Fn(i64) -> (usize, usize),
    ) -> Self {
        let mut degrees = Vec::new();
        let mut shapes = Vec::new();
        let mut offsets = Vec::new();
        let mut total = 0;
        for i in window {
            let (r, c) = shape(i);
            if r * c == 0 {
                continue;
            }
            degrees.push(i);
            shapes.push((r, c));
            offsets.push(total);
            total += r * c;
        }
        MapLayout { ring: ring.clone(), degrees, shapes, offsets, total }
    }

    /// Blocks for the components of a degree-zero map `K -> Y`.
    fn maps(k: &ChainComplex, y: &ChainComplex) -> Self {
        Self::collect(&k.ring, degree_window(k, y), |i| (y.rank(i), k.rank(i)))
    }

    /// Blocks for homotopies: `h_i` maps degree i of `K` into degree i+1 of `Y`.
    fn homotopies(k: &ChainComplex, y: &ChainComplex) -> Self {
        Self::collect(&k.ring, degree_window(k, y), |i| (y.rank(i + 1), k.rank(i)))
    }

    fn block_at(&self, degree: i64) -> Option<(usize, usize, usize)> {
        let k = self.degrees.iter().position(|&d| d == degree)?;
        let (r, c) = self.shapes[k];
        Some((self.offsets[k], r, c))
    }

    fn pack(&self, f: &ChainMap) -> Vec<RingElement> {
        let mut out = vec![self.ring.zero(); self.total];
        for (k, &deg) in self.degrees.iter().enumerate() {
            let m = f.component(deg);
            let (rows, cols) = self.shapes[k];
            assert_eq!((m.rows, m.cols), (rows, cols), "component shape disagrees with layout");
            for j in 0..cols {
                for i in 0..rows {
                    out[self.offsets[k] + j * rows + i] = m.get(i, j).clone();
                }
            }
        }
        out
    }

    fn unpack(&self, flat: &[RingElement]) -> BTreeMap<i64, Matrix> {
        assert_eq!(flat.len(), self.total);
        let mut out = BTreeMap::new();
        for (k, &deg) in self.degrees.iter().enumerate() {
            let (rows, cols) = self.shapes[k];
            let off = self.offsets[k];
            let m = Matrix::from_fn(&self.ring, rows, cols, |i, j| {
                flat[off + j * rows + i].clone()
            });
            out.insert(deg, m);
        }
        out
    }
}

fn paste(dst: &mut Matrix, r0: usize, c0: usize, src: &Matrix) {
    for i in 0..src.rows {
        for j in 0..src.cols {
            dst.set(r0 + i, c0 + j, src.get(i, j).clone());
        }
    }
}

/// The linear system expressing `f_{j-1} d_j = d_j f_j` over all degrees:
/// its kernel is exactly the space of degree-zero chain maps `K -> Y`.
fn commutation_matrix(k: &ChainComplex, y: &ChainComplex, layout: &MapLayout) -> Matrix {
    let ring = &k.ring;
    let mut eqs: Vec<(i64, usize)> = Vec::new();
    for j in degree_window(k, y) {
        let rows = y.rank(j - 1) * k.rank(j);
        if rows == 0 {
            continue;
        }
        if layout.block_at(j - 1).is_some() || layout.block_at(j).is_some() {
            eqs.push((j, rows));
        }
    }
    let total_rows: usize = eqs.iter().map(|&(_, r)| r).sum();
    let mut c = Matrix::zero(ring, total_rows, layout.total);
    let mut r0 = 0;
    for (j, rows) in eqs {
        if let Some((off, _, _)) = layout.block_at(j - 1) {
            let block = k
                .d(j)
                .transpose()
                .kronecker(&Matrix::identity(ring, y.rank(j - 1)));
            paste(&mut c, r0, off, &block);
        }
        if let Some((off, _, _)) = layout.block_at(j) {
            let block = Matrix::identity(ring, k.rank(j)).kronecker(&y.d(j)).neg();
            paste(&mut c, r0, off, &block);
        }
        r0 += rows;
    }
    c
}

/// The linear map sending packed homotopy components to the packed
/// components of `d h + h d`; its column span is the null-homotopic maps.
fn homotopy_matrix(
    k: &ChainComplex,
    y: &ChainComplex,
    f_layout: &MapLayout,
    h_layout: &MapLayout,
) -> Matrix {
    let ring = &k.ring;
    let mut h = Matrix::zero(ring, f_layout.total, h_layout.total);
    for (idx, &i) in f_layout.degrees.iter().enumerate() {
        let r0 = f_layout.offsets[idx];
        if let Some((c0, _, _)) = h_layout.block_at(i) {
            let block = Matrix::identity(ring, k.rank(i)).kronecker(&y.d(i + 1));
            paste(&mut h, r0, c0, &block);
        }
        if let Some((c0, _, _)) = h_layout.block_at(i - 1) {
            let block = k.d(i).transpose().kronecker(&Matrix::identity(ring, y.rank(i)));
            paste(&mut h, r0, c0, &block);
        }
    }
    h
}

/// The hom-set `[K, X]_degree` as a finitely presented module, together
/// with the correspondence between classes and representative chain maps
/// `K -> shift(X, degree)`.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub degree: i64,
    shifted_target: ChainComplex,
    layout: MapLayout,
    sq: Subquotient,
}

pub fn derived_hom(k: &ChainComplex, x: &ChainComplex, degree: i64) -> HomGroup {
    assert_eq!(k.ring, x.ring, "hom endpoints live over different rings");
    let y = x.shift(degree);
    let f_layout = MapLayout::maps(k, &y);
    let h_layout = MapLayout::homotopies(k, &y);
    let constraints = commutation_matrix(k, &y, &f_layout);
    let chain_maps = LinearSolver::new(&constraints).kernel();
    let boundaries = homotopy_matrix(k, &y, &f_layout, &h_layout);
    let sq = subquotient(&chain_maps, &boundaries)
        .expect("null-homotopic maps are chain maps");
    HomGroup {
        source: k.clone(),
        target: x.clone(),
        degree,
        shifted_target: y,
        layout: f_layout,
        sq,
    }
}

impl HomGroup {
    pub fn module(&self) -> &FPModule {
        &self.sq.module
    }

    pub fn shifted_target(&self) -> &ChainComplex {
        &self.shifted_target
    }

    /// The representative chain map of generator `g`.
    pub fn representative(&self, g: usize) -> ChainMap {
        let mut coords = vec![self.source.ring.zero(); self.sq.module.gens];
        coords[g] = self.source.ring.one();
        self.map_for_coords(&coords)
    }

    /// A representative chain map of the class with the given coordinates.
    pub fn map_for_coords(&self, coords: &[RingElement]) -> ChainMap {
        let flat = self.sq.element_in_ambient(coords);
        let components = self.layout.unpack(&flat);
        ChainMap::new_checked(self.source.clone(), self.shifted_target.clone(), 0, components)
            .expect("solutions of the commutation system are chain maps")
    }

    /// Class coordinates of a degree-zero chain map `K -> shift(X, degree)`.
    pub fn class_of(&self, f: &ChainMap) -> Vec<RingElement> {
        assert_eq!(f.degree_shift, 0, "classes are taken of degree-zero maps");
        assert_eq!(f.source, self.source, "map leaves the wrong complex");
        assert_eq!(f.target, self.shifted_target, "map lands in the wrong complex");
        self.sq
            .express(&self.layout.pack(f))
            .expect("every chain map lies in the commutation kernel")
    }

    pub fn is_zero_class(&self, coords: &[RingElement]) -> bool {
        self.sq.module.el_is_zero(coords)
    }
}

/// Whether `f = d h + h d` has a solution `h`.
pub fn is_nullhomotopic(f: &ChainMap) -> bool {
    assert_eq!(f.degree_shift, 0, "null-homotopy testing expects a degree-zero map");
    let (k, y) = (&f.source, &f.target);
    let f_layout = MapLayout::maps(k, y);
    let h_layout = MapLayout::homotopies(k, y);
    let h = homotopy_matrix(k, y, &f_layout, &h_layout);
    let packed = f_layout.pack(f);
    LinearSolver::new(&h).solve(&packed).is_some()
}

/// A ghost: invisible to homology in every degree, yet not null-homotopic.
pub fn is_ghost(f: &ChainMap) -> bool {
    assert_eq!(f.degree_shift, 0, "ghost testing expects a degree-zero map");
    let lo = f.source.min_degree.min(f.target.min_degree);
    let hi = f.source.max_degree().max(f.target.max_degree());
    let invisible = (lo..=hi).all(|i| induced_homology_map(f, i).is_zero_map());
    invisible && !is_nullhomotopic(f)
}

/// The subgroup of `[K, X]_0` killed by homology in every degree, presented
/// as a module on the kernel generators of the total homology-action map.
#[derive(Clone, Debug)]
pub struct GhostGroup {
    pub hom: HomGroup,
    pub module: FPModule,
    reps: Vec<Vec<RingElement>>,
}

pub fn ghost_group(k: &ChainComplex, x: &ChainComplex) -> GhostGroup {
    let hom = derived_hom(k, x, 0);
    let ring = k.ring.clone();
    let lo = k.min_degree.min(x.min_degree);
    let hi = k.max_degree().max(x.max_degree());

    // The homology action lands in the direct sum of Hom(H_i K, H_i X) over
    // degrees where both sides have generators to speak of.
    let mut hom_modules = Vec::new();
    let mut kept_degrees = Vec::new();
    for i in lo..=hi {
        let hk = homology(k, i);
        let hx = homology(x, i);
        if hk.module.gens == 0 || hx.module.gens == 0 {
            continue;
        }
        hom_modules.push(hom_module(&hk.module, &hx.module));
        kept_degrees.push(i);
    }
    let target = hom_modules
        .iter()
        .fold(FPModule::zero_module(&ring), |acc, hm| acc.direct_sum(hm.module()));

    let gens = hom.module().gens;
    let mut cols: Vec<Vec<RingElement>> = Vec::with_capacity(gens);
    for g in 0..gens {
        let rep = hom.representative(g);
        let mut stacked = Vec::with_capacity(target.gens);
        for (hm, &i) in hom_modules.iter().zip(&kept_degrees) {
            let induced = induced_homology_map(&rep, i);
            stacked.extend(hm.class_of(&induced));
        }
        cols.push(stacked);
    }
    let matrix = Matrix::from_cols(&ring, target.gens, &cols);
    let theta = ModuleMap::new_checked(hom.module().clone(), target, matrix)
        .expect("homotopic maps act equally on homology");

    let reps = theta.kernel_gens();
    let span = Matrix::from_cols(&ring, gens, &reps);
    let incl = ModuleMap::new_checked(FPModule::free(&ring, reps.len()), hom.module().clone(), span)
        .expect("maps out of a free module are unconstrained");
    let relations = Matrix::from_cols(&ring, reps.len(), &incl.kernel_gens());
    let module = FPModule::new(&ring, reps.len(), relations);
    GhostGroup { hom, module, reps }
}

impl GhostGroup {
    pub fn is_trivial(&self) -> bool {
        self.module.is_zero()
    }

    /// Class coordinates (in the ambient hom-set) of ghost generator `j`.
    pub fn generator_class(&self, j: usize) -> &[RingElement] {
        &self.reps[j]
    }

    /// A concrete ghost chain map, when one exists.
    pub fn first_ghost(&self) -> Option<ChainMap> {
        self.reps
            .iter()
            .find(|r| !self.hom.module().el_is_zero(r))
            .map(|r| self.hom.map_for_coords(r))
    }
}

/// The map `[K, X]_n -> [K, X']_n` induced by post-composition with a
/// degree-zero map `g: X -> X'`. `from` and `to` must share source and
/// degree, and `g` must join their targets.
pub fn hom_postcompose(from: &HomGroup, to: &HomGroup, g: &ChainMap) -> ModuleMap {
    assert_eq!(from.source, to.source, "post-composition fixes the source");
    assert_eq!(from.degree, to.degree, "post-composition fixes the degree");
    assert_eq!(g.degree_shift, 0);
    assert_eq!(g.source, from.target, "composition endpoints do not meet");
    assert_eq!(g.target, to.target, "composition endpoints do not meet");
    let shifted = g.shift(from.degree);
    let cols: Vec<Vec<RingElement>> = (0..from.module().gens)
        .map(|j| to.class_of(&shifted.compose(&from.representative(j))))
        .collect();
    let matrix = Matrix::from_cols(&from.source.ring, to.module().gens, &cols);
    ModuleMap::new_checked(from.module().clone(), to.module().clone(), matrix)
        .expect("composition descends to homotopy classes")
}

/// The map `[K', X]_n -> [K, X]_n` induced by pre-composition with a
/// degree-zero map `g: K -> K'`. Contravariant: `from` is the hom-set at
/// `K'`, `to` is the hom-set at `K`.
pub fn hom_precompose(from: &HomGroup, to: &HomGroup, g: &ChainMap) -> ModuleMap {
    assert_eq!(from.target, to.target, "pre-composition fixes the target");
    assert_eq!(from.degree, to.degree, "pre-composition fixes the degree");
    assert_eq!(g.degree_shift, 0);
    assert_eq!(g.target, from.source, "composition endpoints do not meet");
    assert_eq!(g.source, to.source, "composition endpoints do not meet");
    let cols: Vec<Vec<RingElement>> = (0..from.module().gens)
        .map(|j| to.class_of(&from.representative(j).compose(g)))
        .collect();
    let matrix = Matrix::from_cols(&from.source.ring, to.module().gens, &cols);
    ModuleMap::new_checked(from.module().clone(), to.module().clone(), matrix)
        .expect("composition descends to homotopy classes")
}
