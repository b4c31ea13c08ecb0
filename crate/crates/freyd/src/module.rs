//! Finitely presented modules: presentations, elements, maps, subquotients,
//! tensor and hom modules, canonical invariants, and flatness.
//!
//! A module is `R^m` modulo the column span of a relations matrix. Elements
//! are coordinate vectors of length `m`; equality of elements, and every
//! other question here, reduces to linear systems over the ring.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};
use thiserror::Error;

use crate::linalg::{snf, LinearSolver};
use crate::matrix::{block_diag, hstack, Matrix};
use crate::ring::{RingElement, RingSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModuleError {
    #[error("column {col} does not lie in the spanning set")]
    NotInSpan { col: usize },
    #[error("map does not respect relations at source column {col}")]
    NotWellDefined { col: usize },
    #[error("modules live over different rings")]
    RingMismatch,
}

/// `R^gens` modulo the column span of `relations` (a `gens`-row matrix).
#[derive(Clone, Debug)]
pub struct FPModule {
    pub ring: RingSpec,
    pub gens: usize,
    pub relations: Matrix,
    solver: OnceLock<LinearSolver>,
}

impl PartialEq for FPModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens && self.relations == other.relations
    }
}
impl Eq for FPModule {}

impl FPModule {
    pub fn new(ring: &RingSpec, gens: usize, relations: Matrix) -> Self {
        assert_eq!(relations.rows, gens, "relations must have one row per generator");
        assert_eq!(&relations.ring, ring);
        FPModule { ring: ring.clone(), gens, relations, solver: OnceLock::new() }
    }

    pub fn free(ring: &RingSpec, rank: usize) -> Self {
        FPModule::new(ring, rank, Matrix::zero(ring, rank, 0))
    }

    pub fn zero_module(ring: &RingSpec) -> Self {
        FPModule::free(ring, 0)
    }

    /// `R/(c)` for an integer constant `c`.
    pub fn cyclic(ring: &RingSpec, c: i64) -> Self {
        FPModule::new(ring, 1, Matrix::from_int_rows(ring, &[vec![c]]))
    }

    fn solver(&self) -> &LinearSolver {
        self.solver.get_or_init(|| LinearSolver::new(&self.relations))
    }

    pub fn zero_el(&self) -> Vec<RingElement> {
        vec![self.ring.zero(); self.gens]
    }

    pub fn el_is_zero(&self, a: &[RingElement]) -> bool {
        assert_eq!(a.len(), self.gens);
        self.solver().solve(a).is_some()
    }

    pub fn el_eq(&self, a: &[RingElement], b: &[RingElement]) -> bool {
        assert_eq!(a.len(), self.gens);
        assert_eq!(b.len(), self.gens);
        let diff: Vec<RingElement> =
            a.iter().zip(b).map(|(x, y)| self.ring.sub(x, y)).collect();
        self.el_is_zero(&diff)
    }

    pub fn add_el(&self, a: &[RingElement], b: &[RingElement]) -> Vec<RingElement> {
        a.iter().zip(b).map(|(x, y)| self.ring.add(x, y)).collect()
    }

    pub fn scale_el(&self, c: &RingElement, a: &[RingElement]) -> Vec<RingElement> {
        a.iter().map(|x| self.ring.mul(c, x)).collect()
    }

    pub fn direct_sum(&self, other: &FPModule) -> FPModule {
        assert_eq!(self.ring, other.ring);
        FPModule::new(
            &self.ring,
            self.gens + other.gens,
            block_diag(&self.ring, &[self.relations.clone(), other.relations.clone()]),
        )
    }

    pub fn invariants(&self) -> ModuleInvariants {
        match &self.ring {
            RingSpec::Integers => {
                let dec = snf(&self.relations);
                let diag = dec.diagonal();
                let rank = diag.iter().filter(|d| !d.is_zero()).count();
                let torsion: Vec<BigInt> =
                    diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
                ModuleInvariants::FreeAndTorsion { free_rank: self.gens - rank, torsion }
            }
            RingSpec::IntegersMod(n) => {
                // As an abelian group the module is Z^m modulo the lifted
                // relations together with n times each generator; its
                // invariant factors all divide n, which also pins down the
                // module structure over Z/n.
                let z = RingSpec::integers();
                let lifted = self.relations.lift_integers();
                let extra = Matrix::identity(&z, self.gens).scale(&RingElement::Int(BigInt::from(*n)));
                let combined = hstack(&z, self.gens, &[lifted, extra]);
                let diag = snf(&combined).diagonal();
                let factors: Vec<BigInt> =
                    diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
                ModuleInvariants::CyclicFactors { factors }
            }
            RingSpec::PrimeField(_) => {
                let rank = self.relations.cols - LinearSolver::new(&self.relations).kernel().cols;
                ModuleInvariants::ComponentDims { dims: vec![self.gens - rank] }
            }
            RingSpec::PrimeProduct(ps) => {
                let dims = (0..ps.len())
                    .map(|k| {
                        let comp = self.relations.component(k);
                        let rank = comp.cols - LinearSolver::new(&comp).kernel().cols;
                        self.gens - rank
                    })
                    .collect();
                ModuleInvariants::ComponentDims { dims }
            }
        }
    }

    pub fn is_isomorphic(&self, other: &FPModule) -> bool {
        assert_eq!(self.ring, other.ring, "isomorphism only compares modules over one ring");
        self.invariants() == other.invariants()
    }

    pub fn is_zero(&self) -> bool {
        self.invariants().is_trivial()
    }

    pub fn cardinality(&self) -> Option<BigInt> {
        match self.invariants() {
            ModuleInvariants::FreeAndTorsion { free_rank, torsion } => {
                if free_rank > 0 {
                    None
                } else {
                    Some(torsion.iter().product())
                }
            }
            ModuleInvariants::CyclicFactors { factors } => Some(factors.iter().product()),
            ModuleInvariants::ComponentDims { dims } => {
                let RingSpec::PrimeProduct(ps) = &self.ring else {
                    let (RingSpec::PrimeField(p) | RingSpec::IntegersMod(p)) = self.ring else {
                        unreachable!()
                    };
                    return Some(BigInt::from(p).pow(dims[0] as u32));
                };
                Some(
                    ps.iter()
                        .zip(&dims)
                        .map(|(&p, &k)| BigInt::from(p).pow(k as u32))
                        .product(),
                )
            }
        }
    }

    /// Flatness of a finitely generated module, decided by structure theory:
    /// always flat over a field or a product of fields; flat over the
    /// integers exactly when torsion-free; flat over `Z/n` exactly when every
    /// cyclic factor has p-part either trivial or as large as that of n.
    pub fn is_flat(&self) -> bool {
        match (&self.ring, self.invariants()) {
            (RingSpec::PrimeField(_) | RingSpec::PrimeProduct(_), _) => true,
            (RingSpec::Integers, ModuleInvariants::FreeAndTorsion { torsion, .. }) => {
                torsion.is_empty()
            }
            (RingSpec::IntegersMod(n), ModuleInvariants::CyclicFactors { factors }) => {
                let primes = factorize(*n);
                factors.iter().all(|f| {
                    let f = f.to_u64().expect("cyclic factor divides the modulus");
                    primes.iter().all(|&(p, k)| {
                        let v = valuation(f, p);
                        v == 0 || v == k
                    })
                })
            }
            _ => unreachable!("invariant shape matches ring kind"),
        }
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn valuation(mut f: u64, p: u64) -> u32 {
    let mut v = 0;
    while f % p == 0 && f > 0 {
        f /= p;
        v += 1;
    }
    v
}

/// Canonical isomorphism invariants. Two modules over the same ring are
/// isomorphic exactly when these agree: the integer case is the structure
/// theorem, `Z/n` reduces to abelian group invariant factors, and over a
/// field or product the per-component dimensions decide.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ModuleInvariants {
    FreeAndTorsion { free_rank: usize, torsion: Vec<BigInt> },
    CyclicFactors { factors: Vec<BigInt> },
    ComponentDims { dims: Vec<usize> },
}

impl ModuleInvariants {
    pub fn is_trivial(&self) -> bool {
        match self {
            ModuleInvariants::FreeAndTorsion { free_rank, torsion } => {
                *free_rank == 0 && torsion.is_empty()
            }
            ModuleInvariants::CyclicFactors { factors } => factors.is_empty(),
            ModuleInvariants::ComponentDims { dims } => dims.iter().all(|&d| d == 0),
        }
    }
}

/// Serialized form: `{"free_rank": r, "torsion": [...]}` over the integers,
/// `{"factors": [...]}` otherwise (cyclic factor moduli over `Z/n`,
/// per-component dimensions over fields and products). Big values fall back
/// to decimal strings.
impl Serialize for ModuleInvariants {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Big<'a>(&'a BigInt);
        impl Serialize for Big<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                match self.0.to_i64() {
                    Some(v) => s.serialize_i64(v),
                    None => s.serialize_str(&self.0.to_string()),
                }
            }
        }
        match self {
            ModuleInvariants::FreeAndTorsion { free_rank, torsion } => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("free_rank", free_rank)?;
                m.serialize_entry("torsion", &torsion.iter().map(Big).collect::<Vec<_>>())?;
                m.end()
            }
            ModuleInvariants::CyclicFactors { factors } => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("factors", &factors.iter().map(Big).collect::<Vec<_>>())?;
                m.end()
            }
            ModuleInvariants::ComponentDims { dims } => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("factors", dims)?;
                m.end()
            }
        }
    }
}

impl fmt::Display for ModuleInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        match self {
            ModuleInvariants::FreeAndTorsion { free_rank, torsion } => {
                let mut parts: Vec<String> = Vec::new();
                if *free_rank == 1 {
                    parts.push("Z".into());
                } else if *free_rank > 1 {
                    parts.push(format!("Z^{free_rank}"));
                }
                parts.extend(torsion.iter().map(|d| format!("Z/{d}")));
                write!(f, "{}", parts.join(" + "))
            }
            ModuleInvariants::CyclicFactors { factors } => {
                let parts: Vec<String> = factors.iter().map(|d| format!("C{d}")).collect();
                write!(f, "{}", parts.join(" + "))
            }
            ModuleInvariants::ComponentDims { dims } => {
                let parts: Vec<String> = dims.iter().map(|d| format!("dim {d}")).collect();
                write!(f, "{}", parts.join(" | "))
            }
        }
    }
}

/// A map of finitely presented modules, given on generators by `matrix`
/// (target generators by source generators).
#[derive(Clone, PartialEq, Debug)]
pub struct ModuleMap {
    pub source: FPModule,
    pub target: FPModule,
    pub matrix: Matrix,
}

impl ModuleMap {
    /// Checks that the matrix carries source relations into target
    /// relations, so the map is defined on the quotients.
    pub fn new_checked(
        source: FPModule,
        target: FPModule,
        matrix: Matrix,
    ) -> Result<Self, ModuleError> {
        if source.ring != target.ring {
            return Err(ModuleError::RingMismatch);
        }
        assert_eq!(matrix.rows, target.gens, "map matrix height is target generators");
        assert_eq!(matrix.cols, source.gens, "map matrix width is source generators");
        let pushed = matrix.mul(&source.relations);
        for col in 0..pushed.cols {
            if !target.el_is_zero(&pushed.col(col)) {
                return Err(ModuleError::NotWellDefined { col });
            }
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn zero(source: FPModule, target: FPModule) -> Self {
        let matrix = Matrix::zero(&source.ring, target.gens, source.gens);
        ModuleMap { source, target, matrix }
    }

    pub fn identity(module: FPModule) -> Self {
        let matrix = Matrix::identity(&module.ring, module.gens);
        ModuleMap { source: module.clone(), target: module, matrix }
    }

    pub fn apply(&self, el: &[RingElement]) -> Vec<RingElement> {
        self.matrix.mul_vec(el)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        assert_eq!(self.source, other.target, "composition endpoints do not meet");
        ModuleMap {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn is_zero_map(&self) -> bool {
        (0..self.matrix.cols).all(|j| self.target.el_is_zero(&self.matrix.col(j)))
    }

    /// Source elements generating the kernel: the projections of the kernel
    /// of `[F | -target relations]`, where `F` is the map matrix.
    pub fn kernel_gens(&self) -> Vec<Vec<RingElement>> {
        let ring = &self.source.ring;
        let combined = hstack(
            ring,
            self.target.gens,
            &[self.matrix.clone(), self.target.relations.neg()],
        );
        let ker = LinearSolver::new(&combined).kernel();
        (0..ker.cols)
            .map(|j| (0..self.source.gens).map(|i| ker.get(i, j).clone()).collect())
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_gens().iter().all(|g| self.source.el_is_zero(g))
    }

    pub fn is_surjective(&self) -> bool {
        let ring = &self.source.ring;
        let reach = hstack(
            ring,
            self.target.gens,
            &[self.matrix.clone(), self.target.relations.clone()],
        );
        let solver = LinearSolver::new(&reach);
        (0..self.target.gens).all(|j| {
            let mut e = vec![ring.zero(); self.target.gens];
            e[j] = ring.one();
            solver.solve(&e).is_some()
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Whether `el` (coordinates in the target) lies in the image submodule.
    pub fn image_contains(&self, el: &[RingElement]) -> bool {
        let ring = &self.source.ring;
        let reach = hstack(
            ring,
            self.target.gens,
            &[self.matrix.clone(), self.target.relations.clone()],
        );
        LinearSolver::new(&reach).solve(el).is_some()
    }

    /// The image submodule, presented on the images of the source generators
    /// with their syzygies in the target as relations.
    pub fn image_module(&self) -> FPModule {
        let ring = &self.source.ring;
        let free = FPModule::free(ring, self.source.gens);
        let incl = ModuleMap { source: free, target: self.target.clone(), matrix: self.matrix.clone() };
        let rels = incl.kernel_gens();
        FPModule::new(ring, self.source.gens, Matrix::from_cols(ring, self.source.gens, &rels))
    }
}

/// Exactness at the middle of `L -f-> M -g-> N`: the composite vanishes and
/// every kernel generator of `g` is in the image of `f`.
pub fn maps_exact_at(f: &ModuleMap, g: &ModuleMap) -> bool {
    assert_eq!(f.target, g.source, "maps do not share the middle module");
    if !g.compose(f).is_zero_map() {
        return false;
    }
    let ring = &f.source.ring;
    let image = hstack(
        ring,
        f.target.gens,
        &[f.matrix.clone(), f.target.relations.clone()],
    );
    let solver = LinearSolver::new(&image);
    g.kernel_gens().iter().all(|k| solver.solve(k).is_some())
}

/// A subquotient span(Z)/span(B) of a free module, presented on the columns
/// of `Z`, remembering how its generators sit in the ambient free module.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub module: FPModule,
    z: Matrix,
    z_solver: LinearSolver,
}

pub fn subquotient(z: &Matrix, b: &Matrix) -> Result<Subquotient, ModuleError> {
    assert_eq!(z.ring, b.ring);
    assert_eq!(z.rows, b.rows, "spanning sets live in different ambient ranks");
    let z_solver = LinearSolver::new(z);
    let mut expressed_cols = Vec::with_capacity(b.cols);
    for col in 0..b.cols {
        match z_solver.solve(&b.col(col)) {
            Some(x) => expressed_cols.push(x),
            None => return Err(ModuleError::NotInSpan { col }),
        }
    }
    let expressed = Matrix::from_cols(&z.ring, z.cols, &expressed_cols);
    let syzygies = z_solver.kernel();
    let relations = hstack(&z.ring, z.cols, &[expressed, syzygies]);
    Ok(Subquotient {
        module: FPModule::new(&z.ring, z.cols, relations),
        z: z.clone(),
        z_solver,
    })
}

impl Subquotient {
    pub fn ambient_dim(&self) -> usize {
        self.z.rows
    }

    /// The ambient vector representing generator `k`.
    pub fn generator_in_ambient(&self, k: usize) -> Vec<RingElement> {
        self.z.col(k)
    }

    /// The ambient vector representing an arbitrary element.
    pub fn element_in_ambient(&self, coords: &[RingElement]) -> Vec<RingElement> {
        self.z.mul_vec(coords)
    }

    /// Coordinates of an ambient vector's class, or `None` if it is outside
    /// the spanned submodule.
    pub fn express(&self, ambient: &[RingElement]) -> Option<Vec<RingElement>> {
        self.z_solver.solve(ambient)
    }

    pub fn express_matrix(&self, ambient_cols: &Matrix) -> Option<Matrix> {
        self.z_solver.solve_matrix(ambient_cols)
    }
}

/// Tensor product presentation: generators are pairs (one from each factor)
/// indexed by `i * N.gens + j`, relations are `A (x) I` and `I (x) B`.
pub fn tensor_product(m: &FPModule, n: &FPModule) -> FPModule {
    assert_eq!(m.ring, n.ring, "tensor factors live over different rings");
    let ring = &m.ring;
    let a_part = m.relations.kronecker(&Matrix::identity(ring, n.gens));
    let b_part = Matrix::identity(ring, m.gens).kronecker(&n.relations);
    let relations = hstack(ring, m.gens * n.gens, &[a_part, b_part]);
    FPModule::new(ring, m.gens * n.gens, relations)
}

/// The bilinear pairing into `tensor_product(m, n)`: coordinates of the
/// elementary tensor of two elements.
pub fn tensor_pair(
    m: &FPModule,
    n: &FPModule,
    a: &[RingElement],
    b: &[RingElement],
) -> Vec<RingElement> {
    assert_eq!(a.len(), m.gens);
    assert_eq!(b.len(), n.gens);
    let ring = &m.ring;
    let mut out = Vec::with_capacity(m.gens * n.gens);
    for x in a {
        for y in b {
            out.push(ring.mul(x, y));
        }
    }
    out
}

/// The module of maps `M -> N`, with extraction of representatives.
///
/// Internally: a matrix `F` (target gens by source gens) gives a map iff
/// each column of `F * A` lies in the span of `B`; it gives the zero map iff
/// each column of `F` does. Vectorizing column-major turns the first
/// condition into membership in the kernel of `[A^T (x) I | -I (x) B]` and
/// the second into the span of `I (x) B`, and the hom module is the
/// subquotient of those two.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub source: FPModule,
    pub target: FPModule,
    sq: Subquotient,
}

pub fn hom_module(source: &FPModule, target: &FPModule) -> HomModule {
    assert_eq!(source.ring, target.ring, "hom endpoints live over different rings");
    let ring = &source.ring;
    let (m, a) = (source.gens, source.relations.cols);
    let n = target.gens;
    let push = source.relations.transpose().kronecker(&Matrix::identity(ring, n));
    let landing = Matrix::identity(ring, a).kronecker(&target.relations).neg();
    let constraint = hstack(ring, a * n, &[push, landing]);
    let full_kernel = LinearSolver::new(&constraint).kernel();
    // Keep only the F-part of each kernel generator.
    let z_cols: Vec<Vec<RingElement>> = (0..full_kernel.cols)
        .map(|j| (0..m * n).map(|i| full_kernel.get(i, j).clone()).collect())
        .collect();
    let z = Matrix::from_cols(ring, m * n, &z_cols);
    let trivial = Matrix::identity(ring, m).kronecker(&target.relations);
    let sq = subquotient(&z, &trivial)
        .expect("trivial maps are maps, so they lie in the solution span");
    HomModule { source: source.clone(), target: target.clone(), sq }
}

impl HomModule {
    pub fn module(&self) -> &FPModule {
        &self.sq.module
    }

    fn unvec(&self, flat: &[RingElement]) -> Matrix {
        let (m, n) = (self.source.gens, self.target.gens);
        Matrix::from_fn(&self.source.ring, n, m, |i, j| flat[j * n + i].clone())
    }

    fn vec(&self, map: &Matrix) -> Vec<RingElement> {
        let (m, n) = (self.source.gens, self.target.gens);
        let mut out = Vec::with_capacity(m * n);
        for j in 0..m {
            for i in 0..n {
                out.push(map.get(i, j).clone());
            }
        }
        out
    }

    /// The map represented by generator `k` of the hom module.
    pub fn generator_map(&self, k: usize) -> ModuleMap {
        self.map_for_coords(&{
            let mut e = vec![self.source.ring.zero(); self.sq.module.gens];
            e[k] = self.source.ring.one();
            e
        })
    }

    /// The map represented by an arbitrary element of the hom module.
    pub fn map_for_coords(&self, coords: &[RingElement]) -> ModuleMap {
        let flat = self.sq.element_in_ambient(coords);
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.unvec(&flat),
        }
    }

    /// The hom-module coordinates of a concrete map.
    pub fn class_of(&self, map: &ModuleMap) -> Vec<RingElement> {
        assert_eq!(map.source, self.source);
        assert_eq!(map.target, self.target);
        self.sq
            .express(&self.vec(&map.matrix))
            .expect("a well-defined map satisfies the hom constraints")
    }
}
